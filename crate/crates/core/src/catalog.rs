//! Named small graphs: paths, cycles, cliques, spiders `S_{i,j,k}` and the
//! forbidden subgraphs used by the class tests.
//!
//! Names are case-sensitive. Besides the fixed names in [`NAMES`] the
//! lookup understands `P<k>`, `C<k>`, `K<k>`, `S<i>_<j>_<k>`, the long forms
//! `path_<k>`, `cycle_<k>`, `complete_<k>`, and disjoint unions written as
//! `A+B` with optional multiplicity prefixes (`2P3`, `K3+P2`).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Where a catalog entry's edge list comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Stated directly by a textual definition.
    TextDefined,
    /// Reconstructed from induced instances in proofs; validated by
    /// containment tests.
    DerivedFromProof,
}

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    pub source: Source,
}

/// Fixed (non-parametric) catalog keys.
pub const NAMES: &[&str] = &[
    "claw",
    "paw",
    "diamond",
    "chair",
    "bull",
    "net",
    "gem",
    "co_gem",
    "co_chair",
    "P",
    "co_P",
    "butterfly",
    "extended_gem",
    "H1",
    "H2",
    "H3",
    "H4",
    "K1_4",
    "dart",
];

fn edges(n: usize, e: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, e).expect("catalog edge lists are valid")
}

pub fn path(k: usize) -> Graph {
    let e: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges(k, &e)
}

/// Cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycles need at least three vertices");
    let mut e: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    e.push((k - 1, 0));
    edges(k, &e)
}

pub fn complete(k: usize) -> Graph {
    Graph::empty(k).complement()
}

/// `S_{i,j,k}`: a center (vertex 0) with three induced paths of `i`, `j`
/// and `k` further vertices.
pub fn spider(i: usize, j: usize, k: usize) -> Graph {
    let mut e = Vec::new();
    let mut next = 1;
    for len in [i, j, k] {
        let mut prev = 0;
        for _ in 0..len {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    edges(next, &e)
}

/// The 8-vertex extended gem: triangle `a b c` (0, 1, 2), `p` (3) on `a b`,
/// `q` (4) on `b c`, path `a - r - s` (5, 6) and pendant `t` (7) on `c`.
pub fn extended_gem() -> Graph {
    edges(
        8,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 0),
            (3, 1),
            (4, 1),
            (4, 2),
            (5, 0),
            (6, 5),
            (7, 2),
        ],
    )
}

fn fixed(name: &str) -> Option<(Graph, Source)> {
    use Source::*;
    let g = match name {
        "claw" | "K1_3" => spider(1, 1, 1),
        "chair" => spider(1, 1, 2),
        "paw" => edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]),
        "diamond" => edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        "bull" => edges(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
        "net" => edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
        "gem" => edges(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
        "co_gem" => fixed("gem")?.0.complement(),
        "co_chair" => spider(1, 1, 2).complement(),
        "P" | "p_graph" => edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0)]),
        "co_P" | "co_p" => fixed("P")?.0.complement(),
        "butterfly" => edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
        "dart" => edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4)]),
        "K1_4" => edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
        "extended_gem" => return Some((extended_gem(), DerivedFromProof)),
        // claw plus a pendant on the degree-3 vertex
        "H1" => return Some((edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]), DerivedFromProof)),
        // paw plus a pendant on the degree-3 vertex
        "H2" => return Some((edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]), DerivedFromProof)),
        // diamond plus a vertex seeing both degree-3 vertices
        "H3" => {
            return Some((
                edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (4, 1), (4, 2)]),
                DerivedFromProof,
            ))
        }
        // K4 plus a vertex seeing exactly three of its vertices
        "H4" => {
            let mut e: Vec<_> = complete(4).edges().collect();
            e.extend([(4, 0), (4, 1), (4, 2)]);
            return Some((edges(5, &e), DerivedFromProof));
        }
        _ => return None,
    };
    Some((g, TextDefined))
}

fn parametric(name: &str) -> Option<Graph> {
    let num = |s: &str| s.parse::<usize>().ok();
    if let Some(rest) = name.strip_prefix("path_") {
        return num(rest).filter(|&k| k >= 1).map(path);
    }
    if let Some(rest) = name.strip_prefix("cycle_") {
        return num(rest).filter(|&k| k >= 3).map(cycle);
    }
    if let Some(rest) = name.strip_prefix("complete_") {
        return num(rest).filter(|&k| k >= 1).map(complete);
    }
    if let Some(rest) = name.strip_prefix('S') {
        let parts: Vec<_> = rest.split('_').map(num).collect::<Option<_>>()?;
        if let [i, j, k] = parts[..] {
            return Some(spider(i, j, k));
        }
        return None;
    }
    let (kind, rest) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
    let k = num(rest)?;
    match kind {
        "P" if k >= 1 => Some(path(k)),
        "C" if k >= 3 => Some(cycle(k)),
        "K" if k >= 1 => Some(complete(k)),
        _ => None,
    }
}

fn single(term: &str) -> Option<(Graph, Source)> {
    fixed(term).or_else(|| parametric(term).map(|g| (g, Source::TextDefined)))
}

fn term(term: &str) -> Option<(Graph, Source)> {
    if let Some(found) = single(term) {
        return Some(found);
    }
    let digits = term.chars().take_while(char::is_ascii_digit).count();
    if digits == 0 {
        return None;
    }
    let count: usize = term[..digits].parse().ok()?;
    let (base, source) = single(&term[digits..])?;
    let g = (1..count).fold(base.clone(), |acc, _| acc.disjoint_union(&base));
    Some((g, source))
}

/// Looks up a catalog graph by name.
pub fn lookup(name: &str) -> Result<NamedGraph> {
    let mut graph: Option<Graph> = None;
    let mut source = Source::TextDefined;
    for part in name.split('+') {
        let (g, s) = term(part.trim()).ok_or_else(|| Error::UnknownGraph(name.to_string()))?;
        if s == Source::DerivedFromProof {
            source = s;
        }
        graph = Some(match graph {
            None => g,
            Some(acc) => acc.disjoint_union(&g),
        });
    }
    Ok(NamedGraph {
        name: name.to_string(),
        graph: graph.ok_or_else(|| Error::UnknownGraph(name.to_string()))?,
        source,
    })
}

/// Graph for `name`; see the module docs for the accepted names.
pub fn named(name: &str) -> Result<Graph> {
    lookup(name).map(|ng| ng.graph)
}
