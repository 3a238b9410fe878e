//! Induced subgraph detection by backtracking, for the `H`-free class tests.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern accepted by [`find_induced`].
pub const MAX_PATTERN: usize = 12;

/// Injective map from pattern vertices to host vertices preserving both
/// adjacency and non-adjacency. `map[h]` is the host image of `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks the embedding contract against host and pattern.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.n();
        if self.map.len() != k || self.map.iter().any(|&g| g >= host.n()) {
            return false;
        }
        (0..k).all(|a| {
            (a + 1..k).all(|b| {
                self.map[a] != self.map[b] && pattern.has_edge(a, b) == host.has_edge(self.map[a], self.map[b])
            })
        })
    }
}

/// Pattern vertices in search order: each connected piece is visited in BFS
/// order starting from its highest-degree vertex, so later vertices usually
/// have an already-placed neighbor that narrows their candidates.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.n();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let start = (0..k)
            .filter(|&h| !placed[h])
            .max_by_key(|&h| (pattern.degree(h), std::cmp::Reverse(h)))
            .unwrap();
        placed[start] = true;
        let mut i = order.len();
        order.push(start);
        while i < order.len() {
            let h = order[i];
            i += 1;
            let mut next: Vec<usize> = pattern.neighbors(h).iter().copied().filter(|&x| !placed[x]).collect();
            next.sort_by_key(|&x| (std::cmp::Reverse(pattern.degree(x)), x));
            for x in next {
                placed[x] = true;
                order.push(x);
            }
        }
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    /// For each position in `order`, an earlier position holding a pattern
    /// neighbor, if any.
    anchor: Vec<Option<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn fits(&self, depth: usize, g: usize) -> bool {
        let h = self.order[depth];
        if self.used[g] || self.host.degree(g) < self.pattern.degree(h) {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&prev| self.pattern.has_edge(h, prev) == self.host.has_edge(g, self.map[prev]))
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let h = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some(pos) => self.host.neighbors(self.map[self.order[pos]]).to_vec(),
            None => self.host.vertices().collect(),
        };
        for g in candidates {
            if self.fits(depth, g) {
                self.map[h] = g;
                self.used[g] = true;
                if self.extend(depth + 1) {
                    return true;
                }
                self.used[g] = false;
            }
        }
        false
    }
}

/// Finds an induced copy of `pattern` in `host`.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Result<Option<Embedding>> {
    if pattern.n() > MAX_PATTERN {
        return Err(Error::TooLarge {
            what: "pattern graph",
            size: pattern.n(),
            limit: MAX_PATTERN,
        });
    }
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Ok(None);
    }
    let order = search_order(pattern);
    let anchor = order
        .iter()
        .enumerate()
        .map(|(i, &h)| order[..i].iter().position(|&p| pattern.has_edge(h, p)))
        .collect();
    let mut search = Search {
        host,
        pattern,
        order,
        anchor,
        map: vec![usize::MAX; pattern.n()],
        used: vec![false; host.n()],
    };
    if search.extend(0) {
        let emb = Embedding { map: search.map };
        debug_assert!(emb.is_valid(host, pattern));
        Ok(Some(emb))
    } else {
        Ok(None)
    }
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> Result<bool> {
    Ok(find_induced(host, pattern)?.is_some())
}

/// First pattern (by list position) that embeds, with its embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub embedding: Embedding,
}

/// Whether `host` is free of every pattern in `patterns`; on failure returns
/// the first violation.
pub fn is_free_of_all(host: &Graph, patterns: &[Graph]) -> Result<Result<(), Violation>> {
    if let Some(p) = patterns.iter().find(|p| p.n() > MAX_PATTERN) {
        return Err(Error::TooLarge {
            what: "pattern graph",
            size: p.n(),
            limit: MAX_PATTERN,
        });
    }
    for (index, p) in patterns.iter().enumerate() {
        if let Some(embedding) = find_induced(host, p)? {
            return Ok(Err(Violation { index, embedding }));
        }
    }
    Ok(Ok(()))
}
