//! WED through the square: when `G²` restricted to the finite-weight
//! vertices is chordal, a single MWIS call with big-M weights decides
//! existence and returns a minimum weight e.d.s.
//!
//! An independent set `S` of `G²` has pairwise disjoint closed
//! `G`-neighborhoods, so `Σ_{v∈S} |N[v]| ≤ n` with equality exactly for
//! e.d.s. With `M = 1 + Σ finite ω`, the weight `M·|N[v]| − ω(v)` makes any
//! e.d.s. outrank every non-covering set, and among e.d.s. the lightest wins.

use crate::chordal::{chordality, is_chordal, mwis_chordal};
use crate::eds::{is_eds, EdsSolution, Engine};
use crate::error::{Error, Result};
use crate::graph::{ExactWeight, Graph, WeightMap};

/// `G²`: vertices at distance one or two become adjacent.
pub fn square(g: &Graph) -> Graph {
    let n = g.n();
    let mut mark = vec![usize::MAX; n];
    let adj = g
        .vertices()
        .map(|v| {
            mark[v] = v;
            let mut out = Vec::new();
            for &u in g.neighbors(v) {
                for &w in std::iter::once(&u).chain(g.neighbors(u)) {
                    if mark[w] != v {
                        mark[w] = v;
                        out.push(w);
                    }
                }
            }
            out.sort_unstable();
            out
        })
        .collect();
    Graph::from_sorted_adjacency(adj)
}

/// The square together with its chordality verdict.
#[derive(Debug, Clone)]
pub struct SquareResult {
    pub square: Graph,
    pub square_chordal: bool,
    pub hole: Option<Vec<usize>>,
}

pub fn square_chordality_report(g: &Graph) -> SquareResult {
    let square = square(g);
    let report = chordality(&square);
    SquareResult {
        square,
        square_chordal: report.chordal,
        hole: report.hole,
    }
}

/// Big-M MWIS weights for the finite-weight vertices of a WED instance.
#[derive(Debug, Clone)]
pub struct BigMWeights {
    pub big_m: ExactWeight,
    /// Vertices allowed in the independent set (finite weight), sorted.
    pub selectable: Vec<usize>,
    /// `M·|N[v]| − ω(v)` for each selectable vertex, aligned with
    /// `selectable`.
    pub combined: Vec<ExactWeight>,
}

impl BigMWeights {
    pub fn new(g: &Graph, weights: &WeightMap) -> Self {
        let big_m = weights.finite_total() + 1;
        let mut selectable = Vec::new();
        let mut combined = Vec::new();
        for v in g.vertices() {
            if let Some(w) = weights.get(v).as_finite() {
                selectable.push(v);
                combined.push(&big_m * ExactWeight::from(g.degree(v) + 1) - w);
            }
        }
        BigMWeights {
            big_m,
            selectable,
            combined,
        }
    }

    /// `M·n − Σ finite ω`: the optimum reaches this iff an e.d.s. exists.
    pub fn threshold(&self, n: usize, weights: &WeightMap) -> ExactWeight {
        &self.big_m * ExactWeight::from(n) - weights.finite_total()
    }
}

/// Solves WED on a chordal graph through the square.
///
/// Returns `Ok(None)` when there is no finite-weight e.d.s.;
/// [`Error::SquareNotChordal`] means the engine does not apply, which says
/// nothing about existence.
pub fn wed_via_square(g: &Graph, weights: &WeightMap) -> Result<Option<EdsSolution>> {
    assert_eq!(weights.len(), g.n(), "one weight per vertex");
    let input = chordality(g);
    if !input.chordal {
        return Err(Error::InputNotChordal {
            hole: input.hole.unwrap_or_default(),
        });
    }
    let big = BigMWeights::new(g, weights);
    let sq = square(g);
    let candidates = sq.induced_subgraph(&big.selectable);
    if !is_chordal(&candidates.graph) {
        let hole = chordality(&candidates.graph).hole.unwrap_or_default();
        return Err(Error::SquareNotChordal {
            hole: candidates.map_to_original(&hole),
        });
    }
    let (local, optimum) = mwis_chordal(&candidates.graph, &big.combined)?;
    if optimum < big.threshold(g.n(), weights) {
        return Ok(None);
    }
    let set = candidates.to_original(&local);
    if !is_eds(g, &set) {
        return Err(Error::VerificationFailure { set });
    }
    let sol = EdsSolution::new(set, weights, Engine::Square);
    debug_assert_eq!(optimum, &big.big_m * ExactWeight::from(g.n()) - &sol.weight);
    Ok(Some(sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete, named, path};
    use crate::eds::X3cInstance;
    use crate::generate::x3c_to_graph;

    #[test]
    fn squares() {
        let sq = square(&path(4));
        assert_eq!(
            sq.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(square(&complete(5)), complete(5));
        // net: pendants 3, 4, 5 stay pairwise at distance 3
        let sq = square(&named("net").unwrap());
        let mut expected = complete(6).edges().collect::<Vec<_>>();
        expected.retain(|e| !matches!(e, (3, 4) | (3, 5) | (4, 5)));
        assert_eq!(sq.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn path_squares_are_chordal() {
        assert!(square_chordality_report(&path(7)).square_chordal);
    }

    #[test]
    fn small_instances() {
        let sol = wed_via_square(&path(3), &WeightMap::unit(3)).unwrap().unwrap();
        assert_eq!((sol.set, sol.weight), (vec![1], 1.into()));
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let w = WeightMap::from_finite(&[1u32, 2, 3, 4]).unwrap();
        let sol = wed_via_square(&two_k2, &w).unwrap().unwrap();
        assert_eq!((sol.set, sol.weight), (vec![0, 2], 4.into()));
        assert_eq!(
            wed_via_square(&named("bull").unwrap(), &WeightMap::unit(5)).unwrap(),
            None
        );
    }

    #[test]
    fn rejects_non_chordal_input() {
        assert!(matches!(
            wed_via_square(&crate::catalog::cycle(4), &WeightMap::unit(4)),
            Err(Error::InputNotChordal { .. })
        ));
    }

    #[test]
    fn uncovered_element_gives_an_eds() {
        // element 5 lies in no triple, so {5, y0, y1} is efficient
        let inst = X3cInstance::new(6, vec![[0, 1, 2], [2, 3, 4]]).unwrap();
        let red = x3c_to_graph(&inst);
        let sol = wed_via_square(&red.graph, &WeightMap::unit(red.graph.n()))
            .unwrap()
            .unwrap();
        assert_eq!((sol.set, sol.weight), (vec![5, 8, 9], 3.into()));
    }
}
