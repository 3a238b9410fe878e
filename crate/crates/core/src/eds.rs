//! Ground truth: efficient dominating set verification, an exact
//! exponential WED search and an X3C solver.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{ExactWeight, Graph, WeightMap};

/// Largest graph accepted by [`brute_force_wed`].
pub const BRUTE_FORCE_LIMIT: usize = 24;
/// Largest triple family accepted by [`x3c_solve`].
pub const X3C_LIMIT: usize = 20;

/// Which engine produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Brute,
    Square,
    S123,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Brute => "brute",
            Engine::Square => "square",
            Engine::S123 => "s123",
        })
    }
}

/// An efficient dominating set with its finite total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdsSolution {
    /// Sorted vertex ids.
    pub set: Vec<usize>,
    pub weight: ExactWeight,
    pub engine: Engine,
}

impl EdsSolution {
    pub(crate) fn new(mut set: Vec<usize>, weights: &WeightMap, engine: Engine) -> Self {
        set.sort_unstable();
        let weight = weights.total(&set);
        EdsSolution { set, weight, engine }
    }
}

/// `|D ∩ N[v]| = 1` for every vertex `v`.
pub fn is_eds(g: &Graph, set: &[usize]) -> bool {
    let mut hits = vec![0u32; g.n()];
    let mut member = vec![false; g.n()];
    for &d in set {
        if d >= g.n() || member[d] {
            return false;
        }
        member[d] = true;
        hits[d] += 1;
        for &u in g.neighbors(d) {
            hits[u] += 1;
        }
    }
    hits.iter().all(|&h| h == 1)
}

struct BruteSearch<'a> {
    n: usize,
    full: u32,
    closed: Vec<u32>,
    closed_lists: Vec<Vec<usize>>,
    weights: &'a WeightMap,
    best: Option<(u32, ExactWeight)>,
}

impl BruteSearch<'_> {
    fn run(&mut self, dominated: u32, chosen: u32, weight: &ExactWeight) {
        if dominated == self.full {
            if self.best.as_ref().is_none_or(|(_, b)| weight < b) {
                self.best = Some((chosen, weight.clone()));
            }
            return;
        }
        let u = (!dominated).trailing_zeros() as usize;
        debug_assert!(u < self.n);
        for i in 0..self.closed_lists[u].len() {
            let c = self.closed_lists[u][i];
            let Some(wc) = self.weights.get(c).as_finite() else {
                continue;
            };
            if self.closed[c] & dominated != 0 {
                continue;
            }
            let next = weight + wc;
            if self.best.as_ref().is_some_and(|(_, b)| &next >= b) {
                continue;
            }
            self.run(dominated | self.closed[c], chosen | (1 << c), &next);
        }
    }
}

/// Minimum finite-weight e.d.s. by exact-cover branching over closed
/// neighborhoods; `None` if the graph has no finite-weight e.d.s.
pub fn brute_force_wed(g: &Graph, weights: &WeightMap) -> Result<Option<EdsSolution>> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "graph",
            size: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    assert_eq!(weights.len(), n, "one weight per vertex");
    let closed_lists: Vec<Vec<usize>> = g.vertices().map(|v| g.closed_neighborhood(v)).collect();
    let closed = closed_lists
        .iter()
        .map(|l| l.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    let mut search = BruteSearch {
        n,
        full: (1u32 << n) - 1,
        closed,
        closed_lists,
        weights,
        best: None,
    };
    search.run(0, 0, &ExactWeight::zero());
    Ok(search.best.map(|(mask, _)| {
        let set = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        EdsSolution::new(set, weights, Engine::Brute)
    }))
}

/// An exact-cover-by-3-sets instance over the universe `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3cInstance {
    n: usize,
    triples: Vec<[usize; 3]>,
}

impl X3cInstance {
    /// Validates and normalizes (sorts) each triple.
    pub fn new(n: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        if !n.is_multiple_of(3) {
            return Err(Error::InvalidInstance(format!(
                "universe size {n} is not a multiple of 3"
            )));
        }
        let mut out = Vec::with_capacity(triples.len());
        for mut t in triples {
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::InvalidInstance(format!("triple {t:?} repeats an element")));
            }
            if t[2] >= n {
                return Err(Error::InvalidInstance(format!(
                    "triple {t:?} leaves the universe 0..{n}"
                )));
            }
            out.push(t);
        }
        Ok(X3cInstance { n, triples: out })
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    /// Whether every universe element lies in at least one triple.
    pub fn covers_universe(&self) -> bool {
        let mut seen = vec![false; self.n];
        for t in &self.triples {
            for &e in t {
                seen[e] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

fn x3c_search(inst: &X3cInstance, covered: &mut Vec<bool>, chosen: &mut Vec<usize>) -> bool {
    let Some(e) = covered.iter().position(|&c| !c) else {
        return true;
    };
    for (j, t) in inst.triples.iter().enumerate() {
        if t.contains(&e) && t.iter().all(|&x| !covered[x]) {
            t.iter().for_each(|&x| covered[x] = true);
            chosen.push(j);
            if x3c_search(inst, covered, chosen) {
                return true;
            }
            chosen.pop();
            t.iter().for_each(|&x| covered[x] = false);
        }
    }
    false
}

/// An exact cover (sorted triple indices), if one exists.
pub fn x3c_solve(inst: &X3cInstance) -> Result<Option<Vec<usize>>> {
    if inst.triples.len() > X3C_LIMIT {
        return Err(Error::TooLarge {
            what: "triple family",
            size: inst.triples.len(),
            limit: X3C_LIMIT,
        });
    }
    let mut covered = vec![false; inst.n];
    let mut chosen = Vec::new();
    Ok(x3c_search(inst, &mut covered, &mut chosen).then(|| {
        chosen.sort_unstable();
        chosen
    }))
}
