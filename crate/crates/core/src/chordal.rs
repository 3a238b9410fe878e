//! Chordality via LexBFS and perfect elimination orderings, plus exact
//! maximum weight independent set on chordal graphs (Frank's two-pass
//! method).

use std::collections::{BTreeSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{ExactWeight, Graph};

/// A vertex order, first-eliminated vertex first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder(pub Vec<usize>);

impl EliminationOrder {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `position[v]` is the index of `v` in the order.
    fn positions(&self, n: usize) -> Result<Vec<usize>> {
        if self.0.len() != n {
            return Err(Error::NotAPermutation { n });
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.0.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::NotAPermutation { n });
            }
            pos[v] = i;
        }
        Ok(pos)
    }
}

/// LexBFS, returned reversed so that it is a perfect elimination ordering
/// whenever the graph is chordal. Ties go to the smallest vertex id.
pub fn lex_bfs(g: &Graph) -> EliminationOrder {
    let n = g.n();
    // Partition refinement over an ordered list of classes; the head class
    // holds the vertices with the lexicographically largest label.
    struct Class {
        members: BTreeSet<usize>,
        prev: Option<usize>,
        next: Option<usize>,
    }
    let mut classes: Vec<Class> = Vec::new();
    let mut class_of = vec![0usize; n];
    let mut head = None;
    if n > 0 {
        classes.push(Class {
            members: (0..n).collect(),
            prev: None,
            next: None,
        });
        head = Some(0);
    }
    let mut visited = vec![false; n];
    let mut split_into: Vec<usize> = Vec::new();
    let mut order = Vec::with_capacity(n);
    while let Some(h) = head {
        let v = *classes[h].members.iter().next().expect("empty classes are unlinked");
        classes[h].members.remove(&v);
        visited[v] = true;
        order.push(v);
        if classes[h].members.is_empty() {
            head = classes[h].next;
            if let Some(nx) = head {
                classes[nx].prev = None;
            }
        }
        split_into.resize(classes.len(), usize::MAX);
        let mut touched = Vec::new();
        for &w in g.neighbors(v) {
            if visited[w] {
                continue;
            }
            let c = class_of[w];
            if split_into[c] == usize::MAX {
                let id = classes.len();
                let prev = classes[c].prev;
                classes.push(Class {
                    members: BTreeSet::new(),
                    prev,
                    next: Some(c),
                });
                split_into.push(usize::MAX);
                match prev {
                    Some(p) => classes[p].next = Some(id),
                    None => head = Some(id),
                }
                classes[c].prev = Some(id);
                split_into[c] = id;
                touched.push(c);
            }
            let id = split_into[c];
            classes[c].members.remove(&w);
            classes[id].members.insert(w);
            class_of[w] = id;
        }
        for c in touched {
            split_into[c] = usize::MAX;
            if classes[c].members.is_empty() {
                let (p, nx) = (classes[c].prev, classes[c].next);
                if let Some(p) = p {
                    classes[p].next = nx;
                } else {
                    head = nx;
                }
                if let Some(nx) = nx {
                    classes[nx].prev = p;
                }
            }
        }
    }
    order.reverse();
    EliminationOrder(order)
}

/// Later neighbors of every vertex with respect to `pos`, sorted by position.
fn later_neighbors(g: &Graph, pos: &[usize], v: usize) -> Vec<usize> {
    let mut later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
    later.sort_unstable_by_key(|&w| pos[w]);
    later
}

/// Finds a vertex whose later neighbors are not a clique, returning it with
/// two non-adjacent later neighbors.
fn peo_violation(g: &Graph, order: &EliminationOrder) -> Result<Option<(usize, usize, usize)>> {
    let pos = order.positions(g.n())?;
    for &v in order.as_slice() {
        let later = later_neighbors(g, &pos, v);
        if let Some((&parent, rest)) = later.split_first() {
            if let Some(&w) = rest.iter().find(|&&w| !g.has_edge(parent, w)) {
                return Ok(Some((v, parent, w)));
            }
        }
    }
    Ok(None)
}

/// True iff every vertex's later neighbors form a clique.
///
/// Uses the parent test: it suffices that each vertex's later neighbors,
/// other than the earliest one, are adjacent to that earliest one.
pub fn is_peo(g: &Graph, order: &EliminationOrder) -> Result<bool> {
    Ok(peo_violation(g, order)?.is_none())
}

/// Result of a chordality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalityReport {
    pub chordal: bool,
    /// An induced cycle of length at least four when not chordal.
    pub hole: Option<Vec<usize>>,
}

/// Shortest path from `u` to `w` avoiding `blocked`, as a vertex list.
fn shortest_path(g: &Graph, u: usize, w: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut pred = vec![usize::MAX; g.n()];
    pred[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut path = vec![w];
            let mut cur = w;
            while cur != u {
                cur = pred[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if pred[y] == usize::MAX && !blocked[y] {
                pred[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Hole through `v` entering via `u` and leaving via `w` (non-adjacent
/// neighbors of `v`), if the rest of the cycle exists outside `N[v]`.
fn hole_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let mut blocked = vec![false; g.n()];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        blocked[x] = x != u && x != w;
    }
    let mut path = shortest_path(g, u, w, &blocked)?;
    path.push(v);
    Some(path)
}

/// Finds some hole, or `None` if the graph is chordal.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let order = lex_bfs(g);
    let (v, u, w) = peo_violation(g, &order).expect("lex_bfs yields a permutation")?;
    if let Some(h) = hole_through(g, v, u, w) {
        return Some(h);
    }
    // Every hole passes through some vertex with two non-adjacent hole
    // neighbors, so exhaustive search always succeeds on non-chordal input.
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !g.has_edge(u, w) {
                    if let Some(h) = hole_through(g, v, u, w) {
                        return Some(h);
                    }
                }
            }
        }
    }
    unreachable!("a non-PEO LexBFS order implies a hole")
}

pub fn is_chordal(g: &Graph) -> bool {
    is_peo(g, &lex_bfs(g)).expect("lex_bfs yields a permutation")
}

/// Chordality verdict with a hole certificate on failure.
pub fn chordality(g: &Graph) -> ChordalityReport {
    match find_hole(g) {
        None => ChordalityReport {
            chordal: true,
            hole: None,
        },
        Some(h) => ChordalityReport {
            chordal: false,
            hole: Some(h),
        },
    }
}

/// Maximum weight independent set of a chordal graph.
///
/// Weights may be negative; only vertices with positive residual weight
/// become candidates, so non-positive vertices are never selected. Returns
/// the sorted set and its weight.
pub fn mwis_chordal(g: &Graph, weights: &[ExactWeight]) -> Result<(Vec<usize>, ExactWeight)> {
    assert_eq!(weights.len(), g.n(), "one weight per vertex");
    let order = lex_bfs(g);
    if let Some((v, u, w)) = peo_violation(g, &order)? {
        let hole = hole_through(g, v, u, w).or_else(|| find_hole(g)).unwrap_or_default();
        return Err(Error::InputNotChordal { hole });
    }
    let pos = order.positions(g.n())?;
    let mut residual = weights.to_vec();
    let mut candidates = Vec::new();
    for &v in order.as_slice() {
        if residual[v].is_positive() {
            let r = residual[v].clone();
            candidates.push(v);
            for &w in g.neighbors(v) {
                if pos[w] > pos[v] {
                    residual[w] -= &r;
                }
            }
        }
    }
    let mut selected = vec![false; g.n()];
    let mut set = Vec::new();
    for &v in candidates.iter().rev() {
        if g.neighbors(v).iter().all(|&w| !selected[w]) {
            selected[v] = true;
            set.push(v);
        }
    }
    set.sort_unstable();
    let total = set.iter().fold(ExactWeight::zero(), |acc, &v| acc + &weights[v]);
    Ok((set, total))
}
