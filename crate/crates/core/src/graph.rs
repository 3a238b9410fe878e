//! Simple undirected graphs over dense ids, vertex weights and BFS levels.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact signed integer used for every weight computation.
pub type ExactWeight = BigInt;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric, with no loops or duplicates.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from adjacency lists that are already known to be
    /// valid; used internally where the construction guarantees the
    /// invariants.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, l)| { l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&v) }));
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `N[v]` as a sorted vector.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let pos = self.adj[v].partition_point(|&u| u < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut it = self.adj[u].iter().peekable();
                (0..n)
                    .filter(|&v| {
                        while it.next_if(|&&w| w < v).is_some() {}
                        v != u && it.peek() != Some(&&v)
                    })
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        Graph::from_sorted_adjacency(adj)
    }

    /// Connected components of `G[subset]`, each sorted, ordered by their
    /// smallest vertex.
    pub fn components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut inside = vec![false; self.n()];
        for &v in subset {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        let mut out = Vec::new();
        for &s in &sorted {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = self.vertices().collect();
        self.components(&all)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Distance levels of `root`.
    pub fn bfs_levels(&self, root: usize) -> LevelStructure {
        let mut level_of = vec![None; self.n()];
        let mut levels: Vec<Vec<usize>> = vec![vec![root]];
        level_of[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let next = level_of[u].unwrap() + 1;
            for &w in &self.adj[u] {
                if level_of[w].is_none() {
                    level_of[w] = Some(next);
                    if levels.len() == next {
                        levels.push(Vec::new());
                    }
                    levels[next].push(w);
                    queue.push_back(w);
                }
            }
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        LevelStructure { root, levels, level_of }
    }

    /// The subgraph induced by `vertices` together with the id map back to
    /// this graph. New ids follow the sorted order of `vertices`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> InducedSubgraph {
        let mut original = vertices.to_vec();
        original.sort_unstable();
        original.dedup();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX)
                    .map(|&w| local[w])
                    .collect()
            })
            .collect();
        let mut graph = Graph::from_sorted_adjacency(adj);
        if let Some(labels) = &self.labels {
            graph.labels = Some(original.iter().map(|&v| labels[v].clone()).collect());
        }
        InducedSubgraph { graph, original }
    }
}

/// An induced subgraph plus the map from its ids to the parent's ids.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the parent id of local vertex `i`.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps local ids to parent ids, keeping their order.
    pub fn map_to_original(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&v| self.original[v]).collect()
    }

    /// Maps local ids to parent ids, sorted.
    pub fn to_original(&self, local: &[usize]) -> Vec<usize> {
        let mut out = self.map_to_original(local);
        out.sort_unstable();
        out
    }
}

/// BFS distance levels `N_0 = {root}, N_1, ..., N_t` of one root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStructure {
    pub root: usize,
    /// Sorted vertex lists per distance.
    pub levels: Vec<Vec<usize>>,
    /// Distance from the root, `None` when unreachable.
    pub level_of: Vec<Option<usize>>,
}

impl LevelStructure {
    /// Index of the deepest level.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn unreached(&self) -> impl Iterator<Item = usize> + '_ {
        self.level_of
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_none())
            .map(|(v, _)| v)
    }
}

/// A vertex weight: a natural number or infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Weight {
    Finite(ExactWeight),
    Infinite,
}

impl Weight {
    /// A finite weight; negative values are rejected.
    pub fn finite(value: impl Into<ExactWeight>) -> Result<Self> {
        let value = value.into();
        if value.is_negative() {
            return Err(Error::InvalidWeight(format!("{value} is negative")));
        }
        Ok(Weight::Finite(value))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Weight::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&ExactWeight> {
        match self {
            Weight::Finite(w) => Some(w),
            Weight::Infinite => None,
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(w) => write!(f, "{w}"),
            Weight::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Weight::Infinite);
        }
        let value: ExactWeight = s
            .parse()
            .map_err(|_| Error::InvalidWeight(format!("`{s}` is neither an integer nor `inf`")))?;
        Weight::finite(value)
    }
}

/// Per-vertex weights of a WED instance.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightMap {
    weights: Vec<Weight>,
}

impl fmt::Debug for WeightMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.weights).finish()
    }
}

impl WeightMap {
    /// All weights equal to one.
    pub fn unit(n: usize) -> Self {
        WeightMap {
            weights: vec![Weight::Finite(1.into()); n],
        }
    }

    pub fn from_weights(weights: Vec<Weight>) -> Self {
        WeightMap { weights }
    }

    pub fn from_finite<T: Into<ExactWeight> + Copy>(values: &[T]) -> Result<Self> {
        let weights = values.iter().map(|&w| Weight::finite(w)).collect::<Result<_>>()?;
        Ok(WeightMap { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, v: usize) -> &Weight {
        &self.weights[v]
    }

    pub fn set(&mut self, v: usize, w: Weight) {
        self.weights[v] = w;
    }

    pub fn is_finite(&self, v: usize) -> bool {
        self.weights[v].is_finite()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Weight> {
        self.weights.iter()
    }

    /// Weights of the listed vertices, in order.
    pub fn restrict(&self, vertices: &[usize]) -> WeightMap {
        WeightMap {
            weights: vertices.iter().map(|&v| self.weights[v].clone()).collect(),
        }
    }

    /// Sum of the finite weights.
    pub fn finite_total(&self) -> ExactWeight {
        self.weights
            .iter()
            .filter_map(Weight::as_finite)
            .fold(ExactWeight::zero(), |acc, w| acc + w)
    }

    /// Total weight of `set`.
    ///
    /// Panics if any member has infinite weight.
    pub fn total(&self, set: &[usize]) -> ExactWeight {
        set.iter().fold(ExactWeight::zero(), |acc, &v| match &self.weights[v] {
            Weight::Finite(w) => acc + w,
            Weight::Infinite => panic!("vertex {v} with infinite weight summed into a total"),
        })
    }

    /// Total weight of `set`, or `None` if it contains an infinite vertex.
    pub fn checked_total(&self, set: &[usize]) -> Option<ExactWeight> {
        set.iter().try_fold(ExactWeight::zero(), |acc, &v| {
            self.weights[v].as_finite().map(|w| acc + w)
        })
    }
}
