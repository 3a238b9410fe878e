//! Direct WED engine for S₁,₂,₃-free chordal graphs.
//!
//! For a maximal vertex `v` of the closed-neighborhood order, the distance
//! levels of `v` form a tree of components, and a minimum e.d.s. containing
//! `v` is assembled bottom-up from per-component candidates. The outer loop
//! covers e.d.s. avoiding `v` by deleting `v` after pinning the vertices of
//! `N(v)` that no such e.d.s. may use.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::chordal::chordality;
use crate::eds::{is_eds, EdsSolution, Engine};
use crate::error::{Error, Result, StructureViolationKind};
use crate::graph::{ExactWeight, Graph, LevelStructure, Weight, WeightMap};

/// Strict inclusion of closed neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodPoset {
    /// `z_minus[v]`: vertices `u` with `N[u] ⊊ N[v]`, sorted.
    pub z_minus: Vec<Vec<usize>>,
    /// `z_plus[v]`: vertices `u` with `N[v] ⊊ N[u]`, sorted.
    pub z_plus: Vec<Vec<usize>>,
}

impl NeighborhoodPoset {
    pub fn is_maximal(&self, v: usize) -> bool {
        self.z_plus[v].is_empty()
    }

    pub fn maximal(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.z_plus.len()).filter(|&v| self.is_maximal(v))
    }
}

/// `N[u] ⊆ N[v]`, for adjacent `u`, `v`.
fn closed_subset(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).iter().all(|&w| w == v || g.has_edge(w, v))
}

pub fn neighborhood_poset(g: &Graph) -> NeighborhoodPoset {
    let n = g.n();
    let mut z_minus = vec![Vec::new(); n];
    let mut z_plus = vec![Vec::new(); n];
    // N[u] ⊊ N[v] forces u ∈ N(v), so only edges need checking.
    for (u, v) in g.edges() {
        let uv = closed_subset(g, u, v);
        let vu = closed_subset(g, v, u);
        match (uv, vu) {
            (true, false) => {
                z_minus[v].push(u);
                z_plus[u].push(v);
            }
            (false, true) => {
                z_minus[u].push(v);
                z_plus[v].push(u);
            }
            _ => {}
        }
    }
    for list in z_minus.iter_mut().chain(z_plus.iter_mut()) {
        list.sort_unstable();
    }
    NeighborhoodPoset { z_minus, z_plus }
}

/// Vertices `u ≠ v` with `N[u] = N[v]`.
pub fn true_twins(g: &Graph, v: usize) -> Vec<usize> {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&u| g.degree(u) == g.degree(v) && closed_subset(g, u, v))
        .collect()
}

/// Whether every vertex of `N_1` has a non-neighbor in `N_1`.
///
/// Holds for a maximal root exactly when the root has no true twin.
pub fn first_level_has_non_neighbors(g: &Graph, v: usize) -> bool {
    let n1 = g.neighbors(v);
    n1.iter().all(|&u| n1.iter().any(|&z| z != u && !g.has_edge(u, z)))
}

/// A component of one distance level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub level: usize,
    /// Sorted vertices of the component.
    pub vertices: Vec<usize>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// Components of the distance levels of a root, linked to the unique
/// component one level up that they touch. Node 0 is `{root}`.
#[derive(Debug, Clone)]
pub struct ComponentTree {
    pub root: usize,
    pub levels: LevelStructure,
    pub nodes: Vec<TreeNode>,
    /// Tree node of each vertex; `None` outside the root's component.
    pub node_of: Vec<Option<usize>>,
}

impl ComponentTree {
    /// Node ids on `level`.
    pub fn level_nodes(&self, level: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&k| self.nodes[k].level == level)
    }

    /// Nodes two levels below `k`.
    pub fn grandchildren(&self, k: usize) -> Vec<usize> {
        self.nodes[k]
            .children
            .iter()
            .flat_map(|&c| self.nodes[c].children.iter().copied())
            .collect()
    }

    /// All vertices of the subtree rooted at `k`.
    pub fn subtree_vertices(&self, k: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![k];
        while let Some(node) = stack.pop() {
            out.extend_from_slice(&self.nodes[node].vertices);
            stack.extend_from_slice(&self.nodes[node].children);
        }
        out.sort_unstable();
        out
    }

    /// Vertices of the root's connected component.
    pub fn reached(&self) -> Vec<usize> {
        self.subtree_vertices(0)
    }
}

pub fn component_tree(g: &Graph, v: usize) -> Result<ComponentTree> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let levels = g.bfs_levels(v);
    let mut nodes = vec![TreeNode {
        level: 0,
        vertices: vec![v],
        parent: None,
        children: Vec::new(),
    }];
    let mut node_of = vec![None; g.n()];
    node_of[v] = Some(0);
    for i in 1..levels.levels.len() {
        if i >= 2 {
            for &x in &levels.levels[i] {
                let up: Vec<usize> = g
                    .neighbors(x)
                    .iter()
                    .copied()
                    .filter(|&u| levels.level_of[u] == Some(i - 1))
                    .collect();
                for (a, &p) in up.iter().enumerate() {
                    if let Some(&q) = up[a + 1..].iter().find(|&&q| !g.has_edge(p, q)) {
                        return Err(Error::StructureViolation {
                            vertex: x,
                            kind: StructureViolationKind::ParentsNotClique(p, q),
                        });
                    }
                }
            }
        }
        for comp in g.components(&levels.levels[i]) {
            let mut parents = BTreeSet::new();
            for &x in &comp {
                for &u in g.neighbors(x) {
                    if levels.level_of[u] == Some(i - 1) {
                        parents.insert(node_of[u].expect("upper level already placed"));
                    }
                }
            }
            if parents.len() != 1 {
                return Err(Error::StructureViolation {
                    vertex: comp[0],
                    kind: StructureViolationKind::ComponentHasTwoParents,
                });
            }
            let parent = *parents.iter().next().unwrap();
            let id = nodes.len();
            for &x in &comp {
                node_of[x] = Some(id);
            }
            nodes[parent].children.push(id);
            nodes.push(TreeNode {
                level: i,
                vertices: comp,
                parent: Some(parent),
                children: Vec::new(),
            });
        }
    }
    Ok(ComponentTree {
        root: v,
        levels,
        nodes,
        node_of,
    })
}

/// An accepted candidate `d` of a node `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub vertex: usize,
    /// Weight of the cheapest e.d.s. of the subtree that contains `vertex`.
    pub weight: ExactWeight,
    /// Next-level vertices of the subtree not adjacent to `vertex`.
    pub x: Vec<usize>,
    /// Next-level vertices of the subtree adjacent to `vertex`.
    pub a: Vec<usize>,
    /// Nodes two levels down that touch `x`.
    pub c_x: Vec<usize>,
    /// Nodes two levels down that do not touch `x`.
    pub c_0: Vec<usize>,
    /// Children of the `c_0` nodes.
    pub k_0: Vec<usize>,
    /// `(node, vertex)` picked for every node of `c_x` and `k_0`.
    pub choices: Vec<(usize, usize)>,
}

/// Why a vertex of a node is not a candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    InfiniteWeight,
    /// The vertex misses `0` of its own component.
    DoesNotDominate(usize),
    /// `0` has no neighbor two levels below the candidate.
    Undominated(usize),
    /// `0` touches several components of the level below it.
    ContactsSeveral(usize),
    /// No candidate of node `0` fits the required domination pattern.
    NoAdmissibleChoice(usize),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::InfiniteWeight => write!(f, "infinite weight"),
            Rejection::DoesNotDominate(u) => write!(f, "does not dominate {u}"),
            Rejection::Undominated(u) => write!(f, "vertex {u} cannot be dominated"),
            Rejection::ContactsSeveral(u) => write!(f, "vertex {u} touches several components below"),
            Rejection::NoAdmissibleChoice(k) => write!(f, "node {k} has no admissible candidate"),
        }
    }
}

/// Per-node candidate lists, accepted and rejected.
#[derive(Debug, Clone, Default)]
pub struct CandidateTable {
    /// Accepted candidates of each node, sorted by vertex.
    pub accepted: Vec<Vec<Candidate>>,
    pub rejected: Vec<Vec<(usize, Rejection)>>,
}

impl CandidateTable {
    pub fn get(&self, node: usize, vertex: usize) -> Option<&Candidate> {
        self.accepted[node].iter().find(|c| c.vertex == vertex)
    }

    pub fn rejection(&self, node: usize, vertex: usize) -> Option<&Rejection> {
        self.rejected[node].iter().find(|(v, _)| *v == vertex).map(|(_, r)| r)
    }

    /// The candidate set below and including `(node, vertex)`.
    pub fn reconstruct(&self, node: usize, vertex: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(node, vertex)];
        while let Some((k, d)) = stack.pop() {
            let cand = self.get(k, d).expect("choices point at accepted candidates");
            out.push(d);
            stack.extend_from_slice(&cand.choices);
        }
        out.sort_unstable();
        out
    }
}

/// Cheapest accepted candidate of `node` (lowest id on ties) whose closed
/// neighborhood covers `must` and avoids `forbid`.
fn best_choice<'a>(
    g: &Graph,
    table: &'a CandidateTable,
    node: usize,
    must: &[usize],
    forbid: &[usize],
) -> Option<&'a Candidate> {
    let mut best: Option<&Candidate> = None;
    for c in &table.accepted[node] {
        if !must.iter().all(|&x| g.has_edge(c.vertex, x)) || forbid.iter().any(|&a| g.has_edge(c.vertex, a)) {
            continue;
        }
        if best.is_none_or(|b| c.weight < b.weight) {
            best = Some(c);
        }
    }
    best
}

/// Child nodes of `parent` touched by `x`, sorted.
fn contacted_children(g: &Graph, tree: &ComponentTree, x: usize, parent_level: usize) -> Vec<usize> {
    let mut out: Vec<usize> = g
        .neighbors(x)
        .iter()
        .filter(|&&u| tree.levels.level_of[u] == Some(parent_level + 1))
        .map(|&u| tree.node_of[u].unwrap())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn evaluate(
    g: &Graph,
    tree: &ComponentTree,
    weights: &WeightMap,
    table: &CandidateTable,
    k: usize,
    d: usize,
) -> std::result::Result<Candidate, Rejection> {
    let Some(wd) = weights.get(d).as_finite() else {
        return Err(Rejection::InfiniteWeight);
    };
    let node = &tree.nodes[k];
    if let Some(&u) = node.vertices.iter().find(|&&u| u != d && !g.has_edge(d, u)) {
        return Err(Rejection::DoesNotDominate(u));
    }
    let i = node.level;
    let mut x = Vec::new();
    let mut a = Vec::new();
    for &c in &node.children {
        for &h in &tree.nodes[c].vertices {
            if g.has_edge(d, h) {
                a.push(h);
            } else {
                x.push(h);
            }
        }
    }
    x.sort_unstable();
    a.sort_unstable();

    // every x must see exactly one component two levels down
    let mut c_x = BTreeSet::new();
    let mut x_of: Vec<(usize, usize)> = Vec::new();
    for &xv in &x {
        let below = contacted_children(g, tree, xv, i + 1);
        match below.len() {
            0 => return Err(Rejection::Undominated(xv)),
            1 => {
                c_x.insert(below[0]);
                x_of.push((below[0], xv));
            }
            _ => return Err(Rejection::ContactsSeveral(xv)),
        }
    }
    let grand = tree.grandchildren(k);
    let c_0: Vec<usize> = grand.iter().copied().filter(|y| !c_x.contains(y)).collect();
    let c_x: Vec<usize> = c_x.into_iter().collect();

    let mut weight = wd.clone();
    let mut choices = Vec::new();
    for &y in &c_x {
        let must: Vec<usize> = x_of.iter().filter(|(n, _)| *n == y).map(|&(_, v)| v).collect();
        let Some(c) = best_choice(g, table, y, &must, &a) else {
            return Err(Rejection::NoAdmissibleChoice(y));
        };
        weight += &c.weight;
        choices.push((y, c.vertex));
    }

    // vertices of c_0 components are dominated from exactly one child
    let mut k_0 = Vec::new();
    for &y in &c_0 {
        let mut need: Vec<(usize, usize)> = Vec::new();
        for &yv in &tree.nodes[y].vertices {
            let below = contacted_children(g, tree, yv, i + 2);
            match below.len() {
                0 => return Err(Rejection::Undominated(yv)),
                1 => need.push((below[0], yv)),
                _ => return Err(Rejection::ContactsSeveral(yv)),
            }
        }
        for &z in &tree.nodes[y].children {
            let must: Vec<usize> = need.iter().filter(|(n, _)| *n == z).map(|&(_, v)| v).collect();
            let Some(c) = best_choice(g, table, z, &must, &[]) else {
                return Err(Rejection::NoAdmissibleChoice(z));
            };
            weight += &c.weight;
            choices.push((z, c.vertex));
            k_0.push(z);
        }
    }
    k_0.sort_unstable();

    Ok(Candidate {
        vertex: d,
        weight,
        x,
        a,
        c_x,
        c_0,
        k_0,
        choices,
    })
}

/// Fills the candidate table bottom-up, deepest level first.
pub fn compute_candidates(g: &Graph, tree: &ComponentTree, weights: &WeightMap) -> CandidateTable {
    let count = tree.nodes.len();
    let mut table = CandidateTable {
        accepted: vec![Vec::new(); count],
        rejected: vec![Vec::new(); count],
    };
    for level in (0..tree.levels.levels.len()).rev() {
        for k in tree.level_nodes(level).collect::<Vec<_>>() {
            for &d in &tree.nodes[k].vertices {
                match evaluate(g, tree, weights, &table, k, d) {
                    Ok(c) => table.accepted[k].push(c),
                    Err(r) => table.rejected[k].push((d, r)),
                }
            }
        }
    }
    table
}

/// Minimum weight e.d.s. of `v`'s connected component that contains `v`,
/// for a maximal vertex `v`.
pub fn v_maximal_wed(g: &Graph, weights: &WeightMap, v: usize) -> Result<Option<EdsSolution>> {
    assert_eq!(weights.len(), g.n(), "one weight per vertex");
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if g.neighbors(v)
        .iter()
        .any(|&u| closed_subset(g, v, u) && !closed_subset(g, u, v))
    {
        return Err(Error::NotMaximal(v));
    }
    if !weights.is_finite(v) {
        return Ok(None);
    }
    let tree = component_tree(g, v)?;
    let table = compute_candidates(g, &tree, weights);
    if table.get(0, v).is_none() {
        return Ok(None);
    }
    let set = table.reconstruct(0, v);
    let component = g.induced_subgraph(&tree.reached());
    let local: Vec<usize> = set
        .iter()
        .map(|d| component.original.binary_search(d).unwrap())
        .collect();
    if !is_eds(&component.graph, &local) {
        return Err(Error::VerificationFailure { set });
    }
    let sol = EdsSolution::new(set, weights, Engine::S123);
    debug_assert_eq!(sol.weight, table.get(0, v).unwrap().weight);
    Ok(Some(sol))
}

type Found = Option<(Vec<usize>, ExactWeight)>;

fn keep_better(best: &mut Found, set: Vec<usize>, weight: ExactWeight) {
    if best.as_ref().is_none_or(|(_, w)| weight < *w) {
        *best = Some((set, weight));
    }
}

/// Cheapest e.d.s. of the connected working instance `G[alive]`.
fn solve_connected(
    g: &Graph,
    original: &WeightMap,
    working: &mut WeightMap,
    mut alive: Vec<usize>,
    mut processed: BTreeSet<usize>,
) -> Result<Found> {
    let mut best: Found = None;
    loop {
        let sub = g.induced_subgraph(&alive);
        let poset = neighborhood_poset(&sub.graph);
        let Some(local_v) = poset.maximal().find(|&u| !processed.contains(&sub.original[u])) else {
            break;
        };
        let v = sub.original[local_v];
        let local_weights = working.restrict(&alive);
        if let Some(sol) = v_maximal_wed(&sub.graph, &local_weights, local_v)? {
            let set = sub.to_original(&sol.set);
            let weight = original.total(&set);
            keep_better(&mut best, set, weight);
        }
        if poset.z_minus[local_v].is_empty() {
            processed.insert(v);
            continue;
        }
        // an e.d.s. avoiding v meets N(v) inside every N[x], x ∈ Z⁻(v)
        for &lx in &poset.z_minus[local_v] {
            for &lu in sub.graph.neighbors(local_v) {
                if lu != lx && !sub.graph.has_edge(lu, lx) {
                    working.set(sub.original[lu], Weight::Infinite);
                }
            }
        }
        alive.retain(|&u| u != v);
        let rest = g.induced_subgraph(&alive);
        let parts = rest.graph.connected_components();
        if parts.len() > 1 {
            let mut union = Vec::new();
            let mut total = ExactWeight::zero();
            for part in parts {
                let part = rest.to_original(&part);
                let inherited = processed.iter().copied().filter(|u| part.contains(u)).collect();
                match solve_connected(g, original, working, part, inherited)? {
                    Some((set, w)) => {
                        union.extend(set);
                        total += w;
                    }
                    None => return Ok(best),
                }
            }
            union.sort_unstable();
            keep_better(&mut best, union, total);
            break;
        }
    }
    Ok(best)
}

/// Minimum weight e.d.s. of a chordal graph through maximal-vertex
/// elimination. Exact on S₁,₂,₃-free chordal graphs; on other chordal
/// graphs a returned set is still a verified e.d.s., but a missing answer
/// is not a proof of absence.
pub fn s123_wed(g: &Graph, weights: &WeightMap) -> Result<Option<EdsSolution>> {
    assert_eq!(weights.len(), g.n(), "one weight per vertex");
    let report = chordality(g);
    if !report.chordal {
        return Err(Error::InputNotChordal {
            hole: report.hole.unwrap_or_default(),
        });
    }
    let mut set = Vec::new();
    for comp in g.connected_components() {
        let mut working = weights.clone();
        let found = solve_connected(g, weights, &mut working, comp.clone(), BTreeSet::new())?;
        let part = g.induced_subgraph(&comp);
        match found {
            Some((s, _)) => {
                let local: Vec<usize> = s.iter().map(|d| comp.binary_search(d).unwrap()).collect();
                if !is_eds(&part.graph, &local) {
                    return Err(Error::VerificationFailure { set: s });
                }
                set.extend(s);
            }
            None => return Ok(None),
        }
    }
    if !is_eds(g, &set) {
        return Err(Error::VerificationFailure { set });
    }
    Ok(Some(EdsSolution::new(set, weights, Engine::S123)))
}
