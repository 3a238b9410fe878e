//! Instance generators: the X3C reduction graph and seeded random chordal,
//! interval and `H`-free chordal graphs.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eds::X3cInstance;
use crate::graph::Graph;
use crate::induced::is_free_of_all;

/// Role of a vertex in the reduction graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Universe element `i`.
    Universe(usize),
    /// Vertex `x_j` standing for triple `j`.
    Triple(usize),
    /// Pendant `y_j` hanging off `x_j`.
    Pendant(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Universe(i) => write!(f, "v{i}"),
            Role::Triple(j) => write!(f, "x{j}"),
            Role::Pendant(j) => write!(f, "y{j}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub graph: Graph,
    /// `roles[v]` for every vertex.
    pub roles: Vec<Role>,
}

impl ReductionOutput {
    pub fn triple_vertex(&self, j: usize) -> usize {
        self.roles.iter().position(|&r| r == Role::Triple(j)).unwrap()
    }

    pub fn pendant_vertex(&self, j: usize) -> usize {
        self.roles.iter().position(|&r| r == Role::Pendant(j)).unwrap()
    }

    /// The e.d.s. that corresponds to an exact cover: `x_j` for chosen
    /// triples, `y_j` for the others.
    pub fn cover_to_eds(&self, cover: &[usize]) -> Vec<usize> {
        let m = self.roles.iter().filter(|r| matches!(r, Role::Triple(_))).count();
        let mut set: Vec<usize> = (0..m)
            .map(|j| {
                if cover.contains(&j) {
                    self.triple_vertex(j)
                } else {
                    self.pendant_vertex(j)
                }
            })
            .collect();
        set.sort_unstable();
        set
    }

    /// Comment lines tagging each vertex with its role.
    pub fn role_comments(&self) -> Vec<String> {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, r)| format!("role {v} {r}"))
            .collect()
    }
}

/// Builds the reduction graph: the universe is a clique, `x_j` sees the
/// members of triple `j` and its pendant `y_j`. Ids are universe `0..n`,
/// then `x_0..x_m`, then `y_0..y_m`.
pub fn x3c_to_graph(inst: &X3cInstance) -> ReductionOutput {
    let n = inst.universe();
    let m = inst.triples().len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    for (j, t) in inst.triples().iter().enumerate() {
        for &e in t {
            edges.push((e, n + j));
        }
        edges.push((n + j, n + m + j));
    }
    let graph = Graph::from_edge_list(n + 2 * m, &edges).expect("reduction edges are valid");
    let roles = (0..n)
        .map(Role::Universe)
        .chain((0..m).map(Role::Triple))
        .chain((0..m).map(Role::Pendant))
        .collect();
    ReductionOutput { graph, roles }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Intersection graph of `n` random closed integer intervals.
///
/// Left endpoints are uniform on `0..span` with `span = 100·n`; lengths are
/// uniform on `0..=density·span`, so `density` near 0 gives sparse graphs and
/// near 1 almost complete ones.
pub fn random_interval_graph(n: usize, density: f64, seed: u64) -> Graph {
    let intervals = random_intervals(n, density, seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (intervals[i], intervals[j]);
            if a.0 <= b.1 && b.0 <= a.1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("interval edges are valid")
}

/// The intervals behind [`random_interval_graph`].
pub fn random_intervals(n: usize, density: f64, seed: u64) -> Vec<(u64, u64)> {
    let mut rng = rng(seed);
    let span = 100 * n.max(1) as u64;
    let max_len = (density.clamp(0.0, 1.0) * span as f64).round() as u64;
    (0..n)
        .map(|_| {
            let left = rng.gen_range(0..span);
            let len = rng.gen_range(0..=max_len);
            (left, left + len)
        })
        .collect()
}

/// Random chordal graph grown by simplicial vertices.
///
/// Each new vertex picks a random maximal clique of the current graph and
/// joins each of its members independently with probability `edge_bias`.
/// Reverse insertion order is a perfect elimination ordering.
pub fn random_chordal(n: usize, edge_bias: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let bias = edge_bias.clamp(0.0, 1.0);
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::new();
    for v in 0..n {
        if cliques.is_empty() {
            cliques.push(vec![v]);
            continue;
        }
        let c = rng.gen_range(0..cliques.len());
        let nbrs: Vec<usize> = cliques[c].iter().copied().filter(|_| rng.gen_bool(bias)).collect();
        edges.extend(nbrs.iter().map(|&u| (u, v)));
        if nbrs.len() == cliques[c].len() {
            cliques[c].push(v);
        } else {
            let mut clique = nbrs;
            clique.push(v);
            cliques.push(clique);
        }
    }
    Graph::from_edge_list(n, &edges).expect("simplicial growth edges are valid")
}

/// Rejection-samples a chordal graph on `n` vertices free of every pattern
/// in `patterns`. Each try draws an edge bias uniformly from `[0.3, 1.0)`.
pub fn random_h_free_chordal(n: usize, patterns: &[Graph], seed: u64, max_tries: usize) -> Option<Graph> {
    let mut rng = rng(seed);
    for _ in 0..max_tries {
        let bias = rng.gen_range(0.3..1.0);
        let g = random_chordal(n, bias, rng.gen());
        match is_free_of_all(&g, patterns) {
            Ok(Ok(())) => return Some(g),
            Ok(Err(_)) => continue,
            Err(_) => return None,
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named;
    use crate::chordal::is_chordal;
    use crate::eds::{brute_force_wed, is_eds};
    use crate::graph::WeightMap;

    #[test]
    fn reduction_shape() {
        let inst = X3cInstance::new(3, vec![[0, 1, 2]]).unwrap();
        let red = x3c_to_graph(&inst);
        assert_eq!(red.graph.n(), 5);
        assert_eq!(
            red.roles,
            vec![
                Role::Universe(0),
                Role::Universe(1),
                Role::Universe(2),
                Role::Triple(0),
                Role::Pendant(0),
            ]
        );
        assert!(is_eds(&red.graph, &[3]));
        assert_eq!(red.cover_to_eds(&[0]), vec![3]);
    }

    #[test]
    fn reduction_examples() {
        let inst = X3cInstance::new(6, vec![[0, 1, 2], [3, 4, 5]]).unwrap();
        let red = x3c_to_graph(&inst);
        assert!(is_eds(&red.graph, &red.cover_to_eds(&[0, 1])));
        let sol = brute_force_wed(&red.graph, &WeightMap::unit(10)).unwrap().unwrap();
        assert_eq!(sol.set, vec![6, 7]);

        // With element 5 in no triple the reduction graph still has an e.d.s.
        let inst = X3cInstance::new(6, vec![[0, 1, 2], [2, 3, 4]]).unwrap();
        let red = x3c_to_graph(&inst);
        let sol = brute_force_wed(&red.graph, &WeightMap::unit(10)).unwrap().unwrap();
        assert_eq!(sol.set, vec![5, 8, 9]);
        // once every element is covered the equivalence is restored
        let inst = X3cInstance::new(6, vec![[0, 1, 2], [1, 3, 4], [2, 4, 5]]).unwrap();
        let red = x3c_to_graph(&inst);
        assert_eq!(brute_force_wed(&red.graph, &WeightMap::unit(12)).unwrap(), None);
    }

    #[test]
    fn degrees_in_reduction() {
        let inst = X3cInstance::new(6, vec![[0, 1, 2], [2, 3, 4], [1, 3, 5]]).unwrap();
        let red = x3c_to_graph(&inst);
        for (v, role) in red.roles.iter().enumerate() {
            match role {
                Role::Triple(_) => assert_eq!(red.graph.degree(v), 4),
                Role::Pendant(_) => assert_eq!(red.graph.degree(v), 1),
                Role::Universe(_) => assert!(red.graph.degree(v) >= 5),
            }
        }
        assert_eq!(red.graph.n(), 6 + 2 * 3);
    }

    #[test]
    fn interval_graphs() {
        let g = random_interval_graph(40, 0.05, 7);
        assert!(is_chordal(&g));
        assert_eq!(g, random_interval_graph(40, 0.05, 7));
        assert_ne!(g, random_interval_graph(40, 0.05, 8));
        let net = named("net").unwrap();
        for seed in 0..30 {
            let g = random_interval_graph(16, 0.1, seed);
            assert!(is_free_of_all(&g, std::slice::from_ref(&net)).unwrap().is_ok());
        }
    }

    #[test]
    fn chordal_generator_extremes() {
        for seed in 0..20 {
            assert!(is_chordal(&random_chordal(15, 0.6, seed)));
        }
        assert_eq!(random_chordal(10, 0.0, 3).m(), 0);
        assert_eq!(random_chordal(8, 1.0, 3).m(), 28);
    }

    #[test]
    fn h_free_rejection() {
        let net = named("net").unwrap();
        assert!(random_h_free_chordal(3, std::slice::from_ref(&net), 1, 1).is_some());
        let eg = named("extended_gem").unwrap();
        let g = random_h_free_chordal(14, std::slice::from_ref(&eg), 5, 200).unwrap();
        assert!(is_free_of_all(&g, &[eg]).unwrap().is_ok());
    }
}
