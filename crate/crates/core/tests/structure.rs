mod common;

use common::{distances, rng};
use rand::Rng;
use wed_core::eds::X3cInstance;
use wed_core::generate::{random_chordal, random_h_free_chordal, random_interval_graph, x3c_to_graph};
use wed_core::s123::{first_level_has_non_neighbors, neighborhood_poset, true_twins};
use wed_core::*;

fn has_eds(g: &Graph) -> bool {
    brute_force_wed(g, &WeightMap::unit(g.n())).unwrap().is_some()
}

#[test]
fn squares_of_net_free_chordal_graphs_with_eds_are_chordal() {
    let net = named("net").unwrap();
    let mut hits = 0;
    for seed in 0..400 {
        let mut r = rng(seed);
        let g = random_chordal(r.gen_range(3..=14), r.gen_range(0.2..0.9), seed);
        if contains_induced(&g, &net).unwrap() || !has_eds(&g) {
            continue;
        }
        hits += 1;
        assert!(square_chordality_report(&g).square_chordal, "seed {seed}");
    }
    assert!(hits >= 50);
}

#[test]
fn squares_of_extended_gem_free_chordal_graphs_with_eds_are_chordal() {
    let eg = named("extended_gem").unwrap();
    let mut hits = 0;
    for seed in 0..400 {
        let mut r = rng(seed);
        let g = random_chordal(r.gen_range(3..=14), r.gen_range(0.2..0.9), seed + 5000);
        if contains_induced(&g, &eg).unwrap() || !has_eds(&g) {
            continue;
        }
        hits += 1;
        assert!(square_chordality_report(&g).square_chordal, "seed {seed}");
    }
    assert!(hits >= 50);
}

#[test]
fn square_matches_distance_table() {
    for seed in 0..60 {
        let mut r = rng(seed);
        let g = random_chordal(r.gen_range(1..=15), r.gen_range(0.1..0.9), seed);
        let d = distances(&g);
        let sq = square(&g);
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(sq.has_edge(u, v), u != v && d[u][v] <= 2);
            }
        }
    }
}

#[test]
fn extended_gem_containments() {
    let eg = named("extended_gem").unwrap();
    assert!(is_chordal(&eg));
    for h in ["S1_2_2", "gem", "chair", "co_P", "K3+P2"] {
        let pattern = named(h).unwrap();
        let emb = find_induced(&eg, &pattern).unwrap().unwrap_or_else(|| panic!("{h}"));
        assert!(emb.is_valid(&eg, &pattern));
    }
    assert_eq!(lookup("extended_gem").unwrap().source, Source::DerivedFromProof);
}

#[test]
fn level_trees_of_chordal_graphs_are_trees() {
    for seed in 0..100 {
        let mut r = rng(seed);
        let g = random_chordal(r.gen_range(1..=16), r.gen_range(0.1..0.9), seed);
        for v in g.vertices() {
            let t = component_tree(&g, v).unwrap();
            let reached = t.reached();
            assert!(reached.iter().all(|&u| t.levels.level_of[u].is_some()));
            for (k, node) in t.nodes.iter().enumerate().skip(1) {
                let p = node.parent.unwrap();
                assert_eq!(t.nodes[p].level + 1, node.level);
                assert!(t.nodes[p].children.contains(&k));
            }
        }
    }
}

#[test]
fn neighborhood_order_is_a_strict_partial_order() {
    for seed in 0..100 {
        let mut r = rng(seed);
        let g = random_chordal(r.gen_range(1..=14), r.gen_range(0.2..1.0), seed);
        let p = neighborhood_poset(&g);
        for v in g.vertices() {
            assert!(!p.z_minus[v].contains(&v));
            for &u in &p.z_minus[v] {
                assert!(p.z_plus[u].contains(&v));
                assert!(!p.z_minus[u].contains(&v));
                for &w in &p.z_minus[u] {
                    assert!(p.z_minus[v].contains(&w));
                }
            }
        }
        assert!(g.n() == 0 || p.maximal().count() > 0);
    }
}

#[test]
fn twin_free_maximal_roots_see_non_neighbors() {
    let s123 = named("S1_2_3").unwrap();
    for seed in 0..120 {
        let mut r = rng(seed);
        let Some(g) = random_h_free_chordal(r.gen_range(2..=14), std::slice::from_ref(&s123), seed, 200) else {
            continue;
        };
        let p = neighborhood_poset(&g);
        for v in p.maximal() {
            let twin_free = true_twins(&g, v).is_empty();
            if g.degree(v) > 0 {
                assert_eq!(first_level_has_non_neighbors(&g, v), twin_free, "seed {seed} v {v}");
            }
        }
    }
}

#[test]
fn interval_graphs_are_net_free_chordal() {
    let net = named("net").unwrap();
    for seed in 0..100 {
        let g = random_interval_graph(14, 0.1, seed);
        assert!(is_chordal(&g));
        assert!(!contains_induced(&g, &net).unwrap());
    }
}

#[test]
fn reduction_graphs_stay_in_their_class() {
    let patterns: Vec<Graph> = ["2P3", "K3+P3", "2K3", "butterfly"]
        .iter()
        .map(|h| named(h).unwrap())
        .collect();
    let inst = X3cInstance::new(9, vec![[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7]]).unwrap();
    let red = x3c_to_graph(&inst);
    assert!(is_chordal(&red.graph));
    assert!(is_free_of_all(&red.graph, &patterns).unwrap().is_ok());
    assert!(is_eds(
        &red.graph,
        &red.cover_to_eds(&x3c_solve(&inst).unwrap().unwrap())
    ));
}
