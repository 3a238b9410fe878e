mod common;

use common::{all_eds, brute_mwis, random_weights, rng};
use rand::Rng;
use wed_core::generate::{random_chordal, random_h_free_chordal, random_interval_graph};
use wed_core::square::BigMWeights;
use wed_core::*;

fn same_answer(a: &Option<EdsSolution>, b: &Option<EdsSolution>) -> bool {
    match (a, b) {
        (None, None) => true,
        (Some(x), Some(y)) => x.weight == y.weight,
        _ => false,
    }
}

#[test]
fn square_engine_matches_brute_force_on_interval_graphs() {
    for seed in 0..150 {
        let mut r = rng(seed);
        let n = r.gen_range(1..=16);
        let g = random_interval_graph(n, r.gen_range(0.01..0.3), seed);
        let w = random_weights(&mut r, n, 1, 9);
        let fast = wed_via_square(&g, &w).unwrap();
        let slow = brute_force_wed(&g, &w).unwrap();
        assert!(same_answer(&fast, &slow), "seed {seed}: {fast:?} vs {slow:?}");
        if let Some(sol) = fast {
            assert!(is_eds(&g, &sol.set));
            assert_eq!(sol.engine, Engine::Square);
        }
    }
}

#[test]
fn big_m_optimum_is_shifted_minimum() {
    for seed in 0..500 {
        let mut r = rng(seed);
        let n = r.gen_range(2..=18);
        let g = random_interval_graph(n, r.gen_range(0.02..0.2), seed + 1000);
        let w = random_weights(&mut r, n, 1, 9);
        let big = BigMWeights::new(&g, &w);
        let sub = square(&g).induced_subgraph(&big.selectable);
        let (_, opt) = mwis_chordal(&sub.graph, &big.combined).unwrap();
        let threshold = big.threshold(n, &w);
        match brute_force_wed(&g, &w).unwrap() {
            Some(sol) => assert_eq!(opt, &big.big_m * ExactWeight::from(n) - sol.weight),
            None => assert!(opt < threshold),
        }
    }
}

#[test]
fn square_independent_sets_pack_neighborhoods() {
    for seed in 0..40 {
        let mut r = rng(seed);
        let n = r.gen_range(2..=10);
        let g = random_chordal(n, r.gen_range(0.2..0.9), seed);
        let sq = square(&g);
        let eds: Vec<u32> = all_eds(&g)
            .iter()
            .map(|s| s.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        for s in 0u32..1 << n {
            let set: Vec<usize> = (0..n).filter(|&v| s & 1 << v != 0).collect();
            if !sq.is_independent(&set) {
                continue;
            }
            let covered: usize = set.iter().map(|&v| g.degree(v) + 1).sum();
            assert!(covered <= n);
            assert_eq!(covered == n, eds.contains(&s), "seed {seed} set {set:?}");
        }
    }
}

#[test]
fn s123_engine_matches_brute_force() {
    let s123 = named("S1_2_3").unwrap();
    let mut checked = 0;
    for seed in 0..200 {
        let mut r = rng(seed);
        let n = r.gen_range(1..=16);
        let Some(g) = random_h_free_chordal(n, std::slice::from_ref(&s123), seed, 300) else {
            continue;
        };
        let w = random_weights(&mut r, n, 1, 9);
        let fast = s123_wed(&g, &w).unwrap();
        let slow = brute_force_wed(&g, &w).unwrap();
        assert!(same_answer(&fast, &slow), "seed {seed}: {fast:?} vs {slow:?}");
        checked += 1;
    }
    assert!(checked >= 150);
}

#[test]
fn s123_engine_handles_infinite_weights() {
    let s123 = named("S1_2_3").unwrap();
    for seed in 0..300 {
        let mut r = rng(seed);
        let n = r.gen_range(4..=14);
        let g = random_chordal(n, r.gen_range(0.15..0.8), seed);
        if contains_induced(&g, &s123).unwrap() {
            continue;
        }
        let w = WeightMap::from_weights(
            (0..n)
                .map(|_| {
                    if r.gen_bool(0.15) {
                        Weight::Infinite
                    } else {
                        Weight::finite(r.gen_range(1..=9)).unwrap()
                    }
                })
                .collect(),
        );
        let fast = s123_wed(&g, &w).unwrap();
        let slow = brute_force_wed(&g, &w).unwrap();
        assert!(same_answer(&fast, &slow), "seed {seed}");
        if let Some(sol) = fast {
            assert!(sol.set.iter().all(|&v| w.is_finite(v)));
        }
    }
}

#[test]
fn s123_engine_is_sound_outside_its_class() {
    for seed in 0..400 {
        let mut r = rng(seed);
        let n = r.gen_range(4..=14);
        let g = random_chordal(n, r.gen_range(0.2..0.9), seed + 77);
        let w = random_weights(&mut r, n, 1, 9);
        let slow = brute_force_wed(&g, &w).unwrap();
        match s123_wed(&g, &w).unwrap() {
            Some(sol) => {
                assert!(is_eds(&g, &sol.set));
                assert_eq!(Some(sol.weight), slow.map(|s| s.weight), "seed {seed}");
            }
            None => assert!(slow.is_none() || contains_induced(&g, &named("S1_2_3").unwrap()).unwrap()),
        }
    }
}

#[test]
fn engines_agree_on_net_free_s123_free_graphs() {
    let s123 = named("S1_2_3").unwrap();
    let mut checked = 0;
    for seed in 0..300 {
        let mut r = rng(seed);
        let n = r.gen_range(2..=16);
        let g = random_interval_graph(n, 0.06, seed);
        if contains_induced(&g, &s123).unwrap() {
            continue;
        }
        let w = random_weights(&mut r, n, 1, 9);
        let a = wed_via_square(&g, &w).unwrap();
        let b = s123_wed(&g, &w).unwrap();
        assert!(same_answer(&a, &b), "seed {seed}");
        checked += 1;
    }
    assert!(checked >= 100);
}

#[test]
fn maximal_roots_give_cheapest_eds_through_them() {
    let s123 = named("S1_2_3").unwrap();
    for seed in 0..150 {
        let mut r = rng(seed);
        let n = r.gen_range(2..=12);
        let Some(g) = random_h_free_chordal(n, std::slice::from_ref(&s123), seed, 200) else {
            continue;
        };
        if !g.is_connected() {
            continue;
        }
        let w = random_weights(&mut r, n, 1, 9);
        let poset = s123::neighborhood_poset(&g);
        let eds = all_eds(&g);
        for v in poset.maximal() {
            let expected = eds.iter().filter(|s| s.contains(&v)).map(|s| w.total(s)).min();
            let got = v_maximal_wed(&g, &w, v).unwrap().map(|s| s.weight);
            assert_eq!(got, expected, "seed {seed} root {v}");
        }
    }
}

#[test]
fn mwis_matches_enumeration_with_signed_weights() {
    for seed in 0..200 {
        let mut r = rng(seed);
        let n = r.gen_range(1..=13);
        let g = random_chordal(n, r.gen_range(0.1..1.0), seed);
        let w: Vec<i64> = (0..n).map(|_| r.gen_range(-9..=9)).collect();
        let exact: Vec<ExactWeight> = w.iter().map(|&x| x.into()).collect();
        let (set, total) = mwis_chordal(&g, &exact).unwrap();
        assert!(g.is_independent(&set));
        assert_eq!(total, set.iter().map(|&v| w[v]).sum::<i64>().into());
        assert_eq!(total, brute_mwis(&g, &w).into(), "seed {seed}");
    }
}

type Solver = fn(&Graph, &WeightMap) -> Result<Option<EdsSolution>>;

fn random_graph(r: &mut rand_chacha::ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

#[test]
fn brute_force_has_no_lighter_rival() {
    for seed in 0..300 {
        let mut r = rng(seed);
        let n = r.gen_range(1..=14);
        let p = r.gen_range(0.05..0.6);
        let g = random_graph(&mut r, n, p);
        let mut w = random_weights(&mut r, n, 0, 9);
        for v in 0..n {
            if r.gen_bool(0.15) {
                w.set(v, Weight::Infinite);
            }
        }
        let best = all_eds(&g)
            .into_iter()
            .filter(|d| d.iter().all(|&v| w.is_finite(v)))
            .map(|d| {
                d.iter()
                    .map(|&v| w.get(v).as_finite().unwrap().clone())
                    .sum::<ExactWeight>()
            })
            .min();
        let got = brute_force_wed(&g, &w).unwrap();
        assert_eq!(got.as_ref().map(|s| s.weight.clone()), best, "seed {seed}");
        if let Some(sol) = got {
            assert!(is_eds(&g, &sol.set));
        }
    }
}

#[test]
fn unit_weight_solutions_partition_the_vertices() {
    for seed in 0..300 {
        let mut r = rng(seed);
        let n = r.gen_range(1..=18);
        let p = r.gen_range(0.05..0.5);
        let g = random_graph(&mut r, n, p);
        if let Some(sol) = brute_force_wed(&g, &WeightMap::unit(n)).unwrap() {
            let covered: usize = sol.set.iter().map(|&d| g.degree(d) + 1).sum();
            assert_eq!(covered, n, "seed {seed}");
            assert_eq!(sol.weight, ExactWeight::from(sol.set.len()));
            if n <= 14 {
                let smallest = all_eds(&g).iter().map(Vec::len).min();
                assert_eq!(Some(sol.set.len()), smallest, "seed {seed}");
            }
        }
    }
}

#[test]
fn scaling_weights_scales_the_optimum() {
    let s123 = named("S1_2_3").unwrap();
    for seed in 0..150 {
        let mut r = rng(seed);
        let n = r.gen_range(1..=14);
        let Some(g) = random_h_free_chordal(n, std::slice::from_ref(&s123), seed, 500) else {
            continue;
        };
        let raw: Vec<u32> = (0..n).map(|_| r.gen_range(1..=9)).collect();
        let c = r.gen_range(2..=50u32);
        let w = WeightMap::from_finite(&raw).unwrap();
        let scaled = WeightMap::from_finite(&raw.iter().map(|x| x * c).collect::<Vec<_>>()).unwrap();
        let engines: [Solver; 2] = [brute_force_wed, s123_wed];
        for engine in engines {
            let a = engine(&g, &w).unwrap().map(|s| s.weight * ExactWeight::from(c));
            let b = engine(&g, &scaled).unwrap().map(|s| s.weight);
            assert_eq!(a, b, "seed {seed}");
        }
    }
}
