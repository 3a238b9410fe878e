#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wed_core::{ExactWeight, Graph, WeightMap};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_weights(rng: &mut ChaCha8Rng, n: usize, lo: u32, hi: u32) -> WeightMap {
    let w: Vec<u32> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    WeightMap::from_finite(&w).unwrap()
}

/// Maximum weight independent set by subset enumeration.
pub fn brute_mwis(g: &Graph, weights: &[i64]) -> i64 {
    let n = g.n();
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let mut best = 0;
    for s in 0u32..1 << n {
        let independent = (0..n).all(|v| s & 1 << v == 0 || masks[v] & s == 0);
        if independent {
            let w: i64 = (0..n).filter(|&v| s & 1 << v != 0).map(|v| weights[v]).sum();
            best = best.max(w);
        }
    }
    best
}

/// All-pairs BFS distances (`usize::MAX` when unreachable).
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices()
        .map(|s| {
            let levels = g.bfs_levels(s);
            levels.level_of.iter().map(|l| l.unwrap_or(usize::MAX)).collect()
        })
        .collect()
}

/// Every e.d.s. of a small graph by subset enumeration.
pub fn all_eds(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    (0u32..1 << n)
        .map(|s| (0..n).filter(|&v| s & 1 << v != 0).collect::<Vec<_>>())
        .filter(|set| wed_core::is_eds(g, set))
        .collect()
}

pub fn big(v: i64) -> ExactWeight {
    ExactWeight::from(v)
}
