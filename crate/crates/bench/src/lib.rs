//! Seeded benchmark fixtures.

use wed_core::generate::{random_chordal, random_h_free_chordal, random_interval_graph};
use wed_core::{named, ExactWeight, Graph, WeightMap};

/// Deterministic weights in `1..=9`.
pub fn weights(n: usize, seed: u64) -> WeightMap {
    let w: Vec<u64> = (0..n as u64).map(|v| (v * 7 + seed * 13) % 9 + 1).collect();
    WeightMap::from_finite(&w).expect("positive weights")
}

/// Deterministic signed weights in `-9..=9`.
pub fn signed_weights(n: usize, seed: u64) -> Vec<ExactWeight> {
    (0..n as i64)
        .map(|v| ExactWeight::from((v * 11 + seed as i64 * 5) % 19 - 9))
        .collect()
}

pub fn interval(n: usize, seed: u64) -> (Graph, WeightMap) {
    (random_interval_graph(n, 0.05, seed), weights(n, seed))
}

pub fn chordal(n: usize, seed: u64) -> Graph {
    random_chordal(n, 0.5, seed)
}

/// An S1_2_3-free chordal graph on `n` vertices; tries consecutive seeds
/// until the generator succeeds.
pub fn s123_free(n: usize, seed: u64) -> (Graph, WeightMap) {
    let s123 = named("S1_2_3").expect("catalog graph");
    (seed..)
        .find_map(|s| random_h_free_chordal(n, std::slice::from_ref(&s123), s, 200))
        .map(|g| (g, weights(n, seed)))
        .expect("generator eventually succeeds")
}
