//! Weighted efficient domination on chordal graphs.
//!
//! Graph and weight types, chordality tools, induced subgraph detection,
//! an exact reference solver and two polynomial engines: one through the
//! square of the graph and one for S₁,₂,₃-free chordal graphs.

pub mod catalog;
pub mod chordal;
pub mod eds;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod induced;
pub mod s123;
pub mod square;

pub use catalog::{lookup, named, NamedGraph, Source};
pub use chordal::{chordality, is_chordal, is_peo, lex_bfs, mwis_chordal, ChordalityReport, EliminationOrder};
pub use eds::{brute_force_wed, is_eds, x3c_solve, EdsSolution, Engine, X3cInstance};
pub use error::{Error, Result, StructureViolationKind};
pub use graph::{ExactWeight, Graph, InducedSubgraph, LevelStructure, Weight, WeightMap};
pub use induced::{contains_induced, find_induced, is_free_of_all, Embedding, Violation};
pub use s123::{component_tree, compute_candidates, neighborhood_poset, s123_wed, v_maximal_wed};
pub use square::{square, square_chordality_report, wed_via_square, BigMWeights, SquareResult};
