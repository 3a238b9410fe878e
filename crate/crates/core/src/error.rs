use thiserror::Error;

/// Errors produced by graph construction, parsing and the WED engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown catalog graph `{0}`")]
    UnknownGraph(String),

    #[error("order is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },

    #[error("input graph is not chordal (hole {hole:?})")]
    InputNotChordal { hole: Vec<usize> },

    #[error("square of the candidate graph is not chordal (hole {hole:?}); engine inapplicable")]
    SquareNotChordal { hole: Vec<usize> },

    #[error("{what} has {size} elements, limit is {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("vertex {0} is not a maximal element of the neighborhood order")]
    NotMaximal(usize),

    #[error("level structure violation at vertex {vertex}: {kind}")]
    StructureViolation {
        vertex: usize,
        kind: StructureViolationKind,
    },

    #[error("reconstructed set {set:?} is not an efficient dominating set")]
    VerificationFailure { set: Vec<usize> },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid X3C instance: {0}")]
    InvalidInstance(String),
}

/// Which part of the level-tree contract failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureViolationKind {
    /// The vertex's neighbors one level up do not form a clique; the
    /// two listed vertices are non-adjacent.
    ParentsNotClique(usize, usize),
    /// The vertex's component touches two components one level up.
    ComponentHasTwoParents,
}

impl std::fmt::Display for StructureViolationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructureViolationKind::ParentsNotClique(a, b) => {
                write!(f, "upper neighbors {a} and {b} are non-adjacent")
            }
            StructureViolationKind::ComponentHasTwoParents => {
                write!(f, "component contacts two components of the previous level")
            }
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
