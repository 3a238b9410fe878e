use std::str::FromStr;

use serde::Serialize;
use serde_json::Number;
use sha2::{Digest, Sha256};
use wed_core::{Error, ExactWeight};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    /// Solved, or the checked property holds.
    Yes = 0,
    /// No e.d.s., or the checked property fails.
    No = 1,
    Inapplicable = 2,
    Error = 3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Solved,
    NoEds,
    Inapplicable,
    Error,
}

impl Status {
    pub fn exit(self) -> Exit {
        match self {
            Status::Solved => Exit::Yes,
            Status::NoEds => Exit::No,
            Status::Inapplicable => Exit::Inapplicable,
            Status::Error => Exit::Error,
        }
    }
}

/// Result of one `eds` run.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engine: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exists: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub square_chordal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_kind: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl RunReport {
    pub fn new(command: String, input_digest: String) -> Self {
        RunReport {
            command,
            input_digest,
            engine: None,
            status: Status::Error,
            exists: None,
            weight: None,
            set: None,
            square_chordal: None,
            error_kind: None,
            error: None,
            timing_ms: None,
            seed: None,
        }
    }

    pub fn fail(&mut self, err: &Error) {
        self.status = Status::Error;
        self.error_kind = Some(error_kind(err));
        self.error = Some(err.to_string());
    }
}

/// Stable short name of an error variant.
pub fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::VertexOutOfRange { .. } => "vertex-out-of-range",
        Error::SelfLoop(_) => "self-loop",
        Error::Parse { .. } => "parse",
        Error::UnknownGraph(_) => "unknown-graph",
        Error::NotAPermutation { .. } => "not-a-permutation",
        Error::InputNotChordal { .. } => "input-not-chordal",
        Error::SquareNotChordal { .. } => "square-not-chordal",
        Error::TooLarge { .. } => "too-large",
        Error::NotMaximal(_) => "not-maximal",
        Error::StructureViolation { .. } => "structure-violation",
        Error::VerificationFailure { .. } => "verification-failure",
        Error::InvalidWeight(_) => "invalid-weight",
        Error::InvalidInstance(_) => "invalid-instance",
    }
}

/// Exact JSON number for an arbitrary precision weight.
pub fn json_number(w: &ExactWeight) -> Number {
    Number::from_str(&w.to_string()).expect("integers are valid JSON numbers")
}

/// Hex SHA-256 over the concatenated inputs.
pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p);
    }
    hex::encode(h.finalize())
}
