use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// The ring axiom a table failed, reported together with a witness triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AdditiveAssociativity,
    AdditiveCommutativity,
    AdditiveIdentity,
    AdditiveInverse,
    MultiplicativeAssociativity,
    MultiplicativeIdentity,
    LeftDistributivity,
    RightDistributivity,
    ZeroEqualsOne,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveInverse => "additive inverse",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::MultiplicativeIdentity => "multiplicative identity",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
            Axiom::ZeroEqualsOne => "zero equals one in a nontrivial ring",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupAxiom {
    Associativity,
    Identity,
    Inverse,
}

impl fmt::Display for GroupAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupAxiom::Associativity => "associativity",
            GroupAxiom::Identity => "identity",
            GroupAxiom::Inverse => "inverse",
        };
        f.write_str(s)
    }
}

/// Diagnostic for a rejected ring expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source text.
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: expected ", self.offset)?;
        match self.expected.as_slice() {
            [] => f.write_str("nothing")?,
            [one] => f.write_str(one)?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        match &self.found {
            Some(tok) => write!(f, ", found {tok:?}"),
            None => f.write_str(", found end of input"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring axiom violated ({kind}) at witness ({}, {}, {})", witness[0], witness[1], witness[2])]
    AxiomViolation { kind: Axiom, witness: [usize; 3] },

    #[error("table entry {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("construction needs {requested} elements, exceeding the order cap {cap}")]
    SizeExceeded { requested: u128, cap: usize },

    #[error("element {s} is not central")]
    NotCentral { s: usize },

    #[error("element set is not a two-sided ideal")]
    NotAnIdeal,

    #[error("element {e} is not idempotent")]
    NotIdempotent { e: usize },

    #[error("group axiom violated ({kind}) at witness ({}, {}, {})", witness[0], witness[1], witness[2])]
    GroupAxiomViolation { kind: GroupAxiom, witness: [usize; 3] },

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error("ring was not built as a group ring")]
    NotAGroupRing,

    #[error("element index {index} out of range for ring of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("catalog is empty")]
    EmptyCatalog,

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
