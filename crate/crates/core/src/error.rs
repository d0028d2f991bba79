use thiserror::Error;

use crate::intmod::Congruence;
use crate::structure::Inadmissible;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input outside the operation's domain.
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("inconsistent congruences: x = {} (mod {}) conflicts with x = {} (mod {})",
        .first.residue, .first.modulus, .second.residue, .second.modulus)]
    Inconsistent {
        first: Congruence,
        second: Congruence,
    },

    #[error("unsupported modulus {0}")]
    UnsupportedModulus(u64),

    #[error("cannot lift root {root}: derivative vanishes modulo {prime}")]
    NonSimpleRoot { root: u64, prime: u64 },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("R_{{{n},a}} is not a permutation: gcd({n}, {modulus}) != 1")]
    NotPermutation { n: u64, modulus: u64 },

    #[error("cycle walk integrity failure: {0}")]
    Integrity(String),

    #[error(transparent)]
    Inadmissible(#[from] Inadmissible),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}
