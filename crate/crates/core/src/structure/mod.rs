//! Redei permutations whose nontrivial cycles all have one length `j`.
//!
//! For `chi` and `q - chi = m`, a divisor `d` of `m` is *admissible* for `j` when
//! some `R_{n,a}` with `chi(a) = chi` has exactly `d + chi + 1` fixed points and
//! every other cycle of length `j`. This module tests admissibility, counts the
//! exponents `n` (modulo `m`) for each admissible `d`, and constructs them.
//!
//! Supported lengths are `j = 2`, `j = 4`, and odd primes.

mod admissible;
mod construct;
mod counting;
mod table;

use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::ffield::Chi;
use crate::intmod::{factorize, is_prime, Factorization};

pub use admissible::{admissible_divisors, check_admissible, exists_1j, is_admissible};
pub use construct::{
    construct, construct_4_cycles, construct_involutions, construct_p_cycles,
    five_cycles_by_square_roots, involutions_four_fixed, involutions_two_fixed, lagrange_3cycles,
    three_cycles_by_square_roots,
};
pub use counting::{count_m, count_md};
pub use table::{build_table, odd_primes_with_cycles, ConstructionRow, TableReport};

/// The cycle-length families the characterization covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleKind {
    Involution,
    Four,
    OddPrime(u64),
}

impl CycleKind {
    pub fn from_length(j: u64) -> Result<Self> {
        match j {
            2 => Ok(CycleKind::Involution),
            4 => Ok(CycleKind::Four),
            p if p > 2 && is_prime(p) => Ok(CycleKind::OddPrime(p)),
            other => Err(Error::domain(
                "cycle length",
                format!("j = {other} is not 2, 4, or an odd prime"),
            )),
        }
    }

    pub fn length(self) -> u64 {
        match self {
            CycleKind::Involution => 2,
            CycleKind::Four => 4,
            CycleKind::OddPrime(p) => p,
        }
    }
}

/// `(q - chi, chi, j)` with `2 <= j < q - chi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleQuery {
    qminus: Factorization,
    chi: Chi,
    kind: CycleKind,
}

impl AdmissibleQuery {
    pub fn new(qminus: Factorization, chi: Chi, j: u64) -> Result<Self> {
        let kind = CycleKind::from_length(j)?;
        let m = qminus.value();
        if m < 2 || m % 2 != 0 {
            return Err(Error::domain(
                "admissible query",
                format!("q - chi = {m} must be even"),
            ));
        }
        if j >= m {
            return Err(Error::domain(
                "admissible query",
                format!("cycle length {j} must be below q - chi = {m}"),
            ));
        }
        Ok(AdmissibleQuery { qminus, chi, kind })
    }

    pub fn for_order(q: u64, chi: Chi, j: u64) -> Result<Self> {
        if q < 3 || q % 2 == 0 {
            return Err(Error::domain(
                "admissible query",
                format!("q = {q} must be odd"),
            ));
        }
        Self::new(factorize(chi.q_minus(q))?, chi, j)
    }

    pub fn qminus(&self) -> &Factorization {
        &self.qminus
    }

    pub fn modulus(&self) -> u64 {
        self.qminus.value()
    }

    pub fn chi(&self) -> Chi {
        self.chi
    }

    pub fn q(&self) -> u64 {
        match self.chi {
            Chi::Plus => self.modulus() + 1,
            Chi::Minus => self.modulus() - 1,
        }
    }

    pub fn j(&self) -> u64 {
        self.kind.length()
    }

    pub fn kind(&self) -> CycleKind {
        self.kind
    }
}

/// The admissibility clause a divisor violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Clause {
    NotProperDivisor,
    Odd,
    TwoAdic {
        found: u32,
        allowed: Vec<u32>,
    },
    CommonFactor {
        gcd: u64,
        must_divide: u64,
    },
    PrimeExponent {
        prime: u64,
        found: u32,
        allowed: Vec<u32>,
    },
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| {
            v.iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" or ")
        };
        match self {
            Clause::NotProperDivisor => write!(f, "d must be a proper divisor of q - chi"),
            Clause::Odd => write!(f, "d must be even"),
            Clause::TwoAdic { found, allowed } => {
                write!(f, "nu_2(d) = {found} but must be {}", list(allowed))
            }
            Clause::CommonFactor { gcd, must_divide } => {
                write!(f, "gcd(d, (q - chi)/d) = {gcd} must divide {must_divide}")
            }
            Clause::PrimeExponent {
                prime,
                found,
                allowed,
            } => {
                write!(f, "nu_{prime}(d) = {found} but must be {}", list(allowed))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("d = {d} is not ({q}, {chi}, {j})-admissible: {clause}")]
pub struct Inadmissible {
    pub q: u64,
    pub chi: Chi,
    pub j: u64,
    pub d: u64,
    pub clause: Clause,
}
