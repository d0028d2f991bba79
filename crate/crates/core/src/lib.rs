//! Redei permutations of the projective line over odd-characteristic finite fields.
//!
//! The crate decides which Redei functions `R_{n,a}` permute `P^1(F_q)` with
//! only fixed points and cycles of one length `j` (for `j = 2`, `j = 4`, and
//! odd primes `j`), counts them, and constructs every exponent `n` that works.
//!
//! - [`intmod`]: factorization, orders, CRT, modular square roots, Hensel lifting.
//! - [`ffield`]: `F_{p^k}` arithmetic, the quadratic character, and `P^1(F_q)`.
//! - [`redei`]: evaluation of `R_{n,a}` and its cycle structure, both predicted and walked.
//! - [`structure`]: admissible divisors, counting formulas, constructors, tables.

pub mod error;
pub mod ffield;
pub mod intmod;
pub mod redei;
pub mod structure;

pub use error::{Error, Result};
pub use ffield::{Chi, FieldElement, FieldSpec, ProjPoint};
pub use intmod::Factorization;
pub use redei::{CycleStructure, RedeiSpec};
pub use structure::{AdmissibleQuery, ConstructionRow, TableReport};
