//! Exact integer and modular arithmetic on `u64` values.
//!
//! Every operation is a pure function; multiplication goes through `u128` so
//! moduli up to `2^63` are safe.

mod arith;
mod crt;
mod factor;
mod roots;

pub use arith::{ext_gcd, gcd, inv_mod, lcm, mul_mod, poly_eval_mod, pow_mod, reduce};
pub use crt::{crt, Congruence, CongruenceSystem};
pub use factor::{
    euler_phi, factorize, is_prime, mult_order, prime_power, valuation, Factorization,
};
pub use roots::{cyclotomic_prime, hensel_lift, phi_p_roots, sqrt_mod, sqrt_mod_prime};

pub(crate) use crt::lifts;
pub(crate) use roots::combine_root_sets;
