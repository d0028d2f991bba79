use super::{check_admissible, AdmissibleQuery, CycleKind};
use crate::error::Result;
use crate::ffield::Chi;
use crate::intmod::Factorization;

/// Primes `r = 1 (mod modulus)` dividing `q - chi` and, when `d` is given, not dividing `d`.
fn count_primes_one_mod(qminus: &Factorization, modulus: u64, d: Option<u64>) -> u32 {
    qminus
        .primes()
        .filter(|&r| r % modulus == 1 && d.is_none_or(|d| d % r != 0))
        .count() as u32
}

/// Number of exponents `n` (mod `q - chi`) giving `d + chi + 1` fixed points and `j`-cycles.
pub fn count_md(query: &AdmissibleQuery, d: u64) -> Result<u64> {
    check_admissible(query, d)?;
    let qminus = query.qminus();
    Ok(match query.kind() {
        CycleKind::Involution => {
            let alpha0 = qminus.exponent(2);
            let v = d.trailing_zeros();
            if v == 1 && alpha0 >= 3 {
                2
            } else {
                1
            }
        }
        CycleKind::Four => 2u64.pow(count_primes_one_mod(qminus, 4, Some(d))),
        CycleKind::OddPrime(p) => {
            let u = count_primes_one_mod(qminus, p, Some(d));
            let alpha = qminus.exponent(p);
            let beta = {
                let mut d = d;
                let mut b = 0;
                while d % p == 0 {
                    d /= p;
                    b += 1;
                }
                b
            };
            if alpha >= 1 && beta + 1 == alpha {
                (p - 1).pow(u + 1)
            } else {
                (p - 1).pow(u)
            }
        }
    })
}

/// Total number of non-identity Redei permutations with `1`- and `j`-cycles for one `a`.
pub fn count_m(qminus: &Factorization, _chi: Chi, j: u64) -> Result<u64> {
    Ok(match CycleKind::from_length(j)? {
        CycleKind::Involution => {
            let r = qminus.primes().filter(|&p| p != 2).count() as u32;
            match qminus.exponent(2) {
                0 => 0,
                1 => 2u64.pow(r) - 1,
                2 => 2u64.pow(r + 1) - 1,
                _ => 2u64.pow(r + 2) - 1,
            }
        }
        CycleKind::Four => 3u64.pow(count_primes_one_mod(qminus, 4, None)) - 1,
        CycleKind::OddPrime(p) => {
            let r = count_primes_one_mod(qminus, p, None);
            if qminus.exponent(p) >= 2 {
                p.pow(r + 1) - 1
            } else {
                p.pow(r) - 1
            }
        }
    })
}
