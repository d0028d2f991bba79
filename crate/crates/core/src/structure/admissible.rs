use super::{AdmissibleQuery, Clause, CycleKind, Inadmissible};
use crate::error::{Error, Result};
use crate::ffield::Chi;
use crate::intmod::{gcd, Factorization};

/// Exponent of `p` in `d`, for `d` a divisor of the query modulus.
fn nu(d: u64, p: u64) -> u32 {
    let mut d = d;
    let mut v = 0;
    while d % p == 0 {
        d /= p;
        v += 1;
    }
    v
}

/// Check `d` against the admissibility characterization, naming the first failed clause.
pub fn check_admissible(query: &AdmissibleQuery, d: u64) -> std::result::Result<(), Inadmissible> {
    let m = query.modulus();
    let fail = |clause| Inadmissible {
        q: query.q(),
        chi: query.chi(),
        j: query.j(),
        d,
        clause,
    };
    if d == 0 || d >= m || m % d != 0 {
        return Err(fail(Clause::NotProperDivisor));
    }
    if d % 2 != 0 {
        return Err(fail(Clause::Odd));
    }
    let co = gcd(d, m / d);
    let alpha0 = query.qminus().exponent(2);
    match query.kind() {
        CycleKind::Involution => {
            let v = nu(d, 2);
            let mut allowed = vec![1, alpha0.saturating_sub(1), alpha0];
            allowed.retain(|&a| a >= 1);
            allowed.sort_unstable();
            allowed.dedup();
            if !allowed.contains(&v) {
                return Err(fail(Clause::TwoAdic { found: v, allowed }));
            }
            if 2 % co != 0 {
                return Err(fail(Clause::CommonFactor {
                    gcd: co,
                    must_divide: 2,
                }));
            }
        }
        CycleKind::Four => {
            let v = nu(d, 2);
            if v != alpha0 {
                return Err(fail(Clause::TwoAdic {
                    found: v,
                    allowed: vec![alpha0],
                }));
            }
            for &(p, alpha) in query.qminus().factors() {
                let beta = nu(d, p);
                if p % 4 == 3 && beta != alpha {
                    return Err(fail(Clause::PrimeExponent {
                        prime: p,
                        found: beta,
                        allowed: vec![alpha],
                    }));
                }
            }
            if co != 1 {
                return Err(fail(Clause::CommonFactor {
                    gcd: co,
                    must_divide: 1,
                }));
            }
        }
        CycleKind::OddPrime(j) => {
            for &(p, alpha) in query.qminus().factors() {
                let beta = nu(d, p);
                let allowed = if p == j && alpha >= 2 {
                    vec![alpha - 1, alpha]
                } else if p % j == 1 {
                    vec![0, alpha]
                } else {
                    vec![alpha]
                };
                if !allowed.contains(&beta) {
                    return Err(fail(Clause::PrimeExponent {
                        prime: p,
                        found: beta,
                        allowed,
                    }));
                }
            }
        }
    }
    Ok(())
}

/// Whether the proper divisor `d` is admissible; a non-divisor is a domain error.
pub fn is_admissible(query: &AdmissibleQuery, d: u64) -> Result<bool> {
    match check_admissible(query, d) {
        Ok(()) => Ok(true),
        Err(Inadmissible {
            clause: Clause::NotProperDivisor,
            ..
        }) => Err(Error::domain(
            "is_admissible",
            format!("{d} is not a proper divisor of {}", query.modulus()),
        )),
        Err(_) => Ok(false),
    }
}

/// All admissible proper divisors, ascending.
pub fn admissible_divisors(query: &AdmissibleQuery) -> Vec<u64> {
    let m = query.modulus();
    query
        .qminus()
        .divisors()
        .into_iter()
        .filter(|&d| d < m && check_admissible(query, d).is_ok())
        .collect()
}

/// Existence of a permutation with `1`- and `j`-cycles for parameters of character `chi`.
///
/// Involutions exist unless `q - chi = 2`; 4-cycles need a prime `4k + 1` dividing
/// `q - chi`; an odd prime `p` needs a prime `pk + 1` dividing `q - chi` or `p^2 | q - chi`.
pub fn exists_1j(qminus: &Factorization, _chi: Chi, j: u64) -> Result<bool> {
    let m = qminus.value();
    Ok(match CycleKind::from_length(j)? {
        CycleKind::Involution => m > 2,
        CycleKind::Four => qminus.primes().any(|p| p % 4 == 1),
        CycleKind::OddPrime(p) => qminus.primes().any(|r| r % p == 1) || qminus.exponent(p) >= 2,
    })
}
