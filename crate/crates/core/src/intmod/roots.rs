//! Square roots and cyclotomic roots modulo primes and prime powers.

use super::arith::{inv_mod, mul_mod, poly_derivative, poly_eval_mod, pow_mod, reduce, sub_mod};
use super::crt::{combine, Congruence};
use super::factor::{is_prime, Factorization};
use crate::error::{Error, Result};

fn euler_criterion(b: u64, p: u64) -> u64 {
    pow_mod(b, (p - 1) / 2, p)
}

/// Tonelli-Shanks for `p = 1 (mod 4)`; `b` must be a nonzero residue.
fn tonelli_shanks(b: u64, p: u64) -> u64 {
    let s = (p - 1).trailing_zeros();
    let t = (p - 1) >> s;
    let z = (2..p)
        .find(|&z| euler_criterion(z, p) == p - 1)
        .expect("an odd prime has a quadratic nonresidue");
    let mut m = s;
    let mut c = pow_mod(z, t, p);
    let mut r = pow_mod(b, (t + 1) / 2, p);
    let mut u = pow_mod(b, t, p);
    while u != 1 {
        let mut i = 0;
        let mut w = u;
        while w != 1 {
            w = mul_mod(w, w, p);
            i += 1;
        }
        let bb = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(bb, bb, p);
        r = mul_mod(r, bb, p);
        u = mul_mod(u, c, p);
    }
    r
}

/// All square roots of `b` modulo the odd prime `p`, ascending.
pub fn sqrt_mod_prime(b: i128, p: u64) -> Vec<u64> {
    let b = reduce(b, p);
    if b == 0 || p == 2 {
        return vec![b];
    }
    if euler_criterion(b, p) != 1 {
        return Vec::new();
    }
    let candidate = if p % 4 == 3 {
        pow_mod(b, (p + 1) / 4, p)
    } else {
        tonelli_shanks(b, p)
    };
    let mut roots: Vec<u64> = [candidate, p - candidate]
        .into_iter()
        .filter(|&x| mul_mod(x, x, p) == b)
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots
}

/// Lift a simple root of `f` modulo `p^e` to the unique root modulo `p^e_target`.
pub fn hensel_lift(coeffs: &[i128], root: u64, p: u64, e: u32, e_target: u32) -> Result<u64> {
    let pe = p
        .checked_pow(e)
        .ok_or_else(|| Error::Overflow(format!("{p}^{e}")))?;
    let target = p
        .checked_pow(e_target)
        .ok_or_else(|| Error::Overflow(format!("{p}^{e_target}")))?;
    let root = root % pe;
    if poly_eval_mod(coeffs, root, pe) != 0 {
        return Err(Error::domain(
            "hensel_lift",
            format!("{root} is not a root modulo {pe}"),
        ));
    }
    if e_target <= e {
        return Ok(root % target);
    }
    let deriv = poly_derivative(coeffs);
    if poly_eval_mod(&deriv, root, p) == 0 {
        return Err(Error::NonSimpleRoot { root, prime: p });
    }
    let mut r = root;
    let mut precision = pe;
    while precision < target {
        precision = precision.saturating_mul(precision).min(target);
        let fr = poly_eval_mod(coeffs, r, precision);
        let dr = poly_eval_mod(&deriv, r, precision);
        let dinv = inv_mod(dr, precision).expect("derivative is a unit at a simple root");
        r = sub_mod(r, mul_mod(fr, dinv, precision), precision);
    }
    Ok(r)
}

/// All square roots of `b` modulo `p^e` for odd prime `p`, including the case `p | b`.
fn sqrt_mod_prime_power(b: i128, p: u64, e: u32) -> Result<Vec<u64>> {
    let pe = p.pow(e);
    let b = reduce(b, pe);
    let mut roots = Vec::new();
    if b == 0 {
        let step = p.pow(e.div_ceil(2));
        roots.extend((0..pe / step).map(|t| t * step));
        return Ok(roots);
    }
    let v = super::factor::valuation(p, b as i128)?;
    if v % 2 == 1 {
        return Ok(roots);
    }
    let s = v / 2;
    let unit = b / p.pow(v);
    let reduced_exp = e - v;
    let base = sqrt_mod_prime(unit as i128, p);
    let f = [-(unit as i128), 0, 1];
    let ps = p.pow(s);
    let stride = p.pow(reduced_exp);
    let outer = p.pow(e - s);
    for y0 in base {
        let y = hensel_lift(&f, y0, p, 1, reduced_exp)?;
        for t in 0..ps {
            let y_full = (y + t * stride) % outer;
            roots.push(mul_mod(ps, y_full, pe));
        }
    }
    roots.sort_unstable();
    roots.dedup();
    Ok(roots)
}

/// CRT-combine independent root sets, one per coprime modulus.
pub(crate) fn combine_root_sets(sets: &[(Vec<u64>, u64)]) -> Result<Vec<u64>> {
    let mut acc = vec![Congruence {
        residue: 0,
        modulus: 1,
    }];
    for (roots, modulus) in sets {
        let mut next = Vec::with_capacity(acc.len() * roots.len());
        for a in &acc {
            for &r in roots {
                let c = Congruence {
                    residue: r,
                    modulus: *modulus,
                };
                let merged = combine(*a, c)?.ok_or_else(|| {
                    Error::Consistency("root sets over non-coprime moduli".into())
                })?;
                next.push(merged);
            }
        }
        acc = next;
    }
    let mut out: Vec<u64> = acc.into_iter().map(|c| c.residue).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// All square roots of `b` modulo the odd integer `m`, ascending.
pub fn sqrt_mod(b: i128, m: &Factorization) -> Result<Vec<u64>> {
    if m.value() % 2 == 0 {
        return Err(Error::UnsupportedModulus(m.value()));
    }
    let mut sets = Vec::with_capacity(m.factors().len());
    for &(p, e) in m.factors() {
        let roots = sqrt_mod_prime_power(b, p, e)?;
        if roots.is_empty() {
            return Ok(Vec::new());
        }
        sets.push((roots, p.pow(e)));
    }
    combine_root_sets(&sets)
}

/// Coefficients of `x^(p-1) + ... + x + 1`.
pub fn cyclotomic_prime(p: u64) -> Vec<i128> {
    vec![1; p as usize]
}

/// Roots of the `p`-th cyclotomic polynomial modulo the prime power `prime^exp`.
pub fn phi_p_roots(p: u64, prime: u64, exp: u32) -> Result<Vec<u64>> {
    if p < 3 || !is_prime(p) {
        return Err(Error::domain(
            "phi_p_roots",
            format!("{p} is not an odd prime"),
        ));
    }
    if !is_prime(prime) || exp == 0 {
        return Err(Error::domain(
            "phi_p_roots",
            format!("{prime}^{exp} is not a prime power"),
        ));
    }
    if prime == p {
        if exp == 1 {
            return Ok(vec![1]);
        }
        return Err(Error::UnsupportedModulus(p.pow(exp)));
    }
    if prime % p != 1 {
        return Ok(Vec::new());
    }
    let cofactor = (prime - 1) / p;
    let omega = (2..prime)
        .map(|h| pow_mod(h, cofactor, prime))
        .find(|&w| w != 1)
        .expect("a prime = 1 (mod p) has elements of order p");
    let phi = cyclotomic_prime(p);
    let mut roots = Vec::with_capacity(p as usize - 1);
    let mut w = omega;
    for _ in 1..p {
        roots.push(hensel_lift(&phi, w, prime, 1, exp)?);
        w = mul_mod(w, omega, prime);
    }
    roots.sort_unstable();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intmod::factorize;

    fn brute_sqrt(b: i128, m: u64) -> Vec<u64> {
        let b = reduce(b, m);
        (0..m).filter(|&x| mul_mod(x, x, m) == b).collect()
    }

    #[test]
    fn sqrt_mod_prime_examples() {
        assert_eq!(sqrt_mod_prime(0, 7), vec![0]);
        assert_eq!(sqrt_mod_prime(-3, 7), vec![2, 5]);
        assert_eq!(sqrt_mod_prime(5, 31), vec![6, 25]);
        assert_eq!(sqrt_mod_prime(2, 5), Vec::<u64>::new());
    }

    #[test]
    fn sqrt_mod_prime_matches_brute_force() {
        for p in [3u64, 5, 7, 11, 13, 17, 41, 73, 97, 113, 257] {
            for b in 0..p as i128 {
                assert_eq!(sqrt_mod_prime(b, p), brute_sqrt(b, p), "b={b} p={p}");
            }
        }
    }

    #[test]
    fn hensel_examples() {
        assert_eq!(hensel_lift(&[1, 1, 1], 2, 7, 1, 2).unwrap(), 30);
        assert_eq!(hensel_lift(&[1, 1, 1], 2, 7, 1, 1).unwrap(), 2);
        let r = hensel_lift(&[-5, 0, 1], 6, 31, 1, 2).unwrap();
        assert_eq!(r % 31, 6);
        assert_eq!(mul_mod(r, r, 961), 5);
        // x^2 + x + 1 has a double root 1 modulo 3
        assert!(matches!(
            hensel_lift(&[1, 1, 1], 1, 3, 1, 2),
            Err(Error::NonSimpleRoot { .. })
        ));
    }

    #[test]
    fn sqrt_mod_examples() {
        assert_eq!(sqrt_mod(1, &factorize(9).unwrap()).unwrap(), vec![1, 8]);
        assert_eq!(sqrt_mod(169, &factorize(5).unwrap()).unwrap(), vec![2, 3]);
        assert!(sqrt_mod(2, &factorize(5).unwrap()).unwrap().is_empty());
        assert!(matches!(
            sqrt_mod(1, &factorize(8).unwrap()),
            Err(Error::UnsupportedModulus(8))
        ));
        assert_eq!(sqrt_mod(0, &Factorization::one()).unwrap(), vec![0]);
    }

    #[test]
    fn sqrt_mod_composite_matches_brute_force() {
        for m in (1..800u64).step_by(2) {
            let f = factorize(m).unwrap();
            for b in [-3i128, 0, 1, 4, 5, 9, 18, 27, 45, 81, 121] {
                assert_eq!(sqrt_mod(b, &f).unwrap(), brute_sqrt(b, m), "b={b} m={m}");
            }
        }
    }

    #[test]
    fn phi_p_roots_examples() {
        assert_eq!(phi_p_roots(3, 31, 1).unwrap(), vec![5, 25]);
        assert_eq!(phi_p_roots(3, 7, 2).unwrap(), vec![18, 30]);
        let r = phi_p_roots(7, 421, 1).unwrap();
        assert_eq!(r.len(), 6);
        for &x in &r {
            assert_eq!(poly_eval_mod(&cyclotomic_prime(7), x, 421), 0);
        }
        assert_eq!(phi_p_roots(5, 5, 1).unwrap(), vec![1]);
        assert!(phi_p_roots(5, 5, 2).is_err());
        assert!(phi_p_roots(5, 7, 1).unwrap().is_empty());
        assert!(phi_p_roots(4, 7, 1).is_err());
    }
}
