//! Constructors for the exponents `n` of Redei permutations with `1`- and `j`-cycles.
//!
//! Every emitted `n` is re-checked against the defining conditions
//! (`gcd(n - 1, q - chi) = d`, `q - chi | n^j - 1`, and for `j = 4` no 2-cycles)
//! before it is returned.

use super::{check_admissible, count_md, AdmissibleQuery, CycleKind};
use crate::error::{Error, Result};
use crate::ffield::Chi;
use crate::intmod::{
    combine_root_sets, crt, factorize, gcd, inv_mod, is_prime, lifts, mul_mod, phi_p_roots,
    pow_mod, sqrt_mod, valuation, Congruence, CongruenceSystem, Factorization,
};

fn verify_candidate(qminus: &Factorization, j: u64, d: u64, n: u64) -> Result<()> {
    let m = qminus.value();
    let bad = |what: &str| {
        Err(Error::Consistency(format!(
            "n = {n} fails {what} for j = {j}, d = {d}, q - chi = {m}"
        )))
    };
    if d >= m || m % d != 0 {
        return bad("d < q - chi");
    }
    if gcd(n, m) != 1 {
        return bad("gcd(n, q - chi) = 1");
    }
    if gcd((n + m - 1) % m, m) != d {
        return bad("gcd(n - 1, q - chi) = d");
    }
    if pow_mod(n, j, m) != 1 % m {
        return bad("n^j = 1 (mod q - chi)");
    }
    if j == 4 && gcd((mul_mod(n, n, m) + m - 1) % m, m) != d {
        return bad("gcd(n^2 - 1, q - chi) = d");
    }
    Ok(())
}

fn finish(qminus: &Factorization, j: u64, d: u64, mut ns: Vec<u64>) -> Result<Vec<u64>> {
    ns.sort_unstable();
    ns.dedup();
    for &n in &ns {
        verify_candidate(qminus, j, d, n)?;
    }
    Ok(ns)
}

fn expect_count(query: &AdmissibleQuery, d: u64, ns: &[u64]) -> Result<()> {
    let md = count_md(query, d)?;
    if ns.len() as u64 != md {
        return Err(Error::Consistency(format!(
            "constructed {} exponents for j = {}, d = {d}, expected M_d = {md}",
            ns.len(),
            query.j()
        )));
    }
    Ok(())
}

fn query_for(qminus: &Factorization, chi: Chi, j: u64, d: u64) -> Result<AdmissibleQuery> {
    let query = AdmissibleQuery::new(qminus.clone(), chi, j)?;
    check_admissible(&query, d)?;
    Ok(query)
}

/// Solutions modulo `q - chi` of `n = 1 (mod d)`, `n = k (mod (q - chi)/d)` for each `k`,
/// dropping `n` with `nu_p(n - 1) >= nu_p(q - chi)` when `nu_p(d) = nu_p(q - chi) - 1`.
fn assemble(qminus: &Factorization, d: u64, residues: &[u64], p: u64) -> Result<Vec<u64>> {
    let m = qminus.value();
    let cofactor = m / d;
    let alpha = qminus.exponent(p);
    let beta = valuation(p, d as i128)?;
    let filter = alpha >= 1 && beta + 1 == alpha;
    let mut out = Vec::new();
    for &k in residues {
        let sys = CongruenceSystem::new()
            .with(1, d)?
            .with(k as i128, cofactor)?;
        let (r, l) = crt(&sys)?;
        for n in lifts(
            Congruence {
                residue: r,
                modulus: l,
            },
            m,
        ) {
            if filter && (n == 1 || valuation(p, n as i128 - 1)? >= alpha) {
                continue;
            }
            out.push(n);
        }
    }
    Ok(out)
}

/// All involution exponents with `d + chi + 1` fixed points, from the closed-form `k`.
pub fn construct_involutions(qminus: &Factorization, chi: Chi, d: u64) -> Result<Vec<u64>> {
    query_for(qminus, chi, 2, d)?;
    let m = qminus.value();
    let alpha0 = qminus.exponent(2);
    let v = d.trailing_zeros();
    let phi = qminus.divisor(d)?.euler_phi();
    let cofactor = m / d;
    let ks: Vec<u64> = if v == alpha0 {
        vec![mul_mod(2, pow_mod(cofactor, phi - 1, d), d)]
    } else {
        let t = pow_mod(m / (2 * d), phi - 1, d);
        let shifted = (t + d / 2) % d;
        if v + 1 == alpha0 {
            vec![shifted]
        } else if v == 1 && alpha0 >= 3 {
            vec![t, shifted]
        } else {
            return Err(Error::Consistency(format!(
                "no involution case for d = {d}, q - chi = {m}"
            )));
        }
    };
    let ns = ks
        .into_iter()
        .map(|k| (mul_mod(k, cofactor, m) + m - 1) % m)
        .collect();
    finish(qminus, 2, d, ns)
}

/// Involutions with exactly the two fixed points `0` and `infinity` (so `chi = -1`).
pub fn involutions_two_fixed(q: u64) -> Result<Vec<u64>> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::domain(
            "involutions_two_fixed",
            format!("q = {q} must be odd"),
        ));
    }
    let ns = if (q + 1).trailing_zeros() < 3 {
        vec![q]
    } else {
        vec![(q - 1) / 2, q]
    };
    finish(&factorize(q + 1)?, 2, 2, ns)
}

/// Involutions with exactly four fixed points, as `(n, chi)` pairs.
pub fn involutions_four_fixed(q: u64) -> Result<Vec<(u64, Chi)>> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::domain(
            "involutions_four_fixed",
            format!("q = {q} must be odd"),
        ));
    }
    let mut plus = Vec::new();
    if q % 8 == 1 {
        plus.extend([(q - 3) / 2, q - 2]);
    } else if q > 3 {
        plus.push(q - 2);
    }
    let mut minus = Vec::new();
    // q = 3 would give the identity, since d = 4 = q + 1 is not a proper divisor
    if q % 8 == 3 && q > 3 {
        minus.push((q - 1) / 2);
    } else if q % 32 == 7 {
        minus.push((3 * q - 1) / 4);
    } else if q % 32 == 23 {
        minus.push((q - 3) / 4);
    }
    let mut out = Vec::new();
    if !plus.is_empty() {
        out.extend(
            finish(&factorize(q - 1)?, 2, 2, plus)?
                .into_iter()
                .map(|n| (n, Chi::Plus)),
        );
    }
    if !minus.is_empty() {
        out.extend(
            finish(&factorize(q + 1)?, 2, 4, minus)?
                .into_iter()
                .map(|n| (n, Chi::Minus)),
        );
    }
    Ok(out)
}

/// Exponents for `1`- and `p`-cycles through the roots of the `p`-th cyclotomic polynomial.
pub fn construct_p_cycles(qminus: &Factorization, chi: Chi, p: u64, d: u64) -> Result<Vec<u64>> {
    if p < 3 || !is_prime(p) {
        return Err(Error::domain(
            "construct_p_cycles",
            format!("{p} is not an odd prime"),
        ));
    }
    let query = query_for(qminus, chi, p, d)?;
    let cofactor = qminus.cofactor(d)?;
    let mut sets = Vec::with_capacity(cofactor.factors().len());
    for &(prime, e) in cofactor.factors() {
        sets.push((phi_p_roots(p, prime, e)?, prime.pow(e)));
    }
    let roots = combine_root_sets(&sets)?;
    let ns = finish(qminus, p, d, assemble(qminus, d, &roots, p)?)?;
    expect_count(&query, d, &ns)?;
    Ok(ns)
}

/// Inverse of 2 modulo an odd modulus.
fn half(modulus: u64) -> u64 {
    inv_mod(2, modulus).expect("modulus is odd")
}

/// `1`- and `3`-cycles from the square roots `y` of `-3`, with `2n = y - 1`.
pub fn three_cycles_by_square_roots(qminus: &Factorization, chi: Chi, d: u64) -> Result<Vec<u64>> {
    let query = query_for(qminus, chi, 3, d)?;
    let cofactor = qminus.cofactor(d)?;
    let c = cofactor.value();
    let h = half(c);
    let residues: Vec<u64> = sqrt_mod(-3, &cofactor)?
        .into_iter()
        .map(|y| mul_mod((y + c - 1) % c, h, c))
        .collect();
    let ns = finish(qminus, 3, d, assemble(qminus, d, &residues, 3)?)?;
    expect_count(&query, d, &ns)?;
    Ok(ns)
}

/// `1`- and `5`-cycles through `z^2 = 5`, `2y = z - 1`, `m^2 = y^2 - 4`, `2n = m + y`.
pub fn five_cycles_by_square_roots(qminus: &Factorization, chi: Chi, d: u64) -> Result<Vec<u64>> {
    let query = query_for(qminus, chi, 5, d)?;
    let cofactor = qminus.cofactor(d)?;
    let c = cofactor.value();
    let h = half(c);
    let mut residues = Vec::new();
    for z in sqrt_mod(5, &cofactor)? {
        let y = mul_mod((z + c - 1) % c, h, c);
        let disc = (mul_mod(y, y, c) + c - 4 % c) % c;
        for root in sqrt_mod(disc as i128, &cofactor)? {
            residues.push(mul_mod((root + y) % c, h, c));
        }
    }
    residues.sort_unstable();
    residues.dedup();
    let ns = finish(qminus, 5, d, assemble(qminus, d, &residues, 5)?)?;
    expect_count(&query, d, &ns)?;
    Ok(ns)
}

/// Closed form for `1`- and `3`-cycles when `q - chi = 2p` with `p = 7 (mod 12)`:
/// `n = ((p + 1)/2) (s - 1) + p (mod 2p)` where `s = +-(-3)^((p + 1)/4)` squares to `-3`.
pub fn lagrange_3cycles(q: u64, chi: Chi) -> Result<Vec<u64>> {
    let m = chi.q_minus(q);
    let p = m / 2;
    if m % 2 != 0 || !is_prime(p) || p % 12 != 7 {
        return Err(Error::domain(
            "lagrange_3cycles",
            format!("q - chi = {m} is not 2p with p prime and p = 7 (mod 12)"),
        ));
    }
    let s = pow_mod(p - 3, (p + 1) / 4, p);
    let mut ns = Vec::with_capacity(2);
    for y in [s, p - s] {
        if mul_mod(y, y, p) != p - 3 {
            return Err(Error::Consistency(format!("{y}^2 != -3 (mod {p})")));
        }
        let n = (mul_mod((p + 1) / 2, (y + p - 1) % p, m) + p) % m;
        if n % 2 != 1 || (mul_mod(n, n, p) + n + 1) % p != 0 {
            return Err(Error::Consistency(format!(
                "n = {n} does not solve the 3-cycle system"
            )));
        }
        ns.push(n);
    }
    finish(&factorize(m)?, 3, 2, ns)
}

/// Exponents for `1`- and `4`-cycles: square roots of the involution exponent, lifted by CRT.
pub fn construct_4_cycles(qminus: &Factorization, chi: Chi, d: u64) -> Result<Vec<u64>> {
    let query = query_for(qminus, chi, 4, d)?;
    let involution = construct_involutions(qminus, chi, d)?;
    let [m_inv] = involution[..] else {
        return Err(Error::Consistency(format!(
            "expected one involution for d = {d}, found {involution:?}"
        )));
    };
    let cofactor = qminus.cofactor(d)?;
    let roots = sqrt_mod(m_inv as i128, &cofactor)?;
    let ns = finish(qminus, 4, d, assemble(qminus, d, &roots, 2)?)?;
    expect_count(&query, d, &ns)?;
    Ok(ns)
}

/// Dispatch to the constructor for the query's cycle length.
pub fn construct(query: &AdmissibleQuery, d: u64) -> Result<Vec<u64>> {
    let (qminus, chi) = (query.qminus(), query.chi());
    match query.kind() {
        CycleKind::Involution => {
            let ns = construct_involutions(qminus, chi, d)?;
            expect_count(query, d, &ns)?;
            Ok(ns)
        }
        CycleKind::Four => construct_4_cycles(qminus, chi, d),
        CycleKind::OddPrime(p) => construct_p_cycles(qminus, chi, p, d),
    }
}
