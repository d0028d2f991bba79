//! Dense polynomials over `F_p`, ascending coefficients, used for irreducibility testing.

use crate::intmod::{inv_mod, mul_mod};

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Remainder of `a` modulo the nonzero polynomial `f`.
fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p).expect("leading coefficient is a unit");
    while r.len() > df {
        let shift = r.len() - 1 - df;
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        for (i, &fi) in f.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mul_mod(c, fi, p)) % p;
        }
        r = trim(r);
    }
    r
}

fn mul_rem(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    rem(&prod, f, p)
}

fn pow_rem(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_rem(&acc, &b, f, p);
        }
        b = mul_rem(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `x^(p^i) mod f` for `i = 0..=k`.
fn frobenius_powers(f: &[u64], p: u64, k: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::with_capacity(k + 1);
    let mut h = rem(&[0, 1], f, p);
    out.push(h.clone());
    for _ in 0..k {
        h = pow_rem(&h, p, f, p);
        out.push(h.clone());
    }
    out
}

fn prime_divisors(mut k: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut t = 2;
    while t * t <= k {
        if k % t == 0 {
            out.push(t);
            while k % t == 0 {
                k /= t;
            }
        }
        t += 1;
    }
    if k > 1 {
        out.push(k);
    }
    out
}

/// Rabin's test: monic `f` of degree `k` is irreducible over `F_p` iff
/// `x^(p^k) = x (mod f)` and `gcd(x^(p^(k/t)) - x, f) = 1` for each prime `t | k`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let frob = frobenius_powers(&f, p, k);
    if frob[k] != rem(&x, &f, p) {
        return false;
    }
    prime_divisors(k).into_iter().all(|t| {
        let h = sub(&frob[k / t], &x, p);
        gcd(&h, &f, p).len() == 1
    })
}
