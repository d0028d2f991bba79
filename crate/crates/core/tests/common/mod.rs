#![allow(dead_code)]

use std::collections::BTreeMap;

use redei::{Chi, FieldElement, FieldSpec};

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Odd prime powers `q <= limit`, ascending.
pub fn odd_prime_powers(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in (3..=limit).filter(|&p| is_prime(p)) {
        let mut q = p;
        while q <= limit {
            out.push(q);
            q *= p;
        }
    }
    out.sort_unstable();
    out
}

/// Cycle type of `R_{n,a}` read off the cyclic model: away from its `chi + 1` fixed points
/// the map is `k -> n k` on `Z/(q - chi)`.
pub fn cycles_by_multiplication(n: u64, m: u64, chi: Chi) -> BTreeMap<u64, u64> {
    let mut seen = vec![false; m as usize];
    let mut out = BTreeMap::new();
    for start in 0..m {
        if seen[start as usize] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k as usize] {
            seen[k as usize] = true;
            k = k * n % m;
            len += 1;
        }
        *out.entry(len).or_insert(0) += 1;
    }
    let extra = if chi == Chi::Plus { 2 } else { 0 };
    if extra > 0 {
        *out.entry(1).or_insert(0) += extra;
    }
    out
}

/// All `(d, n)` with `R_{n,a}` a non-identity permutation having only 1- and `j`-cycles.
pub fn brute_force_pairs(q: u64, chi: Chi, j: u64) -> Vec<(u64, u64)> {
    let m = if chi == Chi::Plus { q - 1 } else { q + 1 };
    (1..m)
        .filter(|&n| gcd(n, m) == 1)
        .filter_map(|n| {
            let s = cycles_by_multiplication(n, m, chi);
            let only = s.keys().all(|&l| l == 1 || l == j) && s.contains_key(&j);
            only.then(|| (gcd(n - 1, m), n))
        })
        .collect()
}

/// `(N, D)` of `(x + sqrt a)^n` by binomial expansion with coefficients from Pascal's rule.
pub fn naive_nd(
    f: &FieldSpec,
    x: &FieldElement,
    a: &FieldElement,
    n: u64,
) -> (FieldElement, FieldElement) {
    let p = f.characteristic();
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = (row[i - 1] + row[i]) % p;
        }
        row = next;
    }
    let (mut num, mut den) = (f.zero(), f.zero());
    for (i, &c) in row.iter().enumerate() {
        let i = i as u64;
        let term = f.mul(&f.constant(c), &f.mul(&f.pow(x, n - i), &f.pow(a, i / 2)));
        if i % 2 == 0 {
            num = f.add(&num, &term);
        } else {
            den = f.add(&den, &term);
        }
    }
    (num, den)
}
