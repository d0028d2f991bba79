//! Independent checks: trial division, the cyclic model of R_{n,a}, brute-force scans.
#![allow(dead_code)]

use std::collections::BTreeMap;

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

pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn nu(p: u64, mut x: u64) -> u32 {
    let mut v = 0;
    while x > 0 && x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

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

pub fn qminus(q: u64, chi: i64) -> u64 {
    (q as i64 - chi) as u64
}

/// Cycle type of `R_{n,a}`: `k -> n k` on `Z/(q - chi)` plus `chi + 1` extra fixed points.
pub fn cycles_by_multiplication(n: u64, m: u64, chi: i64) -> BTreeMap<u64, u64> {
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
            k = k * (n % m) % m;
            len += 1;
        }
        *out.entry(len).or_insert(0) += 1;
    }
    if chi == 1 {
        *out.entry(1).or_insert(0) += 2;
    }
    out
}

/// Every `(d, n)` for which `R_{n,a}` is a non-identity permutation with only 1- and j-cycles.
pub fn brute_force_pairs(q: u64, chi: i64, j: u64) -> Vec<(u64, u64)> {
    let m = qminus(q, chi);
    let mut out: Vec<(u64, u64)> = (1..m)
        .filter(|&n| gcd(n, m) == 1)
        .filter_map(|n| {
            let s = cycles_by_multiplication(n, m, chi);
            (s.contains_key(&j) && s.keys().all(|&l| l == 1 || l == j)).then(|| (gcd(n - 1, m), n))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Closed-form count of non-identity permutations with 1- and j-cycles for one character.
pub fn closed_form_total(m: u64, j: u64) -> u64 {
    let f = factor(m);
    let count = |pred: &dyn Fn(u64) -> bool| f.iter().filter(|&&(p, _)| pred(p)).count() as u32;
    match j {
        2 => {
            let r = count(&|p| p != 2);
            let shift = match nu(2, m) {
                0 => return 0,
                1 => 0,
                2 => 1,
                _ => 2,
            };
            2u64.pow(r + shift) - 1
        }
        4 => 3u64.pow(count(&|p| p % 4 == 1)) - 1,
        p => {
            let r = count(&|x| x % p == 1);
            let extra = u32::from(nu(p, m) >= 2);
            p.pow(r + extra) - 1
        }
    }
}

/// Exponent pattern of gcd(n - 1, k) and gcd(1 + n + ... + n^(p-1), k) at one prime of k.
pub fn gcd_pattern_holds(p: u64, prime: u64, alpha: u32, beta: u32, gamma: u32) -> bool {
    let either = |a: u32, b: u32| (beta == a && gamma == b) || (beta == b && gamma == a);
    if prime != p {
        either(0, alpha)
    } else if alpha == 1 {
        beta == 1 && gamma == 1
    } else if p == 2 && alpha == 2 {
        either(1, 2)
    } else if p == 2 {
        either(1, alpha - 1) || either(1, alpha)
    } else {
        (beta == alpha - 1 || beta == alpha) && gamma == 1
    }
}
