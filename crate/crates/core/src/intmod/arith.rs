//! Word-sized modular arithmetic with 128-bit intermediates.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple, or `None` if it does not fit in a `u64`.
pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Extended Euclid: returns `(g, u, v)` with `g = gcd(a, b) >= 0` and `g = u*a + v*b`.
pub fn ext_gcd(a: i128, b: i128) -> Result<(i128, i128, i128)> {
    if a == 0 && b == 0 {
        return Err(Error::domain("ext_gcd", "both inputs are zero"));
    }
    let (mut r0, mut r1) = (a, b);
    let (mut u0, mut u1) = (1i128, 0i128);
    let (mut v0, mut v1) = (0i128, 1i128);
    while r1 != 0 {
        let t = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - t * r1);
        (u0, u1) = (u1, u0 - t * u1);
        (v0, v1) = (v1, v0 - t * v1);
    }
    if r0 < 0 {
        Ok((-r0, -u0, -v0))
    } else {
        Ok((r0, u0, v0))
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    let (a, b) = (a % m, b % m);
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, when it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, u, _) = ext_gcd(a as i128 % m as i128, m as i128).ok()?;
    if g != 1 {
        return None;
    }
    Some(u.rem_euclid(m as i128) as u64)
}

/// Reduce a signed integer into `[0, m)`.
#[inline]
pub fn reduce(z: i128, m: u64) -> u64 {
    z.rem_euclid(m as i128) as u64
}

/// Evaluate an integer polynomial (ascending coefficients) modulo `m`.
pub fn poly_eval_mod(coeffs: &[i128], x: u64, m: u64) -> u64 {
    coeffs
        .iter()
        .rev()
        .fold(0u64, |acc, &c| add_mod(mul_mod(acc, x, m), reduce(c, m), m))
}

/// Formal derivative coefficients of an integer polynomial.
pub fn poly_derivative(coeffs: &[i128]) -> Vec<i128> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as i128)
        .collect()
}
