use std::fmt;

use super::arith::{gcd, mul_mod, pow_mod};
use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Bases for which Miller-Rabin is deterministic on all of `u64`.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho; returns a nontrivial factor of composite odd `n`.
fn pollard_rho(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut r = 1u64;
        let mut ys = 0u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(128.min(r - k)) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let f = pollard_rho(n);
    split_large(f, out);
    split_large(n / f, out);
}

/// An integer together with its prime-power decomposition, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn one() -> Self {
        Factorization {
            value: 1,
            factors: Vec::new(),
        }
    }

    /// Build from explicit `(prime, exponent)` pairs, validating every invariant.
    pub fn from_factors(mut factors: Vec<(u64, u32)>) -> Result<Self> {
        factors.sort_unstable();
        let mut value = 1u64;
        for w in factors.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::domain(
                    "factorization",
                    format!("repeated prime {}", w[0].0),
                ));
            }
        }
        for &(p, e) in &factors {
            if e == 0 {
                return Err(Error::domain(
                    "factorization",
                    format!("zero exponent for {p}"),
                ));
            }
            if !is_prime(p) {
                return Err(Error::domain("factorization", format!("{p} is not prime")));
            }
            let pe = p
                .checked_pow(e)
                .ok_or_else(|| Error::Overflow(format!("{p}^{e}")))?;
            value = value
                .checked_mul(pe)
                .ok_or_else(|| Error::Overflow("factorization value".into()))?;
        }
        Ok(Factorization { value, factors })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the factorization (zero when absent).
    pub fn exponent(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// The prime powers `p^e` of the factorization.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, e)| p.pow(e))
    }

    /// `Some((p, e))` when the value is a prime power `p^e` with `e >= 1`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    /// Factorization of a divisor `d` of this value, obtained without refactoring.
    pub fn divisor(&self, d: u64) -> Result<Factorization> {
        if d == 0 || self.value % d != 0 {
            return Err(Error::domain(
                "divisor",
                format!("{d} does not divide {}", self.value),
            ));
        }
        let mut rest = d;
        let mut factors = Vec::new();
        for &(p, _) in &self.factors {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
        }
        Ok(Factorization { value: d, factors })
    }

    /// Factorization of `value / d` for a divisor `d`.
    pub fn cofactor(&self, d: u64) -> Result<Factorization> {
        if d == 0 || self.value % d != 0 {
            return Err(Error::domain(
                "cofactor",
                format!("{d} does not divide {}", self.value),
            ));
        }
        self.divisor(self.value / d)
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    /// Euler's totient of the value.
    pub fn euler_phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::domain("factorize", "zero has no factorization"));
    }
    let mut rest = n;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut take = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    take(2, &mut rest);
    take(3, &mut rest);
    let mut p = 5u64;
    while p <= TRIAL_LIMIT && p * p <= rest {
        take(p, &mut rest);
        take(p + 2, &mut rest);
        p += 6;
    }
    if rest > 1 {
        let mut big = Vec::new();
        split_large(rest, &mut big);
        big.sort_unstable();
        for q in big {
            match factors.last_mut() {
                Some((last, e)) if *last == q => *e += 1,
                _ => factors.push((q, 1)),
            }
        }
    }
    Ok(Factorization { value: n, factors })
}

/// Euler's totient of `n`.
pub fn euler_phi(f: &Factorization) -> u64 {
    f.euler_phi()
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(p: u64, z: i128) -> Result<u32> {
    if z == 0 {
        return Err(Error::domain("valuation", "valuation of zero is undefined"));
    }
    if p < 2 {
        return Err(Error::domain("valuation", format!("{p} is not prime")));
    }
    let mut z = z.unsigned_abs();
    let p = p as u128;
    let mut v = 0;
    while z % p == 0 {
        z /= p;
        v += 1;
    }
    Ok(v)
}

/// Multiplicative order of `n` modulo `d`, by reducing the totient exponent prime by prime.
pub fn mult_order(n: u64, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::domain("mult_order", "modulus must be positive"));
    }
    if d == 1 {
        return Ok(1);
    }
    let n = n % d;
    if gcd(n, d) != 1 {
        return Err(Error::domain("mult_order", format!("gcd({n}, {d}) != 1")));
    }
    let phi = factorize(d)?.euler_phi();
    let mut t = phi;
    for &(p, _) in factorize(phi)?.factors() {
        while t % p == 0 && pow_mod(n, t / p, d) == 1 {
            t /= p;
        }
    }
    Ok(t)
}

/// Decompose `q` as `p^k` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    factorize(q).ok()?.as_prime_power()
}
