//! Finite fields `F_{p^k}` of odd characteristic and the projective line over them.
//!
//! Elements are coefficient vectors over `F_p` reduced modulo a monic irreducible
//! polynomial held by the [`FieldSpec`]. Arithmetic goes through the spec, so an
//! element never carries a reference to its field.

mod poly;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::intmod::{inv_mod, is_prime, mul_mod, prime_power};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 16;

/// The quadratic character of a nonzero field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chi {
    Plus,
    Minus,
}

impl Chi {
    pub const BOTH: [Chi; 2] = [Chi::Plus, Chi::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Chi::Plus => 1,
            Chi::Minus => -1,
        }
    }

    /// `q - chi`, the modulus governing `R_{n,a}` for `chi(a) = self`.
    pub fn q_minus(self, q: u64) -> u64 {
        match self {
            Chi::Plus => q - 1,
            Chi::Minus => q + 1,
        }
    }

    /// `chi + 1`: the number of fixed points outside the divisor strata.
    pub fn extra_fixed(self) -> u64 {
        match self {
            Chi::Plus => 2,
            Chi::Minus => 0,
        }
    }

    pub fn negate(self) -> Chi {
        match self {
            Chi::Plus => Chi::Minus,
            Chi::Minus => Chi::Plus,
        }
    }
}

impl fmt::Display for Chi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chi::Plus => "+1",
            Chi::Minus => "-1",
        })
    }
}

impl FromStr for Chi {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "plus" | "+" => Ok(Chi::Plus),
            "-1" | "minus" | "-" => Ok(Chi::Minus),
            other => Err(Error::domain(
                "chi",
                format!("expected +1 or -1, got {other:?}"),
            )),
        }
    }
}

/// An element of `F_{p^k}`: coefficients of `1, t, ..., t^(k-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: [u64; MAX_DEGREE],
}

impl FieldElement {
    pub fn coeffs(&self, k: usize) -> &[u64] {
        &self.coeffs[..k]
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self
            .coeffs
            .iter()
            .rposition(|&c| c != 0)
            .map_or(1, |i| i + 1);
        f.debug_list().entries(&self.coeffs[..last]).finish()
    }
}

/// A point of `P^1(F_q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjPoint {
    Infinity,
    Finite(FieldElement),
}

/// A validated description of `F_q`, `q = p^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    k: usize,
    q: u64,
    /// Monic modulus, ascending, length `k + 1`.
    modulus: Vec<u64>,
}

impl FieldSpec {
    /// Build `F_{p^k}`, validating a supplied modulus or searching for the default one.
    ///
    /// The default modulus is the lexicographically smallest monic irreducible of
    /// degree `k`, with coefficients compared from the constant term upward.
    pub fn new(p: u64, k: usize, modulus: Option<Vec<u64>>) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "characteristic {p} is not an odd prime"
            )));
        }
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::InvalidField(format!(
                "degree {k} outside 1..={MAX_DEGREE}"
            )));
        }
        let q = p
            .checked_pow(k as u32)
            .filter(|&q| q < 1 << 63)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{k} is too large")))?;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k + 1 || m[k] != 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus {m:?} is not monic of degree {k}"
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidField(format!(
                        "modulus {m:?} has coefficients outside [0, {p})"
                    )));
                }
                if !poly::is_irreducible(&m, p) {
                    return Err(Error::InvalidField(format!(
                        "modulus {m:?} is reducible over F_{p}"
                    )));
                }
                m
            }
            None => default_modulus(p, k),
        };
        Ok(FieldSpec { p, k, q, modulus })
    }

    /// Build `F_q` from its order.
    pub fn with_order(q: u64, modulus: Option<Vec<u64>>) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Self::new(p, k as usize, modulus)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The modulus written as a polynomial in `x`, highest degree first.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        terms.join(" + ")
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: [0; MAX_DEGREE],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    pub fn constant(&self, c: u64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.p;
        e
    }

    /// Element from coefficients ascending by degree, reducing each modulo `p`.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.k {
            return Err(Error::domain(
                "element",
                format!(
                    "{} coefficients for a degree-{} field",
                    coeffs.len(),
                    self.k
                ),
            ));
        }
        let mut e = self.zero();
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs) {
            *slot = c % self.p;
        }
        Ok(e)
    }

    /// The element whose coefficient vector, read as a base-`p` integer with the
    /// constant term least significant, equals `index`.
    pub fn from_index(&self, mut index: u64) -> FieldElement {
        let mut e = self.zero();
        for slot in e.coeffs.iter_mut().take(self.k) {
            *slot = index % self.p;
            index /= self.p;
        }
        e
    }

    pub fn index(&self, e: &FieldElement) -> u64 {
        e.coeffs[..self.k]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c)
    }

    pub fn is_zero(&self, e: &FieldElement) -> bool {
        e.coeffs[..self.k].iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut out = self.zero();
        for i in 0..self.k {
            let s = a.coeffs[i] + b.coeffs[i];
            out.coeffs[i] = if s >= self.p { s - self.p } else { s };
        }
        out
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let mut out = self.zero();
        for i in 0..self.k {
            out.coeffs[i] = if a.coeffs[i] == 0 {
                0
            } else {
                self.p - a.coeffs[i]
            };
        }
        out
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        let k = self.k;
        if k == 1 {
            return self.constant(mul_mod(a.coeffs[0], b.coeffs[0], p));
        }
        // k >= 2 forces p < 2^32, so every product fits in a u64 and sums fit in a u128
        let mut acc = [0u128; 2 * MAX_DEGREE - 1];
        for i in 0..k {
            if a.coeffs[i] == 0 {
                continue;
            }
            for j in 0..k {
                acc[i + j] += (a.coeffs[i] * b.coeffs[j]) as u128;
            }
        }
        let p128 = p as u128;
        for top in (k..2 * k - 1).rev() {
            let c = (acc[top] % p128) as u64;
            if c == 0 {
                continue;
            }
            // t^k = -(m_0 + m_1 t + ... + m_{k-1} t^{k-1})
            for (j, &m) in self.modulus[..k].iter().enumerate() {
                acc[top - k + j] += ((p - c) * m) as u128;
            }
        }
        let mut out = self.zero();
        for (c, &a) in out.coeffs.iter_mut().zip(&acc[..k]) {
            *c = (a % p128) as u64;
        }
        out
    }

    pub fn square(&self, a: &FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = *a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.square(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        if self.k == 1 {
            let x = inv_mod(a.coeffs[0], self.p).ok_or(Error::DivisionByZero)?;
            return Ok(self.constant(x));
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^((q-1)/2)` read as `+1` or `-1`.
    pub fn quadratic_character(&self, a: &FieldElement) -> Result<Chi> {
        if self.is_zero(a) {
            return Err(Error::domain(
                "quadratic_character",
                "zero has no quadratic character",
            ));
        }
        let e = self.pow(a, (self.q - 1) / 2);
        if e == self.one() {
            Ok(Chi::Plus)
        } else if e == self.neg(&self.one()) {
            Ok(Chi::Minus)
        } else {
            Err(Error::Consistency(format!("Euler criterion gave {e:?}")))
        }
    }

    /// Both square roots `(s, -s)` of a square, smaller index first; `None` for nonsquares.
    pub fn sqrt(&self, a: &FieldElement) -> Option<(FieldElement, FieldElement)> {
        if self.is_zero(a) {
            return Some((*a, *a));
        }
        if self.quadratic_character(a).ok()? != Chi::Plus {
            return None;
        }
        let s = if self.q % 4 == 3 {
            self.pow(a, (self.q + 1) / 4)
        } else {
            self.tonelli_shanks(a)
        };
        if self.square(&s) != *a {
            return None;
        }
        let t = self.neg(&s);
        if self.index(&s) <= self.index(&t) {
            Some((s, t))
        } else {
            Some((t, s))
        }
    }

    fn tonelli_shanks(&self, a: &FieldElement) -> FieldElement {
        let s = (self.q - 1).trailing_zeros();
        let t = (self.q - 1) >> s;
        let z = (2..self.q)
            .map(|i| self.from_index(i))
            .find(|z| self.quadratic_character(z) == Ok(Chi::Minus))
            .expect("F_q has a nonsquare");
        let one = self.one();
        let mut m = s;
        let mut c = self.pow(&z, t);
        let mut r = self.pow(a, (t + 1) / 2);
        let mut u = self.pow(a, t);
        while u != one {
            let mut i = 0;
            let mut w = u;
            while w != one {
                w = self.square(&w);
                i += 1;
            }
            let b = self.pow(&c, 1 << (m - i - 1));
            m = i;
            c = self.square(&b);
            r = self.mul(&r, &b);
            u = self.mul(&u, &c);
        }
        r
    }

    /// Nonzero elements in enumeration order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.q).map(move |i| self.from_index(i))
    }

    /// The first nonzero element (in enumeration order) with the given character.
    pub fn first_with_character(&self, chi: Chi) -> FieldElement {
        self.nonzero_elements()
            .find(|a| self.quadratic_character(a) == Ok(chi))
            .expect("both characters occur in an odd field")
    }

    /// All `q + 1` points of `P^1(F_q)`: infinity first, then elements by index.
    pub fn proj_points(&self) -> impl Iterator<Item = ProjPoint> + '_ {
        std::iter::once(ProjPoint::Infinity)
            .chain((0..self.q).map(move |i| ProjPoint::Finite(self.from_index(i))))
    }

    /// Position of a point in [`FieldSpec::proj_points`] order.
    pub fn point_index(&self, pt: &ProjPoint) -> u64 {
        match pt {
            ProjPoint::Infinity => 0,
            ProjPoint::Finite(e) => self.index(e) + 1,
        }
    }

    /// Comma-separated coefficients ascending by degree.
    pub fn format_element(&self, e: &FieldElement) -> String {
        e.coeffs[..self.k]
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn format_point(&self, pt: &ProjPoint) -> String {
        match pt {
            ProjPoint::Infinity => "inf".to_string(),
            ProjPoint::Finite(e) => self.format_element(e),
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let coeffs = s
            .split(',')
            .map(|c| {
                let v: u64 = c.trim().parse().map_err(|_| {
                    Error::domain("parse_element", format!("bad coefficient {c:?}"))
                })?;
                if v >= self.p {
                    return Err(Error::domain(
                        "parse_element",
                        format!("coefficient {v} outside [0, {})", self.p),
                    ));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        self.element(&coeffs)
    }

    pub fn parse_point(&self, s: &str) -> Result<ProjPoint> {
        if s.trim() == "inf" {
            Ok(ProjPoint::Infinity)
        } else {
            self.parse_element(s).map(ProjPoint::Finite)
        }
    }
}

fn default_modulus(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1];
    }
    let count = p.pow(k as u32);
    (0..count)
        .map(|idx| {
            // c_0 is the most significant digit so candidates come out in
            // lexicographic order compared from the constant term upward
            let mut m = vec![0u64; k + 1];
            let mut rest = idx;
            for slot in m[..k].iter_mut().rev() {
                *slot = rest % p;
                rest /= p;
            }
            m[k] = 1;
            m
        })
        .find(|m| poly::is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}
