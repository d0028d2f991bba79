//! Redei functions `R_{n,a}` on `P^1(F_q)` and their cycle structure.
//!
//! `R_{n,a}(x) = N(x,a) / D(x,a)` where `(x + sqrt(a))^n = N + D sqrt(a)`.
//! The pair `(N, D)` is computed by square-and-multiply in `F_q[t]/(t^2 - a)`,
//! which is the same as powering the matrix `[[x, a], [1, x]]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{Chi, FieldElement, FieldSpec, ProjPoint};
use crate::intmod::{factorize, gcd, mult_order, Factorization};

/// Cycle length to number of cycles of that length.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CycleStructure(BTreeMap<u64, u64>);

impl CycleStructure {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, length: u64, count: u64) {
        if count > 0 {
            *self.0.entry(length).or_insert(0) += count;
        }
    }

    pub fn count(&self, length: u64) -> u64 {
        self.0.get(&length).copied().unwrap_or(0)
    }

    pub fn fixed_points(&self) -> u64 {
        self.count(1)
    }

    pub fn lengths(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.0.iter().map(|(&l, &c)| (l, c))
    }

    /// Number of points moved or fixed, `sum(length * count)`.
    pub fn points(&self) -> u64 {
        self.iter().map(|(l, c)| l * c).sum()
    }

    /// True when every cycle has length 1 or `j`.
    pub fn only_lengths_one_and(&self, j: u64) -> bool {
        self.lengths().all(|l| l == 1 || l == j)
    }
}

impl fmt::Display for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (l, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}:{c}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<(u64, u64)> for CycleStructure {
    fn from_iter<I: IntoIterator<Item = (u64, u64)>>(iter: I) -> Self {
        let mut s = CycleStructure::new();
        for (l, c) in iter {
            s.add(l, c);
        }
        s
    }
}

/// The pair `(n, a)` defining `R_{n,a}` over a given field.
#[derive(Debug, Clone, Copy)]
pub struct RedeiSpec<'f> {
    field: &'f FieldSpec,
    a: FieldElement,
    n: u64,
    chi: Chi,
}

impl PartialEq for RedeiSpec<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.a == other.a && self.n == other.n
    }
}

impl Eq for RedeiSpec<'_> {}

impl<'f> RedeiSpec<'f> {
    /// `n` is stored as its residue in `[1, q - chi(a)]`.
    pub fn new(field: &'f FieldSpec, a: FieldElement, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("redei", "exponent must be positive"));
        }
        let chi = field
            .quadratic_character(&a)
            .map_err(|_| Error::domain("redei", "parameter a must be nonzero"))?;
        let m = chi.q_minus(field.order());
        Ok(RedeiSpec {
            field,
            a,
            n: (n - 1) % m + 1,
            chi,
        })
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn chi(&self) -> Chi {
        self.chi
    }

    /// `q - chi(a)`.
    pub fn modulus(&self) -> u64 {
        self.chi.q_minus(self.field.order())
    }

    /// Same field and parameter with a different exponent.
    pub fn with_exponent(&self, n: u64) -> Result<Self> {
        RedeiSpec::new(self.field, self.a, n)
    }

    /// `(N(x,a), D(x,a))` with `(x + sqrt(a))^n = N + D sqrt(a)`.
    pub fn nd_pair(&self, x: &FieldElement) -> (FieldElement, FieldElement) {
        let f = self.field;
        // (u1 + v1 t)(u2 + v2 t) = (u1 u2 + a v1 v2) + (u1 v2 + u2 v1) t
        let mul = |(u1, v1): (FieldElement, FieldElement),
                   (u2, v2): (FieldElement, FieldElement)| {
            let av = f.mul(&self.a, &f.mul(&v1, &v2));
            let re = f.add(&f.mul(&u1, &u2), &av);
            let im = f.add(&f.mul(&u1, &v2), &f.mul(&u2, &v1));
            (re, im)
        };
        let mut acc = (f.one(), f.zero());
        let mut base = (*x, f.one());
        let mut e = self.n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = mul(base, base);
            }
        }
        acc
    }

    pub fn eval(&self, pt: &ProjPoint) -> ProjPoint {
        let x = match pt {
            ProjPoint::Infinity => return ProjPoint::Infinity,
            ProjPoint::Finite(x) => x,
        };
        let (num, den) = self.nd_pair(x);
        match self.field.div(&num, &den) {
            Ok(y) => ProjPoint::Finite(y),
            Err(_) => ProjPoint::Infinity,
        }
    }

    pub fn is_permutation(&self) -> bool {
        gcd(self.n, self.modulus()) == 1
    }

    fn require_permutation(&self) -> Result<()> {
        if self.is_permutation() {
            Ok(())
        } else {
            Err(Error::NotPermutation {
                n: self.n,
                modulus: self.modulus(),
            })
        }
    }

    /// Cycle structure predicted from the divisors of `q - chi(a)`.
    pub fn theoretical_cycles(&self) -> Result<CycleStructure> {
        self.require_permutation()?;
        let m = factorize(self.modulus())?;
        predicted_cycles(self.n, &m, self.chi)
    }

    /// Cycle structure found by walking every point of `P^1(F_q)`.
    pub fn empirical_cycles(&self) -> Result<CycleStructure> {
        self.require_permutation()?;
        let mut s = CycleStructure::new();
        self.walk(|cycle| s.add(cycle.len() as u64, 1))?;
        Ok(s)
    }

    /// Every cycle, each listed from its first-visited point, in first-visit order.
    pub fn cycle_listing(&self) -> Result<Vec<Vec<ProjPoint>>> {
        self.require_permutation()?;
        let mut out = Vec::new();
        self.walk(|cycle| out.push(cycle.to_vec()))?;
        Ok(out)
    }

    fn walk(&self, mut on_cycle: impl FnMut(&[ProjPoint])) -> Result<()> {
        let f = self.field;
        let total = f.order() + 1;
        let mut visited = vec![false; total as usize];
        let mut cycle = Vec::new();
        for start in f.proj_points() {
            let start_idx = f.point_index(&start) as usize;
            if visited[start_idx] {
                continue;
            }
            cycle.clear();
            let mut cur = start;
            loop {
                let idx = f.point_index(&cur) as usize;
                if visited[idx] {
                    return Err(Error::Integrity(format!(
                        "point {} reached twice while walking R_{{{},a}}",
                        f.format_point(&cur),
                        self.n
                    )));
                }
                visited[idx] = true;
                cycle.push(cur);
                cur = self.eval(&cur);
                if cur == start {
                    break;
                }
            }
            on_cycle(&cycle);
        }
        Ok(())
    }

    /// `gcd(n - 1, q - chi) + chi + 1`.
    pub fn fixed_point_count(&self) -> u64 {
        fixed_point_formula(self.n, self.modulus(), self.chi)
    }
}

/// `gcd(n - 1, m) + chi + 1`, with `gcd(0, m) = m`.
pub fn fixed_point_formula(n: u64, m: u64, chi: Chi) -> u64 {
    gcd((n + m - 1) % m, m) + chi.extra_fixed()
}

/// For each `d | m`, `phi(d) / o_d(n)` cycles of length `o_d(n)`, plus `chi + 1` fixed points.
pub fn predicted_cycles(n: u64, m: &Factorization, chi: Chi) -> Result<CycleStructure> {
    if gcd(n % m.value(), m.value()) != 1 {
        return Err(Error::NotPermutation {
            n,
            modulus: m.value(),
        });
    }
    let mut s = CycleStructure::new();
    for d in m.divisors() {
        let phi = m.divisor(d)?.euler_phi();
        let order = mult_order(n % d, d)?;
        s.add(order, phi / order);
    }
    s.add(1, chi.extra_fixed());
    Ok(s)
}

/// Cycle structure of the monomial `x -> x^n` on `F_q`.
pub fn monomial_cycles(n: u64, field: &FieldSpec) -> Result<CycleStructure> {
    let q = field.order();
    if gcd(n % (q - 1), q - 1) != 1 {
        return Err(Error::domain(
            "monomial_cycles",
            format!("gcd({n}, {}) != 1", q - 1),
        ));
    }
    let mut s = predicted_cycles(n, &factorize(q - 1)?, Chi::Plus)?;
    let fixed = s.fixed_points();
    s.0.insert(1, fixed - 1);
    Ok(s)
}
