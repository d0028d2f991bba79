use super::arith::{ext_gcd, gcd, lcm, reduce};
use crate::error::{Error, Result};

/// A single congruence `x = residue (mod modulus)`, residue reduced into `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Congruence {
    pub residue: u64,
    pub modulus: u64,
}

impl Congruence {
    pub fn new(residue: i128, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::domain("congruence", "modulus must be positive"));
        }
        Ok(Congruence {
            residue: reduce(residue, modulus),
            modulus,
        })
    }
}

/// Simultaneous congruences on one unknown.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CongruenceSystem {
    equations: Vec<Congruence>,
}

impl CongruenceSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, residue: i128, modulus: u64) -> Result<Self> {
        self.push(residue, modulus)?;
        Ok(self)
    }

    pub fn push(&mut self, residue: i128, modulus: u64) -> Result<()> {
        self.equations.push(Congruence::new(residue, modulus)?);
        Ok(())
    }

    pub fn equations(&self) -> &[Congruence] {
        &self.equations
    }
}

impl FromIterator<Congruence> for CongruenceSystem {
    fn from_iter<I: IntoIterator<Item = Congruence>>(iter: I) -> Self {
        CongruenceSystem {
            equations: iter.into_iter().collect(),
        }
    }
}

fn conflicts(a: &Congruence, b: &Congruence) -> bool {
    let g = gcd(a.modulus, b.modulus);
    a.residue % g != b.residue % g
}

/// Merge two congruences; `None` when they are incompatible.
pub(crate) fn combine(a: Congruence, b: Congruence) -> Result<Option<Congruence>> {
    let g = gcd(a.modulus, b.modulus);
    if a.residue % g != b.residue % g {
        return Ok(None);
    }
    let l = lcm(a.modulus, b.modulus)
        .ok_or_else(|| Error::Overflow(format!("lcm({}, {})", a.modulus, b.modulus)))?;
    // x = a.r + a.m * t, with a.m * t = b.r - a.r (mod b.m)
    let (_, u, _) = ext_gcd(a.modulus as i128, b.modulus as i128)?;
    let step = (b.modulus / g) as i128;
    let diff = (b.residue as i128 - a.residue as i128) / g as i128;
    let t = (diff % step * (u % step)).rem_euclid(step);
    let x = (a.residue as i128 + a.modulus as i128 * t).rem_euclid(l as i128);
    Ok(Some(Congruence {
        residue: x as u64,
        modulus: l,
    }))
}

/// Solve a congruence system, returning `(residue, lcm of moduli)`.
pub fn crt(sys: &CongruenceSystem) -> Result<(u64, u64)> {
    let eqs = sys.equations();
    let (first, rest) = eqs
        .split_first()
        .ok_or_else(|| Error::domain("crt", "empty congruence system"))?;
    let mut acc = *first;
    for (i, eq) in rest.iter().enumerate() {
        match combine(acc, *eq)? {
            Some(next) => acc = next,
            None => {
                // pairwise compatibility implies global compatibility, so some earlier
                // equation conflicts with this one on its own
                let other = eqs[..=i]
                    .iter()
                    .find(|e| conflicts(e, eq))
                    .copied()
                    .unwrap_or(acc);
                return Err(Error::Inconsistent {
                    first: other,
                    second: *eq,
                });
            }
        }
    }
    Ok((acc.residue, acc.modulus))
}

/// All residues modulo `target` satisfying the congruence `x = residue (mod modulus)`,
/// where `modulus` divides `target`.
pub(crate) fn lifts(c: Congruence, target: u64) -> Vec<u64> {
    debug_assert_eq!(target % c.modulus, 0);
    (0..target / c.modulus)
        .map(|t| c.residue + t * c.modulus)
        .collect()
}
