use super::{
    admissible_divisors, construct, count_m, count_md, exists_1j, AdmissibleQuery, CycleKind,
};
use crate::error::{Error, Result};
use crate::ffield::Chi;
use crate::intmod::{factorize, is_prime, Factorization};

/// One admissible divisor with every exponent realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionRow {
    pub d: u64,
    pub md: u64,
    pub n_values: Vec<u64>,
    pub fixed_points: u64,
    pub j_cycles: u64,
}

/// Existence, total count and per-divisor constructions for one `(q, chi, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub q: u64,
    pub chi: Chi,
    pub j: u64,
    pub exists: bool,
    pub total_m: u64,
    pub rows: Vec<ConstructionRow>,
    /// Primes `1 (mod j)` dividing `q - chi`; `None` for `j = 2`.
    pub witness_primes: Option<Vec<u64>>,
    /// Whether `j^2 | q - chi`; only meaningful for odd `j`.
    pub j_squared_divides: Option<bool>,
}

pub fn build_table(q: u64, chi: Chi, j: u64) -> Result<TableReport> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::domain("build_table", format!("q = {q} must be odd")));
    }
    let kind = CycleKind::from_length(j)?;
    let qminus = factorize(chi.q_minus(q))?;
    let m = qminus.value();
    let witness_primes = match kind {
        CycleKind::Involution => None,
        _ => Some(qminus.primes().filter(|&r| r % j == 1).collect()),
    };
    let j_squared_divides = match kind {
        CycleKind::OddPrime(p) => Some(qminus.exponent(p) >= 2),
        _ => None,
    };
    let mut report = TableReport {
        q,
        chi,
        j,
        exists: false,
        total_m: 0,
        rows: Vec::new(),
        witness_primes,
        j_squared_divides,
    };
    if j >= m {
        return Ok(report);
    }
    let query = AdmissibleQuery::new(qminus.clone(), chi, j)?;
    report.exists = exists_1j(&qminus, chi, j)?;
    report.total_m = count_m(&qminus, chi, j)?;
    for d in admissible_divisors(&query) {
        let n_values = construct(&query, d)?;
        let fixed_points = (d as i64 + chi.sign() + 1) as u64;
        report.rows.push(ConstructionRow {
            d,
            md: count_md(&query, d)?,
            n_values,
            fixed_points,
            j_cycles: (q + 1 - fixed_points) / j,
        });
    }
    let sum_md: u64 = report.rows.iter().map(|r| r.md).sum();
    let sum_n: u64 = report.rows.iter().map(|r| r.n_values.len() as u64).sum();
    if sum_md != report.total_m || sum_n != report.total_m {
        return Err(Error::Consistency(format!(
            "({q}, {chi}, {j}): M = {} but rows give {sum_md} counted and {sum_n} constructed",
            report.total_m
        )));
    }
    if report.exists != !report.rows.is_empty() {
        return Err(Error::Consistency(format!(
            "({q}, {chi}, {j}): existence {} disagrees with {} admissible divisors",
            report.exists,
            report.rows.len()
        )));
    }
    Ok(report)
}

/// Odd primes `p < q - chi` for which some permutation with `1`- and `p`-cycles exists.
pub fn odd_primes_with_cycles(qminus: &Factorization) -> Vec<u64> {
    let m = qminus.value();
    let mut out: Vec<u64> = qminus
        .primes()
        .flat_map(|r| {
            let mut ps: Vec<u64> = factorize(r - 1)
                .map(|f| f.primes().filter(|&p| p > 2).collect())
                .unwrap_or_default();
            if qminus.exponent(r) >= 2 && r > 2 {
                ps.push(r);
            }
            ps
        })
        .filter(|&p| p < m && is_prime(p))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(q: u64, chi: Chi, j: u64) -> Vec<(u64, Vec<u64>)> {
        build_table(q, chi, j)
            .unwrap()
            .rows
            .into_iter()
            .map(|r| (r.d, r.n_values))
            .collect()
    }

    #[test]
    fn spec_rows() {
        assert_eq!(
            rows(125, Chi::Plus, 2),
            vec![(2, vec![123]), (4, vec![61]), (62, vec![63])]
        );
        assert_eq!(
            rows(125, Chi::Minus, 2),
            vec![(2, vec![125]), (14, vec![71]), (18, vec![55])]
        );
        assert_eq!(
            rows(841, Chi::Minus, 5),
            vec![(2, vec![279, 377, 673, 775])]
        );
    }

    #[test]
    fn row_invariants() {
        let t = build_table(841, Chi::Plus, 2).unwrap();
        assert_eq!(t.total_m, 31);
        assert_eq!(t.rows.len(), 23);
        for r in &t.rows {
            assert_eq!(r.fixed_points + 2 * r.j_cycles, 842);
            assert!(r.n_values.iter().all(|n| n % 2 == 1));
        }
    }

    #[test]
    fn absent_lengths() {
        let t = build_table(125, Chi::Plus, 4).unwrap();
        assert!(!t.exists && t.rows.is_empty() && t.total_m == 0);
        assert_eq!(t.witness_primes, Some(vec![]));
        let t = build_table(3, Chi::Plus, 2).unwrap();
        assert!(!t.exists && t.rows.is_empty());
        let t = build_table(125, Chi::Minus, 3).unwrap();
        assert_eq!(t.witness_primes, Some(vec![7]));
        assert_eq!(t.j_squared_divides, Some(true));
    }

    #[test]
    fn odd_primes() {
        assert_eq!(odd_primes_with_cycles(&factorize(124).unwrap()), vec![3, 5]);
        assert_eq!(odd_primes_with_cycles(&factorize(126).unwrap()), vec![3]);
        assert_eq!(
            odd_primes_with_cycles(&factorize(842).unwrap()),
            vec![3, 5, 7]
        );
        assert_eq!(odd_primes_with_cycles(&factorize(840).unwrap()), vec![3]);
    }
}
