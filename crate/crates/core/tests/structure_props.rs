mod common;

use common::{brute_force_pairs, gcd, odd_prime_powers};
use redei::structure::{
    admissible_divisors, construct, construct_involutions, construct_p_cycles, count_m, count_md,
    five_cycles_by_square_roots, involutions_four_fixed, involutions_two_fixed, is_admissible,
    lagrange_3cycles, three_cycles_by_square_roots,
};
use redei::{AdmissibleQuery, Chi, Factorization, FieldSpec, ProjPoint, RedeiSpec};

type Special = fn(&Factorization, Chi, u64) -> redei::Result<Vec<u64>>;

const LENGTHS: [u64; 5] = [2, 3, 4, 5, 7];

fn constructed_pairs(q: u64, chi: Chi, j: u64) -> Vec<(u64, u64)> {
    let Ok(query) = AdmissibleQuery::for_order(q, chi, j) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for d in admissible_divisors(&query) {
        out.extend(construct(&query, d).unwrap().into_iter().map(|n| (d, n)));
    }
    out.sort_unstable();
    out
}

#[test]
fn constructors_match_brute_force_scan() {
    for q in odd_prime_powers(200) {
        for chi in Chi::BOTH {
            for j in LENGTHS {
                let mut brute = brute_force_pairs(q, chi, j);
                brute.sort_unstable();
                assert_eq!(constructed_pairs(q, chi, j), brute, "q={q} chi={chi} j={j}");
            }
        }
    }
}

#[test]
fn counts_are_consistent() {
    for q in odd_prime_powers(200) {
        for chi in Chi::BOTH {
            for j in LENGTHS {
                let Ok(query) = AdmissibleQuery::for_order(q, chi, j) else {
                    continue;
                };
                let mut total = 0;
                for d in admissible_divisors(&query) {
                    let md = count_md(&query, d).unwrap();
                    assert_eq!(construct(&query, d).unwrap().len() as u64, md);
                    total += md;
                }
                assert_eq!(
                    total,
                    count_m(query.qminus(), chi, j).unwrap(),
                    "q={q} chi={chi} j={j}"
                );
            }
        }
    }
}

#[test]
fn constructed_permutations_walk_as_predicted() {
    for q in odd_prime_powers(130) {
        let f = FieldSpec::with_order(q, None).unwrap();
        for chi in Chi::BOTH {
            let a = f.first_with_character(chi);
            for j in LENGTHS {
                let Ok(query) = AdmissibleQuery::for_order(q, chi, j) else {
                    continue;
                };
                for d in admissible_divisors(&query) {
                    for n in construct(&query, d).unwrap() {
                        let spec = RedeiSpec::new(&f, a, n).unwrap();
                        let walked = spec.empirical_cycles().unwrap();
                        assert!(walked.only_lengths_one_and(j), "q={q} n={n} {walked}");
                        let fixed = (d as i64 + chi.sign() + 1) as u64;
                        assert_eq!(walked.count(1), fixed);
                        assert_eq!(walked.count(j), (q + 1 - fixed) / j);
                        if j == 2 {
                            for pt in f.proj_points() {
                                assert_eq!(spec.eval(&spec.eval(&pt)), pt);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn admissible_divisors_are_even_and_four_implies_two() {
    for q in odd_prime_powers(1000) {
        for chi in Chi::BOTH {
            let m = chi.q_minus(q);
            for j in LENGTHS {
                let Ok(query) = AdmissibleQuery::for_order(q, chi, j) else {
                    continue;
                };
                assert!(
                    admissible_divisors(&query).iter().all(|d| d % 2 == 0),
                    "q={q} j={j}"
                );
            }
            if m <= 4 {
                continue;
            }
            let four = AdmissibleQuery::for_order(q, chi, 4).unwrap();
            let two = AdmissibleQuery::for_order(q, chi, 2).unwrap();
            for d in admissible_divisors(&four) {
                assert!(is_admissible(&two, d).unwrap(), "q={q} chi={chi} d={d}");
            }
        }
    }
}

#[test]
fn squares_of_three_cycle_exponents_stay_in_the_set() {
    for q in odd_prime_powers(1000) {
        for chi in Chi::BOTH {
            let Ok(query) = AdmissibleQuery::for_order(q, chi, 3) else {
                continue;
            };
            let m = query.modulus();
            for d in admissible_divisors(&query) {
                let ns = construct_p_cycles(query.qminus(), chi, 3, d).unwrap();
                for &n in &ns {
                    assert!(ns.contains(&(n * n % m)), "q={q} chi={chi} d={d} n={n}");
                }
            }
        }
    }
}

#[test]
fn narrow_involutions_have_no_twin_in_the_other_character() {
    for q in odd_prime_powers(1000) {
        for chi in Chi::BOTH {
            let m = chi.q_minus(q);
            if m.trailing_zeros() < 3 {
                continue;
            }
            let here = AdmissibleQuery::for_order(q, chi, 2).unwrap();
            let Ok(there) = AdmissibleQuery::for_order(q, chi.negate(), 2) else {
                continue;
            };
            let fixed = |d: u64, c: Chi| d as i64 + c.sign() + 1;
            for d in admissible_divisors(&here)
                .into_iter()
                .filter(|d| d.trailing_zeros() == 1)
            {
                for e in admissible_divisors(&there) {
                    assert_ne!(fixed(d, chi), fixed(e, chi.negate()), "q={q} d={d} e={e}");
                }
            }
        }
    }
}

#[test]
fn specialized_pipelines_agree_with_general_solver() {
    for q in odd_prime_powers(200) {
        for chi in Chi::BOTH {
            for (p, special) in [
                (3u64, three_cycles_by_square_roots as Special),
                (5, five_cycles_by_square_roots),
            ] {
                let Ok(query) = AdmissibleQuery::for_order(q, chi, p) else {
                    continue;
                };
                for d in admissible_divisors(&query) {
                    assert_eq!(
                        special(query.qminus(), chi, d).unwrap(),
                        construct_p_cycles(query.qminus(), chi, p, d).unwrap(),
                        "q={q} chi={chi} p={p} d={d}"
                    );
                }
            }
            if let Ok(ns) = lagrange_3cycles(q, chi) {
                let query = AdmissibleQuery::for_order(q, chi, 3).unwrap();
                assert_eq!(
                    ns,
                    construct_p_cycles(query.qminus(), chi, 3, 2).unwrap(),
                    "q={q}"
                );
            }
        }
    }
}

#[test]
fn few_fixed_point_involutions_match_general_formula() {
    for q in odd_prime_powers(1000) {
        let minus = AdmissibleQuery::for_order(q, Chi::Minus, 2).unwrap();
        assert_eq!(
            involutions_two_fixed(q).unwrap(),
            construct_involutions(minus.qminus(), Chi::Minus, 2).unwrap(),
            "q={q}"
        );
        let mut expected = Vec::new();
        if let Ok(plus) = AdmissibleQuery::for_order(q, Chi::Plus, 2) {
            for n in construct_involutions(plus.qminus(), Chi::Plus, 2).unwrap() {
                expected.push((n, Chi::Plus));
            }
        }
        if minus.modulus() > 4 && minus.modulus() % 4 == 0 && is_admissible(&minus, 4).unwrap() {
            for n in construct_involutions(minus.qminus(), Chi::Minus, 4).unwrap() {
                expected.push((n, Chi::Minus));
            }
        }
        assert_eq!(involutions_four_fixed(q).unwrap(), expected, "q={q}");
    }
}

#[test]
fn lagrange_formula_holds_where_it_applies() {
    let mut applied = 0;
    for q in odd_prime_powers(5000) {
        for chi in Chi::BOTH {
            let m = chi.q_minus(q);
            let Ok(ns) = lagrange_3cycles(q, chi) else {
                continue;
            };
            applied += 1;
            let brute: Vec<u64> = (1..m)
                .filter(|&n| gcd(n, m) == 1 && gcd(n - 1, m) == 2)
                .filter(|&n| (n as u128).pow(3) % m as u128 == 1)
                .collect();
            assert_eq!(ns, brute, "q={q} chi={chi}");
        }
    }
    assert!(applied > 10);
}

#[test]
fn infinity_and_zero_always_fixed_by_involutions() {
    let f = FieldSpec::with_order(125, None).unwrap();
    let a = f.first_with_character(Chi::Minus);
    let spec = RedeiSpec::new(&f, a, 125).unwrap();
    assert_eq!(spec.eval(&ProjPoint::Infinity), ProjPoint::Infinity);
    assert_eq!(spec.empirical_cycles().unwrap().count(1), 2);
}
