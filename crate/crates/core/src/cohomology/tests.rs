use num_bigint::BigUint;
use proptest::prelude::*;

use super::*;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// Multisets of size `i` from `m` kinds, counted by brute-force recursion.
fn stars_and_bars(m: u64, i: u64) -> u64 {
    match (m, i) {
        (_, 0) => 1,
        (0, _) => 0,
        _ => (0..=i).map(|first| stars_and_bars(m - 1, i - first)).sum(),
    }
}

/// Pascal's triangle by addition only.
fn pascal(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![big(1)]];
    for r in 1..=n {
        let prev = &rows[r - 1];
        let mut row = vec![big(1); r + 1];
        for k in 1..r {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

#[test]
fn constant_cyclic_and_alpha_series_are_all_ones() {
    let s = series_constant_cyclic(7);
    assert_eq!(s.get(0).unwrap(), &big(1));
    assert_eq!(s.get(7).unwrap(), &big(1));
    let a = series_b_alpha_p(5);
    assert_eq!(a.get(5).unwrap(), &big(1));
    for k in 1..=6 {
        let sum: BigUint = a.coefficients()[..k].iter().sum();
        assert_eq!(sum, big(k as u64));
    }
}

#[test]
fn truncation_is_enforced() {
    let s = series_constant_cyclic(3);
    assert_eq!(
        s.get(4),
        Err(CohomologyError::Truncation { degree: 4, max_degree: 3 })
    );
    assert!(matches!(
        projective_bundle(&s, 5, 4),
        Err(CohomologyError::Truncation { .. })
    ));
    assert!(PoincareSeries::new(Vec::new()).is_err());
}

#[test]
fn kunneth_examples() {
    let s = PoincareSeries::from_u64(&[3, 1, 4, 1, 5]).unwrap();
    assert_eq!(kunneth(&PoincareSeries::unit(4), &s), s);
    let sq = kunneth(&PoincareSeries::ones(10), &PoincareSeries::ones(10));
    for i in 0..=10 {
        assert_eq!(sq.coefficients()[i], big(i as u64 + 1));
    }
    let short = PoincareSeries::ones(2);
    assert_eq!(kunneth(&s, &short).max_degree(), 2);
}

#[test]
fn dim_bgn_examples() {
    assert_eq!(dim_bgn(1, 1, Fiber::Special).unwrap(), big(2));
    assert_eq!(dim_bgn(1, 1, Fiber::Generic).unwrap(), big(1));
    for n in 1..6 {
        assert_eq!(dim_bgn(n, 0, Fiber::Special).unwrap(), big(1));
        assert_eq!(dim_bgn(n, 0, Fiber::Generic).unwrap(), big(1));
    }
    assert_eq!(dim_bgn(3, 4, Fiber::Special).unwrap(), pascal(9)[9][4]);
    assert_eq!(dim_bgn(3, 4, Fiber::Special).unwrap(), big(126));
    assert!(dim_bgn(0, 1, Fiber::Generic).is_err());
    assert!(dim_bgn(1, MAX_ARGUMENT + 1, Fiber::Generic).is_err());
}

#[test]
fn dim_bgn_is_exact_beyond_u64() {
    // C(399, 200) has 119 digits.
    let v = dim_bgn(100, 200, Fiber::Special).unwrap();
    assert_eq!(v, pascal(399)[399][200]);
    assert!(v.bits() > 64);
}

#[test]
fn dim_bgn_counts_multisets() {
    for n in 1..=4u64 {
        for i in 0..=8u64 {
            assert_eq!(dim_bgn(n, i, Fiber::Generic).unwrap(), big(stars_and_bars(n, i)));
            assert_eq!(dim_bgn(n, i, Fiber::Special).unwrap(), big(stars_and_bars(2 * n, i)));
        }
    }
}

#[test]
fn pascal_consistency_by_cross_multiplication() {
    for n in 1..=10u64 {
        for fiber in [Fiber::Generic, Fiber::Special] {
            let m = if fiber == Fiber::Generic { n } else { 2 * n };
            for i in 1..=30u64 {
                let cur = dim_bgn(n, i, fiber).unwrap();
                let prev = dim_bgn(n, i - 1, fiber).unwrap();
                assert_eq!(cur * i, prev * (m + i - 1), "n = {n}, i = {i}");
            }
        }
    }
}

#[test]
fn kunneth_powers_match_stars_and_bars() {
    let ones = PoincareSeries::ones(20);
    for m in 1..=8u32 {
        let power = ones.power(m);
        for i in 0..=20usize {
            assert_eq!(power.coefficients()[i], big(stars_and_bars(m as u64, i as u64)), "m = {m}, i = {i}");
        }
    }
}

#[test]
fn binomial_vs_kunneth_reports() {
    let r = verify_binomial_vs_kunneth(3, 10).unwrap();
    assert!(r.passed());
    assert_eq!(r.max_degree, 10);
    assert!(verify_binomial_vs_kunneth(1, 12).unwrap().passed());
    assert!(verify_binomial_vs_kunneth(4, 15).unwrap().passed());
    assert!(verify_binomial_vs_kunneth(0, 3).is_err());
}

#[test]
fn incremental_cross_check_agrees_with_single_n() {
    let all = verify_binomial_vs_kunneth_upto(6, 20).unwrap();
    assert_eq!(all.len(), 6);
    for r in &all {
        assert!(r.passed(), "n = {}", r.n);
        assert_eq!(r, &verify_binomial_vs_kunneth(r.n, 20).unwrap());
    }
}

#[test]
fn projective_bundle_examples() {
    let ones = PoincareSeries::ones(10);
    assert_eq!(projective_bundle(&ones, 100, 4).unwrap(), big(3));
    let s = PoincareSeries::from_u64(&[1, 7, 2, 9, 4]).unwrap();
    for i in 0..=4 {
        assert_eq!(projective_bundle(&s, 0, i).unwrap(), s.coefficients()[i]);
    }
    assert_eq!(projective_bundle(&s, 10, 1).unwrap(), big(7));
    assert_eq!(projective_bundle(&s, 1, 4).unwrap(), big(6));
    assert_eq!(projective_bundle(&s, 2, 4).unwrap(), big(7));
}

#[test]
fn projective_bundle_monotone_and_stabilizes() {
    let s = fiber_series(3, Fiber::Special, 12).unwrap();
    for i in 0..=12usize {
        let stable = stabilized_n(i as u64);
        let mut last = BigUint::default();
        for big_n in 0..=10u64 {
            let v = projective_bundle(&s, big_n, i).unwrap();
            assert!(v >= last);
            if big_n >= stable {
                assert_eq!(v, projective_bundle(&s, stable, i).unwrap());
            }
            last = v;
        }
    }
}

#[test]
fn minimal_n_examples() {
    let solve = |e, i| minimal_n_for_jump(&JumpQuery::new(e, i, None).unwrap()).unwrap();
    assert_eq!(solve(1, 1).n, 1);
    assert_eq!(solve(5, 1).n, 5);
    assert_eq!(solve(10, 1).n, 10);
    let s = solve(1, 2);
    assert_eq!((s.n, s.special.clone(), s.generic.clone()), (1, big(3), big(1)));
    assert!(s.holds_at_next);
    assert!(JumpQuery::new(1, 0, None).is_err());
    assert!(JumpQuery::new(0, 1, None).is_err());
}

#[test]
fn minimal_n_matches_brute_force_and_is_monotone_in_e() {
    for i in 1..=10u64 {
        let mut last = 0;
        for e in 1..=50u64 {
            let n = minimal_n_for_jump(&JumpQuery::new(e, i, None).unwrap()).unwrap().n;
            assert!(n >= last, "e = {e}, i = {i}");
            last = n;
            // Independent oracle: multiset counts with u64 arithmetic.
            let ok = |k: u64| stars_and_bars(2 * k, i) >= stars_and_bars(k, i) + e;
            assert!(ok(n));
            assert!((1..n).all(|k| !ok(k)), "e = {e}, i = {i}, n = {n}");
            if i > 6 {
                break;
            }
        }
    }
}

#[test]
fn fiber_jump_examples() {
    for big_n in [0, 1, 5] {
        assert_eq!(fiber_jump(1, 1, big_n).unwrap().jump, 1.into());
    }
    for n in 1..4 {
        assert_eq!(fiber_jump(n, 0, 3).unwrap().jump, 0.into());
    }
    let j = fiber_jump(2, 2, 1).unwrap();
    assert_eq!(j.special_total, big(11));
    assert_eq!(j.generic_total, big(4));
    assert_eq!(j.jump, 7.into());
    assert_eq!(j.degree_gap, 7.into());
    assert_eq!(j.terms.len(), 2);
    assert!(j.termwise_dominated);
}

#[test]
fn fiber_jump_at_solver_output_meets_e() {
    for i in 1..=8u64 {
        for e in [1, 2, 7, 20] {
            let sol = minimal_n_for_jump(&JumpQuery::new(e, i, None).unwrap()).unwrap();
            for big_n in [0, 1, stabilized_n(i), 10] {
                let j = fiber_jump(sol.n, i, big_n).unwrap();
                assert!(j.termwise_dominated);
                assert!(j.jump >= BigInt::from(e), "e = {e}, i = {i}, N = {big_n}");
            }
        }
    }
}

proptest! {
    #[test]
    fn kunneth_commutes(
        a in prop::collection::vec(0u64..1000, 1..12),
        b in prop::collection::vec(0u64..1000, 1..12),
    ) {
        let (s, t) = (PoincareSeries::from_u64(&a).unwrap(), PoincareSeries::from_u64(&b).unwrap());
        prop_assert_eq!(kunneth(&s, &t), kunneth(&t, &s));
    }

    #[test]
    fn kunneth_is_associative(
        a in prop::collection::vec(0u64..100, 6),
        b in prop::collection::vec(0u64..100, 6),
        c in prop::collection::vec(0u64..100, 6),
    ) {
        let (s, t, u) = (
            PoincareSeries::from_u64(&a).unwrap(),
            PoincareSeries::from_u64(&b).unwrap(),
            PoincareSeries::from_u64(&c).unwrap(),
        );
        prop_assert_eq!(kunneth(&kunneth(&s, &t), &u), kunneth(&s, &kunneth(&t, &u)));
    }
}
