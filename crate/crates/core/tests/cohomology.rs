use hopfjump::cohomology::{
    dim_bgn, fiber_jump, kunneth, minimal_n_for_jump, series_b_alpha_p, series_constant_cyclic, stabilized_n,
    JumpQuery,
};
use hopfjump::Fiber;
use proptest::prelude::*;

/// Monomials of degree `i` in `m` variables, by enumeration.
fn count_monomials(m: u64, i: u64) -> u64 {
    if m == 0 {
        return u64::from(i == 0);
    }
    (0..=i).map(|k| count_monomials(m - 1, i - k)).sum()
}

fn dim(n: u64, i: u64, fiber: Fiber) -> u64 {
    dim_bgn(n, i, fiber).unwrap().to_string().parse().unwrap()
}

#[test]
fn dimensions_count_monomials() {
    for n in 1..=4 {
        for i in 0..=8 {
            assert_eq!(dim(n, i, Fiber::Generic), count_monomials(n, i), "generic n = {n}, i = {i}");
            assert_eq!(dim(n, i, Fiber::Special), count_monomials(2 * n, i), "special n = {n}, i = {i}");
        }
    }
}

#[test]
fn one_factor_series_are_as_expected() {
    let cc = series_constant_cyclic(6);
    let ba = series_b_alpha_p(6);
    for i in 0..=6 {
        assert_eq!(cc.get(i).unwrap().to_string(), "1");
        assert_eq!(ba.get(i).unwrap().to_string(), "1");
    }
    let squared = kunneth(&ba, &ba);
    for i in 0..=6 {
        assert_eq!(squared.get(i).unwrap().to_string(), (i + 1).to_string());
    }
}

#[test]
fn jump_solver_matches_a_linear_scan() {
    for e in 1..=30 {
        for i in 1..=6 {
            let gap = |n: u64| dim(n, i, Fiber::Special) - dim(n, i, Fiber::Generic);
            let scan = (1..).find(|&n| gap(n) >= e).unwrap();
            let got = minimal_n_for_jump(&JumpQuery::new(e, i, None).unwrap()).unwrap();
            assert_eq!(got.n, scan, "e = {e}, i = {i}");
        }
    }
}

#[test]
fn zero_arguments_are_rejected() {
    assert!(JumpQuery::new(0, 3, None).is_err());
    assert!(JumpQuery::new(3, 0, None).is_err());
}

#[test]
fn fiber_jump_sums_shifted_degrees() {
    for n in 1..=4 {
        for i in 1..=9 {
            for big_n in 0..=5 {
                let fj = fiber_jump(n, i, big_n).unwrap();
                let degrees: Vec<u64> = (0..=big_n).take_while(|k| 2 * k <= i).map(|k| i - 2 * k).collect();
                let special: u64 = degrees.iter().map(|&d| count_monomials(2 * n, d)).sum();
                let generic: u64 = degrees.iter().map(|&d| count_monomials(n, d)).sum();
                assert_eq!(fj.special_total.to_string(), special.to_string());
                assert_eq!(fj.generic_total.to_string(), generic.to_string());
                assert_eq!(fj.jump.to_string(), (special - generic).to_string());
                assert!(fj.termwise_dominated);
            }
        }
    }
}

#[test]
fn stabilized_projective_dimension_is_half_the_degree() {
    for i in 1..=12 {
        let big_n = stabilized_n(i);
        let at = fiber_jump(2, i, big_n).unwrap();
        let beyond = fiber_jump(2, i, big_n + 3).unwrap();
        assert_eq!(at.jump, beyond.jump, "i = {i}");
    }
}

proptest! {
    #[test]
    fn special_fiber_dominates_generic(n in 1u64..40, i in 0u64..40) {
        prop_assert!(dim_bgn(n, i, Fiber::Special).unwrap() >= dim_bgn(n, i, Fiber::Generic).unwrap());
    }

    #[test]
    fn dimensions_grow_with_arity(n in 1u64..40, i in 1u64..40) {
        for f in [Fiber::Special, Fiber::Generic] {
            prop_assert!(dim_bgn(n + 1, i, f).unwrap() > dim_bgn(n, i, f).unwrap());
        }
    }
}
