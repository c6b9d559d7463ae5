use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::base_ring::{FpElement, LocalRingElement};
use crate::linalg;
use crate::scalar::{Prime, Scalar, SparseVec};

type L = LocalRingElement;

fn pr(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

/// `R[x, y]/(x^p, y^p - t x)`.
fn xy_algebra(p: u32) -> Arc<MonomialAlgebra<L>> {
    let p = pr(p);
    Arc::new(
        MonomialAlgebra::new(
            p,
            vec![
                Generator::nilpotent("x", p.get()),
                Generator::new("y", p.get(), vec![(vec![1, 0], L::t(p))]),
            ],
        )
        .unwrap(),
    )
}

fn gen(a: &Arc<MonomialAlgebra<L>>, name: &str) -> AlgebraElement<L> {
    AlgebraElement::named(a, name).unwrap()
}

/// Independent reducer for `R[x, y]/(x^p, y^p - t x)`: polynomials keyed by
/// unbounded exponent pairs, rewriting the *lowest* offending variable first
/// (the library rewrites the highest first).
fn oracle_reduce(p: u32, terms: BTreeMap<(u32, u32), L>) -> BTreeMap<(u32, u32), L> {
    let prime = pr(p);
    let mut work: Vec<((u32, u32), L)> = terms.into_iter().collect();
    let mut out: BTreeMap<(u32, u32), L> = BTreeMap::new();
    while let Some(((a, b), c)) = work.pop() {
        if a >= p {
            continue; // x^p = 0
        }
        if b >= p {
            work.push(((a + 1, b - p), c * &L::t(prime)));
            continue;
        }
        let e = out.entry((a, b)).or_insert_with(|| L::zero(prime));
        *e = e.clone() + &c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn to_oracle(e: &AlgebraElement<L>) -> BTreeMap<(u32, u32), L> {
    e.coeffs()
        .iter()
        .map(|(i, c)| {
            let ex = e.parent().exponents(i);
            ((ex[0], ex[1]), c.clone())
        })
        .collect()
}

fn oracle_mul(p: u32, a: &BTreeMap<(u32, u32), L>, b: &BTreeMap<(u32, u32), L>) -> BTreeMap<(u32, u32), L> {
    let prime = pr(p);
    let mut prod: BTreeMap<(u32, u32), L> = BTreeMap::new();
    for (&(a1, b1), c1) in a {
        for (&(a2, b2), c2) in b {
            let e = prod.entry((a1 + a2, b1 + b2)).or_insert_with(|| L::zero(prime));
            *e = e.clone() + &(c1.clone() * c2);
        }
    }
    oracle_reduce(p, prod)
}

#[test]
fn xy_relations_at_p2() {
    let a = xy_algebra(2);
    let (x, y) = (gen(&a, "x"), gen(&a, "y"));
    let t = L::t(pr(2));
    assert_eq!(&y * &y, x.scale(&t));
    assert!((&x * &x).is_zero());
    let xy = &x * &y;
    assert!((&xy * &y).is_zero());
    // oracle: (x*y)*y = t*x^2 -> 0
    let oracle = oracle_mul(2, &to_oracle(&xy), &to_oracle(&y));
    assert!(oracle.is_empty());
}

#[test]
fn xy_algebra_ranks_and_relations() {
    for p in [2, 3, 5] {
        let a = xy_algebra(p);
        assert_eq!(a.rank(), (p * p) as usize);
        let (x, y) = (gen(&a, "x"), gen(&a, "y"));
        assert!(x.pow(p as u64).is_zero());
        assert_eq!(y.pow(p as u64), x.scale(&L::t(pr(p))));
        assert_eq!(a.relation_string(1), format!("y^{p} = t*x"));
    }
}

#[test]
fn tensor_square_has_rank_sixteen() {
    let a = xy_algebra(2);
    let aa = MonomialAlgebra::tensor(&a, &a).unwrap();
    assert_eq!(aa.rank(), 16);
    assert_eq!(aa.factor_sizes(), &[2, 2]);
}

#[test]
fn tensor_with_unit_algebra_is_unchanged() {
    let a = xy_algebra(3);
    let unit = MonomialAlgebra::unit(pr(3));
    let au = MonomialAlgebra::tensor(&a, &unit).unwrap();
    assert_eq!(au.rank(), a.rank());
    assert_eq!(au.multiplication_map(), a.multiplication_map());
}

#[test]
fn tensor_products_reduce_componentwise() {
    let a = xy_algebra(2);
    let aa = Arc::new(MonomialAlgebra::tensor(&a, &a).unwrap());
    let one = AlgebraElement::one(&a);
    let (x, y) = (gen(&a, "x"), gen(&a, "y"));
    let y1 = AlgebraElement::tensor(&y, &one, &aa).unwrap();
    let one_y = AlgebraElement::tensor(&one, &y, &aa).unwrap();
    assert_eq!(&y1 * &one_y, AlgebraElement::tensor(&y, &y, &aa).unwrap());
    // componentwise oracle: (1⊗y)(1⊗y) = (1·1)⊗(y·y)
    let right = AlgebraElement::tensor(&one, &(&y * &y), &aa).unwrap();
    assert_eq!(&one_y * &one_y, right);
    assert_eq!(right, AlgebraElement::tensor(&one, &x, &aa).unwrap().scale(&L::t(pr(2))));
    assert_eq!(right.to_string(), "t*1⊗x");
}

fn deformation_comultiplication(a: &Arc<MonomialAlgebra<L>>, aa: &Arc<MonomialAlgebra<L>>, with_forced_term: bool) -> Vec<AlgebraElement<L>> {
    let p = a.prime();
    let one = AlgebraElement::one(a);
    let (x, y) = (gen(a, "x"), gen(a, "y"));
    let t = |e: &AlgebraElement<L>, f: &AlgebraElement<L>| AlgebraElement::tensor(e, f, aa).unwrap();
    let mut dx = &t(&one, &x) + &t(&x, &one);
    if with_forced_term {
        dx = &dx + &t(&x, &x).scale(&L::t_pow(p, p.get() as usize + 1));
    }
    let dy = &(&t(&one, &y) + &t(&y, &one)) + &t(&y, &y).scale(&L::t(p));
    vec![dx, dy]
}

#[test]
fn comultiplication_respects_relations_only_with_forced_term() {
    let a = xy_algebra(2);
    let aa = Arc::new(MonomialAlgebra::tensor(&a, &a).unwrap());
    let good = deformation_comultiplication(&a, &aa, true);
    let delta = algebra_hom(&a, &aa, &good).unwrap();
    assert_eq!(
        delta.apply(&gen(&a, "y")).unwrap().to_string(),
        "1⊗y + y⊗1 + t*y⊗y"
    );
    assert_eq!(
        delta.apply(&gen(&a, "x")).unwrap().to_string(),
        "1⊗x + x⊗1 + t^3*x⊗x"
    );
    let bad = deformation_comultiplication(&a, &aa, false);
    match algebra_hom(&a, &aa, &bad) {
        Err(AlgebraError::RelationViolation { index, .. }) => assert_eq!(index, 1),
        other => panic!("expected a relation violation, got {other:?}"),
    }
}

#[test]
fn identity_hom_and_composition() {
    let a = xy_algebra(3);
    let images = vec![gen(&a, "x"), gen(&a, "y")];
    let id = algebra_hom(&a, &a, &images).unwrap();
    assert_eq!(id.matrix, LinearMap::identity(pr(3), 9));
    assert_eq!(id.apply(&gen(&a, "x")).unwrap(), gen(&a, "x"));
    let aa = Arc::new(MonomialAlgebra::tensor(&a, &a).unwrap());
    let delta = algebra_hom(&a, &aa, &deformation_comultiplication(&a, &aa, true)).unwrap();
    assert_eq!(delta.matrix.compose(&id.matrix).unwrap(), delta.matrix);
    assert!(matches!(
        id.matrix.compose(&delta.matrix),
        Err(AlgebraError::DimensionMismatch(_))
    ));
}

#[test]
fn image_count_and_parent_are_checked() {
    let a = xy_algebra(2);
    let b = xy_algebra(3);
    assert!(matches!(
        algebra_hom(&a, &a, &[gen(&a, "x")]),
        Err(AlgebraError::ImageCount { expected: 2, got: 1 })
    ));
    assert_eq!(gen(&a, "x").multiply(&gen(&b, "x")), Err(AlgebraError::ParentMismatch));
}

#[test]
fn cyclic_rules_are_rejected() {
    let p = pr(3);
    let gens = vec![
        Generator::new("u", 2, vec![(vec![0, 1], FpElement::one(p))]),
        Generator::new("v", 2, vec![(vec![1, 0], FpElement::one(p))]),
    ];
    assert!(matches!(
        MonomialAlgebra::new(p, gens),
        Err(AlgebraError::InadmissibleRules(_))
    ));
    // a self-loop only lowers the exponent, so u^3 = u is fine
    let ok = MonomialAlgebra::new(p, vec![Generator::new("u", 3, vec![(vec![1], FpElement::one(p))])]).unwrap();
    let ok = Arc::new(ok);
    let u = AlgebraElement::generator(&ok, 0);
    assert_eq!(u.pow(5), u.pow(3)); // u^5 = u^3 = u
}

#[test]
fn rules_must_be_normal_forms() {
    let p = pr(2);
    let gens = vec![Generator::new("x", 2, vec![(vec![2], FpElement::one(p))])];
    assert!(matches!(MonomialAlgebra::new(p, gens), Err(AlgebraError::MalformedRule { .. })));
}

#[test]
fn rank_guard() {
    let p = pr(2);
    let gens = (0..15).map(|i| Generator::<FpElement>::nilpotent(format!("e{i}"), 2)).collect();
    assert!(matches!(MonomialAlgebra::new(p, gens), Err(AlgebraError::RankGuard { .. })));
}

#[test]
fn unipotent_inverse() {
    let a = xy_algebra(3);
    let p = pr(3);
    let u = &AlgebraElement::one(&a) + &gen(&a, "y").scale(&L::t(p));
    let inv = u.try_inverse().unwrap();
    assert!((&u * &inv).constant_term().is_one());
    assert_eq!(&u * &inv, AlgebraElement::one(&a));
    assert!(gen(&a, "y").try_inverse().is_err());
}

#[test]
fn parse_grammar() {
    let p = pr(2);
    let b = parse_test_algebra("Fp[e]/(e^2)", p).unwrap();
    assert_eq!(b.rank(), 2);
    let b = parse_test_algebra(" F2[e, d]/(e^2, d^3) ", p).unwrap();
    assert_eq!(b.rank(), 6);
    assert_eq!(parse_test_algebra("Fp", p).unwrap().rank(), 1);
    for bad in ["Fq", "F3[e]/(e^2)", "Fp[e]/(d^2)", "Fp[e]", "Fp[e,d]/(e^2)", "Fp[e]/(e^0)", "Fp[e,e]/(e^2)"] {
        let err = parse_test_algebra(bad, p).unwrap_err();
        assert!(err.to_string().contains("algebra   :="), "{bad}: {err}");
    }
}

fn arb_element(p: u32) -> impl Strategy<Value = AlgebraElement<L>> {
    let a = xy_algebra(p);
    let prime = pr(p);
    let rank = a.rank();
    prop::collection::vec((0i64..p as i64, 0i64..p as i64), rank).prop_map(move |cs| {
        let v = SparseVec::from_entries(cs.into_iter().enumerate().map(|(i, (c0, c1))| {
            (i, L::from_poly(crate::base_ring::UnivariatePoly::from_coeffs(prime, &[c0, c1])))
        }));
        AlgebraElement::from_vec(a.clone(), v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative_and_commutative(a in arb_element(3), b in arb_element(3), c in arb_element(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        let one = AlgebraElement::one(a.parent());
        prop_assert_eq!(&one * &a, a.clone());
    }

    #[test]
    fn normal_form_matches_independent_reducer(a in arb_element(3), b in arb_element(3)) {
        let ours = to_oracle(&(&a * &b));
        let theirs = oracle_mul(3, &to_oracle(&a), &to_oracle(&b));
        prop_assert_eq!(ours, theirs);
    }

    #[test]
    fn algebra_hom_is_multiplicative(a in arb_element(2), b in arb_element(2)) {
        let alg = a.parent().clone();
        let aa = Arc::new(MonomialAlgebra::tensor(&alg, &alg).unwrap());
        let delta = algebra_hom(&alg, &aa, &deformation_comultiplication(&alg, &aa, true)).unwrap();
        let lhs = delta.apply(&(&a * &b)).unwrap();
        let rhs = &delta.apply(&a).unwrap() * &delta.apply(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_multiplication_is_componentwise(a in arb_element(2), b in arb_element(2), c in arb_element(2), d in arb_element(2)) {
        let alg = a.parent().clone();
        let aa = Arc::new(MonomialAlgebra::tensor(&alg, &alg).unwrap());
        let ab = AlgebraElement::tensor(&a, &b, &aa).unwrap();
        let cd = AlgebraElement::tensor(&c, &d, &aa).unwrap();
        prop_assert_eq!(&ab * &cd, AlgebraElement::tensor(&(&a * &c), &(&b * &d), &aa).unwrap());
    }

    #[test]
    fn inverse_of_linear_map_is_two_sided(cs in prop::collection::vec(0i64..3, 4)) {
        // unipotent upper-triangular 3x3 over the local ring
        let p = pr(3);
        let e = |c: i64| L::from_poly(crate::base_ring::UnivariatePoly::from_coeffs(p, &[c, 1]));
        let one = L::one(p);
        let zero = L::zero(p);
        let m = LinearMap::from_dense(p, &[
            vec![one.clone(), e(cs[0]), e(cs[1])],
            vec![zero.clone(), one.clone(), e(cs[2])],
            vec![zero.clone(), zero, one],
        ]);
        let inv = linalg::invert(&m).unwrap();
        prop_assert_eq!(inv.compose(&m).unwrap(), LinearMap::identity(p, 3));
        prop_assert_eq!(m.compose(&inv).unwrap(), LinearMap::identity(p, 3));
    }
}
