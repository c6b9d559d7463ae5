use proptest::prelude::*;

use super::*;
use crate::algebra::{AlgebraElement, LinearMap};
use crate::base_ring::{FpElement, LocalRingElement, RationalFunction};
use crate::combinat::factorial_mod_p;
use crate::scalar::{Prime, Scalar, SparseVec};

type L = LocalRingElement;
type F = FpElement;
type Q = RationalFunction;

fn pr(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

fn deformation(p: u32) -> HopfPresentation<L> {
    build_deformation_hopf(pr(p)).unwrap()
}

fn gen<S: Scalar>(h: &HopfPresentation<S>, name: &str) -> AlgebraElement<S> {
    h.generator(name).unwrap()
}

fn assert_iso<S: Scalar>(rec: &Recognition<S>) {
    let report = rec.verify();
    assert!(report.passed(), "{:?}", report.first_failure());
}

#[test]
fn comultiplication_of_x_carries_the_forced_term() {
    let h = deformation(2);
    assert_eq!(h.comultiply(&gen(&h, "x")).to_string(), "1⊗x + x⊗1 + t^3*x⊗x");
    assert_eq!(h.comultiply(&gen(&h, "y")).to_string(), "1⊗y + y⊗1 + t*y⊗y");
    let h3 = deformation(3);
    assert_eq!(h3.comultiply(&gen(&h3, "x")).to_string(), "1⊗x + x⊗1 + t^4*x⊗x");
}

#[test]
fn counit_vanishes_on_generators() {
    for p in [2, 3] {
        let h = deformation(p);
        assert!(h.counit_of(&gen(&h, "y")).is_zero());
        assert!(h.counit_of(&gen(&h, "x")).is_zero());
        assert!(h.counit_of(&AlgebraElement::one(h.algebra())).is_one());
    }
}

/// `-y/(1+ty) = -Σ_{k>=1} (-t)^{k-1} y^k`, with `y^{ap+b} = t^a x^a y^b`
/// and `x^p = 0` cutting the sum at `k = p^2`.
fn antipode_of_y_closed_form(p: u32) -> Vec<((u32, u32), L)> {
    let prime = pr(p);
    (1..p * p)
        .map(|k| {
            let (a, b) = (k / p, k % p);
            let sign = if (k - 1) % 2 == 0 { -1 } else { 1 };
            let c = L::from_int(prime, sign) * L::t_pow(prime, (k - 1 + a) as usize);
            ((a, b), c)
        })
        .collect()
}

#[test]
fn antipode_of_y_matches_geometric_series() {
    for p in [2, 3, 5] {
        let h = deformation(p);
        let s = h.apply_antipode(&gen(&h, "y"));
        let expected = antipode_of_y_closed_form(p)
            .into_iter()
            .fold(AlgebraElement::zero(h.algebra()), |acc, ((a, b), c)| {
                &acc + &AlgebraElement::monomial(h.algebra(), &[a, b], c)
            });
        assert_eq!(s, expected, "p = {p}");
        let one_ty = &AlgebraElement::one(h.algebra()) + &gen(&h, "y").scale(&L::t(pr(p)));
        assert_eq!(&s * &one_ty, -&gen(&h, "y"));
    }
}

#[test]
fn antipode_of_y_at_p3_leading_terms() {
    let h = deformation(3);
    let s = h.apply_antipode(&gen(&h, "y"));
    let p = pr(3);
    // -y + t y^2 - t^2 y^3, and y^3 = t x
    assert_eq!(s.coefficient(&[0, 1]), L::from_int(p, -1));
    assert_eq!(s.coefficient(&[0, 2]), L::t(p));
    assert_eq!(s.coefficient(&[1, 0]), -L::t_pow(p, 3));
}

#[test]
fn deformation_satisfies_every_axiom() {
    for p in [2, 3] {
        let report = verify_axioms(deformation(p).structure());
        assert!(report.all_required_pass(), "p = {p}: {:?}", report.first_failure());
        assert!(report.get(Axiom::Cocommutativity).passed);
    }
}

#[test]
fn catalog_alpha_is_cocommutative_hopf() {
    for p in [2, 3, 5] {
        let entry = catalog_build::<F>(CatalogName::AlphaP, pr(p), 1).unwrap();
        let report = verify_axioms(&entry.structure);
        assert!(report.all_required_pass());
        assert!(report.get(Axiom::Cocommutativity).passed);
        let h = entry.presentation.unwrap();
        assert!(h.structure().is_primitive(gen(&h, "x").coeffs()));
    }
}

#[test]
fn mutations_are_caught_where_expected() {
    let p = pr(2);
    for m in [Mutation::DropTwistTerm, Mutation::DropForcedTerm] {
        match build_deformation_hopf_with(p, Some(m)) {
            Err(HopfError::Relation {
                map: StructureMap::Comultiplication,
                source: crate::algebra::AlgebraError::RelationViolation { index, .. },
            }) => assert_eq!(index, 1, "{m}: the y relation breaks"),
            other => panic!("{m}: expected a relation violation, got {other:?}"),
        }
    }
    let h = build_deformation_hopf_with(p, Some(Mutation::CorruptAntipode)).unwrap();
    let report = verify_axioms(h.structure());
    let failure = report.first_failure().unwrap();
    assert_eq!(failure.axiom, Axiom::Antipode);
    assert!(failure.witness.as_ref().unwrap().starts_with("at y:"), "{:?}", failure.witness);
    assert!(report.get(Axiom::Coassociativity).passed);
}

#[test]
fn dropping_the_twist_breaks_the_relation_by_hand() {
    // (1⊗y + y⊗1)^p = t(1⊗x + x⊗1), while t·Δ(x) has the extra t^{p+2} x⊗x
    for p in [2u32, 3] {
        let err = build_deformation_hopf_with(pr(p), Some(Mutation::DropTwistTerm)).unwrap_err();
        assert!(err.to_string().contains(&format!("t^{}*x⊗x", p + 2)), "{err}");
    }
}

#[test]
fn mutation_names_round_trip() {
    for m in Mutation::ALL {
        assert_eq!(m.name().parse::<Mutation>().unwrap(), m);
    }
    assert!("nonsense".parse::<Mutation>().is_err());
}

#[test]
fn special_fiber_is_primitive() {
    for p in [2, 3] {
        let s = deformation(p).specialize_special().unwrap();
        assert_eq!(s.comultiply(&gen(&s, "y")).to_string(), "1⊗y + y⊗1");
        assert_eq!(s.comultiply(&gen(&s, "x")).to_string(), "1⊗x + x⊗1");
        assert_eq!(s.apply_antipode(&gen(&s, "x")), -&gen(&s, "x"));
        assert_eq!(s.apply_antipode(&gen(&s, "y")), -&gen(&s, "y"));
        assert_eq!(s.algebra().relation_string(1), format!("y^{p} = 0"));
    }
}

#[test]
fn generic_fiber_has_grouplike_one_plus_ty() {
    for p in [2, 3] {
        let g = deformation(p).specialize_generic().unwrap();
        let u = generic_grouplike(&g).unwrap();
        let sq = g.square();
        let expected = AlgebraElement::tensor(&u, &u, sq).unwrap();
        assert_eq!(g.comultiply(&u), expected);
        assert!(g.is_grouplike(&u));
    }
}

#[test]
fn specialization_commutes_with_structure() {
    for p in [2, 3] {
        let h = deformation(p);
        let s = h.specialize_special().unwrap();
        let g = h.specialize_generic().unwrap();
        assert_eq!(h.structure().map_scalars(pr(p), |c| c.at_zero()), *s.structure());
        assert_eq!(h.structure().map_scalars(pr(p), |c| c.to_rational()), *g.structure());
        assert!(verify_axioms(s.structure()).all_required_pass());
        assert!(verify_axioms(g.structure()).all_required_pass());
    }
}

#[test]
fn grouplike_detection() {
    let s = deformation(2).specialize_special().unwrap();
    let one = AlgebraElement::one(s.algebra());
    assert!(s.is_grouplike(&one));
    let one_x = &one + &gen(&s, "x");
    assert!(!s.is_grouplike(&one_x));
    // Δ(1+x) - (1+x)⊗(1+x) = -x⊗x
    let diff = &s.comultiply(&one_x) - &AlgebraElement::tensor(&one_x, &one_x, s.square()).unwrap();
    assert_eq!(diff.to_string(), "x⊗x");
}

#[test]
fn grouplike_orders_on_the_generic_fiber() {
    for p in [2u32, 3] {
        let g = deformation(p).specialize_generic().unwrap();
        let u = generic_grouplike(&g).unwrap();
        assert_eq!(g.grouplike_order(&u), GrouplikeOrder::Order((p * p) as u64));
        assert_eq!(g.grouplike_order(&u.pow(p as u64)), GrouplikeOrder::Order(p as u64));
        assert_eq!(g.grouplike_order(&AlgebraElement::one(g.algebra())), GrouplikeOrder::Order(1));
        assert_eq!(g.grouplike_order(&gen(&g, "x")), GrouplikeOrder::NotGrouplike);
        // (1 + t y)^p = 1 + t^p y^p = 1 + t^{p+1} x
        let expected = &AlgebraElement::one(g.algebra()) + &gen(&g, "x").scale(&Q::t_pow(pr(p), p as usize + 1));
        assert_eq!(u.pow(p as u64), expected);
    }
}

#[test]
fn primitive_spaces() {
    let s = deformation(2).specialize_special().unwrap();
    let prims = s.primitive_space().unwrap();
    assert_eq!(prims.len(), 2);
    assert!(prims.contains(&gen(&s, "x")) && prims.contains(&gen(&s, "y")));
    assert!(prims.iter().all(|v| !v.is_zero()));

    // μ_2 over F_2(t): a = α + βz is primitive iff α = β = 0
    let m = mu::<Q>(pr(2), 2).unwrap();
    assert!(m.primitive_space().unwrap().is_empty());
    let a = alpha_p::<Q>(pr(3)).unwrap();
    assert_eq!(a.primitive_space().unwrap(), vec![gen(&a, "x")]);

    assert!(matches!(
        deformation(2).primitive_space(),
        Err(HopfError::Linalg(crate::linalg::LinalgError::NotAField(_)))
    ));
}

#[test]
fn reid_quotient_by_x() {
    for p in [2u32, 3] {
        let h = deformation(p);
        let q = hopf_quotient(&h, &[gen(&h, "x")]).unwrap();
        let qp = &q.presentation;
        assert_eq!(qp.rank(), p as usize);
        assert_eq!(q.removed, vec!["x".to_string()]);
        assert_eq!(qp.algebra().generator_names(), ["y"]);
        assert_eq!(qp.algebra().relation_string(0), format!("y^{p} = 0"));
        assert_eq!(qp.comultiply(&gen(qp, "y")).to_string(), "1⊗y + y⊗1 + t*y⊗y");
        assert!(verify_axioms(qp.structure()).all_required_pass());
    }
}

#[test]
fn quotient_by_zero_is_identity() {
    let h = deformation(2);
    let q = hopf_quotient(&h, &[AlgebraElement::zero(h.algebra())]).unwrap();
    assert_eq!(q.presentation.structure(), h.structure());
    assert_eq!(q.projection, LinearMap::identity(pr(2), 4));
}

#[test]
fn quotient_by_y_is_not_free() {
    // (y) contains y^p = t x but not x, so R[x]/(x^p, t x) has torsion
    let h = deformation(2);
    assert!(matches!(
        hopf_quotient(&h, &[gen(&h, "y")]),
        Err(HopfError::NotFreeQuotient(_))
    ));
}

#[test]
fn non_hopf_ideals_are_rejected() {
    let h = deformation(3);
    let x_minus_1 = &gen(&h, "x") - &AlgebraElement::one(h.algebra());
    assert!(matches!(
        hopf_quotient(&h, &[x_minus_1]),
        Err(HopfError::NotAHopfIdeal { axiom: "counit", .. })
    ));
    // Δ(y^2) has the term 2 y⊗y, outside I⊗A + A⊗I
    let y2 = gen(&h, "y").pow(2);
    assert!(matches!(
        hopf_quotient(&h, &[y2]),
        Err(HopfError::NotAHopfIdeal {
            axiom: "comultiplication",
            ..
        })
    ));
}

#[test]
fn special_fiber_is_alpha_squared() {
    for p in [2, 3] {
        let s = deformation(p).specialize_special().unwrap();
        let rec = special_fiber_to_alpha_square(&s).unwrap();
        assert_eq!(rec.map, LinearMap::identity(pr(p), (p * p) as usize));
        assert_iso(&rec);
    }
}

#[test]
fn generic_fiber_is_mu_p_squared() {
    for p in [2, 3] {
        let g = deformation(p).specialize_generic().unwrap();
        assert_iso(&mu_to_generic_fiber(&g).unwrap());
    }
}

#[test]
fn generic_dual_is_constant_cyclic() {
    for p in [2, 3] {
        let g = deformation(p).specialize_generic().unwrap();
        let powers = grouplike_power_matrix(&g).unwrap();
        // triangular in the monomial order, diagonal entries powers of t
        for k in 0..powers.cols() {
            assert_eq!(powers.column(k).max_index(), Some(k));
        }
        let rec = generic_dual_to_constant_cyclic(&g).unwrap();
        assert_iso(&rec);
    }
}

#[test]
fn special_dual_is_alpha_squared() {
    for p in [2, 3] {
        let s = deformation(p).specialize_special().unwrap();
        assert_iso(&special_dual_to_alpha_square(&s).unwrap());
    }
}

#[test]
fn alpha_is_self_dual_with_factorial_scaling() {
    for p in [2, 3, 5] {
        assert_iso(&alpha_self_duality::<F>(pr(p)).unwrap());
        assert_iso(&alpha_self_duality::<Q>(pr(p)).unwrap());
    }
}

#[test]
fn reversed_normalization_is_not_an_isomorphism() {
    // (x^a)^* -> x^{p-1-a} / (a! (p-1-a)!) sends the unit ε to a multiple of x^{p-1}
    let p = pr(3);
    let a = alpha_p::<F>(p).unwrap();
    let dual = cartier_dual(a.structure()).unwrap();
    let n = 3usize;
    let columns = (0..n)
        .map(|k| {
            let d = factorial_mod_p(k as u64, 3) * factorial_mod_p((n - 1 - k) as u64, 3);
            let c = FpElement::new(p, d as i64).inverse().unwrap();
            SparseVec::from_entries([(n - 1 - k, c)])
        })
        .collect();
    let phi = LinearMap::from_columns(p, n, columns);
    let report = exhibit_isomorphism(&dual, a.structure(), &phi);
    assert!(!report.passed());
    assert_eq!(report.first_failure().unwrap().identity, IsoIdentity::Unit);
}

#[test]
fn constant_cyclic_dual_is_mu() {
    for p in [2, 3] {
        assert_iso(&mu_dual_to_constant_cyclic::<F>(pr(p), p).unwrap());
        assert_iso(&mu_dual_to_constant_cyclic::<Q>(pr(p), p * p).unwrap());
    }
}

#[test]
fn double_duals_of_catalog_entries() {
    fn check<S: Scalar>(p: u32) {
        for (name, k) in [
            (CatalogName::AlphaP, 1),
            (CatalogName::Mu, 1),
            (CatalogName::Mu, 2),
            (CatalogName::ConstantCyclic, 1),
            (CatalogName::ConstantCyclic, 2),
        ] {
            let entry = catalog_build::<S>(name, pr(p), k).unwrap();
            let rec = double_dual(&entry.structure).unwrap();
            assert!(rec.verify().passed(), "{name} k = {k}");
            assert!(verify_axioms(&rec.target).all_required_pass());
        }
    }
    for p in [2, 3] {
        check::<F>(p);
        check::<Q>(p);
    }
}

#[test]
fn dual_of_functions_on_z2_has_two_grouplikes() {
    let p = pr(2);
    let dual = cartier_dual(&constant_cyclic::<F>(p, 2)).unwrap();
    let mut count = 0;
    for a in 0..2 {
        for b in 0..2 {
            let v = SparseVec::from_entries([(0, F::new(p, a)), (1, F::new(p, b))]);
            if dual.is_grouplike(&v) {
                count += 1;
            }
        }
    }
    assert_eq!(count, 2);
}

#[test]
fn cartier_dual_rejects_non_cocommutative() {
    let p = pr(2);
    let h = constant_cyclic::<F>(p, 2);
    let mut comult = h.comultiplication().columns().to_vec();
    comult[1] = SparseVec::unit(1, p); // Δ(δ1) = δ0⊗δ1
    let skew = HopfStructure::new(
        p,
        h.basis().to_vec(),
        h.multiplication().clone(),
        h.unit().clone(),
        LinearMap::from_columns(p, 4, comult),
        h.counit().clone(),
        h.antipode().clone(),
    )
    .unwrap();
    assert!(matches!(cartier_dual(&skew), Err(HopfError::NotCocommutative(_))));
}

#[test]
fn identity_is_an_isomorphism() {
    let h = deformation(2);
    assert!(exhibit_isomorphism(h.structure(), h.structure(), &LinearMap::identity(pr(2), 4)).passed());
    let wrong = LinearMap::identity(pr(2), 3);
    assert!(!exhibit_isomorphism(h.structure(), h.structure(), &wrong).passed());
}

#[test]
fn catalog_examples() {
    let m = catalog_build::<Q>(CatalogName::Mu, pr(2), 2).unwrap();
    let h = m.presentation.unwrap();
    let z = gen(&h, "z");
    assert!(h.is_grouplike(&z));
    assert_eq!(z.pow(4), AlgebraElement::one(h.algebra()));
    assert_eq!(h.grouplike_order(&z), GrouplikeOrder::Order(4));

    let c = catalog_build::<F>(CatalogName::ConstantCyclic, pr(2), 1).unwrap();
    let s = &c.structure;
    let d0 = SparseVec::unit(0, pr(2));
    let d1 = SparseVec::unit(1, pr(2));
    assert_eq!(d0.add(&d1), s.one());
    assert!(s.multiply(&d0, &d1).is_zero());

    assert!(catalog_build::<F>(CatalogName::AlphaP, pr(5), 1).is_ok());
    assert!(matches!(
        catalog_build::<F>(CatalogName::Mu, pr(2), 3),
        Err(HopfError::UnsupportedParameters(_))
    ));
    assert!(matches!(
        catalog_build::<F>(CatalogName::AlphaP, pr(2), 2),
        Err(HopfError::UnsupportedParameters(_))
    ));
}

#[test]
fn tensor_of_structures_satisfies_axioms() {
    let h = alpha_square::<F>(pr(3)).unwrap();
    assert_eq!(h.rank(), 9);
    assert!(verify_axioms(&h).all_required_pass());
    let mixed = HopfStructure::tensor(
        mu::<F>(pr(2), 2).unwrap().structure(),
        &constant_cyclic::<F>(pr(2), 2),
    );
    assert!(verify_axioms(&mixed).all_required_pass());
}

#[test]
fn summary_has_stable_fields() {
    let s = deformation(2).summary();
    assert_eq!(s.base, "Fp[t]_(t)");
    assert_eq!(s.rank, 4);
    assert_eq!(s.generators[1].relation, "y^2 = t*x");
    assert_eq!(s.comultiplication[0].image, "1⊗x + x⊗1 + t^3*x⊗x");
    assert_eq!(s.counit[1].image, "0");
}

fn arb_element(p: u32) -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((0i64..p as i64, 0i64..p as i64), (p * p) as usize)
}

fn build(h: &HopfPresentation<L>, raw: &[(i64, i64)]) -> AlgebraElement<L> {
    let p = h.prime();
    let v = SparseVec::from_entries(raw.iter().enumerate().map(|(i, &(c0, c1))| {
        (
            i,
            L::from_poly(crate::base_ring::UnivariatePoly::from_coeffs(p, &[c0, c1])),
        )
    }));
    h.element(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn antipode_is_multiplicative(a in arb_element(3), b in arb_element(3)) {
        let h = deformation(3);
        let (a, b) = (build(&h, &a), build(&h, &b));
        prop_assert_eq!(h.apply_antipode(&(&a * &b)), &h.apply_antipode(&a) * &h.apply_antipode(&b));
    }

    #[test]
    fn comultiplication_is_multiplicative(a in arb_element(2), b in arb_element(2)) {
        let h = deformation(2);
        let (a, b) = (build(&h, &a), build(&h, &b));
        prop_assert_eq!(h.comultiply(&(&a * &b)), &h.comultiply(&a) * &h.comultiply(&b));
    }
}
