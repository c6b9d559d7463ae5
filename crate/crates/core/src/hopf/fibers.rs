//! Explicit isomorphisms for the named fibers and duals.
//!
//! Each function builds a pair of Hopf algebras together with a candidate
//! map; nothing is assumed until [`Recognition::verify`] runs the checker.

use super::catalog::alpha_named;
use super::{cartier_dual, constant_cyclic, exhibit_isomorphism, mu, HopfError, HopfPresentation, HopfStructure, IsoReport};
use crate::algebra::{algebra_hom, AlgebraElement, LinearMap};
use crate::base_ring::{FpElement, RationalFunction};
use crate::combinat::factorial_mod_p;
use crate::linalg;
use crate::scalar::{Prime, Scalar, SparseVec};

/// A candidate isomorphism `map: source -> target`.
#[derive(Clone, Debug)]
pub struct Recognition<S> {
    pub source: HopfStructure<S>,
    pub target: HopfStructure<S>,
    pub map: LinearMap<S>,
}

impl<S: Scalar> Recognition<S> {
    pub fn verify(&self) -> IsoReport {
        exhibit_isomorphism(&self.source, &self.target, &self.map)
    }
}

/// `α_p ⊗ α_p` on primitives `u`, `v`.
pub fn alpha_square<S: Scalar>(p: Prime) -> Result<HopfStructure<S>, HopfError> {
    let u = alpha_named::<S>(p, "u")?;
    let v = alpha_named::<S>(p, "v")?;
    Ok(HopfStructure::tensor(u.structure(), v.structure()))
}

fn xy_exponents<S: Scalar>(h: &HopfPresentation<S>) -> Result<Vec<(u32, u32)>, HopfError> {
    let a = h.algebra();
    if a.generator_names() != ["x", "y"] {
        return Err(HopfError::Shape(format!(
            "expected generators x, y; found {:?}",
            a.generator_names()
        )));
    }
    Ok((0..a.rank())
        .map(|i| {
            let e = a.exponents(i);
            (e[0], e[1])
        })
        .collect())
}

/// `x^a y^b -> u^a ⊗ v^b` from the special fiber to `α_p ⊗ α_p`.
pub fn special_fiber_to_alpha_square(
    special: &HopfPresentation<FpElement>,
) -> Result<Recognition<FpElement>, HopfError> {
    let p = special.prime();
    let n = p.get() as usize;
    let columns = xy_exponents(special)?
        .into_iter()
        .map(|(a, b)| SparseVec::unit(a as usize * n + b as usize, p))
        .collect();
    Ok(Recognition {
        source: special.structure().clone(),
        target: alpha_square(p)?,
        map: LinearMap::from_columns(p, n * n, columns),
    })
}

/// `u^a ⊗ v^b -> a! b! (x^a y^b)^*` from `α_p ⊗ α_p` to the dual of the
/// special fiber.
pub fn special_dual_to_alpha_square(
    special: &HopfPresentation<FpElement>,
) -> Result<Recognition<FpElement>, HopfError> {
    let p = special.prime();
    let n = p.get() as usize;
    let exps = xy_exponents(special)?;
    let mut columns = vec![SparseVec::new(); n * n];
    for (k, &(a, b)) in exps.iter().enumerate() {
        let c = factorial_mod_p(a as u64, p.get()) * factorial_mod_p(b as u64, p.get());
        columns[a as usize * n + b as usize] = SparseVec::from_entries([(k, FpElement::new(p, c as i64))]);
    }
    Ok(Recognition {
        source: alpha_square(p)?,
        target: cartier_dual(special.structure())?,
        map: LinearMap::from_columns(p, n * n, columns),
    })
}

/// `1 + t y`, the grouplike of the generic fiber.
pub fn generic_grouplike(generic: &HopfPresentation<RationalFunction>) -> Result<AlgebraElement<RationalFunction>, HopfError> {
    let p = generic.prime();
    let y = generic
        .generator("y")
        .ok_or_else(|| HopfError::Shape("generic fiber has no generator y".into()))?;
    Ok(&AlgebraElement::one(generic.algebra()) + &y.scale(&RationalFunction::t(p)))
}

/// `z -> 1 + t y` from `μ_{p^2}` to the generic fiber; the relation
/// `(1 + t y)^{p^2} = 1` is checked on construction.
pub fn mu_to_generic_fiber(
    generic: &HopfPresentation<RationalFunction>,
) -> Result<Recognition<RationalFunction>, HopfError> {
    let p = generic.prime();
    let q = p.get() * p.get();
    let m = mu::<RationalFunction>(p, q)?;
    let g = generic_grouplike(generic)?;
    let hom = algebra_hom(m.algebra(), generic.algebra(), &[g])?;
    Ok(Recognition {
        source: m.structure().clone(),
        target: generic.structure().clone(),
        map: hom.matrix,
    })
}

/// The matrix whose `k`-th column is `(1 + t y)^k`, `0 <= k < p^2`.
pub fn grouplike_power_matrix(
    generic: &HopfPresentation<RationalFunction>,
) -> Result<LinearMap<RationalFunction>, HopfError> {
    let p = generic.prime();
    let g = generic_grouplike(generic)?;
    let q = (p.get() * p.get()) as u64;
    let mut columns = Vec::with_capacity(q as usize);
    let mut acc = AlgebraElement::one(generic.algebra());
    for _ in 0..q {
        columns.push(acc.coeffs().clone());
        acc = &acc * &g;
    }
    Ok(LinearMap::from_columns(p, generic.rank(), columns))
}

/// `δj -> φj` from `constant_cyclic_{p^2}` to the dual of the generic fiber,
/// where `φj` is the functional dual to `(1 + t y)^j` in the grouplike-power
/// basis. Fails if the powers are not a basis.
pub fn generic_dual_to_constant_cyclic(
    generic: &HopfPresentation<RationalFunction>,
) -> Result<Recognition<RationalFunction>, HopfError> {
    let p = generic.prime();
    let powers = grouplike_power_matrix(generic)?;
    let inverse = linalg::invert(&powers)?;
    Ok(Recognition {
        source: constant_cyclic(p, p.get() * p.get()),
        target: cartier_dual(generic.structure())?,
        map: inverse.transpose(),
    })
}

/// `z^k -> δk^*` from `μ_q` to the dual of `constant_cyclic_q`.
pub fn mu_dual_to_constant_cyclic<S: Scalar>(p: Prime, q: u32) -> Result<Recognition<S>, HopfError> {
    let m = mu::<S>(p, q)?;
    Ok(Recognition {
        source: m.structure().clone(),
        target: cartier_dual(&constant_cyclic::<S>(p, q))?,
        map: LinearMap::identity(p, q as usize),
    })
}

/// `x^a -> a! (x^a)^*` from `α_p` to its dual.
pub fn alpha_self_duality<S: Scalar>(p: Prime) -> Result<Recognition<S>, HopfError> {
    let a = alpha_named::<S>(p, "x")?;
    let n = p.get() as usize;
    let columns = (0..n)
        .map(|k| SparseVec::from_entries([(k, S::from_int(p, factorial_mod_p(k as u64, p.get()) as i64))]))
        .collect();
    Ok(Recognition {
        target: cartier_dual(a.structure())?,
        source: a.structure().clone(),
        map: LinearMap::from_columns(p, n, columns),
    })
}

/// The evaluation map `H -> H^**`, the identity on coordinates.
pub fn double_dual<S: Scalar>(h: &HopfStructure<S>) -> Result<Recognition<S>, HopfError> {
    Ok(Recognition {
        source: h.clone(),
        target: cartier_dual(&cartier_dual(h)?)?,
        map: LinearMap::identity(h.prime(), h.rank()),
    })
}
