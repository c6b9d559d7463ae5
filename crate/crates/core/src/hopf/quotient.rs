use std::sync::Arc;

use super::{HopfError, HopfPresentation};
use crate::algebra::{algebra_hom, AlgebraElement, Generator, LinearMap, MonomialAlgebra};
use crate::linalg::{self, invariant_factor_valuations, Echelon};
use crate::scalar::{Scalar, SparseVec};

/// `H/I` together with the projection `H -> H/I`.
#[derive(Clone, Debug)]
pub struct HopfQuotient<S: Scalar> {
    pub presentation: HopfPresentation<S>,
    pub projection: LinearMap<S>,
    /// Generators lying in the ideal.
    pub removed: Vec<String>,
    pub ideal_rank: usize,
}

/// The quotient by the ideal generated by `generators`.
///
/// The ideal must be a Hopf ideal (checked on generators), the quotient must
/// be free, and some subset of the generators must lie in the ideal with the
/// monomials in the others spanning a complement.
pub fn hopf_quotient<S: Scalar>(
    h: &HopfPresentation<S>,
    generators: &[AlgebraElement<S>],
) -> Result<HopfQuotient<S>, HopfError> {
    let a = h.algebra();
    let p = a.prime();
    let r = a.rank();
    if generators.iter().any(|g| **g.parent() != **a) {
        return Err(crate::algebra::AlgebraError::ParentMismatch.into());
    }
    let gens: Vec<&AlgebraElement<S>> = generators.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(HopfQuotient {
            presentation: h.clone(),
            projection: LinearMap::identity(p, r),
            removed: Vec::new(),
            ideal_rank: 0,
        });
    }

    let spanning: Vec<SparseVec<S>> = gens
        .iter()
        .flat_map(|g| (0..r).map(move |b| a.mul_vec(g.coeffs(), &SparseVec::unit(b, p))))
        .collect();
    let ideal = Echelon::new(r, spanning.iter().cloned());
    let mut sides = Vec::new();
    for v in ideal.basis() {
        for j in 0..r {
            let e = SparseVec::unit(j, p);
            sides.push(v.outer(&e, r));
            sides.push(e.outer(v, r));
        }
    }
    let ideal_square = Echelon::new(r * r, sides);
    for g in &gens {
        let eps = h.counit_of(g);
        if !eps.is_zero() {
            return Err(HopfError::NotAHopfIdeal {
                axiom: "counit",
                detail: format!("ε({g}) = {eps}"),
            });
        }
        let s = h.apply_antipode(g);
        if !ideal.contains(s.coeffs()) {
            return Err(HopfError::NotAHopfIdeal {
                axiom: "antipode",
                detail: format!("S({g}) = {s} is not in the ideal"),
            });
        }
        let d = h.comultiply(g);
        if !ideal_square.contains(d.coeffs()) {
            return Err(HopfError::NotAHopfIdeal {
                axiom: "comultiplication",
                detail: format!("Δ({g}) = {d} is not in I⊗A + A⊗I"),
            });
        }
    }

    let torsion: Vec<u32> = invariant_factor_valuations(spanning)
        .into_iter()
        .filter(|&v| v > 0)
        .collect();
    if !torsion.is_empty() {
        return Err(HopfError::NotFreeQuotient(format!(
            "the ideal has invariant factors of t-valuation {torsion:?}, so the quotient has torsion"
        )));
    }

    let m = a.generator_count();
    let names = a.generator_names();
    let removed: Vec<usize> = (0..m)
        .filter(|&i| ideal.contains(AlgebraElement::generator(a, i).coeffs()))
        .collect();
    let surviving: Vec<usize> = (0..m).filter(|i| !removed.contains(i)).collect();
    let complement: Vec<usize> = (0..r)
        .filter(|&idx| {
            let e = a.exponents(idx);
            removed.iter().all(|&i| e[i] == 0)
        })
        .collect();
    let k = ideal.rank();
    if k + complement.len() != r {
        return Err(HopfError::QuotientNotMonomial(format!(
            "ideal of rank {k} and {} surviving monomials do not add up to rank {r}",
            complement.len()
        )));
    }
    let mut columns: Vec<SparseVec<S>> = ideal.basis().cloned().collect();
    columns.extend(complement.iter().map(|&c| SparseVec::unit(c, p)));
    let inverse = linalg::invert(&LinearMap::from_columns(p, r, columns))
        .map_err(|e| HopfError::QuotientNotMonomial(format!("surviving monomials are not a complement: {e}")))?;
    let rq = complement.len();
    let projection = LinearMap::from_columns(
        p,
        rq,
        inverse
            .columns()
            .iter()
            .map(|col| SparseVec::from_entries(col.iter().filter(|&(i, _)| i >= k).map(|(i, c)| (i - k, c.clone()))))
            .collect(),
    );
    let project = |v: &SparseVec<S>| projection.apply(v).expect("dimensions agree");

    let restrict = |idx: usize| -> Vec<u32> {
        let e = a.exponents(complement[idx]);
        surviving.iter().map(|&i| e[i]).collect()
    };
    let quotient_gens = surviving
        .iter()
        .map(|&i| {
            let rule = project(a.rule(i)).iter().map(|(j, c)| (restrict(j), c.clone())).collect();
            Generator::new(names[i].clone(), a.bounds()[i], rule)
        })
        .collect();
    let q = Arc::new(MonomialAlgebra::new(p, quotient_gens)?);
    if q.rank() != rq {
        return Err(HopfError::QuotientNotMonomial(format!(
            "surviving generators span rank {}, expected {rq}",
            q.rank()
        )));
    }
    let images: Vec<AlgebraElement<S>> = (0..m)
        .map(|i| AlgebraElement::from_vec(q.clone(), project(AlgebraElement::generator(a, i).coeffs())))
        .collect();
    let hom = algebra_hom(a, &q, &images)
        .map_err(|e| HopfError::QuotientNotMonomial(format!("projection is not an algebra map: {e}")))?;
    if let Some(col) = hom.matrix.first_mismatch(&projection) {
        return Err(HopfError::QuotientNotMonomial(format!(
            "projection is not multiplicative at {}",
            a.monomial_string(col)
        )));
    }

    let qq = Arc::new(MonomialAlgebra::tensor(&q, &q)?);
    let pp = LinearMap::tensor(&projection, &projection);
    let lift = |i: usize| AlgebraElement::generator(a, i);
    let comult = surviving
        .iter()
        .map(|&i| {
            let d = pp.apply(h.comultiply(&lift(i)).coeffs()).expect("dimensions agree");
            AlgebraElement::from_vec(qq.clone(), d)
        })
        .collect();
    let counit = surviving.iter().map(|&i| h.counit_of(&lift(i))).collect();
    let antipode = surviving
        .iter()
        .map(|&i| AlgebraElement::from_vec(q.clone(), project(h.apply_antipode(&lift(i)).coeffs())))
        .collect();
    Ok(HopfQuotient {
        presentation: HopfPresentation::new(q, comult, counit, antipode)?,
        projection,
        removed: removed.iter().map(|&i| names[i].clone()).collect(),
        ideal_rank: k,
    })
}
