use std::sync::Arc;

use super::{AlgebraElement, AlgebraError, LinearMap, MonomialAlgebra};
use crate::scalar::Scalar;

/// An algebra homomorphism between presented algebras, with its matrix.
#[derive(Clone, Debug)]
pub struct AlgebraHom<S: Scalar> {
    pub source: Arc<MonomialAlgebra<S>>,
    pub target: Arc<MonomialAlgebra<S>>,
    pub matrix: LinearMap<S>,
}

impl<S: Scalar> AlgebraHom<S> {
    pub fn apply(&self, a: &AlgebraElement<S>) -> Result<AlgebraElement<S>, AlgebraError> {
        if **a.parent() != *self.source {
            return Err(AlgebraError::ParentMismatch);
        }
        Ok(AlgebraElement::from_vec(
            self.target.clone(),
            self.matrix.apply(a.coeffs())?,
        ))
    }
}

/// Extends generator images multiplicatively to every basis monomial.
///
/// No relation check is made; the result is linear but only multiplicative
/// when the images respect the source relations.
pub fn multiplicative_extension<S: Scalar>(
    source: &Arc<MonomialAlgebra<S>>,
    target: &Arc<MonomialAlgebra<S>>,
    images: &[AlgebraElement<S>],
) -> Result<LinearMap<S>, AlgebraError> {
    let m = source.generator_count();
    if images.len() != m {
        return Err(AlgebraError::ImageCount {
            expected: m,
            got: images.len(),
        });
    }
    if images.iter().any(|im| **im.parent() != **target) {
        return Err(AlgebraError::ParentMismatch);
    }
    // powers[i][k] = images[i]^k for k < bound_i
    let powers: Vec<Vec<AlgebraElement<S>>> = images
        .iter()
        .zip(source.bounds())
        .map(|(im, &b)| {
            let mut v = vec![AlgebraElement::one(target)];
            for k in 1..b as usize {
                let next = &v[k - 1] * im;
                v.push(next);
            }
            v
        })
        .collect();
    let columns = (0..source.rank())
        .map(|idx| {
            let exps = source.exponents(idx);
            let mut acc = AlgebraElement::one(target);
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    acc = &acc * &powers[i][e as usize];
                }
            }
            acc.into_coeffs()
        })
        .collect();
    Ok(LinearMap::from_columns(source.prime(), target.rank(), columns))
}

/// The unique algebra map `source -> target` with `g_i -> images[i]`.
///
/// Fails with [`AlgebraError::RelationViolation`] unless every rule
/// `g_i^{n_i} = rhs_i` is carried to an identity in the target.
pub fn algebra_hom<S: Scalar>(
    source: &Arc<MonomialAlgebra<S>>,
    target: &Arc<MonomialAlgebra<S>>,
    images: &[AlgebraElement<S>],
) -> Result<AlgebraHom<S>, AlgebraError> {
    let matrix = multiplicative_extension(source, target, images)?;
    for (i, im) in images.iter().enumerate() {
        let lhs = im.pow(source.bounds()[i] as u64);
        let rhs = AlgebraElement::from_vec(target.clone(), matrix.apply(source.rule(i))?);
        let residual = &lhs - &rhs;
        if !residual.is_zero() {
            return Err(AlgebraError::RelationViolation {
                index: i,
                relation: source.relation_string(i),
                residual: residual.to_string(),
            });
        }
    }
    Ok(AlgebraHom {
        source: source.clone(),
        target: target.clone(),
        matrix,
    })
}
