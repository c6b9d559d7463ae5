//! Exact elimination over the base rings.
//!
//! Each base ring is a field or a discrete valuation ring, so choosing the
//! pivot of least valuation keeps every elimination step inside the ring.

use thiserror::Error;

use crate::algebra::LinearMap;
use crate::scalar::{Scalar, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("operation requires a field, but the base is {0}")]
    NotAField(&'static str),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible: no unit pivot in column {column}")]
    NotInvertible { column: usize },
}

/// A triangular generating set of a submodule of `R^dim`.
///
/// The pivot for coordinate `c` vanishes on every coordinate below `c`, so
/// membership is decided by forward substitution.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    dim: usize,
    pivots: Vec<(usize, SparseVec<S>)>,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(dim: usize, vectors: impl IntoIterator<Item = SparseVec<S>>) -> Self {
        let mut remaining: Vec<SparseVec<S>> = vectors.into_iter().filter(|v| !v.is_zero()).collect();
        let mut pivots = Vec::new();
        for c in 0..dim {
            let best = remaining
                .iter()
                .enumerate()
                .filter_map(|(k, v)| v.get(c).map(|e| (k, e.valuation().unwrap())))
                .min_by_key(|&(_, val)| val);
            let Some((k, _)) = best else { continue };
            let pivot = remaining.swap_remove(k);
            let lead = pivot.get(c).unwrap().clone();
            for v in remaining.iter_mut() {
                if let Some(e) = v.get(c) {
                    let factor = e.try_divide(&lead).expect("pivot has least valuation");
                    v.add_scaled(&-factor, &pivot);
                }
            }
            remaining.retain(|v| !v.is_zero());
            pivots.push((c, pivot));
        }
        Echelon { dim, pivots }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A basis of the submodule.
    pub fn basis(&self) -> impl Iterator<Item = &SparseVec<S>> + '_ {
        self.pivots.iter().map(|(_, v)| v)
    }

    pub fn pivot_coordinates(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.iter().map(|&(c, _)| c)
    }

    pub fn contains(&self, v: &SparseVec<S>) -> bool {
        let mut v = v.clone();
        while let Some(c) = v.min_index() {
            let Ok(k) = self.pivots.binary_search_by_key(&c, |&(pc, _)| pc) else {
                return false;
            };
            let (_, pivot) = &self.pivots[k];
            let Ok(factor) = v.get(c).unwrap().try_divide(pivot.get(c).unwrap()) else {
                return false;
            };
            v.add_scaled(&-factor, pivot);
        }
        true
    }
}

/// Valuations of the invariant factors of the span of `vectors`.
///
/// The quotient `R^n / span` is free exactly when all of them are zero.
pub fn invariant_factor_valuations<S: Scalar>(vectors: impl IntoIterator<Item = SparseVec<S>>) -> Vec<u32> {
    let mut remaining: Vec<SparseVec<S>> = vectors.into_iter().filter(|v| !v.is_zero()).collect();
    let mut out = Vec::new();
    while !remaining.is_empty() {
        let (k, c, val) = remaining
            .iter()
            .enumerate()
            .flat_map(|(k, v)| v.iter().map(move |(c, e)| (k, c, e.valuation().unwrap())))
            .min_by_key(|&(_, _, val)| val)
            .unwrap();
        let pivot = remaining.swap_remove(k);
        let lead = pivot.get(c).unwrap().clone();
        for v in remaining.iter_mut() {
            if let Some(e) = v.get(c) {
                let factor = e.try_divide(&lead).expect("pivot has least valuation");
                v.add_scaled(&-factor, &pivot);
            }
        }
        remaining.retain(|v| !v.is_zero());
        out.push(val);
    }
    out
}

/// A basis of `ker(map)`, in reduced echelon form, over a field.
pub fn kernel<S: Scalar>(map: &LinearMap<S>) -> Result<Vec<SparseVec<S>>, LinalgError> {
    if !S::KIND.is_field() {
        return Err(LinalgError::NotAField(S::KIND.tag()));
    }
    let p = map.prime();
    let mut rows = map.to_dense();
    let ncols = map.cols();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        let inv = rows[r][c].try_inverse().expect("nonzero in a field");
        rows[r] = rows[r].iter().map(|e| e.clone() * &inv).collect();
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c].clone();
                for j in 0..ncols {
                    let d = rows[r][j].clone() * &f;
                    rows[k][j] = rows[k][j].clone() - d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free = (0..ncols).filter(|c| !pivot_cols.contains(c));
    Ok(free
        .map(|f| {
            let mut v = SparseVec::unit(f, p);
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v.add_at(pc, -rows[row][f].clone());
            }
            v
        })
        .collect())
}

/// Two-sided inverse; over the local ring every pivot must be a unit.
pub fn invert<S: Scalar>(map: &LinearMap<S>) -> Result<LinearMap<S>, LinalgError> {
    let n = map.rows();
    if map.cols() != n {
        return Err(LinalgError::NotSquare {
            rows: n,
            cols: map.cols(),
        });
    }
    let p = map.prime();
    let mut a = map.to_dense();
    let mut inv: Vec<Vec<S>> = (0..n)
        .map(|i| (0..n).map(|j| S::from_int(p, (i == j) as i64)).collect())
        .collect();
    for c in 0..n {
        let best = (c..n)
            .filter_map(|k| a[k][c].valuation().map(|v| (k, v)))
            .min_by_key(|&(_, v)| v);
        let k = match best {
            Some((k, 0)) => k,
            _ => return Err(LinalgError::NotInvertible { column: c }),
        };
        a.swap(c, k);
        inv.swap(c, k);
        let pinv = a[c][c].try_inverse().expect("unit pivot");
        a[c] = a[c].iter().map(|e| e.clone() * &pinv).collect();
        inv[c] = inv[c].iter().map(|e| e.clone() * &pinv).collect();
        for k in 0..n {
            if k != c && !a[k][c].is_zero() {
                let f = a[k][c].clone();
                for j in 0..n {
                    let d = a[c][j].clone() * &f;
                    a[k][j] = a[k][j].clone() - d;
                    let d = inv[c][j].clone() * &f;
                    inv[k][j] = inv[k][j].clone() - d;
                }
            }
        }
    }
    Ok(LinearMap::from_dense(p, &inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_ring::{LocalRingElement, RationalFunction, UnivariatePoly};
    use crate::scalar::Prime;

    fn p3() -> Prime {
        Prime::new(3).unwrap()
    }

    fn lp(c: &[i64]) -> LocalRingElement {
        LocalRingElement::from_poly(UnivariatePoly::from_coeffs(p3(), c))
    }

    #[test]
    fn invert_identity() {
        let id = LinearMap::<LocalRingElement>::identity(p3(), 4);
        assert_eq!(invert(&id).unwrap(), id);
    }

    #[test]
    fn unipotent_in_char_two() {
        let p = Prime::new(2).unwrap();
        let t = RationalFunction::t(p);
        let one = RationalFunction::one(p);
        let zero = RationalFunction::zero(p);
        let m = LinearMap::from_dense(p, &[vec![one.clone(), t.clone()], vec![zero, one]]);
        // [[1, t], [0, 1]]^-1 = [[1, -t], [0, 1]] and -t = t in characteristic 2
        assert_eq!(invert(&m).unwrap(), m);
    }

    #[test]
    fn determinant_unit_test() {
        let p = p3();
        let zero = LocalRingElement::zero(p);
        let one = LocalRingElement::one(p);
        let m = LinearMap::from_dense(p, &[vec![lp(&[1, 1]), zero.clone()], vec![zero.clone(), one.clone()]]);
        let inv = invert(&m).unwrap();
        assert_eq!(inv.entry(0, 0), one.clone().try_divide(&lp(&[1, 1])).unwrap());
        assert_eq!(inv.compose(&m).unwrap(), LinearMap::identity(p, 2));
        let singular = LinearMap::from_dense(p, &[vec![lp(&[0, 1]), zero.clone()], vec![zero, one]]);
        assert_eq!(invert(&singular), Err(LinalgError::NotInvertible { column: 0 }));
    }

    #[test]
    fn membership_over_the_local_ring() {
        let p = p3();
        // span{(t, 0), (0, 1)}
        let e = Echelon::new(2, [SparseVec::from_entries([(0, lp(&[0, 1]))]), SparseVec::unit(1, p)]);
        assert!(e.contains(&SparseVec::from_entries([(0, lp(&[0, 0, 2])), (1, lp(&[1]))])));
        assert!(!e.contains(&SparseVec::unit(0, p)));
        assert_eq!(invariant_factor_valuations(e.basis().cloned()), vec![0, 1]);
    }

    #[test]
    fn saturated_span_has_unit_invariant_factors() {
        // (t, 1) spans a direct summand even though its first entry is not a unit
        let v = SparseVec::from_entries([(0, lp(&[0, 1])), (1, lp(&[1]))]);
        assert_eq!(invariant_factor_valuations([v]), vec![0]);
    }

    #[test]
    fn kernel_requires_a_field() {
        let m = LinearMap::<LocalRingElement>::identity(p3(), 2);
        assert!(matches!(kernel(&m), Err(LinalgError::NotAField(_))));
    }
}
