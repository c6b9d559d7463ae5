//! Dense arithmetic for the stabilizer search in the free-locus check.
//!
//! `translate(f, b) == f` is decided coefficient by coefficient, highest
//! exponent first, stopping at the first mismatch. Products `b^m` are
//! precomputed once per point.

use super::{ActionPoint, RegularRepElement};
use crate::algebra::AlgebraRef;
use crate::base_ring::FpElement;
use crate::combinat::binomial_mod_p;
use crate::scalar::{Prime, SparseVec};

type Dense = Vec<u32>;

struct DenseAlgebra {
    p: u32,
    rank: usize,
    /// Structure constants of `e_i * e_j`, indexed by `i * rank + j`.
    table: Vec<Vec<(usize, u32)>>,
}

impl DenseAlgebra {
    fn new(a: &AlgebraRef<FpElement>) -> Self {
        let rank = a.rank();
        let table = (0..rank * rank)
            .map(|ij| {
                a.mul_basis(ij / rank, ij % rank)
                    .iter()
                    .map(|(k, c)| (k, c.value()))
                    .collect()
            })
            .collect();
        DenseAlgebra {
            p: a.prime().get(),
            rank,
            table,
        }
    }

    fn dense(&self, v: &SparseVec<FpElement>) -> Dense {
        let mut out = vec![0; self.rank];
        for (i, c) in v.iter() {
            out[i] = c.value();
        }
        out
    }

    /// `acc += scale * x * y`.
    fn mul_acc(&self, acc: &mut [u32], x: &[u32], y: &[u32], scale: u32) {
        let p = self.p as u64;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let xs = xi as u64 * scale as u64 % p;
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = xs * yj as u64 % p;
                for &(k, t) in &self.table[i * self.rank + j] {
                    acc[k] = ((acc[k] as u64 + c * t as u64) % p) as u32;
                }
            }
        }
    }

    fn mul(&self, x: &[u32], y: &[u32]) -> Dense {
        let mut out = vec![0; self.rank];
        self.mul_acc(&mut out, x, y, 1);
        out
    }
}

pub(crate) struct FixedPointSearch<'a> {
    algebra: DenseAlgebra,
    points: &'a [ActionPoint],
    /// `b^m` for every point and exponent vector `m`.
    monomials: Vec<Vec<Dense>>,
    /// For each target index `k`, the pairs `(a, C(a, k), a - k)` with
    /// nonzero binomial, `a >= k` componentwise.
    expansion: Vec<Vec<(usize, u32, usize)>>,
}

impl<'a> FixedPointSearch<'a> {
    pub(crate) fn new(p: Prime, n: usize, algebra: &AlgebraRef<FpElement>, points: &'a [ActionPoint]) -> Self {
        let dense = DenseAlgebra::new(algebra);
        let template = RegularRepElement::zero(p, n, algebra);
        let count = super::monomial_count(p, n);
        let exps: Vec<Vec<u32>> = (0..count).map(|i| template.exponents(i)).collect();
        let one = dense.dense(&SparseVec::unit(0, p));
        let monomials = points
            .iter()
            .map(|b| {
                let coords: Vec<Dense> = b.coordinates().iter().map(|c| dense.dense(c.coeffs())).collect();
                exps.iter()
                    .map(|m| {
                        let mut acc = one.clone();
                        for (i, &e) in m.iter().enumerate() {
                            for _ in 0..e {
                                acc = dense.mul(&acc, &coords[i]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let expansion = (0..count)
            .map(|k| {
                (0..count)
                    .filter_map(|a| {
                        let (ea, ek) = (&exps[a], &exps[k]);
                        if ea.iter().zip(ek).any(|(x, y)| x < y) {
                            return None;
                        }
                        let binom = ea.iter().zip(ek).fold(1u64, |acc, (&x, &y)| {
                            acc * binomial_mod_p(x as u64, y as u64, p.get()) as u64 % p.get() as u64
                        });
                        let diff: Vec<u32> = ea.iter().zip(ek).map(|(x, y)| x - y).collect();
                        (binom != 0).then(|| (a, binom as u32, template.index_of(&diff)))
                    })
                    .collect()
            })
            .collect();
        FixedPointSearch {
            algebra: dense,
            points,
            monomials,
            expansion,
        }
    }

    fn densify(&self, f: &RegularRepElement) -> Vec<Dense> {
        f.coefficients().iter().map(|c| self.algebra.dense(c.coeffs())).collect()
    }

    fn fixes(&self, f: &[Dense], point: usize) -> bool {
        let powers = &self.monomials[point];
        for k in (0..f.len()).rev() {
            let mut acc = vec![0; self.algebra.rank];
            for &(a, binom, diff) in &self.expansion[k] {
                self.algebra.mul_acc(&mut acc, &f[a], &powers[diff], binom);
            }
            if acc != f[k] {
                return false;
            }
        }
        true
    }

    /// The points fixing `f`, in enumeration order.
    pub(crate) fn stabilizer(&self, f: &RegularRepElement) -> Vec<&'a ActionPoint> {
        let dense = self.densify(f);
        (0..self.points.len())
            .filter(|&i| self.fixes(&dense, i))
            .map(|i| &self.points[i])
            .collect()
    }

    /// Whether some nonzero point fixes `f`.
    pub(crate) fn has_nontrivial_fixer(&self, f: &RegularRepElement) -> bool {
        let dense = self.densify(f);
        (0..self.points.len()).any(|i| !self.points[i].is_zero() && self.fixes(&dense, i))
    }
}
