use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{AlgebraError, MonomialAlgebra};
use crate::scalar::{Scalar, SparseVec};

/// An element of a [`MonomialAlgebra`], in normal form.
#[derive(Clone, Debug)]
pub struct AlgebraElement<S: Scalar> {
    parent: Arc<MonomialAlgebra<S>>,
    coeffs: SparseVec<S>,
}

fn same_parent<S: Scalar>(a: &Arc<MonomialAlgebra<S>>, b: &Arc<MonomialAlgebra<S>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<S: Scalar> PartialEq for AlgebraElement<S> {
    fn eq(&self, other: &Self) -> bool {
        same_parent(&self.parent, &other.parent) && self.coeffs == other.coeffs
    }
}

impl<S: Scalar> Eq for AlgebraElement<S> {}

impl<S: Scalar> AlgebraElement<S> {
    /// Wraps a coefficient vector; indices must be below the parent's rank.
    pub fn from_vec(parent: Arc<MonomialAlgebra<S>>, coeffs: SparseVec<S>) -> Self {
        assert!(
            coeffs.max_index().map_or(true, |i| i < parent.rank()),
            "coefficient index out of range"
        );
        AlgebraElement { parent, coeffs }
    }

    pub fn zero(parent: &Arc<MonomialAlgebra<S>>) -> Self {
        Self::from_vec(parent.clone(), SparseVec::new())
    }

    pub fn one(parent: &Arc<MonomialAlgebra<S>>) -> Self {
        Self::from_scalar(parent, S::one(parent.prime()))
    }

    pub fn from_scalar(parent: &Arc<MonomialAlgebra<S>>, c: S) -> Self {
        Self::from_vec(parent.clone(), SparseVec::from_entries([(0, c)]))
    }

    /// `coeff * g^exps`, reduced to normal form.
    pub fn monomial(parent: &Arc<MonomialAlgebra<S>>, exps: &[u32], coeff: S) -> Self {
        let v = parent.reduce_monomial(coeff, exps.to_vec());
        Self::from_vec(parent.clone(), v)
    }

    /// The `i`-th generator.
    pub fn generator(parent: &Arc<MonomialAlgebra<S>>, i: usize) -> Self {
        let mut exps = vec![0; parent.generator_count()];
        exps[i] = 1;
        Self::monomial(parent, &exps, S::one(parent.prime()))
    }

    /// The first generator with the given name.
    pub fn named(parent: &Arc<MonomialAlgebra<S>>, name: &str) -> Option<Self> {
        parent.generator_index(name).map(|i| Self::generator(parent, i))
    }

    pub fn parent(&self) -> &Arc<MonomialAlgebra<S>> {
        &self.parent
    }

    pub fn coeffs(&self) -> &SparseVec<S> {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> SparseVec<S> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Coefficient of the basis monomial with the given exponents.
    pub fn coefficient(&self, exps: &[u32]) -> S {
        self.coeffs
            .get(self.parent.index_of(exps))
            .cloned()
            .unwrap_or_else(|| S::zero(self.parent.prime()))
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if same_parent(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(AlgebraError::ParentMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(Self::from_vec(self.parent.clone(), self.coeffs.add(&other.coeffs)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(Self::from_vec(self.parent.clone(), self.coeffs.sub(&other.coeffs)))
    }

    /// Normal form of the product.
    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(Self::from_vec(
            self.parent.clone(),
            self.parent.mul_vec(&self.coeffs, &other.coeffs),
        ))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_vec(self.parent.clone(), self.coeffs.scale(c))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.parent);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> S {
        self.coeffs
            .get(0)
            .cloned()
            .unwrap_or_else(|| S::zero(self.parent.prime()))
    }

    /// Whether `self^k = 0` for some `k <= rank`.
    pub fn is_nilpotent(&self) -> bool {
        let mut power = self.clone();
        for _ in 0..=self.parent.rank() {
            if power.is_zero() {
                return true;
            }
            power = &power * self;
        }
        power.is_zero()
    }

    /// Inverse of an element `c * (1 + n)` with `c` a unit scalar and `n`
    /// nilpotent, via the finite geometric series `c^{-1} * sum (-n)^k`.
    pub fn try_inverse(&self) -> Result<Self, AlgebraError> {
        let not_inv = || AlgebraError::NotInvertible(self.to_string());
        let c = self.constant_term();
        let c_inv = c.try_inverse().map_err(|_| not_inv())?;
        let one = Self::one(&self.parent);
        let n = &self.scale(&c_inv) - &one;
        let minus_n = -&n;
        let mut term = one.clone();
        let mut sum = one.clone();
        for _ in 0..=self.parent.rank() {
            term = &term * &minus_n;
            if term.is_zero() {
                return Ok(sum.scale(&c_inv));
            }
            sum = &sum + &term;
        }
        Err(not_inv())
    }

    /// Rebuilds the element over another algebra with the same basis,
    /// pushing coefficients through `f`.
    pub fn map_into<T: Scalar>(&self, parent: &Arc<MonomialAlgebra<T>>, f: impl Fn(&S) -> T) -> AlgebraElement<T> {
        assert_eq!(parent.rank(), self.parent.rank(), "rank mismatch");
        AlgebraElement::from_vec(parent.clone(), self.coeffs.map(f))
    }

    /// `a ⊗ b` inside `target`, whose basis must be the source-major product.
    pub fn tensor(a: &Self, b: &Self, target: &Arc<MonomialAlgebra<S>>) -> Result<Self, AlgebraError> {
        if target.rank() != a.parent.rank() * b.parent.rank() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "tensor target has rank {}, expected {}",
                target.rank(),
                a.parent.rank() * b.parent.rank()
            )));
        }
        Ok(Self::from_vec(
            target.clone(),
            a.coeffs.outer(&b.coeffs, b.parent.rank()),
        ))
    }
}

impl<S: Scalar> fmt::Display for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.parent.format_vec(&self.coeffs))
    }
}

impl<'a, S: Scalar> Add for &'a AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn add(self, rhs: Self) -> AlgebraElement<S> {
        self.try_add(rhs).expect("parent mismatch in addition")
    }
}

impl<'a, S: Scalar> Sub for &'a AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn sub(self, rhs: Self) -> AlgebraElement<S> {
        self.try_sub(rhs).expect("parent mismatch in subtraction")
    }
}

impl<'a, S: Scalar> Mul for &'a AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn mul(self, rhs: Self) -> AlgebraElement<S> {
        self.multiply(rhs).expect("parent mismatch in multiplication")
    }
}

impl<'a, S: Scalar> Neg for &'a AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn neg(self) -> AlgebraElement<S> {
        let minus_one = -S::one(self.parent.prime());
        self.scale(&minus_one)
    }
}
