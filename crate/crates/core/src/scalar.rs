//! The coefficient abstraction shared by every algebra in the crate.
//!
//! All algebraic code is generic over [`Scalar`], which is implemented by
//! the three base rings: [`FpElement`](crate::FpElement) (the residue field),
//! [`LocalRingElement`](crate::LocalRingElement) (`F_p[t]` localized at `(t)`)
//! and [`RationalFunction`](crate::RationalFunction) (`F_p(t)`).
//!
//! Elements carry their characteristic at runtime, so there is no
//! context-free zero; constructors take a [`Prime`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::base_ring::BaseRingError;

/// Largest prime accepted anywhere in the crate.
///
/// Algebra ranks grow like `p^(2n)`, so larger primes are refused up front.
pub const MAX_PRIME: u32 = 7;

/// A validated prime `2 <= p <= MAX_PRIME`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Self, BaseRingError> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(BaseRingError::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(BaseRingError::PrimeTooLarge { p, max: MAX_PRIME });
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which of the three base rings a scalar type lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    /// The residue field `F_p`.
    ResidueField,
    /// The discrete valuation ring `F_p[t]_(t)`.
    LocalRing,
    /// The fraction field `F_p(t)`.
    FunctionField,
}

impl BaseKind {
    pub fn is_field(self) -> bool {
        !matches!(self, BaseKind::LocalRing)
    }

    pub fn tag(self) -> &'static str {
        match self {
            BaseKind::ResidueField => "Fp",
            BaseKind::LocalRing => "Fp[t]_(t)",
            BaseKind::FunctionField => "Fp(t)",
        }
    }
}

/// An exact element of one of the base rings.
///
/// Arithmetic operators panic when the operands have different
/// characteristics; mixing primes is always a programming error.
///
/// Every base ring is a field or a discrete valuation ring, so "divisibility"
/// is decided by [`Scalar::valuation`]: `b` divides `a` iff
/// `valuation(a) >= valuation(b)`. Over a field every nonzero element has
/// valuation 0.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    const KIND: BaseKind;

    /// The image of an integer under `Z -> ring`.
    fn from_int(p: Prime, n: i64) -> Self;

    fn prime(&self) -> Prime;

    fn is_zero(&self) -> bool;

    /// `None` for zero; the `t`-adic order over the local ring; 0 otherwise.
    fn valuation(&self) -> Option<u32>;

    /// Exact quotient `self / divisor` inside the ring.
    fn try_divide(&self, divisor: &Self) -> Result<Self, BaseRingError>;

    fn zero(p: Prime) -> Self {
        Self::from_int(p, 0)
    }

    fn one(p: Prime) -> Self {
        Self::from_int(p, 1)
    }

    fn is_one(&self) -> bool {
        *self == Self::one(self.prime())
    }

    fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    fn try_inverse(&self) -> Result<Self, BaseRingError> {
        Self::one(self.prime()).try_divide(self)
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.prime());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * &base;
            }
            base = base.clone() * &base;
            exp >>= 1;
        }
        acc
    }

    /// Errors when `self` and `other` live over different primes.
    fn check_same_prime(&self, other: &Self) -> Result<(), BaseRingError> {
        if self.prime() == other.prime() {
            Ok(())
        } else {
            Err(BaseRingError::PrimeMismatch {
                left: self.prime().get(),
                right: other.prime().get(),
            })
        }
    }
}

/// A sparse coefficient vector indexed by basis position; zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec<S> {
    entries: BTreeMap<usize, S>,
}

impl<S> Default for SparseVec<S> {
    fn default() -> Self {
        SparseVec {
            entries: BTreeMap::new(),
        }
    }
}

impl<S: Scalar> SparseVec<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize, p: Prime) -> Self {
        let mut v = Self::new();
        v.entries.insert(index, S::one(p));
        v
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, S)>) -> Self {
        let mut v = Self::new();
        for (i, c) in entries {
            v.add_at(i, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> Option<&S> {
        self.entries.get(&index)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> + '_ {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    /// Adds `c` at `index`, dropping the entry if it cancels.
    pub fn add_at(&mut self, index: usize, c: S) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(index) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, scale: &S, other: &SparseVec<S>) {
        if scale.is_zero() {
            return;
        }
        for (i, c) in other.iter() {
            self.add_at(i, c.clone() * scale);
        }
    }

    pub fn add(&self, other: &SparseVec<S>) -> SparseVec<S> {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_at(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparseVec<S>) -> SparseVec<S> {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_at(i, -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &S) -> SparseVec<S> {
        let mut out = SparseVec::new();
        out.add_scaled(s, self);
        out
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SparseVec<T> {
        SparseVec::from_entries(self.iter().map(|(i, c)| (i, f(c))))
    }

    /// Renumbers entries; entries mapped to the same index are summed.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> SparseVec<S> {
        SparseVec::from_entries(self.iter().map(|(i, c)| (f(i), c.clone())))
    }

    /// The outer product indexed `i * right_dim + j`.
    pub fn outer(&self, other: &SparseVec<S>, right_dim: usize) -> SparseVec<S> {
        let mut out = SparseVec::new();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                out.entries.insert(i * right_dim + j, a.clone() * b);
            }
        }
        out
    }

    pub fn to_dense(&self, dim: usize, p: Prime) -> Vec<S> {
        let mut out = vec![S::zero(p); dim];
        for (i, c) in self.iter() {
            out[i] = c.clone();
        }
        out
    }

    pub fn from_dense(values: &[S]) -> SparseVec<S> {
        SparseVec::from_entries(values.iter().cloned().enumerate())
    }

    pub fn min_index(&self) -> Option<usize> {
        self.entries.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }
}
