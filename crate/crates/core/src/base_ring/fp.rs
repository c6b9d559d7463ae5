use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::BaseRingError;
use crate::scalar::{BaseKind, Prime, Scalar};

/// An element of the prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpElement {
    value: u32,
    p: Prime,
}

impl FpElement {
    pub fn new(p: Prime, n: i64) -> Self {
        let m = p.get() as i64;
        FpElement {
            value: n.rem_euclid(m) as u32,
            p,
        }
    }

    /// The representative in `[0, p)`.
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    fn assert_same(self, other: Self) {
        assert_eq!(
            self.p, other.p,
            "prime mismatch: F_{} and F_{}",
            self.p, other.p
        );
    }

    pub fn inverse(self) -> Result<Self, BaseRingError> {
        if self.value == 0 {
            return Err(BaseRingError::NonUnit("0".into()));
        }
        Ok(<Self as Scalar>::pow(&self, (self.p.get() - 2) as u64))
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpElement {
    type Output = FpElement;
    fn add(self, rhs: FpElement) -> FpElement {
        self.assert_same(rhs);
        FpElement {
            value: (self.value + rhs.value) % self.p.get(),
            p: self.p,
        }
    }
}

impl Sub for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: FpElement) -> FpElement {
        self.assert_same(rhs);
        let p = self.p.get();
        FpElement {
            value: (self.value + p - rhs.value) % p,
            p: self.p,
        }
    }
}

impl Mul for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: FpElement) -> FpElement {
        self.assert_same(rhs);
        FpElement {
            value: (self.value * rhs.value) % self.p.get(),
            p: self.p,
        }
    }
}

impl Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        let p = self.p.get();
        FpElement {
            value: (p - self.value) % p,
            p: self.p,
        }
    }
}

impl<'a> Add<&'a FpElement> for FpElement {
    type Output = FpElement;
    fn add(self, rhs: &FpElement) -> FpElement {
        self + *rhs
    }
}

impl<'a> Sub<&'a FpElement> for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: &FpElement) -> FpElement {
        self - *rhs
    }
}

impl<'a> Mul<&'a FpElement> for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: &FpElement) -> FpElement {
        self * *rhs
    }
}

impl Scalar for FpElement {
    const KIND: BaseKind = BaseKind::ResidueField;

    fn from_int(p: Prime, n: i64) -> Self {
        FpElement::new(p, n)
    }

    fn prime(&self) -> Prime {
        self.p
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn valuation(&self) -> Option<u32> {
        (self.value != 0).then_some(0)
    }

    fn try_divide(&self, divisor: &Self) -> Result<Self, BaseRingError> {
        self.check_same_prime(divisor)?;
        if divisor.value == 0 {
            return Err(BaseRingError::DivisionByZero);
        }
        Ok(*self * divisor.inverse()?)
    }
}
