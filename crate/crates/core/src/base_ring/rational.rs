use std::fmt;

use super::frac::Frac;
use super::{BaseRingError, UnivariatePoly};
use crate::scalar::{BaseKind, Prime, Scalar};

/// An element of the function field `F_p(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction(pub(super) Frac);

impl RationalFunction {
    pub fn new(num: UnivariatePoly, den: UnivariatePoly) -> Result<Self, BaseRingError> {
        if den.is_zero() {
            return Err(BaseRingError::DivisionByZero);
        }
        Ok(RationalFunction(Frac::canonical(
            num.check_degree()?,
            den.check_degree()?,
        )))
    }

    pub fn from_poly(num: UnivariatePoly) -> Self {
        RationalFunction(Frac::from_poly(num))
    }

    pub fn t(p: Prime) -> Self {
        Self::from_poly(UnivariatePoly::monomial(p, 1))
    }

    pub fn t_pow(p: Prime, k: usize) -> Self {
        Self::from_poly(UnivariatePoly::monomial(p, k))
    }

    pub fn numerator(&self) -> &UnivariatePoly {
        &self.0.num
    }

    pub fn denominator(&self) -> &UnivariatePoly {
        &self.0.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Scalar for RationalFunction {
    const KIND: BaseKind = BaseKind::FunctionField;

    fn from_int(p: Prime, n: i64) -> Self {
        RationalFunction(Frac::from_int(p, n))
    }

    fn prime(&self) -> Prime {
        self.0.prime()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn valuation(&self) -> Option<u32> {
        (!self.0.is_zero()).then_some(0)
    }

    fn try_divide(&self, divisor: &Self) -> Result<Self, BaseRingError> {
        self.check_same_prime(divisor)?;
        if divisor.is_zero() {
            return Err(BaseRingError::DivisionByZero);
        }
        Ok(RationalFunction(self.0.div(&divisor.0)))
    }
}

super::frac_ops!(RationalFunction);
