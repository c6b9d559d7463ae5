use std::fmt;

use super::frac::Frac;
use super::{BaseRingError, FpElement, RationalFunction, UnivariatePoly};
use crate::scalar::{BaseKind, Prime, Scalar};

/// An element of `R = F_p[t]` localized at the prime `(t)`.
///
/// Stored as a reduced fraction whose (monic) denominator does not vanish
/// at `t = 0`. It is a unit iff its numerator does not vanish at `t = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalRingElement(pub(super) Frac);

impl LocalRingElement {
    pub fn new(num: UnivariatePoly, den: UnivariatePoly) -> Result<Self, BaseRingError> {
        if den.is_zero() {
            return Err(BaseRingError::DivisionByZero);
        }
        let frac = Frac::canonical(num.check_degree()?, den.check_degree()?);
        if frac.den.at_zero().value() == 0 {
            return Err(BaseRingError::NotInLocalRing(frac.to_string()));
        }
        Ok(LocalRingElement(frac))
    }

    pub fn from_poly(num: UnivariatePoly) -> Self {
        LocalRingElement(Frac::from_poly(num))
    }

    /// The uniformizer `t`.
    pub fn t(p: Prime) -> Self {
        Self::from_poly(UnivariatePoly::monomial(p, 1))
    }

    /// `t^k`.
    pub fn t_pow(p: Prime, k: usize) -> Self {
        Self::from_poly(UnivariatePoly::monomial(p, k))
    }

    pub fn numerator(&self) -> &UnivariatePoly {
        &self.0.num
    }

    pub fn denominator(&self) -> &UnivariatePoly {
        &self.0.den
    }

    /// The image under `t -> 0`.
    pub fn at_zero(&self) -> FpElement {
        let den = self.0.den.at_zero();
        self.0.num.at_zero() * den.inverse().expect("denominator is a unit")
    }

    /// The image in the fraction field.
    pub fn to_rational(&self) -> RationalFunction {
        RationalFunction(self.0.clone())
    }
}

impl fmt::Display for LocalRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Scalar for LocalRingElement {
    const KIND: BaseKind = BaseKind::LocalRing;

    fn from_int(p: Prime, n: i64) -> Self {
        LocalRingElement(Frac::from_int(p, n))
    }

    fn prime(&self) -> Prime {
        self.0.prime()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn valuation(&self) -> Option<u32> {
        self.0.num.t_order().map(|k| k as u32)
    }

    fn try_divide(&self, divisor: &Self) -> Result<Self, BaseRingError> {
        self.check_same_prime(divisor)?;
        let Some(dv) = divisor.valuation() else {
            return Err(BaseRingError::DivisionByZero);
        };
        match self.valuation() {
            None => Ok(self.clone()),
            Some(v) if v >= dv => Ok(LocalRingElement(self.0.div(&divisor.0))),
            Some(_) => Err(BaseRingError::NonUnit(divisor.to_string())),
        }
    }
}

super::frac_ops!(LocalRingElement);
