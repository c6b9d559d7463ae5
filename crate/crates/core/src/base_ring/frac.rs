//! Reduced fractions of polynomials; the shared engine behind the local ring
//! and the function field.

use std::fmt;

use super::{FpElement, UnivariatePoly};
use crate::scalar::Prime;

/// `num / den` with `gcd(num, den) = 1`, `den` monic, and `0 = 0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Frac {
    pub num: UnivariatePoly,
    pub den: UnivariatePoly,
}

impl Frac {
    pub fn from_poly(num: UnivariatePoly) -> Self {
        let p = num.prime();
        Frac {
            num,
            den: UnivariatePoly::constant(p, 1),
        }
    }

    pub fn from_int(p: Prime, n: i64) -> Self {
        Self::from_poly(UnivariatePoly::constant(p, n))
    }

    pub fn prime(&self) -> Prime {
        self.num.prime()
    }

    /// Reduces `num / den`; panics on a zero denominator.
    pub fn canonical(num: UnivariatePoly, den: UnivariatePoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from_poly(num);
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lead = den.leading_coefficient();
        if lead == 1 {
            return Frac { num, den };
        }
        let inv = FpElement::new(den.prime(), lead as i64)
            .inverse()
            .expect("leading coefficient is nonzero")
            .value();
        Frac {
            num: num.scale(inv),
            den: den.scale(inv),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn has_unit_den(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.has_unit_den() && other.has_unit_den() {
            return Self::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::canonical(self.num.add(&other.num), self.den.clone());
        }
        Self::canonical(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::from_int(self.prime(), 0);
        }
        if self.has_unit_den() && other.has_unit_den() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// `self / other`; panics if `other` is zero.
    pub fn div(&self, other: &Self) -> Self {
        Self::canonical(self.num.mul(&other.den), self.den.mul(&other.num))
    }
}

fn wrap(poly: &UnivariatePoly) -> String {
    if poly.term_count() > 1 {
        format!("({poly})")
    } else {
        poly.to_string()
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_unit_den() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}
