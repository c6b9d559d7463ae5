//! Exact arithmetic in `F_p`, `F_p(t)` and `F_p[t]_(t)`, plus the two
//! specialization maps out of the local ring.

/// Operator impls for the fraction-backed scalar newtypes.
macro_rules! frac_ops {
    ($t:ident) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $t(self.0.add(&rhs.0))
            }
        }
        impl<'a> std::ops::Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $t(self.0.add(&rhs.0))
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $t(self.0.sub(&rhs.0))
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $t(self.0.sub(&rhs.0))
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $t(self.0.mul(&rhs.0))
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                $t(self.0.mul(&rhs.0))
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(self.0.neg())
            }
        }
    };
}
pub(crate) use frac_ops;

mod fp;
mod frac;
mod local;
mod poly;
mod rational;

pub use fp::FpElement;
pub use local::LocalRingElement;
pub use poly::{UnivariatePoly, MAX_T_DEGREE};
pub use rational::RationalFunction;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseRingError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("prime {p} exceeds the supported bound p <= {max}")]
    PrimeTooLarge { p: u32, max: u32 },
    #[error("{0} is not a unit")]
    NonUnit(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different primes ({left} and {right})")]
    PrimeMismatch { left: u32, right: u32 },
    #[error("t-degree {degree} exceeds the guard {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("{0} is not in F_p[t]_(t): its denominator vanishes at t = 0")]
    NotInLocalRing(String),
}

/// The two points of `Spec F_p[t]_(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fiber {
    /// The closed point: `t -> 0`, landing in `F_p`.
    Special,
    /// The generic point: the inclusion into `F_p(t)`.
    Generic,
}

impl Fiber {
    pub fn name(self) -> &'static str {
        match self {
            Fiber::Special => "special",
            Fiber::Generic => "generic",
        }
    }
}

impl std::str::FromStr for Fiber {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "special" | "s" => Ok(Fiber::Special),
            "generic" | "eta" => Ok(Fiber::Generic),
            other => Err(format!("unknown fiber '{other}' (expected special or generic)")),
        }
    }
}

/// The value of [`specialize_scalar`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    Special(FpElement),
    Generic(RationalFunction),
}

pub fn specialize_scalar(a: &LocalRingElement, fiber: Fiber) -> Specialized {
    match fiber {
        Fiber::Special => Specialized::Special(a.at_zero()),
        Fiber::Generic => Specialized::Generic(a.to_rational()),
    }
}
