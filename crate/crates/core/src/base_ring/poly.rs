use std::fmt;

use super::{BaseRingError, FpElement};
use crate::scalar::Prime;

/// Largest `t`-degree a polynomial may reach before arithmetic refuses.
pub const MAX_T_DEGREE: usize = 512;

/// A polynomial in `t` over `F_p`, coefficients by ascending degree.
///
/// Trailing zeros are always stripped; zero is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    p: Prime,
    coeffs: Vec<u32>,
}

impl UnivariatePoly {
    pub fn zero(p: Prime) -> Self {
        UnivariatePoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(p: Prime, c: i64) -> Self {
        Self::from_coeffs(p, &[c])
    }

    /// `t^k`.
    pub fn monomial(p: Prime, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        UnivariatePoly { p, coeffs }
    }

    pub fn from_coeffs(p: Prime, coeffs: &[i64]) -> Self {
        let m = p.get() as i64;
        let mut poly = UnivariatePoly {
            p,
            coeffs: coeffs.iter().map(|c| c.rem_euclid(m) as u32).collect(),
        };
        poly.trim();
        poly
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coefficients(&self) -> Vec<FpElement> {
        self.coeffs
            .iter()
            .map(|&c| FpElement::new(self.p, c as i64))
            .collect()
    }

    pub fn coefficient(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> u32 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn at_zero(&self) -> FpElement {
        FpElement::new(self.p, self.coefficient(0) as i64)
    }

    /// The `t`-adic order; `None` for zero.
    pub fn t_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Errors if the degree exceeds [`MAX_T_DEGREE`].
    pub fn check_degree(self) -> Result<Self, BaseRingError> {
        match self.degree() {
            Some(d) if d > MAX_T_DEGREE => Err(BaseRingError::DegreeOverflow {
                degree: d,
                max: MAX_T_DEGREE,
            }),
            _ => Ok(self),
        }
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(
            self.p, other.p,
            "prime mismatch: F_{}[t] and F_{}[t]",
            self.p, other.p
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same(other);
        let p = self.p.get();
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push((self.coefficient(k) + other.coefficient(k)) % p);
        }
        let mut out = UnivariatePoly { p: self.p, coeffs };
        out.trim();
        out
    }

    pub fn neg(&self) -> Self {
        let p = self.p.get();
        UnivariatePoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p.get();
        let mut out = UnivariatePoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&a| (a * c) % p).collect(),
        };
        out.trim();
        out
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, BaseRingError> {
        self.assert_same(other);
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.p));
        }
        let p = self.p.get();
        let mut coeffs = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + a * b) % p;
            }
        }
        let mut out = UnivariatePoly { p: self.p, coeffs };
        out.trim();
        out.check_degree()
    }

    /// Multiplication that panics past the degree guard.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    fn inv_mod(&self, a: u32) -> u32 {
        FpElement::new(self.p, a as i64)
            .inverse()
            .expect("nonzero element of F_p")
            .value()
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.assert_same(divisor);
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p.get();
        let mut rem = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        let inv_lead = self.inv_mod(divisor.lead());
        if rem.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = (rem[k] * inv_lead) % p;
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = (rem[idx] + p * p - c * b) % p;
            }
        }
        let mut q = UnivariatePoly { p: self.p, coeffs: quot };
        let mut r = UnivariatePoly { p: self.p, coeffs: rem };
        q.trim();
        r.trim();
        (q, r)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.inv_mod(self.lead()))
    }

    pub fn leading_coefficient(&self) -> u32 {
        self.lead()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}
