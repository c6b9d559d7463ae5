//! Dimension counts for de Rham cohomology of classifying stacks of the
//! fibers of `G^n`, projective-bundle sums, and the jump solver.
//!
//! `H^*(B(Z/p^2))` and `H^*(Bα_p)` are one-dimensional in every degree, so
//! both fibers of `G^n` have Poincaré series that are convolution powers of
//! the all-ones series: `n` factors generically and `2n` on the special
//! fiber.

#[cfg(test)]
mod tests;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::base_ring::Fiber;
use crate::combinat::binomial;

/// Largest arity or degree accepted by the closed forms.
pub const MAX_ARGUMENT: u64 = 1_000_000;

/// Largest arity the jump solver scans to.
pub const MAX_SCAN: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("degree {degree} is beyond the truncation degree {max_degree}")]
    Truncation { degree: usize, max_degree: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no arity n <= {0} gives the requested jump")]
    ScanExhausted(u64),
    #[error("the jump holds at n = {n} but fails at n = {next}")]
    NotMonotone { n: u64, next: u64 },
}

pub(crate) fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn as_signed_decimal<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn as_decimals<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

/// Dimensions `dim H^i` for `0 <= i <= max_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareSeries {
    #[serde(serialize_with = "as_decimals")]
    coefficients: Vec<BigUint>,
}

impl PoincareSeries {
    /// `coefficients[i]` is the entry in degree `i`; the last index is the
    /// truncation degree.
    pub fn new(coefficients: Vec<BigUint>) -> Result<Self, CohomologyError> {
        if coefficients.is_empty() {
            return Err(CohomologyError::InvalidInput("a series needs at least the degree 0 entry".into()));
        }
        Ok(PoincareSeries { coefficients })
    }

    pub fn from_u64(coefficients: &[u64]) -> Result<Self, CohomologyError> {
        Self::new(coefficients.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn ones(max_degree: usize) -> Self {
        PoincareSeries {
            coefficients: vec![BigUint::one(); max_degree + 1],
        }
    }

    /// `(1, 0, 0, ...)`, the unit for [`kunneth`].
    pub fn unit(max_degree: usize) -> Self {
        let mut coefficients = vec![BigUint::zero(); max_degree + 1];
        coefficients[0] = BigUint::one();
        PoincareSeries { coefficients }
    }

    pub fn max_degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn get(&self, degree: usize) -> Result<&BigUint, CohomologyError> {
        self.coefficients.get(degree).ok_or(CohomologyError::Truncation {
            degree,
            max_degree: self.max_degree(),
        })
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// The `m`-fold [`kunneth`] product of `self` with itself.
    pub fn power(&self, m: u32) -> Self {
        (0..m).fold(Self::unit(self.max_degree()), |acc, _| kunneth(&acc, self))
    }
}

/// `dim H^i(B(Z/p^2))` over a field of characteristic `p`.
pub fn series_constant_cyclic(max_degree: usize) -> PoincareSeries {
    PoincareSeries::ones(max_degree)
}

/// `dim H^i(Bα_p)`.
pub fn series_b_alpha_p(max_degree: usize) -> PoincareSeries {
    PoincareSeries::ones(max_degree)
}

/// The Künneth product: Cauchy convolution, truncated at the smaller degree.
pub fn kunneth(s1: &PoincareSeries, s2: &PoincareSeries) -> PoincareSeries {
    let d = s1.max_degree().min(s2.max_degree());
    let coefficients = (0..=d)
        .map(|i| (0..=i).map(|j| &s1.coefficients[j] * &s2.coefficients[i - j]).sum())
        .collect();
    PoincareSeries { coefficients }
}

fn check_argument(name: &str, v: u64) -> Result<(), CohomologyError> {
    if v > MAX_ARGUMENT {
        return Err(CohomologyError::InvalidInput(format!("{name} = {v} exceeds {MAX_ARGUMENT}")));
    }
    Ok(())
}

/// `dim H^i(B(G^n))` on a fiber: `C(n+i-1, i)` generically and
/// `C(2n+i-1, i)` on the special fiber.
pub fn dim_bgn(n: u64, i: u64, fiber: Fiber) -> Result<BigUint, CohomologyError> {
    if n == 0 {
        return Err(CohomologyError::InvalidInput("n must be at least 1".into()));
    }
    check_argument("n", n)?;
    check_argument("i", i)?;
    let m = match fiber {
        Fiber::Generic => n,
        Fiber::Special => 2 * n,
    };
    Ok(binomial(m + i - 1, i))
}

/// The series of [`dim_bgn`] through `max_degree`.
pub fn fiber_series(n: u64, fiber: Fiber, max_degree: usize) -> Result<PoincareSeries, CohomologyError> {
    let coefficients = (0..=max_degree as u64)
        .map(|i| dim_bgn(n, i, fiber))
        .collect::<Result<_, _>>()?;
    PoincareSeries::new(coefficients)
}

/// `Σ_{j=0..min(N, ⌊i/2⌋)} s[i - 2j]`.
pub fn projective_bundle(s: &PoincareSeries, big_n: u64, i: usize) -> Result<BigUint, CohomologyError> {
    s.get(i)?;
    let top = big_n.min((i / 2) as u64) as usize;
    Ok((0..=top).map(|j| &s.coefficients[i - 2 * j]).sum())
}

/// The value of `N` past which [`projective_bundle`] no longer changes in
/// degree `i`.
pub fn stabilized_n(i: u64) -> u64 {
    i / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JumpQuery {
    pub e: u64,
    pub i: u64,
    #[serde(rename = "N")]
    pub big_n: Option<u64>,
}

impl JumpQuery {
    pub fn new(e: u64, i: u64, big_n: Option<u64>) -> Result<Self, CohomologyError> {
        if e == 0 || i == 0 {
            return Err(CohomologyError::InvalidInput(format!("e and i must be at least 1 (got e = {e}, i = {i})")));
        }
        check_argument("i", i)?;
        Ok(JumpQuery { e, i, big_n })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JumpSolution {
    pub e: u64,
    pub i: u64,
    pub n: u64,
    /// `C(2n+i-1, i)`.
    #[serde(serialize_with = "as_decimal")]
    pub special: BigUint,
    /// `C(n+i-1, i)`.
    #[serde(serialize_with = "as_decimal")]
    pub generic: BigUint,
    /// The inequality also holds at `n + 1`.
    pub holds_at_next: bool,
}

/// Least `n >= 1` with `C(2n+i-1, i) >= C(n+i-1, i) + e`, by upward scan.
pub fn minimal_n_for_jump(q: &JumpQuery) -> Result<JumpSolution, CohomologyError> {
    let holds = |n: u64| -> Result<(BigUint, BigUint, bool), CohomologyError> {
        let s = dim_bgn(n, q.i, Fiber::Special)?;
        let g = dim_bgn(n, q.i, Fiber::Generic)?;
        let ok = s >= &g + q.e;
        Ok((s, g, ok))
    };
    for n in 1..=MAX_SCAN {
        let (special, generic, ok) = holds(n)?;
        if ok {
            let holds_at_next = holds(n + 1)?.2;
            if !holds_at_next {
                return Err(CohomologyError::NotMonotone { n, next: n + 1 });
            }
            return Ok(JumpSolution {
                e: q.e,
                i: q.i,
                n,
                special,
                generic,
                holds_at_next,
            });
        }
    }
    Err(CohomologyError::ScanExhausted(MAX_SCAN))
}

/// One shifted summand `H^{i-2j}` of the projective-bundle sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftedTerm {
    pub degree: u64,
    #[serde(serialize_with = "as_decimal")]
    pub special: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub generic: BigUint,
    pub dominated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberJump {
    pub n: u64,
    pub i: u64,
    #[serde(rename = "N")]
    pub big_n: u64,
    #[serde(serialize_with = "as_decimal")]
    pub special_total: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub generic_total: BigUint,
    /// `special_total - generic_total`.
    #[serde(serialize_with = "as_signed_decimal")]
    pub jump: BigInt,
    /// `dim H^i` gap of `B(G^n)` alone, the `j = 0` term.
    #[serde(serialize_with = "as_signed_decimal")]
    pub degree_gap: BigInt,
    /// Termwise certificate: every shifted special term is at least the
    /// generic one, so `jump >= degree_gap`.
    pub terms: Vec<ShiftedTerm>,
    pub termwise_dominated: bool,
}

/// Special minus generic projective-bundle sum for `[P^N / G^n]` in degree `i`.
pub fn fiber_jump(n: u64, i: u64, big_n: u64) -> Result<FiberJump, CohomologyError> {
    check_argument("i", i)?;
    let special = fiber_series(n, Fiber::Special, i as usize)?;
    let generic = fiber_series(n, Fiber::Generic, i as usize)?;
    let special_total = projective_bundle(&special, big_n, i as usize)?;
    let generic_total = projective_bundle(&generic, big_n, i as usize)?;
    let top = big_n.min(i / 2);
    let terms: Vec<ShiftedTerm> = (0..=top)
        .map(|j| {
            let d = (i - 2 * j) as usize;
            let (s, g) = (special.coefficients[d].clone(), generic.coefficients[d].clone());
            ShiftedTerm {
                degree: d as u64,
                dominated: s >= g,
                special: s,
                generic: g,
            }
        })
        .collect();
    let degree_gap = BigInt::from(terms[0].special.clone()) - BigInt::from(terms[0].generic.clone());
    let jump = BigInt::from(special_total.clone()) - BigInt::from(generic_total.clone());
    let termwise_dominated = terms.iter().all(|t| t.dominated) && jump >= degree_gap;
    Ok(FiberJump {
        n,
        i,
        big_n,
        special_total,
        generic_total,
        jump,
        degree_gap,
        terms,
        termwise_dominated,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KunnethMismatch {
    pub fiber: Fiber,
    pub degree: usize,
    #[serde(serialize_with = "as_decimal")]
    pub binomial: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub convolution: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KunnethReport {
    pub n: u64,
    pub max_degree: usize,
    pub mismatches: Vec<KunnethMismatch>,
}

impl KunnethReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares [`dim_bgn`] with Künneth powers of the fiber series of `G`:
/// `n` factors of `B(Z/p^2)` generically, `n` of `Bα_p ⊗ Bα_p` specially.
pub fn verify_binomial_vs_kunneth(n: u64, max_degree: usize) -> Result<KunnethReport, CohomologyError> {
    if n == 0 {
        return Err(CohomologyError::InvalidInput("n must be at least 1".into()));
    }
    check_argument("n", n)?;
    let n32 = u32::try_from(n).map_err(|_| CohomologyError::InvalidInput(format!("n = {n} too large")))?;
    let generic = series_constant_cyclic(max_degree).power(n32);
    let alpha = series_b_alpha_p(max_degree);
    let special = kunneth(&alpha, &alpha).power(n32);
    compare(n, max_degree, &generic, &special)
}

/// [`verify_binomial_vs_kunneth`] for every `n` in `1..=n_max`, multiplying
/// in one more factor per step.
pub fn verify_binomial_vs_kunneth_upto(n_max: u64, max_degree: usize) -> Result<Vec<KunnethReport>, CohomologyError> {
    check_argument("n", n_max)?;
    let cyclic = series_constant_cyclic(max_degree);
    let alpha = series_b_alpha_p(max_degree);
    let alpha_square = kunneth(&alpha, &alpha);
    let mut generic = PoincareSeries::unit(max_degree);
    let mut special = PoincareSeries::unit(max_degree);
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        generic = kunneth(&generic, &cyclic);
        special = kunneth(&special, &alpha_square);
        out.push(compare(n, max_degree, &generic, &special)?);
    }
    Ok(out)
}

fn compare(
    n: u64,
    max_degree: usize,
    generic: &PoincareSeries,
    special: &PoincareSeries,
) -> Result<KunnethReport, CohomologyError> {
    let mut mismatches = Vec::new();
    for (fiber, series) in [(Fiber::Generic, generic), (Fiber::Special, special)] {
        for degree in 0..=max_degree {
            let closed = dim_bgn(n, degree as u64, fiber)?;
            if closed != series.coefficients[degree] {
                mismatches.push(KunnethMismatch {
                    fiber,
                    degree,
                    binomial: closed,
                    convolution: series.coefficients[degree].clone(),
                });
            }
        }
    }
    Ok(KunnethReport {
        n,
        max_degree,
        mismatches,
    })
}
