//! The translation action of `α_p^n` on its own coordinate ring.
//!
//! Points are modeled over finite test algebras `B` over `F_p`: an element of
//! `O(α_p^n) ⊗ B` is a polynomial in `x_1, ..., x_n` (exponents below `p`)
//! with coefficients in `B`, and a point is a tuple `b` with `b_i^p = 0`.

mod dense;
mod free_locus;
mod symbolic;


pub use free_locus::{
    free_locus_hyperplane_check, is_action, is_action_with, stabilizer, ActionCheck, Counterexample,
    FreeLocusMode, FreeLocusReport,
};
pub use symbolic::{
    symbolic_coefficient_ring, universal_leading_coefficient_identity, ExtractedCoefficient, InductionCertificate,
    SymbolicIdentityReport,
};

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, AlgebraRef};
use crate::base_ring::FpElement;
use crate::combinat::binomial_mod_p;
use crate::scalar::{Prime, SparseVec};

/// Enumerations larger than this are refused.
pub const DEFAULT_SIZE_GUARD: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("operands use different p, n or coefficient algebra")]
    ContextMismatch,
    #[error("{what} has {count} elements, exceeding the guard {max}")]
    SizeGuard { what: String, count: String, max: u64 },
    #[error("not a point of α_p^n: {0}")]
    NotAPoint(String),
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

type B = AlgebraElement<FpElement>;

/// `f = Σ c_a x^a` in `O(α_p^n) ⊗ B`, one coefficient per exponent vector in
/// mixed-radix order (`x_1` most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularRepElement {
    p: Prime,
    n: usize,
    algebra: AlgebraRef<FpElement>,
    coeffs: Vec<B>,
}

impl RegularRepElement {
    pub fn new(p: Prime, n: usize, coeffs: Vec<B>) -> Result<Self, ActionError> {
        let count = monomial_count(p, n);
        let Some(first) = coeffs.first() else {
            return Err(ActionError::ContextMismatch);
        };
        let algebra = first.parent().clone();
        if coeffs.len() != count || algebra.prime() != p || coeffs.iter().any(|c| **c.parent() != *algebra) {
            return Err(ActionError::ContextMismatch);
        }
        Ok(RegularRepElement { p, n, algebra, coeffs })
    }

    pub fn zero(p: Prime, n: usize, algebra: &AlgebraRef<FpElement>) -> Self {
        RegularRepElement {
            p,
            n,
            algebra: algebra.clone(),
            coeffs: vec![AlgebraElement::zero(algebra); monomial_count(p, n)],
        }
    }

    /// `c * x^exps`.
    pub fn monomial(p: Prime, n: usize, exps: &[u32], c: B) -> Result<Self, ActionError> {
        let algebra = c.parent().clone();
        if exps.len() != n || exps.iter().any(|&e| e >= p.get()) {
            return Err(ActionError::ContextMismatch);
        }
        let mut f = Self::zero(p, n, &algebra);
        let idx = f.index_of(exps);
        f.coeffs[idx] = c;
        Ok(f)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn coefficient_algebra(&self) -> &AlgebraRef<FpElement> {
        &self.algebra
    }

    pub fn coefficients(&self) -> &[B] {
        &self.coeffs
    }

    pub fn coefficient(&self, exps: &[u32]) -> &B {
        &self.coeffs[self.index_of(exps)]
    }

    /// The coefficient of `x_1^{p-1} ... x_n^{p-1}`.
    pub fn leading_coefficient(&self) -> &B {
        self.coeffs.last().expect("at least one monomial")
    }

    pub fn index_of(&self, exps: &[u32]) -> usize {
        exps.iter().fold(0, |acc, &e| acc * self.p.get() as usize + e as usize)
    }

    pub fn exponents(&self, mut index: usize) -> Vec<u32> {
        let p = self.p.get() as usize;
        let mut out = vec![0; self.n];
        for slot in out.iter_mut().rev() {
            *slot = (index % p) as u32;
            index /= p;
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ActionError> {
        self.check_context(other)?;
        Ok(RegularRepElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            ..self.clone()
        })
    }

    /// Multiplies every coefficient by `c ∈ B`.
    pub fn scale(&self, c: &B) -> Result<Self, ActionError> {
        if **c.parent() != *self.algebra {
            return Err(ActionError::ContextMismatch);
        }
        Ok(RegularRepElement {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            ..self.clone()
        })
    }

    fn check_context(&self, other: &Self) -> Result<(), ActionError> {
        if self.p != other.p || self.n != other.n || *self.algebra != *other.algebra {
            Err(ActionError::ContextMismatch)
        } else {
            Ok(())
        }
    }

    fn variable(&self, i: usize) -> String {
        if self.n == 1 {
            "x".into()
        } else {
            format!("x{}", i + 1)
        }
    }
}

impl fmt::Display for RegularRepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (idx, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono: Vec<String> = self
                .exponents(idx)
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, &e)| match e {
                    1 => self.variable(i),
                    e => format!("{}^{e}", self.variable(i)),
                })
                .collect();
            let cs = c.to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            terms.push(match (mono.is_empty(), cs.as_str()) {
                (true, _) => cs,
                (false, "1") => mono.join("*"),
                (false, _) => format!("{cs}*{}", mono.join("*")),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// A `B`-point `b = (b_1, ..., b_n)` of `α_p^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionPoint {
    b: Vec<B>,
}

impl ActionPoint {
    /// Checks `b_i^p = 0` for every coordinate.
    pub fn new(b: Vec<B>) -> Result<Self, ActionError> {
        for (i, bi) in b.iter().enumerate() {
            if !bi.pow(bi.parent().prime().get() as u64).is_zero() {
                return Err(ActionError::NotAPoint(format!("b_{} = {bi} has nonzero p-th power", i + 1)));
            }
        }
        if b.windows(2).any(|w| **w[0].parent() != **w[1].parent()) {
            return Err(ActionError::ContextMismatch);
        }
        Ok(ActionPoint { b })
    }

    pub fn zero(n: usize, algebra: &AlgebraRef<FpElement>) -> Self {
        ActionPoint {
            b: vec![AlgebraElement::zero(algebra); n],
        }
    }

    pub fn coordinates(&self) -> &[B] {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.b.iter().all(|c| c.is_zero())
    }

    /// The group law of `α_p^n`.
    pub fn add(&self, other: &Self) -> Result<Self, ActionError> {
        if self.b.len() != other.b.len() {
            return Err(ActionError::ContextMismatch);
        }
        Ok(ActionPoint {
            b: self.b.iter().zip(&other.b).map(|(a, c)| a + c).collect(),
        })
    }
}

impl fmt::Display for ActionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.b.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub(crate) fn monomial_count(p: Prime, n: usize) -> usize {
    (p.get() as usize).pow(n as u32)
}

/// `f(x + b)`, expanding each `(x_i + b_i)^{a_i}` binomially mod `p`.
pub fn translate(f: &RegularRepElement, b: &ActionPoint) -> Result<RegularRepElement, ActionError> {
    if b.b.len() != f.n || b.b.iter().any(|c| **c.parent() != *f.algebra) {
        return Err(ActionError::ContextMismatch);
    }
    let p = f.p.get();
    let powers: Vec<Vec<B>> = b
        .b
        .iter()
        .map(|bi| (0..p).map(|k| bi.pow(k as u64)).collect())
        .collect();
    let mut out = RegularRepElement::zero(f.p, f.n, &f.algebra);
    for (idx, c) in f.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let a = f.exponents(idx);
        let mut k = vec![0u32; f.n];
        loop {
            let mut term = c.clone();
            for i in 0..f.n {
                let binom = binomial_mod_p(a[i] as u64, k[i] as u64, p);
                term = (&term * &powers[i][(a[i] - k[i]) as usize]).scale(&FpElement::new(f.p, binom as i64));
            }
            let target = f.index_of(&k);
            out.coeffs[target] = &out.coeffs[target] + &term;
            if !advance(&mut k, &a) {
                break;
            }
        }
    }
    Ok(out)
}

/// Steps `k` through the box `0 <= k <= bound` (last coordinate fastest).
fn advance(k: &mut [u32], bound: &[u32]) -> bool {
    for i in (0..k.len()).rev() {
        if k[i] < bound[i] {
            k[i] += 1;
            return true;
        }
        k[i] = 0;
    }
    false
}

/// Every element of `B`, in the order of their coefficient vectors read as
/// base-`p` numerals (first basis coordinate least significant).
pub fn enumerate_algebra(algebra: &AlgebraRef<FpElement>, guard: u64) -> Result<Vec<B>, ActionError> {
    let p = algebra.prime();
    let r = algebra.rank();
    let count = (p.get() as u64).checked_pow(r as u32).filter(|&c| c <= guard);
    let Some(count) = count else {
        return Err(ActionError::SizeGuard {
            what: "the coefficient algebra".into(),
            count: format!("{p}^{r}"),
            max: guard,
        });
    };
    Ok((0..count)
        .map(|mut k| {
            let mut v = SparseVec::new();
            for j in 0..r {
                v.add_at(j, FpElement::new(p, (k % p.get() as u64) as i64));
                k /= p.get() as u64;
            }
            AlgebraElement::from_vec(algebra.clone(), v)
        })
        .collect())
}

/// All `b ∈ B^n` with `b_i^p = 0`, lexicographic in the order of
/// [`enumerate_algebra`]. Refused when `|B|^n` exceeds `guard`.
pub fn enumerate_action_points(
    p: Prime,
    n: usize,
    algebra: &AlgebraRef<FpElement>,
    guard: u64,
) -> Result<Vec<ActionPoint>, ActionError> {
    if algebra.prime() != p {
        return Err(ActionError::ContextMismatch);
    }
    let size = (p.get() as u64)
        .checked_pow(algebra.rank() as u32)
        .and_then(|s| s.checked_pow(n as u32))
        .filter(|&c| c <= guard);
    if size.is_none() {
        return Err(ActionError::SizeGuard {
            what: "B^n".into(),
            count: format!("({p}^{})^{n}", algebra.rank()),
            max: guard,
        });
    }
    let nilpotent: Vec<B> = enumerate_algebra(algebra, guard)?
        .into_iter()
        .filter(|c| c.pow(p.get() as u64).is_zero())
        .collect();
    let mut points = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        points.push(ActionPoint {
            b: idx.iter().map(|&i| nilpotent[i].clone()).collect(),
        });
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(points);
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < nilpotent.len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Whether `u` is invertible in `B`: multiplication by `u` is injective.
pub fn is_unit_in(u: &B) -> bool {
    let a = u.parent();
    let p = a.prime();
    let columns = (0..a.rank())
        .map(|j| a.mul_vec(u.coeffs(), &SparseVec::unit(j, p)))
        .collect();
    let m = crate::algebra::LinearMap::from_columns(p, a.rank(), columns);
    crate::linalg::kernel(&m).map(|k| k.is_empty()).unwrap_or(false)
}

/// A short description such as `F2[e]/(e^2)`.
pub fn describe_algebra(algebra: &AlgebraRef<FpElement>) -> String {
    let p = algebra.prime();
    if algebra.generator_count() == 0 {
        return format!("F{p}");
    }
    let rels: Vec<String> = (0..algebra.generator_count())
        .map(|i| {
            let name = &algebra.generator_names()[i];
            let bound = algebra.bounds()[i];
            let lhs = if bound == 1 { name.clone() } else { format!("{name}^{bound}") };
            if algebra.rule(i).is_zero() {
                lhs
            } else {
                format!("{lhs} - ({})", algebra.format_vec(algebra.rule(i)))
            }
        })
        .collect();
    format!("F{p}[{}]/({})", algebra.generator_names().join(","), rels.join(","))
}
