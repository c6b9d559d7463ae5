use std::sync::Arc;

use serde::Serialize;

use super::{monomial_count, translate, ActionError, ActionPoint, RegularRepElement};
use crate::algebra::{AlgebraElement, AlgebraError, AlgebraRef, Generator, MonomialAlgebra};
use crate::base_ring::FpElement;
use crate::scalar::{Prime, SparseVec};

/// Largest `p` and `n` accepted by the symbolic computation.
pub const SYMBOLIC_MAX_P: u32 = 5;
pub const SYMBOLIC_MAX_N: usize = 3;

/// `F_p[c_a : a ∈ [0,p)^n][b_1..b_n]/(c_a^2, b_i^p)`.
///
/// The `c_a` are truncated at degree 2: `f(x+b) - f(x)` is linear in them.
/// Generators are the `c_a` in mixed-radix order, then `b_1, ..., b_n`.
pub fn symbolic_coefficient_ring(p: Prime, n: usize) -> Result<AlgebraRef<FpElement>, ActionError> {
    if p.get() > SYMBOLIC_MAX_P || n > SYMBOLIC_MAX_N || n == 0 {
        return Err(ActionError::GuardExceeded(format!(
            "symbolic identity needs p <= {SYMBOLIC_MAX_P} and 1 <= n <= {SYMBOLIC_MAX_N} (got p = {p}, n = {n})"
        )));
    }
    let count = monomial_count(p, n);
    let mut gens: Vec<Generator<FpElement>> = (0..count)
        .map(|idx| Generator::nilpotent(format!("c{}", exponent_tag(p, n, idx)), 2))
        .collect();
    gens.extend((1..=n).map(|i| Generator::nilpotent(format!("b{i}"), p.get())));
    match MonomialAlgebra::new(p, gens) {
        Ok(a) => Ok(Arc::new(a)),
        Err(AlgebraError::RankGuard { rank, max }) => Err(ActionError::GuardExceeded(format!(
            "symbolic coefficient ring for p = {p}, n = {n} has rank {rank} > {max}"
        ))),
        Err(e) => Err(e.into()),
    }
}

fn exponent_tag(p: Prime, n: usize, mut idx: usize) -> String {
    let mut digits = vec![0; n];
    for d in digits.iter_mut().rev() {
        *d = idx % p.get() as usize;
        idx /= p.get() as usize;
    }
    digits.iter().map(|d| d.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtractedCoefficient {
    /// `i` in `1..=n`.
    pub i: usize,
    /// `x_1^{p-1} ... x_i^{p-2} ... x_n^{p-1}`.
    pub monomial: String,
    pub coefficient: String,
    pub expected: String,
    /// The coefficient equals `(p-1) c_top b_i` on the nose.
    pub exact: bool,
    /// The coefficient equals `(p-1) c_top b_i` modulo `(b_1, ..., b_n)^2`.
    pub modulo_b_squared: bool,
}

/// If `c_top` is a unit and `b` stabilizes `f`, then `b ∈ N^m` implies
/// `b ∈ N^{m+1}` for `N = (b_1, ..., b_n)`, since each `b_i` is a unit
/// multiple of the residual, which lies in `N^2 · N^{m-1} ⊆ N^{m+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionCertificate {
    /// Least `b`-degree of any monomial in the residuals; `None` when zero.
    pub residual_min_b_degree: Option<u32>,
    /// `(m, m + 1)` for each step.
    pub steps: Vec<(u32, u32)>,
    /// `N^k = 0` for this `k`: no monomial in the `b_i` of degree `k` survives.
    pub nilpotency_degree: u32,
    /// `n (p-1)^2 + 1`.
    pub iteration_bound: u32,
    pub within_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicIdentityReport {
    pub p: u32,
    pub n: usize,
    pub ring_rank: usize,
    pub coefficients: Vec<ExtractedCoefficient>,
    pub zero_point_fixes_f: bool,
    pub induction: InductionCertificate,
    pub holds: bool,
}

/// Computes `d = f(x+b) - f(x)` for the generic `f = Σ c_a x^a` and checks
/// that its coefficient at `x_1^{p-1} ... x_i^{p-2} ... x_n^{p-1}` is
/// `(p-1) c_top b_i`, plus the nilpotent induction that turns this into
/// `b = 0` when `c_top` is a unit.
pub fn universal_leading_coefficient_identity(p: Prime, n: usize) -> Result<SymbolicIdentityReport, ActionError> {
    let ring = symbolic_coefficient_ring(p, n)?;
    let count = monomial_count(p, n);
    let f = RegularRepElement::new(p, n, (0..count).map(|i| AlgebraElement::generator(&ring, i)).collect())?;
    let b = ActionPoint::new((0..n).map(|i| AlgebraElement::generator(&ring, count + i)).collect())?;
    let shifted = translate(&f, &b)?;
    let zero_point_fixes_f = translate(&f, &ActionPoint::zero(n, &ring))? == f;

    let b_degree = |idx: usize| -> u32 { ring.exponents(idx)[count..].iter().sum() };
    let truncate = |v: &SparseVec<FpElement>| -> SparseVec<FpElement> {
        SparseVec::from_entries(v.iter().filter(|&(i, _)| b_degree(i) < 2).map(|(i, c)| (i, *c)))
    };
    let c_top = AlgebraElement::generator(&ring, count - 1);
    let minus_one = FpElement::new(p, -1);
    let top = p.get() - 1;

    let mut coefficients = Vec::with_capacity(n);
    let mut residual_min: Option<u32> = None;
    for i in 0..n {
        let mut exps = vec![top; n];
        exps[i] = top - 1;
        let d = shifted.coefficient(&exps) - f.coefficient(&exps);
        let expected = &c_top * &b.coordinates()[i].scale(&minus_one);
        let residual = &d - &expected;
        for (idx, _) in residual.coeffs().iter() {
            let deg = b_degree(idx);
            residual_min = Some(residual_min.map_or(deg, |m| m.min(deg)));
        }
        coefficients.push(ExtractedCoefficient {
            i: i + 1,
            monomial: monomial_label(n, &exps),
            coefficient: d.to_string(),
            expected: expected.to_string(),
            exact: residual.is_zero(),
            modulo_b_squared: truncate(d.coeffs()) == truncate(expected.coeffs()),
        });
    }

    let max_b_degree = (0..ring.rank()).map(b_degree).max().unwrap_or(0);
    let nilpotency_degree = max_b_degree + 1;
    let iteration_bound = n as u32 * top * top + 1;
    let residual_ok = residual_min.map_or(true, |m| m >= 2);
    let steps: Vec<(u32, u32)> = if residual_ok {
        (1..nilpotency_degree).map(|m| (m, m + 1)).collect()
    } else {
        Vec::new()
    };
    let within_bound = residual_ok && steps.len() as u32 <= iteration_bound;
    let holds = zero_point_fixes_f && within_bound && coefficients.iter().all(|c| c.modulo_b_squared);
    Ok(SymbolicIdentityReport {
        p: p.get(),
        n,
        ring_rank: ring.rank(),
        coefficients,
        zero_point_fixes_f,
        induction: InductionCertificate {
            residual_min_b_degree: residual_min,
            steps,
            nilpotency_degree,
            iteration_bound,
            within_bound,
        },
        holds,
    })
}

fn monomial_label(n: usize, exps: &[u32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| {
            let v = if n == 1 { "x".to_string() } else { format!("x{}", i + 1) };
            if e == 1 {
                v
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}
