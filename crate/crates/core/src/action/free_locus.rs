use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    describe_algebra, enumerate_action_points, enumerate_algebra, is_unit_in, monomial_count, translate, ActionError,
    ActionPoint, RegularRepElement,
};
use std::sync::Arc;

use super::dense::FixedPointSearch;
use crate::algebra::{AlgebraElement, AlgebraRef, Generator, MonomialAlgebra};
use crate::base_ring::FpElement;
use crate::scalar::{Prime, SparseVec};

/// Pairs of points checked by [`is_action`] before it switches to sampling.
pub const ACTION_PAIR_LIMIT: u64 = 20_000;
/// Sample size once the generic pair has passed.
pub const ACTION_PAIR_SAMPLE_AFTER_UNIVERSAL: u64 = 2_000;

/// Counterexamples kept in a report; the count is always exact.
const KEPT_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionCheck {
    pub points: usize,
    pub spanning_elements: usize,
    pub pairs_checked: u64,
    pub exhaustive: bool,
    /// The laws were also checked for the generic pair of points over
    /// `F_p[b, b']/(b_i^p, b'_i^p)`, which covers every `B` by base change.
    pub universal: bool,
    pub failure: Option<String>,
}

impl ActionCheck {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks the identity and composition laws of [`translate`] on a spanning
/// set of `O(α_p^n) ⊗ B`.
pub fn is_action(p: Prime, n: usize, algebra: &AlgebraRef<FpElement>, seed: u64) -> Result<ActionCheck, ActionError> {
    is_action_with(p, n, algebra, seed, translate)
}

/// [`is_action`] for an arbitrary candidate action.
///
/// All pairs of points are checked when there are at most
/// [`ACTION_PAIR_LIMIT`]; otherwise that many pairs are drawn with a
/// generator seeded by `seed + pair index`, or only
/// [`ACTION_PAIR_SAMPLE_AFTER_UNIVERSAL`] when the generic pair (checked
/// first whenever its ring fits under the rank guard) already passed.
pub fn is_action_with<A>(
    p: Prime,
    n: usize,
    algebra: &AlgebraRef<FpElement>,
    seed: u64,
    act: A,
) -> Result<ActionCheck, ActionError>
where
    A: Fn(&RegularRepElement, &ActionPoint) -> Result<RegularRepElement, ActionError> + Sync,
{
    let points = enumerate_action_points(p, n, algebra, super::DEFAULT_SIZE_GUARD)?;
    let (universal, universal_failure) = match generic_pair_ring(p, n) {
        Some(ring) => (true, generic_pair_failure(p, n, &ring, &act)?),
        None => (false, None),
    };
    if universal_failure.is_some() {
        return Ok(ActionCheck {
            points: points.len(),
            spanning_elements: 0,
            pairs_checked: 0,
            exhaustive: false,
            universal,
            failure: universal_failure,
        });
    }
    let mut spanning = Vec::new();
    for idx in 0..monomial_count(p, n) {
        for j in 0..algebra.rank() {
            let c = AlgebraElement::from_vec(algebra.clone(), SparseVec::unit(j, p));
            let zero = RegularRepElement::zero(p, n, algebra);
            spanning.push(RegularRepElement::monomial(p, n, &zero.exponents(idx), c)?);
        }
    }
    let zero = ActionPoint::zero(n, algebra);
    for f in &spanning {
        if act(f, &zero)? != *f {
            return Ok(ActionCheck {
                points: points.len(),
                spanning_elements: spanning.len(),
                pairs_checked: 0,
                exhaustive: false,
                universal,
                failure: Some(format!("0 · ({f}) != {f}")),
            });
        }
    }
    let np = points.len() as u64;
    let exhaustive = np * np <= ACTION_PAIR_LIMIT;
    let pairs = match (exhaustive, universal) {
        (true, _) => np * np,
        (false, true) => ACTION_PAIR_SAMPLE_AFTER_UNIVERSAL,
        (false, false) => ACTION_PAIR_LIMIT,
    };
    let failure = (0..pairs)
        .into_par_iter()
        .map(|k| -> Result<Option<String>, ActionError> {
            let (i, j) = if exhaustive {
                (k / np, k % np)
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k));
                (rng.gen_range(0..np), rng.gen_range(0..np))
            };
            let (b, c) = (&points[i as usize], &points[j as usize]);
            let bc = b.add(c)?;
            for f in &spanning {
                let twice = act(&act(f, b)?, c)?;
                let once = act(f, &bc)?;
                if twice != once {
                    return Ok(Some(format!(
                        "f = {f}, b = {b}, b' = {c}: b'·(b·f) = {twice} but (b+b')·f = {once}"
                    )));
                }
            }
            Ok(None)
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()?
        .flatten();
    Ok(ActionCheck {
        points: points.len(),
        spanning_elements: spanning.len(),
        pairs_checked: pairs,
        exhaustive,
        universal,
        failure,
    })
}

/// `F_p[b_1..b_n, c_1..c_n]/(b_i^p, c_i^p)`, or `None` above the rank guard.
fn generic_pair_ring(p: Prime, n: usize) -> Option<AlgebraRef<FpElement>> {
    let gens = (1..=n)
        .map(|i| Generator::nilpotent(format!("b{i}"), p.get()))
        .chain((1..=n).map(|i| Generator::nilpotent(format!("c{i}"), p.get())))
        .collect();
    MonomialAlgebra::new(p, gens).ok().map(Arc::new)
}

fn generic_pair_failure<A>(
    p: Prime,
    n: usize,
    ring: &AlgebraRef<FpElement>,
    act: &A,
) -> Result<Option<String>, ActionError>
where
    A: Fn(&RegularRepElement, &ActionPoint) -> Result<RegularRepElement, ActionError>,
{
    let b = ActionPoint::new((0..n).map(|i| AlgebraElement::generator(ring, i)).collect())?;
    let c = ActionPoint::new((0..n).map(|i| AlgebraElement::generator(ring, n + i)).collect())?;
    let bc = b.add(&c)?;
    let zero = ActionPoint::zero(n, ring);
    let template = RegularRepElement::zero(p, n, ring);
    for idx in 0..monomial_count(p, n) {
        let f = RegularRepElement::monomial(p, n, &template.exponents(idx), AlgebraElement::one(ring))?;
        if act(&f, &zero)? != f {
            return Ok(Some(format!("0 · ({f}) != {f}")));
        }
        let twice = act(&act(&f, &b)?, &c)?;
        let once = act(&f, &bc)?;
        if twice != once {
            return Ok(Some(format!(
                "f = {f}, generic b, b': b'·(b·f) = {twice} but (b+b')·f = {once}"
            )));
        }
    }
    Ok(None)
}

/// The points `b` with `f(x + b) = f(x)`.
pub fn stabilizer(f: &RegularRepElement, guard: u64) -> Result<Vec<ActionPoint>, ActionError> {
    let points = enumerate_action_points(f.prime(), f.arity(), f.coefficient_algebra(), guard)?;
    stabilizer_in(f, &points)
}

pub(crate) fn stabilizer_in(f: &RegularRepElement, points: &[ActionPoint]) -> Result<Vec<ActionPoint>, ActionError> {
    let mut out = Vec::new();
    for b in points {
        if translate(f, b)? == *f {
            out.push(b.clone());
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeLocusMode {
    /// Every `f` with a unit leading coefficient.
    Exhaustive,
    /// `trials` random such `f`; trial `k` draws from a generator seeded by
    /// `seed + k`.
    Random { trials: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub f: String,
    pub leading_coefficient: String,
    pub stabilizer: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeLocusReport {
    pub p: u32,
    pub n: usize,
    pub algebra: String,
    pub mode: &'static str,
    pub trials: u64,
    pub seed: Option<u64>,
    pub action_points: usize,
    pub units: usize,
    pub failure_count: u64,
    pub failures: Vec<Counterexample>,
    /// In exhaustive mode, how many `f` with a non-unit leading coefficient
    /// have a nontrivial stabilizer; these are outside the claim.
    pub non_free_outside_claim: Option<u64>,
}

impl FreeLocusReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

/// Checks that every tested `f` whose coefficient of
/// `x_1^{p-1} ... x_n^{p-1}` is a unit of `B` has trivial stabilizer.
pub fn free_locus_hyperplane_check(
    p: Prime,
    n: usize,
    algebra: &AlgebraRef<FpElement>,
    mode: FreeLocusMode,
    guard: u64,
) -> Result<FreeLocusReport, ActionError> {
    let points = enumerate_action_points(p, n, algebra, guard)?;
    let elements = enumerate_algebra(algebra, guard)?;
    let units: Vec<AlgebraElement<FpElement>> = elements.iter().filter(|u| is_unit_in(u)).cloned().collect();
    let slots = monomial_count(p, n);
    let size = elements.len() as u64;

    let build = |lower: &[usize], leading: &AlgebraElement<FpElement>| {
        let mut coeffs: Vec<AlgebraElement<FpElement>> = lower.iter().map(|&i| elements[i].clone()).collect();
        coeffs.push(leading.clone());
        RegularRepElement::new(p, n, coeffs).expect("coefficients share B")
    };
    let digits = |mut k: u64| -> Vec<usize> {
        (0..slots - 1)
            .map(|_| {
                let d = (k % size) as usize;
                k /= size;
                d
            })
            .collect()
    };
    let search = FixedPointSearch::new(p, n, algebra, &points);

    if units.is_empty() {
        return Err(ActionError::GuardExceeded("the coefficient algebra has no units".into()));
    }
    let lower_count = size.checked_pow(slots as u32 - 1);
    let trials = match mode {
        FreeLocusMode::Exhaustive => {
            let total = lower_count
                .and_then(|l| l.checked_mul(units.len() as u64))
                .filter(|&t| t <= guard);
            total.ok_or_else(|| ActionError::SizeGuard {
                what: "the polynomials with unit leading coefficient".into(),
                count: format!("{} * {size}^{}", units.len(), slots - 1),
                max: guard,
            })?
        }
        FreeLocusMode::Random { trials, .. } => trials,
    };
    let candidates = |k: u64| match mode {
        FreeLocusMode::Exhaustive => {
            let lower = lower_count.expect("checked above");
            build(&digits(k % lower), &units[(k / lower) as usize])
        }
        FreeLocusMode::Random { seed, .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k));
            let lower: Vec<usize> = (0..slots - 1).map(|_| rng.gen_range(0..size as usize)).collect();
            let leading = &units[rng.gen_range(0..units.len())];
            build(&lower, leading)
        }
    };

    let failures: Vec<Counterexample> = (0..trials)
        .into_par_iter()
        .map(|k| {
            let f = candidates(k);
            search.has_nontrivial_fixer(&f).then(|| Counterexample {
                f: f.to_string(),
                leading_coefficient: f.leading_coefficient().to_string(),
                stabilizer: search.stabilizer(&f).iter().map(|b| b.to_string()).collect(),
            })
        })
        .flatten()
        .collect();

    let non_free_outside_claim = match mode {
        FreeLocusMode::Random { .. } => None,
        FreeLocusMode::Exhaustive => {
            let non_units: Vec<&AlgebraElement<FpElement>> = elements.iter().filter(|u| !is_unit_in(u)).collect();
            let lower = size.pow(slots as u32 - 1);
            let total = lower * non_units.len() as u64;
            if total > guard {
                None
            } else {
                let count = (0..total)
                    .into_par_iter()
                    .map(|k| {
                        let f = build(&digits(k % lower), non_units[(k / lower) as usize]);
                        u64::from(search.has_nontrivial_fixer(&f))
                    })
                    .sum();
                Some(count)
            }
        }
    };

    Ok(FreeLocusReport {
        p: p.get(),
        n,
        algebra: describe_algebra(algebra),
        mode: match mode {
            FreeLocusMode::Exhaustive => "exhaustive",
            FreeLocusMode::Random { .. } => "random",
        },
        trials,
        seed: match mode {
            FreeLocusMode::Random { seed, .. } => Some(seed),
            FreeLocusMode::Exhaustive => None,
        },
        action_points: points.len(),
        units: units.len(),
        failure_count: failures.len() as u64,
        failures: failures.into_iter().take(KEPT_FAILURES).collect(),
        non_free_outside_claim,
    })
}
