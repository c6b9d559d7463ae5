use std::fmt::Write as _;
use std::sync::Arc;

use hopfjump::action::{
    free_locus_hyperplane_check, is_action, universal_leading_coefficient_identity, ActionError, FreeLocusMode,
    DEFAULT_SIZE_GUARD,
};
use hopfjump::algebra::{parse_test_algebra, AlgebraElement, AlgebraError};
use hopfjump::base_ring::BaseRingError;
use hopfjump::cohomology::{
    dim_bgn, fiber_jump, minimal_n_for_jump, stabilized_n, verify_binomial_vs_kunneth_upto, CohomologyError,
    JumpQuery,
};
use hopfjump::hopf::{
    alpha_self_duality, build_deformation_hopf, cartier_dual, catalog_build, double_dual,
    generic_dual_to_constant_cyclic, hopf_quotient, mu_dual_to_constant_cyclic, special_dual_to_alpha_square,
    verify_axioms, AxiomReport, CatalogName, HopfError, HopfStructure, Recognition,
};
use hopfjump::{Fiber, FpElement, Prime, RationalFunction, Scalar};
use serde_json::{json, Value};

use crate::args::{DualArgs, DualObject, FiberArg, FreeLocusArgs, JumpArgs, QuotientArgs, TableArgs, TableFiber, VerifyArgs};
use crate::pipeline::run_pipeline;
use crate::{envelope, CliError, Csv, Outcome};

/// Largest arity and degree in a cohomology table.
pub const TABLE_LIMIT: u64 = 200;
/// Largest `e` and `i` accepted by `jump`.
pub const JUMP_E_LIMIT: u64 = 1_000_000;
pub const JUMP_I_LIMIT: u64 = 1_000;

fn hopf_error(e: HopfError) -> CliError {
    match e {
        HopfError::UnsupportedParameters(m) => CliError::Usage(m),
        HopfError::BaseRing(BaseRingError::DegreeOverflow { .. }) | HopfError::Algebra(AlgebraError::RankGuard { .. }) => {
            CliError::Guard(e.to_string())
        }
        other => CliError::Internal(other.to_string()),
    }
}

fn action_error(e: ActionError) -> CliError {
    match e {
        ActionError::SizeGuard { .. } | ActionError::GuardExceeded(_) => CliError::Guard(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

fn cohomology_error(e: CohomologyError) -> CliError {
    match e {
        CohomologyError::InvalidInput(m) => CliError::Usage(m),
        CohomologyError::ScanExhausted(_) => CliError::Guard(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

fn mark(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

fn check_verify_prime(p: Prime, slow: bool) -> Result<(), CliError> {
    match p.get() {
        2 | 3 => Ok(()),
        5 if slow => Ok(()),
        5 => Err(CliError::Guard("verify runs p = 2, 3 by default (p <= 5 with --slow); pass --slow for p = 5".into())),
        q => Err(CliError::Guard(format!("verify supports p <= 5 (got p = {q})"))),
    }
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    check_verify_prime(a.p, a.slow)?;
    #[cfg(feature = "mutations")]
    let mutation = a.mutate;
    #[cfg(not(feature = "mutations"))]
    let mutation = None;
    let report = run_pipeline(a.p, mutation);

    let mut pretty = format!("verify p = {}", a.p);
    if let Some(m) = report.mutation {
        let _ = write!(pretty, " (mutation: {m})");
    }
    pretty.push('\n');
    let mut csv = Csv::new(&["step", "passed", "detail"]);
    for s in &report.steps {
        let _ = writeln!(
            pretty,
            "  [{}] {:<32} {:>8.3}s  {}",
            mark(s.passed),
            s.name,
            s.elapsed.as_secs_f64(),
            s.detail
        );
        csv.push(vec![s.name.to_string(), s.passed.to_string(), s.detail.clone()]);
    }
    match report.first_failure {
        None => pretty.push_str("all steps passed\n"),
        Some(name) => {
            let _ = writeln!(pretty, "first failing step: {name}");
        }
    }
    let body = serde_json::to_value(&report).expect("serializes");
    Ok(Outcome {
        passed: report.passed(),
        json: envelope("verify", report.passed(), body),
        csv: Some(csv),
        pretty,
    })
}

fn axiom_summary(report: &AxiomReport) -> Value {
    let mut map = serde_json::Map::new();
    for c in &report.checks {
        map.insert(c.axiom.name().to_string(), json!(c.passed));
    }
    Value::Object(map)
}

struct DualPart {
    name: String,
    passed: bool,
    detail: String,
}

fn recognize<S: Scalar>(name: &str, r: Result<Recognition<S>, HopfError>) -> Result<DualPart, CliError> {
    let report = r.map_err(hopf_error)?.verify();
    Ok(DualPart {
        name: name.to_string(),
        passed: report.passed(),
        detail: match report.first_failure() {
            None => "isomorphism verified".into(),
            Some(c) => format!("{} fails {}", c.identity, c.witness.as_deref().unwrap_or("")),
        },
    })
}

fn dual_report<S: Scalar>(
    label: &str,
    a: &DualArgs,
    h: &HopfStructure<S>,
    mut parts: Vec<DualPart>,
) -> Result<Outcome, CliError> {
    let dual = cartier_dual(h).map_err(hopf_error)?;
    let axioms = verify_axioms(&dual);
    parts.push(recognize("double_dual", double_dual(h))?);
    let comult: Vec<Value> = (0..dual.rank())
        .map(|j| {
            let e = hopfjump::scalar::SparseVec::unit(j, dual.prime());
            json!({ "basis": dual.basis()[j], "image": dual.format_tensor(&dual.comultiply(&e), 2) })
        })
        .collect();
    let passed = axioms.all_required_pass() && parts.iter().all(|p| p.passed);

    let mut pretty = format!("Cartier dual of {label} (p = {}, rank {})\n", a.p, dual.rank());
    for c in &comult {
        let _ = writeln!(pretty, "  Δ({}) = {}", c["basis"].as_str().unwrap_or(""), c["image"].as_str().unwrap_or(""));
    }
    match axioms.first_failure() {
        None => pretty.push_str("  [pass] Hopf axioms of the dual\n"),
        Some(c) => {
            let _ = writeln!(pretty, "  [FAIL] {} {}", c.axiom.name(), c.witness.as_deref().unwrap_or(""));
        }
    }
    let mut csv = Csv::new(&["check", "passed", "detail"]);
    csv.push(vec!["axioms".into(), axioms.all_required_pass().to_string(), String::new()]);
    for part in &parts {
        let _ = writeln!(pretty, "  [{}] {}: {}", mark(part.passed), part.name, part.detail);
        csv.push(vec![part.name.clone(), part.passed.to_string(), part.detail.clone()]);
    }

    let body = json!({
        "object": label,
        "p": a.p.get(),
        "fiber": fiber_name(a.fiber),
        "rank": dual.rank(),
        "dual_basis": dual.basis(),
        "dual_comultiplication": comult,
        "axioms": axiom_summary(&axioms),
        "recognitions": parts.iter().map(|p| json!({"name": p.name, "passed": p.passed, "detail": p.detail})).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        passed,
        json: envelope("dual", passed, body),
        csv: Some(csv),
        pretty,
    })
}

fn fiber_name(f: FiberArg) -> &'static str {
    match f {
        FiberArg::Special => "special",
        FiberArg::Generic => "generic",
    }
}

fn catalog_dual<S: Scalar>(a: &DualArgs, name: CatalogName) -> Result<Outcome, CliError> {
    let k = a.k.unwrap_or(if name == CatalogName::AlphaP { 1 } else { 2 });
    let entry = catalog_build::<S>(name, a.p, k).map_err(hopf_error)?;
    let q = entry.order;
    let parts = match name {
        CatalogName::AlphaP => vec![recognize("self_duality", alpha_self_duality::<S>(a.p))?],
        CatalogName::Mu | CatalogName::ConstantCyclic => {
            vec![recognize("mu_is_dual_of_constant_cyclic", mu_dual_to_constant_cyclic::<S>(a.p, q))?]
        }
    };
    let label = match name {
        CatalogName::AlphaP => "alpha_p".to_string(),
        other => format!("{}_{q}", other.name()),
    };
    dual_report(&label, a, &entry.structure, parts)
}

pub fn dual(a: &DualArgs) -> Result<Outcome, CliError> {
    if a.p.get() > 5 {
        return Err(CliError::Guard(format!("dual supports p <= 5 (got p = {})", a.p)));
    }
    match a.object {
        DualObject::Deformation => {
            let h = build_deformation_hopf(a.p).map_err(hopf_error)?;
            match a.fiber {
                FiberArg::Generic => {
                    let g = h.specialize_generic().map_err(hopf_error)?;
                    let parts = vec![recognize("constant_cyclic_is_dual", generic_dual_to_constant_cyclic(&g))?];
                    dual_report("deformation", a, g.structure(), parts)
                }
                FiberArg::Special => {
                    let s = h.specialize_special().map_err(hopf_error)?;
                    let parts = vec![recognize("alpha_square_is_dual", special_dual_to_alpha_square(&s))?];
                    dual_report("deformation", a, s.structure(), parts)
                }
            }
        }
        object => {
            let name = match object {
                DualObject::AlphaP => CatalogName::AlphaP,
                DualObject::Mu => CatalogName::Mu,
                _ => CatalogName::ConstantCyclic,
            };
            match a.fiber {
                FiberArg::Special => catalog_dual::<FpElement>(a, name),
                FiberArg::Generic => catalog_dual::<RationalFunction>(a, name),
            }
        }
    }
}

/// Parses `x`, `y^2`, `x*y^3` against the generator names of `algebra`.
fn parse_monomial<S: Scalar>(
    term: &str,
    algebra: &hopfjump::AlgebraRef<S>,
) -> Result<AlgebraElement<S>, CliError> {
    let names = algebra.generator_names();
    let mut exps = vec![0u32; names.len()];
    for factor in term.split('*').map(str::trim) {
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim()
                    .parse::<u32>()
                    .map_err(|_| CliError::Usage(format!("bad exponent in '{factor}'")))?,
            ),
            None => (factor, 1),
        };
        let idx = algebra.generator_index(name).ok_or_else(|| {
            CliError::Usage(format!("unknown generator '{name}' (expected one of {})", names.join(", ")))
        })?;
        exps[idx] += e;
    }
    let p = algebra.prime();
    Ok(AlgebraElement::from_vec(algebra.clone(), algebra.reduce_monomial(S::one(p), exps)))
}

pub fn quotient(a: &QuotientArgs) -> Result<Outcome, CliError> {
    if a.p.get() > 5 {
        return Err(CliError::Guard(format!("quotient supports p <= 5 (got p = {})", a.p)));
    }
    let h = build_deformation_hopf(a.p).map_err(hopf_error)?;
    let terms: Vec<&str> = a.by.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    let gens = terms
        .iter()
        .map(|t| parse_monomial(t, h.algebra()))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal: Vec<String> = gens.iter().map(|g| g.to_string()).collect();

    let (passed, body, pretty) = match hopf_quotient(&h, &gens) {
        Ok(q) => {
            let axioms = verify_axioms(q.presentation.structure());
            let summary = q.presentation.summary();
            let passed = axioms.all_required_pass();
            let mut pretty = format!("A/({}) over F_{}[t]_(t): rank {}\n", ideal.join(", "), a.p, summary.rank);
            for g in &summary.comultiplication {
                let _ = writeln!(pretty, "  Δ({}) = {}", g.generator, g.image);
            }
            for g in &summary.antipode {
                let _ = writeln!(pretty, "  S({}) = {}", g.generator, g.image);
            }
            let _ = writeln!(pretty, "  [{}] Hopf axioms of the quotient", mark(passed));
            let body = json!({
                "p": a.p.get(),
                "ideal": ideal,
                "hopf_ideal": true,
                "removed": q.removed,
                "ideal_rank": q.ideal_rank,
                "quotient": summary,
                "axioms": axiom_summary(&axioms),
            });
            (passed, body, pretty)
        }
        Err(
            e @ (HopfError::NotAHopfIdeal { .. } | HopfError::NotFreeQuotient(_) | HopfError::QuotientNotMonomial(_)),
        ) => {
            let body = json!({
                "p": a.p.get(),
                "ideal": ideal,
                "hopf_ideal": false,
                "rejected": e.to_string(),
            });
            let pretty = format!("A/({}) rejected: {e}\n", ideal.join(", "));
            (false, body, pretty)
        }
        Err(e) => return Err(hopf_error(e)),
    };
    Ok(Outcome {
        passed,
        json: envelope("quotient", passed, body),
        csv: None,
        pretty,
    })
}

pub fn cohomology_table(a: &TableArgs) -> Result<Outcome, CliError> {
    let ((n_lo, n_hi), (i_lo, i_hi)) = (a.n, a.i);
    if n_lo == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    if n_hi > TABLE_LIMIT || i_hi > TABLE_LIMIT {
        return Err(CliError::Guard(format!(
            "cohomology-table supports n, i <= {TABLE_LIMIT} (got n up to {n_hi}, i up to {i_hi})"
        )));
    }
    let checks = verify_binomial_vs_kunneth_upto(n_hi, i_hi as usize).map_err(cohomology_error)?;
    let mismatches: Vec<_> = checks.iter().flat_map(|r| r.mismatches.iter().map(move |m| (r.n, m))).collect();
    let fibers: &[Fiber] = match a.fiber {
        TableFiber::Special => &[Fiber::Special],
        TableFiber::Generic => &[Fiber::Generic],
        TableFiber::Both => &[Fiber::Special, Fiber::Generic],
    };

    let mut csv = Csv::new(&["n", "i", "fiber", "dim"]);
    let mut cells = Vec::new();
    let mut pretty = String::new();
    let mut head = format!("{:>4} {:>4}", "n", "i");
    for f in fibers {
        let _ = write!(head, " {:>14}", f.name());
    }
    if fibers.len() == 2 {
        let _ = write!(head, " {:>14}", "gap");
    }
    pretty.push_str(head.trim_end());
    pretty.push('\n');
    for n in n_lo..=n_hi {
        for i in i_lo..=i_hi {
            let mut line = format!("{n:>4} {i:>4}");
            let mut values = Vec::new();
            for &f in fibers {
                let d = dim_bgn(n, i, f).map_err(cohomology_error)?;
                let _ = write!(line, " {d:>14}");
                values.push((f.name(), d.to_string()));
                cells.push(json!({"n": n, "i": i, "fiber": f.name(), "dim": d.to_string()}));
                csv.push(vec![n.to_string(), i.to_string(), f.name().into(), d.to_string()]);
            }
            if fibers.len() == 2 {
                let gap = dim_bgn(n, i, Fiber::Special).map_err(cohomology_error)?
                    - dim_bgn(n, i, Fiber::Generic).map_err(cohomology_error)?;
                let _ = write!(line, " {gap:>14}");
                cells.push(json!({"n": n, "i": i, "fiber": "gap", "dim": gap.to_string()}));
                csv.push(vec![n.to_string(), i.to_string(), "gap".into(), gap.to_string()]);
            }
            pretty.push_str(&line);
            pretty.push('\n');
        }
    }
    let passed = mismatches.is_empty();
    let _ = writeln!(
        pretty,
        "[{}] closed forms agree with Künneth powers for n <= {n_hi}, i <= {i_hi}",
        mark(passed)
    );
    for (n, m) in &mismatches {
        let _ = writeln!(
            pretty,
            "  n = {n}, i = {}, {}: binomial {} vs convolution {}",
            m.degree,
            m.fiber.name(),
            m.binomial,
            m.convolution
        );
    }
    let body = json!({
        "n_range": [n_lo, n_hi],
        "i_range": [i_lo, i_hi],
        "kunneth_check": {
            "passed": passed,
            "max_n": n_hi,
            "max_degree": i_hi,
            "mismatches": mismatches.iter().map(|(n, m)| json!({"n": n, "mismatch": m})).collect::<Vec<_>>(),
        },
        "cells": cells,
    });
    Ok(Outcome {
        passed,
        json: envelope("cohomology-table", passed, body),
        csv: Some(csv),
        pretty,
    })
}

pub fn jump(a: &JumpArgs) -> Result<Outcome, CliError> {
    if a.e > JUMP_E_LIMIT || a.i > JUMP_I_LIMIT {
        return Err(CliError::Guard(format!(
            "jump supports e <= {JUMP_E_LIMIT} and i <= {JUMP_I_LIMIT} (got e = {}, i = {})",
            a.e, a.i
        )));
    }
    let q = JumpQuery::new(a.e, a.i, a.big_n).map_err(cohomology_error)?;
    let sol = minimal_n_for_jump(&q).map_err(cohomology_error)?;
    let big_n = a.big_n.unwrap_or_else(|| stabilized_n(a.i));
    let fj = fiber_jump(sol.n, a.i, big_n).map_err(cohomology_error)?;
    let meets_e = fj.jump >= a.e.into();
    let passed = sol.holds_at_next && fj.termwise_dominated && meets_e;

    let n = sol.n;
    let (i, e) = (a.i, a.e);
    let inequality = format!(
        "C({}, {i}) = {} >= C({}, {i}) + {e} = {} + {e}",
        2 * n + i - 1,
        sol.special,
        n + i - 1,
        sol.generic
    );
    let mut pretty = format!("least n with dim H^{i}(B(G^n)) jumping by at least {e}: n = {n}\n");
    let _ = writeln!(pretty, "  {inequality}");
    let _ = writeln!(pretty, "  fails at n - 1; holds at n + 1: {}", sol.holds_at_next);
    let _ = writeln!(pretty, "with P^{big_n} (sums over degrees {i}, {}, ...):", i as i64 - 2);
    let mut csv = Csv::new(&["e", "i", "n", "N", "degree", "special", "generic", "dominated"]);
    for t in &fj.terms {
        let _ = writeln!(
            pretty,
            "  [{}] degree {:>3}: special {} >= generic {}",
            mark(t.dominated),
            t.degree,
            t.special,
            t.generic
        );
        csv.push(vec![
            e.to_string(),
            i.to_string(),
            n.to_string(),
            big_n.to_string(),
            t.degree.to_string(),
            t.special.to_string(),
            t.generic.to_string(),
            t.dominated.to_string(),
        ]);
    }
    let _ = writeln!(
        pretty,
        "  special {} - generic {} = {} >= {e}: {}",
        fj.special_total,
        fj.generic_total,
        fj.jump,
        mark(meets_e)
    );
    let body = json!({
        "e": e,
        "i": i,
        "N": big_n,
        "n": n,
        "inequality": {
            "text": inequality,
            "special": sol.special.to_string(),
            "generic": sol.generic.to_string(),
            "holds_at_next": sol.holds_at_next,
        },
        "fiber_jump": fj,
        "jump_at_least_e": meets_e,
    });
    Ok(Outcome {
        passed,
        json: envelope("jump", passed, body),
        csv: Some(csv),
        pretty,
    })
}

pub fn free_locus(a: &FreeLocusArgs) -> Result<Outcome, CliError> {
    let algebra = Arc::new(parse_test_algebra(&a.algebra, a.p).map_err(|e| CliError::Usage(e.to_string()))?);
    let n = a.n as usize;
    let mode = match a.trials {
        Some(trials) => FreeLocusMode::Random { trials, seed: a.seed },
        None => {
            let size = (a.p.get() as u64).checked_pow(algebra.rank() as u32);
            let slots = (a.p.get()).checked_pow(n as u32);
            let total = size.zip(slots).and_then(|(s, k)| s.checked_pow(k));
            match total {
                Some(t) if t <= DEFAULT_SIZE_GUARD => FreeLocusMode::Exhaustive,
                _ => FreeLocusMode::Random {
                    trials: 1000,
                    seed: a.seed,
                },
            }
        }
    };
    let action = is_action(a.p, n, &algebra, a.seed).map_err(action_error)?;
    let report = free_locus_hyperplane_check(a.p, n, &algebra, mode, DEFAULT_SIZE_GUARD).map_err(action_error)?;
    let symbolic = match universal_leading_coefficient_identity(a.p, n) {
        Ok(r) => Some(r),
        Err(ActionError::GuardExceeded(_)) => None,
        Err(e) => return Err(action_error(e)),
    };
    let symbolic_ok = symbolic.as_ref().map_or(true, |r| r.holds);
    let passed = action.holds() && report.passed() && symbolic_ok;

    let mut pretty = format!(
        "free locus of alpha_{}^{} acting on itself, B = {}\n",
        a.p, n, report.algebra
    );
    let _ = writeln!(
        pretty,
        "  [{}] action laws: {} points, {} pairs{}{}",
        mark(action.holds()),
        action.points,
        action.pairs_checked,
        if action.exhaustive { " (all)" } else { " (sampled)" },
        if action.universal { ", generic pair checked" } else { "" }
    );
    if let Some(f) = &action.failure {
        let _ = writeln!(pretty, "      {f}");
    }
    let _ = writeln!(
        pretty,
        "  [{}] unit leading coefficient => trivial stabilizer: {} f tested ({}), {} counterexamples",
        mark(report.passed()),
        report.trials,
        report.mode,
        report.failure_count
    );
    for c in &report.failures {
        let _ = writeln!(pretty, "      f = {} fixed by {}", c.f, c.stabilizer.join(", "));
    }
    if let Some(k) = report.non_free_outside_claim {
        let _ = writeln!(pretty, "      non-free f with non-unit leading coefficient: {k}");
    }
    match &symbolic {
        Some(r) => {
            let _ = writeln!(
                pretty,
                "  [{}] universal identity: coefficient = (p-1)*c_top*b_i for each i; induction in {} steps (bound {})",
                mark(r.holds),
                r.induction.steps.len(),
                r.induction.iteration_bound
            );
        }
        None => pretty.push_str("  [skip] universal identity: (p, n) beyond the symbolic guard\n"),
    }
    let _ = writeln!(pretty, "  seed {}", a.seed);

    let body = json!({
        "p": a.p.get(),
        "n": n,
        "algebra": report.algebra,
        "seed": a.seed,
        "action": action,
        "free_locus": report,
        "symbolic": match &symbolic {
            Some(r) => serde_json::to_value(r).expect("serializes"),
            None => json!({"skipped": "beyond the symbolic guard"}),
        },
    });
    Ok(Outcome {
        passed,
        json: envelope("free-locus", passed, body),
        csv: None,
        pretty,
    })
}
