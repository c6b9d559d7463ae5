//! The `verify` pipeline: build the deformation, check every axiom over the
//! base and on both fibers, and exhibit the fiber and dual identifications.

use std::time::{Duration, Instant};

use hopfjump::hopf::{
    build_deformation_hopf_with, generic_dual_to_constant_cyclic, generic_grouplike, hopf_quotient,
    mu_to_generic_fiber, special_dual_to_alpha_square, special_fiber_to_alpha_square, verify_axioms, AxiomReport,
    GrouplikeOrder, HopfError, IsoReport, Mutation, Recognition,
};
use hopfjump::{LocalHopf, Prime, Scalar};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Step {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Wall time; kept out of JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub p: u32,
    pub mutation: Option<&'static str>,
    pub steps: Vec<Step>,
    pub first_failure: Option<&'static str>,
}

impl PipelineReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn step(&self, name: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.name == name)
    }
}

pub const STEP_NAMES: [&str; 10] = [
    "build",
    "axioms_over_base",
    "axioms_special_fiber",
    "axioms_generic_fiber",
    "special_fiber_is_alpha_square",
    "grouplike_order",
    "generic_fiber_is_mu",
    "generic_dual_is_constant_cyclic",
    "special_dual_is_alpha_square",
    "reid_quotient",
];

struct Recorder {
    steps: Vec<Step>,
}

impl Recorder {
    fn run(&mut self, name: &'static str, f: impl FnOnce() -> Result<String, String>) {
        let start = Instant::now();
        let result = f();
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.steps.push(Step {
            name,
            passed,
            detail,
            elapsed: start.elapsed(),
        });
    }
}

fn axioms(report: &AxiomReport) -> Result<String, String> {
    match report.first_failure() {
        None => {
            let names: Vec<&str> = report
                .checks
                .iter()
                .filter(|c| c.passed)
                .map(|c| c.axiom.name())
                .collect();
            Ok(format!("holds: {}", names.join(", ")))
        }
        Some(c) => Err(format!(
            "{} fails {}",
            c.axiom.name(),
            c.witness.as_deref().unwrap_or("")
        )),
    }
}

fn iso(report: &IsoReport) -> Result<String, String> {
    match report.first_failure() {
        None => Ok("isomorphism verified".into()),
        Some(c) => Err(format!(
            "not a Hopf isomorphism: {} fails {}",
            c.identity,
            c.witness.as_deref().unwrap_or("")
        )),
    }
}

fn recognition<S: Scalar>(r: Result<Recognition<S>, HopfError>) -> Result<String, String> {
    iso(&r.map_err(|e| e.to_string())?.verify())
}

/// Runs every step; steps after a failed build are skipped.
pub fn run_pipeline(p: Prime, mutation: Option<Mutation>) -> PipelineReport {
    let mut rec = Recorder { steps: Vec::new() };
    let mut built: Option<LocalHopf> = None;
    rec.run("build", || {
        let h = build_deformation_hopf_with(p, mutation).map_err(|e| e.to_string())?;
        let summary = h.summary();
        let detail = summary
            .comultiplication
            .iter()
            .map(|g| format!("Δ({}) = {}", g.generator, g.image))
            .collect::<Vec<_>>()
            .join("; ");
        built = Some(h);
        Ok(format!("rank {}; {detail}", p.get() * p.get()))
    });

    if let Some(h) = built {
        let special = h.specialize_special();
        let generic = h.specialize_generic();
        rec.run("axioms_over_base", || axioms(&verify_axioms(h.structure())));
        rec.run("axioms_special_fiber", || {
            axioms(&verify_axioms(special.as_ref().map_err(|e| e.to_string())?.structure()))
        });
        rec.run("axioms_generic_fiber", || {
            axioms(&verify_axioms(generic.as_ref().map_err(|e| e.to_string())?.structure()))
        });
        rec.run("special_fiber_is_alpha_square", || {
            recognition(special_fiber_to_alpha_square(special.as_ref().map_err(|e| e.to_string())?))
        });
        rec.run("grouplike_order", || {
            let g = generic.as_ref().map_err(|e| e.to_string())?;
            let z = generic_grouplike(g).map_err(|e| e.to_string())?;
            let q = (p.get() * p.get()) as u64;
            match g.grouplike_order(&z) {
                GrouplikeOrder::Order(m) if m == q => Ok(format!("1 + t*y is grouplike of order {m}")),
                GrouplikeOrder::Order(m) => Err(format!("1 + t*y has order {m}, expected {q}")),
                GrouplikeOrder::NotGrouplike => Err("1 + t*y is not grouplike".into()),
                GrouplikeOrder::Unbounded => Err("1 + t*y has no finite order up to the rank".into()),
            }
        });
        rec.run("generic_fiber_is_mu", || {
            recognition(mu_to_generic_fiber(generic.as_ref().map_err(|e| e.to_string())?))
        });
        rec.run("generic_dual_is_constant_cyclic", || {
            recognition(generic_dual_to_constant_cyclic(generic.as_ref().map_err(|e| e.to_string())?))
        });
        rec.run("special_dual_is_alpha_square", || {
            recognition(special_dual_to_alpha_square(special.as_ref().map_err(|e| e.to_string())?))
        });
        rec.run("reid_quotient", || {
            let x = h.generator("x").ok_or("no generator x")?;
            let q = hopf_quotient(&h, &[x]).map_err(|e| e.to_string())?;
            axioms(&verify_axioms(q.presentation.structure()))?;
            let y = q.presentation.generator("y").ok_or("quotient lost y")?;
            let dy = q.presentation.comultiply(&y).to_string();
            let expected = "1⊗y + y⊗1 + t*y⊗y";
            if q.presentation.rank() != p.get() as usize || dy != expected {
                return Err(format!("A/(x) has rank {} and Δ(y) = {dy}", q.presentation.rank()));
            }
            Ok(format!("(x) is a Hopf ideal; A/(x) has rank {} and Δ(y) = {dy}", p.get()))
        });
    }

    let first_failure = rec.steps.iter().find(|s| !s.passed).map(|s| s.name);
    PipelineReport {
        p: p.get(),
        mutation: mutation.map(|m| m.name()),
        steps: rec.steps,
        first_failure,
    }
}
