use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::{verify_axioms, HopfError, HopfPresentation, HopfStructure};
use crate::algebra::{AlgebraElement, Generator, LinearMap, MonomialAlgebra};
use crate::scalar::{Prime, Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogName {
    /// `k[x]/(x^p)`, `x` primitive.
    AlphaP,
    /// `k[z]/(z^q - 1)`, `z` grouplike.
    Mu,
    /// Functions on `Z/q`.
    ConstantCyclic,
}

impl CatalogName {
    pub fn name(self) -> &'static str {
        match self {
            CatalogName::AlphaP => "alpha_p",
            CatalogName::Mu => "mu",
            CatalogName::ConstantCyclic => "constant_cyclic",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "alpha_p" | "alpha" => Ok(CatalogName::AlphaP),
            "mu" | "mu_q" => Ok(CatalogName::Mu),
            "constant_cyclic" | "constant_cyclic_q" => Ok(CatalogName::ConstantCyclic),
            other => Err(format!(
                "unknown group scheme '{other}' (expected alpha_p, mu or constant_cyclic)"
            )),
        }
    }
}

/// A verified standard Hopf algebra.
#[derive(Clone, Debug)]
pub struct CatalogEntry<S: Scalar> {
    pub name: CatalogName,
    /// `q = p^k`; `p` for `alpha_p`.
    pub order: u32,
    /// Absent for `constant_cyclic`, which has no generator presentation.
    pub presentation: Option<HopfPresentation<S>>,
    pub structure: HopfStructure<S>,
}

/// Builds `name` with `q = p^k`, `k ∈ {1, 2}`, and runs the axiom checker.
pub fn catalog_build<S: Scalar>(name: CatalogName, p: Prime, k: u32) -> Result<CatalogEntry<S>, HopfError> {
    if !(1..=2).contains(&k) || (name == CatalogName::AlphaP && k != 1) {
        return Err(HopfError::UnsupportedParameters(format!(
            "{name} with k = {k} (k must be 1{})",
            if name == CatalogName::AlphaP { "" } else { " or 2" }
        )));
    }
    let q = p.get().pow(k);
    let (presentation, structure) = match name {
        CatalogName::AlphaP => {
            let h = alpha_p(p)?;
            let s = h.structure().clone();
            (Some(h), s)
        }
        CatalogName::Mu => {
            let h = mu(p, q)?;
            let s = h.structure().clone();
            (Some(h), s)
        }
        CatalogName::ConstantCyclic => (None, constant_cyclic(p, q)),
    };
    let report = verify_axioms(&structure);
    if let Some(bad) = report.first_failure() {
        return Err(HopfError::AxiomsFailed {
            name: format!("{name} (q = {q})"),
            detail: format!("{}: {}", bad.axiom, bad.witness.clone().unwrap_or_default()),
        });
    }
    Ok(CatalogEntry {
        name,
        order: q,
        presentation,
        structure,
    })
}

/// `k[x]/(x^p)` with `Δ(x) = 1⊗x + x⊗1`, `ε(x) = 0`, `S(x) = -x`.
pub fn alpha_p<S: Scalar>(p: Prime) -> Result<HopfPresentation<S>, HopfError> {
    alpha_named(p, "x")
}

pub(crate) fn alpha_named<S: Scalar>(p: Prime, var: &str) -> Result<HopfPresentation<S>, HopfError> {
    let a = Arc::new(MonomialAlgebra::new(p, vec![Generator::nilpotent(var, p.get())])?);
    let aa = Arc::new(MonomialAlgebra::tensor(&a, &a)?);
    let delta = &AlgebraElement::generator(&aa, 0) + &AlgebraElement::generator(&aa, 1);
    let x = AlgebraElement::generator(&a, 0);
    HopfPresentation::new(a, vec![delta], vec![S::zero(p)], vec![-&x])
}

/// `k[z]/(z^q - 1)` with `z` grouplike and `S(z) = z^{q-1}`.
pub fn mu<S: Scalar>(p: Prime, q: u32) -> Result<HopfPresentation<S>, HopfError> {
    let a = Arc::new(MonomialAlgebra::new(
        p,
        vec![Generator::new("z", q, vec![(vec![0], S::one(p))])],
    )?);
    let aa = Arc::new(MonomialAlgebra::tensor(&a, &a)?);
    let delta = &AlgebraElement::generator(&aa, 0) * &AlgebraElement::generator(&aa, 1);
    let z = AlgebraElement::generator(&a, 0);
    HopfPresentation::new(a, vec![delta], vec![S::one(p)], vec![z.pow(q as u64 - 1)])
}

/// Functions on `Z/q` on the idempotent basis `δ0, ..., δ{q-1}`:
/// pointwise product, `Δ(δj) = Σ_{a+b=j} δa⊗δb`, `ε(δj) = [j = 0]`,
/// `S(δj) = δ{-j}`.
pub fn constant_cyclic<S: Scalar>(p: Prime, q: u32) -> HopfStructure<S> {
    let q = q as usize;
    let mult = (0..q * q)
        .map(|ij| {
            if ij / q == ij % q {
                SparseVec::unit(ij / q, p)
            } else {
                SparseVec::new()
            }
        })
        .collect();
    let comult = (0..q)
        .map(|j| SparseVec::from_entries((0..q).map(|a| (a * q + (j + q - a) % q, S::one(p)))))
        .collect();
    let antipode = (0..q).map(|j| SparseVec::unit((q - j) % q, p)).collect();
    HopfStructure::new(
        p,
        (0..q).map(|j| format!("δ{j}")).collect(),
        LinearMap::from_columns(p, q, mult),
        SparseVec::from_entries((0..q).map(|j| (j, S::one(p)))),
        LinearMap::from_columns(p, q * q, comult),
        SparseVec::unit(0, p),
        LinearMap::from_columns(p, q, antipode),
    )
    .expect("shapes are consistent by construction")
}
