//! Commutative Hopf algebras over the base rings.
//!
//! Two representations coexist. A [`HopfPresentation`] gives `Δ`, `ε`, `S`
//! on the generators of a [`MonomialAlgebra`](crate::algebra::MonomialAlgebra)
//! and extends them multiplicatively, checking the rewrite rules. A
//! [`HopfStructure`] is just a basis with structure tensors; presentations
//! lower to it, Cartier duals are born in it, and all verifiers consume it.

mod catalog;
mod deformation;
mod dual;
mod fibers;
mod iso;
mod presentation;
mod quotient;
mod structure;
mod verify;

#[cfg(test)]
mod tests;

pub use catalog::{alpha_p, catalog_build, constant_cyclic, mu, CatalogEntry, CatalogName};
pub use deformation::{build_deformation_hopf, build_deformation_hopf_with, deformation_algebra, Mutation};
pub use dual::cartier_dual;
pub use fibers::{
    alpha_self_duality, alpha_square, double_dual, generic_dual_to_constant_cyclic, generic_grouplike,
    grouplike_power_matrix, mu_dual_to_constant_cyclic, mu_to_generic_fiber, special_dual_to_alpha_square,
    special_fiber_to_alpha_square, Recognition,
};
pub use iso::{exhibit_isomorphism, IsoCheck, IsoIdentity, IsoReport};
pub use presentation::{GeneratorSummary, HopfPresentation, ImageSummary, PresentationSummary};
pub use quotient::{hopf_quotient, HopfQuotient};
pub use structure::{GrouplikeOrder, HopfStructure};
pub use verify::{check_axiom, verify_axioms, Axiom, AxiomCheck, AxiomReport};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::base_ring::BaseRingError;
use crate::linalg::LinalgError;

/// The structure maps given on generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureMap {
    Comultiplication,
    Counit,
    Antipode,
}

impl fmt::Display for StructureMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureMap::Comultiplication => "comultiplication",
            StructureMap::Counit => "counit",
            StructureMap::Antipode => "antipode",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("{map} is not an algebra map: {source}")]
    Relation { map: StructureMap, source: AlgebraError },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    BaseRing(#[from] BaseRingError),
    #[error("not commutative: {0}")]
    NotCommutative(String),
    #[error("not cocommutative: {0}")]
    NotCocommutative(String),
    #[error("not a Hopf ideal ({axiom}): {detail}")]
    NotAHopfIdeal { axiom: &'static str, detail: String },
    #[error("quotient is not a free module: {0}")]
    NotFreeQuotient(String),
    #[error("quotient has no monomial presentation on the surviving generators: {0}")]
    QuotientNotMonomial(String),
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    #[error("{name} fails the Hopf axioms: {detail}")]
    AxiomsFailed { name: String, detail: String },
    #[error("malformed structure: {0}")]
    Shape(String),
}
