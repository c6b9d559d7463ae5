//! Exact verification of a finite flat Hopf algebra over `F_p[t]_(t)` that
//! degenerates `Z/p^2` to `α_p × α_p`, plus the group-action and
//! cohomology-dimension computations built on it.
//!
//! Everything is exact: scalars live in `F_p`, `F_p[t]_(t)` or `F_p(t)`, and
//! dimension counts are arbitrary-precision integers.

pub mod action;
pub mod algebra;
pub mod base_ring;
pub mod cohomology;
pub mod combinat;
pub mod hopf;
pub mod linalg;
pub mod scalar;

pub use algebra::{AlgebraElement, AlgebraError, AlgebraRef, MonomialAlgebra};
pub use base_ring::{BaseRingError, Fiber, FpElement, LocalRingElement, RationalFunction};
pub use hopf::{HopfError, HopfPresentation, HopfStructure};
pub use scalar::{Prime, Scalar};

/// `O(G)` over the local base ring.
pub type LocalHopf = HopfPresentation<LocalRingElement>;
/// A fiber over `F_p(t)`.
pub type GenericHopf = HopfPresentation<RationalFunction>;
/// A fiber over `F_p`.
pub type SpecialHopf = HopfPresentation<FpElement>;
