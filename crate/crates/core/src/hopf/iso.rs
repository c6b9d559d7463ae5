use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::HopfStructure;
use crate::algebra::LinearMap;
use crate::linalg;
use crate::scalar::{Scalar, SparseVec};

/// The identities an isomorphism `φ: H1 -> H2` must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoIdentity {
    Invertible,
    Unit,
    Multiplicative,
    Counit,
    Comultiplicative,
    Antipode,
}

impl IsoIdentity {
    pub const ALL: [IsoIdentity; 6] = [
        IsoIdentity::Invertible,
        IsoIdentity::Unit,
        IsoIdentity::Multiplicative,
        IsoIdentity::Counit,
        IsoIdentity::Comultiplicative,
        IsoIdentity::Antipode,
    ];
}

impl fmt::Display for IsoIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsoIdentity::Invertible => "invertible",
            IsoIdentity::Unit => "unit",
            IsoIdentity::Multiplicative => "multiplicative",
            IsoIdentity::Counit => "counit",
            IsoIdentity::Comultiplicative => "comultiplicative",
            IsoIdentity::Antipode => "antipode",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoCheck {
    pub identity: IsoIdentity,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub checks: Vec<IsoCheck>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&IsoCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Checks that `phi` (columns indexed by `h1`'s basis) is a Hopf algebra
/// isomorphism `h1 -> h2`. Every identity is checked and reported, even after
/// an earlier one fails.
pub fn exhibit_isomorphism<S: Scalar>(h1: &HopfStructure<S>, h2: &HopfStructure<S>, phi: &LinearMap<S>) -> IsoReport {
    let (r1, r2) = (h1.rank(), h2.rank());
    if phi.rows() != r2 || phi.cols() != r1 || r1 != r2 {
        let detail = format!(
            "map is {}x{} between ranks {r1} and {r2}",
            phi.rows(),
            phi.cols()
        );
        return IsoReport {
            checks: IsoIdentity::ALL
                .iter()
                .map(|&identity| IsoCheck {
                    identity,
                    passed: false,
                    witness: Some(detail.clone()),
                })
                .collect(),
        };
    }
    let r = r1;
    let p = h1.prime();
    let image = |v: &SparseVec<S>| phi.apply(v).expect("dimensions checked");
    let label = |i: usize| h1.basis()[i].clone();
    let phi2 = |v: &SparseVec<S>| {
        let mut out = SparseVec::new();
        for (ab, c) in v.iter() {
            out.add_scaled(c, &phi.column(ab / r).outer(phi.column(ab % r), r));
        }
        out
    };
    let check = |identity: IsoIdentity| -> Option<String> {
        match identity {
            IsoIdentity::Invertible => linalg::invert(phi).err().map(|e| e.to_string()),
            IsoIdentity::Unit => {
                let left = image(h1.unit());
                (left != *h2.unit()).then(|| format!("φ(1) = {} but 1 = {}", h2.format(&left), h2.format(h2.unit())))
            }
            IsoIdentity::Multiplicative => (0..r * r).into_par_iter().find_map_first(|ij| {
                let (i, j) = (ij / r, ij % r);
                let left = image(h1.multiplication().column(ij));
                let right = h2.multiply(phi.column(i), phi.column(j));
                (left != right).then(|| {
                    format!(
                        "at ({}, {}): φ(ab) = {} but φ(a)φ(b) = {}",
                        label(i),
                        label(j),
                        h2.format(&left),
                        h2.format(&right)
                    )
                })
            }),
            IsoIdentity::Counit => (0..r).find_map(|i| {
                let left = h2.counit_of(phi.column(i));
                let right = h1.counit_of(&SparseVec::unit(i, p));
                (left != right).then(|| format!("at {}: ε(φ(b)) = {left} but ε(b) = {right}", label(i)))
            }),
            IsoIdentity::Comultiplicative => (0..r).into_par_iter().find_map_first(|i| {
                let left = h2.comultiply(phi.column(i));
                let right = phi2(h1.comultiplication().column(i));
                (left != right).then(|| {
                    format!(
                        "at {}: Δ(φ(b)) = {} but (φ⊗φ)Δ(b) = {}",
                        label(i),
                        h2.format_tensor(&left, 2),
                        h2.format_tensor(&right, 2)
                    )
                })
            }),
            IsoIdentity::Antipode => (0..r).find_map(|i| {
                let left = h2.apply_antipode(phi.column(i));
                let right = image(h1.antipode().column(i));
                (left != right).then(|| {
                    format!(
                        "at {}: S(φ(b)) = {} but φ(S(b)) = {}",
                        label(i),
                        h2.format(&left),
                        h2.format(&right)
                    )
                })
            }),
        }
    };
    IsoReport {
        checks: IsoIdentity::ALL
            .iter()
            .map(|&identity| {
                let witness = check(identity);
                IsoCheck {
                    identity,
                    passed: witness.is_none(),
                    witness,
                }
            })
            .collect(),
    }
}
