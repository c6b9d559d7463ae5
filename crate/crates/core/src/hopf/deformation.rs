use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::{HopfError, HopfPresentation};
use crate::algebra::{AlgebraElement, AlgebraRef, Generator, MonomialAlgebra};
use crate::base_ring::LocalRingElement;
use crate::scalar::{Prime, Scalar};

type R = LocalRingElement;

/// Deliberate corruptions of the deformation, used as negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// `Δ(y) = 1⊗y + y⊗1`, losing `t y⊗y`.
    DropTwistTerm,
    /// `Δ(x) = 1⊗x + x⊗1`, losing `t^{p+1} x⊗x`.
    DropForcedTerm,
    /// `S(y)` shifted by `t x`; still an algebra map, no longer an antipode.
    CorruptAntipode,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::DropTwistTerm,
        Mutation::DropForcedTerm,
        Mutation::CorruptAntipode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::DropTwistTerm => "drop-t-term",
            Mutation::DropForcedTerm => "drop-forced-term",
            Mutation::CorruptAntipode => "corrupt-antipode",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Mutation::ALL.iter().map(|m| m.name()).collect();
                format!("unknown mutation '{s}' (expected one of {})", names.join(", "))
            })
    }
}

/// `R[x, y]/(x^p, y^p - t x)` over `R = F_p[t]_(t)`.
pub fn deformation_algebra(p: Prime) -> Result<AlgebraRef<R>, HopfError> {
    let n = p.get();
    Ok(Arc::new(MonomialAlgebra::new(
        p,
        vec![
            Generator::nilpotent("x", n),
            Generator::new("y", n, vec![(vec![1, 0], R::t(p))]),
        ],
    )?))
}

/// The deformation with `Δ(y) = 1⊗y + y⊗1 + t y⊗y`,
/// `Δ(x) = 1⊗x + x⊗1 + t^{p+1} x⊗x`, `ε = 0` and
/// `S(y) = -y/(1+ty)`, `S(x) = -x/(1+t^{p+1}x)`.
pub fn build_deformation_hopf(p: Prime) -> Result<HopfPresentation<R>, HopfError> {
    build_deformation_hopf_with(p, None)
}

pub fn build_deformation_hopf_with(p: Prime, mutation: Option<Mutation>) -> Result<HopfPresentation<R>, HopfError> {
    let a = deformation_algebra(p)?;
    let aa = Arc::new(MonomialAlgebra::tensor(&a, &a)?);
    let g = |i| AlgebraElement::generator(&aa, i);
    let (x1, y1, x2, y2) = (g(0), g(1), g(2), g(3));
    let t = R::t(p);
    let forced = R::t_pow(p, p.get() as usize + 1);

    let mut delta_y = &y2 + &y1;
    if mutation != Some(Mutation::DropTwistTerm) {
        delta_y = &delta_y + &(&y1 * &y2).scale(&t);
    }
    let mut delta_x = &x2 + &x1;
    if mutation != Some(Mutation::DropForcedTerm) {
        delta_x = &delta_x + &(&x1 * &x2).scale(&forced);
    }

    let one = AlgebraElement::one(&a);
    let x = AlgebraElement::generator(&a, 0);
    let y = AlgebraElement::generator(&a, 1);
    let s_x = -&(&x * &(&one + &x.scale(&forced)).try_inverse()?);
    let mut s_y = -&(&y * &(&one + &y.scale(&t)).try_inverse()?);
    if mutation == Some(Mutation::CorruptAntipode) {
        s_y = &s_y + &x.scale(&t);
    }

    HopfPresentation::new(
        a,
        vec![delta_x, delta_y],
        vec![R::zero(p), R::zero(p)],
        vec![s_x, s_y],
    )
}
