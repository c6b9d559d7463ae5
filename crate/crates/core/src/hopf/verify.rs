use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::HopfStructure;
use crate::scalar::{Scalar, SparseVec};

/// The identities checked by [`verify_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `m ∘ (m ⊗ id) = m ∘ (id ⊗ m)`.
    Associativity,
    /// `m ∘ τ = m`.
    Commutativity,
    /// `1 · a = a = a · 1`.
    Unit,
    /// `(Δ ⊗ id) ∘ Δ = (id ⊗ Δ) ∘ Δ`.
    Coassociativity,
    /// `(ε ⊗ id) ∘ Δ = id = (id ⊗ ε) ∘ Δ`.
    Counit,
    /// `m ∘ (S ⊗ id) ∘ Δ = η ∘ ε = m ∘ (id ⊗ S) ∘ Δ`.
    Antipode,
    /// `Δ ∘ m = (m ⊗ m) ∘ (id ⊗ τ ⊗ id) ∘ (Δ ⊗ Δ)` and `Δ(1) = 1 ⊗ 1`.
    Bialgebra,
    /// `ε(ab) = ε(a) ε(b)` and `ε(1) = 1`.
    CounitMultiplicative,
    /// `τ ∘ Δ = Δ`; reported, not required.
    Cocommutativity,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::Associativity,
        Axiom::Commutativity,
        Axiom::Unit,
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::Antipode,
        Axiom::Bialgebra,
        Axiom::CounitMultiplicative,
        Axiom::Cocommutativity,
    ];

    pub fn required(self) -> bool {
        self != Axiom::Cocommutativity
    }

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Commutativity => "commutativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Antipode => "antipode",
            Axiom::Bialgebra => "bialgebra",
            Axiom::CounitMultiplicative => "counit_multiplicative",
            Axiom::Cocommutativity => "cocommutativity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    pub required: bool,
    /// The first offending basis element, with both sides of the identity.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_required_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.required)
    }

    pub fn get(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("every axiom is checked")
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.required && !c.passed)
    }
}

pub fn verify_axioms<S: Scalar>(h: &HopfStructure<S>) -> AxiomReport {
    AxiomReport {
        checks: Axiom::ALL
            .iter()
            .map(|&axiom| {
                let witness = check_axiom(h, axiom);
                AxiomCheck {
                    axiom,
                    passed: witness.is_none(),
                    required: axiom.required(),
                    witness,
                }
            })
            .collect(),
    }
}

/// Checks one identity; `None` when it holds, otherwise a description of the
/// lowest-indexed basis element (or pair, or triple) where it fails.
pub fn check_axiom<S: Scalar>(h: &HopfStructure<S>, axiom: Axiom) -> Option<String> {
    let r = h.rank();
    let p = h.prime();
    let label = |i: usize| h.basis()[i].clone();
    let e = |i: usize| SparseVec::unit(i, p);
    let mismatch = |at: String, left: String, right: String| Some(format!("at {at}: {left} != {right}"));
    match axiom {
        Axiom::Associativity => first(r * r, |ij| {
            let (i, j) = (ij / r, ij % r);
            let ab = h.multiply(&e(i), &e(j));
            (0..r).find_map(|k| {
                let left = h.multiply(&ab, &e(k));
                let right = h.multiply(&e(i), &h.multiply(&e(j), &e(k)));
                (left != right).then(|| {
                    format!(
                        "at ({}, {}, {}): {} != {}",
                        label(i),
                        label(j),
                        label(k),
                        h.format(&left),
                        h.format(&right)
                    )
                })
            })
        }),
        Axiom::Commutativity => first(r * r, |ij| {
            let (i, j) = (ij / r, ij % r);
            let left = h.multiplication().column(i * r + j);
            let right = h.multiplication().column(j * r + i);
            (left != right).then(|| {
                format!(
                    "at ({}, {}): {} != {}",
                    label(i),
                    label(j),
                    h.format(left),
                    h.format(right)
                )
            })
        }),
        Axiom::Unit => first(r, |i| {
            let left = h.multiply(h.unit(), &e(i));
            let right = h.multiply(&e(i), h.unit());
            if left != e(i) {
                mismatch(label(i), format!("1 * b = {}", h.format(&left)), label(i))
            } else if right != e(i) {
                mismatch(label(i), format!("b * 1 = {}", h.format(&right)), label(i))
            } else {
                None
            }
        }),
        Axiom::Coassociativity => first(r, |i| {
            let d = h.comultiply(&e(i));
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (ab, c) in d.iter() {
                let (a, b) = (ab / r, ab % r);
                for (u, cu) in h.comultiplication().column(a).iter() {
                    left.add_at(u * r + b, c.clone() * cu);
                }
                for (u, cu) in h.comultiplication().column(b).iter() {
                    right.add_at(a * r * r + u, c.clone() * cu);
                }
            }
            (left != right).then(|| {
                format!(
                    "at {}: (Δ⊗id)Δ = {} but (id⊗Δ)Δ = {}",
                    label(i),
                    h.format_tensor(&left, 3),
                    h.format_tensor(&right, 3)
                )
            })
        }),
        Axiom::Counit => first(r, |i| {
            let d = h.comultiply(&e(i));
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (ab, c) in d.iter() {
                let (a, b) = (ab / r, ab % r);
                if let Some(ea) = h.counit().get(a) {
                    left.add_at(b, c.clone() * ea);
                }
                if let Some(eb) = h.counit().get(b) {
                    right.add_at(a, c.clone() * eb);
                }
            }
            if left != e(i) {
                mismatch(label(i), format!("(ε⊗id)Δ = {}", h.format(&left)), label(i))
            } else if right != e(i) {
                mismatch(label(i), format!("(id⊗ε)Δ = {}", h.format(&right)), label(i))
            } else {
                None
            }
        }),
        Axiom::Antipode => first(r, |i| {
            let d = h.comultiply(&e(i));
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (ab, c) in d.iter() {
                let (a, b) = (ab / r, ab % r);
                left.add_scaled(c, &h.multiply(h.antipode().column(a), &e(b)));
                right.add_scaled(c, &h.multiply(&e(a), h.antipode().column(b)));
            }
            let expected = h.unit().scale(&h.counit_of(&e(i)));
            if left != expected {
                mismatch(
                    label(i),
                    format!("m(S⊗id)Δ = {}", h.format(&left)),
                    format!("ηε = {}", h.format(&expected)),
                )
            } else if right != expected {
                mismatch(
                    label(i),
                    format!("m(id⊗S)Δ = {}", h.format(&right)),
                    format!("ηε = {}", h.format(&expected)),
                )
            } else {
                None
            }
        }),
        Axiom::Bialgebra => {
            let d1 = h.comultiply(h.unit());
            let one_one = h.unit().outer(h.unit(), r);
            if d1 != one_one {
                return mismatch(
                    "1".into(),
                    format!("Δ(1) = {}", h.format_tensor(&d1, 2)),
                    "1⊗1".into(),
                );
            }
            let deltas: Vec<SparseVec<S>> = (0..r).map(|i| h.comultiply(&e(i))).collect();
            first(r * r, |ij| {
                let (i, j) = (ij / r, ij % r);
                let left = h.comultiply(h.multiplication().column(i * r + j));
                let right = h.tensor_multiply(&deltas[i], &deltas[j]);
                (left != right).then(|| {
                    format!(
                        "at ({}, {}): Δ(ab) = {} but Δ(a)Δ(b) = {}",
                        label(i),
                        label(j),
                        h.format_tensor(&left, 2),
                        h.format_tensor(&right, 2)
                    )
                })
            })
        }
        Axiom::CounitMultiplicative => {
            let e1 = h.counit_of(h.unit());
            if !e1.is_one() {
                return mismatch("1".into(), format!("ε(1) = {e1}"), "1".into());
            }
            first(r * r, |ij| {
                let (i, j) = (ij / r, ij % r);
                let left = h.counit_of(h.multiplication().column(i * r + j));
                let right = h.counit_of(&e(i)) * h.counit_of(&e(j));
                (left != right).then(|| {
                    format!(
                        "at ({}, {}): ε(ab) = {left} but ε(a)ε(b) = {right}",
                        label(i),
                        label(j)
                    )
                })
            })
        }
        Axiom::Cocommutativity => first(r, |i| {
            let d = h.comultiplication().column(i);
            let swapped = d.reindex(|ab| (ab % r) * r + ab / r);
            (*d != swapped).then(|| {
                format!(
                    "at {}: Δ = {} but τΔ = {}",
                    label(i),
                    h.format_tensor(d, 2),
                    h.format_tensor(&swapped, 2)
                )
            })
        }),
    }
}

/// The witness of the lowest failing index, searched in parallel.
fn first(n: usize, check: impl Fn(usize) -> Option<String> + Sync + Send) -> Option<String> {
    (0..n).into_par_iter().find_map_first(check)
}
