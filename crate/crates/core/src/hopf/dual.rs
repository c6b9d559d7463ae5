use super::{check_axiom, Axiom, HopfError, HopfStructure};
use crate::scalar::Scalar;

/// The linear dual on the dual basis: every structure tensor transposed,
/// with the roles of `(m, η)` and `(Δ, ε)` exchanged.
pub fn cartier_dual<S: Scalar>(h: &HopfStructure<S>) -> Result<HopfStructure<S>, HopfError> {
    if let Some(w) = check_axiom(h, Axiom::Commutativity) {
        return Err(HopfError::NotCommutative(w));
    }
    if let Some(w) = check_axiom(h, Axiom::Cocommutativity) {
        return Err(HopfError::NotCocommutative(w));
    }
    let labels = h.basis().iter().map(|b| dual_label(b)).collect();
    HopfStructure::new(
        h.prime(),
        labels,
        h.comultiplication().transpose(),
        h.counit().clone(),
        h.multiplication().transpose(),
        h.unit().clone(),
        h.antipode().transpose(),
    )
}

fn dual_label(b: &str) -> String {
    if b.chars().all(|c| c.is_alphanumeric() || c == '_') {
        format!("{b}^*")
    } else {
        format!("({b})^*")
    }
}
