use crate::algebra::LinearMap;
use crate::linalg;
use crate::scalar::{Prime, Scalar, SparseVec};

use super::HopfError;

/// A finite free Hopf algebra given by structure tensors on a plain basis.
///
/// Tensor squares use source-major indexing: `b_i ⊗ b_j` is `i * rank + j`.
/// Generator-presented algebras and Cartier duals both reduce to this form,
/// and every verifier works on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfStructure<S> {
    p: Prime,
    basis: Vec<String>,
    /// `H ⊗ H -> H`.
    mult: LinearMap<S>,
    /// `η(1)`.
    unit: SparseVec<S>,
    /// `H -> H ⊗ H`.
    comult: LinearMap<S>,
    /// `ε` on the basis.
    counit: SparseVec<S>,
    antipode: LinearMap<S>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrouplikeOrder {
    Order(u64),
    NotGrouplike,
    /// Grouplike, but no power up to the rank returned to 1.
    Unbounded,
}

impl<S: Scalar> HopfStructure<S> {
    pub fn new(
        p: Prime,
        basis: Vec<String>,
        mult: LinearMap<S>,
        unit: SparseVec<S>,
        comult: LinearMap<S>,
        counit: SparseVec<S>,
        antipode: LinearMap<S>,
    ) -> Result<Self, HopfError> {
        let r = basis.len();
        let shape = |what: &str, got: (usize, usize), want: (usize, usize)| {
            if got == want {
                Ok(())
            } else {
                Err(HopfError::Shape(format!(
                    "{what} is {}x{}, expected {}x{}",
                    got.0, got.1, want.0, want.1
                )))
            }
        };
        shape("multiplication", (mult.rows(), mult.cols()), (r, r * r))?;
        shape("comultiplication", (comult.rows(), comult.cols()), (r * r, r))?;
        shape("antipode", (antipode.rows(), antipode.cols()), (r, r))?;
        if unit.max_index().map_or(false, |i| i >= r) || counit.max_index().map_or(false, |i| i >= r) {
            return Err(HopfError::Shape("unit or counit outside the basis".into()));
        }
        Ok(HopfStructure {
            p,
            basis,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn multiplication(&self) -> &LinearMap<S> {
        &self.mult
    }

    pub fn unit(&self) -> &SparseVec<S> {
        &self.unit
    }

    pub fn comultiplication(&self) -> &LinearMap<S> {
        &self.comult
    }

    pub fn counit(&self) -> &SparseVec<S> {
        &self.counit
    }

    pub fn counit_map(&self) -> LinearMap<S> {
        LinearMap::row(self.p, &self.counit, self.rank())
    }

    pub fn unit_map(&self) -> LinearMap<S> {
        LinearMap::column_map(self.p, self.unit.clone(), self.rank())
    }

    pub fn antipode(&self) -> &LinearMap<S> {
        &self.antipode
    }

    pub fn with_basis_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.basis.len());
        self.basis = labels;
        self
    }

    pub fn one(&self) -> SparseVec<S> {
        self.unit.clone()
    }

    pub fn multiply(&self, a: &SparseVec<S>, b: &SparseVec<S>) -> SparseVec<S> {
        let r = self.rank();
        let mut out = SparseVec::new();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                out.add_scaled(&(ca.clone() * cb), self.mult.column(i * r + j));
            }
        }
        out
    }

    pub fn power(&self, a: &SparseVec<S>, k: u64) -> SparseVec<S> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.multiply(&acc, a);
        }
        acc
    }

    pub fn comultiply(&self, a: &SparseVec<S>) -> SparseVec<S> {
        self.comult.apply(a).expect("vector lies in the basis")
    }

    pub fn counit_of(&self, a: &SparseVec<S>) -> S {
        let mut acc = S::zero(self.p);
        for (i, c) in a.iter() {
            if let Some(e) = self.counit.get(i) {
                acc = acc + &(c.clone() * e);
            }
        }
        acc
    }

    pub fn apply_antipode(&self, a: &SparseVec<S>) -> SparseVec<S> {
        self.antipode.apply(a).expect("vector lies in the basis")
    }

    /// Product in `H ⊗ H`.
    pub fn tensor_multiply(&self, u: &SparseVec<S>, v: &SparseVec<S>) -> SparseVec<S> {
        let r = self.rank();
        let mut out = SparseVec::new();
        for (ij, cu) in u.iter() {
            for (kl, cv) in v.iter() {
                let left = self.mult.column((ij / r) * r + kl / r);
                let right = self.mult.column((ij % r) * r + kl % r);
                out.add_scaled(&(cu.clone() * cv), &left.outer(right, r));
            }
        }
        out
    }

    /// `Δ(a) = a ⊗ a` and `ε(a) = 1`.
    pub fn is_grouplike(&self, a: &SparseVec<S>) -> bool {
        self.counit_of(a).is_one() && self.comultiply(a) == a.outer(a, self.rank())
    }

    /// Least `m >= 1` with `a^m = 1`, searching up to the rank.
    pub fn grouplike_order(&self, a: &SparseVec<S>) -> GrouplikeOrder {
        if !self.is_grouplike(a) {
            return GrouplikeOrder::NotGrouplike;
        }
        let one = self.one();
        let mut acc = a.clone();
        for m in 1..=self.rank() as u64 {
            if acc == one {
                return GrouplikeOrder::Order(m);
            }
            acc = self.multiply(&acc, a);
        }
        GrouplikeOrder::Unbounded
    }

    /// `a -> Δ(a) - 1 ⊗ a - a ⊗ 1` as a matrix.
    pub fn primitivity_defect(&self) -> LinearMap<S> {
        let r = self.rank();
        let id = LinearMap::identity(self.p, r);
        let left = LinearMap::tensor(&self.unit_map(), &id);
        let right = LinearMap::tensor(&id, &self.unit_map());
        self.comult.sub(&left).sub(&right)
    }

    /// A basis of the primitive elements; only defined over a field.
    pub fn primitive_space(&self) -> Result<Vec<SparseVec<S>>, HopfError> {
        Ok(linalg::kernel(&self.primitivity_defect())?)
    }

    pub fn is_primitive(&self, a: &SparseVec<S>) -> bool {
        self.primitivity_defect().apply(a).expect("vector lies in the basis").is_zero()
    }

    /// `H1 ⊗ H2` with the componentwise structure.
    pub fn tensor(h1: &Self, h2: &Self) -> Self {
        let (r1, r2) = (h1.rank(), h2.rank());
        let r = r1 * r2;
        let p = h1.p;
        let basis: Vec<String> = h1
            .basis
            .iter()
            .flat_map(|a| h2.basis.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        let mut mult_cols = Vec::with_capacity(r * r);
        for ij in 0..r {
            for kl in 0..r {
                let left = h1.mult.column((ij / r2) * r1 + kl / r2);
                let right = h2.mult.column((ij % r2) * r2 + kl % r2);
                mult_cols.push(left.outer(right, r2));
            }
        }
        let mut comult_cols = Vec::with_capacity(r);
        for i in 0..r1 {
            for j in 0..r2 {
                let mut col = SparseVec::new();
                for (ab, c1) in h1.comult.column(i).iter() {
                    let (a, b) = (ab / r1, ab % r1);
                    for (cd, c2) in h2.comult.column(j).iter() {
                        let (c, d) = (cd / r2, cd % r2);
                        col.add_at((a * r2 + c) * r + (b * r2 + d), c1.clone() * c2);
                    }
                }
                comult_cols.push(col);
            }
        }
        HopfStructure {
            p,
            basis,
            mult: LinearMap::from_columns(p, r, mult_cols),
            unit: h1.unit.outer(&h2.unit, r2),
            comult: LinearMap::from_columns(p, r * r, comult_cols),
            counit: h1.counit.outer(&h2.counit, r2),
            antipode: LinearMap::tensor(&h1.antipode, &h2.antipode),
        }
    }

    pub fn map_scalars<T: Scalar>(&self, p: Prime, f: impl Fn(&S) -> T) -> HopfStructure<T> {
        HopfStructure {
            p,
            basis: self.basis.clone(),
            mult: self.mult.map_scalars(p, &f),
            unit: self.unit.map(&f),
            comult: self.comult.map_scalars(p, &f),
            counit: self.counit.map(&f),
            antipode: self.antipode.map_scalars(p, &f),
        }
    }

    /// Renders a vector of `H^{⊗k}` using the basis labels.
    pub fn format_tensor(&self, v: &SparseVec<S>, arity: u32) -> String {
        let r = self.rank();
        crate::algebra::format_terms(v.iter().map(|(idx, c)| {
            let mut parts = Vec::with_capacity(arity as usize);
            let mut rest = idx;
            for _ in 0..arity {
                parts.push(self.basis[rest % r].clone());
                rest /= r;
            }
            parts.reverse();
            (parts.join("⊗"), c)
        }))
    }

    pub fn format(&self, v: &SparseVec<S>) -> String {
        self.format_tensor(v, 1)
    }
}
