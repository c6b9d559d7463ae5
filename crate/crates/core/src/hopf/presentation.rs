use std::sync::Arc;

use serde::Serialize;

use super::{GrouplikeOrder, HopfError, HopfStructure, StructureMap};
use crate::algebra::{algebra_hom, AlgebraElement, AlgebraRef, MonomialAlgebra};
use crate::base_ring::{FpElement, LocalRingElement, RationalFunction};
use crate::scalar::{Prime, Scalar, SparseVec};

/// A Hopf algebra given by the images of its generators.
///
/// Construction extends each map multiplicatively and rejects images that
/// break a rewrite rule, so every value of this type has `Δ`, `ε`, `S`
/// that are algebra maps. The Hopf axioms themselves are checked separately
/// by [`verify_axioms`](super::verify_axioms).
#[derive(Clone, Debug)]
pub struct HopfPresentation<S: Scalar> {
    algebra: AlgebraRef<S>,
    square: AlgebraRef<S>,
    comultiplication: Vec<AlgebraElement<S>>,
    counit: Vec<S>,
    antipode: Vec<AlgebraElement<S>>,
    structure: HopfStructure<S>,
}

impl<S: Scalar> HopfPresentation<S> {
    /// `comultiplication` lives in `algebra ⊗ algebra`, `antipode` in `algebra`.
    pub fn new(
        algebra: AlgebraRef<S>,
        comultiplication: Vec<AlgebraElement<S>>,
        counit: Vec<S>,
        antipode: Vec<AlgebraElement<S>>,
    ) -> Result<Self, HopfError> {
        let p = algebra.prime();
        let square = match comultiplication.first() {
            Some(im) => im.parent().clone(),
            None => Arc::new(MonomialAlgebra::tensor(&algebra, &algebra)?),
        };
        if *square != MonomialAlgebra::tensor(&algebra, &algebra)? {
            return Err(HopfError::Shape("comultiplication images must lie in A ⊗ A".into()));
        }
        let relation = |map: StructureMap| move |source| HopfError::Relation { map, source };
        let comult = algebra_hom(&algebra, &square, &comultiplication)
            .map_err(relation(StructureMap::Comultiplication))?
            .matrix;
        let base = Arc::new(MonomialAlgebra::unit(p));
        let counit_images: Vec<AlgebraElement<S>> = counit
            .iter()
            .map(|c| AlgebraElement::from_scalar(&base, c.clone()))
            .collect();
        let counit_row = algebra_hom(&algebra, &base, &counit_images)
            .map_err(relation(StructureMap::Counit))?
            .matrix
            .row_vector();
        let antipode_matrix = algebra_hom(&algebra, &algebra, &antipode)
            .map_err(relation(StructureMap::Antipode))?
            .matrix;
        let structure = HopfStructure::new(
            p,
            algebra.basis_labels(),
            algebra.multiplication_map(),
            SparseVec::unit(0, p),
            comult,
            counit_row,
            antipode_matrix,
        )?;
        Ok(HopfPresentation {
            algebra,
            square,
            comultiplication,
            counit,
            antipode,
            structure,
        })
    }

    pub fn algebra(&self) -> &AlgebraRef<S> {
        &self.algebra
    }

    /// `A ⊗ A`, the parent of the comultiplication images.
    pub fn square(&self) -> &AlgebraRef<S> {
        &self.square
    }

    pub fn prime(&self) -> Prime {
        self.algebra.prime()
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn comultiplication_images(&self) -> &[AlgebraElement<S>] {
        &self.comultiplication
    }

    pub fn counit_images(&self) -> &[S] {
        &self.counit
    }

    pub fn antipode_images(&self) -> &[AlgebraElement<S>] {
        &self.antipode
    }

    pub fn structure(&self) -> &HopfStructure<S> {
        &self.structure
    }

    pub fn element(&self, v: SparseVec<S>) -> AlgebraElement<S> {
        AlgebraElement::from_vec(self.algebra.clone(), v)
    }

    pub fn generator(&self, name: &str) -> Option<AlgebraElement<S>> {
        AlgebraElement::named(&self.algebra, name)
    }

    pub fn comultiply(&self, a: &AlgebraElement<S>) -> AlgebraElement<S> {
        AlgebraElement::from_vec(self.square.clone(), self.structure.comultiply(a.coeffs()))
    }

    pub fn counit_of(&self, a: &AlgebraElement<S>) -> S {
        self.structure.counit_of(a.coeffs())
    }

    pub fn apply_antipode(&self, a: &AlgebraElement<S>) -> AlgebraElement<S> {
        self.element(self.structure.apply_antipode(a.coeffs()))
    }

    pub fn is_grouplike(&self, a: &AlgebraElement<S>) -> bool {
        self.structure.is_grouplike(a.coeffs())
    }

    pub fn grouplike_order(&self, a: &AlgebraElement<S>) -> GrouplikeOrder {
        self.structure.grouplike_order(a.coeffs())
    }

    pub fn primitive_space(&self) -> Result<Vec<AlgebraElement<S>>, HopfError> {
        Ok(self
            .structure
            .primitive_space()?
            .into_iter()
            .map(|v| self.element(v))
            .collect())
    }

    /// Pushes every coefficient through a ring map and rebuilds, rechecking
    /// the relations in the target.
    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Result<HopfPresentation<T>, HopfError> {
        let p = self.prime();
        let algebra = Arc::new(self.algebra.map_scalars(p, &f)?);
        let square = Arc::new(MonomialAlgebra::tensor(&algebra, &algebra)?);
        HopfPresentation::new(
            algebra.clone(),
            self.comultiplication.iter().map(|im| im.map_into(&square, &f)).collect(),
            self.counit.iter().map(&f).collect(),
            self.antipode.iter().map(|im| im.map_into(&algebra, &f)).collect(),
        )
    }

    /// Base-ring tag, generators, rules and structure-map images as strings,
    /// in a fixed field order.
    pub fn summary(&self) -> PresentationSummary {
        let a = &self.algebra;
        let names = a.generator_names();
        PresentationSummary {
            base: S::KIND.tag(),
            p: self.prime().get(),
            rank: self.rank(),
            generators: names
                .iter()
                .enumerate()
                .map(|(i, n)| GeneratorSummary {
                    name: n.clone(),
                    bound: a.bounds()[i],
                    relation: a.relation_string(i),
                })
                .collect(),
            comultiplication: images(names, self.comultiplication.iter().map(|e| e.to_string())),
            counit: images(names, self.counit.iter().map(|c| c.to_string())),
            antipode: images(names, self.antipode.iter().map(|e| e.to_string())),
        }
    }
}

fn images(names: &[String], values: impl Iterator<Item = String>) -> Vec<ImageSummary> {
    names
        .iter()
        .zip(values)
        .map(|(n, v)| ImageSummary {
            generator: n.clone(),
            image: v,
        })
        .collect()
}

impl HopfPresentation<LocalRingElement> {
    /// `t -> 0`.
    pub fn specialize_special(&self) -> Result<HopfPresentation<FpElement>, HopfError> {
        self.map_scalars(|c| c.at_zero())
    }

    /// `R -> F_p(t)`.
    pub fn specialize_generic(&self) -> Result<HopfPresentation<RationalFunction>, HopfError> {
        self.map_scalars(|c| c.to_rational())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSummary {
    pub base: &'static str,
    pub p: u32,
    pub rank: usize,
    pub generators: Vec<GeneratorSummary>,
    pub comultiplication: Vec<ImageSummary>,
    pub counit: Vec<ImageSummary>,
    pub antipode: Vec<ImageSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSummary {
    pub name: String,
    pub bound: u32,
    pub relation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageSummary {
    pub generator: String,
    pub image: String,
}
