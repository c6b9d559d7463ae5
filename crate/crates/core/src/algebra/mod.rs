//! Finite free algebras with a monomial basis.
//!
//! An algebra is presented by generators `g_1, ..., g_m`, each with an
//! exponent bound `n_i` and a rewrite rule `g_i^{n_i} = rhs_i`. The basis is
//! the set of monomials with `0 <= a_i < n_i`, ordered lexicographically with
//! `g_1` most significant; a basis monomial is identified with its
//! mixed-radix index. `R[x, y]/(x^p, y^p - t x)` is the generator list
//! `x` (bound `p`, rule `0`), `y` (bound `p`, rule `t*x`).

mod element;
mod hom;
mod linear_map;
mod parse;

pub use element::AlgebraElement;
pub use hom::{algebra_hom, AlgebraHom};
pub use linear_map::LinearMap;
pub use parse::{parse_test_algebra, TEST_ALGEBRA_GRAMMAR};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::base_ring::BaseRingError;
use crate::scalar::{Prime, Scalar, SparseVec};

/// Constructions whose rank would exceed this are refused.
pub const MAX_RANK: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands belong to different algebras")]
    ParentMismatch,
    #[error("rank {rank} exceeds the guard {max}")]
    RankGuard { rank: String, max: usize },
    #[error("generator {name} has exponent bound 0")]
    ZeroBound { name: String },
    #[error("rule for {name} is malformed: {reason}")]
    MalformedRule { name: String, reason: String },
    #[error("rewrite rules are cyclic through generators {0:?}")]
    InadmissibleRules(Vec<String>),
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("relation {index} ({relation}) is not preserved: residual {residual}")]
    RelationViolation {
        index: usize,
        relation: String,
        residual: String,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error(transparent)]
    BaseRing(#[from] BaseRingError),
}

/// One generator of a presentation: `name^bound = rule`.
///
/// The rule is a list of `(exponent vector, coefficient)` pairs over the
/// whole generator list, every exponent below its bound.
#[derive(Clone, Debug)]
pub struct Generator<S> {
    pub name: String,
    pub bound: u32,
    pub rule: Vec<(Vec<u32>, S)>,
}

impl<S> Generator<S> {
    pub fn new(name: impl Into<String>, bound: u32, rule: Vec<(Vec<u32>, S)>) -> Self {
        Generator {
            name: name.into(),
            bound,
            rule,
        }
    }

    /// `name^bound = 0`.
    pub fn nilpotent(name: impl Into<String>, bound: u32) -> Self {
        Self::new(name, bound, Vec::new())
    }
}

#[derive(Clone, Debug)]
pub struct MonomialAlgebra<S: Scalar> {
    p: Prime,
    names: Vec<String>,
    bounds: Vec<u32>,
    rules: Vec<SparseVec<S>>,
    rule_terms: Vec<Vec<(Vec<u32>, S)>>,
    factor_sizes: Vec<usize>,
    place: Vec<usize>,
    rank: usize,
}

impl<S: Scalar> PartialEq for MonomialAlgebra<S> {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.names == other.names
            && self.bounds == other.bounds
            && self.rules == other.rules
    }
}

impl<S: Scalar> Eq for MonomialAlgebra<S> {}

fn checked_rank(bounds: &[u32]) -> Result<usize, AlgebraError> {
    let mut rank: u128 = 1;
    for &b in bounds {
        rank = rank.saturating_mul(b as u128);
    }
    if rank > MAX_RANK as u128 {
        let exact = if rank == u128::MAX {
            format!("> {}", u128::MAX)
        } else {
            rank.to_string()
        };
        return Err(AlgebraError::RankGuard {
            rank: exact,
            max: MAX_RANK,
        });
    }
    Ok(rank as usize)
}

/// Rejects rules whose generator dependency graph (ignoring self-loops)
/// has a cycle. Without such cycles, reduction strictly decreases the
/// exponent vector in a lexicographic order refining the dependency order,
/// so it terminates.
fn check_admissible(names: &[String], rules: &[Vec<(Vec<u32>, impl Sized)>]) -> Result<(), AlgebraError> {
    let m = names.len();
    let deps: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            let mut d: Vec<usize> = (0..m)
                .filter(|&j| j != i && rules[i].iter().any(|(e, _)| e[j] > 0))
                .collect();
            d.dedup();
            d
        })
        .collect();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; m];
    fn visit(v: usize, deps: &[Vec<usize>], state: &mut [u8], path: &mut Vec<usize>) -> Option<Vec<usize>> {
        state[v] = 1;
        path.push(v);
        for &w in &deps[v] {
            if state[w] == 1 {
                let start = path.iter().position(|&x| x == w).unwrap();
                return Some(path[start..].to_vec());
            }
            if state[w] == 0 {
                if let Some(c) = visit(w, deps, state, path) {
                    return Some(c);
                }
            }
        }
        path.pop();
        state[v] = 2;
        None
    }
    for v in 0..m {
        if state[v] == 0 {
            let mut path = Vec::new();
            if let Some(cycle) = visit(v, &deps, &mut state, &mut path) {
                return Err(AlgebraError::InadmissibleRules(
                    cycle.into_iter().map(|i| names[i].clone()).collect(),
                ));
            }
        }
    }
    Ok(())
}

impl<S: Scalar> MonomialAlgebra<S> {
    pub fn new(p: Prime, generators: Vec<Generator<S>>) -> Result<Self, AlgebraError> {
        let m = generators.len();
        let names: Vec<String> = generators.iter().map(|g| g.name.clone()).collect();
        let bounds: Vec<u32> = generators.iter().map(|g| g.bound).collect();
        if let Some(g) = generators.iter().find(|g| g.bound == 0) {
            return Err(AlgebraError::ZeroBound {
                name: g.name.clone(),
            });
        }
        let rank = checked_rank(&bounds)?;
        let mut rule_terms = Vec::with_capacity(m);
        for g in &generators {
            let mut terms: Vec<(Vec<u32>, S)> = Vec::new();
            for (exps, c) in &g.rule {
                let bad = |reason: String| AlgebraError::MalformedRule {
                    name: g.name.clone(),
                    reason,
                };
                if exps.len() != m {
                    return Err(bad(format!(
                        "exponent vector has length {}, expected {m}",
                        exps.len()
                    )));
                }
                if let Some(j) = (0..m).find(|&j| exps[j] >= bounds[j]) {
                    return Err(bad(format!(
                        "exponent {} of {} is not below its bound {}",
                        exps[j], names[j], bounds[j]
                    )));
                }
                if c.prime() != p {
                    return Err(BaseRingError::PrimeMismatch {
                        left: p.get(),
                        right: c.prime().get(),
                    }
                    .into());
                }
                if !c.is_zero() {
                    terms.push((exps.clone(), c.clone()));
                }
            }
            rule_terms.push(terms);
        }
        check_admissible(&names, &rule_terms)?;
        let mut place = vec![1usize; m];
        for i in (0..m.saturating_sub(1)).rev() {
            place[i] = place[i + 1] * bounds[i + 1] as usize;
        }
        let mut alg = MonomialAlgebra {
            p,
            names,
            bounds,
            rules: Vec::new(),
            rule_terms,
            factor_sizes: vec![m],
            place,
            rank,
        };
        alg.rules = alg
            .rule_terms
            .iter()
            .map(|terms| SparseVec::from_entries(terms.iter().map(|(e, c)| (alg.index_of(e), c.clone()))))
            .collect();
        Ok(alg)
    }

    /// The base ring itself: no generators, rank 1.
    pub fn unit(p: Prime) -> Self {
        MonomialAlgebra::new(p, Vec::new()).expect("the unit algebra is admissible")
    }

    /// `A1 ⊗ A2` on the concatenated generator list; basis is source-major,
    /// so the monomial `(m1, m2)` has index `i1 * rank(A2) + i2`.
    pub fn tensor(a1: &Self, a2: &Self) -> Result<Self, AlgebraError> {
        if a1.p != a2.p {
            return Err(BaseRingError::PrimeMismatch {
                left: a1.p.get(),
                right: a2.p.get(),
            }
            .into());
        }
        let m1 = a1.generator_count();
        let m2 = a2.generator_count();
        let mut gens = Vec::with_capacity(m1 + m2);
        for i in 0..m1 {
            let rule = a1.rule_terms[i]
                .iter()
                .map(|(e, c)| {
                    let mut v = e.clone();
                    v.extend(std::iter::repeat(0).take(m2));
                    (v, c.clone())
                })
                .collect();
            gens.push(Generator::new(a1.names[i].clone(), a1.bounds[i], rule));
        }
        for i in 0..m2 {
            let rule = a2.rule_terms[i]
                .iter()
                .map(|(e, c)| {
                    let mut v = vec![0; m1];
                    v.extend(e.iter().copied());
                    (v, c.clone())
                })
                .collect();
            gens.push(Generator::new(a2.names[i].clone(), a2.bounds[i], rule));
        }
        let mut out = MonomialAlgebra::new(a1.p, gens)?;
        out.factor_sizes = a1
            .factor_sizes
            .iter()
            .chain(a2.factor_sizes.iter())
            .copied()
            .collect();
        Ok(out)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    /// Right-hand side of `g_i^{n_i} = rhs_i`, in basis coordinates.
    pub fn rule(&self, i: usize) -> &SparseVec<S> {
        &self.rules[i]
    }

    /// Generator counts of the tensor factors (a single entry unless built by [`tensor`](Self::tensor)).
    pub fn factor_sizes(&self) -> &[usize] {
        &self.factor_sizes
    }

    pub fn index_of(&self, exps: &[u32]) -> usize {
        debug_assert_eq!(exps.len(), self.names.len());
        exps.iter()
            .zip(&self.place)
            .map(|(&e, &pl)| e as usize * pl)
            .sum()
    }

    pub fn exponents(&self, mut index: usize) -> Vec<u32> {
        let mut out = vec![0; self.names.len()];
        for (i, &pl) in self.place.iter().enumerate() {
            out[i] = (index / pl) as u32;
            index %= pl;
        }
        out
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Adds `coeff * g^exps`, rewriting any exponent at or above its bound.
    ///
    /// Rewrites the highest-index offending generator first, one rule
    /// application at a time.
    fn reduce_into(&self, acc: &mut SparseVec<S>, coeff: S, mut exps: Vec<u32>) {
        let hit = (0..exps.len()).rev().find(|&k| exps[k] >= self.bounds[k]);
        match hit {
            None => acc.add_at(self.index_of(&exps), coeff),
            Some(k) => {
                exps[k] -= self.bounds[k];
                for (rule_exps, rc) in &self.rule_terms[k] {
                    let next: Vec<u32> = exps.iter().zip(rule_exps).map(|(a, b)| a + b).collect();
                    self.reduce_into(acc, coeff.clone() * rc, next);
                }
            }
        }
    }

    /// Normal form of a monomial with arbitrary exponents.
    pub fn reduce_monomial(&self, coeff: S, exps: Vec<u32>) -> SparseVec<S> {
        let mut acc = SparseVec::new();
        if !coeff.is_zero() {
            self.reduce_into(&mut acc, coeff, exps);
        }
        acc
    }

    /// Product of two basis monomials.
    pub fn mul_basis(&self, i: usize, j: usize) -> SparseVec<S> {
        let a = self.exponents(i);
        let b = self.exponents(j);
        let sum = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        self.reduce_monomial(S::one(self.p), sum)
    }

    pub fn mul_vec(&self, a: &SparseVec<S>, b: &SparseVec<S>) -> SparseVec<S> {
        let mut acc = SparseVec::new();
        for (i, ca) in a.iter() {
            let ea = self.exponents(i);
            for (j, cb) in b.iter() {
                let eb = self.exponents(j);
                let sum = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
                self.reduce_into(&mut acc, ca.clone() * cb, sum);
            }
        }
        acc
    }

    /// The multiplication map `A ⊗ A -> A` as a matrix.
    pub fn multiplication_map(&self) -> LinearMap<S> {
        let r = self.rank;
        let cols = (0..r * r).map(|k| self.mul_basis(k / r, k % r)).collect();
        LinearMap::from_columns(self.p, r, cols)
    }

    pub fn monomial_string(&self, index: usize) -> String {
        let exps = self.exponents(index);
        let mut parts = Vec::new();
        let mut offset = 0;
        for &size in &self.factor_sizes {
            let factor: Vec<String> = (offset..offset + size)
                .filter(|&i| exps[i] > 0)
                .map(|i| match exps[i] {
                    1 => self.names[i].clone(),
                    e => format!("{}^{e}", self.names[i]),
                })
                .collect();
            parts.push(if factor.is_empty() {
                "1".to_string()
            } else {
                factor.join("*")
            });
            offset += size;
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("⊗")
        }
    }

    /// Labels of all basis monomials in index order.
    pub fn basis_labels(&self) -> Vec<String> {
        (0..self.rank).map(|i| self.monomial_string(i)).collect()
    }

    /// Sum-of-monomials rendering of a coefficient vector.
    pub fn format_vec(&self, v: &SparseVec<S>) -> String {
        format_terms(v.iter().map(|(i, c)| (self.monomial_string(i), c)))
    }

    /// Pushes every coefficient (rules included) through `f`.
    pub fn map_scalars<T: Scalar>(&self, p: Prime, f: impl Fn(&S) -> T) -> Result<MonomialAlgebra<T>, AlgebraError> {
        let gens = (0..self.names.len())
            .map(|i| {
                Generator::new(
                    self.names[i].clone(),
                    self.bounds[i],
                    self.rule_terms[i].iter().map(|(e, c)| (e.clone(), f(c))).collect(),
                )
            })
            .collect();
        let mut out = MonomialAlgebra::new(p, gens)?;
        out.factor_sizes = self.factor_sizes.clone();
        Ok(out)
    }

    /// Human-readable relations, e.g. `y^2 = t*x`.
    pub fn relation_string(&self, i: usize) -> String {
        let lhs = match self.bounds[i] {
            1 => self.names[i].clone(),
            b => format!("{}^{b}", self.names[i]),
        };
        format!("{lhs} = {}", self.format_vec(&self.rules[i]))
    }
}

/// Joins `(monomial, coefficient)` pairs as `c*m + ...`, omitting unit
/// coefficients and parenthesizing compound ones.
pub fn format_terms<'a, S: Scalar>(terms: impl Iterator<Item = (String, &'a S)>) -> String {
    let parts: Vec<String> = terms
        .map(|(mono, c)| {
            let cs = c.to_string();
            let cs = if cs.contains('+') || cs.contains('/') {
                format!("({cs})")
            } else {
                cs
            };
            match (mono.as_str(), c.is_one()) {
                (_, true) => mono,
                ("1", false) => cs,
                (_, false) => format!("{cs}*{mono}"),
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

impl<S: Scalar> fmt::Display for MonomialAlgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = (0..self.names.len()).map(|i| self.relation_string(i)).collect();
        write!(
            f,
            "{}[{}]/({})",
            S::KIND.tag(),
            self.names.join(","),
            rels.join(", ")
        )
    }
}

/// Convenience for sharing algebras between elements.
pub type AlgebraRef<S> = Arc<MonomialAlgebra<S>>;

#[cfg(test)]
mod tests;
