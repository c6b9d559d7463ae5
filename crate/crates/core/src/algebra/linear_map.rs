use super::AlgebraError;
use crate::scalar::{Prime, Scalar, SparseVec};

/// A matrix over a base ring, columns indexed by the source basis and rows
/// by the target basis.
///
/// Columns are stored sparsely; structure maps of tensor powers have many
/// zero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap<S> {
    p: Prime,
    rows: usize,
    columns: Vec<SparseVec<S>>,
}

impl<S: Scalar> LinearMap<S> {
    pub fn from_columns(p: Prime, rows: usize, columns: Vec<SparseVec<S>>) -> Self {
        assert!(
            columns.iter().all(|c| c.max_index().map_or(true, |i| i < rows)),
            "column entry outside {rows} rows"
        );
        LinearMap { p, rows, columns }
    }

    /// `rows x cols` row-major input.
    pub fn from_dense(p: Prime, rows: &[Vec<S>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut columns = vec![SparseVec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for (j, c) in row.iter().enumerate() {
                columns[j].add_at(i, c.clone());
            }
        }
        LinearMap {
            p,
            rows: nrows,
            columns,
        }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        LinearMap {
            p,
            rows: n,
            columns: (0..n).map(|i| SparseVec::unit(i, p)).collect(),
        }
    }

    pub fn zero(p: Prime, rows: usize, cols: usize) -> Self {
        LinearMap {
            p,
            rows,
            columns: vec![SparseVec::new(); cols],
        }
    }

    /// The flip `a ⊗ b -> b ⊗ a` on `n^2` dimensions.
    pub fn swap(p: Prime, n: usize) -> Self {
        let columns = (0..n * n)
            .map(|k| SparseVec::unit((k % n) * n + k / n, p))
            .collect();
        LinearMap {
            p,
            rows: n * n,
            columns,
        }
    }

    /// A linear form `A -> R` from its values on the basis.
    pub fn row(p: Prime, values: &SparseVec<S>, cols: usize) -> Self {
        let columns = (0..cols)
            .map(|j| match values.get(j) {
                Some(c) => SparseVec::from_entries([(0, c.clone())]),
                None => SparseVec::new(),
            })
            .collect();
        LinearMap {
            p,
            rows: 1,
            columns,
        }
    }

    /// A map `R -> A` sending 1 to `v`.
    pub fn column_map(p: Prime, v: SparseVec<S>, rows: usize) -> Self {
        Self::from_columns(p, rows, vec![v])
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec<S> {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec<S>] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> S {
        self.columns[col]
            .get(row)
            .cloned()
            .unwrap_or_else(|| S::zero(self.p))
    }

    /// The first row of a `1 x n` map, as a vector.
    pub fn row_vector(&self) -> SparseVec<S> {
        SparseVec::from_entries(
            self.columns
                .iter()
                .enumerate()
                .filter_map(|(j, c)| c.get(0).map(|v| (j, v.clone()))),
        )
    }

    pub fn apply(&self, v: &SparseVec<S>) -> Result<SparseVec<S>, AlgebraError> {
        if let Some(i) = v.max_index() {
            if i >= self.cols() {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "vector index {i} but map has {} columns",
                    self.cols()
                )));
            }
        }
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            out.add_scaled(c, &self.columns[j]);
        }
        Ok(out)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap<S>) -> Result<LinearMap<S>, AlgebraError> {
        if inner.rows != self.cols() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows,
                self.cols(),
                inner.rows,
                inner.cols()
            )));
        }
        let columns = inner
            .columns
            .iter()
            .map(|c| self.apply(c).expect("dimensions checked"))
            .collect();
        Ok(LinearMap {
            p: self.p,
            rows: self.rows,
            columns,
        })
    }

    /// Kronecker product `f ⊗ g`, with source-major indexing on both sides.
    pub fn tensor(f: &LinearMap<S>, g: &LinearMap<S>) -> LinearMap<S> {
        let mut columns = Vec::with_capacity(f.cols() * g.cols());
        for fc in &f.columns {
            for gc in &g.columns {
                columns.push(fc.outer(gc, g.rows));
            }
        }
        LinearMap {
            p: f.p,
            rows: f.rows * g.rows,
            columns,
        }
    }

    pub fn transpose(&self) -> LinearMap<S> {
        let mut columns = vec![SparseVec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                columns[i].add_at(j, c.clone());
            }
        }
        LinearMap {
            p: self.p,
            rows: self.cols(),
            columns,
        }
    }

    pub fn add(&self, other: &LinearMap<S>) -> LinearMap<S> {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()));
        LinearMap {
            p: self.p,
            rows: self.rows,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &LinearMap<S>) -> LinearMap<S> {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()));
        LinearMap {
            p: self.p,
            rows: self.rows,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<S>> {
        let mut out = vec![vec![S::zero(self.p); self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                out[i][j] = c.clone();
            }
        }
        out
    }

    pub fn map_scalars<T: Scalar>(&self, p: Prime, f: impl Fn(&S) -> T) -> LinearMap<T> {
        LinearMap {
            p,
            rows: self.rows,
            columns: self.columns.iter().map(|c| c.map(&f)).collect(),
        }
    }

    /// First column on which the two maps differ.
    pub fn first_mismatch(&self, other: &LinearMap<S>) -> Option<usize> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Some(0);
        }
        (0..self.cols()).find(|&j| self.columns[j] != other.columns[j])
    }
}
