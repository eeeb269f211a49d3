//! Dense matrices between tensor powers of based spaces.
//!
//! Row index = codomain basis index, column index = domain basis index.
//! Tensor-factor indices are flattened row-major with the leftmost factor
//! most significant, so `e_i ⊗ e_j` in `M ⊗ N` has index `i * dim N + j`.

use std::collections::BTreeMap;
use std::fmt;

use super::elim;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A sparse vector: `(index, coefficient)` pairs sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Sums duplicate indices and drops zeros.
pub(crate) fn collect_sparse(acc: BTreeMap<usize, Scalar>) -> SparseVec {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub(crate) fn add_into(acc: &mut BTreeMap<usize, Scalar>, idx: usize, c: Scalar) {
    match acc.get_mut(&idx) {
        Some(slot) => *slot = slot.add(&c),
        None => {
            acc.insert(idx, c);
        }
    }
}

/// Product of a list of factor dimensions (the empty list is the unit object).
pub fn total(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Splits a flat index into per-factor indices (leftmost most significant).
pub fn unflatten(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

/// A linear map `⊗dom → ⊗cod` stored as a dense exact matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    dom: Vec<usize>,
    cod: Vec<usize>,
    entries: Vec<Scalar>,
}

impl LinMap {
    pub fn new(field: Field, dom: Vec<usize>, cod: Vec<usize>, entries: Vec<Scalar>) -> Result<Self> {
        check_dims(&dom)?;
        check_dims(&cod)?;
        let (rows, cols) = (total(&cod), total(&dom));
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(Error::Field(format!("entry over {} in a map over {field}", bad.field())));
        }
        Ok(LinMap { field, dom, cod, entries })
    }

    pub fn zeros(field: Field, dom: Vec<usize>, cod: Vec<usize>) -> Self {
        let n = total(&dom) * total(&cod);
        LinMap { field, dom, cod, entries: vec![field.zero(); n] }
    }

    pub fn from_fn(
        field: Field,
        dom: Vec<usize>,
        cod: Vec<usize>,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let (rows, cols) = (total(&cod), total(&dom));
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        LinMap { field, dom, cod, entries }
    }

    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns(field: Field, dom: Vec<usize>, cod: Vec<usize>, columns: &[SparseVec]) -> Result<Self> {
        let (rows, cols) = (total(&cod), total(&dom));
        if columns.len() != cols {
            return Err(Error::Shape(format!("{} columns for a domain of size {cols}", columns.len())));
        }
        let mut m = LinMap::zeros(field, dom, cod);
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                if *r >= rows {
                    return Err(Error::Shape(format!("row {r} out of range {rows}")));
                }
                m.entries[r * cols + c] = v.clone();
            }
        }
        Ok(m)
    }

    /// Identity on `⊗dims`.
    pub fn identity(field: Field, dims: &[usize]) -> Self {
        let mut m = LinMap::zeros(field, dims.to_vec(), dims.to_vec());
        let n = total(dims);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    /// The symmetry `c_{M,N}: M ⊗ N → N ⊗ M`, `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
    pub fn swap(field: Field, m: usize, n: usize) -> Self {
        let mut s = LinMap::zeros(field, vec![m, n], vec![n, m]);
        let cols = m * n;
        for i in 0..m {
            for j in 0..n {
                s.entries[(j * m + i) * cols + (i * n + j)] = field.one();
            }
        }
        s
    }

    /// Linear extension of a map on basis indices (`None` sends a basis vector to zero).
    pub fn from_basis_map(field: Field, dom: Vec<usize>, cod: Vec<usize>, f: impl Fn(usize) -> Option<(usize, i64)>) -> Self {
        let mut m = LinMap::zeros(field, dom, cod);
        let cols = m.cols();
        for c in 0..cols {
            if let Some((r, v)) = f(c) {
                m.entries[r * cols + c] = field.int(v);
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn dom(&self) -> &[usize] {
        &self.dom
    }
    pub fn cod(&self) -> &[usize] {
        &self.cod
    }
    pub fn rows(&self) -> usize {
        total(&self.cod)
    }
    pub fn cols(&self) -> usize {
        total(&self.dom)
    }
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.cols() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        let cols = self.cols();
        self.entries[row * cols + col] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    /// Same matrix with a different tensor factorization of domain and codomain.
    pub fn reshape(&self, dom: Vec<usize>, cod: Vec<usize>) -> Result<Self> {
        if total(&dom) != self.cols() || total(&cod) != self.rows() {
            return Err(Error::Shape(format!(
                "cannot view a {}x{} matrix as {:?} -> {:?}",
                self.rows(),
                self.cols(),
                dom,
                cod
            )));
        }
        Ok(LinMap { dom, cod, ..self.clone() })
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &LinMap) -> Result<Self> {
        if self.cols() != f.rows() {
            return Err(Error::Shape(format!(
                "cannot compose g: {:?} -> {:?} after f: {:?} -> {:?}",
                self.dom, self.cod, f.dom, f.cod
            )));
        }
        self.same_field(f)?;
        let (n, k, m) = (self.rows(), self.cols(), f.cols());
        let mut out = LinMap::zeros(self.field, f.dom.clone(), self.cod.clone());
        for i in 0..n {
            for t in 0..k {
                let a = &self.entries[i * k + t];
                if a.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let b = &f.entries[t * m + j];
                    if !b.is_zero() {
                        let slot = &mut out.entries[i * m + j];
                        *slot = slot.add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ g`; factor lists are concatenated.
    pub fn kron(&self, g: &LinMap) -> Result<Self> {
        self.same_field(g)?;
        let (fr, fc, gr, gc) = (self.rows(), self.cols(), g.rows(), g.cols());
        let dom = [self.dom.as_slice(), g.dom.as_slice()].concat();
        let cod = [self.cod.as_slice(), g.cod.as_slice()].concat();
        let mut out = LinMap::zeros(self.field, dom, cod);
        let cols = fc * gc;
        for i in 0..fr {
            for j in 0..fc {
                let a = &self.entries[i * fc + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..gr {
                    for l in 0..gc {
                        let b = &g.entries[k * gc + l];
                        if !b.is_zero() {
                            out.entries[(i * gr + k) * cols + (j * gc + l)] = a.mul(b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// The dual map with respect to the dual bases (plain transpose).
    pub fn transpose(&self) -> Self {
        let (rows, cols) = (self.rows(), self.cols());
        let mut entries = Vec::with_capacity(rows * cols);
        for c in 0..cols {
            for r in 0..rows {
                entries.push(self.entries[r * cols + c].clone());
            }
        }
        LinMap {
            field: self.field,
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            entries,
        }
    }

    pub fn add(&self, other: &LinMap) -> Result<Self> {
        if self.rows() != other.rows() || self.cols() != other.cols() {
            return Err(Error::Shape("sum of maps with different shapes".into()));
        }
        self.same_field(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Ok(LinMap { entries, ..self.clone() })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        LinMap {
            entries: self.entries.iter().map(|a| a.mul(s)).collect(),
            ..self.clone()
        }
    }

    /// Exact inverse by fraction-free elimination.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "cannot invert a non-square {}x{} matrix",
                self.rows(),
                self.cols()
            )));
        }
        let n = self.rows();
        let inverse = elim::invert(self.field, n, &self.entries)?;
        Ok(LinMap {
            field: self.field,
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            entries: inverse,
        })
    }

    pub fn rank(&self) -> usize {
        elim::rank(self.field, self.rows(), self.cols(), &self.entries)
    }

    /// Column `c` as a sparse vector.
    pub fn column(&self, c: usize) -> SparseVec {
        let cols = self.cols();
        (0..self.rows())
            .filter_map(|r| {
                let v = &self.entries[r * cols + c];
                (!v.is_zero()).then(|| (r, v.clone()))
            })
            .collect()
    }

    pub fn sparse_columns(&self) -> Vec<SparseVec> {
        let (rows, cols) = (self.rows(), self.cols());
        let mut out = vec![Vec::new(); cols];
        for r in 0..rows {
            for (c, col) in out.iter_mut().enumerate() {
                let v = &self.entries[r * cols + c];
                if !v.is_zero() {
                    col.push((r, v.clone()));
                }
            }
        }
        out
    }

    /// Image of a sparse vector.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let cols = self.cols();
        let mut acc = BTreeMap::new();
        for (c, x) in v {
            for r in 0..self.rows() {
                let a = &self.entries[r * cols + c];
                if !a.is_zero() {
                    add_into(&mut acc, r, a.mul(x));
                }
            }
        }
        collect_sparse(acc)
    }

    /// First `(row, col)` where the two matrices differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<(usize, usize)> {
        let cols = self.cols();
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|i| (i / cols, i % cols))
    }

    /// Entrywise equality ignoring how the factors are grouped.
    pub fn same_matrix(&self, other: &LinMap) -> bool {
        self.rows() == other.rows() && self.cols() == other.cols() && self.entries == other.entries
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.same_matrix(&LinMap::identity(self.field, &[self.rows()]))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn same_field(&self, other: &LinMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Field(format!("maps over {} and {}", self.field, other.field)));
        }
        Ok(())
    }
}

fn check_dims(dims: &[usize]) -> Result<()> {
    if dims.contains(&0) {
        return Err(Error::Shape(format!("factor dimensions must be positive: {dims:?}")));
    }
    Ok(())
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {:?} -> {:?} over {}", self.dom, self.cod, self.field)?;
        if self.entries.len() <= 400 {
            for r in 0..self.rows() {
                let row: Vec<String> = (0..self.cols()).map(|c| self.get(r, c).to_string()).collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        }
        Ok(())
    }
}
