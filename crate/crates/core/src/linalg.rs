//! Exact finite-dimensional linear algebra over [`Scalar`].
//!
//! Tensor legs are flattened row-major: the basis vector `e_i ⊗ f_j` of
//! `V ⊗ W` (with `dim W = w`) sits at flat index `i * w + j`. Every module
//! that touches tensor powers goes through [`kron_apply`], [`SparseVec::tensor`]
//! or [`LinMap::kron`], so the convention lives in one place.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;

/// A sparse coordinate vector: flat index to nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: BTreeMap<usize, Scalar>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        let mut v = Self::new();
        v.entries.insert(index, Scalar::one());
        v
    }

    pub fn from_dense(v: &Vector) -> Self {
        let mut out = Self::new();
        for (i, c) in v.0.iter().enumerate() {
            out.add_term(i, c);
        }
        out
    }

    pub fn to_dense(&self, len: usize) -> Vector {
        let mut out = Vector::zeros(len);
        for (&i, c) in &self.entries {
            out.0[i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> Scalar {
        self.entries
            .get(&index)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn add_term(&mut self, index: usize, coef: &Scalar) {
        if coef.is_zero() {
            return;
        }
        match self.entries.get_mut(&index) {
            Some(c) => {
                *c += coef;
                if c.is_zero() {
                    self.entries.remove(&index);
                }
            }
            None => {
                self.entries.insert(index, coef.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SparseVec, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (i, c) in other.iter() {
            self.add_term(i, &(c * factor));
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> SparseVec {
        let mut out = SparseVec::new();
        out.add_scaled(self, factor);
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    /// `self ⊗ other` where `other` lives in a space of dimension `right_dim`.
    pub fn tensor(&self, other: &SparseVec, right_dim: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                out.entries.insert(i * right_dim + j, a * b);
            }
        }
        out
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

/// A dense coordinate vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zeros(len: usize) -> Self {
        Vector(vec![Scalar::zero(); len])
    }

    pub fn basis(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = Scalar::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Vector(values.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A linear map `K^cols -> K^rows`, stored by columns: column `j` is the
/// image of the basis vector `e_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap{}x{}", self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl LinMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinMap {
            rows,
            cols,
            columns: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        LinMap {
            rows: n,
            cols: n,
            columns: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Result<Self> {
        for col in &columns {
            if let Some(max) = col.max_index() {
                if max >= rows {
                    return Err(Error::dims("column entry", rows, max + 1));
                }
            }
        }
        Ok(LinMap {
            rows,
            cols: columns.len(),
            columns,
        })
    }

    pub fn from_dense_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut sparse = Vec::with_capacity(columns.len());
        for col in columns {
            if col.len() != rows {
                return Err(Error::dims("column length", rows, col.len()));
            }
            sparse.push(SparseVec::from_dense(col));
        }
        Self::from_columns(rows, sparse)
    }

    /// Builds a map from its matrix rows. `cols` is needed for the 0-row case.
    pub fn from_rows(rows: &[Vec<Scalar>], cols: usize) -> Result<Self> {
        let mut columns = vec![SparseVec::new(); cols];
        for row in rows {
            if row.len() != cols {
                return Err(Error::dims("matrix row length", cols, row.len()));
            }
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                columns[c].add_term(r, v);
            }
        }
        Ok(LinMap {
            rows: rows.len(),
            cols,
            columns,
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
            .collect();
        Self::from_rows(&rows, cols).expect("rectangular integer matrix")
    }

    /// A single-row map `K^n -> K`.
    pub fn row_vector(values: &Vector) -> Self {
        let columns = values
            .0
            .iter()
            .map(|c| {
                let mut v = SparseVec::new();
                v.add_term(0, c);
                v
            })
            .collect();
        LinMap {
            rows: 1,
            cols: values.len(),
            columns,
        }
    }

    /// A single-column map `K -> K^n`.
    pub fn column_vector(values: &Vector) -> Self {
        LinMap {
            rows: values.len(),
            cols: 1,
            columns: vec![SparseVec::from_dense(values)],
        }
    }

    /// The flip `V ⊗ W -> W ⊗ V` with `dim V = left`, `dim W = right`.
    pub fn flip(left: usize, right: usize) -> Self {
        let columns = (0..left * right)
            .map(|idx| {
                let (i, j) = (idx / right, idx % right);
                SparseVec::unit(j * left + i)
            })
            .collect();
        LinMap {
            rows: left * right,
            cols: left * right,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.iter() {
                rows[r][c] = v.clone();
            }
        }
        rows
    }

    /// Image of a sparse vector. Indices beyond `cols` are a caller bug.
    pub fn apply_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            out.add_scaled(&self.columns[j], c);
        }
        out
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::dims("apply", self.cols, v.len()));
        }
        Ok(self
            .apply_sparse(&SparseVec::from_dense(v))
            .to_dense(self.rows))
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        if self.cols != g.rows {
            return Err(Error::dims("compose", self.cols, g.rows));
        }
        Ok(LinMap {
            rows: self.rows,
            cols: g.cols,
            columns: g.columns.iter().map(|c| self.apply_sparse(c)).collect(),
        })
    }

    /// `self ⊗ g`, so that `(f ⊗ g)(e_i ⊗ e_j) = f(e_i) ⊗ g(e_j)`.
    pub fn kron(&self, g: &LinMap) -> LinMap {
        let mut columns = Vec::with_capacity(self.cols * g.cols);
        for i in 0..self.cols {
            for j in 0..g.cols {
                columns.push(self.columns[i].tensor(&g.columns[j], g.rows));
            }
        }
        LinMap {
            rows: self.rows * g.rows,
            cols: self.cols * g.cols,
            columns,
        }
    }

    pub fn pow(&self, k: u32) -> Result<LinMap> {
        if !self.is_square() {
            return Err(Error::dims("power of non-square map", self.rows, self.cols));
        }
        let mut out = LinMap::identity(self.rows);
        for _ in 0..k {
            out = self.compose(&out)?;
        }
        Ok(out)
    }

    pub fn add(&self, g: &LinMap) -> Result<LinMap> {
        self.combine(g, &Scalar::one())
    }

    pub fn sub(&self, g: &LinMap) -> Result<LinMap> {
        self.combine(g, &-Scalar::one())
    }

    fn combine(&self, g: &LinMap, factor: &Scalar) -> Result<LinMap> {
        if self.rows != g.rows || self.cols != g.cols {
            return Err(Error::dims(
                "sum of maps",
                self.rows * self.cols,
                g.rows * g.cols,
            ));
        }
        let mut out = self.clone();
        for (a, b) in out.columns.iter_mut().zip(&g.columns) {
            a.add_scaled(b, factor);
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Scalar) -> LinMap {
        LinMap {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|c| c.scaled(factor)).collect(),
        }
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::dims("determinant", self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.to_rows();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            let pivot = m[col][col].clone();
            det *= &pivot;
            let inv = pivot.inverse()?;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= &delta;
                }
            }
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.determinant().is_ok_and(|d| !d.is_zero())
    }
}

/// Applies `maps[0] ⊗ maps[1] ⊗ ...` to a vector of the tensor product of
/// their sources, without materializing the Kronecker product.
pub fn kron_apply(maps: &[&LinMap], v: &SparseVec) -> SparseVec {
    let in_dims: Vec<usize> = maps.iter().map(|m| m.cols()).collect();
    let out_dims: Vec<usize> = maps.iter().map(|m| m.rows()).collect();
    let mut out = SparseVec::new();
    let mut legs = vec![0usize; maps.len()];
    for (idx, coef) in v.iter() {
        let mut rest = idx;
        for (leg, &d) in legs.iter_mut().zip(&in_dims).rev() {
            *leg = rest % d;
            rest /= d;
        }
        let images: Vec<&SparseVec> = maps.iter().zip(&legs).map(|(m, &l)| m.column(l)).collect();
        if images.iter().any(|c| c.is_zero()) {
            continue;
        }
        let mut partial: Vec<(usize, Scalar)> = vec![(0, coef.clone())];
        for (img, &d) in images.iter().zip(&out_dims) {
            let mut next = Vec::with_capacity(partial.len() * img.nnz());
            for (flat, c) in &partial {
                for (i, a) in img.iter() {
                    next.push((flat * d + i, c * a));
                }
            }
            partial = next;
        }
        for (flat, c) in partial {
            out.add_term(flat, &c);
        }
    }
    out
}

/// Splits a flat tensor index over the given leg dimensions.
pub fn split_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut legs = vec![0; dims.len()];
    for (leg, &d) in legs.iter_mut().zip(dims).rev() {
        *leg = idx % d;
        idx /= d;
    }
    legs
}

pub fn join_index(legs: &[usize], dims: &[usize]) -> usize {
    legs.iter().zip(dims).fold(0, |acc, (&l, &d)| acc * d + l)
}

/// Solution set of an affine system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSpace {
    Empty,
    Affine {
        particular: Vector,
        nullspace: Vec<Vector>,
    },
}

impl SolutionSpace {
    pub fn is_empty(&self) -> bool {
        matches!(self, SolutionSpace::Empty)
    }
}

/// A sparse linear system `A x = b`, one row per equation.
#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    unknowns: usize,
    rows: Vec<(SparseVec, Scalar)>,
}

impl SparseSystem {
    pub fn new(unknowns: usize) -> Self {
        SparseSystem {
            unknowns,
            rows: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> usize {
        self.rows.len()
    }

    pub fn push(&mut self, coeffs: SparseVec, rhs: Scalar) -> Result<()> {
        if let Some(max) = coeffs.max_index() {
            if max >= self.unknowns {
                return Err(Error::dims("equation unknown", self.unknowns, max + 1));
            }
        }
        self.rows.push((coeffs, rhs));
        Ok(())
    }

    pub fn rows(&self) -> &[(SparseVec, Scalar)] {
        &self.rows
    }

    /// Canonical solve: the particular solution has every free variable at
    /// zero and the nullspace basis is the RREF basis, one vector per free
    /// variable in increasing order.
    ///
    /// Unknowns are grouped into connected components of the
    /// equation/unknown incidence graph and each component is reduced on
    /// its own. Pivot and free columns are the same as in a global RREF, so
    /// the output is identical.
    pub fn solve(&self) -> SolutionSpace {
        let n = self.unknowns;
        let mut dsu = Dsu::new(n);
        for (coeffs, rhs) in &self.rows {
            let mut it = coeffs.iter().map(|(i, _)| i);
            match it.next() {
                None if !rhs.is_zero() => return SolutionSpace::Empty,
                None => {}
                Some(first) => {
                    for other in it {
                        dsu.union(first, other);
                    }
                }
            }
        }

        let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut touched = vec![false; n];
        for (coeffs, _) in &self.rows {
            for (i, _) in coeffs.iter() {
                touched[i] = true;
            }
        }
        for u in 0..n {
            if touched[u] {
                members.entry(dsu.find(u)).or_default().push(u);
            }
        }
        let mut rows_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (r, (coeffs, _)) in self.rows.iter().enumerate() {
            if let Some((first, _)) = coeffs.iter().next() {
                rows_of.entry(dsu.find(first)).or_default().push(r);
            }
        }

        let mut particular = Vector::zeros(n);
        let mut free: Vec<(usize, Vec<(usize, Scalar)>)> = Vec::new();
        for u in (0..n).filter(|&u| !touched[u]) {
            free.push((u, vec![(u, Scalar::one())]));
        }

        for (root, cols) in &members {
            let rows = rows_of.get(root).map(Vec::as_slice).unwrap_or(&[]);
            let local: BTreeMap<usize, usize> =
                cols.iter().enumerate().map(|(k, &u)| (u, k)).collect();
            let width = cols.len();
            let mut m: Vec<Vec<Scalar>> = rows
                .iter()
                .map(|&r| {
                    let (coeffs, rhs) = &self.rows[r];
                    let mut row = vec![Scalar::zero(); width + 1];
                    for (i, c) in coeffs.iter() {
                        row[local[&i]] = c.clone();
                    }
                    row[width] = rhs.clone();
                    row
                })
                .collect();
            let Some(pivots) = rref(&mut m, width) else {
                return SolutionSpace::Empty;
            };
            for (row, &pc) in pivots.iter().enumerate() {
                particular.0[cols[pc]] = m[row][width].clone();
            }
            let mut pivot_iter = pivots.iter().peekable();
            for fc in 0..width {
                if pivot_iter.peek() == Some(&&fc) {
                    pivot_iter.next();
                    continue;
                }
                let mut vec = vec![(cols[fc], Scalar::one())];
                for (row, &pc) in pivots.iter().enumerate() {
                    if !m[row][fc].is_zero() {
                        vec.push((cols[pc], -&m[row][fc]));
                    }
                }
                free.push((cols[fc], vec));
            }
        }

        free.sort_by_key(|(u, _)| *u);
        let nullspace = free
            .into_iter()
            .map(|(_, entries)| {
                let mut v = Vector::zeros(n);
                for (i, c) in entries {
                    v.0[i] = c;
                }
                v
            })
            .collect();
        SolutionSpace::Affine {
            particular,
            nullspace,
        }
    }
}

/// Reduces an augmented matrix (last column is the right-hand side) to
/// reduced row echelon form in place. Returns the pivot columns, or `None`
/// if the system is inconsistent.
fn rref(m: &mut [Vec<Scalar>], width: usize) -> Option<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..width {
        if prow == m.len() {
            break;
        }
        let Some(p) = (prow..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, prow);
        let inv = m[prow][col].inverse().expect("nonzero pivot");
        for c in col..=width {
            let v = &m[prow][c] * &inv;
            m[prow][c] = v;
        }
        let pivot_row = m[prow].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == prow || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..=width {
                if !pivot_row[c].is_zero() {
                    let delta = &factor * &pivot_row[c];
                    row[c] -= &delta;
                }
            }
        }
        pivots.push(col);
        prow += 1;
    }
    if m[prow..].iter().any(|row| !row[width].is_zero()) {
        return None;
    }
    Some(pivots)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Solves `a · x = b` exactly.
pub fn solve_affine(a: &LinMap, b: &Vector) -> Result<SolutionSpace> {
    if a.rows() != b.len() {
        return Err(Error::dims(
            "solve_affine right-hand side",
            a.rows(),
            b.len(),
        ));
    }
    let mut row_coeffs = vec![SparseVec::new(); a.rows()];
    for (c, col) in a.columns().iter().enumerate() {
        for (r, v) in col.iter() {
            row_coeffs[r].add_term(c, v);
        }
    }
    let mut system = SparseSystem::new(a.cols());
    for (coeffs, rhs) in row_coeffs.into_iter().zip(&b.0) {
        system.push(coeffs, rhs.clone())?;
    }
    Ok(system.solve())
}
