//! Exact dense linear algebra over a [`Field`], plus an incremental echelon
//! basis ([`Subspace`]) and a sparse row accumulator for large homogeneous
//! systems ([`SparseEchelon`]).

use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix. Every entry lives in `field`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Result of [`Matrix::solve`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F: Field> {
    Consistent {
        particular: Vec<F::Elem>,
        homogeneous: Vec<Vec<F::Elem>>,
    },
    Inconsistent,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        Matrix { field, rows: r, cols: c, data }
    }

    /// Panics if the columns have unequal lengths or differ from `rows`.
    pub fn from_columns(field: F, rows: usize, cols: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn from_vec(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut F::Elem {
        &mut self.data[i * self.cols + j]
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        self.field.is_one(v)
                    } else {
                        self.field.is_zero(v)
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Panics on shape mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let k = &self.field;
        let mut out = Self::zeros(k.clone(), self.rows, other.cols);
        let n = other.cols;
        for i in 0..self.rows {
            let orow = &mut out.data[i * n..(i + 1) * n];
            for (l, a) in self.row(i).iter().enumerate() {
                if k.is_zero(a) {
                    continue;
                }
                for (o, b) in orow.iter_mut().zip(other.row(l)) {
                    if !k.is_zero(b) {
                        k.add_mul_assign(o, a, b);
                    }
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let k = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = k.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !k.is_zero(a) && !k.is_zero(b) {
                        k.add_mul_assign(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape");
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| k.add(a, b)).collect();
        Matrix { field: k.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape");
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| k.sub(a, b)).collect();
        Matrix { field: k.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let k = &self.field;
        let data = self.data.iter().map(|a| k.mul(a, c)).collect();
        Matrix { field: k.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`
    pub fn add_scaled_assign(&mut self, c: &F::Elem, other: &Self) {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape");
        if self.field.is_zero(c) {
            return;
        }
        let k = self.field.clone();
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !k.is_zero(b) {
                k.add_mul_assign(a, c, b);
            }
        }
    }

    /// `(A ⊗ B)[(i,k),(j,l)] = A[i,j] B[k,l]`
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch("kronecker product operands".into()));
        }
        let k = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(k.clone(), r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if k.is_zero(a) {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = other.get(p, q);
                        if !k.is_zero(b) {
                            out.data[(i * other.rows + p) * c + j * other.cols + q] = k.mul(a, b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row count");
        let mut out = Self::zeros(self.field.clone(), self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column count");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diagonal(field: F, blocks: &[Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    let v = b.get(i, j);
                    if !out.field.is_zero(v) {
                        out.set(r0 + i, c0 + j, v.clone());
                    }
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Rows `rs` and columns `cs`, in the given order.
    pub fn submatrix(&self, rs: &[usize], cs: &[usize]) -> Self {
        let data = rs
            .iter()
            .flat_map(|&i| cs.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Matrix { field: self.field.clone(), rows: rs.len(), cols: cs.len(), data }
    }

    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m);
        Rref { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the right kernel `{v : A v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        let r = self.rref();
        kernel_from_rref(&r.reduced, &r.pivots, self.cols)
    }

    /// Solve `A x = b` for a single right-hand side.
    pub fn solve(&self, b: &[F::Elem]) -> Solution<F> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let k = &self.field;
        let aug = self.hstack(&Matrix::from_columns(k.clone(), self.rows, &[b.to_vec()]));
        let r = aug.rref();
        if r.pivots.last() == Some(&self.cols) {
            return Solution::Inconsistent;
        }
        let mut particular = vec![k.zero(); self.cols];
        for (i, &p) in r.pivots.iter().enumerate() {
            particular[p] = r.reduced.get(i, self.cols).clone();
        }
        let reduced = r.reduced.submatrix(&(0..r.reduced.rows).collect::<Vec<_>>(), &(0..self.cols).collect::<Vec<_>>());
        let homogeneous = kernel_from_rref(&reduced, &r.pivots, self.cols);
        Solution::Consistent { particular, homogeneous }
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(self.field.clone(), n));
        let r = aug.rref();
        if r.rank() < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.reduced.submatrix(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Panics if not square.
    pub fn determinant(&self) -> F::Elem {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let k = self.field.clone();
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = k.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !k.is_zero(&m[r * n + c])) else {
                return k.zero();
            };
            if p != c {
                for j in 0..n {
                    m.swap(p * n + j, c * n + j);
                }
                det = k.neg(&det);
            }
            let piv = m[c * n + c].clone();
            det = k.mul(&det, &piv);
            let inv = k.inv(&piv).unwrap();
            for r in c + 1..n {
                if k.is_zero(&m[r * n + c]) {
                    continue;
                }
                let f = k.mul(&m[r * n + c], &inv);
                for j in c..n {
                    let t = m[c * n + j].clone();
                    if !k.is_zero(&t) {
                        k.sub_mul_assign(&mut m[r * n + j], &f, &t);
                    }
                }
            }
        }
        det
    }

    pub fn trace(&self) -> F::Elem {
        let k = &self.field;
        let mut acc = k.zero();
        for i in 0..self.rows.min(self.cols) {
            k.add_assign(&mut acc, self.get(i, i));
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(|x| self.field.elem_to_json(x)).collect()))
                .collect(),
        )
    }

    /// `cols` is needed to read back matrices with zero rows.
    pub fn from_json(field: F, v: &Value, cols: usize) -> Result<Self> {
        let rows = v.as_array().ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_array().ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
            if row.len() != cols {
                return Err(Error::Shape(format!("row of length {} where {cols} expected", row.len())));
            }
            for x in row {
                data.push(field.elem_from_json(x)?);
            }
        }
        Ok(Matrix { rows: rows.len(), cols, data, field })
    }
}

/// Gauss-Jordan elimination in place; returns pivot columns.
fn rref_in_place<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let k = m.field.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !k.is_zero(m.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = k.inv(m.get(r, c)).unwrap();
        let mut support = Vec::new();
        for j in c..cols {
            let idx = r * cols + j;
            if !k.is_zero(&m.data[idx]) {
                m.data[idx] = k.mul(&m.data[idx], &inv);
                support.push(j);
            }
        }
        let prow: Vec<(usize, F::Elem)> = support.iter().map(|&j| (j, m.data[r * cols + j].clone())).collect();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.data[i * cols + c].clone();
            if k.is_zero(&f) {
                continue;
            }
            for (j, v) in &prow {
                k.sub_mul_assign(&mut m.data[i * cols + j], &f, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref<F: Field>(reduced: &Matrix<F>, pivots: &[usize], cols: usize) -> Vec<Vec<F::Elem>> {
    let k = reduced.field();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![k.zero(); cols];
            v[f] = k.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = k.neg(reduced.get(i, f));
            }
            v
        })
        .collect()
}

// ---------------------------------------------------------------------------

/// A subspace of `k^n` kept as a reduced echelon basis.
///
/// Rows are sorted by pivot; each row is 1 at its pivot and every other row
/// vanishes there.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn new(field: F, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by<I: IntoIterator<Item = Vec<F::Elem>>>(field: F, ambient: usize, vecs: I) -> Self {
        let mut s = Self::new(field, ambient);
        for v in vecs {
            s.insert(v);
            if s.dim() == ambient {
                break;
            }
        }
        s
    }

    pub fn full(field: F, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace { field, ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        let mut mark = vec![false; self.ambient];
        for &p in &self.pivots {
            mark[p] = true;
        }
        (0..self.ambient).filter(|&i| !mark[i]).collect()
    }

    /// `v` minus its component along the subspace; zero at every pivot.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let k = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if k.is_zero(&v[p]) {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !k.is_zero(r) {
                    k.sub_mul_assign(x, &f, r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates in the echelon basis, `None` if `v` is not in the span.
    pub fn coords(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        self.contains(v).then(|| self.coords_unchecked(v))
    }

    /// Coordinates assuming membership.
    pub fn coords_unchecked(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Coordinates of the class of `v` in the quotient, read off at the
    /// non-pivot columns.
    pub fn quotient_coords(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.reduce(v);
        self.non_pivots().into_iter().map(|i| r[i].clone()).collect()
    }

    /// Returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let k = self.field.clone();
        let mut v = self.reduce(&v);
        let Some(lead) = v.iter().position(|x| !k.is_zero(x)) else {
            return false;
        };
        let inv = k.inv(&v[lead]).unwrap();
        for x in v.iter_mut() {
            if !k.is_zero(x) {
                *x = k.mul(x, &inv);
            }
        }
        let support: Vec<usize> = (lead..self.ambient).filter(|&j| !k.is_zero(&v[j])).collect();
        for row in &mut self.rows {
            if k.is_zero(&row[lead]) {
                continue;
            }
            let f = row[lead].clone();
            for &j in &support {
                k.sub_mul_assign(&mut row[j], &f, &v[j]);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, v);
        true
    }

    pub fn intersection(&self, other: &Self) -> Self {
        // kernel of [A; -B]^T restricted to the first block
        let k = &self.field;
        let n = self.ambient;
        let cols: Vec<Vec<F::Elem>> = self
            .rows
            .iter()
            .cloned()
            .chain(other.rows.iter().map(|r| r.iter().map(|x| k.neg(x)).collect()))
            .collect();
        let m = Matrix::from_columns(k.clone(), n, &cols);
        let mut out = Self::new(k.clone(), n);
        for z in m.nullspace() {
            let mut v = vec![k.zero(); n];
            for (c, row) in z.iter().zip(&self.rows) {
                if !k.is_zero(c) {
                    for (x, r) in v.iter_mut().zip(row) {
                        k.add_mul_assign(x, c, r);
                    }
                }
            }
            out.insert(v);
        }
        out
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for r in &other.rows {
            out.insert(r.clone());
        }
        out
    }

    /// Basis vectors as matrix columns.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.field.clone(), self.ambient, &self.rows)
    }
}

// ---------------------------------------------------------------------------

/// Incremental elimination for large sparse homogeneous systems.
///
/// Each stored row is monic at its pivot and reduced against all rows that
/// existed when it was inserted.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Vec<(usize, F::Elem)>>,
    pivot_row: Vec<Option<usize>>,
    buf: Vec<F::Elem>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        let buf = vec![field.zero(); ncols];
        SparseEchelon { field, ncols, rows: Vec::new(), pivot_row: vec![None; ncols], buf }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }
    pub fn is_free(&self, col: usize) -> bool {
        self.pivot_row[col].is_none()
    }
    /// Non-pivot columns in increasing order; `nullspace()[i]` is 1 at the
    /// `i`-th of them and 0 at the others.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Add the equation `sum c_j x_j = 0`. Returns whether the rank grew.
    pub fn push(&mut self, row: &[(usize, F::Elem)]) -> bool {
        let k = self.field.clone();
        let mut touched: Vec<usize> = Vec::with_capacity(row.len());
        for (j, v) in row {
            if k.is_zero(v) {
                continue;
            }
            if k.is_zero(&self.buf[*j]) {
                touched.push(*j);
            }
            k.add_assign(&mut self.buf[*j], v);
        }
        if touched.is_empty() {
            return false;
        }
        touched.sort_unstable();
        let lo = touched[0];
        let mut hi = *touched.last().unwrap();
        let mut c = lo;
        while c <= hi {
            if !k.is_zero(&self.buf[c]) {
                if let Some(r) = self.pivot_row[c] {
                    let f = self.buf[c].clone();
                    for (j, v) in &self.rows[r] {
                        k.sub_mul_assign(&mut self.buf[*j], &f, v);
                        hi = hi.max(*j);
                    }
                }
            }
            c += 1;
        }
        let mut out = Vec::new();
        for j in lo..=hi {
            if !k.is_zero(&self.buf[j]) {
                out.push((j, std::mem::replace(&mut self.buf[j], k.zero())));
            }
        }
        let Some((lead, lv)) = out.first().cloned() else {
            return false;
        };
        let inv = k.inv(&lv).unwrap();
        for (_, v) in out.iter_mut() {
            *v = k.mul(v, &inv);
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(out);
        true
    }

    /// Basis of the solution space.
    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        let k = &self.field;
        let n = self.ncols;
        // back-substitute in decreasing pivot order to fully reduce each row
        let mut order: Vec<(usize, usize)> = self
            .pivot_row
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (c, r)))
            .collect();
        order.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut reduced: Vec<Option<Vec<(usize, F::Elem)>>> = vec![None; self.rows.len()];
        let mut dense = vec![k.zero(); n];
        for &(p, r) in &order {
            let mut touched = Vec::new();
            for (j, v) in &self.rows[r] {
                dense[*j] = v.clone();
                touched.push(*j);
            }
            for &(j, _) in self.rows[r].iter().skip(1) {
                if k.is_zero(&dense[j]) {
                    continue;
                }
                if let Some(q) = self.pivot_row[j] {
                    let f = dense[j].clone();
                    for (jj, v) in reduced[q].as_ref().expect("higher pivots reduced first") {
                        if k.is_zero(&dense[*jj]) {
                            touched.push(*jj);
                        }
                        k.sub_mul_assign(&mut dense[*jj], &f, v);
                    }
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut row = Vec::new();
            for j in touched {
                if !k.is_zero(&dense[j]) {
                    row.push((j, std::mem::replace(&mut dense[j], k.zero())));
                }
            }
            debug_assert_eq!(row.first().map(|x| x.0), Some(p));
            reduced[r] = Some(row);
        }
        // free columns appearing in reduced rows
        let mut col_refs: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); n];
        for (r, row) in reduced.iter().enumerate() {
            let row = row.as_ref().unwrap();
            let p = row[0].0;
            debug_assert_eq!(self.pivot_row[p], Some(r));
            for (j, v) in row.iter().skip(1) {
                col_refs[*j].push((p, v.clone()));
            }
        }
        (0..n)
            .filter(|&f| self.pivot_row[f].is_none())
            .map(|f| {
                let mut v = vec![k.zero(); n];
                v[f] = k.one();
                for (p, c) in &col_refs[f] {
                    v[*p] = k.neg(c);
                }
                v
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------

/// Row-compressed sparse matrix; each row holds `(column, value)` pairs with
/// nonzero values, sorted by column.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, F::Elem)>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        SparseMatrix { field, rows, cols, entries: vec![Vec::new(); rows] }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let entries = (0..n).map(|i| vec![(i, field.one())]).collect();
        SparseMatrix { field, rows: n, cols: n, entries }
    }

    /// Rows must be sorted by column with nonzero values.
    pub fn from_row_entries(field: F, rows: usize, cols: usize, entries: Vec<Vec<(usize, F::Elem)>>) -> Self {
        debug_assert_eq!(entries.len(), rows);
        SparseMatrix { field, rows, cols, entries }
    }

    pub fn from_dense(m: &Matrix<F>) -> Self {
        let k = m.field().clone();
        let entries = (0..m.rows())
            .map(|i| m.row(i).iter().enumerate().filter(|(_, v)| !k.is_zero(v)).map(|(j, v)| (j, v.clone())).collect())
            .collect();
        SparseMatrix { field: k, rows: m.rows(), cols: m.cols(), entries }
    }

    /// Columns given as dense vectors of length `rows`.
    pub fn from_columns(field: F, rows: usize, cols: &[Vec<F::Elem>]) -> Self {
        let mut entries = vec![Vec::new(); rows];
        for (j, col) in cols.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                if !field.is_zero(v) {
                    entries[i].push((j, v.clone()));
                }
            }
        }
        SparseMatrix { field, rows, cols: cols.len(), entries }
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.field.clone(), self.rows, self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn row(&self, i: usize) -> &[(usize, F::Elem)] {
        &self.entries[i]
    }
    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> F::Elem {
        match self.entries[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(p) => self.entries[i][p].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == 1 && r[0].0 == i && self.field.is_one(&r[0].1))
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        debug_assert_eq!(v.len(), self.cols);
        let k = &self.field;
        self.entries
            .iter()
            .map(|row| {
                let mut acc = k.zero();
                for (j, a) in row {
                    if !k.is_zero(&v[*j]) {
                        k.add_mul_assign(&mut acc, a, &v[*j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Panics on shape mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "sparse product shape");
        let k = &self.field;
        let mut buf = vec![k.zero(); other.cols];
        let mut touched = Vec::new();
        let mut mark = vec![false; other.cols];
        let entries = self
            .entries
            .iter()
            .map(|row| {
                for (l, a) in row {
                    for (j, b) in &other.entries[*l] {
                        if !mark[*j] {
                            mark[*j] = true;
                            touched.push(*j);
                        }
                        k.add_mul_assign(&mut buf[*j], a, b);
                    }
                }
                touched.sort_unstable();
                let mut out = Vec::with_capacity(touched.len());
                for &j in &touched {
                    mark[j] = false;
                    let v = std::mem::replace(&mut buf[j], k.zero());
                    if !k.is_zero(&v) {
                        out.push((j, v));
                    }
                }
                touched.clear();
                out
            })
            .collect();
        SparseMatrix { field: k.clone(), rows: self.rows, cols: other.cols, entries }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = vec![Vec::new(); self.cols];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row {
                entries[*j].push((i, v.clone()));
            }
        }
        SparseMatrix { field: self.field.clone(), rows: self.cols, cols: self.rows, entries }
    }

    /// `sum c_t M_t` over matrices of equal shape.
    pub fn linear_combination(field: F, rows: usize, cols: usize, terms: &[(&F::Elem, &Self)]) -> Self {
        let mut entries = vec![Vec::new(); rows];
        let mut dense = vec![field.zero(); cols];
        let mut mark = vec![false; cols];
        let mut touched = Vec::new();
        for (i, out) in entries.iter_mut().enumerate() {
            for (c, m) in terms {
                if field.is_zero(c) {
                    continue;
                }
                for (j, v) in &m.entries[i] {
                    if !mark[*j] {
                        mark[*j] = true;
                        touched.push(*j);
                    }
                    field.add_mul_assign(&mut dense[*j], c, v);
                }
            }
            touched.sort_unstable();
            for &j in &touched {
                mark[j] = false;
                let v = std::mem::replace(&mut dense[j], field.zero());
                if !field.is_zero(&v) {
                    out.push((j, v));
                }
            }
            touched.clear();
        }
        SparseMatrix { field, rows, cols, entries }
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        let k = &self.field;
        let mut entries = Vec::with_capacity(self.rows * other.rows);
        for ra in &self.entries {
            for rb in &other.entries {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * other.cols + jb, k.mul(a, b)));
                    }
                }
                entries.push(row);
            }
        }
        SparseMatrix { field: k.clone(), rows: self.rows * other.rows, cols: self.cols * other.cols, entries }
    }

    pub fn block_diagonal(field: F, blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut entries = Vec::with_capacity(rows);
        let mut c0 = 0;
        for b in blocks {
            for row in &b.entries {
                entries.push(row.iter().map(|(j, v)| (j + c0, v.clone())).collect());
            }
            c0 += b.cols;
        }
        SparseMatrix { field, rows, cols, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, PrimeField, Rationals};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix<Rationals> {
        Matrix::from_rows(Rationals, rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    }

    #[test]
    fn proportional_rows_have_rank_one() {
        let r = q(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(Matrix::identity(Rationals, 3).rank(), 3);
    }

    #[test]
    fn gf2_elimination() {
        // [[1,1],[1,2]] = [[1,1],[1,0]] over GF(2): rows independent
        let k = PrimeField::new(2).unwrap();
        let m = Matrix::from_rows(k, vec![vec![1, 1], vec![1, 0]]);
        let r = m.rref();
        assert_eq!(r.rank(), 2);
        assert!(r.reduced.is_identity());
    }

    #[test]
    fn solve_cases() {
        let id = Matrix::identity(Rationals, 2);
        match id.solve(&[rat(3, 1), rat(-1, 2)]) {
            Solution::Consistent { particular, homogeneous } => {
                assert_eq!(particular, vec![rat(3, 1), rat(-1, 2)]);
                assert!(homogeneous.is_empty());
            }
            Solution::Inconsistent => panic!(),
        }
        let z = Matrix::zeros(Rationals, 2, 2);
        match z.solve(&[rat(0, 1), rat(0, 1)]) {
            Solution::Consistent { homogeneous, .. } => assert_eq!(homogeneous.len(), 2),
            Solution::Inconsistent => panic!(),
        }
        match q(&[&[1, 1]]).solve(&[rat(1, 1)]) {
            Solution::Consistent { homogeneous, .. } => assert_eq!(homogeneous.len(), 1),
            Solution::Inconsistent => panic!(),
        }
        assert_eq!(z.solve(&[rat(1, 1), rat(0, 1)]), Solution::Inconsistent);
    }

    #[test]
    fn kronecker_shapes() {
        let a = Matrix::zeros(Rationals, 2, 3);
        let b = Matrix::zeros(Rationals, 4, 5);
        assert_eq!(a.kronecker(&b).unwrap().shape(), (8, 15));
        let i6 = Matrix::identity(Rationals, 2).kronecker(&Matrix::identity(Rationals, 3)).unwrap();
        assert!(i6.is_identity() && i6.rows() == 6);
    }

    #[test]
    fn kronecker_field_mismatch() {
        let a = Matrix::identity(PrimeField::new(3).unwrap(), 1);
        let b = Matrix::identity(PrimeField::new(5).unwrap(), 1);
        assert!(matches!(a.kronecker(&b), Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = q(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant(), rat(1, 1));
        assert!(m.mul(&m.inverse().unwrap()).is_identity());
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn subspace_quotient_coordinates() {
        let mut s = Subspace::new(Rationals, 3);
        assert!(s.insert(vec![rat(1, 1), rat(1, 1), rat(0, 1)]));
        assert!(!s.insert(vec![rat(2, 1), rat(2, 1), rat(0, 1)]));
        assert_eq!(s.non_pivots(), vec![1, 2]);
        let qc = s.quotient_coords(&[rat(1, 1), rat(0, 1), rat(5, 1)]);
        assert_eq!(qc, vec![rat(-1, 1), rat(5, 1)]);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<Rationals>> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                Matrix::from_vec(Rationals, r, c, v.into_iter().map(|x| rat(x, 1)).collect()).unwrap()
            })
        })
    }

    #[test]
    fn sparse_matches_dense() {
        let a = q(&[&[1, 0, 2], &[0, 0, -1]]);
        let b = q(&[&[3, 1], &[0, 0], &[1, 1]]);
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.transpose().to_dense(), a.transpose());
        assert_eq!(sa.kronecker(&sb).to_dense(), a.kronecker(&b).unwrap());
        assert_eq!(sa.get(1, 2), rat(-1, 1));
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let r = m.rref();
            prop_assert_eq!(r.reduced.rref().reduced, r.reduced.clone());
        }

        #[test]
        fn rank_nullity(m in small_matrix()) {
            let ker = m.nullspace();
            prop_assert_eq!(m.rank() + ker.len(), m.cols());
            for v in &ker {
                prop_assert!(m.mul_vec(v).iter().all(|x: &BigRational| x == &rat(0, 1)));
            }
        }

        #[test]
        fn solve_is_sound(m in small_matrix(), x in proptest::collection::vec(-3i64..=3, 5)) {
            let x: Vec<BigRational> = x.into_iter().take(m.cols()).map(|v| rat(v, 1)).chain(std::iter::repeat(rat(0, 1))).take(m.cols()).collect();
            let b = m.mul_vec(&x);
            match m.solve(&b) {
                Solution::Consistent { particular, homogeneous } => {
                    prop_assert_eq!(m.mul_vec(&particular), b.clone());
                    for h in homogeneous {
                        prop_assert!(m.mul_vec(&h).iter().all(|v| v == &rat(0, 1)));
                    }
                }
                Solution::Inconsistent => prop_assert!(false, "consistent system reported inconsistent"),
            }
        }

        #[test]
        fn kronecker_mixed_product(a in proptest::collection::vec(-3i64..=3, 16)) {
            let mk = |s: &[i64]| Matrix::from_vec(Rationals, 2, 2, s.iter().map(|&x| rat(x, 1)).collect()).unwrap();
            let (a1, b1, c1, d1) = (mk(&a[0..4]), mk(&a[4..8]), mk(&a[8..12]), mk(&a[12..16]));
            let lhs = a1.kronecker(&b1).unwrap().mul(&c1.kronecker(&d1).unwrap());
            let rhs = a1.mul(&c1).kronecker(&b1.mul(&d1)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn sparse_echelon_matches_dense(m in small_matrix()) {
            let mut acc = SparseEchelon::new(Rationals, m.cols());
            for i in 0..m.rows() {
                let row: Vec<(usize, BigRational)> = m.row(i).iter().cloned().enumerate().collect();
                acc.push(&row);
            }
            prop_assert_eq!(acc.rank(), m.rank());
            let ker = acc.nullspace();
            prop_assert_eq!(ker.len(), m.cols() - m.rank());
            let s = Subspace::spanned_by(Rationals, m.cols(), ker.clone());
            prop_assert_eq!(s.dim(), ker.len());
            for v in &ker {
                prop_assert!(m.mul_vec(v).iter().all(|x| x == &rat(0, 1)));
            }
        }
    }
}
