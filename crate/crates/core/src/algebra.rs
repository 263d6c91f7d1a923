//! Finite-dimensional unital associative algebras given by structure
//! constants.

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::linalg::{Matrix, SparseEchelon, SparseMatrix, Subspace};
use crate::poly;

/// Full associativity check up to this dimension; sampled above.
pub const ASSOC_FULL_CHECK_DIM: usize = 64;
/// Number of sampled triples above the threshold.
pub const ASSOC_SAMPLES: usize = 1000;
const ASSOC_SEED: u64 = 0xa55_0c1a;

/// Sparse row of a product `b_i b_j`: pairs `(k, c_ijk)` with `c_ijk != 0`,
/// sorted by `k`.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `b_i b_j = sum_k c[i][j][k] b_k`, stored sparsely per pair `(i, j)`.
#[derive(Clone, Debug)]
pub struct FdAlgebra<F: Field> {
    field: F,
    labels: Vec<String>,
    table: Vec<SparseVec<F::Elem>>,
    unit: Vec<F::Elem>,
    generators: OnceLock<Vec<usize>>,
    radical: OnceLock<Result<Subspace<F>>>,
    hints: Option<Vec<Vec<F::Elem>>>,
    pims: OnceLock<Result<Arc<PimData<F>>>>,
}

/// Projective indecomposables of an algebra, one per isomorphism class.
#[derive(Clone, Debug)]
pub struct PimData<F: Field> {
    /// Complete orthogonal primitive idempotents summing to the unit.
    pub idempotents: Vec<Vec<F::Elem>>,
    /// Class index of each idempotent (classes numbered by first occurrence).
    pub class_of: Vec<usize>,
    /// A representative idempotent per class.
    pub reps: Vec<Vec<F::Elem>>,
    /// Echelon basis of `A e` for each representative.
    pub left_ideals: Vec<Subspace<F>>,
    /// Left multiplication by each basis element on `A e`, per class.
    pub pim_actions: Vec<Vec<SparseMatrix<F>>>,
    /// `dim` of the simple top of each class.
    pub simple_dims: Vec<usize>,
    /// Simple modules: action of each basis element, per class.
    pub simple_actions: Vec<Vec<SparseMatrix<F>>>,
    /// Elements generating the radical as a one-sided ideal on either side.
    pub rad_generators: Vec<Vec<F::Elem>>,
}

impl<F: Field> PartialEq for FdAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.unit == other.unit && self.table == other.table
    }
}

/// An element together with the algebra it belongs to.
#[derive(Clone, Debug)]
pub struct AlgebraElement<F: Field> {
    pub algebra: Arc<FdAlgebra<F>>,
    pub coords: Vec<F::Elem>,
}

impl<F: Field> AlgebraElement<F> {
    pub fn new(algebra: Arc<FdAlgebra<F>>, coords: Vec<F::Elem>) -> Result<Self> {
        if coords.len() != algebra.dim() {
            return Err(Error::Shape(format!("{} coordinates for dimension {}", coords.len(), algebra.dim())));
        }
        Ok(AlgebraElement { algebra, coords })
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords: self.algebra.mul(&self.coords, &other.coords) })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords: self.algebra.add(&self.coords, &other.coords) })
    }
}

impl<F: Field> PartialEq for AlgebraElement<F> {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.coords == other.coords
    }
}

pub fn same_algebra<F: Field>(a: &Arc<FdAlgebra<F>>, b: &Arc<FdAlgebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// How thoroughly to validate associativity on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    /// Full check up to [`ASSOC_FULL_CHECK_DIM`], sampled above.
    Standard,
    /// Always sampled (for constructions generated by validated formulas).
    Sampled,
}

impl<F: Field> FdAlgebra<F> {
    /// Validated construction from dense constants `c[i][j][k]`.
    pub fn new(field: F, labels: Vec<String>, constants: Vec<Vec<Vec<F::Elem>>>, unit: Vec<F::Elem>) -> Result<Self> {
        let d = labels.len();
        if constants.len() != d || constants.iter().any(|r| r.len() != d || r.iter().any(|c| c.len() != d)) {
            return Err(Error::Shape(format!("structure constants must be {d}x{d}x{d}")));
        }
        let table = constants
            .into_iter()
            .flatten()
            .map(|c| c.into_iter().enumerate().filter(|(_, v)| !field.is_zero(v)).collect())
            .collect();
        Self::from_table(field, labels, table, unit, Validation::Standard)
    }

    /// Construction from sparse products, indexed by `i * dim + j`.
    pub fn from_table(
        field: F,
        labels: Vec<String>,
        table: Vec<SparseVec<F::Elem>>,
        unit: Vec<F::Elem>,
        validation: Validation,
    ) -> Result<Self> {
        let d = labels.len();
        if table.len() != d * d {
            return Err(Error::Shape(format!("expected {} products, got {}", d * d, table.len())));
        }
        if unit.len() != d {
            return Err(Error::Shape(format!("unit has length {} for dimension {d}", unit.len())));
        }
        if table.iter().flatten().any(|(k, _)| *k >= d) {
            return Err(Error::Shape("structure constant index out of range".into()));
        }
        let table = table
            .into_iter()
            .map(|mut row| {
                row.retain(|(_, v)| !field.is_zero(v));
                row.sort_by_key(|(k, _)| *k);
                row
            })
            .collect();
        let a = FdAlgebra {
            field,
            labels,
            table,
            unit,
            generators: OnceLock::new(),
            radical: OnceLock::new(),
            hints: None,
            pims: OnceLock::new(),
        };
        a.check_unit()?;
        a.check_associative(validation)?;
        Ok(a)
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let b = self.basis_element(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::NotUnit);
            }
        }
        Ok(())
    }

    fn check_associative(&self, validation: Validation) -> Result<()> {
        let d = self.dim();
        if validation == Validation::Standard && d <= ASSOC_FULL_CHECK_DIM {
            for i in 0..d {
                for j in 0..d {
                    let ij = self.sparse_to_dense(self.product(i, j));
                    for k in 0..d {
                        let left = self.mul_right_basis(&ij, k);
                        let jk = self.sparse_to_dense(self.product(j, k));
                        let right = self.mul_left_basis(i, &jk);
                        if left != right {
                            return Err(Error::NonAssociative(i, j, k));
                        }
                    }
                }
            }
        } else if d > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SEED);
            for _ in 0..ASSOC_SAMPLES {
                let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
                let ij = self.sparse_to_dense(self.product(i, j));
                let jk = self.sparse_to_dense(self.product(j, k));
                if self.mul_right_basis(&ij, k) != self.mul_left_basis(i, &jk) {
                    return Err(Error::NonAssociative(i, j, k));
                }
            }
        }
        Ok(())
    }

    /// Attach orthogonal idempotents (summing to the unit) that primitive
    /// idempotent searches refine instead of starting from the unit.
    pub fn with_idempotent_hints(mut self, hints: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut sum = self.zero();
        for e in &hints {
            if e.len() != self.dim() || !self.is_idempotent(e) {
                return Err(Error::InvalidInput("hint is not an idempotent".into()));
            }
            sum = self.add(&sum, e);
        }
        if sum != self.unit {
            return Err(Error::InvalidInput("hints do not sum to the unit".into()));
        }
        self.hints = Some(hints);
        self.pims = OnceLock::new();
        Ok(self)
    }

    pub fn idempotent_hints(&self) -> Option<&[Vec<F::Elem>]> {
        self.hints.as_deref()
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }
    pub fn table(&self) -> &[SparseVec<F::Elem>] {
        &self.table
    }

    /// `b_i b_j` as a sparse vector.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec<F::Elem> {
        &self.table[i * self.dim() + j]
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_element(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn element(self: &Arc<Self>, coords: Vec<F::Elem>) -> Result<AlgebraElement<F>> {
        AlgebraElement::new(self.clone(), coords)
    }

    fn sparse_to_dense(&self, s: &SparseVec<F::Elem>) -> Vec<F::Elem> {
        let mut v = self.zero();
        for (k, c) in s {
            v[*k] = c.clone();
        }
        v
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }
    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }
    pub fn scale(&self, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
        a.iter().map(|x| self.field.mul(x, c)).collect()
    }
    pub fn is_zero_elem(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let k = &self.field;
        let d = self.dim();
        let mut out = self.zero();
        let bs: Vec<usize> = (0..d).filter(|&j| !k.is_zero(&b[j])).collect();
        for (i, x) in a.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for &j in &bs {
                let row = &self.table[i * d + j];
                if row.is_empty() {
                    continue;
                }
                let xy = k.mul(x, &b[j]);
                for (t, c) in row {
                    k.add_mul_assign(&mut out[*t], &xy, c);
                }
            }
        }
        out
    }

    /// `a b_j`
    pub fn mul_right_basis(&self, a: &[F::Elem], j: usize) -> Vec<F::Elem> {
        let k = &self.field;
        let d = self.dim();
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (t, c) in &self.table[i * d + j] {
                k.add_mul_assign(&mut out[*t], x, c);
            }
        }
        out
    }

    /// `b_i a`
    pub fn mul_left_basis(&self, i: usize, a: &[F::Elem]) -> Vec<F::Elem> {
        let k = &self.field;
        let d = self.dim();
        let mut out = self.zero();
        for (j, x) in a.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (t, c) in &self.table[i * d + j] {
                k.add_mul_assign(&mut out[*t], x, c);
            }
        }
        out
    }

    /// Matrix of `x -> a x` (column `j` is `a b_j`).
    pub fn left_mul_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.mul_right_basis(a, j)).collect();
        Matrix::from_columns(self.field.clone(), self.dim(), &cols)
    }

    /// Matrix of `x -> x a` (column `j` is `b_j a`).
    pub fn right_mul_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.mul_left_basis(j, a)).collect();
        Matrix::from_columns(self.field.clone(), self.dim(), &cols)
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn is_idempotent(&self, e: &[F::Elem]) -> bool {
        self.mul(e, e) == e
    }

    /// Basis indices generating the algebra (with the unit), chosen greedily.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let d = self.dim();
            let mut gens: Vec<usize> = Vec::new();
            let mut span = self.subalgebra_generated(&gens);
            for i in 0..d {
                if span.is_full() {
                    break;
                }
                if !span.contains(&self.basis_element(i)) {
                    gens.push(i);
                    span = self.subalgebra_generated(&gens);
                }
            }
            gens
        })
    }

    /// Span of all words in the given basis elements (including the empty word).
    pub fn subalgebra_generated(&self, gens: &[usize]) -> Subspace<F> {
        let mut span = Subspace::new(self.field.clone(), self.dim());
        let mut queue = vec![self.unit.clone()];
        span.insert(self.unit.clone());
        while let Some(v) = queue.pop() {
            for &g in gens {
                let w = self.mul_right_basis(&v, g);
                if span.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        span
    }

    // -----------------------------------------------------------------------
    // constructions

    /// `(a ⊗ b)(a' ⊗ b') = aa' ⊗ bb'`, basis index `i * dim B + j`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch("tensor product factors".into()));
        }
        let k = &self.field;
        let (da, db) = (self.dim(), other.dim());
        let d = da * db;
        let mut table = vec![Vec::new(); d * d];
        for i in 0..da {
            for i2 in 0..da {
                let pa = self.product(i, i2);
                if pa.is_empty() {
                    continue;
                }
                for j in 0..db {
                    for j2 in 0..db {
                        let pb = other.product(j, j2);
                        if pb.is_empty() {
                            continue;
                        }
                        let row: SparseVec<F::Elem> = pa
                            .iter()
                            .flat_map(|(s, c)| pb.iter().map(move |(t, e)| (s * db + t, k.mul(c, e))))
                            .collect();
                        table[(i * db + j) * d + i2 * db + j2] = row;
                    }
                }
            }
        }
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        let unit = kron_vec(k, &self.unit, &other.unit);
        Self::from_table(k.clone(), labels, table, unit, Validation::Sampled)
    }

    /// `n`-fold tensor power (`n >= 1`).
    pub fn tensor_power(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("tensor power needs n >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.tensor(self)?;
        }
        Ok(acc)
    }

    /// `c_op[i][j] = c[j][i]`
    pub fn opposite(&self) -> Self {
        let d = self.dim();
        let table = (0..d * d).map(|ij| self.table[(ij % d) * d + ij / d].clone()).collect();
        FdAlgebra {
            field: self.field.clone(),
            labels: self.labels.clone(),
            table,
            unit: self.unit.clone(),
            generators: OnceLock::new(),
            radical: OnceLock::new(),
            hints: None,
            pims: OnceLock::new(),
        }
    }

    /// `{z : z b = b z}` for all generators `b`.
    pub fn center(&self) -> Vec<Vec<F::Elem>> {
        let k = &self.field;
        let d = self.dim();
        let mut sys = SparseEchelon::new(k.clone(), d);
        for &g in self.generators() {
            // row t of (z b_g - b_g z) = sum_i z_i (c[i][g][t] - c[g][i][t])
            let mut rows: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); d];
            for i in 0..d {
                for (t, c) in self.product(i, g) {
                    rows[*t].push((i, c.clone()));
                }
                for (t, c) in self.product(g, i) {
                    rows[*t].push((i, k.neg(c)));
                }
            }
            for r in rows {
                sys.push(&r);
            }
        }
        sys.nullspace()
    }

    /// Kernel of the trace form `T(x, y) = tr L_{xy}`.
    ///
    /// Equals the Jacobson radical in characteristic 0 or `p > dim`.
    pub fn radical(&self) -> Result<&Subspace<F>> {
        self.radical.get_or_init(|| self.compute_radical()).as_ref().map_err(Clone::clone)
    }

    fn compute_radical(&self) -> Result<Subspace<F>> {
        let k = &self.field;
        let d = self.dim();
        let p = k.characteristic();
        if p != 0 && p as usize <= d {
            return Err(Error::UnsupportedCharacteristic { p, dim: d });
        }
        // t_k = tr L_{b_k} = sum_i c[k][i][i]
        let t: Vec<F::Elem> = (0..d)
            .map(|kk| {
                let mut acc = k.zero();
                for i in 0..d {
                    if let Some((_, c)) = self.product(kk, i).iter().find(|(s, _)| *s == i) {
                        k.add_assign(&mut acc, c);
                    }
                }
                acc
            })
            .collect();
        let mut sys = SparseEchelon::new(k.clone(), d);
        for i in 0..d {
            let row: Vec<(usize, F::Elem)> = (0..d)
                .filter_map(|j| {
                    let mut acc = k.zero();
                    for (s, c) in self.product(i, j) {
                        k.add_mul_assign(&mut acc, c, &t[*s]);
                    }
                    (!k.is_zero(&acc)).then_some((j, acc))
                })
                .collect();
            sys.push(&row);
        }
        Ok(Subspace::spanned_by(k.clone(), d, sys.nullspace()))
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.dim() == 0)
    }

    /// `A/rad A` with the projection `A -> A/rad A` (a `dim Q x dim A` matrix).
    ///
    /// The quotient basis is the image of the basis elements at the non-pivot
    /// columns of the radical.
    pub fn semisimple_quotient(&self) -> Result<(FdAlgebra<F>, Matrix<F>)> {
        let rad = self.radical()?;
        let q = quotient_by_ideal(self, rad)?;
        Ok(q)
    }

    /// Minimal polynomial of `a` inside the corner algebra with unit `e`
    /// (`e a = a e = a`). Monic, low degree first.
    pub fn min_poly_in(&self, a: &[F::Elem], e: &[F::Elem]) -> Vec<F::Elem> {
        let k = &self.field;
        let d = self.dim();
        let mut powers: Vec<Vec<F::Elem>> = vec![e.to_vec()];
        let mut span = Subspace::new(k.clone(), d);
        span.insert(e.to_vec());
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            if span.contains(&next) {
                let m = Matrix::from_columns(k.clone(), d, &powers);
                let coeffs = match m.solve(&next) {
                    crate::linalg::Solution::Consistent { particular, .. } => particular,
                    crate::linalg::Solution::Inconsistent => unreachable!("membership already checked"),
                };
                let mut out: Vec<F::Elem> = coeffs.iter().map(|c| k.neg(c)).collect();
                out.push(k.one());
                return out;
            }
            span.insert(next.clone());
            powers.push(next);
        }
    }

    pub fn min_poly(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        self.min_poly_in(a, &self.unit.clone())
    }

    /// `p(a)` computed inside the corner with unit `e`.
    pub fn eval_poly_in(&self, p: &[F::Elem], a: &[F::Elem], e: &[F::Elem]) -> Vec<F::Elem> {
        let mut acc = self.zero();
        for c in p.iter().rev() {
            acc = self.mul(&acc, a);
            acc = self.add(&acc, &self.scale(e, c));
        }
        acc
    }

    /// Basis of `e A f`.
    pub fn corner_space(&self, e: &[F::Elem], f: &[F::Elem]) -> Subspace<F> {
        let vecs = (0..self.dim()).map(|i| {
            let eb = self.mul_left_basis_rev(e, i);
            self.mul(&eb, f)
        });
        Subspace::spanned_by(self.field.clone(), self.dim(), vecs)
    }

    /// `e b_i`
    fn mul_left_basis_rev(&self, e: &[F::Elem], i: usize) -> Vec<F::Elem> {
        self.mul_right_basis(e, i)
    }

    /// The corner algebra `e A e` with unit `e`, and its basis as elements of `A`.
    pub fn corner(&self, e: &[F::Elem]) -> Result<(FdAlgebra<F>, Vec<Vec<F::Elem>>)> {
        let space = self.corner_space(e, e);
        let basis = space.basis().to_vec();
        let n = basis.len();
        let k = &self.field;
        let mut table = Vec::with_capacity(n * n);
        for x in &basis {
            for y in &basis {
                let xy = self.mul(x, y);
                let c = space.coords_unchecked(&xy);
                table.push(c.into_iter().enumerate().filter(|(_, v)| !k.is_zero(v)).collect());
            }
        }
        let unit = space.coords(e).ok_or_else(|| Error::InvalidInput("corner element is not idempotent".into()))?;
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        let alg = FdAlgebra::from_table(k.clone(), labels, table, unit, Validation::Sampled)?;
        Ok((alg, basis))
    }

    /// Complete set of orthogonal primitive idempotents summing to the unit.
    pub fn primitive_idempotents(&self) -> Result<Vec<Vec<F::Elem>>> {
        self.primitive_idempotents_with(self.hints.as_deref(), SPLIT_SEED)
    }

    pub fn primitive_idempotents_with_hints(&self, hints: Option<&[Vec<F::Elem>]>) -> Result<Vec<Vec<F::Elem>>> {
        self.primitive_idempotents_with(hints, SPLIT_SEED)
    }

    /// As [`primitive_idempotents`](Self::primitive_idempotents), refining the
    /// given orthogonal idempotents (summing to the unit) instead of starting
    /// from the unit. Hints that are already primitive are returned unchanged.
    /// `seed` drives the random splitting elements.
    pub fn primitive_idempotents_with(&self, hints: Option<&[Vec<F::Elem>]>, seed: u64) -> Result<Vec<Vec<F::Elem>>> {
        let d = self.dim();
        if d == 0 {
            return Ok(Vec::new());
        }
        let hints: Vec<Vec<F::Elem>> = match hints {
            Some(h) => {
                let mut sum = self.zero();
                for e in h {
                    if !self.is_idempotent(e) {
                        return Err(Error::InvalidInput("hint is not idempotent".into()));
                    }
                    sum = self.add(&sum, e);
                }
                if sum != self.unit {
                    return Err(Error::InvalidInput("hints do not sum to the unit".into()));
                }
                h.iter().filter(|e| !self.is_zero_elem(e)).cloned().collect()
            }
            None => vec![self.unit.clone()],
        };
        let rad = self.radical()?;
        let (quot, proj) = quotient_by_ideal(self, rad)?;
        let section: Vec<usize> = rad.non_pivots();
        let project = |a: &[F::Elem]| proj.mul_vec(a);
        let lift = |q: &[F::Elem]| {
            let mut v = self.zero();
            for (c, &i) in q.iter().zip(&section) {
                v[i] = c.clone();
            }
            v
        };

        // refine each hint in the semisimple quotient
        let mut pieces: Vec<(usize, Vec<F::Elem>)> = Vec::new();
        let mut splitter = Splitter::new(&quot, seed);
        for (h, e) in hints.iter().enumerate() {
            for f in splitter.split_primitive(&project(e))? {
                pieces.push((h, f));
            }
        }

        // lift inside each hint's corner, sequentially
        let mut out = Vec::new();
        for (h, e) in hints.iter().enumerate() {
            let group: Vec<&Vec<F::Elem>> = pieces.iter().filter(|(g, _)| *g == h).map(|(_, f)| f).collect();
            if group.len() == 1 {
                out.push(e.clone());
                continue;
            }
            let mut rest = e.clone();
            for (n, f) in group.iter().enumerate() {
                if n + 1 == group.len() {
                    out.push(rest.clone());
                    break;
                }
                let x = self.mul(&self.mul(&rest, &lift(f)), &rest);
                let lifted = self.newton_idempotent(x);
                rest = self.sub(&rest, &lifted);
                out.push(lifted);
            }
        }
        Ok(out)
    }

    /// Iterate `x -> 3x^2 - 2x^3` until idempotent (`x^2 - x` nilpotent).
    pub fn newton_idempotent(&self, mut x: Vec<F::Elem>) -> Vec<F::Elem> {
        let k = &self.field;
        let three = k.from_i64(3);
        let two = k.from_i64(2);
        loop {
            let x2 = self.mul(&x, &x);
            if x2 == x {
                return x;
            }
            let x3 = self.mul(&x2, &x);
            x = self.sub(&self.scale(&x2, &three), &self.scale(&x3, &two));
        }
    }

    /// Primitive idempotents grouped into classes, with PIMs and simples.
    pub fn pim_data(&self) -> Result<Arc<PimData<F>>> {
        self.pims.get_or_init(|| self.compute_pim_data().map(Arc::new)).clone()
    }

    fn compute_pim_data(&self) -> Result<PimData<F>> {
        let k = &self.field;
        let d = self.dim();
        let idempotents = self.primitive_idempotents()?;
        let rad = self.radical()?;
        let (quot, proj) = quotient_by_ideal(self, rad)?;
        let bars: Vec<Vec<F::Elem>> = idempotents.iter().map(|e| proj.mul_vec(e)).collect();
        let mut class_of = Vec::with_capacity(idempotents.len());
        let mut rep_idx: Vec<usize> = Vec::new();
        for (i, ei) in bars.iter().enumerate() {
            let found = rep_idx.iter().position(|&r| quot.corner_space(ei, &bars[r]).dim() > 0);
            match found {
                Some(c) => class_of.push(c),
                None => {
                    class_of.push(rep_idx.len());
                    rep_idx.push(i);
                }
            }
        }
        let reps: Vec<Vec<F::Elem>> = rep_idx.iter().map(|&i| idempotents[i].clone()).collect();
        let mut left_ideals = Vec::new();
        let mut pim_actions = Vec::new();
        let mut simple_dims = Vec::new();
        let mut simple_actions = Vec::new();
        for (c, e) in reps.iter().enumerate() {
            let ideal = Subspace::spanned_by(k.clone(), d, (0..d).map(|t| self.mul_left_basis(t, e)));
            let acts = (0..d)
                .map(|t| {
                    let cols: Vec<Vec<F::Elem>> =
                        ideal.basis().iter().map(|u| ideal.coords_unchecked(&self.mul_left_basis(t, u))).collect();
                    SparseMatrix::from_columns(k.clone(), ideal.dim(), &cols)
                })
                .collect();
            left_ideals.push(ideal);
            pim_actions.push(acts);
            let ebar = &bars[rep_idx[c]];
            let qd = quot.dim();
            let simple = Subspace::spanned_by(k.clone(), qd, (0..qd).map(|t| quot.mul_left_basis(t, ebar)));
            let sacts = (0..d)
                .map(|t| {
                    let bt = proj.mul_vec(&self.basis_element(t));
                    let cols: Vec<Vec<F::Elem>> =
                        simple.basis().iter().map(|u| simple.coords_unchecked(&quot.mul(&bt, u))).collect();
                    SparseMatrix::from_columns(k.clone(), simple.dim(), &cols)
                })
                .collect();
            simple_dims.push(simple.dim());
            simple_actions.push(sacts);
        }
        let rad_generators = radical_generators(self, rad);
        Ok(PimData { idempotents, class_of, reps, left_ideals, pim_actions, simple_dims, simple_actions, rad_generators })
    }

    /// Central primitive idempotents and the corresponding block algebras.
    pub fn block_decompose(&self) -> Result<(Vec<Vec<F::Elem>>, Vec<FdAlgebra<F>>)> {
        let center = self.center();
        let idems = split_commutative(self, &center, self.unit.clone())?;
        let mut blocks = Vec::with_capacity(idems.len());
        for e in &idems {
            blocks.push(self.corner(e)?.0);
        }
        Ok((idems, blocks))
    }

    /// Central primitive idempotents only.
    pub fn central_primitive_idempotents(&self) -> Result<Vec<Vec<F::Elem>>> {
        split_commutative(self, &self.center(), self.unit.clone())
    }

    // -----------------------------------------------------------------------
    // serialization

    pub fn to_json(&self) -> Value {
        let k = &self.field;
        let d = self.dim();
        let mut quads = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (t, c) in self.product(i, j) {
                    quads.push(json!([i, j, t, k.elem_to_json(c)]));
                }
            }
        }
        json!({
            "field": k.descriptor().to_json(),
            "labels": self.labels,
            "unit": self.unit.iter().map(|x| k.elem_to_json(x)).collect::<Vec<_>>(),
            "structure_constants": quads,
        })
    }

    /// Accepts sparse `[i, j, k, value]` quadruples or a dense `d x d x d` array.
    pub fn from_json(v: &Value) -> Result<Self> {
        let fd = FieldDescriptor::from_json(v.get("field").ok_or_else(|| Error::Parse("missing \"field\"".into()))?)?;
        let field = F::from_descriptor(&fd)?;
        let labels: Vec<String> = v
            .get("labels")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"labels\"".into()))?
            .iter()
            .map(|l| l.as_str().map(str::to_string).ok_or_else(|| Error::Parse("label must be a string".into())))
            .collect::<Result<_>>()?;
        let d = labels.len();
        let unit = v
            .get("unit")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"unit\"".into()))?
            .iter()
            .map(|x| field.elem_from_json(x))
            .collect::<Result<Vec<_>>>()?;
        let sc = v
            .get("structure_constants")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"structure_constants\"".into()))?;
        let dense = sc.len() == d && d > 0 && sc.iter().all(|r| r.as_array().is_some_and(|r| r.len() == d && r.iter().all(Value::is_array)));
        let mut table: Vec<SparseVec<F::Elem>> = vec![Vec::new(); d * d];
        if dense {
            for (i, r) in sc.iter().enumerate() {
                for (j, c) in r.as_array().unwrap().iter().enumerate() {
                    let c = c.as_array().unwrap();
                    if c.len() != d {
                        return Err(Error::Shape("dense structure constants must be d x d x d".into()));
                    }
                    for (t, x) in c.iter().enumerate() {
                        let x = field.elem_from_json(x)?;
                        if !field.is_zero(&x) {
                            table[i * d + j].push((t, x));
                        }
                    }
                }
            }
        } else {
            for q in sc {
                let q = q.as_array().filter(|q| q.len() == 4).ok_or_else(|| Error::Parse("expected [i, j, k, value]".into()))?;
                let idx = |n: usize| {
                    q[n].as_u64()
                        .map(|x| x as usize)
                        .filter(|&x| x < d)
                        .ok_or_else(|| Error::Parse("structure constant index out of range".into()))
                };
                let (i, j, t) = (idx(0)?, idx(1)?, idx(2)?);
                let x = field.elem_from_json(&q[3])?;
                let row = &mut table[i * d + j];
                match row.iter_mut().find(|(s, _)| *s == t) {
                    Some((_, y)) => *y = field.add(y, &x),
                    None => row.push((t, x)),
                }
            }
        }
        Self::from_table(field, labels, table, unit, Validation::Standard)
    }
}

/// Lifts of a basis of `J / J^2`; they generate `J` as a left and as a right ideal.
fn radical_generators<F: Field>(a: &FdAlgebra<F>, rad: &Subspace<F>) -> Vec<Vec<F::Elem>> {
    let k = a.field();
    let basis = rad.basis();
    let mut span = Subspace::new(k.clone(), a.dim());
    'outer: for u in basis {
        for v in basis {
            span.insert(a.mul(u, v));
            if span.dim() == rad.dim() {
                break 'outer;
            }
        }
    }
    let mut gens = Vec::new();
    for u in basis {
        if span.insert(u.clone()) {
            gens.push(u.clone());
        }
    }
    gens
}

pub(crate) fn kron_vec<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().flat_map(|x| b.iter().map(move |y| k.mul(x, y))).collect()
}

/// `A / I` for a two-sided ideal `I`, with the projection matrix.
pub fn quotient_by_ideal<F: Field>(a: &FdAlgebra<F>, ideal: &Subspace<F>) -> Result<(FdAlgebra<F>, Matrix<F>)> {
    let k = a.field();
    let d = a.dim();
    let keep = ideal.non_pivots();
    let n = keep.len();
    let mut table = Vec::with_capacity(n * n);
    for &i in &keep {
        for &j in &keep {
            let c = ideal.quotient_coords(&a.sparse_to_dense(a.product(i, j)));
            table.push(c.into_iter().enumerate().filter(|(_, v)| !k.is_zero(v)).collect());
        }
    }
    let unit = ideal.quotient_coords(a.unit());
    let labels = keep.iter().map(|&i| a.labels()[i].clone()).collect();
    let cols: Vec<Vec<F::Elem>> = (0..d).map(|i| ideal.quotient_coords(&a.basis_element(i))).collect();
    let proj = Matrix::from_columns(k.clone(), n, &cols);
    let q = FdAlgebra::from_table(k.clone(), labels, table, unit, Validation::Sampled)?;
    Ok((q, proj))
}

/// Splits idempotents of a semisimple algebra into primitive ones by
/// factoring minimal polynomials of candidate elements of the corner.
struct Splitter<'a, F: Field> {
    alg: &'a FdAlgebra<F>,
    rng: ChaCha8Rng,
}

pub const SPLIT_SEED: u64 = 0x5b1_17e5;

impl<'a, F: Field> Splitter<'a, F> {
    fn new(alg: &'a FdAlgebra<F>, seed: u64) -> Self {
        Splitter { alg, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn split_primitive(&mut self, e: &[F::Elem]) -> Result<Vec<Vec<F::Elem>>> {
        let alg = self.alg;
        let mut done = Vec::new();
        let mut work = vec![e.to_vec()];
        while let Some(f) = work.pop() {
            if alg.is_zero_elem(&f) {
                continue;
            }
            let corner = alg.corner_space(&f, &f);
            if corner.dim() == 1 {
                done.push(f);
                continue;
            }
            match self.find_split(&f, corner.basis())? {
                Some((e1, e2)) => {
                    work.push(e2);
                    work.push(e1);
                }
                None => {
                    return Err(Error::SplittingFailure(format!(
                        "corner of dimension {} has no splitting element; the field is not a splitting field",
                        corner.dim()
                    )))
                }
            }
        }
        // keep discovery order stable
        Ok(done)
    }

    fn find_split(&mut self, f: &[F::Elem], basis: &[Vec<F::Elem>]) -> Result<Option<(Vec<F::Elem>, Vec<F::Elem>)>> {
        let alg = self.alg;
        let n = basis.len();
        for c in basis {
            if let Some(s) = split_by(alg, c, f) {
                return Ok(Some(s));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let c = alg.add(&basis[i], &basis[j]);
                if let Some(s) = split_by(alg, &c, f) {
                    return Ok(Some(s));
                }
            }
        }
        let k = alg.field().clone();
        for round in 0..60 {
            let range = 1 + (round / 10) as i64 * 3;
            let mut c = alg.zero();
            for b in basis {
                let r = k.random_small(&mut self.rng, range);
                c = alg.add(&c, &alg.scale(b, &r));
            }
            if let Some(s) = split_by(alg, &c, f) {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }
}

/// If the minimal polynomial of `c` in the corner with unit `f` has two
/// coprime factors, the corresponding orthogonal idempotents.
fn split_by<F: Field>(alg: &FdAlgebra<F>, c: &[F::Elem], f: &[F::Elem]) -> Option<(Vec<F::Elem>, Vec<F::Elem>)> {
    let k = alg.field();
    let m = alg.min_poly_in(c, f);
    if m.len() <= 2 {
        return None;
    }
    let factors = poly::factor(k, &m);
    if factors.len() < 2 {
        return None;
    }
    let (p, e) = &factors[0];
    let mut g = vec![k.one()];
    for _ in 0..*e {
        g = poly::mul(k, &g, p);
    }
    let h = poly::divrem(k, &m, &g).0;
    let (_, _, t) = poly::ext_gcd(k, &g, &h);
    // t h = 1 mod g and 0 mod h
    let idem_poly = poly::rem(k, &poly::mul(k, &t, &h), &m);
    let e1 = alg.eval_poly_in(&idem_poly, c, f);
    let e2 = alg.sub(f, &e1);
    Some((e1, e2))
}

/// Primitive idempotents of the commutative subalgebra spanned by `space`
/// (which must contain `unit`), below `unit`.
fn split_commutative<F: Field>(alg: &FdAlgebra<F>, space: &[Vec<F::Elem>], unit: Vec<F::Elem>) -> Result<Vec<Vec<F::Elem>>> {
    let k = alg.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut done = Vec::new();
    let mut work = vec![unit];
    'outer: while let Some(f) = work.pop() {
        let sub = Subspace::spanned_by(k.clone(), alg.dim(), space.iter().map(|z| alg.mul(&f, z)));
        if sub.dim() <= 1 {
            done.push(f);
            continue;
        }
        let basis = sub.basis().to_vec();
        let mut candidates: Vec<Vec<F::Elem>> = basis.clone();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                candidates.push(alg.add(&basis[i], &basis[j]));
            }
        }
        for c in &candidates {
            if let Some((e1, e2)) = split_by(alg, c, &f) {
                work.push(e2);
                work.push(e1);
                continue 'outer;
            }
        }
        for round in 0..30 {
            let range = 1 + (round / 10) as i64 * 3;
            let mut c = alg.zero();
            for b in &basis {
                let r = k.random_small(&mut rng, range);
                c = alg.add(&c, &alg.scale(b, &r));
            }
            if let Some((e1, e2)) = split_by(alg, &c, &f) {
                work.push(e2);
                work.push(e1);
                continue 'outer;
            }
        }
        // local: all minimal polynomials are prime powers
        done.push(f);
    }
    Ok(done)
}
