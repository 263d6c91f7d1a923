//! Modules over finite-dimensional algebras and the homological engine:
//! Hom spaces, endomorphism algebras, Krull-Schmidt decomposition,
//! projective covers, syzygies, projective and global dimension.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{same_algebra, FdAlgebra, SparseVec, Validation, SPLIT_SEED};
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::{Matrix, SparseEchelon, SparseMatrix, Subspace};

/// Default cutoff for projective and global dimension.
pub const DEFAULT_CUTOFF: usize = 20;

/// Full multiplicativity check on construction up to this algebra dimension.
const MODULE_FULL_CHECK_DIM: usize = 64;

/// A left module: one action matrix per algebra basis element.
///
/// `blocks` lists the dimensions of a known direct-sum decomposition (the
/// actions are block diagonal with respect to it).
#[derive(Clone, Debug)]
pub struct FdModule<F: Field> {
    algebra: Arc<FdAlgebra<F>>,
    dim: usize,
    actions: Vec<SparseMatrix<F>>,
    blocks: Vec<usize>,
}

impl<F: Field> FdModule<F> {
    /// Validated construction from dense action matrices.
    pub fn new(algebra: Arc<FdAlgebra<F>>, actions: Vec<Matrix<F>>) -> Result<Self> {
        let dim = actions.first().map_or(0, Matrix::rows);
        let actions = actions.iter().map(SparseMatrix::from_dense).collect();
        Self::from_sparse(algebra, dim, actions)
    }

    /// Validated construction from sparse action matrices.
    pub fn from_sparse(algebra: Arc<FdAlgebra<F>>, dim: usize, actions: Vec<SparseMatrix<F>>) -> Result<Self> {
        if actions.len() != algebra.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                actions.len(),
                algebra.dim()
            )));
        }
        if actions.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidModule(format!("action matrices must be {dim}x{dim}")));
        }
        let m = FdModule { algebra, dim, actions, blocks: vec![dim] };
        m.validate()?;
        Ok(m)
    }

    /// No validation; for constructions that are correct by design.
    pub(crate) fn from_parts(algebra: Arc<FdAlgebra<F>>, dim: usize, actions: Vec<SparseMatrix<F>>, blocks: Vec<usize>) -> Self {
        debug_assert_eq!(actions.len(), algebra.dim());
        let blocks = if dim == 0 { Vec::new() } else { blocks };
        FdModule { algebra, dim, actions, blocks }
    }

    /// Unit acts as the identity and `rho(b_i) rho(b_j) = rho(b_i b_j)`.
    pub fn validate(&self) -> Result<()> {
        let a = &*self.algebra;
        let k = a.field();
        if !self.action_of(a.unit()).is_identity() && self.dim > 0 {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        let d = a.dim();
        let lefts: Vec<usize> = if d <= MODULE_FULL_CHECK_DIM { (0..d).collect() } else { a.generators().to_vec() };
        for &i in &lefts {
            for j in 0..d {
                let lhs = self.actions[i].mul(&self.actions[j]);
                let terms: Vec<(&F::Elem, &SparseMatrix<F>)> =
                    a.product(i, j).iter().map(|(t, c)| (c, &self.actions[*t])).collect();
                let rhs = SparseMatrix::linear_combination(k.clone(), self.dim, self.dim, &terms);
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!("action is not multiplicative at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<FdAlgebra<F>>) -> Self {
        let k = algebra.field().clone();
        let actions = (0..algebra.dim()).map(|_| SparseMatrix::zeros(k.clone(), 0, 0)).collect();
        FdModule { algebra, dim: 0, actions, blocks: Vec::new() }
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: Arc<FdAlgebra<F>>) -> Self {
        let d = algebra.dim();
        let k = algebra.field().clone();
        let actions = (0..d)
            .map(|t| {
                let cols: Vec<Vec<F::Elem>> = (0..d).map(|j| algebra.mul_left_basis(t, &algebra.basis_element(j))).collect();
                SparseMatrix::from_columns(k.clone(), d, &cols)
            })
            .collect();
        FdModule { algebra, dim: d, actions, blocks: vec![d] }
    }

    pub fn algebra(&self) -> &Arc<FdAlgebra<F>> {
        &self.algebra
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn actions(&self) -> &[SparseMatrix<F>] {
        &self.actions
    }
    pub fn action(&self, i: usize) -> &SparseMatrix<F> {
        &self.actions[i]
    }
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Forget the known block decomposition.
    pub fn with_single_block(mut self) -> Self {
        self.blocks = if self.dim == 0 { Vec::new() } else { vec![self.dim] };
        self
    }

    /// `rho(a)` for an algebra element `a`.
    pub fn action_of(&self, a: &[F::Elem]) -> SparseMatrix<F> {
        let terms: Vec<(&F::Elem, &SparseMatrix<F>)> = a.iter().zip(&self.actions).collect();
        SparseMatrix::linear_combination(self.field().clone(), self.dim, self.dim, &terms)
    }

    /// The `i`-th block as a module.
    pub fn block(&self, i: usize) -> FdModule<F> {
        let start: usize = self.blocks[..i].iter().sum();
        let len = self.blocks[i];
        self.restrict_to_range(start, len)
    }

    pub fn block_modules(&self) -> Vec<FdModule<F>> {
        (0..self.blocks.len()).map(|i| self.block(i)).collect()
    }

    fn restrict_to_range(&self, start: usize, len: usize) -> FdModule<F> {
        let k = self.field().clone();
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let entries = (start..start + len)
                    .map(|r| {
                        m.row(r)
                            .iter()
                            .filter(|(c, _)| *c >= start && *c < start + len)
                            .map(|(c, v)| (c - start, v.clone()))
                            .collect()
                    })
                    .collect();
                SparseMatrix::from_row_entries(k.clone(), len, len, entries)
            })
            .collect();
        FdModule::from_parts(self.algebra.clone(), len, actions, vec![len])
    }

    /// Column `j` of `rho(b_t)` for all `t`, i.e. `b_t m_j`.
    fn orbit_columns(&self, v: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        self.actions.iter().map(|m| m.mul_vec(v)).collect()
    }

    /// Submodule spanned (as a module) by the given vectors, with its
    /// inclusion matrix (`dim x k`, columns an echelon basis).
    pub fn submodule_generated(&self, vectors: &[Vec<F::Elem>]) -> (FdModule<F>, Matrix<F>) {
        let k = self.field().clone();
        let gens = self.algebra.generators().to_vec();
        let mut span = Subspace::new(k.clone(), self.dim);
        let mut queue: Vec<Vec<F::Elem>> = Vec::new();
        for v in vectors {
            if span.insert(v.clone()) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for &g in &gens {
                let w = self.actions[g].mul_vec(&v);
                if span.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        let sub = self.restrict_to_subspace(&span);
        (sub, span.basis_matrix())
    }

    /// Module on an invariant subspace (not checked).
    pub fn restrict_to_subspace(&self, span: &Subspace<F>) -> FdModule<F> {
        let k = self.field().clone();
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let cols: Vec<Vec<F::Elem>> = span.basis().iter().map(|u| span.coords_unchecked(&m.mul_vec(u))).collect();
                SparseMatrix::from_columns(k.clone(), span.dim(), &cols)
            })
            .collect();
        FdModule::from_parts(self.algebra.clone(), span.dim(), actions, vec![span.dim()])
    }

    /// Module on an invariant subspace, checking invariance.
    pub fn submodule(&self, span: &Subspace<F>) -> Result<FdModule<F>> {
        for m in &self.actions {
            for u in span.basis() {
                if !span.contains(&m.mul_vec(u)) {
                    return Err(Error::InvalidModule("subspace is not invariant".into()));
                }
            }
        }
        Ok(self.restrict_to_subspace(span))
    }

    /// `M / U` for an invariant subspace `U`, basis indexed by the non-pivot
    /// columns of `U`.
    pub fn quotient(&self, sub: &Subspace<F>) -> FdModule<F> {
        let k = self.field().clone();
        let keep = sub.non_pivots();
        let n = keep.len();
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let cols: Vec<Vec<F::Elem>> = keep
                    .iter()
                    .map(|&j| {
                        let mut e = vec![k.zero(); self.dim];
                        e[j] = k.one();
                        sub.quotient_coords(&m.mul_vec(&e))
                    })
                    .collect();
                SparseMatrix::from_columns(k.clone(), n, &cols)
            })
            .collect();
        FdModule::from_parts(self.algebra.clone(), n, actions, vec![n])
    }

    /// `rad(A) M`.
    pub fn radical_submodule(&self) -> Result<Subspace<F>> {
        let pd = self.algebra.pim_data()?;
        let k = self.field().clone();
        let mut span = Subspace::new(k.clone(), self.dim);
        for r in &pd.rad_generators {
            let m = self.action_of(r).transpose();
            for row in 0..m.rows() {
                if m.row(row).is_empty() {
                    continue;
                }
                let mut col = vec![k.zero(); self.dim];
                for (i, v) in m.row(row) {
                    col[*i] = v.clone();
                }
                span.insert(col);
                if span.is_full() {
                    return Ok(span);
                }
            }
        }
        Ok(span)
    }

    /// Multiplicity of each simple (by class) in the top `M / rad M`.
    pub fn top_multiplicities(&self) -> Result<Vec<usize>> {
        Ok(self.top_generators()?.iter().map(Vec::len).collect())
    }

    /// For each class `c`, vectors in `e_c M` whose images form a basis of
    /// `e_c (M / rad M)`.
    fn top_generators(&self) -> Result<Vec<Vec<Vec<F::Elem>>>> {
        let pd = self.algebra.pim_data()?;
        let k = self.field().clone();
        let mut span = self.radical_submodule()?;
        let mut out = Vec::new();
        for e in &pd.reps {
            let mut chosen = Vec::new();
            let m = self.action_of(e).transpose();
            for row in 0..m.rows() {
                if span.is_full() {
                    break;
                }
                if m.row(row).is_empty() {
                    continue;
                }
                let mut col = vec![k.zero(); self.dim];
                for (i, v) in m.row(row) {
                    col[*i] = v.clone();
                }
                if span.insert(col.clone()) {
                    chosen.push(col);
                }
            }
            out.push(chosen);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.algebra.to_json(),
            "dim": self.dim,
            "actions": self.actions.iter().map(|m| m.to_dense().to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let alg = FdAlgebra::<F>::from_json(v.get("algebra").ok_or_else(|| Error::Parse("missing \"algebra\"".into()))?)?;
        Self::from_json_over(Arc::new(alg), v)
    }

    /// Parse against an already-known algebra (the inline algebra, if any, is ignored).
    pub fn from_json_over(algebra: Arc<FdAlgebra<F>>, v: &Value) -> Result<Self> {
        let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing \"dim\"".into()))? as usize;
        let acts = v.get("actions").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing \"actions\"".into()))?;
        let actions = acts
            .iter()
            .map(|m| Matrix::from_json(algebra.field().clone(), m, dim).map(|m| SparseMatrix::from_dense(&m)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_sparse(algebra, dim, actions)
    }

    /// SHA-256 of the canonical JSON serialization.
    pub fn content_hash(&self) -> String {
        content_hash(&self.to_json())
    }
}

pub fn content_hash(v: &Value) -> String {
    let s = serde_json::to_string(v).expect("json serialization");
    hex::encode(Sha256::digest(s.as_bytes()))
}

fn check_same<F: Field>(m: &FdModule<F>, n: &FdModule<F>) -> Result<()> {
    if same_algebra(&m.algebra, &n.algebra) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// Block-diagonal direct sum; blocks of the operands are kept.
pub fn direct_sum<F: Field>(algebra: &Arc<FdAlgebra<F>>, modules: &[&FdModule<F>]) -> Result<FdModule<F>> {
    for m in modules {
        if !same_algebra(algebra, &m.algebra) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let k = algebra.field().clone();
    let dim = modules.iter().map(|m| m.dim).sum();
    let actions = (0..algebra.dim())
        .map(|t| {
            let parts: Vec<&SparseMatrix<F>> = modules.iter().map(|m| &m.actions[t]).collect();
            SparseMatrix::block_diagonal(k.clone(), &parts)
        })
        .collect();
    let blocks = modules.iter().flat_map(|m| m.blocks.iter().copied()).collect();
    Ok(FdModule::from_parts(algebra.clone(), dim, actions, blocks))
}

// ---------------------------------------------------------------------------
// Hom spaces

/// A basis of `Hom_A(M, N)` as `dim N x dim M` matrices.
///
/// Basis element `s` is 1 at entry `free[s]` (row-major index) and every
/// other basis element vanishes there, so coordinates are read off directly.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix<F>>,
    pub free: Vec<usize>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism in the basis.
    pub fn coords(&self, x: &Matrix<F>) -> Vec<F::Elem> {
        let c = self.source_dim;
        self.free.iter().map(|&f| x.get(f / c, f % c).clone()).collect()
    }

    pub fn combination(&self, field: &F, coeffs: &[F::Elem]) -> Matrix<F> {
        let mut out = Matrix::zeros(field.clone(), self.target_dim, self.source_dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out.add_scaled_assign(c, b);
        }
        out
    }
}

/// `X rho_M(g) = rho_N(g) X` for all algebra generators `g`.
pub fn hom_basis<F: Field>(m: &FdModule<F>, n: &FdModule<F>) -> Result<HomSpace<F>> {
    check_same(m, n)?;
    let k = m.field().clone();
    let (dm, dn) = (m.dim, n.dim);
    let nvars = dm * dn;
    let mut sys = SparseEchelon::new(k.clone(), nvars);
    if nvars > 0 {
        'gens: for &g in m.algebra.generators() {
            let rm_t = m.actions[g].transpose();
            let rn = &n.actions[g];
            // entry (p, q): sum_s X[p][s] rho_M[s][q] - sum_s rho_N[p][s] X[s][q]
            for p in 0..dn {
                for q in 0..dm {
                    let mut row: Vec<(usize, F::Elem)> = Vec::new();
                    for (s, v) in rm_t.row(q) {
                        row.push((p * dm + s, v.clone()));
                    }
                    for (s, v) in rn.row(p) {
                        row.push((s * dm + q, k.neg(v)));
                    }
                    sys.push(&row);
                    if sys.is_full() {
                        break 'gens;
                    }
                }
            }
        }
    }
    let free = sys.free_columns();
    let basis = sys
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_vec(k.clone(), dn, dm, v).expect("shape"))
        .collect();
    Ok(HomSpace { source_dim: dm, target_dim: dn, basis, free })
}

/// Whether `x` intertwines the actions of every basis element.
pub fn is_homomorphism<F: Field>(m: &FdModule<F>, n: &FdModule<F>, x: &Matrix<F>) -> bool {
    if x.shape() != (n.dim, m.dim) {
        return false;
    }
    let sx = SparseMatrix::from_dense(x);
    (0..m.algebra.dim()).all(|t| sx.mul(&m.actions[t]) == n.actions[t].mul(&sx))
}

// ---------------------------------------------------------------------------
// Endomorphism algebras

/// `End_A(M)` with multiplication `f g = f ∘ g`.
#[derive(Clone, Debug)]
pub struct EndAlgebra<F: Field> {
    pub algebra: Arc<FdAlgebra<F>>,
    /// Basis element `s` as a `dim M x dim M` matrix.
    pub basis: Vec<Matrix<F>>,
}

impl<F: Field> EndAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn element_matrix(&self, coords: &[F::Elem]) -> Matrix<F> {
        let k = self.algebra.field();
        let n = self.basis.first().map_or(0, Matrix::rows);
        let mut out = Matrix::zeros(k.clone(), n, n);
        for (c, b) in coords.iter().zip(&self.basis) {
            out.add_scaled_assign(c, b);
        }
        out
    }
}

/// Computed blockwise along `M`'s known block decomposition; the block
/// projections are attached as idempotent hints.
pub fn end_algebra<F: Field>(m: &FdModule<F>) -> Result<EndAlgebra<F>> {
    let k = m.field().clone();
    let blocks = m.block_modules();
    let r = blocks.len();
    let offsets: Vec<usize> = blocks.iter().scan(0, |acc, b| {
        let o = *acc;
        *acc += b.dim;
        Some(o)
    }).collect();
    // homs[i][j] = Hom(M_j, M_i)
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).collect();
    let spaces: Vec<HomSpace<F>> = pairs
        .par_iter()
        .map(|&(i, j)| hom_basis(&blocks[j], &blocks[i]))
        .collect::<Result<Vec<_>>>()?;
    let hom = |i: usize, j: usize| &spaces[i * r + j];
    let mut start = vec![0usize; r * r];
    let mut total = 0;
    for i in 0..r {
        for j in 0..r {
            start[i * r + j] = total;
            total += hom(i, j).dim();
        }
    }
    let mut table: Vec<SparseVec<F::Elem>> = vec![Vec::new(); total * total];
    for i in 0..r {
        for j in 0..r {
            let hij = hom(i, j);
            for l in 0..r {
                let hjl = hom(j, l);
                let hil = hom(i, l);
                for (s, a) in hij.basis.iter().enumerate() {
                    for (t, b) in hjl.basis.iter().enumerate() {
                        let c = hil.coords(&a.mul(b));
                        let row: SparseVec<F::Elem> = c
                            .into_iter()
                            .enumerate()
                            .filter(|(_, v)| !k.is_zero(v))
                            .map(|(u, v)| (start[i * r + l] + u, v))
                            .collect();
                        table[(start[i * r + j] + s) * total + start[j * r + l] + t] = row;
                    }
                }
            }
        }
    }
    let mut unit = vec![k.zero(); total];
    let mut hints = Vec::with_capacity(r);
    for i in 0..r {
        let id = Matrix::identity(k.clone(), blocks[i].dim);
        let c = hom(i, i).coords(&id);
        let mut h = vec![k.zero(); total];
        for (u, v) in c.into_iter().enumerate() {
            unit[start[i * r + i] + u] = v.clone();
            h[start[i * r + i] + u] = v;
        }
        hints.push(h);
    }
    let labels = (0..r)
        .flat_map(|i| (0..r).map(move |j| (i, j)))
        .flat_map(|(i, j)| (0..hom(i, j).dim()).map(move |s| format!("h{i}_{j}_{s}")))
        .collect();
    let mut basis = Vec::with_capacity(total);
    for i in 0..r {
        for j in 0..r {
            for b in &hom(i, j).basis {
                let mut full = Matrix::zeros(k.clone(), m.dim, m.dim);
                for p in 0..b.rows() {
                    for q in 0..b.cols() {
                        let v = b.get(p, q);
                        if !k.is_zero(v) {
                            full.set(offsets[i] + p, offsets[j] + q, v.clone());
                        }
                    }
                }
                basis.push(full);
            }
        }
    }
    let alg = FdAlgebra::from_table(k, labels, table, unit, Validation::Sampled)?;
    let alg = if r > 1 { alg.with_idempotent_hints(hints)? } else { alg };
    Ok(EndAlgebra { algebra: Arc::new(alg), basis })
}

// ---------------------------------------------------------------------------
// Krull-Schmidt

/// An indecomposable summand with split maps `projection ∘ inclusion = id`.
#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub module: FdModule<F>,
    /// `dim M x dim X`
    pub inclusion: Matrix<F>,
    /// `dim X x dim M`
    pub projection: Matrix<F>,
}

/// Indecomposable summands of `M`, images of primitive idempotents of `End(M)`.
pub fn indecomposable_summands<F: Field>(m: &FdModule<F>, seed: u64) -> Result<Vec<Summand<F>>> {
    if m.dim == 0 {
        return Ok(Vec::new());
    }
    let k = m.field().clone();
    let end = end_algebra(m)?;
    let idems = end.algebra.primitive_idempotents_with(end.algebra.idempotent_hints(), seed)?;
    let mut out = Vec::with_capacity(idems.len());
    for e in idems {
        let phi = end.element_matrix(&e);
        let cols: Vec<Vec<F::Elem>> = (0..m.dim).map(|j| phi.column(j)).collect();
        let span = Subspace::spanned_by(k.clone(), m.dim, cols);
        let module = m.restrict_to_subspace(&span);
        let inclusion = span.basis_matrix();
        // projection: x -> coords of phi x
        let pcols: Vec<Vec<F::Elem>> = (0..m.dim).map(|j| span.coords_unchecked(&phi.column(j))).collect();
        let projection = Matrix::from_columns(k.clone(), span.dim(), &pcols);
        out.push(Summand { module, inclusion, projection });
    }
    Ok(out)
}

/// Indecomposable summands grouped into isomorphism classes.
#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    /// One representative per class with its multiplicity.
    pub classes: Vec<(FdModule<F>, usize)>,
    /// The summands in discovery order and the class of each.
    pub summands: Vec<Summand<F>>,
    pub class_of: Vec<usize>,
}

impl<F: Field> Decomposition<F> {
    /// Sorted multiset of summand dimensions.
    pub fn dimension_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.summands.iter().map(|s| s.module.dim).collect();
        v.sort_unstable();
        v
    }
}

pub fn decompose<F: Field>(m: &FdModule<F>) -> Result<Decomposition<F>> {
    decompose_seeded(m, SPLIT_SEED)
}

pub fn decompose_seeded<F: Field>(m: &FdModule<F>, seed: u64) -> Result<Decomposition<F>> {
    let summands = indecomposable_summands(m, seed)?;
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(summands.len());
    for (i, s) in summands.iter().enumerate() {
        let mut found = None;
        for (c, &r) in reps.iter().enumerate() {
            if indecomposables_isomorphic(&summands[r].module, &s.module)? {
                found = Some(c);
                break;
            }
        }
        match found {
            Some(c) => class_of.push(c),
            None => {
                class_of.push(reps.len());
                reps.push(i);
            }
        }
    }
    let classes = reps
        .iter()
        .enumerate()
        .map(|(c, &r)| (summands[r].module.clone(), class_of.iter().filter(|&&x| x == c).count()))
        .collect();
    Ok(Decomposition { classes, summands, class_of })
}

/// Whether `End(M)` is local, i.e. `M` is indecomposable (for `M != 0`).
pub fn is_indecomposable<F: Field>(m: &FdModule<F>) -> Result<bool> {
    if m.dim == 0 {
        return Ok(false);
    }
    let end = end_algebra(&m.clone().with_single_block())?;
    let rad = end.algebra.radical()?;
    Ok(end.dim() - rad.dim() == 1)
}

/// For indecomposables: isomorphic iff some basis element of `Hom(X, Y)` is
/// invertible (non-isomorphisms form a proper subspace).
pub fn indecomposables_isomorphic<F: Field>(x: &FdModule<F>, y: &FdModule<F>) -> Result<bool> {
    check_same(x, y)?;
    if x.dim != y.dim {
        return Ok(false);
    }
    if x.dim == 0 {
        return Ok(true);
    }
    let h = hom_basis(x, y)?;
    Ok(h.basis.iter().any(Matrix::is_invertible))
}

/// Exact isomorphism test: invariants, then seeded random combinations of
/// `Hom(M, N)`, then Krull-Schmidt comparison.
pub fn is_isomorphic<F: Field>(m: &FdModule<F>, n: &FdModule<F>) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// An explicit isomorphism `M -> N` if one exists.
pub fn find_isomorphism<F: Field>(m: &FdModule<F>, n: &FdModule<F>) -> Result<Option<Matrix<F>>> {
    check_same(m, n)?;
    if m.dim != n.dim {
        return Ok(None);
    }
    let k = m.field().clone();
    if m.dim == 0 {
        return Ok(Some(Matrix::zeros(k, 0, 0)));
    }
    if m.top_multiplicities()? != n.top_multiplicities()? {
        return Ok(None);
    }
    let h = hom_basis(m, n)?;
    if h.dim() == 0 {
        return Ok(None);
    }
    if let Some(b) = h.basis.iter().find(|b| b.is_invertible()) {
        return Ok(Some(b.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150_7e57);
    for round in 0..8 {
        let range = 1 + 2 * round as i64;
        let coeffs: Vec<F::Elem> = (0..h.dim()).map(|_| k.random_small(&mut rng, range)).collect();
        let x = h.combination(&k, &coeffs);
        if x.is_invertible() {
            return Ok(Some(x));
        }
    }
    // Krull-Schmidt: match summands of M and N and assemble an isomorphism
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.summands.len() != dn.summands.len() {
        return Ok(None);
    }
    let mut used = vec![false; dn.summands.len()];
    let mut iso = Matrix::zeros(k.clone(), n.dim, m.dim);
    for sm in &dm.summands {
        let mut matched = false;
        for (j, sn) in dn.summands.iter().enumerate() {
            if used[j] || sn.module.dim != sm.module.dim {
                continue;
            }
            let h = hom_basis(&sm.module, &sn.module)?;
            if let Some(phi) = h.basis.iter().find(|b| b.is_invertible()) {
                used[j] = true;
                matched = true;
                iso = iso.add(&sn.inclusion.mul(phi).mul(&sm.projection));
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    debug_assert!(iso.is_invertible());
    Ok(Some(iso))
}

/// For indecomposable `X`: split maps `phi: X -> M`, `psi: M -> X` with
/// `psi phi` invertible, if `X` is a summand of `M`.
///
/// By Krull-Schmidt it suffices to search block by block; within a block,
/// basis pairs suffice since non-invertible endomorphisms of `X` form an ideal.
pub fn summand_maps<F: Field>(x: &FdModule<F>, m: &FdModule<F>) -> Result<Option<(Matrix<F>, Matrix<F>)>> {
    check_same(x, m)?;
    let k = m.field().clone();
    let mut offset = 0;
    for blk in m.block_modules() {
        let bdim = blk.dim;
        if bdim >= x.dim {
            let into = hom_basis(x, &blk)?;
            if into.dim() > 0 {
                let out = hom_basis(&blk, x)?;
                for phi in &into.basis {
                    for psi in &out.basis {
                        let c = psi.mul(phi);
                        if let Some(cinv) = c.inverse() {
                            // embed into M; normalize so that psi' phi' = id
                            let mut phi_m = Matrix::zeros(k.clone(), m.dim, x.dim);
                            for p in 0..bdim {
                                for q in 0..x.dim {
                                    phi_m.set(offset + p, q, phi.get(p, q).clone());
                                }
                            }
                            let mut psi_m = Matrix::zeros(k.clone(), x.dim, m.dim);
                            let psi_n = cinv.mul(psi);
                            for p in 0..x.dim {
                                for q in 0..bdim {
                                    psi_m.set(p, offset + q, psi_n.get(p, q).clone());
                                }
                            }
                            return Ok(Some((phi_m, psi_m)));
                        }
                    }
                }
            }
        }
        offset += bdim;
    }
    Ok(None)
}

/// Split maps `iota: M -> N`, `pi: N -> M` with `pi iota = id`.
#[derive(Clone, Debug)]
pub struct SplitWitness<F: Field> {
    /// `dim N x dim M`
    pub iota: Matrix<F>,
    /// `dim M x dim N`
    pub pi: Matrix<F>,
}

impl<F: Field> SplitWitness<F> {
    /// The idempotent `iota pi` of `End(N)` cutting out the copy of `M`.
    pub fn idempotent(&self) -> Matrix<F> {
        self.iota.mul(&self.pi)
    }

    /// Both maps intertwine and `pi iota` is the identity.
    pub fn verify(&self, m: &FdModule<F>, n: &FdModule<F>) -> bool {
        is_homomorphism(m, n, &self.iota) && is_homomorphism(n, m, &self.pi) && self.pi.mul(&self.iota).is_identity()
    }
}

/// Exhibits `M` as a direct summand of `N` (for arbitrary `M`), matching
/// the indecomposable summands of `M` against unused summands of `N`.
/// `None` means the Krull-Schmidt multiplicities rule it out.
pub fn split_embedding<F: Field>(m: &FdModule<F>, n: &FdModule<F>) -> Result<Option<SplitWitness<F>>> {
    check_same(m, n)?;
    let k = m.field().clone();
    if m.dim > n.dim {
        return Ok(None);
    }
    let sm = indecomposable_summands(m, SPLIT_SEED)?;
    let sn = indecomposable_summands(n, SPLIT_SEED)?;
    let mut used = vec![false; sn.len()];
    let mut iota = Matrix::zeros(k.clone(), n.dim, m.dim);
    let mut pi = Matrix::zeros(k.clone(), m.dim, n.dim);
    for s in &sm {
        let mut found = false;
        for (j, t) in sn.iter().enumerate() {
            if used[j] || t.module.dim != s.module.dim {
                continue;
            }
            let h = hom_basis(&s.module, &t.module)?;
            if let Some((phi, inv)) = h.basis.iter().find_map(|b| b.inverse().map(|i| (b, i))) {
                used[j] = true;
                found = true;
                iota = iota.add(&t.inclusion.mul(phi).mul(&s.projection));
                pi = pi.add(&s.inclusion.mul(&inv).mul(&t.projection));
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    let w = SplitWitness { iota, pi };
    debug_assert!(w.verify(m, n));
    Ok(Some(w))
}

pub fn is_summand<F: Field>(x: &FdModule<F>, m: &FdModule<F>) -> Result<bool> {
    Ok(summand_maps(x, m)?.is_some())
}

/// Every indecomposable summand of `N` occurs in `M`.
pub fn in_add<F: Field>(m: &FdModule<F>, n: &FdModule<F>) -> Result<bool> {
    check_same(m, n)?;
    for blk in n.block_modules() {
        let d = decompose(&blk)?;
        for (x, _) in &d.classes {
            if !is_summand(x, m)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every projective indecomposable is a summand.
pub fn is_generator<F: Field>(m: &FdModule<F>) -> Result<bool> {
    let pims = projective_indecomposables(&m.algebra)?;
    for p in &pims {
        if !is_summand(p, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `A e` for one representative `e` per isomorphism class.
pub fn projective_indecomposables<F: Field>(a: &Arc<FdAlgebra<F>>) -> Result<Vec<FdModule<F>>> {
    let pd = a.pim_data()?;
    Ok(pd
        .pim_actions
        .iter()
        .zip(&pd.left_ideals)
        .map(|(acts, ideal)| FdModule::from_parts(a.clone(), ideal.dim(), acts.clone(), vec![ideal.dim()]))
        .collect())
}

/// Simple modules, one per class, in the order of the PIM classes.
pub fn simple_modules<F: Field>(a: &Arc<FdAlgebra<F>>) -> Result<Vec<FdModule<F>>> {
    let pd = a.pim_data()?;
    Ok(pd
        .simple_actions
        .iter()
        .zip(&pd.simple_dims)
        .map(|(acts, &d)| FdModule::from_parts(a.clone(), d, acts.clone(), vec![d]))
        .collect())
}

// ---------------------------------------------------------------------------
// Resolutions

/// Minimal projective cover `P -> M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    pub projective: FdModule<F>,
    /// `dim M x dim P`
    pub epi: Matrix<F>,
    /// Number of copies of each PIM class.
    pub multiplicities: Vec<usize>,
}

struct CoverData<F: Field> {
    /// `(class, generator)` per summand of `P`.
    summands: Vec<(usize, Vec<F::Elem>)>,
    epi_cols: Vec<Vec<F::Elem>>,
    multiplicities: Vec<usize>,
    pdim: usize,
}

fn cover_data<F: Field>(m: &FdModule<F>) -> Result<CoverData<F>> {
    let a = &m.algebra;
    let pd = a.pim_data()?;
    let gens = m.top_generators()?;
    let k = m.field().clone();
    let mut summands = Vec::new();
    let mut epi_cols = Vec::new();
    for (c, vs) in gens.iter().enumerate() {
        for v in vs {
            let orbit = m.orbit_columns(v);
            for u in pd.left_ideals[c].basis() {
                let mut col = vec![k.zero(); m.dim];
                for (coef, w) in u.iter().zip(&orbit) {
                    if k.is_zero(coef) {
                        continue;
                    }
                    for (x, y) in col.iter_mut().zip(w) {
                        if !k.is_zero(y) {
                            k.add_mul_assign(x, coef, y);
                        }
                    }
                }
                epi_cols.push(col);
            }
            summands.push((c, v.clone()));
        }
    }
    let multiplicities = gens.iter().map(Vec::len).collect();
    let pdim = epi_cols.len();
    Ok(CoverData { summands, epi_cols, multiplicities, pdim })
}

fn cover_module<F: Field>(a: &Arc<FdAlgebra<F>>, classes: &[usize]) -> Result<FdModule<F>> {
    let pims = projective_indecomposables(a)?;
    let parts: Vec<&FdModule<F>> = classes.iter().map(|&c| &pims[c]).collect();
    direct_sum(a, &parts)
}

pub fn projective_cover<F: Field>(m: &FdModule<F>) -> Result<ProjectiveCover<F>> {
    let cd = cover_data(m)?;
    let classes: Vec<usize> = cd.summands.iter().map(|(c, _)| *c).collect();
    let projective = cover_module(&m.algebra, &classes)?;
    let epi = Matrix::from_columns(m.field().clone(), m.dim, &cd.epi_cols);
    Ok(ProjectiveCover { projective, epi, multiplicities: cd.multiplicities })
}

/// Kernel of the projective cover, with actions computed on the kernel only.
pub fn syzygy<F: Field>(m: &FdModule<F>) -> Result<FdModule<F>> {
    let a = &m.algebra;
    let k = m.field().clone();
    let cd = cover_data(m)?;
    if cd.pdim == m.dim {
        return Ok(FdModule::zero(a.clone()));
    }
    let mut sys = SparseEchelon::new(k.clone(), cd.pdim);
    let epi_rows = SparseMatrix::from_columns(k.clone(), m.dim, &cd.epi_cols);
    for r in 0..m.dim {
        sys.push(epi_rows.row(r));
        if sys.is_full() {
            break;
        }
    }
    let kernel = sys.nullspace();
    let free = sys.free_columns();
    let pd = a.pim_data()?;
    let kd = kernel.len();
    // P acts block-diagonally through the PIM actions
    let mut offsets = Vec::with_capacity(cd.summands.len());
    let mut off = 0;
    for (c, _) in &cd.summands {
        offsets.push((off, *c));
        off += pd.left_ideals[*c].dim();
    }
    let actions = (0..a.dim())
        .map(|t| {
            let cols: Vec<Vec<F::Elem>> = kernel
                .iter()
                .map(|v| {
                    let mut img = vec![k.zero(); cd.pdim];
                    for &(o, c) in &offsets {
                        let n = pd.left_ideals[c].dim();
                        let part = pd.pim_actions[c][t].mul_vec(&v[o..o + n]);
                        img[o..o + n].clone_from_slice(&part);
                    }
                    free.iter().map(|&f| img[f].clone()).collect()
                })
                .collect();
            SparseMatrix::from_columns(k.clone(), kd, &cols)
        })
        .collect();
    Ok(FdModule::from_parts(a.clone(), kd, actions, vec![kd]))
}

pub fn is_projective<F: Field>(m: &FdModule<F>) -> Result<bool> {
    Ok(cover_data(m)?.pdim == m.dim)
}

/// Projective dimension with explicit certification of the infinite case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProjDim {
    Finite(usize),
    /// `Omega^repeat ≅ Omega^first` with `first < repeat`.
    Infinite { first: usize, repeat: usize },
    /// No zero syzygy and no repetition up to the cutoff.
    AtLeast(usize),
}

impl ProjDim {
    pub fn finite(&self) -> Option<usize> {
        match self {
            ProjDim::Finite(n) => Some(*n),
            _ => None,
        }
    }
    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjDim::Infinite { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            ProjDim::Finite(n) => json!({"kind": "finite", "value": n}),
            ProjDim::Infinite { first, repeat } => json!({"kind": "infinite", "first": first, "repeat": repeat}),
            ProjDim::AtLeast(n) => json!({"kind": "at-least", "value": n}),
        }
    }
}

impl fmt::Display for ProjDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjDim::Finite(n) => write!(f, "{n}"),
            ProjDim::Infinite { .. } => write!(f, "infinite"),
            ProjDim::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

pub fn projective_dimension<F: Field>(m: &FdModule<F>, cutoff: usize) -> Result<ProjDim> {
    let mut history: Vec<(FdModule<F>, Vec<usize>)> = Vec::new();
    let mut cur = m.clone();
    for n in 0..=cutoff {
        if cur.dim == 0 {
            return Ok(ProjDim::Finite(n.saturating_sub(1)));
        }
        if is_projective(&cur)? {
            return Ok(ProjDim::Finite(n));
        }
        let top = cur.top_multiplicities()?;
        for (j, (prev, ptop)) in history.iter().enumerate() {
            if prev.dim == cur.dim && *ptop == top && is_isomorphic(prev, &cur)? {
                return Ok(ProjDim::Infinite { first: j, repeat: n });
            }
        }
        let next = syzygy(&cur)?;
        history.push((cur, top));
        cur = next;
    }
    Ok(ProjDim::AtLeast(cutoff))
}

/// Maximum of the projective dimensions of the simple modules.
pub fn global_dimension<F: Field>(a: &Arc<FdAlgebra<F>>, cutoff: usize) -> Result<ProjDim> {
    let simples = simple_modules(a)?;
    let pds: Vec<ProjDim> = simples.par_iter().map(|s| projective_dimension(s, cutoff)).collect::<Result<_>>()?;
    Ok(combine_pd(&pds))
}

/// Supremum: any infinite wins, then any unresolved, else the maximum.
pub fn combine_pd(pds: &[ProjDim]) -> ProjDim {
    if let Some(inf) = pds.iter().find(|p| p.is_infinite()) {
        return *inf;
    }
    if let Some(at) = pds.iter().find(|p| matches!(p, ProjDim::AtLeast(_))) {
        return *at;
    }
    ProjDim::Finite(pds.iter().filter_map(ProjDim::finite).max().unwrap_or(0))
}

/// `M ⊠ N` over `A ⊗ B`, acting by Kronecker products of the actions.
/// `ab` must be `A.tensor(B)` (basis index `i * dim B + j`). The result is
/// the direct sum of `M_i ⊠ N_j` over the known blocks, in that order.
pub fn outer_tensor<F: Field>(m: &FdModule<F>, n: &FdModule<F>, ab: &Arc<FdAlgebra<F>>) -> Result<FdModule<F>> {
    if m.field() != n.field() || m.field() != ab.field() {
        return Err(Error::FieldMismatch("outer tensor product factors".into()));
    }
    if ab.dim() != m.algebra.dim() * n.algebra.dim() {
        return Err(Error::AlgebraMismatch);
    }
    let single = |x: &FdModule<F>, y: &FdModule<F>| {
        let actions = x.actions.iter().flat_map(|p| y.actions.iter().map(move |q| p.kronecker(q))).collect();
        let dim = x.dim * y.dim;
        FdModule::from_parts(ab.clone(), dim, actions, vec![dim])
    };
    let (mb, nb) = (m.block_modules(), n.block_modules());
    let parts: Vec<FdModule<F>> = mb.iter().flat_map(|x| nb.iter().map(move |y| (x, y))).map(|(x, y)| single(x, y)).collect();
    direct_sum(ab, &parts.iter().collect::<Vec<_>>())
}

/// One indecomposable summand per isomorphism class, each its own block.
/// `End` of the result is Morita equivalent to `End(M)`.
pub fn basic_module<F: Field>(m: &FdModule<F>, seed: u64) -> Result<FdModule<F>> {
    let mut reps: Vec<FdModule<F>> = Vec::new();
    for blk in m.block_modules() {
        for s in indecomposable_summands(&blk, seed)? {
            let mut seen = false;
            for r in &reps {
                if indecomposables_isomorphic(r, &s.module)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                reps.push(s.module);
            }
        }
    }
    direct_sum(&m.algebra, &reps.iter().collect::<Vec<_>>())
}

// ---------------------------------------------------------------------------
// Complexity

/// Growth of the minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityEstimate {
    /// `dim Omega^0, ..., dim Omega^steps`.
    pub dims: Vec<usize>,
    /// Fitted polynomial degree plus one; zero when the resolution stops.
    pub complexity: usize,
    /// Whether the tail is reproduced exactly by a polynomial of that degree.
    pub exact_fit: bool,
    /// Always true: a finite prefix is only evidence for an asymptotic notion.
    pub heuristic: bool,
}

pub fn complexity_estimate<F: Field>(m: &FdModule<F>, steps: usize) -> Result<ComplexityEstimate> {
    let mut dims = vec![m.dim];
    let mut cur = m.clone();
    for _ in 0..steps {
        if cur.dim == 0 {
            dims.push(0);
            continue;
        }
        cur = syzygy(&cur)?;
        dims.push(cur.dim);
    }
    let (complexity, exact_fit) = fit_growth(&dims);
    Ok(ComplexityEstimate { dims, complexity, exact_fit, heuristic: true })
}

/// Least-squares fit of degrees 0..=4 to the tail half; an exact fit of
/// degree `d` (with at least two spare points) gives `(d + 1, true)`, an
/// eventually zero sequence `(0, true)` and a periodic tail complexity 1. Otherwise complexity `c` is read off
/// the partial sums, which grow like `n^c` while periodic terms average out.
pub fn fit_growth(dims: &[usize]) -> (usize, bool) {
    let start = dims.len() / 2;
    let tail: Vec<(i64, i64)> = dims.iter().enumerate().skip(start).map(|(i, &d)| (i as i64, d as i64)).collect();
    if tail.iter().all(|&(_, d)| d == 0) {
        return (0, true);
    }
    // bounded: periodic over the tail half, or over the last two periods if longer
    let n = dims.len();
    if let Some(p) = (1..=n / 2).find(|&p| (start.min(n - 2 * p)..n - p).all(|i| dims[i] == dims[i + p])) {
        return (1, p == 1);
    }
    let q = Rationals;
    let zero = BigRational::from_integer(0.into());
    for deg in 0..=4usize {
        if tail.len() < deg + 3 {
            break;
        }
        if lsq_residual(&q, &tail, deg) == zero {
            return (deg + 1, true);
        }
    }
    let m = n.div_ceil(2);
    let s_n: usize = dims.iter().sum();
    let s_m: usize = dims[..m].iter().sum();
    if s_m == 0 || m == n {
        return (1, false);
    }
    let c = ((s_n as f64 / s_m as f64).ln() / (n as f64 / m as f64).ln()).round();
    (c.clamp(1.0, 5.0) as usize, false)
}

fn lsq_residual(q: &Rationals, pts: &[(i64, i64)], deg: usize) -> BigRational {
    let n = deg + 1;
    let rows: Vec<Vec<BigRational>> = pts
        .iter()
        .map(|&(x, _)| (0..n).map(|p| BigRational::from_integer(num_bigint::BigInt::from(x).pow(p as u32))).collect())
        .collect();
    let v = Matrix::from_rows(q.clone(), rows);
    let y: Vec<BigRational> = pts.iter().map(|&(_, y)| BigRational::from_integer(y.into())).collect();
    let vt = v.transpose();
    let normal = vt.mul(&v);
    let rhs = vt.mul_vec(&y);
    let coeffs = match normal.solve(&rhs) {
        crate::linalg::Solution::Consistent { particular, .. } => particular,
        crate::linalg::Solution::Inconsistent => unreachable!("normal equations are consistent"),
    };
    let fit = v.mul_vec(&coeffs);
    fit.iter().zip(&y).map(|(a, b)| (a - b) * (a - b)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FdAlgebra;
    use crate::field::rat;

    pub(crate) fn dual() -> Arc<FdAlgebra<Rationals>> {
        let z = rat(0, 1);
        let o = rat(1, 1);
        let c = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        Arc::new(FdAlgebra::new(Rationals, vec!["1".into(), "x".into()], c, vec![o, z]).unwrap())
    }

    fn trivial(a: &Arc<FdAlgebra<Rationals>>) -> FdModule<Rationals> {
        let one = Matrix::from_rows(Rationals, vec![vec![rat(1, 1)]]);
        let zero = Matrix::from_rows(Rationals, vec![vec![rat(0, 1)]]);
        FdModule::new(a.clone(), vec![one, zero]).unwrap()
    }

    #[test]
    fn hom_dimensions_over_dual_numbers() {
        let a = dual();
        let k = trivial(&a);
        let r = FdModule::regular(a.clone());
        assert_eq!(hom_basis(&k, &k).unwrap().dim(), 1);
        assert_eq!(hom_basis(&r, &r).unwrap().dim(), 2);
        assert_eq!(hom_basis(&k, &r).unwrap().dim(), 1);
        let s = direct_sum(&a, &[&k, &r]).unwrap();
        assert_eq!(end_algebra(&s).unwrap().dim(), 5);
        let kk = direct_sum(&a, &[&k, &k]).unwrap();
        assert_eq!(end_algebra(&kk).unwrap().dim(), 4);
        for b in &hom_basis(&k, &r).unwrap().basis {
            assert!(is_homomorphism(&k, &r, b));
        }
    }

    #[test]
    fn decomposition_and_isomorphism() {
        let a = dual();
        let k = trivial(&a);
        let r = FdModule::regular(a.clone());
        let kk = direct_sum(&a, &[&k, &k]).unwrap().with_single_block();
        let d = decompose(&kk).unwrap();
        assert_eq!(d.classes.len(), 1);
        assert_eq!(d.classes[0].1, 2);
        assert!(is_indecomposable(&r).unwrap());
        assert!(!is_isomorphic(&k, &r).unwrap());
        assert!(is_isomorphic(&r, &r).unwrap());
        assert!(in_add(&kk, &k).unwrap());
        assert!(!in_add(&k, &r).unwrap());
        assert!(is_generator(&r).unwrap());
        assert!(!is_generator(&k).unwrap());
        assert!(is_generator(&direct_sum(&a, &[&k, &r]).unwrap()).unwrap());
    }

    #[test]
    fn resolutions_over_dual_numbers() {
        let a = dual();
        let k = trivial(&a);
        let r = FdModule::regular(a.clone());
        let cover = projective_cover(&k).unwrap();
        assert_eq!(cover.projective.dim(), 2);
        assert!(is_homomorphism(&cover.projective, &k, &cover.epi));
        let om = syzygy(&k).unwrap();
        assert!(is_isomorphic(&om, &k).unwrap());
        assert_eq!(syzygy(&r).unwrap().dim(), 0);
        assert_eq!(projective_dimension(&r, 20).unwrap(), ProjDim::Finite(0));
        assert!(projective_dimension(&k, 20).unwrap().is_infinite());
        assert!(global_dimension(&a, 20).unwrap().is_infinite());
        let e = end_algebra(&direct_sum(&a, &[&k, &r]).unwrap()).unwrap();
        assert_eq!(global_dimension(&e.algebra, 20).unwrap(), ProjDim::Finite(2));
    }

    #[test]
    fn complexity_of_dual_numbers() {
        let a = dual();
        let k = trivial(&a);
        let c = complexity_estimate(&k, 6).unwrap();
        assert_eq!(c.dims, vec![1; 7]);
        assert_eq!(c.complexity, 1);
        let r = FdModule::regular(a.clone());
        assert_eq!(complexity_estimate(&r, 4).unwrap().complexity, 0);
    }

    #[test]
    fn growth_fit() {
        assert_eq!(fit_growth(&[1, 3, 5, 7, 9, 11, 13]), (2, true));
        assert_eq!(fit_growth(&(0..13).map(|n| 2 * n * n + 4 * n + 1).collect::<Vec<_>>()), (3, true));
        assert_eq!(fit_growth(&[5, 0, 0, 0]), (0, true));
        assert_eq!(fit_growth(&[2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4]), (1, false));
        assert_eq!(fit_growth(&[3, 7, 7, 3, 7, 7, 3, 7, 7, 3, 7, 7]), (1, false));
        assert_eq!(fit_growth(&[4, 10, 12, 10, 4, 10, 12, 10, 4]), (1, false));
        assert_eq!(fit_growth(&[4, 32, 40, 68, 76, 104, 112, 140, 148]), (2, false));
    }

    #[test]
    fn json_roundtrip_and_hash() {
        let a = dual();
        let k = trivial(&a);
        let back = FdModule::<Rationals>::from_json(&k.to_json()).unwrap();
        assert_eq!(back.content_hash(), k.content_hash());
        assert_eq!(k.content_hash().len(), 64);
    }
}
