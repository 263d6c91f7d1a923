//! Finite groups, group actions on algebras, skew group algebras, wreath
//! products, twisted, induced and restricted modules, and bimodules.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::algebra::{FdAlgebra, SparseVec, Validation};
use crate::error::{guard, Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SparseMatrix, Subspace};
use crate::module::{split_embedding, FdModule, SplitWitness};

/// Largest symmetric group built as a group.
pub const MAX_SYMMETRIC_DEGREE: usize = 6;
/// Largest number of tensor factors in a wreath product.
pub const MAX_WREATH_DEGREE: usize = 4;

/// A finite group given by its multiplication table, `table[g][h] = gh`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    /// Image lists `[sigma(0), ..., sigma(n-1)]` for permutation groups.
    perms: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup(format!("table must be {n}x{n} with entries below {n}")));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let h = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {} has no inverse", labels[g])))?;
            inverse.push(h);
        }
        for (a, b, c) in (0..n).cartesian_product(0..n).cartesian_product(0..n).map(|((a, b), c)| (a, b, c)) {
            if table[table[a][b]][c] != table[a][table[b][c]] {
                return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
            }
        }
        Ok(FiniteGroup { labels, table, identity, inverse, perms: None })
    }

    /// All permutations of `0..n` in lexicographic order (identity first),
    /// composed as functions: `(sigma tau)(i) = sigma(tau(i))`.
    pub fn symmetric_group(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("symmetric group of degree 0".into()));
        }
        guard(format!("symmetric group S_{n}"), n, MAX_SYMMETRIC_DEGREE)?;
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index[&compose(s, t)]).collect())
            .collect();
        let labels = perms.iter().map(|p| format!("[{}]", p.iter().map(|x| x + 1).join(","))).collect();
        let mut g = FiniteGroup::new(labels, table)?;
        g.perms = Some(perms);
        Ok(g)
    }

    /// `Z / n`, element `i` is the `i`-th power of the generator.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g^{i}") }).collect();
        FiniteGroup::new(labels, table)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }
    pub fn permutation(&self, g: usize) -> Option<&[usize]> {
        self.perms.as_ref().map(|p| p[g].as_slice())
    }
    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|g| (0..n).all(|h| self.table[g][h] == self.table[h][g]))
    }

    pub fn to_json(&self) -> Value {
        json!({"labels": self.labels, "table": self.table})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let labels: Vec<String> = serde_json::from_value(v.get("labels").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("group labels: {e}")))?;
        let table: Vec<Vec<usize>> = serde_json::from_value(v.get("table").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("group table: {e}")))?;
        FiniteGroup::new(labels, table)
    }
}

fn compose(s: &[usize], t: &[usize]) -> Vec<usize> {
    t.iter().map(|&i| s[i]).collect()
}

/// The group algebra `kG` with basis the group elements.
pub fn group_algebra<F: Field>(group: &FiniteGroup, field: F) -> Result<FdAlgebra<F>> {
    let n = group.order();
    let mut table = vec![Vec::new(); n * n];
    for g in 0..n {
        for h in 0..n {
            table[g * n + h] = vec![(group.mul(g, h), field.one())];
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[group.identity()] = field.one();
    FdAlgebra::from_table(field, group.labels.clone(), table, unit, Validation::Standard)
}

/// A homomorphism `G -> Aut(A)`; `matrices[g]` has column `j` equal to `g(b_j)`.
#[derive(Clone, Debug)]
pub struct GroupAction<F: Field> {
    group: Arc<FiniteGroup>,
    algebra: Arc<FdAlgebra<F>>,
    matrices: Vec<Matrix<F>>,
}

impl<F: Field> GroupAction<F> {
    /// Validates that every matrix is a unital algebra automorphism and that
    /// `g -> matrices[g]` is a homomorphism.
    pub fn new(group: Arc<FiniteGroup>, algebra: Arc<FdAlgebra<F>>, matrices: Vec<Matrix<F>>) -> Result<Self> {
        let d = algebra.dim();
        if matrices.len() != group.order() || matrices.iter().any(|m| m.shape() != (d, d)) {
            return Err(Error::InvalidAction(format!("expected {} matrices of size {d}x{d}", group.order())));
        }
        if !matrices[group.identity()].is_identity() {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for (g, m) in matrices.iter().enumerate() {
            if !m.is_invertible() {
                return Err(Error::InvalidAction(format!("element {} acts non-invertibly", group.labels[g])));
            }
            if m.mul_vec(algebra.unit()) != algebra.unit() {
                return Err(Error::InvalidAction(format!("element {} does not fix the unit", group.labels[g])));
            }
            for i in 0..d {
                for j in 0..d {
                    let lhs = m.mul_vec(&algebra.mul(&algebra.basis_element(i), &algebra.basis_element(j)));
                    let rhs = algebra.mul(&m.column(i), &m.column(j));
                    if lhs != rhs {
                        return Err(Error::InvalidAction(format!(
                            "element {} is not multiplicative at ({i}, {j})",
                            group.labels[g]
                        )));
                    }
                }
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if matrices[g].mul(&matrices[h]) != matrices[group.mul(g, h)] {
                    return Err(Error::InvalidAction(format!(
                        "not a homomorphism at ({}, {})",
                        group.labels[g], group.labels[h]
                    )));
                }
            }
        }
        Ok(GroupAction { group, algebra, matrices })
    }

    pub fn trivial(group: Arc<FiniteGroup>, algebra: Arc<FdAlgebra<F>>) -> Self {
        let id = Matrix::identity(algebra.field().clone(), algebra.dim());
        let matrices = vec![id; group.order()];
        GroupAction { group, algebra, matrices }
    }

    /// Place permutation on `A^{⊗n}` (basis index `i_1 ... i_n` in base
    /// `dim A`, first factor most significant):
    /// `sigma(a_1 ⊗ ... ⊗ a_n) = a_{sigma^-1(1)} ⊗ ... ⊗ a_{sigma^-1(n)}`.
    pub fn place_permutation(group: Arc<FiniteGroup>, base_dim: usize, power: Arc<FdAlgebra<F>>) -> Result<Self> {
        let k = power.field().clone();
        let d = power.dim();
        let mut matrices = Vec::with_capacity(group.order());
        for g in 0..group.order() {
            let sigma = group
                .permutation(g)
                .ok_or_else(|| Error::InvalidAction("place permutation needs a permutation group".into()))?;
            let n = sigma.len();
            if base_dim.checked_pow(n as u32) != Some(d) {
                return Err(Error::InvalidAction(format!("algebra of dimension {d} is not a {n}-th tensor power of dimension {base_dim}")));
            }
            let mut m = Matrix::zeros(k.clone(), d, d);
            for src in 0..d {
                let digits = to_digits(src, base_dim, n);
                // position sigma(i) of the image receives factor i
                let mut img = vec![0; n];
                for i in 0..n {
                    img[sigma[i]] = digits[i];
                }
                m.set(from_digits(&img, base_dim), src, k.one());
            }
            matrices.push(m);
        }
        GroupAction::new(group, power, matrices)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }
    pub fn algebra(&self) -> &Arc<FdAlgebra<F>> {
        &self.algebra
    }
    pub fn matrix(&self, g: usize) -> &Matrix<F> {
        &self.matrices[g]
    }

    /// `g(a)`.
    pub fn apply(&self, g: usize, a: &[F::Elem]) -> Vec<F::Elem> {
        self.matrices[g].mul_vec(a)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.to_json(),
            "algebra": self.algebra.to_json(),
            "matrices": self.matrices.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let group = FiniteGroup::from_json(v.get("group").ok_or_else(|| Error::Parse("missing \"group\"".into()))?)?;
        let algebra = FdAlgebra::<F>::from_json(v.get("algebra").ok_or_else(|| Error::Parse("missing \"algebra\"".into()))?)?;
        let d = algebra.dim();
        let mats = v.get("matrices").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing \"matrices\"".into()))?;
        let matrices = mats
            .iter()
            .map(|m| Matrix::from_json(algebra.field().clone(), m, d))
            .collect::<Result<Vec<_>>>()?;
        GroupAction::new(Arc::new(group), Arc::new(algebra), matrices)
    }
}

fn to_digits(mut x: usize, base: usize, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for i in (0..n).rev() {
        d[i] = x % base;
        x /= base;
    }
    d
}

fn from_digits(d: &[usize], base: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * base + x)
}

/// `A[G]` with basis `b_i ⊗ g` at index `i * |G| + g`.
#[derive(Clone, Debug)]
pub struct SkewGroupAlgebra<F: Field> {
    pub algebra: Arc<FdAlgebra<F>>,
    pub action: GroupAction<F>,
    /// `lambda -> lambda ⊗ e`, a `dim A[G] x dim A` matrix.
    pub embedding: Matrix<F>,
}

impl<F: Field> SkewGroupAlgebra<F> {
    pub fn group_order(&self) -> usize {
        self.action.group.order()
    }
    pub fn base(&self) -> &Arc<FdAlgebra<F>> {
        &self.action.algebra
    }
    pub fn index(&self, i: usize, g: usize) -> usize {
        i * self.group_order() + g
    }
}

/// `(lambda ⊗ g)(lambda' ⊗ g') = lambda g(lambda') ⊗ gg'`.
pub fn skew_group_algebra<F: Field>(action: &GroupAction<F>) -> Result<SkewGroupAlgebra<F>> {
    let a = &action.algebra;
    let grp = &action.group;
    let k = a.field().clone();
    if !k.is_unit_integer(grp.order() as u64) {
        return Err(Error::GroupOrderNotInvertible { order: grp.order() as u64, p: k.characteristic() });
    }
    let (d, n) = (a.dim(), grp.order());
    let dim = d * n;
    let mut table: Vec<SparseVec<F::Elem>> = vec![Vec::new(); dim * dim];
    // g(b_j) for every g, j
    let images: Vec<Vec<Vec<F::Elem>>> = (0..n).map(|g| (0..d).map(|j| action.matrices[g].column(j)).collect()).collect();
    for i in 0..d {
        for g in 0..n {
            for j in 0..d {
                let prod = a.mul(&a.basis_element(i), &images[g][j]);
                for h in 0..n {
                    let gh = grp.mul(g, h);
                    let row: SparseVec<F::Elem> = prod
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !k.is_zero(c))
                        .map(|(t, c)| (t * n + gh, c.clone()))
                        .collect();
                    table[(i * n + g) * dim + j * n + h] = row;
                }
            }
        }
    }
    let mut unit = vec![k.zero(); dim];
    for (i, c) in a.unit().iter().enumerate() {
        unit[i * n + grp.identity()] = c.clone();
    }
    let labels = a
        .labels()
        .iter()
        .flat_map(|l| grp.labels.iter().map(move |g| format!("{l}⊗{g}")))
        .collect();
    let alg = FdAlgebra::from_table(k.clone(), labels, table, unit, Validation::Standard)?;
    let mut embedding = Matrix::zeros(k.clone(), dim, d);
    for i in 0..d {
        embedding.set(i * n + grp.identity(), i, k.one());
    }
    Ok(SkewGroupAlgebra { algebra: Arc::new(alg), action: action.clone(), embedding })
}

/// `A ≀ S_n`: the skew group algebra of `A^{⊗n}` under place permutations.
pub fn wreath_product<F: Field>(a: &FdAlgebra<F>, n: usize) -> Result<SkewGroupAlgebra<F>> {
    guard(format!("wreath product degree {n}"), n, MAX_WREATH_DEGREE)?;
    let order: u64 = (1..=n as u64).product();
    let k = a.field();
    if !k.is_unit_integer(order) {
        return Err(Error::GroupOrderNotInvertible { order, p: k.characteristic() });
    }
    let power = Arc::new(a.tensor_power(n)?);
    let group = Arc::new(FiniteGroup::symmetric_group(n)?);
    let action = GroupAction::place_permutation(group, a.dim(), power)?;
    skew_group_algebra(&action)
}

/// `{_g}M`: same space, `lambda . m = g^-1(lambda) m`.
///
/// With this convention `twist(twist(M, g), h) = twist(M, hg)`.
pub fn twist<F: Field>(m: &FdModule<F>, action: &GroupAction<F>, g: usize) -> FdModule<F> {
    let phi = &action.matrices[action.group.inv(g)];
    let actions = (0..action.algebra.dim()).map(|i| m.action_of(&phi.column(i))).collect();
    FdModule::from_parts(m.algebra().clone(), m.dim(), actions, m.blocks().to_vec())
}

/// `A[G] ⊗_A M` with basis `g ⊗ m_j` at index `g * dim M + j`:
/// `(lambda ⊗ h)(g ⊗ m) = hg ⊗ (hg)^{-1}(lambda) m`.
pub fn induce<F: Field>(m: &FdModule<F>, skew: &SkewGroupAlgebra<F>) -> Result<FdModule<F>> {
    let base = skew.base();
    if !crate::algebra::same_algebra(base, m.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let k = m.field().clone();
    let grp = &skew.action.group;
    let (n, dm, d) = (grp.order(), m.dim(), base.dim());
    let dim = n * dm;
    // rho(x(b_i)) for every x, i
    let twisted: Vec<Vec<SparseMatrix<F>>> = (0..n)
        .map(|x| (0..d).map(|i| m.action_of(&skew.action.matrices[x].column(i))).collect())
        .collect();
    let mut actions = Vec::with_capacity(d * n);
    for i in 0..d {
        for h in 0..n {
            let mut rows: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); dim];
            for g in 0..n {
                let hg = grp.mul(h, g);
                let block = &twisted[grp.inv(hg)][i];
                for r in 0..dm {
                    for (c, v) in block.row(r) {
                        rows[hg * dm + r].push((g * dm + c, v.clone()));
                    }
                }
            }
            for row in rows.iter_mut() {
                row.sort_unstable_by_key(|x| x.0);
            }
            actions.push(SparseMatrix::from_row_entries(k.clone(), dim, dim, rows));
        }
    }
    Ok(FdModule::from_parts(skew.algebra.clone(), dim, actions, vec![dim]))
}

/// Restriction along `lambda -> lambda ⊗ e`.
pub fn restrict<F: Field>(m: &FdModule<F>, skew: &SkewGroupAlgebra<F>) -> Result<FdModule<F>> {
    if !crate::algebra::same_algebra(&skew.algebra, m.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let e = skew.action.group.identity();
    let actions = (0..skew.base().dim()).map(|i| m.action(skew.index(i, e)).clone()).collect();
    Ok(FdModule::from_parts(skew.base().clone(), m.dim(), actions, vec![m.dim()]))
}

/// Restriction along an arbitrary algebra map `B -> A` (columns: images of
/// the basis of `B`).
pub fn restrict_along<F: Field>(m: &FdModule<F>, b: &Arc<FdAlgebra<F>>, map: &Matrix<F>) -> Result<FdModule<F>> {
    if map.shape() != (m.algebra().dim(), b.dim()) {
        return Err(Error::Shape("algebra map has the wrong shape".into()));
    }
    let actions = (0..b.dim()).map(|i| m.action_of(&map.column(i))).collect();
    Ok(FdModule::from_parts(b.clone(), m.dim(), actions, vec![m.dim()]))
}

// ---------------------------------------------------------------------------
// Bimodules

/// `A ⊗ B^op`, the algebra whose left modules are `A-B`-bimodules.
pub fn enveloping<F: Field>(a: &FdAlgebra<F>, b: &FdAlgebra<F>) -> Result<Arc<FdAlgebra<F>>> {
    Ok(Arc::new(a.tensor(&b.opposite())?))
}

/// An `A-B`-bimodule, stored as a left module over `A ⊗ B^op` where
/// `(a ⊗ b) . m = a m b`.
#[derive(Clone, Debug)]
pub struct Bimodule<F: Field> {
    pub left: Arc<FdAlgebra<F>>,
    pub right: Arc<FdAlgebra<F>>,
    pub module: FdModule<F>,
    /// `m -> b_i m`
    left_actions: Vec<SparseMatrix<F>>,
    /// `m -> m b_j`
    right_actions: Vec<SparseMatrix<F>>,
}

impl<F: Field> Bimodule<F> {
    /// From commuting left and right actions; `env` must be `enveloping(A, B)`.
    pub fn from_actions(
        left: Arc<FdAlgebra<F>>,
        right: Arc<FdAlgebra<F>>,
        env: Arc<FdAlgebra<F>>,
        left_actions: Vec<SparseMatrix<F>>,
        right_actions: Vec<SparseMatrix<F>>,
    ) -> Result<Self> {
        if env.dim() != left.dim() * right.dim() || left_actions.len() != left.dim() || right_actions.len() != right.dim() {
            return Err(Error::Shape("bimodule actions do not match the algebras".into()));
        }
        let dim = left_actions.first().map_or(0, SparseMatrix::rows);
        let actions = left_actions
            .iter()
            .flat_map(|l| right_actions.iter().map(move |r| l.mul(r)))
            .collect();
        let module = FdModule::from_sparse(env, dim, actions)?;
        Ok(Bimodule { left, right, module, left_actions, right_actions })
    }

    /// An algebra `R` as an `A-B`-bimodule through algebra maps `A -> R`
    /// and `B -> R` (columns: images of basis elements).
    pub fn from_algebra(
        r: &FdAlgebra<F>,
        left: Arc<FdAlgebra<F>>,
        left_map: &Matrix<F>,
        right: Arc<FdAlgebra<F>>,
        right_map: &Matrix<F>,
        env: Arc<FdAlgebra<F>>,
    ) -> Result<Self> {
        let k = r.field().clone();
        let d = r.dim();
        let la = (0..left.dim())
            .map(|i| {
                let x = left_map.column(i);
                let cols: Vec<Vec<F::Elem>> = (0..d).map(|j| r.mul(&x, &r.basis_element(j))).collect();
                SparseMatrix::from_columns(k.clone(), d, &cols)
            })
            .collect();
        let ra = (0..right.dim())
            .map(|i| {
                let x = right_map.column(i);
                let cols: Vec<Vec<F::Elem>> = (0..d).map(|j| r.mul(&r.basis_element(j), &x)).collect();
                SparseMatrix::from_columns(k.clone(), d, &cols)
            })
            .collect();
        Self::from_actions(left, right, env, la, ra)
    }

    /// `A` as an `A-A`-bimodule.
    pub fn regular(a: Arc<FdAlgebra<F>>, env: Arc<FdAlgebra<F>>) -> Result<Self> {
        let id = Matrix::identity(a.field().clone(), a.dim());
        Self::from_algebra(&a.clone(), a.clone(), &id, a, &id, env)
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }
    pub fn left_action(&self, i: usize) -> &SparseMatrix<F> {
        &self.left_actions[i]
    }
    pub fn right_action(&self, j: usize) -> &SparseMatrix<F> {
        &self.right_actions[j]
    }

    /// `self ⊗_B other` for an `A-B`-bimodule `self` and a `B-C`-bimodule
    /// `other`; `env` must be `enveloping(A, C)`.
    pub fn tensor_over(&self, other: &Bimodule<F>, env: Arc<FdAlgebra<F>>) -> Result<Bimodule<F>> {
        if !crate::algebra::same_algebra(&self.right, &other.left) {
            return Err(Error::AlgebraMismatch);
        }
        let k = self.module.field().clone();
        let (dy, dx) = (self.dim(), other.dim());
        let total = dy * dx;
        // relations y b ⊗ x - y ⊗ b x over generators b of B
        let mut rel = Subspace::new(k.clone(), total);
        for &b in self.right.generators() {
            let yb = self.right_actions[b].to_dense();
            let bx = other.left_actions[b].to_dense();
            for y in 0..dy {
                for x in 0..dx {
                    let mut v = vec![k.zero(); total];
                    for y2 in 0..dy {
                        let c = yb.get(y2, y);
                        if !k.is_zero(c) {
                            k.add_assign(&mut v[y2 * dx + x], c);
                        }
                    }
                    for x2 in 0..dx {
                        let c = bx.get(x2, x);
                        if !k.is_zero(c) {
                            let cur = v[y * dx + x2].clone();
                            v[y * dx + x2] = k.sub(&cur, c);
                        }
                    }
                    rel.insert(v);
                }
            }
        }
        let keep = rel.non_pivots();
        let q = keep.len();
        let project = |op: &SparseMatrix<F>| {
            let cols: Vec<Vec<F::Elem>> = keep
                .iter()
                .map(|&j| {
                    let mut e = vec![k.zero(); total];
                    e[j] = k.one();
                    rel.quotient_coords(&op.mul_vec(&e))
                })
                .collect();
            SparseMatrix::from_columns(k.clone(), q, &cols)
        };
        let id_x = SparseMatrix::identity(k.clone(), dx);
        let id_y = SparseMatrix::identity(k.clone(), dy);
        let la = self.left_actions.iter().map(|l| project(&l.kronecker(&id_x))).collect();
        let ra = other.right_actions.iter().map(|r| project(&id_y.kronecker(r))).collect();
        Bimodule::from_actions(self.left.clone(), other.right.clone(), env, la, ra)
    }
}

/// Witness that `m` is a direct summand of `n` as bimodules.
pub fn summand_witness<F: Field>(m: &Bimodule<F>, n: &Bimodule<F>) -> Result<Option<SplitWitness<F>>> {
    split_embedding(&m.module, &n.module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rationals};
    use crate::module::{direct_sum, is_isomorphic};

    fn dual() -> Arc<FdAlgebra<Rationals>> {
        let z = rat(0, 1);
        let o = rat(1, 1);
        let c = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        Arc::new(FdAlgebra::new(Rationals, vec!["1".into(), "x".into()], c, vec![o, z]).unwrap())
    }

    fn sign_action(a: &Arc<FdAlgebra<Rationals>>) -> GroupAction<Rationals> {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let id = Matrix::identity(Rationals, 2);
        let s = Matrix::from_rows(Rationals, vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(-1, 1)]]);
        GroupAction::new(g, a.clone(), vec![id, s]).unwrap()
    }

    #[test]
    fn symmetric_groups() {
        let s3 = FiniteGroup::symmetric_group(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.permutation(s3.identity()).unwrap(), &[0, 1, 2]);
        assert!(!s3.is_abelian());
        for g in 0..6 {
            assert_eq!(s3.mul(g, s3.inv(g)), s3.identity());
        }
        assert!(FiniteGroup::symmetric_group(7).is_err() || std::env::var("REPDIM_BUDGET").is_ok());
        assert_eq!(FiniteGroup::from_json(&s3.to_json()).unwrap().order(), 6);
    }

    #[test]
    fn group_algebras() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let s3 = FiniteGroup::symmetric_group(3).unwrap();
        let a = group_algebra(&c2, Rationals).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());
        assert!(!group_algebra(&s3, Rationals).unwrap().is_commutative());
        let s2 = FiniteGroup::symmetric_group(2).unwrap();
        assert!(group_algebra(&s2, Rationals).unwrap().is_semisimple().unwrap());
    }

    #[test]
    fn skew_with_sign_action() {
        let a = dual();
        let act = sign_action(&a);
        let sk = skew_group_algebra(&act).unwrap();
        let l = &sk.algebra;
        assert_eq!(l.dim(), 4);
        // (x ⊗ g)^2 = x g(x) ⊗ e = -x^2 ⊗ e = 0
        let xg = l.basis_element(sk.index(1, 1));
        assert!(l.is_zero_elem(&l.mul(&xg, &xg)));
        // (1 ⊗ g)(x ⊗ e) = -x ⊗ g
        let g = l.basis_element(sk.index(0, 1));
        let x = l.basis_element(sk.index(1, 0));
        assert_eq!(l.mul(&g, &x), l.scale(&xg, &rat(-1, 1)));
        // embedding is multiplicative
        let e = &sk.embedding;
        assert_eq!(e.mul_vec(&a.mul(&a.basis_element(1), &a.basis_element(1))), l.mul(&e.column(1), &e.column(1)));
    }

    #[test]
    fn trivial_action_is_tensor_with_group_algebra() {
        let a = dual();
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let sk = skew_group_algebra(&GroupAction::trivial(c2.clone(), a.clone())).unwrap();
        let t = a.tensor(&group_algebra(&c2, Rationals).unwrap()).unwrap();
        assert_eq!(sk.algebra.table(), t.table());
    }

    #[test]
    fn place_permutation_convention() {
        // sigma = (0 1 2) -> (1 2 0): sigma(0) = 1, sigma(1) = 2, sigma(2) = 0
        let a = dual();
        let p = Arc::new(a.tensor_power(3).unwrap());
        let s3 = Arc::new(FiniteGroup::symmetric_group(3).unwrap());
        let g = (0..6).find(|&g| s3.permutation(g).unwrap() == [1, 2, 0]).unwrap();
        let act = GroupAction::place_permutation(s3, 2, p).unwrap();
        // x ⊗ 1 ⊗ 1 (index 4) goes to a_{sigma^-1(1)} ⊗ ... = 1 ⊗ x ⊗ 1 (index 2)
        let mut v = vec![rat(0, 1); 8];
        v[4] = rat(1, 1);
        let w = act.apply(g, &v);
        assert_eq!(w[2], rat(1, 1));
        assert_eq!(w.iter().filter(|c| **c != rat(0, 1)).count(), 1);
    }

    #[test]
    fn wreath_dimensions() {
        let a = dual();
        assert_eq!(wreath_product(&a, 1).unwrap().algebra.dim(), 2);
        let w = wreath_product(&a, 2).unwrap();
        assert_eq!(w.algebra.dim(), 8);
        // (x ⊗ 1 ⊗ s)(1 ⊗ x ⊗ e) = x·x ⊗ 1 ⊗ s = 0 and (1 ⊗ x ⊗ s)(1 ⊗ x ⊗ e) = 1 ⊗ x... by the wreath formula
        let s = 1; // the transposition
        let l = &w.algebra;
        let x1s = l.basis_element(w.index(2, s));
        let x2e = l.basis_element(w.index(1, 0));
        // a = x⊗1, sigma = s, b = 1⊗x: a_1 b_{s^-1(1)} ⊗ a_2 b_{s^-1(2)} = x·x ⊗ 1·1 = 0
        assert!(l.is_zero_elem(&l.mul(&x1s, &x2e)));
        let x1e = l.basis_element(w.index(2, 0));
        // a = 1⊗1, sigma = s, b = x⊗1: 1·b_2 ⊗ 1·b_1 = 1 ⊗ x
        let es = l.basis_element(w.index(0, s));
        assert_eq!(l.mul(&es, &x1e), l.basis_element(w.index(1, s)));
        assert!(wreath_product(&FdAlgebra::clone(&a), 5).is_err() || std::env::var("REPDIM_BUDGET").is_ok());
    }

    #[test]
    fn twists_compose() {
        let a = dual();
        let act = sign_action(&a);
        let m = FdModule::regular(a.clone());
        let t = twist(&m, &act, 0);
        assert_eq!(t.actions(), m.actions());
        let tt = twist(&twist(&m, &act, 1), &act, 1);
        assert_eq!(tt.actions(), m.actions());
        assert!(is_isomorphic(&twist(&m, &act, 1), &m).unwrap());
    }

    #[test]
    fn twists_compose_on_the_left() {
        let a = dual();
        let w = wreath_product(&a, 3).unwrap();
        let act = &w.action;
        let m = FdModule::regular(w.base().clone());
        let mut noncommuting = 0;
        for g in 0..6 {
            for h in 0..6 {
                let tt = twist(&twist(&m, act, g), act, h);
                let hg = act.group.mul(h, g);
                assert_eq!(tt.actions(), twist(&m, act, hg).actions());
                if hg != act.group.mul(g, h) && tt.actions() != twist(&m, act, act.group.mul(g, h)).actions() {
                    noncommuting += 1;
                }
            }
        }
        assert!(noncommuting > 0);
    }

    #[test]
    fn induce_restrict() {
        let a = dual();
        let act = sign_action(&a);
        let sk = skew_group_algebra(&act).unwrap();
        let r = FdModule::regular(a.clone());
        let ind = induce(&r, &sk).unwrap();
        ind.validate().unwrap();
        assert!(is_isomorphic(&ind, &FdModule::regular(sk.algebra.clone())).unwrap());
        let res = restrict(&ind, &sk).unwrap();
        let twists: Vec<FdModule<Rationals>> = (0..2).map(|g| twist(&r, &act, g)).collect();
        let sum = direct_sum(&a, &twists.iter().collect::<Vec<_>>()).unwrap();
        assert!(is_isomorphic(&res, &sum).unwrap());
        assert!(crate::module::is_generator(&ind).unwrap());
    }

    #[test]
    fn bimodule_witnesses() {
        let a = dual();
        let act = sign_action(&a);
        let sk = skew_group_algebra(&act).unwrap();
        let lg = sk.algebra.clone();
        let env_aa = enveloping(&a, &a).unwrap();
        let lam = Bimodule::regular(a.clone(), env_aa.clone()).unwrap();
        let lg_aa = Bimodule::from_algebra(&lg, a.clone(), &sk.embedding, a.clone(), &sk.embedding, env_aa).unwrap();
        let w = summand_witness(&lam, &lg_aa).unwrap().expect("Λ | Λ[G]");
        assert!(w.verify(&lam.module, &lg_aa.module));
        let d = crate::module::decompose(&lg_aa.module).unwrap();
        assert_eq!(d.dimension_multiset(), vec![2, 2]);

        let id = Matrix::identity(Rationals, lg.dim());
        let x = Bimodule::from_algebra(&lg, a.clone(), &sk.embedding, lg.clone(), &id, enveloping(&a, &lg).unwrap()).unwrap();
        let y = Bimodule::from_algebra(&lg, lg.clone(), &id, a.clone(), &sk.embedding, enveloping(&lg, &a).unwrap()).unwrap();
        let env_gg = enveloping(&lg, &lg).unwrap();
        let yx = y.tensor_over(&x, env_gg.clone()).unwrap();
        assert_eq!(yx.dim(), 8);
        let reg = Bimodule::regular(lg.clone(), env_gg).unwrap();
        let w = summand_witness(&reg, &yx).unwrap().expect("Λ[G] | Y ⊗ X");
        assert!(w.verify(&reg.module, &yx.module));
        assert!(summand_witness(&yx, &reg).unwrap().is_none());
    }
}
