//! The Brauer tree algebra of a line with `ell` vertices and multiplicity
//! one, its indecomposable modules and its Auslander generator.
//!
//! For `ell >= 3` the quiver has vertices `0..r` (`r = ell - 1`), arrows
//! `a_i: i -> i+1` and `b_i: i+1 -> i`, and products compose right to left.
//! The only nonzero products of two arrows are `b_i a_i = c_i` and
//! `a_i b_i = c_{i+1}`, so both cycles at an inner vertex agree.

use std::sync::Arc;

use crate::algebra::{FdAlgebra, SparseVec, Validation};
use crate::error::{guard, Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SparseMatrix};
use crate::module::{direct_sum, end_algebra, global_dimension, projective_indecomposables, FdModule, ProjDim};

/// Largest `ell` for which indecomposables are enumerated.
pub const MAX_STRING_ELL: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrauerLineSpec {
    pub ell: usize,
}

impl BrauerLineSpec {
    pub fn new(ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::InvalidInput(format!("a Brauer line needs at least 2 vertices, got {ell}")));
        }
        Ok(BrauerLineSpec { ell })
    }

    /// Number of simple modules.
    pub fn simples(&self) -> usize {
        self.ell - 1
    }
}

/// Basis positions for `ell >= 3`.
struct Layout {
    r: usize,
}

impl Layout {
    fn e(&self, i: usize) -> usize {
        i
    }
    fn a(&self, i: usize) -> usize {
        self.r + i
    }
    fn b(&self, i: usize) -> usize {
        2 * self.r - 1 + i
    }
    fn c(&self, i: usize) -> usize {
        3 * self.r - 2 + i
    }
    fn dim(&self) -> usize {
        4 * self.r - 2
    }
}

pub fn brauer_line_algebra<F: Field>(field: F, spec: BrauerLineSpec) -> Result<FdAlgebra<F>> {
    let k = field;
    if spec.ell == 2 {
        let table = vec![vec![(0, k.one())], vec![(1, k.one())], vec![(1, k.one())], Vec::new()];
        return FdAlgebra::from_table(k.clone(), vec!["1".into(), "x".into()], table, vec![k.one(), k.zero()], Validation::Standard);
    }
    let r = spec.ell - 1;
    let l = Layout { r };
    let d = l.dim();
    let mut table: Vec<SparseVec<F::Elem>> = vec![Vec::new(); d * d];
    let mut set = |x: usize, y: usize, z: usize| table[x * d + y] = vec![(z, k.one())];
    for i in 0..r {
        set(l.e(i), l.e(i), l.e(i));
        set(l.e(i), l.c(i), l.c(i));
        set(l.c(i), l.e(i), l.c(i));
    }
    for i in 0..r - 1 {
        // a_i = e_{i+1} a_i e_i, b_i = e_i b_i e_{i+1}
        set(l.e(i + 1), l.a(i), l.a(i));
        set(l.a(i), l.e(i), l.a(i));
        set(l.e(i), l.b(i), l.b(i));
        set(l.b(i), l.e(i + 1), l.b(i));
        set(l.b(i), l.a(i), l.c(i));
        set(l.a(i), l.b(i), l.c(i + 1));
    }
    let mut labels = Vec::with_capacity(d);
    labels.extend((0..r).map(|i| format!("e{}", i + 1)));
    labels.extend((0..r - 1).map(|i| format!("a{}", i + 1)));
    labels.extend((0..r - 1).map(|i| format!("b{}", i + 1)));
    labels.extend((0..r).map(|i| format!("c{}", i + 1)));
    let mut unit = vec![k.zero(); d];
    for i in 0..r {
        unit[l.e(i)] = k.one();
    }
    FdAlgebra::from_table(k, labels, table, unit, Validation::Standard)
}

/// Non-projective string modules followed by the projective indecomposables.
///
/// Strings are intervals `[i, j]` of vertices whose steps alternate between
/// `a` and `b^{-1}`; for `i < j` the first step may be either.
pub fn string_indecomposables<F: Field>(algebra: &Arc<FdAlgebra<F>>, spec: BrauerLineSpec) -> Result<Vec<FdModule<F>>> {
    guard(format!("string enumeration for ell = {}", spec.ell), spec.ell, MAX_STRING_ELL)?;
    let k = algebra.field().clone();
    let mut out = Vec::new();
    if spec.ell == 2 {
        let acts = vec![Matrix::identity(k.clone(), 1), Matrix::zeros(k.clone(), 1, 1)];
        out.push(FdModule::new(algebra.clone(), acts)?);
    } else {
        let r = spec.ell - 1;
        for i in 0..r {
            out.push(string_module(algebra, r, i, i, true)?);
        }
        for i in 0..r {
            for j in i + 1..r {
                out.push(string_module(algebra, r, i, j, true)?);
                out.push(string_module(algebra, r, i, j, false)?);
            }
        }
    }
    out.extend(projective_indecomposables(algebra)?);
    Ok(out)
}

/// The string on vertices `i..=j`; the step from `v` to `v + 1` is `a_v`
/// when `(v - i)` is even and `first_a`, alternating otherwise.
fn string_module<F: Field>(algebra: &Arc<FdAlgebra<F>>, r: usize, i: usize, j: usize, first_a: bool) -> Result<FdModule<F>> {
    let k = algebra.field().clone();
    let l = Layout { r };
    let n = j - i + 1;
    let mut rows: Vec<Vec<Vec<(usize, F::Elem)>>> = vec![vec![Vec::new(); n]; l.dim()];
    for v in i..=j {
        rows[l.e(v)][v - i].push((v - i, k.one()));
    }
    for v in i..j {
        let direct = ((v - i) % 2 == 0) == first_a;
        if direct {
            // a_v z_v = z_{v+1}
            rows[l.a(v)][v + 1 - i].push((v - i, k.one()));
        } else {
            // b_v z_{v+1} = z_v
            rows[l.b(v)][v - i].push((v + 1 - i, k.one()));
        }
    }
    let actions = rows
        .into_iter()
        .map(|r| SparseMatrix::from_row_entries(k.clone(), n, n, r))
        .collect();
    FdModule::from_sparse(algebra.clone(), n, actions)
}

/// The involution negating every `a_i` and `c_i` (for `ell = 2`: `x -> -x`).
pub fn arrow_sign_automorphism<F: Field>(field: &F, spec: BrauerLineSpec) -> Matrix<F> {
    let k = field;
    if spec.ell == 2 {
        return Matrix::from_rows(k.clone(), vec![vec![k.one(), k.zero()], vec![k.zero(), k.from_i64(-1)]]);
    }
    let l = Layout { r: spec.ell - 1 };
    let mut m = Matrix::identity(k.clone(), l.dim());
    for i in 0..l.r {
        m.set(l.c(i), l.c(i), k.from_i64(-1));
    }
    for i in 0..l.r - 1 {
        m.set(l.a(i), l.a(i), k.from_i64(-1));
    }
    m
}

/// Direct sum of one module from each indecomposable class.
pub fn auslander_generator<F: Field>(algebra: &Arc<FdAlgebra<F>>, spec: BrauerLineSpec) -> Result<FdModule<F>> {
    let ind = string_indecomposables(algebra, spec)?;
    direct_sum(algebra, &ind.iter().collect::<Vec<_>>())
}

/// `gldim End(M)` for the sum `M` of a complete list of indecomposables of a
/// non-semisimple algebra of finite type.
pub fn auslander_repdim<F: Field>(algebra: &Arc<FdAlgebra<F>>, indecomposables: &[FdModule<F>], cutoff: usize) -> Result<ProjDim> {
    if algebra.is_semisimple()? {
        return Err(Error::InvalidInput("the algebra is semisimple; its representation dimension is 0".into()));
    }
    let m = direct_sum(algebra, &indecomposables.iter().collect::<Vec<_>>())?;
    let end = end_algebra(&m)?;
    global_dimension(&end.algebra, cutoff)
}

pub fn repdim_finite_type<F: Field>(field: F, spec: BrauerLineSpec, cutoff: usize) -> Result<ProjDim> {
    let a = Arc::new(brauer_line_algebra(field, spec)?);
    let ind = string_indecomposables(&a, spec)?;
    auslander_repdim(&a, &ind, cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::module::{decompose, is_generator, is_indecomposable, is_isomorphic, simple_modules};

    fn alg(ell: usize) -> Arc<FdAlgebra<Rationals>> {
        Arc::new(brauer_line_algebra(Rationals, BrauerLineSpec::new(ell).unwrap()).unwrap())
    }

    #[test]
    fn dimensions_and_pims() {
        assert!(BrauerLineSpec::new(1).is_err());
        let a2 = alg(2);
        assert_eq!(a2.dim(), 2);
        assert_eq!(projective_indecomposables(&a2).unwrap().len(), 1);
        let a3 = alg(3);
        assert_eq!(a3.dim(), 6);
        let p3: Vec<usize> = projective_indecomposables(&a3).unwrap().iter().map(FdModule::dim).collect();
        assert_eq!(p3, vec![3, 3]);
        let a4 = alg(4);
        assert_eq!(a4.dim(), 10);
        let mut p4: Vec<usize> = projective_indecomposables(&a4).unwrap().iter().map(FdModule::dim).collect();
        p4.sort_unstable();
        assert_eq!(p4, vec![3, 3, 4]);
    }

    #[test]
    fn regular_module_of_ell_three() {
        let a = alg(3);
        let d = decompose(&FdModule::regular(a.clone())).unwrap();
        assert_eq!(d.dimension_multiset(), vec![3, 3]);
        assert_eq!(d.classes.len(), 2);
    }

    /// Cartan matrix: `dim e_i A e_j`.
    #[test]
    fn cartan_matrix_of_ell_three() {
        let a = alg(3);
        let e: Vec<Vec<_>> = (0..2).map(|i| a.basis_element(i)).collect();
        let c: Vec<Vec<usize>> = (0..2).map(|i| (0..2).map(|j| a.corner_space(&e[i], &e[j]).dim()).collect()).collect();
        assert_eq!(c, vec![vec![2, 1], vec![1, 2]]);
    }

    #[test]
    fn symmetric_and_selfinjective() {
        for ell in 2..=5 {
            let a = alg(ell);
            let d = a.dim();
            let r = ell - 1;
            // t = sum of socle coordinates
            let socle: Vec<usize> = if ell == 2 { vec![1] } else { (0..r).map(|i| 3 * r - 2 + i).collect() };
            let t = |v: &[_]| socle.iter().fold(rat0(), |acc, &i| acc + &v[i]);
            let mut gram = Matrix::zeros(Rationals, d, d);
            for i in 0..d {
                for j in 0..d {
                    let ij = t(&a.mul(&a.basis_element(i), &a.basis_element(j)));
                    let ji = t(&a.mul(&a.basis_element(j), &a.basis_element(i)));
                    assert_eq!(ij, ji);
                    gram.set(i, j, ij);
                }
            }
            assert!(gram.is_invertible(), "ell = {ell}");
            // simple socles, permuted bijectively (here: fixed)
            let pims = projective_indecomposables(&a).unwrap();
            let simples = simple_modules(&a).unwrap();
            for (c, p) in pims.iter().enumerate() {
                let homs: Vec<usize> = simples.iter().map(|s| crate::module::hom_basis(s, p).unwrap().dim()).collect();
                assert_eq!(homs.iter().sum::<usize>(), 1);
                assert_eq!(homs[c], 1);
            }
        }
    }

    fn rat0() -> num_rational::BigRational {
        crate::field::rat(0, 1)
    }

    #[test]
    fn indecomposable_lists() {
        for ell in 2..=4 {
            let a = alg(ell);
            let ind = string_indecomposables(&a, BrauerLineSpec::new(ell).unwrap()).unwrap();
            let e = ell - 1;
            assert_eq!(ind.len(), e * (e + 1));
            for (i, m) in ind.iter().enumerate() {
                assert!(is_indecomposable(m).unwrap());
                for n in &ind[i + 1..] {
                    assert!(!is_isomorphic(m, n).unwrap());
                }
            }
        }
        let a3 = alg(3);
        let dims: Vec<usize> = string_indecomposables(&a3, BrauerLineSpec::new(3).unwrap()).unwrap().iter().map(FdModule::dim).collect();
        assert_eq!(dims, vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn auslander_generators() {
        for (ell, dim) in [(2, 3), (3, 12)] {
            let a = alg(ell);
            let m = auslander_generator(&a, BrauerLineSpec::new(ell).unwrap()).unwrap();
            assert_eq!(m.dim(), dim);
            assert!(is_generator(&m).unwrap());
        }
    }

    #[test]
    fn repdim_is_two() {
        for ell in 2..=4 {
            assert_eq!(repdim_finite_type(Rationals, BrauerLineSpec::new(ell).unwrap(), 20).unwrap(), ProjDim::Finite(2));
        }
        // End has dimension 28, so the trace-form radical needs p > 28
        let f31 = PrimeField::new(31).unwrap();
        assert_eq!(repdim_finite_type(f31, BrauerLineSpec::new(3).unwrap(), 20).unwrap(), ProjDim::Finite(2));
    }

    #[test]
    fn sign_automorphism_is_an_action() {
        for ell in 2..=4 {
            let a = alg(ell);
            let spec = BrauerLineSpec::new(ell).unwrap();
            let g = Arc::new(crate::skew::FiniteGroup::cyclic(2).unwrap());
            let m = arrow_sign_automorphism(&Rationals, spec);
            let id = Matrix::identity(Rationals, a.dim());
            crate::skew::GroupAction::new(g, a, vec![id, m]).unwrap();
        }
    }

    #[test]
    fn semisimple_input_rejected() {
        let k = Arc::new(crate::skew::group_algebra(&crate::skew::FiniteGroup::cyclic(1).unwrap(), Rationals).unwrap());
        let s = simple_modules(&k).unwrap();
        assert!(auslander_repdim(&k, &s, 20).is_err());
    }
}
