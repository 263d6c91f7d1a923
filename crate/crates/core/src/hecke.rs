//! Iwahori-Hecke algebras of type `A_{n-1}` in the `T_w` basis, with an
//! algebra-level block count compared against the core classification.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{FdAlgebra, SparseVec, Validation};
use crate::error::{guard, Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::partition::{blocks_of, HeckeParams, Partition};
use crate::skew::FiniteGroup;

/// Largest `n` for which `H_q(A_{n-1})` is built (dimension `n!`).
pub const MAX_HECKE_N: usize = 5;

/// Search bound for the multiplicative order of `q` in large finite fields.
const ORDER_SEARCH_LIMIT: u64 = 1 << 16;

/// A root of unity of order `m` in a degree `d` extension of `Q` has
/// `phi(m) <= d`, and `phi(m) >= sqrt(m / 2)`, so `m <= 2 d^2`.
fn order_bound<F: Field>(field: &F) -> u64 {
    match (field.order(), field.descriptor()) {
        (Some(q), _) => (q - 1).min(ORDER_SEARCH_LIMIT),
        (None, FieldDescriptor::Extension(m)) => {
            let d = m.len().saturating_sub(1) as u64;
            2 * d * d
        }
        (None, _) => 2,
    }
}

#[derive(Clone, Debug)]
pub struct HeckeAlgebra<F: Field> {
    pub params: HeckeParams,
    pub q: F::Elem,
    pub algebra: Arc<FdAlgebra<F>>,
    /// Basis permutations, lexicographic (identity first).
    pub perms: Vec<Vec<usize>>,
    /// Basis index of `T_i = T_{s_i}` for `i = 1..n-1`.
    pub generators: Vec<usize>,
}

/// Multiplicative order of `q`, `None` if infinite (or beyond the search bound).
pub fn multiplicative_order<F: Field>(field: &F, q: &F::Elem) -> Option<usize> {
    if field.is_zero(q) {
        return None;
    }
    let mut x = q.clone();
    for k in 1..=order_bound(field) {
        if field.is_one(&x) {
            return Some(k as usize);
        }
        x = field.mul(&x, q);
    }
    None
}

/// `ell` is the order of `q`, or the characteristic when `q = 1`.
pub fn hecke_params<F: Field>(field: &F, n: usize, q: &F::Elem) -> Result<HeckeParams> {
    if field.is_zero(q) {
        return Err(Error::InvalidInput("q must be nonzero".into()));
    }
    let p = field.characteristic();
    let q_is_one = field.is_one(q);
    let ell = if q_is_one { (p > 0).then_some(p as usize) } else { multiplicative_order(field, q) };
    // q = ±1 lies in every prime field
    let q_in_prime_field = field.order() == Some(p) || field.is_one(&field.mul(q, q));
    Ok(HeckeParams { n, ell, charp: p, q_is_one, q_in_prime_field })
}

/// Coxeter length: the number of inversions.
pub fn length(w: &[usize]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

/// `s_{i_1} ... s_{i_k}` with `k` the length, found by sorting descents away.
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut v = w.to_vec();
    let mut applied = Vec::new();
    while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) {
        v.swap(i, i + 1);
        applied.push(i);
    }
    applied.reverse();
    applied
}

pub fn hecke_algebra<F: Field>(field: F, n: usize, q: F::Elem) -> Result<HeckeAlgebra<F>> {
    guard(format!("Hecke algebra of S_{n}"), n, MAX_HECKE_N)?;
    let params = hecke_params(&field, n, &q)?;
    let group = FiniteGroup::symmetric_group(n)?;
    let perms: Vec<Vec<usize>> = (0..group.order()).map(|g| group.permutation(g).expect("permutation group").to_vec()).collect();
    let index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let d = perms.len();
    let k = field.clone();
    let qm1 = k.sub(&q, &k.one());
    // right multiplication by T_{s_i} on a dense coefficient vector
    let times_s = |x: &[F::Elem], i: usize| -> Vec<F::Elem> {
        let mut out = vec![k.zero(); d];
        for (w, c) in x.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let p = &perms[w];
            let mut ws = p.clone();
            ws.swap(i, i + 1);
            let t = index[&ws];
            if p[i] < p[i + 1] {
                k.add_assign(&mut out[t], c);
            } else {
                k.add_mul_assign(&mut out[t], c, &q);
                k.add_mul_assign(&mut out[w], c, &qm1);
            }
        }
        out
    };
    let words: Vec<Vec<usize>> = perms.iter().map(|p| reduced_word(p)).collect();
    let mut table: Vec<SparseVec<F::Elem>> = vec![Vec::new(); d * d];
    for u in 0..d {
        for v in 0..d {
            let mut x = vec![k.zero(); d];
            x[u] = k.one();
            for &i in &words[v] {
                x = times_s(&x, i);
            }
            table[u * d + v] = x.into_iter().enumerate().filter(|(_, c)| !k.is_zero(c)).collect();
        }
    }
    let labels = perms.iter().map(|p| format!("T{}", p.iter().map(|x| (x + 1).to_string()).collect::<String>())).collect();
    let mut unit = vec![k.zero(); d];
    unit[0] = k.one();
    let algebra = FdAlgebra::from_table(k, labels, table, unit, Validation::Standard)?;
    let generators = (0..n.saturating_sub(1))
        .map(|i| {
            let mut s: Vec<usize> = (0..n).collect();
            s.swap(i, i + 1);
            index[&s]
        })
        .collect();
    let h = HeckeAlgebra { params, q, algebra: Arc::new(algebra), perms, generators };
    h.verify_relations()?;
    Ok(h)
}

impl<F: Field> HeckeAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `T_w` for a permutation given as an image list.
    pub fn basis_index(&self, w: &[usize]) -> Option<usize> {
        self.perms.iter().position(|p| p == w)
    }

    /// Quadratic, braid and commutation relations, checked exactly.
    pub fn verify_relations(&self) -> Result<()> {
        let a = &self.algebra;
        let t: Vec<Vec<F::Elem>> = self.generators.iter().map(|&g| a.basis_element(g)).collect();
        let one = a.unit().to_vec();
        let fail = |what: String| Err(Error::InvalidInput(format!("Hecke relation fails: {what}")));
        for (i, ti) in t.iter().enumerate() {
            let lhs = a.mul(&a.add(ti, &one), &a.sub(ti, &a.scale(&one, &self.q)));
            if !a.is_zero_elem(&lhs) {
                return fail(format!("(T{0}+1)(T{0}-q) = 0", i + 1));
            }
        }
        for i in 0..t.len() {
            for j in 0..t.len() {
                if j == i + 1 {
                    let l = a.mul(&a.mul(&t[i], &t[j]), &t[i]);
                    let r = a.mul(&a.mul(&t[j], &t[i]), &t[j]);
                    if l != r {
                        return fail(format!("braid relation at {}", i + 1));
                    }
                }
                if i.abs_diff(j) >= 2 && a.mul(&t[i], &t[j]) != a.mul(&t[j], &t[i]) {
                    return fail(format!("T{} T{} = T{} T{}", i + 1, j + 1, j + 1, i + 1));
                }
            }
        }
        Ok(())
    }
}

/// Number of standard tableaux of shape `lambda` (hook length formula).
pub fn standard_tableaux(lambda: &Partition) -> u128 {
    let n = lambda.size();
    let conj: Vec<usize> = (0..lambda.part(0)).map(|j| lambda.parts().iter().filter(|&&p| p > j).count()).collect();
    let num: u128 = (1..=n as u128).product();
    let mut den: u128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            den *= (row - j + conj[j] - i - 1) as u128;
        }
    }
    num / den
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombinatorialBlock {
    pub core: Partition,
    pub weight: usize,
    pub members: usize,
    /// `sum over members of (number of standard tableaux)^2`.
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeckeBlockReport {
    pub n: usize,
    pub ell: Option<usize>,
    pub algebra_blocks: usize,
    /// `dim(A e)` per central primitive idempotent `e`, sorted decreasing.
    pub algebra_block_dims: Vec<usize>,
    pub combinatorial: Vec<CombinatorialBlock>,
    pub semisimple: bool,
    pub counts_match: bool,
    pub dims_match: bool,
}

pub fn hecke_block_crosscheck<F: Field>(h: &HeckeAlgebra<F>) -> Result<HeckeBlockReport> {
    let a = &h.algebra;
    let central = a.central_primitive_idempotents()?;
    let mut algebra_block_dims: Vec<usize> = central.iter().map(|e| a.left_mul_matrix(e).rank()).collect();
    algebra_block_dims.sort_unstable_by(|x, y| y.cmp(x));
    let n = h.params.n;
    let combinatorial: Vec<CombinatorialBlock> = match h.params.ell {
        Some(ell) if ell >= 2 => blocks_of(n, ell)?
            .into_iter()
            .map(|b| CombinatorialBlock {
                dim: b.members.iter().map(|m| standard_tableaux(m).pow(2) as usize).sum(),
                core: b.core,
                weight: b.weight,
                members: b.members.len(),
            })
            .collect(),
        _ => Partition::all(n)
            .into_iter()
            .map(|m| CombinatorialBlock { dim: standard_tableaux(&m).pow(2) as usize, core: m, weight: 0, members: 1 })
            .collect(),
    };
    let mut comb_dims: Vec<usize> = combinatorial.iter().map(|b| b.dim).collect();
    comb_dims.sort_unstable_by(|x, y| y.cmp(x));
    Ok(HeckeBlockReport {
        n,
        ell: h.params.ell,
        algebra_blocks: central.len(),
        counts_match: central.len() == combinatorial.len(),
        dims_match: comb_dims == algebra_block_dims,
        algebra_block_dims,
        combinatorial,
        semisimple: a.is_semisimple()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rationals, SimpleExtension};
    use crate::skew::group_algebra;

    #[test]
    fn reduced_words_have_length_many_letters() {
        for p in [vec![0, 1, 2], vec![2, 1, 0], vec![1, 2, 0], vec![3, 1, 0, 2]] {
            let w = reduced_word(&p);
            assert_eq!(w.len(), length(&p));
            let mut v: Vec<usize> = (0..p.len()).collect();
            for &i in &w {
                // v <- v s_i
                v.swap(i, i + 1);
            }
            assert_eq!(v, p);
        }
    }

    #[test]
    fn quadratic_relation_for_n2() {
        let q = rat(-1, 1);
        let h = hecke_algebra(Rationals, 2, q.clone()).unwrap();
        let a = &h.algebra;
        let t = a.basis_element(h.generators[0]);
        // T^2 = (q - 1) T + q
        let expect = a.add(&a.scale(&t, &(q.clone() - rat(1, 1))), &a.scale(a.unit(), &q));
        assert_eq!(a.mul(&t, &t), expect);
        assert_eq!(h.params.ell, Some(2));
    }

    #[test]
    fn q_one_is_group_algebra() {
        let h = hecke_algebra(Rationals, 3, rat(1, 1)).unwrap();
        let g = group_algebra(&FiniteGroup::symmetric_group(3).unwrap(), Rationals).unwrap();
        assert_eq!(h.algebra.table(), g.table());
        assert_eq!(h.params.ell, None);
    }

    #[test]
    fn relations_hold_up_to_n5() {
        for n in 1..=4 {
            let h = hecke_algebra(Rationals, n, rat(-1, 1)).unwrap();
            assert_eq!(h.dim(), (1..=n).product::<usize>());
            h.verify_relations().unwrap();
        }
        assert!(hecke_algebra(Rationals, 2, rat(0, 1)).is_err());
        assert!(hecke_algebra(Rationals, 6, rat(2, 1)).is_err() || std::env::var("REPDIM_BUDGET").is_ok());
    }

    #[test]
    fn hook_lengths() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(standard_tableaux(&p(&[2, 1])), 2);
        assert_eq!(standard_tableaux(&p(&[3, 2])), 5);
        assert_eq!(standard_tableaux(&p(&[4])), 1);
        let total: u128 = Partition::all(5).iter().map(|l| standard_tableaux(l).pow(2)).sum();
        assert_eq!(total, 120);
    }

    #[test]
    fn block_crosscheck_small() {
        let h = hecke_algebra(Rationals, 2, rat(-1, 1)).unwrap();
        let r = hecke_block_crosscheck(&h).unwrap();
        assert_eq!(r.algebra_blocks, 1);
        assert!(r.counts_match && r.dims_match && !r.semisimple);
        let h = hecke_algebra(Rationals, 3, rat(-1, 1)).unwrap();
        let r = hecke_block_crosscheck(&h).unwrap();
        assert!(r.counts_match && r.dims_match);
        assert_eq!(r.algebra_blocks, 2);
        // generic q: semisimple, one block per partition
        let h = hecke_algebra(Rationals, 3, rat(2, 1)).unwrap();
        let r = hecke_block_crosscheck(&h).unwrap();
        assert!(r.semisimple && r.counts_match);
        assert_eq!(r.algebra_blocks, 3);
    }

    #[test]
    fn cyclotomic_q() {
        let k = SimpleExtension::cyclotomic(3).unwrap();
        let q = k.generator();
        let h = hecke_algebra(k.clone(), 3, q).unwrap();
        assert_eq!(h.params.ell, Some(3));
        let r = hecke_block_crosscheck(&h).unwrap();
        assert!(r.counts_match && r.dims_match);
        // every partition of 3 has empty 3-core
        assert_eq!(r.algebra_blocks, 1);
    }
}
