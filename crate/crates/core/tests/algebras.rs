use std::sync::Arc;

use repdim_core::brauer::{arrow_sign_automorphism, brauer_line_algebra, BrauerLineSpec};
use repdim_core::hecke::hecke_algebra;
use repdim_core::linalg::Subspace;
use repdim_core::module::decompose;
use repdim_core::skew::{enveloping, group_algebra, skew_group_algebra, Bimodule, FiniteGroup, GroupAction};
use repdim_core::{FdAlgebra, Field, Matrix, PrimeField, Rationals, SimpleExtension};

fn corpus<F: Field>(k: F) -> Vec<FdAlgebra<F>> {
    let mut out = Vec::new();
    for ell in 2..=4 {
        out.push(brauer_line_algebra(k.clone(), BrauerLineSpec::new(ell).unwrap()).unwrap());
    }
    let dual = brauer_line_algebra(k.clone(), BrauerLineSpec::new(2).unwrap()).unwrap();
    out.push(dual.tensor(&dual).unwrap());
    out.push(group_algebra(&FiniteGroup::symmetric_group(3).unwrap(), k.clone()).unwrap());
    out.push(hecke_algebra(k.clone(), 3, k.from_i64(-1)).unwrap().algebra.as_ref().clone());
    out
}

fn check_radical_and_idempotents<F: Field>(a: &FdAlgebra<F>) {
    let d = a.dim();
    let rad = a.radical().unwrap().clone();
    // ideal
    for u in rad.basis() {
        for i in 0..d {
            let b = a.basis_element(i);
            assert!(rad.contains(&a.mul(&b, u)) && rad.contains(&a.mul(u, &b)));
        }
    }
    // nilpotent with exponent at most dim A
    let mut power = rad.clone();
    let mut steps = 1;
    while power.dim() > 0 {
        let prods: Vec<_> = power.basis().iter().flat_map(|x| rad.basis().iter().map(|y| a.mul(x, y))).collect();
        power = Subspace::spanned_by(a.field().clone(), d, prods);
        steps += 1;
        assert!(steps <= d + 1);
    }
    // primitive idempotents: orthogonal, summing to one
    let es = a.primitive_idempotents().unwrap();
    let mut sum = a.zero();
    for (i, e) in es.iter().enumerate() {
        sum = a.add(&sum, e);
        for (j, f) in es.iter().enumerate() {
            let p = a.mul(e, f);
            if i == j {
                assert_eq!(&p, e);
            } else {
                assert!(a.is_zero_elem(&p));
            }
        }
    }
    assert_eq!(sum, a.unit());
    // central idempotents: central, orthogonal, block dims add up
    let cs = a.central_primitive_idempotents().unwrap();
    let mut total = 0;
    for e in &cs {
        for i in 0..d {
            let b = a.basis_element(i);
            assert_eq!(a.mul(e, &b), a.mul(&b, e));
        }
        total += a.left_mul_matrix(e).rank();
    }
    assert_eq!(total, d);
}

#[test]
fn radical_and_idempotents_over_several_fields() {
    for a in corpus(Rationals) {
        check_radical_and_idempotents(&a);
    }
    for a in corpus(PrimeField::new(31).unwrap()) {
        check_radical_and_idempotents(&a);
    }
    for a in corpus(SimpleExtension::cyclotomic(3).unwrap()).into_iter().take(4) {
        check_radical_and_idempotents(&a);
    }
}

#[test]
fn skew_group_algebra_splits_into_twisted_bimodules() {
    for ell in [2, 3] {
        let spec = BrauerLineSpec::new(ell).unwrap();
        let a = Arc::new(brauer_line_algebra(Rationals, spec).unwrap());
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let act = GroupAction::new(g, a.clone(), vec![Matrix::identity(Rationals, a.dim()), arrow_sign_automorphism(&Rationals, spec)])
            .unwrap();
        let sk = skew_group_algebra(&act).unwrap();
        let env = enveloping(&a, &a).unwrap();
        let bim = Bimodule::from_algebra(&sk.algebra, a.clone(), &sk.embedding, a.clone(), &sk.embedding, env).unwrap();
        let d = decompose(&bim.module).unwrap();
        assert_eq!(d.dimension_multiset(), vec![a.dim(); 2]);
    }
}

#[test]
fn hecke_semisimplicity_matches_weight() {
    // q = -1 has ell = 2; zeta_3 has ell = 3; q = 5 in F_31 has ell = 3; q = 3 in Q is generic.
    for n in 1..=4 {
        let h = hecke_algebra(Rationals, n, Rationals.from_i64(-1)).unwrap();
        assert_eq!(h.algebra.is_semisimple().unwrap(), n / 2 == 0);
        let h = hecke_algebra(Rationals, n, Rationals.from_i64(3)).unwrap();
        assert!(h.algebra.is_semisimple().unwrap());
        let k = PrimeField::new(31).unwrap();
        let h = hecke_algebra(k, n, 5).unwrap();
        assert_eq!(h.algebra.is_semisimple().unwrap(), n / 3 == 0);
    }
    let k = SimpleExtension::cyclotomic(3).unwrap();
    for n in 1..=3 {
        let h = hecke_algebra(k.clone(), n, k.elem_from_json(&serde_json::json!(["0", "1"])).unwrap()).unwrap();
        assert_eq!(h.algebra.is_semisimple().unwrap(), n / 3 == 0);
    }
}

#[test]
fn algebras_roundtrip_through_json() {
    for a in corpus(Rationals) {
        let back = FdAlgebra::<Rationals>::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }
}
