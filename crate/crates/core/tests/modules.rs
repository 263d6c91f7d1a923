use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use repdim_core::brauer::{auslander_generator, brauer_line_algebra, repdim_finite_type, string_indecomposables, BrauerLineSpec};
use repdim_core::linalg::Subspace;
use repdim_core::module::{
    combine_pd, decompose, direct_sum, find_isomorphism, hom_basis, indecomposables_isomorphic, is_homomorphism,
    is_projective, projective_cover, projective_dimension, syzygy, FdModule, ProjDim,
};
use repdim_core::{FdAlgebra, Field, Rationals};

fn brauer(ell: usize) -> (Arc<FdAlgebra<Rationals>>, Vec<FdModule<Rationals>>) {
    let spec = BrauerLineSpec::new(ell).unwrap();
    let a = Arc::new(brauer_line_algebra(Rationals, spec).unwrap());
    let ind = string_indecomposables(&a, spec).unwrap();
    (a, ind)
}

fn random_vec<R: Rng>(rng: &mut R, n: usize) -> Vec<<Rationals as Field>::Elem> {
    (0..n).map(|_| Rationals.random_small(rng, 2)).collect()
}

/// A quotient of `A^2` by a submodule generated by one or two random vectors,
/// or such a submodule itself.
fn random_module<R: Rng>(rng: &mut R, a: &Arc<FdAlgebra<Rationals>>) -> FdModule<Rationals> {
    let reg = FdModule::regular(a.clone());
    let free = direct_sum(a, &[&reg, &reg]).unwrap();
    let gens: Vec<_> = (0..rng.gen_range(1..=2)).map(|_| random_vec(rng, free.dim())).collect();
    let (sub, incl) = free.submodule_generated(&gens);
    if rng.gen_bool(0.5) {
        sub
    } else {
        let span = Subspace::spanned_by(Rationals, free.dim(), (0..incl.cols()).map(|j| incl.column(j)));
        free.quotient(&span)
    }
}

#[test]
fn random_modules_decompose_into_listed_strings() {
    for ell in [3, 4] {
        let (a, list) = brauer(ell);
        let mut rng = ChaCha8Rng::seed_from_u64(ell as u64);
        for _ in 0..25 {
            let m = random_module(&mut rng, &a);
            assert!(m.dim() <= 2 * a.dim());
            if m.dim() == 0 {
                continue;
            }
            let d = decompose(&m).unwrap();
            for (rep, _) in &d.classes {
                let hits = list
                    .iter()
                    .filter(|x| x.dim() == rep.dim() && indecomposables_isomorphic(x, rep).unwrap())
                    .count();
                assert_eq!(hits, 1, "summand of dim {} not in the list", rep.dim());
            }
            let total: usize = d.summands.iter().map(|s| s.module.dim()).sum();
            assert_eq!(total, m.dim());
        }
    }
}

#[test]
fn repdim_of_brauer_lines_is_two() {
    for ell in 2..=5 {
        let spec = BrauerLineSpec::new(ell).unwrap();
        assert_eq!(repdim_finite_type(Rationals, spec, 20).unwrap(), ProjDim::Finite(2), "ell = {ell}");
    }
}

#[test]
fn covers_are_minimal_and_syzygies_have_no_projective_summands() {
    let (_, list) = brauer(4);
    for m in &list {
        let c = projective_cover(m).unwrap();
        assert_eq!(c.projective.top_multiplicities().unwrap(), m.top_multiplicities().unwrap());
        assert!(is_homomorphism(&c.projective, m, &c.epi));
        assert_eq!(c.epi.rank(), m.dim());
        if is_projective(m).unwrap() {
            continue;
        }
        let om = syzygy(m).unwrap();
        for s in decompose(&om).unwrap().summands {
            assert!(!is_projective(&s.module).unwrap());
        }
    }
}

#[test]
fn isomorphisms_and_homs_intertwine() {
    let (a, list) = brauer(3);
    let n = auslander_generator(&a, BrauerLineSpec::new(3).unwrap()).unwrap();
    for m in list.iter().take(4) {
        let h = hom_basis(m, &n).unwrap();
        for f in &h.basis {
            assert!(is_homomorphism(m, &n, f));
        }
        let iso = find_isomorphism(m, m).unwrap().expect("M is isomorphic to itself");
        assert!(iso.is_invertible() && is_homomorphism(m, m, &iso));
    }
}

#[test]
fn modules_roundtrip_through_json() {
    let (a, list) = brauer(3);
    for m in &list {
        let back = FdModule::from_json_over(a.clone(), &m.to_json()).unwrap();
        assert_eq!(back.actions(), m.actions());
    }
}

fn pd_corpus() -> (Vec<FdModule<Rationals>>, Vec<ProjDim>) {
    // a finite-global-dimension algebra: End of the Auslander module of k[x]/x^2
    let (a, _) = brauer(2);
    let n = auslander_generator(&a, BrauerLineSpec::new(2).unwrap()).unwrap();
    let e = repdim_core::module::end_algebra(&n).unwrap();
    let mut mods = repdim_core::module::simple_modules(&e.algebra).unwrap();
    mods.extend(repdim_core::module::projective_indecomposables(&e.algebra).unwrap());
    let pds = mods.iter().map(|m| projective_dimension(m, 20).unwrap()).collect();
    (mods, pds)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn pd_is_additive(i in 0usize..4, j in 0usize..4) {
        let (mods, pds) = pd_corpus();
        let (i, j) = (i % mods.len(), j % mods.len());
        let sum = direct_sum(mods[i].algebra(), &[&mods[i], &mods[j]]).unwrap();
        let pd = projective_dimension(&sum, 20).unwrap();
        prop_assert_eq!(pd, combine_pd(&[pds[i], pds[j]]));
    }

    #[test]
    fn pd_is_additive_for_selfinjective_algebras(i in 0usize..6, j in 0usize..6) {
        let (a, list) = brauer(3);
        let sum = direct_sum(&a, &[&list[i], &list[j]]).unwrap();
        let pi = projective_dimension(&list[i], 20).unwrap();
        let pj = projective_dimension(&list[j], 20).unwrap();
        let p = projective_dimension(&sum, 20).unwrap();
        prop_assert_eq!(p.finite().is_some(), pi.finite().is_some() && pj.finite().is_some());
        if let (Some(x), Some(y)) = (pi.finite(), pj.finite()) {
            prop_assert_eq!(p, ProjDim::Finite(x.max(y)));
        }
    }
}

#[test]
fn trivial_module_of_two_dual_numbers_has_complexity_two() {
    let (a, _) = brauer(2);
    let aa = Arc::new(a.tensor(&a).unwrap());
    let simples = repdim_core::module::simple_modules(&aa).unwrap();
    assert_eq!(simples.len(), 1);
    let c = repdim_core::module::complexity_estimate(&simples[0], 6).unwrap();
    assert_eq!(c.dims, vec![1, 3, 5, 7, 9, 11, 13]);
    assert_eq!(c.complexity, 2);
}
