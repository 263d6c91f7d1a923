use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use repdim_core::field::{rat, Field, FieldDescriptor, PrimeField, Rationals, SimpleExtension};
use repdim_core::poly::{expand, factor, make_monic};

fn axioms<F: Field>(k: &F, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || k.random_small(&mut rng, 5);
    for _ in 0..20 {
        let (a, b, c) = (draw(), draw(), draw());
        assert_eq!(k.add(&a, &b), k.add(&b, &a));
        assert_eq!(k.mul(&a, &b), k.mul(&b, &a));
        assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
        assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
        assert!(k.is_zero(&k.add(&a, &k.neg(&a))));
        assert_eq!(k.sub(&a, &b), k.add(&a, &k.neg(&b)));
        match k.inv(&a) {
            Some(ai) => assert!(k.is_one(&k.mul(&a, &ai))),
            None => assert!(k.is_zero(&a)),
        }
        let back = k.elem_from_json(&k.elem_to_json(&a)).unwrap();
        assert_eq!(back, a);
    }
}

#[test]
fn field_axioms_hold() {
    for seed in 0..4 {
        axioms(&Rationals, seed);
        axioms(&PrimeField::new(101).unwrap(), seed);
        axioms(&PrimeField::new(2).unwrap(), seed);
        axioms(&SimpleExtension::cyclotomic(5).unwrap(), seed);
    }
}

#[test]
fn extension_generator_is_a_root_of_unity() {
    for m in [3u64, 4, 5, 8] {
        let k = SimpleExtension::cyclotomic(m).unwrap();
        let z = k.elem_from_json(&serde_json::json!(["0", "1"])).unwrap();
        assert!(k.is_one(&k.pow(&z, m)));
        for d in 1..m {
            assert!(!k.is_one(&k.pow(&z, d)));
        }
    }
}

#[test]
fn descriptors_roundtrip() {
    let ds = [
        Rationals.descriptor(),
        PrimeField::new(13).unwrap().descriptor(),
        SimpleExtension::cyclotomic(3).unwrap().descriptor(),
    ];
    for d in ds {
        assert_eq!(FieldDescriptor::from_json(&d.to_json()).unwrap(), d);
    }
    assert!(PrimeField::new(12).is_err());
}

fn q(c: &[i64]) -> Vec<num_rational::BigRational> {
    c.iter().map(|&x| rat(x, 1)).collect()
}

#[test]
fn rational_factor_examples() {
    // x^4 + 1 is irreducible over Q
    let f = factor(&Rationals, &q(&[1, 0, 0, 0, 1]));
    assert_eq!(f, vec![(q(&[1, 0, 0, 0, 1]), 1)]);
    // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
    let f = factor(&Rationals, &q(&[-1, 0, 0, 0, 1]));
    assert_eq!(f.len(), 3);
    assert_eq!(expand(&Rationals, &f), q(&[-1, 0, 0, 0, 1]));
    // (x^2 - 2)^2 (x + 3)
    let g = expand(&Rationals, &[(q(&[-2, 0, 1]), 2), (q(&[3, 1]), 1)]);
    let f = factor(&Rationals, &g);
    assert_eq!(f, vec![(q(&[3, 1]), 1), (q(&[-2, 0, 1]), 2)]);
}

#[test]
fn finite_and_extension_factor_examples() {
    // x^4 + 1 splits into linear factors over F_17
    let k = PrimeField::new(17).unwrap();
    let f = factor(&k, &[1, 0, 0, 0, 1]);
    assert_eq!(f.len(), 4);
    assert!(f.iter().all(|(g, m)| g.len() == 2 && *m == 1));
    // x^2 + x + 1 splits over Q(zeta_3)
    let e = SimpleExtension::cyclotomic(3).unwrap();
    let one = e.one();
    let f = factor(&e, &[one.clone(), one.clone(), one]);
    assert_eq!(f.len(), 2);
    // x^p - x over F_p has p linear factors
    let k = PrimeField::new(5).unwrap();
    let f = factor(&k, &[0, 4, 0, 0, 0, 1]);
    assert_eq!(f.len(), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_factorisation_roundtrips(
        a in prop::collection::vec(-4i64..5, 1..4),
        b in prop::collection::vec(-4i64..5, 1..4),
        m in 1usize..3,
    ) {
        let mut pa = q(&a);
        pa.push(rat(1, 1));
        let mut pb = q(&b);
        pb.push(rat(1, 1));
        let f = expand(&Rationals, &[(pa, m), (pb, 1)]);
        let fs = factor(&Rationals, &f);
        prop_assert_eq!(expand(&Rationals, &fs), make_monic(&Rationals, &f));
    }

    #[test]
    fn prime_field_factorisation_roundtrips(c in prop::collection::vec(0u64..7, 1..7), p in prop::sample::select(vec![2u64, 3, 7, 31])) {
        let k = PrimeField::new(p).unwrap();
        let mut f: Vec<u64> = c.iter().map(|x| x % p).collect();
        f.push(1);
        let fs = factor(&k, &f);
        prop_assert_eq!(expand(&k, &fs), f);
    }
}
