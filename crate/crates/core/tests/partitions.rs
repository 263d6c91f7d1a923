use proptest::prelude::*;

use repdim_core::partition::{
    blocks_of, ell_core, ell_weight, is_core, is_rouquier_core, principal_block, rouquier_core, AbacusView, Partition,
};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..8, 0..7).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn core_is_idempotent(lambda in partition(), ell in 2usize..6) {
        let c = ell_core(&lambda, ell).unwrap();
        prop_assert_eq!(ell_core(&c, ell).unwrap(), c.clone());
        prop_assert!(is_core(&c, ell).unwrap());
        prop_assert_eq!(lambda.size(), ell_weight(&lambda, ell).unwrap() * ell + c.size());
    }

    #[test]
    fn beta_numbers_roundtrip(lambda in partition(), extra in 0usize..5) {
        let beta = lambda.beta_numbers(lambda.len() + extra).unwrap();
        prop_assert_eq!(Partition::from_beta_numbers(&beta).unwrap(), lambda);
    }

    #[test]
    fn abacus_weight_is_bead_count_independent(lambda in partition(), ell in 2usize..6, extra in 0usize..6) {
        let w = AbacusView::new(&lambda, ell, lambda.len() + extra).unwrap().weight();
        prop_assert_eq!(w, ell_weight(&lambda, ell).unwrap());
    }
}

#[test]
fn blocks_partition_and_principal_weight() {
    for n in 0..=12 {
        for ell in 2..=5 {
            let bs = blocks_of(n, ell).unwrap();
            let mut members: Vec<Partition> = bs.iter().flat_map(|b| b.members.clone()).collect();
            members.sort();
            let mut all = Partition::all(n);
            all.sort();
            assert_eq!(members, all);
            let pb = principal_block(n, ell).unwrap();
            assert_eq!(pb.weight, n / ell);
            assert_eq!(bs.iter().map(|b| b.weight).max().unwrap(), n / ell);
            assert!(pb.contains(&Partition::new(vec![n]).unwrap()) || n == 0);
        }
    }
}

#[test]
fn rouquier_cores_are_rouquier() {
    for ell in 2..=4 {
        for w in 1..=3 {
            let c = rouquier_core(ell, w).unwrap();
            assert!(is_core(&c, ell).unwrap());
            assert!(is_rouquier_core(&c, w, ell).unwrap(), "ell {ell} w {w}: {c}");
        }
    }
    // the empty core is Rouquier only for w <= 1
    assert!(is_rouquier_core(&Partition::empty(), 1, 3).unwrap());
    assert!(!is_rouquier_core(&Partition::empty(), 2, 3).unwrap());
}

#[test]
fn partitions_serialise_as_part_lists() {
    let p = Partition::new(vec![3, 1, 1]).unwrap();
    assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1,1]");
    let back: Partition = serde_json::from_str("[3,1,1]").unwrap();
    assert_eq!(back, p);
    assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
}
