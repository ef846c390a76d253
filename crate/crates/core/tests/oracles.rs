//! Exact solvers against the brute-force oracles on small seeded posets.

use posetdim::generators::{canonical_interval_order, standard_example};
use posetdim::random::seeded_poset;
use posetdim::realizer::{verify_boolean_realizer, verify_local_realizer, verify_realizer};
use posetdim::solvers::{bdim_exact, dim_exact, ldim_exact, oracle, Witness};

#[test]
fn solvers_match_oracles_on_seeded_posets() {
    for seed in 0..300u64 {
        let p = seeded_poset(seed, 1, 7);
        let d = dim_exact(&p, 8).unwrap();
        let l = ldim_exact(&p, 8).unwrap();
        let b = bdim_exact(&p, 8).unwrap();
        let od = oracle::dim_by_extensions(&p, 8).unwrap();
        let ol = oracle::ldim_by_shapes(&p, 8).unwrap();
        let ob = oracle::bdim_by_collisions(&p, 8).unwrap();
        assert_eq!((d.value, l.value, b.value), (od, ol, ob), "seed {seed}");
        match (&d.witness, &l.witness, &b.witness) {
            (Witness::Realizer(r), Witness::LocalRealizer(f), Witness::Boolean(bb)) => {
                assert!(verify_realizer(&p, r).unwrap());
                assert!(verify_local_realizer(&p, f).unwrap().valid);
                assert!(verify_boolean_realizer(&p, bb));
            }
            _ => panic!("wrong witness kinds"),
        }
    }
}

#[test]
fn standard_examples_match_oracles() {
    for n in 2..=3 {
        let p = standard_example(n).unwrap();
        assert_eq!(oracle::dim_by_extensions(&p, 4).unwrap(), n);
        assert_eq!(oracle::ldim_by_shapes(&p, 4).unwrap(), n);
        assert_eq!(oracle::bdim_by_collisions(&p, 4).unwrap(), n);
    }
}

#[test]
fn small_interval_orders_match_oracles() {
    // I_3 has 6 elements; I_4 and up exceed the oracle range.
    let p = canonical_interval_order(3).unwrap();
    assert_eq!(dim_exact(&p, 4).unwrap().value, oracle::dim_by_extensions(&p, 4).unwrap());
    assert_eq!(ldim_exact(&p, 4).unwrap().value, oracle::ldim_by_shapes(&p, 4).unwrap());
    assert_eq!(bdim_exact(&p, 4).unwrap().value, oracle::bdim_by_collisions(&p, 4).unwrap());
}
