//! Property suites over seeded random posets and graphs.

use proptest::prelude::*;

use posetdim::constructions::{bdim_remove_point_extend, dim_remove_point_extend};
use posetdim::decomposition::{
    cover_graph, pathwidth_exact, treewidth_exact, verify_decomposition, verify_path_decomposition, Graph,
};
use posetdim::generators::{canonical_interval_order, jmw, kelly, split, split_in_place, standard_example};
use posetdim::io::poset_to_json;
use posetdim::random::{rng, seeded_poset};
use posetdim::realizer::{query_string, verify_boolean_realizer, verify_local_realizer, verify_realizer};
use posetdim::solvers::{bdim_exact, dim_exact, ldim_exact, Witness};
use posetdim::{BitString, BooleanRealizer, PleFamily, Poset};
use rand::Rng;

fn poset(max: usize) -> impl Strategy<Value = Poset> {
    any::<u64>().prop_map(move |seed| seeded_poset(seed, 1, max))
}

fn dim_of(p: &Poset) -> (usize, PleFamily) {
    let c = dim_exact(p, 16).unwrap();
    match c.witness {
        Witness::Realizer(r) => (c.value, r),
        _ => unreachable!(),
    }
}

fn ldim_of(p: &Poset) -> usize {
    ldim_exact(p, 16).unwrap().value
}

fn bdim_of(p: &Poset) -> (usize, BooleanRealizer) {
    let c = bdim_exact(p, 8).unwrap();
    match c.witness {
        Witness::Boolean(b) => (c.value, b),
        _ => unreachable!(),
    }
}

fn remove(p: &Poset, x: usize) -> Poset {
    p.remove_point(x).poset
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn order_axioms_and_trichotomy(p in poset(12)) {
        prop_assert!(p.check_axioms());
        let inc = p.incomparable_pairs();
        for x in p.elements() {
            prop_assert!(!p.lt(x, x));
            for y in p.elements() {
                let cases = [p.lt(x, y), p.lt(y, x), x == y, inc.contains(&(x, y))];
                prop_assert_eq!(cases.iter().filter(|&&c| c).count(), 1);
                for z in p.elements() {
                    prop_assert!(!(p.lt(x, y) && p.lt(y, z)) || p.lt(x, z));
                }
            }
        }
    }

    #[test]
    fn width_certificate_is_min_max(p in poset(14)) {
        let w = p.width();
        prop_assert!(w.chains.is_valid_for(&p));
        prop_assert_eq!(w.antichain.len(), w.width);
        prop_assert_eq!(w.chains.chains.len(), w.width);
        for (i, &a) in w.antichain.iter().enumerate() {
            for &b in &w.antichain[i + 1..] {
                prop_assert!(p.incomparable(a, b));
            }
        }
    }

    #[test]
    fn duality(p in poset(12)) {
        let d = p.dual();
        prop_assert_eq!(&d.dual(), &p);
        prop_assert_eq!(d.width().width, p.width().width);
        prop_assert_eq!(d.height(), p.height());
        for x in p.elements() {
            for y in p.elements() {
                prop_assert_eq!(d.lt(x, y), p.lt(y, x));
            }
        }
    }

    #[test]
    fn cover_edges_lie_in_one_component_and_one_block(p in poset(12)) {
        let comps = p.components();
        let blocks = p.blocks();
        for (x, y) in p.cover_pairs() {
            let inside = |parts: &[posetdim::Subposet]| {
                parts.iter().filter(|s| s.elements.contains(&x) && s.elements.contains(&y)).count()
            };
            prop_assert_eq!(inside(&comps), 1);
            prop_assert_eq!(inside(&blocks), 1);
        }
    }

    #[test]
    fn realizers_are_local_and_boolean(p in poset(7)) {
        let (d, r) = dim_of(&p);
        prop_assert!(verify_realizer(&p, &r).unwrap());
        let rep = verify_local_realizer(&p, &r).unwrap();
        prop_assert!(rep.valid);
        prop_assert_eq!(rep.mu, d);
        let b = BooleanRealizer::new(r.ples.clone(), [BitString::all_ones(d)]);
        prop_assert!(verify_boolean_realizer(&p, &b));
    }

    #[test]
    fn query_strings_complement(p in poset(7)) {
        let (_, b) = bdim_of(&p);
        let full = BitString::all_ones(b.dimension());
        for x in p.elements() {
            for y in p.elements().filter(|&y| y != x) {
                let q = query_string(&b, x, y).unwrap();
                let r = query_string(&b, y, x).unwrap();
                prop_assert_eq!(q.bits() ^ r.bits(), full.bits());
            }
        }
    }

    #[test]
    fn dual_invariance_of_certificates(p in poset(7)) {
        let d = p.dual();
        let (_, r) = dim_of(&p);
        prop_assert!(verify_realizer(&d, &r.reversed()).unwrap());
        let f = match ldim_exact(&p, 16).unwrap().witness {
            Witness::LocalRealizer(f) => f,
            _ => unreachable!(),
        };
        prop_assert!(verify_local_realizer(&d, &f.reversed()).unwrap().valid);
        let (_, b) = bdim_of(&p);
        prop_assert!(verify_boolean_realizer(&d, &b.reversed()));
        // A family that fails for P fails for the dual as well.
        let bad = PleFamily::new(vec![r.ples[0].clone()]);
        prop_assert_eq!(
            verify_realizer(&p, &bad).unwrap(),
            verify_realizer(&d, &bad.reversed()).unwrap()
        );
    }

    #[test]
    fn reversing_one_boolean_order(p in poset(7), i in 0usize..8) {
        let (_, b) = bdim_of(&p);
        let i = i % b.dimension();
        prop_assert!(verify_boolean_realizer(&p, &b.reverse_order(i)));
    }

    #[test]
    fn generators_are_deterministic(n in 2usize..9) {
        prop_assert_eq!(poset_to_json(&standard_example(n).unwrap()), poset_to_json(&standard_example(n).unwrap()));
        prop_assert_eq!(
            poset_to_json(&canonical_interval_order(n).unwrap()),
            poset_to_json(&canonical_interval_order(n).unwrap())
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dimension_inequalities(p in poset(7)) {
        let (d, _) = dim_of(&p);
        let l = ldim_of(&p);
        let (b, _) = bdim_of(&p);
        prop_assert!(l <= d);
        prop_assert!(b <= d);
        prop_assert!(d <= p.width().width.max(1));
        if d > 2 {
            prop_assert!(l > 2 && b > 2, "ldim or bdim 2 forces dim 2");
        }
    }

    #[test]
    fn hiraguchi(seed in any::<u64>()) {
        let p = seeded_poset(seed, 5, 9);
        let (d, _) = dim_of(&p);
        // |P| <= 2n + 1 with n >= 2 gives dim <= n.
        let n = ((p.len() - 1) / 2).max(2);
        prop_assert!(d <= n);
    }

    #[test]
    fn antichain_complement_bound(seed in any::<u64>()) {
        let p = seeded_poset(seed, 1, 8);
        // A greedy antichain in a random order.
        let mut r = rng(seed);
        let mut a: Vec<usize> = Vec::new();
        for x in p.elements() {
            if r.gen_bool(0.7) && a.iter().all(|&y| p.incomparable(x, y)) {
                a.push(x);
            }
        }
        let (d, _) = dim_of(&p);
        prop_assert!(d <= (p.len() - a.len()).max(2));
    }

    #[test]
    fn point_removal(p in poset(7)) {
        let (d, _) = dim_of(&p);
        let l = ldim_of(&p);
        for x in p.elements() {
            if p.len() == 1 {
                break;
            }
            let q = remove(&p, x);
            let (dq, rq) = dim_of(&q);
            prop_assert!(d <= 1 + dq);
            prop_assert!(l <= 1 + ldim_of(&q));
            let ext = dim_remove_point_extend(&p, x, &rq).unwrap();
            prop_assert_eq!(ext.len(), dq + 1);
            prop_assert!(ext.len() >= d);
            prop_assert!(verify_realizer(&p, &ext).unwrap());
            if p.len() <= 6 {
                let (bq, bqr) = bdim_of(&q);
                let be = bdim_remove_point_extend(&p, x, &bqr).unwrap();
                prop_assert_eq!(be.dimension(), bq + 3);
                prop_assert!(verify_boolean_realizer(&p, &be));
            }
        }
    }

    #[test]
    fn subposet_monotonicity(seed in any::<u64>()) {
        let p = seeded_poset(seed, 2, 7);
        let mut r = rng(seed ^ 1);
        let keep: Vec<usize> = p.elements().filter(|_| r.gen_bool(0.6)).collect();
        prop_assume!(!keep.is_empty());
        let q = p.subposet(&keep).poset;
        prop_assert!(dim_of(&q).0 <= dim_of(&p).0);
        prop_assert!(ldim_of(&q) <= ldim_of(&p));
        prop_assert!(bdim_of(&q).0 <= bdim_of(&p).0);
        prop_assert!(q.width().width <= p.width().width);
        prop_assert!(q.height() <= p.height());
    }

    #[test]
    fn disconnected_formula(seed in any::<u64>()) {
        let a = seeded_poset(seed, 1, 4);
        let b = seeded_poset(seed.wrapping_add(1), 1, 4);
        let u = Poset::disjoint_union(&[&a, &b]).unwrap();
        let want = dim_of(&a).0.max(dim_of(&b).0).max(2);
        prop_assert_eq!(dim_of(&u).0, want);
    }

    #[test]
    fn split_sandwich(p in poset(5)) {
        let d = dim_of(&p).0;
        let dq = dim_of(&split(&p).0).0;
        let dr = dim_of(&split_in_place(&p).0).0;
        prop_assert!(d <= dq && dq <= dr && dr <= d + 1, "{} {} {}", d, dq, dr);
    }

    #[test]
    fn split_commutes_with_dual(p in poset(5)) {
        let q = split(&p).0;
        prop_assert!(split(&p.dual()).0.is_isomorphic(&q.dual()).is_some());
        let r = split_in_place(&p).0;
        prop_assert!(split_in_place(&p.dual()).0.is_isomorphic(&r.dual()).is_some());
    }
}

fn random_graph(seed: u64, n: usize) -> Graph {
    let mut r = rng(seed);
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| r.gen_bool(0.35)).collect();
    Graph::new(n, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn width_witnesses_verify(seed in any::<u64>(), n in 1usize..10) {
        let g = random_graph(seed, n);
        let (tw, td) = treewidth_exact(&g, n).unwrap();
        let (pw, pd) = pathwidth_exact(&g, n).unwrap();
        let tr = verify_decomposition(&g, &td);
        let pr = verify_path_decomposition(&g, &pd);
        prop_assert!(tr.valid && pr.valid);
        prop_assert_eq!(tr.width, tw);
        prop_assert_eq!(pr.width, pw);
        prop_assert!(pw >= tw);
    }

    #[test]
    fn deleting_a_bag_breaks_reduced_decompositions(seed in any::<u64>(), n in 2usize..9) {
        let g = random_graph(seed, n);
        prop_assume!(g.is_connected());
        let d = treewidth_exact(&g, n).unwrap().1.reduced();
        prop_assert!(verify_decomposition(&g, &d).valid);
        for &node in d.bags.keys() {
            prop_assert!(!verify_decomposition(&g, &d.without_bag(node)).valid);
        }
    }

    #[test]
    fn cover_graph_widths_of_random_posets(p in poset(10)) {
        let g = cover_graph(&p);
        let (tw, _) = treewidth_exact(&g, p.len()).unwrap();
        let (pw, _) = pathwidth_exact(&g, p.len()).unwrap();
        prop_assert!(tw <= pw);
    }
}

#[test]
fn standard_examples_are_self_dual() {
    for n in 2..=6 {
        let s = standard_example(n).unwrap();
        assert!(s.is_isomorphic(&s.dual()).is_some());
    }
}

#[test]
fn family_containments() {
    for n in 3..=5 {
        assert!(standard_example(n).unwrap().embeds_in(&kelly(n).unwrap()).is_some(), "kelly({n})");
    }
    for n in 3..=7 {
        let small = canonical_interval_order(n - 1).unwrap();
        assert!(small.embeds_in(&canonical_interval_order(n).unwrap()).is_some());
    }
    for n in 1..=3 {
        assert!(jmw(n - 1).unwrap().embeds_in(&jmw(n).unwrap()).is_some(), "jmw({n})");
    }
}

#[test]
fn small_posets_with_two_dimensional_parameters() {
    // ldim = 2 or bdim = 2 forces dim = 2, checked on a large seeded sample
    // of posets with at most six points.
    for seed in 0..400 {
        let p = seeded_poset(seed, 2, 6);
        let d = dim_of(&p).0;
        if ldim_of(&p) == 2 || bdim_of(&p).0 == 2 {
            assert_eq!(d, 2, "seed {seed}");
        }
    }
}
