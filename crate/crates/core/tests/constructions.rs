//! Construction contract on seeded random posets: every output verifies and
//! meets its size, frequency or order-count bound.

use posetdim::constructions::*;
use posetdim::generators::{split, split_in_place, standard_example};
use posetdim::random::{rng, seeded_poset};
use posetdim::realizer::{verify_boolean_realizer, verify_local_realizer, verify_realizer};
use posetdim::solvers::{bdim_exact, dim_exact, ldim_exact, Witness};
use posetdim::{Poset, PleFamily};
use rand::seq::SliceRandom;
use rand::Rng;

fn realizer(p: &Poset) -> PleFamily {
    match dim_exact(p, 16).unwrap().witness {
        Witness::Realizer(r) => r,
        _ => unreachable!(),
    }
}

fn local(p: &Poset) -> PleFamily {
    match ldim_exact(p, 16).unwrap().witness {
        Witness::LocalRealizer(f) => f,
        _ => unreachable!(),
    }
}

fn pick(seed: u64, n: usize) -> usize {
    rng(seed ^ 0x5eed).gen_range(0..n)
}

#[test]
fn point_removal_extensions() {
    for seed in 0..200u64 {
        let p = seeded_poset(seed, 2, 7);
        let x = pick(seed, p.len());
        let q = p.remove_point(x);

        let r = realizer(&q.poset);
        let out = dim_remove_point_extend(&p, x, &r).unwrap();
        assert_eq!(out.len(), r.len() + 1, "seed {seed}");
        assert!(verify_realizer(&p, &out).unwrap(), "dim seed {seed}");
        assert!(out.len() >= dim_exact(&p, 16).unwrap().value);

        let l = local(&q.poset);
        let out = ldim_remove_point_extend(&p, x, &l).unwrap();
        let rep = verify_local_realizer(&p, &out).unwrap();
        assert!(rep.valid, "ldim seed {seed}: {:?}", rep.violation);
        assert!(rep.mu <= l.mu(q.poset.len()) + 1, "ldim seed {seed}");

        let Witness::Boolean(b) = bdim_exact(&q.poset, 8).unwrap().witness else { unreachable!() };
        let out = bdim_remove_point_extend(&p, x, &b).unwrap();
        assert_eq!(out.dimension(), b.dimension() + 3);
        assert!(verify_boolean_realizer(&p, &out), "bdim seed {seed}");
    }
}

#[test]
fn split_lifts() {
    for seed in 0..200u64 {
        let p = seeded_poset(seed, 1, 5);
        let (q, _) = split(&p);
        let (r, _) = split_in_place(&p);
        let lq = if q.len() <= 8 { local(&q) } else { upward_extension_realizer(&q) };
        let out = split_lift_from_q(&p, &lq).unwrap();
        let rep = verify_local_realizer(&r, &out).unwrap();
        assert!(rep.valid, "from Q seed {seed}: {:?}", rep.violation);
        assert!(rep.mu < 2 * lq.mu(q.len()), "from Q seed {seed}");

        let lp = local(&p);
        let out = split_lift_from_p(&p, &lp).unwrap();
        let rep = verify_local_realizer(&r, &out).unwrap();
        assert!(rep.valid, "from P seed {seed}: {:?}", rep.violation);
        assert!(rep.mu <= lp.mu(p.len()) + 2, "from P seed {seed}");
    }
}

/// Disjoint union of two or three seeded pieces.
fn seeded_union(seed: u64) -> Poset {
    let k = 2 + (seed % 2) as usize;
    let pieces: Vec<Poset> = (0..k as u64)
        .map(|i| {
            // Keep pieces connected so the component count is predictable.
            let p = seeded_poset(seed * 7 + i, 1, 4);
            p.components().into_iter().next().unwrap().poset
        })
        .collect();
    Poset::disjoint_union(&pieces.iter().collect::<Vec<_>>()).unwrap()
}

#[test]
fn disconnected_compositions() {
    for seed in 0..200u64 {
        let p = seeded_union(seed);
        let comps = p.components();
        let locals: Vec<PleFamily> = comps.iter().map(|c| local(&c.poset)).collect();
        let max_mu = comps.iter().zip(&locals).map(|(c, f)| f.mu(c.poset.len())).max().unwrap();
        let out = disconnected_local_realizer(&p, &locals).unwrap();
        let rep = verify_local_realizer(&p, &out).unwrap();
        assert!(rep.valid, "seed {seed}");
        assert!(rep.mu <= max_mu + 2);

        let rs: Vec<PleFamily> = comps.iter().map(|c| realizer(&c.poset)).collect();
        let out = disconnected_realizer(&p, &rs).unwrap();
        assert!(verify_realizer(&p, &out).unwrap(), "seed {seed}");
    }
}

/// Greedy maximal antichain over a seeded shuffle of the elements.
fn random_maximal_antichain(p: &Poset, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = p.elements().collect();
    order.shuffle(&mut rng(seed));
    let mut a: Vec<usize> = Vec::new();
    for x in order {
        if a.iter().all(|&y| p.incomparable(x, y)) {
            a.push(x);
        }
    }
    a
}

#[test]
fn antichain_complement() {
    for seed in 0..200u64 {
        let p = seeded_poset(seed, 1, 12);
        let a = random_maximal_antichain(&p, seed);
        let parts = antichain_complement_parts(&p, &a).unwrap();
        let out = antichain_complement_local_realizer(&p, &parts).unwrap();
        let rep = verify_local_realizer(&p, &out).unwrap();
        assert!(rep.valid, "seed {seed}: {:?}", rep.violation);
        // Two extensions, the sub-realizer (at most |X ∪ Y| members), and at
        // most s upset-chain ples per side.
        let side = |k: usize| if k == 0 { 0 } else { block_parameters(k).0 };
        let ceiling = 2 + parts.below.len() + parts.above.len() + side(parts.below.len()) + side(parts.above.len());
        assert!(rep.mu <= ceiling, "seed {seed}: mu {}", rep.mu);
    }
}

#[test]
fn antichain_complement_hypotheses() {
    let p = standard_example(3).unwrap();
    let mut parts = antichain_complement_parts(&p, &[3, 4, 5]).unwrap();
    parts.above.push(0);
    assert!(matches!(
        antichain_complement_local_realizer(&p, &parts),
        Err(posetdim::Error::HypothesesViolated(_))
    ));
}

#[test]
fn standard_example_certificates_up_to_fifty() {
    for n in 2..=50 {
        let p = standard_example(n).unwrap();
        let rep = verify_local_realizer(&p, &standard_example_local_realizer(n).unwrap()).unwrap();
        assert!(rep.valid && rep.mu <= 3, "n = {n}");
        let b = standard_example_boolean_realizer(n).unwrap();
        assert_eq!(b.dimension(), 4);
        assert!(verify_boolean_realizer(&p, &b), "n = {n}");
    }
}

#[test]
fn kelly_certificates() {
    for n in 3..=4 {
        let p = posetdim::generators::kelly(n).unwrap();
        let (l, b) = kelly_small_certificates(n).unwrap();
        let rep = verify_local_realizer(&p, &l).unwrap();
        assert!(rep.valid && rep.mu <= 3, "n = {n}");
        assert!(b.dimension() <= 4 && verify_boolean_realizer(&p, &b), "n = {n}");
    }
}

#[test]
fn antichain_complement_balanced_instance() {
    // |X| = |Y| = 6 around a 10-element antichain.
    let mut r = rng(99);
    let (xs, a, ys) = (0..6, 6..16, 16..22);
    let mut pairs = Vec::new();
    for x in xs.clone() {
        let t = r.gen_range(a.clone());
        pairs.push((x, t));
        for y in a.clone() {
            if r.gen_bool(0.2) {
                pairs.push((x, y));
            }
        }
    }
    for y in ys.clone() {
        let t = r.gen_range(a.clone());
        pairs.push((t, y));
    }
    let p = Poset::from_relation(22, &pairs, posetdim::RelationMode::Full).unwrap();
    let parts = antichain_complement_parts(&p, &a.collect::<Vec<_>>()).unwrap();
    assert_eq!(parts.below.len(), 6);
    assert_eq!(parts.above.len(), 6);
    let out = antichain_complement_local_realizer(&p, &parts).unwrap();
    let rep = verify_local_realizer(&p, &out).unwrap();
    assert!(rep.valid);
    assert!(rep.mu <= 6 + 2, "mu {} freq {:?}", rep.mu, rep.frequencies);
}

/// `n` points below an `n`-antichain, each `x_i < a_i` plus random extra
/// relations.
fn ladder_instance(n: usize) -> Poset {
    let mut r = rng(n as u64);
    let mut pairs = Vec::new();
    for x in 0..n {
        for a in 0..n {
            if a == x || r.gen_bool(0.5) {
                pairs.push((x, n + a));
            }
        }
    }
    Poset::from_relation(2 * n, &pairs, posetdim::RelationMode::Full).unwrap()
}

#[test]
fn antichain_complement_frequency_trend() {
    // μ <= C · n / log2 n on every rung.
    const C: f64 = 3.0;
    let mut ratios = Vec::new();
    for n in [8usize, 16, 32, 64] {
        let p = ladder_instance(n);
        let a: Vec<usize> = (n..2 * n).collect();
        let parts = antichain_complement_parts(&p, &a).unwrap();
        let rep = verify_local_realizer(&p, &antichain_complement_local_realizer(&p, &parts).unwrap()).unwrap();
        assert!(rep.valid);
        let ratio = rep.mu as f64 * (n as f64).log2() / n as f64;
        assert!(ratio <= C, "n = {n}: μ = {}", rep.mu);
        ratios.push(ratio);
    }
    assert!(ratios.last() <= ratios.first());
}
