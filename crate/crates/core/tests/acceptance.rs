//! Acceptance criteria. Prints one `ACnn PASS|FAIL` line per criterion and
//! exits non-zero when any fails; limits and tolerances are the constants
//! below.

use std::time::{Duration, Instant};

use posetdim::constructions::*;
use posetdim::decomposition::{cover_graph, jmw_tree_decomposition, pathwidth_exact, treewidth_exact, verify_decomposition};
use posetdim::generators::{
    canonical_interval_order, chain_product, jmw, jmw_a, jmw_b, kelly, pw_family, split, split_in_place,
    standard_example,
};
use posetdim::pipeline::{ldim_from_pathwidth, pathwidth_bound};
use posetdim::random::{rng, seeded_poset};
use posetdim::realizer::{verify_boolean_realizer, verify_local_realizer, verify_realizer};
use posetdim::solvers::{bdim_exact_with, dim_exact, dim_exact_with, ldim_exact_with, oracle, SolverOptions, Witness};
use posetdim::{PleFamily, Poset};
use rand::seq::SliceRandom;
use rand::Rng;

const AC1_EACH: Duration = Duration::from_secs(5);
const AC2_EACH: Duration = Duration::from_secs(60);
const AC3_SOLVER: Duration = Duration::from_secs(120);
const AC3_CERT_EACH: Duration = Duration::from_secs(1);
const AC4_TOTAL: Duration = Duration::from_secs(60);
const AC7_TOTAL: Duration = Duration::from_secs(600);
const AC7_SAMPLES: u64 = 1000;
const AC8_SAMPLES: u64 = 200;
const AC11_TOTAL: Duration = Duration::from_secs(900);
const AC12_SAMPLES: u64 = 100;

fn opts(max_elements: usize) -> SolverOptions {
    SolverOptions::default().with_max_elements(max_elements)
}

fn report(id: &str, failures: &[String], summary: &str) -> bool {
    if failures.is_empty() {
        println!("{id} PASS {summary}");
    } else {
        println!("{id} FAIL {summary}");
        for f in failures {
            println!("{id}   {f}");
        }
    }
    failures.is_empty()
}

fn dim(p: &Poset) -> usize {
    let c = dim_exact(p, 16).unwrap();
    let Witness::Realizer(r) = &c.witness else { unreachable!() };
    assert!(verify_realizer(p, r).unwrap());
    c.value
}

fn realizer(p: &Poset) -> PleFamily {
    match dim_exact(p, 16).unwrap().witness {
        Witness::Realizer(r) => r,
        _ => unreachable!(),
    }
}

fn local(p: &Poset) -> PleFamily {
    match ldim_exact_with(p, 16, opts(16)).unwrap().witness {
        Witness::LocalRealizer(f) => f,
        _ => unreachable!(),
    }
}

fn ac01_standard_example_dimension() -> bool {
    let mut failures = Vec::new();
    let mut times = Vec::new();
    for n in 2..=6 {
        let t = Instant::now();
        let v = dim(&standard_example(n).unwrap());
        let e = t.elapsed();
        times.push(format!("S_{n}={v} ({e:.2?})"));
        if v != n || e >= AC1_EACH {
            failures.push(format!("dim(S_{n}) = {v} in {e:.2?}, want {n} under {AC1_EACH:?}"));
        }
    }
    report("AC01", &failures, &times.join(", "))
}

fn ac02_standard_example_local_dimension() -> bool {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for (n, want) in [(2, 2), (3, 3), (4, 3)] {
        let t = Instant::now();
        let c = ldim_exact_with(&standard_example(n).unwrap(), 8, opts(16)).unwrap();
        let e = t.elapsed();
        seen.push(format!("S_{n}={} ({e:.2?})", c.value));
        if c.value != want || e >= AC2_EACH {
            failures.push(format!("ldim(S_{n}) = {} in {e:.2?}, want {want}", c.value));
        }
    }
    report("AC02", &failures, &seen.join(", "))
}

fn ac03_standard_example_boolean_dimension_and_certificates() -> bool {
    let mut failures = Vec::new();
    let t = Instant::now();
    for (n, want) in [(2, 2), (3, 3)] {
        let c = bdim_exact_with(&standard_example(n).unwrap(), 6, opts(16)).unwrap();
        if c.value != want {
            failures.push(format!("bdim(S_{n}) = {}, want {want}", c.value));
        }
    }
    let solver = t.elapsed();
    if solver >= AC3_SOLVER {
        failures.push(format!("bdim solves took {solver:.2?}"));
    }
    let mut slowest = Duration::ZERO;
    for n in 2..=50 {
        let t = Instant::now();
        let p = standard_example(n).unwrap();
        let l = standard_example_local_realizer(n).unwrap();
        let rep = verify_local_realizer(&p, &l).unwrap();
        let b = standard_example_boolean_realizer(n).unwrap();
        let ok = rep.valid && rep.mu <= 3 && b.dimension() == 4 && verify_boolean_realizer(&p, &b);
        let e = t.elapsed();
        slowest = slowest.max(e);
        if !ok || e >= AC3_CERT_EACH {
            failures.push(format!("S_{n} certificates: valid {ok}, μ {}, {e:.2?}", rep.mu));
        }
    }
    report("AC03", &failures, &format!("bdim solves {solver:.2?}; certificates n <= 50, slowest {slowest:.2?}"))
}

fn ac04_chain_products() -> bool {
    let t = Instant::now();
    let mut failures = Vec::new();
    for (k, d, want) in [(2, 2, 2), (2, 3, 3), (3, 2, 2)] {
        let v = dim(&chain_product(k, d).unwrap());
        if v != want {
            failures.push(format!("dim({k}^{d}) = {v}, want {want}"));
        }
    }
    let e = t.elapsed();
    if e >= AC4_TOTAL {
        failures.push(format!("took {e:.2?}"));
    }
    report("AC04", &failures, &format!("2^2, 2^3, 3^2 in {e:.2?}"))
}

fn ac05_width_tightness_and_kelly_certificates() -> bool {
    let mut failures = Vec::new();
    for w in [2, 3] {
        let v = dim(&pw_family(w).unwrap());
        if v != w + 1 {
            failures.push(format!("dim(pw_family({w})) = {v}, want {}", w + 1));
        }
        let p = pw_family(w).unwrap();
        let rep = verify_local_realizer(&p, &pw_family_local_realizer(w).unwrap()).unwrap();
        let b = pw_family_boolean_realizer(w).unwrap();
        if !rep.valid || rep.mu > 4 || b.dimension() != 4 || !verify_boolean_realizer(&p, &b) {
            failures.push(format!("pw_family({w}) certificates: μ {}, d {}", rep.mu, b.dimension()));
        }
    }
    for n in [3, 4] {
        let p = kelly(n).unwrap();
        let (l, b) = kelly_small_certificates(n).unwrap();
        let rep = verify_local_realizer(&p, &l).unwrap();
        if !rep.valid || rep.mu > 3 || b.dimension() != 4 || !verify_boolean_realizer(&p, &b) {
            failures.push(format!("kelly({n}) certificates: μ {}, d {}", rep.mu, b.dimension()));
        }
    }
    report("AC05", &failures, "pw_family(2,3) dims 3,4; certificates μ <= 3 / <= 4, d = 4")
}

fn ac06_interval_order_growth() -> bool {
    let mut failures = Vec::new();
    let (mut l, mut b, mut d) = (Vec::new(), Vec::new(), Vec::new());
    for n in 3..=6 {
        let p = canonical_interval_order(n).unwrap();
        l.push(ldim_exact_with(&p, 8, opts(16)).unwrap().value);
        b.push(bdim_exact_with(&p, 8, opts(16)).unwrap().value);
        d.push(dim(&p));
        if p.len() <= 7 {
            let (ol, ob, od) = (
                oracle::ldim_by_shapes(&p, 8).unwrap(),
                oracle::bdim_by_collisions(&p, 8).unwrap(),
                oracle::dim_by_extensions(&p, 8).unwrap(),
            );
            if (ol, ob, od) != (*l.last().unwrap(), *b.last().unwrap(), *d.last().unwrap()) {
                failures.push(format!("I_{n}: oracle disagrees ({ol}, {ob}, {od})"));
            }
        }
    }
    if l.windows(2).any(|w| w[0] > w[1]) {
        failures.push(format!("ldim(I_3..6) = {l:?} decreases"));
    }
    if b.windows(2).any(|w| w[0] > w[1]) {
        failures.push(format!("bdim(I_3..6) = {b:?} decreases"));
    }
    // dim(I_5) must be at least 3.
    if d[2] <= 2 {
        failures.push(format!("dim(I_5) = {}, want > 2 (dim(I_3..6) = {d:?})", d[2]));
    }
    report("AC06", &failures, &format!("ldim {l:?}, bdim {b:?}, dim {d:?} for n = 3..6"))
}

fn ac07_random_property_suite() -> bool {
    let t = Instant::now();
    let mut failures = Vec::new();
    for seed in 0..AC7_SAMPLES {
        let p = seeded_poset(seed, 1, 7);
        let n = p.len();
        let d = dim(&p);
        let l = ldim_exact_with(&p, 8, opts(8)).unwrap().value;
        let b = bdim_exact_with(&p, 8, opts(8)).unwrap().value;
        let w = p.width().width;
        let mut bad = |what: &str| failures.push(format!("seed {seed}: {what}"));
        if l > d {
            bad("ldim > dim");
        }
        if b > d {
            bad("bdim > dim");
        }
        if d > w.max(1) {
            bad("dim > width");
        }
        // |P| <= 2k + 1 with k >= 2 forces dim <= k.
        if n >= 5 && d > (n - 1) / 2 {
            bad("Hiraguchi");
        }
        if n > 1 {
            for x in p.elements() {
                if d > 1 + dim(&p.remove_point(x).poset) {
                    bad("dim(P) > 1 + dim(P - x)");
                }
            }
        }
        // Greedy antichains from a seeded shuffle.
        let mut order: Vec<usize> = p.elements().collect();
        order.shuffle(&mut rng(seed));
        let mut a: Vec<usize> = Vec::new();
        for x in order {
            if a.iter().all(|&y| p.incomparable(x, y)) {
                a.push(x);
            }
        }
        if d > (n - a.len()).max(2) {
            bad("dim > max{2, |P - A|}");
        }
    }
    let e = t.elapsed();
    if e >= AC7_TOTAL {
        failures.push(format!("took {e:.2?}"));
    }
    report("AC07", &failures, &format!("{AC7_SAMPLES} posets with at most 7 points, {e:.2?}"))
}

fn pick(seed: u64, n: usize) -> usize {
    rng(seed ^ 0x5eed).gen_range(0..n)
}

fn ac08_construction_contract() -> bool {
    let mut failures = Vec::new();
    let mut fail = |what: &str, seed: u64| failures.push(format!("{what} seed {seed}"));
    for seed in 0..AC8_SAMPLES {
        let p = seeded_poset(seed, 2, 7);
        let x = pick(seed, p.len());
        let q = p.remove_point(x).poset;
        let r = realizer(&q);
        let out = dim_remove_point_extend(&p, x, &r).unwrap();
        if out.len() != r.len() + 1 || !verify_realizer(&p, &out).unwrap() {
            fail("dim_remove_point_extend", seed);
        }
        let lq = local(&q);
        let out = ldim_remove_point_extend(&p, x, &lq).unwrap();
        let rep = verify_local_realizer(&p, &out).unwrap();
        if !rep.valid || rep.mu > lq.mu(q.len()) + 1 {
            fail("ldim_remove_point_extend", seed);
        }
        let Witness::Boolean(bq) = bdim_exact_with(&q, 8, opts(8)).unwrap().witness else { unreachable!() };
        let out = bdim_remove_point_extend(&p, x, &bq).unwrap();
        if out.dimension() != bq.dimension() + 3 || !verify_boolean_realizer(&p, &out) {
            fail("bdim_remove_point_extend", seed);
        }
    }
    for seed in 0..AC8_SAMPLES {
        let p = seeded_poset(seed, 1, 5);
        let (q, _) = split(&p);
        let (r, _) = split_in_place(&p);
        let lq = if q.len() <= 8 { local(&q) } else { upward_extension_realizer(&q) };
        let rep = verify_local_realizer(&r, &split_lift_from_q(&p, &lq).unwrap()).unwrap();
        if !rep.valid || rep.mu >= 2 * lq.mu(q.len()) {
            fail("split_lift_from_q", seed);
        }
        let lp = local(&p);
        let rep = verify_local_realizer(&r, &split_lift_from_p(&p, &lp).unwrap()).unwrap();
        if !rep.valid || rep.mu > lp.mu(p.len()) + 2 {
            fail("split_lift_from_p", seed);
        }
    }
    for seed in 0..AC8_SAMPLES {
        let pieces: Vec<Poset> = (0..2 + seed % 2)
            .map(|i| seeded_poset(seed * 7 + i, 1, 4).components().into_iter().next().unwrap().poset)
            .collect();
        let p = Poset::disjoint_union(&pieces.iter().collect::<Vec<_>>()).unwrap();
        let comps = p.components();
        let locals: Vec<PleFamily> = comps.iter().map(|c| local(&c.poset)).collect();
        let max_mu = comps.iter().zip(&locals).map(|(c, f)| f.mu(c.poset.len())).max().unwrap();
        let rep = verify_local_realizer(&p, &disconnected_local_realizer(&p, &locals).unwrap()).unwrap();
        if !rep.valid || rep.mu > max_mu + 2 {
            fail("disconnected_local_realizer", seed);
        }
    }
    for seed in 0..AC8_SAMPLES {
        let p = seeded_poset(seed, 1, 12);
        let mut order: Vec<usize> = p.elements().collect();
        order.shuffle(&mut rng(seed));
        let mut a: Vec<usize> = Vec::new();
        for x in order {
            if a.iter().all(|&y| p.incomparable(x, y)) {
                a.push(x);
            }
        }
        let parts = antichain_complement_parts(&p, &a).unwrap();
        let rep = verify_local_realizer(&p, &antichain_complement_local_realizer(&p, &parts).unwrap()).unwrap();
        let side = |k: usize| if k == 0 { 0 } else { block_parameters(k).0 };
        let ceiling = 2 + parts.below.len() + parts.above.len() + side(parts.below.len()) + side(parts.above.len());
        if !rep.valid || rep.mu > ceiling {
            fail("antichain_complement_local_realizer", seed);
        }
    }
    report("AC08", &failures, &format!("7 constructions x {AC8_SAMPLES} seeded instances"))
}

fn ac09_split_sandwich() -> bool {
    let mut failures = Vec::new();
    let mut count = 0;
    for seed in 0..300 {
        let p = seeded_poset(seed, 1, 5);
        let (d, dq, dr) = (dim(&p), dim(&split(&p).0), dim(&split_in_place(&p).0));
        count += 1;
        if !(d <= dq && dq <= dr && dr <= d + 1) {
            failures.push(format!("seed {seed}: {d} {dq} {dr}"));
        }
    }
    report("AC09", &failures, &format!("{count} posets with at most 5 points"))
}

fn ac10_jmw() -> bool {
    let mut failures = Vec::new();
    if jmw(1).unwrap().is_isomorphic(&standard_example(3).unwrap()).is_none() {
        failures.push("jmw(1) is not isomorphic to S_3".into());
    }
    for n in 1..=5 {
        let p = jmw(n).unwrap();
        let d = jmw_tree_decomposition(n).unwrap();
        let rep = verify_decomposition(&cover_graph(&p), &d);
        let mut leaf_bag = vec![jmw_a(n, ""), jmw_b("")];
        leaf_bag.sort_unstable();
        let leaf = d.bags.iter().any(|(node, bag)| {
            let degree = d.host_edges.iter().filter(|&&(s, t)| s == *node || t == *node).count();
            let mut b = bag.clone();
            b.sort_unstable();
            degree <= 1 && b == leaf_bag
        });
        if !rep.valid || rep.width != 3 || !leaf {
            failures.push(format!("jmw({n}) decomposition: valid {}, width {}, leaf {leaf}", rep.valid, rep.width));
        }
    }
    let p2 = jmw(2).unwrap();
    let (tw, _) = treewidth_exact(&cover_graph(&p2), 6).unwrap();
    let d2 = dim(&p2);
    if tw > 3 {
        failures.push(format!("treewidth(jmw(2)) = {tw}"));
    }
    if d2 < 3 {
        failures.push(format!("dim(jmw(2)) = {d2}"));
    }
    report("AC10", &failures, &format!("decompositions n = 1..5 width 3; tw(jmw(2)) = {tw}, dim(jmw(2)) = {d2}"))
}

fn ac11_pathwidth_pipeline() -> bool {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut instances: Vec<(String, Poset)> = (1..=8).map(|n| (format!("chain({n})"), Poset::chain(n).unwrap())).collect();
    instances.push(("S_3".into(), standard_example(3).unwrap()));
    instances.push(("kelly(3)".into(), kelly(3).unwrap()));
    for seed in 0..100 {
        instances.push((format!("random seed {seed}"), seeded_poset(seed, 1, 8)));
    }
    let mut max_mu = 0;
    for (name, p) in &instances {
        match ldim_from_pathwidth(p) {
            Ok(out) => {
                let rep = verify_local_realizer(p, &out.family).unwrap();
                let exact = ldim_exact_with(p, 12, opts(8)).map(|c| c.value);
                max_mu = max_mu.max(out.mu);
                if !rep.valid || rep.mu != out.mu || out.mu as u128 > pathwidth_bound(out.report.t) {
                    failures.push(format!("{name}: valid {}, μ {}", rep.valid, out.mu));
                }
                if let Ok(e) = exact {
                    if out.mu < e {
                        failures.push(format!("{name}: μ {} below ldim {e}", out.mu));
                    }
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    for n in [3, 4] {
        let (pw, _) = pathwidth_exact(&cover_graph(&kelly(n).unwrap()), 8).unwrap();
        if pw > 3 {
            failures.push(format!("pathwidth(kelly({n})) = {pw}"));
        }
    }
    let e = t.elapsed();
    if e >= AC11_TOTAL {
        failures.push(format!("took {e:.2?}"));
    }
    report("AC11", &failures, &format!("{} instances, max μ {max_mu}, {e:.2?}", instances.len()))
}

fn ac12_disconnected_formula() -> bool {
    let mut failures = Vec::new();
    for seed in 0..AC12_SAMPLES {
        let k = 2 + (seed % 2);
        let pieces: Vec<Poset> = (0..k).map(|i| seeded_poset(seed * 11 + i, 1, 4)).collect();
        let p = Poset::disjoint_union(&pieces.iter().collect::<Vec<_>>()).unwrap();
        let dims: Vec<usize> = p.components().iter().map(|c| dim(&c.poset)).collect();
        let want = dims.iter().copied().chain([2]).max().unwrap();
        let got = dim_exact_with(&p, 16, SolverOptions::default()).unwrap().value;
        if got != want || disconnected_dim(&dims).unwrap() != want {
            failures.push(format!("seed {seed}: dim {got}, formula {want}"));
        }
    }
    report("AC12", &failures, &format!("{AC12_SAMPLES} disjoint unions"))
}

fn main() {
    let criteria: [(&str, fn() -> bool); 12] = [
        ("AC01", ac01_standard_example_dimension),
        ("AC02", ac02_standard_example_local_dimension),
        ("AC03", ac03_standard_example_boolean_dimension_and_certificates),
        ("AC04", ac04_chain_products),
        ("AC05", ac05_width_tightness_and_kelly_certificates),
        ("AC06", ac06_interval_order_growth),
        ("AC07", ac07_random_property_suite),
        ("AC08", ac08_construction_contract),
        ("AC09", ac09_split_sandwich),
        ("AC10", ac10_jmw),
        ("AC11", ac11_pathwidth_pipeline),
        ("AC12", ac12_disconnected_formula),
    ];
    let mut failed = Vec::new();
    for (id, run) in criteria {
        match std::panic::catch_unwind(run) {
            Ok(true) => {}
            Ok(false) => failed.push(id),
            Err(_) => {
                println!("{id} FAIL panicked");
                failed.push(id);
            }
        }
    }
    println!("acceptance: {} passed, {} failed {:?}", criteria.len() - failed.len(), failed.len(), failed);
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
