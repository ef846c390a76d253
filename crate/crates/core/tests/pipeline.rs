use posetdim::decomposition::{cover_graph, pathwidth_exact, PathDecomposition};
use posetdim::generators::{kelly, standard_example};
use posetdim::pipeline::*;
use posetdim::random::seeded_poset;
use posetdim::realizer::verify_local_realizer;
use posetdim::solvers::{ldim_exact_with, SolverOptions};
use posetdim::{Error, Poset};

fn exact_decomposition(p: &Poset) -> PathDecomposition {
    pathwidth_exact(&cover_graph(p), p.len()).unwrap().1
}

fn verified(p: &Poset) -> PipelineOutput {
    let out = ldim_from_pathwidth(p).unwrap();
    let rep = verify_local_realizer(p, &out.family).unwrap();
    assert!(rep.valid, "{:?}", rep.violation);
    assert_eq!(rep.mu, out.mu);
    out
}

#[test]
fn two_chain_normalizes_with_small_width() {
    let p = Poset::chain(2).unwrap();
    let d = PathDecomposition { bags: vec![vec![0, 1]] };
    let norm = normalize_decomposition(&p, &d).unwrap();
    assert!(norm.width() <= 2);
    let table = build_color_table(&p, &norm).unwrap();
    for x in 0..2 {
        assert_eq!(table.pi[x][table.phi[x]], 1);
    }
}

#[test]
fn kelly_normalizes_and_colours_within_budget() {
    let p = kelly(3).unwrap();
    let (w, d) = pathwidth_exact(&cover_graph(&p), 12).unwrap();
    assert!(w <= 3);
    let norm = normalize_decomposition(&p, &d).unwrap();
    assert!(norm.width() <= norm.t + 1);
    let table = build_color_table(&p, &norm).unwrap();
    assert!(table.phi.iter().all(|&c| c <= 3));
}

#[test]
fn missing_edge_is_rejected() {
    let p = Poset::chain(3).unwrap();
    let d = PathDecomposition { bags: vec![vec![0, 1], vec![2]] };
    assert!(matches!(normalize_decomposition(&p, &d), Err(Error::InvalidDecomposition(_))));
    assert!(matches!(ldim_from_path_decomposition(&p, &d), Err(Error::InvalidDecomposition(_))));
}

#[test]
fn normalization_invariants_on_random_instances() {
    for seed in 0..200 {
        let p = seeded_poset(seed, 1, 10);
        let norm = normalize_decomposition(&p, &exact_decomposition(&p)).unwrap();
        normalize::check_normalized(&p, &norm).unwrap();
        let n = p.len();
        let mut ends: Vec<usize> = norm.intervals.iter().flat_map(|&(a, b)| [a, b]).collect();
        ends.sort_unstable();
        ends.dedup();
        // Every R vertex has two distinct endpoints except the one-bag primes.
        assert_eq!(ends.len(), 2 * n + 2 * n);
    }
}

#[test]
fn sigma_classes_fit_the_palette() {
    for seed in 0..100 {
        let p = seeded_poset(seed, 1, 9);
        let norm = normalize_decomposition(&p, &exact_decomposition(&p)).unwrap();
        let table = build_color_table(&p, &norm).unwrap();
        assert!(sigma_classes(&p, &table).len() as u128 <= sigma_palette_size(norm.t));
    }
}

#[test]
fn single_edge_and_star_components_stay_in_layer_zero() {
    // One incomparable pair in Q: a 2-antichain splits into two comparable
    // pairs and two incomparable ones.
    for p in [Poset::antichain(2).unwrap(), Poset::antichain(4).unwrap()] {
        let out = verified(&p);
        assert!(out.report.max_layer <= 1);
    }
}

#[test]
fn chain_of_five() {
    let out = verified(&Poset::chain(5).unwrap());
    assert!(out.mu <= 3, "μ = {}", out.mu);
}

#[test]
fn kelly_three_within_bound() {
    let out = verified(&kelly(3).unwrap());
    assert!(out.report.t <= 3);
    assert!(out.mu as u128 <= pathwidth_bound(3));
}

#[test]
fn standard_example_three_sandwich() {
    let out = verified(&standard_example(3).unwrap());
    assert!(out.mu >= 3);
}

#[test]
fn random_instances_sandwich_and_audit() {
    let opts = SolverOptions::default().with_max_elements(8);
    for seed in 0..150 {
        let p = seeded_poset(seed, 1, 8);
        let out = verified(&p);
        assert!(out.mu as u128 <= out.report.bound);
        assert!(out.report.q_stage.1 <= 2 + 2 * out.report.sigma_classes);
        let exact = ldim_exact_with(&p, 8, opts).unwrap();
        assert!(out.mu >= exact.value, "seed {seed}");
    }
}

#[test]
fn mirror_symmetry() {
    for seed in 0..150 {
        let p = seeded_poset(seed, 1, 10);
        let a = verified(&p);
        let b = verified(&p.dual());
        assert_eq!(a.mu, b.mu, "seed {seed}");
    }
}
