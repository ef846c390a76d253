//! Local realizers with frequency bounded in terms of the pathwidth of the
//! cover graph.
//!
//! The pipeline normalizes a path decomposition, splits `P` into the
//! bipartite `Q`, colours the incomparable pairs of `Q` by how they sit in
//! the decomposition, reverses each colour class with a bounded number of
//! ples per element, and lifts the result back to `P`. Every structural
//! claim the bound relies on is checked at run time.

pub mod colors;
pub mod layering;
pub mod normalize;

use serde::{Deserialize, Serialize};

pub use colors::{build_color_table, sigma_classes, sigma_palette_size, ColorTable, SigmaColor};
pub use layering::{layer_components, ClaimAudit, ClassLayering, ComponentLayering, LayerGroup};
pub use normalize::{distinct_endpoints, normalize_decomposition, NormalizedPathDecomposition};

use crate::constructions::split_lift_from_q;
use crate::decomposition::{cover_graph, pathwidth_exact, PathDecomposition, WIDTH_DP_MAX_VERTICES};
use crate::error::{Error, Result};
use crate::generators::split;
use crate::poset::Poset;
use crate::realizer::{verify_local_realizer, LinearOrder, PleFamily};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub n: usize,
    /// Width of the normalized decomposition of the cover graph.
    pub t: usize,
    pub h_width: usize,
    pub sigma_classes: usize,
    pub mirrored_classes: usize,
    pub components: usize,
    pub max_layer: usize,
    /// `(ples, μ)` of the family on `Q`, the lift to the split-in-place,
    /// the restriction to `P`, and the family after dropping redundant ples.
    pub q_stage: (usize, usize),
    pub r_stage: (usize, usize),
    pub p_stage: (usize, usize),
    pub pruned: (usize, usize),
    /// `8 · 4^{2(t+1)} · 5^{(t+1)^2} + 3`, saturating.
    pub bound: u128,
    pub claims: ClaimAudit,
    /// Which orientation produced the family, and μ of each.
    pub orientation: Orientation,
    pub mu_direct: usize,
    pub mu_dual: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    #[default]
    Direct,
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineOutput {
    pub family: PleFamily,
    pub mu: usize,
    pub decomposition: PathDecomposition,
    pub report: PipelineReport,
}

/// `8 · 4^{2(t+1)} · 5^{(t+1)^2} + 3`, saturating at `u128::MAX`.
pub fn pathwidth_bound(t: usize) -> u128 {
    sigma_palette_size(t).saturating_mul(4).saturating_add(3)
}

/// `L_0` (every `x'` below every `y''`, ids ascending) and its reverse on
/// each side, then the class ples.
pub fn assemble_local_realizer(n: usize, layerings: &[ClassLayering]) -> PleFamily {
    let l0: Vec<usize> = (0..2 * n).collect();
    let mut l0_rev: Vec<usize> = (0..n).rev().collect();
    l0_rev.extend((n..2 * n).rev());
    let mut ples = vec![LinearOrder(l0), LinearOrder(l0_rev)];
    for c in layerings {
        ples.extend(c.ples().cloned());
    }
    PleFamily::new(ples)
}

/// Drops ples whose reversals and co-occurrences are all provided by the
/// rest, shortest first (ties by index). The result is still a local
/// realizer when `f` is one.
pub fn prune_redundant_ples(p: &Poset, f: &PleFamily) -> PleFamily {
    let n = p.len();
    let items = |l: &LinearOrder| -> Vec<usize> {
        let e = l.elements();
        let mut out = Vec::new();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                let (lo, hi) = (e[i], e[j]);
                if p.lt(lo, hi) {
                    out.push(n * n + lo * n + hi);
                } else if p.incomparable(lo, hi) {
                    out.push(hi * n + lo);
                }
            }
        }
        out
    };
    let served: Vec<Vec<usize>> = f.ples.iter().map(items).collect();
    let mut count = vec![0usize; 2 * n * n];
    for s in &served {
        for &it in s {
            count[it] += 1;
        }
    }
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by_key(|&k| (f.ples[k].len(), k));
    let mut keep = vec![true; f.len()];
    for k in order {
        if served[k].iter().all(|&it| count[it] >= 2) {
            keep[k] = false;
            for &it in &served[k] {
                count[it] -= 1;
            }
        }
    }
    // Elements in no remaining ple still need one.
    let mut ples: Vec<LinearOrder> =
        f.ples.iter().zip(&keep).filter(|(_, &k)| k).map(|(l, _)| l.clone()).collect();
    let mut present = vec![false; n];
    for l in &ples {
        for &z in l.elements() {
            present[z] = true;
        }
    }
    for z in (0..n).filter(|&z| !present[z]) {
        ples.push(LinearOrder(vec![z]));
    }
    PleFamily::new(ples)
}

/// Runs the pipeline on `p` with an exact minimum-width path decomposition
/// of its cover graph.
pub fn ldim_from_pathwidth(p: &Poset) -> Result<PipelineOutput> {
    if p.len() > WIDTH_DP_MAX_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "exact pathwidth accepts at most {WIDTH_DP_MAX_VERTICES} vertices, got {}; supply a decomposition",
            p.len()
        )));
    }
    let g = cover_graph(p);
    let (_, d) = pathwidth_exact(&g, p.len().max(1))?;
    ldim_from_path_decomposition(p, &d)
}

/// Runs the pipeline on `p` with a given path decomposition of its cover
/// graph.
///
/// `P` and its dual share the cover graph, so both orientations are run and
/// the one with smaller μ kept (ties go to `P`); the dual's family is
/// reversed member-wise. The result is the same μ for `P` and `P*`.
pub fn ldim_from_path_decomposition(p: &Poset, d: &PathDecomposition) -> Result<PipelineOutput> {
    let direct = ldim_one_orientation(p, d)?;
    let dual = ldim_one_orientation(&p.dual(), d)?;
    let (mut out, orientation) = if dual.mu < direct.mu {
        let family = dual.family.reversed();
        let rep = verify_local_realizer(p, &family)?;
        if !rep.valid {
            return Err(Error::ClaimViolated {
                claim: 2,
                detail: format!("reversed dual family is not a local realizer: {:?}", rep.violation),
            });
        }
        (PipelineOutput { family, ..dual }, Orientation::Dual)
    } else {
        (direct.clone(), Orientation::Direct)
    };
    out.report.orientation = orientation;
    out.report.mu_direct = direct.mu;
    out.report.mu_dual = dual.mu;
    Ok(out)
}

/// The pipeline on `p` itself, without trying the dual.
pub fn ldim_one_orientation(p: &Poset, d: &PathDecomposition) -> Result<PipelineOutput> {
    if p.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let n = p.len();
    let norm = normalize_decomposition(p, d)?;
    let table = build_color_table(p, &norm)?;
    let classes = sigma_classes(p, &table);
    let palette = sigma_palette_size(norm.t);
    if classes.len() as u128 > palette {
        return Err(Error::ClaimViolated {
            claim: 1,
            detail: format!("{} colour classes exceed the palette of {palette}", classes.len()),
        });
    }
    let (q, _) = split(p);
    let mut audit = ClaimAudit::default();
    let mut layerings = Vec::with_capacity(classes.len());
    for (color, pairs) in &classes {
        layerings.push(layer_components(p, &q, &table, color, pairs, &mut audit)?);
    }
    let fq = assemble_local_realizer(n, &layerings);
    let rq = verify_local_realizer(&q, &fq)?;
    if !rq.valid {
        return Err(Error::ClaimViolated {
            claim: 2,
            detail: format!("assembled family is not a local realizer of the split: {:?}", rq.violation),
        });
    }
    let fr = split_lift_from_q(p, &fq)?;
    let mu_r = fr.mu(3 * n);
    let fp = PleFamily::new(
        fr.ples
            .iter()
            .map(|l| LinearOrder(l.elements().iter().copied().filter(|&z| z < n).collect()))
            .filter(|l| !l.is_empty())
            .collect(),
    );
    let rp = verify_local_realizer(p, &fp)?;
    if !rp.valid {
        return Err(Error::ClaimViolated {
            claim: 2,
            detail: format!("restricted family is not a local realizer: {:?}", rp.violation),
        });
    }
    let pruned = prune_redundant_ples(p, &fp);
    let rpr = verify_local_realizer(p, &pruned)?;
    if !rpr.valid {
        return Err(Error::ClaimViolated {
            claim: 2,
            detail: format!("pruned family is not a local realizer: {:?}", rpr.violation),
        });
    }
    let bound = pathwidth_bound(norm.t);
    if rp.mu as u128 > bound {
        return Err(Error::ClaimViolated { claim: 4, detail: format!("μ = {} exceeds {bound}", rp.mu) });
    }
    let report = PipelineReport {
        n,
        t: norm.t,
        h_width: norm.width(),
        sigma_classes: classes.len(),
        mirrored_classes: layerings.iter().filter(|c| c.mirrored).count(),
        components: layerings.iter().map(|c| c.components.len()).sum(),
        max_layer: layerings
            .iter()
            .flat_map(|c| c.components.iter().map(|k| k.layers.len().saturating_sub(1)))
            .max()
            .unwrap_or(0),
        q_stage: (fq.len(), rq.mu),
        r_stage: (fr.len(), mu_r),
        p_stage: (fp.len(), rp.mu),
        pruned: (pruned.len(), rpr.mu),
        bound,
        claims: audit,
        orientation: Orientation::Direct,
        mu_direct: rpr.mu,
        mu_dual: rpr.mu,
    };
    Ok(PipelineOutput { mu: rpr.mu, family: pruned, decomposition: d.clone(), report })
}
