//! Normalizing a path decomposition of the cover graph of `P` and lifting
//! it to the cover graph of the split-in-place `R`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::decomposition::{cover_graph, verify_path_decomposition, PathDecomposition};
use crate::error::{Error, Result};
use crate::generators::split_in_place;
use crate::poset::Poset;

/// Path decomposition of the cover graph `H` of the split-in-place of `P`,
/// in the ids of [`split_in_place`]: `u`, `u' = n + u`, `u'' = 2n + u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedPathDecomposition {
    /// `|P|`.
    pub n: usize,
    /// Width of `base`.
    pub t: usize,
    /// Decomposition of the cover graph of `P` in which every bag is an
    /// endpoint of exactly one interval.
    pub base: PathDecomposition,
    /// The `3m` bags of `H`.
    pub bags: Vec<Vec<usize>>,
    /// `(a_u, b_u)` for every vertex of `H`, 0-based.
    pub intervals: Vec<(usize, usize)>,
}

impl NormalizedPathDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }
}

/// One vertex introduced or forgotten per bag, so every bag is an endpoint
/// of exactly one interval. Width does not grow.
pub fn distinct_endpoints(n: usize, d: &PathDecomposition) -> PathDecomposition {
    let mut bags = Vec::new();
    let mut current: BTreeSet<usize> = BTreeSet::new();
    let emit = |bags: &mut Vec<Vec<usize>>, c: &BTreeSet<usize>| bags.push(c.iter().copied().collect());
    let mut prev: BTreeSet<usize> = BTreeSet::new();
    for bag in d.bags.iter().chain(std::iter::once(&Vec::new())) {
        let next: BTreeSet<usize> = bag.iter().copied().filter(|&u| u < n).collect();
        for &u in prev.difference(&next) {
            emit(&mut bags, &current);
            current.remove(&u);
        }
        for &u in next.difference(&prev) {
            current.insert(u);
            emit(&mut bags, &current);
        }
        prev = next;
    }
    PathDecomposition { bags }
}

/// Normalizes `d` (a path decomposition of the cover graph of `p`) and
/// builds the split-in-place decomposition: base bag `B_i` becomes the three
/// bags `B_i`, `B_i ∪ {u'}`, `B_i ∪ {u''}` when `u` starts at `i`, and three
/// copies of `B_i` otherwise.
pub fn normalize_decomposition(p: &Poset, d: &PathDecomposition) -> Result<NormalizedPathDecomposition> {
    let n = p.len();
    let g = cover_graph(p);
    let rep = verify_path_decomposition(&g, d);
    if !rep.valid {
        return Err(Error::InvalidDecomposition(rep.violation.unwrap_or_default()));
    }
    let base = distinct_endpoints(n, d);
    let t = base.width();
    let base_int: Vec<(usize, usize)> = base
        .intervals(n)
        .into_iter()
        .map(|iv| iv.expect("verified decompositions cover every vertex"))
        .collect();
    let mut starter = vec![None; base.bags.len()];
    for (u, &(a, _)) in base_int.iter().enumerate() {
        starter[a] = Some(u);
    }
    let mut bags = Vec::with_capacity(3 * base.bags.len());
    for (i, bag) in base.bags.iter().enumerate() {
        bags.push(bag.clone());
        match starter[i] {
            Some(u) => {
                let mut with_lower = bag.clone();
                with_lower.push(n + u);
                bags.push(with_lower);
                let mut with_upper = bag.clone();
                with_upper.push(2 * n + u);
                bags.push(with_upper);
            }
            None => {
                bags.push(bag.clone());
                bags.push(bag.clone());
            }
        }
    }
    let lifted = PathDecomposition { bags };
    let intervals: Vec<(usize, usize)> = lifted
        .intervals(3 * n)
        .into_iter()
        .map(|iv| iv.expect("every vertex of H has a bag"))
        .collect();
    let out = NormalizedPathDecomposition { n, t, base, bags: lifted.bags, intervals };
    check_normalized(p, &out)?;
    Ok(out)
}

/// Distinct endpoints, `b_{u'} < a_{u''}`, the nesting property, and
/// validity for `H` with width at most `t + 1`.
pub fn check_normalized(p: &Poset, d: &NormalizedPathDecomposition) -> Result<()> {
    let n = d.n;
    let bad = |m: String| Err(Error::InvalidDecomposition(m));
    let (r, _) = split_in_place(p);
    let h = cover_graph(&r);
    let rep = verify_path_decomposition(&h, &PathDecomposition { bags: d.bags.clone() });
    if !rep.valid {
        return bad(format!("lifted decomposition: {}", rep.violation.unwrap_or_default()));
    }
    if rep.width > d.t + 1 {
        return bad(format!("lifted width {} exceeds {}", rep.width, d.t + 1));
    }
    let mut owner = vec![None; d.bags.len()];
    for (u, &(a, b)) in d.intervals.iter().enumerate() {
        for e in [a, b] {
            match owner[e] {
                Some(v) if v != u => return bad(format!("position {e} ends both {v} and {u}")),
                _ => owner[e] = Some(u),
            }
        }
    }
    for u in 0..n {
        let (lo, hi) = (d.intervals[n + u], d.intervals[2 * n + u]);
        if lo.1 >= hi.0 {
            return bad(format!("interval of {u}' does not precede that of {u}''"));
        }
        for v in 0..n {
            let iv = d.intervals[v];
            let meets = |x: (usize, usize)| iv.0 <= x.1 && x.0 <= iv.1;
            let holds = |x: (usize, usize)| iv.0 <= x.0 && x.1 <= iv.1;
            if (meets(lo) || meets(hi)) && !(holds(lo) && holds(hi)) {
                return bad(format!("interval of {v} meets but does not contain those of {u}', {u}''"));
            }
        }
    }
    Ok(())
}
