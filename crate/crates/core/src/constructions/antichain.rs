//! Local realizer for a poset split as a maximal antichain `A`, the points
//! `X` below it and the points `Y` above it.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::relabel;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::{verify_local_realizer, LinearOrder, PleFamily};
use crate::solvers::{ldim_exact_with, topo_sort, SolverOptions, Witness};

/// Subposets on at most this many points get an exact local realizer.
const EXACT_SUBREALIZER_LIMIT: usize = 12;
const EXACT_SUBREALIZER_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntichainParts {
    pub antichain: Vec<usize>,
    pub below: Vec<usize>,
    pub above: Vec<usize>,
}

/// `X` and `Y` for an antichain `A`; fails unless `A` is a maximal antichain.
pub fn antichain_complement_parts(p: &Poset, a: &[usize]) -> Result<AntichainParts> {
    let n = p.len();
    let mut in_a = FixedBitSet::with_capacity(n);
    for &e in a {
        if e >= n {
            return Err(Error::OutOfRange { id: e, n });
        }
        in_a.insert(e);
    }
    for &u in a {
        for &v in a {
            if p.lt(u, v) {
                return Err(Error::HypothesesViolated(format!("{u} < {v} inside the antichain")));
            }
        }
    }
    let mut below = Vec::new();
    let mut above = Vec::new();
    for u in p.elements().filter(|&u| !in_a.contains(u)) {
        if a.iter().any(|&e| p.lt(u, e)) {
            below.push(u);
        } else if a.iter().any(|&e| p.lt(e, u)) {
            above.push(u);
        } else {
            return Err(Error::HypothesesViolated(format!("antichain is not maximal: {u} is free")));
        }
    }
    let mut antichain = a.to_vec();
    antichain.sort_unstable();
    antichain.dedup();
    Ok(AntichainParts { antichain, below, above })
}

/// One full linear extension per chain of a minimum chain partition, with
/// the chain placed above everything incomparable to it.
pub fn upward_extension_realizer(p: &Poset) -> PleFamily {
    let members: Vec<usize> = p.elements().collect();
    let ples = p
        .width()
        .chains
        .chains
        .iter()
        .map(|chain| {
            let mut on = FixedBitSet::with_capacity(p.len());
            chain.iter().for_each(|&c| on.insert(c));
            topo_sort(&members, |u, v| p.lt(u, v) || (on.contains(v) && p.incomparable(u, v)))
        })
        .collect();
    PleFamily::new(ples)
}

/// Local realizer of the subposet on `elements` (parent ids): the lowest
/// frequency among an exact search (small inputs only), the upward extension
/// realizer, and this construction applied recursively around a maximum
/// antichain of the subposet.
fn sub_local_realizer(p: &Poset, elements: &[usize]) -> PleFamily {
    let sub = p.subposet(elements);
    let q = &sub.poset;
    let n = q.len();
    let mut best = upward_extension_realizer(q);
    let mut consider = |f: PleFamily| {
        if f.mu(n) < best.mu(n) {
            best = f;
        }
    };
    if n <= EXACT_SUBREALIZER_LIMIT {
        let opts = SolverOptions { max_elements: EXACT_SUBREALIZER_LIMIT, node_budget: EXACT_SUBREALIZER_BUDGET };
        if let Ok(cert) = ldim_exact_with(q, n.max(1), opts) {
            if let Witness::LocalRealizer(f) = cert.witness {
                consider(f);
            }
        }
    }
    let antichain = q.width().antichain;
    if antichain.len() == n {
        let order = LinearOrder((0..n).collect());
        consider(PleFamily::new(vec![order.reversed(), order]));
    } else {
        if let Ok(parts) = antichain_complement_parts(q, &antichain) {
            if let Ok(f) = antichain_complement_local_realizer(q, &parts) {
                consider(f);
            }
        }
    }
    PleFamily::new(best.ples.iter().map(|l| relabel(l, &sub.elements)).collect())
}

fn binomial(n: usize, k: usize) -> usize {
    // Saturates; only comparisons against small `s` matter.
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Least `s` with `s ≥ C(m, ⌈m/2⌉)` where `m = ⌈n/s⌉`, and that `m`.
pub fn block_parameters(n: usize) -> (usize, usize) {
    for s in 1.. {
        let m = n.div_ceil(s);
        if s >= binomial(m, m.div_ceil(2)) {
            return (s, m);
        }
    }
    unreachable!()
}

/// Ples over `X ∪ A` putting every `x ∈ X` above every `a ∈ A` incomparable
/// to it. Requires every `x ∈ X` to lie below some point of `A`.
fn upset_chain_ples(p: &Poset, xs: &[usize], a: &[usize]) -> Vec<LinearOrder> {
    if xs.is_empty() {
        return Vec::new();
    }
    let (_, m) = block_parameters(xs.len());
    let ext = p.linear_extension();
    let mut rank = vec![0; p.len()];
    for (i, &e) in ext.iter().enumerate() {
        rank[e] = i;
    }
    let mut out = Vec::new();
    for block in xs.chunks(m) {
        let k = block.len();
        // Upsets of the block as bitmasks over block positions.
        let is_upset = |mask: u32| {
            (0..k).all(|i| {
                mask >> i & 1 == 0 || (0..k).all(|j| !p.lt(block[i], block[j]) || mask >> j & 1 == 1)
            })
        };
        let upsets: Vec<u32> = (1..1u32 << k).filter(|&mk| is_upset(mk)).collect();
        let family = Poset::from_closed_predicate(upsets.len(), |i, j| {
            upsets[i] != upsets[j] && upsets[i] & upsets[j] == upsets[i]
        });
        // S_a for each antichain point, as a block mask.
        let s_of: Vec<(usize, u32)> = a
            .iter()
            .map(|&e| {
                let mask = (0..k).filter(|&i| p.incomparable(block[i], e)).fold(0u32, |acc, i| acc | 1 << i);
                (e, mask)
            })
            .filter(|&(_, mask)| mask != 0)
            .collect();
        for chain in family.width().chains.chains {
            // chain runs from the smallest upset S_1 to the largest S_r.
            let mut order: Vec<usize> = Vec::new();
            let mut prev = 0u32;
            let mut blocks: Vec<(u32, Vec<usize>)> = Vec::new();
            for &ci in &chain {
                let s = upsets[ci];
                let mut d: Vec<usize> = (0..k).filter(|&i| (s & !prev) >> i & 1 == 1).map(|i| block[i]).collect();
                d.sort_by_key(|&e| rank[e]);
                blocks.push((s, d));
                prev = s;
            }
            // D_r lowest, D_1 highest; antichain points sit right under the
            // lowest element of their S_i.
            for (s, d) in blocks.iter().rev() {
                order.extend(s_of.iter().filter(|&&(_, mask)| mask == *s).map(|&(e, _)| e));
                order.extend(d);
            }
            out.push(LinearOrder(order));
        }
    }
    out
}

/// Local realizer of `P = A ∪ X ∪ Y` built from two extensions `X < A < Y`
/// with opposite orders on `A`, a local realizer of `X ∪ Y`, and upset-chain
/// ples on `X ∪ A` and (dually) on `Y ∪ A`.
pub fn antichain_complement_local_realizer(p: &Poset, parts: &AntichainParts) -> Result<PleFamily> {
    let expect = antichain_complement_parts(p, &parts.antichain)?;
    let (mut below, mut above) = (parts.below.clone(), parts.above.clone());
    below.sort_unstable();
    above.sort_unstable();
    if below != expect.below || above != expect.above {
        return Err(Error::HypothesesViolated(
            "X must be the points below A and Y the points above A".into(),
        ));
    }
    let a = &expect.antichain;
    let ext = p.linear_extension();
    let in_part = |set: &[usize]| -> Vec<usize> { ext.iter().copied().filter(|e| set.contains(e)).collect() };
    let x_ord = in_part(&below);
    let y_ord = in_part(&above);
    let mut l1 = x_ord.clone();
    l1.extend(a.iter());
    l1.extend(&y_ord);
    let mut l2 = x_ord;
    l2.extend(a.iter().rev());
    l2.extend(&y_ord);
    let mut ples = vec![LinearOrder(l1), LinearOrder(l2)];

    let mut rest: Vec<usize> = below.iter().chain(&above).copied().collect();
    rest.sort_unstable();
    // A single point has no pairs left to realize.
    if rest.len() > 1 {
        ples.extend(sub_local_realizer(p, &rest).ples);
    }
    ples.extend(upset_chain_ples(p, &below, a));
    let dual = p.dual();
    ples.extend(upset_chain_ples(&dual, &above, a).into_iter().map(|l| l.reversed()));
    let family = PleFamily::new(ples);
    debug_assert!(verify_local_realizer(p, &family).map(|r| r.valid).unwrap_or(false));
    Ok(family)
}
