//! Extending certificates of `P − {x}` to certificates of `P`.
//!
//! Each input certificate uses the ids of `p.remove_point(x)`, so parent id
//! `y` appears as `y` when `y < x` and as `y − 1` otherwise.

use std::collections::BTreeSet;

use super::{extend_with_chain, relabel, require_local, require_realizer, restrict};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::{verify_boolean_realizer, BitString, BooleanRealizer, LinearOrder, PleFamily};

fn check_point(p: &Poset, x: usize) -> Result<()> {
    if x >= p.len() {
        return Err(Error::OutOfRange { id: x, n: p.len() });
    }
    Ok(())
}

/// `L(D) < x < L(Y − D)` and `L(Y − U) < x < L(U)` for a full order `l` of
/// `P − {x}` given in parent ids.
fn point_blocks(p: &Poset, x: usize, l: &[usize]) -> (LinearOrder, LinearOrder) {
    let below = |y: usize| p.lt(y, x);
    let above = |y: usize| p.lt(x, y);
    let mut lower = restrict(l, below);
    lower.push(x);
    lower.extend(restrict(l, |y| !below(y)));
    let mut upper = restrict(l, |y| !above(y));
    upper.push(x);
    upper.extend(restrict(l, above));
    (LinearOrder(lower), LinearOrder(upper))
}

/// Realizer of `P` with one more member than the realizer `r` of `P − {x}`.
pub fn dim_remove_point_extend(p: &Poset, x: usize, r: &PleFamily) -> Result<PleFamily> {
    check_point(p, x)?;
    if p.len() == 1 {
        return Ok(PleFamily::from_vecs(vec![vec![x], vec![x]]));
    }
    let q = p.remove_point(x);
    require_realizer(&q.poset, r, "realizer of P - x")?;
    let all: Vec<usize> = p.elements().collect();
    let orders: Vec<LinearOrder> = r.ples.iter().map(|l| relabel(l, &q.elements)).collect();
    let (last, rest) = orders.split_last().expect("verified realizers are non-empty");
    let mut out: Vec<LinearOrder> =
        rest.iter().map(|l| extend_with_chain(p, &all, &l.0)).collect();
    let (lower, upper) = point_blocks(p, x, &last.0);
    out.push(lower);
    out.push(upper);
    Ok(PleFamily::new(out))
}

/// Local realizer of `P` with frequency at most `μ(L) + 1`, from a local
/// realizer `L` of `P − {x}`.
pub fn ldim_remove_point_extend(p: &Poset, x: usize, l: &PleFamily) -> Result<PleFamily> {
    check_point(p, x)?;
    if p.len() == 1 {
        return Ok(PleFamily::from_vecs(vec![vec![x]]));
    }
    let q = p.remove_point(x);
    let d = require_local(&q.poset, l, "local realizer of P - x")?;

    // Pad with singletons so every element has frequency exactly d.
    let mut ples: Vec<Vec<usize>> = l.ples.iter().map(|o| relabel(o, &q.elements).0).collect();
    let freq = l.frequencies(q.poset.len());
    for (i, &f) in freq.iter().enumerate() {
        for _ in f..d {
            ples.push(vec![q.elements[i]]);
        }
    }

    let y0 = q.elements[0];
    let (with_y0, others): (Vec<Vec<usize>>, Vec<Vec<usize>>) =
        ples.into_iter().partition(|o| o.contains(&y0));
    debug_assert_eq!(with_y0.len(), d);

    // M_i: insert x right after the last element of L_i below it.
    let extend = |o: &[usize]| -> Vec<usize> {
        let cut = o.iter().rposition(|&y| p.lt(y, x)).map_or(0, |i| i + 1);
        let mut m = o[..cut].to_vec();
        m.push(x);
        m.extend_from_slice(&o[cut..]);
        m
    };
    let ms: Vec<Vec<usize>> = with_y0.iter().map(|o| extend(o)).collect();

    let incomparable: Vec<usize> = p.elements().filter(|&u| p.incomparable(x, u)).collect();
    if incomparable.is_empty() {
        return Ok(PleFamily::from_vecs(ms.into_iter().chain(others).collect()));
    }

    let (m_last, m_rest) = ms.split_last().expect("d >= 1");
    let q_d: BTreeSet<usize> = with_y0[d - 1].iter().copied().collect();
    let side_of = |u: usize| -> Vec<bool> {
        // For each earlier M_i containing u: whether x lies above u.
        m_rest
            .iter()
            .filter_map(|m| {
                let pu = m.iter().position(|&e| e == u)?;
                let px = m.iter().position(|&e| e == x).expect("x in every M_i");
                Some(px > pu)
            })
            .collect()
    };
    let mut w_set = Vec::new();
    let mut z_set = Vec::new();
    for &u in &incomparable {
        if q_d.contains(&u) {
            continue;
        }
        let sides = side_of(u);
        if sides.iter().all(|&above| above) {
            w_set.push(u);
        }
        if sides.iter().all(|&above| !above) {
            z_set.push(u);
        }
    }

    let px = m_last.iter().position(|&e| e == x).expect("x in M_d");
    let a_block = &m_last[..px];
    let b_block = &m_last[px + 1..];
    let inc = |u: usize| p.incomparable(x, u);

    // N_1 = (A − A') < x < (A' ∪ B ∪ W)
    let mut n1 = restrict(a_block, |u| !inc(u));
    debug_assert!(w_set.iter().all(|&w| n1.iter().all(|&a| !p.lt(w, a))));
    n1.push(x);
    let mut upper: Vec<usize> = restrict(a_block, inc);
    upper.extend_from_slice(b_block);
    upper.extend_from_slice(&w_set);
    let chain: Vec<usize> = m_last.iter().copied().filter(|&e| e != x).collect();
    n1.extend(extend_with_chain(p, &upper, &chain).0);

    // N_2 = (A ∪ B' ∪ Z) < x < (B − B')
    let mut lower: Vec<usize> = a_block.to_vec();
    lower.extend(restrict(b_block, inc));
    lower.extend_from_slice(&z_set);
    let mut n2 = extend_with_chain(p, &lower, &chain).0;
    n2.push(x);
    n2.extend(restrict(b_block, |u| !inc(u)));

    let mut out: Vec<Vec<usize>> = m_rest.to_vec();
    out.extend(others);
    out.push(n1);
    out.push(n2);
    Ok(PleFamily::from_vecs(out))
}

/// Boolean realizer of `P` with three more orders than the Boolean realizer
/// `b` of `P − {x}`.
///
/// The first `d + 1` orders put `x` first, so their bits are constant exactly
/// on pairs involving `x`; the last two orders decide those pairs.
pub fn bdim_remove_point_extend(p: &Poset, x: usize, b: &BooleanRealizer) -> Result<BooleanRealizer> {
    check_point(p, x)?;
    if p.len() == 1 {
        return Ok(BooleanRealizer::new(vec![LinearOrder(vec![x]); 3], []));
    }
    let q = p.remove_point(x);
    if !verify_boolean_realizer(&q.poset, b) {
        return Err(Error::InvalidInput("Boolean realizer of P - x does not verify".into()));
    }
    let d = b.dimension();
    if d + 3 > 64 {
        return Err(Error::InvalidInput("at most 61 input orders are supported".into()));
    }
    let mut orders = Vec::with_capacity(d + 3);
    for l in &b.orders {
        let mut m = vec![x];
        m.extend(relabel(l, &q.elements).0);
        orders.push(LinearOrder(m));
    }
    let mut m = vec![x];
    m.extend(relabel(&b.orders[0].reversed(), &q.elements).0);
    orders.push(LinearOrder(m));
    let ext: Vec<usize> = p.linear_extension().into_iter().filter(|&y| y != x).collect();
    let (lower, upper) = point_blocks(p, x, &ext);
    orders.push(lower);
    orders.push(upper);

    let len = d + 3;
    let head = (1u64 << (d + 1)) - 1;
    let tail = 0b11u64 << (d + 1);
    let mut accepted = vec![BitString::new(head | tail, len), BitString::new(tail, len)];
    for s in &b.accepted {
        let flip = if s.get(0) { 0 } else { 1u64 << d };
        for e in 0..4u64 {
            accepted.push(BitString::new(s.bits() | flip | e << (d + 1), len));
        }
    }
    Ok(BooleanRealizer::new(orders, accepted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::standard_example;
    use crate::realizer::{verify_local_realizer, verify_realizer};
    use crate::solvers::{bdim_exact, dim_exact, ldim_exact, Witness};

    fn with_global_max(p: &Poset) -> Poset {
        let n = p.len();
        let mut pairs = p.comparable_pairs();
        pairs.extend((0..n).map(|y| (y, n)));
        Poset::from_relation(n + 1, &pairs, crate::RelationMode::Full).unwrap()
    }

    #[test]
    fn dim_extension_of_standard_example_plus_max() {
        let s2 = standard_example(2).unwrap();
        let p = with_global_max(&s2);
        let Witness::Realizer(r) = dim_exact(&s2, 4).unwrap().witness else { panic!() };
        let out = dim_remove_point_extend(&p, 4, &r).unwrap();
        assert_eq!(out.len(), 3);
        assert!(verify_realizer(&p, &out).unwrap());
    }

    #[test]
    fn dim_extension_rejects_bad_input() {
        let p = standard_example(2).unwrap();
        let bad = PleFamily::from_vecs(vec![vec![0, 1, 2]]);
        assert!(matches!(dim_remove_point_extend(&p, 3, &bad), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn ldim_extension_with_comparable_point_keeps_mu() {
        let c = Poset::chain(3).unwrap();
        let l = PleFamily::from_vecs(vec![vec![0, 1]]);
        let out = ldim_remove_point_extend(&c, 2, &l).unwrap();
        let rep = verify_local_realizer(&c, &out).unwrap();
        assert!(rep.valid);
        assert_eq!(rep.mu, 1);
    }

    #[test]
    fn ldim_extension_on_antichain_plus_point() {
        let p = Poset::antichain(4).unwrap();
        let q = p.remove_point(3);
        let Witness::LocalRealizer(l) = ldim_exact(&q.poset, 4).unwrap().witness else { panic!() };
        let mu = l.mu(3);
        let out = ldim_remove_point_extend(&p, 3, &l).unwrap();
        let rep = verify_local_realizer(&p, &out).unwrap();
        assert!(rep.valid, "{:?}", rep.violation);
        assert!(rep.mu <= mu + 1);
    }

    #[test]
    fn bdim_extension_of_chain_middle() {
        let c = Poset::chain(3).unwrap();
        let q = c.remove_point(1);
        let Witness::Boolean(b) = bdim_exact(&q.poset, 3).unwrap().witness else { panic!() };
        let out = bdim_remove_point_extend(&c, 1, &b).unwrap();
        assert_eq!(out.dimension(), 4);
        assert!(verify_boolean_realizer(&c, &out));
    }
}
