//! Lifting local realizers to the split-in-place poset `R`, either from the
//! split `Q` or from `P` itself. Outputs use the ids of
//! [`split_in_place`]: `x`, then `x' = n + x`, then `x'' = 2n + x`.

use super::require_local;
use crate::error::Result;
use crate::generators::{split, split_in_place};
use crate::poset::Poset;
use crate::realizer::{LinearOrder, PleFamily};

/// Local realizer of `R` with frequency at most `2μ(L) − 1`, from a local
/// realizer `L` of `Q = split(P)`.
///
/// Member `M_i` covers the primed elements of `L_i` plus every `x` with a
/// copy in `L_i`, and restricts to `L_i` on the primed elements.
pub fn split_lift_from_q(p: &Poset, l: &PleFamily) -> Result<PleFamily> {
    let n = p.len();
    let (q, qmap) = split(p);
    require_local(&q, l, "local realizer of split(P)")?;
    let (r, rmap) = split_in_place(p);
    // Q id -> (R id, original element).
    let mut to_r = vec![0; 2 * n];
    for x in 0..n {
        to_r[qmap.lower[x]] = rmap.lower[x];
        to_r[qmap.upper[x]] = rmap.upper[x];
    }
    let original = |qid: usize| if qid < n { qid } else { qid - n };
    let ples = l
        .ples
        .iter()
        .map(|li| {
            let primes: Vec<usize> = li.0.iter().map(|&e| to_r[e]).collect();
            let mut members = primes.clone();
            let mut mids: Vec<usize> = li.0.iter().map(|&e| original(e)).collect();
            mids.sort_unstable();
            mids.dedup();
            members.extend(&mids);
            super::extend_with_chain(&r, &members, &primes)
        })
        .collect();
    Ok(PleFamily::new(ples))
}

/// Local realizer of `R` with frequency at most `μ(L) + 2`, from a local
/// realizer `L` of `P`.
///
/// Each member gains `x'` directly under and `x''` directly over every `x`
/// it contains; two full extensions `X' < X < X''` follow, with the primed
/// blocks ordered forward in one and backward in the other.
pub fn split_lift_from_p(p: &Poset, l: &PleFamily) -> Result<PleFamily> {
    let n = p.len();
    require_local(p, l, "local realizer of P")?;
    let mut ples: Vec<LinearOrder> = l
        .ples
        .iter()
        .map(|li| LinearOrder(li.0.iter().flat_map(|&x| [n + x, x, 2 * n + x]).collect()))
        .collect();
    let ext = p.linear_extension();
    let rev: Vec<usize> = ext.iter().rev().copied().collect();
    let block = |order: &[usize], off: usize| -> Vec<usize> { order.iter().map(|&x| off + x).collect() };
    let forward = [block(&ext, n), block(&ext, 0), block(&ext, 2 * n)].concat();
    let backward = [block(&rev, n), block(&ext, 0), block(&rev, 2 * n)].concat();
    ples.push(LinearOrder(forward));
    ples.push(LinearOrder(backward));
    Ok(PleFamily::new(ples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::standard_example;
    use crate::realizer::verify_local_realizer;
    use crate::solvers::{ldim_exact, Witness};

    fn local(p: &Poset) -> PleFamily {
        match ldim_exact(p, 8).unwrap().witness {
            Witness::LocalRealizer(f) => f,
            _ => unreachable!(),
        }
    }

    #[test]
    fn lift_from_q_on_small_posets() {
        for p in [Poset::chain(1).unwrap(), Poset::chain(2).unwrap(), standard_example(2).unwrap()] {
            let (q, _) = split(&p);
            let l = local(&q);
            let out = split_lift_from_q(&p, &l).unwrap();
            let (r, _) = split_in_place(&p);
            let rep = verify_local_realizer(&r, &out).unwrap();
            assert!(rep.valid, "{:?}", rep.violation);
            assert!(rep.mu < 2 * l.mu(q.len()));
        }
    }

    #[test]
    fn single_point_lifts_to_three_chain() {
        let p = Poset::chain(1).unwrap();
        let (q, _) = split(&p);
        let out = split_lift_from_q(&p, &local(&q)).unwrap();
        let (r, _) = split_in_place(&p);
        assert_eq!(verify_local_realizer(&r, &out).unwrap().mu, 1);
    }

    #[test]
    fn lift_from_p_on_chain_and_antichain() {
        let c = Poset::chain(3).unwrap();
        let out = split_lift_from_p(&c, &PleFamily::from_vecs(vec![vec![0, 1, 2]])).unwrap();
        let (r, _) = split_in_place(&c);
        let rep = verify_local_realizer(&r, &out).unwrap();
        assert!(rep.valid);
        assert_eq!(rep.mu, 3);

        let a = Poset::antichain(3).unwrap();
        let la = local(&a);
        let out = split_lift_from_p(&a, &la).unwrap();
        let (r, _) = split_in_place(&a);
        let rep = verify_local_realizer(&r, &out).unwrap();
        assert!(rep.valid, "{:?}", rep.violation);
        assert!(rep.mu <= la.mu(3) + 2);
    }
}
