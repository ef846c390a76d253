//! Exact Boolean dimension.
//!
//! `d` orders work iff no query string arises both from a pair with `x < y`
//! and from a pair without; the accepted set is then the set of strings of
//! the `x < y` pairs. Since `q(y, x)` is the complement of `q(x, y)`, the
//! accepted set never contains a string together with its complement.
//!
//! For `d <= 4` the search first fixes the accepted set up to the symmetries
//! of the problem (permuting orders permutes coordinates, reversing an order
//! flips a coordinate) and then inserts elements one at a time into all `d`
//! orders, pruning on string prefixes. Larger `d` fall back to the direct
//! collision search used by the oracle.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::{Budget, DimCertificate, SolverOptions, Witness};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::{BitString, BooleanRealizer, LinearOrder};

pub const DEFAULT_BDIM_MAX_ELEMENTS: usize = 8;

pub fn bdim_exact(p: &Poset, d_max: usize) -> Result<DimCertificate> {
    let opts = SolverOptions::default().with_max_elements(DEFAULT_BDIM_MAX_ELEMENTS);
    bdim_exact_with(p, d_max, opts)
}

pub fn bdim_exact_with(p: &Poset, d_max: usize, opts: SolverOptions) -> Result<DimCertificate> {
    opts.check_size(p, "bdim_exact")?;
    if d_max == 0 {
        return Err(Error::Exceeded(0));
    }
    let n = p.len();
    if p.is_chain() || p.is_antichain() {
        let order = LinearOrder(p.linear_extension());
        let accepted = if p.is_chain() && n > 1 { vec![BitString::all_ones(1)] } else { vec![] };
        return Ok(DimCertificate {
            value: 1,
            witness: Witness::Boolean(BooleanRealizer::new(vec![order], accepted)),
            exhausted: vec![],
            nodes: 0,
            notes: vec![],
        });
    }
    let mut budget = Budget::new(opts.node_budget);
    let mut exhausted = vec![1];
    for d in 2..=d_max {
        let found = if d <= 4 {
            let mut found = None;
            for accepted in candidate_accepted_sets(p, d) {
                if let Some(b) = boolean_realizer_with_accepted(p, d, &accepted, &mut budget)? {
                    found = Some(b);
                    break;
                }
            }
            found
        } else {
            super::oracle::boolean_realizer_by_collisions(p, d, &mut budget)?
        };
        if let Some(b) = found {
            return Ok(DimCertificate {
                value: d,
                witness: Witness::Boolean(b),
                exhausted,
                nodes: budget.used(),
                notes: vec![],
            });
        }
        exhausted.push(d);
    }
    Err(Error::Exceeded(d_max))
}

/// Image of string `s` under the coordinate permutation `perm` followed by
/// the flip mask.
fn act(s: usize, perm: &[usize], flip: usize) -> usize {
    let mut t = 0;
    for (i, &j) in perm.iter().enumerate() {
        if s >> i & 1 == 1 {
            t |= 1 << j;
        }
    }
    t ^ flip
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for i in 0..d {
            let mut q = p.clone();
            q.insert(i, d - 1);
            out.push(q);
        }
    }
    out
}

/// Complement-free accepted sets (no string with its complement), one per
/// symmetry class, as bit masks over the `2^d` strings. `d` is at most 4.
fn canonical_sets(d: usize) -> &'static [u32] {
    static TABLES: OnceLock<Vec<Vec<u32>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (0..=4usize)
            .map(|d| {
                let full = (1usize << d) - 1;
                let half = 1usize << d.saturating_sub(1);
                let group: Vec<Vec<usize>> = permutations(d)
                    .iter()
                    .flat_map(|perm| {
                        (0..=full).map(move |flip| (0..=full).map(|s| act(s, perm, flip)).collect())
                    })
                    .collect();
                let mut reps = Vec::new();
                let total = 3usize.pow(half as u32);
                for code in 0..total {
                    let mut mask = 0u32;
                    let mut c = code;
                    for s in 0..half {
                        match c % 3 {
                            1 => mask |= 1 << s,
                            2 => mask |= 1 << (s ^ full),
                            _ => {}
                        }
                        c /= 3;
                    }
                    if d == 0 {
                        continue;
                    }
                    let image = |g: &Vec<usize>| {
                        (0..=full).filter(|&s| mask >> s & 1 == 1).fold(0u32, |m, s| m | 1 << g[s])
                    };
                    if group.iter().all(|g| image(g) >= mask) {
                        reps.push(mask);
                    }
                }
                reps
            })
            .collect()
    });
    &tables[d]
}

/// Canonical accepted sets compatible with `p`: non-empty when `p` has a
/// comparable pair, and leaving some complementary pair of strings out when
/// `p` has an incomparable pair. Smaller sets come first.
pub(crate) fn candidate_accepted_sets(p: &Poset, d: usize) -> Vec<BTreeSet<BitString>> {
    let full = (1usize << d) - 1;
    let has_lt = p.comparable_count() > 0;
    let has_inc = !p.incomparable_pairs().is_empty();
    let mut sets: Vec<u32> = canonical_sets(d)
        .iter()
        .copied()
        .filter(|&m| !has_lt || m != 0)
        .filter(|&m| !has_inc || (0..=full).any(|s| m >> s & 1 == 0 && m >> (s ^ full) & 1 == 0))
        .collect();
    sets.sort_by_key(|m| (m.count_ones(), *m));
    sets.into_iter()
        .map(|m| (0..=full).filter(|&s| m >> s & 1 == 1).map(|s| BitString::new(s as u64, d)).collect())
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Lt = 0,
    Gt = 1,
    Inc = 2,
}

/// Orders realizing `p` with exactly this accepted set, if any.
pub fn boolean_realizer_with_accepted(
    p: &Poset,
    d: usize,
    accepted: &BTreeSet<BitString>,
    budget: &mut Budget,
) -> Result<Option<BooleanRealizer>> {
    assert!((1..=16).contains(&d), "accepted-set search supports 1..=16 orders");
    let strings = 1usize << d;
    let full = strings - 1;
    let acc: Vec<bool> = (0..strings).map(|s| accepted.contains(&BitString::new(s as u64, d))).collect();
    let allowed = |r: Rel, s: usize| match r {
        Rel::Lt => acc[s],
        Rel::Gt => acc[s ^ full],
        Rel::Inc => !acc[s] && !acc[s ^ full],
    };
    // prefix_ok[r][j] has bit v set when a j-bit prefix v extends to an
    // allowed string.
    let mut prefix_ok = vec![vec![vec![false; strings]; d + 1]; 3];
    for r in [Rel::Lt, Rel::Gt, Rel::Inc] {
        for s in 0..strings {
            if allowed(r, s) {
                for j in 0..=d {
                    prefix_ok[r as usize][j][s & ((1 << j) - 1)] = true;
                }
            }
        }
    }
    let n = p.len();
    let seq = insertion_sequence(p);
    let mut st = Insertion {
        p,
        d,
        seq,
        orders: vec![Vec::with_capacity(n); d],
        cur: vec![0; n],
        prefix_ok,
    };
    if st.element(0, budget)? {
        let orders = st.orders.into_iter().map(LinearOrder).collect();
        return Ok(Some(BooleanRealizer { orders, accepted: accepted.clone() }));
    }
    Ok(None)
}

/// Most-related elements first, so constraints bite early.
fn insertion_sequence(p: &Poset) -> Vec<usize> {
    let mut seq: Vec<usize> = (0..p.len()).collect();
    seq.sort_by_key(|&x| {
        std::cmp::Reverse(p.up_set(x).count_ones(..) + p.down_set(x).count_ones(..))
    });
    seq
}

struct Insertion<'a> {
    p: &'a Poset,
    d: usize,
    seq: Vec<usize>,
    orders: Vec<Vec<usize>>,
    /// Bits of `q(e, f)` chosen so far for the element `e` being inserted.
    cur: Vec<usize>,
    prefix_ok: Vec<Vec<Vec<bool>>>,
}

impl Insertion<'_> {
    fn rel(&self, e: usize, f: usize) -> Rel {
        if self.p.lt(e, f) {
            Rel::Lt
        } else if self.p.lt(f, e) {
            Rel::Gt
        } else {
            Rel::Inc
        }
    }

    fn element(&mut self, k: usize, budget: &mut Budget) -> Result<bool> {
        if k == self.seq.len() {
            return Ok(true);
        }
        budget.tick()?;
        for &f in &self.seq[..k] {
            self.cur[f] = 0;
        }
        self.coordinate(k, 0, budget)
    }

    fn coordinate(&mut self, k: usize, j: usize, budget: &mut Budget) -> Result<bool> {
        if j == self.d {
            return self.element(k + 1, budget);
        }
        let e = self.seq[k];
        let len = self.orders[j].len();
        for pos in 0..=len {
            let mut ok = true;
            for (idx, &f) in self.orders[j].iter().enumerate() {
                let bit = usize::from(idx >= pos) << j;
                let v = self.cur[f] | bit;
                if !self.prefix_ok[self.rel(e, f) as usize][j + 1][v] {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let saved: Vec<usize> = self.seq[..k].iter().map(|&f| self.cur[f]).collect();
            for idx in 0..len {
                let f = self.orders[j][idx];
                self.cur[f] |= usize::from(idx >= pos) << j;
            }
            self.orders[j].insert(pos, e);
            if self.coordinate(k, j + 1, budget)? {
                return Ok(true);
            }
            self.orders[j].remove(pos);
            // Deeper levels reset `cur` when they start a new element.
            for (i, &f) in self.seq[..k].iter().enumerate() {
                self.cur[f] = saved[i];
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::standard_example;
    use crate::realizer::verify_boolean_realizer;

    fn bdim(p: &Poset) -> usize {
        let c = bdim_exact(p, 5).unwrap();
        let Witness::Boolean(b) = &c.witness else { unreachable!() };
        assert!(verify_boolean_realizer(p, b));
        assert_eq!(b.dimension(), c.value);
        c.value
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(bdim(&Poset::chain(3).unwrap()), 1);
        assert_eq!(bdim(&Poset::antichain(3).unwrap()), 1);
        assert_eq!(bdim(&Poset::chain(1).unwrap()), 1);
    }

    #[test]
    fn standard_examples() {
        assert_eq!(bdim(&standard_example(2).unwrap()), 2);
        assert_eq!(bdim(&standard_example(3).unwrap()), 3);
    }

    #[test]
    fn canonical_set_counts() {
        // d = 2: empty, one string, two non-complementary strings.
        assert_eq!(canonical_sets(2).len(), 3);
        assert_eq!(canonical_sets(1).len(), 2);
    }
}
