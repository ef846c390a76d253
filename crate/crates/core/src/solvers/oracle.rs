//! Brute-force oracles, written independently of the main solvers, for
//! cross-checking on posets with at most seven elements.

use std::collections::{BTreeSet, HashMap};

use super::Budget;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::{BitString, BooleanRealizer, LinearOrder};

pub const ORACLE_MAX_ELEMENTS: usize = 7;

fn check_size(p: &Poset) -> Result<()> {
    if p.len() > ORACLE_MAX_ELEMENTS {
        return Err(Error::BudgetExceeded(format!(
            "oracles accept at most {ORACLE_MAX_ELEMENTS} elements, got {}",
            p.len()
        )));
    }
    Ok(())
}

/// All linear extensions of the subposet on `members`.
pub fn linear_extensions_of(p: &Poset, members: &[usize]) -> Vec<Vec<usize>> {
    fn rec(p: &Poset, left: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left[i];
            if left.iter().any(|&y| p.lt(y, x)) {
                continue;
            }
            left.remove(i);
            cur.push(x);
            rec(p, left, cur, out);
            cur.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(p, &mut members.to_vec(), &mut Vec::new(), &mut out);
    out
}

pub fn linear_extensions(p: &Poset) -> Vec<Vec<usize>> {
    linear_extensions_of(p, &(0..p.len()).collect::<Vec<_>>())
}

/// Bit `i` of the mask is set when the order puts `inc[i].0` above `inc[i].1`.
fn reversal_mask(order: &[usize], inc: &[(usize, usize)], n: usize) -> u64 {
    let mut pos = vec![usize::MAX; n];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let mut m = 0u64;
    for (i, &(x, y)) in inc.iter().enumerate() {
        if pos[x] != usize::MAX && pos[y] != usize::MAX && pos[x] > pos[y] {
            m |= 1 << i;
        }
    }
    m
}

/// Masks not strictly contained in another mask of the list.
fn maximal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable();
    masks.dedup();
    let all = masks.clone();
    masks.retain(|&m| !all.iter().any(|&o| o != m && o & m == m));
    masks
}

/// Can one mask per slot be picked so the union is `target`?
fn cover(slots: &[Vec<u64>], i: usize, acc: u64, target: u64, budget: &mut Budget) -> Result<bool> {
    budget.tick()?;
    if acc == target {
        return Ok(true);
    }
    if i == slots.len() {
        return Ok(false);
    }
    let rest = slots[i..].iter().fold(acc, |a, s| a | s.iter().fold(0, |b, m| b | m));
    if rest != target {
        return Ok(false);
    }
    for &m in &slots[i] {
        if m | acc != acc && cover(slots, i + 1, acc | m, target, budget)? {
            return Ok(true);
        }
    }
    cover(slots, i + 1, acc, target, budget)
}

/// Dimension by choosing `d` of the enumerated linear extensions.
pub fn dim_by_extensions(p: &Poset, d_max: usize) -> Result<usize> {
    check_size(p)?;
    let inc = p.incomparable_pairs();
    if inc.is_empty() {
        return Ok(1);
    }
    let target = if inc.len() == 64 { u64::MAX } else { (1u64 << inc.len()) - 1 };
    let masks = maximal_masks(
        linear_extensions(p).iter().map(|l| reversal_mask(l, &inc, p.len())).collect(),
    );
    let mut budget = Budget::new(u64::MAX);
    for d in 2..=d_max {
        let slots = vec![masks.clone(); d];
        if cover(&slots, 0, 0, target, &mut budget)? {
            return Ok(d);
        }
    }
    Err(Error::Exceeded(d_max))
}

/// Local dimension by enumerating ground-set shapes.
///
/// Enlarging a ple never hurts (a linear extension of a subposet extends to
/// any larger subposet), so with `m` ples and frequency bound `k` every
/// element may be assumed to lie in exactly `min(k, m)` of them, and no ple
/// is a singleton, giving `m <= kn/2`. For each shape the oracle enumerates
/// the linear extensions of every ple and searches for a choice reversing
/// every incomparable pair.
pub fn ldim_by_shapes(p: &Poset, d_max: usize) -> Result<usize> {
    check_size(p)?;
    let n = p.len();
    if p.is_chain() {
        return Ok(1);
    }
    let inc = p.incomparable_pairs();
    let target = (1u64 << inc.len()) - 1;
    let mut budget = Budget::new(u64::MAX);
    let mut cache: HashMap<u32, Vec<u64>> = HashMap::new();
    for k in 2..=d_max {
        for m in 2..=(k * n / 2) {
            let mut shape = ShapeSearch {
                p,
                k: k.min(m),
                m,
                grounds: vec![0u32; m],
                inc: &inc,
                target,
                cache: &mut cache,
            };
            if shape.assign(0, 0, &mut budget)? {
                return Ok(k);
            }
        }
    }
    Err(Error::Exceeded(d_max))
}

struct ShapeSearch<'a> {
    p: &'a Poset,
    k: usize,
    m: usize,
    grounds: Vec<u32>,
    inc: &'a [(usize, usize)],
    target: u64,
    cache: &'a mut HashMap<u32, Vec<u64>>,
}

impl ShapeSearch<'_> {
    fn co_occurrences(&self, x: usize, y: usize) -> usize {
        self.grounds.iter().filter(|&&g| g >> x & 1 == 1 && g >> y & 1 == 1).count()
    }

    /// Element `e` picks its `k` ples; `used` ples have been touched so far
    /// and fresh ples are opened in index order.
    fn assign(&mut self, e: usize, used: usize, budget: &mut Budget) -> Result<bool> {
        if e == self.p.len() {
            if used < self.m || self.grounds.iter().any(|g| g.count_ones() < 2) {
                return Ok(false);
            }
            return self.feasible(budget);
        }
        // Fresh ples are interchangeable, so only the first few unused ones
        // may be opened.
        let max_fresh = self.k.min(self.m - used);
        for fresh in 0..=max_fresh {
            if self.k - fresh > used {
                continue;
            }
            for old in crate::generators::combinations(used, self.k - fresh) {
                let choice: Vec<usize> = old.into_iter().chain(used..used + fresh).collect();
                for &j in &choice {
                    self.grounds[j] |= 1 << e;
                }
                let ok = (0..e).all(|f| {
                    let need = if self.p.comparable(e, f) { 1 } else { 2 };
                    self.co_occurrences(e, f) >= need
                });
                let found = ok && self.assign(e + 1, used + fresh, budget)?;
                for &j in &choice {
                    self.grounds[j] &= !(1 << e);
                }
                if found {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn feasible(&mut self, budget: &mut Budget) -> Result<bool> {
        let mut slots = Vec::with_capacity(self.m);
        for &g in &self.grounds {
            let masks = self.cache.entry(g).or_insert_with(|| {
                let members: Vec<usize> = (0..self.p.len()).filter(|&x| g >> x & 1 == 1).collect();
                maximal_masks(
                    linear_extensions_of(self.p, &members)
                        .iter()
                        .map(|l| reversal_mask(l, self.inc, self.p.len()))
                        .collect(),
                )
            });
            slots.push(masks.clone());
        }
        cover(&slots, 0, 0, self.target, budget)
    }
}

/// Orders with no query-string collision between `x < y` pairs and the
/// rest, found by inserting elements in id order and checking full strings.
pub fn boolean_realizer_by_collisions(
    p: &Poset,
    d: usize,
    budget: &mut Budget,
) -> Result<Option<BooleanRealizer>> {
    assert!(d <= 16);
    let n = p.len();
    let mut st = Collisions {
        p,
        d,
        orders: vec![Vec::new(); d],
        lt: vec![0u32; 1 << d],
        other: vec![0u32; 1 << d],
    };
    if st.element(0, budget)? {
        let full = (1usize << d) - 1;
        let accepted: BTreeSet<BitString> =
            (0..=full).filter(|&s| st.lt[s] > 0).map(|s| BitString::new(s as u64, d)).collect();
        let orders = st.orders.into_iter().map(LinearOrder).collect();
        debug_assert!(n > 0);
        return Ok(Some(BooleanRealizer { orders, accepted }));
    }
    Ok(None)
}

struct Collisions<'a> {
    p: &'a Poset,
    d: usize,
    orders: Vec<Vec<usize>>,
    lt: Vec<u32>,
    other: Vec<u32>,
}

impl Collisions<'_> {
    fn element(&mut self, e: usize, budget: &mut Budget) -> Result<bool> {
        if e == self.p.len() {
            return Ok(true);
        }
        let mut positions = vec![0usize; self.d];
        self.positions(e, 0, &mut positions, budget)
    }

    fn positions(&mut self, e: usize, j: usize, pos: &mut Vec<usize>, budget: &mut Budget) -> Result<bool> {
        if j < self.d {
            // Reversing an order flips a coordinate everywhere, so element 1
            // may be assumed to follow element 0 in every order.
            let range: Vec<usize> = if e == 1 { vec![1] } else { (0..=e).collect() };
            for q in range {
                pos[j] = q;
                if self.positions(e, j + 1, pos, budget)? {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        budget.tick()?;
        for (j, &q) in pos.iter().enumerate() {
            self.orders[j].insert(q, e);
        }
        let full = (1usize << self.d) - 1;
        let mut added: Vec<(bool, usize)> = Vec::new();
        let mut ok = true;
        for f in 0..e {
            let s = (0..self.d).fold(0usize, |acc, j| {
                let pe = self.orders[j].iter().position(|&x| x == e).unwrap();
                let pf = self.orders[j].iter().position(|&x| x == f).unwrap();
                acc | usize::from(pe < pf) << j
            });
            let entries: Vec<(bool, usize)> = if self.p.lt(e, f) {
                vec![(true, s), (false, s ^ full)]
            } else if self.p.lt(f, e) {
                vec![(true, s ^ full), (false, s)]
            } else {
                vec![(false, s), (false, s ^ full)]
            };
            for (is_lt, t) in entries {
                if is_lt {
                    self.lt[t] += 1;
                } else {
                    self.other[t] += 1;
                }
                added.push((is_lt, t));
                if self.lt[t] > 0 && self.other[t] > 0 {
                    ok = false;
                }
            }
            if !ok {
                break;
            }
        }
        let found = ok && self.element(e + 1, budget)?;
        if !found {
            for (is_lt, t) in added {
                if is_lt {
                    self.lt[t] -= 1;
                } else {
                    self.other[t] -= 1;
                }
            }
            for (j, &q) in pos.iter().enumerate() {
                self.orders[j].remove(q);
            }
        }
        Ok(found)
    }
}

pub fn bdim_by_collisions(p: &Poset, d_max: usize) -> Result<usize> {
    check_size(p)?;
    if p.is_chain() || p.is_antichain() {
        return Ok(1);
    }
    let mut budget = Budget::new(u64::MAX);
    for d in 2..=d_max {
        if boolean_realizer_by_collisions(p, d, &mut budget)?.is_some() {
            return Ok(d);
        }
    }
    Err(Error::Exceeded(d_max))
}
