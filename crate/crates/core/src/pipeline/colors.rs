//! Colouring the incomparable pairs of the split `Q`.
//!
//! `Q` uses the ids of [`crate::generators::split`]: `x' = x` and
//! `y'' = n + y`. Each element of `Q` sits in a single bag of the normalized
//! decomposition, so its interval is one position.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::normalize::NormalizedPathDecomposition;
use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorTable {
    pub n: usize,
    pub t: usize,
    /// Proper colouring of `P` by intervals, colours `0..=t`.
    pub phi: Vec<usize>,
    /// Bag index of each element of `Q`.
    pub position: Vec<usize>,
    /// Per element `z` of `Q`, the element of `P` of each colour whose
    /// interval contains that of `z`.
    pub stack: Vec<Vec<Option<usize>>>,
    /// Per element of `Q`: 0 empty slot, 1 `z < u`, 2 `z > u`, 3 incomparable
    /// (relations taken in the split-in-place).
    pub pi: Vec<Vec<u8>>,
}

/// The colour `σ(x, y)` of an incomparable pair of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SigmaColor {
    /// 0 when `x` lies left of `y`.
    pub alpha1: u8,
    pub pi_x: Vec<u8>,
    pub pi_y: Vec<u8>,
    /// Row-major `(t+1) x (t+1)`: 0 empty, 1 `u < v`, 2 `u > v`,
    /// 3 incomparable, 4 equal.
    pub tau: Vec<u8>,
}

impl ColorTable {
    pub fn len(&self) -> usize {
        2 * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_lower(&self, z: usize) -> bool {
        z < self.n
    }

    /// `τ(z, w)` over the colour slots of both stacks.
    pub fn tau(&self, p: &Poset, z: usize, w: usize) -> Vec<u8> {
        let k = self.t + 1;
        let mut out = vec![0u8; k * k];
        for i in 0..k {
            for j in 0..k {
                out[i * k + j] = match (self.stack[z][i], self.stack[w][j]) {
                    (Some(u), Some(v)) if u == v => 4,
                    (Some(u), Some(v)) if p.lt(u, v) => 1,
                    (Some(u), Some(v)) if p.lt(v, u) => 2,
                    (Some(_), Some(_)) => 3,
                    _ => 0,
                };
            }
        }
        out
    }

    pub fn sigma(&self, p: &Poset, x: usize, y: usize) -> SigmaColor {
        SigmaColor {
            alpha1: u8::from(self.position[x] > self.position[y]),
            pi_x: self.pi[x].clone(),
            pi_y: self.pi[y].clone(),
            tau: self.tau(p, x, y),
        }
    }
}

/// `2 · 4^{2(t+1)} · 5^{(t+1)^2}`, saturating.
pub fn sigma_palette_size(t: usize) -> u128 {
    let k = (t + 1) as u32;
    let pow = |b: u128, e: u32| b.checked_pow(e);
    pow(4, 2 * k)
        .and_then(|a| pow(5, k * k).and_then(|b| a.checked_mul(b)))
        .and_then(|c| c.checked_mul(2))
        .unwrap_or(u128::MAX)
}

/// Greedy interval colouring by left endpoint, stacks and `π`.
pub fn build_color_table(p: &Poset, d: &NormalizedPathDecomposition) -> Result<ColorTable> {
    let n = p.len();
    let t = d.t;
    let iv = &d.intervals;
    let meets = |u: usize, v: usize| iv[u].0 <= iv[v].1 && iv[v].0 <= iv[u].1;
    let mut by_start: Vec<usize> = (0..n).collect();
    by_start.sort_by_key(|&u| (iv[u].0, u));
    let mut phi = vec![usize::MAX; n];
    for (k, &u) in by_start.iter().enumerate() {
        let used: Vec<usize> =
            by_start[..k].iter().filter(|&&v| meets(u, v)).map(|&v| phi[v]).collect();
        phi[u] = (0..).find(|c| !used.contains(c)).expect("colours are unbounded");
        if phi[u] > t {
            return Err(Error::InvalidDecomposition(format!("interval colouring needs more than {} colours", t + 1)));
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if meets(u, v) && phi[u] == phi[v] {
                return Err(Error::InvalidDecomposition(format!("colouring is not proper on {u}, {v}")));
            }
        }
    }
    let mut position = Vec::with_capacity(2 * n);
    let mut stack = Vec::with_capacity(2 * n);
    let mut pi = Vec::with_capacity(2 * n);
    for z in 0..2 * n {
        let (e, r) = if z < n { (z, n + z) } else { (z - n, 2 * n + z - n) };
        let (a, b) = iv[r];
        debug_assert_eq!(a, b);
        position.push(a);
        let mut slots = vec![None; t + 1];
        let mut row = vec![0u8; t + 1];
        for u in 0..n {
            if iv[u].0 <= a && b <= iv[u].1 {
                slots[phi[u]] = Some(u);
                row[phi[u]] = if z < n {
                    if p.le(e, u) { 1 } else { 3 }
                } else if p.le(u, e) {
                    2
                } else {
                    3
                };
            }
        }
        stack.push(slots);
        pi.push(row);
    }
    Ok(ColorTable { n, t, phi, position, stack, pi })
}

/// Incomparable pairs `(x', y'')` of `Q` grouped by colour.
pub fn sigma_classes(p: &Poset, table: &ColorTable) -> BTreeMap<SigmaColor, Vec<(usize, usize)>> {
    let n = p.len();
    let mut classes: BTreeMap<SigmaColor, Vec<(usize, usize)>> = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            if !p.le(x, y) {
                classes.entry(table.sigma(p, x, n + y)).or_default().push((x, n + y));
            }
        }
    }
    classes
}
