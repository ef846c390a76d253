//! Reversible sets of incomparable pairs and alternating-cycle witnesses.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::ClassClosure;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::LinearOrder;

/// Cyclic sequence of incomparable pairs with `x_{i+1} <= y_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingCycle {
    pub pairs: Vec<(usize, usize)>,
}

impl AlternatingCycle {
    pub fn is_valid_for(&self, p: &Poset) -> bool {
        let k = self.pairs.len();
        k > 0
            && self.pairs.iter().all(|&(x, y)| p.incomparable(x, y))
            && (0..k).all(|i| p.le(self.pairs[(i + 1) % k].0, self.pairs[i].1))
    }

    /// Strict: `x_j <= y_i` holds only for `j = i + 1` (cyclically).
    pub fn is_strict_for(&self, p: &Poset) -> bool {
        let k = self.pairs.len();
        self.is_valid_for(p)
            && (0..k).all(|i| {
                (0..k).all(|j| (j == (i + 1) % k) == p.le(self.pairs[j].0, self.pairs[i].1))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Reversibility {
    /// A linear extension placing `x` above `y` for every pair.
    Reversible { extension: LinearOrder },
    /// A shortest alternating cycle inside the set.
    Cycle { cycle: AlternatingCycle },
}

impl Reversibility {
    pub fn is_reversible(&self) -> bool {
        matches!(self, Reversibility::Reversible { .. })
    }
}

/// Decides whether some linear extension puts `x` above `y` for every
/// `(x, y)` in `pairs`.
pub fn is_reversible(p: &Poset, pairs: &[(usize, usize)]) -> Result<Reversibility> {
    for &(x, y) in pairs {
        if x >= p.len() || y >= p.len() {
            return Err(Error::OutOfRange { id: x.max(y), n: p.len() });
        }
        if !p.incomparable(x, y) {
            return Err(Error::NotIncomparable(x, y));
        }
    }
    let mut closure = ClassClosure::new(p);
    let mut ok = true;
    for &(x, y) in pairs {
        if !closure.can_reverse(x, y) {
            ok = false;
            break;
        }
        closure.reverse(x, y);
    }
    if ok {
        return Ok(Reversibility::Reversible { extension: closure.extension(None) });
    }
    Ok(Reversibility::Cycle { cycle: shortest_cycle(p, pairs) })
}

/// Shortest cycle in the digraph on pairs with an arc `i -> j` when
/// `x_j <= y_i`. Being shortest, it has no chords and so is strict whenever
/// its pairs are distinct.
fn shortest_cycle(p: &Poset, pairs: &[(usize, usize)]) -> AlternatingCycle {
    let k = pairs.len();
    let succ: Vec<Vec<usize>> =
        (0..k).map(|i| (0..k).filter(|&j| p.le(pairs[j].0, pairs[i].1)).collect()).collect();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..k {
        let mut prev = vec![usize::MAX; k];
        let mut seen = vec![false; k];
        let mut q = VecDeque::from([s]);
        seen[s] = true;
        let mut closing = None;
        'bfs: while let Some(v) = q.pop_front() {
            for &w in &succ[v] {
                if w == s {
                    closing = Some(v);
                    break 'bfs;
                }
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = v;
                    q.push_back(w);
                }
            }
        }
        if let Some(mut v) = closing {
            let mut path = vec![v];
            while v != s {
                v = prev[v];
                path.push(v);
            }
            path.reverse();
            if best.as_ref().is_none_or(|b| path.len() < b.len()) {
                best = Some(path);
            }
        }
    }
    let path = best.expect("an irreversible set contains an alternating cycle");
    AlternatingCycle { pairs: path.into_iter().map(|i| pairs[i]).collect() }
}
