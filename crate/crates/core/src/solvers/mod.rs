//! Exact dim, ldim and bdim solvers, the reversibility test they share, and
//! independent brute-force oracles for cross-checking.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::{BooleanRealizer, LinearOrder, PleFamily};

pub mod bdim;
pub mod dim;
pub mod formula;
pub mod ldim;
pub mod oracle;
pub mod reversible;

pub use bdim::{bdim_exact, bdim_exact_with};
pub use dim::{dim_exact, dim_exact_with};
pub use formula::dim12n_formula;
pub use ldim::{ldim_exact, ldim_exact_with};
pub use reversible::{is_reversible, AlternatingCycle, Reversibility};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverOptions {
    /// Largest poset the solver accepts.
    pub max_elements: usize,
    /// Search nodes allowed across all candidate values.
    pub node_budget: u64,
}

impl SolverOptions {
    pub fn with_max_elements(self, max_elements: usize) -> Self {
        SolverOptions { max_elements, ..self }
    }

    fn check_size(&self, p: &Poset, what: &str) -> Result<()> {
        if p.len() > self.max_elements {
            return Err(Error::BudgetExceeded(format!(
                "{what} accepts at most {} elements, got {}",
                self.max_elements,
                p.len()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Realizer(PleFamily),
    LocalRealizer(PleFamily),
    Boolean(BooleanRealizer),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimCertificate {
    pub value: usize,
    pub witness: Witness,
    /// Every candidate value below `value` whose search space was exhausted
    /// (or excluded by a structural argument, see `notes`).
    pub exhausted: Vec<usize>,
    pub nodes: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Node counter shared by the backtracking searches.
pub struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { used: 0, limit }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded(format!("more than {} search nodes", self.limit)));
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Transitive closure of `P` plus a growing set of reversal arcs `y < x`.
#[derive(Clone, Debug)]
pub(crate) struct ClassClosure {
    up: Vec<FixedBitSet>,
}

impl ClassClosure {
    pub(crate) fn new(p: &Poset) -> Self {
        ClassClosure { up: (0..p.len()).map(|x| p.up_set(x).clone()).collect() }
    }

    /// True when `y` already lies below `x`.
    #[inline]
    pub(crate) fn reversed(&self, x: usize, y: usize) -> bool {
        self.up[y].contains(x)
    }

    /// Putting `x` above `y` keeps the relation acyclic.
    #[inline]
    pub(crate) fn can_reverse(&self, x: usize, y: usize) -> bool {
        x != y && !self.up[x].contains(y)
    }

    pub(crate) fn reverse(&mut self, x: usize, y: usize) {
        debug_assert!(self.can_reverse(x, y));
        if self.reversed(x, y) {
            return;
        }
        let mut target = self.up[x].clone();
        target.insert(x);
        for u in 0..self.up.len() {
            if u == y || self.up[u].contains(y) {
                self.up[u].union_with(&target);
            }
        }
    }

    /// Lowest-id-first topological order of the closure restricted to
    /// `ground` (all elements when `None`).
    pub(crate) fn extension(&self, ground: Option<&[usize]>) -> LinearOrder {
        let n = self.up.len();
        let members: Vec<usize> = match ground {
            Some(g) => g.to_vec(),
            None => (0..n).collect(),
        };
        let mut inside = FixedBitSet::with_capacity(n);
        for &x in &members {
            inside.insert(x);
        }
        topo_sort(&members, |u, v| inside.contains(v) && self.up[u].contains(v))
    }
}

/// Lowest-id-first topological sort of `members` under the strict order `lt`.
pub(crate) fn topo_sort(members: &[usize], lt: impl Fn(usize, usize) -> bool) -> LinearOrder {
    let mut members = members.to_vec();
    members.sort_unstable();
    let k = members.len();
    let mut indeg = vec![0usize; k];
    for i in 0..k {
        for j in 0..k {
            if lt(members[j], members[i]) {
                indeg[i] += 1;
            }
        }
    }
    let mut out = Vec::with_capacity(k);
    let mut done = vec![false; k];
    for _ in 0..k {
        let i = (0..k).find(|&i| !done[i] && indeg[i] == 0).expect("relation is acyclic");
        done[i] = true;
        out.push(members[i]);
        for j in 0..k {
            if !done[j] && lt(members[i], members[j]) {
                indeg[j] -= 1;
            }
        }
    }
    LinearOrder(out)
}

/// Breadth-first distances in an undirected adjacency-list graph.
pub(crate) fn bfs_distances(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[start] = 0;
    let mut q = VecDeque::from([start]);
    while let Some(v) = q.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    dist
}

/// Critical pairs `(x, y)`: `x ∥ y`, everything below `x` is below `y` and
/// everything above `y` is above `x`. Reversing all of them suffices for a
/// realizer.
pub fn critical_pairs(p: &Poset) -> Vec<(usize, usize)> {
    p.incomparable_pairs()
        .into_iter()
        .filter(|&(x, y)| {
            p.down_set(x).is_subset(p.down_set(y)) && p.up_set(y).is_subset(p.up_set(x))
        })
        .collect()
}
