//! Immutable finite posets on dense element ids `0..n`.
//!
//! The strict order is stored transitively closed as two bit matrices (up-sets
//! and down-sets), so `lt` is a single bit lookup. Everything else (covers,
//! width, components, blocks) is derived on demand.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::maximum_matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum RelationMode {
    /// Pairs form a Hasse diagram.
    #[default]
    Cover,
    /// Pairs form an arbitrary acyclic relation.
    Full,
}

#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    labels: Option<Vec<String>>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.up == other.up
    }
}

impl Eq for Poset {}

/// A subposet together with the ids its elements carry in the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subposet {
    pub poset: Poset,
    /// `elements[i]` is the parent id of local element `i`; sorted ascending.
    pub elements: Vec<usize>,
}

/// Dilworth certificate: an antichain and a chain partition of equal size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthCertificate {
    pub width: usize,
    pub antichain: Vec<usize>,
    pub chains: ChainDecomposition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDecomposition {
    /// Each chain listed bottom to top.
    pub chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    pub fn is_valid_for(&self, p: &Poset) -> bool {
        let mut seen = vec![false; p.len()];
        for chain in &self.chains {
            for w in chain.windows(2) {
                if !p.lt(w[0], w[1]) {
                    return false;
                }
            }
            for &x in chain {
                if x >= p.len() || seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl Poset {
    /// Builds a poset from `x < y` pairs, returning the transitive closure.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)], _mode: RelationMode) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(x, y) in pairs {
            for id in [x, y] {
                if id >= n {
                    return Err(Error::OutOfRange { id, n });
                }
            }
            if x == y {
                return Err(Error::CycleDetected(x));
            }
            succ[x].push(y);
            indeg[y] += 1;
        }
        // Kahn's algorithm; leftovers sit on a cycle.
        let mut order = Vec::with_capacity(n);
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if order.len() < n {
            let culprit = (0..n).find(|&v| indeg[v] > 0).unwrap_or(0);
            return Err(Error::CycleDetected(culprit));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            for &w in &succ[v] {
                row.insert(w);
                row.union_with(&up[w]);
            }
            up[v] = row;
        }
        Ok(Self::from_up_rows(n, up))
    }

    fn from_up_rows(n: usize, up: Vec<FixedBitSet>) -> Self {
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        Poset { n, labels: None, up, down }
    }

    /// Builds a poset from a predicate that is already a strict order.
    /// Panics in debug builds when the predicate is not transitive.
    pub(crate) fn from_closed_predicate(n: usize, lt: impl Fn(usize, usize) -> bool) -> Self {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            for y in 0..n {
                if x != y && lt(x, y) {
                    row.insert(y);
                }
            }
        }
        let p = Self::from_up_rows(n, up);
        debug_assert!(p.check_axioms());
        p
    }

    pub fn chain(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        Ok(Self::from_closed_predicate(n, |x, y| x < y))
    }

    pub fn antichain(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        Ok(Self::from_closed_predicate(n, |_, _| false))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Looks an element up by label.
    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y) || self.lt(y, x)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.comparable(x, y)
    }

    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Checks irreflexivity, antisymmetry and transitivity by brute force.
    pub fn check_axioms(&self) -> bool {
        for x in 0..self.n {
            if self.lt(x, x) {
                return false;
            }
            for y in self.up[x].ones() {
                if self.lt(y, x) || !self.up[y].is_subset(&self.up[x]) {
                    return false;
                }
            }
        }
        true
    }

    /// All `x < y` pairs, sorted lexicographically.
    pub fn comparable_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|x| self.up[x].ones().map(move |y| (x, y))).collect()
    }

    pub fn comparable_count(&self) -> usize {
        self.up.iter().map(|r| r.count_ones(..)).sum()
    }

    /// Ordered incomparable pairs `(x, y)`, sorted lexicographically.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y && self.incomparable(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Cover pairs `x ⋖ y`, sorted lexicographically.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.up[x].ones() {
                if self.up[x].is_disjoint(&self.down[y]) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.down[x].is_clear()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.up[x].is_clear()).collect()
    }

    pub fn is_chain(&self) -> bool {
        self.comparable_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_antichain(&self) -> bool {
        self.comparable_count() == 0
    }

    pub fn dual(&self) -> Poset {
        Poset {
            n: self.n,
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Lowest-id-first topological order; a linear extension of the poset.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = self.down.iter().map(|r| r.count_ones(..)).collect();
        let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
            (0..self.n).filter(|&x| indeg[x] == 0).map(std::cmp::Reverse).collect();
        let mut out = Vec::with_capacity(self.n);
        while let Some(std::cmp::Reverse(x)) = heap.pop() {
            out.push(x);
            for y in self.up[x].ones() {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    heap.push(std::cmp::Reverse(y));
                }
            }
        }
        out
    }

    /// Induced subposet on `elements` (deduplicated and sorted).
    pub fn subposet(&self, elements: &[usize]) -> Subposet {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let m = elements.len();
        let mut up = vec![FixedBitSet::with_capacity(m); m];
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                if self.lt(x, y) {
                    up[i].insert(j);
                }
            }
        }
        let mut poset = Self::from_up_rows(m, up);
        if let Some(l) = &self.labels {
            poset.labels = Some(elements.iter().map(|&x| l[x].clone()).collect());
        }
        Subposet { poset, elements }
    }

    /// `P − {x}` with the parent-id map.
    pub fn remove_point(&self, x: usize) -> Subposet {
        let keep: Vec<usize> = (0..self.n).filter(|&y| y != x).collect();
        self.subposet(&keep)
    }

    /// Disjoint union; component `i` occupies a contiguous id range following
    /// component `i - 1`.
    pub fn disjoint_union(parts: &[&Poset]) -> Result<Poset> {
        let n: usize = parts.iter().map(|p| p.len()).sum();
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut up = Vec::with_capacity(n);
        let mut offset = 0;
        for p in parts {
            for x in 0..p.len() {
                let mut row = FixedBitSet::with_capacity(n);
                for y in p.up[x].ones() {
                    row.insert(offset + y);
                }
                up.push(row);
            }
            offset += p.len();
        }
        Ok(Self::from_up_rows(n, up))
    }

    /// Longest chain cardinality.
    pub fn height(&self) -> usize {
        let mut h = vec![1usize; self.n];
        for x in self.linear_extension() {
            for y in self.up[x].ones() {
                h[y] = h[y].max(h[x] + 1);
            }
        }
        h.into_iter().max().unwrap_or(0)
    }

    /// Width with a Dilworth certificate: a maximum antichain and a chain
    /// partition of the same size, via maximum bipartite matching on the
    /// comparability relation.
    pub fn width(&self) -> WidthCertificate {
        let adj: Vec<Vec<usize>> = (0..self.n).map(|x| self.up[x].ones().collect()).collect();
        let m = maximum_matching(self.n, self.n, &adj);
        let mut chains = Vec::new();
        for start in 0..self.n {
            if m.right_mate[start].is_some() {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = m.left_mate[cur] {
                chain.push(next);
                cur = next;
            }
            chains.push(chain);
        }
        let (reach_left, reach_right) = m.konig_reach(&adj);
        let antichain: Vec<usize> =
            (0..self.n).filter(|&x| reach_left[x] && !reach_right[x]).collect();
        debug_assert_eq!(antichain.len(), chains.len());
        debug_assert_eq!(chains.len(), self.n - m.size);
        WidthCertificate { width: chains.len(), antichain, chains: ChainDecomposition { chains } }
    }

    /// Adjacency lists of the cover graph.
    pub fn cover_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (x, y) in self.cover_pairs() {
            adj[x].push(y);
            adj[y].push(x);
        }
        adj
    }

    /// Components: convex subposets whose cover graphs are the connected
    /// components of the cover graph. Ordered by smallest element.
    pub fn components(&self) -> Vec<Subposet> {
        let mut comp = vec![usize::MAX; self.n];
        let mut groups = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                i += 1;
                for y in self.up[x].ones().chain(self.down[x].ones()) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
            }
            groups.push(members);
        }
        groups.iter().map(|g| self.subposet(g)).collect()
    }

    /// Blocks: convex subposets induced by the biconnected blocks of the cover
    /// graph. An isolated element forms its own block.
    pub fn blocks(&self) -> Vec<Subposet> {
        let adj = self.cover_adjacency();
        let mut blocks = biconnected_vertex_sets(&adj);
        blocks.sort();
        blocks.iter().map(|b| self.subposet(b)).collect()
    }

    /// Relation-preserving bijection `self -> other`, if one exists.
    pub fn is_isomorphic(&self, other: &Poset) -> Option<Vec<usize>> {
        if self.n != other.n || self.comparable_count() != other.comparable_count() {
            return None;
        }
        find_embedding(self, other, true)
    }

    /// Injective map `self -> host` that is an isomorphism onto its image
    /// (an induced subposet embedding), if one exists.
    pub fn embeds_in(&self, host: &Poset) -> Option<Vec<usize>> {
        if self.n > host.n {
            return None;
        }
        find_embedding(self, host, false)
    }
}

/// Vertex sets of biconnected blocks (Hopcroft–Tarjan, iterative).
fn biconnected_vertex_sets(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut blocks = Vec::new();
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if adj[root].is_empty() {
            disc[root] = timer;
            timer += 1;
            blocks.push(vec![root]);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut set = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            set.push(a);
                            set.push(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        set.sort_unstable();
                        set.dedup();
                        blocks.push(set);
                    }
                }
            }
        }
    }
    blocks
}

/// Backtracking search for an induced embedding of `pattern` into `host`;
/// with `bijective` it is an isomorphism search.
fn find_embedding(pattern: &Poset, host: &Poset, bijective: bool) -> Option<Vec<usize>> {
    let sig = |p: &Poset, x: usize| (p.up[x].count_ones(..), p.down[x].count_ones(..));
    let p_sig: Vec<_> = (0..pattern.n).map(|x| sig(pattern, x)).collect();
    let h_sig: Vec<_> = (0..host.n).map(|x| sig(host, x)).collect();

    // Most comparable elements first: they constrain the rest the most.
    let mut order: Vec<usize> = (0..pattern.n).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(p_sig[x].0 + p_sig[x].1));

    let candidates: Vec<Vec<usize>> = (0..pattern.n)
        .map(|x| {
            (0..host.n)
                .filter(|&y| {
                    if bijective {
                        h_sig[y] == p_sig[x]
                    } else {
                        h_sig[y].0 >= p_sig[x].0 && h_sig[y].1 >= p_sig[x].1
                    }
                })
                .collect()
        })
        .collect();

    let mut map = vec![usize::MAX; pattern.n];
    let mut used = vec![false; host.n];

    fn rec(
        depth: usize,
        order: &[usize],
        candidates: &[Vec<usize>],
        pattern: &Poset,
        host: &Poset,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        'cand: for &y in &candidates[x] {
            if used[y] {
                continue;
            }
            for &x2 in &order[..depth] {
                let y2 = map[x2];
                if pattern.lt(x, x2) != host.lt(y, y2) || pattern.lt(x2, x) != host.lt(y2, y) {
                    continue 'cand;
                }
            }
            map[x] = y;
            used[y] = true;
            if rec(depth + 1, order, candidates, pattern, host, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }

    rec(0, &order, &candidates, pattern, host, &mut map, &mut used).then_some(map)
}
