//! Cover graphs, tree and path decompositions, exact tree-width and
//! path-width for small graphs, and the width-3 decomposition of the JMW
//! posets.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{jmw_a, jmw_b, DEFAULT_SIZE_BUDGET};
use crate::poset::Poset;

/// Largest graph the subset dynamic programs accept.
pub const WIDTH_DP_MAX_VERTICES: usize = 18;

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub n: usize,
    /// Sorted, each edge once with the smaller endpoint first.
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { id: w, n });
                }
            }
            if u == v {
                return Err(Error::BadParameter(format!("loop at vertex {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set.into_iter().collect() })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Graph { n, edges: (1..n).map(|v| (v - 1, v)).collect() }
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn masks(&self) -> Vec<u32> {
        let mut nb = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            nb[u] |= 1 << v;
            nb[v] |= 1 << u;
        }
        nb
    }
}

/// The Hasse diagram of `p` as an undirected graph.
pub fn cover_graph(p: &Poset) -> Graph {
    Graph::new(p.len(), &p.cover_pairs()).expect("cover pairs are in range")
}

/// Tree decomposition in the `{"host_edges": [[t, t']], "bags": {"t": [ids]}}`
/// document shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub host_edges: Vec<(usize, usize)>,
    pub bags: BTreeMap<usize, Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn to_tree(&self) -> TreeDecomposition {
        TreeDecomposition {
            host_edges: (1..self.bags.len()).map(|t| (t - 1, t)).collect(),
            bags: self.bags.iter().cloned().enumerate().collect(),
        }
    }

    /// `Int(u) = [a_u, b_u]`, the first and last bag holding `u`.
    pub fn intervals(&self, n: usize) -> Vec<Option<(usize, usize)>> {
        let mut out: Vec<Option<(usize, usize)>> = vec![None; n];
        for (t, bag) in self.bags.iter().enumerate() {
            for &u in bag {
                if u < n {
                    out[u] = Some(out[u].map_or((t, t), |(a, _)| (a, t)));
                }
            }
        }
        out
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.values().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Copy with `node` and its host edges removed.
    pub fn without_bag(&self, node: usize) -> TreeDecomposition {
        let mut bags = self.bags.clone();
        bags.remove(&node);
        let host_edges =
            self.host_edges.iter().copied().filter(|&(s, t)| s != node && t != node).collect();
        TreeDecomposition { host_edges, bags }
    }

    /// Contracts host edges whose one bag contains the other, so no bag is a
    /// subset of a neighbouring bag.
    pub fn reduced(&self) -> TreeDecomposition {
        let mut d = self.clone();
        loop {
            let hit = d.host_edges.iter().enumerate().find_map(|(i, &(s, t))| {
                let (bs, bt) = (&d.bags[&s], &d.bags[&t]);
                if bs.iter().all(|v| bt.contains(v)) {
                    Some((i, s, t))
                } else if bt.iter().all(|v| bs.contains(v)) {
                    Some((i, t, s))
                } else {
                    None
                }
            });
            let Some((i, gone, keep)) = hit else { return d };
            d.host_edges.remove(i);
            d.bags.remove(&gone);
            for e in d.host_edges.iter_mut() {
                if e.0 == gone {
                    e.0 = keep;
                }
                if e.1 == gone {
                    e.1 = keep;
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub valid: bool,
    pub width: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

/// Checks that the host is a tree, every vertex and edge of `g` sits in a
/// bag, and each vertex's bags induce a connected subtree.
pub fn verify_decomposition(g: &Graph, d: &TreeDecomposition) -> DecompositionReport {
    let width = d.width();
    let fail = |m: String| DecompositionReport { valid: false, width, violation: Some(m) };
    let nodes: Vec<usize> = d.bags.keys().copied().collect();
    if nodes.is_empty() {
        return if g.n == 0 {
            DecompositionReport { valid: true, width: 0, violation: None }
        } else {
            fail("no bags".into())
        };
    }
    let index: BTreeMap<usize, usize> = nodes.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut host = vec![Vec::new(); nodes.len()];
    for &(s, t) in &d.host_edges {
        let (Some(&i), Some(&j)) = (index.get(&s), index.get(&t)) else {
            return fail(format!("host edge ({s}, {t}) names a missing bag"));
        };
        if i == j {
            return fail(format!("host loop at {s}"));
        }
        host[i].push(j);
        host[j].push(i);
    }
    if d.host_edges.len() + 1 != nodes.len() || !connected_within(&host, &vec![true; nodes.len()]) {
        return fail("host is not a tree".into());
    }
    for bag in d.bags.values() {
        if let Some(&v) = bag.iter().find(|&&v| v >= g.n) {
            return fail(format!("bag names unknown vertex {v}"));
        }
    }
    let bag_of: Vec<&Vec<usize>> = nodes.iter().map(|t| &d.bags[t]).collect();
    for v in 0..g.n {
        let member: Vec<bool> = bag_of.iter().map(|b| b.contains(&v)).collect();
        if !member.iter().any(|&m| m) {
            return fail(format!("vertex {v} is in no bag"));
        }
        if !connected_within(&host, &member) {
            return fail(format!("bags containing vertex {v} are not connected"));
        }
    }
    for &(u, v) in &g.edges {
        if !bag_of.iter().any(|b| b.contains(&u) && b.contains(&v)) {
            return fail(format!("edge ({u}, {v}) is in no bag"));
        }
    }
    DecompositionReport { valid: true, width, violation: None }
}

pub fn verify_path_decomposition(g: &Graph, d: &PathDecomposition) -> DecompositionReport {
    verify_decomposition(g, &d.to_tree())
}

/// Whether the marked host nodes induce a connected subgraph.
fn connected_within(host: &[Vec<usize>], marked: &[bool]) -> bool {
    let Some(start) = marked.iter().position(|&m| m) else { return true };
    let mut seen = vec![false; host.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &host[v] {
            if marked[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..host.len()).all(|i| !marked[i] || seen[i])
}

fn check_dp_size(g: &Graph) -> Result<()> {
    if g.n > WIDTH_DP_MAX_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "width DP accepts at most {WIDTH_DP_MAX_VERTICES} vertices, got {}",
            g.n
        )));
    }
    Ok(())
}

/// Subset DP `f(S) = min_{v ∈ S} max(f(S − v), cost(S − v, v))`, returning
/// `f(V)` and an optimal ordering of `V`.
fn subset_dp(n: usize, cost: impl Fn(u32, usize) -> u32) -> (u32, Vec<usize>) {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut f = vec![u32::MAX; 1usize << n];
    let mut choice = vec![0u8; 1usize << n];
    f[0] = 0;
    for s in 1..=full {
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let val = f[rest as usize].max(cost(rest, v));
            if val < f[s as usize] {
                f[s as usize] = val;
                choice[s as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    (f[full as usize], order)
}

/// Exact tree-width via elimination orderings, with a witness decomposition.
/// Fails with `Exceeded` when the tree-width is above `k_max`.
pub fn treewidth_exact(g: &Graph, k_max: usize) -> Result<(usize, TreeDecomposition)> {
    check_dp_size(g)?;
    if g.n == 0 {
        return Ok((0, TreeDecomposition::default()));
    }
    let nb = g.masks();
    // Vertices outside `s ∪ {v}` reachable from `v` through `s`.
    let q = |s: u32, v: usize| -> u32 {
        let mut comp = 1u32 << v;
        loop {
            let mut reach = 0u32;
            let mut bits = comp;
            while bits != 0 {
                reach |= nb[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            let next = comp | (reach & s);
            if next == comp {
                return (reach & !s & !(1 << v)).count_ones();
            }
            comp = next;
        }
    };
    let (tw, order) = subset_dp(g.n, q);
    let tw = tw as usize;
    if tw > k_max {
        return Err(Error::Exceeded(k_max));
    }
    Ok((tw, elimination_decomposition(g, &order)))
}

/// Bags `{v} ∪ later neighbours of v` in the fill-in graph, each attached to
/// the bag of its earliest later neighbour.
fn elimination_decomposition(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n;
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut nb: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in &g.edges {
        nb[u].insert(v);
        nb[v].insert(u);
    }
    let mut bags = BTreeMap::new();
    let mut host_edges = Vec::new();
    let mut roots = Vec::new();
    for &v in order {
        let later: Vec<usize> = nb[v].iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                nb[a].insert(b);
                nb[b].insert(a);
            }
        }
        let mut bag = later.clone();
        bag.push(v);
        bag.sort_unstable();
        bags.insert(pos[v], bag);
        match later.iter().min_by_key(|&&w| pos[w]) {
            Some(&w) => host_edges.push((pos[v], pos[w])),
            None => roots.push(pos[v]),
        }
    }
    // One root per connected component; chain them into a single tree.
    for w in roots.windows(2) {
        host_edges.push((w[0], w[1]));
    }
    TreeDecomposition { host_edges, bags }
}

/// Exact path-width via vertex separation, with a witness decomposition.
/// Fails with `Exceeded` when the path-width is above `k_max`.
pub fn pathwidth_exact(g: &Graph, k_max: usize) -> Result<(usize, PathDecomposition)> {
    check_dp_size(g)?;
    if g.n == 0 {
        return Ok((0, PathDecomposition::default()));
    }
    let nb = g.masks();
    // Vertices of `s ∪ {v}` with a neighbour outside it.
    let boundary = |s: u32| -> u32 {
        let mut bits = s;
        let mut count = 0;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if nb[u] & !s != 0 {
                count += 1;
            }
        }
        count
    };
    let (vs, order) = subset_dp(g.n, |rest, v| boundary(rest | 1 << v));
    let pw = vs as usize;
    if pw > k_max {
        return Err(Error::Exceeded(k_max));
    }
    let mut bags = Vec::with_capacity(g.n);
    let mut placed = 0u32;
    for &v in &order {
        let mut bag: Vec<usize> =
            (0..g.n).filter(|&u| placed >> u & 1 == 1 && nb[u] & !placed != 0).collect();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        placed |= 1 << v;
    }
    let d = PathDecomposition { bags };
    debug_assert!(d.width() <= pw);
    Ok((pw, d))
}

/// The width-3 tree decomposition of the cover graph of `jmw(n)`.
///
/// For every string `x` shorter than `n` the bag `S_x = {b_x0, a_x, b_x1,
/// b_x}` covers the tree edges at `b_x`. When the children of `x` are
/// leaves, `T_x = {b_x0, a_x, b_x1, a_x0}` and `R_x = {b_x0, a_x, b_x1,
/// a_x1}` hang off `S_x`; otherwise the glue bags `{a_x, a_xi, b_x0, b_x1}`
/// connect `S_x` to `S_xi`. A leaf bag `{a_∅, b_∅}` hangs off `S_∅`.
pub fn jmw_tree_decomposition(n: usize) -> Result<TreeDecomposition> {
    crate::generators::jmw_with_budget(n, DEFAULT_SIZE_BUDGET)?;
    let mut d = TreeDecomposition::default();
    let add = |d: &mut TreeDecomposition, mut bag: Vec<usize>, parent: Option<usize>| -> usize {
        bag.sort_unstable();
        bag.dedup();
        let id = d.bags.len();
        d.bags.insert(id, bag);
        if let Some(p) = parent {
            d.host_edges.push((p, id));
        }
        id
    };
    let (a, b) = (|x: &str| jmw_a(n, x), jmw_b);
    let leaf = add(&mut d, vec![a(""), b("")], None);
    if n == 0 {
        return Ok(d);
    }
    // (string, bag the S bag of this string attaches to)
    let mut stack = vec![(String::new(), leaf)];
    while let Some((x, parent)) = stack.pop() {
        let (x0, x1) = (format!("{x}0"), format!("{x}1"));
        let s = add(&mut d, vec![b(&x0), a(&x), b(&x1), b(&x)], Some(parent));
        if x.len() + 1 == n {
            add(&mut d, vec![b(&x0), a(&x), b(&x1), a(&x0)], Some(s));
            add(&mut d, vec![b(&x0), a(&x), b(&x1), a(&x1)], Some(s));
        } else {
            for xi in [x1, x0] {
                let glue = add(&mut d, vec![a(&x), a(&xi), b(&format!("{x}0")), b(&format!("{x}1"))], Some(s));
                stack.push((xi, glue));
            }
        }
    }
    debug_assert_eq!(d.bags.len(), 1 + jmw_node_bags(n));
    Ok(d)
}

/// Bags other than the leaf: `S` for every internal string, `T`/`R` for
/// the last internal level, glue bags for the others.
fn jmw_node_bags(n: usize) -> usize {
    let internal = (1usize << n) - 1;
    let last = 1usize << (n - 1);
    internal + 2 * last + 2 * (internal - last)
}
