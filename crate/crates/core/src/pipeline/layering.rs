//! Breadth-first layering of one colour class and the ples reversing it.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::colors::{ColorTable, SigmaColor};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::LinearOrder;
use crate::solvers::{bfs_distances, is_reversible, Reversibility};

/// How many instances of each structural check ran.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimAudit {
    /// Stack agreement to the right of a shared `y` (or left of a shared `x`).
    pub claim1: usize,
    /// Parent groups reversed by a single ple.
    pub claim2: usize,
    /// Consecutive layers move left on `X` and right on `Y`.
    pub claim3: usize,
    /// Parent groups within a layer are disjoint.
    pub claim4: usize,
    /// Each vertex lies in at most two consecutive layers of the right parity.
    pub parity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerGroup {
    pub layer: usize,
    /// Right parent (even layers) or left parent (odd layers) for `s >= 2`.
    pub parent: Option<usize>,
    pub pairs: Vec<(usize, usize)>,
    /// Extension of `Q` reversing `pairs`, restricted to their endpoints.
    pub ple: LinearOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentLayering {
    pub root: usize,
    /// `S_C(s)` for `s = 0, 1, ...`.
    pub layers: Vec<Vec<(usize, usize)>>,
    pub groups: Vec<LayerGroup>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassLayering {
    pub color: SigmaColor,
    /// Positions were mirrored because `y` lies left of `x` in this class.
    pub mirrored: bool,
    pub components: Vec<ComponentLayering>,
}

impl ClassLayering {
    pub fn ples(&self) -> impl Iterator<Item = &LinearOrder> {
        self.components.iter().flat_map(|c| c.groups.iter().map(|g| &g.ple))
    }
}

fn violated(claim: u8, detail: String) -> Error {
    Error::ClaimViolated { claim, detail }
}

/// Layers one colour class of `Q` and builds its ples. `q` is the split of
/// `p`; `pairs` are the class members `(x', y'')`.
pub fn layer_components(
    p: &Poset,
    q: &Poset,
    table: &ColorTable,
    color: &SigmaColor,
    pairs: &[(usize, usize)],
    audit: &mut ClaimAudit,
) -> Result<ClassLayering> {
    let n = table.n;
    let mirrored = color.alpha1 == 1;
    let last = table.position.iter().copied().max().unwrap_or(0);
    let pos = |z: usize| if mirrored { last - table.position[z] } else { table.position[z] };
    let class: BTreeSet<(usize, usize)> = pairs.iter().copied().collect();
    for &(x, y) in pairs {
        if pos(x) >= pos(y) {
            return Err(violated(1, format!("pair ({x}, {y}) is not left to right after mirroring")));
        }
    }
    check_claim1(p, table, &class, &pos, audit)?;

    let mut adj = vec![Vec::new(); 2 * n];
    for &(x, y) in pairs {
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut seen = vec![false; 2 * n];
    let mut roots = Vec::new();
    let mut xs: Vec<usize> = pairs.iter().map(|&(x, _)| x).collect::<BTreeSet<_>>().into_iter().collect();
    xs.sort_by_key(|&x| (pos(x), x));
    for &x in &xs {
        if seen[x] {
            continue;
        }
        let dist = bfs_distances(&adj, x);
        for (v, &dv) in dist.iter().enumerate() {
            if dv != usize::MAX {
                seen[v] = true;
            }
        }
        roots.push((x, dist));
    }

    let mut components = Vec::new();
    for (root, dist) in roots {
        let mut layers: Vec<Vec<(usize, usize)>> = Vec::new();
        for &(x, y) in pairs {
            if dist[x] == usize::MAX {
                continue;
            }
            let s = dist[x].min(dist[y]);
            if layers.len() <= s {
                layers.resize(s + 1, Vec::new());
            }
            layers[s].push((x, y));
        }
        check_parity(root, &layers, audit)?;
        check_claim3(&layers, &pos, audit)?;
        let groups = group_layers(q, &layers, &pos, audit)?;
        components.push(ComponentLayering { root, layers, groups });
    }

    let mut freq = vec![0usize; 2 * n];
    for c in &components {
        for g in &c.groups {
            for &z in g.ple.elements() {
                freq[z] += 1;
            }
        }
    }
    audit.claim4 += 1;
    if let Some(z) = (0..2 * n).find(|&z| freq[z] > 2) {
        return Err(violated(4, format!("element {z} appears in {} ples of one class", freq[z])));
    }
    Ok(ClassLayering { color: color.clone(), mirrored, components })
}

fn check_claim1(
    p: &Poset,
    table: &ColorTable,
    class: &BTreeSet<(usize, usize)>,
    pos: &impl Fn(usize) -> usize,
    audit: &mut ClaimAudit,
) -> Result<()> {
    let n = table.n;
    let mut by_y: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut by_x: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(x, y) in class {
        by_y.entry(y).or_default().push(x);
        by_x.entry(x).or_default().push(y);
    }
    for (&y1, xs) in &by_y {
        for (i, &x1) in xs.iter().enumerate() {
            for &x2 in &xs[i + 1..] {
                for y2 in (n..2 * n).filter(|&y2| pos(y2) > pos(y1)) {
                    audit.claim1 += 1;
                    if table.tau(p, x1, y2) != table.tau(p, x2, y2)
                        || class.contains(&(x1, y2)) != class.contains(&(x2, y2))
                    {
                        return Err(violated(1, format!("x {x1}, {x2} share y {y1} but differ at {y2}")));
                    }
                }
            }
        }
    }
    for (&x2, ys) in &by_x {
        for (i, &y1) in ys.iter().enumerate() {
            for &y2 in &ys[i + 1..] {
                for x1 in (0..n).filter(|&x1| pos(x1) < pos(x2)) {
                    audit.claim1 += 1;
                    if table.tau(p, x1, y1) != table.tau(p, x1, y2)
                        || class.contains(&(x1, y1)) != class.contains(&(x1, y2))
                    {
                        return Err(violated(1, format!("y {y1}, {y2} share x {x2} but differ at {x1}")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `x` vertices sit in at most two consecutive layers, the smaller odd
/// (the root only in layer 0); `y` vertices likewise with the smaller even.
fn check_parity(root: usize, layers: &[Vec<(usize, usize)>], audit: &mut ClaimAudit) -> Result<()> {
    let mut at: BTreeMap<(bool, usize), BTreeSet<usize>> = BTreeMap::new();
    for (s, layer) in layers.iter().enumerate() {
        for &(x, y) in layer {
            at.entry((true, x)).or_default().insert(s);
            at.entry((false, y)).or_default().insert(s);
        }
    }
    for (&(is_x, v), set) in &at {
        audit.parity += 1;
        let lo = *set.first().expect("non-empty");
        let hi = *set.last().expect("non-empty");
        let want_odd = is_x && v != root;
        let ok = hi - lo <= 1
            && if is_x && v == root { lo == 0 && hi == 0 } else { (lo % 2 == 1) == want_odd };
        if !ok {
            return Err(violated(3, format!("vertex {v} lies in layers {set:?}")));
        }
    }
    Ok(())
}

fn check_claim3(layers: &[Vec<(usize, usize)>], pos: &impl Fn(usize) -> usize, audit: &mut ClaimAudit) -> Result<()> {
    for s in 0..layers.len().saturating_sub(1) {
        for &(x1, y1) in &layers[s] {
            for &(x2, y2) in &layers[s + 1] {
                if s % 2 == 0 && y1 == y2 {
                    audit.claim3 += 1;
                    if pos(x1) >= pos(x2) {
                        return Err(violated(3, format!("layer {s}: {x1} not left of {x2} at {y1}")));
                    }
                }
                if s % 2 == 1 && x1 == x2 {
                    audit.claim3 += 1;
                    if pos(y1) <= pos(y2) {
                        return Err(violated(3, format!("layer {s}: {y1} not right of {y2} at {x1}")));
                    }
                }
            }
        }
    }
    Ok(())
}

fn group_layers(
    q: &Poset,
    layers: &[Vec<(usize, usize)>],
    pos: &impl Fn(usize) -> usize,
    audit: &mut ClaimAudit,
) -> Result<Vec<LayerGroup>> {
    let mut out = Vec::new();
    for (s, layer) in layers.iter().enumerate() {
        if layer.is_empty() {
            continue;
        }
        let mut groups: BTreeMap<Option<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        if s <= 1 {
            groups.insert(None, layer.clone());
        } else {
            let prev = &layers[s - 1];
            for &(x, y) in layer {
                let parent = if s % 2 == 0 {
                    prev.iter().filter(|&&(x0, _)| x0 == x).map(|&(_, w)| w).max_by_key(|&w| (pos(w), w))
                } else {
                    prev.iter().filter(|&&(_, y0)| y0 == y).map(|&(z, _)| z).min_by_key(|&z| (pos(z), z))
                };
                let parent = parent.ok_or_else(|| violated(3, format!("pair ({x}, {y}) in layer {s} has no parent")))?;
                groups.entry(Some(parent)).or_default().push((x, y));
            }
            let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
            for (&parent, pairs) in &groups {
                let parent = parent.expect("layers past 1 have parents");
                for &(x, y) in pairs {
                    let v = if s % 2 == 0 { y } else { x };
                    audit.claim4 += 1;
                    if let Some(&other) = owner.get(&v) {
                        if other != parent {
                            return Err(violated(4, format!("layer {s}: {v} under parents {other} and {parent}")));
                        }
                    }
                    owner.insert(v, parent);
                }
            }
        }
        for (parent, pairs) in groups {
            audit.claim2 += 1;
            let ext = match is_reversible(q, &pairs)? {
                Reversibility::Reversible { extension } => extension,
                Reversibility::Cycle { cycle } => {
                    return Err(Error::ReversibilityFailed(format!(
                        "layer {s}, parent {parent:?}: alternating cycle {:?}",
                        cycle.pairs
                    )))
                }
            };
            let ground: BTreeSet<usize> = pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
            let ple = LinearOrder(ext.0.into_iter().filter(|z| ground.contains(z)).collect());
            out.push(LayerGroup { layer: s, parent, pairs, ple });
        }
    }
    Ok(out)
}
