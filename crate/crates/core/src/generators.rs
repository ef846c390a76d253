//! Deterministic constructors for the poset families used throughout the
//! crate.
//!
//! Every generator labels its elements; the id layout of each family is
//! documented on the function and relied on by the constructions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{Poset, RelationMode};

pub const DEFAULT_SIZE_BUDGET: usize = 4096;

fn check_budget(size: Option<usize>, budget: usize) -> Result<usize> {
    match size {
        Some(s) if s <= budget => Ok(s),
        Some(s) => Err(Error::SizeBudgetExceeded { size: s, budget }),
        None => Err(Error::SizeBudgetExceeded { size: usize::MAX, budget }),
    }
}

/// `S_n`: `a_i = i - 1`, `b_i = n + i - 1`, with `a_i < b_j` iff `i != j`.
pub fn standard_example(n: usize) -> Result<Poset> {
    if n < 2 {
        return Err(Error::BadParameter(format!("standard example needs n >= 2, got {n}")));
    }
    let p = Poset::from_closed_predicate(2 * n, |x, y| x < n && y >= n && y - n != x);
    let labels = (1..=n).map(|i| format!("a{i}")).chain((1..=n).map(|i| format!("b{i}"))).collect();
    Ok(p.with_labels(labels))
}

/// Intervals `[i, j]` with `1 <= i < j <= n`, listed lexicographically.
pub fn interval_endpoints(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

/// `I_n`: `[i, j] < [k, l]` iff `j < k`.
pub fn canonical_interval_order(n: usize) -> Result<Poset> {
    if n < 2 {
        return Err(Error::BadParameter(format!("interval order needs n >= 2, got {n}")));
    }
    let iv = interval_endpoints(n);
    let p = Poset::from_closed_predicate(iv.len(), |x, y| iv[x].1 < iv[y].0);
    Ok(p.with_labels(iv.iter().map(|(i, j)| format!("[{i},{j}]")).collect()))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let k = k.min(n - k.min(n));
    let mut r: usize = 1;
    for i in 0..k {
        r = r.checked_mul(n - i)? / (i + 1);
    }
    Some(r)
}

/// `P(1, d; n)`: singletons `0..n` then the `d`-subsets of `[n]` in
/// lexicographic order, ordered by inclusion.
pub fn subsets_1_d(d: usize, n: usize) -> Result<Poset> {
    subsets_1_d_with_budget(d, n, DEFAULT_SIZE_BUDGET)
}

pub fn subsets_1_d_with_budget(d: usize, n: usize, budget: usize) -> Result<Poset> {
    if d < 2 || n <= d {
        return Err(Error::BadParameter(format!("need 2 <= d < n, got d={d}, n={n}")));
    }
    check_budget(binomial(n, d).and_then(|c| c.checked_add(n)), budget)?;
    let sets = combinations(n, d);
    let size = n + sets.len();
    let p = Poset::from_closed_predicate(size, |x, y| x < n && y >= n && sets[y - n].contains(&x));
    let mut labels: Vec<String> = (1..=n).map(|i| format!("{{{i}}}")).collect();
    for s in &sets {
        let inner: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
        labels.push(format!("{{{}}}", inner.join(",")));
    }
    Ok(p.with_labels(labels))
}

/// `k^d`: tuples over `0..k` in lexicographic order, ordered coordinatewise.
pub fn chain_product(k: usize, d: usize) -> Result<Poset> {
    chain_product_with_budget(k, d, DEFAULT_SIZE_BUDGET)
}

pub fn chain_product_with_budget(k: usize, d: usize, budget: usize) -> Result<Poset> {
    if k < 2 || d < 1 {
        return Err(Error::BadParameter(format!("need k >= 2 and d >= 1, got k={k}, d={d}")));
    }
    let size = check_budget(u32::try_from(d).ok().and_then(|d| k.checked_pow(d)), budget)?;
    let digits = |mut v: usize| {
        let mut t = vec![0; d];
        for slot in t.iter_mut().rev() {
            *slot = v % k;
            v /= k;
        }
        t
    };
    let tuples: Vec<Vec<usize>> = (0..size).map(digits).collect();
    let p = Poset::from_closed_predicate(size, |x, y| {
        x != y && tuples[x].iter().zip(&tuples[y]).all(|(a, b)| a <= b)
    });
    let labels = tuples
        .iter()
        .map(|t| format!("({})", t.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    Ok(p.with_labels(labels))
}

/// Kelly's planar poset containing `S_n`.
///
/// Ids: `a_i = i - 1`, `b_i = n + i - 1`, `w_i = 2n + i - 1`, `z_i = 3n + i - 2`.
/// Covers: `w_1 < ... < w_{n-1}`, `z_{n-1} < ... < z_1`, `a_i < w_i < b_{i+1}`,
/// `a_{i+1} < z_i < b_i`.
pub fn kelly(n: usize) -> Result<Poset> {
    if n < 3 {
        return Err(Error::BadParameter(format!("Kelly poset needs n >= 3, got {n}")));
    }
    let a = |i: usize| i - 1;
    let b = |i: usize| n + i - 1;
    let w = |i: usize| 2 * n + i - 1;
    let z = |i: usize| 3 * n + i - 2;
    let mut pairs = Vec::new();
    for i in 1..n {
        if i + 1 < n {
            pairs.push((w(i), w(i + 1)));
            pairs.push((z(i + 1), z(i)));
        }
        pairs.push((a(i), w(i)));
        pairs.push((w(i), b(i + 1)));
        pairs.push((a(i + 1), z(i)));
        pairs.push((z(i), b(i)));
    }
    let p = Poset::from_relation(4 * n - 2, &pairs, RelationMode::Cover)?;
    let mut labels: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    labels.extend((1..=n).map(|i| format!("b{i}")));
    labels.extend((1..n).map(|i| format!("w{i}")));
    labels.extend((1..n).map(|i| format!("z{i}")));
    Ok(p.with_labels(labels))
}

/// The width-tightness family on `3w + 2` elements.
///
/// Ids: `x_i = i - 1`, `y_i = w + i - 1`, `z_i = 2w + i - 1`, `a_1 = 3w`,
/// `a_2 = 3w + 1`. Covers: `x_i < y_i`, `y_i < z_j` for `i != j`, `z_i < a_1`,
/// `x_i < a_2`.
pub fn pw_family(w: usize) -> Result<Poset> {
    if w < 2 {
        return Err(Error::BadParameter(format!("pw family needs w >= 2, got {w}")));
    }
    let mut pairs = Vec::new();
    for i in 0..w {
        pairs.push((i, w + i));
        for j in 0..w {
            if i != j {
                pairs.push((w + i, 2 * w + j));
            }
        }
        pairs.push((2 * w + i, 3 * w));
        pairs.push((i, 3 * w + 1));
    }
    let p = Poset::from_relation(3 * w + 2, &pairs, RelationMode::Cover)?;
    let mut labels = Vec::new();
    for c in ["x", "y", "z"] {
        labels.extend((1..=w).map(|i| format!("{c}{i}")));
    }
    labels.push("a1".into());
    labels.push("a2".into());
    Ok(p.with_labels(labels))
}

/// `P(n, w)`: `w` chains of length `n` plus one maximal element per
/// `σ ∈ [n]^w` covering `x_{i, σ_i}` for each chain `i`.
///
/// Ids: `x_{i,j} = (i - 1) n + (j - 1)`, then the `a_σ` in lexicographic order.
pub fn pnw(n: usize, w: usize) -> Result<Poset> {
    pnw_with_budget(n, w, DEFAULT_SIZE_BUDGET)
}

pub fn pnw_with_budget(n: usize, w: usize, budget: usize) -> Result<Poset> {
    if n < 1 || w < 1 {
        return Err(Error::BadParameter(format!("need n, w >= 1, got n={n}, w={w}")));
    }
    let tops = u32::try_from(w).ok().and_then(|w| n.checked_pow(w));
    let size = check_budget(tops.and_then(|t| t.checked_add(n * w)), budget)?;
    let base = n * w;
    let mut pairs = Vec::new();
    for i in 0..w {
        for j in 0..n - 1 {
            pairs.push((i * n + j, i * n + j + 1));
        }
    }
    let mut labels: Vec<String> = Vec::with_capacity(size);
    for i in 1..=w {
        labels.extend((1..=n).map(|j| format!("x{i},{j}")));
    }
    for s in 0..size - base {
        let mut sigma = vec![0; w];
        let mut v = s;
        for slot in sigma.iter_mut().rev() {
            *slot = v % n;
            v /= n;
        }
        for (i, &j) in sigma.iter().enumerate() {
            pairs.push((i * n + j, base + s));
        }
        let parts: Vec<String> = sigma.iter().map(|j| (j + 1).to_string()).collect();
        labels.push(format!("a({})", parts.join(",")));
    }
    Ok(Poset::from_relation(size, &pairs, RelationMode::Cover)?.with_labels(labels))
}

/// Position of a binary string among all strings of length `<= n`, ordered
/// by length then lexicographically.
pub fn jmw_string_index(s: &str) -> usize {
    let v = s.chars().fold(0usize, |acc, c| 2 * acc + usize::from(c == '1'));
    (1 << s.len()) - 1 + v
}

/// Inverse of [`jmw_string_index`].
pub fn jmw_string(index: usize) -> String {
    let len = (usize::BITS - 1 - (index + 1).leading_zeros()) as usize;
    let v = index + 1 - (1 << len);
    (0..len).map(|i| if v >> (len - 1 - i) & 1 == 1 { '1' } else { '0' }).collect()
}

/// Number of binary strings of length at most `n`.
pub fn jmw_string_count(n: usize) -> usize {
    (1 << (n + 1)) - 1
}

/// Id of `b_x` in `jmw(n)`.
pub fn jmw_b(x: &str) -> usize {
    jmw_string_index(x)
}

/// Id of `a_x` in `jmw(n)`.
pub fn jmw_a(n: usize, x: &str) -> usize {
    jmw_string_count(n) + jmw_string_index(x)
}

/// The poset `P_n` on binary strings of length `<= n`: the `b` copy is the
/// prefix tree, the `a` copy its dual, and `a_x < b_y` iff neither string is
/// a prefix of the other. `b_x` ids come first, then `a_x`.
pub fn jmw(n: usize) -> Result<Poset> {
    jmw_with_budget(n, DEFAULT_SIZE_BUDGET)
}

pub fn jmw_with_budget(n: usize, budget: usize) -> Result<Poset> {
    let size = if n + 2 < usize::BITS as usize { Some((1usize << (n + 2)) - 2) } else { None };
    check_budget(size, budget)?;
    let m = jmw_string_count(n);
    let strings: Vec<String> = (0..m).map(jmw_string).collect();
    let prefix = |x: &str, y: &str| y.starts_with(x);
    let p = Poset::from_closed_predicate(2 * m, |u, v| match (u < m, v < m) {
        (true, true) => u != v && prefix(&strings[u], &strings[v]),
        (false, false) => u != v && prefix(&strings[v - m], &strings[u - m]),
        (false, true) => {
            let (x, y) = (&strings[u - m], &strings[v]);
            !prefix(x, y) && !prefix(y, x)
        }
        (true, false) => false,
    });
    let show = |s: &str| if s.is_empty() { "∅".to_string() } else { s.to_string() };
    let labels = strings
        .iter()
        .map(|s| format!("b_{}", show(s)))
        .chain(strings.iter().map(|s| format!("a_{}", show(s))))
        .collect();
    Ok(p.with_labels(labels))
}

/// Where the copies of each original element landed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitMap {
    /// `lower[x]` is the id of `x'`.
    pub lower: Vec<usize>,
    /// `upper[x]` is the id of `x''`.
    pub upper: Vec<usize>,
    /// `middle[x]` is the id of the kept copy of `x` (split-in-place only).
    pub middle: Option<Vec<usize>>,
}

fn primed_labels<'a>(p: &'a Poset, suffix: &str) -> impl Iterator<Item = String> + 'a {
    let suffix = suffix.to_string();
    (0..p.len()).map(move |x| format!("{}{}", p.label(x), suffix))
}

/// The split `Q`: `x' = x`, `x'' = n + x`, and `x' < y''` iff `x <= y`.
pub fn split(p: &Poset) -> (Poset, SplitMap) {
    let n = p.len();
    let q = Poset::from_closed_predicate(2 * n, |u, v| u < n && v >= n && p.le(u, v - n));
    let labels = primed_labels(p, "'").chain(primed_labels(p, "''")).collect();
    let map = SplitMap { lower: (0..n).collect(), upper: (n..2 * n).collect(), middle: None };
    (q.with_labels(labels), map)
}

/// The split-in-place `R`: `x = x`, `x' = n + x`, `x'' = 2n + x`, with `P`
/// kept on the first block, `x' < y` iff `x <= y`, `y < x''` iff `y <= x`,
/// and `x' < y''` iff `x <= y`.
pub fn split_in_place(p: &Poset) -> (Poset, SplitMap) {
    let n = p.len();
    let r = Poset::from_closed_predicate(3 * n, |u, v| match (u / n, v / n) {
        (0, 0) => p.lt(u, v),
        (1, 0) => p.le(u - n, v),
        (0, 2) => p.le(u, v - 2 * n),
        (1, 2) => p.le(u - n, v - 2 * n),
        _ => false,
    });
    let labels = (0..n)
        .map(|x| p.label(x))
        .chain(primed_labels(p, "'"))
        .chain(primed_labels(p, "''"))
        .collect();
    let map = SplitMap {
        lower: (n..2 * n).collect(),
        upper: (2 * n..3 * n).collect(),
        middle: Some((0..n).collect()),
    };
    (r.with_labels(labels), map)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Standard,
    Interval,
    Subsets1d,
    Chainproduct,
    Kelly,
    PwFamily,
    Pnw,
    Jmw,
    Chain,
    Antichain,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Standard,
        Family::Interval,
        Family::Subsets1d,
        Family::Chainproduct,
        Family::Kelly,
        Family::PwFamily,
        Family::Pnw,
        Family::Jmw,
        Family::Chain,
        Family::Antichain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Standard => "standard",
            Family::Interval => "interval",
            Family::Subsets1d => "subsets1d",
            Family::Chainproduct => "chainproduct",
            Family::Kelly => "kelly",
            Family::PwFamily => "pw_family",
            Family::Pnw => "pnw",
            Family::Jmw => "jmw",
            Family::Chain => "chain",
            Family::Antichain => "antichain",
        }
    }

    pub fn usage(self) -> &'static str {
        match self {
            Family::Standard => "standard <n>            n >= 2",
            Family::Interval => "interval <n>            n >= 2",
            Family::Subsets1d => "subsets1d <d> <n>       2 <= d < n",
            Family::Chainproduct => "chainproduct <k> <d>    k >= 2, d >= 1, k^d within budget",
            Family::Kelly => "kelly <n>               n >= 3",
            Family::PwFamily => "pw_family <w>           w >= 2",
            Family::Pnw => "pnw <n> <w>             n, w >= 1, nw + n^w within budget",
            Family::Jmw => "jmw <n>                 n >= 0, 2^(n+2) - 2 within budget",
            Family::Chain => "chain <n>               n >= 1",
            Family::Antichain => "antichain <n>           n >= 1",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Subsets1d | Family::Chainproduct | Family::Pnw => 2,
            _ => 1,
        }
    }

    pub fn parse(name: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::BadParameter(format!("unknown family {name:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl GeneratorSpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self> {
        if params.len() != family.arity() {
            return Err(Error::BadParameter(format!(
                "{} takes {} parameter(s), got {}",
                family.name(),
                family.arity(),
                params.len()
            )));
        }
        Ok(GeneratorSpec { family, params })
    }

    pub fn build(&self, budget: usize) -> Result<Poset> {
        let p = &self.params;
        let small = |size: usize| check_budget(Some(size), budget);
        match self.family {
            Family::Standard => {
                small(p[0].saturating_mul(2))?;
                standard_example(p[0])
            }
            Family::Interval => {
                small(p[0].saturating_mul(p[0]) / 2)?;
                canonical_interval_order(p[0])
            }
            Family::Subsets1d => subsets_1_d_with_budget(p[0], p[1], budget),
            Family::Chainproduct => chain_product_with_budget(p[0], p[1], budget),
            Family::Kelly => {
                small(p[0].saturating_mul(4))?;
                kelly(p[0])
            }
            Family::PwFamily => {
                small(p[0].saturating_mul(3))?;
                pw_family(p[0])
            }
            Family::Pnw => pnw_with_budget(p[0], p[1], budget),
            Family::Jmw => jmw_with_budget(p[0], budget),
            Family::Chain => {
                small(p[0])?;
                Poset::chain(p[0])
            }
            Family::Antichain => {
                small(p[0])?;
                Poset::antichain(p[0])
            }
        }
    }
}

impl std::fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.family.name(), params.join(","))
    }
}
