//! Certificate types (realizers, local realizers, Boolean realizers) and their
//! verifiers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A total order on a set of element ids; earlier means smaller.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearOrder(pub Vec<usize>);

impl LinearOrder {
    pub fn new(elements: Vec<usize>) -> Self {
        LinearOrder(elements)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> LinearOrder {
        LinearOrder(self.0.iter().rev().copied().collect())
    }

    /// Position lookup over `0..n`; `usize::MAX` marks absent elements.
    /// Returns `None` when an id repeats or is out of range.
    pub fn positions(&self, n: usize) -> Option<Vec<usize>> {
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in self.0.iter().enumerate() {
            if x >= n || pos[x] != usize::MAX {
                return None;
            }
            pos[x] = i;
        }
        Some(pos)
    }
}

impl From<Vec<usize>> for LinearOrder {
    fn from(v: Vec<usize>) -> Self {
        LinearOrder(v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PleFamily {
    pub ples: Vec<LinearOrder>,
}

impl PleFamily {
    pub fn new(ples: Vec<LinearOrder>) -> Self {
        PleFamily { ples }
    }

    pub fn from_vecs(ples: Vec<Vec<usize>>) -> Self {
        PleFamily { ples: ples.into_iter().map(LinearOrder).collect() }
    }

    pub fn len(&self) -> usize {
        self.ples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ples.is_empty()
    }

    /// μ(u) for every `u < n`.
    pub fn frequencies(&self, n: usize) -> Vec<usize> {
        let mut mu = vec![0; n];
        for l in &self.ples {
            for &x in &l.0 {
                if x < n {
                    mu[x] += 1;
                }
            }
        }
        mu
    }

    /// μ of the family: the largest element frequency.
    pub fn mu(&self, n: usize) -> usize {
        self.frequencies(n).into_iter().max().unwrap_or(0)
    }

    pub fn reversed(&self) -> PleFamily {
        PleFamily { ples: self.ples.iter().map(LinearOrder::reversed).collect() }
    }
}

/// A bit string of length at most 64; coordinate 1 is the leftmost character
/// and lives in bit 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    bits: u64,
    len: u8,
}

impl BitString {
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        BitString { bits: bits & mask, len: len as u8 }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Coordinate `i`, zero-based.
    pub fn get(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn complement(&self) -> BitString {
        BitString::new(!self.bits, self.len())
    }

    pub fn flip(&self, i: usize) -> BitString {
        BitString::new(self.bits ^ (1 << i), self.len())
    }

    pub fn all_ones(len: usize) -> BitString {
        BitString::new(u64::MAX, len)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > 64 {
            return Err(Error::Parse(format!("bit string longer than 64: {s}")));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::Parse(format!("bad bit string {s:?}"))),
            }
        }
        Ok(BitString::new(bits, s.len()))
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BooleanRealizer {
    pub orders: Vec<LinearOrder>,
    pub accepted: BTreeSet<BitString>,
}

impl BooleanRealizer {
    pub fn new(orders: Vec<LinearOrder>, accepted: impl IntoIterator<Item = BitString>) -> Self {
        BooleanRealizer { orders, accepted: accepted.into_iter().collect() }
    }

    pub fn dimension(&self) -> usize {
        self.orders.len()
    }

    /// Replaces order `i` by its reversal and flips bit `i` of every accepted
    /// string; the result realizes the same poset.
    pub fn reverse_order(&self, i: usize) -> BooleanRealizer {
        let mut orders = self.orders.clone();
        orders[i] = orders[i].reversed();
        BooleanRealizer { orders, accepted: self.accepted.iter().map(|s| s.flip(i)).collect() }
    }

    /// Realizer of the dual poset.
    pub fn reversed(&self) -> BooleanRealizer {
        BooleanRealizer {
            orders: self.orders.iter().map(LinearOrder::reversed).collect(),
            accepted: self.accepted.clone(),
        }
    }
}

/// The first reason a certificate fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A member is not an extension of the poset on its ground set.
    NotExtension { order: usize, x: usize, y: usize },
    /// No member contains the element.
    Uncovered { x: usize },
    /// `x < y` but no member contains both.
    ComparabilityMissing { x: usize, y: usize },
    /// `x ∥ y` but no member puts `x` above `y`.
    NotReversed { x: usize, y: usize },
    /// The query string's membership in the accepted set disagrees with `x < y`.
    BooleanMismatch { x: usize, y: usize, query: BitString },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotExtension { order, x, y } => {
                write!(f, "order {order} puts {y} before {x} although {x} < {y}")
            }
            Violation::Uncovered { x } => write!(f, "element {x} appears in no order"),
            Violation::ComparabilityMissing { x, y } => {
                write!(f, "{x} < {y} but no order contains both")
            }
            Violation::NotReversed { x, y } => write!(f, "no order puts {x} above {y}"),
            Violation::BooleanMismatch { x, y, query } => {
                write!(f, "query string {query} of ({x}, {y}) is classified wrongly")
            }
        }
    }
}

/// First `x < y` pair that `order` puts the wrong way round.
fn extension_violation(p: &Poset, order: &[usize], pos: &[usize]) -> Option<(usize, usize)> {
    for &x in order {
        for y in p.up_set(x).ones() {
            if pos[y] != usize::MAX && pos[y] < pos[x] {
                return Some((x, y));
            }
        }
    }
    None
}

fn checked_positions(p: &Poset, orders: &[LinearOrder]) -> Result<Vec<Vec<usize>>> {
    orders
        .iter()
        .enumerate()
        .map(|(i, l)| l.positions(p.len()).ok_or(Error::MalformedOrder(i)))
        .collect()
}

/// True iff `l` is a linear extension of the subposet on its elements.
pub fn is_linear_extension(p: &Poset, l: &LinearOrder) -> bool {
    match l.positions(p.len()) {
        Some(pos) => extension_violation(p, &l.0, &pos).is_none(),
        None => false,
    }
}

/// Checks a realizer, returning the first violation if it fails.
pub fn audit_realizer(p: &Poset, r: &PleFamily) -> Result<Option<Violation>> {
    let pos = checked_positions(p, &r.ples)?;
    for (i, l) in r.ples.iter().enumerate() {
        if l.len() != p.len() {
            return Err(Error::NotFullOrder(i));
        }
        if let Some((x, y)) = extension_violation(p, &l.0, &pos[i]) {
            return Ok(Some(Violation::NotExtension { order: i, x, y }));
        }
    }
    if r.ples.is_empty() {
        return Ok(Some(Violation::Uncovered { x: 0 }));
    }
    for (x, y) in p.incomparable_pairs() {
        if !pos.iter().any(|ps| ps[x] > ps[y]) {
            return Ok(Some(Violation::NotReversed { x, y }));
        }
    }
    Ok(None)
}

pub fn verify_realizer(p: &Poset, r: &PleFamily) -> Result<bool> {
    Ok(audit_realizer(p, r)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalReport {
    pub valid: bool,
    pub mu: usize,
    pub frequencies: Vec<usize>,
    pub violation: Option<Violation>,
}

/// Checks a local realizer and reports element frequencies. Members that are
/// not partial linear extensions raise `NotPle`.
pub fn verify_local_realizer(p: &Poset, f: &PleFamily) -> Result<LocalReport> {
    let n = p.len();
    let pos = checked_positions(p, &f.ples)?;
    for (i, l) in f.ples.iter().enumerate() {
        if let Some((x, y)) = extension_violation(p, &l.0, &pos[i]) {
            return Err(Error::NotPle { order: i, x, y });
        }
    }
    let frequencies = f.frequencies(n);
    let mu = frequencies.iter().copied().max().unwrap_or(0);
    // before[x * n + y]: some member contains both with x before y.
    let mut before = vec![false; n * n];
    for l in &f.ples {
        for (i, &x) in l.0.iter().enumerate() {
            for &y in &l.0[i + 1..] {
                before[x * n + y] = true;
            }
        }
    }
    let violation = (|| {
        if let Some(x) = (0..n).find(|&x| frequencies[x] == 0) {
            return Some(Violation::Uncovered { x });
        }
        for (x, y) in p.comparable_pairs() {
            if !before[x * n + y] {
                return Some(Violation::ComparabilityMissing { x, y });
            }
        }
        for (x, y) in p.incomparable_pairs() {
            if !before[y * n + x] {
                return Some(Violation::NotReversed { x, y });
            }
        }
        None
    })();
    Ok(LocalReport { valid: violation.is_none(), mu, frequencies, violation })
}

fn query_with_positions(pos: &[Vec<usize>], x: usize, y: usize) -> BitString {
    let mut bits = 0u64;
    for (i, ps) in pos.iter().enumerate() {
        if ps[x] < ps[y] {
            bits |= 1 << i;
        }
    }
    BitString::new(bits, pos.len())
}

/// q(x, y): coordinate `i` is 1 iff `x` precedes `y` in order `i`.
pub fn query_string(b: &BooleanRealizer, x: usize, y: usize) -> Result<BitString> {
    if x == y {
        return Err(Error::SameElement(x));
    }
    let mut bits = 0u64;
    for (i, l) in b.orders.iter().enumerate() {
        let px = l.0.iter().position(|&e| e == x);
        let py = l.0.iter().position(|&e| e == y);
        match (px, py) {
            (Some(px), Some(py)) => {
                if px < py {
                    bits |= 1 << i;
                }
            }
            _ => return Err(Error::NotFullOrder(i)),
        }
    }
    Ok(BitString::new(bits, b.orders.len()))
}

pub fn audit_boolean_realizer(p: &Poset, b: &BooleanRealizer) -> Result<Option<Violation>> {
    if b.orders.len() > 64 {
        return Err(Error::InvalidInput("at most 64 orders are supported".into()));
    }
    let pos = checked_positions(p, &b.orders)?;
    for (i, l) in b.orders.iter().enumerate() {
        if l.len() != p.len() {
            return Err(Error::NotFullOrder(i));
        }
    }
    for x in 0..p.len() {
        for y in 0..p.len() {
            if x == y {
                continue;
            }
            let q = query_with_positions(&pos, x, y);
            if b.accepted.contains(&q) != p.lt(x, y) {
                return Ok(Some(Violation::BooleanMismatch { x, y, query: q }));
            }
        }
    }
    Ok(None)
}

/// True iff `q(x, y)` is accepted exactly for the pairs with `x < y`.
/// Orders that miss elements make the realizer invalid rather than an error.
pub fn verify_boolean_realizer(p: &Poset, b: &BooleanRealizer) -> bool {
    matches!(audit_boolean_realizer(p, b), Ok(None))
}
