//! Explicit certificates for standard examples and the width-tightness
//! family, and bounded-search certificates for Kelly posets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::generators::{kelly, pw_family};
use crate::realizer::{BitString, BooleanRealizer, LinearOrder, PleFamily};
use crate::solvers::bdim::{boolean_realizer_with_accepted, candidate_accepted_sets};
use crate::solvers::ldim::local_realizer_with_mu;
use crate::solvers::{dim_exact, Budget, Witness};

/// Node budget for the Kelly and width-family bounded searches.
pub const CERTIFICATE_SEARCH_BUDGET: u64 = 20_000_000;

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadParameter(format!("standard example needs n >= 2, got {n}")));
    }
    Ok(())
}

/// Local realizer of `S_n` with frequency 3: both levels ascending, both
/// levels descending, and the two-element ples `b_i < a_i`. For `n = 2` the
/// frequency-2 realizer `a2 b1 a1 b2`, `a1 b2 a2 b1` is returned instead.
pub fn standard_example_local_realizer(n: usize) -> Result<PleFamily> {
    check_n(n)?;
    let (a, b) = (|i: usize| i - 1, |i: usize| n + i - 1);
    if n == 2 {
        return Ok(PleFamily::from_vecs(vec![
            vec![a(2), b(1), a(1), b(2)],
            vec![a(1), b(2), a(2), b(1)],
        ]));
    }
    let up: Vec<usize> = (1..=n).map(a).chain((1..=n).map(b)).collect();
    let down: Vec<usize> = (1..=n).rev().map(a).chain((1..=n).rev().map(b)).collect();
    let mut ples = vec![up, down];
    ples.extend((1..=n).map(|i| vec![b(i), a(i)]));
    Ok(PleFamily::from_vecs(ples))
}

/// Boolean realizer of `S_n` with four orders and accepted set
/// `{1110, 1101}`.
pub fn standard_example_boolean_realizer(n: usize) -> Result<BooleanRealizer> {
    check_n(n)?;
    let (a, b) = (|i: usize| i - 1, |i: usize| n + i - 1);
    let l1: Vec<usize> = (1..=n).map(a).chain((1..=n).map(b)).collect();
    let l2: Vec<usize> = (1..=n).rev().map(a).chain((1..=n).rev().map(b)).collect();
    let l3: Vec<usize> = (1..=n).flat_map(|i| [a(i), b(i)]).collect();
    let l4: Vec<usize> = (1..=n).rev().flat_map(|i| [a(i), b(i)]).collect();
    let accepted = ["1110", "1101"].map(|s| s.parse::<BitString>().expect("valid literal"));
    Ok(BooleanRealizer::new(vec![l1, l2, l3, l4].into_iter().map(LinearOrder).collect(), accepted))
}

/// Local realizer of the width-tightness family with frequency 4.
///
/// Two full extensions walk the `x_i y_i` pairs forward and backward; the
/// ples `z_i < x_i < y_i` reverse the pairs involving `z_i`, and one ple
/// `x's < a_2 < y's < z's` puts `a_2` under the `y`s and `z`s.
pub fn pw_family_local_realizer(w: usize) -> Result<PleFamily> {
    pw_family(w)?;
    let (x, y, z) = (|i: usize| i, |i: usize| w + i, |i: usize| 2 * w + i);
    let (a1, a2) = (3 * w, 3 * w + 1);
    let mut l1: Vec<usize> = (0..w).flat_map(|i| [x(i), y(i)]).collect();
    l1.extend((0..w).map(z));
    l1.extend([a1, a2]);
    let mut l2: Vec<usize> = (0..w).rev().flat_map(|i| [x(i), y(i)]).collect();
    l2.extend((0..w).rev().map(z));
    l2.extend([a2, a1]);
    let mut ples = vec![l1, l2];
    ples.extend((0..w).map(|i| vec![z(i), x(i), y(i)]));
    let mut nn: Vec<usize> = (0..w).map(x).collect();
    nn.push(a2);
    nn.extend((0..w).map(y));
    nn.extend((0..w).map(z));
    ples.push(nn);
    Ok(PleFamily::from_vecs(ples))
}

/// Boolean realizer of the width-tightness family with four orders. When
/// `dim ≤ 4` a realizer padded to four orders with accepted set `{1111}` is
/// used; otherwise a bounded search over accepted sets runs.
pub fn pw_family_boolean_realizer(w: usize) -> Result<BooleanRealizer> {
    let p = pw_family(w)?;
    if let Ok(cert) = dim_exact(&p, 4) {
        let Witness::Realizer(r) = cert.witness else { unreachable!("dim witness") };
        let mut orders = r.ples;
        while orders.len() < 4 {
            orders.push(orders[0].clone());
        }
        return Ok(BooleanRealizer::new(orders, [BitString::all_ones(4)]));
    }
    boolean_search(&p, 4)
}

fn boolean_search(p: &crate::Poset, d: usize) -> Result<BooleanRealizer> {
    let mut budget = Budget::new(CERTIFICATE_SEARCH_BUDGET);
    let preferred: BTreeSet<BitString> =
        ["1110", "1101"].iter().map(|s| s.parse().expect("valid literal")).collect();
    let mut candidates = vec![preferred];
    candidates.extend(candidate_accepted_sets(p, d));
    for accepted in &candidates {
        match boolean_realizer_with_accepted(p, d, accepted, &mut budget) {
            Ok(Some(b)) => return Ok(b),
            Ok(None) => {}
            Err(Error::BudgetExceeded(m)) => return Err(Error::SearchBudgetExceeded(m)),
            Err(e) => return Err(e),
        }
    }
    Err(Error::SearchBudgetExceeded(format!("no {d}-order Boolean realizer found")))
}

/// Local realizer with frequency at most 3 and Boolean realizer with four
/// orders for the Kelly poset of order `n`, both found by bounded search.
pub fn kelly_small_certificates(n: usize) -> Result<(PleFamily, BooleanRealizer)> {
    if n > 5 {
        return Err(Error::BadParameter(format!("Kelly certificates support n <= 5, got {n}")));
    }
    let p = kelly(n)?;
    let mut budget = Budget::new(CERTIFICATE_SEARCH_BUDGET);
    let local = match local_realizer_with_mu(&p, 3, &mut budget) {
        Ok(Some(f)) => f,
        Ok(None) => {
            return Err(Error::SearchBudgetExceeded(format!(
                "no frequency-3 local realizer of kelly({n})"
            )))
        }
        Err(Error::BudgetExceeded(m)) => return Err(Error::SearchBudgetExceeded(m)),
        Err(e) => return Err(e),
    };
    Ok((local, boolean_search(&p, 4)?))
}
