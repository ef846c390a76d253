//! Constructive bounds: point removal, split lifts, certificates for named
//! families, the antichain-complement local realizer and composition over
//! components. Every output is a certificate the verifiers in
//! [`crate::realizer`] accept.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::{verify_local_realizer, verify_realizer, LinearOrder, PleFamily};

mod antichain;
mod disconnected;
mod families;
mod removal;
mod split_lift;

pub use antichain::{
    antichain_complement_local_realizer, antichain_complement_parts, block_parameters,
    upward_extension_realizer,
    AntichainParts,
};
pub use disconnected::{
    disconnected_dim, disconnected_local_realizer, disconnected_realizer,
};
pub use families::{
    kelly_small_certificates, pw_family_boolean_realizer, pw_family_local_realizer,
    standard_example_boolean_realizer, standard_example_local_realizer,
};
pub use removal::{bdim_remove_point_extend, dim_remove_point_extend, ldim_remove_point_extend};
pub use split_lift::{split_lift_from_p, split_lift_from_q};

fn require_local(p: &Poset, f: &PleFamily, what: &str) -> Result<usize> {
    let report = verify_local_realizer(p, f)
        .map_err(|e| Error::InvalidInput(format!("{what}: {e}")))?;
    match report.violation {
        None => Ok(report.mu),
        Some(v) => Err(Error::InvalidInput(format!("{what} is not a local realizer: {v}"))),
    }
}

fn require_realizer(p: &Poset, r: &PleFamily, what: &str) -> Result<()> {
    match verify_realizer(p, r) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Error::InvalidInput(format!("{what} is not a realizer"))),
        Err(e) => Err(Error::InvalidInput(format!("{what}: {e}"))),
    }
}

/// Rewrites element ids through `map`.
fn relabel(l: &LinearOrder, map: &[usize]) -> LinearOrder {
    LinearOrder(l.0.iter().map(|&e| map[e]).collect())
}

/// The members of `members` in the order they take in `order`.
fn restrict(order: &[usize], keep: impl Fn(usize) -> bool) -> Vec<usize> {
    order.iter().copied().filter(|&e| keep(e)).collect()
}

/// Lowest-id topological sort of `members` under `P` plus the chain order of
/// `chain` on the members it contains.
fn extend_with_chain(p: &Poset, members: &[usize], chain: &[usize]) -> LinearOrder {
    let mut pos = vec![usize::MAX; p.len()];
    for (i, &e) in chain.iter().enumerate() {
        pos[e] = i;
    }
    crate::solvers::topo_sort(members, |u, v| {
        p.lt(u, v) || (pos[u] != usize::MAX && pos[v] != usize::MAX && pos[u] < pos[v])
    })
}
