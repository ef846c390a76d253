//! Realizers of disconnected posets assembled from their components.
//!
//! Component certificates use the ids of the matching entry of
//! [`Poset::components`].

use super::{relabel, require_local, require_realizer};
use crate::error::{Error, Result};
use crate::poset::{Poset, Subposet};
use crate::realizer::{LinearOrder, PleFamily};

/// Dimension of a poset with `t ≥ 2` components of the given dimensions.
pub fn disconnected_dim(dims: &[usize]) -> Result<usize> {
    if dims.len() < 2 {
        return Err(Error::BadParameter(format!(
            "needs at least two components, got {}",
            dims.len()
        )));
    }
    Ok(dims.iter().copied().max().unwrap_or(0).max(2))
}

fn components_of(p: &Poset, given: usize) -> Result<Vec<Subposet>> {
    let comps = p.components();
    if comps.len() < 2 {
        return Err(Error::InvalidInput("poset is connected".into()));
    }
    if comps.len() != given {
        return Err(Error::InvalidInput(format!(
            "{} components but {given} certificates",
            comps.len()
        )));
    }
    Ok(comps)
}

/// Realizer of `P` of size `max(2, max |R_i|)`: member 1 lists the
/// components forward, member 2 backward, the rest forward, each using the
/// matching member of the (padded) component realizer.
pub fn disconnected_realizer(p: &Poset, realizers: &[PleFamily]) -> Result<PleFamily> {
    let comps = components_of(p, realizers.len())?;
    for (c, r) in comps.iter().zip(realizers) {
        require_realizer(&c.poset, r, "component realizer")?;
    }
    let sizes: Vec<usize> = realizers.iter().map(|r| r.len()).collect();
    let d = disconnected_dim(&sizes)?;
    let member = |ci: usize, i: usize| -> LinearOrder {
        let r = &realizers[ci];
        relabel(&r.ples[i.min(r.len() - 1)], &comps[ci].elements)
    };
    let ples = (0..d)
        .map(|i| {
            let order: Vec<usize> = if i == 1 {
                (0..comps.len()).rev().flat_map(|ci| member(ci, i).0).collect()
            } else {
                (0..comps.len()).flat_map(|ci| member(ci, i).0).collect()
            };
            LinearOrder(order)
        })
        .collect();
    Ok(PleFamily::new(ples))
}

/// Local realizer of `P` with frequency at most `2 + max μ(L_i)`: the
/// component families plus two full extensions listing the components
/// forward and backward.
pub fn disconnected_local_realizer(p: &Poset, locals: &[PleFamily]) -> Result<PleFamily> {
    let comps = components_of(p, locals.len())?;
    let mut ples = Vec::new();
    for (c, f) in comps.iter().zip(locals) {
        require_local(&c.poset, f, "component local realizer")?;
        ples.extend(f.ples.iter().map(|l| relabel(l, &c.elements)));
    }
    let exts: Vec<Vec<usize>> = comps
        .iter()
        .map(|c| relabel(&LinearOrder(c.poset.linear_extension()), &c.elements).0)
        .collect();
    ples.push(LinearOrder(exts.iter().flatten().copied().collect()));
    ples.push(LinearOrder(exts.iter().rev().flatten().copied().collect()));
    Ok(PleFamily::new(ples))
}
