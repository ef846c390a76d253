//! Exact Dushnik–Miller dimension: colour the critical pairs with `d`
//! classes so that every class is reversible.

use super::{critical_pairs, Budget, ClassClosure, DimCertificate, SolverOptions, Witness};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::PleFamily;

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { max_elements: 64, node_budget: 50_000_000 }
    }
}

pub fn dim_exact(p: &Poset, d_max: usize) -> Result<DimCertificate> {
    dim_exact_with(p, d_max, SolverOptions::default())
}

pub fn dim_exact_with(p: &Poset, d_max: usize, opts: SolverOptions) -> Result<DimCertificate> {
    opts.check_size(p, "dim_exact")?;
    let mut budget = Budget::new(opts.node_budget);
    if p.is_chain() {
        if d_max < 1 {
            return Err(Error::Exceeded(d_max));
        }
        let ext = p.linear_extension().into();
        return Ok(DimCertificate {
            value: 1,
            witness: Witness::Realizer(PleFamily::new(vec![ext])),
            exhausted: vec![],
            nodes: 0,
            notes: vec![],
        });
    }
    let pairs = critical_pairs(p);
    let mut exhausted = vec![1];
    for d in 2..=d_max {
        if let Some(family) = realizer_of_size(p, &pairs, d, &mut budget)? {
            return Ok(DimCertificate {
                value: d,
                witness: Witness::Realizer(family),
                exhausted,
                nodes: budget.used(),
                notes: vec![],
            });
        }
        exhausted.push(d);
    }
    Err(Error::Exceeded(d_max))
}

/// A realizer with exactly `d` members, if one exists.
pub(crate) fn realizer_of_size(
    p: &Poset,
    pairs: &[(usize, usize)],
    d: usize,
    budget: &mut Budget,
) -> Result<Option<PleFamily>> {
    let mut classes: Vec<ClassClosure> = Vec::with_capacity(d);
    if !search(p, pairs, d, &mut classes, budget)? {
        return Ok(None);
    }
    // Unused classes still need to be linear extensions.
    while classes.len() < d {
        classes.push(ClassClosure::new(p));
    }
    Ok(Some(PleFamily::new(classes.iter().map(|c| c.extension(None)).collect())))
}

fn search(
    p: &Poset,
    pairs: &[(usize, usize)],
    d: usize,
    classes: &mut Vec<ClassClosure>,
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    // Most constrained open pair; pairs already reversed somewhere are done.
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (i, &(x, y)) in pairs.iter().enumerate() {
        if classes.iter().any(|c| c.reversed(x, y)) {
            continue;
        }
        let options: Vec<usize> =
            (0..classes.len()).filter(|&c| classes[c].can_reverse(x, y)).collect();
        let total = options.len() + usize::from(classes.len() < d);
        if total == 0 {
            return Ok(false);
        }
        if best.as_ref().is_none_or(|(_, o)| total < o.len() + usize::from(classes.len() < d)) {
            best = Some((i, options));
        }
    }
    let Some((i, options)) = best else {
        return Ok(true);
    };
    let (x, y) = pairs[i];
    for c in options {
        let saved = classes[c].clone();
        classes[c].reverse(x, y);
        if search(p, pairs, d, classes, budget)? {
            return Ok(true);
        }
        classes[c] = saved;
    }
    // Empty classes are interchangeable: open at most one new class.
    if classes.len() < d {
        let mut fresh = ClassClosure::new(p);
        fresh.reverse(x, y);
        classes.push(fresh);
        if search(p, pairs, d, classes, budget)? {
            return Ok(true);
        }
        classes.pop();
    }
    Ok(false)
}
