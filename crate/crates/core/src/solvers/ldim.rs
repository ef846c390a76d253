//! Exact local dimension.
//!
//! Work items are the ordered incomparable pairs (each must be reversed by
//! some ple) and the comparable pairs (each must occur together in some ple).
//! Each item is assigned to a ple whose ground set is the union of its items'
//! endpoints. Shrinking any ple of a local realizer to those endpoints keeps
//! it valid and never raises a frequency, so searching only such families is
//! complete; it also bounds the number of ples by the number of items.
//! A ple is feasible iff its reversal set is reversible, which only depends on
//! the order relations among pair endpoints.

use fixedbitset::FixedBitSet;

use super::{Budget, ClassClosure, DimCertificate, SolverOptions, Witness};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::realizer::PleFamily;

pub const DEFAULT_LDIM_MAX_ELEMENTS: usize = 12;

pub fn ldim_exact(p: &Poset, d_max: usize) -> Result<DimCertificate> {
    let opts = SolverOptions::default().with_max_elements(DEFAULT_LDIM_MAX_ELEMENTS);
    ldim_exact_with(p, d_max, opts)
}

pub fn ldim_exact_with(p: &Poset, d_max: usize, opts: SolverOptions) -> Result<DimCertificate> {
    opts.check_size(p, "ldim_exact")?;
    if d_max == 0 {
        return Err(Error::Exceeded(0));
    }
    if p.is_chain() {
        let ext = p.linear_extension().into();
        return Ok(DimCertificate {
            value: 1,
            witness: Witness::LocalRealizer(PleFamily::new(vec![ext])),
            exhausted: vec![],
            nodes: 0,
            notes: vec![],
        });
    }
    let mut budget = Budget::new(opts.node_budget);
    let mut exhausted = vec![1];
    for d in 2..=d_max {
        if let Some(family) = local_realizer_with_mu(p, d, &mut budget)? {
            return Ok(DimCertificate {
                value: d,
                witness: Witness::LocalRealizer(family),
                exhausted,
                nodes: budget.used(),
                notes: vec![],
            });
        }
        exhausted.push(d);
    }
    Err(Error::Exceeded(d_max))
}

#[derive(Clone, Copy, Debug)]
struct Item {
    x: usize,
    y: usize,
    /// Needs `x` above `y`; otherwise only co-occurrence.
    reverse: bool,
}

#[derive(Clone)]
struct Ple {
    closure: ClassClosure,
    ground: FixedBitSet,
}

impl Ple {
    fn satisfies(&self, it: Item) -> bool {
        self.ground.contains(it.x)
            && self.ground.contains(it.y)
            && (!it.reverse || self.closure.reversed(it.x, it.y))
    }

    fn missing(&self, it: Item) -> usize {
        usize::from(!self.ground.contains(it.x)) + usize::from(!self.ground.contains(it.y))
    }
}

struct Search<'a> {
    p: &'a Poset,
    items: Vec<Item>,
    d: usize,
    ples: Vec<Ple>,
    mu: Vec<usize>,
}

/// A local realizer with frequency at most `d`, if one exists.
pub(crate) fn local_realizer_with_mu(
    p: &Poset,
    d: usize,
    budget: &mut Budget,
) -> Result<Option<PleFamily>> {
    let mut items: Vec<Item> =
        p.incomparable_pairs().into_iter().map(|(x, y)| Item { x, y, reverse: true }).collect();
    items.extend(p.comparable_pairs().into_iter().map(|(x, y)| Item { x, y, reverse: false }));
    let mut s = Search { p, items, d, ples: Vec::new(), mu: vec![0; p.len()] };
    if !s.run(budget)? {
        return Ok(None);
    }
    let ples = s
        .ples
        .iter()
        .map(|pl| pl.closure.extension(Some(&pl.ground.ones().collect::<Vec<_>>())))
        .collect();
    Ok(Some(PleFamily::new(ples)))
}

impl Search<'_> {
    fn fits(&self, pl: &Ple, it: Item) -> bool {
        let room = |e: usize| pl.ground.contains(e) || self.mu[e] < self.d;
        room(it.x) && room(it.y) && (!it.reverse || pl.closure.can_reverse(it.x, it.y))
    }

    fn run(&mut self, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let fresh_ok = |mu: &[usize], it: Item, d: usize| mu[it.x] < d && mu[it.y] < d;
        let mut best: Option<(usize, Vec<usize>, bool)> = None;
        let mut best_count = usize::MAX;
        for (i, &it) in self.items.iter().enumerate() {
            if self.ples.iter().any(|pl| pl.satisfies(it)) {
                continue;
            }
            let options: Vec<usize> =
                (0..self.ples.len()).filter(|&k| self.fits(&self.ples[k], it)).collect();
            let fresh = fresh_ok(&self.mu, it, self.d);
            let count = options.len() + usize::from(fresh);
            if count == 0 {
                return Ok(false);
            }
            if count < best_count {
                best_count = count;
                best = Some((i, options, fresh));
            }
        }
        let Some((i, mut options, fresh)) = best else {
            return Ok(true);
        };
        let it = self.items[i];
        options.sort_by_key(|&k| self.ples[k].missing(it));
        for k in options {
            let saved = self.ples[k].clone();
            self.place(k, it);
            if self.run(budget)? {
                return Ok(true);
            }
            self.unplace(k, saved);
        }
        if fresh {
            self.ples.push(Ple {
                closure: ClassClosure::new(self.p),
                ground: FixedBitSet::with_capacity(self.p.len()),
            });
            let k = self.ples.len() - 1;
            self.place(k, it);
            if self.run(budget)? {
                return Ok(true);
            }
            self.mu[it.x] -= 1;
            self.mu[it.y] -= 1;
            self.ples.pop();
        }
        Ok(false)
    }

    fn place(&mut self, k: usize, it: Item) {
        let pl = &mut self.ples[k];
        for e in [it.x, it.y] {
            if !pl.ground.contains(e) {
                pl.ground.insert(e);
                self.mu[e] += 1;
            }
        }
        if it.reverse {
            pl.closure.reverse(it.x, it.y);
        }
    }

    fn unplace(&mut self, k: usize, saved: Ple) {
        for e in self.ples[k].ground.difference(&saved.ground) {
            self.mu[e] -= 1;
        }
        self.ples[k] = saved;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::standard_example;
    use crate::realizer::verify_local_realizer;

    fn ldim(p: &Poset) -> usize {
        let c = ldim_exact(p, 6).unwrap();
        let Witness::LocalRealizer(f) = &c.witness else { unreachable!() };
        let rep = verify_local_realizer(p, f).unwrap();
        assert!(rep.valid, "{:?}", rep.violation);
        assert!(rep.mu <= c.value);
        c.value
    }

    #[test]
    fn chains_and_antichains() {
        assert_eq!(ldim(&Poset::chain(1).unwrap()), 1);
        assert_eq!(ldim(&Poset::chain(4).unwrap()), 1);
        assert_eq!(ldim(&Poset::antichain(3).unwrap()), 2);
    }

    #[test]
    fn small_standard_examples() {
        assert_eq!(ldim(&standard_example(2).unwrap()), 2);
        assert_eq!(ldim(&standard_example(3).unwrap()), 3);
    }
}
