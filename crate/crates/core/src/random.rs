//! Seeded random posets for property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poset::{Poset, RelationMode};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random upper-triangular relation on `0..n` (each `i < j` pair kept with
/// probability `density`), transitively closed.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_relation(n, &pairs, RelationMode::Full).expect("upper-triangular relations are acyclic")
}

/// Poset with a size drawn from `min..=max` and a density drawn from
/// `[0.1, 0.6]`, fully determined by `seed`.
pub fn seeded_poset(seed: u64, min: usize, max: usize) -> Poset {
    let mut r = rng(seed);
    let n = r.gen_range(min..=max);
    let density = r.gen_range(0.1..0.6);
    random_poset(&mut r, n, density)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_is_deterministic() {
        for seed in 0..20 {
            let p = seeded_poset(seed, 1, 8);
            assert_eq!(p, seeded_poset(seed, 1, 8));
            assert!(p.check_axioms());
        }
    }
}
