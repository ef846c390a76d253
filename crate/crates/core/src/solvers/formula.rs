//! Closed-form reference value for the dimension of the subsets-of-size-1-
//! and-2 poset family.

use crate::error::{Error, Result};

/// `lg lg n + ½ lg lg lg n + ½ lg π + ½`; defined for `n >= 5`, where
/// `lg lg lg n` is positive.
pub fn dim12n_formula(n: u64) -> Result<f64> {
    if n < 5 {
        return Err(Error::DomainError(n));
    }
    let lg = f64::log2;
    let l2 = lg(lg(n as f64));
    Ok(l2 + 0.5 * lg(l2) + 0.5 * lg(std::f64::consts::PI) + 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_powers() {
        let half_lg_pi = 0.5 * std::f64::consts::PI.log2();
        assert!((dim12n_formula(16).unwrap() - (3.0 + half_lg_pi)).abs() < 1e-12);
        assert!((dim12n_formula(1 << 16).unwrap() - (5.5 + half_lg_pi)).abs() < 1e-12);
        assert_eq!(dim12n_formula(4), Err(Error::DomainError(4)));
    }
}
