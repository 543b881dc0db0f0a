//! Exhaustive enumeration of `F_p^n` and `{0,1}^n` under a point budget.

use crate::error::{Error, Result};
use crate::field::{PrimeField, Residue};

/// Default cap on the number of points any single enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Returns `base^exp`, or an error if it exceeds `budget`.
pub fn check_budget(base: u64, exp: usize, budget: u64) -> Result<u64> {
    let needed = u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .unwrap_or(u64::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(needed)
}

/// Visits every point of `F_p^n` in lexicographic order, `x1` outermost.
pub fn for_each_point<W: Residue>(field: PrimeField<W>, n: usize, mut visit: impl FnMut(&[W])) {
    let p = W::from_u64(field.modulus());
    let mut x = vec![W::zero(); n];
    loop {
        visit(&x);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            x[i] = x[i] + W::one();
            if x[i] < p {
                break;
            }
            x[i] = W::zero();
        }
    }
}

/// Visits every point of a product of sorted sets, first set outermost.
/// Stops early when `visit` returns `false`.
pub fn for_each_grid_point<W: Residue>(sets: &[Vec<W>], mut visit: impl FnMut(&[W]) -> bool) {
    if sets.iter().any(|s| s.is_empty()) {
        return;
    }
    let n = sets.len();
    let mut idx = vec![0usize; n];
    let mut x: Vec<W> = sets.iter().map(|s| s[0]).collect();
    loop {
        if !visit(&x) {
            return;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < sets[i].len() {
                x[i] = sets[i][idx[i]];
                break;
            }
            idx[i] = 0;
            x[i] = sets[i][0];
        }
    }
}

/// Visits every Boolean point as residues `0`/`1` together with its number of
/// ones. Bit `j` of the mask is variable `x_{j+1}`.
pub fn for_each_boolean_point<W: Residue>(n: usize, mut visit: impl FnMut(&[W], u32)) {
    assert!(n < 64);
    let mut x = vec![W::zero(); n];
    for mask in 0u64..(1u64 << n) {
        for (j, xj) in x.iter_mut().enumerate() {
            *xj = if (mask >> j) & 1 == 1 {
                W::one()
            } else {
                W::zero()
            };
        }
        visit(&x, mask.count_ones());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let f = PrimeField::<u32>::new(3).unwrap();
        let mut seen = Vec::new();
        for_each_point(f, 2, |x| seen.push(x.to_vec()));
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], vec![0, 0]);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[3], vec![1, 0]);
        let mut count = 0;
        for_each_point(f, 0, |x| {
            assert!(x.is_empty());
            count += 1
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn grid_scan_stops_early() {
        let sets = vec![vec![1u32, 4], vec![0, 2, 3]];
        let mut seen = Vec::new();
        for_each_grid_point(&sets, |x| {
            seen.push(x.to_vec());
            seen.len() < 4
        });
        assert_eq!(seen, vec![vec![1, 0], vec![1, 2], vec![1, 3], vec![4, 0]]);
    }

    #[test]
    fn budget() {
        assert_eq!(check_budget(3, 4, 100), Ok(81));
        assert_eq!(
            check_budget(3, 5, 100),
            Err(Error::BudgetExceeded {
                needed: 243,
                budget: 100
            })
        );
        assert!(check_budget(1 << 20, 10, DEFAULT_BUDGET).is_err());
    }
}
