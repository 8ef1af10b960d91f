//! r-Stirling, r-Bell and their mixed-cell versions: elements `1..=r` must end
//! up in pairwise distinct cells.

use num_traits::Zero;

use super::distinct_balls_count;
use crate::error::{invalid, Result};
use crate::problem::CellSpec;
use crate::stirling::pow;
use crate::Count;

/// r-Stirling number `{n k}_r`: partitions of `{1..n}` into `k` non-empty
/// blocks with `1..=r` in distinct blocks.
///
/// Row-by-row from `{r k}_r = [k = r]` via
/// `{n k}_r = k {n-1 k}_r + {n-1 k-1}_r`; zero when `n < r`.
pub fn r_stirling2(n: usize, k: usize, r: usize) -> Count {
    if n < r || k > n || k < r {
        return Count::zero();
    }
    let mut row = vec![Count::zero(); k + 1];
    row[r] = Count::from(1u8);
    for _ in r..n {
        for j in (1..=k).rev() {
            let carry = row[j - 1].clone();
            row[j] = &row[j] * j + carry;
        }
        row[0] = Count::zero();
    }
    std::mem::take(&mut row[k])
}

fn require_prefix_fits(n: usize, r: usize) -> Result<()> {
    if r > n {
        return invalid(format!("r-Bell numbers need r <= n, got n={n} r={r}"));
    }
    Ok(())
}

/// `B_{n,r} = sum_{k=0..n} {n+r k+r}_r`: partitions of `n + r` elements with
/// the first `r` separated.
pub fn r_bell(n: usize, r: usize) -> Result<Count> {
    require_prefix_fits(n, r)?;
    Ok((0..=n).map(|k| r_stirling2(n + r, k + r, r)).sum())
}

/// Partitions of `{1..n}` itself with `1..=r` in distinct blocks.
pub fn r_bell_direct(n: usize, r: usize) -> Result<Count> {
    require_prefix_fits(n, r)?;
    Ok((r..=n).map(|k| r_stirling2(n, k, r)).sum())
}

/// `sum_{k=0..n} {n+r k+r}_r x^k`.
pub fn r_bell_polynomial(n: usize, r: usize, x: usize) -> Count {
    (0..=n).map(|k| r_stirling2(n + r, k + r, r) * pow(x, k)).sum()
}

/// Non-empty partitions of `{1..n}` into the mixed cells `cells` with
/// `1..=r` in pairwise distinct cells.
pub fn r_mixed_stirling(n: usize, cells: &CellSpec, r: usize) -> Result<Count> {
    require_prefix_fits(n, r)?;
    Ok(distinct_balls_count(n, cells.group_sizes(), r, false))
}

/// As [`r_mixed_stirling`] with empty cells allowed.
pub fn r_mixed_bell(n: usize, cells: &CellSpec, r: usize) -> Result<Count> {
    require_prefix_fits(n, r)?;
    Ok(distinct_balls_count(n, cells.group_sizes(), r, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stirling::{bell, stirling2};

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn r_stirling_small() {
        assert_eq!(r_stirling2(4, 2, 1), c(7));
        assert_eq!(r_stirling2(3, 3, 3), c(1));
        assert_eq!(r_stirling2(4, 3, 2), c(5));
        assert_eq!(r_stirling2(2, 2, 3), c(0));
        assert_eq!(r_stirling2(5, 1, 2), c(0));
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(r_stirling2(n, k, 0), stirling2(n, k));
                if n >= 1 {
                    assert_eq!(r_stirling2(n, k, 1), stirling2(n, k));
                }
            }
        }
    }

    #[test]
    fn r_bell_forms() {
        assert_eq!(r_bell(3, 0).unwrap(), c(5));
        assert_eq!(r_bell_direct(3, 0).unwrap(), c(5));
        assert_eq!(r_bell_direct(3, 3).unwrap(), c(1));
        // {1,2,3,4} with 1,2 apart: B_4 - B_3
        assert_eq!(r_bell_direct(4, 2).unwrap(), bell(4) - bell(3));
        assert!(r_bell(2, 3).is_err());
        assert!(r_bell_direct(2, 3).is_err());
        for n in 0..=6 {
            assert_eq!(r_bell(n, 0).unwrap(), bell(n));
        }
    }

    #[test]
    fn r_bell_polynomial_values() {
        assert_eq!(r_bell_polynomial(3, 2, 1), r_bell(3, 2).unwrap());
        assert_eq!(r_bell_polynomial(2, 1, 0), c(1));
        assert_eq!(r_bell_polynomial(0, 1, 5), c(1));
        // {4 2}_2 + {4 3}_2 x + {4 4}_2 x^2 = 4 + 5x + x^2 at x = 2
        assert_eq!(r_bell_polynomial(2, 2, 2), c(4 + 10 + 4));
    }

    #[test]
    fn r_mixed_values() {
        let two_one = CellSpec::new(vec![2, 1]).unwrap();
        assert_eq!(r_mixed_stirling(4, &two_one, 2).unwrap(), c(15));
        assert_eq!(r_mixed_stirling(2, &CellSpec::labeled(2), 2).unwrap(), c(2));
        assert_eq!(r_mixed_stirling(1, &CellSpec::labeled(1), 1).unwrap(), c(1));
        assert_eq!(r_mixed_bell(2, &two_one, 0).unwrap(), c(5));
        assert_eq!(r_mixed_bell(1, &CellSpec::labeled(1), 1).unwrap(), c(1));
        assert!(r_mixed_bell(1, &two_one, 2).is_err());
    }
}
