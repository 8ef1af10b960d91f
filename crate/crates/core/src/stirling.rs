//! Binomials, multinomials, Stirling numbers of the second kind, Bell numbers
//! and falling factorials, all exact.
//!
//! Stirling numbers are served from a process-wide [`StirlingTable`] that is
//! grown row by row on demand and never shrunk.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Count, Signed};

/// Triangle of Stirling numbers of the second kind, rows `0..=max_n`.
///
/// Row `n` stores `S(n, 0..=n)`; entries with `k > n` are implicitly zero.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<Count>>,
}

impl Default for StirlingTable {
    fn default() -> Self {
        Self::new()
    }
}

impl StirlingTable {
    /// A table holding only `S(0, 0) = 1`.
    pub fn new() -> Self {
        StirlingTable {
            rows: vec![vec![Count::one()]],
        }
    }

    pub fn with_rows(max_n: usize) -> Self {
        let mut table = Self::new();
        table.extend_to(max_n);
        table
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Grows the table so that row `max_n` is available.
    pub fn extend_to(&mut self, max_n: usize) {
        while self.rows.len() <= max_n {
            let prev = self.rows.last().expect("row 0 always present");
            let n = prev.len();
            let mut row = Vec::with_capacity(n + 1);
            row.push(Count::zero());
            for k in 1..=n {
                let carry = &prev[k - 1];
                let stay = if k < prev.len() {
                    &prev[k] * Count::from(k)
                } else {
                    Count::zero()
                };
                row.push(carry + stay);
            }
            self.rows.push(row);
        }
    }

    /// `S(n, k)` if row `n` has been built.
    pub fn get(&self, n: usize, k: usize) -> Option<Count> {
        let row = self.rows.get(n)?;
        Some(row.get(k).cloned().unwrap_or_default())
    }

    pub fn row(&self, n: usize) -> Option<&[Count]> {
        self.rows.get(n).map(Vec::as_slice)
    }
}

fn shared_table() -> &'static RwLock<StirlingTable> {
    static TABLE: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(StirlingTable::with_rows(32)))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 0..k {
        // exact at every step: the running value is C(n, i + 1)
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(sum parts)! / prod(part!)`.
pub fn multinomial(parts: &[usize]) -> Count {
    let mut acc = Count::one();
    let mut total = 0;
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

pub fn factorial(n: usize) -> Count {
    (1..=n).fold(Count::one(), |acc, i| acc * i)
}

/// Stirling number of the second kind `S(n, k)`, with `S(0, 0) = 1`,
/// `S(n, 0) = 0` for `n > 0` and `S(n, k) = 0` for `k > n`.
pub fn stirling2(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    {
        let table = shared_table().read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(n, k) {
            return v;
        }
    }
    let mut table = shared_table().write().unwrap_or_else(|e| e.into_inner());
    table.extend_to(n);
    table.get(n, k).expect("row just built")
}

/// `sum_{i=1..k} S(n, i)`: partitions of an `n`-set into at most `k`
/// interchangeable cells. Equals 1 at `n = 0` for every `k`.
pub fn stirling2_cumulative(n: usize, k: usize) -> Count {
    if n == 0 {
        return Count::one();
    }
    (1..=k.min(n)).map(|i| stirling2(n, i)).sum()
}

/// Bell number `B_n`, the total number of partitions of an `n`-set.
pub fn bell(n: usize) -> Count {
    (0..=n).map(|k| stirling2(n, k)).sum()
}

/// `x (x - 1) ... (x - k + 1)`; 1 for `k = 0`.
pub fn falling_factorial(x: i64, k: usize) -> Signed {
    let mut acc = Signed::one();
    let x = BigInt::from(x);
    for i in 0..k {
        acc *= &x - BigInt::from(i);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: usize, exp: usize) -> Count {
    num_traits::pow(BigUint::from(base), exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), c(10));
        assert_eq!(binomial(3, 0), c(1));
        assert_eq!(binomial(2, 5), c(0));
        assert_eq!(binomial(0, 0), c(1));
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn multinomial_basics() {
        assert_eq!(multinomial(&[2, 1, 1]), c(12));
        assert_eq!(multinomial(&[0, 0]), c(1));
        assert_eq!(multinomial(&[3]), c(1));
        assert_eq!(multinomial(&[]), c(1));
    }

    #[test]
    fn stirling_boundaries() {
        assert_eq!(stirling2(0, 0), c(1));
        assert_eq!(stirling2(5, 0), c(0));
        assert_eq!(stirling2(0, 3), c(0));
        assert_eq!(stirling2(3, 5), c(0));
        assert_eq!(stirling2(4, 2), c(7));
        assert_eq!(stirling2(10, 5), c(42525));
    }

    #[test]
    fn table_grows_past_initial_rows() {
        // S(40, 20), computed independently by the explicit alternating sum
        let explicit: BigInt = (0..=20usize)
            .map(|j| {
                let term = BigInt::from(binomial(20, j)) * BigInt::from(pow(j, 40));
                if (20 - j) % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum::<BigInt>()
            / BigInt::from(factorial(20));
        assert_eq!(BigInt::from(stirling2(40, 20)), explicit);
    }

    #[test]
    fn cumulative_and_bell() {
        assert_eq!(stirling2_cumulative(0, 3), c(1));
        assert_eq!(stirling2_cumulative(4, 2), c(8));
        assert_eq!(stirling2_cumulative(3, 3), c(5));
        assert_eq!(stirling2_cumulative(3, 0), c(0));
        let bells = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (n, b) in bells.iter().enumerate() {
            assert_eq!(bell(n), c(*b), "bell({n})");
        }
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(4, 2), Signed::from(12));
        assert_eq!(falling_factorial(3, 0), Signed::from(1));
        assert_eq!(falling_factorial(2, 4), Signed::from(0));
        assert_eq!(falling_factorial(-2, 3), Signed::from(-24));
    }

    #[test]
    fn standalone_table() {
        let t = StirlingTable::with_rows(4);
        assert_eq!(t.max_n(), 4);
        assert_eq!(t.row(4).unwrap(), &[c(0), c(1), c(7), c(6), c(1)]);
        assert_eq!(t.get(2, 7), Some(c(0)));
        assert_eq!(t.get(5, 1), None);
    }
}
