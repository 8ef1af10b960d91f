//! Published formulas evaluated exactly as printed.
//!
//! Nothing here feeds the canonical API. Several of these expressions do not
//! count what they claim to; the audit decides which ones hold on a grid.
//! Results are signed because some of the sums can go negative.
//!
//! Conventions used for terms the printed formulas leave undefined:
//! * `0^0 = 1`;
//! * `{l 0}_0 = [l = 0]` and a cumulative Stirling number with a negative
//!   lower index is zero;
//! * `B0(n, k, 0) = (k - 1)^n`, `B(n, k, 0) = (k - 1)! S(n, k - 1)`,
//!   `B(n, k, r) = 0` when `k < 1`;
//! * a binomial with negative upper index is zero.

use num_traits::Zero;

use super::{
    b0_general, b_general, for_each_weak_composition, mixed_distinct_balls_empty, mixed_distinct_balls_multinomial,
    r_stirling2,
};
use crate::error::{invalid, Result};
use crate::problem::CellSpec;
use crate::stirling::{binomial, factorial, multinomial, pow, stirling2, stirling2_cumulative};
use crate::Signed;

fn s(v: crate::Count) -> Signed {
    Signed::from(v)
}

fn binomial_signed_top(n: i64, k: usize) -> Signed {
    if n < 0 {
        Signed::zero()
    } else {
        s(binomial(n as usize, k))
    }
}

fn cumulative_signed_index(l: usize, k: i64) -> Signed {
    if k < 0 {
        Signed::zero()
    } else {
        s(stirling2_cumulative(l, k as usize))
    }
}

fn b_signed(n: usize, k: i64, r: usize) -> Signed {
    if k < 1 {
        Signed::zero()
    } else {
        s(b_general(n, k as usize, r))
    }
}

fn b0_signed(n: usize, k: i64, r: i64) -> Signed {
    if k < 1 || r < 0 {
        Signed::zero()
    } else {
        s(b0_general(n, k as usize, r as usize))
    }
}

fn positive(name: &str, pairs: &[(&str, usize)]) -> Result<()> {
    for (label, v) in pairs {
        if *v == 0 {
            return invalid(format!("{name}: {label} must be positive"));
        }
    }
    Ok(())
}

/// `sum_{0<=s<=r, 0<=t<=k-1} (-1)^(t + e_s) C(k-1, t) B0(n, k-t, r-s)` with
/// `e_0 = 0` and `e_s = 1` otherwise.
pub fn b_nkr_inclusion_exclusion(n: usize, k: usize, r: usize) -> Result<Signed> {
    positive("B(n,k,r) inclusion-exclusion", &[("n", n), ("k", k), ("r", r)])?;
    let mut acc = Signed::zero();
    for shift in 0..=r {
        let eps = usize::from(shift != 0);
        for t in 0..k {
            let term = s(binomial(k - 1, t) * b0_general(n, k - t, r - shift));
            if (t + eps) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
    }
    Ok(acc)
}

/// `sum_{0<=ji<=ci} (-1)^#{i : ji != 0} {B C_j}_0` for `n` distinct balls.
pub fn mixed_distinct_balls_signsum(n: usize, cells: &CellSpec) -> Signed {
    let mut acc = Signed::zero();
    for sizes in cells.sub_spec_indices() {
        let nonzero = sizes.iter().filter(|&&j| j != 0).count();
        let sub = CellSpec::from_sizes_dropping_zeros(&sizes);
        let term = s(mixed_distinct_balls_empty(n, &sub));
        if nonzero % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `k {n-1 k}_{r-1} + {n-1 k-1}_r`, for `n > r >= 1`.
pub fn r_stirling_rec_ii(n: usize, k: usize, r: usize) -> Result<Signed> {
    if !(n > r && r >= 1) {
        return invalid(format!("needs n > r >= 1, got n={n} r={r}"));
    }
    let first = r_stirling2(n - 1, k, r - 1) * k;
    let second = match k.checked_sub(1) {
        Some(km1) => r_stirling2(n - 1, km1, r),
        None => Zero::zero(),
    };
    Ok(s(first + second))
}

/// `{n k}_{r-1} - (r-1) {n-1 k}_{r-1}`, for `n >= r >= 1`.
pub fn r_stirling_rec_iii(n: usize, k: usize, r: usize) -> Result<Signed> {
    if !(n >= r && r >= 1) {
        return invalid(format!("needs n >= r >= 1, got n={n} r={r}"));
    }
    Ok(s(r_stirling2(n, k, r - 1)) - s(r_stirling2(n - 1, k, r - 1) * (r - 1)))
}

/// `sum_{l=k-r..n-2r} C(n-r, l) {l k-r} {n-r+l r} r!`, for `n >= r >= 1`,
/// `k >= r`.
pub fn r_stirling_via_b(n: usize, k: usize, r: usize) -> Result<Signed> {
    if !(n >= r && r >= 1 && k >= r) {
        return invalid(format!("needs n >= r >= 1 and k >= r, got n={n} k={k} r={r}"));
    }
    let lo = k - r;
    let Some(hi) = n.checked_sub(2 * r) else {
        return Ok(Signed::zero());
    };
    let fact = factorial(r);
    let total: crate::Count = (lo..=hi)
        .map(|l| binomial(n - r, l) * stirling2(l, k - r) * stirling2(n - r + l, r) * &fact)
        .sum();
    Ok(s(total))
}

/// `{n-1 k}_{r-1} + r {n-1 k-1}_r + k {n-1 k}_r`, for `n, r >= 1`.
pub fn r_stirling_corollary_recurrence(n: usize, k: usize, r: usize) -> Result<Signed> {
    positive("r-Stirling corollary", &[("n", n), ("r", r)])?;
    let first = r_stirling2(n - 1, k, r - 1);
    let second = match k.checked_sub(1) {
        Some(km1) => r_stirling2(n - 1, km1, r) * r,
        None => Zero::zero(),
    };
    let third = r_stirling2(n - 1, k, r) * k;
    Ok(s(first + second + third))
}

/// `sum_{k=0..n} sum_{l=0..n-r} C(n-r, l) {l k-r}_0 r^(n-r-l)`, for
/// `n >= r >= 1`.
pub fn r_bell_theorem_sum(n: usize, r: usize) -> Result<Signed> {
    if !(n >= r && r >= 1) {
        return invalid(format!("needs n >= r >= 1, got n={n} r={r}"));
    }
    let free = n - r;
    let mut acc = Signed::zero();
    for k in 0..=n {
        for l in 0..=free {
            acc += s(binomial(free, l)) * cumulative_signed_index(l, k as i64 - r as i64) * s(pow(r, free - l));
        }
    }
    Ok(acc)
}

/// The two-step sum for cells `(t, 1, .., 1)` (`k` groups):
/// `sum_{i=0..min(t,r)} sum_{l=k-1+t-r..n-r} C(n-r, l) C(r, i) C(k-1, r-i)
///  (r-i)! (n-r-l)^r B(l, k-1+t-r, t-i)`.
pub fn r_mixed_stirling_theorem(n: usize, k: usize, t: usize, r: usize) -> Result<Signed> {
    positive("r-mixed Stirling theorem", &[("n", n), ("k", k), ("t", t), ("r", r)])?;
    if r > n {
        return invalid(format!("needs r <= n, got n={n} r={r}"));
    }
    let free = n - r;
    let inner_k = k as i64 - 1 + t as i64 - r as i64;
    let lo = inner_k.max(0) as usize;
    let mut acc = Signed::zero();
    for i in 0..=t.min(r) {
        let outer = binomial(r, i) * binomial(k - 1, r - i) * factorial(r - i);
        if outer.is_zero() {
            continue;
        }
        for l in lo..=free {
            acc += s(binomial(free, l) * &outer * pow(free - l, r)) * b_signed(l, inner_k, t - i);
        }
    }
    Ok(acc)
}

/// `sum_{i1+..+ik=r} r!/(i1!..ik!) {n-r C}`.
pub fn r_mixed_stirling_composition(n: usize, cells: &CellSpec, r: usize) -> Result<Signed> {
    if r > n {
        return invalid(format!("needs r <= n, got n={n} r={r}"));
    }
    let base = mixed_distinct_balls_multinomial(n - r, cells);
    Ok(s(composition_weight(r, cells.groups()) * base))
}

/// For cells `(t, 1, .., 1)`:
/// `sum_{i=1..r} C(r, i) C(k-i, r-i) (r-i)! B0(n-r, k+i-1, t-i)`.
pub fn r_mixed_bell_theorem(n: usize, k: usize, t: usize, r: usize) -> Result<Signed> {
    positive("r-mixed Bell theorem", &[("n", n), ("k", k), ("t", t), ("r", r)])?;
    if r > n {
        return invalid(format!("needs r <= n, got n={n} r={r}"));
    }
    let mut acc = Signed::zero();
    for i in 1..=r {
        let coeff = s(binomial(r, i) * factorial(r - i)) * binomial_signed_top(k as i64 - i as i64, r - i);
        if coeff.is_zero() {
            continue;
        }
        acc += coeff * b0_signed(n - r, (k + i - 1) as i64, t as i64 - i as i64);
    }
    Ok(acc)
}

/// `sum_{i1+..+ik=r} r!/(i1!..ik!) {n-r C}_0`.
pub fn r_mixed_bell_multinomial(n: usize, cells: &CellSpec, r: usize) -> Result<Signed> {
    if r > n {
        return invalid(format!("needs r <= n, got n={n} r={r}"));
    }
    let base = mixed_distinct_balls_empty(n - r, cells);
    Ok(s(composition_weight(r, cells.groups()) * base))
}

fn composition_weight(r: usize, k: usize) -> crate::Count {
    let mut total = crate::Count::zero();
    for_each_weak_composition(r, k, |parts| total += multinomial(parts));
    total
}
