//! Mixed partition numbers: distributing a ball multiset into groups of
//! interchangeable cells.
//!
//! The functions in this module are the canonical API. Each one is either a
//! formula that has been checked against [`crate::oracle`] across the test
//! grid or a direct delegation to the oracle. Formulas reproduced exactly as
//! published, including ones that do not hold, live in [`literal`] and are
//! only consumed by the audit.

pub mod literal;
mod r_family;

use std::collections::HashMap;

pub use r_family::{r_bell, r_bell_direct, r_bell_polynomial, r_mixed_bell, r_mixed_stirling, r_stirling2};

use crate::error::{invalid, Result};
use crate::oracle::{self, SizeGuard};
use crate::problem::{BallSpec, CellSpec, PartitionProblem};
use crate::stirling::{binomial, factorial, multinomial, pow, stirling2, stirling2_cumulative};
use crate::{Count, Signed};
use num_traits::{One, Zero};

/// Number of ways to distribute `problem.balls` into `problem.cells`.
///
/// Closed forms are used where one applies:
/// * no balls at all,
/// * every cell distinguishable and no distinct prefix (product / alternating
///   product of binomials),
/// * every ball distinct (composition sum, prefix included).
///
/// Anything else falls through to the enumeration oracle under `guard`.
pub fn mixed_count(problem: &PartitionProblem, guard: &SizeGuard) -> Result<Count> {
    problem.validate()?;
    let cells = &problem.cells;
    if problem.balls.is_empty() {
        let fits = problem.allow_empty || cells.total_cells() == 0;
        return Ok(if fits { Count::one() } else { Count::zero() });
    }
    if cells.all_labeled() && problem.distinct_prefix == 0 {
        let k = cells.groups();
        return Ok(if problem.allow_empty {
            product_formula_labeled_cells(&problem.balls, k)
        } else {
            surjective_formula_labeled_cells(&problem.balls, k)
        });
    }
    if problem.balls.all_distinct() {
        return Ok(distinct_balls_count(
            problem.balls.total(),
            cells.group_sizes(),
            problem.distinct_prefix,
            problem.allow_empty,
        ));
    }
    oracle::count(problem, guard)
}

/// Empty-allowed count obtained by summing the non-empty count over every
/// sub-spec `(j1, .., jk)` with `0 <= ji <= ci`.
pub fn mixed_count_empty_expansion(balls: &BallSpec, cells: &CellSpec, guard: &SizeGuard) -> Result<Count> {
    let mut total = Count::zero();
    for sizes in cells.sub_spec_indices() {
        let sub = CellSpec::from_sizes_dropping_zeros(&sizes);
        total += mixed_count(&PartitionProblem::non_empty(balls.clone(), sub), guard)?;
    }
    Ok(total)
}

/// Ways to place `n` distinct balls into the groups `sizes`, with balls
/// `1..=r` in pairwise distinct cells.
///
/// The prefix balls are spread over the groups first (`i_g` of them into
/// group `g`, one per cell, which marks those cells as distinguishable). The
/// other `n - r` balls are then split across groups, and inside group `g`
/// each share goes partly to the `i_g` marked cells (free choice) and partly
/// to the `c_g - i_g` unmarked ones (a set partition, empty blocks allowed
/// or not).
pub(crate) fn distinct_balls_count(n: usize, sizes: &[usize], r: usize, allow_empty: bool) -> Count {
    if r > n {
        return Count::zero();
    }
    if sizes.is_empty() {
        return if n == 0 { Count::one() } else { Count::zero() };
    }
    let k = sizes.len();
    let free = n - r;
    let mut total = Count::zero();
    for_each_weak_composition(r, k, |prefix| {
        if prefix.iter().zip(sizes).any(|(i, c)| i > c) {
            return;
        }
        let prefix_ways = multinomial(prefix);
        let per_group: Vec<Vec<Count>> = sizes
            .iter()
            .zip(prefix)
            .map(|(&c, &i)| (0..=free).map(|l| group_fill(l, c - i, i, allow_empty)).collect())
            .collect();
        let mut inner = Count::zero();
        for_each_weak_composition(free, k, |split| {
            let mut term = multinomial(split);
            for (g, &l) in split.iter().enumerate() {
                term *= &per_group[g][l];
                if term.is_zero() {
                    return;
                }
            }
            inner += term;
        });
        total += prefix_ways * inner;
    });
    total
}

/// `l` distinct balls into `marked` distinguishable cells (may stay without
/// extra balls) plus `unmarked` interchangeable cells.
fn group_fill(l: usize, unmarked: usize, marked: usize, allow_empty: bool) -> Count {
    (0..=l)
        .map(|j| {
            let blocks = if allow_empty {
                stirling2_cumulative(j, unmarked)
            } else {
                stirling2(j, unmarked)
            };
            binomial(l, j) * blocks * pow(marked, l - j)
        })
        .sum()
}

/// Calls `f` on every `k`-tuple of nonnegative integers summing to `n`, in
/// colexicographic order.
pub(crate) fn for_each_weak_composition(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    let mut parts = vec![0; k];
    parts[0] = n;
    loop {
        f(&parts);
        // colex successor: move one unit from the first nonzero part (other
        // than the last) to its right neighbour, resetting the prefix
        let Some(first) = parts[..k - 1].iter().position(|&p| p > 0) else {
            return;
        };
        let moved = parts[first];
        parts[first] = 0;
        parts[first + 1] += 1;
        parts[0] = moved - 1;
    }
}

/// `B0(n, k, r)`: `n` distinct balls into `r` interchangeable cells plus
/// `k - 1` distinguishable ones, empty cells allowed.
pub fn b0_nkr(n: usize, k: usize, r: usize) -> Result<Count> {
    require_positive_kr(k, r)?;
    Ok(b0_general(n, k, r))
}

/// Same sum as [`b0_nkr`] but also defined at `r = 0`, where it reduces to
/// `(k - 1)^n`.
pub(crate) fn b0_general(n: usize, k: usize, r: usize) -> Count {
    debug_assert!(k >= 1);
    (0..=n)
        .map(|l| binomial(n, l) * stirling2_cumulative(l, r) * pow(k - 1, n - l))
        .sum()
}

/// `B(n, k, r)`: as [`b0_nkr`] with every one of the `k - 1 + r` cells
/// non-empty.
pub fn b_nkr(n: usize, k: usize, r: usize) -> Result<Count> {
    require_positive_kr(k, r)?;
    Ok(b_general(n, k, r))
}

/// [`b_nkr`] extended to `r = 0` (only labeled cells) and `k = 0` (zero).
pub(crate) fn b_general(n: usize, k: usize, r: usize) -> Count {
    if k == 0 {
        return Count::zero();
    }
    let labeled = k - 1;
    if r == 0 {
        return factorial(labeled) * stirling2(n, labeled);
    }
    if n + 1 < k + r {
        return Count::zero();
    }
    let fact = factorial(labeled);
    (r..=n + 1 - k)
        .map(|l| binomial(n, l) * stirling2(l, r) * stirling2(n - l, labeled) * &fact)
        .sum()
}

/// `B(n, k, r)` through the three-way recurrence on where ball 1 goes: alone
/// in an interchangeable cell, alone in a labeled cell, or sharing.
///
/// Boundaries: `B(0, k, r) = [k - 1 + r = 0]`, `B(n, k, 0) = (k-1)! S(n, k-1)`,
/// `B(n, 0, r) = 0`.
pub fn b_nkr_recurrence(n: usize, k: usize, r: usize) -> Result<Count> {
    require_positive_kr(k, r)?;
    if n == 0 {
        return invalid("the B(n, k, r) recurrence needs n >= 1");
    }
    let mut memo = HashMap::new();
    Ok(b_rec(n, k, r, &mut memo))
}

fn b_rec(n: usize, k: usize, r: usize, memo: &mut HashMap<(usize, usize, usize), Count>) -> Count {
    if k == 0 {
        return Count::zero();
    }
    if r == 0 {
        return factorial(k - 1) * stirling2(n, k - 1);
    }
    if n == 0 {
        return Count::zero();
    }
    if let Some(v) = memo.get(&(n, k, r)) {
        return v.clone();
    }
    let alone_unlabeled = b_rec(n - 1, k, r - 1, memo);
    let alone_labeled = b_rec(n - 1, k - 1, r, memo) * (k - 1);
    let shares = b_rec(n - 1, k, r, memo) * (k - 1 + r);
    let v = alone_unlabeled + alone_labeled + shares;
    memo.insert((n, k, r), v.clone());
    v
}

fn require_positive_kr(k: usize, r: usize) -> Result<()> {
    if k == 0 || r == 0 {
        return invalid(format!("B(n, k, r) needs k >= 1 and r >= 1, got k={k} r={r}"));
    }
    Ok(())
}

/// Non-empty count for `n` distinct balls, as a sum over compositions
/// `l1 + .. + lk = n` of `n!/(l1!..lk!) * prod S(li, ci)`.
pub fn mixed_distinct_balls_multinomial(n: usize, cells: &CellSpec) -> Count {
    let sizes = cells.group_sizes();
    let mut total = Count::zero();
    for_each_weak_composition(n, sizes.len(), |split| {
        let mut term = multinomial(split);
        for (&l, &c) in split.iter().zip(sizes) {
            term *= stirling2(l, c);
        }
        total += term;
    });
    total
}

/// Empty-allowed count for `n` distinct balls (composition sum with
/// cumulative Stirling factors).
pub fn mixed_distinct_balls_empty(n: usize, cells: &CellSpec) -> Count {
    distinct_balls_count(n, cells.group_sizes(), 0, true)
}

/// Non-empty count for `n` distinct balls by removing ball 1: it either
/// joins one of the `c1 + .. + ck` already non-empty cells or sits alone in a
/// cell of some group `j`, which leaves group `j` one cell short.
pub fn mixed_ball_removal_recurrence(n: usize, cells: &CellSpec) -> Count {
    let mut memo = HashMap::new();
    removal_rec(n, cells.group_sizes().to_vec(), &mut memo)
}

fn removal_rec(n: usize, sizes: Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), Count>) -> Count {
    let total_cells: usize = sizes.iter().sum();
    if n == 0 {
        return if total_cells == 0 { Count::one() } else { Count::zero() };
    }
    if total_cells > n {
        return Count::zero();
    }
    let key = (n, sizes);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (_, sizes) = &key;
    let mut v = removal_rec(n - 1, sizes.clone(), memo) * total_cells;
    for j in 0..sizes.len() {
        let mut shorter = sizes.clone();
        shorter[j] -= 1;
        if shorter[j] == 0 {
            shorter.remove(j);
        }
        v += removal_rec(n - 1, shorter, memo);
    }
    memo.insert(key, v.clone());
    v
}

/// Empty-allowed count for `k` distinguishable cells:
/// `prod_j C(bj + k - 1, k - 1)` (stars and bars per label).
pub fn product_formula_labeled_cells(balls: &BallSpec, k: usize) -> Count {
    if k == 0 {
        return if balls.is_empty() { Count::one() } else { Count::zero() };
    }
    balls
        .multiplicities()
        .iter()
        .map(|&b| binomial(b + k - 1, k - 1))
        .product()
}

/// Non-empty count for `k` distinguishable cells:
/// `sum_{i<k} (-1)^i C(k, i) prod_j C(bj + k - i - 1, k - i - 1)`.
///
/// The truncated sum drops the `i = k` term, which vanishes unless there are
/// no balls; that case is answered directly.
pub fn surjective_formula_labeled_cells(balls: &BallSpec, k: usize) -> Count {
    if balls.is_empty() {
        return if k == 0 { Count::one() } else { Count::zero() };
    }
    let mut acc = Signed::zero();
    for i in 0..k {
        let live = k - i;
        let term = Signed::from(binomial(k, i) * product_formula_labeled_cells(balls, live));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint().expect("inclusion-exclusion count is nonnegative")
}
