use mixed_stirling::mixed;
use mixed_stirling::oracle::{self, SizeGuard};
use mixed_stirling::stirling::{bell, binomial, falling_factorial, stirling2, stirling2_cumulative};
use mixed_stirling::{BallSpec, CellSpec, Count, PartitionProblem, Signed};
use num_traits::pow;
use proptest::prelude::*;

fn cell_spec() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=3, 1..=3).prop_filter("at most 6 cells", |v| v.iter().sum::<usize>() <= 6)
}

fn ball_spec() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=3, 0..=3).prop_filter("at most 6 balls", |v| v.iter().sum::<usize>() <= 6)
}

fn oracle_count(balls: Vec<usize>, cells: Vec<usize>, allow_empty: bool) -> Count {
    let problem = PartitionProblem::new(
        BallSpec::new(balls).unwrap(),
        CellSpec::new(cells).unwrap(),
        allow_empty,
        0,
    )
    .unwrap();
    oracle::count(&problem, &SizeGuard::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_order_does_not_matter(balls in ball_spec(), cells in cell_spec(), allow_empty: bool) {
        let mut reversed = cells.clone();
        reversed.reverse();
        prop_assert_eq!(oracle_count(balls.clone(), cells, allow_empty), oracle_count(balls, reversed, allow_empty));
    }

    #[test]
    fn ball_label_order_does_not_matter(balls in ball_spec(), cells in cell_spec(), allow_empty: bool) {
        let mut reversed = balls.clone();
        reversed.reverse();
        prop_assert_eq!(oracle_count(balls, cells.clone(), allow_empty), oracle_count(reversed, cells, allow_empty));
    }

    #[test]
    fn identical_balls_into_labeled_cells_is_stars_and_bars(b in 0usize..=6, k in 1usize..=5) {
        let balls = if b == 0 { Vec::new() } else { vec![b] };
        prop_assert_eq!(oracle_count(balls, vec![1; k], true), binomial(b + k - 1, k - 1));
    }

    #[test]
    fn adding_a_cell_never_lowers_the_empty_allowed_count(balls in ball_spec(), cells in cell_spec()) {
        prop_assume!(cells.iter().sum::<usize>() < 6);
        let mut bigger = cells.clone();
        bigger.push(1);
        prop_assert!(oracle_count(balls.clone(), cells, true) <= oracle_count(balls, bigger, true));
    }

    #[test]
    fn non_empty_never_exceeds_empty_allowed(balls in ball_spec(), cells in cell_spec()) {
        prop_assert!(oracle_count(balls.clone(), cells.clone(), false) <= oracle_count(balls, cells, true));
    }

    #[test]
    fn distinct_balls_closed_form_matches_oracle(n in 0usize..=6, cells in cell_spec(), allow_empty: bool, r in 0usize..=3) {
        prop_assume!(r <= n);
        let spec = CellSpec::new(cells).unwrap();
        let problem = PartitionProblem::new(BallSpec::distinct(n), spec.clone(), allow_empty, r).unwrap();
        let truth = oracle::count(&problem, &SizeGuard::default()).unwrap();
        let formula = if allow_empty { mixed::r_mixed_bell(n, &spec, r) } else { mixed::r_mixed_stirling(n, &spec, r) };
        prop_assert_eq!(formula.unwrap(), truth);
    }

    #[test]
    fn powers_expand_in_falling_factorials(n in 0usize..=30, x in -20i64..=20) {
        let sum: Signed = (0..=n).map(|k| Signed::from(stirling2(n, k)) * falling_factorial(x, k)).sum();
        prop_assert_eq!(sum, pow(Signed::from(x), n));
    }

    #[test]
    fn shifted_powers_expand_in_r_stirling_numbers(n in 0usize..=15, x in 0usize..=10, r in 0usize..=4) {
        let sum: Signed = (0..=n)
            .map(|k| Signed::from(mixed::r_stirling2(n + r, k + r, r)) * falling_factorial(x as i64, k))
            .sum();
        prop_assert_eq!(sum, pow(Signed::from(x + r), n));
    }

    #[test]
    fn bell_binomial_recurrence(n in 0usize..=60) {
        let rhs: Count = (0..=n).map(|k| binomial(n, k) * bell(k)).sum();
        prop_assert_eq!(bell(n + 1), rhs);
    }

    #[test]
    fn stirling_triangle_recurrence(n in 1usize..=80, k in 1usize..=80) {
        prop_assert_eq!(stirling2(n, k), stirling2(n - 1, k) * k + stirling2(n - 1, k - 1));
        prop_assert_eq!(stirling2_cumulative(n, n), bell(n));
    }

    #[test]
    fn b_recurrence_matches_sum(n in 1usize..=12, k in 1usize..=5, r in 1usize..=4) {
        prop_assert_eq!(mixed::b_nkr_recurrence(n, k, r).unwrap(), mixed::b_nkr(n, k, r).unwrap());
    }

    #[test]
    fn empty_allowed_is_sum_over_sub_specs(n in 0usize..=7, cells in cell_spec()) {
        let spec = CellSpec::new(cells).unwrap();
        let total: Count = spec
            .sub_spec_indices()
            .into_iter()
            .map(|sizes| mixed::mixed_distinct_balls_multinomial(n, &CellSpec::from_sizes_dropping_zeros(&sizes)))
            .sum();
        prop_assert_eq!(mixed::mixed_distinct_balls_empty(n, &spec), total);
    }
}
