//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use mixed_stirling::audit::{self, Grid, Point, Status};
use mixed_stirling::factor;
use mixed_stirling::mixed;
use mixed_stirling::oracle::{self, SizeGuard};
use mixed_stirling::stirling::{bell, binomial, stirling2};
use mixed_stirling::{BallSpec, CellSpec, Count, PartitionProblem};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct OracleCache {
    guard: SizeGuard,
    seen: HashMap<PartitionProblem, Count>,
}

impl OracleCache {
    fn new(guard: SizeGuard) -> Self {
        OracleCache {
            guard,
            seen: HashMap::new(),
        }
    }

    fn count(&mut self, problem: PartitionProblem) -> Result<Count, String> {
        if let Some(v) = self.seen.get(&problem) {
            return Ok(v.clone());
        }
        let v = oracle::count(&problem, &self.guard).map_err(|e| format!("oracle failed on {problem}: {e}"))?;
        self.seen.insert(problem, v.clone());
        Ok(v)
    }

    fn distinct(&mut self, n: usize, cells: &CellSpec, allow_empty: bool, r: usize) -> Result<Count, String> {
        let p =
            PartitionProblem::new(BallSpec::distinct(n), cells.clone(), allow_empty, r).map_err(|e| e.to_string())?;
        self.count(p)
    }
}

fn compositions(max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut i = 0;
    while i < out.len() {
        let prefix = out[i].clone();
        let used: usize = prefix.iter().sum();
        for part in 1..=max - used {
            let mut next = prefix.clone();
            next.push(part);
            out.push(next);
        }
        i += 1;
    }
    out
}

fn criterion_1() -> Outcome {
    let value = mixed::b0_nkr(2, 2, 2).map_err(|e| e.to_string())?;
    ensure(value == Count::from(5u8), || {
        format!("b0_nkr(2,2,2) = {value}, expected 5")
    })?;
    let problem = PartitionProblem::empty_allowed(BallSpec::distinct(2), CellSpec::mixed(2, 1));
    let listing = oracle::enumerate(&problem, &SizeGuard::default()).map_err(|e| e.to_string())?;
    ensure(listing.len() == 5, || {
        format!("oracle enumerated {} configurations", listing.len())
    })?;
    let check = audit::check_identity("prop-BB", &Point::Nkr { n: 2, k: 2, r: 2 }, &SizeGuard::default())
        .map_err(|e| e.to_string())?;
    ensure(check.passed() && check.reference == 5.into(), || {
        format!("prop-BB check: {:?}", check)
    })?;
    Ok("B0(2,2,2) = 5 and the oracle lists 5 configurations".into())
}

fn criterion_2() -> Outcome {
    let cells = CellSpec::new(vec![2, 1]).map_err(|e| e.to_string())?;
    let value = mixed::r_mixed_stirling(4, &cells, 2).map_err(|e| e.to_string())?;
    let mut cache = OracleCache::new(SizeGuard::default());
    let truth = cache.distinct(4, &cells, false, 2)?;
    ensure(value == truth, || {
        format!("r_mixed_stirling = {value}, oracle = {truth}")
    })?;
    let report = audit::run_audit_selected(
        &Grid::default(),
        &SizeGuard::default(),
        &["ex-rmixed-stirling-15".into()],
    )
    .map_err(|e| e.to_string())?;
    let verdict = report.verdict("ex-rmixed-stirling-15").ok_or("verdict missing")?;
    let printed = Count::from(15u8);
    let expected = if truth == printed {
        Status::VerifiedOnGrid
    } else {
        Status::Refuted
    };
    ensure(verdict.status == expected, || {
        format!("audit status {:?}, expected {:?}", verdict.status, expected)
    })?;
    if expected == Status::Refuted {
        ensure(!verdict.counterexamples.is_empty(), || {
            "refuted without counterexample".into()
        })?;
    }
    Ok(format!(
        "oracle = {truth}, printed value 15, audit status {}",
        verdict.status.as_str()
    ))
}

fn criterion_3() -> Outcome {
    let guard = SizeGuard::default();
    let mut cache = OracleCache::new(guard);
    let cell_specs: Vec<CellSpec> = compositions(6)
        .into_iter()
        .map(|c| CellSpec::new(c).expect("positive"))
        .collect();
    let mut checks = 0u64;
    let mut failures = Vec::new();
    let mut compare = |what: String, got: Result<Count, String>, want: Result<Count, String>| {
        checks += 1;
        match (got, want) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => failures.push(format!("{what}: formula {a:?} oracle {b:?}")),
        }
    };
    let err = |e: mixed_stirling::Error| e.to_string();

    for n in 0..=7usize {
        for cells in &cell_specs {
            for allow_empty in [false, true] {
                for r in 0..=n.min(3) {
                    let problem =
                        PartitionProblem::new(BallSpec::distinct(n), cells.clone(), allow_empty, r).expect("valid");
                    let truth = cache.count(problem.clone());
                    compare(
                        format!("mixed_count {problem}"),
                        mixed::mixed_count(&problem, &guard).map_err(err),
                        truth.clone(),
                    );
                    let family = if allow_empty {
                        mixed::r_mixed_bell(n, cells, r)
                    } else {
                        mixed::r_mixed_stirling(n, cells, r)
                    };
                    compare(
                        format!("r_mixed n={n} cells={cells} r={r} empty={allow_empty}"),
                        family.map_err(err),
                        truth.clone(),
                    );
                    if r == 0 {
                        if allow_empty {
                            compare(
                                format!("mixed_distinct_balls_empty n={n} cells={cells}"),
                                Ok(mixed::mixed_distinct_balls_empty(n, cells)),
                                truth.clone(),
                            );
                            compare(
                                format!("mixed_count_empty_expansion n={n} cells={cells}"),
                                mixed::mixed_count_empty_expansion(&BallSpec::distinct(n), cells, &guard).map_err(err),
                                truth,
                            );
                        } else {
                            compare(
                                format!("mixed_distinct_balls_multinomial n={n} cells={cells}"),
                                Ok(mixed::mixed_distinct_balls_multinomial(n, cells)),
                                truth.clone(),
                            );
                            compare(
                                format!("mixed_ball_removal_recurrence n={n} cells={cells}"),
                                Ok(mixed::mixed_ball_removal_recurrence(n, cells)),
                                truth,
                            );
                        }
                    }
                }
            }
        }
    }

    for n in 0..=7usize {
        for k in 1..=6usize {
            for r in 1..=(7 - k).min(3) {
                let cells = CellSpec::mixed(r, k - 1);
                let empty = cache.distinct(n, &cells, true, 0);
                let full = cache.distinct(n, &cells, false, 0);
                compare(
                    format!("b0_nkr({n},{k},{r})"),
                    mixed::b0_nkr(n, k, r).map_err(err),
                    empty,
                );
                compare(
                    format!("b_nkr({n},{k},{r})"),
                    mixed::b_nkr(n, k, r).map_err(err),
                    full.clone(),
                );
                if n >= 1 {
                    compare(
                        format!("b_nkr_recurrence({n},{k},{r})"),
                        mixed::b_nkr_recurrence(n, k, r).map_err(err),
                        full,
                    );
                }
            }
        }
        for k in 1..=6usize {
            for r in 0..=n.min(3) {
                let truth = cache.distinct(n, &CellSpec::mixed(k, 0), false, r);
                compare(
                    format!("r_stirling2({n},{k},{r})"),
                    Ok(mixed::r_stirling2(n, k, r)),
                    truth,
                );
            }
        }
        if (1..=6).contains(&n) {
            for r in 0..=n.min(3) {
                let truth = cache.distinct(n, &CellSpec::mixed(n, 0), true, r);
                compare(
                    format!("r_bell_direct({n},{r})"),
                    mixed::r_bell_direct(n, r).map_err(err),
                    truth,
                );
            }
        }
    }

    for mults in compositions(7).into_iter().filter(|m| !m.is_empty()) {
        let balls = BallSpec::new(mults).expect("positive");
        for k in 1..=6usize {
            let labeled = CellSpec::labeled(k);
            let empty = cache.count(PartitionProblem::empty_allowed(balls.clone(), labeled.clone()));
            let full = cache.count(PartitionProblem::non_empty(balls.clone(), labeled.clone()));
            compare(
                format!("product_formula {balls} k={k}"),
                Ok(mixed::product_formula_labeled_cells(&balls, k)),
                empty,
            );
            compare(
                format!("surjective_formula {balls} k={k}"),
                Ok(mixed::surjective_formula_labeled_cells(&balls, k)),
                full,
            );
        }
        if balls.total() <= 5 {
            for cells in cell_specs.iter().filter(|c| c.total_cells() <= 4) {
                let truth = cache.count(PartitionProblem::empty_allowed(balls.clone(), cells.clone()));
                compare(
                    format!("mixed_count_empty_expansion {balls} {cells}"),
                    mixed::mixed_count_empty_expansion(&balls, cells, &guard).map_err(err),
                    truth,
                );
            }
        }
    }

    if failures.is_empty() {
        Ok(format!(
            "{checks} comparisons against {} oracle counts agree",
            cache.seen.len()
        ))
    } else {
        Err(format!(
            "{} of {checks} comparisons disagree; first: {}",
            failures.len(),
            failures[0]
        ))
    }
}

const CONSTRUCTIVE: &[&str] = &[
    "prop-2.3",
    "prop-BB",
    "prop-BBB",
    "prop-bioo",
    "thm-multinomial",
    "thm-ball-removal",
    "thm-multip1",
    "thm-multip2",
    "eq-bino",
    "bell-binomial-rec",
    "factor-thm-i",
    "factor-thm-ii",
];

const SUSPECT: &[&str] = &[
    "thm-signsum",
    "rstirling-rec-ii",
    "thm-rstirling-via-B",
    "cor-rstirling-rec",
    "thm-rbell-sum",
    "thm-rmixed-stirling",
    "cor-rmixed-composition",
    "thm-rmixed-bell",
    "prop-rmixed-bell-multinomial",
];

fn criterion_4() -> Outcome {
    let report = audit::run_audit(&Grid::default(), &SizeGuard::default());
    let mut points = 0;
    for id in CONSTRUCTIVE {
        let v = report.verdict(id).ok_or_else(|| format!("{id} missing from report"))?;
        ensure(
            v.status == Status::VerifiedOnGrid && v.counterexamples.is_empty(),
            || {
                format!(
                    "{id}: status {} with {} counterexamples",
                    v.status.as_str(),
                    v.failing_points
                )
            },
        )?;
        points += v.grid_points_checked;
    }
    Ok(format!(
        "{} identities verified on {points} grid points",
        CONSTRUCTIVE.len()
    ))
}

fn criterion_5() -> Outcome {
    let first = audit::run_audit(&Grid::default(), &SizeGuard::default());
    let second = audit::run_audit(&Grid::default(), &SizeGuard::default());
    ensure(first.to_text() == second.to_text(), || {
        "text report differs between runs".into()
    })?;
    ensure(first.to_json() == second.to_json(), || {
        "json report differs between runs".into()
    })?;
    let mut verdicts = Vec::new();
    for id in SUSPECT {
        let v = first.verdict(id).ok_or_else(|| format!("{id} missing from report"))?;
        let definite = match v.status {
            Status::VerifiedOnGrid => v.grid_points_checked > 0,
            Status::Refuted => !v.counterexamples.is_empty(),
            Status::SkippedOutOfGuard => false,
        };
        ensure(definite, || {
            format!("{id}: no definite verdict ({})", v.status.as_str())
        })?;
        verdicts.push(format!("{id}={}", v.status.as_str()));
    }
    Ok(verdicts.join(" "))
}

fn criterion_6() -> Outcome {
    let guard = SizeGuard {
        max_balls: 8,
        max_total_cells: 8,
        max_states: 50_000_000,
    };
    let mut cache = OracleCache::new(guard);
    for n in 0..=8usize {
        for k in 0..=n {
            let truth = if k == 0 {
                Count::from(u8::from(n == 0))
            } else {
                cache.distinct(n, &CellSpec::mixed(k, 0), false, 0)?
            };
            let got = stirling2(n, k);
            ensure(got == truth, || format!("stirling2({n},{k}) = {got}, oracle {truth}"))?;
        }
    }
    let mut bells = vec![Count::from(1u8)];
    for n in 0..10usize {
        let next: Count = (0..=n).map(|k| binomial(n, k) * &bells[k]).sum();
        bells.push(next);
    }
    for (n, expected) in bells.iter().enumerate() {
        let got = bell(n);
        ensure(&got == expected, || format!("bell({n}) = {got}, recurrence {expected}"))?;
        if (1..=8).contains(&n) {
            let truth = cache.distinct(n, &CellSpec::mixed(n, 0), true, 0)?;
            ensure(got == truth, || format!("bell({n}) = {got}, oracle {truth}"))?;
        }
    }
    Ok(format!("triangle n<=8 matches oracle; bell(10) = {}", bells[10]))
}

fn criterion_7() -> Outcome {
    let mut pairs = 0;
    for m in 2..=2000u64 {
        let f = factor::factorize(m).map_err(|e| e.to_string())?;
        for k in 1..=f.big_omega() {
            let with = factor::ordered_factorizations_with_units(m, k).map_err(|e| e.to_string())?;
            let without = factor::ordered_factorizations_no_units(m, k).map_err(|e| e.to_string())?;
            let brute_with = factor::count_divisor_tuples(m, k, true);
            let brute_without = factor::count_divisor_tuples(m, k, false);
            ensure(with == Count::from(brute_with), || {
                format!("m={m} k={k}: with units {with} vs {brute_with}")
            })?;
            ensure(without == Count::from(brute_without), || {
                format!("m={m} k={k}: no units {without} vs {brute_without}")
            })?;
            pairs += 1;
        }
    }
    let total = factor::total_ordered_factorizations(12).map_err(|e| e.to_string())?;
    let unordered = factor::unordered_multiplicative_partitions(12).map_err(|e| e.to_string())?;
    ensure(total == Count::from(8u8), || {
        format!("total_ordered_factorizations(12) = {total}")
    })?;
    ensure(unordered == Count::from(4u8), || {
        format!("unordered_multiplicative_partitions(12) = {unordered}")
    })?;
    Ok(format!(
        "{pairs} (m, k) pairs match divisor enumeration; H(12) = 8, f(12) = 4"
    ))
}

fn criterion_8() -> Outcome {
    let mut pairs = 0;
    for m in 2..=500u64 {
        let balls = factor::factorize(m).map_err(|e| e.to_string())?.as_balls();
        for k in 1..=4usize {
            let with = factor::ordered_factorizations_with_units(m, k).map_err(|e| e.to_string())?;
            let without = factor::ordered_factorizations_no_units(m, k).map_err(|e| e.to_string())?;
            let product = mixed::product_formula_labeled_cells(&balls, k);
            let surjective = mixed::surjective_formula_labeled_cells(&balls, k);
            ensure(with == product, || {
                format!("m={m} k={k}: {with} vs product formula {product}")
            })?;
            ensure(without == surjective, || {
                format!("m={m} k={k}: {without} vs surjective formula {surjective}")
            })?;
            pairs += 1;
        }
    }
    Ok(format!(
        "{pairs} (m, k) pairs match the labeled-cell formulas on exponent vectors"
    ))
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            title: "worked example B0(2,2,2)",
            budget: Duration::from_secs(1),
            run: criterion_1,
        },
        Criterion {
            id: 2,
            title: "worked example r-mixed {4 2}_2 cells (2,1)",
            budget: Duration::from_secs(1),
            run: criterion_2,
        },
        Criterion {
            id: 3,
            title: "oracle equivalence n<=7, cells<=6, r<=3",
            budget: Duration::from_secs(300),
            run: criterion_3,
        },
        Criterion {
            id: 4,
            title: "constructive identities verified on default grid",
            budget: Duration::from_secs(600),
            run: criterion_4,
        },
        Criterion {
            id: 5,
            title: "suspect identities adjudicated, report deterministic",
            budget: Duration::from_secs(600),
            run: criterion_5,
        },
        Criterion {
            id: 6,
            title: "Stirling triangle n<=8 and Bell n<=10",
            budget: Duration::from_secs(60),
            run: criterion_6,
        },
        Criterion {
            id: 7,
            title: "factorization counts m<=2000",
            budget: Duration::from_secs(120),
            run: criterion_7,
        },
        Criterion {
            id: 8,
            title: "factorization / mixed partition bridge m<=500, k<=4",
            budget: Duration::from_secs(60),
            run: criterion_8,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}; over budget {:?}", c.budget)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {} ({:.2?}) {detail}", c.id, c.title, elapsed),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {} ({:.2?}) {detail}", c.id, c.title, elapsed);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
