use std::collections::HashMap;

use num_traits::pow;

use super::grid::{Grid, Point};
use super::report::{AuditVerdict, Counterexample, Status};
use super::{unknown, COUNTEREXAMPLE_CAP};
use crate::error::{invalid, Error, Result};
use crate::factor;
use crate::mixed::{self, literal};
use crate::oracle::{self, SizeGuard};
use crate::problem::{BallSpec, CellSpec, PartitionProblem};
use crate::stirling::{bell, binomial, falling_factorial, stirling2};
use crate::{Count, Signed};

/// Every registered identity id, in report order.
pub const IDENTITY_MANIFEST: &[&str] = &[
    "ex-b0-222",
    "prop-2.3",
    "prop-BB",
    "prop-BBB",
    "prop-incl-excl-B",
    "prop-bioo",
    "thm-multinomial",
    "thm-signsum",
    "thm-ball-removal",
    "thm-multip1",
    "thm-multip2",
    "rstirling-rec-ii",
    "rstirling-rec-iii",
    "eq-rbino",
    "thm-rstirling-via-B",
    "cor-rstirling-rec",
    "ex-rmixed-stirling-15",
    "thm-rmixed-stirling",
    "cor-rmixed-composition",
    "eq-bino",
    "bell-binomial-rec",
    "thm-rbell-sum",
    "thm-rmixed-bell",
    "prop-rmixed-bell-multinomial",
    "factor-thm-i",
    "factor-thm-ii",
];

pub fn identity_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|i| i.id).collect()
}

type Points = fn(&Grid) -> Vec<Point>;
type Eval = fn(&Point, &mut Context) -> Result<(Signed, Signed)>;

pub(crate) struct Identity {
    pub id: &'static str,
    pub claim: &'static str,
    points: Points,
    eval: Eval,
}

/// Oracle results are shared across identities within one run.
pub(crate) struct Context {
    guard: SizeGuard,
    cache: HashMap<PartitionProblem, Result<Count>>,
}

impl Context {
    pub fn new(guard: SizeGuard) -> Self {
        Context {
            guard,
            cache: HashMap::new(),
        }
    }

    fn oracle(&mut self, problem: PartitionProblem) -> Result<Signed> {
        let guard = self.guard;
        let entry = self
            .cache
            .entry(problem)
            .or_insert_with_key(|p| oracle::count(p, &guard));
        entry.clone().map(Signed::from)
    }

    fn distinct(&mut self, n: usize, cells: CellSpec, allow_empty: bool, r: usize) -> Result<Signed> {
        let problem = PartitionProblem::new(BallSpec::distinct(n), cells, allow_empty, r)?;
        self.oracle(problem)
    }
}

impl Identity {
    pub fn evaluate(&self, point: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
        (self.eval)(point, ctx)
    }

    pub fn verdict(&self, grid: &Grid, ctx: &mut Context) -> AuditVerdict {
        let mut checked = 0u64;
        let mut skipped = 0u64;
        let mut failing = 0u64;
        let mut counterexamples = Vec::new();
        let points = if grid.is_empty() {
            Vec::new()
        } else {
            (self.points)(grid)
        };
        for point in points {
            let outcome = self.evaluate(&point, ctx);
            let failure = match outcome {
                Err(Error::SizeGuardExceeded(_)) => {
                    skipped += 1;
                    continue;
                }
                Ok((formula, reference)) if formula == reference => None,
                Ok((formula, reference)) => Some(Counterexample {
                    point: point.to_string(),
                    formula: formula.to_string(),
                    oracle: reference.to_string(),
                }),
                Err(e) => Some(Counterexample {
                    point: point.to_string(),
                    formula: format!("error: {e}"),
                    oracle: String::new(),
                }),
            };
            checked += 1;
            if let Some(cx) = failure {
                failing += 1;
                if counterexamples.len() < COUNTEREXAMPLE_CAP {
                    counterexamples.push(cx);
                }
            }
        }
        let status = if failing > 0 {
            Status::Refuted
        } else if checked == 0 {
            Status::SkippedOutOfGuard
        } else {
            Status::VerifiedOnGrid
        };
        AuditVerdict {
            identity: self.id.to_string(),
            claim: self.claim.to_string(),
            grid_points_checked: checked,
            grid_points_skipped: skipped,
            status,
            failing_points: failing,
            counterexamples,
        }
    }
}

pub(crate) fn lookup(id: &str) -> Result<&'static Identity> {
    REGISTRY.iter().find(|i| i.id == id).ok_or_else(|| unknown(id))
}

fn s(v: Count) -> Signed {
    Signed::from(v)
}

fn mismatch<T>(id: &str, point: &Point) -> Result<T> {
    invalid(format!("identity {id} does not take point `{point}`"))
}

// ---- point generators ----

fn nkr_points(grid: &Grid, keep: impl Fn(usize, usize, usize) -> bool) -> Vec<Point> {
    let mut out = Vec::new();
    for n in grid.n.from(0) {
        for k in grid.k.from(0) {
            for r in grid.r.from(0) {
                if keep(n, k, r) {
                    out.push(Point::Nkr { n, k, r });
                }
            }
        }
    }
    out
}

fn b_family_points(grid: &Grid) -> Vec<Point> {
    nkr_points(grid, |n, k, r| n >= 1 && k >= 1 && r >= 1)
}

fn cells_points(grid: &Grid) -> Vec<Point> {
    let specs = grid.cell_specs();
    grid.n
        .from(1)
        .flat_map(|n| {
            specs.iter().map(move |cells| Point::Cells {
                n,
                cells: cells.clone(),
            })
        })
        .collect()
}

fn cells_r_points(grid: &Grid) -> Vec<Point> {
    let specs = grid.cell_specs();
    let mut out = Vec::new();
    for n in grid.n.from(1) {
        for cells in &specs {
            for r in grid.r.from(1).filter(|&r| r <= n) {
                out.push(Point::CellsR {
                    n,
                    cells: cells.clone(),
                    r,
                });
            }
        }
    }
    out
}

fn multiset_points(grid: &Grid) -> Vec<Point> {
    let cells = grid.cell_specs();
    grid.ball_specs(0)
        .into_iter()
        .flat_map(|balls| {
            cells.iter().map(move |c| Point::Multiset {
                balls: balls.clone(),
                cells: c.clone(),
            })
        })
        .collect()
}

fn labeled_points(grid: &Grid) -> Vec<Point> {
    let ks: Vec<usize> = grid.k.from(1).collect();
    grid.ball_specs(1)
        .into_iter()
        .flat_map(|balls| {
            ks.iter().map(move |&k| Point::Labeled {
                balls: balls.clone(),
                k,
            })
        })
        .collect()
}

fn nktr_points(grid: &Grid) -> Vec<Point> {
    let mut out = Vec::new();
    for n in grid.n.from(1) {
        for k in grid.k.from(1) {
            for t in grid.c.from(1) {
                for r in grid.r.from(1).filter(|&r| r <= n) {
                    out.push(Point::Nktr { n, k, t, r });
                }
            }
        }
    }
    out
}

fn mk_points(grid: &Grid, min_m: u64) -> Vec<Point> {
    let mut out = Vec::new();
    for m in grid.m.iter().filter(|&m| m >= min_m) {
        for k in grid.k.from(1) {
            out.push(Point::Mk { m, k });
        }
    }
    out
}

fn example_b0_points(grid: &Grid) -> Vec<Point> {
    if grid.n.contains(2) && grid.k.contains(2) && grid.r.contains(2) {
        vec![Point::Nkr { n: 2, k: 2, r: 2 }]
    } else {
        Vec::new()
    }
}

fn example_rmixed_points(grid: &Grid) -> Vec<Point> {
    let fits =
        grid.n.contains(4) && grid.r.contains(2) && grid.k.contains(2) && grid.c.contains(2) && grid.c.contains(1);
    if fits {
        let cells = CellSpec::new(vec![2, 1]).expect("positive sizes");
        vec![Point::CellsR { n: 4, cells, r: 2 }]
    } else {
        Vec::new()
    }
}

// ---- evaluators ----

fn ex_b0_222(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nkr { n, k, r } = *p else {
        return mismatch("ex-b0-222", p);
    };
    let printed = Signed::from(5);
    Ok((printed, ctx.distinct(n, CellSpec::mixed(r, k - 1), true, 0)?))
}

fn prop_empty_expansion(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Multiset { balls, cells } = p else {
        return mismatch("prop-2.3", p);
    };
    let reference = ctx.oracle(PartitionProblem::empty_allowed(balls.clone(), cells.clone()))?;
    let formula = mixed::mixed_count_empty_expansion(balls, cells, &ctx.guard)?;
    Ok((s(formula), reference))
}

fn prop_bb(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nkr { n, k, r } = *p else {
        return mismatch("prop-BB", p);
    };
    let reference = ctx.distinct(n, CellSpec::mixed(r, k - 1), true, 0)?;
    Ok((s(mixed::b0_nkr(n, k, r)?), reference))
}

fn b_reference(ctx: &mut Context, n: usize, k: usize, r: usize) -> Result<Signed> {
    ctx.distinct(n, CellSpec::mixed(r, k - 1), false, 0)
}

fn prop_bbb(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nkr { n, k, r } = *p else {
        return mismatch("prop-BBB", p);
    };
    let reference = b_reference(ctx, n, k, r)?;
    Ok((s(mixed::b_nkr(n, k, r)?), reference))
}

fn prop_incl_excl(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nkr { n, k, r } = *p else {
        return mismatch("prop-incl-excl-B", p);
    };
    let reference = b_reference(ctx, n, k, r)?;
    Ok((literal::b_nkr_inclusion_exclusion(n, k, r)?, reference))
}

fn prop_bioo(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nkr { n, k, r } = *p else {
        return mismatch("prop-bioo", p);
    };
    let reference = b_reference(ctx, n, k, r)?;
    Ok((s(mixed::b_nkr_recurrence(n, k, r)?), reference))
}

fn cells_non_empty(p: &Point, ctx: &mut Context, id: &str) -> Result<(usize, CellSpec, Signed)> {
    let Point::Cells { n, cells } = p else {
        return mismatch(id, p);
    };
    let reference = ctx.distinct(*n, cells.clone(), false, 0)?;
    Ok((*n, cells.clone(), reference))
}

fn thm_multinomial(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let (n, cells, reference) = cells_non_empty(p, ctx, "thm-multinomial")?;
    Ok((s(mixed::mixed_distinct_balls_multinomial(n, &cells)), reference))
}

fn thm_signsum(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let (n, cells, reference) = cells_non_empty(p, ctx, "thm-signsum")?;
    Ok((literal::mixed_distinct_balls_signsum(n, &cells), reference))
}

fn thm_ball_removal(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let (n, cells, reference) = cells_non_empty(p, ctx, "thm-ball-removal")?;
    Ok((s(mixed::mixed_ball_removal_recurrence(n, &cells)), reference))
}

fn thm_multip1(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Labeled { balls, k } = p else {
        return mismatch("thm-multip1", p);
    };
    let reference = ctx.oracle(PartitionProblem::empty_allowed(balls.clone(), CellSpec::labeled(*k)))?;
    Ok((s(mixed::product_formula_labeled_cells(balls, *k)), reference))
}

fn thm_multip2(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Labeled { balls, k } = p else {
        return mismatch("thm-multip2", p);
    };
    let reference = ctx.oracle(PartitionProblem::non_empty(balls.clone(), CellSpec::labeled(*k)))?;
    Ok((s(mixed::surjective_formula_labeled_cells(balls, *k)), reference))
}

fn r_stirling_reference(ctx: &mut Context, n: usize, k: usize, r: usize) -> Result<Signed> {
    if k == 0 {
        // no blocks: only the empty set qualifies
        return Ok(Signed::from(u8::from(n == 0)));
    }
    ctx.distinct(n, CellSpec::mixed(k, 0), false, r)
}

fn rstirling_rec_ii(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nkr { n, k, r } = *p else {
        return mismatch("rstirling-rec-ii", p);
    };
    let reference = r_stirling_reference(ctx, n, k, r)?;
    Ok((literal::r_stirling_rec_ii(n, k, r)?, reference))
}

fn rstirling_rec_iii(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nkr { n, k, r } = *p else {
        return mismatch("rstirling-rec-iii", p);
    };
    let reference = r_stirling_reference(ctx, n, k, r)?;
    Ok((literal::r_stirling_rec_iii(n, k, r)?, reference))
}

fn eq_rbino(p: &Point, _ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nxr { n, x, r } = *p else {
        return mismatch("eq-rbino", p);
    };
    let formula: Signed = (0..=n)
        .map(|k| s(mixed::r_stirling2(n + r, k + r, r)) * falling_factorial(x as i64, k))
        .sum();
    Ok((formula, Signed::from(pow(Count::from(x + r), n))))
}

fn rstirling_via_b(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nkr { n, k, r } = *p else {
        return mismatch("thm-rstirling-via-B", p);
    };
    let reference = r_stirling_reference(ctx, n, k, r)?;
    Ok((literal::r_stirling_via_b(n, k, r)?, reference))
}

fn cor_rstirling(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nkr { n, k, r } = *p else {
        return mismatch("cor-rstirling-rec", p);
    };
    let reference = r_stirling_reference(ctx, n, k, r)?;
    Ok((literal::r_stirling_corollary_recurrence(n, k, r)?, reference))
}

fn ex_rmixed_15(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::CellsR { n, cells, r } = p else {
        return mismatch("ex-rmixed-stirling-15", p);
    };
    let printed = Signed::from(15);
    Ok((printed, ctx.distinct(*n, cells.clone(), false, *r)?))
}

fn thm_rmixed_stirling(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nktr { n, k, t, r } = *p else {
        return mismatch("thm-rmixed-stirling", p);
    };
    let reference = ctx.distinct(n, CellSpec::mixed(t, k - 1), false, r)?;
    Ok((literal::r_mixed_stirling_theorem(n, k, t, r)?, reference))
}

fn cor_rmixed_composition(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::CellsR { n, cells, r } = p else {
        return mismatch("cor-rmixed-composition", p);
    };
    let reference = ctx.distinct(*n, cells.clone(), false, *r)?;
    Ok((literal::r_mixed_stirling_composition(*n, cells, *r)?, reference))
}

fn eq_bino(p: &Point, _ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nx { n, x } = *p else {
        return mismatch("eq-bino", p);
    };
    let formula: Signed = (0..=n)
        .map(|k| s(stirling2(n, k)) * falling_factorial(x as i64, k))
        .sum();
    Ok((formula, Signed::from(pow(Count::from(x), n))))
}

fn bell_binomial(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::N { n } = *p else {
        return mismatch("bell-binomial-rec", p);
    };
    let reference = ctx.distinct(n + 1, CellSpec::mixed(n + 1, 0), true, 0)?;
    let formula: Count = (0..=n).map(|k| binomial(n, k) * bell(k)).sum();
    Ok((s(formula), reference))
}

fn thm_rbell_sum(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nr { n, r } = *p else {
        return mismatch("thm-rbell-sum", p);
    };
    let reference = ctx.distinct(n, CellSpec::mixed(n, 0), true, r)?;
    Ok((literal::r_bell_theorem_sum(n, r)?, reference))
}

fn thm_rmixed_bell(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Nktr { n, k, t, r } = *p else {
        return mismatch("thm-rmixed-bell", p);
    };
    let reference = ctx.distinct(n, CellSpec::mixed(t, k - 1), true, r)?;
    Ok((literal::r_mixed_bell_theorem(n, k, t, r)?, reference))
}

fn prop_rmixed_bell_multinomial(p: &Point, ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::CellsR { n, cells, r } = p else {
        return mismatch("prop-rmixed-bell-multinomial", p);
    };
    let reference = ctx.distinct(*n, cells.clone(), true, *r)?;
    Ok((literal::r_mixed_bell_multinomial(*n, cells, *r)?, reference))
}

fn factor_i(p: &Point, _ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Mk { m, k } = *p else {
        return mismatch("factor-thm-i", p);
    };
    let exponents = factor::factorize(m)?.as_balls();
    let formula = mixed::product_formula_labeled_cells(&exponents, k);
    Ok((s(formula), Signed::from(factor::count_divisor_tuples(m, k, true))))
}

fn factor_ii(p: &Point, _ctx: &mut Context) -> Result<(Signed, Signed)> {
    let Point::Mk { m, k } = *p else {
        return mismatch("factor-thm-ii", p);
    };
    let exponents = factor::factorize(m)?.as_balls();
    let formula = mixed::surjective_formula_labeled_cells(&exponents, k);
    Ok((s(formula), Signed::from(factor::count_divisor_tuples(m, k, false))))
}

pub(crate) static REGISTRY: &[Identity] = &[
    Identity {
        id: "ex-b0-222",
        claim: "worked example: B0(2,2,2) = 5",
        points: example_b0_points,
        eval: ex_b0_222,
    },
    Identity {
        id: "prop-2.3",
        claim: "empty-allowed count = sum of non-empty counts over sub-specs 0 <= ji <= ci",
        points: multiset_points,
        eval: prop_empty_expansion,
    },
    Identity {
        id: "prop-BB",
        claim: "B0(n,k,r) = sum_l C(n,l) {l r}_0 (k-1)^(n-l)",
        points: b_family_points,
        eval: prop_bb,
    },
    Identity {
        id: "prop-BBB",
        claim: "B(n,k,r) = sum_{l=r..n-k+1} C(n,l) {l r} {n-l k-1} (k-1)!",
        points: b_family_points,
        eval: prop_bbb,
    },
    Identity {
        id: "prop-incl-excl-B",
        claim: "B(n,k,r) = sum_{s<=r,t<=k-1} (-1)^(t+e_s) C(k-1,t) B0(n,k-t,r-s)",
        points: b_family_points,
        eval: prop_incl_excl,
    },
    Identity {
        id: "prop-bioo",
        claim: "B(n,k,r) = B(n-1,k,r-1) + (k-1) B(n-1,k-1,r) + (k-1+r) B(n-1,k,r)",
        points: b_family_points,
        eval: prop_bioo,
    },
    Identity {
        id: "thm-multinomial",
        claim: "{B C} = sum_{l1+..+lk=n} n!/(l1!..lk!) prod {li ci} for distinct balls",
        points: cells_points,
        eval: thm_multinomial,
    },
    Identity {
        id: "thm-signsum",
        claim: "{B C} = sum_{0<=ji<=ci} (-1)^#(j) {B C_j}_0 for distinct balls",
        points: cells_points,
        eval: thm_signsum,
    },
    Identity {
        id: "thm-ball-removal",
        claim: "{B C} = (c1+..+ck) {B' C} + sum_j {B' C_j} for distinct balls",
        points: cells_points,
        eval: thm_ball_removal,
    },
    Identity {
        id: "thm-multip1",
        claim: "{B C}_0 = prod_j C(bj+k-1, k-1) for k labeled cells",
        points: labeled_points,
        eval: thm_multip1,
    },
    Identity {
        id: "thm-multip2",
        claim: "{B C} = sum_{i<k} (-1)^i C(k,i) prod_j C(bj+k-i-1, k-i-1) for k labeled cells",
        points: labeled_points,
        eval: thm_multip2,
    },
    Identity {
        id: "rstirling-rec-ii",
        claim: "{n k}_r = k {n-1 k}_(r-1) + {n-1 k-1}_r for n > r",
        points: |g| nkr_points(g, |n, _, r| r >= 1 && n > r),
        eval: rstirling_rec_ii,
    },
    Identity {
        id: "rstirling-rec-iii",
        claim: "{n k}_r = {n k}_(r-1) - (r-1) {n-1 k}_(r-1) for n >= r >= 1",
        points: |g| nkr_points(g, |n, _, r| r >= 1 && n >= r),
        eval: rstirling_rec_iii,
    },
    Identity {
        id: "eq-rbino",
        claim: "(x+r)^n = sum_k {n+r k+r}_r x(x-1)..(x-k+1)",
        points: |g| {
            let mut out = Vec::new();
            for n in g.n.from(0) {
                for r in g.r.from(0) {
                    for x in 0..=n + 2 {
                        out.push(Point::Nxr { n, x, r });
                    }
                }
            }
            out
        },
        eval: eq_rbino,
    },
    Identity {
        id: "thm-rstirling-via-B",
        claim: "{n k}_r = sum_{l=k-r..n-2r} C(n-r,l) {l k-r} {n-r+l r} r!",
        points: |g| nkr_points(g, |n, k, r| r >= 1 && n >= r && k >= r),
        eval: rstirling_via_b,
    },
    Identity {
        id: "cor-rstirling-rec",
        claim: "{n k}_r = {n-1 k}_(r-1) + r {n-1 k-1}_r + k {n-1 k}_r",
        points: |g| nkr_points(g, |n, k, r| n >= r && k >= 1 && r >= 1),
        eval: cor_rstirling,
    },
    Identity {
        id: "ex-rmixed-stirling-15",
        claim: "worked example: {4 2}_2 with cells (2,1) = 15",
        points: example_rmixed_points,
        eval: ex_rmixed_15,
    },
    Identity {
        id: "thm-rmixed-stirling",
        claim: "{n k}_r^C for C = (t,1,..,1) by the two-step double sum",
        points: nktr_points,
        eval: thm_rmixed_stirling,
    },
    Identity {
        id: "cor-rmixed-composition",
        claim: "{n k}_r^C = sum_{i1+..+ik=r} r!/(i1!..ik!) {n-r C}",
        points: cells_r_points,
        eval: cor_rmixed_composition,
    },
    Identity {
        id: "eq-bino",
        claim: "x^n = sum_k {n k} x(x-1)..(x-k+1)",
        points: |g| {
            g.n.from(0)
                .flat_map(|n| (0..=n + 2).map(move |x| Point::Nx { n, x }))
                .collect()
        },
        eval: eq_bino,
    },
    Identity {
        id: "bell-binomial-rec",
        claim: "B_(n+1) = sum_k C(n,k) B_k",
        points: |g| g.n.from(0).map(|n| Point::N { n }).collect(),
        eval: bell_binomial,
    },
    Identity {
        id: "thm-rbell-sum",
        claim: "B_(n,r) = sum_k sum_l C(n-r,l) {l k-r}_0 r^(n-r-l)",
        points: |g| {
            let mut out = Vec::new();
            for n in g.n.from(1) {
                for r in g.r.from(1).filter(|&r| r <= n) {
                    out.push(Point::Nr { n, r });
                }
            }
            out
        },
        eval: thm_rbell_sum,
    },
    Identity {
        id: "thm-rmixed-bell",
        claim: "B_(n,r)^C = sum_{i=1..r} C(r,i) C(k-i,r-i) (r-i)! B0(n-r,k+i-1,t-i) for C = (t,1,..,1)",
        points: nktr_points,
        eval: thm_rmixed_bell,
    },
    Identity {
        id: "prop-rmixed-bell-multinomial",
        claim: "B_(n,r)^C = sum_{i1+..+ik=r} r!/(i1!..ik!) {n-r C}_0",
        points: cells_r_points,
        eval: prop_rmixed_bell_multinomial,
    },
    Identity {
        id: "factor-thm-i",
        claim: "ordered k-factorizations of m = prod_j C(aj+k-1, k-1)",
        points: |g| mk_points(g, 1),
        eval: factor_i,
    },
    Identity {
        id: "factor-thm-ii",
        claim: "ordered k-factorizations of m into factors > 1 = sum_{i<k} (-1)^i C(k,i) prod_j C(aj+k-i-1, k-i-1)",
        points: |g| mk_points(g, 2),
        eval: factor_ii,
    },
];
