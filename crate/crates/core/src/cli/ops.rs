//! Named counting operations reachable from `mixstir compute`.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use super::{ComputeArgs, Format};
use crate::error::{invalid, Result};
use crate::mixed::{self, literal};
use crate::oracle::{self, SizeGuard};
use crate::problem::{BallSpec, CellSpec, PartitionProblem};
use crate::{factor, stirling, Signed};

/// A named input of an operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    N,
    K,
    R,
    T,
    X,
    M,
    Balls,
    Cells,
    Parts,
    AllowEmpty,
    NoUnits,
}

impl Param {
    pub fn flag(&self) -> &'static str {
        match self {
            Param::N => "n",
            Param::K => "k",
            Param::R => "r",
            Param::T => "t",
            Param::X => "x",
            Param::M => "m",
            Param::Balls => "balls",
            Param::Cells => "cells",
            Param::Parts => "parts",
            Param::AllowEmpty => "allow-empty",
            Param::NoUnits => "no-units",
        }
    }
}

enum Outcome {
    Int(Signed),
    Text(String),
}

impl From<crate::Count> for Outcome {
    fn from(v: crate::Count) -> Self {
        Outcome::Int(Signed::from(v))
    }
}

impl From<Signed> for Outcome {
    fn from(v: Signed) -> Self {
        Outcome::Int(v)
    }
}

/// One entry of the operation registry.
pub struct Operation {
    pub name: &'static str,
    pub params: &'static [Param],
    pub about: &'static str,
    run: fn(&ComputeArgs, &SizeGuard) -> Result<Outcome>,
}

use Param::*;

fn n(a: &ComputeArgs) -> Result<usize> {
    a.n.ok_or_else(|| missing("n"))
}
fn k(a: &ComputeArgs) -> Result<usize> {
    a.k.ok_or_else(|| missing("k"))
}
fn r(a: &ComputeArgs) -> Result<usize> {
    a.r.ok_or_else(|| missing("r"))
}
fn t(a: &ComputeArgs) -> Result<usize> {
    a.t.ok_or_else(|| missing("t"))
}
fn x(a: &ComputeArgs) -> Result<i64> {
    a.x.ok_or_else(|| missing("x"))
}
fn x_nonneg(a: &ComputeArgs) -> Result<usize> {
    let v = x(a)?;
    usize::try_from(v).map_err(|_| crate::Error::InvalidArgument(format!("--x must be nonnegative, got {v}")))
}
fn m(a: &ComputeArgs) -> Result<u64> {
    a.m.ok_or_else(|| missing("m"))
}
fn balls(a: &ComputeArgs) -> Result<BallSpec> {
    BallSpec::new(a.balls.clone().ok_or_else(|| missing("balls"))?)
}
fn cells(a: &ComputeArgs) -> Result<CellSpec> {
    CellSpec::new(a.cells.clone().ok_or_else(|| missing("cells"))?)
}
fn parts(a: &ComputeArgs) -> Result<Vec<usize>> {
    a.parts.clone().ok_or_else(|| missing("parts"))
}
fn problem(a: &ComputeArgs) -> Result<PartitionProblem> {
    PartitionProblem::new(balls(a)?, cells(a)?, a.allow_empty, a.r.unwrap_or(0))
}

fn missing(flag: &str) -> crate::Error {
    crate::Error::InvalidArgument(format!("missing required argument --{flag}"))
}

pub static OPERATIONS: &[Operation] = &[
    Operation {
        name: "binomial",
        params: &[N, K],
        about: "binomial coefficient C(n, k)",
        run: |a, _| Ok(stirling::binomial(n(a)?, k(a)?).into()),
    },
    Operation {
        name: "multinomial",
        params: &[Parts],
        about: "multinomial coefficient (sum parts)! / prod(parts!)",
        run: |a, _| Ok(stirling::multinomial(&parts(a)?).into()),
    },
    Operation {
        name: "factorial",
        params: &[N],
        about: "n!",
        run: |a, _| Ok(stirling::factorial(n(a)?).into()),
    },
    Operation {
        name: "stirling2",
        params: &[N, K],
        about: "Stirling number of the second kind {n k}",
        run: |a, _| Ok(stirling::stirling2(n(a)?, k(a)?).into()),
    },
    Operation {
        name: "stirling2-cumulative",
        params: &[N, K],
        about: "partitions of an n-set into at most k blocks",
        run: |a, _| Ok(stirling::stirling2_cumulative(n(a)?, k(a)?).into()),
    },
    Operation {
        name: "bell",
        params: &[N],
        about: "Bell number B_n",
        run: |a, _| Ok(stirling::bell(n(a)?).into()),
    },
    Operation {
        name: "falling-factorial",
        params: &[X, K],
        about: "x (x-1) .. (x-k+1)",
        run: |a, _| Ok(stirling::falling_factorial(x(a)?, k(a)?).into()),
    },
    Operation {
        name: "mixed-count",
        params: &[Balls, Cells, AllowEmpty, R],
        about: "canonical count of a partition problem (--r is the distinct prefix, default 0)",
        run: |a, g| Ok(mixed::mixed_count(&problem(a)?, g)?.into()),
    },
    Operation {
        name: "mixed-count-empty-expansion",
        params: &[Balls, Cells],
        about: "empty-allowed count as a sum of non-empty counts over sub-specs",
        run: |a, g| Ok(mixed::mixed_count_empty_expansion(&balls(a)?, &cells(a)?, g)?.into()),
    },
    Operation {
        name: "oracle-count",
        params: &[Balls, Cells, AllowEmpty, R],
        about: "brute-force enumeration count",
        run: |a, g| Ok(oracle::count(&problem(a)?, g)?.into()),
    },
    Operation {
        name: "oracle-list",
        params: &[Balls, Cells, AllowEmpty, R],
        about: "brute-force enumeration listing in canonical serialized form",
        run: |a, g| {
            let configs = oracle::enumerate(&problem(a)?, g)?;
            let mut s = String::new();
            for c in configs {
                let _ = writeln!(s, "{}", c.serialize());
            }
            Ok(Outcome::Text(s))
        },
    },
    Operation {
        name: "b0",
        params: &[N, K, R],
        about: "n distinct balls into r interchangeable and k-1 labeled cells, empties allowed",
        run: |a, _| Ok(mixed::b0_nkr(n(a)?, k(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "b",
        params: &[N, K, R],
        about: "n distinct balls into r interchangeable and k-1 labeled cells, no empty cell",
        run: |a, _| Ok(mixed::b_nkr(n(a)?, k(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "b-recurrence",
        params: &[N, K, R],
        about: "B(n,k,r) by the three-term recurrence",
        run: |a, _| Ok(mixed::b_nkr_recurrence(n(a)?, k(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "b-inclusion-exclusion",
        params: &[N, K, R],
        about: "published inclusion-exclusion sum for B(n,k,r), evaluated as printed",
        run: |a, _| Ok(literal::b_nkr_inclusion_exclusion(n(a)?, k(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "mixed-multinomial",
        params: &[N, Cells],
        about: "n distinct balls into a cell spec, no empty cell, by the multinomial sum",
        run: |a, _| Ok(mixed::mixed_distinct_balls_multinomial(n(a)?, &cells(a)?).into()),
    },
    Operation {
        name: "mixed-empty",
        params: &[N, Cells],
        about: "n distinct balls into a cell spec, empties allowed",
        run: |a, _| Ok(mixed::mixed_distinct_balls_empty(n(a)?, &cells(a)?).into()),
    },
    Operation {
        name: "mixed-signsum",
        params: &[N, Cells],
        about: "published alternating sum over sub-specs, evaluated as printed",
        run: |a, _| Ok(literal::mixed_distinct_balls_signsum(n(a)?, &cells(a)?).into()),
    },
    Operation {
        name: "mixed-ball-removal",
        params: &[N, Cells],
        about: "n distinct balls into a cell spec, no empty cell, by ball-removal recurrence",
        run: |a, _| Ok(mixed::mixed_ball_removal_recurrence(n(a)?, &cells(a)?).into()),
    },
    Operation {
        name: "product-formula",
        params: &[Balls, K],
        about: "ball multiset into k labeled cells, empties allowed",
        run: |a, _| Ok(mixed::product_formula_labeled_cells(&balls(a)?, k(a)?).into()),
    },
    Operation {
        name: "surjective-formula",
        params: &[Balls, K],
        about: "ball multiset into k labeled cells, no empty cell",
        run: |a, _| Ok(mixed::surjective_formula_labeled_cells(&balls(a)?, k(a)?).into()),
    },
    Operation {
        name: "rstirling",
        params: &[N, K, R],
        about: "r-Stirling number {n k}_r",
        run: |a, _| Ok(mixed::r_stirling2(n(a)?, k(a)?, r(a)?).into()),
    },
    Operation {
        name: "rstirling-rec-ii",
        params: &[N, K, R],
        about: "k {n-1 k}_{r-1} + {n-1 k-1}_r",
        run: |a, _| Ok(literal::r_stirling_rec_ii(n(a)?, k(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rstirling-rec-iii",
        params: &[N, K, R],
        about: "{n k}_{r-1} - (r-1) {n-1 k}_{r-1}",
        run: |a, _| Ok(literal::r_stirling_rec_iii(n(a)?, k(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rstirling-via-b",
        params: &[N, K, R],
        about: "published r-Stirling sum over mixed counts, evaluated as printed",
        run: |a, _| Ok(literal::r_stirling_via_b(n(a)?, k(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rstirling-corollary",
        params: &[N, K, R],
        about: "published three-term r-Stirling recurrence, evaluated as printed",
        run: |a, _| Ok(literal::r_stirling_corollary_recurrence(n(a)?, k(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rbell",
        params: &[N, R],
        about: "r-Bell number: sum over k of {n+r k+r}_r (requires r <= n)",
        run: |a, _| Ok(mixed::r_bell(n(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rbell-direct",
        params: &[N, R],
        about: "partitions of {1..n} with 1..r in distinct blocks (requires r <= n)",
        run: |a, _| Ok(mixed::r_bell_direct(n(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rbell-polynomial",
        params: &[N, R, X],
        about: "r-Bell polynomial sum_k {n+r k+r}_r x^k",
        run: |a, _| Ok(mixed::r_bell_polynomial(n(a)?, r(a)?, x_nonneg(a)?).into()),
    },
    Operation {
        name: "rbell-theorem-sum",
        params: &[N, R],
        about: "published r-Bell double sum, evaluated as printed",
        run: |a, _| Ok(literal::r_bell_theorem_sum(n(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rmixed-stirling",
        params: &[N, Cells, R],
        about: "n distinct balls, 1..r in distinct cells, no empty cell",
        run: |a, _| Ok(mixed::r_mixed_stirling(n(a)?, &cells(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rmixed-stirling-theorem",
        params: &[N, K, T, R],
        about: "published r-mixed Stirling sum for cells (t,1,..,1), evaluated as printed",
        run: |a, _| Ok(literal::r_mixed_stirling_theorem(n(a)?, k(a)?, t(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rmixed-stirling-composition",
        params: &[N, Cells, R],
        about: "published composition-weighted r-mixed Stirling formula, evaluated as printed",
        run: |a, _| Ok(literal::r_mixed_stirling_composition(n(a)?, &cells(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rmixed-bell",
        params: &[N, Cells, R],
        about: "n distinct balls, 1..r in distinct cells, empties allowed",
        run: |a, _| Ok(mixed::r_mixed_bell(n(a)?, &cells(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rmixed-bell-theorem",
        params: &[N, K, T, R],
        about: "published r-mixed Bell sum for cells (t,1,..,1), evaluated as printed",
        run: |a, _| Ok(literal::r_mixed_bell_theorem(n(a)?, k(a)?, t(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "rmixed-bell-multinomial",
        params: &[N, Cells, R],
        about: "published composition-weighted r-mixed Bell formula, evaluated as printed",
        run: |a, _| Ok(literal::r_mixed_bell_multinomial(n(a)?, &cells(a)?, r(a)?)?.into()),
    },
    Operation {
        name: "factorize",
        params: &[M],
        about: "prime factorization of m",
        run: |a, _| Ok(Outcome::Text(factor::factorize(m(a)?)?.to_string())),
    },
    Operation {
        name: "ordered-factorizations",
        params: &[M, K, NoUnits],
        about: "ordered factorizations of m into k factors (units allowed unless --no-units)",
        run: |a, _| {
            let (m, k) = (m(a)?, k(a)?);
            let v = if a.no_units {
                factor::ordered_factorizations_no_units(m, k)?
            } else {
                factor::ordered_factorizations_with_units(m, k)?
            };
            Ok(v.into())
        },
    },
    Operation {
        name: "total-ordered-factorizations",
        params: &[M],
        about: "ordered factorizations of m into factors > 1, any number of factors",
        run: |a, _| Ok(factor::total_ordered_factorizations(m(a)?)?.into()),
    },
    Operation {
        name: "unordered-factorizations",
        params: &[M],
        about: "multiplicative partitions of m",
        run: |a, _| Ok(factor::unordered_multiplicative_partitions(m(a)?)?.into()),
    },
];

pub fn operation_names() -> Vec<&'static str> {
    OPERATIONS.iter().map(|op| op.name).collect()
}

fn list(format: Format) -> String {
    match format {
        Format::Text => {
            let width = OPERATIONS.iter().map(|op| op.name.len()).max().unwrap_or(0);
            let mut s = String::new();
            for op in OPERATIONS {
                let flags: Vec<String> = op.params.iter().map(|p| format!("--{}", p.flag())).collect();
                let _ = writeln!(s, "{:<width$}  {}  [{}]", op.name, op.about, flags.join(" "));
            }
            s
        }
        Format::Json => {
            let ops: Vec<Value> = OPERATIONS
                .iter()
                .map(|op| {
                    json!({
                        "name": op.name,
                        "about": op.about,
                        "params": op.params.iter().map(|p| p.flag()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            format!("{}\n", Value::Array(ops))
        }
    }
}

fn echo(op: &Operation, a: &ComputeArgs) -> Vec<(&'static str, Value)> {
    let list = |v: &Option<Vec<usize>>| v.as_ref().map(|v| json!(v));
    op.params
        .iter()
        .filter_map(|p| {
            let v = match p {
                N => a.n.map(|v| json!(v)),
                K => a.k.map(|v| json!(v)),
                R => a.r.map(|v| json!(v)),
                T => a.t.map(|v| json!(v)),
                X => a.x.map(|v| json!(v)),
                M => a.m.map(|v| json!(v)),
                Balls => list(&a.balls),
                Cells => list(&a.cells),
                Parts => list(&a.parts),
                AllowEmpty => Some(json!(a.allow_empty)),
                NoUnits => Some(json!(a.no_units)),
            };
            v.map(|v| (p.flag(), v))
        })
        .collect()
}

fn render_arg(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
            format!("({})", parts.join(","))
        }
        other => other.to_string(),
    }
}

/// Runs `compute`; the name `list` prints the registry.
pub(super) fn compute(a: &ComputeArgs, guard: &SizeGuard, format: Format) -> Result<String> {
    if a.name == "list" {
        return Ok(list(format));
    }
    let Some(op) = OPERATIONS.iter().find(|op| op.name == a.name) else {
        return invalid(format!("unknown operation `{}` (try `compute list`)", a.name));
    };
    let outcome = (op.run)(a, guard)?;
    let args = echo(op, a);
    Ok(match format {
        Format::Text => {
            let shown: Vec<String> = args.iter().map(|(k, v)| format!("{k}={}", render_arg(v))).collect();
            match outcome {
                Outcome::Int(v) => format!("{}({}) = {v}\n", op.name, shown.join(", ")),
                Outcome::Text(s) if s.ends_with('\n') => s,
                Outcome::Text(s) => format!("{}({}) = {s}\n", op.name, shown.join(", ")),
            }
        }
        Format::Json => {
            let mut arguments = Map::new();
            for (k, v) in args {
                arguments.insert(k.to_string(), v);
            }
            let result = match outcome {
                Outcome::Int(v) => Value::String(v.to_string()),
                Outcome::Text(s) => Value::String(s),
            };
            let value = json!({ "operation": op.name, "arguments": arguments, "result": result });
            format!("{value}\n")
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(name: &str) -> ComputeArgs {
        ComputeArgs {
            name: name.to_string(),
            ..Default::default()
        }
    }

    #[test]
    fn names_are_unique_and_kebab() {
        let mut names = operation_names();
        names.sort();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len());
        assert!(names.iter().all(|n| n
            .chars()
            .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-')));
    }

    #[test]
    fn every_operation_rejects_missing_arguments() {
        for op in OPERATIONS {
            assert!((op.run)(&args(op.name), &SizeGuard::default()).is_err(), "{}", op.name);
        }
    }

    #[test]
    fn text_and_json_rendering() {
        let mut a = args("b0");
        a.n = Some(2);
        a.k = Some(2);
        a.r = Some(2);
        let g = SizeGuard::default();
        assert_eq!(compute(&a, &g, Format::Text).unwrap(), "b0(n=2, k=2, r=2) = 5\n");
        assert_eq!(
            compute(&a, &g, Format::Json).unwrap(),
            "{\"arguments\":{\"k\":2,\"n\":2,\"r\":2},\"operation\":\"b0\",\"result\":\"5\"}\n"
        );
        let mut c = args("mixed-multinomial");
        c.n = Some(4);
        c.cells = Some(vec![2, 1]);
        assert_eq!(
            compute(&c, &g, Format::Text).unwrap(),
            "mixed-multinomial(n=4, cells=(2,1)) = 18\n"
        );
    }
}
