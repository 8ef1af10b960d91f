//! Tabulation for `mixstir table`.

use serde_json::{json, Value};

use super::Format;
use crate::audit::Grid;
use crate::error::{invalid, Result};
use crate::{mixed, stirling, Count};

pub const TABLES: &[&str] = &[
    "stirling2",
    "stirling2-cumulative",
    "binomial",
    "bell",
    "rstirling",
    "rbell",
    "b",
    "b0",
];

struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Option<Count>>>,
    keys: Vec<usize>,
}

fn range(spec: &str, what: &str) -> Result<(usize, usize)> {
    let grid = Grid::default().with_overrides(&format!("n={spec}"))?;
    if grid.n.lo > grid.n.hi {
        return invalid(format!("empty {what} range `{spec}`"));
    }
    Ok((grid.n.lo as usize, grid.n.hi as usize))
}

fn need_r(name: &str, r: Option<usize>) -> Result<usize> {
    r.ok_or_else(|| crate::Error::InvalidArgument(format!("table `{name}` needs --r")))
}

fn build(name: &str, n_spec: &str, k_spec: Option<&str>, r: Option<usize>) -> Result<Table> {
    let (lo, hi) = range(n_spec, "n")?;
    let keys: Vec<usize> = (lo..=hi).collect();
    let triangle = |f: &dyn Fn(usize, usize) -> Count| Table {
        columns: (0..=hi).map(|k| format!("k={k}")).collect(),
        rows: keys.iter().map(|&n| (0..=n).map(|k| Some(f(n, k))).collect()).collect(),
        keys: keys.clone(),
    };
    let table = match name {
        "stirling2" => triangle(&stirling::stirling2),
        "stirling2-cumulative" => triangle(&stirling::stirling2_cumulative),
        "binomial" => triangle(&stirling::binomial),
        "rstirling" => {
            let r = need_r(name, r)?;
            triangle(&|n, k| mixed::r_stirling2(n, k, r))
        }
        "bell" => Table {
            columns: vec!["bell".into()],
            rows: keys.iter().map(|&n| vec![Some(stirling::bell(n))]).collect(),
            keys,
        },
        "rbell" => {
            let r = need_r(name, r)?;
            Table {
                columns: vec![format!("rbell r={r}")],
                rows: keys.iter().map(|&n| vec![mixed::r_bell(n, r).ok()]).collect(),
                keys,
            }
        }
        "b" | "b0" => {
            let r = need_r(name, r)?;
            let (klo, khi) = range(k_spec.unwrap_or("1..4"), "k")?;
            if klo == 0 || r == 0 {
                return invalid(format!("table `{name}` needs k >= 1 and r >= 1"));
            }
            let f = if name == "b" { mixed::b_nkr } else { mixed::b0_nkr };
            let mut rows = Vec::new();
            for &n in &keys {
                let mut row = Vec::new();
                for k in klo..=khi {
                    row.push(Some(f(n, k, r)?));
                }
                rows.push(row);
            }
            Table {
                columns: (klo..=khi).map(|k| format!("k={k}")).collect(),
                rows,
                keys,
            }
        }
        other => {
            return invalid(format!(
                "unknown table `{other}` (expected one of {})",
                TABLES.join(", ")
            ))
        }
    };
    Ok(table)
}

/// Renders a table with one row per `n`. Text output is delimited with
/// `delim`; cells with no value are left blank.
pub(super) fn render(
    name: &str,
    n_spec: &str,
    k_spec: Option<&str>,
    r: Option<usize>,
    delim: &str,
    format: Format,
) -> Result<String> {
    let table = build(name, n_spec, k_spec, r)?;
    let cell = |v: &Option<Count>| v.as_ref().map(|v| v.to_string()).unwrap_or_default();
    Ok(match format {
        Format::Text => {
            let mut out = format!("n{delim}{}\n", table.columns.join(delim));
            for (n, row) in table.keys.iter().zip(&table.rows) {
                let mut line = n.to_string();
                for v in row {
                    line.push_str(delim);
                    line.push_str(&cell(v));
                }
                out.push_str(&line);
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .keys
                .iter()
                .zip(&table.rows)
                .map(|(n, row)| {
                    let values: Vec<Value> = row
                        .iter()
                        .map(|v| v.as_ref().map_or(Value::Null, |v| Value::String(v.to_string())))
                        .collect();
                    json!({ "n": n, "values": values })
                })
                .collect();
            format!("{}\n", json!({ "table": name, "columns": table.columns, "rows": rows }))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_rows() {
        let out = render("stirling2", "0..4", None, None, ",", Format::Text).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "n,k=0,k=1,k=2,k=3,k=4");
        assert_eq!(lines[1], "0,1");
        assert_eq!(lines[5], "4,0,1,7,6,1");
    }

    #[test]
    fn bell_and_rbell() {
        let out = render("bell", "0..5", None, None, ",", Format::Text).unwrap();
        assert!(out.ends_with("5,52\n"));
        let out = render("rbell", "1..3", None, Some(2), ",", Format::Text).unwrap();
        assert_eq!(out.lines().nth(1), Some("1,"));
        assert!(render("rbell", "1..3", None, None, ",", Format::Text).is_err());
    }

    #[test]
    fn unknown_table() {
        assert!(render("lah", "0..3", None, None, ",", Format::Text).is_err());
    }
}
