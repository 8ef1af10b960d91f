use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::problem::{BallSpec, CellSpec};

/// Inclusive integer range; empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub lo: u64,
    pub hi: u64,
}

impl Span {
    pub const fn new(lo: u64, hi: u64) -> Self {
        Span { lo, hi }
    }

    pub fn contains(&self, v: u64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }

    /// Values as `usize`, restricted to `>= floor`.
    pub fn from(&self, floor: usize) -> impl Iterator<Item = usize> {
        (self.lo.max(floor as u64)..=self.hi).map(|v| v as usize)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Parameter ranges of an audit run.
///
/// `n` is the number of balls (or set size), `k` the number of cell groups
/// (or block / factor count), `c` the size of a cell group, `r` the distinct
/// prefix length and `m` the integer being factorized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub n: Span,
    pub k: Span,
    pub c: Span,
    pub r: Span,
    pub m: Span,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            n: Span::new(0, 6),
            k: Span::new(1, 3),
            c: Span::new(1, 3),
            r: Span::new(0, 3),
            m: Span::new(2, 200),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={} c={} r={} m={}", self.n, self.k, self.c, self.r, self.m)
    }
}

impl Grid {
    /// Applies overrides such as `n=0..5,k=1..3,r=2` on top of `self`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let Some((key, value)) = item.split_once('=') else {
                return invalid(format!("grid entry `{item}` is not key=range"));
            };
            let span = parse_span(value.trim())?;
            match key.trim() {
                "n" => self.n = span,
                "k" => self.k = span,
                "c" => self.c = span,
                "r" => self.r = span,
                "m" => self.m = span,
                other => return invalid(format!("unknown grid key `{other}` (expected n, k, c, r, m)")),
            }
        }
        Ok(self)
    }

    /// True when some range is empty, which makes the whole grid empty.
    pub fn is_empty(&self) -> bool {
        [self.n, self.k, self.c, self.r, self.m].iter().any(|s| s.lo > s.hi)
    }

    /// Cell specs with a group count in `k` and every group size in `c`.
    pub(crate) fn cell_specs(&self) -> Vec<CellSpec> {
        let sizes: Vec<usize> = self.c.from(1).collect();
        let mut out = Vec::new();
        for groups in self.k.from(1) {
            let mut level: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..groups {
                level = level
                    .into_iter()
                    .flat_map(|prefix| {
                        sizes.iter().map(move |&c| {
                            let mut v = prefix.clone();
                            v.push(c);
                            v
                        })
                    })
                    .collect();
            }
            out.extend(level.into_iter().map(|v| CellSpec::new(v).expect("positive sizes")));
        }
        out
    }

    /// `n` distinct balls for every `n` in range, then multisets with a label
    /// count in `k`, multiplicities in `c` (at least one repeated label) and a
    /// total in `n`.
    pub(crate) fn ball_specs(&self, min_total: usize) -> Vec<BallSpec> {
        let mut out: Vec<BallSpec> = self.n.from(min_total).map(BallSpec::distinct).collect();
        let multiplicities: Vec<usize> = self.c.from(1).collect();
        for labels in self.k.from(1) {
            let mut level: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..labels {
                level = level
                    .into_iter()
                    .flat_map(|prefix| {
                        multiplicities.iter().map(move |&b| {
                            let mut v = prefix.clone();
                            v.push(b);
                            v
                        })
                    })
                    .collect();
            }
            for v in level {
                let total: usize = v.iter().sum();
                if v.iter().any(|&b| b > 1) && total >= min_total && self.n.contains(total as u64) {
                    out.push(BallSpec::new(v).expect("positive multiplicities"));
                }
            }
        }
        out
    }
}

fn parse_span(value: &str) -> Result<Span> {
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| crate::Error::InvalidArgument(format!("`{s}` is not a nonnegative integer")))
    };
    match value.split_once("..") {
        Some((lo, hi)) => Ok(Span::new(parse(lo)?, parse(hi.trim_start_matches('='))?)),
        None => {
            let v = parse(value)?;
            Ok(Span::new(v, v))
        }
    }
}

/// One input tuple of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    /// A set size alone.
    N { n: usize },
    /// Set size and evaluation point.
    Nx { n: usize, x: usize },
    /// Set size, evaluation point and prefix length.
    Nxr { n: usize, x: usize, r: usize },
    /// Set size and prefix length.
    Nr { n: usize, r: usize },
    /// `(n, k, r)` triples of the mixed Stirling and r-Stirling families.
    Nkr { n: usize, k: usize, r: usize },
    /// Cells `(t, 1, .., 1)` with `k` groups.
    Nktr { n: usize, k: usize, t: usize, r: usize },
    /// `n` distinct balls into a cell spec.
    Cells { n: usize, cells: CellSpec },
    /// `n` distinct balls into a cell spec with a distinct prefix.
    CellsR { n: usize, cells: CellSpec, r: usize },
    /// A ball multiset into a cell spec.
    Multiset { balls: BallSpec, cells: CellSpec },
    /// A ball multiset into `k` distinguishable cells.
    Labeled { balls: BallSpec, k: usize },
    /// An integer and a factor count.
    Mk { m: u64, k: usize },
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::N { n } => write!(f, "n={n}"),
            Point::Nx { n, x } => write!(f, "n={n} x={x}"),
            Point::Nxr { n, x, r } => write!(f, "n={n} x={x} r={r}"),
            Point::Nr { n, r } => write!(f, "n={n} r={r}"),
            Point::Nkr { n, k, r } => write!(f, "n={n} k={k} r={r}"),
            Point::Nktr { n, k, t, r } => write!(f, "n={n} k={k} t={t} r={r}"),
            Point::Cells { n, cells } => write!(f, "n={n} cells={cells}"),
            Point::CellsR { n, cells, r } => write!(f, "n={n} cells={cells} r={r}"),
            Point::Multiset { balls, cells } => write!(f, "balls={balls} cells={cells}"),
            Point::Labeled { balls, k } => write!(f, "balls={balls} k={k}"),
            Point::Mk { m, k } => write!(f, "m={m} k={k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let g = Grid::default().with_overrides("n=0..5, k=1..3,r=2").unwrap();
        assert_eq!(g.n, Span::new(0, 5));
        assert_eq!(g.r, Span::new(2, 2));
        assert_eq!(g.m, Grid::default().m);
        assert!(Grid::default().with_overrides("q=1..2").is_err());
        assert!(Grid::default().with_overrides("n=a..2").is_err());
        assert!(Grid::default().with_overrides("n").is_err());
    }

    #[test]
    fn empty_span_iterates_nothing() {
        let s = Span::new(5, 4);
        assert_eq!(s.iter().count(), 0);
        assert!(!s.contains(4));
    }

    #[test]
    fn spec_generators() {
        let g = Grid::default();
        assert_eq!(g.cell_specs().len(), 3 + 9 + 27);
        let balls = g.ball_specs(1);
        assert!(balls.contains(&BallSpec::distinct(6)));
        assert!(balls.contains(&BallSpec::new(vec![2, 1]).unwrap()));
        assert!(!balls.contains(&BallSpec::distinct(0)));
        assert!(balls.iter().all(|b| b.total() <= 6));
    }
}
