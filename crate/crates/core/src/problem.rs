use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Multiset of balls: entry `i` is how many indistinguishable balls carry
/// label `i + 1`. Every multiplicity is at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BallSpec(Vec<usize>);

impl BallSpec {
    pub fn new(multiplicities: Vec<usize>) -> Result<Self> {
        if multiplicities.contains(&0) {
            return invalid(format!("ball multiplicities must be positive: {multiplicities:?}"));
        }
        Ok(BallSpec(multiplicities))
    }

    /// `n` pairwise distinct balls.
    pub fn distinct(n: usize) -> Self {
        BallSpec(vec![1; n])
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.0
    }

    /// Number of distinct labels.
    pub fn labels(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn all_distinct(&self) -> bool {
        self.0.iter().all(|&b| b == 1)
    }
}

/// Groups of cells: entry `i` is the number of mutually interchangeable cells
/// in group `i`. Cells in different groups are distinguishable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellSpec(Vec<usize>);

impl CellSpec {
    pub fn new(group_sizes: Vec<usize>) -> Result<Self> {
        if group_sizes.contains(&0) {
            return invalid(format!("cell group sizes must be positive: {group_sizes:?}"));
        }
        Ok(CellSpec(group_sizes))
    }

    /// Builds a spec from sizes that may contain zeros, dropping empty groups.
    pub fn from_sizes_dropping_zeros(sizes: &[usize]) -> Self {
        CellSpec(sizes.iter().copied().filter(|&c| c > 0).collect())
    }

    /// `k` distinguishable cells.
    pub fn labeled(k: usize) -> Self {
        CellSpec(vec![1; k])
    }

    /// `r` interchangeable cells followed by `k - 1` distinguishable ones.
    /// Either part may be absent.
    pub fn mixed(r: usize, labeled: usize) -> Self {
        let mut sizes = Vec::with_capacity(labeled + 1);
        if r > 0 {
            sizes.push(r);
        }
        sizes.extend(std::iter::repeat_n(1, labeled));
        CellSpec(sizes)
    }

    pub fn group_sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn groups(&self) -> usize {
        self.0.len()
    }

    pub fn total_cells(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn all_labeled(&self) -> bool {
        self.0.iter().all(|&c| c == 1)
    }

    /// All sub-specs `(j1, .., jk)` with `0 <= ji <= ci`, in odometer order,
    /// returned with zero groups kept so callers can see the index vector.
    pub fn sub_spec_indices(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &c in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=c).map(move |j| {
                        let mut v = prefix.clone();
                        v.push(j);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for BallSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Display for CellSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// A complete counting question: which balls, which cells, whether cells may
/// stay empty, and how many leading labels must sit in pairwise distinct
/// cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionProblem {
    pub balls: BallSpec,
    pub cells: CellSpec,
    pub allow_empty: bool,
    pub distinct_prefix: usize,
}

impl PartitionProblem {
    pub fn new(balls: BallSpec, cells: CellSpec, allow_empty: bool, distinct_prefix: usize) -> Result<Self> {
        let p = PartitionProblem {
            balls,
            cells,
            allow_empty,
            distinct_prefix,
        };
        p.validate()?;
        Ok(p)
    }

    /// Checks the prefix constraint: at most `n` prefix labels, each a single
    /// ball.
    pub fn validate(&self) -> Result<()> {
        let r = self.distinct_prefix;
        if r > self.balls.labels() {
            return invalid(format!(
                "distinct prefix {r} exceeds the {} ball labels",
                self.balls.labels()
            ));
        }
        if self.balls.multiplicities()[..r].iter().any(|&b| b != 1) {
            return invalid(format!(
                "distinct prefix {r} requires balls 1..={r} to have multiplicity 1, got {}",
                self.balls
            ));
        }
        Ok(())
    }

    pub fn non_empty(balls: BallSpec, cells: CellSpec) -> Self {
        PartitionProblem {
            balls,
            cells,
            allow_empty: false,
            distinct_prefix: 0,
        }
    }

    pub fn empty_allowed(balls: BallSpec, cells: CellSpec) -> Self {
        PartitionProblem {
            balls,
            cells,
            allow_empty: true,
            distinct_prefix: 0,
        }
    }

    pub fn with_prefix(mut self, r: usize) -> Result<Self> {
        self.distinct_prefix = r;
        self.validate()?;
        Ok(self)
    }
}

impl fmt::Display for PartitionProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "balls={} cells={} {} r={}",
            self.balls,
            self.cells,
            if self.allow_empty { "empty-ok" } else { "non-empty" },
            self.distinct_prefix
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_entries() {
        assert!(BallSpec::new(vec![1, 0]).is_err());
        assert!(CellSpec::new(vec![0]).is_err());
        assert!(BallSpec::new(vec![]).is_ok());
    }

    #[test]
    fn prefix_rules() {
        let cells = CellSpec::new(vec![2]).unwrap();
        let ok = PartitionProblem::new(BallSpec::new(vec![1, 1, 3]).unwrap(), cells.clone(), false, 2);
        assert!(ok.is_ok());
        let multi = PartitionProblem::new(BallSpec::new(vec![2, 1]).unwrap(), cells.clone(), false, 1);
        assert!(matches!(multi, Err(crate::Error::InvalidArgument(_))));
        let long = PartitionProblem::new(BallSpec::distinct(2), cells, false, 3);
        assert!(long.is_err());
    }

    #[test]
    fn sub_specs_cover_box() {
        let cells = CellSpec::new(vec![2, 1]).unwrap();
        let subs = cells.sub_spec_indices();
        assert_eq!(subs.len(), 6);
        assert_eq!(subs[0], vec![0, 0]);
        assert_eq!(subs[5], vec![2, 1]);
        assert_eq!(CellSpec::from_sizes_dropping_zeros(&[0, 2, 0]).group_sizes(), &[2]);
    }

    #[test]
    fn mixed_layout() {
        assert_eq!(CellSpec::mixed(2, 1).group_sizes(), &[2, 1]);
        assert_eq!(CellSpec::mixed(0, 2).group_sizes(), &[1, 1]);
        assert_eq!(CellSpec::mixed(3, 0).group_sizes(), &[3]);
    }
}
