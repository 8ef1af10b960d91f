//! Brute-force ground truth for every counting function in the crate.
//!
//! Balls are laid out as a label-sorted sequence and assigned to cells one at
//! a time. Each complete assignment is reduced to a [`CanonicalConfiguration`]
//! (sorted label list per cell, sorted cell list per group) and inserted into
//! a set; the answer is the size of that set.
//!
//! The default [`EnumerationMode::Pruned`] search skips assignments that can
//! only reproduce an already reachable configuration: a ball may open at most
//! the first still-empty cell of each group, and copies of the same label are
//! placed in nondecreasing cell order. [`EnumerationMode::Exhaustive`] walks all
//! `cells^balls` assignments and applies the constraints after the fact;
//! [`cross_check`] compares the two on a fixed micro-grid.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::{BallSpec, CellSpec, PartitionProblem};
use crate::Count;

/// Limits on the instances the enumerator will accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeGuard {
    pub max_balls: usize,
    pub max_total_cells: usize,
    pub max_states: u64,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_balls: 10,
            max_total_cells: 6,
            max_states: 10_000_000,
        }
    }
}

impl fmt::Display for SizeGuard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "max_balls={} max_total_cells={} max_states={}",
            self.max_balls, self.max_total_cells, self.max_states
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnumerationMode {
    #[default]
    Pruned,
    Exhaustive,
}

/// Normal form of one way to distribute the balls.
///
/// `groups[g]` holds exactly `c_g` cells; each cell is a sorted list of ball
/// labels (1-based) and the cells of a group are sorted by length, then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalConfiguration {
    pub groups: Vec<Vec<Vec<usize>>>,
}

impl CanonicalConfiguration {
    fn from_assignment(cells: &[Vec<usize>], spec: &CellSpec) -> Self {
        let mut groups = Vec::with_capacity(spec.groups());
        let mut start = 0;
        for &size in spec.group_sizes() {
            let mut group: Vec<Vec<usize>> = cells[start..start + size]
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.sort_unstable();
                    c
                })
                .collect();
            group.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            groups.push(group);
            start += size;
        }
        CanonicalConfiguration { groups }
    }

    /// Groups joined by `|`, cells by `;`, labels by `,`; an empty cell is
    /// the empty string.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CanonicalConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (gi, group) in self.groups.iter().enumerate() {
            if gi > 0 {
                f.write_str("|")?;
            }
            for (ci, cell) in group.iter().enumerate() {
                if ci > 0 {
                    f.write_str(";")?;
                }
                for (li, label) in cell.iter().enumerate() {
                    if li > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{label}")?;
                }
            }
        }
        Ok(())
    }
}

/// Upper bound on search-tree leaves for the given mode, saturating.
pub fn projected_states(problem: &PartitionProblem, mode: EnumerationMode) -> u64 {
    let balls = problem.balls.total() as u64;
    let cells = problem.cells.total_cells() as u64;
    let groups = problem.cells.groups() as u64;
    let mut states: u64 = 1;
    for i in 0..balls {
        let choices = match mode {
            EnumerationMode::Exhaustive => cells,
            EnumerationMode::Pruned => cells.min(i + groups),
        };
        states = states.saturating_mul(choices.max(1));
    }
    states
}

fn check_guard(problem: &PartitionProblem, guard: &SizeGuard, mode: EnumerationMode) -> Result<()> {
    problem.validate()?;
    let balls = problem.balls.total();
    let cells = problem.cells.total_cells();
    if balls > guard.max_balls {
        return Err(Error::SizeGuardExceeded(format!(
            "{balls} balls > max_balls {}",
            guard.max_balls
        )));
    }
    if cells > guard.max_total_cells {
        return Err(Error::SizeGuardExceeded(format!(
            "{cells} cells > max_total_cells {}",
            guard.max_total_cells
        )));
    }
    let states = projected_states(problem, mode);
    if states > guard.max_states {
        return Err(Error::SizeGuardExceeded(format!(
            "{states} projected states > max_states {}",
            guard.max_states
        )));
    }
    Ok(())
}

struct Search<'a> {
    problem: &'a PartitionProblem,
    sequence: Vec<usize>,
    group_of: Vec<usize>,
    group_start: Vec<usize>,
    cells: Vec<Vec<usize>>,
    opened: Vec<usize>,
    placed: Vec<usize>,
    seen: HashSet<CanonicalConfiguration>,
}

impl<'a> Search<'a> {
    fn new(problem: &'a PartitionProblem) -> Self {
        let sequence: Vec<usize> = problem
            .balls
            .multiplicities()
            .iter()
            .enumerate()
            .flat_map(|(i, &b)| std::iter::repeat_n(i + 1, b))
            .collect();
        let sizes = problem.cells.group_sizes();
        let mut group_of = Vec::new();
        let mut group_start = Vec::new();
        for (g, &c) in sizes.iter().enumerate() {
            group_start.push(group_of.len());
            group_of.extend(std::iter::repeat_n(g, c));
        }
        let total = group_of.len();
        Search {
            problem,
            placed: Vec::with_capacity(sequence.len()),
            sequence,
            group_of,
            group_start,
            cells: vec![Vec::new(); total],
            opened: vec![0; sizes.len()],
            seen: HashSet::new(),
        }
    }

    fn record(&mut self) {
        let conf = CanonicalConfiguration::from_assignment(&self.cells, &self.problem.cells);
        self.seen.insert(conf);
    }

    fn pruned(&mut self, pos: usize) {
        let empties: usize = self
            .problem
            .cells
            .group_sizes()
            .iter()
            .zip(&self.opened)
            .map(|(c, o)| c - o)
            .sum();
        if !self.problem.allow_empty && self.sequence.len() - pos < empties {
            return;
        }
        if pos == self.sequence.len() {
            self.record();
            return;
        }
        let label = self.sequence[pos];
        let in_prefix = label <= self.problem.distinct_prefix;
        let min_index = match pos.checked_sub(1) {
            Some(prev) if self.sequence[prev] == label => self.placed[prev],
            _ => 0,
        };
        for g in 0..self.opened.len() {
            let start = self.group_start[g];
            let size = self.problem.cells.group_sizes()[g];
            let opened = self.opened[g];
            // prefix balls come first and are pairwise distinct, so the only
            // cells free of prefix balls are the still-empty ones
            let reuse = if in_prefix { start..start } else { start..start + opened };
            for idx in reuse.filter(|&i| i >= min_index) {
                self.place(pos, idx, false);
            }
            if opened < size && start + opened >= min_index {
                self.place(pos, start + opened, true);
            }
        }
    }

    fn place(&mut self, pos: usize, idx: usize, opens: bool) {
        let g = self.group_of[idx];
        self.cells[idx].push(self.sequence[pos]);
        self.placed.push(idx);
        if opens {
            self.opened[g] += 1;
        }
        self.pruned(pos + 1);
        if opens {
            self.opened[g] -= 1;
        }
        self.placed.pop();
        self.cells[idx].pop();
    }

    fn exhaustive(&mut self, pos: usize) {
        if pos == self.sequence.len() {
            if !self.problem.allow_empty && self.cells.iter().any(Vec::is_empty) {
                return;
            }
            let r = self.problem.distinct_prefix;
            let prefix_cells: HashSet<usize> = self.placed[..r].iter().copied().collect();
            if prefix_cells.len() != r {
                return;
            }
            self.record();
            return;
        }
        for idx in 0..self.cells.len() {
            self.cells[idx].push(self.sequence[pos]);
            self.placed.push(idx);
            self.exhaustive(pos + 1);
            self.placed.pop();
            self.cells[idx].pop();
        }
    }

    fn run(mut self, mode: EnumerationMode) -> HashSet<CanonicalConfiguration> {
        if self.cells.is_empty() {
            // no cells: only the empty ball multiset fits
            if self.sequence.is_empty() {
                self.record();
            }
            return self.seen;
        }
        match mode {
            EnumerationMode::Pruned => self.pruned(0),
            EnumerationMode::Exhaustive => self.exhaustive(0),
        }
        self.seen
    }
}

fn configurations(
    problem: &PartitionProblem,
    guard: &SizeGuard,
    mode: EnumerationMode,
) -> Result<HashSet<CanonicalConfiguration>> {
    check_guard(problem, guard, mode)?;
    Ok(Search::new(problem).run(mode))
}

/// Number of distinct configurations of `problem`.
pub fn count(problem: &PartitionProblem, guard: &SizeGuard) -> Result<Count> {
    count_with_mode(problem, guard, EnumerationMode::Pruned)
}

pub fn count_with_mode(problem: &PartitionProblem, guard: &SizeGuard, mode: EnumerationMode) -> Result<Count> {
    Ok(Count::from(configurations(problem, guard, mode)?.len()))
}

/// All configurations, ordered by their serialized form.
pub fn enumerate(problem: &PartitionProblem, guard: &SizeGuard) -> Result<Vec<CanonicalConfiguration>> {
    let mut keyed: Vec<(String, CanonicalConfiguration)> = configurations(problem, guard, EnumerationMode::Pruned)?
        .into_iter()
        .map(|c| (c.serialize(), c))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, c)| c).collect())
}

/// A disagreement between the pruned and exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckMismatch {
    pub problem: PartitionProblem,
    pub pruned: Count,
    pub exhaustive: Count,
}

/// The fixed micro-grid used to validate the pruned search: every ball
/// multiset with at most 4 balls, every cell spec with at most 3 cells, both
/// emptiness flags and every admissible prefix.
pub fn micro_grid() -> Vec<PartitionProblem> {
    let ball_specs = compositions_up_to(4);
    let cell_specs = compositions_up_to(3);
    let mut out = Vec::new();
    for b in &ball_specs {
        let balls = BallSpec::new(b.clone()).expect("positive parts");
        let max_prefix = b.iter().take_while(|&&x| x == 1).count();
        for c in &cell_specs {
            let cells = CellSpec::new(c.clone()).expect("positive parts");
            for allow_empty in [false, true] {
                for r in 0..=max_prefix {
                    out.push(PartitionProblem {
                        balls: balls.clone(),
                        cells: cells.clone(),
                        allow_empty,
                        distinct_prefix: r,
                    });
                }
            }
        }
    }
    out
}

/// Runs both search modes over [`micro_grid`] and returns every mismatch.
pub fn cross_check() -> Result<Vec<CrossCheckMismatch>> {
    let guard = SizeGuard::default();
    let mut mismatches = Vec::new();
    for problem in micro_grid() {
        let pruned_set = configurations(&problem, &guard, EnumerationMode::Pruned)?;
        let full_set = configurations(&problem, &guard, EnumerationMode::Exhaustive)?;
        if pruned_set != full_set {
            mismatches.push(CrossCheckMismatch {
                pruned: Count::from(pruned_set.len()),
                exhaustive: Count::from(full_set.len()),
                problem,
            });
        }
    }
    Ok(mismatches)
}

/// All compositions (ordered lists of positive parts) with sum `0..=max`.
pub(crate) fn compositions_up_to(max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), 0usize)];
    while let Some((prefix, sum)) = frontier.pop() {
        for part in 1..=max - sum {
            let mut next = prefix.clone();
            next.push(part);
            out.push(next.clone());
            frontier.push((next, sum + part));
        }
    }
    out.sort_by(|a, b| a.iter().sum::<usize>().cmp(&b.iter().sum()).then_with(|| a.cmp(b)));
    out
}
