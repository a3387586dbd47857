//! Search strategies for completing puzzle grids, registered by name.
//!
//! Every strategy returns completions in a fixed order, stops after `limit`
//! of them, and only returns grids on which the whole rule set holds.

mod cells;
mod rows;

pub use cells::CellSearch;
pub use rows::{closed_walks, RowSearch};

use std::sync::LazyLock;

use crate::error::{Error, Result};
use crate::puzzle::{validate, PuzzleGrid};
use crate::rules::{RuleId, RuleSet};

pub trait Solver: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Up to `limit` completions of `grid` satisfying every rule in `rules`.
    fn solve(&self, grid: &PuzzleGrid, rules: &RuleSet, limit: usize) -> Vec<PuzzleGrid>;
}

pub const DEFAULT_SOLVER: &str = "cells";

static SOLVERS: LazyLock<Vec<Box<dyn Solver>>> =
    LazyLock::new(|| vec![Box::new(CellSearch), Box::new(RowSearch)]);

pub fn solvers() -> impl Iterator<Item = &'static dyn Solver> {
    SOLVERS.iter().map(|b| b.as_ref())
}

pub fn solver(name: &str) -> Result<&'static dyn Solver> {
    solvers()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::UnknownSolver(name.to_string()))
}

/// Solves with the default strategy.
pub fn solve(grid: &PuzzleGrid, rules: &RuleSet, limit: usize) -> Vec<PuzzleGrid> {
    solver(DEFAULT_SOLVER)
        .expect("default solver registered")
        .solve(grid, rules, limit)
}

/// Rules that the strategies do not propagate and must re-check on partial
/// states.
pub(crate) fn lookahead_rules(rules: &RuleSet) -> Vec<RuleId> {
    rules
        .ids()
        .filter(|id| matches!(id, RuleId::ComplementPairs | RuleId::AlternatingRows))
        .collect()
}

/// Cheap rejection shared by all strategies.
pub(crate) fn hopeless(grid: &PuzzleGrid, rules: &RuleSet, limit: usize) -> bool {
    limit == 0 || !validate(grid, rules).is_empty()
}

/// Bitmask of labels `v` in `0..=c` reachable from label `a` in exactly `d`
/// unit steps without leaving `0..=c`: `|v - a| <= d` and `v - a ≡ d (mod 2)`.
pub(crate) fn reach_table(c: u32, max_dist: usize) -> Vec<Vec<u64>> {
    (0..=c)
        .map(|a| {
            (0..=max_dist)
                .map(|d| {
                    (0..=c)
                        .filter(|&v| {
                            let diff = v.abs_diff(a) as usize;
                            diff <= d && (d - diff).is_multiple_of(2)
                        })
                        .fold(0u64, |m, v| m | 1 << v)
                })
                .collect()
        })
        .collect()
}
