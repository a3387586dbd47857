use std::collections::HashMap;

use crate::puzzle::PuzzleGrid;
use crate::rules::{registry, CellView, Rule, RuleId, RuleSet};

use super::{hopeless, lookahead_rules, reach_table, Solver};

/// Cell-by-cell backtracking: most constrained empty cell first, fullest row
/// breaking ties, labels in ascending order.
///
/// A cell's candidates are the labels reachable from every filled cell of its
/// row (rule `i`), minus labels whose column quota is used up (rule `ii`).
/// Each column must also keep enough candidate cells for every label it still
/// needs.
pub struct CellSearch;

impl Solver for CellSearch {
    fn name(&self) -> &'static str {
        "cells"
    }

    fn description(&self) -> &'static str {
        "cell-wise backtracking with step-distance and column-quota propagation"
    }

    fn solve(&self, grid: &PuzzleGrid, rules: &RuleSet, limit: usize) -> Vec<PuzzleGrid> {
        if hopeless(grid, rules, limit) {
            return Vec::new();
        }
        let mut search = Search::new(grid, rules, limit);
        search.run();
        search.out
    }
}

struct Search<'a> {
    c: u32,
    rows: usize,
    cols: usize,
    cells: Vec<Option<u32>>,
    col_count: Vec<Vec<u64>>,
    need: Vec<u64>,
    quota: bool,
    complements: bool,
    reach: Vec<Vec<u64>>,
    dist: Vec<Vec<usize>>,
    row_filled: Vec<usize>,
    lookahead: Vec<&'static dyn Rule>,
    rules: &'a RuleSet,
    limit: usize,
    out: Vec<PuzzleGrid>,
}

impl<'a> Search<'a> {
    fn new(grid: &PuzzleGrid, rules: &'a RuleSet, limit: usize) -> Self {
        let (c, rows, cols) = (grid.c(), grid.rows(), grid.cols());
        let mut col_count = vec![vec![0u64; c as usize + 1]; cols];
        let mut row_filled = vec![0usize; rows];
        for (idx, cell) in grid.cells().iter().enumerate() {
            if let Some(v) = *cell {
                col_count[idx % cols][v as usize] += 1;
                row_filled[idx / cols] += 1;
            }
        }
        let dist = (0..cols)
            .map(|j| {
                (0..cols)
                    .map(|k| j.abs_diff(k).min(cols - j.abs_diff(k)))
                    .collect()
            })
            .collect();
        Search {
            c,
            rows,
            cols,
            cells: grid.cells().to_vec(),
            col_count,
            need: (0..=c).map(|n| crate::rules::binomial(c, n)).collect(),
            quota: rules.contains(RuleId::ColumnHistogram),
            complements: rules.contains(RuleId::ComplementPairs),
            reach: reach_table(c, cols / 2),
            dist,
            row_filled,
            lookahead: lookahead_rules(rules)
                .into_iter()
                .map(|id| registry().get(id))
                .collect(),
            rules,
            limit,
            out: Vec::new(),
        }
    }

    fn domain(&self, r: usize, j: usize) -> u64 {
        let mut mask = (1u64 << (self.c + 1)) - 1;
        let row = &self.cells[r * self.cols..(r + 1) * self.cols];
        for (k, cell) in row.iter().enumerate() {
            if let Some(a) = *cell {
                mask &= self.reach[a as usize][self.dist[j][k]];
            }
        }
        if self.quota {
            for v in 0..=self.c as usize {
                if self.col_count[j][v] >= self.need[v] {
                    mask &= !(1 << v);
                }
            }
        }
        mask
    }

    fn assign(&mut self, idx: usize, value: Option<u32>) {
        let (r, j) = (idx / self.cols, idx % self.cols);
        match (self.cells[idx], value) {
            (None, Some(v)) => {
                self.col_count[j][v as usize] += 1;
                self.row_filled[r] += 1;
            }
            (Some(v), None) => {
                self.col_count[j][v as usize] -= 1;
                self.row_filled[r] -= 1;
            }
            _ => unreachable!("assign toggles a cell"),
        }
        self.cells[idx] = value;
    }

    fn view(&self) -> CellView<'_> {
        CellView::new(self.c, self.rows, self.cols, &self.cells)
    }

    fn run(&mut self) {
        if self.out.len() >= self.limit {
            return;
        }
        let width = self.c as usize + 1;
        let mut avail = vec![0u64; if self.quota { self.cols * width } else { 0 }];
        let mut best: Option<(usize, u64, (u32, usize))> = None;
        for idx in 0..self.cells.len() {
            if self.cells[idx].is_some() {
                continue;
            }
            let (r, j) = (idx / self.cols, idx % self.cols);
            let dom = self.domain(r, j);
            if dom == 0 {
                return;
            }
            if self.quota {
                for v in 0..width {
                    if dom >> v & 1 == 1 {
                        avail[j * width + v] += 1;
                    }
                }
            }
            // Fullest row first among equal domains, so row-level rules fire early.
            let key = (dom.count_ones(), self.cols - self.row_filled[r]);
            if best.is_none_or(|(_, _, k)| key < k) {
                best = Some((idx, dom, key));
            }
        }
        let Some((idx, dom, _)) = best else {
            self.accept();
            return;
        };
        if self.quota {
            for j in 0..self.cols {
                for v in 0..width {
                    if self.need[v] - self.col_count[j][v] > avail[j * width + v] {
                        return;
                    }
                }
            }
        }
        let r = idx / self.cols;
        for v in 0..=self.c {
            if dom >> v & 1 == 0 {
                continue;
            }
            self.assign(idx, Some(v));
            let pruned = self.row_filled[r] == self.cols
                && (!self.complements_feasible()
                    || self
                        .lookahead
                        .iter()
                        .any(|rule| !rule.check_partial(&self.view()).is_empty()));
            if !pruned {
                self.run();
            }
            self.assign(idx, None);
            if self.out.len() >= self.limit {
                return;
            }
        }
    }

    /// Rule `iii` pairs equal numbers of each full row and its complement,
    /// so every surplus must be absorbable by rows still open.
    fn complements_feasible(&self) -> bool {
        if !self.complements {
            return true;
        }
        let row = |r: usize| &self.cells[r * self.cols..(r + 1) * self.cols];
        let (full, open): (Vec<usize>, Vec<usize>) =
            (0..self.rows).partition(|&r| self.row_filled[r] == self.cols);
        let mut counts: HashMap<&[Option<u32>], usize> = HashMap::new();
        for &r in &full {
            *counts.entry(row(r)).or_default() += 1;
        }
        let mut total = 0;
        for (&u, &have) in &counts {
            let target: Vec<Option<u32>> = u.iter().map(|v| v.map(|v| self.c - v)).collect();
            let paired = counts.get(target.as_slice()).copied().unwrap_or(0);
            if have <= paired {
                continue;
            }
            let deficit = have - paired;
            total += deficit;
            let takers = open
                .iter()
                .filter(|&&s| {
                    row(s)
                        .iter()
                        .zip(&target)
                        .all(|(o, t)| o.is_none() || o == t)
                })
                .count();
            if takers < deficit {
                return false;
            }
        }
        total <= open.len()
    }

    fn accept(&mut self) {
        let view = self.view();
        if self
            .rules
            .rules()
            .all(|rule| rule.check_complete(&view).is_none())
        {
            let grid =
                PuzzleGrid::new(self.c, self.cells.clone()).expect("solver keeps the grid shape");
            self.out.push(grid);
        }
    }
}
