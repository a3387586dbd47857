use crate::puzzle::PuzzleGrid;
use crate::rules::{binomial, registry, CellView, Rule, RuleId, RuleSet};

use super::{hopeless, lookahead_rules, Solver};

/// Every cyclic row of length `2c` over `0..=c` with unit steps, in
/// lexicographic order. These are exactly the rows allowed by rule `i`.
pub fn closed_walks(c: u32) -> Vec<Vec<u32>> {
    let n = 2 * c as usize;
    let mut out = Vec::new();
    let mut walk = Vec::with_capacity(n);
    for start in 0..=c {
        walk.clear();
        walk.push(start);
        extend_walk(c, n, &mut walk, &mut out);
    }
    out
}

fn extend_walk(c: u32, n: usize, walk: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let last = *walk.last().expect("walk has a start");
    if walk.len() == n {
        if last.abs_diff(walk[0]) == 1 {
            out.push(walk.clone());
        }
        return;
    }
    // Must be able to return to the start in the remaining steps.
    let remaining = n - walk.len();
    for next in [last.wrapping_sub(1), last + 1] {
        if next > c {
            continue;
        }
        if (next.abs_diff(walk[0]) as usize) > remaining {
            continue;
        }
        walk.push(next);
        extend_walk(c, n, walk, out);
        walk.pop();
    }
}

/// Row-by-row backtracking over precomputed closed walks: the row with the
/// fewest walks compatible with its clues and the column quotas goes first.
pub struct RowSearch;

impl Solver for RowSearch {
    fn name(&self) -> &'static str {
        "rows"
    }

    fn description(&self) -> &'static str {
        "row-wise backtracking over all unit-step closed walks"
    }

    fn solve(&self, grid: &PuzzleGrid, rules: &RuleSet, limit: usize) -> Vec<PuzzleGrid> {
        if hopeless(grid, rules, limit) {
            return Vec::new();
        }
        let walks = closed_walks(grid.c());
        let candidates: Vec<Vec<usize>> = (0..grid.rows())
            .map(|r| {
                let clues = grid.row(r);
                (0..walks.len())
                    .filter(|&w| {
                        walks[w]
                            .iter()
                            .zip(clues)
                            .all(|(v, clue)| clue.is_none_or(|x| x == *v))
                    })
                    .collect()
            })
            .collect();
        let mut search = Search::new(grid.c(), grid.rows(), &walks, rules, limit);
        search.candidates = candidates;
        search.clues = grid.cells().to_vec();
        search.run_free();
        search.out
    }
}

impl RowSearch {
    /// Every multiset of `2^c` rows (as non-decreasing row sequences) that
    /// satisfies `rules`. Row order is irrelevant to every rule, so this
    /// visits each completion of the empty grid once up to row permutation.
    pub fn row_multisets(c: u32, rules: &RuleSet) -> Vec<PuzzleGrid> {
        let walks = closed_walks(c);
        let rows = 1usize << c;
        let mut search = Search::new(c, rows, &walks, rules, usize::MAX);
        search.candidates = vec![(0..walks.len()).collect(); rows];
        search.clues = vec![None; rows * 2 * c as usize];
        search.run_sorted(0, 0);
        search.out
    }
}

fn complement_index(c: u32, walks: &[Vec<u32>]) -> Vec<usize> {
    walks
        .iter()
        .map(|w| {
            let target: Vec<u32> = w.iter().map(|&v| c - v).collect();
            walks
                .binary_search(&target)
                .expect("complement of a closed walk is a closed walk")
        })
        .collect()
}

struct Search<'a> {
    c: u32,
    rows: usize,
    cols: usize,
    walks: &'a [Vec<u32>],
    candidates: Vec<Vec<usize>>,
    clues: Vec<Option<u32>>,
    chosen: Vec<Option<usize>>,
    chosen_count: Vec<usize>,
    /// Index of the complementary walk, when rule `iii` is on.
    complement: Option<Vec<usize>>,
    col_count: Vec<Vec<u64>>,
    need: Vec<u64>,
    quota: bool,
    lookahead: Vec<&'static dyn Rule>,
    rules: &'a RuleSet,
    limit: usize,
    out: Vec<PuzzleGrid>,
}

impl<'a> Search<'a> {
    fn new(c: u32, rows: usize, walks: &'a [Vec<u32>], rules: &'a RuleSet, limit: usize) -> Self {
        let cols = 2 * c as usize;
        Search {
            c,
            rows,
            cols,
            walks,
            candidates: Vec::new(),
            clues: Vec::new(),
            chosen: vec![None; rows],
            chosen_count: vec![0; walks.len()],
            complement: rules
                .contains(RuleId::ComplementPairs)
                .then(|| complement_index(c, walks)),
            col_count: vec![vec![0; c as usize + 1]; cols],
            need: (0..=c).map(|n| binomial(c, n)).collect(),
            quota: rules.contains(RuleId::ColumnHistogram),
            lookahead: lookahead_rules(rules)
                .into_iter()
                .map(|id| registry().get(id))
                .collect(),
            rules,
            limit,
            out: Vec::new(),
        }
    }

    fn fits(&self, w: usize) -> bool {
        !self.quota
            || self.walks[w]
                .iter()
                .enumerate()
                .all(|(j, &v)| self.col_count[j][v as usize] < self.need[v as usize])
    }

    fn place(&mut self, r: usize, w: Option<usize>) {
        let (old, delta): (usize, i64) = match (self.chosen[r], w) {
            (None, Some(w)) => (w, 1),
            (Some(old), None) => (old, -1),
            _ => unreachable!("place toggles a row"),
        };
        for (j, &v) in self.walks[old].iter().enumerate() {
            let slot = &mut self.col_count[j][v as usize];
            *slot = (*slot as i64 + delta) as u64;
        }
        self.chosen_count[old] = (self.chosen_count[old] as i64 + delta) as usize;
        self.chosen[r] = w;
    }

    /// Chosen rows, and the clues of rows not chosen yet.
    fn cells(&self) -> Vec<Option<u32>> {
        self.chosen
            .iter()
            .enumerate()
            .flat_map(|(r, w)| match w {
                Some(w) => self.walks[*w].iter().map(|&v| Some(v)).collect::<Vec<_>>(),
                None => self.clues[r * self.cols..(r + 1) * self.cols].to_vec(),
            })
            .collect()
    }

    /// Rule `iii` pairs equal numbers of each walk and its complement, so
    /// every surplus must be absorbable by the open rows.
    fn complements_feasible(&self, open: &[(usize, Vec<usize>)]) -> bool {
        let Some(comp) = &self.complement else {
            return true;
        };
        let mut total = 0;
        for (u, &have) in self.chosen_count.iter().enumerate() {
            let want = self.chosen_count[comp[u]];
            if want <= have {
                continue;
            }
            let deficit = want - have;
            total += deficit;
            let takers = open.iter().filter(|(_, cands)| cands.contains(&u)).count();
            if takers < deficit {
                return false;
            }
        }
        total <= open.len()
    }

    fn pruned_by_lookahead(&self) -> bool {
        if self.lookahead.is_empty() {
            return false;
        }
        let cells = self.cells();
        let view = CellView::new(self.c, self.rows, self.cols, &cells);
        self.lookahead
            .iter()
            .any(|rule| !rule.check_partial(&view).is_empty())
    }

    fn accept(&mut self) {
        let cells = self.cells();
        let view = CellView::new(self.c, self.rows, self.cols, &cells);
        if self
            .rules
            .rules()
            .all(|rule| rule.check_complete(&view).is_none())
        {
            self.out
                .push(PuzzleGrid::new(self.c, cells).expect("solver keeps the grid shape"));
        }
    }

    /// Each column still needs `need - count` copies of every label; there
    /// must be enough open rows whose candidates offer it.
    fn quota_feasible(&self, open: &[(usize, Vec<usize>)]) -> bool {
        if !self.quota {
            return true;
        }
        let width = self.c as usize + 1;
        let mut offer = vec![0u64; self.cols * width];
        for (_, cands) in open {
            let mut seen = vec![false; self.cols * width];
            for &w in cands {
                for (j, &v) in self.walks[w].iter().enumerate() {
                    seen[j * width + v as usize] = true;
                }
            }
            for (slot, s) in offer.iter_mut().zip(seen) {
                *slot += u64::from(s);
            }
        }
        (0..self.cols).all(|j| {
            (0..width).all(|v| self.need[v] - self.col_count[j][v] <= offer[j * width + v])
        })
    }

    fn run_free(&mut self) {
        if self.out.len() >= self.limit {
            return;
        }
        let open: Vec<(usize, Vec<usize>)> = (0..self.rows)
            .filter(|&r| self.chosen[r].is_none())
            .map(|r| {
                (
                    r,
                    self.candidates[r]
                        .iter()
                        .copied()
                        .filter(|&w| self.fits(w))
                        .collect(),
                )
            })
            .collect();
        if open.is_empty() {
            self.accept();
            return;
        }
        if open.iter().any(|(_, c)| c.is_empty())
            || !self.quota_feasible(&open)
            || !self.complements_feasible(&open)
        {
            return;
        }
        let (r, cands) = open
            .into_iter()
            .min_by_key(|(_, c)| c.len())
            .expect("open rows");
        for w in cands {
            self.place(r, Some(w));
            if !self.pruned_by_lookahead() {
                self.run_free();
            }
            self.place(r, None);
            if self.out.len() >= self.limit {
                return;
            }
        }
    }

    fn run_sorted(&mut self, r: usize, min_walk: usize) {
        if r == self.rows {
            self.accept();
            return;
        }
        let open: Vec<(usize, Vec<usize>)> = (r..self.rows)
            .map(|row| {
                (
                    row,
                    (min_walk..self.walks.len())
                        .filter(|&w| self.fits(w))
                        .collect(),
                )
            })
            .collect();
        if !self.quota_feasible(&open) || !self.complements_feasible(&open) {
            return;
        }
        let cands = open.into_iter().next().map(|(_, c)| c).unwrap_or_default();
        for w in cands {
            self.place(r, Some(w));
            if !self.pruned_by_lookahead() {
                self.run_sorted(r + 1, w);
            }
            self.place(r, None);
        }
    }
}
