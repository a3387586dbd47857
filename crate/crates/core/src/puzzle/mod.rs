//! The warping-matrix puzzle: a `2^c × 2c` grid with some labels given,
//! to be completed so that the chosen rules hold.

mod enumerate;
pub mod fixtures;
mod generate;
pub mod solver;

pub use enumerate::{enumerate_matrices, MAX_ENUMERATION_CROSSINGS};
pub use generate::{generate, generate_with, Generated, MAX_GENERATION_CROSSINGS};
pub use solver::{solve, solver, solvers, Solver, DEFAULT_SOLVER};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labels::LabeledSequence;
use crate::matrix::{MatrixKind, WarpingMatrix};
use crate::rules::{validate_cells, CellView, RuleSet, Violation};
use crate::MAX_MATRIX_CROSSINGS;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuzzleGrid {
    c: u32,
    cells: Vec<Option<u32>>,
}

impl PuzzleGrid {
    /// `cells` is row-major with `2^c` rows of `2c` cells.
    pub fn new(c: u32, cells: Vec<Option<u32>>) -> Result<Self> {
        if c == 0 {
            return Err(Error::NoCrossings);
        }
        if c > MAX_MATRIX_CROSSINGS {
            return Err(Error::TooManyCrossings(c));
        }
        let expected = (1usize << c) * 2 * c as usize;
        if cells.len() != expected {
            return Err(Error::Shape(format!(
                "a c = {c} grid has {expected} cells, got {}",
                cells.len()
            )));
        }
        if let Some(v) = cells.iter().flatten().find(|&&v| v > c) {
            return Err(Error::Shape(format!("digit {v} exceeds c = {c}")));
        }
        Ok(PuzzleGrid { c, cells })
    }

    pub fn empty(c: u32) -> Result<Self> {
        let n = if c == 0 || c > MAX_MATRIX_CROSSINGS {
            0
        } else {
            (1usize << c) * 2 * c as usize
        };
        PuzzleGrid::new(c, vec![None; n])
    }

    pub fn from_matrix(m: &WarpingMatrix) -> Result<Self> {
        if m.kind() == MatrixKind::Diagram {
            return Err(Error::Shape("puzzle grids have 2^c rows".into()));
        }
        let cells = m
            .rows()
            .iter()
            .flat_map(|r| r.cells().iter().map(|c| Some(c.value)))
            .collect();
        PuzzleGrid::new(m.c(), cells)
    }

    /// The filled grid as an unsigned projection matrix.
    pub fn to_matrix(&self) -> Result<WarpingMatrix> {
        let rows = (0..self.rows())
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|c| c.ok_or_else(|| Error::Shape("grid has empty cells".into())))
                    .collect::<Result<Vec<u32>>>()
                    .map(LabeledSequence::from_values)
            })
            .collect::<Result<Vec<_>>>()?;
        WarpingMatrix::new(self.c, MatrixKind::Projection, rows)
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn rows(&self) -> usize {
        1 << self.c
    }

    pub fn cols(&self) -> usize {
        2 * self.c as usize
    }

    pub fn cells(&self) -> &[Option<u32>] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.cells[row * self.cols() + col]
    }

    pub fn row(&self, row: usize) -> &[Option<u32>] {
        let w = self.cols();
        &self.cells[row * w..(row + 1) * w]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Option<u32>) -> Result<()> {
        if row >= self.rows() || col >= self.cols() {
            return Err(Error::Shape(format!(
                "cell ({row}, {col}) outside the grid"
            )));
        }
        if matches!(value, Some(v) if v > self.c) {
            return Err(Error::Shape(format!("digit exceeds c = {}", self.c)));
        }
        let w = self.cols();
        self.cells[row * w + col] = value;
        Ok(())
    }

    pub fn clue_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    pub fn view(&self) -> CellView<'_> {
        CellView::new(self.c, self.rows(), self.cols(), &self.cells)
    }

    /// Whether every filled cell of `self` holds the same digit in `other`.
    pub fn agrees_with(&self, other: &PuzzleGrid) -> bool {
        self.c == other.c
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(a, b)| a.is_none() || a == b)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows() {
            let line: Vec<String> = self
                .row(r)
                .iter()
                .map(|c| c.map_or_else(|| ".".to_string(), |v| v.to_string()))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Lines of whitespace-separated tokens, `.` for an empty cell.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<Option<u32>>> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| match tok {
                    "." => Ok(None),
                    t if t.bytes().all(|b| b.is_ascii_digit()) => {
                        t.parse().map(Some).map_err(|_| Error::Format {
                            line: i + 1,
                            reason: format!("bad digit {t:?}"),
                        })
                    }
                    t => Err(Error::Format {
                        line: i + 1,
                        reason: format!("bad token {t:?}"),
                    }),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let width = rows.first().map_or(0, Vec::len);
        if width == 0 || !width.is_multiple_of(2) {
            return Err(Error::Shape(format!(
                "need an even, positive column count, got {width}"
            )));
        }
        if let Some((i, _)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
            return Err(Error::Format {
                line: i + 1,
                reason: "ragged row".into(),
            });
        }
        let c = (width / 2) as u32;
        if c > MAX_MATRIX_CROSSINGS || rows.len() != 1usize << c {
            return Err(Error::Shape(format!(
                "{} rows do not fit {width} columns",
                rows.len()
            )));
        }
        PuzzleGrid::new(c, rows.into_iter().flatten().collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GridJson {
            c: self.c,
            cells: (0..self.rows()).map(|r| self.row(r).to_vec()).collect(),
        })
        .expect("grid json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let dto: GridJson = serde_json::from_value(value.clone())?;
        PuzzleGrid::from_rows(dto.c, dto.cells)
    }

    /// Builds a grid from nested rows, checking the shape.
    pub fn from_rows(c: u32, rows: Vec<Vec<Option<u32>>>) -> Result<Self> {
        if c == 0 {
            return Err(Error::NoCrossings);
        }
        if c > MAX_MATRIX_CROSSINGS {
            return Err(Error::TooManyCrossings(c));
        }
        let width = 2 * c as usize;
        if rows.len() != 1usize << c || rows.iter().any(|r| r.len() != width) {
            return Err(Error::Shape(format!(
                "a c = {c} grid is {} × {width}",
                1usize << c
            )));
        }
        PuzzleGrid::new(c, rows.into_iter().flatten().collect())
    }

    /// Accepts either form: JSON if the text starts with `{`.
    pub fn parse_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            PuzzleGrid::from_json(&serde_json::from_str(text)?)
        } else {
            PuzzleGrid::parse_text(text)
        }
    }
}

impl fmt::Display for PuzzleGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct GridJson {
    c: u32,
    cells: Vec<Vec<Option<u32>>>,
}

/// Violations decidable from the filled cells of `grid`.
///
/// Rule `i` looks at adjacent filled pairs, rule `ii` at column counts
/// exceeding `C(c, n)`, rule `iii` at complete rows that no other row can
/// complement, rule `iv` at the alternating rows. A complete grid is checked
/// exactly.
pub fn validate(grid: &PuzzleGrid, rules: &RuleSet) -> Vec<Violation> {
    validate_cells(&grid.view(), rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::{Location, RuleId};

    #[test]
    fn text_round_trip() {
        let text = fixtures::TREFOIL_TEXT;
        let g = PuzzleGrid::parse_text(text).unwrap();
        assert_eq!(g.c(), 3);
        assert_eq!(g.clue_count(), 15);
        assert_eq!(g.to_text(), text);
    }

    #[test]
    fn json_round_trip() {
        let g = fixtures::trefoil();
        let back = PuzzleGrid::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(g.to_json()["cells"][0][4], serde_json::json!(3));
        assert_eq!(g.to_json()["cells"][0][0], serde_json::Value::Null);
    }

    #[test]
    fn shape_errors() {
        assert!(PuzzleGrid::parse_text(". .\n. .\n. .\n").is_err());
        assert!(PuzzleGrid::parse_text(". 2\n. .\n").is_err());
        assert!(PuzzleGrid::parse_text(". x\n. .\n").is_err());
        assert!(PuzzleGrid::from_rows(1, vec![vec![None, None]]).is_err());
    }

    #[test]
    fn adjacent_zero_two_is_flagged() {
        let mut g = PuzzleGrid::empty(2).unwrap();
        g.set(1, 1, Some(0)).unwrap();
        g.set(1, 2, Some(2)).unwrap();
        let v = validate(&g, &RuleSet::basic());
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, RuleId::UnitStep);
        assert_eq!(
            v[0].location,
            Location::Cells {
                row: 1,
                cols: [1, 2]
            }
        );
    }

    #[test]
    fn fixtures_have_no_violations() {
        assert!(validate(&fixtures::trefoil(), &RuleSet::all()).is_empty());
        assert!(validate(&fixtures::figure_eight(), &RuleSet::all()).is_empty());
    }
}
