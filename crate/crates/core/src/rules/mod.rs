//! The four laws every projection warping matrix obeys, as interchangeable
//! checks shared by the matrix verifier and the puzzle.
//!
//! * `i`: cyclically adjacent labels in a row differ by one.
//! * `ii`: label `n` appears `C(c, n)` times in every column.
//! * `iii`: rows split uniquely into `2^(c-1)` pairs summing to `(c … c)`.
//! * `iv`: exactly two rows alternate, `(k k+1 …)` and `(l l-1 …)`, `k + l = c`.
//!
//! Each law is a [`Rule`] registered under its numeral; a [`RuleSet`] names
//! the active ones.

mod alternating;
mod complement;
mod histogram;
mod step;

pub use alternating::AlternatingRows;
pub use complement::ComplementPairs;
pub use histogram::ColumnHistogram;
pub use step::UnitStep;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{MatrixKind, WarpingMatrix};

/// `n choose k` for the small arguments used here.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * u64::from(n - i) / u64::from(i + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    #[serde(rename = "i")]
    UnitStep,
    #[serde(rename = "ii")]
    ColumnHistogram,
    #[serde(rename = "iii")]
    ComplementPairs,
    #[serde(rename = "iv")]
    AlternatingRows,
}

impl RuleId {
    pub const ALL: [RuleId; 4] = [
        RuleId::UnitStep,
        RuleId::ColumnHistogram,
        RuleId::ComplementPairs,
        RuleId::AlternatingRows,
    ];

    pub fn numeral(self) -> &'static str {
        match self {
            RuleId::UnitStep => "i",
            RuleId::ColumnHistogram => "ii",
            RuleId::ComplementPairs => "iii",
            RuleId::AlternatingRows => "iv",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.numeral())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.numeral() == s.trim())
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

/// Read-only access to a rectangular grid of optional labels.
#[derive(Debug, Clone, Copy)]
pub struct CellView<'a> {
    pub c: u32,
    pub rows: usize,
    pub cols: usize,
    cells: &'a [Option<u32>],
}

impl<'a> CellView<'a> {
    pub fn new(c: u32, rows: usize, cols: usize, cells: &'a [Option<u32>]) -> Self {
        assert_eq!(
            cells.len(),
            rows * cols,
            "cell buffer does not match the shape"
        );
        CellView {
            c,
            rows,
            cols,
            cells,
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.cells[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &'a [Option<u32>] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_values(&self, row: usize) -> Option<Vec<u32>> {
        self.row(row).iter().copied().collect()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// Cells `col` and `next_col` (cyclically adjacent) of `row` do not
    /// differ by one.
    Step {
        row: usize,
        col: usize,
        next_col: usize,
        left: u32,
        right: u32,
    },
    /// Column histogram differs from the binomial coefficients.
    Histogram {
        col: usize,
        histogram: Vec<u64>,
        expected: Vec<u64>,
    },
    /// No row sums with `row` to the constant row.
    UnpairedRow { row: usize },
    /// Several rows could be paired with `row`.
    AmbiguousPair { row: usize, candidates: Vec<usize> },
    /// The alternating rows do not have the required form.
    Alternating { rows: Vec<usize>, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail { witness: Witness },
    Skipped { notice: String },
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

/// Where a partial-grid violation sits. Coordinates are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Location {
    Cells { row: usize, cols: [usize; 2] },
    Column { col: usize, value: u32 },
    Rows { rows: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: RuleId,
    pub location: Location,
    pub message: String,
}

impl Violation {
    fn from_witness(rule: RuleId, witness: Witness) -> Violation {
        let (location, message) = match witness {
            Witness::Step {
                row,
                col,
                next_col,
                left,
                right,
            } => (
                Location::Cells {
                    row,
                    cols: [col, next_col],
                },
                format!("{left} and {right} are adjacent but do not differ by one"),
            ),
            Witness::Histogram {
                col,
                histogram,
                expected,
            } => {
                let value = (0..histogram.len())
                    .find(|&n| histogram[n] != expected[n])
                    .unwrap_or(0);
                (
                    Location::Column {
                        col,
                        value: value as u32,
                    },
                    format!(
                        "{value} appears {} times in column {}, expected {}",
                        histogram[value],
                        col + 1,
                        expected[value]
                    ),
                )
            }
            Witness::UnpairedRow { row } => (
                Location::Rows { rows: vec![row] },
                "no complementary row".to_string(),
            ),
            Witness::AmbiguousPair { row, candidates } => {
                let mut rows = vec![row];
                rows.extend(candidates);
                (
                    Location::Rows { rows },
                    "complementary row is not unique".to_string(),
                )
            }
            Witness::Alternating { rows, reason } => (Location::Rows { rows }, reason),
        };
        Violation {
            rule,
            location,
            message,
        }
    }
}

/// One of the matrix laws, usable on complete matrices and on partial grids.
pub trait Rule: Send + Sync {
    fn id(&self) -> RuleId;

    fn description(&self) -> &'static str;

    /// Verdict on a complete `2^c × 2c` grid. `None` means the rule holds.
    fn check_complete(&self, view: &CellView<'_>) -> Option<Witness>;

    /// Violations decidable from the filled cells alone. An empty result
    /// means nothing is wrong yet; on a complete grid it means the rule holds.
    fn check_partial(&self, view: &CellView<'_>) -> Vec<Violation>;
}

/// Rules registered by numeral.
pub struct RuleRegistry {
    rules: Vec<Box<dyn Rule>>,
}

impl RuleRegistry {
    fn standard() -> Self {
        RuleRegistry {
            rules: vec![
                Box::new(UnitStep),
                Box::new(ColumnHistogram),
                Box::new(ComplementPairs),
                Box::new(AlternatingRows),
            ],
        }
    }

    pub fn get(&self, id: RuleId) -> &dyn Rule {
        self.rules
            .iter()
            .find(|r| r.id() == id)
            .map(|b| b.as_ref())
            .expect("every rule id is registered")
    }

    pub fn by_name(&self, name: &str) -> Result<&dyn Rule> {
        Ok(self.get(name.parse()?))
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Rule> {
        self.rules.iter().map(|b| b.as_ref())
    }
}

static REGISTRY: LazyLock<RuleRegistry> = LazyLock::new(RuleRegistry::standard);

pub fn registry() -> &'static RuleRegistry {
    &REGISTRY
}

/// A non-empty selection of rules that always includes rule `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuleSet(BTreeSet<RuleId>);

impl RuleSet {
    pub fn new<I: IntoIterator<Item = RuleId>>(ids: I) -> Result<Self> {
        let set: BTreeSet<RuleId> = ids.into_iter().collect();
        if !set.contains(&RuleId::UnitStep) {
            return Err(Error::UnknownRule("a rule set must contain rule i".into()));
        }
        Ok(RuleSet(set))
    }

    pub fn all() -> Self {
        RuleSet(RuleId::ALL.into_iter().collect())
    }

    /// Rules `i` and `ii`, the simplified puzzle.
    pub fn basic() -> Self {
        RuleSet(
            [RuleId::UnitStep, RuleId::ColumnHistogram]
                .into_iter()
                .collect(),
        )
    }

    pub fn contains(&self, id: RuleId) -> bool {
        self.0.contains(&id)
    }

    pub fn ids(&self) -> impl Iterator<Item = RuleId> + '_ {
        self.0.iter().copied()
    }

    pub fn rules(&self) -> impl Iterator<Item = &'static dyn Rule> + '_ {
        self.0.iter().map(|&id| registry().get(id))
    }

    pub fn is_subset_of_basic(&self) -> bool {
        self.0
            .iter()
            .all(|id| matches!(id, RuleId::UnitStep | RuleId::ColumnHistogram))
    }
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet::all()
    }
}

impl FromStr for RuleSet {
    type Err = Error;

    /// Comma separated numerals, e.g. `i,ii`, or `all`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "all" {
            return Ok(RuleSet::all());
        }
        RuleSet::new(
            s.split(',')
                .map(str::parse)
                .collect::<Result<Vec<RuleId>>>()?,
        )
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|r| r.numeral()).collect();
        f.write_str(&names.join(","))
    }
}

impl Serialize for RuleSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RuleSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<RuleId>::deserialize(d)?;
        RuleSet::new(ids).map_err(serde::de::Error::custom)
    }
}

/// Verdict per rule on a whole matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleReport {
    pub outcomes: Vec<(RuleId, Outcome)>,
}

impl RuleReport {
    pub fn outcome(&self, id: RuleId) -> &Outcome {
        &self
            .outcomes
            .iter()
            .find(|(r, _)| *r == id)
            .expect("report covers every rule")
            .1
    }

    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|(_, o)| o.passed())
    }

    /// Passed, or skipped because the shape does not apply.
    pub fn no_failures(&self) -> bool {
        self.outcomes
            .iter()
            .all(|(_, o)| !matches!(o, Outcome::Fail { .. }))
    }
}

impl fmt::Display for RuleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, outcome) in &self.outcomes {
            match outcome {
                Outcome::Pass => writeln!(f, "rule {id}: pass")?,
                Outcome::Fail { witness } => writeln!(f, "rule {id}: FAIL {witness:?}")?,
                Outcome::Skipped { notice } => writeln!(f, "rule {id}: skipped ({notice})")?,
            }
        }
        Ok(())
    }
}

/// Checks every rule against a matrix. Bars are ignored.
///
/// A diagram matrix lacks one row: rule `i` is checked as usual, rule `ii`
/// requires every column to lack exactly one label of its binomial
/// histogram, and rules `iii` and `iv` are skipped.
pub fn verify_rules(m: &WarpingMatrix) -> RuleReport {
    let cells: Vec<Option<u32>> = m
        .rows()
        .iter()
        .flat_map(|r| r.cells().iter().map(|c| Some(c.value)))
        .collect();
    let view = CellView::new(m.c(), m.row_count(), m.column_count(), &cells);
    let reg = registry();
    let outcomes = RuleId::ALL
        .into_iter()
        .map(|id| {
            let outcome = match (m.kind(), id) {
                (MatrixKind::Diagram, RuleId::ComplementPairs | RuleId::AlternatingRows) => {
                    Outcome::Skipped {
                        notice: "needs all 2^c rows; diagram matrices lack one".into(),
                    }
                }
                (MatrixKind::Diagram, RuleId::ColumnHistogram) => histogram::check_one_short(&view)
                    .map_or(Outcome::Pass, |witness| Outcome::Fail { witness }),
                _ => reg
                    .get(id)
                    .check_complete(&view)
                    .map_or(Outcome::Pass, |witness| Outcome::Fail { witness }),
            };
            (id, outcome)
        })
        .collect();
    RuleReport { outcomes }
}

/// Runs `check_partial` for every rule of the set.
pub fn validate_cells(view: &CellView<'_>, rules: &RuleSet) -> Vec<Violation> {
    rules.rules().flat_map(|r| r.check_partial(view)).collect()
}
