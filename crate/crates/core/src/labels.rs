//! Warping degree sequences, optionally carrying bars.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One label of a (signed) warping degree sequence.
///
/// Ordering is `(value, bar)` with an unbarred cell sorting before a barred
/// cell of the same value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    #[serde(rename = "v")]
    pub value: u32,
    pub bar: bool,
}

impl Cell {
    pub const fn plain(value: u32) -> Self {
        Cell { value, bar: false }
    }

    pub const fn barred(value: u32) -> Self {
        Cell { value, bar: true }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bar {
            write!(f, "{}-", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// The labels of the 2c edges of a diagram, read cyclically from edge 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabeledSequence(pub Vec<Cell>);

impl LabeledSequence {
    pub fn from_values<I: IntoIterator<Item = u32>>(values: I) -> Self {
        LabeledSequence(values.into_iter().map(Cell::plain).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.0
    }

    pub fn values(&self) -> Vec<u32> {
        self.0.iter().map(|c| c.value).collect()
    }

    pub fn bar_count(&self) -> usize {
        self.0.iter().filter(|c| c.bar).count()
    }

    /// Same values with every bar removed.
    pub fn unsigned(&self) -> LabeledSequence {
        LabeledSequence(self.0.iter().map(|c| Cell::plain(c.value)).collect())
    }

    /// First cyclic position whose neighbour differs by something other than 1.
    pub fn first_non_unit_step(&self) -> Option<usize> {
        let n = self.0.len();
        (0..n).find(|&j| {
            let a = self.0[j].value as i64;
            let b = self.0[(j + 1) % n].value as i64;
            (a - b).abs() != 1
        })
    }
}

impl fmt::Display for LabeledSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, cell) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{cell}")?;
        }
        Ok(())
    }
}
