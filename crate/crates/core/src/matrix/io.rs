//! Text and JSON forms of warping matrices.
//!
//! Text: one row per line, cells separated by single spaces, a barred cell
//! written with a trailing `-` (`2-`). The kind is not stored; it follows
//! from the row count and the presence of bars.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labels::{Cell, LabeledSequence};
use crate::matrix::{MatrixKind, WarpingMatrix};

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    c: u32,
    kind: MatrixKind,
    rows: Vec<Vec<Cell>>,
}

impl WarpingMatrix {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the text form. Without `kind`, `2^c - 1` rows mean a diagram
    /// matrix and `2^c` rows a projection matrix, signed if any cell is barred.
    pub fn parse_text(text: &str, kind: Option<MatrixKind>) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let cells = line
                .split_whitespace()
                .map(|tok| {
                    parse_cell(tok).ok_or_else(|| Error::Format {
                        line: i + 1,
                        reason: format!("bad cell {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(LabeledSequence(cells));
        }
        let width = rows.first().map_or(0, |r| r.len());
        if width == 0 || width % 2 != 0 {
            return Err(Error::Shape(format!(
                "need an even, positive column count, got {width}"
            )));
        }
        let c = (width / 2) as u32;
        if c > crate::MAX_MATRIX_CROSSINGS {
            return Err(Error::TooManyCrossings(c));
        }
        let kind = match kind {
            Some(k) => k,
            None => infer_kind(c, &rows)?,
        };
        WarpingMatrix::new(c, kind, rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dto = MatrixJson {
            c: self.c(),
            kind: self.kind(),
            rows: self.rows().iter().map(|r| r.0.clone()).collect(),
        };
        serde_json::to_value(dto).expect("matrix json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let dto: MatrixJson = serde_json::from_value(value.clone())?;
        WarpingMatrix::new(
            dto.c,
            dto.kind,
            dto.rows.into_iter().map(LabeledSequence).collect(),
        )
    }

    /// Accepts either form: JSON if the text starts with `{`.
    pub fn parse_any(text: &str, kind: Option<MatrixKind>) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            let value: serde_json::Value = serde_json::from_str(text)?;
            let m = WarpingMatrix::from_json(&value)?;
            match kind {
                Some(k) if k != m.kind() => Err(Error::Shape(format!(
                    "file declares a {} matrix, {} requested",
                    m.kind().name(),
                    k.name()
                ))),
                _ => Ok(m),
            }
        } else {
            WarpingMatrix::parse_text(text, kind)
        }
    }
}

fn parse_cell(tok: &str) -> Option<Cell> {
    let (digits, bar) = match tok.strip_suffix('-') {
        Some(d) => (d, true),
        None => (tok, false),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(Cell {
        value: digits.parse().ok()?,
        bar,
    })
}

fn infer_kind(c: u32, rows: &[LabeledSequence]) -> Result<MatrixKind> {
    let full = 1usize << c;
    if rows.len() == full {
        if rows.iter().any(|r| r.bar_count() > 0) {
            Ok(MatrixKind::SignedProjection)
        } else {
            Ok(MatrixKind::Projection)
        }
    } else if rows.len() == full - 1 {
        Ok(MatrixKind::Diagram)
    } else {
        Err(Error::Shape(format!(
            "{} rows fit neither 2^{c} nor 2^{c} - 1 for {} columns",
            rows.len(),
            2 * c
        )))
    }
}
