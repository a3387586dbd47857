//! Warping matrices of projections and diagrams.
//!
//! `M(P)` stacks the warping degree sequences of all `2^c` diagrams over a
//! projection, read from the same edge. `m(P)` stacks the signed sequences
//! and `M(D)` is `m(P)` without the row of `D` itself. Matrices are
//! considered up to row swaps and cyclic column shifts.

mod canon;
mod difference;
mod io;
mod reconstruct;

pub use canon::{canonical_form, equivalent};
pub use difference::{difference_transform, DifferenceMatrix};
pub use reconstruct::{
    reconstruct_diagram, reconstruct_projection, restore_missing_row, DiagramReconstruction,
    ProjectionReconstruction, RestoredRow,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::OrientedKnotDiagram;
use crate::labels::{Cell, LabeledSequence};
use crate::MAX_MATRIX_CROSSINGS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKind {
    /// `M(P)`: `2^c` unsigned rows.
    Projection,
    /// `m(P)`: `2^c` signed rows.
    SignedProjection,
    /// `M(D)`: `2^c - 1` signed rows.
    Diagram,
}

impl MatrixKind {
    pub fn expected_rows(self, c: u32) -> usize {
        match self {
            MatrixKind::Projection | MatrixKind::SignedProjection => 1usize << c,
            MatrixKind::Diagram => (1usize << c) - 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Projection => "projection",
            MatrixKind::SignedProjection => "signed-projection",
            MatrixKind::Diagram => "diagram",
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "projection" => Ok(MatrixKind::Projection),
            "signed-projection" | "signed" => Ok(MatrixKind::SignedProjection),
            "diagram" => Ok(MatrixKind::Diagram),
            other => Err(Error::Shape(format!("unknown matrix kind {other:?}"))),
        }
    }
}

/// A `rows × 2c` matrix of (possibly barred) labels.
///
/// Construction only checks the shape. The step law and the other rules are
/// checked by [`crate::rules::verify_rules`], so that broken matrices can be
/// represented and diagnosed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WarpingMatrix {
    c: u32,
    kind: MatrixKind,
    rows: Vec<LabeledSequence>,
}

impl WarpingMatrix {
    pub fn new(c: u32, kind: MatrixKind, rows: Vec<LabeledSequence>) -> Result<Self> {
        if c == 0 {
            return Err(Error::NoCrossings);
        }
        if c > MAX_MATRIX_CROSSINGS {
            return Err(Error::TooManyCrossings(c));
        }
        let expected = kind.expected_rows(c);
        if rows.len() != expected {
            return Err(Error::Shape(format!(
                "{} matrix with c = {c} needs {expected} rows, got {}",
                kind.name(),
                rows.len()
            )));
        }
        let width = 2 * c as usize;
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
            return Err(Error::Shape(format!(
                "row {i} has {} cells, expected {width}",
                r.len()
            )));
        }
        if kind == MatrixKind::Projection && rows.iter().any(|r| r.bar_count() > 0) {
            return Err(Error::Shape(
                "projection matrix rows cannot carry bars".into(),
            ));
        }
        if let Some(bad) = rows
            .iter()
            .flat_map(|r| r.cells())
            .find(|cell| cell.value > c)
        {
            return Err(Error::Shape(format!("label {} exceeds c = {c}", bad.value)));
        }
        Ok(WarpingMatrix { c, kind, rows })
    }

    /// Convenience for unsigned projection matrices given as plain values.
    pub fn from_values(rows: &[&[u32]]) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.len());
        if !width.is_multiple_of(2) {
            return Err(Error::Shape(format!("odd column count {width}")));
        }
        let rows = rows
            .iter()
            .map(|r| LabeledSequence::from_values(r.iter().copied()))
            .collect();
        WarpingMatrix::new((width / 2) as u32, MatrixKind::Projection, rows)
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn rows(&self) -> &[LabeledSequence] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        2 * self.c as usize
    }

    pub fn value(&self, row: usize, col: usize) -> u32 {
        self.rows[row].0[col].value
    }

    pub fn values(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(|r| r.values()).collect()
    }

    /// Bars stripped; a diagram matrix keeps its kind.
    pub fn unsigned(&self) -> WarpingMatrix {
        let kind = match self.kind {
            MatrixKind::SignedProjection => MatrixKind::Projection,
            k => k,
        };
        WarpingMatrix {
            c: self.c,
            kind,
            rows: self.rows.iter().map(|r| r.unsigned()).collect(),
        }
    }

    pub fn column_bar_count(&self, col: usize) -> usize {
        self.rows.iter().filter(|r| r.0[col].bar).count()
    }

    /// The same matrix with `rows[i]` replaced and no shape re-check.
    pub(crate) fn with_rows(&self, kind: MatrixKind, rows: Vec<LabeledSequence>) -> WarpingMatrix {
        WarpingMatrix {
            c: self.c,
            kind,
            rows,
        }
    }

    /// Applies `f` to a single cell. Used to build deliberately broken inputs.
    pub fn map_cell(&self, row: usize, col: usize, f: impl FnOnce(Cell) -> Cell) -> WarpingMatrix {
        let mut out = self.clone();
        let cell = out.rows[row].0[col];
        out.rows[row].0[col] = f(cell);
        out
    }
}

impl fmt::Display for WarpingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn check_buildable(c: u32) -> Result<()> {
    if c == 0 {
        return Err(Error::NoCrossings);
    }
    if c > MAX_MATRIX_CROSSINGS {
        return Err(Error::TooManyCrossings(c));
    }
    Ok(())
}

fn assignment_rows(
    reference: &OrientedKnotDiagram,
    label: impl Fn(&OrientedKnotDiagram) -> LabeledSequence,
) -> Result<Vec<LabeledSequence>> {
    let c = reference.crossing_count();
    check_buildable(c)?;
    let projection = reference.underlying_projection();
    (0..1u64 << c)
        .map(|mask| {
            projection
                .apply_assignment(reference, mask)
                .map(|d| label(&d))
        })
        .collect()
}

/// `M(P)` for the projection of `reference`; row `i` belongs to the diagram
/// obtained by changing the crossings selected by mask `i`.
pub fn build_projection_matrix(reference: &OrientedKnotDiagram) -> Result<WarpingMatrix> {
    let rows = assignment_rows(reference, OrientedKnotDiagram::warping_labels)?;
    WarpingMatrix::new(reference.crossing_count(), MatrixKind::Projection, rows)
}

/// `m(P)`: as [`build_projection_matrix`] with signed rows.
pub fn build_signed_matrix(reference: &OrientedKnotDiagram) -> Result<WarpingMatrix> {
    let rows = assignment_rows(reference, OrientedKnotDiagram::signed_labels)?;
    WarpingMatrix::new(
        reference.crossing_count(),
        MatrixKind::SignedProjection,
        rows,
    )
}

/// `M(D)`: `m(P)` of the projection of `d` with the signed row of `d` removed.
pub fn build_diagram_matrix(d: &OrientedKnotDiagram) -> Result<WarpingMatrix> {
    let signed = build_signed_matrix(d)?;
    let own = d.signed_labels();
    let mut rows = signed.rows;
    let at = rows
        .iter()
        .position(|r| *r == own)
        .ok_or_else(|| Error::Internal("diagram row missing from its signed matrix".into()))?;
    rows.remove(at);
    WarpingMatrix::new(d.crossing_count(), MatrixKind::Diagram, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::parse_gauss_code;

    fn d(code: &str) -> OrientedKnotDiagram {
        parse_gauss_code(code).unwrap()
    }

    fn sorted_rows(m: &WarpingMatrix) -> Vec<String> {
        let mut rows: Vec<String> = m.rows().iter().map(|r| r.to_string()).collect();
        rows.sort();
        rows
    }

    #[test]
    fn curl_projection_matrix() {
        let m = build_projection_matrix(&d("O1+U1+")).unwrap();
        assert_eq!(sorted_rows(&m), vec!["0 1", "1 0"]);
    }

    #[test]
    fn double_twist_projection_matrix() {
        let m = build_projection_matrix(&d("O1+U2+O2+U1+")).unwrap();
        assert_eq!(
            sorted_rows(&m),
            vec!["0 1 2 1", "1 0 1 0", "1 2 1 2", "2 1 0 1"]
        );
    }

    #[test]
    fn unknot_is_rejected() {
        assert_eq!(
            build_projection_matrix(&OrientedKnotDiagram::unknot()),
            Err(Error::NoCrossings)
        );
    }

    #[test]
    fn curl_signed_matrix_bars_wrap() {
        // The changed curl U1-O1- is negative; its over visit is the last one,
        // so the bar lands on the first column.
        let m = build_signed_matrix(&d("O1+U1+")).unwrap();
        assert_eq!(sorted_rows(&m), vec!["0 1", "1- 0"]);
    }

    #[test]
    fn diagram_matrix_drops_own_row() {
        let t = d("O1+O2+O3+U1+U2+U3+");
        let md = build_diagram_matrix(&t).unwrap();
        let mp = build_signed_matrix(&t).unwrap();
        assert_eq!(md.row_count(), 7);
        assert!(!md.rows().contains(&t.signed_labels()));
        let mut merged = md.rows().to_vec();
        merged.push(t.signed_labels());
        merged.sort();
        let mut full = mp.rows().to_vec();
        full.sort();
        assert_eq!(merged, full);

        assert_eq!(build_diagram_matrix(&d("O1+U1+")).unwrap().row_count(), 1);
    }

    #[test]
    fn shape_checks() {
        assert!(WarpingMatrix::from_values(&[&[0, 1], &[1, 0], &[0, 1]]).is_err());
        assert!(WarpingMatrix::from_values(&[&[0, 1, 2], &[1, 0, 1]]).is_err());
        assert!(WarpingMatrix::from_values(&[&[0, 2], &[1, 0]]).is_err());
    }
}
