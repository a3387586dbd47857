//! Inverting warping matrices back to Gauss data.

use crate::error::{Error, Result};
use crate::knot::{KnotProjection, OrientedKnotDiagram, Sign, Strand, Visit};
use crate::labels::{Cell, LabeledSequence};
use crate::matrix::{difference_transform, MatrixKind, WarpingMatrix};
use crate::rules::binomial;

/// Chord diagram recovered from a projection matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionReconstruction {
    pub projection: KnotProjection,
    /// 0-based column pairs `(i, j)`, `i < j`, sorted.
    pub pairs: Vec<(usize, usize)>,
}

/// Columns of `U` pair up as `(j, k)` with `U_j + U_k = 0`; each pair is one
/// crossing. Column `j` of `U` is visit `j` of the diagrams.
pub fn reconstruct_projection(m: &WarpingMatrix) -> Result<ProjectionReconstruction> {
    if m.kind() == MatrixKind::Diagram {
        return Err(Error::Shape(
            "restore the missing row of a diagram matrix first".into(),
        ));
    }
    let u = difference_transform(m)?;
    let n = u.column_count();
    let columns: Vec<Vec<i8>> = (0..n).map(|j| u.column(j)).collect();
    for a in 0..n {
        for b in a + 1..n {
            if columns[a] == columns[b] {
                return Err(Error::Reconstruction(format!(
                    "columns {} and {} of the difference matrix coincide",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    let mut partner = vec![usize::MAX; n];
    for a in 0..n {
        let negated: Vec<i8> = columns[a].iter().map(|x| -x).collect();
        let matches: Vec<usize> = (0..n).filter(|&b| columns[b] == negated).collect();
        match matches.as_slice() {
            [b] => partner[a] = *b,
            [] => {
                return Err(Error::Reconstruction(format!(
                    "column {} has no partner summing to zero",
                    a + 1
                )))
            }
            _ => {
                return Err(Error::Reconstruction(format!(
                    "column {} has several partners summing to zero",
                    a + 1
                )))
            }
        }
    }
    let mut word = vec![0u32; n];
    let mut next = 1;
    let mut pairs = Vec::with_capacity(n / 2);
    for a in 0..n {
        if word[a] == 0 {
            let b = partner[a];
            if partner[b] != a || b < a {
                return Err(Error::Reconstruction(
                    "column pairing is not a matching".into(),
                ));
            }
            word[a] = next;
            word[b] = next;
            next += 1;
            pairs.push((a, b));
        }
    }
    Ok(ProjectionReconstruction {
        projection: KnotProjection::new(word)?,
        pairs,
    })
}

/// The completed `m(P)` together with the row that was removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestoredRow {
    pub matrix: WarpingMatrix,
    pub row: LabeledSequence,
    /// Columns whose bar the column count alone cannot decide. Only happens
    /// for `c = 1`, where a column missing its single bar and a column that
    /// never carries one both show zero bars. These cells are left unbarred.
    pub undetermined_bars: Vec<usize>,
}

/// Restores the row deleted from `M(D)`: each column lacks exactly one label
/// from its binomial histogram, and a column missing one of its `2^(c-1)`
/// bars gives the missing cell a bar.
pub fn restore_missing_row(m: &WarpingMatrix) -> Result<RestoredRow> {
    if m.kind() != MatrixKind::Diagram {
        return Err(Error::Shape(format!(
            "expected a diagram matrix, got {}",
            m.kind().name()
        )));
    }
    let c = m.c();
    let half = 1usize << (c - 1);
    let mut cells = Vec::with_capacity(m.column_count());
    let mut undetermined = Vec::new();
    for col in 0..m.column_count() {
        let mut hist = vec![0u64; c as usize + 1];
        for row in m.rows() {
            hist[row.0[col].value as usize] += 1;
        }
        let mut missing = None;
        for (n, &count) in hist.iter().enumerate() {
            let want = binomial(c, n as u32);
            if count == want {
                continue;
            }
            if count + 1 == want && missing.is_none() {
                missing = Some(n as u32);
            } else {
                return Err(Error::Reconstruction(format!(
                    "column {} holds label {n} {count} times, expected {want} or one fewer",
                    col + 1
                )));
            }
        }
        let value = missing.ok_or_else(|| {
            Error::Reconstruction(format!("column {} is not missing any label", col + 1))
        })?;
        let bars = m.column_bar_count(col);
        let bar = if bars == half {
            false
        } else if c >= 2 && bars == half - 1 {
            true
        } else if bars == 0 {
            if c == 1 {
                undetermined.push(col);
            }
            false
        } else {
            return Err(Error::Reconstruction(format!(
                "column {} carries {bars} bars, expected 0, {} or {half}",
                col + 1,
                half - 1
            )));
        };
        cells.push(Cell { value, bar });
    }
    let row = LabeledSequence(cells);
    if let Some(j) = row.first_non_unit_step() {
        return Err(Error::Reconstruction(format!(
            "restored row {row} breaks the unit step law after column {}",
            j + 1
        )));
    }
    let n = row.len();
    for (j, cell) in row.cells().iter().enumerate() {
        let prev = row.0[(j + n - 1) % n].value;
        if cell.bar && cell.value != prev + 1 {
            return Err(Error::Reconstruction(format!(
                "restored bar at column {} does not follow an overcrossing",
                j + 1
            )));
        }
    }
    let mut rows = m.rows().to_vec();
    rows.push(row.clone());
    let matrix = WarpingMatrix::new(c, MatrixKind::SignedProjection, rows)?;
    Ok(RestoredRow {
        matrix,
        row,
        undetermined_bars: undetermined,
    })
}

/// Oriented diagram recovered from `M(D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramReconstruction {
    pub diagram: OrientedKnotDiagram,
    /// Crossings whose sign came from the bar pairing rather than the column
    /// count (see [`RestoredRow::undetermined_bars`]).
    pub signs_from_pairing: Vec<u32>,
}

/// Restores the missing row, reads the chord diagram from the completed
/// matrix and orients and signs the chords with the restored row.
///
/// For every crossing exactly one of the two cells following its visits is
/// barred in all `2^(c-1)` rows where that visit is over, and never otherwise.
/// When the count leaves a cell open this decides it: the cell is barred iff
/// the column after the partner visit shows no bar in `M(D)`.
pub fn reconstruct_diagram(m: &WarpingMatrix) -> Result<DiagramReconstruction> {
    let restored = restore_missing_row(m)?;
    let projection = reconstruct_projection(&restored.matrix.unsigned())?;
    let word = projection.projection.word();
    let n = word.len();
    let c = n / 2;
    let half = 1usize << (c - 1);
    let row = &restored.row;

    let strands: Vec<Strand> = (0..n)
        .map(|j| {
            if row.0[(j + 1) % n].value > row.0[j].value {
                Strand::Over
            } else {
                Strand::Under
            }
        })
        .collect();

    let mut partner = vec![0usize; n];
    for &(a, b) in &projection.pairs {
        partner[a] = b;
        partner[b] = a;
    }

    let mut signs = vec![Sign::Positive; c];
    let mut from_pairing = Vec::new();
    for j in 0..n {
        if strands[j] != Strand::Over {
            continue;
        }
        let id = word[j];
        let after = (j + 1) % n;
        let barred = if restored.undetermined_bars.contains(&after) {
            from_pairing.push(id);
            let partner_after = (partner[j] + 1) % n;
            m.column_bar_count(partner_after) != half
        } else {
            row.0[after].bar
        };
        if barred {
            signs[(id - 1) as usize] = Sign::Negative;
        }
    }
    from_pairing.sort_unstable();

    let visits = word
        .iter()
        .zip(&strands)
        .map(|(&crossing, &strand)| Visit { crossing, strand })
        .collect();
    let diagram = OrientedKnotDiagram::new(visits, signs)
        .map_err(|e| Error::Reconstruction(format!("restored row is not a diagram: {e}")))?;
    Ok(DiagramReconstruction {
        diagram,
        signs_from_pairing: from_pairing,
    })
}
