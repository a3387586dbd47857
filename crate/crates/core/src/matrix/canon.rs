use crate::labels::{Cell, LabeledSequence};
use crate::matrix::WarpingMatrix;

fn transformed_rows(m: &WarpingMatrix, shift: usize, reflect: bool) -> Vec<LabeledSequence> {
    let n = m.column_count();
    let mut rows: Vec<LabeledSequence> = m
        .rows()
        .iter()
        .map(|r| {
            let cells: Vec<Cell> = (0..n)
                .map(|j| {
                    let src = if reflect { (n - 1 + n - j) % n } else { j };
                    r.0[(src + shift) % n]
                })
                .collect();
            LabeledSequence(cells)
        })
        .collect();
    rows.sort_unstable();
    rows
}

/// Representative of the orbit under row permutations and cyclic column
/// shifts, plus column reversal when `allow_reflection` is set: the
/// lexicographically least row-sorted image. Cells order as `(value, bar)`.
pub fn canonical_form(m: &WarpingMatrix, allow_reflection: bool) -> WarpingMatrix {
    let n = m.column_count();
    let reflections: &[bool] = if allow_reflection {
        &[false, true]
    } else {
        &[false]
    };
    let best = reflections
        .iter()
        .flat_map(|&reflect| (0..n).map(move |shift| (shift, reflect)))
        .map(|(shift, reflect)| transformed_rows(m, shift, reflect))
        .min()
        .unwrap_or_default();
    m.with_rows(m.kind(), best)
}

pub fn equivalent(a: &WarpingMatrix, b: &WarpingMatrix, allow_reflection: bool) -> bool {
    a.c() == b.c()
        && a.row_count() == b.row_count()
        && canonical_form(a, allow_reflection).rows() == canonical_form(b, allow_reflection).rows()
}
