use super::{CellView, Location, Rule, RuleId, Violation, Witness};

/// Rule `iv`.
pub struct AlternatingRows;

fn is_alternating(row: &[u32]) -> bool {
    row.len() >= 2
        && row.iter().step_by(2).all(|&v| v == row[0])
        && row.iter().skip(1).step_by(2).all(|&v| v == row[1])
        && row[0].abs_diff(row[1]) == 1
}

/// Whether the filled cells of `row` fit some alternating row.
fn could_alternate(row: &[Option<u32>]) -> bool {
    let mut even = None;
    let mut odd = None;
    for (j, cell) in row.iter().enumerate() {
        let Some(v) = *cell else { continue };
        let slot = if j % 2 == 0 { &mut even } else { &mut odd };
        match *slot {
            Some(prev) if prev != v => return false,
            _ => *slot = Some(v),
        }
    }
    match (even, odd) {
        (Some(a), Some(b)) => a.abs_diff(b) == 1,
        _ => true,
    }
}

/// The two alternating rows must start one upward at `k` and one downward
/// at `l` with `k + l = c`. Invariant under cyclic column shifts.
fn check_pair(c: u32, rows: &[(usize, &[u32])]) -> Option<Witness> {
    let indices: Vec<usize> = rows.iter().map(|(i, _)| *i).collect();
    if rows.len() != 2 {
        return Some(Witness::Alternating {
            rows: indices,
            reason: format!("{} alternating rows, expected exactly 2", rows.len()),
        });
    }
    let (up, down): (Vec<&(usize, &[u32])>, Vec<_>) = rows.iter().partition(|(_, r)| r[1] > r[0]);
    if up.len() != 1 || down.len() != 1 {
        return Some(Witness::Alternating {
            rows: indices,
            reason: "both alternating rows start in the same direction".into(),
        });
    }
    let k = up[0].1[0];
    let l = down[0].1[0];
    if k + l != c {
        return Some(Witness::Alternating {
            rows: indices,
            reason: format!("k + l = {k} + {l} differs from c = {c}"),
        });
    }
    None
}

impl Rule for AlternatingRows {
    fn id(&self) -> RuleId {
        RuleId::AlternatingRows
    }

    fn description(&self) -> &'static str {
        "exactly two rows alternate, (k k+1 …) and (l l-1 …) with k + l = c"
    }

    fn check_complete(&self, view: &CellView<'_>) -> Option<Witness> {
        let rows: Vec<(usize, Vec<u32>)> = (0..view.rows)
            .map(|r| (r, view.row_values(r).expect("complete grid")))
            .filter(|(_, v)| is_alternating(v))
            .collect();
        let refs: Vec<(usize, &[u32])> = rows.iter().map(|(i, v)| (*i, v.as_slice())).collect();
        check_pair(view.c, &refs)
    }

    fn check_partial(&self, view: &CellView<'_>) -> Vec<Violation> {
        let violation = |rows: Vec<usize>, message: String| Violation {
            rule: RuleId::AlternatingRows,
            location: Location::Rows { rows },
            message,
        };
        if view.is_complete() {
            return self
                .check_complete(view)
                .map(|w| Violation::from_witness(RuleId::AlternatingRows, w))
                .into_iter()
                .collect();
        }
        let full: Vec<(usize, Vec<u32>)> = (0..view.rows)
            .filter_map(|r| view.row_values(r).map(|v| (r, v)))
            .filter(|(_, v)| is_alternating(v))
            .collect();
        if full.len() > 2 {
            return vec![violation(
                full.iter().map(|(i, _)| *i).collect(),
                format!("{} alternating rows, at most 2 allowed", full.len()),
            )];
        }
        if full.len() == 2 {
            let refs: Vec<(usize, &[u32])> = full.iter().map(|(i, v)| (*i, v.as_slice())).collect();
            if let Some(Witness::Alternating { rows, reason }) = check_pair(view.c, &refs) {
                return vec![violation(rows, reason)];
            }
        }
        let possible = (0..view.rows)
            .filter(|&r| could_alternate(view.row(r)))
            .count();
        if possible < 2 {
            return vec![violation(
                Vec::new(),
                format!("only {possible} rows can still alternate, 2 are needed"),
            )];
        }
        Vec::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(rows: &[&[u32]]) -> Vec<Option<u32>> {
        rows.iter()
            .flat_map(|r| r.iter().map(|&v| Some(v)))
            .collect()
    }

    #[test]
    fn c2_matrix_passes() {
        let cells = grid(&[&[0, 1, 2, 1], &[1, 0, 1, 0], &[1, 2, 1, 2], &[2, 1, 0, 1]]);
        assert_eq!(
            AlternatingRows.check_complete(&CellView::new(2, 4, 4, &cells)),
            None
        );
    }

    #[test]
    fn shifted_columns_still_pass() {
        let cells = grid(&[&[1, 2, 1, 0], &[0, 1, 0, 1], &[2, 1, 2, 1], &[1, 0, 1, 2]]);
        assert_eq!(
            AlternatingRows.check_complete(&CellView::new(2, 4, 4, &cells)),
            None
        );
    }

    #[test]
    fn wrong_sum_fails() {
        let cells = grid(&[&[0, 1, 0, 1], &[1, 0, 1, 0], &[1, 2, 1, 2], &[2, 1, 0, 1]]);
        assert!(matches!(
            AlternatingRows.check_complete(&CellView::new(2, 4, 4, &cells)),
            Some(Witness::Alternating { .. })
        ));
    }

    #[test]
    fn partial_needs_two_candidates() {
        let cells = [
            Some(0),
            Some(1),
            Some(2),
            None,
            Some(1),
            Some(2),
            Some(3),
            None,
        ];
        let v = AlternatingRows.check_partial(&CellView::new(2, 2, 4, &cells));
        assert_eq!(v.len(), 1);
        assert!(could_alternate(&[Some(1), None, Some(1), Some(2)]));
        assert!(!could_alternate(&[Some(1), None, Some(3), None]));
    }
}
