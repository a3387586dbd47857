use super::{binomial, CellView, Location, Rule, RuleId, Violation, Witness};

/// Rule `ii`.
pub struct ColumnHistogram;

fn column_histogram(view: &CellView<'_>, col: usize) -> Vec<u64> {
    let mut hist = vec![0u64; view.c as usize + 1];
    for row in 0..view.rows {
        if let Some(v) = view.get(row, col) {
            if let Some(slot) = hist.get_mut(v as usize) {
                *slot += 1;
            }
        }
    }
    hist
}

fn expected(c: u32) -> Vec<u64> {
    (0..=c).map(|n| binomial(c, n)).collect()
}

fn out_of_range(view: &CellView<'_>, col: usize) -> Option<u32> {
    (0..view.rows)
        .filter_map(|r| view.get(r, col))
        .find(|&v| v > view.c)
}

/// Rule `ii` for a grid missing one row: each column falls short of the
/// binomial histogram by exactly one label.
pub(super) fn check_one_short(view: &CellView<'_>) -> Option<Witness> {
    let want = expected(view.c);
    for col in 0..view.cols {
        let hist = column_histogram(view, col);
        let shortfall: u64 = want
            .iter()
            .zip(&hist)
            .map(|(w, h)| w.saturating_sub(*h))
            .sum();
        let excess = want.iter().zip(&hist).any(|(w, h)| h > w);
        if excess || shortfall != 1 || out_of_range(view, col).is_some() {
            return Some(Witness::Histogram {
                col,
                histogram: hist,
                expected: want,
            });
        }
    }
    None
}

impl Rule for ColumnHistogram {
    fn id(&self) -> RuleId {
        RuleId::ColumnHistogram
    }

    fn description(&self) -> &'static str {
        "every column holds label n exactly C(c, n) times"
    }

    fn check_complete(&self, view: &CellView<'_>) -> Option<Witness> {
        let want = expected(view.c);
        (0..view.cols).find_map(|col| {
            let hist = column_histogram(view, col);
            (hist != want || out_of_range(view, col).is_some()).then(|| Witness::Histogram {
                col,
                histogram: hist,
                expected: want.clone(),
            })
        })
    }

    fn check_partial(&self, view: &CellView<'_>) -> Vec<Violation> {
        let want = expected(view.c);
        let mut out = Vec::new();
        for col in 0..view.cols {
            if let Some(v) = out_of_range(view, col) {
                out.push(Violation {
                    rule: RuleId::ColumnHistogram,
                    location: Location::Column { col, value: v },
                    message: format!("label {v} exceeds c = {}", view.c),
                });
            }
            let hist = column_histogram(view, col);
            for (n, (&have, &need)) in hist.iter().zip(&want).enumerate() {
                if have > need {
                    out.push(Violation {
                        rule: RuleId::ColumnHistogram,
                        location: Location::Column {
                            col,
                            value: n as u32,
                        },
                        message: format!(
                            "{n} appears {have} times in column {}, at most {need} allowed",
                            col + 1
                        ),
                    });
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c1_column_counts() {
        let ok = [Some(0), Some(1), Some(1), Some(0)];
        assert_eq!(
            ColumnHistogram.check_complete(&CellView::new(1, 2, 2, &ok)),
            None
        );
        let bad = [Some(0), Some(1), Some(0), Some(0)];
        assert!(matches!(
            ColumnHistogram.check_complete(&CellView::new(1, 2, 2, &bad)),
            Some(Witness::Histogram { col: 0, .. })
        ));
        let partial = [Some(0), None, Some(0), None];
        let v = ColumnHistogram.check_partial(&CellView::new(1, 2, 2, &partial));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].location, Location::Column { col: 0, value: 0 });
    }
}
