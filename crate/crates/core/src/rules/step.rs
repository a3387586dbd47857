use super::{CellView, Location, Rule, RuleId, Violation, Witness};

/// Rule `i`.
pub struct UnitStep;

/// Cyclically adjacent column pairs `(j, j + 1)`; a two-column grid has one.
fn adjacent_pairs(cols: usize) -> impl Iterator<Item = (usize, usize)> {
    let count = if cols == 2 { 1 } else { cols };
    (0..count).map(move |j| (j, (j + 1) % cols))
}

impl Rule for UnitStep {
    fn id(&self) -> RuleId {
        RuleId::UnitStep
    }

    fn description(&self) -> &'static str {
        "adjacent labels in a row, including last and first, differ by exactly one"
    }

    fn check_complete(&self, view: &CellView<'_>) -> Option<Witness> {
        for row in 0..view.rows {
            for (col, next_col) in adjacent_pairs(view.cols) {
                let (Some(left), Some(right)) = (view.get(row, col), view.get(row, next_col))
                else {
                    continue;
                };
                if left.abs_diff(right) != 1 {
                    return Some(Witness::Step {
                        row,
                        col,
                        next_col,
                        left,
                        right,
                    });
                }
            }
        }
        None
    }

    fn check_partial(&self, view: &CellView<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for row in 0..view.rows {
            for (col, next_col) in adjacent_pairs(view.cols) {
                if let (Some(left), Some(right)) = (view.get(row, col), view.get(row, next_col)) {
                    if left.abs_diff(right) != 1 {
                        out.push(Violation {
                            rule: RuleId::UnitStep,
                            location: Location::Cells {
                                row,
                                cols: [col, next_col],
                            },
                            message: format!(
                                "{left} and {right} are adjacent but do not differ by one"
                            ),
                        });
                    }
                }
            }
        }
        out
    }
}
