use super::{CellView, Location, Rule, RuleId, Violation, Witness};

/// Rule `iii`.
pub struct ComplementPairs;

/// Pairs each row, in order, with the only unpaired row equal to its
/// complement `c - row`.
pub(crate) fn complement_matching(view: &CellView<'_>) -> Result<Vec<(usize, usize)>, Witness> {
    let rows: Vec<Vec<u32>> = (0..view.rows)
        .map(|r| view.row_values(r).expect("complete grid"))
        .collect();
    let c = view.c;
    let mut used = vec![false; rows.len()];
    let mut pairs = Vec::with_capacity(rows.len() / 2);
    for i in 0..rows.len() {
        if used[i] {
            continue;
        }
        let target: Option<Vec<u32>> = rows[i].iter().map(|&v| c.checked_sub(v)).collect();
        let candidates: Vec<usize> = match &target {
            Some(t) => (i + 1..rows.len())
                .filter(|&j| !used[j] && rows[j] == *t)
                .collect(),
            None => Vec::new(),
        };
        match candidates.as_slice() {
            [] => return Err(Witness::UnpairedRow { row: i }),
            [j] => {
                used[i] = true;
                used[*j] = true;
                pairs.push((i, *j));
            }
            _ => return Err(Witness::AmbiguousPair { row: i, candidates }),
        }
    }
    Ok(pairs)
}

/// Whether `other`'s filled cells agree with the complement of `full`.
fn could_complement(c: u32, full: &[u32], other: &[Option<u32>]) -> bool {
    full.iter().zip(other).all(|(&v, o)| match o {
        Some(w) => v + w == c,
        None => v <= c,
    })
}

impl Rule for ComplementPairs {
    fn id(&self) -> RuleId {
        RuleId::ComplementPairs
    }

    fn description(&self) -> &'static str {
        "rows split uniquely into pairs whose sum is the constant row (c … c)"
    }

    fn check_complete(&self, view: &CellView<'_>) -> Option<Witness> {
        complement_matching(view).err()
    }

    fn check_partial(&self, view: &CellView<'_>) -> Vec<Violation> {
        if view.is_complete() {
            return self
                .check_complete(view)
                .map(|w| Violation::from_witness(RuleId::ComplementPairs, w))
                .into_iter()
                .collect();
        }
        let mut out = Vec::new();
        for r in 0..view.rows {
            let Some(full) = view.row_values(r) else {
                continue;
            };
            let partner =
                (0..view.rows).any(|s| s != r && could_complement(view.c, &full, view.row(s)));
            if !partner {
                out.push(Violation {
                    rule: RuleId::ComplementPairs,
                    location: Location::Rows { rows: vec![r] },
                    message: format!("no row can complete row {} to the constant row", r + 1),
                });
            }
        }
        out
    }
}
