use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::{canonical_form, WarpingMatrix};
use crate::puzzle::solver::RowSearch;
use crate::rules::RuleSet;

pub const MAX_ENUMERATION_CROSSINGS: u32 = 3;

/// All `2^c × 2c` matrices satisfying `rules`, one canonical representative
/// per class under row swaps, cyclic column shifts and, if asked, column
/// reversal. Sorted by their text form.
pub fn enumerate_matrices(
    c: u32,
    rules: &RuleSet,
    allow_reflection: bool,
) -> Result<Vec<WarpingMatrix>> {
    if c == 0 {
        return Err(Error::NoCrossings);
    }
    if c > MAX_ENUMERATION_CROSSINGS {
        return Err(Error::TooManyCrossings(c));
    }
    let mut classes = BTreeMap::new();
    for grid in RowSearch::row_multisets(c, rules) {
        let canon = canonical_form(&grid.to_matrix()?, allow_reflection);
        classes.entry(canon.to_text()).or_insert(canon);
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c1_and_c2_have_one_class() {
        let one = enumerate_matrices(1, &RuleSet::all(), true).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_text(), "0 1\n1 0\n");
        assert_eq!(
            enumerate_matrices(2, &RuleSet::all(), true).unwrap().len(),
            1
        );
    }

    #[test]
    fn budget() {
        assert!(enumerate_matrices(4, &RuleSet::all(), true).is_err());
        assert!(enumerate_matrices(0, &RuleSet::all(), true).is_err());
    }
}
