//! The two clue grids of the original puzzle: a trefoil projection (`c = 3`)
//! and a figure-eight projection (`c = 4`).

use crate::puzzle::PuzzleGrid;

pub const TREFOIL_TEXT: &str = include_str!("../../fixtures/trefoil.grid");
pub const FIGURE_EIGHT_TEXT: &str = include_str!("../../fixtures/figure8.grid");

pub fn trefoil() -> PuzzleGrid {
    PuzzleGrid::parse_text(TREFOIL_TEXT).expect("trefoil fixture")
}

pub fn figure_eight() -> PuzzleGrid {
    PuzzleGrid::parse_text(FIGURE_EIGHT_TEXT).expect("figure-eight fixture")
}

/// Fixture grid by preset name (`trefoil`, `figure8`).
pub fn preset(name: &str) -> Option<PuzzleGrid> {
    match name {
        "trefoil" => Some(trefoil()),
        "figure8" | "figure-eight" => Some(figure_eight()),
        _ => None,
    }
}

/// Gauss code of the standard projection behind each preset.
pub fn preset_code(name: &str) -> Option<&'static str> {
    match name {
        "trefoil" => Some(crate::TREFOIL_CODE),
        "figure8" | "figure-eight" => Some(crate::FIGURE_EIGHT_CODE),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{build_projection_matrix, equivalent};
    use crate::parse_gauss_code;
    use crate::puzzle::solve;
    use crate::rules::RuleSet;

    #[test]
    fn clue_counts() {
        assert_eq!((trefoil().rows(), trefoil().cols()), (8, 6));
        assert_eq!(trefoil().clue_count(), 15);
        assert_eq!((figure_eight().rows(), figure_eight().cols()), (16, 8));
    }

    #[test]
    fn completions_match_preset_projections() {
        for name in ["trefoil", "figure8"] {
            let solutions = solve(&preset(name).unwrap(), &RuleSet::basic(), 2);
            assert_eq!(solutions.len(), 1, "{name}");
            let code = parse_gauss_code(preset_code(name).unwrap()).unwrap();
            let reference = build_projection_matrix(&code).unwrap();
            assert!(equivalent(
                &solutions[0].to_matrix().unwrap(),
                &reference,
                false
            ));
        }
    }

    #[test]
    fn unknown_preset() {
        assert!(preset("unknot").is_none());
        assert!(preset_code("unknot").is_none());
    }
}
