use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::knot::OrientedKnotDiagram;
use crate::matrix::build_projection_matrix;
use crate::puzzle::solver::{solver, Solver, DEFAULT_SOLVER};
use crate::puzzle::{validate, PuzzleGrid};
use crate::rules::RuleSet;

/// Largest crossing count the generator accepts; every removal re-solves.
pub const MAX_GENERATION_CROSSINGS: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub grid: PuzzleGrid,
    /// The projection matrix of the reference, the unique completion of `grid`.
    pub solution: PuzzleGrid,
    /// False when no further cell could be removed before reaching the
    /// requested clue count.
    pub reached_target: bool,
}

/// Removes cells of `M(P)` in seeded random order as long as the puzzle keeps
/// exactly one completion, stopping once `target_clues` remain.
pub fn generate(
    reference: &OrientedKnotDiagram,
    rules: &RuleSet,
    seed: u64,
    target_clues: usize,
) -> Result<Generated> {
    generate_with(
        solver(DEFAULT_SOLVER)?,
        reference,
        rules,
        seed,
        target_clues,
    )
}

pub fn generate_with(
    solver: &dyn Solver,
    reference: &OrientedKnotDiagram,
    rules: &RuleSet,
    seed: u64,
    target_clues: usize,
) -> Result<Generated> {
    let c = reference.crossing_count();
    if c > MAX_GENERATION_CROSSINGS {
        return Err(Error::TooManyCrossings(c));
    }
    let solution = PuzzleGrid::from_matrix(&build_projection_matrix(reference)?)?;
    if let Some(v) = validate(&solution, rules).first() {
        return Err(Error::RuleBroken(v.rule));
    }
    let mut grid = solution.clone();
    let mut order: Vec<usize> = (0..grid.cells().len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let cols = grid.cols();
    for idx in order {
        if grid.clue_count() <= target_clues {
            break;
        }
        let (r, j) = (idx / cols, idx % cols);
        let kept = grid.get(r, j);
        grid.set(r, j, None)?;
        if solver.solve(&grid, rules, 2).len() != 1 {
            grid.set(r, j, kept)?;
        }
    }
    let reached_target = grid.clue_count() <= target_clues;
    Ok(Generated {
        grid,
        solution,
        reached_target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::parse_gauss_code;
    use crate::puzzle::solve;

    #[test]
    fn trefoil_puzzle_is_unique() {
        let t = parse_gauss_code(crate::TREFOIL_CODE).unwrap();
        let g = generate(&t, &RuleSet::basic(), 11, 0).unwrap();
        let sols = solve(&g.grid, &RuleSet::basic(), 2);
        assert_eq!(sols, vec![g.solution.clone()]);
        assert!(g.grid.clue_count() < 48);
    }

    #[test]
    fn full_target_keeps_everything() {
        let t = parse_gauss_code(crate::TREFOIL_CODE).unwrap();
        let g = generate(&t, &RuleSet::basic(), 3, 48).unwrap();
        assert_eq!(g.grid, g.solution);
        assert!(g.reached_target);
    }

    #[test]
    fn non_planar_word_breaks_rule_iv() {
        let virtual_twist = parse_gauss_code("O1+U2+U1+O2+").unwrap();
        assert_eq!(
            generate(&virtual_twist, &RuleSet::all(), 0, 0),
            Err(Error::RuleBroken(crate::rules::RuleId::AlternatingRows))
        );
        assert!(generate(&virtual_twist, &RuleSet::basic(), 0, 0).is_ok());
    }

    #[test]
    fn curl_with_one_clue() {
        let curl = parse_gauss_code("O1+U1+").unwrap();
        let g = generate(&curl, &RuleSet::basic(), 0, 1).unwrap();
        assert_eq!(g.grid.clue_count(), 1);
        assert_eq!(solve(&g.grid, &RuleSet::basic(), 2).len(), 1);
    }
}
