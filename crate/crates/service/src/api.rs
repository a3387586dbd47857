use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::Json;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use warping_core::puzzle::{fixtures, generate, solve, validate as check, PuzzleGrid};
use warping_core::rules::{binomial, Violation};
use warping_core::{parse_gauss_code, RuleSet};

use crate::error::ApiError;
use crate::session::{Session, SessionStore};

/// Rules as `"i,ii"`, `"all"` or `["i", "ii"]`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RulesParam {
    Text(String),
    List(Vec<String>),
}

impl RulesParam {
    fn parse(&self) -> Result<RuleSet, ApiError> {
        let text = match self {
            RulesParam::Text(t) => t.clone(),
            RulesParam::List(l) => l.join(","),
        };
        text.parse()
            .map_err(|e: warping_core::Error| ApiError::BadRequest(e.to_string()))
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct NewPuzzleRequest {
    /// A Gauss code or a preset name (`trefoil`, `figure8`).
    pub knot: String,
    #[serde(default)]
    pub rules: Option<RulesParam>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub target_clues: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NewPuzzleResponse {
    pub session_id: String,
    pub c: u32,
    pub grid: serde_json::Value,
    pub rules: RuleSet,
    pub clue_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
struct CellsRequest {
    cells: Vec<Vec<Option<u32>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidateResponse {
    pub violations: Vec<Violation>,
    pub solved: bool,
    pub complete: bool,
    pub clues_kept: bool,
    pub matches_solution: bool,
    pub satisfies_all_rules: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HintResponse {
    pub row: usize,
    pub col: usize,
    pub digit: u32,
}

fn body<T: DeserializeOwned>(bytes: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(bytes).map_err(|e| ApiError::BadRequest(e.to_string()))
}

fn session(store: &SessionStore, id: &str) -> Result<std::sync::Arc<Session>, ApiError> {
    store
        .get(id)
        .ok_or_else(|| ApiError::UnknownSession(id.to_string()))
}

fn working_grid(s: &Session, bytes: &Bytes) -> Result<PuzzleGrid, ApiError> {
    let req: CellsRequest = body(bytes)?;
    PuzzleGrid::from_rows(s.c(), req.cells).map_err(|e| ApiError::BadRequest(e.to_string()))
}

struct Created {
    clues: PuzzleGrid,
    solution: PuzzleGrid,
    notice: Option<String>,
}

fn create(req: &NewPuzzleRequest, rules: &RuleSet) -> Result<Created, ApiError> {
    let name = req.knot.trim();
    if let (Some(grid), None) = (fixtures::preset(name), req.seed) {
        let mut solutions = solve(&grid, rules, 2);
        if solutions.len() != 1 {
            return Err(ApiError::Unprocessable(format!(
                "preset {name} has {} completions under rules {rules}",
                if solutions.is_empty() {
                    "no"
                } else {
                    "several"
                }
            )));
        }
        return Ok(Created {
            clues: grid,
            solution: solutions.remove(0),
            notice: None,
        });
    }
    let code = fixtures::preset_code(name).unwrap_or(name);
    let d = parse_gauss_code(code).map_err(|e| ApiError::BadRequest(e.to_string()))?;
    let target = req.target_clues.unwrap_or(0);
    let g =
        generate(&d, rules, req.seed.unwrap_or(0), target).map_err(ApiError::from_generation)?;
    let notice = (!g.reached_target).then(|| {
        format!(
            "no unique puzzle with {target} clues found; stopped at {}",
            g.grid.clue_count()
        )
    });
    Ok(Created {
        clues: g.grid,
        solution: g.solution,
        notice,
    })
}

pub(crate) async fn new_puzzle(
    State(store): State<SessionStore>,
    bytes: Bytes,
) -> Result<Json<NewPuzzleResponse>, ApiError> {
    let req: NewPuzzleRequest = body(&bytes)?;
    let rules = match &req.rules {
        Some(r) => r.parse()?,
        None => RuleSet::all(),
    };
    let created = {
        let (req, rules) = (req.clone(), rules.clone());
        tokio::task::spawn_blocking(move || create(&req, &rules))
            .await
            .map_err(|e| ApiError::Internal(e.to_string()))??
    };
    let s = store.insert(rules, created.clues, created.solution);
    Ok(Json(NewPuzzleResponse {
        session_id: s.id.clone(),
        c: s.c(),
        grid: s.clues.to_json(),
        rules: s.rules.clone(),
        clue_count: s.clues.clue_count(),
        notice: created.notice,
    }))
}

pub(crate) async fn validate(
    State(store): State<SessionStore>,
    Path(id): Path<String>,
    bytes: Bytes,
) -> Result<Json<ValidateResponse>, ApiError> {
    let s = session(&store, &id)?;
    let grid = working_grid(&s, &bytes)?;
    let violations = check(&grid, &s.rules);
    let complete = grid.is_complete();
    let clues_kept = s.clues.agrees_with(&grid);
    let matches_solution = grid == s.solution;
    let satisfies_all_rules = complete && check(&grid, &RuleSet::all()).is_empty();
    let solved = complete
        && clues_kept
        && violations.is_empty()
        && (!s.rules.is_subset_of_basic() || matches_solution || satisfies_all_rules);
    Ok(Json(ValidateResponse {
        violations,
        solved,
        complete,
        clues_kept,
        matches_solution,
        satisfies_all_rules,
    }))
}

pub(crate) async fn hint(
    State(store): State<SessionStore>,
    Path(id): Path<String>,
    bytes: Bytes,
) -> Result<Json<HintResponse>, ApiError> {
    let s = session(&store, &id)?;
    let grid = working_grid(&s, &bytes)?;
    let (row, col) = most_constrained(&grid).ok_or(ApiError::Complete)?;
    let digit = s
        .solution
        .get(row, col)
        .ok_or_else(|| ApiError::Internal("stored solution has a hole".into()))?;
    Ok(Json(HintResponse { row, col, digit }))
}

/// The empty cell with the fewest digits allowed by its row's filled cells
/// and its column's remaining counts; ties go to the first in row order.
fn most_constrained(grid: &PuzzleGrid) -> Option<(usize, usize)> {
    let c = grid.c();
    let n = grid.cols();
    let mut best: Option<(usize, (usize, usize))> = None;
    for r in 0..grid.rows() {
        for j in 0..n {
            if grid.get(r, j).is_some() {
                continue;
            }
            let allowed = (0..=c)
                .filter(|&v| {
                    let used = (0..grid.rows())
                        .filter(|&q| grid.get(q, j) == Some(v))
                        .count();
                    (used as u64) < binomial(c, v)
                        && (0..n).all(|k| match grid.get(r, k) {
                            Some(x) => {
                                let gap = j.abs_diff(k).min(n - j.abs_diff(k));
                                let diff = v.abs_diff(x) as usize;
                                diff <= gap && (gap - diff).is_multiple_of(2)
                            }
                            None => true,
                        })
                })
                .count();
            if best.is_none_or(|(b, _)| allowed < b) {
                best = Some((allowed, (r, j)));
            }
        }
    }
    best.map(|(_, cell)| cell)
}
