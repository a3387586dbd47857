use std::process::ExitCode;
use std::time::Duration;

use serde_json::{json, Value};

use warping_core::matrix::DiagramReconstruction;
use warping_core::puzzle::{
    enumerate_matrices, fixtures, generate_with, solver, validate, PuzzleGrid,
};
use warping_core::{
    build_diagram_matrix, build_projection_matrix, build_signed_matrix, canonical_form,
    reconstruct_diagram, reconstruct_projection, verify_rules, Error, MatrixKind, WarpingMatrix,
};

use crate::args::{Cli, Command, Format, MatrixInput, PuzzleCommand};
use crate::input;

/// Exit code for a completed check that found problems.
const FOUND_PROBLEMS: u8 = 1;

struct Out {
    format: Format,
}

impl Out {
    fn emit(&self, text: impl AsRef<str>, json: impl FnOnce() -> Value) {
        match self.format {
            Format::Text => print!("{}", text.as_ref()),
            Format::Json => println!("{}", json()),
        }
    }

    fn matrix(&self, m: &WarpingMatrix) {
        self.emit(m.to_text(), || m.to_json());
    }

    fn grid(&self, g: &PuzzleGrid) {
        self.emit(g.to_text(), || g.to_json());
    }
}

fn read_matrix(input: &MatrixInput) -> Result<WarpingMatrix, Error> {
    WarpingMatrix::parse_any(&input::read(input.file.as_deref())?, input.kind)
}

fn read_grid(file: Option<&str>) -> Result<PuzzleGrid, Error> {
    PuzzleGrid::parse_any(&input::read(file)?)
}

pub fn run(cli: Cli) -> Result<ExitCode, Error> {
    let out = Out { format: cli.format };
    match cli.command {
        Command::Matrix(k) => {
            out.matrix(&build_projection_matrix(&input::knot(k.knot.as_deref())?)?)
        }
        Command::SignedMatrix(k) => {
            out.matrix(&build_signed_matrix(&input::knot(k.knot.as_deref())?)?)
        }
        Command::DiagramMatrix(k) => {
            out.matrix(&build_diagram_matrix(&input::knot(k.knot.as_deref())?)?)
        }
        Command::Verify(input) => {
            let m = read_matrix(&input)?;
            let report = verify_rules(&m);
            out.emit(report.to_string(), || {
                json!({
                    "kind": m.kind(),
                    "c": m.c(),
                    "all_pass": report.all_pass(),
                    "no_failures": report.no_failures(),
                    "outcomes": report.outcomes,
                })
            });
            if !report.no_failures() {
                return Ok(ExitCode::from(FOUND_PROBLEMS));
            }
        }
        Command::Reconstruct(input) => reconstruct(&out, &read_matrix(&input)?)?,
        Command::Canon { input, reflect } => {
            out.matrix(&canonical_form(&read_matrix(&input)?, reflect))
        }
        Command::Puzzle(p) => return puzzle(&out, p),
        Command::Enumerate {
            c,
            rules,
            no_reflection,
        } => {
            let classes = enumerate_matrices(c, &rules, !no_reflection)?;
            let mut text = String::new();
            for m in &classes {
                text.push_str(&m.to_text());
                text.push('\n');
            }
            text.push_str(&format!("{} equivalence classes\n", classes.len()));
            out.emit(text, || {
                json!({
                    "c": c,
                    "rules": rules,
                    "reflection": !no_reflection,
                    "count": classes.len(),
                    "classes": classes.iter().map(WarpingMatrix::to_json).collect::<Vec<_>>(),
                })
            });
        }
        Command::Serve { port, ttl_hours } => {
            tracing_subscriber::fmt()
                .with_writer(std::io::stderr)
                .init();
            let runtime =
                tokio::runtime::Runtime::new().map_err(|e| Error::Internal(e.to_string()))?;
            runtime
                .block_on(warping_service::serve(
                    port,
                    Duration::from_secs(ttl_hours * 3600),
                ))
                .map_err(|e| Error::Internal(e.to_string()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn reconstruct(out: &Out, m: &WarpingMatrix) -> Result<(), Error> {
    if m.kind() != MatrixKind::Diagram {
        let rec = reconstruct_projection(m)?;
        let word = rec.projection.to_string();
        out.emit(format!("{word}\n"), || {
            json!({
                "kind": "projection",
                "word": rec.projection.word(),
                "pairs": rec.pairs,
            })
        });
        return Ok(());
    }
    let DiagramReconstruction {
        diagram,
        signs_from_pairing,
    } = reconstruct_diagram(m)?;
    if !signs_from_pairing.is_empty() && out.format == Format::Text {
        eprintln!(
            "note: bar counts leave the sign of crossing(s) {signs_from_pairing:?} open; resolved by column pairing"
        );
    }
    out.emit(format!("{}\n", diagram.to_gauss_code()), || {
        let mut v = diagram.to_json();
        v["kind"] = json!("diagram");
        v["gauss_code"] = json!(diagram.to_gauss_code());
        v["signs_from_pairing"] = json!(signs_from_pairing);
        v
    });
    Ok(())
}

fn puzzle(out: &Out, cmd: PuzzleCommand) -> Result<ExitCode, Error> {
    match cmd {
        PuzzleCommand::New {
            knot,
            rules,
            seed,
            target_clues,
            solver: name,
        } => {
            let text = input::read(knot.as_deref())?;
            if let (Some(grid), None) = (fixtures::preset(text.trim()), seed) {
                out.grid(&grid);
                return Ok(ExitCode::SUCCESS);
            }
            let d = input::knot(Some(text.trim()))?;
            let g = generate_with(solver(&name)?, &d, &rules, seed.unwrap_or(0), target_clues)?;
            if !g.reached_target {
                eprintln!(
                    "note: no unique puzzle with {target_clues} clues; stopped at {}",
                    g.grid.clue_count()
                );
            }
            out.grid(&g.grid);
        }
        PuzzleCommand::Solve {
            file,
            rules,
            limit,
            solver: name,
        } => {
            let grid = read_grid(file.as_deref())?;
            let solutions = solver(&name)?.solve(&grid, &rules, limit.max(1));
            let texts: Vec<String> = solutions.iter().map(PuzzleGrid::to_text).collect();
            out.emit(texts.join("\n"), || {
                json!({
                    "count": solutions.len(),
                    "limit": limit,
                    "solutions": solutions.iter().map(PuzzleGrid::to_json).collect::<Vec<_>>(),
                })
            });
            if out.format == Format::Text {
                let capped = if solutions.len() >= limit {
                    " (limit reached)"
                } else {
                    ""
                };
                eprintln!("{} solution(s){capped}", solutions.len());
            }
            if solutions.is_empty() {
                return Ok(ExitCode::from(FOUND_PROBLEMS));
            }
        }
        PuzzleCommand::Check { file, rules } => {
            let grid = read_grid(file.as_deref())?;
            let violations = validate(&grid, &rules);
            let mut text = String::new();
            for v in &violations {
                text.push_str(&format!("rule {}: {}\n", v.rule, v.message));
            }
            if violations.is_empty() {
                text.push_str(if grid.is_complete() {
                    "ok, complete\n"
                } else {
                    "ok\n"
                });
            }
            out.emit(text, || {
                json!({
                    "complete": grid.is_complete(),
                    "violations": violations,
                })
            });
            if !violations.is_empty() {
                return Ok(ExitCode::from(FOUND_PROBLEMS));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
