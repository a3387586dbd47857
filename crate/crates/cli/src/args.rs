use clap::{Args, Parser, Subcommand, ValueEnum};

use warping_core::{MatrixKind, RuleSet};

#[derive(Debug, Parser)]
#[command(
    name = "warping",
    version,
    about = "Warping matrices of oriented knot diagrams"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Warping matrix M(P) of the projection of a knot.
    Matrix(KnotInput),
    /// M(P) with signed rows.
    SignedMatrix(KnotInput),
    /// Warping matrix M(D) of a diagram.
    DiagramMatrix(KnotInput),
    /// Check the matrix rules.
    Verify(MatrixInput),
    /// Recover the projection or diagram from a matrix.
    Reconstruct(MatrixInput),
    /// Canonical representative up to row swaps and column shifts.
    Canon {
        #[command(flatten)]
        input: MatrixInput,
        /// Also identify matrices related by reversing the columns.
        #[arg(long)]
        reflect: bool,
    },
    /// Puzzle grids.
    #[command(subcommand)]
    Puzzle(PuzzleCommand),
    /// All rule-satisfying matrices for small c, one per class.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
        c: u32,
        #[arg(long, default_value = "all")]
        rules: RuleSet,
        /// Do not identify matrices related by reversing the columns.
        #[arg(long)]
        no_reflection: bool,
    },
    /// Run the HTTP puzzle service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Session lifetime in hours.
        #[arg(long, default_value_t = 24)]
        ttl_hours: u64,
    },
}

#[derive(Debug, Args)]
pub struct KnotInput {
    /// Gauss code, preset name, diagram JSON, or a file holding one. Reads
    /// stdin when absent or `-`.
    pub knot: Option<String>,
}

#[derive(Debug, Args)]
pub struct MatrixInput {
    /// Matrix file (text or JSON). Reads stdin when absent or `-`.
    pub file: Option<String>,
    /// Matrix kind; inferred from the row count when absent.
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<MatrixKind>,
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse().map_err(|e: warping_core::Error| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum PuzzleCommand {
    /// Make a puzzle with a unique completion.
    New {
        /// Gauss code, preset name, or a file holding one. Without a seed a
        /// preset gives its fixed grid.
        knot: Option<String>,
        #[arg(long, default_value = "all")]
        rules: RuleSet,
        #[arg(long)]
        seed: Option<u64>,
        /// Stop removing cells once this many clues remain.
        #[arg(long, default_value_t = 0)]
        target_clues: usize,
        /// Solver used for the uniqueness checks.
        #[arg(long, default_value = warping_core::puzzle::DEFAULT_SOLVER)]
        solver: String,
    },
    /// Complete a grid.
    Solve {
        /// Grid file (text or JSON). Reads stdin when absent or `-`.
        file: Option<String>,
        #[arg(long, default_value = "i,ii")]
        rules: RuleSet,
        /// Stop after this many completions.
        #[arg(long, default_value_t = 100)]
        limit: usize,
        #[arg(long, default_value = warping_core::puzzle::DEFAULT_SOLVER)]
        solver: String,
    },
    /// List rule violations in a (partial) grid.
    Check {
        file: Option<String>,
        #[arg(long, default_value = "all")]
        rules: RuleSet,
    },
}
