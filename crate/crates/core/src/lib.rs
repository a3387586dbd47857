//! Warping matrices of oriented knot projections and diagrams.
//!
//! * [`knot`]: Gauss codes, warping degrees and (signed) labelings.
//! * [`matrix`]: building `M(P)`, `m(P)` and `M(D)`, the difference
//!   transform, reconstruction of projections and diagrams, and canonical
//!   forms up to row swaps and cyclic column shifts.
//! * [`rules`]: the four matrix laws as registered, interchangeable checks.
//! * [`puzzle`]: the grid puzzle built on those laws, with registered solver
//!   strategies, a unique-solution generator and class enumeration.

pub mod error;
pub mod knot;
pub mod labels;
pub mod matrix;
pub mod puzzle;
pub mod random;
pub mod rules;

pub use error::{Error, Result};
pub use knot::{
    parse_gauss_code, EdgeIndex, KnotProjection, OrientedKnotDiagram, Sign, Strand, Visit,
};
pub use labels::{Cell, LabeledSequence};
pub use matrix::{
    build_diagram_matrix, build_projection_matrix, build_signed_matrix, canonical_form,
    difference_transform, equivalent, reconstruct_diagram, reconstruct_projection,
    restore_missing_row, MatrixKind, WarpingMatrix,
};
pub use puzzle::PuzzleGrid;
pub use rules::{verify_rules, RuleId, RuleReport, RuleSet};

/// Matrices have `2^c` rows; larger crossing counts are refused.
pub const MAX_MATRIX_CROSSINGS: u32 = 16;

/// Standard trefoil diagram, alternating.
pub const TREFOIL_CODE: &str = "O1+U2+O3+U1+O2+U3+";

/// Alternating diagram on the standard figure-eight projection. Only the
/// projection matters for puzzles; the signs are placeholders.
pub const FIGURE_EIGHT_CODE: &str = "O1+U2+O3+U1+O4+U3+O2+U4+";
