//! Concordance invariants: Alexander polynomials by two routes, the Arf
//! invariant, Blanchfield pairings and metabolizers, satellite formulas,
//! link Alexander nontriviality, and the composite obstruction report.

mod alexander;
mod blanchfield;
mod link_alexander;
mod report;
mod seifert;

pub use alexander::{
    alexander_from_diagram, alexander_from_seifert, arf_invariant, satellite_alexander,
};
pub use blanchfield::{blanchfield_form, is_metabolizer, metabolizer_scan, BlanchfieldForm};
pub use link_alexander::{link_alexander_nontrivial, LinkAlexanderVerdict};
pub use report::{obstruction_report, ObstructionReport, TestStatus, Verdict};
pub use seifert::SeifertMatrix;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("not a Seifert matrix: {0}")]
    BadSeifertMatrix(String),
    #[error("expected a knot (1 component), found {0} components")]
    NotAKnot(usize),
    #[error("singular presentation matrix")]
    Singular,
    #[error("module element has {found} coordinates, module has rank {expected}")]
    WrongRank { expected: usize, found: usize },
    #[error("Alexander polynomial routes disagree: diagram gives {diagram}, Seifert gives {seifert}")]
    RouteDisagreement { diagram: String, seifert: String },
    #[error(transparent)]
    Algebra(#[from] crate::laurent::AlgebraError),
    #[error(transparent)]
    Diagram(#[from] crate::diagram::DiagramError),
    #[error(transparent)]
    Presentation(#[from] crate::group::PresentationError),
}
