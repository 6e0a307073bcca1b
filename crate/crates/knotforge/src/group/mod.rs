//! Free-group words, group presentations, Fox calculus and Wirtinger
//! presentations of diagrams.

mod fox;
mod presentation;
mod ring;
mod wirtinger;
mod word;

pub use fox::fox_derivative;
pub use presentation::{
    abelianization_divisors, alexander_matrix, alexander_matrix_two_variable, apply_substitution,
    is_wirtinger_deficiency_one, GroupPresentation,
};
pub use ring::FreeGroupRingElement;
pub use wirtinger::wirtinger;
pub use word::{Letter, Word};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("generator index {0} out of range (presentation has {1} generators)")]
    GeneratorOutOfRange(usize, usize),
    #[error("substitution maps are not mutually inverse on generator {0}")]
    NotInverse(String),
    #[error("weights are not a homomorphism: relator {0} has weighted exponent sum {1}")]
    NotAHomomorphism(usize, i64),
    #[error("parse error at byte {pos}: {reason}")]
    Parse { pos: usize, reason: String },
}
