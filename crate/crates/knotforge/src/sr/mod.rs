//! The solvable ribbon group `SR = Z ⋉ Z[1/2]` (the Baumslag–Solitar
//! group B(1,2)): exact normal forms, group-ring arithmetic, diagram
//! colorings and loop evaluation.

mod coloring;
mod dyadic;
mod element;
mod ring;

pub use coloring::{
    evaluate_loop, is_surjective_coloring, sr_coloring_solve, ColoringError, SRColoring,
    SRColoringSpace,
};
pub use dyadic::Dyadic;
pub use element::{evaluate_word, SRElement};
pub use ring::{ideal_membership_check, IdealCheckReport, SRGroupRingElement};
