//! knotforge: exact-arithmetic computations on knot and link diagrams.

pub mod diagram;
pub mod group;
pub mod invariants;
pub mod laurent;
pub mod sr;

pub use diagram::{KnotDiagram, LinkDiagram, PatternDiagram};
pub use group::{GroupPresentation, Word};
pub use invariants::{BlanchfieldForm, ObstructionReport, SeifertMatrix};
pub use laurent::{LaurentPoly, MultiLaurentPoly, RationalFunctionModLambda};
pub use sr::{Dyadic, SRColoring, SRElement, SRGroupRingElement};
