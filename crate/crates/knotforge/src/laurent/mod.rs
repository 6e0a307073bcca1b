//! Exact arithmetic in Z[t^±1], Q[t^±1] and Z[x^±1, y^±1].

mod factor;
mod matrix;
mod multi;
mod poly;
mod qlaurent;
mod ratfun;

pub use factor::{factor_primitive, fox_milnor_factor};
pub use matrix::{
    det_bigint, det_laurent, det_multi, kernel_basis_int, smith_normal_form_int,
    smith_normal_form_qlaurent, LaurentSnf, SnfInt, SnfQLaurent,
};
pub use multi::{multivariate_gcd, MultiLaurentPoly};
pub use poly::{LaurentPoly, ParsePolyError};
pub use qlaurent::QLaurent;
pub use ratfun::RationalFunctionModLambda;

use thiserror::Error;

/// Errors raised by polynomial and matrix algebra.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("all inputs are zero")]
    AllZero,
    #[error("polynomial is not a knot polynomial: p(1) = {0}, expected ±1")]
    NotAKnotPolynomial(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("inexact division")]
    InexactDivision,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
