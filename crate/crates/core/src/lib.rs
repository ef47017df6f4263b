//! Exact symbolic engine for holomorphic solutions of the supersymmetric
//! Grassmannian sigma model `G(M, N)`: Grassmann-valued super matrices over
//! rational functions with radical coefficients, MacFarlane-form solutions,
//! their gauge reduction, and the constant-curvature example catalogue.
//!
//! The algebra is generic over the coefficient [`scalar::Scalar`]; the type
//! aliases below fix the exact instantiation used throughout.

pub mod curvature;
pub mod error;
pub mod examples;
pub mod gauge;
pub mod grassmann;
pub mod parser;
pub mod poly;
pub mod random;
pub mod ratfunc;
pub mod scalar;
pub mod report;
pub mod superfield;
pub mod supermatrix;

pub use error::AlgebraError;
pub use poly::{Monomial, Var};
pub use scalar::{GaussianRational, RadicalScalar, Rational, Scalar, ToComplex64};

/// Exact polynomial in `x+`, `x-`.
pub type Poly = poly::Poly<RadicalScalar>;
/// Exact rational function in `x+`, `x-`.
pub type RatFunc = ratfunc::RatFunc<RadicalScalar>;
/// Exterior-algebra element with rational-function coefficients.
pub type GrassmannElem = grassmann::Grassmann<RatFunc>;
/// Matrix of [`GrassmannElem`].
pub type SuperMatrix = supermatrix::SuperMatrix<RatFunc>;
/// Floating-point super matrix used by numeric sampling oracles.
pub type NumericSuperMatrix = supermatrix::SuperMatrix<num_complex::Complex64>;
