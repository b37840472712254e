//! Exact symbolic engine for real and complex Dunkl operators attached to
//! rational root systems.
//!
//! Coefficients are Gaussian rationals ([`Scalar`]), polynomials are sparse
//! ([`Polynomial`]), and every identity checker returns an exact value that
//! is zero exactly when the identity holds.
//!
//! ```
//! use dunkl::{DunklContext, MultiplicityFunction, RootSystem, Scalar, parse_polynomial};
//!
//! let system = RootSystem::from_name("A1dim1").unwrap();
//! let kappa = MultiplicityFunction::constant(&system, Scalar::frac(1, 2));
//! let ctx = DunklContext::new(system, kappa).unwrap();
//! let p = parse_polynomial("z1^3", 1).unwrap();
//! assert_eq!(ctx.dunkl_j(&p, 0).unwrap().to_string(), "4*z1^2");
//! ```

pub mod cli;
pub mod dunkl;
pub mod error;
pub mod linalg;
pub mod parse;
pub mod polynomial;
pub mod rootsystem;
pub mod sampling;
pub mod scalar;
pub mod verify;

pub use dunkl::{
    bilinear_form_b, directional_derivative, rho, CommutatorDenominator, DifferenceWeight,
    DunklContext,
};
pub use error::{DunklError, PolynomialError, RootSystemError};
pub use linalg::{Matrix, RationalVector};
pub use parse::{parse_polynomial, parse_scalar, parse_vector, ParseError};
pub use polynomial::{Monomial, Polynomial, PolynomialJson};
pub use rootsystem::{
    apply_group_element, positive_subsystem, reflection_matrix, Family, GroupElement,
    MultiplicityFunction, OrbitDecomposition, RootSystem, RootSystemJson,
};
pub use scalar::Scalar;
pub use verify::{run_suite, RunReport, Suite, VerifyConfig};
