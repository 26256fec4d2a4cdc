//! Bounds on the second Hankel determinant `|a2 a4 - a3^2|` for normalized
//! analytic functions `f(z) = z + a2 z^2 + ...` in four subordination classes,
//! together with a brute-force verifier.
//!
//! A target `phi(z) = 1 + B1 z + B2 z^2 + B3 z^3 + ...` with `B1 > 0` and a
//! class give a closed-form bound:
//!
//! ```
//! use hankel_bounds::{second_hankel_bound, Branch, ClassSpec, Preset};
//!
//! let phi = Preset::Lemniscate.coefficients()?;
//! let result = second_hankel_bound(&ClassSpec::starlike(phi));
//! assert!((result.bound - 1.0 / 16.0).abs() < 1e-15);
//! assert_eq!(result.branch, Branch::CaseR);
//! # Ok::<(), hankel_bounds::Error>(())
//! ```
//!
//! The verifier searches the Carathéodory parameterization for the largest
//! value actually attained:
//!
//! ```
//! use hankel_bounds::{empirical_sup, ClassSpec, Grid, Preset};
//!
//! let spec = ClassSpec::starlike(Preset::HalfPlane.coefficients()?);
//! let report = empirical_sup(&spec, Grid::new(16, 8, 16)?)?;
//! assert!(report.margin >= -1e-12);
//! # Ok::<(), hankel_bounds::Error>(())
//! ```
//!
//! Modules, bottom up: [`series`] (truncated power series), [`targets`]
//! (the `B` coefficients), [`classes`] (extracting `a2, a3, a4`), [`bounds`]
//! (the closed forms) and [`verify`].

pub mod bounds;
pub mod classes;
pub mod error;
pub mod series;
pub mod targets;
pub mod verify;

pub use bounds::{profile, quad_max, robust_quad_max, second_hankel_bound, BoundResult, Branch, QuadraticProfile};
pub use classes::{
    coefficients_from_c, coefficients_from_schwarz, hankel2, hankel_generic, ClassKind, ClassSpec,
    CoefficientMap, CoefficientTriple,
};
pub use error::{Error, Result};
pub use series::{elementary, Elementary, TruncatedSeries, WORKING_ORDER};
pub use targets::{preset, PhiCoefficients, Preset};
pub use verify::{
    caratheodory_expand, check_caratheodory_bounds, check_mu_monotone, empirical_sup, sup_over,
    CaratheodoryPoint, Grid, VerificationReport,
};
