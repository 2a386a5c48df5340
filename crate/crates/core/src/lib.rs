//! Polynomials of maximum lead coefficient bounded by 1 on a finite set of
//! rational points, computed in exact arithmetic.
//!
//! [`solver::solve`] handles any degree and point set. [`closed_forms`] gives
//! the degree 1 to 4 answers on arithmetic progressions directly, and
//! [`chebyshev`] relates the results to Chebyshev polynomials on `[-1, 1]`.

pub mod chebyshev;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod points;
pub mod poly;
pub mod rational;
pub mod solver;

pub use chebyshev::{
    chebyshev_t, continuous_lead_bound, correction_term, map_from_unit, map_to_unit, AffineMap,
    CorrectionTerm,
};
pub use closed_forms::{
    closed_form_polynomial, lead_coefficient_closed_form, quartic_bound, ClosedFormQuery,
    QuarticBound,
};
pub use error::{Error, Result};
pub use points::PointSet;
pub use poly::Polynomial;
pub use rational::Rational;
pub use solver::{
    solve, solve_parallel, verify, AlternationCertificate, ExtremalResult, VerificationReport,
};
