use thiserror::Error;

use crate::rational::{ParseRationalError, Rational};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(Rational),

    #[error("interpolation needs at least one point")]
    EmptyInterpolation,

    #[error("affine map with zero scale is not invertible")]
    DegenerateMap,

    #[error("the zero polynomial has no lead coefficient")]
    ZeroPolynomial,

    #[error("expected a polynomial of degree {expected}, found degree {found:?}")]
    DegreeMismatch { expected: usize, found: Option<usize> },

    /// With `points <= degree` the roots can be placed on every point, so the
    /// polynomial vanishes on the set and the lead coefficient is unbounded.
    #[error(
        "no maximum lead coefficient: {points} point(s) cannot bound a degree {degree} \
         polynomial (need more points than the degree)"
    )]
    NoMaximum { degree: usize, points: usize },

    #[error("degree {0} is not supported here")]
    UnsupportedDegree(usize),

    #[error("invalid point set: {0}")]
    InvalidPointSet(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}
