use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A strictly increasing list of at least two rational abscissae.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct PointSet {
    xs: Vec<Rational>,
}

impl PointSet {
    pub fn new(xs: Vec<Rational>) -> Result<Self> {
        if xs.len() < 2 {
            return Err(Error::InvalidPointSet(format!(
                "need at least 2 points, got {}",
                xs.len()
            )));
        }
        if let Some(w) = xs.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPointSet(format!(
                "points must be strictly increasing ({} is followed by {})",
                w[0], w[1]
            )));
        }
        Ok(PointSet { xs })
    }

    /// `start, start + step, ..., start + (count - 1) * step`.
    pub fn arithmetic(start: &Rational, step: &Rational, count: usize) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::InvalidPointSet(format!("step must be positive, got {step}")));
        }
        Self::new(
            (0..count)
                .map(|i| start + &(step * &Rational::from(i)))
                .collect(),
        )
    }

    /// `{1, 2, ..., k}`.
    pub fn integers(k: usize) -> Result<Self> {
        Self::arithmetic(&Rational::one(), &Rational::one(), k)
    }

    pub fn xs(&self) -> &[Rational] {
        &self.xs
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    /// Always false; kept alongside `len` for clippy.
    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn first(&self) -> &Rational {
        &self.xs[0]
    }

    pub fn last(&self) -> &Rational {
        &self.xs[self.xs.len() - 1]
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.xs.binary_search(x).is_ok()
    }

    /// The common difference if the points form an arithmetic progression.
    pub fn arithmetic_step(&self) -> Option<Rational> {
        let step = &self.xs[1] - &self.xs[0];
        self.xs
            .windows(2)
            .all(|w| &w[1] - &w[0] == step)
            .then_some(step)
    }

    /// True when the set is exactly `{1, ..., k}`.
    pub fn is_unit_range(&self) -> bool {
        self.first().is_one() && self.arithmetic_step().is_some_and(|s| s.is_one())
    }

    /// Image under `x -> scale * x + shift`; `scale` must be positive so the
    /// order is preserved.
    pub fn map_affine(&self, scale: &Rational, shift: &Rational) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::InvalidPointSet(format!(
                "affine image needs a positive scale, got {scale}"
            )));
        }
        Self::new(self.xs.iter().map(|x| scale * x + shift).collect())
    }
}

impl TryFrom<Vec<Rational>> for PointSet {
    type Error = Error;

    fn try_from(xs: Vec<Rational>) -> Result<Self> {
        Self::new(xs)
    }
}

impl From<PointSet> for Vec<Rational> {
    fn from(ps: PointSet) -> Self {
        ps.xs
    }
}
