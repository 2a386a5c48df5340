//! Chebyshev polynomials of the first kind and the affine maps that relate a
//! point set's hull `[x_1, x_k]` to `[-1, 1]`.

use crate::error::{Error, Result};
use crate::points::PointSet;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// `x -> scale * x + shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub scale: Rational,
    pub shift: Rational,
}

impl AffineMap {
    pub fn new(scale: Rational, shift: Rational) -> Self {
        AffineMap { scale, shift }
    }

    pub fn identity() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        &self.scale * x + &self.shift
    }

    /// `self` after `inner`: `x -> self(inner(x))`.
    pub fn after(&self, inner: &AffineMap) -> AffineMap {
        AffineMap::new(
            &self.scale * &inner.scale,
            &self.scale * &inner.shift + &self.shift,
        )
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        if self.scale.is_zero() {
            return Err(Error::DegenerateMap);
        }
        let scale = self.scale.recip();
        let shift = -(&self.shift * &scale);
        Ok(AffineMap::new(scale, shift))
    }

    /// `p(self(x))`.
    pub fn pull_back(&self, p: &Polynomial) -> Result<Polynomial> {
        p.affine_compose(&self.scale, &self.shift)
    }
}

/// `T_d` from `T_0 = 1`, `T_1 = x`, `T_{n+1} = 2x T_n - T_{n-1}`.
pub fn chebyshev_t(d: usize) -> Polynomial {
    let two_x = Polynomial::monomial(Rational::from(2), 1);
    let mut prev = Polynomial::constant(Rational::one());
    if d == 0 {
        return prev;
    }
    let mut cur = Polynomial::x();
    for _ in 1..d {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `s(x) = (2x - (x_k + x_1)) / (x_k - x_1)`, sending `x_1 -> -1` and `x_k -> 1`.
pub fn map_to_unit(ps: &PointSet) -> AffineMap {
    let width = ps.last() - ps.first();
    let scale = Rational::from(2) / &width;
    let shift = -((ps.last() + ps.first()) / width);
    AffineMap::new(scale, shift)
}

/// `t(x) = (k-1)/2 * x + (k+1)/2`, sending `-1 -> 1` and `1 -> k`.
pub fn map_from_unit(k: usize) -> Result<AffineMap> {
    if k < 2 {
        return Err(Error::InvalidPointSet(format!("need k >= 2, got {k}")));
    }
    let k = Rational::from(k);
    let half = Rational::new(1, 2);
    Ok(AffineMap::new(
        (&k - Rational::one()) * &half,
        (&k + Rational::one()) * &half,
    ))
}

/// Lead coefficient of `T_d(s(x))`: `2^(2d-1) / (x_k - x_1)^d`.
///
/// Every polynomial bounded by 1 on the whole interval is also bounded on any
/// finite subset of it, so this never exceeds the discrete optimum.
///
/// Panics unless `d >= 1` and `xk > x1`.
pub fn continuous_lead_bound(d: usize, x1: &Rational, xk: &Rational) -> Rational {
    assert!(d >= 1, "degree must be at least 1");
    assert!(xk > x1, "interval must be non-degenerate");
    Rational::from(2).pow(2 * d as i32 - 1) / (xk - x1).pow(d as i32)
}

/// `L(t(x)) - T_d(x)` for an extremal polynomial `L` on `{1..k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionTerm {
    pub delta: Polynomial,
}

pub fn correction_term(l: &Polynomial, d: usize, k: usize) -> Result<CorrectionTerm> {
    if l.degree() != Some(d) {
        return Err(Error::DegreeMismatch {
            expected: d,
            found: l.degree(),
        });
    }
    let on_unit = map_from_unit(k)?.pull_back(l)?;
    Ok(CorrectionTerm {
        delta: &on_unit - &chebyshev_t(d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn ints(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| q(c, 1)).collect())
    }

    /// `outer(inner(x))` by Horner over the polynomial ring.
    fn compose(outer: &Polynomial, inner: &Polynomial) -> Polynomial {
        outer
            .coefficients()
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, c| &(&acc * inner) + &Polynomial::constant(c.clone()))
    }

    #[test]
    fn first_few_chebyshev() {
        assert_eq!(chebyshev_t(0), ints(&[1]));
        assert_eq!(chebyshev_t(1), ints(&[0, 1]));
        assert_eq!(chebyshev_t(2), ints(&[-1, 0, 2]));
        assert_eq!(chebyshev_t(3), ints(&[0, -3, 0, 4]));
        assert_eq!(chebyshev_t(4), ints(&[1, 0, -8, 0, 8]));
        assert_eq!(chebyshev_t(5), ints(&[0, 5, 0, -20, 0, 16]));
    }

    #[test]
    fn chebyshev_endpoints_and_lead() {
        for d in 0..=12 {
            let t = chebyshev_t(d);
            assert_eq!(t.eval(&q(1, 1)), q(1, 1));
            assert_eq!(t.eval(&q(-1, 1)), Rational::sign_power(d));
            if d >= 1 {
                assert_eq!(t.lead_coefficient().unwrap(), &Rational::from(2).pow(d as i32 - 1));
            }
        }
    }

    #[test]
    fn chebyshev_nesting() {
        for m in 0..=3 {
            for n in 0..=3 {
                assert_eq!(compose(&chebyshev_t(m), &chebyshev_t(n)), chebyshev_t(m * n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn unit_maps() {
        let sym = PointSet::new(vec![q(-1, 1), q(1, 1)]).unwrap();
        assert_eq!(map_to_unit(&sym), AffineMap::new(q(1, 1), q(0, 1)));
        let three = PointSet::integers(3).unwrap();
        assert_eq!(map_to_unit(&three), AffineMap::new(q(1, 1), q(-2, 1)));
        let seven = PointSet::integers(7).unwrap();
        assert_eq!(map_to_unit(&seven), AffineMap::new(q(1, 3), q(-4, 3)));

        assert_eq!(map_from_unit(3).unwrap(), AffineMap::new(q(1, 1), q(2, 1)));
        assert_eq!(map_from_unit(2).unwrap(), AffineMap::new(q(1, 2), q(3, 2)));
        assert_eq!(map_from_unit(6).unwrap(), AffineMap::new(q(5, 2), q(7, 2)));
        assert!(map_from_unit(1).is_err());
    }

    #[test]
    fn unit_maps_are_inverse() {
        for k in 2..=20 {
            let ps = PointSet::integers(k).unwrap();
            let to = map_to_unit(&ps);
            let from = map_from_unit(k).unwrap();
            assert_eq!(to.after(&from), AffineMap::identity());
            assert_eq!(from.after(&to), AffineMap::identity());
            assert_eq!(from.apply(&q(-1, 1)), q(1, 1));
            assert_eq!(from.apply(&q(1, 1)), q(k as i64, 1));
            assert_eq!(to.inverse().unwrap(), from);
        }
        assert_eq!(AffineMap::new(q(0, 1), q(1, 1)).inverse(), Err(Error::DegenerateMap));
    }

    #[test]
    fn continuous_bound_examples() {
        assert_eq!(continuous_lead_bound(1, &q(-1, 1), &q(1, 1)), q(1, 1));
        assert_eq!(continuous_lead_bound(2, &q(1, 1), &q(3, 1)), q(2, 1));
        assert_eq!(continuous_lead_bound(4, &q(1, 1), &q(5, 1)), q(1, 2));
    }

    #[test]
    fn continuous_bound_matches_stretched_chebyshev() {
        for d in 1..=6 {
            let ps = PointSet::new(vec![q(-3, 2), q(7, 3)]).unwrap();
            let stretched = map_to_unit(&ps).pull_back(&chebyshev_t(d)).unwrap();
            assert_eq!(
                stretched.lead_coefficient().unwrap(),
                &continuous_lead_bound(d, ps.first(), ps.last())
            );
        }
    }

    #[test]
    fn correction_rejects_degree_mismatch() {
        assert_eq!(
            correction_term(&ints(&[7, -8, 2]), 3, 3),
            Err(Error::DegreeMismatch { expected: 3, found: Some(2) })
        );
        assert_eq!(
            correction_term(&Polynomial::zero(), 1, 3),
            Err(Error::DegreeMismatch { expected: 1, found: None })
        );
    }

    #[test]
    fn correction_of_small_cases() {
        // L_{2,[3]} = 2x^2 - 8x + 7 composes to exactly T_2
        let c = correction_term(&ints(&[7, -8, 2]), 2, 3).unwrap();
        assert!(c.delta.is_zero());
        // L_{1,[k]} composes to x for any k
        let l = Polynomial::new(vec![q(-6, 4), q(2, 4)]);
        assert!(correction_term(&l, 1, 5).unwrap().delta.is_zero());
    }
}
