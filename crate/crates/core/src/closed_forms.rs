//! Closed-form extremal lead coefficients and polynomials for degrees 1 to 4
//! on arithmetic progressions.
//!
//! Everything is derived in the centered coordinate, where `{1..k}` becomes
//! `{-(k-1)/2, ..., (k-1)/2}` and the extremal polynomial is even or odd.
//! The bound `M` and step `Δ` only enter through the factor `M / Δ^d`.

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormQuery {
    pub degree: usize,
    /// Number of points in the progression.
    pub k: usize,
    /// Bound `M` on `|Q(x)|`.
    pub bound: Rational,
    /// Progression step `Δ`.
    pub step: Rational,
}

impl ClosedFormQuery {
    pub fn new(degree: usize, k: usize, bound: Rational, step: Rational) -> Self {
        ClosedFormQuery { degree, k, bound, step }
    }

    /// `M = 1`, `Δ = 1`.
    pub fn unit(degree: usize, k: usize) -> Self {
        Self::new(degree, k, Rational::one(), Rational::one())
    }
}

fn check_degree(d: usize, k: usize) -> Result<()> {
    if !(1..=4).contains(&d) {
        return Err(Error::UnsupportedDegree(d));
    }
    if k <= d {
        return Err(Error::NoMaximum { degree: d, points: k });
    }
    Ok(())
}

/// Maximum lead coefficient of a degree `d` polynomial with `|Q| <= M` on a
/// `k`-term progression with step `Δ`.
pub fn lead_coefficient_closed_form(query: &ClosedFormQuery) -> Result<Rational> {
    check_degree(query.degree, query.k)?;
    if !query.bound.is_positive() {
        return Err(Error::InvalidQuery(format!("bound must be positive, got {}", query.bound)));
    }
    if !query.step.is_positive() {
        return Err(Error::InvalidQuery(format!("step must be positive, got {}", query.step)));
    }
    let unit = unit_lead(query.degree, query.k)?;
    Ok(unit * &query.bound / query.step.pow(query.degree as i32))
}

fn unit_lead(d: usize, k: usize) -> Result<Rational> {
    let kr = Rational::from(k);
    let one = Rational::one();
    let km1 = &kr - &one;
    Ok(match d {
        1 => Rational::from(2) / km1,
        2 if k % 2 == 1 => Rational::from(8) / km1.pow(2),
        2 => Rational::from(8) / (&kr * (&kr - Rational::from(2))),
        3 => {
            let denom = match k % 4 {
                1 => km1.pow(3),
                3 => (&kr + &one) * &km1 * (&kr - Rational::from(3)),
                _ => &kr * &km1 * (&kr - Rational::from(2)),
            };
            Rational::from(32) / denom
        }
        4 => quartic_bound(k)?.value,
        _ => return Err(Error::UnsupportedDegree(d)),
    })
}

/// Diagnostics for the degree 4 minimisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticBound {
    /// The maximum lead coefficient on `{1..k}`.
    pub value: Rational,
    /// Positive centered-coordinate grid points attaining `value`; more than
    /// one on ties.
    pub minimizers: Vec<Rational>,
    /// The two grid neighbours of the continuous minimiser `(k-1)/(2√2)`:
    /// integers for odd `k`, halves of integers for even `k`. Informational
    /// only; some of them are off-grid or make the bound's denominator vanish.
    pub hint_points: Vec<Rational>,
}

/// Degree 4 lead coefficient on `{1..k}`: the smallest upper bound that the
/// lower constraint `L >= -1` imposes at an interior grid point.
///
/// For odd `k` the centered polynomial satisfies `L(0) = 1` and the bound at
/// `x` is `8 / (x^2 (k-1)^2 - 4x^4)`; for even `k` it satisfies `L(1/2) = 1`
/// and the bound is `-32 / (16x^4 - 4((k-1)^2 + 1)x^2 + (k-1)^2)`. Points whose
/// bound is not positive and finite impose nothing.
pub fn quartic_bound(k: usize) -> Result<QuarticBound> {
    check_degree(4, k)?;
    let km1 = Rational::from(k - 1);
    let km1_sq = km1.pow(2);
    let odd = k % 2 == 1;

    // interior centered grid points x > 0, excluding the endpoint (k-1)/2
    let candidates: Vec<Rational> = if odd {
        (1..(k - 1) / 2).map(Rational::from).collect()
    } else {
        (1..(k - 2) / 2).map(|j| Rational::new(2 * j as i64 + 1, 2)).collect()
    };

    let mut best: Option<(Rational, Vec<Rational>)> = None;
    for x in candidates {
        let x2 = x.pow(2);
        let x4 = x.pow(4);
        let (numer, denom) = if odd {
            (Rational::from(8), &x2 * &km1_sq - Rational::from(4) * &x4)
        } else {
            let d = Rational::from(16) * &x4
                - Rational::from(4) * (&km1_sq + Rational::one()) * &x2
                + &km1_sq;
            (Rational::from(32), -d)
        };
        if !denom.is_positive() {
            continue;
        }
        let bound = numer / denom;
        match &mut best {
            Some((v, xs)) if bound == *v => xs.push(x),
            Some((v, _)) if bound > *v => {}
            _ => best = Some((bound, vec![x])),
        }
    }
    let (value, minimizers) = best.ok_or_else(|| {
        Error::InternalInconsistency(format!("no binding degree 4 constraint for k = {k}"))
    })?;

    Ok(QuarticBound {
        value,
        minimizers,
        hint_points: quartic_hint_points(k),
    })
}

/// Floor and ceiling of `(k-1)/(2√2)` (odd `k`), or half the floor and
/// ceiling of `(k-1)/√2` (even `k`), in exact integer arithmetic.
fn quartic_hint_points(k: usize) -> Vec<Rational> {
    let n = (k as u64 - 1).pow(2);
    // floor(sqrt(n / c)) == isqrt(floor(n / c))
    let (c, halve) = if k % 2 == 1 { (8, false) } else { (2, true) };
    let lo = (n / c).sqrt();
    let hi = if lo * lo * c == n { lo } else { lo + 1 };
    let mut pts = vec![lo];
    if hi != lo {
        pts.push(hi);
    }
    pts.into_iter()
        .map(|m| {
            if halve {
                Rational::new(m as i64, 2)
            } else {
                Rational::from(m)
            }
        })
        .collect()
}

/// The extremal polynomial in the centered coordinate
/// `{-(k-1)/2, ..., (k-1)/2}`.
pub fn centered_closed_form(d: usize, k: usize) -> Result<Polynomial> {
    check_degree(d, k)?;
    let lead = unit_lead(d, k)?;
    let km1 = Rational::from(k - 1);
    let half_width = &km1 / Rational::from(2);
    let one = Rational::one();
    let coeffs = match d {
        1 => vec![Rational::zero(), lead],
        2 => {
            let a0 = &one - &lead * half_width.pow(2);
            vec![a0, Rational::zero(), lead]
        }
        3 => {
            let a1 = (Rational::from(8) - &lead * km1.pow(3)) / (Rational::from(4) * &km1);
            vec![Rational::zero(), a1, Rational::zero(), lead]
        }
        _ if k % 2 == 1 => {
            let a2 = -(&lead * half_width.pow(2));
            vec![one, Rational::zero(), a2, Rational::zero(), lead]
        }
        _ => {
            let km1_sq = km1.pow(2);
            let a0 = &lead * &km1_sq / Rational::from(16) + &one;
            let a2 = -(&lead * (&km1_sq + &one) / Rational::from(4));
            vec![a0, Rational::zero(), a2, Rational::zero(), lead]
        }
    };
    Ok(Polynomial::new(coeffs))
}

/// The extremal polynomial on `{1..k}` (`M = 1`, `Δ = 1`).
pub fn closed_form_polynomial(d: usize, k: usize) -> Result<Polynomial> {
    let centered = centered_closed_form(d, k)?;
    let center = Rational::new(k as i64 + 1, 2);
    centered.affine_compose(&Rational::one(), &-center)
}
