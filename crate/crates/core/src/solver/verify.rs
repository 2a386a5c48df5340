use serde::{Deserialize, Serialize};

use super::{solve, ExtremalResult};
use crate::points::PointSet;
use crate::rational::Rational;

/// Outcome of re-checking the structural properties of an extremal result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// `L(x_1) = (-1)^d` and `L(x_k) = 1`.
    pub terminal_ok: bool,
    /// `|L(x)| <= 1` on every point.
    pub bounded_ok: bool,
    /// The certificate is `d + 1` increasing set points from `x_1` to `x_k`
    /// where `L` alternates `±1` starting at `(-1)^d`.
    pub alternation_ok: bool,
    /// Strict sign changes along `L(x_1), ..., L(x_k)`, zeros skipped.
    pub sign_change_count: usize,
    /// `L` has degree `d`, its recorded lead matches, and a fresh
    /// enumeration finds exactly this polynomial as the unique maximiser.
    pub unique_max_ok: bool,
}

impl VerificationReport {
    pub fn passed(&self, degree: usize) -> bool {
        self.terminal_ok
            && self.bounded_ok
            && self.alternation_ok
            && self.unique_max_ok
            && self.sign_change_count == degree
    }
}

/// Counts strict sign changes, ignoring zero entries.
pub fn sign_changes(values: &[Rational]) -> usize {
    let mut last = 0;
    let mut count = 0;
    for v in values {
        let s = v.signum();
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Re-checks `result` against `(ps, d)` in exact arithmetic. Failures are
/// reported, never raised.
///
/// `d` sign changes along the grid force `d` distinct real roots inside
/// `(x_1, x_k)`, which is all of them for a degree `d` polynomial.
pub fn verify(result: &ExtremalResult, ps: &PointSet, d: usize) -> VerificationReport {
    let poly = &result.polynomial;
    let values: Vec<Rational> = ps.xs().iter().map(|x| poly.eval(x)).collect();
    let one = Rational::one();

    let terminal_ok =
        values[0] == Rational::sign_power(d) && values[values.len() - 1] == one;
    let bounded_ok = values.iter().all(|v| v.abs() <= one);

    let cert = result.certificate.points();
    let alternation_ok = cert.len() == d + 1
        && cert.first() == Some(ps.first())
        && cert.last() == Some(ps.last())
        && cert.windows(2).all(|w| w[0] < w[1])
        && cert.iter().all(|b| ps.contains(b))
        && cert
            .iter()
            .enumerate()
            .all(|(i, b)| poly.eval(b) == Rational::sign_power(d - i));

    let sign_change_count = sign_changes(&values);

    let unique_max_ok = poly.degree() == Some(d)
        && poly.lead_coefficient().is_ok_and(|lead| *lead == result.lead)
        && result.lead.is_positive()
        && solve(ps, d).is_ok_and(|fresh| fresh.polynomial == *poly);

    VerificationReport {
        terminal_ok,
        bounded_ok,
        alternation_ok,
        sign_change_count,
        unique_max_ok,
    }
}
