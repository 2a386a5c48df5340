//! The exported form of a solved instance, shared by the JSON and CSV writers.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::chebyshev::{continuous_lead_bound, correction_term};
use crate::error::Result;
use crate::points::PointSet;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::solver::{AlternationCertificate, ExtremalResult, VerificationReport};

/// Every rational is carried as its canonical `p/q` string; coefficient
/// lists run lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRecord {
    pub degree: usize,
    pub points: Vec<Rational>,
    pub coefficients: Vec<Rational>,
    pub lead: Rational,
    pub certificate: Vec<Rational>,
    pub verification: VerificationReport,
    pub chebyshev_floor: Rational,
    /// `L(t(x)) - T_d(x)` padded to `d + 1` entries; only for `{1..k}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub correction: Option<Vec<Rational>>,
}

pub const CSV_HEADER: [&str; 12] = [
    "degree",
    "points",
    "coefficients",
    "lead",
    "certificate",
    "terminal_ok",
    "bounded_ok",
    "alternation_ok",
    "sign_change_count",
    "unique_max_ok",
    "chebyshev_floor",
    "correction",
];

/// Correction coefficients padded with zeros to `d + 1` entries.
pub fn padded_correction(l: &Polynomial, d: usize, k: usize) -> Result<Vec<Rational>> {
    let delta = correction_term(l, d, k)?.delta;
    Ok((0..=d).map(|i| delta.coefficient(i)).collect())
}

impl OutputRecord {
    pub fn new(
        ps: &PointSet,
        degree: usize,
        result: &ExtremalResult,
        verification: VerificationReport,
    ) -> Result<Self> {
        let correction = if ps.is_unit_range() {
            Some(padded_correction(&result.polynomial, degree, ps.len())?)
        } else {
            None
        };
        Ok(OutputRecord {
            degree,
            points: ps.xs().to_vec(),
            coefficients: result.polynomial.coefficients().to_vec(),
            lead: result.lead.clone(),
            certificate: result.certificate.points().to_vec(),
            verification,
            chebyshev_floor: continuous_lead_bound(degree, ps.first(), ps.last()),
            correction,
        })
    }

    pub fn point_set(&self) -> Result<PointSet> {
        PointSet::new(self.points.clone())
    }

    /// Rebuilds the result the record describes. Enumeration statistics are
    /// not exported, so they come back as zero.
    pub fn to_result(&self) -> ExtremalResult {
        ExtremalResult {
            polynomial: Polynomial::new(self.coefficients.clone()),
            lead: self.lead.clone(),
            certificate: AlternationCertificate::new(self.certificate.clone()),
            candidates_enumerated: 0,
            candidates_feasible: 0,
        }
    }

    pub fn write_csv<W: Write>(records: &[OutputRecord], out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        for r in records {
            let v = &r.verification;
            w.write_record([
                r.degree.to_string(),
                join(&r.points),
                join(&r.coefficients),
                r.lead.to_string(),
                join(&r.certificate),
                v.terminal_ok.to_string(),
                v.bounded_ok.to_string(),
                v.alternation_ok.to_string(),
                v.sign_change_count.to_string(),
                v.unique_max_ok.to_string(),
                r.chebyshev_floor.to_string(),
                r.correction.as_deref().map(join).unwrap_or_default(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Space-separated canonical strings.
pub fn join(values: &[Rational]) -> String {
    values
        .iter()
        .map(Rational::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
