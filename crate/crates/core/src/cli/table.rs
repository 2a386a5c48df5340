//! Rows comparing the closed form, the enumeration and the Chebyshev floor
//! for `{1..k}` over a range of `k`.

use std::io::{self, Write};
use std::ops::RangeInclusive;

use serde::Serialize;

use super::record::{join, padded_correction};
use crate::chebyshev::continuous_lead_bound;
use crate::closed_forms::{lead_coefficient_closed_form, ClosedFormQuery};
use crate::error::Result;
use crate::points::PointSet;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::solver::{solve, solve_parallel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub k: usize,
    /// Absent for degrees without a closed form.
    pub closed_form_lead: Option<Rational>,
    pub solver_lead: Rational,
    pub chebyshev_floor: Rational,
    pub agree: Option<bool>,
    /// `L(t(x)) - T_d(x)`, lowest degree first, `d + 1` entries.
    pub correction: Vec<Rational>,
}

impl TableRow {
    pub fn disagrees(&self) -> bool {
        self.agree == Some(false)
    }
}

pub fn table_rows(d: usize, ks: RangeInclusive<usize>, parallel: bool) -> Result<Vec<TableRow>> {
    ks.map(|k| {
        let ps = PointSet::integers(k)?;
        let result = if parallel { solve_parallel(&ps, d)? } else { solve(&ps, d)? };
        let closed_form_lead = if (1..=4).contains(&d) {
            Some(lead_coefficient_closed_form(&ClosedFormQuery::unit(d, k))?)
        } else {
            None
        };
        let agree = closed_form_lead.as_ref().map(|c| *c == result.lead);
        Ok(TableRow {
            k,
            closed_form_lead,
            solver_lead: result.lead.clone(),
            chebyshev_floor: continuous_lead_bound(d, ps.first(), ps.last()),
            agree,
            correction: padded_correction(&result.polynomial, d, k)?,
        })
    })
    .collect()
}

pub fn write_text<W: Write>(rows: &[TableRow], mut out: W) -> io::Result<()> {
    let header = ["k", "closed form", "solver", "chebyshev floor", "agree", "correction"];
    let body: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.k.to_string(),
                r.closed_form_lead.as_ref().map_or("-".into(), Rational::to_string),
                r.solver_lead.to_string(),
                r.chebyshev_floor.to_string(),
                match r.agree {
                    Some(true) => "yes".into(),
                    Some(false) => "NO".into(),
                    None => "-".into(),
                },
                Polynomial::new(r.correction.clone()).to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[&str]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(&format!("{cell:<w$}  "));
            }
        }
        s
    };
    writeln!(out, "{}", line(&header))?;
    for row in &body {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        writeln!(out, "{}", line(&cells))?;
    }
    Ok(())
}

pub fn write_csv<W: Write>(rows: &[TableRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["k", "closed_form_lead", "solver_lead", "chebyshev_floor", "agree", "correction"])?;
    for r in rows {
        w.write_record([
            r.k.to_string(),
            r.closed_form_lead.as_ref().map(Rational::to_string).unwrap_or_default(),
            r.solver_lead.to_string(),
            r.chebyshev_floor.to_string(),
            r.agree.map(|a| a.to_string()).unwrap_or_default(),
            join(&r.correction),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn quartic_row_for_seven_points() {
        let rows = table_rows(4, 7..=7, false).unwrap();
        assert_eq!(rows[0].closed_form_lead, Some(q(1, 10)));
        assert_eq!(rows[0].agree, Some(true));
        assert_eq!(
            rows[0].correction,
            vec![q(0, 1), q(0, 1), q(-1, 10), q(0, 1), q(1, 10)]
        );
        let mut buf = Vec::new();
        write_text(&rows, &mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().contains("1/10*x^4 - 1/10*x^2"));
    }

    #[test]
    fn high_degree_rows_have_no_closed_form() {
        let rows = table_rows(5, 6..=8, false).unwrap();
        assert!(rows.iter().all(|r| r.closed_form_lead.is_none() && r.agree.is_none()));
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().nth(1).unwrap().starts_with("6,,"));
    }
}
