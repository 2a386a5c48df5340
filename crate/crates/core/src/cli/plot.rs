//! Sample data for plotting a solved polynomial over `[x_1, x_k]`.

use std::io::Write;

use crate::points::PointSet;
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    Sample,
    Grid,
}

impl RowKind {
    fn as_str(self) -> &'static str {
        match self {
            RowKind::Sample => "sample",
            RowKind::Grid => "grid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlotRow {
    pub kind: RowKind,
    pub x: Rational,
    pub y: Rational,
}

/// `n >= 2` equally spaced samples from `x_1` to `x_k` inclusive, followed
/// by one row per grid point.
pub fn plot_rows(poly: &Polynomial, ps: &PointSet, n: usize) -> Vec<PlotRow> {
    assert!(n >= 2, "need at least two samples");
    let width = ps.last() - ps.first();
    let spacing = width / Rational::from(n - 1);
    let samples = (0..n).map(|i| {
        let x = ps.first() + &(&spacing * &Rational::from(i));
        PlotRow {
            kind: RowKind::Sample,
            y: poly.eval(&x),
            x,
        }
    });
    let grid = ps.xs().iter().map(|x| PlotRow {
        kind: RowKind::Grid,
        x: x.clone(),
        y: poly.eval(x),
    });
    samples.chain(grid).collect()
}

/// Columns `kind,x,y,x_exact,y_exact`; the exact columns are filled for grid
/// rows only.
pub fn write_csv<W: Write>(rows: &[PlotRow], digits: usize, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["kind", "x", "y", "x_exact", "y_exact"])?;
    for r in rows {
        let (x_exact, y_exact) = match r.kind {
            RowKind::Grid => (r.x.to_string(), r.y.to_string()),
            RowKind::Sample => (String::new(), String::new()),
        };
        w.write_record([
            r.kind.as_str().to_string(),
            r.x.to_decimal_string(digits),
            r.y.to_decimal_string(digits),
            x_exact,
            y_exact,
        ])?;
    }
    w.flush()?;
    Ok(())
}
