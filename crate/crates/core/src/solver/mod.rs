//! The extremal polynomial on an arbitrary rational point set, found by
//! enumerating alternation sets.
//!
//! The maximiser takes the value `(-1)^d` at `x_1`, `1` at `x_k`, and
//! alternates `±1` at `d - 1` interior points in between. Each choice of
//! those interior points pins down one candidate by interpolation; the
//! answer is the bounded candidate with the largest lead coefficient.

mod combinations;
mod feasibility;
mod verify;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use combinations::binomial;
pub use verify::{sign_changes, verify, VerificationReport};

use crate::error::{Error, Result};
use crate::points::PointSet;
use crate::poly::Polynomial;
use crate::rational::Rational;
use combinations::Combinations;
use feasibility::{FeasibilityChecker, Scratch};

/// `d + 1` points `b_1 < ... < b_{d+1}` of the set, with `b_1 = x_1` and
/// `b_{d+1} = x_k`, where the extremal polynomial equals `(-1)^{(d+1)-i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlternationCertificate {
    points: Vec<Rational>,
}

impl AlternationCertificate {
    pub fn new(points: Vec<Rational>) -> Self {
        AlternationCertificate { points }
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    /// Target value at `points()[i]` for a certificate of degree `d`.
    pub fn value(&self, i: usize) -> Rational {
        let d = self.points.len().saturating_sub(1);
        Rational::sign_power(d - i)
    }

    pub fn values(&self) -> Vec<Rational> {
        (0..self.points.len()).map(|i| self.value(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalResult {
    pub polynomial: Polynomial,
    pub lead: Rational,
    pub certificate: AlternationCertificate,
    /// Always `C(k - 2, d - 1)`.
    pub candidates_enumerated: u64,
    /// Candidates of degree `d` with positive lead that stay within the bound.
    pub candidates_feasible: u64,
}

fn check_instance(ps: &PointSet, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    if ps.len() <= d {
        return Err(Error::NoMaximum {
            degree: d,
            points: ps.len(),
        });
    }
    Ok(())
}

/// Single-threaded solve.
pub fn solve(ps: &PointSet, d: usize) -> Result<ExtremalResult> {
    check_instance(ps, d)?;
    let k = ps.len();
    let mut search = Search::new(ps, d);
    let mut scratch = Scratch::default();
    let mut combos = Combinations::new(k - 2, d - 1);
    while let Some(subset) = combos.next_subset() {
        search.consider(subset, &mut scratch);
    }
    search.finish()
}

/// Same result as [`solve`], with the subsets split by their smallest
/// element across the rayon pool and reduced in lexicographic order.
pub fn solve_parallel(ps: &PointSet, d: usize) -> Result<ExtremalResult> {
    check_instance(ps, d)?;
    if d == 1 {
        return solve(ps, d);
    }
    let k = ps.len();
    let partials: Vec<Search> = (0..k - 2)
        .into_par_iter()
        .map(|first| {
            let mut search = Search::new(ps, d);
            let mut scratch = Scratch::default();
            let mut combos = Combinations::starting_with(k - 2, d - 1, first);
            while let Some(subset) = combos.next_subset() {
                search.consider(subset, &mut scratch);
            }
            search
        })
        .collect();
    partials
        .into_iter()
        .reduce(Search::merge)
        .expect("at least one interior point")
        .finish()
}

struct Best {
    polynomial: Polynomial,
    nodes: Vec<usize>,
    /// A different feasible polynomial shares this lead.
    conflict: bool,
}

struct Search<'a> {
    ps: &'a PointSet,
    degree: usize,
    checker: FeasibilityChecker<'a>,
    nodes: Vec<usize>,
    enumerated: u64,
    feasible: u64,
    best: Option<Best>,
}

impl<'a> Search<'a> {
    fn new(ps: &'a PointSet, degree: usize) -> Self {
        Search {
            ps,
            degree,
            checker: FeasibilityChecker::new(ps.xs()),
            nodes: Vec::with_capacity(degree + 1),
            enumerated: 0,
            feasible: 0,
            best: None,
        }
    }

    /// `subset` indexes the interior points `x_2 .. x_{k-1}`.
    fn consider(&mut self, subset: &[usize], scratch: &mut Scratch) {
        self.enumerated += 1;
        let k = self.ps.len();
        self.nodes.clear();
        self.nodes.push(0);
        self.nodes.extend(subset.iter().map(|i| i + 1));
        self.nodes.push(k - 1);

        if !self.checker.is_feasible(&self.nodes, scratch) {
            return;
        }
        let d = self.degree;
        let points: Vec<(Rational, Rational)> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.ps.xs()[j].clone(), Rational::sign_power(d - i)))
            .collect();
        let polynomial = Polynomial::interpolate(&points).expect("grid points are distinct");
        if polynomial.degree() != Some(d) {
            return;
        }
        let lead = polynomial.lead_coefficient().expect("nonzero");
        if !lead.is_positive() {
            return;
        }
        self.feasible += 1;
        let candidate = Best {
            polynomial,
            nodes: self.nodes.clone(),
            conflict: false,
        };
        self.best = Some(match self.best.take() {
            None => candidate,
            Some(best) => pick(best, candidate),
        });
    }

    /// Combines two searches over consecutive blocks of the lexicographic
    /// order, `self` first.
    fn merge(mut self, later: Search<'a>) -> Search<'a> {
        self.enumerated += later.enumerated;
        self.feasible += later.feasible;
        self.best = match (self.best.take(), later.best) {
            (None, b) | (b, None) => b,
            (Some(a), Some(b)) => Some(pick(a, b)),
        };
        self
    }

    fn finish(self) -> Result<ExtremalResult> {
        let best = self.best.ok_or_else(|| {
            Error::InternalInconsistency(format!(
                "no feasible candidate among {} alternation sets",
                self.enumerated
            ))
        })?;
        if best.conflict {
            return Err(Error::InternalInconsistency(
                "two different feasible polynomials share the maximum lead coefficient".into(),
            ));
        }
        let lead = best.polynomial.lead_coefficient()?.clone();
        let certificate = AlternationCertificate::new(
            best.nodes.iter().map(|&j| self.ps.xs()[j].clone()).collect(),
        );
        Ok(ExtremalResult {
            polynomial: best.polynomial,
            lead,
            certificate,
            candidates_enumerated: self.enumerated,
            candidates_feasible: self.feasible,
        })
    }
}

/// Strict maximum by lead coefficient; on equal leads the earlier candidate
/// is kept and a conflict is recorded if the polynomials differ.
fn pick(earlier: Best, later: Best) -> Best {
    let a = earlier.polynomial.lead_coefficient().expect("nonzero");
    let b = later.polynomial.lead_coefficient().expect("nonzero");
    match a.cmp(b) {
        std::cmp::Ordering::Greater => earlier,
        std::cmp::Ordering::Less => later,
        std::cmp::Ordering::Equal => {
            let conflict =
                earlier.conflict || later.conflict || earlier.polynomial != later.polynomial;
            Best { conflict, ..earlier }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::{continuous_lead_bound, map_to_unit, chebyshev_t};
    use crate::rational::q;

    fn ints(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| q(c, 1)).collect())
    }

    #[test]
    fn three_points_degree_two() {
        let r = solve(&PointSet::integers(3).unwrap(), 2).unwrap();
        assert_eq!(r.polynomial, ints(&[7, -8, 2]));
        assert_eq!(r.lead, q(2, 1));
        assert_eq!(r.certificate.points(), &[q(1, 1), q(2, 1), q(3, 1)]);
        assert_eq!(r.certificate.values(), vec![q(1, 1), q(-1, 1), q(1, 1)]);
        assert_eq!(r.candidates_enumerated, 1);
        assert_eq!(r.candidates_feasible, 1);
    }

    #[test]
    fn four_points_degree_three() {
        let r = solve(&PointSet::integers(4).unwrap(), 3).unwrap();
        assert_eq!(r.lead, q(4, 3));
        assert_eq!(r.certificate.points(), &[q(1, 1), q(2, 1), q(3, 1), q(4, 1)]);
        assert_eq!(r.certificate.values(), vec![q(-1, 1), q(1, 1), q(-1, 1), q(1, 1)]);
    }

    #[test]
    fn six_points_degree_four() {
        let ps = PointSet::integers(6).unwrap();
        let r = solve(&ps, 4).unwrap();
        assert_eq!(r.lead, q(1, 4));
        assert_eq!(r.candidates_enumerated, 4);
        let grid: Vec<Rational> = ps.xs().iter().map(|x| r.polynomial.eval(x)).collect();
        let expected: Vec<Rational> = [1, -1, 1, 1, -1, 1].iter().map(|&v| q(v, 1)).collect();
        assert_eq!(grid, expected);
        // (1,-1,1,1,-1,1) has two alternating 5-subsequences with both endpoints
        assert_eq!(r.candidates_feasible, 2);
        assert_eq!(r.certificate.points(), &[q(1, 1), q(2, 1), q(3, 1), q(5, 1), q(6, 1)]);
    }

    #[test]
    fn rejects_too_few_points() {
        assert_eq!(
            solve(&PointSet::integers(2).unwrap(), 2),
            Err(Error::NoMaximum { degree: 2, points: 2 })
        );
        assert_eq!(
            solve(&PointSet::integers(3).unwrap(), 0),
            Err(Error::UnsupportedDegree(0))
        );
    }

    #[test]
    fn non_integer_points() {
        let ps = PointSet::new(vec![q(0, 1), q(1, 2), q(1, 1)]).unwrap();
        let r = solve(&ps, 2).unwrap();
        assert_eq!(r.lead, q(8, 1));
        assert_eq!(r.polynomial, ints(&[1, -8, 8]));
    }

    #[test]
    fn degree_one_uses_endpoints() {
        let ps = PointSet::new(vec![q(-3, 1), q(0, 1), q(1, 2), q(5, 1)]).unwrap();
        let r = solve(&ps, 1).unwrap();
        assert_eq!(r.polynomial, Polynomial::new(vec![q(-1, 4), q(1, 4)]));
        assert_eq!(r.candidates_enumerated, 1);
    }

    #[test]
    fn parallel_matches_serial() {
        let irregular = PointSet::new(
            [0, 1, 3, 4, 7, 8, 12, 13, 14, 20, 21].iter().map(|&x| q(x, 3)).collect(),
        )
        .unwrap();
        for ps in [PointSet::integers(11).unwrap(), irregular] {
            for d in 1..ps.len() {
                assert_eq!(solve(&ps, d), solve_parallel(&ps, d), "d={d}");
            }
        }
    }

    #[test]
    fn beats_stretched_chebyshev() {
        for k in 3..=12 {
            let ps = PointSet::integers(k).unwrap();
            for d in 1..k {
                let r = solve(&ps, d).unwrap();
                let floor = continuous_lead_bound(d, ps.first(), ps.last());
                assert!(r.lead >= floor, "d={d} k={k}");
                let stretched = map_to_unit(&ps).pull_back(&chebyshev_t(d)).unwrap();
                assert_eq!(stretched.lead_coefficient().unwrap(), &floor);
            }
        }
    }
}
