//! Exact test of `|Q(x_j)| <= 1` on the grid for the interpolant `Q` through
//! alternating values `(-1)^(d-i)` at a subset of nodes.
//!
//! The grid is first rescaled to integers `g_j = (x_j - x_1) * D`, where `D`
//! is the lcm of the denominators. Feasibility is invariant under that
//! positive affine map. With `w_i = prod_{j != i} |g_{b_i} - g_{b_j}|` every
//! Lagrange term carries the same sign as its target value, so
//!
//! ```text
//! Q(x) = sum_i N_i(x) / w_i,   N_i(x) = prod_{j != i} (x - g_{b_j}),
//! ```
//!
//! and with `W = lcm(w_i)` the check reduces to `|sum_i (W / w_i) N_i(x)| <= W`
//! in checked `i128` arithmetic. Any overflow falls back to rational
//! arithmetic for that candidate, so the answer is exact either way.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::poly::{divided_differences, eval_newton};
use crate::rational::Rational;

pub(crate) struct FeasibilityChecker<'a> {
    xs: &'a [Rational],
    grid: Option<Vec<i128>>,
}

/// Reusable buffers for the integer path.
#[derive(Default)]
pub(crate) struct Scratch {
    weights: Vec<i128>,
    coeffs: Vec<i128>,
    diffs: Vec<i128>,
    prefix: Vec<i128>,
    node_xs: Vec<Rational>,
}

impl<'a> FeasibilityChecker<'a> {
    pub(crate) fn new(xs: &'a [Rational]) -> Self {
        FeasibilityChecker {
            xs,
            grid: integer_grid(xs),
        }
    }

    /// Rational arithmetic only; used to cross-check the integer path.
    #[cfg(test)]
    pub(crate) fn exact_only(xs: &'a [Rational]) -> Self {
        FeasibilityChecker { xs, grid: None }
    }

    /// `nodes` are increasing grid indices with `nodes.len() = d + 1`.
    pub(crate) fn is_feasible(&self, nodes: &[usize], scratch: &mut Scratch) -> bool {
        if let Some(grid) = &self.grid {
            if let Some(answer) = integer_check(grid, nodes, scratch) {
                return answer;
            }
        }
        self.exact_check(nodes, scratch)
    }

    fn exact_check(&self, nodes: &[usize], scratch: &mut Scratch) -> bool {
        let d = nodes.len() - 1;
        scratch.node_xs.clear();
        scratch.node_xs.extend(nodes.iter().map(|&i| self.xs[i].clone()));
        let values = (0..=d).map(|i| Rational::sign_power(d - i)).collect();
        let newton = divided_differences(&scratch.node_xs, values);
        let one = Rational::one();
        let mut next_node = 0;
        for (j, x) in self.xs.iter().enumerate() {
            if next_node < nodes.len() && nodes[next_node] == j {
                next_node += 1;
                continue;
            }
            if eval_newton(&scratch.node_xs, &newton, x).abs() > one {
                return false;
            }
        }
        true
    }
}

fn integer_grid(xs: &[Rational]) -> Option<Vec<i128>> {
    let lcm = xs
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scale = Rational::from(lcm);
    xs.iter()
        .map(|x| {
            let g = (x - &xs[0]) * &scale;
            debug_assert!(g.is_integer());
            g.numer().to_i128()
        })
        .collect()
}

/// `None` on overflow.
fn integer_check(grid: &[i128], nodes: &[usize], s: &mut Scratch) -> Option<bool> {
    let m = nodes.len();
    s.weights.clear();
    for (i, &bi) in nodes.iter().enumerate() {
        let mut w: i128 = 1;
        for (j, &bj) in nodes.iter().enumerate() {
            if i != j {
                w = w.checked_mul((grid[bi] - grid[bj]).abs())?;
            }
        }
        s.weights.push(w);
    }
    let mut lcm: i128 = 1;
    for &w in &s.weights {
        lcm = (lcm / lcm.gcd(&w)).checked_mul(w)?;
    }
    s.coeffs.clear();
    s.coeffs.extend(s.weights.iter().map(|&w| lcm / w));

    s.diffs.resize(m, 0);
    s.prefix.resize(m + 1, 1);
    let mut next_node = 0;
    for (j, &x) in grid.iter().enumerate() {
        if next_node < m && nodes[next_node] == j {
            next_node += 1;
            continue;
        }
        for (i, &b) in nodes.iter().enumerate() {
            s.diffs[i] = x - grid[b];
        }
        s.prefix[0] = 1;
        for i in 0..m {
            s.prefix[i + 1] = s.prefix[i].checked_mul(s.diffs[i])?;
        }
        // N_i = prefix[i] * (product of diffs after i)
        let mut suffix: i128 = 1;
        let mut total: i128 = 0;
        for i in (0..m).rev() {
            let n_i = s.prefix[i].checked_mul(suffix)?;
            total = total.checked_add(n_i.checked_mul(s.coeffs[i])?)?;
            suffix = suffix.checked_mul(s.diffs[i])?;
        }
        if total.checked_abs()? > lcm {
            return Some(false);
        }
    }
    Some(true)
}
