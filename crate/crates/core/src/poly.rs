//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Coefficients are stored lowest degree first with no trailing zeros; the
/// zero polynomial has no coefficients at all.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * x^n`.
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    /// Takes coefficients lowest degree first, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead_coefficient(&self) -> Result<&Rational> {
        self.coeffs.last().ok_or(Error::ZeroPolynomial)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Returns `q` with `q(x) = self(a*x + b)`.
    pub fn affine_compose(&self, a: &Rational, b: &Rational) -> Result<Polynomial> {
        if a.is_zero() {
            return Err(Error::DegenerateMap);
        }
        // Horner in the polynomial ring: acc <- acc * (a x + b) + c
        let mut acc: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            let mut next = vec![Rational::zero(); acc.len() + 1];
            for (i, t) in acc.iter().enumerate() {
                next[i] += &(t * b);
                next[i + 1] += &(t * a);
            }
            next[0] += c;
            acc = next;
        }
        Ok(Polynomial::new(acc))
    }

    /// Unique polynomial of degree at most `n - 1` through `n` points, built
    /// from the Newton divided-difference table and expanded to dense form.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
        if points.is_empty() {
            return Err(Error::EmptyInterpolation);
        }
        for (i, (xi, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(xj, _)| xj == xi) {
                return Err(Error::DuplicateAbscissa(xi.clone()));
            }
        }
        let xs: Vec<Rational> = points.iter().map(|(x, _)| x.clone()).collect();
        let ys: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        Ok(newton_to_dense(&xs, &divided_differences(&xs, ys)))
    }

    /// True when `p(-x) = p(x)`.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Rational::is_zero)
    }

    /// True when `p(-x) = -p(x)`.
    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Rational::is_zero)
    }
}

/// Newton coefficients `f[x0], f[x0,x1], ..., f[x0..xn]`, computed in place.
///
/// Abscissae must be distinct.
pub(crate) fn divided_differences(xs: &[Rational], mut table: Vec<Rational>) -> Vec<Rational> {
    let n = xs.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &table[i] - &table[i - 1];
            table[i] = num / (&xs[i] - &xs[i - level]);
        }
    }
    table
}

/// Expands `c0 + c1 (x - x0) + c2 (x - x0)(x - x1) + ...` into dense form.
pub(crate) fn newton_to_dense(xs: &[Rational], newton: &[Rational]) -> Polynomial {
    let n = newton.len();
    let mut acc: Vec<Rational> = Vec::with_capacity(n);
    for i in (0..n).rev() {
        // acc <- acc * (x - xs[i]) + newton[i]
        let mut next = vec![Rational::zero(); acc.len() + 1];
        for (j, t) in acc.iter().enumerate() {
            next[j + 1] += t;
            next[j] -= &(t * &xs[i]);
        }
        next[0] += &newton[i];
        acc = next;
    }
    Polynomial::new(acc)
}

/// Evaluates a Newton-form polynomial at `x`.
pub(crate) fn eval_newton(xs: &[Rational], newton: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for i in (0..newton.len()).rev() {
        acc = acc * (x - &xs[i]) + &newton[i];
    }
    acc
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Human-readable form, highest degree first: `4/3*x^3 - 10*x^2 + 68/3*x - 15`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                _ if show_coeff => write!(f, "*")?,
                _ => {}
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Serialized as the coefficient array, lowest degree first.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<Rational>::deserialize(deserializer).map(Polynomial::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    fn poly(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn pts(p: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        p.iter().map(|&(x, y)| (q(x, 1), q(y, 1))).collect()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly(&[(-2, 1), (1, 1)]).eval(&q(2, 1)), q(0, 1));
        assert_eq!(poly(&[(7, 1), (-8, 1), (2, 1)]).eval(&q(2, 1)), q(-1, 1));
        assert_eq!(Polynomial::zero().eval(&q(5, 1)), q(0, 1));
    }

    #[test]
    fn interpolate_examples() {
        assert_eq!(
            Polynomial::interpolate(&pts(&[(1, -1), (3, 1)])).unwrap(),
            poly(&[(-2, 1), (1, 1)])
        );
        assert_eq!(
            Polynomial::interpolate(&pts(&[(1, 1), (2, -1), (3, 1)])).unwrap(),
            poly(&[(7, 1), (-8, 1), (2, 1)])
        );
        assert_eq!(
            Polynomial::interpolate(&pts(&[(1, -1), (2, 1), (3, -1), (4, 1)])).unwrap(),
            poly(&[(-15, 1), (68, 3), (-10, 1), (4, 3)])
        );
    }

    #[test]
    fn interpolate_errors() {
        assert_eq!(Polynomial::interpolate(&[]), Err(Error::EmptyInterpolation));
        assert_eq!(
            Polynomial::interpolate(&pts(&[(1, 0), (2, 1), (1, 3)])),
            Err(Error::DuplicateAbscissa(q(1, 1)))
        );
    }

    #[test]
    fn collinear_triples_drop_degree() {
        let p = Polynomial::interpolate(&pts(&[(0, 1), (1, 3), (5, 11)])).unwrap();
        assert_eq!(p.degree(), Some(1));
        let p = Polynomial::interpolate(&pts(&[(0, 4), (2, 4), (9, 4)])).unwrap();
        assert_eq!(p.degree(), Some(0));
        let p = Polynomial::interpolate(&pts(&[(0, 0), (2, 0)])).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn affine_compose_examples() {
        let x2 = Polynomial::monomial(q(1, 1), 2);
        assert_eq!(x2.affine_compose(&q(1, 1), &q(0, 1)).unwrap(), x2);
        assert_eq!(
            poly(&[(7, 1), (-8, 1), (2, 1)]).affine_compose(&q(1, 1), &q(2, 1)).unwrap(),
            poly(&[(-1, 1), (0, 1), (2, 1)])
        );
        assert_eq!(
            poly(&[(-2, 1), (1, 1)]).affine_compose(&q(1, 1), &q(2, 1)).unwrap(),
            Polynomial::x()
        );
        assert_eq!(x2.affine_compose(&q(0, 1), &q(1, 1)), Err(Error::DegenerateMap));
    }

    #[test]
    fn ring_operations() {
        let x = Polynomial::x();
        assert!((&x + &(-&x)).is_zero());
        assert_eq!(
            poly(&[(7, 1), (-8, 1), (2, 1)]).scale(&q(1, 2)),
            poly(&[(7, 2), (-4, 1), (1, 1)])
        );
        assert_eq!(
            poly(&[(-15, 1), (68, 3), (-10, 1), (4, 3)]).lead_coefficient().unwrap(),
            &q(4, 3)
        );
        assert_eq!(Polynomial::zero().lead_coefficient(), Err(Error::ZeroPolynomial));
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(&x * &x, Polynomial::monomial(q(1, 1), 2));
        assert!((&x * &Polynomial::zero()).is_zero());
        assert_eq!(poly(&[(1, 1), (0, 1), (0, 1)]).degree(), Some(0));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(-15, 1), (68, 3), (-10, 1), (4, 3)]).to_string(), "4/3*x^3 - 10*x^2 + 68/3*x - 15");
        assert_eq!(poly(&[(0, 1), (-1, 1), (0, 1), (1, 1)]).to_string(), "x^3 - x");
        assert_eq!(poly(&[(-1, 2)]).to_string(), "-1/2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn parity() {
        assert!(poly(&[(-1, 1), (0, 1), (2, 1)]).is_even());
        assert!(!poly(&[(-1, 1), (0, 1), (2, 1)]).is_odd());
        assert!(poly(&[(0, 1), (-3, 1), (0, 1), (4, 1)]).is_odd());
        assert!(Polynomial::zero().is_even() && Polynomial::zero().is_odd());
    }

    #[test]
    fn serde_round_trip() {
        let p = poly(&[(-15, 1), (68, 3), (-10, 1), (4, 3)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["-15","68/3","-10","4/3"]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), p);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| q(n, d))
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(small_rational(), 0..7).prop_map(Polynomial::new)
    }

    fn distinct_points(max: usize) -> impl Strategy<Value = Vec<(Rational, Rational)>> {
        proptest::collection::btree_set((-40i64..40, 1i64..6), 1..=max)
            .prop_map(|set| {
                let mut xs: Vec<Rational> = set.into_iter().map(|(n, d)| q(n, d)).collect();
                xs.sort();
                xs.dedup();
                xs
            })
            .prop_flat_map(|xs| {
                let n = xs.len();
                (Just(xs), proptest::collection::vec(small_rational(), n))
            })
            .prop_map(|(xs, ys)| xs.into_iter().zip(ys).collect())
    }

    proptest! {
        #[test]
        fn interpolation_round_trip(points in distinct_points(8)) {
            let p = Polynomial::interpolate(&points).unwrap();
            prop_assert!(p.degree().is_none_or(|d| d < points.len()));
            for (x, y) in &points {
                prop_assert_eq!(&p.eval(x), y);
            }
        }

        #[test]
        fn interpolation_recovers_low_degree_data(p in small_poly(), extra in 0usize..3) {
            let n = p.degree().map_or(1, |d| d + 1) + extra;
            let points: Vec<_> = (0..n as i64).map(|i| {
                let x = q(2 * i - 3, 3);
                let y = p.eval(&x);
                (x, y)
            }).collect();
            prop_assert_eq!(Polynomial::interpolate(&points).unwrap(), p);
        }

        #[test]
        fn compose_inverse_round_trip(p in small_poly(), a in small_rational(), b in small_rational()) {
            prop_assume!(!a.is_zero());
            let there = p.affine_compose(&a, &b).unwrap();
            let inv_a = a.recip();
            let inv_b = -(&b / &a);
            prop_assert_eq!(there.affine_compose(&inv_a, &inv_b).unwrap(), p);
        }

        #[test]
        fn compose_scales_lead(p in small_poly(), a in small_rational(), b in small_rational(), x in small_rational()) {
            prop_assume!(!a.is_zero() && !p.is_zero());
            let c = p.affine_compose(&a, &b).unwrap();
            let d = p.degree().unwrap();
            prop_assert_eq!(c.degree(), Some(d));
            prop_assert_eq!(c.lead_coefficient().unwrap(), &(p.lead_coefficient().unwrap() * a.pow(d as i32)));
            prop_assert_eq!(c.eval(&x), p.eval(&(&a * &x + &b)));
        }

        #[test]
        fn mul_is_pointwise(a in small_poly(), b in small_poly(), x in small_rational()) {
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
            prop_assert_eq!((&a - &b).eval(&x), a.eval(&x) - b.eval(&x));
        }
    }
}
