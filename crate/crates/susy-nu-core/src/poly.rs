//! Dense univariate polynomials with exact coefficient arithmetic.
//!
//! Degrees stay tiny here (quadratics and linears for the hypergeometric
//! reduction, degree ≤ 8 for the orthogonal-polynomial work), so a plain
//! ascending coefficient vector is the right representation.

use std::ops::{Add, Mul, Neg, Sub};

use crate::real::Real;

/// Polynomial with coefficients in ascending degree order.
///
/// Trailing zero coefficients are trimmed on construction, so `degree` is
/// canonical and equality is well defined.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R: Real> {
    coeffs: Vec<R>,
}

impl<R: Real> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| *c == R::zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(R::zero());
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![R::zero()] }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c0 + c1 z`
    pub fn linear(c0: R, c1: R) -> Self {
        Poly::new(vec![c0, c1])
    }

    /// `c0 + c1 z + c2 z²`
    pub fn quadratic(c0: R, c1: R, c2: R) -> Self {
        Poly::new(vec![c0, c1, c2])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == R::zero())
    }

    /// Coefficient of `z^i`, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).copied().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> R {
        *self.coeffs.last().expect("coeffs never empty")
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, z: R) -> R {
        let mut acc = R::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly<R> {
        if self.coeffs.len() == 1 {
            return Poly::zero();
        }
        let d: Vec<R> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * R::of(i))
            .collect();
        Poly::new(d)
    }

    pub fn scaled(&self, k: R) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(|&c| c * k).collect())
    }

    /// Substitutes `z -> a z + b`.
    pub fn compose_linear(&self, a: R, b: R) -> Poly<R> {
        let mut acc = Poly::zero();
        let inner = Poly::linear(b, a);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Poly::constant(c);
        }
        acc
    }

    /// Largest absolute coefficient, used for relative tolerances.
    pub fn max_abs_coeff(&self) -> R {
        self.coeffs
            .iter()
            .fold(R::zero(), |m, c| m.max(c.abs()))
    }

    /// Coefficient-wise comparison with tolerance relative to the larger of
    /// the two polynomials (floored at one).
    pub fn approx_eq(&self, other: &Poly<R>, tol: R) -> bool {
        let scale = R::one().max(self.max_abs_coeff()).max(other.max_abs_coeff());
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| (self.coeff(i) - other.coeff(i)).abs() <= tol * scale)
    }
}

impl<R: Real> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<R: Real> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<R: Real> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }
}

impl<R: Real> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

/// Real roots of `a2 z² + a1 z + a0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum QuadRoots<R: Real> {
    /// No real root (negative discriminant, or a nonzero constant).
    None,
    /// Single root: linear equation or a double quadratic root.
    One(R),
    /// Two distinct roots in descending order.
    Two(R, R),
    /// Identically zero: every value is a root.
    All,
}

/// Solves `a2 z² + a1 z + a0 = 0` over the reals.
///
/// `tol` is the relative threshold deciding when a coefficient or the
/// discriminant counts as zero.
pub fn solve_quadratic<R: Real>(a2: R, a1: R, a0: R, tol: R) -> QuadRoots<R> {
    let scale = R::one().max(a2.abs()).max(a1.abs()).max(a0.abs());
    let small = |x: R| x.abs() <= tol * scale;
    if small(a2) {
        if small(a1) {
            return if small(a0) { QuadRoots::All } else { QuadRoots::None };
        }
        return QuadRoots::One(-a0 / a1);
    }
    let disc = a1 * a1 - R::lit(4.0) * a2 * a0;
    if disc.abs() <= tol * scale * scale {
        return QuadRoots::One(-a1 / (R::lit(2.0) * a2));
    }
    if disc < R::zero() {
        return QuadRoots::None;
    }
    let sq = disc.sqrt();
    // Citardauq-stable form: compute the larger-magnitude root first.
    let q = -(a1 + a1.signum() * sq) / R::lit(2.0);
    let (r1, r2) = if a1 == R::zero() {
        let r = sq / (R::lit(2.0) * a2);
        (r, -r)
    } else {
        (q / a2, a0 / q)
    };
    if r1 >= r2 {
        QuadRoots::Two(r1, r2)
    } else {
        QuadRoots::Two(r2, r1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = Poly::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.coeffs(), &[1.0, 2.0]);
    }

    #[test]
    fn arithmetic_matches_hand_values() {
        let p = Poly::quadratic(1.0, -3.0, 2.0); // 1 - 3z + 2z²
        let q = Poly::linear(0.5, 1.0); // 0.5 + z
        let sum = &p + &q;
        assert_eq!(sum.coeffs(), &[1.5, -2.0, 2.0]);
        let prod = &p * &q;
        // (1 - 3z + 2z²)(0.5 + z) = 0.5 - 0.5z - 2z² + 2z³
        assert_eq!(prod.coeffs(), &[0.5, -0.5, -2.0, 2.0]);
        assert_eq!(p.derivative().coeffs(), &[-3.0, 4.0]);
        assert_relative_eq!(p.eval(2.0), 3.0);
    }

    #[test]
    fn compose_linear_shifts_argument() {
        // p(z) = z², p(2z - 1) = 4z² - 4z + 1
        let p = Poly::quadratic(0.0, 0.0, 1.0);
        let c = p.compose_linear(2.0, -1.0);
        assert_eq!(c.coeffs(), &[1.0, -4.0, 4.0]);
    }

    #[test]
    fn quadratic_roots_cases() {
        match solve_quadratic(1.0, -5.0, 6.0, 1e-14) {
            QuadRoots::Two(a, b) => {
                assert_relative_eq!(a, 3.0, max_relative = 1e-12);
                assert_relative_eq!(b, 2.0, max_relative = 1e-12);
            }
            other => panic!("expected two roots, got {other:?}"),
        }
        assert_eq!(solve_quadratic(0.0, 2.0, -4.0, 1e-14), QuadRoots::One(2.0));
        assert_eq!(solve_quadratic(1.0, 0.0, 1.0, 1e-14), QuadRoots::None);
        assert_eq!(solve_quadratic(0.0, 0.0, 0.0, 1e-14), QuadRoots::All::<f64>);
        match solve_quadratic(1.0, -2.0, 1.0, 1e-14) {
            QuadRoots::One(r) => assert_relative_eq!(r, 1.0),
            other => panic!("expected double root, got {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn eval_is_linear_in_addition(
            a in proptest::collection::vec(-1e3f64..1e3, 1..5),
            b in proptest::collection::vec(-1e3f64..1e3, 1..5),
            z in -10.0f64..10.0,
        ) {
            let p = Poly::new(a);
            let q = Poly::new(b);
            let lhs = (&p + &q).eval(z);
            let rhs = p.eval(z) + q.eval(z);
            prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs().max(rhs.abs())));
        }

        #[test]
        fn product_evaluates_pointwise(
            a in proptest::collection::vec(-1e2f64..1e2, 1..4),
            b in proptest::collection::vec(-1e2f64..1e2, 1..4),
            z in -3.0f64..3.0,
        ) {
            let p = Poly::new(a);
            let q = Poly::new(b);
            let lhs = (&p * &q).eval(z);
            let rhs = p.eval(z) * q.eval(z);
            prop_assert!((lhs - rhs).abs() <= 1e-7 * (1.0 + lhs.abs().max(rhs.abs())));
        }

        #[test]
        fn quadratic_roots_satisfy_equation(
            a2 in 0.1f64..10.0,
            r1 in -10.0f64..10.0,
            r2 in -10.0f64..10.0,
        ) {
            let a1 = -a2 * (r1 + r2);
            let a0 = a2 * r1 * r2;
            match solve_quadratic(a2, a1, a0, 1e-12) {
                QuadRoots::Two(x, y) => {
                    for r in [x, y] {
                        let v = a2 * r * r + a1 * r + a0;
                        prop_assert!(v.abs() <= 1e-7 * (1.0 + a0.abs() + a1.abs() + a2.abs()));
                    }
                    prop_assert!(x >= y);
                }
                QuadRoots::One(r) => {
                    let v = a2 * r * r + a1 * r + a0;
                    prop_assert!(v.abs() <= 1e-6 * (1.0 + a0.abs() + a1.abs() + a2.abs()));
                }
                other => prop_assert!(false, "unexpected {:?}", other),
            }
        }
    }
}
