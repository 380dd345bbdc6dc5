//! Shifted Jacobi polynomials on (0, 1) and the closed-form normalization
//! coefficients of the two wavefunction families.
//!
//! `G_n(p, q, z)` follows the Abramowitz & Stegun convention for the Jacobi
//! polynomials of the second kind: weight `z^{q-1} (1-z)^{p-q}` on (0, 1),
//! standardized to be monic. Everything is evaluated through the three-term
//! recurrence; no Rodrigues differentiation is performed at runtime.

use thiserror::Error;

use crate::poly::Poly;
use crate::real::Real;
use crate::special::ln_gamma;

#[derive(Debug, Error, PartialEq)]
pub enum OrthopolyError {
    #[error("weight exponents ({0}, {1}) are not integrable on (0, 1)")]
    NonIntegrableWeight(f64, f64),
    #[error("coefficient undefined: gamma argument {0} is not positive")]
    CoefficientUndefined(f64),
}

/// Parameters of `G_n(p, q, z)`: weight `z^{q-1} (1-z)^{p-q}` on (0, 1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShiftedJacobiParams<R: Real> {
    pub p: R,
    pub q: R,
}

impl<R: Real> ShiftedJacobiParams<R> {
    pub fn new(p: R, q: R) -> Self {
        ShiftedJacobiParams { p, q }
    }

    /// Builds parameters from the weight exponents `z^a (1-z)^b`.
    pub fn from_weight_exponents(a: R, b: R) -> Self {
        ShiftedJacobiParams { p: a + b + R::one(), q: a + R::one() }
    }

    /// Weight exponents `(a, b)` of `z^a (1-z)^b`.
    pub fn weight_exponents(&self) -> (R, R) {
        (self.q - R::one(), self.p - self.q)
    }

    pub fn is_integrable(&self) -> bool {
        let (a, b) = self.weight_exponents();
        a > -R::one() && b > -R::one()
    }

    fn check(&self) -> Result<(), OrthopolyError> {
        if self.is_integrable() {
            Ok(())
        } else {
            let (a, b) = self.weight_exponents();
            Err(OrthopolyError::NonIntegrableWeight(
                a.to_f64().unwrap_or(f64::NAN),
                b.to_f64().unwrap_or(f64::NAN),
            ))
        }
    }
}

/// Monic three-term recurrence coefficients on (0, 1) for weight
/// `z^a (1-z)^b`: `q_{k+1} = (z - A_k) q_k - B_k q_{k-1}`.
///
/// These come from the classical Jacobi recurrence on (-1, 1) with
/// `(α, β) = (b, a)` under `x = 2z - 1`; the k = 1 formula is written in its
/// cancelled form so `α + β = -1` stays finite.
fn monic_step<R: Real>(k: usize, a: R, b: R) -> (R, R) {
    let alpha = b;
    let beta = a;
    let s = alpha + beta;
    let one = R::one();
    let two = R::lit(2.0);
    let four = R::lit(4.0);
    let ak = if k == 0 {
        (beta - alpha) / (s + two)
    } else {
        let n = R::of(2 * k) + s;
        (beta * beta - alpha * alpha) / (n * (n + two))
    };
    let bk = match k {
        0 => R::zero(),
        1 => four * (one + alpha) * (one + beta) / ((two + s) * (two + s) * (R::lit(3.0) + s)),
        _ => {
            let kf = R::of(k);
            let n = two * kf + s;
            four * kf * (kf + alpha) * (kf + beta) * (kf + s)
                / (n * n * (n + one) * (n - one))
        }
    };
    ((one + ak) / two, bk / four)
}

/// Evaluates the monic `G_n(p, q, z)` at a point.
pub fn jacobi_g<R: Real>(
    n: usize,
    params: &ShiftedJacobiParams<R>,
    z: R,
) -> Result<R, OrthopolyError> {
    params.check()?;
    let (a, b) = params.weight_exponents();
    let mut prev = R::one();
    if n == 0 {
        return Ok(prev);
    }
    let (a0, _) = monic_step(0, a, b);
    let mut cur = z - a0;
    for k in 1..n {
        let (ak, bk) = monic_step(k, a, b);
        let next = (z - ak) * cur - bk * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Coefficients of the monic `G_n(p, q, z)` as a polynomial.
pub fn jacobi_g_poly<R: Real>(
    n: usize,
    params: &ShiftedJacobiParams<R>,
) -> Result<Poly<R>, OrthopolyError> {
    params.check()?;
    let (a, b) = params.weight_exponents();
    let mut prev = Poly::one();
    if n == 0 {
        return Ok(prev);
    }
    let (a0, _) = monic_step(0, a, b);
    let mut cur = Poly::linear(-a0, R::one());
    for k in 1..n {
        let (ak, bk) = monic_step(k, a, b);
        let z_minus = Poly::linear(-ak, R::one());
        let next = &(&z_minus * &cur) - &prev.scaled(bk);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

fn gamma_or_err<R: Real>(x: R) -> Result<R, OrthopolyError> {
    ln_gamma(x).ok_or_else(|| OrthopolyError::CoefficientUndefined(x.to_f64().unwrap_or(f64::NAN)))
}

/// Printed normalization coefficient of the squared-tangent wavefunctions,
/// `C = [(n̄-1)! (n̄-2+δ/2)! / (2n̄-2+δ/2)!] sqrt(n̄ (n̄-1+δ/2) / (2n̄-1+δ/2))`,
/// with factorials of non-integer arguments read as gamma functions.
///
/// The printed domain starts at `n̄ = 2`; smaller indices are rejected.
pub fn stp_coefficient<R: Real>(n_bar: usize, delta1: R) -> Result<R, OrthopolyError> {
    if n_bar < 2 {
        return Err(OrthopolyError::CoefficientUndefined(n_bar as f64));
    }
    let nf = R::of(n_bar);
    let half_d = delta1 * R::lit(0.5);
    let g1 = gamma_or_err(nf)?; // (n̄-1)!
    let g2 = gamma_or_err(nf - R::one() + half_d)?; // (n̄-2+δ/2)!
    let g3 = gamma_or_err(R::lit(2.0) * nf - R::one() + half_d)?; // (2n̄-2+δ/2)!
    let ratio_num = nf * (nf - R::one() + half_d);
    let ratio_den = R::lit(2.0) * nf - R::one() + half_d;
    if ratio_num <= R::zero() || ratio_den <= R::zero() {
        return Err(OrthopolyError::CoefficientUndefined(
            ratio_den.to_f64().unwrap_or(f64::NAN),
        ));
    }
    Ok((g1 + g2 - g3).exp() * (ratio_num / ratio_den).sqrt())
}

/// Printed normalization coefficient of the Pöschl–Teller wavefunctions,
/// `C̄ = [(n+μ)! / (2n+2μ)!] sqrt(n! (n+2μ)! / (2n+2μ+1))`,
/// gamma-interpreted like `stp_coefficient`.
pub fn ptp_coefficient<R: Real>(n: usize, mu: R) -> Result<R, OrthopolyError> {
    let nf = R::of(n);
    let one = R::one();
    let two = R::lit(2.0);
    let g1 = gamma_or_err(nf + mu + one)?; // (n+μ)!
    let g2 = gamma_or_err(two * nf + two * mu + one)?; // (2n+2μ)!
    let g3 = gamma_or_err(nf + one)?; // n!
    let g4 = gamma_or_err(nf + two * mu + one)?; // (n+2μ)!
    let den = two * nf + two * mu + one;
    if den <= R::zero() {
        return Err(OrthopolyError::CoefficientUndefined(den.to_f64().unwrap_or(f64::NAN)));
    }
    Ok((g1 - g2).exp() * ((g3 + g4).exp() / den).sqrt())
}
