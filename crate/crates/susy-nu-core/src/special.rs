//! Log-gamma via the Lanczos approximation (g = 7, nine terms).

use crate::real::Real;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)] // canonical published coefficients
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0`; `None` otherwise.
pub fn ln_gamma<R: Real>(x: R) -> Option<R> {
    if !(x > R::zero()) || !x.is_finite() {
        return None;
    }
    let half = R::lit(0.5);
    if x < half {
        // Reflection keeps the recursion in the well-conditioned region.
        let pi = R::lit(std::f64::consts::PI);
        let sin_pix = (pi * x).sin();
        return Some(pi.ln() - sin_pix.ln() - ln_gamma(R::one() - x)?);
    }
    let xm1 = x - R::one();
    let mut acc = R::lit(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + R::lit(c) / (xm1 + R::of(i));
    }
    let t = xm1 + R::lit(LANCZOS_G) + half;
    let ln_sqrt_2pi = R::lit(0.918_938_533_204_672_7); // ln √(2π)
    Some(ln_sqrt_2pi + (xm1 + half) * t.ln() - t + acc.ln())
}
