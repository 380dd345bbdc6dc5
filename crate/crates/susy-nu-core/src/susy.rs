//! Partner-potential construction from trigonometric superpotentials.
//!
//! A superpotential `W(θ) = a·cot(αθ) + b·tan(αθ)` generates the pair
//! `V∓ = W² ∓ c W'` with `c = ħ/√(2m)`. Expanded in the canonical
//! `(cosec², sec², const)` basis this is exact coefficient algebra:
//!
//! ```text
//! V∓ = (a² ± cαa)·cosec²(αθ) + (b² ∓ cαb)·sec²(αθ) − (a−b)²
//! ```
//!
//! so partner identities, shape-invariance shifts, and the α → −α swap are
//! all testable as coefficient equalities without sampling.

use thiserror::Error;

use crate::real::Real;
use crate::spectrum::{Provenance, SpectrumResult};

#[derive(Debug, Error, PartialEq)]
pub enum SusyError {
    #[error("superpotential frequency must be nonzero")]
    ZeroAlpha,
    #[error("units require positive hbar and mass")]
    InvalidUnits,
    #[error("no zero mode; hierarchy base energy unknown")]
    BrokenSusy,
    #[error("no shape-invariance shift closes the family")]
    NoShapeInvariance,
}

/// Physical constants entering the factorization. The prefactor `ħ/√(2m)`
/// and the kinetic coefficient `ħ²/(2m)` are always derived, never stored.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Units<R: Real> {
    hbar: R,
    mass: R,
}

impl<R: Real> Units<R> {
    pub fn new(hbar: R, mass: R) -> Result<Self, SusyError> {
        if hbar > R::zero() && mass > R::zero() {
            Ok(Units { hbar, mass })
        } else {
            Err(SusyError::InvalidUnits)
        }
    }

    /// `ħ² = 2m` (here ħ = 1, m = 1/2): the convention in which the
    /// coefficient formulas above hold with `c = κ = 1`.
    pub fn hbar2_eq_2m() -> Self {
        Units { hbar: R::one(), mass: R::lit(0.5) }
    }

    /// `ħ = m = 1`, the convention quoted alongside the published figures.
    pub fn hbar_m_one() -> Self {
        Units { hbar: R::one(), mass: R::one() }
    }

    pub fn hbar(&self) -> R {
        self.hbar
    }

    pub fn mass(&self) -> R {
        self.mass
    }

    /// Factorization prefactor `c = ħ/√(2m)`.
    pub fn factorization_constant(&self) -> R {
        self.hbar / (R::lit(2.0) * self.mass).sqrt()
    }

    /// Kinetic coefficient `κ = ħ²/(2m)`.
    pub fn kappa(&self) -> R {
        self.hbar * self.hbar / (R::lit(2.0) * self.mass)
    }
}

/// Open interval, possibly unbounded.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Domain<R: Real> {
    pub lo: R,
    pub hi: R,
}

impl<R: Real> Domain<R> {
    pub fn new(lo: R, hi: R) -> Self {
        Domain { lo, hi }
    }

    pub fn unbounded() -> Self {
        Domain { lo: R::neg_infinity(), hi: R::infinity() }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn length(&self) -> R {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> R {
        (self.lo + self.hi) * R::lit(0.5)
    }

    /// Uniform interior samples excluding a fractional margin at each end.
    pub fn probe_points(&self, n: usize, margin: R) -> Vec<R> {
        let len = self.length();
        let lo = self.lo + margin * len;
        let hi = self.hi - margin * len;
        let h = (hi - lo) / R::of(n);
        (0..n).map(|j| lo + h * (R::of(j) + R::lit(0.5))).collect()
    }
}

/// Which member of a partner pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// `W(θ) = cot_coeff·cot(αθ) + tan_coeff·tan(αθ)` with α ≠ 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Superpotential<R: Real> {
    pub tan_coeff: R,
    pub cot_coeff: R,
    pub alpha: R,
}

/// Structural shape of a superpotential, driving domain conventions and
/// shape-invariance shifts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WForm {
    Zero,
    TanOnly,
    CotOnly,
    Mixed,
}

impl<R: Real> Superpotential<R> {
    pub fn new(tan_coeff: R, cot_coeff: R, alpha: R) -> Result<Self, SusyError> {
        if alpha == R::zero() {
            return Err(SusyError::ZeroAlpha);
        }
        Ok(Superpotential { tan_coeff, cot_coeff, alpha })
    }

    pub fn form(&self) -> WForm {
        match (self.cot_coeff == R::zero(), self.tan_coeff == R::zero()) {
            (true, true) => WForm::Zero,
            (true, false) => WForm::TanOnly,
            (false, true) => WForm::CotOnly,
            (false, false) => WForm::Mixed,
        }
    }

    pub fn eval(&self, theta: R) -> R {
        let arg = self.alpha * theta;
        let mut w = R::zero();
        if self.cot_coeff != R::zero() {
            w = w + self.cot_coeff * arg.cos() / arg.sin();
        }
        if self.tan_coeff != R::zero() {
            w = w + self.tan_coeff * arg.tan();
        }
        w
    }

    /// Largest interval around the reference cell on which every active term
    /// is regular: tan-only `(-π/2α, π/2α)`, cot-only `(0, π/α)`, mixed
    /// `(0, π/2α)`, zero unbounded.
    pub fn natural_domain(&self) -> Domain<R> {
        let a = self.alpha.abs();
        let pi = R::lit(std::f64::consts::PI);
        let half = R::lit(0.5);
        match self.form() {
            WForm::Zero => Domain::unbounded(),
            WForm::TanOnly => Domain::new(-half * pi / a, half * pi / a),
            WForm::CotOnly => Domain::new(R::zero(), pi / a),
            WForm::Mixed => Domain::new(R::zero(), half * pi / a),
        }
    }
}

/// Potential in the canonical `(cosec², sec², const)` basis.
///
/// `tan²` and `cot²` inputs are normalized via `tan² = sec² - 1` and
/// `cot² = cosec² - 1` so identities between potentials reduce to
/// coefficient equalities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrigPotential<R: Real> {
    pub csc2: R,
    pub sec2: R,
    pub constant: R,
    pub alpha: R,
    pub domain: Domain<R>,
}

impl<R: Real> TrigPotential<R> {
    pub fn new(csc2: R, sec2: R, constant: R, alpha: R, domain: Domain<R>) -> Self {
        TrigPotential { csc2, sec2, constant, alpha, domain }
    }

    /// Constant potential on the given interval (free box when zero).
    pub fn constant_on(value: R, domain: Domain<R>) -> Self {
        TrigPotential { csc2: R::zero(), sec2: R::zero(), constant: value, alpha: R::one(), domain }
    }

    /// Normalizes `coeff·tan²(αθ)` into the canonical basis.
    pub fn from_tan_sq(coeff: R, alpha: R, domain: Domain<R>) -> Self {
        TrigPotential { csc2: R::zero(), sec2: coeff, constant: -coeff, alpha, domain }
    }

    /// Normalizes `coeff·cot²(αθ)` into the canonical basis.
    pub fn from_cot_sq(coeff: R, alpha: R, domain: Domain<R>) -> Self {
        TrigPotential { csc2: coeff, sec2: R::zero(), constant: -coeff, alpha, domain }
    }

    pub fn is_constant(&self) -> bool {
        self.csc2 == R::zero() && self.sec2 == R::zero()
    }

    pub fn eval(&self, theta: R) -> R {
        let arg = self.alpha * theta;
        let mut v = self.constant;
        if self.csc2 != R::zero() {
            let s = arg.sin();
            v = v + self.csc2 / (s * s);
        }
        if self.sec2 != R::zero() {
            let c = arg.cos();
            v = v + self.sec2 / (c * c);
        }
        v
    }

    /// Derivative in θ, used for critical-point classification.
    pub fn derivative(&self, theta: R) -> R {
        let arg = self.alpha * theta;
        let two = R::lit(2.0);
        let mut d = R::zero();
        if self.csc2 != R::zero() {
            let s = arg.sin();
            d = d - two * self.alpha * self.csc2 * arg.cos() / (s * s * s);
        }
        if self.sec2 != R::zero() {
            let c = arg.cos();
            d = d + two * self.alpha * self.sec2 * arg.sin() / (c * c * c);
        }
        d
    }

    /// True when an active singular term blows up at θ (within `tol` of a
    /// zero of the corresponding trig function).
    pub fn is_singular_at(&self, theta: R, tol: R) -> bool {
        let arg = self.alpha * theta;
        (self.csc2 != R::zero() && arg.sin().abs() <= tol)
            || (self.sec2 != R::zero() && arg.cos().abs() <= tol)
    }

    /// Minimum over interior probe points (1% margins).
    pub fn min_on_probe(&self, n: usize) -> R {
        self.domain
            .probe_points(n, R::lit(0.01))
            .into_iter()
            .map(|t| self.eval(t))
            .fold(R::infinity(), R::min)
    }
}

/// The pair `V∓ = W² ∓ cW'` together with its source data.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PartnerPair<R: Real> {
    pub v_minus: TrigPotential<R>,
    pub v_plus: TrigPotential<R>,
    pub source: Superpotential<R>,
    pub units: Units<R>,
}

impl<R: Real> PartnerPair<R> {
    pub fn potential(&self, sign: Sign) -> &TrigPotential<R> {
        match sign {
            Sign::Minus => &self.v_minus,
            Sign::Plus => &self.v_plus,
        }
    }
}

/// Expands `V∓ = W² ∓ cW'` exactly in the canonical basis.
pub fn partner_potentials<R: Real>(w: &Superpotential<R>, units: &Units<R>) -> PartnerPair<R> {
    let c = units.factorization_constant();
    let a = w.cot_coeff;
    let b = w.tan_coeff;
    let ca = c * w.alpha;
    let shift = -(a - b) * (a - b);
    let domain = w.natural_domain();
    let v_minus = TrigPotential::new(a * (a + ca), b * (b - ca), shift, w.alpha, domain);
    let v_plus = TrigPotential::new(a * (a - ca), b * (b + ca), shift, w.alpha, domain);
    PartnerPair { v_minus, v_plus, source: *w, units: *units }
}

/// Candidate zero mode `ψ₀ ∝ |sin(αθ)|^p · |cos(αθ)|^q` with
/// `p = -a/(cα)`, `q = b/(cα)`, plus the normalizability verdict on the
/// natural domain.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroundState<R: Real> {
    pub sin_exponent: R,
    pub cos_exponent: R,
    pub alpha: R,
    pub domain: Domain<R>,
    pub normalizable: bool,
}

impl<R: Real> GroundState<R> {
    /// Unnormalized value; callers normalize by quadrature when needed.
    pub fn eval(&self, theta: R) -> R {
        let arg = self.alpha * theta;
        let mut v = R::one();
        if self.sin_exponent != R::zero() {
            v = v * arg.sin().abs().powf(self.sin_exponent);
        }
        if self.cos_exponent != R::zero() {
            v = v * arg.cos().abs().powf(self.cos_exponent);
        }
        v
    }
}

/// Zero-mode candidate of `H₋` for the given superpotential.
///
/// Normalizable (unbroken regime) iff both exponents exceed -1/2 and each
/// factor whose zero is touched by the domain closure decays there
/// (exponent strictly positive). Unbounded domains are never normalizable.
pub fn ground_state<R: Real>(w: &Superpotential<R>, units: &Units<R>) -> GroundState<R> {
    let c = units.factorization_constant();
    let ca = c * w.alpha;
    let p = -w.cot_coeff / ca;
    let q = w.tan_coeff / ca;
    let domain = w.natural_domain();
    let half = R::lit(0.5);
    let normalizable = domain.is_bounded() && p > -half && q > -half && {
        match w.form() {
            WForm::Zero => false,
            WForm::TanOnly => q > R::zero(),
            WForm::CotOnly => p > R::zero(),
            WForm::Mixed => p > R::zero() && q > R::zero(),
        }
    };
    GroundState { sin_exponent: p, cos_exponent: q, alpha: w.alpha, domain, normalizable }
}

const PROBE_POINTS: usize = 257;

fn pointwise_match<R: Real>(f: &TrigPotential<R>, g: impl Fn(R) -> R, tol: R) -> bool {
    f.domain
        .probe_points(PROBE_POINTS, R::lit(0.01))
        .into_iter()
        .all(|t| {
            let a = f.eval(t);
            let b = g(t);
            (a - b).abs() <= tol * R::one().max(a.abs()).max(b.abs())
        })
}

/// Parameter shift realizing `V₊(w) = V₋(w') + R` pointwise, when one exists:
/// tan-only shifts `b → b + cα`, cot-only `a → a - cα`, mixed does both.
/// The identity is verified on a probe grid before being returned.
pub fn shape_invariance_shift<R: Real>(
    w: &Superpotential<R>,
    units: &Units<R>,
) -> Option<(Superpotential<R>, R)> {
    let c = units.factorization_constant();
    let ca = c * w.alpha;
    let (a2, b2) = match w.form() {
        WForm::Zero => (R::zero(), R::zero()),
        WForm::TanOnly => (R::zero(), w.tan_coeff + ca),
        WForm::CotOnly => (w.cot_coeff - ca, R::zero()),
        WForm::Mixed => (w.cot_coeff - ca, w.tan_coeff + ca),
    };
    let shifted = Superpotential { tan_coeff: b2, cot_coeff: a2, alpha: w.alpha };
    let d0 = w.cot_coeff - w.tan_coeff;
    let d1 = a2 - b2;
    let remainder = d1 * d1 - d0 * d0;
    if w.form() == WForm::Zero {
        return Some((shifted, R::zero()));
    }
    let pair = partner_potentials(w, units);
    let next = partner_potentials(&shifted, units);
    let tol = R::lit(1e-10).max(R::epsilon() * R::lit(1e3));
    if pointwise_match(&pair.v_plus, |t| next.v_minus.eval(t) + remainder, tol) {
        Some((shifted, remainder))
    } else {
        None
    }
}

/// Spectrum of `V₋` by telescoping shape-invariance remainders:
/// `E_n = Σ_{k<n} R_k` with `E_0 = 0`, valid only in the unbroken regime.
pub fn hierarchy_spectrum<R: Real>(
    w: &Superpotential<R>,
    units: &Units<R>,
    n_max: usize,
) -> Result<SpectrumResult<R>, SusyError> {
    if !ground_state(w, units).normalizable {
        return Err(SusyError::BrokenSusy);
    }
    let mut energies = Vec::with_capacity(n_max + 1);
    energies.push((0usize, R::zero()));
    let mut current = *w;
    let mut acc = R::zero();
    for n in 1..=n_max {
        let (next, r) = shape_invariance_shift(&current, units).ok_or(SusyError::NoShapeInvariance)?;
        acc = acc + r;
        energies.push((n, acc));
        current = next;
    }
    Ok(SpectrumResult { energies, provenance: Provenance::ClosedForm, units: *units })
}

/// Local character of a potential at a probe point or in the α → 0 limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    FreeParticle,
    StepPotential,
    PotentialWell,
    Singular,
    Regular,
}

/// Probe location for [`classify`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ProbePoint<R: Real> {
    Theta(R),
    /// Symbolic α → 0 limit; never materialized as an actual frequency.
    AlphaToZero,
}

/// Per-branch classification of a partner pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartnerClassification {
    pub minus: Classification,
    pub plus: Classification,
}

/// Case table for the limiting forms of a partner pair: the α → 0 limit is
/// free for tan-built pairs and singular for anything with a cot term; at a
/// finite probe, singular terms dominate, and a critical point is labelled
/// step or well by the sign of the potential value there.
pub fn classify<R: Real>(pair: &PartnerPair<R>, at: ProbePoint<R>) -> PartnerClassification {
    let one_branch = |v: &TrigPotential<R>| -> Classification {
        match at {
            ProbePoint::AlphaToZero => {
                if pair.source.cot_coeff != R::zero() {
                    Classification::Singular
                } else {
                    // sec²(αθ) → 1 and the basis normalization cancels the
                    // constant, so the limit potential vanishes identically.
                    Classification::FreeParticle
                }
            }
            ProbePoint::Theta(theta) => {
                let tol = R::lit(1e-9);
                if v.is_singular_at(theta, tol) {
                    return Classification::Singular;
                }
                if v.is_constant() {
                    return Classification::FreeParticle;
                }
                let value = v.eval(theta);
                let scale = R::one().max(v.csc2.abs()).max(v.sec2.abs()).max(v.constant.abs());
                if v.derivative(theta).abs() <= tol * scale {
                    if value > tol * scale {
                        Classification::StepPotential
                    } else if value < -tol * scale {
                        Classification::PotentialWell
                    } else {
                        Classification::Regular
                    }
                } else {
                    Classification::Regular
                }
            }
        }
    };
    PartnerClassification { minus: one_branch(&pair.v_minus), plus: one_branch(&pair.v_plus) }
}
