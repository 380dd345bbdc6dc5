//! Brute-force eigensolver for `-κψ'' + V(θ)ψ = Eψ` on a finite interval.
//!
//! A cell-centered grid keeps nodes off the endpoint singularities, and the
//! Dirichlet condition is imposed exactly at the walls through antisymmetric
//! ghost values, which makes the boundary rows `3κ/h² + V` instead of the
//! interior `2κ/h² + V`. That keeps the discretization error purely O(h²)
//! even for box eigenfunctions with a nonzero wall slope, so a single
//! Richardson step removes the leading error term.
//!
//! Eigenvalues come from Sturm-sequence bisection, eigenvectors from seeded
//! inverse iteration with one Rayleigh refinement.

use thiserror::Error;

use crate::real::Real;
use crate::susy::{TrigPotential, Units};

/// Deterministic seed for inverse iteration.
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("grid needs at least 16 points, got {0}")]
    GridTooSmall(usize),
    #[error("singular node: potential not finite at θ = {0}")]
    SingularNode(f64),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("bisection failed to converge within 200 iterations")]
    NonConvergence,
    #[error("requested {0} eigenvalues from a matrix of size {1}")]
    TooManyEigenvalues(usize, usize),
}

/// Uniform cell-centered grid: `θⱼ = lo + (j + 1/2)h` where `lo`/`hi` are the
/// domain ends pulled in by `margin` (a fraction of the length) on each side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid<R: Real> {
    pub theta_min: R,
    pub theta_max: R,
    pub n_points: usize,
    pub margin: R,
}

impl<R: Real> Grid<R> {
    pub fn new(theta_min: R, theta_max: R, n_points: usize) -> Result<Self, OracleError> {
        Self::with_margin(theta_min, theta_max, n_points, R::zero())
    }

    pub fn with_margin(
        theta_min: R,
        theta_max: R,
        n_points: usize,
        margin: R,
    ) -> Result<Self, OracleError> {
        if n_points < 16 {
            return Err(OracleError::GridTooSmall(n_points));
        }
        Ok(Grid { theta_min, theta_max, n_points, margin })
    }

    fn effective_bounds(&self) -> (R, R) {
        let len = self.theta_max - self.theta_min;
        (self.theta_min + self.margin * len, self.theta_max - self.margin * len)
    }

    pub fn h(&self) -> R {
        let (lo, hi) = self.effective_bounds();
        (hi - lo) / R::of(self.n_points)
    }

    pub fn node(&self, j: usize) -> R {
        let (lo, _) = self.effective_bounds();
        lo + self.h() * (R::of(j) + R::lit(0.5))
    }

    pub fn nodes(&self) -> Vec<R> {
        (0..self.n_points).map(|j| self.node(j)).collect()
    }

    /// Same bounds and margin at half the resolution.
    pub fn coarsened(&self) -> Result<Self, OracleError> {
        Grid::with_margin(self.theta_min, self.theta_max, self.n_points / 2, self.margin)
    }
}

/// Real function sampled on a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction<R: Real> {
    pub grid: Grid<R>,
    pub values: Vec<R>,
}

/// Symmetric tridiagonal matrix (the Dirichlet-truncated Hamiltonian).
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalSym<R: Real> {
    pub diag: Vec<R>,
    pub offdiag: Vec<R>,
}

impl<R: Real> TridiagonalSym<R> {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// `y = T x`
    pub fn apply(&self, x: &[R]) -> Vec<R> {
        let n = self.len();
        let mut y = vec![R::zero(); n];
        for i in 0..n {
            let mut v = self.diag[i] * x[i];
            if i > 0 {
                v = v + self.offdiag[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                v = v + self.offdiag[i] * x[i + 1];
            }
            y[i] = v;
        }
        y
    }
}

/// Eigenvalues (ascending) and optionally h-normalized eigenvectors.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenResult<R: Real> {
    pub values: Vec<R>,
    pub vectors: Option<Vec<Vec<R>>>,
    pub grid: Grid<R>,
    pub extrapolated: bool,
}

/// Central-difference Hamiltonian with wall-exact Dirichlet ends.
pub fn discretize<R: Real>(
    v: &TrigPotential<R>,
    grid: &Grid<R>,
    units: &Units<R>,
) -> Result<TridiagonalSym<R>, OracleError> {
    discretize_fn(|t| v.eval(t), grid, units)
}

/// Same stencil for an arbitrary sampled potential.
pub fn discretize_fn<R: Real>(
    v: impl Fn(R) -> R,
    grid: &Grid<R>,
    units: &Units<R>,
) -> Result<TridiagonalSym<R>, OracleError> {
    let n = grid.n_points;
    let h = grid.h();
    let k2 = units.kappa() / (h * h);
    let two = R::lit(2.0);
    let three = R::lit(3.0);
    let mut diag = Vec::with_capacity(n);
    for j in 0..n {
        let theta = grid.node(j);
        let val = v(theta);
        if !val.is_finite() {
            return Err(OracleError::SingularNode(theta.to_f64().unwrap_or(f64::NAN)));
        }
        let kinetic = if j == 0 || j == n - 1 { three * k2 } else { two * k2 };
        diag.push(kinetic + val);
    }
    let offdiag = vec![-k2; n - 1];
    Ok(TridiagonalSym { diag, offdiag })
}

/// Number of eigenvalues strictly below `lambda` (LDLT pivot count).
fn sturm_count<R: Real>(t: &TridiagonalSym<R>, lambda: R, pivmin: R) -> usize {
    let mut count = 0usize;
    let mut q = t.diag[0] - lambda;
    if q < R::zero() {
        count += 1;
    }
    for i in 1..t.len() {
        let mut prev = q;
        if prev.abs() < pivmin {
            prev = -pivmin;
        }
        q = (t.diag[i] - lambda) - t.offdiag[i - 1] * t.offdiag[i - 1] / prev;
        if q < R::zero() {
            count += 1;
        }
    }
    count
}

fn gershgorin<R: Real>(t: &TridiagonalSym<R>) -> (R, R) {
    let n = t.len();
    let mut lo = R::infinity();
    let mut hi = R::neg_infinity();
    for i in 0..n {
        let left = if i > 0 { t.offdiag[i - 1].abs() } else { R::zero() };
        let right = if i + 1 < n { t.offdiag[i].abs() } else { R::zero() };
        lo = lo.min(t.diag[i] - left - right);
        hi = hi.max(t.diag[i] + left + right);
    }
    (lo - R::one(), hi + R::one())
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Solves `(T - shift·I) x = b` by tridiagonal LU with partial pivoting.
fn solve_shifted<R: Real>(t: &TridiagonalSym<R>, shift: R, b: &[R]) -> Vec<R> {
    let n = t.len();
    let tiny = R::epsilon() * R::epsilon();
    // Row bands: d (diagonal), u (first super), w (second super, fill-in).
    let mut d: Vec<R> = t.diag.iter().map(|&x| x - shift).collect();
    let mut u: Vec<R> = (0..n - 1).map(|i| t.offdiag[i]).collect();
    let mut w = vec![R::zero(); n.saturating_sub(2)];
    let mut rhs = b.to_vec();
    for i in 0..n - 1 {
        let sub = t.offdiag[i];
        if d[i].abs() >= sub.abs() {
            let mut piv = d[i];
            if piv.abs() < tiny {
                piv = if piv >= R::zero() { tiny } else { -tiny };
                d[i] = piv;
            }
            let m = sub / piv;
            d[i + 1] = d[i + 1] - m * u[i];
            rhs[i + 1] = rhs[i + 1] - m * rhs[i];
        } else {
            // Swap rows i and i+1.
            let m = d[i] / sub;
            let d_next = u[i] - m * d[i + 1];
            let new_u = d[i + 1];
            d[i] = sub;
            u[i] = new_u;
            if i + 2 < n {
                w[i] = u[i + 1];
                let new_u_next = -m * u[i + 1];
                u[i + 1] = new_u_next;
            }
            rhs.swap(i, i + 1);
            rhs[i + 1] = rhs[i + 1] - m * rhs[i];
            d[i + 1] = d_next;
        }
    }
    // Back substitution over the three bands.
    let mut x = vec![R::zero(); n];
    for i in (0..n).rev() {
        let mut acc = rhs[i];
        if i + 1 < n {
            acc = acc - u[i] * x[i + 1];
        }
        if i + 2 < n {
            acc = acc - w[i] * x[i + 2];
        }
        let mut piv = d[i];
        if piv.abs() < tiny {
            piv = if piv >= R::zero() { tiny } else { -tiny };
        }
        x[i] = acc / piv;
    }
    x
}

/// The `m` smallest eigenvalues by Sturm bisection, with eigenvectors by
/// inverse iteration when requested. Deterministic for a fixed seed.
pub fn eigen_lowest<R: Real>(
    t: &TridiagonalSym<R>,
    grid: &Grid<R>,
    m: usize,
    want_vectors: bool,
) -> Result<EigenResult<R>, OracleError> {
    eigen_lowest_seeded(t, grid, m, want_vectors, DEFAULT_SEED)
}

pub fn eigen_lowest_seeded<R: Real>(
    t: &TridiagonalSym<R>,
    grid: &Grid<R>,
    m: usize,
    want_vectors: bool,
    seed: u64,
) -> Result<EigenResult<R>, OracleError> {
    let n = t.len();
    if m > n {
        return Err(OracleError::TooManyEigenvalues(m, n));
    }
    let (glo, ghi) = gershgorin(t);
    let max_off = t.offdiag.iter().fold(R::zero(), |acc, e| acc.max(e.abs()));
    let pivmin = R::min_positive_value().max(R::epsilon() * max_off * max_off * R::epsilon());

    let mut values = Vec::with_capacity(m);
    for k in 0..m {
        let mut a = glo;
        let mut b = ghi;
        let mut converged = false;
        for _ in 0..200 {
            let width = b - a;
            let floor = R::epsilon() * (a.abs() + b.abs()) + R::min_positive_value();
            if width <= floor {
                converged = true;
                break;
            }
            let mid = (a + b) * R::lit(0.5);
            if sturm_count(t, mid, pivmin) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        if !converged {
            // 200 halvings of the Gershgorin interval always reach the
            // floating-point floor; anything else is a logic error.
            return Err(OracleError::NonConvergence);
        }
        values.push((a + b) * R::lit(0.5));
    }

    let vectors = if want_vectors {
        let h = grid.h();
        let mut vecs: Vec<Vec<R>> = Vec::with_capacity(m);
        let mut rng = seed;
        for &lambda in &values {
            let spread = (ghi - glo).max(R::one());
            let shift = lambda + R::epsilon().sqrt() * R::lit(1e-3) * spread;
            let mut x: Vec<R> = (0..n)
                .map(|_| {
                    let r = splitmix64(&mut rng) as f64 / u64::MAX as f64;
                    R::lit(2.0 * r - 1.0)
                })
                .collect();
            for _ in 0..2 {
                x = solve_shifted(t, shift, &x);
                let norm = x.iter().fold(R::zero(), |acc, v| acc.max(v.abs()));
                if norm > R::zero() {
                    for v in &mut x {
                        *v = *v / norm;
                    }
                }
            }
            // One Rayleigh-quotient refinement pass.
            let tx = t.apply(&x);
            let num: R = x.iter().zip(&tx).fold(R::zero(), |acc, (a, b)| acc + *a * *b);
            let den: R = x.iter().fold(R::zero(), |acc, a| acc + *a * *a);
            let rayleigh = num / den;
            if (rayleigh - lambda).abs() <= R::lit(0.1) * (R::one() + lambda.abs()) {
                x = solve_shifted(t, rayleigh + R::epsilon() * spread, &x);
            }
            // Re-orthogonalize against earlier vectors, then h-normalize.
            for prev in &vecs {
                let dot: R =
                    x.iter().zip(prev).fold(R::zero(), |acc, (a, b)| acc + *a * *b) * h;
                for (xi, pi) in x.iter_mut().zip(prev) {
                    *xi = *xi - dot * *pi;
                }
            }
            let norm2: R = x.iter().fold(R::zero(), |acc, v| acc + *v * *v) * h;
            let norm = norm2.sqrt();
            for v in &mut x {
                *v = *v / norm;
            }
            // Deterministic sign: largest-magnitude component positive.
            let mut idx = 0usize;
            for (i, v) in x.iter().enumerate() {
                if v.abs() > x[idx].abs() {
                    idx = i;
                }
            }
            if x[idx] < R::zero() {
                for v in &mut x {
                    *v = -*v;
                }
            }
            vecs.push(x);
        }
        Some(vecs)
    } else {
        None
    };

    Ok(EigenResult { values, vectors, grid: *grid, extrapolated: false })
}

/// Removes the O(h²) error from a pair of estimates at spacings `h` and `h/2`.
pub fn richardson<R: Real>(e_coarse: R, e_fine: R) -> R {
    (R::lit(4.0) * e_fine - e_coarse) / R::lit(3.0)
}

/// Eigensolve at the grid resolution and its half, Richardson-extrapolating
/// each eigenvalue. Vectors, when requested, come from the fine grid.
pub fn extrapolated_spectrum<R: Real>(
    v: &TrigPotential<R>,
    grid: &Grid<R>,
    units: &Units<R>,
    m: usize,
    want_vectors: bool,
) -> Result<EigenResult<R>, OracleError> {
    let coarse_grid = grid.coarsened()?;
    let fine = eigen_lowest(&discretize(v, grid, units)?, grid, m, want_vectors)?;
    let coarse = eigen_lowest(&discretize(v, &coarse_grid, units)?, &coarse_grid, m, false)?;
    let values = fine
        .values
        .iter()
        .zip(&coarse.values)
        .map(|(&f, &c)| richardson(c, f))
        .collect();
    Ok(EigenResult { values, vectors: fine.vectors, grid: *grid, extrapolated: true })
}

/// Midpoint-rule inner product `Σ f g w h`.
pub fn inner_product<R: Real>(
    f: &[R],
    g: &[R],
    weight: Option<&[R]>,
    grid: &Grid<R>,
) -> Result<R, OracleError> {
    if f.len() != g.len() {
        return Err(OracleError::LengthMismatch(f.len(), g.len()));
    }
    if let Some(w) = weight {
        if w.len() != f.len() {
            return Err(OracleError::LengthMismatch(w.len(), f.len()));
        }
    }
    let h = grid.h();
    let mut acc = R::zero();
    for i in 0..f.len() {
        let w = weight.map_or(R::one(), |w| w[i]);
        acc = acc + f[i] * g[i] * w;
    }
    Ok(acc * h)
}

/// Strict sign changes, ignoring entries below `1e-10 · ‖f‖∞`.
pub fn count_nodes<R: Real>(f: &[R]) -> usize {
    let max = f.iter().fold(R::zero(), |acc, v| acc.max(v.abs()));
    if max == R::zero() {
        return 0;
    }
    let floor = R::lit(1e-10) * max;
    let mut count = 0usize;
    let mut last: Option<bool> = None;
    for &v in f {
        if v.abs() < floor {
            continue;
        }
        let positive = v > R::zero();
        if let Some(prev) = last {
            if prev != positive {
                count += 1;
            }
        }
        last = Some(positive);
    }
    count
}

/// Scaled sup-norm residual of the eigenvalue equation over the interior 90%
/// of the grid, with ψ'' from the five-point stencil.
pub fn ode_residual<R: Real>(
    psi: impl Fn(R) -> R,
    e: R,
    v: &TrigPotential<R>,
    grid: &Grid<R>,
    units: &Units<R>,
) -> R {
    let n = grid.n_points;
    let h = grid.h();
    let kappa = units.kappa();
    let samples: Vec<R> = grid.nodes().into_iter().map(&psi).collect();
    let sup = samples.iter().fold(R::zero(), |acc, v| acc.max(v.abs()));
    if sup == R::zero() {
        return R::zero();
    }
    let (lo, hi) = {
        let len = grid.theta_max - grid.theta_min;
        let margin = R::lit(0.05) * len;
        (grid.theta_min + margin, grid.theta_max - margin)
    };
    let twelve_h2 = R::lit(12.0) * h * h;
    let mut worst = R::zero();
    for j in 2..n.saturating_sub(2) {
        let theta = grid.node(j);
        if theta < lo || theta > hi {
            continue;
        }
        let d2 = (-samples[j - 2] + R::lit(16.0) * samples[j - 1] - R::lit(30.0) * samples[j]
            + R::lit(16.0) * samples[j + 1]
            - samples[j + 2])
            / twelve_h2;
        let r = (-kappa * d2 + (v.eval(theta) - e) * samples[j]).abs();
        worst = worst.max(r);
    }
    worst / sup
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::susy::Domain;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn units1() -> Units<f64> {
        Units::hbar2_eq_2m()
    }

    fn box_potential() -> TrigPotential<f64> {
        TrigPotential::constant_on(0.0, Domain::new(-FRAC_PI_2, FRAC_PI_2))
    }

    #[test]
    fn stencil_matrix_small_case() {
        // V = 0, three cells of width 1: wall-corrected ends give
        // diag (3, 2, 3), offdiag (-1, -1), eigenvalues 2 - 2cos(kπ/3) = 1, 3, 4.
        let grid = Grid::new(0.0, 16.0, 16).unwrap();
        let t = discretize_fn(|_| 0.0, &grid, &units1()).unwrap();
        assert_relative_eq!(t.diag[0], 3.0);
        assert_relative_eq!(t.diag[1], 2.0);
        assert_relative_eq!(t.diag[t.len() - 1], 3.0);
        assert_relative_eq!(t.offdiag[0], -1.0);
        let eig = eigen_lowest(&t, &grid, 16, false).unwrap();
        for (k, &val) in eig.values.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * PI / 16.0).cos();
            assert_relative_eq!(val, exact, epsilon = 1e-10);
        }
    }

    #[test]
    fn one_by_one_matrix() {
        let t = TridiagonalSym { diag: vec![5.0], offdiag: vec![] };
        let grid = Grid::new(0.0, 1.0, 16).unwrap();
        // Grid size is irrelevant for values; just exercise the path.
        let eig = eigen_lowest(&t, &grid, 1, false).unwrap();
        assert_relative_eq!(eig.values[0], 5.0, epsilon = 1e-12);
    }

    #[test]
    fn singular_node_detected() {
        let grid = Grid::new(0.0, 1.0, 32).unwrap();
        let out = discretize_fn(
            |t: f64| if t < 0.1 { f64::INFINITY } else { 0.0 },
            &grid,
            &units1(),
        );
        assert!(matches!(out, Err(OracleError::SingularNode(_))), "{out:?}");
    }

    #[test]
    fn ground_states_converge_at_second_order() {
        let u = units1();
        // Free box (exact E₀ = 1) and the squared-tangent minus-partner
        // (exact E₀ = 0): halving h divides the error by four.
        let stp_minus =
            TrigPotential::new(0.0, 2.0, -4.0, 1.0, Domain::new(-FRAC_PI_2, FRAC_PI_2));
        for (v, exact) in [(box_potential(), 1.0), (stp_minus, 0.0)] {
            let mut errors = Vec::new();
            for n in [512usize, 1024, 2048] {
                let grid = Grid::new(v.domain.lo, v.domain.hi, n).unwrap();
                let t = discretize(&v, &grid, &u).unwrap();
                let e0 = eigen_lowest(&t, &grid, 1, false).unwrap().values[0];
                errors.push((e0 - exact).abs());
            }
            let r1 = errors[0] / errors[1];
            let r2 = errors[1] / errors[2];
            assert!((r1 - 4.0).abs() < 0.2, "ratio {r1}");
            assert!((r2 - 4.0).abs() < 0.2, "ratio {r2}");
        }
    }

    #[test]
    fn richardson_hits_box_spectrum() {
        assert_relative_eq!(richardson(3.0, 3.0), 3.0);
        let v = box_potential();
        let u = units1();
        let grid = Grid::new(v.domain.lo, v.domain.hi, 2048).unwrap();
        let eig = extrapolated_spectrum(&v, &grid, &u, 4, false).unwrap();
        for (n, &e) in eig.values.iter().enumerate() {
            let exact = ((n + 1) * (n + 1)) as f64;
            assert!((e - exact).abs() < 1e-8, "n={n} e={e}");
        }
    }

    #[test]
    fn squared_tangent_partner_spectrum_before_extrapolation() {
        // V₋ for strength 2: spectrum n² + 4n, O(h²) accurate at N = 4096.
        let v = TrigPotential::new(0.0, 2.0, -4.0, 1.0, Domain::new(-FRAC_PI_2, FRAC_PI_2));
        let grid = Grid::new(v.domain.lo, v.domain.hi, 4096).unwrap();
        let t = discretize(&v, &grid, &units1()).unwrap();
        let eig = eigen_lowest(&t, &grid, 4, false).unwrap();
        for (n, &e) in eig.values.iter().enumerate() {
            let exact = (n * n + 4 * n) as f64;
            assert!((e - exact).abs() < 5e-5, "n={n} e={e}");
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal_with_correct_node_counts() {
        let v = TrigPotential::new(0.0, 2.0, -4.0, 1.0, Domain::new(-FRAC_PI_2, FRAC_PI_2));
        let grid = Grid::new(v.domain.lo, v.domain.hi, 2048).unwrap();
        let t = discretize(&v, &grid, &units1()).unwrap();
        let eig = eigen_lowest(&t, &grid, 5, true).unwrap();
        assert!(eig.values.windows(2).all(|w| w[1] > w[0]), "{:?}", eig.values);
        let vecs = eig.vectors.as_ref().unwrap();
        for i in 0..vecs.len() {
            assert_eq!(count_nodes(&vecs[i]), i);
            for j in 0..=i {
                let ip = inner_product(&vecs[i], &vecs[j], None, &grid).unwrap();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((ip - expected).abs() < 1e-8, "({i},{j}) -> {ip}");
            }
        }
    }

    #[test]
    fn inner_product_hand_values() {
        let grid = Grid::new(0.0, PI, 4096).unwrap();
        let ones = vec![1.0; 4096];
        let total = inner_product(&ones, &ones, None, &grid).unwrap();
        assert_relative_eq!(total, PI, max_relative = 1e-12);
        let f: Vec<f64> = grid.nodes().iter().map(|t| t.sin()).collect();
        let g: Vec<f64> = grid.nodes().iter().map(|t| t.sin().powi(2)).collect();
        let i = inner_product(&f, &g, None, &grid).unwrap();
        assert_relative_eq!(i, 4.0 / 3.0, max_relative = 1e-6);
        assert!(inner_product(&f[..10], &g, None, &grid).is_err());
    }

    #[test]
    fn node_counting() {
        assert_eq!(count_nodes(&[1.0, 2.0, 0.5]), 0);
        let grid = Grid::new(0.0, PI, 256).unwrap();
        let f: Vec<f64> = grid.nodes().iter().map(|t| (2.0 * t).sin()).collect();
        assert_eq!(count_nodes(&f), 1);
        assert_eq!(count_nodes(&[1.0, 1e-16, -1.0, -2.0]), 1);
    }

    #[test]
    fn ode_residual_detects_right_and_wrong_eigenvalues() {
        let u = units1();
        let v0 = TrigPotential::constant_on(0.0, Domain::new(0.0, PI));
        let grid = Grid::new(0.0, PI, 2048).unwrap();
        let r = ode_residual(|t: f64| t.sin(), 1.0, &v0, &grid, &u);
        assert!(r < 1e-6, "residual {r}");
        // Zero mode of the squared-tangent minus-partner.
        let v = TrigPotential::new(0.0, 2.0, -4.0, 1.0, Domain::new(-FRAC_PI_2, FRAC_PI_2));
        let gridv = Grid::new(v.domain.lo, v.domain.hi, 2048).unwrap();
        let r = ode_residual(|t: f64| t.cos().powi(2), 0.0, &v, &gridv, &u);
        assert!(r < 1e-6, "residual {r}");
        // Shifting E by one shows up as a residual of one.
        let r = ode_residual(|t: f64| t.sin(), 2.0, &v0, &grid, &u);
        assert!((r - 1.0).abs() < 0.05, "residual {r}");
    }

    #[test]
    fn margin_robustness_for_singular_walls() {
        // Eigenvalues of the cosec²-walled partners are insensitive to small
        // wall margins.
        let u = units1();
        let ptp_minus = TrigPotential::new(2.0, 2.0, -16.0, 1.0, Domain::new(0.0, FRAC_PI_2));
        let scp_minus = TrigPotential::new(6.0, 0.0, -4.0, 1.0, Domain::new(0.0, PI));
        for v in [ptp_minus, scp_minus] {
            let mut spectra = Vec::new();
            for &margin in &[0.0, 1e-4, 1e-3] {
                let grid = Grid::with_margin(v.domain.lo, v.domain.hi, 2048, margin).unwrap();
                let eig = extrapolated_spectrum(&v, &grid, &u, 5, false).unwrap();
                spectra.push(eig.values);
            }
            for other in &spectra[1..] {
                for (a, b) in spectra[0].iter().zip(other) {
                    let denom = a.abs().max(b.abs()).max(1.0);
                    assert!((a - b).abs() / denom < 1e-6, "{a} vs {b}");
                }
            }
        }
    }
}
