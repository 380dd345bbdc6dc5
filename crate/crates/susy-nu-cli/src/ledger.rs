//! The discrepancy ledger: published closed-form claims audited against the
//! derived pipeline and the eigensolver.
//!
//! Every entry records both sides numerically. Verdicts never gate an exit
//! code; they are data for the reader. Claim ids carry the source equation
//! tag of the published article so entries are machine-findable.

use anyhow::Result;
use serde::Serialize;
use susy_nu_core::catalog::{ptp_energy, scp_energy, stp_energy, NuReducible};
use susy_nu_core::nu::{phi_factor, pi_branches, select_branch, weight_function, BranchPolicy};
use susy_nu_core::orthopoly::{jacobi_g_poly, ShiftedJacobiParams};
use susy_nu_core::poly::Poly;
use susy_nu_core::quad::tanh_sinh;
use susy_nu_core::susy::Sign;
use susy_nu_core::{PtpParams64, ScpParams64, StpParams64};

use crate::config::FamilyParams;
use crate::format::g17;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

/// One audited claim with both numbers attached.
#[derive(Clone, Debug, Serialize)]
pub struct LedgerEntry {
    pub claim_id: String,
    pub location: String,
    pub computed: Vec<f64>,
    pub reference: Vec<f64>,
    pub verdict: Verdict,
    pub tolerance: f64,
    pub note: String,
}

const LEDGER_TOL: f64 = 1e-6;

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

fn seq_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| rel_close(*x, *y, tol))
}

/// Compares a printed energy ladder against the eigensolver's spectrum under
/// both plausible index conventions: term by term, and against the
/// even-indexed subsequence (the `sin²`/`cos²` reductions fold the interval
/// two-to-one, so their polynomial ladder can only see one parity sector).
fn energy_ladder_entry(
    claim_id: &str,
    location: &str,
    printed: Vec<f64>,
    oracle_full: &[f64],
    note_prefix: &str,
) -> LedgerEntry {
    let n = printed.len();
    let full: Vec<f64> = oracle_full.iter().copied().take(n).collect();
    let even: Vec<f64> = oracle_full.iter().copied().step_by(2).take(n).collect();
    let matches_full = seq_close(&printed, &full, LEDGER_TOL);
    let matches_even = even.len() == n && seq_close(&printed, &even, LEDGER_TOL);
    let (verdict, which) = match (matches_full, matches_even) {
        (true, _) => (Verdict::Match, "matches the full spectrum"),
        (false, true) => (Verdict::Match, "matches the even-indexed subsequence"),
        (false, false) => (Verdict::Mismatch, "matches neither indexing convention"),
    };
    LedgerEntry {
        claim_id: claim_id.to_string(),
        location: location.to_string(),
        computed: printed,
        reference: oracle_full.to_vec(),
        verdict,
        tolerance: LEDGER_TOL,
        note: format!("{note_prefix}; printed ladder {which} of the eigensolver reference"),
    }
}

/// Normalization constant of `prefactor(θ)·G_m(z(θ))` by quadrature.
fn quadrature_norm_constant(
    a_exp: f64,
    b_exp: f64,
    weight: (f64, f64),
    degree: usize,
    alpha: f64,
    domain: (f64, f64),
    zmap_sin: bool,
) -> Result<f64> {
    let params = ShiftedJacobiParams::from_weight_exponents(weight.0, weight.1);
    let y: Poly<f64> = jacobi_g_poly(degree, &params)?;
    let shape = move |theta: f64| {
        let arg = alpha * theta;
        let z = if zmap_sin { arg.sin().powi(2) } else { arg.cos().powi(2) };
        z.powf(a_exp) * (1.0 - z).powf(b_exp) * y.eval(z)
    };
    let norm2 = tanh_sinh(|t| shape(t) * shape(t), domain.0, domain.1, 1e-12);
    Ok(1.0 / norm2.sqrt())
}

fn stp_claims(p: &StpParams64, oracle_minus: &[f64]) -> Result<Vec<LedgerEntry>> {
    let mut entries = Vec::new();
    let printed: Vec<f64> = (0..=5).map(|n| stp_energy(p, n, Sign::Minus)).collect::<Result<_, _>>()?;
    entries.push(energy_ladder_entry(
        "eq29-stp-energies",
        "sec. 4.1, eq. (29)",
        printed,
        oracle_minus,
        "squared-tangent minus-partner ladder, -γ orientation as derived",
    ));

    // Branch data for the weight/coefficient claims (energy-independent).
    let prob = p.nu_problem(Sign::Minus, 1.0);
    let fold = BranchPolicy::ParityFold { fold_root: 0.0 };
    let (branch, _) = select_branch(&prob, 0, fold)?;
    let rho = weight_function(&branch, &prob)?;
    let phi = phi_factor(&branch, &prob)?;
    let delta1 = 4.0 * phi.b_exp; // φ = (1-z)^{δ₁/4}

    // Weight exponents: derived (-1/2, (δ₁-1)/2) vs printed (-1, -1+δ₁/2).
    let printed_weight = vec![-1.0, -1.0 + delta1 / 2.0];
    let derived_weight = vec![rho.a_exp, rho.b_exp];
    let verdict = if seq_close(&derived_weight, &printed_weight, LEDGER_TOL) {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    entries.push(LedgerEntry {
        claim_id: "eq30-stp-weight".into(),
        location: "sec. 4.1, eq. (30)".into(),
        computed: derived_weight,
        reference: printed_weight,
        verdict,
        tolerance: LEDGER_TOL,
        note: "weight exponents solving (σρ)' = τρ; the printed z-exponent -1 is not integrable"
            .into(),
    });

    // k-label bookkeeping: the printed branch bracket
    // [(1-√(1+16Ā))z - 1]/4 is assigned to the smaller k; the derived
    // factorization pairs it with the larger one.
    let ks = susy_nu_core::nu::k_candidates(&prob)?;
    let c = p.units.factorization_constant();
    let a_bar = (p.strength * p.strength - c * p.alpha * p.strength)
        / (4.0 * p.units.kappa() * p.alpha * p.alpha);
    let root = (1.0 + 16.0 * a_bar).sqrt();
    let printed_bracket = Poly::linear(-0.25, (1.0 - root) / 4.0);
    let mut matching_k = f64::NAN;
    'outer: for &k in &ks {
        for b in pi_branches(&prob, k)? {
            let offset = Poly::linear(0.25, -0.5);
            let s = &b.pi - &offset;
            if s.approx_eq(&printed_bracket, 1e-10) || s.approx_eq(&printed_bracket.scaled(-1.0), 1e-10)
            {
                matching_k = k;
                break 'outer;
            }
        }
    }
    let k2 = ks[ks.len() - 1];
    let verdict = if rel_close(matching_k, k2, LEDGER_TOL) { Verdict::Match } else { Verdict::Mismatch };
    entries.push(LedgerEntry {
        claim_id: "eq26-27-stp-k-labels".into(),
        location: "sec. 4.1, eqs. (26)-(27)".into(),
        computed: vec![matching_k],
        reference: vec![k2],
        verdict,
        tolerance: LEDGER_TOL,
        note: "k value whose square-root bracket matches the printed k₂ branch; the printed \
               labels pair it with the smaller root while the factorization gives the larger"
            .into(),
    });

    // Printed normalization coefficient vs quadrature normalization of the
    // even-sector states (the printed index domain starts at 2).
    let mut computed = Vec::new();
    let mut reference = Vec::new();
    for n_bar in 2..=3usize {
        let printed_c = susy_nu_core::orthopoly::stp_coefficient(n_bar, delta1)?;
        let quad_c = quadrature_norm_constant(
            phi.a_exp,
            phi.b_exp,
            (rho.a_exp, rho.b_exp),
            n_bar,
            p.alpha,
            (-std::f64::consts::FRAC_PI_2 / p.alpha, std::f64::consts::FRAC_PI_2 / p.alpha),
            true,
        )?;
        computed.push(printed_c);
        reference.push(quad_c);
    }
    let verdict = if seq_close(&computed, &reference, LEDGER_TOL) {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    let ratio: Vec<String> = computed
        .iter()
        .zip(&reference)
        .map(|(c, r)| g17(c / r))
        .collect();
    entries.push(LedgerEntry {
        claim_id: "eq32-stp-norm-coeff".into(),
        location: "sec. 4.1, eq. (32)".into(),
        computed,
        reference,
        verdict,
        tolerance: LEDGER_TOL,
        note: format!(
            "printed coefficient at index 2..3 vs quadrature normalization of the even-sector \
             state of the same polynomial degree; ratios {}",
            ratio.join(", ")
        ),
    });

    Ok(entries)
}

fn scp_claims(p: &ScpParams64, oracle_minus: &[f64]) -> Result<Vec<LedgerEntry>> {
    let printed: Vec<f64> = (0..=5).map(|n| scp_energy(p, n, Sign::Minus)).collect::<Result<_, _>>()?;
    Ok(vec![energy_ladder_entry(
        "eq38-scp-energies",
        "sec. 4.2, eq. (38)",
        printed,
        oracle_minus,
        "squared-cotangent minus-partner ladder, +γ orientation as derived",
    )])
}

fn ptp_claims(p: &PtpParams64, oracle_minus: &[f64]) -> Result<Vec<LedgerEntry>> {
    let mut entries = Vec::new();
    let printed: Vec<f64> = (0..=5).map(|n| ptp_energy(p, n, Sign::Minus)).collect::<Result<_, _>>()?;
    entries.push(energy_ladder_entry(
        "eq49-ptp-energies",
        "sec. 4.3, eq. (49)",
        printed,
        oracle_minus,
        "Pöschl–Teller minus-partner ladder",
    ));

    // cosec² partner coefficient: derived a(a + cα) vs the printed
    // (α² + αa) form.
    let c = p.units.factorization_constant();
    let derived_a1 = p.a * (p.a + c * p.alpha);
    let printed_a1 = p.alpha * p.alpha + p.alpha * p.a;
    let verdict = if rel_close(derived_a1, printed_a1, LEDGER_TOL) {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    entries.push(LedgerEntry {
        claim_id: "eq41-ptp-csc2-coeff".into(),
        location: "sec. 4.3, eq. (41)".into(),
        computed: vec![derived_a1],
        reference: vec![printed_a1],
        verdict,
        tolerance: LEDGER_TOL,
        note: "minus-partner cosec² coefficient; dimensional analysis and the dimensionless \
               groups below support a², indicating a typo for the printed α²"
            .into(),
    });

    // φ and weight exponents vs the printed symmetric powers.
    let prob = p.nu_problem(Sign::Minus, 1.0);
    let (branch, _) = select_branch(&prob, 0, BranchPolicy::Single)?;
    let phi = phi_factor(&branch, &prob)?;
    let rho = weight_function(&branch, &prob)?;
    let s_a = 4.0 * phi.a_exp - 1.0; // φ z-exponent (1+s_a)/4
    let s_b = 4.0 * phi.b_exp - 1.0;
    let mu = (s_a + s_b) / 2.0;
    let derived = vec![phi.a_exp, phi.b_exp, rho.a_exp, rho.b_exp];
    let printed_exps = vec![(1.0 + mu) / 2.0, (1.0 + mu) / 2.0, mu, mu];
    let verdict = if seq_close(&derived, &printed_exps, LEDGER_TOL) {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    entries.push(LedgerEntry {
        claim_id: "eq50-51-ptp-exponents".into(),
        location: "sec. 4.3, eqs. (50)-(51)".into(),
        computed: derived,
        reference: printed_exps,
        verdict,
        tolerance: LEDGER_TOL,
        note: "derived (φ_z, φ_{1-z}, ρ_z, ρ_{1-z}) exponents vs the printed \
               [z(1-z)]^{(1+μ)/2} and [z(1-z)]^μ powers; the printed weight also fails its own \
               defining relation"
            .into(),
    });

    // Printed k constant term vs the derived one (they differ by (b̃-ã)/2).
    let e_probe = 1.0;
    let kappa = p.units.kappa();
    let scale = kappa * p.alpha * p.alpha;
    let pair = susy_nu_core::susy::partner_potentials(&p.superpotential(), &p.units);
    let a_t = pair.v_minus.csc2 / scale;
    let b_t = pair.v_minus.sec2 / scale;
    let e1 = (e_probe + (p.a - p.b) * (p.a - p.b)) / scale;
    let e2 = e1 + a_t - b_t;
    let derived_const = 0.25 + e2 / 2.0 - a_t;
    let printed_const = 0.25 * (1.0 + 2.0 * e2) - (a_t + b_t) / 2.0;
    let verdict = if rel_close(derived_const, printed_const, LEDGER_TOL) {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    entries.push(LedgerEntry {
        claim_id: "eq46-ptp-k-const".into(),
        location: "sec. 4.3, eq. (46)".into(),
        computed: vec![derived_const],
        reference: vec![printed_const],
        verdict,
        tolerance: LEDGER_TOL,
        note: "non-radical part of the k candidates; the two agree exactly when the two \
               dimensionless strengths coincide and differ by (b̃-ã)/2 otherwise"
            .into(),
    });

    // Printed normalization coefficient vs quadrature normalization.
    let mut computed = Vec::new();
    let mut reference = Vec::new();
    for n in 0..=1usize {
        computed.push(susy_nu_core::orthopoly::ptp_coefficient(n, mu)?);
        reference.push(quadrature_norm_constant(
            phi.a_exp,
            phi.b_exp,
            (rho.a_exp, rho.b_exp),
            n,
            p.alpha,
            (0.0, std::f64::consts::FRAC_PI_2 / p.alpha),
            true,
        )?);
    }
    let verdict = if seq_close(&computed, &reference, LEDGER_TOL) {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    let ratio: Vec<String> = computed.iter().zip(&reference).map(|(c, r)| g17(c / r)).collect();
    entries.push(LedgerEntry {
        claim_id: "eq52-ptp-norm-coeff".into(),
        location: "sec. 4.3, eq. (52)".into(),
        computed,
        reference,
        verdict,
        tolerance: LEDGER_TOL,
        note: format!(
            "printed coefficient at n = 0..1 vs quadrature normalization of the working \
             bound states; ratios {}",
            ratio.join(", ")
        ),
    });

    Ok(entries)
}

/// Evaluates every claim for one family, given enough oracle levels to test
/// both indexing conventions (11 levels cover printed indices 0..=5).
pub fn claims_for(params: &FamilyParams, oracle_minus: &[f64]) -> Result<Vec<LedgerEntry>> {
    match params {
        FamilyParams::Stp(p) => stp_claims(p, oracle_minus),
        FamilyParams::Scp(p) => scp_claims(p, oracle_minus),
        FamilyParams::Ptp(p) => ptp_claims(p, oracle_minus),
    }
}
