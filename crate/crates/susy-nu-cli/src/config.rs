//! Run configuration shared by every subcommand.

use std::path::PathBuf;

use clap::ValueEnum;
use susy_nu_core::catalog::{CatalogError, PtpParams, ScpParams, StpParams};
use susy_nu_core::spectrum::SpectrumResult;
use susy_nu_core::susy::{Sign, Superpotential, SusyError, Units};
use susy_nu_core::{PtpParams64, ScpParams64, StpParams64, Units64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Stp,
    Scp,
    Ptp,
}

impl Family {
    pub fn label(&self) -> &'static str {
        match self {
            Family::Stp => "stp",
            Family::Scp => "scp",
            Family::Ptp => "ptp",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    #[value(name = "closed-form")]
    ClosedForm,
    Nu,
    Oracle,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum UnitsPreset {
    #[value(name = "hbar2-eq-2m")]
    Hbar2Eq2m,
    #[value(name = "hbar-m-1")]
    HbarM1,
}

impl UnitsPreset {
    pub fn units(&self) -> Units64 {
        match self {
            UnitsPreset::Hbar2Eq2m => Units::hbar2_eq_2m(),
            UnitsPreset::HbarM1 => Units::hbar_m_one(),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            UnitsPreset::Hbar2Eq2m => "hbar2-eq-2m",
            UnitsPreset::HbarM1 => "hbar-m-1",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Minus,
    Plus,
}

impl SignArg {
    pub fn sign(&self) -> Sign {
        match self {
            SignArg::Minus => Sign::Minus,
            SignArg::Plus => Sign::Plus,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SignArg::Minus => "minus",
            SignArg::Plus => "plus",
        }
    }
}

/// Validated parameters for one run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub potential: Family,
    /// Superpotential strength for the single-term families (`--A`).
    pub strength: f64,
    /// Cotangent coefficient for the Pöschl–Teller family (`--a`).
    pub a: f64,
    /// Tangent coefficient for the Pöschl–Teller family (`--b`).
    pub b: f64,
    pub alpha: f64,
    pub sign: SignArg,
    pub n_max: usize,
    pub method: Method,
    pub units: UnitsPreset,
    pub grid: usize,
    pub tol: f64,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            potential: Family::Stp,
            strength: 2.0,
            a: -2.0,
            b: 2.0,
            alpha: 1.0,
            sign: SignArg::Minus,
            n_max: 7,
            method: Method::All,
            units: UnitsPreset::Hbar2Eq2m,
            grid: 4096,
            tol: 1e-6,
            format: OutputFormat::Csv,
            out: None,
            seed: susy_nu_core::oracle::DEFAULT_SEED,
        }
    }
}

#[derive(Debug)]
pub enum ConfigError {
    Invalid(String),
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConfigError::Invalid(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl std::error::Error for ConfigError {}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.alpha == 0.0 || !self.alpha.is_finite() {
            return Err(ConfigError::Invalid("alpha must be nonzero and finite".into()));
        }
        if self.grid < 32 || self.grid % 2 != 0 {
            return Err(ConfigError::Invalid(
                "grid must be an even number of at least 32 points".into(),
            ));
        }
        if self.n_max > 64 {
            return Err(ConfigError::Invalid("n-max larger than 64 is not supported".into()));
        }
        if !(self.tol >= 0.0) {
            return Err(ConfigError::Invalid("tol must be nonnegative".into()));
        }
        match self.potential {
            Family::Stp | Family::Scp => {
                if !(self.strength > 0.0) {
                    return Err(ConfigError::Invalid("strength A must be positive".into()));
                }
            }
            Family::Ptp => {
                if !self.a.is_finite() || !self.b.is_finite() {
                    return Err(ConfigError::Invalid("a and b must be finite".into()));
                }
            }
        }
        Ok(())
    }

    pub fn units(&self) -> Units64 {
        self.units.units()
    }

    pub fn family_params(&self) -> Result<FamilyParams, CatalogError> {
        let u = self.units();
        Ok(match self.potential {
            Family::Stp => FamilyParams::Stp(StpParams::new(self.strength, self.alpha, u)?),
            Family::Scp => FamilyParams::Scp(ScpParams::new(self.strength, self.alpha, u)?),
            Family::Ptp => FamilyParams::Ptp(PtpParams::new(self.a, self.b, self.alpha, u)?),
        })
    }
}

/// Uniform dispatch over the three families.
#[derive(Clone, Copy, Debug)]
pub enum FamilyParams {
    Stp(StpParams64),
    Scp(ScpParams64),
    Ptp(PtpParams64),
}

impl FamilyParams {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyParams::Stp(_) => "stp",
            FamilyParams::Scp(_) => "scp",
            FamilyParams::Ptp(_) => "ptp",
        }
    }

    pub fn printed_energy(&self, n: usize, sign: Sign) -> Result<f64, CatalogError> {
        match self {
            FamilyParams::Stp(p) => susy_nu_core::catalog::stp_energy(p, n, sign),
            FamilyParams::Scp(p) => susy_nu_core::catalog::scp_energy(p, n, sign),
            FamilyParams::Ptp(p) => susy_nu_core::catalog::ptp_energy(p, n, sign),
        }
    }

    pub fn nu_spectrum(&self, sign: Sign, n_max: usize) -> Result<SpectrumResult<f64>, CatalogError> {
        use susy_nu_core::catalog::NuReducible;
        match self {
            FamilyParams::Stp(p) => p.nu_spectrum(sign, n_max),
            FamilyParams::Scp(p) => p.nu_spectrum(sign, n_max),
            FamilyParams::Ptp(p) => p.nu_spectrum(sign, n_max),
        }
    }

    pub fn oracle_spectrum(
        &self,
        sign: Sign,
        n_max: usize,
        grid: usize,
    ) -> Result<SpectrumResult<f64>, CatalogError> {
        use susy_nu_core::catalog::NuReducible;
        match self {
            FamilyParams::Stp(p) => p.oracle_spectrum(sign, n_max, grid),
            FamilyParams::Scp(p) => p.oracle_spectrum(sign, n_max, grid),
            FamilyParams::Ptp(p) => p.oracle_spectrum(sign, n_max, grid),
        }
    }

    pub fn superpotential(&self) -> Superpotential<f64> {
        match self {
            FamilyParams::Stp(p) => p.superpotential(),
            FamilyParams::Scp(p) => p.superpotential(),
            FamilyParams::Ptp(p) => p.superpotential(),
        }
    }

    pub fn units(&self) -> Units64 {
        match self {
            FamilyParams::Stp(p) => p.units,
            FamilyParams::Scp(p) => p.units,
            FamilyParams::Ptp(p) => p.units,
        }
    }

    pub fn hierarchy(&self, n_max: usize) -> Result<SpectrumResult<f64>, SusyError> {
        susy_nu_core::susy::hierarchy_spectrum(&self.superpotential(), &self.units(), n_max)
    }

    pub fn partner(&self, sign: Sign) -> susy_nu_core::TrigPotential64 {
        *susy_nu_core::susy::partner_potentials(&self.superpotential(), &self.units())
            .potential(sign)
    }

    pub fn wavefunction(&self, n: usize) -> Result<susy_nu_core::WaveFn64, CatalogError> {
        match self {
            FamilyParams::Stp(p) => susy_nu_core::catalog::stp_wavefunction(p, n),
            FamilyParams::Scp(p) => susy_nu_core::catalog::scp_wavefunction(p, n),
            FamilyParams::Ptp(p) => susy_nu_core::catalog::ptp_wavefunction(p, n),
        }
    }
}
