//! Spectrum records shared by the closed-form, quantization, and
//! finite-difference solution paths.

use crate::real::Real;
use crate::susy::Units;

/// Which solution path produced a spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Telescoped shape-invariance remainders or a printed closed form.
    ClosedForm,
    /// Root of the polynomial quantization condition.
    NuQuantization,
    /// Discretized eigensolver.
    Oracle,
}

impl Provenance {
    pub fn label(&self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::NuQuantization => "nu",
            Provenance::Oracle => "oracle",
        }
    }
}

/// Ordered `(n, Eₙ)` pairs with provenance and the unit system they are
/// expressed in.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumResult<R: Real> {
    pub energies: Vec<(usize, R)>,
    pub provenance: Provenance,
    pub units: Units<R>,
}

impl<R: Real> SpectrumResult<R> {
    pub fn energy(&self, n: usize) -> Option<R> {
        self.energies.iter().find(|(i, _)| *i == n).map(|(_, e)| *e)
    }

    pub fn values(&self) -> Vec<R> {
        self.energies.iter().map(|(_, e)| *e).collect()
    }
}
