//! Spectral engine for one-dimensional trigonometric quantum wells.
//!
//! The crate builds supersymmetric partner potentials from `tan`/`cot`
//! superpotentials and solves the resulting bound-state problems three
//! independent ways:
//!
//! * closed forms from shape invariance ([`susy::hierarchy_spectrum`]) and
//!   the published parametric spectra ([`catalog`]),
//! * the polynomial quantization condition of the hypergeometric reduction
//!   ([`nu`]),
//! * a brute-force finite-difference eigensolver ([`oracle`]).
//!
//! The three routes arbitrate each other; divergences between derived and
//! published formulas are surfaced as data rather than smoothed over.
//!
//! All numeric kernels are generic over the scalar type through [`Real`];
//! the `*64` aliases below fix `f64`, which every documented tolerance
//! assumes.

pub mod catalog;
pub mod nu;
pub mod oracle;
pub mod orthopoly;
pub mod poly;
pub mod quad;
pub mod real;
pub mod special;
pub mod spectrum;
pub mod susy;

pub use real::Real;

pub type Poly64 = poly::Poly<f64>;
pub type NuProblem64 = nu::NuProblem<f64>;
pub type PiBranch64 = nu::PiBranch<f64>;
pub type BetaWeight64 = nu::BetaWeight<f64>;
pub type BranchPolicy64 = nu::BranchPolicy<f64>;
pub type Units64 = susy::Units<f64>;
pub type Domain64 = susy::Domain<f64>;
pub type Superpotential64 = susy::Superpotential<f64>;
pub type TrigPotential64 = susy::TrigPotential<f64>;
pub type PartnerPair64 = susy::PartnerPair<f64>;
pub type GroundState64 = susy::GroundState<f64>;
pub type StpParams64 = catalog::StpParams<f64>;
pub type ScpParams64 = catalog::ScpParams<f64>;
pub type PtpParams64 = catalog::PtpParams<f64>;
pub type PtForm64 = catalog::PtForm<f64>;
pub type WaveFn64 = catalog::WaveFn<f64>;
pub type Grid64 = oracle::Grid<f64>;
pub type TridiagonalSym64 = oracle::TridiagonalSym<f64>;
pub type EigenResult64 = oracle::EigenResult<f64>;
pub type GridFunction64 = oracle::GridFunction<f64>;
pub type SpectrumResult64 = spectrum::SpectrumResult<f64>;
pub type ShiftedJacobiParams64 = orthopoly::ShiftedJacobiParams<f64>;
