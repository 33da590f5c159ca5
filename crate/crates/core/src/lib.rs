//! Exact solution of two harmonically trapped bosons with a contact
//! interaction, thermal one-body density kernels, spatial-mode entanglement
//! witnesses, and an independent Fock-space check of the beamsplitter
//! detection identity.
//!
//! Units throughout: oscillator units, hbar = m = omega = 1. Lengths are in
//! ground-state widths, energies in hbar*omega, temperatures in
//! hbar*omega/k_B.

pub(crate) mod dd;

pub mod cheb;
pub mod fock;
pub mod modes;
pub mod quad;
pub mod rootfind;
pub mod specfun;
pub mod sprdm;
pub mod sweep;
pub mod twoboson;

pub use modes::{Block, CorrelatorMatrix, ModeSet, SpatialMode, Weight};
pub use sprdm::{SprdmEvaluator, ThermalEnsemble};
pub use twoboson::{Coupling, EigenPair};

/// Unified error type for library consumers that do not care which layer
/// failed. Individual modules expose finer-grained enums.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    SpecFun(#[from] specfun::SpecFunError),
    #[error(transparent)]
    Quad(#[from] quad::QuadError),
    #[error(transparent)]
    Root(#[from] rootfind::RootError),
    #[error(transparent)]
    TwoBoson(#[from] twoboson::TwoBosonError),
    #[error(transparent)]
    Sprdm(#[from] sprdm::SprdmError),
    #[error(transparent)]
    Modes(#[from] modes::ModeError),
    #[error(transparent)]
    Fock(#[from] fock::FockError),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// True for errors caused by invalid user input rather than a numerical
    /// breakdown; drives the CLI exit-code split.
    pub fn is_config(&self) -> bool {
        match self {
            Error::Config(_) => true,
            Error::Modes(modes::ModeError::Overlap { .. }) => true,
            Error::Modes(modes::ModeError::BadWeight(_)) => true,
            Error::Modes(modes::ModeError::BadBlock(_)) => true,
            Error::Modes(modes::ModeError::BadThreshold(_)) => true,
            Error::Modes(modes::ModeError::SizeCap { .. }) => true,
            Error::Fock(fock::FockError::BadDistribution(_)) => true,
            Error::Fock(fock::FockError::CapExceeded { .. }) => true,
            Error::SpecFun(specfun::SpecFunError::OrderExceeded { .. }) => true,
            Error::Sprdm(sprdm::SprdmError::BadTemperature(_)) => true,
            Error::Sprdm(sprdm::SprdmError::BadTailTol(_)) => true,
            Error::Sprdm(sprdm::SprdmError::GridNotIncreasing { .. }) => true,
            Error::Sprdm(sprdm::SprdmError::ComCapExceeded { .. }) => true,
            Error::Sprdm(sprdm::SprdmError::TwoBoson(e)) => twoboson_is_config(e),
            Error::TwoBoson(e) => twoboson_is_config(e),
            _ => false,
        }
    }
}

// Coupling validation failures are config errors no matter how deeply the
// SPRDM layer wraps them.
fn twoboson_is_config(e: &twoboson::TwoBosonError) -> bool {
    matches!(
        e,
        twoboson::TwoBosonError::NegativeCoupling { .. }
            | twoboson::TwoBosonError::ParseCoupling(_)
            | twoboson::TwoBosonError::BadTransverseWidth(_)
    )
}
