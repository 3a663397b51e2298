//! Exact combinatorics of integer partitions (characters, branched-cover
//! counts, shifted power sums, quasimodular q-series, Plancherel sampling)
//! together with a numeric wing for periodic dimer models (Kasteleyn
//! determinants, spectral curves, amoebas, Ronkin functions, limit shapes).
//!
//! The crate is split in two halves that share almost nothing but the
//! partition type:
//!
//! * the *exact* half ([`partition`], [`characters`], [`shifted`],
//!   [`qseries`], [`hurwitz`], [`gw`], [`quasimodular`], [`plancherel`])
//!   works over arbitrary-precision rationals and never touches floating
//!   point on a result path;
//! * the *numeric* half ([`laurent`], [`dimer`], [`amoeba`]) works over
//!   `f64`, with exact rational oracles ([`dimer::matching_oracle`]) used
//!   to validate the determinant pipelines.

pub mod amoeba;
pub mod characters;
pub mod dimer;
pub mod error;
pub mod gw;
pub mod hurwitz;
pub mod laurent;
pub mod linalg;
pub mod partition;
pub mod plancherel;
pub mod qseries;
pub mod quasimodular;
pub mod rational;
pub mod roots;
pub mod selftest;
pub mod shifted;

pub use error::Error;
pub use partition::Partition;
pub use qseries::QSeries;
pub use rational::Rational;
