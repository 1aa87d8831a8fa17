//! Dipolar-exchange-induced transparency end to end: Rydberg structure
//! and exchange coupling, the sector-resolved medium susceptibility,
//! slow-light transport with photon-number filtering, and an independent
//! few-excitation Schrodinger solver for verification.

pub mod atomic;
pub mod coupling;
pub mod error;
pub mod optics;
pub mod oracle;
pub mod propagation;
pub mod quadrature;
pub mod scenario;
pub mod spin;
pub mod units;
pub mod wigner;

pub use error::{DeitError, Result};
