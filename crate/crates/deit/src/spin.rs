//! Collective spin-J algebra and the photon/spin-excitation bookkeeping
//! behind the number-filter rule.
//!
//! Sectors are tracked classically: a sector (n_s, n_p) holds n_s spin
//! atoms of which n_p have been flipped by stored probe photons, so
//! J = n_s/2, M_J = J - n_p and J+J- evaluates to (n_s - n_p)(n_p + 1).

use serde::Serialize;

use crate::coupling::CouplingScene;
use crate::error::{DeitError, Result};
use crate::optics::MediumConfig;
use crate::quadrature::integrate_adaptive;

/// A photon-storage sector: n_s spins prepared up, n_p probe photons
/// currently stored in the medium.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpinSector {
    pub n_s: u32,
    pub n_p: u32,
}

impl SpinSector {
    pub fn new(n_s: u32, n_p: u32) -> Self {
        SpinSector { n_s, n_p }
    }

    /// Collective spin J = n_s / 2 (doubled representation).
    pub fn two_j(&self) -> i32 {
        self.n_s as i32
    }

    /// Spin projection M_J = J - n_p (doubled representation).
    pub fn two_m(&self) -> i32 {
        self.n_s as i32 - 2 * self.n_p as i32
    }

    /// Whether the sector still accepts a photon (n_p <= n_s keeps
    /// M_J within [-J, J]; transparency needs n_p < n_s).
    pub fn is_open(&self) -> bool {
        self.n_p < self.n_s
    }

    /// Sector after admitting one more photon.
    pub fn admitted(&self) -> SpinSector {
        SpinSector::new(self.n_s, self.n_p + 1)
    }
}

/// Amplitudes of J-|J,M> and J+|J,M>: sqrt((J+M)(J-M+1)) and
/// sqrt((J-M)(J+M+1)).
pub fn ladder_elements(two_j: i32, two_m: i32) -> Result<(f64, f64)> {
    if two_j < 0 || two_m.abs() > two_j || (two_j - two_m) % 2 != 0 {
        return Err(DeitError::Domain(format!(
            "invalid |J, M>: 2J = {two_j}, 2M = {two_m}"
        )));
    }
    let j = two_j as f64 / 2.0;
    let m = two_m as f64 / 2.0;
    let lower = ((j + m) * (j - m + 1.0)).sqrt();
    let raise = ((j - m) * (j + m + 1.0)).sqrt();
    Ok((lower, raise))
}

/// Eigenvalue of J+J- on the sector state |J, J - n_p>:
/// (n_s - n_p)(n_p + 1) for n_p <= n_s, zero for a closed sector.
pub fn jpjm_eigenvalue(sector: SpinSector) -> f64 {
    if sector.n_p >= sector.n_s {
        return 0.0;
    }
    ((sector.n_s - sector.n_p) as f64) * ((sector.n_p + 1) as f64)
}

/// Flux-balance bookkeeping: stored excitations J - J_z from the photon
/// flux difference, clamped at 2J with the excess reported as photons the
/// two-level medium absorbed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxBalance {
    /// J - J_z actually stored on the spins.
    pub stored: f64,
    /// Photons beyond saturation, destined for two-level absorption.
    pub overflow: f64,
}

pub fn photon_spin_balance(flux_in: f64, flux_out: f64, two_j: i32) -> Result<FluxBalance> {
    if flux_in < 0.0 || flux_out < 0.0 {
        return Err(DeitError::Domain("photon fluxes must be >= 0".into()));
    }
    if flux_out > flux_in {
        return Err(DeitError::Domain(
            "outgoing flux exceeds incoming flux".into(),
        ));
    }
    let diff = flux_in - flux_out;
    let cap = two_j as f64;
    if diff > cap {
        Ok(FluxBalance {
            stored: cap,
            overflow: diff - cap,
        })
    } else {
        Ok(FluxBalance {
            stored: diff,
            overflow: 0.0,
        })
    }
}

/// Ratio of in-medium photon number to stored spin excitations,
/// 2J Dbar^2 / (eta^2 N) with Dbar^2 the spatial mean of D(z)^2.
///
/// Small values mean nearly all probe excitation rides on the spins.
pub fn stored_photon_fraction(
    medium: &MediumConfig,
    scene: &CouplingScene,
    sector: SpinSector,
) -> f64 {
    let l = medium.length;
    let dbar2 = integrate_adaptive(|z| scene.exchange_field(z).powi(2), 0.0, l, 1e-10) / l;
    sector.n_s as f64 * dbar2 / medium.eta2_n()
}
