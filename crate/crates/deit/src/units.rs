//! Canonical internal unit system: lengths in micrometers, angular
//! frequencies in rad/us, times in microseconds.
//!
//! A frequency quoted as "2pi x f MHz" equals `f * MHZ` rad/us, so the
//! numeric factor in front of the unit carries over unchanged.

/// Speed of light in um/us (numerically equal to its m/s value).
pub const C_UM_PER_US: f64 = 2.99792458e8;

pub const TWO_PI: f64 = std::f64::consts::TAU;

/// 2pi x 1 Hz in rad/us.
pub const HZ: f64 = TWO_PI * 1e-6;
/// 2pi x 1 kHz in rad/us.
pub const KHZ: f64 = TWO_PI * 1e-3;
/// 2pi x 1 MHz in rad/us.
pub const MHZ: f64 = TWO_PI;
/// 2pi x 1 GHz in rad/us.
pub const GHZ: f64 = TWO_PI * 1e3;

/// Rydberg constant R_inf c in Hz (CODATA 2018).
pub const RYDBERG_INF_HZ: f64 = 3.2898419602500e15;
/// Electron mass in unified atomic mass units.
pub const ELECTRON_MASS_U: f64 = 5.48579909065e-4;

/// One (e a0)^2 / (4 pi eps0 hbar) expressed in rad/us um^3.
///
/// Converts a product of two dipole moments in atomic units (e a0)
/// directly into an exchange coefficient C3.
pub const EA0_SQ_OVER_4PIEPS0_HBAR: f64 = {
    // e^2 a0^2 / (4 pi eps0 hbar) = 6.126...e-15 rad m^3/s
    // -> x1e18 (m^3 -> um^3) x1e-6 (1/s -> 1/us)
    6.126159483277505e-3
};

/// Fine-structure constant.
pub const ALPHA_FS: f64 = 7.2973525693e-3;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dipole_conversion_constant() {
        let e = 1.602176634e-19f64;
        let a0 = 5.29177210903e-11f64;
        let eps0 = 8.8541878128e-12f64;
        let hbar = 1.054571817e-34f64;
        let rad_m3_per_s = (e * a0).powi(2) / (4.0 * std::f64::consts::PI * eps0 * hbar);
        let rad_um3_per_us = rad_m3_per_s * 1e18 * 1e-6;
        let rel = (rad_um3_per_us - EA0_SQ_OVER_4PIEPS0_HBAR).abs() / EA0_SQ_OVER_4PIEPS0_HBAR;
        assert!(rel < 1e-9, "conversion constant drift: {rel}");
    }

    #[test]
    fn angular_frequency_scale() {
        // 2pi x 3 MHz must equal 3 * MHZ exactly
        assert_eq!(3.0 * MHZ, TWO_PI * 3.0);
    }
}
