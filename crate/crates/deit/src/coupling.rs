//! Medium-spin geometry, the bare dipole-dipole interaction, the
//! adiabatically eliminated exchange field D(z), induced level shifts and
//! the validity report.

use serde::Serialize;

use crate::error::{DeitError, Result};
use crate::optics::MediumConfig;
use crate::units::EA0_SQ_OVER_4PIEPS0_HBAR;

/// Geometry and drive of the exchange coupling: the effective spin sits
/// at `spin_position` (off the probe axis), the auxiliary field has Rabi
/// frequency `rabi` and detuning `detuning`, and `c3` is the exchange
/// coefficient of the chosen Rydberg pair.
#[derive(Debug, Clone, Serialize)]
pub struct CouplingScene {
    /// Spin position (x_s, y_s, z_s) in um.
    pub spin_position: [f64; 3],
    /// Extent of the spin cloud, um.
    pub spin_cloud_size: f64,
    /// Probe transverse waist w, um.
    pub probe_waist: f64,
    /// Medium length L, um.
    pub medium_length: f64,
    /// Auxiliary-field Rabi frequency Omega_c, rad/us.
    pub rabi: f64,
    /// Auxiliary-field detuning Delta_c, rad/us.
    pub detuning: f64,
    /// Exchange coefficient C3, rad/us um^3.
    pub c3: f64,
    /// Unit vector of the medium-transition dipole (default y).
    pub dipole_ri_dir: [f64; 3],
    /// Unit vector of the spin-transition dipole (default y).
    pub dipole_du_dir: [f64; 3],
    /// |p_ri / p_du|, used only by the validity report.
    pub dipole_ratio: Option<f64>,
}

impl CouplingScene {
    /// Build a scene with the default geometry: dipoles along y, spin at
    /// (x_s, 0, z_s). Enforces x_s > w and the cloud-size bound
    /// spin_cloud_size < x_s / 3; softer conditions go to the validity
    /// report.
    pub fn new(
        x_s: f64,
        z_s: f64,
        spin_cloud_size: f64,
        probe_waist: f64,
        medium_length: f64,
        rabi: f64,
        detuning: f64,
        c3: f64,
    ) -> Result<Self> {
        if medium_length <= 0.0 || probe_waist <= 0.0 {
            return Err(DeitError::Config(
                "medium length and probe waist must be positive".into(),
            ));
        }
        if x_s <= probe_waist {
            return Err(DeitError::Config(format!(
                "spin must sit off the probe axis: x_s = {x_s} um <= waist w = {probe_waist} um"
            )));
        }
        if spin_cloud_size < 0.0 || spin_cloud_size >= x_s / 3.0 {
            return Err(DeitError::Config(format!(
                "spin cloud size {spin_cloud_size} um must satisfy dr < x_s/3 = {} um",
                x_s / 3.0
            )));
        }
        if detuning == 0.0 {
            return Err(DeitError::Config(
                "auxiliary detuning Delta_c must be nonzero".into(),
            ));
        }
        Ok(CouplingScene {
            spin_position: [x_s, 0.0, z_s],
            spin_cloud_size,
            probe_waist,
            medium_length,
            rabi,
            detuning,
            c3,
            dipole_ri_dir: [0.0, 1.0, 0.0],
            dipole_du_dir: [0.0, 1.0, 0.0],
            dipole_ratio: None,
        })
    }

    /// Separation vector from the spin to the medium atom at z on the
    /// probe axis.
    pub fn separation(&self, z: f64) -> [f64; 3] {
        [
            -self.spin_position[0],
            -self.spin_position[1],
            z - self.spin_position[2],
        ]
    }

    /// Exchange field D(z) = C3 (Omega_c/Delta_c) / |z e_z - r_s|^3,
    /// rad/us. Finite for all z because x_s > w > 0.
    pub fn exchange_field(&self, z: f64) -> f64 {
        let r = self.separation(z);
        let dist2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        self.c3.abs() * (self.rabi / self.detuning) / dist2.powf(1.5)
    }

    /// Bare dipole-dipole rate |D_as(z)| = C3 / |z e_z - r_s|^3 before the
    /// auxiliary-field reduction, rad/us.
    pub fn bare_exchange(&self, z: f64) -> f64 {
        let r = self.separation(z);
        let dist2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        self.c3.abs() / dist2.powf(1.5)
    }

    /// ac Stark shift of |e> and the dipole-dipole induced shift of |r>
    /// at position z: (Omega_c^2/Delta_c, -|D_as(z)|^2/Delta_c), rad/us.
    pub fn level_shifts(&self, z: f64) -> (f64, f64) {
        let stark = self.rabi * self.rabi / self.detuning;
        let das = self.bare_exchange(z);
        (stark, -das * das / self.detuning)
    }
}

/// Full anisotropic dipole-dipole rate between dipole vectors `p_a`,
/// `p_b` (e a0) separated by `r` (um), in rad/us:
/// (1/4 pi eps0 hbar) [p_a.p_b / r^3 - 3 (p_a.r)(p_b.r) / r^5].
pub fn dipole_dipole(r: [f64; 3], p_a: [f64; 3], p_b: [f64; 3]) -> Result<f64> {
    let r2 = dot(r, r);
    if r2 == 0.0 {
        return Err(DeitError::ZeroSeparation);
    }
    let r3 = r2 * r2.sqrt();
    let r5 = r3 * r2;
    let v = dot(p_a, p_b) / r3 - 3.0 * dot(p_a, r) * dot(p_b, r) / r5;
    Ok(EA0_SQ_OVER_4PIEPS0_HBAR * v)
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// The (1 - 3 cos^2 theta) anisotropy factor of the spin-spin coupling
/// for spins arranged on a line at angle `theta` to the dipole axis.
/// Vanishes at the magic angle cos^2 theta = 1/3; spin-spin couplings are
/// otherwise not evolved here.
pub fn spin_spin_angular_factor(theta: f64) -> f64 {
    1.0 - 3.0 * theta.cos().powi(2)
}

/// Numerically invert D(L/2) = target for the spin offset x_s (um).
pub fn solve_spin_offset(c3: f64, rabi: f64, detuning: f64, target_d_mid: f64) -> Result<f64> {
    if target_d_mid <= 0.0 || rabi == 0.0 {
        return Err(DeitError::Config(
            "target exchange field must be positive with a nonzero drive".into(),
        ));
    }
    let dc = (c3 * rabi / detuning).abs();
    // bisection on x -> dc/x^3 - target, bracket [1e-3, 1e4] um
    let f = |x: f64| dc / x.powi(3) - target_d_mid;
    let (mut lo, mut hi) = (1e-3, 1e4);
    if f(lo) < 0.0 || f(hi) > 0.0 {
        return Err(DeitError::Config(format!(
            "target D(L/2) = {target_d_mid} rad/us out of reach"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Grade of a single validity line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Grade {
    Pass,
    Warn,
    Fail,
    Info,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidityLine {
    pub name: String,
    /// Ratio of the favourable side to the constrained side; larger is
    /// safer. Infinite margins are reported as f64::INFINITY.
    pub margin: f64,
    pub grade: Grade,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidityReport {
    pub lines: Vec<ValidityLine>,
}

impl ValidityReport {
    pub fn worst(&self) -> Grade {
        let mut worst = Grade::Pass;
        for l in &self.lines {
            worst = match (worst, l.grade) {
                (_, Grade::Fail) | (Grade::Fail, _) => Grade::Fail,
                (_, Grade::Warn) | (Grade::Warn, _) => Grade::Warn,
                (w, _) => w,
            };
        }
        worst
    }

    pub fn has_failure(&self) -> bool {
        self.worst() == Grade::Fail
    }
}

fn graded(name: &str, margin: f64, detail: String) -> ValidityLine {
    let grade = if margin >= 10.0 - 1e-9 {
        Grade::Pass
    } else if margin >= 3.0 {
        Grade::Warn
    } else {
        Grade::Fail
    };
    ValidityLine {
        name: name.to_string(),
        margin,
        grade,
        detail,
    }
}

fn binary(name: &str, holds: bool, margin: f64, detail: String) -> ValidityLine {
    ValidityLine {
        name: name.to_string(),
        margin,
        grade: if holds { Grade::Pass } else { Grade::Fail },
        detail,
    }
}

/// Evaluate every working-regime inequality with its margin.
///
/// Strict `<` conditions are graded pass/fail; `<<` / `>>` conditions get
/// PASS / WARN / FAIL at margins 10x / 3x. Purely informational ratios
/// are labelled INFO.
pub fn validity_report(scene: &CouplingScene, medium: &MediumConfig) -> ValidityReport {
    let mut lines = Vec::new();
    let l = scene.medium_length;
    let n_grid = 512;
    let mut d_min = f64::INFINITY;
    let mut d_max: f64 = 0.0;
    for i in 0..=n_grid {
        let z = l * i as f64 / n_grid as f64;
        let d = scene.exchange_field(z);
        d_min = d_min.min(d);
        d_max = d_max.max(d);
    }
    let gamma_tilde = (medium.gamma_e.powi(2) + medium.delta.powi(2)).sqrt();

    // dipolar shift below the transparency linewidth, pointwise in z
    // (both scale as D_as^2, so the ratio is z-independent)
    let shift_ratio = if scene.rabi != 0.0 {
        (scene.rabi / scene.detuning).powi(2).recip() * gamma_tilde / scene.detuning.abs()
    } else {
        f64::INFINITY
    };
    lines.push(binary(
        "dipolar shift |d'| < transparency linewidth |D|^2/|gamma_e + i delta|",
        shift_ratio < 1.0,
        1.0 / shift_ratio,
        format!("|d'| / linewidth = {shift_ratio:.4} at every z"),
    ));

    // |gamma_e + i delta|/Omega_c < Omega_c/|Delta_c|
    let lhs = if scene.rabi != 0.0 {
        gamma_tilde / scene.rabi
    } else {
        f64::INFINITY
    };
    let rhs = scene.rabi / scene.detuning.abs();
    lines.push(binary(
        "|gamma_e + i delta|/Omega_c < Omega_c/|Delta_c|",
        lhs < rhs,
        rhs / lhs,
        format!("lhs = {lhs:.4}, rhs = {rhs:.4}"),
    ));

    // Omega_c / |Delta_c| << 1
    let margin = if scene.rabi != 0.0 {
        scene.detuning.abs() / scene.rabi
    } else {
        f64::INFINITY
    };
    lines.push(graded(
        "Omega_c << |Delta_c|",
        margin,
        format!("|Delta_c|/Omega_c = {margin:.3}"),
    ));

    // |p_ri/p_du| << |Delta_c/Omega_c|
    if let Some(ratio) = scene.dipole_ratio {
        let m = (scene.detuning / scene.rabi).abs() / ratio;
        lines.push(graded(
            "|p_ri/p_du| << |Delta_c/Omega_c| (medium-medium exchange negligible)",
            m,
            format!("dipole ratio = {ratio:.3}"),
        ));
    }

    // transparency condition |gamma_e + i delta| gamma_r << min_z D^2
    let denom = gamma_tilde * medium.gamma_r;
    let m = if denom == 0.0 {
        f64::INFINITY
    } else {
        d_min * d_min / denom
    };
    lines.push(graded(
        "|gamma_e + i delta| gamma_r << |D(z)|^2 for all z",
        m,
        format!("min D^2 = {:.4}, gamma product = {denom:.4e}", d_min * d_min),
    ));

    // collective coupling dominates the single-spin exchange
    let m = medium.eta2_n() / (d_max * d_max);
    lines.push(graded(
        "eta^2 N >> max_z |D(z)|^2",
        m,
        format!("eta^2 N = {:.4e}, max D^2 = {:.4e}", medium.eta2_n(), d_max * d_max),
    ));

    // geometry invariants
    let xs = scene.spin_position[0];
    lines.push(binary(
        "spin off the probe axis: x_s > w",
        xs > scene.probe_waist,
        xs / scene.probe_waist,
        format!("x_s = {xs} um, w = {} um", scene.probe_waist),
    ));
    let cloud_margin = if scene.spin_cloud_size > 0.0 {
        xs / scene.spin_cloud_size
    } else {
        f64::INFINITY
    };
    lines.push(ValidityLine {
        name: "spin cloud small: dr < x_s/3 (warn below x_s/10)".into(),
        margin: cloud_margin,
        grade: if cloud_margin < 3.0 {
            Grade::Fail
        } else if cloud_margin < 10.0 {
            Grade::Warn
        } else {
            Grade::Pass
        },
        detail: format!("x_s/dr = {cloud_margin:.2}"),
    });

    // gamma_r << gamma_e (warn above 0.1)
    let gr_ratio = medium.gamma_r / medium.gamma_e;
    lines.push(ValidityLine {
        name: "gamma_r << gamma_e".into(),
        margin: if gr_ratio > 0.0 {
            1.0 / gr_ratio
        } else {
            f64::INFINITY
        },
        grade: if gr_ratio > 0.1 { Grade::Warn } else { Grade::Pass },
        detail: format!("gamma_r/gamma_e = {gr_ratio:.2e}"),
    });

    // |Delta_c| >= 5 Omega_c scene invariant (warning-level)
    let m = scene.detuning.abs() / scene.rabi.max(1e-300);
    lines.push(ValidityLine {
        name: "|Delta_c| >= 5 Omega_c".into(),
        margin: m / 5.0,
        grade: if m >= 5.0 { Grade::Pass } else { Grade::Warn },
        detail: format!("|Delta_c|/Omega_c = {m:.2}"),
    });

    // tracked, not graded: adiabatic-elimination margin vs the bare D_as
    let das_max = d_max * (scene.detuning / scene.rabi).abs();
    lines.push(ValidityLine {
        name: "|Delta_c| vs max |D_as| (adiabatic elimination margin)".into(),
        margin: scene.detuning.abs() / das_max.max(1e-300),
        grade: Grade::Info,
        detail: format!(
            "|Delta_c| = {:.1}, max |D_as| = {das_max:.1} rad/us",
            scene.detuning.abs()
        ),
    });

    ValidityReport { lines }
}
