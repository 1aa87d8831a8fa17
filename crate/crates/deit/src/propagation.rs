//! Probe-envelope transport through the medium and the photon-number
//! filter.
//!
//! The envelope obeys (d_t + v_g(z) d_z) E = i (omega/2c) v_g chi E, so
//! along a characteristic the amplitude picks up exactly
//! exp[i omega/(2c) int chi dz]; in steady state this reproduces
//! d_z E = i omega/(2c) chi E and the Beer-Lambert limit. The stepper is
//! semi-Lagrangian: characteristic feet come from the travel-time map
//! T(z) = int dz/v_g (computed once, the model is time-independent) and
//! only the cubic interpolation of the old envelope is approximate.
//!
//! Flux bookkeeping uses photon units: boundary flux (c/L)|E|^2, stored
//! excitation density (c/L)|E|^2/v_g (photonic plus atomic), absorption
//! rate density (c/L)(omega/c) Im chi |E|^2.

use num_complex::Complex64;
use serde::Serialize;

use crate::coupling::CouplingScene;
use crate::error::{DeitError, Result};
use crate::optics::{susceptibility, MediumConfig};
use crate::quadrature::integrate_gl;
use crate::spin::{jpjm_eigenvalue, SpinSector};
use crate::units::C_UM_PER_US;

/// Gaussian input wavepacket: amplitude envelope
/// exp(-(t-t0)^2 / (2 sigma_t^2)) at the entrance face.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GaussianPulse {
    pub center_time: f64,
    pub sigma_t: f64,
    pub amplitude: f64,
}

impl GaussianPulse {
    /// Pulse normalized to carry exactly one photon of flux through the
    /// entrance face: (c/L) int |E|^2 dt = 1.
    pub fn unit_norm(center_time: f64, sigma_t: f64, medium: &MediumConfig) -> Self {
        let amp = (medium.length / (C_UM_PER_US * sigma_t * std::f64::consts::PI.sqrt())).sqrt();
        GaussianPulse {
            center_time,
            sigma_t,
            amplitude: amp,
        }
    }

    pub fn envelope(&self, t: f64) -> Complex64 {
        let u = (t - self.center_time) / self.sigma_t;
        Complex64::new(self.amplitude * (-0.5 * u * u).exp(), 0.0)
    }

    /// Amplitude spectral width 1/sigma_t, rad/us.
    pub fn bandwidth(&self) -> f64 {
        1.0 / self.sigma_t
    }
}

/// Sampled probe envelope on the medium grid plus accumulated photon
/// accounting, all in units of the injected photon number.
#[derive(Debug, Clone)]
pub struct PulseState {
    pub z: Vec<f64>,
    pub envelope: Vec<Complex64>,
    pub sector: SpinSector,
    /// Carrier detuning of the envelope, rad/us.
    pub detuning: f64,
    pub time: f64,
    pub injected: f64,
    pub transmitted: f64,
    pub absorbed: f64,
}

struct StepPlan {
    dt: f64,
    /// per node: Some((stencil base, 4 cubic weights, amplitude factor))
    /// for interior feet, None for nodes fed from the entrance face.
    interior: Vec<Option<(usize, [f64; 4], Complex64)>>,
    /// per node fed from the boundary: (time since entry, factor from 0).
    boundary: Vec<Option<(f64, Complex64)>>,
}

/// Semi-Lagrangian transport model for one sector. Time-independent, so
/// characteristic feet and amplitude factors are precomputed per step
/// size.
pub struct Transport {
    pub medium: MediumConfig,
    pub scene: CouplingScene,
    pub state: PulseState,
    pub input: GaussianPulse,
    pub warnings: Vec<String>,
    /// output envelope samples (t, E(L, t)).
    pub output_series: Vec<(f64, Complex64)>,
    vg: Vec<f64>,
    travel: Vec<f64>,
    /// cumulative int_0^z chi dz at the nodes.
    chi_cum: Vec<Complex64>,
    /// (omega/c) Im chi at the nodes.
    absorb_coeff: Vec<f64>,
    simpson_w: Vec<f64>,
    plan: Option<StepPlan>,
    prev_abs_rate: f64,
    prev_flux_out: f64,
    prev_flux_in: f64,
    started: bool,
}

impl Transport {
    /// Default grid: 1024 cells over the medium (contract floor: 512).
    pub const DEFAULT_CELLS: usize = 1024;

    pub fn new(
        medium: &MediumConfig,
        scene: &CouplingScene,
        sector: SpinSector,
        n_cells: usize,
        input: GaussianPulse,
        detuning: f64,
    ) -> Result<Self> {
        if jpjm_eigenvalue(sector) == 0.0 {
            return Err(DeitError::ClosedSector);
        }
        if n_cells < 8 || n_cells % 2 != 0 {
            return Err(DeitError::Resolution(
                "transport grid needs an even cell count >= 8".into(),
            ));
        }
        let n_nodes = n_cells + 1;
        let l = medium.length;
        let dz = l / n_cells as f64;
        let z: Vec<f64> = (0..n_nodes).map(|j| j as f64 * dz).collect();
        let vg: Vec<f64> = z
            .iter()
            .map(|&zj| crate::optics::group_velocity(medium, scene, sector, zj))
            .collect::<Result<_>>()?;
        // cumulative travel time and susceptibility integral, cell by cell
        let mut travel = vec![0.0; n_nodes];
        let mut chi_cum = vec![Complex64::new(0.0, 0.0); n_nodes];
        for j in 1..n_nodes {
            let (a, b) = (z[j - 1], z[j]);
            travel[j] = travel[j - 1]
                + integrate_gl(
                    |zz| {
                        1.0 / crate::optics::group_velocity(medium, scene, sector, zz).unwrap()
                    },
                    a,
                    b,
                    8,
                );
            let re = integrate_gl(
                |zz| susceptibility(medium, scene, sector, zz, detuning).re,
                a,
                b,
                8,
            );
            let im = integrate_gl(
                |zz| susceptibility(medium, scene, sector, zz, detuning).im,
                a,
                b,
                8,
            );
            chi_cum[j] = chi_cum[j - 1] + Complex64::new(re, im);
        }
        let om_c = medium.omega() / C_UM_PER_US;
        let absorb_coeff: Vec<f64> = z
            .iter()
            .map(|&zj| om_c * susceptibility(medium, scene, sector, zj, detuning).im)
            .collect();
        let mut simpson_w = vec![0.0; n_nodes];
        for (j, w) in simpson_w.iter_mut().enumerate() {
            *w = if j == 0 || j == n_nodes - 1 {
                1.0
            } else if j % 2 == 1 {
                4.0
            } else {
                2.0
            } * dz
                / 3.0;
        }
        let mut warnings = Vec::new();
        let jp = jpjm_eigenvalue(sector);
        let min_window = {
            let g = Complex64::new(medium.gamma_e, medium.delta).norm();
            z.iter()
                .map(|&zj| {
                    let d = scene.exchange_field(zj);
                    d * d * jp / g
                })
                .fold(f64::INFINITY, f64::min)
        };
        if input.bandwidth() >= 0.5 * min_window {
            warnings.push(format!(
                "input bandwidth {:.3} rad/us exceeds half the narrowest transparency window {:.3} rad/us; first-order envelope transport is inaccurate",
                input.bandwidth(),
                min_window
            ));
        }
        Ok(Transport {
            medium: medium.clone(),
            scene: scene.clone(),
            state: PulseState {
                z,
                envelope: vec![Complex64::new(0.0, 0.0); n_nodes],
                sector,
                detuning,
                time: 0.0,
                injected: 0.0,
                transmitted: 0.0,
                absorbed: 0.0,
            },
            input,
            warnings,
            output_series: Vec::new(),
            vg,
            travel,
            chi_cum,
            absorb_coeff,
            simpson_w,
            plan: None,
            prev_abs_rate: 0.0,
            prev_flux_out: 0.0,
            prev_flux_in: 0.0,
            started: false,
        })
    }

    /// Largest admissible step: min_z dz / v_g(z).
    pub fn dt_max(&self) -> f64 {
        let dz = self.state.z[1] - self.state.z[0];
        self.vg
            .iter()
            .map(|&v| dz / v)
            .fold(f64::INFINITY, f64::min)
    }

    fn inv_vg(&self, z: f64) -> f64 {
        1.0 / crate::optics::group_velocity(&self.medium, &self.scene, self.state.sector, z)
            .unwrap()
    }

    /// Travel time T(z) from the entrance face to z.
    pub fn travel_time(&self, z: f64) -> f64 {
        let n = self.state.z.len();
        let dz = self.state.z[1] - self.state.z[0];
        let k = ((z / dz).floor() as usize).min(n - 2);
        self.travel[k] + integrate_gl(|zz| self.inv_vg(zz), self.state.z[k], z, 8)
    }

    /// int_0^z chi dz' at arbitrary z.
    fn chi_integral(&self, z: f64) -> Complex64 {
        let n = self.state.z.len();
        let dz = self.state.z[1] - self.state.z[0];
        let k = ((z / dz).floor() as usize).min(n - 2);
        let chi = |zz: f64| {
            susceptibility(
                &self.medium,
                &self.scene,
                self.state.sector,
                zz,
                self.state.detuning,
            )
        };
        let re = integrate_gl(|zz| chi(zz).re, self.state.z[k], z, 8);
        let im = integrate_gl(|zz| chi(zz).im, self.state.z[k], z, 8);
        self.chi_cum[k] + Complex64::new(re, im)
    }

    fn build_plan(&self, dt: f64) -> StepPlan {
        let n = self.state.z.len();
        let dz = self.state.z[1] - self.state.z[0];
        let om_2c = self.medium.omega() / (2.0 * C_UM_PER_US);
        let mut interior = vec![None; n];
        let mut boundary = vec![None; n];
        for j in 0..n {
            if self.travel[j] < dt {
                // characteristic entered through z = 0 during the step
                let factor = (Complex64::i() * om_2c * self.chi_cum[j]).exp();
                boundary[j] = Some((self.travel[j], factor));
                continue;
            }
            // locate the foot: T(foot) = T(z_j) - dt
            let target = self.travel[j] - dt;
            let mut k = self.travel.partition_point(|&t| t <= target);
            k = k.saturating_sub(1).min(n - 2);
            let (mut lo, mut hi) = (self.state.z[k], self.state.z[k + 1]);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if self.travel_time(mid) < target {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let foot = 0.5 * (lo + hi);
            let factor =
                (Complex64::i() * om_2c * (self.chi_cum[j] - self.chi_integral(foot))).exp();
            // cubic Lagrange stencil around the foot
            let cell = ((foot / dz).floor() as usize).min(n - 2);
            let base = cell.saturating_sub(1).min(n - 4);
            let s = (foot - self.state.z[base]) / dz;
            interior[j] = Some((base, cubic_weights(s), factor));
        }
        StepPlan {
            dt,
            interior,
            boundary,
        }
    }

    fn flux_norm(&self) -> f64 {
        C_UM_PER_US / self.medium.length
    }

    fn absorption_rate(&self) -> f64 {
        let s: f64 = self
            .state
            .envelope
            .iter()
            .zip(self.absorb_coeff.iter())
            .zip(self.simpson_w.iter())
            .map(|((e, &a), &w)| w * a * e.norm_sqr())
            .sum();
        self.flux_norm() * s
    }

    /// Stored excitation (photonic plus atomic) currently inside the
    /// medium, photon units: (c/L) int |E|^2 / v_g dz.
    pub fn in_medium_norm(&self) -> f64 {
        let s: f64 = self
            .state
            .envelope
            .iter()
            .zip(self.vg.iter())
            .zip(self.simpson_w.iter())
            .map(|((e, &v), &w)| w * e.norm_sqr() / v)
            .sum();
        self.flux_norm() * s
    }

    /// Advance by one step, clamped at `dt_max`. Returns the step taken.
    pub fn step(&mut self, dt_request: f64) -> f64 {
        let dt = dt_request.min(self.dt_max());
        let rebuild = match &self.plan {
            Some(p) => (p.dt - dt).abs() > 1e-15 * dt,
            None => true,
        };
        if rebuild {
            self.plan = Some(self.build_plan(dt));
        }
        if !self.started {
            self.prev_flux_in =
                self.flux_norm() * self.input.envelope(self.state.time).norm_sqr();
            self.prev_flux_out = self.flux_norm()
                * self.state.envelope[self.state.envelope.len() - 1].norm_sqr();
            self.prev_abs_rate = self.absorption_rate();
            self.started = true;
        }
        let plan = self.plan.as_ref().unwrap();
        let t_new = self.state.time + dt;
        let n = self.state.envelope.len();
        let mut fresh = vec![Complex64::new(0.0, 0.0); n];
        for j in 0..n {
            if let Some((entry_delay, factor)) = plan.boundary[j] {
                fresh[j] = self.input.envelope(t_new - entry_delay) * factor;
            } else if let Some((base, w, factor)) = plan.interior[j] {
                let e = w[0] * self.state.envelope[base]
                    + w[1] * self.state.envelope[base + 1]
                    + w[2] * self.state.envelope[base + 2]
                    + w[3] * self.state.envelope[base + 3];
                fresh[j] = e * factor;
            }
        }
        let fnorm = self.flux_norm();
        let flux_in_new = fnorm * self.input.envelope(t_new).norm_sqr();
        let flux_out_new = fnorm * fresh[n - 1].norm_sqr();
        self.state.injected += 0.5 * dt * (self.prev_flux_in + flux_in_new);
        self.state.transmitted += 0.5 * dt * (self.prev_flux_out + flux_out_new);
        self.state.envelope = fresh;
        let abs_rate_new = self.absorption_rate();
        self.state.absorbed += 0.5 * dt * (self.prev_abs_rate + abs_rate_new);
        self.prev_flux_in = flux_in_new;
        self.prev_flux_out = flux_out_new;
        self.prev_abs_rate = abs_rate_new;
        self.state.time = t_new;
        self.output_series.push((t_new, self.state.envelope[n - 1]));
        dt
    }

    /// Run until `t_end` with steps of at most `dt_request`.
    pub fn run_until(&mut self, t_end: f64, dt_request: f64) {
        while self.state.time < t_end - 1e-12 {
            self.step(dt_request.min(t_end - self.state.time).max(1e-12));
        }
    }

    /// Absolute accounting defect
    /// injected - transmitted - absorbed - in_medium, in photon units
    /// (input pulses are normalized to one photon).
    pub fn norm_closure(&self) -> f64 {
        self.state.injected - self.state.transmitted - self.state.absorbed
            - self.in_medium_norm()
    }

    /// Centroid of the transmitted intensity time series.
    pub fn output_centroid(&self) -> Result<f64> {
        let mut w = 0.0;
        let mut tw = 0.0;
        for &(t, e) in &self.output_series {
            let p = e.norm_sqr();
            w += p;
            tw += t * p;
        }
        if w <= 0.0 {
            return Err(DeitError::Measurement(
                "no transmitted intensity recorded".into(),
            ));
        }
        Ok(tw / w)
    }
}

fn cubic_weights(s: f64) -> [f64; 4] {
    // Lagrange weights on nodes 0, 1, 2, 3 evaluated at s
    [
        -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0,
        s * (s - 2.0) * (s - 3.0) / 2.0,
        -s * (s - 1.0) * (s - 3.0) / 2.0,
        s * (s - 1.0) * (s - 2.0) / 6.0,
    ]
}

/// Two-level (closed-sector) absorption branch: attenuate the envelope by
/// the Beer-Lambert factor e^{-kappa z} in intensity and log the lost
/// norm on the state.
pub fn tla_absorb(state: &mut PulseState, medium: &MediumConfig) {
    let kappa = medium.kappa();
    let dz = if state.z.len() > 1 {
        state.z[1] - state.z[0]
    } else {
        0.0
    };
    let mut before = 0.0;
    let mut after = 0.0;
    for (zj, e) in state.z.iter().zip(state.envelope.iter_mut()) {
        before += e.norm_sqr() * dz / medium.length;
        *e *= (-0.5 * kappa * zj).exp();
        after += e.norm_sqr() * dz / medium.length;
    }
    state.absorbed += before - after;
}

/// Intensity transmission of the closed-sector medium over length z.
pub fn tla_intensity_transmission(medium: &MediumConfig, z: f64) -> f64 {
    (-medium.kappa() * z).exp()
}

/// One photon of the input train.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Wavepacket {
    /// Arrival time of the envelope centroid at z = 0, us.
    pub arrival: f64,
    /// Envelope duration (Gaussian sigma), us.
    pub sigma_t: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PhotonFate {
    Transmitted,
    Absorbed,
}

#[derive(Debug, Clone, Serialize)]
pub struct PhotonRecord {
    pub index: usize,
    pub fate: PhotonFate,
    /// Sector (n_s, n_p) the photon was admitted into, if admitted.
    pub sector: Option<SpinSector>,
    /// Group delay int dz/v_g, us (admitted photons only).
    pub delay_us: Option<f64>,
    /// Intensity transmission of this photon.
    pub transmission: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FilterTotals {
    pub injected: f64,
    pub transmitted_norm: f64,
    pub absorbed_norm: f64,
    pub transmitted_count: usize,
    pub absorbed_count: usize,
    pub max_simultaneous: u32,
    /// Spin state when the last photon of the train has arrived.
    pub sector_after_train: SpinSector,
    /// Spin state after every admitted photon has left again.
    pub sector_final: SpinSector,
}

#[derive(Debug, Clone, Serialize)]
pub struct FilterReport {
    pub per_photon: Vec<PhotonRecord>,
    pub totals: FilterTotals,
    pub warnings: Vec<String>,
    pub blockade: Option<BlockadeReport>,
}

/// Run the photon-number filter on a time-ordered train of wavepackets.
///
/// A photon is admitted when its centroid crosses z = 0 and the sector is
/// open (n_p < n_s); admission flips one spin instantly and the photon
/// transits with the group velocity of the sector it entered. Photons
/// arriving on a closed sector see the bare two-level medium and are
/// attenuated by e^{-2 sigma0 rho L}. A photon's exit (centroid at z = L)
/// flips its spin back.
pub fn run_filter(
    scene: &CouplingScene,
    medium: &MediumConfig,
    train: &[Wavepacket],
    n_s: u32,
    c6: Option<f64>,
) -> Result<FilterReport> {
    let mut arrivals: Vec<(usize, Wavepacket)> = train.iter().copied().enumerate().collect();
    arrivals.sort_by(|a, b| a.1.arrival.partial_cmp(&b.1.arrival).unwrap());
    let mut warnings = Vec::new();
    // (exit_time, admission time, sector) of photons in flight
    let mut in_flight: Vec<(f64, f64, SpinSector)> = Vec::new();
    let mut n_p = 0u32;
    let mut records: Vec<PhotonRecord> = (0..train.len())
        .map(|i| PhotonRecord {
            index: i,
            fate: PhotonFate::Absorbed,
            sector: None,
            delay_us: None,
            transmission: 0.0,
        })
        .collect();
    let mut max_simultaneous = 0u32;
    let mut blockade: Option<BlockadeReport> = None;
    let mut sector_after_train = SpinSector::new(n_s, 0);

    for (idx, wp) in &arrivals {
        // exits up to this arrival reopen the sector
        in_flight.retain(|&(exit, _, _)| {
            if exit <= wp.arrival {
                n_p -= 1;
                false
            } else {
                true
            }
        });
        let sector = SpinSector::new(n_s, n_p);
        if sector.is_open() {
            let delay = transit_delay(medium, scene, sector)?;
            let p_abs =
                crate::optics::transmission_exponent(medium, scene, sector, -medium.delta);
            let transmission = (-p_abs).exp();
            let min_window = min_transparency_window(medium, scene, sector);
            if 1.0 / wp.sigma_t >= 0.5 * min_window {
                warnings.push(format!(
                    "photon {idx}: bandwidth {:.3} rad/us exceeds half the transparency window {:.3} rad/us",
                    1.0 / wp.sigma_t,
                    min_window
                ));
            }
            records[*idx] = PhotonRecord {
                index: *idx,
                fate: PhotonFate::Transmitted,
                sector: Some(sector),
                delay_us: Some(delay),
                transmission,
            };
            in_flight.push((wp.arrival + delay, wp.arrival, sector));
            n_p += 1;
            max_simultaneous = max_simultaneous.max(n_p);
            if in_flight.len() >= 2 {
                warnings.push(format!(
                    "photon {idx}: {} photons simultaneously in the medium; envelopes are propagated independently",
                    in_flight.len()
                ));
                let positions: Vec<f64> = in_flight
                    .iter()
                    .map(|&(_, t_adm, sec)| photon_position(medium, scene, sec, wp.arrival - t_adm))
                    .collect();
                if let Ok(rep) = blockade_check(scene, medium, c6, &positions) {
                    let keep = match &blockade {
                        Some(old) => rep.worst_separation_ratio < old.worst_separation_ratio,
                        None => true,
                    };
                    if keep {
                        blockade = Some(rep);
                    }
                }
            }
        } else {
            records[*idx] = PhotonRecord {
                index: *idx,
                fate: PhotonFate::Absorbed,
                sector: None,
                delay_us: None,
                transmission: tla_intensity_transmission(medium, medium.length),
            };
        }
        sector_after_train = SpinSector::new(n_s, n_p);
    }

    let transmitted_count = records
        .iter()
        .filter(|r| r.fate == PhotonFate::Transmitted)
        .count();
    let transmitted_norm: f64 = records.iter().map(|r| r.transmission).sum();
    let injected = train.len() as f64;
    Ok(FilterReport {
        totals: FilterTotals {
            injected,
            transmitted_norm,
            absorbed_norm: injected - transmitted_norm,
            transmitted_count,
            absorbed_count: records.len() - transmitted_count,
            max_simultaneous,
            sector_after_train,
            sector_final: SpinSector::new(n_s, 0),
        },
        per_photon: records,
        warnings,
        blockade,
    })
}

/// Group delay int_0^L dz / v_g for the given sector.
pub fn transit_delay(
    medium: &MediumConfig,
    scene: &CouplingScene,
    sector: SpinSector,
) -> Result<f64> {
    if jpjm_eigenvalue(sector) == 0.0 {
        return Err(DeitError::ClosedSector);
    }
    Ok(crate::quadrature::integrate_adaptive(
        |z| 1.0 / crate::optics::group_velocity(medium, scene, sector, z).unwrap(),
        0.0,
        medium.length,
        1e-10,
    ))
}

fn min_transparency_window(
    medium: &MediumConfig,
    scene: &CouplingScene,
    sector: SpinSector,
) -> f64 {
    let jp = jpjm_eigenvalue(sector);
    let g = Complex64::new(medium.gamma_e, medium.delta).norm();
    let mut m = f64::INFINITY;
    for k in 0..=256 {
        let z = medium.length * k as f64 / 256.0;
        let d = scene.exchange_field(z);
        m = m.min(d * d * jp / g);
    }
    m
}

/// Centroid position of a photon admitted `elapsed` us ago (inverts the
/// travel-time map).
fn photon_position(
    medium: &MediumConfig,
    scene: &CouplingScene,
    sector: SpinSector,
    elapsed: f64,
) -> f64 {
    if elapsed <= 0.0 {
        return 0.0;
    }
    let total = transit_delay(medium, scene, sector).unwrap_or(f64::INFINITY);
    if elapsed >= total {
        return medium.length;
    }
    let travel = |z: f64| {
        crate::quadrature::integrate_adaptive(
            |zz| 1.0 / crate::optics::group_velocity(medium, scene, sector, zz).unwrap(),
            0.0,
            z,
            1e-9,
        )
    };
    let (mut lo, mut hi) = (0.0, medium.length);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if travel(mid) < elapsed {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockadePair {
    pub separation_um: f64,
    pub blockade_um: f64,
    pub within_blockade: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockadeReport {
    pub pairs: Vec<BlockadePair>,
    /// min over pairs of separation / d_b; < 1 means a violation.
    pub worst_separation_ratio: f64,
    /// more than three photons stored at once.
    pub over_capacity: bool,
    pub pass: bool,
}

/// Compare pairwise separations of simultaneously stored excitations at
/// positions `photon_positions` (z, um) against the local van der Waals
/// blockade distance; also flags trains storing more than three photons.
pub fn blockade_check(
    scene: &CouplingScene,
    medium: &MediumConfig,
    c6: Option<f64>,
    photon_positions: &[f64],
) -> Result<BlockadeReport> {
    if photon_positions.len() < 2 {
        return Ok(BlockadeReport {
            pairs: Vec::new(),
            worst_separation_ratio: f64::INFINITY,
            over_capacity: false,
            pass: true,
        });
    }
    let xs = scene.spin_position[0];
    let zs = scene.spin_position[2];
    let mut pairs = Vec::new();
    let mut worst: f64 = f64::INFINITY;
    for i in 0..photon_positions.len() {
        for j in (i + 1)..photon_positions.len() {
            let zi = photon_positions[i];
            let zj = photon_positions[j];
            let sep = (zi - zj).abs();
            let ri = (xs * xs + (zi - zs).powi(2)).sqrt();
            let rj = (xs * xs + (zj - zs).powi(2)).sqrt();
            let db = crate::optics::blockade_distance(scene, medium, c6, ri.max(rj))?;
            pairs.push(BlockadePair {
                separation_um: sep,
                blockade_um: db,
                within_blockade: sep < db,
            });
            worst = worst.min(sep / db);
        }
    }
    let over_capacity = photon_positions.len() > 3;
    let pass = worst >= 1.0 && !over_capacity;
    Ok(BlockadeReport {
        pairs,
        worst_separation_ratio: worst,
        over_capacity,
        pass,
    })
}
