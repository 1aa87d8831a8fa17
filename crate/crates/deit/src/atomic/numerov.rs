//! Model-potential Numerov integration of Rydberg radial wavefunctions.
//!
//! Independent cross-check for the quasiclassical matrix elements: the
//! wavefunction is integrated inward on a uniform grid in the
//! parametric core potential of Marinescu et al. for rubidium, with the
//! energy fixed by the quantum-defect value of the state.

/// Marinescu model-potential parameters for Rb (rows l = 0..3; higher l
/// reuses the l = 3 row).
#[derive(Debug, Clone, Copy)]
pub struct RbModelPotential;

const ALPHA_C: f64 = 9.0760;
const A1: [f64; 4] = [3.69628474, 4.44088978, 3.78717363, 2.39848933];
const A2: [f64; 4] = [1.64915255, 1.92828831, 1.57027864, 1.76810544];
const A3: [f64; 4] = [-9.86069196, -16.79597770, -11.65588970, -12.07106780];
const A4: [f64; 4] = [0.19579987, -0.81633314, 0.52942835, 0.77256589];
const RC: [f64; 4] = [1.66242117, 1.50195124, 4.86851938, 4.79831327];
const Z_RB: f64 = 37.0;

impl RbModelPotential {
    /// Core potential plus spin-orbit term, atomic units.
    pub fn potential(&self, r: f64, l: u32, two_j: i32) -> f64 {
        let i = (l as usize).min(3);
        let zl = 1.0 + (Z_RB - 1.0) * (-A1[i] * r).exp()
            - r * (A3[i] + A4[i] * r) * (-A2[i] * r).exp();
        let mut v = -zl / r - ALPHA_C / (2.0 * r.powi(4)) * (1.0 - (-(r / RC[i]).powi(6)).exp());
        if l > 0 {
            let j = two_j as f64 / 2.0;
            let lf = l as f64;
            let so = crate::units::ALPHA_FS.powi(2) / (4.0 * r.powi(3))
                * (j * (j + 1.0) - lf * (lf + 1.0) - 0.75);
            v += so;
        }
        v
    }
}

struct RadialWave {
    r0: f64,
    h: f64,
    p: Vec<f64>,
}

/// Inward Numerov integration of P'' = f(r) P at energy E = -1/(2 nu^2).
fn integrate(n: u32, l: u32, two_j: i32, nu: f64, h: f64) -> RadialWave {
    let pot = RbModelPotential;
    let energy = -0.5 / (nu * nu);
    let r_min = ALPHA_C.cbrt();
    let r_max = 2.0 * n as f64 * (n as f64 + 15.0);
    let npts = ((r_max - r_min) / h).ceil() as usize + 1;
    let f: Vec<f64> = (0..npts)
        .map(|i| {
            let r = r_min + i as f64 * h;
            2.0 * (pot.potential(r, l, two_j) - energy) + (l * (l + 1)) as f64 / (r * r)
        })
        .collect();
    let g: Vec<f64> = f.iter().map(|&fi| 1.0 - h * h * fi / 12.0).collect();
    let mut p = vec![0.0f64; npts];
    p[npts - 1] = 0.0;
    p[npts - 2] = 1e-12;
    for i in (1..npts - 1).rev() {
        p[i - 1] = ((12.0 - 10.0 * g[i]) * p[i] - g[i + 1] * p[i + 1]) / g[i - 1];
        if p[i - 1].abs() > 1e100 {
            for v in p[i - 1..].iter_mut() {
                *v *= 1e-100;
            }
        }
    }
    // normalize: trapezoid of P^2
    let mut norm = 0.0;
    for (i, &v) in p.iter().enumerate() {
        let w = if i == 0 || i == npts - 1 { 0.5 } else { 1.0 };
        norm += w * v * v;
    }
    norm = (norm * h).sqrt();
    for v in &mut p {
        *v /= norm;
    }
    RadialWave { r0: r_min, h, p }
}

/// Radial matrix element <a| r |b> in e a0 via Numerov wavefunctions.
///
/// `nu_a`, `nu_b` are the quantum-defect effective quantum numbers fixing
/// the state energies. Step `h` is in Bohr radii; 0.06 resolves the outer
/// lobes of n ~ 80 states to better than a percent.
pub fn radial_me_numerov(
    n_a: u32,
    l_a: u32,
    two_j_a: i32,
    nu_a: f64,
    n_b: u32,
    l_b: u32,
    two_j_b: i32,
    nu_b: f64,
    h: f64,
) -> f64 {
    let wa = integrate(n_a, l_a, two_j_a, nu_a, h);
    let wb = integrate(n_b, l_b, two_j_b, nu_b, h);
    let n = wa.p.len().min(wb.p.len());
    let mut acc = 0.0;
    for i in 0..n {
        let r = wa.r0 + i as f64 * wa.h;
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        acc += w * wa.p[i] * r * wb.p[i];
    }
    acc * h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coulomb_tail_dominates_at_large_r() {
        let pot = RbModelPotential;
        let r = 500.0;
        let v = pot.potential(r, 0, 1);
        assert!((v - (-1.0 / r)).abs() < 1e-6, "v = {v}");
    }

    #[test]
    fn agrees_with_quasiclassical_for_reference_transition() {
        // 82S1/2 - 82P3/2 with the bundled defect values
        let me = radial_me_numerov(82, 0, 1, 78.869, 82, 1, 3, 79.5435, 0.06);
        let qc = super::super::kaulakys::radial_me_quasiclassical(78.869, 0, 79.5435, 1).unwrap();
        let rel = (me.abs() - qc.abs()).abs() / qc.abs();
        assert!(rel < 5e-3, "numerov {me} vs quasiclassical {qc} (rel {rel})");
    }
}
