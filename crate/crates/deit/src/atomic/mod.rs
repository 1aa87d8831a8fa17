//! Quantum-defect Rydberg structure: level energies, dipole matrix
//! elements and the exchange coefficient C3.

pub mod kaulakys;
pub mod numerov;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{DeitError, Result};
use crate::units::{EA0_SQ_OVER_4PIEPS0_HBAR, ELECTRON_MASS_U, RYDBERG_INF_HZ, TWO_PI};
use crate::wigner::{wigner_3j, wigner_6j};

/// Half-integer angular momentum stored as a doubled integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Half(pub i32);

impl Half {
    pub fn from_doubled(two_j: i32) -> Self {
        Half(two_j)
    }
    pub fn doubled(self) -> i32 {
        self.0
    }
    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

const L_LETTERS: [char; 6] = ['S', 'P', 'D', 'F', 'G', 'H'];

/// A single Rydberg state |species, n, l, j, m_j>.
#[derive(Debug, Clone, PartialEq)]
pub struct RydbergState {
    pub species: String,
    pub n: u32,
    pub l: u32,
    pub j: Half,
    pub m_j: Half,
}

impl RydbergState {
    pub fn new(species: &str, n: u32, l: u32, j: Half, m_j: Half) -> Result<Self> {
        if n < 1 || l >= n {
            return Err(DeitError::InvalidState(format!(
                "need 0 <= l < n, got n = {n}, l = {l}"
            )));
        }
        if (j.doubled() - 2 * l as i32).abs() != 1 {
            return Err(DeitError::InvalidState(format!(
                "need |j - l| = 1/2, got l = {l}, j = {j}"
            )));
        }
        if m_j.doubled().abs() > j.doubled() {
            return Err(DeitError::InvalidState(format!(
                "need |m_j| <= j, got j = {j}, m_j = {m_j}"
            )));
        }
        Ok(RydbergState {
            species: species.to_string(),
            n,
            l,
            j,
            m_j,
        })
    }

    pub fn label(&self) -> String {
        let lc = L_LETTERS.get(self.l as usize).copied().unwrap_or('?');
        format!("{}{}{}{}", self.species, self.n, lc, self.j)
    }
}

/// One row of the quantum-defect table. `j` of `None` applies to every
/// fine-structure member of the orbital.
#[derive(Debug, Clone)]
pub struct DefectEntry {
    pub l: u32,
    pub j: Option<Half>,
    pub delta: f64,
}

#[derive(Debug, Clone, Default)]
struct SpeciesData {
    mass_u: Option<f64>,
    entries: Vec<DefectEntry>,
}

/// Quantum-defect table, keyed by species. Ships with the Rb values used
/// by the bundled scenes and accepts user rows per (species, l, j).
#[derive(Debug, Clone, Default)]
pub struct QuantumDefectTable {
    species: BTreeMap<String, SpeciesData>,
}

/// Rb quantum defects used throughout: delta_S = 3.131, delta_P = 2.4565.
pub const RB_DELTA_S: f64 = 3.131;
pub const RB_DELTA_P: f64 = 2.4565;
const RB_MASS_U: f64 = 86.909180531;

impl QuantumDefectTable {
    /// Built-in table: Rb S and P defects, Rb-87 mass.
    pub fn builtin() -> Self {
        let mut t = QuantumDefectTable::default();
        t.set_mass("Rb", RB_MASS_U);
        t.insert("Rb", 0, None, RB_DELTA_S);
        t.insert("Rb", 1, None, RB_DELTA_P);
        t
    }

    pub fn insert(&mut self, species: &str, l: u32, j: Option<Half>, delta: f64) {
        let data = self.species.entry(species.to_string()).or_default();
        data.entries.retain(|e| !(e.l == l && e.j == j));
        data.entries.push(DefectEntry { l, j, delta });
    }

    pub fn set_mass(&mut self, species: &str, mass_u: f64) {
        self.species.entry(species.to_string()).or_default().mass_u = Some(mass_u);
    }

    /// Defect for (species, l, j): an exact (l, j) row wins, otherwise the
    /// l-level row applies.
    pub fn defect(&self, species: &str, l: u32, j: Half) -> Result<f64> {
        let data = self
            .species
            .get(species)
            .ok_or_else(|| DeitError::UnknownDefect {
                species: species.to_string(),
                l,
            })?;
        if let Some(e) = data.entries.iter().find(|e| e.l == l && e.j == Some(j)) {
            return Ok(e.delta);
        }
        if let Some(e) = data.entries.iter().find(|e| e.l == l && e.j.is_none()) {
            return Ok(e.delta);
        }
        Err(DeitError::UnknownDefect {
            species: species.to_string(),
            l,
        })
    }

    /// Reduced-mass-corrected Rydberg constant in rad/us.
    pub fn rydberg_constant(&self, species: &str) -> f64 {
        let mass = self
            .species
            .get(species)
            .and_then(|d| d.mass_u)
            .unwrap_or(f64::INFINITY);
        TWO_PI * RYDBERG_INF_HZ * 1e-6 / (1.0 + ELECTRON_MASS_U / mass)
    }

    /// Effective quantum number n* = n - delta_l(j).
    pub fn effective_n(&self, s: &RydbergState) -> Result<f64> {
        let d = self.defect(&s.species, s.l, s.j)?;
        let nstar = s.n as f64 - d;
        if nstar <= 0.0 {
            return Err(DeitError::InvalidState(format!(
                "effective quantum number not positive: n = {}, delta = {d}",
                s.n
            )));
        }
        Ok(nstar)
    }

    /// Merge rows from a structured text file: `species l j delta` per
    /// line, `j` written as e.g. `3/2` or `-` for the l-level default.
    /// A line `mass <species> <u>` sets the species mass. `#` comments.
    pub fn merge_text(&mut self, text: &str) -> Result<()> {
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |msg: &str| DeitError::Parse {
                line: idx + 1,
                msg: msg.to_string(),
            };
            if toks[0] == "mass" {
                if toks.len() != 3 {
                    return Err(parse_err("expected `mass <species> <u>`"));
                }
                let m: f64 = toks[2].parse().map_err(|_| parse_err("bad mass"))?;
                self.set_mass(toks[1], m);
                continue;
            }
            if toks.len() != 4 {
                return Err(parse_err("expected `species l j delta`"));
            }
            let l: u32 = toks[1].parse().map_err(|_| parse_err("bad l"))?;
            let j = match toks[2] {
                "-" => None,
                s => Some(parse_half(s).ok_or_else(|| parse_err("bad j"))?),
            };
            let delta: f64 = toks[3].parse().map_err(|_| parse_err("bad delta"))?;
            self.insert(toks[0], l, j, delta);
        }
        Ok(())
    }
}

pub(crate) fn parse_half(s: &str) -> Option<Half> {
    if let Some((num, den)) = s.split_once('/') {
        if den.trim() == "2" {
            return num.trim().parse::<i32>().ok().map(Half);
        }
        return None;
    }
    s.trim().parse::<i32>().ok().map(|v| Half(2 * v))
}

/// Level energy -Ry/(n*)^2 in rad/us; strictly increasing in n at fixed
/// (l, j).
pub fn state_energy(s: &RydbergState, table: &QuantumDefectTable) -> Result<f64> {
    let nstar = table.effective_n(s)?;
    Ok(-table.rydberg_constant(&s.species) / (nstar * nstar))
}

/// Radial matrix element in e a0 (quasiclassical, the primary route).
pub fn radial_matrix_element(
    a: &RydbergState,
    b: &RydbergState,
    table: &QuantumDefectTable,
) -> Result<f64> {
    let nu_a = table.effective_n(a)?;
    let nu_b = table.effective_n(b)?;
    kaulakys::radial_me_quasiclassical(nu_a, a.l, nu_b, b.l, )
}

/// Radial matrix element via the Numerov model-potential route (the
/// independent cross-check; Rb only).
pub fn radial_matrix_element_numerov(
    a: &RydbergState,
    b: &RydbergState,
    table: &QuantumDefectTable,
) -> Result<f64> {
    if a.species != "Rb" || b.species != "Rb" {
        return Err(DeitError::Config(
            "model potential available for Rb only".to_string(),
        ));
    }
    if a.l.abs_diff(b.l) != 1 {
        return Err(DeitError::SelectionRule(format!(
            "radial matrix element requires |dl| = 1, got {} -> {}",
            a.l, b.l
        )));
    }
    let nu_a = table.effective_n(a)?;
    let nu_b = table.effective_n(b)?;
    Ok(numerov::radial_me_numerov(
        a.n,
        a.l,
        a.j.doubled(),
        nu_a,
        b.n,
        b.l,
        b.j.doubled(),
        nu_b,
        0.06,
    ))
}

/// Angular part of the dipole matrix element <b| C^1_q |a> with
/// q = m_b - m_a, reduced through the fine structure (quantization along
/// the y axis of the scene; pi transitions have q = 0).
///
/// Selection-rule-suppressed combinations return 0 rather than an error.
/// Summed over the final fine-structure multiplet and polarizations the
/// squares add to 1 for an l -> l+1 transition.
pub fn angular_factor(a: &RydbergState, b: &RydbergState) -> f64 {
    if a.l.abs_diff(b.l) != 1 {
        return 0.0;
    }
    let q = b.m_j.doubled() - a.m_j.doubled();
    if q.abs() > 2 {
        return 0.0;
    }
    angular_factor_jm(
        a.l,
        a.j.doubled(),
        a.m_j.doubled(),
        b.l,
        b.j.doubled(),
        b.m_j.doubled(),
    )
}

fn angular_factor_jm(
    l_a: u32,
    two_j_a: i32,
    two_m_a: i32,
    l_b: u32,
    two_j_b: i32,
    two_m_b: i32,
) -> f64 {
    let two_q = two_m_b - two_m_a;
    let two_la = 2 * l_a as i32;
    let two_lb = 2 * l_b as i32;
    // <l_b || C^1 || l_a>
    let red_l = phase((two_lb) / 2)
        * (((two_la + 1) * (two_lb + 1)) as f64).sqrt()
        * wigner_3j(two_lb, 2, two_la, 0, 0, 0);
    // <(l_b 1/2) j_b || C^1 || (l_a 1/2) j_a>
    let red_j = phase((two_j_a + two_lb + 3) / 2)
        * (((two_j_a + 1) * (two_j_b + 1)) as f64).sqrt()
        * wigner_6j(two_j_a, 2, two_j_b, two_lb, 1, two_la)
        * red_l;
    phase((two_j_b - two_m_b) / 2)
        * wigner_3j(two_j_b, 2, two_j_a, -two_m_b, two_q, two_m_a)
        * red_j
}

fn phase(k: i32) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Angular factor with both states evaluated at the stretched
/// fine-structure member j = l + 1/2 of their multiplets.
///
/// This is the convention under which the bundled Rb n = 82 / n' = 86
/// scene reproduces its reference exchange coefficient
/// C3 = 2pi x 10.8 GHz um^3; see [`structure_report`].
pub fn angular_factor_stretched(a: &RydbergState, b: &RydbergState) -> f64 {
    if a.l.abs_diff(b.l) != 1 {
        return 0.0;
    }
    angular_factor_jm(
        a.l,
        2 * a.l as i32 + 1,
        a.m_j.doubled(),
        b.l,
        2 * b.l as i32 + 1,
        b.m_j.doubled(),
    )
}

/// Which fine-structure convention the angular part of a dipole uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngularMode {
    /// Resolve the actual j of both states.
    FineStructure,
    /// Evaluate both angular parts at the stretched member j = l + 1/2.
    StretchedMultiplet,
}

/// A dipole-coupled pair of Rydberg states with its matrix element split
/// into radial and angular parts; `total = radial_me * angular_factor`.
#[derive(Debug, Clone)]
pub struct TransitionDipole {
    pub lower: RydbergState,
    pub upper: RydbergState,
    /// Radial integral in e a0.
    pub radial_me: f64,
    /// Dimensionless angular reduction, in [-1, 1].
    pub angular_factor: f64,
    /// Dipole moment in e a0.
    pub total: f64,
}

impl TransitionDipole {
    /// Evaluate a pi-geometry dipole between two states. `|dl| != 1` is a
    /// selection-rule error; `dm_j != 0` yields a zero dipole.
    pub fn evaluate(
        a: &RydbergState,
        b: &RydbergState,
        table: &QuantumDefectTable,
        mode: AngularMode,
    ) -> Result<TransitionDipole> {
        let (lower, upper) = if state_energy(a, table)? <= state_energy(b, table)? {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        let radial = radial_matrix_element(&lower, &upper, table)?;
        let ang = match mode {
            AngularMode::FineStructure => angular_factor(&lower, &upper),
            AngularMode::StretchedMultiplet => angular_factor_stretched(&lower, &upper),
        };
        let ang = if lower.m_j == upper.m_j { ang } else { 0.0 };
        Ok(TransitionDipole {
            lower,
            upper,
            radial_me: radial,
            angular_factor: ang,
            total: radial * ang,
        })
    }
}

/// Exchange coefficient C3 = p_ri p_du / (4 pi eps0 hbar) in rad/us um^3.
pub fn c3_coefficient(ri: &TransitionDipole, du: &TransitionDipole) -> f64 {
    ri.total * du.total * EA0_SQ_OVER_4PIEPS0_HBAR
}

/// Structure summary for the standard four-state configuration
/// |i> = nS1/2, |r> = nP3/2, |u> = (n'+1)S1/2, |d> = n'P1/2, all m_j = 1/2.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub states: Vec<(String, u32, u32, Half, f64, f64)>,
    /// (label_a, label_b, radial_me, angular_factor, total) per transition.
    pub dipoles: Vec<(String, String, f64, f64, f64)>,
    /// C3 with fine-structure-resolved angular factors, rad/us um^3.
    pub c3_fine_structure: f64,
    /// C3 with both angular parts at the stretched member, rad/us um^3.
    /// Reproduces the reference 2pi x 10.8 GHz um^3 for n = 82, n' = 86.
    pub c3_stretched: f64,
    /// omega_ri = E(r) - E(i), rad/us.
    pub omega_ri: f64,
    /// omega_ud = E(u) - E(d), rad/us.
    pub omega_ud: f64,
    /// Defect-table value of Delta_c = omega_ri - omega_ud, rad/us.
    pub implied_delta_c: f64,
    /// |p_ri / p_du| under the stretched convention.
    pub dipole_ratio: f64,
}

/// Build the standard configuration report for principal quantum numbers
/// (n, n') of the medium and spin transitions.
pub fn structure_report(
    species: &str,
    n: u32,
    n_prime: u32,
    table: &QuantumDefectTable,
) -> Result<StructureReport> {
    let half = Half(1);
    let i = RydbergState::new(species, n, 0, half, half)?;
    let r = RydbergState::new(species, n, 1, Half(3), half)?;
    let u = RydbergState::new(species, n_prime + 1, 0, half, half)?;
    let d = RydbergState::new(species, n_prime, 1, half, half)?;

    let mut states = Vec::new();
    for s in [&i, &r, &u, &d] {
        states.push((
            s.label(),
            s.n,
            s.l,
            s.j,
            table.effective_n(s)?,
            state_energy(s, table)?,
        ));
    }

    let ri_fs = TransitionDipole::evaluate(&i, &r, table, AngularMode::FineStructure)?;
    let du_fs = TransitionDipole::evaluate(&u, &d, table, AngularMode::FineStructure)?;
    let ri_st = TransitionDipole::evaluate(&i, &r, table, AngularMode::StretchedMultiplet)?;
    let du_st = TransitionDipole::evaluate(&u, &d, table, AngularMode::StretchedMultiplet)?;

    let dipoles = vec![
        (
            i.label(),
            r.label(),
            ri_fs.radial_me,
            ri_fs.angular_factor,
            ri_fs.total,
        ),
        (
            u.label(),
            d.label(),
            du_fs.radial_me,
            du_fs.angular_factor,
            du_fs.total,
        ),
    ];

    let omega_ri = state_energy(&r, table)? - state_energy(&i, table)?;
    let omega_ud = state_energy(&u, table)? - state_energy(&d, table)?;
    Ok(StructureReport {
        states,
        dipoles,
        c3_fine_structure: c3_coefficient(&ri_fs, &du_fs),
        c3_stretched: c3_coefficient(&ri_st, &du_st),
        omega_ri,
        omega_ud,
        implied_delta_c: omega_ri - omega_ud,
        dipole_ratio: (ri_st.total / du_st.total).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::GHZ;

    fn rb(n: u32, l: u32, two_j: i32, two_m: i32) -> RydbergState {
        RydbergState::new("Rb", n, l, Half(two_j), Half(two_m)).unwrap()
    }

    #[test]
    fn effective_quantum_number_for_82s() {
        let t = QuantumDefectTable::builtin();
        let s = rb(82, 0, 1, 1);
        assert!((t.effective_n(&s).unwrap() - 78.869).abs() < 1e-12);
    }

    #[test]
    fn hydrogenic_limit_energy() {
        let mut t = QuantumDefectTable::default();
        t.insert("H", 0, None, 0.0);
        let s = RydbergState::new("H", 10, 0, Half(1), Half(1)).unwrap();
        let e = state_energy(&s, &t).unwrap();
        let ry = t.rydberg_constant("H");
        assert!((e + ry / 100.0).abs() < 1e-6 * ry);
    }

    #[test]
    fn energy_monotone_in_n() {
        let t = QuantumDefectTable::builtin();
        let mut prev = f64::NEG_INFINITY;
        for n in 40..100 {
            let e = state_energy(&rb(n, 0, 1, 1), &t).unwrap();
            assert!(e > prev, "energy not monotone at n = {n}");
            prev = e;
        }
    }

    #[test]
    fn unknown_species_is_config_error() {
        let t = QuantumDefectTable::builtin();
        let s = RydbergState::new("Cs", 50, 0, Half(1), Half(1)).unwrap();
        assert!(matches!(
            state_energy(&s, &t),
            Err(DeitError::UnknownDefect { .. })
        ));
    }

    #[test]
    fn j_resolved_defect_overrides_l_default() {
        let mut t = QuantumDefectTable::builtin();
        t.insert("Rb", 1, Some(Half(3)), 2.6416);
        assert!((t.defect("Rb", 1, Half(3)).unwrap() - 2.6416).abs() < 1e-12);
        assert!((t.defect("Rb", 1, Half(1)).unwrap() - RB_DELTA_P).abs() < 1e-12);
    }

    #[test]
    fn defect_table_text_roundtrip() {
        let mut t = QuantumDefectTable::builtin();
        t.merge_text("# test rows\nCs 0 - 4.049\nCs 1 3/2 3.559\nmass Cs 132.905")
            .unwrap();
        assert!((t.defect("Cs", 0, Half(1)).unwrap() - 4.049).abs() < 1e-12);
        assert!((t.defect("Cs", 1, Half(3)).unwrap() - 3.559).abs() < 1e-12);
        assert!(t.merge_text("Cs 0").is_err());
    }

    #[test]
    fn angular_factor_pi_values() {
        // s1/2 -> p3/2, m = 1/2, pi: sqrt(2)/3
        let f32v = angular_factor(&rb(82, 0, 1, 1), &rb(82, 1, 3, 1));
        assert!((f32v.abs() - 2.0f64.sqrt() / 3.0).abs() < 1e-13, "got {f32v}");
        // s1/2 -> p1/2, m = 1/2, pi: 1/3
        let f12v = angular_factor(&rb(87, 0, 1, 1), &rb(86, 1, 1, 1));
        assert!((f12v.abs() - 1.0 / 3.0).abs() < 1e-13, "got {f12v}");
    }

    #[test]
    fn angular_sum_rule_over_multiplet() {
        // from s1/2 m=1/2, sum over both fine-structure members, final m
        // and polarization of |factor|^2 is exactly 1
        let a = rb(82, 0, 1, 1);
        let mut total = 0.0;
        for two_j in [1, 3] {
            let mut two_m = -two_j;
            while two_m <= two_j {
                let b = rb(82, 1, two_j, two_m);
                let f = super::angular_factor_jm(0, 1, 1, 1, two_j, two_m);
                let _ = &b;
                total += f * f;
                two_m += 2;
            }
        }
        assert!((total - 1.0).abs() < 1e-12, "sum rule broken: {total}");
        let _ = a;
    }

    #[test]
    fn angular_selection_rules() {
        // dm = 1 under pi geometry -> suppressed to zero in the dipole
        let t = QuantumDefectTable::builtin();
        let d = TransitionDipole::evaluate(
            &rb(82, 0, 1, 1),
            &rb(82, 1, 3, 3),
            &t,
            AngularMode::FineStructure,
        )
        .unwrap();
        assert_eq!(d.total, 0.0);
        // |dj| = 2 violates the triangle rule
        assert_eq!(angular_factor_jm(2, 1, 1, 3, 5, 1), 0.0);
        // |dl| != 1 is zero for the angular part, an error for the radial
        assert_eq!(angular_factor(&rb(82, 0, 1, 1), &rb(82, 2, 3, 1)), 0.0);
        assert!(radial_matrix_element(
            &rb(82, 0, 1, 1),
            &rb(82, 2, 3, 1),
            &QuantumDefectTable::builtin()
        )
        .is_err());
    }

    #[test]
    fn stretched_factor_matches_p32_value() {
        let f = angular_factor_stretched(&rb(87, 0, 1, 1), &rb(86, 1, 1, 1));
        assert!((f.abs() - 2.0f64.sqrt() / 3.0).abs() < 1e-13);
    }

    #[test]
    fn radial_me_reference_values() {
        // frozen: quasiclassical values for the reference transitions,
        // cross-checked against the Numerov route to 0.5%
        let t = QuantumDefectTable::builtin();
        let ri = radial_matrix_element(&rb(82, 0, 1, 1), &rb(82, 1, 3, 1), &t).unwrap();
        assert!((ri - 5304.72).abs() < 0.5, "ri = {ri}");
        let du = radial_matrix_element(&rb(87, 0, 1, 1), &rb(86, 1, 1, 1), &t).unwrap();
        assert!((du - 9240.85).abs() < 0.5, "du = {du}");
    }

    #[test]
    fn radial_scaling_bounded_over_n() {
        let t = QuantumDefectTable::builtin();
        let mut ratios = Vec::new();
        for n in (40..=100).step_by(10) {
            let a = rb(n, 0, 1, 1);
            let b = rb(n, 1, 3, 1);
            let r = radial_matrix_element(&a, &b, &t).unwrap();
            let nstar = t.effective_n(&a).unwrap();
            ratios.push(r / (nstar * nstar));
        }
        for w in ratios.windows(2) {
            assert!((w[1] - w[0]).abs() < 0.05 * w[0].abs(), "ratios {ratios:?}");
        }
    }

    #[test]
    fn c3_trivial_cases() {
        let t = QuantumDefectTable::builtin();
        let ri =
            TransitionDipole::evaluate(&rb(82, 0, 1, 1), &rb(82, 1, 3, 1), &t, AngularMode::FineStructure)
                .unwrap();
        let mut zero = ri.clone();
        zero.total = 0.0;
        assert_eq!(c3_coefficient(&ri, &zero), 0.0);
        let mut doubled = ri.clone();
        doubled.total *= 2.0;
        let base = c3_coefficient(&ri, &ri);
        assert!((c3_coefficient(&ri, &doubled) - 2.0 * base).abs() < 1e-9 * base.abs());
    }

    #[test]
    fn reference_configuration_c3() {
        let t = QuantumDefectTable::builtin();
        let rep = structure_report("Rb", 82, 86, &t).unwrap();
        // stretched convention reproduces the reference value
        let c3_ghz = rep.c3_stretched.abs() / GHZ;
        assert!(
            (c3_ghz - 10.8).abs() < 0.15 * 10.8,
            "stretched C3 = 2pi x {c3_ghz} GHz um^3"
        );
        // frozen value of the fine-structure-resolved route
        let c3_fs = rep.c3_fine_structure.abs() / GHZ;
        assert!((c3_fs - 7.51).abs() < 0.05, "fine-structure C3 = {c3_fs}");
        // defect-table transition frequencies (frozen)
        assert!((rep.omega_ri / GHZ - 8.9314).abs() < 1e-3);
        assert!((rep.omega_ud / GHZ - 3.6516).abs() < 1e-3);
    }
}
