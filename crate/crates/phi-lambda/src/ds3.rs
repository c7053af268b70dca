//! Exact single-plaquette oracle for the quantum model behind the classical
//! simulation.
//!
//! Works with the reduced state of the four spins around one plaquette,
//! 6^4 = 1296 complex amplitudes over S3-labelled basis states. The vacuum
//! states are the normalized orbits
//! `|1_{h2,h3,h4}> = 6^{-1/2} sum_g |g, g h2, g h3, g h4>`, one per triple of
//! relative factors. Diagonal creation operators act on one spin; charge
//! projectors are built from gauge transformations that multiply every spin
//! on the left (by `g` on white plaquettes, by `g^{-1}` on grey ones, which
//! realizes the same orbit-stabilizing action on these states for both
//! colors). The module exists to certify, identity by identity, that the Z6
//! lattice rules used everywhere else reproduce the quantum statistics.

use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::Charge;

/// An element of S3 as `t^s c^n`: indices 0..6 label e, c, c2, t, tc, tc2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct S3(u8);

impl S3 {
    pub const E: S3 = S3(0);
    pub const C: S3 = S3(1);
    pub const C2: S3 = S3(2);
    pub const T: S3 = S3(3);
    pub const TC: S3 = S3(4);
    pub const TC2: S3 = S3(5);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> S3 {
        assert!(i < 6);
        S3(i as u8)
    }

    pub fn all() -> impl Iterator<Item = S3> {
        (0..6).map(S3)
    }

    fn parts(self) -> (u8, u8) {
        (self.0 / 3, self.0 % 3)
    }

    fn from_parts(s: u8, n: u8) -> S3 {
        S3((s % 2) * 3 + n % 3)
    }

    /// Group product, from `t^2 = c^3 = e` and `t c = c^2 t`.
    pub fn mul(self, rhs: S3) -> S3 {
        let (s1, n1) = self.parts();
        let (s2, n2) = rhs.parts();
        let n = if s2 == 0 { n1 + n2 } else { 3 + n2 - n1 };
        S3::from_parts(s1 ^ s2, n % 3)
    }

    pub fn inv(self) -> S3 {
        let (s, n) = self.parts();
        if s == 1 {
            self
        } else {
            S3::from_parts(0, (3 - n) % 3)
        }
    }

    /// True on the reflection coset `[t] = {t, tc, tc2}`.
    pub fn is_reflection(self) -> bool {
        self.0 >= 3
    }

    /// Exponent `n` for rotations `c^n`; `None` on reflections.
    pub fn rotation_exponent(self) -> Option<u8> {
        (!self.is_reflection()).then_some(self.0)
    }
}

fn omega() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
}

/// `Omega(c^n) = omega^n`, `Omega([t]) = 0`: the factor picked up when two
/// Phi-type creators meet across a relative factor `h`.
pub fn omega_factor(h: S3) -> Complex64 {
    match h.rotation_exponent() {
        Some(n) => omega().powu(u32::from(n)),
        None => Complex64::new(0.0, 0.0),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Color {
    White,
    Grey,
}

/// The diagonal creation operators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WOperator {
    Lambda,
    Phi,
    PhiBar,
    /// The non-Abelian pair creator `W_Phi = W_phi - W_phibar`; not unitary.
    PhiPair,
}

impl WOperator {
    fn factor(self, g: S3) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        match self {
            WOperator::Lambda => {
                if g.is_reflection() {
                    -one
                } else {
                    one
                }
            }
            WOperator::Phi => match g.rotation_exponent() {
                Some(n) => omega().powu(u32::from(n)),
                None => zero,
            },
            WOperator::PhiBar => WOperator::Phi.factor(g).conj(),
            WOperator::PhiPair => WOperator::Phi.factor(g) - WOperator::PhiBar.factor(g),
        }
    }
}

/// Measurable charge content of a plaquette, with the two internal Phi
/// states kept separate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ChargeLabel {
    One,
    Lambda,
    Phi,
    PhiBar,
}

impl ChargeLabel {
    pub const ALL: [ChargeLabel; 4] = [
        ChargeLabel::One,
        ChargeLabel::Lambda,
        ChargeLabel::Phi,
        ChargeLabel::PhiBar,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ChargeLabel::One => "1",
            ChargeLabel::Lambda => "Lambda",
            ChargeLabel::Phi => "phi",
            ChargeLabel::PhiBar => "phibar",
        }
    }
}

/// Quasiparticle class of a Z6 residue: the dictionary between the lattice
/// simulation and the quantum model.
pub fn quasiparticle_class(c: Charge) -> ChargeLabel {
    match c.value() {
        0 => ChargeLabel::One,
        3 => ChargeLabel::Lambda,
        1 | 4 => ChargeLabel::Phi,
        _ => ChargeLabel::PhiBar,
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("state is not normalized (norm^2 = {norm_sq})")]
    NotNormalized { norm_sq: f64 },
}

/// Probabilities of the four charge outcomes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChargeSpectrum {
    pub probs: [f64; 4],
}

impl ChargeSpectrum {
    pub fn get(&self, label: ChargeLabel) -> f64 {
        self.probs[Self::slot(label)]
    }

    fn slot(label: ChargeLabel) -> usize {
        match label {
            ChargeLabel::One => 0,
            ChargeLabel::Lambda => 1,
            ChargeLabel::Phi => 2,
            ChargeLabel::PhiBar => 3,
        }
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn max_deviation(&self, other: &ChargeSpectrum) -> f64 {
        self.probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

const DIM: usize = 1296;

/// State of the four spins around one plaquette.
#[derive(Clone, Debug)]
pub struct PlaquetteState {
    pub color: Color,
    amp: Vec<Complex64>,
    normalized: bool,
}

fn basis_index(g: [S3; 4]) -> usize {
    ((g[0].index() * 6 + g[1].index()) * 6 + g[2].index()) * 6 + g[3].index()
}

fn basis_elements(mut idx: usize) -> [S3; 4] {
    let mut g = [S3::E; 4];
    for slot in (0..4).rev() {
        g[slot] = S3::from_index(idx % 6);
        idx /= 6;
    }
    g
}

impl PlaquetteState {
    /// `|1_{h2,h3,h4}>` on a plaquette of the given color.
    pub fn vacuum(h: [S3; 3], color: Color) -> PlaquetteState {
        let mut amp = vec![Complex64::new(0.0, 0.0); DIM];
        let w = Complex64::new(1.0 / 6f64.sqrt(), 0.0);
        for g in S3::all() {
            amp[basis_index([g, g.mul(h[0]), g.mul(h[1]), g.mul(h[2])])] = w;
        }
        PlaquetteState {
            color,
            amp,
            normalized: true,
        }
    }

    /// Arbitrary (tagged unnormalized) state from raw amplitudes.
    pub fn from_amplitudes(color: Color, amp: Vec<Complex64>) -> PlaquetteState {
        assert_eq!(amp.len(), DIM);
        PlaquetteState {
            color,
            amp,
            normalized: false,
        }
    }

    /// One basis state `|g1, g2, g3, g4>`.
    pub fn basis(g: [S3; 4], color: Color) -> PlaquetteState {
        let mut amp = vec![Complex64::new(0.0, 0.0); DIM];
        amp[basis_index(g)] = Complex64::new(1.0, 0.0);
        PlaquetteState {
            color,
            amp,
            normalized: true,
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn norm_sq(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Annihilated states (numerically zero) yield `None`.
    pub fn normalize(mut self) -> Option<PlaquetteState> {
        let n = self.norm_sq();
        if n < 1e-20 {
            return None;
        }
        let scale = 1.0 / n.sqrt();
        for a in &mut self.amp {
            *a *= scale;
        }
        self.normalized = true;
        Some(self)
    }

    /// Apply a diagonal creator to one of the four spins. The result is
    /// tagged unnormalized; callers renormalize (or detect annihilation)
    /// explicitly.
    pub fn apply_w(&self, op: WOperator, spin: usize) -> PlaquetteState {
        assert!(spin < 4);
        let mut amp = vec![Complex64::new(0.0, 0.0); DIM];
        for (idx, &a) in self.amp.iter().enumerate() {
            if a != Complex64::new(0.0, 0.0) {
                amp[idx] = a * op.factor(basis_elements(idx)[spin]);
            }
        }
        PlaquetteState {
            color: self.color,
            amp,
            normalized: false,
        }
    }

    /// Gauge transformation `T_g`: left-multiplication of every spin by `g`
    /// on white plaquettes and by `g^{-1}` on grey ones.
    pub fn gauge(&self, g: S3) -> PlaquetteState {
        let action = match self.color {
            Color::White => g,
            Color::Grey => g.inv(),
        };
        let mut amp = vec![Complex64::new(0.0, 0.0); DIM];
        for (idx, &a) in self.amp.iter().enumerate() {
            if a != Complex64::new(0.0, 0.0) {
                let e = basis_elements(idx);
                amp[basis_index(e.map(|x| action.mul(x)))] = a;
            }
        }
        PlaquetteState {
            color: self.color,
            amp,
            normalized: self.normalized,
        }
    }

    /// Coefficients of a charge projector over the six gauge transforms.
    fn projector_coeffs(label: ChargeLabel) -> [Complex64; 6] {
        let sixth = Complex64::new(1.0 / 6.0, 0.0);
        let third = Complex64::new(1.0 / 3.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let w = omega();
        match label {
            ChargeLabel::One => [sixth; 6],
            ChargeLabel::Lambda => [sixth, sixth, sixth, -sixth, -sixth, -sixth],
            ChargeLabel::Phi => [third, third * w, third * w * w, zero, zero, zero],
            ChargeLabel::PhiBar => [third, third * w * w, third * w, zero, zero, zero],
        }
    }

    /// Apply the charge projector for `label`.
    pub fn project(&self, label: ChargeLabel) -> PlaquetteState {
        let coeffs = Self::projector_coeffs(label);
        let mut amp = vec![Complex64::new(0.0, 0.0); DIM];
        for g in S3::all() {
            let c = coeffs[g.index()];
            if c == Complex64::new(0.0, 0.0) {
                continue;
            }
            let image = self.gauge(g);
            for (slot, &a) in image.amp.iter().enumerate() {
                amp[slot] += c * a;
            }
        }
        PlaquetteState {
            color: self.color,
            amp,
            normalized: false,
        }
    }

    pub fn inner(&self, other: &PlaquetteState) -> Complex64 {
        self.amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Largest amplitude difference against another state.
    pub fn max_amp_deviation(&self, other: &PlaquetteState) -> f64 {
        self.amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn scaled(&self, factor: Complex64) -> PlaquetteState {
        PlaquetteState {
            color: self.color,
            amp: self.amp.iter().map(|a| a * factor).collect(),
            normalized: false,
        }
    }

    /// Amplitude-wise sum (tagged unnormalized).
    pub fn add(&self, other: &PlaquetteState) -> PlaquetteState {
        PlaquetteState {
            color: self.color,
            amp: self
                .amp
                .iter()
                .zip(&other.amp)
                .map(|(a, b)| a + b)
                .collect(),
            normalized: false,
        }
    }

    /// Charge measurement statistics `<psi|P_x|psi>`.
    pub fn measure_charge(&self) -> Result<ChargeSpectrum, OracleError> {
        let norm_sq = self.norm_sq();
        if !self.normalized || (norm_sq - 1.0).abs() > 1e-9 {
            return Err(OracleError::NotNormalized { norm_sq });
        }
        let mut probs = [0.0; 4];
        for label in ChargeLabel::ALL {
            let p = self.inner(&self.project(label));
            debug_assert!(p.im.abs() < 1e-12);
            probs[ChargeSpectrum::slot(label)] = p.re;
        }
        Ok(ChargeSpectrum { probs })
    }
}

/// All 216 relative-factor triples.
pub fn all_triples() -> Vec<[S3; 3]> {
    let mut out = Vec::with_capacity(216);
    for h2 in S3::all() {
        for h3 in S3::all() {
            for h4 in S3::all() {
                out.push([h2, h3, h4]);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Classical <-> quantum correspondence
// ---------------------------------------------------------------------------

fn coset(a: u8) -> &'static [u8] {
    match a {
        3 => &[3],
        1 | 4 => &[1, 4],
        2 | 5 => &[2, 5],
        _ => panic!("not a creation flip: {a}"),
    }
}

fn w_for_flip(a: u8) -> WOperator {
    match a {
        3 => WOperator::Lambda,
        1 | 4 => WOperator::Phi,
        _ => WOperator::PhiBar,
    }
}

/// Classical outcome-class distribution of two creation flips on one
/// plaquette, with each flip drawn uniformly from its residue coset.
pub fn classical_pair_distribution(a: u8, b: u8, color: Color) -> ChargeSpectrum {
    let sign = match color {
        Color::White => 1,
        Color::Grey => -1,
    };
    let mut probs = [0.0; 4];
    let (ca, cb) = (coset(a), coset(b));
    let w = 1.0 / (ca.len() * cb.len()) as f64;
    for &x in ca {
        for &y in cb {
            let charge = Charge::from_i32(sign * i32::from(x + y));
            probs[ChargeSpectrum::slot(quasiparticle_class(charge))] += w;
        }
    }
    ChargeSpectrum { probs }
}

/// One compared case of the correspondence check.
#[derive(Clone, Debug)]
pub struct CorrespondenceCase {
    pub color: Color,
    pub flips: (u8, u8),
    pub spins: (usize, usize),
    pub classical: ChargeSpectrum,
    pub quantum: ChargeSpectrum,
    pub max_deviation: f64,
    pub surviving_states: usize,
}

impl CorrespondenceCase {
    pub fn passed(&self) -> bool {
        self.max_deviation <= 1e-12 && self.surviving_states > 0
    }
}

/// Compare the classical coset rule against the quantum oracle for every
/// ordered pair of creation flips, both colors, on a same-spin and a
/// different-spin placement. The quantum distribution is the
/// norm-weighted mixture over all 216 vacua; each surviving state is also
/// required to match individually.
pub fn correspondence_cases() -> Vec<CorrespondenceCase> {
    let mut cases = Vec::new();
    for color in [Color::White, Color::Grey] {
        for a in [1u8, 2, 3, 4, 5] {
            for b in [1u8, 2, 3, 4, 5] {
                for spins in [(0usize, 0usize), (0, 1), (0, 3)] {
                    let classical = classical_pair_distribution(a, b, color);
                    let mut mixture = [0.0; 4];
                    let mut weight = 0.0;
                    let mut surviving = 0;
                    let mut worst = 0.0f64;
                    for h in all_triples() {
                        let raw = PlaquetteState::vacuum(h, color)
                            .apply_w(w_for_flip(a), spins.0)
                            .apply_w(w_for_flip(b), spins.1);
                        let w = raw.norm_sq();
                        let Some(state) = raw.normalize() else {
                            continue;
                        };
                        surviving += 1;
                        let spec = state.measure_charge().expect("normalized");
                        worst = worst.max(spec.max_deviation(&classical));
                        for (slot, p) in spec.probs.iter().enumerate() {
                            mixture[slot] += w * p;
                        }
                        weight += w;
                    }
                    let quantum = ChargeSpectrum {
                        probs: mixture.map(|p| p / weight),
                    };
                    worst = worst.max(quantum.max_deviation(&classical));
                    cases.push(CorrespondenceCase {
                        color,
                        flips: (a, b),
                        spins,
                        classical,
                        quantum,
                        max_deviation: worst,
                        surviving_states: surviving,
                    });
                }
            }
        }
    }
    cases
}

/// True when every ordered creation pair matches between the classical rule
/// and the quantum oracle.
pub fn correspondence_check() -> bool {
    correspondence_cases().iter().all(CorrespondenceCase::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    #[test]
    fn group_relations() {
        assert_eq!(S3::T.mul(S3::C), S3::TC);
        // tc = c^2 t  and  ct = tc^2
        assert_eq!(S3::C2.mul(S3::T), S3::TC);
        assert_eq!(S3::C.mul(S3::T), S3::TC2);
        assert_eq!(S3::C.inv(), S3::C2);
        assert_eq!(S3::T.mul(S3::T), S3::E);
        assert_eq!(S3::C.mul(S3::C).mul(S3::C), S3::E);
    }

    #[test]
    fn group_axioms_hold_exactly() {
        for a in S3::all() {
            assert_eq!(a.mul(S3::E), a);
            assert_eq!(S3::E.mul(a), a);
            assert_eq!(a.mul(a.inv()), S3::E);
            assert_eq!(a.inv().mul(a), S3::E);
            for b in S3::all() {
                for c in S3::all() {
                    assert_eq!(a.mul(b).mul(c), a.mul(b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn vacuum_is_a_pure_vacuum_charge() {
        for color in [Color::White, Color::Grey] {
            let state = PlaquetteState::vacuum([S3::C, S3::T, S3::TC2], color);
            assert!((state.norm_sq() - 1.0).abs() < TOL);
            let spec = state.measure_charge().unwrap();
            assert!((spec.get(ChargeLabel::One) - 1.0).abs() < TOL);
            assert!(spec.get(ChargeLabel::Lambda).abs() < TOL);
            assert!(spec.get(ChargeLabel::Phi).abs() < TOL);
            assert!(spec.get(ChargeLabel::PhiBar).abs() < TOL);
            // eigenstate of P_1
            assert!(state.project(ChargeLabel::One).max_amp_deviation(&state) < TOL);
        }
    }

    #[test]
    fn lambda_creation_and_annihilation() {
        for color in [Color::White, Color::Grey] {
            for h in [[S3::E, S3::E, S3::E], [S3::T, S3::C, S3::TC]] {
                let vac = PlaquetteState::vacuum(h, color);
                let lam = vac.apply_w(WOperator::Lambda, 0).normalize().unwrap();
                let spec = lam.measure_charge().unwrap();
                assert!((spec.get(ChargeLabel::Lambda) - 1.0).abs() < TOL);

                // W_Lambda twice returns the vacuum up to a global sign
                for j in 0..4 {
                    let twice = lam.apply_w(WOperator::Lambda, j).normalize().unwrap();
                    let overlap = twice.inner(&vac).norm();
                    assert!((overlap - 1.0).abs() < TOL, "h={h:?} j={j}");
                }
            }
        }
    }

    #[test]
    fn w_phi_squared_is_w_phibar() {
        for h in [[S3::E, S3::C, S3::T], [S3::C2, S3::TC, S3::C]] {
            let vac = PlaquetteState::vacuum(h, Color::White);
            let twice = vac.apply_w(WOperator::Phi, 2).apply_w(WOperator::Phi, 2);
            let direct = vac.apply_w(WOperator::PhiBar, 2);
            assert!(twice.max_amp_deviation(&direct) < TOL);
        }
    }

    #[test]
    fn omega_factor_identity_on_cross_spin_creation() {
        for h in all_triples() {
            let vac = PlaquetteState::vacuum(h, Color::White);
            for spin in 1..4 {
                let double = vac.apply_w(WOperator::Phi, 0).apply_w(WOperator::Phi, spin);
                let reference = vac
                    .apply_w(WOperator::PhiBar, 0)
                    .scaled(omega_factor(h[spin - 1]));
                assert!(
                    double.max_amp_deviation(&reference) < TOL,
                    "h={h:?} spin={spin}"
                );
                if h[spin - 1].is_reflection() {
                    assert!(double.norm_sq() < 1e-20);
                }
            }
        }
    }

    #[test]
    fn phi_phibar_fusion_is_even_vacuum_lambda_mixture() {
        let vac = PlaquetteState::vacuum([S3::C, S3::E, S3::C2], Color::White);
        let fused = vac
            .apply_w(WOperator::Phi, 1)
            .apply_w(WOperator::PhiBar, 0)
            .normalize()
            .unwrap();
        let spec = fused.measure_charge().unwrap();
        assert!((spec.get(ChargeLabel::One) - 0.5).abs() < TOL);
        assert!((spec.get(ChargeLabel::Lambda) - 0.5).abs() < TOL);
    }

    #[test]
    fn lambda_is_hidden_behind_phi() {
        let vac = PlaquetteState::vacuum([S3::E, S3::C, S3::TC], Color::White);
        let state = vac
            .apply_w(WOperator::Phi, 1)
            .apply_w(WOperator::Lambda, 2)
            .normalize()
            .unwrap();
        let spec = state.measure_charge().unwrap();
        assert!((spec.get(ChargeLabel::Phi) - 1.0).abs() < TOL);

        // and on grey the roles of phi and phibar swap
        let grey = PlaquetteState::vacuum([S3::E, S3::C, S3::TC], Color::Grey)
            .apply_w(WOperator::Phi, 1)
            .apply_w(WOperator::Lambda, 2)
            .normalize()
            .unwrap();
        let spec = grey.measure_charge().unwrap();
        assert!((spec.get(ChargeLabel::PhiBar) - 1.0).abs() < TOL);
    }

    #[test]
    fn creators_have_the_stated_spectra() {
        // W_Lambda is unitary with eigenvalues +-1; the Phi-type creators
        // annihilate the reflection sector and so are not unitary
        for g in S3::all() {
            let f = WOperator::Lambda.factor(g);
            assert!((f.norm() - 1.0).abs() < TOL);
            assert!((f.re - if g.is_reflection() { -1.0 } else { 1.0 }).abs() < TOL);
            let f = WOperator::Phi.factor(g);
            if g.is_reflection() {
                assert!(f.norm() < TOL);
            } else {
                assert!((f.norm() - 1.0).abs() < TOL);
                assert!((f.powu(3) - Complex64::new(1.0, 0.0)).norm() < TOL);
            }
        }
        let vac = PlaquetteState::vacuum([S3::C, S3::T, S3::E], Color::White);
        assert!((vac.apply_w(WOperator::Lambda, 0).norm_sq() - 1.0).abs() < TOL);
        assert!((vac.apply_w(WOperator::Phi, 0).norm_sq() - 0.5).abs() < TOL);
        let twice = vac
            .apply_w(WOperator::PhiPair, 0)
            .apply_w(WOperator::PhiPair, 0);
        assert!((twice.norm_sq() - 3.0).abs() < TOL, "W_Phi is not unitary");

        // all creators are diagonal, so they commute on any state
        let ab = vac.apply_w(WOperator::Lambda, 1).apply_w(WOperator::Phi, 2);
        let ba = vac.apply_w(WOperator::Phi, 2).apply_w(WOperator::Lambda, 1);
        assert!(ab.max_amp_deviation(&ba) < TOL);
    }

    #[test]
    fn measurement_rejects_unnormalized_states() {
        let vac = PlaquetteState::vacuum([S3::E, S3::E, S3::E], Color::White);
        let raw = vac.apply_w(WOperator::Phi, 0);
        assert!(matches!(
            raw.measure_charge(),
            Err(OracleError::NotNormalized { .. })
        ));
    }

    #[test]
    fn projectors_resolve_identity_on_full_basis() {
        for color in [Color::White, Color::Grey] {
            let mut state = PlaquetteState::vacuum([S3::E, S3::E, S3::E], color);
            // overwrite with an arbitrary dense state
            for (i, a) in state.amp.iter_mut().enumerate() {
                *a = Complex64::new((i % 7) as f64 - 3.0, (i % 5) as f64 - 2.0);
            }
            state.normalized = false;
            let mut sum = state.project(ChargeLabel::One);
            for label in [ChargeLabel::Lambda, ChargeLabel::Phi, ChargeLabel::PhiBar] {
                let part = state.project(label);
                for (slot, a) in part.amp.iter().enumerate() {
                    sum.amp[slot] += a;
                }
            }
            assert!(sum.max_amp_deviation(&state) < 1e-9);
        }
    }

    #[test]
    fn projector_algebra_is_exact_on_coefficients() {
        // T_g T_g' = T_{gg'} (white) or T_{g'g} (grey); verify idempotence,
        // orthogonality and hermiticity at the coefficient level
        for grey in [false, true] {
            for x in ChargeLabel::ALL {
                for y in ChargeLabel::ALL {
                    let cx = PlaquetteState::projector_coeffs(x);
                    let cy = PlaquetteState::projector_coeffs(y);
                    let mut conv = [Complex64::new(0.0, 0.0); 6];
                    for g in S3::all() {
                        for gp in S3::all() {
                            let u = if grey { gp.mul(g) } else { g.mul(gp) };
                            conv[u.index()] += cx[g.index()] * cy[gp.index()];
                        }
                    }
                    let want = if x == y {
                        PlaquetteState::projector_coeffs(x)
                    } else {
                        [Complex64::new(0.0, 0.0); 6]
                    };
                    for g in S3::all() {
                        assert!((conv[g.index()] - want[g.index()]).norm() < TOL);
                    }
                }
                // hermiticity: conj(c(g^{-1})) == c(g)
                let c = PlaquetteState::projector_coeffs(x);
                for g in S3::all() {
                    assert!((c[g.inv().index()].conj() - c[g.index()]).norm() < TOL);
                }
            }
        }
    }

    #[test]
    fn correspondence_spot_checks() {
        // phi x phi -> deterministic phibar on white
        let c = classical_pair_distribution(1, 4, Color::White);
        assert!((c.get(ChargeLabel::PhiBar) - 1.0).abs() < TOL);
        // phi x phibar -> even vacuum/lambda mixture
        let c = classical_pair_distribution(4, 5, Color::White);
        assert!((c.get(ChargeLabel::One) - 0.5).abs() < TOL);
        assert!((c.get(ChargeLabel::Lambda) - 0.5).abs() < TOL);
        // lambda x phi -> phi unchanged
        let c = classical_pair_distribution(3, 1, Color::White);
        assert!((c.get(ChargeLabel::Phi) - 1.0).abs() < TOL);
    }
}
