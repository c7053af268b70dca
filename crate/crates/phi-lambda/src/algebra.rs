//! Z6 charge arithmetic, anyon classification and the exact fusion
//! statistics of the Phi-Lambda model.
//!
//! A charge is a residue mod 6 living on a plaquette or boundary. Residue 0
//! is the vacuum, residue 3 is the Abelian anyon `Lambda`, and the residues
//! {1,2,4,5} are the internal states of the non-Abelian anyon `Phi`. The
//! internal state is hidden: observers (and the decoder) only ever learn the
//! [`AnyonKind`]. All closed-form probability tables in this module are exact
//! rationals; see [`crate::rational`].

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// Residues that classify as a Phi anyon.
pub const PHI_RESIDUES: [u8; 4] = [1, 2, 4, 5];

/// A Z6 charge value. Always in `0..6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Charge(u8);

impl Charge {
    pub const ZERO: Charge = Charge(0);
    pub const LAMBDA: Charge = Charge(3);

    pub fn new(value: u8) -> Charge {
        assert!(value < 6, "charge out of range: {value}");
        Charge(value)
    }

    /// Canonical nonnegative residue of any signed integer.
    pub fn from_i32(value: i32) -> Charge {
        Charge(value.rem_euclid(6) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Fusion of two charges: addition mod 6.
    pub fn fuse(self, other: Charge) -> Charge {
        Charge((self.0 + other.0) % 6)
    }

    /// The unique charge that fuses with `self` to vacuum.
    pub fn inverse(self) -> Charge {
        Charge((6 - self.0) % 6)
    }

    pub fn kind(self) -> AnyonKind {
        match self.0 {
            0 => AnyonKind::Vacuum,
            3 => AnyonKind::Lambda,
            _ => AnyonKind::Phi,
        }
    }

    pub fn is_phi(self) -> bool {
        self.kind() == AnyonKind::Phi
    }

    pub fn all() -> impl Iterator<Item = Charge> {
        (0..6).map(Charge)
    }
}

/// What an observer sees on a plaquette: the anyon type, never the residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum AnyonKind {
    Vacuum,
    Lambda,
    Phi,
}

impl AnyonKind {
    pub const ALL: [AnyonKind; 3] = [AnyonKind::Vacuum, AnyonKind::Lambda, AnyonKind::Phi];

    pub fn label(self) -> &'static str {
        match self {
            AnyonKind::Vacuum => "1",
            AnyonKind::Lambda => "Lambda",
            AnyonKind::Phi => "Phi",
        }
    }
}

/// Classification of a charge into its anyon type.
pub fn classify(charge: Charge) -> AnyonKind {
    charge.kind()
}

// ---------------------------------------------------------------------------
// Pair splitting
// ---------------------------------------------------------------------------

/// Exact distribution over the ordered Phi pairs a parent charge can split
/// into. Every outcome `(b1, b2)` has `b1 + b2 = parent (mod 6)` and both
/// members in [`PHI_RESIDUES`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitDistribution {
    parent: Charge,
    outcomes: Vec<(Charge, Charge, Rational)>,
}

impl SplitDistribution {
    /// Assemble a distribution from explicit outcomes; lets validation
    /// checks be exercised against injected faults.
    pub fn from_parts(parent: Charge, outcomes: Vec<(Charge, Charge, Rational)>) -> Self {
        SplitDistribution { parent, outcomes }
    }

    pub fn parent(&self) -> Charge {
        self.parent
    }

    pub fn outcomes(&self) -> &[(Charge, Charge, Rational)] {
        &self.outcomes
    }

    pub fn weight_sum(&self) -> Rational {
        self.outcomes
            .iter()
            .fold(Rational::ZERO, |acc, &(_, _, w)| acc + w)
    }
}

/// The uniform distribution over `{(b1, parent - b1) : both members Phi}`.
///
/// Vacuum and Lambda parents admit four ordered outcomes (weight 1/4 each);
/// a Phi parent admits the two outcomes inside its own residue coset
/// (weight 1/2 each).
pub fn split_pair_distribution(parent: Charge) -> SplitDistribution {
    let mut outcomes = Vec::new();
    for &b1 in &PHI_RESIDUES {
        let b2 = parent.fuse(Charge(b1).inverse());
        if b2.is_phi() {
            outcomes.push((Charge(b1), b2, Rational::ZERO));
        }
    }
    let n = outcomes.len() as i64;
    for entry in &mut outcomes {
        entry.2 = Rational::new(1, n);
    }
    SplitDistribution { parent, outcomes }
}

/// Draw one ordered pair from [`split_pair_distribution`].
pub fn sample_split<R: Rng + ?Sized>(parent: Charge, rng: &mut R) -> (Charge, Charge) {
    let mut admissible = [(Charge::ZERO, Charge::ZERO); 4];
    let mut n = 0;
    for &b1 in &PHI_RESIDUES {
        let b2 = parent.fuse(Charge(b1).inverse());
        if b2.is_phi() {
            admissible[n] = (Charge(b1), b2);
            n += 1;
        }
    }
    admissible[rng.gen_range(0..n)]
}

// ---------------------------------------------------------------------------
// Fusion statistics of four Phi anyons
// ---------------------------------------------------------------------------

/// An exact probability distribution over anyon kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KindDistribution {
    pub vacuum: Rational,
    pub lambda: Rational,
    pub phi: Rational,
}

impl KindDistribution {
    pub const ZERO: KindDistribution = KindDistribution {
        vacuum: Rational::ZERO,
        lambda: Rational::ZERO,
        phi: Rational::ZERO,
    };

    pub fn get(&self, kind: AnyonKind) -> Rational {
        match kind {
            AnyonKind::Vacuum => self.vacuum,
            AnyonKind::Lambda => self.lambda,
            AnyonKind::Phi => self.phi,
        }
    }

    fn add(&mut self, kind: AnyonKind, weight: Rational) {
        match kind {
            AnyonKind::Vacuum => self.vacuum += weight,
            AnyonKind::Lambda => self.lambda += weight,
            AnyonKind::Phi => self.phi += weight,
        }
    }

    pub fn total(&self) -> Rational {
        self.vacuum + self.lambda + self.phi
    }
}

/// Parent charge pairs realizing two pair-splits of total charge zero whose
/// intermediate type is `x`. For Phi the parent residue itself is mixed
/// uniformly over the four Phi values, anti-correlated between the two pairs.
fn parent_pairs(x: AnyonKind) -> Vec<(Charge, Charge, Rational)> {
    match x {
        AnyonKind::Vacuum => vec![(Charge::ZERO, Charge::ZERO, Rational::ONE)],
        AnyonKind::Lambda => vec![(Charge::LAMBDA, Charge::LAMBDA, Rational::ONE)],
        AnyonKind::Phi => PHI_RESIDUES
            .iter()
            .map(|&b| (Charge(b), Charge(b).inverse(), Rational::new(1, 4)))
            .collect(),
    }
}

/// Exact distribution of the fusion of one member of each of two Phi pairs
/// split from intermediate type `x`, computed by full enumeration.
pub fn cross_pair_fusion_table(x: AnyonKind) -> KindDistribution {
    let mut table = KindDistribution::ZERO;
    for (pa, pb, wp) in parent_pairs(x) {
        for &(a1, _, wa) in split_pair_distribution(pa).outcomes() {
            for &(b1, _, wb) in split_pair_distribution(pb).outcomes() {
                table.add(a1.fuse(b1).kind(), wp * wa * wb);
            }
        }
    }
    table
}

/// The order in which the two exchanges of the four-anyon experiment are
/// applied: (i) swaps positions A,B and (ii) swaps positions B,C.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BraidOrder {
    IThenIi,
    IiThenI,
}

/// Fusion statistics of the anyons ending at positions B and C after the two
/// exchanges, starting from two Phi pairs split out of the vacuum.
///
/// One order brings members of the same pair together (deterministic vacuum),
/// the other brings members of different pairs together (the cross-pair
/// table). The orders giving different distributions is the witness that the
/// exchange action is non-Abelian.
pub fn braid_order_experiment(order: BraidOrder) -> KindDistribution {
    let mut table = KindDistribution::ZERO;
    for &(a, b, w1) in split_pair_distribution(Charge::ZERO).outcomes() {
        for &(c, d, w2) in split_pair_distribution(Charge::ZERO).outcomes() {
            // anyons at positions A,B,C,D
            let mut pos = [a, b, c, d];
            match order {
                BraidOrder::IThenIi => {
                    pos.swap(0, 1);
                    pos.swap(1, 2);
                }
                BraidOrder::IiThenI => {
                    pos.swap(1, 2);
                    pos.swap(0, 1);
                }
            }
            table.add(pos[1].fuse(pos[2]).kind(), w1 * w2);
        }
    }
    table
}

// ---------------------------------------------------------------------------
// Reference constants
// ---------------------------------------------------------------------------

/// Channels open to the fusion of two anyon kinds.
pub fn fusion_channels(a: AnyonKind, b: AnyonKind) -> &'static [AnyonKind] {
    use AnyonKind::*;
    match (a, b) {
        (Vacuum, Vacuum) | (Lambda, Lambda) => &[Vacuum],
        (Vacuum, Lambda) | (Lambda, Vacuum) => &[Lambda],
        (Vacuum, Phi) | (Phi, Vacuum) | (Lambda, Phi) | (Phi, Lambda) => &[Phi],
        (Phi, Phi) => &[Vacuum, Lambda, Phi],
    }
}

/// The one non-trivial F-matrix of the model, in the channel basis
/// (vacuum, Lambda, Phi). Real, symmetric and an involution.
pub fn f_matrix() -> [[f64; 3]; 3] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [[0.5, 0.5, -s], [0.5, 0.5, s], [-s, s, 0.0]]
}

/// Exchange phase of two Phi anyons fusing through the given channel.
pub fn r_phase(channel: AnyonKind) -> f64 {
    match channel {
        AnyonKind::Lambda => -1.0,
        _ => 1.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_pcg::Pcg64;

    fn frac(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    #[test]
    fn classify_matches_residue_classes() {
        assert_eq!(classify(Charge::new(0)), AnyonKind::Vacuum);
        assert_eq!(classify(Charge::new(3)), AnyonKind::Lambda);
        assert_eq!(classify(Charge::new(5)), AnyonKind::Phi);
        for &b in &PHI_RESIDUES {
            assert_eq!(classify(Charge::new(b)), AnyonKind::Phi);
        }
    }

    #[test]
    fn fuse_examples() {
        assert_eq!(Charge::new(3).fuse(Charge::new(3)), Charge::ZERO);
        assert_eq!(Charge::new(1).fuse(Charge::new(5)), Charge::ZERO);
        assert_eq!(Charge::new(1).fuse(Charge::new(1)), Charge::new(2));
        assert!(Charge::new(1).fuse(Charge::new(1)).is_phi());
        assert_eq!(Charge::new(2).fuse(Charge::new(3)), Charge::new(5));
    }

    #[test]
    fn fuse_is_commutative_associative_with_identity() {
        for a in Charge::all() {
            assert_eq!(a.fuse(Charge::ZERO), a);
            for b in Charge::all() {
                assert_eq!(a.fuse(b), b.fuse(a));
                for c in Charge::all() {
                    assert_eq!(a.fuse(b).fuse(c), a.fuse(b.fuse(c)));
                }
            }
        }
    }

    #[test]
    fn lambda_absorption_preserves_phi() {
        for &b in &PHI_RESIDUES {
            let c = Charge::new(b);
            assert_eq!(c.fuse(Charge::LAMBDA).kind(), c.kind());
        }
    }

    #[test]
    fn split_distributions_match_closed_form() {
        let d0 = split_pair_distribution(Charge::ZERO);
        let want0: Vec<(u8, u8)> = vec![(1, 5), (2, 4), (4, 2), (5, 1)];
        assert_eq!(
            d0.outcomes()
                .iter()
                .map(|&(a, b, _)| (a.value(), b.value()))
                .collect::<Vec<_>>(),
            want0
        );
        assert!(d0.outcomes().iter().all(|&(_, _, w)| w == frac(1, 4)));

        let d3 = split_pair_distribution(Charge::LAMBDA);
        let want3: Vec<(u8, u8)> = vec![(1, 2), (2, 1), (4, 5), (5, 4)];
        assert_eq!(
            d3.outcomes()
                .iter()
                .map(|&(a, b, _)| (a.value(), b.value()))
                .collect::<Vec<_>>(),
            want3
        );

        let d2 = split_pair_distribution(Charge::new(2));
        let want2: Vec<(u8, u8)> = vec![(1, 1), (4, 4)];
        assert_eq!(
            d2.outcomes()
                .iter()
                .map(|&(a, b, _)| (a.value(), b.value()))
                .collect::<Vec<_>>(),
            want2
        );
        assert!(d2.outcomes().iter().all(|&(_, _, w)| w == frac(1, 2)));
    }

    #[test]
    fn split_conserves_charge_and_weights() {
        for parent in Charge::all() {
            let dist = split_pair_distribution(parent);
            assert_eq!(dist.weight_sum(), Rational::ONE);
            for &(b1, b2, _) in dist.outcomes() {
                assert_eq!(b1.fuse(b2), parent);
                assert!(b1.is_phi() && b2.is_phi());
            }
        }
    }

    #[test]
    fn sample_split_frequencies_converge() {
        let mut rng = Pcg64::seed_from_u64(7);
        let n = 1_000_000u32;
        let mut count_15 = 0u32;
        for _ in 0..n {
            let (b1, b2) = sample_split(Charge::ZERO, &mut rng);
            assert_eq!(b1.fuse(b2), Charge::ZERO);
            if b1.value() == 1 {
                count_15 += 1;
            }
        }
        // binomial standard error at p=1/4 over 1e6 draws is ~0.00043
        let freq = f64::from(count_15) / f64::from(n);
        assert!((freq - 0.25).abs() < 0.002, "freq={freq}");
    }

    #[test]
    fn sample_split_lambda_parent() {
        let mut rng = Pcg64::seed_from_u64(11);
        for _ in 0..100 {
            let (b1, b2) = sample_split(Charge::LAMBDA, &mut rng);
            assert_eq!(b1.fuse(b2), Charge::LAMBDA);
            assert!(b1.is_phi() && b2.is_phi());
        }
    }

    #[test]
    fn cross_pair_table_matches_closed_form() {
        for x in [AnyonKind::Vacuum, AnyonKind::Lambda] {
            let t = cross_pair_fusion_table(x);
            assert_eq!(t.vacuum, frac(1, 4));
            assert_eq!(t.lambda, frac(1, 4));
            assert_eq!(t.phi, frac(1, 2));
            assert_eq!(t.total(), Rational::ONE);
        }
        let t = cross_pair_fusion_table(AnyonKind::Phi);
        assert_eq!(t.vacuum, frac(1, 2));
        assert_eq!(t.lambda, frac(1, 2));
        assert_eq!(t.phi, Rational::ZERO);
    }

    #[test]
    fn braid_order_distinguishes_exchange_order() {
        let same_pair = braid_order_experiment(BraidOrder::IiThenI);
        assert_eq!(same_pair.vacuum, Rational::ONE);
        assert_eq!(same_pair.lambda, Rational::ZERO);
        assert_eq!(same_pair.phi, Rational::ZERO);

        let cross_pair = braid_order_experiment(BraidOrder::IThenIi);
        assert_eq!(cross_pair, cross_pair_fusion_table(AnyonKind::Vacuum));
        assert_ne!(same_pair, cross_pair);
    }

    #[test]
    fn braid_experiment_symmetric_under_pair_relabeling() {
        // relabeling the two pairs is a no-op because they are i.i.d.; check
        // fusing the other member choice gives the same cross-pair table
        let mut table = KindDistribution::ZERO;
        for &(pa, pb, wp) in &parent_pairs(AnyonKind::Vacuum) {
            for &(_, a2, wa) in split_pair_distribution(pa).outcomes() {
                for &(_, b2, wb) in split_pair_distribution(pb).outcomes() {
                    table.add(a2.fuse(b2).kind(), wp * wa * wb);
                }
            }
        }
        assert_eq!(table, cross_pair_fusion_table(AnyonKind::Vacuum));
    }

    #[test]
    fn f_matrix_is_symmetric_involution() {
        let f = f_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(f[i][j], f[j][i]);
                let mut dot = 0.0;
                for k in 0..3 {
                    dot += f[i][k] * f[k][j];
                }
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn r_phases() {
        assert_eq!(r_phase(AnyonKind::Vacuum), 1.0);
        assert_eq!(r_phase(AnyonKind::Phi), 1.0);
        assert_eq!(r_phase(AnyonKind::Lambda), -1.0);
    }

    #[test]
    fn fusion_rules_table() {
        use AnyonKind::*;
        assert_eq!(fusion_channels(Lambda, Lambda), &[Vacuum]);
        assert_eq!(fusion_channels(Phi, Lambda), &[Phi]);
        assert_eq!(fusion_channels(Phi, Phi), &[Vacuum, Lambda, Phi]);
        // every fusion of concrete charges lands in an open channel
        for a in Charge::all() {
            for b in Charge::all() {
                let out = a.fuse(b).kind();
                assert!(fusion_channels(a.kind(), b.kind()).contains(&out));
            }
        }
    }
}
