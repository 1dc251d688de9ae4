//! Unitarity, completeness, outcome probabilities, recovery and fidelity.

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::Serialize;

use crate::basis::BASIS_SIZE;
use crate::engine::{derive_all, oracle_gate};
use crate::error::{check_index, Error, Result};
use crate::qutrit::{Operator3, Provenance};
use crate::scalar::ExtScalar;

/// Inputs whose norm differs from 1 by more than this are rejected.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Outcomes with `‖Λφ‖²` at or below this are treated as impossible.
pub const PROBABILITY_FLOOR: f64 = 1e-24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GateClass {
    ProportionalToUnitary,
    InvertibleNotPropUnitary,
    Singular,
}

impl GateClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GateClass::ProportionalToUnitary => "proportional_to_unitary",
            GateClass::InvertibleNotPropUnitary => "invertible_not_prop_unitary",
            GateClass::Singular => "singular",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateProfile {
    pub channel: Option<usize>,
    pub outcome: Option<usize>,
    /// `tr Λ†Λ`.
    pub frobenius_norm_sq: ExtScalar,
    /// `‖Λ†Λ − I‖²`.
    pub unitarity_deviation_sq: ExtScalar,
    /// `‖Λ†Λ − (tr Λ†Λ / 3)·I‖²`.
    pub scaled_unitarity_deviation_sq: ExtScalar,
    pub rank: usize,
    pub classification: GateClass,
}

impl GateProfile {
    pub fn is_unitary(&self) -> bool {
        self.unitarity_deviation_sq.is_zero()
    }
}

pub fn profile_gate(g: &Operator3) -> GateProfile {
    let gram = g.gram();
    let frobenius_norm_sq = gram.trace();
    let unitarity_deviation_sq = gram.mat_sub(&Operator3::identity()).frobenius_sq();
    let mean = &frobenius_norm_sq * &ExtScalar::ratio(1, 3);
    let scaled_unitarity_deviation_sq = gram.mat_sub(&Operator3::identity().scaled(&mean)).frobenius_sq();
    let rank = g.rank();
    let classification = match (rank, scaled_unitarity_deviation_sq.is_zero()) {
        (3, true) => GateClass::ProportionalToUnitary,
        (3, false) => GateClass::InvertibleNotPropUnitary,
        _ => GateClass::Singular,
    };
    GateProfile {
        channel: g.channel,
        outcome: g.outcome,
        frobenius_norm_sq,
        unitarity_deviation_sq,
        scaled_unitarity_deviation_sq,
        rank,
        classification,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Completeness {
    pub channel: usize,
    pub sum: Operator3,
    pub is_identity: bool,
}

/// `Σ_k Λ†Λ` over the oracle gates of one channel.
pub fn completeness(channel: usize) -> Result<Completeness> {
    check_index("channel", channel, BASIS_SIZE)?;
    let sum = (0..BASIS_SIZE).try_fold(Operator3::zero(), |acc, k| {
        Ok::<_, Error>(acc.mat_add(&oracle_gate(channel, k)?.gram()))
    })?;
    let is_identity = sum.is_identity();
    Ok(Completeness { channel, sum, is_identity })
}

/// The exact inverse, when it exists.
pub fn recovery(g: &Operator3) -> Option<Operator3> {
    g.inverse()
        .map(|r| r.tagged(Provenance::DerivedRecovery, g.channel, g.outcome))
}

type Matrix3f = [[f64; 3]; 3];

pub type State = [Complex64; 3];

fn apply(m: &Matrix3f, v: &State) -> State {
    std::array::from_fn(|r| (0..3).map(|c| v[c] * m[r][c]).sum())
}

fn norm_sq(v: &State) -> f64 {
    v.iter().map(Complex64::norm_sqr).sum()
}

fn normalized(v: &State) -> State {
    let n = norm_sq(v).sqrt();
    v.map(|x| x / n)
}

fn overlap_sq(a: &State, b: &State) -> f64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum::<Complex64>().norm_sqr()
}

pub fn check_normalized(phi: &State) -> Result<()> {
    let norm = norm_sq(phi).sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::NotNormalized { norm });
    }
    Ok(())
}

/// Result of recovering a teleported state.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FidelityOutcome {
    Recovered { fidelity: f64 },
    /// The gate is singular. `unrecovered` is `|⟨φ|ψ_out⟩|²` for the
    /// normalized post-measurement state, used only by the averaged figure.
    NoRecovery { unrecovered: f64 },
}

impl FidelityOutcome {
    pub fn recovered(&self) -> Option<f64> {
        match self {
            FidelityOutcome::Recovered { fidelity } => Some(*fidelity),
            FidelityOutcome::NoRecovery { .. } => None,
        }
    }

    /// The recovered fidelity, or the unrecovered overlap for singular gates.
    pub fn score(&self) -> f64 {
        match self {
            FidelityOutcome::Recovered { fidelity } => *fidelity,
            FidelityOutcome::NoRecovery { unrecovered } => *unrecovered,
        }
    }
}

/// A gate and its recovery in floating point, for repeated numeric use.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericGate {
    pub channel: Option<usize>,
    pub outcome: Option<usize>,
    pub matrix: Matrix3f,
    pub recovery: Option<Matrix3f>,
}

impl NumericGate {
    pub fn new(g: &Operator3) -> Self {
        NumericGate {
            channel: g.channel,
            outcome: g.outcome,
            matrix: g.to_f64(),
            recovery: recovery(g).map(|r| r.to_f64()),
        }
    }

    /// `‖Λφ‖²`, without a normalization check.
    pub fn weight(&self, phi: &State) -> f64 {
        norm_sq(&apply(&self.matrix, phi))
    }

    pub fn probability(&self, phi: &State) -> Result<f64> {
        check_normalized(phi)?;
        Ok(self.weight(phi))
    }

    pub fn fidelity(&self, phi: &State) -> Result<FidelityOutcome> {
        check_normalized(phi)?;
        let out = apply(&self.matrix, phi);
        if norm_sq(&out) <= PROBABILITY_FLOOR {
            return Err(Error::UndefinedOutcome {
                channel: self.channel.unwrap_or(0),
                outcome: self.outcome.unwrap_or(0),
            });
        }
        let out = normalized(&out);
        Ok(match &self.recovery {
            Some(r) => FidelityOutcome::Recovered { fidelity: overlap_sq(phi, &normalized(&apply(r, &out))) },
            None => FidelityOutcome::NoRecovery { unrecovered: overlap_sq(phi, &out) },
        })
    }
}

/// The 81 oracle gates in floating point, `(channel, outcome)` order.
pub fn numeric_oracle_gates() -> &'static [NumericGate] {
    static TABLE: OnceLock<Vec<NumericGate>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..BASIS_SIZE * BASIS_SIZE)
            .map(|n| NumericGate::new(oracle_gate(n / BASIS_SIZE, n % BASIS_SIZE).expect("in range")))
            .collect()
    })
}

fn numeric_oracle_gate(channel: usize, outcome: usize) -> Result<&'static NumericGate> {
    check_index("channel", channel, BASIS_SIZE)?;
    check_index("outcome", outcome, BASIS_SIZE)?;
    Ok(&numeric_oracle_gates()[BASIS_SIZE * channel + outcome])
}

/// Born probability `⟨φ|Λ†Λ|φ⟩` of outcome `k` on channel `i`.
pub fn outcome_probability(channel: usize, outcome: usize, phi: &State) -> Result<f64> {
    numeric_oracle_gate(channel, outcome)?.probability(phi)
}

/// `|⟨φ|ψ_rec⟩|²` after Bob applies the recovery for outcome `k`.
pub fn fidelity_after_recovery(channel: usize, outcome: usize, phi: &State) -> Result<FidelityOutcome> {
    numeric_oracle_gate(channel, outcome)?.fidelity(phi)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AverageFidelity {
    /// Mean recovered fidelity conditioned on an invertible outcome; `None` if
    /// every outcome with nonzero probability is singular.
    pub conditional_on_invertible: Option<f64>,
    /// Probability-weighted fidelity over all outcomes, scoring singular ones
    /// without recovery.
    pub including_singular: f64,
    pub singular_probability: f64,
}

pub fn average_fidelity(channel: usize, phi: &State) -> Result<AverageFidelity> {
    check_index("channel", channel, BASIS_SIZE)?;
    check_normalized(phi)?;
    let (mut inv_weight, mut inv_sum, mut all_sum, mut singular) = (0.0, 0.0, 0.0, 0.0);
    for k in 0..BASIS_SIZE {
        let g = numeric_oracle_gate(channel, k)?;
        let p = g.weight(phi);
        if p <= PROBABILITY_FLOOR {
            continue;
        }
        let f = g.fidelity(phi)?;
        all_sum += p * f.score();
        match f.recovered() {
            Some(fid) => {
                inv_weight += p;
                inv_sum += p * fid;
            }
            None => singular += p,
        }
    }
    Ok(AverageFidelity {
        conditional_on_invertible: (inv_weight > 0.0).then(|| inv_sum / inv_weight),
        including_singular: all_sum,
        singular_probability: singular,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub channel: usize,
    pub proportional_to_unitary: usize,
    pub invertible_not_prop_unitary: usize,
    pub singular: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletenessVerdict {
    pub channel: usize,
    pub is_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub profiles: Vec<GateProfile>,
    pub completeness: Vec<CompletenessVerdict>,
    pub class_counts: Vec<ClassCounts>,
    /// No gate satisfies `Λ†Λ = I`.
    pub all_non_unitary: bool,
}

/// Profiles, completeness and class counts for the given channels.
pub fn analyze(channels: &[usize]) -> Result<AnalysisReport> {
    let all = derive_all();
    let mut profiles = Vec::new();
    let mut verdicts = Vec::new();
    let mut class_counts = Vec::new();
    for &i in channels {
        check_index("channel", i, BASIS_SIZE)?;
        let d = &all[i];
        let mut counts = ClassCounts { channel: i, ..ClassCounts::default() };
        for g in d.gates() {
            let p = profile_gate(g);
            match p.classification {
                GateClass::ProportionalToUnitary => counts.proportional_to_unitary += 1,
                GateClass::InvertibleNotPropUnitary => counts.invertible_not_prop_unitary += 1,
                GateClass::Singular => counts.singular += 1,
            }
            profiles.push(p);
        }
        verdicts.push(CompletenessVerdict { channel: i, is_identity: d.completeness_sum().is_identity() });
        class_counts.push(counts);
    }
    let all_non_unitary = profiles.iter().all(|p| !p.is_unitary());
    Ok(AnalysisReport { profiles, completeness: verdicts, class_counts, all_non_unitary })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# Gate analysis\n\n");
        out.push_str("| channel | outcome | tr Λ†Λ | ‖Λ†Λ − I‖² | ‖Λ†Λ − (tr/3)I‖² | rank | class |\n");
        out.push_str("|---|---|---|---|---|---|---|\n");
        for p in &self.profiles {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} |",
                opt(p.channel),
                opt(p.outcome),
                p.frobenius_norm_sq,
                p.unitarity_deviation_sq,
                p.scaled_unitarity_deviation_sq,
                p.rank,
                p.classification.as_str()
            );
        }
        out.push_str("\n## Per channel\n\n| channel | Σ Λ†Λ = I | proportional to unitary | invertible | singular |\n|---|---|---|---|---|\n");
        for (c, v) in self.class_counts.iter().zip(&self.completeness) {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                c.channel,
                if v.is_identity { "yes" } else { "no" },
                c.proportional_to_unitary,
                c.invertible_not_prop_unitary,
                c.singular
            );
        }
        let _ = writeln!(
            out,
            "\nEvery gate non-unitary: {}",
            if self.all_non_unitary { "yes" } else { "no" }
        );
        out
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn e0() -> State {
        [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
    }

    #[test]
    fn profile_of_scalar_gate() {
        let g = Operator3::identity().scaled(&ExtScalar::ratio(1, 3));
        let p = profile_gate(&g);
        assert_eq!(p.frobenius_norm_sq, ExtScalar::ratio(1, 3));
        assert_eq!(p.unitarity_deviation_sq, ExtScalar::ratio(64, 27));
        assert!(p.scaled_unitarity_deviation_sq.is_zero());
        assert_eq!(p.classification, GateClass::ProportionalToUnitary);
    }

    #[test]
    fn profile_of_rank_one_gate() {
        let p = profile_gate(&Operator3::outer(ExtScalar::ratio(-1, 2), 0, 1));
        assert_eq!((p.rank, p.classification), (1, GateClass::Singular));
    }

    #[test]
    fn identity_is_unitary() {
        let p = profile_gate(&Operator3::identity());
        assert!(p.unitarity_deviation_sq.is_zero());
        assert!(p.is_unitary());
    }

    #[test]
    fn completeness_examples() {
        for i in 0..BASIS_SIZE {
            let c = completeness(i).unwrap();
            assert!(c.is_identity && c.sum.is_identity(), "channel {i}");
        }
        assert!(completeness(9).is_err());
    }

    #[test]
    fn probability_examples() {
        let phi = [c(0.6, 0.0), c(0.0, 0.48), c(0.64, 0.0)];
        assert!((outcome_probability(0, 0, &phi).unwrap() - 1.0 / 9.0).abs() < 1e-15);
        assert_eq!(outcome_probability(0, 3, &e0()).unwrap(), 0.0);
        let total: f64 = (0..9).map(|k| outcome_probability(4, k, &phi).unwrap()).sum();
        assert!((total - 1.0).abs() < 1e-12);
        let bad = [c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)];
        assert!(matches!(outcome_probability(0, 0, &bad), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn recovery_examples() {
        let r = recovery(&Operator3::identity().scaled(&ExtScalar::ratio(1, 3))).unwrap();
        assert!(r.same_matrix(&Operator3::identity().scaled(&ExtScalar::integer(3))));
        let r6 = ExtScalar::over_sqrt(1, 1, 6);
        let g = Operator3::outer(r6.clone(), 0, 1).mat_sub(&Operator3::outer(r6, 1, 0));
        assert!(recovery(&g).is_none());
        let h = ExtScalar::ratio(1, 2);
        assert!(recovery(&Operator3::outer(h.clone(), 2, 2).mat_add(&Operator3::outer(h, 0, 0))).is_none());
        let g = oracle_gate(8, 8).unwrap();
        let r = recovery(g).unwrap();
        assert_eq!(r.provenance, Provenance::DerivedRecovery);
        assert!(r.mat_mul(g).is_identity());
    }

    #[test]
    fn fidelity_examples() {
        let phi = [c(0.0, 0.6), c(0.8, 0.0), c(0.0, 0.0)];
        let f = fidelity_after_recovery(0, 0, &phi).unwrap().recovered().unwrap();
        assert!((f - 1.0).abs() < 1e-12);
        assert!(matches!(
            fidelity_after_recovery(0, 3, &e0()),
            Err(Error::UndefinedOutcome { channel: 0, outcome: 3 })
        ));
        assert!(matches!(
            fidelity_after_recovery(0, 1, &phi).unwrap(),
            FidelityOutcome::NoRecovery { .. }
        ));
    }

    #[test]
    fn average_fidelity_modes() {
        let phi = [c(0.6, 0.0), c(0.0, 0.48), c(0.64, 0.0)];
        let a = average_fidelity(0, &phi).unwrap();
        assert!((a.conditional_on_invertible.unwrap() - 1.0).abs() < 1e-12);
        assert!(a.including_singular <= 1.0 + 1e-12);
        assert!(a.singular_probability > 0.0 && a.singular_probability < 1.0);
    }

    #[test]
    fn report_counts() {
        let r = analyze(&(0..BASIS_SIZE).collect::<Vec<_>>()).unwrap();
        assert_eq!(r.profiles.len(), 81);
        assert!(r.all_non_unitary);
        assert!(r.completeness.iter().all(|v| v.is_identity));
        let ch0 = r.class_counts[0];
        assert_eq!(
            (ch0.proportional_to_unitary, ch0.invertible_not_prop_unitary, ch0.singular),
            (1, 1, 7)
        );
        let total: usize = r
            .class_counts
            .iter()
            .map(|c| c.proportional_to_unitary + c.invertible_not_prop_unitary + c.singular)
            .sum();
        assert_eq!(total, 81);
        assert!(r.to_markdown().contains("| 0 | yes | 1 | 1 | 7 |"));
    }
}
