//! The printed pre-measurement states, gates and product-state expansions, and
//! an exact diff of them against the derived values.

mod errata;
pub mod transcription;

pub use errata::{compare_tables, AlternateReading, Discrepancy, ErrataEntry, ErrataReport, TableValue};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::basis::{ExpansionRow, BASIS_SIZE};
use crate::error::{check_index, Error, Result};
use crate::qutrit::{Amplitude, Ket, LinearForm, Operator3, Provenance, Site};
use crate::scalar::ExtScalar;
use transcription::{
    ExpansionText, GateText, Lit, StateText, CHANNEL_IX_STATE_LABEL_KEYS, EXPANSIONS, GATES, PREMEASURE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    Premeasure,
    Gate,
    ExpansionRow,
    Label,
}

impl EntryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryKind::Premeasure => "premeasure",
            EntryKind::Gate => "gate",
            EntryKind::ExpansionRow => "expansion_row",
            EntryKind::Label => "label",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum PaperValue {
    Premeasure(Ket<LinearForm>),
    Gate(Operator3),
    ExpansionRow(ExpansionRow),
}

/// One printed entry. For expansion rows `channel` and `outcome` hold the
/// product-state indices `(a2, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PaperEntry {
    pub location: &'static str,
    pub channel: usize,
    pub outcome: usize,
    pub kind: EntryKind,
    pub value: PaperValue,
    pub printed_label: &'static str,
    pub notes: &'static str,
}

impl PaperEntry {
    pub fn gate(&self) -> Option<&Operator3> {
        match &self.value {
            PaperValue::Gate(g) => Some(g),
            _ => None,
        }
    }

    pub fn premeasure(&self) -> Option<&Ket<LinearForm>> {
        match &self.value {
            PaperValue::Premeasure(s) => Some(s),
            _ => None,
        }
    }

    pub fn expansion(&self) -> Option<&ExpansionRow> {
        match &self.value {
            PaperValue::ExpansionRow(r) => Some(r),
            _ => None,
        }
    }
}

impl Lit {
    pub fn value(&self) -> ExtScalar {
        if self.inverted {
            ExtScalar::over_sqrt(self.num, self.den, self.radicand)
        } else {
            ExtScalar::surd(self.num, self.den, self.radicand)
        }
    }
}

fn state_value(t: &StateText) -> Ket<LinearForm> {
    let pre = t.prefactor.value();
    let mut amps = vec![LinearForm::default(); 3];
    for term in t.terms {
        let add = LinearForm::symbol(term.amp).scaled(&(&pre * &ExtScalar::integer(term.coef)));
        amps[term.ket] = amps[term.ket].plus(&add);
    }
    Ket::new(Site::B, amps).expect("three amplitudes")
}

fn gate_value(t: &GateText, channel: usize, outcome: usize) -> Operator3 {
    let pre = t.prefactor.value();
    t.terms
        .iter()
        .fold(Operator3::zero(), |acc, term| {
            acc.mat_add(&Operator3::outer(&pre * &ExtScalar::integer(term.coef), term.ket, term.bra))
        })
        .tagged(Provenance::Paper, Some(channel), Some(outcome))
}

fn expansion_value(t: &ExpansionText) -> ExpansionRow {
    let pre = t.prefactor.value();
    let mut coefficients: BTreeMap<usize, ExtScalar> = BTreeMap::new();
    for term in t.terms {
        let c = coefficients.entry(term.psi).or_default();
        *c = &*c + &(&pre * &term.coef.value());
    }
    coefficients.retain(|_, c| !c.is_zero());
    ExpansionRow { a2: t.a2, b: t.b, coefficients }
}

fn check_pair(channel: usize, outcome: usize) -> Result<()> {
    check_index("channel", channel, BASIS_SIZE)?;
    check_index("outcome", outcome, BASIS_SIZE)?;
    Ok(())
}

/// The printed gate at position `outcome` of channel `channel`'s list.
pub fn paper_gate(channel: usize, outcome: usize) -> Result<PaperEntry> {
    check_pair(channel, outcome)?;
    let t = &GATES[channel][outcome];
    Ok(PaperEntry {
        location: t.location,
        channel,
        outcome,
        kind: EntryKind::Gate,
        value: PaperValue::Gate(gate_value(t, channel, outcome)),
        printed_label: t.label,
        notes: t.notes,
    })
}

/// The printed pre-measurement state at position `outcome` of channel `channel`'s list.
pub fn paper_premeasure(channel: usize, outcome: usize) -> Result<PaperEntry> {
    check_pair(channel, outcome)?;
    let t = &PREMEASURE[channel][outcome];
    Ok(PaperEntry {
        location: t.location,
        channel,
        outcome,
        kind: EntryKind::Premeasure,
        value: PaperValue::Premeasure(state_value(t)),
        printed_label: t.label,
        notes: t.notes,
    })
}

/// Outcome index named by the printed label of the state at `position`.
pub fn premeasure_label_key(channel: usize, position: usize) -> usize {
    if channel == 8 {
        CHANNEL_IX_STATE_LABEL_KEYS[position]
    } else {
        position
    }
}

/// Every printed state whose label names outcome `outcome`. Errors when no
/// printed label does (channel IX has no state labelled `s_8^6`).
pub fn paper_premeasures_by_label(channel: usize, outcome: usize) -> Result<Vec<PaperEntry>> {
    check_pair(channel, outcome)?;
    let found: Vec<PaperEntry> = (0..BASIS_SIZE)
        .filter(|&p| premeasure_label_key(channel, p) == outcome)
        .map(|p| paper_premeasure(channel, p))
        .collect::<Result<_>>()?;
    if found.is_empty() {
        return Err(Error::MissingEntry { kind: "premeasure", channel, outcome });
    }
    Ok(found)
}

/// The printed expansion of `|a2⟩|b⟩`.
pub fn paper_expansion(a2: usize, b: usize) -> Result<PaperEntry> {
    check_index("A2 basis", a2, 3)?;
    check_index("B basis", b, 3)?;
    let t = EXPANSIONS
        .iter()
        .find(|t| t.a2 == a2 && t.b == b)
        .ok_or(Error::MissingEntry { kind: "expansion_row", channel: a2, outcome: b })?;
    Ok(PaperEntry {
        location: t.location,
        channel: a2,
        outcome: b,
        kind: EntryKind::ExpansionRow,
        value: PaperValue::ExpansionRow(expansion_value(t)),
        printed_label: t.label,
        notes: t.notes,
    })
}

/// All printed expansions in printed order.
pub fn paper_expansions() -> Vec<PaperEntry> {
    EXPANSIONS
        .iter()
        .map(|t| paper_expansion(t.a2, t.b).expect("transcribed row"))
        .collect()
}

pub fn canonical_gate_label(channel: usize, outcome: usize) -> String {
    format!("Λ_{channel}^{outcome}")
}

pub fn canonical_premeasure_label(channel: usize, outcome: usize) -> String {
    format!("|s_{channel}^{outcome}⟩_B")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lf(j: usize, c: ExtScalar) -> LinearForm {
        LinearForm::symbol(j).scaled(&c)
    }

    #[test]
    fn gate_0_0_is_a_third_of_identity() {
        let e = paper_gate(0, 0).unwrap();
        assert_eq!(e.kind, EntryKind::Gate);
        assert_eq!(e.location, "Eq. (11a)");
        let g = e.gate().unwrap();
        assert_eq!(g.provenance, Provenance::Paper);
        assert!(g.same_matrix(&Operator3::identity().scaled(&ExtScalar::ratio(1, 3))));
    }

    #[test]
    fn gate_0_3_keeps_printed_sign() {
        let g = paper_gate(0, 3).unwrap();
        let m = ExtScalar::over_sqrt(-1, 1, 6);
        let want = Operator3::outer(m.clone(), 1, 1).mat_add(&Operator3::outer(m, 2, 2));
        assert!(g.gate().unwrap().same_matrix(&want));
    }

    #[test]
    fn premeasure_6_0() {
        let e = paper_premeasure(6, 0).unwrap();
        let r = ExtScalar::over_sqrt(1, 1, 6);
        let want = Ket::new(
            Site::B,
            vec![lf(1, r.clone()), lf(2, r), LinearForm::default()],
        )
        .unwrap();
        assert_eq!(e.premeasure().unwrap(), &want);
        assert_eq!(e.printed_label, "|s_6^0⟩_B");
    }

    #[test]
    fn premeasure_8_8_lacks_c2() {
        let s = paper_premeasure(8, 8).unwrap();
        let k = s.premeasure().unwrap();
        assert!(Amplitude::is_zero(k.amplitude(2)));
        assert_eq!(k.amplitude(0), &lf(0, ExtScalar::ratio(2, 3)));
    }

    #[test]
    fn printed_labels_preserve_anomalies() {
        assert_eq!(paper_gate(0, 6).unwrap().printed_label, "λ_0^6");
        assert_eq!(paper_gate(1, 0).unwrap().printed_label, "Λ̂_1^0");
        assert_eq!(paper_gate(8, 0).unwrap().printed_label, "Λ_0^8");
        assert_eq!(paper_premeasure(8, 4).unwrap().printed_label, "|s_8^8⟩_B");
    }

    #[test]
    fn label_keyed_lookup() {
        let e = paper_premeasures_by_label(8, 8).unwrap();
        assert_eq!(e.iter().map(|e| e.outcome).collect::<Vec<_>>(), vec![4, 8]);
        assert_eq!(paper_premeasures_by_label(8, 4).unwrap()[0].outcome, 5);
        assert!(matches!(
            paper_premeasures_by_label(8, 6),
            Err(Error::MissingEntry { channel: 8, outcome: 6, .. })
        ));
        assert_eq!(paper_premeasures_by_label(3, 6).unwrap()[0].outcome, 6);
    }

    #[test]
    fn expansion_rows() {
        let e = paper_expansion(1, 1).unwrap();
        let r = e.expansion().unwrap();
        assert_eq!(r.coefficient(3), ExtScalar::over_sqrt(-1, 1, 2));
        assert_eq!(r.coefficient(8), ExtScalar::over_sqrt(1, 1, 6));
        assert_eq!(paper_expansions().len(), 9);
        assert_eq!(paper_expansions()[2].location, "Eq. (4c)");
    }

    #[test]
    fn out_of_range() {
        assert!(paper_gate(9, 0).is_err());
        assert!(paper_premeasure(0, 9).is_err());
        assert!(paper_expansion(3, 0).is_err());
    }
}
