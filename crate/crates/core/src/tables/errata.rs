//! Exact diff of the printed tables against the derived values.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::transcription::EXTRA_LABEL_ANOMALIES;
use super::{
    canonical_gate_label, canonical_premeasure_label, paper_expansions, paper_gate, paper_premeasure,
    paper_premeasures_by_label, premeasure_label_key, EntryKind, PaperEntry,
};
use crate::basis::{expand_product, ExpansionRow, BASIS_SIZE};
use crate::engine::{derive_all, symbolic_phi, ChannelDecomposition};
use crate::qutrit::{extract_gate, latex_sum, latex_term, Ket, LinearForm, Operator3, Site};
use crate::scalar::ExtScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Discrepancy {
    Match,
    Sign,
    Coefficient,
    IndexSwap,
    MissingTerm,
    ExtraTerm,
    LabelAnomaly,
}

impl Discrepancy {
    pub const ALL: [Discrepancy; 7] = [
        Discrepancy::Match,
        Discrepancy::Sign,
        Discrepancy::Coefficient,
        Discrepancy::IndexSwap,
        Discrepancy::MissingTerm,
        Discrepancy::ExtraTerm,
        Discrepancy::LabelAnomaly,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Discrepancy::Match => "match",
            Discrepancy::Sign => "sign",
            Discrepancy::Coefficient => "coefficient",
            Discrepancy::IndexSwap => "index_swap",
            Discrepancy::MissingTerm => "missing_term",
            Discrepancy::ExtraTerm => "extra_term",
            Discrepancy::LabelAnomaly => "label_anomaly",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum TableValue {
    Premeasure(Ket<LinearForm>),
    Gate(Operator3),
    ExpansionRow(ExpansionRow),
    Label(String),
}

impl TableValue {
    pub fn render(&self) -> String {
        match self {
            TableValue::Premeasure(k) => k.to_string(),
            TableValue::Gate(g) => g.braket(),
            TableValue::ExpansionRow(r) => {
                let parts: Vec<String> =
                    r.coefficients.iter().map(|(i, c)| format!("({c})|Ψ{i}⟩")).collect();
                if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join(" + ")
                }
            }
            TableValue::Label(s) => s.clone(),
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            TableValue::Premeasure(k) => k.to_latex(),
            TableValue::Gate(g) => g.to_latex(),
            TableValue::ExpansionRow(r) => latex_sum(
                r.coefficients.iter().map(|(i, c)| latex_term(c, &format!("|\\Psi_{i}\\rangle"))).collect(),
            ),
            TableValue::Label(s) => latex_label(s),
        }
    }
}

/// A channel-IX state compared with the outcome its printed label names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternateReading {
    pub outcome: usize,
    pub discrepancy: Discrepancy,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrataEntry {
    pub location: String,
    pub channel: usize,
    pub outcome: usize,
    pub kind: EntryKind,
    pub printed_label: String,
    pub paper_value: TableValue,
    pub oracle_value: TableValue,
    pub discrepancy: Discrepancy,
    pub detail: String,
    pub notes: String,
    /// Gates only: whether the printed gate maps `φ` to the printed state.
    pub consistent_with_printed_premeasure: Option<bool>,
    /// Channel-IX states whose printed label names a different outcome.
    pub label_keyed: Option<AlternateReading>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrataReport {
    pub entries: Vec<ErrataEntry>,
    pub summary: BTreeMap<Discrepancy, usize>,
}

impl ErrataReport {
    pub fn entry(&self, channel: usize, outcome: usize, kind: EntryKind) -> Option<&ErrataEntry> {
        self.entries
            .iter()
            .find(|e| e.channel == channel && e.outcome == outcome && e.kind == kind)
    }

    pub fn count(&self, d: Discrepancy) -> usize {
        self.summary.get(&d).copied().unwrap_or(0)
    }

    /// Entries other than `match`.
    pub fn mismatches(&self) -> impl Iterator<Item = &ErrataEntry> {
        self.entries.iter().filter(|e| e.discrepancy != Discrepancy::Match)
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches().next().is_none()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# Errata report\n\n| class | count |\n|---|---|\n");
        for (d, n) in &self.summary {
            let _ = writeln!(out, "| {} | {n} |", d.as_str());
        }
        out.push_str("\n## Product-state expansions\n\n");
        out.push_str("| a2 | b | location | printed | derived | class | detail |\n|---|---|---|---|---|---|---|\n");
        for e in self.entries.iter().filter(|e| e.kind == EntryKind::ExpansionRow) {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} |",
                e.channel,
                e.outcome,
                md(&e.location),
                md(&e.paper_value.render()),
                md(&e.oracle_value.render()),
                e.discrepancy.as_str(),
                md(&e.detail),
            );
        }
        for channel in 0..BASIS_SIZE {
            let _ = write!(
                out,
                "\n## Channel {channel}\n\n| k | kind | location | printed label | printed | derived | class | detail |\n|---|---|---|---|---|---|---|---|\n"
            );
            for e in self.entries.iter().filter(|e| e.kind != EntryKind::ExpansionRow && e.channel == channel) {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} |",
                    e.outcome,
                    e.kind.as_str(),
                    md(&e.location),
                    md(&e.printed_label),
                    md(&e.paper_value.render()),
                    md(&e.oracle_value.render()),
                    e.discrepancy.as_str(),
                    md(&full_detail(e)),
                );
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{tabular}{ll}\n\\hline\nclass & count \\\\\n\\hline\n");
        for (d, n) in &self.summary {
            let _ = writeln!(out, "{} & {n} \\\\", tex_text(d.as_str()));
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        let sections = std::iter::once((None, "Product-state expansions".to_string()))
            .chain((0..BASIS_SIZE).map(|c| (Some(c), format!("Channel {c}"))));
        for (channel, title) in sections {
            let _ = write!(
                out,
                "\n\\subsection*{{{title}}}\n\\begin{{longtable}}{{llllll}}\n\\hline\n{} & kind & printed & derived & class & location \\\\\n\\hline\n",
                if channel.is_some() { "$k$" } else { "$a_2 b$" }
            );
            let rows = self.entries.iter().filter(|e| match channel {
                None => e.kind == EntryKind::ExpansionRow,
                Some(c) => e.kind != EntryKind::ExpansionRow && e.channel == c,
            });
            for e in rows {
                let index = match channel {
                    None => format!("{}{}", e.channel, e.outcome),
                    Some(_) => e.outcome.to_string(),
                };
                let _ = writeln!(
                    out,
                    "{index} & {} & ${}$ & ${}$ & {} & {} \\\\",
                    tex_text(e.kind.as_str()),
                    e.paper_value.to_latex(),
                    e.oracle_value.to_latex(),
                    tex_text(e.discrepancy.as_str()),
                    tex_text(&e.location),
                );
            }
            out.push_str("\\hline\n\\end{longtable}\n");
        }
        out
    }
}

fn full_detail(e: &ErrataEntry) -> String {
    let mut parts = Vec::new();
    if !e.detail.is_empty() {
        parts.push(e.detail.clone());
    }
    if e.consistent_with_printed_premeasure == Some(false) {
        parts.push("inconsistent with the printed state".to_string());
    }
    if let Some(a) = &e.label_keyed {
        parts.push(format!("label names outcome {}: {}", a.outcome, a.discrepancy.as_str()));
    }
    if !e.notes.is_empty() {
        parts.push(e.notes.clone());
    }
    parts.join("; ")
}

fn md(s: &str) -> String {
    s.replace('|', "\\|")
}

fn tex_text(s: &str) -> String {
    let s = s.replace('_', "\\_");
    let labelled = latex_label(&s);
    if labelled == s {
        s
    } else {
        format!("${labelled}$")
    }
}

fn latex_label(s: &str) -> String {
    let mut out = String::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let hat = chars.get(i + 1) == Some(&'\u{302}');
        let sym = match chars[i] {
            'Λ' => Some("\\Lambda"),
            'λ' => Some("\\lambda"),
            'Ψ' => Some("\\Psi"),
            '⟩' => Some("\\rangle"),
            '⟨' => Some("\\langle"),
            _ => None,
        };
        match (sym, hat) {
            (Some(sym), true) => {
                let _ = write!(out, "\\hat{{{sym}}}");
                i += 1;
            }
            (Some(sym), false) => {
                out.push_str(sym);
                out.push(' ');
            }
            (None, _) => out.push(chars[i]),
        }
        i += 1;
    }
    out
}

/// How `paper` differs from `oracle`, both flattened to the same layout, plus a
/// detail string naming the positions involved.
fn classify(
    paper: &[ExtScalar],
    oracle: &[ExtScalar],
    transposed_oracle: Option<&[ExtScalar]>,
    position: impl Fn(usize) -> String,
) -> (Discrepancy, String) {
    if paper == oracle {
        return (Discrepancy::Match, String::new());
    }
    if paper.iter().zip(oracle).all(|(p, o)| *p == -o) {
        return (Discrepancy::Sign, "printed value is the negative of the derived value".to_string());
    }
    if transposed_oracle.is_some_and(|t| t == paper) {
        return (
            Discrepancy::IndexSwap,
            "printed value is the transpose of the derived value".to_string(),
        );
    }
    let names = |pred: &dyn Fn(&ExtScalar, &ExtScalar) -> bool| -> Vec<String> {
        paper
            .iter()
            .zip(oracle)
            .enumerate()
            .filter(|(_, (p, o))| pred(p, o))
            .map(|(i, _)| position(i))
            .collect()
    };
    let missing = names(&|p, o| p.is_zero() && !o.is_zero());
    let extra = names(&|p, o| !p.is_zero() && o.is_zero());
    if !missing.is_empty() || !extra.is_empty() {
        let mut detail = Vec::new();
        if !missing.is_empty() {
            detail.push(format!("missing {}", missing.join(", ")));
        }
        if !extra.is_empty() {
            detail.push(format!("extra {}", extra.join(", ")));
        }
        let class = if missing.is_empty() { Discrepancy::ExtraTerm } else { Discrepancy::MissingTerm };
        return (class, detail.join("; "));
    }
    let differing = names(&|p, o| p != o);
    (Discrepancy::Coefficient, format!("coefficient differs at {}", differing.join(", ")))
}

fn flatten(m: &Operator3) -> Vec<ExtScalar> {
    m.entries.iter().flatten().cloned().collect()
}

fn flatten_transposed(m: &Operator3) -> Vec<ExtScalar> {
    flatten(&m.dagger())
}

fn classify_premeasure(paper: &Ket<LinearForm>, oracle: &Ket<LinearForm>) -> (Discrepancy, String) {
    // M[b][j] is the coefficient of c_j on |b⟩.
    let p = extract_gate(paper).expect("single-qutrit state");
    let o = extract_gate(oracle).expect("single-qutrit state");
    classify(&flatten(&p), &flatten(&o), Some(&flatten_transposed(&o)), |i| {
        format!("c{}|{}⟩", i % 3, i / 3)
    })
}

fn classify_gate(paper: &Operator3, oracle: &Operator3) -> (Discrepancy, String) {
    classify(&flatten(paper), &flatten(oracle), Some(&flatten_transposed(oracle)), |i| {
        format!("|{}⟩⟨{}|", i / 3, i % 3)
    })
}

fn classify_expansion(paper: &ExpansionRow, oracle: &ExpansionRow) -> (Discrepancy, String) {
    classify(&paper.dense(), &oracle.dense(), None, |i| format!("|Ψ{i}⟩"))
}

fn numeric_entry(
    paper: PaperEntry,
    paper_value: TableValue,
    oracle_value: TableValue,
    (discrepancy, detail): (Discrepancy, String),
) -> ErrataEntry {
    ErrataEntry {
        location: paper.location.to_string(),
        channel: paper.channel,
        outcome: paper.outcome,
        kind: paper.kind,
        printed_label: paper.printed_label.to_string(),
        paper_value,
        oracle_value,
        discrepancy,
        detail,
        notes: paper.notes.to_string(),
        consistent_with_printed_premeasure: None,
        label_keyed: None,
    }
}

fn label_entry(channel: usize, outcome: usize, pm: &PaperEntry, gate: &PaperEntry) -> Option<ErrataEntry> {
    let mut locations = Vec::new();
    let mut printed = Vec::new();
    let mut canonical = Vec::new();
    let mut notes = Vec::new();
    let canon_pm = canonical_premeasure_label(channel, outcome);
    if pm.printed_label != canon_pm {
        locations.push(pm.location.to_string());
        printed.push(pm.printed_label.to_string());
        canonical.push(canon_pm);
        notes.push(format!("state at this position printed as {}", pm.printed_label));
    }
    let canon_gate = canonical_gate_label(channel, outcome);
    if gate.printed_label != canon_gate {
        locations.push(gate.location.to_string());
        printed.push(gate.printed_label.to_string());
        canonical.push(canon_gate);
        notes.push(format!("gate at this position printed as {}", gate.printed_label));
    }
    for extra in EXTRA_LABEL_ANOMALIES.iter().filter(|a| a.channel == channel && a.outcome == outcome) {
        locations.push(extra.location.to_string());
        printed.push(extra.printed_label.to_string());
        canonical.push(extra.canonical_label.to_string());
        notes.push(extra.notes.to_string());
    }
    if paper_premeasures_by_label(channel, outcome).is_err() {
        notes.push(format!("no printed state is labelled s_{channel}^{outcome}"));
    }
    if printed.is_empty() {
        return None;
    }
    Some(ErrataEntry {
        location: locations.join("; "),
        channel,
        outcome,
        kind: EntryKind::Label,
        printed_label: printed.join("; "),
        paper_value: TableValue::Label(printed.join("; ")),
        oracle_value: TableValue::Label(canonical.join("; ")),
        discrepancy: Discrepancy::LabelAnomaly,
        detail: "label differs from the canonical label; no numeric effect".to_string(),
        notes: notes.join("; "),
        consistent_with_printed_premeasure: None,
        label_keyed: None,
    })
}

fn channel_entries(d: &ChannelDecomposition) -> Vec<ErrataEntry> {
    let phi = symbolic_phi(Site::B);
    let mut out = Vec::new();
    for row in &d.rows {
        let (i, k) = (d.channel, row.outcome);
        let pm = paper_premeasure(i, k).expect("transcribed state");
        let gate = paper_gate(i, k).expect("transcribed gate");
        let pm_value = pm.premeasure().expect("state entry").clone();
        let gate_value = gate.gate().expect("gate entry").clone();

        let label_key = premeasure_label_key(i, k);
        let label_keyed = (label_key != k).then(|| {
            let (discrepancy, detail) = classify_premeasure(&pm_value, &d.rows[label_key].premeasure);
            AlternateReading { outcome: label_key, discrepancy, detail }
        });
        let class = classify_premeasure(&pm_value, &row.premeasure);
        let mut pm_entry = numeric_entry(
            pm.clone(),
            TableValue::Premeasure(pm_value.clone()),
            TableValue::Premeasure(row.premeasure.clone()),
            class,
        );
        pm_entry.label_keyed = label_keyed;
        out.push(pm_entry);

        let consistent = gate_value.apply(&phi).expect("single-qutrit operator") == pm_value;
        let class = classify_gate(&gate_value, &row.gate);
        let mut gate_entry = numeric_entry(
            gate.clone(),
            TableValue::Gate(gate_value),
            TableValue::Gate(row.gate.clone()),
            class,
        );
        gate_entry.consistent_with_printed_premeasure = Some(consistent);
        out.push(gate_entry);

        out.extend(label_entry(i, k, &pm, &gate));
    }
    out
}

/// Diffs every printed expansion row, state and gate against the derived value.
/// The result is deterministic.
pub fn compare_tables() -> ErrataReport {
    let mut entries: Vec<ErrataEntry> = paper_expansions()
        .into_iter()
        .map(|p| {
            let printed = p.expansion().expect("expansion entry").clone();
            let derived = expand_product(printed.a2, printed.b).expect("indices in range");
            let class = classify_expansion(&printed, &derived);
            numeric_entry(p, TableValue::ExpansionRow(printed), TableValue::ExpansionRow(derived), class)
        })
        .collect();
    for d in derive_all() {
        entries.extend(channel_entries(&d));
    }
    let mut summary: BTreeMap<Discrepancy, usize> = Discrepancy::ALL.iter().map(|&d| (d, 0)).collect();
    for e in &entries {
        *summary.entry(e.discrepancy).or_default() += 1;
    }
    ErrataReport { entries, summary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::delta_qt;
    use std::sync::OnceLock;

    fn report() -> &'static ErrataReport {
        static R: OnceLock<ErrataReport> = OnceLock::new();
        R.get_or_init(compare_tables)
    }

    fn class(i: usize, k: usize, kind: EntryKind) -> Discrepancy {
        report().entry(i, k, kind).unwrap().discrepancy
    }

    #[test]
    fn worked_examples() {
        assert_eq!(class(0, 0, EntryKind::Gate), Discrepancy::Match);
        assert_ne!(class(0, 3, EntryKind::Gate), Discrepancy::Match);
        assert_eq!(class(8, 8, EntryKind::Premeasure), Discrepancy::MissingTerm);
    }

    #[test]
    fn classifier_cases() {
        let one = ExtScalar::one();
        let z = ExtScalar::zero();
        let pos = |i: usize| i.to_string();
        let o = [one.clone(), z.clone(), ExtScalar::integer(2), z.clone()];
        let neg: Vec<_> = o.iter().map(|x| -x).collect();
        assert_eq!(classify(&o, &o, None, pos).0, Discrepancy::Match);
        assert_eq!(classify(&neg, &o, None, pos).0, Discrepancy::Sign);
        let t = [one.clone(), ExtScalar::integer(2), z.clone(), z.clone()];
        assert_eq!(classify(&t, &o, Some(&t), pos).0, Discrepancy::IndexSwap);
        let missing = [one.clone(), z.clone(), z.clone(), z.clone()];
        let (c, d) = classify(&missing, &o, None, pos);
        assert_eq!((c, d.as_str()), (Discrepancy::MissingTerm, "missing 2"));
        let extra = [one.clone(), z.clone(), ExtScalar::integer(2), one.clone()];
        assert_eq!(classify(&extra, &o, None, pos).0, Discrepancy::ExtraTerm);
        let scaled = [one.clone(), z.clone(), ExtScalar::integer(3), z];
        assert_eq!(classify(&scaled, &o, None, pos).0, Discrepancy::Coefficient);
    }

    #[test]
    fn report_is_total_and_each_triple_appears_once() {
        let r = report();
        let count = |kind| r.entries.iter().filter(|e| e.kind == kind).count();
        assert_eq!(count(EntryKind::Gate), 81);
        assert_eq!(count(EntryKind::Premeasure), 81);
        assert_eq!(count(EntryKind::ExpansionRow), 9);
        let mut seen = std::collections::BTreeSet::new();
        for e in &r.entries {
            assert!(seen.insert((e.channel, e.outcome, e.kind)), "{e:?}");
        }
        assert_eq!(r.summary.values().sum::<usize>(), r.entries.len());
        assert_eq!(r.summary.len(), Discrepancy::ALL.len());
    }

    #[test]
    fn match_iff_exact_difference_is_zero() {
        for e in &report().entries {
            let zero_diff = match (&e.paper_value, &e.oracle_value) {
                (TableValue::Gate(p), TableValue::Gate(o)) => p.mat_sub(o).is_zero(),
                (TableValue::Premeasure(p), TableValue::Premeasure(o)) => p.checked_sub(o).unwrap().is_zero(),
                (TableValue::ExpansionRow(p), TableValue::ExpansionRow(o)) => p.dense() == o.dense(),
                (TableValue::Label(_), TableValue::Label(_)) => {
                    assert_eq!(e.discrepancy, Discrepancy::LabelAnomaly);
                    continue;
                }
                _ => panic!("mismatched value kinds"),
            };
            assert_eq!(zero_diff, e.discrepancy == Discrepancy::Match, "{} {}", e.location, e.kind.as_str());
        }
    }

    #[test]
    fn matched_gates_have_zero_residual() {
        for e in report().entries.iter().filter(|e| e.kind == EntryKind::Gate) {
            if let (Discrepancy::Match, TableValue::Gate(g)) = (e.discrepancy, &e.paper_value) {
                assert!(delta_qt(e.channel, e.outcome, g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn self_consistent_entries_match() {
        for k in [0, 1, 2, 4, 5, 7] {
            assert_eq!(class(0, k, EntryKind::Gate), Discrepancy::Match, "gate (0,{k})");
        }
        for k in 0..9 {
            assert_eq!(class(1, k, EntryKind::Gate), Discrepancy::Match, "gate (1,{k})");
            assert_eq!(class(1, k, EntryKind::Premeasure), Discrepancy::Match, "state (1,{k})");
            assert_eq!(class(0, k, EntryKind::Premeasure), Discrepancy::Match, "state (0,{k})");
        }
        for e in report().entries.iter().filter(|e| e.kind == EntryKind::ExpansionRow) {
            assert_eq!(e.discrepancy, Discrepancy::Match, "{}", e.location);
        }
    }

    #[test]
    fn printed_gate_0_3_disagrees_with_printed_state() {
        let e = report().entry(0, 3, EntryKind::Gate).unwrap();
        assert_eq!(e.consistent_with_printed_premeasure, Some(false));
        assert_eq!(class(0, 3, EntryKind::Premeasure), Discrepancy::Match);
        assert_eq!(class(0, 6, EntryKind::Gate), Discrepancy::MissingTerm);
    }

    #[test]
    fn label_anomalies() {
        for (i, k) in [(0, 3), (0, 5), (0, 6), (0, 7), (1, 0), (1, 8), (3, 7), (8, 0), (8, 4), (8, 6)] {
            assert_eq!(class(i, k, EntryKind::Label), Discrepancy::LabelAnomaly, "({i},{k})");
        }
        assert!(report().entry(8, 8, EntryKind::Label).is_none());
        assert!(report().entry(2, 2, EntryKind::Label).is_none());
        let e = report().entry(8, 6, EntryKind::Label).unwrap();
        assert!(e.notes.contains("no printed state is labelled s_8^6"));
    }

    #[test]
    fn channel_ix_label_keyed_readings() {
        let r = report();
        let pm = |k| r.entry(8, k, EntryKind::Premeasure).unwrap();
        assert!(pm(0).label_keyed.is_none());
        assert_eq!(pm(4).label_keyed.as_ref().unwrap().outcome, 8);
        assert_eq!(pm(5).label_keyed.as_ref().unwrap().outcome, 4);
        assert_eq!(pm(6).label_keyed.as_ref().unwrap().outcome, 5);
    }

    #[test]
    fn renderings_are_deterministic() {
        let a = compare_tables();
        assert_eq!(&a, report());
        assert_eq!(a.to_json(), report().to_json());
        let md = a.to_markdown();
        assert!(md.contains("## Channel 8"));
        assert!(md.contains("\\|"));
        let tex = a.to_latex();
        assert!(tex.contains("\\hat{\\Lambda}"));
        assert!(tex.contains("label\\_anomaly"));
    }

    #[test]
    fn latex_labels() {
        assert_eq!(latex_label("Λ_0^8"), "\\Lambda _0^8");
        assert_eq!(latex_label("Λ̂_1^0"), "\\hat{\\Lambda}_1^0");
    }
}
