mod common;

use std::time::{Duration, Instant};

use num_complex::Complex64;
use qutrit_teleport::analysis::{analyze, completeness, fidelity_after_recovery, outcome_probability, FidelityOutcome};
use qutrit_teleport::basis::{expand_product, gram_matrix, is_identity9, BASIS_SIZE};
use qutrit_teleport::engine::{delta_qt, derive_all, oracle_gate};
use qutrit_teleport::gate_table::GateTable;
use qutrit_teleport::qutrit::{Ket, Site};
use qutrit_teleport::sim::{haar_state_for_seed, Simulator, StateMode};
use qutrit_teleport::tables::{compare_tables, paper_expansion, Discrepancy, EntryKind};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg.into()) }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))
}

fn orthonormality() -> Outcome {
    let start = Instant::now();
    let gram = gram_matrix();
    let elapsed = start.elapsed();
    ensure(is_identity9(&gram), "gram matrix is not the identity")?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("9x9 gram matrix is exactly I ({elapsed:?})"))
}

fn basis_inversion() -> Outcome {
    for a2 in 0..3 {
        for b in 0..3 {
            let row = expand_product(a2, b).map_err(|e| e.to_string())?;
            let printed = paper_expansion(a2, b).map_err(|e| e.to_string())?;
            let printed = printed.expansion().ok_or("missing printed expansion")?;
            ensure(row.dense() == printed.dense(), format!("|{a2}{b}⟩ differs from the printed expansion"))?;
            let product = Ket::basis(Site::A2B, 3 * a2 + b).map_err(|e| e.to_string())?;
            ensure(row.reconstruct() == product, format!("|{a2}{b}⟩ does not reconstruct"))?;
        }
    }
    Ok("9 expansions match the printed identities and reconstruct exactly".to_string())
}

fn gate_derivation() -> Outcome {
    let mut zero = 0;
    for d in derive_all() {
        for row in &d.rows {
            let residual = delta_qt(d.channel, row.outcome, &row.gate).map_err(|e| e.to_string())?;
            ensure(residual.is_zero(), format!("residual ({},{}) is nonzero", d.channel, row.outcome))?;
            zero += 1;
        }
    }
    ensure(zero == 81, format!("{zero} residuals checked"))?;
    Ok("81 of 81 residuals are the zero ket".to_string())
}

fn table_agreement() -> Outcome {
    let start = Instant::now();
    let report = compare_tables();
    let elapsed = start.elapsed();
    let matches = |i: usize, k: usize, kind: EntryKind| {
        report.entry(i, k, kind).is_some_and(|e| e.discrepancy == Discrepancy::Match)
    };
    for k in [0, 1, 2, 4, 5, 7] {
        ensure(matches(0, k, EntryKind::Gate), format!("gate (0,{k}) does not match"))?;
    }
    for k in 0..BASIS_SIZE {
        ensure(matches(1, k, EntryKind::Premeasure), format!("state (1,{k}) does not match"))?;
        ensure(matches(1, k, EntryKind::Gate), format!("gate (1,{k}) does not match"))?;
    }
    let expected_entries = 9 + 2 * 81;
    let table_entries = report.entries.iter().filter(|e| e.kind != EntryKind::Label).count();
    ensure(table_entries == expected_entries, format!("{table_entries} table entries, expected {expected_entries}"))?;
    ensure(report == compare_tables(), "report is not deterministic")?;
    ensure(report.to_json() == compare_tables().to_json(), "report JSON is not deterministic")?;
    ensure(!report.is_clean(), "report is empty")?;
    ensure(!matches(0, 3, EntryKind::Gate), "gate (0,3) not flagged")?;
    let missing8 = report
        .entries
        .iter()
        .filter(|e| e.channel == 8 && e.kind == EntryKind::Premeasure && e.discrepancy == Discrepancy::MissingTerm)
        .count();
    ensure(
        report.entry(8, 8, EntryKind::Premeasure).is_some_and(|e| e.discrepancy == Discrepancy::MissingTerm),
        "state (8,8) not flagged missing_term",
    )?;
    within(elapsed, Duration::from_secs(1))?;
    let summary: Vec<String> = report.summary.iter().map(|(d, n)| format!("{}={n}", d.as_str())).collect();
    Ok(format!(
        "required entries match; {} channel-8 missing_term states; {} ({elapsed:?})",
        missing8,
        summary.join(" ")
    ))
}

fn completeness_all() -> Outcome {
    for i in 0..BASIS_SIZE {
        let c = completeness(i).map_err(|e| e.to_string())?;
        ensure(c.is_identity, format!("channel {i} sum is not the identity"))?;
    }
    Ok("sum of gate grams is exactly I for all 9 channels".to_string())
}

fn non_unitarity() -> Outcome {
    let channels: Vec<usize> = (0..BASIS_SIZE).collect();
    let report = analyze(&channels).map_err(|e| e.to_string())?;
    ensure(report.profiles.len() == 81, "expected 81 profiles")?;
    for p in &report.profiles {
        ensure(!p.is_unitary(), format!("gate ({:?},{:?}) is unitary", p.channel, p.outcome))?;
    }
    ensure(report.all_non_unitary, "report claims a unitary gate")?;
    let counts: Vec<String> = report
        .class_counts
        .iter()
        .map(|c| format!("ch{}={}/{}/{}", c.channel, c.proportional_to_unitary, c.invertible_not_prop_unitary, c.singular))
        .collect();
    Ok(format!("no gate is unitary; prop-unitary/invertible/singular: {}", counts.join(" ")))
}

fn simulation_soundness() -> Outcome {
    let start = Instant::now();
    let n = 10_000usize;
    let phi = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)];
    let batch = Simulator::oracle()
        .run_batch(0, n, 0, StateMode::Fixed(phi))
        .map_err(|e| e.to_string())?;
    let p = 1.0 / 9.0;
    let sigma = (n as f64 * p * (1.0 - p)).sqrt();
    let count = batch.summary.outcome_counts[0] as f64;
    let deviation = (count - n as f64 * p).abs() / sigma;
    ensure(deviation <= 3.0, format!("outcome 0 count {count} is {deviation:.2} sigma from n/9"))?;
    for t in &batch.trials {
        if let FidelityOutcome::Recovered { fidelity } = t.fidelity {
            ensure((fidelity - 1.0).abs() <= 1e-12, format!("trial fidelity {fidelity}"))?;
        }
    }

    let mut worst_sum = 0.0f64;
    let mut worst_fidelity = 0.0f64;
    for seed in 0..100u64 {
        let state = haar_state_for_seed(seed);
        for i in 0..BASIS_SIZE {
            let mut sum = 0.0;
            for k in 0..BASIS_SIZE {
                sum += outcome_probability(i, k, &state).map_err(|e| e.to_string())?;
                if let Some(f) = fidelity_after_recovery(i, k, &state).map_err(|e| e.to_string())?.recovered() {
                    worst_fidelity = worst_fidelity.max((f - 1.0).abs());
                }
            }
            worst_sum = worst_sum.max((sum - 1.0).abs());
        }
    }
    ensure(worst_sum <= 1e-12, format!("probability sum off by {worst_sum:e}"))?;
    ensure(worst_fidelity <= 1e-12, format!("recovered fidelity off by {worst_fidelity:e}"))?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!(
        "outcome 0 at {deviation:.2} sigma; max |Σp-1| = {worst_sum:.1e}; max |F-1| = {worst_fidelity:.1e} ({elapsed:?})"
    ))
}

fn reproducibility() -> Outcome {
    let args = ["simulate", "--channel", "3", "--trials", "2000", "--seed", "12345", "--haar", "--format", "json", "--trace"];
    let first = common::run_bin(&args);
    let second = common::run_bin(&args);
    ensure(first.status.success(), String::from_utf8_lossy(&first.stderr).to_string())?;
    ensure(first.stdout == second.stdout, "simulate output differs between runs")?;

    for table in [GateTable::oracle(), GateTable::paper()] {
        let back = GateTable::from_json(&table.to_json()).map_err(|e| e.to_string())?;
        ensure(back == table, "table does not round-trip")?;
        for g in &table.gates {
            let (i, k) = (g.channel.unwrap_or(0), g.outcome.unwrap_or(0));
            let restored = back.gate(i, k).ok_or("gate missing after round trip")?;
            ensure(restored.entries == g.entries, format!("gate ({i},{k}) entries changed"))?;
        }
    }
    let oracle = GateTable::from_json(&GateTable::oracle().to_json()).map_err(|e| e.to_string())?;
    for g in &oracle.gates {
        let derived = oracle_gate(g.channel.unwrap_or(0), g.outcome.unwrap_or(0)).map_err(|e| e.to_string())?;
        ensure(derived.entries == g.entries, "imported gate differs from derived gate")?;
    }

    let dir = std::env::temp_dir().join(format!("qutrit-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = dir.join("gates.json");
    let p = path.to_str().ok_or("non-utf8 temp path")?;
    let export = common::run_bin(&["export", "--out", p]);
    ensure(export.status.success(), "export failed")?;
    let exported = std::fs::read(&path).map_err(|e| e.to_string())?;
    let import = common::run_bin(&["import", p, "--format", "json"]);
    let _ = std::fs::remove_dir_all(&dir);
    ensure(import.status.success(), "import failed")?;
    ensure(import.stdout == exported, "import output differs from the exported file")?;
    Ok(format!("simulate identical over {} bytes; oracle and printed tables round-trip exactly", first.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("orthonormality", orthonormality),
        ("basis inversion", basis_inversion),
        ("gate derivation", gate_derivation),
        ("table agreement", table_agreement),
        ("completeness", completeness_all),
        ("non-unitarity", non_unitarity),
        ("simulation soundness", simulation_soundness),
        ("reproducibility", reproducibility),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{elapsed:.2?}]", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail} [{elapsed:.2?}]", n + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
