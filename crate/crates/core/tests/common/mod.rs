#![allow(dead_code)]

use std::path::PathBuf;

use serde_json::Value;

/// The nine entangled states as real 3×3 arrays `psi[a][b]`, written out
/// independently of the library.
pub fn psi_f64(i: usize) -> [[f64; 3]; 3] {
    let s2 = 1.0 / 2f64.sqrt();
    let s3 = 1.0 / 3f64.sqrt();
    let s6 = 1.0 / 6f64.sqrt();
    let mut m = [[0.0; 3]; 3];
    match i {
        0 => (m[0][0], m[1][1], m[2][2]) = (s3, s3, s3),
        1 => (m[1][0], m[0][1]) = (s2, s2),
        2 => (m[1][0], m[0][1]) = (s2, -s2),
        3 => (m[1][1], m[2][2]) = (-s2, s2),
        4 => (m[2][0], m[0][2]) = (s2, s2),
        5 => (m[2][0], m[0][2]) = (s2, -s2),
        6 => (m[2][1], m[1][2]) = (s2, s2),
        7 => (m[2][1], m[1][2]) = (s2, -s2),
        8 => (m[0][0], m[1][1], m[2][2]) = (-2.0 * s6, s6, s6),
        _ => panic!("no state {i}"),
    }
    m
}

/// `Λ_i^k[b][j] = Σ_a Ψk[j][a]·Ψi[a][b]`: the coefficient of `c_j` on `|b⟩`
/// after projecting `|φ⟩ ⊗ |Ψi⟩` onto `|Ψk⟩` on the first two qutrits.
pub fn gate_f64(channel: usize, outcome: usize) -> [[f64; 3]; 3] {
    let pi = psi_f64(channel);
    let pk = psi_f64(outcome);
    std::array::from_fn(|b| std::array::from_fn(|j| (0..3).map(|a| pk[j][a] * pi[a][b]).sum()))
}

pub fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas")
}

fn load(name: &str) -> Value {
    let text = std::fs::read_to_string(schema_dir().join(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

/// Validates `instance` against a shipped schema, resolving references to the
/// other shipped schemas. Returns the list of error messages.
pub fn validate(schema: &str, instance: &Value) -> Vec<String> {
    let mut options = jsonschema::options();
    for other in ["gate-table.schema.json", "errata.schema.json", "batch-summary.schema.json", "gate.schema.json"] {
        let contents = load(other);
        let id = contents["$id"].as_str().unwrap().to_string();
        options = options.with_resource(id, jsonschema::Resource::from_contents(contents).unwrap());
    }
    let validator = options.build(&load(schema)).unwrap();
    validator.iter_errors(instance).map(|e| format!("{} at {}", e, e.instance_path)).collect()
}

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_qutrit-teleport")
}

pub fn run_bin(args: &[&str]) -> std::process::Output {
    std::process::Command::new(bin()).args(args).output().unwrap()
}
