//! The exact invariant suite run by `verify`.

use serde::Serialize;

use crate::analysis::profile_gate;
use crate::basis::{expand_product, gram_matrix, is_identity9, projector_sum, BASIS_SIZE};
use crate::engine::{delta_qt, derive_all};
use crate::qutrit::{Ket, Site};
use crate::tables::{paper_expansions, PaperValue};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, failures: Vec<String>, total: usize) -> Check {
    Check {
        name,
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{total} of {total} hold")
        } else {
            format!("{} of {total} fail: {}", failures.len(), failures.join(", "))
        },
    }
}

pub fn run_checks() -> Vec<Check> {
    let decompositions = derive_all();
    let mut out = Vec::new();

    out.push(check(
        "orthonormality",
        if is_identity9(&gram_matrix()) { vec![] } else { vec!["gram matrix".to_string()] },
        1,
    ));
    out.push(check(
        "projector_completeness",
        if is_identity9(&projector_sum()) { vec![] } else { vec!["projector sum".to_string()] },
        1,
    ));

    let mut failures = Vec::new();
    for a2 in 0..3 {
        for b in 0..3 {
            let row = expand_product(a2, b).expect("in range");
            if row.reconstruct() != Ket::basis(Site::A2B, 3 * a2 + b).expect("in range") {
                failures.push(format!("|{a2}{b}⟩"));
            }
        }
    }
    out.push(check("expansion_reconstructs_products", failures, 9));

    let mut failures = Vec::new();
    for e in paper_expansions() {
        let PaperValue::ExpansionRow(printed) = &e.value else { continue };
        if expand_product(printed.a2, printed.b).expect("in range").dense() != printed.dense() {
            failures.push(e.location.to_string());
        }
    }
    out.push(check("printed_expansions_agree", failures, 9));

    let failures = decompositions
        .iter()
        .filter(|d| !d.reconstructs_composite().unwrap_or(false))
        .map(|d| format!("channel {}", d.channel))
        .collect();
    out.push(check("decomposition_reconstructs_composite", failures, BASIS_SIZE));

    let mut failures = Vec::new();
    for d in &decompositions {
        for row in &d.rows {
            let zero = delta_qt(d.channel, row.outcome, &row.gate).is_ok_and(|r| r.is_zero());
            if !zero {
                failures.push(format!("({},{})", d.channel, row.outcome));
            }
        }
    }
    out.push(check("gate_residuals_zero", failures, BASIS_SIZE * BASIS_SIZE));

    let failures = decompositions
        .iter()
        .filter(|d| !d.completeness_sum().is_identity())
        .map(|d| format!("channel {}", d.channel))
        .collect();
    out.push(check("gate_completeness", failures, BASIS_SIZE));

    let failures = decompositions
        .iter()
        .flat_map(|d| d.gates())
        .filter(|g| profile_gate(g).is_unitary())
        .map(|g| format!("({},{})", g.channel.unwrap_or(0), g.outcome.unwrap_or(0)))
        .collect();
    out.push(check("gates_non_unitary", failures, BASIS_SIZE * BASIS_SIZE));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        let checks = run_checks();
        assert_eq!(checks.len(), 8);
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn failure_detail() {
        let c = check("x", vec!["a".to_string()], 3);
        assert!(!c.passed);
        assert_eq!(c.detail, "1 of 3 fail: a");
    }
}
