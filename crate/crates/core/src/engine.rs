//! Composition and decomposition of the three-qutrit state for each channel,
//! and the measurement gates read off from the decomposition.
//!
//! For channel `i` the composite `|ξi⟩ = |φ⟩_{A1} ⊗ |Ψi⟩_{A2B}` is projected onto
//! each `|Ψk⟩_{A1A2}`; the remainder on `B` is the pre-measurement state
//! `|s_i^k⟩`, and the gate `Λ_i^k` is the unique matrix with `Λ_i^k|φ⟩ = |s_i^k⟩`.
//! Everything is exact and symbolic in `(c0, c1, c2)`.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{entangled_state, entangled_states, BASIS_SIZE};
use crate::error::{check_index, Result};
use crate::qutrit::{extract_gate, partial_inner, tensor, Ket, LinearForm, Operator3, Provenance, Site};

/// `c0|0⟩ + c1|1⟩ + c2|2⟩` on Alice's input site.
pub fn symbolic_phi(site: Site) -> Ket<LinearForm> {
    Ket::symbolic_input(site)
}

/// `|ξi⟩ = |φ⟩_{A1} ⊗ |Ψi⟩_{A2B}`.
pub fn compose(channel: usize) -> Result<Ket<LinearForm>> {
    let psi = entangled_state(channel)?;
    tensor(&symbolic_phi(Site::A1), &psi.ket)
}

fn premeasure_from(composite: &Ket<LinearForm>, outcome: usize) -> Result<Ket<LinearForm>> {
    let bra = entangled_state(outcome)?.on(Site::A1A2)?;
    partial_inner(&bra, composite)
}

/// Bob's unnormalized state conditioned on Alice observing `|Ψk⟩_{A1A2}`.
pub fn premeasure(channel: usize, outcome: usize) -> Result<Ket<LinearForm>> {
    check_index("outcome", outcome, BASIS_SIZE)?;
    premeasure_from(&compose(channel)?, outcome)
}

fn gate_from(premeasure: &Ket<LinearForm>, channel: usize, outcome: usize) -> Result<Operator3> {
    Ok(extract_gate(premeasure)?.tagged(Provenance::Oracle, Some(channel), Some(outcome)))
}

/// The measurement gate `Λ_i^k`.
pub fn derive_gate(channel: usize, outcome: usize) -> Result<Operator3> {
    gate_from(&premeasure(channel, outcome)?, channel, outcome)
}

/// `|s_i^k⟩ − Λ|φ⟩` for any candidate gate `Λ`; zero exactly when `Λ` is correct.
pub fn delta_qt(channel: usize, outcome: usize, gate: &Operator3) -> Result<Ket<LinearForm>> {
    let s = premeasure(channel, outcome)?;
    let applied = gate.apply(&symbolic_phi(Site::B))?;
    s.checked_sub(&applied)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutcomeRow {
    pub outcome: usize,
    pub premeasure: Ket<LinearForm>,
    pub gate: Operator3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChannelDecomposition {
    pub channel: usize,
    pub composite: Ket<LinearForm>,
    pub rows: Vec<OutcomeRow>,
}

impl ChannelDecomposition {
    pub fn derive(channel: usize) -> Result<Self> {
        let composite = compose(channel)?;
        let rows = (0..BASIS_SIZE)
            .map(|k| {
                let premeasure = premeasure_from(&composite, k)?;
                let gate = gate_from(&premeasure, channel, k)?;
                Ok(OutcomeRow { outcome: k, premeasure, gate })
            })
            .collect::<Result<_>>()?;
        Ok(ChannelDecomposition { channel, composite, rows })
    }

    /// `Σ_k |Ψk⟩_{A1A2} ⊗ |s_i^k⟩_B`.
    pub fn reconstruct(&self) -> Result<Ket<LinearForm>> {
        let states = entangled_states();
        self.rows.iter().try_fold(Ket::zero(Site::A1A2B), |acc, row| {
            let bra = states[row.outcome].on(Site::A1A2)?;
            acc.checked_add(&tensor(&bra, &row.premeasure)?)
        })
    }

    pub fn reconstructs_composite(&self) -> Result<bool> {
        Ok(self.reconstruct()? == self.composite)
    }

    /// Every row satisfies `Λ|φ⟩ = |s⟩` with zero residual.
    pub fn gates_consistent(&self) -> Result<bool> {
        let phi = symbolic_phi(Site::B);
        for row in &self.rows {
            if row.gate.apply(&phi)? != row.premeasure {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Σ_k Λ†Λ`.
    pub fn completeness_sum(&self) -> Operator3 {
        self.rows
            .iter()
            .fold(Operator3::zero(), |acc, row| acc.mat_add(&row.gate.gram()))
    }

    pub fn gates(&self) -> impl Iterator<Item = &Operator3> {
        self.rows.iter().map(|r| &r.gate)
    }
}

/// All nine channels, in channel order. Channels are derived in parallel; the
/// result does not depend on scheduling.
pub fn derive_all() -> Vec<ChannelDecomposition> {
    (0..BASIS_SIZE)
        .into_par_iter()
        .map(|i| ChannelDecomposition::derive(i).expect("channel index in range"))
        .collect()
}

/// The 81 oracle gates in `(channel, outcome)` order.
pub fn oracle_gates() -> Vec<Operator3> {
    derive_all().into_iter().flat_map(|d| d.rows.into_iter().map(|r| r.gate)).collect()
}

/// The oracle gate `Λ_i^k`, from a table derived once and shared.
pub fn oracle_gate(channel: usize, outcome: usize) -> Result<&'static Operator3> {
    static TABLE: OnceLock<Vec<Operator3>> = OnceLock::new();
    check_index("channel", channel, BASIS_SIZE)?;
    check_index("outcome", outcome, BASIS_SIZE)?;
    Ok(&TABLE.get_or_init(oracle_gates)[BASIS_SIZE * channel + outcome])
}
