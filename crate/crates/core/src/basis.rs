//! The nine two-qutrit entangled states and the expansion of product states in them.
//!
//! The states are built once on `A2⊗B` and relabelled when they are needed on
//! `A1⊗A2`; the amplitudes are identical on either pair.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{check_index, Result};
use crate::qutrit::{Amplitude, Ket, Site};
use crate::scalar::ExtScalar;

/// Number of entangled states, channels and outcomes.
pub const BASIS_SIZE: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Singlet,
    BellLike,
    Octet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntangledState {
    pub index: usize,
    pub family: Family,
    pub ket: Ket<ExtScalar>,
}

impl EntangledState {
    /// The same state on another pair of sites (`A1⊗A2` for Alice's measurement).
    pub fn on(&self, site: Site) -> Result<Ket<ExtScalar>> {
        self.ket.relabel(site)
    }
}

/// `(pair index into A2⊗B, numerator)` terms and a common `1/√d` normalization.
fn definition(i: usize) -> (&'static [(usize, i64)], u32) {
    // pair index = 3·a2 + b
    match i {
        0 => (&[(0, 1), (4, 1), (8, 1)], 3),
        1 => (&[(3, 1), (1, 1)], 2),
        2 => (&[(3, 1), (1, -1)], 2),
        3 => (&[(4, -1), (8, 1)], 2),
        4 => (&[(6, 1), (2, 1)], 2),
        5 => (&[(6, 1), (2, -1)], 2),
        6 => (&[(7, 1), (5, 1)], 2),
        7 => (&[(7, 1), (5, -1)], 2),
        8 => (&[(0, -2), (4, 1), (8, 1)], 6),
        _ => unreachable!(),
    }
}

fn build(i: usize) -> EntangledState {
    let (terms, norm) = definition(i);
    let mut amps = vec![ExtScalar::zero(); BASIS_SIZE];
    for &(idx, n) in terms {
        amps[idx] = ExtScalar::over_sqrt(n, 1, norm);
    }
    let family = match i {
        0 => Family::Singlet,
        8 => Family::Octet,
        _ => Family::BellLike,
    };
    EntangledState {
        index: i,
        family,
        ket: Ket::new(Site::A2B, amps).expect("nine amplitudes"),
    }
}

/// All nine states, built on first use and shared.
pub fn entangled_states() -> &'static [EntangledState; BASIS_SIZE] {
    static STATES: OnceLock<[EntangledState; BASIS_SIZE]> = OnceLock::new();
    STATES.get_or_init(|| std::array::from_fn(build))
}

pub fn entangled_state(i: usize) -> Result<&'static EntangledState> {
    check_index("entangled state", i, BASIS_SIZE)?;
    Ok(&entangled_states()[i])
}

pub type Matrix9 = [[ExtScalar; BASIS_SIZE]; BASIS_SIZE];

/// `G[a][b] = ⟨Ψa|Ψb⟩`.
pub fn gram_matrix() -> Matrix9 {
    let states = entangled_states();
    std::array::from_fn(|a| {
        std::array::from_fn(|b| states[a].ket.inner(&states[b].ket).expect("equal dimensions"))
    })
}

/// `Σ_i |Ψi⟩⟨Ψi|` as a 9×9 matrix.
pub fn projector_sum() -> Matrix9 {
    let states = entangled_states();
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            states
                .iter()
                .map(|s| s.ket.amplitude(r) * s.ket.amplitude(c))
                .sum()
        })
    })
}

pub fn is_identity9(m: &Matrix9) -> bool {
    (0..BASIS_SIZE).all(|r| {
        (0..BASIS_SIZE).all(|c| if r == c { m[r][c].is_one() } else { m[r][c].is_zero() })
    })
}

/// `|a2⟩|b⟩ = Σ_i coefficients[i]·|Ψi⟩`, with zero coefficients omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionRow {
    pub a2: usize,
    pub b: usize,
    pub coefficients: BTreeMap<usize, ExtScalar>,
}

impl ExpansionRow {
    pub fn coefficient(&self, i: usize) -> ExtScalar {
        self.coefficients.get(&i).cloned().unwrap_or_default()
    }

    /// `Σ_i coefficients[i]·|Ψi⟩` on `A2⊗B`.
    pub fn reconstruct(&self) -> Ket<ExtScalar> {
        let states = entangled_states();
        self.coefficients.iter().fold(Ket::zero(Site::A2B), |acc, (&i, c)| {
            acc.checked_add(&states[i].ket.scaled(c)).expect("same site")
        })
    }

    /// Dense coefficient vector over all nine states.
    pub fn dense(&self) -> [ExtScalar; BASIS_SIZE] {
        std::array::from_fn(|i| self.coefficient(i))
    }
}

/// Expansion of the product state `|a2⟩|b⟩` by projection onto each `|Ψi⟩`.
pub fn expand_product(a2: usize, b: usize) -> Result<ExpansionRow> {
    check_index("A2 basis", a2, 3)?;
    check_index("B basis", b, 3)?;
    let coefficients = entangled_states()
        .iter()
        .map(|s| (s.index, s.ket.amplitude(3 * a2 + b).clone()))
        .filter(|(_, c)| !Amplitude::is_zero(c))
        .collect();
    Ok(ExpansionRow { a2, b, coefficients })
}
