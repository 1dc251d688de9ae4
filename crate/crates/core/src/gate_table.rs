//! JSON interchange format for a full table of 81 gates.

use serde::{Deserialize, Serialize};

use crate::basis::BASIS_SIZE;
use crate::engine::oracle_gates;
use crate::error::{Error, Result};
use crate::qutrit::{Operator3, Provenance};
use crate::tables::paper_gate;

pub const FORMAT: &str = "qutrit-gate-table";
pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateTable {
    pub format: String,
    pub version: u32,
    pub source: Provenance,
    pub gates: Vec<Operator3>,
}

impl GateTable {
    pub fn oracle() -> Self {
        Self::with_gates(Provenance::Oracle, oracle_gates())
    }

    pub fn paper() -> Self {
        let gates = (0..BASIS_SIZE * BASIS_SIZE)
            .map(|n| {
                let e = paper_gate(n / BASIS_SIZE, n % BASIS_SIZE).expect("transcribed gate");
                e.gate().expect("gate entry").clone()
            })
            .collect();
        Self::with_gates(Provenance::Paper, gates)
    }

    fn with_gates(source: Provenance, gates: Vec<Operator3>) -> Self {
        GateTable { format: FORMAT.to_string(), version: VERSION, source, gates }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    /// Parses and validates a table: 81 gates, each `(channel, outcome)` pair
    /// exactly once, all tagged with the table's source.
    pub fn from_json(text: &str) -> Result<Self> {
        let t: GateTable = serde_json::from_str(text)?;
        if t.format != FORMAT {
            return Err(Error::GateTable(format!("format is {:?}, expected {FORMAT:?}", t.format)));
        }
        if t.version != VERSION {
            return Err(Error::GateTable(format!("unsupported version {}", t.version)));
        }
        if t.gates.len() != BASIS_SIZE * BASIS_SIZE {
            return Err(Error::GateTable(format!("{} gates, expected 81", t.gates.len())));
        }
        let mut seen = [[false; BASIS_SIZE]; BASIS_SIZE];
        for g in &t.gates {
            let (Some(i), Some(k)) = (g.channel, g.outcome) else {
                return Err(Error::GateTable("gate without channel or outcome".to_string()));
            };
            if i >= BASIS_SIZE || k >= BASIS_SIZE {
                return Err(Error::GateTable(format!("gate ({i},{k}) out of range")));
            }
            if std::mem::replace(&mut seen[i][k], true) {
                return Err(Error::GateTable(format!("gate ({i},{k}) appears twice")));
            }
            if g.provenance != t.source {
                return Err(Error::GateTable(format!(
                    "gate ({i},{k}) has provenance {}, table source is {}",
                    g.provenance, t.source
                )));
            }
        }
        Ok(t)
    }

    pub fn gate(&self, channel: usize, outcome: usize) -> Option<&Operator3> {
        self.gates
            .iter()
            .find(|g| g.channel == Some(channel) && g.outcome == Some(outcome))
    }

    /// Whether every gate equals the derived gate for its slot.
    pub fn matches_oracle(&self) -> bool {
        let oracle = GateTable::oracle();
        self.gates.iter().all(|g| {
            let (i, k) = (g.channel.unwrap_or(0), g.outcome.unwrap_or(0));
            oracle.gate(i, k).is_some_and(|o| o.same_matrix(g))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let t = GateTable::oracle();
        let back = GateTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert!(back.matches_oracle());
        assert!(!GateTable::paper().matches_oracle());
    }

    #[test]
    fn rejects_malformed_tables() {
        let mut t = GateTable::oracle();
        t.gates.pop();
        assert!(GateTable::from_json(&t.to_json()).is_err());

        let mut t = GateTable::oracle();
        t.gates[1].outcome = Some(0);
        assert!(GateTable::from_json(&t.to_json()).is_err());

        let mut t = GateTable::oracle();
        t.format = "other".to_string();
        assert!(GateTable::from_json(&t.to_json()).is_err());

        let mut t = GateTable::oracle();
        t.gates[5].provenance = Provenance::Paper;
        assert!(GateTable::from_json(&t.to_json()).is_err());

        assert!(GateTable::from_json("{\"format\": 1}").is_err());
    }
}
