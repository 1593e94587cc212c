//! The self-describing analysis record emitted by `analyze` and stored
//! by `survey`.

use serde::{Deserialize, Serialize};

/// Directed diameter as reported: a value, provably not totally
/// reachable, or skipped because the graph is over the exact-computation
/// cap. Never a sentinel integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterReport {
    Value(u32),
    Unreachable,
    NotComputed,
}

impl From<engel::DirectedDiameter> for DiameterReport {
    fn from(d: engel::DirectedDiameter) -> DiameterReport {
        match d {
            engel::DirectedDiameter::Value(v) => DiameterReport::Value(v),
            engel::DirectedDiameter::Unreachable => DiameterReport::Unreachable,
            engel::DirectedDiameter::NotComputed => DiameterReport::NotComputed,
        }
    }
}

/// One analysis outcome. Re-runnable from its own fields: expression,
/// mode and flags fully determine the computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub expr: String,
    pub group_order: u64,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    pub vertex_count: u64,
    pub strongly_connected: bool,
    pub weakly_connected: bool,
    pub scc_count: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub undirected_diameter: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub directed_diameter: Option<DiameterReport>,
    pub wall_time_ms: u64,
    pub tool_version: String,
    pub equivariance: bool,
    pub sylow_seed: u64,
}

pub fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ResultRecord {
        ResultRecord {
            expr: "S(4)".into(),
            group_order: 24,
            mode: "gamma".into(),
            n: None,
            vertex_count: 23,
            strongly_connected: true,
            weakly_connected: true,
            scc_count: 1,
            undirected_diameter: Some(2),
            directed_diameter: Some(DiameterReport::Value(3)),
            wall_time_ms: 5,
            tool_version: tool_version(),
            equivariance: true,
            sylow_seed: 7,
        }
    }

    #[test]
    fn serialization_round_trips() {
        let rec = sample();
        let json = serde_json::to_string(&rec).unwrap();
        let back: ResultRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
    }

    #[test]
    fn unreachable_diameter_is_a_tagged_variant_not_a_number() {
        let mut rec = sample();
        rec.directed_diameter = Some(DiameterReport::Unreachable);
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains("unreachable"));
        let back: ResultRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.directed_diameter, Some(DiameterReport::Unreachable));
    }
}
