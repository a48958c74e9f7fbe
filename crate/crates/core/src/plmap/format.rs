//! The JSON map file format.
//!
//! ```json
//! { "n": 3, "domain": "circle",
//!   "vertices": [["0","0"], ["1/3","0"], ...],
//!   "arcs": [{"from": 0, "to": 1, "weight": 2, "lift": 1}, ...] }
//! ```
//!
//! `weight` and `lift` are optional. `name`, `comment` and `expect`
//! (`"valid"` or `"invalid"`) are optional annotations carried by fixtures.

use serde::{Deserialize, Serialize};

use super::{Arc, DomainKind, PLMultimap, Vertex};
use crate::error::{ParseError, StructuralError};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcDoc {
    pub from: usize,
    pub to: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<String>,
    pub n: usize,
    pub domain: DomainKind,
    pub vertices: Vec<(Rational, Rational)>,
    pub arcs: Vec<ArcDoc>,
}

impl MapDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError::MapDocument(e.to_string()))
    }

    pub fn to_map(&self) -> Result<PLMultimap, StructuralError> {
        let vertices = self
            .vertices
            .iter()
            .map(|(x, y)| Vertex::new(x.clone(), y.clone()))
            .collect();
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc {
                from: a.from,
                to: a.to,
                weight: a.weight,
                lift: a.lift.unwrap_or(0),
            })
            .collect();
        PLMultimap::new(self.n, self.domain, vertices, arcs)
    }

    pub fn from_map(f: &PLMultimap) -> Self {
        MapDocument {
            name: None,
            comment: None,
            expect: None,
            n: f.n(),
            domain: f.domain(),
            vertices: f
                .vertices()
                .iter()
                .map(|v| (v.x.clone(), v.y.value().clone()))
                .collect(),
            arcs: f
                .arcs()
                .iter()
                .map(|a| ArcDoc {
                    from: a.from,
                    to: a.to,
                    weight: a.weight,
                    lift: (a.lift != 0).then_some(a.lift),
                })
                .collect(),
        }
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn to_json_pretty(&self) -> String {
        let value = serde_json::to_value(self).expect("map documents always serialize");
        serde_json::to_string_pretty(&value).expect("values always serialize")
    }
}

impl PLMultimap {
    pub fn from_json(text: &str) -> crate::error::Result<Self> {
        Ok(MapDocument::parse(text)?.to_map()?)
    }

    pub fn to_json(&self) -> String {
        MapDocument::from_map(self).to_json_pretty()
    }
}
