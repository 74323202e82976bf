//! JSON wire formats.
//!
//! Readers accept any vertex and edge order and canonicalize; writers always
//! emit canonical form, so serializing a parsed value is stable byte for byte.
//!
//! | value           | shape                                               |
//! |-----------------|-----------------------------------------------------|
//! | hypertree       | `{"n":3,"edges":[[0,1],[1,2,3]]}`                   |
//! | hypertree code  | `{"n":3,"partition":[[1],[2,3]],"word":[1]}`        |
//! | bipartite tree  | `{"a":1,"b":1,"edges":[[0,0],[1,0],[1,1]]}`         |
//! | bipartite code  | `{"a":1,"b":1,"w":[0],"wprime":[1]}`                |
//! | probability     | `{"num":"1","den":"4"}`                             |

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bipartite::{BipartiteCode, BipartiteTree};
use crate::codec::HypertreeCode;
use crate::counting::Probability;
use crate::error::Result;
use crate::model::{Hypergraph, Hypertree};
use crate::oracle::{EnumerationReport, Family};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl HypergraphJson {
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(self.n, self.edges.clone())
    }

    /// Structural parse followed by the hypertree axioms.
    pub fn to_hypertree(&self) -> Result<Hypertree> {
        Hypertree::new(self.n, self.edges.clone())
    }
}

impl From<&Hypergraph> for HypergraphJson {
    fn from(g: &Hypergraph) -> Self {
        HypergraphJson {
            n: g.n(),
            edges: g.edge_lists(),
        }
    }
}

impl From<&Hypertree> for HypergraphJson {
    fn from(t: &Hypertree) -> Self {
        t.graph().into()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypertreeCodeJson {
    pub n: usize,
    pub partition: Vec<Vec<usize>>,
    pub word: Vec<usize>,
}

impl HypertreeCodeJson {
    pub fn to_code(&self) -> Result<HypertreeCode> {
        HypertreeCode::from_parts(self.n, self.partition.clone(), self.word.clone())
    }
}

impl From<&HypertreeCode> for HypertreeCodeJson {
    fn from(c: &HypertreeCode) -> Self {
        HypertreeCodeJson {
            n: c.n(),
            partition: c.partition().blocks().to_vec(),
            word: c.word().letters().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteTreeJson {
    pub a: usize,
    pub b: usize,
    pub edges: Vec<[usize; 2]>,
}

impl BipartiteTreeJson {
    pub fn to_tree(&self) -> Result<BipartiteTree> {
        BipartiteTree::new(
            self.a,
            self.b,
            self.edges.iter().map(|&[i, j]| (i, j)).collect(),
        )
    }
}

impl From<&BipartiteTree> for BipartiteTreeJson {
    fn from(t: &BipartiteTree) -> Self {
        BipartiteTreeJson {
            a: t.a(),
            b: t.b(),
            edges: t.edges().iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteCodeJson {
    pub a: usize,
    pub b: usize,
    pub w: Vec<usize>,
    pub wprime: Vec<usize>,
}

impl BipartiteCodeJson {
    pub fn to_code(&self) -> Result<BipartiteCode> {
        BipartiteCode::new(self.a, self.b, self.w.clone(), self.wprime.clone())
    }
}

impl From<&BipartiteCode> for BipartiteCodeJson {
    fn from(c: &BipartiteCode) -> Self {
        BipartiteCodeJson {
            a: c.a(),
            b: c.b(),
            w: c.w().to_vec(),
            wprime: c.wprime().to_vec(),
        }
    }
}

/// Numerator and denominator as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbabilityJson {
    pub num: String,
    pub den: String,
}

impl From<&Probability> for ProbabilityJson {
    fn from(p: &Probability) -> Self {
        ProbabilityJson {
            num: p.numerator().to_string(),
            den: p.denominator().to_string(),
        }
    }
}

/// Census as JSON; counts are decimal strings.
pub fn report_to_json(report: &EnumerationReport) -> Value {
    let (family, params, keys) = match report.family {
        Family::Hypertrees { n, k } => ("hypertrees", json!({"n": n, "k": k}), ["lambda", "mu"]),
        Family::BipartiteTrees { a, b } => {
            ("bipartite", json!({"a": a, "b": b}), ["alpha", "beta"])
        }
    };
    let profiles: Vec<Value> = report
        .profiles
        .iter()
        .map(|((x, y), c)| json!({keys[0]: x, keys[1]: y, "count": c.to_string()}))
        .collect();
    json!({
        "family": family,
        "params": params,
        "total": report.total.to_string(),
        "profiles": profiles,
        "elapsed_ms": report.elapsed.as_secs_f64() * 1e3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypertree_round_trip_is_canonical() {
        let parsed: HypergraphJson =
            serde_json::from_str(r#"{"n":3,"edges":[[3,2,1],[1,0]]}"#).unwrap();
        let t = parsed.to_hypertree().unwrap();
        let out = serde_json::to_string(&HypergraphJson::from(&t)).unwrap();
        assert_eq!(out, r#"{"n":3,"edges":[[0,1],[1,2,3]]}"#);
    }

    #[test]
    fn code_formats() {
        let c: HypertreeCodeJson =
            serde_json::from_str(r#"{"n":3,"partition":[[3,2],[1]],"word":[1]}"#).unwrap();
        let code = c.to_code().unwrap();
        assert_eq!(
            serde_json::to_string(&HypertreeCodeJson::from(&code)).unwrap(),
            r#"{"n":3,"partition":[[1],[2,3]],"word":[1]}"#
        );
        let b: BipartiteCodeJson =
            serde_json::from_str(r#"{"a":1,"b":1,"w":[0],"wprime":[1]}"#).unwrap();
        assert!(b.to_code().is_ok());
    }

    #[test]
    fn bipartite_tree_format() {
        let t: BipartiteTreeJson =
            serde_json::from_str(r#"{"a":1,"b":1,"edges":[[1,1],[0,0],[1,0]]}"#).unwrap();
        let tree = t.to_tree().unwrap();
        assert_eq!(
            serde_json::to_string(&BipartiteTreeJson::from(&tree)).unwrap(),
            r#"{"a":1,"b":1,"edges":[[0,0],[1,0],[1,1]]}"#
        );
    }

    #[test]
    fn probability_format() {
        let p = Probability::new(3u32.into(), 12u32.into());
        assert_eq!(
            serde_json::to_string(&ProbabilityJson::from(&p)).unwrap(),
            r#"{"num":"1","den":"4"}"#
        );
    }
}
