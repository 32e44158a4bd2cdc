//! Deterministic JSON and DOT serialization of explored crystal graphs.
//!
//! Weights and paths are written as strings in their canonical text forms so
//! that arbitrarily large coordinates survive the round trip exactly.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanMatrix, SimpleIndex, Weight};
use crate::crystal::CrystalElem;
use crate::error::{Error, Result};
use crate::explorer::{CrystalGraph, Edge};
use crate::path::LsPath;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CartanDoc {
    a1: u32,
    a2: u32,
}

#[derive(Serialize, Deserialize)]
struct NodeDoc {
    id: usize,
    path: String,
    wt: String,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    src: usize,
    i: u32,
    dst: usize,
}

#[derive(Serialize, Deserialize)]
struct TallyDoc {
    wt: String,
    count: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    cartan: CartanDoc,
    shape: String,
    depth: u32,
    seed: String,
    nodes: Vec<NodeDoc>,
    edges: Vec<EdgeDoc>,
    tallies: Vec<TallyDoc>,
}

pub fn to_json<T: Scalar>(g: &CrystalGraph<T>) -> String {
    let doc = GraphDoc {
        cartan: CartanDoc {
            a1: g.cartan.a1(),
            a2: g.cartan.a2(),
        },
        shape: g.shape.to_string(),
        depth: g.depth,
        seed: g.seed.to_text(),
        nodes: g
            .nodes
            .iter()
            .enumerate()
            .map(|(id, p)| NodeDoc {
                id,
                path: p.to_text(),
                wt: p.wt().to_string(),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|e| EdgeDoc {
                src: e.src,
                i: e.i.number(),
                dst: e.dst,
            })
            .collect(),
        tallies: g
            .weight_tally
            .iter()
            .map(|(w, &count)| TallyDoc {
                wt: w.to_string(),
                count,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph documents always serialize");
    s.push('\n');
    s
}

/// Reads a graph written by [`to_json`], re-checking that every stored weight
/// and tally agrees with the stored paths.
pub fn from_json<T: Scalar>(text: &str) -> Result<CrystalGraph<T>> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let cartan = CartanMatrix::new(doc.cartan.a1, doc.cartan.a2)?;
    let shape = Weight::parse(&doc.shape)?;
    let seed = LsPath::parse(cartan, shape.clone(), &doc.seed)?;
    let mut nodes = Vec::with_capacity(doc.nodes.len());
    for (k, n) in doc.nodes.iter().enumerate() {
        if n.id != k {
            return Err(Error::Parse(format!("node id {} at position {k}", n.id)));
        }
        let p = LsPath::parse(cartan, shape.clone(), &n.path)?;
        if p.wt() != Weight::parse(&n.wt)? {
            return Err(Error::Parse(format!("node {k}: weight does not match path")));
        }
        nodes.push(p);
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        if e.src >= nodes.len() || e.dst >= nodes.len() {
            return Err(Error::Parse(format!("edge {} -> {} out of range", e.src, e.dst)));
        }
        edges.push(Edge {
            src: e.src,
            i: SimpleIndex::try_from(e.i)?,
            dst: e.dst,
        });
    }
    let mut weight_tally = BTreeMap::new();
    for t in &doc.tallies {
        weight_tally.insert(Weight::parse(&t.wt)?, t.count);
    }
    let g = CrystalGraph {
        cartan,
        shape,
        seed,
        depth: doc.depth,
        nodes,
        edges,
        weight_tally,
    };
    if g.weight_tally != crate::explorer::weight_multiplicities(&g) {
        return Err(Error::Parse("tallies do not match nodes".into()));
    }
    Ok(g)
}

pub fn to_dot<T: Scalar>(g: &CrystalGraph<T>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph crystal {{");
    let _ = writeln!(
        s,
        "  // cartan=({},{}) shape={} depth={}",
        g.cartan.a1(),
        g.cartan.a2(),
        g.shape,
        g.depth
    );
    for (id, p) in g.nodes.iter().enumerate() {
        let _ = writeln!(s, "  n{id} [label=\"{}\\n{}\"];", p.wt(), p.to_text());
    }
    for e in &g.edges {
        let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.src, e.dst, e.i.number());
    }
    s.push_str("}\n");
    s
}

pub fn export<T: Scalar>(g: &CrystalGraph<T>, format: Format) -> String {
    match format {
        Format::Json => to_json(g),
        Format::Dot => to_dot(g),
    }
}

pub fn write_to<T: Scalar, W: io::Write>(g: &CrystalGraph<T>, format: Format, mut out: W) -> io::Result<()> {
    out.write_all(export(g, format).as_bytes())?;
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explorer::explore;
    use crate::order::OrderConfig;
    use num_bigint::BigInt;

    fn graph(depth: u32) -> CrystalGraph<BigInt> {
        let c = CartanMatrix::new(3, 3).unwrap();
        explore(
            &LsPath::highest(c, Weight::lambda()),
            depth,
            &OrderConfig::default(),
        )
        .unwrap()
    }

    #[test]
    fn json_round_trip() {
        for depth in [0, 1, 3] {
            let g = graph(depth);
            let text = to_json(&g);
            let back: CrystalGraph<BigInt> = from_json(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(to_json(&back), text);
        }
    }

    #[test]
    fn depth_one_shape() {
        let g = graph(1);
        let v: serde_json::Value = serde_json::from_str(&to_json(&g)).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
        assert_eq!(v["edges"].as_array().unwrap().len(), 2);
        assert_eq!(v["cartan"]["a1"], 3);
        let dot = to_dot(&g);
        assert_eq!(dot.matches(" -> ").count(), 2);
        assert!(dot.starts_with("digraph crystal {"));
    }

    #[test]
    fn rejects_tampered_weight() {
        let text = to_json(&graph(1)).replacen("\"wt\": \"(1,-1)\"", "\"wt\": \"(0,0)\"", 1);
        assert!(from_json::<BigInt>(&text).is_err());
    }

    #[test]
    fn format_parse() {
        assert_eq!("dot".parse::<Format>().unwrap(), Format::Dot);
        assert!("xml".parse::<Format>().is_err());
    }
}
