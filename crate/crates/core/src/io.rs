//! JSON and DOT serialization for the public object kinds.
//!
//! Factorizations are `{"n": …, "factors": [[s,t], …]}`, graphs are
//! `{"n": …, "edges": [[u,v], …]}` with edge `i` at index `i−1` (plus an
//! optional `"mode": "E"`), rotation systems are
//! `{"rotations": {"v": [[edge, end], …], …}}`.

use crate::egraph::{EdgeLabeledGraph, Factorization, LabelingMode};
use crate::medial::MedialDigraph;
use crate::surface::{Dart, RotationSystem};
use crate::trails::Ptdc;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Serialize, Deserialize)]
struct FactorizationJson {
    n: usize,
    factors: Vec<(usize, usize)>,
}

pub fn factorization_to_json(rho: &Factorization) -> String {
    let doc = FactorizationJson {
        n: rho.degree(),
        factors: rho.factors().iter().map(|f| f.moved()).collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn factorization_from_json(text: &str) -> Result<Factorization> {
    let doc: FactorizationJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Factorization::from_pairs(doc.n, &doc.factors)
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode: Option<String>,
}

pub fn graph_to_json(g: &EdgeLabeledGraph) -> String {
    let doc = GraphJson {
        n: g.vertex_count(),
        edges: g.edges().to_vec(),
        mode: match g.mode() {
            LabelingMode::Ev => None,
            LabelingMode::E => Some("E".to_string()),
        },
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn graph_from_json(text: &str) -> Result<EdgeLabeledGraph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mode = match doc.mode.as_deref() {
        None | Some("EV") | Some("ev") => LabelingMode::Ev,
        Some("E") | Some("e") => LabelingMode::E,
        Some(other) => return Err(Error::Parse(format!("unknown mode {other:?}"))),
    };
    EdgeLabeledGraph::new(doc.n, doc.edges, mode)
}

#[derive(Serialize, Deserialize)]
struct RotationJson {
    rotations: BTreeMap<String, Vec<(usize, u8)>>,
}

pub fn rotation_to_json(rs: &RotationSystem) -> String {
    let rotations = (1..=rs.vertex_count())
        .map(|v| {
            (v.to_string(), rs.rotation(v).iter().map(|d| (d.edge, d.end)).collect())
        })
        .collect();
    serde_json::to_string(&RotationJson { rotations }).expect("plain data serializes")
}

pub fn rotation_from_json(text: &str) -> Result<RotationSystem> {
    let doc: RotationJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut rot_by_vertex = BTreeMap::new();
    let mut edge_count = 0;
    for (key, darts) in &doc.rotations {
        let v: usize = key.parse().map_err(|_| Error::Parse(format!("bad vertex {key:?}")))?;
        for &(e, _) in darts {
            edge_count = edge_count.max(e);
        }
        rot_by_vertex.insert(v, darts.clone());
    }
    let n = rot_by_vertex.keys().copied().max().unwrap_or(0);
    if rot_by_vertex.len() != n || rot_by_vertex.keys().any(|&v| v == 0) {
        return Err(Error::Parse("rotations must cover vertices 1..n".into()));
    }
    // recover each edge's endpoints from where its two ends are listed
    let mut ends = vec![[0usize; 2]; edge_count];
    for (&v, darts) in &rot_by_vertex {
        for &(e, end) in darts {
            if e == 0 || end > 1 {
                return Err(Error::Parse(format!("bad dart [{e}, {end}]")));
            }
            ends[e - 1][end as usize] = v;
        }
    }
    let edges = ends
        .iter()
        .enumerate()
        .map(|(i, &[a, b])| {
            if a == 0 || b == 0 {
                Err(Error::Parse(format!("edge {} is missing an end", i + 1)))
            } else {
                Ok((a, b))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let rot = (1..=n)
        .map(|v| {
            rot_by_vertex[&v]
                .iter()
                .map(|&(edge, end)| Dart { edge, end })
                .collect()
        })
        .collect();
    RotationSystem::new(n, edges, rot)
}

pub fn ptdc_to_json(ptdc: &Ptdc) -> String {
    serde_json::to_string(ptdc.trails()).expect("plain data serializes")
}

pub fn medial_to_json(m: &MedialDigraph) -> String {
    serde_json::to_string(m).expect("plain data serializes")
}

pub fn medial_from_json(text: &str) -> Result<MedialDigraph> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

const PALETTE: [&str; 10] = [
    "blue", "red", "green", "orange", "purple", "brown", "cyan", "magenta", "olive", "gray",
];

fn color_for(v: usize) -> &'static str {
    PALETTE[(v - 1) % PALETTE.len()]
}

pub fn graph_to_dot(g: &EdgeLabeledGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in 1..=g.vertex_count() {
        writeln!(out, "  v{v};").unwrap();
    }
    for label in 1..=g.edge_count() {
        let (u, v) = g.endpoints(label);
        writeln!(out, "  v{u} -- v{v} [label=\"{label}\"];").unwrap();
    }
    out.push('}');
    out
}

pub fn medial_to_dot(m: &MedialDigraph) -> String {
    let mut out = String::from("digraph {\n");
    for v in 1..=m.vertex_count() {
        writeln!(out, "  e{v};").unwrap();
    }
    for a in m.arcs() {
        if a.color == 0 {
            writeln!(out, "  e{} -> e{};", a.from, a.to).unwrap();
        } else {
            writeln!(
                out,
                "  e{} -> e{} [color={} label=\"v{}\"];",
                a.from,
                a.to,
                color_for(a.color),
                a.color
            )
            .unwrap();
        }
    }
    out.push('}');
    out
}

pub fn rotation_to_dot(rs: &RotationSystem) -> String {
    let mut out = String::from("graph {\n");
    for v in 1..=rs.vertex_count() {
        let order: Vec<String> =
            rs.rotation(v).iter().map(|d| format!("{}.{}", d.edge, d.end)).collect();
        writeln!(out, "  v{v} [label=\"v{v}: {}\"];", order.join(" ")).unwrap();
    }
    for (i, &(u, v)) in rs.edges().iter().enumerate() {
        writeln!(out, "  v{u} -- v{v} [label=\"{}\"];", i + 1).unwrap();
    }
    out.push('}');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_json_round_trip() {
        let rho =
            Factorization::from_pairs(4, &[(3, 4), (1, 3), (1, 2), (3, 4), (2, 3)]).unwrap();
        let text = factorization_to_json(&rho);
        assert_eq!(factorization_from_json(&text).unwrap(), rho);
        assert!(factorization_from_json("{\"n\": 3}").is_err());
        assert!(factorization_from_json("{\"n\": 3, \"factors\": [[1, 1]]}").is_err());
    }

    #[test]
    fn graph_json_round_trip() {
        let g = EdgeLabeledGraph::new(3, vec![(1, 2), (2, 3)], LabelingMode::E).unwrap();
        let text = graph_to_json(&g);
        assert!(text.contains("\"mode\":\"E\""));
        let back = graph_from_json(&text).unwrap();
        assert_eq!(back, g);

        let ev = graph_from_json("{\"n\": 2, \"edges\": [[1, 2]]}").unwrap();
        assert_eq!(ev.mode(), LabelingMode::Ev);
    }

    #[test]
    fn rotation_json_round_trip() {
        let g = EdgeLabeledGraph::new(3, vec![(1, 2), (2, 3), (1, 3)], LabelingMode::Ev).unwrap();
        let rs = RotationSystem::completion(&g);
        let text = rotation_to_json(&rs);
        let back = rotation_from_json(&text).unwrap();
        assert_eq!(back, rs);
        assert!(rotation_from_json("{\"rotations\": {\"1\": [[1, 0]]}}").is_err());
    }

    #[test]
    fn dot_exports_are_stable() {
        let g = EdgeLabeledGraph::new(2, vec![(1, 2)], LabelingMode::Ev).unwrap();
        let dot = graph_to_dot(&g);
        assert_eq!(dot, "graph {\n  v1;\n  v2;\n  v1 -- v2 [label=\"1\"];\n}");
        let m = MedialDigraph::of_graph(
            &EdgeLabeledGraph::new(3, vec![(1, 2), (2, 3)], LabelingMode::Ev).unwrap(),
        );
        let dot = medial_to_dot(&m);
        assert!(dot.contains("e1 -> e2"));
        assert!(dot.contains("color=red"));
    }
}
