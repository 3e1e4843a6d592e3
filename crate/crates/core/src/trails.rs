//! Local edge orders, greedy trails, trail double covers, and the dual of an
//! edge-labeled graph or factorization.
//!
//! The greedy trail out of a vertex starts with the first edge in that
//! vertex's order and, after arriving somewhere along edge `e`, continues
//! with the edge immediately following `e` in the order at the arrival
//! vertex, stopping when `e` is last there.  Every edge lies on exactly two
//! such trails, once per direction, and the trails are simultaneously the
//! vertices of the dual graph and the trajectories of the ground-set points
//! under successive application of the factors.

use crate::egraph::{EdgeLabeledGraph, Factorization};
use crate::perm::Permutation;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A linear order on the edges incident to each vertex.
///
/// When induced from an edge-labeled graph the orders are increasing in the
/// labels, but arbitrary orders are accepted; the trail machinery is purely
/// positional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Leo {
    n: usize,
    edges: Vec<(usize, usize)>,
    order: Vec<Vec<usize>>,
}

impl Leo {
    /// The label-induced order: each vertex lists its incident edges by
    /// increasing label.
    pub fn from_graph(g: &EdgeLabeledGraph) -> Leo {
        let mut order = vec![Vec::new(); g.vertex_count()];
        for label in 1..=g.edge_count() {
            let (u, v) = g.endpoints(label);
            order[u - 1].push(label);
            order[v - 1].push(label);
        }
        Leo { n: g.vertex_count(), edges: g.edges().to_vec(), order }
    }

    /// An explicit order; each vertex's list must contain exactly the labels
    /// of its incident edges.
    pub fn new(n: usize, edges: Vec<(usize, usize)>, order: Vec<Vec<usize>>) -> Result<Leo> {
        if order.len() != n {
            return Err(Error::Parse(format!("expected {n} order lists, got {}", order.len())));
        }
        for (vi, list) in order.iter().enumerate() {
            let v = vi + 1;
            let mut incident: Vec<usize> = (1..=edges.len())
                .filter(|&l| edges[l - 1].0 == v || edges[l - 1].1 == v)
                .collect();
            let mut given = list.clone();
            incident.sort_unstable();
            given.sort_unstable();
            if incident != given {
                return Err(Error::Parse(format!(
                    "order at vertex {v} is {list:?} but the incident edges are {incident:?}"
                )));
            }
        }
        Ok(Leo { n, edges, order })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, label: usize) -> (usize, usize) {
        self.edges[label - 1]
    }

    /// The ordered edge list at `v`.
    pub fn order_at(&self, v: usize) -> &[usize] {
        &self.order[v - 1]
    }

    fn other_end(&self, label: usize, v: usize) -> usize {
        let (a, b) = self.edges[label - 1];
        if a == v {
            b
        } else {
            a
        }
    }

    /// The greedy trail starting at `v`; empty when `v` is isolated.
    pub fn migt(&self, v: usize) -> Trail {
        let mut steps = Vec::new();
        let Some(&first) = self.order[v - 1].first() else {
            return Trail { start: v, steps };
        };
        let mut edge = first;
        let mut at = self.other_end(first, v);
        steps.push(TrailStep { edge, to: at });
        loop {
            let list = &self.order[at - 1];
            let pos = list.iter().position(|&e| e == edge).expect("edge incident to arrival");
            if pos + 1 == list.len() {
                return Trail { start: v, steps };
            }
            edge = list[pos + 1];
            at = self.other_end(edge, at);
            steps.push(TrailStep { edge, to: at });
        }
    }

    /// All greedy trails, validated as an oriented non-singular double
    /// cover of the edges.
    pub fn trail_cover(&self) -> Result<Ptdc> {
        let trails: Vec<Trail> = (1..=self.n).map(|v| self.migt(v)).collect();
        // every edge twice, in opposite directions
        let mut seen = vec![[false, false]; self.edges.len()];
        for t in &trails {
            let mut at = t.start;
            for step in &t.steps {
                let (a, _) = self.edges[step.edge - 1];
                let dir = usize::from(at != a);
                if seen[step.edge - 1][dir] {
                    return Err(Error::Defect(format!(
                        "edge {} traversed twice in the same direction",
                        step.edge
                    )));
                }
                seen[step.edge - 1][dir] = true;
                at = step.to;
            }
        }
        if !seen.iter().all(|s| s[0] && s[1]) {
            return Err(Error::Defect("an edge is not doubly covered".into()));
        }
        // one trail ends at each vertex
        let mut ends = vec![0usize; self.n];
        for t in &trails {
            ends[t.end() - 1] += 1;
        }
        if ends.iter().any(|&c| c != 1) {
            return Err(Error::Defect("trail ends are not a bijection".into()));
        }
        // non-singular: at a vertex of degree ≥ 2 the outgoing trail's first
        // edge differs from the incoming trail's last edge
        for v in 1..=self.n {
            if self.order[v - 1].len() < 2 {
                continue;
            }
            let outgoing = trails[v - 1].steps[0].edge;
            let incoming = trails
                .iter()
                .find(|t| t.end() == v)
                .and_then(|t| t.steps.last())
                .map(|s| s.edge)
                .unwrap();
            if outgoing == incoming {
                return Err(Error::Defect(format!("singular trail pair at vertex {v}")));
            }
        }
        Ok(Ptdc { trails })
    }
}

/// One step of a trail: traverse `edge`, arriving at `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailStep {
    pub edge: usize,
    pub to: usize,
}

/// A walk without repeated edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trail {
    pub start: usize,
    pub steps: Vec<TrailStep>,
}

impl Trail {
    pub fn end(&self) -> usize {
        self.steps.last().map_or(self.start, |s| s.to)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn edge_labels(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.edge).collect()
    }
}

/// The greedy trails of a leo, indexed by starting vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ptdc {
    trails: Vec<Trail>,
}

impl Ptdc {
    pub fn trails(&self) -> &[Trail] {
        &self.trails
    }

    /// The trail starting at `v`.
    pub fn trail_from(&self, v: usize) -> &Trail {
        &self.trails[v - 1]
    }

    /// The trail ending at `v`.
    pub fn trail_into(&self, v: usize) -> &Trail {
        self.trails.iter().find(|t| t.end() == v).expect("trail ends are a bijection")
    }

    /// Functional digraph with one arc per trail, from its start to its end.
    pub fn monodromy_digraph(&self) -> MonodromyDigraph {
        let arcs = self.trails.iter().map(|t| (t.start, t.end())).collect();
        MonodromyDigraph { arcs }
    }
}

/// The functional digraph of a permutation: arc `v → u` exactly when the
/// trail out of `v` is the trail into `u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromyDigraph {
    arcs: Vec<(usize, usize)>,
}

impl MonodromyDigraph {
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn to_permutation(&self) -> Result<Permutation> {
        let mut images = vec![0; self.arcs.len()];
        for &(v, u) in &self.arcs {
            images[v - 1] = u;
        }
        Permutation::from_images(images)
    }
}

/// Monodromy of a graph read off its trails rather than by multiplying the
/// factors; the two routes agree.
pub fn monodromy_via_trails(g: &EdgeLabeledGraph) -> Result<Permutation> {
    Leo::from_graph(g).trail_cover()?.monodromy_digraph().to_permutation()
}

/// The dual graph: one vertex per greedy trail (named after its starting
/// vertex), and edge `i` joining the two trails that share edge `i`.
pub fn dual_graph(g: &EdgeLabeledGraph) -> Result<EdgeLabeledGraph> {
    let ptdc = Leo::from_graph(g).trail_cover()?;
    let mut pairs: Vec<Vec<usize>> = vec![Vec::new(); g.edge_count()];
    for t in ptdc.trails() {
        for step in &t.steps {
            pairs[step.edge - 1].push(t.start);
        }
    }
    let edges = pairs
        .into_iter()
        .map(|p| {
            debug_assert_eq!(p.len(), 2);
            (p[0], p[1])
        })
        .collect();
    EdgeLabeledGraph::new(g.vertex_count(), edges, g.mode())
}

/// The dual factorization by the explicit formula: the `i`-th factor is the
/// left conjugate of `τᵢ` by the prefix product `τ₁⋯τᵢ₋₁`.
pub fn dual_factorization(rho: &Factorization) -> Factorization {
    let mut prefix = Permutation::identity(rho.degree());
    let mut prefix_inv = prefix.clone();
    let mut factors = Vec::with_capacity(rho.len());
    for f in rho.factors() {
        factors.push(f.conjugate_right(&prefix_inv));
        prefix = prefix.compose(&f.to_permutation(rho.degree()).unwrap()).unwrap();
        prefix_inv = prefix.inverse();
    }
    Factorization::new(rho.degree(), factors).unwrap()
}

/// The dual factorization computed through the trail construction on the
/// associated graph; agrees with [`dual_factorization`].
pub fn dual_via_graph(rho: &Factorization) -> Result<Factorization> {
    dual_graph(&EdgeLabeledGraph::from_factorization(rho))?.to_factorization()
}

/// The opposite-convention dual: the `i`-th factor is the right conjugate of
/// `τᵢ` by the suffix product `τᵢ₊₁⋯τₘ`; the last factor is unchanged.
pub fn bar_dual(rho: &Factorization) -> Factorization {
    let n = rho.degree();
    let mut suffix = Permutation::identity(n);
    let mut factors = vec![None; rho.len()];
    for (i, f) in rho.factors().iter().enumerate().rev() {
        factors[i] = Some(f.conjugate_right(&suffix));
        suffix = f.to_permutation(n).unwrap().compose(&suffix).unwrap();
    }
    Factorization::new(n, factors.into_iter().map(Option::unwrap).collect()).unwrap()
}

/// Dual of a concatenation assembled blockwise: the dual of block `k` is
/// conjugated on the left by the monodromy of the blocks before it.
pub fn dual_concat(blocks: &[Factorization]) -> Result<Factorization> {
    let Some(first) = blocks.first() else {
        return Err(Error::Parse("dual_concat needs at least one block".into()));
    };
    let n = first.degree();
    let mut acc = Factorization::new(n, Vec::new())?;
    let mut mu = Permutation::identity(n);
    for block in blocks {
        if block.degree() != n {
            return Err(Error::DegreeMismatch { expected: n, found: block.degree() });
        }
        acc = acc.concat(&dual_factorization(block).conjugate_left(&mu)?)?;
        mu = mu.compose(&block.monodromy())?;
    }
    Ok(acc)
}
