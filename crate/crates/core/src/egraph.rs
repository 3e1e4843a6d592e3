//! Edge-labeled loopless multigraphs and their dictionary with transposition
//! factorizations: edge `i` joins the two points moved by the `i`-th factor.

use crate::perm::{Permutation, Transposition};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// An ordered sequence of transpositions in `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    n: usize,
    factors: Vec<Transposition>,
}

impl Factorization {
    pub fn new(n: usize, factors: Vec<Transposition>) -> Result<Self> {
        for f in &factors {
            let (_, t) = f.moved();
            if t > n {
                return Err(Error::IndexOutOfRange(format!("{f} moves a point outside [{n}]")));
            }
        }
        Ok(Factorization { n, factors })
    }

    /// Convenience constructor from `(s, t)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let factors = pairs
            .iter()
            .map(|&(a, b)| Transposition::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, factors)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[Transposition] {
        &self.factors
    }

    /// The left-to-right product of all factors.
    pub fn monodromy(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.n).collect();
        for v in images.iter_mut() {
            for f in &self.factors {
                *v = f.apply(*v);
            }
        }
        Permutation::from_images(images).expect("factor application is a bijection")
    }

    /// Factor order reversed; an involution.
    pub fn reverse(&self) -> Factorization {
        let mut factors = self.factors.clone();
        factors.reverse();
        Factorization { n: self.n, factors }
    }

    /// Concatenation inside the same `S_n`.
    pub fn concat(&self, other: &Factorization) -> Result<Factorization> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: other.n });
        }
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Ok(Factorization { n: self.n, factors })
    }

    /// Conjugates every factor on the left by `h`.
    pub fn conjugate_left(&self, h: &Permutation) -> Result<Factorization> {
        if h.degree() != self.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: h.degree() });
        }
        let hinv = h.inverse();
        let factors = self.factors.iter().map(|f| f.conjugate_right(&hinv)).collect();
        Ok(Factorization { n: self.n, factors })
    }

    /// Conjugates every factor on the right by `h`.
    pub fn conjugate_right(&self, h: &Permutation) -> Result<Factorization> {
        if h.degree() != self.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: h.degree() });
        }
        let factors = self.factors.iter().map(|f| f.conjugate_right(h)).collect();
        Ok(Factorization { n: self.n, factors })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "(empty on [{}])", self.n);
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Whether vertex identities take part in equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum LabelingMode {
    /// Vertices are the labels `1..n`; equality is literal.
    #[default]
    Ev,
    /// Vertices are anonymous; equality is label-preserving isomorphism.
    E,
}

/// A loopless multigraph on `[n]` whose `m` edges are bijectively labeled
/// `1..m`; `edges[i]` holds the endpoints of the edge labeled `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeledGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    mode: LabelingMode,
}

impl EdgeLabeledGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, mode: LabelingMode) -> Result<Self> {
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::Parse(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::IndexOutOfRange(format!("edge ({u},{v}) outside [{n}]")));
            }
        }
        let edges = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Ok(EdgeLabeledGraph { n, edges, mode })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of the edge with 1-based label `label`.
    pub fn endpoints(&self, label: usize) -> (usize, usize) {
        self.edges[label - 1]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn mode(&self) -> LabelingMode {
        self.mode
    }

    pub fn forget_vertex_labels(&self) -> EdgeLabeledGraph {
        EdgeLabeledGraph { mode: LabelingMode::E, ..self.clone() }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Graph of a factorization: edge `i` joins the moved points of the
    /// `i`-th factor.
    pub fn from_factorization(rho: &Factorization) -> EdgeLabeledGraph {
        let edges = rho.factors().iter().map(|f| f.moved()).collect();
        EdgeLabeledGraph { n: rho.degree(), edges, mode: LabelingMode::Ev }
    }

    /// Reads the graph back as a factorization; requires vertex labels.
    pub fn to_factorization(&self) -> Result<Factorization> {
        if self.mode == LabelingMode::E {
            return Err(Error::NeedsVertexLabels);
        }
        Factorization::from_pairs(self.n, &self.edges)
    }

    /// Edge labels relabeled by `i ↦ m+1−i`; an involution.
    pub fn reverse(&self) -> EdgeLabeledGraph {
        let mut edges = self.edges.clone();
        edges.reverse();
        EdgeLabeledGraph { edges, ..self.clone() }
    }

    /// Concatenation over the same vertex set `[n]`: the second block's
    /// labels are shifted up by the first block's size.
    pub fn concat(&self, other: &EdgeLabeledGraph) -> Result<EdgeLabeledGraph> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: other.n });
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(EdgeLabeledGraph { n: self.n, edges, mode: self.mode })
    }

    /// Concatenation with disjoint vertex sets: `other`'s vertices are
    /// renumbered to `n+1..n+n'` and its labels shifted up.
    pub fn disjoint_concat(&self, other: &EdgeLabeledGraph) -> EdgeLabeledGraph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        EdgeLabeledGraph { n: self.n + other.n, edges, mode: self.mode }
    }

    fn component_ids(&self) -> Vec<usize> {
        let mut id: Vec<usize> = (0..self.n).collect();
        fn find(id: &mut Vec<usize>, x: usize) -> usize {
            if id[x] != x {
                let root = find(id, id[x]);
                id[x] = root;
            }
            id[x]
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut id, u - 1), find(&mut id, v - 1));
            if ru != rv {
                id[ru] = rv;
            }
        }
        (0..self.n).map(|x| find(&mut id, x)).collect()
    }

    pub fn stats(&self) -> GraphStats {
        let ids = self.component_ids();
        let components = ids.iter().collect::<BTreeSet<_>>().len();
        let mut degrees: Vec<usize> = (1..=self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let n = self.n as i64;
        let m = self.edges.len() as i64;
        GraphStats {
            n: self.n,
            m: self.edges.len(),
            euler_characteristic: n - m,
            components,
            is_tree: components == 1 && m == n - 1,
            degree_sequence: degrees,
        }
    }

    /// Vertex sets of the connected components, sorted by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let ids = self.component_ids();
        let roots: BTreeSet<usize> = ids.iter().copied().collect();
        roots
            .into_iter()
            .map(|r| (1..=self.n).filter(|&v| ids[v - 1] == r).collect())
            .collect()
    }

    /// Canonical encoding under label-preserving vertex bijections: two
    /// graphs are isomorphic as anonymous-vertex edge-labeled graphs iff
    /// their canonical forms are equal.
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form_impl(self, None)
    }

    /// Canonical encoding under bijections that also match up the roots.
    pub fn canonical_form_rooted(&self, root: usize) -> CanonicalForm {
        canonical_form_impl(self, Some(root))
    }
}

/// Exact combinatorial statistics of an edge-labeled graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub euler_characteristic: i64,
    pub components: usize,
    pub is_tree: bool,
    pub degree_sequence: Vec<usize>,
}

/// Opaque canonical encoding of an e-graph; compare with `==`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<(usize, usize)>,
    rooted: bool,
}

/// The lexicographically least relabeled edge list over all vertex
/// bijections.  The minimum is attained by numbering vertices in order of
/// first appearance along the label-ordered edge list, so the search only
/// branches when an edge introduces both endpoints at once.
fn canonical_form_impl(g: &EdgeLabeledGraph, root: Option<usize>) -> CanonicalForm {
    fn rec(
        g: &EdgeLabeledGraph,
        idx: usize,
        map: &mut Vec<Option<usize>>,
        next: usize,
        acc: &mut Vec<(usize, usize)>,
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if idx == g.edges.len() {
            if best.as_ref().is_none_or(|b| &*acc < b) {
                *best = Some(acc.clone());
            }
            return;
        }
        if let Some(b) = best.as_ref() {
            // acc is a prefix; prune when it is already worse
            if acc.as_slice() > &b[..idx] {
                return;
            }
        }
        let (u, v) = g.edges[idx];
        let options: Vec<(Option<(usize, usize)>, (usize, usize))> = match (map[u - 1], map[v - 1])
        {
            (Some(a), Some(b)) => vec![(None, (a.min(b), a.max(b)))],
            (Some(a), None) => vec![(Some((v, next)), (a.min(next), a.max(next)))],
            (None, Some(b)) => vec![(Some((u, next)), (b.min(next), b.max(next)))],
            (None, None) => vec![
                (Some((u, next)), (next, next + 1)),
                (Some((v, next)), (next, next + 1)),
            ],
        };
        for (assign, pair) in options {
            let mut assigned = Vec::new();
            if let Some((vertex, number)) = assign {
                map[vertex - 1] = Some(number);
                assigned.push(vertex);
                if pair == (next, next + 1) {
                    let other = if vertex == u { v } else { u };
                    map[other - 1] = Some(next + 1);
                    assigned.push(other);
                }
            }
            let used = assigned.len();
            acc.push(pair);
            rec(g, idx + 1, map, next + used, acc, best);
            acc.pop();
            for vertex in assigned {
                map[vertex - 1] = None;
            }
        }
    }

    let mut map = vec![None; g.n];
    let mut next = 1;
    if let Some(r) = root {
        map[r - 1] = Some(1);
        next = 2;
    }
    let mut best = None;
    rec(g, 0, &mut map, next, &mut Vec::new(), &mut best);
    CanonicalForm { n: g.n, edges: best.unwrap_or_default(), rooted: root.is_some() }
}
