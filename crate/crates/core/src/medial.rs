//! Medial digraphs of local edge orders, perfect chain decompositions, and
//! the selector encoding whose bit flip realizes the dual.
//!
//! The medial digraph has one vertex per edge label and an arc `a → b`
//! whenever `b` immediately follows `a` in the order at some vertex; the arc
//! is colored by that vertex.  It is binary (all bidegrees at most two), and
//! a local order is induced by an edge labeling exactly when the digraph is
//! acyclic.

use crate::egraph::{EdgeLabeledGraph, LabelingMode};
use crate::trails::Leo;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// An arc of a medial digraph; `color` is the originating vertex, or 0 for
/// plain digraphs with no coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MedialArc {
    pub from: usize,
    pub to: usize,
    pub color: usize,
}

/// A digraph on the edge labels `1..=vertices`, with colored arcs.  Loops
/// are permitted (they arise from rotation systems); the chain machinery
/// below requires an acyclic input and rejects anything else.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MedialDigraph {
    vertices: usize,
    arcs: Vec<MedialArc>,
}

impl MedialDigraph {
    pub fn new(vertices: usize, arcs: Vec<MedialArc>) -> Result<Self> {
        for a in &arcs {
            if a.from == 0 || a.to == 0 || a.from > vertices || a.to > vertices {
                return Err(Error::IndexOutOfRange(format!(
                    "arc {}→{} outside [{vertices}]",
                    a.from, a.to
                )));
            }
        }
        Ok(MedialDigraph { vertices, arcs })
    }

    /// The medial digraph of a local edge order: one arc per consecutive
    /// pair at each vertex.
    pub fn of_leo(leo: &Leo) -> MedialDigraph {
        let mut arcs = Vec::new();
        for v in 1..=leo.vertex_count() {
            let list = leo.order_at(v);
            for w in list.windows(2) {
                arcs.push(MedialArc { from: w[0], to: w[1], color: v });
            }
        }
        MedialDigraph { vertices: leo.edge_count(), arcs }
    }

    /// The medial digraph of a graph's label-induced order.
    pub fn of_graph(g: &EdgeLabeledGraph) -> MedialDigraph {
        Self::of_leo(&Leo::from_graph(g))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arcs(&self) -> &[MedialArc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Euler characteristic of the underlying graph, `m − l`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.arcs.len() as i64
    }

    pub fn in_arcs(&self, v: usize) -> Vec<usize> {
        let mut ids: Vec<usize> =
            (0..self.arcs.len()).filter(|&i| self.arcs[i].to == v).collect();
        ids.sort_by_key(|&i| (self.arcs[i].from, i));
        ids
    }

    pub fn out_arcs(&self, v: usize) -> Vec<usize> {
        let mut ids: Vec<usize> =
            (0..self.arcs.len()).filter(|&i| self.arcs[i].from == v).collect();
        ids.sort_by_key(|&i| (self.arcs[i].to, i));
        ids
    }

    pub fn is_binary(&self) -> bool {
        (1..=self.vertices)
            .all(|v| self.in_arcs(v).len() <= 2 && self.out_arcs(v).len() <= 2)
    }

    /// Vertices with at least one incoming and one outgoing arc.
    pub fn internal_vertices(&self) -> Vec<usize> {
        (1..=self.vertices)
            .filter(|&v| !self.in_arcs(v).is_empty() && !self.out_arcs(v).is_empty())
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.vertices];
        for a in &self.arcs {
            indeg[a.to - 1] += 1;
        }
        let mut queue: Vec<usize> =
            (1..=self.vertices).filter(|&v| indeg[v - 1] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop() {
            removed += 1;
            for a in &self.arcs {
                if a.from == v {
                    indeg[a.to - 1] -= 1;
                    if indeg[a.to - 1] == 0 {
                        queue.push(a.to);
                    }
                }
            }
        }
        removed == self.vertices
    }

    /// All topological sorts in lexicographic order.
    pub fn topological_sorts(&self) -> Vec<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertices];
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); self.vertices];
        for a in &self.arcs {
            indeg[a.to - 1] += 1;
            succ[a.from - 1].push(a.to);
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.vertices);
        fn rec(
            n: usize,
            indeg: &mut Vec<usize>,
            succ: &[Vec<usize>],
            used: &mut Vec<bool>,
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if current.len() == n {
                out.push(current.clone());
                return;
            }
            for v in 1..=n {
                if !used[v - 1] && indeg[v - 1] == 0 {
                    used[v - 1] = true;
                    for &u in &succ[v - 1] {
                        indeg[u - 1] -= 1;
                    }
                    current.push(v);
                    rec(n, indeg, succ, used, current, out);
                    current.pop();
                    for &u in &succ[v - 1] {
                        indeg[u - 1] += 1;
                    }
                    used[v - 1] = false;
                }
            }
        }
        let mut used = vec![false; self.vertices];
        rec(self.vertices, &mut indeg, &succ, &mut used, &mut current, &mut out);
        out
    }

    /// Number of color-ignoring digraph automorphisms, by exhaustive search
    /// over vertex bijections.
    pub fn automorphism_count(&self) -> usize {
        let key = |perm: &[usize]| -> BTreeMap<(usize, usize), usize> {
            let mut map = BTreeMap::new();
            for a in &self.arcs {
                *map.entry((perm[a.from - 1], perm[a.to - 1])).or_insert(0) += 1;
            }
            map
        };
        let identity: Vec<usize> = (1..=self.vertices).collect();
        let target = key(&identity);
        let mut count = 0;
        permute(self.vertices, &mut |perm| {
            if key(perm) == target {
                count += 1;
            }
        });
        count
    }

    /// Canonical key under vertex relabeling (colors ignored).
    pub fn canonical_key(&self) -> Vec<(usize, usize)> {
        let mut best: Option<Vec<(usize, usize)>> = None;
        permute(self.vertices, &mut |perm| {
            let mut arcs: Vec<(usize, usize)> =
                self.arcs.iter().map(|a| (perm[a.from - 1], perm[a.to - 1])).collect();
            arcs.sort_unstable();
            if best.as_ref().is_none_or(|b| &arcs < b) {
                best = Some(arcs);
            }
        });
        best.unwrap_or_default()
    }
}

fn permute(n: usize, visit: &mut impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (1..=n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            visit(perm);
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, visit);
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut perm, visit);
}

/// True iff the order is induced by some edge labeling, i.e. the medial
/// digraph is acyclic.
pub fn is_e_realizable(leo: &Leo) -> bool {
    MedialDigraph::of_leo(leo).is_acyclic()
}

/// One chain of a decomposition: a directed path of arcs, or a single
/// anchored vertex when `arcs` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub anchor: usize,
    pub arcs: Vec<usize>,
}

impl Chain {
    fn trivial(anchor: usize) -> Chain {
        Chain { anchor, arcs: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.arcs.is_empty()
    }

    /// The medial vertices visited, in order.
    pub fn vertex_path(&self, m: &MedialDigraph) -> Vec<usize> {
        let mut path = vec![self.anchor];
        for &a in &self.arcs {
            path.push(m.arcs()[a].to);
        }
        path
    }

    pub fn first_vertex(&self) -> usize {
        self.anchor
    }

    pub fn last_vertex(&self, m: &MedialDigraph) -> usize {
        self.arcs.last().map_or(self.anchor, |&a| m.arcs()[a].to)
    }
}

/// A perfect chain decomposition: the arcs are partitioned into directed
/// paths such that every vertex lies on exactly two chains (counting
/// anchored trivial chains).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pcd {
    chains: Vec<Chain>,
}

impl Pcd {
    fn from_chains(m: &MedialDigraph, mut chains: Vec<Chain>) -> Result<Pcd> {
        let mut membership = vec![0usize; m.vertex_count()];
        let mut arc_used = vec![false; m.arc_count()];
        for c in &chains {
            let mut at = c.anchor;
            membership[at - 1] += 1;
            for &a in &c.arcs {
                let arc = m.arcs()[a];
                if arc.from != at || arc_used[a] {
                    return Err(Error::Defect("chain is not an arc-disjoint path".into()));
                }
                arc_used[a] = true;
                at = arc.to;
                membership[at - 1] += 1;
            }
        }
        if !arc_used.iter().all(|&u| u) {
            return Err(Error::Defect("chains do not cover all arcs".into()));
        }
        if membership.iter().any(|&c| c != 2) {
            return Err(Error::Defect("a vertex is not on exactly two chains".into()));
        }
        chains.sort_by_key(|c| (c.anchor, c.arcs.clone()));
        Ok(Pcd { chains })
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn chain_count(&self) -> usize {
        self.chains.len()
    }

    /// Index of the chain whose vertex path matches `path`.
    pub fn chain_with_path(&self, m: &MedialDigraph, path: &[usize]) -> Option<usize> {
        self.chains.iter().position(|c| c.vertex_path(m) == path)
    }

    /// The two chain indices through each medial vertex.
    fn memberships(&self, m: &MedialDigraph) -> Vec<Vec<usize>> {
        let mut by_vertex = vec![Vec::new(); m.vertex_count()];
        for (ci, c) in self.chains.iter().enumerate() {
            for v in c.vertex_path(m) {
                by_vertex[v - 1].push(ci);
            }
        }
        by_vertex
    }
}

/// A 0/1 choice at each internal vertex; the fixed dictionary between
/// selectors and chain decompositions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selector {
    bits: BTreeMap<usize, bool>,
}

impl Selector {
    pub fn new(bits: BTreeMap<usize, bool>) -> Selector {
        Selector { bits }
    }

    pub fn zero(m: &MedialDigraph) -> Selector {
        Selector { bits: m.internal_vertices().into_iter().map(|v| (v, false)).collect() }
    }

    pub fn bits(&self) -> &BTreeMap<usize, bool> {
        &self.bits
    }

    pub fn get(&self, v: usize) -> Option<bool> {
        self.bits.get(&v).copied()
    }

    /// Flips every bit.
    pub fn flipped(&self) -> Selector {
        Selector { bits: self.bits.iter().map(|(&v, &b)| (v, !b)).collect() }
    }

    fn check_domain(&self, m: &MedialDigraph) -> Result<()> {
        let internal: BTreeSet<usize> = m.internal_vertices().into_iter().collect();
        let domain: BTreeSet<usize> = self.bits.keys().copied().collect();
        if internal != domain {
            return Err(Error::SelectorDomain);
        }
        Ok(())
    }
}

/// Builds the chain decomposition selected by `s`.
///
/// At an internal vertex the incoming arcs (ordered by source) are matched
/// with the outgoing arcs (ordered by target): bit 0 pairs first with
/// first, bit 1 crosses the pairing.  For bidegree (1,1), bit 0 joins the
/// two arcs into one chain and anchors a trivial chain at the vertex.
pub fn pcd_from_selector(m: &MedialDigraph, s: &Selector) -> Result<Pcd> {
    if !m.is_binary() {
        return Err(Error::Unsupported("chain decompositions need a binary digraph".into()));
    }
    s.check_domain(m)?;
    // successor[arc] = the arc paired after it at its head
    let mut successor: Vec<Option<usize>> = vec![None; m.arc_count()];
    let mut has_pred: Vec<bool> = vec![false; m.arc_count()];
    let mut trivial_count = vec![0usize; m.vertex_count()];
    for v in 1..=m.vertex_count() {
        let ins = m.in_arcs(v);
        let outs = m.out_arcs(v);
        let pairs: Vec<(usize, usize)> = match (ins.len(), outs.len()) {
            (0, _) | (_, 0) => Vec::new(),
            (1, 1) => {
                if s.get(v) == Some(false) {
                    vec![(ins[0], outs[0])]
                } else {
                    Vec::new()
                }
            }
            (1, 2) => {
                let o = if s.get(v) == Some(false) { outs[0] } else { outs[1] };
                vec![(ins[0], o)]
            }
            (2, 1) => {
                let i = if s.get(v) == Some(false) { ins[0] } else { ins[1] };
                vec![(i, outs[0])]
            }
            (2, 2) => {
                if s.get(v) == Some(false) {
                    vec![(ins[0], outs[0]), (ins[1], outs[1])]
                } else {
                    vec![(ins[0], outs[1]), (ins[1], outs[0])]
                }
            }
            _ => unreachable!("binary digraph"),
        };
        let npairs = pairs.len();
        for (i, o) in pairs {
            successor[i] = Some(o);
            has_pred[o] = true;
        }
        let membership = ins.len() + outs.len() - npairs;
        if membership > 2 {
            return Err(Error::Defect(format!("vertex {v} would lie on {membership} chains")));
        }
        trivial_count[v - 1] = 2 - membership;
    }
    let mut chains = Vec::new();
    for start in 0..m.arc_count() {
        if has_pred[start] {
            continue;
        }
        let mut arcs = vec![start];
        let mut at = start;
        while let Some(next) = successor[at] {
            arcs.push(next);
            at = next;
        }
        chains.push(Chain { anchor: m.arcs()[start].from, arcs });
    }
    let chained: usize = chains.iter().map(|c| c.arcs.len()).sum();
    if chained != m.arc_count() {
        // a successor walk closed up on itself
        return Err(Error::Unsupported(
            "selector pairing closes a directed cycle; the digraph is not acyclic".into(),
        ));
    }
    for v in 1..=m.vertex_count() {
        for _ in 0..trivial_count[v - 1] {
            chains.push(Chain::trivial(v));
        }
    }
    Pcd::from_chains(m, chains)
}

/// Reads back the selector of a chain decomposition.
pub fn selector_of(m: &MedialDigraph, pcd: &Pcd) -> Result<Selector> {
    // paired (in, out) at each vertex, from consecutive arcs of chains
    let mut paired: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for c in pcd.chains() {
        for w in c.arcs.windows(2) {
            paired.entry(m.arcs()[w[0]].to).or_default().push((w[0], w[1]));
        }
    }
    let mut bits = BTreeMap::new();
    for v in m.internal_vertices() {
        let ins = m.in_arcs(v);
        let outs = m.out_arcs(v);
        let at_v = paired.get(&v).cloned().unwrap_or_default();
        let bit = match (ins.len(), outs.len()) {
            (1, 1) => at_v.is_empty(),
            (1, 2) => {
                let &(_, o) = at_v.first().ok_or(Error::SelectorDomain)?;
                o == outs[1]
            }
            (2, 1) => {
                let &(i, _) = at_v.first().ok_or(Error::SelectorDomain)?;
                i == ins[1]
            }
            (2, 2) => {
                let &(i, o) = at_v.first().ok_or(Error::SelectorDomain)?;
                if i == ins[0] {
                    o == outs[1]
                } else {
                    o == outs[0]
                }
            }
            _ => unreachable!("internal vertex of a binary digraph"),
        };
        bits.insert(v, bit);
    }
    Ok(Selector { bits })
}

/// The dual decomposition: every selector bit flipped.
pub fn pcd_dual(m: &MedialDigraph, pcd: &Pcd) -> Result<Pcd> {
    pcd_from_selector(m, &selector_of(m, pcd)?.flipped())
}

/// The chain decomposition traced by a local edge order: one chain per
/// graph vertex, following its ordered edge list.
pub fn pcd_from_leo(leo: &Leo, m: &MedialDigraph) -> Result<Pcd> {
    chains_from_edge_lists(
        m,
        (1..=leo.vertex_count()).map(|v| {
            let edges = leo.order_at(v).to_vec();
            let colors = vec![v; edges.len().saturating_sub(1)];
            (edges, colors)
        }),
    )
}

/// The chain decomposition traced by the greedy trails; it is the selector
/// dual of the order-traced one.
pub fn pcd_from_ptdc(leo: &Leo, m: &MedialDigraph) -> Result<Pcd> {
    let ptdc = leo.trail_cover()?;
    chains_from_edge_lists(
        m,
        ptdc.trails().iter().map(|t| {
            // consecutive trail edges meet at the arrival vertex of the
            // earlier step, which colors the medial arc between them
            let edges = t.edge_labels();
            let colors = t.steps[..t.steps.len().saturating_sub(1)]
                .iter()
                .map(|s| s.to)
                .collect();
            (edges, colors)
        }),
    )
}

fn chains_from_edge_lists(
    m: &MedialDigraph,
    lists: impl Iterator<Item = (Vec<usize>, Vec<usize>)>,
) -> Result<Pcd> {
    let mut used = vec![false; m.arc_count()];
    let mut find_arc = |from: usize, to: usize, color: usize| -> Result<usize> {
        let id = (0..m.arc_count())
            .find(|&i| {
                let a = m.arcs()[i];
                !used[i] && a.from == from && a.to == to && a.color == color
            })
            .ok_or_else(|| Error::Defect(format!("no unused medial arc {from}→{to} at {color}")))?;
        used[id] = true;
        Ok(id)
    };
    let mut chains = Vec::new();
    for (edges, colors) in lists {
        match edges.len() {
            0 => {}
            1 => chains.push(Chain::trivial(edges[0])),
            _ => {
                let arcs = edges
                    .windows(2)
                    .zip(&colors)
                    .map(|(w, &c)| find_arc(w[0], w[1], c))
                    .collect::<Result<Vec<_>>>()?;
                chains.push(Chain { anchor: edges[0], arcs });
            }
        }
    }
    Pcd::from_chains(m, chains)
}

/// Rebuilds the edge-labeled graph selected by a chain decomposition and a
/// topological sort: one vertex per chain, one edge per medial vertex
/// joining its two chains, labeled by its position in the sort.
pub fn egraph_from_pcd(
    m: &MedialDigraph,
    pcd: &Pcd,
    sort: &[usize],
) -> Result<EdgeLabeledGraph> {
    if !m.is_acyclic() {
        return Err(Error::CyclicMedial);
    }
    let mut position = vec![0usize; m.vertex_count() + 1];
    if sort.len() != m.vertex_count() {
        return Err(Error::Parse("sort must list every medial vertex".into()));
    }
    for (i, &v) in sort.iter().enumerate() {
        if v == 0 || v > m.vertex_count() || position[v] != 0 {
            return Err(Error::Parse("sort is not a permutation of the vertices".into()));
        }
        position[v] = i + 1;
    }
    for a in m.arcs() {
        if position[a.from] >= position[a.to] {
            return Err(Error::Parse("sort is not topological".into()));
        }
    }
    let memberships = pcd.memberships(m);
    let mut edges = vec![(0, 0); m.vertex_count()];
    for v in 1..=m.vertex_count() {
        let owners = &memberships[v - 1];
        debug_assert_eq!(owners.len(), 2);
        edges[position[v] - 1] = (owners[0] + 1, owners[1] + 1);
    }
    EdgeLabeledGraph::new(pcd.chain_count(), edges, LabelingMode::E)
}

/// A chain decomposition with a distinguished chain.  Equality compares the
/// flag as a chain, not as an index, since anchored trivial chains can
/// repeat.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlaggedPcd {
    pub pcd: Pcd,
    pub flag: usize,
}

impl PartialEq for FlaggedPcd {
    fn eq(&self, other: &Self) -> bool {
        self.pcd == other.pcd && self.flag_chain() == other.flag_chain()
    }
}

impl Eq for FlaggedPcd {}

impl FlaggedPcd {
    pub fn new(pcd: Pcd, flag: usize) -> Result<FlaggedPcd> {
        if flag >= pcd.chain_count() {
            return Err(Error::IndexOutOfRange(format!("flag {flag} exceeds chain count")));
        }
        Ok(FlaggedPcd { pcd, flag })
    }

    pub fn flag_chain(&self) -> &Chain {
        &self.pcd.chains()[self.flag]
    }
}

/// Dualizes a flagged decomposition.  The dual flag starts where the flag
/// started: it is the unique dual chain there when the flag was the only
/// chain starting there, otherwise it starts with the outgoing arc not used
/// by the flag, falling back to the trivial chain.
pub fn flagged_dual(m: &MedialDigraph, fp: &FlaggedPcd) -> Result<FlaggedPcd> {
    let dual = pcd_dual(m, &fp.pcd)?;
    let a = fp.flag_chain().first_vertex();
    let starters = |pcd: &Pcd| -> Vec<usize> {
        pcd.chains()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.first_vertex() == a)
            .map(|(i, _)| i)
            .collect()
    };
    let flag = if starters(&fp.pcd) == vec![fp.flag] {
        let cands = starters(&dual);
        match cands.as_slice() {
            [one] => *one,
            _ => return Err(Error::Defect("dual flag start is not unique".into())),
        }
    } else {
        let own_first = fp.flag_chain().arcs.first().copied();
        let other_out = m.out_arcs(a).into_iter().find(|&o| Some(o) != own_first);
        match other_out {
            Some(o) => dual
                .chains()
                .iter()
                .position(|c| c.arcs.first() == Some(&o))
                .ok_or_else(|| Error::Defect("dual chain for outgoing arc missing".into()))?,
            None => dual
                .chains()
                .iter()
                .position(|c| c.is_trivial() && c.anchor == a)
                .ok_or_else(|| Error::Defect("dual trivial flag missing".into()))?,
        }
    };
    FlaggedPcd::new(dual, flag)
}

/// All perfect chain decompositions of an acyclic binary digraph, one per
/// selector.
pub fn all_pcds(m: &MedialDigraph) -> Result<Vec<Pcd>> {
    let internal = m.internal_vertices();
    let mut out = Vec::new();
    for mask in 0..(1u64 << internal.len()) {
        let bits = internal
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, mask >> i & 1 == 1))
            .collect();
        out.push(pcd_from_selector(m, &Selector::new(bits))?);
    }
    Ok(out)
}

/// The ledger of the counting identity `#e-graphs = 2^ι·τ/α` for a binary
/// dag, with the brute-force count alongside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EgraphCount {
    pub internal: usize,
    pub sorts: usize,
    pub automorphisms: usize,
    pub distinct_egraphs: usize,
}

impl EgraphCount {
    /// `distinct · α == 2^ι · τ`, the formula cleared of its denominator.
    pub fn agrees(&self) -> bool {
        (self.distinct_egraphs as u128) * (self.automorphisms as u128)
            == (1u128 << self.internal) * (self.sorts as u128)
    }
}

/// Counts the distinct anonymous-vertex e-graphs with medial digraph `m`
/// two ways: by the `2^ι·τ/α` formula data and by brute enumeration over
/// all (selector, sort) pairs.
///
/// The formula holds for simple binary dags.  A parallel arc pair defeats
/// it: at a bidegree-(2,1) vertex fed by a double arc the two selector
/// choices differ only in which copy each chain uses, so they rebuild the
/// same graph while no vertex automorphism accounts for the collapse.
pub fn count_egraphs_of_dag(m: &MedialDigraph) -> Result<EgraphCount> {
    if !m.is_acyclic() {
        return Err(Error::CyclicMedial);
    }
    if !m.is_binary() {
        return Err(Error::Unsupported("counting needs a binary digraph".into()));
    }
    let sorts = m.topological_sorts();
    let pcds = all_pcds(m)?;
    let mut seen = BTreeSet::new();
    for pcd in &pcds {
        for sort in &sorts {
            seen.insert(egraph_from_pcd(m, pcd, sort)?.canonical_form());
        }
    }
    Ok(EgraphCount {
        internal: m.internal_vertices().len(),
        sorts: sorts.len(),
        automorphisms: m.automorphism_count(),
        distinct_egraphs: seen.len(),
    })
}

/// Every binary dag with `1..=max_vertices` vertices, one per isomorphism
/// class, represented with arcs pointing from smaller to larger vertex.
/// With `allow_parallel` false only simple dags are produced (the setting
/// where the counting formula is valid).
pub fn binary_dags_up_to_iso(max_vertices: usize, allow_parallel: bool) -> Vec<MedialDigraph> {
    let max_mult = if allow_parallel { 2 } else { 1 };
    let mut out = Vec::new();
    for k in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> =
            (1..=k).flat_map(|u| (u + 1..=k).map(move |v| (u, v))).collect();
        let mut seen = BTreeSet::new();
        let mut mults = vec![0u8; pairs.len()];
        loop {
            let mut indeg = vec![0usize; k];
            let mut outdeg = vec![0usize; k];
            let mut ok = true;
            for (i, &(u, v)) in pairs.iter().enumerate() {
                outdeg[u - 1] += mults[i] as usize;
                indeg[v - 1] += mults[i] as usize;
                if outdeg[u - 1] > 2 || indeg[v - 1] > 2 {
                    ok = false;
                    break;
                }
            }
            if ok {
                let arcs = pairs
                    .iter()
                    .zip(&mults)
                    .flat_map(|(&(u, v), &m)| {
                        std::iter::repeat_n(MedialArc { from: u, to: v, color: 0 }, m as usize)
                    })
                    .collect();
                let dag = MedialDigraph { vertices: k, arcs };
                if seen.insert(dag.canonical_key()) {
                    out.push(dag);
                }
            }
            // next multiplicity vector
            let mut i = 0;
            loop {
                if i == mults.len() {
                    break;
                }
                if mults[i] == max_mult {
                    mults[i] = 0;
                    i += 1;
                } else {
                    mults[i] += 1;
                    break;
                }
            }
            if i == mults.len() {
                break;
            }
        }
    }
    out
}
