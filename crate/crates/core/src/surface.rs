//! Surface invariants of edge-labeled graphs and the rotation-system side
//! of the theory: face tracing, duals of cellular embeddings, feedback arc
//! sets and peggability, subdivision repair, monodromy-preserving edge
//! attachment, and the complete-graph realization of admissible cycle types.
//!
//! A graph with a local edge order embeds properly in a bounded oriented
//! surface with all vertices on the boundary; everything downstream
//! is computable from the monodromy and the trails, so surfaces are carried
//! as invariants (Euler characteristic, boundary count, genus), while the
//! closed-surface picture is carried as an explicit rotation system.

use crate::egraph::{EdgeLabeledGraph, Factorization, LabelingMode};
use crate::medial::{MedialArc, MedialDigraph};
use crate::perm::Permutation;
use crate::trails::Leo;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Surface data of the proper embedding determined by an edge labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PegInvariants {
    pub euler_characteristic: i64,
    /// Disjoint cycles of the monodromy, fixed points included.
    pub boundary_components: usize,
    pub components: usize,
    /// Genus of each connected component's surface, then their sum.
    pub genus_per_component: Vec<i64>,
    pub genus_total: i64,
    pub boundary_cycles: Vec<Vec<usize>>,
}

/// Monodromy of a graph by direct multiplication of its edge transpositions
/// in label order (works in either labeling mode).
pub fn graph_monodromy(g: &EdgeLabeledGraph) -> Permutation {
    let mut images: Vec<usize> = (1..=g.vertex_count()).collect();
    for v in images.iter_mut() {
        for &(a, b) in g.edges() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }
    Permutation::from_images(images).expect("transpositions are bijections")
}

/// Computes the embedding invariants of an edge labeling.
pub fn peg_invariants(g: &EdgeLabeledGraph) -> Result<PegInvariants> {
    let mu = graph_monodromy(g);
    let cycles = mu.cycles();
    let components = g.components();
    let mut genus_per_component = Vec::with_capacity(components.len());
    for comp in &components {
        let vertex_set: BTreeSet<usize> = comp.iter().copied().collect();
        let n_c = comp.len() as i64;
        let m_c = g
            .edges()
            .iter()
            .filter(|(a, _)| vertex_set.contains(a))
            .count() as i64;
        let b_c = cycles.iter().filter(|c| vertex_set.contains(&c[0])).count() as i64;
        let doubled = 2 + m_c - n_c - b_c;
        if doubled < 0 || doubled % 2 != 0 {
            return Err(Error::Defect(format!(
                "component genus (2+{m_c}-{n_c}-{b_c})/2 is not a non-negative integer"
            )));
        }
        genus_per_component.push(doubled / 2);
    }
    Ok(PegInvariants {
        euler_characteristic: g.vertex_count() as i64 - g.edge_count() as i64,
        boundary_components: cycles.len(),
        components: components.len(),
        genus_total: genus_per_component.iter().sum(),
        genus_per_component,
        boundary_cycles: cycles,
    })
}

/// One end of an edge sitting in a vertex's rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub edge: usize,
    pub end: u8,
}

/// A cellular embedding in a closed oriented surface: a cyclic order of
/// darts at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    n: usize,
    edges: Vec<(usize, usize)>,
    rot: Vec<Vec<Dart>>,
}

impl RotationSystem {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, rot: Vec<Vec<Dart>>) -> Result<Self> {
        if rot.len() != n {
            return Err(Error::Parse(format!("expected {n} rotations, got {}", rot.len())));
        }
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::Parse(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::IndexOutOfRange(format!("edge ({u},{v}) outside [{n}]")));
            }
        }
        let rs = RotationSystem { n, edges, rot };
        let mut seen = vec![[false, false]; rs.edges.len()];
        for v in 1..=n {
            for d in &rs.rot[v - 1] {
                if d.edge == 0 || d.edge > rs.edges.len() || d.end > 1 {
                    return Err(Error::IndexOutOfRange(format!("dart {d:?}")));
                }
                if rs.dart_vertex(*d) != v {
                    return Err(Error::Parse(format!("dart {d:?} listed at wrong vertex {v}")));
                }
                if seen[d.edge - 1][d.end as usize] {
                    return Err(Error::Parse(format!("dart {d:?} listed twice")));
                }
                seen[d.edge - 1][d.end as usize] = true;
            }
        }
        if !seen.iter().all(|s| s[0] && s[1]) {
            return Err(Error::Parse("an edge end is missing from the rotations".into()));
        }
        Ok(rs)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rot[v - 1]
    }

    pub fn dart_vertex(&self, d: Dart) -> usize {
        let (a, b) = self.edges[d.edge - 1];
        if d.end == 0 {
            a
        } else {
            b
        }
    }

    /// The underlying edge-labeled graph, vertices anonymous.
    pub fn underlying_graph(&self) -> EdgeLabeledGraph {
        EdgeLabeledGraph::new(self.n, self.edges.clone(), LabelingMode::E)
            .expect("rotation system edges are loopless")
    }

    /// Completion of an edge labeling: each vertex's increasing edge order
    /// closed into a cyclic one.
    pub fn completion(g: &EdgeLabeledGraph) -> RotationSystem {
        let leo = Leo::from_graph(g);
        let rot = (1..=g.vertex_count())
            .map(|v| {
                leo.order_at(v)
                    .iter()
                    .map(|&e| {
                        let (a, _) = g.endpoints(e);
                        Dart { edge: e, end: u8::from(a != v) }
                    })
                    .collect()
            })
            .collect();
        RotationSystem { n: g.vertex_count(), edges: g.edges().to_vec(), rot }
    }

    fn next_in_rotation(&self, d: Dart) -> Dart {
        let v = self.dart_vertex(d);
        let list = &self.rot[v - 1];
        let pos = list.iter().position(|&x| x == d).expect("dart is in its rotation");
        list[(pos + 1) % list.len()]
    }

    fn opposite(&self, d: Dart) -> Dart {
        Dart { edge: d.edge, end: 1 - d.end }
    }

    /// Facial walks: each directed dart (represented by the dart at its
    /// tail vertex) lies on exactly one face.  After traversing an edge the
    /// walk continues with the dart after the arrival end in the arrival
    /// vertex's rotation.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut remaining: BTreeSet<Dart> = (1..=self.edges.len())
            .flat_map(|e| [Dart { edge: e, end: 0 }, Dart { edge: e, end: 1 }])
            .collect();
        let mut faces = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut face = Vec::new();
            let mut d = start;
            loop {
                remaining.remove(&d);
                face.push(d);
                d = self.next_in_rotation(self.opposite(d));
                if d == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }

    /// `(faces, genus per component, total genus)` with the Euler relation
    /// `n − m + f = 2 − 2g` checked per connected component.
    pub fn genus(&self) -> Result<(usize, Vec<i64>, i64)> {
        let faces = self.faces();
        let comps = self.underlying_graph().components();
        let mut genus_per = Vec::with_capacity(comps.len());
        for comp in &comps {
            let vs: BTreeSet<usize> = comp.iter().copied().collect();
            let n_c = comp.len() as i64;
            let m_c = self.edges.iter().filter(|(a, _)| vs.contains(a)).count() as i64;
            let f_c = if m_c == 0 {
                1
            } else {
                faces.iter().filter(|f| vs.contains(&self.dart_vertex(f[0]))).count() as i64
            };
            let doubled = 2 - (n_c - m_c + f_c);
            if doubled < 0 || doubled % 2 != 0 {
                return Err(Error::Defect("Euler relation gives a non-integral genus".into()));
            }
            genus_per.push(doubled / 2);
        }
        Ok((faces.len(), genus_per.clone(), genus_per.iter().sum()))
    }

    /// The dual embedding: one vertex per face, edges inherited, the
    /// rotation at a face being its facial walk with the global orientation
    /// reversed.  Fails when some edge has the same face on both sides,
    /// since the dual would need a loop.
    pub fn dual(&self) -> Result<RotationSystem> {
        let faces = self.faces();
        let mut face_of = vec![[usize::MAX; 2]; self.edges.len()];
        for (fi, face) in faces.iter().enumerate() {
            for d in face {
                face_of[d.edge - 1][d.end as usize] = fi;
            }
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (e, faces_of_e) in face_of.iter().enumerate() {
            if faces_of_e[0] == faces_of_e[1] {
                return Err(Error::Unsupported(format!(
                    "edge {} lies on one face only; its dual would be a loop",
                    e + 1
                )));
            }
            edges.push((faces_of_e[0] + 1, faces_of_e[1] + 1));
        }
        let mut rot: Vec<Vec<Dart>> = faces
            .iter()
            .map(|face| face.iter().rev().copied().collect())
            .collect();
        // an isolated vertex spans a sphere with a single empty face; its
        // dual is an isolated vertex again
        let isolated = (1..=self.n).filter(|&v| self.rot[v - 1].is_empty()).count();
        rot.extend(std::iter::repeat_n(Vec::new(), isolated));
        RotationSystem::new(faces.len() + isolated, edges, rot)
    }

    /// The medial digraph of the embedding: one arc per cyclically
    /// consecutive pair of darts at each vertex, colored by the vertex.
    /// Degree-one vertices contribute loop arcs.
    pub fn medial_digraph(&self) -> MedialDigraph {
        let mut arcs = Vec::new();
        for v in 1..=self.n {
            let list = &self.rot[v - 1];
            for (i, d) in list.iter().enumerate() {
                let next = list[(i + 1) % list.len()];
                arcs.push(MedialArc { from: d.edge, to: next.edge, color: v });
            }
        }
        MedialDigraph::new(self.edges.len(), arcs).expect("darts reference valid edges")
    }

    /// Canonical form of the oriented map under vertex and edge renaming;
    /// two rotation systems are dart-isomorphic iff the forms are equal.
    pub fn canonical_map_form(&self) -> Vec<Vec<(usize, usize)>> {
        let dart_count = 2 * self.edges.len();
        let dart_id = |d: Dart| (d.edge - 1) * 2 + d.end as usize;
        let sigma: Vec<usize> = (0..dart_count)
            .map(|id| {
                let d = Dart { edge: id / 2 + 1, end: (id % 2) as u8 };
                dart_id(self.next_in_rotation(d))
            })
            .collect();
        let alpha: Vec<usize> = (0..dart_count).map(|id| id ^ 1).collect();

        let encode_from = |root: usize| -> Vec<(usize, usize)> {
            let mut number = vec![usize::MAX; dart_count];
            let mut order = Vec::new();
            number[root] = 0;
            order.push(root);
            let mut head = 0;
            while head < order.len() {
                let d = order[head];
                head += 1;
                for nb in [sigma[d], alpha[d]] {
                    if number[nb] == usize::MAX {
                        number[nb] = order.len();
                        order.push(nb);
                    }
                }
            }
            order.iter().map(|&d| (number[sigma[d]], number[alpha[d]])).collect()
        };

        // per connected dart-component, the minimal encoding over roots
        let mut comp = vec![usize::MAX; dart_count];
        let mut ncomp = 0;
        for d in 0..dart_count {
            if comp[d] != usize::MAX {
                continue;
            }
            let mut stack = vec![d];
            comp[d] = ncomp;
            while let Some(x) = stack.pop() {
                for nb in [sigma[x], alpha[x]] {
                    if comp[nb] == usize::MAX {
                        comp[nb] = ncomp;
                        stack.push(nb);
                    }
                }
            }
            ncomp += 1;
        }
        let mut encodings: Vec<Vec<(usize, usize)>> = (0..ncomp)
            .map(|c| {
                (0..dart_count)
                    .filter(|&d| comp[d] == c)
                    .map(encode_from)
                    .min()
                    .unwrap()
            })
            .collect();
        // isolated vertices have no darts; record them by count
        let isolated = (1..=self.n).filter(|&v| self.rot[v - 1].is_empty()).count();
        encodings.push(vec![(isolated, isolated)]);
        encodings.sort();
        encodings
    }
}

/// A feedback arc set of an embedding's medial digraph, one arc per vertex
/// color, together with a topological sort of what remains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FasResult {
    pub arcs: Vec<MedialArc>,
    pub sort: Vec<usize>,
}

fn is_acyclic_without(m: &MedialDigraph, removed: &BTreeSet<usize>) -> bool {
    sort_without(m, removed).is_some()
}

/// Lexicographically least topological sort of `m` minus the given arcs.
fn sort_without(m: &MedialDigraph, removed: &BTreeSet<usize>) -> Option<Vec<usize>> {
    let k = m.vertex_count();
    let mut indeg = vec![0usize; k];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, a) in m.arcs().iter().enumerate() {
        if !removed.contains(&i) {
            indeg[a.to - 1] += 1;
            succ[a.from - 1].push(a.to);
        }
    }
    let mut ready: BTreeSet<usize> =
        (1..=k).filter(|&v| indeg[v - 1] == 0).collect();
    let mut sort = Vec::with_capacity(k);
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        sort.push(v);
        for &u in &succ[v - 1] {
            indeg[u - 1] -= 1;
            if indeg[u - 1] == 0 {
                ready.insert(u);
            }
        }
    }
    (sort.len() == k).then_some(sort)
}

/// Searches exactly for a feedback arc set containing one arc from each
/// vertex's monochromatic cycle; such a set has cardinality `n` and any
/// `n`-arc feedback arc set has this shape.
pub fn diverse_fas(rs: &RotationSystem) -> Option<FasResult> {
    let m = rs.medial_digraph();
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, a) in m.arcs().iter().enumerate() {
        by_color.entry(a.color).or_default().push(i);
    }
    let colors: Vec<Vec<usize>> = by_color.into_values().collect();

    fn search(
        m: &MedialDigraph,
        colors: &[Vec<usize>],
        idx: usize,
        removed: &mut BTreeSet<usize>,
    ) -> Option<BTreeSet<usize>> {
        if idx == colors.len() {
            return is_acyclic_without(m, removed).then(|| removed.clone());
        }
        // even removing every remaining arc of the open colors must break
        // all cycles, otherwise this branch is dead
        let mut everything = removed.clone();
        for color in &colors[idx..] {
            everything.extend(color.iter().copied());
        }
        if !is_acyclic_without(m, &everything) {
            return None;
        }
        for &arc in &colors[idx] {
            removed.insert(arc);
            if let Some(found) = search(m, colors, idx + 1, removed) {
                return Some(found);
            }
            removed.remove(&arc);
        }
        None
    }

    let removed = search(&m, &colors, 0, &mut BTreeSet::new())?;
    let sort = sort_without(&m, &removed).expect("search checked acyclicity");
    Some(FasResult {
        arcs: removed.iter().map(|&i| m.arcs()[i]).collect(),
        sort,
    })
}

/// Recovers an edge labeling whose completion is the given embedding, when
/// one exists: cut each rotation at its feedback arc and label by the
/// topological sort.
pub fn peggable(rs: &RotationSystem) -> Option<EdgeLabeledGraph> {
    let fas = diverse_fas(rs)?;
    let mut position = vec![0usize; rs.edge_count() + 1];
    for (i, &e) in fas.sort.iter().enumerate() {
        position[e] = i + 1;
    }
    let mut edges = vec![(0, 0); rs.edge_count()];
    for (e, &(u, v)) in rs.edges().iter().enumerate() {
        edges[position[e + 1] - 1] = (u, v);
    }
    let g = EdgeLabeledGraph::new(rs.vertex_count(), edges, LabelingMode::Ev)
        .expect("relabeling preserves looplessness");
    debug_assert_eq!(
        RotationSystem::completion(&g).canonical_map_form(),
        rs.canonical_map_form()
    );
    Some(g)
}

/// Splits each listed edge's medial vertex into its two color sides and
/// checks the arc set is acyclic; used to choose where subdivision repairs
/// an embedding.
fn split_acyclic(
    rs: &RotationSystem,
    m: &MedialDigraph,
    removed: &BTreeSet<usize>,
    split: &BTreeSet<usize>,
) -> bool {
    // vertex ids: edge e stays e; the far side of a split edge becomes
    // vertices+e
    let k = m.vertex_count();
    let side = |edge: usize, color: usize| -> usize {
        if split.contains(&edge) && rs.edges()[edge - 1].1 == color {
            k + edge
        } else {
            edge
        }
    };
    let mut arcs = Vec::new();
    for (i, a) in m.arcs().iter().enumerate() {
        if !removed.contains(&i) {
            arcs.push(MedialArc { from: side(a.from, a.color), to: side(a.to, a.color), color: 0 });
        }
    }
    MedialDigraph::new(2 * k, arcs).unwrap().is_acyclic()
}

/// Subdivides edges until the embedding is the completion of an edge
/// labeling.  Each chosen edge is subdivided twice; the two new two-sided
/// rotations contribute the feedback arcs that a diverse set was missing.
pub fn subdivide_to_peggable(rs: &RotationSystem) -> Result<RotationSystem> {
    if diverse_fas(rs).is_some() {
        return Ok(rs.clone());
    }
    let m = rs.medial_digraph();
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, a) in m.arcs().iter().enumerate() {
        by_color.entry(a.color).or_default().push(i);
    }
    let colors: Vec<Vec<usize>> = by_color.into_values().collect();

    // scan diverse one-per-color cuts in lexicographic order, looking for a
    // small set of edges whose splitting leaves the rest acyclic
    let mut chosen: Option<(BTreeSet<usize>, BTreeSet<usize>)> = None;
    let combos = colors.iter().map(|c| c.len()).product::<usize>();
    'outer: for combo in 0..combos.min(4096) {
        let mut cut = BTreeSet::new();
        let mut rest = combo;
        for color in &colors {
            cut.insert(color[rest % color.len()]);
            rest /= color.len();
        }
        let all_edges: Vec<usize> = (1..=rs.edge_count()).collect();
        for size in 0..=all_edges.len().min(3) {
            let mut pick = Vec::new();
            if choose_split(rs, &m, &cut, &all_edges, 0, size, &mut pick) {
                chosen = Some((cut, pick.into_iter().collect()));
                break 'outer;
            }
        }
    }
    let (cut, split) = chosen.unwrap_or_else(|| {
        // splitting every edge always leaves disjoint color paths
        let mut cut = BTreeSet::new();
        for color in &colors {
            cut.insert(color[0]);
        }
        (cut, (1..=rs.edge_count()).collect())
    });
    debug_assert!(split_acyclic(rs, &m, &cut, &split));

    let mut n = rs.vertex_count();
    let mut edges = rs.edges().to_vec();
    let mut rot = (1..=rs.vertex_count()).map(|v| rs.rotation(v).to_vec()).collect::<Vec<_>>();
    for &e in &split {
        let (u, w) = edges[e - 1];
        let (x1, x2) = (n + 1, n + 2);
        n += 2;
        // e keeps its u end and now reaches x1; two fresh edges chain on
        edges[e - 1] = (u, x1);
        edges.push((x1, x2));
        let f1 = edges.len();
        edges.push((x2, w));
        let f2 = edges.len();
        let at_w = rot[w - 1]
            .iter()
            .position(|d| *d == Dart { edge: e, end: 1 })
            .expect("edge end in rotation");
        rot[w - 1][at_w] = Dart { edge: f2, end: 1 };
        rot.push(vec![Dart { edge: e, end: 1 }, Dart { edge: f1, end: 0 }]);
        rot.push(vec![Dart { edge: f1, end: 1 }, Dart { edge: f2, end: 0 }]);
    }
    let out = RotationSystem::new(n, edges, rot)?;
    if diverse_fas(&out).is_none() {
        return Err(Error::Defect("subdivision did not produce a peggable embedding".into()));
    }
    Ok(out)
}

fn choose_split(
    rs: &RotationSystem,
    m: &MedialDigraph,
    cut: &BTreeSet<usize>,
    candidates: &[usize],
    from: usize,
    size: usize,
    pick: &mut Vec<usize>,
) -> bool {
    if pick.len() == size {
        return split_acyclic(rs, m, cut, &pick.iter().copied().collect());
    }
    for i in from..candidates.len() {
        pick.push(candidates[i]);
        if choose_split(rs, m, cut, candidates, i + 1, size, pick) {
            return true;
        }
        pick.pop();
    }
    false
}

/// Attaches two new edges from `v` across the non-incident edge labeled
/// `label`: labels above it shift up by two, the edge itself moves to the
/// middle slot, and the new edges to its endpoints take the outer slots.
/// The monodromy is unchanged.
pub fn t_operation(g: &EdgeLabeledGraph, v: usize, label: usize) -> Result<EdgeLabeledGraph> {
    if label == 0 || label > g.edge_count() {
        return Err(Error::IndexOutOfRange(format!("no edge labeled {label}")));
    }
    if v == 0 || v > g.vertex_count() {
        return Err(Error::IndexOutOfRange(format!("no vertex {v}")));
    }
    let (a, b) = g.endpoints(label);
    if v == a || v == b {
        return Err(Error::VertexIncidentToEdge { vertex: v, edge: label });
    }
    let mut edges = Vec::with_capacity(g.edge_count() + 2);
    edges.extend_from_slice(&g.edges()[..label - 1]);
    edges.push((v, a));
    edges.push((a, b));
    edges.push((v, b));
    edges.extend_from_slice(&g.edges()[label..]);
    EdgeLabeledGraph::new(g.vertex_count(), edges, g.mode())
}

fn complete_graph_feasible(n: usize, parts: &[usize]) -> Result<()> {
    let total: usize = parts.iter().sum();
    if total != n || parts.contains(&0) {
        return Err(Error::InfeasibleType(format!("{parts:?} is not a partition of {n}")));
    }
    let b = parts.len();
    let chi = n as i64 - (n * (n - 1) / 2) as i64;
    if b > n || (b as i64 - chi).rem_euclid(2) != 0 {
        return Err(Error::InfeasibleType(format!(
            "{parts:?}: need at most {n} parts with the parity of χ(K_{n}) = {chi}"
        )));
    }
    Ok(())
}

fn complete_graph_base(n: usize, parts: &[usize]) -> Result<EdgeLabeledGraph> {
    let pairs: &[(usize, usize)] = match (n, parts) {
        (1, [1]) => &[],
        (2, [2]) => &[(1, 2)],
        (3, [2, 1]) => &[(1, 2), (1, 3), (2, 3)],
        (4, [3, 1]) => &[(3, 4), (2, 4), (2, 3), (1, 2), (1, 4), (1, 3)],
        (4, [2, 2]) => &[(3, 4), (2, 3), (2, 4), (1, 2), (1, 4), (1, 3)],
        (4, [1, 1, 1, 1]) => &[(3, 4), (2, 3), (1, 4), (2, 4), (1, 3), (1, 2)],
        _ => return Err(Error::Defect(format!("missing base case K_{n} with type {parts:?}"))),
    };
    Ok(EdgeLabeledGraph::from_factorization(&Factorization::from_pairs(n, pairs)?))
}

/// Pairs up `vertices` and applies one attachment per pair from `v`.
fn t_moves_from(
    mut g: EdgeLabeledGraph,
    v: usize,
    vertices: &[usize],
) -> Result<EdgeLabeledGraph> {
    for pair in vertices.chunks(2) {
        let &[a, b] = pair else {
            return Err(Error::Defect("odd number of vertices to pair".into()));
        };
        let label = (1..=g.edge_count())
            .find(|&l| g.endpoints(l) == (a.min(b), a.max(b)))
            .ok_or_else(|| Error::Defect(format!("edge {{{a},{b}}} missing")))?;
        g = t_operation(&g, v, label)?;
    }
    Ok(g)
}

/// Builds an edge labeling of the complete graph `K_n` whose monodromy has
/// the requested cycle type; errors when the type fails the two necessary
/// conditions (at most `n` parts, parity of the Euler characteristic).
pub fn realize_kn_type(n: usize, partition: &[usize]) -> Result<EdgeLabeledGraph> {
    complete_graph_feasible(n, partition)?;
    let mut parts = partition.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let g = realize_rec(n, &parts)?;
    let mu = graph_monodromy(&g);
    if mu.cycle_type() != parts {
        return Err(Error::Defect(format!(
            "construction for K_{n} type {parts:?} produced {:?}",
            mu.cycle_type()
        )));
    }
    Ok(g)
}

fn realize_rec(n: usize, parts: &[usize]) -> Result<EdgeLabeledGraph> {
    if n <= 4 {
        return complete_graph_base(n, parts);
    }
    let b = parts.len();
    if n % 2 == 1 {
        // attach the new vertex to k−1 fixed points, closing a k-cycle
        // through it, for an odd part k (one exists by parity)
        let k = parts
            .iter()
            .copied()
            .find(|p| p % 2 == 1)
            .ok_or_else(|| Error::Defect("odd n needs an odd part".into()))?;
        let mut sub: Vec<usize> = parts.to_vec();
        sub.remove(sub.iter().position(|&p| p == k).unwrap());
        sub.extend(std::iter::repeat_n(1, k - 1));
        sub.sort_unstable_by(|a, b| b.cmp(a));
        let prev = realize_rec(n - 1, &sub)?;
        let mu = graph_monodromy(&prev);
        let fixed: Vec<usize> =
            (1..=n - 1).filter(|&v| mu.apply(v) == v).take(k - 1).collect();
        if fixed.len() + 1 != k {
            return Err(Error::Defect("not enough fixed points to close the cycle".into()));
        }
        let mut edges = prev.edges().to_vec();
        for &f in &fixed {
            edges.push((f, n));
        }
        let g = EdgeLabeledGraph::new(n, edges, LabelingMode::Ev)?;
        let rest: Vec<usize> =
            (1..=n - 1).filter(|v| !fixed.contains(v)).collect();
        t_moves_from(g, n, &rest)
    } else if b == n {
        // identity type: weld two identity blocks with attachments
        let sub = vec![1usize; n - 4];
        let inner = realize_rec(n - 4, &sub)?;
        let block = complete_graph_base(4, &[1, 1, 1, 1])?;
        let mut edges = inner.edges().to_vec();
        edges.extend(block.edges().iter().map(|&(u, v)| (u + n - 4, v + n - 4)));
        let mut g = EdgeLabeledGraph::new(n, edges, LabelingMode::Ev)?;
        let old: Vec<usize> = (1..=n - 4).collect();
        for v in n - 3..=n {
            g = t_moves_from(g, v, &old)?;
        }
        Ok(g)
    } else {
        // grow the largest part by inserting the new vertex into its cycle
        let k = parts[0];
        debug_assert!(k > 1);
        let mut sub = parts.to_vec();
        sub[0] = k - 1;
        sub.sort_unstable_by(|a, b| b.cmp(a));
        let prev = realize_rec(n - 1, &sub)?;
        let mu = graph_monodromy(&prev);
        let u = mu
            .cycles()
            .into_iter()
            .filter(|c| c.len() == k - 1)
            .map(|c| c[0])
            .min()
            .ok_or_else(|| Error::Defect("expected a cycle of the reduced length".into()))?;
        let mut edges = prev.edges().to_vec();
        edges.push((u, n));
        let g = EdgeLabeledGraph::new(n, edges, LabelingMode::Ev)?;
        let rest: Vec<usize> = (1..=n - 1).filter(|&v| v != u).collect();
        t_moves_from(g, n, &rest)
    }
}

/// Completion of a factorization of the identity; the closed surface then
/// has the same region incidences as the bounded one.
pub fn ceg_of_identity_factorization(rho: &Factorization) -> Result<RotationSystem> {
    let mu = rho.monodromy();
    if !mu.is_identity() {
        return Err(Error::NotIdentityMonodromy(mu.to_string()));
    }
    Ok(RotationSystem::completion(&EdgeLabeledGraph::from_factorization(rho)))
}

/// Whether the embedding is self-dual: its underlying graph and its dual's
/// underlying graph are isomorphic with labels forgotten.
pub fn selfdual_check(rs: &RotationSystem) -> Result<bool> {
    let dual = rs.dual()?;
    Ok(unlabeled_iso(&rs.underlying_graph(), &dual.underlying_graph()))
}

/// Multigraph isomorphism with both edge labels and vertex names forgotten.
pub fn unlabeled_iso(g1: &EdgeLabeledGraph, g2: &EdgeLabeledGraph) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let n = g1.vertex_count();
    let multiset = |g: &EdgeLabeledGraph, perm: &[usize]| -> BTreeMap<(usize, usize), usize> {
        let mut map = BTreeMap::new();
        for &(u, v) in g.edges() {
            let (a, b) = (perm[u - 1], perm[v - 1]);
            *map.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        map
    };
    let identity: Vec<usize> = (1..=n).collect();
    let target = multiset(g2, &identity);
    let deg2: Vec<usize> = (1..=n).map(|v| g2.degree(v)).collect();

    fn assign(
        g1: &EdgeLabeledGraph,
        target: &BTreeMap<(usize, usize), usize>,
        deg2: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
        multiset: &dyn Fn(&EdgeLabeledGraph, &[usize]) -> BTreeMap<(usize, usize), usize>,
    ) -> bool {
        let n = deg2.len();
        if v > n {
            return &multiset(g1, perm) == target;
        }
        for img in 1..=n {
            if !used[img - 1] && g1.degree(v) == deg2[img - 1] {
                perm[v - 1] = img;
                used[img - 1] = true;
                if assign(g1, target, deg2, perm, used, v + 1, multiset) {
                    return true;
                }
                used[img - 1] = false;
            }
        }
        false
    }

    let mut perm = vec![0usize; n];
    let mut used = vec![false; n];
    assign(g1, &target, &deg2, &mut perm, &mut used, 1, &multiset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{act, parse_word, act_loop};
    use crate::braid::garside_word;

    fn fig1() -> EdgeLabeledGraph {
        let rho =
            Factorization::from_pairs(4, &[(3, 4), (1, 3), (1, 2), (3, 4), (2, 3)]).unwrap();
        EdgeLabeledGraph::from_factorization(&rho)
    }

    fn complete(n: usize) -> Vec<(usize, usize)> {
        (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect()
    }

    /// The genus-0 embedding of K4: edges a..f = 1..6 with rotations
    /// 1:(a b c), 2:(f a d), 3:(b f e), 4:(d c e).
    fn k4_sphere() -> RotationSystem {
        let edges = vec![(1, 2), (1, 3), (1, 4), (2, 4), (3, 4), (2, 3)];
        let d = |edge: usize, end: u8| Dart { edge, end };
        let rot = vec![
            vec![d(1, 0), d(2, 0), d(3, 0)],
            vec![d(6, 0), d(1, 1), d(4, 0)],
            vec![d(2, 1), d(6, 1), d(5, 0)],
            vec![d(4, 1), d(3, 1), d(5, 1)],
        ];
        RotationSystem::new(4, edges, rot).unwrap()
    }

    /// Two vertices joined through a path edge and a triple edge; its
    /// medial digraph admits no diverse feedback arc set.
    fn unpeggable_plane_graph() -> RotationSystem {
        let edges = vec![(1, 2), (2, 3), (2, 3), (2, 3)];
        let d = |edge: usize, end: u8| Dart { edge, end };
        let rot = vec![
            vec![d(1, 0)],
            vec![d(1, 1), d(4, 0), d(3, 0), d(2, 0)],
            vec![d(2, 1), d(3, 1), d(4, 1)],
        ];
        RotationSystem::new(3, edges, rot).unwrap()
    }

    #[test]
    fn invariants_of_worked_example() {
        let inv = peg_invariants(&fig1()).unwrap();
        assert_eq!(inv.euler_characteristic, -1);
        assert_eq!(inv.boundary_components, 1);
        assert_eq!(inv.genus_total, 1);
        assert_eq!(inv.components, 1);
    }

    #[test]
    fn trees_embed_in_disks() {
        let g = EdgeLabeledGraph::new(4, vec![(1, 2), (2, 3), (2, 4)], LabelingMode::Ev).unwrap();
        let inv = peg_invariants(&g).unwrap();
        assert_eq!(
            (inv.euler_characteristic, inv.boundary_components, inv.genus_total),
            (1, 1, 0)
        );
    }

    #[test]
    fn k6_invariants() {
        let rho1 = Factorization::from_pairs(
            6,
            &[
                (1, 2), (3, 5), (1, 3), (4, 6), (2, 4), (1, 4), (5, 6), (1, 6),
                (2, 3), (2, 5), (1, 5), (3, 4), (4, 5), (2, 6), (3, 6),
            ],
        )
        .unwrap();
        let g = EdgeLabeledGraph::from_factorization(&rho1);
        assert_eq!(rho1.monodromy().cycle_type(), vec![2, 2, 2]);
        let inv = peg_invariants(&g).unwrap();
        assert_eq!(
            (inv.euler_characteristic, inv.boundary_components, inv.genus_total),
            (-9, 3, 4)
        );
    }

    #[test]
    fn completion_and_faces() {
        let single = EdgeLabeledGraph::new(2, vec![(1, 2)], LabelingMode::Ev).unwrap();
        let rs = RotationSystem::completion(&single);
        let (f, _, g) = rs.genus().unwrap();
        assert_eq!((f, g), (1, 0));

        let rs = RotationSystem::completion(&fig1());
        let (f, _, g) = rs.genus().unwrap();
        assert_eq!((f, g), (1, 1));
    }

    #[test]
    fn k4_sphere_has_four_triangles() {
        let rs = k4_sphere();
        let faces = rs.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        let (_, _, g) = rs.genus().unwrap();
        assert_eq!(g, 0);
    }

    #[test]
    fn dual_of_k4_is_k4() {
        let rs = k4_sphere();
        let dual = rs.dual().unwrap();
        assert!(unlabeled_iso(&rs.underlying_graph(), &dual.underlying_graph()));
        assert!(selfdual_check(&rs).unwrap());
        let dd = dual.dual().unwrap();
        assert_eq!(dd.canonical_map_form(), rs.canonical_map_form());
    }

    #[test]
    fn k5_torus_from_braid_action() {
        let rho05 = Factorization::from_pairs(
            5,
            &[(1, 2), (1, 2), (2, 3), (2, 3), (3, 4), (3, 4), (4, 5), (4, 5), (1, 5), (1, 5)],
        )
        .unwrap();
        // δ_{2,10} σ3⁻¹ σ5⁻¹ σ7⁻¹ σ9⁻¹
        let beta = parse_word("s9 s8 s7 s6 s5 s4 s3 s2 S3 S5 S7 S9", 10).unwrap();
        let moved = act_loop(&rho05, &beta).unwrap();
        assert_eq!(
            moved,
            Factorization::from_pairs(
                5,
                &[(1, 2), (2, 5), (2, 3), (1, 3), (3, 4), (2, 4), (4, 5), (3, 5), (1, 5), (1, 4)],
            )
            .unwrap()
        );
        let g = EdgeLabeledGraph::from_factorization(&moved);
        let mut pairs = g.edges().to_vec();
        pairs.sort_unstable();
        assert_eq!(pairs, complete(5));

        // the crossing-reversed word computes the dual, again complete
        let starred = act_loop(&rho05, &beta.star()).unwrap();
        assert_eq!(
            starred,
            Factorization::from_pairs(
                5,
                &[(1, 2), (1, 5), (3, 5), (2, 5), (2, 4), (2, 3), (1, 3), (3, 4), (4, 5), (1, 4)],
            )
            .unwrap()
        );
        assert_eq!(crate::trails::dual_factorization(&moved), starred);

        let rs = ceg_of_identity_factorization(&moved).unwrap();
        let (f, _, genus) = rs.genus().unwrap();
        assert_eq!((f, genus), (5, 1));
        assert!(selfdual_check(&rs).unwrap());
        let dd = rs.dual().unwrap().dual().unwrap();
        assert_eq!(dd.canonical_map_form(), rs.canonical_map_form());
    }

    #[test]
    fn k4_example_is_selfdual() {
        let rho04 = Factorization::from_pairs(
            4,
            &[(1, 2), (1, 2), (2, 3), (2, 3), (3, 4), (3, 4)],
        )
        .unwrap();
        let beta = parse_word("s2 s4 S3", 6).unwrap();
        let moved = act_loop(&rho04, &beta).unwrap();
        assert_eq!(
            moved,
            Factorization::from_pairs(4, &[(1, 2), (1, 3), (2, 4), (1, 4), (2, 3), (3, 4)])
                .unwrap()
        );
        // the crossing-reversed word gives the dual labeling, also complete
        let starred = act_loop(&rho04, &beta.star()).unwrap();
        assert_eq!(
            starred,
            Factorization::from_pairs(4, &[(1, 2), (2, 3), (1, 4), (1, 3), (2, 4), (3, 4)])
                .unwrap()
        );
        assert_eq!(crate::trails::dual_factorization(&moved), starred);
        let rs = ceg_of_identity_factorization(&moved).unwrap();
        let (_, _, genus) = rs.genus().unwrap();
        assert_eq!(genus, 0);
        assert!(selfdual_check(&rs).unwrap());
    }

    #[test]
    fn k4_fas_reproduces_the_known_labeling() {
        let rs = k4_sphere();
        let fas = diverse_fas(&rs).expect("the sphere K4 is peggable");
        assert_eq!(fas.arcs.len(), 4);
        let colors: BTreeSet<usize> = fas.arcs.iter().map(|a| a.color).collect();
        assert_eq!(colors.len(), 4);

        let g = peggable(&rs).unwrap();
        // some diverse cut with some sort gives exactly the known labeling
        let known =
            Factorization::from_pairs(4, &[(1, 2), (1, 3), (2, 4), (1, 4), (2, 3), (3, 4)])
                .unwrap();
        let m = rs.medial_digraph();
        let cut: BTreeSet<usize> = (0..m.arc_count())
            .filter(|&i| {
                let a = m.arcs()[i];
                [(3, 1), (6, 1), (5, 2), (5, 4)].contains(&(a.from, a.to))
            })
            .collect();
        assert_eq!(cut.len(), 4);
        let sort = sort_without(&m, &cut).unwrap();
        assert_eq!(sort, vec![1, 2, 4, 3, 6, 5]);
        let mut edges = vec![(0, 0); 6];
        for (i, &e) in sort.iter().enumerate() {
            edges[i] = rs.edges()[e - 1];
        }
        let relabeled = EdgeLabeledGraph::new(4, edges, LabelingMode::Ev).unwrap();
        assert_eq!(relabeled.to_factorization().unwrap(), known);
        // and whatever cut peggable picked, its completion is the embedding
        assert_eq!(
            RotationSystem::completion(&g).canonical_map_form(),
            rs.canonical_map_form()
        );
    }

    #[test]
    fn plane_graph_without_diverse_fas() {
        let rs = unpeggable_plane_graph();
        assert!(diverse_fas(&rs).is_none());
        assert!(peggable(&rs).is_none());

        // every labeling of that graph has a 3-cycle monodromy
        let base = [(1, 2), (2, 3), (2, 3), (2, 3)];
        let mut labelings = 0;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let perm = [a, b, c, d];
                        let mut sorted = perm;
                        sorted.sort_unstable();
                        if sorted != [0, 1, 2, 3] {
                            continue;
                        }
                        let mut edges = vec![(0, 0); 4];
                        for (slot, &target) in perm.iter().enumerate() {
                            edges[target] = base[slot];
                        }
                        let g = EdgeLabeledGraph::new(3, edges, LabelingMode::Ev).unwrap();
                        assert_eq!(graph_monodromy(&g).cycle_type(), vec![3]);
                        labelings += 1;
                    }
                }
            }
        }
        assert_eq!(labelings, 24);
    }

    #[test]
    fn subdivision_repairs_the_plane_graph() {
        let rs = unpeggable_plane_graph();
        let fixed = subdivide_to_peggable(&rs).unwrap();
        assert!(peggable(&fixed).is_some());
        assert!(fixed.vertex_count() > rs.vertex_count());
        // each gadget adds a pair of opposite two-sided rotations
        let added = fixed.vertex_count() - rs.vertex_count();
        assert_eq!(added % 2, 0);
        assert_eq!(fixed.edge_count() - rs.edge_count(), added);
        // every new vertex contributes a pair of opposite arcs of a fresh
        // color to the medial digraph
        let m = fixed.medial_digraph();
        for v in rs.vertex_count() + 1..=fixed.vertex_count() {
            let arcs: Vec<_> = m.arcs().iter().filter(|a| a.color == v).collect();
            assert_eq!(arcs.len(), 2);
            assert_eq!((arcs[0].from, arcs[0].to), (arcs[1].to, arcs[1].from));
        }

        let already = k4_sphere();
        assert_eq!(subdivide_to_peggable(&already).unwrap(), already);
    }

    #[test]
    fn closure_and_dual_commute_exactly_for_identity_monodromy() {
        // identity monodromy: the dual of the completion IS the completion
        // of the dual, as embeddings
        for rho in [
            Factorization::from_pairs(4, &[(1, 2), (1, 3), (2, 4), (1, 4), (2, 3), (3, 4)])
                .unwrap(),
            Factorization::from_pairs(3, &[(1, 2), (2, 3), (2, 3), (1, 2)]).unwrap(),
            Factorization::from_pairs(2, &[(1, 2), (1, 2)]).unwrap(),
        ] {
            assert!(rho.monodromy().is_identity());
            let lhs = RotationSystem::completion(&EdgeLabeledGraph::from_factorization(&rho))
                .dual()
                .unwrap();
            let dual = crate::trails::dual_factorization(&rho);
            let rhs = RotationSystem::completion(&EdgeLabeledGraph::from_factorization(&dual));
            assert_eq!(lhs.canonical_map_form(), rhs.canonical_map_form(), "{rho}");
        }

        // and the standard small case where it fails without that
        // hypothesis: ρ = (1 3),(1 2),(1 3), whose monodromy is (2 3).
        // One side's dual needs a loop; the other is a triple edge.
        let rho = Factorization::from_pairs(3, &[(1, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!rho.monodromy().is_identity());
        let lhs = RotationSystem::completion(&EdgeLabeledGraph::from_factorization(&rho)).dual();
        assert!(matches!(lhs, Err(Error::Unsupported(_))));
        let dual = crate::trails::dual_factorization(&rho);
        let rhs = RotationSystem::completion(&EdgeLabeledGraph::from_factorization(&dual))
            .dual()
            .unwrap();
        assert_eq!(rhs.underlying_graph().edges(), &[(1, 2), (1, 2), (1, 2)]);
    }

    #[test]
    fn known_k4_labeling_completes_to_the_sphere_embedding() {
        let rho =
            Factorization::from_pairs(4, &[(1, 2), (1, 3), (2, 4), (1, 4), (2, 3), (3, 4)])
                .unwrap();
        let completion = RotationSystem::completion(&EdgeLabeledGraph::from_factorization(&rho));
        assert_eq!(completion.canonical_map_form(), k4_sphere().canonical_map_form());
    }

    #[test]
    fn completion_then_peggable_round_trips() {
        for g in [
            fig1(),
            EdgeLabeledGraph::new(3, vec![(1, 2), (2, 3), (1, 3)], LabelingMode::Ev).unwrap(),
            EdgeLabeledGraph::new(2, vec![(1, 2), (1, 2)], LabelingMode::Ev).unwrap(),
        ] {
            let rs = RotationSystem::completion(&g);
            let back = peggable(&rs).expect("completions are peggable");
            assert_eq!(
                RotationSystem::completion(&back).canonical_map_form(),
                rs.canonical_map_form()
            );
        }
    }

    #[test]
    fn t_operation_preserves_monodromy() {
        let g = EdgeLabeledGraph::new(4, vec![(1, 2), (1, 3), (2, 3)], LabelingMode::Ev).unwrap();
        let before = graph_monodromy(&g);
        let after = t_operation(&g, 4, 3).unwrap();
        assert_eq!(graph_monodromy(&after), before);
        assert_eq!(after.edge_count(), g.edge_count() + 2);
        assert_eq!(after.degree(4), g.degree(4) + 2);
        assert_eq!(after.endpoints(3), (2, 4));
        assert_eq!(after.endpoints(4), (2, 3));
        assert_eq!(after.endpoints(5), (3, 4));

        assert!(matches!(
            t_operation(&g, 1, 1),
            Err(Error::VertexIncidentToEdge { .. })
        ));
    }

    #[test]
    fn realize_base_cases() {
        let g = realize_kn_type(4, &[3, 1]).unwrap();
        assert_eq!(graph_monodromy(&g), Permutation::parse("(1 2 3)", 4).unwrap());
        let g = realize_kn_type(4, &[1, 1, 1, 1]).unwrap();
        assert!(graph_monodromy(&g).is_identity());
        let g = realize_kn_type(6, &[2, 2, 2]).unwrap();
        assert_eq!(graph_monodromy(&g).cycle_type(), vec![2, 2, 2]);
        let mut pairs = g.edges().to_vec();
        pairs.sort_unstable();
        assert_eq!(pairs, complete(6));
    }

    #[test]
    fn realize_rejects_infeasible_types() {
        assert!(matches!(realize_kn_type(4, &[4]), Err(Error::InfeasibleType(_))));
        assert!(matches!(realize_kn_type(4, &[2, 1, 1]), Err(Error::InfeasibleType(_))));
        assert!(matches!(realize_kn_type(3, &[3]), Err(Error::InfeasibleType(_))));
        assert!(matches!(realize_kn_type(5, &[3, 2]), Err(Error::InfeasibleType(_))));
    }

    #[test]
    fn garside_dual_and_invariants_commute() {
        // invariants of the dual: same χ and b, boundary cycles inverted
        let rho =
            Factorization::from_pairs(4, &[(3, 4), (1, 3), (1, 2), (3, 4), (2, 3)]).unwrap();
        let g = EdgeLabeledGraph::from_factorization(&rho);
        let dual = EdgeLabeledGraph::from_factorization(&crate::trails::dual_factorization(&rho));
        let a = peg_invariants(&g).unwrap();
        let b = peg_invariants(&dual).unwrap();
        assert_eq!(a.euler_characteristic, b.euler_characteristic);
        assert_eq!(a.boundary_components, b.boundary_components);
        assert_eq!(graph_monodromy(&dual), graph_monodromy(&g).inverse());
        // sanity: the half twist computes the same dual
        let w = garside_word(5);
        assert_eq!(
            act(&rho, &w).unwrap().reverse(),
            dual.to_factorization().unwrap()
        );
    }

    #[test]
    fn dual_embedding_graph_is_the_dual_factorization_graph() {
        // for identity monodromy, the dual embedding's underlying graph is
        // the graph of the dual factorization
        for rho in [
            Factorization::from_pairs(3, &[(1, 2), (2, 3), (2, 3), (1, 2)]).unwrap(),
            Factorization::from_pairs(4, &[(1, 2), (3, 4), (2, 3), (2, 3), (3, 4), (1, 2)])
                .unwrap(),
        ] {
            let rs = ceg_of_identity_factorization(&rho).unwrap();
            let dual_graph =
                EdgeLabeledGraph::from_factorization(&crate::trails::dual_factorization(&rho));
            assert!(unlabeled_iso(
                &rs.dual().unwrap().underlying_graph(),
                &dual_graph.forget_vertex_labels()
            ));
        }
    }

    #[test]
    fn selfdual_concat_with_dual_partner() {
        // gluing a bounded embedding to its dual along the boundary is
        // self-dual when the block monodromy is the identity
        for block in [
            Factorization::from_pairs(3, &[(1, 2), (2, 3), (2, 3), (1, 2)]).unwrap(),
            Factorization::from_pairs(4, &[(1, 2), (3, 4), (2, 3), (2, 3), (3, 4), (1, 2)])
                .unwrap(),
            Factorization::from_pairs(3, &[(1, 3), (1, 3), (1, 2), (1, 2)]).unwrap(),
        ] {
            assert!(block.monodromy().is_identity());
            let partner = crate::trails::dual_factorization(&block);
            let joined = block.concat(&partner).unwrap();
            let rs = ceg_of_identity_factorization(&joined).unwrap();
            assert!(selfdual_check(&rs).unwrap(), "{block}");
        }

        // with non-identity block monodromy the faces pair each trail with
        // the dual trail at the monodromy image, and self-duality can fail:
        // here the face sizes are {2,2,4,4} against degrees {3,3,3,3}
        let rho = Factorization::from_pairs(4, &[(1, 2), (3, 4), (2, 3)]).unwrap();
        let joined = rho.concat(&crate::trails::dual_factorization(&rho)).unwrap();
        let rs = ceg_of_identity_factorization(&joined).unwrap();
        let mut sizes: Vec<usize> = rs.faces().iter().map(|f| f.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 4, 4]);
        assert!(!selfdual_check(&rs).unwrap());
    }

    #[test]
    fn one_edge_sphere_has_a_loop_dual() {
        let g = EdgeLabeledGraph::new(2, vec![(1, 2)], LabelingMode::Ev).unwrap();
        let rs = RotationSystem::completion(&g);
        assert!(matches!(rs.dual(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn identity_precondition() {
        let rho = Factorization::from_pairs(3, &[(1, 2)]).unwrap();
        assert!(matches!(
            ceg_of_identity_factorization(&rho),
            Err(Error::NotIdentityMonodromy(_))
        ));
    }

    #[test]
    fn ceg_medial_digraph_has_monochromatic_cycles() {
        let rs = k4_sphere();
        let m = rs.medial_digraph();
        assert_eq!(m.arc_count(), 12);
        for v in 1..=4 {
            let arcs: Vec<_> = m.arcs().iter().filter(|a| a.color == v).collect();
            assert_eq!(arcs.len(), 3);
        }
        // degree-one vertices give loops
        let rs = unpeggable_plane_graph();
        let m = rs.medial_digraph();
        assert!(m.arcs().iter().any(|a| a.from == a.to));
    }
}
