//! Minimal factorizations of cycles and labeled trees: the classical
//! correspondence with rooted edge-labeled trees, the label-sliding
//! bijection to vertex-labeled trees, the structural bijection φ with its
//! two preserved statistics, rooted duality, and the enumeration of
//! self-dual edge-labeled trees against the up/down numbers.

use crate::egraph::{CanonicalForm, EdgeLabeledGraph, Factorization, LabelingMode};
use crate::exec;
use crate::medial::{all_pcds, egraph_from_pcd, MedialArc, MedialDigraph};
use crate::perm::Permutation;
use crate::trails::dual_graph;
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// An edge-labeled tree with a distinguished root vertex.  Vertex names are
/// concrete for bookkeeping; isomorphism comparisons go through
/// [`RootedETree::canonical_form`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedETree {
    graph: EdgeLabeledGraph,
    root: usize,
}

impl RootedETree {
    pub fn new(graph: EdgeLabeledGraph, root: usize) -> Result<Self> {
        if !graph.stats().is_tree {
            return Err(Error::Parse("rooted e-tree must be a tree".into()));
        }
        if root == 0 || root > graph.vertex_count() {
            return Err(Error::IndexOutOfRange(format!("root {root}")));
        }
        Ok(RootedETree { graph, root })
    }

    pub fn graph(&self) -> &EdgeLabeledGraph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        self.graph.canonical_form_rooted(self.root)
    }
}

/// A tree with vertices labeled `1..n` and unlabeled edges, stored with its
/// edge list sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VTree {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl VTree {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = EdgeLabeledGraph::new(n, edges, LabelingMode::Ev)?;
        if !g.stats().is_tree {
            return Err(Error::Parse("not a tree".into()));
        }
        let mut edges = g.edges().to_vec();
        edges.sort_unstable();
        Ok(VTree { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Histogram of a statistic over `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution(pub Vec<u64>);

impl Distribution {
    fn from_values(n: usize, values: impl Iterator<Item = usize>) -> Distribution {
        let mut hist = vec![0u64; n + 1];
        for v in values {
            hist[v] += 1;
        }
        Distribution(hist)
    }
}

/// Whether a length-`(n−1)` factorization is minimal for a full cycle; the
/// tree criterion and the cycle criterion are both computed and must agree.
pub fn is_minimal_cycle_factorization(rho: &Factorization) -> Result<bool> {
    if rho.len() + 1 != rho.degree() {
        return Err(Error::Parse(format!(
            "expected {} factors for degree {}, found {}",
            rho.degree() - 1,
            rho.degree(),
            rho.len()
        )));
    }
    let by_tree = EdgeLabeledGraph::from_factorization(rho).stats().is_tree;
    let by_cycle = rho.monodromy().is_n_cycle();
    if by_tree != by_cycle {
        return Err(Error::Defect("tree and cycle criteria disagree".into()));
    }
    Ok(by_tree)
}

/// The standard cycle `ζ₀ = (n, n−1, …, 1)`.
pub fn standard_cycle(n: usize) -> Permutation {
    let cycle: Vec<usize> = (1..=n).rev().collect();
    Permutation::from_cycle(n, &cycle).expect("n ≥ 1")
}

/// Sends a minimal factorization of `zeta` to its tree, rooted at vertex 1
/// with the vertex labels forgotten.
pub fn f_zeta(rho: &Factorization, zeta: &Permutation) -> Result<RootedETree> {
    let mu = rho.monodromy();
    if &mu != zeta || !zeta.is_n_cycle() {
        return Err(Error::Parse(format!("monodromy {mu} is not the requested cycle {zeta}")));
    }
    RootedETree::new(EdgeLabeledGraph::from_factorization(rho).forget_vertex_labels(), 1)
}

/// Recovers the factorization of `zeta` from a rooted e-tree: the root is
/// labeled 1 and the label of `τ(v)` is the `zeta`-image of the label of
/// `v`, where `τ` is the tree's own monodromy.
pub fn f_zeta_inverse(t: &RootedETree, zeta: &Permutation) -> Result<Factorization> {
    let n = t.graph.vertex_count();
    if zeta.degree() != n || !zeta.is_n_cycle() {
        return Err(Error::Parse(format!("{zeta} is not an n-cycle on [{n}]")));
    }
    let tau = crate::surface::graph_monodromy(&t.graph);
    if !tau.is_n_cycle() {
        return Err(Error::Parse("rooted e-tree monodromy is not a full cycle".into()));
    }
    let mut label = vec![0usize; n];
    let mut v = t.root;
    let mut image = 1usize;
    for _ in 0..n {
        label[v - 1] = image;
        v = tau.apply(v);
        image = zeta.apply(image);
    }
    let factors = t
        .graph
        .edges()
        .iter()
        .map(|&(a, b)| crate::perm::Transposition::new(label[a - 1], label[b - 1]))
        .collect::<Result<Vec<_>>>()?;
    Factorization::new(n, factors)
}

/// Label-sliding: the root becomes vertex 1 and each edge label, plus one,
/// slides to the endpoint farther from the root.
pub fn sliding_s(t: &RootedETree) -> VTree {
    let n = t.graph.vertex_count();
    let mut label = vec![0usize; n];
    label[t.root - 1] = 1;
    // walk from the root; each edge labels its far endpoint
    let mut stack = vec![t.root];
    let mut seen = vec![false; n];
    seen[t.root - 1] = true;
    while let Some(v) = stack.pop() {
        for e in 1..=t.graph.edge_count() {
            let (a, b) = t.graph.endpoints(e);
            let far = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[far - 1] {
                seen[far - 1] = true;
                label[far - 1] = e + 1;
                stack.push(far);
            }
        }
    }
    let edges = t
        .graph
        .edges()
        .iter()
        .map(|&(a, b)| (label[a - 1], label[b - 1]))
        .collect();
    VTree::new(n, edges).expect("relabeled tree is a tree")
}

/// Inverse sliding: vertex 1 is the root and each other vertex's label,
/// minus one, slides to its edge toward the root.
pub fn sliding_s_inverse(t: &VTree) -> Result<RootedETree> {
    let n = t.vertex_count();
    let mut edges = vec![(0usize, 0usize); n.saturating_sub(1)];
    // parent search from the root
    let mut parent = vec![0usize; n];
    let mut stack = vec![1usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in t.neighbors(v) {
            if !seen[w - 1] {
                seen[w - 1] = true;
                parent[w - 1] = v;
                stack.push(w);
            }
        }
    }
    for w in 2..=n {
        edges[w - 2] = (w, parent[w - 1]);
    }
    RootedETree::new(
        EdgeLabeledGraph::new(n, edges, LabelingMode::E)?,
        1,
    )
}

/// The dual rooted at the trail leaving the old root.
pub fn rooted_dual(t: &RootedETree) -> Result<RootedETree> {
    RootedETree::new(dual_graph(&t.graph)?, t.root)
}

/// The structural bijection: slide the labels of the rooted dual of the
/// tree of a minimal factorization of the standard cycle.
pub fn phi(rho: &Factorization) -> Result<VTree> {
    let t = f_zeta(rho, &standard_cycle(rho.degree()))?;
    Ok(sliding_s(&rooted_dual(&t)?))
}

/// Histogram of cyclic distances of the moved points.
pub fn difference_distribution(rho: &Factorization) -> Distribution {
    let n = rho.degree();
    Distribution::from_values(
        n,
        rho.factors().iter().map(|f| {
            let (s, t) = f.moved();
            (t - s).min(n - t + s)
        }),
    )
}

/// Histogram over edges of the smaller component size after deletion.
pub fn edge_deletion_distribution(t: &VTree) -> Distribution {
    let n = t.vertex_count();
    Distribution::from_values(
        n,
        t.edges().iter().map(|&(a, b)| {
            // size of the component of `a` once the edge is cut
            let mut seen = BTreeSet::from([a]);
            let mut stack = vec![a];
            while let Some(v) = stack.pop() {
                for w in t.neighbors(v) {
                    if (v, w) != (a, b) && (w, v) != (a, b) && seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen.len().min(n - seen.len())
        }),
    )
}

/// Histogram of vertex degrees of the factorization's tree.
pub fn degree_distribution(rho: &Factorization) -> Distribution {
    let g = EdgeLabeledGraph::from_factorization(rho);
    Distribution::from_values(g.vertex_count(), (1..=g.vertex_count()).map(|v| g.degree(v)))
}

/// Histogram of greedy increasing walk lengths.
///
/// Walking toward a vertex that is farther from vertex 1 counts as that
/// neighbor's label; walking back toward vertex 1 counts as the label of
/// the vertex being left.  From each start the walk takes the cheapest
/// step, then repeatedly the cheapest step dearer than the last, while one
/// exists.  These walks are exactly the greedy trails carried through the
/// label-sliding map, which is what ties their lengths to vertex degrees
/// across the structural bijection.
pub fn path_length_distribution(t: &VTree) -> Distribution {
    let n = t.vertex_count();
    // depth from vertex 1 orients each edge; its value is the label of the
    // deeper endpoint
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut queue = vec![1usize];
    while let Some(v) = queue.pop() {
        for w in t.neighbors(v) {
            if depth[w - 1] == usize::MAX {
                depth[w - 1] = depth[v - 1] + 1;
                queue.push(w);
            }
        }
    }
    let value = |a: usize, b: usize| if depth[a - 1] > depth[b - 1] { a } else { b };
    Distribution::from_values(
        n,
        (1..=n).map(|start| {
            let mut cur = start;
            let mut last = 0usize;
            let mut len = 0usize;
            loop {
                let next = t
                    .neighbors(cur)
                    .into_iter()
                    .filter(|&w| value(cur, w) > last)
                    .min_by_key(|&w| value(cur, w));
                let Some(w) = next else {
                    return len;
                };
                last = value(cur, w);
                cur = w;
                len += 1;
            }
        }),
    )
}

/// All Prüfer sequences decoded into trees on `{1..n}`.
fn labeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    if n == 2 {
        return vec![vec![(1, 2)]];
    }
    let mut out = Vec::new();
    let mut seq = vec![1usize; n - 2];
    loop {
        out.push(prufer_decode(n, &seq));
        let mut i = 0;
        loop {
            if i == seq.len() {
                return out;
            }
            if seq[i] == n {
                seq[i] = 1;
                i += 1;
            } else {
                seq[i] += 1;
                break;
            }
        }
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut deg = vec![1usize; n];
    for &s in seq {
        deg[s - 1] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (1..=n).find(|&v| deg[v - 1] == 1).unwrap();
        edges.push((leaf, s));
        deg[leaf - 1] = 0;
        deg[s - 1] -= 1;
    }
    let mut rest = (1..=n).filter(|&v| deg[v - 1] == 1);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    edges
}

/// Every rooted e-tree on `n` vertices, once per isomorphism class.
///
/// A rooted e-tree names each non-root vertex by its parent edge label, so
/// the classes correspond exactly to labeled trees on `{root, 1..n−1}`:
/// vertex `x+1` carries parent edge `x`, the root is vertex 1.
pub fn rooted_etrees(n: usize) -> Result<Vec<RootedETree>> {
    if n == 0 || n > 8 {
        return Err(Error::SizeGuard { given: n, guard: 8 });
    }
    labeled_trees(n)
        .into_iter()
        .map(|tree_edges| {
            let mut edges = vec![(0usize, 0usize); n - 1];
            // tree vertex v ↦ e-tree vertex v; vertex v ≥ 2 has parent edge v−1
            let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
            for &(a, b) in &tree_edges {
                adj[a - 1].push(b);
                adj[b - 1].push(a);
            }
            // orient away from the root to find each vertex's parent
            let mut parent = vec![0usize; n];
            let mut stack = vec![1usize];
            let mut seen = vec![false; n];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &w in &adj[v - 1] {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        parent[w - 1] = v;
                        stack.push(w);
                    }
                }
            }
            for v in 2..=n {
                edges[v - 2] = (v, parent[v - 1]);
            }
            RootedETree::new(EdgeLabeledGraph::new(n, edges, LabelingMode::E)?, 1)
        })
        .collect()
}

fn minfacts_via_trees(zeta: &Permutation, parallel: bool) -> Result<Vec<Factorization>> {
    let trees = rooted_etrees(zeta.degree())?;
    let z = zeta.clone();
    let map = |t: RootedETree| f_zeta_inverse(&t, &z).expect("trees invert along any full cycle");
    let mut out =
        if parallel { exec::par_map(trees, map) } else { exec::seq_map(trees, map) };
    out.sort_unstable();
    Ok(out)
}

/// Exact list of the minimal factorizations of a full cycle, through the
/// rooted-tree correspondence; guarded to `n ≤ 7`.
pub fn enumerate_minimal_factorizations(zeta: &Permutation) -> Result<Vec<Factorization>> {
    if !zeta.is_n_cycle() {
        return Err(Error::Parse(format!("{zeta} is not a full cycle")));
    }
    if zeta.degree() > 7 {
        return Err(Error::SizeGuard { given: zeta.degree(), guard: 7 });
    }
    minfacts_via_trees(zeta, true)
}

/// Sequential variant of [`enumerate_minimal_factorizations`].
pub fn enumerate_minimal_factorizations_seq(zeta: &Permutation) -> Result<Vec<Factorization>> {
    if !zeta.is_n_cycle() {
        return Err(Error::Parse(format!("{zeta} is not a full cycle")));
    }
    if zeta.degree() > 7 {
        return Err(Error::SizeGuard { given: zeta.degree(), guard: 7 });
    }
    minfacts_via_trees(zeta, false)
}

/// Brute-force enumeration by depth-first search over transposition
/// sequences whose graphs stay forests; guarded to `n ≤ 6`.
pub fn enumerate_minimal_factorizations_brute(zeta: &Permutation) -> Result<Vec<Factorization>> {
    let n = zeta.degree();
    if !zeta.is_n_cycle() {
        return Err(Error::Parse(format!("{zeta} is not a full cycle")));
    }
    if n > 6 {
        return Err(Error::SizeGuard { given: n, guard: 6 });
    }
    let all: Vec<(usize, usize)> =
        (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();

    fn root(dsu: &mut [usize], x: usize) -> usize {
        if dsu[x] != x {
            dsu[x] = root(&mut dsu.to_vec(), dsu[x]);
        }
        let mut r = x;
        while dsu[r] != r {
            r = dsu[r];
        }
        r
    }

    fn rec(
        n: usize,
        zeta: &Permutation,
        all: &[(usize, usize)],
        prefix: &mut Vec<(usize, usize)>,
        dsu: &mut Vec<usize>,
        out: &mut Vec<Factorization>,
    ) {
        if prefix.len() == n - 1 {
            let rho = Factorization::from_pairs(n, prefix).unwrap();
            if &rho.monodromy() == zeta {
                out.push(rho);
            }
            return;
        }
        for &(a, b) in all {
            let (ra, rb) = (root(dsu, a - 1), root(dsu, b - 1));
            if ra == rb {
                continue;
            }
            let saved = dsu.clone();
            dsu[ra] = rb;
            prefix.push((a, b));
            rec(n, zeta, all, prefix, dsu, out);
            prefix.pop();
            *dsu = saved;
        }
    }

    let starts: Vec<(usize, usize)> = all.clone();
    let z = zeta.clone();
    let all_ref = all.clone();
    let mut out = exec::par_flat_map(starts, move |first| {
        let mut local = Vec::new();
        let mut dsu: Vec<usize> = (0..n).collect();
        let (a, b) = first;
        dsu[a - 1] = b - 1;
        let mut prefix = vec![first];
        rec(n, &z, &all_ref, &mut prefix, &mut dsu, &mut local);
        local
    });
    out.sort_unstable();
    Ok(out)
}

/// Which alternating orientation a zigzag path carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZigzagVariant {
    /// Arcs point from odd positions into even positions.
    UpDown,
    /// Arcs point from even positions into odd positions.
    DownUp,
}

/// The zigzag ditree on `k` vertices: a path with alternating arc
/// directions.
pub fn zigzag_ditree(k: usize, variant: ZigzagVariant) -> MedialDigraph {
    let mut arcs = Vec::new();
    for x in 1..k {
        let (from, to) = match (variant, x % 2 == 1) {
            (ZigzagVariant::UpDown, true) | (ZigzagVariant::DownUp, false) => (x, x + 1),
            _ => (x + 1, x),
        };
        arcs.push(MedialArc { from, to, color: 0 });
    }
    MedialDigraph::new(k, arcs).expect("path arcs are in range")
}

/// Both enumerations of self-dual e-trees on `n` vertices.
#[derive(Debug, Clone)]
pub struct SelfDualCount {
    /// Count by filtering every e-tree on whether its dual is isomorphic.
    pub by_filter: usize,
    /// Count by constructing from sorted zigzag ditrees.
    pub by_zigzag: usize,
    /// The constructed witnesses, one per class.
    pub witnesses: Vec<EdgeLabeledGraph>,
}

fn zigzag_variants(k: usize) -> Vec<ZigzagVariant> {
    if k > 1 && k % 2 == 1 {
        vec![ZigzagVariant::UpDown, ZigzagVariant::DownUp]
    } else {
        vec![ZigzagVariant::UpDown]
    }
}

/// Counts self-dual (or rooted self-dual) e-trees two independent ways:
/// filtering the full enumeration against its duals, and constructing from
/// topologically sorted zigzag ditrees (with, in the rooted case, a flag at
/// each maximal leaf).
pub fn enumerate_selfdual_etrees(n: usize, rooted: bool) -> Result<SelfDualCount> {
    enumerate_selfdual_impl(n, rooted, true)
}

/// Sequential variant of [`enumerate_selfdual_etrees`].
pub fn enumerate_selfdual_etrees_seq(n: usize, rooted: bool) -> Result<SelfDualCount> {
    enumerate_selfdual_impl(n, rooted, false)
}

fn enumerate_selfdual_impl(n: usize, rooted: bool, parallel: bool) -> Result<SelfDualCount> {
    if n == 0 {
        return Err(Error::SizeGuard { given: 0, guard: 8 });
    }
    // filter route
    let trees = rooted_etrees(n)?;
    let by_filter = if rooted {
        let pred = |t: RootedETree| -> Vec<CanonicalForm> {
            let dual = rooted_dual(&t).expect("trees have duals");
            if t.canonical_form() == dual.canonical_form() {
                vec![t.canonical_form()]
            } else {
                Vec::new()
            }
        };
        let hits = if parallel {
            exec::par_flat_map(trees, pred)
        } else {
            exec::seq_flat_map(trees, pred)
        };
        // rooted classes are already distinct, but dedup keeps this honest
        hits.into_iter().collect::<BTreeSet<_>>().len()
    } else {
        let keyed = |t: RootedETree| -> Vec<(CanonicalForm, bool)> {
            let g = t.graph().clone();
            let dual = dual_graph(&g).expect("trees have duals");
            vec![(g.canonical_form(), dual.canonical_form() == g.canonical_form())]
        };
        let items = if parallel {
            exec::par_flat_map(trees, keyed)
        } else {
            exec::seq_flat_map(trees, keyed)
        };
        let mut verdicts: BTreeMap<CanonicalForm, bool> = BTreeMap::new();
        for (key, selfdual) in items {
            let prev = verdicts.insert(key, selfdual);
            debug_assert!(prev.is_none_or(|p| p == selfdual));
        }
        verdicts.values().filter(|&&b| b).count()
    };

    // zigzag route
    let mut seen: BTreeMap<CanonicalForm, EdgeLabeledGraph> = BTreeMap::new();
    if n == 1 {
        let g = EdgeLabeledGraph::new(1, Vec::new(), LabelingMode::E)?;
        seen.insert(
            if rooted { g.canonical_form_rooted(1) } else { g.canonical_form() },
            g,
        );
    } else {
        let k = n - 1;
        for variant in zigzag_variants(k) {
            let m = zigzag_ditree(k, variant);
            let pcds = all_pcds(&m)?;
            debug_assert_eq!(pcds.len(), 1, "zigzags have no internal vertices");
            let pcd = &pcds[0];
            for sort in m.topological_sorts() {
                let g = egraph_from_pcd(&m, pcd, &sort)?;
                if rooted {
                    // one rooted tree per maximal leaf: a sink of degree one
                    for leaf in 1..=k {
                        let deg = m
                            .arcs()
                            .iter()
                            .filter(|a| a.from == leaf || a.to == leaf)
                            .count();
                        if deg != 1 || !m.out_arcs(leaf).is_empty() {
                            continue;
                        }
                        let chain = pcd
                            .chains()
                            .iter()
                            .position(|c| c.is_trivial() && c.anchor == leaf)
                            .expect("maximal leaves anchor trivial chains");
                        let root = chain + 1;
                        seen.entry(g.canonical_form_rooted(root)).or_insert_with(|| g.clone());
                    }
                } else {
                    seen.entry(g.canonical_form()).or_insert_with(|| g.clone());
                }
            }
        }
    }

    Ok(SelfDualCount {
        by_filter,
        by_zigzag: seen.len(),
        witnesses: seen.into_values().collect(),
    })
}

/// The up/down numbers `1, 1, 1, 2, 5, 16, 61, …` by the boustrophedon
/// recurrence.
pub fn euler_updown_numbers(upto: usize) -> Vec<u64> {
    let mut out = vec![1u64];
    let mut row = vec![1u64];
    for n in 1..=upto {
        let mut next = vec![0u64; n + 1];
        for k in 1..=n {
            next[k] = next[k - 1] + row[n - k];
        }
        out.push(*next.last().unwrap());
        row = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: usize, pairs: &[(usize, usize)]) -> Factorization {
        Factorization::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn minimality_criteria() {
        assert!(is_minimal_cycle_factorization(&fac(4, &[(1, 2), (2, 3), (3, 4)])).unwrap());
        assert_eq!(
            fac(4, &[(1, 2), (2, 3), (3, 4)]).monodromy(),
            Permutation::parse("(1 4 3 2)", 4).unwrap()
        );
        assert!(!is_minimal_cycle_factorization(&fac(4, &[(1, 2), (1, 2), (3, 4)])).unwrap());
        assert!(is_minimal_cycle_factorization(&fac(4, &[(1, 2), (2, 3)])).is_err());
    }

    #[test]
    fn criteria_agree_at_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2000 {
            let n = rng.random_range(2..=7usize);
            let pairs: Vec<(usize, usize)> = (0..n - 1)
                .map(|_| {
                    let a = rng.random_range(1..=n);
                    let mut b = rng.random_range(1..=n);
                    while b == a {
                        b = rng.random_range(1..=n);
                    }
                    (a, b)
                })
                .collect();
            // any result is fine; the call itself cross-checks the criteria
            is_minimal_cycle_factorization(&fac(n, &pairs)).unwrap();
        }
    }

    #[test]
    fn rooted_tree_correspondence_round_trip() {
        let zeta = standard_cycle(5);
        let all = enumerate_minimal_factorizations(&zeta).unwrap();
        assert_eq!(all.len(), 125);
        for rho in &all {
            let t = f_zeta(rho, &zeta).unwrap();
            assert_eq!(&f_zeta_inverse(&t, &zeta).unwrap(), rho);
        }

        // n = 2 has the unique factorization (1 2)
        let zeta2 = standard_cycle(2);
        let all = enumerate_minimal_factorizations(&zeta2).unwrap();
        assert_eq!(all, vec![fac(2, &[(1, 2)])]);
    }

    #[test]
    fn f_zeta_simple_example() {
        let rho = fac(3, &[(1, 2), (1, 3)]);
        let zeta = rho.monodromy();
        let t = f_zeta(&rho, &zeta).unwrap();
        assert_eq!(t.root(), 1);
        assert_eq!(t.graph().edges(), &[(1, 2), (1, 3)]);
        assert!(f_zeta(&rho, &standard_cycle(3)).is_err() || zeta == standard_cycle(3));
    }

    #[test]
    fn sliding_round_trip() {
        let single = RootedETree::new(
            EdgeLabeledGraph::new(2, vec![(1, 2)], LabelingMode::E).unwrap(),
            1,
        )
        .unwrap();
        let v = sliding_s(&single);
        assert_eq!(v.edges(), &[(1, 2)]);

        for n in 2..=6 {
            for t in rooted_etrees(n).unwrap() {
                let v = sliding_s(&t);
                let back = sliding_s_inverse(&v).unwrap();
                assert_eq!(back.canonical_form(), t.canonical_form());
            }
        }
    }

    #[test]
    fn sliding_composite_is_a_bijection_onto_vtrees() {
        for n in 3..=5usize {
            let zeta = standard_cycle(n);
            let all = enumerate_minimal_factorizations(&zeta).unwrap();
            let images: BTreeSet<VTree> =
                all.iter().map(|rho| sliding_s(&f_zeta(rho, &zeta).unwrap())).collect();
            assert_eq!(images.len(), n.pow(n as u32 - 2));
        }
    }

    #[test]
    fn phi_is_injective_on_full_populations() {
        for n in [4usize, 5] {
            let zeta = standard_cycle(n);
            let all = enumerate_minimal_factorizations(&zeta).unwrap();
            assert_eq!(all.len(), n.pow(n as u32 - 2));
            let images: BTreeSet<VTree> = all.iter().map(|r| phi(r).unwrap()).collect();
            assert_eq!(images.len(), all.len());
        }
    }

    #[test]
    fn structural_statistics_match() {
        for n in [4usize, 5] {
            let zeta = standard_cycle(n);
            for rho in enumerate_minimal_factorizations(&zeta).unwrap() {
                let image = phi(&rho).unwrap();
                assert_eq!(
                    difference_distribution(&rho),
                    edge_deletion_distribution(&image),
                    "difference vs edge-deletion on {rho}"
                );
                assert_eq!(
                    degree_distribution(&rho),
                    path_length_distribution(&image),
                    "degree vs path-length on {rho}"
                );
            }
        }
    }

    #[test]
    fn distribution_basics() {
        // wraparound distance
        let rho = fac(5, &[(1, 5)]);
        let d = difference_distribution(&rho);
        assert_eq!(d.0[1], 1);

        // a leaf edge deletes into a singleton
        let t = VTree::new(3, vec![(1, 2), (2, 3)]).unwrap();
        assert_eq!(edge_deletion_distribution(&t).0[1], 2);
    }

    #[test]
    fn rooted_duality_is_involutive() {
        for n in 2..=6 {
            for t in rooted_etrees(n).unwrap() {
                let dd = rooted_dual(&rooted_dual(&t).unwrap()).unwrap();
                assert_eq!(dd.canonical_form(), t.canonical_form());
            }
        }
    }

    #[test]
    fn duality_commutes_with_the_tree_correspondence() {
        let n = 5;
        let zeta = standard_cycle(n);
        let zeta_inv = zeta.inverse();
        for rho in enumerate_minimal_factorizations(&zeta).unwrap() {
            let square =
                f_zeta_inverse(&rooted_dual(&f_zeta(&rho, &zeta).unwrap()).unwrap(), &zeta_inv)
                    .unwrap();
            assert_eq!(square, crate::trails::dual_factorization(&rho));
        }
    }

    #[test]
    fn minimal_factorization_counts() {
        for (n, expect) in [(3usize, 3usize), (4, 16), (5, 125), (6, 1296)] {
            let zeta = standard_cycle(n);
            let trees = enumerate_minimal_factorizations(&zeta).unwrap();
            assert_eq!(trees.len(), expect);
            let brute = enumerate_minimal_factorizations_brute(&zeta).unwrap();
            assert_eq!(trees, brute);
        }
        assert!(matches!(
            enumerate_minimal_factorizations(&standard_cycle(8)),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn zigzag_shapes() {
        let up = zigzag_ditree(3, ZigzagVariant::UpDown);
        let mut arcs: Vec<(usize, usize)> = up.arcs().iter().map(|a| (a.from, a.to)).collect();
        arcs.sort_unstable();
        assert_eq!(arcs, vec![(1, 2), (3, 2)]);
        let down = zigzag_ditree(3, ZigzagVariant::DownUp);
        let mut arcs: Vec<(usize, usize)> = down.arcs().iter().map(|a| (a.from, a.to)).collect();
        arcs.sort_unstable();
        assert_eq!(arcs, vec![(2, 1), (2, 3)]);
        // no internal vertices: a single self-dual decomposition each
        assert!(up.internal_vertices().is_empty());
    }

    #[test]
    fn selfdual_counts_match_updown_numbers() {
        let updown = euler_updown_numbers(6);
        assert_eq!(updown, vec![1, 1, 1, 2, 5, 16, 61]);
        for n in 3..=6usize {
            let unrooted = enumerate_selfdual_etrees(n, false).unwrap();
            assert_eq!(unrooted.by_filter, unrooted.by_zigzag, "n={n}");
            assert_eq!(unrooted.by_filter as u64, updown[n - 1], "n={n}");
            let rooted = enumerate_selfdual_etrees(n, true).unwrap();
            assert_eq!(rooted.by_filter, rooted.by_zigzag, "rooted n={n}");
            assert_eq!(rooted.by_filter, unrooted.by_filter, "rooted vs unrooted n={n}");
        }
    }

    #[test]
    fn parallel_and_sequential_paths_agree() {
        let zeta = standard_cycle(5);
        assert_eq!(
            enumerate_minimal_factorizations(&zeta).unwrap(),
            enumerate_minimal_factorizations_seq(&zeta).unwrap()
        );
        let par = enumerate_selfdual_etrees(6, false).unwrap();
        let seq = enumerate_selfdual_etrees_seq(6, false).unwrap();
        assert_eq!((par.by_filter, par.by_zigzag), (seq.by_filter, seq.by_zigzag));
        let keys = |c: &SelfDualCount| -> Vec<CanonicalForm> {
            c.witnesses.iter().map(|g| g.canonical_form()).collect()
        };
        assert_eq!(keys(&par), keys(&seq));
    }

    #[test]
    fn rooted_tree_enumeration_is_cayley_sized() {
        for n in 1..=6usize {
            assert_eq!(rooted_etrees(n).unwrap().len(), n.pow(n.saturating_sub(2) as u32));
        }
    }
}
