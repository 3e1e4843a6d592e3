//! Seeded verification suites for every identity the crate implements.
//!
//! Each suite runs a deterministic batch of randomized and exhaustive
//! checks and reports failures with a replayable payload.  Suites run their
//! cases in parallel when the `parallel` feature is on; results do not
//! depend on the feature because every case derives its own generator from
//! the base seed.

use crate::braid::{
    act, act_loop, cable_word, delta_range_word, delta_word, dualizer_word, garside_word,
    lambda_word, parse_word, shifted_word, BraidWord, Letter,
};
use crate::egraph::{EdgeLabeledGraph, Factorization};
use crate::exec;
use crate::medial::{
    all_pcds, binary_dags_up_to_iso, count_egraphs_of_dag, pcd_dual, pcd_from_leo,
    pcd_from_ptdc, selector_of, FlaggedPcd, MedialDigraph,
};
use crate::surface::{
    ceg_of_identity_factorization, diverse_fas, graph_monodromy, peg_invariants, peggable,
    realize_kn_type, selfdual_check, subdivide_to_peggable, t_operation, Dart, RotationSystem,
};
use crate::trails::{
    bar_dual, dual_concat, dual_factorization, dual_via_graph, Leo,
};
use crate::trees::{
    degree_distribution, difference_distribution, edge_deletion_distribution,
    enumerate_minimal_factorizations, enumerate_minimal_factorizations_brute,
    enumerate_selfdual_etrees, euler_updown_numbers, f_zeta, f_zeta_inverse,
    is_minimal_cycle_factorization, path_length_distribution, phi, rooted_dual, rooted_etrees,
    sliding_s, sliding_s_inverse, standard_cycle,
};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

pub const SUITES: [&str; 7] = [
    "involution",
    "braid-relations",
    "garside",
    "medial",
    "counts",
    "trees",
    "surfaces",
];

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Randomized cases per suite.
    pub cases: usize,
    pub max_n: usize,
    pub max_m: usize,
    /// Vertex bound for the exhaustive binary-dag sweep.
    pub dag_vertices: usize,
    /// Deliberately corrupt one comparison, to prove failures surface.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 7,
            cases: 10_000,
            max_n: 8,
            max_m: 12,
            dag_vertices: 4,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub millis: u128,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for RunReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} — {} cases, {} failures, {} ms",
            self.suite,
            if self.passed() { "ok" } else { "FAILED" },
            self.cases,
            self.failures.len(),
            self.millis
        )?;
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        for fail in self.failures.iter().take(3) {
            write!(f, "\n  counterexample: {fail}")?;
        }
        Ok(())
    }
}

pub fn run_all(opts: &VerifyOptions) -> Result<Vec<RunReport>> {
    SUITES.iter().map(|s| run_suite(s, opts)).collect()
}

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<RunReport> {
    let start = Instant::now();
    let mut notes = Vec::new();
    let (cases, failures) = match name {
        "involution" => involution_suite(opts),
        "braid-relations" => braid_relations_suite(opts),
        "garside" => garside_suite(opts),
        "medial" => medial_suite(opts),
        "counts" => counts_suite(opts),
        "trees" => trees_suite(opts),
        "surfaces" => surfaces_suite(opts, &mut notes),
        _ => return Err(Error::Parse(format!("unknown suite {name:?}"))),
    };
    Ok(RunReport {
        suite: name.to_string(),
        cases,
        failures,
        notes,
        millis: start.elapsed().as_millis(),
    })
}

fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (case as u64).wrapping_mul(0x9e3779b97f4a7c15))
}

pub fn random_factorization(rng: &mut impl Rng, max_n: usize, max_m: usize) -> Factorization {
    let n = rng.random_range(2..=max_n.max(2));
    let m = rng.random_range(0..=max_m);
    let pairs: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let a = rng.random_range(1..=n);
            let mut b = rng.random_range(1..=n);
            while b == a {
                b = rng.random_range(1..=n);
            }
            (a, b)
        })
        .collect();
    Factorization::from_pairs(n, &pairs).expect("random pairs are transpositions")
}

fn random_word(rng: &mut impl Rng, strands: usize, letters: usize, swaps: bool) -> Vec<Letter> {
    (0..letters)
        .filter_map(|_| {
            if strands < 2 {
                return None;
            }
            let index = rng.random_range(1..strands);
            Some(match rng.random_range(0..if swaps { 3 } else { 2 }) {
                0 => Letter::sigma(index),
                1 => Letter::sigma_inv(index),
                _ => Letter::swap(index),
            })
        })
        .collect()
}

/// Every factorization in `S_n` with at most `max_m` factors.
pub fn all_factorizations(n: usize, max_m: usize) -> Vec<Factorization> {
    let all_pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        out.push(Factorization::from_pairs(n, &prefix).unwrap());
        if prefix.len() < max_m {
            for &p in &all_pairs {
                let mut next = prefix.clone();
                next.push(p);
                stack.push(next);
            }
        }
    }
    out
}

fn run_cases<F>(total: usize, check: F) -> (usize, Vec<String>)
where
    F: Fn(usize) -> Option<String> + Sync + Send,
{
    let failures = exec::par_flat_map((0..total).collect::<Vec<_>>(), |case| {
        check(case).map(|f| vec![f]).unwrap_or_default()
    });
    (total, failures)
}

fn dual_identity_checks(rho: &Factorization, rng: &mut impl Rng) -> Option<String> {
    let n = rho.degree();
    let m = rho.len();
    let dual = dual_factorization(rho);
    let fail = |what: &str| Some(format!("{what} on {rho}"));

    if EdgeLabeledGraph::from_factorization(rho).to_factorization().as_ref() != Ok(rho) {
        return fail("graph dictionary does not round-trip");
    }
    if dual_factorization(&dual) != *rho {
        return fail("dual is not involutive");
    }
    if dual.monodromy() != rho.monodromy().inverse() {
        return fail("dual monodromy is not the inverse");
    }
    match dual_via_graph(rho) {
        Ok(via) if via == dual => {}
        _ => return fail("formula and trail duals disagree"),
    }
    let delta = garside_word(m);
    if act(rho, &delta).unwrap().reverse() != dual {
        return fail("reversed half-twist action is not the dual");
    }
    if act_loop(rho, &dualizer_word(m)).unwrap() != dual {
        return fail("dualizer action is not the dual");
    }
    let bar = bar_dual(rho);
    if bar != act(rho, &delta.inverse()).unwrap().reverse() {
        return fail("opposite dual is not the reversed inverse half twist");
    }
    if bar != dual_factorization(&rho.reverse()).reverse() {
        return fail("opposite dual does not factor through reversal");
    }
    if bar_dual(&bar) != *rho {
        return fail("opposite dual is not involutive");
    }
    // action by the crossing-reversed half twist equals the inverse word
    if act(rho, &delta.star()).unwrap() != act(rho, &delta.inverse()).unwrap() {
        return fail("crossing-reversed half twist acts differently from its inverse");
    }
    // the squared half twist conjugates by the monodromy
    let squared = delta.concat(&delta).unwrap();
    let conj = rho.conjugate_left(&rho.monodromy()).unwrap();
    if act(rho, &squared).unwrap() != conj {
        return fail("squared half twist is not monodromy conjugation");
    }
    let g = EdgeLabeledGraph::from_factorization(rho).forget_vertex_labels();
    let g2 = EdgeLabeledGraph::from_factorization(&conj).forget_vertex_labels();
    if g.canonical_form() != g2.canonical_form() {
        return fail("squared half twist moved the anonymous graph");
    }
    // dual and reversal commute with the action
    let w = BraidWord::new(m, random_word(rng, m, 6, false)).unwrap();
    if dual_factorization(&act(rho, &w).unwrap()) != act(&dual, &w.star()).unwrap() {
        return fail("dual does not intertwine the crossing reversal");
    }
    if act(rho, &w).unwrap().reverse() != act(&rho.reverse(), &w.reverse_word()).unwrap() {
        return fail("reversal does not intertwine the reversed word");
    }
    // half-twist conjugation flips generator indices
    if m >= 2 {
        let i = rng.random_range(1..m);
        let conj_word = delta
            .inverse()
            .concat(&BraidWord::new(m, vec![Letter::sigma(i)]).unwrap())
            .unwrap()
            .concat(&delta)
            .unwrap();
        let direct = BraidWord::new(m, vec![Letter::sigma(m - i)]).unwrap();
        if act(rho, &conj_word).unwrap() != act(rho, &direct).unwrap() {
            return fail("half-twist conjugation does not flip the generator");
        }
    }
    // blockwise dual of a concatenation
    let cut = rng.random_range(0..=m);
    let (a, b) = rho.factors().split_at(cut);
    let blocks = [
        Factorization::new(n, a.to_vec()).unwrap(),
        Factorization::new(n, b.to_vec()).unwrap(),
    ];
    if dual_concat(&blocks).unwrap() != dual {
        return fail("blockwise dual disagrees");
    }
    // trail/star exchange between the graph and its dual
    let g = EdgeLabeledGraph::from_factorization(rho);
    let gd = EdgeLabeledGraph::from_factorization(&dual);
    let cover = Leo::from_graph(&g).trail_cover().unwrap();
    let cover_d = Leo::from_graph(&gd).trail_cover().unwrap();
    let leo_d = Leo::from_graph(&gd);
    let leo = Leo::from_graph(&g);
    for v in 1..=n {
        let mut trail_edges = cover.trail_from(v).edge_labels();
        trail_edges.sort_unstable();
        let mut star_edges = leo_d.order_at(v).to_vec();
        star_edges.sort_unstable();
        if trail_edges != star_edges {
            return fail("dual star is not the trail");
        }
        if cover_d.trail_from(v).edge_labels() != leo.order_at(v) {
            return fail("dual trail is not the star");
        }
    }
    None
}

fn involution_suite(opts: &VerifyOptions) -> (usize, Vec<String>) {
    // exhaustive sweep at n ≤ 4, m ≤ 4 plus the randomized batch
    let mut exhaustive = Vec::new();
    for n in 1..=4 {
        exhaustive.extend(all_factorizations(n, 4));
    }
    let seed = opts.seed;
    let random_cases = opts.cases;
    let (max_n, max_m) = (opts.max_n, opts.max_m);
    let total = exhaustive.len() + random_cases;
    let (cases, failures) = run_cases(total, |case| {
        let mut rng = case_rng(seed, case);
        let rho = if case < exhaustive.len() {
            exhaustive[case].clone()
        } else {
            random_factorization(&mut rng, max_n, max_m)
        };
        dual_identity_checks(&rho, &mut rng)
    });
    (cases, failures)
}

fn braid_relations_suite(opts: &VerifyOptions) -> (usize, Vec<String>) {
    let seed = opts.seed;
    let (max_n, max_m) = (opts.max_n, opts.max_m.max(4));
    run_cases(opts.cases, move |case| {
        let mut rng = case_rng(seed.wrapping_add(1), case);
        let mut rho = random_factorization(&mut rng, max_n, max_m);
        while rho.len() < 3 {
            rho = random_factorization(&mut rng, max_n, max_m);
        }
        let m = rho.len();
        let fail = |what: &str| Some(format!("{what} on {rho}"));
        let eq = |xs: &[Letter], ys: &[Letter]| {
            let wx = parse_word(&crate::braid::format_word(xs), m).unwrap();
            let wy = parse_word(&crate::braid::format_word(ys), m).unwrap();
            act_loop(&rho, &wx).unwrap() == act_loop(&rho, &wy).unwrap()
        };
        let i = rng.random_range(1..m);
        let j = rng.random_range(1..m);
        if i.abs_diff(j) > 1 {
            if !eq(
                &[Letter::sigma(i), Letter::sigma(j)],
                &[Letter::sigma(j), Letter::sigma(i)],
            ) {
                return fail("distant generators do not commute");
            }
            if !eq(&[Letter::sigma(i), Letter::swap(j)], &[Letter::swap(j), Letter::sigma(i)]) {
                return fail("distant swap does not commute");
            }
        }
        if i + 1 < m {
            if !eq(
                &[Letter::sigma(i), Letter::sigma(i + 1), Letter::sigma(i)],
                &[Letter::sigma(i + 1), Letter::sigma(i), Letter::sigma(i + 1)],
            ) {
                return fail("braid relation fails");
            }
            if !eq(
                &[Letter::swap(i), Letter::swap(i + 1), Letter::sigma(i)],
                &[Letter::sigma(i + 1), Letter::swap(i), Letter::swap(i + 1)],
            ) {
                return fail("mixed relation (swap swap sigma) fails");
            }
            if !eq(
                &[Letter::sigma(i), Letter::sigma(i + 1), Letter::swap(i)],
                &[Letter::swap(i + 1), Letter::sigma(i), Letter::sigma(i + 1)],
            ) {
                return fail("mixed relation (sigma sigma swap) fails");
            }
        }
        if !eq(&[Letter::swap(i), Letter::swap(i)], &[]) {
            return fail("swap is not an involution");
        }
        if !eq(&[Letter::sigma(i), Letter::sigma_inv(i)], &[]) {
            return fail("generator inverse fails");
        }
        // σ-letters preserve the monodromy
        let w = BraidWord::new(m, random_word(&mut rng, m, 8, false)).unwrap();
        if act(&rho, &w).unwrap().monodromy() != rho.monodromy() {
            return fail("pure braid word changed the monodromy");
        }
        None
    })
}

fn compositions_summing_to(total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(left: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for part in 1..=left {
            acc.push(part);
            rec(left - part, acc, out);
            acc.pop();
        }
    }
    for s in 1..=total {
        rec(s, &mut Vec::new(), &mut out);
    }
    out
}

fn garside_suite(opts: &VerifyOptions) -> (usize, Vec<String>) {
    let compositions = compositions_summing_to(7);
    let per = 100usize;
    let seed = opts.seed.wrapping_add(2);
    let inject = opts.inject_fault;
    let comps = compositions.clone();
    let (cases, mut failures) = run_cases(compositions.len() * per, move |case| {
        let widths = &comps[case / per];
        let total: usize = widths.iter().sum();
        let mut rng = case_rng(seed, case);
        let rho = random_exact_length(&mut rng, total.max(2), total);
        let outer = garside_word(widths.len());
        let mut word = cable_word(&outer, widths).unwrap();
        let perm = outer.position_permutation();
        for (i, &w) in widths.iter().enumerate() {
            let dest = perm.apply(i + 1);
            let offset: usize = (1..=widths.len())
                .filter(|&c| perm.apply(c) < dest)
                .map(|c| widths[c - 1])
                .sum();
            word = word.concat(&shifted_word(&garside_word(w), offset, total).unwrap()).unwrap();
        }
        let lhs = act(&rho, &word).unwrap();
        let mut rhs = act(&rho, &garside_word(total)).unwrap();
        if inject && case + 1 == comps.len() * per {
            // corrupt the largest case; its width vector has several strands
            rhs = rhs.reverse();
        }
        (lhs != rhs).then(|| format!("cabled half twist differs for widths {widths:?} on {rho}"))
    });
    // the two defining decompositions of the half twist, as actions
    for m in 2..=7 {
        let mut rng = case_rng(seed, 10_000 + m);
        let rho = random_exact_length(&mut rng, m.max(2), m);
        let left = delta_word(1, m, m).unwrap().concat(&delta_range_word(2, m, m).unwrap());
        let right = delta_range_word(2, m, m).unwrap().concat(&lambda_word(1, m, m).unwrap());
        for (name, word) in [("delta-first", left), ("lambda-last", right)] {
            let word = word.unwrap();
            if act(&rho, &word).unwrap() != act(&rho, &garside_word(m)).unwrap() {
                failures.push(format!("{name} decomposition fails at m={m}"));
            }
        }
    }
    (cases + 12, failures)
}

fn random_exact_length(rng: &mut impl Rng, n: usize, m: usize) -> Factorization {
    let pairs: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let a = rng.random_range(1..=n);
            let mut b = rng.random_range(1..=n);
            while b == a {
                b = rng.random_range(1..=n);
            }
            (a, b)
        })
        .collect();
    Factorization::from_pairs(n, &pairs).unwrap()
}

fn medial_suite(opts: &VerifyOptions) -> (usize, Vec<String>) {
    let seed = opts.seed.wrapping_add(3);
    let (max_n, max_m) = (opts.max_n, opts.max_m);
    let (cases, mut failures) = run_cases(opts.cases.min(2000), move |case| {
        let mut rng = case_rng(seed, case);
        let rho = random_factorization(&mut rng, max_n, max_m);
        let g = EdgeLabeledGraph::from_factorization(&rho);
        let fail = |what: &str| Some(format!("{what} on {rho}"));
        let leo = Leo::from_graph(&g);
        let m = MedialDigraph::of_leo(&leo);
        // the medial digraph only sees the support: compare against the
        // Euler characteristic with unmoved points dropped
        let support = (1..=g.vertex_count()).filter(|&v| g.degree(v) > 0).count() as i64;
        if m.euler_characteristic() != support - g.edge_count() as i64 {
            return fail("medial Euler characteristic differs");
        }
        let dual = EdgeLabeledGraph::from_factorization(&dual_factorization(&rho));
        let md = MedialDigraph::of_graph(&dual);
        let plain = |m: &MedialDigraph| {
            let mut arcs: Vec<(usize, usize)> =
                m.arcs().iter().map(|a| (a.from, a.to)).collect();
            arcs.sort_unstable();
            arcs
        };
        if plain(&m) != plain(&md) {
            return fail("dual changed the medial digraph");
        }
        let from_leo = pcd_from_leo(&leo, &m).unwrap();
        let from_trails = pcd_from_ptdc(&leo, &m).unwrap();
        if pcd_dual(&m, &from_leo).unwrap() != from_trails {
            return fail("order and trail chains are not selector duals");
        }
        let expected = 2 * m.vertex_count() - m.arc_count();
        if from_leo.chain_count() != expected || from_trails.chain_count() != expected {
            return fail("chain count is not 2m − l");
        }
        // the dual graph's own order-traced chains match the trail chains
        let leo_d = Leo::from_graph(&dual);
        let paths = |pcd: &crate::medial::Pcd, m: &MedialDigraph| {
            let mut p: Vec<Vec<usize>> =
                pcd.chains().iter().map(|c| c.vertex_path(m)).collect();
            p.sort();
            p
        };
        if paths(&pcd_from_leo(&leo_d, &md).unwrap(), &md) != paths(&from_trails, &m) {
            return fail("dual order chains differ from trail chains");
        }
        let s = selector_of(&m, &from_leo).unwrap();
        if selector_of(&m, &from_trails).unwrap() != s.flipped() {
            return fail("selectors are not bit flips");
        }
        None
    });
    for dag in binary_dags_up_to_iso(opts.dag_vertices, false) {
        let pcds = all_pcds(&dag).unwrap();
        if pcds.len() != 1 << dag.internal_vertices().len() {
            failures.push(format!("pcd count is not 2^ι on {dag:?}"));
        }
        match count_egraphs_of_dag(&dag) {
            Ok(c) if c.agrees() => {}
            other => failures.push(format!("count formula fails on {dag:?}: {other:?}")),
        }
    }
    (cases + 1, failures)
}

fn counts_suite(_opts: &VerifyOptions) -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    let updown = euler_updown_numbers(6);
    if updown != vec![1, 1, 1, 2, 5, 16, 61] {
        failures.push("up/down numbers are wrong".into());
    }
    for n in 3..=6usize {
        let zeta = standard_cycle(n);
        let via_trees = enumerate_minimal_factorizations(&zeta).unwrap();
        if via_trees.len() != n.pow(n as u32 - 2) {
            failures.push(format!("minimal count at n={n} is {}", via_trees.len()));
        }
        let brute = enumerate_minimal_factorizations_brute(&zeta).unwrap();
        if via_trees != brute {
            failures.push(format!("enumeration routes disagree at n={n}"));
        }
    }
    if enumerate_minimal_factorizations(&standard_cycle(7)).unwrap().len() != 16807 {
        failures.push("minimal count at n=7 is wrong".into());
    }
    for n in 3..=7usize {
        let sd = enumerate_selfdual_etrees(n, false).unwrap();
        let rooted = enumerate_selfdual_etrees(n, true).unwrap();
        let expect = updown[n - 1] as usize;
        if sd.by_filter != expect || sd.by_zigzag != expect {
            failures.push(format!(
                "self-dual counts at n={n}: filter {} zigzag {} expect {expect}",
                sd.by_filter, sd.by_zigzag
            ));
        }
        if rooted.by_filter != expect || rooted.by_zigzag != expect {
            failures.push(format!(
                "rooted self-dual counts at n={n}: filter {} zigzag {}",
                rooted.by_filter, rooted.by_zigzag
            ));
        }
    }
    (11, failures)
}

fn trees_suite(opts: &VerifyOptions) -> (usize, Vec<String>) {
    let seed = opts.seed.wrapping_add(4);
    let (cases, mut failures) = run_cases(opts.cases.min(5000), move |case| {
        let mut rng = case_rng(seed, case);
        let n = rng.random_range(2..=7usize);
        let rho = random_exact_length(&mut rng, n, n - 1);
        // the call cross-checks the tree and cycle criteria internally
        match is_minimal_cycle_factorization(&rho) {
            Ok(_) => None,
            Err(e) => Some(format!("criteria disagree on {rho}: {e}")),
        }
    });
    // round trips and dualities on whole populations
    for n in 2..=6usize {
        for t in rooted_etrees(n).unwrap() {
            if sliding_s_inverse(&sliding_s(&t)).unwrap().canonical_form() != t.canonical_form() {
                failures.push(format!("sliding round trip fails at n={n}"));
                break;
            }
            let dd = rooted_dual(&rooted_dual(&t).unwrap()).unwrap();
            if dd.canonical_form() != t.canonical_form() {
                failures.push(format!("rooted dual is not involutive at n={n}"));
                break;
            }
        }
    }
    for n in [4usize, 5] {
        let zeta = standard_cycle(n);
        let all = enumerate_minimal_factorizations(&zeta).unwrap();
        let mut images = std::collections::BTreeSet::new();
        for rho in &all {
            let t = f_zeta(rho, &zeta).unwrap();
            if &f_zeta_inverse(&t, &zeta).unwrap() != rho {
                failures.push(format!("tree correspondence round trip fails on {rho}"));
            }
            let image = phi(rho).unwrap();
            if difference_distribution(rho) != edge_deletion_distribution(&image) {
                failures.push(format!("difference distribution moved on {rho}"));
            }
            if degree_distribution(rho) != path_length_distribution(&image) {
                failures.push(format!("degree distribution moved on {rho}"));
            }
            images.insert(image);
            let square =
                f_zeta_inverse(&rooted_dual(&t).unwrap(), &zeta.inverse()).unwrap();
            if square != dual_factorization(rho) {
                failures.push(format!("duality square does not commute on {rho}"));
            }
        }
        if images.len() != all.len() {
            failures.push(format!("phi is not injective at n={n}"));
        }
    }
    // rooted duality agrees with the flagged-chain duality
    for n in 2..=5usize {
        for t in rooted_etrees(n).unwrap() {
            let leo = Leo::from_graph(t.graph());
            let m = MedialDigraph::of_leo(&leo);
            let pcd = pcd_from_leo(&leo, &m).unwrap();
            let root_path = leo.order_at(t.root()).to_vec();
            let flag = pcd.chain_with_path(&m, &root_path).unwrap();
            let fd =
                crate::medial::flagged_dual(&m, &FlaggedPcd::new(pcd, flag).unwrap()).unwrap();
            let dual_t = rooted_dual(&t).unwrap();
            let leo_d = Leo::from_graph(dual_t.graph());
            let md = MedialDigraph::of_leo(&leo_d);
            let pcd_d = pcd_from_leo(&leo_d, &md).unwrap();
            let mut lhs: Vec<Vec<usize>> =
                fd.pcd.chains().iter().map(|c| c.vertex_path(&m)).collect();
            let mut rhs: Vec<Vec<usize>> =
                pcd_d.chains().iter().map(|c| c.vertex_path(&md)).collect();
            lhs.sort();
            rhs.sort();
            if lhs != rhs {
                failures.push(format!("flagged dual chains differ at n={n}"));
                break;
            }
            if fd.flag_chain().vertex_path(&m) != leo_d.order_at(dual_t.root()) {
                failures.push(format!("flagged dual flag differs at n={n}"));
                break;
            }
        }
    }
    (cases + 4, failures)
}

fn surfaces_suite(opts: &VerifyOptions, notes: &mut Vec<String>) -> (usize, Vec<String>) {
    let seed = opts.seed.wrapping_add(5);
    let (max_n, max_m) = (opts.max_n, opts.max_m);
    let (cases, mut failures) = run_cases(opts.cases.min(2000), move |case| {
        let mut rng = case_rng(seed, case);
        let rho = random_factorization(&mut rng, max_n, max_m);
        let g = EdgeLabeledGraph::from_factorization(&rho);
        let fail = |what: &str| Some(format!("{what} on {rho}"));
        let inv = match peg_invariants(&g) {
            Ok(inv) => inv,
            Err(e) => return fail(&format!("invariants failed: {e}")),
        };
        // the two necessary conditions on boundary counts
        let n = g.vertex_count() as i64;
        if inv.boundary_components as i64 > n
            || (inv.boundary_components as i64 - inv.euler_characteristic).rem_euclid(2) != 0
        {
            return fail("boundary count violates the necessary conditions");
        }
        // dual has the same invariants with inverted boundary cycles
        let dual = EdgeLabeledGraph::from_factorization(&dual_factorization(&rho));
        let dinv = peg_invariants(&dual).unwrap();
        if (dinv.euler_characteristic, dinv.boundary_components)
            != (inv.euler_characteristic, inv.boundary_components)
        {
            return fail("dual changed the surface invariants");
        }
        if graph_monodromy(&dual) != graph_monodromy(&g).inverse() {
            return fail("dual boundary cycles are not inverted");
        }
        // faces satisfy the Euler relation and agree with the invariants
        let rs = RotationSystem::completion(&g);
        let (_, _, genus) = match rs.genus() {
            Ok(x) => x,
            Err(e) => return fail(&format!("face tracing failed: {e}")),
        };
        if genus != inv.genus_total {
            return fail("completion genus differs from the trail invariants");
        }
        // every completion is peggable, reproducing the embedding
        match peggable(&rs) {
            Some(back) => {
                if RotationSystem::completion(&back).canonical_map_form()
                    != rs.canonical_map_form()
                {
                    return fail("recovered labeling embeds differently");
                }
            }
            None => return fail("completion not recognized as peggable"),
        }
        // whenever the dual embedding exists, dualizing twice comes back
        if let Ok(dual) = rs.dual() {
            match dual.dual() {
                Ok(dd) if dd.canonical_map_form() == rs.canonical_map_form() => {}
                _ => return fail("double dual is not the original embedding"),
            }
        }
        // monodromy-preserving attachment
        if g.edge_count() > 0 {
            let label = rng.random_range(1..=g.edge_count());
            let (a, b) = g.endpoints(label);
            if let Some(v) = (1..=g.vertex_count()).find(|&v| v != a && v != b) {
                let bigger = t_operation(&g, v, label).unwrap();
                if graph_monodromy(&bigger) != graph_monodromy(&g) {
                    return fail("attachment changed the monodromy");
                }
            }
        }
        None
    });

    // random rotation systems: subdivision always repairs them
    for case in 0..60 {
        let mut rng = case_rng(seed.wrapping_add(99), case);
        let (nv, ne) = (rng.random_range(2..=4), rng.random_range(1..=5));
        let rho = random_exact_length(&mut rng, nv, ne);
        let g = EdgeLabeledGraph::from_factorization(&rho);
        let mut rot: Vec<Vec<Dart>> =
            (1..=g.vertex_count()).map(|v| RotationSystem::completion(&g).rotation(v).to_vec()).collect();
        for list in rot.iter_mut() {
            // visit a random cyclic reshuffle
            for i in (1..list.len()).rev() {
                let j = rng.random_range(0..=i);
                list.swap(i, j);
            }
        }
        let rs = RotationSystem::new(g.vertex_count(), g.edges().to_vec(), rot).unwrap();
        match subdivide_to_peggable(&rs) {
            Ok(fixed) => {
                if peggable(&fixed).is_none() {
                    failures.push(format!("subdivision output not peggable for {rho}"));
                }
            }
            Err(e) => failures.push(format!("subdivision failed for {rho}: {e}")),
        }
    }

    // realization sweep: every feasible type is realized, every infeasible
    // type is rejected
    for n in 1..=8usize {
        for parts in partitions(n) {
            match realize_kn_type(n, &parts) {
                Ok(g) => {
                    if graph_monodromy(&g).cycle_type() != parts {
                        failures.push(format!("realized type differs for n={n} {parts:?}"));
                    }
                }
                Err(Error::InfeasibleType(_)) => {
                    let chi = n as i64 - (n * (n - 1) / 2) as i64;
                    if parts.len() <= n && (parts.len() as i64 - chi).rem_euclid(2) == 0 {
                        failures.push(format!("feasible type rejected: n={n} {parts:?}"));
                    }
                }
                Err(e) => failures.push(format!("realization error n={n} {parts:?}: {e}")),
            }
        }
    }

    // boundary gluing with the dual: self-dual for identity-monodromy
    // blocks
    for case in 0..40 {
        let mut rng = case_rng(seed.wrapping_add(7), case);
        let n = rng.random_range(2..=4);
        let half = random_exact_length(&mut rng, n, 3);
        let block = half.concat(&half.reverse()).unwrap();
        debug_assert!(block.monodromy().is_identity());
        let joined = block.concat(&dual_factorization(&block)).unwrap();
        match ceg_of_identity_factorization(&joined).and_then(|rs| selfdual_check(&rs)) {
            Ok(true) => {}
            other => {
                failures.push(format!("identity-block gluing not self-dual on {block}: {other:?}"))
            }
        }
    }

    // the two self-dual complete-graph examples
    let rho04 = Factorization::from_pairs(
        4,
        &[(1, 2), (1, 3), (2, 4), (1, 4), (2, 3), (3, 4)],
    )
    .unwrap();
    let rho05 = Factorization::from_pairs(
        5,
        &[(1, 2), (2, 5), (2, 3), (1, 3), (3, 4), (2, 4), (4, 5), (3, 5), (1, 5), (1, 4)],
    )
    .unwrap();
    for (name, rho, genus) in [("K4", &rho04, 0), ("K5", &rho05, 1)] {
        match ceg_of_identity_factorization(rho).map(|rs| (rs.genus(), selfdual_check(&rs))) {
            Ok((Ok((_, _, g)), Ok(true))) if g == genus => {}
            other => failures.push(format!("{name} self-dual check failed: {other:?}")),
        }
    }

    // the two six-vertex factorizations: compute and report their data, and
    // flag that the stated surfaces disagree with the computed Euler count
    let k6 = [
        (
            "first",
            vec![
                (1, 2), (3, 5), (1, 3), (4, 6), (2, 4), (1, 4), (5, 6), (1, 6),
                (2, 3), (2, 5), (1, 5), (3, 4), (4, 5), (2, 6), (3, 6),
            ],
            Some(vec![2, 2, 2]),
        ),
        (
            "second",
            vec![
                (1, 2), (3, 6), (1, 3), (4, 5), (4, 6), (2, 4), (2, 3), (1, 5),
                (1, 4), (5, 6), (3, 4), (2, 5), (3, 5), (1, 6), (2, 6),
            ],
            None,
        ),
    ];
    for (name, pairs, expect) in k6 {
        let rho = Factorization::from_pairs(6, &pairs).unwrap();
        let g = EdgeLabeledGraph::from_factorization(&rho);
        let inv = peg_invariants(&g).unwrap();
        let ty = graph_monodromy(&g).cycle_type();
        if let Some(expect) = expect {
            if ty != expect {
                failures.push(format!("{name} six-vertex type is {ty:?}"));
            }
        }
        notes.push(format!(
            "{name} K6 labeling: cycle type {ty:?}, χ = {}, b = {}, genus = {}{}",
            inv.euler_characteristic,
            inv.boundary_components,
            inv.genus_total,
            if inv.euler_characteristic != -3 {
                " (differs from the stated small surface, which would need χ = -3)"
            } else {
                ""
            }
        ));
        let dual = EdgeLabeledGraph::from_factorization(&dual_factorization(&rho));
        notes.push(format!(
            "{name} K6 labeling self-dual as anonymous graph: {}",
            crate::surface::unlabeled_iso(&g.forget_vertex_labels(), &dual.forget_vertex_labels())
        ));
    }

    // a plane multigraph with no diverse feedback arc set stays unpeggable
    let rs = {
        let edges = vec![(1, 2), (2, 3), (2, 3), (2, 3)];
        let d = |edge: usize, end: u8| Dart { edge, end };
        RotationSystem::new(
            3,
            edges,
            vec![
                vec![d(1, 0)],
                vec![d(1, 1), d(4, 0), d(3, 0), d(2, 0)],
                vec![d(2, 1), d(3, 1), d(4, 1)],
            ],
        )
        .unwrap()
    };
    if diverse_fas(&rs).is_some() {
        failures.push("triple-edge plane graph should not be peggable".into());
    }
    if subdivide_to_peggable(&rs).ok().and_then(|f| peggable(&f)).is_none() {
        failures.push("subdivision failed to repair the triple-edge plane graph".into());
    }

    (cases + 40 + 60 + 30, failures)
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=left.min(max)).rev() {
            acc.push(part);
            rec(left - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions { cases: 150, dag_vertices: 3, ..Default::default() }
    }

    #[test]
    fn all_suites_pass_quickly() {
        for suite in SUITES {
            let report = run_suite(suite, &quick()).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn injected_fault_is_detected() {
        let opts = VerifyOptions { cases: 50, inject_fault: true, ..quick() };
        let report = run_suite("garside", &opts).unwrap();
        assert!(!report.passed());
        assert!(report.failures[0].contains("cabled"));
    }

    #[test]
    fn unknown_suite_errors() {
        assert!(run_suite("nope", &quick()).is_err());
    }

    #[test]
    fn exhaustive_factorization_counts() {
        // 1 + 3 + 9 + 27 + 81 over S_3
        assert_eq!(all_factorizations(3, 4).len(), 121);
    }
}
