//! Acceptance criteria. Runs without the libtest harness so that each
//! criterion prints exactly one PASS/FAIL line.

mod support;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clawtop::analysis::{connectivity, profile};
use clawtop::collapse::fold_collapse;
use clawtop::ensemble::{claw_free_ensemble, general_ensemble, EnsembleSpec, NamedGraph};
use clawtop::graph::{circular_graph, interval_graph};
use clawtop::harness::{
    bound_value, certify_main_theorem, decompose_main_theorem, max_certifiable_level, scan_claw_free_inequality,
    verify_component_suspension, verify_l_recursion, verify_wedge_decomposition, BoundKind, ConnectivityCache,
};
use clawtop::homology::{boundary_matrices, reduced_homology};
use clawtop::snf::{smith_normal_form, IntMatrix};
use clawtop::{independence_complex, Caps, Graph};

use support::*;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Ensembles {
    claw_free: Vec<NamedGraph>,
    general: Vec<NamedGraph>,
}

fn max_degree(adj: &[u64]) -> i64 {
    adj.iter().map(|m| i64::from(m.count_ones())).max().unwrap_or(0)
}

fn shift(b: &BTreeMap<i32, usize>) -> BTreeMap<i32, usize> {
    b.iter().map(|(&d, &x)| (d + 1, x)).collect()
}

fn add_into(acc: &mut BTreeMap<i32, usize>, b: &BTreeMap<i32, usize>) {
    for (&d, &x) in b {
        *acc.entry(d).or_default() += x;
    }
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn automorphisms(adj: &[u64], perms: &[Vec<usize>]) -> u64 {
    let n = adj.len();
    perms
        .iter()
        .filter(|p| (0..n).all(|a| (0..n).all(|b| (adj[a] >> b & 1) == (adj[p[a]] >> p[b] & 1))))
        .count() as u64
}

fn claw_in_masks(adj: &[u64]) -> bool {
    let n = adj.len();
    (0..n).any(|c| {
        let nb = bits(adj[c]);
        nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..].iter().enumerate().any(|(j, &b)| {
                adj[a] >> b & 1 == 0
                    && nb[i + 1 + j + 1..]
                        .iter()
                        .any(|&x| adj[a] >> x & 1 == 0 && adj[b] >> x & 1 == 0)
            })
        })
    })
}

/// Labeled graphs on `n` vertices (optionally claw-free) equals the orbit
/// sum over the ensemble's isomorphism classes on `n` vertices.
fn exhaustive_coverage(graphs: &[&Graph], n: usize, claw_free_only: bool) -> std::result::Result<(), String> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut labeled = 0u64;
    for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![0u64; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        if !claw_free_only || !claw_in_masks(&adj) {
            labeled += 1;
        }
    }
    let perms = all_perms(n);
    let orbit_sum: u64 = graphs
        .iter()
        .map(|g| factorial(n) / automorphisms(&adjacency(g), &perms))
        .sum();
    if orbit_sum != labeled {
        return Err(format!(
            "n={n}: {labeled} labeled graphs but ensemble orbits cover {orbit_sum}"
        ));
    }
    Ok(())
}

fn exhaustive_part(ens: &[NamedGraph], n: usize) -> Vec<&Graph> {
    ens.iter()
        .filter(|g| g.id.starts_with(&format!("ex{n}-")))
        .map(|g| &g.graph)
        .collect()
}

struct BoundStats {
    checked: usize,
    exhaustive: usize,
    sampled: usize,
    violations: Vec<String>,
}

fn bound_sweep(ens: &[NamedGraph], claw_free: bool) -> BoundStats {
    let caps = Caps::default();
    let mut st = BoundStats {
        checked: 0,
        exhaustive: 0,
        sampled: 0,
        violations: Vec::new(),
    };
    for ng in ens {
        let g = &ng.graph;
        let n = g.n() as i64;
        let adj = adjacency(g);
        let d = max_degree(&adj);
        if claw_free && has_claw(g) {
            st.violations.push(format!("{} has a claw", ng.id));
            continue;
        }
        let faces = independent_sets(g);
        let fields = field_profile(&faces);
        let prof = profile(g, &caps).expect("profile");
        if !consistent(&prof, &fields) {
            st.violations
                .push(format!("{}: profile {prof} disagrees with field Betti numbers", ng.id));
            continue;
        }
        let conn = connectivity(g, &caps).expect("connectivity");
        let oracle = field_connectivity(&fields);
        let bound = match (claw_free, d) {
            (true, _) => Some(floor_div(2 * n - 1, 3 * d + 2) - 1),
            (false, 0) => None,
            (false, _) => Some(floor_div(n - 2 * d - 1, 2 * d)),
        };
        if d > 0 {
            let kind = if claw_free {
                BoundKind::ClawFree {
                    n: g.n(),
                    d: d as usize,
                }
            } else {
                BoundKind::General {
                    n: g.n(),
                    d: d as usize,
                }
            };
            if bound_value(kind).ok() != bound {
                st.violations
                    .push(format!("{}: library bound {:?} vs {bound:?}", ng.id, bound_value(kind)));
            }
        }
        let ok = match bound {
            Some(b) => conn.at_least(b) && reaches(oracle, b),
            None => oracle.is_none() && conn.level().is_none(),
        };
        if !ok {
            st.violations
                .push(format!("{}: n={n} d={d} bound={bound:?} measured={conn:?}", ng.id));
        }
        st.checked += 1;
        if ng.id.starts_with("ex") {
            st.exhaustive += 1;
        } else {
            st.sampled += 1;
        }
    }
    st
}

fn report(st: BoundStats) -> Outcome {
    let msg = format!(
        "{} graphs ({} exhaustive, {} sampled), {} violations",
        st.checked,
        st.exhaustive,
        st.sampled,
        st.violations.len()
    );
    if st.violations.is_empty() {
        Ok(msg)
    } else {
        Err(format!("{msg}; first: {}", st.violations[0]))
    }
}

fn sampled_count(ens: &[NamedGraph], prefix: &str) -> usize {
    ens.iter()
        .filter(|g| g.id.starts_with(prefix) && (8..=9).contains(&g.graph.n()))
        .count()
}

fn criterion_1(e: &Ensembles) -> Outcome {
    for n in 1..=7 {
        exhaustive_coverage(&exhaustive_part(&e.claw_free, n), n, true)?;
    }
    let samples = sampled_count(&e.claw_free, "rcf");
    if samples != 500 {
        return Err(format!("expected 500 samples on 8-9 vertices, found {samples}"));
    }
    report(bound_sweep(&e.claw_free, true))
}

fn criterion_2(e: &Ensembles) -> Outcome {
    for n in 1..=7 {
        exhaustive_coverage(&exhaustive_part(&e.general, n), n, false)?;
    }
    let samples = sampled_count(&e.general, "rg");
    if samples != 500 {
        return Err(format!("expected 500 samples on 8-9 vertices, found {samples}"));
    }
    report(bound_sweep(&e.general, false))
}

fn criterion_3(e: &Ensembles) -> Outcome {
    let mut triples = 0usize;
    let mut violations = Vec::new();
    for ng in &e.claw_free {
        let g = &ng.graph;
        let adj = adjacency(g);
        let bound = floor_div(3 * max_degree(&adj) + 2, 2);
        let mut expected = Vec::new();
        for u in 0..g.n() {
            for (v1, v2) in non_edges_in(&adj, adj[u]) {
                let size = i64::from((closed(&adj, u) | (adj[v1] & adj[v2])).count_ones());
                if size > bound {
                    violations.push(format!("{}: (u,v1,v2)=({u},{v1},{v2}) size {size} > {bound}", ng.id));
                }
                expected.push((u, v1, v2, size));
            }
        }
        let mut got: Vec<(usize, usize, usize, i64)> = scan_claw_free_inequality(g)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|c| (c.u, c.v1.min(c.v2), c.v1.max(c.v2), c.size as i64))
            .collect();
        got.sort_unstable();
        expected.sort_unstable();
        if got != expected {
            violations.push(format!("{}: library triple scan differs from the oracle", ng.id));
        }
        triples += expected.len();
    }
    let msg = format!(
        "{triples} triples over {} graphs, {} violations",
        e.claw_free.len(),
        violations.len()
    );
    match violations.first() {
        None => Ok(msg),
        Some(v) => Err(format!("{msg}; first: {v}")),
    }
}

fn check_family_edges(g: &Graph, n: usize, adjacent: impl Fn(usize, usize) -> bool) -> bool {
    let want: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| adjacent(i, j))
        .collect();
    g.n() == n && g.edges() == want
}

fn criterion_4() -> Outcome {
    let caps = Caps::default();
    let mut checked = 0;
    let mut failures = Vec::new();
    for k in 2..=4usize {
        let mut fields: HashMap<i64, Vec<BTreeMap<i32, usize>>> = HashMap::new();
        let empty_fields = field_profile(&[]);
        for n in 1..=18usize {
            let g = interval_graph(n, k).map_err(|e| e.to_string())?;
            if !check_family_edges(&g, n, |i, j| j - i < k) || has_claw(&g) {
                failures.push(format!("L({n},{k}) has the wrong edges or a claw"));
                continue;
            }
            let f = field_profile(&independent_sets(&g));
            let prof = profile(&g, &caps).map_err(|e| e.to_string())?;
            let conn = connectivity(&g, &caps).map_err(|e| e.to_string())?;
            let l = floor_div(n as i64 - 1, 2 * k as i64 - 1) - 1;
            if bound_value(BoundKind::LFamily { n, k }).ok() != Some(l) {
                failures.push(format!("L({n},{k}): library bound differs from {l}"));
            }
            if !consistent(&prof, &f) || !conn.at_least(l) || !reaches(field_connectivity(&f), l) {
                failures.push(format!("L({n},{k}): measured {conn:?} vs bound {l}"));
            }
            fields.insert(n as i64, f.clone());
            // Oracle side of the recursion, one field at a time.
            let mut rhs = vec![BTreeMap::new(); PRIMES.len()];
            for i in 1..k.min(n) {
                let m = n as i64 - k as i64 - i as i64;
                let part = if m <= 0 { &empty_fields } else { &fields[&m] };
                for (acc, b) in rhs.iter_mut().zip(part) {
                    add_into(acc, &shift(b));
                }
            }
            let identity = verify_l_recursion(n, k, &caps).map_err(|e| e.to_string())?;
            if rhs != f || !identity.pass || identity.lhs != prof {
                failures.push(format!("L({n},{k}): recursion identity fails"));
            }
            checked += 1;
        }
    }
    let msg = format!(
        "{checked} members (k=2,3,4; n<=18), bound and recursion, {} failures",
        failures.len()
    );
    match failures.first() {
        None => Ok(msg),
        Some(f) => Err(format!("{msg}; first: {f}")),
    }
}

fn criterion_5() -> Outcome {
    let caps = Caps::default();
    let params: Vec<(usize, usize)> = (6..=15).map(|n| (n, 2)).chain((12..=16).map(|n| (n, 3))).collect();
    let mut failures = Vec::new();
    for &(n, k) in &params {
        let g = circular_graph(n, k).map_err(|e| e.to_string())?;
        if !check_family_edges(&g, n, |i, j| j - i < k || n + i - j < k) || has_claw(&g) {
            failures.push(format!("C({n},{k}) has the wrong edges or a claw"));
            continue;
        }
        let f = field_profile(&independent_sets(&g));
        let prof = profile(&g, &caps).map_err(|e| e.to_string())?;
        let conn = connectivity(&g, &caps).map_err(|e| e.to_string())?;
        let c = floor_div(n as i64 + 1, 2 * k as i64 - 1) - 2;
        if bound_value(BoundKind::CFamily { n, k }).ok() != Some(c) {
            failures.push(format!("C({n},{k}): library bound differs from {c}"));
        }
        if !consistent(&prof, &f) || !conn.at_least(c) || !reaches(field_connectivity(&f), c) {
            failures.push(format!("C({n},{k}): measured {conn:?} vs bound {c}"));
        }
    }
    let msg = format!("{} members, {} violations", params.len(), failures.len());
    match failures.first() {
        None => Ok(msg),
        Some(f) => Err(format!("{msg}; first: {f}")),
    }
}

/// Oracle condition list `(removed, drop)` for the decomposition at `u`.
fn oracle_conditions(adj: &[u64], u: usize) -> Vec<(u64, i64)> {
    let nu = closed(adj, u);
    let mut out = Vec::new();
    for v in bits(adj[u]) {
        let nv = closed(adj, v);
        if nv & nu == nu {
            out.push((nv, 1));
        } else {
            out.push((nu | nv, 2));
        }
    }
    for (v1, v2) in non_edges_in(adj, adj[u]) {
        out.push((nu | (adj[v1] & adj[v2]), 1));
        let outer = (adj[v1] | adj[v2]) & !nu;
        for (w1, w2) in non_edges_in(adj, outer) {
            out.push((nu | closed(adj, w1) | closed(adj, w2), 2));
        }
    }
    out.sort_unstable();
    out
}

fn criterion_6(e: &Ensembles) -> Outcome {
    let caps = Caps::default();
    let mut pairs = 0usize;
    let mut nontrivial = 0usize;
    let mut failures = Vec::new();
    for ng in &e.claw_free {
        let g = &ng.graph;
        let adj = adjacency(g);
        let faces = independent_sets(g);
        let mut memo: HashMap<u64, Option<i64>> = HashMap::new();
        let mut conn_of = |removed: u64| -> Option<i64> {
            *memo.entry(removed).or_insert_with(|| {
                let sub: Vec<Vec<usize>> = faces
                    .iter()
                    .filter(|f| f.iter().all(|&v| removed >> v & 1 == 0))
                    .cloned()
                    .collect();
                oracle_connectivity(&sub)
            })
        };
        let whole = conn_of(0);
        let mut cache = ConnectivityCache::new(g, caps);
        for u in 0..g.n() {
            pairs += 1;
            let conditions = oracle_conditions(&adj, u);
            let plan = decompose_main_theorem(g, u).map_err(|e| e.to_string())?;
            let mut lib: Vec<(u64, i64)> = plan
                .conditions()
                .map(|c| (c.removed.iter().fold(0u64, |m, &v| m | 1 << v), c.drop))
                .collect();
            lib.sort_unstable();
            if lib != conditions {
                failures.push(format!("{} u={u}: condition list differs from the oracle", ng.id));
                continue;
            }
            // Largest n at which every condition holds; None when all do at every n.
            let level = conditions
                .iter()
                .filter_map(|&(removed, drop)| conn_of(removed).map(|c| c + drop))
                .min();
            if !reaches(whole, level.unwrap_or(i64::MAX)) || (level.is_none() && whole.is_some()) {
                failures.push(format!("{} u={u}: certified {level:?} but measured {whole:?}", ng.id));
            }
            let lib_level = max_certifiable_level(&plan, &mut cache).map_err(|e| e.to_string())?;
            if lib_level != level {
                failures.push(format!(
                    "{} u={u}: library level {lib_level:?} vs oracle {level:?}",
                    ng.id
                ));
            }
            if let Some(n) = level {
                if n >= 0 {
                    nontrivial += 1;
                }
                let at = certify_main_theorem(g, u, n, &caps).map_err(|e| e.to_string())?;
                let above = certify_main_theorem(g, u, n + 1, &caps).map_err(|e| e.to_string())?;
                if !at.hypotheses_hold || !at.pass || above.hypotheses_hold || !above.pass {
                    failures.push(format!("{} u={u}: library certificate disagrees at n={n}", ng.id));
                }
            }
        }
    }
    let msg = format!(
        "{pairs} (graph, u) pairs, {nontrivial} certify n>=0, {} counterexamples",
        failures.len()
    );
    match failures.first() {
        None => Ok(msg),
        Some(f) => Err(format!("{msg}; first: {f}")),
    }
}

fn criterion_7() -> Outcome {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut applied = 0usize;
    let mut steps = 0usize;
    let mut failures = Vec::new();
    while applied < 1000 {
        let n = rng.gen_range(3..=10);
        let p = rng.gen_range(0.15..0.85);
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
        let adj = adjacency(&g);
        let folds: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| (0..n).map(move |w| (v, w)))
            .filter(|&(v, w)| v != w && adj[v] & !adj[w] == 0)
            .collect();
        if folds.is_empty() {
            continue;
        }
        let (v, w) = folds[rng.gen_range(0..folds.len())];
        applied += 1;
        let (sub, seq) = match fold_collapse(&g, v, w, &caps) {
            Ok(x) => x,
            Err(e) => {
                failures.push(format!("fold ({v},{w}) rejected: {e}"));
                continue;
            }
        };
        steps += seq.len();
        let mut faces: HashSet<Vec<usize>> = independent_sets(&g).into_iter().collect();
        let mut bad = None;
        for (k, (sigma, tau)) in seq.steps.iter().enumerate() {
            let cofaces: Vec<Vec<usize>> = (0..n)
                .filter(|x| !sigma.contains(x))
                .map(|x| {
                    let mut f = sigma.clone();
                    f.push(x);
                    f.sort_unstable();
                    f
                })
                .filter(|f| faces.contains(f))
                .collect();
            if !faces.contains(sigma) || cofaces != [tau.clone()] {
                bad = Some(k);
                break;
            }
            faces.remove(sigma);
            faces.remove(tau);
        }
        let target: HashSet<Vec<usize>> = independent_sets_avoiding(&g, 1 << w).into_iter().collect();
        if bad.is_some() || faces != target {
            failures.push(format!("fold ({v},{w}) sequence invalid at step {bad:?}"));
            continue;
        }
        let before = reduced_homology(&independence_complex(&g, &caps).map_err(|e| e.to_string())?);
        let after = reduced_homology(&independence_complex(&sub.graph, &caps).map_err(|e| e.to_string())?);
        let oracle = field_profile(&independent_sets(&g));
        if before != after || !consistent(&before, &oracle) {
            failures.push(format!("fold ({v},{w}) changed homology: {before} vs {after}"));
        }
    }
    let msg = format!(
        "{applied} folds, {steps} elementary collapses replayed, {} failures",
        failures.len()
    );
    match failures.first() {
        None => Ok(msg),
        Some(f) => Err(format!("{msg}; first: {f}")),
    }
}

fn to_big(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect()
}

fn random_matrix(rng: &mut ChaCha8Rng, kind: usize) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=40);
    let cols = rng.gen_range(1..=40);
    match kind {
        0 => (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
            .collect(),
        1 | 2 => {
            let zero = if kind == 1 { 0.8 } else { 0.95 };
            (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| if rng.gen_bool(zero) { 0 } else { rng.gen_range(-9..=9) })
                        .collect()
                })
                .collect()
        }
        _ => {
            // Few base rows with small entries, scaled copies elsewhere.
            let base: Vec<Vec<i64>> = (0..rng.gen_range(1..=4))
                .map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            (0..rows)
                .map(|_| {
                    let b = &base[rng.gen_range(0..base.len())];
                    let c = rng.gen_range(-3..=3);
                    b.iter().map(|x| x * c).collect()
                })
                .collect()
        }
    }
}

fn sparse_compose_zero(lower: &clawtop::homology::BoundaryMatrix, upper: &clawtop::homology::BoundaryMatrix) -> bool {
    upper.columns.iter().all(|col| {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for &(k, b) in col {
            for &(i, a) in &lower.columns[k] {
                *acc.entry(i).or_default() += a * b;
            }
        }
        acc.values().all(|&x| x == 0)
    })
}

fn criterion_8(e: &Ensembles) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = Vec::new();
    let mut torsion = 0;
    for i in 0..200 {
        let rows = random_matrix(&mut rng, i % 4);
        let a = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&a);
        let oracle = invariant_factors(&rows);
        if snf.divisors != oracle {
            failures.push(format!(
                "matrix {i}: divisors {:?} vs oracle {:?}",
                snf.divisors, oracle
            ));
            continue;
        }
        let chain =
            snf.divisors.iter().all(|d| d.is_positive()) && snf.divisors.windows(2).all(|w| (&w[1] % &w[0]).is_zero());
        let big_a = to_big(&a);
        let (l, r, diag) = (to_big(&snf.left), to_big(&snf.right), to_big(&snf.diagonal));
        let product_ok = matmul(&matmul(&l, &big_a), &r) == diag;
        let diag_ok = diag.iter().enumerate().all(|(p, row)| {
            row.iter().enumerate().all(|(q, x)| {
                if p == q && p < snf.divisors.len() {
                    *x == snf.divisors[p]
                } else {
                    x.is_zero()
                }
            })
        });
        let unimodular = determinant(&l).abs().is_one() && determinant(&r).abs().is_one();
        if !(chain && product_ok && diag_ok && unimodular) {
            failures.push(format!(
                "matrix {i}: chain={chain} product={product_ok} diagonal={diag_ok} unimodular={unimodular}"
            ));
        }
        if snf.divisors.iter().any(|d| !d.is_one()) {
            torsion += 1;
        }
    }
    let caps = Caps::default();
    let mut complexes = 0;
    let families = (1..=18).flat_map(|n| (2..=4).map(move |k| interval_graph(n, k).unwrap()));
    let circular = (6..=16).flat_map(|n| (2..=3).filter_map(move |k| circular_graph(n, k).ok()));
    let graphs = e
        .claw_free
        .iter()
        .chain(&e.general)
        .map(|g| g.graph.clone())
        .chain(families)
        .chain(circular);
    for g in graphs {
        let complex = independence_complex(&g, &caps).map_err(|e| e.to_string())?;
        let mut f = vec![0usize; g.n()];
        for face in independent_sets(&g) {
            f[face.len() - 1] += 1;
        }
        f.retain(|&x| x > 0);
        let bms = boundary_matrices(&complex);
        let shapes = bms.len() == f.len() && bms.iter().zip(&f).all(|(b, &c)| b.cols() == c);
        if complex.f_vector() != f || !shapes || !bms.windows(2).all(|w| sparse_compose_zero(&w[0], &w[1])) {
            failures.push(format!("complex of {:?}: f-vector or boundary check failed", g.edges()));
        }
        complexes += 1;
    }
    let msg = format!(
        "200 matrices ({torsion} with a divisor > 1), {complexes} complexes with d∘d = 0, {} failures",
        failures.len()
    );
    match failures.first() {
        None => Ok(msg),
        Some(f) => Err(format!("{msg}; first: {f}")),
    }
}

fn criterion_9(e: &Ensembles) -> Outcome {
    let caps = Caps::default();
    let mut wedges = 0;
    let mut suspensions = 0;
    let mut failures = Vec::new();
    let graphs = e
        .general
        .iter()
        .chain(e.claw_free.iter().filter(|g| !g.id.starts_with("ex")));
    for ng in graphs {
        let g = &ng.graph;
        let adj = adjacency(g);
        let faces = independent_sets(g);
        let lhs = field_profile(&faces);
        let fields_without = |removed: u64| {
            let sub: Vec<Vec<usize>> = faces
                .iter()
                .filter(|f| f.iter().all(|&v| removed >> v & 1 == 0))
                .cloned()
                .collect();
            field_profile(&sub)
        };
        let simplicial = (0..g.n()).find(|&u| adj[u] != 0 && non_edges_in(&adj, adj[u]).is_empty());
        if let Some(u) = simplicial {
            let mut rhs = vec![BTreeMap::new(); PRIMES.len()];
            for v in bits(adj[u]) {
                for (acc, b) in rhs.iter_mut().zip(fields_without(closed(&adj, v))) {
                    add_into(acc, &shift(&b));
                }
            }
            let check = verify_wedge_decomposition(g, u, &caps).map_err(|e| e.to_string())?;
            if rhs != lhs || !check.pass || check.lhs != check.rhs || !consistent(&check.lhs, &lhs) {
                failures.push(format!("{} u={u}: wedge identity fails", ng.id));
            }
            wedges += 1;
        }
        let edge = (0..g.n()).find_map(|u| {
            let v = bits(adj[u]).into_iter().next()?;
            (u < v && adj[u] == 1 << v && adj[v] == 1 << u).then_some((u, v))
        });
        if let Some((u, v)) = edge {
            let rhs: Vec<BTreeMap<i32, usize>> = fields_without(1 << u | 1 << v).iter().map(shift).collect();
            let check = verify_component_suspension(g, u, v, &caps).map_err(|e| e.to_string())?;
            if rhs != lhs || !check.pass || check.lhs != check.rhs || !consistent(&check.lhs, &lhs) {
                failures.push(format!("{} {{{u},{v}}}: suspension identity fails", ng.id));
            }
            suspensions += 1;
        }
    }
    let total = wedges + suspensions;
    let msg = format!(
        "{total} instances ({wedges} wedge, {suspensions} suspension), {} failures",
        failures.len()
    );
    if total < 200 {
        return Err(format!("{msg}; fewer than 200 instances"));
    }
    match failures.first() {
        None => Ok(msg),
        Some(f) => Err(format!("{msg}; first: {f}")),
    }
}

fn main() {
    let spec = EnsembleSpec::default();
    let ensembles = Ensembles {
        claw_free: claw_free_ensemble(&spec).expect("claw-free ensemble"),
        general: general_ensemble(&spec),
    };
    let criteria: Vec<Criterion<'_>> = vec![
        ("claw-free connectivity bound", Box::new(|| criterion_1(&ensembles))),
        ("general connectivity bound", Box::new(|| criterion_2(&ensembles))),
        ("neighborhood union inequality", Box::new(|| criterion_3(&ensembles))),
        ("interval family", Box::new(criterion_4)),
        ("circular family", Box::new(criterion_5)),
        (
            "decomposition certificate soundness",
            Box::new(|| criterion_6(&ensembles)),
        ),
        ("fold collapse invariance", Box::new(criterion_7)),
        (
            "Smith normal form and boundary maps",
            Box::new(|| criterion_8(&ensembles)),
        ),
        ("wedge and suspension identities", Box::new(|| criterion_9(&ensembles))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
