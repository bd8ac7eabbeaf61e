use std::time::Instant;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde::Serialize;

use super::{EnumerationScope, GraphSource, SuiteReport, Violation};
use crate::bitset::VertexSet;
use crate::detect;
use crate::enumerate::{self, Probability};
use crate::error::{Error, Result};
use crate::extract::{self, cds, matching, Scope};
use crate::graph::Graph;
use crate::graph6;
use crate::par::{self, Exec};
use crate::params::{self, PropertyKind};
use crate::patterns::{FamilySpec, TheoremId, Tier};

/// Runs `check` over every graph in parallel; returns (checks, violations).
fn over_graphs<F>(graphs: &[Graph], exec: Exec, check: F) -> (u64, Vec<Violation>)
where
    F: Fn(&Graph) -> (u64, Vec<Violation>) + Sync + Send,
{
    par::map(exec, graphs, check).into_iter().fold((0, Vec::new()), |(c, mut v), (c2, v2)| {
        v.extend(v2);
        (c + c2, v)
    })
}

/// `deg ≥ α_L ≥ c_L ≥ sdeg` at every vertex.
pub fn check_local_chain(scope: &EnumerationScope, exec: Exec) -> Result<SuiteReport> {
    if scope.source == GraphSource::Builtin && scope.max_order > 8 {
        return Err(Error::InvalidParameter("local chain runs exhaustively up to order 8".into()));
    }
    let t0 = Instant::now();
    let graphs = scope.load(exec)?;
    let mut rep = SuiteReport::new("local-chain", scope.describe());
    let (checks, violations) = over_graphs(&graphs, exec, |g| {
        let mut v = Vec::new();
        for (x, p) in params::all_profiles(g).iter().enumerate() {
            if !(p.deg >= p.alpha_l && p.alpha_l >= p.c_l && p.c_l >= p.sdeg) {
                v.push(Violation::new(
                    g,
                    format!("deg >= alphaL >= cL >= sdeg at vertex {x}"),
                    "non-increasing",
                    format!("{} {} {} {}", p.deg, p.alpha_l, p.c_l, p.sdeg),
                ));
            }
        }
        (g.order() as u64, v)
    });
    rep.checks = checks;
    rep.violations = violations;
    rep.notes.push(format!("{} graphs", graphs.len()));
    Ok(rep.finish(t0.elapsed()))
}

/// Every connected dominating set contains every cut vertex.
pub fn check_cds_claim(scope: &EnumerationScope, exec: Exec) -> Result<SuiteReport> {
    if scope.source == GraphSource::Builtin && scope.max_order > 7 {
        return Err(Error::InvalidParameter("dominating set enumeration runs up to order 7".into()));
    }
    let t0 = Instant::now();
    let graphs: Vec<Graph> = scope.load(exec)?.into_iter().filter(Graph::is_connected).collect();
    let mut rep = SuiteReport::new("cds-claim", scope.describe());
    let (checks, violations) = over_graphs(&graphs, exec, |g| {
        let cut = cds::cut_vertices(g);
        let all = match cds::all_connected_dominating_sets(g) {
            Ok(all) => all,
            Err(e) => return (0, vec![Violation::new(g, "enumerable dominating sets", "ok", e)]),
        };
        let v = all
            .iter()
            .filter(|d| !cut.is_subset(d))
            .map(|d| Violation::new(g, "cut vertices lie in every connected dominating set", format!("{cut:?} in D"), format!("{d:?}")))
            .collect();
        (all.len() as u64, v)
    });
    rep.checks = checks;
    rep.violations = violations;
    rep.notes.push(format!("{} connected graphs", graphs.len()));
    Ok(rep.finish(t0.elapsed()))
}

/// Monotonicity of `p_c` in `c` and the defining inequalities of the H-index,
/// for every parameter.
pub fn check_hindex_equivalence(scope: &EnumerationScope, exec: Exec) -> Result<SuiteReport> {
    let t0 = Instant::now();
    let graphs = scope.load(exec)?;
    let mut rep = SuiteReport::new("hindex-equivalence", scope.describe());
    let (checks, violations) = over_graphs(&graphs, exec, |g| {
        let mut v = Vec::new();
        let mut checks = 0u64;
        for prop in PropertyKind::ALL {
            let vals = params::values(g, prop);
            let top = g.order() + 1;
            let pk: Vec<usize> = (0..=top).map(|k| params::p_k_from_values(&vals, k)).collect();
            for c in 0..=top {
                for c1 in 0..=c {
                    checks += 1;
                    if pk[c] > pk[c1] {
                        v.push(Violation::new(g, format!("p_{c} <= p_{c1} ({prop})"), pk[c1], pk[c]));
                    }
                }
            }
            let h = params::h_index_from_values(&vals);
            checks += 1;
            if pk[h] < h || pk[h + 1] > h {
                v.push(Violation::new(
                    g,
                    format!("h-index {h} of {prop} satisfies p_h >= h > p_(h+1) - 1"),
                    format!("p_h >= {h}, p_(h+1) < {}", h + 1),
                    format!("p_h = {}, p_(h+1) = {}", pk[h], pk[h + 1]),
                ));
            }
        }
        (checks, v)
    });
    rep.checks = checks;
    rep.violations = violations;
    Ok(rep.finish(t0.elapsed()))
}

fn below(rng: &mut Xoshiro256StarStar, m: usize) -> usize {
    (rng.next_u64() % m as u64) as usize
}

/// A random instance with `|X| = size`: every `x` gets one `Y`-neighbour
/// through a shuffled block assignment, extra `X`–`Y` edges respect the cap,
/// and random edges inside `X` and inside `Y` are added to exercise the view.
fn random_instance(rng: &mut Xoshiro256StarStar, n_cap: usize, size: usize) -> (Graph, VertexSet, VertexSet) {
    let base = size.div_ceil(n_cap);
    let ny = base + below(rng, size + 1);
    let order = size + ny;
    let mut perm: Vec<usize> = (0..size).collect();
    for i in (1..size).rev() {
        perm.swap(i, below(rng, i + 1));
    }
    let mut load = vec![0usize; ny];
    let mut edges = Vec::new();
    for (slot, &x) in perm.iter().enumerate() {
        let y = slot / n_cap;
        load[y] += 1;
        edges.push((x, size + y));
    }
    for x in 0..size {
        for y in 0..ny {
            if load[y] < n_cap && below(rng, 4) == 0 && !edges.contains(&(x, size + y)) {
                load[y] += 1;
                edges.push((x, size + y));
            }
        }
    }
    for a in 0..order {
        for b in a + 1..order {
            if (a < size) == (b < size) && below(rng, 4) == 0 {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::from_edge_list(order, &edges).expect("valid instance");
    let x = VertexSet::from_slice(order, &(0..size).collect::<Vec<_>>());
    let y = VertexSet::from_slice(order, &(size..order).collect::<Vec<_>>());
    (g, x, y)
}

/// Random instances with `|X| = n_cap (p-1) + 1` must give at least `p`
/// induced pairs; the star instance with `|X| = n_cap (p-1)` has exactly `p-1`.
pub fn check_matching_lemma(trials: u64, n_cap_max: usize, p_max: usize, seed: u64) -> Result<SuiteReport> {
    if !(1..=4).contains(&n_cap_max) || !(1..=4).contains(&p_max) {
        return Err(Error::InvalidParameter("n_cap and p range over 1..=4".into()));
    }
    let t0 = Instant::now();
    let mut rep = SuiteReport::new(
        "matching-lemma",
        format!("{trials} random instances, n_cap <= {n_cap_max}, p <= {p_max}, seed {seed}"),
    );
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    for _ in 0..trials {
        let n_cap = 1 + below(&mut rng, n_cap_max);
        let p = 1 + below(&mut rng, p_max);
        let size = n_cap * (p - 1) + 1;
        let (g, x, y) = random_instance(&mut rng, n_cap, size);
        rep.checks += 1;
        match matching::greedy_induced_matching(&g, &x, &y, n_cap) {
            Ok(m) => {
                let induced = matching::is_induced_matching(&g, &m);
                let expected = if n_cap == 1 { size } else { p };
                if m.len() < expected || !induced || (n_cap == 1 && m.len() != size) {
                    rep.violations.push(Violation::new(
                        &g,
                        format!("induced matching of size >= {expected} (n_cap {n_cap}, |X| {size})"),
                        expected,
                        format!("{} pairs, induced {induced}", m.len()),
                    ));
                }
            }
            Err(e) => rep.violations.push(Violation::new(&g, "greedy matching accepts a valid instance", "ok", e)),
        }
    }
    for n_cap in 1..=n_cap_max {
        for p in 2..=p_max {
            let (g, x, y) = matching::tight_instance(n_cap, p);
            rep.checks += 1;
            let greedy = matching::greedy_induced_matching(&g, &x, &y, n_cap).map(|m| m.len());
            let exact = matching::max_induced_matching(&g, &x, &y);
            if greedy.as_ref().ok() != Some(&(p - 1)) || exact != p - 1 {
                rep.violations.push(Violation::new(
                    &g,
                    format!("tight instance n_cap {n_cap}, p {p} has induced matching number p-1"),
                    p - 1,
                    format!("greedy {greedy:?}, exhaustive {exact}"),
                ));
            }
        }
    }
    Ok(rep.finish(t0.elapsed()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub order: usize,
    pub free_graphs: usize,
    pub max_value: usize,
    pub argmax: Option<String>,
}

/// Maximum count over the family-free graphs of each order up to `order_cap`.
///
/// The count is the order for `connected_ramsey`, `p_2` for B₁/B₂ and the
/// H-index for B₃. The asserted property is that the maximum never rises
/// again once it has dropped below its peak; this is evidence of
/// boundedness, nothing more.
pub fn empirical_bound_scan(theorem: TheoremId, n: usize, order_cap: usize, connected: bool, exec: Exec) -> Result<SuiteReport> {
    if order_cap > enumerate::MAX_ENUM_ORDER {
        return Err(Error::SizeBudget { what: "bound scan", order: order_cap, limit: enumerate::MAX_ENUM_ORDER });
    }
    let t0 = Instant::now();
    let spec = FamilySpec::new(theorem, n)?;
    let graphs = spec.graphs();
    let value = |g: &Graph| -> usize {
        use TheoremId::*;
        match theorem {
            ConnectedRamsey => g.order(),
            B1Deg | B2Deg => params::p_k_count(g, PropertyKind::Deg, 2),
            B1AlphaL | B2AlphaL => params::p_k_count(g, PropertyKind::AlphaL, 2),
            B1CL | B2CL => params::p_k_count(g, PropertyKind::CL, 2),
            B1Sdeg | B2Sdeg => params::p_k_count(g, PropertyKind::Sdeg, 2),
            B3Deg => params::h_index(g, PropertyKind::Deg),
            B3AlphaLCL => params::h_index(g, PropertyKind::AlphaL),
            B3Sdeg => params::h_index(g, PropertyKind::Sdeg),
        }
    };
    let levels = enumerate::enumerate_hereditary(
        order_cap,
        connected,
        |g| detect::first_contained(g, &graphs).is_none(),
        exec,
    )?;
    let kind = if connected { "connected " } else { "" };
    let mut rep = SuiteReport::new("bound-scan", format!("{kind}{theorem}-free graphs, n = {n}, orders 1..={order_cap}"));
    let mut rows = Vec::new();
    for (order, level) in levels.iter().enumerate().skip(1) {
        let vals = par::map(exec, level, |g| value(g));
        let best = vals.iter().enumerate().max_by_key(|&(i, v)| (*v, std::cmp::Reverse(i)));
        rep.checks += level.len() as u64;
        rows.push(ScanRow {
            order,
            free_graphs: level.len(),
            max_value: best.map_or(0, |(_, &v)| v),
            argmax: best.map(|(i, _)| graph6::encode(&level[i]).expect("small graph")),
        });
    }
    let peak = rows.iter().map(|r| r.max_value).max().unwrap_or(0);
    let peak_at = rows.iter().position(|r| r.max_value == peak).unwrap_or(0);
    for w in rows[peak_at..].windows(2) {
        if w[1].max_value > w[0].max_value {
            let g = match &w[1].argmax {
                Some(s) => graph6::decode(s)?,
                None => Graph::empty(0),
            };
            rep.violations.push(Violation::new(
                &g,
                format!("maximum does not rise after its peak (order {} -> {})", w[0].order, w[1].order),
                format!("<= {}", w[0].max_value),
                w[1].max_value,
            ));
        }
    }
    rep.notes.push("plateau evidence only; no bound is proved by a finite scan".into());
    if peak_at + 1 == rows.len() && rows.len() > 1 && rows[peak_at - 1].max_value < peak {
        rep.notes.push(format!("maximum still rising at the cap: {} at order {}", peak, rows[peak_at].order));
    }
    rep.scan = Some(rows);
    Ok(rep.finish(t0.elapsed()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessConfig {
    pub trials: u64,
    pub max_order: usize,
    pub edge_prob: Probability,
    pub seed: u64,
}

fn check_outcome(
    g: &Graph,
    label: &str,
    spec: &FamilySpec,
    got: Result<Option<extract::WitnessReport>>,
    checks: &mut u64,
    v: &mut Vec<Violation>,
) {
    *checks += 1;
    let free = detect::is_hfree(g, spec).is_free();
    match got {
        Err(e) => v.push(Violation::new(g, format!("{label}: extraction runs"), "ok", e)),
        Ok(Some(r)) => {
            let member_ok = spec.members.get(r.member_index) == Some(&r.member);
            if !r.verify(g) || !member_ok || free {
                v.push(Violation::new(
                    g,
                    format!("{label}: witness is an induced member"),
                    "valid embedding, host not free",
                    format!("{} via {:?}, verified {}, free {free}", r.member, r.embedding.map, r.verify(g)),
                ));
            }
        }
        Ok(None) if !free => v.push(Violation::new(g, format!("{label}: None only for free hosts"), "witness", "none")),
        Ok(None) => {}
    }
}

/// Random hosts; every extraction output must verify and `None` must agree
/// with direct freeness, for each parameter and `n ∈ {2, 3}`.
pub fn validate_witnesses(cfg: WitnessConfig, exec: Exec) -> Result<SuiteReport> {
    if cfg.max_order == 0 || cfg.max_order > 30 {
        return Err(Error::InvalidParameter("host order ranges over 1..=30".into()));
    }
    let t0 = Instant::now();
    let mut rng = Xoshiro256StarStar::seed_from_u64(cfg.seed);
    let hosts: Vec<(usize, u64)> =
        (0..cfg.trials).map(|_| (1 + below(&mut rng, cfg.max_order), rng.next_u64())).collect();
    let mut rep = SuiteReport::new(
        "witnesses",
        format!("{} random hosts, order <= {}, seed {}", cfg.trials, cfg.max_order, cfg.seed),
    );
    let results = par::map(exec, &hosts, |&(order, s)| {
        let g = enumerate::random_graph(order, cfg.edge_prob, s);
        let mut checks = 0u64;
        let mut v = Vec::new();
        let connected = g.is_connected();
        for n in [2usize, 3] {
            if connected {
                let spec = FamilySpec::new(TheoremId::ConnectedRamsey, n).expect("n >= 1");
                let got = extract::connected_unavoidable_with(&g, n, Exec::Sequential);
                check_outcome(&g, &format!("connected_ramsey n={n}"), &spec, got, &mut checks, &mut v);
            }
            for prop in PropertyKind::ALL {
                for (tier, scope) in [(Tier::B1, Some(Scope::Connected)), (Tier::B2, Some(Scope::General)), (Tier::B3, None)] {
                    if tier == Tier::B1 && !connected {
                        continue;
                    }
                    let theorem = TheoremId::for_tier(tier, prop);
                    let spec = FamilySpec::new(theorem, n).expect("n >= 1");
                    let got = match scope {
                        Some(sc) => extract::extract_b1_witness_with(&g, prop, n, sc, Exec::Sequential),
                        None => extract::extract_b3_witness_with(&g, prop, n, Exec::Sequential),
                    };
                    check_outcome(&g, &format!("{theorem} ({prop}) n={n}"), &spec, got, &mut checks, &mut v);
                }
            }
        }
        (checks, v)
    });
    for (c, v) in results {
        rep.checks += c;
        rep.violations.extend(v);
    }
    Ok(rep.finish(t0.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scopes_pass() {
        let s = EnumerationScope::builtin(5, false);
        assert!(check_local_chain(&s, Exec::Sequential).unwrap().passed());
        assert!(check_hindex_equivalence(&s, Exec::Sequential).unwrap().passed());
        let c = EnumerationScope::builtin(5, true);
        assert!(check_cds_claim(&c, Exec::Sequential).unwrap().passed());
    }

    #[test]
    fn matching_suite() {
        let r = check_matching_lemma(300, 3, 4, 1).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }

    #[test]
    fn sdeg_scan_is_flat() {
        let r = empirical_bound_scan(TheoremId::B1Sdeg, 3, 6, true, Exec::Sequential).unwrap();
        assert!(r.passed());
        assert!(r.scan.unwrap().iter().all(|row| row.max_value == 0));
    }

    #[test]
    fn witnesses_small_run() {
        let cfg = WitnessConfig { trials: 20, max_order: 12, edge_prob: Probability::new(3, 10).unwrap(), seed: 5 };
        let r = validate_witnesses(cfg, Exec::Sequential).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.to_json(), validate_witnesses(cfg, Exec::Parallel).unwrap().to_json());
    }
}
