//! Induced subgraph search, family freeness and the family order `≤`.
//!
//! The matcher assigns pattern vertices in index order and tries host
//! vertices in ascending order, so the first embedding found is the
//! lexicographically least one. Candidate domains for every unassigned
//! pattern vertex are narrowed by bit-row intersection after each
//! assignment; an empty domain cuts the branch.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Exec};
use crate::params;
use crate::patterns::{FamilyKind, FamilySpec, Pattern};

/// `map[a]` is the host vertex playing pattern vertex `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Embedding {
    pub pattern_order: usize,
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self, host_order: usize) -> VertexSet {
        VertexSet::from_slice(host_order, &self.map)
    }
}

/// Independent check: injective, in range, and adjacency equal in both directions.
pub fn verify_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    let k = pattern.order();
    if map.len() != k || map.iter().any(|&h| h >= host.order()) {
        return false;
    }
    for a in 0..k {
        for b in 0..k {
            if a != b && (map[a] == map[b] || host.has_edge(map[a], map[b]) != pattern.has_edge(a, b)) {
                return false;
            }
        }
    }
    true
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    non_nbrs: Vec<VertexSet>,
    map: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl Matcher<'_> {
    fn search(&mut self, k: usize, domains: &[VertexSet]) -> Result<bool> {
        let m = self.pattern.order();
        if k == m {
            return Ok(true);
        }
        for h in domains[k].iter() {
            self.nodes += 1;
            if let Some(b) = self.budget {
                if self.nodes > b {
                    return Err(Error::BudgetExceeded(b));
                }
            }
            let mut next = Vec::with_capacity(m);
            next.extend(domains[..=k].iter().cloned());
            let mut dead = false;
            for j in k + 1..m {
                let mut d = if self.pattern.has_edge(k, j) {
                    domains[j].intersection(self.host.neighbors(h))
                } else {
                    domains[j].intersection(&self.non_nbrs[h])
                };
                d.remove(h);
                if d.is_empty() {
                    dead = true;
                    break;
                }
                next.push(d);
            }
            if dead {
                continue;
            }
            self.map[k] = h;
            if self.search(k + 1, &next)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Least embedding of `pattern` into `host` as an induced subgraph, with an
/// optional cap on search nodes.
pub fn find_induced_budget(host: &Graph, pattern: &Graph, budget: Option<u64>) -> Result<Option<Embedding>> {
    let n = host.order();
    let m = pattern.order();
    if m > n {
        return Ok(None);
    }
    let non_nbrs: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut r = host.neighbors(v).complement();
            r.remove(v);
            r
        })
        .collect();
    let host_deg: Vec<usize> = (0..n).map(|v| host.degree(v)).collect();
    let domains: Vec<VertexSet> = (0..m)
        .map(|a| {
            let d = pattern.degree(a);
            let nd = m - 1 - d;
            let mut s = VertexSet::new(n);
            for v in 0..n {
                if host_deg[v] >= d && n - 1 - host_deg[v] >= nd {
                    s.insert(v);
                }
            }
            s
        })
        .collect();
    if domains.iter().any(VertexSet::is_empty) {
        return Ok(None);
    }
    let mut mt = Matcher { host, pattern, non_nbrs, map: vec![0; m], nodes: 0, budget };
    if mt.search(0, &domains)? {
        Ok(Some(Embedding { pattern_order: m, map: mt.map }))
    } else {
        Ok(None)
    }
}

pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    find_induced_budget(host, pattern, None).expect("no budget set")
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_induced(host, pattern).is_some()
}

/// Outcome of a freeness test; the witness is the first member in statement order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Freeness {
    Free,
    Witness { member_index: usize, member: Pattern, embedding: Embedding },
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

pub fn is_hfree(host: &Graph, spec: &FamilySpec) -> Freeness {
    is_hfree_with(host, spec, Exec::Sequential)
}

pub fn is_hfree_with(host: &Graph, spec: &FamilySpec, exec: Exec) -> Freeness {
    let graphs = spec.graphs();
    match par::find_first(exec, &graphs, |p| find_induced(host, p)) {
        Some((i, embedding)) => Freeness::Witness { member_index: i, member: spec.members[i], embedding },
        None => Freeness::Free,
    }
}

/// Freeness against an explicit list of graphs.
pub fn first_contained(host: &Graph, members: &[Graph]) -> Option<(usize, Embedding)> {
    members.iter().enumerate().find_map(|(i, p)| find_induced(host, p).map(|e| (i, e)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum LeqOutcome {
    /// For every member of the right list: `(right index, left index, embedding)`.
    Holds { certificate: Vec<(usize, usize, Embedding)> },
    /// A right-hand member containing no left-hand member.
    Fails { uncovered: usize },
}

/// `H1 ≤ H2`: every graph of `h2` contains some graph of `h1` as an induced subgraph.
pub fn family_leq(h1: &[Graph], h2: &[Graph]) -> LeqOutcome {
    let mut cert = Vec::with_capacity(h2.len());
    for (j, big) in h2.iter().enumerate() {
        match first_contained(big, h1) {
            Some((i, e)) => cert.push((j, i, e)),
            None => return LeqOutcome::Fails { uncovered: j },
        }
    }
    LeqOutcome::Holds { certificate: cert }
}

fn longest_induced_path(g: &Graph) -> usize {
    fn extend(g: &Graph, last: usize, blocked: &VertexSet, len: usize, best: &mut usize, cap: usize) {
        if len > *best {
            *best = len;
        }
        if *best == cap {
            return;
        }
        for w in g.neighbors(last).iter() {
            if blocked.contains(w) {
                continue;
            }
            // Everything adjacent to `last` (other than `w`) may no longer join the path.
            let mut nb = blocked.union(g.neighbors(last));
            nb.insert(last);
            extend(g, w, &nb, len + 1, best, cap);
        }
    }
    let n = g.order();
    let mut best = 0;
    for s in 0..n {
        let mut blocked = VertexSet::new(n);
        blocked.insert(s);
        extend(g, s, &blocked, 1, &mut best, n);
    }
    best
}

fn best_pair_common_alpha(g: &Graph, adjacent: bool) -> usize {
    let n = g.order();
    let mut best = 0;
    for u in 0..n {
        for w in u + 1..n {
            if g.has_edge(u, w) != adjacent {
                continue;
            }
            let common = g.neighbors(u).intersection(g.neighbors(w));
            if common.len() > best {
                best = best.max(params::independence_number(g, &common));
            }
        }
    }
    best
}

/// Generic: grow `n` while `kind(n)` still embeds.
pub fn max_parameter_generic(host: &Graph, kind: FamilyKind) -> usize {
    let mut n = 0;
    loop {
        let p = kind.instance(n + 1);
        let (order, _) = p.expected_counts().expect("positive parameter");
        if order > host.order() {
            return n;
        }
        if !contains_induced(host, &p.build().expect("positive parameter")) {
            return n;
        }
        n += 1;
    }
}

/// Largest `n ≥ 0` with `kind(n) ≺ host`.
pub fn max_parameter(host: &Graph, kind: FamilyKind) -> usize {
    let all = host.vertex_set();
    match kind {
        FamilyKind::Complete => params::clique_number(host, &all),
        FamilyKind::Edgeless => params::independence_number(host, &all),
        FamilyKind::Star => params::values(host, params::PropertyKind::AlphaL).into_iter().max().unwrap_or(0),
        FamilyKind::Path => longest_induced_path(host),
        FamilyKind::Bipartite(2) => best_pair_common_alpha(host, false),
        FamilyKind::EdgeJoinIndependent => best_pair_common_alpha(host, true),
        other => max_parameter_generic(host, other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::TheoremId;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn petersen() -> Graph {
        Graph::from_edge_list(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn find_examples() {
        let c5 = cycle(5);
        let p4 = Pattern::Path(4).build().unwrap();
        let e = find_induced(&c5, &p4).unwrap();
        assert!(verify_embedding(&c5, &p4, &e.map));
        assert_eq!(e.map, vec![0, 1, 2, 3]);
        assert!(find_induced(&c5, &Graph::complete(3)).is_none());
        let triples = (0..5).flat_map(|a| (a + 1..5).flat_map(move |b| (b + 1..5).map(move |c| (a, b, c))));
        assert!(triples.into_iter().all(|(a, b, c)| !(c5.has_edge(a, b) && c5.has_edge(b, c) && c5.has_edge(a, c))));
        assert_eq!(find_induced(&petersen(), &Graph::empty(1)).unwrap().map, vec![0]);
    }

    #[test]
    fn budget_is_enforced() {
        let host = Graph::empty(20);
        let pat = Graph::complete(2);
        assert!(find_induced_budget(&host, &pat, Some(5)).unwrap().is_none());
        let host = Graph::complete(12);
        let pat = Graph::empty(2);
        // Degree filter leaves no candidates, so no nodes are spent.
        assert!(find_induced_budget(&host, &pat, Some(1)).unwrap().is_none());
        let host = cycle(12);
        let pat = Graph::complete(3);
        assert!(matches!(find_induced_budget(&host, &pat, Some(3)), Err(Error::BudgetExceeded(3))));
    }

    #[test]
    fn max_parameter_examples() {
        let p = petersen();
        assert_eq!(max_parameter(&p, FamilyKind::Complete), 2);
        assert_eq!(max_parameter(&p, FamilyKind::Star), 3);
        assert_eq!(max_parameter(&cycle(9), FamilyKind::Path), 8);
        assert_eq!(max_parameter(&Graph::empty(3), FamilyKind::Path), 1);
        assert_eq!(max_parameter(&Graph::empty(0), FamilyKind::Path), 0);
    }

    #[test]
    fn hfree_examples() {
        let spec = FamilySpec::new(TheoremId::B1Deg, 3).unwrap();
        match is_hfree(&cycle(7), &spec) {
            Freeness::Witness { member, .. } => assert_eq!(member, Pattern::Path(3)),
            Freeness::Free => panic!("C7 contains P3"),
        }
        assert!(is_hfree(&Graph::complete(2), &spec).is_free());
        let k44 = Pattern::CompleteBipartite(4, 4).build().unwrap();
        let spec = FamilySpec::new(TheoremId::B3Deg, 3).unwrap();
        match is_hfree_with(&k44, &spec, Exec::Parallel) {
            Freeness::Witness { member, .. } => assert_eq!(member, Pattern::CompleteBipartite(3, 3)),
            Freeness::Free => panic!("K4,4 contains K3,3"),
        }
    }

    #[test]
    fn leq_examples() {
        let p3 = vec![Pattern::Path(3).build().unwrap()];
        let big = vec![Pattern::Path(5).build().unwrap(), Pattern::StarPendants(4).build().unwrap()];
        assert!(matches!(family_leq(&p3, &big), LeqOutcome::Holds { .. }));
        assert_eq!(family_leq(&[Graph::complete(3)], &[cycle(5)]), LeqOutcome::Fails { uncovered: 0 });
        assert!(matches!(family_leq(&big, &big), LeqOutcome::Holds { .. }));
    }
}
