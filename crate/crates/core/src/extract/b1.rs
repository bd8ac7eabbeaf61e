//! Proof-guided search for the B₁ and B₂ families.
//!
//! The common shape: find a vertex `s` whose neighbourhood holds a large
//! clique or independent set `X`, give every `x ∈ X` a private-looking
//! neighbour `y_x`, then either some `y` sees `n` of the `x`'s (pigeonhole)
//! or an induced matching between `X` and the `y`'s exists, and the matched
//! `y`'s contain a clique or an independent set of size `n`.

use std::cmp::Reverse;

use super::connected::geodesic_path;
use super::matching::greedy_induced_matching;
use super::strip::strip_min_local;
use super::{guided, localized, WitnessReport};
use super::coloring::{mono_clique_extract, EdgeColoring};
use crate::bitset::VertexSet;
use crate::detect;
use crate::graph::Graph;
use crate::params::{self, PropertyKind};
use crate::patterns::{CopyBase, FamilySpec, Pattern};

fn closed_nbhd(g: &Graph, s: usize) -> VertexSet {
    let mut c = g.neighbors(s).clone();
    c.insert(s);
    c
}

/// `(x, y_x)` with `y_x` the least neighbour of `x` in `allowed`.
fn private_neighbours(g: &Graph, xs: &VertexSet, allowed: &VertexSet) -> Vec<(usize, usize)> {
    xs.iter().filter_map(|x| g.neighbors(x).intersection(allowed).first().map(|y| (x, y))).collect()
}

/// First `y` (ascending) adjacent to at least `n` vertices of `xs`, with those `n`.
fn pigeonhole(g: &Graph, xs: &VertexSet, ys: &VertexSet, n: usize) -> Option<(usize, Vec<usize>)> {
    ys.iter().find_map(|y| {
        let a = g.neighbors(y).intersection(xs);
        (a.len() >= n).then(|| (y, a.iter().take(n).collect()))
    })
}

fn matched(g: &Graph, pairs: &[(usize, usize)], n: usize) -> Option<Vec<(usize, usize)>> {
    let xs = VertexSet::from_slice(g.order(), &pairs.iter().map(|p| p.0).collect::<Vec<_>>());
    let ys = VertexSet::from_slice(g.order(), &pairs.iter().map(|p| p.1).collect::<Vec<_>>());
    let m = greedy_induced_matching(g, &xs, &ys, n - 1).ok()?;
    (m.len() >= n).then_some(m)
}

fn xs_then_ys(pairs: &[(usize, usize)]) -> Vec<usize> {
    pairs.iter().map(|p| p.0).chain(pairs.iter().map(|p| p.1)).collect()
}

/// Matched pairs whose `y`'s form a clique (`true`) or an independent set of size `n`.
fn split_by_y(g: &Graph, m: &[(usize, usize)], n: usize) -> Vec<(bool, Vec<(usize, usize)>)> {
    let ys = VertexSet::from_slice(g.order(), &m.iter().map(|p| p.1).collect::<Vec<_>>());
    let pick = |set: VertexSet| -> Vec<(usize, usize)> {
        m.iter().copied().filter(|p| set.contains(p.1)).take(n).collect()
    };
    let mut out = Vec::new();
    let k = params::max_clique(g, &ys);
    if k.len() >= n {
        out.push((true, pick(k)));
    }
    let s = params::max_independent_set(g, &ys);
    if s.len() >= n {
        out.push((false, pick(s)));
    }
    out
}

/// `s` adjacent to an independent set `xs`; pendants `y_x` anywhere outside `{s} ∪ xs`.
fn deg_star(g: &Graph, spec: &FamilySpec, s: usize, xs: &VertexSet) -> Option<WitnessReport> {
    let n = spec.n;
    let mut allowed = g.vertex_set();
    allowed.remove(s);
    let pairs = private_neighbours(g, xs, &allowed);
    let live = VertexSet::from_slice(g.order(), &pairs.iter().map(|p| p.0).collect::<Vec<_>>());
    let ys = VertexSet::from_slice(g.order(), &pairs.iter().map(|p| p.1).collect::<Vec<_>>());
    if let Some((y, a)) = pigeonhole(g, &live, &ys, n) {
        let member = if g.has_edge(s, y) { Pattern::EdgeJoinIndependent(n) } else { Pattern::CompleteBipartite(2, n) };
        let mut map = vec![s, y];
        map.extend(a);
        return guided(g, spec, member, map);
    }
    let m = matched(g, &pairs, n)?;
    let s_idx = params::max_independent_set(g, &VertexSet::from_slice(g.order(), &m.iter().map(|p| p.1).collect::<Vec<_>>()));
    let (on, off): (Vec<(usize, usize)>, Vec<(usize, usize)>) =
        m.iter().copied().filter(|p| s_idx.contains(p.1)).partition(|p| g.has_edge(s, p.1));
    if on.len() >= n {
        let mut map = vec![s];
        map.extend(on[..n].iter().flat_map(|&(x, y)| [x, y]));
        return guided(g, spec, Pattern::VertexJoinMatching(n), map);
    }
    if off.len() >= n {
        let mut map = vec![s];
        map.extend(xs_then_ys(&off[..n]));
        return guided(g, spec, Pattern::StarPendants(n), map);
    }
    None
}

fn deg_pipeline(g: &Graph, spec: &FamilySpec) -> Option<WitnessReport> {
    let n = spec.n;
    let k = params::max_clique(g, &g.vertex_set());
    if k.len() >= n {
        if let Some(r) = guided(g, spec, Pattern::Complete(n), k.iter().take(n).collect()) {
            return Some(r);
        }
    }
    let (_, removed) = strip_min_local(g, PropertyKind::Deg).ok()?;
    let kept = removed.complement();
    let (s, xs) = kept
        .iter()
        .map(|s| (s, params::max_independent_set(g, &g.neighbors(s).intersection(&kept))))
        .max_by_key(|(s, x)| (x.len(), Reverse(*s)))?;
    deg_star(g, spec, s, &xs)
}

/// `xs` a clique in `N(s)`; partners are taken outside `N[s]`.
fn clique_case(g: &Graph, spec: &FamilySpec, s: usize, xs: &VertexSet) -> Option<WitnessReport> {
    let n = spec.n;
    let outside = closed_nbhd(g, s).complement();
    if let Some((y, a)) = pigeonhole(g, xs, &outside, n) {
        let mut map = vec![s, y];
        map.extend(a);
        if let Some(r) = guided(g, spec, Pattern::NonEdgeJoinClique(n), map) {
            return Some(r);
        }
    }
    let pairs = private_neighbours(g, xs, &outside);
    let m = matched(g, &pairs, n)?;
    split_by_y(g, &m, n).into_iter().find_map(|(clique, sel)| {
        let member = if clique { Pattern::MatchedCliques(n) } else { Pattern::CliquePendants(n) };
        guided(g, spec, member, xs_then_ys(&sel))
    })
}

/// `xs` independent in `N(s)`; partners outside `N[s]` where they exist.
/// With `triples` the remaining `x`'s are used for the `K_1 + nP_3` colouring.
fn independent_case(g: &Graph, spec: &FamilySpec, s: usize, xs: &VertexSet, triples: bool) -> Option<WitnessReport> {
    let n = spec.n;
    let outside = closed_nbhd(g, s).complement();
    let pairs = private_neighbours(g, xs, &outside);
    let x1 = VertexSet::from_slice(g.order(), &pairs.iter().map(|p| p.0).collect::<Vec<_>>());
    let ys = VertexSet::from_slice(g.order(), &pairs.iter().map(|p| p.1).collect::<Vec<_>>());
    if let Some((y, a)) = pigeonhole(g, &x1, &ys, n) {
        let mut map = vec![s, y];
        map.extend(a);
        if let Some(r) = guided(g, spec, Pattern::CompleteBipartite(2, n), map) {
            return Some(r);
        }
    }
    if let Some(m) = matched(g, &pairs, n) {
        for (clique, sel) in split_by_y(g, &m, n) {
            let r = if clique {
                let map: Vec<usize> = sel.iter().map(|p| p.1).chain(sel.iter().map(|p| p.0)).collect();
                guided(g, spec, Pattern::CliquePendants(n), map)
            } else {
                let mut map = vec![s];
                map.extend(xs_then_ys(&sel));
                guided(g, spec, Pattern::StarPendants(n), map)
            };
            if r.is_some() {
                return r;
            }
        }
    }
    if triples {
        return triple_case(g, spec, s, &xs.difference(&x1));
    }
    None
}

/// Each `x` whose other neighbours all lie in `N(s)` spans a `P_3` `y - x - z`
/// inside `N(s)`. Colour pairs of disjoint triples by their 9 cross
/// adjacencies; a colour-0 clique is `K_1 + nP_3`, any other colour class is
/// searched directly together with `s`.
fn triple_case(g: &Graph, spec: &FamilySpec, s: usize, x2: &VertexSet) -> Option<WitnessReport> {
    let n = spec.n;
    let mut used = VertexSet::new(g.order());
    used.insert(s);
    let mut triples: Vec<[usize; 3]> = Vec::new();
    for x in x2.iter() {
        if used.contains(x) {
            continue;
        }
        let cand = g.neighbors(x).intersection(g.neighbors(s)).difference(&used);
        let pair = cand.iter().find_map(|y| {
            let z = cand.difference(g.neighbors(y)).iter().find(|&z| z > y)?;
            Some((y, z))
        });
        if let Some((y, z)) = pair {
            for v in [x, y, z] {
                used.insert(v);
            }
            triples.push([y, x, z]);
        }
    }
    if triples.len() < n {
        return None;
    }
    let col = EdgeColoring::from_fn(triples.len(), 9, |i, j| {
        let mut key = 0u128;
        for a in 0..3 {
            for b in 0..3 {
                key = key << 1 | g.has_edge(triples[i][a], triples[j][b]) as u128;
            }
        }
        key
    });
    let target = (n + 2).min(triples.len());
    let mono = mono_clique_extract(&col, target)?;
    let chosen: Vec<[usize; 3]> = mono.vertices.iter().map(|i| triples[i]).collect();
    if mono.color == 0 && chosen.len() >= n {
        let mut map = vec![s];
        map.extend(chosen[..n].iter().flatten());
        if let Some(r) = guided(g, spec, Pattern::VertexJoinPaths(n), map) {
            return Some(r);
        }
    }
    let mut local = vec![s];
    local.extend(chosen.iter().flatten());
    localized(g, spec, &local)
}

fn alpha_l_pipeline(g: &Graph, spec: &FamilySpec) -> Option<WitnessReport> {
    let (_, removed) = strip_min_local(g, PropertyKind::AlphaL).ok()?;
    let kept = removed.complement();
    let clique = kept
        .iter()
        .map(|s| (s, params::max_clique(g, &g.neighbors(s).intersection(&kept))))
        .max_by_key(|(s, x)| (x.len(), Reverse(*s)));
    if let Some((s, xs)) = clique {
        if let Some(r) = clique_case(g, spec, s, &xs) {
            return Some(r);
        }
    }
    let (s, xs) = kept
        .iter()
        .map(|s| (s, params::max_independent_set(g, &g.neighbors(s).intersection(&kept))))
        .max_by_key(|(s, x)| (x.len(), Reverse(*s)))?;
    independent_case(g, spec, s, &xs, true)
}

fn c_l_pipeline(g: &Graph, spec: &FamilySpec) -> Option<WitnessReport> {
    let s = (0..g.order()).max_by_key(|&v| (g.c_count(g.neighbors(v)), Reverse(v)))?;
    let reps: Vec<usize> = g.components_within(g.neighbors(s)).iter().filter_map(VertexSet::first).collect();
    let xs = VertexSet::from_slice(g.order(), &reps);
    if let Some(r) = independent_case(g, spec, s, &xs, false) {
        return Some(r);
    }
    let (s, xs) = (0..g.order())
        .map(|s| (s, params::max_clique(g, g.neighbors(s))))
        .max_by_key(|(s, x)| (x.len(), Reverse(*s)))?;
    clique_case(g, spec, s, &xs)
}

/// Connected host; `spec` may be a B₁ or B₂ family, candidates outside it are dropped.
pub(super) fn connected_pipeline(g: &Graph, prop: PropertyKind, spec: &FamilySpec) -> Option<WitnessReport> {
    let n = spec.n;
    if n < 2 || g.order() < n {
        return None;
    }
    if prop != PropertyKind::Sdeg {
        if let Some(r) = geodesic_path(g, n).and_then(|p| guided(g, spec, Pattern::Path(n), p)) {
            return Some(r);
        }
    }
    match prop {
        PropertyKind::Deg => deg_pipeline(g, spec),
        PropertyKind::AlphaL => alpha_l_pipeline(g, spec),
        PropertyKind::CL => c_l_pipeline(g, spec),
        PropertyKind::Sdeg => None,
    }
}

/// `n` components each holding an induced copy of `base`, else the connected
/// pipeline component by component.
pub(super) fn general_pipeline(g: &Graph, prop: PropertyKind, spec: &FamilySpec) -> Option<WitnessReport> {
    let n = spec.n;
    let comps = g.components();
    for base in [CopyBase::P3, CopyBase::K3] {
        let bg = base.graph();
        let mut map = Vec::new();
        for c in &comps {
            if map.len() == n * bg.order() {
                break;
            }
            if let Some(e) = detect::find_induced(&g.induced_by_list(c), &bg) {
                map.extend(e.map.iter().map(|&i| c[i]));
            }
        }
        if map.len() == n * bg.order() {
            if let Some(r) = guided(g, spec, Pattern::Copies(n, base), map) {
                return Some(r);
            }
        }
    }
    comps.iter().find_map(|c| {
        let sub = g.induced_by_list(c);
        let r = connected_pipeline(&sub, prop, spec)?;
        guided(g, spec, r.member, r.embedding.map.iter().map(|&i| c[i]).collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::{extract_b1_witness, Method, Scope};
    use crate::patterns::TheoremId;

    #[test]
    fn examples() {
        let k26 = Pattern::CompleteBipartite(2, 6).build().unwrap();
        let r = extract_b1_witness(&k26, PropertyKind::Deg, 5, Scope::Connected).unwrap().unwrap();
        assert_eq!(r.member, Pattern::CompleteBipartite(2, 5));
        assert!(r.verify(&k26));

        let p7 = Pattern::Path(7).build().unwrap();
        let r = extract_b1_witness(&p7, PropertyKind::Sdeg, 3, Scope::Connected).unwrap().unwrap();
        assert_eq!(r.member, Pattern::Path(3));

        let c9 = Graph::from_edge_list(9, &(0..9).map(|i| (i, (i + 1) % 9)).collect::<Vec<_>>()).unwrap();
        let r = extract_b1_witness(&c9, PropertyKind::Deg, 4, Scope::Connected).unwrap().unwrap();
        assert_eq!(r.member, Pattern::Path(4));
    }

    #[test]
    fn proof_guided_branches() {
        let spec = |t, n| FamilySpec::new(t, n).unwrap();
        let cases = [
            (Pattern::StarPendants(4), TheoremId::B1Deg, PropertyKind::Deg),
            (Pattern::VertexJoinMatching(3), TheoremId::B1Deg, PropertyKind::Deg),
            (Pattern::EdgeJoinIndependent(3), TheoremId::B1Deg, PropertyKind::Deg),
            (Pattern::NonEdgeJoinClique(3), TheoremId::B1AlphaL, PropertyKind::AlphaL),
            (Pattern::MatchedCliques(3), TheoremId::B1AlphaL, PropertyKind::AlphaL),
            (Pattern::VertexJoinPaths(3), TheoremId::B1AlphaL, PropertyKind::AlphaL),
            (Pattern::CliquePendants(3), TheoremId::B1CL, PropertyKind::CL),
        ];
        for (p, t, prop) in cases {
            let g = p.build().unwrap();
            let r = connected_pipeline(&g, prop, &spec(t, 3)).unwrap_or_else(|| panic!("{p}"));
            assert!(r.verify(&g), "{p}");
            assert_eq!(r.method, Method::ProofGuided);
        }
    }

    #[test]
    fn general_scope_copies() {
        let g = Pattern::Copies(3, CopyBase::P3).build().unwrap();
        let r = extract_b1_witness(&g, PropertyKind::Sdeg, 3, Scope::General).unwrap().unwrap();
        assert_eq!(r.member, Pattern::Copies(3, CopyBase::P3));
        assert_eq!(r.method, Method::ProofGuided);
    }
}
