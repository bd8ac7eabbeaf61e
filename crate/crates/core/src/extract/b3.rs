//! Proof-guided search for the B₃ families.
//!
//! Build disjoint groups `v_i` with leaves `v_i^1 … v_i^n` (how the leaves are
//! picked depends on the parameter), colour each pair of groups by the
//! `1 + 2n + n²` indicator bits between them, and take a monochromatic clique
//! of `2n` groups. For `α_L`/`c_L` the leaf sets of that clique are
//! additionally uniformized. The colour-0 case is `nK_{1,n}` outright;
//! other colours are resolved by direct search on the selected groups.

use std::cmp::Reverse;

use super::coloring::{mono_clique_extract, EdgeColoring};
use super::uniform::multipartite_uniformize;
use super::{guided, localized, WitnessReport};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::params::{self, PropertyKind};
use crate::patterns::{CopyBase, FamilySpec, Pattern};

/// Colour keys must fit in 128 bits.
const MAX_GROUP_N: usize = 10;

struct Group {
    centre: usize,
    leaves: Vec<usize>,
}

/// Candidate leaves of `v` among `free`, already pairwise non-adjacent except for `Deg`.
fn leaves(g: &Graph, prop: PropertyKind, v: usize, free: &VertexSet, want: usize) -> Option<Vec<usize>> {
    let nb = g.neighbors(v).intersection(free);
    let out: Vec<usize> = match prop {
        PropertyKind::Deg => nb.iter().take(want).collect(),
        PropertyKind::AlphaL => params::max_independent_set(g, &nb).iter().take(want).collect(),
        PropertyKind::CL => g.components_within(&nb).iter().filter_map(VertexSet::first).take(want).collect(),
        PropertyKind::Sdeg => {
            let mut rest = g.vertex_set();
            rest.remove(v);
            g.components_within(&rest)
                .iter()
                .filter_map(|c| c.intersection(&nb).first())
                .take(want)
                .collect()
        }
    };
    (out.len() == want).then_some(out)
}

fn groups(g: &Graph, prop: PropertyKind, n: usize, want: usize) -> Vec<Group> {
    let vals = params::values(g, prop);
    let mut order: Vec<usize> = (0..g.order()).filter(|&v| vals[v] >= n).collect();
    order.sort_by_key(|&v| (Reverse(vals[v]), v));
    let mut free = g.vertex_set();
    let mut out = Vec::new();
    for v in order {
        if !free.contains(v) {
            continue;
        }
        let mut f = free.clone();
        f.remove(v);
        if let Some(ls) = leaves(g, prop, v, &f, want) {
            free.remove(v);
            for &l in &ls {
                free.remove(l);
            }
            out.push(Group { centre: v, leaves: ls });
        }
    }
    out
}

pub(super) fn pipeline(g: &Graph, prop: PropertyKind, spec: &FamilySpec) -> Option<WitnessReport> {
    let n = spec.n;
    if !(2..=MAX_GROUP_N).contains(&n) {
        return None;
    }
    let want = match prop {
        PropertyKind::AlphaL | PropertyKind::CL => 3 * n,
        _ => n,
    };
    let gs = groups(g, prop, n, want);
    if gs.len() < n {
        return None;
    }
    let width = (1 + 2 * n + n * n) as u32;
    let col = EdgeColoring::from_fn(gs.len(), width, |i, j| {
        let (a, b) = (&gs[i], &gs[j]);
        let mut key = g.has_edge(a.centre, b.centre) as u128;
        for k in 0..n {
            key = key << 1 | g.has_edge(a.centre, b.leaves[k]) as u128;
            key = key << 1 | g.has_edge(b.centre, a.leaves[k]) as u128;
        }
        for x in &a.leaves[..n] {
            for y in &b.leaves[..n] {
                key = key << 1 | g.has_edge(*x, *y) as u128;
            }
        }
        key
    });
    let mono = mono_clique_extract(&col, (2 * n).min(gs.len()))?;
    let chosen: Vec<&Group> = mono.vertices.iter().map(|i| &gs[i]).collect();
    let leaf_sets: Vec<Vec<usize>> = match prop {
        PropertyKind::AlphaL | PropertyKind::CL => {
            let parts: Vec<VertexSet> =
                chosen.iter().map(|c| VertexSet::from_slice(g.order(), &c.leaves)).collect();
            match multipartite_uniformize(g, &parts, n) {
                Ok(Some(u)) => u.iter().map(VertexSet::to_vec).collect(),
                _ => chosen.iter().map(|c| c.leaves[..n].to_vec()).collect(),
            }
        }
        _ => chosen.iter().map(|c| c.leaves[..n].to_vec()).collect(),
    };
    if mono.color == 0 && chosen.len() >= n {
        let map: Vec<usize> = chosen
            .iter()
            .zip(&leaf_sets)
            .take(n)
            .flat_map(|(c, ls)| std::iter::once(c.centre).chain(ls.iter().copied()))
            .collect();
        if let Some(r) = guided(g, spec, Pattern::Copies(n, CopyBase::Star(n)), map) {
            return Some(r);
        }
    }
    let mut local: Vec<usize> = chosen.iter().map(|c| c.centre).collect();
    local.extend(leaf_sets.iter().flatten());
    localized(g, spec, &local)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::{extract_b3_witness, Method};

    #[test]
    fn examples() {
        let r = extract_b3_witness(&Graph::complete(7), PropertyKind::Deg, 3).unwrap().unwrap();
        assert_eq!(r.member, Pattern::Complete(3));

        let stars = Pattern::Copies(5, CopyBase::Star(5)).build().unwrap();
        let r = extract_b3_witness(&stars, PropertyKind::Sdeg, 3).unwrap().unwrap();
        assert_eq!(r.member, Pattern::Copies(3, CopyBase::Star(3)));
        assert_eq!(r.method, Method::ProofGuided);
        assert!(r.verify(&stars));

        let k44 = Pattern::CompleteBipartite(4, 4).build().unwrap();
        let r = extract_b3_witness(&k44, PropertyKind::AlphaL, 3).unwrap().unwrap();
        assert_eq!(r.member, Pattern::CompleteBipartite(3, 3));
    }

    #[test]
    fn guided_deg_on_stars() {
        let stars = Pattern::Copies(6, CopyBase::Star(3)).build().unwrap();
        let spec = FamilySpec::new(crate::patterns::TheoremId::B3Deg, 3).unwrap();
        let r = pipeline(&stars, PropertyKind::Deg, &spec).unwrap();
        assert_eq!(r.member, Pattern::Copies(3, CopyBase::Star(3)));
    }
}
