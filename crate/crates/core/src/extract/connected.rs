use num_traits::ToPrimitive;

use super::{direct_search, guided, WitnessReport};
use crate::bounds::{self, RamseyMode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;
use crate::params;
use crate::patterns::{FamilySpec, Pattern, TheoremId};

/// A shortest path on `len` vertices starting at some vertex, if one exists.
/// Shortest paths are induced.
pub(crate) fn geodesic_path(g: &Graph, len: usize) -> Option<Vec<usize>> {
    if len == 0 {
        return Some(Vec::new());
    }
    for s in 0..g.order() {
        let dist = g.bfs_distances(s);
        let Some(mut t) = (0..g.order()).find(|&v| dist[v] == Some(len - 1)) else {
            continue;
        };
        let mut path = vec![t];
        for d in (0..len - 1).rev() {
            t = g.neighbors(t).iter().find(|&u| dist[u] == Some(d)).expect("bfs predecessor");
            path.push(t);
        }
        path.reverse();
        return Some(path);
    }
    None
}

/// `K_n` (centre plus a clique of `n-1`) or `K_{1,n}` inside the closed
/// neighbourhood of `v`, when `N(v)` is large enough to hold one of them.
fn neighbourhood_ramsey(g: &Graph, spec: &FamilySpec, v: usize, n: usize) -> Option<WitnessReport> {
    let nb = g.neighbors(v);
    let mis = params::max_independent_set(g, nb);
    if mis.len() >= n {
        let mut map = vec![v];
        map.extend(mis.iter().take(n));
        return guided(g, spec, Pattern::Star(n), map);
    }
    let k = params::max_clique(g, nb);
    if k.len() + 1 >= n {
        let mut map = vec![v];
        map.extend(k.iter().take(n - 1));
        return guided(g, spec, Pattern::Complete(n), map);
    }
    None
}

pub fn connected_unavoidable(g: &Graph, n: usize) -> Result<Option<WitnessReport>> {
    connected_unavoidable_with(g, n, Exec::default())
}

/// One of `K_n`, `K_{1,n}`, `P_n` in a connected graph.
///
/// Tries a geodesic on `n` vertices, then a vertex whose degree reaches the
/// diagonal Ramsey bound, then direct search.
pub fn connected_unavoidable_with(g: &Graph, n: usize, exec: Exec) -> Result<Option<WitnessReport>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spec = FamilySpec::new(TheoremId::ConnectedRamsey, n)?;
    if let Some(p) = geodesic_path(g, n) {
        if let Some(r) = guided(g, &spec, Pattern::Path(n), p) {
            return Ok(Some(r));
        }
    }
    let r = bounds::r2_upper(n as u64, n as u64, RamseyMode::KnownTable)?;
    if let Some(limit) = r.exact().and_then(ToPrimitive::to_usize) {
        if let Some(v) = (0..g.order()).find(|&v| g.degree(v) >= limit) {
            if let Some(r) = neighbourhood_ramsey(g, &spec, v, n) {
                return Ok(Some(r));
            }
        }
    }
    Ok(direct_search(g, &spec, exec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::Method;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn examples() {
        let r = connected_unavoidable(&cycle(9), 4).unwrap().unwrap();
        assert_eq!(r.member, Pattern::Path(4));
        assert_eq!(r.method, Method::ProofGuided);
        assert!(r.verify(&cycle(9)));

        let k7 = Graph::complete(7);
        let r = connected_unavoidable(&k7, 5).unwrap().unwrap();
        assert_eq!(r.member, Pattern::Complete(5));

        let star = Pattern::Star(9).build().unwrap();
        let r = connected_unavoidable(&star, 4).unwrap().unwrap();
        assert_eq!(r.member, Pattern::Star(4));
        assert!(r.verify(&star));
    }

    #[test]
    fn free_and_disconnected() {
        // C_5 contains an induced P_4, C_4 does not.
        assert!(connected_unavoidable(&cycle(5), 4).unwrap().is_some());
        assert!(connected_unavoidable(&cycle(4), 4).unwrap().is_none());
        assert!(matches!(connected_unavoidable(&Graph::empty(3), 2), Err(Error::Disconnected)));
    }
}
