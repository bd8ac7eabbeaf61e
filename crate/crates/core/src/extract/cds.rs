//! Connected dominating sets and cut vertices.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params;

/// Largest order accepted by the exact subset enumeration.
pub const EXACT_CDS_LIMIT: usize = 16;

/// `set` is non-empty, induces a connected subgraph and dominates every vertex.
pub fn is_connected_dominating(g: &Graph, set: &VertexSet) -> bool {
    if set.is_empty() {
        return g.order() == 0;
    }
    let mut closed = set.clone();
    for v in set.iter() {
        closed.union_with(g.neighbors(v));
    }
    closed.len() == g.order() && g.components_within(set).len() == 1
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for p in (0..k).rev() {
        if idx[p] < n - k + p {
            idx[p] += 1;
            for r in p + 1..k {
                idx[r] = idx[r - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum connected dominating set by enumeration in increasing size; the
/// lexicographically least set of minimum size is returned.
pub fn min_connected_dominating_set(g: &Graph) -> Result<VertexSet> {
    require_connected(g)?;
    let n = g.order();
    if n > EXACT_CDS_LIMIT {
        return Err(Error::SizeBudget { what: "connected dominating set", order: n, limit: EXACT_CDS_LIMIT });
    }
    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let s = VertexSet::from_slice(n, &idx);
            if is_connected_dominating(g, &s) {
                return Ok(s);
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(VertexSet::new(n))
}

/// Every connected dominating set, for exhaustive checks on small graphs.
pub fn all_connected_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    require_connected(g)?;
    let n = g.order();
    if n > EXACT_CDS_LIMIT {
        return Err(Error::SizeBudget { what: "connected dominating set", order: n, limit: EXACT_CDS_LIMIT });
    }
    Ok((1u32..1 << n)
        .map(|mask| VertexSet::from_slice(n, &(0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>()))
        .filter(|s| is_connected_dominating(g, s))
        .collect())
}

/// Internal vertices of a BFS tree from a vertex of maximum degree, then
/// pruned by dropping vertices (highest id first) while the set stays valid.
fn greedy_cds(g: &Graph) -> VertexSet {
    let n = g.order();
    let root = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).expect("order >= 1");
    let dist = g.bfs_distances(root);
    let mut internal = VertexSet::new(n);
    internal.insert(root);
    for v in 0..n {
        let d = dist[v].expect("connected");
        if d == 0 {
            continue;
        }
        let parent = g.neighbors(v).iter().find(|&u| dist[u] == Some(d - 1)).expect("bfs parent");
        internal.insert(parent);
    }
    for v in (0..n).rev() {
        if internal.contains(v) && internal.len() > 1 {
            internal.remove(v);
            if !is_connected_dominating(g, &internal) {
                internal.insert(v);
            }
        }
    }
    internal
}

/// Exact minimum up to [`EXACT_CDS_LIMIT`], otherwise a greedy upper bound.
/// The flag tells which one was returned.
pub fn connected_dominating_set(g: &Graph) -> Result<(VertexSet, bool)> {
    require_connected(g)?;
    if g.order() <= EXACT_CDS_LIMIT {
        return Ok((min_connected_dominating_set(g)?, true));
    }
    Ok((greedy_cds(g), false))
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    let vals = params::values(g, params::PropertyKind::Sdeg);
    VertexSet::from_slice(g.order(), &(0..g.order()).filter(|&v| vals[v] >= 2).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::Pattern;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn examples() {
        let star = Pattern::Star(5).build().unwrap();
        assert_eq!(min_connected_dominating_set(&star).unwrap().to_vec(), vec![0]);
        for n in 4..9 {
            assert_eq!(min_connected_dominating_set(&cycle(n)).unwrap().len(), n - 2);
        }
        let p5 = Pattern::Path(5).build().unwrap();
        assert_eq!(cut_vertices(&p5).to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn errors() {
        assert!(matches!(min_connected_dominating_set(&Graph::empty(2)), Err(Error::Disconnected)));
        assert!(matches!(min_connected_dominating_set(&cycle(17)), Err(Error::SizeBudget { .. })));
    }

    #[test]
    fn greedy_is_valid_on_large_cycles() {
        let (s, exact) = connected_dominating_set(&cycle(30)).unwrap();
        assert!(!exact);
        assert!(is_connected_dominating(&cycle(30), &s));
        assert_eq!(s.len(), 28);
    }
}
