//! Induced matchings in the bipartite view `G[X, Y]`.
//!
//! Only `X`–`Y` edges are part of the view; edges inside `X` or inside `Y`
//! are ignored.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_view(g: &Graph, x: &VertexSet, y: &VertexSet, n_cap: usize) -> Result<()> {
    if let Some(v) = x.intersection(y).first() {
        return Err(Error::Overlap(v));
    }
    for v in x.iter() {
        if g.neighbors(v).is_disjoint(y) {
            return Err(Error::Precondition { vertex: v, message: "X-vertex has no neighbour in Y".into() });
        }
    }
    for v in y.iter() {
        let d = g.neighbors(v).intersection_len(x);
        if d > n_cap {
            return Err(Error::Precondition {
                vertex: v,
                message: format!("Y-vertex has {d} neighbours in X, cap is {n_cap}"),
            });
        }
    }
    Ok(())
}

/// True when the only view edges among the matched vertices are the pairs themselves.
pub fn is_induced_matching(g: &Graph, pairs: &[(usize, usize)]) -> bool {
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if !g.has_edge(a, b) {
            return false;
        }
        for &(c, d) in &pairs[i + 1..] {
            if a == c || b == d || a == d || b == c || g.has_edge(a, d) || g.has_edge(c, b) {
                return false;
            }
        }
    }
    true
}

/// Greedy induced matching in `G[X, Y]`.
///
/// Each round takes the `x` of least current degree (least id on ties) and
/// its least-id neighbour `y`, then drops `N(y) ∩ X` from `X` and `N(x)` from
/// `Y`. Because `x` has least degree, no surviving `x'` loses all its
/// neighbours, so each round removes at most `n_cap` vertices of `X` and the
/// result has at least `⌈|X| / n_cap⌉` pairs.
pub fn greedy_induced_matching(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    n_cap: usize,
) -> Result<Vec<(usize, usize)>> {
    if n_cap == 0 && !x.is_empty() {
        return Err(Error::InvalidParameter("n_cap must be >= 1".into()));
    }
    check_view(g, x, y, n_cap)?;
    let mut xs = x.clone();
    let mut ys = y.clone();
    let mut pairs = Vec::new();
    while !xs.is_empty() {
        let (xv, _) = xs
            .iter()
            .map(|v| (v, g.neighbors(v).intersection_len(&ys)))
            .min_by_key(|&(v, d)| (d, v))
            .expect("non-empty");
        let yv = g.neighbors(xv).intersection(&ys).first().expect("every live X-vertex keeps a neighbour");
        pairs.push((xv, yv));
        xs.difference_with(g.neighbors(yv));
        xs.remove(xv);
        ys.difference_with(g.neighbors(xv));
        ys.remove(yv);
    }
    assert!(is_induced_matching(g, &pairs), "greedy matching lost inducedness");
    Ok(pairs)
}

/// Exhaustive maximum induced matching in the view; exponential, small inputs only.
pub fn max_induced_matching(g: &Graph, x: &VertexSet, y: &VertexSet) -> usize {
    let edges: Vec<(usize, usize)> = x
        .iter()
        .flat_map(|a| g.neighbors(a).intersection(y).iter().map(move |b| (a, b)).collect::<Vec<_>>())
        .collect();
    fn rec(g: &Graph, edges: &[(usize, usize)], i: usize, chosen: &mut Vec<(usize, usize)>, best: &mut usize) {
        if chosen.len() + (edges.len() - i) <= *best {
            return;
        }
        if i == edges.len() {
            *best = chosen.len();
            return;
        }
        let (a, b) = edges[i];
        if chosen
            .iter()
            .all(|&(c, d)| a != c && b != d && !g.has_edge(a, d) && !g.has_edge(c, b))
        {
            chosen.push((a, b));
            rec(g, edges, i + 1, chosen, best);
            chosen.pop();
        }
        rec(g, edges, i + 1, chosen, best);
    }
    let mut best = 0;
    rec(g, &edges, 0, &mut Vec::new(), &mut best);
    best
}

/// `p - 1` disjoint stars `K_{1,n_cap}` centred in `Y`: `|X| = n_cap (p-1)` and
/// the induced matching number is exactly `p - 1`. Returns `(graph, X, Y)`.
pub fn tight_instance(n_cap: usize, p: usize) -> (Graph, VertexSet, VertexSet) {
    let stars = p.saturating_sub(1);
    let order = stars * (n_cap + 1);
    let mut edges = Vec::new();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for s in 0..stars {
        let c = s * (n_cap + 1);
        ys.push(c);
        for l in 1..=n_cap {
            xs.push(c + l);
            edges.push((c, c + l));
        }
    }
    let g = Graph::from_pairs_unchecked(order, edges);
    (g, VertexSet::from_slice(order, &xs), VertexSet::from_slice(order, &ys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{CopyBase, Pattern};

    #[test]
    fn perfect_matching() {
        let g = Pattern::Copies(3, CopyBase::K2).build().unwrap();
        let x = VertexSet::from_slice(6, &[0, 2, 4]);
        let y = VertexSet::from_slice(6, &[1, 3, 5]);
        assert_eq!(greedy_induced_matching(&g, &x, &y, 1).unwrap().len(), 3);
    }

    #[test]
    fn tightness_example() {
        let g = Graph::from_edge_list(3, &[(0, 2), (1, 2)]).unwrap();
        let x = VertexSet::from_slice(3, &[0, 1]);
        let y = VertexSet::from_slice(3, &[2]);
        assert_eq!(greedy_induced_matching(&g, &x, &y, 2).unwrap(), vec![(0, 2)]);
        let (g, x, y) = tight_instance(2, 3);
        assert_eq!(x.len(), 4);
        assert_eq!(max_induced_matching(&g, &x, &y), 2);
        assert_eq!(greedy_induced_matching(&g, &x, &y, 2).unwrap().len(), 2);
    }

    /// Every bipartite graph with |X| = 3, |Y| ≤ 3, cap 2 meeting the preconditions.
    #[test]
    fn all_small_instances() {
        for ny in 1..=3usize {
            let pairs = 3 * ny;
            for mask in 0u32..1 << pairs {
                let edges: Vec<(usize, usize)> = (0..pairs)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| (b / ny, 3 + b % ny))
                    .collect();
                let g = Graph::from_edge_list(3 + ny, &edges).unwrap();
                let x = VertexSet::from_slice(3 + ny, &[0, 1, 2]);
                let y = VertexSet::from_slice(3 + ny, &(3..3 + ny).collect::<Vec<_>>());
                match greedy_induced_matching(&g, &x, &y, 2) {
                    Ok(m) => {
                        assert!(m.len() >= 2, "{edges:?}");
                        assert!(max_induced_matching(&g, &x, &y) >= m.len());
                    }
                    Err(Error::Precondition { .. }) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn preconditions_reported() {
        let g = Graph::from_edge_list(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let x = VertexSet::from_slice(4, &[0, 1, 2]);
        let y = VertexSet::from_slice(4, &[3]);
        assert!(matches!(
            greedy_induced_matching(&g, &x, &y, 2),
            Err(Error::Precondition { vertex: 3, .. })
        ));
        let x = VertexSet::from_slice(4, &[0, 1]);
        let y = VertexSet::from_slice(4, &[1, 3]);
        assert!(matches!(greedy_induced_matching(&g, &x, &y, 2), Err(Error::Overlap(1))));
    }
}
