//! Immutable simple undirected graphs stored as per-vertex bit rows.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..order`.
///
/// `rows[v]` holds the neighbourhood of `v`. Rows are symmetric and
/// loop-free; every constructor checks this in debug builds.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph { rows: vec![VertexSet::new(order); order] }
    }

    pub fn complete(order: usize) -> Self {
        let rows = (0..order)
            .map(|v| {
                let mut r = VertexSet::full(order);
                r.remove(v);
                r
            })
            .collect();
        Graph { rows }
    }

    /// Builds a graph from unordered pairs. Duplicate pairs collapse.
    pub fn from_edge_list(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// Internal constructor for callers that already guarantee valid pairs.
    pub(crate) fn from_pairs_unchecked(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            debug_assert!(u != v && u < order && v < order);
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        g.debug_check();
        g
    }

    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Self {
        let g = Graph { rows };
        g.debug_check();
        g
    }

    #[inline]
    fn debug_check(&self) {
        debug_assert!(self.check_invariants().is_ok(), "{:?}", self.check_invariants());
    }

    /// Verifies symmetry, loop-freeness and row widths.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.order();
        for (v, row) in self.rows.iter().enumerate() {
            if row.universe() != n {
                return Err(format!("row {v} has width {} != {n}", row.universe()));
            }
            if row.contains(v) {
                return Err(format!("loop at {v}"));
            }
            for u in row {
                if !self.rows[u].contains(v) {
                    return Err(format!("asymmetric pair ({v},{u})"));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            out.extend(self.rows[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// `G[S]`, relabelled in ascending id order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        if set.universe() != self.order() {
            return Err(Error::InvalidParameter(format!(
                "vertex set universe {} does not match order {}",
                set.universe(),
                self.order()
            )));
        }
        Ok(self.induced_by_list(&set.to_vec()))
    }

    /// Induced subgraph on `vertices`, with new vertex `i` = `vertices[i]`.
    pub fn induced_by_list(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut edges = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_pairs_unchecked(k, edges)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.rows[v].complement();
                r.remove(v);
                r
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Places the graphs side by side, block `i` after blocks `0..i`.
    pub fn disjoint_union(parts: &[Graph]) -> Graph {
        let order = parts.iter().map(Graph::order).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in parts {
            edges.extend(g.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
            offset += g.order();
        }
        Graph::from_pairs_unchecked(order, edges)
    }

    /// `a + b`: disjoint union plus every edge between the two sides.
    pub fn join(a: &Graph, b: &Graph) -> Graph {
        let na = a.order();
        let mut g = Graph::disjoint_union(&[a.clone(), b.clone()]);
        let order = g.order();
        for u in 0..na {
            for v in na..order {
                g.rows[u].insert(v);
                g.rows[v].insert(u);
            }
        }
        g.debug_check();
        g
    }

    /// Appends vertex `order` adjacent only to `v`.
    pub fn add_pendant(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let n = self.order();
        let mut edges = self.edges();
        edges.push((v, n));
        Ok(Graph::from_pairs_unchecked(n + 1, edges))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen[p] = true;
        }
        Ok(Graph::from_pairs_unchecked(n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v]))))
    }

    /// Connected components of `G[within]`, each as a vertex set, ordered by least member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::new(self.order());
            comp.insert(start);
            let mut frontier = comp.clone();
            remaining.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::new(self.order());
                for v in &frontier {
                    next.union_with(&self.rows[v]);
                }
                next.intersect_with(&remaining);
                remaining.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&self.vertex_set()).iter().map(VertexSet::to_vec).collect()
    }

    /// Number of components of `G[set]`; zero for the empty set.
    pub fn c_count(&self, set: &VertexSet) -> usize {
        self.components_within(set).len()
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components_within(&self.vertex_set()).len() <= 1
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in &self.rows[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Parses the edge-list text format: a first line with the order,
    /// then one `u v` pair per line. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, first) = lines.next().ok_or_else(|| Error::EdgeList("missing order line".into()))?;
        let order: usize =
            first.parse().map_err(|_| Error::EdgeList(format!("bad order line {first:?}")))?;
        let mut edges = Vec::new();
        for (i, line) in lines {
            let mut parts = line.split_whitespace();
            let mut next = || -> Result<usize> {
                parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::EdgeList(format!("line {}: expected `u v`", i + 1)))
            };
            let (u, v) = (next()?, next()?);
            edges.push((u, v));
        }
        Graph::from_edge_list(order, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn edge_list_examples() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(Graph::from_edge_list(2, &[]).unwrap(), Graph::empty(2));
        assert_eq!(cycle(5).edge_count(), 5);
        let dup = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::Loop(1)));
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let p3 = c5.induced_subgraph(&VertexSet::from_slice(5, &[0, 1, 2])).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(c5.induced_subgraph(&c5.vertex_set()).unwrap(), c5);
        let k5 = Graph::complete(5);
        let k3 = k5.induced_subgraph(&VertexSet::from_slice(5, &[0, 2, 4])).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert!(c5.induced_subgraph(&VertexSet::new(4)).is_err());
    }

    #[test]
    fn combinators() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let k2 = Graph::complete(2);
        let three_k2 = Graph::disjoint_union(&[k2.clone(), k2.clone(), k2]);
        let j = Graph::join(&Graph::complete(1), &three_k2);
        assert_eq!((j.order(), j.edge_count()), (7, 9));
        let p = Graph::complete(3).add_pendant(0).unwrap();
        assert_eq!((p.order(), p.edge_count(), p.degree(3)), (4, 4, 1));
        assert!(Graph::complete(3).add_pendant(3).is_err());
    }

    #[test]
    fn components_and_counts() {
        let k3 = Graph::complete(3);
        let two_k3 = Graph::disjoint_union(&[k3.clone(), k3]);
        let comps = two_k3.components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.c_count(star.neighbors(0)), 3);
        assert_eq!(star.c_count(&VertexSet::new(4)), 0);
        assert!(Graph::empty(0).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn edge_list_text_roundtrip() {
        let c5 = cycle(5);
        let text = c5.to_edge_list();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), c5);
        assert!(Graph::parse_edge_list("3\n0 x\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let g = cycle(4);
        assert!(g.relabel(&[0, 0, 1, 2]).is_err());
        let r = g.relabel(&[1, 2, 3, 0]).unwrap();
        assert_eq!(r.edge_count(), 4);
    }
}
