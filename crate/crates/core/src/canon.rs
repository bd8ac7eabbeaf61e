//! Canonical labelling for small graphs (order ≤ 10).
//!
//! Vertices are first split into cells by colour refinement, which is
//! label-invariant. The canonical key is the lexicographically least
//! column-major upper-triangle string over all orderings that respect the
//! cell order, found by a prefix-pruned permutation search.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_CANON_ORDER: usize = 10;

/// Canonical form of a graph; equal iff the graphs are isomorphic.
/// Ordering is by order first, then by the adjacency string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub order: u8,
    /// Column-major upper triangle, first pair in the most significant used bit.
    pub bits: u64,
}

impl CanonicalKey {
    pub fn to_bytes(self) -> Vec<u8> {
        let mut v = vec![self.order];
        v.extend_from_slice(&self.bits.to_be_bytes());
        v
    }

    /// The canonical representative itself.
    pub fn to_graph(self) -> Graph {
        let n = self.order as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.bits >> (total - 1 - k)) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_pairs_unchecked(n, edges)
    }
}

/// Colour refinement starting from degrees; returns a colour per vertex
/// where colour ids are ranks of sorted signatures.
fn refine(rows: &[u16]) -> Vec<u32> {
    let n = rows.len();
    let mut colors: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    let mut classes = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> =
                    (0..n).filter(|&u| rows[v] >> u & 1 == 1).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> =
            sigs.iter().map(|s| sorted.binary_search(s).unwrap() as u32).collect();
        colors = next;
        if sorted.len() == classes {
            return colors;
        }
        classes = sorted.len();
    }
}

struct Search<'a> {
    rows: &'a [u16],
    cell_of_pos: Vec<u32>,
    colors: Vec<u32>,
    perm: Vec<usize>,
    used: u16,
    prefix: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    fn dfs(&mut self, k: usize) {
        let n = self.rows.len();
        if k == n {
            let better = match &self.best {
                None => true,
                Some(b) => n > 0 && self.prefix[n - 1] < b[n - 1],
            };
            if better || self.best.is_none() {
                self.best = Some(self.prefix.clone());
            }
            return;
        }
        let cell = self.cell_of_pos[k];
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.colors[v] != cell {
                continue;
            }
            let mut col = 0u64;
            for i in 0..k {
                col = (col << 1) | (self.rows[self.perm[i]] >> v & 1) as u64;
            }
            let prev = if k == 0 { 0 } else { self.prefix[k - 1] };
            let p = (prev << k) | col;
            if let Some(b) = &self.best {
                if p > b[k] {
                    continue;
                }
            }
            self.prefix[k] = p;
            self.perm[k] = v;
            self.used |= 1 << v;
            self.dfs(k + 1);
            self.used &= !(1 << v);
        }
    }
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::SizeBudget { what: "canonical form", order: n, limit: MAX_CANON_ORDER });
    }
    let rows: Vec<u16> =
        (0..n).map(|v| g.neighbors(v).iter().fold(0u16, |a, u| a | (1 << u))).collect();
    Ok(canonical_key_rows(&rows))
}

pub(crate) fn canonical_key_rows(rows: &[u16]) -> CanonicalKey {
    let n = rows.len();
    let colors = refine(rows);
    let mut cell_of_pos = colors.clone();
    cell_of_pos.sort_unstable();
    let mut s = Search {
        rows,
        cell_of_pos,
        colors,
        perm: vec![0; n],
        used: 0,
        prefix: vec![0; n],
        best: None,
    };
    s.dfs(0);
    let bits = if n == 0 { 0 } else { s.best.unwrap()[n - 1] };
    CanonicalKey { order: n as u8, bits }
}

/// Canonical byte key: order byte followed by the adjacency string.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    canonical_key(g).map(CanonicalKey::to_bytes)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let degs = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degs(a) != degs(b) {
        return Ok(false);
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    /// Brute-force oracle: explicit permutation search for an isomorphism.
    fn iso_by_permutation(a: &Graph, b: &Graph) -> bool {
        fn rec(a: &Graph, b: &Graph, k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let n = a.order();
            if k == n {
                return true;
            }
            for v in 0..n {
                if used[v] {
                    continue;
                }
                if (0..k).all(|i| a.has_edge(i, k) == b.has_edge(perm[i], v)) {
                    used[v] = true;
                    perm.push(v);
                    if rec(a, b, k + 1, perm, used) {
                        return true;
                    }
                    perm.pop();
                    used[v] = false;
                }
            }
            false
        }
        a.order() == b.order() && rec(a, b, 0, &mut Vec::new(), &mut vec![false; a.order()])
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = cycle(5);
        assert!(iso_by_permutation(&c5, &c5.complement()));
        assert!(are_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn p4_vs_claw() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let claw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &claw).unwrap());
    }

    #[test]
    fn key_round_trips_to_isomorphic_graph() {
        let petersen = Graph::from_edge_list(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let key = canonical_key(&petersen).unwrap();
        let rep = key.to_graph();
        assert!(iso_by_permutation(&petersen, &rep));
        assert_eq!(canonical_key(&rep).unwrap(), key);
    }

    #[test]
    fn rejects_large_orders() {
        assert!(canonical_key(&Graph::empty(11)).is_err());
        assert_eq!(canonical_key(&Graph::empty(0)).unwrap().order, 0);
    }
}
