//! Complete edge colourings and monochromatic clique extraction.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::params;

/// Colour of every unordered pair of `0..order`. Keys are bit tuples of a
/// declared `width` (at most 128), so the alphabet is `2^width`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    order: usize,
    width: u32,
    colors: Vec<u128>,
}

fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

impl EdgeColoring {
    /// `f(i, j)` is called with `i < j`.
    pub fn from_fn(order: usize, width: u32, mut f: impl FnMut(usize, usize) -> u128) -> EdgeColoring {
        assert!(width <= 128, "colour width {width} exceeds 128 bits");
        let mut colors = vec![0; order * order.saturating_sub(1) / 2];
        for j in 1..order {
            for i in 0..j {
                let c = f(i, j);
                debug_assert!(width == 128 || c >> width == 0);
                colors[pair_index(i, j)] = c;
            }
        }
        EdgeColoring { order, width, colors }
    }

    /// Colour 1 on edges of `g`, 0 on non-edges.
    pub fn from_graph(g: &Graph) -> EdgeColoring {
        EdgeColoring::from_fn(g.order(), 1, |i, j| g.has_edge(i, j) as u128)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn color(&self, i: usize, j: usize) -> u128 {
        assert!(i != j);
        self.colors[pair_index(i, j)]
    }

    fn class_graph(&self, c: u128) -> Graph {
        let mut e = Vec::new();
        for j in 1..self.order {
            for i in 0..j {
                if self.color(i, j) == c {
                    e.push((i, j));
                }
            }
        }
        Graph::from_pairs_unchecked(self.order, e)
    }

    pub fn is_monochromatic(&self, set: &[usize], c: u128) -> bool {
        set.iter().enumerate().all(|(k, &a)| set[k + 1..].iter().all(|&b| self.color(a, b) == c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoClique {
    pub color: u128,
    pub vertices: VertexSet,
}

/// Pivot chain: take the least remaining vertex as pivot and keep its
/// largest colour class (smallest key on ties). Pivots sharing a colour,
/// plus the final pivot, form a monochromatic clique.
fn pivot_chain(col: &EdgeColoring, target: usize) -> Option<MonoClique> {
    let n = col.order();
    let mut cand: Vec<usize> = (0..n).collect();
    let mut chain: Vec<(usize, Option<u128>)> = Vec::new();
    while let Some((&p, rest)) = cand.split_first() {
        if rest.is_empty() {
            chain.push((p, None));
            break;
        }
        let mut classes: Vec<(u128, Vec<usize>)> = Vec::new();
        for &v in rest {
            let c = col.color(p, v);
            match classes.iter_mut().find(|(k, _)| *k == c) {
                Some((_, vs)) => vs.push(v),
                None => classes.push((c, vec![v])),
            }
        }
        classes.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
        let (c, keep) = classes.swap_remove(0);
        chain.push((p, Some(c)));
        cand = keep;
    }
    let &(last, _) = chain.last()?;
    let mut tally: Vec<(u128, usize)> = Vec::new();
    for &(_, c) in &chain {
        if let Some(c) = c {
            match tally.iter_mut().find(|(k, _)| *k == c) {
                Some((_, m)) => *m += 1,
                None => tally.push((c, 1)),
            }
        }
    }
    tally.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let &(c, m) = tally.first()?;
    if m + 1 < target {
        return None;
    }
    let mut members: Vec<usize> =
        chain.iter().filter(|(_, k)| *k == Some(c)).map(|&(v, _)| v).take(target - 1).collect();
    members.push(last);
    debug_assert!(col.is_monochromatic(&members, c));
    Some(MonoClique { color: c, vertices: VertexSet::from_slice(n, &members) })
}

/// A monochromatic clique on `target` vertices, or `None` when an exhaustive
/// search over every colour class proves there is none.
pub fn mono_clique_extract(col: &EdgeColoring, target: usize) -> Option<MonoClique> {
    let n = col.order();
    if target > n {
        return None;
    }
    if target <= 1 {
        return Some(MonoClique { color: 0, vertices: VertexSet::from_slice(n, &(0..target).collect::<Vec<_>>()) });
    }
    if let Some(m) = pivot_chain(col, target) {
        return Some(m);
    }
    let mut keys: Vec<u128> = col.colors.clone();
    keys.sort_unstable();
    keys.dedup();
    for c in keys {
        let g = col.class_graph(c);
        let k = params::max_clique(&g, &g.vertex_set());
        if k.len() >= target {
            let members: Vec<usize> = k.iter().take(target).collect();
            return Some(MonoClique { color: c, vertices: VertexSet::from_slice(n, &members) });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_colour() {
        let col = EdgeColoring::from_fn(4, 1, |_, _| 1);
        let m = mono_clique_extract(&col, 4).unwrap();
        assert_eq!(m.vertices.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(m.color, 1);
    }

    #[test]
    fn pentagon_has_no_triangle() {
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(mono_clique_extract(&EdgeColoring::from_graph(&c5), 3).is_none());
    }

    #[test]
    fn pivot_chain_on_large_order() {
        // 2-colouring of K_20 by parity of i + j.
        let col = EdgeColoring::from_fn(20, 1, |i, j| ((i + j) % 2) as u128);
        let m = mono_clique_extract(&col, 5).unwrap();
        let v = m.vertices.to_vec();
        assert_eq!(v.len(), 5);
        assert!(col.is_monochromatic(&v, m.color));
    }
}
