//! Multipartite uniformization: shrink each part to `q` vertices so that every
//! pair of parts induces a complete or an empty bipartite graph.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

const EXHAUSTIVE_BUDGET: u64 = 2_000_000;

fn adjacency_key(g: &Graph, v: usize, w: &[usize]) -> Vec<bool> {
    w.iter().map(|&u| g.has_edge(v, u)).collect()
}

/// Homogeneity of the pair `(a, b)`: `Some(true)` complete, `Some(false)` empty.
pub fn pair_type(g: &Graph, a: &VertexSet, b: &VertexSet) -> Option<bool> {
    let total = a.len() * b.len();
    let edges: usize = a.iter().map(|v| g.neighbors(v).intersection_len(b)).sum();
    if edges == total {
        Some(true)
    } else if edges == 0 {
        Some(false)
    } else {
        None
    }
}

pub fn is_uniform(g: &Graph, parts: &[VertexSet]) -> bool {
    parts.iter().enumerate().all(|(i, a)| parts[i + 1..].iter().all(|b| pair_type(g, a, b).is_some()))
}

/// Size of the working set taken from part `j` of `k`: `(q-1) 2^(k-1-j) + 1`.
fn working_size(q: usize, k: usize, j: usize) -> Option<usize> {
    let shift = u32::try_from(k - 1 - j).ok()?;
    (q - 1).checked_mul(1usize.checked_shl(shift)?)?.checked_add(1)
}

fn refine(g: &Graph, parts: &[Vec<usize>], q: usize) -> Option<Vec<Vec<usize>>> {
    let k = parts.len();
    let mut cand: Vec<Vec<usize>> = parts.to_vec();
    let mut work: Vec<Vec<usize>> = Vec::with_capacity(k);
    for j in 0..k {
        let t = working_size(q, k, j)?;
        if cand[j].len() < t {
            return None;
        }
        let w: Vec<usize> = cand[j][..t].to_vec();
        for c in cand.iter_mut().skip(j + 1) {
            let mut classes: Vec<(Vec<bool>, Vec<usize>)> = Vec::new();
            for &v in c.iter() {
                let key = adjacency_key(g, v, &w);
                match classes.iter_mut().find(|(k, _)| *k == key) {
                    Some((_, vs)) => vs.push(v),
                    None => classes.push((key, vec![v])),
                }
            }
            classes.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
            *c = classes.swap_remove(0).1;
        }
        work.push(w);
    }
    // Every later working set now has one adjacency type towards `work[j]`;
    // halve `work[j]` by its adjacency to each later set.
    for j in 0..k {
        for i in j + 1..k {
            let rep = work[i][0];
            let (adj, non): (Vec<usize>, Vec<usize>) = work[j].iter().partition(|&&v| g.has_edge(v, rep));
            work[j] = if adj.len() > non.len() { adj } else { non };
        }
        if work[j].len() < q {
            return None;
        }
        work[j].truncate(q);
    }
    Some(work)
}

struct Exhaustive<'a> {
    g: &'a Graph,
    parts: &'a [Vec<usize>],
    q: usize,
    chosen: Vec<Vec<usize>>,
    nodes: u64,
}

impl Exhaustive<'_> {
    fn compatible(&self, v: usize) -> Option<Vec<bool>> {
        let mut sig = Vec::with_capacity(self.chosen.len());
        for u in &self.chosen {
            let d = u.iter().filter(|&&x| self.g.has_edge(v, x)).count();
            if d == u.len() {
                sig.push(true);
            } else if d == 0 {
                sig.push(false);
            } else {
                return None;
            }
        }
        Some(sig)
    }

    fn search(&mut self) -> Option<bool> {
        let i = self.chosen.len();
        if i == self.parts.len() {
            return Some(true);
        }
        let mut groups: Vec<(Vec<bool>, Vec<usize>)> = Vec::new();
        for &v in &self.parts[i] {
            if let Some(sig) = self.compatible(v) {
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, vs)) => vs.push(v),
                    None => groups.push((sig, vec![v])),
                }
            }
        }
        for (_, group) in groups {
            if group.len() < self.q {
                continue;
            }
            let mut idx: Vec<usize> = (0..self.q).collect();
            loop {
                self.nodes += 1;
                if self.nodes > EXHAUSTIVE_BUDGET {
                    return None;
                }
                self.chosen.push(idx.iter().map(|&a| group[a]).collect());
                if self.search()? {
                    return Some(true);
                }
                self.chosen.pop();
                if !next_combination(&mut idx, group.len()) {
                    break;
                }
            }
        }
        Some(false)
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

/// Sets `U_i ⊆ parts[i]` of size `q`, pairwise complete or empty.
///
/// The halving refinement succeeds whenever every part has at least
/// `mr_upper(k, q)` vertices. Below that a budgeted exhaustive search is
/// tried; `None` means no solution was found.
pub fn multipartite_uniformize(g: &Graph, parts: &[VertexSet], q: usize) -> Result<Option<Vec<VertexSet>>> {
    let n = g.order();
    let mut seen = VertexSet::new(n);
    for p in parts {
        if let Some(v) = seen.intersection(p).first() {
            return Err(Error::Overlap(v));
        }
        seen.union_with(p);
    }
    if parts.is_empty() || q == 0 {
        return Ok(Some(vec![VertexSet::new(n); parts.len()]));
    }
    if parts.iter().any(|p| p.len() < q) {
        return Ok(None);
    }
    let lists: Vec<Vec<usize>> = parts.iter().map(VertexSet::to_vec).collect();
    let found = refine(g, &lists, q).or_else(|| {
        let mut ex = Exhaustive { g, parts: &lists, q, chosen: Vec::new(), nodes: 0 };
        match ex.search() {
            Some(true) => Some(ex.chosen),
            _ => None,
        }
    });
    Ok(found.map(|sets| {
        let out: Vec<VertexSet> = sets.iter().map(|s| VertexSet::from_slice(n, s)).collect();
        assert!(is_uniform(g, &out), "uniformization produced a mixed pair");
        out
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds;

    fn parts(n: usize, a: &[usize], b: &[usize]) -> Vec<VertexSet> {
        vec![VertexSet::from_slice(n, a), VertexSet::from_slice(n, b)]
    }

    #[test]
    fn homogeneous_inputs() {
        let g = Graph::from_edge_list(8, &(0..4).flat_map(|a| (4..8).map(move |b| (a, b))).collect::<Vec<_>>())
            .unwrap();
        let u = multipartite_uniformize(&g, &parts(8, &[0, 1, 2, 3], &[4, 5, 6, 7]), 2).unwrap().unwrap();
        assert_eq!(pair_type(&g, &u[0], &u[1]), Some(true));
        let e = Graph::empty(8);
        let u = multipartite_uniformize(&e, &parts(8, &[0, 1, 2, 3], &[4, 5, 6, 7]), 2).unwrap().unwrap();
        assert_eq!(pair_type(&e, &u[0], &u[1]), Some(false));
    }

    #[test]
    fn perfect_matching() {
        // Three matched pairs cannot give two disjoint index pairs; four can.
        let m3 = Graph::from_edge_list(6, &[(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(multipartite_uniformize(&m3, &parts(6, &[0, 1, 2], &[3, 4, 5]), 2).unwrap(), None);
        let m4 = Graph::from_edge_list(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let u = multipartite_uniformize(&m4, &parts(8, &[0, 1, 2, 3], &[4, 5, 6, 7]), 2).unwrap().unwrap();
        assert_eq!(pair_type(&m4, &u[0], &u[1]), Some(false));
        let a: Vec<usize> = u[0].iter().collect();
        let b: Vec<usize> = u[1].iter().map(|v| v - 4).collect();
        assert!(a.iter().all(|i| !b.contains(i)));
    }

    #[test]
    fn overlap_is_an_error() {
        let g = Graph::empty(4);
        assert!(matches!(multipartite_uniformize(&g, &parts(4, &[0, 1], &[1, 2]), 1), Err(Error::Overlap(1))));
    }

    #[test]
    fn refinement_meets_the_size_bound() {
        // Parts of size mr_upper(3, 2) in a pseudo-random tripartite graph.
        let size = bounds::mr_upper(3, 2).unwrap().exact().unwrap().to_string().parse::<usize>().unwrap();
        let n = 3 * size;
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                if a / size != b / size && state & 1 == 1 {
                    e.push((a, b));
                }
            }
        }
        let g = Graph::from_edge_list(n, &e).unwrap();
        let ps: Vec<VertexSet> =
            (0..3).map(|i| VertexSet::from_slice(n, &(i * size..(i + 1) * size).collect::<Vec<_>>())).collect();
        let lists: Vec<Vec<usize>> = ps.iter().map(VertexSet::to_vec).collect();
        let r = refine(&g, &lists, 2).expect("refinement guaranteed at this size");
        let out: Vec<VertexSet> = r.iter().map(|s| VertexSet::from_slice(n, s)).collect();
        assert!(is_uniform(&g, &out));
    }
}
