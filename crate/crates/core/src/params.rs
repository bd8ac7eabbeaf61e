//! Vertex parameters `deg ≥ α_L ≥ c_L ≥ sdeg`, the counts `p_k`, and H-indices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Exec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PropertyKind {
    #[serde(rename = "deg")]
    Deg,
    #[serde(rename = "alphaL")]
    AlphaL,
    #[serde(rename = "cL")]
    CL,
    #[serde(rename = "sdeg")]
    Sdeg,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 4] =
        [PropertyKind::Deg, PropertyKind::AlphaL, PropertyKind::CL, PropertyKind::Sdeg];

    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::Deg => "deg",
            PropertyKind::AlphaL => "alphaL",
            PropertyKind::CL => "cL",
            PropertyKind::Sdeg => "sdeg",
        }
    }

    pub fn parse(s: &str) -> Result<PropertyKind> {
        Self::ALL
            .iter()
            .copied()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(format!("property {s:?}")))
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalProfile {
    pub deg: usize,
    #[serde(rename = "alphaL")]
    pub alpha_l: usize,
    #[serde(rename = "cL")]
    pub c_l: usize,
    pub sdeg: usize,
}

impl LocalProfile {
    pub fn get(&self, prop: PropertyKind) -> usize {
        match prop {
            PropertyKind::Deg => self.deg,
            PropertyKind::AlphaL => self.alpha_l,
            PropertyKind::CL => self.c_l,
            PropertyKind::Sdeg => self.sdeg,
        }
    }
}

/// Branch and bound for a maximum independent set inside `cand`, where
/// `rows[v]` is the conflict set of `v`.
struct Mis<'a> {
    rows: &'a [VertexSet],
    best: Vec<usize>,
    cur: Vec<usize>,
}

impl Mis<'_> {
    fn run(&mut self, cand: VertexSet) {
        if self.cur.len() + cand.len() <= self.best.len() {
            return;
        }
        // Vertex of least conflict degree inside `cand`; degree ≤ 1 vertices are always safe to take.
        let mut pick = None;
        let mut pick_deg = usize::MAX;
        let mut hub = None;
        let mut hub_deg = 0;
        for v in cand.iter() {
            let d = self.rows[v].intersection_len(&cand);
            if d < pick_deg {
                pick = Some(v);
                pick_deg = d;
            }
            if hub.is_none() || d > hub_deg {
                hub = Some(v);
                hub_deg = d;
            }
        }
        let Some(v) = pick else {
            if self.cur.len() > self.best.len() {
                self.best = self.cur.clone();
            }
            return;
        };
        if pick_deg <= 1 {
            let mut rest = cand.difference(&self.rows[v]);
            rest.remove(v);
            self.cur.push(v);
            self.run(rest);
            self.cur.pop();
            return;
        }
        let h = hub.expect("non-empty candidates");
        let mut take = cand.difference(&self.rows[h]);
        take.remove(h);
        self.cur.push(h);
        self.run(take);
        self.cur.pop();
        let mut skip = cand;
        skip.remove(h);
        self.run(skip);
    }
}

fn mis_with_rows(rows: &[VertexSet], within: &VertexSet) -> VertexSet {
    let mut s = Mis { rows, best: Vec::new(), cur: Vec::new() };
    s.run(within.clone());
    let mut out = VertexSet::new(within.universe());
    for v in s.best {
        out.insert(v);
    }
    out
}

/// A maximum independent set of `G[within]`.
pub fn max_independent_set(g: &Graph, within: &VertexSet) -> VertexSet {
    let rows: Vec<VertexSet> = (0..g.order()).map(|v| g.neighbors(v).clone()).collect();
    mis_with_rows(&rows, within)
}

pub fn independence_number(g: &Graph, within: &VertexSet) -> usize {
    max_independent_set(g, within).len()
}

/// A maximum clique of `G[within]`.
pub fn max_clique(g: &Graph, within: &VertexSet) -> VertexSet {
    let rows: Vec<VertexSet> = (0..g.order())
        .map(|v| {
            let mut r = g.neighbors(v).complement();
            r.remove(v);
            r
        })
        .collect();
    mis_with_rows(&rows, within)
}

pub fn clique_number(g: &Graph, within: &VertexSet) -> usize {
    max_clique(g, within).len()
}

fn sdeg_with_base(g: &Graph, v: usize, base: usize) -> usize {
    let mut rest = g.vertex_set();
    rest.remove(v);
    // c(G - v) >= c(G) - 1 always, so this never underflows.
    g.c_count(&rest) + 1 - base
}

pub fn sdeg(g: &Graph, v: usize) -> Result<usize> {
    g.check_vertex(v)?;
    Ok(sdeg_with_base(g, v, g.c_count(&g.vertex_set())))
}

fn profile_with_base(g: &Graph, v: usize, base: usize) -> LocalProfile {
    let nb = g.neighbors(v);
    LocalProfile {
        deg: nb.len(),
        alpha_l: independence_number(g, nb),
        c_l: g.c_count(nb),
        sdeg: sdeg_with_base(g, v, base),
    }
}

pub fn local_profile(g: &Graph, v: usize) -> Result<LocalProfile> {
    g.check_vertex(v)?;
    Ok(profile_with_base(g, v, g.c_count(&g.vertex_set())))
}

pub fn all_profiles(g: &Graph) -> Vec<LocalProfile> {
    all_profiles_with(g, Exec::Sequential)
}

pub fn all_profiles_with(g: &Graph, exec: Exec) -> Vec<LocalProfile> {
    let base = g.c_count(&g.vertex_set());
    par::map_range(exec, g.order(), |v| profile_with_base(g, v, base))
}

/// `p(v)` for every vertex, computing only the requested parameter.
pub fn values(g: &Graph, prop: PropertyKind) -> Vec<usize> {
    let n = g.order();
    match prop {
        PropertyKind::Deg => (0..n).map(|v| g.degree(v)).collect(),
        PropertyKind::AlphaL => (0..n).map(|v| independence_number(g, g.neighbors(v))).collect(),
        PropertyKind::CL => (0..n).map(|v| g.c_count(g.neighbors(v))).collect(),
        PropertyKind::Sdeg => {
            let base = g.c_count(&g.vertex_set());
            (0..n).map(|v| sdeg_with_base(g, v, base)).collect()
        }
    }
}

pub fn p_k_from_values(vals: &[usize], k: usize) -> usize {
    vals.iter().filter(|&&x| x >= k).count()
}

pub fn p_k_count(g: &Graph, prop: PropertyKind, k: usize) -> usize {
    if k == 0 {
        return g.order();
    }
    p_k_from_values(&values(g, prop), k)
}

pub fn h_index_from_values(vals: &[usize]) -> usize {
    let mut sorted = vals.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.iter().enumerate().take_while(|&(i, &x)| x > i).count()
}

pub fn h_index(g: &Graph, prop: PropertyKind) -> usize {
    h_index_from_values(&values(g, prop))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::Pattern;

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

    /// Exhaustive oracle for α over all subsets.
    fn alpha_brute(g: &Graph, set: &[usize]) -> usize {
        let k = set.len();
        (0u32..1 << k)
            .filter(|m| {
                (0..k).all(|i| {
                    m >> i & 1 == 0 || (i + 1..k).all(|j| m >> j & 1 == 0 || !g.has_edge(set[i], set[j]))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn profile_examples() {
        let p = petersen();
        for v in 0..10 {
            let nb = p.neighbors(v).to_vec();
            assert_eq!(alpha_brute(&p, &nb), 3);
            assert_eq!(
                local_profile(&p, v).unwrap(),
                LocalProfile { deg: 3, alpha_l: 3, c_l: 3, sdeg: 1 }
            );
        }
        let k4 = Graph::complete(4);
        assert_eq!(
            local_profile(&k4, 2).unwrap(),
            LocalProfile { deg: 3, alpha_l: 1, c_l: 1, sdeg: 1 }
        );
        let p5 = Pattern::Path(5).build().unwrap();
        assert_eq!(
            local_profile(&p5, 2).unwrap(),
            LocalProfile { deg: 2, alpha_l: 2, c_l: 2, sdeg: 2 }
        );
        assert!(local_profile(&p5, 5).is_err());
    }

    #[test]
    fn p_k_examples() {
        let s = Pattern::StarPendants(4).build().unwrap();
        assert_eq!(p_k_count(&s, PropertyKind::Deg, 2), 5);
        let ck = Pattern::MatchedCliques(3).build().unwrap();
        assert_eq!(p_k_count(&ck, PropertyKind::AlphaL, 2), 6);
        assert_eq!(p_k_count(&Graph::empty(7), PropertyKind::Deg, 2), 0);
        let t4 = Pattern::ApexSplit(4).build().unwrap();
        assert_eq!(p_k_count(&t4, PropertyKind::CL, 2), 5);
        assert_eq!(p_k_count(&t4, PropertyKind::CL, 0), 9);
    }

    #[test]
    fn h_index_examples() {
        assert_eq!(h_index(&Graph::complete(5), PropertyKind::Deg), 4);
        assert_eq!(h_index(&Graph::empty(9), PropertyKind::Deg), 0);
        assert_eq!(h_index(&Graph::empty(0), PropertyKind::Deg), 0);
        let k44 = Pattern::CompleteBipartite(4, 4).build().unwrap();
        assert_eq!(h_index(&k44, PropertyKind::CL), 4);
    }

    #[test]
    fn isolated_and_single_vertex() {
        let g = Graph::empty(1);
        assert_eq!(local_profile(&g, 0).unwrap(), LocalProfile { deg: 0, alpha_l: 0, c_l: 0, sdeg: 0 });
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(sdeg(&g, 2).unwrap(), 0);
        assert_eq!(sdeg(&g, 0).unwrap(), 1);
    }

    #[test]
    fn clique_number_matches_complement_alpha() {
        let p = petersen();
        let all = p.vertex_set();
        assert_eq!(clique_number(&p, &all), 2);
        assert_eq!(independence_number(&p.complement(), &all), 2);
        assert_eq!(independence_number(&p, &all), 4);
    }

    #[test]
    fn parse_names() {
        for p in PropertyKind::ALL {
            assert_eq!(PropertyKind::parse(p.name()).unwrap(), p);
        }
        assert!(PropertyKind::parse("x").is_err());
    }
}
