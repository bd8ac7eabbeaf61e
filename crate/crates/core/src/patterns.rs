//! Named parametric graph families and the unavoidable lists assembled from them.
//!
//! Vertex numbering is fixed per family (core vertices first, then pendants
//! in core order) so embeddings can be read back reproducibly:
//!
//! | family | numbering |
//! |---|---|
//! | `K_n`, `E_n` | `0..n` |
//! | `P_n` | path `0-1-…-(n-1)` |
//! | `K_{1,n}` | centre `0`, leaves `1..=n` |
//! | `K_{s,t}` | part `0..s`, part `s..s+t` |
//! | `K_{1,n}^*` | centre `0`, leaves `1..=n`, pendant of leaf `i` at `n+i` |
//! | `K_n^*` | clique `0..n`, pendant of `i` at `n+i` |
//! | `CK_n` | cliques `0..n` and `n..2n`, matching `i ~ n+i` |
//! | `T_n` | clique `0..n`, independent `n..2n` (joined), apex `2n` on the independent side |
//! | `G_n` | clique `0..n`, pendants of `i` at `n+i*n+j` |
//! | `K_2+nK_1` | edge `0-1`, independent `2..n+2` joined to both |
//! | `K_1+nK_2` | apex `0`, matching edges `(1+2i, 2+2i)` |
//! | `E_2+K_n` | non-edge `0,1`, clique `2..n+2` joined to both |
//! | `K_1+nP_3` | apex `0`, paths `1+3i - 2+3i - 3+3i` |
//! | `K_n+E_n` | clique `0..n`, independent `n..2n`, all cross edges |
//! | `m·F` | copy `i` of `F` at offset `i*|F|` |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::PropertyKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CopyBase {
    K2,
    P3,
    K3,
    Star(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    Complete(usize),
    Edgeless(usize),
    Path(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,n}^*`
    StarPendants(usize),
    /// `K_n^*`
    CliquePendants(usize),
    /// `CK_n`
    MatchedCliques(usize),
    /// `T_n`
    ApexSplit(usize),
    /// `G_n`
    CliqueBroom(usize),
    /// `K_2 + nK_1`
    EdgeJoinIndependent(usize),
    /// `K_1 + nK_2`
    VertexJoinMatching(usize),
    /// `E_2 + K_n`
    NonEdgeJoinClique(usize),
    /// `K_1 + nP_3`
    VertexJoinPaths(usize),
    /// `K_n + E_n`
    CliqueJoinIndependent(usize),
    /// `count` disjoint copies of a base graph.
    Copies(usize, CopyBase),
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl CopyBase {
    pub fn graph(self) -> Graph {
        match self {
            CopyBase::K2 => Graph::complete(2),
            CopyBase::K3 => Graph::complete(3),
            CopyBase::P3 => Graph::from_pairs_unchecked(3, [(0, 1), (1, 2)]),
            CopyBase::Star(m) => Graph::from_pairs_unchecked(m + 1, (1..=m).map(|i| (0, i))),
        }
    }

    fn counts(self) -> (usize, usize) {
        match self {
            CopyBase::K2 => (2, 1),
            CopyBase::P3 => (3, 2),
            CopyBase::K3 => (3, 3),
            CopyBase::Star(m) => (m + 1, m),
        }
    }
}

impl Pattern {
    fn params(&self) -> Vec<usize> {
        use Pattern::*;
        match *self {
            Complete(n) | Edgeless(n) | Path(n) | Star(n) | StarPendants(n) | CliquePendants(n)
            | MatchedCliques(n) | ApexSplit(n) | CliqueBroom(n) | EdgeJoinIndependent(n)
            | VertexJoinMatching(n) | NonEdgeJoinClique(n) | VertexJoinPaths(n)
            | CliqueJoinIndependent(n) => vec![n],
            CompleteBipartite(s, t) => vec![s, t],
            Copies(c, CopyBase::Star(m)) => vec![c, m],
            Copies(c, _) => vec![c],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.params().contains(&0) {
            return Err(Error::InvalidParameter(format!("{self}: parameters must be >= 1")));
        }
        Ok(())
    }

    /// Closed-form `(vertices, edges)`.
    pub fn expected_counts(&self) -> Result<(usize, usize)> {
        use Pattern::*;
        self.validate()?;
        Ok(match *self {
            Complete(n) => (n, choose2(n)),
            Edgeless(n) => (n, 0),
            Path(n) => (n, n - 1),
            Star(n) => (n + 1, n),
            CompleteBipartite(s, t) => (s + t, s * t),
            StarPendants(n) => (2 * n + 1, 2 * n),
            CliquePendants(n) => (2 * n, choose2(n) + n),
            MatchedCliques(n) => (2 * n, 2 * choose2(n) + n),
            ApexSplit(n) => (2 * n + 1, choose2(n) + n * n + n),
            CliqueBroom(n) => (n + n * n, choose2(n) + n * n),
            EdgeJoinIndependent(n) => (n + 2, 1 + 2 * n),
            VertexJoinMatching(n) => (2 * n + 1, 3 * n),
            NonEdgeJoinClique(n) => (n + 2, choose2(n) + 2 * n),
            VertexJoinPaths(n) => (3 * n + 1, 5 * n),
            CliqueJoinIndependent(n) => (2 * n, choose2(n) + n * n),
            Copies(c, base) => {
                let (v, e) = base.counts();
                (c * v, c * e)
            }
        })
    }

    pub fn build(&self) -> Result<Graph> {
        use Pattern::*;
        self.validate()?;
        let clique = |vs: std::ops::Range<usize>| {
            let vs: Vec<usize> = vs.collect();
            let mut e = Vec::new();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    e.push((a, b));
                }
            }
            e
        };
        let g = match *self {
            Complete(n) => Graph::complete(n),
            Edgeless(n) => Graph::empty(n),
            Path(n) => Graph::from_pairs_unchecked(n, (1..n).map(|i| (i - 1, i))),
            Star(n) => CopyBase::Star(n).graph(),
            CompleteBipartite(s, t) => {
                Graph::from_pairs_unchecked(s + t, (0..s).flat_map(|a| (s..s + t).map(move |b| (a, b))))
            }
            StarPendants(n) => Graph::from_pairs_unchecked(
                2 * n + 1,
                (1..=n).flat_map(|i| [(0, i), (i, n + i)]),
            ),
            CliquePendants(n) => {
                let mut e = clique(0..n);
                e.extend((0..n).map(|i| (i, n + i)));
                Graph::from_pairs_unchecked(2 * n, e)
            }
            MatchedCliques(n) => {
                let mut e = clique(0..n);
                e.extend(clique(n..2 * n));
                e.extend((0..n).map(|i| (i, n + i)));
                Graph::from_pairs_unchecked(2 * n, e)
            }
            ApexSplit(n) => {
                let mut e = clique(0..n);
                e.extend((0..n).flat_map(|a| (n..2 * n).map(move |b| (a, b))));
                e.extend((n..2 * n).map(|b| (b, 2 * n)));
                Graph::from_pairs_unchecked(2 * n + 1, e)
            }
            CliqueBroom(n) => {
                let mut e = clique(0..n);
                e.extend((0..n).flat_map(|i| (0..n).map(move |j| (i, n + i * n + j))));
                Graph::from_pairs_unchecked(n + n * n, e)
            }
            EdgeJoinIndependent(n) => {
                let mut e = vec![(0, 1)];
                e.extend((2..n + 2).flat_map(|x| [(0, x), (1, x)]));
                Graph::from_pairs_unchecked(n + 2, e)
            }
            VertexJoinMatching(n) => Graph::from_pairs_unchecked(
                2 * n + 1,
                (0..n).flat_map(|i| [(1 + 2 * i, 2 + 2 * i), (0, 1 + 2 * i), (0, 2 + 2 * i)]),
            ),
            NonEdgeJoinClique(n) => {
                let mut e = clique(2..n + 2);
                e.extend((2..n + 2).flat_map(|x| [(0, x), (1, x)]));
                Graph::from_pairs_unchecked(n + 2, e)
            }
            VertexJoinPaths(n) => Graph::from_pairs_unchecked(
                3 * n + 1,
                (0..n).flat_map(|i| {
                    let a = 1 + 3 * i;
                    [(a, a + 1), (a + 1, a + 2), (0, a), (0, a + 1), (0, a + 2)]
                }),
            ),
            CliqueJoinIndependent(n) => {
                let mut e = clique(0..n);
                e.extend((0..n).flat_map(|a| (n..2 * n).map(move |b| (a, b))));
                Graph::from_pairs_unchecked(2 * n, e)
            }
            Copies(c, base) => Graph::disjoint_union(&vec![base.graph(); c]),
        };
        Ok(g)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Pattern::*;
        match *self {
            Complete(n) => write!(f, "K_{n}"),
            Edgeless(n) => write!(f, "E_{n}"),
            Path(n) => write!(f, "P_{n}"),
            Star(n) => write!(f, "K_{{1,{n}}}"),
            CompleteBipartite(s, t) => write!(f, "K_{{{s},{t}}}"),
            StarPendants(n) => write!(f, "K_{{1,{n}}}^*"),
            CliquePendants(n) => write!(f, "K_{n}^*"),
            MatchedCliques(n) => write!(f, "CK_{n}"),
            ApexSplit(n) => write!(f, "T_{n}"),
            CliqueBroom(n) => write!(f, "G_{n}"),
            EdgeJoinIndependent(n) => write!(f, "K_2+{n}K_1"),
            VertexJoinMatching(n) => write!(f, "K_1+{n}K_2"),
            NonEdgeJoinClique(n) => write!(f, "E_2+K_{n}"),
            VertexJoinPaths(n) => write!(f, "K_1+{n}P_3"),
            CliqueJoinIndependent(n) => write!(f, "K_{n}+E_{n}"),
            Copies(c, CopyBase::K2) => write!(f, "{c}K_2"),
            Copies(c, CopyBase::P3) => write!(f, "{c}P_3"),
            Copies(c, CopyBase::K3) => write!(f, "{c}K_3"),
            Copies(c, CopyBase::Star(m)) => write!(f, "{c}K_{{1,{m}}}"),
        }
    }
}

/// A single-parameter family; `instance(n)` picks its member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    Complete,
    Edgeless,
    Path,
    Star,
    /// `K_{s,n}` for fixed `s`.
    Bipartite(usize),
    /// `K_{n,n}`
    BalancedBipartite,
    StarPendants,
    CliquePendants,
    MatchedCliques,
    ApexSplit,
    CliqueBroom,
    EdgeJoinIndependent,
    VertexJoinMatching,
    NonEdgeJoinClique,
    VertexJoinPaths,
    CliqueJoinIndependent,
    CopiesK2,
    CopiesP3,
    CopiesK3,
    /// `nK_{1,n}`
    CopiesStar,
}

impl FamilyKind {
    pub const ALL_SIMPLE: [FamilyKind; 20] = [
        FamilyKind::Complete,
        FamilyKind::Edgeless,
        FamilyKind::Path,
        FamilyKind::Star,
        FamilyKind::Bipartite(2),
        FamilyKind::BalancedBipartite,
        FamilyKind::StarPendants,
        FamilyKind::CliquePendants,
        FamilyKind::MatchedCliques,
        FamilyKind::ApexSplit,
        FamilyKind::CliqueBroom,
        FamilyKind::EdgeJoinIndependent,
        FamilyKind::VertexJoinMatching,
        FamilyKind::NonEdgeJoinClique,
        FamilyKind::VertexJoinPaths,
        FamilyKind::CliqueJoinIndependent,
        FamilyKind::CopiesK2,
        FamilyKind::CopiesP3,
        FamilyKind::CopiesK3,
        FamilyKind::CopiesStar,
    ];

    pub fn instance(self, n: usize) -> Pattern {
        use FamilyKind as F;
        match self {
            F::Complete => Pattern::Complete(n),
            F::Edgeless => Pattern::Edgeless(n),
            F::Path => Pattern::Path(n),
            F::Star => Pattern::Star(n),
            F::Bipartite(s) => Pattern::CompleteBipartite(s, n),
            F::BalancedBipartite => Pattern::CompleteBipartite(n, n),
            F::StarPendants => Pattern::StarPendants(n),
            F::CliquePendants => Pattern::CliquePendants(n),
            F::MatchedCliques => Pattern::MatchedCliques(n),
            F::ApexSplit => Pattern::ApexSplit(n),
            F::CliqueBroom => Pattern::CliqueBroom(n),
            F::EdgeJoinIndependent => Pattern::EdgeJoinIndependent(n),
            F::VertexJoinMatching => Pattern::VertexJoinMatching(n),
            F::NonEdgeJoinClique => Pattern::NonEdgeJoinClique(n),
            F::VertexJoinPaths => Pattern::VertexJoinPaths(n),
            F::CliqueJoinIndependent => Pattern::CliqueJoinIndependent(n),
            F::CopiesK2 => Pattern::Copies(n, CopyBase::K2),
            F::CopiesP3 => Pattern::Copies(n, CopyBase::P3),
            F::CopiesK3 => Pattern::Copies(n, CopyBase::K3),
            F::CopiesStar => Pattern::Copies(n, CopyBase::Star(n)),
        }
    }

    /// Short CLI name, e.g. `CK`, `K1n*`, `K2+nK1`.
    pub fn name(self) -> String {
        use FamilyKind as F;
        match self {
            F::Complete => "K".into(),
            F::Edgeless => "E".into(),
            F::Path => "P".into(),
            F::Star => "K1n".into(),
            F::Bipartite(s) => format!("K{s}n"),
            F::BalancedBipartite => "Knn".into(),
            F::StarPendants => "K1n*".into(),
            F::CliquePendants => "K*".into(),
            F::MatchedCliques => "CK".into(),
            F::ApexSplit => "T".into(),
            F::CliqueBroom => "G".into(),
            F::EdgeJoinIndependent => "K2+nK1".into(),
            F::VertexJoinMatching => "K1+nK2".into(),
            F::NonEdgeJoinClique => "E2+K".into(),
            F::VertexJoinPaths => "K1+nP3".into(),
            F::CliqueJoinIndependent => "K+E".into(),
            F::CopiesK2 => "nK2".into(),
            F::CopiesP3 => "nP3".into(),
            F::CopiesK3 => "nK3".into(),
            F::CopiesStar => "nK1n".into(),
        }
    }

    pub fn parse(s: &str) -> Result<FamilyKind> {
        if let Some(k) = Self::ALL_SIMPLE.iter().find(|k| k.name().eq_ignore_ascii_case(s)) {
            return Ok(*k);
        }
        // `K<s>n` for other fixed sides.
        if let Some(mid) = s.strip_prefix('K').and_then(|r| r.strip_suffix('n')) {
            if let Ok(side) = mid.parse::<usize>() {
                if side >= 1 {
                    return Ok(FamilyKind::Bipartite(side));
                }
            }
        }
        Err(Error::UnknownName(format!("family {s:?}")))
    }
}

/// Which characterisation a family list comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "connected_ramsey")]
    ConnectedRamsey,
    #[serde(rename = "B1_deg")]
    B1Deg,
    #[serde(rename = "B1_alphaL")]
    B1AlphaL,
    #[serde(rename = "B1_cL")]
    B1CL,
    #[serde(rename = "B1_sdeg")]
    B1Sdeg,
    #[serde(rename = "B2_deg")]
    B2Deg,
    #[serde(rename = "B2_alphaL")]
    B2AlphaL,
    #[serde(rename = "B2_cL")]
    B2CL,
    #[serde(rename = "B2_sdeg")]
    B2Sdeg,
    #[serde(rename = "B3_deg")]
    B3Deg,
    #[serde(rename = "B3_alphaL_cL")]
    B3AlphaLCL,
    #[serde(rename = "B3_sdeg")]
    B3Sdeg,
}

/// `B1` counts on connected graphs, `B2` on all graphs, `B3` uses a raised threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tier {
    B1,
    B2,
    B3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::ConnectedRamsey,
        TheoremId::B1Deg,
        TheoremId::B1AlphaL,
        TheoremId::B1CL,
        TheoremId::B1Sdeg,
        TheoremId::B2Deg,
        TheoremId::B2AlphaL,
        TheoremId::B2CL,
        TheoremId::B2Sdeg,
        TheoremId::B3Deg,
        TheoremId::B3AlphaLCL,
        TheoremId::B3Sdeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::ConnectedRamsey => "connected_ramsey",
            TheoremId::B1Deg => "B1_deg",
            TheoremId::B1AlphaL => "B1_alphaL",
            TheoremId::B1CL => "B1_cL",
            TheoremId::B1Sdeg => "B1_sdeg",
            TheoremId::B2Deg => "B2_deg",
            TheoremId::B2AlphaL => "B2_alphaL",
            TheoremId::B2CL => "B2_cL",
            TheoremId::B2Sdeg => "B2_sdeg",
            TheoremId::B3Deg => "B3_deg",
            TheoremId::B3AlphaLCL => "B3_alphaL_cL",
            TheoremId::B3Sdeg => "B3_sdeg",
        }
    }

    pub fn parse(s: &str) -> Result<TheoremId> {
        Self::ALL
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(format!("theorem {s:?}")))
    }

    /// The theorem for a tier and vertex parameter. `B3` shares one list for
    /// `alphaL` and `cL`.
    pub fn for_tier(tier: Tier, prop: PropertyKind) -> TheoremId {
        use PropertyKind as P;
        match (tier, prop) {
            (Tier::B1, P::Deg) => TheoremId::B1Deg,
            (Tier::B1, P::AlphaL) => TheoremId::B1AlphaL,
            (Tier::B1, P::CL) => TheoremId::B1CL,
            (Tier::B1, P::Sdeg) => TheoremId::B1Sdeg,
            (Tier::B2, P::Deg) => TheoremId::B2Deg,
            (Tier::B2, P::AlphaL) => TheoremId::B2AlphaL,
            (Tier::B2, P::CL) => TheoremId::B2CL,
            (Tier::B2, P::Sdeg) => TheoremId::B2Sdeg,
            (Tier::B3, P::Deg) => TheoremId::B3Deg,
            (Tier::B3, P::AlphaL | P::CL) => TheoremId::B3AlphaLCL,
            (Tier::B3, P::Sdeg) => TheoremId::B3Sdeg,
        }
    }

    pub fn tier(self) -> Option<Tier> {
        use TheoremId::*;
        match self {
            ConnectedRamsey => None,
            B1Deg | B1AlphaL | B1CL | B1Sdeg => Some(Tier::B1),
            B2Deg | B2AlphaL | B2CL | B2Sdeg => Some(Tier::B2),
            B3Deg | B3AlphaLCL | B3Sdeg => Some(Tier::B3),
        }
    }

    /// Member kinds in statement order.
    pub fn member_kinds(self) -> Vec<FamilyKind> {
        use FamilyKind as F;
        use TheoremId::*;
        match self {
            ConnectedRamsey => vec![F::Complete, F::Star, F::Path],
            B1Deg => vec![
                F::Complete,
                F::Path,
                F::StarPendants,
                F::Bipartite(2),
                F::EdgeJoinIndependent,
                F::VertexJoinMatching,
            ],
            B1AlphaL => vec![
                F::CliquePendants,
                F::Path,
                F::StarPendants,
                F::Bipartite(2),
                F::NonEdgeJoinClique,
                F::VertexJoinPaths,
                F::MatchedCliques,
            ],
            B1CL => vec![
                F::CliquePendants,
                F::StarPendants,
                F::Path,
                F::Bipartite(2),
                F::MatchedCliques,
                F::ApexSplit,
            ],
            B1Sdeg => vec![F::CliquePendants, F::StarPendants, F::Path],
            B2Deg => vec![
                F::Complete,
                F::CopiesP3,
                F::CopiesK3,
                F::StarPendants,
                F::Bipartite(2),
                F::EdgeJoinIndependent,
                F::VertexJoinMatching,
            ],
            B2AlphaL => vec![
                F::CliquePendants,
                F::CopiesP3,
                F::StarPendants,
                F::Bipartite(2),
                F::NonEdgeJoinClique,
                F::MatchedCliques,
            ],
            B2CL => vec![
                F::CliquePendants,
                F::CopiesP3,
                F::StarPendants,
                F::Bipartite(2),
                F::MatchedCliques,
                F::ApexSplit,
            ],
            B2Sdeg => vec![F::CliquePendants, F::CopiesP3, F::StarPendants],
            B3Deg => vec![F::Complete, F::BalancedBipartite, F::CopiesStar],
            B3AlphaLCL => vec![
                F::BalancedBipartite,
                F::CopiesStar,
                F::CliqueJoinIndependent,
                F::CliqueBroom,
            ],
            B3Sdeg => vec![F::CopiesStar, F::CliqueBroom],
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The finite forbidden list of one theorem at parameter `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub theorem: TheoremId,
    pub n: usize,
    pub members: Vec<Pattern>,
}

impl FamilySpec {
    pub fn new(theorem: TheoremId, n: usize) -> Result<FamilySpec> {
        if n == 0 {
            return Err(Error::InvalidParameter("family parameter n must be >= 1".into()));
        }
        let members = theorem.member_kinds().into_iter().map(|k| k.instance(n)).collect();
        Ok(FamilySpec { theorem, n, members })
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.members.iter().map(|m| m.build().expect("validated parameters")).collect()
    }

    pub fn index_of(&self, p: &Pattern) -> Option<usize> {
        self.members.iter().position(|m| m == p)
    }
}

pub fn family_members(theorem: TheoremId, n: usize) -> Result<Vec<Graph>> {
    Ok(FamilySpec::new(theorem, n)?.graphs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let ck3 = Pattern::MatchedCliques(3).build().unwrap();
        assert_eq!((ck3.order(), ck3.edge_count()), (6, 9));
        let t3 = Pattern::ApexSplit(3).build().unwrap();
        assert_eq!((t3.order(), t3.edge_count()), (7, 15));
        let g2 = Pattern::CliqueBroom(2).build().unwrap();
        assert_eq!((g2.order(), g2.edge_count()), (6, 5));
    }

    #[test]
    fn closed_form_examples() {
        for n in 1..6 {
            assert_eq!(Pattern::StarPendants(n).expected_counts().unwrap(), (2 * n + 1, 2 * n));
            assert_eq!(
                Pattern::CliquePendants(n).expected_counts().unwrap(),
                (2 * n, n * (n - 1) / 2 + n)
            );
            assert_eq!(
                Pattern::CliqueBroom(n).expected_counts().unwrap(),
                (n + n * n, n * (n - 1) / 2 + n * n)
            );
        }
    }

    #[test]
    fn zero_parameters_rejected() {
        assert!(Pattern::Complete(0).build().is_err());
        assert!(Pattern::CompleteBipartite(2, 0).build().is_err());
        assert!(Pattern::Copies(2, CopyBase::Star(0)).build().is_err());
        assert!(FamilySpec::new(TheoremId::B1Deg, 0).is_err());
    }

    #[test]
    fn family_member_lists() {
        let b1s = FamilySpec::new(TheoremId::B1Sdeg, 4).unwrap();
        assert_eq!(
            b1s.members,
            vec![Pattern::CliquePendants(4), Pattern::StarPendants(4), Pattern::Path(4)]
        );
        let b3s = FamilySpec::new(TheoremId::B3Sdeg, 3).unwrap();
        assert_eq!(b3s.members, vec![Pattern::Copies(3, CopyBase::Star(3)), Pattern::CliqueBroom(3)]);
        let b1d = family_members(TheoremId::B1Deg, 1).unwrap();
        assert_eq!(b1d.len(), 6);
        assert!(b1d.iter().all(|g| g.order() <= 3));
    }

    #[test]
    fn star_pendant_degrees() {
        for n in 2..8 {
            let g = Pattern::StarPendants(n).build().unwrap();
            let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
            d.sort_unstable();
            let mut want = vec![1; n];
            want.extend(vec![2; n]);
            want.push(n);
            assert_eq!(d, want);
        }
    }

    #[test]
    fn names_parse_back() {
        for k in FamilyKind::ALL_SIMPLE {
            assert_eq!(FamilyKind::parse(&k.name()).unwrap(), k);
        }
        assert_eq!(FamilyKind::parse("K3n").unwrap(), FamilyKind::Bipartite(3));
        assert!(FamilyKind::parse("nope").is_err());
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::parse(t.name()).unwrap(), t);
        }
    }
}
