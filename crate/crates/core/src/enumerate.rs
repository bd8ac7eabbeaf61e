//! Small-graph generation, seeded random graphs and graph6 streams.
//!
//! Exhaustive generation grows graphs one vertex at a time: every class of
//! order `k` is reached by attaching a vertex to some class of order `k-1`
//! (for connected graphs, to a connected class, since every connected graph
//! has a vertex whose removal keeps it connected). Children are deduplicated
//! by canonical key and emitted in ascending key order. The same growth
//! restricted to a hereditary predicate yields, for example, all connected
//! ℋ-free graphs without touching the rest.
//!
//! Random graphs use Xoshiro256** seeded through SplitMix64
//! (`rand_xoshiro::Xoshiro256StarStar::seed_from_u64`). Pairs are visited in
//! column-major upper-triangle order `(0,1), (0,2), (1,2), (0,3), …` and each
//! consumes one `u64`; the pair is an edge iff that word is below
//! `⌊num · 2^64 / den⌋`.

use std::io::BufRead;
use std::path::Path;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::canon::{self, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::par::{self, Exec};

/// Largest order for built-in exhaustive enumeration.
pub const MAX_ENUM_ORDER: usize = 9;

fn key_rows(key: CanonicalKey) -> Vec<u16> {
    let n = key.order as usize;
    let total = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u16; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (key.bits >> (total - 1 - k)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    rows
}

fn children(parent: CanonicalKey, connected: bool) -> Vec<CanonicalKey> {
    let base = key_rows(parent);
    let k = base.len();
    let start = if connected && k > 0 { 1u32 } else { 0 };
    let mut out: Vec<CanonicalKey> = (start..1u32 << k)
        .map(|mask| {
            let mut rows = base.clone();
            for (i, r) in rows.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    *r |= 1 << k;
                }
            }
            rows.push(mask as u16);
            canon::canonical_key_rows(&rows)
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// One level of growth: all children of `level`, deduplicated and filtered.
fn grow<F>(level: &[CanonicalKey], connected: bool, keep: &F, exec: Exec) -> Vec<CanonicalKey>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let mut next: Vec<CanonicalKey> = par::map(exec, level, |&p| children(p, connected)).concat();
    next.sort_unstable();
    next.dedup();
    let kept = par::map(exec, &next, |&k| keep(&k.to_graph()));
    next.into_iter().zip(kept).filter_map(|(k, ok)| ok.then_some(k)).collect()
}

/// Canonical representatives of every order `0..=max_order` satisfying a
/// hereditary predicate `keep`, indexed by order.
pub fn enumerate_hereditary<F>(max_order: usize, connected: bool, keep: F, exec: Exec) -> Result<Vec<Vec<Graph>>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if max_order > canon::MAX_CANON_ORDER {
        return Err(Error::SizeBudget { what: "enumeration", order: max_order, limit: canon::MAX_CANON_ORDER });
    }
    let empty = CanonicalKey { order: 0, bits: 0 };
    let mut level = if keep(&Graph::empty(0)) { vec![empty] } else { Vec::new() };
    let mut out = vec![level.iter().map(|k| k.to_graph()).collect::<Vec<_>>()];
    for _ in 1..=max_order {
        level = grow(&level, connected, &keep, exec);
        out.push(level.iter().map(|k| k.to_graph()).collect());
    }
    Ok(out)
}

/// Every isomorphism class of the given order, ascending canonical key.
pub fn enumerate_graphs(order: usize, connected_only: bool) -> Result<Vec<Graph>> {
    enumerate_graphs_with(order, connected_only, Exec::default())
}

pub fn enumerate_graphs_with(order: usize, connected_only: bool, exec: Exec) -> Result<Vec<Graph>> {
    if order > MAX_ENUM_ORDER {
        return Err(Error::SizeBudget { what: "enumeration", order, limit: MAX_ENUM_ORDER });
    }
    let mut levels = enumerate_hereditary(order, connected_only, |_| true, exec)?;
    Ok(levels.swap_remove(order))
}

/// Every class of order `1..=max_order`, smallest order first.
pub fn enumerate_up_to(max_order: usize, connected_only: bool, exec: Exec) -> Result<Vec<Graph>> {
    if max_order > MAX_ENUM_ORDER {
        return Err(Error::SizeBudget { what: "enumeration", order: max_order, limit: MAX_ENUM_ORDER });
    }
    let levels = enumerate_hereditary(max_order, connected_only, |_| true, exec)?;
    Ok(levels.into_iter().skip(1).flatten().collect())
}

/// Edge probability `num / den` in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Probability {
    num: u64,
    den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Result<Probability> {
        if den == 0 || num > den {
            return Err(Error::InvalidParameter(format!("probability {num}/{den} is not in [0, 1]")));
        }
        Ok(Probability { num, den })
    }

    /// Accepts `a/b` or a decimal such as `0.3`, both exact.
    pub fn parse(s: &str) -> Result<Probability> {
        let bad = || Error::InvalidParameter(format!("cannot read probability {s:?}"));
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            return Probability::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let den = 10u64.pow(frac.len() as u32);
        let f: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = int.checked_mul(den).and_then(|x| x.checked_add(f)).ok_or_else(bad)?;
        Probability::new(num, den)
    }

    fn threshold(self) -> u128 {
        ((self.num as u128) << 64) / self.den as u128
    }
}

pub fn random_graph(order: usize, p: Probability, seed: u64) -> Graph {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let t = p.threshold();
    let mut edges = Vec::new();
    for j in 1..order {
        for i in 0..j {
            if (rng.next_u64() as u128) < t {
                edges.push((i, j));
            }
        }
    }
    Graph::from_pairs_unchecked(order, edges)
}

/// Decodes one graph6 token per line, in order. Blank lines and a
/// `>>graph6<<` header are skipped; the first bad line ends the stream.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    let mut failed = false;
    reader.lines().enumerate().filter_map(move |(i, line)| {
        if failed {
            return None;
        }
        let line_no = i + 1;
        let res = match line {
            Err(e) => Err(Error::Stream { line: line_no, message: e.to_string() }),
            Ok(text) => {
                let t = text.trim();
                let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
                if t.is_empty() {
                    return None;
                }
                graph6::decode(t).map_err(|e| Error::Stream { line: line_no, message: e.to_string() })
            }
        };
        failed = res.is_err();
        Some(res)
    })
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let f = std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    read_graph6_stream(std::io::BufReader::new(f)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_graphs(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(4, false).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(4, true).unwrap().len(), 6);
        assert!(enumerate_graphs(10, false).is_err());
    }

    #[test]
    fn sorted_by_key() {
        let gs = enumerate_graphs(5, false).unwrap();
        let keys: Vec<CanonicalKey> = gs.iter().map(|g| canon::canonical_key(g).unwrap()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn random_extremes() {
        let zero = Probability::new(0, 1).unwrap();
        let one = Probability::parse("1").unwrap();
        assert_eq!(random_graph(10, zero, 7), Graph::empty(10));
        assert_eq!(random_graph(10, one, 7), Graph::complete(10));
        let p = Probability::parse("0.3").unwrap();
        assert_eq!(p, Probability::new(3, 10).unwrap());
        assert_eq!(random_graph(20, p, 42), random_graph(20, p, 42));
        assert_ne!(random_graph(20, p, 42), random_graph(20, p, 43));
        assert!(Probability::parse("1.5").is_err());
        assert!(Probability::parse("x").is_err());
    }

    #[test]
    fn graph6_stream() {
        let text = "Bw\nDhc\n";
        let gs: Vec<Graph> = read_graph6_stream(text.as_bytes()).collect::<Result<_>>().unwrap();
        assert_eq!(gs[0], Graph::complete(3));
        assert_eq!(gs[1].edge_count(), 5);
        assert_eq!(read_graph6_stream("".as_bytes()).count(), 0);
        let bad: Vec<Result<Graph>> = read_graph6_stream("Bw\n~~~\nBw\n".as_bytes()).collect();
        assert_eq!(bad.len(), 2);
        assert!(matches!(bad[1], Err(Error::Stream { line: 2, .. })));
    }
}
