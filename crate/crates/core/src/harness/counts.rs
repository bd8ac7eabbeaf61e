//! Counts of the members themselves against the values used in the
//! "only if" directions.

use std::cmp::Ordering;
use std::ops::RangeInclusive;
use std::time::Instant;

use serde::Serialize;

use super::{SuiteReport, Violation};
use crate::error::{Error, Result};
use crate::params::{self, PropertyKind};
use crate::patterns::{FamilyKind, TheoremId, Tier};

/// The `c_1` used for B₃ rows. The stated values assume `n = c_1 + c_2`
/// with `c_2 ≥ 1`, so they apply from `n = 3` on.
pub const B3_THRESHOLD: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    Greater,
    Less,
    NotApplicable,
}

/// What is asserted about a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Assertion {
    Exact,
    /// Stated equality disagrees with direct counting; only `computed ≥ stated`.
    AtLeast,
    /// Stated value disagrees even in the `≥` direction; recorded and warned.
    RecordOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub theorem: TheoremId,
    pub member: String,
    pub n: usize,
    /// `p_k(prop)`, or `order` for the connected Ramsey family.
    pub count: String,
    pub computed: usize,
    pub stated: i64,
    pub relation: Relation,
    pub assertion: Assertion,
}

/// Value used in the "only if" argument for `kind` at `n`, and how strictly
/// it is checked.
pub fn stated_count(theorem: TheoremId, kind: FamilyKind, n: usize) -> Option<(i64, Assertion)> {
    use FamilyKind as F;
    use TheoremId::*;
    let n = n as i64;
    let exact = |v: i64| Some((v, Assertion::Exact));
    match (theorem, kind) {
        (ConnectedRamsey, F::Complete | F::Path) => exact(n),
        (ConnectedRamsey, F::Star) => exact(n + 1),
        // K_2 has no vertex of degree 2; the identity holds from n = 3 on.
        (B1Deg | B2Deg, F::Complete) if n == 2 => Some((n, Assertion::RecordOnly)),
        (B1Deg | B2Deg, F::Complete) => exact(n),
        (B1Deg, F::Path) => exact(n - 2),
        (B2Deg, F::CopiesP3) => exact(n),
        (B2Deg, F::CopiesK3) => exact(3 * n),
        (B1Deg | B2Deg, F::StarPendants) => exact(n + 1),
        (B1Deg | B2Deg, F::Bipartite(2)) => exact(n + 2),
        (B1Deg | B2Deg, F::EdgeJoinIndependent) => exact(n + 2),
        (B1Deg | B2Deg, F::VertexJoinMatching) => exact(2 * n + 1),
        (B1AlphaL | B2AlphaL | B1CL | B2CL | B1Sdeg | B2Sdeg, F::CliquePendants) => exact(n),
        (B1AlphaL | B1CL | B1Sdeg, F::Path) => exact(n - 2),
        (B2AlphaL | B2CL | B2Sdeg, F::CopiesP3) => exact(n),
        (B1AlphaL | B2AlphaL | B1CL | B2CL, F::StarPendants) => exact(n + 1),
        (B1Sdeg | B2Sdeg, F::StarPendants) => Some((n - 2, Assertion::AtLeast)),
        (B1AlphaL | B2AlphaL | B1CL | B2CL, F::Bipartite(2)) => exact(n + 2),
        (B1AlphaL | B2AlphaL, F::NonEdgeJoinClique) => exact(n),
        (B1AlphaL, F::VertexJoinPaths) => exact(n + 1),
        (B1AlphaL | B2AlphaL | B1CL | B2CL, F::MatchedCliques) => exact(2 * n),
        (B1CL | B2CL, F::ApexSplit) => exact(n + 1),
        (B3Deg, F::Complete) => exact(n),
        (B3Deg, F::BalancedBipartite) => Some((n, Assertion::AtLeast)),
        (B3Deg | B3AlphaLCL | B3Sdeg, F::CopiesStar) => exact(n),
        (B3AlphaLCL, F::BalancedBipartite) => exact(2 * n),
        (B3AlphaLCL, F::CliqueJoinIndependent) => Some((n, Assertion::RecordOnly)),
        (B3AlphaLCL | B3Sdeg, F::CliqueBroom) => exact(n),
        _ => None,
    }
}

fn count_property(theorem: TheoremId) -> Option<PropertyKind> {
    use TheoremId::*;
    match theorem {
        ConnectedRamsey => None,
        B1Deg | B2Deg | B3Deg => Some(PropertyKind::Deg),
        B1AlphaL | B2AlphaL => Some(PropertyKind::AlphaL),
        B1CL | B2CL | B3AlphaLCL => Some(PropertyKind::CL),
        B1Sdeg | B2Sdeg | B3Sdeg => Some(PropertyKind::Sdeg),
    }
}

/// Counts every member of `theorem` for each `n` in `ns` (within `1..=8`).
/// Computed values below the stated one are violations, as are mismatches
/// on rows without an open question; open-question mismatches are warnings.
pub fn check_pattern_counts(theorem: TheoremId, ns: RangeInclusive<usize>) -> Result<SuiteReport> {
    if *ns.start() < 1 || *ns.end() > 8 || ns.is_empty() {
        return Err(Error::InvalidParameter(format!("n range {ns:?} must lie within 1..=8")));
    }
    let t0 = Instant::now();
    let mut rep = SuiteReport::new("pattern-counts", format!("{theorem}, n in {}..={}", ns.start(), ns.end()));
    let prop = count_property(theorem);
    let k = match theorem.tier() {
        Some(Tier::B3) => B3_THRESHOLD,
        _ => 2,
    };
    let mut rows = Vec::new();
    for n in ns {
        for kind in theorem.member_kinds() {
            let member = kind.instance(n);
            let g = member.build()?;
            let (label, computed) = match prop {
                None => ("order".to_string(), g.order()),
                Some(p) => (format!("p_{k}({p})"), params::p_k_count(&g, p, k)),
            };
            let (stated, assertion) = stated_count(theorem, kind, n).expect("every member has a stated count");
            let applicable = theorem.tier() != Some(Tier::B3) || n > B3_THRESHOLD;
            let relation = if !applicable {
                Relation::NotApplicable
            } else {
                match (computed as i64).cmp(&stated) {
                    Ordering::Equal => Relation::Equal,
                    Ordering::Greater => Relation::Greater,
                    Ordering::Less => Relation::Less,
                }
            };
            rep.checks += 1;
            let claim = format!("{label}({member}) at n={n}");
            let v = || Violation::new(&g, format!("{claim} vs stated"), stated, computed);
            match (relation, assertion) {
                (Relation::Equal, _) => {}
                (Relation::NotApplicable, _) => rep.notes.push(format!(
                    "{claim}: computed {computed}; the stated value needs n > c_1 = {B3_THRESHOLD}, not asserted"
                )),
                (Relation::Less, Assertion::RecordOnly) | (Relation::Greater, Assertion::AtLeast | Assertion::RecordOnly) => {
                    rep.warnings.push(v())
                }
                (Relation::Less, _) | (Relation::Greater, Assertion::Exact) => rep.violations.push(v()),
            }
            if theorem == TheoremId::B3AlphaLCL && kind == FamilyKind::CliqueJoinIndependent {
                let a = params::p_k_count(&g, PropertyKind::AlphaL, k);
                rep.notes.push(format!("p_{k}(alphaL)({member}) at n={n} is {a}; p_{k}(cL) is {computed}"));
            }
            rows.push(CountRow { theorem, member: member.to_string(), n, count: label, computed, stated, relation, assertion });
        }
    }
    rep.counts = Some(rows);
    Ok(rep.finish(t0.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row<'a>(rep: &'a SuiteReport, member: &str, n: usize) -> &'a CountRow {
        rep.counts.as_ref().unwrap().iter().find(|r| r.member == member && r.n == n).unwrap()
    }

    #[test]
    fn examples() {
        let rep = check_pattern_counts(TheoremId::B1Deg, 4..=4).unwrap();
        let r = row(&rep, "K_1+4K_2", 4);
        assert_eq!((r.computed, r.stated, r.relation), (9, 9, Relation::Equal));

        let rep = check_pattern_counts(TheoremId::B1Sdeg, 4..=4).unwrap();
        let r = row(&rep, "K_{1,4}^*", 4);
        assert_eq!((r.computed, r.stated), (5, 2));
        assert_eq!(r.assertion, Assertion::AtLeast);
        assert!(rep.passed());
        assert_eq!(rep.warnings.len(), 1);

        let rep = check_pattern_counts(TheoremId::B3AlphaLCL, 3..=3).unwrap();
        let r = row(&rep, "K_3+E_3", 3);
        assert_eq!((r.computed, r.relation), (0, Relation::Less));
        assert!(rep.passed());
        assert_eq!(rep.warnings.len(), 1);

        let rep = check_pattern_counts(TheoremId::B1Deg, 2..=3).unwrap();
        assert!(rep.passed());
        assert_eq!(row(&rep, "K_2", 2).relation, Relation::Less);
        assert_eq!(row(&rep, "K_3", 3).relation, Relation::Equal);
    }
}
