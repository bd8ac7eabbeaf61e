use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{self, PropertyKind};

/// Removes, in one pass, every vertex with `p(v) ≤ 1` measured in `g` itself.
///
/// Returns the remaining induced subgraph (vertices relabelled in ascending
/// order) and the removed set. A vertex with `p(v) ≤ 1` is never a cut vertex
/// of an induced subgraph containing it, so connected input stays connected.
pub fn strip_min_local(g: &Graph, prop: PropertyKind) -> Result<(Graph, VertexSet)> {
    if !matches!(prop, PropertyKind::Deg | PropertyKind::AlphaL) {
        return Err(Error::InvalidParameter(format!("stripping supports deg and alphaL, not {prop}")));
    }
    let vals = params::values(g, prop);
    let mut removed = VertexSet::new(g.order());
    for (v, &x) in vals.iter().enumerate() {
        if x <= 1 {
            removed.insert(v);
        }
    }
    let kept = removed.complement();
    Ok((g.induced_subgraph(&kept)?, removed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::Pattern;

    #[test]
    fn examples() {
        let p5 = Pattern::Path(5).build().unwrap();
        let (h, removed) = strip_min_local(&p5, PropertyKind::Deg).unwrap();
        assert_eq!(h, Pattern::Path(3).build().unwrap());
        assert_eq!(removed.to_vec(), vec![0, 4]);

        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(strip_min_local(&c5, PropertyKind::Deg).unwrap().0, c5);

        let (h, _) = strip_min_local(&Graph::complete(6), PropertyKind::AlphaL).unwrap();
        assert_eq!(h.order(), 0);

        assert!(strip_min_local(&c5, PropertyKind::CL).is_err());
    }

    #[test]
    fn single_pass_keeps_path_interior() {
        // Iterating to a fixpoint would eat the whole path.
        let p9 = Pattern::Path(9).build().unwrap();
        let (h, _) = strip_min_local(&p9, PropertyKind::Deg).unwrap();
        assert_eq!(h.order(), 7);
        assert!(h.is_connected());
    }
}
