//! Constructive witness extraction.
//!
//! The B₁/B₂/B₃ extractors first follow the constructive arguments behind the
//! unavoidable families (stripping, pigeonholing neighbourhoods, greedy
//! induced matchings, monochromatic cliques in indicator colourings). Every
//! candidate they produce is checked with the independent embedding verifier.
//! When that route produces nothing the extractor runs a direct induced
//! search over the family, so `None` always means the host is free.

mod b1;
mod b3;
pub mod cds;
pub mod coloring;
pub mod connected;
pub mod matching;
pub mod strip;
pub mod uniform;

use serde::Serialize;

use crate::detect::{self, Embedding, Freeness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;
use crate::params::PropertyKind;
use crate::patterns::{FamilySpec, Pattern, TheoremId, Tier};

pub use cds::{connected_dominating_set, cut_vertices, min_connected_dominating_set};
pub use coloring::{mono_clique_extract, EdgeColoring, MonoClique};
pub use connected::{connected_unavoidable, connected_unavoidable_with};
pub use matching::greedy_induced_matching;
pub use strip::strip_min_local;
pub use uniform::multipartite_uniformize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ProofGuided,
    DirectSearch,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    #[default]
    Connected,
    General,
}

impl Scope {
    pub fn parse(s: &str) -> Result<Scope> {
        match s.to_ascii_lowercase().as_str() {
            "connected" => Ok(Scope::Connected),
            "general" => Ok(Scope::General),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub theorem: TheoremId,
    pub n: usize,
    pub member_index: usize,
    pub member: Pattern,
    pub embedding: Embedding,
    pub method: Method,
}

impl WitnessReport {
    /// Re-checks the embedding against a freshly built member graph.
    pub fn verify(&self, host: &Graph) -> bool {
        match self.member.build() {
            Ok(p) => detect::verify_embedding(host, &p, &self.embedding.map),
            Err(_) => false,
        }
    }
}

/// Wraps a proof-guided candidate; `None` unless `member` belongs to the
/// family and `map` is a genuine induced embedding.
pub(crate) fn guided(host: &Graph, spec: &FamilySpec, member: Pattern, map: Vec<usize>) -> Option<WitnessReport> {
    let member_index = spec.index_of(&member)?;
    let pattern = member.build().ok()?;
    if !detect::verify_embedding(host, &pattern, &map) {
        return None;
    }
    Some(WitnessReport {
        theorem: spec.theorem,
        n: spec.n,
        member_index,
        member,
        embedding: Embedding { pattern_order: pattern.order(), map },
        method: Method::ProofGuided,
    })
}

/// Direct search in `host[vertices]`, mapped back to host ids.
pub(crate) fn localized(host: &Graph, spec: &FamilySpec, vertices: &[usize]) -> Option<WitnessReport> {
    let mut vs = vertices.to_vec();
    vs.sort_unstable();
    vs.dedup();
    let sub = host.induced_by_list(&vs);
    let r = direct_search(&sub, spec, Exec::Sequential)?;
    guided(host, spec, r.member, r.embedding.map.iter().map(|&i| vs[i]).collect())
}

/// Least member (statement order) embedded in `host`.
pub fn direct_search(host: &Graph, spec: &FamilySpec, exec: Exec) -> Option<WitnessReport> {
    match detect::is_hfree_with(host, spec, exec) {
        Freeness::Free => None,
        Freeness::Witness { member_index, member, embedding } => Some(WitnessReport {
            theorem: spec.theorem,
            n: spec.n,
            member_index,
            member,
            embedding,
            method: Method::DirectSearch,
        }),
    }
}

pub fn extract_b1_witness(g: &Graph, prop: PropertyKind, n: usize, scope: Scope) -> Result<Option<WitnessReport>> {
    extract_b1_witness_with(g, prop, n, scope, Exec::default())
}

/// `Scope::Connected` uses the B₁ family and needs a connected host;
/// `Scope::General` uses the B₂ family and works component by component.
pub fn extract_b1_witness_with(
    g: &Graph,
    prop: PropertyKind,
    n: usize,
    scope: Scope,
    exec: Exec,
) -> Result<Option<WitnessReport>> {
    let tier = match scope {
        Scope::Connected => Tier::B1,
        Scope::General => Tier::B2,
    };
    let spec = FamilySpec::new(TheoremId::for_tier(tier, prop), n)?;
    let found = match scope {
        Scope::Connected => {
            if !g.is_connected() {
                return Err(Error::Disconnected);
            }
            b1::connected_pipeline(g, prop, &spec)
        }
        Scope::General => b1::general_pipeline(g, prop, &spec),
    };
    Ok(found.or_else(|| direct_search(g, &spec, exec)))
}

pub fn extract_b3_witness(g: &Graph, prop: PropertyKind, n: usize) -> Result<Option<WitnessReport>> {
    extract_b3_witness_with(g, prop, n, Exec::default())
}

pub fn extract_b3_witness_with(g: &Graph, prop: PropertyKind, n: usize, exec: Exec) -> Result<Option<WitnessReport>> {
    let spec = FamilySpec::new(TheoremId::for_tier(Tier::B3, prop), n)?;
    Ok(b3::pipeline(g, prop, &spec).or_else(|| direct_search(g, &spec, exec)))
}

/// Extraction for any theorem id; `connected_ramsey` requires a connected host.
pub fn extract_for_theorem(g: &Graph, theorem: TheoremId, n: usize, exec: Exec) -> Result<Option<WitnessReport>> {
    use TheoremId::*;
    let (prop, tier) = match theorem {
        ConnectedRamsey => return connected::connected_unavoidable_with(g, n, exec),
        B1Deg => (PropertyKind::Deg, Tier::B1),
        B1AlphaL => (PropertyKind::AlphaL, Tier::B1),
        B1CL => (PropertyKind::CL, Tier::B1),
        B1Sdeg => (PropertyKind::Sdeg, Tier::B1),
        B2Deg => (PropertyKind::Deg, Tier::B2),
        B2AlphaL => (PropertyKind::AlphaL, Tier::B2),
        B2CL => (PropertyKind::CL, Tier::B2),
        B2Sdeg => (PropertyKind::Sdeg, Tier::B2),
        B3Deg => (PropertyKind::Deg, Tier::B3),
        B3AlphaLCL => (PropertyKind::AlphaL, Tier::B3),
        B3Sdeg => (PropertyKind::Sdeg, Tier::B3),
    };
    match tier {
        Tier::B1 => extract_b1_witness_with(g, prop, n, Scope::Connected, exec),
        Tier::B2 => extract_b1_witness_with(g, prop, n, Scope::General, exec),
        Tier::B3 => extract_b3_witness_with(g, prop, n, exec),
    }
}
