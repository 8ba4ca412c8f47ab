//! Graph polynomials, each with a primary algorithm and an independent
//! cross-check, plus distinctive-power comparisons between them.

pub mod charpoly;
pub mod covered;
pub mod domination;
pub mod gc;
pub mod independence;
pub mod matching;
pub mod memo;
pub mod subsets;
pub mod tutte;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{enumerate_shared, GraphClass};
use crate::error::{Error, Result};
use crate::format::write_line;
use crate::graph::Graph;
use crate::poly::Polynomial;

pub use charpoly::{char_poly_adjacency, char_poly_laplacian, char_recurrence_check};
pub use covered::{covered_components_poly, crec_join_check, xi_poly};
pub use domination::domination_poly;
pub use gc::gen_chromatic_poly;
pub use independence::{clique_poly, independence_poly, vertex_cover_poly};
pub use matching::{matching_counts, matching_g, matching_m, matching_mu};
pub use tutte::{chromatic_poly, euler_poly, flow_poly, partition_z, reliability_poly, tutte_poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PolynomialId {
    #[serde(rename = "char_adj")]
    CharAdj,
    #[serde(rename = "char_lap")]
    CharLap,
    #[serde(rename = "dom")]
    Dom,
    #[serde(rename = "match_mu")]
    MatchMu,
    #[serde(rename = "match_g")]
    MatchG,
    #[serde(rename = "match_M")]
    MatchM,
    #[serde(rename = "indep")]
    Indep,
    #[serde(rename = "vcover")]
    VCover,
    #[serde(rename = "clique")]
    Clique,
    #[serde(rename = "covered_C")]
    CoveredC,
    #[serde(rename = "xi_eq")]
    Xi,
    #[serde(rename = "tutte")]
    Tutte,
    #[serde(rename = "partition_Z")]
    PartitionZ,
    #[serde(rename = "chromatic")]
    Chromatic,
    #[serde(rename = "gen_chromatic")]
    GenChromatic,
    #[serde(rename = "euler")]
    Euler,
    #[serde(rename = "flow")]
    Flow,
    #[serde(rename = "reliability")]
    Reliability,
}

impl PolynomialId {
    pub const ALL: [PolynomialId; 18] = [
        PolynomialId::CharAdj,
        PolynomialId::CharLap,
        PolynomialId::Dom,
        PolynomialId::MatchMu,
        PolynomialId::MatchG,
        PolynomialId::MatchM,
        PolynomialId::Indep,
        PolynomialId::VCover,
        PolynomialId::Clique,
        PolynomialId::CoveredC,
        PolynomialId::Xi,
        PolynomialId::Tutte,
        PolynomialId::PartitionZ,
        PolynomialId::Chromatic,
        PolynomialId::GenChromatic,
        PolynomialId::Euler,
        PolynomialId::Flow,
        PolynomialId::Reliability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolynomialId::CharAdj => "char_adj",
            PolynomialId::CharLap => "char_lap",
            PolynomialId::Dom => "dom",
            PolynomialId::MatchMu => "match_mu",
            PolynomialId::MatchG => "match_g",
            PolynomialId::MatchM => "match_M",
            PolynomialId::Indep => "indep",
            PolynomialId::VCover => "vcover",
            PolynomialId::Clique => "clique",
            PolynomialId::CoveredC => "covered_C",
            PolynomialId::Xi => "xi_eq",
            PolynomialId::Tutte => "tutte",
            PolynomialId::PartitionZ => "partition_Z",
            PolynomialId::Chromatic => "chromatic",
            PolynomialId::GenChromatic => "gen_chromatic",
            PolynomialId::Euler => "euler",
            PolynomialId::Flow => "flow",
            PolynomialId::Reliability => "reliability",
        }
    }

    /// Variables the value is expressed in.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            PolynomialId::MatchM => &["w1", "w2"],
            PolynomialId::CoveredC | PolynomialId::Xi => &["x", "y", "z"],
            PolynomialId::Tutte | PolynomialId::GenChromatic => &["x", "y"],
            PolynomialId::PartitionZ => &["q", "w"],
            PolynomialId::Reliability => &["p"],
            _ => &["x"],
        }
    }

    /// True when the polynomial does not determine the order, so that mates
    /// of different orders exist and order-restricted uniqueness counts are
    /// only upper bounds.
    pub fn has_cross_order_mates(self) -> bool {
        matches!(
            self,
            PolynomialId::Tutte
                | PolynomialId::MatchG
                | PolynomialId::Euler
                | PolynomialId::Flow
                | PolynomialId::Reliability
        )
    }

    pub fn compute(self, g: &Graph) -> Result<Polynomial> {
        match self {
            PolynomialId::CharAdj => char_poly_adjacency(g),
            PolynomialId::CharLap => char_poly_laplacian(g),
            PolynomialId::Dom => domination_poly(g),
            PolynomialId::MatchMu => matching_mu(g),
            PolynomialId::MatchG => matching_g(g),
            PolynomialId::MatchM => matching_m(g),
            PolynomialId::Indep => independence_poly(g),
            PolynomialId::VCover => vertex_cover_poly(g),
            PolynomialId::Clique => clique_poly(g),
            PolynomialId::CoveredC => covered_components_poly(g),
            PolynomialId::Xi => xi_poly(g),
            PolynomialId::Tutte => tutte_poly(g),
            PolynomialId::PartitionZ => partition_z(g),
            PolynomialId::Chromatic => chromatic_poly(g),
            PolynomialId::GenChromatic => gen_chromatic_poly(g),
            PolynomialId::Euler => euler_poly(g),
            PolynomialId::Flow => flow_poly(g),
            PolynomialId::Reliability => reliability_poly(g),
        }
    }
}

impl fmt::Display for PolynomialId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolynomialId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PolynomialId::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let names: Vec<&str> = PolynomialId::ALL.iter().map(|p| p.name()).collect();
            Error::domain(format!("unknown polynomial '{s}' (expected one of: {})", names.join(", ")))
        })
    }
}

/// Order, size and number of components; graphs with equal keys are similar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimilarityKey {
    pub order: usize,
    pub size: usize,
    pub components: usize,
}

pub fn similarity_key(g: &Graph) -> SimilarityKey {
    SimilarityKey { order: g.order(), size: g.size(), components: g.component_count() }
}

/// A pair of graphs separating two polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub g: String,
    pub h: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub p: PolynomialId,
    pub q: PolynomialId,
    pub class: GraphClass,
    pub order: usize,
    pub similar_only: bool,
    pub graphs: usize,
    /// Pairs with equal `Q` and unequal `P`: each refutes "Q is at least as
    /// distinctive as P".
    pub q_equal_p_unequal: Vec<Witness>,
    /// Pairs with equal `P` and unequal `Q`.
    pub p_equal_q_unequal: Vec<Witness>,
    /// Graphs without a `P`-mate (within the scanned class and order, and
    /// among similar graphs when `similar_only`).
    pub unique_p: usize,
    pub unique_q: usize,
    /// Every `P`-unique graph is `Q`-unique.
    pub unique_p_subset_unique_q: bool,
}

impl ComparisonReport {
    /// No scanned pair refutes `P <= Q`.
    pub fn p_below_q(&self) -> bool {
        self.q_equal_p_unequal.is_empty()
    }

    pub fn q_below_p(&self) -> bool {
        self.p_equal_q_unequal.is_empty()
    }
}

/// Flags the members of singleton buckets.
fn unique_flags<K: Ord + Clone>(keys: &[K]) -> Vec<bool> {
    let mut counts: BTreeMap<&K, usize> = BTreeMap::new();
    for k in keys {
        *counts.entry(k).or_default() += 1;
    }
    keys.iter().map(|k| counts[k] == 1).collect()
}

/// For each bucket of equal `a`, one witness pair of graphs whose `b` differs.
fn separating_pairs<A: Ord, B: PartialEq>(a: &[A], b: &[B], graphs: &[Graph]) -> Vec<Witness> {
    let mut buckets: BTreeMap<&A, Vec<usize>> = BTreeMap::new();
    for (i, k) in a.iter().enumerate() {
        buckets.entry(k).or_default().push(i);
    }
    let mut out = Vec::new();
    for members in buckets.values() {
        let first = members[0];
        if let Some(&other) = members.iter().find(|&&j| b[j] != b[first]) {
            out.push(Witness { g: write_line(&graphs[first]), h: write_line(&graphs[other]) });
        }
    }
    out
}

/// Compares two polynomials over all members of `class` of order `n`.
pub fn compare_dp(p: PolynomialId, q: PolynomialId, class: GraphClass, n: usize, similar_only: bool) -> Result<ComparisonReport> {
    let graphs = enumerate_shared(class, n)?;
    compare_on(p, q, &graphs, class, n, similar_only)
}

/// As [`compare_dp`] on an explicit list of pairwise non-isomorphic graphs.
pub fn compare_on(
    p: PolynomialId,
    q: PolynomialId,
    graphs: &[Graph],
    class: GraphClass,
    n: usize,
    similar_only: bool,
) -> Result<ComparisonReport> {
    let values: Vec<(String, String)> = graphs
        .par_iter()
        .map(|g| Ok((p.compute(g)?.to_string(), q.compute(g)?.to_string())))
        .collect::<Result<_>>()?;
    let (pv, qv): (Vec<String>, Vec<String>) = values.into_iter().unzip();
    Ok(compare_values(p, q, &pv, &qv, graphs, class, n, similar_only))
}

/// Comparison from precomputed normal-form strings of `P` and `Q`.
#[allow(clippy::too_many_arguments)]
pub fn compare_values(
    p: PolynomialId,
    q: PolynomialId,
    p_values: &[String],
    q_values: &[String],
    graphs: &[Graph],
    class: GraphClass,
    n: usize,
    similar_only: bool,
) -> ComparisonReport {
    let sim: Vec<Option<SimilarityKey>> =
        graphs.iter().map(|g| similar_only.then(|| similarity_key(g))).collect();
    let pk: Vec<(Option<SimilarityKey>, &String)> = sim.iter().copied().zip(p_values).collect();
    let qk: Vec<(Option<SimilarityKey>, &String)> = sim.iter().copied().zip(q_values).collect();
    let up = unique_flags(&pk);
    let uq = unique_flags(&qk);
    ComparisonReport {
        p,
        q,
        class,
        order: n,
        similar_only,
        graphs: graphs.len(),
        q_equal_p_unequal: separating_pairs(&qk, &pk, graphs),
        p_equal_q_unequal: separating_pairs(&pk, &qk, graphs),
        unique_p: up.iter().filter(|&&u| u).count(),
        unique_q: uq.iter().filter(|&&u| u).count(),
        unique_p_subset_unique_q: up.iter().zip(&uq).all(|(&a, &b)| !a || b),
    }
}
