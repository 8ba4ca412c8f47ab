use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{enumerate_shared, GraphClass};
use crate::error::Result;
use crate::invariants::gc::MAX_GC_ORDER;
use crate::invariants::{compare_values, PolynomialId, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `Q` is at least as distinctive as `P`: equal `Q` forces equal `P`.
    AtMost,
    Equivalent,
    /// Neither determines the other; witnesses are reported when present.
    Incomparable,
}

#[derive(Clone, Copy, Debug)]
struct Claim {
    p: PolynomialId,
    q: PolynomialId,
    relation: Relation,
    similar_only: bool,
}

const CLAIMS: &[Claim] = {
    use PolynomialId::*;
    use Relation::*;
    &[
        Claim { p: Chromatic, q: Tutte, relation: AtMost, similar_only: true },
        Claim { p: Tutte, q: PartitionZ, relation: Equivalent, similar_only: true },
        Claim { p: PartitionZ, q: CoveredC, relation: AtMost, similar_only: false },
        Claim { p: CoveredC, q: Xi, relation: Equivalent, similar_only: false },
        Claim { p: VCover, q: Indep, relation: Equivalent, similar_only: true },
        Claim { p: Indep, q: GenChromatic, relation: AtMost, similar_only: true },
        Claim { p: MatchMu, q: MatchG, relation: Equivalent, similar_only: true },
        Claim { p: MatchG, q: MatchM, relation: Equivalent, similar_only: true },
        Claim { p: MatchMu, q: MatchM, relation: Equivalent, similar_only: false },
        Claim { p: CharAdj, q: Dom, relation: Incomparable, similar_only: false },
    ]
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub p: PolynomialId,
    pub q: PolynomialId,
    pub relation: Relation,
    pub similar_only: bool,
    /// `None` when the claim was skipped (see `skipped`).
    pub holds: Option<bool>,
    pub skipped: Option<String>,
    /// Pairs refuting the claim (for `Incomparable`: the separating pairs).
    pub counterexamples: Vec<Witness>,
    /// For `AtMost`/`Equivalent`: every `P`-unique graph is `Q`-unique.
    pub unique_subset: Option<bool>,
    /// Witnesses for `Incomparable`, per direction.
    pub q_equal_p_unequal: usize,
    pub p_equal_q_unequal: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub class: GraphClass,
    pub order: usize,
    pub graphs: usize,
    pub claims: Vec<ClaimResult>,
    /// Graphs of this order without a covered-components mate.
    pub covered_unique: usize,
    pub all_hold: bool,
}

const MAX_LISTED: usize = 5;

/// Scans every (similar) pair of the class at order `n` against the chain of
/// distinctive-power claims between the polynomials.
pub fn dp_chain_audit(class: GraphClass, n: usize) -> Result<AuditReport> {
    let graphs = enumerate_shared(class, n)?;
    let mut ids: Vec<PolynomialId> = CLAIMS.iter().flat_map(|c| [c.p, c.q]).collect();
    ids.sort();
    ids.dedup();
    ids.retain(|&id| id != PolynomialId::GenChromatic || n <= MAX_GC_ORDER);
    let mut values: BTreeMap<PolynomialId, Vec<String>> = BTreeMap::new();
    for id in ids {
        let v = graphs.par_iter().map(|g| Ok(id.compute(g)?.to_string())).collect::<Result<Vec<_>>>()?;
        values.insert(id, v);
    }
    let mut claims = Vec::new();
    for c in CLAIMS {
        let (Some(pv), Some(qv)) = (values.get(&c.p), values.get(&c.q)) else {
            claims.push(ClaimResult {
                p: c.p,
                q: c.q,
                relation: c.relation,
                similar_only: c.similar_only,
                holds: None,
                skipped: Some(format!("generalized chromatic counts are limited to order {MAX_GC_ORDER}")),
                counterexamples: Vec::new(),
                unique_subset: None,
                q_equal_p_unequal: 0,
                p_equal_q_unequal: 0,
            });
            continue;
        };
        let r = compare_values(c.p, c.q, pv, qv, &graphs, class, n, c.similar_only);
        let (holds, counterexamples, unique_subset) = match c.relation {
            Relation::AtMost => (r.p_below_q(), r.q_equal_p_unequal.clone(), Some(r.unique_p_subset_unique_q)),
            Relation::Equivalent => {
                let mut ce = r.q_equal_p_unequal.clone();
                ce.extend(r.p_equal_q_unequal.iter().cloned());
                (ce.is_empty(), ce, Some(r.unique_p_subset_unique_q && r.unique_p == r.unique_q))
            }
            Relation::Incomparable => {
                let mut w = r.q_equal_p_unequal.clone();
                w.extend(r.p_equal_q_unequal.iter().cloned());
                // witnesses may not exist yet at small orders; that refutes nothing
                (true, w, None)
            }
        };
        claims.push(ClaimResult {
            p: c.p,
            q: c.q,
            relation: c.relation,
            similar_only: c.similar_only,
            holds: Some(holds),
            skipped: None,
            counterexamples: counterexamples.into_iter().take(MAX_LISTED).collect(),
            unique_subset,
            q_equal_p_unequal: r.q_equal_p_unequal.len(),
            p_equal_q_unequal: r.p_equal_q_unequal.len(),
        });
    }
    let mut counts: BTreeMap<&String, usize> = BTreeMap::new();
    for v in &values[&PolynomialId::CoveredC] {
        *counts.entry(v).or_default() += 1;
    }
    let covered_unique = counts.values().filter(|&&c| c == 1).count();
    let all_hold = claims.iter().all(|c| c.holds != Some(false) && c.unique_subset != Some(false));
    Ok(AuditReport { class, order: n, graphs: graphs.len(), claims, covered_unique, all_hold })
}
