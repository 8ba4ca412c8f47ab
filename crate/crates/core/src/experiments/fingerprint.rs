use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::format::write_line;
use crate::graph::Graph;
use crate::invariants::PolynomialId;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub polynomial_id: PolynomialId,
    pub target: String,
}

impl Fingerprint {
    pub fn new(polynomial_id: PolynomialId, target: &str) -> Result<Self> {
        let parsed: Polynomial = target.parse()?;
        Ok(Fingerprint { polynomial_id, target: parsed.to_string() })
    }

    pub fn target_poly(&self) -> Result<Polynomial> {
        self.target.parse()
    }
}

/// A graph is a candidate for the target when it matches every fingerprint.
/// Fingerprints are tested in order, so cheap ones should come first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FingerprintTarget {
    pub name: String,
    pub fingerprints: Vec<Fingerprint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FingerprintReport {
    pub scanned: usize,
    /// The budget ran out before the input did; results are partial.
    pub budget_exhausted: bool,
    /// Number of polynomial evaluations per id.
    pub evaluations: BTreeMap<PolynomialId, usize>,
    /// graph6 codes of candidates, per target name.
    pub candidates: BTreeMap<String, Vec<String>>,
    /// Candidate pairs from different targets with equal covered-components
    /// polynomials (hence equal xi).
    pub xi_equal_pairs: Vec<(String, String)>,
}

/// The two order-10 graphs with equal xi but different domination and
/// characteristic polynomials, known only by these printed values.
pub fn coxi_targets() -> Result<Vec<FingerprintTarget>> {
    Ok(vec![
        FingerprintTarget {
            name: "G1".into(),
            fingerprints: vec![
                Fingerprint::new(PolynomialId::CharAdj, "x^2 (x^4 - x^3 - 4x^2 + 2x + 3)(x^4 + x^3 - 4x^2 - 2x + 3)")?,
                Fingerprint::new(PolynomialId::Dom, "x^10 + 10x^9 + 40x^8 + 82x^7 + 92x^6 + 56x^5 + 16x^4")?,
            ],
        },
        FingerprintTarget {
            name: "G2".into(),
            fingerprints: vec![
                Fingerprint::new(PolynomialId::CharAdj, "x^2 (x - 1)(x + 1)(x^2 - 2)(x^4 - 5x^2 + 3)")?,
                Fingerprint::new(PolynomialId::Dom, "x^10 + 10x^9 + 41x^8 + 86x^7 + 94x^6 + 48x^5 + 9x^4")?,
            ],
        },
    ])
}

const CHUNK: usize = 2048;

/// Matches for one graph, plus the ids it had to evaluate.
fn scan_one(g: &Graph, targets: &[FingerprintTarget]) -> Result<(Vec<usize>, Vec<PolynomialId>)> {
    let mut cache: BTreeMap<PolynomialId, String> = BTreeMap::new();
    let mut evaluated = Vec::new();
    let mut hits = Vec::new();
    for (t, target) in targets.iter().enumerate() {
        let mut ok = true;
        for fp in &target.fingerprints {
            if !cache.contains_key(&fp.polynomial_id) {
                cache.insert(fp.polynomial_id, fp.polynomial_id.compute(g)?.to_string());
                evaluated.push(fp.polynomial_id);
            }
            if cache[&fp.polynomial_id] != fp.target {
                ok = false;
                break;
            }
        }
        if ok {
            hits.push(t);
        }
    }
    Ok((hits, evaluated))
}

/// Streams `graphs`, scanning at most `budget` of them.
pub fn fingerprint_search(
    targets: &[FingerprintTarget],
    graphs: impl IntoIterator<Item = Graph>,
    budget: usize,
) -> Result<FingerprintReport> {
    let mut report = FingerprintReport {
        scanned: 0,
        budget_exhausted: false,
        evaluations: BTreeMap::new(),
        candidates: targets.iter().map(|t| (t.name.clone(), Vec::new())).collect(),
        xi_equal_pairs: Vec::new(),
    };
    let mut found: Vec<Vec<Graph>> = vec![Vec::new(); targets.len()];
    let mut iter = graphs.into_iter();
    loop {
        let room = budget - report.scanned;
        let chunk: Vec<Graph> = iter.by_ref().take(room.min(CHUNK)).collect();
        if chunk.is_empty() {
            if room == 0 {
                report.budget_exhausted = iter.next().is_some();
            }
            break;
        }
        report.scanned += chunk.len();
        let results: Vec<(Vec<usize>, Vec<PolynomialId>)> =
            chunk.par_iter().map(|g| scan_one(g, targets)).collect::<Result<_>>()?;
        for (g, (hits, evaluated)) in chunk.iter().zip(results) {
            for id in evaluated {
                *report.evaluations.entry(id).or_default() += 1;
            }
            for t in hits {
                found[t].push(g.clone());
            }
        }
    }
    for (t, target) in targets.iter().enumerate() {
        report.candidates.insert(target.name.clone(), found[t].iter().map(write_line).collect());
    }
    for a in 0..targets.len() {
        for b in a + 1..targets.len() {
            for g in &found[a] {
                for h in &found[b] {
                    if PolynomialId::CoveredC.compute(g)? == PolynomialId::CoveredC.compute(h)? {
                        report.xi_equal_pairs.push((write_line(g), write_line(h)));
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets_parse_and_normalize() {
        let t = coxi_targets().unwrap();
        assert_eq!(t.len(), 2);
        for fp in t.iter().flat_map(|t| &t.fingerprints) {
            assert_eq!(fp.target_poly().unwrap().degree_in("x"), 10);
        }
    }

    #[test]
    fn prefilter_skips_domination() {
        let targets = coxi_targets().unwrap();
        let graphs = (0..5).map(|_| Graph::path(10));
        let r = fingerprint_search(&targets, graphs, 3).unwrap();
        assert_eq!(r.scanned, 3);
        assert!(r.budget_exhausted);
        assert_eq!(r.evaluations.get(&PolynomialId::CharAdj), Some(&3));
        assert_eq!(r.evaluations.get(&PolynomialId::Dom), None);
        assert!(r.candidates.values().all(|c| c.is_empty()));
    }
}
