use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::classes::{enumerate_shared, GraphClass};
use crate::error::Result;
use crate::format::write_line;
use crate::graph::Graph;
use crate::invariants::PolynomialId;

/// Counts of graphs in a class and order that have no mate of the same
/// order, unlabeled and with each class weighted by its `n!/|Aut|` labelings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub polynomial_id: PolynomialId,
    pub class: GraphClass,
    pub order: usize,
    pub class_size_unlabeled: usize,
    /// Decimal string; exceeds 64 bits quickly.
    pub class_size_labeled: String,
    pub unique_unlabeled: usize,
    pub unique_labeled: String,
    pub alpha_unlabeled: f64,
    pub alpha_labeled: f64,
    /// Exact `unique_labeled / class_size_labeled`.
    pub alpha_labeled_exact: String,
    /// Mates of other orders exist for this polynomial, so the unique counts
    /// are upper bounds.
    pub order_restricted_caveat: bool,
}

pub const CSV_HEADER: &str = "polynomial_id,class,order,class_size_unlabeled,class_size_labeled,unique_unlabeled,unique_labeled,alpha_unlabeled,alpha_labeled,alpha_labeled_exact,order_restricted_caveat";

impl UniquenessReport {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{:.6},{:.6},{},{}",
            self.polynomial_id,
            self.class,
            self.order,
            self.class_size_unlabeled,
            self.class_size_labeled,
            self.unique_unlabeled,
            self.unique_labeled,
            self.alpha_unlabeled,
            self.alpha_labeled,
            self.alpha_labeled_exact,
            self.order_restricted_caveat
        )
    }
}

/// Graphs sharing one polynomial value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bucket {
    pub polynomial: String,
    pub graphs: Vec<String>,
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

fn bucket_indices(id: PolynomialId, graphs: &[Graph]) -> Result<(Vec<String>, BTreeMap<String, Vec<usize>>)> {
    let values: Vec<String> = graphs.par_iter().map(|g| Ok(id.compute(g)?.to_string())).collect::<Result<_>>()?;
    let mut buckets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, v) in values.iter().enumerate() {
        buckets.entry(v.clone()).or_default().push(i);
    }
    Ok((values, buckets))
}

pub fn uniqueness_ratio(id: PolynomialId, class: GraphClass, n: usize) -> Result<UniquenessReport> {
    let graphs = enumerate_shared(class, n)?;
    uniqueness_on(id, class, n, &graphs)
}

/// As [`uniqueness_ratio`] on a given list of pairwise non-isomorphic graphs.
pub fn uniqueness_on(id: PolynomialId, class: GraphClass, n: usize, graphs: &[Graph]) -> Result<UniquenessReport> {
    let (_, buckets) = bucket_indices(id, graphs)?;
    let nf = factorial(n);
    let labelings: Vec<BigUint> = graphs.par_iter().map(|g| &nf / canonical_form(g).automorphism_count).collect();
    let total: BigUint = labelings.iter().sum();
    let mut unique_unlabeled = 0;
    let mut unique_labeled = BigUint::zero();
    for members in buckets.values() {
        if let [only] = members[..] {
            unique_unlabeled += 1;
            unique_labeled += &labelings[only];
        }
    }
    let exact = if total.is_zero() {
        BigRational::zero()
    } else {
        BigRational::new(unique_labeled.clone().into(), total.clone().into())
    };
    Ok(UniquenessReport {
        polynomial_id: id,
        class,
        order: n,
        class_size_unlabeled: graphs.len(),
        class_size_labeled: total.to_string(),
        unique_unlabeled,
        unique_labeled: unique_labeled.to_string(),
        alpha_unlabeled: if graphs.is_empty() { 0.0 } else { unique_unlabeled as f64 / graphs.len() as f64 },
        alpha_labeled: exact.to_f64().unwrap_or(0.0),
        alpha_labeled_exact: exact.to_string(),
        order_restricted_caveat: id.has_cross_order_mates(),
    })
}

/// Buckets with more than one member, in polynomial order.
pub fn mate_buckets(id: PolynomialId, class: GraphClass, n: usize) -> Result<Vec<Bucket>> {
    let graphs = enumerate_shared(class, n)?;
    let (_, buckets) = bucket_indices(id, &graphs)?;
    Ok(buckets
        .into_iter()
        .filter(|(_, m)| m.len() > 1)
        .map(|(polynomial, m)| Bucket { polynomial, graphs: m.iter().map(|&i| write_line(&graphs[i])).collect() })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_graph_is_unique() {
        let r = uniqueness_ratio(PolynomialId::Dom, GraphClass::All, 1).unwrap();
        assert_eq!((r.unique_unlabeled, r.alpha_labeled), (1, 1.0));
        assert_eq!(r.class_size_labeled, "1");
    }

    #[test]
    fn csv_row_has_header_arity() {
        let r = uniqueness_ratio(PolynomialId::Tutte, GraphClass::All, 3).unwrap();
        assert_eq!(r.csv_row().split(',').count(), CSV_HEADER.split(',').count());
        assert!(r.order_restricted_caveat);
    }
}
