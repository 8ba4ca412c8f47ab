//! Finite-order experiments: uniqueness ratios, pendant frequencies,
//! fingerprint searches and distinctive-power audits.

pub mod audit;
pub mod fingerprint;
pub mod pendant_freq;
pub mod uniqueness;

pub use audit::{dp_chain_audit, AuditReport, ClaimResult, Relation};
pub use fingerprint::{coxi_targets, fingerprint_search, Fingerprint, FingerprintReport, FingerprintTarget};
pub use pendant_freq::{pendant_frequency, tree_from_pruefer, FrequencyMode, PendantFrequencyReport};
pub use uniqueness::{mate_buckets, uniqueness_on, uniqueness_ratio, Bucket, UniquenessReport};
