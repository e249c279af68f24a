//! Cohomology of integer partitions.
//!
//! Two cochain complexes are spanned by partitions of a fixed weight `n`,
//! graded by length: one by partitions into distinct parts
//! ([`complex::Distinct`]) and one by ordinary partitions
//! ([`complex::Ordinary`]). Each carries a coboundary `δ` raising length by
//! one and an adjoint `δ*` lowering it. Both maps send a basis element to
//! zero or a single basis element and undo each other, so cohomology is
//! spanned by the *harmonic* partitions killed by both.
//!
//! Taking Euler characteristics gives
//!
//! ```text
//! ∏ (1 - q^m)   = 1 + Σ (-1)^l (q^{l(3l-1)/2} + q^{l(3l+1)/2})
//! ∏ 1/(1 + q^m) = 1 + Σ (-1)^l q^{l²} / ∏_{j<=l} (1 - q^{2j})
//! ```
//!
//! and [`qseries`] checks both, together with the classical odd-part
//! identities, as exact truncated power series.

pub mod complex;
pub mod distinct;
pub mod error;
pub mod hodge;
pub mod ordinary;
pub mod partition;
pub mod qseries;

pub use complex::{DeltaResult, Distinct, Ordinary, PartitionComplex};
pub use error::{ConsistencyError, PartitionError, SeriesError};
pub use hodge::{
    build_report, check_report, euler_characteristic_series, laplacian_oracle, HodgeReport, LaplacianReport,
};
pub use partition::{
    enumerate_distinct, enumerate_ordinary, format_partition, parse_partition, AnyPartition, Block, BlockPartition,
    DistinctPartition, GradedBasis, Kind,
};
pub use qseries::{compare, verify_identity, Identity, TruncatedSeries, Verdict};
