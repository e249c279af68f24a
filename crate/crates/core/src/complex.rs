use std::fmt;
use std::hash::Hash;

use crate::error::PartitionError;
use crate::partition::{self, BlockPartition, DistinctPartition, GradedBasis, Kind};
use crate::{distinct, ordinary};

/// Value of a coboundary or adjoint on one basis element. Both maps send a
/// basis element to zero or to exactly one basis element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DeltaResult<P> {
    Zero,
    Image(P),
}

impl<P> DeltaResult<P> {
    pub fn is_zero(&self) -> bool {
        matches!(self, DeltaResult::Zero)
    }

    pub fn image(self) -> Option<P> {
        match self {
            DeltaResult::Zero => None,
            DeltaResult::Image(p) => Some(p),
        }
    }

    pub fn as_image(&self) -> Option<&P> {
        match self {
            DeltaResult::Zero => None,
            DeltaResult::Image(p) => Some(p),
        }
    }
}

impl<P: fmt::Display> fmt::Display for DeltaResult<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaResult::Zero => f.write_str("0"),
            DeltaResult::Image(p) => p.fmt(f),
        }
    }
}

/// A graded partition complex: a basis per weight and length, together with
/// a degree +1 coboundary and its degree -1 adjoint.
pub trait PartitionComplex {
    type Element: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync;

    const KIND: Kind;

    fn basis(n: usize) -> Result<GradedBasis<Self::Element>, PartitionError>;
    fn delta(p: &Self::Element) -> DeltaResult<Self::Element>;
    fn delta_star(p: &Self::Element) -> DeltaResult<Self::Element>;
    /// Closed-form harmonic test; must agree with both operators vanishing.
    fn is_harmonic(p: &Self::Element) -> bool;
    fn length(p: &Self::Element) -> usize;
    fn weight(p: &Self::Element) -> usize;
}

/// Complex spanned by distinct-part partitions.
#[derive(Debug, Clone, Copy, Default)]
pub struct Distinct;

/// Complex spanned by ordinary partitions.
#[derive(Debug, Clone, Copy, Default)]
pub struct Ordinary;

impl PartitionComplex for Distinct {
    type Element = DistinctPartition;
    const KIND: Kind = Kind::Distinct;

    fn basis(n: usize) -> Result<GradedBasis<DistinctPartition>, PartitionError> {
        partition::enumerate_distinct(n)
    }
    fn delta(p: &DistinctPartition) -> DeltaResult<DistinctPartition> {
        distinct::delta(p)
    }
    fn delta_star(p: &DistinctPartition) -> DeltaResult<DistinctPartition> {
        distinct::delta_star(p)
    }
    fn is_harmonic(p: &DistinctPartition) -> bool {
        distinct::is_harmonic(p)
    }
    fn length(p: &DistinctPartition) -> usize {
        p.len()
    }
    fn weight(p: &DistinctPartition) -> usize {
        p.weight()
    }
}

impl PartitionComplex for Ordinary {
    type Element = BlockPartition;
    const KIND: Kind = Kind::Ordinary;

    fn basis(n: usize) -> Result<GradedBasis<BlockPartition>, PartitionError> {
        partition::enumerate_ordinary(n)
    }
    fn delta(p: &BlockPartition) -> DeltaResult<BlockPartition> {
        ordinary::delta(p)
    }
    fn delta_star(p: &BlockPartition) -> DeltaResult<BlockPartition> {
        ordinary::delta_star(p)
    }
    fn is_harmonic(p: &BlockPartition) -> bool {
        ordinary::is_harmonic(p)
    }
    fn length(p: &BlockPartition) -> usize {
        p.len()
    }
    fn weight(p: &BlockPartition) -> usize {
        p.weight()
    }
}
