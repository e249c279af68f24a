//! Distinct-part and ordinary partitions, graded by weight and length.
//!
//! Text exchange form:
//! - distinct: comma separated parts, `4,2,1`
//! - ordinary: comma separated `part^mult` atoms, `3^3,2^2,1`; `^1` may be
//!   omitted and is omitted on output.
//!
//! JSON form is `{"kind":"distinct","parts":[4,2,1]}` or
//! `{"kind":"ordinary","blocks":[[3,3],[2,2]]}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::PartitionError;

/// Which of the two partition complexes an object belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Distinct,
    Ordinary,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Distinct => "distinct",
            Kind::Ordinary => "ordinary",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "distinct" => Ok(Kind::Distinct),
            "ordinary" => Ok(Kind::Ordinary),
            other => Err(PartitionError::parse(other, "expected `distinct` or `ordinary`")),
        }
    }
}

/// A partition into strictly decreasing positive parts.
///
/// The empty partition exists only as [`DistinctPartition::EMPTY`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDistinct")]
pub struct DistinctPartition {
    parts: Vec<u32>,
}

#[derive(Deserialize)]
struct RawDistinct {
    parts: Vec<u32>,
}

impl TryFrom<RawDistinct> for DistinctPartition {
    type Error = PartitionError;

    fn try_from(raw: RawDistinct) -> Result<Self, Self::Error> {
        DistinctPartition::new(raw.parts)
    }
}

impl DistinctPartition {
    /// The unique partition of 0.
    pub const EMPTY: DistinctPartition = DistinctPartition { parts: Vec::new() };

    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] <= w[1]) {
            return Err(PartitionError::NotStrictlyDecreasing { prev: w[0], next: w[1] });
        }
        Ok(DistinctPartition { parts })
    }

    /// Build without validation. Callers guarantee the invariants.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]), "not strict: {parts:?}");
        DistinctPartition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for DistinctPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let part = parse_positive(token)?;
            if let Some(&prev) = parts.last() {
                if part >= prev {
                    return Err(PartitionError::parse(
                        token,
                        format!("distinct parts must strictly decrease after {prev}"),
                    ));
                }
            }
            parts.push(part);
        }
        Ok(DistinctPartition { parts })
    }
}

/// One run `part^mult` of equal parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct Block {
    pub part: u32,
    pub mult: u32,
}

impl Block {
    pub fn new(part: u32, mult: u32) -> Self {
        Block { part, mult }
    }
}

impl From<(u32, u32)> for Block {
    fn from((part, mult): (u32, u32)) -> Self {
        Block { part, mult }
    }
}

impl From<Block> for (u32, u32) {
    fn from(b: Block) -> Self {
        (b.part, b.mult)
    }
}

/// An ordinary partition in block form `(n_1^{m_1}, ..., n_k^{m_k})` with
/// `n_1 > ... > n_k > 0` and every `m_t >= 1`.
///
/// The derived ordering agrees with lexicographic order on the expanded
/// part sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawBlocks")]
pub struct BlockPartition {
    blocks: Vec<Block>,
}

#[derive(Deserialize)]
struct RawBlocks {
    blocks: Vec<Block>,
}

impl TryFrom<RawBlocks> for BlockPartition {
    type Error = PartitionError;

    fn try_from(raw: RawBlocks) -> Result<Self, Self::Error> {
        BlockPartition::from_blocks(raw.blocks)
    }
}

impl BlockPartition {
    pub const EMPTY: BlockPartition = BlockPartition { blocks: Vec::new() };

    /// Builds from blocks in weakly decreasing part order. Zero-multiplicity
    /// blocks are dropped and adjacent blocks with equal parts merged.
    pub fn from_blocks<I>(blocks: I) -> Result<Self, PartitionError>
    where
        I: IntoIterator,
        I::Item: Into<Block>,
    {
        let blocks: Vec<Block> = blocks.into_iter().map(Into::into).collect();
        if blocks.iter().any(|b| b.part == 0) {
            return Err(PartitionError::ZeroPart);
        }
        let live: Vec<&Block> = blocks.iter().filter(|b| b.mult > 0).collect();
        if let Some(w) = live.windows(2).find(|w| w[0].part < w[1].part) {
            return Err(PartitionError::NotWeaklyDecreasing {
                prev: w[0].part,
                next: w[1].part,
            });
        }
        let p = Self::normalized(blocks);
        if p.blocks.is_empty() {
            return Err(PartitionError::Empty);
        }
        Ok(p)
    }

    /// Builds from a weakly decreasing part sequence.
    pub fn from_parts(parts: &[u32]) -> Result<Self, PartitionError> {
        Self::from_blocks(parts.iter().map(|&p| Block::new(p, 1)))
    }

    /// Omits zero blocks and merges neighbours with equal parts. The input
    /// must already be weakly decreasing in part.
    pub(crate) fn normalized(blocks: Vec<Block>) -> Self {
        let mut out: Vec<Block> = Vec::with_capacity(blocks.len());
        for b in blocks.into_iter().filter(|b| b.mult > 0) {
            match out.last_mut() {
                Some(last) if last.part == b.part => last.mult += b.mult,
                _ => out.push(b),
            }
        }
        debug_assert!(
            out.windows(2).all(|w| w[0].part > w[1].part),
            "blocks out of order: {out:?}"
        );
        debug_assert!(out.iter().all(|b| b.part > 0));
        BlockPartition { blocks: out }
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<Block>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0].part > w[1].part));
        debug_assert!(blocks.iter().all(|b| b.part > 0 && b.mult > 0));
        BlockPartition { blocks }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of distinct part sizes, `k`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Number of parts counted with multiplicity, `ℓ`.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.mult as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.part as usize * b.mult as usize).sum()
    }

    /// The expanded, weakly decreasing part sequence.
    pub fn parts(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.part, b.mult as usize))
            .collect()
    }
}

impl fmt::Display for BlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if b.mult == 1 {
                write!(f, "{}", b.part)?;
            } else {
                write!(f, "{}^{}", b.part, b.mult)?;
            }
        }
        Ok(())
    }
}

impl FromStr for BlockPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut blocks: Vec<Block> = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (part, mult) = match token.split_once('^') {
                Some((p, m)) => (parse_positive(p.trim())?, parse_positive(m.trim())?),
                None => (parse_positive(token)?, 1),
            };
            match blocks.last_mut() {
                Some(last) if last.part == part => last.mult += mult,
                Some(last) if last.part < part => {
                    return Err(PartitionError::parse(
                        token,
                        format!("parts must not increase after {}", last.part),
                    ))
                }
                _ => blocks.push(Block::new(part, mult)),
            }
        }
        Ok(BlockPartition { blocks })
    }
}

fn parse_positive(token: &str) -> Result<u32, PartitionError> {
    if token.is_empty() {
        return Err(PartitionError::parse(token, "empty token"));
    }
    if !token.bytes().all(|c| c.is_ascii_digit()) {
        return Err(PartitionError::parse(token, "expected a positive decimal integer"));
    }
    match token.parse::<u32>() {
        Ok(0) => Err(PartitionError::parse(token, "parts must be positive")),
        Ok(v) => Ok(v),
        Err(_) => Err(PartitionError::parse(token, "integer out of range")),
    }
}

/// Either kind of partition, for parsing and JSON exchange.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AnyPartition {
    Distinct(DistinctPartition),
    Ordinary(BlockPartition),
}

impl AnyPartition {
    pub fn kind(&self) -> Kind {
        match self {
            AnyPartition::Distinct(_) => Kind::Distinct,
            AnyPartition::Ordinary(_) => Kind::Ordinary,
        }
    }
}

impl fmt::Display for AnyPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPartition::Distinct(p) => p.fmt(f),
            AnyPartition::Ordinary(p) => p.fmt(f),
        }
    }
}

pub fn parse_partition(text: &str, kind: Kind) -> Result<AnyPartition, PartitionError> {
    Ok(match kind {
        Kind::Distinct => AnyPartition::Distinct(text.parse()?),
        Kind::Ordinary => AnyPartition::Ordinary(text.parse()?),
    })
}

pub fn format_partition(p: &AnyPartition) -> String {
    p.to_string()
}

/// All partitions of one weight, grouped by length. Each slice is in
/// lexicographically descending order of the part sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis<P> {
    weight: usize,
    slices: BTreeMap<usize, Vec<P>>,
}

impl<P> GradedBasis<P> {
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Partitions of length `ell`; empty if there are none.
    pub fn slice(&self, ell: usize) -> &[P] {
        self.slices.get(&ell).map_or(&[], Vec::as_slice)
    }

    /// Lengths with at least one partition, ascending.
    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.slices.keys().copied()
    }

    pub fn max_length(&self) -> usize {
        self.slices.keys().next_back().copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.slices.values().map(Vec::len).sum()
    }

    /// `Σ_ℓ (-1)^ℓ · |slice ℓ|`.
    pub fn signed_count(&self) -> i64 {
        self.slices.iter().map(|(&ell, s)| sign(ell) * s.len() as i64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &P)> + '_ {
        self.slices.iter().flat_map(|(&ell, s)| s.iter().map(move |p| (ell, p)))
    }
}

pub(crate) fn sign(ell: usize) -> i64 {
    if ell.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_weight(n: usize) -> Result<(), PartitionError> {
    if n == 0 {
        Err(PartitionError::ZeroWeight(n))
    } else {
        Ok(())
    }
}

/// Every partition of `n` into distinct parts, grouped by length.
pub fn enumerate_distinct(n: usize) -> Result<GradedBasis<DistinctPartition>, PartitionError> {
    check_weight(n)?;
    let mut slices: BTreeMap<usize, Vec<DistinctPartition>> = BTreeMap::new();
    let mut stack = Vec::new();
    distinct_rec(n, n, &mut stack, &mut |parts| {
        slices
            .entry(parts.len())
            .or_default()
            .push(DistinctPartition::from_parts_unchecked(parts.to_vec()));
    });
    Ok(GradedBasis { weight: n, slices })
}

// Parts are chosen largest first, so output order is lexicographically
// descending.
fn distinct_rec(remaining: usize, max_part: usize, stack: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        emit(stack);
        return;
    }
    // Parts below p can sum to at most p(p-1)/2.
    for p in (1..=max_part.min(remaining)).rev() {
        if p * (p + 1) / 2 < remaining {
            break;
        }
        stack.push(p as u32);
        distinct_rec(remaining - p, p - 1, stack, emit);
        stack.pop();
    }
}

/// Every ordinary partition of `n` in block form, grouped by length.
pub fn enumerate_ordinary(n: usize) -> Result<GradedBasis<BlockPartition>, PartitionError> {
    check_weight(n)?;
    let mut slices: BTreeMap<usize, Vec<BlockPartition>> = BTreeMap::new();
    let mut stack = Vec::new();
    ordinary_rec(n, n, &mut stack, &mut |blocks| {
        let p = BlockPartition::from_blocks_unchecked(blocks.to_vec());
        slices.entry(p.len()).or_default().push(p);
    });
    Ok(GradedBasis { weight: n, slices })
}

fn ordinary_rec(remaining: usize, max_part: usize, stack: &mut Vec<Block>, emit: &mut impl FnMut(&[Block])) {
    if remaining == 0 {
        emit(stack);
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        for m in (1..=remaining / p).rev() {
            stack.push(Block::new(p as u32, m as u32));
            ordinary_rec(remaining - p * m, p - 1, stack, emit);
            stack.pop();
        }
    }
}
