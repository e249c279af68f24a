//! Coboundary and adjoint on ordinary partitions in block form.
//!
//! For `σ = (n_1^{m_1}, ..., n_k^{m_k})` the coboundary splits the leading
//! block into `(n_1 - 1)^{m_1}` and a single new part `m_1`, and files that
//! part among the remaining blocks, provided every block below the landing
//! spot has even multiplicity. The adjoint locates the last odd block `t`,
//! takes one part `n_t` from it and lays it as a column of `n_t` ones on top
//! of the leading block.
//!
//! All outputs are normalized: zero-multiplicity blocks are dropped and
//! neighbouring blocks with equal parts merged.

use crate::complex::DeltaResult;
use crate::partition::{Block, BlockPartition};

/// 0-based index of the last block with odd multiplicity, or `None` if
/// every multiplicity is even. All blocks after it are even.
pub fn odd_tail(p: &BlockPartition) -> Option<usize> {
    p.blocks().iter().rposition(|b| b.mult % 2 == 1)
}

fn all_even(blocks: &[Block]) -> bool {
    blocks.iter().all(|b| b.mult % 2 == 0)
}

pub fn delta(p: &BlockPartition) -> DeltaResult<BlockPartition> {
    let blocks = p.blocks();
    let Some(&Block { part: n1, mult: m1 }) = blocks.first() else {
        return DeltaResult::Zero;
    };
    // m_1 > n_1 - 1
    if m1 >= n1 {
        return DeltaResult::Zero;
    }
    let mut out = blocks.to_vec();
    out[0] = Block::new(n1 - 1, m1);

    if let Some(j) = (1..blocks.len()).find(|&j| blocks[j].part == m1) {
        if !all_even(&blocks[j..]) {
            return DeltaResult::Zero;
        }
        out[j].mult += 1;
    } else {
        // Unique i with n_i > m_1 > n_{i+1}, taking n_{k+1} = 0.
        let i = blocks
            .iter()
            .rposition(|b| b.part > m1)
            .expect("n_1 > m_1 holds past the first case");
        if !all_even(&blocks[i + 1..]) {
            return DeltaResult::Zero;
        }
        out.insert(i + 1, Block::new(m1, 1));
    }
    DeltaResult::Image(BlockPartition::normalized(out))
}

pub fn delta_star(p: &BlockPartition) -> DeltaResult<BlockPartition> {
    let blocks = p.blocks();
    let Some(&Block { part: n1, mult: m1 }) = blocks.first() else {
        return DeltaResult::Zero;
    };
    let mut out = Vec::with_capacity(blocks.len() + 1);
    match odd_tail(p) {
        None | Some(0) => {
            if n1 > m1 {
                return DeltaResult::Zero;
            }
            // m_1 = n_1 + 2i
            if (m1 - n1) % 2 == 0 {
                return DeltaResult::Zero;
            }
            // m_1 = n_1 + 2i + 1
            out.push(Block::new(n1 + 1, n1));
            out.push(Block::new(n1, m1 - n1 - 1));
            out.extend_from_slice(&blocks[1..]);
        }
        Some(t) => {
            let nt = blocks[t].part;
            if nt > m1 {
                return DeltaResult::Zero;
            }
            out.push(Block::new(n1 + 1, nt));
            out.push(Block::new(n1, m1 - nt));
            out.extend_from_slice(&blocks[1..t]);
            out.push(Block::new(nt, blocks[t].mult - 1));
            out.extend_from_slice(&blocks[t + 1..]);
        }
    }
    DeltaResult::Image(BlockPartition::normalized(out))
}

/// True iff `σ = (n_1^{n_1 + 2e}, n_2^{2t_2}, ..., n_k^{2t_k})` with `e >= 0`.
pub fn is_harmonic(p: &BlockPartition) -> bool {
    let blocks = p.blocks();
    let Some(first) = blocks.first() else {
        return false;
    };
    first.mult >= first.part && (first.mult - first.part) % 2 == 0 && all_even(&blocks[1..])
}
