//! Coboundary and adjoint on partitions into distinct parts.
//!
//! Write `σ = (n_1, ..., n_ℓ)` and let `m = m(σ)` be the length of the
//! initial run `n_1, n_1 - 1, n_1 - 2, ...`. The coboundary peels one off
//! each of the first `m` parts and appends the new part `m`; the adjoint
//! removes the last part `n_ℓ` and spreads it as `+1` over the first `n_ℓ`
//! parts. Each map is a partial bijection and one undoes the other.

use crate::complex::DeltaResult;
use crate::error::PartitionError;
use crate::partition::DistinctPartition;

/// Length of the maximal initial run of consecutive descending parts.
pub fn run_stat(p: &DistinctPartition) -> Result<usize, PartitionError> {
    let parts = p.parts();
    if parts.is_empty() {
        return Err(PartitionError::RunOfEmpty);
    }
    Ok(1 + parts.windows(2).take_while(|w| w[1] + 1 == w[0]).count())
}

pub fn delta(p: &DistinctPartition) -> DeltaResult<DistinctPartition> {
    let Ok(m) = run_stat(p) else {
        return DeltaResult::Zero;
    };
    let parts = p.parts();
    let ell = parts.len();
    let last = parts[ell - 1] as usize;
    let vanishes = if m < ell { m >= last } else { m + 1 >= last };
    if vanishes {
        return DeltaResult::Zero;
    }
    let mut out = Vec::with_capacity(ell + 1);
    out.extend(parts[..m].iter().map(|&x| x - 1));
    out.extend_from_slice(&parts[m..]);
    out.push(m as u32);
    DeltaResult::Image(DistinctPartition::from_parts_unchecked(out))
}

pub fn delta_star(p: &DistinctPartition) -> DeltaResult<DistinctPartition> {
    let Ok(m) = run_stat(p) else {
        return DeltaResult::Zero;
    };
    let parts = p.parts();
    let ell = parts.len();
    let last = parts[ell - 1] as usize;
    let vanishes = if m < ell { m < last } else { m <= last };
    if vanishes {
        return DeltaResult::Zero;
    }
    // last <= m and last < ell here, so the incremented prefix fits.
    let mut out = Vec::with_capacity(ell - 1);
    out.extend(parts[..last].iter().map(|&x| x + 1));
    out.extend_from_slice(&parts[last..ell - 1]);
    DeltaResult::Image(DistinctPartition::from_parts_unchecked(out))
}

/// True iff `σ` is a single consecutive run whose smallest part is `ℓ` or
/// `ℓ + 1`, i.e. `(2l-1, ..., l)` or `(2l, ..., l+1)`.
pub fn is_harmonic(p: &DistinctPartition) -> bool {
    let Ok(m) = run_stat(p) else {
        return false;
    };
    let ell = p.len();
    let last = p.parts()[ell - 1] as usize;
    m == ell && (last == ell || last == ell + 1)
}

/// The harmonic distinct partition of `n`, if one exists. These sit exactly
/// at the generalized pentagonal numbers `l(3l∓1)/2`.
pub fn harmonic_of_weight(n: usize) -> Option<DistinctPartition> {
    (1..)
        .map(|l: usize| (l, l * (3 * l - 1) / 2))
        .take_while(|&(_, w)| w <= n)
        .find_map(|(l, w)| {
            if w == n {
                Some(((l..2 * l).rev()).collect::<Vec<_>>())
            } else if w + l == n {
                Some(((l + 1..=2 * l).rev()).collect::<Vec<_>>())
            } else {
                None
            }
        })
        .map(|parts| DistinctPartition::from_parts_unchecked(parts.into_iter().map(|x| x as u32).collect()))
}
