//! Shared workloads for the benchmarks.

use harmopart::{PartitionComplex, TruncatedSeries};

/// Enumerates weight `n` and splits it into harmonic and paired counts.
pub fn classify<C: PartitionComplex>(n: usize) -> (usize, usize) {
    let basis = C::basis(n).expect("positive weight");
    let harmonic = basis.iter().filter(|(_, p)| C::is_harmonic(p)).count();
    (harmonic, basis.total() - harmonic)
}

/// Multiplies out `∏_{m=1}^{order} (1 - q^m)` by plain Cauchy products.
pub fn naive_euler_product(order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for m in 1..=order {
        let mut factor = TruncatedSeries::one(order);
        factor.set_coeff(m, -1);
        acc = acc.checked_mul(&factor).expect("same order");
    }
    acc
}
