//! Linear algebra over the two partition complexes.
//!
//! Each coboundary is a partial bijection between adjacent lengths, so the
//! basis splits into matched pairs `(σ, δσ)` and harmonic singletons killed
//! by both maps. [`build_report`] reads cohomology off that matching.
//! [`laplacian_oracle`] computes the same dimensions the long way, from the
//! explicit operator matrices and the kernel of `δδ* + δ*δ` over exact
//! rationals, and so serves as an independent check.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::{DeltaResult, PartitionComplex};
use crate::error::{ConsistencyError, PartitionError};
use crate::partition::{sign, Kind};
use crate::qseries::TruncatedSeries;

/// Matching decomposition of one weight of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeReport<P> {
    pub weight: usize,
    pub kind: Kind,
    /// Basis size per length.
    pub counts: BTreeMap<usize, usize>,
    /// Harmonic elements per length, canonical order; only nonempty lengths.
    pub harmonic: BTreeMap<usize, Vec<P>>,
    /// `(σ, δσ)` for every σ with nonzero coboundary, ordered by the length
    /// of σ and then canonically.
    pub pairs: Vec<(P, P)>,
    /// `dim H^ℓ` for every length that has a basis.
    pub cohomology: BTreeMap<usize, usize>,
    pub euler_characteristic: i64,
}

impl<P> HodgeReport<P> {
    pub fn harmonic_count(&self) -> usize {
        self.harmonic.values().map(Vec::len).sum()
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// `Σ_ℓ (-1)^ℓ dim H^ℓ`.
    pub fn harmonic_signed_count(&self) -> i64 {
        self.cohomology.iter().map(|(&ell, &d)| sign(ell) * d as i64).sum()
    }

    pub fn harmonic_elements(&self) -> impl Iterator<Item = &P> {
        self.harmonic.values().flatten()
    }
}

pub fn build_report<C: PartitionComplex>(n: usize) -> Result<HodgeReport<C::Element>, PartitionError> {
    let basis = C::basis(n)?;
    let mut counts = BTreeMap::new();
    let mut harmonic: BTreeMap<usize, Vec<C::Element>> = BTreeMap::new();
    let mut pairs = Vec::new();
    let mut cohomology = BTreeMap::new();
    for ell in basis.lengths() {
        let slice = basis.slice(ell);
        counts.insert(ell, slice.len());
        let mut h = Vec::new();
        for p in slice {
            match C::delta(p) {
                DeltaResult::Image(q) => pairs.push((p.clone(), q)),
                DeltaResult::Zero => {
                    if C::delta_star(p).is_zero() {
                        h.push(p.clone());
                    }
                }
            }
        }
        cohomology.insert(ell, h.len());
        if !h.is_empty() {
            harmonic.insert(ell, h);
        }
    }
    Ok(HodgeReport {
        weight: n,
        kind: C::KIND,
        euler_characteristic: basis.signed_count(),
        counts,
        harmonic,
        pairs,
        cohomology,
    })
}

/// Structural checks on a report: the pairs and harmonic elements tile the
/// basis, pairs join adjacent lengths, every pair is undone by the adjoint,
/// harmonic elements pass the closed-form test, and both Euler
/// characteristics agree.
pub fn check_report<C: PartitionComplex>(report: &HodgeReport<C::Element>) -> Result<(), String> {
    let basis = C::basis(report.weight).map_err(|e| e.to_string())?;
    let mut seen: BTreeSet<&C::Element> = BTreeSet::new();
    let mut claim = |p: &'static str, e| {
        if seen.insert(e) {
            Ok(())
        } else {
            Err(format!("{p} {e} already covered"))
        }
    };
    for (s, t) in &report.pairs {
        if C::length(t) != C::length(s) + 1 {
            return Err(format!("pair {s} -> {t} does not raise length by one"));
        }
        if C::delta_star(t).as_image() != Some(s) {
            return Err(format!("adjoint does not send {t} back to {s}"));
        }
        claim("source", s)?;
        claim("target", t)?;
    }
    for (&ell, hs) in &report.harmonic {
        for h in hs {
            if C::length(h) != ell {
                return Err(format!("harmonic {h} filed under length {ell}"));
            }
            if !C::is_harmonic(h) {
                return Err(format!("{h} fails the closed-form harmonic test"));
            }
            claim("harmonic", h)?;
        }
    }
    if seen.len() != basis.total() {
        return Err(format!("covered {} of {} basis elements", seen.len(), basis.total()));
    }
    if let Some((_, p)) = basis.iter().find(|(_, p)| !seen.contains(p)) {
        return Err(format!("{p} is neither paired nor harmonic"));
    }
    if report.total() != basis.total() {
        return Err("counts disagree with the basis".into());
    }
    if report.euler_characteristic != report.harmonic_signed_count() {
        return Err(format!(
            "Euler characteristic {} differs from harmonic signed count {}",
            report.euler_characteristic,
            report.harmonic_signed_count()
        ));
    }
    Ok(())
}

impl<P: fmt::Display> Serialize for HodgeReport<P> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let harmonic: BTreeMap<usize, Vec<String>> = self
            .harmonic
            .iter()
            .map(|(&ell, v)| (ell, v.iter().map(ToString::to_string).collect()))
            .collect();
        let pairs: Vec<[String; 2]> = self.pairs.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect();
        let mut st = serializer.serialize_struct("HodgeReport", 7)?;
        st.serialize_field("n", &self.weight)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("chi", &self.euler_characteristic)?;
        st.serialize_field("harmonic", &harmonic)?;
        st.serialize_field("pairs", &pairs)?;
        st.serialize_field("counts", &self.counts)?;
        st.serialize_field("cohomology", &self.cohomology)?;
        st.end()
    }
}

impl<P: fmt::Display> fmt::Display for HodgeReport<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {} ({})", self.weight, self.kind)?;
        writeln!(f, "chi = {}", self.euler_characteristic)?;
        for (&ell, &count) in &self.counts {
            let dim = self.cohomology.get(&ell).copied().unwrap_or(0);
            write!(f, "length {ell}: {count} basis, dim H = {dim}")?;
            if let Some(hs) = self.harmonic.get(&ell) {
                let names: Vec<String> = hs.iter().map(ToString::to_string).collect();
                write!(f, "  harmonic: {}", names.join(" "))?;
            }
            writeln!(f)?;
        }
        writeln!(f, "pairs: {}", self.pairs.len())?;
        for (s, t) in &self.pairs {
            writeln!(f, "  {s} -> {t}")?;
        }
        Ok(())
    }
}

/// A 0/1 matrix with at most one nonzero per column: the matrix of a
/// partial map from one basis slice to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOperatorMatrix {
    rows: usize,
    /// For each column, the row of its nonzero entry.
    cols: Vec<Option<usize>>,
}

impl SparseOperatorMatrix {
    pub fn from_operator<P, F>(domain: &[P], codomain: &[P], op: F) -> Result<Self, String>
    where
        P: Eq + std::hash::Hash + fmt::Display,
        F: Fn(&P) -> DeltaResult<P>,
    {
        let index: HashMap<&P, usize> = codomain.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let cols = domain
            .iter()
            .map(|p| match op(p) {
                DeltaResult::Zero => Ok(None),
                DeltaResult::Image(q) => index
                    .get(&q)
                    .map(|&r| Some(r))
                    .ok_or_else(|| format!("image {q} of {p} is not in the codomain basis")),
            })
            .collect::<Result<_, _>>()?;
        Ok(SparseOperatorMatrix {
            rows: codomain.len(),
            cols,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Nonzero positions as `(row, col)`.
    pub fn entries(&self) -> BTreeSet<(usize, usize)> {
        self.cols
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (r, c)))
            .collect()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.rows, self.ncols());
        for (r, c) in self.entries() {
            m.data[r][c] = 1;
        }
        m
    }
}

/// Small dense integer matrix for the oracle's products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<i64>>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![vec![0; cols]; rows],
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r][c]
    }

    pub fn transpose(&self) -> Self {
        let mut t = DenseMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                t.data[c][r] = v;
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Option<Self> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (k, &a) in row.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in other.data[k].iter().enumerate() {
                    out.data[i][j] += a * b;
                }
            }
        }
        Some(out)
    }

    pub fn add(&self, other: &Self) -> Option<Self> {
        if self.shape() != other.shape() {
            return None;
        }
        let mut out = self.clone();
        for (ro, rb) in out.data.iter_mut().zip(&other.data) {
            for (a, b) in ro.iter_mut().zip(rb) {
                *a += b;
            }
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(|&v| v == 0)
    }

    /// Rank over the rationals by fraction-exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> = self
            .data
            .iter()
            .map(|row| row.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = BigRational::one() / &m[rank][col];
            for v in m[rank].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == rank || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &factor * p;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Result of the Laplacian oracle for one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianReport {
    pub weight: usize,
    /// `dim ker(δδ* + δ*δ)` for every length `1..=ℓ_max`.
    pub kernel_dims: BTreeMap<usize, usize>,
}

/// Builds the matrices of `δ` and `δ*` on every slice of weight `n`,
/// checks `δ* = δᵀ`, `δ² = 0`, `(δ*)² = 0`, that each Laplacian is a 0/1
/// diagonal idempotent, and returns the kernel dimension of each Laplacian.
pub fn laplacian_oracle<C: PartitionComplex>(n: usize) -> Result<LaplacianReport, ConsistencyError> {
    let basis = C::basis(n)?;
    let top = basis.max_length();
    // Lengths 0 and top+1 have empty slices for n >= 1.
    let slice = |ell: usize| basis.slice(ell);
    let shape_err = |length: usize, detail: String| ConsistencyError::Shape { length, detail };

    // delta[ℓ]: slice ℓ → slice ℓ+1, star[ℓ]: slice ℓ → slice ℓ-1, ℓ in 0..=top+1
    let mut delta = Vec::with_capacity(top + 2);
    let mut star = Vec::with_capacity(top + 2);
    for ell in 0..=top + 1 {
        let d =
            SparseOperatorMatrix::from_operator(slice(ell), slice(ell + 1), C::delta).map_err(|e| shape_err(ell, e))?;
        let s = if ell == 0 {
            SparseOperatorMatrix::from_operator(slice(0), &[], C::delta_star)
        } else {
            SparseOperatorMatrix::from_operator(slice(ell), slice(ell - 1), C::delta_star)
        }
        .map_err(|e| shape_err(ell, e))?;
        delta.push(d.to_dense());
        star.push(s.to_dense());
    }

    for ell in 0..=top {
        if star[ell + 1] != delta[ell].transpose() {
            return Err(ConsistencyError::NotTranspose { length: ell });
        }
        let dd = delta[ell + 1]
            .matmul(&delta[ell])
            .ok_or_else(|| shape_err(ell, "δ·δ".into()))?;
        if !dd.is_zero() {
            return Err(ConsistencyError::DeltaSquared { length: ell });
        }
    }
    for ell in 1..=top + 1 {
        let ss = star[ell - 1]
            .matmul(&star[ell])
            .ok_or_else(|| shape_err(ell, "δ*·δ*".into()))?;
        if !ss.is_zero() {
            return Err(ConsistencyError::DeltaStarSquared { length: ell });
        }
    }

    let mut kernel_dims = BTreeMap::new();
    for ell in 1..=top {
        let down_up = delta[ell - 1]
            .matmul(&star[ell])
            .ok_or_else(|| shape_err(ell, "δδ*".into()))?;
        let up_down = star[ell + 1]
            .matmul(&delta[ell])
            .ok_or_else(|| shape_err(ell, "δ*δ".into()))?;
        let lap = down_up
            .add(&up_down)
            .ok_or_else(|| shape_err(ell, "Laplacian sum".into()))?;
        let size = slice(ell).len();
        if lap.shape() != (size, size) {
            return Err(shape_err(
                ell,
                format!("Laplacian is {:?}, slice has {size}", lap.shape()),
            ));
        }
        let diagonal_01 = (0..size).all(|r| {
            (0..size).all(|c| {
                let v = lap.get(r, c);
                if r == c {
                    v == 0 || v == 1
                } else {
                    v == 0
                }
            })
        });
        if !diagonal_01 || lap.matmul(&lap).as_ref() != Some(&lap) {
            return Err(ConsistencyError::NotProjection { length: ell });
        }
        kernel_dims.insert(ell, size - lap.rank());
    }
    Ok(LaplacianReport { weight: n, kernel_dims })
}

/// `1 + Σ_{n=1}^{N} (Σ_ℓ (-1)^ℓ |basis(n, ℓ)|) q^n`.
pub fn euler_characteristic_series<C: PartitionComplex>(max_n: usize) -> TruncatedSeries {
    let mut coeffs = vec![1i64];
    for n in 1..=max_n {
        coeffs.push(C::basis(n).expect("n >= 1").signed_count());
    }
    TruncatedSeries::from_coeffs(max_n, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{Distinct, Ordinary};

    fn names<P: fmt::Display>(v: &[P]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn ordinary_four() {
        let r = build_report::<Ordinary>(4).unwrap();
        assert_eq!(r.euler_characteristic, 1);
        assert_eq!(r.harmonic.len(), 1);
        assert_eq!(names(&r.harmonic[&2]), ["2^2"]);
        let pairs: Vec<(String, String)> = r.pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(
            pairs,
            [
                ("4".to_string(), "3,1".to_string()),
                ("2,1^2".to_string(), "1^4".to_string())
            ]
        );
        check_report::<Ordinary>(&r).unwrap();
    }

    #[test]
    fn ordinary_two_has_no_harmonics() {
        let r = build_report::<Ordinary>(2).unwrap();
        assert_eq!(r.euler_characteristic, 0);
        assert!(r.harmonic.is_empty());
        check_report::<Ordinary>(&r).unwrap();
    }

    #[test]
    fn distinct_five_and_three() {
        let r = build_report::<Distinct>(5).unwrap();
        assert_eq!(r.euler_characteristic, 1);
        assert_eq!(names(&r.harmonic[&2]), ["3,2"]);
        let r = build_report::<Distinct>(3).unwrap();
        assert_eq!(r.euler_characteristic, 0);
        assert!(r.harmonic.is_empty());
        assert_eq!(r.pairs.len(), 1);
    }

    #[test]
    fn report_json() {
        let r = build_report::<Ordinary>(4).unwrap();
        let js = serde_json::to_value(&r).unwrap();
        let expect = serde_json::json!({
            "n": 4,
            "kind": "ordinary",
            "chi": 1,
            "harmonic": {"2": ["2^2"]},
            "pairs": [["4", "3,1"], ["2,1^2", "1^4"]],
            "counts": {"1": 1, "2": 2, "3": 1, "4": 1},
            "cohomology": {"1": 0, "2": 1, "3": 0, "4": 0}
        });
        assert_eq!(js, expect);
    }

    #[test]
    fn check_report_catches_tampering() {
        let mut r = build_report::<Ordinary>(6).unwrap();
        r.pairs.pop();
        assert!(check_report::<Ordinary>(&r).is_err());
        let mut r = build_report::<Ordinary>(6).unwrap();
        r.harmonic.clear();
        assert!(check_report::<Ordinary>(&r).is_err());
    }

    #[test]
    fn oracle_small() {
        let o = laplacian_oracle::<Ordinary>(4).unwrap();
        assert_eq!(o.kernel_dims.values().copied().collect::<Vec<_>>(), [0, 1, 0, 0]);
        assert_eq!(laplacian_oracle::<Ordinary>(1).unwrap().kernel_dims[&1], 1);
        assert_eq!(laplacian_oracle::<Distinct>(1).unwrap().kernel_dims[&1], 1);
    }

    #[test]
    fn rank_of_known_matrices() {
        let mut m = DenseMatrix::zeros(3, 3);
        m.data = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(m.rank(), 2);
        m.data = vec![vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]];
        assert_eq!(m.rank(), 3);
        assert_eq!(DenseMatrix::zeros(2, 4).rank(), 0);
    }

    #[test]
    fn sparse_matrix_rejects_foreign_images() {
        let dom: Vec<crate::partition::BlockPartition> = vec!["4".parse().unwrap()];
        let err = SparseOperatorMatrix::from_operator(&dom, &[], crate::ordinary::delta).unwrap_err();
        assert!(err.contains("3,1"));
    }

    #[test]
    fn chi_series_small() {
        let d = euler_characteristic_series::<Distinct>(7);
        let want = TruncatedSeries::from_coeffs(7, [1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(d, want);
        let o = euler_characteristic_series::<Ordinary>(4);
        assert_eq!(o, TruncatedSeries::from_coeffs(4, [1, -1, 0, -1, 1]));
        assert_eq!(
            euler_characteristic_series::<Ordinary>(1),
            TruncatedSeries::from_coeffs(1, [1, -1])
        );
    }
}
