//! The frequency lattice `Z^nu`: multi-indices, truncation boxes, norms, and
//! the pairing `n -> n.w` with the wave vector.
//!
//! Size conventions used throughout the crate: `|n|` is the l1 norm of a
//! lattice point and `|w|` the sup norm of the wave vector, so that
//! `|n.w| <= |n| |w|` holds literally.

use crate::{Error, Result};

/// A point of the integer lattice `Z^nu`.
///
/// Ordering is lexicographic (derived from `Vec<i64>`), which fixes the
/// deterministic iteration order of every coefficient map in the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<i64>);

impl MultiIndex {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "multi-index needs dimension >= 1");
        MultiIndex(coords)
    }

    pub fn zero(nu: usize) -> Self {
        MultiIndex(vec![0; nu])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// l1 size `|n| = sum |n_i|`.
    pub fn l1_norm(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn negated(&self) -> Self {
        MultiIndex(self.0.iter().map(|&c| -c).collect())
    }

    pub fn add(&self, other: &MultiIndex) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        MultiIndex(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &MultiIndex) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        MultiIndex(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl std::fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite sup-norm truncation region: all `n` with `|n_i| <= radius_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Box {
    radius: Vec<u32>,
}

impl Box {
    pub fn new(radius: Vec<u32>) -> Self {
        assert!(!radius.is_empty(), "box needs dimension >= 1");
        Box { radius }
    }

    /// Cube with the same radius in every dimension.
    pub fn cube(nu: usize, radius: u32) -> Self {
        Box::new(vec![radius; nu])
    }

    pub fn dim(&self) -> usize {
        self.radius.len()
    }

    pub fn radius(&self) -> &[u32] {
        &self.radius
    }

    pub fn contains(&self, n: &MultiIndex) -> bool {
        n.dim() == self.dim()
            && n.coords()
                .iter()
                .zip(self.radius.iter())
                .all(|(&c, &r)| c.unsigned_abs() <= u64::from(r))
    }

    /// `prod_i (2 radius_i + 1)`.
    pub fn cardinality(&self) -> u128 {
        self.radius
            .iter()
            .map(|&r| 2 * u128::from(r) + 1)
            .product()
    }

    /// Box with every radius scaled by `factor` (used for the intermediate
    /// stages of repeated convolution).
    pub fn scaled(&self, factor: u32) -> Self {
        Box::new(self.radius.iter().map(|&r| r * factor).collect())
    }

    /// Per-dimension sum of radii (the support of a convolution of two boxes).
    pub fn conv_support(&self, other: &Box) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Box::new(
            self.radius
                .iter()
                .zip(other.radius.iter())
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }
}

/// Lexicographically ordered, duplicate-free enumeration of a box.
/// Contains `0` and is closed under negation.
pub fn enumerate_box(bx: &Box) -> Vec<MultiIndex> {
    let nu = bx.dim();
    let mut out = Vec::with_capacity(bx.cardinality().min(1 << 24) as usize);
    let mut coords = vec![0i64; nu];
    fn rec(bx: &Box, d: usize, coords: &mut Vec<i64>, out: &mut Vec<MultiIndex>) {
        if d == bx.dim() {
            out.push(MultiIndex::new(coords.clone()));
            return;
        }
        let r = i64::from(bx.radius()[d]);
        for c in -r..=r {
            coords[d] = c;
            rec(bx, d + 1, coords, out);
        }
    }
    rec(bx, 0, &mut coords, &mut out);
    out
}

/// The spatial wave vector `w`, optionally carrying an exact rational form
/// for resonance checks.
#[derive(Debug, Clone)]
pub struct WaveVector {
    omega: Vec<f64>,
    rational: Option<Vec<(i64, i64)>>,
}

impl WaveVector {
    pub fn new(omega: Vec<f64>) -> Result<Self> {
        if omega.is_empty() {
            return Err(Error::InvalidParameter("wave vector needs nu >= 1".into()));
        }
        if omega.iter().all(|&w| w == 0.0) {
            return Err(Error::InvalidParameter("wave vector must be nonzero".into()));
        }
        Ok(WaveVector {
            omega,
            rational: None,
        })
    }

    /// Attach an exact rational form `omega_i = num_i / den_i`.
    pub fn with_rational(mut self, rational: Vec<(i64, i64)>) -> Result<Self> {
        if rational.len() != self.omega.len() {
            return Err(Error::DimensionMismatch {
                expected: self.omega.len(),
                got: rational.len(),
            });
        }
        if rational.iter().any(|&(_, d)| d == 0) {
            return Err(Error::InvalidParameter(
                "rational frequency with zero denominator".into(),
            ));
        }
        self.rational = Some(rational);
        Ok(self)
    }

    /// Exact rational frequencies `num_i / den_i`, built from integers.
    pub fn rational(rational: Vec<(i64, i64)>) -> Result<Self> {
        let omega = rational
            .iter()
            .map(|&(n, d)| n as f64 / d as f64)
            .collect();
        WaveVector::new(omega)?.with_rational(rational)
    }

    pub fn dim(&self) -> usize {
        self.omega.len()
    }

    pub fn components(&self) -> &[f64] {
        &self.omega
    }

    pub fn rational_form(&self) -> Option<&[(i64, i64)]> {
        self.rational.as_deref()
    }

    /// Sup-norm size `|w| = max |w_i|`.
    pub fn sup_norm(&self) -> f64 {
        self.omega.iter().fold(0.0, |m, &w| m.max(w.abs()))
    }
}

/// The pairing `n.w = sum n_i w_i`, evaluated as a plain floating dot product.
pub fn frequency(n: &MultiIndex, omega: &WaveVector) -> Result<f64> {
    if n.dim() != omega.dim() {
        return Err(Error::DimensionMismatch {
            expected: omega.dim(),
            got: n.dim(),
        });
    }
    Ok(n.coords()
        .iter()
        .zip(omega.components().iter())
        .map(|(&c, &w)| c as f64 * w)
        .sum())
}

/// All nonzero `n` in `bx` with exact `n.w = 0`, decided in integer
/// arithmetic on the rational form. An empty result certifies non-resonance
/// of the truncated lattice.
pub fn resonance_scan(omega: &WaveVector, bx: &Box) -> Result<Vec<MultiIndex>> {
    let rat = omega.rational_form().ok_or(Error::MissingRationalForm)?;
    if bx.dim() != omega.dim() {
        return Err(Error::DimensionMismatch {
            expected: omega.dim(),
            got: bx.dim(),
        });
    }
    // n.w = sum n_i p_i/q_i = 0  <=>  sum n_i p_i prod_{j!=i} q_j = 0.
    let common: i128 = rat.iter().map(|&(_, q)| i128::from(q)).product();
    let weights: Vec<i128> = rat
        .iter()
        .map(|&(p, q)| i128::from(p) * (common / i128::from(q)))
        .collect();
    Ok(enumerate_box(bx)
        .into_iter()
        .filter(|n| !n.is_zero())
        .filter(|n| {
            n.coords()
                .iter()
                .zip(weights.iter())
                .map(|(&c, &w)| i128::from(c) * w)
                .sum::<i128>()
                == 0
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mi(coords: &[i64]) -> MultiIndex {
        MultiIndex::new(coords.to_vec())
    }

    #[test]
    fn enumerate_1d_radius_1() {
        let pts = enumerate_box(&Box::cube(1, 1));
        assert_eq!(pts, vec![mi(&[-1]), mi(&[0]), mi(&[1])]);
    }

    #[test]
    fn enumerate_degenerate_axis() {
        let pts = enumerate_box(&Box::new(vec![1, 0]));
        assert_eq!(pts, vec![mi(&[-1, 0]), mi(&[0, 0]), mi(&[1, 0])]);
    }

    #[test]
    fn enumerate_counts_and_symmetry() {
        for bx in [Box::cube(1, 2), Box::new(vec![2, 1]), Box::new(vec![1, 1, 1])] {
            let pts = enumerate_box(&bx);
            assert_eq!(pts.len() as u128, bx.cardinality());
            let mut sorted = pts.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, pts, "sorted and duplicate-free");
            assert!(pts.contains(&MultiIndex::zero(bx.dim())));
            for p in &pts {
                assert!(pts.contains(&p.negated()), "closed under negation");
            }
        }
        assert_eq!(enumerate_box(&Box::cube(1, 2)).len(), 5);
    }

    #[test]
    fn l1_norm_values() {
        assert_eq!(mi(&[0, 0, 0]).l1_norm(), 0);
        assert_eq!(mi(&[-3, 2]).l1_norm(), 5);
        assert_eq!(mi(&[7]).l1_norm(), 7);
    }

    #[test]
    fn frequency_values() {
        let w = WaveVector::new(vec![1.5]).unwrap();
        assert_eq!(frequency(&mi(&[0]), &w).unwrap(), 0.0);
        assert_eq!(frequency(&mi(&[2]), &w).unwrap(), 3.0);

        let w2 = WaveVector::new(vec![1.0, std::f64::consts::SQRT_2]).unwrap();
        let f = frequency(&mi(&[1, -1]), &w2).unwrap();
        assert!((f - (1.0 - std::f64::consts::SQRT_2)).abs() < 1e-15);

        assert!(matches!(
            frequency(&mi(&[1]), &w2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn resonance_requires_rational_form() {
        let w = WaveVector::new(vec![1.0, std::f64::consts::SQRT_2]).unwrap();
        assert!(matches!(
            resonance_scan(&w, &Box::cube(2, 1)),
            Err(Error::MissingRationalForm)
        ));
    }

    #[test]
    fn resonance_scan_finds_exact_zeros() {
        let w = WaveVector::rational(vec![(1, 1), (1, 2)]).unwrap();
        let hits = resonance_scan(&w, &Box::cube(2, 2)).unwrap();
        assert_eq!(hits, vec![mi(&[-1, 2]), mi(&[1, -2])]);
    }

    #[test]
    fn single_frequency_never_resonates() {
        let w = WaveVector::rational(vec![(1, 1)]).unwrap();
        assert!(resonance_scan(&w, &Box::cube(1, 5)).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn l1_symmetric_and_triangle(a in proptest::collection::vec(-50i64..50, 1..4),
                                     b in proptest::collection::vec(-50i64..50, 1..4)) {
            let n = a.len().min(b.len());
            let m = mi(&a[..n]);
            let k = mi(&b[..n]);
            prop_assert_eq!(m.l1_norm(), m.negated().l1_norm());
            prop_assert!(m.add(&k).l1_norm() <= m.l1_norm() + k.l1_norm());
        }

        #[test]
        fn frequency_bounded_by_norms(coords in proptest::collection::vec(-20i64..20, 2),
                                      w1 in -3.0f64..3.0, w2 in -3.0f64..3.0) {
            prop_assume!(w1 != 0.0 || w2 != 0.0);
            let w = WaveVector::new(vec![w1, w2]).unwrap();
            let n = mi(&coords);
            let f = frequency(&n, &w).unwrap();
            prop_assert!(f.abs() <= n.l1_norm() as f64 * w.sup_norm() + 1e-12);
        }
    }
}
