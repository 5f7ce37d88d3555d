//! The lattice of non-decreasing membership tuples in the unit cube.
//!
//! A [`Simplex`] of dimension `n` is a tuple `x_1 <= x_2 <= ... <= x_n` with
//! every entry in `[0, 1]`. The set of all such tuples is a complete lattice
//! under the componentwise order, its geometric volume is `1/n!`, and it is
//! in bijection with the weighting vectors of length `n + 1` via consecutive
//! differences ([`Simplex::to_weights`]) and cumulative sums
//! ([`Simplex::from_weights`]).

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;

/// Validation tolerance applied when values are ingested.
///
/// Entries may stray up to this far outside their constraints and are then
/// repaired onto them; comparisons after construction are exact.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A validated non-decreasing tuple in `[0, 1]^n`, `n >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Simplex {
    coords: Vec<f64>,
}

impl Simplex {
    /// Validates `coords` with [`DEFAULT_TOLERANCE`].
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(coords, DEFAULT_TOLERANCE)
    }

    /// Validates `coords` within `eps`: entries may lie up to `eps` outside
    /// `[0, 1]` and adjacent pairs may invert by up to `eps`. Accepted entries
    /// are clamped into `[0, 1]` and near-ties reordered, so the stored tuple
    /// satisfies the invariants exactly; already-valid input is stored
    /// verbatim.
    pub fn with_tolerance(mut coords: Vec<f64>, eps: f64) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Empty);
        }
        for &c in &coords {
            if !c.is_finite() || c < -eps || c > 1.0 + eps {
                return Err(Error::OutOfRange {
                    name: "coords",
                    value: c,
                });
            }
        }
        for i in 0..coords.len() - 1 {
            if coords[i] > coords[i + 1] + eps {
                return Err(Error::NotMonotone {
                    name: "coords",
                    index: i,
                    left: coords[i],
                    right: coords[i + 1],
                });
            }
        }
        for c in &mut coords {
            let v = c.clamp(0.0, 1.0);
            // fold -0.0 into +0.0 so equality checks stay bitwise
            *c = if v == 0.0 { 0.0 } else { v };
        }
        coords.sort_by(f64::total_cmp);
        Ok(Self { coords })
    }

    /// Wraps coordinates that are known to satisfy the invariants already.
    pub(crate) fn from_valid(coords: Vec<f64>) -> Self {
        debug_assert!(!coords.is_empty());
        debug_assert!(coords.iter().all(|c| (0.0..=1.0).contains(c)));
        debug_assert!(coords.windows(2).all(|w| w[0] <= w[1]));
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    /// The `i`-th coordinate, `1 <= i <= n` (the usual `x_i` convention).
    pub fn projection(&self, i: usize) -> Result<f64> {
        if i == 0 || i > self.dim() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.dim(),
            });
        }
        Ok(self.coords[i - 1])
    }

    /// Strictly increasing and contained in `[0, 1)`.
    pub fn is_strict(&self) -> bool {
        self.is_strictly_increasing() && *self.coords.last().expect("non-empty") < 1.0
    }

    /// Strictly increasing, with no constraint on the endpoints.
    pub fn is_strictly_increasing(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] < w[1])
    }

    /// Lies in the relative interior of the polytope: strictly increasing
    /// with `0 < x_1` and `x_n < 1`. Equivalent to every barycentric
    /// coordinate being strictly positive.
    pub fn is_interior(&self) -> bool {
        self.is_strictly_increasing() && self.coords[0] > 0.0 && *self.coords.last().expect("non-empty") < 1.0
    }

    /// Componentwise order; exact comparisons.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a <= b))
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::from_valid(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.min(*b))
                .collect(),
        ))
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::from_valid(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.max(*b))
                .collect(),
        ))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(())
    }

    /// The greatest element `(1, ..., 1)`.
    pub fn top(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionTooSmall { dim: 0, min: 1 });
        }
        Ok(Self::from_valid(vec![1.0; n]))
    }

    /// The least element `(0, ..., 0)`.
    pub fn bottom(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionTooSmall { dim: 0, min: 1 });
        }
        Ok(Self::from_valid(vec![0.0; n]))
    }

    /// The `n + 1` vertices `v_0, ..., v_n`; `v_k` has ones in its last `k`
    /// coordinates. The polytope is their convex hull.
    pub fn vertices(n: usize) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(Error::DimensionTooSmall { dim: 0, min: 1 });
        }
        Ok((0..=n)
            .map(|k| {
                let mut c = vec![0.0; n];
                for slot in c.iter_mut().skip(n - k) {
                    *slot = 1.0;
                }
                Self::from_valid(c)
            })
            .collect())
    }

    /// Consecutive differences with the conventions `x_0 = 0`, `x_{n+1} = 1`:
    /// a weighting vector of length `n + 1` summing to one.
    pub fn to_weights(&self) -> WeightVector {
        let n = self.dim();
        let mut w = Vec::with_capacity(n + 1);
        w.push(self.coords[0]);
        for i in 1..n {
            w.push(self.coords[i] - self.coords[i - 1]);
        }
        w.push(1.0 - self.coords[n - 1]);
        WeightVector::from_valid(w)
    }

    /// Cumulative sums of the first `m - 1` weights: the inverse of
    /// [`Simplex::to_weights`].
    pub fn from_weights(w: &WeightVector) -> Self {
        let m = w.len();
        let mut coords = Vec::with_capacity(m - 1);
        let mut acc = 0.0f64;
        for &wi in &w.weights()[..m - 1] {
            acc += wi;
            coords.push(acc.clamp(0.0, 1.0));
        }
        Self::from_valid(coords)
    }

    /// Barycentric coordinates `lambda_0, ..., lambda_n` with respect to
    /// [`Simplex::vertices`]: the reversed weight vector. They are
    /// non-negative, sum to one, and reconstruct the point as
    /// `sum_k lambda_k v_k`.
    pub fn barycentric(&self) -> Vec<f64> {
        let mut w = self.to_weights().into_weights();
        w.reverse();
        w
    }

    /// A uniform sample: `n` independent uniforms, sorted.
    pub fn sample(n: usize, rng: &mut impl Rng) -> Self {
        assert!(n >= 1, "dimension must be positive");
        let mut c: Vec<f64> = (0..n).map(|_| rng.random()).collect();
        c.sort_by(f64::total_cmp);
        Self::from_valid(c)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A validated weighting vector: length `m >= 2`, entries non-negative,
/// summing to one within the construction tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
}

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(weights, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(mut weights: Vec<f64>, eps: f64) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::DimensionTooSmall {
                dim: weights.len(),
                min: 2,
            });
        }
        for &w in &weights {
            if !w.is_finite() || w < -eps || w > 1.0 + eps {
                return Err(Error::OutOfRange {
                    name: "weights",
                    value: w,
                });
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > eps {
            return Err(Error::SumNotOne { sum });
        }
        for w in &mut weights {
            *w = w.clamp(0.0, 1.0);
        }
        Ok(Self { weights })
    }

    pub(crate) fn from_valid(weights: Vec<f64>) -> Self {
        debug_assert!(weights.len() >= 2);
        debug_assert!(weights.iter().all(|w| (0.0..=1.0).contains(w)));
        Self { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn into_weights(self) -> Vec<f64> {
        self.weights
    }
}

/// An exact rational `numer / denom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub numer: u64,
    pub denom: u64,
}

impl Rational {
    pub fn to_f64(self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

/// The exact volume `1/n!` of the monotone region inside `[0, 1]^n`.
///
/// `n` is capped at 20, the largest factorial expressible in 64 bits.
pub fn exact_volume(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::DimensionTooSmall { dim: 0, min: 1 });
    }
    if n > 20 {
        return Err(Error::Overflow { n });
    }
    let mut denom = 1u64;
    for k in 2..=n as u64 {
        denom *= k;
    }
    Ok(Rational { numer: 1, denom })
}

/// Result of a Monte-Carlo volume estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeEstimate {
    /// Fraction of sampled points that were non-decreasing.
    pub estimate: f64,
    /// Binomial standard error `sqrt(p (1 - p) / samples)`.
    pub stderr: f64,
    pub samples: u64,
    pub hits: u64,
}

/// Points are drawn in fixed 65536-sample chunks; chunk `i` uses the stream
/// `(seed, i)`, so the result is a pure function of `(n, samples, seed)`
/// regardless of how chunks are scheduled across workers.
const CHUNK: u64 = 65536;

/// Estimates the volume of the monotone region by uniform sampling of
/// `[0, 1]^n`. Deterministic for fixed `(n, samples, seed)`.
pub fn estimate_volume(n: usize, samples: u64, seed: u64) -> Result<VolumeEstimate> {
    if n == 0 {
        return Err(Error::DimensionTooSmall { dim: 0, min: 1 });
    }
    assert!(samples >= 1, "sample count must be positive");
    let chunks = samples.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(ci);
            let in_chunk = (samples - ci * CHUNK).min(CHUNK);
            let mut count = 0u64;
            for _ in 0..in_chunk {
                let mut prev = -1.0f64;
                let mut monotone = true;
                // always draw all n coordinates so the stream stays aligned
                for _ in 0..n {
                    let x: f64 = rng.random();
                    if x < prev {
                        monotone = false;
                    }
                    prev = x;
                }
                if monotone {
                    count += 1;
                }
            }
            count
        })
        .sum();
    let p = hits as f64 / samples as f64;
    let stderr = (p * (1.0 - p) / samples as f64).sqrt();
    Ok(VolumeEstimate {
        estimate: p,
        stderr,
        samples,
        hits,
    })
}
