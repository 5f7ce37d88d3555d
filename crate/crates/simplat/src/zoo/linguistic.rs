//! Sub-unit-sum points, linguistic scales, and probabilistic linguistic
//! term sets.

use super::{expect_dim, sub_unit_sum, unit_field};
use crate::error::{Error, Result};
use crate::polytope::{Simplex, WeightVector, DEFAULT_TOLERANCE};

/// A point with non-negative coordinates summing to at most one; the
/// cumulative-sum map carries it onto a monotone tuple of the same length.
#[derive(Debug, Clone, PartialEq)]
pub struct AnPoint {
    pub ps: Vec<f64>,
}

impl AnPoint {
    pub fn new(ps: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(ps, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(ps: Vec<f64>, eps: f64) -> Result<Self> {
        if ps.is_empty() {
            return Err(Error::Empty);
        }
        let mut ps = ps
            .into_iter()
            .map(|p| unit_field("ps", p, eps))
            .collect::<Result<Vec<_>>>()?;
        sub_unit_sum("ps", &mut ps, eps)?;
        Ok(Self { ps })
    }

    pub fn len(&self) -> usize {
        self.ps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ps.is_empty()
    }

    pub fn to_simplex(&self) -> Simplex {
        let mut coords = Vec::with_capacity(self.ps.len());
        let mut acc = 0.0f64;
        for &p in &self.ps {
            acc += p;
            coords.push(acc);
        }
        Simplex::new(coords).expect("partial sums of a sub-unit point are monotone")
    }

    /// Consecutive differences; total on every monotone tuple.
    pub fn from_simplex(s: &Simplex) -> Self {
        let c = s.coords();
        let mut ps = Vec::with_capacity(c.len());
        ps.push(c[0]);
        for i in 1..c.len() {
            ps.push(c[i] - c[i - 1]);
        }
        Self::with_tolerance(ps, DEFAULT_TOLERANCE)
            .expect("differences of a monotone tuple are a sub-unit point")
    }
}

/// A totally ordered list of distinct linguistic labels, at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinguisticScale {
    labels: Vec<String>,
}

impl LinguisticScale {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::DimensionTooSmall {
                dim: labels.len(),
                min: 2,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        Ok(Self { labels })
    }

    /// A scale with placeholder labels `s1, ..., sn`.
    pub fn generic(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("s{i}")).collect())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> Result<&str> {
        self.labels
            .get(i)
            .map(String::as_str)
            .ok_or(Error::IndexOutOfRange {
                index: i,
                bound: self.labels.len() - 1,
            })
    }
}

/// A probability mass over a linguistic scale, one slot per label, summing
/// to at most one. The leftover mass is the remaining uncertainty.
#[derive(Debug, Clone, PartialEq)]
pub struct Plts {
    scale: LinguisticScale,
    probs: Vec<f64>,
}

impl Plts {
    pub fn new(scale: LinguisticScale, probs: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(scale, probs, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(scale: LinguisticScale, probs: Vec<f64>, eps: f64) -> Result<Self> {
        if probs.len() != scale.size() {
            return Err(Error::ScaleMismatch {
                labels: scale.size(),
                values: probs.len(),
            });
        }
        let mut probs = probs
            .into_iter()
            .map(|p| unit_field("probs", p, eps))
            .collect::<Result<Vec<_>>>()?;
        sub_unit_sum("probs", &mut probs, eps)?;
        Ok(Self { scale, probs })
    }

    pub fn scale(&self) -> &LinguisticScale {
        &self.scale
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn into_parts(self) -> (LinguisticScale, Vec<f64>) {
        (self.scale, self.probs)
    }

    pub fn to_anpoint(&self) -> AnPoint {
        AnPoint {
            ps: self.probs.clone(),
        }
    }

    /// Appends the remainder slot `1 - sum(probs)`, yielding a weighting
    /// vector of length `n + 1`.
    pub fn to_weights(&self) -> WeightVector {
        let mut w = self.probs.clone();
        let total: f64 = w.iter().sum();
        w.push((1.0 - total).max(0.0));
        WeightVector::with_tolerance(w, DEFAULT_TOLERANCE)
            .expect("probabilities plus remainder sum to one")
    }

    pub fn to_simplex(&self) -> Simplex {
        self.to_anpoint().to_simplex()
    }

    pub fn from_anpoint(scale: LinguisticScale, point: &AnPoint) -> Result<Self> {
        Self::with_tolerance(scale, point.ps.clone(), DEFAULT_TOLERANCE)
    }

    /// Drops the remainder slot of a weighting vector of length `n + 1`.
    pub fn from_weights(scale: LinguisticScale, w: &WeightVector) -> Result<Self> {
        if w.len() != scale.size() + 1 {
            return Err(Error::ScaleMismatch {
                labels: scale.size(),
                values: w.len(),
            });
        }
        let probs = w.weights()[..w.len() - 1].to_vec();
        Self::with_tolerance(scale, probs, DEFAULT_TOLERANCE)
    }

    pub fn from_simplex(scale: LinguisticScale, s: &Simplex) -> Result<Self> {
        expect_dim(s, scale.size())?;
        let point = AnPoint::from_simplex(s);
        Self::from_anpoint(scale, &point)
    }
}
