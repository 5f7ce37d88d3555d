//! Cross-granularity transformations: face and degeneracy maps induced on
//! granule spaces, probabilistic linguistic rescaling, and the step-fuzzy
//! view of nested interval stacks.

use crate::error::{Error, Result};
use crate::polytope::{Simplex, DEFAULT_TOLERANCE};
use crate::simplicial::{degeneracy, MapWord};
use crate::zoo::{
    BuiGranule, CiiGranule, Granule, IntervalGranule, LinguisticScale, NicuiGranule, Plts,
};

/// The face maps of the triple space, read back through the codecs: the
/// closed forms for dropping one of `(a_lo, x, a_hi)` and re-reading the
/// remaining pair as a certainty-dilated value.
///
/// Fails with `TotalIgnorance` exactly when the dropped tuple is `(0, 1)`.
pub fn induced_face_cii_to_bui(g: &CiiGranule, i: usize) -> Result<BuiGranule> {
    let (value, certainty) = match i {
        0 => (g.x, g.x + (1.0 - g.a_hi)),
        1 => (g.a_lo, g.a_lo + (1.0 - g.a_hi)),
        2 => (g.a_lo, g.a_lo + (1.0 - g.x)),
        _ => {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: 2,
            })
        }
    };
    if certainty <= DEFAULT_TOLERANCE {
        return Err(Error::TotalIgnorance);
    }
    BuiGranule::new(value / certainty, certainty)
}

/// The degeneracy maps of the pair space through the codecs: the dilation
/// `[cx, cx + 1 - c]` becomes the acceptance interval, and the duplicated
/// endpoint becomes the evaluation value.
pub fn induced_degeneracy_bui_to_cii(g: &BuiGranule, j: usize) -> Result<CiiGranule> {
    let lo = g.c * g.x;
    let hi = lo + (1.0 - g.c);
    let x = match j {
        0 => lo,
        1 => hi,
        _ => {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: 1,
            })
        }
    };
    CiiGranule::new(x, lo, hi)
}

/// Duplicates the peak of a triple, the lossless lift into four-tuples.
pub fn triangular_to_trapezoidal(s: &Simplex) -> Result<Simplex> {
    if s.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            actual: s.dim(),
        });
    }
    degeneracy(s, 1)
}

/// Re-expresses a probability mass on a finer scale: cumulative sums, a
/// degeneracy-only word, then consecutive differences. Inserted labels
/// receive probability zero and the total mass is unchanged.
pub fn embed_plts(p: &Plts, target: &LinguisticScale, word: &MapWord) -> Result<Plts> {
    if !word.is_degeneracies_only() {
        return Err(Error::FaceInWord);
    }
    if word.input_dim() != p.scale().size() {
        return Err(Error::DimensionMismatch {
            expected: p.scale().size(),
            actual: word.input_dim(),
        });
    }
    if word.output_dim() != target.size() {
        return Err(Error::DimensionMismatch {
            expected: target.size(),
            actual: word.output_dim(),
        });
    }
    let lifted = word.apply(&p.to_simplex())?;
    Plts::from_simplex(target.clone(), &lifted)
}

/// A nested interval stack with one acceptance level per interval: a step
/// membership function given by its cuts.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelledGranule {
    granule: NicuiGranule,
    alphas: Vec<f64>,
}

impl LevelledGranule {
    pub fn new(granule: NicuiGranule, alphas: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(granule, alphas, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(granule: NicuiGranule, alphas: Vec<f64>, eps: f64) -> Result<Self> {
        if alphas.len() != granule.levels() {
            return Err(Error::ScaleMismatch {
                labels: granule.levels(),
                values: alphas.len(),
            });
        }
        let mut repaired = Vec::with_capacity(alphas.len());
        for (i, &a) in alphas.iter().enumerate() {
            if !a.is_finite() || a <= 0.0 || a > 1.0 + eps {
                return Err(Error::OutOfRange {
                    name: "alphas",
                    value: a,
                });
            }
            let a = a.min(1.0);
            if i > 0 && repaired[i - 1] >= a {
                return Err(Error::NotStrictlyIncreasing {
                    name: "alphas",
                    index: i - 1,
                });
            }
            repaired.push(a);
        }
        Ok(Self {
            granule,
            alphas: repaired,
        })
    }

    pub fn granule(&self) -> &NicuiGranule {
        &self.granule
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn levels(&self) -> usize {
        self.alphas.len()
    }

    /// Membership of `t`: the level of the innermost interval containing it,
    /// zero outside the outermost. Intervals are closed on both ends.
    pub fn step_membership(&self, t: f64) -> f64 {
        assert!((0.0..=1.0).contains(&t), "membership argument must be in [0, 1]");
        self.granule
            .intervals
            .iter()
            .zip(&self.alphas)
            .rev()
            .find(|(iv, _)| iv.contains(t))
            .map(|(_, alpha)| *alpha)
            .unwrap_or(0.0)
    }

    /// The stored interval at the smallest level at least `alpha`; `None`
    /// when `alpha` exceeds the innermost level.
    pub fn alpha_cut(&self, alpha: f64) -> Option<IntervalGranule> {
        assert!(
            alpha > 0.0 && alpha <= 1.0,
            "cut level must be in (0, 1]"
        );
        self.alphas
            .iter()
            .position(|a| *a >= alpha)
            .map(|i| self.granule.intervals[i])
    }

    /// Removes the 1-based level `drop`. On the tuple side this is the pair
    /// of face maps deleting that interval's two endpoint coordinates.
    pub fn coarsen_levels(&self, drop: usize) -> Result<LevelledGranule> {
        let n = self.levels();
        if n < 2 {
            return Err(Error::DimensionTooSmall { dim: n, min: 2 });
        }
        if drop == 0 || drop > n {
            return Err(Error::IndexOutOfRange {
                index: drop,
                bound: n,
            });
        }
        let mut intervals = Vec::with_capacity(n - 1);
        let mut alphas = Vec::with_capacity(n - 1);
        for (i, (iv, a)) in self
            .granule
            .intervals
            .iter()
            .zip(&self.alphas)
            .enumerate()
        {
            if i + 1 != drop {
                intervals.push((iv.lo, iv.hi));
                alphas.push(*a);
            }
        }
        LevelledGranule::new(NicuiGranule::new(intervals)?, alphas)
    }
}

/// Outcome of comparing two values in a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Less,
    Greater,
    Incomparable,
}

/// Carries two granules into a common dimension with the given words and
/// compares their images componentwise both ways.
pub fn lift_and_compare(
    a: &Granule,
    b: &Granule,
    word_a: &MapWord,
    word_b: &MapWord,
) -> Result<Comparison> {
    let sa = word_a.apply(&a.to_simplex())?;
    let sb = word_b.apply(&b.to_simplex())?;
    let ab = sa.leq(&sb)?;
    let ba = sb.leq(&sa)?;
    Ok(match (ab, ba) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Less,
        (false, true) => Comparison::Greater,
        (false, false) => Comparison::Incomparable,
    })
}
