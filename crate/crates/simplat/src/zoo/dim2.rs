//! Two-dimensional granules: intervals and their reparametrizations.

use super::{chain, expect_dim, unit_field};
use crate::error::{Error, Result};
use crate::polytope::{Simplex, DEFAULT_TOLERANCE};

/// A closed subinterval `[lo, hi]` of the unit interval. The codec is the
/// identity on coordinates; grey and vague sets reuse it under their own
/// kind tags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalGranule {
    pub lo: f64,
    pub hi: f64,
}

impl IntervalGranule {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        Self::with_tolerance(lo, hi, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(lo: f64, hi: f64, eps: f64) -> Result<Self> {
        let mut f = [
            ("lo", unit_field("lo", lo, eps)?),
            ("hi", unit_field("hi", hi, eps)?),
        ];
        chain(&mut f, eps)?;
        Ok(Self {
            lo: f[0].1,
            hi: f[1].1,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![self.lo, self.hi]).expect("interval bounds form a monotone pair")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 2)?;
        Ok(Self {
            lo: s.coords()[0],
            hi: s.coords()[1],
        })
    }

    pub fn contains(&self, t: f64) -> bool {
        self.lo <= t && t <= self.hi
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }
}

/// A lower/upper approximation pair at one point of a universe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoughPair {
    pub lower: f64,
    pub upper: f64,
}

impl RoughPair {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        Self::with_tolerance(lower, upper, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(lower: f64, upper: f64, eps: f64) -> Result<Self> {
        let iv = IntervalGranule::with_tolerance(lower, upper, eps)?;
        Ok(Self {
            lower: iv.lo,
            upper: iv.hi,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![self.lower, self.upper]).expect("approximations form a monotone pair")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 2)?;
        Ok(Self {
            lower: s.coords()[0],
            upper: s.coords()[1],
        })
    }
}

/// A membership/non-membership pair with `mu + nu <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtanassovPair {
    pub mu: f64,
    pub nu: f64,
}

impl AtanassovPair {
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        Self::with_tolerance(mu, nu, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(mu: f64, nu: f64, eps: f64) -> Result<Self> {
        let mu = unit_field("mu", mu, eps)?;
        let mut nu = unit_field("nu", nu, eps)?;
        if mu + nu > 1.0 + eps {
            return Err(Error::SumExceedsOne {
                name: "mu + nu",
                sum: mu + nu,
            });
        }
        if mu + nu > 1.0 {
            nu = 1.0 - mu;
        }
        Ok(Self { mu, nu })
    }

    /// `(mu, nu) -> (mu, 1 - nu)`.
    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![self.mu, 1.0 - self.nu])
            .expect("mu + nu <= 1 makes (mu, 1 - nu) monotone")
    }

    /// `(x1, x2) -> (x1, 1 - x2)`.
    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 2)?;
        Self::with_tolerance(s.coords()[0], 1.0 - s.coords()[1], DEFAULT_TOLERANCE)
    }

    /// The standard dominance order: more membership, less non-membership.
    pub fn dominates(&self, other: &Self) -> bool {
        self.mu >= other.mu && self.nu <= other.nu
    }
}

/// An evaluation value `x` carrying a certainty degree `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BuiGranule {
    pub x: f64,
    pub c: f64,
}

impl BuiGranule {
    pub fn new(x: f64, c: f64) -> Result<Self> {
        Self::with_tolerance(x, c, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(x: f64, c: f64, eps: f64) -> Result<Self> {
        Ok(Self {
            x: unit_field("x", x, eps)?,
            c: unit_field("c", c, eps)?,
        })
    }

    /// Member of the starred subclass with positive certainty.
    pub fn is_star(&self) -> bool {
        self.c > 0.0
    }

    /// The certainty dilation `[c x, c x + 1 - c]`: full certainty collapses
    /// to the diagonal, zero certainty widens to the whole unit interval.
    pub fn to_simplex(&self) -> Simplex {
        let lo = self.c * self.x;
        let hi = lo + (1.0 - self.c);
        Simplex::new(vec![lo, hi]).expect("certainty dilation is monotone")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        Self::from_simplex_with_tolerance(s, DEFAULT_TOLERANCE)
    }

    /// Inverts the dilation: `c = x1 + 1 - x2`, `x = x1 / c`. The total
    /// ignorance interval `(0, 1)` has no preimage.
    pub fn from_simplex_with_tolerance(s: &Simplex, eps: f64) -> Result<Self> {
        expect_dim(s, 2)?;
        let x1 = s.coords()[0];
        let x2 = s.coords()[1];
        let c = x1 + (1.0 - x2);
        if c <= eps {
            return Err(Error::TotalIgnorance);
        }
        Self::with_tolerance(x1 / c, c, DEFAULT_TOLERANCE)
    }
}

/// The order pulled back through the certainty dilation.
pub fn bui_leq(a: &BuiGranule, b: &BuiGranule) -> bool {
    a.to_simplex()
        .leq(&b.to_simplex())
        .expect("dilations share dimension 2")
}
