//! Four-dimensional granules: paired intervals and certainty-dilated
//! evaluation values.

use super::{chain, expect_dim, unit_field};
use crate::error::{Error, Result};
use crate::polytope::{Simplex, DEFAULT_TOLERANCE};
use crate::zoo::BuiGranule;

/// An interval-valued membership/non-membership pair with
/// `mu_hi + nu_hi <= 1`. Encodes as `(mu_lo, mu_hi, 1 - nu_hi, 1 - nu_lo)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IvifsPair {
    pub mu_lo: f64,
    pub mu_hi: f64,
    pub nu_lo: f64,
    pub nu_hi: f64,
}

impl IvifsPair {
    pub fn new(mu_lo: f64, mu_hi: f64, nu_lo: f64, nu_hi: f64) -> Result<Self> {
        Self::with_tolerance(mu_lo, mu_hi, nu_lo, nu_hi, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(
        mu_lo: f64,
        mu_hi: f64,
        nu_lo: f64,
        nu_hi: f64,
        eps: f64,
    ) -> Result<Self> {
        let mut mu = [
            ("mu_lo", unit_field("mu_lo", mu_lo, eps)?),
            ("mu_hi", unit_field("mu_hi", mu_hi, eps)?),
        ];
        chain(&mut mu, eps)?;
        let mut nu = [
            ("nu_lo", unit_field("nu_lo", nu_lo, eps)?),
            ("nu_hi", unit_field("nu_hi", nu_hi, eps)?),
        ];
        chain(&mut nu, eps)?;
        let (mu_lo, mu_hi) = (mu[0].1, mu[1].1);
        let (mut nu_lo, mut nu_hi) = (nu[0].1, nu[1].1);
        if mu_hi + nu_hi > 1.0 + eps {
            return Err(Error::SumExceedsOne {
                name: "mu_hi + nu_hi",
                sum: mu_hi + nu_hi,
            });
        }
        if mu_hi + nu_hi > 1.0 {
            nu_hi = 1.0 - mu_hi;
            nu_lo = nu_lo.min(nu_hi);
        }
        Ok(Self {
            mu_lo,
            mu_hi,
            nu_lo,
            nu_hi,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![
            self.mu_lo,
            self.mu_hi,
            1.0 - self.nu_hi,
            1.0 - self.nu_lo,
        ])
        .expect("mu_hi + nu_hi <= 1 makes the reflected tuple monotone")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 4)?;
        let c = s.coords();
        Self::with_tolerance(c[0], c[1], 1.0 - c[3], 1.0 - c[2], DEFAULT_TOLERANCE)
    }
}

/// A core interval nested in a support interval. Encodes as
/// `(supp_lo, core_lo, core_hi, supp_hi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShadowedPair {
    pub core_lo: f64,
    pub core_hi: f64,
    pub supp_lo: f64,
    pub supp_hi: f64,
}

impl ShadowedPair {
    pub fn new(core_lo: f64, core_hi: f64, supp_lo: f64, supp_hi: f64) -> Result<Self> {
        Self::with_tolerance(core_lo, core_hi, supp_lo, supp_hi, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(
        core_lo: f64,
        core_hi: f64,
        supp_lo: f64,
        supp_hi: f64,
        eps: f64,
    ) -> Result<Self> {
        let mut f = [
            ("supp_lo", unit_field("supp_lo", supp_lo, eps)?),
            ("core_lo", unit_field("core_lo", core_lo, eps)?),
            ("core_hi", unit_field("core_hi", core_hi, eps)?),
            ("supp_hi", unit_field("supp_hi", supp_hi, eps)?),
        ];
        chain(&mut f, eps)?;
        Ok(Self {
            supp_lo: f[0].1,
            core_lo: f[1].1,
            core_hi: f[2].1,
            supp_hi: f[3].1,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![self.supp_lo, self.core_lo, self.core_hi, self.supp_hi])
            .expect("core nests inside support")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 4)?;
        let c = s.coords();
        Ok(Self {
            supp_lo: c[0],
            core_lo: c[1],
            core_hi: c[2],
            supp_hi: c[3],
        })
    }
}

/// An interval evaluation value nested in an acceptance interval. Encodes as
/// `(a_lo, x_lo, x_hi, a_hi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IciiGranule {
    pub x_lo: f64,
    pub x_hi: f64,
    pub a_lo: f64,
    pub a_hi: f64,
}

impl IciiGranule {
    pub fn new(x_lo: f64, x_hi: f64, a_lo: f64, a_hi: f64) -> Result<Self> {
        Self::with_tolerance(x_lo, x_hi, a_lo, a_hi, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(x_lo: f64, x_hi: f64, a_lo: f64, a_hi: f64, eps: f64) -> Result<Self> {
        let mut f = [
            ("a_lo", unit_field("a_lo", a_lo, eps)?),
            ("x_lo", unit_field("x_lo", x_lo, eps)?),
            ("x_hi", unit_field("x_hi", x_hi, eps)?),
            ("a_hi", unit_field("a_hi", a_hi, eps)?),
        ];
        chain(&mut f, eps)?;
        Ok(Self {
            a_lo: f[0].1,
            x_lo: f[1].1,
            x_hi: f[2].1,
            a_hi: f[3].1,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![self.a_lo, self.x_lo, self.x_hi, self.a_hi])
            .expect("evaluation interval nests inside acceptance")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 4)?;
        let c = s.coords();
        Ok(Self {
            a_lo: c[0],
            x_lo: c[1],
            x_hi: c[2],
            a_hi: c[3],
        })
    }
}

/// Relative basic uncertain information: an evaluation value `x` in a
/// refined interval `[a_lo, a_hi]` with relative certainty `c`. Embeds as
/// `(a_lo, xc + (1-c) a_lo, xc + (1-c) a_hi, a_hi)`; the decode is partial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RbuiGranule {
    pub x: f64,
    pub a_lo: f64,
    pub a_hi: f64,
    pub c: f64,
}

impl RbuiGranule {
    pub fn new(x: f64, a_lo: f64, a_hi: f64, c: f64) -> Result<Self> {
        Self::with_tolerance(x, a_lo, a_hi, c, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(x: f64, a_lo: f64, a_hi: f64, c: f64, eps: f64) -> Result<Self> {
        let c = unit_field("c", c, eps)?;
        let mut f = [
            ("a_lo", unit_field("a_lo", a_lo, eps)?),
            ("x", unit_field("x", x, eps)?),
            ("a_hi", unit_field("a_hi", a_hi, eps)?),
        ];
        chain(&mut f, eps)?;
        Ok(Self {
            a_lo: f[0].1,
            x: f[1].1,
            a_hi: f[2].1,
            c,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        let spread = 1.0 - self.c;
        Simplex::new(vec![
            self.a_lo,
            self.x * self.c + spread * self.a_lo,
            self.x * self.c + spread * self.a_hi,
            self.a_hi,
        ])
        .expect("relative dilation stays inside the refined interval")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        Self::from_simplex_with_tolerance(s, DEFAULT_TOLERANCE)
    }

    /// Recovers `c = 1 - (x3 - x2)/(x4 - x1)` and
    /// `x = (x2 - (1-c) x1)/c`; the image excludes degenerate intervals and
    /// zero certainty.
    pub fn from_simplex_with_tolerance(s: &Simplex, eps: f64) -> Result<Self> {
        expect_dim(s, 4)?;
        let c = s.coords();
        let (x1, x2, x3, x4) = (c[0], c[1], c[2], c[3]);
        let spread = x4 - x1;
        if spread <= 0.0 {
            return Err(Error::NotInImage(format!(
                "refined interval is a point (x1 = x4 = {x1})"
            )));
        }
        let certainty = 1.0 - (x3 - x2) / spread;
        if certainty <= 0.0 {
            return Err(Error::NotInImage(
                "relative certainty degree is zero".to_string(),
            ));
        }
        let x = (x2 - (1.0 - certainty) * x1) / certainty;
        if x < x1 - eps || x > x4 + eps {
            return Err(Error::NotInImage(format!(
                "recovered evaluation value {x} escapes [{x1}, {x4}]"
            )));
        }
        Self::with_tolerance(x.clamp(x1, x4), x1, x4, certainty, DEFAULT_TOLERANCE)
    }
}

/// An evaluation value with an interval certainty degree; both certainty
/// bounds dilate the value, nesting the narrower interval inside the wider.
/// Embeds as `(c_lo x, c_hi x, c_hi x + 1 - c_hi, c_lo x + 1 - c_lo)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ItbuiGranule {
    pub x: f64,
    pub c_lo: f64,
    pub c_hi: f64,
}

impl ItbuiGranule {
    pub fn new(x: f64, c_lo: f64, c_hi: f64) -> Result<Self> {
        Self::with_tolerance(x, c_lo, c_hi, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(x: f64, c_lo: f64, c_hi: f64, eps: f64) -> Result<Self> {
        let x = unit_field("x", x, eps)?;
        let mut f = [
            ("c_lo", unit_field("c_lo", c_lo, eps)?),
            ("c_hi", unit_field("c_hi", c_hi, eps)?),
        ];
        chain(&mut f, eps)?;
        Ok(Self {
            x,
            c_lo: f[0].1,
            c_hi: f[1].1,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        let lo_lo = self.c_lo * self.x;
        let hi_lo = self.c_hi * self.x;
        Simplex::new(vec![
            lo_lo,
            hi_lo,
            hi_lo + (1.0 - self.c_hi),
            lo_lo + (1.0 - self.c_lo),
        ])
        .expect("nested certainty dilations are monotone")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        Self::from_simplex_with_tolerance(s, DEFAULT_TOLERANCE)
    }

    /// Recovers `c_lo = x1 + 1 - x4`, `c_hi = x2 + 1 - x3` and requires the
    /// two dilations to agree on the evaluation value.
    pub fn from_simplex_with_tolerance(s: &Simplex, eps: f64) -> Result<Self> {
        expect_dim(s, 4)?;
        let c = s.coords();
        let c_lo = c[0] + (1.0 - c[3]);
        let c_hi = c[1] + (1.0 - c[2]);
        if c_lo <= eps {
            return Err(Error::NotInImage(
                "lower certainty degree is zero".to_string(),
            ));
        }
        let x = c[0] / c_lo;
        let residual = (x - c[1] / c_hi).abs();
        if residual > eps {
            return Err(Error::NotInImage(format!(
                "certainty bounds disagree on the evaluation value (residual {residual:e})"
            )));
        }
        Self::with_tolerance(x, c_lo, c_hi, DEFAULT_TOLERANCE)
    }
}

/// An evaluation value whose certainty is itself a basic uncertain granule;
/// the inner granule dilates into the interval certainty of an
/// [`ItbuiGranule`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BtbuiGranule {
    pub y: f64,
    pub inner: BuiGranule,
}

impl BtbuiGranule {
    pub fn new(y: f64, inner: BuiGranule) -> Result<Self> {
        Self::with_tolerance(y, inner, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(y: f64, inner: BuiGranule, eps: f64) -> Result<Self> {
        Ok(Self {
            y: unit_field("y", y, eps)?,
            inner,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        let dilated = self.inner.to_simplex();
        ItbuiGranule::new(self.y, dilated.coords()[0], dilated.coords()[1])
            .expect("dilation of the certainty granule is a valid certainty interval")
            .to_simplex()
    }
}
