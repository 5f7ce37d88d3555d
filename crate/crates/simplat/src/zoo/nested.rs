//! Granules built from chains of nested intervals: acceptance and tolerated
//! regions around point, interval, or hesitant evaluation values.

use super::{chain, expect_dim, unit_field, IntervalGranule};
use crate::error::{Error, Result};
use crate::polytope::{Simplex, DEFAULT_TOLERANCE};

/// Cognitive uncertain information: an evaluation value inside an acceptance
/// interval inside a tolerated interval. Encodes as `(u1, a1, x, a2, u2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CuiGranule {
    pub x: f64,
    pub a1: f64,
    pub a2: f64,
    pub u1: f64,
    pub u2: f64,
}

impl CuiGranule {
    pub fn new(x: f64, a1: f64, a2: f64, u1: f64, u2: f64) -> Result<Self> {
        Self::with_tolerance(x, a1, a2, u1, u2, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(x: f64, a1: f64, a2: f64, u1: f64, u2: f64, eps: f64) -> Result<Self> {
        let mut f = [
            ("u1", unit_field("u1", u1, eps)?),
            ("a1", unit_field("a1", a1, eps)?),
            ("x", unit_field("x", x, eps)?),
            ("a2", unit_field("a2", a2, eps)?),
            ("u2", unit_field("u2", u2, eps)?),
        ];
        chain(&mut f, eps)?;
        Ok(Self {
            u1: f[0].1,
            a1: f[1].1,
            x: f[2].1,
            a2: f[3].1,
            u2: f[4].1,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![self.u1, self.a1, self.x, self.a2, self.u2])
            .expect("nesting chain is monotone")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 5)?;
        let c = s.coords();
        Ok(Self {
            u1: c[0],
            a1: c[1],
            x: c[2],
            a2: c[3],
            u2: c[4],
        })
    }
}

/// The interval-valued variant of [`CuiGranule`]. Encodes as
/// `(u1, a1, x1, x2, a2, u2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IcuiGranule {
    pub x1: f64,
    pub x2: f64,
    pub a1: f64,
    pub a2: f64,
    pub u1: f64,
    pub u2: f64,
}

impl IcuiGranule {
    pub fn new(x1: f64, x2: f64, a1: f64, a2: f64, u1: f64, u2: f64) -> Result<Self> {
        Self::with_tolerance(x1, x2, a1, a2, u1, u2, DEFAULT_TOLERANCE)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn with_tolerance(
        x1: f64,
        x2: f64,
        a1: f64,
        a2: f64,
        u1: f64,
        u2: f64,
        eps: f64,
    ) -> Result<Self> {
        let mut f = [
            ("u1", unit_field("u1", u1, eps)?),
            ("a1", unit_field("a1", a1, eps)?),
            ("x1", unit_field("x1", x1, eps)?),
            ("x2", unit_field("x2", x2, eps)?),
            ("a2", unit_field("a2", a2, eps)?),
            ("u2", unit_field("u2", u2, eps)?),
        ];
        chain(&mut f, eps)?;
        Ok(Self {
            u1: f[0].1,
            a1: f[1].1,
            x1: f[2].1,
            x2: f[3].1,
            a2: f[4].1,
            u2: f[5].1,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![self.u1, self.a1, self.x1, self.x2, self.a2, self.u2])
            .expect("nesting chain is monotone")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 6)?;
        let c = s.coords();
        Ok(Self {
            u1: c[0],
            a1: c[1],
            x1: c[2],
            x2: c[3],
            a2: c[4],
            u2: c[5],
        })
    }
}

/// A hesitant evaluation: `k` strictly increasing values inside one
/// acceptance interval. Embeds as `(a_lo, x_1, ..., x_k, a_hi)`; the decode
/// accepts only tuples whose interior is strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct HmcuiGranule {
    pub xs: Vec<f64>,
    pub a_lo: f64,
    pub a_hi: f64,
}

impl HmcuiGranule {
    pub fn new(xs: Vec<f64>, a_lo: f64, a_hi: f64) -> Result<Self> {
        Self::with_tolerance(xs, a_lo, a_hi, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(xs: Vec<f64>, a_lo: f64, a_hi: f64, eps: f64) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::Empty);
        }
        let xs = xs
            .into_iter()
            .map(|x| unit_field("xs", x, eps))
            .collect::<Result<Vec<_>>>()?;
        strictly_increasing("xs", &xs)?;
        let a_lo = bound_below(unit_field("a_lo", a_lo, eps)?, xs[0], "a_lo", "xs", eps)?;
        let a_hi = bound_above(
            unit_field("a_hi", a_hi, eps)?,
            xs[xs.len() - 1],
            "xs",
            "a_hi",
            eps,
        )?;
        Ok(Self { xs, a_lo, a_hi })
    }

    pub fn arity(&self) -> usize {
        self.xs.len()
    }

    pub fn to_simplex(&self) -> Simplex {
        let mut c = Vec::with_capacity(self.xs.len() + 2);
        c.push(self.a_lo);
        c.extend_from_slice(&self.xs);
        c.push(self.a_hi);
        Simplex::new(c).expect("hesitant values sit inside the acceptance interval")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        let n = s.dim();
        if n < 3 {
            return Err(Error::DimensionTooSmall { dim: n, min: 3 });
        }
        let c = s.coords();
        interior_strict(&c[1..n - 1])?;
        Ok(Self {
            a_lo: c[0],
            xs: c[1..n - 1].to_vec(),
            a_hi: c[n - 1],
        })
    }
}

/// A hesitant evaluation with both acceptance and tolerated intervals.
/// Embeds as `(u_lo, a_lo, x_1, ..., x_k, a_hi, u_hi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HcuiGranule {
    pub xs: Vec<f64>,
    pub a_lo: f64,
    pub a_hi: f64,
    pub u_lo: f64,
    pub u_hi: f64,
}

impl HcuiGranule {
    pub fn new(xs: Vec<f64>, a_lo: f64, a_hi: f64, u_lo: f64, u_hi: f64) -> Result<Self> {
        Self::with_tolerance(xs, a_lo, a_hi, u_lo, u_hi, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(
        xs: Vec<f64>,
        a_lo: f64,
        a_hi: f64,
        u_lo: f64,
        u_hi: f64,
        eps: f64,
    ) -> Result<Self> {
        let inner = HmcuiGranule::with_tolerance(xs, a_lo, a_hi, eps)?;
        let u_lo = bound_below(unit_field("u_lo", u_lo, eps)?, inner.a_lo, "u_lo", "a_lo", eps)?;
        let u_hi = bound_above(unit_field("u_hi", u_hi, eps)?, inner.a_hi, "a_hi", "u_hi", eps)?;
        Ok(Self {
            xs: inner.xs,
            a_lo: inner.a_lo,
            a_hi: inner.a_hi,
            u_lo,
            u_hi,
        })
    }

    pub fn arity(&self) -> usize {
        self.xs.len()
    }

    pub fn to_simplex(&self) -> Simplex {
        let mut c = Vec::with_capacity(self.xs.len() + 4);
        c.push(self.u_lo);
        c.push(self.a_lo);
        c.extend_from_slice(&self.xs);
        c.push(self.a_hi);
        c.push(self.u_hi);
        Simplex::new(c).expect("hesitant values sit inside the nested intervals")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        let n = s.dim();
        if n < 5 {
            return Err(Error::DimensionTooSmall { dim: n, min: 5 });
        }
        let c = s.coords();
        interior_strict(&c[2..n - 2])?;
        Ok(Self {
            u_lo: c[0],
            a_lo: c[1],
            xs: c[2..n - 2].to_vec(),
            a_hi: c[n - 2],
            u_hi: c[n - 1],
        })
    }
}

/// A stack of nested acceptance intervals, outermost first. Encodes by
/// listing the lower bounds outermost-in followed by the upper bounds
/// innermost-out, which nesting makes monotone.
#[derive(Debug, Clone, PartialEq)]
pub struct NicuiGranule {
    pub intervals: Vec<IntervalGranule>,
}

impl NicuiGranule {
    pub fn new(intervals: Vec<(f64, f64)>) -> Result<Self> {
        Self::with_tolerance(intervals, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(intervals: Vec<(f64, f64)>, eps: f64) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::Empty);
        }
        let n = intervals.len();
        let mut flat = Vec::with_capacity(2 * n);
        flat.extend(intervals.iter().map(|p| p.0));
        flat.extend(intervals.iter().rev().map(|p| p.1));
        // nesting of the stack is exactly monotonicity of the flattened tuple
        for &v in &flat {
            if !v.is_finite() || v < -eps || v > 1.0 + eps {
                return Err(Error::OutOfRange {
                    name: "intervals",
                    value: v,
                });
            }
        }
        for i in 0..flat.len() - 1 {
            if flat[i] > flat[i + 1] + eps {
                return Err(Error::NotMonotone {
                    name: "intervals",
                    index: i,
                    left: flat[i],
                    right: flat[i + 1],
                });
            }
        }
        for v in &mut flat {
            *v = v.clamp(0.0, 1.0);
        }
        flat.sort_by(f64::total_cmp);
        Ok(Self::from_flat(&flat))
    }

    fn from_flat(flat: &[f64]) -> Self {
        let n = flat.len() / 2;
        Self {
            intervals: (0..n)
                .map(|i| IntervalGranule {
                    lo: flat[i],
                    hi: flat[2 * n - 1 - i],
                })
                .collect(),
        }
    }

    pub fn levels(&self) -> usize {
        self.intervals.len()
    }

    pub fn to_simplex(&self) -> Simplex {
        let mut c = Vec::with_capacity(2 * self.intervals.len());
        c.extend(self.intervals.iter().map(|iv| iv.lo));
        c.extend(self.intervals.iter().rev().map(|iv| iv.hi));
        Simplex::new(c).expect("nested intervals flatten to a monotone tuple")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        if !s.dim().is_multiple_of(2) {
            return Err(Error::OddDimension { dim: s.dim() });
        }
        Ok(Self::from_flat(s.coords()))
    }
}

fn strictly_increasing(name: &'static str, xs: &[f64]) -> Result<()> {
    for i in 0..xs.len().saturating_sub(1) {
        if xs[i] >= xs[i + 1] {
            return Err(Error::NotStrictlyIncreasing { name, index: i });
        }
    }
    Ok(())
}

fn interior_strict(xs: &[f64]) -> Result<()> {
    for i in 0..xs.len().saturating_sub(1) {
        if xs[i] >= xs[i + 1] {
            return Err(Error::NotInImage(format!(
                "interior coordinates tie at position {i}"
            )));
        }
    }
    Ok(())
}

/// Lower bound that may be repaired downwards onto the value it must not
/// exceed; strict hesitant values never move.
fn bound_below(bound: f64, first: f64, lower: &'static str, upper: &'static str, eps: f64) -> Result<f64> {
    if bound > first + eps {
        return Err(Error::NotNested {
            lower,
            lower_value: bound,
            upper,
            upper_value: first,
        });
    }
    Ok(bound.min(first))
}

fn bound_above(bound: f64, last: f64, lower: &'static str, upper: &'static str, eps: f64) -> Result<f64> {
    if bound < last - eps {
        return Err(Error::NotNested {
            lower,
            lower_value: last,
            upper,
            upper_value: bound,
        });
    }
    Ok(bound.max(last))
}
