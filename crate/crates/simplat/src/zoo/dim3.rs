//! Three-dimensional granules: an evaluation value inside an acceptance
//! interval, and sub-unit-sum triples.

use super::{chain, expect_dim, sub_unit_sum, unit_field};
use crate::error::Result;
use crate::polytope::{Simplex, DEFAULT_TOLERANCE};

/// Cognitive interval information: an evaluation value `x` inside the
/// acceptance interval `[a_lo, a_hi]`. Encodes as `(a_lo, x, a_hi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CiiGranule {
    pub x: f64,
    pub a_lo: f64,
    pub a_hi: f64,
}

impl CiiGranule {
    pub fn new(x: f64, a_lo: f64, a_hi: f64) -> Result<Self> {
        Self::with_tolerance(x, a_lo, a_hi, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(x: f64, a_lo: f64, a_hi: f64, eps: f64) -> Result<Self> {
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
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![self.a_lo, self.x, self.a_hi])
            .expect("acceptance interval brackets the evaluation value")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 3)?;
        Ok(Self {
            a_lo: s.coords()[0],
            x: s.coords()[1],
            a_hi: s.coords()[2],
        })
    }
}

/// An asymmetric interval number: the same triple as [`CiiGranule`] read as
/// an expected value inside its interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AinGranule {
    pub expected: f64,
    pub lo: f64,
    pub hi: f64,
}

impl AinGranule {
    pub fn new(expected: f64, lo: f64, hi: f64) -> Result<Self> {
        Self::with_tolerance(expected, lo, hi, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(expected: f64, lo: f64, hi: f64, eps: f64) -> Result<Self> {
        let mut f = [
            ("lo", unit_field("lo", lo, eps)?),
            ("expected", unit_field("expected", expected, eps)?),
            ("hi", unit_field("hi", hi, eps)?),
        ];
        chain(&mut f, eps)?;
        Ok(Self {
            lo: f[0].1,
            expected: f[1].1,
            hi: f[2].1,
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![self.lo, self.expected, self.hi])
            .expect("interval brackets the expected value")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 3)?;
        Ok(Self {
            lo: s.coords()[0],
            expected: s.coords()[1],
            hi: s.coords()[2],
        })
    }
}

/// A picture membership triple with `a1 + a2 + a3 <= 1`; encodes by
/// cumulative sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PictureTriple {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl PictureTriple {
    pub fn new(a1: f64, a2: f64, a3: f64) -> Result<Self> {
        Self::with_tolerance(a1, a2, a3, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(a1: f64, a2: f64, a3: f64, eps: f64) -> Result<Self> {
        let mut vs = [
            unit_field("a1", a1, eps)?,
            unit_field("a2", a2, eps)?,
            unit_field("a3", a3, eps)?,
        ];
        sub_unit_sum("a1 + a2 + a3", &mut vs, eps)?;
        Ok(Self {
            a1: vs[0],
            a2: vs[1],
            a3: vs[2],
        })
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(vec![self.a1, self.a1 + self.a2, self.a1 + self.a2 + self.a3])
            .expect("partial sums of a sub-unit triple are monotone")
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        expect_dim(s, 3)?;
        let c = s.coords();
        Self::with_tolerance(c[0], c[1] - c[0], c[2] - c[1], DEFAULT_TOLERANCE)
    }
}

/// Skew of a triple around its midpoint: `(x1 + x3 - 2 x2) / (x1 + x3)`,
/// zero at the all-equal locus. Always in `[-1, 1]`.
pub fn asymmetry_coefficient(s: &Simplex) -> Result<f64> {
    expect_dim(s, 3)?;
    let c = s.coords();
    if c[0] == c[2] {
        // monotonicity forces x1 = x2 = x3
        return Ok(0.0);
    }
    Ok((c[0] + c[2] - 2.0 * c[1]) / (c[0] + c[2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn cii_codec() {
        let g = CiiGranule::new(0.6, 0.4, 0.9).unwrap();
        assert_eq!(g.to_simplex().coords(), &[0.4, 0.6, 0.9]);
        let d = CiiGranule::new(0.5, 0.5, 0.5).unwrap();
        assert_eq!(d.to_simplex().coords(), &[0.5, 0.5, 0.5]);
        let back = CiiGranule::from_simplex(&g.to_simplex()).unwrap();
        assert_eq!(back, g);
        assert!(CiiGranule::new(0.3, 0.4, 0.9).is_err());
        assert!(CiiGranule::from_simplex(&Simplex::new(vec![0.1, 0.2]).unwrap()).is_err());
    }

    #[test]
    fn ain_shares_the_triple_codec() {
        let g = AinGranule::new(0.6, 0.4, 0.9).unwrap();
        assert_eq!(
            g.to_simplex(),
            CiiGranule::new(0.6, 0.4, 0.9).unwrap().to_simplex()
        );
    }

    #[test]
    fn picture_cumsum_codec() {
        let g = PictureTriple::new(0.4, 0.2, 0.3).unwrap();
        let s = g.to_simplex();
        for (got, want) in s.coords().iter().zip([0.4, 0.6, 0.9]) {
            assert_abs_diff_eq!(got, &want, epsilon = 1e-15);
        }
        let back = PictureTriple::from_simplex(&s).unwrap();
        assert_abs_diff_eq!(back.a1, 0.4, epsilon = 1e-12);
        assert_abs_diff_eq!(back.a2, 0.2, epsilon = 1e-12);
        assert_abs_diff_eq!(back.a3, 0.3, epsilon = 1e-12);
        assert!(PictureTriple::new(0.5, 0.4, 0.3).is_err());
    }

    #[test]
    fn asymmetry_examples() {
        let zero = Simplex::new(vec![0.0, 0.0, 0.0]).unwrap();
        assert_eq!(asymmetry_coefficient(&zero).unwrap(), 0.0);

        let symmetric = Simplex::new(vec![0.4, 0.65, 0.9]).unwrap();
        assert_abs_diff_eq!(
            asymmetry_coefficient(&symmetric).unwrap(),
            0.0,
            epsilon = 1e-15
        );

        let skewed = Simplex::new(vec![0.4, 0.6, 0.9]).unwrap();
        assert_abs_diff_eq!(
            asymmetry_coefficient(&skewed).unwrap(),
            0.076_923_076_923_076_93,
            epsilon = 1e-12
        );

        assert!(asymmetry_coefficient(&Simplex::new(vec![0.1, 0.9]).unwrap()).is_err());
    }

    #[test]
    fn asymmetry_stays_in_the_signed_unit_range() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..2000 {
            let s = Simplex::sample(3, &mut rng);
            let a = asymmetry_coefficient(&s).unwrap();
            assert!((-1.0..=1.0).contains(&a), "{s} gave {a}");
        }
        // extremes of the skew
        let left = Simplex::new(vec![0.2, 0.2, 0.8]).unwrap();
        assert_abs_diff_eq!(
            asymmetry_coefficient(&left).unwrap(),
            0.6,
            epsilon = 1e-12
        );
        let right = Simplex::new(vec![0.2, 0.8, 0.8]).unwrap();
        assert_abs_diff_eq!(
            asymmetry_coefficient(&right).unwrap(),
            -0.6,
            epsilon = 1e-12
        );
    }
}
