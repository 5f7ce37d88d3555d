//! The catalogue of uncertainty granule structures and their codecs onto
//! monotone membership tuples.
//!
//! Every structure encodes into a [`Simplex`] of a fixed dimension; the
//! bijective ones decode from the whole space of that dimension, while the
//! embeddings (`rbui`, `itbui`, `btbui`, `hmcui`, `hcui`) decode only their
//! image and report `NotInImage` elsewhere.

mod dim2;
mod dim3;
mod dim4;
mod linguistic;
mod nested;

pub use dim2::{bui_leq, AtanassovPair, BuiGranule, IntervalGranule, RoughPair};
pub use dim3::{asymmetry_coefficient, AinGranule, CiiGranule, PictureTriple};
pub use dim4::{BtbuiGranule, IciiGranule, ItbuiGranule, IvifsPair, RbuiGranule, ShadowedPair};
pub use linguistic::{AnPoint, LinguisticScale, Plts};
pub use nested::{CuiGranule, HcuiGranule, HmcuiGranule, IcuiGranule, NicuiGranule};

use crate::error::{Error, Result};
use crate::polytope::Simplex;
use std::fmt;
use std::str::FromStr;

pub(crate) fn unit_field(name: &'static str, value: f64, eps: f64) -> Result<f64> {
    if !value.is_finite() || value < -eps || value > 1.0 + eps {
        return Err(Error::OutOfRange { name, value });
    }
    Ok(value.clamp(0.0, 1.0))
}

/// Validates the chain `fields[0] <= fields[1] <= ...` within `eps`; an
/// inversion of at most `eps` is repaired by raising the later entry.
pub(crate) fn chain(fields: &mut [(&'static str, f64)], eps: f64) -> Result<()> {
    for i in 0..fields.len() - 1 {
        let (lower, lower_value) = fields[i];
        let (upper, upper_value) = fields[i + 1];
        if lower_value > upper_value + eps {
            return Err(Error::NotNested {
                lower,
                lower_value,
                upper,
                upper_value,
            });
        }
        if upper_value < lower_value {
            fields[i + 1].1 = lower_value;
        }
    }
    Ok(())
}

/// Validates `sum(values) <= 1` within `eps`; an accepted overshoot is
/// repaired by scaling every entry down by the sum.
pub(crate) fn sub_unit_sum(name: &'static str, values: &mut [f64], eps: f64) -> Result<()> {
    let sum: f64 = values.iter().sum();
    if sum > 1.0 + eps {
        return Err(Error::SumExceedsOne { name, sum });
    }
    if sum > 1.0 {
        for v in values.iter_mut() {
            *v /= sum;
        }
    }
    Ok(())
}

pub(crate) fn expect_dim(s: &Simplex, dim: usize) -> Result<()> {
    if s.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: s.dim(),
        });
    }
    Ok(())
}

/// The registered kind tags; grey and vague sets are reparametrizations of
/// the interval codec and rough pairs rename its fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GranuleKind {
    Interval,
    Rough,
    Grey,
    Vague,
    Atanassov,
    Bui,
    Cii,
    Ain,
    Picture,
    Ivifs,
    Shadowed,
    Icii,
    Rbui,
    Itbui,
    Btbui,
    Cui,
    Icui,
    Hmcui,
    Hcui,
    AnPoint,
    Plts,
    Nicui,
}

impl GranuleKind {
    pub const ALL: [GranuleKind; 22] = [
        GranuleKind::Interval,
        GranuleKind::Rough,
        GranuleKind::Grey,
        GranuleKind::Vague,
        GranuleKind::Atanassov,
        GranuleKind::Bui,
        GranuleKind::Cii,
        GranuleKind::Ain,
        GranuleKind::Picture,
        GranuleKind::Ivifs,
        GranuleKind::Shadowed,
        GranuleKind::Icii,
        GranuleKind::Rbui,
        GranuleKind::Itbui,
        GranuleKind::Btbui,
        GranuleKind::Cui,
        GranuleKind::Icui,
        GranuleKind::Hmcui,
        GranuleKind::Hcui,
        GranuleKind::AnPoint,
        GranuleKind::Plts,
        GranuleKind::Nicui,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GranuleKind::Interval => "interval",
            GranuleKind::Rough => "rough",
            GranuleKind::Grey => "grey",
            GranuleKind::Vague => "vague",
            GranuleKind::Atanassov => "atanassov",
            GranuleKind::Bui => "bui",
            GranuleKind::Cii => "cii",
            GranuleKind::Ain => "ain",
            GranuleKind::Picture => "picture",
            GranuleKind::Ivifs => "ivifs",
            GranuleKind::Shadowed => "shadowed",
            GranuleKind::Icii => "icii",
            GranuleKind::Rbui => "rbui",
            GranuleKind::Itbui => "itbui",
            GranuleKind::Btbui => "btbui",
            GranuleKind::Cui => "cui",
            GranuleKind::Icui => "icui",
            GranuleKind::Hmcui => "hmcui",
            GranuleKind::Hcui => "hcui",
            GranuleKind::AnPoint => "anpoint",
            GranuleKind::Plts => "plts",
            GranuleKind::Nicui => "nicui",
        }
    }
}

impl FromStr for GranuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GranuleKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

impl fmt::Display for GranuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A tagged union over every granule structure.
#[derive(Debug, Clone, PartialEq)]
pub enum Granule {
    Interval(IntervalGranule),
    Rough(RoughPair),
    Grey(IntervalGranule),
    Vague(IntervalGranule),
    Atanassov(AtanassovPair),
    Bui(BuiGranule),
    Cii(CiiGranule),
    Ain(AinGranule),
    Picture(PictureTriple),
    Ivifs(IvifsPair),
    Shadowed(ShadowedPair),
    Icii(IciiGranule),
    Rbui(RbuiGranule),
    Itbui(ItbuiGranule),
    Btbui(BtbuiGranule),
    Cui(CuiGranule),
    Icui(IcuiGranule),
    Hmcui(HmcuiGranule),
    Hcui(HcuiGranule),
    AnPoint(AnPoint),
    Plts(Plts),
    Nicui(NicuiGranule),
}

impl Granule {
    pub fn kind(&self) -> GranuleKind {
        match self {
            Granule::Interval(_) => GranuleKind::Interval,
            Granule::Rough(_) => GranuleKind::Rough,
            Granule::Grey(_) => GranuleKind::Grey,
            Granule::Vague(_) => GranuleKind::Vague,
            Granule::Atanassov(_) => GranuleKind::Atanassov,
            Granule::Bui(_) => GranuleKind::Bui,
            Granule::Cii(_) => GranuleKind::Cii,
            Granule::Ain(_) => GranuleKind::Ain,
            Granule::Picture(_) => GranuleKind::Picture,
            Granule::Ivifs(_) => GranuleKind::Ivifs,
            Granule::Shadowed(_) => GranuleKind::Shadowed,
            Granule::Icii(_) => GranuleKind::Icii,
            Granule::Rbui(_) => GranuleKind::Rbui,
            Granule::Itbui(_) => GranuleKind::Itbui,
            Granule::Btbui(_) => GranuleKind::Btbui,
            Granule::Cui(_) => GranuleKind::Cui,
            Granule::Icui(_) => GranuleKind::Icui,
            Granule::Hmcui(_) => GranuleKind::Hmcui,
            Granule::Hcui(_) => GranuleKind::Hcui,
            Granule::AnPoint(_) => GranuleKind::AnPoint,
            Granule::Plts(_) => GranuleKind::Plts,
            Granule::Nicui(_) => GranuleKind::Nicui,
        }
    }

    /// Encodes the granule into its monotone-tuple representation.
    pub fn to_simplex(&self) -> Simplex {
        match self {
            Granule::Interval(g) | Granule::Grey(g) | Granule::Vague(g) => g.to_simplex(),
            Granule::Rough(g) => g.to_simplex(),
            Granule::Atanassov(g) => g.to_simplex(),
            Granule::Bui(g) => g.to_simplex(),
            Granule::Cii(g) => g.to_simplex(),
            Granule::Ain(g) => g.to_simplex(),
            Granule::Picture(g) => g.to_simplex(),
            Granule::Ivifs(g) => g.to_simplex(),
            Granule::Shadowed(g) => g.to_simplex(),
            Granule::Icii(g) => g.to_simplex(),
            Granule::Rbui(g) => g.to_simplex(),
            Granule::Itbui(g) => g.to_simplex(),
            Granule::Btbui(g) => g.to_simplex(),
            Granule::Cui(g) => g.to_simplex(),
            Granule::Icui(g) => g.to_simplex(),
            Granule::Hmcui(g) => g.to_simplex(),
            Granule::Hcui(g) => g.to_simplex(),
            Granule::AnPoint(g) => g.to_simplex(),
            Granule::Plts(g) => g.to_simplex(),
            Granule::Nicui(g) => g.to_simplex(),
        }
    }

    /// Decodes a tuple as the requested kind. `eps` is the decode tolerance
    /// used by the partial codecs; `plts` needs a scale and `btbui` has no
    /// decoder at all.
    pub fn from_simplex(kind: GranuleKind, s: &Simplex, eps: f64) -> Result<Granule> {
        Ok(match kind {
            GranuleKind::Interval => Granule::Interval(IntervalGranule::from_simplex(s)?),
            GranuleKind::Rough => Granule::Rough(RoughPair::from_simplex(s)?),
            GranuleKind::Grey => Granule::Grey(IntervalGranule::from_simplex(s)?),
            GranuleKind::Vague => Granule::Vague(IntervalGranule::from_simplex(s)?),
            GranuleKind::Atanassov => Granule::Atanassov(AtanassovPair::from_simplex(s)?),
            GranuleKind::Bui => Granule::Bui(BuiGranule::from_simplex_with_tolerance(s, eps)?),
            GranuleKind::Cii => Granule::Cii(CiiGranule::from_simplex(s)?),
            GranuleKind::Ain => Granule::Ain(AinGranule::from_simplex(s)?),
            GranuleKind::Picture => Granule::Picture(PictureTriple::from_simplex(s)?),
            GranuleKind::Ivifs => Granule::Ivifs(IvifsPair::from_simplex(s)?),
            GranuleKind::Shadowed => Granule::Shadowed(ShadowedPair::from_simplex(s)?),
            GranuleKind::Icii => Granule::Icii(IciiGranule::from_simplex(s)?),
            GranuleKind::Rbui => Granule::Rbui(RbuiGranule::from_simplex_with_tolerance(s, eps)?),
            GranuleKind::Itbui => {
                Granule::Itbui(ItbuiGranule::from_simplex_with_tolerance(s, eps)?)
            }
            GranuleKind::Btbui => {
                return Err(Error::UnsupportedConversion {
                    kind: "btbui: the two-stage certainty granule is not recoverable from a tuple",
                })
            }
            GranuleKind::Cui => Granule::Cui(CuiGranule::from_simplex(s)?),
            GranuleKind::Icui => Granule::Icui(IcuiGranule::from_simplex(s)?),
            GranuleKind::Hmcui => Granule::Hmcui(HmcuiGranule::from_simplex(s)?),
            GranuleKind::Hcui => Granule::Hcui(HcuiGranule::from_simplex(s)?),
            GranuleKind::AnPoint => Granule::AnPoint(AnPoint::from_simplex(s)),
            GranuleKind::Plts => {
                return Err(Error::UnsupportedConversion {
                    kind: "plts: decoding needs a linguistic scale (see Plts::from_simplex)",
                })
            }
            GranuleKind::Nicui => Granule::Nicui(NicuiGranule::from_simplex(s)?),
        })
    }
}
