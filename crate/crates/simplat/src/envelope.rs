//! The tagged JSON wire format.
//!
//! Every value travels as a single object with a `"kind"` discriminator,
//! e.g. `{"kind":"bui","x":0.7,"c":0.8}`. Parsing is plain serde; invariant
//! checking happens in [`Envelope::validate`], which hands back the
//! corresponding domain value. Serialization uses the shortest decimal that
//! parses back to the identical float, so round-trips are bit-exact.

use crate::error::Result;
use crate::granularity::LevelledGranule;
use crate::polytope::{Simplex, WeightVector};
use crate::zoo::{
    AinGranule, AnPoint, AtanassovPair, BtbuiGranule, BuiGranule, CiiGranule, CuiGranule, Granule,
    HcuiGranule, HmcuiGranule, IciiGranule, IcuiGranule, IntervalGranule, ItbuiGranule, IvifsPair,
    LinguisticScale, NicuiGranule, PictureTriple, Plts, RbuiGranule, RoughPair, ShadowedPair,
};
use serde::{Deserialize, Serialize};

/// Inner pair of a two-stage certainty granule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BuiFields {
    pub x: f64,
    pub c: f64,
}

/// The wire representation of every supported kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Envelope {
    Simplex { coords: Vec<f64> },
    Weights { weights: Vec<f64> },
    Interval { lo: f64, hi: f64 },
    Rough { lower: f64, upper: f64 },
    Grey { lo: f64, hi: f64 },
    Vague { lo: f64, hi: f64 },
    Atanassov { mu: f64, nu: f64 },
    Bui { x: f64, c: f64 },
    Cii { x: f64, a_lo: f64, a_hi: f64 },
    Ain { expected: f64, lo: f64, hi: f64 },
    Picture { a1: f64, a2: f64, a3: f64 },
    Ivifs { mu_lo: f64, mu_hi: f64, nu_lo: f64, nu_hi: f64 },
    Shadowed { core_lo: f64, core_hi: f64, supp_lo: f64, supp_hi: f64 },
    Icii { x_lo: f64, x_hi: f64, a_lo: f64, a_hi: f64 },
    Rbui { x: f64, a_lo: f64, a_hi: f64, c: f64 },
    Itbui { x: f64, c_lo: f64, c_hi: f64 },
    Btbui { y: f64, inner: BuiFields },
    Cui { x: f64, a1: f64, a2: f64, u1: f64, u2: f64 },
    Icui { x1: f64, x2: f64, a1: f64, a2: f64, u1: f64, u2: f64 },
    Hmcui { xs: Vec<f64>, a_lo: f64, a_hi: f64 },
    Hcui { xs: Vec<f64>, a_lo: f64, a_hi: f64, u_lo: f64, u_hi: f64 },
    Anpoint { ps: Vec<f64> },
    Plts { scale: Vec<String>, probs: Vec<f64> },
    Nicui { intervals: Vec<[f64; 2]> },
    Levelled { alphas: Vec<f64>, intervals: Vec<[f64; 2]> },
}

/// A validated domain value of any kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Object {
    Simplex(Simplex),
    Weights(WeightVector),
    Granule(Granule),
    Levelled(LevelledGranule),
}

impl Object {
    pub fn kind_str(&self) -> &'static str {
        match self {
            Object::Simplex(_) => "simplex",
            Object::Weights(_) => "weights",
            Object::Granule(g) => g.kind().as_str(),
            Object::Levelled(_) => "levelled",
        }
    }

    /// The monotone-tuple image: identity for tuples, cumulative sums for
    /// weights, the registered codec for granules, the flattened stack for
    /// levelled granules.
    pub fn to_simplex(&self) -> Simplex {
        match self {
            Object::Simplex(s) => s.clone(),
            Object::Weights(w) => Simplex::from_weights(w),
            Object::Granule(g) => g.to_simplex(),
            Object::Levelled(l) => l.granule().to_simplex(),
        }
    }
}

impl Envelope {
    pub fn parse(text: &str) -> serde_json::Result<Envelope> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("envelopes always serialize")
    }

    /// Checks the invariants of the carried kind within `eps` and returns
    /// the validated domain value.
    pub fn validate(&self, eps: f64) -> Result<Object> {
        Ok(match self.clone() {
            Envelope::Simplex { coords } => {
                Object::Simplex(Simplex::with_tolerance(coords, eps)?)
            }
            Envelope::Weights { weights } => {
                Object::Weights(WeightVector::with_tolerance(weights, eps)?)
            }
            Envelope::Interval { lo, hi } => Object::Granule(Granule::Interval(
                IntervalGranule::with_tolerance(lo, hi, eps)?,
            )),
            Envelope::Rough { lower, upper } => Object::Granule(Granule::Rough(
                RoughPair::with_tolerance(lower, upper, eps)?,
            )),
            Envelope::Grey { lo, hi } => Object::Granule(Granule::Grey(
                IntervalGranule::with_tolerance(lo, hi, eps)?,
            )),
            Envelope::Vague { lo, hi } => Object::Granule(Granule::Vague(
                IntervalGranule::with_tolerance(lo, hi, eps)?,
            )),
            Envelope::Atanassov { mu, nu } => Object::Granule(Granule::Atanassov(
                AtanassovPair::with_tolerance(mu, nu, eps)?,
            )),
            Envelope::Bui { x, c } => {
                Object::Granule(Granule::Bui(BuiGranule::with_tolerance(x, c, eps)?))
            }
            Envelope::Cii { x, a_lo, a_hi } => Object::Granule(Granule::Cii(
                CiiGranule::with_tolerance(x, a_lo, a_hi, eps)?,
            )),
            Envelope::Ain { expected, lo, hi } => Object::Granule(Granule::Ain(
                AinGranule::with_tolerance(expected, lo, hi, eps)?,
            )),
            Envelope::Picture { a1, a2, a3 } => Object::Granule(Granule::Picture(
                PictureTriple::with_tolerance(a1, a2, a3, eps)?,
            )),
            Envelope::Ivifs {
                mu_lo,
                mu_hi,
                nu_lo,
                nu_hi,
            } => Object::Granule(Granule::Ivifs(IvifsPair::with_tolerance(
                mu_lo, mu_hi, nu_lo, nu_hi, eps,
            )?)),
            Envelope::Shadowed {
                core_lo,
                core_hi,
                supp_lo,
                supp_hi,
            } => Object::Granule(Granule::Shadowed(ShadowedPair::with_tolerance(
                core_lo, core_hi, supp_lo, supp_hi, eps,
            )?)),
            Envelope::Icii {
                x_lo,
                x_hi,
                a_lo,
                a_hi,
            } => Object::Granule(Granule::Icii(IciiGranule::with_tolerance(
                x_lo, x_hi, a_lo, a_hi, eps,
            )?)),
            Envelope::Rbui { x, a_lo, a_hi, c } => Object::Granule(Granule::Rbui(
                RbuiGranule::with_tolerance(x, a_lo, a_hi, c, eps)?,
            )),
            Envelope::Itbui { x, c_lo, c_hi } => Object::Granule(Granule::Itbui(
                ItbuiGranule::with_tolerance(x, c_lo, c_hi, eps)?,
            )),
            Envelope::Btbui { y, inner } => Object::Granule(Granule::Btbui(
                BtbuiGranule::with_tolerance(
                    y,
                    BuiGranule::with_tolerance(inner.x, inner.c, eps)?,
                    eps,
                )?,
            )),
            Envelope::Cui { x, a1, a2, u1, u2 } => Object::Granule(Granule::Cui(
                CuiGranule::with_tolerance(x, a1, a2, u1, u2, eps)?,
            )),
            Envelope::Icui {
                x1,
                x2,
                a1,
                a2,
                u1,
                u2,
            } => Object::Granule(Granule::Icui(IcuiGranule::with_tolerance(
                x1, x2, a1, a2, u1, u2, eps,
            )?)),
            Envelope::Hmcui { xs, a_lo, a_hi } => Object::Granule(Granule::Hmcui(
                HmcuiGranule::with_tolerance(xs, a_lo, a_hi, eps)?,
            )),
            Envelope::Hcui {
                xs,
                a_lo,
                a_hi,
                u_lo,
                u_hi,
            } => Object::Granule(Granule::Hcui(HcuiGranule::with_tolerance(
                xs, a_lo, a_hi, u_lo, u_hi, eps,
            )?)),
            Envelope::Anpoint { ps } => {
                Object::Granule(Granule::AnPoint(AnPoint::with_tolerance(ps, eps)?))
            }
            Envelope::Plts { scale, probs } => Object::Granule(Granule::Plts(
                Plts::with_tolerance(LinguisticScale::new(scale)?, probs, eps)?,
            )),
            Envelope::Nicui { intervals } => Object::Granule(Granule::Nicui(
                NicuiGranule::with_tolerance(
                    intervals.into_iter().map(|[lo, hi]| (lo, hi)).collect(),
                    eps,
                )?,
            )),
            Envelope::Levelled { alphas, intervals } => {
                let granule = NicuiGranule::with_tolerance(
                    intervals.into_iter().map(|[lo, hi]| (lo, hi)).collect(),
                    eps,
                )?;
                Object::Levelled(LevelledGranule::with_tolerance(granule, alphas, eps)?)
            }
        })
    }

    pub fn from_object(obj: &Object) -> Envelope {
        match obj {
            Object::Simplex(s) => Envelope::Simplex {
                coords: s.coords().to_vec(),
            },
            Object::Weights(w) => Envelope::Weights {
                weights: w.weights().to_vec(),
            },
            Object::Granule(g) => Envelope::from_granule(g),
            Object::Levelled(l) => Envelope::Levelled {
                alphas: l.alphas().to_vec(),
                intervals: l
                    .granule()
                    .intervals
                    .iter()
                    .map(|iv| [iv.lo, iv.hi])
                    .collect(),
            },
        }
    }

    pub fn from_granule(g: &Granule) -> Envelope {
        match g {
            Granule::Interval(g) => Envelope::Interval { lo: g.lo, hi: g.hi },
            Granule::Rough(g) => Envelope::Rough {
                lower: g.lower,
                upper: g.upper,
            },
            Granule::Grey(g) => Envelope::Grey { lo: g.lo, hi: g.hi },
            Granule::Vague(g) => Envelope::Vague { lo: g.lo, hi: g.hi },
            Granule::Atanassov(g) => Envelope::Atanassov { mu: g.mu, nu: g.nu },
            Granule::Bui(g) => Envelope::Bui { x: g.x, c: g.c },
            Granule::Cii(g) => Envelope::Cii {
                x: g.x,
                a_lo: g.a_lo,
                a_hi: g.a_hi,
            },
            Granule::Ain(g) => Envelope::Ain {
                expected: g.expected,
                lo: g.lo,
                hi: g.hi,
            },
            Granule::Picture(g) => Envelope::Picture {
                a1: g.a1,
                a2: g.a2,
                a3: g.a3,
            },
            Granule::Ivifs(g) => Envelope::Ivifs {
                mu_lo: g.mu_lo,
                mu_hi: g.mu_hi,
                nu_lo: g.nu_lo,
                nu_hi: g.nu_hi,
            },
            Granule::Shadowed(g) => Envelope::Shadowed {
                core_lo: g.core_lo,
                core_hi: g.core_hi,
                supp_lo: g.supp_lo,
                supp_hi: g.supp_hi,
            },
            Granule::Icii(g) => Envelope::Icii {
                x_lo: g.x_lo,
                x_hi: g.x_hi,
                a_lo: g.a_lo,
                a_hi: g.a_hi,
            },
            Granule::Rbui(g) => Envelope::Rbui {
                x: g.x,
                a_lo: g.a_lo,
                a_hi: g.a_hi,
                c: g.c,
            },
            Granule::Itbui(g) => Envelope::Itbui {
                x: g.x,
                c_lo: g.c_lo,
                c_hi: g.c_hi,
            },
            Granule::Btbui(g) => Envelope::Btbui {
                y: g.y,
                inner: BuiFields {
                    x: g.inner.x,
                    c: g.inner.c,
                },
            },
            Granule::Cui(g) => Envelope::Cui {
                x: g.x,
                a1: g.a1,
                a2: g.a2,
                u1: g.u1,
                u2: g.u2,
            },
            Granule::Icui(g) => Envelope::Icui {
                x1: g.x1,
                x2: g.x2,
                a1: g.a1,
                a2: g.a2,
                u1: g.u1,
                u2: g.u2,
            },
            Granule::Hmcui(g) => Envelope::Hmcui {
                xs: g.xs.clone(),
                a_lo: g.a_lo,
                a_hi: g.a_hi,
            },
            Granule::Hcui(g) => Envelope::Hcui {
                xs: g.xs.clone(),
                a_lo: g.a_lo,
                a_hi: g.a_hi,
                u_lo: g.u_lo,
                u_hi: g.u_hi,
            },
            Granule::AnPoint(g) => Envelope::Anpoint { ps: g.ps.clone() },
            Granule::Plts(g) => Envelope::Plts {
                scale: g.scale().labels().to_vec(),
                probs: g.probs().to_vec(),
            },
            Granule::Nicui(g) => Envelope::Nicui {
                intervals: g.intervals.iter().map(|iv| [iv.lo, iv.hi]).collect(),
            },
        }
    }
}
