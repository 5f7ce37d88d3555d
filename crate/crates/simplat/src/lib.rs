//! Monotone membership tuples, the face/degeneracy maps connecting their
//! dimensions, and validated codecs for the uncertainty granule structures
//! that embed into them.
//!
//! The pieces:
//!
//! * [`polytope`] — the tuple lattice itself: validation, order, meet/join,
//!   vertices and barycentric coordinates, weight-vector transforms, exact
//!   and Monte-Carlo volume.
//! * [`simplicial`] — face and degeneracy maps, operator words with a text
//!   grammar, word canonicalization, and identity verification.
//! * [`zoo`] — the granule catalogue (intervals, membership pairs, certainty
//!   dilations, nested-interval granules, linguistic term sets) with encode
//!   and decode for each.
//! * [`granularity`] — induced maps between granule spaces, linguistic
//!   rescaling, step membership / cuts, and multi-representation comparison.
//! * [`envelope`] — the tagged JSON wire format over all of the above.
//!
//! All types are immutable values and all operations are pure functions, so
//! everything here is safe to share and call concurrently.

pub mod envelope;
pub mod error;
pub mod granularity;
pub mod polytope;
pub mod simplicial;
pub mod zoo;

pub use error::{Error, Result};
pub use polytope::{
    estimate_volume, exact_volume, Rational, Simplex, VolumeEstimate, WeightVector,
    DEFAULT_TOLERANCE,
};
pub use simplicial::{
    degeneracy, face, verify_identities, IdentityFamily, IdentityReport, MapWord, SimplicialOp,
};
