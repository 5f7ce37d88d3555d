//! Face and degeneracy maps, operator words, and machine verification of the
//! simplicial identities.
//!
//! `face(s, i)` deletes coordinate `i + 1` (1-indexed) of an `n`-tuple,
//! `0 <= i <= n - 1`; `degeneracy(s, j)` duplicates coordinate `j + 1`,
//! `0 <= j <= n - 1`. Dimension 1 has no faces: the tower of lattices stops
//! at the unit interval.
//!
//! Words list operators in application order (leftmost applied first), which
//! is the reverse of composition notation: the composite `s_2 ∘ s_0` is the
//! word `"s0 s2"`.

use crate::error::{Error, Result};
use crate::polytope::Simplex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Deletes coordinate `i + 1`, lowering the dimension by one.
pub fn face(s: &Simplex, i: usize) -> Result<Simplex> {
    let n = s.dim();
    if n < 2 {
        return Err(Error::DimensionTooSmall { dim: n, min: 2 });
    }
    if i > n - 1 {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: n - 1,
        });
    }
    let mut c = s.coords().to_vec();
    c.remove(i);
    Ok(Simplex::from_valid(c))
}

/// Duplicates coordinate `j + 1`, raising the dimension by one.
pub fn degeneracy(s: &Simplex, j: usize) -> Result<Simplex> {
    let n = s.dim();
    if j > n - 1 {
        return Err(Error::IndexOutOfRange {
            index: j,
            bound: n - 1,
        });
    }
    let mut c = s.coords().to_vec();
    c.insert(j, c[j]);
    Ok(Simplex::from_valid(c))
}

/// A single face or degeneracy operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicialOp {
    Face(usize),
    Degeneracy(usize),
}

impl fmt::Display for SimplicialOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplicialOp::Face(i) => write!(f, "d{i}"),
            SimplicialOp::Degeneracy(j) => write!(f, "s{j}"),
        }
    }
}

/// A dimension-checked sequence of operators, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapWord {
    ops: Vec<SimplicialOp>,
    input_dim: usize,
    output_dim: usize,
}

impl MapWord {
    /// Validates that each operator index is legal at the dimension reached
    /// when it is applied.
    pub fn new(input_dim: usize, ops: Vec<SimplicialOp>) -> Result<Self> {
        if input_dim == 0 {
            return Err(Error::DimensionTooSmall { dim: 0, min: 1 });
        }
        let mut dim = input_dim;
        for &op in &ops {
            match op {
                SimplicialOp::Face(i) => {
                    if dim < 2 {
                        return Err(Error::DimensionTooSmall { dim, min: 2 });
                    }
                    if i > dim - 1 {
                        return Err(Error::IndexOutOfRange {
                            index: i,
                            bound: dim - 1,
                        });
                    }
                    dim -= 1;
                }
                SimplicialOp::Degeneracy(j) => {
                    if j > dim - 1 {
                        return Err(Error::IndexOutOfRange {
                            index: j,
                            bound: dim - 1,
                        });
                    }
                    dim += 1;
                }
            }
        }
        Ok(Self {
            ops,
            input_dim,
            output_dim: dim,
        })
    }

    /// Parses whitespace-separated `d<i>` / `s<j>` tokens.
    pub fn parse(text: &str, input_dim: usize) -> Result<Self> {
        let mut ops = Vec::new();
        for tok in text.split_whitespace() {
            let bytes = tok.as_bytes();
            if bytes.len() < 2 || !bytes[1..].iter().all(u8::is_ascii_digit) {
                return Err(Error::WordToken(tok.to_string()));
            }
            let idx: usize = tok[1..]
                .parse()
                .map_err(|_| Error::WordToken(tok.to_string()))?;
            match bytes[0] {
                b'd' => ops.push(SimplicialOp::Face(idx)),
                b's' => ops.push(SimplicialOp::Degeneracy(idx)),
                _ => return Err(Error::WordToken(tok.to_string())),
            }
        }
        Self::new(input_dim, ops)
    }

    pub fn ops(&self) -> &[SimplicialOp] {
        &self.ops
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn output_dim(&self) -> usize {
        self.output_dim
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn is_degeneracies_only(&self) -> bool {
        self.ops
            .iter()
            .all(|op| matches!(op, SimplicialOp::Degeneracy(_)))
    }

    /// Applies the operators left to right.
    pub fn apply(&self, s: &Simplex) -> Result<Simplex> {
        if s.dim() != self.input_dim {
            return Err(Error::DimensionMismatch {
                expected: self.input_dim,
                actual: s.dim(),
            });
        }
        let mut cur = s.clone();
        for &op in &self.ops {
            cur = match op {
                SimplicialOp::Face(i) => face(&cur, i)?,
                SimplicialOp::Degeneracy(j) => degeneracy(&cur, j)?,
            };
        }
        Ok(cur)
    }

    /// Rewrites the word to its normal form: faces first with strictly
    /// decreasing indices in application order, then degeneracies with
    /// strictly increasing indices. The rewriting applies the identity
    /// families to the leftmost adjacent pair until none applies, so the
    /// result denotes the same map and canonicalizing twice is a no-op.
    pub fn canonicalize(&self) -> MapWord {
        let mut ops = self.ops.clone();
        while let Some(k) = first_redex(&ops) {
            rewrite_at(&mut ops, k);
        }
        MapWord::new(self.input_dim, ops).expect("identity rewrites preserve dimension consistency")
    }
}

impl fmt::Display for MapWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, op) in self.ops.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{op}")?;
        }
        Ok(())
    }
}

fn first_redex(ops: &[SimplicialOp]) -> Option<usize> {
    use SimplicialOp::*;
    ops.windows(2).position(|w| match (w[0], w[1]) {
        (Face(a), Face(b)) => b >= a,
        (Degeneracy(a), Degeneracy(b)) => b <= a,
        (Degeneracy(_), Face(_)) => true,
        (Face(_), Degeneracy(_)) => false,
    })
}

/// Rewrites the redex at `k` by the matching identity, stated here in
/// application order (left operator applied first):
///
/// * `[d_a, d_b]`, `b >= a`  ->  `[d_{b+1}, d_a]`
/// * `[s_a, s_b]`, `b <= a`  ->  `[s_b, s_{a+1}]`
/// * `[s_j, d_i]`            ->  cancels when `i = j, j+1`; `[d_i, s_{j-1}]`
///   when `i < j`; `[d_{i-1}, s_j]` when `i > j + 1`
fn rewrite_at(ops: &mut Vec<SimplicialOp>, k: usize) {
    use SimplicialOp::*;
    match (ops[k], ops[k + 1]) {
        (Face(a), Face(b)) => {
            ops[k] = Face(b + 1);
            ops[k + 1] = Face(a);
        }
        (Degeneracy(a), Degeneracy(b)) => {
            ops[k] = Degeneracy(b);
            ops[k + 1] = Degeneracy(a + 1);
        }
        (Degeneracy(j), Face(i)) => {
            if i == j || i == j + 1 {
                ops.drain(k..=k + 1);
            } else if i < j {
                ops[k] = Face(i);
                ops[k + 1] = Degeneracy(j - 1);
            } else {
                ops[k] = Face(i - 1);
                ops[k + 1] = Degeneracy(j);
            }
        }
        (Face(_), Degeneracy(_)) => unreachable!("not a redex"),
    }
}

/// The five identity families relating face and degeneracy composites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityFamily {
    FaceFace,
    DegenDegen,
    FaceDegenCommute,
    FaceDegenCancel,
    FaceDegenSkip,
}

impl IdentityFamily {
    pub fn label(self) -> &'static str {
        match self {
            IdentityFamily::FaceFace => "d_i d_j = d_{j-1} d_i (i < j)",
            IdentityFamily::DegenDegen => "s_i s_j = s_j s_{i-1} (i > j)",
            IdentityFamily::FaceDegenCommute => "d_i s_j = s_{j-1} d_i (i < j)",
            IdentityFamily::FaceDegenCancel => "d_i s_j = id (i = j, j+1)",
            IdentityFamily::FaceDegenSkip => "d_i s_j = s_j d_{i-1} (i > j+1)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyReport {
    pub family: IdentityFamily,
    pub checked: u64,
    pub failed: u64,
}

impl FamilyReport {
    pub fn passed(&self) -> u64 {
        self.checked - self.failed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub dim: usize,
    pub trials: u64,
    pub families: [FamilyReport; 5],
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.families.iter().all(|f| f.failed == 0)
    }
}

fn bit_eq(a: &Simplex, b: &Simplex) -> bool {
    a.dim() == b.dim()
        && a.coords()
            .iter()
            .zip(b.coords())
            .all(|(x, y)| x.to_bits() == y.to_bits())
}

/// Checks every applicable instance of the five identity families on
/// `trials` uniformly sampled tuples of dimension `n`. The maps only move
/// coordinates, so equality is required bitwise.
pub fn verify_identities(n: usize, trials: u64, seed: u64) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::DimensionTooSmall { dim: 0, min: 1 });
    }
    assert!(trials >= 1, "trial count must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut families = [
        FamilyReport {
            family: IdentityFamily::FaceFace,
            checked: 0,
            failed: 0,
        },
        FamilyReport {
            family: IdentityFamily::DegenDegen,
            checked: 0,
            failed: 0,
        },
        FamilyReport {
            family: IdentityFamily::FaceDegenCommute,
            checked: 0,
            failed: 0,
        },
        FamilyReport {
            family: IdentityFamily::FaceDegenCancel,
            checked: 0,
            failed: 0,
        },
        FamilyReport {
            family: IdentityFamily::FaceDegenSkip,
            checked: 0,
            failed: 0,
        },
    ];
    let record = |slot: &mut FamilyReport, ok: bool| {
        slot.checked += 1;
        if !ok {
            slot.failed += 1;
        }
    };
    for _ in 0..trials {
        let x = Simplex::sample(n, &mut rng);

        // d_i d_j = d_{j-1} d_i for i < j (two faces need n >= 3)
        if n >= 3 {
            for j in 1..=n - 1 {
                for i in 0..j {
                    let lhs = face(&face(&x, j)?, i)?;
                    let rhs = face(&face(&x, i)?, j - 1)?;
                    record(&mut families[0], bit_eq(&lhs, &rhs));
                }
            }
        }

        // s_i s_j = s_j s_{i-1} for i > j
        for j in 0..=n - 1 {
            for i in j + 1..=n {
                let lhs = degeneracy(&degeneracy(&x, j)?, i)?;
                let rhs = degeneracy(&degeneracy(&x, i - 1)?, j)?;
                record(&mut families[1], bit_eq(&lhs, &rhs));
            }
        }

        // d_i s_j = s_{j-1} d_i for i < j
        for j in 0..=n - 1 {
            for i in 0..j {
                let lhs = face(&degeneracy(&x, j)?, i)?;
                let rhs = degeneracy(&face(&x, i)?, j - 1)?;
                record(&mut families[2], bit_eq(&lhs, &rhs));
            }
        }

        // d_i s_j = id for i = j, j+1
        for j in 0..=n - 1 {
            for i in [j, j + 1] {
                let lhs = face(&degeneracy(&x, j)?, i)?;
                record(&mut families[3], bit_eq(&lhs, &x));
            }
        }

        // d_i s_j = s_j d_{i-1} for i > j + 1
        for j in 0..=n - 1 {
            for i in j + 2..=n {
                let lhs = face(&degeneracy(&x, j)?, i)?;
                let rhs = degeneracy(&face(&x, i - 1)?, j)?;
                record(&mut families[4], bit_eq(&lhs, &rhs));
            }
        }
    }
    Ok(IdentityReport {
        dim: n,
        trials,
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coords: &[f64]) -> Simplex {
        Simplex::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn face_deletes_one_coordinate() {
        assert_eq!(face(&s(&[0.4, 0.6, 0.9]), 1).unwrap(), s(&[0.4, 0.9]));
        assert_eq!(face(&s(&[0.4, 0.6, 0.9]), 0).unwrap(), s(&[0.6, 0.9]));
        assert_eq!(face(&s(&[0.4, 0.6, 0.9]), 2).unwrap(), s(&[0.4, 0.6]));
    }

    #[test]
    fn faces_on_the_plane() {
        let x = s(&[0.3, 0.7]);
        assert_eq!(face(&x, 0).unwrap(), s(&[0.7]));
        assert_eq!(face(&x, 1).unwrap(), s(&[0.3]));
    }

    #[test]
    fn face_of_top_is_top() {
        for i in 0..4 {
            assert_eq!(
                face(&Simplex::top(4).unwrap(), i).unwrap(),
                Simplex::top(3).unwrap()
            );
        }
    }

    #[test]
    fn face_bounds() {
        assert!(matches!(
            face(&s(&[0.5]), 0),
            Err(Error::DimensionTooSmall { dim: 1, .. })
        ));
        assert!(matches!(
            face(&s(&[0.2, 0.8]), 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn degeneracy_duplicates_one_coordinate() {
        assert_eq!(
            degeneracy(&s(&[0.56, 0.76]), 1).unwrap(),
            s(&[0.56, 0.76, 0.76])
        );
        assert_eq!(
            degeneracy(&s(&[0.1, 0.4, 0.8]), 1).unwrap(),
            s(&[0.1, 0.4, 0.4, 0.8])
        );
        assert_eq!(degeneracy(&s(&[0.3]), 0).unwrap(), s(&[0.3, 0.3]));
        assert!(matches!(
            degeneracy(&s(&[0.2, 0.8]), 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn words_apply_left_to_right() {
        // the composite s_2 ∘ s_0 on cumulative sums of (p1, p2, p3)
        let (p1, p2, p3) = (0.2, 0.3, 0.4);
        let x = s(&[p1, p1 + p2, p1 + p2 + p3]);
        let w = MapWord::parse("s0 s2", 3).unwrap();
        let lifted = w.apply(&x).unwrap();
        assert_eq!(
            lifted,
            s(&[p1, p1, p1 + p2, p1 + p2, p1 + p2 + p3])
        );
        assert_eq!(w.output_dim(), 5);
    }

    #[test]
    fn empty_and_singleton_words() {
        let x = s(&[0.1, 0.5, 0.9]);
        let id = MapWord::new(3, vec![]).unwrap();
        assert_eq!(id.apply(&x).unwrap(), x);
        let single = MapWord::new(3, vec![SimplicialOp::Face(1)]).unwrap();
        assert_eq!(single.apply(&x).unwrap(), face(&x, 1).unwrap());
    }

    #[test]
    fn word_validation_tracks_dimension() {
        // d0 twice from dimension 2 would pass through dimension 1
        assert!(MapWord::new(
            2,
            vec![SimplicialOp::Face(0), SimplicialOp::Face(0)]
        )
        .is_err());
        let w = MapWord::new(
            2,
            vec![
                SimplicialOp::Degeneracy(0),
                SimplicialOp::Face(2),
                SimplicialOp::Face(0),
            ],
        )
        .unwrap();
        assert_eq!(w.output_dim(), 1);
        assert!(MapWord::new(0, vec![]).is_err());
    }

    #[test]
    fn word_grammar() {
        assert!(MapWord::parse("s0 s2", 3).is_ok());
        assert!(MapWord::parse("  d1\ts0 ", 3).is_ok());
        assert!(MapWord::parse("", 3).unwrap().is_empty());
        for bad in ["x3", "d", "s", "d1x", "3", "s-1", "d 1"] {
            assert!(MapWord::parse(bad, 3).is_err(), "{bad:?} should fail");
        }
        // leading zeros are digits
        assert_eq!(
            MapWord::parse("d01", 3).unwrap().ops(),
            &[SimplicialOp::Face(1)]
        );
    }

    #[test]
    fn word_display_round_trips() {
        let w = MapWord::parse("s1 d0 s0", 2).unwrap();
        assert_eq!(w.to_string(), "s1 d0 s0");
        assert_eq!(MapWord::parse(&w.to_string(), 2).unwrap(), w);
    }

    #[test]
    fn cancelling_pairs_vanish() {
        for j in 0..3 {
            for i in [j, j + 1] {
                let w = MapWord::new(
                    3,
                    vec![SimplicialOp::Degeneracy(j), SimplicialOp::Face(i)],
                )
                .unwrap();
                assert!(w.canonicalize().is_empty());
            }
        }
    }

    #[test]
    fn face_pairs_are_straightened() {
        // applying d0 then d1 equals applying d2 then d0
        let w = MapWord::new(4, vec![SimplicialOp::Face(0), SimplicialOp::Face(1)]).unwrap();
        let c = w.canonicalize();
        assert_eq!(c.ops(), &[SimplicialOp::Face(2), SimplicialOp::Face(0)]);
        let x = s(&[0.1, 0.3, 0.6, 0.8]);
        assert_eq!(w.apply(&x).unwrap(), c.apply(&x).unwrap());
    }

    #[test]
    fn canonicalize_preserves_semantics_and_is_idempotent() {
        let words = [
            ("s0 s0 s0", 2),
            ("s1 d0 s0 d2", 2),
            ("d0 d0 s0 s1", 3),
            ("s2 s0 d1 d1", 3),
            ("d3 s0 d0 s1 s1 d2", 4),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (text, dim) in words {
            let w = MapWord::parse(text, dim).unwrap();
            let c = w.canonicalize();
            assert_eq!(c.canonicalize(), c);
            assert_eq!(c.input_dim(), w.input_dim());
            assert_eq!(c.output_dim(), w.output_dim());
            for _ in 0..50 {
                let x = Simplex::sample(dim, &mut rng);
                assert_eq!(w.apply(&x).unwrap(), c.apply(&x).unwrap(), "word {text}");
            }
        }
    }

    #[test]
    fn identities_hold_by_hand() {
        // d0 s0 = id
        let x = s(&[0.2, 0.5]);
        assert_eq!(face(&degeneracy(&x, 0).unwrap(), 0).unwrap(), x);
        // d0 d1 = d0 d0 on a triple: both sides drop to the last coordinate
        let y = s(&[0.1, 0.4, 0.9]);
        let lhs = face(&face(&y, 1).unwrap(), 0).unwrap();
        let rhs = face(&face(&y, 0).unwrap(), 0).unwrap();
        assert_eq!(lhs, s(&[0.9]));
        assert_eq!(rhs, s(&[0.9]));
    }

    #[test]
    fn identity_sweep_passes() {
        for n in 1..=5 {
            let report = verify_identities(n, 200, 17).unwrap();
            assert!(report.all_pass(), "dimension {n}: {report:?}");
        }
        let r4 = verify_identities(4, 500, 1).unwrap();
        assert!(r4.families.iter().all(|f| f.checked > 0));
    }

    #[test]
    fn maps_are_lattice_homomorphisms() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let n = 2 + (rand::Rng::random::<u64>(&mut rng) % 5) as usize;
            let a = Simplex::sample(n, &mut rng);
            let b = Simplex::sample(n, &mut rng);
            for i in 0..n {
                let fm = face(&a.meet(&b).unwrap(), i).unwrap();
                let mf = face(&a, i).unwrap().meet(&face(&b, i).unwrap()).unwrap();
                assert_eq!(fm, mf);
                let fj = face(&a.join(&b).unwrap(), i).unwrap();
                let jf = face(&a, i).unwrap().join(&face(&b, i).unwrap()).unwrap();
                assert_eq!(fj, jf);
                let dm = degeneracy(&a.meet(&b).unwrap(), i).unwrap();
                let md = degeneracy(&a, i)
                    .unwrap()
                    .meet(&degeneracy(&b, i).unwrap())
                    .unwrap();
                assert_eq!(dm, md);
            }
        }
    }
}
