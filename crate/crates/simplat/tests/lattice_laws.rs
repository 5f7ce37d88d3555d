//! Property tests for the lattice laws and for order preservation of the
//! face and degeneracy maps.

use proptest::prelude::*;
use simplat::{degeneracy, face, Simplex};

fn tuple(n: usize) -> impl Strategy<Value = Simplex> {
    prop::collection::vec(0.0..=1.0f64, n).prop_map(|mut c| {
        c.sort_by(f64::total_cmp);
        Simplex::new(c).unwrap()
    })
}

fn same_dim_pair() -> impl Strategy<Value = (Simplex, Simplex)> {
    (1usize..=8).prop_flat_map(|n| (tuple(n), tuple(n)))
}

fn same_dim_triple() -> impl Strategy<Value = (Simplex, Simplex, Simplex)> {
    (1usize..=8).prop_flat_map(|n| (tuple(n), tuple(n), tuple(n)))
}

proptest! {
    #[test]
    fn meet_and_join_commute((a, b) in same_dim_pair()) {
        prop_assert_eq!(a.meet(&b).unwrap(), b.meet(&a).unwrap());
        prop_assert_eq!(a.join(&b).unwrap(), b.join(&a).unwrap());
    }

    #[test]
    fn meet_and_join_are_associative((a, b, c) in same_dim_triple()) {
        let left = a.meet(&b.meet(&c).unwrap()).unwrap();
        let right = a.meet(&b).unwrap().meet(&c).unwrap();
        prop_assert_eq!(left, right);
        let left = a.join(&b.join(&c).unwrap()).unwrap();
        let right = a.join(&b).unwrap().join(&c).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn meet_and_join_are_idempotent(a in (1usize..=8).prop_flat_map(tuple)) {
        prop_assert_eq!(a.meet(&a).unwrap(), a.clone());
        prop_assert_eq!(a.join(&a).unwrap(), a);
    }

    #[test]
    fn absorption((a, b) in same_dim_pair()) {
        prop_assert_eq!(a.join(&a.meet(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.meet(&a.join(&b).unwrap()).unwrap(), a);
    }

    #[test]
    fn order_is_consistent_with_meet_and_join((a, b) in same_dim_pair()) {
        let leq = a.leq(&b).unwrap();
        prop_assert_eq!(leq, a.meet(&b).unwrap() == a);
        prop_assert_eq!(leq, a.join(&b).unwrap() == b);
    }

    #[test]
    fn bounds_are_extreme(a in (1usize..=8).prop_flat_map(tuple)) {
        let n = a.dim();
        prop_assert!(Simplex::bottom(n).unwrap().leq(&a).unwrap());
        prop_assert!(a.leq(&Simplex::top(n).unwrap()).unwrap());
    }

    #[test]
    fn maps_preserve_order((a, b) in (2usize..=8).prop_flat_map(|n| (tuple(n), tuple(n)))) {
        if a.leq(&b).unwrap() {
            for i in 0..a.dim() {
                prop_assert!(face(&a, i).unwrap().leq(&face(&b, i).unwrap()).unwrap());
                prop_assert!(degeneracy(&a, i).unwrap().leq(&degeneracy(&b, i).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn maps_are_lattice_homomorphisms((a, b) in (2usize..=8).prop_flat_map(|n| (tuple(n), tuple(n)))) {
        let meet = a.meet(&b).unwrap();
        let join = a.join(&b).unwrap();
        for i in 0..a.dim() {
            prop_assert_eq!(
                face(&meet, i).unwrap(),
                face(&a, i).unwrap().meet(&face(&b, i).unwrap()).unwrap()
            );
            prop_assert_eq!(
                face(&join, i).unwrap(),
                face(&a, i).unwrap().join(&face(&b, i).unwrap()).unwrap()
            );
            prop_assert_eq!(
                degeneracy(&meet, i).unwrap(),
                degeneracy(&a, i).unwrap().meet(&degeneracy(&b, i).unwrap()).unwrap()
            );
            prop_assert_eq!(
                degeneracy(&join, i).unwrap(),
                degeneracy(&a, i).unwrap().join(&degeneracy(&b, i).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn maps_land_in_valid_tuples(a in (2usize..=8).prop_flat_map(tuple)) {
        for i in 0..a.dim() {
            let f = face(&a, i).unwrap();
            prop_assert!(Simplex::new(f.coords().to_vec()).is_ok());
            let d = degeneracy(&a, i).unwrap();
            prop_assert!(Simplex::new(d.coords().to_vec()).is_ok());
        }
    }
}
