//! Randomized algebraic properties of the element backends.

use proptest::prelude::*;

use engel::element::GroupElement;
use engel::eng;

fn arb_perm(n: usize) -> impl Strategy<Value = GroupElement> {
    Just((0..n as u16).collect::<Vec<u16>>()).prop_shuffle().prop_map(GroupElement::Perm)
}

proptest! {
    #[test]
    fn product_inverse_reverses(a in arb_perm(8), b in arb_perm(8)) {
        prop_assert_eq!(a.mul(&b).inv(), b.inv().mul(&a.inv()));
    }

    #[test]
    fn associativity(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn conjugation_preserves_order(a in arb_perm(8), h in arb_perm(8)) {
        prop_assert_eq!(a.conj(&h).order(), a.order());
    }

    #[test]
    fn commutator_vanishes_iff_commuting(a in arb_perm(6), b in arb_perm(6)) {
        prop_assert_eq!(a.comm(&b).is_identity(), a.mul(&b) == b.mul(&a));
    }

    #[test]
    fn trace_is_conjugation_equivariant(x in arb_perm(7), y in arb_perm(7), h in arb_perm(7)) {
        let plain = eng(&x, &y);
        let moved = eng(&x.conj(&h), &y.conj(&h));
        prop_assert_eq!(plain.adjacency, moved.adjacency);
        prop_assert_eq!(plain.trail_length, moved.trail_length);
    }

    #[test]
    fn trail_length_is_bounded_by_degree_factorial_order(x in arb_perm(6), y in arb_perm(6)) {
        // any trace on S6 visits at most |S6| distinct values
        let t = eng(&x, &y);
        prop_assert!(u64::from(t.trail_length) <= 720);
    }

    #[test]
    fn encoding_orders_like_ord(a in arb_perm(8), b in arb_perm(8)) {
        prop_assert_eq!(a.cmp(&b), a.encoding().cmp(&b.encoding()));
    }
}
