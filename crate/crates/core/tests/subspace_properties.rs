mod common;

use common::{
    arb_pair, arb_scalar, arb_subspace, arb_triple, arb_vector, combine, zassenhaus_intersection,
};
use proptest::prelude::*;
use qlogic_core::{Order, ProjectionOp, Subspace};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn projection_correspondence(s in arb_subspace()) {
        let p = s.projection();
        prop_assert!(ProjectionOp::new(p.matrix().clone()).is_ok());
        prop_assert_eq!(p.range(), s.clone());
        prop_assert_eq!(p.range().projection(), p.clone());
        prop_assert_eq!(p.rank(), s.dim());
        prop_assert_eq!(p.kernel(), s.orthocomplement());
        prop_assert_eq!(p.negation().range(), p.kernel());
    }

    #[test]
    fn complement_laws(s in arb_subspace()) {
        let perp = s.orthocomplement();
        prop_assert_eq!(perp.orthocomplement(), s.clone());
        prop_assert!(s.meet(&perp).unwrap().is_zero());
        prop_assert!(s.join(&perp).unwrap().is_full());
        prop_assert!(s.is_orthogonal_to(&perp).unwrap());
        prop_assert_eq!(s.dim() + perp.dim(), s.ambient_dim());
    }

    #[test]
    fn order_laws((a, b, c) in arb_triple()) {
        prop_assert!(a.leq(&a).unwrap());
        if a.leq(&b).unwrap() && b.leq(&a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if a.leq(&b).unwrap() && b.leq(&c).unwrap() {
            prop_assert!(a.leq(&c).unwrap());
        }
        let expected = match (a.leq(&b).unwrap(), b.leq(&a).unwrap()) {
            (true, true) => Order::Equal,
            (true, false) => Order::LeqStrict,
            (false, true) => Order::GeqStrict,
            (false, false) => Order::Incomparable,
        };
        prop_assert_eq!(a.classify_order(&b).unwrap(), expected);
    }

    #[test]
    fn lattice_laws((a, b, c) in arb_triple()) {
        let m = |x: &Subspace, y: &Subspace| x.meet(y).unwrap();
        let j = |x: &Subspace, y: &Subspace| x.join(y).unwrap();
        prop_assert_eq!(m(&a, &b), m(&b, &a));
        prop_assert_eq!(j(&a, &b), j(&b, &a));
        prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
        prop_assert_eq!(j(&j(&a, &b), &c), j(&a, &j(&b, &c)));
        prop_assert_eq!(m(&a, &j(&a, &b)), a.clone());
        prop_assert_eq!(j(&a, &m(&a, &b)), a.clone());
        prop_assert!(m(&a, &b).leq(&a).unwrap());
        prop_assert!(a.leq(&j(&a, &b)).unwrap());
    }

    #[test]
    fn de_morgan_join_agrees_with_span_join((a, b) in arb_pair()) {
        prop_assert_eq!(a.join_de_morgan(&b).unwrap(), a.join(&b).unwrap());
    }

    #[test]
    fn meet_agrees_with_zassenhaus((a, b) in arb_pair()) {
        prop_assert_eq!(a.meet(&b).unwrap(), zassenhaus_intersection(&a, &b));
    }

    #[test]
    fn meet_membership_oracle(
        (a, b, probes, coeffs) in (2usize..=4).prop_flat_map(|n| (
            common::arb_subspace_in(n),
            common::arb_subspace_in(n),
            prop::collection::vec(arb_vector(n), 8),
            prop::collection::vec(arb_scalar(), n),
        ))
    ) {
        let n = a.ambient_dim();
        let meet = a.meet(&b).unwrap();
        let inside = zassenhaus_intersection(&a, &b);
        let mut all = probes;
        all.push(combine(&coeffs, inside.basis(), n));
        all.push(combine(&coeffs, a.basis(), n));
        all.push(combine(&coeffs, b.basis(), n));
        for x in &all {
            prop_assert_eq!(
                meet.contains(x).unwrap(),
                a.contains(x).unwrap() && b.contains(x).unwrap()
            );
        }
    }

    #[test]
    fn tensor_projection_is_kronecker((a, b) in (arb_subspace(), arb_subspace())) {
        let t = a.tensor(&b);
        prop_assert_eq!(t.dim(), a.dim() * b.dim());
        prop_assert_eq!(t.projection(), a.projection().kron(&b.projection()));
    }
}
