mod common;

use common::{coefficient, ctx, poly, sized_symmetric_poly};
use csjack_core::symbases::{expand_in_basis, Basis};
use csjack_core::{FieldElement, LaurentPoly};
use proptest::prelude::*;

fn pair(max_degree: i32) -> impl Strategy<Value = (LaurentPoly, LaurentPoly)> {
    (2usize..=4).prop_flat_map(move |n| (poly(n, max_degree), poly(n, max_degree)))
}

fn triple(max_degree: i32) -> impl Strategy<Value = (LaurentPoly, LaurentPoly, LaurentPoly)> {
    (2usize..=4).prop_flat_map(move |n| (poly(n, max_degree), poly(n, max_degree), poly(n, max_degree)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn divided_difference_inverts_the_difference((p, _) in pair(5), i in 0usize..4, j in 0usize..4) {
        let n = p.nvars();
        let (i, j) = (i % n, j % n);
        prop_assume!(i != j);
        let dd = p.divided_difference(i, j).unwrap();
        let mut diff = LaurentPoly::var(p.context(), i).unwrap();
        diff = &diff - &LaurentPoly::var(p.context(), j).unwrap();
        prop_assert_eq!(&diff * &dd, &p - &p.swap_vars(i, j).unwrap());
        prop_assert_eq!(p.divided_difference(j, i).unwrap(), -&dd);
    }

    #[test]
    fn swap_is_an_automorphism((p, q) in pair(3), i in 0usize..4, j in 0usize..4) {
        let n = p.nvars();
        let (i, j) = (i % n, j % n);
        prop_assert_eq!(
            (&p * &q).swap_vars(i, j).unwrap(),
            &p.swap_vars(i, j).unwrap() * &q.swap_vars(i, j).unwrap()
        );
    }

    #[test]
    fn euler_derivative_is_a_derivation((p, q) in pair(3), i in 0usize..4) {
        let i = i % p.nvars();
        let lhs = (&p * &q).euler_derivative(i).unwrap();
        let rhs = &(&p.euler_derivative(i).unwrap() * &q) + &(&p * &q.euler_derivative(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn constant_term_pairing_is_sesquilinear((p, q, r) in triple(3), a in coefficient()) {
        let pairing = |f: &LaurentPoly, g: &LaurentPoly| (&f.bar() * g).constant_term();
        prop_assert_eq!(pairing(&p, &(&q + &r.scale(&a))), &pairing(&p, &q) + &(&a * &pairing(&p, &r)));
        // coefficients are real, so conjugation leaves the scalar alone
        prop_assert_eq!(pairing(&p.scale(&a), &q), &a * &pairing(&p, &q));
    }

    #[test]
    fn basis_round_trip(p in sized_symmetric_poly(4, 4)) {
        // split into homogeneous parts before expanding
        let mut parts: std::collections::BTreeMap<i32, LaurentPoly> = Default::default();
        for (e, c) in p.terms() {
            parts.entry(e.iter().sum()).or_insert_with(|| LaurentPoly::zero(p.context())).add_term(e.clone(), c.clone());
        }
        for (d, h) in parts {
            prop_assert_eq!(expand_in_basis(&h, Basis::Monomial).unwrap().reconstruct().unwrap(), h.clone());
            if d as usize <= h.nvars() {
                prop_assert_eq!(expand_in_basis(&h, Basis::PowerSum).unwrap().reconstruct().unwrap(), h.clone());
            }
        }
    }
}

#[test]
fn pairing_of_monomials_is_orthonormal() {
    let z = |e: Vec<i32>| LaurentPoly::monomial(ctx(2), e, FieldElement::one()).unwrap();
    assert!((&z(vec![1, 0]).bar() * &z(vec![1, 0])).constant_term().is_one());
    assert!((&z(vec![1, 0]).bar() * &z(vec![0, 1])).constant_term().is_zero());
}
