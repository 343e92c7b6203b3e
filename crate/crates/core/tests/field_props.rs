mod common;

use common::field_element;
use csjack_core::field::{ratio, BetaPoly};
use csjack_core::FieldElement;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in field_element(), b in field_element(), c in field_element()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in field_element()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn canonical_form_is_unique(a in field_element(), b in field_element()) {
        // a == b as rational functions iff num_a den_b == num_b den_a
        let cross = a.numerator() * b.denominator() == b.numerator() * a.denominator();
        prop_assert_eq!(cross, a == b);
        // rescaling numerator and denominator together changes nothing
        let k = BetaPoly::from_ints(&[3, 1]);
        let scaled = FieldElement::from_fraction(a.numerator() * &k, a.denominator() * &k).unwrap();
        prop_assert_eq!(scaled, a.clone());
        prop_assert!(a.denominator().leading().map_or(false, num_traits::One::is_one));
    }

    #[test]
    fn specialization_is_a_homomorphism(a in field_element(), b in field_element(), n in 1i64..7, d in 1i64..5) {
        let x = ratio(n, d);
        if let (Ok(sa), Ok(sb)) = (a.specialize(&x), b.specialize(&x)) {
            prop_assert_eq!((&a * &b).specialize(&x).unwrap(), &sa * &sb);
            prop_assert_eq!((&a + &b).specialize(&x).unwrap(), &sa + &sb);
        }
    }
}
