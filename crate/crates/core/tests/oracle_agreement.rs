mod common;

use common::{ctx, part};
use csjack_core::field::BetaPoly;
use csjack_core::operators::{apply_h, apply_hat_h, apply_n_tilde};
use csjack_core::oracle::{
    jack_by_gram_schmidt, jack_by_gram_schmidt_with_order, jack_by_symmetrization, jack_by_triangular_h,
    nonsym_eigenfunction,
};
use csjack_core::partitions::partitions_of;
use csjack_core::rodrigues::{eigenvalue_epsilon, jack_monic};
use csjack_core::symbases::monomial_sym;
use csjack_core::{FieldElement, LaurentPoly, Partition};

fn frac(num: &[i64], den: &[i64]) -> FieldElement {
    FieldElement::from_fraction(BetaPoly::from_ints(num), BetaPoly::from_ints(den)).unwrap()
}

fn m(parts: &[u32], n: usize) -> LaurentPoly {
    monomial_sym(&part(parts), ctx(n)).unwrap()
}

#[test]
fn frozen_reference_expansions() {
    // values produced by the sympy script in tests/oracle
    let cases: Vec<(&[u32], usize, LaurentPoly)> = vec![
        (&[2], 2, &m(&[2], 2) + &m(&[1, 1], 2).scale(&frac(&[0, 2], &[1, 1]))),
        (&[2, 1], 3, &m(&[2, 1], 3) + &m(&[1, 1, 1], 3).scale(&frac(&[0, 6], &[1, 2]))),
        (
            &[3, 1],
            3,
            &(&m(&[3, 1], 3) + &m(&[2, 2], 3).scale(&frac(&[0, 2], &[1, 1])))
                + &m(&[2, 1, 1], 3).scale(&frac(&[0, 3, 5], &[1, 2, 1])),
        ),
        (&[2, 2], 3, &m(&[2, 2], 3) + &m(&[2, 1, 1], 3).scale(&frac(&[0, 2], &[1, 1]))),
        (&[3], 2, &m(&[3], 2) + &m(&[2, 1], 2).scale(&frac(&[0, 3], &[2, 1]))),
    ];
    for (parts, n, expected) in cases {
        let lambda = part(parts);
        assert_eq!(jack_monic(&lambda, ctx(n)).unwrap(), expected, "rodrigues {lambda}");
        assert_eq!(jack_by_triangular_h(&lambda, ctx(n)).unwrap(), expected, "triangular {lambda}");
    }
}

#[test]
fn three_constructions_agree_on_small_partitions() {
    for n in 2..=3 {
        for degree in 0..=4 {
            for lambda in partitions_of(degree, n - 1) {
                let rodrigues = jack_monic(&lambda, ctx(n)).unwrap();
                assert_eq!(jack_by_triangular_h(&lambda, ctx(n)).unwrap(), rodrigues, "{lambda} N={n}");
                if degree as usize <= n {
                    assert_eq!(jack_by_gram_schmidt(&lambda, ctx(n)).unwrap(), rodrigues, "{lambda} N={n}");
                }
                assert_eq!(apply_h(&rodrigues).unwrap(), rodrigues.scale(&eigenvalue_epsilon(&lambda, n).unwrap()));
            }
        }
    }
}

#[test]
fn gram_schmidt_is_independent_of_the_extension() {
    // least n(λ) = Σ (i-1) λ_i first is another linear extension of dominance
    let weight = |p: &Partition| -> u32 { p.parts().iter().enumerate().map(|(i, &x)| i as u32 * x).sum() };
    // dominance is total below degree 6, so only degree 6 separates the orders
    let mut separated = false;
    for n in [3, 4, 6] {
        for degree in 1..=n as u32 {
            let mut order = partitions_of(degree, n);
            order.sort_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| a.cmp(b)));
            separated |= order != partitions_of(degree, n);
            for lambda in partitions_of(degree, n) {
                assert_eq!(
                    jack_by_gram_schmidt_with_order(&lambda, ctx(n), &order).unwrap(),
                    jack_by_gram_schmidt(&lambda, ctx(n)).unwrap(),
                    "{lambda} N={n}"
                );
            }
        }
    }
    assert!(separated);
}

#[test]
fn nonsymmetric_route() {
    for n in 2..=3 {
        for degree in 0..=4 {
            for lambda in partitions_of(degree, n) {
                let Ok(e) = nonsym_eigenfunction(&lambda, ctx(n)) else {
                    continue;
                };
                let padded = lambda.padded(n).unwrap();
                if !lambda.is_empty() {
                    for (i, delta) in e.eigenvalues.iter().enumerate() {
                        let expected = FieldElement::linear(i64::from(padded[i]), (n - 1 - i) as i64);
                        assert_eq!(delta, &expected, "{lambda} N={n} i={i}");
                    }
                }
                let eps = eigenvalue_epsilon(&lambda, n).unwrap();
                assert_eq!(apply_hat_h(&e.chi).unwrap(), e.chi.scale(&eps));
                assert_eq!(jack_by_symmetrization(&lambda, ctx(n)).unwrap(), jack_monic(&lambda, ctx(n)).unwrap());
            }
        }
    }
}

#[test]
fn annihilation_of_short_partitions() {
    for n in 2..=3 {
        for degree in 0..=4 {
            for lambda in partitions_of(degree, n - 1) {
                let phi = jack_monic(&lambda, ctx(n)).unwrap();
                for i in lambda.len()..n {
                    assert!(apply_n_tilde(i + 1, &phi).unwrap().is_zero(), "{lambda} N={n} i={i}");
                }
            }
        }
    }
}
