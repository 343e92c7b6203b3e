#![allow(dead_code)]

use csjack_core::field::BetaPoly;
use csjack_core::symbases::monomial_sym;
use csjack_core::{FieldElement, LaurentPoly, Partition, VarContext};
use proptest::prelude::*;

pub fn ctx(n: usize) -> VarContext {
    VarContext::new(n).unwrap()
}

pub fn part(parts: &[u32]) -> Partition {
    Partition::from_parts(parts).unwrap()
}

/// Small elements of `Q(β)`: ratios of low-degree integer polynomials.
pub fn field_element() -> impl Strategy<Value = FieldElement> {
    let poly = prop::collection::vec(-4i64..=4, 1..=3);
    (poly.clone(), poly).prop_filter_map("zero denominator", |(num, den)| {
        FieldElement::from_fraction(BetaPoly::from_ints(&num), BetaPoly::from_ints(&den)).ok()
    })
}

/// Coefficients that are mostly integers with an occasional `β`.
pub fn coefficient() -> impl Strategy<Value = FieldElement> {
    (-3i64..=3, -1i64..=1).prop_map(|(a, b)| FieldElement::linear(a, b))
}

/// Polynomials in `nvars` variables with total degree at most `max_degree`.
pub fn poly(nvars: usize, max_degree: i32) -> impl Strategy<Value = LaurentPoly> {
    let term = (prop::collection::vec(0..=max_degree, nvars), coefficient());
    prop::collection::vec(term, 1..=4).prop_map(move |terms| {
        let terms = terms.into_iter().filter_map(|(mut e, c)| {
            // cap total degree by trimming from the end
            let mut excess = e.iter().sum::<i32>() - max_degree;
            for x in e.iter_mut().rev() {
                let cut = excess.min(*x).max(0);
                *x -= cut;
                excess -= cut;
            }
            (!c.is_zero()).then_some((e, c))
        });
        LaurentPoly::from_terms(ctx(nvars), terms).unwrap()
    })
}

pub fn sized_poly(max_nvars: usize, max_degree: i32) -> impl Strategy<Value = LaurentPoly> {
    (2..=max_nvars).prop_flat_map(move |n| poly(n, max_degree))
}

/// Symmetric polynomials as small combinations of monomial symmetric functions.
pub fn symmetric_poly(nvars: usize, max_degree: u32) -> impl Strategy<Value = LaurentPoly> {
    let candidates: Vec<Partition> = (0..=max_degree)
        .flat_map(|d| csjack_core::partitions::partitions_of(d, nvars))
        .collect();
    let pick = prop::collection::vec((0..candidates.len(), coefficient()), 1..=3);
    pick.prop_map(move |choice| {
        let mut p = LaurentPoly::zero(ctx(nvars));
        for (k, c) in choice {
            p = &p + &monomial_sym(&candidates[k], ctx(nvars)).unwrap().scale(&c);
        }
        p
    })
}

pub fn sized_symmetric_poly(max_nvars: usize, max_degree: u32) -> impl Strategy<Value = LaurentPoly> {
    (2..=max_nvars).prop_flat_map(move |n| symmetric_poly(n, max_degree))
}
