//! Symmetric-function bases and the two scalar products on them.
//!
//! Monomial symmetric functions `m_λ`, power sums `p_λ` and, as a pure
//! `β = 1` oracle, Schur polynomials from the bialternant formula.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldElement, Rational};
use crate::linalg;
use crate::partitions::{partitions_of, Partition};
use crate::poly::{Exponent, LaurentPoly, VarContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    PowerSum,
}

/// Coordinates of a homogeneous symmetric polynomial in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    basis: Basis,
    degree: u32,
    ctx: VarContext,
    coords: BTreeMap<Partition, FieldElement>,
}

impl BasisExpansion {
    /// Builds an expansion, checking that every key has weight `degree` and
    /// (for the monomial basis) fits in the variable count.
    pub fn new(
        basis: Basis,
        degree: u32,
        ctx: VarContext,
        coords: impl IntoIterator<Item = (Partition, FieldElement)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (lambda, c) in coords {
            if lambda.weight() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: lambda.weight() });
            }
            if basis == Basis::Monomial && lambda.len() > ctx.nvars() {
                return Err(Error::TooManyParts { length: lambda.len(), max: ctx.nvars() });
            }
            if basis == Basis::PowerSum && degree as usize > ctx.nvars() {
                return Err(Error::DegreeExceedsVariables { degree, nvars: ctx.nvars() });
            }
            if !c.is_zero() {
                map.insert(lambda, c);
            }
        }
        Ok(BasisExpansion { basis, degree, ctx, coords: map })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn context(&self) -> VarContext {
        self.ctx
    }

    /// Nonzero coordinates, dominant partitions first.
    pub fn coords(&self) -> impl Iterator<Item = (&Partition, &FieldElement)> {
        self.coords.iter().rev()
    }

    pub fn coeff(&self, lambda: &Partition) -> FieldElement {
        self.coords.get(lambda).cloned().unwrap_or_else(FieldElement::zero)
    }

    /// The polynomial these coordinates describe.
    pub fn reconstruct(&self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.ctx);
        for (lambda, c) in &self.coords {
            let element = match self.basis {
                Basis::Monomial => monomial_sym(lambda, self.ctx)?,
                Basis::PowerSum => power_sum(lambda, self.ctx),
            };
            out = &out + &element.scale(c);
        }
        Ok(out)
    }
}

/// Steps `v` to the next lexicographic permutation; false after the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct rearrangements of `values`.
pub(crate) fn distinct_permutations(values: &[i32]) -> Vec<Exponent> {
    let mut current = values.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

/// `m_λ`: the sum of the distinct permutations of `z^λ`.
pub fn monomial_sym(lambda: &Partition, ctx: VarContext) -> Result<LaurentPoly> {
    let padded = lambda
        .padded(ctx.nvars())
        .map_err(|_| Error::TooManyParts { length: lambda.len(), max: ctx.nvars() })?;
    let exps: Vec<i32> = padded.iter().map(|&p| p as i32).collect();
    LaurentPoly::from_terms(
        ctx,
        distinct_permutations(&exps).into_iter().map(|e| (e, FieldElement::one())),
    )
}

/// `p_i = Σ_k z_k^i`.
fn power_sum_single(i: u32, ctx: VarContext) -> LaurentPoly {
    let n = ctx.nvars();
    LaurentPoly::from_terms(
        ctx,
        (0..n).map(|k| {
            let mut e = vec![0; n];
            e[k] = i as i32;
            (e, FieldElement::one())
        }),
    )
    .expect("exponents have the context length")
}

/// `p_λ = p_{λ1} p_{λ2} ⋯`.
pub fn power_sum(lambda: &Partition, ctx: VarContext) -> LaurentPoly {
    lambda
        .parts()
        .iter()
        .fold(LaurentPoly::one(ctx), |acc, &i| &acc * &power_sum_single(i, ctx))
}

fn check_expandable(p: &LaurentPoly) -> Result<u32> {
    if p.is_laurent() {
        return Err(Error::LaurentInput);
    }
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    match p.homogeneous_degree() {
        None => Err(Error::NotHomogeneous),
        Some(None) => Ok(0),
        Some(Some(d)) => Ok(d as u32),
    }
}

/// Monomial coordinates read off the dominant (weakly decreasing) exponents.
fn monomial_coords(p: &LaurentPoly) -> Vec<(Partition, FieldElement)> {
    p.terms()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| {
            let parts: Vec<u32> = e.iter().map(|&x| x as u32).collect();
            (Partition::from_parts(&parts).expect("weakly decreasing"), c.clone())
        })
        .collect()
}

/// Coordinates of `p` in the monomial or power-sum basis.
///
/// The input must be a symmetric, homogeneous ordinary polynomial. Power sums
/// only form a basis of degree-`n` symmetric polynomials when `n <= N`.
pub fn expand_in_basis(p: &LaurentPoly, basis: Basis) -> Result<BasisExpansion> {
    let degree = check_expandable(p)?;
    let ctx = p.context();
    let m_coords = monomial_coords(p);
    match basis {
        Basis::Monomial => BasisExpansion::new(basis, degree, ctx, m_coords),
        Basis::PowerSum => {
            if degree as usize > ctx.nvars() {
                return Err(Error::DegreeExceedsVariables { degree, nvars: ctx.nvars() });
            }
            let parts = partitions_of(degree, ctx.nvars());
            // column μ holds the monomial coordinates of p_μ
            let columns: Vec<BasisExpansion> = parts
                .iter()
                .map(|mu| expand_in_basis(&power_sum(mu, ctx), Basis::Monomial))
                .collect::<Result<_>>()?;
            let rows: Vec<Vec<FieldElement>> = parts
                .iter()
                .map(|nu| columns.iter().map(|col| col.coeff(nu)).collect())
                .collect();
            let target = BasisExpansion::new(Basis::Monomial, degree, ctx, m_coords)?;
            let rhs: Vec<FieldElement> = parts.iter().map(|nu| target.coeff(nu)).collect();
            let solution = linalg::solve(&rows, &rhs)?;
            BasisExpansion::new(basis, degree, ctx, parts.into_iter().zip(solution))
        }
    }
}

/// `<p_λ, p_μ> = δ_λμ z_λ β^{-l(λ)}`, extended bilinearly.
pub fn scalar_product_p(f: &BasisExpansion, g: &BasisExpansion) -> Result<FieldElement> {
    if f.basis != Basis::PowerSum || g.basis != Basis::PowerSum {
        return Err(Error::BasisMismatch);
    }
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch { left: f.degree, right: g.degree });
    }
    let beta_inv = FieldElement::beta().inv()?;
    let mut total = FieldElement::zero();
    for (lambda, a) in &f.coords {
        if let Some(b) = g.coords.get(lambda) {
            let weight = beta_inv
                .pow(lambda.len() as u32)
                .scale(&Rational::from_integer(lambda.z_factor().into()));
            total = &total + &(&(a * b) * &weight);
        }
    }
    Ok(total)
}

/// `Π_{j<k} (z_j - z_k)^β (1/z_j - 1/z_k)^β` for a positive integer `β`.
pub fn circle_weight(ctx: VarContext, beta: u32) -> LaurentPoly {
    let n = ctx.nvars();
    let mut w = LaurentPoly::one(ctx);
    for j in 0..n {
        for k in j + 1..n {
            let zj = LaurentPoly::var(ctx, j).expect("in range");
            let zk = LaurentPoly::var(ctx, k).expect("in range");
            let diff = &zj - &zk;
            let pair = &diff * &diff.bar();
            w = &w * &pair.pow(beta);
        }
    }
    w
}

/// The torus inner product as a constant term, with `β` a positive integer.
///
/// Returns `CT(W · f · bar(g))` with `W` from [`circle_weight`]; the `1/(2π)^N`
/// measure normalization is dropped.
pub fn circle_inner_product(f: &LaurentPoly, g: &LaurentPoly, beta: &Rational) -> Result<Rational> {
    if !beta.is_integer() || !beta.is_positive() {
        return Err(Error::NonIntegerBeta);
    }
    let beta_int: u32 = beta.to_integer().try_into().map_err(|_| Error::NonIntegerBeta)?;
    let ctx = f.context();
    let f = f.specialize(beta)?;
    let g = g.specialize(beta)?;
    let integrand = f.checked_mul(&g.bar())?;
    let weight = circle_weight(ctx, beta_int);
    let mut total = Rational::zero();
    for (e, c) in integrand.terms() {
        let opposite: Exponent = e.iter().map(|x| -x).collect();
        let w = weight.coeff(&opposite);
        if !w.is_zero() {
            let product = c * &w;
            total += product.as_rational().expect("specialized coefficients are constants");
        }
    }
    Ok(total)
}

/// Permutations of `0..n` with their signs.
pub(crate) fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        out.push((perm.clone(), inversions % 2 == 0));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn alternant(exps: &[i32], ctx: VarContext) -> LaurentPoly {
    let n = ctx.nvars();
    let mut out = LaurentPoly::zero(ctx);
    for (perm, even) in signed_permutations(n) {
        let mut e = vec![0; n];
        for (row, &col) in perm.iter().enumerate() {
            e[col] = exps[row];
        }
        let sign = if even { FieldElement::one() } else { FieldElement::from_int(-1) };
        out.add_term(e, sign);
    }
    out
}

/// Schur polynomial `s_λ` as the bialternant `a_{λ+δ} / a_δ`.
pub fn schur(lambda: &Partition, ctx: VarContext) -> Result<LaurentPoly> {
    let n = ctx.nvars();
    let padded = lambda
        .padded(n)
        .map_err(|_| Error::TooManyParts { length: lambda.len(), max: n })?;
    let exps: Vec<i32> = padded.iter().enumerate().map(|(j, &p)| p as i32 + (n - 1 - j) as i32).collect();
    let mut quotient = alternant(&exps, ctx);
    for i in 0..n {
        for j in i + 1..n {
            quotient = quotient.divide_by_difference(i, j)?;
        }
    }
    Ok(quotient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ratio;

    fn ctx(n: usize) -> VarContext {
        VarContext::new(n).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    fn mono(n: usize, exp: &[i32], c: i64) -> LaurentPoly {
        LaurentPoly::monomial(ctx(n), exp.to_vec(), FieldElement::from_int(c)).unwrap()
    }

    fn sum(ps: &[LaurentPoly]) -> LaurentPoly {
        ps.iter().fold(LaurentPoly::zero(ps[0].context()), |a, b| &a + b)
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(
            monomial_sym(&p(&[2, 1]), ctx(2)).unwrap(),
            sum(&[mono(2, &[2, 1], 1), mono(2, &[1, 2], 1)])
        );
        assert_eq!(
            monomial_sym(&p(&[1, 1]), ctx(3)).unwrap(),
            sum(&[mono(3, &[1, 1, 0], 1), mono(3, &[1, 0, 1], 1), mono(3, &[0, 1, 1], 1)])
        );
        assert_eq!(monomial_sym(&p(&[2, 2]), ctx(2)).unwrap(), mono(2, &[2, 2], 1));
        assert_eq!(
            monomial_sym(&p(&[1, 1, 1]), ctx(2)),
            Err(Error::TooManyParts { length: 3, max: 2 })
        );
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(&p(&[2]), ctx(2)), sum(&[mono(2, &[2, 0], 1), mono(2, &[0, 2], 1)]));
        assert_eq!(
            power_sum(&p(&[1, 1]), ctx(2)),
            sum(&[mono(2, &[2, 0], 1), mono(2, &[1, 1], 2), mono(2, &[0, 2], 1)])
        );
        assert_eq!(power_sum(&Partition::empty(), ctx(3)), LaurentPoly::one(ctx(3)));
    }

    #[test]
    fn expansion_examples() {
        let f = sum(&[mono(2, &[2, 0], 1), mono(2, &[0, 2], 1), mono(2, &[1, 1], 2)]);
        let m = expand_in_basis(&f, Basis::Monomial).unwrap();
        assert_eq!(m.coeff(&p(&[2])), FieldElement::one());
        assert_eq!(m.coeff(&p(&[1, 1])), FieldElement::from_int(2));

        let m11 = monomial_sym(&p(&[1, 1]), ctx(2)).unwrap();
        let e = expand_in_basis(&m11, Basis::PowerSum).unwrap();
        assert_eq!(e.coeff(&p(&[1, 1])), FieldElement::from_rational(ratio(1, 2)));
        assert_eq!(e.coeff(&p(&[2])), FieldElement::from_rational(ratio(-1, 2)));

        assert_eq!(expand_in_basis(&mono(2, &[2, 1], 1), Basis::Monomial), Err(Error::NotSymmetric));
        let mixed = sum(&[mono(2, &[1, 0], 1), mono(2, &[0, 1], 1), mono(2, &[0, 0], 1)]);
        assert_eq!(expand_in_basis(&mixed, Basis::Monomial), Err(Error::NotHomogeneous));
        let m3 = monomial_sym(&p(&[3]), ctx(2)).unwrap();
        assert_eq!(
            expand_in_basis(&m3, Basis::PowerSum),
            Err(Error::DegreeExceedsVariables { degree: 3, nvars: 2 })
        );
    }

    #[test]
    fn constant_expands_to_empty_partition() {
        let one = LaurentPoly::one(ctx(2));
        for basis in [Basis::Monomial, Basis::PowerSum] {
            let e = expand_in_basis(&one, basis).unwrap();
            assert_eq!(e.coeff(&Partition::empty()), FieldElement::one());
        }
    }

    #[test]
    fn scalar_product_examples() {
        let c = ctx(3);
        let pe = |parts: &[u32]| expand_in_basis(&power_sum(&p(parts), c), Basis::PowerSum).unwrap();
        let b_inv = FieldElement::beta().inv().unwrap();
        assert_eq!(scalar_product_p(&pe(&[1]), &pe(&[1])).unwrap(), b_inv);
        assert!(scalar_product_p(&pe(&[2]), &pe(&[1, 1])).unwrap().is_zero());
        assert_eq!(
            scalar_product_p(&pe(&[2, 1]), &pe(&[2, 1])).unwrap(),
            &FieldElement::from_int(2) * &b_inv.pow(2)
        );
        let m = expand_in_basis(&power_sum(&p(&[1]), c), Basis::Monomial).unwrap();
        assert_eq!(scalar_product_p(&m, &pe(&[1])), Err(Error::BasisMismatch));
    }

    #[test]
    fn circle_examples() {
        let c = ctx(2);
        let one = LaurentPoly::one(c);
        let e1 = power_sum(&p(&[1]), c);
        assert_eq!(circle_inner_product(&one, &one, &crate::field::rat(1)).unwrap(), Rational::from_integer(2.into()));
        assert!(circle_inner_product(&one, &e1, &crate::field::rat(1)).unwrap().is_zero());
        assert_eq!(
            circle_inner_product(&one, &one, &Rational::from_integer(2.into())).unwrap(),
            Rational::from_integer(6.into())
        );
        assert_eq!(circle_inner_product(&one, &one, &ratio(1, 2)), Err(Error::NonIntegerBeta));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p(&[1]), ctx(2)).unwrap(), power_sum(&p(&[1]), ctx(2)));
        let s21 = schur(&p(&[2, 1]), ctx(3)).unwrap();
        let expected = &monomial_sym(&p(&[2, 1]), ctx(3)).unwrap()
            + &monomial_sym(&p(&[1, 1, 1]), ctx(3)).unwrap().scale(&FieldElement::from_int(2));
        assert_eq!(s21, expected);
        assert_eq!(schur(&p(&[1, 1]), ctx(2)).unwrap(), mono(2, &[1, 1], 1));
    }
}
