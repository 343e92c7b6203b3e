//! Sparse Laurent polynomials in `z_1..z_N` over `Q(β)`.
//!
//! Besides ring arithmetic this module provides the structural actions the
//! operators are built from: the transposition `K_ij`, the Euler derivative
//! `z_i ∂/∂z_i`, the divided difference `(1 - K_ij)/(z_i - z_j)`, the bar
//! involution `z_j -> 1/z_j` and the constant term.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, Rational};

/// Exponent vector of a monomial; entries may be negative.
pub type Exponent = Vec<i32>;

/// Number of variables a polynomial lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarContext {
    nvars: usize,
}

impl VarContext {
    pub fn new(nvars: usize) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::EmptyContext);
        }
        Ok(VarContext { nvars })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.nvars {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, nvars: self.nvars })
        }
    }
}

/// A Laurent polynomial: a finite map from exponent vectors to nonzero coefficients.
///
/// Iteration runs in descending lexicographic order of exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ctx: VarContext,
    terms: BTreeMap<Exponent, FieldElement>,
}

impl LaurentPoly {
    pub fn zero(ctx: VarContext) -> Self {
        LaurentPoly { ctx, terms: BTreeMap::new() }
    }

    pub fn one(ctx: VarContext) -> Self {
        Self::constant(ctx, FieldElement::one())
    }

    pub fn constant(ctx: VarContext, c: FieldElement) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(vec![0; ctx.nvars], c);
        p
    }

    /// `coeff · z^exp`.
    pub fn monomial(ctx: VarContext, exp: Exponent, coeff: FieldElement) -> Result<Self> {
        if exp.len() != ctx.nvars {
            return Err(Error::ContextMismatch { left: ctx.nvars, right: exp.len() });
        }
        let mut p = Self::zero(ctx);
        p.add_term(exp, coeff);
        Ok(p)
    }

    /// The variable `z_i`.
    pub fn var(ctx: VarContext, i: usize) -> Result<Self> {
        ctx.check_index(i)?;
        let mut exp = vec![0; ctx.nvars];
        exp[i] = 1;
        Self::monomial(ctx, exp, FieldElement::one())
    }

    /// Sums the given terms, merging repeated exponents.
    pub fn from_terms(
        ctx: VarContext,
        terms: impl IntoIterator<Item = (Exponent, FieldElement)>,
    ) -> Result<Self> {
        let mut p = Self::zero(ctx);
        for (exp, c) in terms {
            if exp.len() != ctx.nvars {
                return Err(Error::ContextMismatch { left: ctx.nvars, right: exp.len() });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn context(&self) -> VarContext {
        self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &FieldElement)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exp: &[i32]) -> FieldElement {
        self.terms.get(exp).cloned().unwrap_or_else(FieldElement::zero)
    }

    /// Adds `c · z^exp` in place.
    pub fn add_term(&mut self, exp: Exponent, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    fn same_context(&self, other: &LaurentPoly) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch { left: self.nvars(), right: other.nvars() })
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<Self> {
        self.same_context(other)?;
        let (mut acc, rest) =
            if self.len() >= other.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (e, c) in &rest.terms {
            acc.add_term(e.clone(), c.clone());
        }
        Ok(acc)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<Self> {
        self.same_context(other)?;
        let mut acc = self.clone();
        for (e, c) in &other.terms {
            acc.add_term(e.clone(), -c);
        }
        Ok(acc)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<Self> {
        self.same_context(other)?;
        let mut acc = Self::zero(self.ctx);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                acc.add_term(exp, c1 * c2);
            }
        }
        Ok(acc)
    }

    /// Multiplication by a field element.
    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Multiplication by the monomial `z^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        LaurentPoly {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Multiplication by `z_i`.
    pub fn mul_var(&self, i: usize) -> Result<Self> {
        self.ctx.check_index(i)?;
        let mut shift = vec![0; self.nvars()];
        shift[i] = 1;
        Ok(self.shift(&shift))
    }

    /// Applies `f` to every exponent vector; `f` must be injective.
    fn map_exponents(&self, mut f: impl FnMut(&mut Exponent)) -> Self {
        LaurentPoly {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    f(&mut e);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Rebuilds the polynomial term by term, dropping zeros.
    fn map_terms(&self, mut f: impl FnMut(&Exponent, &FieldElement) -> Option<(Exponent, FieldElement)>) -> Self {
        let mut out = Self::zero(self.ctx);
        for (e, c) in &self.terms {
            if let Some((e, c)) = f(e, c) {
                out.add_term(e, c);
            }
        }
        out
    }

    /// `K_ij p`: exchanges the exponents of `z_i` and `z_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Result<Self> {
        self.ctx.check_index(i)?;
        self.ctx.check_index(j)?;
        if i == j {
            return Ok(self.clone());
        }
        Ok(self.map_exponents(|e| e.swap(i, j)))
    }

    /// Applies the variable permutation `z_k -> z_{perm[k]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        self.map_exponents(|e| {
            let old = e.clone();
            for (k, &target) in perm.iter().enumerate() {
                e[target] = old[k];
            }
        })
    }

    /// `z_i ∂/∂z_i`: multiplies each coefficient by its `z_i` exponent.
    pub fn euler_derivative(&self, i: usize) -> Result<Self> {
        self.ctx.check_index(i)?;
        Ok(self.map_terms(|e, c| {
            (e[i] != 0).then(|| (e.clone(), c.scale(&Rational::from_integer(e[i].into()))))
        }))
    }

    /// `∂/∂z_i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        self.ctx.check_index(i)?;
        Ok(self.map_terms(|e, c| {
            (e[i] != 0).then(|| {
                let mut e2 = e.clone();
                e2[i] -= 1;
                (e2, c.scale(&Rational::from_integer(e[i].into())))
            })
        }))
    }

    /// Exact quotient `p / (z_i - z_j)` by synthetic division in `z_i`.
    ///
    /// Fails with [`Error::NonzeroRemainder`] when `z_i - z_j` does not divide `p`.
    pub fn divide_by_difference(&self, i: usize, j: usize) -> Result<Self> {
        self.ctx.check_index(i)?;
        self.ctx.check_index(j)?;
        if i == j {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        // Coefficients of p viewed as a Laurent polynomial in z_i.
        let mut by_power: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = core::mem::replace(&mut rest[i], 0);
            by_power.entry(k).or_insert_with(|| Self::zero(self.ctx)).add_term(rest, c.clone());
        }
        let low = *by_power.keys().next().expect("nonzero");
        let high = *by_power.keys().next_back().expect("nonzero");

        let mut zj = vec![0; self.nvars()];
        zj[j] = 1;
        let mut quotient = Self::zero(self.ctx);
        // carry holds b_k, the coefficient of z_i^k in the quotient
        let mut carry = Self::zero(self.ctx);
        for k in (low..high).rev() {
            let a = by_power.remove(&(k + 1)).unwrap_or_else(|| Self::zero(self.ctx));
            carry = &a + &carry.shift(&zj);
            let mut zi = vec![0; self.nvars()];
            zi[i] = k;
            quotient = &quotient + &carry.shift(&zi);
        }
        let a_low = by_power.remove(&low).unwrap_or_else(|| Self::zero(self.ctx));
        let remainder = &a_low + &carry.shift(&zj);
        if !remainder.is_zero() {
            return Err(Error::NonzeroRemainder);
        }
        Ok(quotient)
    }

    /// `((1 - K_ij) p) / (z_i - z_j)`, always an exact division.
    pub fn divided_difference(&self, i: usize, j: usize) -> Result<Self> {
        let antisym = self.checked_sub(&self.swap_vars(i, j)?)?;
        antisym.divide_by_difference(i, j)
    }

    /// `z_j -> 1/z_j` for every variable; coefficients untouched (β is real).
    pub fn bar(&self) -> Self {
        self.map_exponents(|e| e.iter_mut().for_each(|x| *x = -*x))
    }

    /// Coefficient of the all-zero exponent.
    pub fn constant_term(&self) -> FieldElement {
        self.coeff(&vec![0; self.nvars()])
    }

    /// Invariance under every adjacent transposition.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars().saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                if e[i] == e[i + 1] {
                    return true;
                }
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    /// True when some exponent is negative.
    pub fn is_laurent(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }

    /// Total degree shared by all terms; `None` when terms of different degree
    /// are present. The zero polynomial reports `Some(None)`.
    pub fn homogeneous_degree(&self) -> Option<Option<i64>> {
        let mut degrees = self.terms.keys().map(|e| e.iter().map(|&x| i64::from(x)).sum::<i64>());
        match degrees.next() {
            None => Some(None),
            Some(d) => degrees.all(|x| x == d).then_some(Some(d)),
        }
    }

    /// Substitutes `β = beta` in every coefficient.
    pub fn specialize(&self, beta: &Rational) -> Result<Self> {
        let mut out = Self::zero(self.ctx);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), FieldElement::from_rational(c.specialize(beta)?));
        }
        Ok(out)
    }

    /// True when every coefficient is a polynomial in `β`.
    pub fn has_polynomial_coeffs(&self) -> bool {
        self.terms.values().all(FieldElement::is_polynomial)
    }

    /// `p^n`.
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.ctx), |acc, _| &acc * self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (k, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*z{}", k + 1)?,
                    _ => write!(f, "*z{}^{}", k + 1, x)?,
                }
            }
        }
        Ok(())
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics on a context mismatch; use the `checked_*` form to recover.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("polynomial context mismatch")
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&FieldElement::from_int(-1))
    }
}
