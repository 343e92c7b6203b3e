//! The coefficient field `Q(β)`.
//!
//! [`BetaPoly`] is a dense univariate polynomial in `β` over the rationals,
//! [`FieldElement`] a reduced quotient of two of them. Every arithmetic
//! result is canonical: numerator and denominator are coprime and the
//! denominator is monic, so structural equality is equality of rational
//! functions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational number from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational number `n/d`; panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial in `β` with rational coefficients, lowest power first.
///
/// No trailing zero coefficients are stored; the zero polynomial is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BetaPoly {
    coeffs: Vec<Rational>,
}

impl BetaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The generator `β`.
    pub fn beta() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BetaPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Coefficients, ascending powers of `β`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// The constant polynomial `c`, if this is one.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BetaPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `β^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        BetaPoly { coeffs }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &BetaPoly) -> Result<(BetaPoly, BetaPoly)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Divides every coefficient by the leading one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) if !lead.is_one() => {
                let inv = lead.recip();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &BetaPoly) -> BetaPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    fn add_ref(&self, other: &BetaPoly) -> BetaPoly {
        let (long, short) =
            if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Self::from_coeffs(coeffs)
    }

    fn neg_ref(&self) -> BetaPoly {
        BetaPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn mul_ref(&self, other: &BetaPoly) -> BetaPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }
}

impl fmt::Display for BetaPoly {
    /// Highest power first, e.g. `2β^4 + 4β^3 + 2β^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !magnitude.is_one();
            if show_coeff {
                if magnitude.is_integer() || k == 0 {
                    write!(f, "{magnitude}")?;
                } else {
                    write!(f, "({magnitude})")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("β")?,
                _ => write!(f, "β^{k}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($ty:ty, $trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.$inner(rhs)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$inner(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$inner(rhs)
            }
        }
        impl $trait<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$inner(&rhs)
            }
        }
    };
}

impl BetaPoly {
    fn sub_ref(&self, other: &BetaPoly) -> BetaPoly {
        self.add_ref(&other.neg_ref())
    }
}

forward_binop!(BetaPoly, Add, add, add_ref);
forward_binop!(BetaPoly, Sub, sub, sub_ref);
forward_binop!(BetaPoly, Mul, mul, mul_ref);

impl Neg for BetaPoly {
    type Output = BetaPoly;
    fn neg(self) -> BetaPoly {
        self.neg_ref()
    }
}

impl Neg for &BetaPoly {
    type Output = BetaPoly;
    fn neg(self) -> BetaPoly {
        self.neg_ref()
    }
}

/// Element of `Q(β)` in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    num: BetaPoly,
    den: BetaPoly,
}

/// The four field operations, for callers that dispatch on an operator tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement { num: BetaPoly::zero(), den: BetaPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(c: Rational) -> Self {
        FieldElement { num: BetaPoly::constant(c), den: BetaPoly::one() }
    }

    /// The generator `β`.
    pub fn beta() -> Self {
        Self::from_poly(BetaPoly::beta())
    }

    /// `a + bβ` with integer coefficients.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_poly(BetaPoly::from_ints(&[a, b]))
    }

    pub fn from_poly(num: BetaPoly) -> Self {
        FieldElement { num, den: BetaPoly::one() }
    }

    /// Builds `num / den` and reduces it to canonical form.
    pub fn from_fraction(num: BetaPoly, den: BetaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: BetaPoly, den: BetaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).expect("gcd nonzero").0, den.div_rem(&g).expect("gcd nonzero").0)
            }
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            FieldElement { num, den }
        } else {
            let inv = lead.recip();
            FieldElement { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numerator(&self) -> &BetaPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BetaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is `1`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational number, if it does not depend on `β`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Dispatches one of the four field operations.
    pub fn apply(&self, op: FieldOp, rhs: &FieldElement) -> Result<Self> {
        Ok(match op {
            FieldOp::Add => self + rhs,
            FieldOp::Sub => self - rhs,
            FieldOp::Mul => self * rhs,
            FieldOp::Div => self.checked_div(rhs)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FieldElement { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Rising factorial `x (x+1) ⋯ (x+n-1)`, with `(x)_0 = 1`.
    pub fn pochhammer(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, k| &acc * &(self + &Self::from_int(i64::from(k))))
    }

    /// Value at `β = beta`.
    pub fn specialize(&self, beta: &Rational) -> Result<Rational> {
        let den = self.den.eval(beta);
        if den.is_zero() {
            return Err(Error::PoleAtValue);
        }
        Ok(self.num.eval(beta) / den)
    }

    fn add_ref(&self, rhs: &FieldElement) -> FieldElement {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return Self::canonical(num, self.den.clone());
        }
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        Self::canonical(num, &self.den * &rhs.den)
    }

    fn sub_ref(&self, rhs: &FieldElement) -> FieldElement {
        self.add_ref(&-rhs)
    }

    fn mul_ref(&self, rhs: &FieldElement) -> FieldElement {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        Self::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    fn div_ref(&self, rhs: &FieldElement) -> FieldElement {
        self.checked_div(rhs).expect("division by zero in Q(β)")
    }
}

forward_binop!(FieldElement, Add, add, add_ref);
forward_binop!(FieldElement, Sub, sub, sub_ref);
forward_binop!(FieldElement, Mul, mul, mul_ref);
forward_binop!(FieldElement, Div, div, div_ref);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for FieldElement {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl From<BetaPoly> for FieldElement {
    fn from(p: BetaPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for FieldElement {
    /// `num` alone when the denominator is 1, otherwise `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &BetaPoly| p.coeffs.iter().filter(|c| !c.is_zero()).count() > 1;
        match (wrap(&self.num), wrap(&self.den)) {
            (false, false) => write!(f, "{}/{}", self.num, self.den),
            (true, false) => write!(f, "({})/{}", self.num, self.den),
            (false, true) => write!(f, "{}/({})", self.num, self.den),
            (true, true) => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn b() -> FieldElement {
        FieldElement::beta()
    }

    #[test]
    fn arithmetic_examples() {
        let one = FieldElement::one();
        assert_eq!(&b() + &one, FieldElement::linear(1, 1));

        let num = FieldElement::from_poly(BetaPoly::from_ints(&[-1, 0, 1]));
        let den = FieldElement::linear(-1, 1);
        assert_eq!(num.checked_div(&den).unwrap(), FieldElement::linear(1, 1));

        let two = FieldElement::from_int(2);
        let left = (&two * &b()).checked_div(&(&b() + &one)).unwrap();
        let right = (&b() + &one).checked_div(&two).unwrap();
        assert_eq!(&left * &right, b());

        assert_eq!(one.checked_div(&FieldElement::zero()), Err(Error::DivisionByZero));
        assert_eq!(one.apply(FieldOp::Sub, &one).unwrap(), FieldElement::zero());
    }

    #[test]
    fn canonical_denominator_is_monic() {
        // 1 / (2β + 2) = (1/2) / (β + 1)
        let x = FieldElement::one().checked_div(&FieldElement::linear(2, 2)).unwrap();
        assert!(x.denominator().leading().unwrap().is_one());
        assert_eq!(x.numerator().as_constant(), Some(ratio(1, 2)));
        assert_eq!(x.denominator(), &BetaPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(b().pochhammer(0), FieldElement::one());
        assert_eq!(b().pochhammer(2), FieldElement::from_poly(BetaPoly::from_ints(&[0, 1, 1])));
        let x = FieldElement::linear(2, 2);
        assert_eq!(x.pochhammer(1), x);
    }

    #[test]
    fn specialize_examples() {
        let x = (&FieldElement::from_int(2) * &b()).checked_div(&FieldElement::linear(1, 1)).unwrap();
        assert_eq!(x.specialize(&rat(1)).unwrap(), rat(1));
        let inv = b().inv().unwrap();
        assert_eq!(inv.specialize(&rat(0)), Err(Error::PoleAtValue));
        let y = FieldElement::from_poly(BetaPoly::from_ints(&[0, 1, 1]));
        assert_eq!(y.specialize(&ratio(1, 2)).unwrap(), ratio(3, 4));
    }

    #[test]
    fn display() {
        let c = FieldElement::from_poly(BetaPoly::from_ints(&[0, 0, 2, 4, 2]));
        assert_eq!(c.to_string(), "2β^4 + 4β^3 + 2β^2");
        let x = (&FieldElement::from_int(2) * &b()).checked_div(&FieldElement::linear(1, 1)).unwrap();
        assert_eq!(x.to_string(), "2β/(β + 1)");
        assert_eq!(FieldElement::from_rational(ratio(-1, 2)).to_string(), "-1/2");
        assert_eq!(FieldElement::zero().to_string(), "0");
    }

    #[test]
    fn gcd_of_coprime_and_shared_factors() {
        let p = BetaPoly::from_ints(&[-1, 0, 1]); // (β-1)(β+1)
        let q = BetaPoly::from_ints(&[2, 3, 1]); // (β+1)(β+2)
        assert_eq!(p.gcd(&q), BetaPoly::from_ints(&[1, 1]));
        assert_eq!(BetaPoly::from_ints(&[1, 1]).gcd(&BetaPoly::from_ints(&[2, 1])), BetaPoly::one());
    }
}
