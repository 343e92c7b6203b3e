//! Jack polynomials from strings of creation operators.
//!
//! For `λ = (λ_1, …, λ_{N-1})` the unnormalized polynomial is
//!
//! ```text
//! φ_λ = (B_{N-1}^+)^{λ_{N-1}} ⋯ (B_2^+)^{λ_2-λ_3} (B_1^+)^{λ_1-λ_2} · 1
//! ```
//!
//! with `(B_1^+)` acting first, and `J_λ = φ_λ / c_λ` is monic in `m_λ`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Rational};
use crate::operators::{apply_b_plus, galilei_boost, IndexSet};
use crate::partitions::Partition;
use crate::poly::{LaurentPoly, VarContext};
use crate::symbases::{expand_in_basis, Basis, BasisExpansion};

/// How the output polynomial is scaled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// Coefficient of `m_λ` equal to one.
    Monic,
    /// Stanley's `J_λ`: coefficient of `m_{(1^n)}` equal to `n!`.
    Stanley,
    /// The bare creation-operator output `φ_λ`.
    Raw,
}

impl Normalization {
    pub fn name(self) -> &'static str {
        match self {
            Normalization::Monic => "monic",
            Normalization::Stanley => "stanley",
            Normalization::Raw => "raw",
        }
    }
}

/// A Jack polynomial together with its normalization data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackResult {
    pub lambda: Partition,
    pub context: VarContext,
    /// `φ_λ`, boosted by `G^{λ_N}` when `l(λ) = N`.
    pub raw: LaurentPoly,
    /// `c_λ` with `raw = c · monic`.
    pub c: FieldElement,
    pub monic: LaurentPoly,
    pub normalization: Normalization,
}

impl JackResult {
    /// The polynomial in the requested normalization.
    pub fn output(&self) -> LaurentPoly {
        match self.normalization {
            Normalization::Monic => self.monic.clone(),
            Normalization::Raw => self.raw.clone(),
            Normalization::Stanley => self.monic.scale(&stanley_factor(&self.lambda)),
        }
    }

    /// Monomial-basis coordinates of [`JackResult::output`].
    pub fn monomial_expansion(&self) -> Result<BasisExpansion> {
        expand_in_basis(&self.output(), Basis::Monomial)
    }
}

fn too_many_parts(lambda: &Partition, max: usize) -> Error {
    Error::TooManyParts { length: lambda.len(), max }
}

/// `φ_λ` for `l(λ) <= N - 1`.
pub fn rodrigues_raw(lambda: &Partition, ctx: VarContext) -> Result<LaurentPoly> {
    let n = ctx.nvars();
    if lambda.len() + 1 > n {
        return Err(too_many_parts(lambda, n - 1));
    }
    let all = IndexSet::full(ctx);
    let mut phi = LaurentPoly::one(ctx);
    for k in 1..n {
        let times = lambda.part(k - 1) - lambda.part(k);
        for _ in 0..times {
            phi = apply_b_plus(k, &all, &phi)?;
        }
    }
    Ok(phi)
}

/// The Pochhammer product `c_λ = Π_k c_k`, over the nonzero parts of `λ`.
///
/// `c_k = Π_{m=1}^{k} (mβ + λ_{k-m+1} - λ_k)_{λ_k - λ_{k+1}}`.
fn c_product(lambda: &Partition) -> FieldElement {
    let mut c = FieldElement::one();
    for k in 1..=lambda.len() {
        let run = lambda.part(k - 1) - lambda.part(k);
        if run == 0 {
            continue;
        }
        for m in 1..=k {
            let gap = i64::from(lambda.part(k - m)) - i64::from(lambda.part(k - 1));
            c = &c * &FieldElement::linear(gap, m as i64).pochhammer(run);
        }
    }
    c
}

/// `c_λ`, the `m_λ` coefficient of `φ_λ`, for `l(λ) <= N - 1`.
pub fn c_coefficient(lambda: &Partition, ctx: VarContext) -> Result<FieldElement> {
    if lambda.len() + 1 > ctx.nvars() {
        return Err(too_many_parts(lambda, ctx.nvars() - 1));
    }
    Ok(c_product(lambda))
}

/// Ratio between Stanley's normalization and the monic one, `c_λ / β^{|λ|}`.
///
/// The product formula for `c_λ` only involves the parts of `λ`, so this is
/// also defined when `l(λ) = N`.
pub fn stanley_factor(lambda: &Partition) -> FieldElement {
    let beta_power = FieldElement::beta().pow(lambda.weight());
    c_product(lambda).checked_div(&beta_power).expect("β^n is nonzero")
}

/// Jack polynomial `J_λ(z; 1/β)` in the requested normalization.
///
/// Partitions with `l(λ) = N` are reduced to `λ - λ_N` and boosted back by
/// `G^{λ_N}`; in that case `c` and `raw` refer to the reduced partition.
pub fn jack(lambda: &Partition, ctx: VarContext, normalization: Normalization) -> Result<JackResult> {
    let n = ctx.nvars();
    if lambda.len() > n {
        return Err(too_many_parts(lambda, n));
    }
    let boost = if lambda.len() == n { lambda.part(n - 1) } else { 0 };
    let reduced = lambda.unshift(n, boost).map_err(|_| too_many_parts(lambda, n))?;
    if reduced.len() + 1 > n {
        return Err(too_many_parts(lambda, n - 1));
    }
    let phi = rodrigues_raw(&reduced, ctx)?;
    let c = c_coefficient(&reduced, ctx)?;
    let monic = phi.scale(&c.inv()?);
    let boost = boost as i32;
    Ok(JackResult {
        lambda: lambda.clone(),
        context: ctx,
        raw: galilei_boost(&phi, boost),
        c,
        monic: galilei_boost(&monic, boost),
        normalization,
    })
}

/// Monic Jack polynomial.
pub fn jack_monic(lambda: &Partition, ctx: VarContext) -> Result<LaurentPoly> {
    Ok(jack(lambda, ctx, Normalization::Monic)?.monic)
}

/// `ε(λ) = Σ_j λ_j^2 + β(N + 1 - 2j) λ_j`, the eigenvalue of `H` on `J_λ`.
pub fn eigenvalue_epsilon(lambda: &Partition, nvars: usize) -> Result<FieldElement> {
    if lambda.len() > nvars {
        return Err(too_many_parts(lambda, nvars));
    }
    let n = nvars as i64;
    let (mut constant, mut linear) = (0i64, 0i64);
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let j = idx as i64 + 1;
        let part = i64::from(part);
        constant += part * part;
        linear += (n + 1 - 2 * j) * part;
    }
    Ok(FieldElement::linear(constant, linear))
}

/// `a_λ = (λ_ℓ + β)(λ_{ℓ-1} + 2β) ⋯ (λ_1 + ℓβ)` for `ℓ = l(λ)`, padded to
/// `length` parts.
pub fn leading_coefficient(lambda: &Partition, length: usize) -> Result<FieldElement> {
    let padded = lambda.padded(length)?;
    let mut a = FieldElement::one();
    for (m, &part) in padded.iter().rev().enumerate() {
        a = &a * &FieldElement::linear(i64::from(part), m as i64 + 1);
    }
    Ok(a)
}

/// True when every `m_μ` in the expansion has `μ <= λ` in dominance.
pub fn is_dominance_triangular(expansion: &BasisExpansion, lambda: &Partition) -> bool {
    expansion.coords().all(|(mu, _)| mu.is_dominated_by(lambda))
}

/// True when every coefficient is an integer-coefficient polynomial in `1/β`.
pub fn is_integral_in_inverse_beta(c: &FieldElement) -> bool {
    let den = c.denominator();
    let den_is_power_of_beta = den.coeffs().iter().rev().skip(1).all(num_traits::Zero::is_zero);
    let num = c.numerator();
    let num_degree_ok = match (num.degree(), den.degree()) {
        (None, _) => true,
        (Some(a), Some(b)) => a <= b,
        (Some(_), None) => false,
    };
    den_is_power_of_beta && num_degree_ok && num.has_integer_coeffs()
}

/// Factorial as a field element.
pub fn factorial(n: u32) -> FieldElement {
    let value: u64 = (1..=u64::from(n)).product();
    FieldElement::from_rational(Rational::from_integer(value.into()))
}

/// The creation operators in application order, as `(i, power)` for `(B_i^+)^power`.
pub fn creation_string(lambda: &Partition, nvars: usize) -> Result<Vec<(usize, u32)>> {
    if lambda.len() + 1 > nvars {
        return Err(too_many_parts(lambda, nvars - 1));
    }
    Ok((1..nvars)
        .map(|k| (k, lambda.part(k - 1) - lambda.part(k)))
        .filter(|&(_, times)| times > 0)
        .collect())
}
