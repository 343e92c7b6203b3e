//! Dunkl-type operators acting on [`LaurentPoly`].
//!
//! Products of operators act right to left: `A·B` applied to `p` means
//! `A(B(p))`. The orderings of `D_{k,J}` and of the creation-operator strings
//! depend on this convention.
//!
//! Operators built from Dunkl operators require ordinary polynomial input so
//! every divided difference is an exact polynomial division.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Rational};
use crate::poly::{LaurentPoly, VarContext};

/// A strictly increasing set of zero-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    members: Vec<usize>,
}

impl IndexSet {
    pub fn new(members: Vec<usize>, ctx: VarContext) -> Result<Self> {
        let increasing = members.windows(2).all(|w| w[0] < w[1]);
        if !increasing || members.iter().any(|&m| m >= ctx.nvars()) {
            return Err(Error::InvalidIndexSet { nvars: ctx.nvars() });
        }
        Ok(IndexSet { members })
    }

    /// `{0, …, N-1}`.
    pub fn full(ctx: VarContext) -> Self {
        IndexSet { members: (0..ctx.nvars()).collect() }
    }

    /// `{0, …, count-1}`.
    pub fn first(count: usize, ctx: VarContext) -> Result<Self> {
        Self::new((0..count).collect(), ctx)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// All subsets of the given size, in lexicographic order.
    pub fn subsets(&self, size: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(size);
        combinations(&self.members, size, 0, &mut chosen, &mut out);
        out
    }

    /// `z_J = Π_{j ∈ J} z_j` as an exponent vector.
    pub fn exponent(&self, ctx: VarContext) -> Vec<i32> {
        let mut e = vec![0; ctx.nvars()];
        for &m in &self.members {
            e[m] = 1;
        }
        e
    }
}

fn combinations(pool: &[usize], size: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
    if chosen.len() == size {
        out.push(IndexSet { members: chosen.clone() });
        return;
    }
    for k in start..pool.len() {
        if pool.len() - k < size - chosen.len() {
            break;
        }
        chosen.push(pool[k]);
        combinations(pool, size, k + 1, chosen, out);
        chosen.pop();
    }
}

fn beta_times(c: i64) -> FieldElement {
    FieldElement::beta().scale(&Rational::from_integer(c.into()))
}

fn require_ordinary(p: &LaurentPoly) -> Result<()> {
    if p.is_laurent() {
        Err(Error::LaurentInput)
    } else {
        Ok(())
    }
}

fn require_symmetric(p: &LaurentPoly) -> Result<()> {
    if p.is_symmetric() {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}

/// Dunkl operator `∇_i = ∂_i + β Σ_{j≠i} (1 - K_ij)/(z_i - z_j)`.
pub fn apply_dunkl(i: usize, p: &LaurentPoly) -> Result<LaurentPoly> {
    p.context().check_index(i)?;
    require_ordinary(p)?;
    let mut differences = LaurentPoly::zero(p.context());
    for j in (0..p.nvars()).filter(|&j| j != i) {
        differences = &differences + &p.divided_difference(i, j)?;
    }
    Ok(&p.partial_derivative(i)? + &differences.scale(&FieldElement::beta()))
}

/// `D_i = z_i ∇_i`.
pub fn apply_d(i: usize, p: &LaurentPoly) -> Result<LaurentPoly> {
    apply_dunkl(i, p)?.mul_var(i)
}

/// `D_i^power`.
pub fn apply_d_pow(i: usize, power: u32, p: &LaurentPoly) -> Result<LaurentPoly> {
    (0..power).try_fold(p.clone(), |acc, _| apply_d(i, &acc))
}

/// `D_{k,J} = (D_{j1} + kβ)(D_{j2} + (k+1)β) ⋯ (D_{jℓ} + (k+ℓ-1)β)`; the
/// rightmost factor acts first.
pub fn apply_d_string(k: u32, set: &IndexSet, p: &LaurentPoly) -> Result<LaurentPoly> {
    if set.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let mut acc = p.clone();
    for (pos, &j) in set.members().iter().enumerate().rev() {
        let shift = beta_times(i64::from(k) + pos as i64);
        acc = &apply_d(j, &acc)? + &acc.scale(&shift);
    }
    Ok(acc)
}

/// Creation operator `B_{i,J}^+ = Σ_{J'⊂J, |J'|=i} z_{J'} D_{1,J'}`.
///
/// For `i = N` this is the Galilei boost `z_1 ⋯ z_N`.
pub fn apply_b_plus(i: usize, set: &IndexSet, p: &LaurentPoly) -> Result<LaurentPoly> {
    if i == 0 || i > set.len() {
        return Err(Error::BadCardinality { requested: i, available: set.len() });
    }
    let ctx = p.context();
    if i == ctx.nvars() {
        return Ok(p.shift(&vec![1; ctx.nvars()]));
    }
    let mut out = LaurentPoly::zero(ctx);
    for sub in set.subsets(i) {
        out = &out + &apply_d_string(1, &sub, p)?.shift(&sub.exponent(ctx));
    }
    Ok(out)
}

/// `N_{i,J} = Σ_{J'⊂J, |J'|=i} D_{0,J'}`.
pub fn apply_n(i: usize, set: &IndexSet, p: &LaurentPoly) -> Result<LaurentPoly> {
    if i == 0 || i > set.len() {
        return Err(Error::BadCardinality { requested: i, available: set.len() });
    }
    let mut out = LaurentPoly::zero(p.context());
    for sub in set.subsets(i) {
        out = &out + &apply_d_string(0, &sub, p)?;
    }
    Ok(out)
}

/// `Ñ_i = N_{i,{1..i}} = D_{0,{1..i}}`.
pub fn apply_n_tilde(i: usize, p: &LaurentPoly) -> Result<LaurentPoly> {
    let set = IndexSet::first(i, p.context())?;
    apply_n(i, &set, p)
}

/// The Hamiltonian `H = H1 + βH2` in its differential form, on symmetric input.
///
/// `H1 = Σ_j (z_j ∂_j)^2` and
/// `H2 = Σ_{j<k} (z_j + z_k)/(z_j - z_k) · (z_j ∂_j - z_k ∂_k)`.
pub fn apply_h(p: &LaurentPoly) -> Result<LaurentPoly> {
    require_symmetric(p)?;
    let n = p.nvars();
    let euler: Vec<LaurentPoly> = (0..n).map(|j| p.euler_derivative(j)).collect::<Result<_>>()?;
    let mut h1 = LaurentPoly::zero(p.context());
    for (j, e) in euler.iter().enumerate() {
        h1 = &h1 + &e.euler_derivative(j)?;
    }
    let mut h2 = LaurentPoly::zero(p.context());
    for j in 0..n {
        for k in j + 1..n {
            let quotient = (&euler[j] - &euler[k]).divide_by_difference(j, k)?;
            let sum = &quotient.mul_var(j)? + &quotient.mul_var(k)?;
            h2 = &h2 + &sum;
        }
    }
    Ok(&h1 + &h2.scale(&FieldElement::beta()))
}

/// Conserved charge `L_j = Σ_i D_i^j` on symmetric input.
///
/// The power `j` must be positive; powers above `N` are accepted.
pub fn apply_l(j: u32, p: &LaurentPoly) -> Result<LaurentPoly> {
    if j == 0 {
        return Err(Error::IndexOutOfRange { index: 0, nvars: p.nvars() });
    }
    require_symmetric(p)?;
    let mut out = LaurentPoly::zero(p.context());
    for i in 0..p.nvars() {
        out = &out + &apply_d_pow(i, j, p)?;
    }
    Ok(out)
}

/// `D̂_i = D_i + β(i-1) - β Σ_{j<i} (1 - K_ij)` with one-based `i`; here
/// `i` is zero-based so the shift is `β i`.
pub fn apply_hat_d(i: usize, p: &LaurentPoly) -> Result<LaurentPoly> {
    p.context().check_index(i)?;
    let mut out = &apply_d(i, p)? + &p.scale(&beta_times(i as i64));
    let mut exchange = LaurentPoly::zero(p.context());
    for j in 0..i {
        exchange = &exchange + &(p - &p.swap_vars(i, j)?);
    }
    out = &out - &exchange.scale(&FieldElement::beta());
    Ok(out)
}

/// `Ĥ = Σ_i (D̂_i^2 - (N-1)β D̂_i) + N(N-1)(N-2)β^2/6`.
pub fn apply_hat_h(p: &LaurentPoly) -> Result<LaurentPoly> {
    let n = p.nvars() as i64;
    let mut out = p.scale(&FieldElement::beta().pow(2).scale(&Rational::from_integer(
        (n * (n - 1) * (n - 2) / 6).into(),
    )));
    let linear = beta_times(n - 1);
    for i in 0..p.nvars() {
        let once = apply_hat_d(i, p)?;
        let twice = apply_hat_d(i, &once)?;
        out = &(&out + &twice) - &once.scale(&linear);
    }
    Ok(out)
}

/// Galilei boost `(z_1 ⋯ z_N)^q`.
pub fn galilei_boost(p: &LaurentPoly, q: i32) -> LaurentPoly {
    p.shift(&vec![q; p.nvars()])
}

/// `A(B(p)) - B(A(p))`.
pub fn commutator<A, B>(a: A, b: B, p: &LaurentPoly) -> Result<LaurentPoly>
where
    A: Fn(&LaurentPoly) -> Result<LaurentPoly>,
    B: Fn(&LaurentPoly) -> Result<LaurentPoly>,
{
    Ok(&a(&b(p)?)? - &b(&a(p)?)?)
}

/// A named operator that can be applied to polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operator {
    Swap(usize, usize),
    Dunkl(usize),
    D(usize),
    HatD(usize),
    DString { k: u32, set: IndexSet },
    BPlus { i: usize, set: IndexSet },
    N { i: usize, set: IndexSet },
    H,
    HatH,
    L(u32),
    Boost(i32),
}

impl Operator {
    pub fn apply(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        match self {
            Operator::Swap(i, j) => p.swap_vars(*i, *j),
            Operator::Dunkl(i) => apply_dunkl(*i, p),
            Operator::D(i) => apply_d(*i, p),
            Operator::HatD(i) => apply_hat_d(*i, p),
            Operator::DString { k, set } => apply_d_string(*k, set, p),
            Operator::BPlus { i, set } => apply_b_plus(*i, set, p),
            Operator::N { i, set } => apply_n(*i, set, p),
            Operator::H => apply_h(p),
            Operator::HatH => apply_hat_h(p),
            Operator::L(j) => apply_l(*j, p),
            Operator::Boost(q) => Ok(galilei_boost(p, *q)),
        }
    }

    /// Short name used in reports.
    pub fn tag(&self) -> &'static str {
        match self {
            Operator::Swap(..) => "K",
            Operator::Dunkl(_) => "dunkl",
            Operator::D(_) => "D",
            Operator::HatD(_) => "Dhat",
            Operator::DString { .. } => "Dstring",
            Operator::BPlus { .. } => "B+",
            Operator::N { .. } => "N",
            Operator::H => "H",
            Operator::HatH => "Hhat",
            Operator::L(_) => "L",
            Operator::Boost(_) => "G",
        }
    }

    /// Applies `ops` right to left, as a written product.
    pub fn apply_product(ops: &[Operator], p: &LaurentPoly) -> Result<LaurentPoly> {
        ops.iter().rev().try_fold(p.clone(), |acc, op| op.apply(&acc))
    }
}
