//! Independent constructions of Jack polynomials.
//!
//! * [`jack_by_triangular_h`]: back-substitution in the dominance-triangular
//!   matrix of `H` on monomial symmetric functions.
//! * [`jack_by_gram_schmidt`]: orthogonalization of `{m_μ}` under the
//!   power-sum scalar product.
//! * [`jack_by_symmetrization`]: symmetrized joint eigenfunction of the
//!   commuting `D̂_i`.
//!
//! None of these go through the creation operators.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg;
use crate::operators::{apply_h, apply_hat_d};
use crate::partitions::{partitions_of, DominanceOrdering, Partition};
use crate::poly::{Exponent, LaurentPoly, VarContext};
use crate::symbases::{expand_in_basis, monomial_sym, scalar_product_p, signed_permutations, Basis};

/// Matrix of `H` on `{m_μ : |μ| = degree, l(μ) <= N}`.
///
/// Entry `(μ, λ)` is the coefficient of `m_μ` in `H m_λ`.
#[derive(Clone, Debug)]
pub struct TriangularSystem {
    pub degree: u32,
    pub context: VarContext,
    /// Dominant partitions first.
    pub ordered_basis: Vec<Partition>,
    pub matrix: BTreeMap<(Partition, Partition), FieldElement>,
}

impl TriangularSystem {
    pub fn build(degree: u32, ctx: VarContext) -> Result<Self> {
        let ordered_basis = partitions_of(degree, ctx.nvars());
        let mut matrix = BTreeMap::new();
        for lambda in &ordered_basis {
            let image = apply_h(&monomial_sym(lambda, ctx)?)?;
            for (mu, c) in expand_in_basis(&image, Basis::Monomial)?.coords() {
                matrix.insert((mu.clone(), lambda.clone()), c.clone());
            }
        }
        Ok(TriangularSystem { degree, context: ctx, ordered_basis, matrix })
    }

    pub fn entry(&self, row: &Partition, col: &Partition) -> FieldElement {
        self.matrix.get(&(row.clone(), col.clone())).cloned().unwrap_or_else(FieldElement::zero)
    }

    pub fn diagonal(&self, lambda: &Partition) -> FieldElement {
        self.entry(lambda, lambda)
    }

    /// Every nonzero entry `(μ, λ)` has `μ <= λ` in dominance.
    pub fn is_lower_triangular(&self) -> bool {
        self.matrix.keys().all(|(row, col)| row.is_dominated_by(col))
    }

    /// Monic eigenvector `m_λ + Σ_{μ<λ} v_μ m_μ` of the matrix.
    pub fn eigenvector(&self, lambda: &Partition) -> Result<BTreeMap<Partition, FieldElement>> {
        let start = self
            .ordered_basis
            .iter()
            .position(|p| p == lambda)
            .ok_or(Error::TooManyParts { length: lambda.len(), max: self.context.nvars() })?;
        let eigenvalue = self.diagonal(lambda);
        let mut coords: BTreeMap<Partition, FieldElement> = BTreeMap::new();
        coords.insert(lambda.clone(), FieldElement::one());
        for mu in &self.ordered_basis[start + 1..] {
            if mu.dominance_cmp(lambda)? != DominanceOrdering::Less {
                continue;
            }
            // row μ of (H - ε) v = 0 over the already solved coordinates
            let mut acc = FieldElement::zero();
            for (nu, v) in &coords {
                let h = self.entry(mu, nu);
                if !h.is_zero() {
                    acc = &acc + &(&h * v);
                }
            }
            let gap = &eigenvalue - &self.diagonal(mu);
            if gap.is_zero() {
                return Err(Error::DegenerateDiagonal);
            }
            let v = acc.checked_div(&gap)?;
            if !v.is_zero() {
                coords.insert(mu.clone(), v);
            }
        }
        Ok(coords)
    }
}

fn from_monomial_coords(coords: &BTreeMap<Partition, FieldElement>, ctx: VarContext) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(ctx);
    for (mu, c) in coords {
        out = &out + &monomial_sym(mu, ctx)?.scale(c);
    }
    Ok(out)
}

/// Monic Jack polynomial by back-substitution in the triangular matrix of `H`.
pub fn jack_by_triangular_h(lambda: &Partition, ctx: VarContext) -> Result<LaurentPoly> {
    if lambda.len() > ctx.nvars() {
        return Err(Error::TooManyParts { length: lambda.len(), max: ctx.nvars() });
    }
    let system = TriangularSystem::build(lambda.weight(), ctx)?;
    from_monomial_coords(&system.eigenvector(lambda)?, ctx)
}

/// Monic Jack polynomial by Gram-Schmidt, processing partitions from the
/// least dominant upwards.
pub fn jack_by_gram_schmidt(lambda: &Partition, ctx: VarContext) -> Result<LaurentPoly> {
    let order = partitions_of(lambda.weight(), ctx.nvars());
    jack_by_gram_schmidt_with_order(lambda, ctx, &order)
}

/// Gram-Schmidt along a caller-supplied linear extension of dominance
/// (dominant partitions first, as returned by [`partitions_of`]).
pub fn jack_by_gram_schmidt_with_order(
    lambda: &Partition,
    ctx: VarContext,
    order: &[Partition],
) -> Result<LaurentPoly> {
    let degree = lambda.weight();
    if degree as usize > ctx.nvars() {
        return Err(Error::DegreeExceedsVariables { degree, nvars: ctx.nvars() });
    }
    let mut expected = partitions_of(degree, ctx.nvars());
    let mut given = order.to_vec();
    expected.sort();
    given.sort();
    if expected != given {
        return Err(Error::NotLinearExtension);
    }
    for (i, a) in order.iter().enumerate() {
        if order[i + 1..].iter().any(|b| a.is_dominated_by(b)) {
            return Err(Error::NotLinearExtension);
        }
    }

    let power_coords = order
        .iter()
        .map(|mu| expand_in_basis(&monomial_sym(mu, ctx)?, Basis::PowerSum))
        .collect::<Result<Vec<_>>>()?;
    let size = order.len();
    let mut gram = vec![vec![FieldElement::zero(); size]; size];
    for a in 0..size {
        for b in a..size {
            let g = scalar_product_p(&power_coords[a], &power_coords[b])?;
            gram[a][b] = g.clone();
            gram[b][a] = g;
        }
    }
    let pair = |x: &[FieldElement], y: &[FieldElement]| {
        let mut total = FieldElement::zero();
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                total = &total + &(&(xa * yb) * &gram[a][b]);
            }
        }
        total
    };

    // orthogonal vectors in m-coordinates, least dominant first
    let mut done: Vec<(Vec<FieldElement>, FieldElement)> = Vec::new();
    for idx in (0..size).rev() {
        let mut v = vec![FieldElement::zero(); size];
        v[idx] = FieldElement::one();
        let unit = v.clone();
        for (w, norm) in &done {
            let factor = pair(&unit, w).checked_div(norm)?;
            if factor.is_zero() {
                continue;
            }
            for (vk, wk) in v.iter_mut().zip(w) {
                *vk = &*vk - &(&factor * wk);
            }
        }
        if &order[idx] == lambda {
            let coords = order.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect();
            return from_monomial_coords(&coords, ctx);
        }
        let norm = pair(&v, &v);
        done.push((v, norm));
    }
    Err(Error::TooManyParts { length: lambda.len(), max: ctx.nvars() })
}

/// Joint eigenfunction `χ_λ` of all `D̂_i` with its eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonSymmetricEigenfunction {
    pub chi: LaurentPoly,
    /// `δ_i`, read off the diagonal at `ẑ^λ`.
    pub eigenvalues: Vec<FieldElement>,
}

/// Solves `D̂_i χ = δ_i χ` for all `i` with `χ = ẑ^λ + lower terms`.
///
/// The unknown coefficients range over the monomials reachable from `ẑ^λ`
/// under repeated `D̂_i`. Partitions whose padded parts repeat are refused,
/// except the empty partition whose eigenfunction is the constant.
pub fn nonsym_eigenfunction(lambda: &Partition, ctx: VarContext) -> Result<NonSymmetricEigenfunction> {
    let n = ctx.nvars();
    let padded = lambda
        .padded(n)
        .map_err(|_| Error::TooManyParts { length: lambda.len(), max: n })?;
    if !lambda.is_empty() && padded.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DegenerateLeadingTerm);
    }
    let leading: Exponent = padded.iter().map(|&x| x as i32).collect();

    // closure of {ẑ^λ} under the D̂_i, remembering every image
    let mut images: BTreeMap<Exponent, Vec<LaurentPoly>> = BTreeMap::new();
    let mut pending = vec![leading.clone()];
    while let Some(exp) = pending.pop() {
        if images.contains_key(&exp) {
            continue;
        }
        let mono = LaurentPoly::monomial(ctx, exp.clone(), FieldElement::one())?;
        let row = (0..n).map(|i| apply_hat_d(i, &mono)).collect::<Result<Vec<_>>>()?;
        for image in &row {
            for (e, _) in image.terms() {
                if !images.contains_key(e) {
                    pending.push(e.clone());
                }
            }
        }
        images.insert(exp, row);
    }

    let eigenvalues: Vec<FieldElement> = images[&leading].iter().map(|img| img.coeff(&leading)).collect();

    let mut unknowns: Vec<Exponent> = images.keys().filter(|e| **e != leading).cloned().collect();
    unknowns.sort_by(|a, b| {
        let (pa, pb) = (sorted_partition(a), sorted_partition(b));
        pb.cmp(&pa).then_with(|| b.cmp(a))
    });
    let column: BTreeMap<&Exponent, usize> = unknowns.iter().enumerate().map(|(k, e)| (e, k)).collect();

    let support: BTreeSet<&Exponent> = images.keys().collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (i, delta) in eigenvalues.iter().enumerate() {
        for &target in &support {
            // coefficient of z^target in (D̂_i - δ_i) χ
            let mut row = vec![FieldElement::zero(); unknowns.len()];
            let mut b = FieldElement::zero();
            for (source, imgs) in &images {
                let mut c = imgs[i].coeff(target);
                if source == target {
                    c = &c - delta;
                }
                if c.is_zero() {
                    continue;
                }
                if *source == leading {
                    b = -&c;
                } else {
                    row[column[source]] = c;
                }
            }
            rows.push(row);
            rhs.push(b);
        }
    }

    let solution = if unknowns.is_empty() {
        if rhs.iter().any(|r| !r.is_zero()) {
            return Err(Error::InconsistentSystem);
        }
        Vec::new()
    } else {
        linalg::solve(&rows, &rhs)?
    };
    let mut chi = LaurentPoly::monomial(ctx, leading, FieldElement::one())?;
    for (exp, c) in unknowns.into_iter().zip(solution) {
        chi.add_term(exp, c);
    }
    Ok(NonSymmetricEigenfunction { chi, eigenvalues })
}

fn sorted_partition(exp: &[i32]) -> Partition {
    let parts: Vec<u32> = exp.iter().map(|&x| x as u32).collect();
    Partition::from_unsorted(&parts)
}

/// Monic Jack polynomial as the rescaled sum of `χ_λ` over all variable permutations.
pub fn jack_by_symmetrization(lambda: &Partition, ctx: VarContext) -> Result<LaurentPoly> {
    let chi = nonsym_eigenfunction(lambda, ctx)?.chi;
    let mut sum = LaurentPoly::zero(ctx);
    for (perm, _) in signed_permutations(ctx.nvars()) {
        sum = &sum + &chi.permute_vars(&perm);
    }
    let leading: Exponent = lambda.padded(ctx.nvars())?.iter().map(|&x| x as i32).collect();
    let lead = sum.coeff(&leading);
    Ok(sum.scale(&lead.inv()?))
}
