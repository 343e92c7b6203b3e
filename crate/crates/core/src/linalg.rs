//! Exact Gaussian elimination over `Q(β)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Solves `A x = b` for a system with a unique solution.
///
/// `rows` may have more equations than unknowns. Returns
/// [`Error::InconsistentSystem`] when no solution exists and
/// [`Error::SingularSystem`] when it is not unique.
pub fn solve(rows: &[Vec<FieldElement>], rhs: &[FieldElement]) -> Result<Vec<FieldElement>> {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per equation");
    let ncols = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<FieldElement>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), ncols, "ragged matrix");
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..ncols {
        // smallest pivot keeps intermediate rational functions small
        let best = (pivot_row..aug.len())
            .filter(|&r| !aug[r][col].is_zero())
            .min_by_key(|&r| complexity(&aug[r][col]));
        let Some(best) = best else {
            return Err(Error::SingularSystem);
        };
        aug.swap(pivot_row, best);
        let inv = aug[pivot_row][col].inv()?;
        for c in col..=ncols {
            aug[pivot_row][c] = &aug[pivot_row][c] * &inv;
        }
        for r in 0..aug.len() {
            if r == pivot_row || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            for c in col..=ncols {
                let delta = &factor * &aug[pivot_row][c];
                aug[r][c] = &aug[r][c] - &delta;
            }
        }
        pivot_row += 1;
    }
    if aug[pivot_row..].iter().any(|r| !r[ncols].is_zero()) {
        return Err(Error::InconsistentSystem);
    }
    Ok(aug.into_iter().take(ncols).map(|mut r| r.pop().expect("augmented column")).collect())
}

fn complexity(x: &FieldElement) -> usize {
    x.numerator().degree().unwrap_or(0) + x.denominator().degree().unwrap_or(0)
}
