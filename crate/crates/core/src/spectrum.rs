//! Free quasi-particle spectrum of the Calogero-Sutherland model.
//!
//! All quantities are exact rationals multiplying a unit built from the
//! perimeter `L`: momenta in `2π/L`, energies in `(2π/L)²`, except the
//! ground energy which is reported in `(π/L)²`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{rat, Rational};
use crate::partitions::Partition;

/// Perimeter of the circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Length {
    /// `L = 2π`, so that the momentum unit is 1.
    TwoPi,
    Value(Rational),
}

/// Shift convention for the quasi-momenta.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KappaConvention {
    /// `λ_i + (β/2)(N+1-2i) + q`. Sums to the ground energy at `λ = 0`.
    #[default]
    HalfShift,
    /// `λ_i + β(N+1-2i) + q`. Kept for comparison only; its ground energy
    /// is four times too large.
    FullShift,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelParams {
    pub nparticles: usize,
    pub beta: Rational,
    pub length: Length,
    pub q: Rational,
    pub convention: KappaConvention,
}

impl ModelParams {
    pub fn new(nparticles: usize, beta: Rational, length: Length, q: Rational) -> Result<Self> {
        if nparticles == 0 {
            return Err(Error::EmptyContext);
        }
        if let Length::Value(l) = &length {
            if *l <= rat(0) {
                return Err(Error::PoleAtValue);
            }
        }
        Ok(ModelParams { nparticles, beta, length, q, convention: KappaConvention::HalfShift })
    }

    pub fn with_convention(mut self, convention: KappaConvention) -> Self {
        self.convention = convention;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumRecord {
    pub lambda: Partition,
    /// Units of `2π/L`.
    pub kappa: Vec<Rational>,
    /// Units of `2π/L`.
    pub total_momentum: Rational,
    /// Units of `(2π/L)²`.
    pub total_energy: Rational,
    /// Units of `(π/L)²`.
    pub ground_energy: Rational,
}

/// `β²N(N²-1)/3` in units of `(π/L)²`.
pub fn ground_energy(params: &ModelParams) -> Rational {
    let n = rat(params.nparticles as i64);
    &params.beta * &params.beta * &n * (&n * &n - rat(1)) / rat(3)
}

/// Quasi-momenta `κ_1 > … > κ_N` in units of `2π/L`.
pub fn quasi_momenta(lambda: &Partition, params: &ModelParams) -> Result<Vec<Rational>> {
    let n = params.nparticles;
    if lambda.len() > n {
        return Err(Error::TooManyParts { length: lambda.len(), max: n });
    }
    let step = match params.convention {
        KappaConvention::HalfShift => &params.beta / rat(2),
        KappaConvention::FullShift => params.beta.clone(),
    };
    Ok((0..n)
        .map(|i| {
            let offset = rat(n as i64 - 1 - 2 * i as i64);
            rat(lambda.part(i) as i64) + &step * offset + &params.q
        })
        .collect())
}

/// `Σ κ_i` in units of `2π/L`.
pub fn total_momentum(lambda: &Partition, params: &ModelParams) -> Result<Rational> {
    Ok(quasi_momenta(lambda, params)?.into_iter().fold(rat(0), |a, k| a + k))
}

/// `Σ κ_i²` in units of `(2π/L)²`.
pub fn total_energy(lambda: &Partition, params: &ModelParams) -> Result<Rational> {
    Ok(quasi_momenta(lambda, params)?.iter().fold(rat(0), |a, k| a + k * k))
}

pub fn spectrum_record(lambda: &Partition, params: &ModelParams) -> Result<SpectrumRecord> {
    let kappa = quasi_momenta(lambda, params)?;
    let total_momentum = kappa.iter().fold(rat(0), |a, k| a + k);
    let total_energy = kappa.iter().fold(rat(0), |a, k| a + k * k);
    Ok(SpectrumRecord {
        lambda: lambda.clone(),
        kappa,
        total_momentum,
        total_energy,
        ground_energy: ground_energy(params),
    })
}

/// Exponents of the prefactor `(Π z_i)^a Π_{i<j} (z_i - z_j)^b` multiplying
/// the Jack polynomial of `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WavefunctionDescriptor {
    pub lambda: Partition,
    pub product_exponent: Rational,
    pub vandermonde_exponent: Rational,
}

pub fn wavefunction_descriptor(lambda: &Partition, params: &ModelParams) -> Result<WavefunctionDescriptor> {
    let n = params.nparticles;
    if lambda.len() + 1 > n {
        return Err(Error::TooManyParts { length: lambda.len(), max: n - 1 });
    }
    let product_exponent = &params.q - rat(n as i64 - 1) * &params.beta / rat(2);
    Ok(WavefunctionDescriptor {
        lambda: lambda.clone(),
        product_exponent,
        vandermonde_exponent: params.beta.clone(),
    })
}
