//! JSON and text encodings of the core types.
//!
//! Rationals are written as `"p/q"` or `"p"` strings so that values survive
//! the round trip exactly.

use csjack_core::field::BetaPoly;
use csjack_core::spectrum::{Length, SpectrumRecord};
use csjack_core::symbases::{Basis, BasisExpansion};
use csjack_core::{FieldElement, JackResult, LaurentPoly, Partition, Rational, VarContext};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coeff: FieldJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordJson {
    pub partition: Vec<u32>,
    pub coeff: FieldJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub basis: String,
    pub degree: u32,
    pub coords: Vec<CoordJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JackJson {
    pub lambda: Vec<u32>,
    pub nvars: usize,
    pub normalization: String,
    pub beta: String,
    pub c: FieldJson,
    pub monomial_expansion: Vec<CoordJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumParamsJson {
    pub nparticles: usize,
    pub beta: String,
    pub length: String,
    pub q: String,
    pub convention: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitsJson {
    pub kappa: String,
    pub momentum: String,
    pub energy: String,
    pub ground_energy: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub lambda: Vec<u32>,
    pub kappa: Vec<String>,
    pub momentum: String,
    pub energy: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub params: SpectrumParamsJson,
    pub units: UnitsJson,
    pub ground_energy: String,
    pub states: Vec<StateJson>,
}

/// How `β` is treated on output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaMode {
    Symbolic,
    Value(Rational),
}

impl BetaMode {
    pub fn parse(s: &str) -> Result<Self, String> {
        if s == "sym" {
            return Ok(BetaMode::Symbolic);
        }
        parse_rational(s).map(BetaMode::Value)
    }

    pub fn label(&self) -> String {
        match self {
            BetaMode::Symbolic => "sym".to_string(),
            BetaMode::Value(v) => v.to_string(),
        }
    }

    /// Applies the mode to a coefficient.
    pub fn apply(&self, c: &FieldElement) -> Result<FieldElement, CliError> {
        match self {
            BetaMode::Symbolic => Ok(c.clone()),
            BetaMode::Value(v) => Ok(FieldElement::from_rational(c.specialize(v)?)),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err("empty rational".to_string());
    }
    let value: Rational = trimmed.parse().map_err(|_| format!("not a rational: {s:?}"))?;
    Ok(value)
}

/// Parses `"3,1"`, `"3,1,0"` or `"0"` into a partition.
pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| format!("not an integer: {p:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(&parts).map_err(|e| e.to_string())
}

pub fn parse_length(s: &str) -> Result<Length, String> {
    if s == "2pi" {
        return Ok(Length::TwoPi);
    }
    let value = parse_rational(s)?;
    if value <= Rational::from_integer(0.into()) {
        return Err("length must be positive".to_string());
    }
    Ok(Length::Value(value))
}

pub fn length_label(length: &Length) -> String {
    match length {
        Length::TwoPi => "2pi".to_string(),
        Length::Value(v) => v.to_string(),
    }
}

fn rationals_to_strings(coeffs: &[Rational]) -> Vec<String> {
    coeffs.iter().map(ToString::to_string).collect()
}

fn strings_to_poly(coeffs: &[String]) -> Result<BetaPoly, CliError> {
    let parsed = coeffs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>();
    Ok(BetaPoly::from_coeffs(parsed.map_err(CliError::Input)?))
}

pub fn field_to_json(c: &FieldElement) -> FieldJson {
    let num = if c.is_zero() { vec!["0".to_string()] } else { rationals_to_strings(c.numerator().coeffs()) };
    FieldJson { num, den: rationals_to_strings(c.denominator().coeffs()) }
}

pub fn field_from_json(json: &FieldJson) -> Result<FieldElement, CliError> {
    Ok(FieldElement::from_fraction(strings_to_poly(&json.num)?, strings_to_poly(&json.den)?)?)
}

pub fn poly_to_json(p: &LaurentPoly) -> PolyJson {
    PolyJson {
        nvars: p.nvars(),
        terms: p.terms().map(|(e, c)| TermJson { exp: e.clone(), coeff: field_to_json(c) }).collect(),
    }
}

pub fn poly_from_json(json: &PolyJson) -> Result<LaurentPoly, CliError> {
    let ctx = VarContext::new(json.nvars)?;
    let terms = json
        .terms
        .iter()
        .map(|t| Ok((t.exp.clone(), field_from_json(&t.coeff)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(LaurentPoly::from_terms(ctx, terms)?)
}

pub fn basis_tag(basis: Basis) -> &'static str {
    match basis {
        Basis::Monomial => "m",
        Basis::PowerSum => "p",
    }
}

pub fn coords_to_json(expansion: &BasisExpansion, beta: &BetaMode) -> Result<Vec<CoordJson>, CliError> {
    let mut out = Vec::new();
    for (mu, c) in expansion.coords() {
        let c = beta.apply(c)?;
        if !c.is_zero() {
            out.push(CoordJson { partition: mu.parts().to_vec(), coeff: field_to_json(&c) });
        }
    }
    Ok(out)
}

pub fn expansion_to_json(expansion: &BasisExpansion) -> Result<ExpansionJson, CliError> {
    Ok(ExpansionJson {
        basis: basis_tag(expansion.basis()).to_string(),
        degree: expansion.degree(),
        coords: coords_to_json(expansion, &BetaMode::Symbolic)?,
    })
}

fn coords_from_json(coords: &[CoordJson]) -> Result<Vec<(Partition, FieldElement)>, CliError> {
    coords
        .iter()
        .map(|c| {
            let p = Partition::from_parts(&c.partition)?;
            Ok((p, field_from_json(&c.coeff)?))
        })
        .collect()
}

pub fn jack_to_json(result: &JackResult, beta: &BetaMode) -> Result<JackJson, CliError> {
    Ok(JackJson {
        lambda: result.lambda.parts().to_vec(),
        nvars: result.context.nvars(),
        normalization: result.normalization.name().to_string(),
        beta: beta.label(),
        c: field_to_json(&beta.apply(&result.c)?),
        monomial_expansion: coords_to_json(&result.monomial_expansion()?, beta)?,
    })
}

/// The polynomial described by a JackResult document.
pub fn jack_polynomial_from_json(json: &JackJson) -> Result<LaurentPoly, CliError> {
    let ctx = VarContext::new(json.nvars)?;
    let degree = json.lambda.iter().sum();
    let coords = coords_from_json(&json.monomial_expansion)?;
    Ok(BasisExpansion::new(Basis::Monomial, degree, ctx, coords)?.reconstruct()?)
}

pub fn spectrum_to_json(
    params: &csjack_core::spectrum::ModelParams,
    ground_energy: &Rational,
    records: &[SpectrumRecord],
) -> SpectrumJson {
    use csjack_core::spectrum::KappaConvention;
    SpectrumJson {
        params: SpectrumParamsJson {
            nparticles: params.nparticles,
            beta: params.beta.to_string(),
            length: length_label(&params.length),
            q: params.q.to_string(),
            convention: match params.convention {
                KappaConvention::HalfShift => "half",
                KappaConvention::FullShift => "full",
            }
            .to_string(),
        },
        units: UnitsJson {
            kappa: "2pi/L".to_string(),
            momentum: "2pi/L".to_string(),
            energy: "(2pi/L)^2".to_string(),
            ground_energy: "(pi/L)^2".to_string(),
        },
        ground_energy: ground_energy.to_string(),
        states: records
            .iter()
            .map(|r| StateJson {
                lambda: r.lambda.parts().to_vec(),
                kappa: rationals_to_strings(&r.kappa),
                momentum: r.total_momentum.to_string(),
                energy: r.total_energy.to_string(),
            })
            .collect(),
    }
}

/// Left-aligned two-column table.
pub fn two_columns(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(a, _)| a.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (a, b) in rows {
        let pad = width - a.chars().count();
        out.push_str(a);
        out.push_str(&" ".repeat(pad + 2));
        out.push_str(b);
        out.push('\n');
    }
    out
}

/// Left-aligned table with a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let ncols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let render = |cells: Vec<&str>| {
        let mut line = String::new();
        for (k, cell) in cells.iter().enumerate() {
            line.push_str(cell);
            if k + 1 < ncols {
                line.push_str(&" ".repeat(widths[k] - cell.chars().count() + 2));
            }
        }
        line.push('\n');
        line
    };
    let mut out = render(header.to_vec());
    for row in rows {
        out.push_str(&render(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn partition_label(p: &Partition) -> String {
    p.to_string()
}
