//! Verification suites driven by `csjack verify`.
//!
//! Every suite expands into a list of independent checks. Checks run on a
//! rayon pool and are reported in the order they were generated, so the
//! report does not depend on the thread count.

use csjack_core::field::rat;
use csjack_core::operators::{
    apply_b_plus, apply_d, apply_d_pow, apply_dunkl, apply_h, apply_hat_d, apply_hat_h, apply_l, apply_n_tilde,
    commutator, IndexSet,
};
use csjack_core::oracle::{jack_by_gram_schmidt, jack_by_symmetrization, jack_by_triangular_h};
use csjack_core::partitions::partitions_of;
use csjack_core::rodrigues::{
    c_coefficient, eigenvalue_epsilon, is_dominance_triangular, is_integral_in_inverse_beta, jack, jack_monic,
    leading_coefficient, rodrigues_raw,
};
use csjack_core::spectrum::{self, Length, ModelParams};
use csjack_core::symbases::{circle_inner_product, expand_in_basis, monomial_sym, scalar_product_p, Basis};
use csjack_core::{Error, FieldElement, LaurentPoly, Normalization, Partition, Rational, VarContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::poly_to_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Commutators,
    RodriguesVsOracle,
    Annihilation,
    Orthogonality,
    SpectrumConsistency,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Commutators => "commutators",
            Suite::RodriguesVsOracle => "rodrigues-vs-oracle",
            Suite::Annihilation => "annihilation",
            Suite::Orthogonality => "orthogonality",
            Suite::SpectrumConsistency => "spectrum-consistency",
            Suite::All => "all",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Commutators,
                Suite::RodriguesVsOracle,
                Suite::Annihilation,
                Suite::Orthogonality,
                Suite::SpectrumConsistency,
            ],
            other => vec![other],
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub max_degree: u32,
    pub max_nvars: usize,
    /// Random inputs per variable count in the randomized suites.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { suite: Suite::All, max_degree: 4, max_nvars: 3, samples: 20, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub check: String,
    pub case: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl CheckOutcome {
    fn new(suite: Suite, check: impl Into<String>, case: impl Into<String>, pass: bool) -> Self {
        CheckOutcome { suite: suite.name(), check: check.into(), case: case.into(), pass, detail: None }
    }

    fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }

    /// One report line: `PASS  suite  check  case`.
    pub fn line(&self) -> String {
        let mut line = format!(
            "{}  {}  {}  {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.check,
            self.case
        );
        if !self.pass {
            if let Some(detail) = &self.detail {
                line.push_str("  counterexample: ");
                line.push_str(&detail.to_string());
            }
        }
        line
    }
}

type Task = Box<dyn Fn() -> Vec<CheckOutcome> + Send + Sync>;

/// Runs the configured suites on a pool of `threads` workers.
pub fn run(config: &VerifyConfig, threads: usize) -> Result<Vec<CheckOutcome>, CliError> {
    let mut tasks: Vec<Task> = Vec::new();
    for suite in config.suite.members() {
        match suite {
            Suite::Commutators => commutator_tasks(config, &mut tasks),
            Suite::RodriguesVsOracle => oracle_tasks(config, &mut tasks),
            Suite::Annihilation => annihilation_tasks(config, &mut tasks),
            Suite::Orthogonality => orthogonality_tasks(config, &mut tasks),
            Suite::SpectrumConsistency => spectrum_tasks(config, &mut tasks),
            Suite::All => unreachable!("expanded above"),
        }
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build()?;
    let outcomes: Vec<Vec<CheckOutcome>> = pool.install(|| tasks.par_iter().map(|t| t()).collect());
    Ok(outcomes.into_iter().flatten().collect())
}

fn ctx(n: usize) -> VarContext {
    VarContext::new(n).expect("positive variable count")
}

fn case_label(lambda: &Partition, n: usize) -> String {
    format!("lambda={lambda} N={n}")
}

fn error_detail(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

/// Random polynomial with 1 to 4 terms and total degree at most `max_degree`.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, max_degree: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero(ctx(nvars));
    let nterms = rng.gen_range(1..=4);
    while p.len() < nterms {
        let degree = rng.gen_range(0..=max_degree);
        let mut exp = vec![0i32; nvars];
        for _ in 0..degree {
            exp[rng.gen_range(0..nvars)] += 1;
        }
        let c = FieldElement::linear(rng.gen_range(-3..=3), rng.gen_range(-1..=1));
        if !c.is_zero() {
            p.add_term(exp, c);
        }
    }
    p
}

/// Random combination of up to three monomial symmetric functions.
pub fn random_symmetric_poly(rng: &mut ChaCha8Rng, nvars: usize, max_degree: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero(ctx(nvars));
    while p.is_zero() {
        for _ in 0..rng.gen_range(1..=3) {
            let shapes = partitions_of(rng.gen_range(0..=max_degree), nvars);
            let mu = &shapes[rng.gen_range(0..shapes.len())];
            let c = FieldElement::linear(rng.gen_range(-3..=3), rng.gen_range(-1..=1));
            p = &p + &monomial_sym(mu, ctx(nvars)).expect("fits").scale(&c);
        }
    }
    p
}

/// Inputs for one instance of every operator identity.
#[derive(Clone, Debug)]
pub struct Sample {
    pub p: LaurentPoly,
    pub i: usize,
    pub j: usize,
    pub power: u32,
    pub shift: i64,
    pub mask: u32,
}

impl Sample {
    pub fn random(rng: &mut ChaCha8Rng, nvars: usize, max_degree: u32) -> Self {
        let p = random_poly(rng, nvars, max_degree);
        let i = rng.gen_range(0..nvars);
        let j = (i + rng.gen_range(1..nvars)) % nvars;
        Sample { p, i, j, power: rng.gen_range(1..=3), shift: rng.gen_range(0..3), mask: rng.gen() }
    }

    fn size(&self) -> (i32, usize) {
        let degree = self.p.terms().map(|(e, _)| e.iter().sum::<i32>()).max().unwrap_or(0);
        (degree, self.p.len())
    }

    fn to_json(&self) -> Value {
        json!({
            "poly": poly_to_json(&self.p),
            "i": self.i,
            "j": self.j,
            "power": self.power,
            "shift": self.shift,
            "mask": self.mask,
        })
    }
}

pub type Identity = fn(&Sample) -> Result<bool, Error>;

fn beta_times(k: i64) -> FieldElement {
    FieldElement::linear(0, k)
}

fn id_dunkl_commute(s: &Sample) -> Result<bool, Error> {
    Ok(commutator(|q| apply_dunkl(s.i, q), |q| apply_dunkl(s.j, q), &s.p)?.is_zero())
}

fn id_dunkl_exchange(s: &Sample) -> Result<bool, Error> {
    let lhs = apply_dunkl(s.j, &s.p)?.swap_vars(s.i, s.j)?;
    Ok(lhs == apply_dunkl(s.i, &s.p.swap_vars(s.i, s.j)?)?)
}

fn id_dunkl_coordinate(s: &Sample) -> Result<bool, Error> {
    let (i, j, p) = (s.i, s.j, &s.p);
    let off = commutator(|q| apply_dunkl(i, q), |q| q.mul_var(j), p)?;
    let off_ok = off == p.swap_vars(i, j)?.scale(&beta_times(-1));
    let mut diag = p.clone();
    for l in (0..p.nvars()).filter(|&l| l != i) {
        diag = &diag + &p.swap_vars(i, l)?.scale(&FieldElement::beta());
    }
    Ok(off_ok && commutator(|q| apply_dunkl(i, q), |q| q.mul_var(i), p)? == diag)
}

fn id_d_commutator(s: &Sample) -> Result<bool, Error> {
    let lhs = commutator(|q| apply_d(s.i, q), |q| apply_d(s.j, q), &s.p)?;
    let k = s.p.swap_vars(s.i, s.j)?;
    Ok(lhs == (&apply_d(s.j, &k)? - &apply_d(s.i, &k)?).scale(&FieldElement::beta()))
}

fn id_d_power_commutator(s: &Sample) -> Result<bool, Error> {
    let lhs = commutator(|q| apply_d_pow(s.i, s.power, q), |q| apply_d(s.j, q), &s.p)?;
    let k = s.p.swap_vars(s.i, s.j)?;
    let rhs = &apply_d_pow(s.j, s.power, &k)? - &apply_d_pow(s.i, s.power, &k)?;
    Ok(lhs == rhs.scale(&FieldElement::beta()))
}

fn id_restricted_swap(s: &Sample) -> Result<bool, Error> {
    let p = &s.p + &s.p.swap_vars(s.i, s.j)?;
    let step = |a: usize, shift: i64, q: &LaurentPoly| -> Result<LaurentPoly, Error> {
        Ok(&apply_d(a, q)? + &q.scale(&beta_times(shift)))
    };
    let lhs = step(s.i, s.shift, &step(s.j, s.shift + 1, &p)?)?;
    let rhs = step(s.j, s.shift, &step(s.i, s.shift + 1, &p)?)?;
    Ok(lhs == rhs)
}

fn subset_from_mask(mask: u32, n: usize, keep: impl Fn(usize) -> bool) -> Vec<usize> {
    (0..n).filter(|&a| keep(a) && mask & (1 << a) != 0).collect()
}

fn id_d_product_outside(s: &Sample) -> Result<bool, Error> {
    let (i, p, n) = (s.i, &s.p, s.p.nvars());
    let mut members = subset_from_mask(s.mask, n, |a| a != i);
    if members.is_empty() {
        members.push(s.j);
    }
    let set = IndexSet::new(members.clone(), p.context())?;
    let shift = set.exponent(p.context());
    let lhs = commutator(|q| apply_d(i, q), |q| Ok(q.shift(&shift)), p)?;
    let mut rhs = LaurentPoly::zero(p.context());
    for &j in &members {
        let mut rest = shift.clone();
        rest[j] = 0;
        rest[i] += 1;
        rhs = &rhs + &p.swap_vars(i, j)?.shift(&rest);
    }
    Ok(lhs == rhs.scale(&beta_times(-1)))
}

fn id_d_product_inside(s: &Sample) -> Result<bool, Error> {
    let (i, p, n) = (s.i, &s.p, s.p.nvars());
    let mut members = subset_from_mask(s.mask, n, |a| a != i);
    members.push(i);
    members.sort_unstable();
    let set = IndexSet::new(members.clone(), p.context())?;
    let shift = set.exponent(p.context());
    let lhs = commutator(|q| apply_d(i, q), |q| Ok(q.shift(&shift)), p)?;
    let mut inner = p.clone();
    for j in (0..n).filter(|j| !members.contains(j)) {
        inner = &inner + &p.swap_vars(i, j)?.scale(&FieldElement::beta());
    }
    Ok(lhs == inner.shift(&shift))
}

fn id_hat_d_commute(s: &Sample) -> Result<bool, Error> {
    Ok(commutator(|q| apply_hat_d(s.i, q), |q| apply_hat_d(s.j, q), &s.p)?.is_zero())
}

/// `K_{i,i+1} D̂_{i+1} - D̂_i K_{i,i+1} = β` and `[K_{i,i+1}, D̂_k] = 0` otherwise.
fn id_hat_d_exchange(s: &Sample) -> Result<bool, Error> {
    let (p, n) = (&s.p, s.p.nvars());
    let i = s.i % (n - 1);
    let swap = |q: &LaurentPoly| q.swap_vars(i, i + 1);
    let lhs = &swap(&apply_hat_d(i + 1, p)?)? - &apply_hat_d(i, &swap(p)?)?;
    let mut ok = lhs == p.scale(&FieldElement::beta());
    if n > 2 {
        let k = (i + 2) % n;
        ok &= swap(&apply_hat_d(k, p)?)? == apply_hat_d(k, &swap(p)?)?;
    }
    Ok(ok)
}

fn id_hat_h_exchange(s: &Sample) -> Result<bool, Error> {
    let i = s.i % (s.p.nvars() - 1);
    Ok(apply_hat_h(&s.p.swap_vars(i, i + 1)?)? == apply_hat_h(&s.p)?.swap_vars(i, i + 1)?)
}

fn id_hamiltonian_forms(s: &Sample) -> Result<bool, Error> {
    let h = apply_h(&s.p)?;
    let mut squares = LaurentPoly::zero(s.p.context());
    for i in 0..s.p.nvars() {
        squares = &squares + &apply_d_pow(i, 2, &s.p)?;
    }
    Ok(h == squares && h == apply_hat_h(&s.p)?)
}

fn id_charges_commute(s: &Sample) -> Result<bool, Error> {
    Ok(commutator(|q| apply_l(2, q), |q| apply_l(3, q), &s.p)?.is_zero())
}

fn id_creation_symmetric(s: &Sample) -> Result<bool, Error> {
    let n = s.p.nvars();
    let i = s.i % n + 1;
    let out = apply_b_plus(i, &IndexSet::full(s.p.context()), &s.p)?;
    let degrees_ok = out.terms().all(|(e, _)| {
        let d: i32 = e.iter().sum();
        s.p.terms().any(|(f, _)| f.iter().sum::<i32>() + i as i32 == d)
    });
    Ok(out.is_symmetric() && degrees_ok)
}

/// Identities checked on arbitrary polynomials.
pub const GENERAL_IDENTITIES: &[(&str, Identity)] = &[
    ("dunkl-commute", id_dunkl_commute),
    ("dunkl-exchange", id_dunkl_exchange),
    ("dunkl-coordinate", id_dunkl_coordinate),
    ("d-commutator", id_d_commutator),
    ("d-power-commutator", id_d_power_commutator),
    ("restricted-swap", id_restricted_swap),
    ("d-product-outside", id_d_product_outside),
    ("d-product-inside", id_d_product_inside),
    ("hat-d-commute", id_hat_d_commute),
    ("hat-d-exchange", id_hat_d_exchange),
    ("hat-h-exchange", id_hat_h_exchange),
];

/// Identities checked on symmetric polynomials.
pub const SYMMETRIC_IDENTITIES: &[(&str, Identity)] = &[
    ("hamiltonian-forms", id_hamiltonian_forms),
    ("charges-commute", id_charges_commute),
    ("creation-symmetric", id_creation_symmetric),
];

/// Checks one identity on all samples; the smallest failing sample is kept.
pub fn check_identity(
    suite: Suite,
    name: &str,
    identity: Identity,
    samples: &[Sample],
    case: String,
) -> CheckOutcome {
    let mut worst: Option<(&Sample, Option<Error>)> = None;
    for s in samples {
        let failure = match identity(s) {
            Ok(true) => continue,
            Ok(false) => None,
            Err(e) => Some(e),
        };
        if worst.as_ref().map_or(true, |(w, _)| s.size() < w.size()) {
            worst = Some((s, failure));
        }
    }
    let outcome = CheckOutcome::new(suite, name, format!("{case} cases={}", samples.len()), worst.is_none());
    match worst {
        None => outcome,
        Some((s, err)) => {
            let mut detail = s.to_json();
            if let Some(e) = err {
                detail["error"] = Value::String(e.to_string());
            }
            outcome.with_detail(detail)
        }
    }
}

fn commutator_tasks(config: &VerifyConfig, tasks: &mut Vec<Task>) {
    for n in 2..=config.max_nvars {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (n as u64) << 8);
        let general: Vec<Sample> =
            (0..config.samples).map(|_| Sample::random(&mut rng, n, config.max_degree)).collect();
        let symmetric: Vec<Sample> = (0..config.samples)
            .map(|_| {
                let mut s = Sample::random(&mut rng, n, config.max_degree);
                s.p = random_symmetric_poly(&mut rng, n, config.max_degree);
                s
            })
            .collect();
        for &(name, identity) in GENERAL_IDENTITIES {
            let samples = general.clone();
            tasks.push(Box::new(move || {
                vec![check_identity(Suite::Commutators, name, identity, &samples, format!("N={n}"))]
            }));
        }
        for &(name, identity) in SYMMETRIC_IDENTITIES {
            let samples = symmetric.clone();
            tasks.push(Box::new(move || {
                vec![check_identity(Suite::Commutators, name, identity, &samples, format!("N={n}"))]
            }));
        }
    }
}

fn sweep(config: &VerifyConfig) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for n in 2..=config.max_nvars {
        for degree in 0..=config.max_degree {
            for lambda in partitions_of(degree, n - 1) {
                out.push((lambda, n));
            }
        }
    }
    out
}

fn oracle_report(lambda: &Partition, n: usize, oracle: &str, expected: &LaurentPoly, got: &LaurentPoly) -> (bool, Value) {
    let matches = expected == got;
    let mut report = json!({ "lambda": lambda.parts(), "nvars": n, "oracle": oracle, "match": matches });
    if !matches {
        report["diff"] = serde_json::to_value(poly_to_json(&(expected - got))).expect("serializable");
    }
    (matches, report)
}

fn oracle_checks(lambda: &Partition, n: usize) -> Vec<CheckOutcome> {
    let suite = Suite::RodriguesVsOracle;
    let case = case_label(lambda, n);
    let c = ctx(n);
    let monic = match jack_monic(lambda, c) {
        Ok(j) => j,
        Err(e) => return vec![CheckOutcome::new(suite, "rodrigues", case, false).with_detail(error_detail(&e))],
    };
    let mut out = Vec::new();
    let mut compare = |name: &str, oracle: Result<LaurentPoly, Error>| {
        let outcome = match oracle {
            Ok(p) => {
                let (ok, report) = oracle_report(lambda, n, name, &p, &monic);
                CheckOutcome::new(suite, name, case.clone(), ok).with_detail(report)
            }
            Err(e) => CheckOutcome::new(suite, name, case.clone(), false).with_detail(error_detail(&e)),
        };
        out.push(outcome);
    };
    compare("triangular", jack_by_triangular_h(lambda, c));
    if lambda.weight() as usize <= n {
        compare("gs", jack_by_gram_schmidt(lambda, c));
    }
    let padded = lambda.padded(n).expect("fits");
    if padded.windows(2).all(|w| w[0] != w[1]) {
        compare("nonsym", jack_by_symmetrization(lambda, c));
    }

    let run = |f: &dyn Fn() -> Result<bool, Error>| f().unwrap_or(false);
    out.push(CheckOutcome::new(
        suite,
        "h-eigenvalue",
        case.clone(),
        run(&|| Ok(apply_h(&monic)? == monic.scale(&eigenvalue_epsilon(lambda, n)?))),
    ));
    out.push(CheckOutcome::new(
        suite,
        "charge",
        case.clone(),
        run(&|| Ok(apply_l(1, &monic)? == monic.scale(&FieldElement::from_int(lambda.weight().into())))),
    ));
    out.push(CheckOutcome::new(
        suite,
        "monic-triangular",
        case.clone(),
        run(&|| {
            let expansion = expand_in_basis(&monic, Basis::Monomial)?;
            let raw = expand_in_basis(&rodrigues_raw(lambda, c)?, Basis::Monomial)?;
            Ok(is_dominance_triangular(&expansion, lambda)
                && expansion.coeff(lambda).is_one()
                && raw.coeff(lambda) == c_coefficient(lambda, c)?)
        }),
    ));
    if !lambda.is_empty() {
        out.push(CheckOutcome::new(
            suite,
            "leading-coefficient",
            case.clone(),
            run(&|| leading_coefficient_holds(lambda, n)),
        ));
    }
    out.push(CheckOutcome::new(
        suite,
        "stanley-integral",
        case,
        run(&|| {
            let stanley = jack(lambda, c, Normalization::Stanley)?.monomial_expansion()?;
            let integral = stanley.coords().all(|(_, v)| is_integral_in_inverse_beta(v));
            Ok(integral)
        }),
    ));
    out
}

/// `B_ℓ^+ m_λ = a_λ m_{λ+1} + lower` and `B_ℓ^+ J_λ = a_λ J_{λ+1}` with `ℓ = l(λ)`.
pub fn leading_coefficient_holds(lambda: &Partition, n: usize) -> Result<bool, Error> {
    let c = ctx(n);
    let ell = lambda.len();
    let all = IndexSet::full(c);
    let a = leading_coefficient(lambda, ell)?;
    let raised = lambda.shift_by_one(ell)?;
    let image = expand_in_basis(&apply_b_plus(ell, &all, &monomial_sym(lambda, c)?)?, Basis::Monomial)?;
    let leading_ok = image.coeff(&raised) == a && is_dominance_triangular(&image, &raised);
    let jack_ok = apply_b_plus(ell, &all, &jack_monic(lambda, c)?)? == jack_monic(&raised, c)?.scale(&a);
    Ok(leading_ok && jack_ok)
}

fn oracle_tasks(config: &VerifyConfig, tasks: &mut Vec<Task>) {
    for (lambda, n) in sweep(config) {
        tasks.push(Box::new(move || oracle_checks(&lambda, n)));
    }
}

fn annihilation_tasks(config: &VerifyConfig, tasks: &mut Vec<Task>) {
    for (lambda, n) in sweep(config) {
        tasks.push(Box::new(move || {
            let phi = rodrigues_raw(&lambda, ctx(n));
            (lambda.len()..n)
                .map(|i| {
                    let result = phi.as_ref().map_err(Clone::clone).and_then(|p| apply_n_tilde(i + 1, p));
                    let check = format!("n-tilde-{}", i + 1);
                    match result {
                        Ok(r) if r.is_zero() => {
                            CheckOutcome::new(Suite::Annihilation, check, case_label(&lambda, n), true)
                        }
                        Ok(r) => CheckOutcome::new(Suite::Annihilation, check, case_label(&lambda, n), false)
                            .with_detail(json!({ "residual": poly_to_json(&r) })),
                        Err(e) => CheckOutcome::new(Suite::Annihilation, check, case_label(&lambda, n), false)
                            .with_detail(error_detail(&e)),
                    }
                })
                .collect()
        }));
    }
}

fn orthogonality_tasks(config: &VerifyConfig, tasks: &mut Vec<Task>) {
    for n in 2..=config.max_nvars {
        for degree in 1..=config.max_degree.min(n as u32) {
            tasks.push(Box::new(move || {
                let shapes = partitions_of(degree, n);
                let result = (|| -> Result<Vec<(usize, usize)>, Error> {
                    let expansions = shapes
                        .iter()
                        .map(|l| expand_in_basis(&jack_monic(l, ctx(n))?, Basis::PowerSum))
                        .collect::<Result<Vec<_>, _>>()?;
                    let mut bad = Vec::new();
                    for a in 0..shapes.len() {
                        for b in a + 1..shapes.len() {
                            if !scalar_product_p(&expansions[a], &expansions[b])?.is_zero() {
                                bad.push((a, b));
                            }
                        }
                    }
                    Ok(bad)
                })();
                vec![pair_outcome("power-sum", &shapes, format!("N={n} degree={degree}"), result)]
            }));
        }
    }
    for beta in [1i64, 2] {
        for n in 2..=config.max_nvars.min(3) {
            for degree in 1..=config.max_degree.min(4) {
                tasks.push(Box::new(move || {
                    let shapes = partitions_of(degree, n);
                    let result = (|| -> Result<Vec<(usize, usize)>, Error> {
                        let polys =
                            shapes.iter().map(|l| jack_monic(l, ctx(n))).collect::<Result<Vec<_>, _>>()?;
                        let mut bad = Vec::new();
                        for a in 0..shapes.len() {
                            for b in a + 1..shapes.len() {
                                if circle_inner_product(&polys[a], &polys[b], &rat(beta))? != rat(0) {
                                    bad.push((a, b));
                                }
                            }
                        }
                        Ok(bad)
                    })();
                    vec![pair_outcome("circle", &shapes, format!("N={n} degree={degree} beta={beta}"), result)]
                }));
            }
        }
    }
}

fn pair_outcome(
    check: &str,
    shapes: &[Partition],
    case: String,
    result: Result<Vec<(usize, usize)>, Error>,
) -> CheckOutcome {
    match result {
        Ok(bad) if bad.is_empty() => CheckOutcome::new(Suite::Orthogonality, check, case, true),
        Ok(bad) => {
            let (a, b) = bad[0];
            CheckOutcome::new(Suite::Orthogonality, check, case, false)
                .with_detail(json!({ "lambda": shapes[a].parts(), "mu": shapes[b].parts() }))
        }
        Err(e) => CheckOutcome::new(Suite::Orthogonality, check, case, false).with_detail(error_detail(&e)),
    }
}

/// Random model parameters and state for the spectrum checks.
#[derive(Clone, Debug)]
pub struct SpectrumCase {
    pub lambda: Partition,
    pub params: ModelParams,
}

impl SpectrumCase {
    pub fn random(rng: &mut ChaCha8Rng, max_nvars: usize, max_degree: u32) -> Self {
        let n = rng.gen_range(1..=max_nvars);
        let shapes = partitions_of(rng.gen_range(0..=max_degree), n);
        let lambda = shapes[rng.gen_range(0..shapes.len())].clone();
        let ratio = |num: i64, den: i64| Rational::new(num.into(), den.into());
        let beta = ratio(rng.gen_range(1..=9), rng.gen_range(1..=5));
        let q = ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        let length = if rng.gen_bool(0.5) {
            Length::TwoPi
        } else {
            Length::Value(ratio(rng.gen_range(1..=20), rng.gen_range(1..=3)))
        };
        SpectrumCase { lambda, params: ModelParams::new(n, beta, length, q).expect("valid parameters") }
    }

    fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.parts(),
            "nparticles": self.params.nparticles,
            "beta": self.params.beta.to_string(),
            "q": self.params.q.to_string(),
            "length": crate::format::length_label(&self.params.length),
        })
    }
}

pub type SpectrumCheck = fn(&SpectrumCase) -> Result<bool, Error>;

fn sc_momentum(c: &SpectrumCase) -> Result<bool, Error> {
    let n = rat(c.params.nparticles as i64);
    let expected = rat(c.lambda.weight().into()) + n * &c.params.q;
    Ok(spectrum::total_momentum(&c.lambda, &c.params)? == expected)
}

fn sc_ground_energy(c: &SpectrumCase) -> Result<bool, Error> {
    let mut at_rest = c.params.clone();
    at_rest.q = rat(0);
    let e0 = spectrum::total_energy(&Partition::empty(), &at_rest)?;
    // (π/L)² = (2π/L)² / 4
    Ok(e0 * rat(4) == spectrum::ground_energy(&c.params))
}

fn sc_spacing(c: &SpectrumCase) -> Result<bool, Error> {
    let kappa = spectrum::quasi_momenta(&c.lambda, &c.params)?;
    Ok(kappa.windows(2).enumerate().all(|(i, w)| {
        let gap = &w[0] - &w[1];
        let tight = c.lambda.part(i) == c.lambda.part(i + 1);
        gap >= c.params.beta && (gap == c.params.beta) == tight
    }))
}

fn sc_energy(c: &SpectrumCase) -> Result<bool, Error> {
    let n = rat(c.params.nparticles as i64);
    let weight = rat(c.lambda.weight().into());
    let eps = eigenvalue_epsilon(&c.lambda, c.params.nparticles)?.specialize(&c.params.beta)?;
    let q = &c.params.q;
    let expected = spectrum::ground_energy(&c.params) / rat(4) + eps + rat(2) * q * weight + n * q * q;
    let mut at_rest = c.params.clone();
    at_rest.q = rat(0);
    let boosted: Rational = spectrum::quasi_momenta(&c.lambda, &at_rest)?
        .into_iter()
        .map(|k| {
            let shifted = k + q;
            &shifted * &shifted
        })
        .sum();
    let energy = spectrum::total_energy(&c.lambda, &c.params)?;
    Ok(energy == expected && energy == boosted)
}

pub const SPECTRUM_CHECKS: &[(&str, SpectrumCheck)] = &[
    ("momentum-sum", sc_momentum),
    ("ground-energy", sc_ground_energy),
    ("exclusion-spacing", sc_spacing),
    ("energy-decomposition", sc_energy),
];

fn spectrum_tasks(config: &VerifyConfig, tasks: &mut Vec<Task>) {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x5eed);
    let count = config.samples.max(1) * 2 + 10;
    let cases: Vec<SpectrumCase> =
        (0..count).map(|_| SpectrumCase::random(&mut rng, config.max_nvars, config.max_degree)).collect();
    for &(name, check) in SPECTRUM_CHECKS {
        let cases = cases.clone();
        tasks.push(Box::new(move || {
            let failed = cases.iter().find(|c| !check(c).unwrap_or(false));
            let outcome =
                CheckOutcome::new(Suite::SpectrumConsistency, name, format!("cases={}", cases.len()), failed.is_none());
            vec![match failed {
                None => outcome,
                Some(c) => outcome.with_detail(c.to_json()),
            }]
        }));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let config = VerifyConfig { suite: Suite::All, max_degree: 3, max_nvars: 3, samples: 4, seed: 7 };
        let outcomes = run(&config, 1).unwrap();
        assert!(!outcomes.is_empty());
        for o in &outcomes {
            assert!(o.pass, "{}", o.line());
        }
    }

    #[test]
    fn thread_count_does_not_change_the_report() {
        let config = VerifyConfig { suite: Suite::RodriguesVsOracle, max_degree: 3, max_nvars: 3, samples: 2, seed: 1 };
        assert_eq!(run(&config, 1).unwrap(), run(&config, 3).unwrap());
    }

    #[test]
    fn failing_identity_keeps_smallest_sample() {
        fn never(_: &Sample) -> Result<bool, Error> {
            Ok(false)
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let samples: Vec<Sample> = (0..5).map(|_| Sample::random(&mut rng, 3, 4)).collect();
        let outcome = check_identity(Suite::Commutators, "never", never, &samples, "N=3".into());
        assert!(!outcome.pass);
        let smallest = samples.iter().map(Sample::size).min().unwrap();
        let kept = outcome.detail.unwrap();
        let kept_terms = kept["poly"]["terms"].as_array().unwrap().len();
        assert!(kept_terms >= 1);
        assert!(samples.iter().any(|s| s.size() == smallest && s.p.len() == kept_terms));
    }
}
