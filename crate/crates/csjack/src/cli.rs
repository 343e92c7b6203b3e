//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 on success, 1 on a computation or input error, 2 on invalid
//! flags, 3 when a verification suite reports a failure.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use csjack_core::partitions::partitions_of;
use csjack_core::rodrigues::jack;
use csjack_core::spectrum::{self, KappaConvention, Length, ModelParams};
use csjack_core::symbases::{expand_in_basis, Basis};
use csjack_core::{Normalization, Partition, Rational, VarContext};
use num_traits::ToPrimitive;

use crate::error::CliError;
use crate::format::{
    self, expansion_to_json, jack_polynomial_from_json, jack_to_json, poly_from_json, spectrum_to_json, BetaMode,
    JackJson, PolyJson,
};
use crate::verify::{self, Suite, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "csjack", version, about = "Exact Jack polynomials and Calogero-Sutherland spectra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a Jack polynomial from creation operators.
    Jack(JackArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Quasi-momenta, momentum and energy of model eigenstates.
    Spectrum(SpectrumArgs),
    /// Expand a symmetric polynomial in the monomial or power-sum basis.
    Convert(ConvertArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormalizationArg {
    Monic,
    Stanley,
    Raw,
}

impl From<NormalizationArg> for Normalization {
    fn from(n: NormalizationArg) -> Self {
        match n {
            NormalizationArg::Monic => Normalization::Monic,
            NormalizationArg::Stanley => Normalization::Stanley,
            NormalizationArg::Raw => Normalization::Raw,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    M,
    P,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Half,
    /// Shift without the factor 1/2; not self-consistent, kept for comparison.
    Full,
}

fn partition_flag(s: &str) -> Result<Partition, String> {
    format::parse_partition(s)
}

fn beta_flag(s: &str) -> Result<BetaMode, String> {
    BetaMode::parse(s)
}

fn rational_flag(s: &str) -> Result<Rational, String> {
    format::parse_rational(s)
}

fn length_flag(s: &str) -> Result<Length, String> {
    format::parse_length(s)
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".to_string()),
        Ok(n) => Ok(n),
        Err(_) => Err(format!("not a positive integer: {s:?}")),
    }
}

#[derive(Debug, Args)]
pub struct JackArgs {
    /// Comma-separated parts, e.g. 3,1.
    #[arg(long, value_parser = partition_flag)]
    pub lambda: Partition,
    #[arg(long, value_parser = positive)]
    pub nvars: usize,
    #[arg(long, value_enum, default_value_t = NormalizationArg::Monic)]
    pub normalization: NormalizationArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// "sym", an integer, or p/q.
    #[arg(long, default_value = "sym", value_parser = beta_flag)]
    pub beta: BetaMode,
    /// Accept l(lambda) = N by factoring out the Galilei boost.
    #[arg(long)]
    pub allow_shift: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 4)]
    pub max_degree: u32,
    #[arg(long, default_value_t = 3, value_parser = positive)]
    pub max_nvars: usize,
    #[arg(long, default_value_t = 1, value_parser = positive)]
    pub threads: usize,
    /// Random inputs per variable count in the randomized suites.
    #[arg(long, default_value_t = 20, value_parser = positive)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_parser = partition_flag, conflicts_with = "all_degree", required_unless_present = "all_degree")]
    pub lambda: Option<Partition>,
    /// Every partition of this weight with at most N parts.
    #[arg(long)]
    pub all_degree: Option<u32>,
    #[arg(long, value_parser = positive)]
    pub nparticles: usize,
    #[arg(long, value_parser = rational_flag)]
    pub beta: Rational,
    /// "2pi" or a positive rational.
    #[arg(long, default_value = "2pi", value_parser = length_flag)]
    pub length: Length,
    #[arg(long, default_value = "0", value_parser = rational_flag)]
    pub q: Rational,
    #[arg(long, value_enum, default_value_t = ConventionArg::Half)]
    pub kappa_convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// Polynomial or JackResult JSON; standard input when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub basis: BasisArg,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// What a command produced.
struct Rendered {
    text: String,
    failed_checks: bool,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let (output, result) = match cli.command {
        Command::Jack(a) => (a.output.clone(), cmd_jack(&a)),
        Command::Verify(a) => (a.output.clone(), cmd_verify(&a)),
        Command::Spectrum(a) => (a.output.clone(), cmd_spectrum(&a)),
        Command::Convert(a) => (a.output.clone(), cmd_convert(&a, stdin)),
    };
    let rendered = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let written = match output {
        Some(path) => std::fs::write(&path, &rendered.text),
        None => stdout.write_all(rendered.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 1;
    }
    if rendered.failed_checks {
        3
    } else {
        0
    }
}

fn ok(text: String) -> Result<Rendered, CliError> {
    Ok(Rendered { text, failed_checks: false })
}

fn pretty<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn cmd_jack(a: &JackArgs) -> Result<Rendered, CliError> {
    let ctx = VarContext::new(a.nvars)?;
    if a.lambda.len() == a.nvars && !a.allow_shift {
        return Err(CliError::RequiresShift { lambda: a.lambda.to_string(), nvars: a.nvars });
    }
    let result = jack(&a.lambda, ctx, a.normalization.into())?;
    let doc = jack_to_json(&result, &a.beta)?;
    match a.format {
        FormatArg::Json => ok(pretty(&doc)?),
        FormatArg::Text => ok(jack_text(&doc)?),
    }
}

fn jack_text(doc: &JackJson) -> Result<String, CliError> {
    let lambda = Partition::from_parts(&doc.lambda)?;
    let header = vec![
        ("lambda".to_string(), lambda.to_string()),
        ("nvars".to_string(), doc.nvars.to_string()),
        ("normalization".to_string(), doc.normalization.clone()),
        ("beta".to_string(), doc.beta.clone()),
        ("c".to_string(), format::field_from_json(&doc.c)?.to_string()),
    ];
    let mut rows = Vec::new();
    for coord in &doc.monomial_expansion {
        let mu = Partition::from_parts(&coord.partition)?;
        rows.push(vec![format!("m{mu}"), format::field_from_json(&coord.coeff)?.to_string()]);
    }
    let mut out = format::two_columns(&header);
    out.push('\n');
    out.push_str(&format::table(&["term", "coefficient"], &rows));
    Ok(out)
}

fn cmd_verify(a: &VerifyArgs) -> Result<Rendered, CliError> {
    let config = VerifyConfig {
        suite: a.suite,
        max_degree: a.max_degree,
        max_nvars: a.max_nvars,
        samples: a.samples,
        seed: a.seed,
    };
    let outcomes = verify::run(&config, a.threads)?;
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    let text = match a.format {
        FormatArg::Json => pretty(&serde_json::json!({
            "suite": a.suite.name(),
            "max_degree": a.max_degree,
            "max_nvars": a.max_nvars,
            "passed": failed == 0,
            "checks": outcomes,
        }))?,
        FormatArg::Text => {
            let mut s = String::new();
            for o in &outcomes {
                s.push_str(&o.line());
                s.push('\n');
            }
            s.push_str(&format!("{} checks, {} failed\n", outcomes.len(), failed));
            s
        }
    };
    Ok(Rendered { text, failed_checks: failed > 0 })
}

fn cmd_spectrum(a: &SpectrumArgs) -> Result<Rendered, CliError> {
    let convention = match a.kappa_convention {
        ConventionArg::Half => KappaConvention::HalfShift,
        ConventionArg::Full => KappaConvention::FullShift,
    };
    let params =
        ModelParams::new(a.nparticles, a.beta.clone(), a.length.clone(), a.q.clone())?.with_convention(convention);
    let states = match (&a.lambda, a.all_degree) {
        (Some(lambda), _) => vec![lambda.clone()],
        (None, Some(n)) => partitions_of(n, a.nparticles),
        (None, None) => return Err(CliError::Input("either --lambda or --all-degree is required".into())),
    };
    let records = states.iter().map(|l| spectrum::spectrum_record(l, &params)).collect::<Result<Vec<_>, _>>()?;
    let e0 = spectrum::ground_energy(&params);
    match a.format {
        FormatArg::Json => ok(pretty(&spectrum_to_json(&params, &e0, &records))?),
        FormatArg::Text => ok(spectrum_text(&params, &e0, &records)),
    }
}

fn spectrum_text(params: &ModelParams, e0: &Rational, records: &[spectrum::SpectrumRecord]) -> String {
    let json = spectrum_to_json(params, e0, records);
    let mut out = format!(
        "N={}  beta={}  L={}  q={}  convention={}\nE0 = {} (pi/L)^2\n\n",
        json.params.nparticles, json.params.beta, json.params.length, json.params.q, json.params.convention, e0
    );
    // (2π/L)² as a float, only when L is a number
    let unit = match &params.length {
        Length::TwoPi => None,
        Length::Value(l) => l.to_f64().map(|l| (2.0 * std::f64::consts::PI / l).powi(2)),
    };
    let mut header = vec!["lambda", "kappa (2pi/L)", "momentum (2pi/L)", "energy (2pi/L)^2"];
    if unit.is_some() {
        header.push("energy");
    }
    let rows: Vec<Vec<String>> = records
        .iter()
        .zip(&json.states)
        .map(|(r, s)| {
            let mut row = vec![r.lambda.to_string(), s.kappa.join(", "), s.momentum.clone(), s.energy.clone()];
            if let Some(u) = unit {
                let e = r.total_energy.to_f64().unwrap_or(f64::NAN) * u;
                row.push(format!("{e:.9e}"));
            }
            row
        })
        .collect();
    out.push_str(&format::table(&header, &rows));
    out
}

fn cmd_convert(a: &ConvertArgs, stdin: &mut dyn Read) -> Result<Rendered, CliError> {
    let mut input = String::new();
    match &a.input {
        Some(path) => input = std::fs::read_to_string(path)?,
        None => {
            stdin.read_to_string(&mut input)?;
        }
    }
    let value: serde_json::Value = serde_json::from_str(&input)?;
    let poly = if value.get("monomial_expansion").is_some() {
        jack_polynomial_from_json(&serde_json::from_value::<JackJson>(value)?)?
    } else if value.get("terms").is_some() {
        poly_from_json(&serde_json::from_value::<PolyJson>(value)?)?
    } else {
        return Err(CliError::Input("expected polynomial or JackResult JSON".into()));
    };
    let basis = match a.basis {
        BasisArg::M => Basis::Monomial,
        BasisArg::P => Basis::PowerSum,
    };
    ok(pretty(&expansion_to_json(&expand_in_basis(&poly, basis)?)?)?)
}
