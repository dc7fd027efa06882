//! Command-line surface for the workbench: parses ring, ideal, and
//! extension descriptions, dispatches the exact computations, and emits
//! deterministic text or JSON reports.
//!
//! Exit codes: `0` on success, `1` when a check produced a counterexample,
//! `2` on malformed input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use varpi::exponent::ExponentVector;
use varpi::extension::{
    basis_gauge_limit, builtin, min_poly, spectral_norm_ext, ExtensionSpec, FreeExtension,
    UniPoly, BUILTIN_NAMES,
};
use varpi::logvalue::LogValue;
use varpi::parse::{parse_ideal, parse_polynomial, parse_var_names};
use varpi::rees::{in_closure_of_power, rees_valuations, samuel, MonomialValuation};
use varpi::ring_class::{
    classify, rank_one_probe, valuative_probe, BivariateLocalOracle, DvrOracle, LocalRingOracle,
    ProbeOutcome, SemigroupOracle,
};
use varpi::seminorm::{
    gauge, power_bounded, spectral_rees, topologically_nilpotent, GaugeMonoid, TateData,
};
use varpi::star::{is_divisorial, is_invertible, FractionalMonomialIdeal, StarOp};
use varpi::verify::{boundary_check_instance, run_suite, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "varpi",
    version,
    about = "Exact Rees valuations, spectral seminorms, and star operations on monomial Tate rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rees valuations of a monomial ideal.
    Rees(ReesArgs),
    /// Asymptotic Samuel value of a polynomial.
    Samuel(SamuelArgs),
    /// Membership of f in the integral closure of the n-th power.
    Closure(ClosureArgs),
    /// Spectral seminorm of a polynomial in the Tate ring of ϖ.
    Seminorm(SeminormArgs),
    /// Generalized gauge of a monomial.
    Gauge(GaugeArgs),
    /// Check that the Rees valuations of ϖ form a boundary.
    BoundaryCheck(BoundaryCheckArgs),
    /// Apply a star operation to a ϖ-fractional ideal.
    Star(StarArgs),
    /// Classify the Tate ring and report its Shilov boundary.
    Classify(ClassifyArgs),
    /// Probe a local-ring oracle for valuativity.
    Valuative(ValuativeArgs),
    /// Minimal polynomial and spectral seminorm in a finite free extension.
    Ext(ExtArgs),
    /// Run the seeded verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ReesArgs {
    /// Comma-separated variable names, e.g. `x,y`.
    #[arg(long)]
    vars: String,
    /// Ideal in generator notation, e.g. `(x^2, y^3)`.
    #[arg(long, conflicts_with = "file")]
    ideal: Option<String>,
    /// File holding the ideal text.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SamuelArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    vars: String,
    /// Ideal in generator notation.
    #[arg(long, conflicts_with = "file")]
    ideal: Option<String>,
    /// File holding the ideal text.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Polynomial to evaluate.
    #[arg(long)]
    f: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClosureArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    vars: String,
    /// Ideal in generator notation.
    #[arg(long, conflicts_with = "file")]
    ideal: Option<String>,
    /// File holding the ideal text.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Polynomial to test.
    #[arg(long)]
    f: String,
    /// Power of the ideal.
    #[arg(long, default_value_t = 1)]
    n: u32,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SeminormArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    vars: String,
    /// Pseudo-uniformizer as a monomial, e.g. `x*y^2`.
    #[arg(long)]
    omega: String,
    /// Polynomial to evaluate.
    #[arg(long)]
    f: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GaugeArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    vars: String,
    /// Pseudo-uniformizer as a monomial.
    #[arg(long)]
    omega: String,
    /// Monomial whose gauge is evaluated.
    #[arg(long)]
    f: String,
    /// Gauge against the monomials of this ideal instead of the whole ring.
    #[arg(long)]
    ideal: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundaryCheckArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    vars: String,
    /// Pseudo-uniformizer as a monomial.
    #[arg(long)]
    omega: String,
    /// Seed for the monomial corpus.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct StarArgs {
    /// Comma-separated variable names (`w` is reserved for ϖ).
    #[arg(long)]
    vars: String,
    /// Pseudo-uniformizer as a monomial.
    #[arg(long)]
    omega: String,
    /// Fractional ideal, e.g. `w^-1 * (x, y)`.
    #[arg(long)]
    ideal: String,
    /// Star operation: identity, v, t, integral-closure, or
    /// omega-power-envelope.
    #[arg(long, default_value = "v")]
    op: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    vars: String,
    /// Pseudo-uniformizer as a monomial.
    #[arg(long)]
    omega: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ValuativeArgs {
    /// Oracle name: dvr, bivariate, or semigroup.
    #[arg(long)]
    oracle: String,
    /// Semigroup generators, e.g. `2,3`.
    #[arg(long)]
    gens: Option<String>,
    /// Enumeration bound for the probe.
    #[arg(long, default_value_t = 20)]
    bound: u32,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExtArgs {
    /// Built-in extension: sqrt-x, sqrt-x-plus-1, or cusp.
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
    /// JSON file describing the extension.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Element as comma-separated base coordinates, e.g. `0,1` for y.
    #[arg(long)]
    f: String,
    /// Power cutoff for the gauge-limit bracket.
    #[arg(long, default_value_t = 8)]
    bound: u32,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// RNG seed.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Corpus size per suite.
    #[arg(long, default_value_t = 50)]
    corpus: usize,
    /// Maximal number of variables.
    #[arg(long, default_value_t = 3)]
    max_vars: usize,
    /// Maximal generator exponent.
    #[arg(long, default_value_t = 6)]
    max_exp: i64,
    /// Cutoff for doubling-limit brackets.
    #[arg(long, default_value_t = 64)]
    limit_cutoff: u32,
    /// Bound for the valuative probes.
    #[arg(long, default_value_t = 20, value_name = "BOUND")]
    probe_bound: u32,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Rees(args) => rees_cmd(args),
        Command::Samuel(args) => samuel_cmd(args),
        Command::Closure(args) => closure_cmd(args),
        Command::Seminorm(args) => seminorm_cmd(args),
        Command::Gauge(args) => gauge_cmd(args),
        Command::BoundaryCheck(args) => boundary_check_cmd(args),
        Command::Star(args) => star_cmd(args),
        Command::Classify(args) => classify_cmd(args),
        Command::Valuative(args) => valuative_cmd(args),
        Command::Ext(args) => ext_cmd(args),
        Command::Verify(args) => verify_cmd(args),
    }
}

/// Borrowed views of owned variable names, as the parsers expect.
fn name_refs(names: &[String]) -> Vec<&str> {
    names.iter().map(String::as_str).collect()
}

/// The ideal text from either the inline flag or a file.
fn ideal_source(inline: Option<String>, file: Option<PathBuf>) -> Result<String> {
    match (inline, file) {
        (Some(text), None) => Ok(text),
        (None, Some(path)) => {
            let text = fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            Ok(text.trim().to_string())
        }
        _ => bail!("provide exactly one of --ideal or --file"),
    }
}

/// Parses `--omega` as a single monic monomial and builds the Tate data.
fn omega_data(names: &[&str], omega: &str) -> Result<TateData> {
    let poly = parse_polynomial(omega, names)?;
    let terms: Vec<(&ExponentVector, _)> = poly.terms().collect();
    let [(exponent, coefficient)] = terms.as_slice() else {
        bail!("the pseudo-uniformizer must be a single monomial, got `{omega}`");
    };
    if *coefficient != &varpi::scalar::rat_int(1) {
        bail!("the pseudo-uniformizer must have coefficient 1, got `{omega}`");
    }
    Ok(TateData::new(names.len(), (*exponent).clone())?)
}

/// Parses `--f` as a single monic monomial exponent.
fn monomial_exponent(names: &[&str], text: &str) -> Result<ExponentVector> {
    let poly = parse_polynomial(text, names)?;
    let terms: Vec<(&ExponentVector, _)> = poly.terms().collect();
    let [(exponent, coefficient)] = terms.as_slice() else {
        bail!("expected a single monomial, got `{text}`");
    };
    if *coefficient != &varpi::scalar::rat_int(1) {
        bail!("expected a monic monomial, got `{text}`");
    }
    Ok((*exponent).clone())
}

fn emit<T: Serialize>(report: &T) -> Result<()> {
    println!("{}", serde_json::to_string(report)?);
    Ok(())
}

#[derive(Serialize)]
struct ReesReport {
    rees_valuations: Vec<MonomialValuation>,
}

fn rees_cmd(args: ReesArgs) -> Result<ExitCode> {
    let names = parse_var_names(&args.vars)?;
    let names = name_refs(&names);
    let text = ideal_source(args.ideal, args.file)?;
    let ideal = parse_ideal(&text, &names)?;
    let valuations = rees_valuations(&ideal)?;
    if args.json {
        emit(&ReesReport { rees_valuations: valuations })?;
    } else {
        for v in &valuations {
            println!("weight {:?}, normalizer {}", v.weight.entries, v.normalizer);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SamuelReport {
    samuel: String,
}

fn samuel_cmd(args: SamuelArgs) -> Result<ExitCode> {
    let names = parse_var_names(&args.vars)?;
    let names = name_refs(&names);
    let text = ideal_source(args.ideal, args.file)?;
    let ideal = parse_ideal(&text, &names)?;
    let f = parse_polynomial(&args.f, &names)?;
    let value = samuel(&ideal, &f)?;
    if args.json {
        emit(&SamuelReport { samuel: value.to_string() })?;
    } else {
        println!("{value}");
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ClosureReport {
    in_closure: bool,
    n: u32,
}

fn closure_cmd(args: ClosureArgs) -> Result<ExitCode> {
    let names = parse_var_names(&args.vars)?;
    let names = name_refs(&names);
    let text = ideal_source(args.ideal, args.file)?;
    let ideal = parse_ideal(&text, &names)?;
    let f = parse_polynomial(&args.f, &names)?;
    let member = in_closure_of_power(&ideal, &f, args.n)?;
    if args.json {
        emit(&ClosureReport { in_closure: member, n: args.n })?;
    } else {
        println!("{member}");
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SeminormReport {
    power_bounded: bool,
    spectral: LogValue,
    topologically_nilpotent: bool,
}

fn seminorm_cmd(args: SeminormArgs) -> Result<ExitCode> {
    let names = parse_var_names(&args.vars)?;
    let names = name_refs(&names);
    let data = omega_data(&names, &args.omega)?;
    let f = parse_polynomial(&args.f, &names)?;
    let spectral = spectral_rees(&data, &f)?;
    let report = SeminormReport {
        power_bounded: power_bounded(&data, &f)?,
        spectral,
        topologically_nilpotent: topologically_nilpotent(&data, &f)?,
    };
    if args.json {
        emit(&report)?;
    } else {
        println!("{}", report.spectral);
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct GaugeReport {
    gauge: LogValue,
    monoid: &'static str,
}

fn gauge_cmd(args: GaugeArgs) -> Result<ExitCode> {
    let names = parse_var_names(&args.vars)?;
    let names = name_refs(&names);
    let data = omega_data(&names, &args.omega)?;
    let b = monomial_exponent(&names, &args.f)?;
    let (monoid, label) = match &args.ideal {
        None => (GaugeMonoid::RingMonomials, "ring-monomials"),
        Some(text) => {
            let ideal = parse_ideal(text, &names)?;
            (GaugeMonoid::ideal(&data, ideal)?, "ideal-monomials")
        }
    };
    let value = gauge(&data, &monoid, &b)?;
    if args.json {
        emit(&GaugeReport { gauge: value, monoid: label })?;
    } else {
        println!("{value}");
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct BoundaryReport {
    boundary: Vec<MonomialValuation>,
    verdict: &'static str,
    witness: Option<BoundaryWitness>,
}

#[derive(Serialize)]
struct BoundaryWitness {
    f: String,
    n: i64,
}

fn boundary_check_cmd(args: BoundaryCheckArgs) -> Result<ExitCode> {
    let names = parse_var_names(&args.vars)?;
    let names = name_refs(&names);
    let data = omega_data(&names, &args.omega)?;
    let verdict = boundary_check_instance(&data, args.seed)?;
    let report = BoundaryReport {
        boundary: data.boundary_valuations(),
        verdict: if verdict.passed() { "pass" } else { "witness" },
        witness: verdict.witness().map(|(f, n)| BoundaryWitness {
            f: f.to_text(&names),
            n: *n,
        }),
    };
    let failed = report.witness.is_some();
    if args.json {
        emit(&report)?;
    } else {
        println!("boundary of {} valuations: {}", report.boundary.len(), report.verdict);
        if let Some(w) = &report.witness {
            println!("witness: f = {}, n = {}", w.f, w.n);
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

#[derive(Serialize)]
struct StarReport {
    closed: String,
    divisorial: bool,
    invertible: bool,
    op: &'static str,
}

fn star_cmd(args: StarArgs) -> Result<ExitCode> {
    let names = parse_var_names(&args.vars)?;
    let names = name_refs(&names);
    let data = omega_data(&names, &args.omega)?;
    let Some(op) = StarOp::by_name(&args.op) else {
        bail!("unknown star operation `{}`", args.op);
    };
    let ideal = FractionalMonomialIdeal::parse(&data, &names, &args.ideal)?;
    let closed = op.apply(&data, &ideal)?;
    let report = StarReport {
        closed: closed.to_text(&names),
        divisorial: is_divisorial(&data, &ideal)?,
        invertible: is_invertible(&data, &ideal)?,
        op: op.name(),
    };
    if args.json {
        emit(&report)?;
    } else {
        println!("{}", report.closed);
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ClassifyReport {
    boundary: Vec<MonomialValuation>,
    class: &'static str,
    min_primes: Vec<String>,
    wass_primes: Vec<String>,
}

fn classify_cmd(args: ClassifyArgs) -> Result<ExitCode> {
    let names = parse_var_names(&args.vars)?;
    let names = name_refs(&names);
    let data = omega_data(&names, &args.omega)?;
    let report = classify(&data)?;
    let rendered = ClassifyReport {
        boundary: report.boundary,
        class: report.class.as_str(),
        min_primes: report.min_primes.iter().map(|p| p.to_text(&names)).collect(),
        wass_primes: report.wass_primes.iter().map(|p| p.to_text(&names)).collect(),
    };
    if args.json {
        emit(&rendered)?;
    } else {
        println!("class: {}", rendered.class);
        for v in &rendered.boundary {
            println!("boundary weight {:?}, normalizer {}", v.weight.entries, v.normalizer);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ValuativeReport {
    bound: u32,
    oracle: String,
    outcome: &'static str,
    rank_one: bool,
    witness: Option<ValuativeWitness>,
}

#[derive(Serialize)]
struct ValuativeWitness {
    f: String,
    n: u32,
}

fn probe_report<O: LocalRingOracle>(oracle: &O, bound: u32) -> ValuativeReport {
    let outcome = valuative_probe(oracle, bound);
    let (label, witness) = match &outcome {
        ProbeOutcome::ValuativeUpToBound(_) => ("valuative-up-to-bound", None),
        ProbeOutcome::Witness { f, n } => {
            ("witness", Some(ValuativeWitness { f: f.to_string(), n: *n }))
        }
    };
    ValuativeReport {
        bound,
        oracle: oracle.name().to_string(),
        outcome: label,
        rank_one: rank_one_probe(oracle, bound),
        witness,
    }
}

fn valuative_cmd(args: ValuativeArgs) -> Result<ExitCode> {
    let report = match args.oracle.as_str() {
        "dvr" => probe_report(&DvrOracle, args.bound),
        "bivariate" => probe_report(&BivariateLocalOracle, args.bound),
        "semigroup" => {
            let Some(gens) = &args.gens else {
                bail!("--gens is required for the semigroup oracle, e.g. --gens 2,3");
            };
            let parsed: Vec<u32> = gens
                .split(',')
                .map(|g| g.trim().parse().with_context(|| format!("bad generator `{g}`")))
                .collect::<Result<_>>()?;
            probe_report(&SemigroupOracle::new(&parsed)?, args.bound)
        }
        other => bail!("unknown oracle `{other}`; available: dvr, bivariate, semigroup"),
    };
    let failed = report.witness.is_some();
    if args.json {
        emit(&report)?;
    } else {
        match &report.witness {
            None => println!("{}: valuative up to bound {}", report.oracle, report.bound),
            Some(w) => println!("{}: witness f = {}, n = {}", report.oracle, w.f, w.n),
        }
        println!("rank one: {}", report.rank_one);
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

#[derive(Serialize)]
struct ExtReport {
    bracket: ExtBracket,
    min_poly: String,
    spectral: Option<LogValue>,
}

#[derive(Serialize)]
struct ExtBracket {
    lower: LogValue,
    m_star: Option<u32>,
    upper: LogValue,
}

fn load_extension(args: &ExtArgs) -> Result<FreeExtension> {
    match (&args.builtin, &args.file) {
        (Some(name), None) => Ok(builtin(name)?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let spec: ExtensionSpec = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", path.display()))?;
            Ok(spec.build()?)
        }
        _ => bail!(
            "provide exactly one of --builtin ({}) or --file",
            BUILTIN_NAMES.join(", ")
        ),
    }
}

fn ext_cmd(args: ExtArgs) -> Result<ExitCode> {
    let ext = load_extension(&args)?;
    let coords: Vec<UniPoly> = args
        .f
        .split(',')
        .map(|c| Ok(UniPoly::parse(c.trim())?))
        .collect::<Result<_>>()?;
    ext.check_element(&coords)?;
    let p = min_poly(&ext, &coords)?;
    // The spectral formula needs the integrally-closed flag; the bracket is
    // sound either way, so a refusal is reported rather than fatal.
    let spectral = spectral_norm_ext(&ext, &coords).ok();
    let bracket = basis_gauge_limit(&ext, &coords, args.bound)?;
    let report = ExtReport {
        bracket: ExtBracket {
            lower: bracket.lower,
            m_star: bracket.m_star,
            upper: bracket.upper,
        },
        min_poly: p.to_string(),
        spectral,
    };
    if args.json {
        emit(&report)?;
    } else {
        println!("minimal polynomial: {}", report.min_poly);
        match &report.spectral {
            Some(v) => println!("spectral: {v}"),
            None => println!("spectral: refused (extension not integrally closed)"),
        }
        println!(
            "bracket: [{}, {}], closed at {:?}",
            report.bracket.lower, report.bracket.upper, report.bracket.m_star
        );
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyReport {
    config: VerifyEcho,
    reports: Vec<varpi::verify::SuiteReport>,
}

#[derive(Serialize)]
struct VerifyEcho {
    corpus: usize,
    limit_cutoff: u32,
    max_exp: i64,
    max_vars: usize,
    probe_bound: u32,
    seed: u64,
    suite: String,
}

fn verify_cmd(args: VerifyArgs) -> Result<ExitCode> {
    let config = VerifyConfig {
        corpus: args.corpus,
        max_vars: args.max_vars,
        max_exp: args.max_exp,
        limit_cutoff: args.limit_cutoff,
        probe_bound: args.probe_bound,
        seed: args.seed,
    };
    let reports = run_suite(&args.suite, &config)?;
    let failed = reports.iter().any(|r| !r.passed());
    if args.json {
        let echo = VerifyEcho {
            corpus: config.corpus,
            limit_cutoff: config.limit_cutoff,
            max_exp: config.max_exp,
            max_vars: config.max_vars,
            probe_bound: config.probe_bound,
            seed: config.seed,
            suite: args.suite,
        };
        emit(&VerifyReport { config: echo, reports })?;
    } else {
        for report in &reports {
            let verdict = if report.passed() { "pass" } else { "fail" };
            println!("suite {}: {} checks, {verdict}", report.suite, report.checks);
            for witness in &report.witnesses {
                println!("  witness: {witness}");
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
