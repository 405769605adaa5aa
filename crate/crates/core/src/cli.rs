//! Command-line surface behind the `hmp-entropy` binary.
//!
//! Exit codes: 0 success, 2 invalid flags or parameters, 3 tolerance not met
//! within `--max-n`, 4 insufficient data for the estimator, 5 a validation
//! check failed. Data goes to stdout, diagnostics to stderr.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{self, BoundsConfig, BoundsRow, ConvergenceReport, DEFAULT_NODE_BUDGET};
use crate::error::Error;
use crate::forward::{self, ObservationString, MAX_DEPTH, ORACLE_MAX_LEN};
use crate::model::{ContractionInfo, ModelParams};
use crate::parallel::available_threads;
use crate::simulate::{self, BitFormat, McEstimate, GENERATOR};
use crate::validation::{self, CheckOutcome, ValidationOptions};

pub const SCHEMA_VERSION: &str = "1.0";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARAMS: i32 = 2;
pub const EXIT_TOLERANCE: i32 = 3;
pub const EXIT_DATA: i32 = 4;
pub const EXIT_VALIDATION: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "hmp-entropy", version, about = "Certified entropy-rate bounds for binary hidden Markov processes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lower/upper bound table and the final entropy-rate estimate.
    Bounds(BoundsArgs),
    /// Contraction coefficient delta and Lipschitz constant M.
    Contraction(ContractionArgs),
    /// Probability and belief trace of one observation string.
    Prob(ProbArgs),
    /// Sample paths and plug-in entropy-rate estimates.
    Simulate(SimulateArgs),
    /// Run the built-in invariant checks.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmitFormat {
    Ascii,
    Packed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Channel {
    Observed,
    Hidden,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// P(X_k = 1 | X_{k-1} = 0), in (0, 1/2).
    #[arg(long, allow_negative_numbers = true)]
    pub pi01: f64,
    /// P(X_k = 0 | X_{k-1} = 1), in (0, 1/2).
    #[arg(long, allow_negative_numbers = true)]
    pub pi10: f64,
    /// Channel flip probability, in [0, 1/2].
    #[arg(long, allow_negative_numbers = true)]
    pub eps: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Include wall-clock timing in JSON output.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Target half-width of the final interval, in bits.
    #[arg(long, default_value_t = 1e-6, allow_negative_numbers = true)]
    pub tol: f64,
    /// Deepest row to compute (at most 30).
    #[arg(long, default_value_t = 25)]
    pub max_n: usize,
    /// Worker threads; 1 runs the sequential reference path.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Largest tree level kept in memory; deeper rows are streamed.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub node_budget: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ContractionArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ProbArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Observation string over {0, 1}.
    #[arg(long)]
    pub sequence: String,
    /// Also evaluate the brute-force marginalization (length <= 14).
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Path length.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the sampled path to this file ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    pub emit: Option<String>,
    #[arg(long, value_enum, default_value_t = EmitFormat::Ascii)]
    pub emit_format: EmitFormat,
    /// Which sequence `--emit` writes.
    #[arg(long, value_enum, default_value_t = Channel::Observed)]
    pub channel: Channel,
    /// Print a plug-in entropy-rate estimate of the observed path.
    #[arg(long)]
    pub estimate: bool,
    /// Context length for `--estimate`.
    #[arg(long, default_value_t = 8)]
    pub block_k: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Lower depth caps for a fast run.
    #[arg(long)]
    pub quick: bool,
    #[arg(long)]
    pub threads: Option<usize>,
    /// Corrupt one check on purpose to exercise the failure path.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Echo of the validated parameters.
#[derive(Debug, Serialize)]
pub struct ParamsEcho {
    pub pi01: f64,
    pub pi10: f64,
    pub eps: f64,
    pub p0: f64,
    pub strict_regime: bool,
}

impl From<&ModelParams> for ParamsEcho {
    fn from(p: &ModelParams) -> Self {
        Self {
            pi01: p.pi01(),
            pi10: p.pi10(),
            eps: p.eps(),
            p0: p.p0(),
            strict_regime: p.strict_regime(),
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Metadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<&'static str>,
}

/// Envelope shared by every JSON document the CLI emits.
#[derive(Debug, Serialize)]
pub struct OutputRecord<T: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsEcho>,
    pub results: T,
    pub metadata: Metadata,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_seconds: Option<f64>,
}

/// Writes every float as 17 significant digits in exponent form.
struct PreciseFormatter;

impl serde_json::ser::Formatter for PreciseFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// Serializes to a single-line JSON object with full-precision floats.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, PreciseFormatter);
    value.serialize(&mut ser).expect("output records always serialize");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// Float rendering for CSV cells.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

struct Outcome {
    code: i32,
    stdout: Vec<u8>,
    stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout: stdout.into_bytes(),
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: String) -> Self {
        Self {
            code,
            stdout: Vec::new(),
            stderr: message,
        }
    }
}

fn param_error(err: &Error) -> Outcome {
    let message = match err {
        Error::Parameter { field, value, reason } => {
            format!("error: invalid value for --{}: {reason} (got {value})", field.replace('_', "-"))
        }
        Error::Capacity { requested, limit, .. } => {
            format!("error: invalid value for --max-n: {requested} exceeds the hard cap of {limit}")
        }
        Error::Symbol { .. } | Error::Length { .. } => format!("error: invalid value for --sequence: {err}"),
        Error::InsufficientData { .. } => return Outcome::fail(EXIT_DATA, format!("error: {err}")),
    };
    Outcome::fail(EXIT_PARAMS, message)
}

fn params_from(args: &ParamArgs) -> Result<ModelParams, Outcome> {
    ModelParams::new(args.pi01, args.pi10, args.eps).map_err(|e| param_error(&e))
}

fn threads_from(requested: Option<usize>) -> Result<usize, Outcome> {
    match requested {
        Some(0) => Err(Outcome::fail(EXIT_PARAMS, "error: invalid value for --threads: must be at least 1".into())),
        Some(t) => Ok(t),
        None => Ok(available_threads()),
    }
}

/// Parses `args` (including the program name) and runs the command.
///
/// Returns the exit code; data is written to `stdout` and diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_PARAMS } else { EXIT_OK };
            let rendered = err.render().to_string();
            let sink: &mut dyn Write = if err.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Bounds(a) => cmd_bounds(&a),
        Command::Contraction(a) => cmd_contraction(&a),
        Command::Prob(a) => cmd_prob(&a),
        Command::Simulate(a) => cmd_simulate(&a),
        Command::Validate(a) => cmd_validate(&a),
    };
    if stdout.write_all(&outcome.stdout).and_then(|()| stdout.flush()).is_err() {
        return EXIT_PARAMS;
    }
    if !outcome.stderr.is_empty() {
        let _ = writeln!(stderr, "{}", outcome.stderr.trim_end());
    }
    outcome.code
}

fn elapsed(start: Instant, output: &OutputArgs) -> Option<f64> {
    output.timing.then(|| start.elapsed().as_secs_f64())
}

#[derive(Serialize)]
struct BoundsResults<'a> {
    tol: f64,
    max_n: usize,
    rows: &'a [BoundsRow],
    estimate: f64,
    guaranteed_error: f64,
    converged: bool,
    contraction: &'a ContractionInfo,
}

fn bounds_human(report: &ConvergenceReport, tol: f64) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>3}  {:>18}  {:>18}  {:>18}  {:>12}  {:>12}",
        "n", "L", "H", "U", "width", "geo"
    );
    for r in &report.rows {
        let geo = r.geo.map_or_else(|| "-".to_string(), |g| format!("{g:.6e}"));
        let _ = writeln!(
            s,
            "{:>3}  {:>18.15}  {:>18.15}  {:>18.15}  {:>12.6e}  {:>12}",
            r.n, r.lower, r.approx, r.upper, r.width, geo
        );
    }
    let last = report.last();
    let _ = writeln!(
        s,
        "\nentropy rate = {:.15} +/- {:.3e} bits/symbol ({} at n = {}, tol {tol:e})",
        report.estimate,
        report.guaranteed_error,
        if report.converged { "converged" } else { "NOT converged" },
        last.n
    );
    let _ = writeln!(
        s,
        "delta = {:.9}, M = {:.9}, contractive = {}",
        report.contraction.delta, report.contraction.big_m, report.contraction.contractive
    );
    s
}

/// CSV table with the fixed column order `n,L,H,U,width,geo`.
pub fn bounds_csv(rows: &[BoundsRow]) -> String {
    let mut s = String::from("n,L,H,U,width,geo\n");
    for r in rows {
        let geo = r.geo.map(num).unwrap_or_default();
        let _ = writeln!(
            s,
            "{},{},{},{},{},{}",
            r.n,
            num(r.lower),
            num(r.approx),
            num(r.upper),
            num(r.width),
            geo
        );
    }
    s
}

fn cmd_bounds(a: &BoundsArgs) -> Outcome {
    let start = Instant::now();
    let params = match params_from(&a.params) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let threads = match threads_from(a.threads) {
        Ok(t) => t,
        Err(o) => return o,
    };
    if a.node_budget == 0 {
        return Outcome::fail(EXIT_PARAMS, "error: invalid value for --node-budget: must be positive".into());
    }
    let config = BoundsConfig {
        threads,
        node_budget: a.node_budget,
    };
    let report = match bounds::run_with(&params, a.tol, a.max_n, &config) {
        Ok(r) => r,
        Err(e) => return param_error(&e),
    };
    let body = match a.output.format {
        Format::Human => bounds_human(&report, a.tol),
        Format::Csv => bounds_csv(&report.rows),
        Format::Json => {
            let record = OutputRecord {
                schema_version: SCHEMA_VERSION,
                command: "bounds",
                params: Some((&params).into()),
                results: BoundsResults {
                    tol: a.tol,
                    max_n: a.max_n,
                    rows: &report.rows,
                    estimate: report.estimate,
                    guaranteed_error: report.guaranteed_error,
                    converged: report.converged,
                    contraction: &report.contraction,
                },
                metadata: Metadata {
                    threads: Some(threads),
                    ..Metadata::default()
                },
                timing_seconds: elapsed(start, &a.output),
            };
            to_json(&record) + "\n"
        }
    };
    let mut out = Outcome::ok(body);
    if !report.converged {
        out.code = EXIT_TOLERANCE;
        out.stderr = format!(
            "tolerance {:e} not reached by n = {} (final width {:e})",
            a.tol,
            report.last().n,
            report.last().width
        );
    }
    out
}

#[derive(Serialize)]
struct ContractionResults {
    delta: f64,
    #[serde(rename = "bigM")]
    big_m: f64,
    contractive: bool,
    strict_regime: bool,
}

fn cmd_contraction(a: &ContractionArgs) -> Outcome {
    let start = Instant::now();
    let params = match params_from(&a.params) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let c = params.contraction();
    let results = ContractionResults {
        delta: c.delta,
        big_m: c.big_m,
        contractive: c.contractive,
        strict_regime: params.strict_regime(),
    };
    Outcome::ok(match a.output.format {
        Format::Human => format!(
            "delta         = {:.15}\nbigM          = {:.15}\ncontractive   = {}\nstrict_regime = {}\n",
            results.delta, results.big_m, results.contractive, results.strict_regime
        ),
        Format::Csv => format!(
            "delta,bigM,contractive,strict_regime\n{},{},{},{}\n",
            num(results.delta),
            num(results.big_m),
            results.contractive,
            results.strict_regime
        ),
        Format::Json => {
            to_json(&OutputRecord {
                schema_version: SCHEMA_VERSION,
                command: "contraction",
                params: Some((&params).into()),
                results,
                metadata: Metadata::default(),
                timing_seconds: elapsed(start, &a.output),
            }) + "\n"
        }
    })
}

#[derive(Serialize)]
struct ProbResults {
    sequence: String,
    prob: f64,
    beliefs: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    difference: Option<f64>,
}

fn cmd_prob(a: &ProbArgs) -> Outcome {
    let start = Instant::now();
    let params = match params_from(&a.params) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let z = match ObservationString::parse_bounded(&a.sequence, MAX_DEPTH) {
        Ok(z) if !z.is_empty() => z,
        Ok(_) => return Outcome::fail(EXIT_PARAMS, "error: invalid value for --sequence: must not be empty".into()),
        Err(e) => return param_error(&e),
    };
    let trace = forward::sequence_prob(&params, &z);
    let mut note = String::new();
    let oracle = if a.oracle {
        if z.len() <= ORACLE_MAX_LEN {
            forward::brute_force_prob(&params, &z).ok()
        } else {
            note = format!("note: oracle skipped, sequence longer than {ORACLE_MAX_LEN}");
            None
        }
    } else {
        None
    };
    let results = ProbResults {
        sequence: z.to_string(),
        prob: trace.prob,
        beliefs: trace.beliefs,
        difference: oracle.map(|o| (trace.prob - o).abs()),
        oracle,
    };
    let body = match a.output.format {
        Format::Human => {
            let mut s = format!("P({}) = {:.17}\n", results.sequence, results.prob);
            for (k, b) in results.beliefs.iter().enumerate() {
                let _ = writeln!(s, "  belief[{k}] = {b:.17}");
            }
            if let (Some(o), Some(d)) = (results.oracle, results.difference) {
                let _ = writeln!(s, "oracle = {o:.17}\n|difference| = {d:.3e}");
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("k,belief\n");
            for (k, b) in results.beliefs.iter().enumerate() {
                let _ = writeln!(s, "{k},{}", num(*b));
            }
            let mut head = String::from("sequence,prob,oracle,difference\n");
            let _ = writeln!(
                head,
                "{},{},{},{}",
                results.sequence,
                num(results.prob),
                results.oracle.map(num).unwrap_or_default(),
                results.difference.map(num).unwrap_or_default()
            );
            head + "\n" + &s
        }
        Format::Json => {
            to_json(&OutputRecord {
                schema_version: SCHEMA_VERSION,
                command: "prob",
                params: Some((&params).into()),
                results,
                metadata: Metadata::default(),
                timing_seconds: elapsed(start, &a.output),
            }) + "\n"
        }
    };
    let mut out = Outcome::ok(body);
    out.stderr = note;
    out
}

#[derive(Serialize)]
struct SimulateResults {
    n: usize,
    observed_zero_frequency: f64,
    hidden_zero_frequency: f64,
    flip_rate: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    estimate: Option<McEstimate>,
}

fn cmd_simulate(a: &SimulateArgs) -> Outcome {
    let start = Instant::now();
    let params = match params_from(&a.params) {
        Ok(p) => p,
        Err(o) => return o,
    };
    if a.n == 0 {
        return Outcome::fail(EXIT_PARAMS, "error: invalid value for --n: must be at least 1".into());
    }
    let emit_to_stdout = a.emit.as_deref() == Some("-");
    if emit_to_stdout && a.estimate {
        return Outcome::fail(
            EXIT_PARAMS,
            "error: --emit - and --estimate both write to stdout; emit to a file instead".into(),
        );
    }
    let path = simulate::sample_path(&params, a.n, a.seed);
    let estimate = if a.estimate {
        match simulate::plugin_entropy_rate(&path.observed, a.block_k) {
            Ok(e) => Some(e),
            Err(e) => return param_error(&e),
        }
    } else {
        None
    };

    let bits = match a.channel {
        Channel::Observed => &path.observed,
        Channel::Hidden => &path.hidden,
    };
    let format = match a.emit_format {
        EmitFormat::Ascii => BitFormat::Ascii,
        EmitFormat::Packed => BitFormat::Packed,
    };
    if emit_to_stdout {
        let mut buf = Vec::new();
        simulate::write_bits(&mut buf, bits, format).expect("writing to memory cannot fail");
        return Outcome {
            code: EXIT_OK,
            stdout: buf,
            stderr: String::new(),
        };
    }
    if let Some(file) = &a.emit {
        let written = File::create(file).and_then(|f| {
            let mut w = BufWriter::new(f);
            simulate::write_bits(&mut w, bits, format)?;
            w.flush()
        });
        if let Err(e) = written {
            return Outcome::fail(EXIT_PARAMS, format!("error: invalid value for --emit: cannot write {file}: {e}"));
        }
    }

    let results = SimulateResults {
        n: a.n,
        observed_zero_frequency: simulate::zero_frequency(&path.observed),
        hidden_zero_frequency: simulate::zero_frequency(&path.hidden),
        flip_rate: path.flip_rate(),
        estimate,
    };
    Outcome::ok(match a.output.format {
        Format::Human => {
            let mut s = format!(
                "n = {}, seed = {}, generator = {GENERATOR}\nobserved P(0) = {:.6}, hidden P(0) = {:.6}, flip rate = {:.6}\n",
                a.n, a.seed, results.observed_zero_frequency, results.hidden_zero_frequency, results.flip_rate
            );
            if let Some(e) = &results.estimate {
                let _ = writeln!(
                    s,
                    "plug-in entropy rate (k = {}) = {:.9} +/- {:.3e} bits/symbol over {} blocks",
                    e.block_k, e.value, e.stderr, e.n_samples
                );
            }
            s
        }
        Format::Csv => {
            let mut s = String::from(
                "n,seed,generator,observed_zero_frequency,hidden_zero_frequency,flip_rate,value,stderr,n_samples,block_k\n",
            );
            let e = results.estimate;
            let _ = writeln!(
                s,
                "{},{},\"{GENERATOR}\",{},{},{},{},{},{},{}",
                a.n,
                a.seed,
                num(results.observed_zero_frequency),
                num(results.hidden_zero_frequency),
                num(results.flip_rate),
                e.map(|e| num(e.value)).unwrap_or_default(),
                e.map(|e| num(e.stderr)).unwrap_or_default(),
                e.map(|e| e.n_samples.to_string()).unwrap_or_default(),
                e.map(|e| e.block_k.to_string()).unwrap_or_default(),
            );
            s
        }
        Format::Json => {
            to_json(&OutputRecord {
                schema_version: SCHEMA_VERSION,
                command: "simulate",
                params: Some((&params).into()),
                results,
                metadata: Metadata {
                    seed: Some(a.seed),
                    generator: Some(GENERATOR),
                    ..Metadata::default()
                },
                timing_seconds: elapsed(start, &a.output),
            }) + "\n"
        }
    })
}

#[derive(Serialize)]
struct ValidateResults<'a> {
    quick: bool,
    passed: bool,
    checks: &'a [CheckOutcome],
}

fn cmd_validate(a: &ValidateArgs) -> Outcome {
    let start = Instant::now();
    let threads = match threads_from(a.threads) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let opts = ValidationOptions {
        quick: a.quick,
        threads,
        inject_fault: a.inject_fault,
    };
    let checks = validation::run_suite(&opts);
    let first_failure = checks.iter().find(|c| !c.passed);
    let body = match a.output.format {
        Format::Human => {
            let mut s = String::new();
            for c in &checks {
                let _ = writeln!(s, "{} {:<40} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("check,passed,detail\n");
            for c in &checks {
                let _ = writeln!(s, "\"{}\",{},\"{}\"", c.name, c.passed, c.detail);
            }
            s
        }
        Format::Json => {
            to_json(&OutputRecord {
                schema_version: SCHEMA_VERSION,
                command: "validate",
                params: None,
                results: ValidateResults {
                    quick: a.quick,
                    passed: first_failure.is_none(),
                    checks: &checks,
                },
                metadata: Metadata {
                    threads: Some(threads),
                    ..Metadata::default()
                },
                timing_seconds: elapsed(start, &a.output),
            }) + "\n"
        }
    };
    let mut out = Outcome::ok(body);
    if let Some(c) = first_failure {
        out.code = EXIT_VALIDATION;
        out.stderr = format!("validation failed: {}", c.name);
    }
    out
}
