//! Argument parsing and report rendering for the `hankel` binary.
//!
//! Each subcommand has a `run_*` function that returns a serializable
//! document; [`execute`] renders it in the requested format.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::OnceLock;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hankel_bounds::{
    check_caratheodory_bounds, check_mu_monotone, empirical_sup, second_hankel_bound, BoundResult,
    CaratheodoryPoint, ClassKind, ClassSpec, Grid, PhiCoefficients, Preset,
};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

/// Default seed for randomized checks.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// Header of the sweep table.
pub const CSV_HEADER: [&str; 4] = ["param", "value", "bound", "branch"];

fn after_help() -> &'static str {
    static TEXT: OnceLock<String> = OnceLock::new();
    TEXT.get_or_init(|| {
        let mut s = String::from("Classes:\n");
        for (name, what) in [
            ("starlike", "z f'/f subordinate to phi"),
            ("convex", "1 + z f''/f' subordinate to phi"),
            ("rgt", "1 + (f' + gamma z f'' - 1)/tau, with --gamma in [0,1] and --tau a+bi"),
            ("galpha", "(1-alpha) f' + alpha (1 + z f''/f'), with --alpha in [0,1]"),
        ] {
            let _ = writeln!(s, "  {name:<10} {what}");
        }
        s.push_str("\nPresets (--preset):\n");
        for p in Preset::SYNTAX {
            let _ = writeln!(s, "  {p}");
        }
        s.push_str("\nExit status: 0 when every requested check passes, 1 when a check fails, 2 on bad input.");
        s
    })
}

#[derive(Debug, Parser)]
#[command(name = "hankel", version, about = "Second Hankel determinant bounds for subordination classes")]
#[command(after_help = after_help())]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form bound on |a2 a4 - a3^2|
    Bound(BoundArgs),
    /// Compare the bound with a brute-force search
    Verify(VerifyArgs),
    /// Tabulate the bound along one parameter
    Sweep(SweepArgs),
    /// Print the Maclaurin coefficients of a target
    Series(SeriesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassName {
    Starlike,
    Convex,
    Rgt,
    Galpha,
}

#[derive(Debug, Clone, Args)]
pub struct ClassArgs {
    #[arg(long, value_enum, default_value = "starlike")]
    pub class: ClassName,
    /// G class parameter
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
    /// R class parameter
    #[arg(long, default_value_t = 0.0)]
    pub gamma: f64,
    /// R class parameter, as a+bi
    #[arg(long, default_value = "1", value_parser = parse_complex, allow_hyphen_values = true)]
    pub tau: Complex64,
}

impl ClassArgs {
    pub fn kind(&self) -> ClassKind {
        match self.class {
            ClassName::Starlike => ClassKind::Starlike,
            ClassName::Convex => ClassKind::Convex,
            ClassName::Rgt => ClassKind::RGammaTau {
                gamma: self.gamma,
                tau: self.tau,
            },
            ClassName::Galpha => ClassKind::GAlpha { alpha: self.alpha },
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
#[group(multiple = false)]
pub struct PhiSource {
    /// Named target, see the list below
    #[arg(long)]
    pub preset: Option<String>,
    /// B1,B2,B3
    #[arg(long, allow_hyphen_values = true)]
    pub custom: Option<String>,
    /// TOML file with keys B1, B2, B3 and optional label
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl PhiSource {
    pub fn is_given(&self) -> bool {
        self.preset.is_some() || self.custom.is_some() || self.config.is_some()
    }

    pub fn preset(&self) -> Result<Option<Preset>> {
        self.preset
            .as_deref()
            .map(|p| Preset::from_str(p).map_err(Into::into))
            .transpose()
    }

    pub fn resolve(&self) -> Result<PhiCoefficients> {
        if let Some(p) = self.preset()? {
            return Ok(p.coefficients()?);
        }
        if let Some(text) = &self.custom {
            let parts: Vec<&str> = text.split(',').map(str::trim).collect();
            let [b1, b2, b3] = parts[..] else {
                bail!("--custom expects B1,B2,B3, got `{text}`");
            };
            let num = |s: &str| s.parse::<f64>().with_context(|| format!("`{s}` is not a number"));
            return Ok(PhiCoefficients::custom(num(b1)?, num(b2)?, num(b3)?, "custom")?);
        }
        if let Some(path) = &self.config {
            return PhiCoefficients::from_config_path(path)
                .with_context(|| format!("reading {}", path.display()));
        }
        bail!("exactly one of --preset, --custom or --config is required")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    #[command(flatten)]
    pub phi: PhiSource,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    #[command(flatten)]
    pub phi: PhiSource,
    /// n_c,n_r,n_theta
    #[arg(long, default_value = "64,32,64", value_parser = parse_grid)]
    pub grid: Grid,
    /// n_c,n_mu for the monotonicity check
    #[arg(long, default_value = "64,64", value_parser = parse_pair)]
    pub mu_grid: (usize, usize),
    /// Random points for the |c_n| <= 2 check
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Allowed excess of the brute-force sup over the bound
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepVar {
    /// order of starlikeness, preset order_alpha
    #[value(name = "alpha_order")]
    AlphaOrder,
    /// strong starlikeness, preset strongly_beta
    #[value(name = "beta_strong")]
    BetaStrong,
    /// gamma of the R class
    #[value(name = "gamma")]
    Gamma,
    /// alpha of the G class
    #[value(name = "alpha_g")]
    AlphaG,
    /// A of janowski:A,B
    #[value(name = "A")]
    A,
    /// B of janowski:A,B
    #[value(name = "B")]
    B,
}

impl SweepVar {
    pub fn name(self) -> &'static str {
        match self {
            Self::AlphaOrder => "alpha_order",
            Self::BetaStrong => "beta_strong",
            Self::Gamma => "gamma",
            Self::AlphaG => "alpha_g",
            Self::A => "A",
            Self::B => "B",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub var: SweepVar,
    #[arg(long, allow_hyphen_values = true)]
    pub from: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub to: f64,
    #[arg(long)]
    pub step: f64,
    #[command(flatten)]
    pub class: ClassArgs,
    /// Target for gamma and alpha_g sweeps; a janowski preset fixes the other
    /// parameter of A and B sweeps
    #[command(flatten)]
    pub phi: PhiSource,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub phi: PhiSource,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    Complex64::from_str(s.trim()).map_err(|_| format!("`{s}` is not a complex number like 2+0.5i"))
}

fn usizes(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("`{p}` is not a count")))
        .collect()
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    match usizes(s)?[..] {
        [a, b, c] => Grid::new(a, b, c).map_err(|e| e.to_string()),
        _ => Err(format!("expected n_c,n_r,n_theta, got `{s}`")),
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    match usizes(s)?[..] {
        [a, b] => Ok((a, b)),
        _ => Err(format!("expected two counts, got `{s}`")),
    }
}

/// Class parameters in the JSON documents.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ClassParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<[f64; 2]>,
}

/// `{class, phi, bound, branch, P, Q, R, T, closed_form}`.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BoundDoc {
    pub class: &'static str,
    pub params: ClassParams,
    pub phi: PhiCoefficients,
    pub bound: f64,
    pub branch: &'static str,
    #[serde(rename = "P")]
    pub p: f64,
    #[serde(rename = "Q")]
    pub q: f64,
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub closed_form: f64,
}

impl BoundDoc {
    fn new(result: &BoundResult) -> Self {
        let kind = result.spec.kind();
        let params = match *kind {
            ClassKind::RGammaTau { gamma, tau } => ClassParams {
                alpha: None,
                gamma: Some(gamma),
                tau: Some([tau.re, tau.im]),
            },
            ClassKind::GAlpha { alpha } => ClassParams {
                alpha: Some(alpha),
                gamma: None,
                tau: None,
            },
            _ => ClassParams {
                alpha: None,
                gamma: None,
                tau: None,
            },
        };
        Self {
            class: kind.name(),
            params,
            phi: result.spec.phi().clone(),
            bound: result.bound,
            branch: result.branch.as_str(),
            p: result.profile.p,
            q: result.profile.q,
            r: result.profile.r,
            t: result.profile.t,
            closed_form: result.closed_form_value,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ArgmaxDoc {
    pub c: f64,
    pub x: [f64; 2],
    pub z: [f64; 2],
    pub mu: f64,
}

impl From<CaratheodoryPoint> for ArgmaxDoc {
    fn from(p: CaratheodoryPoint) -> Self {
        Self {
            c: p.c(),
            x: [p.x().re, p.x().im],
            z: [p.z().re, p.z().im],
            mu: p.mu(),
        }
    }
}

/// The bound document plus `margin`, `argmax` and the check results.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerifyDoc {
    #[serde(flatten)]
    pub bound: BoundDoc,
    pub empirical_sup: f64,
    pub margin: f64,
    pub argmax: ArgmaxDoc,
    pub grid: [usize; 3],
    pub monotonicity_violations: usize,
    pub max_abs_c2: f64,
    pub max_abs_c3: f64,
    pub tol: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SweepRow {
    pub param: &'static str,
    pub value: f64,
    pub bound: f64,
    pub branch: &'static str,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SeriesDoc {
    pub label: String,
    #[serde(rename = "B1")]
    pub b1: f64,
    #[serde(rename = "B2")]
    pub b2: f64,
    #[serde(rename = "B3")]
    pub b3: f64,
    /// Real Maclaurin coefficients `phi_0 ..= phi_N`.
    pub series: Vec<f64>,
}

fn spec_of(class: &ClassArgs, phi: PhiCoefficients) -> Result<ClassSpec> {
    Ok(ClassSpec::new(class.kind(), phi)?)
}

pub fn run_bound(args: &BoundArgs) -> Result<BoundDoc> {
    let spec = spec_of(&args.class, args.phi.resolve()?)?;
    Ok(BoundDoc::new(&second_hankel_bound(&spec)))
}

pub fn run_verify(args: &VerifyArgs) -> Result<VerifyDoc> {
    let spec = spec_of(&args.class, args.phi.resolve()?)?;
    let bound = second_hankel_bound(&spec);
    let report = empirical_sup(&spec, args.grid)?;
    let (n_c, n_mu) = args.mu_grid;
    let violations = check_mu_monotone(&spec, n_c, n_mu)?;
    let (c2, c3) = check_caratheodory_bounds(args.samples, args.seed)?;
    let passed = report.margin >= -args.tol && violations == 0 && c2 <= 2.0 + 1e-12 && c3 <= 2.0 + 1e-12;
    Ok(VerifyDoc {
        bound: BoundDoc::new(&bound),
        empirical_sup: report.empirical_sup,
        margin: report.margin,
        argmax: report.argmax.into(),
        grid: [report.grid.n_c, report.grid.n_r, report.grid.n_theta],
        monotonicity_violations: violations,
        max_abs_c2: c2,
        max_abs_c3: c3,
        tol: args.tol,
        passed,
    })
}

/// Sweep values `from, from + step, ...` up to `to` inclusive.
pub fn sweep_values(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step.is_finite()) {
        bail!("--step must be positive, got {step}");
    }
    if !(from.is_finite() && to.is_finite()) || to < from {
        bail!("empty range [{from}, {to}]");
    }
    let n = ((to - from) / step + 1e-9).floor() as usize + 1;
    Ok((0..n).map(|k| from + k as f64 * step).collect())
}

/// The spec at one sweep point, or why the point is outside the domain.
fn sweep_spec(args: &SweepArgs, base: &Option<PhiCoefficients>, janowski: (f64, f64), v: f64) -> Result<ClassSpec> {
    let class = &args.class;
    let need_base = || base.clone().context("this sweep needs --preset, --custom or --config");
    let spec = match args.var {
        SweepVar::AlphaOrder => spec_of(class, Preset::OrderAlpha(v).coefficients()?)?,
        SweepVar::BetaStrong => spec_of(class, Preset::StronglyBeta(v).coefficients()?)?,
        SweepVar::A => spec_of(class, Preset::Janowski { a: v, b: janowski.1 }.coefficients()?)?,
        SweepVar::B => spec_of(class, Preset::Janowski { a: janowski.0, b: v }.coefficients()?)?,
        SweepVar::Gamma => ClassSpec::r_gamma_tau(v, class.tau, need_base()?)?,
        SweepVar::AlphaG => ClassSpec::g_alpha(v, need_base()?)?,
    };
    Ok(spec)
}

/// Sweep points rejected as outside the parameter domain, with the reason.
pub type Skipped = Vec<(f64, String)>;

/// Rows in parameter order. Points outside the parameter domain are
/// skipped and returned separately with the reason.
pub fn run_sweep(args: &SweepArgs) -> Result<(Vec<SweepRow>, Skipped)> {
    let values = sweep_values(args.from, args.to, args.step)?;
    let janowski = match args.phi.preset()? {
        Some(Preset::Janowski { a, b }) => (a, b),
        _ => (1.0, -1.0),
    };
    let base = match args.var {
        SweepVar::Gamma | SweepVar::AlphaG => Some(args.phi.resolve()?),
        _ => None,
    };
    let results: Vec<(f64, Result<SweepRow>)> = values
        .par_iter()
        .map(|&v| {
            let row = sweep_spec(args, &base, janowski, v).map(|spec| {
                let b = second_hankel_bound(&spec);
                SweepRow {
                    param: args.var.name(),
                    value: v,
                    bound: b.bound,
                    branch: b.branch.as_str(),
                }
            });
            (v, row)
        })
        .collect();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (v, r) in results {
        match r {
            Ok(row) => rows.push(row),
            Err(e) => skipped.push((v, format!("{e:#}"))),
        }
    }
    if rows.is_empty() {
        bail!("no valid points in [{}, {}]", args.from, args.to);
    }
    Ok((rows, skipped))
}

pub fn run_series(args: &SeriesArgs) -> Result<SeriesDoc> {
    let phi = args.phi.resolve()?;
    let series = match args.phi.preset()? {
        Some(p) => p.series()?,
        None => phi.series(hankel_bounds::WORKING_ORDER),
    };
    Ok(SeriesDoc {
        label: phi.label().to_string(),
        b1: phi.b1(),
        b2: phi.b2(),
        b3: phi.b3(),
        series: series.coeffs().iter().map(|c| c.re).collect(),
    })
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w)?;
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn json(doc: &impl Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(doc)? + "\n")
}

fn bound_csv_record(d: &BoundDoc) -> Vec<String> {
    [d.bound, d.p, d.q, d.r, d.t, d.closed_form]
        .iter()
        .map(f64::to_string)
        .fold(
            vec![
                d.class.to_string(),
                d.phi.label().to_string(),
                d.phi.b1().to_string(),
                d.phi.b2().to_string(),
                d.phi.b3().to_string(),
                d.branch.to_string(),
            ],
            |mut v, s| {
                v.push(s);
                v
            },
        )
}

const BOUND_CSV_HEADER: [&str; 12] = [
    "class", "label", "B1", "B2", "B3", "branch", "bound", "P", "Q", "R", "T", "closed_form",
];

fn human_bound(d: &BoundDoc) -> String {
    let mut s = String::new();
    let mut class = d.class.to_string();
    if let Some(a) = d.params.alpha {
        class += &format!(" (alpha = {a})");
    }
    if let (Some(g), Some([re, im])) = (d.params.gamma, d.params.tau) {
        class += &format!(" (gamma = {g}, tau = {re}{im:+}i)");
    }
    let _ = writeln!(s, "class        {class}");
    let _ = writeln!(
        s,
        "phi          {} (B1 = {}, B2 = {}, B3 = {})",
        d.phi.label(),
        d.phi.b1(),
        d.phi.b2(),
        d.phi.b3()
    );
    let _ = writeln!(s, "bound        {}", d.bound);
    let _ = writeln!(s, "branch       {}", d.branch);
    let _ = writeln!(s, "P, Q, R      {}, {}, {}", d.p, d.q, d.r);
    let _ = writeln!(s, "T            {}", d.t);
    let _ = writeln!(s, "closed form  {}", d.closed_form);
    s
}

pub fn render_bound(d: &BoundDoc, format: Format) -> Result<String> {
    match format {
        Format::Human => Ok(human_bound(d)),
        Format::Json => json(d),
        Format::Csv => csv_string(|w| {
            w.write_record(BOUND_CSV_HEADER)?;
            w.write_record(bound_csv_record(d))
        }),
    }
}

pub fn render_verify(d: &VerifyDoc, format: Format) -> Result<String> {
    match format {
        Format::Json => json(d),
        Format::Human => {
            let mut s = human_bound(&d.bound);
            let a = &d.argmax;
            let _ = writeln!(s, "grid         {} x {} x {}", d.grid[0], d.grid[1], d.grid[2]);
            let _ = writeln!(s, "sup          {}", d.empirical_sup);
            let _ = writeln!(s, "margin       {}", d.margin);
            let _ = writeln!(
                s,
                "argmax       c = {}, x = {}{:+}i, z = {}{:+}i",
                a.c, a.x[0], a.x[1], a.z[0], a.z[1]
            );
            let _ = writeln!(s, "mu checks    {} violations", d.monotonicity_violations);
            let _ = writeln!(s, "max |c2|     {}", d.max_abs_c2);
            let _ = writeln!(s, "max |c3|     {}", d.max_abs_c3);
            let _ = writeln!(s, "result       {}", if d.passed { "pass" } else { "FAIL" });
            Ok(s)
        }
        Format::Csv => csv_string(|w| {
            let mut header: Vec<&str> = BOUND_CSV_HEADER.to_vec();
            header.extend(["empirical_sup", "margin", "monotonicity_violations", "passed"]);
            w.write_record(header)?;
            let mut rec = bound_csv_record(&d.bound);
            rec.extend([
                d.empirical_sup.to_string(),
                d.margin.to_string(),
                d.monotonicity_violations.to_string(),
                d.passed.to_string(),
            ]);
            w.write_record(rec)
        }),
    }
}

pub fn render_sweep(rows: &[SweepRow], format: Format) -> Result<String> {
    match format {
        Format::Csv => csv_string(|w| {
            w.write_record(CSV_HEADER)?;
            for r in rows {
                w.write_record([r.param.to_string(), r.value.to_string(), r.bound.to_string(), r.branch.to_string()])?;
            }
            Ok(())
        }),
        Format::Json => json(&rows),
        Format::Human => {
            let mut s = format!("{:<12} {:>14} {:>22}  branch\n", "param", "value", "bound");
            for r in rows {
                let _ = writeln!(s, "{:<12} {:>14} {:>22}  {}", r.param, r.value, r.bound, r.branch);
            }
            Ok(s)
        }
    }
}

pub fn render_series(d: &SeriesDoc, format: Format) -> Result<String> {
    match format {
        Format::Json => json(d),
        Format::Csv => csv_string(|w| {
            w.write_record(["k", "coefficient"])?;
            for (k, c) in d.series.iter().enumerate() {
                w.write_record([k.to_string(), c.to_string()])?;
            }
            Ok(())
        }),
        Format::Human => {
            let mut s = format!("{}\nB1 = {}\nB2 = {}\nB3 = {}\n", d.label, d.b1, d.b2, d.b3);
            let terms: Vec<String> = d
                .series
                .iter()
                .enumerate()
                .map(|(k, c)| match k {
                    0 => format!("{c}"),
                    1 => format!("{c} z"),
                    _ => format!("{c} z^{k}"),
                })
                .collect();
            let _ = writeln!(s, "phi(z) = {} + O(z^{})", terms.join(" + "), d.series.len());
            Ok(s)
        }
    }
}

/// Whether the run's checks passed; `bound`, `sweep` and `series` have none.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    ChecksFailed,
}

/// Runs `cli`, writing data to `stdout` (or `--output`) and diagnostics to `stderr`.
pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<Status> {
    let (text, out, status) = match &cli.command {
        Command::Bound(a) => {
            let doc = run_bound(a)?;
            (render_bound(&doc, a.out.format.unwrap_or(Format::Human))?, &a.out, Status::Ok)
        }
        Command::Verify(a) => {
            let doc = run_verify(a)?;
            let status = if doc.passed {
                Status::Ok
            } else {
                writeln!(
                    stderr,
                    "verification failed: margin {} (tol {}), {} monotonicity violations",
                    doc.margin, doc.tol, doc.monotonicity_violations
                )?;
                Status::ChecksFailed
            };
            (render_verify(&doc, a.out.format.unwrap_or(Format::Human))?, &a.out, status)
        }
        Command::Sweep(a) => {
            let (rows, skipped) = run_sweep(a)?;
            for (v, why) in &skipped {
                writeln!(stderr, "skipped {} = {v}: {why}", a.var.name())?;
            }
            (render_sweep(&rows, a.out.format.unwrap_or(Format::Csv))?, &a.out, Status::Ok)
        }
        Command::Series(a) => {
            let doc = run_series(a)?;
            (render_series(&doc, a.out.format.unwrap_or(Format::Human))?, &a.out, Status::Ok)
        }
    };
    match &out.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(status)
}
