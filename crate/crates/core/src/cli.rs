//! Command-line front end. The `zalcman` binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 when every check passes, 1 when some row misses its bound
//! by more than the tolerance, 2 on usage or parameter errors.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::Error;
use crate::extremal::{verify_sharpness, ExtremalMassAssignment, Witness};
use crate::functionals::{zalcman_ratio, Lambda, ZalcmanParams};
use crate::measures::FunctionClass;
use crate::optimizer::{
    lambda_in_range, maximize_abs_phi_hurwitz, maximize_re_phi, theoretical_bound, OptimizerConfig,
};
use crate::report::{format_report, Check, Format, Report, Row};
use crate::series::{hayman_index_estimate, NamedFunction};

/// Environment variable consulted for the default `--seed`.
pub const SEED_ENV: &str = "ZALCMAN_SEED";

pub const DEFAULT_SHARPNESS_TOL: f64 = 1e-12;
pub const DEFAULT_OPTIMIZE_TOL: f64 = 1e-6;
pub const DEFAULT_GRID_ORACLE_TOL: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(name = "zalcman", about = "Bounds, extremal functions and numerical checks for λ·a_n² − a_{2n−1}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Output format.
    #[arg(long, default_value = "json", value_parser = parse_format)]
    format: Format,
    /// Write the report to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Override the tolerance used for pass/fail.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct Sweep {
    #[arg(long, value_parser = parse_class)]
    class: FunctionClass,
    /// Comma-separated λ values; decimals or ratios such as 4/3.
    #[arg(long, value_parser = parse_lambdas)]
    lambda: LambdaList,
    /// Index n or inclusive range a:b.
    #[arg(long, value_parser = parse_range)]
    n: IndexRange,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form sharp bounds.
    Bounds {
        #[command(flatten)]
        sweep: Sweep,
        #[command(flatten)]
        output: Output,
    },
    /// Numerical maximization compared with the sharp bound.
    Optimize {
        #[command(flatten)]
        sweep: Sweep,
        #[arg(long, default_value_t = 4)]
        grid_mult: usize,
        #[arg(long, default_value_t = 16)]
        starts: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 10_000)]
        max_iter: usize,
        #[arg(long, default_value_t = 1e-10)]
        step_tol: f64,
        /// Grid resolution for the Hurwitz class.
        #[arg(long, default_value_t = 2000)]
        resolution: usize,
        /// Allow λ outside the proven range; no bound is reported there.
        #[arg(long)]
        exploratory: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Build extremal functions and check they attain the bound.
    ExtremalCheck {
        #[command(flatten)]
        sweep: Sweep,
        /// Comma-separated masses m_1..m_{2n−2} (single n only).
        #[arg(long, value_delimiter = ',')]
        masses: Option<Vec<f64>>,
        /// Check this many random witnesses per (λ, n) instead of the default one.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Argument of the Hurwitz phase α = e^{i·arg}.
        #[arg(long, default_value_t = 0.0)]
        alpha_arg: f64,
        #[command(flatten)]
        output: Output,
    },
    /// |a_n² − a_{2n−1}|/(n−1)² along a range of n.
    Asymptotics {
        #[arg(long, value_parser = parse_function)]
        function: FunctionName,
        #[arg(long, value_parser = parse_range)]
        n: IndexRange,
        /// Angle for nw-log, argument of α for hurwitz-monomial.
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Degree of hurwitz-monomial.
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Check ratio ≤ 1 − δ on every row.
        #[arg(long)]
        delta: Option<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// (1−r)²·M(r, f) along a radius schedule.
    Hayman {
        #[arg(long, value_parser = parse_function)]
        function: FunctionName,
        /// Comma-separated increasing radii; the last must be at least 0.999.
        #[arg(long, value_delimiter = ',', default_value = "0.9,0.99,0.999,0.9999")]
        radii: Vec<f64>,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone)]
struct LambdaList(Vec<(String, Lambda)>);

#[derive(Debug, Clone, Copy)]
struct IndexRange(usize, usize);

impl IndexRange {
    fn iter(&self) -> impl Iterator<Item = usize> {
        self.0..=self.1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FunctionName {
    Identity,
    Koebe,
    HalfPlane,
    NwLog,
    HurwitzMonomial,
}

impl FunctionName {
    fn resolve(self, theta: f64, degree: usize) -> NamedFunction {
        match self {
            Self::Identity => NamedFunction::Identity,
            Self::Koebe => NamedFunction::Koebe,
            Self::HalfPlane => NamedFunction::HalfPlane,
            Self::NwLog => NamedFunction::NwLog { theta },
            Self::HurwitzMonomial => NamedFunction::HurwitzMonomial {
                n: degree,
                alpha: Complex64::from_polar(1.0, theta),
            },
        }
    }
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_class(s: &str) -> Result<FunctionClass, String> {
    s.parse()
}

fn parse_lambdas(s: &str) -> Result<LambdaList, String> {
    s.split(',')
        .map(|t| Ok((t.trim().to_string(), t.parse::<Lambda>()?)))
        .collect::<Result<Vec<_>, String>>()
        .map(LambdaList)
}

fn parse_range(s: &str) -> Result<IndexRange, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("'{t}' is not an index"));
    let (a, b) = match s.split_once(':') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let a = parse(s)?;
            (a, a)
        }
    };
    if a < 2 {
        return Err(format!("n must be at least 2, got {a}"));
    }
    if b < a {
        return Err(format!("empty range {a}:{b}"));
    }
    Ok(IndexRange(a, b))
}

fn parse_function(s: &str) -> Result<FunctionName, String> {
    match s {
        "identity" => Ok(FunctionName::Identity),
        "koebe" => Ok(FunctionName::Koebe),
        "halfplane" | "half-plane" => Ok(FunctionName::HalfPlane),
        "nw-log" => Ok(FunctionName::NwLog),
        "hurwitz-monomial" => Ok(FunctionName::HurwitzMonomial),
        other => Err(format!(
            "unknown function '{other}' (expected identity, koebe, halfplane, nw-log or hurwitz-monomial)"
        )),
    }
}

/// Outcome of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutcome {
    fn usage(message: String) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

fn seed_or_env(seed: Option<u64>) -> Result<u64, String> {
    match seed {
        Some(s) => Ok(s),
        None => match std::env::var(SEED_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| format!("{SEED_ENV}='{v}' is not an unsigned integer")),
            Err(_) => Ok(0),
        },
    }
}

fn sweep_params(sweep: &Sweep) -> BTreeMap<String, serde_json::Value> {
    let mut p = BTreeMap::new();
    p.insert("class".into(), json!(sweep.class.tag()));
    let lambdas: Vec<&str> = sweep.lambda.0.iter().map(|(s, _)| s.as_str()).collect();
    p.insert("lambda".into(), json!(lambdas));
    p.insert("n".into(), json!(format!("{}:{}", sweep.n.0, sweep.n.1)));
    p
}

fn for_each_case(
    sweep: &Sweep,
    mut f: impl FnMut(&ZalcmanParams) -> Result<Vec<Row>, Error>,
) -> Result<Vec<Row>, Error> {
    let mut rows = Vec::new();
    for (_, lambda) in &sweep.lambda.0 {
        for n in sweep.n.iter() {
            rows.extend(f(&ZalcmanParams::with_lambda(*lambda, n)?)?);
        }
    }
    Ok(rows)
}

/// Runs the tool on `argv` (including the program name) and captures its output.
pub fn run<I, S>(argv: I) -> CliOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutcome { code, stdout: text, stderr: String::new() }
            } else {
                CliOutcome::usage(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(message) => CliOutcome::usage(format!("error: {message}\n")),
    }
}

fn execute(command: Command) -> Result<CliOutcome, String> {
    let (report, output, tol) = build_report(command)?;
    let text = format_report(&report, output.format).map_err(|e| e.to_string())?;
    let code = if report.all_pass(tol) { 0 } else { 1 };
    let stdout = match &output.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            String::new()
        }
        None => text,
    };
    let stderr = if code == 1 {
        format!("check failed: some row differs from its bound by more than {tol:e}\n")
    } else {
        String::new()
    };
    Ok(CliOutcome { code, stdout, stderr })
}

fn build_report(command: Command) -> Result<(Report, Output, f64), String> {
    let err = |e: Error| e.to_string();
    match command {
        Command::Bounds { sweep, output } => {
            let rows = for_each_case(&sweep, |p| {
                let bound = theoretical_bound(sweep.class, p)?;
                Ok(vec![Row {
                    class: Some(sweep.class),
                    lambda: Some(p.lambda()),
                    n: Some(p.n),
                    value: bound,
                    bound: Some(bound),
                    gap: Some(0.0),
                    check: Some(Check::Equality),
                    ..Default::default()
                }])
            })
            .map_err(err)?;
            let tol = output.tol.unwrap_or(DEFAULT_SHARPNESS_TOL);
            let mut params = sweep_params(&sweep);
            params.insert("tol".into(), json!(tol));
            Ok((Report::new("bounds", params, rows).map_err(err)?, output, tol))
        }
        Command::Optimize {
            sweep,
            grid_mult,
            starts,
            seed,
            max_iter,
            step_tol,
            resolution,
            exploratory,
            output,
        } => {
            let seed = seed_or_env(seed)?;
            let cfg = OptimizerConfig {
                grid_multiplier: grid_mult,
                starts,
                step_tolerance: step_tol,
                max_iterations: max_iter,
                seed,
                exploratory,
            };
            let hurwitz = sweep.class == FunctionClass::Hurwitz;
            let rows = for_each_case(&sweep, |p| {
                let bound = if exploratory && !lambda_in_range(sweep.class, p) {
                    None
                } else {
                    Some(theoretical_bound(sweep.class, p)?)
                };
                let result = if hurwitz {
                    maximize_abs_phi_hurwitz(p, resolution)?
                } else {
                    maximize_re_phi(sweep.class, p, &cfg)?
                };
                Ok(vec![Row {
                    class: Some(sweep.class),
                    lambda: Some(p.lambda()),
                    n: Some(p.n),
                    value: result.value,
                    bound,
                    gap: bound.map(|b| (result.value - b).abs()),
                    converged: Some(result.converged),
                    iterations: Some(result.iterations),
                    starts_used: Some(result.starts_used),
                    check: bound.map(|_| Check::Equality),
                    argmax: Some(result.argmax),
                    ..Default::default()
                }])
            })
            .map_err(err)?;
            let default_tol = if hurwitz { DEFAULT_GRID_ORACLE_TOL } else { DEFAULT_OPTIMIZE_TOL };
            let tol = output.tol.unwrap_or(default_tol);
            let mut params = sweep_params(&sweep);
            if hurwitz {
                params.insert("resolution".into(), json!(resolution));
            } else {
                params.insert("grid_mult".into(), json!(grid_mult));
                params.insert("starts".into(), json!(starts));
                params.insert("seed".into(), json!(seed));
                params.insert("max_iter".into(), json!(max_iter));
                params.insert("step_tol".into(), json!(step_tol));
            }
            params.insert("exploratory".into(), json!(exploratory));
            params.insert("tol".into(), json!(tol));
            Ok((Report::new("optimize", params, rows).map_err(err)?, output, tol))
        }
        Command::ExtremalCheck {
            sweep,
            masses,
            random,
            seed,
            alpha_arg,
            output,
        } => {
            if masses.is_some() && sweep.n.0 != sweep.n.1 {
                return Err("--masses requires a single n".into());
            }
            if masses.is_some() && random.is_some() {
                return Err("--masses and --random are mutually exclusive".into());
            }
            let seed = seed_or_env(seed)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let tol = output.tol.unwrap_or(DEFAULT_SHARPNESS_TOL);
            let rows = for_each_case(&sweep, |p| {
                let witnesses: Vec<Witness> = match (sweep.class, &masses, random) {
                    (FunctionClass::Hurwitz, _, Some(k)) => (0..k)
                        .map(|_| Witness::HurwitzPhase {
                            alpha: Complex64::from_polar(1.0, rng.random_range(0.0..TAU)),
                        })
                        .collect(),
                    (FunctionClass::Hurwitz, _, None) => vec![Witness::HurwitzPhase {
                        alpha: Complex64::from_polar(1.0, alpha_arg),
                    }],
                    (_, Some(m), _) => vec![Witness::Masses(ExtremalMassAssignment::new(p.n, m.clone())?)],
                    (_, None, Some(k)) => (0..k)
                        .map(|_| ExtremalMassAssignment::random(p.n, &mut rng).map(Witness::Masses))
                        .collect::<Result<_, _>>()?,
                    (_, None, None) => vec![Witness::Masses(ExtremalMassAssignment::uniform(p.n)?)],
                };
                witnesses
                    .into_iter()
                    .map(|w| {
                        let r = verify_sharpness(sweep.class, p, &w, tol)?;
                        Ok(Row {
                            class: Some(sweep.class),
                            lambda: Some(p.lambda()),
                            n: Some(p.n),
                            value: r.achieved,
                            bound: Some(r.bound),
                            gap: Some((r.achieved - r.bound).abs()),
                            check: Some(Check::Equality),
                            witness: Some(w),
                            ..Default::default()
                        })
                    })
                    .collect()
            })
            .map_err(err)?;
            let mut params = sweep_params(&sweep);
            params.insert("seed".into(), json!(seed));
            params.insert("tol".into(), json!(tol));
            if let Some(k) = random {
                params.insert("random".into(), json!(k));
            }
            if let Some(m) = &masses {
                params.insert("masses".into(), json!(m));
            }
            if sweep.class == FunctionClass::Hurwitz && random.is_none() {
                params.insert("alpha_arg".into(), json!(alpha_arg));
            }
            Ok((Report::new("extremal-check", params, rows).map_err(err)?, output, tol))
        }
        Command::Asymptotics {
            function,
            n,
            theta,
            degree,
            delta,
            output,
        } => {
            if let Some(d) = delta {
                if !(0.0..1.0).contains(&d) {
                    return Err(format!("delta must lie in [0, 1), got {d}"));
                }
            }
            let named = function.resolve(theta, degree);
            let series = named.series(2 * n.1 - 1).map_err(err)?;
            let rows = n
                .iter()
                .map(|k| {
                    let ratio = zalcman_ratio(&series, k)?;
                    let bound = delta.map(|d| 1.0 - d);
                    Ok(Row {
                        function: Some(named.name().to_string()),
                        n: Some(k),
                        value: ratio,
                        bound,
                        gap: bound.map(|b| ratio - b),
                        check: bound.map(|_| Check::UpperBound),
                        ..Default::default()
                    })
                })
                .collect::<Result<Vec<_>, Error>>()
                .map_err(err)?;
            let tol = output.tol.unwrap_or(DEFAULT_SHARPNESS_TOL);
            let mut params = BTreeMap::new();
            params.insert("function".into(), serde_json::to_value(named).expect("serializes"));
            params.insert("n".into(), json!(format!("{}:{}", n.0, n.1)));
            if let Some(d) = delta {
                params.insert("delta".into(), json!(d));
            }
            params.insert("tol".into(), json!(tol));
            Ok((Report::new("asymptotics", params, rows).map_err(err)?, output, tol))
        }
        Command::Hayman {
            function,
            radii,
            samples,
            theta,
            degree,
            output,
        } => {
            let named = function.resolve(theta, degree);
            named.series(named_order(&named)).map_err(err)?;
            let est = hayman_index_estimate(&named, &radii, samples).map_err(err)?;
            let rows = est
                .sequence
                .iter()
                .map(|&(r, v)| Row {
                    function: Some(named.name().to_string()),
                    radius: Some(r),
                    value: v,
                    ..Default::default()
                })
                .collect();
            let tol = output.tol.unwrap_or(DEFAULT_SHARPNESS_TOL);
            let mut params = BTreeMap::new();
            params.insert("function".into(), serde_json::to_value(named).expect("serializes"));
            params.insert("radii".into(), json!(radii));
            params.insert("samples".into(), json!(samples));
            params.insert("estimate".into(), json!(est.estimate));
            Ok((Report::new("hayman", params, rows).map_err(err)?, output, tol))
        }
    }
}

/// Smallest truncation order that validates a named function's parameters.
fn named_order(f: &NamedFunction) -> usize {
    match f {
        NamedFunction::HurwitzMonomial { n, .. } => (*n).max(1),
        _ => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &str) -> CliOutcome {
        run(std::iter::once("zalcman").chain(args.split_whitespace()))
    }

    fn report(out: &CliOutcome) -> Report {
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn bounds_rows() {
        let out = run_args("bounds --class hull-convex --lambda 1 --n 2:5");
        assert_eq!(out.code, 0, "{}", out.stderr);
        let r = report(&out);
        assert_eq!(r.rows.len(), 4);
        assert!(r.rows.iter().all(|row| row.bound == Some(1.0)));
    }

    #[test]
    fn range_errors_name_the_interval() {
        let out = run_args("bounds --class nw --lambda 3/2 --n 2");
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("0 < lambda <= 4/3"), "{}", out.stderr);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args("bounds --class hull-convex --n 2").code, 2);
        assert_eq!(run_args("frobnicate").code, 2);
        assert_eq!(run_args("bounds --class triangle --lambda 1 --n 2").code, 2);
        assert_eq!(run_args("bounds --class nw --lambda 1 --n 5:3").code, 2);
        assert_eq!(run_args("bounds --class nw --lambda 1 --n 1").code, 2);
        let help = run_args("--help");
        assert_eq!(help.code, 0);
        assert!(help.stdout.contains("extremal-check"));
    }

    #[test]
    fn optimize_nw_n2() {
        let out = run_args("optimize --class nw --lambda 1 --n 2 --grid-mult 4 --starts 16 --seed 7");
        assert_eq!(out.code, 0, "{}", out.stderr);
        let r = report(&out);
        assert!((r.rows[0].value - 2.0 / 3.0).abs() < 1e-6);
        assert!(r.rows[0].gap.unwrap() <= 1e-6);
    }

    #[test]
    fn optimize_hurwitz_uses_grid() {
        let out = run_args("optimize --class hurwitz --lambda 1,2 --n 2 --resolution 500");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(report(&out).rows.len(), 2);
    }

    #[test]
    fn exploratory_suppresses_bound() {
        let out = run_args("optimize --class hull-convex --lambda 3 --n 2 --exploratory --starts 4");
        assert_eq!(out.code, 0, "{}", out.stderr);
        let r = report(&out);
        assert_eq!(r.rows[0].bound, None);
        assert_eq!(run_args("optimize --class hull-convex --lambda 3 --n 2").code, 2);
    }

    #[test]
    fn failed_check_exits_one() {
        // a huge step tolerance stops at the uniform start, where Re Φ = 0
        let out = run_args("optimize --class hull-convex --lambda 1 --n 3 --starts 1 --step-tol 10");
        assert_eq!(out.code, 1);
        assert!(!report(&out).all_pass(DEFAULT_OPTIMIZE_TOL));
        let out = run_args("asymptotics --function koebe --n 2:4 --delta 0.5");
        assert_eq!(out.code, 1);
    }

    #[test]
    fn asymptotics_koebe() {
        let out = run_args("asymptotics --function koebe --n 2:50");
        assert_eq!(out.code, 0);
        let r = report(&out);
        assert_eq!(r.rows.len(), 49);
        assert!(r.rows.iter().all(|row| row.value == 1.0));
        let out = run_args("asymptotics --function halfplane --n 2:50 --delta 0.5");
        assert_eq!(out.code, 0);
    }

    #[test]
    fn extremal_check_masses_sum_to_one() {
        let out = run_args("extremal-check --class hull-convex --lambda 1 --n 3 --masses 0.5,0,0,0.5");
        assert_eq!(out.code, 0, "{}", out.stderr);
        let r = report(&out);
        let Some(Witness::Masses(a)) = &r.rows[0].witness else { panic!() };
        assert!((a.masses().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        let bad = run_args("extremal-check --class hull-convex --lambda 1 --n 2 --masses 1,0");
        assert_eq!(bad.code, 2);
        assert!(bad.stderr.contains("parity"));
        let many = run_args("extremal-check --class nw --lambda 1/2,4/3 --n 2:4 --random 5 --seed 3");
        assert_eq!(many.code, 0, "{}", many.stderr);
        assert_eq!(report(&many).rows.len(), 2 * 3 * 5);
        let h = run_args("extremal-check --class hurwitz --lambda 9/5 --n 3 --alpha-arg 1.1");
        assert_eq!(h.code, 0, "{}", h.stderr);
    }

    #[test]
    fn hayman_rows_and_csv() {
        let out = run_args("hayman --function koebe --radii 0.9,0.99,0.9999 --format csv");
        assert_eq!(out.code, 0, "{}", out.stderr);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines[0], "class,lambda,n,value,bound,gap,converged,radius");
        assert_eq!(lines.len(), 4);
        assert_eq!(run_args("hayman --function koebe --radii 0.9,0.99").code, 2);
    }

    #[test]
    fn csv_one_line_per_case() {
        let out = run_args("bounds --class hurwitz --lambda 1,2 --n 2:4 --format csv");
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.lines().count(), 1 + 6);
        assert_eq!(out.stdout.lines().next().unwrap(), crate::report::CSV_HEADER);
    }

    #[test]
    fn same_seed_same_bytes() {
        let args = "optimize --class hull-convex --lambda 0.5,1 --n 3:4 --starts 8 --seed 99";
        assert_eq!(run_args(args), run_args(args));
    }

    #[test]
    fn writes_to_file() {
        let dir = std::env::temp_dir().join(format!("zalcman-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bounds.csv");
        let out = run_args(&format!(
            "bounds --class nw --lambda 1 --n 2:3 --format csv --out {}",
            path.display()
        ));
        assert_eq!(out.code, 0);
        assert!(out.stdout.is_empty());
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 3);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
