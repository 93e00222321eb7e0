//! `legmunu`: evaluate associated Legendre and Ferrers functions with order
//! equal to plus or minus the degree, tabulate them, run the two definite
//! integrals, and drive the identity verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
//! Errors print a single machine-readable line to stderr:
//! `{"error":{"kind":"...","message":"..."}}`.

mod literal;

use clap::{Parser, Subcommand, ValueEnum};
use legendre_munu::verifier::{
    format_complex, format_f64_17, reports_to_json, run_suite, IdentityId, Tolerances,
};
use legendre_munu::{ferrers, legendre, Complex64, Error, EvalResult};
use literal::{parse_complex, parse_real};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "legmunu", version, about = "Legendre and Ferrers functions with order = +/- degree")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function at one point.
    Eval {
        selector: Selector,
        /// Complex degree, e.g. 0.5 or 0.5+0.25i.
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Complex point off the cut (-inf, 1]; Legendre selectors only.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Real point in (-1, 1); Ferrers selectors only.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate a function on a real grid.
    Table {
        selector: Selector,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        start: String,
        #[arg(long, allow_hyphen_values = true)]
        stop: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the identity verification suite.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Per-identity tolerance override, e.g. --tol whipple=1e-7.
        #[arg(long = "tol", value_name = "ID=VAL")]
        tol: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare a definite integral against its Gamma-ratio value.
    Integrate {
        kind: IntegralKind,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Selector {
    #[value(name = "Qnn")]
    Qnn,
    #[value(name = "Qnmn")]
    Qnmn,
    #[value(name = "Pnn")]
    Pnn,
    #[value(name = "Pnmn")]
    Pnmn,
    #[value(name = "FQnn")]
    FQnn,
    #[value(name = "FQnmn")]
    FQnmn,
    #[value(name = "FPnn")]
    FPnn,
    #[value(name = "FPnmn")]
    FPnmn,
}

impl Selector {
    fn name(&self) -> &'static str {
        match self {
            Selector::Qnn => "Qnn",
            Selector::Qnmn => "Qnmn",
            Selector::Pnn => "Pnn",
            Selector::Pnmn => "Pnmn",
            Selector::FQnn => "FQnn",
            Selector::FQnmn => "FQnmn",
            Selector::FPnn => "FPnn",
            Selector::FPnmn => "FPnmn",
        }
    }

    fn is_legendre(&self) -> bool {
        matches!(
            self,
            Selector::Qnn | Selector::Qnmn | Selector::Pnn | Selector::Pnmn
        )
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Method {
    Closed,
    Integral,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum IntegralKind {
    Wing,
    Cap,
}

fn fail(kind: &str, message: &str) -> ! {
    eprintln!(
        "{}",
        serde_json::json!({"error": {"kind": kind, "message": message}})
    );
    std::process::exit(2);
}

fn fail_usage(message: &str) -> ! {
    fail("UsageError", message)
}

fn fail_eval(err: &Error) -> ! {
    fail(err.kind(), &err.to_string())
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval {
            selector,
            nu,
            z,
            x,
            method,
            format,
        } => cmd_eval(selector, &nu, z.as_deref(), x.as_deref(), method, format),
        Command::Table {
            selector,
            nu,
            start,
            stop,
            steps,
            format,
        } => cmd_table(selector, &nu, &start, &stop, steps, format),
        Command::Verify {
            seed,
            samples,
            tol,
            format,
        } => cmd_verify(seed, samples, &tol, format),
        Command::Integrate { kind, nu, format } => cmd_integrate(kind, &nu, format),
    }
}

// --- eval -------------------------------------------------------------------

/// Evaluation outcome: result, method actually used, and whether the closed
/// form fell back to the integral path.
type Evaluation = (EvalResult, &'static str, bool);

type LegendrePath =
    fn(&legendre::DegreeParam, &legendre::CutPlanePoint) -> Result<EvalResult, Error>;
type FerrersPath = fn(Complex64, &ferrers::CutInterval) -> Result<EvalResult, Error>;

fn eval_at(selector: Selector, nu: Complex64, point: Complex64, method: Method) -> Result<Evaluation, Error> {
    if selector.is_legendre() {
        let deg = legendre::DegreeParam::new(nu)?;
        let z = legendre::CutPlanePoint::new(point)?;
        let closed: LegendrePath = match selector {
            Selector::Qnn => legendre::q_nu_nu,
            Selector::Qnmn => legendre::q_nu_neg_nu,
            Selector::Pnn => legendre::p_nu_nu,
            Selector::Pnmn => legendre::p_nu_neg_nu,
            _ => unreachable!(),
        };
        let integral: Option<LegendrePath> = match selector {
            Selector::Qnn => Some(legendre::integrate_q_rep),
            Selector::Qnmn => Some(legendre::q_nu_neg_nu_integral),
            Selector::Pnn => Some(legendre::p_nu_nu_integral),
            _ => None,
        };
        match method {
            Method::Closed => match closed(&deg, &z) {
                Err(Error::Domain { .. }) if integral.is_some() => {
                    integral.unwrap()(&deg, &z).map(|r| (r, "integral", true))
                }
                r => r.map(|r| (r, "closed", false)),
            },
            Method::Integral => match integral {
                Some(f) => f(&deg, &z).map(|r| (r, "integral", false)),
                None => fail_usage(&format!(
                    "selector {} has no separate integral path",
                    selector.name()
                )),
            },
        }
    } else {
        let x = ferrers::CutInterval::new(point.re)?;
        let closed: FerrersPath = match selector {
            Selector::FQnn => ferrers::ferrers_q_nu,
            Selector::FQnmn => ferrers::ferrers_q_neg_nu,
            Selector::FPnn => ferrers::ferrers_p_nu,
            Selector::FPnmn => ferrers::ferrers_p_neg_nu,
            _ => unreachable!(),
        };
        let integral: Option<FerrersPath> = match selector {
            Selector::FQnmn => Some(ferrers::ferrers_q_neg_nu_integral),
            _ => None,
        };
        match method {
            Method::Closed => match closed(nu, &x) {
                Err(Error::Domain { .. }) if integral.is_some() => {
                    integral.unwrap()(nu, &x).map(|r| (r, "integral", true))
                }
                r => r.map(|r| (r, "closed", false)),
            },
            Method::Integral => match integral {
                Some(f) => f(nu, &x).map(|r| (r, "integral", false)),
                None => fail_usage(&format!(
                    "selector {} has no separate integral path",
                    selector.name()
                )),
            },
        }
    }
}

#[derive(Serialize)]
struct EvalOutput {
    selector: &'static str,
    nu: String,
    point: String,
    method: &'static str,
    fallback: bool,
    re: String,
    im: String,
    abs_err: String,
    terms_used: usize,
    converged: bool,
}

fn resolve_point(selector: Selector, z: Option<&str>, x: Option<&str>) -> Complex64 {
    if selector.is_legendre() {
        if x.is_some() {
            fail_usage("--x applies to Ferrers selectors; use --z");
        }
        let Some(z) = z else {
            fail_usage("Legendre selectors require --z");
        };
        parse_complex(z).unwrap_or_else(|e| fail("ParseError", &e))
    } else {
        if z.is_some() {
            fail_usage("--z applies to Legendre selectors; use --x");
        }
        let Some(x) = x else {
            fail_usage("Ferrers selectors require --x");
        };
        Complex64::new(parse_real(x).unwrap_or_else(|e| fail("ParseError", &e)), 0.0)
    }
}

fn cmd_eval(
    selector: Selector,
    nu: &str,
    z: Option<&str>,
    x: Option<&str>,
    method: Method,
    format: Format,
) -> ExitCode {
    let nu = parse_complex(nu).unwrap_or_else(|e| fail("ParseError", &e));
    let point = resolve_point(selector, z, x);
    let (result, method_used, fallback) =
        eval_at(selector, nu, point, method).unwrap_or_else(|e| fail_eval(&e));
    let out = EvalOutput {
        selector: selector.name(),
        nu: format_complex(nu),
        point: format_complex(point),
        method: method_used,
        fallback,
        re: format_f64_17(result.value.re),
        im: format_f64_17(result.value.im),
        abs_err: format_f64_17(result.abs_err),
        terms_used: result.terms_used,
        converged: result.converged,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        Format::Csv => {
            println!("selector,nu,point,method,fallback,re,im,abs_err,terms_used,converged");
            println!(
                "{},{},{},{},{},{},{},{},{},{}",
                out.selector,
                out.nu,
                out.point,
                out.method,
                out.fallback,
                out.re,
                out.im,
                out.abs_err,
                out.terms_used,
                out.converged
            );
        }
    }
    ExitCode::SUCCESS
}

// --- table ------------------------------------------------------------------

#[derive(Serialize)]
struct TableRow {
    point: String,
    re: String,
    im: String,
    abs_err: String,
}

fn cmd_table(
    selector: Selector,
    nu: &str,
    start: &str,
    stop: &str,
    steps: usize,
    format: Format,
) -> ExitCode {
    let nu = parse_complex(nu).unwrap_or_else(|e| fail("ParseError", &e));
    let start = parse_real(start).unwrap_or_else(|e| fail("ParseError", &e));
    let stop = parse_real(stop).unwrap_or_else(|e| fail("ParseError", &e));
    if steps < 1 {
        fail_usage("--steps must be at least 1");
    }
    let points: Vec<f64> = (0..=steps)
        .map(|k| start + (stop - start) * k as f64 / steps as f64)
        .collect();
    // Fail fast: every grid point must be inside the domain before any
    // evaluation happens.
    for &p in &points {
        let r = if selector.is_legendre() {
            legendre::CutPlanePoint::new(Complex64::new(p, 0.0)).map(|_| ())
        } else {
            ferrers::CutInterval::new(p).map(|_| ())
        };
        if let Err(e) = r {
            fail_eval(&e);
        }
    }
    let mut rows = Vec::with_capacity(points.len());
    for &p in &points {
        let point = Complex64::new(p, 0.0);
        let (result, _, _) =
            eval_at(selector, nu, point, Method::Closed).unwrap_or_else(|e| fail_eval(&e));
        rows.push(TableRow {
            point: format_complex(point),
            re: format_f64_17(result.value.re),
            im: format_f64_17(result.value.im),
            abs_err: format_f64_17(result.abs_err),
        });
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows).unwrap()),
        Format::Csv => {
            println!("point,re,im,abs_err");
            for r in rows {
                println!("{},{},{},{}", r.point, r.re, r.im, r.abs_err);
            }
        }
    }
    ExitCode::SUCCESS
}

// --- verify -----------------------------------------------------------------

fn cmd_verify(seed: u64, samples: usize, tol_overrides: &[String], format: Format) -> ExitCode {
    if samples < 1 {
        fail_usage("--samples must be at least 1");
    }
    let mut tolerances = Tolerances::default();
    for spec in tol_overrides {
        let Some((id, val)) = spec.split_once('=') else {
            fail_usage(&format!("--tol expects ID=VAL, got '{spec}'"));
        };
        let id: IdentityId = id.parse().unwrap_or_else(|e: Error| fail_eval(&e));
        let val: f64 = val
            .parse()
            .unwrap_or_else(|_| fail_usage(&format!("'{val}' is not a tolerance")));
        if val.is_nan() || val <= 0.0 {
            fail_usage("tolerances must be positive");
        }
        tolerances.set(id, val);
    }
    let reports = run_suite(seed, samples, &tolerances);
    match format {
        Format::Json => println!("{}", reports_to_json(&reports)),
        Format::Csv => {
            println!("identity_id,samples_run,max_residual,mean_residual,passed");
            for r in &reports {
                println!(
                    "{},{},{},{},{}",
                    r.identity_id,
                    r.samples_run,
                    format_f64_17(r.max_residual),
                    format_f64_17(r.mean_residual),
                    r.passed
                );
            }
        }
    }
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

// --- integrate --------------------------------------------------------------

#[derive(Serialize)]
struct IntegrateOutput {
    kind: &'static str,
    nu: String,
    quadrature_re: String,
    quadrature_im: String,
    gamma_ratio_re: String,
    gamma_ratio_im: String,
    abs_diff: String,
}

fn cmd_integrate(kind: IntegralKind, nu: &str, format: Format) -> ExitCode {
    let nu = parse_complex(nu).unwrap_or_else(|e| fail("ParseError", &e));
    let (name, quad, ratio) = match kind {
        IntegralKind::Wing => {
            let q = legendre::wing_integral_quadrature(nu).unwrap_or_else(|e| fail_eval(&e));
            let v = legendre::definite_integral_wing(nu).unwrap_or_else(|e| fail_eval(&e));
            ("wing", q, v)
        }
        IntegralKind::Cap => {
            let q = ferrers::cap_integral_quadrature(nu).unwrap_or_else(|e| fail_eval(&e));
            let v = ferrers::definite_integral_cap(nu).unwrap_or_else(|e| fail_eval(&e));
            ("cap", q, v)
        }
    };
    let out = IntegrateOutput {
        kind: name,
        nu: format_complex(nu),
        quadrature_re: format_f64_17(quad.value.re),
        quadrature_im: format_f64_17(quad.value.im),
        gamma_ratio_re: format_f64_17(ratio.re),
        gamma_ratio_im: format_f64_17(ratio.im),
        abs_diff: format_f64_17((quad.value - ratio).norm()),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        Format::Csv => {
            println!("kind,nu,quadrature_re,quadrature_im,gamma_ratio_re,gamma_ratio_im,abs_diff");
            println!(
                "{},{},{},{},{},{},{}",
                out.kind,
                out.nu,
                out.quadrature_re,
                out.quadrature_im,
                out.gamma_ratio_re,
                out.gamma_ratio_im,
                out.abs_diff
            );
        }
    }
    ExitCode::SUCCESS
}
