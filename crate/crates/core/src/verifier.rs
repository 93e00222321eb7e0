//! Declarative registry of the twelve connecting identities, a seeded
//! parameter sampler that respects each identity's domain, residual
//! computation, and machine-readable reports.
//!
//! Residuals are normalized as `|LHS - RHS| / max(1, |RHS|)`, which blends
//! absolute and relative tolerance and stays stable near zeros. Sampling is
//! driven by a SplitMix64 stream seeded per identity, so a suite run is a
//! pure function of `(seed, samples, tolerances)` and reports serialize to
//! byte-identical JSON across runs.

use crate::error::{Error, Result};
use crate::ferrers::{
    cap_integral_quadrature, definite_integral_cap, ferrers_p_nu, ferrers_q_neg_nu,
    ferrers_q_neg_nu_integral, ferrers_q_nu, CutInterval,
};
use crate::hypergeometric::{gamma, gauss_2f1, nonpositive_integer_near, RADIUS_GUARD};
use crate::legendre::{
    definite_integral_wing, integrate_q_rep, inv_power_ray_integral, p_nu_neg_nu, p_nu_nu,
    p_nu_nu_integral, q_nu_neg_nu, q_nu_nu, split_power, whipple_q_from_p, wing_integral_quadrature,
    CutPlanePoint, DegreeParam,
};
use crate::{exp_i_pi, sin_pi, two_pow, SQRT_PI};
use num_complex::Complex64;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Deterministic 64-bit generator (SplitMix64), the only randomness source
/// in the crate.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// The closed set of identities the artifact verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    Thm1Derivative,
    Thm1QEquality,
    QRepEq6,
    QNegorder,
    Whipple,
    PRepEq8,
    PNegorderEq7,
    WingIntegral,
    Thm2Derivative,
    FerrersQRepEq12,
    CapIntegral,
    FerrersNegorder,
}

impl IdentityId {
    pub const ALL: [IdentityId; 12] = [
        IdentityId::Thm1Derivative,
        IdentityId::Thm1QEquality,
        IdentityId::QRepEq6,
        IdentityId::QNegorder,
        IdentityId::Whipple,
        IdentityId::PRepEq8,
        IdentityId::PNegorderEq7,
        IdentityId::WingIntegral,
        IdentityId::Thm2Derivative,
        IdentityId::FerrersQRepEq12,
        IdentityId::CapIntegral,
        IdentityId::FerrersNegorder,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::Thm1Derivative => "thm1_derivative",
            IdentityId::Thm1QEquality => "thm1_q_equality",
            IdentityId::QRepEq6 => "q_rep_eq6",
            IdentityId::QNegorder => "q_negorder",
            IdentityId::Whipple => "whipple",
            IdentityId::PRepEq8 => "p_rep_eq8",
            IdentityId::PNegorderEq7 => "p_negorder_eq7",
            IdentityId::WingIntegral => "wing_integral",
            IdentityId::Thm2Derivative => "thm2_derivative",
            IdentityId::FerrersQRepEq12 => "ferrers_q_rep_eq12",
            IdentityId::CapIntegral => "cap_integral",
            IdentityId::FerrersNegorder => "ferrers_negorder",
        }
    }

    fn index(&self) -> usize {
        IdentityId::ALL.iter().position(|i| i == self).unwrap()
    }

    /// Default residual tolerance: 1e-6 for finite-difference checks, 1e-8
    /// for quadrature closures, 1e-9 for algebraic closures.
    pub fn default_tolerance(&self) -> f64 {
        match self {
            IdentityId::Thm1Derivative | IdentityId::Thm2Derivative => 1e-6,
            IdentityId::QRepEq6
            | IdentityId::QNegorder
            | IdentityId::Whipple
            | IdentityId::PRepEq8
            | IdentityId::WingIntegral
            | IdentityId::FerrersQRepEq12
            | IdentityId::CapIntegral => 1e-8,
            IdentityId::Thm1QEquality
            | IdentityId::PNegorderEq7
            | IdentityId::FerrersNegorder => 1e-9,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity {
                name: s.to_string(),
            })
    }
}

/// Per-identity tolerance map with spec defaults.
#[derive(Debug, Clone)]
pub struct Tolerances {
    per_identity: [f64; 12],
}

impl Default for Tolerances {
    fn default() -> Self {
        let mut per_identity = [0.0; 12];
        for id in IdentityId::ALL {
            per_identity[id.index()] = id.default_tolerance();
        }
        Tolerances { per_identity }
    }
}

impl Tolerances {
    pub fn get(&self, id: IdentityId) -> f64 {
        self.per_identity[id.index()]
    }

    pub fn set(&mut self, id: IdentityId, tol: f64) {
        self.per_identity[id.index()] = tol;
    }
}

/// One identity plus the concrete points it will be checked at.
#[derive(Debug, Clone)]
pub struct IdentityCase {
    pub identity_id: IdentityId,
    /// `(nu, point)` pairs; `point` is `z` for cut-plane identities, `x + 0i`
    /// for Ferrers identities, and unused (zero) for the definite integrals.
    pub parameter_sample: Vec<(Complex64, Complex64)>,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FailureRecord {
    pub nu: Complex64,
    pub point: Complex64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub samples_run: usize,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub failures: Vec<FailureRecord>,
    pub passed: bool,
}

/// Evaluate one identity over its sample. Evaluation errors inside the
/// declared domain are recorded as infinite residuals, never thrown.
pub fn run_identity(case: &IdentityCase) -> IdentityReport {
    let mut max_residual = 0.0f64;
    let mut sum = 0.0f64;
    let mut failures = Vec::new();
    for &(nu, point) in &case.parameter_sample {
        let mut residual = residual_for(case.identity_id, nu, point).unwrap_or(f64::INFINITY);
        if residual.is_nan() {
            residual = f64::INFINITY;
        }
        sum += residual;
        if residual > max_residual {
            max_residual = residual;
        }
        if residual > case.tolerance {
            failures.push(FailureRecord {
                nu,
                point,
                residual,
            });
        }
    }
    let samples_run = case.parameter_sample.len();
    let mean_residual = if samples_run > 0 {
        sum / samples_run as f64
    } else {
        0.0
    };
    IdentityReport {
        identity_id: case.identity_id,
        samples_run,
        max_residual,
        mean_residual,
        failures,
        passed: max_residual <= case.tolerance,
    }
}

/// Run the whole registry. Deterministic in `(seed, samples, tolerances)`;
/// reports come back in registry order.
pub fn run_suite(seed: u64, samples_per_identity: usize, tolerances: &Tolerances) -> Vec<IdentityReport> {
    IdentityId::ALL
        .iter()
        .map(|&id| {
            let case = build_case(id, seed, samples_per_identity, tolerances.get(id));
            run_identity(&case)
        })
        .collect()
}

/// Sample the identity's admissible parameter set.
pub fn build_case(id: IdentityId, seed: u64, samples: usize, tolerance: f64) -> IdentityCase {
    // Stream seeded per identity, so per-identity samples are independent of
    // evaluation order.
    let mut rng = SplitMix64::new(
        seed ^ (0xA076_1D64_78BD_642F_u64.wrapping_mul(id.index() as u64 + 1)),
    );
    let parameter_sample = (0..samples).map(|_| sample_point(id, &mut rng)).collect();
    IdentityCase {
        identity_id: id,
        parameter_sample,
        tolerance,
    }
}

const EXCLUSION_BAND: f64 = 0.05;

fn sample_nu_box(rng: &mut SplitMix64) -> Complex64 {
    Complex64::new(rng.uniform(-0.4, 3.0), rng.uniform(-1.0, 1.0))
}

fn sample_z(rng: &mut SplitMix64) -> Complex64 {
    let r = rng.uniform(0.1, 5.0);
    let theta = rng.uniform(-std::f64::consts::PI + 0.2, std::f64::consts::PI - 0.2);
    1.0 + Complex64::from_polar(r, theta)
}

fn near_integer(nu: Complex64, lo: i32, hi: i32) -> bool {
    (lo..=hi).any(|k| (nu - k as f64).norm() < EXCLUSION_BAND)
}

fn off_cut(z: Complex64) -> bool {
    !(z.im == 0.0 && z.re <= 1.0)
}

fn sample_point(id: IdentityId, rng: &mut SplitMix64) -> (Complex64, Complex64) {
    match id {
        IdentityId::Thm1Derivative | IdentityId::Thm1QEquality => loop {
            let nu = sample_nu_box(rng);
            let z = sample_z(rng);
            if z.norm() >= 1.1 && off_cut(z) {
                return (nu, z);
            }
        },
        IdentityId::QRepEq6 | IdentityId::QNegorder | IdentityId::PRepEq8
        | IdentityId::PNegorderEq7 => loop {
            let nu = sample_nu_box(rng);
            let z = sample_z(rng);
            if (z - 1.0).norm() >= 0.1 && (z * z).norm() >= 1.0 / RADIUS_GUARD && off_cut(z) {
                return (nu, z);
            }
        },
        IdentityId::Whipple => loop {
            let nu = sample_nu_box(rng);
            if near_integer(nu, 0, 3) {
                continue;
            }
            let z = sample_z(rng);
            // Right half-plane only (validity region of the relation), with
            // both the direct and the mapped argument inside the series disk.
            if !off_cut(z) || (z - 1.0).norm() < 0.1 || z.re < 0.1 {
                continue;
            }
            let zz = z * z;
            if zz.norm() < 1.0 / RADIUS_GUARD || (1.0 - 1.0 / zz).norm() > RADIUS_GUARD {
                continue;
            }
            return (nu, z);
        },
        IdentityId::WingIntegral => (
            Complex64::new(rng.uniform(0.05, 0.45), rng.uniform(-1.0, 1.0)),
            Complex64::new(0.0, 0.0),
        ),
        IdentityId::CapIntegral => (
            Complex64::new(rng.uniform(0.05, 3.0), rng.uniform(-1.0, 1.0)),
            Complex64::new(0.0, 0.0),
        ),
        IdentityId::Thm2Derivative | IdentityId::FerrersQRepEq12 | IdentityId::FerrersNegorder => {
            loop {
                let nu = sample_nu_box(rng);
                if nonpositive_integer_near(nu + 0.5).is_some()
                    || nonpositive_integer_near(nu + 1.0).is_some()
                {
                    continue;
                }
                let x = rng.uniform(-0.9, 0.9);
                return (nu, Complex64::new(x, 0.0));
            }
        }
    }
}

/// `|LHS - RHS| / max(1, |RHS|)` for one identity at one parameter point.
pub fn residual_for(id: IdentityId, nu: Complex64, point: Complex64) -> Result<f64> {
    let resid = |lhs: Complex64, rhs: Complex64| (lhs - rhs).norm() / rhs.norm().max(1.0);
    match id {
        IdentityId::Thm1Derivative => {
            let z = CutPlanePoint::new(point)?;
            let f = |w: Complex64| -> Result<Complex64> {
                let series = gauss_2f1(nu + 0.5, nu + 1.0, nu + 1.5, 1.0 / (w * w))?.value;
                Ok(-1.0 / ((2.0 * nu + 1.0) * w.powc(2.0 * nu + 1.0)) * series)
            };
            let h = 1e-5 * point.norm();
            let fd = (f(point + h)? - f(point - h)?) / (2.0 * h);
            let rhs = split_power(&z, -(nu + 1.0))?;
            Ok(resid(fd, rhs))
        }
        IdentityId::Thm1QEquality => {
            let z = CutPlanePoint::new(point)?;
            let deg = DegreeParam::new(nu)?;
            let series = gauss_2f1(nu + 0.5, nu + 1.0, nu + 1.5, 1.0 / (point * point))?.value;
            let lhs = -1.0 / ((2.0 * nu + 1.0) * point.powc(2.0 * nu + 1.0)) * series;
            let q = q_nu_nu(&deg, &z)?.value;
            let rhs =
                -two_pow(-nu) * exp_i_pi(-nu) * q / (gamma(nu + 1.0)? * split_power(&z, 0.5 * nu)?);
            Ok(resid(lhs, rhs))
        }
        IdentityId::QRepEq6 => {
            let z = CutPlanePoint::new(point)?;
            let deg = DegreeParam::new(nu)?;
            let lhs = integrate_q_rep(&deg, &z)?.value;
            let rhs = q_nu_nu(&deg, &z)?.value;
            Ok(resid(lhs, rhs))
        }
        IdentityId::QNegorder => {
            let z = CutPlanePoint::new(point)?;
            let deg = DegreeParam::new(nu)?;
            let ray = inv_power_ray_integral(nu, &z)?;
            let lhs = SQRT_PI * exp_i_pi(-nu) * split_power(&z, 0.5 * nu)?
                / (two_pow(nu) * gamma(nu + 0.5)?)
                * ray.value;
            let rhs = q_nu_neg_nu(&deg, &z)?.value;
            Ok(resid(lhs, rhs))
        }
        IdentityId::Whipple => {
            let z = CutPlanePoint::new(point)?;
            let deg = DegreeParam::new(nu)?;
            let lhs = whipple_q_from_p(&deg, &z)?.value;
            let rhs = q_nu_nu(&deg, &z)?.value;
            Ok(resid(lhs, rhs))
        }
        IdentityId::PRepEq8 => {
            let z = CutPlanePoint::new(point)?;
            let deg = DegreeParam::new(nu)?;
            let lhs = p_nu_nu_integral(&deg, &z)?.value;
            let rhs = p_nu_nu(&deg, &z)?.value;
            Ok(resid(lhs, rhs))
        }
        IdentityId::PNegorderEq7 => {
            let z = CutPlanePoint::new(point)?;
            let deg = DegreeParam::new(nu)?;
            let p = p_nu_nu(&deg, &z)?.value;
            let q = q_nu_nu(&deg, &z)?.value;
            let lhs = (p - 2.0 / std::f64::consts::PI * exp_i_pi(-nu) * sin_pi(nu) * q)
                / gamma(2.0 * nu + 1.0)?;
            let rhs = p_nu_neg_nu(&deg, &z)?.value;
            Ok(resid(lhs, rhs))
        }
        IdentityId::WingIntegral => {
            let lhs = wing_integral_quadrature(nu)?.value;
            let rhs = definite_integral_wing(nu)?;
            Ok(resid(lhs, rhs))
        }
        IdentityId::Thm2Derivative => {
            let x = point.re;
            let g = |t: f64| -> Result<Complex64> {
                let f = gauss_2f1(
                    Complex64::new(0.5, 0.0),
                    nu + 1.0,
                    Complex64::new(1.5, 0.0),
                    Complex64::new(t * t, 0.0),
                )?;
                Ok(t * f.value)
            };
            let h = 1e-5;
            let fd = (g(x + h)? - g(x - h)?) / (2.0 * h);
            let rhs = (-(nu + 1.0) * ((1.0 - x).ln() + (1.0 + x).ln())).exp();
            Ok(resid(fd, rhs))
        }
        IdentityId::FerrersQRepEq12 => {
            let x = CutInterval::new(point.re)?;
            let lhs = ferrers_q_neg_nu_integral(nu, &x)?.value;
            let rhs = ferrers_q_neg_nu(nu, &x)?.value;
            Ok(resid(lhs, rhs))
        }
        IdentityId::CapIntegral => {
            let lhs = cap_integral_quadrature(nu)?.value;
            let rhs = definite_integral_cap(nu)?;
            Ok(resid(lhs, rhs))
        }
        IdentityId::FerrersNegorder => {
            let x = CutInterval::new(point.re)?;
            let q = ferrers_q_nu(nu, &x)?.value;
            let p = ferrers_p_nu(nu, &x)?.value;
            let lhs = (crate::cos_pi(nu) * q + std::f64::consts::PI / 2.0 * sin_pi(nu) * p)
                / gamma(2.0 * nu + 1.0)?;
            let rhs = ferrers_q_neg_nu(nu, &x)?.value;
            Ok(resid(lhs, rhs))
        }
    }
}

// --- serialization ---------------------------------------------------------

/// 17-significant-digit decimal string, bit-stable across platforms.
pub fn format_f64_17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Complex literal in the CLI syntax: `RE`, `RE+IMi`, or `RE-IMi`.
pub fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format_f64_17(c.re)
    } else if c.im.is_sign_negative() {
        format!("{}-{}i", format_f64_17(c.re), format_f64_17(-c.im))
    } else {
        format!("{}+{}i", format_f64_17(c.re), format_f64_17(c.im))
    }
}

#[derive(Serialize)]
struct FailureJson {
    nu: String,
    point: String,
    residual: String,
}

#[derive(Serialize)]
struct ReportJson {
    identity_id: &'static str,
    samples_run: usize,
    max_residual: String,
    mean_residual: String,
    failures: Vec<FailureJson>,
    passed: bool,
}

fn report_to_json(r: &IdentityReport) -> ReportJson {
    ReportJson {
        identity_id: r.identity_id.name(),
        samples_run: r.samples_run,
        max_residual: format_f64_17(r.max_residual),
        mean_residual: format_f64_17(r.mean_residual),
        failures: r
            .failures
            .iter()
            .map(|f| FailureJson {
                nu: format_complex(f.nu),
                point: format_complex(f.point),
                residual: format_f64_17(f.residual),
            })
            .collect(),
        passed: r.passed,
    }
}

/// JSON array of reports, fields in declaration order, residuals as
/// 17-significant-digit decimal strings.
pub fn reports_to_json(reports: &[IdentityReport]) -> String {
    let mirror: Vec<ReportJson> = reports.iter().map(report_to_json).collect();
    serde_json::to_string_pretty(&mirror).expect("report serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_exactly_twelve_identities() {
        assert_eq!(IdentityId::ALL.len(), 12);
        let reports = run_suite(42, 1, &Tolerances::default());
        assert_eq!(reports.len(), 12);
        assert!(reports.iter().all(|r| r.samples_run == 1));
    }

    #[test]
    fn unknown_identity_name_is_an_error() {
        assert!(matches!(
            "no_such_identity".parse::<IdentityId>(),
            Err(Error::UnknownIdentity { .. })
        ));
        assert_eq!(
            "whipple".parse::<IdentityId>().unwrap(),
            IdentityId::Whipple
        );
    }

    #[test]
    fn suite_is_deterministic() {
        let a = reports_to_json(&run_suite(42, 3, &Tolerances::default()));
        let b = reports_to_json(&run_suite(42, 3, &Tolerances::default()));
        assert_eq!(a, b);
        let c = reports_to_json(&run_suite(43, 3, &Tolerances::default()));
        assert_ne!(a, c);
    }

    #[test]
    fn small_suite_passes_within_domains() {
        // Domain respect: a passing suite encounters no evaluation errors,
        // so every residual is finite.
        let reports = run_suite(7, 10, &Tolerances::default());
        for r in &reports {
            assert!(
                r.passed,
                "{} failed: max residual {:.3e}, failures {:?}",
                r.identity_id, r.max_residual, r.failures
            );
            assert!(r.max_residual.is_finite());
        }
    }

    #[test]
    fn trivial_identity_case_at_fixed_point() {
        let case = IdentityCase {
            identity_id: IdentityId::QRepEq6,
            parameter_sample: vec![(Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0))],
            tolerance: 1e-8,
        };
        let report = run_identity(&case);
        assert!(report.passed);
        assert!(report.max_residual <= 1e-8);
        assert_eq!(report.samples_run, 1);
    }

    #[test]
    fn run_identity_records_out_of_domain_failures() {
        // nu = 0.6 is outside the wing strip: recorded, not thrown.
        let case = IdentityCase {
            identity_id: IdentityId::WingIntegral,
            parameter_sample: vec![(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.0))],
            tolerance: 1e-8,
        };
        let report = run_identity(&case);
        assert!(!report.passed);
        assert_eq!(report.failures.len(), 1);
        assert!(report.failures[0].residual.is_infinite());
    }

    #[test]
    fn complex_formatting_round_trip_shape() {
        assert_eq!(format_complex(Complex64::new(1.0, 0.0)), "1.0000000000000000e0");
        assert!(format_complex(Complex64::new(1.5, -2.25)).ends_with('i'));
        assert!(format_complex(Complex64::new(1.5, -2.25)).contains('-'));
    }
}
