//! Adaptive numerical integration of complex-valued integrands over a real
//! parameter: finite intervals, and horizontal rays to infinity.
//!
//! Two rules share the work. Smooth finite intervals go through an adaptive
//! Gauss-Kronrod (G7, K15) pair with worst-panel bisection. Intervals with a
//! declared endpoint power singularity, and all rays (compactified by
//! `t = s / (1 - s)`), go through a double-exponential tanh-sinh rule, whose
//! nodes cluster toward the endpoints fast enough to absorb any integrable
//! power singularity.
//!
//! The engine never chooses contours: complex paths are parameterized by the
//! caller and arrive here as functions of a real variable. Endpoint
//! singularities resolve to full depth when the singular endpoint sits at
//! coordinate zero (offsets from zero stay exact down to the denormal range);
//! callers in this crate parameterize their integrals that way.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Integration range over the real parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Interval {
    Finite { a: f64, b: f64 },
    /// `[start, +inf)`.
    Ray { start: f64 },
}

/// A fully described integration request.
///
/// For `Interval::Ray`, `singular_exponent_at_b` carries the asymptotic decay
/// exponent of the integrand at infinity (`f ~ t^p`, `Re p < -1` required).
pub struct QuadratureSpec<'a> {
    pub integrand: &'a dyn Fn(f64) -> Complex64,
    pub interval: Interval,
    pub singular_exponent_at_a: Option<Complex64>,
    pub singular_exponent_at_b: Option<Complex64>,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: u32,
}

pub const DEFAULT_REL_TOL: f64 = 1e-10;
pub const DEFAULT_ABS_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_SUBDIVISIONS: u32 = 2000;

impl<'a> QuadratureSpec<'a> {
    /// Spec with default tolerances and no declared singularities.
    pub fn new(integrand: &'a dyn Fn(f64) -> Complex64, interval: Interval) -> Self {
        QuadratureSpec {
            integrand,
            interval,
            singular_exponent_at_a: None,
            singular_exponent_at_b: None,
            rel_tol: DEFAULT_REL_TOL,
            abs_tol: DEFAULT_ABS_TOL,
            max_subdivisions: DEFAULT_MAX_SUBDIVISIONS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub err_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

fn validate(spec: &QuadratureSpec) -> Result<()> {
    let tol_ok = |t: f64| t.is_finite() && t > 0.0;
    if !tol_ok(spec.rel_tol) || !tol_ok(spec.abs_tol) {
        return Err(Error::domain("quadrature tolerances must be positive"));
    }
    if spec.max_subdivisions < 1 {
        return Err(Error::domain("max_subdivisions must be at least 1"));
    }
    match spec.interval {
        Interval::Finite { a, b } => {
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::NonFinite {
                    what: "integration endpoint",
                });
            }
            for exp in [spec.singular_exponent_at_a, spec.singular_exponent_at_b]
                .into_iter()
                .flatten()
            {
                if exp.re <= -1.0 {
                    return Err(Error::NonIntegrable { exponent: exp });
                }
            }
        }
        Interval::Ray { start } => {
            if !start.is_finite() {
                return Err(Error::NonFinite {
                    what: "ray start",
                });
            }
            match spec.singular_exponent_at_b {
                None => {
                    return Err(Error::domain(
                        "ray integration requires a declared decay exponent at infinity",
                    ))
                }
                Some(p) if p.re >= -1.0 => return Err(Error::NonIntegrable { exponent: p }),
                Some(_) => {}
            }
            if let Some(p) = spec.singular_exponent_at_a {
                if p.re <= -1.0 {
                    return Err(Error::NonIntegrable { exponent: p });
                }
            }
        }
    }
    Ok(())
}

/// Integrate according to the spec.
pub fn integrate(spec: &QuadratureSpec) -> Result<QuadratureResult> {
    validate(spec)?;
    match spec.interval {
        Interval::Finite { a, b } => {
            if a == b {
                return Ok(QuadratureResult {
                    value: Complex64::new(0.0, 0.0),
                    err_estimate: 0.0,
                    evaluations: 0,
                    converged: true,
                });
            }
            if a > b {
                let flipped = QuadratureSpec {
                    integrand: spec.integrand,
                    interval: Interval::Finite { a: b, b: a },
                    singular_exponent_at_a: spec.singular_exponent_at_b,
                    singular_exponent_at_b: spec.singular_exponent_at_a,
                    ..*spec
                };
                let mut res = integrate(&flipped)?;
                res.value = -res.value;
                return Ok(res);
            }
            let singular =
                spec.singular_exponent_at_a.is_some() || spec.singular_exponent_at_b.is_some();
            let res = if singular {
                let f = spec.integrand;
                tanh_sinh(
                    &|side: Side, off: f64| match side {
                        Side::Left => f(a + off),
                        Side::Right => f(b - off),
                    },
                    0.5 * (b - a),
                    spec,
                )
            } else {
                adaptive_gk(spec, a, b)
            };
            finish(res)
        }
        Interval::Ray { start } => {
            // t = start + s/(1-s), dt = ds/(1-s)^2, s in (0, 1).
            let f = spec.integrand;
            let res = tanh_sinh(
                &|side: Side, off: f64| match side {
                    Side::Left => {
                        let om = 1.0 - off;
                        f(start + off / om) / (om * om)
                    }
                    Side::Right => {
                        // off is the exact distance below s = 1.
                        f(start + (1.0 - off) / off) / (off * off)
                    }
                },
                0.5,
                spec,
            );
            finish(res)
        }
    }
}

fn finish(res: QuadratureResult) -> Result<QuadratureResult> {
    if res.converged {
        Ok(res)
    } else {
        Err(Error::QuadratureFailure {
            evaluations: res.evaluations,
            err_estimate: res.err_estimate,
        })
    }
}

/// Contour integral of `f` along the ray `start + t * direction`, `t >= 0`:
/// `int_0^inf f(start + t dir) dir dt`, compactified and fed to tanh-sinh.
///
/// `decay_exponent` is the power-law behavior of `f(w)` for large `|w|`;
/// its real part must be below -1.
pub fn integrate_ray(
    f: &dyn Fn(Complex64) -> Complex64,
    start: Complex64,
    direction: Complex64,
    decay_exponent: Complex64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadratureResult> {
    crate::ensure_finite(start, "ray start")?;
    crate::ensure_finite(direction, "ray direction")?;
    let g = move |t: f64| f(start + t * direction) * direction;
    let spec = QuadratureSpec {
        integrand: &g,
        interval: Interval::Ray { start: 0.0 },
        singular_exponent_at_a: None,
        singular_exponent_at_b: Some(decay_exponent),
        rel_tol,
        abs_tol,
        max_subdivisions: DEFAULT_MAX_SUBDIVISIONS,
    };
    integrate(&spec)
}

// ---------------------------------------------------------------------------
// tanh-sinh rule
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

const TS_MAX_LEVEL: u32 = 12;

/// Double-exponential rule on a symmetric interval of half-width `d > 0`.
///
/// `eval` receives the exact offset from the nearer endpoint, so integrable
/// endpoint singularities are sampled at true distances down to the denormal
/// range when the endpoint coordinate is zero.
fn tanh_sinh(
    eval: &dyn Fn(Side, f64) -> Complex64,
    d: f64,
    spec: &QuadratureSpec,
) -> QuadratureResult {
    let budget = spec.max_subdivisions as usize * 15;
    let mut evals = 1usize;
    let center = eval(Side::Left, d);
    let mut node_sum = if center.is_finite() {
        center
    } else {
        Complex64::new(0.0, 0.0)
    };
    let mut h = 2.0f64;
    let mut prev: Option<Complex64> = None;
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = f64::INFINITY;
    for level in 0..=TS_MAX_LEVEL {
        h *= 0.5;
        let eh = h.exp();
        let stride = if level == 0 { eh } else { eh * eh };
        let mut t = eh;
        let mut level_sum = Complex64::new(0.0, 0.0);
        let mut fp = Complex64::new(0.0, 0.0);
        let mut fm = Complex64::new(0.0, 0.0);
        let mut small_streak = 0u32;
        let mut nodes = 0usize;
        loop {
            let u = (1.0 / t - t).exp();
            if u == 0.0 {
                break;
            }
            let r = 2.0 * u / (1.0 + u);
            let off = d * r;
            if off == 0.0 {
                break;
            }
            let w = (t + 1.0 / t) * r / (1.0 + u);
            let yl = eval(Side::Left, off);
            let yr = eval(Side::Right, off);
            evals += 2;
            if yl.is_finite() {
                fp = yl;
            }
            if yr.is_finite() {
                fm = yr;
            }
            let q = w * (fp + fm);
            level_sum += q;
            nodes += 1;
            t *= stride;
            if q.norm() <= f64::EPSILON * (node_sum.norm() + level_sum.norm()) {
                small_streak += 1;
                if small_streak >= 2 && nodes >= 4 {
                    break;
                }
            } else {
                small_streak = 0;
            }
            if evals >= budget {
                break;
            }
        }
        node_sum += level_sum;
        value = d * h * node_sum;
        if let Some(p) = prev {
            err = (value - p).norm();
            let floor = 4.0 * f64::EPSILON * value.norm();
            if err <= spec.abs_tol.max(spec.rel_tol * value.norm()) {
                return QuadratureResult {
                    value,
                    err_estimate: err.max(floor),
                    evaluations: evals,
                    converged: true,
                };
            }
        }
        prev = Some(value);
        if evals >= budget {
            break;
        }
    }
    QuadratureResult {
        value,
        err_estimate: err,
        evaluations: evals,
        converged: false,
    }
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod (G7, K15) with adaptive bisection
// ---------------------------------------------------------------------------

// QUADPACK dqk15 nodes and weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

fn gk15(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut kronrod = WGK[7] * f_center;
    let mut gauss = WG[3] * f_center;
    let mut resabs = WGK[7] * f_center.norm();
    let mut samples = [Complex64::new(0.0, 0.0); 15];
    samples[7] = f_center;
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        samples[j] = f1;
        samples[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = kronrod * 0.5;
    let mut resasc = WGK[7] * (f_center - mean).norm();
    for j in 0..7 {
        resasc += WGK[j] * ((samples[j] - mean).norm() + (samples[14 - j] - mean).norm());
    }
    resasc *= half.abs();
    resabs *= half.abs();
    let raw_err = ((kronrod - gauss) * half).norm();
    let mut err = raw_err;
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (1.0f64).min((200.0 * err / resasc).powf(1.5));
    }
    err = err.max(10.0 * f64::EPSILON * resabs);
    Panel {
        a,
        b,
        value: kronrod * half,
        err,
    }
}

fn adaptive_gk(spec: &QuadratureSpec, a: f64, b: f64) -> QuadratureResult {
    let f = spec.integrand;
    let mut panels = vec![gk15(f, a, b)];
    let mut evals = 15usize;
    let mut subdivisions = 0u32;
    loop {
        let total: Complex64 = panels.iter().map(|p| p.value).sum();
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        let tol = spec.abs_tol.max(spec.rel_tol * total.norm());
        if total_err <= tol {
            return QuadratureResult {
                value: total,
                err_estimate: total_err,
                evaluations: evals,
                converged: true,
            };
        }
        if subdivisions >= spec.max_subdivisions {
            return QuadratureResult {
                value: total,
                err_estimate: total_err,
                evaluations: evals,
                converged: false,
            };
        }
        // Bisect the worst panel; ties resolve to the first, keeping the
        // subdivision order deterministic.
        let mut worst = 0;
        for (i, p) in panels.iter().enumerate() {
            if p.err > panels[worst].err {
                worst = i;
            }
        }
        let Panel { a: pa, b: pb, .. } = panels[worst];
        let mid = 0.5 * (pa + pb);
        if mid <= pa || mid >= pb {
            // Panel too narrow to split further.
            let total_err: f64 = panels.iter().map(|p| p.err).sum();
            return QuadratureResult {
                value: total,
                err_estimate: total_err,
                evaluations: evals,
                converged: false,
            };
        }
        panels[worst] = gk15(f, pa, mid);
        panels.push(gk15(f, mid, pb));
        evals += 30;
        subdivisions += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::SplitMix64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn finite(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64) -> QuadratureResult {
        integrate(&QuadratureSpec::new(f, Interval::Finite { a, b })).unwrap()
    }

    #[test]
    fn constant_on_unit_interval() {
        let f = |_: f64| c(1.0, 0.0);
        let r = finite(&f, 0.0, 1.0);
        assert!((r.value.re - 1.0).abs() <= 1e-15);
        assert!(r.err_estimate <= 1e-14);
        assert!(r.converged);
    }

    #[test]
    fn elementary_ray_integral() {
        // int_2^inf dw/(w^2-1) = ln(3)/2
        let f = |w: Complex64| 1.0 / (w * w - 1.0);
        let r = integrate_ray(&f, c(2.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0), 1e-10, 1e-12).unwrap();
        let expected = 0.549_306_144_334_054_8;
        assert!(
            (r.value.re - expected).abs() <= 1e-11,
            "got {}, err est {:.2e}",
            r.value,
            r.err_estimate
        );
        assert!(r.value.im.abs() <= 1e-12);
    }

    #[test]
    fn inverse_square_from_one() {
        // int_1^inf dw/w^2 = 1; the integrand overflow-safely tends to 0.
        let f = |w: Complex64| {
            let w2 = w * w;
            if w2.is_finite() {
                1.0 / w2
            } else {
                c(0.0, 0.0)
            }
        };
        let r = integrate_ray(&f, c(1.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0), 1e-10, 1e-12).unwrap();
        assert!((r.value.re - 1.0).abs() <= 1e-11);
    }

    #[test]
    fn wing_shape_singular_ray() {
        // int_1^inf (w^2-1)^(-3/4) dw = Gamma(1/4)^2 / (2 sqrt(pi)),
        // parameterized with the singular point at t = 0.
        let f = |t: f64| {
            let ln_val = -0.75 * (t.ln() + (t + 2.0).ln());
            c(ln_val.exp(), 0.0)
        };
        let spec = QuadratureSpec {
            integrand: &f,
            interval: Interval::Ray { start: 0.0 },
            singular_exponent_at_a: Some(c(-0.75, 0.0)),
            singular_exponent_at_b: Some(c(-1.5, 0.0)),
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 2000,
        };
        let r = integrate(&spec).unwrap();
        let expected = 3.708_149_354_602_743_8;
        assert!(
            (r.value.re - expected).abs() / expected <= 1e-10,
            "got {}, expected {expected}",
            r.value.re
        );
    }

    #[test]
    fn complex_ray_against_reference_panels() {
        // int_0^inf ((2+i+t)^2-1)^(-1.3) dt, oracle: dense composite Simpson
        // on the compactified variable.
        let f = |w: Complex64| ((w * w - 1.0).ln() * c(-1.3, 0.0)).exp();
        let start = c(2.0, 1.0);
        let g = |s: f64| {
            let t = s / (1.0 - s);
            f(start + t) / ((1.0 - s) * (1.0 - s))
        };
        let n = 200_000;
        let hs = 1.0 / (n as f64 + 1.0) / 2.0; // integrate s in [0, 1-eps_ish] by Simpson
        let upper = 1.0 - 1e-9;
        let m = 400_000usize; // even
        let step = upper / m as f64;
        let mut acc = g(0.0) + g(upper);
        for k in 1..m {
            let w = if k % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * g(k as f64 * step);
        }
        let reference = acc * step / 3.0;
        let _ = hs;
        let r = integrate_ray(&f, start, c(1.0, 0.0), c(-2.6, 0.0), 1e-10, 1e-12).unwrap();
        assert!(
            (r.value - reference).norm() <= 1e-6,
            "engine {} vs reference {}",
            r.value,
            reference
        );
        // Frozen independently.
        let frozen = c(0.122_218_324_449_288_45, -0.137_619_369_395_415_96);
        assert!((r.value - frozen).norm() <= 1e-10, "got {}", r.value);
    }

    #[test]
    fn declared_singular_powers_on_unit_interval() {
        for p in [-0.9, -0.5, -0.1, 0.5] {
            let f = move |t: f64| c(t.powf(p), 0.0);
            let spec = QuadratureSpec {
                integrand: &f,
                interval: Interval::Finite { a: 0.0, b: 1.0 },
                singular_exponent_at_a: Some(c(p, 0.0)),
                singular_exponent_at_b: None,
                rel_tol: 1e-10,
                abs_tol: 1e-12,
                max_subdivisions: 2000,
            };
            let r = integrate(&spec).unwrap();
            let expected = 1.0 / (p + 1.0);
            assert!(
                (r.value.re - expected).abs() / expected <= 1e-10,
                "p = {p}: got {}, expected {expected}",
                r.value.re
            );
        }
    }

    #[test]
    fn linearity() {
        let mut rng = SplitMix64::new(0x5eed_0101);
        for _ in 0..20 {
            let alpha = c(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
            let beta = c(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
            let f = |t: f64| c((2.1 * t).sin(), t * t);
            let g = |t: f64| c((1.0 + t * t).ln(), (3.0 * t).cos());
            let combo = |t: f64| alpha * f(t) + beta * g(t);
            let rf = finite(&f, 0.0, 2.0);
            let rg = finite(&g, 0.0, 2.0);
            let rc = finite(&combo, 0.0, 2.0);
            let expected = alpha * rf.value + beta * rg.value;
            let budget = 10.0
                * (rc.err_estimate + alpha.norm() * rf.err_estimate + beta.norm() * rg.err_estimate)
                + 1e-13;
            assert!((rc.value - expected).norm() <= budget);
        }
    }

    #[test]
    fn interval_additivity() {
        let mut rng = SplitMix64::new(0x5eed_0102);
        let f = |t: f64| c((t * t - 0.3 * t).exp().sin(), (1.5 * t).cos());
        for _ in 0..20 {
            let mid = rng.uniform(0.05, 1.95);
            let whole = finite(&f, 0.0, 2.0);
            let left = finite(&f, 0.0, mid);
            let right = finite(&f, mid, 2.0);
            let budget =
                10.0 * (whole.err_estimate + left.err_estimate + right.err_estimate) + 1e-13;
            assert!((whole.value - (left.value + right.value)).norm() <= budget);
        }
    }

    #[test]
    fn reversed_interval_negates() {
        let f = |t: f64| c(t * t, -t);
        let fwd = finite(&f, 0.0, 1.0);
        let rev = finite(&f, 1.0, 0.0);
        assert!((fwd.value + rev.value).norm() <= 1e-13);
    }

    #[test]
    fn error_estimates_are_honest() {
        // Known-value corpus; true error must be within 10x the estimate.
        let mut passed = 0;
        let mut total = 0;
        let mut check = |value: Complex64, exact: Complex64, est: f64| {
            total += 1;
            if (value - exact).norm() <= 10.0 * est.max(f64::EPSILON) {
                passed += 1;
            }
        };

        let f1 = |_: f64| c(1.0, 0.0);
        let r1 = finite(&f1, 0.0, 1.0);
        check(r1.value, c(1.0, 0.0), r1.err_estimate);

        let f2 = |w: Complex64| 1.0 / (w * w - 1.0);
        let r2 = integrate_ray(&f2, c(2.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0), 1e-10, 1e-12).unwrap();
        check(r2.value, c(0.549_306_144_334_054_8, 0.0), r2.err_estimate);

        let f3 = |w: Complex64| {
            let w2 = w * w;
            if w2.is_finite() {
                1.0 / w2
            } else {
                c(0.0, 0.0)
            }
        };
        let r3 = integrate_ray(&f3, c(1.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0), 1e-10, 1e-12).unwrap();
        check(r3.value, c(1.0, 0.0), r3.err_estimate);

        // Wing integral at nu = 1/4.
        let f4 = |t: f64| c((-0.75 * (t.ln() + (t + 2.0).ln())).exp(), 0.0);
        let s4 = QuadratureSpec {
            integrand: &f4,
            interval: Interval::Ray { start: 0.0 },
            singular_exponent_at_a: Some(c(-0.75, 0.0)),
            singular_exponent_at_b: Some(c(-1.5, 0.0)),
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 2000,
        };
        let r4 = integrate(&s4).unwrap();
        check(r4.value, c(3.708_149_354_602_743_8, 0.0), r4.err_estimate);

        // Cap integral at nu = 1/4: int_0^1 (1-w^2)^(-3/4) dw, singularity
        // moved to tau = 0 by w = 1 - tau.
        let f5 = |tau: f64| c((-0.75 * (tau.ln() + (2.0 - tau).ln())).exp(), 0.0);
        let s5 = QuadratureSpec {
            integrand: &f5,
            interval: Interval::Finite { a: 0.0, b: 1.0 },
            singular_exponent_at_a: Some(c(-0.75, 0.0)),
            singular_exponent_at_b: None,
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 2000,
        };
        let r5 = integrate(&s5).unwrap();
        check(r5.value, c(2.622_057_554_292_119_8, 0.0), r5.err_estimate);

        // Smooth oscillatory panel for the adaptive rule.
        let f6 = |t: f64| c((10.0 * t).cos(), 0.0);
        let r6 = finite(&f6, 0.0, 1.0);
        check(r6.value, c(10.0f64.sin() / 10.0, 0.0), r6.err_estimate);

        assert!(
            passed * 100 >= total * 95,
            "only {passed}/{total} honest error estimates"
        );
    }

    #[test]
    fn rejects_bad_specs() {
        let f = |_: f64| c(1.0, 0.0);
        let spec = QuadratureSpec {
            singular_exponent_at_a: Some(c(-1.2, 0.0)),
            ..QuadratureSpec::new(&f, Interval::Finite { a: 0.0, b: 1.0 })
        };
        assert!(matches!(
            integrate(&spec),
            Err(Error::NonIntegrable { .. })
        ));
        // Ray without a decay declaration.
        let spec = QuadratureSpec::new(&f, Interval::Ray { start: 0.0 });
        assert!(matches!(integrate(&spec), Err(Error::Domain { .. })));
        // Ray with too-slow decay.
        let spec = QuadratureSpec {
            singular_exponent_at_b: Some(c(-0.9, 0.0)),
            ..QuadratureSpec::new(&f, Interval::Ray { start: 0.0 })
        };
        assert!(matches!(
            integrate(&spec),
            Err(Error::NonIntegrable { .. })
        ));
    }

    #[test]
    fn empty_interval_is_zero() {
        let f = |_: f64| c(3.0, -2.0);
        let r = finite(&f, 0.7, 0.7);
        assert_eq!(r.value, c(0.0, 0.0));
        assert!(r.converged);
    }
}
