//! Associated Legendre functions of the first and second kind on the cut
//! plane `C \ (-inf, 1]`, restricted to order `mu = +nu` or `mu = -nu`.
//!
//! Every power of `z^2 - 1` follows the split convention
//! `(z^2-1)^alpha := (z+1)^alpha (z-1)^alpha` with the principal logarithm on
//! each factor; [`split_power`] is that convention as a function. The closed
//! forms run through the hypergeometric series of [`crate::hypergeometric`]
//! and are therefore guaranteed only for `|1/z^2| <= RADIUS_GUARD`
//! (`|z| >~ 1.026`); the integral representations reach the rest of the cut
//! plane through the quadrature engine, integrating along the horizontal ray
//! `w = z + t`, `t in [0, inf)`, which never meets the cut.

use crate::error::{Error, Result};
use crate::hypergeometric::{gamma, gauss_2f1, nonpositive_integer_near, RADIUS_GUARD};
use crate::quadrature::{integrate, Interval, QuadratureResult, QuadratureSpec};
use crate::{cos_pi, ensure_finite, exp_i_pi, sin_pi, two_pow, EvalResult, SQRT_PI};
use num_complex::Complex64;

/// Tolerance for rejecting degrees on the Theorem-1 pole set
/// `{-1/2, -3/2, -5/2, ...}` and for the integer guards of the Whipple route.
pub const DEGREE_POLE_TOL: f64 = 1e-12;

/// Complex degree `nu`, finite by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeParam {
    nu: Complex64,
}

impl DegreeParam {
    pub fn new(nu: Complex64) -> Result<Self> {
        ensure_finite(nu, "degree nu")?;
        Ok(DegreeParam { nu })
    }

    pub fn value(&self) -> Complex64 {
        self.nu
    }
}

/// A point of `C \ (-inf, 1]`. The cut test is exact on the doubles:
/// `Im z == 0 && Re z <= 1` is rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutPlanePoint {
    z: Complex64,
}

impl CutPlanePoint {
    pub fn new(z: Complex64) -> Result<Self> {
        ensure_finite(z, "cut-plane point")?;
        if z.im == 0.0 && z.re <= 1.0 {
            return Err(Error::Cut { z });
        }
        Ok(CutPlanePoint { z })
    }

    pub fn value(&self) -> Complex64 {
        self.z
    }
}

/// The split power `(z^2-1)^alpha = (z+1)^alpha (z-1)^alpha` held as a
/// computation: both bases and the exponent stay inspectable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchedPower {
    pub base_plus: Complex64,
    pub base_minus: Complex64,
    pub exponent: Complex64,
}

impl BranchedPower {
    pub fn new(z: &CutPlanePoint, exponent: Complex64) -> Self {
        BranchedPower {
            base_plus: z.z + 1.0,
            base_minus: z.z - 1.0,
            exponent,
        }
    }

    /// `exp(alpha Log(z+1)) exp(alpha Log(z-1))`, principal logs.
    pub fn value(&self) -> Complex64 {
        ((self.base_plus.ln() + self.base_minus.ln()) * self.exponent).exp()
    }
}

/// `(z^2-1)^alpha` under the split convention.
pub fn split_power(z: &CutPlanePoint, alpha: Complex64) -> Result<Complex64> {
    ensure_finite(alpha, "split_power exponent")?;
    Ok(BranchedPower::new(z, alpha).value())
}

fn check_degree_off_theorem1_poles(nu: Complex64) -> Result<()> {
    // nu in {-1/2, -3/2, ...} makes 2 nu + 1 a nonpositive integer.
    let t = 2.0 * nu + 1.0;
    if nu.im.abs() <= DEGREE_POLE_TOL {
        let k = t.re.round();
        if k <= 0.5 && (t.re - k).abs() <= 2.0 * DEGREE_POLE_TOL {
            return Err(Error::Pole { location: nu });
        }
    }
    Ok(())
}

/// `int_z^inf dw / (w^2-1)^(nu+1)` along the horizontal ray `w = z + t`.
///
/// The integrand is evaluated in log form so that huge `|w|` on the
/// compactified tail cannot overflow. Near the singularity at `w = 1`
/// (when `|z-1| < 0.05`) the spec declares the endpoint exponent so the
/// double-exponential rule is applied; the declaration is restricted to
/// integrable real parts.
pub(crate) fn inv_power_ray_integral(
    nu: Complex64,
    z: &CutPlanePoint,
) -> Result<QuadratureResult> {
    if nu.re <= -0.5 {
        return Err(Error::domain(format!(
            "ray integral of (w^2-1)^-(nu+1) requires Re nu > -1/2, got {:.6}",
            nu.re
        )));
    }
    let zz = z.z;
    let expo = -(nu + 1.0);
    let f = move |t: f64| {
        let w = zz + t;
        (((w + 1.0).ln() + (w - 1.0).ln()) * expo).exp()
    };
    let near_singularity = (zz - 1.0).norm() < 0.05;
    let spec = QuadratureSpec {
        integrand: &f,
        interval: Interval::Ray { start: 0.0 },
        singular_exponent_at_a: if near_singularity && expo.re > -1.0 {
            Some(expo)
        } else {
            None
        },
        singular_exponent_at_b: Some(2.0 * expo),
        ..QuadratureSpec::new(&f, Interval::Ray { start: 0.0 })
    };
    integrate(&spec)
}

fn quad_to_eval(q: QuadratureResult, prefactor: Complex64) -> EvalResult {
    let value = prefactor * q.value;
    EvalResult {
        value,
        abs_err: q.err_estimate * prefactor.norm() + 4.0 * f64::EPSILON * value.norm(),
        terms_used: q.evaluations,
        converged: true,
    }
}

/// `Q_nu^mu(z)` from its closed hypergeometric form:
/// `sqrt(pi) e^{i pi mu} Gamma(nu+mu+1) (z^2-1)^{mu/2} /
///  (2^{nu+1} Gamma(nu+3/2) z^{nu+mu+1}) * 2F1((nu+mu+2)/2, (nu+mu+1)/2; nu+3/2; 1/z^2)`.
pub fn q_nu_mu(nu: Complex64, mu: Complex64, z: &CutPlanePoint) -> Result<EvalResult> {
    ensure_finite(nu, "degree nu")?;
    ensure_finite(mu, "order mu")?;
    let sum = nu + mu + 1.0;
    if nonpositive_integer_near(sum).is_some() {
        return Err(Error::Pole { location: sum });
    }
    if nonpositive_integer_near(nu + 1.5).is_some() {
        return Err(Error::Pole { location: nu + 1.5 });
    }
    let w = 1.0 / (z.z * z.z);
    if w.norm() > RADIUS_GUARD {
        return Err(Error::domain(format!(
            "|1/z^2| = {:.6} outside the series disk; move z outward or use the integral representation",
            w.norm()
        )));
    }
    let f = gauss_2f1(0.5 * (sum + 1.0), 0.5 * sum, nu + 1.5, w)?;
    let prefactor = SQRT_PI * exp_i_pi(mu) * gamma(sum)? * split_power(z, 0.5 * mu)?
        / (two_pow(nu + 1.0) * gamma(nu + 1.5)? * z.z.powc(sum));
    Ok(f.scaled(prefactor))
}

/// `Q_nu^nu(z)` by the closed form with `mu = nu`.
pub fn q_nu_nu(nu: &DegreeParam, z: &CutPlanePoint) -> Result<EvalResult> {
    check_degree_off_theorem1_poles(nu.nu)?;
    q_nu_mu(nu.nu, nu.nu, z)
}

/// `Q_nu^nu(z)` rearranged from the antiderivative form:
/// `2^nu Gamma(nu+1) e^{i nu pi} (z^2-1)^{nu/2} / ((2nu+1) z^{2nu+1})
///  * 2F1(nu+1/2, nu+1; nu+3/2; 1/z^2)`.
///
/// Shares the series with [`q_nu_nu`] but reaches the prefactor through a
/// different Gamma route, which makes it a useful cross-check.
pub fn q_nu_nu_theorem1(nu: &DegreeParam, z: &CutPlanePoint) -> Result<EvalResult> {
    let n = nu.nu;
    check_degree_off_theorem1_poles(n)?;
    if nonpositive_integer_near(2.0 * n + 1.0).is_some() {
        return Err(Error::Pole { location: n });
    }
    if nonpositive_integer_near(n + 1.5).is_some() {
        return Err(Error::Pole { location: n + 1.5 });
    }
    let w = 1.0 / (z.z * z.z);
    if w.norm() > RADIUS_GUARD {
        return Err(Error::domain(format!(
            "|1/z^2| = {:.6} outside the series disk",
            w.norm()
        )));
    }
    let f = gauss_2f1(n + 0.5, n + 1.0, n + 1.5, w)?;
    let prefactor = two_pow(n) * gamma(n + 1.0)? * exp_i_pi(n) * split_power(z, 0.5 * n)?
        / ((2.0 * n + 1.0) * z.z.powc(2.0 * n + 1.0));
    Ok(f.scaled(prefactor))
}

/// `Q_nu^{-nu}(z) = e^{-2 i pi nu} / Gamma(2nu+1) * Q_nu^nu(z)`, the
/// negative-order relation at `mu = nu`.
pub fn q_nu_neg_nu(nu: &DegreeParam, z: &CutPlanePoint) -> Result<EvalResult> {
    let n = nu.nu;
    if nonpositive_integer_near(2.0 * n + 1.0).is_some() {
        return Err(Error::Pole { location: n });
    }
    let q = q_nu_nu(nu, z)?;
    let factor = exp_i_pi(-2.0 * n) / gamma(2.0 * n + 1.0)?;
    Ok(q.scaled(factor))
}

/// `Q_nu^{-nu}(z)` from its own integral representation:
/// `sqrt(pi) e^{-i nu pi} (z^2-1)^{nu/2} / (2^nu Gamma(nu+1/2))
///  * int_z^inf dw/(w^2-1)^{nu+1}`.
pub fn q_nu_neg_nu_integral(nu: &DegreeParam, z: &CutPlanePoint) -> Result<EvalResult> {
    let n = nu.nu;
    if nonpositive_integer_near(n + 0.5).is_some() {
        return Err(Error::Pole { location: n + 0.5 });
    }
    let ray = inv_power_ray_integral(n, z)?;
    let prefactor =
        SQRT_PI * exp_i_pi(-n) * split_power(z, 0.5 * n)? / (two_pow(n) * gamma(n + 0.5)?);
    Ok(quad_to_eval(ray, prefactor))
}

/// `P_nu^nu(z)` through the closed route:
/// `(2^nu Gamma(nu+1/2)/sqrt(pi)) (z^2-1)^{nu/2}
///  + (2/pi) sin(nu pi) e^{-i nu pi} Q_nu^nu(z)`.
pub fn p_nu_nu(nu: &DegreeParam, z: &CutPlanePoint) -> Result<EvalResult> {
    let n = nu.nu;
    let first = two_pow(n) * gamma(n + 0.5)? / SQRT_PI * split_power(z, 0.5 * n)?;
    let q = q_nu_nu(nu, z)?;
    let factor = 2.0 / std::f64::consts::PI * sin_pi(n) * exp_i_pi(-n);
    let value = first + factor * q.value;
    Ok(EvalResult {
        value,
        abs_err: q.abs_err * factor.norm()
            + 4.0 * f64::EPSILON * (first.norm() + (factor * q.value).norm()),
        terms_used: q.terms_used,
        converged: true,
    })
}

/// `P_nu^nu(z)` through its integral representation (requires `Re nu > -1/2`):
/// `(2^nu Gamma(nu+1/2)/sqrt(pi)) (z^2-1)^{nu/2}
///  + (2^{nu+1} Gamma(nu+1) (z^2-1)^{nu/2} / pi) sin(nu pi)
///    int_z^inf dw/(w^2-1)^{nu+1}`.
pub fn p_nu_nu_integral(nu: &DegreeParam, z: &CutPlanePoint) -> Result<EvalResult> {
    let n = nu.nu;
    let first = two_pow(n) * gamma(n + 0.5)? / SQRT_PI * split_power(z, 0.5 * n)?;
    let ray = inv_power_ray_integral(n, z)?;
    let factor =
        two_pow(n + 1.0) * gamma(n + 1.0)? * split_power(z, 0.5 * n)? / std::f64::consts::PI
            * sin_pi(n);
    let value = first + factor * ray.value;
    Ok(EvalResult {
        value,
        abs_err: ray.err_estimate * factor.norm()
            + 4.0 * f64::EPSILON * (first.norm() + (factor * ray.value).norm()),
        terms_used: ray.evaluations,
        converged: true,
    })
}

/// The special value `P_nu^{-nu}(z) = (z^2-1)^{nu/2} / (2^nu Gamma(nu+1))`.
pub fn p_nu_neg_nu(nu: &DegreeParam, z: &CutPlanePoint) -> Result<EvalResult> {
    let n = nu.nu;
    if nonpositive_integer_near(n + 1.0).is_some() {
        return Err(Error::Pole { location: n + 1.0 });
    }
    let value = split_power(z, 0.5 * n)? / (two_pow(n) * gamma(n + 1.0)?);
    Ok(EvalResult {
        value,
        abs_err: 8.0 * f64::EPSILON * value.norm(),
        terms_used: 0,
        converged: true,
    })
}

/// `Q_nu^nu(z)` reconstructed through the Whipple relation:
/// `sqrt(pi/2) Gamma(2nu+1) (z^2-1)^{-1/4} e^{i nu pi}
///  P_{-nu-1/2}^{-nu-1/2}(z / sqrt(z^2-1))`.
///
/// The mapped function has order equal to degree at `sigma = -nu - 1/2` and
/// is evaluated from its power term plus hypergeometric term, with the Gamma
/// reflection applied so that half-integer `nu` stays finite. Degrees within
/// `DEGREE_POLE_TOL` of a positive integer are genuine poles of the route and
/// are rejected; `nu = 0` is served by the logarithmic limit.
///
/// The relation holds as printed for `Re z > 0` (for `Re z < 0` the square
/// root in the mapped argument changes sheet and the identity fails in every
/// branch reading), so the left half-plane is rejected.
pub fn whipple_q_from_p(nu: &DegreeParam, z: &CutPlanePoint) -> Result<EvalResult> {
    let n = nu.nu;
    if nonpositive_integer_near(2.0 * n + 1.0).is_some() {
        return Err(Error::Pole { location: n });
    }
    if z.z.re <= 0.0 {
        return Err(Error::domain(format!(
            "Whipple route requires Re z > 0, got {:.6}",
            z.z.re
        )));
    }
    let sqrt_zm1 = split_power(z, Complex64::new(0.5, 0.0))?;
    let y = z.z / sqrt_zm1;
    let yp = CutPlanePoint::new(y)?;
    let w = 1.0 / (y * y);
    if w.norm() > RADIUS_GUARD {
        return Err(Error::domain(format!(
            "mapped argument z/sqrt(z^2-1) has |1/y^2| = {:.6} outside the series disk",
            w.norm()
        )));
    }
    let outer = (std::f64::consts::PI / 2.0).sqrt()
        * gamma(2.0 * n + 1.0)?
        * split_power(z, Complex64::new(-0.25, 0.0))?
        * exp_i_pi(n);

    if n.norm() <= DEGREE_POLE_TOL {
        // P_{-1/2}^{-1/2}(y) = sqrt(2/pi) (y^2-1)^{-1/4} Log(y + sqrt(y^2-1)).
        let sq = split_power(&yp, Complex64::new(0.5, 0.0))?;
        let p = (2.0 / std::f64::consts::PI).sqrt()
            * split_power(&yp, Complex64::new(-0.25, 0.0))?
            * (y + sq).ln();
        let value = outer * p;
        return Ok(EvalResult {
            value,
            abs_err: 16.0 * f64::EPSILON * value.norm(),
            terms_used: 0,
            converged: true,
        });
    }
    if n.im.abs() <= DEGREE_POLE_TOL && n.re >= 0.5 {
        let k = n.re.round();
        if k >= 1.0 && (n.re - k).abs() <= DEGREE_POLE_TOL {
            return Err(Error::Pole { location: n });
        }
    }

    let sigma = -n - 0.5;
    let power = split_power(&yp, 0.5 * sigma)?;
    let a_term = two_pow(sigma) * gamma(sigma + 0.5)? / SQRT_PI * power;
    let f = gauss_2f1(sigma + 1.0, sigma + 0.5, sigma + 1.5, w)?;
    let b_factor = -SQRT_PI * power * y.powc(-2.0 * sigma - 1.0)
        / (cos_pi(sigma) * gamma(-2.0 * sigma)? * two_pow(sigma + 1.0) * gamma(sigma + 1.5)?);
    let b_term = b_factor * f.value;
    let p = a_term + b_term;
    let value = outer * p;
    Ok(EvalResult {
        value,
        abs_err: outer.norm()
            * (f.abs_err * b_factor.norm() + 8.0 * f64::EPSILON * (a_term.norm() + b_term.norm()))
            + 4.0 * f64::EPSILON * value.norm(),
        terms_used: f.terms_used,
        converged: true,
    })
}

/// `Q_nu^nu(z)` from the integral representation
/// `2^nu Gamma(nu+1) e^{i nu pi} (z^2-1)^{nu/2} int_z^inf dw/(w^2-1)^{nu+1}`,
/// valid for `Re nu > -1/2`.
pub fn integrate_q_rep(nu: &DegreeParam, z: &CutPlanePoint) -> Result<EvalResult> {
    let n = nu.nu;
    if n.re <= -0.5 {
        return Err(Error::domain(format!(
            "integral representation requires Re nu > -1/2, got {:.6}",
            n.re
        )));
    }
    let ray = inv_power_ray_integral(n, z)?;
    let prefactor = two_pow(n) * gamma(n + 1.0)? * exp_i_pi(n) * split_power(z, 0.5 * n)?;
    Ok(quad_to_eval(ray, prefactor))
}

/// `int_1^inf (w^2-1)^{nu-1} dw = Gamma(nu) Gamma(1/2-nu) / (2 sqrt(pi))`
/// for `0 < Re nu < 1/2`.
pub fn definite_integral_wing(nu: Complex64) -> Result<Complex64> {
    ensure_finite(nu, "wing nu")?;
    if !(nu.re > 0.0 && nu.re < 0.5) {
        return Err(Error::domain(format!(
            "wing integral requires 0 < Re nu < 1/2, got {:.6}",
            nu.re
        )));
    }
    Ok(gamma(nu)? * gamma(0.5 - nu)? / (2.0 * SQRT_PI))
}

/// Companion quadrature for [`definite_integral_wing`]: the same integral
/// evaluated by the singular ray rule, parameterized by `w = 1 + t` so the
/// endpoint singularity sits at `t = 0`.
pub fn wing_integral_quadrature(nu: Complex64) -> Result<QuadratureResult> {
    ensure_finite(nu, "wing nu")?;
    if !(nu.re > 0.0 && nu.re < 0.5) {
        return Err(Error::domain(format!(
            "wing integral requires 0 < Re nu < 1/2, got {:.6}",
            nu.re
        )));
    }
    let expo = nu - 1.0;
    let f = move |t: f64| ((t.ln() + (t + 2.0).ln()) * expo).exp();
    let spec = QuadratureSpec {
        integrand: &f,
        interval: Interval::Ray { start: 0.0 },
        singular_exponent_at_a: Some(expo),
        singular_exponent_at_b: Some(2.0 * expo),
        ..QuadratureSpec::new(&f, Interval::Ray { start: 0.0 })
    };
    integrate(&spec)
}
