//! Ferrers functions (associated Legendre functions on the cut) for
//! `x in (-1, 1)`, with order `mu = +nu` or `mu = -nu`.
//!
//! On the cut the base `1 - x^2` is positive, so `(1-x^2)^{nu/2}` is an
//! ordinary principal power with no branch ambiguity; it is computed as
//! `exp(nu/2 (ln(1-x) + ln(1+x)))` to stay accurate near the endpoints.

use crate::error::{Error, Result};
use crate::hypergeometric::{gamma, gauss_2f1, nonpositive_integer_near, RADIUS_GUARD};
use crate::quadrature::{integrate, Interval, QuadratureResult, QuadratureSpec};
use crate::{cos_pi, ensure_finite, sin_pi, two_pow, EvalResult, SQRT_PI};
use num_complex::Complex64;

/// A point strictly inside `(-1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutInterval {
    x: f64,
}

impl CutInterval {
    pub fn new(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::NonFinite {
                what: "cut-interval point",
            });
        }
        if !(-1.0 < x && x < 1.0) {
            return Err(Error::domain(format!(
                "x = {x} is outside the open interval (-1, 1)"
            )));
        }
        Ok(CutInterval { x })
    }

    pub fn value(&self) -> f64 {
        self.x
    }
}

/// `(1-x^2)^e` for `x` on the cut, complex exponent.
fn one_minus_x2_pow(x: f64, e: Complex64) -> Complex64 {
    (e * ((1.0 - x).ln() + (1.0 + x).ln())).exp()
}

/// `int_0^x dw / (1-w^2)^{nu+1}` by quadrature. The integrand is bounded on
/// the closed subinterval; when `x` sits within 0.05 of an endpoint of
/// `(-1, 1)` the boundary-layer exponent is declared (where integrable) so
/// the double-exponential rule takes over.
pub(crate) fn cap_core_integral(nu: Complex64, x: &CutInterval) -> Result<QuadratureResult> {
    let expo = -(nu + 1.0);
    let f = move |w: f64| (expo * ((1.0 - w).ln() + (1.0 + w).ln())).exp();
    let near_edge = 1.0 - x.x.abs() < 0.05;
    let spec = QuadratureSpec {
        integrand: &f,
        interval: Interval::Finite { a: 0.0, b: x.x },
        singular_exponent_at_a: None,
        singular_exponent_at_b: if near_edge && expo.re > -1.0 {
            Some(expo)
        } else {
            None
        },
        ..QuadratureSpec::new(&f, Interval::Finite { a: 0.0, b: x.x })
    };
    integrate(&spec)
}

/// Ferrers `Q_nu^{-nu}(x)` by the closed form
/// `sqrt(pi) x (1-x^2)^{nu/2} / (2^nu Gamma(nu+1/2)) * 2F1(1/2, nu+1; 3/2; x^2)`.
pub fn ferrers_q_neg_nu(nu: Complex64, x: &CutInterval) -> Result<EvalResult> {
    ensure_finite(nu, "degree nu")?;
    if nonpositive_integer_near(nu + 0.5).is_some() {
        return Err(Error::Pole { location: nu + 0.5 });
    }
    let x2 = x.x * x.x;
    if x2 > RADIUS_GUARD {
        return Err(Error::domain(format!(
            "x^2 = {x2:.6} outside the series disk; use the integral representation"
        )));
    }
    let f = gauss_2f1(
        Complex64::new(0.5, 0.0),
        nu + 1.0,
        Complex64::new(1.5, 0.0),
        Complex64::new(x2, 0.0),
    )?;
    let prefactor =
        SQRT_PI * x.x * one_minus_x2_pow(x.x, 0.5 * nu) / (two_pow(nu) * gamma(nu + 0.5)?);
    Ok(f.scaled(prefactor))
}

/// Ferrers `Q_nu^{-nu}(x)` by the integral representation
/// `sqrt(pi) (1-x^2)^{nu/2} / (2^nu Gamma(nu+1/2)) int_0^x dw/(1-w^2)^{nu+1}`.
pub fn ferrers_q_neg_nu_integral(nu: Complex64, x: &CutInterval) -> Result<EvalResult> {
    ensure_finite(nu, "degree nu")?;
    if nonpositive_integer_near(nu + 0.5).is_some() {
        return Err(Error::Pole { location: nu + 0.5 });
    }
    let core = cap_core_integral(nu, x)?;
    let prefactor = SQRT_PI * one_minus_x2_pow(x.x, 0.5 * nu) / (two_pow(nu) * gamma(nu + 0.5)?);
    let value = prefactor * core.value;
    Ok(EvalResult {
        value,
        abs_err: core.err_estimate * prefactor.norm() + 4.0 * f64::EPSILON * value.norm(),
        terms_used: core.evaluations,
        converged: true,
    })
}

/// The special value `P_nu^{-nu}(x) = (1-x^2)^{nu/2} / (2^nu Gamma(nu+1))`.
pub fn ferrers_p_neg_nu(nu: Complex64, x: &CutInterval) -> Result<EvalResult> {
    ensure_finite(nu, "degree nu")?;
    if nonpositive_integer_near(nu + 1.0).is_some() {
        return Err(Error::Pole { location: nu + 1.0 });
    }
    let value = one_minus_x2_pow(x.x, 0.5 * nu) / (two_pow(nu) * gamma(nu + 1.0)?);
    Ok(EvalResult {
        value,
        abs_err: 8.0 * f64::EPSILON * value.norm(),
        terms_used: 0,
        converged: true,
    })
}

/// Ferrers `P_nu^nu(x)` by its integral representation:
/// `(2^nu (1-x^2)^{nu/2} / sqrt(pi)) [Gamma(nu+1/2) cos(nu pi)
///  + (2 Gamma(nu+1)/sqrt(pi)) sin(nu pi) int_0^x dw/(1-w^2)^{nu+1}]`.
pub fn ferrers_p_nu(nu: Complex64, x: &CutInterval) -> Result<EvalResult> {
    ensure_finite(nu, "degree nu")?;
    if nonpositive_integer_near(nu + 0.5).is_some() {
        return Err(Error::Pole { location: nu + 0.5 });
    }
    if nonpositive_integer_near(nu + 1.0).is_some() {
        return Err(Error::Pole { location: nu + 1.0 });
    }
    let core = cap_core_integral(nu, x)?;
    let outer = two_pow(nu) * one_minus_x2_pow(x.x, 0.5 * nu) / SQRT_PI;
    let int_factor = 2.0 * gamma(nu + 1.0)? / SQRT_PI * sin_pi(nu);
    let bracket = gamma(nu + 0.5)? * cos_pi(nu) + int_factor * core.value;
    let value = outer * bracket;
    Ok(EvalResult {
        value,
        abs_err: core.err_estimate * (outer * int_factor).norm()
            + 8.0 * f64::EPSILON * outer.norm() * bracket.norm().max(gamma(nu + 0.5)?.norm()),
        terms_used: core.evaluations,
        converged: true,
    })
}

/// Ferrers `Q_nu^nu(x)` by its integral representation:
/// `-2^{nu-1} sqrt(pi) Gamma(nu+1/2) sin(nu pi) (1-x^2)^{nu/2}
///  + 2^nu Gamma(nu+1) cos(nu pi) (1-x^2)^{nu/2} int_0^x dw/(1-w^2)^{nu+1}`.
pub fn ferrers_q_nu(nu: Complex64, x: &CutInterval) -> Result<EvalResult> {
    ensure_finite(nu, "degree nu")?;
    if nonpositive_integer_near(nu + 0.5).is_some() {
        return Err(Error::Pole { location: nu + 0.5 });
    }
    if nonpositive_integer_near(nu + 1.0).is_some() {
        return Err(Error::Pole { location: nu + 1.0 });
    }
    let power = one_minus_x2_pow(x.x, 0.5 * nu);
    let core = cap_core_integral(nu, x)?;
    let first = -two_pow(nu - 1.0) * SQRT_PI * gamma(nu + 0.5)? * sin_pi(nu) * power;
    let int_factor = two_pow(nu) * gamma(nu + 1.0)? * cos_pi(nu) * power;
    let value = first + int_factor * core.value;
    Ok(EvalResult {
        value,
        abs_err: core.err_estimate * int_factor.norm()
            + 8.0 * f64::EPSILON * (first.norm() + (int_factor * core.value).norm()),
        terms_used: core.evaluations,
        converged: true,
    })
}

/// `int_0^1 (1-w^2)^{nu-1} dw = sqrt(pi) Gamma(nu) / (2 Gamma(nu+1/2))`
/// for `Re nu > 0`.
pub fn definite_integral_cap(nu: Complex64) -> Result<Complex64> {
    ensure_finite(nu, "cap nu")?;
    if nu.re <= 0.0 {
        return Err(Error::domain(format!(
            "cap integral requires Re nu > 0, got {:.6}",
            nu.re
        )));
    }
    Ok(SQRT_PI * gamma(nu)? / (2.0 * gamma(nu + 0.5)?))
}

/// Companion quadrature for [`definite_integral_cap`], parameterized by
/// `w = 1 - tau` so the endpoint singularity sits at `tau = 0`.
pub fn cap_integral_quadrature(nu: Complex64) -> Result<QuadratureResult> {
    ensure_finite(nu, "cap nu")?;
    if nu.re <= 0.0 {
        return Err(Error::domain(format!(
            "cap integral requires Re nu > 0, got {:.6}",
            nu.re
        )));
    }
    let expo = nu - 1.0;
    let f = move |tau: f64| (expo * (tau.ln() + (2.0 - tau).ln())).exp();
    let spec = QuadratureSpec {
        integrand: &f,
        interval: Interval::Finite { a: 0.0, b: 1.0 },
        singular_exponent_at_a: Some(expo),
        singular_exponent_at_b: None,
        ..QuadratureSpec::new(&f, Interval::Finite { a: 0.0, b: 1.0 })
    };
    integrate(&spec)
}
