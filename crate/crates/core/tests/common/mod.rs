//! Reference oracles for the acceptance suite, independent of the library's
//! evaluation paths.

/// `int_1^inf (w^2-1)^{nu-1} dw` for real `0 < nu < 1/2`, by the `w = cosh t`
/// substitution: the integral becomes `int_0^inf sinh(t)^{2nu-1} dt`. The
/// smooth head is summed by Simpson after the power substitution
/// `t = u^{1/(2nu)}` (which removes the `t^{2nu-1}` endpoint singularity
/// exactly), and the tail beyond `t = T` is integrated term by term from the
/// binomial expansion of `(1 - e^{-2t})^{2nu-1}`, which converges to machine
/// precision in a few terms.
pub fn wing_oracle_cosh(nu: f64) -> f64 {
    assert!(nu > 0.0 && nu < 0.5);
    let p = 2.0 * nu - 1.0;
    let t_max = 20.0f64;
    let upper = t_max.powf(2.0 * nu);
    let m = 200_000usize;
    let step = upper / m as f64;
    let g = |u: f64| -> f64 {
        if u == 0.0 {
            return 1.0 / (2.0 * nu);
        }
        let t = u.powf(1.0 / (2.0 * nu));
        (t.sinh() / t).powf(p) / (2.0 * nu)
    };
    let mut acc = g(0.0) + g(upper);
    for k in 1..m {
        acc += if k % 2 == 1 { 4.0 } else { 2.0 } * g(k as f64 * step);
    }
    let head = acc * step / 3.0;

    let mut tail = 0.0;
    let mut coef = 1.0; // binom(p, j), starting at j = 0
    for j in 0..8 {
        let jf = j as f64;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        tail += sign * coef * ((p - 2.0 * jf) * t_max).exp() / (2.0 * jf - p);
        coef *= (p - jf) / (jf + 1.0);
    }
    tail *= 2.0f64.powf(-p);
    head + tail
}

/// `int_0^1 (1-w^2)^{nu-1} dw` for real `nu > 0`: the substitutions
/// `w = 1 - tau^2`, `tau = sigma^{1/(2nu)}` give
/// `(1/nu) int_0^1 (2 - sigma^{1/nu})^{nu-1} dsigma`, smooth on `[0, 1]`.
pub fn cap_oracle_power_sub(nu: f64) -> f64 {
    assert!(nu > 0.0);
    let m = 20_000usize;
    let step = 1.0 / m as f64;
    let g = |s: f64| (2.0 - s.powf(1.0 / nu)).powf(nu - 1.0);
    let mut acc = g(0.0) + g(1.0);
    for k in 1..m {
        acc += if k % 2 == 1 { 4.0 } else { 2.0 } * g(k as f64 * step);
    }
    acc * step / 3.0 / nu
}
