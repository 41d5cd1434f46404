//! Adaptive quadrature and root bracketing shared by the beam and
//! mechanics modules.

/// Adaptive Simpson integration of `f` over `[a, b]`.
///
/// The target is a relative tolerance against the integral of |f|, so the
/// result stays accurate even when the signed integral nearly cancels.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    // coarse scan for the magnitude scale of the integrand
    let n = 128;
    let hstep = (b - a) / n as f64;
    let mut gross = 0.0;
    for i in 0..=n {
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        gross += w * f(a + i as f64 * hstep).abs();
    }
    gross *= hstep.abs();
    let abs_tol = rel_tol * gross.max(f64::MIN_POSITIVE);

    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(&f, a, b, fa, fm, fb, whole, abs_tol, 50)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        // Richardson extrapolation of the two estimates
        left + right + delta / 15.0
    } else {
        adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Bisection root refinement on a bracketing interval `[lo, hi]`
/// (f(lo) and f(hi) of opposite sign) to relative tolerance `rel_tol`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, rel_tol: f64) -> f64 {
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        return lo;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= rel_tol * mid.abs().max(f64::MIN_POSITIVE) {
            return mid;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_lo.signum() != f_mid.signum() {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_exact() {
        let v = integrate(|x| x * x, 0.0, 1.0, 1e-12);
        assert!((v - 1.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn gaussian_against_known_value() {
        // int_0^5 exp(-x^2) dx = sqrt(pi)/2 erf(5); erf(5) = 1 - 1.5e-12
        let v = integrate(|x| (-x * x).exp(), 0.0, 5.0, 1e-11);
        assert!((v - PI.sqrt() / 2.0).abs() < 1e-10);
    }

    #[test]
    fn oscillatory_with_cancellation() {
        // int_0^{20 pi} sin x dx = 0; tolerance is relative to int |sin|
        let v = integrate(f64::sin, 0.0, 20.0 * PI, 1e-10);
        assert!(v.abs() < 1e-8);
        let v2 = integrate(f64::sin, 0.0, 20.5 * PI, 1e-10);
        assert!((v2 - 1.0).abs() < 1e-8);
    }

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14);
        assert!((r - 2.0f64.sqrt()).abs() < 1e-13);
    }
}
