//! Bessel functions of the first kind for real order nu >= -1/2.
//!
//! Evaluation strategy:
//! * `x <= max(14, nu)` — ascending power series, accumulated in
//!   double-double so the alternating-sum cancellation near `x ~ 2 nu`
//!   cannot eat into the 1e-12 accuracy contract;
//! * `x > max(14, nu)` — phase/modulus (Hankel) asymptotic expansion when
//!   its terms reach ~1e-15 before diverging (always the case for
//!   nu < 2, and for larger orders once x is well past nu^2/... the
//!   convergence test is done at run time);
//! * otherwise — downward three-term recurrence in the order, normalized
//!   against a Hankel evaluation at the fractional order mu in [0, 2).
//!   This covers the "x just above the turning point" corner where neither
//!   of the first two regimes reaches tolerance.
//!
//! Phases `x - (nu/2 + 1/4) pi` are reduced modulo 2 pi in double-double so
//! zeros of order ~1e4 still come out to near machine accuracy.

use crate::dd::Dd;
use crate::specfun::gamma::ln_gamma;

/// Series/asymptotic switch point in `x` (below: power series).
const SERIES_X_MAX: f64 = 14.0;

/// J_nu(x) for nu >= -1/2, x >= 0. Caller validates the domain.
pub(crate) fn bessel_j_raw(nu: f64, x: f64) -> f64 {
    debug_assert!(nu >= -0.5 && x >= 0.0);
    if x == 0.0 {
        return if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
    }
    if x <= SERIES_X_MAX.max(nu) {
        return series_j(nu, x);
    }
    // x > max(14, nu) from here on.
    if nu < 2.0 {
        // Terms of the Hankel expansion for orders below 2 reach ~1e-13
        // of the modulus by x = 14, and fall off quickly beyond.
        return hankel_j(nu, x).value;
    }
    let direct = hankel_j(nu, x);
    if direct.converged {
        return direct.value;
    }
    miller_j(nu, x)
}

/// Ascending power series in double-double arithmetic.
///
/// J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_m (-q)^m / (m! (nu+1)..(nu+m)),
/// q = x^2/4. The prefactor is computed through logs so large orders do
/// not overflow the intermediate Gamma.
fn series_j(nu: f64, x: f64) -> f64 {
    let q = Dd::from_f64(x).mul_f64(0.5);
    let q2 = q.mul(q); // (x/2)^2
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    for m in 1..400 {
        let denom = (m as f64) * (nu + m as f64);
        term = term.mul(q2).div_f64(denom).neg();
        sum = sum.add(term);
        if term.abs() < 1e-28 * sum.abs().max(1e-300) {
            break;
        }
    }
    // prefactor (x/2)^nu / Gamma(nu+1)
    let half_x = 0.5 * x;
    let pref = if nu == 0.0 {
        1.0
    } else {
        (nu * half_x.ln() - ln_gamma(nu + 1.0).expect("nu + 1 > 0")).exp()
    };
    pref * sum.to_f64()
}

struct HankelEval {
    value: f64,
    converged: bool,
}

/// Phase/modulus asymptotic expansion,
/// J_nu(x) ~ sqrt(2/(pi x)) [ P cos(chi) - Q sin(chi) ],
/// chi = x - (nu/2 + 1/4) pi. For half-integer orders the P/Q series
/// terminate and the result is exact up to rounding.
fn hankel_j(nu: f64, x: f64) -> HankelEval {
    let four_nu2 = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term: f64 = 1.0;
    let mut prev_abs = f64::INFINITY;
    let mut converged = false;
    for k in 1..60 {
        let twok_m1 = (2 * k - 1) as f64;
        term *= (four_nu2 - twok_m1 * twok_m1) / (k as f64 * 8.0 * x);
        if term == 0.0 {
            converged = true; // terminating (half-integer) case
            break;
        }
        if term.abs() >= prev_abs {
            // asymptotic tail started to diverge; stop at the best term
            converged = prev_abs < 1e-15;
            break;
        }
        prev_abs = term.abs();
        // k = 1,2,3,4,... contributes -Q, -P, +Q, +P, ...
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            converged = true;
            break;
        }
    }
    // chi = x - (nu/2 + 1/4) pi, reduced mod 2 pi in double-double
    let c = Dd::from_f64(nu)
        .mul_f64(0.5)
        .add(Dd::from_f64(0.25))
        .mul(Dd::PI);
    let chi = Dd::from_f64(x).sub(c);
    let k = (chi.to_f64() / Dd::TWO_PI.hi).round();
    let chi_red = chi.sub(Dd::TWO_PI.mul_f64(k)).to_f64();
    let amp = (2.0 / (std::f64::consts::PI * x)).sqrt();
    HankelEval {
        value: amp * (chi_red.cos() * p - chi_red.sin() * q),
        converged,
    }
}

/// Downward recurrence in the order from a start index deep in the decay
/// zone, normalized against a Hankel evaluation at the fractional order.
fn miller_j(nu: f64, x: f64) -> f64 {
    let mu = nu - nu.floor(); // in [0, 1)
    let top = nu.max(x);
    // Start far enough above max(nu, x) that the seeded component of the
    // dominant solution is damped below ~1e-18 by the time nu is reached.
    let buffer = 16.0 * top.cbrt() + 20.0;
    let steps = (top + buffer - mu).ceil() as i64;
    let nu_offset = (nu - mu).round() as i64;
    let mut f_above = 0.0_f64; // order mu + m + 1
    let mut f_cur = 1e-150_f64; // order mu + m
    let mut f_nu = 0.0_f64;
    let mut f_mu0 = 0.0_f64;
    let mut f_mu1 = 0.0_f64;
    for m in (0..=steps).rev() {
        if m == nu_offset {
            f_nu = f_cur;
        }
        if m == 1 {
            f_mu1 = f_cur;
        }
        if m == 0 {
            f_mu0 = f_cur;
            break;
        }
        let order = mu + m as f64;
        let f_below = (2.0 * order / x) * f_cur - f_above;
        f_above = f_cur;
        f_cur = f_below;
        if f_cur.abs() > 1e250 {
            let scale = 1e-250;
            f_above *= scale;
            f_cur *= scale;
            f_nu *= scale;
            f_mu1 *= scale;
        }
    }
    // Normalize against whichever anchor sits further from a zero of J.
    let j_mu0 = hankel_j(mu, x).value;
    let j_mu1 = hankel_j(mu + 1.0, x).value;
    if j_mu0.abs() >= j_mu1.abs() {
        f_nu * (j_mu0 / f_mu0)
    } else {
        f_nu * (j_mu1 / f_mu1)
    }
}

/// d/dx J_nu(x) via the recurrence J'_nu = nu/x J_nu - J_{nu+1}.
pub(crate) fn bessel_j_prime_raw(nu: f64, x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if nu >= 0.5 {
        // equivalent two-sided form, matching the zero-finder's contract
        0.5 * (bessel_j_raw(nu - 1.0, x) - bessel_j_raw(nu + 1.0, x))
    } else {
        (nu / x) * bessel_j_raw(nu, x) - bessel_j_raw(nu + 1.0, x)
    }
}
