//! Positive zeros j_{nu,p} of the Bessel function J_nu.
//!
//! Initial guesses come from the McMahon large-argument expansion (good
//! once p is not small compared to nu) or the Olver large-order expansion
//! through Airy-function zeros (good for the first few zeros of a large
//! order). A safeguarded Newton iteration polishes the guess; if Newton
//! misbehaves, the zero is re-bracketed by a sign scan and bisected, so a
//! failure is reported rather than silently returning a wrong zero.

use crate::error::{Error, Result};
use crate::specfun::bessel::{bessel_j_prime_raw, bessel_j_raw};

/// Negatives of the first Airy zeros a_s (Ai(a_s) = 0).
const AIRY_ZEROS: [f64; 10] = [
    2.33810741045976704,
    4.08794944413097062,
    5.52055982809555106,
    6.78670809007175899,
    7.94413358712085312,
    9.02265085334098038,
    10.0401743415580859,
    11.0085243037332628,
    11.9360155632362625,
    12.8287767528657572,
];

/// |a_s| for arbitrary s via the asymptotic expansion of Airy zeros.
fn airy_zero_abs(s: u32) -> f64 {
    if (1..=10).contains(&s) {
        return AIRY_ZEROS[(s - 1) as usize];
    }
    let t = 3.0 * std::f64::consts::PI * (4.0 * s as f64 - 1.0) / 8.0;
    let t2 = t * t;
    t.powf(2.0 / 3.0) * (1.0 + 5.0 / (48.0 * t2) - 5.0 / (36.0 * t2 * t2))
}

/// McMahon expansion for j_{nu,p}; accurate once beta >> nu^2.
fn mcmahon_guess(nu: f64, p: u32) -> f64 {
    let beta = (p as f64 + 0.5 * nu - 0.25) * std::f64::consts::PI;
    let mu = 4.0 * nu * nu;
    let b8 = 8.0 * beta;
    let b8_2 = b8 * b8;
    beta - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8_2)
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8 * b8_2 * b8_2)
        - 64.0 * (mu - 1.0)
            * (6949.0 * mu * mu * mu - 153855.0 * mu * mu + 1585743.0 * mu - 6277237.0)
            / (105.0 * b8 * b8_2 * b8_2 * b8_2)
}

/// Olver expansion for the p-th zero of a large order.
fn olver_guess(nu: f64, p: u32) -> f64 {
    let a = airy_zero_abs(p);
    let cbrt2 = 2f64.powf(1.0 / 3.0);
    nu + a / cbrt2 * nu.powf(1.0 / 3.0) + 0.3 * a * a / (cbrt2 * cbrt2) * nu.powf(-1.0 / 3.0)
}

/// Asymptotic spacing between consecutive zeros of J_nu near x.
fn local_spacing(nu: f64, x: f64) -> f64 {
    let r = nu / x;
    if r < 0.9 {
        std::f64::consts::PI / (1.0 - r * r).sqrt()
    } else {
        // near the turning point the phase derivative is small; keep the
        // step conservative instead of letting it blow up
        7.0
    }
}

pub(crate) fn bessel_zero_raw(nu: f64, p: u32) -> Result<f64> {
    debug_assert!(nu >= -0.5 && p >= 1);
    let guess = if nu <= 3.0 || (p as f64) >= 0.9 * nu {
        mcmahon_guess(nu, p)
    } else {
        olver_guess(nu, p)
    };
    // Zeros lie strictly above the turning point x = nu.
    let guess = guess.max(nu + 1e-3);

    // Safeguarded Newton: clamp each step to half the local zero spacing
    // so the iteration cannot hop to a neighboring zero.
    let mut x = guess;
    for _ in 0..60 {
        let f = bessel_j_raw(nu, x);
        let df = bessel_j_prime_raw(nu, x);
        if df == 0.0 {
            break;
        }
        let mut dx = f / df;
        let cap = 0.5 * local_spacing(nu, x);
        if dx.abs() > cap {
            dx = cap * dx.signum();
        }
        let next = (x - dx).max(nu.max(0.0) * (1.0 - 1e-12));
        if (next - x).abs() <= 1e-15 * x.abs() {
            x = next;
            // one last polish step at full precision
            let f = bessel_j_raw(nu, x);
            let df = bessel_j_prime_raw(nu, x);
            if df != 0.0 {
                x -= f / df;
            }
            return Ok(x);
        }
        x = next;
    }
    bisect_fallback(nu, p, guess)
}

/// Bracket by sign scan around the guess, then bisect. Reached only when
/// Newton stalls; reports failure explicitly if no bracket is found.
fn bisect_fallback(nu: f64, p: u32, guess: f64) -> Result<f64> {
    let step = 0.25 * local_spacing(nu, guess);
    let mut lo = guess;
    let mut hi = guess;
    let f_guess = bessel_j_raw(nu, guess);
    let mut found = false;
    for i in 1..=200 {
        let d = step * i as f64;
        let xl = (guess - d).max(nu.max(0.0) + 1e-9);
        if bessel_j_raw(nu, xl) * f_guess < 0.0 {
            lo = xl;
            hi = guess - step * (i - 1) as f64;
            found = true;
            break;
        }
        let xr = guess + d;
        if bessel_j_raw(nu, xr) * f_guess < 0.0 {
            lo = guess + step * (i - 1) as f64;
            hi = xr;
            found = true;
            break;
        }
    }
    if !found {
        return Err(Error::Convergence { nu, index: p });
    }
    let mut flo = bessel_j_raw(nu, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = bessel_j_raw(nu, mid);
        if fm == 0.0 || (hi - lo) < 1e-14 * mid {
            return Ok(mid);
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    Err(Error::Convergence { nu, index: p })
}
