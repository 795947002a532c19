//! Special-function kernel: Bessel J, its positive zeros, the Gamma
//! function, and the geometric constants built from them.

mod bessel;
mod gamma;
mod zeros;

pub(crate) use bessel::{bessel_j_prime_raw, bessel_j_raw};
pub(crate) use zeros::bessel_zero_raw;

use crate::bounds::Dim;
use crate::error::{Error, Result};

pub use gamma::{gamma, ln_gamma};

/// Bessel order nu >= -1/2. Orders that actually occur are n/2 - 1 and
/// n/2 for the space dimension n, raised by nonnegative integers for
/// ball spectra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order(f64);

impl Order {
    pub fn new(value: f64) -> Result<Order> {
        if !value.is_finite() || value < -0.5 {
            return Err(Error::Domain(format!(
                "Bessel order must be >= -1/2, got {value}"
            )));
        }
        Ok(Order(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Index of a positive Bessel zero (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroIndex(u32);

impl ZeroIndex {
    pub fn new(p: u32) -> Result<ZeroIndex> {
        if p == 0 {
            return Err(Error::InvalidParameter(
                "zero index p must be >= 1".into(),
            ));
        }
        Ok(ZeroIndex(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// J_nu(x) for x >= 0.
///
/// Absolute error <= 1e-12 for 0 <= x <= 100 and 0 <= nu <= 10; the
/// half-integer orders agree with their closed trigonometric forms to
/// 1e-13 on [0.1, 60].
pub fn bessel_j(order: Order, x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "bessel_j requires x >= 0, got {x}"
        )));
    }
    Ok(bessel_j_raw(order.value(), x))
}

/// The p-th positive zero j_{nu,p} of J_nu, to absolute accuracy ~1e-12.
///
/// Root search is guaranteed not to fail for nu <= 50, p <= 1e4; outside
/// that envelope a bracketing failure is reported as an error instead of
/// returning a wrong zero.
pub fn bessel_zero(order: Order, index: ZeroIndex) -> Result<f64> {
    bessel_zero_raw(order.value(), index.get())
}

/// Volume C_n of the unit n-ball, pi^(n/2) / Gamma(n/2 + 1).
pub fn unit_ball_volume(n: Dim) -> f64 {
    let half = n.as_f64() / 2.0;
    std::f64::consts::PI.powf(half) / gamma::gamma(half + 1.0).expect("n/2 + 1 > 0")
}

/// Semiclassical constant L_n^cl = C_n / (2 pi)^n.
pub fn semiclassical_constant(n: Dim) -> f64 {
    unit_ball_volume(n) / (2.0 * std::f64::consts::PI).powi(n.get() as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn order_and_index_validation() {
        assert!(Order::new(-0.5).is_ok());
        assert!(Order::new(-0.51).is_err());
        assert!(Order::new(f64::NAN).is_err());
        assert!(ZeroIndex::new(0).is_err());
        assert!(ZeroIndex::new(1).is_ok());
    }

    #[test]
    fn bessel_j_rejects_negative_argument() {
        let nu = Order::new(0.0).unwrap();
        assert!(bessel_j(nu, -1.0).is_err());
    }

    #[test]
    fn unit_ball_volumes() {
        assert!((unit_ball_volume(Dim::new(2).unwrap()) - PI).abs() < 1e-14);
        assert!((unit_ball_volume(Dim::new(3).unwrap()) - 4.0 * PI / 3.0).abs() < 1e-13);
        // C_4 = pi^2 / 2
        assert!((unit_ball_volume(Dim::new(4).unwrap()) - PI * PI / 2.0).abs() < 1e-13);
    }

    #[test]
    fn ball_volume_recurrence() {
        // C_n = C_{n-2} * 2 pi / n, relative 1e-13, n = 4..12
        for n in 4..=12u32 {
            let cn = unit_ball_volume(Dim::new(n).unwrap());
            let cm = unit_ball_volume(Dim::new(n - 2).unwrap());
            let rhs = cm * 2.0 * PI / n as f64;
            assert!(((cn - rhs) / cn).abs() <= 1e-13, "recurrence fails at n={n}");
        }
    }

    #[test]
    fn semiclassical_values() {
        // L_2^cl = 1/(4 pi)
        let l2 = semiclassical_constant(Dim::new(2).unwrap());
        assert!((l2 - 1.0 / (4.0 * PI)).abs() < 1e-15);
        // L_4^cl = (pi^2/2)/(2 pi)^4
        let l4 = semiclassical_constant(Dim::new(4).unwrap());
        assert!((l4 - (PI * PI / 2.0) / (2.0 * PI).powi(4)).abs() < 1e-15);
        assert!((l4 - 0.0031664).abs() < 1e-7);
    }

    #[test]
    fn safarov_coefficient_from_table() {
        // (2/(n+2)) e^{-1/(4 pi)} L_2^cl = 0.036745 (six printed digits)
        let l2 = semiclassical_constant(Dim::new(2).unwrap());
        let coeff = 0.5 * (-1.0 / (4.0 * PI)).exp() * l2;
        assert!((coeff - 0.036745).abs() < 5e-7);
    }
}
