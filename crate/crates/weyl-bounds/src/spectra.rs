//! Exact eigenvalue oracles for boxes and balls.
//!
//! Box spectra come from the separable formula pi^2 sum (m_i/a_i)^2
//! (Dirichlet: m_i >= 1, Neumann: m_i >= 0); ball spectra from squared
//! Bessel zeros j_{n/2-1+l,p}^2 / r^2 with the spherical-harmonic
//! multiplicities. Every spectrum carries a completeness cutoff: all
//! eigenvalues at or below the cutoff are guaranteed present, which is the
//! property the inequality audits rely on.

use crate::bounds::Dim;
use crate::error::{Error, Result};
use crate::specfun;

/// Default cap on how many eigenvalues an enumeration may produce.
pub const DEFAULT_EIGENVALUE_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Dirichlet,
    Neumann,
}

impl std::fmt::Display for Boundary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Boundary::Dirichlet => f.write_str("dirichlet"),
            Boundary::Neumann => f.write_str("neumann"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DomainKind {
    Box { sides: Vec<f64> },
    Ball { dim: Dim, radius: f64 },
}

/// Domain description for the exact-spectrum oracles.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainSpec {
    pub kind: DomainKind,
    pub boundary: Boundary,
}

impl DomainSpec {
    pub fn bx(sides: Vec<f64>, boundary: Boundary) -> Result<DomainSpec> {
        if sides.len() < 2 {
            return Err(Error::Dimension(sides.len() as i64));
        }
        if sides.iter().any(|s| !(*s > 0.0) || !s.is_finite()) {
            return Err(Error::InvalidParameter(
                "box sides must all be positive and finite".into(),
            ));
        }
        Ok(DomainSpec {
            kind: DomainKind::Box { sides },
            boundary,
        })
    }

    pub fn ball(dim: Dim, radius: f64, boundary: Boundary) -> Result<DomainSpec> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "ball radius must be positive, got {radius}"
            )));
        }
        if boundary == Boundary::Neumann {
            return Err(Error::InvalidParameter(
                "Neumann ball spectra are not supported".into(),
            ));
        }
        Ok(DomainSpec {
            kind: DomainKind::Ball { dim, radius },
            boundary,
        })
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            DomainKind::Box { sides } => sides.len(),
            DomainKind::Ball { dim, .. } => dim.get() as usize,
        }
    }

    pub fn volume(&self) -> f64 {
        match &self.kind {
            DomainKind::Box { sides } => sides.iter().product(),
            DomainKind::Ball { dim, radius } => {
                specfun::unit_ball_volume(*dim) * radius.powi(dim.get() as i32)
            }
        }
    }
}

impl std::fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            DomainKind::Box { sides } => {
                write!(f, "box(")?;
                for (i, s) in sides.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
            DomainKind::Ball { dim, radius } => write!(f, "ball(n={dim},r={radius})"),
        }
    }
}

/// Sorted eigenvalue list with multiplicity expanded inline, complete up to
/// `cutoff`.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    cutoff: f64,
    volume: f64,
    domain: DomainSpec,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }

    pub fn domain(&self) -> &DomainSpec {
        &self.domain
    }

    /// k-th eigenvalue, 1-based, counting multiplicity.
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.eigenvalues.len() {
            return Err(Error::InsufficientSpectrum {
                len: self.eigenvalues.len(),
                needed: k,
            });
        }
        Ok(self.eigenvalues[k - 1])
    }

    /// N(lam): number of eigenvalues <= lam, counting multiplicity.
    pub fn counting_function(&self, lam: f64) -> Result<usize> {
        if lam > self.cutoff {
            return Err(Error::BeyondCutoff {
                lam,
                cutoff: self.cutoff,
            });
        }
        Ok(self.eigenvalues.partition_point(|&e| e <= lam))
    }

    /// Sum of the k smallest eigenvalues, counting multiplicity.
    pub fn partial_sum(&self, k: usize) -> Result<f64> {
        if k == 0 {
            return Err(Error::InvalidParameter("partial sum needs k >= 1".into()));
        }
        if k > self.eigenvalues.len() {
            return Err(Error::InsufficientSpectrum {
                len: self.eigenvalues.len(),
                needed: k,
            });
        }
        Ok(self.eigenvalues[..k].iter().sum())
    }

    /// First Riesz mean sum_j (lam - lambda_j)_+, equal to the step
    /// integral of N over [0, lam].
    pub fn riesz_mean_1(&self, lam: f64) -> Result<f64> {
        if lam > self.cutoff {
            return Err(Error::BeyondCutoff {
                lam,
                cutoff: self.cutoff,
            });
        }
        let sum: f64 = self
            .eigenvalues
            .iter()
            .take_while(|&&e| e < lam)
            .map(|&e| lam - e)
            .sum();
        debug_assert!({
            let quad = self.step_integral_of_counting(lam);
            (sum - quad).abs() <= 1e-10 * sum.abs().max(1.0)
        });
        Ok(sum)
    }

    /// Exact step quadrature of N over [0, lam]; the independent route to
    /// the first Riesz mean.
    pub fn step_integral_of_counting(&self, lam: f64) -> f64 {
        let mut acc = 0.0;
        let mut prev = 0.0;
        let mut count = 0usize;
        for &e in &self.eigenvalues {
            if e >= lam {
                break;
            }
            acc += count as f64 * (e - prev);
            prev = e;
            count += 1;
        }
        acc + count as f64 * (lam - prev)
    }

    /// CSV export: one `eigenvalue` column, preceded by a comment header
    /// recording domain, boundary, cutoff, and volume.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# domain={}, boundary={}, cutoff={}, volume={}\n",
            self.domain,
            self.domain.boundary,
            fmt_g12(self.cutoff),
            fmt_g12(self.volume)
        ));
        out.push_str("eigenvalue\n");
        for &e in &self.eigenvalues {
            out.push_str(&fmt_g12(e));
            out.push('\n');
        }
        out
    }
}

/// Fixed 12-significant-digit format used by every CSV surface.
pub(crate) fn fmt_g12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Multiplicity of the l-th spherical-harmonic channel in dimension n:
/// binom(n+l-1, l) - binom(n+l-3, l-2), with binomials of negative upper
/// entry read as zero.
pub fn spherical_multiplicity(dim: Dim, l: u32) -> u64 {
    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }
    let n = dim.get() as u64;
    let l = l as u64;
    if l == 0 {
        return 1;
    }
    if l == 1 {
        return n;
    }
    binom(n + l - 1, l) - binom(n + l - 3, l - 2)
}

/// At least `count` smallest eigenvalues of a rectangular box.
pub fn box_spectrum(sides: &[f64], boundary: Boundary, count: usize) -> Result<Spectrum> {
    box_spectrum_with_budget(sides, boundary, count, DEFAULT_EIGENVALUE_BUDGET)
}

pub fn box_spectrum_with_budget(
    sides: &[f64],
    boundary: Boundary,
    count: usize,
    budget: usize,
) -> Result<Spectrum> {
    let domain = DomainSpec::bx(sides.to_vec(), boundary)?;
    if count == 0 {
        return Err(Error::InvalidParameter("count must be >= 1".into()));
    }
    if count > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    let n = sides.len();
    let volume: f64 = sides.iter().product();
    let l_cl = specfun::semiclassical_constant(Dim::new(n as u32)?);
    // Weyl-law guess for the level holding `count` eigenvalues, with
    // headroom because Dirichlet counting runs below the Weyl term.
    let lambda1 =
        std::f64::consts::PI.powi(2) * sides.iter().map(|a| 1.0 / (a * a)).sum::<f64>();
    let mut cutoff = (2.0 * count as f64 / (l_cl * volume))
        .powf(2.0 / n as f64)
        .max(2.0 * lambda1);
    for _ in 0..64 {
        let mut eigenvalues = Vec::new();
        enumerate_box(sides, boundary, cutoff, 0, 0.0, &mut eigenvalues, budget)?;
        if eigenvalues.len() >= count {
            eigenvalues.sort_by(f64::total_cmp);
            return Ok(Spectrum {
                eigenvalues,
                cutoff,
                volume,
                domain,
            });
        }
        let got = eigenvalues.len().max(1) as f64;
        cutoff *= ((count as f64 / got).powf(2.0 / n as f64) * 1.3).max(1.3);
    }
    Err(Error::BudgetExceeded { budget })
}

/// Depth-first walk of the integer lattice inside the enumeration
/// ellipsoid sum (pi m_i / a_i)^2 <= cutoff.
fn enumerate_box(
    sides: &[f64],
    boundary: Boundary,
    cutoff: f64,
    depth: usize,
    partial: f64,
    out: &mut Vec<f64>,
    budget: usize,
) -> Result<()> {
    if depth == sides.len() {
        if out.len() >= budget {
            return Err(Error::BudgetExceeded { budget });
        }
        out.push(partial);
        return Ok(());
    }
    let pi = std::f64::consts::PI;
    let a = sides[depth];
    let mut m = match boundary {
        Boundary::Dirichlet => 1u64,
        Boundary::Neumann => 0u64,
    };
    loop {
        let term = (pi * m as f64 / a).powi(2);
        if partial + term > cutoff {
            break;
        }
        enumerate_box(sides, boundary, cutoff, depth + 1, partial + term, out, budget)?;
        m += 1;
    }
    Ok(())
}

/// At least `count` smallest Dirichlet eigenvalues of an n-ball.
pub fn ball_spectrum(dim: Dim, radius: f64, count: usize) -> Result<Spectrum> {
    ball_spectrum_with_budget(dim, radius, count, DEFAULT_EIGENVALUE_BUDGET)
}

pub fn ball_spectrum_with_budget(
    dim: Dim,
    radius: f64,
    count: usize,
    budget: usize,
) -> Result<Spectrum> {
    let domain = DomainSpec::ball(dim, radius, Boundary::Dirichlet)?;
    if count == 0 {
        return Err(Error::InvalidParameter("count must be >= 1".into()));
    }
    if count > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    let n = dim.as_f64();
    let volume = domain.volume();
    let l_cl = specfun::semiclassical_constant(dim);
    let nu0 = n / 2.0 - 1.0;
    let lambda1 = (specfun::bessel_zero_raw(nu0, 1)? / radius).powi(2);
    let mut cutoff = (2.0 * count as f64 / (l_cl * volume))
        .powf(2.0 / n)
        .max(2.0 * lambda1);
    for _ in 0..64 {
        let x_cut = cutoff.sqrt() * radius;
        let mut eigenvalues = Vec::new();
        for l in 0u32.. {
            let nu = nu0 + l as f64;
            // j_{nu,1} increases with nu, so the first zero already above
            // the window closes every higher channel as well.
            let first = specfun::bessel_zero_raw(nu, 1)?;
            if first > x_cut {
                break;
            }
            let mult = spherical_multiplicity(dim, l) as usize;
            for p in 1u32.. {
                let j = if p == 1 {
                    first
                } else {
                    specfun::bessel_zero_raw(nu, p)?
                };
                if j > x_cut {
                    break;
                }
                if eigenvalues.len() + mult > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                let lam = (j / radius).powi(2);
                eigenvalues.extend(std::iter::repeat(lam).take(mult));
            }
        }
        if eigenvalues.len() >= count {
            eigenvalues.sort_by(f64::total_cmp);
            return Ok(Spectrum {
                eigenvalues,
                cutoff,
                volume,
                domain,
            });
        }
        let got = eigenvalues.len().max(1) as f64;
        cutoff *= ((count as f64 / got).powf(2.0 / n) * 1.3).max(1.3);
    }
    Err(Error::BudgetExceeded { budget })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn dim(n: u32) -> Dim {
        Dim::new(n).unwrap()
    }

    /// Independent oracle for the unit square: direct double loop over the
    /// separable formula, no lattice-walk code shared with production.
    fn unit_square_oracle(count: usize) -> Vec<f64> {
        let mut v = Vec::new();
        for p in 1..=60u32 {
            for q in 1..=60u32 {
                v.push(PI * PI * ((p * p + q * q) as f64));
            }
        }
        v.sort_by(f64::total_cmp);
        v.truncate(count);
        v
    }

    #[test]
    fn unit_square_matches_oracle() {
        let s = box_spectrum(&[1.0, 1.0], Boundary::Dirichlet, 50).unwrap();
        let oracle = unit_square_oracle(50);
        for (i, (&got, want)) in s.eigenvalues().iter().zip(oracle).take(50).enumerate() {
            assert!(
                ((got - want) / want).abs() < 1e-14,
                "mismatch at k={}: {got} vs {want}",
                i + 1
            );
        }
        assert!((s.eigenvalue(1).unwrap() - 2.0 * PI * PI).abs() < 1e-12);
        assert!((s.eigenvalue(2).unwrap() - 5.0 * PI * PI).abs() < 1e-12);
        assert!((s.eigenvalue(3).unwrap() - 5.0 * PI * PI).abs() < 1e-12);
    }

    #[test]
    fn one_by_two_box_first_levels() {
        let s = box_spectrum(&[1.0, 2.0], Boundary::Dirichlet, 2).unwrap();
        assert!((s.eigenvalue(1).unwrap() - 5.0 * PI * PI / 4.0).abs() < 1e-12);
        assert!((s.eigenvalue(2).unwrap() - 2.0 * PI * PI).abs() < 1e-12);
    }

    #[test]
    fn neumann_starts_at_zero() {
        let s = box_spectrum(&[1.0, 1.0], Boundary::Neumann, 5).unwrap();
        assert_eq!(s.eigenvalue(1).unwrap(), 0.0);
        assert!((s.eigenvalue(2).unwrap() - PI * PI).abs() < 1e-12);
        assert!((s.eigenvalue(3).unwrap() - PI * PI).abs() < 1e-12);
    }

    #[test]
    fn counting_function_unit_square() {
        let s = box_spectrum(&[1.0, 1.0], Boundary::Dirichlet, 20).unwrap();
        assert_eq!(s.counting_function(2.0 * PI * PI).unwrap(), 1);
        assert_eq!(s.counting_function(5.0 * PI * PI).unwrap(), 3);
        assert_eq!(s.counting_function(1.0).unwrap(), 0);
        assert!(s.counting_function(s.cutoff() * 1.01).is_err());
    }

    #[test]
    fn partial_sums_unit_square() {
        let s = box_spectrum(&[1.0, 1.0], Boundary::Dirichlet, 5).unwrap();
        assert!((s.partial_sum(1).unwrap() - 2.0 * PI * PI).abs() < 1e-12);
        assert!((s.partial_sum(3).unwrap() - 12.0 * PI * PI).abs() < 1e-11);
        assert!(s.partial_sum(0).is_err());
    }

    #[test]
    fn riesz_mean_closed_forms() {
        let s = box_spectrum(&[1.0, 1.0], Boundary::Dirichlet, 20).unwrap();
        assert!((s.riesz_mean_1(5.0 * PI * PI).unwrap() - 3.0 * PI * PI).abs() < 1e-10);
        assert!((s.riesz_mean_1(6.0 * PI * PI).unwrap() - 6.0 * PI * PI).abs() < 1e-10);
        assert_eq!(s.riesz_mean_1(1.0).unwrap(), 0.0);
    }

    #[test]
    fn ball_spectra_reference_levels() {
        // disk: lambda_1 = j_{0,1}^2
        let d = ball_spectrum(dim(2), 1.0, 1).unwrap();
        assert!((d.eigenvalue(1).unwrap() - 5.78318596294678).abs() < 1e-9);
        // 3-ball: lambda_1 = pi^2 (j_{1/2,1} = pi), lambda_2 = j_{3/2,1}^2
        // with multiplicity 3
        let b = ball_spectrum(dim(3), 1.0, 5).unwrap();
        assert!((b.eigenvalue(1).unwrap() - PI * PI).abs() < 1e-10);
        let j32 = 4.493409457909064f64;
        for k in 2..=4 {
            assert!(
                (b.eigenvalue(k).unwrap() - j32 * j32).abs() < 1e-9,
                "lambda_{k} should be j_(3/2,1)^2"
            );
        }
        assert!(b.eigenvalue(5).unwrap() > j32 * j32 + 1e-6);
    }

    #[test]
    fn ball_scaling_in_radius() {
        let unit = ball_spectrum(dim(2), 1.0, 30).unwrap();
        let double = ball_spectrum(dim(2), 2.0, 30).unwrap();
        for k in 1..=30 {
            let a = unit.eigenvalue(k).unwrap();
            let b = double.eigenvalue(k).unwrap();
            assert!(
                ((a / 4.0 - b) / b).abs() < 1e-12,
                "radius scaling fails at k={k}"
            );
        }
        assert!((double.eigenvalue(1).unwrap() - 1.44580).abs() < 1e-4);
    }

    #[test]
    fn spherical_multiplicities() {
        assert_eq!(spherical_multiplicity(dim(2), 0), 1);
        assert_eq!(spherical_multiplicity(dim(2), 3), 2);
        assert_eq!(spherical_multiplicity(dim(3), 2), 5);
        assert_eq!(spherical_multiplicity(dim(3), 5), 11);
        assert_eq!(spherical_multiplicity(dim(4), 2), 9);
        for l in 0..6 {
            assert_eq!(spherical_multiplicity(dim(3), l), 2 * l as u64 + 1);
        }
    }

    #[test]
    fn weyl_law_sanity_unit_square() {
        // N(lambda) / (L_2^cl lambda) -> 1 within 5% at lambda = 1e4
        let lam = 1.0e4;
        let l2 = 1.0 / (4.0 * PI);
        let need = (1.1 * l2 * lam) as usize;
        let s = box_spectrum(&[1.0, 1.0], Boundary::Dirichlet, need).unwrap();
        assert!(s.cutoff() >= lam);
        let n = s.counting_function(lam).unwrap() as f64;
        let ratio = n / (l2 * lam);
        assert!((ratio - 1.0).abs() < 0.05, "Weyl ratio {ratio}");
    }

    #[test]
    fn domain_monotonicity_square_vs_disk() {
        // lambda_1(unit square) vs lambda_1(disk of the same area):
        // the disk of area 1 has radius 1/sqrt(pi) and the smaller
        // fundamental tone, by Faber-Krahn.
        let square = box_spectrum(&[1.0, 1.0], Boundary::Dirichlet, 1).unwrap();
        let disk = ball_spectrum(dim(2), (1.0 / PI).sqrt(), 1).unwrap();
        assert!(disk.eigenvalue(1).unwrap() < square.eigenvalue(1).unwrap());
        // j_{0,1}^2 pi = 18.168... < 2 pi^2 = 19.739...
        assert!((disk.eigenvalue(1).unwrap() - 5.78318596294678 * PI).abs() < 1e-8);
    }

    #[test]
    fn friedlander_on_boxes() {
        // mu_{k+1} <= lambda_k for k = 1..500 (empirical two-spectrum check)
        for sides in [vec![1.0, 1.0], vec![1.0, 1.0, 1.0]] {
            let d = box_spectrum(&sides, Boundary::Dirichlet, 501).unwrap();
            let n = box_spectrum(&sides, Boundary::Neumann, 501).unwrap();
            for k in 1..=500 {
                assert!(
                    n.eigenvalue(k + 1).unwrap() <= d.eigenvalue(k).unwrap() + 1e-9,
                    "Friedlander fails at k={k} on {sides:?}"
                );
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let r = box_spectrum_with_budget(&[1.0, 1.0], Boundary::Dirichlet, 100, 50);
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
        let r = ball_spectrum_with_budget(dim(2), 1.0, 100, 50);
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn rejects_bad_domains() {
        assert!(DomainSpec::bx(vec![1.0], Boundary::Dirichlet).is_err());
        assert!(DomainSpec::bx(vec![1.0, -1.0], Boundary::Dirichlet).is_err());
        assert!(DomainSpec::ball(dim(2), 0.0, Boundary::Dirichlet).is_err());
        assert!(DomainSpec::ball(dim(2), 1.0, Boundary::Neumann).is_err());
    }

    #[test]
    fn csv_header_and_shape() {
        let s = box_spectrum(&[1.0, 2.0], Boundary::Dirichlet, 3).unwrap();
        let csv = s.to_csv();
        let mut lines = csv.lines();
        let header = lines.next().unwrap();
        assert!(header.starts_with("# domain=box(1x2), boundary=dirichlet, cutoff="));
        assert_eq!(lines.next().unwrap(), "eigenvalue");
        let first: f64 = lines.next().unwrap().parse().unwrap();
        assert!((first - 5.0 * PI * PI / 4.0).abs() < 1e-9);
    }
}
