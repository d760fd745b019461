//! Exact spectral data for the exterior of a ball B_R in R^d.
//!
//! For alpha below the critical coupling -(d-2)/R the lowest spectral point
//! is a discrete eigenvalue -k^2 whose wavenumber solves the transcendental
//! equation -alpha R = f(k R), with f(x) = x K_{nu+1}(x)/K_nu(x) and
//! nu = (d-2)/2. The ratio f is strictly increasing from 2 nu to infinity
//! and satisfies f(x) >= x, which yields a guaranteed bisection bracket.

use crate::error::{Error, Result};
use crate::specfun::{bessel_k_ratio, bessel_k_scaled, EvalPolicy, Order};

/// Exterior-of-ball problem data: dimension, radius, coupling constant.
#[derive(Debug, Clone, Copy)]
pub struct BallProblem {
    pub d: u32,
    pub radius: f64,
    pub alpha: f64,
}

impl BallProblem {
    pub fn new(d: u32, radius: f64, alpha: f64) -> Result<BallProblem> {
        if d < 2 {
            return Err(Error::Domain(format!("dimension d = {d} must be >= 2")));
        }
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Domain(format!("radius R = {radius} must be positive")));
        }
        if !(alpha <= 0.0) {
            return Err(Error::Domain(format!("coupling alpha = {alpha} must be <= 0")));
        }
        Ok(BallProblem { d, radius, alpha })
    }

    pub fn order(&self) -> Order {
        Order::from_dimension(self.d).expect("validated dimension")
    }
}

/// Lowest spectral point of the exterior-of-ball Robin Laplacian.
#[derive(Debug, Clone, Copy)]
pub struct BallSpectrum {
    /// Bottom of the spectrum; negative iff a discrete eigenvalue exists.
    pub lambda1: f64,
    /// Wavenumber with lambda1 = -k^2 in the discrete case, 0 otherwise.
    pub k: f64,
    /// True iff lambda1 is a discrete eigenvalue below the essential spectrum.
    pub is_discrete: bool,
    /// Critical coupling -(d-2)/R of the problem.
    pub alpha_star: f64,
}

/// Critical coupling alpha_* = -(d-2)/R; zero exactly when d = 2.
pub fn critical_coupling(d: u32, radius: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::Domain(format!("critical coupling requires d >= 2, got {d}")));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::Domain(format!("radius R = {radius} must be positive")));
    }
    Ok(-((d - 2) as f64) / radius)
}

/// Bisection iteration cap; the bracket halves each step.
const MAX_BISECT: usize = 200;

/// Relative residual required of the root of f(x) = -alpha R.
const ROOT_TOL: f64 = 1e-12;

/// Lowest spectral point for the exterior of a ball.
///
/// Returns the essential-spectrum bottom (lambda1 = 0, not discrete) when
/// alpha >= alpha_*, and otherwise solves -alpha R = f(kR) by bisection on
/// the bracket (0, -alpha R].
pub fn lambda1_ball(problem: &BallProblem) -> Result<BallSpectrum> {
    let alpha_star = critical_coupling(problem.d, problem.radius)?;
    if problem.alpha >= alpha_star {
        return Ok(BallSpectrum { lambda1: 0.0, k: 0.0, is_discrete: false, alpha_star });
    }
    let policy = EvalPolicy::default();
    let order = problem.order();
    let target = -problem.alpha * problem.radius; // > 2 nu
    let scale = target.max(1.0);

    // f(x) - target < 0 near 0 (limit 2 nu < target), > 0 at x = target
    // (since f(x) > x). Bisect keeping that sign configuration.
    let mut lo = 0.0;
    let mut hi = target;
    let mut x = 0.5 * (lo + hi);
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_BISECT {
        let fx = bessel_k_ratio(order, x, &policy)?;
        residual = fx - target;
        if residual.abs() <= ROOT_TOL * scale {
            break;
        }
        if residual > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        x = 0.5 * (lo + hi);
        if hi - lo <= f64::EPSILON * x.max(f64::MIN_POSITIVE) {
            break;
        }
    }
    if residual.abs() > ROOT_TOL * scale {
        // The only legitimate escape is the logarithmic threshold regime in
        // d = 2, where the root underflows; there the eigenvalue is zero to
        // double precision.
        if hi <= 1e-10 * scale {
            let k = hi / problem.radius;
            let lambda1 = -(k * k);
            return Ok(BallSpectrum { lambda1, k, is_discrete: lambda1 < 0.0, alpha_star });
        }
        return Err(Error::Internal(format!(
            "ball root residual {residual:e} above tolerance at x = {x}"
        )));
    }
    let k = x / problem.radius;
    Ok(BallSpectrum { lambda1: -(k * k), k, is_discrete: true, alpha_star })
}

/// Normalised radial eigenfunction psi(r) = (r/R)^{-nu} K_nu(kr)/K_nu(kR),
/// psi(R) = 1. Requires a discrete eigenvalue and r >= R.
pub fn radial_eigenfunction(problem: &BallProblem, spectrum: &BallSpectrum, r: f64) -> Result<f64> {
    if !spectrum.is_discrete {
        return Err(Error::State(
            "radial eigenfunction requested at the essential-spectrum bottom".into(),
        ));
    }
    if r < problem.radius {
        return Err(Error::Domain(format!(
            "r = {r} lies inside the ball of radius {}",
            problem.radius
        )));
    }
    let policy = EvalPolicy::default();
    let order = problem.order();
    let nu = order.value();
    let k = spectrum.k;
    let num = bessel_k_scaled(order, k * r, &policy)?;
    let den = bessel_k_scaled(order, k * problem.radius, &policy)?;
    Ok((r / problem.radius).powf(-nu) * (num / den) * (-k * (r - problem.radius)).exp())
}

/// Two-term large-coupling predictor -alpha^2 - alpha (d-1) m, where m is
/// the relevant extremal mean curvature of the boundary (1/R for a ball,
/// 1/r for a disk of radius r in 2D).
pub fn asym_lambda(d: u32, mean_curv: f64, alpha: f64) -> f64 {
    -alpha * alpha - alpha * (d as f64 - 1.0) * mean_curv
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn critical_coupling_formula() {
        assert_eq!(critical_coupling(2, 7.0).unwrap(), 0.0);
        assert_eq!(critical_coupling(3, 1.0).unwrap(), -1.0);
        assert_eq!(critical_coupling(5, 2.0).unwrap(), -1.5);
        assert!(critical_coupling(1, 1.0).is_err());
        assert!(critical_coupling(3, 0.0).is_err());
    }

    #[test]
    fn at_threshold_no_discrete_eigenvalue() {
        // d = 3, R = 1: alpha_* = -1; alpha = -1 sits exactly at threshold.
        let p = BallProblem::new(3, 1.0, -1.0).unwrap();
        let s = lambda1_ball(&p).unwrap();
        assert_eq!(s.lambda1, 0.0);
        assert!(!s.is_discrete);
        assert_eq!(s.alpha_star, -1.0);
    }

    #[test]
    fn d3_unit_ball_alpha_minus_two_is_exact() {
        // nu = 1/2 gives f(x) = x + 1, so -alpha R = 2 has root x = 1 and
        // lambda1 = -1 exactly.
        let p = BallProblem::new(3, 1.0, -2.0).unwrap();
        let s = lambda1_ball(&p).unwrap();
        assert!(s.is_discrete);
        assert_relative_eq!(s.k, 1.0, max_relative = 1e-12);
        assert_relative_eq!(s.lambda1, -1.0, max_relative = 1e-12);
    }

    #[test]
    fn subcritical_root_residual() {
        let policy = EvalPolicy::default();
        for &(d, r, a) in &[(2u32, 1.0, -1.0), (2, 0.5, -3.0), (4, 1.5, -2.5), (5, 2.0, -4.0)] {
            let p = BallProblem::new(d, r, a).unwrap();
            let s = lambda1_ball(&p).unwrap();
            assert!(s.is_discrete);
            let f = bessel_k_ratio(p.order(), s.k * r, &policy).unwrap();
            let target = -a * r;
            assert!(
                (f - target).abs() <= 1e-12 * target.max(1.0),
                "residual {} for (d={d}, R={r}, alpha={a})",
                f - target
            );
        }
    }

    #[test]
    fn eigenfunction_normalised_and_decaying() {
        let p = BallProblem::new(3, 1.0, -2.0).unwrap();
        let s = lambda1_ball(&p).unwrap();
        assert_relative_eq!(radial_eigenfunction(&p, &s, 1.0).unwrap(), 1.0, epsilon = 1e-14);
        // d = 3: psi(r) = (R/r) e^{-k(r-R)} in closed form
        for &r in &[1.5, 2.0, 5.0, 40.0] {
            let expect = (1.0 / r) * (-s.k * (r - 1.0)).exp();
            assert_relative_eq!(
                radial_eigenfunction(&p, &s, r).unwrap(),
                expect,
                max_relative = 1e-12
            );
        }
        let far = radial_eigenfunction(&p, &s, 500.0).unwrap();
        assert!(far >= 0.0 && far < 1e-200);
    }

    #[test]
    fn eigenfunction_state_and_domain_errors() {
        let p = BallProblem::new(3, 1.0, -1.0).unwrap();
        let s = lambda1_ball(&p).unwrap();
        assert!(matches!(radial_eigenfunction(&p, &s, 2.0), Err(Error::State(_))));
        let p = BallProblem::new(3, 1.0, -2.0).unwrap();
        let s = lambda1_ball(&p).unwrap();
        assert!(matches!(radial_eigenfunction(&p, &s, 0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn predictor_values() {
        assert_relative_eq!(asym_lambda(2, 1.0, -40.0), -1560.0);
        assert_eq!(asym_lambda(3, 0.5, -0.0), 0.0);
        // alpha -> 0-: both terms vanish
        assert!(asym_lambda(2, 1.0, -1e-9).abs() < 2e-9);
    }

    #[test]
    fn threshold_continuity_from_below() {
        // lambda1 -> 0 as alpha -> alpha_*^-
        for d in [2u32, 3, 4] {
            let astar = critical_coupling(d, 1.0).unwrap();
            let mut prev = f64::NEG_INFINITY;
            for j in 1..=6 {
                let alpha = astar - 10f64.powi(-j);
                let p = BallProblem::new(d, 1.0, alpha).unwrap();
                let s = lambda1_ball(&p).unwrap();
                assert!(s.lambda1 <= 0.0);
                assert!(s.lambda1 >= prev, "monotone approach to 0 for d={d}");
                prev = s.lambda1;
            }
            assert!(prev.abs() < 1e-2, "lambda1 near threshold for d={d}: {prev}");
        }
    }

    #[test]
    fn invalid_problems_rejected() {
        assert!(BallProblem::new(1, 1.0, -1.0).is_err());
        assert!(BallProblem::new(3, -1.0, -1.0).is_err());
        assert!(BallProblem::new(3, 1.0, 0.5).is_err());
    }
}
