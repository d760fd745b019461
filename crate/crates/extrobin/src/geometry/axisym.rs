//! Convex bodies of revolution in R^d (d >= 3) and their curvature
//! functionals: principal curvatures in closed form along the profile,
//! higher-order mean curvatures M_j, boundary averages, and Steiner-type
//! polynomials.

use crate::error::{Error, Result};
use crate::specfun::sphere_area;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Generating curve u in [0, pi] -> (z(u), rho(u)) of a surface of
/// revolution, as trigonometric polynomials
/// z = sum_k zc[k] cos(k u), rho = sum_k rs[k] sin(k u).
///
/// The representation enforces rho(0) = rho(pi) = 0 and z'(0) = z'(pi) = 0,
/// so the profile always meets the axis orthogonally.
#[derive(Debug, Clone)]
pub struct ProfileCurve {
    z_cos: Vec<f64>,
    rho_sin: Vec<f64>,
}

impl ProfileCurve {
    pub fn new(z_cos: Vec<f64>, rho_sin: Vec<f64>) -> Result<ProfileCurve> {
        if z_cos.is_empty() || rho_sin.len() < 2 {
            return Err(Error::Geometry("profile needs cos and sin coefficients".into()));
        }
        if rho_sin[0] != 0.0 {
            return Err(Error::Geometry("rho sin(0*u) coefficient must be zero".into()));
        }
        Ok(ProfileCurve { z_cos, rho_sin })
    }

    fn scale(&mut self, factor: f64) {
        for c in &mut self.z_cos {
            *c *= factor;
        }
        for s in &mut self.rho_sin {
            *s *= factor;
        }
    }

    /// (z, z', z'') at u.
    fn z(&self, u: f64) -> (f64, f64, f64) {
        let mut v = (0.0, 0.0, 0.0);
        for (k, c) in self.z_cos.iter().enumerate() {
            let kf = k as f64;
            let (s, co) = (kf * u).sin_cos();
            v.0 += c * co;
            v.1 -= c * kf * s;
            v.2 -= c * kf * kf * co;
        }
        v
    }

    /// (rho, rho', rho'') at u.
    fn rho(&self, u: f64) -> (f64, f64, f64) {
        let mut v = (0.0, 0.0, 0.0);
        for (k, s) in self.rho_sin.iter().enumerate() {
            let kf = k as f64;
            let (si, co) = (kf * u).sin_cos();
            v.0 += s * si;
            v.1 += s * kf * co;
            v.2 -= s * kf * kf * si;
        }
        v
    }
}

/// Samples carried by a constructed body at its quadrature nodes.
#[derive(Debug, Clone)]
struct ProfileSamples {
    u: Vec<f64>,
    weight: Vec<f64>,
    /// surface measure factor s_{d-1} rho^{d-2} g per node
    dsigma: Vec<f64>,
    kappa_meridian: Vec<f64>,
    kappa_rotational: Vec<f64>,
}

/// Tolerance below which a negative principal curvature sample counts as
/// a convexity violation.
const CONVEXITY_TOL: f64 = -1e-10;

/// Convex smooth body of revolution in R^d.
#[derive(Debug, Clone)]
pub struct AxisymBody {
    pub d: u32,
    profile: ProfileCurve,
    pub n_quad: usize,
    samples: ProfileSamples,
}

/// Curvature functionals of the boundary of an axisymmetric body.
#[derive(Debug, Clone)]
pub struct CurvatureReport {
    /// |boundary|
    pub area: f64,
    /// Per-sample M_j for j = 0..d-1 (row per sample).
    pub mj_samples: Vec<Vec<f64>>,
    /// Boundary averages of M_j for j = 1..d-1 (index 0 is j = 1).
    pub mj_avg: Vec<f64>,
    /// Boundary average of M^{d-1}.
    pub m_total: f64,
    pub m_min: f64,
    pub m_max: f64,
}

/// Coefficients of P(t) = sum c_j t^j with c_0 = 1,
/// c_j = binom(d-1, j) <M_j> for 1 <= j <= d-2 and c_{d-1} = s_d / |boundary|.
#[derive(Debug, Clone)]
pub struct SteinerPolynomial {
    pub d: u32,
    pub coeffs: Vec<f64>,
}

impl SteinerPolynomial {
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }

    /// Steiner polynomial (1 + t/R)^{d-1} of the ball of radius `radius`.
    pub fn ball(d: u32, radius: f64) -> Result<SteinerPolynomial> {
        if d < 3 || !(radius > 0.0) {
            return Err(Error::Domain("ball Steiner polynomial needs d >= 3, R > 0".into()));
        }
        let p = (d - 1) as usize;
        let coeffs =
            (0..=p).map(|j| binom(p, j) / radius.powi(j as i32)).collect();
        Ok(SteinerPolynomial { d, coeffs })
    }
}

/// Margins of the pointwise and averaged curvature inequalities used by the
/// comparison chain; all entries are >= 0 (up to quadrature noise) for
/// convex bodies.
#[derive(Debug, Clone)]
pub struct CurvatureMargins {
    /// min over samples of M^j - M_j, for j = 1..d-1.
    pub maclaurin_min: Vec<f64>,
    /// <M^{d-1}>^{j/(d-1)} - <M_j>, for j = 1..d-2.
    pub jensen: Vec<f64>,
    /// <M_1> - (s_d/|boundary|)^{1/(d-1)}.
    pub alexandrov_fenchel: f64,
}

impl AxisymBody {
    pub fn new(d: u32, profile: ProfileCurve, n_quad: usize) -> Result<AxisymBody> {
        if d < 3 {
            return Err(Error::Domain(format!("axisymmetric bodies need d >= 3, got {d}")));
        }
        let n_quad = n_quad.clamp(64, 4096);
        let samples = sample_profile(d, &profile, n_quad)?;
        Ok(AxisymBody { d, profile, n_quad, samples })
    }

    pub fn sphere(d: u32, radius: f64) -> Result<AxisymBody> {
        AxisymBody::spheroid(d, radius, radius)
    }

    /// Spheroid with polar semi-axis `a` (along the rotation axis) and
    /// equatorial semi-axis `b`.
    pub fn spheroid(d: u32, a: f64, b: f64) -> Result<AxisymBody> {
        if !(a > 0.0) || !(b > 0.0) {
            return Err(Error::Geometry(format!("spheroid semi-axes ({a}, {b}) must be positive")));
        }
        let profile = ProfileCurve::new(vec![0.0, a], vec![0.0, b])?;
        AxisymBody::new(d, profile, 1024)
    }

    /// Seeded smooth convex perturbation of the unit sphere; the
    /// perturbation size shrinks automatically until the body is convex.
    pub fn perturbed_sphere(d: u32, eps: f64, modes: usize, seed: u64) -> Result<AxisymBody> {
        let modes = modes.clamp(1, 8);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draws: Vec<(f64, f64)> =
            (0..modes).map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let mut scale = eps.abs().min(0.5);
        for _ in 0..60 {
            let mut zc = vec![0.0, 1.0];
            let mut rs = vec![0.0, 1.0];
            for (k, (dz, dr)) in draws.iter().enumerate() {
                let m = k + 2;
                let damp = scale / (m * m) as f64;
                zc.push(dz * damp);
                rs.push(dr * damp);
            }
            if let Ok(body) = AxisymBody::new(d, ProfileCurve::new(zc, rs)?, 1024) {
                return Ok(body);
            }
            scale *= 0.7;
        }
        Err(Error::Geometry("could not build a convex perturbed sphere".into()))
    }

    /// Homothety by `factor` about the origin.
    pub fn scaled(&self, factor: f64) -> Result<AxisymBody> {
        if !(factor > 0.0) {
            return Err(Error::Geometry("scale factor must be positive".into()));
        }
        let mut profile = self.profile.clone();
        profile.scale(factor);
        AxisymBody::new(self.d, profile, self.n_quad)
    }

    /// Rescales the body so the boundary average of M^{d-1} equals `target`.
    pub fn normalized_mtotal(&self, target: f64) -> Result<AxisymBody> {
        if !(target > 0.0) {
            return Err(Error::Geometry("target curvature average must be positive".into()));
        }
        let current = axisym_curvatures(self)?.m_total;
        let factor = (current / target).powf(1.0 / (self.d as f64 - 1.0));
        self.scaled(factor)
    }
}

fn binom(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut v = 1.0;
    for i in 0..k {
        v = v * (n - i) as f64 / (i + 1) as f64;
    }
    v
}

fn sample_profile(d: u32, profile: &ProfileCurve, n_quad: usize) -> Result<ProfileSamples> {
    let (nodes, weights) = gauss_legendre(n_quad);
    let sphere_factor = sphere_area(d - 1)?;
    let dm2 = (d - 2) as i32;

    // pole regularity: rho' > 0 at u = 0 and rho' < 0 at u = pi
    let rp0 = profile.rho(0.0).1;
    let rp1 = profile.rho(PI).1;
    if rp0 <= 1e-10 || rp1 >= -1e-10 {
        return Err(Error::Geometry(
            "pole regularity violated: profile does not meet the axis transversally".into(),
        ));
    }

    let mut s = ProfileSamples {
        u: Vec::with_capacity(n_quad),
        weight: Vec::with_capacity(n_quad),
        dsigma: Vec::with_capacity(n_quad),
        kappa_meridian: Vec::with_capacity(n_quad),
        kappa_rotational: Vec::with_capacity(n_quad),
    };
    for (&t, &w) in nodes.iter().zip(weights.iter()) {
        // map [-1, 1] -> [0, pi]
        let u = 0.5 * PI * (t + 1.0);
        let wu = 0.5 * PI * w;
        let (_, zp, zpp) = profile.z(u);
        let (r, rp, rpp) = profile.rho(u);
        if r <= 0.0 {
            return Err(Error::Geometry(format!("profile radius rho <= 0 at u = {u:.6}")));
        }
        let g2 = zp * zp + rp * rp;
        let g = g2.sqrt();
        if g < 1e-12 {
            return Err(Error::Geometry(format!("irregular profile: |tangent| ~ 0 at u = {u:.6}")));
        }
        let km = (rpp * zp - zpp * rp) / (g2 * g);
        let kr = -zp / (r * g);
        if km < CONVEXITY_TOL || kr < CONVEXITY_TOL {
            return Err(Error::Convexity(format!(
                "principal curvature {:.3e} < 0 at u = {u:.6}",
                km.min(kr)
            )));
        }
        s.u.push(u);
        s.weight.push(wu);
        s.dsigma.push(sphere_factor * r.powi(dm2) * g);
        s.kappa_meridian.push(km);
        s.kappa_rotational.push(kr);
    }
    Ok(s)
}

/// Principal curvatures, M_j, boundary area and the averaged functionals of
/// an axisymmetric body. The meridian curvature has multiplicity 1 and the
/// rotational curvature multiplicity d-2, so
/// prod_j (1 + t kappa_j) = (1 + t k_m)(1 + t k_r)^{d-2}.
pub fn axisym_curvatures(body: &AxisymBody) -> Result<CurvatureReport> {
    let d = body.d as usize;
    let p = d - 1; // number of principal curvatures
    let s = &body.samples;
    let mut area = 0.0;
    let mut mj_int = vec![0.0; p + 1];
    let mut m_total_int = 0.0;
    let mut m_min = f64::INFINITY;
    let mut m_max = f64::NEG_INFINITY;
    let mut mj_samples = Vec::with_capacity(s.u.len());

    for i in 0..s.u.len() {
        let km = s.kappa_meridian[i];
        let kr = s.kappa_rotational[i];
        let wds = s.weight[i] * s.dsigma[i];
        area += wds;
        let mean = (km + (d as f64 - 2.0) * kr) / (d as f64 - 1.0);
        m_min = m_min.min(mean);
        m_max = m_max.max(mean);
        m_total_int += mean.powi(p as i32) * wds;
        // binom(p, j) M_j = binom(p-1, j) kr^j + binom(p-1, j-1) km kr^{j-1}
        let mut row = Vec::with_capacity(p + 1);
        for j in 0..=p {
            let e = binom(p - 1, j) * kr.powi(j as i32)
                + if j >= 1 { binom(p - 1, j - 1) * km * kr.powi(j as i32 - 1) } else { 0.0 };
            let mj = e / binom(p, j);
            row.push(mj);
            mj_int[j] += mj * wds;
        }
        mj_samples.push(row);
    }

    let mj_avg = (1..=p).map(|j| mj_int[j] / area).collect();
    Ok(CurvatureReport {
        area,
        mj_samples,
        mj_avg,
        m_total: m_total_int / area,
        m_min,
        m_max,
    })
}

/// Steiner-type polynomial of the body: averaged prod_j (1 + t kappa_j),
/// with the top coefficient replaced by its exact convex-body value
/// s_d / |boundary|.
pub fn steiner_polynomial(body: &AxisymBody) -> Result<SteinerPolynomial> {
    let report = axisym_curvatures(body)?;
    steiner_from_report(body.d, &report)
}

pub(crate) fn steiner_from_report(d: u32, report: &CurvatureReport) -> Result<SteinerPolynomial> {
    let p = (d - 1) as usize;
    let mut coeffs = Vec::with_capacity(p + 1);
    coeffs.push(1.0);
    for j in 1..=(p - 1) {
        coeffs.push(binom(p, j) * report.mj_avg[j - 1]);
    }
    coeffs.push(sphere_area(d)? / report.area);
    Ok(SteinerPolynomial { d, coeffs })
}

/// Margins of the Maclaurin, Jensen and Alexandrov-Fenchel inequalities for
/// a convex body; all must be non-negative up to quadrature noise.
pub fn check_curvature_inequalities(body: &AxisymBody) -> Result<CurvatureMargins> {
    let d = body.d as usize;
    let p = d - 1;
    let report = axisym_curvatures(body)?;
    let mean_of = |row: &Vec<f64>| -> f64 {
        // M_1 is the mean curvature
        row[1]
    };

    let mut maclaurin_min = vec![f64::INFINITY; p];
    for row in &report.mj_samples {
        let m = mean_of(row);
        for j in 1..=p {
            let margin = m.powi(j as i32) - row[j];
            maclaurin_min[j - 1] = maclaurin_min[j - 1].min(margin);
        }
    }

    let exponent = |j: usize| j as f64 / p as f64;
    let jensen = (1..=(p.saturating_sub(1)))
        .map(|j| report.m_total.powf(exponent(j)) - report.mj_avg[j - 1])
        .collect();

    let af = report.mj_avg[0] - (sphere_area(body.d)? / report.area).powf(1.0 / p as f64);
    Ok(CurvatureMargins { maclaurin_min, jensen, alexandrov_fenchel: af })
}

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on the
/// Legendre recurrence).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            pp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / pp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre(8);
        // degree 15 exact: int_{-1}^{1} t^14 dt = 2/15
        let v: f64 = x.iter().zip(&w).map(|(t, w)| w * t.powi(14)).sum();
        assert_relative_eq!(v, 2.0 / 15.0, max_relative = 1e-13);
        let s: f64 = w.iter().sum();
        assert_relative_eq!(s, 2.0, max_relative = 1e-14);
    }

    #[test]
    fn sphere_report_d3() {
        let b = AxisymBody::sphere(3, 1.0).unwrap();
        let r = axisym_curvatures(&b).unwrap();
        assert_relative_eq!(r.area, 4.0 * PI, max_relative = 1e-12);
        assert_relative_eq!(r.mj_avg[0], 1.0, max_relative = 1e-12);
        assert_relative_eq!(r.mj_avg[1], 1.0, max_relative = 1e-12);
        assert_relative_eq!(r.m_total, 1.0, max_relative = 1e-12);
        assert_relative_eq!(r.m_min, 1.0, max_relative = 1e-10);
        assert_relative_eq!(r.m_max, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn sphere_report_scales_as_powers_of_radius() {
        // M_j = R^{-j}, <M^{d-1}> = R^{-(d-1)}
        for d in [3u32, 4, 5] {
            let radius = 2.0;
            let b = AxisymBody::sphere(d, radius).unwrap();
            let r = axisym_curvatures(&b).unwrap();
            for (j, avg) in r.mj_avg.iter().enumerate() {
                assert_relative_eq!(*avg, radius.powi(-(j as i32 + 1)), max_relative = 1e-11);
            }
            assert_relative_eq!(r.m_total, radius.powi(1 - d as i32), max_relative = 1e-11);
        }
    }

    #[test]
    fn minkowski_identity_top_order() {
        // <M_{d-1}> = s_d / |boundary| for convex bodies
        for (a, b) in [(1.5, 1.0), (1.0, 1.3), (2.0, 1.0)] {
            let body = AxisymBody::spheroid(3, a, b).unwrap();
            let r = axisym_curvatures(&body).unwrap();
            let s3 = sphere_area(3).unwrap();
            assert_relative_eq!(r.mj_avg[1], s3 / r.area, max_relative = 1e-10);
        }
    }

    #[test]
    fn spheroid_matches_closed_form() {
        // a = 1.5, b = 1: analytic values computed from
        // k_m = ab/g^3, k_r = a/(b g), g^2 = a^2 sin^2 u + b^2 cos^2 u
        let body = AxisymBody::spheroid(3, 1.5, 1.0).unwrap();
        let r = axisym_curvatures(&body).unwrap();
        assert_relative_eq!(r.area, 16.918218163459972, max_relative = 1e-11);
        assert_relative_eq!(r.mj_avg[0], 0.8767741428405412, max_relative = 1e-11);
        assert_relative_eq!(r.m_total, 0.8026106191001899, max_relative = 1e-11);
        // equator: (b/a^2 + 1/b)/2 = 13/18; poles: a/b^2 = 3/2; the extrema
        // are sampled at quadrature nodes, hence the looser tolerance
        assert_relative_eq!(r.m_min, 13.0 / 18.0, max_relative = 1e-5);
        assert_relative_eq!(r.m_max, 1.5, max_relative = 1e-9);
    }

    #[test]
    fn steiner_of_ball_is_binomial() {
        let b = AxisymBody::sphere(3, 1.0).unwrap();
        let p = steiner_polynomial(&b).unwrap();
        assert_eq!(p.coeffs.len(), 3);
        assert_relative_eq!(p.coeffs[0], 1.0);
        assert_relative_eq!(p.coeffs[1], 2.0, max_relative = 1e-11);
        assert_relative_eq!(p.coeffs[2], 1.0, max_relative = 1e-12);
        assert_relative_eq!(p.eval(1.0), 4.0, max_relative = 1e-11);
        let direct = SteinerPolynomial::ball(3, 1.0).unwrap();
        for (c, e) in p.coeffs.iter().zip(&direct.coeffs) {
            assert_relative_eq!(c, e, max_relative = 1e-11);
        }
    }

    #[test]
    fn sphere_margins_vanish() {
        let b = AxisymBody::sphere(3, 1.0).unwrap();
        let m = check_curvature_inequalities(&b).unwrap();
        for v in &m.maclaurin_min {
            assert!(v.abs() < 1e-10);
        }
        for v in &m.jensen {
            assert!(v.abs() < 1e-10);
        }
        assert!(m.alexandrov_fenchel.abs() < 1e-10);
    }

    #[test]
    fn spheroid_margins_nonnegative() {
        for d in [3u32, 4] {
            let b = AxisymBody::spheroid(d, 2.0, 1.0).unwrap();
            let m = check_curvature_inequalities(&b).unwrap();
            for v in m.maclaurin_min.iter().chain(&m.jensen) {
                assert!(*v >= -1e-10, "margin {v} negative for d={d}");
            }
            assert!(m.alexandrov_fenchel >= -1e-10);
        }
    }

    #[test]
    fn normalization_hits_target() {
        let b = AxisymBody::spheroid(3, 1.5, 1.0).unwrap().normalized_mtotal(1.0).unwrap();
        let r = axisym_curvatures(&b).unwrap();
        assert_relative_eq!(r.m_total, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn nonconvex_profile_rejected() {
        // strong cos(3u) dent makes the meridian curvature negative
        let profile = ProfileCurve::new(vec![0.0, 1.0, 0.0, 0.25], vec![0.0, 1.0]).unwrap();
        match AxisymBody::new(3, profile, 512) {
            Err(Error::Convexity(_)) => {}
            other => panic!("expected convexity error, got {other:?}"),
        }
    }

    #[test]
    fn pole_regularity_enforced() {
        // rho' (0) = 1 - 2 = -1 < 0: breaks transversality at the pole
        let profile = ProfileCurve::new(vec![0.0, 1.0], vec![0.0, 1.0, -1.0]).unwrap();
        assert!(matches!(AxisymBody::new(3, profile, 256), Err(Error::Geometry(_))));
    }

    #[test]
    fn perturbed_sphere_is_deterministic_and_convex() {
        let a = AxisymBody::perturbed_sphere(3, 0.1, 3, 7).unwrap();
        let b = AxisymBody::perturbed_sphere(3, 0.1, 3, 7).unwrap();
        let ra = axisym_curvatures(&a).unwrap();
        let rb = axisym_curvatures(&b).unwrap();
        assert_eq!(ra.area, rb.area);
        assert!(ra.m_min >= 0.0);
        let c = AxisymBody::perturbed_sphere(3, 0.1, 3, 8).unwrap();
        assert_ne!(axisym_curvatures(&c).unwrap().area, ra.area);
    }
}
