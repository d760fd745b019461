//! Smooth closed planar curves given by finite Fourier series, and unions
//! of disjoint components.
//!
//! Orientation is counterclockwise and curvature follows the outward-normal
//! convention: kappa >= 0 where the enclosed region is convex, and the total
//! curvature of every simple closed component is +2 pi.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// One coordinate of a parametric curve as a trigonometric polynomial
/// c[0] + sum_k ( c[k] cos k theta + s[k] sin k theta ).
#[derive(Debug, Clone)]
pub struct FourierSeries {
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl FourierSeries {
    /// `cos[k]` multiplies cos(k theta) (k = 0 is the constant term) and
    /// `sin[k]` multiplies sin(k theta) (`sin[0]` must be absent or zero).
    pub fn new(cos: Vec<f64>, sin: Vec<f64>) -> Result<FourierSeries> {
        if cos.is_empty() {
            return Err(Error::Geometry("empty cosine coefficient list".into()));
        }
        if let Some(s0) = sin.first() {
            if *s0 != 0.0 {
                return Err(Error::Geometry("sin(0*theta) coefficient must be zero".into()));
            }
        }
        Ok(FourierSeries { cos, sin })
    }

    fn max_harmonic(&self) -> usize {
        self.cos.len().max(self.sin.len()).saturating_sub(1)
    }

    /// Value and first two derivatives at theta.
    fn eval2(&self, theta: f64) -> (f64, f64, f64) {
        let mut v = 0.0;
        let mut d1 = 0.0;
        let mut d2 = 0.0;
        let top = self.max_harmonic();
        for k in 0..=top {
            let kf = k as f64;
            let (s, c) = (kf * theta).sin_cos();
            let a = self.cos.get(k).copied().unwrap_or(0.0);
            let b = self.sin.get(k).copied().unwrap_or(0.0);
            v += a * c + b * s;
            d1 += kf * (b * c - a * s);
            d2 += kf * kf * (-a * c - b * s);
        }
        (v, d1, d2)
    }

    fn scale(&mut self, factor: f64) {
        for c in &mut self.cos {
            *c *= factor;
        }
        for s in &mut self.sin {
            *s *= factor;
        }
    }

    /// theta -> -theta, i.e. orientation reversal.
    fn flip(&mut self) {
        for s in &mut self.sin {
            *s = -*s;
        }
    }
}

/// Number of polyline vertices used for the simplicity and disjointness checks.
const POLYLINE_POINTS: usize = 512;

/// Smooth closed curve, counterclockwise, regular, simple.
#[derive(Debug, Clone)]
pub struct Curve2D {
    x: FourierSeries,
    y: FourierSeries,
    pub n_quad: usize,
}

/// Metrics of a single closed curve.
#[derive(Debug, Clone)]
pub struct CurveMetrics {
    pub perimeter: f64,
    pub enclosed_area: f64,
    /// Sample parameters (uniform in theta).
    pub thetas: Vec<f64>,
    /// Signed curvature at the sample parameters (outward-normal convention).
    pub curvature: Vec<f64>,
    /// Integral of kappa ds; +2 pi for a simple closed curve.
    pub total_curvature: f64,
    pub kappa_min: f64,
    pub kappa_max: f64,
}

impl Curve2D {
    pub fn new(x: FourierSeries, y: FourierSeries, n_quad: usize) -> Result<Curve2D> {
        let top = x.max_harmonic().max(y.max_harmonic());
        let n_quad = n_quad.max(256).max(8 * top);
        let mut curve = Curve2D { x, y, n_quad };

        // regularity
        let n_check = curve.n_quad.max(2048);
        for i in 0..n_check {
            let theta = 2.0 * PI * i as f64 / n_check as f64;
            let (dx, dy) = curve.derivative(theta);
            if dx.hypot(dy) < 1e-12 {
                return Err(Error::Geometry(format!(
                    "irregular parametrization: |tangent| < 1e-12 at theta = {theta:.6}"
                )));
            }
        }

        // fix orientation to counterclockwise
        let area = curve.signed_area();
        if area.abs() < 1e-12 {
            return Err(Error::Geometry("degenerate curve: enclosed area ~ 0".into()));
        }
        if area < 0.0 {
            curve.x.flip();
            curve.y.flip();
        }

        // simplicity via a polyline proxy
        let poly = curve.polyline(POLYLINE_POINTS);
        if polyline_self_intersects(&poly) {
            return Err(Error::Geometry("curve self-intersects".into()));
        }
        Ok(curve)
    }

    /// Circle of radius `r` centred at the origin.
    pub fn circle(r: f64) -> Result<Curve2D> {
        Curve2D::circle_at(r, 0.0, 0.0)
    }

    pub fn circle_at(r: f64, cx: f64, cy: f64) -> Result<Curve2D> {
        if !(r > 0.0) {
            return Err(Error::Geometry(format!("circle radius {r} must be positive")));
        }
        Curve2D::new(
            FourierSeries::new(vec![cx, r], vec![])?,
            FourierSeries::new(vec![cy, 0.0], vec![0.0, r])?,
            1024,
        )
    }

    /// Axis-aligned ellipse with semi-axes `a`, `b`.
    pub fn ellipse(a: f64, b: f64) -> Result<Curve2D> {
        if !(a > 0.0) || !(b > 0.0) {
            return Err(Error::Geometry(format!("ellipse semi-axes ({a}, {b}) must be positive")));
        }
        Curve2D::new(
            FourierSeries::new(vec![0.0, a], vec![])?,
            FourierSeries::new(vec![0.0, 0.0], vec![0.0, b])?,
            1024,
        )
    }

    /// Polar perturbation r(theta) = R (1 + eps cos(m theta)); simple and
    /// regular for small eps, non-convex once eps (m^2 - 1) > 1.
    pub fn star(radius: f64, eps: f64, m: usize) -> Result<Curve2D> {
        if !(radius > 0.0) || m < 2 {
            return Err(Error::Geometry("star requires radius > 0 and m >= 2".into()));
        }
        // r cos(theta) and r sin(theta) expand into harmonics m-1 and m+1
        let mut xc = vec![0.0; m + 2];
        let mut ys = vec![0.0; m + 2];
        let mut yc = vec![0.0; m + 2];
        let mut xs = vec![0.0; m + 2];
        xc[1] = radius;
        ys[1] = radius;
        let half = 0.5 * radius * eps;
        xc[m + 1] += half;
        xc[m - 1] += half;
        ys[m + 1] += half;
        ys[m - 1] -= half;
        Curve2D::new(FourierSeries::new(xc, xs)?, FourierSeries::new(yc, ys)?, 1024)
    }

    /// Band-limited approximation of a stadium: straight sides of length
    /// `straight`, semicircular caps of radius `cap`. The Fourier projection
    /// keeps `harmonics` modes, so curvature shows small ripples near the
    /// cap junctions.
    pub fn stadium(straight: f64, cap: f64, harmonics: usize) -> Result<Curve2D> {
        if !(straight > 0.0) || !(cap > 0.0) {
            return Err(Error::Geometry("stadium requires positive dimensions".into()));
        }
        let h = harmonics.clamp(8, 256);
        let samples = 4096;
        let perim = 2.0 * straight + 2.0 * PI * cap;
        let pt = |s: f64| -> (f64, f64) {
            // arclength position s in [0, perim), counterclockwise from the
            // bottom-left corner of the straight section
            let s1 = straight; // bottom edge
            let s2 = s1 + PI * cap; // right cap
            let s3 = s2 + straight; // top edge
            if s < s1 {
                (-0.5 * straight + s, -cap)
            } else if s < s2 {
                let phi = (s - s1) / cap - 0.5 * PI;
                (0.5 * straight + cap * phi.cos(), cap * phi.sin())
            } else if s < s3 {
                (0.5 * straight - (s - s2), cap)
            } else {
                let phi = (s - s3) / cap + 0.5 * PI;
                (-0.5 * straight + cap * phi.cos(), cap * phi.sin())
            }
        };
        let mut xc = vec![0.0; h + 1];
        let mut xs = vec![0.0; h + 1];
        let mut yc = vec![0.0; h + 1];
        let mut ys = vec![0.0; h + 1];
        for i in 0..samples {
            let theta = 2.0 * PI * i as f64 / samples as f64;
            let (px, py) = pt(theta / (2.0 * PI) * perim);
            for k in 0..=h {
                let (sk, ck) = (k as f64 * theta).sin_cos();
                let w = if k == 0 { 1.0 } else { 2.0 } / samples as f64;
                xc[k] += w * px * ck;
                xs[k] += w * px * sk;
                yc[k] += w * py * ck;
                ys[k] += w * py * sk;
            }
        }
        xs[0] = 0.0;
        ys[0] = 0.0;
        Curve2D::new(FourierSeries::new(xc, xs)?, FourierSeries::new(yc, ys)?, 1024)
    }

    /// Returns a copy rescaled about the origin so its perimeter equals `target`.
    pub fn scaled_to_perimeter(&self, target: f64) -> Result<Curve2D> {
        if !(target > 0.0) {
            return Err(Error::Geometry("target perimeter must be positive".into()));
        }
        let factor = target / curve_metrics(self)?.perimeter;
        let mut c = self.clone();
        c.x.scale(factor);
        c.y.scale(factor);
        Ok(c)
    }

    /// Returns a copy translated by (dx, dy).
    pub fn translated(&self, dx: f64, dy: f64) -> Curve2D {
        let mut c = self.clone();
        c.x.cos[0] += dx;
        c.y.cos[0] += dy;
        c
    }

    pub fn point(&self, theta: f64) -> (f64, f64) {
        (self.x.eval2(theta).0, self.y.eval2(theta).0)
    }

    pub fn derivative(&self, theta: f64) -> (f64, f64) {
        (self.x.eval2(theta).1, self.y.eval2(theta).1)
    }

    /// |gamma'(theta)|
    pub fn speed(&self, theta: f64) -> f64 {
        let (dx, dy) = self.derivative(theta);
        dx.hypot(dy)
    }

    /// Signed curvature at theta (outward-normal convention, CCW curve).
    pub fn curvature_at(&self, theta: f64) -> f64 {
        let (_, dx, ddx) = self.x.eval2(theta);
        let (_, dy, ddy) = self.y.eval2(theta);
        let speed = dx.hypot(dy);
        (dx * ddy - dy * ddx) / (speed * speed * speed)
    }

    fn signed_area(&self) -> f64 {
        let n = self.n_quad;
        let mut acc = 0.0;
        for i in 0..n {
            let theta = 2.0 * PI * i as f64 / n as f64;
            let (x, dx, _) = self.x.eval2(theta);
            let (y, dy, _) = self.y.eval2(theta);
            acc += x * dy - y * dx;
        }
        0.5 * acc * 2.0 * PI / n as f64
    }

    pub fn polyline(&self, n: usize) -> Vec<(f64, f64)> {
        (0..n).map(|i| self.point(2.0 * PI * i as f64 / n as f64)).collect()
    }

    fn bbox(&self) -> (f64, f64, f64, f64) {
        let mut b = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for (x, y) in self.polyline(POLYLINE_POINTS) {
            b.0 = b.0.min(x);
            b.1 = b.1.max(x);
            b.2 = b.2.min(y);
            b.3 = b.3.max(y);
        }
        b
    }
}

/// Perimeter, enclosed area, curvature samples and total curvature of one
/// component, by uniform trapezoidal quadrature in the Fourier parameter
/// (spectrally accurate for band-limited curves).
pub fn curve_metrics(curve: &Curve2D) -> Result<CurveMetrics> {
    let n = curve.n_quad;
    let dtheta = 2.0 * PI / n as f64;
    let mut perimeter = 0.0;
    let mut area = 0.0;
    let mut total = 0.0;
    let mut thetas = Vec::with_capacity(n);
    let mut curvature = Vec::with_capacity(n);
    let mut kmin = f64::INFINITY;
    let mut kmax = f64::NEG_INFINITY;
    for i in 0..n {
        let theta = dtheta * i as f64;
        let (x, dx, ddx) = curve.x.eval2(theta);
        let (y, dy, ddy) = curve.y.eval2(theta);
        let speed = dx.hypot(dy);
        if speed < 1e-12 {
            return Err(Error::Geometry(format!(
                "irregular parametrization: |tangent| < 1e-12 at theta = {theta:.6}"
            )));
        }
        let kappa = (dx * ddy - dy * ddx) / (speed * speed * speed);
        perimeter += speed;
        area += x * dy - y * dx;
        total += kappa * speed;
        kmin = kmin.min(kappa);
        kmax = kmax.max(kappa);
        thetas.push(theta);
        curvature.push(kappa);
    }
    Ok(CurveMetrics {
        perimeter: perimeter * dtheta,
        enclosed_area: 0.5 * area * dtheta,
        thetas,
        curvature,
        total_curvature: total * dtheta,
        kappa_min: kmin,
        kappa_max: kmax,
    })
}

/// Finitely many smooth closed curves with pairwise disjoint closures.
#[derive(Debug, Clone)]
pub struct MultiCurve2D {
    components: Vec<Curve2D>,
}

impl MultiCurve2D {
    pub fn new(components: Vec<Curve2D>) -> Result<MultiCurve2D> {
        if components.is_empty() {
            return Err(Error::Geometry("multi-curve needs at least one component".into()));
        }
        for i in 0..components.len() {
            for j in (i + 1)..components.len() {
                if !disjoint(&components[i], &components[j]) {
                    return Err(Error::Geometry(format!(
                        "components {i} and {j} overlap or are nested"
                    )));
                }
            }
        }
        Ok(MultiCurve2D { components })
    }

    pub fn components(&self) -> &[Curve2D] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Total boundary length over all components.
    pub fn total_perimeter(&self) -> Result<f64> {
        let mut sum = 0.0;
        for c in &self.components {
            sum += curve_metrics(c)?.perimeter;
        }
        Ok(sum)
    }
}

/// Average perimeter per component, |boundary| / N.
pub fn multicurve_constraint(mc: &MultiCurve2D) -> Result<f64> {
    Ok(mc.total_perimeter()? / mc.len() as f64)
}

fn disjoint(a: &Curve2D, b: &Curve2D) -> bool {
    let (ax0, ax1, ay0, ay1) = a.bbox();
    let (bx0, bx1, by0, by1) = b.bbox();
    if ax1 < bx0 || bx1 < ax0 || ay1 < by0 || by1 < ay0 {
        return true;
    }
    let pa = a.polyline(256);
    let pb = b.polyline(256);
    for i in 0..pa.len() {
        let s1 = (pa[i], pa[(i + 1) % pa.len()]);
        for j in 0..pb.len() {
            let s2 = (pb[j], pb[(j + 1) % pb.len()]);
            if segments_cross(s1.0, s1.1, s2.0, s2.1) {
                return false;
            }
        }
    }
    // no boundary crossing: reject nesting
    !(point_in_polygon(pa[0], &pb) || point_in_polygon(pb[0], &pa))
}

fn polyline_self_intersects(poly: &[(f64, f64)]) -> bool {
    let n = poly.len();
    for i in 0..n {
        let a1 = poly[i];
        let a2 = poly[(i + 1) % n];
        for j in (i + 1)..n {
            // skip segments sharing an endpoint
            if j == i || (j + 1) % n == i || j == (i + 1) % n {
                continue;
            }
            if segments_cross(a1, a2, poly[j], poly[(j + 1) % n]) {
                return true;
            }
        }
    }
    false
}

fn orient(p: (f64, f64), q: (f64, f64), r: (f64, f64)) -> f64 {
    (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
}

fn segments_cross(a1: (f64, f64), a2: (f64, f64), b1: (f64, f64), b2: (f64, f64)) -> bool {
    let d1 = orient(a1, a2, b1);
    let d2 = orient(a1, a2, b2);
    let d3 = orient(b1, b2, a1);
    let d4 = orient(b1, b2, a2);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

fn point_in_polygon(p: (f64, f64), poly: &[(f64, f64)]) -> bool {
    let mut inside = false;
    let n = poly.len();
    for i in 0..n {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % n];
        if (y1 > p.1) != (y2 > p.1) {
            let x_cross = x1 + (p.1 - y1) / (y2 - y1) * (x2 - x1);
            if p.0 < x_cross {
                inside = !inside;
            }
        }
    }
    inside
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn circle_metrics_exact() {
        let c = Curve2D::circle(2.0).unwrap();
        let m = curve_metrics(&c).unwrap();
        assert_relative_eq!(m.perimeter, 4.0 * PI, max_relative = 1e-12);
        assert_relative_eq!(m.enclosed_area, 4.0 * PI, max_relative = 1e-12);
        assert_relative_eq!(m.total_curvature, 2.0 * PI, max_relative = 1e-12);
        for k in &m.curvature {
            assert_relative_eq!(*k, 0.5, max_relative = 1e-10);
        }
    }

    #[test]
    fn ellipse_gauss_bonnet() {
        let c = Curve2D::ellipse(2.0, 1.0).unwrap();
        let m = curve_metrics(&c).unwrap();
        assert_relative_eq!(m.total_curvature, 2.0 * PI, max_relative = 1e-10);
        assert_relative_eq!(m.enclosed_area, 2.0 * PI, max_relative = 1e-10);
        // curvature extrema of an ellipse: b/a^2 and a/b^2
        assert_relative_eq!(m.kappa_min, 0.25, max_relative = 1e-6);
        assert_relative_eq!(m.kappa_max, 2.0, max_relative = 1e-6);
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        // y leads x by -pi/2: clockwise circle
        let x = FourierSeries::new(vec![0.0, 1.0], vec![]).unwrap();
        let y = FourierSeries::new(vec![0.0, 0.0], vec![0.0, -1.0]).unwrap();
        let c = Curve2D::new(x, y, 512).unwrap();
        let m = curve_metrics(&c).unwrap();
        assert!(m.enclosed_area > 0.0);
        assert_relative_eq!(m.total_curvature, 2.0 * PI, max_relative = 1e-10);
    }

    #[test]
    fn self_intersecting_curve_rejected() {
        // eps > 1 drives r(theta) negative and produces loops
        assert!(matches!(Curve2D::star(1.0, 1.3, 5), Err(Error::Geometry(_))));
    }

    #[test]
    fn star_is_simple_for_small_eps() {
        let c = Curve2D::star(1.0, 0.1, 5).unwrap();
        let m = curve_metrics(&c).unwrap();
        assert_relative_eq!(m.total_curvature, 2.0 * PI, max_relative = 1e-8);
        // eps (m^2 - 1) = 2.4 > 1: non-convex
        assert!(m.kappa_min < 0.0);
    }

    #[test]
    fn stadium_projection_close_to_exact() {
        let c = Curve2D::stadium(2.0, 1.0, 48).unwrap();
        let m = curve_metrics(&c).unwrap();
        let exact_perim = 4.0 + 2.0 * PI;
        let exact_area = 2.0 * 2.0 + PI;
        assert_relative_eq!(m.perimeter, exact_perim, max_relative = 1e-3);
        assert_relative_eq!(m.enclosed_area, exact_area, max_relative = 1e-3);
        assert_relative_eq!(m.total_curvature, 2.0 * PI, max_relative = 1e-8);
    }

    #[test]
    fn scaled_to_perimeter_is_exact() {
        let c = Curve2D::ellipse(2.0, 1.0).unwrap().scaled_to_perimeter(2.0 * PI).unwrap();
        let m = curve_metrics(&c).unwrap();
        assert_relative_eq!(m.perimeter, 2.0 * PI, max_relative = 1e-12);
    }

    #[test]
    fn multicurve_average_perimeter() {
        let one = Curve2D::circle(1.0).unwrap();
        let mc = MultiCurve2D::new(vec![one.clone()]).unwrap();
        assert_relative_eq!(multicurve_constraint(&mc).unwrap(), 2.0 * PI, max_relative = 1e-12);

        // disk r=1 plus disk r=2, disjoint -> (2 pi + 4 pi)/2 = 3 pi
        let two = Curve2D::circle(2.0).unwrap().translated(6.0, 0.0);
        let mc = MultiCurve2D::new(vec![one, two]).unwrap();
        assert_relative_eq!(multicurve_constraint(&mc).unwrap(), 3.0 * PI, max_relative = 1e-12);
    }

    #[test]
    fn overlapping_and_nested_components_rejected() {
        let a = Curve2D::circle(1.0).unwrap();
        let b = Curve2D::circle(1.0).unwrap().translated(1.0, 0.0);
        assert!(MultiCurve2D::new(vec![a.clone(), b]).is_err());
        let inner = Curve2D::circle(0.3).unwrap();
        assert!(MultiCurve2D::new(vec![a, inner]).is_err());
    }
}
