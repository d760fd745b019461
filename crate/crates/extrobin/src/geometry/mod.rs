//! Geometric data model and curvature functionals: planar multi-component
//! boundaries and convex axisymmetric bodies in R^d.

mod axisym;
mod curve;
mod parse;

pub use axisym::{
    axisym_curvatures, check_curvature_inequalities, gauss_legendre, steiner_polynomial,
    AxisymBody, CurvatureMargins, CurvatureReport, ProfileCurve, SteinerPolynomial,
};
pub use curve::{
    curve_metrics, multicurve_constraint, Curve2D, CurveMetrics, FourierSeries, MultiCurve2D,
};
pub use parse::{parse_shapes, ShapeFile};
