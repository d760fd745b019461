//! Plain-text shape files.
//!
//! A file holds one `[curve]` or `[body]` section per component, each a list
//! of `key = value` lines. `#` starts a comment. Numbers are plain floats,
//! lists are comma-separated.
//!
//! ```text
//! [curve]
//! kind = ellipse        # circle | ellipse | star | stadium | fourier
//! a = 2.0
//! b = 1.0
//! perimeter = 6.2831853071795865   # optional rescale
//! center = 3.0, 0.0                # optional translation
//!
//! [body]
//! kind = spheroid       # sphere | spheroid | perturbed-sphere
//! d = 3
//! a = 1.5
//! b = 1.0
//! mtotal = 1.0                     # optional normalisation of <M^{d-1}>
//! ```

use super::axisym::AxisymBody;
use super::curve::{Curve2D, FourierSeries};
use crate::error::{Error, Result};

/// Parsed contents of a shape file.
#[derive(Debug, Default)]
pub struct ShapeFile {
    pub curves: Vec<Curve2D>,
    pub bodies: Vec<AxisymBody>,
}

struct Section {
    header: String,
    line: usize,
    entries: Vec<(usize, String, String)>,
}

impl Section {
    fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(_, k, _)| k == key).map(|(_, _, v)| v.as_str())
    }

    fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or(Error::Parse {
            line: self.line,
            msg: format!("[{}] section is missing key '{key}'", self.header),
        })
    }

    fn f64(&self, key: &str) -> Result<f64> {
        parse_f64(self.require(key)?, self.key_line(key))
    }

    fn f64_opt(&self, key: &str) -> Result<Option<f64>> {
        match self.get(key) {
            None => Ok(None),
            Some(v) => parse_f64(v, self.key_line(key)).map(Some),
        }
    }

    fn usize_opt(&self, key: &str, default: usize) -> Result<usize> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v.trim().parse().map_err(|_| Error::Parse {
                line: self.key_line(key),
                msg: format!("'{v}' is not an integer"),
            }),
        }
    }

    fn list(&self, key: &str) -> Result<Vec<f64>> {
        let line = self.key_line(key);
        self.require(key)?
            .split(',')
            .map(|tok| parse_f64(tok, line))
            .collect()
    }

    fn key_line(&self, key: &str) -> usize {
        self.entries.iter().find(|(_, k, _)| k == key).map(|(l, _, _)| *l).unwrap_or(self.line)
    }
}

fn parse_f64(tok: &str, line: usize) -> Result<f64> {
    tok.trim()
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("'{}' is not a number", tok.trim()) })
}

/// Parses shape-file text; errors carry 1-based line numbers.
pub fn parse_shapes(text: &str) -> Result<ShapeFile> {
    let mut sections: Vec<Section> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('[') {
            let header = header.strip_suffix(']').ok_or(Error::Parse {
                line: line_no,
                msg: format!("malformed section header '{line}'"),
            })?;
            sections.push(Section { header: header.trim().to_string(), line: line_no, entries: Vec::new() });
            continue;
        }
        let (key, value) = line.split_once('=').ok_or(Error::Parse {
            line: line_no,
            msg: format!("expected 'key = value', got '{line}'"),
        })?;
        let section = sections.last_mut().ok_or(Error::Parse {
            line: line_no,
            msg: "key-value pair before any [curve] or [body] section".into(),
        })?;
        section.entries.push((line_no, key.trim().to_string(), value.trim().to_string()));
    }

    let mut out = ShapeFile::default();
    for s in &sections {
        match s.header.as_str() {
            "curve" => out.curves.push(build_curve(s)?),
            "body" => out.bodies.push(build_body(s)?),
            other => {
                return Err(Error::Parse {
                    line: s.line,
                    msg: format!("unknown section '[{other}]' (expected [curve] or [body])"),
                })
            }
        }
    }
    if out.curves.is_empty() && out.bodies.is_empty() {
        return Err(Error::Parse { line: 1, msg: "no [curve] or [body] sections found".into() });
    }
    Ok(out)
}

fn map_geom(err: Error, line: usize) -> Error {
    match err {
        Error::Parse { .. } => err,
        other => Error::Parse { line, msg: other.to_string() },
    }
}

fn build_curve(s: &Section) -> Result<Curve2D> {
    let kind = s.require("kind")?;
    let mut curve = match kind {
        "circle" => Curve2D::circle(s.f64("radius")?),
        "ellipse" => Curve2D::ellipse(s.f64("a")?, s.f64("b")?),
        "star" => Curve2D::star(s.f64("radius")?, s.f64("eps")?, s.usize_opt("m", 3)?),
        "stadium" => {
            Curve2D::stadium(s.f64("straight")?, s.f64("cap")?, s.usize_opt("harmonics", 48)?)
        }
        "fourier" => {
            let x = FourierSeries::new(s.list("x_cos")?, s.list("x_sin").unwrap_or_default());
            let y = FourierSeries::new(s.list("y_cos")?, s.list("y_sin").unwrap_or_default());
            match (x, y) {
                (Ok(x), Ok(y)) => Curve2D::new(x, y, s.usize_opt("n_quad", 1024)?),
                (Err(e), _) | (_, Err(e)) => Err(e),
            }
        }
        other => Err(Error::Parse {
            line: s.key_line("kind"),
            msg: format!("unknown curve kind '{other}'"),
        }),
    }
    .map_err(|e| map_geom(e, s.line))?;

    if let Some(target) = s.f64_opt("perimeter")? {
        curve = curve.scaled_to_perimeter(target).map_err(|e| map_geom(e, s.line))?;
    }
    if let Some(center) = s.get("center") {
        let parts = s.list("center")?;
        if parts.len() != 2 {
            return Err(Error::Parse {
                line: s.key_line("center"),
                msg: format!("center '{center}' must be 'x, y'"),
            });
        }
        curve = curve.translated(parts[0], parts[1]);
    }
    Ok(curve)
}

fn build_body(s: &Section) -> Result<AxisymBody> {
    let kind = s.require("kind")?;
    let d = s.usize_opt("d", 3)? as u32;
    let body = match kind {
        "sphere" => AxisymBody::sphere(d, s.f64("radius")?),
        "spheroid" => AxisymBody::spheroid(d, s.f64("a")?, s.f64("b")?),
        "perturbed-sphere" => AxisymBody::perturbed_sphere(
            d,
            s.f64("eps")?,
            s.usize_opt("modes", 3)?,
            s.usize_opt("seed", 0)? as u64,
        ),
        other => Err(Error::Parse {
            line: s.key_line("kind"),
            msg: format!("unknown body kind '{other}'"),
        }),
    }
    .map_err(|e| map_geom(e, s.line))?;

    match s.f64_opt("mtotal")? {
        Some(target) => body.normalized_mtotal(target).map_err(|e| map_geom(e, s.line)),
        None => Ok(body),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::curve::curve_metrics;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn parses_mixed_file() {
        let text = "\n# two shapes\n[curve]\nkind = circle\nradius = 1.0\n\n[curve]\nkind = ellipse\na = 2\nb = 1\nperimeter = 6.283185307179586\ncenter = 8, 0\n\n[body]\nkind = spheroid\nd = 3\na = 1.5\nb = 1\nmtotal = 1.0\n";
        let shapes = parse_shapes(text).unwrap();
        assert_eq!(shapes.curves.len(), 2);
        assert_eq!(shapes.bodies.len(), 1);
        let m = curve_metrics(&shapes.curves[1]).unwrap();
        assert_relative_eq!(m.perimeter, 2.0 * PI, max_relative = 1e-12);
    }

    #[test]
    fn error_lines_are_reported() {
        let bad_number = "[curve]\nkind = circle\nradius = abc\n";
        match parse_shapes(bad_number) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let missing_key = "[curve]\nkind = ellipse\na = 2\n";
        match parse_shapes(missing_key) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        let stray = "kind = circle\n";
        match parse_shapes(stray) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        let unknown = "[curve]\nkind = pentagon\n";
        assert!(matches!(parse_shapes(unknown), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn invalid_geometry_becomes_parse_error_with_line() {
        let overlapping_loops = "[curve]\nkind = star\nradius = 1\neps = 1.3\nm = 7\n";
        match parse_shapes(overlapping_loops) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 1);
                assert!(msg.contains("self-intersects"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
