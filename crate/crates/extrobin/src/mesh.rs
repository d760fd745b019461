//! Graded 1D meshes for the half-line solvers.
//!
//! Cells grow geometrically away from t = 0 up to a capped width, then stay
//! uniform. Refinement splits every cell in two and enlargement appends
//! cells, so refined and enlarged trial spaces are nested in the original.

/// Largest ratio between the widest and narrowest cell of a graded mesh.
const MAX_GROWTH: f64 = 32.0;

/// Partition 0 = t_0 < t_1 < ... < t_n = T of a truncated half-line.
#[derive(Debug, Clone)]
pub struct GradedMesh {
    pub nodes: Vec<f64>,
}

impl GradedMesh {
    /// Builds a mesh of `n_cells` cells on [0, t_end] whose widths grow by
    /// `ratio` per cell until the total growth reaches a fixed cap.
    pub fn new(t_end: f64, n_cells: usize, ratio: f64) -> GradedMesh {
        assert!(t_end > 0.0 && n_cells >= 1);
        assert!((1.0..=1.2).contains(&ratio), "grading ratio must lie in [1, 1.2]");
        let n = n_cells;
        let graded = if ratio > 1.0 {
            ((MAX_GROWTH.ln() / ratio.ln()).floor() as usize).min(n.saturating_sub(1))
        } else {
            0
        };
        // t_end = h0 * [ (q^graded - 1)/(q - 1) + (n - graded) q^graded ]
        let scale = if ratio > 1.0 {
            (ratio.powi(graded as i32) - 1.0) / (ratio - 1.0)
                + (n - graded) as f64 * ratio.powi(graded as i32)
        } else {
            n as f64
        };
        let h0 = t_end / scale;
        let mut nodes = Vec::with_capacity(n + 1);
        nodes.push(0.0);
        let mut h = h0;
        for i in 0..n {
            if i < graded {
                nodes.push(nodes[i] + h);
                h *= ratio;
            } else {
                nodes.push(nodes[i] + h);
            }
        }
        // land exactly on t_end
        *nodes.last_mut().unwrap() = t_end;
        GradedMesh { nodes }
    }

    pub fn n_cells(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn t_end(&self) -> f64 {
        *self.nodes.last().unwrap()
    }

    /// Splits every cell in two; the new trial space contains the old one.
    pub fn split(&self) -> GradedMesh {
        let mut nodes = Vec::with_capacity(2 * self.n_cells() + 1);
        for w in self.nodes.windows(2) {
            nodes.push(w[0]);
            nodes.push(0.5 * (w[0] + w[1]));
        }
        nodes.push(self.t_end());
        GradedMesh { nodes }
    }

    /// Appends cells of the final width until the mesh reaches `new_end`.
    pub fn extend_to(&self, new_end: f64) -> GradedMesh {
        assert!(new_end > self.t_end());
        let h = self.t_end() - self.nodes[self.nodes.len() - 2];
        let extra = ((new_end - self.t_end()) / h).ceil() as usize;
        let mut nodes = self.nodes.clone();
        let start = self.t_end();
        let step = (new_end - start) / extra as f64;
        for i in 1..=extra {
            nodes.push(start + step * i as f64);
        }
        GradedMesh { nodes }
    }
}
