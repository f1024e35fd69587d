//! Edge and vertex factorials, integrality and divisibility checks.

use crate::qarith::{admissible, canonicalize_ratio, divides, qint, BracketValue, HalfInt, NotIntegral, QIntFrac, QRatio};
use crate::sliced::SlicedDiagram;
use serde::{Deserialize, Serialize};

/// What the renormalization factor needs to know about a colored graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphCombinatorics {
    /// `(color, euler)` per edge; `euler` is 1 when the edge touches a vertex.
    pub edges: Vec<(HalfInt, u8)>,
    pub vertices: Vec<(HalfInt, HalfInt, HalfInt)>,
}

impl GraphCombinatorics {
    pub fn of(d: &SlicedDiagram) -> Self {
        GraphCombinatorics {
            edges: d.edges.iter().map(|e| (e.color, e.euler)).collect(),
            vertices: d.vertex_triples(),
        }
    }

    pub fn is_link(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn all_admissible(&self) -> bool {
        self.vertices.iter().all(|&(a, b, c)| admissible(a, b, c))
    }

    /// `∏_{χ(e)=1} [2c]! / ∏_v [a+b−c]! [b+c−a]! [c+a−b]!`.
    ///
    /// Panics on an inadmissible vertex.
    pub fn factor(&self) -> QIntFrac {
        let mut f = QIntFrac::one();
        for &(c, e) in &self.edges {
            if e == 1 {
                f.mul_qfact_pow(c.0, 1);
            }
        }
        for &(a, b, c) in &self.vertices {
            assert!(admissible(a, b, c), "inadmissible vertex ({a}, {b}, {c})");
            for k in [a.0 + b.0 - c.0, b.0 + c.0 - a.0, c.0 + a.0 - b.0] {
                f.mul_qfact_pow(k / 2, -1);
            }
        }
        f
    }
}

pub fn renormalize(raw: &QRatio, g: &GraphCombinatorics) -> QRatio {
    if g.is_link() || raw.is_zero() {
        return raw.clone();
    }
    raw * &g.factor().to_ratio()
}

pub fn check_integrality(v: &QRatio) -> Result<BracketValue, NotIntegral> {
    canonicalize_ratio(v)
}

/// Exact divisibility of the body by `[2c+1]`, per color.
pub fn check_divisibility(v: &BracketValue, colors: &[HalfInt]) -> Vec<bool> {
    colors.iter().map(|c| divides(&qint(c.0 + 1), v)).collect()
}
