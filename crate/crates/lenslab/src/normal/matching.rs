//! The matching system: one equation per glued face pair per arc type,
//! equating arc counts on the two sides.

use crate::error::{Error, Result};
use crate::tri::{face_vertices, Triangulation};

use super::{partition_of, NormalVector};

/// One equation `arcs(t, f, v) = arcs(t2, f2, v2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcEquation {
    pub left: (usize, u8, u8),
    pub right: (usize, u8, u8),
}

#[derive(Debug, Clone)]
pub struct MatchingSystem {
    pub tets: usize,
    pub octagons: bool,
    pub equations: Vec<ArcEquation>,
}

impl MatchingSystem {
    /// Variables per tetrahedron: 4 triangles, 3 quads, then 3 octagons in
    /// octagon mode.
    pub fn var_count(&self) -> usize {
        self.tets * if self.octagons { 10 } else { 7 }
    }

    /// Dense coefficient rows over the variable ordering above.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        let stride = if self.octagons { 10 } else { 7 };
        let mut rows = Vec::with_capacity(self.equations.len());
        for eq in &self.equations {
            let mut row = vec![0i64; self.var_count()];
            for (side, sign) in [(eq.left, 1i64), (eq.right, -1)] {
                let (t, f, v) = side;
                row[t * stride + v as usize] += sign;
                let p = partition_of(f, v);
                row[t * stride + 4 + p] += sign;
                if self.octagons {
                    for op in 0..3 {
                        if op != p && super::partner(op, f) != v {
                            row[t * stride + 7 + op] += sign;
                        }
                    }
                }
            }
            rows.push(row);
        }
        rows
    }

    pub fn satisfied_by(&self, v: &NormalVector) -> bool {
        self.equations
            .iter()
            .all(|eq| v.arcs(eq.left.0, eq.left.1, eq.left.2) == v.arcs(eq.right.0, eq.right.1, eq.right.2))
    }
}

/// Build the matching system. Complexes with an edge identified to itself
/// reversing orientation are refused: no normal surface theory applies.
pub fn matching_matrix(tri: &Triangulation, octagons: bool) -> Result<MatchingSystem> {
    let sk = tri.skeleton();
    if sk.edge_classes.iter().any(|e| e.reversed) {
        return Err(Error::ReversedEdge);
    }
    let mut equations = Vec::new();
    for t in 0..tri.tet_count() {
        for f in 0..4u8 {
            if let Some(g) = tri.gluing(t, f) {
                if (g.tet, g.face) < (t, f) {
                    continue; // each pair once
                }
                for v in face_vertices(f) {
                    equations.push(ArcEquation {
                        left: (t, f, v),
                        right: (g.tet, g.face, g.perm.apply(v)),
                    });
                }
            }
        }
    }
    Ok(MatchingSystem { tets: tri.tet_count(), octagons, equations })
}
