//! Normal and almost-normal (octagonal) surfaces in face-pairing
//! triangulations.
//!
//! Coordinates per tetrahedron: four triangle counts (one per corner),
//! three quadrilateral counts (one per pair of opposite edges) and, in
//! octagon mode, three octagon counts. Pieces are matched across glued
//! faces arc type by arc type, reading everything on lifts into the
//! abstract tetrahedra, so self-gluings pose no special case.
//!
//! Enumeration is bounded brute force: coordinates are pinned tetrahedron
//! by tetrahedron from the arcs already fixed across earlier gluings, so
//! the search never scans free coordinates except where genuinely
//! unconstrained.

mod classify;
mod enumerate;
mod matching;
mod reconstruct;
mod search;

pub use classify::{classify, SurfaceClass};
pub use enumerate::enumerate;
pub use matching::{matching_matrix, MatchingSystem};
pub use reconstruct::{reconstruct, BoundaryCurve, Component, ReconstructedSurface};
pub use search::{find_nonthinedge_torus, find_nonvertexlinking_sphere};

use std::fmt;

/// Opposite-edge partitions of the tetrahedron: type k pairs vertex 0
/// with vertex k+1.
pub const PARTITIONS: [[(u8, u8); 2]; 3] = [
    [(0, 1), (2, 3)],
    [(0, 2), (1, 3)],
    [(0, 3), (1, 2)],
];

/// The vertex paired with `v` in partition `p`.
pub fn partner(p: usize, v: u8) -> u8 {
    for (a, b) in PARTITIONS[p] {
        if a == v {
            return b;
        }
        if b == v {
            return a;
        }
    }
    unreachable!()
}

/// Partition index pairing the two distinct vertices `a` and `b`.
pub fn partition_of(a: u8, b: u8) -> usize {
    (0..3).find(|&p| partner(p, a) == b).unwrap()
}

/// Does a quad of partition `p` cross edge {a,b} (once)? It misses the
/// two edges of its own partition and crosses the other four.
pub fn quad_crosses(p: usize, a: u8, b: u8) -> bool {
    partner(p, a) != b
}

/// Normal coordinates of a surface: triangles per corner, quads per
/// partition, octagons per partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalVector {
    pub x: Vec<[u32; 4]>,
    pub q: Vec<[u32; 3]>,
    pub oct: Vec<[u32; 3]>,
}

impl NormalVector {
    pub fn zero(tets: usize) -> NormalVector {
        NormalVector { x: vec![[0; 4]; tets], q: vec![[0; 3]; tets], oct: vec![[0; 3]; tets] }
    }

    pub fn tets(&self) -> usize {
        self.x.len()
    }

    /// At most one nonzero quad type per tetrahedron; at most one octagon
    /// in the whole complex, with no quads in its tetrahedron.
    pub fn admissible(&self) -> bool {
        let mut octs = 0u32;
        for t in 0..self.tets() {
            let quad_types = self.q[t].iter().filter(|&&v| v > 0).count();
            if quad_types > 1 {
                return false;
            }
            let o: u32 = self.oct[t].iter().sum();
            octs += o;
            if o > 0 && quad_types > 0 {
                return false;
            }
        }
        octs <= 1
    }

    pub fn has_octagon(&self) -> bool {
        self.oct.iter().any(|o| o.iter().any(|&v| v > 0))
    }

    pub fn is_vertex_linking(&self) -> bool {
        self.q.iter().all(|q| q.iter().all(|&v| v == 0))
            && !self.has_octagon()
            && self.x.iter().all(|x| x.iter().all(|&v| v == x[0]))
            && self.x.windows(2).all(|w| w[0][0] == w[1][0])
    }

    /// Arcs of type (face, cut corner) contributed in tetrahedron `t`.
    pub fn arcs(&self, t: usize, face: u8, v: u8) -> u64 {
        debug_assert!(face != v);
        let mut n = self.x[t][v as usize] as u64;
        let p = partition_of(face, v);
        n += self.q[t][p] as u64;
        for op in 0..3 {
            if op != p && partner(op, face) != v {
                n += self.oct[t][op] as u64;
            }
        }
        n
    }

    /// Crossings of edge {a,b} of tetrahedron `t`.
    pub fn edge_crossings(&self, t: usize, a: u8, b: u8) -> u64 {
        let mut n = (self.x[t][a as usize] + self.x[t][b as usize]) as u64;
        for p in 0..3 {
            if quad_crosses(p, a, b) {
                n += self.q[t][p] as u64;
            }
            n += self.oct[t][p] as u64 * if partner(p, a) == b { 2 } else { 1 };
        }
        n
    }

    /// Total weight on each edge class.
    pub fn edge_weights(&self, tri: &crate::tri::Triangulation) -> Vec<u64> {
        let sk = tri.skeleton();
        let mut w = vec![u64::MAX; sk.edge_classes.len()];
        for t in 0..self.tets() {
            for (e, &(a, b)) in crate::tri::EDGE_VERTS.iter().enumerate() {
                let c = sk.edge_class[t * 6 + e];
                let n = self.edge_crossings(t, a, b);
                if w[c] == u64::MAX {
                    w[c] = n;
                } else {
                    debug_assert_eq!(w[c], n, "edge weights must agree across a class");
                }
            }
        }
        w
    }
}

impl fmt::Display for NormalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for t in 0..self.tets() {
            let mut s = format!(
                "{}:{},{},{},{};{},{},{}",
                t,
                self.x[t][0],
                self.x[t][1],
                self.x[t][2],
                self.x[t][3],
                self.q[t][0],
                self.q[t][1],
                self.q[t][2]
            );
            if self.oct[t].iter().any(|&v| v > 0) {
                s.push_str(&format!(";o{},{},{}", self.oct[t][0], self.oct[t][1], self.oct[t][2]));
            }
            parts.push(s);
        }
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(partner(0, 0), 1);
        assert_eq!(partner(1, 3), 1);
        assert_eq!(partition_of(2, 3), 0);
        assert_eq!(partition_of(0, 3), 2);
        assert!(quad_crosses(0, 0, 2));
        assert!(!quad_crosses(0, 2, 3));
    }

    #[test]
    fn arc_counting() {
        let mut v = NormalVector::zero(1);
        v.x[0] = [1, 1, 1, 1];
        assert_eq!(v.arcs(0, 3, 0), 1);
        v.q[0][2] = 2; // partition {03|12}
        assert_eq!(v.arcs(0, 3, 0), 3); // quad cuts corner 0 on face 3
        assert_eq!(v.arcs(0, 3, 1), 1);
        assert_eq!(v.edge_crossings(0, 0, 3), 2); // quad misses its own pair
        assert_eq!(v.edge_crossings(0, 0, 1), 4);
    }

    #[test]
    fn octagon_arcs() {
        let mut v = NormalVector::zero(1);
        v.oct[0][0] = 1; // partition {01|23}
        // twice on its own pair, once on the straddling edges
        assert_eq!(v.edge_crossings(0, 0, 1), 2);
        assert_eq!(v.edge_crossings(0, 2, 3), 2);
        assert_eq!(v.edge_crossings(0, 0, 2), 1);
        // on face 3 it cuts corners 0 and 1 once each, never corner 2
        assert_eq!(v.arcs(0, 3, 0), 1);
        assert_eq!(v.arcs(0, 3, 1), 1);
        assert_eq!(v.arcs(0, 3, 2), 0);
    }
}
