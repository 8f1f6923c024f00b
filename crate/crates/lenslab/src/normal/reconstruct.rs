//! Geometric reconstruction of the surface named by a normal vector:
//! pieces are laid out with parallel copies ordered by distance from
//! their cut-off corner, sides are glued across face pairings arc by arc,
//! and components, Euler characteristic, orientability and boundary
//! curves are read off the assembled complex.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::tri::{edge_slot, face_vertices, Triangulation, EDGE_VERTS};

use super::matching::matching_matrix;
use super::{partner, NormalVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCurve {
    /// Crossings with each boundary edge class.
    pub crossings: BTreeMap<usize, u64>,
}

impl BoundaryCurve {
    /// Crossing counts aligned to three given edge classes (boundary slots).
    pub fn triple(&self, slot_classes: &[usize; 3]) -> [u64; 3] {
        let get = |c: usize| self.crossings.get(&c).copied().unwrap_or(0);
        [get(slot_classes[0]), get(slot_classes[1]), get(slot_classes[2])]
    }
}

#[derive(Debug, Clone)]
pub struct Component {
    pub pieces: usize,
    pub chi: i64,
    pub orientable: bool,
    pub closed: bool,
    pub boundary_curves: Vec<BoundaryCurve>,
    /// Crossings with each edge class of the triangulation.
    pub edge_weights: Vec<u64>,
    /// (tetrahedron, partition) -> quads of this component there.
    pub quad_support: BTreeMap<(usize, usize), u32>,
    pub triangles: u64,
    pub has_octagon: bool,
}

impl Component {
    pub fn has_quads(&self) -> bool {
        !self.quad_support.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct ReconstructedSurface {
    pub vector: NormalVector,
    pub components: Vec<Component>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Tri(u8),
    Quad(usize),
    Oct(usize),
}

struct Side {
    arc: usize,   // global arc id
    start: usize, // global point id
    end: usize,
}

struct Piece {
    tet: usize,
    kind: Kind,
    sides: Vec<Side>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] == x {
            return x;
        }
        let r = self.find(self.0[x]);
        self.0[x] = r;
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[rb] = ra;
        }
    }
}

struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
    bad: Vec<bool>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu { parent: (0..n).collect(), parity: vec![false; n], bad: vec![false; n] }
    }
    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let p = self.parent[x];
        let (root, pp) = self.find(p);
        self.parity[x] ^= pp;
        self.parent[x] = root;
        (root, self.parity[x])
    }
    fn union(&mut self, a: usize, b: usize, rel: bool) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa ^ pb != rel {
                self.bad[ra] = true;
            }
            return;
        }
        let bad = self.bad[ra] || self.bad[rb];
        self.parent[rb] = ra;
        self.parity[rb] = pa ^ pb ^ rel;
        self.bad[ra] = bad;
        self.bad[rb] = false;
    }
}

pub fn reconstruct(tri: &Triangulation, v: &NormalVector) -> Result<ReconstructedSurface> {
    if v.tets() != tri.tet_count() {
        return Err(Error::Invalid("vector size does not match the triangulation".into()));
    }
    if !v.admissible() {
        return Err(Error::Invalid("vector is not admissible".into()));
    }
    let sys = matching_matrix(tri, true)?;
    if !sys.satisfied_by(v) {
        return Err(Error::Invalid("vector does not satisfy the matching equations".into()));
    }
    let sk = tri.skeleton();
    let n = tri.tet_count();

    // Crossing points per edge slot.
    let mut slot_w = vec![0u64; 6 * n];
    let mut point_offset = vec![0usize; 6 * n + 1];
    for t in 0..n {
        for (e, &(a, b)) in EDGE_VERTS.iter().enumerate() {
            slot_w[t * 6 + e] = v.edge_crossings(t, a, b);
        }
    }
    for s in 0..6 * n {
        point_offset[s + 1] = point_offset[s] + slot_w[s] as usize;
    }
    let total_points = point_offset[6 * n];
    // Point id from a slot position measured from vertex `a`.
    let point_ref = |t: usize, a: u8, b: u8, from_a: u64| -> usize {
        let e = edge_slot(a, b);
        let w = slot_w[t * 6 + e];
        debug_assert!(from_a < w);
        let pm = if a < b { from_a } else { w - 1 - from_a };
        point_offset[t * 6 + e] + pm as usize
    };

    // Arcs per (tet, face, corner).
    let arc_key = |t: usize, f: u8, c: u8| t * 16 + f as usize * 4 + c as usize;
    let mut arc_count = vec![0u64; 16 * n];
    let mut arc_offset = vec![0usize; 16 * n + 1];
    for t in 0..n {
        for f in 0..4u8 {
            for c in face_vertices(f) {
                arc_count[arc_key(t, f, c)] = v.arcs(t, f, c);
            }
        }
    }
    for k in 0..16 * n {
        arc_offset[k + 1] = arc_offset[k] + arc_count[k] as usize;
    }
    let total_arcs = arc_offset[16 * n];
    let arc_id =
        |t: usize, f: u8, c: u8, stack: u64| -> usize { arc_offset[arc_key(t, f, c)] + stack as usize };

    // Identifications across gluings.
    let mut points = Dsu::new(total_points);
    let mut arcs = Dsu::new(total_arcs);
    for t in 0..n {
        for f in 0..4u8 {
            let Some(g) = tri.gluing(t, f) else { continue };
            for (a, b) in crate::tri::face_edges(f) {
                let (ia, ib) = (g.perm.apply(a), g.perm.apply(b));
                let w = slot_w[t * 6 + edge_slot(a, b)];
                debug_assert_eq!(w, slot_w[g.tet * 6 + edge_slot(ia, ib)]);
                for j in 0..w {
                    points.union(point_ref(t, a, b, j), point_ref(g.tet, ia, ib, j));
                }
            }
            for c in face_vertices(f) {
                let ic = g.perm.apply(c);
                let cnt = arc_count[arc_key(t, f, c)];
                debug_assert_eq!(cnt, arc_count[arc_key(g.tet, g.face, ic)]);
                for i in 0..cnt {
                    arcs.union(arc_id(t, f, c, i), arc_id(g.tet, g.face, ic, i));
                }
            }
        }
    }

    // Lay out the pieces.
    let mut pieces: Vec<Piece> = Vec::new();
    for t in 0..n {
        for corner in 0..4u8 {
            for copy in 0..v.x[t][corner as usize] as u64 {
                pieces.push(triangle_piece(t, corner, copy, &point_ref, &arc_id));
            }
        }
        for p in 0..3 {
            for copy in 0..v.q[t][p] as u64 {
                pieces.push(quad_piece(t, p, copy, v, &point_ref, &arc_id));
            }
            if v.oct[t][p] > 0 {
                pieces.push(oct_piece(t, p, v, &point_ref, &arc_id));
            }
        }
    }

    // Pair piece sides along arc classes.
    let mut by_arc: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (pi, piece) in pieces.iter().enumerate() {
        for (si, side) in piece.sides.iter().enumerate() {
            by_arc.entry(arcs.find(side.arc)).or_default().push((pi, si));
        }
    }

    // Locate an arc id as (tet, face, corner, stack) and a point id as
    // (tet, edge vertices, position from the smaller vertex).
    let locate_arc = |id: usize| -> (usize, u8, u8, u64) {
        let k = match arc_offset.binary_search(&id) {
            Ok(mut k) => {
                while arc_offset[k + 1] == arc_offset[k] {
                    k += 1;
                }
                k
            }
            Err(k) => k - 1,
        };
        let (t, rem) = (k / 16, k % 16);
        (t, (rem / 4) as u8, (rem % 4) as u8, (id - arc_offset[k]) as u64)
    };
    let locate_point = |id: usize| -> (usize, u8, u8, u64) {
        let s = match point_offset.binary_search(&id) {
            Ok(mut s) => {
                while point_offset[s + 1] == point_offset[s] {
                    s += 1;
                }
                s
            }
            Err(s) => s - 1,
        };
        let (t, e) = (s / 6, s % 6);
        let (a, b) = EDGE_VERTS[e];
        (t, a, b, (id - point_offset[s]) as u64)
    };

    let mut comp = Dsu::new(pieces.len());
    let mut orient = ParityDsu::new(pieces.len());
    let mut boundary_arcs: Vec<(usize, usize)> = Vec::new(); // (piece, side)
    for (_root, incident) in &by_arc {
        match incident.len() {
            1 => boundary_arcs.push(incident[0]),
            2 => {
                let (p1, s1) = incident[0];
                let (p2, s2) = incident[1];
                comp.union(p1, p2);
                // Relative traversal: push side 1's start point through the
                // face gluing and see which end of side 2 it lands on.
                let a1 = &pieces[p1].sides[s1];
                let a2 = &pieces[p2].sides[s2];
                let (t1, f1, _c1, _i1) = locate_arc(a1.arc);
                let g = tri
                    .gluing(t1, f1)
                    .ok_or_else(|| Error::Invalid("interior arc on unglued face".into()))?;
                let (pt, pa, pb, pm) = locate_point(a1.start);
                debug_assert_eq!(pt, t1);
                let img = point_ref(g.tet, g.perm.apply(pa), g.perm.apply(pb), pm);
                let same = if img == a2.start {
                    true
                } else if img == a2.end {
                    false
                } else {
                    return Err(Error::Invalid(
                        "arc endpoints do not match across the gluing".into(),
                    ));
                };
                orient.union(p1, p2, same);
            }
            k => {
                return Err(Error::Invalid(format!(
                    "arc class with {k} incident piece sides; reconstruction invariant broken"
                )))
            }
        }
    }

    // Group pieces into components and collect statistics.
    let mut roots: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for pi in 0..pieces.len() {
        roots.entry(comp.find(pi)).or_default().push(pi);
    }
    let mut components = Vec::new();
    for (_root, members) in roots {
        let mut arc_roots: std::collections::BTreeSet<usize> = Default::default();
        let mut point_roots: std::collections::BTreeSet<usize> = Default::default();
        let mut quad_support: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        let mut triangles = 0u64;
        let mut has_octagon = false;
        let mut bd_sides: Vec<(usize, usize)> = Vec::new();
        for &pi in &members {
            let piece = &pieces[pi];
            match piece.kind {
                Kind::Tri(_) => triangles += 1,
                Kind::Quad(p) => *quad_support.entry((piece.tet, p)).or_insert(0) += 1,
                Kind::Oct(_) => has_octagon = true,
            }
            for (si, side) in piece.sides.iter().enumerate() {
                arc_roots.insert(arcs.find(side.arc));
                point_roots.insert(points.find(side.start));
                point_roots.insert(points.find(side.end));
                if boundary_arcs.contains(&(pi, si)) {
                    bd_sides.push((pi, si));
                }
            }
        }
        let f = members.len() as i64;
        let e = arc_roots.len() as i64;
        let vtx = point_roots.len() as i64;
        let chi = vtx - e + f;
        // Second route for the edge count: every interior arc carries two
        // piece sides, every boundary arc one.
        let side_total: usize = members.iter().map(|&pi| pieces[pi].sides.len()).sum();
        debug_assert_eq!((side_total + bd_sides.len()) as i64 / 2, e);
        let orientable = {
            let mut ok = true;
            for &pi in &members {
                let (r, _) = orient.find(pi);
                if orient.bad[r] {
                    ok = false;
                }
            }
            ok
        };

        // Edge weights by class: count this component's points per class.
        let mut edge_weights = vec![0u64; sk.edge_classes.len()];
        let mut point_class: BTreeMap<usize, usize> = BTreeMap::new(); // point root -> edge class
        for s in 0..6 * n {
            for j in 0..slot_w[s] as usize {
                let root = points.find(point_offset[s] + j);
                point_class.entry(root).or_insert(sk.edge_class[s]);
            }
        }
        for &pr in &point_roots {
            edge_weights[point_class[&pr]] += 1;
        }

        // Boundary curves: boundary arcs chained at shared endpoints.
        let mut curve = Dsu::new(bd_sides.len());
        let mut at_point: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, &(pi, si)) in bd_sides.iter().enumerate() {
            let side = &pieces[pi].sides[si];
            at_point.entry(points.find(side.start)).or_default().push(k);
            at_point.entry(points.find(side.end)).or_default().push(k);
        }
        for (_p, ks) in &at_point {
            for w in ks.windows(2) {
                curve.union(w[0], w[1]);
            }
        }
        let mut curves: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
        for (p, ks) in &at_point {
            let root = curve.find(ks[0]);
            *curves.entry(root).or_default().entry(point_class[p]).or_insert(0) += 1;
        }
        let boundary_curves: Vec<BoundaryCurve> =
            curves.into_values().map(|crossings| BoundaryCurve { crossings }).collect();

        components.push(Component {
            pieces: members.len(),
            chi,
            orientable,
            closed: bd_sides.is_empty(),
            boundary_curves,
            edge_weights,
            quad_support,
            triangles,
            has_octagon,
        });
    }

    // Aggregate weights must reproduce the vector-derived weights.
    let want = v.edge_weights(tri);
    let mut got = vec![0u64; want.len()];
    for c in &components {
        for (k, w) in c.edge_weights.iter().enumerate() {
            got[k] += w;
        }
    }
    if got != want {
        return Err(Error::Invalid("component edge weights disagree with the vector".into()));
    }

    Ok(ReconstructedSurface { vector: v.clone(), components })
}

fn triangle_piece(
    t: usize,
    v: u8,
    copy: u64,
    point_ref: &dyn Fn(usize, u8, u8, u64) -> usize,
    arc_id: &dyn Fn(usize, u8, u8, u64) -> usize,
) -> Piece {
    let ws = face_vertices(v); // the three other vertices
    let corner = |w: u8| point_ref(t, v, w, copy);
    // side in face f has endpoints on the edges (v, x), (v, y) with
    // {x, y} the other two vertices of f
    let (w1, w2, w3) = (ws[0], ws[1], ws[2]);
    let sides = vec![
        Side { arc: arc_id(t, w3, v, copy), start: corner(w1), end: corner(w2) },
        Side { arc: arc_id(t, w1, v, copy), start: corner(w2), end: corner(w3) },
        Side { arc: arc_id(t, w2, v, copy), start: corner(w3), end: corner(w1) },
    ];
    Piece { tet: t, kind: Kind::Tri(v), sides }
}

fn quad_piece(
    t: usize,
    p: usize,
    copy: u64,
    v: &NormalVector,
    point_ref: &dyn Fn(usize, u8, u8, u64) -> usize,
    arc_id: &dyn Fn(usize, u8, u8, u64) -> usize,
) -> Piece {
    let k = p as u8 + 1; // partner of vertex 0
    let bs: Vec<u8> = (1..4).filter(|&w| w != k).collect();
    let (b1, b2) = (bs[0], bs[1]);
    let q_total = v.q[t][p] as u64;
    // corner on edge (a, b), a in {0,k}: copies stack away from the
    // {0,k} side
    let corner = |a: u8, b: u8| point_ref(t, a, b, v.x[t][a as usize] as u64 + copy);
    // side in face f cuts the corner paired with f; stacking follows the
    // copy order when that pair contains vertex 0 and reverses otherwise
    let side_arc = |f: u8| {
        let m = partner(p, f);
        let stack = v.x[t][m as usize] as u64
            + if f == 0 || m == 0 { copy } else { q_total - 1 - copy };
        arc_id(t, f, m, stack)
    };
    let (c1, c2, c3, c4) = (corner(0, b1), corner(0, b2), corner(k, b2), corner(k, b1));
    let sides = vec![
        Side { arc: side_arc(k), start: c1, end: c2 },
        Side { arc: side_arc(b1), start: c2, end: c3 },
        Side { arc: side_arc(0), start: c3, end: c4 },
        Side { arc: side_arc(b2), start: c4, end: c1 },
    ];
    Piece { tet: t, kind: Kind::Quad(p), sides }
}

fn oct_piece(
    t: usize,
    p: usize,
    v: &NormalVector,
    point_ref: &dyn Fn(usize, u8, u8, u64) -> usize,
    arc_id: &dyn Fn(usize, u8, u8, u64) -> usize,
) -> Piece {
    let k = p as u8 + 1;
    let bs: Vec<u8> = (1..4).filter(|&w| w != k).collect();
    let (b0, b1) = (bs[0], bs[1]);
    let x = |a: u8| v.x[t][a as usize] as u64;
    let s = |a: u8, b: u8| point_ref(t, a, b, x(a));
    let pa0 = point_ref(t, 0, k, x(0));
    let pa1 = point_ref(t, 0, k, x(0) + 1);
    let pb0 = point_ref(t, b0, b1, x(b0));
    let pb1 = point_ref(t, b0, b1, x(b0) + 1);
    let arc = |f: u8, m: u8| arc_id(t, f, m, x(m));
    let sides = vec![
        Side { arc: arc(b1, 0), start: s(0, b0), end: pa0 },
        Side { arc: arc(b0, 0), start: pa0, end: s(0, b1) },
        Side { arc: arc(k, b1), start: s(0, b1), end: pb1 },
        Side { arc: arc(0, b1), start: pb1, end: s(k, b1) },
        Side { arc: arc(b0, k), start: s(k, b1), end: pa1 },
        Side { arc: arc(b1, k), start: pa1, end: s(k, b0) },
        Side { arc: arc(0, b0), start: s(k, b0), end: pb0 },
        Side { arc: arc(k, b0), start: pb0, end: s(0, b0) },
    ];
    Piece { tet: t, kind: Kind::Oct(p), sides }
}
