//! Derived skeleton data: edge and vertex classes, links, boundary
//! surfaces, orientability, and the manifold verdict.

use std::collections::HashMap;

use super::{edge_slot, face_edges, face_vertices, Triangulation};

/// Union-find with a relative-orientation bit per element. A union that
/// closes a cycle with odd parity marks the class contradictory, which for
/// edge classes means "identified to itself reversing orientation".
struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
    contradiction: Vec<bool>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu { parent: (0..n).collect(), parity: vec![false; n], contradiction: vec![false; n] }
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
                self.contradiction[ra] = true;
            }
            return;
        }
        let bad = self.contradiction[ra] || self.contradiction[rb];
        self.parent[rb] = ra;
        self.parity[rb] = pa ^ pb ^ rel;
        self.contradiction[ra] = bad;
        self.contradiction[rb] = false;
    }
}

/// Plain union-find.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] == x {
            return x;
        }
        let r = self.find(self.parent[x]);
        self.parent[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
        }
    }
}

#[derive(Debug, Clone)]
pub struct EdgeClassInfo {
    /// Representative slot: (tet, a, b) with a < b.
    pub rep: (usize, u8, u8),
    /// Number of edge slots in the class.
    pub degree: usize,
    pub boundary: bool,
    pub reversed: bool,
}

#[derive(Debug, Clone)]
pub struct VertexClassInfo {
    pub rep: (usize, u8),
    pub link_euler: i64,
    pub link_closed: bool,
    /// Link is a sphere (interior vertex) or a disk (boundary vertex).
    pub link_ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Sphere,
    Torus,
    KleinBottle,
    Other,
}

#[derive(Debug, Clone)]
pub struct BoundaryComponent {
    pub faces: usize,
    pub edges: usize,
    pub vertices: usize,
    pub euler: i64,
    pub orientable: bool,
    pub kind: SurfaceKind,
}

#[derive(Debug)]
pub struct Skeleton {
    /// Per edge slot (tet*6 + e): class id.
    pub edge_class: Vec<usize>,
    /// Per edge slot: canonical (min->max) direction disagrees with the
    /// class representative's direction.
    pub edge_parity: Vec<bool>,
    pub edge_classes: Vec<EdgeClassInfo>,
    /// Per corner (tet*4 + v): class id.
    pub vertex_class: Vec<usize>,
    pub vertex_classes: Vec<VertexClassInfo>,
    /// Per face slot (tet*4 + f): class id.
    pub face_class: Vec<usize>,
    pub face_count: usize,
    pub face_reps: Vec<(usize, u8)>,
    orientable: bool,
    tet_sign: Vec<i8>,
    boundary: Vec<BoundaryComponent>,
    /// Boundary side pairing used for the boundary surface; kept for reuse.
    pub boundary_side_pairs: Vec<(BoundarySide, BoundarySide)>,
    pub boundary_wellformed: bool,
}

/// A side of a boundary triangle: face slot plus the directed edge it
/// carries (directed by the edge-class orientation).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundarySide {
    pub tet: usize,
    pub face: u8,
    pub from: u8,
    pub to: u8,
}

#[derive(Debug, Clone)]
pub enum ManifoldVerdict {
    Manifold { closed: bool },
    NotManifold { reversed_edges: Vec<usize>, bad_vertex_links: Vec<usize> },
}

#[derive(Debug, Clone)]
pub struct SkeletonReport {
    pub tets: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub boundary_faces: usize,
    pub euler: i64,
    pub orientable: bool,
    pub manifold: ManifoldVerdict,
    pub boundary: Vec<BoundaryComponent>,
    pub edge_infos: Vec<EdgeClassInfo>,
    pub vertex_infos: Vec<VertexClassInfo>,
}

impl Skeleton {
    pub fn compute(tri: &Triangulation) -> Skeleton {
        let n = tri.tet_count();
        let mut edges = ParityDsu::new(6 * n);
        let mut verts = Dsu::new(4 * n);
        let mut faces = Dsu::new(4 * n);
        // Link complex: corners keyed (t, v, w), sides keyed (t, v, f).
        let mut link_corners = Dsu::new(16 * n);
        let mut link_sides = Dsu::new(16 * n);

        for t in 0..n {
            for f in 0..4u8 {
                let Some(g) = tri.gluing(t, f) else { continue };
                faces.union(t * 4 + f as usize, g.tet * 4 + g.face as usize);
                for (a, b) in face_edges(f) {
                    let (ia, ib) = (g.perm.apply(a), g.perm.apply(b));
                    let s1 = t * 6 + edge_slot(a, b);
                    let s2 = g.tet * 6 + edge_slot(ia, ib);
                    // rel = does the canonical direction flip across the gluing
                    let rel = (a < b) != (ia < ib);
                    edges.union(s1, s2, rel);
                }
                for v in face_vertices(f) {
                    let iv = g.perm.apply(v);
                    verts.union(t * 4 + v as usize, g.tet * 4 + iv as usize);
                    link_sides.union(
                        t * 16 + v as usize * 4 + f as usize,
                        g.tet * 16 + iv as usize * 4 + g.face as usize,
                    );
                    for w in face_vertices(f) {
                        if w == v {
                            continue;
                        }
                        let iw = g.perm.apply(w);
                        link_corners.union(
                            t * 16 + v as usize * 4 + w as usize,
                            g.tet * 16 + iv as usize * 4 + iw as usize,
                        );
                    }
                }
            }
        }

        // Compact edge classes.
        let mut edge_class = vec![usize::MAX; 6 * n];
        let mut edge_parity = vec![false; 6 * n];
        let mut edge_ids: HashMap<usize, usize> = HashMap::new();
        let mut edge_classes: Vec<EdgeClassInfo> = Vec::new();
        for t in 0..n {
            for e in 0..6 {
                let slot = t * 6 + e;
                let (root, parity) = edges.find(slot);
                let id = *edge_ids.entry(root).or_insert_with(|| {
                    let (a, b) = super::EDGE_VERTS[e];
                    edge_classes.push(EdgeClassInfo {
                        rep: (t, a, b),
                        degree: 0,
                        boundary: false,
                        reversed: edges.contradiction[root],
                    });
                    edge_classes.len() - 1
                });
                edge_class[slot] = id;
                edge_parity[slot] = parity;
                edge_classes[id].degree += 1;
                edge_classes[id].reversed |= edges.contradiction[root];
                let (a, b) = super::EDGE_VERTS[e];
                let in_boundary = (0..4u8)
                    .filter(|&f| f != a && f != b)
                    .any(|f| tri.gluing(t, f).is_none());
                edge_classes[id].boundary |= in_boundary;
            }
        }

        // Compact vertex classes.
        let mut vertex_class = vec![usize::MAX; 4 * n];
        let mut vert_ids: HashMap<usize, usize> = HashMap::new();
        let mut vertex_reps: Vec<(usize, u8)> = Vec::new();
        for t in 0..n {
            for v in 0..4u8 {
                let c = t * 4 + v as usize;
                let root = verts.find(c);
                let id = *vert_ids.entry(root).or_insert_with(|| {
                    vertex_reps.push((t, v));
                    vertex_reps.len() - 1
                });
                vertex_class[c] = id;
            }
        }

        // Compact face classes.
        let mut face_class = vec![usize::MAX; 4 * n];
        let mut face_ids: HashMap<usize, usize> = HashMap::new();
        let mut face_reps: Vec<(usize, u8)> = Vec::new();
        for t in 0..n {
            for f in 0..4u8 {
                let c = t * 4 + f as usize;
                let root = faces.find(c);
                let id = *face_ids.entry(root).or_insert_with(|| {
                    face_reps.push((t, f));
                    face_reps.len() - 1
                });
                face_class[c] = id;
            }
        }

        // Vertex links.
        let mut vertex_classes = Vec::with_capacity(vertex_reps.len());
        for (vid, &rep) in vertex_reps.iter().enumerate() {
            let mut f_count = 0usize;
            let mut side_roots: HashMap<usize, bool> = HashMap::new(); // root -> any unglued
            let mut corner_roots: std::collections::HashSet<usize> = Default::default();
            for t in 0..n {
                for v in 0..4u8 {
                    if vertex_class[t * 4 + v as usize] != vid {
                        continue;
                    }
                    f_count += 1;
                    for f in 0..4u8 {
                        if f == v {
                            continue;
                        }
                        let key = t * 16 + v as usize * 4 + f as usize;
                        let root = link_sides.find(key);
                        let unglued = tri.gluing(t, f).is_none();
                        *side_roots.entry(root).or_insert(false) |= unglued;
                    }
                    for w in 0..4u8 {
                        if w == v {
                            continue;
                        }
                        corner_roots.insert(link_corners.find(t * 16 + v as usize * 4 + w as usize));
                    }
                }
            }
            let e_count = side_roots.len();
            let v_count = corner_roots.len();
            let has_boundary = side_roots.values().any(|&b| b);
            let chi = v_count as i64 - e_count as i64 + f_count as i64;
            let ok = if has_boundary { chi == 1 } else { chi == 2 };
            vertex_classes.push(VertexClassInfo {
                rep,
                link_euler: chi,
                link_closed: !has_boundary,
                link_ok: ok,
            });
        }

        // Orientation: propagate tetrahedron signs.
        let mut tet_sign = vec![0i8; n];
        let mut orientable = true;
        for start in 0..n {
            if tet_sign[start] != 0 {
                continue;
            }
            tet_sign[start] = 1;
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for f in 0..4u8 {
                    if let Some(g) = tri.gluing(t, f) {
                        let want = -g.perm.sign() * tet_sign[t];
                        if tet_sign[g.tet] == 0 {
                            tet_sign[g.tet] = want;
                            stack.push(g.tet);
                        } else if tet_sign[g.tet] != want {
                            orientable = false;
                        }
                    }
                }
            }
        }

        // Boundary surface: pair up sides of boundary triangles by edge class.
        let mut sides_by_class: HashMap<usize, Vec<BoundarySide>> = HashMap::new();
        for (t, f) in tri.boundary_faces() {
            for (a, b) in face_edges(f) {
                let slot = t * 6 + edge_slot(a, b);
                let (from, to) = if edge_parity[slot] { (b, a) } else { (a, b) };
                sides_by_class
                    .entry(edge_class[slot])
                    .or_default()
                    .push(BoundarySide { tet: t, face: f, from, to });
            }
        }
        let mut boundary_wellformed = true;
        let mut boundary_side_pairs = Vec::new();
        for (_c, sides) in sides_by_class {
            if sides.len() == 2 {
                boundary_side_pairs.push((sides[0], sides[1]));
            } else {
                boundary_wellformed = false;
            }
        }
        boundary_side_pairs.sort_by_key(|(a, b)| (a.tet, a.face, a.from, b.tet, b.face, b.from));

        let boundary = compute_boundary_components(tri, &boundary_side_pairs);

        Skeleton {
            edge_class,
            edge_parity,
            edge_classes,
            vertex_class,
            vertex_classes,
            face_class,
            face_count: face_reps.len(),
            face_reps,
            orientable,
            tet_sign,
            boundary,
            boundary_side_pairs,
            boundary_wellformed,
        }
    }

    pub fn orientation(&self, _tri: &Triangulation) -> (bool, &[i8]) {
        (self.orientable, &self.tet_sign)
    }

    pub fn boundary_components(&self, _tri: &Triangulation) -> &[BoundaryComponent] {
        &self.boundary
    }

    pub fn report(&self, tri: &Triangulation) -> SkeletonReport {
        let n = tri.tet_count();
        let boundary_faces = tri.boundary_faces().len();
        let reversed: Vec<usize> = self
            .edge_classes
            .iter()
            .enumerate()
            .filter(|(_, e)| e.reversed)
            .map(|(i, _)| i)
            .collect();
        let bad_links: Vec<usize> = self
            .vertex_classes
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.link_ok)
            .map(|(i, _)| i)
            .collect();
        let manifold = if reversed.is_empty() && bad_links.is_empty() && self.boundary_wellformed {
            ManifoldVerdict::Manifold { closed: boundary_faces == 0 }
        } else {
            ManifoldVerdict::NotManifold { reversed_edges: reversed, bad_vertex_links: bad_links }
        };
        SkeletonReport {
            tets: n,
            vertices: self.vertex_classes.len(),
            edges: self.edge_classes.len(),
            faces: self.face_count,
            boundary_faces,
            euler: self.vertex_classes.len() as i64 - self.edge_classes.len() as i64
                + self.face_count as i64
                - n as i64,
            orientable: self.orientable,
            manifold,
            boundary: self.boundary.clone(),
            edge_infos: self.edge_classes.clone(),
            vertex_infos: self.vertex_classes.clone(),
        }
    }
}

fn compute_boundary_components(
    tri: &Triangulation,
    side_pairs: &[(BoundarySide, BoundarySide)],
) -> Vec<BoundaryComponent> {
    let bfaces = tri.boundary_faces();
    if bfaces.is_empty() {
        return Vec::new();
    }
    let index: HashMap<(usize, u8), usize> =
        bfaces.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let m = bfaces.len();
    let mut comp = Dsu::new(m);
    // Surface orientation: parity DSU over triangles, odd cycle means the
    // component is nonorientable.
    let mut orient = ParityDsu::new(m);
    // Corners of boundary triangles keyed (face index, vertex label).
    let mut corners = Dsu::new(4 * m);
    for &(s1, s2) in side_pairs {
        let i1 = index[&(s1.tet, s1.face)];
        let i2 = index[&(s2.tet, s2.face)];
        comp.union(i1, i2);
        corners.union(i1 * 4 + s1.from as usize, i2 * 4 + s2.from as usize);
        corners.union(i1 * 4 + s1.to as usize, i2 * 4 + s2.to as usize);
        // Opposite traversal across a shared edge keeps orientations
        // consistent; same traversal flips.
        let fwd1 = cyclic_forward(s1.face, s1.from, s1.to);
        let fwd2 = cyclic_forward(s2.face, s2.from, s2.to);
        orient.union(i1, i2, fwd1 == fwd2);
    }
    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..m {
        by_root.entry(comp.find(i)).or_default().push(i);
    }
    let mut out = Vec::new();
    let mut roots: Vec<usize> = by_root.keys().copied().collect();
    roots.sort();
    for root in roots {
        let members = &by_root[&root];
        let faces = members.len();
        let mut edge_count = 0;
        for &(s1, _) in side_pairs {
            if comp.find(index[&(s1.tet, s1.face)]) == root {
                edge_count += 1;
            }
        }
        let mut corner_roots: std::collections::HashSet<usize> = Default::default();
        for &i in members {
            for v in face_vertices(bfaces[i].1) {
                corner_roots.insert(corners.find(i * 4 + v as usize));
            }
        }
        let vtx = corner_roots.len();
        let chi = vtx as i64 - edge_count as i64 + faces as i64;
        let or_ok = members.iter().all(|&i| {
            let (r, _) = orient.find(i);
            !orient.contradiction[r]
        });
        let kind = match (chi, or_ok) {
            (2, _) => SurfaceKind::Sphere,
            (0, true) => SurfaceKind::Torus,
            (0, false) => SurfaceKind::KleinBottle,
            _ => SurfaceKind::Other,
        };
        out.push(BoundaryComponent {
            faces,
            edges: edge_count,
            vertices: vtx,
            euler: chi,
            orientable: or_ok,
            kind,
        });
    }
    out
}

/// Is (from, to) a forward step in the canonical cyclic orientation of the
/// boundary triangle of face `f` (its vertices ascending)?
fn cyclic_forward(f: u8, from: u8, to: u8) -> bool {
    let vs = face_vertices(f);
    let i = vs.iter().position(|&v| v == from).unwrap();
    vs[(i + 1) % 3] == to
}
