//! Face-pairing triangulation kernel.
//!
//! A triangulation is a list of tetrahedra with monogamous face pairings:
//! each face is glued to at most one other face, by a permutation of the
//! four vertex labels carrying one face onto the other. Skeleton data
//! (edge/vertex classes, boundary, links) is derived lazily and cached.

mod homology;
mod io;
mod iso;
mod skeleton;

pub use homology::{homology_h1, H1};
pub use iso::isomorphic;
pub use skeleton::{
    BoundaryComponent, EdgeClassInfo, ManifoldVerdict, Skeleton, SkeletonReport, SurfaceKind,
    VertexClassInfo,
};

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Vertex pairs of the six edges of a tetrahedron, in slot order.
pub const EDGE_VERTS: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn edge_slot(a: u8, b: u8) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    EDGE_VERTS.iter().position(|&(x, y)| (x, y) == (a, b)).unwrap()
}

/// A permutation of {0,1,2,3} stored as its image word.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    pub fn new(img: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &v in &img {
            if v > 3 || seen[v as usize] {
                return Err(Error::Invalid(format!("not a permutation: {img:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(Perm4(img))
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize]
    }

    pub fn inverse(&self) -> Perm4 {
        let mut img = [0u8; 4];
        for i in 0..4 {
            img[self.0[i] as usize] = i as u8;
        }
        Perm4(img)
    }

    /// (self ∘ other): apply `other` first.
    pub fn compose(&self, other: &Perm4) -> Perm4 {
        let mut img = [0u8; 4];
        for i in 0..4 {
            img[i] = self.0[other.0[i] as usize];
        }
        Perm4(img)
    }

    pub fn word(&self) -> [u8; 4] {
        self.0
    }

    /// +1 for even, -1 for odd.
    pub fn sign(&self) -> i8 {
        let mut inv = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn all() -> impl Iterator<Item = Perm4> {
        let mut perms = Vec::with_capacity(24);
        let mut items = [0u8, 1, 2, 3];
        fn rec(items: &mut [u8; 4], k: usize, out: &mut Vec<Perm4>) {
            if k == 4 {
                out.push(Perm4(*items));
                return;
            }
            for i in k..4 {
                items.swap(k, i);
                rec(items, k + 1, out);
                items.swap(k, i);
            }
        }
        rec(&mut items, 0, &mut perms);
        perms.sort();
        perms.into_iter()
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Gluing {
    pub tet: usize,
    pub face: u8,
    pub perm: Perm4,
}

#[derive(Debug)]
pub struct Triangulation {
    gluings: Vec<[Option<Gluing>; 4]>,
    skeleton: OnceLock<Skeleton>,
}

impl Clone for Triangulation {
    fn clone(&self) -> Self {
        Triangulation { gluings: self.gluings.clone(), skeleton: OnceLock::new() }
    }
}

impl Triangulation {
    pub fn new(tet_count: usize) -> Self {
        Triangulation { gluings: vec![[None; 4]; tet_count], skeleton: OnceLock::new() }
    }

    pub fn tet_count(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluing(&self, tet: usize, face: u8) -> Option<&Gluing> {
        self.gluings[tet][face as usize].as_ref()
    }

    pub fn add_tet(&mut self) -> usize {
        self.skeleton = OnceLock::new();
        self.gluings.push([None; 4]);
        self.gluings.len() - 1
    }

    /// Glue face `f` of `t` to face `f2` of `t2` via `perm` (and record the
    /// inverse pairing). Requires `perm(f) == f2` and both faces free.
    pub fn add_gluing(&mut self, t: usize, f: u8, t2: usize, f2: u8, perm: Perm4) -> Result<()> {
        if t >= self.gluings.len() || t2 >= self.gluings.len() || f > 3 || f2 > 3 {
            return Err(Error::Invalid(format!("gluing {t}:{f} <-> {t2}:{f2} out of range")));
        }
        if perm.apply(f) != f2 {
            return Err(Error::Invalid(format!(
                "permutation {perm} does not carry face {f} to face {f2}"
            )));
        }
        if t == t2 && f == f2 {
            return Err(Error::Invalid("cannot glue a face to itself".into()));
        }
        if self.gluings[t][f as usize].is_some() || self.gluings[t2][f2 as usize].is_some() {
            return Err(Error::Invalid(format!(
                "face already glued: {t}:{f} or {t2}:{f2} (pairings must be monogamous)"
            )));
        }
        self.skeleton = OnceLock::new();
        self.gluings[t][f as usize] = Some(Gluing { tet: t2, face: f2, perm });
        self.gluings[t2][f2 as usize] = Some(Gluing { tet: t, face: f, perm: perm.inverse() });
        Ok(())
    }

    pub fn boundary_faces(&self) -> Vec<(usize, u8)> {
        let mut out = Vec::new();
        for (t, faces) in self.gluings.iter().enumerate() {
            for f in 0..4u8 {
                if faces[f as usize].is_none() {
                    out.push((t, f));
                }
            }
        }
        out
    }

    pub fn skeleton(&self) -> &Skeleton {
        self.skeleton.get_or_init(|| Skeleton::compute(self))
    }

    pub fn validate(&self) -> SkeletonReport {
        self.skeleton().report(self)
    }

    /// Attach a new tetrahedron over the two distinct boundary triangles
    /// adjacent to boundary edge class `e`. The new tetrahedron's edge 01
    /// lies along `e` and edge 23 becomes the new univalent boundary edge.
    /// Of the two attachment directions we keep the lexicographically
    /// smaller permutation pair; both give isomorphic results.
    pub fn layer_on_boundary_edge(&self, e: usize) -> Result<Triangulation> {
        let (fwd, alt) = (self.layering_gluings(e, false)?, self.layering_gluings(e, true)?);
        let chosen = if (fwd.0 .2, fwd.1 .2) <= (alt.0 .2, alt.1 .2) { fwd } else { alt };
        self.apply_layering(chosen)
    }

    /// Same construction with the opposite attachment direction; used to
    /// check that both choices agree up to isomorphism.
    pub fn layer_on_boundary_edge_flipped(&self, e: usize) -> Result<Triangulation> {
        let (fwd, alt) = (self.layering_gluings(e, false)?, self.layering_gluings(e, true)?);
        let other = if (fwd.0 .2, fwd.1 .2) <= (alt.0 .2, alt.1 .2) { alt } else { fwd };
        self.apply_layering(other)
    }

    /// The two boundary face slots adjacent to `e` together with directed
    /// representatives of `e` inside them.
    fn layering_sides(&self, e: usize) -> Result<[(usize, u8, (u8, u8), u8); 2]> {
        let sk = self.skeleton();
        let info = sk
            .edge_classes
            .get(e)
            .ok_or_else(|| Error::Invalid(format!("no edge class {e}")))?;
        if !info.boundary {
            return Err(Error::NotLayerableEdge(e));
        }
        let mut sides = Vec::new();
        for (t, f) in self.boundary_faces() {
            for (a, b) in face_edges(f) {
                let slot = t * 6 + edge_slot(a, b);
                if sk.edge_class[slot] == e {
                    // Direct (a,b) by the class parity so both sides agree.
                    let (u, v) = if sk.edge_parity[slot] { (b, a) } else { (a, b) };
                    let w = face_third_vertex(f, u, v);
                    sides.push((t, f, (u, v), w));
                }
            }
        }
        if sides.len() != 2 || (sides[0].0, sides[0].1) == (sides[1].0, sides[1].1) {
            return Err(Error::NotLayerableEdge(e));
        }
        Ok([sides[0], sides[1]])
    }

    fn layering_gluings(
        &self,
        e: usize,
        flip: bool,
    ) -> Result<((usize, u8, Perm4), (usize, u8, Perm4))> {
        let [s1, s2] = self.layering_sides(e)?;
        let dir = |s: (usize, u8, (u8, u8), u8)| {
            let (t, f, (u, v), w) = s;
            if flip {
                (t, f, (v, u), w)
            } else {
                (t, f, (u, v), w)
            }
        };
        let (t1, f1, (u1, v1), w1) = dir(s1);
        let (t2, f2, (u2, v2), w2) = dir(s2);
        // New tetrahedron: edge 01 -> e, face 3 ({0,1,2}) covers side 1,
        // face 2 ({0,1,3}) covers side 2, faces 0 and 1 stay free.
        let mut img1 = [0u8; 4];
        img1[0] = u1;
        img1[1] = v1;
        img1[2] = w1;
        img1[3] = f1;
        let mut img2 = [0u8; 4];
        img2[0] = u2;
        img2[1] = v2;
        img2[3] = w2;
        img2[2] = f2;
        Ok(((t1, f1, Perm4::new(img1)?), (t2, f2, Perm4::new(img2)?)))
    }

    fn apply_layering(
        &self,
        g: ((usize, u8, Perm4), (usize, u8, Perm4)),
    ) -> Result<Triangulation> {
        let mut out = self.clone();
        let n = out.add_tet();
        let ((t1, f1, p1), (t2, f2, p2)) = g;
        out.add_gluing(n, 3, t1, f1, p1)?;
        out.add_gluing(n, 2, t2, f2, p2)?;
        Ok(out)
    }

    /// Identify the two boundary faces of a one-vertex torus boundary by
    /// the simplicial involution fixing the boundary edge class `e`; the
    /// result is closed. Equivalent to gluing the boundary to the
    /// one-triangle M\u{f6}bius band along `e`.
    pub fn fold(&self, e: usize) -> Result<Triangulation> {
        self.require_torus_boundary()?;
        let [s1, s2] = self.layering_sides(e)?;
        let (t1, f1, (u1, v1), w1) = s1;
        let (t2, f2, (u2, v2), w2) = s2;
        let mut img = [0u8; 4];
        img[u1 as usize] = u2;
        img[v1 as usize] = v2;
        img[w1 as usize] = w2;
        img[f1 as usize] = f2;
        let mut out = self.clone();
        out.add_gluing(t1, f1, t2, f2, Perm4::new(img)?)?;
        Ok(out)
    }

    /// Attach a one-tetrahedron collapsed filling over the boundary torus:
    /// the boundary edge class `e` becomes the slope bounding a disk in the
    /// new cell, and the other two boundary edges are identified.
    pub fn pinch(&self, e: usize) -> Result<Triangulation> {
        self.require_torus_boundary()?;
        let [s1, s2] = self.layering_sides(e)?;
        let (t1, f1, (u1, v1), w1) = s1;
        let (t2, f2, (u2, v2), w2) = s2;
        let mut out = self.clone();
        let c = out.add_tet();
        // Cell tetrahedron abcd = 0123 with faces 012 <-> 312 self-glued;
        // its boundary faces are 013 (face 2) and 023 (face 1), sharing the
        // edge 03 which carries the pinched slope.
        out.add_gluing(c, 3, c, 0, Perm4::new([3, 1, 2, 0])?)?;
        // Face 2 of the cell ({0,1,3}) covers side 1 with 03 along e.
        let mut i1 = [0u8; 4];
        i1[0] = u1;
        i1[3] = v1;
        i1[1] = w1;
        i1[2] = f1;
        out.add_gluing(c, 2, t1, f1, Perm4::new(i1)?)?;
        // Face 1 of the cell ({0,2,3}) covers side 2 with 03 along e.
        let mut i2 = [0u8; 4];
        i2[0] = u2;
        i2[3] = v2;
        i2[2] = w2;
        i2[1] = f2;
        out.add_gluing(c, 1, t2, f2, Perm4::new(i2)?)?;
        Ok(out)
    }

    fn require_torus_boundary(&self) -> Result<()> {
        let sk = self.skeleton();
        let bd = sk.boundary_components(self);
        if bd.len() != 1 {
            return Err(Error::BoundaryNotTorus(format!("{} boundary components", bd.len())));
        }
        let c = &bd[0];
        if c.kind != SurfaceKind::Torus || c.faces != 2 || c.vertices != 1 {
            return Err(Error::BoundaryNotTorus(format!(
                "component has {} faces, {} vertices, chi {}",
                c.faces, c.vertices, c.euler
            )));
        }
        Ok(())
    }

    /// Glue the torus boundaries of two triangulations by the simplicial
    /// isomorphism matching boundary edge classes per `corr` (pairs of
    /// edge class ids, left in `self`, right in `other`). When both sides
    /// are oriented the identification must reverse orientation across the
    /// surface.
    pub fn glue_boundaries(&self, other: &Triangulation, corr: [(usize, usize); 3]) -> Result<Triangulation> {
        self.require_torus_boundary()?;
        other.require_torus_boundary()?;
        let a_faces = self.boundary_faces();
        let b_faces = other.boundary_faces();
        let target = |a_class: usize| -> Result<usize> {
            corr.iter()
                .find(|&&(ac, _)| ac == a_class)
                .map(|&(_, bc)| bc)
                .ok_or(Error::BadCorrespondence)
        };

        let mut candidates = Vec::new();
        for assign in [[0usize, 1], [1, 0]] {
            match self.boundary_gluing_for(other, &a_faces, &b_faces, assign, &target) {
                Ok(gs) => candidates.push(gs),
                Err(_) => continue,
            }
        }
        if candidates.is_empty() {
            return Err(Error::BadCorrespondence);
        }
        // Prefer an orientation-reversing identification.
        let pick = candidates
            .iter()
            .find(|gs| self.gluing_reverses_orientation(other, gs))
            .ok_or(Error::BadCorrespondence)?;

        let mut out = Triangulation::new(self.tet_count() + other.tet_count());
        let off = self.tet_count();
        for (t, faces) in self.gluings.iter().enumerate() {
            for f in 0..4u8 {
                if let Some(g) = faces[f as usize] {
                    if (g.tet, g.face) >= (t, f) {
                        out.add_gluing(t, f, g.tet, g.face, g.perm)?;
                    }
                }
            }
        }
        for (t, faces) in other.gluings.iter().enumerate() {
            for f in 0..4u8 {
                if let Some(g) = faces[f as usize] {
                    if (g.tet, g.face) >= (t, f) {
                        out.add_gluing(t + off, f, g.tet + off, g.face, g.perm)?;
                    }
                }
            }
        }
        for &((ta, fa), (tb, fb), p) in pick {
            out.add_gluing(ta, fa, tb + off, fb, p)?;
        }
        Ok(out)
    }

    fn boundary_gluing_for(
        &self,
        other: &Triangulation,
        a_faces: &[(usize, u8)],
        b_faces: &[(usize, u8)],
        assign: [usize; 2],
        target: &dyn Fn(usize) -> Result<usize>,
    ) -> Result<Vec<((usize, u8), (usize, u8), Perm4)>> {
        let ska = self.skeleton();
        let skb = other.skeleton();
        let mut gluings = Vec::new();
        // The corner bijection on each face is forced: a corner is the
        // meeting point of two sides, and sides must match up by edge
        // class. What remains to check is that the two face maps induce
        // the same direction on every shared boundary edge class.
        let mut class_dir: std::collections::HashMap<usize, bool> = std::collections::HashMap::new();
        for (i, &(ta, fa)) in a_faces.iter().enumerate() {
            let (tb, fb) = b_faces[assign[i]];
            let a_class = |x: u8, y: u8| ska.edge_class[ta * 6 + edge_slot(x, y)];
            let b_class = |x: u8, y: u8| skb.edge_class[tb * 6 + edge_slot(x, y)];
            let avs = face_vertices(fa);
            let bvs = face_vertices(fb);
            let mut img = [u8::MAX; 4];
            img[fa as usize] = fb;
            for &u in &avs {
                let ao: Vec<u8> = avs.iter().copied().filter(|&w| w != u).collect();
                let c1 = target(a_class(u, ao[0]))?;
                let c2 = target(a_class(u, ao[1]))?;
                let mut found = None;
                for &w in &bvs {
                    let bo: Vec<u8> = bvs.iter().copied().filter(|&z| z != w).collect();
                    let d1 = b_class(w, bo[0]);
                    let d2 = b_class(w, bo[1]);
                    if (d1 == c1 && d2 == c2) || (d1 == c2 && d2 == c1) {
                        found = Some(w);
                        break;
                    }
                }
                img[u as usize] = found.ok_or(Error::BadCorrespondence)?;
            }
            let p = Perm4::new(img).map_err(|_| Error::BadCorrespondence)?;
            for (x, y) in face_edges(fa) {
                let slot_a = ta * 6 + edge_slot(x, y);
                let ca = ska.edge_class[slot_a];
                let (ua, va) = if ska.edge_parity[slot_a] { (y, x) } else { (x, y) };
                let (iu, iv) = (p.apply(ua), p.apply(va));
                let slot_b = tb * 6 + edge_slot(iu, iv);
                let fwd_b = if iu < iv { !skb.edge_parity[slot_b] } else { skb.edge_parity[slot_b] };
                if let Some(prev) = class_dir.insert(ca, fwd_b) {
                    if prev != fwd_b {
                        return Err(Error::BadCorrespondence);
                    }
                }
            }
            gluings.push(((ta, fa), (tb, fb), p));
        }
        Ok(gluings)
    }

    fn gluing_reverses_orientation(
        &self,
        other: &Triangulation,
        gluings: &[((usize, u8), (usize, u8), Perm4)],
    ) -> bool {
        let (ok_a, sign_a) = self.skeleton().orientation(self);
        let (ok_b, sign_b) = other.skeleton().orientation(other);
        if !ok_a || !ok_b {
            return true; // nothing to check when a side is unoriented
        }
        gluings.iter().all(|&((ta, fa), (tb, fb), p)| {
            let ea = sign_a[ta] * face_parity(fa);
            let eb = sign_b[tb] * face_parity(fb);
            // The face map reverses the induced surface orientations iff
            // the overall simplicial map preserves 3-dimensional
            // orientation conventions: epsilon_a * sgn(p) == eb.
            ea * p.sign() == eb
        })
    }
}

/// Sign of the induced boundary orientation of face `f` in an oriented
/// tetrahedron.
fn face_parity(f: u8) -> i8 {
    if f % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The three edges (vertex pairs) of face `f`.
pub fn face_edges(f: u8) -> [(u8, u8); 3] {
    let vs = face_vertices(f);
    [(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])]
}

/// Vertices of face `f` (everything but `f`), ascending.
pub fn face_vertices(f: u8) -> [u8; 3] {
    let mut out = [0u8; 3];
    let mut k = 0;
    for v in 0..4u8 {
        if v != f {
            out[k] = v;
            k += 1;
        }
    }
    out
}

fn face_third_vertex(f: u8, u: u8, v: u8) -> u8 {
    face_vertices(f).into_iter().find(|&w| w != u && w != v).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One-tetrahedron solid torus: abc glued to bcd (a->b, b->c, c->d).
    pub(crate) fn one_tet_torus() -> Triangulation {
        let mut t = Triangulation::new(1);
        t.add_gluing(0, 3, 0, 0, Perm4::new([1, 2, 3, 0]).unwrap()).unwrap();
        t
    }

    #[test]
    fn perm_basics() {
        let p = Perm4::new([1, 2, 3, 0]).unwrap();
        assert_eq!(p.inverse().word(), [3, 0, 1, 2]);
        assert_eq!(p.sign(), -1);
        assert_eq!(Perm4::all().count(), 24);
        assert!(Perm4::new([0, 0, 1, 2]).is_err());
    }

    #[test]
    fn one_tet_torus_skeleton() {
        let t = one_tet_torus();
        let r = t.validate();
        assert_eq!(r.vertices, 1);
        assert_eq!(r.edges, 3);
        assert_eq!(r.faces, 3);
        assert_eq!(r.boundary_faces, 2);
        assert!(matches!(r.manifold, ManifoldVerdict::Manifold { closed: false }));
        assert_eq!(r.euler, 0);
        assert_eq!(r.boundary.len(), 1);
        assert_eq!(r.boundary[0].kind, SurfaceKind::Torus);
    }

    #[test]
    fn monogamy_enforced() {
        let mut t = Triangulation::new(2);
        t.add_gluing(0, 0, 1, 0, Perm4::new([1, 0, 2, 3]).unwrap().inverse()).ok();
        // face (0,0) already used
        assert!(t
            .add_gluing(0, 0, 1, 1, Perm4::new([2, 1, 0, 3]).unwrap())
            .is_err());
    }

    #[test]
    fn layering_gives_diagonal_flip() {
        let t = one_tet_torus();
        let sk = t.skeleton();
        let before: std::collections::BTreeSet<usize> = t
            .boundary_faces()
            .iter()
            .flat_map(|&(tt, f)| face_edges(f).map(|(a, b)| sk.edge_class[tt * 6 + edge_slot(a, b)]))
            .collect();
        let e = *before.iter().next().unwrap();
        let t2 = t.layer_on_boundary_edge(e).unwrap();
        let r = t2.validate();
        assert_eq!(t2.tet_count(), 2);
        assert_eq!(r.vertices, 1);
        assert_eq!(r.edges, 4);
        assert_eq!(r.boundary_faces, 2);
        assert!(matches!(r.manifold, ManifoldVerdict::Manifold { closed: false }));
        // exactly one old boundary edge class was buried
        let sk2 = t2.skeleton();
        let after: std::collections::BTreeSet<usize> = t2
            .boundary_faces()
            .iter()
            .flat_map(|&(tt, f)| {
                face_edges(f).map(|(a, b)| sk2.edge_class[tt * 6 + edge_slot(a, b)])
            })
            .collect();
        assert_eq!(after.len(), 3);
    }

    #[test]
    fn layering_attachment_choices_isomorphic() {
        let t = one_tet_torus();
        let sk = t.skeleton();
        for e in 0..sk.edge_classes.len() {
            if !sk.edge_classes[e].boundary {
                continue;
            }
            if t.layering_sides(e).is_err() {
                continue;
            }
            let a = t.layer_on_boundary_edge(e).unwrap();
            let b = t.layer_on_boundary_edge_flipped(e).unwrap();
            assert!(isomorphic(&a, &b, 16).unwrap());
        }
    }

    #[test]
    fn fold_one_tet_on_univalent_edge_gives_small_closed_manifold() {
        // Folding over the boundary edge that meets the meridian disk three
        // times closes the one-tetrahedron solid torus into a 2-edge,
        // 1-vertex closed manifold with trivial first homology.
        let t = one_tet_torus();
        let sk = t.skeleton();
        // class of edge {0,3} is the univalent one
        let e = sk.edge_class[0 * 6 + edge_slot(0, 3)];
        let closed = t.fold(e).unwrap();
        let r = closed.validate();
        assert!(matches!(r.manifold, ManifoldVerdict::Manifold { closed: true }));
        assert_eq!(r.vertices, 1);
        assert_eq!(r.edges, 2);
        let h = homology_h1(&closed);
        assert_eq!(h.order(), Some(1));
    }
}
