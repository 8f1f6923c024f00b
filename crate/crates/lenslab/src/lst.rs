//! Symbolic layered solid tori.
//!
//! A layered solid torus is recorded as the ordered list of boundary-edge
//! slots layered over, starting from the one-triangle M\u{f6}bius base whose
//! meridian triple is (1,1,2): slots 0 and 1 both name the center edge,
//! slot 2 the rim. Levels carry the meridian triple after each move, and
//! per-edge records track meridian counts and preferred boundary slopes.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::slope::{canonical_fraction, lgraph_minimal_path, LVertex, SlopeTriple};
use crate::tri::{edge_slot, Perm4, Triangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId {
    pub level: usize,
    pub slot: usize,
}

impl std::fmt::Display for EdgeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.level, self.slot)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRecord {
    pub id: EdgeId,
    pub meridian_count: BigUint,
    pub thick: bool,
    pub univalent: bool,
    /// Interior of the final complex, or still on the boundary.
    pub interior: bool,
    /// Preferred slope on the final boundary. For boundary edges this is
    /// the (0,1,1)-pattern at the edge's slot; for interior edges the
    /// pattern at the covering level pushed through the remaining moves.
    pub final_slope: SlopeTriple,
    /// Boundary slots currently held (empty when interior).
    pub slots: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredPath {
    moves: Vec<usize>,
    levels: Vec<SlopeTriple>,
    edges: Vec<EdgeRecord>,
}

fn base_triple() -> SlopeTriple {
    SlopeTriple::with_sum_index([BigUint::one(), BigUint::one(), BigUint::from(2u32)], 2).unwrap()
}

fn slot_pattern(slot: usize) -> SlopeTriple {
    let mut e = [BigUint::one(), BigUint::one(), BigUint::one()];
    e[slot] = BigUint::from(0u32);
    let sum = (0..3).find(|&k| k != slot).unwrap();
    SlopeTriple::with_sum_index(e, sum).unwrap()
}

impl LayeredPath {
    pub fn from_moves(moves: &[usize]) -> Result<LayeredPath> {
        if moves.iter().any(|&s| s > 2) {
            return Err(Error::Invalid("layering slots are 0, 1 or 2".into()));
        }
        let mut levels = vec![base_triple()];
        for &s in moves {
            let next = levels.last().unwrap().push_through(s);
            levels.push(next);
        }

        // Replay the moves to build the edge records.
        let center = EdgeRecord {
            id: EdgeId { level: 0, slot: 0 },
            meridian_count: BigUint::one(),
            thick: true,
            univalent: false,
            interior: false,
            final_slope: slot_pattern(0),
            slots: vec![0, 1],
        };
        let rim = EdgeRecord {
            id: EdgeId { level: 0, slot: 2 },
            meridian_count: BigUint::from(2u32),
            thick: false,
            univalent: false,
            interior: false,
            final_slope: slot_pattern(2),
            slots: vec![2],
        };
        let mut edges = vec![center, rim];
        // Pending interior slopes are pushed through each later move.
        for (k, &s) in moves.iter().enumerate() {
            let level = k + 1;
            for rec in edges.iter_mut() {
                if rec.interior {
                    rec.final_slope = rec.final_slope.push_through(s);
                } else if let Some(pos) = rec.slots.iter().position(|&x| x == s) {
                    rec.slots.remove(pos);
                    if rec.slots.is_empty() {
                        rec.interior = true;
                        rec.final_slope = slot_pattern(s).push_through(s);
                    }
                }
            }
            edges.push(EdgeRecord {
                id: EdgeId { level, slot: s },
                meridian_count: levels[level].entry(s).clone(),
                thick: false,
                univalent: false,
                interior: false,
                final_slope: slot_pattern(s),
                slots: vec![s],
            });
        }
        // Boundary slopes read off the final slot; the univalent edge is
        // the one the last move created (the rim for the bare base).
        for rec in edges.iter_mut() {
            if !rec.interior {
                rec.final_slope = slot_pattern(rec.slots[0]);
            }
        }
        let univalent_id = match moves.last() {
            Some(&s) => EdgeId { level: moves.len(), slot: s },
            None => EdgeId { level: 0, slot: 2 },
        };
        for rec in edges.iter_mut() {
            rec.univalent = rec.id == univalent_id;
        }
        Ok(LayeredPath { moves: moves.to_vec(), levels, edges })
    }

    /// The minimal layered solid torus extending the p/q boundary class.
    pub fn build_minimal(v: &LVertex) -> Result<LayeredPath> {
        LayeredPath::build_from_path(&lgraph_minimal_path(v))
    }

    /// Build along an explicit path of boundary classes ending at 1/1,
    /// read in reverse for construction.
    pub fn build_from_path(path: &[LVertex]) -> Result<LayeredPath> {
        let last = path.last().ok_or(Error::PathDoesNotEndAtBase)?;
        if !last.is_base() {
            return Err(Error::PathDoesNotEndAtBase);
        }
        let mut moves = Vec::with_capacity(path.len() - 1);
        let mut cur = base_triple();
        for target in path.iter().rev().skip(1) {
            let mut found = None;
            for s in 0..3 {
                if &canonical_fraction(&cur.push_through(s)) == target {
                    found = Some(s);
                    break;
                }
            }
            let s = found.ok_or_else(|| {
                Error::NotAdjacent(canonical_fraction(&cur).to_string(), target.to_string())
            })?;
            cur = cur.push_through(s);
            moves.push(s);
        }
        LayeredPath::from_moves(&moves)
    }

    /// Append one layering move.
    pub fn layer(&self, slot: usize) -> Result<LayeredPath> {
        let mut moves = self.moves.clone();
        moves.push(slot);
        LayeredPath::from_moves(&moves)
    }

    pub fn moves(&self) -> &[usize] {
        &self.moves
    }

    pub fn tet_count(&self) -> usize {
        self.moves.len()
    }

    pub fn levels(&self) -> &[SlopeTriple] {
        &self.levels
    }

    /// Meridian triple on the final boundary.
    pub fn meridian(&self) -> &SlopeTriple {
        self.levels.last().unwrap()
    }

    pub fn fraction(&self) -> LVertex {
        canonical_fraction(self.meridian())
    }

    /// Starts by layering over the M\u{f6}bius rim (slot 2), so the base is
    /// the creased cell rather than the one-tetrahedron solid torus.
    pub fn creased_base(&self) -> bool {
        self.moves.first() == Some(&2)
    }

    /// M\u{f6}bius alone, or creased base: not a genuine solid torus
    /// triangulation.
    pub fn degenerate(&self) -> bool {
        self.moves.is_empty() || (self.creased_base() && self.moves.len() == 1)
    }

    pub fn edge_table(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn univalent_slot(&self) -> Option<usize> {
        self.moves.last().copied()
    }

    /// The slot on the final boundary holding the thick edge, if it is
    /// still a boundary edge.
    pub fn thick_slot(&self) -> Option<usize> {
        self.edges[0].slots.first().copied()
    }

    /// Nearly minimal: no edge's preferred slope is the meridian slope,
    /// and no two thin edges share a preferred slope.
    pub fn is_nearly_minimal(&self) -> NearlyMinimal {
        let meridian = self.meridian();
        let mut meridian_edges = Vec::new();
        for rec in &self.edges {
            if rec.final_slope == *meridian {
                meridian_edges.push(rec.id);
            }
        }
        let mut duplicate_pairs = Vec::new();
        let thin: Vec<&EdgeRecord> = self.edges.iter().filter(|r| !r.thick).collect();
        for i in 0..thin.len() {
            for j in i + 1..thin.len() {
                if thin[i].final_slope == thin[j].final_slope {
                    duplicate_pairs.push((thin[i].id, thin[j].id));
                }
            }
        }
        NearlyMinimal { meridian_edges, duplicate_pairs }
    }

    /// Materialize as a face-pairing triangulation, mapping the three final
    /// boundary slots and every edge record to edge classes.
    ///
    /// A path that stays on the creased cell (first two moves both on slot
    /// 2) produces the raw face-pairing complex; `tri::validate` is the
    /// arbiter of what that complex is.
    pub fn materialize(&self) -> Result<MaterializedLst> {
        if self.moves.is_empty() {
            return Err(Error::EmptyPath);
        }
        let mut rec_reps: Vec<(usize, (u8, u8))> = Vec::with_capacity(self.edges.len());
        let mut sl: [(usize, (u8, u8)); 3];
        let mut tri;
        let consumed;
        let m0 = self.moves[0];
        if m0 < 2 {
            // One-tetrahedron solid torus: faces 012 <-> 123 via 0->1->2->3.
            tri = Triangulation::new(1);
            tri.add_gluing(0, 3, 0, 0, Perm4::new([1, 2, 3, 0])?)?;
            sl = [(0, (1, 2)); 3];
            sl[m0] = (0, (0, 3));
            sl[2] = (0, (0, 2));
            rec_reps.push((0, (1, 2))); // center
            rec_reps.push((0, (0, 2))); // rim
            rec_reps.push((0, (0, 3))); // new univalent edge
            consumed = 1;
        } else if self.moves.len() >= 2 && self.moves[1] < 2 {
            // Two-tetrahedron extension of the 0/1 boundary class: the
            // creased base followed by a layering over a count-1 edge.
            tri = two_tet_zero_one()?;
            let m1 = self.moves[1];
            sl = [(1, (0, 3)); 3];
            sl[m1] = (1, (0, 2));
            sl[2] = (1, (2, 3));
            rec_reps.push((1, (0, 3))); // center
            rec_reps.push((0, (2, 3))); // rim, now interior
            rec_reps.push((1, (2, 3))); // the count-0 edge
            rec_reps.push((1, (0, 2))); // univalent
            consumed = 2;
        } else {
            // Bare creased cell, with the fold of the rim onto itself
            // captured as a self-identified reversed edge.
            tri = Triangulation::new(1);
            tri.add_gluing(0, 3, 0, 0, Perm4::new([3, 2, 1, 0])?)?;
            sl = [(0, (0, 1)), (0, (0, 2)), (0, (0, 3))];
            rec_reps.push((0, (0, 1))); // center (split in the raw complex)
            rec_reps.push((0, (1, 2))); // rim = the crease
            rec_reps.push((0, (0, 3))); // the count-0 edge
            consumed = 1;
        }
        for &s in &self.moves[consumed..] {
            let e = {
                let sk = tri.skeleton();
                let (t, (a, b)) = sl[s];
                sk.edge_class[t * 6 + edge_slot(a, b)]
            };
            tri = tri.layer_on_boundary_edge(e)?;
            let n = tri.tet_count() - 1;
            sl[s] = (n, (2, 3));
            rec_reps.push((n, (2, 3)));
        }
        debug_assert_eq!(rec_reps.len(), self.edges.len());
        let (record_classes, slot_classes) = resolve(&tri, &rec_reps, &sl);
        Ok(MaterializedLst { tri, slot_classes, record_classes, slot_reps: sl, record_reps: rec_reps })
    }
}

#[derive(Debug, Clone)]
pub struct NearlyMinimal {
    pub meridian_edges: Vec<EdgeId>,
    pub duplicate_pairs: Vec<(EdgeId, EdgeId)>,
}

impl NearlyMinimal {
    pub fn holds(&self) -> bool {
        self.meridian_edges.is_empty() && self.duplicate_pairs.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct MaterializedLst {
    pub tri: Triangulation,
    /// Edge class of each final boundary slot.
    pub slot_classes: [usize; 3],
    /// Edge class of each record in `edge_table()` order.
    pub record_classes: Vec<usize>,
    slot_reps: [(usize, (u8, u8)); 3],
    record_reps: Vec<(usize, (u8, u8))>,
}

impl MaterializedLst {
    /// Re-resolve the slot and record classes on a derived triangulation
    /// that shares this one's tetrahedron labels (e.g. after folding).
    pub fn resolve_on(&self, tri: &Triangulation) -> (Vec<usize>, [usize; 3]) {
        resolve(tri, &self.record_reps, &self.slot_reps)
    }
}

fn resolve(
    tri: &Triangulation,
    rec_reps: &[(usize, (u8, u8))],
    sl: &[(usize, (u8, u8)); 3],
) -> (Vec<usize>, [usize; 3]) {
    let sk = tri.skeleton();
    let class = |&(t, (a, b)): &(usize, (u8, u8))| sk.edge_class[t * 6 + edge_slot(a, b)];
    let record_classes = rec_reps.iter().map(class).collect();
    let slot_classes = [class(&sl[0]), class(&sl[1]), class(&sl[2])];
    (record_classes, slot_classes)
}

/// The two-tetrahedron layered extension of the 0/1 boundary class. The
/// creased base's fold is absorbed by the second layer's face pairings;
/// folding its boundary edges yields |H1| = 2, 1, 1 respectively for the
/// count-0 edge, the thick edge and the univalent edge.
fn two_tet_zero_one() -> Result<Triangulation> {
    let mut tri = Triangulation::new(2);
    tri.add_gluing(0, 0, 0, 1, Perm4::new([1, 0, 2, 3])?)?;
    tri.add_gluing(0, 2, 1, 2, Perm4::new([0, 1, 2, 3])?)?;
    tri.add_gluing(0, 3, 1, 0, Perm4::new([3, 2, 1, 0])?)?;
    Ok(tri)
}
