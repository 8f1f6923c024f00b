//! First homology from the 2-skeleton: generators are edge classes,
//! relations are face classes, with a spanning forest of the vertex graph
//! contracted first. Invariant factors come from the Smith normal form.

use super::Triangulation;
use crate::tri::{edge_slot, face_vertices};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1 {
    pub free_rank: usize,
    /// Invariant factors > 1, each dividing the next.
    pub torsion: Vec<u128>,
}

impl H1 {
    /// Group order; `None` when infinite.
    pub fn order(&self) -> Option<u128> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for H1 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn homology_h1(tri: &Triangulation) -> H1 {
    let sk = tri.skeleton();
    let n_edges = sk.edge_classes.len();
    let n_verts = sk.vertex_classes.len();

    // Spanning forest over (vertex classes, edge classes).
    let mut parent: Vec<usize> = (0..n_verts).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] == x {
            return x;
        }
        let r = find(parent, parent[x]);
        parent[x] = r;
        r
    }
    let mut in_forest = vec![false; n_edges];
    for (c, info) in sk.edge_classes.iter().enumerate() {
        let (t, a, b) = info.rep;
        let va = sk.vertex_class[t * 4 + a as usize];
        let vb = sk.vertex_class[t * 4 + b as usize];
        let (ra, rb) = (find(&mut parent, va), find(&mut parent, vb));
        if ra != rb {
            parent[rb] = ra;
            in_forest[c] = true;
        }
    }
    let gen_index: Vec<Option<usize>> = {
        let mut k = 0;
        in_forest
            .iter()
            .map(|&f| {
                if f {
                    None
                } else {
                    k += 1;
                    Some(k - 1)
                }
            })
            .collect()
    };
    let n_gens = gen_index.iter().filter(|g| g.is_some()).count();

    // Boundary of each face class against the surviving generators.
    let mut cols: Vec<Vec<i128>> = Vec::with_capacity(sk.face_count);
    for &(t, f) in &sk.face_reps {
        let vs = face_vertices(f);
        let mut col = vec![0i128; n_gens];
        // boundary of [v0,v1,v2] = [v1,v2] - [v0,v2] + [v0,v1]
        let signed = [(vs[1], vs[2], 1i128), (vs[0], vs[2], -1), (vs[0], vs[1], 1)];
        for (a, b, s) in signed {
            let slot = t * 6 + edge_slot(a, b);
            let class = sk.edge_class[slot];
            if let Some(g) = gen_index[class] {
                let flip = if sk.edge_parity[slot] { -1 } else { 1 };
                col[g] += s * flip;
            }
        }
        cols.push(col);
    }

    let mut m = Matrix { rows: n_gens, cols: cols.len(), a: cols };
    let diag = smith_diagonal(&mut m);
    let rank = diag.len();
    H1 {
        free_rank: n_gens - rank,
        torsion: diag.into_iter().filter(|&d| d > 1).collect(),
    }
}

/// Column-major integer matrix.
struct Matrix {
    rows: usize,
    cols: usize,
    a: Vec<Vec<i128>>, // a[c][r]
}

impl Matrix {
    fn get(&self, r: usize, c: usize) -> i128 {
        self.a[c][r]
    }
    fn swap_rows(&mut self, r1: usize, r2: usize) {
        for c in 0..self.cols {
            self.a[c].swap(r1, r2);
        }
    }
    fn swap_cols(&mut self, c1: usize, c2: usize) {
        self.a.swap(c1, c2);
    }
    /// row r1 += k * row r2
    fn add_row(&mut self, r1: usize, r2: usize, k: i128) {
        for c in 0..self.cols {
            let v = self.a[c][r2];
            self.a[c][r1] += k * v;
        }
    }
    /// col c1 += k * col c2
    fn add_col(&mut self, c1: usize, c2: usize, k: i128) {
        for r in 0..self.rows {
            let v = self.a[c2][r];
            self.a[c1][r] += k * v;
        }
    }
    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            self.a[c][r] = -self.a[c][r];
        }
    }
}

/// Nonzero diagonal of the Smith normal form, each entry dividing the next.
fn smith_diagonal(m: &mut Matrix) -> Vec<u128> {
    let mut diag = Vec::new();
    let mut k = 0;
    while k < m.rows && k < m.cols {
        // Find a pivot of minimal absolute value in the remaining block.
        let mut pivot: Option<(usize, usize, i128)> = None;
        for r in k..m.rows {
            for c in k..m.cols {
                let v = m.get(r, c);
                if v != 0 && pivot.map_or(true, |(_, _, pv)| v.abs() < pv.abs()) {
                    pivot = Some((r, c, v));
                }
            }
        }
        let Some((pr, pc, _)) = pivot else { break };
        m.swap_rows(k, pr);
        m.swap_cols(k, pc);
        loop {
            let p = m.get(k, k);
            // Any entry not divisible by the pivot yields a smaller pivot;
            // restart with it so |pivot| strictly decreases.
            if let Some(r) = (k + 1..m.rows).find(|&r| m.get(r, k) % p != 0) {
                let q = m.get(r, k).div_euclid(p);
                m.add_row(r, k, -q);
                m.swap_rows(k, r);
                continue;
            }
            if let Some(c) = (k + 1..m.cols).find(|&c| m.get(k, c) % p != 0) {
                let q = m.get(k, c).div_euclid(p);
                m.add_col(c, k, -q);
                m.swap_cols(k, c);
                continue;
            }
            for r in k + 1..m.rows {
                let q = m.get(r, k) / p;
                if q != 0 {
                    m.add_row(r, k, -q);
                }
            }
            for c in k + 1..m.cols {
                let q = m.get(k, c) / p;
                if q != 0 {
                    m.add_col(c, k, -q);
                }
            }
            break;
        }
        if m.get(k, k) < 0 {
            m.negate_row(k);
        }
        k += 1;
    }
    // Enforce the divisibility chain.
    let mut d: Vec<i128> = (0..k).map(|i| m.get(i, i)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..d.len().saturating_sub(1) {
            if d[i] != 0 && d[i + 1] % d[i] != 0 {
                let g = gcd(d[i], d[i + 1]);
                let l = (d[i] / g) * d[i + 1];
                d[i] = g;
                d[i + 1] = l;
                changed = true;
            }
        }
    }
    for v in d {
        debug_assert!(v > 0);
        diag.push(v as u128);
    }
    diag
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
