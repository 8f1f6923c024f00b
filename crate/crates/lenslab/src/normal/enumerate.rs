//! Bounded exhaustive enumeration of admissible solutions to the matching
//! system. Tetrahedra are assigned in breadth-first order; once a
//! tetrahedron's quad (or octagon) choice is fixed, every triangle count
//! facing an already-assigned neighbor is forced by the arc counts across
//! the gluing, so only genuinely unconstrained corners are scanned.

use crate::error::Result;
use crate::guard;
use crate::tri::Triangulation;

use super::matching::{matching_matrix, ArcEquation};
use super::NormalVector;

pub fn enumerate(tri: &Triangulation, bound: u32, octagons: bool) -> Result<Vec<NormalVector>> {
    guard::check(tri.tet_count())?;
    let sys = matching_matrix(tri, octagons)?;
    let n = tri.tet_count();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }

    // Breadth-first order over the gluing graph.
    let mut rank = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if rank[start] != usize::MAX {
            continue;
        }
        rank[start] = order.len();
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let t = order[head];
            for f in 0..4u8 {
                if let Some(g) = tri.gluing(t, f) {
                    if rank[g.tet] == usize::MAX {
                        rank[g.tet] = order.len();
                        order.push(g.tet);
                    }
                }
            }
            head += 1;
        }
    }

    // Assign each equation to the later of its two tetrahedra. At that
    // step the other side is known: it pins a triangle count if the other
    // tetrahedron is strictly earlier, and is a plain check otherwise.
    let mut pins: Vec<Vec<ArcEquation>> = vec![Vec::new(); n];
    let mut checks: Vec<Vec<ArcEquation>> = vec![Vec::new(); n];
    for eq in &sys.equations {
        let (lt, rt) = (eq.left.0, eq.right.0);
        if lt == rt {
            checks[rank[lt]].push(*eq);
        } else if rank[lt] < rank[rt] {
            pins[rank[rt]].push(ArcEquation { left: eq.right, right: eq.left });
        } else {
            pins[rank[lt]].push(*eq);
        }
    }

    let placements: Vec<Option<(usize, usize)>> = if octagons {
        (0..n).flat_map(|t| (0..3).map(move |p| Some((t, p)))).collect()
    } else {
        vec![None]
    };

    for placement in placements {
        let mut v = NormalVector::zero(n);
        dfs(tri, bound, &order, &pins, &checks, placement, 0, &mut v, &mut out);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    tri: &Triangulation,
    bound: u32,
    order: &[usize],
    pins: &[Vec<ArcEquation>],
    checks: &[Vec<ArcEquation>],
    octagon: Option<(usize, usize)>,
    step: usize,
    v: &mut NormalVector,
    out: &mut Vec<NormalVector>,
) {
    if step == order.len() {
        out.push(v.clone());
        return;
    }
    let t = order[step];

    // Quad/octagon configurations for this tetrahedron.
    let mut configs: Vec<([u32; 3], [u32; 3])> = Vec::new();
    match octagon {
        Some((ot, op)) if ot == t => {
            let mut o = [0u32; 3];
            o[op] = 1;
            configs.push(([0; 3], o));
        }
        _ => {
            configs.push(([0; 3], [0; 3]));
            for p in 0..3 {
                for val in 1..=bound {
                    let mut q = [0u32; 3];
                    q[p] = val;
                    configs.push((q, [0; 3]));
                }
            }
        }
    }

    'config: for (q, o) in configs {
        v.q[t] = q;
        v.oct[t] = o;
        // Pin triangle counts from arcs across earlier gluings.
        let mut x = [u32::MAX; 4];
        for eq in &pins[step] {
            let (_, f, corner) = eq.left;
            let want = v.arcs(eq.right.0, eq.right.1, eq.right.2) as i64;
            // arcs(t, f, corner) = x[corner] + quad/oct contribution
            let mut fixed = v.q[t][super::partition_of(f, corner)] as i64;
            for p in 0..3 {
                if p != super::partition_of(f, corner) && super::partner(p, f) != corner {
                    fixed += v.oct[t][p] as i64;
                }
            }
            let need = want - fixed;
            if need < 0 || need > bound as i64 {
                continue 'config;
            }
            let need = need as u32;
            if x[corner as usize] == u32::MAX {
                x[corner as usize] = need;
            } else if x[corner as usize] != need {
                continue 'config;
            }
        }
        let free: Vec<usize> = (0..4).filter(|&c| x[c] == u32::MAX).collect();
        scan_free(tri, bound, order, pins, checks, octagon, step, v, out, x, &free, 0);
    }
    v.q[t] = [0; 3];
    v.oct[t] = [0; 3];
    v.x[t] = [0; 4];
}

#[allow(clippy::too_many_arguments)]
fn scan_free(
    tri: &Triangulation,
    bound: u32,
    order: &[usize],
    pins: &[Vec<ArcEquation>],
    checks: &[Vec<ArcEquation>],
    octagon: Option<(usize, usize)>,
    step: usize,
    v: &mut NormalVector,
    out: &mut Vec<NormalVector>,
    mut x: [u32; 4],
    free: &[usize],
    k: usize,
) {
    let t = order[step];
    if k == free.len() {
        v.x[t] = x;
        for eq in &checks[step] {
            if v.arcs(eq.left.0, eq.left.1, eq.left.2) != v.arcs(eq.right.0, eq.right.1, eq.right.2)
            {
                return;
            }
        }
        dfs(tri, bound, order, pins, checks, octagon, step + 1, v, out);
        return;
    }
    for val in 0..=bound {
        x[free[k]] = val;
        scan_free(tri, bound, order, pins, checks, octagon, step, v, out, x, free, k + 1);
    }
}
