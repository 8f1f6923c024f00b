//! Combinatorial isomorphism of connected face-pairing triangulations by
//! anchored search: fix the image of tetrahedron 0 and a vertex relabeling,
//! then propagate across gluings.

use super::{Perm4, Triangulation};
use crate::error::{Error, Result};

pub fn isomorphic(a: &Triangulation, b: &Triangulation, max_tets: usize) -> Result<bool> {
    if a.tet_count() != b.tet_count() {
        return Ok(false);
    }
    let n = a.tet_count();
    if n == 0 {
        return Ok(true);
    }
    if n > max_tets {
        return Err(Error::SizeGuard(n, max_tets));
    }
    for t0 in 0..n {
        for p0 in Perm4::all() {
            if try_anchor(a, b, t0, p0)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn try_anchor(a: &Triangulation, b: &Triangulation, t0: usize, p0: Perm4) -> Result<bool> {
    let n = a.tet_count();
    let mut map: Vec<Option<(usize, Perm4)>> = vec![None; n];
    let mut used = vec![false; n];
    map[0] = Some((t0, p0));
    used[t0] = true;
    let mut stack = vec![0usize];
    let mut visited = 1usize;
    while let Some(t) = stack.pop() {
        let (bt, rho) = map[t].unwrap();
        for f in 0..4u8 {
            let ga = a.gluing(t, f);
            let fb = rho.apply(f);
            let gb = b.gluing(bt, fb);
            match (ga, gb) {
                (None, None) => {}
                (Some(ga), Some(gb)) => {
                    // Required image of the neighbor and its relabeling.
                    let rho2 = gb.perm.compose(&rho).compose(&ga.perm.inverse());
                    match map[ga.tet] {
                        None => {
                            if used[gb.tet] {
                                return Ok(false);
                            }
                            map[ga.tet] = Some((gb.tet, rho2));
                            used[gb.tet] = true;
                            visited += 1;
                            stack.push(ga.tet);
                        }
                        Some((bt2, r2)) => {
                            if bt2 != gb.tet || r2 != rho2 {
                                return Ok(false);
                            }
                        }
                    }
                }
                _ => return Ok(false),
            }
        }
    }
    if visited != n {
        return Err(Error::Invalid(
            "isomorphism search requires a connected triangulation".into(),
        ));
    }
    Ok(true)
}
