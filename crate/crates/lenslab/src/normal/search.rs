//! Brute-force searches used as oracles for the efficiency predicates.

use crate::error::Result;
use crate::lens::FoldedLens;
use crate::tri::Triangulation;

use super::{enumerate, reconstruct, Component, NormalVector};

/// A closed normal 2-sphere is vertex-linking iff it has no quads and
/// crosses every edge class twice. Returns the first enumerated sphere
/// component failing that, if any, with its vector.
pub fn find_nonvertexlinking_sphere(
    tri: &Triangulation,
    bound: u32,
) -> Result<Option<(NormalVector, Component)>> {
    for v in enumerate(tri, bound, false)? {
        if v == NormalVector::zero(tri.tet_count()) {
            continue;
        }
        let rec = reconstruct(tri, &v)?;
        for comp in rec.components {
            if comp.closed && comp.chi == 2 {
                let vertex_linking =
                    !comp.has_quads() && comp.edge_weights.iter().all(|&w| w == 2);
                if !vertex_linking {
                    return Ok(Some((v, comp)));
                }
            }
        }
    }
    Ok(None)
}

/// A normal torus in a folded lens complex is thin edge-linking iff it
/// misses exactly one thin edge and crosses every other edge class twice.
/// Returns the first torus component failing that, if any.
pub fn find_nonthinedge_torus(
    folded: &FoldedLens,
    bound: u32,
) -> Result<Option<(NormalVector, Component)>> {
    for v in enumerate(&folded.tri, bound, false)? {
        if v == NormalVector::zero(folded.tri.tet_count()) {
            continue;
        }
        let rec = reconstruct(&folded.tri, &v)?;
        for comp in rec.components {
            if comp.closed && comp.chi == 0 && comp.orientable {
                let zeros: Vec<usize> = comp
                    .edge_weights
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| w == 0)
                    .map(|(c, _)| c)
                    .collect();
                let thin_linking = zeros.len() == 1
                    && !folded.thick_classes.contains(&zeros[0])
                    && comp
                        .edge_weights
                        .iter()
                        .enumerate()
                        .all(|(c, &w)| w == 2 || c == zeros[0]);
                if !thin_linking {
                    return Ok(Some((v, comp)));
                }
            }
        }
    }
    Ok(None)
}
