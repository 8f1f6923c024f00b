//! Classification of connected normal surfaces in a layered solid torus
//! by invariant signature: Euler characteristic, orientability, boundary
//! curve count, and boundary slope matched against the edge slope table.

use std::fmt;

use num_bigint::BigUint;

use crate::lst::{EdgeId, LayeredPath, MaterializedLst};

use super::Component;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceClass {
    VertexLinkingDisk,
    VertexLinkingDiskWithTubes { tubes: u64 },
    MeridionalDisk,
    EdgeLinkingAnnulus { edge: EdgeId, thin: bool, tubes: u64 },
    /// Unique nonorientable surface whose boundary has the slope of an
    /// even-order edge; genus 1 is the M\u{f6}bius band.
    Nonorientable { genus: u64, edge: EdgeId },
    /// Only in paths that are not nearly minimal:
    NonVertexLinkingTrivialDisk { tubes: u64 },
    NonEdgeLinkingAnnulus { tubes: u64 },
    FatEdgeLinkingAnnulus { tubes: u64 },
    Unclassified,
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceClass::VertexLinkingDisk => write!(f, "vertex-linking-disk"),
            SurfaceClass::VertexLinkingDiskWithTubes { tubes } => {
                write!(f, "vertex-linking-disk+{tubes}tubes")
            }
            SurfaceClass::MeridionalDisk => write!(f, "meridional-disk"),
            SurfaceClass::EdgeLinkingAnnulus { edge, thin, tubes } => {
                write!(f, "{}edge-linking-annulus@{edge}", if *thin { "thin-" } else { "" })?;
                if *tubes > 0 {
                    write!(f, "+{tubes}tubes")?;
                }
                Ok(())
            }
            SurfaceClass::Nonorientable { genus, edge } => {
                write!(f, "nonorientable-genus{genus}@{edge}")
            }
            SurfaceClass::NonVertexLinkingTrivialDisk { tubes } => {
                write!(f, "non-vertex-linking-trivial-disk")?;
                if *tubes > 0 {
                    write!(f, "+{tubes}tubes")?;
                }
                Ok(())
            }
            SurfaceClass::NonEdgeLinkingAnnulus { tubes } => {
                write!(f, "non-edge-linking-annulus")?;
                if *tubes > 0 {
                    write!(f, "+{tubes}tubes")?;
                }
                Ok(())
            }
            SurfaceClass::FatEdgeLinkingAnnulus { tubes } => {
                write!(f, "fat-edge-linking-annulus")?;
                if *tubes > 0 {
                    write!(f, "+{tubes}tubes")?;
                }
                Ok(())
            }
            SurfaceClass::Unclassified => write!(f, "unclassified"),
        }
    }
}

fn to_u64_triple(t: &crate::slope::SlopeTriple) -> Option<[u64; 3]> {
    let mut out = [0u64; 3];
    for k in 0..3 {
        out[k] = u64::try_from(t.entry(k)).ok()?;
    }
    Some(out)
}

/// Classify a connected component of a normal surface in the materialized
/// layered solid torus. Returns `Unclassified` rather than guessing when
/// the signature matches nothing the taxonomy allows for this path.
pub fn classify(lp: &LayeredPath, mat: &MaterializedLst, comp: &Component) -> SurfaceClass {
    if comp.closed {
        return SurfaceClass::Unclassified;
    }
    let Some(meridian) = to_u64_triple(lp.meridian()) else {
        return SurfaceClass::Unclassified;
    };
    let curves: Vec<[u64; 3]> =
        comp.boundary_curves.iter().map(|c| c.triple(&mat.slot_classes)).collect();
    let nearly = lp.is_nearly_minimal();
    let has_meridian_edge = !nearly.meridian_edges.is_empty();

    // Edge records whose preferred slope matches a triple.
    let slope_matches = |triple: &[u64; 3]| -> Vec<usize> {
        lp.edge_table()
            .iter()
            .enumerate()
            .filter(|(_, r)| to_u64_triple(&r.final_slope).as_ref() == Some(triple))
            .map(|(i, _)| i)
            .collect()
    };

    match curves.as_slice() {
        [t] if *t == meridian && comp.chi == 1 => SurfaceClass::MeridionalDisk,
        [t] if *t == [2, 2, 2] => {
            // Trivial boundary: the vertex-linking curve.
            if comp.chi == 1 {
                if !comp.has_quads() {
                    return SurfaceClass::VertexLinkingDisk;
                }
                if has_meridian_edge {
                    return SurfaceClass::NonVertexLinkingTrivialDisk { tubes: 0 };
                }
                return SurfaceClass::Unclassified;
            }
            if comp.orientable && comp.chi < 1 && (1 - comp.chi) % 2 == 0 {
                let tubes = ((1 - comp.chi) / 2) as u64;
                // A tube ring leaves its core edge untouched: weight 0 on
                // interior thin edges, 2 elsewhere.
                let ring_signature = comp.edge_weights.iter().all(|&w| w == 0 || w == 2);
                if ring_signature {
                    return SurfaceClass::VertexLinkingDiskWithTubes { tubes };
                }
                if has_meridian_edge {
                    return SurfaceClass::NonVertexLinkingTrivialDisk { tubes };
                }
            }
            SurfaceClass::Unclassified
        }
        [t1, t2] if t1 == t2 && comp.orientable && comp.chi <= 0 && comp.chi % 2 == 0 => {
            let tubes = (-comp.chi / 2) as u64;
            let matches = slope_matches(t1);
            let zero_weight: Vec<usize> = matches
                .iter()
                .copied()
                .filter(|&r| comp.edge_weights[mat.record_classes[r]] == 0)
                .collect();
            match (matches.len(), zero_weight.len()) {
                (0, _) => {
                    if has_meridian_edge {
                        SurfaceClass::NonEdgeLinkingAnnulus { tubes }
                    } else {
                        SurfaceClass::Unclassified
                    }
                }
                (1, _) => {
                    let rec = &lp.edge_table()[matches[0]];
                    SurfaceClass::EdgeLinkingAnnulus {
                        edge: rec.id,
                        thin: !rec.interior,
                        tubes,
                    }
                }
                (_, 1) => {
                    let rec = &lp.edge_table()[zero_weight[0]];
                    SurfaceClass::EdgeLinkingAnnulus {
                        edge: rec.id,
                        thin: !rec.interior,
                        tubes,
                    }
                }
                (_, z) if z >= 2 => SurfaceClass::FatEdgeLinkingAnnulus { tubes },
                _ => {
                    if has_meridian_edge {
                        SurfaceClass::NonEdgeLinkingAnnulus { tubes }
                    } else {
                        SurfaceClass::Unclassified
                    }
                }
            }
        }
        [t] if !comp.orientable && comp.chi <= 0 => {
            let matches = slope_matches(t);
            let even = matches.iter().copied().find(|&r| {
                (&lp.edge_table()[r].meridian_count % BigUint::from(2u32)) == BigUint::from(0u32)
            });
            if let Some(r) = even {
                return SurfaceClass::Nonorientable {
                    genus: (1 - comp.chi) as u64,
                    edge: lp.edge_table()[r].id,
                };
            }
            SurfaceClass::Unclassified
        }
        _ => SurfaceClass::Unclassified,
    }
}
