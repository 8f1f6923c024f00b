//! Acceptance suite: one test per criterion, each printing a pass line
//! with its runtime (visible under `cargo test -- --nocapture`).

use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use lenslab::lens::{
    build_lens_u64, canonicalize_u64, even_edge_count, fold_symbolic, identify_gluing,
    is_zero_efficient, materialize_folded, nonorientable_genus, related_by_reversal,
    reverse_description, GluingSpec, LensSpace, NonorientableGenus,
};
use lenslab::lst::LayeredPath;
use lenslab::normal::{
    classify, enumerate, find_nonvertexlinking_sphere, reconstruct, SurfaceClass,
};
use lenslab::slope::{big, lgraph_minimal_path, LVertex, SlopeTriple};
use lenslab::tri::{homology_h1, isomorphic};

fn v(p: u64, q: u64) -> LVertex {
    LVertex::from_u64(p, q).unwrap()
}

fn t3(e: [u64; 3]) -> SlopeTriple {
    SlopeTriple::from_u64(e).unwrap()
}

fn lens(x: u64, y: u64) -> LensSpace {
    canonicalize_u64(x, y).unwrap()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pass(criterion: &str, t0: Instant) {
    println!("criterion {criterion}: PASS ({:?})", t0.elapsed());
}

#[test]
fn criterion_01_folding_table() {
    let t0 = Instant::now();
    let lp = LayeredPath::build_minimal(&v(1, 2)).unwrap();
    let mut got: Vec<LensSpace> = (0..3).map(|s| fold_symbolic(&lp, s).unwrap()).collect();
    got.sort_by_key(|l| l.x().clone());
    assert_eq!(got, vec![lens(1, 0), lens(4, 1), lens(5, 2)]);
    pass("01 folding-table", t0);
}

#[test]
fn criterion_02_identification() {
    let t0 = Instant::now();
    let g = GluingSpec::positional(t3([9, 7, 2]), t3([5, 3, 8]));
    assert_eq!(identify_gluing(&g).unwrap(), lens(62, 27));

    let g = GluingSpec::positional(t3([9, 7, 2]), t3([3, 7, 4]));
    let got = identify_gluing(&g).unwrap();
    assert_eq!(got, lens(42, 19));
    assert_eq!(got, lens(42, 11));

    let lp = LayeredPath::build_minimal(&v(4, 5)).unwrap();
    let m = lp.meridian();
    let at = |n: u64| m.position_of(&big(n), None).unwrap();
    let l13 = fold_symbolic(&lp, at(5)).unwrap();
    assert_eq!(l13, lens(13, 4));
    assert_eq!(l13, lens(13, 9));
    assert_eq!(fold_symbolic(&lp, at(4)).unwrap(), lens(14, 5));
    pass("02 identification", t0);
}

#[test]
fn criterion_03_reversed_view_law() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e75);
    let mut checked = 0;
    while checked < 500 {
        let x: u64 = rng.gen_range(1..=500);
        let y: u64 = if x == 1 { 0 } else { rng.gen_range(1..x) };
        if x > 1 && gcd(x, y) != 1 {
            continue;
        }
        let (lp, slot) = build_lens_u64(x, y).unwrap();
        let direct = fold_symbolic(&lp, slot).unwrap();
        assert_eq!(direct, lens(x, y), "L({x},{y})");
        let (rev, rslot) = reverse_description(&lp, slot).unwrap();
        assert_eq!(fold_symbolic(&rev, rslot).unwrap(), direct, "L({x},{y}) reversed");
        // The two views' longitude readings multiply to +/-1 mod X.
        let reading = |p: &LayeredPath, s: usize| {
            let others: Vec<usize> = (0..3).filter(|&k| k != s).collect();
            p.meridian().entry(others[0]).clone()
        };
        let y_dir = reading(&lp, slot);
        let y_rev = reading(&rev, rslot);
        assert!(
            related_by_reversal(&BigUint::from(x), &y_dir, &y_rev),
            "L({x},{y}): {y_dir} * {y_rev} must be +/-1 mod {x}"
        );
        checked += 1;
    }
    pass("03 reversed-view-law", t0);
}

#[test]
fn criterion_04_homology_oracle() {
    let t0 = Instant::now();
    let pairs: Vec<(u64, u64)> = (0..=60u64)
        .flat_map(|x| (0..=x.max(1)).map(move |y| (x, y)))
        .filter(|&(x, y)| match x {
            0 => y == 1,
            1 => y == 0,
            _ => y < x && y > 0 && gcd(x, y) == 1,
        })
        .collect();
    pairs.par_iter().for_each(|&(x, y)| {
        let (lp, slot) = build_lens_u64(x, y).unwrap();
        let folded = materialize_folded(&lp, slot).unwrap();
        let r = folded.tri.validate();
        assert_eq!(r.vertices, 1, "L({x},{y}) must be one-vertex");
        assert_eq!(r.boundary_faces, 0, "L({x},{y}) must be closed");
        let h = homology_h1(&folded.tri);
        if x == 0 {
            assert_eq!(h.free_rank, 1, "L(0,1) -> {h}");
            assert!(h.torsion.is_empty(), "L(0,1) -> {h}");
        } else {
            assert_eq!(h.order(), Some(u128::from(x)), "L({x},{y}) -> {h}");
        }
    });
    pass("04 homology-oracle", t0);
}

#[test]
fn criterion_05_tetrahedron_counts() {
    let t0 = Instant::now();
    // Sum of the continued fraction's partial quotients, computed by the
    // division algorithm, independent of the path machinery.
    fn quotient_sum(p: u64, q: u64) -> u64 {
        let (mut x, mut y) = (q, p);
        let mut s = 0;
        while y > 0 {
            s += x / y;
            let r = x % y;
            x = y;
            y = r;
        }
        s
    }
    for q in 1..=200u64 {
        for p in 1..=q {
            if gcd(p, q) != 1 || (p == q && q != 1) {
                continue;
            }
            let len = lgraph_minimal_path(&v(p, q)).len() as u64 - 1;
            assert_eq!(len, quotient_sum(p, q) - 1, "{p}/{q}");
        }
    }
    pass("05 tetrahedron-counts", t0);
}

#[test]
fn criterion_06_bredon_wood() {
    let t0 = Instant::now();
    assert_eq!(nonorientable_genus(30, 7).unwrap(), NonorientableGenus::Incompressible(3));
    assert_eq!(even_edge_count(16, 7).unwrap(), 2);
    for q in (3..=99u64).step_by(2) {
        assert_eq!(even_edge_count(2, q).unwrap(), 1, "e(2,{q})");
    }
    for k in 1..=20u64 {
        assert_eq!(even_edge_count(2 * k, 1).unwrap(), k, "e({},1)", 2 * k);
    }
    // The Klein bottle family: X-even canonical forms of genus 2 up to
    // X = 100 are exactly L(4n, 2n-1), n <= 25.
    let mut genus_two: Vec<LensSpace> = Vec::new();
    for x in (4..=100u64).step_by(2) {
        for y in 1..x {
            if gcd(x, y) != 1 {
                continue;
            }
            if nonorientable_genus(x, y).unwrap() == NonorientableGenus::Incompressible(2) {
                let l = lens(x, y);
                if !genus_two.contains(&l) {
                    genus_two.push(l);
                }
            }
        }
    }
    let mut family: Vec<LensSpace> = (1..=25u64).map(|n| lens(4 * n, 2 * n - 1)).collect();
    family.sort_by_key(|l| (l.x().clone(), l.y().clone()));
    genus_two.sort_by_key(|l| (l.x().clone(), l.y().clone()));
    assert_eq!(genus_two, family);
    pass("06 bredon-wood", t0);
}

/// Signature of a connected component: (chi, orientable, curve triples).
fn signature(
    lp: &LayeredPath,
    mat: &lenslab::lst::MaterializedLst,
    c: &lenslab::normal::Component,
) -> (i64, bool, Vec<[u64; 3]>) {
    let mut curves: Vec<[u64; 3]> =
        c.boundary_curves.iter().map(|b| b.triple(&mat.slot_classes)).collect();
    curves.sort();
    let _ = lp;
    (c.chi, c.orientable, curves)
}

#[test]
fn criterion_07_one_tet_census() {
    let t0 = Instant::now();
    let lp = LayeredPath::build_minimal(&v(1, 2)).unwrap();
    let mat = lp.materialize().unwrap();
    let meridian = [
        u64::try_from(lp.meridian().entry(0)).unwrap(),
        u64::try_from(lp.meridian().entry(1)).unwrap(),
        u64::try_from(lp.meridian().entry(2)).unwrap(),
    ];
    let rim_slope = {
        let r = lp.edge_table().iter().find(|r| !r.thick && !r.univalent).unwrap();
        [
            u64::try_from(r.final_slope.entry(0)).unwrap(),
            u64::try_from(r.final_slope.entry(1)).unwrap(),
            u64::try_from(r.final_slope.entry(2)).unwrap(),
        ]
    };
    let uni_slope = {
        let r = lp.edge_table().iter().find(|r| r.univalent).unwrap();
        [
            u64::try_from(r.final_slope.entry(0)).unwrap(),
            u64::try_from(r.final_slope.entry(1)).unwrap(),
            u64::try_from(r.final_slope.entry(2)).unwrap(),
        ]
    };
    let mut got = Vec::new();
    for nv in enumerate(&mat.tri, 4, false).unwrap() {
        let rec = reconstruct(&mat.tri, &nv).unwrap();
        if rec.components.len() == 1 {
            got.push(signature(&lp, &mat, &rec.components[0]));
        }
    }
    got.sort();
    let mut want = vec![
        (1, true, vec![[2, 2, 2]]),               // vertex-linking disk
        (1, true, vec![meridian]),                // meridional disk
        (0, true, vec![uni_slope, uni_slope]),    // annulus about the count-3 edge
        (0, false, vec![rim_slope]),              // M\u{f6}bius band at the count-2 edge
        (0, true, vec![rim_slope, rim_slope]),    // its double
    ];
    want.sort();
    assert_eq!(got, want);
    pass("07 one-tet-census", t0);
}

#[test]
fn criterion_08_two_tet_census() {
    let t0 = Instant::now();
    let lp = LayeredPath::from_moves(&[2, 1]).unwrap();
    let mat = lp.materialize().unwrap();
    let sols = enumerate(&mat.tri, 4, false).unwrap();
    // The single interior edge forces the two quad types of the first
    // tetrahedron that would cross it to agree on every solution.
    for nv in &sols {
        assert_eq!(nv.q[0][1], nv.q[0][2], "quad relation violated by {nv}");
    }
    let slope = |pred: &dyn Fn(&lenslab::lst::EdgeRecord) -> bool| -> [u64; 3] {
        let r = lp.edge_table().iter().find(|r| pred(r)).unwrap();
        [
            u64::try_from(r.final_slope.entry(0)).unwrap(),
            u64::try_from(r.final_slope.entry(1)).unwrap(),
            u64::try_from(r.final_slope.entry(2)).unwrap(),
        ]
    };
    let meridian = [1u64, 1, 0];
    let zero_edge = slope(&|r| r.meridian_count == big(0)); // boundary count-0 edge
    let thick = slope(&|r| r.thick);
    let uni = slope(&|r| r.univalent);
    let rim = slope(&|r| r.interior); // interior count-2 edge
    let mut got = Vec::new();
    for nv in &sols {
        let rec = reconstruct(&mat.tri, nv).unwrap();
        if rec.components.len() == 1 {
            got.push(signature(&lp, &mat, &rec.components[0]));
        }
    }
    got.sort();
    let mut want = vec![
        (1, true, vec![[2, 2, 2]]),        // vertex-linking disk
        (1, true, vec![meridian]),         // meridional disk
        (0, false, vec![rim]),             // M\u{f6}bius band at the interior edge
        (0, true, vec![rim, rim]),         // its double
        (0, true, vec![uni, uni]),         // thin annulus about the univalent edge
        (0, true, vec![zero_edge, zero_edge]), // thin annulus about the count-0 edge
        (-1, true, vec![[2, 2, 2]]),       // vertex disk with a tube
        (-1, false, vec![zero_edge]),      // punctured Klein bottle
        (-2, true, vec![uni, uni]),        // univalent annulus with a tube
        (-2, true, vec![zero_edge, zero_edge]), // double of the Klein bottle
    ];
    want.sort();
    assert_eq!(got, want);
    assert_eq!(thick, [0, 1, 1]);
    pass("08 two-tet-census", t0);
}

#[test]
fn criterion_09_classification_sweep() {
    let t0 = Instant::now();
    let fractions: Vec<(u64, u64)> = (2..=12u64)
        .flat_map(|q| (1..q).map(move |p| (p, q)))
        .filter(|&(p, q)| gcd(p, q) == 1)
        .collect();
    fractions.par_iter().for_each(|&(p, q)| {
        let lp = LayeredPath::build_minimal(&v(p, q)).unwrap();
        let mat = lp.materialize().unwrap();
        let meridian = lp.meridian().clone();
        let mut allowed: Vec<[u64; 3]> = vec![[2, 2, 2]];
        let as_u64 = |t: &SlopeTriple| {
            [
                u64::try_from(t.entry(0)).unwrap(),
                u64::try_from(t.entry(1)).unwrap(),
                u64::try_from(t.entry(2)).unwrap(),
            ]
        };
        allowed.push(as_u64(&meridian));
        for r in lp.edge_table() {
            allowed.push(as_u64(&r.final_slope));
        }
        for nv in enumerate(&mat.tri, 6, false).unwrap() {
            let rec = reconstruct(&mat.tri, &nv).unwrap();
            for c in &rec.components {
                for curve in &c.boundary_curves {
                    let triple = curve.triple(&mat.slot_classes);
                    assert!(
                        allowed.contains(&triple),
                        "{p}/{q}: boundary slope {triple:?} not a vertex link, meridian or edge slope"
                    );
                }
            }
            if rec.components.len() == 1 {
                let class = classify(&lp, &mat, &rec.components[0]);
                assert_ne!(
                    class,
                    SurfaceClass::Unclassified,
                    "{p}/{q}: unclassified component of {nv}"
                );
            }
        }
    });
    pass("09 classification-sweep", t0);
}

#[test]
fn criterion_10_efficiency_cross_check() {
    let t0 = Instant::now();
    let mut descs: Vec<(LayeredPath, usize)> = Vec::new();
    for q in 1..=13u64 {
        for p in 1..=q {
            if gcd(p, q) != 1 || (p == q && q != 1) {
                continue;
            }
            let len = lgraph_minimal_path(&v(p, q)).len() - 1;
            if len == 0 || len > 6 {
                continue;
            }
            let lp = LayeredPath::build_minimal(&v(p, q)).unwrap();
            for slot in 0..3 {
                descs.push((lp.clone(), slot));
            }
        }
    }
    // Minimal descriptions of the 0/1 and 1/1 boundary classes, including
    // the projective space and the bad L(3,1).
    for moves in [vec![2usize, 1], vec![0, 0]] {
        let lp = LayeredPath::from_moves(&moves).unwrap();
        for slot in 0..3 {
            descs.push((lp.clone(), slot));
        }
    }
    let outcomes: Vec<Option<(LensSpace, bool, bool)>> = descs
        .par_iter()
        .map(|(lp, slot)| {
            let lens_space = fold_symbolic(lp, *slot).unwrap();
            if lens_space.is_sphere() || lens_space.is_sphere_bundle() {
                return None; // excluded by the characterization
            }
            let symbolic = is_zero_efficient(lp, *slot).unwrap().efficient;
            let folded = materialize_folded(lp, *slot).unwrap();
            let oracle = find_nonvertexlinking_sphere(&folded.tri, 8).unwrap().is_none();
            Some((lens_space, symbolic, oracle))
        })
        .collect();
    let mut checked = 0;
    let mut saw_projective = false;
    let mut saw_inefficient_l31 = false;
    for o in outcomes.into_iter().flatten() {
        let (l, symbolic, oracle) = o;
        assert_eq!(symbolic, oracle, "{l}: symbolic {symbolic} vs oracle {oracle}");
        if l == lens(2, 1) {
            saw_projective = true;
            assert!(!symbolic);
        }
        if l == lens(3, 1) && !symbolic {
            saw_inefficient_l31 = true;
        }
        checked += 1;
    }
    assert!(checked >= 100, "only {checked} descriptions checked");
    assert!(saw_projective, "projective space case missing");
    assert!(saw_inefficient_l31, "bad L(3,1) case missing");
    pass("10 efficiency-cross-check", t0);
}

#[test]
fn criterion_11_octagon_checks() {
    let t0 = Instant::now();
    // Octagonal 2-sphere in the one-tetrahedron 3-sphere.
    let (lp, slot) = build_lens_u64(1, 0).unwrap();
    let folded = materialize_folded(&lp, slot).unwrap();
    let mut sphere = false;
    for nv in enumerate(&folded.tri, 6, true).unwrap() {
        let rec = reconstruct(&folded.tri, &nv).unwrap();
        sphere |= rec.components.iter().any(|c| c.has_octagon && c.closed && c.chi == 2);
    }
    assert!(sphere, "no octagonal sphere in the one-tet 3-sphere");

    // Exceptional octagonal annulus in the one-tetrahedron solid torus;
    // its boundary is a longitude, not the slope of any edge.
    let lp = LayeredPath::build_minimal(&v(1, 2)).unwrap();
    let mat = lp.materialize().unwrap();
    let mut exceptional = false;
    for nv in enumerate(&mat.tri, 6, true).unwrap() {
        let rec = reconstruct(&mat.tri, &nv).unwrap();
        for c in &rec.components {
            if c.has_octagon && c.chi == 0 && c.orientable && c.boundary_curves.len() == 2 {
                let triple = c.boundary_curves[0].triple(&mat.slot_classes);
                let mut sorted = triple;
                sorted.sort();
                assert_eq!(sorted, [1, 1, 2], "annulus boundary is a longitude");
                exceptional = true;
            }
        }
    }
    assert!(exceptional, "no exceptional octagonal annulus");

    // No octagonal solutions in the minimal descriptions of L(5,2), L(7,2).
    for (x, y) in [(5u64, 2u64), (7, 2)] {
        let (lp, slot) = build_lens_u64(x, y).unwrap();
        let folded = materialize_folded(&lp, slot).unwrap();
        for nv in enumerate(&folded.tri, 6, true).unwrap() {
            let rec = reconstruct(&folded.tri, &nv).unwrap();
            assert!(
                rec.components.iter().all(|c| !c.has_octagon),
                "octagonal component in L({x},{y}): {nv}"
            );
        }
    }
    pass("11 octagon-checks", t0);
}

#[test]
fn criterion_12_isomorphism() {
    let t0 = Instant::now();
    // The two minimal layered complexes of L(3,1) are not isomorphic.
    let lp = LayeredPath::from_moves(&[0, 0]).unwrap();
    let good = materialize_folded(&lp, lp.thick_slot().unwrap()).unwrap();
    let bad = materialize_folded(&lp, lp.univalent_slot().unwrap()).unwrap();
    assert_eq!(good.lens, lens(3, 1));
    assert_eq!(bad.lens, lens(3, 1));
    assert!(!isomorphic(&good.tri, &bad.tri, 8).unwrap());

    // The two attachment choices of any layering agree up to isomorphism.
    for (p, q) in [(1u64, 2u64), (2, 3), (2, 5)] {
        let mat = LayeredPath::build_minimal(&v(p, q)).unwrap().materialize().unwrap();
        let sk = mat.tri.skeleton();
        for e in 0..sk.edge_classes.len() {
            if !sk.edge_classes[e].boundary {
                continue;
            }
            let (Ok(a), Ok(b)) = (
                mat.tri.layer_on_boundary_edge(e),
                mat.tri.layer_on_boundary_edge_flipped(e),
            ) else {
                continue;
            };
            assert!(isomorphic(&a, &b, 10).unwrap(), "{p}/{q} edge {e}");
        }
    }
    pass("12 isomorphism", t0);
}
