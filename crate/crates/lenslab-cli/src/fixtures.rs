//! Embedded fixture suite: the worked examples the library is expected to
//! reproduce, runnable without any assets via `verify paper-examples`.

use std::process::ExitCode;

use num_bigint::BigUint;

use lenslab::lens::{
    build_lens_u64, canonicalize_u64, even_edge_count, fold_symbolic, identify_gluing,
    is_one_efficient, is_zero_efficient, materialize_folded, nonorientable_genus,
    related_by_reversal, GluingSpec, NonorientableGenus,
};
use lenslab::lst::LayeredPath;
use lenslab::normal::{classify, enumerate, find_nonvertexlinking_sphere, matching_matrix, reconstruct, SurfaceClass};
use lenslab::slope::{big, lgraph_minimal_path, LVertex, SlopeTriple};
use lenslab::tri::{homology_h1, isomorphic};

type Check = fn() -> Result<(), String>;

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn v(p: u64, q: u64) -> LVertex {
    LVertex::from_u64(p, q).unwrap()
}

fn t3(e: [u64; 3]) -> SlopeTriple {
    SlopeTriple::from_u64(e).unwrap()
}

fn lens(x: u64, y: u64) -> lenslab::lens::LensSpace {
    canonicalize_u64(x, y).unwrap()
}

fn push_through_table() -> Result<(), String> {
    let a = t3([3, 8, 11]);
    expect("push sum entry", a.push_through(2), t3([3, 8, 5]))?;
    expect("push first entry", a.push_through(0), t3([19, 8, 11]))?;
    expect("push second entry", a.push_through(1), t3([3, 14, 11]))
}

fn one_tet_fold_table() -> Result<(), String> {
    let lp = LayeredPath::build_minimal(&v(1, 2)).map_err(|e| e.to_string())?;
    let mut got: Vec<String> = (0..3)
        .map(|s| fold_symbolic(&lp, s).map(|l| l.to_string()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    got.sort();
    expect("folds", got, vec!["L(1,0)".into(), "L(4,1)".into(), "L(5,2)".into()])
}

fn fold_4_5_9() -> Result<(), String> {
    let lp = LayeredPath::build_minimal(&v(4, 5)).map_err(|e| e.to_string())?;
    let m = lp.meridian();
    let at = |n: u64| m.position_of(&big(n), None).unwrap();
    expect("fold the 5", fold_symbolic(&lp, at(5)).unwrap(), lens(13, 4))?;
    expect("fold the 4", fold_symbolic(&lp, at(4)).unwrap(), lens(14, 5))?;
    expect("L(13,9) is L(13,4)", lens(13, 9), lens(13, 4))
}

fn identify_62_27() -> Result<(), String> {
    let g = GluingSpec::positional(t3([9, 7, 2]), t3([5, 3, 8]));
    expect("identification", identify_gluing(&g).unwrap(), lens(62, 27))
}

fn identify_42() -> Result<(), String> {
    let g = GluingSpec::positional(t3([9, 7, 2]), t3([3, 7, 4]));
    let got = identify_gluing(&g).unwrap();
    expect("identification", got.clone(), lens(42, 19))?;
    expect("same class as L(42,11)", got, lens(42, 11))
}

fn mobius_attachment_table() -> Result<(), String> {
    let rows: [([u64; 3], [u64; 3], (u64, u64)); 12] = [
        ([0, 1, 1], [2, 1, 1], (2, 1)),
        ([0, 1, 1], [1, 2, 1], (1, 0)),
        ([0, 1, 1], [1, 1, 2], (1, 0)),
        ([1, 1, 2], [2, 1, 1], (3, 1)),
        ([1, 1, 2], [1, 2, 1], (3, 1)),
        ([1, 1, 2], [1, 1, 2], (0, 1)),
        ([1, 3, 4], [2, 1, 1], (7, 3)),
        ([1, 3, 4], [1, 2, 1], (5, 1)),
        ([1, 3, 4], [1, 1, 2], (2, 1)),
        ([2, 3, 5], [2, 1, 1], (8, 3)),
        ([2, 3, 5], [1, 2, 1], (7, 2)),
        ([2, 3, 5], [1, 1, 2], (1, 0)),
    ];
    for (a, b, (x, y)) in rows {
        let g = GluingSpec::positional(t3(a), t3(b));
        expect(&format!("{a:?}<->{b:?}"), identify_gluing(&g).unwrap(), lens(x, y))?;
    }
    Ok(())
}

fn reversed_views() -> Result<(), String> {
    let fwd = identify_gluing(&GluingSpec::positional(t3([1, 2, 1]), t3([14, 3, 11]))).unwrap();
    let bwd = identify_gluing(&GluingSpec::positional(t3([7, 16, 9]), t3([2, 1, 1]))).unwrap();
    expect("L(25,11)", fwd.clone(), lens(25, 11))?;
    expect("reverse reads L(25,9)", bwd.clone(), lens(25, 9))?;
    expect("same lens space", fwd, bwd)?;
    if !related_by_reversal(&big(25), &big(11), &big(9)) {
        return Err("11 * 9 must be -1 mod 25".into());
    }
    let fwd = identify_gluing(&GluingSpec::positional(t3([1, 2, 1]), t3([5, 3, 8]))).unwrap();
    let bwd = identify_gluing(&GluingSpec::positional(t3([5, 8, 3]), t3([1, 1, 2]))).unwrap();
    expect("L(13,8)", fwd.clone(), lens(13, 8))?;
    expect("reverse reads L(13,5)", bwd.clone(), lens(13, 5))?;
    expect("same lens space", fwd, bwd)
}

fn even_edge_counts() -> Result<(), String> {
    expect("e(16,7)", even_edge_count(16, 7).unwrap(), 2)?;
    expect("e(9,7)", even_edge_count(9, 7).unwrap(), 2)?;
    for q in (3..=99u64).step_by(2) {
        expect(&format!("e(2,{q})"), even_edge_count(2, q).unwrap(), 1)?;
    }
    for k in 1..=20 {
        expect(&format!("e({},1)", 2 * k), even_edge_count(2 * k, 1).unwrap(), k)?;
    }
    Ok(())
}

fn nonorientable_genus_table() -> Result<(), String> {
    expect("L(30,7)", nonorientable_genus(30, 7).unwrap(), NonorientableGenus::Incompressible(3))?;
    expect("L(30,23)", nonorientable_genus(30, 23).unwrap(), NonorientableGenus::Incompressible(3))?;
    expect("L(4,1)", nonorientable_genus(4, 1).unwrap(), NonorientableGenus::Incompressible(2))?;
    expect("L(2,1)", nonorientable_genus(2, 1).unwrap(), NonorientableGenus::ProjectivePlane)?;
    expect("L(0,1)", nonorientable_genus(0, 1).unwrap(), NonorientableGenus::EveryEvenGenus)?;
    for n in 1..=25u64 {
        expect(
            &format!("L({},{})", 4 * n, 2 * n - 1),
            nonorientable_genus(4 * n, 2 * n - 1).unwrap(),
            NonorientableGenus::Incompressible(2),
        )?;
    }
    Ok(())
}

fn minimal_path_counts() -> Result<(), String> {
    expect("2/7 path", lgraph_minimal_path(&v(2, 7)).len() - 1, 4)?;
    expect("1/2 path", lgraph_minimal_path(&v(1, 2)).len() - 1, 1)?;
    expect("1/1 path", lgraph_minimal_path(&v(1, 1)).len() - 1, 0)
}

fn univalent_edges() -> Result<(), String> {
    let lp = LayeredPath::build_minimal(&v(2, 7)).unwrap();
    let uni = lp.edge_table().iter().find(|r| r.univalent).unwrap();
    expect("univalent count in 2/7", uni.meridian_count.clone(), BigUint::from(9u32))?;
    let creased = LayeredPath::build_from_path(&[v(0, 1), v(1, 1)]).unwrap();
    let uni = creased.edge_table().iter().find(|r| r.univalent).unwrap();
    expect("creased univalent count", uni.meridian_count.clone(), BigUint::from(0u32))
}

fn one_tet_matching_system() -> Result<(), String> {
    let mat = LayeredPath::build_minimal(&v(1, 2)).unwrap().materialize().unwrap();
    let sys = matching_matrix(&mat.tri, false).map_err(|e| e.to_string())?;
    expect("variables", sys.var_count(), 7)?;
    expect("equations", sys.equations.len(), 3)
}

fn one_tet_surfaces() -> Result<(), String> {
    let lp = LayeredPath::build_minimal(&v(1, 2)).unwrap();
    let mat = lp.materialize().unwrap();
    let mut classes: Vec<String> = Vec::new();
    for nv in enumerate(&mat.tri, 4, false).map_err(|e| e.to_string())? {
        let rec = reconstruct(&mat.tri, &nv).map_err(|e| e.to_string())?;
        if rec.components.len() == 1 {
            classes.push(classify(&lp, &mat, &rec.components[0]).to_string());
        }
    }
    classes.sort();
    expect(
        "connected surfaces",
        classes,
        vec![
            "meridional-disk".to_string(),
            "nonorientable-genus1@0:2".to_string(),
            "thin-edge-linking-annulus@0:2".to_string(),
            "thin-edge-linking-annulus@1:0".to_string(),
            "vertex-linking-disk".to_string(),
        ],
    )
}

fn two_tet_zero_one_surfaces() -> Result<(), String> {
    let lp = LayeredPath::from_moves(&[2, 1]).unwrap();
    let mat = lp.materialize().unwrap();
    let sols = enumerate(&mat.tri, 4, false).map_err(|e| e.to_string())?;
    let mut connected = 0;
    for nv in &sols {
        if nv.q[0][1] != nv.q[0][2] {
            return Err(format!("quad relation violated by {nv}"));
        }
        let rec = reconstruct(&mat.tri, nv).map_err(|e| e.to_string())?;
        if rec.components.len() == 1 {
            connected += 1;
        }
    }
    expect("connected surfaces", connected, 10)
}

fn nonorientable_family_in_one_fifth() -> Result<(), String> {
    // Genus 1, 2, 3 surfaces with boundary slopes of the edges meeting
    // the meridian disk 2, 4 and 6 times.
    let lp = LayeredPath::build_minimal(&v(1, 5)).unwrap();
    let mat = lp.materialize().unwrap();
    let mut found: Vec<(u64, u64)> = Vec::new(); // (genus, edge count)
    for nv in enumerate(&mat.tri, 6, false).map_err(|e| e.to_string())? {
        let rec = reconstruct(&mat.tri, &nv).map_err(|e| e.to_string())?;
        if rec.components.len() != 1 {
            continue;
        }
        if let SurfaceClass::Nonorientable { genus, edge } = classify(&lp, &mat, &rec.components[0])
        {
            let count = lp
                .edge_table()
                .iter()
                .find(|r| r.id == edge)
                .map(|r| u64::try_from(&r.meridian_count).unwrap())
                .unwrap();
            if !found.contains(&(genus, count)) {
                found.push((genus, count));
            }
        }
    }
    found.sort();
    expect("nonorientable family", found, vec![(1, 2), (2, 4), (3, 6)])
}

fn octagon_existence() -> Result<(), String> {
    // An octagonal 2-sphere in the one-tetrahedron description of the
    // 3-sphere; the exceptional octagonal annulus in the solid torus;
    // nothing octagonal in L(5,2) or L(7,2).
    let (lp, slot) = build_lens_u64(1, 0).unwrap();
    let folded = materialize_folded(&lp, slot).unwrap();
    let mut sphere = false;
    for nv in enumerate(&folded.tri, 4, true).map_err(|e| e.to_string())? {
        let rec = reconstruct(&folded.tri, &nv).map_err(|e| e.to_string())?;
        for c in &rec.components {
            if c.has_octagon && c.chi == 2 && c.closed {
                sphere = true;
            }
        }
    }
    expect("octagonal sphere in the 3-sphere", sphere, true)?;

    let lp = LayeredPath::build_minimal(&v(1, 2)).unwrap();
    let mat = lp.materialize().unwrap();
    let mut annulus = false;
    for nv in enumerate(&mat.tri, 4, true).map_err(|e| e.to_string())? {
        let rec = reconstruct(&mat.tri, &nv).map_err(|e| e.to_string())?;
        for c in &rec.components {
            if c.has_octagon && c.chi == 0 && c.orientable && c.boundary_curves.len() == 2 {
                annulus = true;
            }
        }
    }
    expect("exceptional octagonal annulus", annulus, true)?;

    for (x, y) in [(5u64, 2u64), (7, 2)] {
        let (lp, slot) = build_lens_u64(x, y).unwrap();
        let folded = materialize_folded(&lp, slot).unwrap();
        let mut octs = 0;
        for nv in enumerate(&folded.tri, 6, true).map_err(|e| e.to_string())? {
            let rec = reconstruct(&folded.tri, &nv).map_err(|e| e.to_string())?;
            octs += rec.components.iter().filter(|c| c.has_octagon).count();
        }
        expect(&format!("octagonal components in L({x},{y})"), octs, 0)?;
    }
    Ok(())
}

fn lens_31_complexes() -> Result<(), String> {
    let lp = LayeredPath::from_moves(&[0, 0]).unwrap();
    let good = materialize_folded(&lp, lp.thick_slot().unwrap()).unwrap();
    let bad = materialize_folded(&lp, lp.univalent_slot().unwrap()).unwrap();
    expect("good is L(3,1)", good.lens.clone(), lens(3, 1))?;
    expect("bad is L(3,1)", bad.lens.clone(), lens(3, 1))?;
    expect("non-isomorphic", isomorphic(&good.tri, &bad.tri, 8).unwrap(), false)?;
    expect("|H1| good", homology_h1(&good.tri).order(), Some(3))?;
    expect("|H1| bad", homology_h1(&bad.tri).order(), Some(3))
}

fn sphere_bundle_fold() -> Result<(), String> {
    let (lp, slot) = build_lens_u64(0, 1).unwrap();
    expect("symbolic", fold_symbolic(&lp, slot).unwrap(), lens(0, 1))?;
    let folded = materialize_folded(&lp, slot).unwrap();
    expect("H1 free rank", homology_h1(&folded.tri).free_rank, 1)
}

fn efficiency_verdicts() -> Result<(), String> {
    for (x, y) in [(4u64, 1u64), (5, 2)] {
        let (lp, slot) = build_lens_u64(x, y).unwrap();
        expect(&format!("L({x},{y}) 0-efficient"), is_zero_efficient(&lp, slot).unwrap().efficient, true)?;
        expect(&format!("L({x},{y}) 1-efficient"), is_one_efficient(&lp, slot).unwrap().efficient, true)?;
    }
    let (lp, slot) = build_lens_u64(2, 1).unwrap();
    expect("layered projective space 0-efficient", is_zero_efficient(&lp, slot).unwrap().efficient, false)?;
    let folded = materialize_folded(&lp, slot).unwrap();
    let sphere = find_nonvertexlinking_sphere(&folded.tri, 8).map_err(|e| e.to_string())?;
    expect("sphere oracle finds the doubled disk", sphere.is_some(), true)?;

    let lp = LayeredPath::from_moves(&[0, 0]).unwrap();
    let bad_slot = lp.univalent_slot().unwrap();
    expect("bad L(3,1) 0-efficient", is_zero_efficient(&lp, bad_slot).unwrap().efficient, false)?;
    let folded = materialize_folded(&lp, bad_slot).unwrap();
    let sphere = find_nonvertexlinking_sphere(&folded.tri, 8).map_err(|e| e.to_string())?;
    expect("sphere oracle agrees on bad L(3,1)", sphere.is_some(), true)?;
    let good_slot = lp.thick_slot().unwrap();
    expect("good L(3,1) 1-efficient", is_one_efficient(&lp, good_slot).unwrap().efficient, true)
}

fn detour_is_nearly_minimal() -> Result<(), String> {
    let lp = LayeredPath::build_from_path(&[
        v(1, 6),
        v(1, 5),
        v(1, 4),
        v(1, 3),
        v(3, 4),
        v(1, 3),
        v(1, 2),
        v(1, 1),
    ])
    .unwrap();
    expect("seven tetrahedra", lp.tet_count(), 7)?;
    expect("nearly minimal", lp.is_nearly_minimal().holds(), true)
}

fn materialized_gluing_62() -> Result<(), String> {
    let a = LayeredPath::build_minimal(&v(2, 7)).unwrap();
    let b = LayeredPath::build_minimal(&v(3, 5)).unwrap();
    let (ma, mb) = (a.materialize().unwrap(), b.materialize().unwrap());
    let pos = |lp: &LayeredPath, n: u64, m: &lenslab::lst::MaterializedLst| {
        m.slot_classes[lp.meridian().position_of(&big(n), None).unwrap()]
    };
    let corr = [
        (pos(&a, 9, &ma), pos(&b, 5, &mb)),
        (pos(&a, 7, &ma), pos(&b, 3, &mb)),
        (pos(&a, 2, &ma), pos(&b, 8, &mb)),
    ];
    let closed = ma.tri.glue_boundaries(&mb.tri, corr).map_err(|e| e.to_string())?;
    expect("one vertex", closed.validate().vertices, 1)?;
    expect("|H1|", homology_h1(&closed).order(), Some(62))
}

fn two_layer_extension() -> Result<(), String> {
    // Layering the one-tetrahedron solid torus over its univalent edge
    // extends the 1/1 boundary class with two tetrahedra.
    let one = LayeredPath::build_minimal(&v(1, 2)).unwrap();
    let slot = one.univalent_slot().unwrap();
    let two = one.layer(slot).unwrap();
    expect("boundary class", two.fraction(), v(1, 1))?;
    expect("tetrahedra", two.tet_count(), 2)?;
    let mat = two.materialize().unwrap();
    let r = mat.tri.validate();
    expect("edges", r.edges, 4)?;
    expect("vertices", r.vertices, 1)
}

pub fn run_all() -> ExitCode {
    let fixtures: &[(&str, Check)] = &[
        ("push-through {3,8,11}", push_through_table),
        ("one-tetrahedron folding table", one_tet_fold_table),
        ("folds of the 4/5 boundary", fold_4_5_9),
        ("{9,7,2}<->{5,3,8} = L(62,27)", identify_62_27),
        ("{9,7,2}<->{3,7,4} = L(42,19) = L(42,11)", identify_42),
        ("two-tetrahedron attachment table", mobius_attachment_table),
        ("reversed views L(25,11)/L(25,9), L(13,8)/L(13,5)", reversed_views),
        ("even-edge counts", even_edge_counts),
        ("nonorientable genus table", nonorientable_genus_table),
        ("minimal path lengths", minimal_path_counts),
        ("univalent edge counts", univalent_edges),
        ("one-tetrahedron matching system", one_tet_matching_system),
        ("one-tetrahedron surface census", one_tet_surfaces),
        ("two-tetrahedron 0/1 surface census", two_tet_zero_one_surfaces),
        ("nonorientable family in the 1/5 torus", nonorientable_family_in_one_fifth),
        ("octagonal existence and absence", octagon_existence),
        ("the two minimal L(3,1) complexes", lens_31_complexes),
        ("sphere bundle from folding the rim", sphere_bundle_fold),
        ("efficiency verdicts and oracles", efficiency_verdicts),
        ("nearly minimal detour", detour_is_nearly_minimal),
        ("materialized gluing of 2/7 and 3/5", materialized_gluing_62),
        ("two-layer extension of 1/1", two_layer_extension),
    ];
    let mut failures = 0;
    for (name, check) in fixtures {
        match check() {
            Ok(()) => println!("PASS {name}"),
            Err(msg) => {
                failures += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    if failures == 0 {
        println!("all {} fixtures pass", fixtures.len());
        ExitCode::SUCCESS
    } else {
        println!("{failures} fixture(s) failed");
        ExitCode::from(1)
    }
}
