//! One binary, subcommand style; all state on the command line.
//!
//! Exit codes: 0 success, 1 domain refusal (documented precondition), 2
//! usage error. `LENSLAB_MAX_TETS` overrides the brute-force size guard.

mod fixtures;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use lenslab::lens::{
    self, build_lens, canonicalize, fold_symbolic, identify_gluing, is_one_efficient,
    is_zero_efficient, nonorientable_genus, reverse_description, GluingSpec, NonorientableGenus,
};
use lenslab::lst::LayeredPath;
use lenslab::normal::{classify, enumerate, reconstruct, SurfaceClass};
use lenslab::slope::{LVertex, SlopeTriple};
use lenslab::tri::{homology_h1, isomorphic, ManifoldVerdict, Triangulation};

#[derive(Parser)]
#[command(name = "lenslab", version, about = "Layered triangulations of solid tori and lens spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Layered solid tori: build, edge tables, near-minimality.
    #[command(subcommand)]
    Lst(LstCmd),
    /// Lens spaces: identification, construction, genus, efficiency,
    /// Dehn filling.
    #[command(subcommand)]
    Lens(LensCmd),
    /// Normal and almost-normal surfaces.
    #[command(subcommand)]
    Normal(NormalCmd),
    /// Triangulation kernel: validation, homology, isomorphism.
    #[command(subcommand)]
    Tri(TriCmd),
    /// Built-in verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args)]
struct PathSpec {
    /// Boundary class p/q of the minimal layered solid torus.
    #[arg(long)]
    pq: Option<String>,
    /// Explicit path of boundary classes ending at 1/1, e.g.
    /// "2/7,2/5,2/3,1/2,1/1".
    #[arg(long)]
    path: Option<String>,
}

impl PathSpec {
    fn build(&self) -> lenslab::Result<LayeredPath> {
        match (&self.pq, &self.path) {
            (Some(pq), None) => LayeredPath::build_minimal(&pq.parse::<LVertex>()?),
            (None, Some(path)) => {
                let verts: lenslab::Result<Vec<LVertex>> =
                    path.split(',').map(|s| s.trim().parse::<LVertex>()).collect();
                LayeredPath::build_from_path(&verts?)
            }
            _ => Err(lenslab::Error::Invalid("give exactly one of --pq or --path".into())),
        }
    }
}

#[derive(Subcommand)]
enum LstCmd {
    /// Build a layered solid torus and summarize it.
    Build {
        #[command(flatten)]
        spec: PathSpec,
        /// Emit the face-pairing triangulation in .tri text form.
        #[arg(long = "emit", value_parser = ["tri"])]
        emit: Option<String>,
    },
    /// Print the edge table.
    Table {
        #[command(flatten)]
        spec: PathSpec,
    },
    /// Near-minimality verdict.
    Check {
        #[command(flatten)]
        spec: PathSpec,
    },
}

#[derive(Subcommand)]
enum LensCmd {
    /// Identify the lens space of a boundary identification, e.g.
    /// "{9,7,2}<->{5,3,8}".
    Identify {
        gluing: String,
        /// Explicit slot pairing, e.g. 0:0,1:1,2:2 (default positional).
        #[arg(long)]
        pair: Option<String>,
    },
    /// Build a layered description of L(X,Y).
    Build {
        x: u64,
        y: u64,
        #[arg(long = "emit", value_parser = ["tri"])]
        emit: Option<String>,
    },
    /// Nonorientable genus data for L(X,Y).
    Genus { x: u64, y: u64 },
    /// Fold a layered solid torus and report the lens space and its
    /// efficiency.
    Check {
        #[command(flatten)]
        spec: PathSpec,
        /// Boundary slot (0..2) to fold across.
        #[arg(long)]
        fold: usize,
        /// Check 0- or 1-efficiency.
        #[arg(long)]
        efficiency: Option<u8>,
    },
    /// Triangulated Dehn filling of a torus-boundary complex.
    Fill {
        #[arg(long)]
        tri: std::path::PathBuf,
        /// Boundary component index (in validate's report order).
        #[arg(long, default_value_t = 0)]
        boundary: usize,
        /// Intersection triple "{a,b,c}" aligned to the component's
        /// boundary edge classes in ascending class order.
        #[arg(long)]
        alpha: String,
    },
    /// Reversal law and homology over all X up to a bound, in parallel.
    Sweep {
        #[arg(long, default_value_t = 200)]
        max_x: u64,
    },
}

#[derive(Subcommand)]
enum NormalCmd {
    /// Enumerate admissible surfaces with coordinates up to a bound.
    Enumerate {
        #[arg(long)]
        tri: Option<std::path::PathBuf>,
        #[arg(long)]
        pq: Option<String>,
        /// Fold slot: enumerate on the closed lens complex instead of the
        /// solid torus.
        #[arg(long)]
        fold: Option<usize>,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        #[arg(long)]
        octagons: bool,
        #[arg(long)]
        closed_only: bool,
        #[arg(long)]
        connected_only: bool,
    },
}

#[derive(Subcommand)]
enum TriCmd {
    /// Skeleton report and manifold verdict.
    Validate { file: std::path::PathBuf },
    /// First homology from the 2-skeleton.
    Homology { file: std::path::PathBuf },
    /// Combinatorial isomorphism of two complexes.
    Iso { a: std::path::PathBuf, b: std::path::PathBuf },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run the embedded fixture suite.
    PaperExamples,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> lenslab::Result<ExitCode> {
    match cli.command {
        Command::Lst(cmd) => lst_cmd(cmd)?,
        Command::Lens(cmd) => lens_cmd(cmd)?,
        Command::Normal(cmd) => normal_cmd(cmd)?,
        Command::Tri(cmd) => return tri_cmd(cmd),
        Command::Verify(VerifyCmd::PaperExamples) => return Ok(fixtures::run_all()),
    }
    Ok(ExitCode::SUCCESS)
}

fn lst_cmd(cmd: LstCmd) -> lenslab::Result<()> {
    match cmd {
        LstCmd::Build { spec, emit } => {
            let lp = spec.build()?;
            let path: Vec<String> =
                lp.levels().iter().rev().map(|t| t.fraction().to_string()).collect();
            println!("boundary class: {}", lp.fraction());
            println!("tetrahedra: {}", lp.tet_count());
            println!("meridian triple: {}", lp.meridian());
            println!("path: {}", path.join(", "));
            if lp.degenerate() {
                println!("degenerate: yes");
            }
            if emit.is_some() {
                let mat = lp.materialize()?;
                print!("{}", mat.tri.to_text());
            }
            Ok(())
        }
        LstCmd::Table { spec } => {
            let lp = spec.build()?;
            println!(
                "{:<6} {:>10} {:<6} {:<9} {:<9} slope",
                "edge", "meridian", "kind", "univalent", "location"
            );
            for r in lp.edge_table() {
                println!(
                    "{:<6} {:>10} {:<6} {:<9} {:<9} {}",
                    r.id.to_string(),
                    r.meridian_count.to_string(),
                    if r.thick { "thick" } else { "thin" },
                    if r.univalent { "yes" } else { "no" },
                    if r.interior { "interior" } else { "boundary" },
                    r.final_slope,
                );
            }
            println!();
            for r in lp.edge_table() {
                println!(
                    "edge {} meridian={} kind={} univalent={} slope={}",
                    r.id,
                    r.meridian_count,
                    if r.thick { "thick" } else { "thin" },
                    u8::from(r.univalent),
                    r.final_slope,
                );
            }
            Ok(())
        }
        LstCmd::Check { spec } => {
            let lp = spec.build()?;
            let nm = lp.is_nearly_minimal();
            println!("nearly-minimal: {}", nm.holds());
            for id in &nm.meridian_edges {
                println!("edge {id} has the meridian slope");
            }
            for (a, b) in &nm.duplicate_pairs {
                println!("thin edges {a} and {b} share a slope");
            }
            Ok(())
        }
    }
}

fn parse_gluing(text: &str, pair: Option<&str>) -> lenslab::Result<GluingSpec> {
    let (a, b) = text
        .split_once("<->")
        .ok_or_else(|| lenslab::Error::Invalid("expected {a,b,c}<->{x,y,z}".into()))?;
    let a: SlopeTriple = a.trim().parse()?;
    let b: SlopeTriple = b.trim().parse()?;
    let mut pairing = [0, 1, 2];
    if let Some(p) = pair {
        for part in p.split(',') {
            let (i, j) = part
                .split_once(':')
                .ok_or_else(|| lenslab::Error::Invalid("pairing must look like 0:0,1:2,2:1".into()))?;
            let i: usize = i.trim().parse().map_err(|_| lenslab::Error::Invalid("bad pairing".into()))?;
            let j: usize = j.trim().parse().map_err(|_| lenslab::Error::Invalid("bad pairing".into()))?;
            if i > 2 || j > 2 {
                return Err(lenslab::Error::Invalid("pairing slots are 0..2".into()));
            }
            pairing[i] = j;
        }
    }
    Ok(GluingSpec { a, b, pairing })
}

fn lens_cmd(cmd: LensCmd) -> lenslab::Result<()> {
    match cmd {
        LensCmd::Identify { gluing, pair } => {
            let spec = parse_gluing(&gluing, pair.as_deref())?;
            println!("{}", identify_gluing(&spec)?);
            Ok(())
        }
        LensCmd::Build { x, y, emit } => {
            let (lp, slot) = build_lens(&BigUint::from(x), &BigUint::from(y))?;
            let lens = fold_symbolic(&lp, slot)?;
            println!("{lens}");
            println!("boundary class: {}", lp.fraction());
            println!("meridian triple: {} fold slot: {slot}", lp.meridian());
            println!("tetrahedra: {}", lp.tet_count());
            if emit.is_some() {
                let folded = lens::materialize_folded(&lp, slot)?;
                print!("{}", folded.tri.to_text());
            }
            Ok(())
        }
        LensCmd::Genus { x, y } => {
            match nonorientable_genus(x, y)? {
                NonorientableGenus::NoneOdd => println!("none (order is odd)"),
                NonorientableGenus::Incompressible(h) => println!("U_{h} (h={h})"),
                NonorientableGenus::ProjectivePlane => {
                    println!("U_1 (projective plane); every odd genus embeds")
                }
                NonorientableGenus::EveryEvenGenus => {
                    println!("no incompressible one; every even genus embeds")
                }
            }
            Ok(())
        }
        LensCmd::Check { spec, fold, efficiency } => {
            let lp = spec.build()?;
            let lens = fold_symbolic(&lp, fold)?;
            println!("{lens}");
            if lp.univalent_slot() == Some(fold) {
                println!("note: folding across the univalent edge");
            }
            let (rev, rslot) = reverse_description(&lp, fold)?;
            println!(
                "reversed view: {} fold slot {rslot} ({} tetrahedra)",
                rev.fraction(),
                rev.tet_count()
            );
            match efficiency {
                None => {}
                Some(0) => {
                    let v = is_zero_efficient(&lp, fold)?;
                    println!("0-efficient: {}", v.efficient);
                    print_witness(&v);
                }
                Some(1) => {
                    let v = is_one_efficient(&lp, fold)?;
                    println!("1-efficient: {}", v.efficient);
                    print_witness(&v);
                }
                Some(k) => {
                    return Err(lenslab::Error::Invalid(format!("no {k}-efficiency predicate")))
                }
            }
            Ok(())
        }
        LensCmd::Fill { tri, boundary, alpha } => {
            let text = std::fs::read_to_string(&tri)
                .map_err(|e| lenslab::Error::Invalid(format!("{}: {e}", tri.display())))?;
            let t = Triangulation::from_text(&text)?;
            let report = t.validate();
            if boundary >= report.boundary.len() {
                return Err(lenslab::Error::BoundaryNotTorus(format!(
                    "no boundary component {boundary}"
                )));
            }
            let triple: SlopeTriple = alpha.parse()?;
            let sk = t.skeleton();
            let mut classes: Vec<usize> = (0..sk.edge_classes.len())
                .filter(|&c| sk.edge_classes[c].boundary)
                .collect();
            classes.sort();
            if classes.len() != 3 {
                return Err(lenslab::Error::BoundaryNotTorus(format!(
                    "{} boundary edge classes",
                    classes.len()
                )));
            }
            let alpha = [
                (classes[0], triple.entry(0).clone()),
                (classes[1], triple.entry(1).clone()),
                (classes[2], triple.entry(2).clone()),
            ];
            let filled = lens::dehn_fill(&t, &alpha)?;
            print!("{}", filled.to_text());
            Ok(())
        }
        LensCmd::Sweep { max_x } => {
            use rayon::prelude::*;
            let pairs: Vec<(u64, u64)> = (1..=max_x)
                .flat_map(|x| (0..x.max(1)).map(move |y| (x, y)))
                .filter(|&(x, y)| if x == 1 { y == 0 } else { y > 0 && gcd(x, y) == 1 })
                .collect();
            let mut lines: Vec<(u64, u64, String)> = pairs
                .par_iter()
                .map(|&(x, y)| {
                    let line = (|| -> lenslab::Result<String> {
                        let (lp, slot) = lens::build_lens_u64(x, y)?;
                        let direct = fold_symbolic(&lp, slot)?;
                        let (rev, rslot) = reverse_description(&lp, slot)?;
                        let again = fold_symbolic(&rev, rslot)?;
                        let folded = lens::materialize_folded(&lp, slot)?;
                        let h = homology_h1(&folded.tri);
                        let ok = direct == again
                            && canonicalize(&BigUint::from(x), &BigUint::from(y))? == direct
                            && h.order() == Some(u128::from(x));
                        Ok(format!(
                            "L({x},{y}) -> {direct} reverse-ok={} h1={h}",
                            if ok { "yes" } else { "NO" }
                        ))
                    })();
                    (x, y, line.unwrap_or_else(|e| format!("L({x},{y}) error: {e}")))
                })
                .collect();
            lines.sort();
            for (_, _, line) in lines {
                println!("{line}");
            }
            Ok(())
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn print_witness(v: &lens::EfficiencyVerdict) {
    if let Some((reversed, edges)) = &v.witness {
        let view = if *reversed { "reversed view" } else { "direct view" };
        let ids: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
        println!("witness ({view}): {}", ids.join(", "));
    }
}

fn normal_cmd(cmd: NormalCmd) -> lenslab::Result<()> {
    let NormalCmd::Enumerate { tri, pq, fold, bound, octagons, closed_only, connected_only } = cmd;
    let (t, ctx) = match (tri, pq) {
        (Some(file), None) => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| lenslab::Error::Invalid(format!("{}: {e}", file.display())))?;
            (Triangulation::from_text(&text)?, None)
        }
        (None, Some(pq)) => {
            let lp = LayeredPath::build_minimal(&pq.parse::<LVertex>()?)?;
            match fold {
                Some(slot) => {
                    let folded = lens::materialize_folded(&lp, slot)?;
                    (folded.tri.clone(), None)
                }
                None => {
                    let mat = lp.materialize()?;
                    (mat.tri.clone(), Some((lp, mat)))
                }
            }
        }
        _ => return Err(lenslab::Error::Invalid("give exactly one of --tri or --pq".into())),
    };
    let sols = enumerate(&t, bound, octagons)?;
    for v in &sols {
        let rec = reconstruct(&t, v)?;
        if rec.components.is_empty() {
            continue;
        }
        if closed_only && rec.components.iter().any(|c| !c.closed) {
            continue;
        }
        if connected_only && rec.components.len() != 1 {
            continue;
        }
        let chi: i64 = rec.components.iter().map(|c| c.chi).sum();
        let orient = rec.components.iter().all(|c| c.orientable);
        let mut boundary = String::new();
        for c in &rec.components {
            for curve in &c.boundary_curves {
                let counts: Vec<String> =
                    curve.crossings.values().map(|n| n.to_string()).collect();
                boundary.push_str(&format!("{{{}}}", counts.join(",")));
            }
        }
        if boundary.is_empty() {
            boundary.push('-');
        }
        let class = match (&ctx, rec.components.len()) {
            (Some((lp, mat)), 1) => classify(lp, mat, &rec.components[0]).to_string(),
            _ => SurfaceClass::Unclassified.to_string(),
        };
        println!(
            "surface comps={} chi={} orient={} boundary={} class={} vec={}",
            rec.components.len(),
            chi,
            if orient { "y" } else { "n" },
            boundary,
            class,
            v
        );
    }
    Ok(())
}

fn tri_cmd(cmd: TriCmd) -> lenslab::Result<ExitCode> {
    let read = |file: &std::path::Path| -> lenslab::Result<Triangulation> {
        let text = std::fs::read_to_string(file)
            .map_err(|e| lenslab::Error::Invalid(format!("{}: {e}", file.display())))?;
        Triangulation::from_text(&text)
    };
    match cmd {
        TriCmd::Validate { file } => {
            let t = read(&file)?;
            let r = t.validate();
            println!(
                "tetrahedra={} vertices={} edges={} faces={} boundary-faces={} euler={}",
                r.tets, r.vertices, r.edges, r.faces, r.boundary_faces, r.euler
            );
            println!("orientable: {}", r.orientable);
            match &r.manifold {
                ManifoldVerdict::Manifold { closed } => {
                    println!("manifold: yes ({})", if *closed { "closed" } else { "with boundary" })
                }
                ManifoldVerdict::NotManifold { reversed_edges, bad_vertex_links } => {
                    println!("manifold: no");
                    for e in reversed_edges {
                        println!("  edge class {e} is identified to itself reversing orientation");
                    }
                    for v in bad_vertex_links {
                        println!("  vertex class {v} has a bad link");
                    }
                }
            }
            for (i, e) in r.edge_infos.iter().enumerate() {
                println!(
                    "edge {i}: degree={} {}",
                    e.degree,
                    if e.boundary { "boundary" } else { "interior" }
                );
            }
            for (i, b) in r.boundary.iter().enumerate() {
                println!(
                    "boundary component {i}: faces={} edges={} vertices={} euler={} kind={:?}",
                    b.faces, b.edges, b.vertices, b.euler, b.kind
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        TriCmd::Homology { file } => {
            let t = read(&file)?;
            println!("H1 = {}", homology_h1(&t));
            Ok(ExitCode::SUCCESS)
        }
        TriCmd::Iso { a, b } => {
            let (ta, tb) = (read(&a)?, read(&b)?);
            let iso = isomorphic(&ta, &tb, lenslab::guard::max_tets())?;
            println!("{}", if iso { "isomorphic" } else { "not isomorphic" });
            Ok(ExitCode::SUCCESS)
        }
    }
}
