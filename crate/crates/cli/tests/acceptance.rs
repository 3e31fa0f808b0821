use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::sync::OnceLock;

use veldkamp_core::grassmannian::build_g2;
use veldkamp_core::hyperplanes::{bipartition_hyperplane, enumerate_hyperplanes, enumerate_hyperplanes_exhaustive};
use veldkamp_core::incidence::{check_projective, collinearity_graph, srg_parameters, Verdict};
use veldkamp_core::magic_line::{
    build_magic_line, verify_cone, verify_core, verify_counts, verify_elliptic, verify_veldkamp_line_of_w, Sector,
    SectorCounts,
};
use veldkamp_core::polar::{
    alpha_quadric, conwell_heptad, embedded_grassmannian, exterior_set_bound, extract_symplectic, quadric_point_count,
    QuadricKind,
};
use veldkamp_core::veldkamp::{build_veldkamp, tabulate_census, Orbit, VPointType, VeldkampSpace};
use veldkamp_core::{IncidenceStructure, PointSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn space() -> &'static VeldkampSpace {
    static V: OnceLock<VeldkampSpace> = OnceLock::new();
    V.get_or_init(|| build_veldkamp(&build_g2(7).unwrap()).unwrap())
}

fn w() -> &'static IncidenceStructure {
    static W: OnceLock<IncidenceStructure> = OnceLock::new();
    W.get_or_init(|| extract_symplectic(space()).to_structure(space()).unwrap())
}

fn hyperplane_census() -> Outcome {
    let g = build_g2(7).map_err(|e| e.to_string())?;
    let found: BTreeSet<PointSet> = enumerate_hyperplanes(&g).iter().map(|h| h.members).collect();
    let mut canonical = BTreeSet::new();
    let mut split = [0usize; 3];
    for mask in 0u8..64 {
        // sides containing 1, proper
        let side: Vec<u8> = std::iter::once(1)
            .chain((2..=7).filter(|e| mask >> (e - 2) & 1 == 1))
            .collect();
        if side.len() == 7 {
            continue;
        }
        let larger = side.len().max(7 - side.len());
        split[larger - 4] += 1;
        canonical.insert(bipartition_hyperplane(7, &side).map_err(|e| e.to_string())?.members);
    }
    ensure!(found.len() == 63, "{} hyperplanes", found.len());
    ensure!(found == canonical, "hyperplanes differ from the bipartitions");
    ensure!(split == [35, 21, 7], "split {split:?}");
    Ok(format!(
        "63 hyperplanes = 63 bipartitions, {}/{}/{}",
        split[0], split[1], split[2]
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut parts = Vec::new();
    for n in [4, 5, 6] {
        let g = build_g2(n).map_err(|e| e.to_string())?;
        let fast = enumerate_hyperplanes(&g);
        let slow = enumerate_hyperplanes_exhaustive(&g).map_err(|e| e.to_string())?;
        ensure!(fast == slow, "N={n}: {} vs {}", fast.len(), slow.len());
        parts.push(format!("N={n}: {}", fast.len()));
    }
    ensure!(parts[0] == "N=4: 7", "{}", parts[0]);
    Ok(parts.join(", "))
}

fn veldkamp_census() -> Outcome {
    let v = space();
    let c = tabulate_census(v).map_err(|e| e.to_string())?;
    let orbits: Vec<usize> = Orbit::ALL.iter().map(|&o| c.line_count(o)).collect();
    ensure!(v.num_lines() == 651, "{} lines", v.num_lines());
    ensure!(orbits == [105, 210, 70, 105, 105, 35, 21], "orbits {orbits:?}");
    ensure!(c.absent.iter().all(|x| x.1 == 0), "absent types {:?}", c.absent);
    let s = v.structure();
    ensure!(
        (0..63).all(|p| s.lines_through(p).len() == 31),
        "not 31 lines per point"
    );
    let projective = check_projective(s);
    ensure!(projective == Verdict::Holds, "{:?}", projective);
    Ok("651 lines, 105/210/70/105/105/35/21, absent types 0, 31 per point, projective".into())
}

fn core_parity() -> Outcome {
    let v = space();
    let expected = [3, 4, 6, 5, 7, 6, 10];
    for l in 0..v.num_lines() {
        let [a, b, c] = v.line(l).map(|i| v.point(i).members);
        let core = a & b & c;
        ensure!(
            core == (a & b) && core == (a & c) && core == (b & c),
            "line {:?}",
            v.line_labels(l)
        );
        let o = v.orbit(l).ok_or("unclassified line")?;
        ensure!(core.len() == expected[o as usize], "{o} core of size {}", core.len());
    }
    Ok("cores 3/4/6/5/7/6/10 by orbit, triple = pairwise".into())
}

fn symplectic() -> Outcome {
    let w = w();
    ensure!(w.num_lines() == 315, "{} lines", w.num_lines());
    ensure!(
        (0..63).all(|p| w.lines_through(p).len() == 15),
        "not 15 lines per point"
    );
    let verdict = veldkamp_core::incidence::check_one_or_all(w);
    ensure!(
        verdict.holds(),
        "one-or-all fails: {}",
        verdict.witness().unwrap().describe(w)
    );
    let srg = srg_parameters(&collinearity_graph(w)).ok_or("not strongly regular")?;
    ensure!((srg.n, srg.k, srg.lambda, srg.mu) == (63, 30, 13, 15), "{srg:?}");
    Ok("315 lines, 15 per point, one-or-all holds, SRG(63,30,13,15)".into())
}

fn sub_geometries() -> Outcome {
    let v = space();
    let e = |e: veldkamp_core::Error| e.to_string();
    let q = alpha_quadric(v).map_err(e)?;
    ensure!(
        (q.points.len(), q.lines.len()) == (35, 105),
        "quadric {}/{}",
        q.points.len(),
        q.lines.len()
    );
    let (_, iso) = embedded_grassmannian(v).map_err(e)?;
    ensure!(iso.image == build_g2(7).map_err(e)?, "image is not G2(7)");
    for (i, pair) in &iso.point_map {
        let side = v.point(*i).partition.unwrap().second();
        ensure!(pair.elements().to_vec() == side, "{} maps to {pair}", v.label(*i));
    }
    let (h, cert) = conwell_heptad(v).map_err(e)?;
    let alpha = q.point_set();
    ensure!(
        h.points.len() == 7 && cert.connecting_lines.len() == 21,
        "heptad {}",
        h.points.len()
    );
    for &l in &cert.connecting_lines {
        ensure!(
            v.line(l).iter().all(|p| !alpha.contains(*p)),
            "line {:?} meets Q+0",
            v.line_labels(l)
        );
    }
    let bound = exterior_set_bound(3, 2).map_err(e)?;
    ensure!(bound == 7, "bound {bound}");
    Ok("Q+0 35/105, β points carry G2(7), heptad 7 = (2^3-1)/(2-1) exterior".into())
}

fn quadric_formulas() -> Outcome {
    let count = |k, n| quadric_point_count(k, n, 2).map_err(|e| e.to_string());
    let got = (
        count(QuadricKind::Parabolic, 2)?,
        count(QuadricKind::Elliptic, 3)?,
        count(QuadricKind::Hyperbolic, 3)?,
    );
    ensure!(got == (15, 27, 35), "{got:?}");
    ensure!(
        quadric_point_count(QuadricKind::Parabolic, 2, 6).is_err(),
        "q = 6 accepted"
    );
    Ok("15, 27, 35".into())
}

fn magic_lines() -> Outcome {
    let v = space();
    let e = |e: veldkamp_core::Error| e.to_string();
    let q = alpha_quadric(v).map_err(e)?;
    for g in 1..=7 {
        let m = build_magic_line(v, g).map_err(e)?;
        ensure!(
            verify_counts(&m) == SectorCounts::EXPECTED,
            "pivot {g}: {:?}",
            verify_counts(&m)
        );
        let core = verify_core(v, &m).map_err(e)?;
        ensure!(
            core.gq.valid && (core.gq.s, core.gq.t) == (2, 2),
            "pivot {g}: core {:?}",
            core.gq
        );
        let ell = verify_elliptic(v, &m).map_err(e)?;
        ensure!(
            ell.gq.valid && (ell.gq.s, ell.gq.t) == (2, 4) && (ell.points, ell.lines) == (27, 45),
            "pivot {g}: elliptic {ell:?}"
        );
        ensure!(
            m.object_points(Sector::Hyperbolic) == q.points && m.object_lines(Sector::Hyperbolic) == q.lines,
            "pivot {g}: core + hyperbolic differs from Q+0"
        );
        let cone = verify_cone(v, &m).map_err(e)?;
        ensure!(
            cone.points == 31 && cone.generators == 15 && cone.generators_through_vertex && cone.generators_partition,
            "pivot {g}: cone {cone:?}"
        );
        ensure!(v.point_type(m.vertex) == Some(VPointType::Gamma), "pivot {g}: vertex");
    }
    Ok("7 pivots: 15/12/20/16 points, 15/30/90/15 lines, GQ(2,2), GQ(2,4), Q+0, cone of 31".into())
}

fn veldkamp_line_of_w() -> Outcome {
    let v = space();
    for g in 1..=7 {
        let m = build_magic_line(v, g).map_err(|e| e.to_string())?;
        let r = verify_veldkamp_line_of_w(v, w(), &m);
        ensure!(r.passes(), "pivot {g}: {r:?}");
    }
    Ok("7 pivots: 27/35/31-point hyperplanes of W, pairwise = core, third-point rule".into())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut bytes = 0;
    for args in [&["verify-all", "--n", "7"][..], &["magic-line", "--all"]] {
        let mut exports = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("{}-{run}.json", args[0]));
            let status = Command::new(env!("CARGO_BIN_EXE_veldkamp"))
                .args(args)
                .arg("--json")
                .arg(&path)
                .output()
                .map_err(|e| e.to_string())?
                .status;
            ensure!(status.success(), "{} run {run} exited with {status}", args[0]);
            exports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        }
        ensure!(exports[0] == exports[1], "{} exports differ", args[0]);
        bytes += exports[0].len();
    }
    Ok(format!(
        "verify-all and magic-line exports identical across two runs ({bytes} bytes)"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("hyperplane census", hyperplane_census),
        ("oracle equivalence", oracle_equivalence),
        ("Veldkamp census", veldkamp_census),
        ("core parity", core_parity),
        ("symplectic extraction", symplectic),
        ("sub-geometries", sub_geometries),
        ("quadric formulas", quadric_formulas),
        ("magic line, all pivots", magic_lines),
        ("Veldkamp line of W", veldkamp_line_of_w),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
