//! The full battery of checks behind `veldkamp verify-all`.
//!
//! The report is deterministic: no timings, no paths, checks in a fixed
//! order. Checks that only make sense for `G2(7)` are skipped for other
//! ground sets.

use std::collections::BTreeSet;
use std::thread;

use itertools::Itertools;
use serde::Serialize;

use crate::error::Result;
use crate::export::SCHEMA_VERSION;
use crate::grassmannian::build_g2;
use crate::hyperplanes::{enumerate_hyperplanes, enumerate_hyperplanes_exhaustive, ORACLE_POINT_LIMIT};
use crate::incidence::{check_projective, IncidenceStructure};
use crate::magic_line::{
    build_magic_line, verify_cone, verify_core, verify_counts, verify_elliptic, verify_hyperbolic,
    verify_veldkamp_line_of_w, ConeReport, CoreReport, EllipticReport, HyperbolicReport, SectorCounts, WLineReport,
};
use crate::polar::{
    alpha_quadric, certify_symplectic, conwell_heptad, embedded_grassmannian, extract_symplectic, quadric_point_count,
    symplectic_by_orbits, QuadricKind,
};
use crate::veldkamp::{build_veldkamp, cross_check_forms, tabulate_census, Orbit, VeldkampSpace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub n: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn check(&self, id: u32) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn render(&self) -> String {
        let mut out = format!("verify-all, G2({})\n", self.n);
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{mark}] {:>2} {}: {}\n", c.id, c.name, c.detail));
        }
        out.push_str(if self.passed {
            "all checks passed\n"
        } else {
            "some checks failed\n"
        });
        out
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, id: u32, name: &'static str, passed: bool, detail: String) {
        self.0.push(Check {
            id,
            name,
            passed,
            detail,
        });
    }

    fn push_result(&mut self, id: u32, name: &'static str, r: Result<(bool, String)>) {
        match r {
            Ok((passed, detail)) => self.push(id, name, passed, detail),
            Err(e) => self.push(id, name, false, format!("error: {e}")),
        }
    }
}

/// Runs every check for `G2(n)`.
pub fn verify_all(n: usize) -> Result<VerifyReport> {
    let host = build_g2(n)?;
    let mut checks = Checks(Vec::new());
    checks.push_result(1, "hyperplane census", hyperplane_census(&host, n));
    checks.push_result(2, "oracle equivalence", oracle_equivalence(n));
    let v = build_veldkamp(&host)?;
    checks.push_result(3, "Veldkamp census", veldkamp_census(&v, n));
    let w = if n == 7 {
        Some(extract_symplectic(&v).to_structure(&v)?)
    } else {
        None
    };
    if let Some(w) = &w {
        checks.push_result(4, "core parity", Ok(core_parity(&v)));
        checks.push_result(5, "symplectic polar space", symplectic(&v, w));
        checks.push_result(6, "sub-geometries", sub_geometries(&v));
    }
    checks.push_result(7, "quadric point counts", quadric_counts());
    if let Some(w) = &w {
        let pivots = magic_lines(&v, w);
        checks.push_result(8, "magic lines", pivots.clone().map(|p| magic_summary(&p)));
        checks.push_result(9, "Veldkamp line of W", pivots.map(|p| w_line_summary(&p)));
    }
    let checks = checks.0;
    Ok(VerifyReport {
        schema: SCHEMA_VERSION,
        n,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn hyperplane_census(host: &IncidenceStructure, n: usize) -> Result<(bool, String)> {
    let hs = enumerate_hyperplanes(host);
    let expected = (1usize << (n - 1)) - 1;
    let labelled = hs.iter().filter(|h| h.partition.is_some()).count();
    let distinct: BTreeSet<String> = hs.iter().filter_map(|h| h.partition.map(|p| p.to_string())).collect();
    let mut ok = hs.len() == expected && labelled == hs.len() && distinct.len() == expected;
    let mut detail = format!("{} hyperplanes, {labelled} bipartitions of {{1..{n}}}", hs.len());
    if n == 7 {
        let mut split = [0usize; 3];
        for h in &hs {
            split[crate::veldkamp::classify_point(h)? as usize] += 1;
        }
        ok &= split == [35, 21, 7];
        detail.push_str(&format!("; α/β/γ = {}/{}/{}", split[0], split[1], split[2]));
    }
    Ok((ok, detail))
}

fn oracle_equivalence(n: usize) -> Result<(bool, String)> {
    let mut sizes: BTreeSet<usize> = [4, 5, 6].into();
    if n * (n - 1) / 2 <= ORACLE_POINT_LIMIT {
        sizes.insert(n);
    }
    let mut ok = true;
    let mut parts = Vec::new();
    for m in sizes {
        let host = build_g2(m)?;
        let fast = enumerate_hyperplanes(&host);
        let slow = enumerate_hyperplanes_exhaustive(&host)?;
        let same = fast == slow;
        ok &= same;
        parts.push(format!(
            "N={m}: {} {} {}",
            fast.len(),
            if same { "=" } else { "!=" },
            slow.len()
        ));
    }
    Ok((ok, parts.join(", ")))
}

fn veldkamp_census(v: &VeldkampSpace, n: usize) -> Result<(bool, String)> {
    let s = v.structure();
    let r = s.lines_through(0).len();
    let regular = (0..s.num_points()).all(|p| s.lines_through(p).len() == r);
    let projective = check_projective(s);
    let mut ok = regular && projective.holds();
    let mut detail = format!(
        "{} points, {} lines, {r} lines per point",
        v.num_points(),
        v.num_lines()
    );
    if let Some(w) = projective.witness() {
        detail.push_str(&format!("; not projective: {}", w.describe(s)));
    }
    if n == 7 {
        let c = tabulate_census(v)?;
        let orbits: Vec<usize> = Orbit::ALL.iter().map(|&o| c.line_count(o)).collect();
        let absent: usize = c.absent.iter().map(|x| x.1).sum();
        let forms = cross_check_forms(v)?;
        ok &= v.num_lines() == 651
            && orbits == [105, 210, 70, 105, 105, 35, 21]
            && absent == 0
            && c.other_lines == 0
            && r == 31
            && forms.iter().all(|f| f.identical);
        detail.push_str(&format!(
            "; orbits {}; absent types {absent}; forms {}",
            orbits.iter().join("/"),
            if forms.iter().all(|f| f.identical) {
                "agree"
            } else {
                "disagree"
            }
        ));
    }
    Ok((ok, detail))
}

fn core_parity(v: &VeldkampSpace) -> (bool, String) {
    let mut sizes: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); Orbit::ALL.len()];
    let mut well_defined = true;
    for l in 0..v.num_lines() {
        let [a, b, c] = v.line(l).map(|i| v.point(i).members);
        let triple = a & b & c;
        well_defined &= triple == (a & b) && triple == (a & c) && triple == (b & c);
        match v.orbit(l) {
            Some(o) => {
                sizes[o as usize].insert(triple.len());
            }
            None => well_defined = false,
        }
    }
    let expected = [3, 4, 6, 5, 7, 6, 10];
    let ok = well_defined && sizes.iter().zip(expected).all(|(s, e)| s.len() == 1 && s.contains(&e));
    let shown = sizes.iter().map(|s| s.iter().join("|")).join("/");
    (
        ok,
        format!("core sizes by orbit {shown}; triple = pairwise on every line: {well_defined}"),
    )
}

fn symplectic(v: &VeldkampSpace, w: &IncidenceStructure) -> Result<(bool, String)> {
    let cert = certify_symplectic(w);
    let same = extract_symplectic(v) == symplectic_by_orbits(v)?;
    let srg = cert.srg.map_or("not strongly regular".to_string(), |s| {
        format!("SRG({},{},{},{})", s.n, s.k, s.lambda, s.mu)
    });
    let mut detail = format!(
        "{} lines, {} per point, {srg}, parity selection = orbit selection: {same}",
        cert.lines,
        cert.lines_per_point.map_or("irregular".into(), |r| r.to_string())
    );
    if let Some(wit) = cert.one_or_all.witness() {
        detail.push_str(&format!("; one-or-all fails: {}", wit.describe(w)));
    }
    Ok((cert.is_w52() && same, detail))
}

fn sub_geometries(v: &VeldkampSpace) -> Result<(bool, String)> {
    let q = alpha_quadric(v)?;
    let q_ok = (q.points.len(), q.lines.len()) == (35, 105);
    let (g, _) = embedded_grassmannian(v)?;
    let (h, cert) = conwell_heptad(v)?;
    let ok =
        q_ok && (g.points.len(), g.lines.len()) == (21, 35) && h.points.len() == 7 && cert.is_maximal_exterior_set();
    let detail = format!(
        "Q+0: {}/{}; β copy of G2(7): {}/{}; heptad {} points, {} connecting lines, exterior {}, bound {}",
        q.points.len(),
        q.lines.len(),
        g.points.len(),
        g.lines.len(),
        cert.size,
        cert.connecting_lines.len(),
        cert.exterior,
        cert.bound
    );
    Ok((ok, detail))
}

fn quadric_counts() -> Result<(bool, String)> {
    let p = quadric_point_count(QuadricKind::Parabolic, 2, 2)?;
    let e = quadric_point_count(QuadricKind::Elliptic, 3, 2)?;
    let h = quadric_point_count(QuadricKind::Hyperbolic, 3, 2)?;
    Ok((
        (p, e, h) == (15, 27, 35),
        format!("Q(4,2) = {p}, Q-(5,2) = {e}, Q+(5,2) = {h}"),
    ))
}

#[derive(Debug, Clone)]
struct PivotReports {
    pivot: usize,
    counts: SectorCounts,
    core: CoreReport,
    elliptic: EllipticReport,
    hyperbolic: HyperbolicReport,
    cone: ConeReport,
    w_line: WLineReport,
}

fn pivot_reports(v: &VeldkampSpace, w: &IncidenceStructure, pivot: usize) -> Result<PivotReports> {
    let m = build_magic_line(v, pivot)?;
    Ok(PivotReports {
        pivot,
        counts: verify_counts(&m),
        core: verify_core(v, &m)?,
        elliptic: verify_elliptic(v, &m)?,
        hyperbolic: verify_hyperbolic(v, &m)?,
        cone: verify_cone(v, &m)?,
        w_line: verify_veldkamp_line_of_w(v, w, &m),
    })
}

fn magic_lines(v: &VeldkampSpace, w: &IncidenceStructure) -> Result<Vec<PivotReports>> {
    thread::scope(|scope| {
        let handles: Vec<_> = (1..=7).map(|g| scope.spawn(move || pivot_reports(v, w, g))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("pivot verification panicked"))
            .collect()
    })
}

fn magic_summary(ps: &[PivotReports]) -> (bool, String) {
    let failed: Vec<String> = ps
        .iter()
        .filter_map(|p| {
            let mut bad = Vec::new();
            if p.counts != SectorCounts::EXPECTED {
                bad.push(format!("sector counts {:?}", p.counts));
            }
            if !p.core.passes() {
                bad.push(format!("core {:?}", p.core));
            }
            if !p.elliptic.passes() {
                bad.push(format!("elliptic {:?}", p.elliptic));
            }
            if !p.hyperbolic.passes() {
                bad.push(format!("hyperbolic {:?}", p.hyperbolic));
            }
            if !p.cone.passes() {
                bad.push(format!("cone {:?}", p.cone));
            }
            (!bad.is_empty()).then(|| format!("pivot {}: {}", p.pivot, bad.join("; ")))
        })
        .collect();
    if !failed.is_empty() {
        return (false, failed.join(" | "));
    }
    let induced: BTreeSet<usize> = ps.iter().map(|p| p.cone.induced_lines).collect();
    (
        true,
        format!(
            "{} pivots: sectors 15/12/20/16 points, 15/30/90/15 lines; GQ(2,2) core, GQ(2,4) on 27 points, \
             Q+0 on 35, cone on 31 with 15 generators and {} induced lines",
            ps.len(),
            induced.iter().join("|")
        ),
    )
}

fn w_line_summary(ps: &[PivotReports]) -> (bool, String) {
    match ps.iter().find(|p| !p.w_line.passes()) {
        Some(p) => (false, format!("pivot {}: {:?}", p.pivot, p.w_line)),
        None => (
            true,
            format!("{} pivots: 27/35/31-point hyperplanes of W, pairwise meeting in the core, closed under the third-point rule", ps.len()),
        ),
    }
}
