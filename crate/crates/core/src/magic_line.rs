//! The magic Veldkamp line of `W(5,2)` inside the Veldkamp space of `G2(7)`.
//!
//! For each pivot `g ∈ {1..7}` the 63 points split by where `g` sits in
//! their bipartition label:
//!
//! | sector     | points                                  | count | lines |
//! |------------|-----------------------------------------|-------|-------|
//! | core       | α, `g` on the 3-side (`abcd:efg`)       | 15    | 15    |
//! | elliptic   | β, `g` on the 2-side; γ, `g` on the 6-side | 12 | 30    |
//! | hyperbolic | α, `g` on the 4-side (`abcg:def`)       | 20    | 90    |
//! | cone       | β, `g` on the 5-side; the vertex `abcdef:g` | 16 | 15    |
//!
//! Core ∪ elliptic is `GQ(2,4) ≅ Q⁻(5,2)`, core ∪ hyperbolic is the α
//! quadric `Q⁺₀(5,2)`, core ∪ cone is a quadratic cone with vertex
//! `abcdef:g` over the core `GQ(2,2)`. The three are hyperplanes of
//! `W(5,2)` forming one line of its Veldkamp space.
//!
//! Sector lines are generated from their generic forms (letter `g` is the
//! pivot, `a..f` range over the other six elements) and compared with the
//! `W`-lines induced on each point set.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperplanes::is_hyperplane;
use crate::incidence::{check_gq, GqParameters, IncidenceStructure, Violation};
use crate::pointset::PointSet;
use crate::polar::{alpha_quadric, quadric_point_count, QuadricKind};
use crate::veldkamp::{instantiate_form, Orbit, VPointType, VeldkampSpace};

const CORE_FORMS: &[[&str; 3]] = &[["abcd:efg", "abef:cdg", "cdef:abg"]];
const ELLIPTIC_FORMS: &[[&str; 3]] = &[
    ["abcd:efg", "abcdf:eg", "abcdeg:f"],
    ["abcd:efg", "abcde:fg", "abcdfg:e"],
];
const HYPERBOLIC_FORMS: &[[&str; 3]] = &[
    ["abcd:efg", "abeg:cdf", "cdeg:abf"],
    ["abcd:efg", "abfg:cde", "cdfg:abe"],
];
const CONE_FORMS: &[[&str; 3]] = &[["abcd:efg", "abcdg:ef", "abcdef:g"]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sector {
    Core,
    Elliptic,
    Hyperbolic,
    Cone,
}

impl Sector {
    pub const ALL: [Sector; 4] = [Sector::Core, Sector::Elliptic, Sector::Hyperbolic, Sector::Cone];

    pub fn name(&self) -> &'static str {
        match self {
            Sector::Core => "core",
            Sector::Elliptic => "elliptic",
            Sector::Hyperbolic => "hyperbolic",
            Sector::Cone => "cone",
        }
    }

    /// Sector of a point with the given type, where `pivot_on_smaller`
    /// says whether the pivot lies on the smaller side of its label.
    fn of(t: VPointType, pivot_on_smaller: bool) -> Sector {
        match (t, pivot_on_smaller) {
            (VPointType::Alpha, true) => Sector::Core,
            (VPointType::Alpha, false) => Sector::Hyperbolic,
            (VPointType::Beta, true) => Sector::Elliptic,
            (VPointType::Beta, false) => Sector::Cone,
            (VPointType::Gamma, true) => Sector::Cone,
            (VPointType::Gamma, false) => Sector::Elliptic,
        }
    }

    fn forms(&self) -> &'static [[&'static str; 3]] {
        match self {
            Sector::Core => CORE_FORMS,
            Sector::Elliptic => ELLIPTIC_FORMS,
            Sector::Hyperbolic => HYPERBOLIC_FORMS,
            Sector::Cone => CONE_FORMS,
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One magic Veldkamp line, as vpoint and vline indices of the ambient
/// Veldkamp space. Sector point and line lists are additional to the core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicLine {
    pub pivot: u8,
    pub core_points: Vec<usize>,
    pub core_lines: Vec<usize>,
    pub elliptic_points: Vec<usize>,
    pub elliptic_lines: Vec<usize>,
    pub hyperbolic_points: Vec<usize>,
    pub hyperbolic_lines: Vec<usize>,
    /// Includes the vertex.
    pub cone_points: Vec<usize>,
    /// The generators: lines through the vertex.
    pub cone_lines: Vec<usize>,
    pub vertex: usize,
    /// Every `W`-line lying inside each sector's point set (core included).
    pub induced: [Vec<usize>; 4],
    w_lines: Vec<bool>,
}

impl MagicLine {
    pub fn points(&self, s: Sector) -> &[usize] {
        match s {
            Sector::Core => &self.core_points,
            Sector::Elliptic => &self.elliptic_points,
            Sector::Hyperbolic => &self.hyperbolic_points,
            Sector::Cone => &self.cone_points,
        }
    }

    pub fn lines(&self, s: Sector) -> &[usize] {
        match s {
            Sector::Core => &self.core_lines,
            Sector::Elliptic => &self.elliptic_lines,
            Sector::Hyperbolic => &self.hyperbolic_lines,
            Sector::Cone => &self.cone_lines,
        }
    }

    /// `W`-lines induced on `core ∪ sector` (for the core: on the core).
    pub fn induced_lines(&self, s: Sector) -> &[usize] {
        &self.induced[s as usize]
    }

    pub fn sector_of(&self, p: usize) -> Sector {
        Sector::ALL
            .into_iter()
            .find(|&s| self.points(s).contains(&p))
            .expect("sectors cover every point")
    }

    /// Core ∪ sector, the full point set of the corresponding object.
    pub fn object_points(&self, s: Sector) -> Vec<usize> {
        let mut pts: Vec<usize> = self.core_points.clone();
        if s != Sector::Core {
            pts.extend_from_slice(self.points(s));
        }
        pts.sort_unstable();
        pts
    }

    /// Core lines plus the sector's listed lines.
    pub fn object_lines(&self, s: Sector) -> Vec<usize> {
        let mut lines: Vec<usize> = self.core_lines.clone();
        if s != Sector::Core {
            lines.extend_from_slice(self.lines(s));
        }
        lines.sort_unstable();
        lines
    }

    pub fn is_w_line(&self, l: usize) -> bool {
        self.w_lines[l]
    }
}

fn form_lines(v: &VeldkampSpace, pivot: u8, forms: &[[&str; 3]]) -> Result<Vec<usize>> {
    let others: Vec<u8> = (1..=7).filter(|&e| e != pivot).collect();
    let mut out = BTreeSet::new();
    for perm in itertools::Itertools::permutations(others.iter().copied(), 6) {
        let mut assignment = perm;
        assignment.push(pivot);
        for form in forms {
            let mut idx = [0usize; 3];
            for (slot, f) in idx.iter_mut().zip(form) {
                let p = instantiate_form(f, &assignment)?;
                *slot = v
                    .index_of_partition(&p)
                    .ok_or_else(|| Error::FormNotALine(p.to_string()))?;
            }
            let l = v
                .find_line(idx)
                .ok_or_else(|| Error::FormNotALine(idx.map(|i| v.label(i).to_string()).join(" / ")))?;
            out.insert(l);
        }
    }
    Ok(out.into_iter().collect())
}

/// Builds the magic line for pivot `g ∈ {1..7}`.
pub fn build_magic_line(v: &VeldkampSpace, pivot: usize) -> Result<MagicLine> {
    if !v.is_classified() {
        return Err(Error::NotClassified);
    }
    if !(1..=7).contains(&pivot) {
        return Err(Error::PivotOutOfRange(pivot));
    }
    let g = pivot as u8;
    let mut sectors: [Vec<usize>; 4] = Default::default();
    let mut vertex = None;
    for i in 0..v.num_points() {
        let t = v.point_type(i).expect("classified");
        let part = v.point(i).partition.expect("classified points are labelled");
        let s = Sector::of(t, !part.in_first(g));
        if t == VPointType::Gamma && s == Sector::Cone {
            vertex = Some(i);
        }
        sectors[s as usize].push(i);
    }
    let w_lines: Vec<bool> = (0..v.num_lines()).map(|l| v.core(l).len() % 2 == 1).collect();
    let [core, elliptic, hyperbolic, cone] = sectors;
    let mut m = MagicLine {
        pivot: g,
        core_lines: form_lines(v, g, CORE_FORMS)?,
        elliptic_lines: form_lines(v, g, Sector::Elliptic.forms())?,
        hyperbolic_lines: form_lines(v, g, Sector::Hyperbolic.forms())?,
        cone_lines: form_lines(v, g, Sector::Cone.forms())?,
        core_points: core,
        elliptic_points: elliptic,
        hyperbolic_points: hyperbolic,
        cone_points: cone,
        vertex: vertex.expect("exactly one γ point has the pivot alone"),
        induced: Default::default(),
        w_lines,
    };
    m.induced = Sector::ALL.map(|s| {
        let set: PointSet = m.object_points(s).iter().collect();
        (0..v.num_lines())
            .filter(|&l| m.w_lines[l] && v.line(l).iter().all(|&p| set.contains(p)))
            .collect()
    });
    Ok(m)
}

/// `(points, lines)` per sector, additional to the core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SectorCounts {
    pub core: (usize, usize),
    pub elliptic: (usize, usize),
    pub hyperbolic: (usize, usize),
    pub cone: (usize, usize),
}

impl SectorCounts {
    pub const EXPECTED: SectorCounts = SectorCounts {
        core: (15, 15),
        elliptic: (12, 30),
        hyperbolic: (20, 90),
        cone: (16, 15),
    };

    pub fn total_points(&self) -> usize {
        self.core.0 + self.elliptic.0 + self.hyperbolic.0 + self.cone.0
    }
}

pub fn verify_counts(m: &MagicLine) -> SectorCounts {
    let c = |s: Sector| (m.points(s).len(), m.lines(s).len());
    SectorCounts {
        core: c(Sector::Core),
        elliptic: c(Sector::Elliptic),
        hyperbolic: c(Sector::Hyperbolic),
        cone: c(Sector::Cone),
    }
}

fn object_structure(v: &VeldkampSpace, m: &MagicLine, s: Sector) -> Result<IncidenceStructure> {
    v.substructure(&m.object_points(s), &m.object_lines(s))
}

fn only_sector_lines_induced(m: &MagicLine, s: Sector) -> bool {
    let listed: BTreeSet<usize> = m.object_lines(s).into_iter().collect();
    let induced: BTreeSet<usize> = m.induced_lines(s).iter().copied().collect();
    listed == induced
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreReport {
    pub gq: GqParameters,
    pub points: usize,
    pub lines: usize,
    /// The form-built lines are exactly the `W`-lines on the core.
    pub forms_match_induced: bool,
    pub all_lines_aaa: bool,
    /// `|Q(4,2)|`
    pub parabolic_count: u64,
}

impl CoreReport {
    pub fn passes(&self) -> bool {
        self.gq.valid
            && (self.gq.s, self.gq.t) == (2, 2)
            && self.points == 15
            && self.lines == 15
            && self.forms_match_induced
            && self.all_lines_aaa
            && self.parabolic_count == self.points as u64
    }
}

pub fn verify_core(v: &VeldkampSpace, m: &MagicLine) -> Result<CoreReport> {
    let c = object_structure(v, m, Sector::Core)?;
    Ok(CoreReport {
        gq: check_gq(&c),
        points: c.num_points(),
        lines: c.num_lines(),
        forms_match_induced: only_sector_lines_induced(m, Sector::Core),
        all_lines_aaa: m.core_lines.iter().all(|&l| v.orbit(l) == Some(Orbit::Aaa)),
        parabolic_count: quadric_point_count(QuadricKind::Parabolic, 2, 2)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EllipticReport {
    pub gq: GqParameters,
    pub points: usize,
    pub lines: usize,
    pub beta_points: usize,
    pub gamma_points: usize,
    pub all_lines_abg: bool,
    pub forms_match_induced: bool,
    /// `|Q⁻(5,2)|`
    pub elliptic_count: u64,
}

impl EllipticReport {
    pub fn passes(&self) -> bool {
        self.gq.valid
            && (self.gq.s, self.gq.t) == (2, 4)
            && self.points == 27
            && self.lines == 45
            && (self.beta_points, self.gamma_points) == (6, 6)
            && self.all_lines_abg
            && self.forms_match_induced
            && self.elliptic_count == self.points as u64
    }
}

pub fn verify_elliptic(v: &VeldkampSpace, m: &MagicLine) -> Result<EllipticReport> {
    let c = object_structure(v, m, Sector::Elliptic)?;
    let count = |t| {
        m.elliptic_points
            .iter()
            .filter(|&&p| v.point_type(p) == Some(t))
            .count()
    };
    Ok(EllipticReport {
        gq: check_gq(&c),
        points: c.num_points(),
        lines: c.num_lines(),
        beta_points: count(VPointType::Beta),
        gamma_points: count(VPointType::Gamma),
        all_lines_abg: m.elliptic_lines.iter().all(|&l| v.orbit(l) == Some(Orbit::Abg)),
        forms_match_induced: only_sector_lines_induced(m, Sector::Elliptic),
        elliptic_count: quadric_point_count(QuadricKind::Elliptic, 3, 2)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperbolicReport {
    pub points: usize,
    pub lines: usize,
    pub equals_alpha_quadric_points: bool,
    pub equals_alpha_quadric_lines: bool,
    pub all_lines_aaa: bool,
    pub forms_match_induced: bool,
    /// `|Q⁺(5,2)|`
    pub hyperbolic_count: u64,
}

impl HyperbolicReport {
    pub fn passes(&self) -> bool {
        self.points == 35
            && self.lines == 105
            && self.equals_alpha_quadric_points
            && self.equals_alpha_quadric_lines
            && self.all_lines_aaa
            && self.forms_match_induced
            && self.hyperbolic_count == self.points as u64
    }
}

pub fn verify_hyperbolic(v: &VeldkampSpace, m: &MagicLine) -> Result<HyperbolicReport> {
    let q0 = alpha_quadric(v)?;
    let points = m.object_points(Sector::Hyperbolic);
    let lines = m.object_lines(Sector::Hyperbolic);
    Ok(HyperbolicReport {
        points: points.len(),
        lines: lines.len(),
        equals_alpha_quadric_points: points == q0.points,
        equals_alpha_quadric_lines: lines == q0.lines,
        all_lines_aaa: lines.iter().all(|&l| v.orbit(l) == Some(Orbit::Aaa)),
        forms_match_induced: only_sector_lines_induced(m, Sector::Hyperbolic),
        hyperbolic_count: quadric_point_count(QuadricKind::Hyperbolic, 3, 2)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeReport {
    pub vertex: String,
    pub points: usize,
    pub beta_points: usize,
    pub generators: usize,
    pub generators_through_vertex: bool,
    /// Each generator holds the vertex, one core point and one sector β point.
    pub generators_well_formed: bool,
    /// The generators minus the vertex partition the other 30 points.
    pub generators_partition: bool,
    /// All `W`-lines inside the cone's 31 points.
    pub induced_lines: usize,
    /// The cone with all induced lines, checked as a generalized quadrangle.
    pub gq: GqParameters,
    /// A line off the vertex with the number of its points collinear with
    /// the vertex, when that number is not one.
    pub vertex_transversals: Option<Violation>,
}

impl ConeReport {
    pub fn passes(&self) -> bool {
        self.points == 31
            && self.points == 1 + 2 * self.generators
            && self.beta_points == 15
            && self.generators == 15
            && self.generators_through_vertex
            && self.generators_well_formed
            && self.generators_partition
            && !self.gq.valid
            && self.vertex_transversals.is_some()
    }
}

pub fn verify_cone(v: &VeldkampSpace, m: &MagicLine) -> Result<ConeReport> {
    let points = m.object_points(Sector::Cone);
    let core: PointSet = m.core_points.iter().collect();
    let beta: PointSet = m
        .cone_points
        .iter()
        .copied()
        .filter(|&p| v.point_type(p) == Some(VPointType::Beta))
        .collect();
    let through = m.cone_lines.iter().all(|&l| v.line(l).contains(&m.vertex));
    let well_formed = m.cone_lines.iter().all(|&l| {
        let members: PointSet = v.line(l).iter().collect();
        members.contains(m.vertex) && (members & core).len() == 1 && (members & beta).len() == 1
    });
    let mut covered = PointSet::EMPTY;
    let mut disjoint = true;
    for &l in &m.cone_lines {
        let rest: PointSet = v.line(l).iter().filter(|&&p| p != m.vertex).collect();
        disjoint &= (covered & rest).is_empty();
        covered |= rest;
    }
    let others: PointSet = points.iter().copied().filter(|&p| p != m.vertex).collect();
    let induced = m.induced_lines(Sector::Cone);
    let c = v.substructure(&points, induced)?;
    let apex = c.index_of(v.label(m.vertex)).expect("vertex is a cone point");
    let seen = c.collinear_with(apex);
    let vertex_transversals = (0..c.num_lines()).find_map(|l| {
        let line = c.line(l);
        let count = (line & seen).len();
        (!line.contains(apex) && count != 1).then_some(Violation::Transversals {
            point: apex,
            line: l,
            count,
        })
    });
    Ok(ConeReport {
        vertex: v.label(m.vertex).to_string(),
        points: points.len(),
        beta_points: beta.len(),
        generators: m.cone_lines.len(),
        generators_through_vertex: through,
        generators_well_formed: well_formed,
        generators_partition: disjoint && covered == others,
        induced_lines: induced.len(),
        gq: check_gq(&c),
        vertex_transversals,
    })
}

/// Whether the elliptic, hyperbolic and cone point sets form a line of the
/// Veldkamp space of `W(5,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WLineReport {
    /// Sizes of the elliptic, hyperbolic and cone sets.
    pub sizes: [usize; 3],
    /// Each set is a geometric hyperplane of `W`.
    pub hyperplanes: [bool; 3],
    /// All three pairwise intersections equal the core.
    pub pairwise_core: bool,
    /// The complement of the symmetric difference of any two is the third.
    pub third_point_rule: bool,
}

impl WLineReport {
    pub fn passes(&self) -> bool {
        self.sizes == [27, 35, 31] && self.hyperplanes.iter().all(|&h| h) && self.pairwise_core && self.third_point_rule
    }
}

/// `w` must be the symplectic polar space on all vpoints, with indices as
/// in `v` (see [`crate::polar::PolarSubspace::to_structure`]).
pub fn verify_veldkamp_line_of_w(v: &VeldkampSpace, w: &IncidenceStructure, m: &MagicLine) -> WLineReport {
    assert_eq!(w.labels(), v.structure().labels(), "W must share the vpoint indexing");
    let set = |s: Sector| -> PointSet { m.object_points(s).iter().collect() };
    let e = set(Sector::Elliptic);
    let h = set(Sector::Hyperbolic);
    let c = set(Sector::Cone);
    let core = set(Sector::Core);
    let n = w.num_points();
    let third = |x: PointSet, y: PointSet| (x ^ y).complement(n);
    WLineReport {
        sizes: [e.len(), h.len(), c.len()],
        hyperplanes: [e, h, c].map(|x| is_hyperplane(w, x)),
        pairwise_core: (e & h) == core && (e & c) == core && (h & c) == core,
        third_point_rule: third(e, h) == c && third(e, c) == h && third(h, c) == e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmannian::build_g2;
    use crate::veldkamp::build_veldkamp;

    #[test]
    fn pivot_and_classification_errors() {
        let v = build_veldkamp(&build_g2(7).unwrap()).unwrap();
        assert_eq!(build_magic_line(&v, 0).unwrap_err(), Error::PivotOutOfRange(0));
        assert_eq!(build_magic_line(&v, 8).unwrap_err(), Error::PivotOutOfRange(8));
        let small = build_veldkamp(&build_g2(5).unwrap()).unwrap();
        assert_eq!(build_magic_line(&small, 1).unwrap_err(), Error::NotClassified);
    }

    #[test]
    fn sector_rule() {
        use VPointType::*;
        assert_eq!(Sector::of(Alpha, true), Sector::Core);
        assert_eq!(Sector::of(Gamma, true), Sector::Cone);
        assert_eq!(Sector::of(Gamma, false), Sector::Elliptic);
        assert_eq!(Sector::of(Beta, false), Sector::Cone);
    }
}
