//! Veldkamp spaces of structures with three points per line.
//!
//! The points of the Veldkamp space are the geometric hyperplanes of the
//! host; the line through two of them `H1`, `H2` is
//! `{H1, H2, complement(H1 Δ H2)}`, and all three share the same pairwise
//! intersection, the *core* of the line.
//!
//! Over `G2(7)` every point is a bipartition of `{1..7}`, typed by its side
//! sizes:
//!
//! | type | split | constituents                                     | count |
//! |------|-------|--------------------------------------------------|-------|
//! | α    | 4:3   | Pasch configuration and its complementary line   | 35    |
//! | β    | 5:2   | Desargues configuration and its complementary point | 21 |
//! | γ    | 6:1   | Cayley-Salmon configuration                      | 7     |
//!
//! and the 651 lines fall into seven orbits by their multiset of point
//! types ([`Orbit`]). The lines are built here by pairwise closure and,
//! independently, by instantiating the orbit forms over all relabellings
//! of `{1..7}` ([`cross_check_forms`]).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::grassmannian::{recognize_g2_host, NamedConfiguration, PairPoint};
use crate::hyperplanes::{enumerate_hyperplanes, is_hyperplane, recognize_bipartition, Bipartition, Hyperplane};
use crate::incidence::IncidenceStructure;
use crate::pointset::PointSet;

/// Point type of the Veldkamp space of `G2(7)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VPointType {
    Alpha,
    Beta,
    Gamma,
}

impl VPointType {
    pub const ALL: [VPointType; 3] = [VPointType::Alpha, VPointType::Beta, VPointType::Gamma];

    pub fn symbol(&self) -> &'static str {
        match self {
            VPointType::Alpha => "α",
            VPointType::Beta => "β",
            VPointType::Gamma => "γ",
        }
    }

    /// Generic form of a point of this type.
    pub fn form(&self) -> &'static str {
        match self {
            VPointType::Alpha => "abcd:efg",
            VPointType::Beta => "abcde:fg",
            VPointType::Gamma => "abcdef:g",
        }
    }

    /// Side sizes, larger first.
    pub fn split(&self) -> (usize, usize) {
        match self {
            VPointType::Alpha => (4, 3),
            VPointType::Beta => (5, 2),
            VPointType::Gamma => (6, 1),
        }
    }

    /// The pair of complementary Grassmannians making up a point of this
    /// type, e.g. "Pasch configuration and its complementary line".
    pub fn constituents(&self) -> String {
        let (a, b) = self.split();
        let big = NamedConfiguration::of_ground_size(a).expect("sides of size 4..=6");
        match NamedConfiguration::of_ground_size(b) {
            Some(small) => format!("{big} and its complementary {small}"),
            None => big.to_string(),
        }
    }
}

impl fmt::Display for VPointType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Sorted multiset of the three point types on a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineType(pub [VPointType; 3]);

impl LineType {
    pub fn new(mut types: [VPointType; 3]) -> Self {
        types.sort();
        LineType(types)
    }

    pub fn orbit(&self) -> Option<Orbit> {
        Orbit::ALL.into_iter().find(|o| o.line_type() == *self)
    }
}

impl fmt::Display for LineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a}, {b}, {c})")
    }
}

/// Line types that never occur in the Veldkamp space of `G2(7)`.
pub const ABSENT_LINE_TYPES: [LineType; 3] = {
    use VPointType::*;
    [
        LineType([Alpha, Gamma, Gamma]),
        LineType([Beta, Beta, Gamma]),
        LineType([Gamma, Gamma, Gamma]),
    ]
};

/// The seven line orbits of the Veldkamp space of `G2(7)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orbit {
    Aaa,
    Aab,
    Aag,
    Abb,
    Abg,
    Bbb,
    Bgg,
}

impl Orbit {
    pub const ALL: [Orbit; 7] = [
        Orbit::Aaa,
        Orbit::Aab,
        Orbit::Aag,
        Orbit::Abb,
        Orbit::Abg,
        Orbit::Bbb,
        Orbit::Bgg,
    ];

    pub fn line_type(&self) -> LineType {
        use VPointType::*;
        LineType(match self {
            Orbit::Aaa => [Alpha, Alpha, Alpha],
            Orbit::Aab => [Alpha, Alpha, Beta],
            Orbit::Aag => [Alpha, Alpha, Gamma],
            Orbit::Abb => [Alpha, Beta, Beta],
            Orbit::Abg => [Alpha, Beta, Gamma],
            Orbit::Bbb => [Beta, Beta, Beta],
            Orbit::Bgg => [Beta, Gamma, Gamma],
        })
    }

    /// A generic line of the orbit; letters `a..g` stand for the seven
    /// distinct elements.
    pub fn forms(&self) -> [&'static str; 3] {
        match self {
            Orbit::Aaa => ["abcd:efg", "abef:cdg", "cdef:abg"],
            Orbit::Aab => ["abcd:efg", "abce:dfg", "abcfg:de"],
            Orbit::Aag => ["abc:defg", "def:abcg", "abcdef:g"],
            Orbit::Abb => ["abcd:efg", "ab:cdefg", "cd:abefg"],
            Orbit::Abg => ["abcd:efg", "abcde:fg", "abcdfg:e"],
            Orbit::Bbb => ["abcde:fg", "abcdf:eg", "abcdg:ef"],
            Orbit::Bgg => ["abcde:fg", "abcdef:g", "abcdeg:f"],
        }
    }

    /// Cell sizes of the core, as a union of disjoint sub-Grassmannians.
    pub fn core_cells(&self) -> &'static [usize] {
        match self {
            Orbit::Aaa => &[2, 2, 2],
            Orbit::Aab => &[3, 2],
            Orbit::Aag => &[3, 3],
            Orbit::Abb => &[3, 2, 2],
            Orbit::Abg => &[4, 2],
            Orbit::Bbb => &[4],
            Orbit::Bgg => &[5],
        }
    }

    /// Number of host points in the core.
    pub fn core_size(&self) -> usize {
        self.core_cells().iter().map(|m| m * (m - 1) / 2).sum()
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.line_type().fmt(f)
    }
}

/// The core of a line over `G2(N)` as a disjoint union of complete
/// sub-Grassmannians `G2(m)`, `m ≥ 2`, recorded by their ground sizes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoreShape {
    /// Ground sizes of the components, descending.
    pub cells: Vec<usize>,
}

impl CoreShape {
    /// Recognises `core` (a point set of the `G2(N)` host) as a disjoint
    /// union of sub-Grassmannians, or `None` if it is not one.
    pub fn recognize(host: &IncidenceStructure, core: PointSet) -> Option<CoreShape> {
        let n = recognize_g2_host(host)?;
        let pairs: Vec<PairPoint> = core
            .iter()
            .map(|p| PairPoint::parse(host.label(p)).expect("G2 label"))
            .collect();
        // union-find over elements 1..=n
        let mut parent: Vec<usize> = (0..=n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in &pairs {
            let [a, b] = p.elements();
            let (ra, rb) = (root(&mut parent, a as usize), root(&mut parent, b as usize));
            parent[ra] = rb;
        }
        let mut cells: BTreeMap<usize, usize> = BTreeMap::new();
        for e in 1..=n {
            *cells.entry(root(&mut parent, e)).or_default() += 1;
        }
        let mut sizes: Vec<usize> = cells.into_values().filter(|&m| m >= 2).collect();
        let expected: usize = sizes.iter().map(|m| m * (m - 1) / 2).sum();
        if expected != pairs.len() {
            return None;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Some(CoreShape { cells: sizes })
    }

    pub fn num_points(&self) -> usize {
        self.cells.iter().map(|m| m * (m - 1) / 2).sum()
    }
}

impl fmt::Display for CoreShape {
    /// Reads like "a line and two non-collinear points".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return f.write_str("empty");
        }
        let mut parts = Vec::new();
        for (m, group) in &self.cells.iter().chunk_by(|&&m| m) {
            let count = group.count();
            let name = NamedConfiguration::of_ground_size(m).map_or_else(|| format!("G2({m})"), str::to_string);
            let part = match (count, m) {
                (1, _) => format!("a {name}"),
                (2, 2) => "two non-collinear points".to_string(),
                (3, 2) => "three mutually non-collinear points".to_string(),
                (2, 3) => "two disjoint lines".to_string(),
                (c, _) => format!("{c} disjoint {name}s"),
            };
            parts.push(part);
        }
        f.write_str(&parts.join(" and "))
    }
}

/// Type and core of a Veldkamp line over `G2(7)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineClass {
    pub line_type: LineType,
    pub orbit: Option<Orbit>,
    pub core: PointSet,
    pub shape: Option<CoreShape>,
}

/// α/β/γ by side sizes 4:3 / 5:2 / 6:1.
pub fn classify_point(h: &Hyperplane) -> Result<VPointType> {
    let p = h.partition.ok_or(Error::Unlabelled)?;
    if p.ground_size() != 7 {
        return Err(Error::Unlabelled);
    }
    Ok(match p.sizes() {
        (4, 3) => VPointType::Alpha,
        (5, 2) => VPointType::Beta,
        (6, 1) => VPointType::Gamma,
        _ => unreachable!("bipartitions of seven elements are 4:3, 5:2 or 6:1"),
    })
}

/// Classifies the line through three hyperplanes of a `G2(7)` host.
pub fn classify_line(host: &IncidenceStructure, members: [&Hyperplane; 3]) -> Result<LineClass> {
    let types = [
        classify_point(members[0])?,
        classify_point(members[1])?,
        classify_point(members[2])?,
    ];
    let line_type = LineType::new(types);
    let core = members[0].members & members[1].members & members[2].members;
    Ok(LineClass {
        line_type,
        orbit: line_type.orbit(),
        core,
        shape: CoreShape::recognize(host, core),
    })
}

/// `complement(h1 Δ h2)`, certified as a hyperplane of `host`.
pub fn third_point(host: &IncidenceStructure, h1: &Hyperplane, h2: &Hyperplane) -> Result<Hyperplane> {
    if h1.members == h2.members {
        return Err(Error::EqualHyperplanes);
    }
    if host.uniform_line_size() != Some(3) {
        return Err(Error::NotThreePointLines);
    }
    let members = (h1.members ^ h2.members).complement(host.num_points());
    let h = Hyperplane {
        members,
        partition: recognize_bipartition(host, members),
    };
    if !is_hyperplane(host, members) {
        return Err(Error::ThirdPointNotHyperplane(h.label(host)));
    }
    Ok(h)
}

/// The Veldkamp space of a linear structure with three points per line.
#[derive(Debug, Clone)]
pub struct VeldkampSpace {
    host: IncidenceStructure,
    points: Vec<Hyperplane>,
    lines: Vec<[usize; 3]>,
    point_types: Option<Vec<VPointType>>,
    line_classes: Option<Vec<LineClass>>,
    structure: IncidenceStructure,
    by_partition: HashMap<Bipartition, usize>,
}

pub fn build_veldkamp(host: &IncidenceStructure) -> Result<VeldkampSpace> {
    if host.uniform_line_size() != Some(3) {
        return Err(Error::NotThreePointLines);
    }
    if !host.is_linear() {
        return Err(Error::NotLinear);
    }
    let points = enumerate_hyperplanes(host);
    if points.len() < 2 {
        return Err(Error::TooFewHyperplanes(points.len()));
    }
    let index: HashMap<PointSet, usize> = points.iter().enumerate().map(|(i, h)| (h.members, i)).collect();
    let mut lines = BTreeSet::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let h = third_point(host, &points[i], &points[j])?;
            let &k = index
                .get(&h.members)
                .ok_or_else(|| Error::ThirdPointNotHyperplane(h.label(host)))?;
            let mut triple = [i, j, k];
            triple.sort_unstable();
            lines.insert(triple);
        }
    }
    let lines: Vec<[usize; 3]> = lines.into_iter().collect();

    let labels: Vec<String> = points.iter().map(|h| h.label(host)).collect();
    let structure =
        IncidenceStructure::from_line_sets(labels.clone(), lines.iter().map(|t| t.iter().collect()).collect())?;
    debug_assert_eq!(structure.labels(), &labels[..], "vpoints already in label order");

    let point_types: Option<Vec<VPointType>> = points.iter().map(|h| classify_point(h).ok()).collect();
    let line_classes = match point_types {
        Some(_) => Some(
            lines
                .iter()
                .map(|t| classify_line(host, [&points[t[0]], &points[t[1]], &points[t[2]]]))
                .collect::<Result<Vec<_>>>()?,
        ),
        None => None,
    };
    let by_partition = points
        .iter()
        .enumerate()
        .filter_map(|(i, h)| h.partition.map(|p| (p, i)))
        .collect();
    Ok(VeldkampSpace {
        host: host.clone(),
        points,
        lines,
        point_types,
        line_classes,
        structure,
        by_partition,
    })
}

impl VeldkampSpace {
    pub fn host(&self) -> &IncidenceStructure {
        &self.host
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn point(&self, i: usize) -> &Hyperplane {
        &self.points[i]
    }

    pub fn points(&self) -> &[Hyperplane] {
        &self.points
    }

    pub fn line(&self, l: usize) -> [usize; 3] {
        self.lines[l]
    }

    pub fn lines(&self) -> &[[usize; 3]] {
        &self.lines
    }

    pub fn label(&self, i: usize) -> &str {
        self.structure.label(i)
    }

    pub fn line_labels(&self, l: usize) -> [&str; 3] {
        self.lines[l].map(|i| self.label(i))
    }

    /// Whether points and lines carry their α/β/γ classification (only for
    /// `G2(7)` hosts).
    pub fn is_classified(&self) -> bool {
        self.point_types.is_some()
    }

    pub fn point_type(&self, i: usize) -> Option<VPointType> {
        self.point_types.as_ref().map(|t| t[i])
    }

    pub fn line_class(&self, l: usize) -> Option<&LineClass> {
        self.line_classes.as_ref().map(|c| &c[l])
    }

    pub fn orbit(&self, l: usize) -> Option<Orbit> {
        self.line_class(l).and_then(|c| c.orbit)
    }

    /// The common intersection of the three points of line `l`.
    pub fn core(&self, l: usize) -> PointSet {
        let [a, b, c] = self.lines[l];
        self.points[a].members & self.points[b].members & self.points[c].members
    }

    /// The space as an incidence structure; indices coincide with vpoint
    /// indices.
    pub fn structure(&self) -> &IncidenceStructure {
        &self.structure
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.structure.index_of(label)
    }

    pub fn index_of_partition(&self, p: &Bipartition) -> Option<usize> {
        self.by_partition.get(p).copied()
    }

    /// The line through two distinct vpoints.
    pub fn line_through(&self, a: usize, b: usize) -> Option<usize> {
        self.structure.line_through(a, b)
    }

    /// The line with the given three members, in any order.
    pub fn find_line(&self, members: [usize; 3]) -> Option<usize> {
        let mut t = members;
        t.sort_unstable();
        self.lines.binary_search(&t).ok()
    }

    /// Looks up a line by the labels of its members.
    pub fn find_line_by_labels(&self, labels: [&str; 3]) -> Option<usize> {
        let idx = labels.map(|s| s.parse::<Bipartition>().ok().and_then(|p| self.index_of_partition(&p)));
        match idx {
            [Some(a), Some(b), Some(c)] => self.find_line([a, b, c]),
            _ => None,
        }
    }

    /// Incidence structure on selected vpoints and vlines, labelled as in
    /// this space.
    pub fn substructure(&self, points: &[usize], lines: &[usize]) -> Result<IncidenceStructure> {
        IncidenceStructure::new(
            points.iter().map(|&i| self.label(i).to_string()),
            lines.iter().map(|&l| self.line_labels(l)),
        )
    }
}

/// Substitutes `assignment[k]` for the `k`-th letter (`a`, `b`, ...) of a
/// form such as `"abcd:ef7"`; digits are kept.
pub fn instantiate_form(form: &str, assignment: &[u8]) -> Result<Bipartition> {
    let text: String = form
        .chars()
        .map(|ch| match ch {
            'a'..='z' => {
                let k = (ch as u8 - b'a') as usize;
                char::from(b'0' + assignment[k])
            }
            other => other,
        })
        .collect();
    text.parse()
}

/// All lines of `orbit` obtained by instantiating its forms over every
/// relabelling of `{1..7}`, as sorted label triples.
pub fn orbit_form_lines(orbit: Orbit) -> BTreeSet<[String; 3]> {
    let forms = orbit.forms();
    (1..=7u8)
        .permutations(7)
        .map(|perm| {
            let mut labels = forms.map(|f| {
                instantiate_form(f, &perm)
                    .expect("orbit forms are bipartitions")
                    .to_string()
            });
            labels.sort();
            labels
        })
        .collect()
}

/// Per-orbit comparison of the closure-built lines with the form-built ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormCrossCheck {
    pub orbit: Orbit,
    pub from_forms: usize,
    pub from_closure: usize,
    pub identical: bool,
}

pub fn cross_check_forms(v: &VeldkampSpace) -> Result<Vec<FormCrossCheck>> {
    if !v.is_classified() {
        return Err(Error::NotClassified);
    }
    Ok(Orbit::ALL
        .into_iter()
        .map(|orbit| {
            let forms = orbit_form_lines(orbit);
            let closure: BTreeSet<[String; 3]> = (0..v.num_lines())
                .filter(|&l| v.orbit(l) == Some(orbit))
                .map(|l| {
                    let mut t = v.line_labels(l).map(str::to_string);
                    t.sort();
                    t
                })
                .collect();
            FormCrossCheck {
                orbit,
                from_forms: forms.len(),
                from_closure: closure.len(),
                identical: forms == closure,
            }
        })
        .collect())
}

/// Point and line census of the Veldkamp space of `G2(7)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub points: Vec<(VPointType, usize)>,
    pub lines: Vec<(Orbit, usize)>,
    /// Counts of the line types that must not occur.
    pub absent: Vec<(LineType, usize)>,
    /// Lines whose type is neither an orbit nor an absent type.
    pub other_lines: usize,
    /// Distinct core sizes seen per orbit.
    pub core_sizes: Vec<(Orbit, BTreeSet<usize>)>,
    /// Distinct core descriptions seen per orbit.
    pub core_shapes: Vec<(Orbit, BTreeSet<String>)>,
    pub total_points: usize,
    pub total_lines: usize,
    /// Lines per point, when constant.
    pub lines_per_point: Option<usize>,
}

pub fn tabulate_census(v: &VeldkampSpace) -> Result<Census> {
    if !v.is_classified() {
        return Err(Error::NotClassified);
    }
    let mut point_counts: BTreeMap<VPointType, usize> = VPointType::ALL.iter().map(|&t| (t, 0)).collect();
    for i in 0..v.num_points() {
        *point_counts.get_mut(&v.point_type(i).unwrap()).unwrap() += 1;
    }
    let mut by_type: BTreeMap<LineType, usize> = BTreeMap::new();
    let mut sizes: BTreeMap<Orbit, BTreeSet<usize>> = BTreeMap::new();
    let mut shapes: BTreeMap<Orbit, BTreeSet<String>> = BTreeMap::new();
    for l in 0..v.num_lines() {
        let class = v.line_class(l).unwrap();
        *by_type.entry(class.line_type).or_default() += 1;
        if let Some(orbit) = class.orbit {
            sizes.entry(orbit).or_default().insert(class.core.len());
            shapes.entry(orbit).or_default().insert(
                class
                    .shape
                    .as_ref()
                    .map_or_else(|| "unrecognised".to_string(), |s| s.to_string()),
            );
        }
    }
    let lines: Vec<(Orbit, usize)> = Orbit::ALL
        .iter()
        .map(|o| (*o, by_type.get(&o.line_type()).copied().unwrap_or(0)))
        .collect();
    let absent: Vec<(LineType, usize)> = ABSENT_LINE_TYPES
        .iter()
        .map(|t| (*t, by_type.get(t).copied().unwrap_or(0)))
        .collect();
    let accounted: usize = lines.iter().map(|x| x.1).sum::<usize>() + absent.iter().map(|x| x.1).sum::<usize>();
    let s = v.structure();
    let r = s.lines_through(0).len();
    Ok(Census {
        points: point_counts.into_iter().collect(),
        lines,
        absent,
        other_lines: v.num_lines() - accounted,
        core_sizes: Orbit::ALL
            .iter()
            .map(|o| (*o, sizes.remove(o).unwrap_or_default()))
            .collect(),
        core_shapes: Orbit::ALL
            .iter()
            .map(|o| (*o, shapes.remove(o).unwrap_or_default()))
            .collect(),
        total_points: v.num_points(),
        total_lines: v.num_lines(),
        lines_per_point: (0..s.num_points()).all(|p| s.lines_through(p).len() == r).then_some(r),
    })
}

impl Census {
    pub fn point_count(&self, t: VPointType) -> usize {
        self.points.iter().find(|x| x.0 == t).map_or(0, |x| x.1)
    }

    pub fn line_count(&self, o: Orbit) -> usize {
        self.lines.iter().find(|x| x.0 == o).map_or(0, |x| x.1)
    }

    /// Text rendering of the point and line tables.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("Points of the Veldkamp space of G2(7)\n");
        out.push_str(&format!(
            "{:<6} {:<10} {:<52} {:>6}\n",
            "Type", "Form", "Geometrical constituents", "Number"
        ));
        for (t, n) in &self.points {
            out.push_str(&format!(
                "{:<6} {:<10} {:<52} {:>6}\n",
                t.symbol(),
                t.form(),
                t.constituents(),
                n
            ));
        }
        out.push_str(&format!(
            "{:<6} {:<10} {:<52} {:>6}\n",
            "", "", "total", self.total_points
        ));
        out.push('\n');
        out.push_str("Lines of the Veldkamp space of G2(7)\n");
        out.push_str(&format!(
            "{:<16} {:<10} {:<44} {:>6}\n",
            "Type", "Form", "Core composition", "Number"
        ));
        for ((orbit, n), (_, shapes)) in self.lines.iter().zip(&self.core_shapes) {
            let forms = orbit.forms();
            let shape = shapes.iter().join(" / ");
            out.push_str(&format!(
                "{:<16} {:<10} {:<44} {:>6}\n",
                orbit.to_string(),
                forms[0],
                "",
                ""
            ));
            out.push_str(&format!("{:<16} {:<10} {:<44} {:>6}\n", "", forms[1], shape, n));
            out.push_str(&format!("{:<16} {:<10} {:<44} {:>6}\n", "", forms[2], "", ""));
        }
        out.push_str(&format!(
            "{:<16} {:<10} {:<44} {:>6}\n",
            "", "", "total", self.total_lines
        ));
        for (t, n) in &self.absent {
            out.push_str(&format!("absent type {t}: {n} lines\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmannian::build_g2;
    use crate::incidence::{check_projective, configuration_parameters, fixtures};

    fn hp(s: &str) -> Hyperplane {
        let p: Bipartition = s.parse().unwrap();
        crate::hyperplanes::bipartition_hyperplane(p.ground_size(), &p.first()).unwrap()
    }

    #[test]
    fn third_points_from_forms() {
        let g = build_g2(7).unwrap();
        let t = |a: &str, b: &str| third_point(&g, &hp(a), &hp(b)).unwrap().label(&g);
        assert_eq!(t("1234:567", "1256:347"), "3456:127");
        assert_eq!(t("12345:67", "123456:7"), "123457:6");
        assert_eq!(t("1234:567", "1235:467"), "12367:45");
    }

    #[test]
    fn third_point_errors() {
        let g = build_g2(7).unwrap();
        let h = hp("1234:567");
        assert_eq!(third_point(&g, &h, &h).unwrap_err(), Error::EqualHyperplanes);
        let grid = fixtures::grid();
        let a = Hyperplane {
            members: PointSet::singleton(0),
            partition: None,
        };
        let b = Hyperplane {
            members: PointSet::singleton(1),
            partition: None,
        };
        // singletons are not hyperplanes of the grid, and neither is their "sum"
        assert!(matches!(
            third_point(&grid, &a, &b),
            Err(Error::ThirdPointNotHyperplane(_))
        ));
        let two = IncidenceStructure::new(["a", "b"], [["a", "b"]]).unwrap();
        assert_eq!(third_point(&two, &a, &b).unwrap_err(), Error::NotThreePointLines);
    }

    #[test]
    fn small_veldkamp_spaces() {
        let line = build_veldkamp(&build_g2(3).unwrap()).unwrap();
        assert_eq!((line.num_points(), line.num_lines()), (3, 1));
        assert!(!line.is_classified());

        let pasch = build_veldkamp(&build_g2(4).unwrap()).unwrap();
        assert_eq!((pasch.num_points(), pasch.num_lines()), (7, 7));
        assert!(configuration_parameters(pasch.structure()).matches(7, 7, 3, 3));
        assert!(check_projective(pasch.structure()).holds());

        // the grid GQ(2,1) has PG(3,2) as its Veldkamp space
        let grid = build_veldkamp(&fixtures::grid()).unwrap();
        assert_eq!((grid.num_points(), grid.num_lines()), (15, 35));
        assert!(check_projective(grid.structure()).holds());
    }

    #[test]
    fn veldkamp_preconditions() {
        let two = IncidenceStructure::new(["a", "b"], [["a", "b"]]).unwrap();
        assert_eq!(build_veldkamp(&two).unwrap_err(), Error::NotThreePointLines);
        let nonlinear = IncidenceStructure::new(["a", "b", "c", "d"], [["a", "b", "c"], ["a", "b", "d"]]).unwrap();
        assert_eq!(build_veldkamp(&nonlinear).unwrap_err(), Error::NotLinear);
    }

    #[test]
    fn classify_points() {
        assert_eq!(classify_point(&hp("1234:567")).unwrap(), VPointType::Alpha);
        assert_eq!(classify_point(&hp("12367:45")).unwrap(), VPointType::Beta);
        assert_eq!(classify_point(&hp("123456:7")).unwrap(), VPointType::Gamma);
        assert_eq!(classify_point(&hp("12:34")).unwrap_err(), Error::Unlabelled);
        let bare = Hyperplane {
            members: PointSet::EMPTY,
            partition: None,
        };
        assert_eq!(classify_point(&bare).unwrap_err(), Error::Unlabelled);
    }

    #[test]
    fn classify_lines_from_orbit_forms() {
        let g = build_g2(7).unwrap();
        let class = |a: &str, b: &str, c: &str| classify_line(&g, [&hp(a), &hp(b), &hp(c)]).unwrap();

        let aaa = class("1234:567", "1256:347", "3456:127");
        assert_eq!(aaa.orbit, Some(Orbit::Aaa));
        assert_eq!(g.set_labels(aaa.core), ["12", "34", "56"]);
        assert_eq!(aaa.shape.unwrap().to_string(), "three mutually non-collinear points");

        let aag = class("4567:123", "1237:456", "123456:7");
        assert_eq!(aag.orbit, Some(Orbit::Aag));
        assert_eq!(g.set_labels(aag.core), ["12", "13", "23", "45", "46", "56"]);
        assert_eq!(aag.shape.unwrap().to_string(), "two disjoint lines");

        let bbb = class("12345:67", "12346:57", "12347:56");
        assert_eq!(bbb.orbit, Some(Orbit::Bbb));
        assert_eq!(g.set_labels(bbb.core), ["12", "13", "14", "23", "24", "34"]);
        assert_eq!(bbb.shape.unwrap().to_string(), "a Pasch configuration");

        let aab = class("1234:567", "1235:467", "12367:45");
        assert_eq!(aab.orbit, Some(Orbit::Aab));
        assert_eq!(aab.shape.unwrap().to_string(), "a line and a point");
    }

    #[test]
    fn core_shape_names() {
        let shape = |cells: &[usize]| CoreShape { cells: cells.to_vec() }.to_string();
        assert_eq!(shape(&[3, 2, 2]), "a line and two non-collinear points");
        assert_eq!(shape(&[4, 2]), "a Pasch configuration and a point");
        assert_eq!(shape(&[5]), "a Desargues configuration");
        assert_eq!(shape(&[]), "empty");
        for o in Orbit::ALL {
            assert_eq!(
                CoreShape {
                    cells: o.core_cells().to_vec()
                }
                .num_points(),
                o.core_size()
            );
        }
    }

    #[test]
    fn core_shape_rejects_non_unions() {
        let g = build_g2(7).unwrap();
        // a path 1-2-3 is not a union of complete sub-Grassmannians
        let path = g.set_of(&["12", "23"]).unwrap();
        assert_eq!(CoreShape::recognize(&g, path), None);
        assert_eq!(CoreShape::recognize(&fixtures::grid(), PointSet::EMPTY), None);
    }

    #[test]
    fn forms_instantiate() {
        let ident = [1, 2, 3, 4, 5, 6, 7];
        assert_eq!(instantiate_form("abcd:ef7", &ident).unwrap().to_string(), "1234:567");
        assert_eq!(instantiate_form("abc:defg", &ident).unwrap().to_string(), "4567:123");
        assert!(instantiate_form("abcd:ee", &ident).is_err());
        assert_eq!(orbit_form_lines(Orbit::Bgg).len(), 21);
    }

    #[test]
    fn census_needs_classification() {
        let v = build_veldkamp(&build_g2(4).unwrap()).unwrap();
        assert_eq!(tabulate_census(&v).unwrap_err(), Error::NotClassified);
        assert_eq!(cross_check_forms(&v).unwrap_err(), Error::NotClassified);
    }
}
