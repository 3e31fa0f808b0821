//! Finite point–line incidence structures and the axiom checkers used to
//! certify everything built on top of them.
//!
//! Points are dense indices `0..v` with a separate label table; lines are
//! [`PointSet`]s. Construction canonicalises both: points are sorted by
//! label and lines lexicographically by their sorted member indices, so two
//! builds from the same data are identical.
//!
//! The checkers are exhaustive and scan in canonical order, so the witness
//! they return on failure is always the least offending configuration.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// A finite point–line incidence structure with incidence given by membership.
#[derive(Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    lines: Vec<PointSet>,
    lines_through: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    /// Builds a structure from point labels and lines given as label lists.
    ///
    /// Zero points or zero lines are accepted; the axiom checkers report
    /// such inputs as [`Violation::Degenerate`].
    pub fn new<P, L, Q>(points: P, lines: L) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        L: IntoIterator,
        L::Item: IntoIterator<Item = Q>,
        Q: AsRef<str>,
    {
        let labels: Vec<String> = points.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut sets = Vec::new();
        for line in lines {
            let mut set = PointSet::EMPTY;
            for name in line {
                let name = name.as_ref();
                let &p = index.get(name).ok_or_else(|| Error::UnknownPoint(name.to_string()))?;
                if set.contains(p) {
                    return Err(Error::RepeatedPointInLine(name.to_string()));
                }
                set.insert(p);
            }
            sets.push(set);
        }
        Self::from_line_sets(labels, sets)
    }

    /// Builds a structure from point labels and lines given as index sets
    /// into `labels`.
    pub fn from_line_sets(labels: Vec<String>, lines: Vec<PointSet>) -> Result<Self> {
        let v = labels.len();
        if v > MAX_POINTS {
            return Err(Error::TooManyPoints(v));
        }
        let mut order: Vec<usize> = (0..v).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut old_to_new = vec![0; v];
        for (new, &old) in order.iter().enumerate() {
            old_to_new[old] = new;
        }
        let sorted_labels: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        let mut index = HashMap::with_capacity(v);
        for (i, label) in sorted_labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }

        let universe = PointSet::full(v);
        let mut keyed: Vec<(Vec<usize>, PointSet)> = Vec::with_capacity(lines.len());
        for line in lines {
            if let Some(p) = (line - universe).first() {
                return Err(Error::UnknownPoint(format!("#{p}")));
            }
            if line.is_empty() {
                return Err(Error::EmptyLine);
            }
            let remapped: PointSet = line.iter().map(|p| old_to_new[p]).collect();
            keyed.push((remapped.to_vec(), remapped));
        }
        keyed.sort();
        for pair in keyed.windows(2) {
            if pair[0].1 == pair[1].1 {
                let names = pair[0].0.iter().map(|&p| sorted_labels[p].clone()).collect();
                return Err(Error::DuplicateLine(names));
            }
        }
        let lines: Vec<PointSet> = keyed.into_iter().map(|(_, s)| s).collect();
        let mut lines_through = vec![Vec::new(); v];
        for (l, line) in lines.iter().enumerate() {
            for p in line {
                lines_through[p].push(l);
            }
        }
        Ok(IncidenceStructure {
            labels: sorted_labels,
            index,
            lines,
            lines_through,
        })
    }

    pub fn num_points(&self) -> usize {
        self.labels.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn line(&self, l: usize) -> PointSet {
        self.lines[l]
    }

    pub fn lines(&self) -> &[PointSet] {
        &self.lines
    }

    /// Indices of the lines incident with `p`, ascending.
    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.lines_through[p]
    }

    pub fn points(&self) -> PointSet {
        PointSet::full(self.num_points())
    }

    /// The first line containing both `a` and `b`.
    pub fn line_through(&self, a: usize, b: usize) -> Option<usize> {
        self.lines_through[a]
            .iter()
            .copied()
            .find(|&l| self.lines[l].contains(b))
    }

    /// Points other than `p` sharing a line with `p`.
    pub fn collinear_with(&self, p: usize) -> PointSet {
        let mut s = PointSet::EMPTY;
        for &l in &self.lines_through[p] {
            s |= self.lines[l];
        }
        s.remove(p);
        s
    }

    /// Labels of a point set, in index order.
    pub fn set_labels(&self, set: PointSet) -> Vec<String> {
        set.iter().map(|p| self.labels[p].clone()).collect()
    }

    /// Parses a list of labels into a point set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<PointSet> {
        labels
            .iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| Error::UnknownPoint(s.as_ref().to_string()))
            })
            .collect()
    }

    /// First point pair (by smaller point) lying on two lines, as
    /// `((a, b), (l1, l2))` with `a < b` and `l1 < l2`.
    fn first_nonlinear_pair(&self) -> Option<((usize, usize), (usize, usize))> {
        for a in 0..self.num_points() {
            let mut seen = PointSet::EMPTY;
            for &l in &self.lines_through[a] {
                let rest = self.lines[l] - PointSet::singleton(a);
                if let Some(b) = (rest & seen).iter().find(|&b| b > a) {
                    let l1 = self.line_through(a, b).expect("b was seen on a line through a");
                    return Some(((a, b), (l1, l)));
                }
                seen |= rest;
            }
        }
        None
    }

    pub fn is_linear(&self) -> bool {
        self.first_nonlinear_pair().is_none()
    }

    /// Constant line size, if every line has the same number of points.
    pub fn uniform_line_size(&self) -> Option<usize> {
        let k = self.lines.first()?.len();
        self.lines.iter().all(|l| l.len() == k).then_some(k)
    }
}

impl fmt::Debug for IncidenceStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IncidenceStructure")
            .field("points", &self.labels)
            .field(
                "lines",
                &self.lines.iter().map(|l| self.set_labels(*l)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Census of a structure as a `(v_r, b_k)` configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfigurationParameters {
    pub v: usize,
    pub b: usize,
    /// Lines per point, when constant.
    pub r: Option<usize>,
    /// Points per line, when constant.
    pub k: Option<usize>,
    /// Two points share at most one line (equivalently two lines share at
    /// most one point).
    pub linear: bool,
}

impl ConfigurationParameters {
    pub fn is_regular(&self) -> bool {
        self.r.is_some() && self.k.is_some()
    }

    /// Whether this is a regular linear `(v_r, b_k)` configuration with the
    /// given numbers.
    pub fn matches(&self, v: usize, b: usize, r: usize, k: usize) -> bool {
        self.linear && self.v == v && self.b == b && self.r == Some(r) && self.k == Some(k)
    }
}

impl fmt::Display for ConfigurationParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: Option<usize>| x.map_or("?".to_string(), |x| x.to_string());
        if self.v == self.b && self.r == self.k {
            write!(f, "({}_{})", self.v, show(self.r))
        } else {
            write!(f, "({}_{}, {}_{})", self.v, show(self.r), self.b, show(self.k))
        }
    }
}

pub fn configuration_parameters(c: &IncidenceStructure) -> ConfigurationParameters {
    let r = c
        .lines_through
        .first()
        .map(Vec::len)
        .filter(|&r| c.lines_through.iter().all(|ls| ls.len() == r));
    ConfigurationParameters {
        v: c.num_points(),
        b: c.num_lines(),
        r,
        k: c.uniform_line_size(),
        linear: c.is_linear(),
    }
}

/// The offending configuration reported by a failed axiom check.
/// Indices refer to the canonical point and line order of the structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    /// No points or no lines.
    Degenerate,
    /// Two points on two distinct lines.
    NotLinear {
        points: (usize, usize),
        lines: (usize, usize),
    },
    /// A line whose size differs from the first line's.
    LineSize { line: usize, size: usize, expected: usize },
    /// A point whose degree differs from the first point's.
    PointDegree {
        point: usize,
        degree: usize,
        expected: usize,
    },
    /// Generalized quadrangle order out of range (`s < 1` or `t < 1`).
    Order { s: usize, t: usize },
    /// A non-incident point–line pair joined by `count != 1` lines.
    Transversals { point: usize, line: usize, count: usize },
    /// A non-incident point collinear with neither one nor all points of a line.
    OneOrAll {
        point: usize,
        line: usize,
        collinear: usize,
    },
    /// Two distinct points on no common line.
    PairNotJoined { points: (usize, usize) },
    /// Lines `[l1, l2]` meet; transversals `[m1, m2]` of them do not.
    VeblenYoung { lines: [usize; 4] },
}

impl Violation {
    /// Human-readable rendering with point labels.
    pub fn describe(&self, c: &IncidenceStructure) -> String {
        let line = |l: usize| format!("{{{}}}", c.set_labels(c.line(l)).join(","));
        match *self {
            Violation::Degenerate => "degenerate structure (no points or no lines)".into(),
            Violation::NotLinear {
                points: (a, b),
                lines: (l1, l2),
            } => format!(
                "points {} and {} lie on lines {} and {}",
                c.label(a),
                c.label(b),
                line(l1),
                line(l2)
            ),
            Violation::LineSize {
                line: l,
                size,
                expected,
            } => {
                format!("line {} has {size} points, expected {expected}", line(l))
            }
            Violation::PointDegree {
                point,
                degree,
                expected,
            } => format!("point {} is on {degree} lines, expected {expected}", c.label(point)),
            Violation::Order { s, t } => format!("order (s, t) = ({s}, {t}) out of range"),
            Violation::Transversals { point, line: l, count } => {
                format!("point {} sees line {} through {count} lines", c.label(point), line(l))
            }
            Violation::OneOrAll {
                point,
                line: l,
                collinear,
            } => format!(
                "point {} is collinear with {collinear} points of line {}",
                c.label(point),
                line(l)
            ),
            Violation::PairNotJoined { points: (a, b) } => {
                format!("points {} and {} are not joined", c.label(a), c.label(b))
            }
            Violation::VeblenYoung {
                lines: [l1, l2, m1, m2],
            } => format!(
                "lines {} and {} meet but transversals {} and {} do not",
                line(l1),
                line(l2),
                line(m1),
                line(m2)
            ),
        }
    }
}

/// Outcome of an axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails(Violation),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Violation> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

fn degenerate(c: &IncidenceStructure) -> bool {
    c.num_points() == 0 || c.num_lines() == 0
}

fn linearity(c: &IncidenceStructure) -> Result<(), Violation> {
    match c.first_nonlinear_pair() {
        Some((points, lines)) => Err(Violation::NotLinear { points, lines }),
        None => Ok(()),
    }
}

/// Result of the generalized quadrangle check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GqParameters {
    pub s: usize,
    pub t: usize,
    pub valid: bool,
    pub witness: Option<Violation>,
}

/// Checks the generalized quadrangle axioms exhaustively.
///
/// `s` and `t` are read off the first line and first point even when the
/// check fails.
pub fn check_gq(c: &IncidenceStructure) -> GqParameters {
    let s = c.lines.first().map_or(0, |l| l.len().saturating_sub(1));
    let t = c.lines_through.first().map_or(0, |ls| ls.len().saturating_sub(1));
    let verdict = (|| {
        if degenerate(c) {
            return Err(Violation::Degenerate);
        }
        linearity(c)?;
        let k = s + 1;
        if let Some((line, l)) = c.lines.iter().enumerate().find(|(_, l)| l.len() != k) {
            return Err(Violation::LineSize {
                line,
                size: l.len(),
                expected: k,
            });
        }
        let r = t + 1;
        if let Some((point, ls)) = c.lines_through.iter().enumerate().find(|(_, ls)| ls.len() != r) {
            return Err(Violation::PointDegree {
                point,
                degree: ls.len(),
                expected: r,
            });
        }
        if s < 1 || t < 1 {
            return Err(Violation::Order { s, t });
        }
        // In a linear structure the lines through p meeting L correspond
        // one-to-one with the points of L collinear with p.
        for point in 0..c.num_points() {
            let seen = c.collinear_with(point);
            for (line, l) in c.lines.iter().enumerate() {
                if l.contains(point) {
                    continue;
                }
                let count = (*l & seen).len();
                if count != 1 {
                    return Err(Violation::Transversals { point, line, count });
                }
            }
        }
        Ok(())
    })();
    match verdict {
        Ok(()) => GqParameters {
            s,
            t,
            valid: true,
            witness: None,
        },
        Err(w) => GqParameters {
            s,
            t,
            valid: false,
            witness: Some(w),
        },
    }
}

/// Polar-space "one or all" axiom: every point off a line is collinear with
/// exactly one or with all points of that line.
pub fn check_one_or_all(c: &IncidenceStructure) -> Verdict {
    if degenerate(c) {
        return Verdict::Fails(Violation::Degenerate);
    }
    if let Err(w) = linearity(c) {
        return Verdict::Fails(w);
    }
    for point in 0..c.num_points() {
        let seen = c.collinear_with(point);
        for (line, l) in c.lines.iter().enumerate() {
            if l.contains(point) {
                continue;
            }
            let collinear = (*l & seen).len();
            if collinear != 1 && collinear != l.len() {
                return Verdict::Fails(Violation::OneOrAll { point, line, collinear });
            }
        }
    }
    Verdict::Holds
}

/// Projective space check: every two points are on exactly one line, and
/// the Veblen–Young axiom holds.
pub fn check_projective(c: &IncidenceStructure) -> Verdict {
    if degenerate(c) {
        return Verdict::Fails(Violation::Degenerate);
    }
    if let Err(w) = linearity(c) {
        return Verdict::Fails(w);
    }
    let v = c.num_points();
    for a in 0..v {
        let seen = c.collinear_with(a);
        if let Some(b) = (c.points() - seen - PointSet::singleton(a)).iter().find(|&b| b > a) {
            return Verdict::Fails(Violation::PairNotJoined { points: (a, b) });
        }
    }
    // Every pair is now joined by a unique line.
    let mut table = vec![usize::MAX; v * v];
    for (l, members) in c.lines.iter().enumerate() {
        for a in members.iter() {
            for b in members.iter() {
                table[a * v + b] = l;
            }
        }
    }
    let join = |a: usize, b: usize| table[a * v + b];
    for p in 0..v {
        let through = c.lines_through(p);
        for (i, &l1) in through.iter().enumerate() {
            for &l2 in &through[i + 1..] {
                let rest1 = (c.line(l1) - PointSet::singleton(p)).to_vec();
                let rest2 = (c.line(l2) - PointSet::singleton(p)).to_vec();
                for (x, &a1) in rest1.iter().enumerate() {
                    for &a2 in &rest1[x + 1..] {
                        for &b1 in &rest2 {
                            for &b2 in &rest2 {
                                if b1 == b2 {
                                    continue;
                                }
                                let m1 = join(a1, b1);
                                let m2 = join(a2, b2);
                                if (c.line(m1) & c.line(m2)).is_empty() {
                                    return Verdict::Fails(Violation::VeblenYoung {
                                        lines: [l1, l2, m1, m2],
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Verdict::Holds
}

/// Simple undirected graph on the points of a structure, two distinct points
/// adjacent when they share a line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollinearityGraph {
    labels: Vec<String>,
    adjacency: Vec<PointSet>,
}

impl CollinearityGraph {
    /// Builds a graph from labels and adjacency sets, symmetrising and
    /// dropping loops.
    pub fn from_adjacency(labels: Vec<String>, adjacency: Vec<PointSet>) -> Self {
        let n = labels.len();
        let mut adj = adjacency;
        adj.resize(n, PointSet::EMPTY);
        for u in 0..n {
            adj[u].remove(u);
            for w in adj[u].to_vec() {
                adj[w].insert(u);
            }
        }
        CollinearityGraph { labels, adjacency: adj }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    pub fn neighbors(&self, u: usize) -> PointSet {
        self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn adjacent(&self, u: usize, w: usize) -> bool {
        self.adjacency[u].contains(w)
    }

    /// Edges `(u, w)` with `u < w`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_vertices())
            .flat_map(move |u| self.adjacency[u].iter().filter(move |&w| w > u).map(move |w| (u, w)))
    }

    pub fn num_edges(&self) -> usize {
        self.edges().count()
    }
}

pub fn collinearity_graph(c: &IncidenceStructure) -> CollinearityGraph {
    let adjacency = (0..c.num_points()).map(|p| c.collinear_with(p)).collect();
    CollinearityGraph::from_adjacency(c.labels.clone(), adjacency)
}

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParameters {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
    /// Complete graphs have no non-adjacent pairs; `mu` is reported as 0.
    pub complete: bool,
}

/// Returns the strongly-regular parameters of `g`, or `None` if it is empty
/// or not strongly regular.
pub fn srg_parameters(g: &CollinearityGraph) -> Option<SrgParameters> {
    let n = g.num_vertices();
    if n == 0 {
        return None;
    }
    let k = g.degree(0);
    if (0..n).any(|u| g.degree(u) != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for w in u + 1..n {
            let common = (g.neighbors(u) & g.neighbors(w)).len();
            let slot = if g.adjacent(u, w) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(x) if x != common => return None,
                Some(_) => {}
            }
        }
    }
    Some(SrgParameters {
        n,
        k,
        lambda: lambda.unwrap_or(0),
        mu: mu.unwrap_or(0),
        complete: mu.is_none(),
    })
}
