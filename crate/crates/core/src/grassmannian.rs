//! Combinatorial Grassmannians `G2(N)`: points are the 2-subsets of
//! `{1, ..., N}`, lines the 3-subsets, incidence is inclusion.
//!
//! Points are labelled by their two elements in ascending order (`"12"`),
//! lines by their three (`"123"`), so `N ≤ 9` keeps every label one digit
//! per element.

use std::fmt;
use std::ops::RangeInclusive;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::incidence::{configuration_parameters, IncidenceStructure};

/// Supported ground-set sizes.
pub const GROUND_SET_RANGE: RangeInclusive<usize> = 3..=9;

/// The ground set `X = {1, ..., N}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if GROUND_SET_RANGE.contains(&n) {
            Ok(GroundSet { n })
        } else {
            Err(Error::GroundSetOutOfRange(n))
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> RangeInclusive<u8> {
        1..=self.n as u8
    }
}

/// A point of `G2(N)`: a 2-element subset, stored ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairPoint(u8, u8);

impl PairPoint {
    pub fn new(a: u8, b: u8) -> Self {
        assert_ne!(a, b, "a pair needs two distinct elements");
        PairPoint(a.min(b), a.max(b))
    }

    pub fn elements(&self) -> [u8; 2] {
        [self.0, self.1]
    }

    /// Parses a two-digit label such as `"67"`.
    pub fn parse(label: &str) -> Option<Self> {
        let digits: Vec<u8> = label
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()?;
        match digits[..] {
            [a, b] if a != b && a > 0 && b > 0 => Some(PairPoint::new(a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for PairPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

/// A line of `G2(N)`: a 3-element subset, stored ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleLine([u8; 3]);

impl TripleLine {
    pub fn new(a: u8, b: u8, c: u8) -> Self {
        let mut e = [a, b, c];
        e.sort_unstable();
        assert!(e[0] != e[1] && e[1] != e[2], "a triple needs three distinct elements");
        TripleLine(e)
    }

    pub fn elements(&self) -> [u8; 3] {
        self.0
    }

    /// The three points incident with this line.
    pub fn pairs(&self) -> [PairPoint; 3] {
        let [a, b, c] = self.0;
        [PairPoint(a, b), PairPoint(a, c), PairPoint(b, c)]
    }
}

impl fmt::Display for TripleLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{a}{b}{c}")
    }
}

/// Builds `G2(N)`, the binomial `(C(N,2)_{N-2}, C(N,3)_3)` configuration.
pub fn build_g2(n: usize) -> Result<IncidenceStructure> {
    let ground = GroundSet::new(n)?;
    let points = ground
        .elements()
        .tuple_combinations()
        .map(|(a, b)| PairPoint::new(a, b).to_string());
    let lines = ground
        .elements()
        .tuple_combinations()
        .map(|(a, b, c)| TripleLine::new(a, b, c).pairs().map(|p| p.to_string()));
    IncidenceStructure::new(points, lines)
}

/// Builds `G_k(N)`; only `k = 2` is supported.
pub fn build_grassmannian(k: usize, n: usize) -> Result<IncidenceStructure> {
    if k != 2 {
        return Err(Error::UnsupportedGrassmannianRank(k));
    }
    build_g2(n)
}

/// If every point label of `c` is a pair over `{1..N}` and `c` has exactly
/// `C(N,2)` points, returns `N`. Hyperplane labelling relies on this.
pub fn recognize_g2_host(c: &IncidenceStructure) -> Option<usize> {
    let mut max = 0u8;
    for label in c.labels() {
        let p = PairPoint::parse(label)?;
        max = max.max(p.1);
    }
    let n = max as usize;
    (GROUND_SET_RANGE.contains(&n) && c.num_points() == n * (n - 1) / 2).then_some(n)
}

/// The small Grassmannians `G2(3..=6)` by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedConfiguration {
    Line,
    Pasch,
    Desargues,
    CayleySalmon,
    Unnamed,
}

impl NamedConfiguration {
    /// Name of `G2(m)` for a ground set of `m` elements (`m = 2` gives a
    /// single point, `m ≤ 1` nothing at all).
    pub fn of_ground_size(m: usize) -> Option<&'static str> {
        match m {
            2 => Some("point"),
            3 => Some("line"),
            4 => Some("Pasch configuration"),
            5 => Some("Desargues configuration"),
            6 => Some("Cayley-Salmon configuration"),
            _ => None,
        }
    }
}

impl fmt::Display for NamedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedConfiguration::Line => "line",
            NamedConfiguration::Pasch => "Pasch",
            NamedConfiguration::Desargues => "Desargues",
            NamedConfiguration::CayleySalmon => "Cayley-Salmon",
            NamedConfiguration::Unnamed => "unnamed",
        })
    }
}

/// Names a structure by matching its `(v, b, r, k)` against `G2(3..=6)`.
pub fn named_configuration(c: &IncidenceStructure) -> NamedConfiguration {
    let p = configuration_parameters(c);
    if p.matches(3, 1, 1, 3) {
        NamedConfiguration::Line
    } else if p.matches(6, 4, 2, 3) {
        NamedConfiguration::Pasch
    } else if p.matches(10, 10, 3, 3) {
        NamedConfiguration::Desargues
    } else if p.matches(15, 20, 4, 3) {
        NamedConfiguration::CayleySalmon
    } else {
        NamedConfiguration::Unnamed
    }
}
