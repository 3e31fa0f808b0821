//! Distinguished sub-geometries of the Veldkamp space of `G2(7)`.
//!
//! - the symplectic polar space `W(5,2)`: all 63 points and the 315 lines
//!   whose core has an odd number of host points, i.e. the orbits
//!   (α,α,α), (α,β,β), (α,β,γ);
//! - the hyperbolic quadric `Q⁺₀(5,2)`: the 35 α points and the 105
//!   (α,α,α) lines;
//! - a copy of `G2(7)` itself on the 21 β points and 35 (β,β,β) lines, via
//!   `abcde:fg ↦ fg`;
//! - the Conwell heptad: the 7 γ points, a maximal exterior set of `Q⁺₀(5,2)`.
//!
//! `W(5,2)` is certified combinatorially (one-or-all axiom, strongly
//! regular collinearity graph, counts); no coordinates are involved.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmannian::{build_g2, PairPoint};
use crate::incidence::{
    check_one_or_all, collinearity_graph, srg_parameters, IncidenceStructure, SrgParameters, Verdict,
};
use crate::pointset::PointSet;
use crate::veldkamp::{Orbit, VPointType, VeldkampSpace};

/// The line orbits whose cores have an odd number of points.
pub const ODD_CORE_ORBITS: [Orbit; 3] = [Orbit::Aaa, Orbit::Abb, Orbit::Abg];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubspaceKind {
    Symplectic,
    HyperbolicQuadric,
    EmbeddedGrassmannian,
    ConwellHeptad,
}

impl fmt::Display for SubspaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubspaceKind::Symplectic => "symplectic polar space W(5,2)",
            SubspaceKind::HyperbolicQuadric => "hyperbolic quadric Q+0(5,2)",
            SubspaceKind::EmbeddedGrassmannian => "embedded Grassmannian G2(7)",
            SubspaceKind::ConwellHeptad => "Conwell heptad",
        })
    }
}

/// A selection of vpoints and vlines of a Veldkamp space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarSubspace {
    pub kind: SubspaceKind,
    /// Vpoint indices, ascending.
    pub points: Vec<usize>,
    /// Vline indices, ascending.
    pub lines: Vec<usize>,
}

impl PolarSubspace {
    pub fn point_set(&self) -> PointSet {
        self.points.iter().collect()
    }

    /// Every selected line has all three members among the selected points.
    pub fn is_closed(&self, v: &VeldkampSpace) -> bool {
        let pts = self.point_set();
        self.lines.iter().all(|&l| v.line(l).iter().all(|&p| pts.contains(p)))
    }

    /// The selection as an incidence structure. When all vpoints are
    /// selected, indices agree with the Veldkamp space.
    pub fn to_structure(&self, v: &VeldkampSpace) -> Result<IncidenceStructure> {
        v.substructure(&self.points, &self.lines)
    }
}

fn require_classified(v: &VeldkampSpace) -> Result<()> {
    if v.is_classified() {
        Ok(())
    } else {
        Err(Error::NotClassified)
    }
}

/// All vpoints with the lines whose core has odd size.
pub fn extract_symplectic(v: &VeldkampSpace) -> PolarSubspace {
    PolarSubspace {
        kind: SubspaceKind::Symplectic,
        points: (0..v.num_points()).collect(),
        lines: (0..v.num_lines()).filter(|&l| v.core(l).len() % 2 == 1).collect(),
    }
}

/// Same selection as [`extract_symplectic`], read off the orbit list.
pub fn symplectic_by_orbits(v: &VeldkampSpace) -> Result<PolarSubspace> {
    require_classified(v)?;
    Ok(PolarSubspace {
        kind: SubspaceKind::Symplectic,
        points: (0..v.num_points()).collect(),
        lines: (0..v.num_lines())
            .filter(|&l| v.orbit(l).is_some_and(|o| ODD_CORE_ORBITS.contains(&o)))
            .collect(),
    })
}

/// Evidence that a selection is the symplectic polar space `W(5,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymplecticCertificate {
    pub points: usize,
    pub lines: usize,
    pub lines_per_point: Option<usize>,
    pub linear: bool,
    pub one_or_all: Verdict,
    pub srg: Option<SrgParameters>,
}

impl SymplecticCertificate {
    /// 63 points, 315 lines, 15 per point, polar axiom, SRG(63,30,13,15).
    pub fn is_w52(&self) -> bool {
        self.points == 63
            && self.lines == 315
            && self.lines_per_point == Some(15)
            && self.linear
            && self.one_or_all.holds()
            && self.srg.is_some_and(|s| (s.n, s.k, s.lambda, s.mu) == (63, 30, 13, 15))
    }
}

pub fn certify_symplectic(w: &IncidenceStructure) -> SymplecticCertificate {
    let r = w.lines_through(0).len();
    SymplecticCertificate {
        points: w.num_points(),
        lines: w.num_lines(),
        lines_per_point: (0..w.num_points()).all(|p| w.lines_through(p).len() == r).then_some(r),
        linear: w.is_linear(),
        one_or_all: check_one_or_all(w),
        srg: srg_parameters(&collinearity_graph(w)),
    }
}

/// The 35 α points and 105 (α,α,α) lines.
pub fn alpha_quadric(v: &VeldkampSpace) -> Result<PolarSubspace> {
    require_classified(v)?;
    Ok(PolarSubspace {
        kind: SubspaceKind::HyperbolicQuadric,
        points: (0..v.num_points())
            .filter(|&i| v.point_type(i) == Some(VPointType::Alpha))
            .collect(),
        lines: (0..v.num_lines()).filter(|&l| v.orbit(l) == Some(Orbit::Aaa)).collect(),
    })
}

/// The explicit map from the β sub-geometry onto `G2(7)`.
#[derive(Debug, Clone)]
pub struct GrassmannianIsomorphism {
    /// `(vpoint, pair)`: `abcde:fg ↦ fg`.
    pub point_map: Vec<(usize, PairPoint)>,
    /// `(vline, triple label)`.
    pub line_map: Vec<(usize, String)>,
    /// The image, equal to `build_g2(7)`.
    pub image: IncidenceStructure,
}

/// The β points and (β,β,β) lines, certified isomorphic to `G2(7)`.
pub fn embedded_grassmannian(v: &VeldkampSpace) -> Result<(PolarSubspace, GrassmannianIsomorphism)> {
    require_classified(v)?;
    let sub = PolarSubspace {
        kind: SubspaceKind::EmbeddedGrassmannian,
        points: (0..v.num_points())
            .filter(|&i| v.point_type(i) == Some(VPointType::Beta))
            .collect(),
        lines: (0..v.num_lines()).filter(|&l| v.orbit(l) == Some(Orbit::Bbb)).collect(),
    };
    let pair_of = |i: usize| -> PairPoint {
        let side = v.point(i).partition.expect("classified points are labelled").second();
        PairPoint::new(side[0], side[1])
    };
    let point_map: Vec<(usize, PairPoint)> = sub.points.iter().map(|&i| (i, pair_of(i))).collect();
    let mut line_map = Vec::with_capacity(sub.lines.len());
    let mut image_lines = Vec::with_capacity(sub.lines.len());
    for &l in &sub.lines {
        let pairs = v.line(l).map(pair_of);
        let mut elements: Vec<u8> = pairs.iter().flat_map(|p| p.elements()).collect();
        elements.sort_unstable();
        elements.dedup();
        if elements.len() != 3 {
            return Err(Error::IsomorphismFailed(format!(
                "line {:?} does not map onto a triple",
                v.line_labels(l)
            )));
        }
        line_map.push((l, elements.iter().map(|e| e.to_string()).collect()));
        image_lines.push(pairs.map(|p| p.to_string()));
    }
    let image = IncidenceStructure::new(point_map.iter().map(|(_, p)| p.to_string()), image_lines)
        .map_err(|e| Error::IsomorphismFailed(e.to_string()))?;
    if image != build_g2(7)? {
        return Err(Error::IsomorphismFailed("image differs from G2(7)".into()));
    }
    Ok((
        sub,
        GrassmannianIsomorphism {
            point_map,
            line_map,
            image,
        },
    ))
}

/// Evidence that the γ points form a maximal exterior set of `Q⁺₀(5,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeptadCertificate {
    pub size: usize,
    /// `(q^N - 1)/(q - 1)` for `Q⁺(5,2)`, i.e. `N = 3`, `q = 2`.
    pub bound: u64,
    /// The vline joining each pair of heptad points.
    pub connecting_lines: Vec<usize>,
    /// No connecting line has an α member.
    pub exterior: bool,
}

impl HeptadCertificate {
    pub fn is_maximal_exterior_set(&self) -> bool {
        self.exterior && self.size as u64 == self.bound && self.connecting_lines.len() == 21
    }
}

pub fn conwell_heptad(v: &VeldkampSpace) -> Result<(PolarSubspace, HeptadCertificate)> {
    require_classified(v)?;
    let points: Vec<usize> = (0..v.num_points())
        .filter(|&i| v.point_type(i) == Some(VPointType::Gamma))
        .collect();
    let mut connecting_lines = Vec::new();
    for (x, &a) in points.iter().enumerate() {
        for &b in &points[x + 1..] {
            connecting_lines.push(v.line_through(a, b).expect("Veldkamp space of G2(7) is projective"));
        }
    }
    let exterior = connecting_lines
        .iter()
        .all(|&l| v.line(l).iter().all(|&p| v.point_type(p) != Some(VPointType::Alpha)));
    let cert = HeptadCertificate {
        size: points.len(),
        bound: exterior_set_bound(3, 2)?,
        connecting_lines,
        exterior,
    };
    Ok((
        PolarSubspace {
            kind: SubspaceKind::ConwellHeptad,
            points,
            lines: Vec::new(),
        },
        cert,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadricKind {
    /// `Q(2N, q)`
    Parabolic,
    /// `Q⁻(2N-1, q)`
    Elliptic,
    /// `Q⁺(2N-1, q)`
    Hyperbolic,
}

impl QuadricKind {
    /// Dimension of the ambient projective space for rank parameter `n`.
    pub fn dimension(&self, n: u32) -> u32 {
        match self {
            QuadricKind::Parabolic => 2 * n,
            QuadricKind::Elliptic | QuadricKind::Hyperbolic => 2 * n - 1,
        }
    }
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|&d| q.is_multiple_of(d)).expect("q >= 2 has a divisor");
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

fn pow(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e)
        .ok_or_else(|| Error::InvalidQuadric(format!("{q}^{e} overflows")))
}

fn exact_div(numerator: u64, denominator: u64) -> Result<u64> {
    if !numerator.is_multiple_of(denominator) {
        return Err(Error::InexactDivision { numerator, denominator });
    }
    Ok(numerator / denominator)
}

/// Number of points on a non-singular quadric:
///
/// - `|Q(2N,q)| = (q^{2N} - 1)/(q - 1)`
/// - `|Q⁻(2N-1,q)| = (q^{N-1} - 1)(q^N + 1)/(q - 1)`
/// - `|Q⁺(2N-1,q)| = (q^{N-1} + 1)(q^N - 1)/(q - 1)`
pub fn quadric_point_count(kind: QuadricKind, n: u32, q: u64) -> Result<u64> {
    if !is_prime_power(q) {
        return Err(Error::InvalidQuadric(format!("q = {q} is not a prime power")));
    }
    let min_n = if kind == QuadricKind::Parabolic { 2 } else { 1 };
    if n < min_n {
        return Err(Error::InvalidQuadric(format!("N = {n} below {min_n} for {kind:?}")));
    }
    let numerator = match kind {
        QuadricKind::Parabolic => pow(q, 2 * n)? - 1,
        QuadricKind::Elliptic => (pow(q, n - 1)? - 1)
            .checked_mul(pow(q, n)? + 1)
            .ok_or_else(|| Error::InvalidQuadric("overflow".into()))?,
        QuadricKind::Hyperbolic => (pow(q, n - 1)? + 1)
            .checked_mul(pow(q, n)? - 1)
            .ok_or_else(|| Error::InvalidQuadric("overflow".into()))?,
    };
    exact_div(numerator, q - 1)
}

/// Largest size `(q^N - 1)/(q - 1)` of an exterior set of `Q⁺(2N-1,q)`.
pub fn exterior_set_bound(n: u32, q: u64) -> Result<u64> {
    if !is_prime_power(q) || n < 2 {
        return Err(Error::InvalidQuadric(format!(
            "exterior set bound for N = {n}, q = {q}"
        )));
    }
    exact_div(pow(q, n)? - 1, q - 1)
}
