//! Geometric hyperplanes: proper point subsets that every line either lies
//! in or meets in exactly one point.
//!
//! [`enumerate_hyperplanes`] is a depth-first search with line-constraint
//! propagation. [`enumerate_hyperplanes_exhaustive`] scans all `2^v`
//! subsets and serves as the independent oracle for small hosts.
//!
//! On a `G2(N)` host every hyperplane found so far is a *bipartition
//! hyperplane*: for a split `X = A ∪ B`, the pairs inside `A` together with
//! the pairs inside `B`. A line `{x, y, z}` splits 3–0 or 2–1 across any
//! bipartition, giving 3 or 1 member points. Labels of the form
//! `"1234:567"` are attached after the search by pattern matching.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grassmannian::{recognize_g2_host, GroundSet, PairPoint};
use crate::incidence::IncidenceStructure;
use crate::pointset::PointSet;

/// Largest host the exhaustive oracle accepts.
pub const ORACLE_POINT_LIMIT: usize = 24;

/// An unordered split of `{1..n}` into two nonempty sides.
///
/// The canonical first side is the larger one; on a tie, the side holding
/// element 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bipartition {
    n: u8,
    first: u16,
}

fn mask_of(elements: impl IntoIterator<Item = u8>) -> u16 {
    elements.into_iter().fold(0, |m, e| m | 1 << (e - 1))
}

fn elements_of(mask: u16) -> impl Iterator<Item = u8> {
    (1..=16u8).filter(move |e| mask & (1 << (e - 1)) != 0)
}

impl Bipartition {
    /// The split `side : complement(side)` of `{1..n}`.
    pub fn new(n: usize, side: &[u8]) -> Result<Self> {
        if n == 0 || n > 16 {
            return Err(Error::GroundSetOutOfRange(n));
        }
        if let Some(&e) = side.iter().find(|&&e| e == 0 || e as usize > n) {
            return Err(Error::ElementOutOfRange { element: e as usize, n });
        }
        Self::from_mask(n as u8, mask_of(side.iter().copied()))
    }

    fn from_mask(n: u8, side: u16) -> Result<Self> {
        let full = ((1u32 << n) - 1) as u16;
        if side == 0 || side == full {
            return Err(Error::TrivialBipartition { n: n as usize });
        }
        let other = full & !side;
        let first = match side.count_ones().cmp(&other.count_ones()) {
            Ordering::Greater => side,
            Ordering::Less => other,
            Ordering::Equal if side & 1 != 0 => side,
            Ordering::Equal => other,
        };
        Ok(Bipartition { n, first })
    }

    pub fn ground_size(&self) -> usize {
        self.n as usize
    }

    fn full(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    /// The larger side, ascending.
    pub fn first(&self) -> Vec<u8> {
        elements_of(self.first).collect()
    }

    /// The smaller side, ascending.
    pub fn second(&self) -> Vec<u8> {
        elements_of(self.full() & !self.first).collect()
    }

    /// Side sizes, larger first.
    pub fn sizes(&self) -> (usize, usize) {
        let a = self.first.count_ones() as usize;
        (a, self.n as usize - a)
    }

    pub fn in_first(&self, e: u8) -> bool {
        self.first & (1 << (e - 1)) != 0
    }

    /// Whether `a` and `b` lie on the same side.
    pub fn same_side(&self, a: u8, b: u8) -> bool {
        self.in_first(a) == self.in_first(b)
    }

    /// The split whose side is the symmetric difference of a side of each
    /// input; `None` when the inputs are equal.
    pub fn sum(&self, other: &Bipartition) -> Option<Bipartition> {
        assert_eq!(self.n, other.n, "bipartitions over different ground sets");
        Self::from_mask(self.n, self.first ^ other.first).ok()
    }

    /// Relabels through `perm`, where `perm[e - 1]` is the image of `e`.
    pub fn permuted(&self, perm: &[u8]) -> Bipartition {
        assert_eq!(perm.len(), self.n as usize, "permutation size mismatch");
        let side = mask_of(elements_of(self.first).map(|e| perm[e as usize - 1]));
        Self::from_mask(self.n, side).expect("permutation preserves nontriviality")
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.first() {
            write!(f, "{e}")?;
        }
        f.write_str(":")?;
        for e in self.second() {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bipartition({self})")
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Parses `"abcd:efg"`; the ground set is `{1..n}` with `n` the total
    /// digit count, and the two sides must partition it.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedBipartition(s.to_string());
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let digits = |t: &str| -> Result<Vec<u8>> {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).filter(|&d| d > 0).ok_or_else(bad))
                .collect()
        };
        let (a, b) = (digits(a)?, digits(b)?);
        let n = a.len() + b.len();
        let (ma, mb) = (mask_of(a.iter().copied()), mask_of(b.iter().copied()));
        if a.iter().chain(&b).any(|&e| e as usize > n) || (ma | mb) as u32 != (1u32 << n) - 1 || ma & mb != 0 {
            return Err(bad());
        }
        Bipartition::new(n, &a).map_err(|_| bad())
    }
}

/// A geometric hyperplane, stored by the host's canonical point indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub members: PointSet,
    pub partition: Option<Bipartition>,
}

impl Hyperplane {
    /// Display label: the bipartition when known, otherwise the member
    /// labels in braces.
    pub fn label(&self, host: &IncidenceStructure) -> String {
        match self.partition {
            Some(p) => p.to_string(),
            None => format!("{{{}}}", host.set_labels(self.members).join(",")),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Whether `subset` is a geometric hyperplane of `c`.
pub fn is_hyperplane(c: &IncidenceStructure, subset: PointSet) -> bool {
    let all = c.points();
    subset.is_subset(&all)
        && subset != all
        && c.lines().iter().all(|&l| {
            let m = (l & subset).len();
            m == 1 || m == l.len()
        })
}

/// Index of the pair `{a, b}` in `G2(n)`'s canonical point order.
fn pair_index(n: usize, a: u8, b: u8) -> usize {
    let (a, b) = (a.min(b) as usize, a.max(b) as usize);
    // pairs starting with 1..a-1 come first
    let before: usize = (1..a).map(|x| n - x).sum();
    before + (b - a - 1)
}

/// The hyperplane of `G2(n)` made of all pairs inside `side` and all pairs
/// inside its complement.
pub fn bipartition_hyperplane(n: usize, side: &[u8]) -> Result<Hyperplane> {
    GroundSet::new(n)?;
    let partition = Bipartition::new(n, side)?;
    Ok(Hyperplane {
        members: bipartition_members(n, &partition),
        partition: Some(partition),
    })
}

fn bipartition_members(n: usize, p: &Bipartition) -> PointSet {
    let mut members = PointSet::EMPTY;
    for a in 1..=n as u8 {
        for b in a + 1..=n as u8 {
            if p.same_side(a, b) {
                members.insert(pair_index(n, a, b));
            }
        }
    }
    members
}

/// Recovers the bipartition of a `G2(n)` point set, if it is one.
pub fn recognize_bipartition(host: &IncidenceStructure, members: PointSet) -> Option<Bipartition> {
    let n = recognize_g2_host(host)?;
    let mut side = vec![1u8];
    for x in 2..=n as u8 {
        let label = PairPoint::new(1, x).to_string();
        if members.contains(host.index_of(&label)?) {
            side.push(x);
        }
    }
    let p = Bipartition::new(n, &side).ok()?;
    let expected: PointSet = host
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            let [a, b] = PairPoint::parse(l).expect("G2 label").elements();
            p.same_side(a, b)
        })
        .map(|(i, _)| i)
        .collect();
    (expected == members).then_some(p)
}

/// Attaches bipartition labels and sorts into canonical (label) order.
fn finish(host: &IncidenceStructure, sets: Vec<PointSet>) -> Vec<Hyperplane> {
    let mut hs: Vec<(String, Hyperplane)> = sets
        .into_iter()
        .map(|members| {
            let h = Hyperplane {
                members,
                partition: recognize_bipartition(host, members),
            };
            (h.label(host), h)
        })
        .collect();
    hs.sort_by(|a, b| a.0.cmp(&b.0));
    hs.dedup_by(|a, b| a.1.members == b.1.members);
    hs.into_iter().map(|(_, h)| h).collect()
}

/// Applies forced assignments until a fixed point; `None` on contradiction.
///
/// A line with two chosen points must be fully chosen; a line with one
/// chosen and one excluded point must have all its other points excluded;
/// a line with nothing chosen and one undecided point must take it.
fn propagate(lines: &[PointSet], mut inn: PointSet, mut out: PointSet) -> Option<(PointSet, PointSet)> {
    loop {
        let mut changed = false;
        for &l in lines {
            let chosen = (l & inn).len();
            let excluded = (l & out).len();
            let open = l - inn - out;
            match chosen {
                0 => match open.len() {
                    0 => return None,
                    1 => {
                        inn |= open;
                        changed = true;
                    }
                    _ => {}
                },
                1 => {
                    if excluded > 0 && !open.is_empty() {
                        out |= open;
                        changed = true;
                    }
                }
                _ => {
                    if excluded > 0 {
                        return None;
                    }
                    if !open.is_empty() {
                        inn |= open;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Some((inn, out));
        }
    }
}

fn search(lines: &[PointSet], all: PointSet, inn: PointSet, out: PointSet, found: &mut Vec<PointSet>) {
    let Some((inn, out)) = propagate(lines, inn, out) else {
        return;
    };
    match (all - inn - out).first() {
        None => {
            if inn != all {
                found.push(inn);
            }
        }
        Some(p) => {
            search(lines, all, inn | PointSet::singleton(p), out, found);
            search(lines, all, inn, out | PointSet::singleton(p), found);
        }
    }
}

/// All geometric hyperplanes of `c`, duplicate-free, in canonical order.
pub fn enumerate_hyperplanes(c: &IncidenceStructure) -> Vec<Hyperplane> {
    let mut found = Vec::new();
    search(c.lines(), c.points(), PointSet::EMPTY, PointSet::EMPTY, &mut found);
    finish(c, found)
}

/// Raw scan of every subset against the hyperplane law.
pub fn enumerate_hyperplanes_exhaustive(c: &IncidenceStructure) -> Result<Vec<Hyperplane>> {
    let v = c.num_points();
    if v > ORACLE_POINT_LIMIT {
        return Err(Error::OracleTooLarge {
            points: v,
            limit: ORACLE_POINT_LIMIT,
        });
    }
    let lines: Vec<(u32, u32)> = c
        .lines()
        .iter()
        .map(|l| (l.iter().fold(0u32, |m, p| m | 1 << p), l.len() as u32))
        .collect();
    let full = if v == 32 { u32::MAX } else { (1u32 << v) - 1 };
    let found: Vec<PointSet> = (0..full)
        .filter(|&mask| {
            lines.iter().all(|&(l, k)| {
                let m = (l & mask).count_ones();
                m == 1 || m == k
            })
        })
        .map(|mask| (0..v).filter(|&p| mask & (1 << p) != 0).collect())
        .collect();
    Ok(finish(c, found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmannian::build_g2;
    use crate::incidence::fixtures;

    fn g2(n: usize) -> IncidenceStructure {
        build_g2(n).unwrap()
    }

    #[test]
    fn law_on_a_single_line() {
        let c = fixtures::single_line();
        assert!(is_hyperplane(&c, PointSet::singleton(0)));
        assert!(!is_hyperplane(&c, [0, 1].iter().collect()));
        assert!(!is_hyperplane(&c, c.points()));
        assert!(!is_hyperplane(&c, PointSet::EMPTY));
        assert!(!is_hyperplane(&c, PointSet::singleton(5)));
    }

    #[test]
    fn alpha_bipartition_in_g2_7() {
        let c = g2(7);
        let labels = ["12", "13", "14", "23", "24", "34", "56", "57", "67"];
        let set = c.set_of(&labels).unwrap();
        assert!(is_hyperplane(&c, set));
        let h = bipartition_hyperplane(7, &[1, 2, 3, 4]).unwrap();
        assert_eq!(h.members, set);
        assert_eq!(h.label(&c), "1234:567");
        assert_eq!(recognize_bipartition(&c, set), h.partition);
    }

    #[test]
    fn gamma_bipartition_avoids_the_singleton() {
        let c = g2(7);
        let h = bipartition_hyperplane(7, &[7]).unwrap();
        assert_eq!(h.label(&c), "123456:7");
        assert_eq!(h.len(), 15);
        assert!(c.set_labels(h.members).iter().all(|l| !l.contains('7')));
    }

    #[test]
    fn pasch_opposite_pair() {
        let c = g2(4);
        let h = bipartition_hyperplane(4, &[1, 2]).unwrap();
        assert_eq!(c.set_labels(h.members), ["12", "34"]);
        assert_eq!(h.label(&c), "12:34");
        assert!(is_hyperplane(&c, h.members));
    }

    #[test]
    fn pair_index_matches_host_order() {
        for n in 3..=9 {
            let c = g2(n);
            for a in 1..=n as u8 {
                for b in a + 1..=n as u8 {
                    let label = PairPoint::new(a, b).to_string();
                    assert_eq!(c.index_of(&label), Some(pair_index(n, a, b)));
                }
            }
        }
    }

    #[test]
    fn bipartition_errors() {
        assert_eq!(
            bipartition_hyperplane(7, &[]).unwrap_err(),
            Error::TrivialBipartition { n: 7 }
        );
        assert_eq!(
            bipartition_hyperplane(3, &[1, 2, 3]).unwrap_err(),
            Error::TrivialBipartition { n: 3 }
        );
        assert_eq!(
            bipartition_hyperplane(4, &[5]).unwrap_err(),
            Error::ElementOutOfRange { element: 5, n: 4 }
        );
        assert_eq!(
            bipartition_hyperplane(11, &[1]).unwrap_err(),
            Error::GroundSetOutOfRange(11)
        );
    }

    #[test]
    fn bipartition_labels() {
        let p: Bipartition = "567:1234".parse().unwrap();
        assert_eq!(p.to_string(), "1234:567");
        assert_eq!(p.sizes(), (4, 3));
        assert_eq!("34:12".parse::<Bipartition>().unwrap().to_string(), "12:34");
        assert_eq!("7:612345".parse::<Bipartition>().unwrap().to_string(), "123456:7");
        for bad in ["1234567", "123:46", "1234:5678:", "1234:566", ":1234567", "0123:456"] {
            assert!(bad.parse::<Bipartition>().is_err(), "{bad}");
        }
        let a: Bipartition = "1234:567".parse().unwrap();
        let b: Bipartition = "1256:347".parse().unwrap();
        assert_eq!(a.sum(&b).unwrap().to_string(), "3456:127");
        assert_eq!(a.sum(&a), None);
        let swap = [2, 1, 3, 4, 5, 7, 6];
        assert_eq!(a.permuted(&swap).to_string(), "1234:567");
        let cycle = [2, 3, 4, 5, 6, 7, 1];
        assert_eq!(a.permuted(&cycle).to_string(), "2345:167");
    }

    #[test]
    fn single_line_has_three_singleton_hyperplanes() {
        let c = g2(3);
        let hs = enumerate_hyperplanes(&c);
        assert_eq!(hs.len(), 3);
        assert!(hs.iter().all(|h| h.len() == 1));
        assert_eq!(
            hs.iter().map(|h| h.label(&c)).collect::<Vec<_>>(),
            ["12:3", "13:2", "23:1"]
        );
    }

    #[test]
    fn pasch_has_seven_hyperplanes() {
        let c = g2(4);
        let hs = enumerate_hyperplanes(&c);
        assert_eq!(hs, enumerate_hyperplanes_exhaustive(&c).unwrap());
        assert_eq!(hs.len(), 7);
        assert_eq!(hs.iter().filter(|h| h.len() == 3).count(), 4);
        assert_eq!(hs.iter().filter(|h| h.len() == 2).count(), 3);
    }

    #[test]
    fn hyperplanes_of_unlabelled_hosts() {
        // 3x3 grid: the 6 permutation sets and the 9 crosses (row ∪ column)
        let c = fixtures::grid();
        let hs = enumerate_hyperplanes(&c);
        assert_eq!(hs, enumerate_hyperplanes_exhaustive(&c).unwrap());
        assert_eq!(hs.len(), 15);
        assert!(hs.iter().all(|h| h.partition.is_none()));
        assert!(hs[0].label(&c).starts_with('{'));
        // Fano plane: the hyperplanes are exactly the lines
        let f = fixtures::fano();
        let hs = enumerate_hyperplanes(&f);
        assert_eq!(hs.len(), 7);
        assert!(hs.iter().all(|h| f.lines().contains(&h.members)));
    }

    #[test]
    fn oracle_refuses_large_hosts() {
        assert_eq!(
            enumerate_hyperplanes_exhaustive(&g2(8)).unwrap_err(),
            Error::OracleTooLarge {
                points: 28,
                limit: ORACLE_POINT_LIMIT
            }
        );
    }

    #[test]
    fn enumeration_equals_bipartitions() {
        for n in 3..=9 {
            let c = g2(n);
            let hs = enumerate_hyperplanes(&c);
            assert_eq!(hs.len(), (1 << (n - 1)) - 1, "N = {n}");
            assert!(hs.iter().all(|h| h.partition.is_some()));
            for h in &hs {
                let p = h.partition.unwrap();
                assert_eq!(bipartition_hyperplane(n, &p.first()).unwrap().members, h.members);
                assert!(is_hyperplane(&c, h.members));
                let comp = h.members.complement(c.num_points());
                for &l in c.lines() {
                    let m = (l & comp).len();
                    assert!(m == 0 || m == l.len() - 1);
                }
            }
            assert_eq!(hs, enumerate_hyperplanes(&c), "deterministic");
        }
    }
}
