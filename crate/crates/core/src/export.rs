//! JSON and DOT renderings.
//!
//! Every JSON document carries `"schema": 1` at the top level. Points are
//! referred to by canonical index (`id`) in structure exports and by label
//! everywhere else.

use serde::Serialize;

use crate::hyperplanes::Hyperplane;
use crate::incidence::{CollinearityGraph, IncidenceStructure};
use crate::magic_line::{MagicLine, Sector};
use crate::polar::{PolarSubspace, SubspaceKind};
use crate::veldkamp::{Census, VeldkampSpace};

pub const SCHEMA_VERSION: u32 = 1;

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("export types serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct PointEntry<'a> {
    id: usize,
    label: &'a str,
}

#[derive(Serialize)]
pub struct StructureDoc<'a> {
    schema: u32,
    points: Vec<PointEntry<'a>>,
    lines: Vec<Vec<usize>>,
}

pub fn structure_doc(c: &IncidenceStructure) -> StructureDoc<'_> {
    StructureDoc {
        schema: SCHEMA_VERSION,
        points: c
            .labels()
            .iter()
            .enumerate()
            .map(|(id, l)| PointEntry { id, label: l })
            .collect(),
        lines: c.lines().iter().map(|l| l.to_vec()).collect(),
    }
}

#[derive(Serialize)]
struct HyperplaneEntry {
    partition: Option<String>,
    points: Vec<String>,
}

#[derive(Serialize)]
pub struct HyperplanesDoc {
    schema: u32,
    count: usize,
    hyperplanes: Vec<HyperplaneEntry>,
}

pub fn hyperplanes_doc(host: &IncidenceStructure, hs: &[Hyperplane]) -> HyperplanesDoc {
    HyperplanesDoc {
        schema: SCHEMA_VERSION,
        count: hs.len(),
        hyperplanes: hs
            .iter()
            .map(|h| HyperplaneEntry {
                partition: h.partition.map(|p| p.to_string()),
                points: host.set_labels(h.members),
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct PointTypeRow {
    #[serde(rename = "type")]
    kind: &'static str,
    form: &'static str,
    constituents: String,
    count: usize,
}

#[derive(Serialize)]
struct OrbitRow {
    #[serde(rename = "type")]
    kind: String,
    forms: [&'static str; 3],
    core: Vec<String>,
    core_sizes: Vec<usize>,
    count: usize,
}

#[derive(Serialize)]
struct AbsentRow {
    #[serde(rename = "type")]
    kind: String,
    count: usize,
}

#[derive(Serialize)]
struct CensusSection {
    points: Vec<PointTypeRow>,
    lines: Vec<OrbitRow>,
    absent: Vec<AbsentRow>,
    other_lines: usize,
    total_points: usize,
    total_lines: usize,
    lines_per_point: Option<usize>,
}

#[derive(Serialize)]
struct VPointEntry<'a> {
    label: &'a str,
    #[serde(rename = "type")]
    kind: Option<&'static str>,
}

#[derive(Serialize)]
struct VLineEntry<'a> {
    points: [&'a str; 3],
    orbit: Option<String>,
    core: Vec<String>,
}

#[derive(Serialize)]
pub struct VeldkampDoc<'a> {
    schema: u32,
    census: Option<CensusSection>,
    points: Vec<VPointEntry<'a>>,
    lines: Vec<VLineEntry<'a>>,
}

fn census_section(c: &Census) -> CensusSection {
    CensusSection {
        points: c
            .points
            .iter()
            .map(|&(t, count)| PointTypeRow {
                kind: t.symbol(),
                form: t.form(),
                constituents: t.constituents(),
                count,
            })
            .collect(),
        lines: c
            .lines
            .iter()
            .zip(&c.core_shapes)
            .zip(&c.core_sizes)
            .map(|((&(o, count), (_, shapes)), (_, sizes))| OrbitRow {
                kind: o.to_string(),
                forms: o.forms(),
                core: shapes.iter().cloned().collect(),
                core_sizes: sizes.iter().copied().collect(),
                count,
            })
            .collect(),
        absent: c
            .absent
            .iter()
            .map(|&(t, count)| AbsentRow {
                kind: t.to_string(),
                count,
            })
            .collect(),
        other_lines: c.other_lines,
        total_points: c.total_points,
        total_lines: c.total_lines,
        lines_per_point: c.lines_per_point,
    }
}

pub fn veldkamp_doc<'a>(v: &'a VeldkampSpace, census: Option<&Census>) -> VeldkampDoc<'a> {
    let host = v.host();
    VeldkampDoc {
        schema: SCHEMA_VERSION,
        census: census.map(census_section),
        points: (0..v.num_points())
            .map(|i| VPointEntry {
                label: v.label(i),
                kind: v.point_type(i).map(|t| t.symbol()),
            })
            .collect(),
        lines: (0..v.num_lines())
            .map(|l| VLineEntry {
                points: v.line_labels(l),
                orbit: v.orbit(l).map(|o| o.to_string()),
                core: host.set_labels(v.core(l)),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct PolarDoc<'a, C: Serialize> {
    schema: u32,
    kind: SubspaceKind,
    description: String,
    points: Vec<&'a str>,
    lines: Vec<[&'a str; 3]>,
    certificate: C,
}

pub fn polar_doc<'a, C: Serialize>(v: &'a VeldkampSpace, sub: &PolarSubspace, certificate: C) -> PolarDoc<'a, C> {
    PolarDoc {
        schema: SCHEMA_VERSION,
        kind: sub.kind,
        description: sub.kind.to_string(),
        points: sub.points.iter().map(|&i| v.label(i)).collect(),
        lines: sub.lines.iter().map(|&l| v.line_labels(l)).collect(),
        certificate,
    }
}

#[derive(Serialize)]
struct SectorEntry<'a> {
    sector: Sector,
    points: Vec<&'a str>,
    lines: Vec<[&'a str; 3]>,
    induced_lines: usize,
}

#[derive(Serialize)]
pub struct MagicLineEntry<'a> {
    pivot: u8,
    vertex: &'a str,
    sectors: Vec<SectorEntry<'a>>,
}

#[derive(Serialize)]
pub struct MagicLinesDoc<'a> {
    schema: u32,
    magic_lines: Vec<MagicLineEntry<'a>>,
}

pub fn magic_line_entry<'a>(v: &'a VeldkampSpace, m: &MagicLine) -> MagicLineEntry<'a> {
    MagicLineEntry {
        pivot: m.pivot,
        vertex: v.label(m.vertex),
        sectors: Sector::ALL
            .iter()
            .map(|&s| SectorEntry {
                sector: s,
                points: m.points(s).iter().map(|&i| v.label(i)).collect(),
                lines: m.lines(s).iter().map(|&l| v.line_labels(l)).collect(),
                induced_lines: m.induced_lines(s).len(),
            })
            .collect(),
    }
}

pub fn magic_lines_doc<'a>(v: &'a VeldkampSpace, ms: &[MagicLine]) -> MagicLinesDoc<'a> {
    MagicLinesDoc {
        schema: SCHEMA_VERSION,
        magic_lines: ms.iter().map(|m| magic_line_entry(v, m)).collect(),
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph with point labels as node names.
pub fn collinearity_dot(g: &CollinearityGraph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for u in 0..g.num_vertices() {
        out.push_str(&format!("  {};\n", quote(g.label(u))));
    }
    for (u, w) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", quote(g.label(u)), quote(g.label(w))));
    }
    out.push_str("}\n");
    out
}

pub fn sector_color(s: Sector) -> &'static str {
    match s {
        Sector::Core => "gold",
        Sector::Elliptic => "steelblue",
        Sector::Hyperbolic => "firebrick",
        Sector::Cone => "forestgreen",
    }
}

/// The 63 vpoints coloured by sector; each listed line is drawn as the path
/// through its three points in the colour of its sector.
pub fn magic_line_dot(v: &VeldkampSpace, m: &MagicLine) -> String {
    let mut out = format!("graph {} {{\n", quote(&format!("magic line, pivot {}", m.pivot)));
    out.push_str("  node [style=filled];\n");
    for i in 0..v.num_points() {
        let s = m.sector_of(i);
        let shape = if i == m.vertex { ", shape=doublecircle" } else { "" };
        out.push_str(&format!(
            "  {} [sector={}, color={}{shape}];\n",
            quote(v.label(i)),
            s.name(),
            sector_color(s)
        ));
    }
    for s in Sector::ALL {
        for &l in m.lines(s) {
            let [a, b, c] = v.line_labels(l).map(quote);
            out.push_str(&format!("  {a} -- {b} -- {c} [color={}];\n", sector_color(s)));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmannian::build_g2;
    use crate::incidence::{collinearity_graph, fixtures};

    #[test]
    fn structure_json_shape() {
        let doc: serde_json::Value = serde_json::from_str(&to_json(&structure_doc(&fixtures::single_line()))).unwrap();
        assert_eq!(doc["schema"], 1);
        assert_eq!(doc["points"][1]["label"], "b");
        assert_eq!(doc["lines"], serde_json::json!([[0, 1, 2]]));
    }

    #[test]
    fn hyperplanes_json_shape() {
        let g = build_g2(4).unwrap();
        let hs = crate::hyperplanes::enumerate_hyperplanes(&g);
        let doc: serde_json::Value = serde_json::from_str(&to_json(&hyperplanes_doc(&g, &hs))).unwrap();
        assert_eq!(doc["count"], 7);
        assert_eq!(doc["hyperplanes"][0]["partition"], "123:4");
        assert_eq!(doc["hyperplanes"][0]["points"], serde_json::json!(["12", "13", "23"]));
    }

    #[test]
    fn dot_lists_every_edge() {
        let g = collinearity_graph(&build_g2(4).unwrap());
        let dot = collinearity_dot(&g, "G2(4)");
        assert!(dot.starts_with("graph \"G2(4)\" {\n"));
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert!(dot.contains("\"12\" -- \"13\";"));
    }
}
