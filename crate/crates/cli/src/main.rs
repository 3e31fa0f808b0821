use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use veldkamp_core::export::{
    collinearity_dot, hyperplanes_doc, magic_line_dot, magic_lines_doc, polar_doc, structure_doc, to_json, veldkamp_doc,
};
use veldkamp_core::grassmannian::{build_g2, named_configuration, NamedConfiguration};
use veldkamp_core::hyperplanes::{enumerate_hyperplanes, enumerate_hyperplanes_exhaustive};
use veldkamp_core::incidence::{collinearity_graph, configuration_parameters};
use veldkamp_core::magic_line::{
    build_magic_line, verify_cone, verify_core, verify_counts, verify_elliptic, verify_hyperbolic,
    verify_veldkamp_line_of_w, SectorCounts,
};
use veldkamp_core::polar::{
    alpha_quadric, certify_symplectic, conwell_heptad, embedded_grassmannian, extract_symplectic, quadric_point_count,
    QuadricKind,
};
use veldkamp_core::veldkamp::{build_veldkamp, tabulate_census, VeldkampSpace};
use veldkamp_core::verify_all;

/// Combinatorial Grassmannians, their Veldkamp spaces and the magic
/// Veldkamp lines of W(5,2).
#[derive(Parser, Debug)]
#[command(name = "veldkamp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build G2(n) and report its configuration parameters.
    BuildGrassmannian {
        #[arg(long, default_value_t = 7, value_parser = ground_size)]
        n: usize,
        /// Write the structure as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Write the collinearity graph as DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Enumerate the geometric hyperplanes of G2(n).
    Hyperplanes {
        #[arg(long, default_value_t = 7, value_parser = ground_size)]
        n: usize,
        /// Compare with a scan of every point subset (at most 24 points).
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Build the Veldkamp space of G2(n).
    Veldkamp {
        #[arg(long, default_value_t = 7, value_parser = ground_size)]
        n: usize,
        /// Print the point and line census (G2(7) only).
        #[arg(long)]
        census: bool,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Extract and certify a sub-geometry of the Veldkamp space of G2(7).
    Polar {
        #[arg(long, default_value_t = 7, value_parser = ground_size)]
        n: usize,
        #[arg(long, value_enum)]
        what: PolarWhat,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Build and verify the magic Veldkamp line for a pivot of {1..7}.
    MagicLine {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7), required_unless_present = "all")]
        pivot: Option<u8>,
        /// All seven pivots.
        #[arg(long, conflicts_with_all = ["pivot", "dot"])]
        all: bool,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Write the vpoints coloured by sector as DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Run every check and print a report.
    VerifyAll {
        #[arg(long, default_value_t = 7, value_parser = ground_size)]
        n: usize,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PolarWhat {
    Symplectic,
    Quadric,
    Grassmannian,
    Heptad,
}

fn ground_size(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if (3..=9).contains(&n) {
        Ok(n)
    } else {
        Err(format!("ground set size must be in 3..=9, got {n}"))
    }
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn require_seven(n: usize, what: &str) -> Result<()> {
    anyhow::ensure!(n == 7, "{what} is only defined for G2(7), got G2({n})");
    Ok(())
}

fn g27_space() -> Result<VeldkampSpace> {
    Ok(build_veldkamp(&build_g2(7)?)?)
}

/// Returns whether every executed check passed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::BuildGrassmannian { n, json, dot } => {
            let g = build_g2(n)?;
            let params = configuration_parameters(&g);
            let name = match named_configuration(&g) {
                NamedConfiguration::Unnamed => String::new(),
                NamedConfiguration::Line => ", a single line".to_string(),
                other => format!(", the {other} configuration"),
            };
            println!(
                "G2({n}): {} points, {} lines, {}{params} configuration{name}",
                g.num_points(),
                g.num_lines(),
                if params.linear { "linear " } else { "" },
            );
            if let Some(path) = json {
                write(&path, &to_json(&structure_doc(&g)))?;
            }
            if let Some(path) = dot {
                write(&path, &collinearity_dot(&collinearity_graph(&g), &format!("G2({n})")))?;
            }
            Ok(true)
        }
        Command::Hyperplanes { n, oracle, json } => {
            let g = build_g2(n)?;
            let hs = enumerate_hyperplanes(&g);
            for h in &hs {
                println!("{}", h.label(&g));
            }
            println!("{} hyperplanes", hs.len());
            let mut ok = true;
            if oracle {
                let slow = enumerate_hyperplanes_exhaustive(&g)?;
                ok = slow == hs;
                println!(
                    "oracle: {} hyperplanes, {}",
                    slow.len(),
                    if ok { "identical" } else { "DIFFERENT" }
                );
            }
            if let Some(path) = json {
                write(&path, &to_json(&hyperplanes_doc(&g, &hs)))?;
            }
            Ok(ok)
        }
        Command::Veldkamp { n, census, json } => {
            let v = build_veldkamp(&build_g2(n)?)?;
            println!(
                "Veldkamp space of G2({n}): {} points, {} lines",
                v.num_points(),
                v.num_lines()
            );
            let table = if census {
                require_seven(n, "the census")?;
                let c = tabulate_census(&v)?;
                print!("\n{}", c.render());
                Some(c)
            } else {
                None
            };
            if let Some(path) = json {
                write(&path, &to_json(&veldkamp_doc(&v, table.as_ref())))?;
            }
            Ok(true)
        }
        Command::Polar { n, what, json } => {
            require_seven(n, "the polar extraction")?;
            let v = g27_space()?;
            polar(&v, what, json.as_deref())
        }
        Command::MagicLine { pivot, all, json, dot } => {
            let v = g27_space()?;
            let pivots: Vec<usize> = if all {
                (1..=7).collect()
            } else {
                vec![pivot.expect("clap requires it") as usize]
            };
            magic(&v, &pivots, json.as_deref(), dot.as_deref())
        }
        Command::VerifyAll { n, json } => {
            let report = verify_all(n)?;
            print!("{}", report.render());
            if let Some(path) = json {
                write(&path, &to_json(&report))?;
            }
            if let Some(c) = report.first_failure() {
                eprintln!("first failure, check {} ({}): {}", c.id, c.name, c.detail);
            }
            Ok(report.passed)
        }
    }
}

fn polar(v: &VeldkampSpace, what: PolarWhat, json: Option<&Path>) -> Result<bool> {
    let (ok, doc) = match what {
        PolarWhat::Symplectic => {
            let sub = extract_symplectic(v);
            let w = sub.to_structure(v)?;
            let cert = certify_symplectic(&w);
            println!("{}: {} points, {} lines", sub.kind, cert.points, cert.lines);
            println!("lines per point: {:?}", cert.lines_per_point);
            match cert.one_or_all.witness() {
                None => println!("one-or-all axiom: holds"),
                Some(wit) => println!("one-or-all axiom: fails, {}", wit.describe(&w)),
            }
            match cert.srg {
                Some(s) => println!("collinearity graph: SRG({},{},{},{})", s.n, s.k, s.lambda, s.mu),
                None => println!("collinearity graph: not strongly regular"),
            }
            (cert.is_w52(), to_json(&polar_doc(v, &sub, &cert)))
        }
        PolarWhat::Quadric => {
            let sub = alpha_quadric(v)?;
            let count = quadric_point_count(QuadricKind::Hyperbolic, 3, 2)?;
            println!(
                "{}: {} points, {} lines; |Q+(5,2)| = {count}",
                sub.kind,
                sub.points.len(),
                sub.lines.len()
            );
            let ok = (sub.points.len(), sub.lines.len()) == (35, 105) && count == 35;
            let cert = json!({ "points": sub.points.len(), "lines": sub.lines.len(), "hyperbolic_count": count });
            (ok, to_json(&polar_doc(v, &sub, cert)))
        }
        PolarWhat::Grassmannian => {
            let (sub, iso) = embedded_grassmannian(v)?;
            println!(
                "{}: {} points, {} lines, isomorphic to G2(7)",
                sub.kind,
                sub.points.len(),
                sub.lines.len()
            );
            let map: Vec<[String; 2]> = iso
                .point_map
                .iter()
                .map(|(i, p)| [v.label(*i).to_string(), p.to_string()])
                .collect();
            let lines: Vec<[String; 2]> = iso
                .line_map
                .iter()
                .map(|(l, t)| [v.line_labels(*l).join(" "), t.clone()])
                .collect();
            let cert = json!({ "isomorphic": true, "point_map": map, "line_map": lines });
            (true, to_json(&polar_doc(v, &sub, cert)))
        }
        PolarWhat::Heptad => {
            let (sub, cert) = conwell_heptad(v)?;
            println!(
                "{}: {} points, {} connecting lines, exterior to Q+0(5,2): {}, bound {}",
                sub.kind,
                cert.size,
                cert.connecting_lines.len(),
                cert.exterior,
                cert.bound
            );
            let lines: Vec<[&str; 3]> = cert.connecting_lines.iter().map(|&l| v.line_labels(l)).collect();
            let body = json!({
                "size": cert.size,
                "bound": cert.bound,
                "exterior": cert.exterior,
                "connecting_lines": lines,
            });
            (cert.is_maximal_exterior_set(), to_json(&polar_doc(v, &sub, body)))
        }
    };
    if let Some(path) = json {
        write(path, &doc)?;
    }
    Ok(ok)
}

fn magic(v: &VeldkampSpace, pivots: &[usize], json: Option<&Path>, dot: Option<&Path>) -> Result<bool> {
    let w = extract_symplectic(v).to_structure(v)?;
    let mut lines = Vec::new();
    let mut ok = true;
    for &g in pivots {
        let m = build_magic_line(v, g)?;
        let counts = verify_counts(&m);
        let core = verify_core(v, &m)?;
        let elliptic = verify_elliptic(v, &m)?;
        let hyperbolic = verify_hyperbolic(v, &m)?;
        let cone = verify_cone(v, &m)?;
        let w_line = verify_veldkamp_line_of_w(v, &w, &m);
        let mark = |b: bool| if b { "ok" } else { "FAILED" };
        println!("pivot {g}, vertex {}", v.label(m.vertex));
        println!(
            "  sectors (points, lines): core {:?}, elliptic {:?}, hyperbolic {:?}, cone {:?}: {}",
            counts.core,
            counts.elliptic,
            counts.hyperbolic,
            counts.cone,
            mark(counts == SectorCounts::EXPECTED)
        );
        println!(
            "  core GQ({},{}) on {} points: {}",
            core.gq.s,
            core.gq.t,
            core.points,
            mark(core.passes())
        );
        println!(
            "  core + elliptic GQ({},{}) on {} points, {} lines: {}",
            elliptic.gq.s,
            elliptic.gq.t,
            elliptic.points,
            elliptic.lines,
            mark(elliptic.passes())
        );
        println!(
            "  core + hyperbolic = Q+0(5,2) on {} points, {} lines: {}",
            hyperbolic.points,
            hyperbolic.lines,
            mark(hyperbolic.passes())
        );
        println!(
            "  cone: {} points, {} generators, {} induced W-lines: {}",
            cone.points,
            cone.generators,
            cone.induced_lines,
            mark(cone.passes())
        );
        println!("  line of the Veldkamp space of W: {}", mark(w_line.passes()));
        ok &= counts == SectorCounts::EXPECTED
            && core.passes()
            && elliptic.passes()
            && hyperbolic.passes()
            && cone.passes()
            && w_line.passes();
        if let Some(path) = dot {
            write(path, &magic_line_dot(v, &m))?;
        }
        lines.push(m);
    }
    if let Some(path) = json {
        write(path, &to_json(&magic_lines_doc(v, &lines)))?;
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
