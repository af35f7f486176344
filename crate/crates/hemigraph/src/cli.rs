//! Command-line interface: build solids, export graphs, compute
//! automorphism groups, run the verification claims and the minimal-graph
//! search.
//!
//! Exit codes: 0 on success (and when every requested verification
//! passes), 1 on runtime or verification failure, 2 on usage errors.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::canon::automorphism_group;
use crate::dot::{dot_export, DotOptions};
use crate::graph::Graph;
use crate::graph6::{graph6_decode, graph6_encode};
use crate::identify::{identify_group, GroupTag};
use crate::incidence::{build_xi, extra_edges, find_wheel, projective_vertex_face_graph, vertex_face_graph};
use crate::musearch::{mu_search_with_progress, GUARANTEED_MAX_N, HARD_MAX_N};
use crate::partition::OrderedPartition;
use crate::polyhedron::{antipodal_pairing, dodecahedron, icosahedron, Polyhedron};
use crate::report::REPORT_SCHEMA;
use crate::verify::{verify_all, verify_prop1, verify_prop2, verify_remarks};

#[derive(Parser)]
#[command(name = "hemigraph", version, about = "projective vertex-face graphs of the icosahedron and their automorphism groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Solid {
    Icosahedron,
    Dodecahedron,
}

impl Solid {
    fn build(self) -> Polyhedron {
        match self {
            Solid::Icosahedron => icosahedron(),
            Solid::Dodecahedron => dodecahedron(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    /// projective vertex-face graph
    Pi,
    /// projective vertex-face graph plus the three wheel chords
    Xi,
    /// vertex-face incidence graph
    Gamma,
    /// 1-skeleton
    Skeleton,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Prop1,
    Prop2,
    Remarks,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build a solid and print its exact data
    Build {
        solid: Solid,
        /// write the JSON vertex/face document to this path ("-" for stdout)
        #[arg(long)]
        json: Option<String>,
    },
    /// Construct a graph from a solid and print it
    Graph {
        kind: GraphKind,
        #[arg(long)]
        solid: Solid,
        /// wheel hub vertex (used by `xi`)
        #[arg(long, default_value_t = 0)]
        hub: usize,
        #[arg(long, value_enum)]
        format: Format,
    },
    /// Read graph6 lines and print automorphism group data
    Aut {
        /// input file, "-" for stdin
        #[arg(default_value = "-")]
        file: String,
    },
    /// Machine-check the symmetry claims
    Verify {
        target: VerifyTarget,
        /// print JSON reports instead of text
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive search for the smallest graph with a given automorphism group
    Search {
        /// target group: trivial, C<k>, D<k>, S3, A4, S4, A5, S5, A5xC2
        #[arg(long)]
        group: String,
        /// largest vertex count to examine
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=HARD_MAX_N as i64))]
        max_n: u8,
        /// allow the slow tier above the guaranteed range
        #[arg(long)]
        stretch: bool,
        /// report enumeration progress on stderr
        #[arg(long)]
        progress: bool,
        /// print the JSON report instead of text
        #[arg(long)]
        json: bool,
    },
}

/// Entry point used by the binary; parses `std::env::args`.
pub fn run() -> i32 {
    run_from(std::env::args())
}

/// Parses the given arguments and runs the command.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<i32, String> {
    match command {
        Command::Build { solid, json } => {
            let p = solid.build();
            println!(
                "vertices: {}, edges: {}, faces: {}",
                p.vertex_count(),
                p.edge_count(),
                p.face_count()
            );
            let pairing = antipodal_pairing(&p).map_err(|e| e.to_string())?;
            println!(
                "antipodal classes: {} vertex, {} face",
                pairing.n_vertex_classes(),
                pairing.n_face_classes()
            );
            if let Some(path) = json {
                let doc = serde_json::to_string_pretty(&p.to_json()).expect("valid JSON");
                if path == "-" {
                    println!("{doc}");
                } else {
                    fs::write(&path, doc + "\n").map_err(|e| format!("writing {path}: {e}"))?;
                }
            }
            Ok(0)
        }
        Command::Graph {
            kind,
            solid,
            hub,
            format,
        } => {
            let p = solid.build();
            let (graph, labels, highlight) = build_graph(kind, &p, hub)?;
            match format {
                Format::G6 => println!("{}", graph6_encode(&graph)),
                Format::Dot => {
                    let opts = DotOptions {
                        labels: labels.as_deref(),
                        highlight: &highlight,
                        graph_name: "G",
                    };
                    print!("{}", dot_export(&graph, &opts));
                }
            }
            Ok(0)
        }
        Command::Aut { file } => {
            let text = read_input(&file)?;
            let mut index = 0usize;
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                index += 1;
                let graph = graph6_decode(line).map_err(|e| format!("line {index}: {e}"))?;
                let aut =
                    automorphism_group(&graph, &OrderedPartition::unit(graph.vertex_count()));
                let tag = identify_group(&aut)
                    .map(|n| n.tag.to_string())
                    .unwrap_or_else(|_| "unknown (too large)".to_string());
                println!(
                    "graph {index}: n={}, edges={}, order {}, {}",
                    graph.vertex_count(),
                    graph.edge_count(),
                    aut.order(),
                    tag
                );
                for gen in aut.generators() {
                    println!("  generator: {gen}");
                }
            }
            Ok(0)
        }
        Command::Verify { target, json } => {
            let reports = match target {
                VerifyTarget::Prop1 => vec![verify_prop1()],
                VerifyTarget::Prop2 => vec![verify_prop2()],
                VerifyTarget::Remarks => vec![verify_remarks()],
                VerifyTarget::All => verify_all(),
            };
            let all_ok = reports.iter().all(|r| r.verified());
            if json {
                let doc = serde_json::json!({
                    "schema": REPORT_SCHEMA,
                    "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                    "all_verified": all_ok,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("valid JSON"));
            } else {
                for report in &reports {
                    print!("{}", report.render_text());
                }
                println!("{}", if all_ok { "all claims verified" } else { "VERIFICATION FAILED" });
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::Search {
            group,
            max_n,
            stretch,
            progress,
            json,
        } => {
            let target = GroupTag::from_str(&group)?;
            let max_n = max_n as usize;
            if max_n > GUARANTEED_MAX_N && !stretch {
                return Err(format!(
                    "--max-n {max_n} is above the guaranteed tier ({GUARANTEED_MAX_N}); pass --stretch to allow it"
                ));
            }
            let mut last_reported = 0u64;
            let mut report_progress = |level: usize, classes: usize, done: u64, total: u64| {
                if progress && (done == total || done >= last_reported + 65536) {
                    last_reported = done;
                    eprintln!("level {level}: {classes} classes, {done}/{total} candidates");
                }
            };
            let report = mu_search_with_progress(&target, max_n, &mut report_progress)
                .map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("valid JSON")
                );
            } else {
                print!("{}", report.render_text());
            }
            Ok(0)
        }
    }
}

type BuiltGraph = (Graph, Option<Vec<String>>, Vec<(usize, usize)>);

fn build_graph(kind: GraphKind, p: &Polyhedron, hub: usize) -> Result<BuiltGraph, String> {
    match kind {
        GraphKind::Skeleton => Ok((p.one_skeleton(), None, vec![])),
        GraphKind::Gamma => {
            let g = vertex_face_graph(p);
            let labels = side_labels(p.vertex_count(), p.face_count());
            Ok((g, Some(labels), vec![]))
        }
        GraphKind::Pi => {
            let (g, pairing) = projective_vertex_face_graph(p).map_err(|e| e.to_string())?;
            let labels = side_labels(pairing.n_vertex_classes(), pairing.n_face_classes());
            Ok((g, Some(labels), vec![]))
        }
        GraphKind::Xi => {
            let (pi, pairing) = projective_vertex_face_graph(p).map_err(|e| e.to_string())?;
            if hub >= p.vertex_count() {
                return Err(format!(
                    "hub {hub} out of range for a solid with {} vertices",
                    p.vertex_count()
                ));
            }
            let wheel = find_wheel(&p.one_skeleton(), &pairing, hub).map_err(|e| e.to_string())?;
            let xi = build_xi(&pi, &pairing, &wheel).map_err(|e| e.to_string())?;
            let chords = extra_edges(&pairing, &wheel);
            let labels = side_labels(pairing.n_vertex_classes(), pairing.n_face_classes());
            Ok((xi, Some(labels), chords.pairs().to_vec()))
        }
    }
}

fn side_labels(n_vertices: usize, n_faces: usize) -> Vec<String> {
    (0..n_vertices)
        .map(|v| format!("v{v}"))
        .chain((0..n_faces).map(|f| format!("f{f}")))
        .collect()
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buffer)
    } else {
        fs::read_to_string(PathBuf::from(path)).map_err(|e| format!("reading {path}: {e}"))
    }
}
