//! The `emulkit` command line.
//!
//! Reports are `key: value` lines on standard output. Exit codes: `0` for a
//! positive verdict or a finished job, `1` for a negative verdict or a failed
//! search, `2` for bad usage or unreadable input.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::Catalog;
use crate::constructions::{self, Construction};
use crate::dot::export_dot;
use crate::emulator::{self, verify, Kind, Projection};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::obstructions::{find_nonflat_3_separation, find_two_disjoint_kgraphs, internal_4_connectivity};
use crate::planarity::{test_planarity, Embedding, Planarity};

/// Search budget when `EMUL_BUDGET` is unset.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Host sizes of the published emulators accepted by `verify --expect-size`.
pub const REFERENCE_SIZES: [(&str, usize); 3] = [("d3", 126), ("e5", 138), ("f1", 142)];

#[derive(Parser, Debug)]
#[command(name = "emulkit", version, about = "Planar emulators and covers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Emulator,
    Cover,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a projection given as host, target and mapping files.
    Verify {
        host: PathBuf,
        target: PathBuf,
        map: PathBuf,
        #[arg(long, value_enum, default_value = "emulator")]
        kind: KindArg,
        /// Expected host order: a number, or one of d3, e5, f1.
        #[arg(long)]
        expect_size: Option<String>,
    },
    /// Rebuild a known emulator and write it to a directory.
    Construct {
        name: String,
        #[arg(long)]
        out_dir: PathBuf,
        /// Extra reference graphs for identifying b7, c3 and d2.
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// Apply a target operation to an emulator and lift it to the host.
    Transform {
        host: PathBuf,
        target: PathBuf,
        map: PathBuf,
        /// delete-vertex V | delete-edge A B | contract A B | yd V
        op: String,
        args: Vec<String>,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Planarity, internal 4-connectivity and obstruction search.
    Analyze {
        graph: PathBuf,
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// Print a planar rotation system, or a Kuratowski witness.
    Embed {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List, show or identify catalog graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
        #[arg(long, global = true)]
        reference: Option<PathBuf>,
    },
    /// Write DOT, colouring fibers when target and mapping are given.
    ExportDot {
        graph: PathBuf,
        #[arg(long, requires = "map")]
        target: Option<PathBuf>,
        #[arg(long, requires = "target")]
        map: Option<PathBuf>,
        /// Keep the rotation system of a planar graph as comments.
        #[arg(long)]
        embedding: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show { name: String },
    Identify { graph: PathBuf },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidInput(_)
            | Error::UnknownName(_)
            | Error::DuplicateName(_)
            | Error::UnknownVertex(_)
            | Error::UnknownEdge(_, _)
            | Error::DuplicateVertex(_)
            | Error::SelfLoop(_)
            | Error::DegreeMismatch { .. }
            | Error::NotATriangle(_)
            | Error::NotIndependent(_, _)
            | Error::CorruptRotation(_)
            | Error::DisconnectedTarget => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type Run = std::result::Result<(bool, String), Failure>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((ok, stdout)) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(m)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Failed(m)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
    }
}

/// `EMUL_BUDGET` or [`DEFAULT_BUDGET`].
pub fn budget() -> Result<u64> {
    match std::env::var("EMUL_BUDGET") {
        Err(_) => Ok(DEFAULT_BUDGET),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("EMUL_BUDGET must be a node count, found `{s}`"))),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        e => e,
    }
}

fn read_projection(host: &Path, target: &Path, map: &Path) -> Result<Projection> {
    let (h, t) = (read_graph(host)?, read_graph(target)?);
    Projection::parse(&h.to_text(), &t.to_text(), &read(map)?).map_err(|e| in_file(map, e))
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let io = |e: std::io::Error| Error::InvalidInput(format!("{}: {e}", path.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn catalog_with(reference: Option<&Path>) -> Result<Catalog> {
    let mut c = Catalog::builtin();
    if let Some(p) = reference {
        c.load_reference_file(p)?;
    }
    Ok(c)
}

fn write_projection(dir: &Path, p: &Projection, emb: Option<&Embedding>) -> Result<()> {
    write_atomic(&dir.join("host.graph"), &p.host().to_text())?;
    write_atomic(&dir.join("target.graph"), &p.target().to_text())?;
    write_atomic(&dir.join("map.txt"), &p.map_text())?;
    if let Some(e) = emb {
        write_atomic(&dir.join("host.rot"), &e.to_text())?;
    }
    write_atomic(&dir.join("host.dot"), &export_dot(p.host(), emb, Some(p)))
}

fn summary(out: &mut String, p: &Projection) {
    let _ = writeln!(out, "host_vertices: {}", p.host().order());
    let _ = writeln!(out, "host_edges: {}", p.host().size());
    let _ = writeln!(out, "target_vertices: {}", p.target().order());
    let _ = writeln!(out, "target_edges: {}", p.target().size());
    let sizes: Vec<String> = p.fiber_sizes().iter().map(|(t, n)| format!("{t}={n}")).collect();
    let _ = writeln!(out, "fiber_sizes: {}", sizes.join(" "));
}

fn dispatch(cmd: Command) -> Run {
    let mut out = String::new();
    match cmd {
        Command::Verify {
            host,
            target,
            map,
            kind,
            expect_size,
        } => {
            let p = read_projection(&host, &target, &map)?;
            let kind = match kind {
                KindArg::Emulator => Kind::Emulator,
                KindArg::Cover => Kind::Cover,
            };
            let report = verify(&p, kind);
            let planar = test_planarity(p.host()).is_planar();
            let _ = writeln!(out, "kind: {kind}");
            let _ = writeln!(out, "valid: {}", report.valid);
            let _ = writeln!(out, "host_planar: {planar}");
            summary(&mut out, &p);
            let _ = writeln!(out, "violations: {}", report.violations.len());
            for v in &report.violations {
                let _ = writeln!(out, "violation: {v}");
            }
            let mut ok = report.valid;
            if let Some(want) = expect_size {
                let n = match REFERENCE_SIZES.iter().find(|(k, _)| k.eq_ignore_ascii_case(&want)) {
                    Some(&(_, n)) => n,
                    None => want
                        .parse()
                        .map_err(|_| Failure::Usage(format!("bad --expect-size `{want}`")))?,
                };
                let matches = p.host().order() == n;
                let _ = writeln!(out, "expected_size: {n}");
                let _ = writeln!(out, "size_matches: {matches}");
                ok &= matches;
            }
            Ok((ok, out))
        }
        Command::Construct {
            name,
            out_dir,
            reference,
        } => {
            let catalog = catalog_with(reference.as_deref())?;
            eprintln!("building {name}");
            let Construction { projection, embedding } = constructions::build(&name, &catalog)?;
            write_projection(&out_dir, &projection, Some(&embedding))?;
            let _ = writeln!(out, "construction: {name}");
            let _ = writeln!(out, "valid: true");
            summary(&mut out, &projection);
            let _ = writeln!(out, "out_dir: {}", out_dir.display());
            Ok((true, out))
        }
        Command::Transform {
            host,
            target,
            map,
            op,
            args,
            out_dir,
        } => {
            let p = read_projection(&host, &target, &map)?;
            let arity = |n: usize| -> std::result::Result<(), Failure> {
                if args.len() == n {
                    Ok(())
                } else {
                    Err(Failure::Usage(format!("`{op}` takes {n} vertex argument(s)")))
                }
            };
            let q = match op.as_str() {
                "delete-vertex" => {
                    arity(1)?;
                    emulator::lift_delete_vertex(&p, &args[0])?
                }
                "delete-edge" => {
                    arity(2)?;
                    emulator::lift_delete_edge(&p, &args[0], &args[1])?
                }
                "contract" => {
                    arity(2)?;
                    emulator::lift_contract_edge(&p, &args[0], &args[1])?
                }
                "yd" => {
                    arity(1)?;
                    let emb = test_planarity(p.host())
                        .embedding()
                        .ok_or_else(|| Failure::Failed("host is nonplanar; YΔ lifting needs an embedding".into()))?;
                    emulator::lift_yd(&p, &args[0], &emb)?
                }
                _ => return Err(Failure::Usage(format!("unknown operation `{op}`"))),
            };
            let emb = test_planarity(q.host()).embedding();
            write_projection(&out_dir, &q, emb.as_ref())?;
            let _ = writeln!(out, "operation: {op} {}", args.join(" "));
            let _ = writeln!(out, "valid: true");
            let _ = writeln!(out, "host_planar: {}", emb.is_some());
            summary(&mut out, &q);
            Ok((true, out))
        }
        Command::Analyze { graph, reference } => {
            let g = read_graph(&graph)?;
            let catalog = catalog_with(reference.as_deref())?;
            let planar = test_planarity(&g).is_planar();
            let _ = writeln!(out, "vertices: {}", g.order());
            let _ = writeln!(out, "edges: {}", g.size());
            let _ = writeln!(out, "connected: {}", g.is_connected());
            let _ = writeln!(out, "planar: {planar}");
            let _ = writeln!(out, "catalog: {}", catalog.identify(&g).unwrap_or("unknown"));
            let i4c = internal_4_connectivity(&g);
            let _ = writeln!(out, "internally_4_connected: {}", i4c.holds);
            if let Some(s) = &i4c.violation {
                let _ = writeln!(out, "i4c_violation: {}", s.describe(&g));
            }
            match find_nonflat_3_separation(&g) {
                Some(s) => {
                    let _ = writeln!(out, "nonflat_3_separation: {}", s.describe(&g));
                }
                None => {
                    let _ = writeln!(out, "nonflat_3_separation: none");
                }
            }
            let pair = if g.order() > 40 {
                "skipped (more than 40 vertices)".to_string()
            } else {
                match find_two_disjoint_kgraphs(&g, budget()?)? {
                    None => "none".into(),
                    Some(pair) => {
                        let side = |k: &crate::obstructions::KGraph| {
                            let names: Vec<&str> = k.vertices.iter().map(|&v| g.label(v)).collect();
                            format!("{}[{}]", k.kind, names.join(","))
                        };
                        format!("{} {}", side(&pair.j1), side(&pair.j2))
                    }
                }
            };
            let _ = writeln!(out, "disjoint_k_graphs: {pair}");
            Ok((true, out))
        }
        Command::Embed { graph, out: path } => {
            let g = read_graph(&graph)?;
            match test_planarity(&g) {
                Planarity::Planar(e) => {
                    let faces = e.faces()?.len();
                    let _ = writeln!(out, "planar: true");
                    let _ = writeln!(out, "faces: {faces}");
                    match path {
                        Some(p) => {
                            write_atomic(&p, &e.to_text())?;
                            let _ = writeln!(out, "rotation_file: {}", p.display());
                        }
                        None => out.push_str(&e.to_text()),
                    }
                    Ok((true, out))
                }
                Planarity::NonPlanar(w) => {
                    let _ = writeln!(out, "planar: false");
                    let _ = writeln!(out, "witness: {}", w.kind);
                    for (u, v) in &w.edges {
                        let _ = writeln!(out, "witness_edge: {} {}", g.label(*u), g.label(*v));
                    }
                    Ok((false, out))
                }
            }
        }
        Command::Catalog { action, reference } => {
            let catalog = catalog_with(reference.as_deref())?;
            match action {
                CatalogAction::List => {
                    for e in catalog.entries() {
                        let _ = writeln!(
                            out,
                            "entry: {} vertices={} edges={} {}",
                            e.name,
                            e.graph.order(),
                            e.graph.size(),
                            e.flags
                        );
                    }
                    Ok((true, out))
                }
                CatalogAction::Show { name } => {
                    out.push_str(&catalog.get(&name)?.to_text());
                    Ok((true, out))
                }
                CatalogAction::Identify { graph } => {
                    let g = read_graph(&graph)?;
                    let name = catalog.identify(&g);
                    let _ = writeln!(out, "identified: {}", name.unwrap_or("unknown"));
                    Ok((name.is_some(), out))
                }
            }
        }
        Command::ExportDot {
            graph,
            target,
            map,
            embedding,
            out: path,
        } => {
            let g = read_graph(&graph)?;
            let p = match (target, map) {
                (Some(t), Some(m)) => Some(read_projection(&graph, &t, &m)?),
                _ => None,
            };
            let emb = if embedding {
                test_planarity(&g).embedding()
            } else {
                None
            };
            let dot = export_dot(&g, emb.as_ref(), p.as_ref());
            match path {
                Some(p) => {
                    write_atomic(&p, &dot)?;
                    let _ = writeln!(out, "dot_file: {}", p.display());
                }
                None => out.push_str(&dot),
            }
            Ok((true, out))
        }
    }
}
