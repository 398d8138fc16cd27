use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use gendist::distance::{is_largely_embeddable, WitnessKind};
use gendist::monounary::{canonical_code, core_of, is_isomorphic, parse_mua};
use gendist::network::{build_monounary_network, build_subalgebra_network, builtin, parse_fa, MONOUNARY_CAP_LIMIT};
use gendist::qz::{parse_choice_seq, qz_diameter, qz_distance};
use gendist::MonoAlg;

/// Generator distances between finite algebras.
#[derive(Parser)]
#[command(name = "gendist", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generator distance between two monounary algebras
    Dist { a: PathBuf, b: PathBuf },
    /// The same distance found by search in the network of small algebras
    OracleDist {
        a: PathBuf,
        b: PathBuf,
        /// Largest algebra allowed on a path (default |A| + |B|)
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Size of a minimal generating set
    Mgen { a: PathBuf },
    /// Core cycle of each connected component
    Core { a: PathBuf },
    /// Canonical code, equal for isomorphic algebras
    Canon { a: PathBuf },
    /// Whether two algebras are isomorphic
    Iso { a: PathBuf, b: PathBuf },
    /// Elements of each connected component
    Components { a: PathBuf },
    /// Whether A is isomorphic to a large subalgebra of B
    Large { a: PathBuf, b: PathBuf },
    /// Subalgebra network of a finite algebra
    Net(NetArgs),
    /// Subgroups of Q/Z given by choice sequences
    Qz {
        #[command(subcommand)]
        command: QzCommand,
    },
}

#[derive(Args)]
struct NetArgs {
    /// Algebra in .fa format
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    file: Option<PathBuf>,
    /// A built-in algebra: sym:N, alt:N, bool:K or cyclic:N
    #[arg(long)]
    builtin: Option<String>,
    /// Also write the network in DOT format
    #[arg(long, value_name = "OUT")]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum QzCommand {
    Dist {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    Diam { spec: String },
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_mua(path: &Path) -> Result<MonoAlg, String> {
    parse_mua(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(command: Command) -> Result<String, String> {
    let mut out = String::new();
    match command {
        Command::Dist { a, b } => {
            let (a, b) = (load_mua(&a)?, load_mua(&b)?);
            writeln!(out, "{}", gendist::distance(&a, &b)).unwrap();
        }
        Command::OracleDist { a, b, cap } => {
            let (a, b) = (load_mua(&a)?, load_mua(&b)?);
            let cap = cap.unwrap_or(a.len() + b.len());
            if cap > MONOUNARY_CAP_LIMIT {
                return Err(format!("cap {cap} exceeds the limit of {MONOUNARY_CAP_LIMIT}"));
            }
            let net = build_monounary_network(cap).map_err(|e| e.to_string())?;
            writeln!(out, "{}", net.distance(&a, &b).map_err(|e| e.to_string())?).unwrap();
        }
        Command::Mgen { a } => writeln!(out, "{}", load_mua(&a)?.mgen()).unwrap(),
        Command::Core { a } => {
            let a = load_mua(&a)?;
            for c in a.components() {
                let cycle = core_of(&c).cycle;
                writeln!(out, "{}: {}", cycle.len(), join(&cycle)).unwrap();
            }
        }
        Command::Canon { a } => writeln!(out, "{}", canonical_code(&load_mua(&a)?)).unwrap(),
        Command::Iso { a, b } => writeln!(out, "{}", is_isomorphic(&load_mua(&a)?, &load_mua(&b)?)).unwrap(),
        Command::Components { a } => {
            for c in load_mua(&a)?.components() {
                writeln!(out, "{}", join(c.elements())).unwrap();
            }
        }
        Command::Large { a, b } => match is_largely_embeddable(&load_mua(&a)?, &load_mua(&b)?) {
            None => out.push_str("NO\n"),
            Some(w) => {
                let kind = match w.kind {
                    WitnessKind::DisjointMpl { cycle, tail } => format!("disjoint cycle={cycle} tail={tail}"),
                    WitnessKind::Tail { at, length } => format!("tail at={at} length={length}"),
                };
                writeln!(out, "YES {kind} generator={}", w.generator).unwrap();
            }
        },
        Command::Net(args) => {
            let fa = match (&args.file, &args.builtin) {
                (Some(path), _) => parse_fa(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?,
                (None, Some(spec)) => builtin(spec).map_err(|e| e.to_string())?,
                (None, None) => unreachable!("clap requires a source"),
            };
            let net = build_subalgebra_network(&fa);
            let g = &net.network;
            writeln!(out, "vertices {}", g.vertex_count()).unwrap();
            writeln!(out, "red {}", g.red_count()).unwrap();
            writeln!(out, "blue {}", g.blue_count()).unwrap();
            writeln!(out, "vertex\tsize\tclass\tlarge\telements").unwrap();
            for (v, sub) in net.vertices.iter().enumerate() {
                let names: Vec<String> = sub.elements().iter().map(|&x| fa.name(x)).collect();
                let large = if net.large_in_top(v) { "YES" } else { "NO" };
                writeln!(out, "{v}\t{}\t{}\t{large}\t{{{}}}", sub.len(), net.classes[v], names.join(",")).unwrap();
            }
            if let Some(path) = &args.dot {
                fs::write(path, g.export_dot()).map_err(|e| format!("{}: {e}", path.display()))?;
            }
        }
        Command::Qz { command } => {
            let seq = |s: &str| parse_choice_seq(s).map_err(|e| format!("`{s}`: {e}"));
            match command {
                QzCommand::Dist { left, right } => {
                    writeln!(out, "{}", qz_distance(&seq(&left)?, &seq(&right)?)).unwrap()
                }
                QzCommand::Diam { spec } => writeln!(out, "{}", qz_diameter(&seq(&spec)?)).unwrap(),
            }
        }
    }
    Ok(out)
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
