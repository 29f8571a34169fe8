//! Command-line front end. Every counter in the library is reachable here;
//! output is deterministic so the commands can be golden-file tested.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad n, malformed graph
//! files, ...), 2 on usage errors.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::poly::Poly;
use crate::series::{largest_real_root, trace_gf, CountSeq};
use crate::subsets::{self, Kind};
use crate::{antiprism, silent, walks};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigInt;
use std::ffi::OsString;
use std::fmt::Write as _;

#[derive(Parser)]
#[command(
    name = "tmcount",
    version,
    about = "Exact walk, Hamiltonian-cycle and simple path/cycle counting"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count walks via powers of the adjacency matrix
    Walks {
        #[command(subcommand)]
        cmd: WalksCmd,
    },
    /// Print exact generating functions
    Gf {
        #[command(subcommand)]
        cmd: GfCmd,
    },
    /// Integer-sequence utilities
    Seq {
        #[command(subcommand)]
        cmd: SeqCmd,
    },
    /// Silent configurations of the staring game
    Silent {
        #[command(subcommand)]
        cmd: SilentCmd,
    },
    /// Hamiltonian cycles in antiprism graphs
    Antiprism {
        #[command(subcommand)]
        cmd: AntiprismCmd,
    },
    /// Hamiltonian paths and cycles in arbitrary graphs
    Ham {
        #[command(subcommand)]
        cmd: HamCmd,
    },
    /// Simple paths and cycles of a fixed length
    Simple {
        #[command(subcommand)]
        cmd: SimpleCmd,
    },
    /// Largest real root of an integer polynomial
    Root(RootArgs),
}

#[derive(Args)]
struct GraphArg {
    /// Graph source: `builder:<spec>` or `file:<path>`
    #[arg(long, value_name = "SOURCE")]
    graph: String,
}

impl GraphArg {
    fn load(&self) -> Result<Digraph> {
        if let Some(spec) = self.graph.strip_prefix("builder:") {
            Digraph::build(spec)
        } else if let Some(path) = self.graph.strip_prefix("file:") {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::domain(format!("cannot read `{path}`: {e}")))?;
            Digraph::from_edge_list(&text)
        } else {
            Err(Error::domain(format!(
                "graph source must be `builder:<spec>` or `file:<path>`, got `{}`",
                self.graph
            )))
        }
    }
}

#[derive(Subcommand)]
enum WalksCmd {
    /// Walks of a given length between two nodes
    Count {
        #[command(flatten)]
        graph: GraphArg,
        /// Walk length (number of edges)
        #[arg(long)]
        length: u64,
        /// Start node
        #[arg(long)]
        from: usize,
        /// End node
        #[arg(long)]
        to: usize,
    },
    /// Closed walks of a given length (trace of the matrix power)
    Closed {
        #[command(flatten)]
        graph: GraphArg,
        /// Walk length (number of edges)
        #[arg(long)]
        length: u64,
    },
}

#[derive(Subcommand)]
enum GfCmd {
    /// Generating function of the closed-walk counts of a graph
    Trace {
        #[command(flatten)]
        graph: GraphArg,
    },
}

#[derive(Subcommand)]
enum SeqCmd {
    /// Check a_n = c1 a_(n-1) + ... + cd a_(n-d) on supplied terms
    Check {
        /// Comma-separated sequence terms
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        values: Vec<BigInt>,
        /// Comma-separated recurrence coefficients c1..cd
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        rec: Vec<BigInt>,
        /// First index the recurrence must hold at
        #[arg(long)]
        from: usize,
        /// Index of the first supplied term
        #[arg(long, default_value_t = 0)]
        offset: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Bfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichSeq {
    T,
    S,
}

#[derive(Subcommand)]
enum SilentCmd {
    /// t_n: silent prisms of n partnered pairs
    Prism { n: u64 },
    /// s_n: silent circles of 2n people
    Circle { n: u64 },
    /// Counts and probabilities for n = 2..=MAX
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Which sequence a b-file lists
        #[arg(long, value_enum, default_value_t = WhichSeq::T)]
        seq: WhichSeq,
    },
}

#[derive(Subcommand)]
enum AntiprismCmd {
    /// h_n: directed Hamiltonian cycles in the n-antiprism
    Hc { n: u64 },
    /// h_n for n = 3..=MAX
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Args)]
struct SubsetArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Report the undirected count (half the directed one)
    #[arg(long)]
    undirected: bool,
    /// Worker threads for the subset sum
    #[arg(long, value_name = "WORKERS", default_value_t = 1)]
    parallel: usize,
}

#[derive(Subcommand)]
enum HamCmd {
    /// Hamiltonian paths
    Paths(SubsetArgs),
    /// Hamiltonian cycles
    Cycles(SubsetArgs),
}

#[derive(Args)]
struct SimpleArgs {
    /// Length (number of edges)
    #[arg(short)]
    k: u64,
    #[command(flatten)]
    common: SubsetArgs,
}

#[derive(Subcommand)]
enum SimpleCmd {
    /// Simple paths of length k
    Paths(SimpleArgs),
    /// Simple cycles of length k
    Cycles(SimpleArgs),
}

#[derive(Args)]
struct RootArgs {
    /// Comma-separated coefficients, ascending powers
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    poly: Vec<BigInt>,
    /// Bisection tolerance
    #[arg(long, default_value_t = crate::series::DEFAULT_ROOT_TOL)]
    tol: f64,
}

/// Parses `args` and runs the selected command, printing results to stdout
/// and errors to stderr. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.cmd) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn execute(cmd: Cmd) -> Result<String> {
    match cmd {
        Cmd::Walks { cmd } => match cmd {
            WalksCmd::Count {
                graph,
                length,
                from,
                to,
            } => {
                let g = graph.load()?;
                Ok(format!("{}\n", walks::count_walks(&g, length, from, to)?))
            }
            WalksCmd::Closed { graph, length } => {
                let g = graph.load()?;
                Ok(format!("{}\n", walks::count_closed_walks(&g, length)))
            }
        },
        Cmd::Gf { cmd } => match cmd {
            GfCmd::Trace { graph } => {
                let g = graph.load()?;
                Ok(format!("{}\n", trace_gf(&g.adjacency_matrix())))
            }
        },
        Cmd::Seq { cmd } => match cmd {
            SeqCmd::Check {
                values,
                rec,
                from,
                offset,
            } => {
                let seq = CountSeq::new(offset, values);
                let ok = seq.satisfies_recurrence(&rec, from)?;
                Ok(format!("{ok}\n"))
            }
        },
        Cmd::Silent { cmd } => match cmd {
            SilentCmd::Prism { n } => {
                let t = silent::prism_count(n);
                if n < 3 {
                    Ok(format!("{t} (formal)\n"))
                } else {
                    Ok(format!("{t}\n"))
                }
            }
            SilentCmd::Circle { n } => Ok(format!("{}\n", silent::circle_count(n)?)),
            SilentCmd::Table { max, format, seq } => Ok(silent_table(max, format, seq)),
        },
        Cmd::Antiprism { cmd } => match cmd {
            AntiprismCmd::Hc { n } => Ok(format!("{}\n", antiprism::hc_count(n)?)),
            AntiprismCmd::Table { max, format } => {
                if max < 3 {
                    return Err(Error::domain("antiprism table needs --max >= 3"));
                }
                let seq = antiprism::table(max);
                Ok(match format {
                    Format::Plain => {
                        let mut out = String::new();
                        for (i, h) in seq.values().iter().enumerate() {
                            let _ = writeln!(out, "n={} h={h}", seq.offset() + i);
                        }
                        out
                    }
                    Format::Csv => {
                        let mut out = String::from("n,h\n");
                        for (i, h) in seq.values().iter().enumerate() {
                            let _ = writeln!(out, "{},{h}", seq.offset() + i);
                        }
                        out
                    }
                    Format::Bfile => emit_bfile(&seq),
                })
            }
        },
        Cmd::Ham { cmd } => {
            let (args, kind) = match cmd {
                HamCmd::Paths(a) => (a, Kind::Path),
                HamCmd::Cycles(a) => (a, Kind::Cycle),
            };
            let g = args.load_checked()?;
            let n = g.node_count() as u64;
            let raw = match kind {
                Kind::Path => subsets::hamiltonian_paths_par(&g, args.parallel),
                Kind::Cycle => subsets::hamiltonian_cycles_par(&g, args.parallel),
            };
            let k = match kind {
                Kind::Path => n.saturating_sub(1),
                Kind::Cycle => n,
            };
            args.finish(raw, kind, k)
        }
        Cmd::Simple { cmd } => {
            let (args, kind) = match cmd {
                SimpleCmd::Paths(a) => (a, Kind::Path),
                SimpleCmd::Cycles(a) => (a, Kind::Cycle),
            };
            let g = args.common.load_checked()?;
            let raw = match kind {
                Kind::Path => subsets::simple_paths_par(&g, args.k, args.common.parallel)?,
                Kind::Cycle => subsets::simple_cycles_par(&g, args.k, args.common.parallel)?,
            };
            args.common.finish(raw, kind, args.k)
        }
        Cmd::Root(args) => {
            let p = Poly::new(args.poly);
            let root = largest_real_root(&p, args.tol)?;
            Ok(format!("{root:.6}\n"))
        }
    }
}

impl SubsetArgs {
    fn load_checked(&self) -> Result<Digraph> {
        let g = self.graph.load()?;
        if self.undirected && g.is_directed() {
            return Err(Error::domain(
                "--undirected needs an undirected graph (undirected builder or header)",
            ));
        }
        if self.parallel == 0 {
            return Err(Error::domain("--parallel needs at least one worker"));
        }
        Ok(g)
    }

    fn finish(&self, raw: BigInt, kind: Kind, k: u64) -> Result<String> {
        let value = if self.undirected {
            subsets::undirected_count(&raw, kind, k)?
        } else {
            raw
        };
        Ok(format!("{value}\n"))
    }
}

fn silent_table(max: u64, format: Format, seq: WhichSeq) -> String {
    let rows = silent::table(max);
    match format {
        Format::Plain => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(
                    out,
                    "n={} t={} s={} p_t={} ({}) p_s={} ({})",
                    r.n, r.t, r.s, r.p_t.0, r.p_t.1, r.p_s.0, r.p_s.1
                );
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,t,s,p_t,p_s\n");
            for r in &rows {
                let _ = writeln!(out, "{},{},{},{},{}", r.n, r.t, r.s, r.p_t.1, r.p_s.1);
            }
            out
        }
        Format::Bfile => {
            if rows.is_empty() {
                return String::new();
            }
            let values = rows
                .iter()
                .map(|r| match seq {
                    WhichSeq::T => r.t.clone(),
                    WhichSeq::S => r.s.clone(),
                })
                .collect();
            emit_bfile(&CountSeq::new(2, values))
        }
    }
}

/// Renders a sequence in the OEIS b-file interchange format: one
/// `n a(n)` pair per line, LF-terminated.
pub fn emit_bfile(seq: &CountSeq) -> String {
    let mut out = String::new();
    for (i, v) in seq.values().iter().enumerate() {
        let _ = writeln!(out, "{} {v}", seq.offset() + i);
    }
    out
}
