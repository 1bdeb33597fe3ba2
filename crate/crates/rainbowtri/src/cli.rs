//! Command-line front end.
//!
//! Subcommands mirror the library: `check` runs one checker on one graph,
//! `find` lists triangles, `reduce`/`orient`/`assoc` are the constructive
//! transforms, `generate` prints extremal families, and `verify` and
//! `ch-search` drive the harness. Graphs travel as the plain-text format
//! of [`crate::format`], read from a path or from stdin when the path is
//! `-`.
//!
//! Exit codes: 0 success (including a reported conjecture
//! counterexample), 1 condition not met or empty result, 2 usage or input
//! error, 3 a proven statement failed, which means this crate has a bug.
//!
//! Exhaustive `verify` and `ch-search` runs refuse vertex counts above
//! built-in caps; set the environment variable named by
//! [`EXHAUSTIVE_CAP_VAR`] to raise them.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand};

use crate::extremal::{self, Family, GeneratedGraph, GeneratorSpec};
use crate::format::{self, ParsedGraph};
use crate::harness::{self, EnumerationLimits, EnumerationSpec, VerificationReport};
use crate::reductions;
use crate::theorems::{self, Conclusion, TheoremId, TheoremInput, Witness};
use crate::GraphKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_MET: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

/// Environment variable that raises the exhaustive enumeration caps.
pub const EXHAUSTIVE_CAP_VAR: &str = "RAINBOWTRI_EXHAUSTIVE_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "rainbowtri",
    version,
    about = "Rainbow triangles in edge-colored graphs, directed triangles in oriented graphs",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run one checker (t1, t2, cor1, t3, t4, t5, t6, ch) on a graph
    Check {
        /// Which statement to check
        theorem: String,
        /// Input path, or `-` for stdin
        file: String,
    },
    /// List the rainbow or directed triangles of a graph
    Find {
        /// Input path, or `-` for stdin
        file: String,
    },
    /// Delete edges whose color repeats at both endpoints until none is
    /// left, preserving every color degree
    Reduce {
        /// Input path, or `-` for stdin
        file: String,
    },
    /// Orient a reduced colored graph so every arc's color is unique
    /// among the edges at its head
    Orient {
        /// Input path, or `-` for stdin
        file: String,
    },
    /// Build the associated colored graph of an oriented graph
    Assoc {
        /// Input path, or `-` for stdin
        file: String,
    },
    /// Print one instance of a named extremal family
    Generate {
        /// sharp-complete, rainbow-bipartite, oriented-bipartite,
        /// k4-exception, or k4-minus-edge-exception
        family: String,
        /// Vertex count
        n: usize,
        /// Seed the arc coin flips of oriented-bipartite; without it
        /// every arc runs low side to high side
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Tally one checker over every instance of a size, or over a random
    /// stream
    Verify {
        /// Which statement to check
        theorem: String,
        /// Vertex count of the instances
        #[arg(long)]
        n: usize,
        /// Walk every instance of the size (the default mode)
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Check a seeded random stream of this many instances instead
        #[arg(long)]
        samples: Option<u64>,
        /// Seed for the random stream (default 0)
        #[arg(long, requires = "samples")]
        seed: Option<u64>,
        /// Relabel each sampled graph's colors by first appearance
        /// before checking
        #[arg(long, requires = "samples")]
        canonicalize: bool,
        /// Print tab-separated records instead of the text block
        #[arg(long)]
        records: bool,
    },
    /// Check the minimum in-degree conjecture on every oriented graph up
    /// to a size, reporting any counterexample
    ChSearch {
        /// Largest vertex count to search
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// Print tab-separated records instead of the text block
        #[arg(long)]
        records: bool,
    },
}

/// Runs the CLI against the process's real stdin, stdout, and stderr.
/// `args` excludes the program name.
pub fn run(args: &[String]) -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut stdin = stdin.lock();
    let mut stdout = stdout.lock();
    let mut stderr = stderr.lock();
    let arg_refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
    run_with_io(&arg_refs, &mut stdin, &mut stdout, &mut stderr)
}

/// Runs the CLI against caller-supplied streams and returns the exit
/// code. `args` excludes the program name.
pub fn run_with_io(
    args: &[&str],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let argv = std::iter::once("rainbowtri").chain(args.iter().copied());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                // --help and --version land here
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    match cli.command {
        Cmd::Check { theorem, file } => cmd_check(&theorem, &file, stdin, stdout, stderr),
        Cmd::Find { file } => cmd_find(&file, stdin, stdout, stderr),
        Cmd::Reduce { file } => cmd_reduce(&file, stdin, stdout, stderr),
        Cmd::Orient { file } => cmd_orient(&file, stdin, stdout, stderr),
        Cmd::Assoc { file } => cmd_assoc(&file, stdin, stdout, stderr),
        Cmd::Generate { family, n, seed } => cmd_generate(&family, n, seed, stdout, stderr),
        Cmd::Verify {
            theorem,
            n,
            exhaustive: _,
            samples,
            seed,
            canonicalize,
            records,
        } => cmd_verify(&theorem, n, samples, seed, canonicalize, records, stdout, stderr),
        Cmd::ChSearch { n_max, records } => cmd_ch_search(n_max, records, stdout, stderr),
    }
}

fn fail(stderr: &mut dyn Write, message: impl std::fmt::Display) -> i32 {
    let _ = writeln!(stderr, "error: {message}");
    EXIT_USAGE
}

fn read_graph(
    file: &str,
    stdin: &mut dyn BufRead,
    stderr: &mut dyn Write,
) -> Result<ParsedGraph, i32> {
    let text = if file == "-" {
        let mut buf = String::new();
        if let Err(e) = stdin.read_to_string(&mut buf) {
            return Err(fail(stderr, format_args!("cannot read stdin: {e}")));
        }
        buf
    } else {
        match std::fs::read_to_string(file) {
            Ok(text) => text,
            Err(e) => return Err(fail(stderr, format_args!("cannot read {file}: {e}"))),
        }
    };
    format::parse(&text).map_err(|e| fail(stderr, format_args!("{file}: {e}")))
}

fn cmd_check(
    theorem: &str,
    file: &str,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let theorem: TheoremId = match theorem.parse() {
        Ok(t) => t,
        Err(e) => return fail(stderr, e),
    };
    let graph = match read_graph(file, stdin, stderr) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let input = match &graph {
        ParsedGraph::Colored(g) => TheoremInput::Colored(g),
        ParsedGraph::Oriented(d) => TheoremInput::Oriented(d),
    };
    let verdict = match theorems::check(theorem, input) {
        Ok(v) => v,
        Err(e) => return fail(stderr, e),
    };
    let _ = write!(stdout, "{verdict}");
    match &verdict.witness {
        Some(Witness::ColoredInstance(g)) => {
            let _ = write!(stdout, "{}", format::serialize_colored(g));
        }
        Some(Witness::OrientedInstance(d)) => {
            let _ = write!(stdout, "{}", format::serialize_oriented(d));
        }
        _ => {}
    }
    if verdict.conclusion == Conclusion::Violation {
        EXIT_VIOLATION
    } else if !verdict.condition_met {
        EXIT_NOT_MET
    } else {
        EXIT_OK
    }
}

fn cmd_find(
    file: &str,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let graph = match read_graph(file, stdin, stderr) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let (label, triangles) = match &graph {
        ParsedGraph::Colored(g) => ("rainbow triangles", g.rainbow_triangles()),
        ParsedGraph::Oriented(d) => ("directed triangles", d.directed_triangles()),
    };
    let _ = writeln!(stdout, "{label}: {}", triangles.len());
    for [a, b, c] in triangles.iter() {
        let _ = writeln!(stdout, "{a} {b} {c}");
    }
    if triangles.is_empty() {
        EXIT_NOT_MET
    } else {
        EXIT_OK
    }
}

fn require_colored(
    graph: ParsedGraph,
    verb: &str,
    stderr: &mut dyn Write,
) -> Result<crate::ColoredGraph, i32> {
    match graph {
        ParsedGraph::Colored(g) => Ok(g),
        ParsedGraph::Oriented(_) => Err(fail(
            stderr,
            format_args!("{verb} needs an edge-colored graph (`ecg` input)"),
        )),
    }
}

fn cmd_reduce(
    file: &str,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let graph = match read_graph(file, stdin, stderr).and_then(|g| require_colored(g, "reduce", stderr)) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let reduced = reductions::color_degree_preserving_reduction(&graph);
    let _ = write!(stdout, "{}", format::serialize_colored(&reduced));
    EXIT_OK
}

fn cmd_orient(
    file: &str,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let graph = match read_graph(file, stdin, stderr).and_then(|g| require_colored(g, "orient", stderr)) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match reductions::orient(&graph) {
        Ok(result) => {
            let _ = write!(stdout, "{}", format::serialize_oriented(&result.digraph));
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}; run reduce first");
            EXIT_NOT_MET
        }
    }
}

fn cmd_assoc(
    file: &str,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let graph = match read_graph(file, stdin, stderr) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let digraph = match graph {
        ParsedGraph::Oriented(d) => d,
        ParsedGraph::Colored(_) => {
            return fail(stderr, "assoc needs an oriented graph (`dig` input)")
        }
    };
    let assoc = reductions::associated_colored_graph(&digraph);
    let _ = write!(stdout, "{}", format::serialize_colored(&assoc.graph));
    for (color, origin) in &assoc.color_origin {
        let _ = writeln!(
            stdout,
            "# color {color}: tail {} component {}",
            origin.tail, origin.component
        );
    }
    EXIT_OK
}

fn cmd_generate(
    family: &str,
    n: usize,
    seed: Option<u64>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let family: Family = match family.parse() {
        Ok(f) => f,
        Err(e) => return fail(stderr, e),
    };
    let spec = GeneratorSpec {
        family,
        n,
        orientation_seed: seed,
    };
    match extremal::generate(spec) {
        Ok(GeneratedGraph::Colored(g)) => {
            let _ = write!(stdout, "{}", format::serialize_colored(&g));
            EXIT_OK
        }
        Ok(GeneratedGraph::Oriented(d)) => {
            let _ = write!(stdout, "{}", format::serialize_oriented(&d));
            EXIT_OK
        }
        Err(e) => fail(stderr, e),
    }
}

fn limits_from_env(stderr: &mut dyn Write) -> Result<EnumerationLimits, i32> {
    match std::env::var(EXHAUSTIVE_CAP_VAR) {
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(cap) => Ok(EnumerationLimits::with_cap(cap)),
            Err(_) => Err(fail(
                stderr,
                format_args!("{EXHAUSTIVE_CAP_VAR} must be a whole number, got `{raw}`"),
            )),
        },
        Err(std::env::VarError::NotPresent) => Ok(EnumerationLimits::default()),
        Err(e) => Err(fail(stderr, format_args!("{EXHAUSTIVE_CAP_VAR}: {e}"))),
    }
}

fn emit_report(report: &VerificationReport, records: bool, stdout: &mut dyn Write) -> i32 {
    let rendered = if records {
        report.render_records()
    } else {
        report.render_text()
    };
    let _ = write!(stdout, "{rendered}");
    if report.violation_count() > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    theorem: &str,
    n: usize,
    samples: Option<u64>,
    seed: Option<u64>,
    canonicalize: bool,
    records: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let theorem: TheoremId = match theorem.parse() {
        Ok(t) => t,
        Err(e) => return fail(stderr, e),
    };
    let limits = match limits_from_env(stderr) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let spec = match samples {
        Some(samples) => {
            let seed = seed.unwrap_or(0);
            match theorem.kind() {
                GraphKind::Colored => EnumerationSpec::RandomColored {
                    n,
                    samples,
                    seed,
                    canonicalize,
                },
                GraphKind::Oriented => {
                    if canonicalize {
                        return fail(stderr, "--canonicalize only applies to colored statements");
                    }
                    EnumerationSpec::RandomOriented { n, samples, seed }
                }
            }
        }
        None => match theorem.kind() {
            GraphKind::Colored => EnumerationSpec::AllColoredGraphs { n },
            GraphKind::Oriented => EnumerationSpec::AllOrientedGraphs { n },
        },
    };
    match harness::verify(&spec, theorem, limits) {
        Ok(report) => emit_report(&report, records, stdout),
        Err(e) => fail(stderr, e),
    }
}

fn cmd_ch_search(n_max: usize, records: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let limits = match limits_from_env(stderr) {
        Ok(l) => l,
        Err(code) => return code,
    };
    match harness::search_ch_counterexample(n_max, limits) {
        // a found counterexample is a successful search, still exit 0
        Ok(report) => emit_report(&report, records, stdout),
        Err(e) => fail(stderr, e),
    }
}
