//! `genbell`: tables, enumerations, bijection transforms, and verification
//! suites for generalized Bell and Stirling numbers.
//!
//! Exit codes: 0 success, 1 failed check or rejected data, 2 bad
//! configuration (arguments, fixture setup, output destinations).

mod render;
mod verify;

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use genbell::{
    bell_mm, colouring_to_digraph, digraph_to_colouring, for_each_colouring,
    for_each_colouring_any_k, for_each_digraph, CliqueFamily, Colouring,
    LabelledEulerianDigraph, Natural, Triangle,
};
use render::{colouring_line, digraph_line, render_bell, render_table, OutputFormat};
use verify::Check;

#[derive(Parser)]
#[command(
    name = "genbell",
    version,
    about = "Exact generalized Bell and Stirling numbers: tables, colouring and digraph enumeration, the bijection between them, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the triangle S_{r,s}(n,k) for n = 1..=N
    Table {
        /// Rank r of the family (r >= s)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        /// Rank s of the family
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        /// Last row to print
        #[arg(long = "n-max", value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the Bell sequence B_{m,m}(n) for n = 1..=N
    Bell {
        /// Clique size m of the uniform family
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long = "n-max", value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Stream every canonical colouring or digraph of a clique family
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        /// Comma-separated clique sizes, e.g. 3,3
        #[arg(long, value_delimiter = ',', required = true,
              value_parser = clap::value_parser!(u32).range(1..))]
        cliques: Vec<u32>,
        /// Keep only colourings with k blocks / digraphs with k vertices
        #[arg(long)]
        k: Option<u32>,
        /// text, json (one object per line), or dot (digraphs only)
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// File to write; for dot output, a directory of one file per digraph
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Map a colouring to its digraph or back (JSON in, JSON out)
    Bijection {
        #[arg(value_enum)]
        direction: Direction,
        /// Comma-separated clique sizes the object lives over
        #[arg(long, value_delimiter = ',', required = true,
              value_parser = clap::value_parser!(u32).range(1..))]
        cliques: Vec<u32>,
        /// JSON file to read; stdin when absent
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite; exit 0 iff every check passes
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Directory of committed .seq fixtures
        #[arg(long, default_value = "fixtures")]
        fixtures: PathBuf,
        /// Conjecture range for the oeis suite
        #[arg(long = "n-max", default_value_t = 10,
              value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        /// Largest family size total for the bijection suite
        #[arg(long = "max-sum", default_value_t = 8,
              value_parser = clap::value_parser!(u32).range(1..))]
        max_sum: u32,
        /// text or json report
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Colourings,
    Digraphs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    ToDigraph,
    ToColouring,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Tables,
    Oeis,
    Bijection,
    All,
}

/// A terminal failure: what to print and which exit code to use.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    /// A closed pipe on the consumer side ends the stream, not the program.
    fn from_io(e: io::Error) -> Failure {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure {
                code: 0,
                message: String::new(),
            }
        } else {
            Failure::config(format!("write failed: {e}"))
        }
    }
}

impl From<genbell::Error> for Failure {
    fn from(e: genbell::Error) -> Failure {
        use genbell::Error::*;
        let code = match e {
            // misconfiguration: arguments or fixture installation
            RankOrder { .. } | BadFamily | FixtureDir(..) | FixtureParse { .. }
            | DuplicateFixture(..) | MissingFixture(..) => 2,
            // rejected data or violated invariants
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn sink(output: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    match output {
        None => Ok(Box::new(io::stdout().lock())),
        Some(path) => {
            let file = fs::File::create(path)
                .map_err(|e| Failure::config(format!("cannot write {}: {e}", path.display())))?;
            Ok(Box::new(BufWriter::new(file)))
        }
    }
}

fn emit(output: Option<&Path>, content: &str) -> Result<(), Failure> {
    let mut w = sink(output)?;
    w.write_all(content.as_bytes())
        .and_then(|()| w.flush())
        .map_err(Failure::from_io)
}

fn dispatch(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Table {
            r,
            s,
            n_max,
            format,
            output,
        } => {
            let triangle = Triangle::gen_stirling(r, s, n_max)?;
            let rendered = render_table(&triangle, format).map_err(Failure::config)?;
            emit(output.as_deref(), &rendered)?;
            Ok(0)
        }
        Command::Bell {
            m,
            n_max,
            format,
            output,
        } => {
            let values: Vec<Natural> = (1..=n_max).map(|n| bell_mm(m, n)).collect();
            let rendered = render_bell(m, &values, format).map_err(Failure::config)?;
            emit(output.as_deref(), &rendered)?;
            Ok(0)
        }
        Command::Enumerate {
            kind,
            cliques,
            k,
            format,
            output,
        } => cmd_enumerate(kind, &cliques, k, format, output.as_deref()),
        Command::Bijection {
            direction,
            cliques,
            input,
            output,
        } => cmd_bijection(direction, &cliques, input.as_deref(), output.as_deref()),
        Command::Verify {
            suite,
            fixtures,
            n_max,
            max_sum,
            format,
            output,
        } => cmd_verify(suite, &fixtures, n_max, max_sum, format, output.as_deref()),
    }
}

fn cmd_enumerate(
    kind: Kind,
    cliques: &[u32],
    k: Option<u32>,
    format: OutputFormat,
    output: Option<&Path>,
) -> Result<u8, Failure> {
    let family = CliqueFamily::new(cliques.to_vec())?;
    match kind {
        Kind::Colourings => {
            // validate the format once, before streaming
            let probe = Colouring::new(vec![]);
            colouring_line(&probe, format).map_err(Failure::config)?;
            let mut w = sink(output)?;
            let mut failed: Option<io::Error> = None;
            let mut write_one = |c: &Colouring| {
                if failed.is_some() {
                    return;
                }
                let line = colouring_line(c, format).expect("format validated");
                if let Err(e) = w.write_all(line.as_bytes()) {
                    failed = Some(e);
                }
            };
            match k {
                Some(k) => for_each_colouring(&family, k, &mut write_one),
                None => for_each_colouring_any_k(&family, &mut write_one),
            }
            if let Some(e) = failed {
                return Err(Failure::from_io(e));
            }
            w.flush()
                .map_err(Failure::from_io)?;
            Ok(0)
        }
        Kind::Digraphs if format == OutputFormat::Dot && output.is_some() => {
            let dir = output.expect("checked");
            fs::create_dir_all(dir)
                .map_err(|e| Failure::config(format!("cannot create {}: {e}", dir.display())))?;
            let mut failed: Option<Failure> = None;
            let mut index = 0u32;
            for_each_digraph(&family, |d| {
                if failed.is_some() || k.is_some_and(|k| d.vertex_count != k) {
                    return;
                }
                index += 1;
                let path = dir.join(format!("digraph-{index:04}.dot"));
                if let Err(e) = fs::write(&path, d.to_dot()) {
                    failed = Some(Failure::config(format!(
                        "cannot write {}: {e}",
                        path.display()
                    )));
                }
            });
            if let Some(f) = failed {
                return Err(f);
            }
            Ok(0)
        }
        Kind::Digraphs => {
            let probe = LabelledEulerianDigraph::new(1, vec![vec![genbell::Edge::new(1, 1)]]);
            digraph_line(&probe, format).map_err(Failure::config)?;
            let mut w = sink(output)?;
            let mut failed: Option<io::Error> = None;
            for_each_digraph(&family, |d| {
                if failed.is_some() || k.is_some_and(|k| d.vertex_count != k) {
                    return;
                }
                let body = digraph_line(d, format).expect("format validated");
                if let Err(e) = w.write_all(body.as_bytes()) {
                    failed = Some(e);
                }
            });
            if let Some(e) = failed {
                return Err(Failure::from_io(e));
            }
            w.flush()
                .map_err(Failure::from_io)?;
            Ok(0)
        }
    }
}

fn cmd_bijection(
    direction: Direction,
    cliques: &[u32],
    input: Option<&Path>,
    output: Option<&Path>,
) -> Result<u8, Failure> {
    let family = CliqueFamily::new(cliques.to_vec())?;
    let text = match input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::config(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::config(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let rendered = match direction {
        Direction::ToDigraph => {
            let colouring: Colouring = serde_json::from_str(&text)
                .map_err(|e| Failure::data(format!("bad colouring JSON: {e}")))?;
            let digraph = colouring_to_digraph(&family, &colouring)?;
            serde_json::to_string(&digraph).expect("serializable")
        }
        Direction::ToColouring => {
            let digraph: LabelledEulerianDigraph = serde_json::from_str(&text)
                .map_err(|e| Failure::data(format!("bad digraph JSON: {e}")))?;
            let colouring = digraph_to_colouring(&family, &digraph)?;
            serde_json::to_string(&colouring).expect("serializable")
        }
    };
    emit(output, &format!("{rendered}\n"))?;
    Ok(0)
}

fn cmd_verify(
    suite: Suite,
    fixtures: &Path,
    n_max: u32,
    max_sum: u32,
    format: OutputFormat,
    output: Option<&Path>,
) -> Result<u8, Failure> {
    let (name, checks) = match suite {
        Suite::Tables => ("tables", verify::tables_suite()),
        Suite::Oeis => ("oeis", verify::oeis_suite(fixtures, n_max)?),
        Suite::Bijection => ("bijection", verify::bijection_suite(max_sum)),
        Suite::All => {
            let mut all = verify::tables_suite();
            all.extend(verify::oeis_suite(fixtures, n_max)?);
            all.extend(verify::bijection_suite(max_sum));
            ("all", all)
        }
    };
    let passed = checks.iter().all(|c| c.passed);
    let rendered = match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for c in &checks {
                let verdict = if c.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("[{verdict}] {}: {}\n", c.name, c.detail));
            }
            let ok = checks.iter().filter(|c| c.passed).count();
            out.push_str(&format!(
                "suite {name}: {ok} of {} checks passed\n",
                checks.len()
            ));
            out
        }
        OutputFormat::Json => {
            let doc = json!({
                "suite": name,
                "passed": passed,
                "checks": checks.iter().map(check_json).collect::<Vec<_>>(),
            });
            format!("{doc}\n")
        }
        _ => return Err(Failure::config("verify reports as text or json")),
    };
    emit(output, &rendered)?;
    Ok(if passed { 0 } else { 1 })
}

fn check_json(c: &Check) -> serde_json::Value {
    json!({"name": c.name, "passed": c.passed, "detail": c.detail})
}
