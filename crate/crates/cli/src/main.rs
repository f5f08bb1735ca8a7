//! `kflab`: exact resistance distances and Kirchhoff indices from the
//! command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
//! error, 3 the input graph is unsuitable (disconnected, not a cactus).

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kflab_core::closed_forms::CactusClassSpec;
use kflab_core::constructions::build_named;
use kflab_core::enumeration::{enumerate_cacti, extremal_scan};
use kflab_core::io::{from_graph6, parse_edge_list, parse_graph, to_graph6, write_edge_list};
use kflab_core::rational::{approx, format};
use kflab_core::resistance::{resistance_matrix, resistance_matrix_laplacian};
use kflab_core::verify::{extremal_table, formula_csv, formula_sweep, run_suite, ExtremalRow, Suite, SuiteReport};
use kflab_core::{Error, Graph, Rational};
use serde::Serialize;

/// Seed used by `verify lemma` when `--seed` is absent.
const DEFAULT_SEED: u64 = 1;

#[derive(Parser)]
#[command(name = "kflab", version, about = "Exact resistance distances and Kirchhoff indices of graphs and cacti")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute exact quantities of a graph read from a file or stdin.
    Compute(ComputeArgs),
    /// Emit a named construction with a JSON sidecar of its roots.
    Build(BuildArgs),
    /// Enumerate Cat(n; t) up to isomorphism and report its extremal members.
    Enumerate(EnumerateArgs),
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: VerifyCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Edgelist,
    G6,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    G6,
}

#[derive(Args)]
struct ComputeArgs {
    /// Input file; stdin when absent.
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
    /// Kirchhoff index (the default target).
    #[arg(long)]
    kf: bool,
    /// Effective resistance between two vertices.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    resistance: Option<Vec<usize>>,
    /// Sum of resistances from one vertex.
    #[arg(long, value_name = "X")]
    transmission: Option<usize>,
    /// Full resistance matrix, one row per line.
    #[arg(long)]
    matrix: bool,
    /// Always use the Laplacian solver, even on cacti.
    #[arg(long)]
    oracle: bool,
    /// Append a float approximation, marked as such, to scalar answers.
    #[arg(long)]
    approx: bool,
}

#[derive(Args)]
struct BuildArgs {
    /// path, cycle, star, qchain, cnt, g0 or g10.
    name: String,
    params: Vec<usize>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormat,
    /// Graph output file; stdout when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Roots sidecar file; defaults to `<output>.roots.json` when writing to
    /// a file.
    #[arg(long)]
    roots: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    /// Write every class member as graph6, one per line, in certificate order.
    #[arg(long)]
    emit: Option<PathBuf>,
    /// Report JSON file; stdout when absent.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Worker threads for the Kf evaluation (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Closed forms against the Laplacian solver, as CSV.
    Formulas {
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long, default_value_t = 14)]
        nmax: usize,
        #[arg(long, default_value_t = 8)]
        smax: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Seeded randomized inequality suites, as JSON.
    Lemma {
        /// 2.1, 2.2, 2.3, 2.3(1), 2.3(2), 2.4, 2.6, 2.7, 2.8, a suite name, or all.
        id: Option<String>,
        #[arg(long = "lemma", conflicts_with = "id")]
        lemma: Option<String>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Exhaustive extremal table over t >= 2.
    Theorem {
        #[arg(long, default_value_t = 5)]
        nmin: usize,
        #[arg(long, default_value_t = 9)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Also fail when the minimizer is not the star cactus.
        #[arg(long)]
        require_minimum: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Disconnected | Error::NotCactus | Error::Precondition(_)) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// Returns whether every check passed.
fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Compute(args) => compute(args).map(|_| true),
        Command::Build(args) => build(args).map(|_| true),
        Command::Enumerate(args) => enumerate(args).map(|_| true),
        Command::Verify { suite } => verify(suite),
    }
}

fn emit(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    let mut text = String::new();
    match path {
        Some(p) => text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            io::stdin().read_to_string(&mut text).context("reading stdin")?;
        }
    }
    Ok(text)
}

fn scalar(value: &Rational, with_approx: bool) -> String {
    if with_approx {
        format!("{} (approx {:.6})", format(value), approx(value))
    } else {
        format(value)
    }
}

fn compute(args: ComputeArgs) -> anyhow::Result<()> {
    let text = read_input(args.input.as_deref())?;
    let g: Graph = match args.format {
        InputFormat::Auto => parse_graph(&text)?,
        InputFormat::Edgelist => parse_edge_list(&text)?,
        InputFormat::G6 => from_graph6(text.trim())?,
    };
    if let Some(uv) = &args.resistance {
        g.check_vertex(uv[0])?;
        g.check_vertex(uv[1])?;
    }
    if let Some(x) = args.transmission {
        g.check_vertex(x)?;
    }
    let r = if args.oracle { resistance_matrix_laplacian(&g)? } else { resistance_matrix(&g)? };

    let mut lines: Vec<(&str, String)> = Vec::new();
    let want_kf = args.kf || (args.resistance.is_none() && args.transmission.is_none() && !args.matrix);
    if want_kf {
        lines.push(("kf", scalar(&r.kirchhoff_index(), args.approx)));
    }
    if let Some(uv) = &args.resistance {
        lines.push(("resistance", scalar(r.get(uv[0], uv[1]), args.approx)));
    }
    if let Some(x) = args.transmission {
        lines.push(("transmission", scalar(&r.transmission(x), args.approx)));
    }
    if args.matrix {
        let rows: Vec<String> = (0..g.order())
            .map(|u| r.row(u).iter().map(format).collect::<Vec<_>>().join(" "))
            .collect();
        lines.push(("matrix", rows.join("\n")));
    }
    let mut out = String::new();
    if lines.len() == 1 {
        out.push_str(&lines[0].1);
        out.push('\n');
    } else {
        for (label, value) in lines {
            if value.contains('\n') {
                out.push_str(&format!("{label}:\n{value}\n"));
            } else {
                out.push_str(&format!("{label}: {value}\n"));
            }
        }
    }
    emit(None, &out)
}

fn build(args: BuildArgs) -> anyhow::Result<()> {
    let rooted = build_named(&args.name, &args.params)?;
    let body = match args.format {
        GraphFormat::Edgelist => write_edge_list(&rooted.graph),
        GraphFormat::G6 => format!("{}\n", to_graph6(&rooted.graph)),
    };
    emit(args.output.as_deref(), &body)?;
    let sidecar = args.roots.clone().or_else(|| {
        args.output.as_ref().map(|p| {
            let mut name = p.as_os_str().to_owned();
            name.push(".roots.json");
            PathBuf::from(name)
        })
    });
    if let Some(path) = sidecar {
        emit(Some(&path), &format!("{}\n", rooted.roots_json()))?;
    }
    Ok(())
}

fn enumerate(args: EnumerateArgs) -> anyhow::Result<()> {
    let spec = CactusClassSpec::new(args.n, args.t)?;
    let report = extremal_scan(spec, args.jobs)?;
    if let Some(path) = &args.emit {
        let mut text = String::new();
        for (_, g) in enumerate_cacti(spec)? {
            text.push_str(&to_graph6(&g));
            text.push('\n');
        }
        emit(Some(path), &text)?;
    }
    let json = serde_json::to_string_pretty(&report)? + "\n";
    emit(args.report.as_deref(), &json)?;
    eprintln!("wall time: {:.3}s", report.wall_time.as_secs_f64());
    Ok(())
}

#[derive(Serialize)]
struct LemmaRun<'a> {
    seed: u64,
    trials: usize,
    passed: bool,
    suites: &'a [SuiteReport],
}

fn verify(command: VerifyCommand) -> anyhow::Result<bool> {
    match command {
        VerifyCommand::Formulas { kmax, nmax, smax, output } => {
            let rows = formula_sweep(kmax, nmax, smax)?;
            emit(output.as_deref(), &formula_csv(&rows))?;
            let bad: Vec<_> = rows.iter().filter(|r| !r.equal).collect();
            for r in &bad {
                eprintln!("mismatch: {}", serde_json::to_string(r)?);
            }
            Ok(bad.is_empty())
        }
        VerifyCommand::Lemma { id, lemma, trials, seed, output } => {
            let Some(id) = id.or(lemma) else {
                bail!(Error::InvalidParameter("name a lemma suite, e.g. `verify lemma 2.8`".into()));
            };
            let suites = Suite::parse_list(&id)?;
            let reports = suites
                .into_iter()
                .map(|s| run_suite(s, trials, seed))
                .collect::<Result<Vec<_>, _>>()?;
            let passed = reports.iter().all(SuiteReport::all_passed);
            let run = LemmaRun { seed, trials, passed, suites: &reports };
            emit(output.as_deref(), &(serde_json::to_string_pretty(&run)? + "\n"))?;
            for report in &reports {
                for o in report.outcomes.iter().filter(|o| !o.holds) {
                    eprintln!("violation in {}: {}", report.suite, serde_json::to_string(o)?);
                }
            }
            Ok(passed)
        }
        VerifyCommand::Theorem { nmin, nmax, jobs, format: table, require_minimum, output } => {
            let rows = extremal_table(nmin, nmax, jobs)?;
            let text = match table {
                TableFormat::Csv => extremal_csv(&rows),
                TableFormat::Json => serde_json::to_string_pretty(&rows)? + "\n",
            };
            emit(output.as_deref(), &text)?;
            let mut ok = true;
            for r in &rows {
                let failed = !r.max_holds() || (require_minimum && !r.min_holds());
                if failed {
                    eprintln!("violation: {}", serde_json::to_string(r)?);
                }
                ok &= !failed;
            }
            Ok(ok)
        }
    }
}

fn extremal_csv(rows: &[ExtremalRow]) -> String {
    let mut out = String::from("n,t,class_count,max_kf,closed_form,max_is_chain,min_kf,min_is_star,degenerate\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.t,
            r.class_count,
            format(&r.max_kf),
            format(&r.closed_form),
            r.max_is_chain,
            format(&r.min_kf),
            r.min_is_star,
            r.degenerate
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(&Error::Disconnected.into()), 3);
        assert_eq!(exit_code(&Error::NotCactus.into()), 3);
        assert_eq!(exit_code(&Error::Parse("x".into()).into()), 2);
        assert_eq!(exit_code(&anyhow::anyhow!("io")), 2);
    }

    #[test]
    fn approximation_is_marked() {
        let third = kflab_core::rational::frac(1, 3);
        assert_eq!(scalar(&third, false), "1/3");
        assert_eq!(scalar(&third, true), "1/3 (approx 0.333333)");
    }

    #[test]
    fn extremal_table_header() {
        let rows = extremal_table(5, 5, 1).unwrap();
        assert_eq!(
            extremal_csv(&rows),
            "n,t,class_count,max_kf,closed_form,max_is_chain,min_kf,min_is_star,degenerate\n5,2,1,28/3,28/3,true,28/3,true,true\n"
        );
    }
}
