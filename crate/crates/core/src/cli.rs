//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails or a search cannot
//! finish, 2 for usage and input errors. The default worker count comes from
//! `MINSEP_JOBS` when set.

use crate::classify::{classify, generate_candidates, summarize, CountMode};
use crate::embedding::{
    cellular_genus, parse_rotation_for, parse_rotation_table, trace_faces,
};
use crate::error::{Error, Result};
use crate::multigraph::{format_graph, parse_graph, Multigraph};
use crate::separation::{
    check_two_sided, genus_bounds_with, separating_genus, SearchConfig, DEFAULT_BUDGET,
};
use crate::tables::verify_tables;
use crate::RotationSystem;
use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

/// Environment variable holding the default number of worker threads.
pub const JOBS_ENV: &str = "MINSEP_JOBS";

#[derive(Parser, Debug)]
#[command(name = "minsep", version, about = "Minimal separating graphs of orientable surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify graphs by least separated genus and roll up the counts.
    Classify {
        #[arg(long)]
        genus: u32,
        /// Worker threads (default: $MINSEP_JOBS, else 1).
        #[arg(long)]
        jobs: Option<usize>,
        /// Rotation budget per graph.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value = "paper", value_parser = ["paper", "paper-formula", "multiset"])]
        mode: String,
        /// Write the JSON report here; `-` for standard output.
        #[arg(long)]
        output: Option<String>,
    },
    /// Least and largest separated genus, cellular genus range and bounds.
    Gamma {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Boundary walks of a rotation system.
    Faces {
        /// Graph file; without it the graph is read off the rotation table.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        rotation: PathBuf,
    },
    /// Two-sidedness and separating genus of a rotation system.
    Check {
        #[arg(long)]
        rotation: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// List the candidate graphs for a genus.
    Candidates {
        #[arg(long)]
        genus: u32,
    },
    /// Re-verify the embedded witness tables.
    VerifyTables {
        /// One of 1, 2.1, ..., 2.6; all tables when omitted.
        #[arg(long)]
        table: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

/// Runs the CLI with the process's standard streams.
pub fn cli_run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    cli_run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI writing to the given streams and returns the exit status.
pub fn cli_run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match run(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Input(_)
                | Error::Format { .. }
                | Error::Capacity { .. }
                | Error::Precondition(_)
                | Error::Io(_) => 2,
                _ => 1,
            }
        }
    }
}

fn jobs_or_env(jobs: Option<usize>) -> Result<usize> {
    if let Some(j) = jobs {
        return Ok(j.max(1));
    }
    match std::env::var(JOBS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|j| j.max(1))
            .map_err(|_| Error::Input(format!("{JOBS_ENV}={v} is not a positive integer"))),
        Err(_) => Ok(1),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_rotation(
    graph: Option<&Path>,
    rotation: &Path,
) -> Result<(Multigraph, RotationSystem)> {
    let text = read(rotation)?;
    match graph {
        Some(p) => {
            let g = parse_graph(&read(p)?)?;
            let rs = parse_rotation_for(&g, &text)?;
            Ok((g, rs))
        }
        None => parse_rotation_table(&text),
    }
}

fn run(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Classify {
            genus,
            jobs,
            budget,
            mode,
            output,
        } => {
            let cfg = SearchConfig {
                budget,
                jobs: jobs_or_env(jobs)?,
            };
            let mode: CountMode = mode.parse()?;
            let start = Instant::now();
            let report = classify(genus, mode, &cfg)?;
            writeln!(
                err,
                "classified genus {genus} in {:.2?} ({} rotations, {} jobs)",
                start.elapsed(),
                report.stats.rotations_visited,
                cfg.jobs
            )?;
            match output.as_deref() {
                Some("-") => out.write_all(report.to_json()?.as_bytes())?,
                Some(path) => {
                    std::fs::write(path, report.to_json()?)?;
                    out.write_all(summarize(&report).as_bytes())?;
                }
                None => out.write_all(summarize(&report).as_bytes())?,
            }
            Ok(0)
        }
        Command::Gamma {
            graph,
            jobs,
            budget,
        } => {
            let g = parse_graph(&read(&graph)?)?;
            let cfg = SearchConfig {
                budget,
                jobs: jobs_or_env(jobs)?,
            };
            let p = genus_bounds_with(&g, &cfg)?;
            writeln!(out, "gamma_minus        {}", p.gamma_minus)?;
            writeln!(out, "gamma_plus         {}", p.gamma_plus)?;
            writeln!(
                out,
                "cellular genus     {}..={}",
                p.gamma_min_cellular, p.gamma_max_cellular
            )?;
            writeln!(
                out,
                "bounds             {} <= gamma_minus, gamma_plus <= {}",
                p.lower_bound, p.upper_bound
            )?;
            Ok(0)
        }
        Command::Faces { graph, rotation } => {
            let (g, rs) = load_rotation(graph.as_deref(), &rotation)?;
            let faces = trace_faces(&g, &rs)?;
            for (i, w) in faces.walks().iter().enumerate() {
                let darts: Vec<String> = w.iter().map(|d| format!("{d:?}")).collect();
                writeln!(out, "walk {i}: {}", darts.join(" "))?;
            }
            write!(out, "{} walks", faces.len())?;
            if g.is_connected() {
                write!(out, ", cellular genus {}", cellular_genus(&g, &rs)?)?;
            }
            writeln!(out)?;
            Ok(0)
        }
        Command::Check { rotation, graph } => {
            let (g, rs) = load_rotation(graph.as_deref(), &rotation)?;
            let faces = trace_faces(&g, &rs)?;
            match check_two_sided(&faces, &g) {
                Some(cert) => {
                    let genus = separating_genus(&g, &cert)?;
                    writeln!(out, "two-sided, ({},{}), genus {genus}", cert.n1, cert.n2)?;
                    if cert.achievable_splits.len() > 1 {
                        writeln!(out, "achievable splits {:?}", cert.achievable_splits)?;
                    }
                    Ok(0)
                }
                None => {
                    writeln!(out, "not two-sided ({} walks)", faces.len())?;
                    Ok(1)
                }
            }
        }
        Command::Candidates { genus } => {
            let set = generate_candidates(genus)?;
            writeln!(out, "# {} candidates for genus {genus}", set.len())?;
            for (code, g) in &set.graphs {
                writeln!(out, "# {code}")?;
                out.write_all(format_graph(g).as_bytes())?;
            }
            Ok(0)
        }
        Command::VerifyTables { table, json } => {
            let report = verify_tables(table.as_deref())?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(out, "{report}")?;
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}
