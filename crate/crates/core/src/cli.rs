//! Command-line interface.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::analysis::{analyze, profile_gate, State};
use crate::basis::{entangled_states, expand_product, ExpansionRow, BASIS_SIZE};
use crate::engine::{delta_qt, derive_all};
use crate::error::{Error, Result};
use crate::gate_table::GateTable;
use crate::qutrit::{Ket, Operator3};
use crate::scalar::ExtScalar;
use crate::sim::{GateSource, Simulator, StateMode};
use crate::tables::compare_tables;
use crate::verify::run_checks;

const ROMAN: [&str; BASIS_SIZE] = ["I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableSource {
    Oracle,
    Paper,
}

#[derive(Debug, Parser)]
#[command(
    name = "qutrit-teleport",
    version,
    about = "Exact qutrit teleportation gates, printed-table comparison and protocol simulation"
)]
struct Cli {
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Master seed for simulation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Show channels as Roman numerals alongside their indices.
    #[arg(long, global = true)]
    roman: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The nine entangled states and the product-state expansions.
    Basis,
    /// Pre-measurement states and measurement gates.
    Derive {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..9))]
        channel: Option<u8>,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..9))]
        outcome: Option<u8>,
    },
    /// Run the exact invariant suite; exits 2 if any check fails.
    Verify,
    /// Diff the printed tables against the derived values.
    Compare {
        /// Exit 2 when any entry is not a match.
        #[arg(long)]
        fail_on_mismatch: bool,
    },
    /// Gate profiles, completeness and class counts.
    Analyze {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..9))]
        channel: Option<u8>,
    },
    /// Monte-Carlo runs of the protocol.
    Simulate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..9), default_value_t = 0)]
        channel: u8,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Fixed input `c0r,c0i,c1r,c1i,c2r,c2i`, normalized to within 1e-12.
        #[arg(long, value_parser = parse_state, allow_hyphen_values = true, conflicts_with = "haar")]
        state: Option<State>,
        /// Draw every input uniformly from the unit sphere (the default).
        #[arg(long)]
        haar: bool,
        /// Sample with the printed gates instead of the derived ones.
        #[arg(long)]
        use_paper_gates: bool,
        /// Include every trial record in JSON output.
        #[arg(long)]
        trace: bool,
    },
    /// Write the full 81-gate table as JSON.
    Export {
        #[arg(long, value_enum, default_value_t = TableSource::Oracle)]
        source: TableSource,
    },
    /// Read and validate a gate table.
    Import { path: PathBuf },
}

fn parse_state(s: &str) -> std::result::Result<State, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    if parts.len() != 6 {
        return Err(format!("expected 6 comma-separated numbers, got {}", parts.len()));
    }
    Ok(std::array::from_fn(|j| Complex64::new(parts[2 * j], parts[2 * j + 1])))
}

struct Outcome {
    payload: String,
    code: i32,
}

impl Outcome {
    fn ok(payload: String) -> Self {
        Outcome { payload, code: 0 }
    }
}

enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

fn pick_format(requested: Option<Format>, allowed: &[Format], command: &str) -> std::result::Result<Format, Failure> {
    match requested {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(Failure::Usage(format!(
            "`{command}` does not support --format {}; use one of: {}",
            name(f),
            allowed.iter().map(|&a| name(a)).collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn name(f: Format) -> &'static str {
    match f {
        Format::Text => "text",
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Markdown => "markdown",
        Format::Latex => "latex",
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

fn channel_name(i: usize, roman: bool) -> String {
    if roman {
        format!("channel {i} ({})", ROMAN[i])
    } else {
        format!("channel {i}")
    }
}

fn scalar_ket(k: &Ket<ExtScalar>) -> String {
    let parts: Vec<String> = k
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(idx, a)| format!("({a})|{}{}⟩", idx / 3, idx % 3))
        .collect();
    parts.join(" + ")
}

fn expansion_text(r: &ExpansionRow) -> String {
    let parts: Vec<String> = r.coefficients.iter().map(|(i, c)| format!("({c})|Ψ{i}⟩")).collect();
    format!("|{}{}⟩ = {}", r.a2, r.b, parts.join(" + "))
}

fn cmd_basis(format: Format) -> Outcome {
    let expansions: Vec<ExpansionRow> = (0..9)
        .map(|n| expand_product(n / 3, n % 3).expect("in range"))
        .collect();
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                states: &'a [crate::basis::EntangledState],
                expansions: &'a [ExpansionRow],
            }
            Outcome::ok(json(&Doc { states: entangled_states(), expansions: &expansions }))
        }
        _ => {
            let mut out = String::new();
            for s in entangled_states() {
                let family = serde_json::to_value(s.family).expect("family serializes");
                let _ = writeln!(out, "Ψ{} [{}] = {}", s.index, family.as_str().unwrap_or(""), scalar_ket(&s.ket));
            }
            out.push('\n');
            for r in &expansions {
                let _ = writeln!(out, "{}", expansion_text(r));
            }
            Outcome::ok(out)
        }
    }
}

fn selection(v: Option<u8>) -> Vec<usize> {
    match v {
        Some(x) => vec![usize::from(x)],
        None => (0..BASIS_SIZE).collect(),
    }
}

fn cmd_derive(format: Format, channel: Option<u8>, outcome: Option<u8>, roman: bool) -> Result<Outcome> {
    let all = derive_all();
    let channels = selection(channel);
    let outcomes = selection(outcome);
    let rows: Vec<(usize, &crate::engine::OutcomeRow)> = channels
        .iter()
        .flat_map(|&i| outcomes.iter().map(move |&k| (i, k)))
        .map(|(i, k)| (i, &all[i].rows[k]))
        .collect();
    Ok(Outcome::ok(match format {
        Format::Json => {
            if rows.len() == 1 {
                json(&rows[0].1.gate)
            } else {
                json(&rows.iter().map(|(_, r)| &r.gate).collect::<Vec<&Operator3>>())
            }
        }
        Format::Latex => {
            let mut out = String::new();
            for &i in &channels {
                let _ = write!(
                    out,
                    "% {}\n\\begin{{tabular}}{{lllll}}\n\\hline\n$|\\Psi_k\\rangle_{{A_1A_2}}$ & $|s^k_{i}\\rangle_B$ & $\\Lambda^k_{i}$ & $\\Delta_{{QT}}$ & Remarks \\\\\n\\hline\n",
                    channel_name(i, roman)
                );
                for (_, row) in rows.iter().filter(|(c, _)| *c == i) {
                    let k = row.outcome;
                    let residual = delta_qt(i, k, &row.gate)?;
                    let delta = if residual.is_zero() { "0".to_string() } else { residual.to_latex() };
                    let _ = writeln!(
                        out,
                        "$|\\Psi_{k}\\rangle_{{A_1A_2}}$ & ${}$ & ${}$ & ${delta}$ & {} \\\\",
                        row.premeasure.to_latex(),
                        row.gate.to_latex(),
                        profile_gate(&row.gate).classification.as_str().replace('_', " "),
                    );
                }
                out.push_str("\\hline\n\\end{tabular}\n");
            }
            out
        }
        _ => {
            let mut out = String::new();
            for (i, row) in &rows {
                let _ = writeln!(
                    out,
                    "{}, outcome {}\n  s = {}\n  Λ = {}",
                    channel_name(*i, roman),
                    row.outcome,
                    row.premeasure,
                    row.gate
                );
            }
            out
        }
    }))
}

fn cmd_verify(format: Format) -> Outcome {
    let checks = run_checks();
    let passed = checks.iter().all(|c| c.passed);
    let payload = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                passed: bool,
                checks: &'a [crate::verify::Check],
            }
            json(&Doc { passed, checks: &checks })
        }
        _ => {
            let mut out = String::new();
            for c in &checks {
                let _ = writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            out
        }
    };
    Outcome { payload, code: if passed { 0 } else { 2 } }
}

fn cmd_compare(format: Format, fail_on_mismatch: bool, roman: bool) -> Outcome {
    let report = compare_tables();
    let payload = match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Markdown => report.to_markdown(),
        Format::Latex => report.to_latex(),
        _ => {
            let mut out = String::new();
            for (d, n) in &report.summary {
                let _ = writeln!(out, "{:<14} {n}", d.as_str());
            }
            out.push('\n');
            for e in report.mismatches() {
                let _ = writeln!(
                    out,
                    "{}, outcome {}, {}: {} ({}) {}",
                    channel_name(e.channel, roman),
                    e.outcome,
                    e.kind.as_str(),
                    e.discrepancy.as_str(),
                    e.location,
                    e.detail
                );
            }
            out
        }
    };
    let code = if fail_on_mismatch && !report.is_clean() { 2 } else { 0 };
    Outcome { payload, code }
}

fn cmd_analyze(format: Format, channel: Option<u8>) -> Result<Outcome> {
    let report = analyze(&selection(channel))?;
    Ok(Outcome::ok(match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        _ => report.to_markdown(),
    }))
}

struct SimulateArgs {
    channel: usize,
    trials: usize,
    state: Option<State>,
    use_paper_gates: bool,
    trace: bool,
}

fn cmd_simulate(format: Format, a: SimulateArgs, seed: u64, roman: bool) -> Result<Outcome> {
    let sim = if a.use_paper_gates { Simulator::paper() } else { Simulator::oracle() };
    let mode = a.state.map_or(StateMode::HaarRandom, StateMode::Fixed);
    let batch = sim.run_batch(a.channel, a.trials, seed, mode)?;
    Ok(Outcome::ok(match format {
        Format::Csv => batch.to_csv(),
        Format::Json if a.trace => json(&batch),
        Format::Json => json(&batch.summary),
        _ => {
            let s = &batch.summary;
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{}, {} trials, seed {}, {} inputs, {} gates",
                channel_name(s.channel, roman),
                s.trials,
                s.master_seed,
                s.state_mode,
                match s.gate_source {
                    GateSource::Oracle => "derived",
                    GateSource::Paper => "printed",
                }
            );
            out.push_str("outcome  count  frequency  born\n");
            for k in 0..BASIS_SIZE {
                let _ = writeln!(
                    out,
                    "{k:>7}  {:>5}  {:>9.6}  {:.6}",
                    s.outcome_counts[k], s.empirical_outcome_frequencies[k], s.born_outcome_frequencies[k]
                );
            }
            let fid = s.mean_fidelity_invertible.map_or_else(|| "n/a".to_string(), |f| format!("{f:.12}"));
            let _ = writeln!(out, "mean fidelity (invertible outcomes): {fid}");
            let _ = writeln!(out, "mean fidelity (all outcomes, singular unrecovered): {:.12}", s.mean_fidelity_including_singular);
            let _ = writeln!(out, "singular outcome rate: {:.6}", s.singular_outcome_rate);
            let critical = s.chi_square_critical_999.map_or_else(|| "n/a".to_string(), |c| format!("{c:.4}"));
            let _ = writeln!(
                out,
                "chi-square vs Born: {:.4} (dof {}, 0.999 quantile {critical}){}",
                s.chi_square_vs_born,
                s.chi_square_dof,
                if s.chi_square_exceeds_critical { " EXCEEDS" } else { "" }
            );
            out
        }
    }))
}

fn cmd_import(format: Format, path: &PathBuf) -> Result<Outcome> {
    let text = std::fs::read_to_string(path)?;
    let table = GateTable::from_json(&text)?;
    Ok(Outcome::ok(match format {
        Format::Json => {
            let mut s = table.to_json();
            s.push('\n');
            s
        }
        _ => format!(
            "{} gates, source {}, identical to the derived table: {}\n",
            table.gates.len(),
            table.source,
            if table.matches_oracle() { "yes" } else { "no" }
        ),
    }))
}

fn dispatch(cli: Cli) -> std::result::Result<Outcome, Failure> {
    use Format::*;
    let roman = cli.roman;
    Ok(match cli.command {
        Command::Basis => cmd_basis(pick_format(cli.format, &[Text, Json], "basis")?),
        Command::Derive { channel, outcome } => {
            cmd_derive(pick_format(cli.format, &[Text, Json, Latex], "derive")?, channel, outcome, roman)?
        }
        Command::Verify => cmd_verify(pick_format(cli.format, &[Text, Json], "verify")?),
        Command::Compare { fail_on_mismatch } => cmd_compare(
            pick_format(cli.format, &[Text, Json, Markdown, Latex], "compare")?,
            fail_on_mismatch,
            roman,
        ),
        Command::Analyze { channel } => {
            cmd_analyze(pick_format(cli.format, &[Markdown, Json, Text], "analyze")?, channel)?
        }
        Command::Simulate { channel, trials, state, haar: _, use_paper_gates, trace } => cmd_simulate(
            pick_format(cli.format, &[Text, Json, Csv], "simulate")?,
            SimulateArgs {
                channel: usize::from(channel),
                trials: usize::try_from(trials)
                    .map_err(|_| Failure::Usage("trial count does not fit in memory".to_string()))?,
                state,
                use_paper_gates,
                trace,
            },
            cli.seed,
            roman,
        )?,
        Command::Export { source } => {
            pick_format(cli.format, &[Json], "export")?;
            let table = match source {
                TableSource::Oracle => GateTable::oracle(),
                TableSource::Paper => GateTable::paper(),
            };
            let mut s = table.to_json();
            s.push('\n');
            Outcome::ok(s)
        }
        Command::Import { path } => cmd_import(pick_format(cli.format, &[Text, Json], "import")?, &path)?,
    })
}

/// Runs the CLI with explicit output streams and returns the exit code:
/// 0 on success, 1 on a usage or input error, 2 when a verification fails.
pub fn run_cli_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    let out_path = cli.out.clone();
    match dispatch(cli) {
        Ok(outcome) => {
            let written = match &out_path {
                Some(path) => std::fs::write(path, outcome.payload.as_bytes()),
                None => stdout.write_all(outcome.payload.as_bytes()),
            };
            match written {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    return 1;
                }
                Ok(()) => {}
            }
            outcome.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

/// Runs the CLI on the process's standard streams.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_cli_with(argv, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    code
}
