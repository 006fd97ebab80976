//! Command-line front end. The `stabnf` binary only forwards to [`run`].
//!
//! Exit codes: 0 success, 1 usage or unsupported input, 2 parse error,
//! 3 verification mismatch.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::circuit::{Circuit, ParseError};
use crate::genpzx::{self, IntermediateForm};
use crate::gf2::{BitMat, SymZeroDiag};
use crate::graphstate::{self, GainStats};
use crate::oracle::{self, OracleError};
use crate::pzx;
use crate::synth::{self, SynthMethod};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Largest `n` accepted by `stats` without `--big`.
pub const STATS_DEFAULT_MAX_N: usize = 100;

#[derive(Parser, Debug)]
#[command(name = "stabnf", version, about = "Normal forms for Clifford circuits and graph states")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Form {
    Pzx,
    Genpzx,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Emit {
    Text,
    Qasm,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Pmh,
    Gauss,
    Optimal,
}

impl From<Method> for SynthMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Pmh => SynthMethod::Pmh,
            Method::Gauss => SynthMethod::Gauss,
            Method::Optimal => SynthMethod::Optimal,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Md,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Normalize a circuit file and optionally re-emit it.
    Normalize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "genpzx")]
        form: Form,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "pmh")]
        synth: Method,
        /// Check the re-emitted circuit against the input with the dense oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Graph-state commands.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Synthesize a CNOT circuit for an invertible matrix.
    Synth {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "pmh")]
        method: Method,
    },
    /// Check two circuits for equality up to a global phase.
    Verify {
        a: PathBuf,
        b: PathBuf,
        /// Compare the states prepared from |0…0⟩ instead of the unitaries.
        #[arg(long)]
        state: bool,
    },
    /// Average two-qubit gain of the graph-state reduction on random graphs.
    Stats {
        #[arg(long)]
        qubits: usize,
        #[arg(long, conflicts_with = "density")]
        edges: Option<usize>,
        /// Edge count as a fraction of n(n-1)/2.
        #[arg(long)]
        density: Option<f64>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        #[arg(long, value_enum, default_value = "pmh")]
        synth: Method,
        /// Allow more than 100 qubits.
        #[arg(long)]
        big: bool,
    },
    /// Interactive merge-by-merge normalization.
    Repl {
        #[arg(long)]
        qubits: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// Re-prepare Z_B|+⟩ as Z_v X_A Z_{B_red}|+⟩.
    Reduce {
        /// Edges such as "0-3,0-5,1-2".
        #[arg(long)]
        edges: String,
        /// Qubit count (defaults to the largest vertex + 1).
        #[arg(long)]
        qubits: Option<usize>,
        #[arg(long, value_enum, default_value = "pmh")]
        synth: Method,
        #[arg(long, value_enum, default_value = "qasm")]
        emit: Emit,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub msg: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, msg: msg.into() }
    }
    fn parse(msg: impl Into<String>) -> Self {
        Self { code: EXIT_PARSE, msg: msg.into() }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::parse(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::usage(e.to_string())
    }
}

fn usage_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::usage(e.to_string())
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn read_circuit(path: &PathBuf) -> Result<Circuit, CliError> {
    Ok(Circuit::parse(&read(path)?)?)
}

/// Parses `"0-3,0-5 1-2"` into an edge list.
pub fn parse_edges(s: &str) -> Result<Vec<(usize, usize)>, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (a, b) = t.split_once('-').ok_or_else(|| format!("edge {t:?} is not of the form i-j"))?;
            let a = a.parse().map_err(|_| format!("bad vertex in {t:?}"))?;
            let b = b.parse().map_err(|_| format!("bad vertex in {t:?}"))?;
            Ok((a, b))
        })
        .collect()
}

fn emit_circuit(c: &Circuit, phase: crate::PhaseOctant, emit: Emit) -> String {
    match emit {
        Emit::Text => {
            let mut s = format!("# global phase {phase}\n");
            s.push_str(&c.serialize());
            s
        }
        Emit::Qasm => c.to_qasm(Some(phase)),
        Emit::Json => {
            let v = serde_json::json!({ "phase_octant": phase.k(), "circuit": c.to_json() });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    }
}

/// Writes `text` to `--out` if given, else to `out`.
fn deliver(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::usage(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(usage_err),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    match dispatch(cli.cmd, input, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.msg);
            e.code
        }
    }
}

fn dispatch(cmd: Cmd, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Cmd::Normalize { input: path, form, emit, out: out_path, synth, verify } => {
            normalize(&path, form, emit, out_path.as_ref(), synth.into(), verify, out)
        }
        Cmd::Graph { cmd: GraphCmd::Reduce { edges, qubits, synth, emit } } => {
            graph_reduce(&edges, qubits, synth.into(), emit, out)
        }
        Cmd::Synth { matrix, method } => {
            let a = BitMat::parse_text(&read(&matrix)?).map_err(|e| CliError::parse(e.to_string()))?;
            let word = synth::a_to_x(&a, method.into()).map_err(usage_err)?;
            let text: String = word.iter().map(ToString::to_string).collect();
            writeln!(out, "{text}").map_err(usage_err)?;
            writeln!(out, "cnots: {}", word.len()).map_err(usage_err)?;
            Ok(EXIT_OK)
        }
        Cmd::Verify { a, b, state } => {
            let (ca, cb) = (read_circuit(&a)?, read_circuit(&b)?);
            if ca.n() != cb.n() {
                writeln!(out, "not equal (qubit counts {} and {})", ca.n(), cb.n()).map_err(usage_err)?;
                return Ok(EXIT_MISMATCH);
            }
            if state {
                let equal = oracle::states_equal_up_to_phase(&oracle::state_of(&ca)?, &oracle::state_of(&cb)?);
                writeln!(out, "{}", if equal { "equal states" } else { "not equal" }).map_err(usage_err)?;
                return Ok(if equal { EXIT_OK } else { EXIT_MISMATCH });
            }
            match oracle::equal_up_to_octant_phase(&ca, &cb)? {
                Some(k) => {
                    writeln!(out, "equal (phase {k})").map_err(usage_err)?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "not equal").map_err(usage_err)?;
                    Ok(EXIT_MISMATCH)
                }
            }
        }
        Cmd::Stats { qubits, edges, density, samples, seed, format, synth, big } => {
            if qubits > STATS_DEFAULT_MAX_N && !big {
                return Err(CliError::usage(format!("n = {qubits} exceeds {STATS_DEFAULT_MAX_N}; pass --big")));
            }
            let max = graphstate::max_edges(qubits);
            let edges = match (edges, density) {
                (Some(e), _) => e,
                (None, Some(d)) if (0.0..=1.0).contains(&d) => (d * max as f64).round() as usize,
                (None, Some(d)) => return Err(CliError::usage(format!("density {d} is outside [0, 1]"))),
                (None, None) => return Err(CliError::usage("give --edges or --density")),
            };
            let s = graphstate::gain_stats(qubits, edges, samples, seed, synth.into()).map_err(usage_err)?;
            let text = match format {
                TableFormat::Csv => format!("{}\n{}\n", GainStats::CSV_HEADER, s.csv_row()),
                TableFormat::Md => format!(
                    "| n | edges | samples | mean_gain_pct | stddev | min | max | seed |\n|---|---|---|---|---|---|---|---|\n{}\n",
                    s.markdown_row()
                ),
            };
            out.write_all(text.as_bytes()).map_err(usage_err)?;
            Ok(EXIT_OK)
        }
        Cmd::Repl { qubits } => {
            let mut repl = Repl::new(qubits);
            writeln!(out, "{}", repl.banner()).map_err(usage_err)?;
            let mut line = String::new();
            loop {
                line.clear();
                if input.read_line(&mut line).map_err(usage_err)? == 0 {
                    break;
                }
                let reply = repl.handle(&line);
                if !reply.text.is_empty() {
                    writeln!(out, "{}", reply.text).map_err(usage_err)?;
                }
                if reply.quit {
                    break;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn normalize(
    path: &PathBuf,
    form: Form,
    emit: Option<Emit>,
    out_path: Option<&PathBuf>,
    method: SynthMethod,
    verify: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let c = read_circuit(path)?;
    let (summary, emitted, phase, json) = match form {
        Form::Pzx => {
            let f = pzx::normalize(&c).map_err(usage_err)?;
            let emitted = f.to_circuit(method).map_err(usage_err)?;
            (f.to_string(), emitted, crate::PhaseOctant::ZERO, f.to_json())
        }
        Form::Genpzx => {
            let f = genpzx::c_to_gpzx(&c).map_err(usage_err)?;
            let (emitted, phase) = f.to_circuit(method).map_err(usage_err)?;
            (f.to_string(), emitted, phase, f.to_json())
        }
    };
    let mut report = String::new();
    if !matches!(emit, Some(Emit::Json)) {
        let _ = writeln!(report, "{summary}");
    }
    let mut code = EXIT_OK;
    if verify {
        if c.n() > oracle::cap() {
            let _ = writeln!(report, "verify: skipped ({} qubits exceeds cap {})", c.n(), oracle::cap());
        } else {
            let lhs = oracle::DenseUnitary::of(&c)?;
            let rhs = oracle::DenseUnitary::of(&emitted)?.scaled(oracle::octant(phase));
            if lhs.approx_eq(&rhs) {
                let _ = writeln!(report, "verify: ok");
            } else {
                let _ = writeln!(report, "verify: MISMATCH");
                code = EXIT_MISMATCH;
            }
        }
    }
    out.write_all(report.as_bytes()).map_err(usage_err)?;
    if let Some(e) = emit {
        let text = match e {
            Emit::Json => {
                let v = serde_json::json!({ "form": json, "phase_octant": phase.k(), "circuit": emitted.to_json() });
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
            }
            other => emit_circuit(&emitted, phase, other),
        };
        deliver(&text, out_path, out)?;
    }
    Ok(code)
}

fn graph_reduce(edges: &str, qubits: Option<usize>, method: SynthMethod, emit: Emit, out: &mut dyn Write) -> Result<i32, CliError> {
    let list = parse_edges(edges).map_err(CliError::parse)?;
    let n = qubits.unwrap_or_else(|| list.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    let b = SymZeroDiag::from_edges(n, list).map_err(|e| CliError::parse(e.to_string()))?;
    let form = graphstate::reduce_graph_state(&b, method).map_err(usage_err)?;
    let mut s = String::new();
    let _ = writeln!(s, "# B_red: {}", form.b_red);
    let _ = writeln!(s, "# v: {}", form.v);
    let _ = writeln!(s, "# A word: {}", form.word.iter().map(ToString::to_string).collect::<String>());
    let _ = writeln!(
        s,
        "# two-qubit gates: {} -> {} (gain {:.0}%)",
        b.edge_count(),
        form.two_qubit_count(),
        100.0 * form.gain()
    );
    let c = graphstate::best_circuit(&b, method).map_err(usage_err)?;
    s.push_str(&emit_circuit(&c, crate::PhaseOctant::ZERO, emit));
    out.write_all(s.as_bytes()).map_err(usage_err)?;
    Ok(EXIT_OK)
}

/// Reply to one REPL line.
pub struct ReplReply {
    pub text: String,
    pub quit: bool,
}

/// Line-oriented session that folds one gate at a time into the
/// intermediate form and can undo.
pub struct Repl {
    n: usize,
    form: IntermediateForm,
    history: Vec<IntermediateForm>,
}

impl Repl {
    #[must_use]
    pub fn new(n: usize) -> Self {
        Self { n, form: IntermediateForm::new(n), history: Vec::new() }
    }

    #[must_use]
    pub fn banner(&self) -> String {
        format!("{} qubits. Enter gates (H i, P i, CX t c, ...), `undo`, `show`, `finish`, `reset` or `quit`.", self.n)
    }

    #[must_use]
    pub fn form(&self) -> &IntermediateForm {
        &self.form
    }

    pub fn handle(&mut self, line: &str) -> ReplReply {
        let cmd = line.split('#').next().unwrap_or("").trim();
        let reply = |text: String| ReplReply { text, quit: false };
        match cmd.to_ascii_lowercase().as_str() {
            "" => reply(String::new()),
            "quit" | "exit" => ReplReply { text: String::new(), quit: true },
            "show" => reply(self.form.to_string()),
            "reset" => {
                self.form = IntermediateForm::new(self.n);
                self.history.clear();
                reply(self.form.to_string())
            }
            "undo" => match self.history.pop() {
                Some(prev) => {
                    self.form = prev;
                    reply(self.form.to_string())
                }
                None => reply("nothing to undo".into()),
            },
            "finish" => {
                let f = self.form.finish();
                match f.to_circuit(SynthMethod::Pmh) {
                    Ok((c, _)) => reply(format!("{f}\n{}", c.serialize())),
                    Err(e) => reply(format!("error: {e}")),
                }
            }
            _ => match Circuit::parse(&format!("qubits {}\n{cmd}", self.n)) {
                Ok(c) => {
                    let snapshot = self.form.clone();
                    for &g in c.gates() {
                        if let Err(e) = self.form.apply_gate(g) {
                            self.form = snapshot;
                            return reply(format!("error: {e}"));
                        }
                    }
                    self.history.push(snapshot);
                    let sugar = c.desugar();
                    if sugar.gates() == c.gates() {
                        reply(self.form.to_string())
                    } else {
                        let seq: Vec<String> = sugar.gates().iter().map(|g| format!("{g:?}")).collect();
                        reply(format!("= {}\n{}", seq.join(" "), self.form))
                    }
                }
                Err(e) => reply(format!("error: {}", e.msg)),
            },
        }
    }
}
