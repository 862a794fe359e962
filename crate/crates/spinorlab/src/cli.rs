//! Implementation of the `spinorlab` command-line tool.
//!
//! Four subcommands: `spectra` (eigenvalue/multiplicity tables on spheres),
//! `solve` (homogeneous solution spaces and their three-part decomposition),
//! `index` (topological indices from a manifold descriptor file), and
//! `verify` (the deterministic self-check battery).
//!
//! Contract: identical arguments produce byte-identical output. Exact
//! rationals are serialized as `{"num", "den"}` objects in JSON and `num/den`
//! strings in CSV — never as floats. Exit codes: 0 success, 1 verification
//! failure, 2 usage error, 3 input-file error. Errors are emitted to stderr
//! as one-line JSON objects `{"error": …}`.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::rational::BigRational;
use num::One;
use serde_json::{json, Value};

use crate::index::{
    index_dirac, index_hsd, index_rarita_schwinger, index_twisted_cotangent,
    IndexReport, ManifoldDescriptor,
};
use crate::solutions::{monogenic_basis, rs_solution_basis, rs_structure};
use crate::spectra::{dirac_spectrum, hsd_spectrum, SpectrumRow};
use crate::verify;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "spinorlab",
    version,
    about = "Exact-arithmetic toolkit for first-order conformally invariant spinor operators",
    after_help = "The SPINORLAB_MAX_DEGREE environment variable raises the homogeneity-degree \
                  caps of `solve` (it never lowers them); expect rapidly growing runtimes."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate sphere spectra of the Dirac (j=0) or higher-spin (j≥1) operators
    Spectra(SpectraArgs),
    /// Compute homogeneous solution spaces, optionally with their decomposition
    Solve(SolveArgs),
    /// Evaluate a topological index from a manifold descriptor file
    Index(IndexArgs),
    /// Run the deterministic self-verification battery
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum SolveKind {
    Monogenic,
    Rs,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Operator {
    /// Spin-1/2 Dirac operator
    Dirac,
    /// Dirac operator twisted by the complexified cotangent bundle
    Twisted,
    /// Spin-3/2 Rarita-Schwinger operator
    Rs,
    /// Higher-spin operator D_{(2j+1)/2}; requires --j
    Hsd,
}

#[derive(Args, Debug)]
pub struct SpectraArgs {
    /// Sphere dimension n (the operator lives on S^n)
    #[arg(long)]
    pub n: usize,
    /// Operator index: 0 for Dirac, j ≥ 1 for the spin-(2j+1)/2 family
    #[arg(long, default_value_t = 0)]
    pub j: usize,
    /// Largest level l to tabulate
    #[arg(long, default_value_t = 6)]
    pub lmax: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output to a file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Ambient dimension m of the flat space
    #[arg(long)]
    pub m: usize,
    /// Homogeneity degree k
    #[arg(long)]
    pub k: usize,
    /// Which solution space: spherical monogenics or spin-3/2 fields
    #[arg(long, value_enum)]
    pub kind: SolveKind,
    /// Also compute the three-part decomposition and direct-sum verdict (rs only)
    #[arg(long)]
    pub decompose: bool,
    /// Dump the computed basis (text and json formats only)
    #[arg(long)]
    pub basis: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output to a file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct IndexArgs {
    /// Path to a manifold descriptor JSON file
    #[arg(long)]
    pub descriptor: PathBuf,
    /// Operator whose index to evaluate
    #[arg(long, value_enum)]
    pub operator: Operator,
    /// Operator index j for --operator hsd
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write output to a file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run only checks whose name contains this substring
    #[arg(long)]
    pub only: Option<String>,
    /// Multiplier for the number of randomized cases per check
    #[arg(long, default_value_t = 1)]
    pub scale: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output to a file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Command {
    fn out_path(&self) -> Option<&PathBuf> {
        match self {
            Command::Spectra(a) => a.out.as_ref(),
            Command::Solve(a) => a.out.as_ref(),
            Command::Index(a) => a.out.as_ref(),
            Command::Verify(a) => a.out.as_ref(),
        }
    }
}

/// A command's rendered output plus the process exit code to use.
#[derive(Debug)]
pub struct CommandOutput {
    pub body: String,
    pub code: i32,
}

/// A command that could not run; `code` follows the exit-code contract.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

/// Library errors raised while *running* a command: descriptor problems are
/// input-file errors, everything else is a usage (parameter-range) error.
fn classify(e: Error) -> Failure {
    match e {
        Error::InvalidDescriptor(_) => input_error(e.to_string()),
        _ => usage(e.to_string()),
    }
}

fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON rendering cannot fail");
    s.push('\n');
    s
}

/// Parses and runs `argv`, printing output/diagnostics; returns the exit code.
pub fn run_from<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(output) => {
            if let Some(path) = cli.command.out_path() {
                if let Err(e) = std::fs::write(path, &output.body) {
                    eprintln!(
                        "{}",
                        json!({ "error": format!("cannot write {}: {e}", path.display()) })
                    );
                    return EXIT_INPUT;
                }
            } else {
                print!("{}", output.body);
            }
            output.code
        }
        Err(f) => {
            eprintln!("{}", json!({ "error": f.message }));
            f.code
        }
    }
}

/// Runs one command and renders its output; pure apart from file reads in
/// `index`, so identical arguments yield byte-identical bodies.
pub fn execute(command: &Command) -> Result<CommandOutput, Failure> {
    match command {
        Command::Spectra(a) => cmd_spectra(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Index(a) => cmd_index(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn cmd_spectra(a: &SpectraArgs) -> Result<CommandOutput, Failure> {
    let rows = if a.j == 0 {
        dirac_spectrum(a.n, a.lmax)
    } else {
        hsd_spectrum(a.n, a.j, a.lmax)
    }
    .map_err(classify)?;
    let body = match a.format {
        Format::Csv => {
            let mut out = String::from(SpectrumRow::CSV_HEADER);
            out.push('\n');
            for row in &rows {
                out.push_str(&row.to_csv_line());
                out.push('\n');
            }
            out
        }
        Format::Json => pretty(&json!({
            "n": a.n,
            "j": a.j,
            "lmax": a.lmax,
            "rows": rows.iter().map(SpectrumRow::to_json_value).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = format!(
                "{:>4} {:>3} {:>3} {:>6} {:>4} {:>16} {:>14}\n",
                "n", "j", "l", "series", "sign", "eigenvalue", "multiplicity"
            );
            for row in &rows {
                out.push_str(&format!(
                    "{:>4} {:>3} {:>3} {:>6} {:>4} {:>16} {:>14}\n",
                    row.n,
                    row.j,
                    row.l,
                    row.series.to_string(),
                    row.sign.to_string(),
                    rational_str(&row.eigenvalue()),
                    row.multiplicity.to_string(),
                ));
            }
            out
        }
    };
    Ok(CommandOutput { body, code: EXIT_OK })
}

fn cmd_solve(a: &SolveArgs) -> Result<CommandOutput, Failure> {
    if a.decompose && a.kind != SolveKind::Rs {
        return Err(usage("--decompose requires --kind rs"));
    }
    if a.basis && a.format == Format::Csv {
        return Err(usage("--basis is not available in csv format; use text or json"));
    }
    let space = crate::clifford::SpinorSpace::new(a.m).map_err(classify)?;

    // Basis lines share the canonical field serialization across formats.
    let mut basis_lines: Vec<String> = Vec::new();
    let body = match (a.kind, a.decompose) {
        (SolveKind::Monogenic, _) => {
            let mono = monogenic_basis(&space, a.k).map_err(classify)?;
            if a.basis {
                basis_lines = mono.basis.iter().map(|f| f.to_string()).collect();
            }
            render_dims(a, &[("dim", mono.dim())], &basis_lines, "monogenic")
        }
        (SolveKind::Rs, false) => {
            let rs = rs_solution_basis(&space, a.k).map_err(classify)?;
            if a.basis {
                basis_lines = rs.basis.iter().map(|f| f.to_string()).collect();
            }
            render_dims(a, &[("dim", rs.dim())], &basis_lines, "rs")
        }
        (SolveKind::Rs, true) => {
            let mono_dim = monogenic_basis(&space, a.k).map_err(classify)?.dim();
            let structure = rs_structure(&space, a.k).map_err(classify)?;
            let report = structure.verify_direct_sum();
            if a.basis {
                basis_lines = structure.space.basis.iter().map(|f| f.to_string()).collect();
            }
            let columns: [(&str, usize); 5] = [
                ("dim_monogenic", mono_dim),
                ("dim_rs", report.dim_space),
                ("dim_m1", report.dim_m1),
                ("dim_m2", report.dim_m2),
                ("dim_m3", report.dim_m3),
            ];
            match a.format {
                Format::Csv => {
                    let header: Vec<&str> = ["m", "k"]
                        .into_iter()
                        .chain(columns.iter().map(|(name, _)| *name))
                        .chain(["direct_sum", "spans_solution_space"])
                        .collect();
                    let values: Vec<String> = [a.m.to_string(), a.k.to_string()]
                        .into_iter()
                        .chain(columns.iter().map(|(_, v)| v.to_string()))
                        .chain([
                            report.is_direct_sum.to_string(),
                            report.spans_solution_space.to_string(),
                        ])
                        .collect();
                    format!("{}\n{}\n", header.join(","), values.join(","))
                }
                Format::Json => {
                    let mut obj = json!({
                        "m": a.m,
                        "k": a.k,
                        "kind": "rs",
                        "direct_sum": report.is_direct_sum,
                        "spans_solution_space": report.spans_solution_space,
                    });
                    for (name, v) in columns {
                        obj[name] = json!(v);
                    }
                    if a.basis {
                        obj["basis"] = json!(basis_lines);
                    }
                    pretty(&obj)
                }
                Format::Text => {
                    let mut out = format!("m={} k={} kind=rs\n", a.m, a.k);
                    for (name, v) in columns {
                        out.push_str(&format!("{name:<22} {v}\n"));
                    }
                    out.push_str(&format!(
                        "{:<22} {}\n{:<22} {}\n",
                        "direct_sum",
                        report.is_direct_sum,
                        "spans_solution_space",
                        report.spans_solution_space
                    ));
                    push_basis_text(&mut out, &basis_lines);
                    out
                }
            }
        }
    };
    Ok(CommandOutput { body, code: EXIT_OK })
}

fn render_dims(
    a: &SolveArgs,
    columns: &[(&str, usize)],
    basis_lines: &[String],
    kind: &str,
) -> String {
    match a.format {
        Format::Csv => {
            let header: Vec<&str> = ["m", "k"]
                .into_iter()
                .chain(columns.iter().map(|(name, _)| *name))
                .collect();
            let values: Vec<String> = [a.m.to_string(), a.k.to_string()]
                .into_iter()
                .chain(columns.iter().map(|(_, v)| v.to_string()))
                .collect();
            format!("{}\n{}\n", header.join(","), values.join(","))
        }
        Format::Json => {
            let mut obj = json!({ "m": a.m, "k": a.k, "kind": kind });
            for (name, v) in columns {
                obj[*name] = json!(v);
            }
            if a.basis {
                obj["basis"] = json!(basis_lines);
            }
            pretty(&obj)
        }
        Format::Text => {
            let dims: Vec<String> = columns
                .iter()
                .map(|(name, v)| format!("{name}={v}"))
                .collect();
            let mut out = format!("m={} k={} kind={kind} {}\n", a.m, a.k, dims.join(" "));
            push_basis_text(&mut out, basis_lines);
            out
        }
    }
}

fn push_basis_text(out: &mut String, basis_lines: &[String]) {
    if basis_lines.is_empty() {
        return;
    }
    out.push_str("basis:\n");
    for (i, line) in basis_lines.iter().enumerate() {
        out.push_str(&format!("  [{i}] {line}\n"));
    }
}

fn cmd_index(a: &IndexArgs) -> Result<CommandOutput, Failure> {
    let text = std::fs::read_to_string(&a.descriptor).map_err(|e| {
        input_error(format!("cannot read {}: {e}", a.descriptor.display()))
    })?;
    let descriptor = ManifoldDescriptor::from_json_str(&text).map_err(|e| {
        input_error(format!("{}: {e}", a.descriptor.display()))
    })?;
    let report = match a.operator {
        Operator::Hsd => {
            let j = a
                .j
                .ok_or_else(|| usage("--operator hsd requires --j"))?;
            index_hsd(&descriptor, j)
        }
        Operator::Dirac => {
            reject_j(a)?;
            index_dirac(&descriptor)
        }
        Operator::Twisted => {
            reject_j(a)?;
            index_twisted_cotangent(&descriptor)
        }
        Operator::Rs => {
            reject_j(a)?;
            index_rarita_schwinger(&descriptor)
        }
    }
    .map_err(classify)?;
    let body = render_index(&report, a.format);
    Ok(CommandOutput { body, code: EXIT_OK })
}

fn reject_j(a: &IndexArgs) -> Result<(), Failure> {
    if a.j.is_some() {
        return Err(usage("--j is only meaningful with --operator hsd"));
    }
    Ok(())
}

fn render_index(report: &IndexReport, format: Format) -> String {
    match format {
        Format::Json => pretty(&report.to_json()),
        Format::Text => format!("{report}\n"),
        Format::Csv => {
            let note = report.note.clone().unwrap_or_default();
            format!(
                "operator,dim,symbolic_class,index,is_integer,note\n{},{},{},{},{},{}\n",
                csv_escape(&report.operator),
                report.dim,
                csv_escape(&report.symbolic_class),
                rational_str(&report.index),
                report.is_integer,
                csv_escape(&note),
            )
        }
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<CommandOutput, Failure> {
    let report = verify::run(a.only.as_deref(), a.scale).map_err(classify)?;
    let body = match a.format {
        Format::Text => report.render_text(),
        Format::Json => pretty(&report.to_json()),
        Format::Csv => {
            let mut out = String::from("name,passed,cases,detail\n");
            for r in &report.results {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.name,
                    r.passed,
                    r.cases,
                    csv_escape(&r.detail)
                ));
            }
            out
        }
    };
    let code = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILURE
    };
    Ok(CommandOutput { body, code })
}
