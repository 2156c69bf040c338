//! `so8synth`: synthesize real 3-qubit gates (SO(8) matrices) into CNOT + rotation circuits.

mod matrix_io;
mod report;
mod selftest;

use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use triality_synth::batch::random_inputs;
use triality_synth::circuit::{emit_qasm, emit_text, parse_text};
use triality_synth::lie8::{decode_reference_tau, pauli_triality_table, tau, DIM};
use triality_synth::synth::{synthesize, verify, SynthError};

use matrix_io::{format_matrix, ingest_special_orthogonal, parse_matrix, Ingested};
use report::Report;

const DEFAULT_TOL: f64 = 1e-8;

#[derive(Parser)]
#[command(name = "so8synth", version, about = "Synthesize SO(8) matrices into 3-qubit circuits with at most 14 CNOTs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Qasm,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a circuit for the matrix in INPUT.
    Decompose {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Orthogonality tolerance on input and verification threshold on output.
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
        tol: f64,
    },
    /// Compare a circuit file against a matrix file.
    Verify {
        circuit: PathBuf,
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
        tol: f64,
    },
    /// Apply the triality automorphism T (power 1) or T² = T⁻¹ (power 2).
    Triality {
        input: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        power: u8,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
        tol: f64,
    },
    /// Print the Pauli word table and the 28×28 τ matrix.
    Tables,
    /// Deterministic random SO(8) matrices; entry k uses seed + k.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Output file (count 1) or directory (count > 1).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in invariant suite.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Corrupt one column of τ before testing.
        #[arg(long, hide = true)]
        inject_tau_flip: Option<usize>,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}

/// Exit status plus a message for stderr.
struct Failure {
    code: u8,
    msg: String,
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NOT_SO: u8 = 3;
const EXIT_VERIFY: u8 = 4;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

/// Writes via a sibling temporary file and a rename, so readers never see partial output.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let io_fail = |e: io::Error| fail(1, format!("{}: {e}", path.display()));
    let name = path.file_name().ok_or_else(|| fail(1, format!("{}: not a file path", path.display())))?;
    let tmp = path.with_file_name(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    fs::write(&tmp, contents).map_err(io_fail)?;
    fs::rename(&tmp, path).map_err(io_fail)
}

fn emit(out: Option<&Path>, contents: &str) -> Result<(), Failure> {
    match out {
        Some(p) => write_atomic(p, contents),
        None => io::stdout().write_all(contents.as_bytes()).map_err(|e| fail(1, e.to_string())),
    }
}

fn load_special_orthogonal(path: &Path, tol: f64) -> Result<triality_synth::matlib::RealMatrix, Failure> {
    let v = parse_matrix(&read(path)?).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    match ingest_special_orthogonal(v, tol) {
        Ok(Ingested::Exact(v)) => Ok(v),
        Ok(Ingested::Projected(v, moved)) => {
            eprintln!("note: input projected onto SO(8), moved by {moved:.3e}");
            Ok(v)
        }
        Err((defect, det)) => Err(fail(
            EXIT_NOT_SO,
            format!("{}: not in SO(8) (orthogonality defect {defect:.3e}, det {det:.6})", path.display()),
        )),
    }
}

fn decompose(input: &Path, format: Format, out: Option<&Path>, tol: f64) -> Result<(), Failure> {
    let v = load_special_orthogonal(input, tol)?;
    let s = synthesize(&v).map_err(|e| match e {
        SynthError::NotSpecialOrthogonal(_) => fail(EXIT_NOT_SO, e.to_string()),
        _ => fail(EXIT_VERIFY, format!("synthesis failed: {e}")),
    })?;
    let report = Report::new(&s.report, &s.tree.census);
    let data = match format {
        Format::Text => emit_text(&s.circuit),
        Format::Qasm => emit_qasm(&s.circuit),
        Format::Json => report.to_json(),
    };
    emit(out, &data)?;
    if !matches!(format, Format::Json) {
        if out.is_some() {
            print!("{}", report.to_text());
        } else {
            eprint!("{}", report.to_text());
        }
    }
    if report.error > tol || report.cnot_count > 14 {
        return Err(fail(EXIT_VERIFY, format!("verification failed: error {:.3e}", report.error)));
    }
    Ok(())
}

fn verify_cmd(circuit: &Path, matrix: &Path, tol: f64) -> Result<(), Failure> {
    let c = parse_text(&read(circuit)?).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", circuit.display())))?;
    let v = parse_matrix(&read(matrix)?).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", matrix.display())))?;
    let r = verify(&v, &c).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    println!(
        "error: {:.3e}\nphase: {:.12} {:.12}\ncnots: {}\nrotations: {}",
        r.error, r.phase.re, r.phase.im, r.cnots, r.rotations
    );
    if r.error > tol {
        return Err(fail(EXIT_MISMATCH, format!("circuit does not match: error {:.3e} > {tol:e}", r.error)));
    }
    Ok(())
}

fn triality_cmd(input: &Path, power: u8, out: Option<&Path>, tol: f64) -> Result<(), Failure> {
    let v = load_special_orthogonal(input, tol)?;
    let t = tau();
    let w = if power == 1 { t.group(&v) } else { t.inverse(&v) }.map_err(|e| fail(EXIT_NOT_SO, e.to_string()))?;
    let label = if power == 1 { "T(V)" } else { "T^2(V) = T^-1(V)" };
    emit(out, &format_matrix(&w, Some(&format!("{label}, defined up to sign"))))
}

fn tables() -> Result<(), Failure> {
    let table = pauli_triality_table().map_err(|e| fail(1, e.to_string()))?;
    let mut s = format!("# Pauli word -> tau image ({} entries; tau(W) = sign * 2 f_ji)\n", table.len());
    for e in &table {
        s += &format!("{e}\n");
    }
    let m = tau().m28();
    s += "# tau in the f-basis, i-major order; + and - are ±1/2\n";
    for r in 0..DIM {
        let row: String = (0..DIM)
            .map(|c| match m[(r, c)] {
                x if x > 0.25 => '+',
                x if x < -0.25 => '-',
                _ => '0',
            })
            .collect();
        s += &row;
        s.push('\n');
    }
    let reference = (&decode_reference_tau() - m).max_abs() <= 1e-15;
    s += &format!("reference string cross-check: {}\n", if reference { "PASS" } else { "FAIL" });
    emit(None, &s)?;
    if !reference {
        return Err(fail(1, "tau disagrees with the reference string"));
    }
    Ok(())
}

fn random(seed: u64, count: usize, out: Option<&Path>) -> Result<(), Failure> {
    let mats = random_inputs(seed, count);
    let text = |k: usize| format_matrix(&mats[k], Some(&format!("random SO(8), seed {}", seed.wrapping_add(k as u64))));
    match out {
        Some(dir) if count > 1 => {
            fs::create_dir_all(dir).map_err(|e| fail(1, format!("{}: {e}", dir.display())))?;
            for k in 0..count {
                write_atomic(&dir.join(format!("matrix_{k}.txt")), &text(k))?;
            }
            Ok(())
        }
        _ => emit(out, &(0..count).map(text).collect::<Vec<_>>().join("\n")),
    }
}

fn selftest(seed: u64, count: usize, flip: Option<usize>) -> Result<(), Failure> {
    let op = match flip {
        Some(k) if k < DIM => tau().with_column_sign_flipped(k),
        Some(k) => return Err(fail(EXIT_PARSE, format!("column {k} out of range 0..{DIM}"))),
        None => tau().clone(),
    };
    let checks = selftest::run(&op, seed, count);
    for c in &checks {
        println!("[{}] {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    if failed > 0 {
        return Err(fail(1, format!("{failed} of {} checks failed", checks.len())));
    }
    println!("all {} checks passed", checks.len());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Decompose { input, format, out, tol } => decompose(input, *format, out.as_deref(), *tol),
        Command::Verify { circuit, matrix, tol } => verify_cmd(circuit, matrix, *tol),
        Command::Triality { input, power, out, tol } => triality_cmd(input, *power, out.as_deref(), *tol),
        Command::Tables => tables(),
        Command::Random { seed, count, out } => random(*seed, *count, out.as_deref()),
        Command::Selftest { seed, count, inject_tau_flip } => selftest(*seed, *count, *inject_tau_flip),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("so8synth: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
