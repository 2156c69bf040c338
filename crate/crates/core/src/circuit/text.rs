use std::fmt::Write;

use crate::matlib::{ComplexMatrix, C64};

use super::gate::{Circuit, Gate};
use super::su2::{zyz, Axis, Su2};
use super::CircuitError;

const HEADER: &str = "# gates in application order: the first line acts first";

/// Plain-text form: one gate per line (`CX c t`, `RX q θ`, `RY q θ`, `RZ q θ`,
/// `U q re00 im00 re01 im01 re10 im10 re11 im11`), plus `# qubits:` and `# phase:` lines.
pub fn emit_text(c: &Circuit) -> String {
    let mut s = String::new();
    writeln!(s, "{HEADER}").unwrap();
    writeln!(s, "# qubits: {}", c.n_qubits).unwrap();
    writeln!(s, "# phase: {:.16} {:.16}", c.phase.re, c.phase.im).unwrap();
    for g in &c.gates {
        match *g {
            Gate::Cnot { control, target } => writeln!(s, "CX {control} {target}"),
            Gate::AxisRotation { axis, qubit, theta } => writeln!(s, "R{} {qubit} {theta:.16}", axis.letter()),
            Gate::SingleQubit { qubit, matrix } => {
                let m = matrix.matrix();
                write!(s, "U {qubit}").unwrap();
                for z in m.as_slice() {
                    write!(s, " {:.16} {:.16}", z.re, z.im).unwrap();
                }
                writeln!(s)
            }
        }
        .unwrap();
    }
    s
}

/// Inverse of [`emit_text`]; unknown `#` lines are comments. Defaults to 3 qubits.
pub fn parse_text(src: &str) -> Result<Circuit, CircuitError> {
    let mut c = Circuit::new(3);
    for (k, raw) in src.lines().enumerate() {
        let line = k + 1;
        let err = |msg: String| CircuitError::ParseError { line, msg };
        let text = raw.trim();
        if let Some(comment) = text.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(v) = comment.strip_prefix("qubits:") {
                c.n_qubits = v.trim().parse().map_err(|_| err(format!("bad qubit count '{}'", v.trim())))?;
                if c.n_qubits == 0 || c.n_qubits > 16 {
                    return Err(err(format!("unsupported qubit count {}", c.n_qubits)));
                }
            } else if let Some(v) = comment.strip_prefix("phase:") {
                let nums = parse_floats(v, line)?;
                if nums.len() != 2 {
                    return Err(err("phase needs two numbers".into()));
                }
                let p = C64::new(nums[0], nums[1]);
                if (p.norm() - 1.0).abs() > 1e-12 {
                    return Err(err("phase is not a unit complex number".into()));
                }
                c.phase = p;
            }
            continue;
        }
        if text.is_empty() {
            continue;
        }
        let mut tok = text.split_whitespace();
        let op = tok.next().unwrap().to_ascii_uppercase();
        let rest: Vec<&str> = tok.collect();
        let qubit = |s: &str| s.parse::<usize>().map_err(|_| err(format!("bad qubit index '{s}'")));
        let gate = match op.as_str() {
            "CX" | "CNOT" => {
                if rest.len() != 2 {
                    return Err(err("CX takes two qubits".into()));
                }
                Gate::cx(qubit(rest[0])?, qubit(rest[1])?)
            }
            "RX" | "RY" | "RZ" => {
                if rest.len() != 2 {
                    return Err(err(format!("{op} takes a qubit and an angle")));
                }
                let axis = Axis::from_index(usize::from(op.as_bytes()[1] - b'X'));
                let theta = parse_floats(rest[1], line)?[0];
                Gate::AxisRotation { axis, qubit: qubit(rest[0])?, theta }
            }
            "U" => {
                if rest.len() != 9 {
                    return Err(err("U takes a qubit and eight numbers".into()));
                }
                let v = parse_floats(&rest[1..].join(" "), line)?;
                let entries: Vec<C64> = v.chunks(2).map(|p| C64::new(p[0], p[1])).collect();
                let m = ComplexMatrix::from_row_slice(2, 2, &entries);
                let su = Su2::from_matrix(&m, 1e-12).map_err(|_| err("U matrix is not in SU(2)".into()))?;
                Gate::u(qubit(rest[0])?, su)
            }
            _ => return Err(err(format!("unknown gate '{op}'"))),
        };
        c.push(gate);
    }
    c.validate().map_err(|e| match e {
        CircuitError::BadQubitIndex { gate, .. } => CircuitError::ParseError {
            line: gate_line(src, gate),
            msg: e.to_string(),
        },
        other => other,
    })?;
    Ok(c)
}

fn parse_floats(s: &str, line: usize) -> Result<Vec<f64>, CircuitError> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CircuitError::ParseError { line, msg: format!("bad number '{t}'") })
        })
        .collect()
}

/// Line number of the k-th gate line.
fn gate_line(src: &str, k: usize) -> usize {
    src.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .nth(k)
        .map_or(0, |(i, _)| i + 1)
}

/// OpenQASM 2.0 using only cx, rx, ry, rz; qubits are 0-indexed. SU(2) gates are
/// expanded as R_z R_y R_z. The global phase is recorded in a comment.
pub fn emit_qasm(c: &Circuit) -> String {
    let mut s = String::new();
    writeln!(s, "OPENQASM 2.0; include \"qelib1.inc\";").unwrap();
    writeln!(s, "// global phase: {:.16} {:.16}", c.phase.re, c.phase.im).unwrap();
    writeln!(s, "qreg q[{}];", c.n_qubits).unwrap();
    for g in &c.gates {
        match *g {
            Gate::Cnot { control, target } => writeln!(s, "cx q[{}],q[{}];", control - 1, target - 1).unwrap(),
            Gate::AxisRotation { axis, qubit, theta } => {
                writeln!(s, "r{}({theta:.16}) q[{}];", axis.letter().to_ascii_lowercase(), qubit - 1).unwrap()
            }
            Gate::SingleQubit { qubit, matrix } => {
                let (phi, theta, psi) = zyz(&matrix);
                for (name, t) in [("rz", psi), ("ry", theta), ("rz", phi)] {
                    writeln!(s, "{name}({t:.16}) q[{}];", qubit - 1).unwrap();
                }
            }
        }
    }
    s
}
