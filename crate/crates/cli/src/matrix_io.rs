//! Matrix files: 8 lines of 8 whitespace-separated decimals, `#` starts a comment.

use std::fmt::Write;

use triality_synth::matlib::{polar, RealMatrix};

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

pub fn parse_matrix(src: &str) -> Result<RealMatrix, ParseError> {
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(8);
    let mut last = 0;
    for (k, raw) in src.lines().enumerate() {
        last = k + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let row = text
            .split_whitespace()
            .map(|t| match t.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(x),
                _ => Err(ParseError { line: k + 1, msg: format!("not a finite number: {t:?}") }),
            })
            .collect::<Result<Vec<f64>, _>>()?;
        if row.len() != 8 {
            return Err(ParseError { line: k + 1, msg: format!("expected 8 entries, found {}", row.len()) });
        }
        if rows.len() == 8 {
            return Err(ParseError { line: k + 1, msg: "more than 8 rows".into() });
        }
        rows.push(row);
    }
    if rows.len() != 8 {
        return Err(ParseError { line: last, msg: format!("expected 8 rows, found {}", rows.len()) });
    }
    Ok(RealMatrix::from_rows(&rows))
}

pub fn format_matrix(m: &RealMatrix, comment: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(c) = comment {
        writeln!(s, "# {c}").unwrap();
    }
    for i in 0..m.nrows() {
        let row: Vec<String> = m.row(i).iter().map(|x| format!("{x:+.17e}")).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

/// Outcome of the SO(8) ingestion gate.
pub enum Ingested {
    Exact(RealMatrix),
    /// Polar-projected, with the Frobenius distance moved.
    Projected(RealMatrix, f64),
}

/// Accepts V when ‖VᵀV − I‖ ≤ tol and det V > 0; anything not already orthogonal to
/// 1e-12 is replaced by its polar factor. Errors carry (defect, det).
pub fn ingest_special_orthogonal(v: RealMatrix, tol: f64) -> Result<Ingested, (f64, f64)> {
    let defect = v.orthogonality_defect();
    let det = v.det();
    if defect > tol || det <= 0.0 {
        return Err((defect, det));
    }
    if defect <= 1e-12 {
        return Ok(Ingested::Exact(v));
    }
    let p = polar(&v);
    let moved = (&p - &v).frobenius_norm();
    Ok(Ingested::Projected(p, moved))
}
