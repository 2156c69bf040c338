use serde::Serialize;

use triality_synth::synth::{Census, VerifyReport};

#[derive(Debug, Serialize)]
pub struct Parameters {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    /// Four controlled-X angles, then the four leftover Euler angles.
    pub gamma: Vec<f64>,
    /// Each gate as (a0, a1, a2, a3) with U = a0·I − i(a1 X + a2 Y + a3 Z).
    pub su2: Vec<[f64; 4]>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub error: f64,
    /// Unit λ minimizing ‖λ·evaluate(circuit) − V‖, as [re, im].
    pub phase: [f64; 2],
    pub cnot_count: usize,
    pub rotation_count: usize,
    pub parameters: Parameters,
}

impl Report {
    pub fn new(r: &VerifyReport, census: &Census) -> Self {
        Report {
            error: r.error,
            phase: [r.phase.re, r.phase.im],
            cnot_count: r.cnots,
            rotation_count: r.rotations,
            parameters: Parameters {
                alpha: census.alpha.to_vec(),
                beta: census.beta.to_vec(),
                gamma: census.gamma.to_vec(),
                su2: census.su2.iter().map(|u| u.0).collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let p = &self.parameters;
        let list = |v: &[f64]| v.iter().map(|x| format!("{x:.12}")).collect::<Vec<_>>().join(" ");
        let mut s = format!(
            "error: {:.3e}\nphase: {:.12} {:.12}\ncnots: {}\nrotations: {}\nparameters: {}\n",
            self.error,
            self.phase[0],
            self.phase[1],
            self.cnot_count,
            self.rotation_count,
            p.alpha.len() + p.beta.len() + p.gamma.len() + 3 * p.su2.len()
        );
        s += &format!("alpha: {}\nbeta: {}\ngamma: {}\n", list(&p.alpha), list(&p.beta), list(&p.gamma));
        for (k, u) in p.su2.iter().enumerate() {
            s += &format!("su2[{k}]: {}\n", list(u));
        }
        s
    }
}
