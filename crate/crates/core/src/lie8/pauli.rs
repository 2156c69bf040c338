use std::fmt;
use std::str::FromStr;

use super::skew::{basis_pairs, SkewSym8};
use super::tau::tau;
use super::LieError;
use crate::matlib::{ComplexMatrix, RealMatrix, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> ComplexMatrix {
        let (o, l, i) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 1.0));
        let e = match self {
            Pauli::I => [l, o, o, l],
            Pauli::X => [o, l, l, o],
            Pauli::Y => [o, -i, i, o],
            Pauli::Z => [l, o, o, -l],
        };
        ComplexMatrix::from_row_slice(2, 2, &e)
    }

    fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Three-letter Pauli word abc, realized as i·σ_a⊗σ_b⊗σ_c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliWord(pub [Pauli; 3]);

impl PauliWord {
    pub fn matrix(&self) -> ComplexMatrix {
        let [a, b, c] = self.0;
        a.matrix().kron(&b.matrix()).kron(&c.matrix()).scale(C64::new(0.0, 1.0))
    }

    pub fn y_count(&self) -> usize {
        self.0.iter().filter(|&&p| p == Pauli::Y).count()
    }

    /// The real skew-symmetric form, available exactly when the number of Y letters is odd.
    pub fn real_matrix(&self) -> Option<RealMatrix> {
        (self.y_count() % 2 == 1).then(|| self.matrix().real_part())
    }

    pub fn skew(&self) -> Option<SkewSym8> {
        self.real_matrix().map(|m| SkewSym8::from_matrix(&m).expect("odd-Y word is skew"))
    }

    /// All 64 words in lexicographic I < X < Y < Z order.
    pub fn all() -> Vec<PauliWord> {
        let mut out = Vec::with_capacity(64);
        for a in Pauli::ALL {
            for b in Pauli::ALL {
                for c in Pauli::ALL {
                    out.push(PauliWord([a, b, c]));
                }
            }
        }
        out
    }

    /// The 28 words with an odd number of Y letters: a basis of so(8).
    pub fn odd_y() -> Vec<PauliWord> {
        Self::all().into_iter().filter(|w| w.y_count() % 2 == 1).collect()
    }
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.0 {
            write!(f, "{}", p.letter())?;
        }
        Ok(())
    }
}

impl FromStr for PauliWord {
    type Err = LieError;
    fn from_str(s: &str) -> Result<Self, LieError> {
        let letters: Vec<Pauli> = s
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                _ => Err(LieError::BadPauliWord(s.to_string())),
            })
            .collect::<Result<_, _>>()?;
        let arr: [Pauli; 3] = letters.try_into().map_err(|_| LieError::BadPauliWord(s.to_string()))?;
        Ok(PauliWord(arr))
    }
}

/// τ(word) = sign · 2 · f_ji.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    pub word: PauliWord,
    pub sign: i8,
    pub j: usize,
    pub i: usize,
}

impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{s}{} -> f_{}{}", self.word, self.j, self.i)
    }
}

/// Image of every odd-Y Pauli word under τ, sorted by (j, i).
/// Each image is checked to be exactly ±2 times a single basis element.
pub fn pauli_triality_table() -> Result<Vec<TableEntry>, LieError> {
    let mut out = Vec::with_capacity(28);
    for word in PauliWord::odd_y() {
        let img = tau().apply(&word.skew().expect("odd-Y"));
        let hits: Vec<usize> = (0..28).filter(|&k| img.coeffs[k].abs() > 1e-9).collect();
        let [k] = hits[..] else {
            return Err(LieError::ConstructionInconsistent(format!("τ({word}) is not a single basis element")));
        };
        let c = img.coeffs[k];
        if (c.abs() - 2.0).abs() > 1e-12 {
            return Err(LieError::ConstructionInconsistent(format!("τ({word}) has coefficient {c}")));
        }
        let (j, i) = basis_pairs()[k];
        out.push(TableEntry { word, sign: if c > 0.0 { 1 } else { -1 }, j, i });
    }
    out.sort_by_key(|e| (e.j, e.i));
    Ok(out)
}
