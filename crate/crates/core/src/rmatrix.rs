//! Combinatorial R-matrix between two single columns, computed on bit words.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::{tensor_lower, tensor_raise, tensor_stats, CrystalLetter};
use crate::error::{Error, Result};
use crate::tableaux::ColumnTableau;

/// A letter of the four-element A_1 crystal `{00, 10, 01, 11}`.
///
/// The first bit records membership in the first column, the second bit in
/// the second. `e(01) = 10`, `f(10) = 01`; every other operator is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BitLetter {
    B00,
    B10,
    B01,
    B11,
}

impl BitLetter {
    pub fn from_bits(first: bool, second: bool) -> Self {
        match (first, second) {
            (false, false) => BitLetter::B00,
            (true, false) => BitLetter::B10,
            (false, true) => BitLetter::B01,
            (true, true) => BitLetter::B11,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            BitLetter::B00 => (false, false),
            BitLetter::B10 => (true, false),
            BitLetter::B01 => (false, true),
            BitLetter::B11 => (true, true),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BitLetter::B00 => "00",
            BitLetter::B10 => "10",
            BitLetter::B01 => "01",
            BitLetter::B11 => "11",
        }
    }
}

// Only the single A_1 index is meaningful; the index argument is ignored.
impl CrystalLetter for BitLetter {
    fn eps(&self, _i: usize) -> i64 {
        (*self == BitLetter::B01) as i64
    }

    fn phi(&self, _i: usize) -> i64 {
        (*self == BitLetter::B10) as i64
    }

    fn raise(&self, _i: usize) -> Option<Self> {
        (*self == BitLetter::B01).then_some(BitLetter::B10)
    }

    fn lower(&self, _i: usize) -> Option<Self> {
        (*self == BitLetter::B10).then_some(BitLetter::B01)
    }
}

/// `b_n ⊗ b_{n-1} ⊗ ... ⊗ b_1`; `letters()[0]` is `b_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitWord {
    letters: Vec<BitLetter>,
}

impl BitWord {
    pub fn new(letters: Vec<BitLetter>) -> Self {
        BitWord { letters }
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[BitLetter] {
        &self.letters
    }

    /// The letter recording entry `a`, `1 <= a <= n`.
    pub fn letter(&self, a: usize) -> BitLetter {
        self.letters[self.letters.len() - a]
    }

    pub fn eps(&self) -> i64 {
        tensor_stats(&self.letters, 1).0
    }

    pub fn phi(&self) -> i64 {
        tensor_stats(&self.letters, 1).1
    }

    pub fn raise(&self) -> Option<BitWord> {
        tensor_raise(&self.letters, 1).map(BitWord::new)
    }

    pub fn lower(&self) -> Option<BitWord> {
        tensor_lower(&self.letters, 1).map(BitWord::new)
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.letters.iter().map(|l| l.as_str()).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

impl FromStr for BitWord {
    type Err = Error;

    /// Accepts `⊗`, `x` or whitespace between letters.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c == '⊗' || c == 'x' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t {
                "00" => Ok(BitLetter::B00),
                "10" => Ok(BitLetter::B10),
                "01" => Ok(BitLetter::B01),
                "11" => Ok(BitLetter::B11),
                other => Err(Error::InvalidInput(format!("bad bit letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.is_empty() {
            return Err(Error::InvalidInput("empty bit word".into()));
        }
        Ok(BitWord::new(letters))
    }
}

pub fn encode(first: &ColumnTableau, second: &ColumnTableau, n: usize) -> Result<BitWord> {
    for col in [first, second] {
        if let Some(&bad) = col.entries().iter().find(|&&e| e > n) {
            return Err(Error::InvalidTableau(format!(
                "entry {bad} exceeds n = {n}"
            )));
        }
    }
    let letters = (1..=n)
        .rev()
        .map(|a| BitLetter::from_bits(first.contains(a), second.contains(a)))
        .collect();
    Ok(BitWord::new(letters))
}

pub fn decode(w: &BitWord) -> (ColumnTableau, ColumnTableau) {
    let n = w.n();
    let mut first = Vec::new();
    let mut second = Vec::new();
    for a in 1..=n {
        let (x, y) = w.letter(a).bits();
        if x {
            first.push(a);
        }
        if y {
            second.push(a);
        }
    }
    (
        ColumnTableau::new(n, first).expect("increasing by construction"),
        ColumnTableau::new(n, second).expect("increasing by construction"),
    )
}

/// The bit words before and after the A_1 operator power, with the decoded pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTrace {
    pub bits_in: BitWord,
    pub bits_out: BitWord,
    pub first: ColumnTableau,
    pub second: ColumnTableau,
}

/// `sigma(first ⊗ second) = second' ⊗ first'` with sizes swapped.
pub fn sigma(
    first: &ColumnTableau,
    second: &ColumnTableau,
    n: usize,
) -> Result<(ColumnTableau, ColumnTableau)> {
    sigma_trace(first, second, n).map(|t| (t.first, t.second))
}

pub fn sigma_trace(first: &ColumnTableau, second: &ColumnTableau, n: usize) -> Result<SigmaTrace> {
    for col in [first, second] {
        if col.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: col.n(),
            });
        }
        col.check_crystal()?;
    }
    let (k, l) = (first.len(), second.len());
    let bits_in = encode(first, second, n)?;
    let mut w = bits_in.clone();
    let (steps, up) = if k <= l {
        (l - k, true)
    } else {
        (k - l, false)
    };
    for step in 0..steps {
        let next = if up { w.raise() } else { w.lower() };
        w = next.ok_or_else(|| {
            Error::Internal(format!(
                "A_1 operator undefined at step {} of {steps} on {bits_in}",
                step + 1
            ))
        })?;
    }
    let (a, b) = decode(&w);
    Ok(SigmaTrace {
        bits_in,
        bits_out: w,
        first: a,
        second: b,
    })
}

/// JSON payload for the R-matrix command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaRequest {
    pub n: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaResponse {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub bits_in: String,
    pub bits_out: String,
}

impl SigmaRequest {
    pub fn run(&self) -> Result<SigmaResponse> {
        let first = ColumnTableau::new(self.n, self.first.clone())?;
        let second = ColumnTableau::new(self.n, self.second.clone())?;
        let t = sigma_trace(&first, &second, self.n)?;
        Ok(SigmaResponse {
            first: t.first.entries().to_vec(),
            second: t.second.entries().to_vec(),
            bits_in: t.bits_in.to_string(),
            bits_out: t.bits_out.to_string(),
        })
    }
}
