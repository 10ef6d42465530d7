//! Integer Laurent polynomials in `q` and q-characters: formal sums of
//! residue words with Laurent coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cartan::{CartanA, RootVec};
use crate::error::{Error, Result};
use crate::tableaux::{residue_sequence, standard_tableaux, ColumnTableau};

/// An element of `Z[q, q^-1]`, stored as exponent -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentInt(BTreeMap<i64, i64>);

impl LaurentInt {
    pub fn zero() -> Self {
        LaurentInt(BTreeMap::new())
    }

    pub fn one() -> Self {
        LaurentInt::monomial(0, 1)
    }

    /// `c q^e`.
    pub fn monomial(e: i64, c: i64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, c);
        }
        LaurentInt(m)
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        LaurentInt::monomial(e, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut out = LaurentInt::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.0.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0.get(&0) == Some(&1)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentInt(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }

    /// Multiply by `q^d`.
    pub fn shift(&self, d: i64) -> Self {
        LaurentInt(self.0.iter().map(|(&e, &c)| (e + d, c)).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        LaurentInt::from_terms(self.terms().map(|(e, c)| (e, c * k)))
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|&c| c > 0)
    }

    /// Substitute `q -> q^k` (`k` may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        LaurentInt::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.0.values().sum()
    }
}

impl Add for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        self.scale(-1)
    }
}

impl Mul for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = LaurentInt::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: LaurentInt) -> LaurentInt {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

fn q_token(e: i64) -> String {
    if e == 0 {
        "1".to_string()
    } else {
        format!("q^{e}")
    }
}

impl fmt::Display for LaurentInt {
    /// Ascending exponents, explicit `q^k` tokens: `1+q^2`, `q^-1-2q^1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let body = match (mag, e) {
                (1, _) => q_token(e),
                (_, 0) => mag.to_string(),
                _ => format!("{mag}{}", q_token(e)),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for LaurentInt {
    type Err = Error;

    /// Inverse of `Display`; also accepts `q` for `q^1` and spaces.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::InvalidInput("empty Laurent polynomial".into()));
        }
        let bad = || Error::InvalidInput(format!("cannot parse Laurent polynomial {s:?}"));
        let bytes = compact.as_bytes();
        let mut out = LaurentInt::zero();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: i64 = if i > start {
                compact[start..i].parse().map_err(|_| bad())?
            } else {
                1
            };
            let mut exp = 0;
            if i < bytes.len() && bytes[i] == b'q' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[es..i].parse().map_err(|_| bad())?;
                }
            } else if i == start {
                return Err(bad());
            }
            out.add_term(exp, sign * coeff);
        }
        Ok(out)
    }
}

impl Serialize for LaurentInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn bar(p: &LaurentInt) -> LaurentInt {
    p.bar()
}

pub type Word = Vec<usize>;

/// `sum_nu c_nu(q) nu` over words of a single content.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QChar {
    n: usize,
    terms: BTreeMap<Word, LaurentInt>,
}

#[derive(Serialize, Deserialize)]
struct QCharRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    word: Word,
    coeff: LaurentInt,
}

impl Serialize for QChar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QCharRepr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| TermRepr {
                    word: w.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QChar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = QCharRepr::deserialize(d)?;
        QChar::from_terms(r.n, r.terms.into_iter().map(|t| (t.word, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

impl QChar {
    pub fn zero(n: usize) -> Self {
        QChar {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(n: usize, w: Word) -> Result<Self> {
        QChar::from_terms(n, [(w, LaurentInt::one())])
    }

    /// Sum the given terms; rejects letters outside `I` and mixed contents.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Word, LaurentInt)>,
    ) -> Result<Self> {
        let cd = CartanA::new(n)?;
        let mut out = QChar::zero(n);
        let mut content: Option<RootVec> = None;
        for (w, c) in terms {
            let wc = word_content(&w, &cd)?;
            match &content {
                None => content = Some(wc),
                Some(prev) if *prev != wc => {
                    return Err(Error::InvalidInput(format!(
                        "word {w:?} has a different content from earlier words"
                    )));
                }
                _ => {}
            }
            out.add_term(w, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, w: Word, c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[usize]) -> LaurentInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The common content of all words, `None` for the zero q-character.
    pub fn content(&self) -> Option<RootVec> {
        let cd = CartanA::new(self.n).ok()?;
        self.terms
            .keys()
            .next()
            .map(|w| word_content(w, &cd).expect("validated on insertion"))
    }

    pub fn bar(&self) -> QChar {
        QChar {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.bar()))
                .collect(),
        }
    }

    pub fn shift(&self, d: i64) -> QChar {
        QChar {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.shift(d)))
                .collect(),
        }
    }

    pub fn scale(&self, k: &LaurentInt) -> QChar {
        let mut out = QChar::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &(c * k));
        }
        out
    }

    pub fn add(&self, other: &QChar) -> Result<QChar> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QChar) -> Result<QChar> {
        self.add(&other.scale(&LaurentInt::monomial(0, -1)))
    }

    fn check_compatible(&self, other: &QChar) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        match (self.content(), other.content()) {
            (Some(a), Some(b)) if a != b => Err(Error::InvalidInput(
                "q-characters of different contents".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms.values().all(LaurentInt::is_bar_invariant)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(LaurentInt::is_nonnegative)
    }
}

impl fmt::Display for QChar {
    /// `(1+q^2)(2,1,3)+q^1(1,2,3)`; terms in lexicographic word order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let word: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            let word = format!("({})", word.join(","));
            let single = c.terms().count() == 1;
            let (e, k) = c.terms().next().expect("nonzero");
            let coeff = if single && k == 1 {
                if e == 0 {
                    String::new()
                } else {
                    q_token(e)
                }
            } else if single && k == -1 {
                if e == 0 {
                    "-".to_string()
                } else {
                    format!("-{}", q_token(e))
                }
            } else if single {
                c.to_string()
            } else {
                format!("({c})")
            };
            if idx > 0 && !coeff.starts_with('-') {
                write!(f, "+")?;
            }
            write!(f, "{coeff}{word}")?;
        }
        Ok(())
    }
}

fn word_content(w: &[usize], cd: &CartanA) -> Result<RootVec> {
    let mut c = vec![0i64; cd.rank()];
    for &i in w {
        if i == 0 || i > cd.rank() {
            return Err(Error::ResidueOutOfRange {
                residue: i as i64,
                rank: cd.rank(),
            });
        }
        c[i - 1] += 1;
    }
    Ok(RootVec(c))
}

/// `sum_{S in ST(xi_T)} res(S)`.
pub fn qch_sp(t: &ColumnTableau, cd: &CartanA) -> Result<QChar> {
    if t.n() != cd.n() {
        return Err(Error::DimensionMismatch {
            expected: cd.n(),
            found: t.n(),
        });
    }
    t.check_crystal()?;
    let k = t.len();
    let mut out = QChar::zero(cd.n());
    for s in standard_tableaux(&t.xi()?) {
        out.add_term(residue_sequence(&s, k, cd)?, &LaurentInt::one());
    }
    Ok(out)
}

/// Which side of each inverted pair carries the q-power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShuffleSign {
    /// `q^{-(alpha_u, alpha_v)}` when a letter `v` of the right factor precedes a letter `u` of the left.
    Standard,
    /// The opposite exponent; kept only as a negative control.
    Reversed,
}

/// Quantum shuffle `x ⧢ y`, realizing `[M ∘ N]` from `qch M = x`, `qch N = y`.
pub fn shuffle(x: &QChar, y: &QChar, cd: &CartanA) -> Result<QChar> {
    shuffle_with_sign(x, y, cd, ShuffleSign::Standard)
}

pub fn shuffle_with_sign(x: &QChar, y: &QChar, cd: &CartanA, sign: ShuffleSign) -> Result<QChar> {
    for z in [x, y] {
        if z.n != cd.n() {
            return Err(Error::DimensionMismatch {
                expected: cd.n(),
                found: z.n,
            });
        }
    }
    let s = match sign {
        ShuffleSign::Standard => -1,
        ShuffleSign::Reversed => 1,
    };
    let mut out = QChar::zero(cd.n());
    let mut buf = Vec::new();
    for (u, cu) in &x.terms {
        for (v, cv) in &y.terms {
            let coeff = cu * cv;
            let mut acc: BTreeMap<Word, LaurentInt> = BTreeMap::new();
            interleave(u, v, 0, 0, 0, &mut buf, cd, &mut acc);
            for (w, p) in acc {
                out.add_term(w, &(&p.substitute_power(s) * &coeff));
            }
        }
    }
    Ok(out)
}

/// Enumerate interleavings; `inv` accumulates `sum (alpha_{u_s}, alpha_{v_t})`
/// over pairs with `v_t` placed before `u_s`.
#[allow(clippy::too_many_arguments)]
fn interleave(
    u: &[usize],
    v: &[usize],
    i: usize,
    j: usize,
    inv: i64,
    buf: &mut Vec<usize>,
    cd: &CartanA,
    acc: &mut BTreeMap<Word, LaurentInt>,
) {
    if i == u.len() && j == v.len() {
        let slot = acc.entry(buf.clone()).or_default();
        *slot = &*slot + &LaurentInt::q_pow(inv);
        return;
    }
    if i < u.len() {
        let extra: i64 = v[..j].iter().map(|&b| cd.entry(u[i], b)).sum();
        buf.push(u[i]);
        interleave(u, v, i + 1, j, inv + extra, buf, cd, acc);
        buf.pop();
    }
    if j < v.len() {
        buf.push(v[j]);
        interleave(u, v, i, j + 1, inv, buf, cd, acc);
        buf.pop();
    }
}

/// Fold `shuffle` left to right: `((x_1 ⧢ x_2) ⧢ x_3) ...`.
pub fn shuffle_all(factors: &[QChar], cd: &CartanA) -> Result<QChar> {
    let mut it = factors.iter();
    let first = it
        .next()
        .ok_or_else(|| Error::InvalidInput("nothing to shuffle".into()))?;
    it.try_fold(first.clone(), |acc, f| shuffle(&acc, f, cd))
}

pub fn shift(x: &QChar, d: i64) -> QChar {
    x.shift(d)
}

/// Solve `monomial_i = sum_j matrix[i][j] * simple_j` for the simples.
///
/// The matrix must be unitriangular (lower or upper) in the given order.
pub fn solve_unitriangular<L: Clone>(
    monomials: &[(L, QChar)],
    matrix: &[Vec<LaurentInt>],
) -> Result<Vec<(L, QChar)>> {
    let size = monomials.len();
    if matrix.len() != size || matrix.iter().any(|r| r.len() != size) {
        return Err(Error::Inconsistent(format!(
            "need a {size}x{size} matrix for {size} monomials"
        )));
    }
    if size == 0 {
        return Ok(Vec::new());
    }
    let n = monomials[0].1.n;
    let content = monomials.iter().find_map(|(_, m)| m.content());
    for (_, m) in monomials {
        if m.n != n {
            return Err(Error::Inconsistent(format!(
                "monomials over n = {n} and n = {}",
                m.n
            )));
        }
        if let (Some(c), Some(mc)) = (&content, m.content()) {
            if *c != mc {
                return Err(Error::Inconsistent(
                    "monomials of different contents".into(),
                ));
            }
        }
    }
    for (i, row) in matrix.iter().enumerate() {
        if !row[i].is_one() {
            return Err(Error::NotUnitriangular(format!(
                "diagonal entry {i} is {}",
                row[i]
            )));
        }
    }
    let lower = (0..size).all(|i| (i + 1..size).all(|j| matrix[i][j].is_zero()));
    let upper = (0..size).all(|i| (0..i).all(|j| matrix[i][j].is_zero()));
    if !lower && !upper {
        return Err(Error::NotUnitriangular(
            "matrix is neither lower nor upper unitriangular".into(),
        ));
    }
    let order: Vec<usize> = if lower {
        (0..size).collect()
    } else {
        (0..size).rev().collect()
    };
    let mut simples: Vec<Option<QChar>> = vec![None; size];
    for &i in &order {
        let mut s = monomials[i].1.clone();
        for (j, a) in matrix[i].iter().enumerate() {
            if j != i && !a.is_zero() {
                let sj = simples[j]
                    .as_ref()
                    .expect("solved earlier in triangular order");
                s = s.sub(&sj.scale(a))?;
            }
        }
        simples[i] = Some(s);
    }
    let simples: Vec<QChar> = simples
        .into_iter()
        .map(|s| s.expect("all solved"))
        .collect();
    for (i, (_, m)) in monomials.iter().enumerate() {
        let mut back = QChar::zero(n);
        for (j, a) in matrix[i].iter().enumerate() {
            back = back.add(&simples[j].scale(a))?;
        }
        if back != *m {
            return Err(Error::Internal(format!(
                "back-substitution does not reproduce monomial {i}"
            )));
        }
    }
    Ok(monomials
        .iter()
        .map(|(l, _)| l.clone())
        .zip(simples)
        .collect())
}
