//! Symmetric-group combinatorics, Kazhdan-Lusztig polynomials and the
//! transition entries between standard monomials and simple modules.
//!
//! Permutations are one-line: `w = [w(1), ..., w(m)]`, and `x.compose(y)` is
//! `x ∘ y`, i.e. `i -> x(y(i))`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::cartan::CartanA;
use crate::error::{Error, Result};
use crate::homogeneous::convolution_shift;
use crate::qchar::{qch_sp, shuffle_all, solve_unitriangular, LaurentInt, QChar};
use crate::tableaux::{enumerate_ssyt, ColumnTableau, SsyTableau, YoungDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let m = one_line.len();
        if m > u8::MAX as usize {
            return Err(Error::InvalidInput(format!("window size {m} is too large")));
        }
        let mut seen = vec![false; m + 1];
        for &v in &one_line {
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "{one_line:?} is not a permutation of 1..={m}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line.into_iter().map(|v| v as u8).collect()))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m as u8).collect())
    }

    /// The longest element `[m, m-1, ..., 1]`.
    pub fn longest(m: usize) -> Self {
        Permutation((1..=m as u8).rev().collect())
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(i: usize, m: usize) -> Self {
        let mut p = Permutation::identity(m);
        p.0.swap(i - 1, i);
        p
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&j| self.0[j as usize - 1]).collect())
    }

    /// `s_i ∘ self`: swap the values `i` and `i+1`.
    fn left_mul_simple(&self, i: usize) -> Permutation {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation(
            self.0
                .iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// Whether `s_i ∘ self < self`, i.e. `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.0.iter().position(|&x| x == v).expect("permutation");
        pos(i as u8) > pos(i as u8 + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `x <= y` in Bruhat order, by comparing sorted prefixes.
pub fn bruhat_le(x: &Permutation, y: &Permutation) -> Result<bool> {
    if x.size() != y.size() {
        return Err(Error::DimensionMismatch {
            expected: x.size(),
            found: y.size(),
        });
    }
    Ok(bruhat_le_unchecked(x, y))
}

fn bruhat_le_unchecked(x: &Permutation, y: &Permutation) -> bool {
    let m = x.size();
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for k in 0..m {
        a.push(x.0[k]);
        b.push(y.0[k]);
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(p, q)| p > q) {
            return false;
        }
    }
    true
}

/// Elements covered by `v` in Bruhat order.
fn covers_below(v: &Permutation) -> Vec<Permutation> {
    let w = &v.0;
    let m = w.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if w[i] > w[j] && !(i + 1..j).any(|k| w[j] < w[k] && w[k] < w[i]) {
                let mut u = w.clone();
                u.swap(i, j);
                out.push(Permutation(u));
            }
        }
    }
    out
}

/// A polynomial in `t` with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct KlPoly(Vec<i64>);

impl KlPoly {
    pub fn zero() -> Self {
        KlPoly(Vec::new())
    }

    pub fn one() -> Self {
        KlPoly(vec![1])
    }

    pub fn from_coeffs(mut c: Vec<i64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        KlPoly(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    /// `self += c t^shift p`.
    fn add_scaled(&mut self, p: &KlPoly, shift: usize, c: i64) {
        if self.0.len() < p.0.len() + shift {
            self.0.resize(p.0.len() + shift, 0);
        }
        for (k, &a) in p.0.iter().enumerate() {
            self.0[k + shift] += c * a;
        }
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    /// Evaluate at `t = q^k`.
    pub fn at_q_power(&self, k: i64) -> LaurentInt {
        LaurentInt::from_terms(self.0.iter().enumerate().map(|(i, &c)| (i as i64 * k, c)))
    }
}

impl fmt::Display for KlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.at_q_power(1).to_string();
        write!(f, "{}", s.replace('q', "t"))
    }
}

/// Memo table for `P_{x,y}`, keyed by `(x, y)`. Not shared across threads.
#[derive(Debug, Default)]
pub struct KlCache {
    memo: HashMap<(Permutation, Permutation), KlPoly>,
}

impl KlCache {
    pub fn new() -> Self {
        KlCache::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn poly(&mut self, x: &Permutation, y: &Permutation) -> Result<KlPoly> {
        if x.size() != y.size() {
            return Err(Error::DimensionMismatch {
                expected: x.size(),
                found: y.size(),
            });
        }
        Ok(self.p(x, y))
    }

    fn p(&mut self, x: &Permutation, y: &Permutation) -> KlPoly {
        let key = (x.clone(), y.clone());
        if let Some(r) = self.memo.get(&key) {
            return r.clone();
        }
        let r = self.compute(x, y);
        self.memo.insert(key, r.clone());
        r
    }

    fn compute(&mut self, x0: &Permutation, y: &Permutation) -> KlPoly {
        if !bruhat_le_unchecked(x0, y) {
            return KlPoly::zero();
        }
        if x0 == y {
            return KlPoly::one();
        }
        let m = y.size();
        let descents: Vec<usize> = (1..m).filter(|&i| y.has_left_descent(i)).collect();
        // P_{x,y} = P_{sx,y} when s is a left descent of y and sx > x
        let mut x = x0.clone();
        while let Some(&i) = descents.iter().find(|&&i| !x.has_left_descent(i)) {
            x = x.left_mul_simple(i);
        }
        if x != *x0 {
            return self.p(&x, y);
        }
        let s = descents[0];
        let v = y.left_mul_simple(s);
        let sx = x.left_mul_simple(s);
        let (ly, lv) = (y.length(), v.length());
        let mut r = self.p(&sx, &v);
        let pxv = self.p(&x, &v);
        r.add_scaled(&pxv, 1, 1);
        for z in interval(&x, &v) {
            if z == v || !z.has_left_descent(s) {
                continue;
            }
            let lz = z.length();
            if (lv - lz) % 2 == 0 {
                continue;
            }
            let pzv = self.p(&z, &v);
            let top = (lv - lz - 1) / 2;
            let mu = pzv.coeff(top);
            if pzv.degree() == Some(top) && mu != 0 {
                let pxz = self.p(&x, &z);
                r.add_scaled(&pxz, (ly - lz) / 2, -mu);
            }
        }
        r
    }
}

/// The Bruhat interval `[x, v]`, found by walking down covers from `v`.
fn interval(x: &Permutation, v: &Permutation) -> Vec<Permutation> {
    let mut seen = HashSet::from([v.clone()]);
    let mut frontier = vec![v.clone()];
    let mut out = vec![v.clone()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for w in covers_below(u) {
                if !seen.contains(&w) && bruhat_le_unchecked(x, &w) {
                    seen.insert(w.clone());
                    next.push(w.clone());
                    out.push(w);
                }
            }
        }
        frontier = next;
    }
    out
}

thread_local! {
    static KL_CACHE: RefCell<KlCache> = RefCell::new(KlCache::new());
}

/// `P_{x,y}(t)`, memoized per thread.
pub fn kl_poly(x: &Permutation, y: &Permutation) -> Result<KlPoly> {
    KL_CACHE.with(|c| c.borrow_mut().poly(x, y))
}

/// A list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "composition {parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Block index (0-based) of each position `1..=m`.
    fn block_of(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(b, &len)| std::iter::repeat_n(b, len))
            .collect()
    }
}

/// Minimal-length representatives of the cosets `d S_nu`: the `d` increasing
/// on every block of `nu`. Sorted by `d^{-1}` read as block labels.
pub fn coset_min_reps(nu: &Composition) -> Vec<Permutation> {
    let blocks = nu.block_of();
    let mut labels = blocks.clone();
    let mut out = Vec::new();
    loop {
        out.push(rep_from_labels(&labels, nu).inverse());
        if !next_permutation(&mut labels) {
            break;
        }
    }
    out
}

/// `d` with `d(j)` the next free slot in block `labels[j]`.
fn rep_from_labels(labels: &[usize], nu: &Composition) -> Permutation {
    let mut start: Vec<usize> = Vec::with_capacity(nu.0.len());
    let mut acc = 1;
    for &len in &nu.0 {
        start.push(acc);
        acc += len;
    }
    let one_line = labels
        .iter()
        .map(|&b| {
            let s = start[b];
            start[b] += 1;
            s
        })
        .collect();
    Permutation::new(one_line).expect("slots fill 1..=m")
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len())
        .rev()
        .find(|&j| a[j] > a[i - 1])
        .expect("exists");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// `T = T_1 * ... * T_r`: columns listed left to right, lengths weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnStrictConcat {
    n: usize,
    columns: Vec<ColumnTableau>,
}

impl ColumnStrictConcat {
    pub fn new(n: usize, columns: Vec<ColumnTableau>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::InvalidInput("need at least one column".into()));
        }
        for c in &columns {
            if c.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.n(),
                });
            }
            c.check_crystal()?;
        }
        if columns.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidInput(
                "column lengths must weakly decrease from left to right".into(),
            ));
        }
        Ok(ColumnStrictConcat { n, columns })
    }

    pub fn from_ssyt(t: &SsyTableau) -> Result<Self> {
        ColumnStrictConcat::new(t.n(), t.columns())
    }

    /// Parse the flat encoding with the rightmost factor as `T_1`.
    pub fn parse_rtl(n: usize, s: &str) -> Result<Self> {
        let mut cols = crate::tableaux::parse_columns(n, s)?;
        cols.reverse();
        ColumnStrictConcat::new(n, cols)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[ColumnTableau] {
        &self.columns
    }

    /// `mu = (|T_1|, ..., |T_r|)`.
    pub fn mu(&self) -> Vec<usize> {
        self.columns.iter().map(ColumnTableau::len).collect()
    }

    /// `lambda = mu'`.
    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::new(self.mu())
            .expect("weakly decreasing")
            .conjugate()
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(ColumnTableau::len).sum()
    }

    /// Multiplicity of each entry `1..=n`.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.n];
        for &e in self.columns.iter().flat_map(|c| c.entries()) {
            c[e - 1] += 1;
        }
        c
    }

    pub fn as_ssyt(&self) -> Option<SsyTableau> {
        SsyTableau::from_columns(self.n, &self.columns).ok()
    }

    pub fn is_semistandard(&self) -> bool {
        self.as_ssyt().is_some()
    }

    /// Flat encoding, rightmost factor `T_1`.
    pub fn to_flat(&self) -> String {
        let parts: Vec<String> = self.columns.iter().rev().map(|c| c.to_string()).collect();
        parts.join("|")
    }
}

/// `(nu_T, gamma_T, d_T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauWords {
    /// Multiplicities of the entries, from the largest entry down.
    pub nu: Composition,
    /// Column reading: columns right to left, each top to bottom.
    pub gamma: Vec<usize>,
    /// The representative in `D_nu` with `gamma ∘ d` weakly decreasing.
    pub d: Permutation,
}

fn column_reading(t: &ColumnStrictConcat) -> Vec<usize> {
    t.columns
        .iter()
        .rev()
        .flat_map(|c| c.entries().iter().copied())
        .collect()
}

/// `d(s)` is the position in `word` of slot `s` of the weakly decreasing
/// rearrangement, equal letters taking slots in order of position.
fn sorting_rep(word: &[usize]) -> Permutation {
    let mut target = word.to_vec();
    target.sort_unstable_by(|a, b| b.cmp(a));
    let mut next_slot: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &v) in target.iter().enumerate().rev() {
        next_slot.insert(v, i + 1);
    }
    let one_line = word
        .iter()
        .map(|v| {
            let s = next_slot.get_mut(v).expect("letter present");
            *s += 1;
            *s - 1
        })
        .collect();
    Permutation::new(one_line)
        .expect("slots are a bijection")
        .inverse()
}

fn decreasing_content(word: &[usize]) -> Composition {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in word {
        *counts.entry(v).or_insert(0) += 1;
    }
    Composition(counts.values().rev().copied().collect())
}

pub fn tableau_words(t: &ColumnStrictConcat) -> Result<TableauWords> {
    let gamma = column_reading(t);
    let nu = decreasing_content(&gamma);
    let d = sorting_rep(&gamma);
    let sorted: Vec<usize> = (1..=gamma.len()).map(|s| gamma[d.apply(s) - 1]).collect();
    if sorted.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Internal(format!(
            "gamma ∘ d = {sorted:?} is not weakly decreasing"
        )));
    }
    let blocks = nu.block_of();
    if (1..gamma.len()).any(|s| blocks[s - 1] == blocks[s] && d.apply(s) > d.apply(s + 1)) {
        return Err(Error::Internal(format!(
            "d_T = {d} is not a minimal coset representative"
        )));
    }
    Ok(TableauWords { nu, gamma, d })
}

/// Words obtained from `gamma` by permuting entries inside each column block.
fn column_rearrangements(t: &ColumnStrictConcat) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for c in t.columns.iter().rev() {
        let perms = permutations_of(c.entries());
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for prefix in &out {
            for p in &perms {
                let mut w = prefix.clone();
                w.extend_from_slice(p);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    let mut a = items.to_vec();
    a.sort_unstable();
    let mut out = vec![a.clone()];
    while next_permutation(&mut a) {
        out.push(a.clone());
    }
    out
}

fn check_same_shape(t: &ColumnStrictConcat, t2: &SsyTableau) -> Result<()> {
    if t.n != t2.n() {
        return Err(Error::DimensionMismatch {
            expected: t.n,
            found: t2.n(),
        });
    }
    if t.shape() != t2.shape() {
        return Err(Error::InvalidInput(format!(
            "shapes differ: {} vs {}",
            t.shape(),
            t2.shape()
        )));
    }
    Ok(())
}

/// `A_{T,T'}(q) = (-q)^{l(d_T) - l(d_T')} sum_z (-1)^{l(z) + l(d_T')} P_{z w0, d_T' w0}(q^-2)`,
/// `z` running over `D_{nu_T} ∩ S_{nu_T} d_T S_mu` and `w0` the longest element of `S_{|lambda|}`.
pub fn transition_entry(t: &ColumnStrictConcat, t2: &SsyTableau) -> Result<LaurentInt> {
    KL_CACHE.with(|c| transition_entry_with(&mut c.borrow_mut(), t, t2))
}

pub fn transition_entry_with(
    cache: &mut KlCache,
    t: &ColumnStrictConcat,
    t2: &SsyTableau,
) -> Result<LaurentInt> {
    check_same_shape(t, t2)?;
    if t.content() != t2.content() {
        return Ok(LaurentInt::zero());
    }
    let tp = ColumnStrictConcat::from_ssyt(t2)?;
    let d_t = tableau_words(t)?.d;
    let d_tp = tableau_words(&tp)?.d;
    let w0 = Permutation::longest(t.size());
    let right = d_tp.compose(&w0);
    let l_tp = d_tp.length();
    let mut sum = LaurentInt::zero();
    for word in column_rearrangements(t) {
        let z = sorting_rep(&word);
        let p = cache.p(&z.compose(&w0), &right);
        if p.is_zero() {
            continue;
        }
        let sign = if (z.length() + l_tp).is_multiple_of(2) {
            1
        } else {
            -1
        };
        sum = &sum + &p.at_q_power(-2).scale(sign);
    }
    let k = d_t.length() as i64 - l_tp as i64;
    let pre = LaurentInt::monomial(k, if k % 2 == 0 { 1 } else { -1 });
    Ok(&pre * &sum)
}

/// Semistandard tableaux of shape `lambda` with the given content (multiplicities), in
/// the order ascending `l(d_T)`, ties broken by the tableau order.
pub fn semistandard_by_content(
    lambda: &YoungDiagram,
    n: usize,
    content: &[usize],
) -> Result<Vec<SsyTableau>> {
    let mut keyed = Vec::new();
    for t in enumerate_ssyt(lambda, n)? {
        if t.content() == content {
            let l = tableau_words(&ColumnStrictConcat::from_ssyt(&t)?)?
                .d
                .length();
            keyed.push((l, t));
        }
    }
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

/// `A_{T,T'}` for semistandard `T, T'` of one shape and content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub tableaux: Vec<SsyTableau>,
    /// `entries[i][j] = A_{T_i, T_j}`.
    pub entries: Vec<Vec<LaurentInt>>,
}

impl TransitionMatrix {
    /// Builds the matrix and checks it is unitriangular: `A_{T,T} = 1` and
    /// `A_{T,T'} = 0` unless `T'` comes no later than `T` in the order of
    /// [`semistandard_by_content`].
    pub fn build(lambda: &YoungDiagram, n: usize, content: &[usize]) -> Result<Self> {
        let tableaux = semistandard_by_content(lambda, n, content)?;
        let mut entries = Vec::with_capacity(tableaux.len());
        for t in &tableaux {
            let row = ColumnStrictConcat::from_ssyt(t)?;
            entries.push(
                tableaux
                    .iter()
                    .map(|t2| transition_entry(&row, t2))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        for (i, row) in entries.iter().enumerate() {
            if !row[i].is_one() {
                return Err(Error::NotUnitriangular(format!(
                    "A_{{T,T}} = {} for T = {}",
                    row[i], tableaux[i]
                )));
            }
            if let Some(j) = (i + 1..row.len()).find(|&j| !row[j].is_zero()) {
                return Err(Error::NotUnitriangular(format!(
                    "A_{{T,T'}} = {} above the diagonal for T = {}, T' = {}",
                    row[j], tableaux[i], tableaux[j]
                )));
            }
        }
        Ok(TransitionMatrix { tableaux, entries })
    }
}

/// `[Sp^{T_r} ∘ ... ∘ Sp^{T_1} : L(T')]_q = q^{-t} A_{T,T'}(q)` for every
/// semistandard `T'` with a nonzero multiplicity.
pub fn graded_decomposition(
    t: &ColumnStrictConcat,
    cd: &CartanA,
) -> Result<BTreeMap<SsyTableau, LaurentInt>> {
    if t.n != cd.n() {
        return Err(Error::DimensionMismatch {
            expected: cd.n(),
            found: t.n,
        });
    }
    let lambda = t.shape();
    if lambda.len() >= cd.n() {
        return Err(Error::InvalidInput(format!(
            "shape {lambda} needs fewer than n = {} rows",
            cd.n()
        )));
    }
    let shift = standard_monomial_shift(t, cd)?;
    let mut out = BTreeMap::new();
    for t2 in semistandard_by_content(&lambda, cd.n(), &t.content())? {
        let a = transition_entry(t, &t2)?;
        if !a.is_zero() {
            out.insert(t2, a.shift(-shift));
        }
    }
    Ok(out)
}

/// `t = sum_{a<b} (beta_{T_a}, Lambda_{mu_b})`.
pub fn standard_monomial_shift(t: &ColumnStrictConcat, cd: &CartanA) -> Result<i64> {
    let rtl: Vec<ColumnTableau> = t.columns.iter().rev().cloned().collect();
    convolution_shift(&rtl, cd)
}

/// `qch (Sp^{T_r} ∘ ... ∘ Sp^{T_1})` as an iterated shuffle.
pub fn convolution_qchar(t: &ColumnStrictConcat, cd: &CartanA) -> Result<QChar> {
    let factors = t
        .columns
        .iter()
        .rev()
        .map(|c| qch_sp(c, cd))
        .collect::<Result<Vec<_>>>()?;
    shuffle_all(&factors, cd)
}

/// q-characters of the simples `L(T')` for every semistandard `T'` of the
/// given shape and content, solved from the standard monomials
/// `q^t qch(Sp^{T_r} ∘ ... ∘ Sp^{T_1}) = sum A_{T,T'} qch L(T')`.
pub fn simple_qchars(
    lambda: &YoungDiagram,
    cd: &CartanA,
    content: &[usize],
) -> Result<Vec<(SsyTableau, QChar)>> {
    let m = TransitionMatrix::build(lambda, cd.n(), content)?;
    let mut monomials = Vec::with_capacity(m.tableaux.len());
    for t in &m.tableaux {
        let c = ColumnStrictConcat::from_ssyt(t)?;
        let q = convolution_qchar(&c, cd)?.shift(standard_monomial_shift(&c, cd)?);
        monomials.push((t.clone(), q));
    }
    solve_unitriangular(&monomials, &m.entries)
}

/// `L(rows)`, rows separated by `/`.
pub fn simple_label(t: &SsyTableau) -> String {
    format!("L({t})")
}
