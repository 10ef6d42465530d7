//! Young diagrams, one-column and semistandard tableaux, standard tableaux.
//!
//! Boxes are addressed `(row, column)` starting from `(1, 1)` in English
//! notation. The residue of box `(p, c)` for a column of length `k` is
//! `c - p + k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanA, RootVec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram(Vec<usize>);

impl YoungDiagram {
    /// Drops trailing zero parts; rejects increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(YoungDiagram(parts))
    }

    pub fn empty() -> Self {
        YoungDiagram(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> YoungDiagram {
        let width = self.0.first().copied().unwrap_or(0);
        YoungDiagram(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }
}

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        if v.contains(&0) {
            return Err(Error::InvalidInput(
                "Young diagram parts must be positive".into(),
            ));
        }
        YoungDiagram::new(v)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(y: YoungDiagram) -> Self {
        y.0
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A one-column semistandard tableau with entries `t_1 < ... < t_k` in `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ColumnRepr", into = "ColumnRepr")]
pub struct ColumnTableau {
    n: usize,
    entries: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ColumnRepr {
    n: usize,
    entries: Vec<usize>,
}

impl TryFrom<ColumnRepr> for ColumnTableau {
    type Error = Error;
    fn try_from(r: ColumnRepr) -> Result<Self> {
        ColumnTableau::new(r.n, r.entries)
    }
}

impl From<ColumnTableau> for ColumnRepr {
    fn from(c: ColumnTableau) -> Self {
        ColumnRepr {
            n: c.n,
            entries: c.entries,
        }
    }
}

impl ColumnTableau {
    /// Any strictly increasing list in `{1..n}`, including the empty and full columns.
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTableau(format!(
                "column {entries:?} is not strictly increasing"
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::InvalidTableau(format!(
                "entry {bad} outside 1..={n}"
            )));
        }
        Ok(ColumnTableau { n, entries })
    }

    /// The highest-weight column `1, 2, ..., k`.
    pub fn highest(n: usize, k: usize) -> Result<Self> {
        ColumnTableau::new(n, (1..=k).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Column length `k`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.entries.binary_search(&a).is_ok()
    }

    /// Columns that label elements of `B(Lambda_k)` need `1 <= k <= n-1`.
    pub fn check_crystal(&self) -> Result<()> {
        if self.entries.is_empty() || self.entries.len() >= self.n {
            return Err(Error::InvalidTableau(format!(
                "column {:?} has length {}, need 1..={} to lie in B(Lambda_k)",
                self.entries,
                self.entries.len(),
                self.n.saturating_sub(1)
            )));
        }
        Ok(())
    }

    pub fn is_highest(&self) -> bool {
        self.entries.iter().enumerate().all(|(a, &t)| t == a + 1)
    }

    /// `xi_T = (t_k - k, t_{k-1} - (k-1), ..., t_1 - 1)` with zero parts dropped.
    pub fn xi(&self) -> Result<YoungDiagram> {
        if self.entries.is_empty() {
            return Err(Error::InvalidTableau(
                "xi is undefined for the empty column".into(),
            ));
        }
        let parts = self
            .entries
            .iter()
            .enumerate()
            .rev()
            .map(|(a, &t)| t - (a + 1))
            .collect();
        YoungDiagram::new(parts)
    }

    /// `beta_T = Lambda_k - wt(T)`, i.e. `sum_a sum_{j=a}^{t_a - 1} alpha_j`.
    pub fn beta(&self) -> RootVec {
        let mut c = vec![0i64; self.n.saturating_sub(1)];
        for (a, &t) in self.entries.iter().enumerate() {
            for j in (a + 1)..t {
                c[j - 1] += 1;
            }
        }
        RootVec(c)
    }
}

impl fmt::Display for ColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", e.join(","))
    }
}

/// `xi_T` of a column (free-function form).
pub fn xi_of(t: &ColumnTableau) -> Result<YoungDiagram> {
    t.xi()
}

/// `beta_T` as an element of `Q_+` for the given datum.
pub fn beta_of_column(t: &ColumnTableau, cd: &CartanA) -> Result<RootVec> {
    if t.n() != cd.n() {
        return Err(Error::DimensionMismatch {
            expected: cd.n(),
            found: t.n(),
        });
    }
    t.check_crystal()?;
    Ok(t.beta())
}

/// Semistandard tableau: rows weakly increase, columns strictly increase.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SsytRepr", into = "SsytRepr")]
pub struct SsyTableau {
    n: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SsytRepr {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<SsytRepr> for SsyTableau {
    type Error = Error;
    fn try_from(r: SsytRepr) -> Result<Self> {
        SsyTableau::new(r.n, r.rows)
    }
}

impl From<SsyTableau> for SsytRepr {
    fn from(t: SsyTableau) -> Self {
        SsytRepr {
            n: t.n,
            rows: t.rows,
        }
    }
}

impl SsyTableau {
    pub fn new(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        if lens.contains(&0) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        YoungDiagram::new(lens.clone()).map_err(|_| {
            Error::InvalidTableau(format!("row lengths {lens:?} do not form a Young diagram"))
        })?;
        for (r, row) in rows.iter().enumerate() {
            if let Some(&bad) = row.iter().find(|&&e| e == 0 || e > n) {
                return Err(Error::InvalidTableau(format!(
                    "entry {bad} outside 1..={n}"
                )));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} is not weakly increasing",
                    r + 1
                )));
            }
            if r > 0 {
                for (c, &e) in row.iter().enumerate() {
                    if rows[r - 1][c] >= e {
                        return Err(Error::InvalidTableau(format!(
                            "column {} is not strictly increasing",
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(SsyTableau { n, rows })
    }

    /// Reassemble from columns listed left to right (lengths weakly decreasing).
    pub fn from_columns(n: usize, cols: &[ColumnTableau]) -> Result<Self> {
        if cols.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(
                "column lengths must weakly decrease".into(),
            ));
        }
        let height = cols.first().map_or(0, |c| c.len());
        let rows = (0..height)
            .map(|r| {
                cols.iter()
                    .filter(|c| c.len() > r)
                    .map(|c| c.entries()[r])
                    .collect()
            })
            .collect();
        SsyTableau::new(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram(self.rows.iter().map(|r| r.len()).collect())
    }

    /// Columns from left to right.
    pub fn columns(&self) -> Vec<ColumnTableau> {
        let width = self.rows.first().map_or(0, |r| r.len());
        (0..width)
            .map(|c| ColumnTableau {
                n: self.n,
                entries: self
                    .rows
                    .iter()
                    .filter(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect(),
            })
            .collect()
    }

    /// Multiplicity of each entry `1..=n`.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.n];
        for &e in self.rows.iter().flatten() {
            c[e - 1] += 1;
        }
        c
    }

    pub fn row_reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for SsyTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Standard tableau: a bijective filling by `1..=|shape|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungDiagram::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let m = shape.size();
        let mut seen = vec![false; m + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > m || seen[e] {
                return Err(Error::InvalidTableau(format!(
                    "entries are not a permutation of 1..={m}"
                )));
            }
            seen[e] = true;
        }
        let t = StandardTableau { rows };
        if !t.is_standard() {
            return Err(Error::InvalidTableau(
                "rows and columns must increase".into(),
            ));
        }
        Ok(t)
    }

    fn is_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self
                .rows
                .windows(2)
                .all(|p| p[1].iter().enumerate().all(|(c, &e)| p[0][c] < e))
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// 1-based `(row, column)` of each entry, indexed by `entry - 1`.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                pos[e - 1] = (r + 1, c + 1);
            }
        }
        pos
    }

    /// Exchange entries `j` and `j+1`; `None` when the result is not standard.
    pub fn swap_entries(&self, j: usize) -> Option<StandardTableau> {
        if j == 0 || j >= self.size() {
            return None;
        }
        let mut rows = self.rows.clone();
        for e in rows.iter_mut().flatten() {
            if *e == j {
                *e = j + 1;
            } else if *e == j + 1 {
                *e = j;
            }
        }
        let t = StandardTableau { rows };
        t.is_standard().then_some(t)
    }

    pub fn row_reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// All standard tableaux of a shape, sorted by row-reading word.
pub fn standard_tableaux(shape: &YoungDiagram) -> Vec<StandardTableau> {
    fn rec(
        shape: &[usize],
        filled: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        next: usize,
        m: usize,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > m {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let c = filled[r];
            if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                rows[r].push(next);
                rec(shape, filled, rows, next + 1, m, out);
                rows[r].pop();
                filled[r] -= 1;
            }
        }
    }
    let parts = shape.parts();
    let mut out = Vec::new();
    rec(
        parts,
        &mut vec![0; parts.len()],
        &mut vec![Vec::new(); parts.len()],
        1,
        shape.size(),
        &mut out,
    );
    out.sort_by_key(|a| a.row_reading_word());
    out
}

/// `res(S) = (res(b_m), ..., res(b_1))` where `b_e` is the box holding `e`.
pub fn residue_sequence(s: &StandardTableau, k: usize, cd: &CartanA) -> Result<Vec<usize>> {
    s.positions()
        .iter()
        .rev()
        .map(|&(p, c)| {
            let r = c as i64 - p as i64 + k as i64;
            if r < 1 || r > cd.rank() as i64 {
                Err(Error::ResidueOutOfRange {
                    residue: r,
                    rank: cd.rank(),
                })
            } else {
                Ok(r as usize)
            }
        })
        .collect()
}

/// All semistandard tableaux of shape `lambda` with entries in `1..=n`,
/// sorted by row-reading word.
pub fn enumerate_ssyt(lambda: &YoungDiagram, n: usize) -> Result<Vec<SsyTableau>> {
    if lambda.len() >= n {
        return Err(Error::InvalidInput(format!(
            "shape {lambda} needs fewer than n = {n} rows"
        )));
    }
    let shape = lambda.parts();
    let boxes: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fn rec(
        i: usize,
        boxes: &[(usize, usize)],
        rows: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut Vec<SsyTableau>,
    ) {
        if i == boxes.len() {
            out.push(SsyTableau {
                n,
                rows: rows.clone(),
            });
            return;
        }
        let (r, c) = boxes[i];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for v in lo..=n {
            rows[r][c] = v;
            rec(i + 1, boxes, rows, n, out);
        }
        rows[r][c] = 0;
    }
    rec(0, &boxes, &mut rows, n, &mut out);
    // box order is row-major, so the output is already lexicographic
    Ok(out)
}

/// All columns of length `k` with entries in `1..=n`, lexicographic.
pub fn all_columns(n: usize, k: usize) -> Vec<ColumnTableau> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<ColumnTableau>) {
        if cur.len() == k {
            out.push(ColumnTableau {
                n,
                entries: cur.clone(),
            });
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every column `T` with `1 <= |T| <= n-1`.
pub fn crystal_columns(n: usize) -> Vec<ColumnTableau> {
    (1..n).flat_map(|k| all_columns(n, k)).collect()
}

/// Parse a flat column list `"a,b|c,d,e"`: factors separated by `|`, entries by `,`.
/// The factors are returned in the order written.
pub fn parse_columns(n: usize, s: &str) -> Result<Vec<ColumnTableau>> {
    if s.trim().is_empty() {
        return Err(Error::InvalidInput("empty column list".into()));
    }
    s.split('|')
        .map(|part| {
            let entries = part
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidInput(format!("bad entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            ColumnTableau::new(n, entries)
        })
        .collect()
}
