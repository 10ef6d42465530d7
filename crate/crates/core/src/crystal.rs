//! Kashiwara operators on columns and on tensor products of columns.
//!
//! Tensor convention: for `b1 ⊗ b2`, `e_i` acts on `b1` when
//! `phi_i(b1) >= eps_i(b2)` and `f_i` acts on `b1` when
//! `phi_i(b1) > eps_i(b2)`. Longer tensors are read as `b1 ⊗ (b2 ⊗ ...)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanA, RootVec, WeightVec};
use crate::error::{Error, Result};
use crate::tableaux::{ColumnTableau, SsyTableau};

/// A normal crystal given letter by letter. Indices are 1-based.
pub trait CrystalLetter: Clone + Eq + Hash {
    fn eps(&self, i: usize) -> i64;
    fn phi(&self, i: usize) -> i64;
    /// `<h_i, wt>`.
    fn weight_at(&self, i: usize) -> i64 {
        self.phi(i) - self.eps(i)
    }
    fn raise(&self, i: usize) -> Option<Self>;
    fn lower(&self, i: usize) -> Option<Self>;
}

impl CrystalLetter for ColumnTableau {
    fn eps(&self, i: usize) -> i64 {
        (self.contains(i + 1) && !self.contains(i)) as i64
    }

    fn phi(&self, i: usize) -> i64 {
        (self.contains(i) && !self.contains(i + 1)) as i64
    }

    fn raise(&self, i: usize) -> Option<Self> {
        (self.eps(i) == 1).then(|| replace_entry(self, i + 1, i))
    }

    fn lower(&self, i: usize) -> Option<Self> {
        (self.phi(i) == 1).then(|| replace_entry(self, i, i + 1))
    }
}

fn replace_entry(t: &ColumnTableau, from: usize, to: usize) -> ColumnTableau {
    let mut e: Vec<usize> = t
        .entries()
        .iter()
        .map(|&x| if x == from { to } else { x })
        .collect();
    e.sort_unstable();
    ColumnTableau::new(t.n(), e).expect("replacing i by i±1 keeps a column strict")
}

/// `(eps, phi, <h_i, wt>)` of `factors[0] ⊗ factors[1] ⊗ ...`.
pub fn tensor_stats<L: CrystalLetter>(factors: &[L], i: usize) -> (i64, i64, i64) {
    let mut it = factors.iter();
    let Some(first) = it.next() else {
        return (0, 0, 0);
    };
    let mut acc = (first.eps(i), first.phi(i), first.weight_at(i));
    for b in it {
        let (e2, p2, w2) = (b.eps(i), b.phi(i), b.weight_at(i));
        acc = ((acc.0).max(e2 - acc.2), (acc.1 + w2).max(p2), acc.2 + w2);
    }
    acc
}

/// `eps_i` of every suffix `factors[j..]`, plus a trailing 0 for the empty suffix.
fn suffix_eps<L: CrystalLetter>(factors: &[L], i: usize) -> Vec<i64> {
    let r = factors.len();
    let mut out = vec![0; r + 1];
    // eps(b ⊗ B) = max(eps(b), eps(B) - <h_i, wt b>)
    for j in (0..r).rev() {
        let b = &factors[j];
        out[j] = if j + 1 == r {
            b.eps(i)
        } else {
            b.eps(i).max(out[j + 1] - b.weight_at(i))
        };
    }
    out
}

/// Index of the factor `e_i` acts on, or `None` when `e_i` is undefined.
fn raise_position<L: CrystalLetter>(factors: &[L], i: usize) -> Option<usize> {
    let se = suffix_eps(factors, i);
    for (j, b) in factors.iter().enumerate() {
        if j + 1 == factors.len() || b.phi(i) >= se[j + 1] {
            return (b.eps(i) > 0).then_some(j);
        }
    }
    None
}

fn lower_position<L: CrystalLetter>(factors: &[L], i: usize) -> Option<usize> {
    let se = suffix_eps(factors, i);
    for (j, b) in factors.iter().enumerate() {
        if j + 1 == factors.len() || b.phi(i) > se[j + 1] {
            return (b.phi(i) > 0).then_some(j);
        }
    }
    None
}

pub fn tensor_raise<L: CrystalLetter>(factors: &[L], i: usize) -> Option<Vec<L>> {
    let j = raise_position(factors, i)?;
    let mut out = factors.to_vec();
    out[j] = factors[j].raise(i)?;
    Some(out)
}

pub fn tensor_lower<L: CrystalLetter>(factors: &[L], i: usize) -> Option<Vec<L>> {
    let j = lower_position(factors, i)?;
    let mut out = factors.to_vec();
    out[j] = factors[j].lower(i)?;
    Some(out)
}

/// `b_1 ⊗ ... ⊗ b_r` of one-column tableaux, leftmost factor first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TensorRepr", into = "TensorRepr")]
pub struct TensorElt {
    n: usize,
    factors: Vec<ColumnTableau>,
}

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    n: usize,
    factors: Vec<Vec<usize>>,
}

impl TryFrom<TensorRepr> for TensorElt {
    type Error = Error;
    fn try_from(r: TensorRepr) -> Result<Self> {
        let factors = r
            .factors
            .into_iter()
            .map(|f| ColumnTableau::new(r.n, f))
            .collect::<Result<Vec<_>>>()?;
        TensorElt::new(r.n, factors)
    }
}

impl From<TensorElt> for TensorRepr {
    fn from(t: TensorElt) -> Self {
        TensorRepr {
            n: t.n,
            factors: t.factors.iter().map(|c| c.entries().to_vec()).collect(),
        }
    }
}

impl TensorElt {
    pub fn new(n: usize, factors: Vec<ColumnTableau>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("need n >= 2, got {n}")));
        }
        if factors.is_empty() {
            return Err(Error::InvalidInput(
                "a tensor needs at least one factor".into(),
            ));
        }
        for f in &factors {
            if f.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: f.n(),
                });
            }
            f.check_crystal()?;
        }
        Ok(TensorElt { n, factors })
    }

    pub fn single(col: ColumnTableau) -> Result<Self> {
        TensorElt::new(col.n(), vec![col])
    }

    /// Parse `"a,b|c,d,e"`: factors separated by `|`, entries by `,`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let factors = crate::tableaux::parse_columns(n, s)?;
        TensorElt::new(n, factors)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[ColumnTableau] {
        &self.factors
    }

    pub fn cartan(&self) -> CartanA {
        CartanA::new(self.n).expect("n >= 2 checked at construction")
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &TensorElt) -> Result<TensorElt> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        Ok(TensorElt {
            n: self.n,
            factors: f,
        })
    }

    pub fn weight(&self) -> WeightVec {
        WeightVec(
            (1..self.n)
                .map(|i| self.factors.iter().map(|b| b.weight_at(i)).sum())
                .collect(),
        )
    }

    /// `sum_j Lambda_{|b_j|}`: the highest weight of the ambient tensor product.
    pub fn ambient_highest_weight(&self) -> WeightVec {
        let cd = self.cartan();
        self.factors.iter().fold(cd.zero_weight(), |acc, b| {
            &acc + &cd.fundamental_or_zero(b.len())
        })
    }

    /// `sum_j beta_{b_j}`: ambient highest weight minus `wt`, in `Q_+`.
    pub fn depth(&self) -> RootVec {
        let cd = self.cartan();
        self.factors
            .iter()
            .fold(cd.zero_root(), |acc, b| &acc + &b.beta())
    }

    pub fn eps(&self, i: usize) -> i64 {
        tensor_stats(&self.factors, i).0
    }

    pub fn phi(&self, i: usize) -> i64 {
        tensor_stats(&self.factors, i).1
    }

    pub fn is_highest_weight(&self) -> bool {
        (1..self.n).all(|i| self.eps(i) == 0)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        self.cartan().check_index(i)
    }

    fn raise_unchecked(&self, i: usize) -> Option<TensorElt> {
        tensor_raise(&self.factors, i).map(|factors| TensorElt { n: self.n, factors })
    }

    fn lower_unchecked(&self, i: usize) -> Option<TensorElt> {
        tensor_lower(&self.factors, i).map(|factors| TensorElt { n: self.n, factors })
    }
}

impl fmt::Display for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// `wt`, `eps_i`, `phi_i` for every `i` in `I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalStats {
    pub wt: WeightVec,
    pub eps: Vec<i64>,
    pub phi: Vec<i64>,
}

pub fn stats(b: &TensorElt) -> CrystalStats {
    let mut eps = Vec::with_capacity(b.n - 1);
    let mut phi = Vec::with_capacity(b.n - 1);
    let mut wt = Vec::with_capacity(b.n - 1);
    for i in 1..b.n {
        let (e, p, w) = tensor_stats(&b.factors, i);
        eps.push(e);
        phi.push(p);
        wt.push(w);
    }
    CrystalStats {
        wt: WeightVec(wt),
        eps,
        phi,
    }
}

/// `e_i(b)`; `Ok(None)` when undefined.
pub fn apply_e(i: usize, b: &TensorElt) -> Result<Option<TensorElt>> {
    b.check_index(i)?;
    Ok(b.raise_unchecked(i))
}

/// `f_i(b)`; `Ok(None)` when undefined.
pub fn apply_f(i: usize, b: &TensorElt) -> Result<Option<TensorElt>> {
    b.check_index(i)?;
    Ok(b.lower_unchecked(i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RaiseOrder {
    SmallestFirst,
    LargestFirst,
}

/// Raise until every `e_i` vanishes. Returns the highest-weight element and
/// the indices applied, in order; lowering along the reversed path recovers `b`.
pub fn to_highest_weight(b: &TensorElt) -> (TensorElt, Vec<usize>) {
    to_highest_weight_by(b, RaiseOrder::SmallestFirst)
}

pub fn to_highest_weight_by(b: &TensorElt, order: RaiseOrder) -> (TensorElt, Vec<usize>) {
    let mut cur = b.clone();
    let mut path = Vec::new();
    let indices: Vec<usize> = match order {
        RaiseOrder::SmallestFirst => (1..b.n).collect(),
        RaiseOrder::LargestFirst => (1..b.n).rev().collect(),
    };
    'outer: loop {
        for &i in &indices {
            if let Some(next) = cur.raise_unchecked(i) {
                cur = next;
                path.push(i);
                continue 'outer;
            }
        }
        return (cur, path);
    }
}

/// Whether `b` lies in the component whose highest-weight element is `highest`.
pub fn in_component(b: &TensorElt, highest: &TensorElt) -> Result<bool> {
    if !highest.is_highest_weight() {
        return Err(Error::Precondition(format!(
            "{highest} is not a highest-weight element"
        )));
    }
    if b.n != highest.n {
        return Ok(false);
    }
    Ok(to_highest_weight(b).0 == *highest)
}

/// Membership in `C_{lambda_1, ..., lambda_r}`: the component of the tensor
/// of highest-weight columns `col(1..k_1) ⊗ ... ⊗ col(1..k_r)`.
pub fn in_highest_component(b: &TensorElt) -> bool {
    to_highest_weight(b)
        .0
        .factors
        .iter()
        .all(ColumnTableau::is_highest)
}

/// Every element of the connected component of `b`, in BFS order.
pub fn component(b: &TensorElt) -> Vec<TensorElt> {
    let mut seen = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::from([b.clone()]);
    seen.insert(b.clone());
    while let Some(x) = queue.pop_front() {
        for i in 1..b.n {
            for y in [x.raise_unchecked(i), x.lower_unchecked(i)]
                .into_iter()
                .flatten()
            {
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        order.push(x);
    }
    order
}

/// Whether some crystal isomorphism `C(b) -> C(b2)` sends `b` to `b2`.
///
/// Explores both components in lockstep and fails as soon as the partial
/// bijection or the statistics disagree.
pub fn crystal_equivalent(b: &TensorElt, b2: &TensorElt) -> bool {
    if b.n != b2.n {
        return false;
    }
    let mut fwd: HashMap<TensorElt, TensorElt> = HashMap::new();
    let mut bwd: HashMap<TensorElt, TensorElt> = HashMap::new();
    let mut queue = VecDeque::new();
    fwd.insert(b.clone(), b2.clone());
    bwd.insert(b2.clone(), b.clone());
    queue.push_back((b.clone(), b2.clone()));
    while let Some((x, y)) = queue.pop_front() {
        if stats(&x) != stats(&y) {
            return false;
        }
        for i in 1..b.n {
            for (nx, ny) in [
                (x.raise_unchecked(i), y.raise_unchecked(i)),
                (x.lower_unchecked(i), y.lower_unchecked(i)),
            ] {
                match (nx, ny) {
                    (None, None) => {}
                    (Some(nx), Some(ny)) => match (fwd.get(&nx), bwd.get(&ny)) {
                        (None, None) => {
                            fwd.insert(nx.clone(), ny.clone());
                            bwd.insert(ny.clone(), nx.clone());
                            queue.push_back((nx, ny));
                        }
                        (Some(img), Some(pre)) if *img == ny && *pre == nx => {}
                        _ => return false,
                    },
                    _ => return false,
                }
            }
        }
    }
    true
}

/// `T -> T_r ⊗ ... ⊗ T_1` where `T_k` is the k-th column from the left.
pub fn columns_of_ssyt(t: &SsyTableau) -> Result<TensorElt> {
    let mut cols = t.columns();
    cols.reverse();
    TensorElt::new(t.n(), cols)
}
