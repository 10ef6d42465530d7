//! Cartan datum of type A_{n-1}.
//!
//! Weights are stored in the fundamental-weight basis (coordinate `i` is
//! `<h_i, lambda>`), roots in the simple-root basis. The symmetric form is
//! normalized so that `(alpha_i, alpha_i) = 2`; on fundamental weights it is
//! the inverse Cartan matrix, `(Lambda_i, Lambda_j) = min(i,j)(n - max(i,j))/n`.

use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational used for values of the form on the weight lattice.
pub type Rat = Ratio<i64>;

/// Type A_{n-1}: index set `I = {1, ..., n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanA {
    n: usize,
}

impl CartanA {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!(
                "type A_(n-1) needs n >= 2, got {n}"
            )));
        }
        Ok(CartanA { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of simple roots, `n - 1`.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// Cartan matrix entry `a_{ij}` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        cartan_entry(i, j)
    }

    /// Inverse Cartan matrix entry, i.e. `(Lambda_i, Lambda_j)`.
    pub fn inverse_entry(&self, i: usize, j: usize) -> Rat {
        let n = self.n as i64;
        let (lo, hi) = (i.min(j) as i64, i.max(j) as i64);
        Rat::new(lo * (n - hi), n)
    }

    pub fn simple_root(&self, i: usize) -> Result<RootVec> {
        self.check_index(i)?;
        let mut c = vec![0; self.rank()];
        c[i - 1] = 1;
        Ok(RootVec(c))
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<WeightVec> {
        self.check_index(i)?;
        let mut c = vec![0; self.rank()];
        c[i - 1] = 1;
        Ok(WeightVec(c))
    }

    /// `Lambda_k` for `0 <= k <= n`, with `Lambda_0 = Lambda_n = 0`.
    pub fn fundamental_or_zero(&self, k: usize) -> WeightVec {
        let mut c = vec![0; self.rank()];
        if k >= 1 && k <= self.rank() {
            c[k - 1] = 1;
        }
        WeightVec(c)
    }

    pub fn zero_weight(&self) -> WeightVec {
        WeightVec(vec![0; self.rank()])
    }

    pub fn zero_root(&self) -> RootVec {
        RootVec(vec![0; self.rank()])
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: len,
            });
        }
        Ok(())
    }

    /// The symmetric bilinear form on `P` (and on `Q` through `Q -> P`).
    pub fn pair_form(&self, x: &LatticeVec, y: &LatticeVec) -> Result<Rat> {
        self.check_len(x.coords().len())?;
        self.check_len(y.coords().len())?;
        let r = self.rank();
        let mut acc = Rat::from_integer(0);
        match (x, y) {
            (LatticeVec::Root(a), LatticeVec::Root(b)) => {
                for i in 1..=r {
                    for j in 1..=r {
                        acc += Rat::from_integer(a.0[i - 1] * b.0[j - 1] * cartan_entry(i, j));
                    }
                }
            }
            // (alpha_i, Lambda_j) = delta_ij
            (LatticeVec::Root(a), LatticeVec::Weight(w))
            | (LatticeVec::Weight(w), LatticeVec::Root(a)) => {
                let s: i64 = a.0.iter().zip(&w.0).map(|(p, q)| p * q).sum();
                acc = Rat::from_integer(s);
            }
            (LatticeVec::Weight(a), LatticeVec::Weight(b)) => {
                for i in 1..=r {
                    if a.0[i - 1] == 0 {
                        continue;
                    }
                    for j in 1..=r {
                        acc += self.inverse_entry(i, j) * (a.0[i - 1] * b.0[j - 1]);
                    }
                }
            }
        }
        Ok(acc)
    }

    /// Integer-valued pairing of a root with a weight or root.
    pub fn pair_root(&self, beta: &RootVec, y: &LatticeVec) -> Result<i64> {
        let v = self.pair_form(&LatticeVec::Root(beta.clone()), y)?;
        debug_assert!(v.is_integer());
        Ok(v.to_integer())
    }

    /// `<h_i, lambda>`.
    pub fn coroot_pairing(&self, i: usize, lambda: &WeightVec) -> Result<i64> {
        self.check_index(i)?;
        self.check_len(lambda.0.len())?;
        Ok(lambda.0[i - 1])
    }

    /// Image of a root in the weight lattice (Cartan matrix times coefficients).
    pub fn root_to_weight(&self, beta: &RootVec) -> Result<WeightVec> {
        self.check_len(beta.0.len())?;
        let r = self.rank();
        let coords = (1..=r)
            .map(|i| (1..=r).map(|j| cartan_entry(i, j) * beta.0[j - 1]).sum())
            .collect();
        Ok(WeightVec(coords))
    }

    /// Inverse of [`CartanA::root_to_weight`]; fails when the weight is not in `Q`.
    pub fn weight_to_root(&self, w: &WeightVec) -> Result<RootVec> {
        self.check_len(w.0.len())?;
        let r = self.rank();
        let mut coeffs = Vec::with_capacity(r);
        for i in 1..=r {
            let mut acc = Rat::from_integer(0);
            for j in 1..=r {
                acc += self.inverse_entry(i, j) * w.0[j - 1];
            }
            if !acc.is_integer() {
                return Err(Error::InvalidInput(format!(
                    "weight {:?} is not in the root lattice",
                    w.0
                )));
            }
            coeffs.push(acc.to_integer());
        }
        Ok(RootVec(coeffs))
    }
}

fn cartan_entry(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// Element of the weight lattice `P`, fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

/// Element of the root lattice `Q`, simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

macro_rules! lattice_ops {
    ($t:ident) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                assert_eq!(self.0.len(), o.0.len(), "lattice rank mismatch");
                $t(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                assert_eq!(self.0.len(), o.0.len(), "lattice rank mismatch");
                $t(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(self.0.iter().map(|a| -a).collect())
            }
        }
        impl $t {
            pub fn scale(&self, k: i64) -> $t {
                $t(self.0.iter().map(|a| a * k).collect())
            }
        }
    };
}

lattice_ops!(WeightVec);
lattice_ops!(RootVec);

/// Either kind of lattice element, for the mixed pairings of `pair_form`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeVec {
    Weight(WeightVec),
    Root(RootVec),
}

impl LatticeVec {
    fn coords(&self) -> &[i64] {
        match self {
            LatticeVec::Weight(w) => &w.0,
            LatticeVec::Root(r) => &r.0,
        }
    }
}

impl From<WeightVec> for LatticeVec {
    fn from(w: WeightVec) -> Self {
        LatticeVec::Weight(w)
    }
}

impl From<RootVec> for LatticeVec {
    fn from(r: RootVec) -> Self {
        LatticeVec::Root(r)
    }
}

impl From<&WeightVec> for LatticeVec {
    fn from(w: &WeightVec) -> Self {
        LatticeVec::Weight(w.clone())
    }
}

impl From<&RootVec> for LatticeVec {
    fn from(r: &RootVec) -> Self {
        LatticeVec::Root(r.clone())
    }
}

/// Shorthand for `cd.pair_form(&x.into(), &y.into())`.
pub fn pair<X: Into<LatticeVec>, Y: Into<LatticeVec>>(cd: &CartanA, x: X, y: Y) -> Result<Rat> {
    cd.pair_form(&x.into(), &y.into())
}
