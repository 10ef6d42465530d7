//! Homogeneous modules on standard tableaux, a checker for the defining
//! quiver Hecke relations, and the degree / commutation calculators.
//!
//! Word positions and tableau entries run in opposite directions: `res(S)`
//! lists the box holding `m` first. `tau_p` at word position `p` therefore
//! swaps the entries `m - p` and `m - p + 1` of `S`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cartan::{pair, CartanA, Rat, RootVec, WeightVec};
use crate::crystal::{crystal_equivalent, in_highest_component, TensorElt};
use crate::error::{Error, Result};
use crate::qchar::{LaurentInt, QChar};
use crate::tableaux::{residue_sequence, standard_tableaux, ColumnTableau, StandardTableau};

/// `Q_{i,j}(u, v) = a u + b v + c`; type A only needs these.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QPoly {
    pub u: i64,
    pub v: i64,
    pub constant: i64,
}

impl QPoly {
    pub fn at(&self, u: i64, v: i64) -> i64 {
        self.u * u + self.v * v + self.constant
    }

    /// `(Q(a, b) - Q(c, b)) / (a - c)`, a constant for linear `Q`.
    pub fn divided_difference(&self) -> i64 {
        self.u
    }

    pub fn swapped(&self) -> QPoly {
        QPoly {
            u: self.v,
            v: self.u,
            constant: self.constant,
        }
    }
}

/// The polynomials `Q_{i,j}`: `u - v` for `i < j` adjacent, `v - u` for
/// `i > j` adjacent, `1` for distant pairs and `0` on the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QParams {
    n: usize,
}

impl QParams {
    pub fn type_a(cd: &CartanA) -> Self {
        QParams { n: cd.n() }
    }

    pub fn get(&self, i: usize, j: usize) -> QPoly {
        match i.abs_diff(j) {
            0 => QPoly {
                u: 0,
                v: 0,
                constant: 0,
            },
            1 if i < j => QPoly {
                u: 1,
                v: -1,
                constant: 0,
            },
            1 => QPoly {
                u: -1,
                v: 1,
                constant: 0,
            },
            _ => QPoly {
                u: 0,
                v: 0,
                constant: 1,
            },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// `Sp^T` with basis `ST(xi_T)`; `x` acts by zero and every basis vector sits in degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpModule {
    column: ColumnTableau,
    basis: Vec<StandardTableau>,
    residues: Vec<Vec<usize>>,
    /// `tau[p - 1][b]`: image of basis vector `b` under `tau_p`.
    tau: Vec<Vec<Option<usize>>>,
}

pub fn build_sp(t: &ColumnTableau, cd: &CartanA) -> Result<SpModule> {
    if t.n() != cd.n() {
        return Err(Error::DimensionMismatch {
            expected: cd.n(),
            found: t.n(),
        });
    }
    t.check_crystal()?;
    let basis = standard_tableaux(&t.xi()?);
    let residues = basis
        .iter()
        .map(|s| residue_sequence(s, t.len(), cd))
        .collect::<Result<Vec<_>>>()?;
    let m = basis.first().map_or(0, StandardTableau::size);
    let index: BTreeMap<&StandardTableau, usize> =
        basis.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let tau = (1..m)
        .map(|p| {
            basis
                .iter()
                .map(|s| s.swap_entries(m - p).and_then(|s2| index.get(&s2).copied()))
                .collect()
        })
        .collect();
    Ok(SpModule {
        column: t.clone(),
        basis,
        residues,
        tau,
    })
}

type Vector = BTreeMap<usize, i64>;

fn add_into(acc: &mut Vector, v: &Vector, k: i64) {
    for (&b, &c) in v {
        let slot = acc.entry(b).or_insert(0);
        *slot += k * c;
        if *slot == 0 {
            acc.remove(&b);
        }
    }
}

fn unit(b: usize) -> Vector {
    Vector::from([(b, 1)])
}

impl SpModule {
    pub fn column(&self) -> &ColumnTableau {
        &self.column
    }

    pub fn k(&self) -> usize {
        self.column.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Length of the residue words, `|xi_T|`.
    pub fn word_length(&self) -> usize {
        self.residues.first().map_or(0, Vec::len)
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn residues(&self) -> &[Vec<usize>] {
        &self.residues
    }

    /// Basis vectors `S` with `e(nu) S = S`.
    pub fn idempotent_support(&self, nu: &[usize]) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.residues[b] == nu)
            .collect()
    }

    pub fn tau_image(&self, p: usize, b: usize) -> Option<usize> {
        self.tau.get(p.checked_sub(1)?)?.get(b).copied().flatten()
    }

    pub fn qch(&self) -> QChar {
        QChar::from_terms(
            self.column.n(),
            self.residues.iter().map(|w| (w.clone(), LaurentInt::one())),
        )
        .expect("residue words share the content beta_T")
    }

    /// Replace the residue word of one basis vector. Only meant for exercising the checkers.
    pub fn override_residue(&mut self, b: usize, word: Vec<usize>) {
        self.residues[b] = word;
    }

    fn e(&self, nu: &[usize], v: &Vector) -> Vector {
        v.iter()
            .filter(|(&b, _)| self.residues[b] == nu)
            .map(|(&b, &c)| (b, c))
            .collect()
    }

    fn tau_op(&self, p: usize, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&b, &c) in v {
            if let Some(b2) = self.tau_image(p, b) {
                add_into(&mut out, &unit(b2), c);
            }
        }
        out
    }

    fn x_op(&self, _k: usize, _v: &Vector) -> Vector {
        Vector::new()
    }

    fn words(&self) -> Vec<Vec<usize>> {
        let mut w = self.residues.clone();
        w.sort();
        w.dedup();
        w
    }

    fn label(&self, b: usize) -> String {
        format!("S={:?}", self.basis[b].rows())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: String,
    pub instance: String,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RelationReport(pub Vec<RelationCheck>);

impl RelationReport {
    fn record(&mut self, relation: &str, instance: String, ok: bool) {
        let status = if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.0.push(RelationCheck {
            relation: relation.to_string(),
            instance,
            status,
        });
    }

    pub fn passed(&self) -> bool {
        self.0.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.0.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Evaluate every defining relation on every basis vector, with `x = 0`.
pub fn verify_qha_relations(m: &SpModule, qp: &QParams) -> RelationReport {
    let mut rep = RelationReport::default();
    let len = m.word_length();
    let words = m.words();
    for b in 0..m.dim() {
        let v = unit(b);
        let lb = m.label(b);

        // e(nu) e(nu') = delta e(nu), sum_nu e(nu) = 1
        for nu in &words {
            for nu2 in &words {
                let lhs = m.e(nu, &m.e(nu2, &v));
                let rhs = if nu == nu2 {
                    m.e(nu, &v)
                } else {
                    Vector::new()
                };
                rep.record(
                    "idempotent",
                    format!("{lb},nu={nu:?},nu'={nu2:?}"),
                    lhs == rhs,
                );
            }
        }
        let mut total = Vector::new();
        for nu in &words {
            add_into(&mut total, &m.e(nu, &v), 1);
        }
        rep.record("idempotent-sum", lb.clone(), total == v);

        // x_k x_l = x_l x_k, x_k e(nu) = e(nu) x_k
        for k in 1..=len {
            for l in 1..=len {
                let lhs = m.x_op(k, &m.x_op(l, &v));
                let rhs = m.x_op(l, &m.x_op(k, &v));
                rep.record("x-commute", format!("{lb},k={k},l={l}"), lhs == rhs);
            }
            for nu in &words {
                let lhs = m.x_op(k, &m.e(nu, &v));
                let rhs = m.e(nu, &m.x_op(k, &v));
                rep.record("x-idempotent", format!("{lb},k={k},nu={nu:?}"), lhs == rhs);
            }
        }

        for p in 1..len {
            // tau_p e(nu) = e(s_p nu) tau_p
            for nu in &words {
                let mut snu = nu.clone();
                snu.swap(p - 1, p);
                let lhs = m.tau_op(p, &m.e(nu, &v));
                let rhs = m.e(&snu, &m.tau_op(p, &v));
                rep.record(
                    "tau-idempotent",
                    format!("{lb},p={p},nu={nu:?}"),
                    lhs == rhs,
                );
            }
            // tau_p tau_l = tau_l tau_p for |p - l| > 1
            for l in 1..len {
                if p.abs_diff(l) > 1 {
                    let lhs = m.tau_op(p, &m.tau_op(l, &v));
                    let rhs = m.tau_op(l, &m.tau_op(p, &v));
                    rep.record("tau-commute", format!("{lb},p={p},l={l}"), lhs == rhs);
                }
            }
            for nu in &words {
                let ev = m.e(nu, &v);
                // tau_p^2 e(nu) = Q_{nu_p, nu_{p+1}}(x_p, x_{p+1}) e(nu)
                let q = qp.get(nu[p - 1], nu[p]).at(0, 0);
                let lhs = m.tau_op(p, &m.tau_op(p, &ev));
                let mut rhs = Vector::new();
                add_into(&mut rhs, &ev, q);
                rep.record("quadratic", format!("{lb},p={p},nu={nu:?}"), lhs == rhs);

                // (tau_p x_l - x_{s_p(l)} tau_p) e(nu) = -e(nu), e(nu) or 0
                for l in 1..=len {
                    let sl = if l == p {
                        p + 1
                    } else if l == p + 1 {
                        p
                    } else {
                        l
                    };
                    let mut lhs = m.tau_op(p, &m.x_op(l, &ev));
                    add_into(&mut lhs, &m.x_op(sl, &m.tau_op(p, &ev)), -1);
                    let coeff = match (nu[p - 1] == nu[p], l) {
                        (true, l) if l == p => -1,
                        (true, l) if l == p + 1 => 1,
                        _ => 0,
                    };
                    let mut rhs = Vector::new();
                    add_into(&mut rhs, &ev, coeff);
                    rep.record("tau-x", format!("{lb},p={p},l={l},nu={nu:?}"), lhs == rhs);
                }

                // braid with the divided-difference correction
                if p + 1 < len {
                    let mut lhs = m.tau_op(p + 1, &m.tau_op(p, &m.tau_op(p + 1, &ev)));
                    add_into(
                        &mut lhs,
                        &m.tau_op(p, &m.tau_op(p + 1, &m.tau_op(p, &ev))),
                        -1,
                    );
                    let coeff = if nu[p - 1] == nu[p + 1] {
                        qp.get(nu[p - 1], nu[p]).divided_difference()
                    } else {
                        0
                    };
                    let mut rhs = Vector::new();
                    add_into(&mut rhs, &ev, coeff);
                    rep.record("braid", format!("{lb},p={p},nu={nu:?}"), lhs == rhs);
                }
            }
        }
    }
    rep
}

/// `x_1^{<h_{nu_last}, Lambda_k>} e(nu) = 0` forces the last residue letter to be `k`.
pub fn verify_cyclotomic(m: &SpModule) -> RelationReport {
    let mut rep = RelationReport::default();
    for b in 0..m.dim() {
        if let Some(&last) = m.residues[b].last() {
            let exponent = (last == m.k()) as i64;
            rep.record(
                "cyclotomic",
                format!("{},nu={:?}", m.label(b), m.residues[b]),
                exponent >= 1,
            );
        }
    }
    rep
}

/// `t = sum_{i<j} (beta_j, lambda_i)` for factors listed in tensor order.
pub fn head_shift_t(betas: &[RootVec], lambdas: &[WeightVec], cd: &CartanA) -> Result<i64> {
    if betas.len() != lambdas.len() {
        return Err(Error::DimensionMismatch {
            expected: betas.len(),
            found: lambdas.len(),
        });
    }
    let mut t = 0;
    for j in 0..betas.len() {
        for lam in &lambdas[..j] {
            t += int_pair(cd, &betas[j], lam)?;
        }
    }
    Ok(t)
}

fn int_pair(cd: &CartanA, x: &RootVec, y: &WeightVec) -> Result<i64> {
    let r = pair(cd, x, y)?;
    if !r.is_integer() {
        return Err(Error::Internal(format!(
            "root-weight pairing {r} is not an integer"
        )));
    }
    Ok(r.to_integer())
}

/// A column `b` viewed as an element of `B(lambda)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub column: ColumnTableau,
    pub lambda: WeightVec,
}

impl Factor {
    /// Pairs a column of length `k` with `Lambda_k`.
    pub fn new(column: ColumnTableau) -> Result<Self> {
        column.check_crystal()?;
        let cd = CartanA::new(column.n())?;
        let lambda = cd.fundamental_weight(column.len())?;
        Ok(Factor { column, lambda })
    }

    /// Rejects `lambda` unless it is `Lambda_{|column|}`, the only highest weight realized by a column.
    pub fn with_lambda(column: ColumnTableau, lambda: WeightVec) -> Result<Self> {
        let f = Factor::new(column)?;
        if f.lambda != lambda {
            return Err(Error::InvalidInput(format!(
                "column {} of length {} lies in B(Lambda_{}), not in B({:?})",
                f.column,
                f.column.len(),
                f.column.len(),
                lambda.0
            )));
        }
        Ok(f)
    }

    /// `beta = lambda - wt(b)`.
    pub fn beta(&self) -> RootVec {
        self.column.beta()
    }

    pub fn weight(&self) -> WeightVec {
        self.tensor().weight()
    }

    fn tensor(&self) -> TensorElt {
        TensorElt::single(self.column.clone()).expect("checked at construction")
    }

    fn cartan(&self) -> CartanA {
        CartanA::new(self.column.n()).expect("n >= 2")
    }
}

fn same_n(fs: &[&Factor]) -> Result<CartanA> {
    let cd = fs[0].cartan();
    for f in fs {
        if f.column.n() != cd.n() {
            return Err(Error::DimensionMismatch {
                expected: cd.n(),
                found: f.column.n(),
            });
        }
    }
    Ok(cd)
}

fn tensor2(a: &Factor, b: &Factor) -> TensorElt {
    a.tensor().tensor(&b.tensor()).expect("same n checked")
}

fn require_highest_component(a: &Factor, b: &Factor) -> Result<()> {
    let t = tensor2(a, b);
    if !in_highest_component(&t) {
        return Err(Error::Precondition(format!(
            "{t} is not in the component of the highest-weight vector of B(Lambda_{}) ⊗ B(Lambda_{})",
            a.column.len(),
            b.column.len()
        )));
    }
    Ok(())
}

/// `d = (beta_2, lambda_1) + (beta_2', lambda_1') - (beta_1', beta_2')`.
///
/// Checks `lambda_1 + lambda_2 = lambda_1' + lambda_2'`, membership of
/// `b1 ⊗ b2` in the highest component and `b1 ⊗ b2 ≃ b1' ⊗ b2'`. Realness
/// is the caller's obligation; it holds for column modules.
pub fn hom_degree_d(b1: &Factor, b2: &Factor, b1p: &Factor, b2p: &Factor) -> Result<i64> {
    let cd = same_n(&[b1, b2, b1p, b2p])?;
    if &b1.lambda + &b2.lambda != &b1p.lambda + &b2p.lambda {
        return Err(Error::InvalidInput(
            "lambda_1 + lambda_2 differs from lambda_1' + lambda_2'".into(),
        ));
    }
    require_highest_component(b1, b2)?;
    if !crystal_equivalent(&tensor2(b1, b2), &tensor2(b1p, b2p)) {
        return Err(Error::Precondition(format!(
            "{} is not crystal-equivalent to {}",
            tensor2(b1, b2),
            tensor2(b1p, b2p)
        )));
    }
    let (beta1p, beta2p) = (b1p.beta(), b2p.beta());
    Ok(
        int_pair(&cd, &b2.beta(), &b1.lambda)? + int_pair(&cd, &beta2p, &b1p.lambda)?
            - pair(&cd, &beta1p, &beta2p)?.to_integer(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaInvariants {
    /// `Lambda~(L(b1), L(b2)) = (beta_2, lambda_1)`.
    pub lambda_tilde: i64,
    /// `Lambda(L(b1), L(b2)) = (beta_2, 2 lambda_1 - beta_1)`.
    pub lambda: i64,
    /// `D(L(b1), L(b2))`, present when primed data is supplied.
    pub dd: Option<Rat>,
}

/// `Lambda~`, `Lambda` and optionally `D` for `b1 ⊗ b2` in the highest component.
///
/// `primed = b2'` (with its own `lambda_2'`) must satisfy `b2' ⊗ b1` in the
/// highest component and `beta_2' = beta_2`; `L(b2) ≃ L(b2')` itself is the
/// caller's obligation.
pub fn lambda_invariants(
    b1: &Factor,
    b2: &Factor,
    primed: Option<&Factor>,
) -> Result<LambdaInvariants> {
    let cd = same_n(&[b1, b2])?;
    require_highest_component(b1, b2)?;
    let (beta1, beta2) = (b1.beta(), b2.beta());
    let lambda_tilde = int_pair(&cd, &beta2, &b1.lambda)?;
    let two_l1_minus_b1 = &b1.lambda.scale(2) - &cd.root_to_weight(&beta1)?;
    let lambda = int_pair(&cd, &beta2, &two_l1_minus_b1)?;
    let b1b2 = pair(&cd, &beta1, &beta2)?;
    if Rat::from(2 * lambda_tilde) != Rat::from(lambda) + b1b2 {
        return Err(Error::Internal(
            "Lambda~ differs from (Lambda + (beta_1, beta_2)) / 2".into(),
        ));
    }
    let dd = match primed {
        None => None,
        Some(b2p) => {
            same_n(&[b1, b2p])?;
            require_highest_component(b2p, b1)?;
            if b2p.beta() != beta2 {
                return Err(Error::Precondition("beta_2' differs from beta_2".into()));
            }
            let via_beta = pair(&cd, &beta1, &b2p.lambda)? + pair(&cd, &beta2, &b1.lambda)? - b1b2;
            let via_weight =
                pair(&cd, &b1.lambda, &b2p.lambda)? - pair(&cd, b1.weight(), b2p.weight())?;
            if via_beta != via_weight {
                return Err(Error::Internal(format!(
                    "two expressions for D disagree: {via_beta} vs {via_weight}"
                )));
            }
            Some(via_beta)
        }
    };
    Ok(LambdaInvariants {
        lambda_tilde,
        lambda,
        dd,
    })
}

/// `(lambda_1, lambda_2) = (wt b1, wt b2)`, cross-checked against
/// `b1 ⊗ b2 ≃ b2 ⊗ b1`.
pub fn strongly_commute(b1: &Factor, b2: &Factor) -> Result<bool> {
    let cd = same_n(&[b1, b2])?;
    require_highest_component(b1, b2)?;
    require_highest_component(b2, b1)?;
    let by_form = pair(&cd, &b1.lambda, &b2.lambda)? == pair(&cd, b1.weight(), b2.weight())?;
    let by_crystal = crystal_equivalent(&tensor2(b1, b2), &tensor2(b2, b1));
    if by_form != by_crystal {
        return Err(Error::Internal(format!(
            "pairing test says {by_form} but crystal equivalence says {by_crystal} for {} and {}",
            b1.column, b2.column
        )));
    }
    Ok(by_form)
}

/// Shift `sum_{a<b} (beta_{T_a}, Lambda_{|T_b|})` for `Sp^{T_r} ∘ ... ∘ Sp^{T_1}`,
/// with `columns = [T_r, ..., T_1]` (leftmost convolution factor first).
pub fn convolution_shift(columns: &[ColumnTableau], cd: &CartanA) -> Result<i64> {
    let betas: Vec<RootVec> = columns.iter().map(ColumnTableau::beta).collect();
    let lambdas: Vec<WeightVec> = columns
        .iter()
        .map(|c| cd.fundamental_or_zero(c.len()))
        .collect();
    head_shift_t(&betas, &lambdas, cd)
}
