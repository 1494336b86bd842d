//! Operator variables, rankings and single pseudo-reduction steps shared by the
//! difference ring and the differential ring.

mod poly;

pub use poly::{mono_cmp_lex, Monomial, Polynomial};

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::coeffs::Coefficient;
use crate::error::Error;
use crate::janet::OperatorMonomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperatorKind {
    Shift,
    Derivative,
}

/// `σ^J u^(α)` or `∂^J u^(α)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperatorVariable {
    pub kind: OperatorKind,
    pub dep: usize,
    pub action: OperatorMonomial,
}

impl OperatorVariable {
    pub fn new(kind: OperatorKind, dep: usize, action: OperatorMonomial) -> Self {
        OperatorVariable { kind, dep, action }
    }

    pub fn shift(dep: usize, exps: &[u32]) -> Self {
        Self::new(OperatorKind::Shift, dep, OperatorMonomial(exps.to_vec()))
    }

    pub fn derivative(dep: usize, exps: &[u32]) -> Self {
        Self::new(OperatorKind::Derivative, dep, OperatorMonomial(exps.to_vec()))
    }

    pub fn apply(&self, theta: &OperatorMonomial) -> Self {
        OperatorVariable { kind: self.kind, dep: self.dep, action: self.action.mul(theta) }
    }

    pub fn with_kind(&self, kind: OperatorKind) -> Self {
        OperatorVariable { kind, dep: self.dep, action: self.action.clone() }
    }
}

pub type OperatorPolynomial = Polynomial<OperatorVariable>;

/// The kind shared by all variables of `p`; `None` for constants.
pub fn polynomial_kind(p: &OperatorPolynomial) -> Result<Option<OperatorKind>, Error> {
    let mut kind = None;
    for v in p.variables() {
        match kind {
            None => kind = Some(v.kind),
            Some(k) if k != v.kind => return Err(Error::KindMismatch),
            _ => {}
        }
    }
    Ok(kind)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankingScheme {
    TopLex,
    PotLex,
}

/// A ranking on operator variables. `symbol_order[0]` is the highest symbol
/// and `dep_order[0]` the highest dependent variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ranking {
    pub scheme: RankingScheme,
    pub symbol_order: Vec<usize>,
    pub dep_order: Vec<usize>,
    dep_rank: Vec<usize>,
}

impl Ranking {
    pub fn new(scheme: RankingScheme, symbol_order: Vec<usize>, dep_order: Vec<usize>) -> Self {
        let mut dep_rank = alloc::vec![0; dep_order.len()];
        for (pos, &d) in dep_order.iter().enumerate() {
            dep_rank[d] = pos;
        }
        Ranking { scheme, symbol_order, dep_order, dep_rank }
    }

    /// Declaration order for symbols and dependents.
    pub fn declared(scheme: RankingScheme, symbols: usize, deps: usize) -> Self {
        Self::new(scheme, (0..symbols).collect(), (0..deps).collect())
    }

    pub fn symbols(&self) -> usize {
        self.symbol_order.len()
    }

    pub fn deps(&self) -> usize {
        self.dep_order.len()
    }

    fn dep_cmp(&self, a: usize, b: usize) -> Ordering {
        self.dep_rank[b].cmp(&self.dep_rank[a])
    }

    /// Total order on variables, ignoring the kind.
    pub fn cmp(&self, v: &OperatorVariable, w: &OperatorVariable) -> Ordering {
        let j = v.action.cmp_lex(&w.action, &self.symbol_order);
        let d = self.dep_cmp(v.dep, w.dep);
        match self.scheme {
            RankingScheme::TopLex => j.then(d),
            RankingScheme::PotLex => d.then(j),
        }
    }

    pub fn max<'a>(&self, vars: impl IntoIterator<Item = &'a OperatorVariable>) -> Option<&'a OperatorVariable> {
        vars.into_iter().max_by(|a, b| self.cmp(a, b))
    }

    /// Variables of `p`, highest first.
    pub fn sorted_variables(&self, p: &OperatorPolynomial) -> Vec<OperatorVariable> {
        let mut vs: Vec<OperatorVariable> = p.variables().into_iter().collect();
        vs.sort_by(|a, b| self.cmp(b, a));
        vs
    }

    /// Terms of `p` in descending order: monomials compared lexicographically
    /// with variables visited highest-ranked first.
    pub fn sorted_terms<'a>(
        &self,
        p: &'a OperatorPolynomial,
    ) -> Vec<(&'a Monomial<OperatorVariable>, &'a Coefficient)> {
        let vars = self.sorted_variables(p);
        let key = |m: &Monomial<OperatorVariable>| -> Vec<u32> {
            vars.iter()
                .map(|v| m.iter().find(|(w, _)| w == v).map(|(_, e)| *e).unwrap_or(0))
                .collect()
        };
        let mut ts: Vec<_> = p.terms().collect();
        ts.sort_by_cached_key(|(m, _)| core::cmp::Reverse(key(m)));
        ts
    }
}

pub fn rank_compare(v: &OperatorVariable, w: &OperatorVariable, r: &Ranking) -> Result<Ordering, Error> {
    if v.kind != w.kind {
        return Err(Error::KindMismatch);
    }
    Ok(r.cmp(v, w))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeaderData {
    pub leader: OperatorVariable,
    pub initial: OperatorPolynomial,
    pub degree: u32,
    pub separant: OperatorPolynomial,
}

pub fn leader(p: &OperatorPolynomial, r: &Ranking) -> Option<OperatorVariable> {
    r.max(p.variables().iter()).cloned()
}

pub fn leader_data(p: &OperatorPolynomial, r: &Ranking) -> Result<LeaderData, Error> {
    let leader = leader(p, r).ok_or(Error::NoLeader)?;
    let degree = p.degree_in(&leader);
    let initial = p.coefficient_of(&leader, degree);
    let separant = p.partial_derivative(&leader);
    Ok(LeaderData { leader, initial, degree, separant })
}

/// Content normalization with the sign fixed so that the highest term under
/// `rk` has a positive leading rational coefficient.
pub fn normalize(p: &OperatorPolynomial, rk: &Ranking) -> OperatorPolynomial {
    let n = p.normalized();
    match rk.sorted_terms(&n).first() {
        Some((_, c)) if c.leading_sign() == Ordering::Less => -&n,
        _ => n,
    }
}

/// Leading coefficient of `p` viewed as a univariate polynomial in `v`.
pub fn initial_in(p: &OperatorPolynomial, v: &OperatorVariable) -> OperatorPolynomial {
    p.coefficient_of(v, p.degree_in(v))
}

/// `p` with its leading term in `v` removed.
pub fn reductum(p: &OperatorPolynomial, v: &OperatorVariable) -> OperatorPolynomial {
    let d = p.degree_in(v);
    p - &(&initial_in(p, v) * &OperatorPolynomial::var_pow(v.clone(), d))
}

/// Derivation `∂_j` extended to polynomials by the chain rule.
pub fn derive(p: &OperatorPolynomial, symbol: usize) -> OperatorPolynomial {
    let mut out = OperatorPolynomial::zero();
    for v in p.variables() {
        let dv = OperatorPolynomial::var(OperatorVariable {
            kind: v.kind,
            dep: v.dep,
            action: v.action.times_symbol(symbol),
        });
        out = &out + &(&p.partial_derivative(&v) * &dv);
    }
    out
}

/// `θ p`: shifts act on every variable and fix coefficients, derivations act
/// by the Leibniz rule.
pub fn apply_operator(kind: OperatorKind, theta: &OperatorMonomial, p: &OperatorPolynomial) -> OperatorPolynomial {
    if theta.is_identity() {
        return p.clone();
    }
    match kind {
        OperatorKind::Shift => p.map_vars(|v| v.apply(theta)),
        OperatorKind::Derivative => {
            let mut out = p.clone();
            for (s, &e) in theta.0.iter().enumerate() {
                for _ in 0..e {
                    out = derive(&out, s);
                }
            }
            out
        }
    }
}

/// One step `r' = multiplier·r − cofactor·θf` of a pseudo-reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub index: usize,
    pub theta: OperatorMonomial,
    pub multiplier: OperatorPolynomial,
    pub cofactor: OperatorPolynomial,
}

impl ReductionStep {
    pub fn replay(&self, r: &OperatorPolynomial, theta_f: &OperatorPolynomial) -> OperatorPolynomial {
        &(&self.multiplier * r) - &(&self.cofactor * theta_f)
    }
}

/// Eliminates the top power of `v` in `r` using `g` whose leader is `v`.
pub fn eliminate(
    r: &OperatorPolynomial,
    g: &OperatorPolynomial,
    v: &OperatorVariable,
) -> (OperatorPolynomial, OperatorPolynomial, OperatorPolynomial) {
    let dg = g.degree_in(v);
    let dr = r.degree_in(v);
    let multiplier = initial_in(g, v);
    let cofactor = &initial_in(r, v) * &OperatorPolynomial::var_pow(v.clone(), dr - dg);
    let out = &(&multiplier * r) - &(&cofactor * g);
    (out, multiplier, cofactor)
}

pub fn pseudo_reduce_step(
    r: &OperatorPolynomial,
    f: &OperatorPolynomial,
    theta: &OperatorMonomial,
    rk: &Ranking,
) -> Result<(OperatorPolynomial, ReductionStep), Error> {
    let lf = leader(f, rk).ok_or(Error::NoLeader)?;
    let tf = apply_operator(lf.kind, theta, f);
    let v = leader(&tf, rk).ok_or(Error::NoLeader)?;
    let need = tf.degree_in(&v);
    let have = r.degree_in(&v);
    if have < need {
        return Err(Error::ReductionPrecondition(format!(
            "degree {have} of the reduced polynomial is below the divisor degree {need}"
        )));
    }
    let (out, multiplier, cofactor) = eliminate(r, &tf, &v);
    Ok((out, ReductionStep { index: 0, theta: theta.clone(), multiplier, cofactor }))
}
