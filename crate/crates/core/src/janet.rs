//! Janet division on monomials in the operator symbols.
//!
//! All functions take the symbol order explicitly: `order[0]` is the symbol
//! examined first by the multiplicativity criterion, `order[1]` the next and
//! so on. [`default_order`] is declaration order.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Error;

/// Exponent vector of a power product of operator symbols (shifts or derivations).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperatorMonomial(pub Vec<u32>);

impl OperatorMonomial {
    pub fn identity(n: usize) -> Self {
        OperatorMonomial(vec![0; n])
    }

    pub fn unit(n: usize, symbol: usize) -> Self {
        let mut e = vec![0; n];
        e[symbol] = 1;
        OperatorMonomial(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, symbol: usize) -> u32 {
        self.0[symbol]
    }

    pub fn mul(&self, other: &Self) -> Self {
        OperatorMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn times_symbol(&self, symbol: usize) -> Self {
        let mut e = self.0.clone();
        e[symbol] += 1;
        OperatorMonomial(e)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(OperatorMonomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    /// Lexicographic comparison with symbols visited in `order`.
    pub fn cmp_lex(&self, other: &Self, order: &[usize]) -> Ordering {
        for &s in order {
            match self.0[s].cmp(&other.0[s]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// True when every symbol with a positive exponent is flagged in `allowed`.
    pub fn uses_only(&self, allowed: &[bool]) -> bool {
        self.0.iter().zip(allowed).all(|(&e, &ok)| e == 0 || ok)
    }
}

pub fn default_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Multiplicative / non-multiplicative partition of the symbols for one monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JanetClassification {
    /// Indexed by symbol (not by position in the order).
    pub multiplicative: Vec<bool>,
}

impl JanetClassification {
    pub fn multiplicative_symbols(&self) -> Vec<usize> {
        (0..self.multiplicative.len()).filter(|&i| self.multiplicative[i]).collect()
    }

    pub fn non_multiplicative_symbols(&self) -> Vec<usize> {
        (0..self.multiplicative.len()).filter(|&i| !self.multiplicative[i]).collect()
    }

    pub fn is_multiplicative(&self, symbol: usize) -> bool {
        self.multiplicative[symbol]
    }
}

/// Janet multiplicative variables of `m` with respect to the finite set `set`.
pub fn multiplicative_variables(
    m: &OperatorMonomial,
    set: &[OperatorMonomial],
    order: &[usize],
) -> Result<JanetClassification, Error> {
    if !set.contains(m) {
        return Err(Error::NotAMember);
    }
    Ok(classify(m, set, order))
}

fn classify(m: &OperatorMonomial, set: &[OperatorMonomial], order: &[usize]) -> JanetClassification {
    let n = m.len();
    let mut multiplicative = vec![false; n];
    for (k, &s) in order.iter().enumerate() {
        let prefix = &order[..k];
        let max = set
            .iter()
            .filter(|g| prefix.iter().all(|&p| g.0[p] == m.0[p]))
            .map(|g| g.0[s])
            .max()
            .unwrap_or(0);
        multiplicative[s] = m.0[s] == max;
    }
    JanetClassification { multiplicative }
}

/// A finite monomial set together with its Janet classification.
#[derive(Clone, Debug)]
pub struct JanetSet {
    order: Vec<usize>,
    members: Vec<OperatorMonomial>,
    classes: Vec<JanetClassification>,
}

impl JanetSet {
    pub fn new(members: Vec<OperatorMonomial>, order: &[usize]) -> Self {
        let classes = members.iter().map(|m| classify(m, &members, order)).collect();
        JanetSet { order: order.to_vec(), members, classes }
    }

    pub fn members(&self) -> &[OperatorMonomial] {
        &self.members
    }

    pub fn classification(&self, i: usize) -> &JanetClassification {
        &self.classes[i]
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The unique member `m` and `θ ∈ Mon(μ(m))` with `v = θ·m`, if any.
    pub fn divisor(&self, v: &OperatorMonomial) -> Option<(usize, OperatorMonomial)> {
        self.members.iter().enumerate().find_map(|(i, m)| {
            let theta = m.quotient_of(v)?;
            if theta.uses_only(&self.classes[i].multiplicative) {
                Some((i, theta))
            } else {
                None
            }
        })
    }

    /// Non-multiplicative prolongations without a Janet divisor, largest first.
    pub fn missing_prolongations(&self) -> Vec<(usize, usize, OperatorMonomial)> {
        let mut out = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            for s in self.classes[i].non_multiplicative_symbols() {
                let p = m.times_symbol(s);
                if self.divisor(&p).is_none() {
                    out.push((i, s, p));
                }
            }
        }
        out.sort_by(|a, b| b.2.cmp_lex(&a.2, &self.order).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));
        out
    }

    pub fn is_complete(&self) -> bool {
        self.missing_prolongations().is_empty()
    }
}

/// Janet completion: a superset of `set` with the same multiple-closure whose
/// Janet cones partition that closure.
pub fn janet_completion(set: &[OperatorMonomial], order: &[usize]) -> Vec<OperatorMonomial> {
    let mut members: Vec<OperatorMonomial> = Vec::new();
    for m in set {
        if !members.contains(m) {
            members.push(m.clone());
        }
    }
    loop {
        let js = JanetSet::new(members, order);
        let missing = js.missing_prolongations();
        members = js.members;
        match missing.into_iter().next() {
            Some((_, _, p)) => members.push(p),
            None => return members,
        }
    }
}

/// Janet divisor lookup in a Janet complete set.
pub fn find_janet_divisor(
    v: &OperatorMonomial,
    set: &[OperatorMonomial],
    order: &[usize],
) -> Option<(OperatorMonomial, OperatorMonomial)> {
    let js = JanetSet::new(set.to_vec(), order);
    js.divisor(v).map(|(i, theta)| (set[i].clone(), theta))
}
