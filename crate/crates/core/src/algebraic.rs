//! Finite polynomial systems of equations and inequations: pseudo-division,
//! resultants, discriminants and decomposition into quasi-simple systems.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Error;
use crate::janet::OperatorMonomial;
use crate::ring::{
    eliminate, initial_in, leader, normalize, reductum, OperatorKind, OperatorPolynomial, OperatorVariable, Ranking,
};

type P = OperatorPolynomial;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraicSystem {
    pub equations: Vec<OperatorPolynomial>,
    pub inequations: Vec<OperatorPolynomial>,
}

impl AlgebraicSystem {
    pub fn new(equations: Vec<OperatorPolynomial>, inequations: Vec<OperatorPolynomial>) -> Self {
        AlgebraicSystem { equations, inequations }
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty() && self.inequations.is_empty()
    }
}

/// `multiplier·p = quotient·q + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoDivision {
    pub multiplier: OperatorPolynomial,
    pub quotient: OperatorPolynomial,
    pub remainder: OperatorPolynomial,
}

impl PseudoDivision {
    pub fn check(&self, p: &P, q: &P) -> bool {
        &self.multiplier * p == &(&self.quotient * q) + &self.remainder
    }
}

pub fn pseudo_divide(p: &P, q: &P, z: &OperatorVariable) -> PseudoDivision {
    let dq = q.degree_in(z);
    let mut rem = p.clone();
    let mut quotient = P::zero();
    let mut multiplier = P::one();
    while !rem.is_zero() && dq > 0 && rem.degree_in(z) >= dq {
        let (r, m, c) = eliminate(&rem, q, z);
        quotient = &(&quotient * &m) + &c;
        multiplier = &multiplier * &m;
        rem = r;
    }
    PseudoDivision { multiplier, quotient, remainder: rem }
}

pub fn pseudo_remainder(p: &P, q: &P, z: &OperatorVariable) -> P {
    let dq = q.degree_in(z);
    let mut rem = p.clone();
    while !rem.is_zero() && dq > 0 && rem.degree_in(z) >= dq {
        rem = eliminate(&rem, q, z).0;
    }
    rem
}

/// Fraction-free determinant (Bareiss) of a square matrix of polynomials.
pub fn determinant(mut m: Vec<Vec<P>>) -> P {
    let n = m.len();
    if n == 0 {
        return P::one();
    }
    let mut sign = false;
    let mut prev = P::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = !sign;
                }
                None => return P::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

fn coefficients_desc(p: &P, z: &OperatorVariable) -> Vec<P> {
    let d = p.degree_in(z);
    let cs = p.coefficients_in(z);
    (0..=d).rev().map(|k| cs.get(&k).cloned().unwrap_or_default()).collect()
}

/// Sylvester matrix with the `deg_z p` rows of `q` on top, followed by the
/// `deg_z q` rows of `p`. Its determinant is `lc(q)^deg p` times the product
/// of `p` over the roots of `q`.
pub fn sylvester_matrix(p: &P, q: &P, z: &OperatorVariable) -> Vec<Vec<P>> {
    let m = p.degree_in(z) as usize;
    let n = q.degree_in(z) as usize;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (count, coeffs) in [(m, coefficients_desc(q, z)), (n, coefficients_desc(p, z))] {
        for i in 0..count {
            let mut row = vec![P::zero(); size];
            for (j, c) in coeffs.iter().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

pub fn resultant(p: &P, q: &P, z: &OperatorVariable) -> Result<P, Error> {
    let m = p.degree_in(z);
    let n = q.degree_in(z);
    match (m, n) {
        (0, 0) => Err(Error::ResultantOfConstants),
        (_, 0) => Ok(q.pow(m)),
        (0, _) => Ok(p.pow(n)),
        _ => Ok(determinant(sylvester_matrix(p, q, z))),
    }
}

pub fn discriminant(p: &P, z: &OperatorVariable) -> Result<P, Error> {
    let d = p.degree_in(z);
    if d == 0 {
        return Err(Error::NoLeader);
    }
    let r = resultant(p, &p.partial_derivative(z), z)?;
    let r = if (d * (d - 1) / 2) % 2 == 1 { -r } else { r };
    r.div_exact(&initial_in(p, z))
        .ok_or_else(|| Error::InexactDivision("discriminant by initial".into()))
}

/// Decides whether a polynomial is nonzero on the solution set by a
/// sufficient syntactic criterion: it is a nonzero constant or an exact
/// product of known nonzero factors (and, for difference systems, of their
/// shifts).
#[derive(Clone, Debug)]
pub struct Certifier<'a> {
    factors: &'a [P],
    shift_closed: bool,
}

impl<'a> Certifier<'a> {
    pub fn new(factors: &'a [P], shift_closed: bool) -> Self {
        Certifier { factors, shift_closed }
    }

    fn candidates(&self, c: &P, g: &P) -> Vec<P> {
        let mut out = vec![g.clone()];
        if !self.shift_closed {
            return out;
        }
        let gv = g.variables();
        let mut thetas: Vec<OperatorMonomial> = Vec::new();
        for w in c.variables() {
            if w.kind != OperatorKind::Shift {
                continue;
            }
            for x in gv.iter().filter(|x| x.dep == w.dep) {
                if let Some(t) = x.action.quotient_of(&w.action) {
                    if !t.is_identity() && !thetas.contains(&t) {
                        thetas.push(t);
                    }
                }
            }
        }
        for t in thetas {
            out.push(g.map_vars(|v| v.apply(&t)));
        }
        out
    }

    pub fn certifies(&self, c: &P) -> bool {
        !c.is_zero() && self.covers(&c.normalized())
    }

    fn covers(&self, c: &P) -> bool {
        if c.is_constant() {
            return true;
        }
        for g in self.factors.iter().filter(|g| !g.is_constant()) {
            for cand in self.candidates(c, g) {
                if let Some(q) = c.div_exact(&cand) {
                    if self.covers(&q.normalized()) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

#[derive(Clone, Debug)]
pub struct QuasiOptions {
    /// Treat shifts of inequations as known nonzero (difference systems).
    pub shift_closed: bool,
    pub max_branches: usize,
}

impl Default for QuasiOptions {
    fn default() -> Self {
        QuasiOptions { shift_closed: false, max_branches: 100_000 }
    }
}

#[derive(Clone, Debug)]
struct Branch {
    eqs: Vec<P>,
    ineqs: Vec<P>,
    /// Every polynomial ever asserted nonzero on this branch, unreduced.
    known: Vec<P>,
}

enum Outcome {
    Inconsistent,
    Split(Branch, Branch),
    Done(AlgebraicSystem),
}

fn clean(b: &mut Branch, rk: &Ranking) -> bool {
    let mut eqs: Vec<P> = Vec::with_capacity(b.eqs.len());
    for e in b.eqs.drain(..) {
        if e.is_zero() {
            continue;
        }
        if e.is_constant() {
            return false;
        }
        let n = normalize(&e, rk);
        if !eqs.contains(&n) {
            eqs.push(n);
        }
    }
    let mut ineqs: Vec<P> = Vec::with_capacity(b.ineqs.len());
    for g in b.ineqs.drain(..) {
        if g.is_zero() {
            return false;
        }
        if g.is_constant() {
            continue;
        }
        let n = normalize(&g, rk);
        if !ineqs.contains(&n) {
            ineqs.push(n);
        }
    }
    b.eqs = eqs;
    b.ineqs = ineqs;
    true
}

fn sorted_leaders(b: &Branch, rk: &Ranking) -> Vec<OperatorVariable> {
    let mut ls: Vec<OperatorVariable> = Vec::new();
    for p in b.eqs.iter().chain(&b.ineqs) {
        if let Some(l) = leader(p, rk) {
            if !ls.contains(&l) {
                ls.push(l);
            }
        }
    }
    ls.sort_by(|a, b| rk.cmp(b, a));
    ls
}

fn split_on_initial(b: &Branch, target_is_eq: bool, idx: usize, v: &OperatorVariable) -> Outcome {
    let target = if target_is_eq { &b.eqs[idx] } else { &b.ineqs[idx] };
    let init = initial_in(target, v);
    let mut zero = b.clone();
    if target_is_eq {
        zero.eqs[idx] = reductum(target, v);
    } else {
        zero.ineqs[idx] = reductum(target, v);
    }
    zero.eqs.push(init.clone());
    let mut nonzero = b.clone();
    nonzero.known.push(init.clone());
    nonzero.ineqs.push(init);
    Outcome::Split(zero, nonzero)
}

fn finish(b: Branch, rk: &Ranking) -> AlgebraicSystem {
    let mut eqs = b.eqs;
    eqs.sort_by(|p, q| compare_by_leader(p, q, rk));
    let mut groups: Vec<(OperatorVariable, P)> = Vec::new();
    for g in b.ineqs {
        let l = leader(&g, rk).expect("inequations are non-constant");
        match groups.iter_mut().find(|(w, _)| *w == l) {
            Some((_, prod)) => *prod = &*prod * &g,
            None => groups.push((l, g)),
        }
    }
    groups.sort_by(|a, b| rk.cmp(&b.0, &a.0));
    AlgebraicSystem {
        equations: eqs,
        inequations: groups.into_iter().map(|(_, g)| normalize(&g, rk)).collect(),
    }
}

/// Orders polynomials by leader (highest first), then degree, then structure.
pub fn compare_by_leader(p: &P, q: &P, rk: &Ranking) -> Ordering {
    match (leader(p, rk), leader(q, rk)) {
        (Some(a), Some(b)) => rk
            .cmp(&b, &a)
            .then_with(|| q.degree_in(&b).cmp(&p.degree_in(&a)))
            .then_with(|| p.len().cmp(&q.len()))
            .then_with(|| p.cmp(q)),
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
        (None, None) => p.cmp(q),
    }
}

/// On the solutions of `eqs`, `reduce_triangular(c)` is a multiple of `c`, so
/// certifying the reduced form also certifies `c`.
fn certified(cert: &Certifier<'_>, c: &P, eqs: &[P], rk: &Ranking) -> bool {
    cert.certifies(c) || {
        let r = reduce_triangular(c, eqs, rk);
        r != *c && cert.certifies(&r)
    }
}

fn process(mut b: Branch, rk: &Ranking, opts: &QuasiOptions) -> Outcome {
    'outer: loop {
        if !clean(&mut b, rk) {
            return Outcome::Inconsistent;
        }
        for v in sorted_leaders(&b, rk) {
            let ev: Vec<usize> = (0..b.eqs.len()).filter(|&i| leader(&b.eqs[i], rk).as_ref() == Some(&v)).collect();
            let iv: Vec<usize> = (0..b.ineqs.len())
                .filter(|&i| leader(&b.ineqs[i], rk).as_ref() == Some(&v))
                .collect();
            let facts: Vec<P> = b.ineqs.iter().chain(&b.known).cloned().collect();
            let cert = Certifier::new(&facts, opts.shift_closed);
            if let Some(&qi) = ev.iter().min_by(|&&i, &&j| {
                let (p, q) = (&b.eqs[i], &b.eqs[j]);
                p.degree_in(&v)
                    .cmp(&q.degree_in(&v))
                    .then(p.len().cmp(&q.len()))
                    .then_with(|| p.cmp(q))
            }) {
                if !certified(&cert, &initial_in(&b.eqs[qi], &v), &b.eqs, rk) {
                    return split_on_initial(&b, true, qi, &v);
                }
                let q = b.eqs[qi].clone();
                let mut changed = false;
                for &i in ev.iter().filter(|&&i| i != qi) {
                    let r = pseudo_remainder(&b.eqs[i], &q, &v);
                    changed |= r != b.eqs[i];
                    b.eqs[i] = r;
                }
                for &i in &iv {
                    let r = pseudo_remainder(&b.ineqs[i], &q, &v);
                    changed |= r != b.ineqs[i];
                    b.ineqs[i] = r;
                }
                if changed {
                    continue 'outer;
                }
            } else {
                for &i in &iv {
                    if !certified(&cert, &initial_in(&b.ineqs[i], &v), &b.eqs, rk) {
                        return split_on_initial(&b, false, i, &v);
                    }
                }
            }
        }
        return Outcome::Done(AlgebraicSystem { equations: b.eqs.clone(), inequations: b.ineqs.clone() });
    }
}

/// Splits a system into quasi-simple systems whose solution sets partition
/// the solution set of the input. Inconsistent branches are dropped.
pub fn quasi_simple_decompose(
    s: &AlgebraicSystem,
    rk: &Ranking,
    opts: &QuasiOptions,
) -> Result<Vec<AlgebraicSystem>, Error> {
    let mut stack = vec![Branch {
        eqs: s.equations.clone(),
        ineqs: s.inequations.clone(),
        known: s.inequations.clone(),
    }];
    let mut out: Vec<AlgebraicSystem> = Vec::new();
    let mut seen = 0usize;
    while let Some(b) = stack.pop() {
        seen += 1;
        if seen > opts.max_branches {
            return Err(Error::ResourceLimit(format!(
                "more than {} algebraic branches",
                opts.max_branches
            )));
        }
        match process(b, rk, opts) {
            Outcome::Inconsistent => {}
            Outcome::Split(zero, nonzero) => {
                stack.push(nonzero);
                stack.push(zero);
            }
            Outcome::Done(sys) => {
                let sys = finish(Branch { eqs: sys.equations, ineqs: sys.inequations, known: Vec::new() }, rk);
                if !out.contains(&sys) {
                    out.push(sys);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quasi,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

impl Validation {
    pub fn yes() -> Self {
        Validation { verdict: Verdict::Yes, reasons: Vec::new() }
    }

    /// Combines two verdicts: `No` dominates `Unknown`, which dominates `Yes`.
    pub fn merge(&mut self, other: Validation) {
        self.verdict = match (self.verdict, other.verdict) {
            (Verdict::No, _) | (_, Verdict::No) => Verdict::No,
            (Verdict::Unknown, _) | (_, Verdict::Unknown) => Verdict::Unknown,
            _ => Verdict::Yes,
        };
        self.reasons.extend(other.reasons);
    }

    fn downgrade(&mut self, v: Verdict, reason: String) {
        self.merge(Validation { verdict: v, reasons: vec![reason] });
    }
}

/// Pseudo-reduces `c` by the equations whose leaders occur in it, highest first.
pub fn reduce_triangular(c: &P, eqs: &[P], rk: &Ranking) -> P {
    let mut c = c.clone();
    loop {
        let mut progressed = false;
        for v in rk.sorted_variables(&c) {
            if let Some(e) = eqs.iter().find(|e| leader(e, rk).as_ref() == Some(&v) && c.degree_in(&v) >= e.degree_in(&v)) {
                c = pseudo_remainder(&c, e, &v);
                progressed = true;
                break;
            }
        }
        if !progressed || c.is_zero() {
            return c;
        }
    }
}

/// Checks the quasi-simple (or simple, at `Level::Full`) conditions. The
/// nonvanishing conditions are decided by a sufficient criterion, so a
/// failure to certify yields `Unknown` rather than `No`.
pub fn validate(s: &AlgebraicSystem, level: Level, rk: &Ranking, shift_closed: bool) -> Validation {
    let mut v = Validation::yes();
    let members: Vec<(&P, bool, usize)> = s
        .equations
        .iter()
        .enumerate()
        .map(|(i, p)| (p, true, i))
        .chain(s.inequations.iter().enumerate().map(|(i, p)| (p, false, i)))
        .collect();
    let label = |eq: bool, i: usize| if eq { format!("equation {}", i + 1) } else { format!("inequation {}", i + 1) };
    let mut leaders: Vec<OperatorVariable> = Vec::new();
    for &(p, eq, i) in &members {
        match leader(p, rk) {
            None => v.downgrade(Verdict::No, format!("{} is constant", label(eq, i))),
            Some(l) => {
                if leaders.contains(&l) {
                    v.downgrade(Verdict::No, format!("{} repeats a leader", label(eq, i)));
                }
                leaders.push(l);
            }
        }
    }
    if v.verdict == Verdict::No {
        return v;
    }
    let cert = Certifier::new(&s.inequations, shift_closed);
    for &(p, eq, i) in &members {
        let l = leader(p, rk).expect("checked above");
        let init = reduce_triangular(&initial_in(p, &l), &s.equations, rk);
        if init.is_zero() {
            v.downgrade(Verdict::No, format!("initial of {} vanishes on the solution set", label(eq, i)));
        } else if !cert.certifies(&init) {
            v.downgrade(Verdict::Unknown, format!("initial of {} not certified nonzero", label(eq, i)));
        }
        if level == Level::Full {
            let disc = match discriminant(p, &l) {
                Ok(d) => reduce_triangular(&d, &s.equations, rk),
                Err(e) => {
                    v.downgrade(Verdict::Unknown, format!("discriminant of {}: {e}", label(eq, i)));
                    continue;
                }
            };
            if disc.is_zero() {
                v.downgrade(Verdict::No, format!("discriminant of {} vanishes on the solution set", label(eq, i)));
            } else if !cert.certifies(&disc) {
                v.downgrade(Verdict::Unknown, format!("discriminant of {} not certified nonzero", label(eq, i)));
            }
        }
    }
    v
}
