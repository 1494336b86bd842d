//! Janet-complete systems of operator polynomials, Janet normal forms,
//! passivity, auto-reduction and the decomposition of difference systems into
//! passive quasi-simple systems.
//!
//! [`JanetSystem`] and [`janet_normal_form`] work for both operator kinds; the
//! differential module reuses them with derivations in place of shifts.

use alloc::collections::BTreeMap;
use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebraic::{compare_by_leader, quasi_simple_decompose, AlgebraicSystem, QuasiOptions};
use crate::error::Error;
use crate::janet::{JanetSet, OperatorMonomial};
use crate::ring::{
    apply_operator, eliminate, initial_in, leader, normalize, OperatorKind, OperatorPolynomial, OperatorVariable,
    Ranking,
};

type P = OperatorPolynomial;

/// One equation of a Janet system with its leader and multiplicative symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JanetPair {
    pub poly: OperatorPolynomial,
    pub leader: OperatorVariable,
    pub degree: u32,
    pub multiplicative: Vec<bool>,
}

impl JanetPair {
    pub fn non_multiplicative(&self) -> Vec<usize> {
        (0..self.multiplicative.len()).filter(|&s| !self.multiplicative[s]).collect()
    }
}

#[derive(Clone, Debug)]
pub struct JanetSystem {
    pub pairs: Vec<JanetPair>,
    pub inequations: Vec<OperatorPolynomial>,
    pub ranking: Ranking,
    pub janet_order: Vec<usize>,
    pub kind: OperatorKind,
    /// Set once passivity has been established.
    pub passive: Option<bool>,
}

fn classify(
    eqs: &[P],
    rk: &Ranking,
    order: &[usize],
) -> Result<Vec<JanetPair>, Error> {
    let mut pairs = Vec::with_capacity(eqs.len());
    for p in eqs {
        let l = leader(p, rk).ok_or(Error::ConstantEquation)?;
        let degree = p.degree_in(&l);
        pairs.push(JanetPair { poly: p.clone(), leader: l, degree, multiplicative: Vec::new() });
    }
    let n = rk.symbols();
    let deps: Vec<usize> = {
        let mut d: Vec<usize> = pairs.iter().map(|p| p.leader.dep).collect();
        d.sort_unstable();
        d.dedup();
        d
    };
    for dep in deps {
        let idx: Vec<usize> = (0..pairs.len()).filter(|&i| pairs[i].leader.dep == dep).collect();
        let monos: Vec<OperatorMonomial> = idx.iter().map(|&i| pairs[i].leader.action.clone()).collect();
        let set = JanetSet::new(monos, order);
        for (k, &i) in idx.iter().enumerate() {
            pairs[i].multiplicative = set.classification(k).multiplicative.clone();
        }
    }
    for p in pairs.iter_mut() {
        if p.multiplicative.len() != n {
            p.multiplicative = vec![true; n];
        }
    }
    Ok(pairs)
}

impl JanetSystem {
    /// Builds the system without completing it.
    pub fn new(
        equations: Vec<OperatorPolynomial>,
        inequations: Vec<OperatorPolynomial>,
        ranking: Ranking,
        janet_order: Vec<usize>,
        kind: OperatorKind,
    ) -> Result<Self, Error> {
        let pairs = classify(&equations, &ranking, &janet_order)?;
        Ok(JanetSystem { pairs, inequations, ranking, janet_order, kind, passive: None })
    }

    /// Builds the Janet completion of `equations`.
    pub fn complete(
        equations: Vec<OperatorPolynomial>,
        inequations: Vec<OperatorPolynomial>,
        ranking: Ranking,
        janet_order: Vec<usize>,
        kind: OperatorKind,
    ) -> Result<Self, Error> {
        let eqs = janet_complete(equations, &ranking, &janet_order, kind)?;
        Self::new(eqs, inequations, ranking, janet_order, kind)
    }

    pub fn equations(&self) -> Vec<OperatorPolynomial> {
        self.pairs.iter().map(|p| p.poly.clone()).collect()
    }

    pub fn symbols(&self) -> usize {
        self.ranking.symbols()
    }

    /// Missing prolongations `(pair, symbol)`: non-multiplicative prolongations
    /// of leaders without a Janet divisor, largest monomial first.
    pub fn missing_prolongations(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize, OperatorMonomial)> = Vec::new();
        for (i, p) in self.pairs.iter().enumerate() {
            for s in p.non_multiplicative() {
                let m = p.leader.action.times_symbol(s);
                let target = OperatorVariable::new(p.leader.kind, p.leader.dep, m.clone());
                if self.monomial_divisor(&target).is_none() {
                    out.push((i, s, m));
                }
            }
        }
        out.sort_by(|a, b| b.2.cmp_lex(&a.2, &self.janet_order).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));
        out.into_iter().map(|(i, s, _)| (i, s)).collect()
    }

    pub fn is_janet_complete(&self) -> bool {
        self.missing_prolongations().is_empty()
    }

    fn monomial_divisor(&self, v: &OperatorVariable) -> Option<(usize, OperatorMonomial)> {
        self.pairs.iter().enumerate().find_map(|(i, p)| {
            if p.leader.dep != v.dep {
                return None;
            }
            let theta = p.leader.action.quotient_of(&v.action)?;
            theta.uses_only(&p.multiplicative).then_some((i, theta))
        })
    }

    /// Degree of `θ f_i` in its leader.
    fn prolonged_degree(&self, i: usize, theta: &OperatorMonomial) -> u32 {
        match self.kind {
            OperatorKind::Shift => self.pairs[i].degree,
            OperatorKind::Derivative if theta.is_identity() => self.pairs[i].degree,
            OperatorKind::Derivative => 1,
        }
    }

    /// A Janet divisor `(pair, θ)` of `v` admitting a reduction of `deg_v = have`.
    pub fn janet_divisor(&self, v: &OperatorVariable, have: u32) -> Option<(usize, OperatorMonomial)> {
        self.pairs.iter().enumerate().find_map(|(i, p)| {
            if p.leader.dep != v.dep {
                return None;
            }
            let theta = p.leader.action.quotient_of(&v.action)?;
            if theta.uses_only(&p.multiplicative) && have >= self.prolonged_degree(i, &theta) {
                Some((i, theta))
            } else {
                None
            }
        })
    }

    pub fn is_reduced(&self, r: &P) -> bool {
        r.variables().iter().all(|v| self.janet_divisor(v, r.degree_in(v)).is_none())
    }
}

/// Polynomial-level Janet completion: prolongs members by non-multiplicative
/// symbols until every leader set is Janet complete.
pub fn janet_complete(
    equations: Vec<OperatorPolynomial>,
    rk: &Ranking,
    order: &[usize],
    kind: OperatorKind,
) -> Result<Vec<OperatorPolynomial>, Error> {
    let mut eqs: Vec<P> = Vec::with_capacity(equations.len());
    for e in equations {
        if !eqs.contains(&e) {
            eqs.push(e);
        }
    }
    loop {
        let sys = JanetSystem::new(eqs, Vec::new(), rk.clone(), order.to_vec(), kind)?;
        let missing = sys.missing_prolongations();
        eqs = sys.equations();
        match missing.first() {
            None => return Ok(eqs),
            Some(&(i, s)) => {
                let theta = OperatorMonomial::unit(rk.symbols(), s);
                eqs.push(apply_operator(kind, &theta, &eqs[i]));
            }
        }
    }
}

/// A step of a normal form computation with its cofactor accumulated so
/// that `multiplier·r − Σ cofactor·θ f_index = normal_form`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateEntry {
    pub index: usize,
    pub theta: OperatorMonomial,
    pub cofactor: OperatorPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub normal_form: OperatorPolynomial,
    pub multiplier: OperatorPolynomial,
    pub certificate: Vec<CertificateEntry>,
}

impl ReductionResult {
    /// Replays the certificate against the system's equations.
    pub fn verify(&self, r: &P, t: &JanetSystem) -> bool {
        let mut acc = &self.multiplier * r;
        for e in &self.certificate {
            let tf = apply_operator(t.kind, &e.theta, &t.pairs[e.index].poly);
            acc = &acc - &(&e.cofactor * &tf);
        }
        acc == self.normal_form
    }
}

/// Janet normal form: repeatedly eliminates the highest-ranked variable that
/// has a Janet divisor of sufficient degree.
pub fn janet_normal_form(r: &P, t: &JanetSystem) -> ReductionResult {
    janet_normal_form_limited(r, t, usize::MAX, usize::MAX).expect("no limits")
}

/// As [`janet_normal_form`], failing once more than `max_steps` reductions
/// are needed or an intermediate remainder exceeds `max_terms` terms.
pub fn janet_normal_form_limited(
    r: &P,
    t: &JanetSystem,
    max_steps: usize,
    max_terms: usize,
) -> Result<ReductionResult, Error> {
    let mut nf = r.clone();
    let mut multiplier = P::one();
    let mut certificate: Vec<CertificateEntry> = Vec::new();
    let mut cache: BTreeMap<(usize, OperatorMonomial), P> = BTreeMap::new();
    let mut steps = 0usize;
    loop {
        if nf.is_constant() || t.pairs.is_empty() {
            break;
        }
        let found = t
            .ranking
            .sorted_variables(&nf)
            .into_iter()
            .find_map(|v| t.janet_divisor(&v, nf.degree_in(&v)).map(|d| (v, d)));
        let (v, (i, theta)) = match found {
            Some(x) => x,
            None => break,
        };
        steps += 1;
        if steps > max_steps {
            return Err(Error::ResourceLimit(format!("normal form exceeded {max_steps} steps")));
        }
        let tf = cache
            .entry((i, theta.clone()))
            .or_insert_with(|| apply_operator(t.kind, &theta, &t.pairs[i].poly))
            .clone();
        let (next, m, c) = eliminate(&nf, &tf, &v);
        if !m.is_one() {
            for e in certificate.iter_mut() {
                e.cofactor = &e.cofactor * &m;
            }
            multiplier = &multiplier * &m;
        }
        certificate.push(CertificateEntry { index: i, theta, cofactor: c });
        nf = next;
        if nf.len() > max_terms {
            return Err(Error::ResourceLimit(format!("normal form exceeded {max_terms} terms")));
        }
    }
    Ok(ReductionResult { normal_form: nf, multiplier, certificate })
}

/// A non-multiplicative prolongation `σ f_i` and its normal form.
#[derive(Clone, Debug)]
pub struct Residual {
    pub index: usize,
    pub symbol: usize,
    pub prolongation: OperatorPolynomial,
    pub reduction: ReductionResult,
}

pub fn passivity_residuals(t: &JanetSystem) -> Vec<Residual> {
    let mut out = Vec::new();
    let n = t.symbols();
    for (i, p) in t.pairs.iter().enumerate() {
        for s in p.non_multiplicative() {
            let theta = OperatorMonomial::unit(n, s);
            let prolongation = apply_operator(t.kind, &theta, &p.poly);
            let reduction = janet_normal_form(&prolongation, t);
            out.push(Residual { index: i, symbol: s, prolongation, reduction });
        }
    }
    out
}

pub fn is_passive(t: &JanetSystem) -> bool {
    passivity_residuals(t).iter().all(|r| r.reduction.normal_form.is_zero())
}

/// Auto-reduction: returns `(true, L)` when no member's leader is a multiple
/// `θ ld(f2)` of another member's leader with sufficient degree, otherwise
/// `(false, L')` after one reduction step.
pub fn auto_reduce(l: &[P], rk: &Ranking) -> Result<(bool, Vec<P>), Error> {
    let mut cur: Vec<P> = l.to_vec();
    let kind = |p: &P| leader(p, rk).map(|v| v.kind);
    loop {
        let mut leaders = Vec::with_capacity(cur.len());
        for p in &cur {
            leaders.push(leader(p, rk).ok_or(Error::ConstantEquation)?);
        }
        let mut order: Vec<usize> = (0..cur.len()).collect();
        order.sort_by(|&a, &b| rk.cmp(&leaders[b], &leaders[a]).then(a.cmp(&b)));
        let mut hit = None;
        'search: for &i in &order {
            let v = &leaders[i];
            for j in 0..cur.len() {
                if i == j || leaders[j].dep != v.dep {
                    continue;
                }
                let theta = match leaders[j].action.quotient_of(&v.action) {
                    Some(t) => t,
                    None => continue,
                };
                let need = match kind(&cur[j]) {
                    Some(OperatorKind::Derivative) if !theta.is_identity() => 1,
                    _ => cur[j].degree_in(&leaders[j]),
                };
                if cur[i].degree_in(v) >= need {
                    hit = Some((i, j, theta));
                    break 'search;
                }
            }
        }
        let (i, j, theta) = match hit {
            None => return Ok((true, cur)),
            Some(h) => h,
        };
        let v = leaders[i].clone();
        let tf = apply_operator(v.kind, &theta, &cur[j]);
        let f1 = cur.remove(i);
        let r = eliminate(&f1, &tf, &v).0;
        if !r.is_zero() {
            cur.push(r);
            return Ok((false, cur));
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecomposeOptions {
    /// Cap on the number of systems taken from the queue.
    pub max_systems: usize,
    /// Cap on the total shift order of any leader.
    pub max_shift_order: u32,
    /// Cap on the number of reduction steps of a single normal form.
    pub max_nf_steps: usize,
    /// Cap on the number of terms of any intermediate polynomial.
    pub max_terms: usize,
    pub trace: bool,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            max_systems: 10_000,
            max_shift_order: 24,
            max_nf_steps: 1_000_000,
            max_terms: 20_000,
            trace: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceKind {
    Split,
    Reduce,
    Prolong,
    Insert,
    Discard,
    Output,
}

impl TraceKind {
    pub fn name(self) -> &'static str {
        match self {
            TraceKind::Split => "split",
            TraceKind::Reduce => "reduce",
            TraceKind::Prolong => "prolong",
            TraceKind::Insert => "insert",
            TraceKind::Discard => "discard",
            TraceKind::Output => "output",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TraceEvent {
    pub branch: usize,
    pub parent: Option<usize>,
    pub kind: TraceKind,
    pub polynomials: Vec<OperatorPolynomial>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub systems: Vec<JanetSystem>,
    /// Branches dropped because a passivity residual was a nonzero constant
    /// or an inequation reduced to zero.
    pub discarded: usize,
    pub processed: usize,
    pub trace: Vec<TraceEvent>,
}

struct Queued {
    id: usize,
    parent: Option<usize>,
    eqs: Vec<P>,
    ineqs: Vec<P>,
}

/// Decomposes a difference system into passive quasi-simple difference
/// systems whose solution sets partition that of the input.
pub fn decompose(
    equations: &[P],
    inequations: &[P],
    rk: &Ranking,
    janet_order: &[usize],
    opts: &DecomposeOptions,
) -> Result<Decomposition, Error> {
    let kind = OperatorKind::Shift;
    for p in equations.iter().chain(inequations) {
        if p.variables().iter().any(|v| v.kind != kind) {
            return Err(Error::KindMismatch);
        }
    }
    let mut trace: Vec<TraceEvent> = Vec::new();
    let mut log = |branch: usize, parent: Option<usize>, k: TraceKind, ps: Vec<P>| {
        if opts.trace {
            trace.push(TraceEvent { branch, parent, kind: k, polynomials: ps });
        }
    };
    let mut queue: VecDeque<Queued> = VecDeque::new();
    queue.push_back(Queued { id: 0, parent: None, eqs: equations.to_vec(), ineqs: inequations.to_vec() });
    let mut next_id = 1usize;
    let mut out: Vec<JanetSystem> = Vec::new();
    let mut discarded = 0usize;
    let mut processed = 0usize;
    let qopts = QuasiOptions { shift_closed: true, ..QuasiOptions::default() };
    while let Some(item) = queue.pop_front() {
        processed += 1;
        if processed > opts.max_systems {
            return Err(Error::ResourceLimit(format!("more than {} systems processed", opts.max_systems)));
        }
        let alg = AlgebraicSystem::new(item.eqs, item.ineqs);
        let parts = quasi_simple_decompose(&alg, rk, &qopts)?;
        let largest = parts.iter().flat_map(|a| a.equations.iter().chain(&a.inequations)).map(|p| p.len()).max();
        if largest.is_some_and(|n| n > opts.max_terms) {
            return Err(Error::ResourceLimit(format!("polynomial exceeded {} terms", opts.max_terms)));
        }
        if parts.len() > 1 {
            log(item.id, item.parent, TraceKind::Split, Vec::new());
        }
        for a in parts {
            let id = next_id;
            next_id += 1;
            if a.is_empty() {
                log(id, Some(item.id), TraceKind::Output, Vec::new());
                let sys = JanetSystem::new(Vec::new(), Vec::new(), rk.clone(), janet_order.to_vec(), kind)?;
                return Ok(Decomposition {
                    systems: vec![JanetSystem { passive: Some(true), ..sys }],
                    discarded,
                    processed,
                    trace,
                });
            }
            let (reduced, g) = auto_reduce(&a.equations, rk)?;
            if !reduced {
                log(id, Some(item.id), TraceKind::Reduce, g.last().cloned().into_iter().collect());
                queue.push_back(Queued {
                    id,
                    parent: Some(item.id),
                    eqs: g.iter().map(|p| normalize(p, rk)).collect(),
                    ineqs: a.inequations,
                });
                continue;
            }
            let before = g.len();
            let j = JanetSystem::complete(g, Vec::new(), rk.clone(), janet_order.to_vec(), kind)?;
            if j.pairs.len() > before {
                log(id, Some(item.id), TraceKind::Prolong, j.equations()[before..].to_vec());
            }
            if let Some(p) = j.pairs.iter().find(|p| p.leader.action.order() > opts.max_shift_order) {
                return Err(Error::ResourceLimit(format!(
                    "leader shift order {} exceeds {}",
                    p.leader.action.order(),
                    opts.max_shift_order
                )));
            }
            let mut residuals: Vec<P> = Vec::new();
            for (i, pair) in j.pairs.iter().enumerate() {
                for s in pair.non_multiplicative() {
                    let theta = OperatorMonomial::unit(j.symbols(), s);
                    let pr = apply_operator(kind, &theta, &j.pairs[i].poly);
                    let nf = janet_normal_form_limited(&pr, &j, opts.max_nf_steps, opts.max_terms)?.normal_form;
                    residuals.push(nf);
                }
            }
            let nonzero: Vec<P> = residuals.into_iter().filter(|r| !r.is_zero()).collect();
            if nonzero.is_empty() {
                let mut ineqs = Vec::with_capacity(a.inequations.len());
                let mut vanished = false;
                for g in &a.inequations {
                    let nf = janet_normal_form_limited(g, &j, opts.max_nf_steps, opts.max_terms)?.normal_form;
                    if nf.is_zero() {
                        vanished = true;
                        break;
                    }
                    ineqs.push(normalize(&nf, rk));
                }
                if vanished {
                    discarded += 1;
                    log(id, Some(item.id), TraceKind::Discard, Vec::new());
                    continue;
                }
                log(id, Some(item.id), TraceKind::Output, j.equations());
                out.push(JanetSystem { inequations: ineqs, passive: Some(true), ..j });
            } else if nonzero.iter().all(|r| !r.is_constant()) {
                let mut eqs = j.equations();
                let mut added = Vec::new();
                for r in nonzero {
                    let n = normalize(&r, rk);
                    if !eqs.contains(&n) && !added.contains(&n) {
                        added.push(n);
                    }
                }
                log(id, Some(item.id), TraceKind::Insert, added.clone());
                eqs.extend(added);
                queue.push_back(Queued { id, parent: Some(item.id), eqs, ineqs: a.inequations });
            } else {
                discarded += 1;
                log(id, Some(item.id), TraceKind::Discard, Vec::new());
            }
        }
    }
    out.sort_by_key(|a| system_key(a, rk));
    Ok(Decomposition { systems: out, discarded, processed, trace })
}

fn system_key(s: &JanetSystem, rk: &Ranking) -> (Vec<P>, Vec<P>) {
    let mut e = s.equations();
    e.sort_by(|p, q| compare_by_leader(p, q, rk));
    (e, s.inequations.clone())
}

/// Membership in the saturation of the ideal generated by a passive
/// quasi-simple system: decided by a zero Janet normal form.
pub fn ideal_membership(f: &P, t: &JanetSystem) -> Result<bool, Error> {
    let passive = match t.passive {
        Some(p) => p,
        None => t.is_janet_complete() && is_passive(t),
    };
    if !passive {
        return Err(Error::NotPassive);
    }
    Ok(janet_normal_form(f, t).normal_form.is_zero())
}

/// Initial of `θ f` where `f` has leader `v`; convenience for tests and reports.
pub fn prolonged_initial(f: &P, theta: &OperatorMonomial, rk: &Ranking) -> Option<P> {
    let l = leader(f, rk)?;
    let tf = apply_operator(l.kind, theta, f);
    let tl = leader(&tf, rk)?;
    Some(initial_in(&tf, &tl))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Coefficient;
    use crate::ring::RankingScheme;

    fn s(j: &[u32]) -> P {
        P::var(OperatorVariable::shift(0, j))
    }

    fn h() -> P {
        P::constant(Coefficient::h())
    }

    fn rk() -> Ranking {
        Ranking::declared(RankingScheme::TopLex, 2, 1)
    }

    fn forward_forward() -> Vec<P> {
        let u = s(&[0, 0]);
        let a = &(&s(&[1, 0]) - &u) - &(&h() * &u.pow(2));
        let b = &(&s(&[0, 1]) - &u) + &(&h() * &u.pow(2));
        vec![a, b]
    }

    fn forward_backward() -> Vec<P> {
        let u = s(&[0, 0]);
        let a = &(&s(&[1, 0]) - &u) - &(&h() * &u.pow(2));
        let e = &(&(&h() * &s(&[0, 1]).pow(2)) + &s(&[0, 1])) - &u;
        vec![a, e]
    }

    fn system(eqs: Vec<P>) -> JanetSystem {
        JanetSystem::complete(eqs, vec![], rk(), vec![0, 1], OperatorKind::Shift).unwrap()
    }

    #[test]
    fn auto_reduce_examples() {
        let r = rk();
        let u = s(&[0, 0]);
        assert_eq!(auto_reduce(core::slice::from_ref(&u), &r).unwrap(), (true, vec![u.clone()]));
        let f1 = &s(&[1, 0]) - &u;
        let f2 = &s(&[1, 0]) - &(&h() * &u);
        let (flag, l) = auto_reduce(&[f1, f2.clone()], &r).unwrap();
        assert!(!flag);
        assert_eq!(l, vec![f2, &(&h() - &P::one()) * &u]);
        let l = vec![forward_forward()[0].clone(), u.pow(2)];
        assert_eq!(auto_reduce(&l, &r).unwrap(), (true, l));
    }

    #[test]
    fn forward_forward_residual() {
        let t = system(forward_forward());
        assert_eq!(t.pairs.len(), 2);
        let res = passivity_residuals(&t);
        assert_eq!(res.len(), 1);
        let nf = &res[0].reduction.normal_form;
        let u4 = s(&[0, 0]).pow(4);
        let ratio = nf.ratio_to(&u4).unwrap();
        assert_eq!(ratio.h_valuation(), Ok(3));
        assert!((&ratio * &Coefficient::h_pow(-3)).is_rational());
        assert!(res[0].reduction.verify(&res[0].prolongation, &t));
    }

    #[test]
    fn forward_backward_is_passive() {
        let t = system(forward_backward());
        let res = passivity_residuals(&t);
        assert!(!res.is_empty());
        for r in &res {
            assert!(r.reduction.normal_form.is_zero());
            assert!(r.reduction.verify(&r.prolongation, &t));
        }
    }

    #[test]
    fn single_equation_has_no_residuals() {
        assert!(passivity_residuals(&system(vec![forward_forward()[0].clone()])).is_empty());
    }

    #[test]
    fn decompose_examples() {
        let r = rk();
        let o = [0, 1];
        let d = decompose(&forward_forward(), &[], &r, &o, &DecomposeOptions::default()).unwrap();
        assert_eq!(d.systems.len(), 1);
        let eqs = d.systems[0].equations();
        assert_eq!(eqs.len(), 3);
        assert!(eqs.contains(&s(&[0, 0]).pow(4)));

        let d = decompose(&forward_backward(), &[], &r, &o, &DecomposeOptions::default()).unwrap();
        assert_eq!(d.systems.len(), 1);
        let mut got = d.systems[0].equations();
        let mut want: Vec<P> = forward_backward().iter().map(|p| normalize(p, &r)).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);

        let d = decompose(&[s(&[0, 0])], &[], &r, &o, &DecomposeOptions::default()).unwrap();
        assert_eq!(d.systems.len(), 1);
        assert_eq!(d.systems[0].equations(), vec![s(&[0, 0])]);
    }

    #[test]
    fn membership_examples() {
        let ff = forward_forward();
        let t = system(ff.clone());
        let shifted = apply_operator(OperatorKind::Shift, &OperatorMonomial(vec![0, 1]), &ff[0]);
        assert_eq!(ideal_membership(&shifted, &t), Err(Error::NotPassive));
        let mut eqs = ff.clone();
        eqs.push(s(&[0, 0]).pow(4));
        let t = system(eqs);
        assert_eq!(ideal_membership(&shifted, &t), Ok(true));
        assert_eq!(ideal_membership(&P::zero(), &t), Ok(true));
        assert_eq!(ideal_membership(&ff[1], &t), Ok(true));
    }
}
