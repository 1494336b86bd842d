//! Randomized property suites with fixed seeds. Each suite returns the number
//! of cases checked or a description of the first counterexample.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sconsist_core::algebraic::{quasi_simple_decompose, AlgebraicSystem, QuasiOptions};
use sconsist_core::coeffs::Coefficient;
use sconsist_core::difference::{janet_normal_form, JanetSystem, ReductionResult};
use sconsist_core::differential::{janet_normal_form_diff, SimpleDifferentialSystem};
use sconsist_core::janet::{janet_completion, JanetSet, OperatorMonomial};
use sconsist_core::limit::{clear_h, continuous_limit, LimitResult};
use sconsist_core::ring::{apply_operator, leader, pseudo_reduce_step};
use sconsist_core::{OperatorKind, OperatorPolynomial, OperatorVariable, Polynomial, Ranking, RankingScheme};

pub const SEED: u64 = 0x5C0_5157;
pub const CASES: usize = 256;

type P = OperatorPolynomial;

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn small_coefficient(r: &mut ChaCha8Rng, with_h: bool) -> Coefficient {
    let mut n = 0;
    while n == 0 {
        n = r.gen_range(-3..=3);
    }
    let c = Coefficient::integer(n);
    if with_h && r.gen_bool(0.3) {
        &c * &Coefficient::h()
    } else {
        c
    }
}

fn random_poly(r: &mut ChaCha8Rng, vars: &[OperatorVariable], terms: usize, max_exp: u32, with_h: bool) -> P {
    let mut p = P::zero();
    for _ in 0..terms {
        let mut m: Vec<(OperatorVariable, u32)> = Vec::new();
        for v in vars {
            if r.gen_bool(0.35) {
                m.push((v.clone(), r.gen_range(1..=max_exp)));
            }
        }
        m.sort();
        p.add_term(m, small_coefficient(r, with_h));
    }
    p
}

// ---------------------------------------------------------------- janet

/// Every monomial in a box is covered by exactly as many Janet cones of the
/// completion as it is multiples of the original set (one or zero).
pub fn janet_cone_partition() -> Result<usize, String> {
    let mut r = rng(1);
    for case in 0..CASES {
        let n = r.gen_range(2..=3);
        let k = r.gen_range(1..=4);
        let set: Vec<OperatorMonomial> =
            (0..k).map(|_| OperatorMonomial((0..n).map(|_| r.gen_range(0..=3)).collect())).collect();
        let mut order: Vec<usize> = (0..n).collect();
        if r.gen_bool(0.5) {
            order.reverse();
        }
        let completed = janet_completion(&set, &order);
        for m in &set {
            if !completed.contains(m) {
                return Err(format!("case {case}: completion dropped {m:?}"));
            }
        }
        let js = JanetSet::new(completed.clone(), &order);
        let bound = 6u32;
        let mut point = vec![0u32; n];
        loop {
            let v = OperatorMonomial(point.clone());
            let in_closure = set.iter().any(|g| g.0.iter().zip(&point).all(|(a, b)| a <= b));
            let covering = completed
                .iter()
                .enumerate()
                .filter(|(i, g)| {
                    let c = js.classification(*i);
                    g.0.iter().zip(&point).enumerate().all(|(s, (a, b))| a <= b && (a == b || c.multiplicative[s]))
                })
                .count();
            let want = usize::from(in_closure);
            if covering != want {
                return Err(format!("case {case}: {v:?} covered {covering} times, expected {want} (set {set:?})"));
            }
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                point[i] += 1;
                if point[i] <= bound {
                    break;
                }
                point[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    Ok(CASES)
}

// ---------------------------------------------------------------- evaluation oracles

/// Random grid function: a rational value for every shifted variable,
/// independent of the operator machinery.
struct GridFunction {
    values: BTreeMap<(usize, Vec<u32>), BigRational>,
    rng: ChaCha8Rng,
}

impl GridFunction {
    fn new(seed: u64) -> Self {
        GridFunction { values: BTreeMap::new(), rng: rng(seed) }
    }

    fn at(&mut self, dep: usize, j: &[u32]) -> BigRational {
        let rng = &mut self.rng;
        self.values
            .entry((dep, j.to_vec()))
            .or_insert_with(|| BigRational::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=4))))
            .clone()
    }

    /// Value of `θ p` computed by shifting lookups, not polynomials.
    fn eval_shifted(&mut self, p: &P, theta: &[u32], h: &BigRational) -> BigRational {
        p.eval(
            |v| {
                let j: Vec<u32> = v.action.0.iter().zip(theta).map(|(a, b)| a + b).collect();
                self.at(v.dep, &j)
            },
            h,
            &[],
        )
        .expect("h value avoids poles")
    }
}

/// Checks `b·r − Σ c_i·θ_i f_i = NF` at random grid functions and `h` values.
fn difference_identity_holds(res: &ReductionResult, r: &P, t: &JanetSystem, seed: u64) -> bool {
    for trial in 0..3u64 {
        let mut g = GridFunction::new(seed.wrapping_mul(31).wrapping_add(trial));
        let h = BigRational::new(BigInt::from(3 + trial as i64), BigInt::from(7));
        let zero = vec![0u32; t.symbols()];
        let mut lhs = g.eval_shifted(&res.multiplier, &zero, &h) * g.eval_shifted(r, &zero, &h);
        for e in &res.certificate {
            let tf = g.eval_shifted(&t.pairs[e.index].poly, &e.theta.0, &h);
            lhs -= g.eval_shifted(&e.cofactor, &zero, &h) * tf;
        }
        if lhs != g.eval_shifted(&res.normal_form, &zero, &h) {
            return false;
        }
    }
    true
}

fn shift_vars(deps: usize, n: usize, max: u32) -> Vec<OperatorVariable> {
    let mut out = Vec::new();
    for dep in 0..deps {
        for a in 0..=max {
            for b in 0..=max {
                let mut j = vec![a, b];
                j.truncate(n);
                let v = OperatorVariable::shift(dep, &j);
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Single pseudo-reduction steps: the step identity holds pointwise and the
/// reduced variable loses degree.
pub fn ring_step_certificates() -> Result<usize, String> {
    let mut r = rng(2);
    let rk = Ranking::declared(RankingScheme::TopLex, 2, 2);
    let vars = shift_vars(2, 2, 1);
    let mut done = 0;
    let mut case = 0u64;
    while done < CASES {
        case += 1;
        let nt = r.gen_range(1..=3);
        let f = random_poly(&mut r, &vars, nt, 2, true);
        let lf = match leader(&f, &rk) {
            Some(l) => l,
            None => continue,
        };
        let theta = OperatorMonomial(vec![r.gen_range(0..=2), r.gen_range(0..=2)]);
        let target = lf.apply(&theta);
        let need = f.degree_in(&lf);
        let extra = random_poly(&mut r, &vars, 2, 2, true);
        let head = P::var_pow(target.clone(), need + r.gen_range(0..=1));
        let rr = &(&head * &random_poly(&mut r, &vars, 1, 1, false)) + &extra;
        if rr.degree_in(&target) < need {
            continue;
        }
        let (out, step) = pseudo_reduce_step(&rr, &f, &theta, &rk).map_err(|e| format!("case {case}: {e}"))?;
        let mut g = GridFunction::new(case);
        let h = q(2);
        let zero = [0u32, 0];
        let lhs = g.eval_shifted(&step.multiplier, &zero, &h) * g.eval_shifted(&rr, &zero, &h)
            - g.eval_shifted(&step.cofactor, &zero, &h) * g.eval_shifted(&f, &theta.0, &h);
        if lhs != g.eval_shifted(&out, &zero, &h) {
            return Err(format!("case {case}: step identity fails"));
        }
        if out.degree_in(&target) >= rr.degree_in(&target) {
            return Err(format!("case {case}: degree did not drop"));
        }
        done += 1;
    }
    Ok(done)
}

fn forward_backward() -> Vec<P> {
    let s = |j: &[u32]| P::var(OperatorVariable::shift(0, j));
    let h = P::constant(Coefficient::h());
    let u = s(&[0, 0]);
    vec![
        &(&s(&[1, 0]) - &u) - &(&h * &u.pow(2)),
        &(&(&h * &s(&[0, 1]).pow(2)) + &s(&[0, 1])) - &u,
    ]
}

fn is_reduced(nf: &P, t: &JanetSystem) -> bool {
    nf.variables().iter().all(|w| {
        t.pairs.iter().all(|p| {
            if p.leader.dep != w.dep {
                return true;
            }
            match p.leader.action.quotient_of(&w.action) {
                Some(theta) if theta.uses_only(&p.multiplicative) => {
                    let need = match t.kind {
                        OperatorKind::Derivative if !theta.is_identity() => 1,
                        _ => p.degree,
                    };
                    nf.degree_in(w) < need
                }
                _ => true,
            }
        })
    })
}

/// Janet normal forms modulo a passive difference system: certificate
/// identity at random grid functions and reducedness of the result.
pub fn difference_certificates() -> Result<usize, String> {
    let mut r = rng(3);
    let rk = Ranking::declared(RankingScheme::TopLex, 2, 1);
    let t = JanetSystem::complete(forward_backward(), vec![], rk, vec![0, 1], OperatorKind::Shift)
        .map_err(|e| e.to_string())?;
    let vars = shift_vars(1, 2, 2);
    for case in 0..CASES {
        let nt = r.gen_range(1..=4);
        let p = random_poly(&mut r, &vars, nt, 2, true);
        let res = janet_normal_form(&p, &t);
        if !difference_identity_holds(&res, &p, &t, case as u64) {
            return Err(format!("case {case}: certificate identity fails"));
        }
        if !is_reduced(&res.normal_form, &t) {
            return Err(format!("case {case}: normal form still reducible"));
        }
        if res.multiplier.is_zero() {
            return Err(format!("case {case}: zero multiplier"));
        }
    }
    Ok(CASES)
}

// ---------------------------------------------------------------- differential oracle

/// Polynomial in the independents standing in for an analytic solution
/// candidate; derivatives at the origin are exact.
type XPoly = Polynomial<usize>;

fn random_xpoly(r: &mut ChaCha8Rng, n: usize) -> XPoly {
    let mut p = XPoly::zero();
    for _ in 0..6 {
        let mut m: Vec<(usize, u32)> = Vec::new();
        for x in 0..n {
            let e = r.gen_range(0..=4);
            if e > 0 {
                m.push((x, e));
            }
        }
        p.add_term(m, Coefficient::ratio(r.gen_range(-5..=5), r.gen_range(1..=3)));
    }
    p
}

fn xderive(p: &XPoly, theta: &[u32]) -> XPoly {
    let mut out = p.clone();
    for (x, &k) in theta.iter().enumerate() {
        for _ in 0..k {
            out = out.partial_derivative(&x);
        }
    }
    out
}

fn at_origin(p: &XPoly) -> BigRational {
    p.eval(|_| q(0), &q(0), &[]).expect("polynomial")
}

/// `p(u)` as a polynomial in the independents.
fn substitute_functions(p: &P, us: &[XPoly]) -> XPoly {
    p.substitute(|v| xderive(&us[v.dep], &v.action.0))
}

fn differential_system() -> SimpleDifferentialSystem {
    let d = |j: &[u32]| P::var(OperatorVariable::derivative(0, j));
    let u = d(&[0, 0]);
    SimpleDifferentialSystem::new(
        vec![&d(&[1, 0]) - &u.pow(2), &d(&[0, 1]) + &u.pow(2)],
        vec![],
        Ranking::declared(RankingScheme::TopLex, 2, 1),
        vec![0, 1],
    )
    .expect("valid system")
}

/// Differential Janet normal forms: the certificate identity holds after
/// substituting random polynomial functions, with derivatives of `f_i(u)`
/// taken on the substituted side.
pub fn differential_certificates() -> Result<usize, String> {
    let mut r = rng(4);
    let t = differential_system();
    let mut vars = Vec::new();
    for a in 0..=2u32 {
        for b in 0..=2u32 {
            if a + b <= 3 {
                vars.push(OperatorVariable::derivative(0, &[a, b]));
            }
        }
    }
    for case in 0..CASES {
        let nt = r.gen_range(1..=3);
        let p = random_poly(&mut r, &vars, nt, 2, false);
        let res = janet_normal_form_diff(&p, &t);
        let u = [random_xpoly(&mut r, 2)];
        let mut jet: BTreeMap<OperatorVariable, BigRational> = BTreeMap::new();
        let mut at = |p: &P| {
            p.eval(|v| jet.entry(v.clone()).or_insert_with(|| at_origin(&xderive(&u[v.dep], &v.action.0))).clone(), &q(1), &[])
                .expect("polynomial")
        };
        let mut lhs = at(&res.multiplier) * at(&p);
        for e in &res.certificate {
            let fu = substitute_functions(&t.system.pairs[e.index].poly, &u);
            lhs -= at(&e.cofactor) * at_origin(&xderive(&fu, &e.theta.0));
        }
        if lhs != at(&res.normal_form) {
            return Err(format!("case {case}: certificate identity fails"));
        }
        if !is_reduced(&res.normal_form, &t.system) {
            return Err(format!("case {case}: normal form still reducible"));
        }
    }
    Ok(CASES)
}

// ---------------------------------------------------------------- limits

fn random_fda_poly(r: &mut ChaCha8Rng) -> P {
    let vars = shift_vars(1, 2, 2);
    loop {
        let nt = r.gen_range(1..=3);
        let p = random_poly(r, &vars, nt, 1, true);
        if !p.is_zero() && !p.is_constant() && p.total_degree() <= 3 {
            return p;
        }
    }
}

/// Coefficients of `h^0, h^1, ...` of `f̃(ũ)` at the origin when `ũ` samples
/// the polynomial function `u` on the grid. `p` must have polynomial
/// coefficients in `h`.
fn grid_sample_series(p: &P, u: &XPoly) -> BTreeMap<u32, BigRational> {
    // variable 0 stands for h
    let hp: Polynomial<usize> = p.substitute(|v| {
        u.substitute(|x| XPoly::var(0).scale(&Coefficient::integer(v.action.0[*x] as i64)))
    });
    let mut out = BTreeMap::new();
    for (m, c) in hp.terms() {
        let k = m.first().map(|(_, e)| *e).unwrap_or(0);
        assert!(c.denominator().is_one(), "polynomial coefficients");
        for (pm, r) in c.numerator().terms() {
            *out.entry(k + pm.h_exponent()).or_insert_with(|| q(0)) += r;
        }
    }
    out
}

fn limit_of(p: &P, case: usize) -> Result<LimitResult, String> {
    continuous_limit(p, 12).map_err(|e| format!("case {case}: {e}"))
}

/// Multiplicativity, `h`-scaling and shift stability of continuous limits,
/// plus agreement with sampling polynomial functions on the grid.
pub fn limit_properties() -> Result<usize, String> {
    let mut r = rng(5);
    let h = P::constant(Coefficient::h());
    for case in 0..CASES {
        let f = clear_h(&random_fda_poly(&mut r)).expect("nonzero").0;
        let g = clear_h(&random_fda_poly(&mut r)).expect("nonzero").0;
        let lf = limit_of(&f, case)?;
        let lg = limit_of(&g, case)?;
        let lfg = limit_of(&(&f * &g), case)?;
        if lfg != (LimitResult { d: lf.d + lg.d, f: &lf.f * &lg.f }) {
            return Err(format!("case {case}: multiplicativity fails"));
        }
        let k = r.gen_range(1..=3u32);
        let scaled = limit_of(&(&h.pow(k) * &f), case)?;
        if scaled != (LimitResult { d: lf.d + k, f: lf.f.clone() }) {
            return Err(format!("case {case}: h-scaling fails"));
        }
        let theta = OperatorMonomial(vec![r.gen_range(0..=2), r.gen_range(0..=2)]);
        if limit_of(&apply_operator(OperatorKind::Shift, &theta, &f), case)? != lf {
            return Err(format!("case {case}: shift stability fails"));
        }
        let u = random_xpoly(&mut r, 2);
        let series = grid_sample_series(&f, &u);
        let fu = at_origin(&substitute_functions(&lf.f, &[u]));
        if let Some((i, _)) = series.iter().find(|(i, c)| **i < lf.d && **c != q(0)) {
            return Err(format!("case {case}: sampled series has a nonzero h^{i} term below d"));
        }
        if series.get(&lf.d).cloned().unwrap_or_else(|| q(0)) != fu {
            return Err(format!("case {case}: sampled leading coefficient differs from f(u)"));
        }
    }
    Ok(CASES)
}

// ---------------------------------------------------------------- algebraic

fn sample_satisfies(eqs: &[P], ineqs: &[P], point: &[i64]) -> bool {
    let val = |p: &P| p.eval(|v| q(point[v.dep]), &q(1), &[]).expect("polynomial");
    eqs.iter().all(|p| val(p) == q(0)) && ineqs.iter().all(|p| val(p) != q(0))
}

/// Quasi-simple decomposition partitions the solution set: every point of
/// `{−2..2}³` solves the input iff it solves exactly one output system.
pub fn algebraic_partition() -> Result<usize, String> {
    let mut r = rng(6);
    let rk = Ranking::declared(RankingScheme::TopLex, 1, 3);
    let vars: Vec<OperatorVariable> = (0..3).map(|d| OperatorVariable::shift(d, &[0])).collect();
    let mut done = 0;
    let mut case = 0;
    while done < CASES {
        case += 1;
        let ne = r.gen_range(1..=2);
        let eqs: Vec<P> = (0..ne)
            .map(|_| {
                let nt = r.gen_range(2..=3);
                random_poly(&mut r, &vars, nt, 2, false)
            })
            .collect();
        let ineqs: Vec<P> = if r.gen_bool(0.4) {
            vec![random_poly(&mut r, &vars, 2, 1, false)]
        } else {
            vec![]
        };
        if eqs.iter().any(|e| e.is_constant()) {
            continue;
        }
        let parts = quasi_simple_decompose(
            &AlgebraicSystem::new(eqs.clone(), ineqs.clone()),
            &rk,
            &QuasiOptions { shift_closed: false, ..QuasiOptions::default() },
        )
        .map_err(|e| {
            let names = sconsist_core::render::Names::new(&["n"], &["a", "b", "c"], &[]);
            let show = |ps: &[P]| ps.iter().map(|p| sconsist_core::render::polynomial(p, &names, None)).collect::<Vec<_>>().join(" ; ");
            format!("case {case}: {e} on {} != {}", show(&eqs), show(&ineqs))
        })?;
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    let pt = [a, b, c];
                    let input = sample_satisfies(&eqs, &ineqs, &pt);
                    let hits = parts.iter().filter(|s| sample_satisfies(&s.equations, &s.inequations, &pt)).count();
                    if hits != usize::from(input) {
                        return Err(format!(
                            "case {case}: point {pt:?} solves input {input} but {hits} outputs"
                        ));
                    }
                }
            }
        }
        done += 1;
    }
    Ok(done)
}
