//! Continuous limits of difference polynomials by symbolic Taylor expansion.
//!
//! A grid value `σ^J u` expands to `Σ_k h^k S_k` with
//! `S_k = Σ_{|ν|=k} J^ν/ν! ∂^ν u`; the limit of a difference polynomial is its
//! lowest nonzero `h`-stratum after the global `h`-denominator is cleared.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeffs::Coefficient;
use crate::error::Error;
use crate::janet::OperatorMonomial;
use crate::ring::{OperatorKind, OperatorPolynomial, OperatorVariable};

type P = OperatorPolynomial;

pub const DEFAULT_MAX_ORDER: u32 = 12;

/// `f̃ = h^d f + O(h^{d+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitResult {
    pub d: u32,
    pub f: OperatorPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WConsistency {
    Exact,
    Scaled(Coefficient),
    No,
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// All exponent vectors of length `n` and total order `k`.
fn compositions(n: usize, k: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if k == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in compositions(n - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `S_k` for the grid value `σ^J u^(dep)`.
fn stratum(dep: usize, j: &[u32], k: u32) -> P {
    let mut out = P::zero();
    for nu in compositions(j.len(), k) {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (&ji, &ni) in j.iter().zip(&nu) {
            num *= BigInt::from(ji).pow(ni);
            den *= factorial(ni);
        }
        if num.is_zero() {
            continue;
        }
        let c = Coefficient::rational(BigRational::new(num, den));
        out.add_term(vec![(OperatorVariable::derivative(dep, &nu), 1)], c);
    }
    out
}

/// Taylor polynomial of `u^(dep)(x + J h)` truncated at total order `n`.
pub fn taylor_grid_value(dep: usize, j: &OperatorMonomial, n: u32) -> OperatorPolynomial {
    let mut out = P::zero();
    for k in 0..=n {
        let s = stratum(dep, &j.0, k);
        out = &out + &s.scale(&Coefficient::h_pow(k as i32));
    }
    out
}

/// Truncated power series in `h` with `h`-free polynomial coefficients.
type Series = Vec<P>;

fn series_mul(a: &Series, b: &Series, n: usize) -> Series {
    let mut out = vec![P::zero(); n + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

struct Expander {
    n: usize,
    powers: BTreeMap<OperatorVariable, Vec<Series>>,
}

impl Expander {
    fn power(&mut self, v: &OperatorVariable, e: u32) -> Series {
        let n = self.n;
        let list = self.powers.entry(v.clone()).or_insert_with(|| {
            let base: Series = (0..=n as u32).map(|k| stratum(v.dep, &v.action.0, k)).collect();
            vec![base]
        });
        while list.len() < e as usize {
            let next = series_mul(list.last().unwrap(), &list[0], n);
            list.push(next);
        }
        list[e as usize - 1].clone()
    }
}

/// Expansion strata `0..=n` of an `h`-regular difference polynomial.
fn expand(p: &P, n: usize) -> Result<Series, Error> {
    let mut ex = Expander { n, powers: BTreeMap::new() };
    let mut out: Series = vec![P::zero(); n + 1];
    for (m, c) in p.terms() {
        let cs = c.h_series(n)?;
        let mut s: Series = cs.into_iter().map(P::constant).collect();
        for (v, e) in m {
            let pw = ex.power(v, *e);
            s = series_mul(&s, &pw, n);
        }
        for (k, t) in s.into_iter().enumerate() {
            if !t.is_zero() {
                out[k] = &out[k] + &t;
            }
        }
    }
    Ok(out)
}

fn lowest(s: &Series) -> Option<LimitResult> {
    s.iter()
        .enumerate()
        .find(|(_, t)| !t.is_zero())
        .map(|(k, t)| LimitResult { d: k as u32, f: t.clone() })
}

/// Least `h`-valuation over the coefficients of `p`.
pub fn min_h_valuation(p: &P) -> Result<i32, Error> {
    let mut v: Option<i32> = None;
    for (_, c) in p.terms() {
        let x = c.h_valuation()?;
        v = Some(v.map_or(x, |y| y.min(x)));
    }
    v.ok_or(Error::ZeroValuation)
}

/// Clears the global `h`-denominator: returns `(h^k p, k)` with
/// `k = max(0, −min valuation)`.
pub fn clear_h(p: &P) -> Result<(P, i32), Error> {
    let k = (-min_h_valuation(p)?).max(0);
    Ok((p.scale(&Coefficient::h_pow(k)), k))
}

pub fn continuous_limit(p: &P, max_order: u32) -> Result<LimitResult, Error> {
    if p.variables().iter().any(|v| v.kind != OperatorKind::Shift) {
        return Err(Error::KindMismatch);
    }
    let (q, _) = clear_h(p)?;
    let max_shift = q.variables().iter().map(|v| v.action.order()).max().unwrap_or(0);
    let mut n = (max_shift + 2).min(max_order);
    loop {
        if let Some(r) = lowest(&expand(&q, n as usize)?) {
            let check = expand(&q, n as usize + 1)?;
            if lowest(&check).as_ref() == Some(&r) {
                return Ok(r);
            }
        }
        if n >= max_order {
            return Err(Error::LimitUndetermined(n));
        }
        n = (n * 2).max(1).min(max_order);
    }
}

pub fn w_consistency_check(ft: &P, f: &P, max_order: u32) -> Result<WConsistency, Error> {
    let l = continuous_limit(ft, max_order)?;
    if &l.f == f {
        return Ok(WConsistency::Exact);
    }
    match l.f.ratio_to(f) {
        Some(c) if c.is_h_free() && !c.is_zero() => Ok(WConsistency::Scaled(c)),
        _ => Ok(WConsistency::No),
    }
}
