//! Exact arithmetic in the coefficient field `Q(a_1, ..., a_l, h)`.
//!
//! A [`ParameterPolynomial`] is a sparse polynomial over arbitrary-precision
//! rationals in the grid spacing `h` and the declared parameters. A
//! [`Coefficient`] is a reduced fraction of two such polynomials whose
//! denominator is monic under the internal degree-reverse-lexicographic order
//! (parameters in declaration order, `h` last).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exponent vector of a parameter monomial.
///
/// Slot 0 holds the exponent of `h`, slot `i >= 1` the exponent of parameter
/// `i - 1`. Trailing zeros are trimmed so equal monomials compare equal no
/// matter how many parameters are declared.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamMonomial(Vec<u32>);

impl ParamMonomial {
    pub fn one() -> Self {
        ParamMonomial(Vec::new())
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        ParamMonomial(exps)
    }

    /// `h^k`.
    pub fn h_pow(k: u32) -> Self {
        Self::from_exponents(vec![k])
    }

    /// Parameter `index` (0-based, in declaration order) to the power `k`.
    pub fn param_pow(index: usize, k: u32) -> Self {
        let mut e = vec![0; index + 2];
        e[index + 1] = k;
        Self::from_exponents(e)
    }

    pub fn exponent(&self, slot: usize) -> u32 {
        self.0.get(slot).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn h_exponent(&self) -> u32 {
        self.exponent(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn slots(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.slots().max(other.slots());
        let e = (0..n).map(|i| self.exponent(i) + other.exponent(i)).collect();
        Self::from_exponents(e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let n = self.slots().max(other.slots());
        let mut e = Vec::with_capacity(n);
        for i in 0..n {
            e.push(self.exponent(i).checked_sub(other.exponent(i))?);
        }
        Some(Self::from_exponents(e))
    }

    fn gcd_with(&self, other: &Self) -> Self {
        let n = self.slots().min(other.slots());
        let e = (0..n).map(|i| self.exponent(i).min(other.exponent(i))).collect();
        Self::from_exponents(e)
    }

    /// Degree-reverse-lexicographic comparison with `h` as the last variable.
    pub fn cmp_degrevlex(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // reverse lex: smallest exponent in the last variable wins; h is last
        match other.h_exponent().cmp(&self.h_exponent()) {
            Ordering::Equal => {}
            o => return o,
        }
        let n = self.slots().max(other.slots());
        for i in (1..n).rev() {
            match other.exponent(i).cmp(&self.exponent(i)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

/// Sparse polynomial over `Q` in `h` and the declared parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParameterPolynomial {
    terms: BTreeMap<ParamMonomial, BigRational>,
}

impl ParameterPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(ParamMonomial::one(), c);
        }
        p
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn monomial(m: ParamMonomial, c: BigRational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn h() -> Self {
        Self::monomial(ParamMonomial::h_pow(1), BigRational::one())
    }

    pub fn param(index: usize) -> Self {
        Self::monomial(ParamMonomial::param_pow(index, 1), BigRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (ParamMonomial, BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: ParamMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMonomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms sorted by decreasing degrevlex order.
    pub fn sorted_terms(&self) -> Vec<(&ParamMonomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_degrevlex(a.0));
        v
    }

    pub fn leading_term(&self) -> Option<(&ParamMonomial, &BigRational)> {
        self.terms
            .iter()
            .max_by(|a, b| a.0.cmp_degrevlex(b.0))
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParameterPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &ParamMonomial) -> Self {
        ParameterPolynomial {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Divides every term by the rational leading coefficient.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading_coefficient();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Number of variable slots in use (h plus parameters).
    fn slots(&self) -> usize {
        self.terms.keys().map(|m| m.slots()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, slot: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(slot)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, slot: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(slot)).min().unwrap_or(0)
    }

    pub fn h_degree(&self) -> u32 {
        self.degree_in(0)
    }

    /// Lowest power of `h` occurring (0 for the zero polynomial).
    pub fn h_order(&self) -> u32 {
        self.min_degree_in(0)
    }

    /// Coefficient list of `self` viewed as a univariate polynomial in `slot`.
    pub fn to_univariate(&self, slot: usize) -> Vec<ParameterPolynomial> {
        let d = self.degree_in(slot) as usize;
        let mut out = vec![ParameterPolynomial::zero(); d + 1];
        for (m, c) in &self.terms {
            let k = m.exponent(slot);
            let mut e = m.0.clone();
            if slot < e.len() {
                e[slot] = 0;
            }
            out[k as usize].add_term(ParamMonomial::from_exponents(e), c.clone());
        }
        out
    }

    pub fn from_univariate(coeffs: &[ParameterPolynomial], slot: usize) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = vec![0u32; slot + 1];
            e[slot] = k as u32;
            let m = ParamMonomial::from_exponents(e);
            for (mm, v) in &c.terms {
                out.add_term(mm.mul(&m), v.clone());
            }
        }
        out
    }

    /// Exact multivariate division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_monomial() {
            let (dm, dc) = divisor.terms.iter().next().unwrap();
            let inv = dc.recip();
            let mut out = Self::zero();
            for (m, c) in &self.terms {
                out.terms.insert(m.div(dm)?, c * &inv);
            }
            return Some(out);
        }
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
            let qm = rm.div(&lm)?;
            let qc = rc / &lc;
            let t = Self::monomial(qm, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Greatest common divisor, monic under the internal order.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        if a == b {
            return a.monic();
        }
        if a.is_monomial() || b.is_monomial() {
            let mut it = a.terms.keys().chain(b.terms.keys());
            let first = it.next().unwrap().clone();
            let m = it.fold(first, |acc, x| acc.gcd_with(x));
            return Self::monomial(m, BigRational::one());
        }
        // pick the highest slot occurring in either polynomial as main variable
        let slot = a.slots().max(b.slots()) - 1;
        let ua = a.to_univariate(slot);
        let ub = b.to_univariate(slot);
        let ca = content(&ua);
        let cb = content(&ub);
        let g_content = Self::gcd(&ca, &cb);
        let pa = divide_all(&ua, &ca);
        let pb = divide_all(&ub, &cb);
        let (mut r0, mut r1) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
        while !(r1.len() == 1 && r1[0].is_zero()) && !r1.is_empty() {
            if r1.len() == 1 {
                // nonzero constant in the main variable: primitive gcd is 1
                r0 = vec![Self::one()];
                break;
            }
            let r = univariate_prem(&r0, &r1);
            r0 = r1;
            r1 = primitive_part(&r);
        }
        let g = Self::from_univariate(&primitive_part(&r0), slot);
        (&g * &g_content).monic()
    }

    /// Evaluates at `h` and the parameter values; missing parameters count as zero.
    pub fn eval(&self, h: &BigRational, params: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (slot, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = if slot == 0 {
                    h.clone()
                } else {
                    params.get(slot - 1).cloned().unwrap_or_else(BigRational::zero)
                };
                t *= pow_rational(&base, e);
            }
            acc += t;
        }
        acc
    }

    /// Least common multiple of the denominators of the rational coefficients.
    pub fn rational_denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the numerators of the rational coefficients (positive).
    pub fn rational_numerator_gcd(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }
}

pub(crate) fn pow_rational(base: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

fn trim(v: &mut Vec<ParameterPolynomial>) {
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn content(coeffs: &[ParameterPolynomial]) -> ParameterPolynomial {
    let mut g = ParameterPolynomial::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = ParameterPolynomial::gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_all(coeffs: &[ParameterPolynomial], d: &ParameterPolynomial) -> Vec<ParameterPolynomial> {
    let mut v: Vec<_> = coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect();
    trim(&mut v);
    v
}

fn primitive_part(coeffs: &[ParameterPolynomial]) -> Vec<ParameterPolynomial> {
    let c = content(coeffs);
    if c.is_zero() {
        return vec![ParameterPolynomial::zero()];
    }
    divide_all(coeffs, &c)
}

fn univariate_prem(a: &[ParameterPolynomial], b: &[ParameterPolynomial]) -> Vec<ParameterPolynomial> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&lr * bc);
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            r.push(ParameterPolynomial::zero());
        }
    }
    r
}

impl<'a> Add<&'a ParameterPolynomial> for &'a ParameterPolynomial {
    type Output = ParameterPolynomial;
    fn add(self, rhs: &ParameterPolynomial) -> ParameterPolynomial {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a ParameterPolynomial> for &'a ParameterPolynomial {
    type Output = ParameterPolynomial;
    fn sub(self, rhs: &ParameterPolynomial) -> ParameterPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a ParameterPolynomial> for &'a ParameterPolynomial {
    type Output = ParameterPolynomial;
    fn mul(self, rhs: &ParameterPolynomial) -> ParameterPolynomial {
        let mut out = ParameterPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &ParameterPolynomial {
    type Output = ParameterPolynomial;
    fn neg(self) -> ParameterPolynomial {
        ParameterPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

/// Element of `Q(a, h)`: reduced fraction with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coefficient {
    num: ParameterPolynomial,
    den: ParameterPolynomial,
}

impl Default for Coefficient {
    fn default() -> Self {
        Self::zero()
    }
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient {
            num: ParameterPolynomial::zero(),
            den: ParameterPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(ParameterPolynomial::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::from_poly(ParameterPolynomial::integer(n))
    }

    pub fn rational(c: BigRational) -> Self {
        Self::from_poly(ParameterPolynomial::constant(c))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn h() -> Self {
        Self::from_poly(ParameterPolynomial::h())
    }

    pub fn h_pow(k: i32) -> Self {
        let m = ParameterPolynomial::monomial(ParamMonomial::h_pow(k.unsigned_abs()), BigRational::one());
        if k >= 0 {
            Self::from_poly(m)
        } else {
            Coefficient { num: ParameterPolynomial::one(), den: m }
        }
    }

    pub fn param(index: usize) -> Self {
        Self::from_poly(ParameterPolynomial::param(index))
    }

    pub fn from_poly(p: ParameterPolynomial) -> Self {
        Coefficient { num: p, den: ParameterPolynomial::one() }
    }

    /// Reduced, denominator-monic representative of `num / den`.
    pub fn normalize(num: ParameterPolynomial, den: ParameterPolynomial) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = ParameterPolynomial::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coefficient();
        if lc.is_one() {
            Ok(Coefficient { num, den })
        } else {
            let inv = lc.recip();
            Ok(Coefficient { num: num.scale(&inv), den: den.scale(&inv) })
        }
    }

    pub fn numerator(&self) -> &ParameterPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &ParameterPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the coefficient is a rational number.
    pub fn is_rational(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when neither numerator nor denominator involves `h`.
    pub fn is_h_free(&self) -> bool {
        self.num.h_degree() == 0 && self.den.h_degree() == 0
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading_coefficient().recip();
        Ok(Coefficient { num: self.den.scale(&lc), den: self.num.scale(&lc) })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        Coefficient { num: self.num.pow(k), den: self.den.pow(k) }
    }

    pub fn powi(&self, k: i32) -> Result<Self, Error> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.inverse()?.pow(k.unsigned_abs()))
        }
    }

    /// Order of `h` in the coefficient: `c = h^v * c'` with `h` dividing
    /// neither numerator nor denominator of `c'`.
    pub fn h_valuation(&self) -> Result<i32, Error> {
        if self.is_zero() {
            return Err(Error::ZeroValuation);
        }
        Ok(self.num.h_order() as i32 - self.den.h_order() as i32)
    }

    /// Evaluates at a point; `None` when the denominator vanishes there.
    pub fn eval(&self, h: &BigRational, params: &[BigRational]) -> Option<BigRational> {
        let d = self.den.eval(h, params);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(h, params) / d)
    }

    /// Sign of the leading rational coefficient of the numerator.
    pub fn leading_sign(&self) -> Ordering {
        let lc = self.num.leading_coefficient();
        if lc.is_positive() {
            Ordering::Greater
        } else if lc.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    /// Power series of an `h`-regular coefficient (`h_valuation >= 0`):
    /// returns the `h`-free coefficients of `h^0 .. h^order`.
    pub fn h_series(&self, order: usize) -> Result<Vec<Coefficient>, Error> {
        let mut out = vec![Coefficient::zero(); order + 1];
        if self.is_zero() {
            return Ok(out);
        }
        let v = self.h_valuation()?;
        if v < 0 {
            return Err(Error::NegativeHValuation);
        }
        let num = self.num.to_univariate(0);
        let den = self.den.to_univariate(0);
        let dlow = self.den.h_order() as usize;
        let nlow = self.num.h_order() as usize;
        let get = |v: &[ParameterPolynomial], i: usize| -> Coefficient {
            v.get(i).cloned().map(Coefficient::from_poly).unwrap_or_else(Coefficient::zero)
        };
        // den = h^dlow * D(h), num = h^nlow * N(h); D(0) != 0
        let d0_inv = get(&den, dlow).inverse()?;
        let shift = v as usize;
        // series of N/D up to order - shift
        if shift > order {
            return Ok(out);
        }
        let len = order - shift + 1;
        let mut q: Vec<Coefficient> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = get(&num, nlow + k);
            for j in 1..=k {
                let dj = get(&den, dlow + j);
                if !dj.is_zero() {
                    acc = &acc - &(&dj * &q[k - j]);
                }
            }
            q.push(&acc * &d0_inv);
        }
        for (k, c) in q.into_iter().enumerate() {
            out[k + shift] = c;
        }
        Ok(out)
    }
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Coefficient::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Coefficient::normalize(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Coefficient::normalize(num, den).expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Coefficient::from_poly(&self.num * &rhs.num);
        }
        let g1 = ParameterPolynomial::gcd(&self.num, &rhs.den);
        let g2 = ParameterPolynomial::gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading_coefficient();
        if lc.is_one() {
            Coefficient { num, den }
        } else {
            let inv = lc.recip();
            Coefficient { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

impl<'a> Div<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    /// Panics on division by zero; use [`Coefficient::checked_div`] otherwise.
    fn div(self, rhs: &Coefficient) -> Coefficient {
        self.checked_div(rhs).expect("division by zero in coefficient field")
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::integer(n)
    }
}
