//! Sparse commutative polynomials over [`Coefficient`] in an arbitrary ordered
//! variable type.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coeffs::{Coefficient, ParameterPolynomial};

/// Power product of variables, sorted by variable, no zero exponents.
pub type Monomial<V> = Vec<(V, u32)>;

fn mono_mul<V: Ord + Clone>(a: &[(V, u32)], b: &[(V, u32)]) -> Monomial<V> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push((a[i].0.clone(), a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn mono_div<V: Ord + Clone>(a: &[(V, u32)], b: &[(V, u32)]) -> Option<Monomial<V>> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for (v, e) in a {
        if j < b.len() && b[j].0 == *v {
            if b[j].1 > *e {
                return None;
            }
            if *e > b[j].1 {
                out.push((v.clone(), e - b[j].1));
            }
            j += 1;
        } else if j < b.len() && b[j].0 < *v {
            return None;
        } else {
            out.push((v.clone(), *e));
        }
    }
    if j < b.len() {
        return None;
    }
    Some(out)
}

/// Lexicographic monomial order with the variable order reversed (largest
/// variable compared first).
pub fn mono_cmp_lex<V: Ord>(a: &[(V, u32)], b: &[(V, u32)]) -> Ordering {
    let mut i = a.len();
    let mut j = b.len();
    while i > 0 && j > 0 {
        let (va, ea) = &a[i - 1];
        let (vb, eb) = &b[j - 1];
        match va.cmp(vb) {
            Ordering::Greater => return Ordering::Greater,
            Ordering::Less => return Ordering::Less,
            Ordering::Equal => match ea.cmp(eb) {
                Ordering::Equal => {}
                o => return o,
            },
        }
        i -= 1;
        j -= 1;
    }
    (i > 0).cmp(&(j > 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial<V: Ord> {
    terms: BTreeMap<Monomial<V>, Coefficient>,
}

impl<V: Ord> Default for Polynomial<V> {
    fn default() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }
}

impl<V: Ord + Clone> Polynomial<V> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coefficient::one())
    }

    pub fn constant(c: Coefficient) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn var(v: V) -> Self {
        Self::monomial(alloc::vec![(v, 1)], Coefficient::one())
    }

    pub fn var_pow(v: V, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Self::monomial(alloc::vec![(v, e)], Coefficient::one())
    }

    pub fn monomial(m: Monomial<V>, c: Coefficient) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial<V>, Coefficient)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
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
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_empty())
    }

    pub fn constant_value(&self) -> Option<Coefficient> {
        if self.is_zero() {
            Some(Coefficient::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, &Coefficient)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial<V>, Coefficient)> {
        self.terms.into_iter()
    }

    pub fn variables(&self) -> BTreeSet<V> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn contains_var(&self, v: &V) -> bool {
        self.terms.keys().any(|m| m.iter().any(|(w, _)| w == v))
    }

    pub fn degree_in(&self, v: &V) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().find(|(w, _)| w == v).map(|(_, e)| *e).unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().map(|(_, e)| e).sum())
            .max()
            .unwrap_or(0)
    }

    /// `self` as a univariate polynomial in `v`: degree -> coefficient.
    pub fn coefficients_in(&self, v: &V) -> BTreeMap<u32, Polynomial<V>> {
        let mut out: BTreeMap<u32, Polynomial<V>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = Vec::with_capacity(m.len());
            let mut k = 0;
            for (w, e) in m {
                if w == v {
                    k = *e;
                } else {
                    rest.push((w.clone(), *e));
                }
            }
            out.entry(k).or_default().terms.insert(rest, c.clone());
        }
        out
    }

    /// Coefficient of `v^k`.
    pub fn coefficient_of(&self, v: &V, k: u32) -> Polynomial<V> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.iter().find(|(w, _)| w == v).map(|(_, e)| *e).unwrap_or(0);
            if e == k {
                let rest: Monomial<V> = m.iter().filter(|(w, _)| w != v).cloned().collect();
                out.terms.insert(rest, c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &[(V, u32)]) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (mono_mul(m, mono), v.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to the variable `v`.
    pub fn partial_derivative(&self, v: &V) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.iter().position(|(w, _)| w == v) {
                let e = m[pos].1;
                let mut nm = m.clone();
                if e == 1 {
                    nm.remove(pos);
                } else {
                    nm[pos].1 = e - 1;
                }
                out.add_term(nm, c * &Coefficient::integer(e as i64));
            }
        }
        out
    }

    /// Renames variables; colliding images are merged.
    pub fn map_vars<W: Ord + Clone, F: FnMut(&V) -> W>(&self, mut f: F) -> Polynomial<W> {
        let mut out = Polynomial::<W>::zero();
        for (m, c) in &self.terms {
            let mut nm: Monomial<W> = Vec::with_capacity(m.len());
            for (v, e) in m {
                nm = mono_mul(&nm, &[(f(v), *e)]);
            }
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Replaces every coefficient by `f(coefficient)`.
    pub fn map_coefficients<F: FnMut(&Coefficient) -> Coefficient>(&self, mut f: F) -> Self {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Substitutes each variable by a polynomial in another variable type.
    pub fn substitute<W: Ord + Clone, F: FnMut(&V) -> Polynomial<W>>(&self, mut f: F) -> Polynomial<W> {
        let mut cache: BTreeMap<V, Polynomial<W>> = BTreeMap::new();
        let mut out = Polynomial::<W>::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::<W>::constant(c.clone());
            for (v, e) in m {
                let img = cache.entry(v.clone()).or_insert_with(|| f(v)).clone();
                t = &t * &img.pow(*e);
            }
            out = &out + &t;
        }
        out
    }

    /// Leading term under [`mono_cmp_lex`].
    pub fn leading_term_lex(&self) -> Option<(&Monomial<V>, &Coefficient)> {
        self.terms.iter().max_by(|a, b| mono_cmp_lex(a.0, b.0))
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.inverse().ok()?));
        }
        let (lm, lc) = d.leading_term_lex().map(|(m, c)| (m.clone(), c.clone()))?;
        let lc_inv = lc.inverse().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term_lex().map(|(m, c)| (m.clone(), c.clone()))?;
            let qm = mono_div(&rm, &lm)?;
            let t = Self::monomial(qm, &rc * &lc_inv);
            rem = &rem - &(&t * d);
            quot.add_term(t.terms.into_iter().next()?.0, &rc * &lc_inv);
        }
        Some(quot)
    }

    /// Evaluates with rational values for variables, `h` and parameters.
    /// Returns `None` when a coefficient has a pole at the point.
    pub fn eval<F: FnMut(&V) -> BigRational>(
        &self,
        mut value: F,
        h: &BigRational,
        params: &[BigRational],
    ) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.eval(h, params)?;
            for (v, e) in m {
                t *= crate::coeffs::pow_rational(&value(v), *e);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Divides by the `Q(a, h)`-content: the result has polynomial
    /// coefficients with coprime numerators, integer rational content one,
    /// and a positive leading rational coefficient in the lex-leading term.
    /// Returns the normalized polynomial and the factor `c` with
    /// `normalized = c * self`.
    pub fn content_normalize(&self) -> (Self, Coefficient) {
        if self.is_zero() {
            return (Self::zero(), Coefficient::one());
        }
        let mut den = ParameterPolynomial::one();
        for c in self.terms.values() {
            if !c.denominator().is_one() {
                let g = ParameterPolynomial::gcd(&den, c.denominator());
                den = &den * &c.denominator().div_exact(&g).expect("gcd divides");
            }
        }
        let mut num_gcd = ParameterPolynomial::zero();
        let mut nums: Vec<ParameterPolynomial> = Vec::with_capacity(self.terms.len());
        for c in self.terms.values() {
            let n = &(c.numerator() * &den)
                .div_exact(c.denominator())
                .expect("denominator divides lcm");
            num_gcd = ParameterPolynomial::gcd(&num_gcd, n);
            nums.push(n.clone());
        }
        let mut nums: Vec<ParameterPolynomial> = nums
            .into_iter()
            .map(|n| n.div_exact(&num_gcd).expect("gcd divides"))
            .collect();
        // integer rational content
        let dl = nums.iter().fold(BigInt::one(), |acc, n| {
            num_integer::Integer::lcm(&acc, &n.rational_denominator_lcm())
        });
        let ng = nums.iter().fold(BigInt::zero(), |acc, n| {
            num_integer::Integer::gcd(&acc, &n.rational_numerator_gcd())
        });
        let mut rscale = BigRational::new(dl, ng);
        // sign from the lex-leading term
        let lead_idx = {
            let keys: Vec<&Monomial<V>> = self.terms.keys().collect();
            let mut best = 0;
            for i in 1..keys.len() {
                if mono_cmp_lex(keys[i], keys[best]) == Ordering::Greater {
                    best = i;
                }
            }
            best
        };
        if nums[lead_idx].leading_coefficient().is_negative() {
            rscale = -rscale;
        }
        for n in nums.iter_mut() {
            *n = n.scale(&rscale);
        }
        let factor = Coefficient::normalize(den.scale(&rscale), num_gcd).expect("nonzero content");
        let terms = self
            .terms
            .keys()
            .cloned()
            .zip(nums.into_iter().map(Coefficient::from_poly))
            .collect();
        (Polynomial { terms }, factor)
    }

    pub fn normalized(&self) -> Self {
        self.content_normalize().0
    }

    /// True when `self = c * other` for some nonzero coefficient `c`.
    pub fn is_associate_of(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.len() == other.len() && self.normalized() == other.normalized()
    }

    /// The coefficient `c` with `self = c * other`, when one exists.
    pub fn ratio_to(&self, other: &Self) -> Option<Coefficient> {
        if self.is_zero() || other.is_zero() || self.len() != other.len() {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        let oc = other.terms.get(m)?;
        let r = c / oc;
        if &other.scale(&r) == self {
            Some(r)
        } else {
            None
        }
    }
}

impl<'a, V: Ord + Clone> Add<&'a Polynomial<V>> for &'a Polynomial<V> {
    type Output = Polynomial<V>;
    fn add(self, rhs: &Polynomial<V>) -> Polynomial<V> {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, V: Ord + Clone> Sub<&'a Polynomial<V>> for &'a Polynomial<V> {
    type Output = Polynomial<V>;
    fn sub(self, rhs: &Polynomial<V>) -> Polynomial<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a, V: Ord + Clone> Mul<&'a Polynomial<V>> for &'a Polynomial<V> {
    type Output = Polynomial<V>;
    fn mul(self, rhs: &Polynomial<V>) -> Polynomial<V> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }
}

impl<V: Ord + Clone> Neg for &Polynomial<V> {
    type Output = Polynomial<V>;
    fn neg(self) -> Polynomial<V> {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<V: Ord + Clone> Add for Polynomial<V> {
    type Output = Polynomial<V>;
    fn add(self, rhs: Polynomial<V>) -> Polynomial<V> {
        &self + &rhs
    }
}

impl<V: Ord + Clone> Sub for Polynomial<V> {
    type Output = Polynomial<V>;
    fn sub(self, rhs: Polynomial<V>) -> Polynomial<V> {
        &self - &rhs
    }
}

impl<V: Ord + Clone> Mul for Polynomial<V> {
    type Output = Polynomial<V>;
    fn mul(self, rhs: Polynomial<V>) -> Polynomial<V> {
        &self * &rhs
    }
}

impl<V: Ord + Clone> Neg for Polynomial<V> {
    type Output = Polynomial<V>;
    fn neg(self) -> Polynomial<V> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polynomial<u8>;

    fn x(i: u8) -> P {
        P::var(i)
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = &(&x(0) + &x(1)) * &(&x(2) - &P::one());
        let b = &x(0) + &x(1);
        assert_eq!(a.div_exact(&b), Some(&x(2) - &P::one()));
        assert_eq!(x(0).div_exact(&x(1)), None);
    }

    #[test]
    fn content_normalize_strips_scalar() {
        let p = (&x(0) * &x(0)).scale(&(&Coefficient::integer(-6) * &Coefficient::h_pow(3)));
        let (n, c) = p.content_normalize();
        assert_eq!(n, &x(0) * &x(0));
        assert_eq!(p.scale(&c), n);
    }

    #[test]
    fn lex_order_is_monomial_order() {
        let a: Monomial<u8> = alloc::vec![(0, 2)];
        let b: Monomial<u8> = alloc::vec![(1, 1)];
        assert_eq!(mono_cmp_lex(&a, &b), Ordering::Less);
        let c: Monomial<u8> = alloc::vec![(0, 1), (1, 1)];
        assert_eq!(mono_cmp_lex(&c, &b), Ordering::Greater);
        assert_eq!(mono_cmp_lex::<u8>(&[], &b), Ordering::Less);
    }
}
