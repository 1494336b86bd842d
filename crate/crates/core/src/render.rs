//! Canonical text form of coefficients and operator polynomials.
//!
//! Shifted variables print as `u[2,1]`, derivatives as `D(u,x,2,y)` (order one
//! omitted) and underived dependents as the bare name.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::coeffs::{Coefficient, ParameterPolynomial};
use crate::ring::{OperatorKind, OperatorPolynomial, OperatorVariable, Ranking};

/// Names of the independent variables, dependent variables and parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Names {
    pub independents: Vec<String>,
    pub dependents: Vec<String>,
    pub parameters: Vec<String>,
}

impl Names {
    pub fn new(independents: &[&str], dependents: &[&str], parameters: &[&str]) -> Self {
        Names {
            independents: independents.iter().map(|s| s.to_string()).collect(),
            dependents: dependents.iter().map(|s| s.to_string()).collect(),
            parameters: parameters.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn dep(&self, i: usize) -> String {
        self.dependents.get(i).cloned().unwrap_or_else(|| format!("u{i}"))
    }

    fn indep(&self, i: usize) -> String {
        self.independents.get(i).cloned().unwrap_or_else(|| format!("x{i}"))
    }

    fn param(&self, i: usize) -> String {
        self.parameters.get(i).cloned().unwrap_or_else(|| format!("a{i}"))
    }
}

fn rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a parameter polynomial; terms in descending degrevlex order.
pub fn parameter_polynomial(p: &ParameterPolynomial, names: &Names) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.sorted_terms().into_iter().enumerate() {
        let mut factors: Vec<String> = Vec::new();
        for slot in 1..m.exponents().len() {
            push_power(&mut factors, names.param(slot - 1), m.exponent(slot));
        }
        push_power(&mut factors, "h".into(), m.h_exponent());
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if factors.is_empty() {
            out.push_str(&rational(&a));
        } else {
            if !a.is_one() {
                out.push_str(&rational(&a));
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

fn push_power(factors: &mut Vec<String>, name: String, e: u32) {
    match e {
        0 => {}
        1 => factors.push(name),
        _ => factors.push(format!("{name}^{e}")),
    }
}

fn atom(p: &ParameterPolynomial, names: &Names) -> String {
    let s = parameter_polynomial(p, names);
    if p.len() > 1 || (p.len() == 1 && s.contains('/')) {
        format!("({s})")
    } else {
        s
    }
}

pub fn coefficient(c: &Coefficient, names: &Names) -> String {
    if c.denominator().is_one() {
        return parameter_polynomial(c.numerator(), names);
    }
    format!("{}/{}", atom(c.numerator(), names), atom(c.denominator(), names))
}

pub fn variable(v: &OperatorVariable, names: &Names) -> String {
    let name = names.dep(v.dep);
    match v.kind {
        OperatorKind::Shift => {
            let idx: Vec<String> = v.action.0.iter().map(|e| e.to_string()).collect();
            format!("{name}[{}]", idx.join(","))
        }
        OperatorKind::Derivative => {
            if v.action.is_identity() {
                return name;
            }
            let mut parts = alloc::vec![name];
            for (s, &e) in v.action.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                parts.push(names.indep(s));
                if e > 1 {
                    parts.push(e.to_string());
                }
            }
            format!("D({})", parts.join(","))
        }
    }
}

/// Sign of a coefficient as printed: negative when the leading rational
/// coefficient of the numerator is negative.
fn is_negative(c: &Coefficient) -> bool {
    c.leading_sign() == Ordering::Less
}

/// Renders `p` with terms ordered by `rk` (highest first) when given, by the
/// internal order otherwise.
pub fn polynomial(p: &OperatorPolynomial, names: &Names, rk: Option<&Ranking>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let terms: Vec<_> = match rk {
        Some(rk) => rk.sorted_terms(p),
        None => {
            let mut ts: Vec<_> = p.terms().collect();
            ts.reverse();
            ts
        }
    };
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = is_negative(c);
        let a = if neg { -c } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        let mut vars: Vec<&(OperatorVariable, u32)> = m.iter().collect();
        if let Some(rk) = rk {
            vars.sort_by(|x, y| rk.cmp(&y.0, &x.0));
        }
        for (v, e) in vars {
            push_power(&mut factors, variable(v, names), *e);
        }
        if factors.is_empty() {
            out.push_str(&coefficient_factor(&a, names, true));
        } else {
            if !a.is_one() {
                out.push_str(&coefficient_factor(&a, names, false));
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

fn coefficient_factor(c: &Coefficient, names: &Names, alone: bool) -> String {
    if c.denominator().is_one() {
        let s = parameter_polynomial(c.numerator(), names);
        if !alone && c.numerator().len() > 1 {
            return format!("({s})");
        }
        return s;
    }
    coefficient(c, names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_variables() {
        let names = Names::new(&["x", "y"], &["u"], &[]);
        assert_eq!(variable(&OperatorVariable::shift(0, &[2, 1]), &names), "u[2,1]");
        assert_eq!(variable(&OperatorVariable::derivative(0, &[2, 1]), &names), "D(u,x,2,y)");
        assert_eq!(variable(&OperatorVariable::derivative(0, &[0, 0]), &names), "u");
    }

    #[test]
    fn renders_polynomials() {
        let names = Names::new(&["x", "y"], &["u"], &["Re"]);
        let rk = Ranking::declared(crate::ring::RankingScheme::TopLex, 2, 1);
        let u = OperatorPolynomial::var(OperatorVariable::shift(0, &[0, 0]));
        let s = OperatorPolynomial::var(OperatorVariable::shift(0, &[1, 0]));
        let p = &(&s - &u) - &u.pow(2).scale(&Coefficient::h());
        assert_eq!(polynomial(&p, &names, Some(&rk)), "u[1,0] - h*u[0,0]^2 - u[0,0]");
        let q = u.scale(&Coefficient::ratio(1, 2).checked_div(&Coefficient::param(0)).unwrap());
        assert_eq!(polynomial(&q, &names, Some(&rk)), "(1/2)/Re*u[0,0]");
        let c = Coefficient::from_poly(&ParameterPolynomial::h() + &ParameterPolynomial::one());
        assert_eq!(polynomial(&u.scale(&c), &names, None), "(h + 1)*u[0,0]");
    }
}
