//! Grid expressions with signed offsets, stencil macros and clearing of
//! negative shifts and denominators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use sconsist_core::coeffs::{Coefficient, ParameterPolynomial};
use sconsist_core::{OperatorMonomial, OperatorPolynomial, OperatorVariable, Polynomial};

/// `u` at grid offset `offset` from the current point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridVar {
    pub dep: usize,
    pub offset: Vec<i64>,
}

pub type GridExpr = Polynomial<GridVar>;

pub fn grid_var(dep: usize, offset: &[i64]) -> GridExpr {
    GridExpr::var(GridVar { dep, offset: offset.to_vec() })
}

/// Applies `σ_direction^k` to every grid value.
pub fn shift(e: &GridExpr, direction: usize, k: i64) -> GridExpr {
    e.map_vars(|v| {
        let mut w = v.clone();
        w.offset[direction] += k;
        w
    })
}

fn over(e: &GridExpr, c: Coefficient) -> GridExpr {
    let inv = c.inverse().expect("nonzero stencil denominator");
    e.scale(&inv)
}

/// `(σ_i − 1)/h`
pub fn forward(e: &GridExpr, i: usize) -> GridExpr {
    over(&(&shift(e, i, 1) - e), Coefficient::h())
}

/// `(1 − σ_i⁻¹)/h`
pub fn backward(e: &GridExpr, i: usize) -> GridExpr {
    over(&(e - &shift(e, i, -1)), Coefficient::h())
}

/// `(σ_i − σ_i⁻¹)/2h`
pub fn central(e: &GridExpr, i: usize) -> GridExpr {
    over(&(&shift(e, i, 1) - &shift(e, i, -1)), &Coefficient::integer(2) * &Coefficient::h())
}

/// Five-point style Laplacian over `directions`: `Σ (σ_i − 2 + σ_i⁻¹)/h²`.
pub fn laplace(e: &GridExpr, directions: &[usize]) -> GridExpr {
    let mut acc = GridExpr::zero();
    for &i in directions {
        acc = &(&acc + &shift(e, i, 1)) + &shift(e, i, -1);
    }
    let centre = e.scale(&Coefficient::integer(2 * directions.len() as i64));
    over(&(&acc - &centre), Coefficient::h_pow(2))
}

/// A cleared equation `poly = factor · σ^shift(original)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cleared {
    pub poly: OperatorPolynomial,
    pub shift: Vec<u32>,
    pub factor: Coefficient,
}

fn poly_lcm(a: &ParameterPolynomial, b: &ParameterPolynomial) -> ParameterPolynomial {
    let g = ParameterPolynomial::gcd(a, b);
    (a * b).div_exact(&g).expect("gcd divides the product").monic()
}

/// Shifts forward until every offset is non-negative, then multiplies by the
/// least common denominator of the coefficients.
pub fn clear(e: &GridExpr, directions: usize) -> Cleared {
    let mut theta = vec![0i64; directions];
    for v in e.variables() {
        for (t, &o) in theta.iter_mut().zip(&v.offset) {
            *t = (*t).max(-o);
        }
    }
    let poly: OperatorPolynomial = e.map_vars(|v| {
        let exps: Vec<u32> = v.offset.iter().zip(&theta).map(|(&o, &t)| (o + t) as u32).collect();
        OperatorVariable::new(sconsist_core::OperatorKind::Shift, v.dep, OperatorMonomial(exps))
    });
    let mut den = ParameterPolynomial::one();
    for (_, c) in poly.terms() {
        den = poly_lcm(&den, c.denominator());
    }
    let lifted = poly.scale(&Coefficient::from_poly(den.clone()));
    let mut ints = BigInt::from(1);
    for (_, c) in lifted.terms() {
        let d = c.numerator().rational_denominator_lcm();
        ints = ints.lcm(&d);
    }
    let factor = &Coefficient::from_poly(den) * &Coefficient::rational(BigRational::from_integer(ints));
    Cleared {
        poly: poly.scale(&factor),
        shift: theta.into_iter().map(|t| t as u32).collect(),
        factor,
    }
}

/// Converts an already non-negative grid expression without clearing.
pub fn to_shift_polynomial(e: &GridExpr) -> Option<OperatorPolynomial> {
    if e.variables().iter().any(|v| v.offset.iter().any(|&o| o < 0)) {
        return None;
    }
    Some(e.map_vars(|v| {
        let exps: Vec<u32> = v.offset.iter().map(|&o| o as u32).collect();
        OperatorVariable::new(sconsist_core::OperatorKind::Shift, v.dep, OperatorMonomial(exps))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(j: &[u32]) -> OperatorPolynomial {
        OperatorPolynomial::var(OperatorVariable::shift(0, j))
    }

    #[test]
    fn macro_expansions() {
        let u = grid_var(0, &[0, 0]);
        let hinv = Coefficient::h_pow(-1);
        assert_eq!(forward(&u, 0), (&grid_var(0, &[1, 0]) - &u).scale(&hinv));
        let c = central(&u, 0);
        let want = (&grid_var(0, &[1, 0]) - &grid_var(0, &[-1, 0]))
            .scale(&(&Coefficient::ratio(1, 2) * &hinv));
        assert_eq!(c, want);
        let l = laplace(&grid_var(0, &[0, 0]), &[0, 1]);
        let sum = &(&(&(&grid_var(0, &[1, 0]) + &grid_var(0, &[0, 1])) + &grid_var(0, &[-1, 0]))
            + &grid_var(0, &[0, -1]))
            - &u.scale(&Coefficient::integer(4));
        assert_eq!(l, sum.scale(&Coefficient::h_pow(-2)));
    }

    #[test]
    fn clearing_examples() {
        let u = grid_var(0, &[0, 0]);
        let e = &backward(&u, 1) + &u.pow(2);
        let c = clear(&e, 2);
        let h = OperatorPolynomial::constant(Coefficient::h());
        let want = &(&(&h * &s(&[0, 1]).pow(2)) + &s(&[0, 1])) - &s(&[0, 0]);
        assert_eq!(c.poly, want);
        assert_eq!(c.shift, vec![0, 1]);

        let e = &grid_var(0, &[1, 0]) - &u;
        let c = clear(&e, 2);
        assert_eq!(c.poly, &s(&[1, 0]) - &s(&[0, 0]));
        assert!(c.factor.is_one());

        let c = clear(&central(&u, 0), 2);
        assert_eq!(c.poly, &s(&[2, 0]) - &s(&[0, 0]));
        assert_eq!(c.shift, vec![1, 0]);
        assert_eq!(c.factor, &Coefficient::integer(2) * &Coefficient::h());
    }
}
