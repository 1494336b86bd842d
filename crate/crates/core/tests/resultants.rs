use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sconsist_core::algebraic::{determinant, discriminant, resultant, sylvester_matrix};
use sconsist_core::coeffs::Coefficient;
use sconsist_core::{OperatorPolynomial, OperatorVariable};

type P = OperatorPolynomial;

fn z() -> OperatorVariable {
    OperatorVariable::shift(0, &[0])
}

fn c(n: i64) -> P {
    P::constant(Coefficient::integer(n))
}

fn from_roots(lead: i64, roots: &[i64]) -> P {
    roots.iter().fold(c(lead), |acc, &r| &acc * &(&P::var(z()) - &c(r)))
}

fn random_roots(r: &mut ChaCha8Rng) -> (i64, Vec<i64>) {
    let mut lead = 0;
    while lead == 0 {
        lead = r.gen_range(-3..=3);
    }
    let n = r.gen_range(1..=4);
    (lead, (0..n).map(|_| r.gen_range(-4..=4)).collect())
}

/// Cofactor expansion along the first row.
fn laplace_det(m: &[Vec<P>]) -> P {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = P::zero();
    for j in 0..m.len() {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<P>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let t = &m[0][j] * &laplace_det(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

#[test]
fn resultant_matches_root_products() {
    let mut r = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let (a, alpha) = random_roots(&mut r);
        let (b, beta) = random_roots(&mut r);
        let p = from_roots(a, &alpha);
        let q = from_roots(b, &beta);
        let (n, m) = (alpha.len() as u32, beta.len() as u32);
        let mut want = c(b).pow(n) * c(a).pow(m);
        for &x in &alpha {
            for &y in &beta {
                want = &want * &c(y - x);
            }
        }
        assert_eq!(resultant(&p, &q, &z()).unwrap(), want, "p = {alpha:?}, q = {beta:?}");
    }
}

#[test]
fn discriminant_matches_root_differences() {
    let mut r = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let (a, alpha) = random_roots(&mut r);
        if alpha.len() < 2 {
            continue;
        }
        let p = from_roots(a, &alpha);
        let n = alpha.len() as u32;
        let mut want = c(a).pow(2 * n - 2);
        for i in 0..alpha.len() {
            for j in i + 1..alpha.len() {
                want = &want * &c((alpha[i] - alpha[j]).pow(2));
            }
        }
        assert_eq!(discriminant(&p, &z()).unwrap(), want, "roots {alpha:?}");
    }
}

#[test]
fn fraction_free_determinant_agrees_with_expansion() {
    let mut r = ChaCha8Rng::seed_from_u64(9);
    let w = P::var(OperatorVariable::shift(1, &[0]));
    for _ in 0..100 {
        let (_, alpha) = random_roots(&mut r);
        let (_, beta) = random_roots(&mut r);
        let p = &from_roots(1, &alpha) + &(&w * &c(r.gen_range(-2..=2)));
        let q = &from_roots(1, &beta) - &w;
        let m = sylvester_matrix(&p, &q, &z());
        assert_eq!(determinant(m.clone()), laplace_det(&m));
    }
}
