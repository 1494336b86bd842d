//! Differential Janet normal forms, passivity and membership in the
//! saturation ideal of a simple differential system.
//!
//! The system is consumed as given; only Janet completion and validation are
//! performed here.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebraic::{validate, AlgebraicSystem, Level, Validation, Verdict};
use crate::difference::{janet_complete, janet_normal_form, passivity_residuals, JanetSystem, ReductionResult, Residual};
use crate::error::Error;
use crate::ring::{OperatorKind, OperatorPolynomial, Ranking};

type P = OperatorPolynomial;

#[derive(Clone, Debug)]
pub struct SimpleDifferentialSystem {
    pub system: JanetSystem,
    pub validation: Validation,
}

impl SimpleDifferentialSystem {
    /// Janet-completes `equations` and validates the result.
    pub fn new(
        equations: Vec<P>,
        inequations: Vec<P>,
        ranking: Ranking,
        janet_order: Vec<usize>,
    ) -> Result<Self, Error> {
        for p in equations.iter().chain(&inequations) {
            if p.variables().iter().any(|v| v.kind != OperatorKind::Derivative) {
                return Err(Error::KindMismatch);
            }
        }
        let eqs = janet_complete(equations, &ranking, &janet_order, OperatorKind::Derivative)?;
        let mut system = JanetSystem::new(eqs, inequations, ranking, janet_order, OperatorKind::Derivative)?;
        let validation = validate_system(&system);
        system.passive = Some(!validation.reasons.iter().any(|r| r.starts_with("not passive")));
        Ok(SimpleDifferentialSystem { system, validation })
    }

    pub fn equations(&self) -> Vec<P> {
        self.system.equations()
    }

    pub fn ranking(&self) -> &Ranking {
        &self.system.ranking
    }
}

pub fn janet_normal_form_diff(f: &P, t: &SimpleDifferentialSystem) -> ReductionResult {
    janet_normal_form(f, &t.system)
}

pub fn diff_passivity_residuals(t: &SimpleDifferentialSystem) -> Vec<Residual> {
    passivity_residuals(&t.system)
}

/// Membership in `E : q^∞` where `q` is the product of initials and separants.
pub fn membership_saturation(f: &P, t: &SimpleDifferentialSystem) -> bool {
    janet_normal_form_diff(f, t).normal_form.is_zero()
}

fn validate_system(t: &JanetSystem) -> Validation {
    let mut v = Validation::yes();
    if !t.is_janet_complete() {
        v.merge(Validation { verdict: Verdict::No, reasons: alloc::vec![String::from("not Janet complete")] });
    }
    for r in passivity_residuals(t) {
        if !r.reduction.normal_form.is_zero() {
            v.merge(Validation {
                verdict: Verdict::No,
                reasons: alloc::vec![format!("not passive: prolongation of equation {} by symbol {}", r.index, r.symbol)],
            });
        }
    }
    let alg = AlgebraicSystem::new(t.equations(), t.inequations.clone());
    v.merge(validate(&alg, Level::Full, &t.ranking, false));
    for (i, g) in t.inequations.iter().enumerate() {
        if !t.is_reduced(g) {
            v.merge(Validation {
                verdict: Verdict::No,
                reasons: alloc::vec![format!("inequation {i} is not Janet reduced")],
            });
        }
    }
    v
}

/// Checks that `equations` (after Janet completion) with `inequations` form a
/// simple differential system.
pub fn validate_simple_differential(
    equations: &[P],
    inequations: &[P],
    rk: &Ranking,
    janet_order: &[usize],
) -> Result<Validation, Error> {
    let s = SimpleDifferentialSystem::new(equations.to_vec(), inequations.to_vec(), rk.clone(), janet_order.to_vec())?;
    Ok(s.validation)
}
