//! Strong-consistency check of a difference system against a simple
//! differential system.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebraic::Verdict;
use crate::difference::{decompose, DecomposeOptions, JanetSystem, TraceEvent};
use crate::differential::{janet_normal_form_diff, membership_saturation, SimpleDifferentialSystem};
use crate::error::Error;
use crate::limit::{continuous_limit, LimitResult, DEFAULT_MAX_ORDER};
use crate::ring::{OperatorPolynomial, Ranking};

type P = OperatorPolynomial;

/// Label of the membership oracle used for limits.
pub const MEMBERSHIP_ORACLE: &str = "saturation ideal of the given simple differential system";

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub all_witnesses: bool,
    /// Accept a differential system whose simplicity could not be confirmed.
    pub trust_simple: bool,
    pub max_taylor_order: u32,
    pub decompose: DecomposeOptions,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            all_witnesses: false,
            trust_simple: false,
            max_taylor_order: DEFAULT_MAX_ORDER,
            decompose: DecomposeOptions::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsystemVerdict {
    /// s-consistent
    Strong,
    /// w-consistent only
    Weak,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub equation: OperatorPolynomial,
    pub limit: LimitResult,
    pub normal_form: OperatorPolynomial,
}

#[derive(Clone, Debug)]
pub struct SubsystemReport {
    pub system: JanetSystem,
    pub verdict: SubsystemVerdict,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    pub subsystems: Vec<SubsystemReport>,
    pub dropped: Vec<JanetSystem>,
    /// Branches of the decomposition that turned out inconsistent.
    pub discarded: usize,
    pub overall: bool,
    /// Simplicity of the differential system was assumed, not established.
    pub trusted: bool,
    pub oracle: &'static str,
    pub trace: Vec<TraceEvent>,
}

/// Checks that every equation of `fda` has a continuous limit proportional to
/// some equation of `s`.
pub fn check_w_consistency(s: &SimpleDifferentialSystem, fda: &[P], max_order: u32) -> Result<(), Error> {
    let pde = s.equations();
    for (i, e) in fda.iter().enumerate() {
        let l = continuous_limit(e, max_order)?;
        let ok = pde.iter().any(|f| l.f.ratio_to(f).is_some_and(|c| c.is_h_free()));
        if !ok {
            return Err(Error::NotWConsistent(format!("equation {i} has no matching differential equation")));
        }
    }
    Ok(())
}

pub fn check(
    s: &SimpleDifferentialSystem,
    fda_equations: &[P],
    fda_inequations: &[P],
    fda_ranking: &Ranking,
    janet_order: &[usize],
    opts: &CheckOptions,
) -> Result<ConsistencyReport, Error> {
    let trusted = s.validation.verdict != Verdict::Yes;
    if trusted && !opts.trust_simple {
        let mut msg = String::new();
        for r in &s.validation.reasons {
            if !msg.is_empty() {
                msg.push_str("; ");
            }
            msg.push_str(r);
        }
        return Err(Error::NotSimple(msg));
    }
    check_w_consistency(s, fda_equations, opts.max_taylor_order)?;
    let dec = decompose(fda_equations, fda_inequations, fda_ranking, janet_order, &opts.decompose)?;
    let mut subsystems = Vec::new();
    let mut dropped = Vec::new();
    'systems: for sys in dec.systems {
        for g in &sys.inequations {
            let l = continuous_limit(g, opts.max_taylor_order)?;
            if membership_saturation(&l.f, s) {
                dropped.push(sys);
                continue 'systems;
            }
        }
        let mut witnesses = Vec::new();
        for e in sys.equations() {
            let limit = continuous_limit(&e, opts.max_taylor_order)?;
            let nf = janet_normal_form_diff(&limit.f, s).normal_form;
            if !nf.is_zero() {
                witnesses.push(Witness { equation: e, limit, normal_form: nf });
                if !opts.all_witnesses {
                    break;
                }
            }
        }
        let verdict = if witnesses.is_empty() { SubsystemVerdict::Strong } else { SubsystemVerdict::Weak };
        subsystems.push(SubsystemReport { system: sys, verdict, witnesses });
    }
    let overall = subsystems.iter().all(|r| r.verdict == SubsystemVerdict::Strong);
    Ok(ConsistencyReport {
        subsystems,
        dropped,
        discarded: dec.discarded,
        overall,
        trusted,
        oracle: MEMBERSHIP_ORACLE,
        trace: dec.trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Coefficient;
    use crate::ring::{OperatorVariable, RankingScheme};
    use alloc::vec;

    fn s(j: &[u32]) -> P {
        P::var(OperatorVariable::shift(0, j))
    }

    fn d(j: &[u32]) -> P {
        P::var(OperatorVariable::derivative(0, j))
    }

    fn h() -> P {
        P::constant(Coefficient::h())
    }

    fn rk() -> Ranking {
        Ranking::declared(RankingScheme::TopLex, 2, 1)
    }

    fn pde() -> SimpleDifferentialSystem {
        let u = d(&[0, 0]);
        SimpleDifferentialSystem::new(vec![&d(&[1, 0]) - &u.pow(2), &d(&[0, 1]) + &u.pow(2)], vec![], rk(), vec![0, 1])
            .unwrap()
    }

    #[test]
    fn forward_forward_is_weak() {
        let u = s(&[0, 0]);
        let fda = vec![
            &(&s(&[1, 0]) - &u) - &(&h() * &u.pow(2)),
            &(&s(&[0, 1]) - &u) + &(&h() * &u.pow(2)),
        ];
        let r = check(&pde(), &fda, &[], &rk(), &[0, 1], &CheckOptions::default()).unwrap();
        assert!(!r.overall);
        assert_eq!(r.subsystems.len(), 1);
        let w = &r.subsystems[0].witnesses;
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].equation, u.pow(4));
        assert_eq!(w[0].limit, LimitResult { d: 0, f: d(&[0, 0]).pow(4) });
        assert_eq!(w[0].normal_form, d(&[0, 0]).pow(4));
    }

    #[test]
    fn forward_backward_is_strong() {
        let u = s(&[0, 0]);
        let fda = vec![
            &(&s(&[1, 0]) - &u) - &(&h() * &u.pow(2)),
            &(&(&h() * &s(&[0, 1]).pow(2)) + &s(&[0, 1])) - &u,
        ];
        let r = check(&pde(), &fda, &[], &rk(), &[0, 1], &CheckOptions::default()).unwrap();
        assert!(r.overall);
        assert_eq!(r.subsystems.len(), 1);
        assert_eq!(r.subsystems[0].verdict, SubsystemVerdict::Strong);
    }

    #[test]
    fn undiscretized_input_is_rejected() {
        let u = s(&[0, 0]);
        let fda = vec![&s(&[0, 0]) - &u.pow(2)];
        let r = check(&pde(), &fda, &[], &rk(), &[0, 1], &CheckOptions::default());
        assert!(matches!(r, Err(Error::NotWConsistent(_))));
    }
}
