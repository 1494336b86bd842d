use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in coefficient field")]
    DivisionByZero,
    #[error("h-valuation of zero is undefined")]
    ZeroValuation,
    #[error("coefficient has a pole at h = 0")]
    NegativeHValuation,
    #[error("monomial is not a member of the generating set")]
    NotAMember,
    #[error("operator kinds do not match")]
    KindMismatch,
    #[error("no leader: polynomial is constant")]
    NoLeader,
    #[error("pseudo-reduction precondition violated: {0}")]
    ReductionPrecondition(String),
    #[error("resultant undefined: both polynomials are constant in the variable")]
    ResultantOfConstants,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("constant polynomial in an equation set")]
    ConstantEquation,
    #[error("negative shift in a difference polynomial")]
    NegativeShift,
    #[error("system is not passive")]
    NotPassive,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("limit undetermined at order {0}")]
    LimitUndetermined(u32),
    #[error("differential system is not simple: {0}")]
    NotSimple(String),
    #[error("difference system is not w-consistent with the differential system: {0}")]
    NotWConsistent(String),
}
