//! Strong-consistency analysis of finite difference approximations to
//! polynomial PDE systems.
//!
//! The crate provides exact coefficient arithmetic in `Q(a, h)`, Janet
//! division, a shared polynomial engine for difference and differential
//! rings, decomposition of difference systems into passive quasi-simple
//! systems, differential Janet normal forms, continuous limits and the
//! consistency check that ties them together.

#![no_std]

extern crate alloc;

pub mod algebraic;
pub mod coeffs;
pub mod difference;
pub mod differential;
pub mod error;
pub mod janet;
pub mod limit;
pub mod render;
pub mod ring;
pub mod sconsistency;

pub use coeffs::{Coefficient, ParamMonomial, ParameterPolynomial};
pub use error::Error;
pub use janet::{JanetClassification, JanetSet, OperatorMonomial};
pub use ring::{
    OperatorKind, OperatorPolynomial, OperatorVariable, Polynomial, Ranking, RankingScheme,
};
