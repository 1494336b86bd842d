//! Session-file parser, stencil macros and reporting for strong-consistency
//! checks of finite difference schemes.

pub mod cli;
pub mod grid;
pub mod parse;
pub mod report;
