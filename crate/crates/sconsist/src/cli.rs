//! Command-line interface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sconsist_core::difference::{decompose, janet_normal_form, DecomposeOptions, JanetSystem};
use sconsist_core::differential::{janet_normal_form_diff, SimpleDifferentialSystem};
use sconsist_core::limit::continuous_limit;
use sconsist_core::render;
use sconsist_core::sconsistency::{check, CheckOptions};
use sconsist_core::{Error, OperatorKind};

use crate::grid;
use crate::parse::{parse, parse_expression, Block, Expression, ParseError, Session};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_CONSISTENT: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "sconsist", version, about = "Strong-consistency checks for finite difference schemes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Session file
    pub file: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = sconsist_core::limit::DEFAULT_MAX_ORDER)]
    pub max_taylor_order: u32,
    /// Cap on reduction steps of a single normal form
    #[arg(long)]
    pub step_limit: Option<usize>,
    /// Cap on the size of intermediate polynomials during decomposition
    #[arg(long, default_value_t = 20_000)]
    pub term_limit: usize,
    /// Write decomposition events as JSON lines to this file
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum NfKind {
    Difference,
    Differential,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide strong consistency of the fda block against the pde block
    Check {
        #[command(flatten)]
        common: Common,
        /// Report every failing equation of a subsystem
        #[arg(long)]
        all_witnesses: bool,
        /// Proceed even if the pde block is not confirmed simple
        #[arg(long)]
        trust_simple: bool,
    },
    /// Decompose the fda block into passive quasi-simple systems
    Decompose {
        #[command(flatten)]
        common: Common,
    },
    /// Continuous limit of a difference expression
    Limit {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
    },
    /// Janet normal form of an expression
    Nf {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value_t = NfKind::Difference)]
        kind: NfKind,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::ResourceLimit(_)) | CliError::Core(Error::LimitUndetermined(_)) => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        }
    }
}

/// Output text and exit code of one invocation.
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

fn load(c: &Common) -> Result<Session, CliError> {
    let text = std::fs::read_to_string(&c.file)?;
    let mut s = parse(&text)?;
    s.config.max_taylor_order = c.max_taylor_order;
    s.config.step_limit = c.step_limit;
    Ok(s)
}

fn decompose_options(c: &Common) -> DecomposeOptions {
    let mut o = DecomposeOptions { trace: c.trace.is_some(), max_terms: c.term_limit, ..DecomposeOptions::default() };
    if let Some(n) = c.step_limit {
        o.max_nf_steps = n;
    }
    o
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn pde_system(s: &Session) -> Result<SimpleDifferentialSystem, CliError> {
    if s.pde.equations.is_empty() {
        return Err(CliError::Input("the session has no pde equations".into()));
    }
    Ok(SimpleDifferentialSystem::new(
        s.pde.equations.clone(),
        s.pde.inequations.clone(),
        s.config.ranking.clone(),
        s.config.janet_order.clone(),
    )?)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check { common, all_witnesses, trust_simple } => {
            let s = load(common)?;
            let pde = pde_system(&s)?;
            let opts = CheckOptions {
                all_witnesses: *all_witnesses,
                trust_simple: *trust_simple,
                max_taylor_order: common.max_taylor_order,
                decompose: decompose_options(common),
            };
            let r = check(
                &pde,
                &s.fda.equation_polys(),
                &s.fda.inequation_polys(),
                &s.config.fda_ranking,
                &s.config.janet_order,
                &opts,
            )?;
            if let Some(path) = &common.trace {
                std::fs::write(path, report::trace_lines(&r.trace, &s.config))?;
            }
            let output = if common.json {
                render_json(&report::check_json(&r, &s.config, &[("all_witnesses", json!(all_witnesses))]))
            } else {
                report::check_text(&r, &s.config)
            };
            Ok(Outcome { output, code: if r.overall { EXIT_OK } else { EXIT_NOT_CONSISTENT } })
        }
        Command::Decompose { common } => {
            let s = load(common)?;
            let d = decompose(
                &s.fda.equation_polys(),
                &s.fda.inequation_polys(),
                &s.config.fda_ranking,
                &s.config.janet_order,
                &decompose_options(common),
            )?;
            if let Some(path) = &common.trace {
                std::fs::write(path, report::trace_lines(&d.trace, &s.config))?;
            }
            let output = if common.json {
                render_json(&report::decompose_json(&d, &s.config, &[]))
            } else {
                report::decompose_text(&d, &s.config)
            };
            Ok(Outcome { output, code: EXIT_OK })
        }
        Command::Limit { common, expr } => {
            let s = load(common)?;
            let g = match parse_expression(expr, &s.config, Block::Fda)? {
                Expression::Difference(g) => g,
                Expression::Differential(_) => return Err(CliError::Input("expected a difference expression".into())),
            };
            if g.is_constant() {
                return Err(CliError::Input("expression has no grid values".into()));
            }
            let cleared = grid::clear(&g, s.config.independents.len());
            let l = continuous_limit(&cleared.poly, common.max_taylor_order)?;
            let names = s.config.names();
            let shown = render::polynomial(&cleared.poly, &names, Some(&s.config.fda_ranking));
            let output = if common.json {
                render_json(&json!({
                    "command": "limit",
                    "config": report::config_json(&s.config, &[]),
                    "expression": shown,
                    "limit": report::limit_json(&l, &s.config),
                }))
            } else {
                format!(
                    "{} -> h^{} * ({})\n",
                    shown,
                    l.d,
                    render::polynomial(&l.f, &names, Some(&s.config.ranking))
                )
            };
            Ok(Outcome { output, code: EXIT_OK })
        }
        Command::Nf { common, expr, kind } => {
            let s = load(common)?;
            let names = s.config.names();
            let (shown, nf, rk) = match kind {
                NfKind::Differential => {
                    let p = match parse_expression(expr, &s.config, Block::Pde)? {
                        Expression::Differential(p) => p,
                        Expression::Difference(_) => unreachable!("pde expressions are differential"),
                    };
                    let t = pde_system(&s)?;
                    let r = janet_normal_form_diff(&p, &t);
                    (p, r, &s.config.ranking)
                }
                NfKind::Difference => {
                    let g = match parse_expression(expr, &s.config, Block::Fda)? {
                        Expression::Difference(g) => g,
                        Expression::Differential(_) => unreachable!("fda expressions are grid expressions"),
                    };
                    let p = grid::to_shift_polynomial(&g)
                        .ok_or_else(|| CliError::Input("negative shifts in a normal form query".into()))?;
                    let t = JanetSystem::complete(
                        s.fda.equation_polys(),
                        Vec::new(),
                        s.config.fda_ranking.clone(),
                        s.config.janet_order.clone(),
                        OperatorKind::Shift,
                    )?;
                    let r = janet_normal_form(&p, &t);
                    (p, r, &s.config.fda_ranking)
                }
            };
            let e = render::polynomial(&shown, &names, Some(rk));
            let n = render::polynomial(&nf.normal_form, &names, Some(rk));
            let m = render::polynomial(&nf.multiplier, &names, Some(rk));
            let output = if common.json {
                render_json(&json!({
                    "command": "nf",
                    "config": report::config_json(&s.config, &[]),
                    "kind": match kind { NfKind::Difference => "difference", NfKind::Differential => "differential" },
                    "expression": e,
                    "nf": n,
                    "multiplier": m,
                }))
            } else {
                format!("{e} -> {n}\nmultiplier: {m}\n")
            };
            Ok(Outcome { output, code: EXIT_OK })
        }
    }
}

/// Runs the CLI on already-split arguments, mapping every failure to its exit code.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return Outcome { output: e.to_string(), code };
        }
    };
    match run(&cli) {
        Ok(o) => o,
        Err(e) => Outcome { output: format!("error: {e}\n"), code: e.exit_code() },
    }
}
