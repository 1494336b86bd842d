//! Session files: declarations, rankings, a `pde` block and an `fda` block.
//!
//! ```text
//! independents x, y;
//! dependents u;
//! parameters ;
//! ranking toplex symbols x > y dependents u;
//! pde { D(u,x) - u^2 = 0; D(u,y) + u^2 = 0; }
//! fda { Dplus(u,x) - u^2 = 0; Dminus(u,y) + u^2 = 0; }
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use sconsist_core::coeffs::Coefficient;
use sconsist_core::ring::{apply_operator, OperatorKind};
use sconsist_core::{OperatorMonomial, OperatorPolynomial, OperatorVariable, Ranking, RankingScheme};

use crate::grid::{self, Cleared, GridExpr};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionConfig {
    pub independents: Vec<String>,
    pub time: Option<usize>,
    pub dependents: Vec<String>,
    pub parameters: Vec<String>,
    pub ranking: Ranking,
    pub fda_ranking: Ranking,
    pub janet_order: Vec<usize>,
    pub max_taylor_order: u32,
    pub step_limit: Option<usize>,
}

impl SessionConfig {
    pub fn new(independents: &[&str], dependents: &[&str], parameters: &[&str]) -> Self {
        let n = independents.len();
        let m = dependents.len();
        SessionConfig {
            independents: independents.iter().map(|s| s.to_string()).collect(),
            time: None,
            dependents: dependents.iter().map(|s| s.to_string()).collect(),
            parameters: parameters.iter().map(|s| s.to_string()).collect(),
            ranking: Ranking::declared(RankingScheme::TopLex, n, m),
            fda_ranking: Ranking::declared(RankingScheme::TopLex, n, m),
            janet_order: (0..n).collect(),
            max_taylor_order: sconsist_core::limit::DEFAULT_MAX_ORDER,
            step_limit: None,
        }
    }

    pub fn names(&self) -> sconsist_core::render::Names {
        sconsist_core::render::Names {
            independents: self.independents.clone(),
            dependents: self.dependents.clone(),
            parameters: self.parameters.clone(),
        }
    }

    pub fn spatial(&self) -> Vec<usize> {
        (0..self.independents.len()).filter(|&i| Some(i) != self.time).collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PdeSystem {
    pub equations: Vec<OperatorPolynomial>,
    pub inequations: Vec<OperatorPolynomial>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FdaSystem {
    pub equations: Vec<Cleared>,
    pub inequations: Vec<Cleared>,
    /// Expressions as written, before clearing.
    pub raw_equations: Vec<GridExpr>,
}

impl FdaSystem {
    pub fn equation_polys(&self) -> Vec<OperatorPolynomial> {
        self.equations.iter().map(|c| c.poly.clone()).collect()
    }

    pub fn inequation_polys(&self) -> Vec<OperatorPolynomial> {
        self.inequations.iter().map(|c| c.poly.clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    pub config: SessionConfig,
    pub pde: PdeSystem,
    pub fda: FdaSystem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(BigRational),
    Sym(&'static str),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

const SYMBOLS: [&str; 16] = ["!=", "+", "-", "*", "/", "^", "(", ")", "[", "]", ",", ";", "{", "}", "=", ">"];

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start = (line, col);
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            out.push(Token { tok: Tok::Ident(s), line: start.0, col: start.1 });
            continue;
        }
        if c.is_ascii_digit() {
            let mut int = String::new();
            let mut frac = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                int.push(chars[i]);
                i += 1;
                col += 1;
            }
            if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                i += 1;
                col += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    frac.push(chars[i]);
                    i += 1;
                    col += 1;
                }
            }
            let digits: BigInt = format!("{int}{frac}").parse().expect("digits");
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            out.push(Token { tok: Tok::Num(BigRational::new(digits, scale)), line: start.0, col: start.1 });
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        match SYMBOLS.iter().find(|s| rest.starts_with(**s)) {
            Some(s) => {
                i += s.len();
                col += s.len();
                out.push(Token { tok: Tok::Sym(s), line: start.0, col: start.1 });
            }
            None => {
                return Err(ParseError { line, col, msg: format!("unexpected character '{c}'") });
            }
        }
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Pde,
    Fda,
}

#[derive(Clone, Debug)]
enum Value {
    Const(Coefficient),
    Diff(OperatorPolynomial),
    Grid(GridExpr),
}

const MACROS: [&str; 5] = ["Dplus", "Dminus", "Dcentral", "Dt", "Laplace"];
const KEYWORDS: [&str; 13] = [
    "independents", "time", "dependents", "parameters", "ranking", "fda_ranking", "janet", "pde", "fda",
    "toplex", "potlex", "symbols", "D",
];

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    config: &'a SessionConfig,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, t: &Token, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: t.line, col: t.col, msg: msg.into() })
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Sym(x) if *x == s)
    }

    fn expect_sym(&mut self, s: &str) -> Result<(), ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Sym(x) if *x == s => Ok(()),
            _ => self.err(&t, format!("expected '{s}'")),
        }
    }

    fn ident(&mut self) -> Result<(String, Token), ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t)),
            _ => self.err(&t, "expected an identifier"),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let neg = if self.is_sym("-") {
            self.next();
            true
        } else {
            false
        };
        let t = self.next();
        match &t.tok {
            Tok::Num(r) if r.is_integer() => {
                let v: i64 = r.to_integer().try_into().map_err(|_| ParseError {
                    line: t.line,
                    col: t.col,
                    msg: "integer out of range".into(),
                })?;
                Ok(if neg { -v } else { v })
            }
            _ => self.err(&t, "expected an integer"),
        }
    }

    fn independent(&mut self) -> Result<usize, ParseError> {
        let (name, t) = self.ident()?;
        match self.config.independents.iter().position(|s| *s == name) {
            Some(i) => Ok(i),
            None => self.err(&t, format!("unknown independent variable '{name}'")),
        }
    }

    fn expr(&mut self, block: Block) -> Result<Value, ParseError> {
        let mut acc = self.term(block)?;
        loop {
            let t = self.peek().clone();
            if self.is_sym("+") || self.is_sym("-") {
                self.next();
                let rhs = self.term(block)?;
                let op = if t.tok == Tok::Sym("+") { Op::Add } else { Op::Sub };
                acc = self.combine(acc, rhs, op, &t)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, block: Block) -> Result<Value, ParseError> {
        let mut acc = self.unary(block)?;
        loop {
            let t = self.peek().clone();
            if self.is_sym("*") {
                self.next();
                let rhs = self.unary(block)?;
                acc = self.combine(acc, rhs, Op::Mul, &t)?;
            } else if self.is_sym("/") {
                self.next();
                let rhs = self.unary(block)?;
                let c = match rhs {
                    Value::Const(c) => c,
                    _ => return self.err(&t, "division by an expression containing unknowns"),
                };
                let inv = match c.inverse() {
                    Ok(i) => i,
                    Err(_) => return self.err(&t, "division by zero"),
                };
                acc = self.combine(acc, Value::Const(inv), Op::Mul, &t)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self, block: Block) -> Result<Value, ParseError> {
        if self.is_sym("-") {
            let t = self.next();
            let v = self.unary(block)?;
            return self.combine(Value::Const(Coefficient::zero()), v, Op::Sub, &t);
        }
        self.power(block)
    }

    fn power(&mut self, block: Block) -> Result<Value, ParseError> {
        let base = self.atom(block)?;
        if !self.is_sym("^") {
            return Ok(base);
        }
        let t = self.next();
        let k = self.integer()?;
        match base {
            Value::Const(c) => match c.powi(k as i32) {
                Ok(p) => Ok(Value::Const(p)),
                Err(_) => self.err(&t, "zero raised to a negative power"),
            },
            _ if k < 0 => self.err(&t, "negative exponent on an expression containing unknowns"),
            Value::Diff(p) => Ok(Value::Diff(p.pow(k as u32))),
            Value::Grid(p) => Ok(Value::Grid(p.pow(k as u32))),
        }
    }

    fn atom(&mut self, block: Block) -> Result<Value, ParseError> {
        let t = self.next();
        match t.tok.clone() {
            Tok::Num(r) => Ok(Value::Const(Coefficient::rational(r))),
            Tok::Sym("(") => {
                let v = self.expr(block)?;
                self.expect_sym(")")?;
                Ok(v)
            }
            Tok::Ident(name) => self.named(name, &t, block),
            _ => self.err(&t, "expected an expression"),
        }
    }

    fn named(&mut self, name: String, t: &Token, block: Block) -> Result<Value, ParseError> {
        if name == "h" {
            return Ok(Value::Const(Coefficient::h()));
        }
        if let Some(i) = self.config.parameters.iter().position(|s| *s == name) {
            return Ok(Value::Const(Coefficient::param(i)));
        }
        let n = self.config.independents.len();
        if let Some(dep) = self.config.dependents.iter().position(|s| *s == name) {
            if self.is_sym("[") {
                self.next();
                let mut idx = Vec::new();
                if !self.is_sym("]") {
                    idx.push(self.integer()?);
                    while self.is_sym(",") {
                        self.next();
                        idx.push(self.integer()?);
                    }
                }
                self.expect_sym("]")?;
                if block == Block::Pde {
                    return self.err(t, "grid values are not allowed in the pde block");
                }
                if idx.len() != n {
                    return self.err(t, format!("expected {n} indices, found {}", idx.len()));
                }
                return Ok(Value::Grid(grid::grid_var(dep, &idx)));
            }
            return Ok(match block {
                Block::Pde => Value::Diff(OperatorPolynomial::var(OperatorVariable::derivative(dep, &vec![0; n]))),
                Block::Fda => Value::Grid(grid::grid_var(dep, &vec![0; n])),
            });
        }
        if name == "D" {
            return self.derivative(t, block);
        }
        if MACROS.contains(&name.as_str()) {
            return self.stencil(&name, t, block);
        }
        self.err(t, format!("unknown identifier '{name}'"))
    }

    fn derivative(&mut self, t: &Token, block: Block) -> Result<Value, ParseError> {
        self.expect_sym("(")?;
        let arg = self.expr(block)?;
        let n = self.config.independents.len();
        let mut theta = vec![0u32; n];
        while self.is_sym(",") {
            self.next();
            let i = self.independent()?;
            let mut k = 1;
            if self.is_sym(",") && matches!(self.toks[self.pos + 1].tok, Tok::Num(_)) {
                self.next();
                k = self.integer()?;
                if k < 0 {
                    return self.err(t, "negative derivative order");
                }
            }
            theta[i] += k as u32;
        }
        self.expect_sym(")")?;
        match arg {
            Value::Diff(p) => Ok(Value::Diff(apply_operator(OperatorKind::Derivative, &OperatorMonomial(theta), &p))),
            Value::Const(c) if c.is_zero() || theta.iter().any(|&k| k > 0) => {
                Ok(Value::Const(Coefficient::zero()))
            }
            Value::Const(c) => Ok(Value::Const(c)),
            Value::Grid(_) => self.err(t, "D applied to a grid expression"),
        }
    }

    fn stencil(&mut self, name: &str, t: &Token, block: Block) -> Result<Value, ParseError> {
        if block == Block::Pde {
            return self.err(t, format!("difference operator {name} in the pde block"));
        }
        self.expect_sym("(")?;
        let arg = self.expr(block)?;
        let mut dirs = Vec::new();
        while self.is_sym(",") {
            self.next();
            dirs.push(self.independent()?);
        }
        self.expect_sym(")")?;
        let e = match arg {
            Value::Grid(e) if !e.is_constant() => e,
            _ => return self.err(t, format!("{name} applied to an expression without grid values")),
        };
        let one = |dirs: &[usize]| -> Result<usize, ParseError> {
            match dirs {
                [d] => Ok(*d),
                _ => self.err(t, format!("{name} takes exactly one direction")),
            }
        };
        let out = match name {
            "Dplus" => grid::forward(&e, one(&dirs)?),
            "Dminus" => grid::backward(&e, one(&dirs)?),
            "Dcentral" => grid::central(&e, one(&dirs)?),
            "Dt" => {
                if !dirs.is_empty() {
                    return self.err(t, "Dt takes no direction");
                }
                match self.config.time {
                    Some(ti) => grid::forward(&e, ti),
                    None => return self.err(t, "Dt needs a declared time variable"),
                }
            }
            _ => {
                let ds = if dirs.is_empty() { self.config.spatial() } else { dirs };
                grid::laplace(&e, &ds)
            }
        };
        Ok(Value::Grid(out))
    }

    fn combine(&self, a: Value, b: Value, op: Op, t: &Token) -> Result<Value, ParseError> {
        use Value::*;
        Ok(match (a, b) {
            (Const(x), Const(y)) => Const(match op {
                Op::Add => &x + &y,
                Op::Sub => &x - &y,
                Op::Mul => &x * &y,
            }),
            (Diff(x), Diff(y)) => Diff(op.apply(&x, &y)),
            (Grid(x), Grid(y)) => Grid(op.apply(&x, &y)),
            (Const(c), Diff(y)) => Diff(op.apply(&OperatorPolynomial::constant(c), &y)),
            (Diff(x), Const(c)) => Diff(op.apply(&x, &OperatorPolynomial::constant(c))),
            (Const(c), Grid(y)) => Grid(op.apply(&GridExpr::constant(c), &y)),
            (Grid(x), Const(c)) => Grid(op.apply(&x, &GridExpr::constant(c))),
            _ => return self.err(t, "expression mixes derivatives and grid values"),
        })
    }

    fn name_list(&mut self) -> Result<Vec<(String, Token)>, ParseError> {
        let mut out = Vec::new();
        if self.is_sym(";") {
            return Ok(out);
        }
        out.push(self.ident()?);
        while self.is_sym(",") {
            self.next();
            out.push(self.ident()?);
        }
        Ok(out)
    }

    fn chain(&mut self) -> Result<Vec<(String, Token)>, ParseError> {
        let mut out = vec![self.ident()?];
        while self.is_sym(">") {
            self.next();
            out.push(self.ident()?);
        }
        Ok(out)
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

impl Op {
    fn apply<V: Ord + Clone>(
        self,
        a: &sconsist_core::Polynomial<V>,
        b: &sconsist_core::Polynomial<V>,
    ) -> sconsist_core::Polynomial<V> {
        match self {
            Op::Add => a + b,
            Op::Sub => a - b,
            Op::Mul => a * b,
        }
    }
}

fn resolve(names: &[(String, Token)], universe: &[String], what: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for (n, t) in names {
        match universe.iter().position(|s| s == n) {
            Some(i) if !out.contains(&i) => out.push(i),
            Some(_) => return Err(ParseError { line: t.line, col: t.col, msg: format!("'{n}' listed twice") }),
            None => return Err(ParseError { line: t.line, col: t.col, msg: format!("unknown {what} '{n}'") }),
        }
    }
    if out.len() != universe.len() {
        let t = &names.last().expect("non-empty chain").1;
        return Err(ParseError { line: t.line, col: t.col, msg: format!("every {what} must be ordered") });
    }
    Ok(out)
}

fn ranking_clause(p: &mut Parser, config: &SessionConfig) -> Result<Ranking, ParseError> {
    let (scheme_name, t) = p.ident()?;
    let scheme = match scheme_name.as_str() {
        "toplex" => RankingScheme::TopLex,
        "potlex" => RankingScheme::PotLex,
        _ => return p.err(&t, "expected 'toplex' or 'potlex'"),
    };
    let mut symbols: Vec<usize> = (0..config.independents.len()).collect();
    let mut deps: Vec<usize> = (0..config.dependents.len()).collect();
    while let Tok::Ident(w) = &p.peek().tok {
        match w.as_str() {
            "symbols" => {
                p.next();
                symbols = resolve(&p.chain()?, &config.independents, "independent variable")?;
            }
            "dependents" => {
                p.next();
                deps = resolve(&p.chain()?, &config.dependents, "dependent variable")?;
            }
            _ => {
                let t = p.peek().clone();
                return p.err(&t, "expected 'symbols' or 'dependents'");
            }
        }
    }
    Ok(Ranking::new(scheme, symbols, deps))
}

fn declare(
    list: Vec<(String, Token)>,
    taken: &[&Vec<String>],
) -> Result<Vec<String>, ParseError> {
    let mut out: Vec<String> = Vec::new();
    for (n, t) in list {
        let clash = n == "h"
            || KEYWORDS.contains(&n.as_str())
            || MACROS.contains(&n.as_str())
            || out.contains(&n)
            || taken.iter().any(|v| v.contains(&n));
        if clash {
            return Err(ParseError { line: t.line, col: t.col, msg: format!("name '{n}' is reserved or already declared") });
        }
        out.push(n);
    }
    Ok(out)
}

/// Parses a session file.
pub fn parse(text: &str) -> Result<Session, ParseError> {
    let toks = lex(text)?;
    let mut config = SessionConfig::new(&[], &[], &[]);
    let mut pde = PdeSystem::default();
    let mut fda = FdaSystem::default();
    let mut ranking_set = false;
    let mut fda_ranking: Option<Ranking> = None;
    let mut janet: Option<Vec<usize>> = None;
    let mut time_name: Option<(String, Token)> = None;
    let mut pos = 0usize;
    loop {
        let snapshot = config.clone();
        let mut p = Parser { toks: toks.clone(), pos, config: &snapshot };
        let t = p.next();
        let word = match &t.tok {
            Tok::End => break,
            Tok::Ident(w) => w.clone(),
            _ => return p.err(&t, "expected a declaration or block"),
        };
        match word.as_str() {
            "independents" => {
                let l = p.name_list()?;
                config.independents = declare(l, &[&config.dependents, &config.parameters])?;
                p.expect_sym(";")?;
            }
            "dependents" => {
                let l = p.name_list()?;
                config.dependents = declare(l, &[&config.independents, &config.parameters])?;
                p.expect_sym(";")?;
            }
            "parameters" => {
                let l = p.name_list()?;
                config.parameters = declare(l, &[&config.independents, &config.dependents])?;
                p.expect_sym(";")?;
            }
            "time" => {
                time_name = Some(p.ident()?);
                p.expect_sym(";")?;
            }
            "ranking" => {
                config.ranking = ranking_clause(&mut p, &snapshot)?;
                ranking_set = true;
                p.expect_sym(";")?;
            }
            "fda_ranking" => {
                fda_ranking = Some(ranking_clause(&mut p, &snapshot)?);
                p.expect_sym(";")?;
            }
            "janet" => {
                let c = p.chain()?;
                janet = Some(resolve(&c, &snapshot.independents, "independent variable")?);
                p.expect_sym(";")?;
            }
            "pde" | "fda" => {
                let block = if word == "pde" { Block::Pde } else { Block::Fda };
                let mut cfg = snapshot.clone();
                finish_config(&mut cfg, ranking_set, &fda_ranking, &janet, &time_name)?;
                let mut q = Parser { toks: toks.clone(), pos: p.pos, config: &cfg };
                q.expect_sym("{")?;
                while !q.is_sym("}") {
                    let start = q.peek().clone();
                    let lhs = q.expr(block)?;
                    let eq = if q.is_sym("=") {
                        true
                    } else if q.is_sym("!=") {
                        false
                    } else {
                        let t = q.peek().clone();
                        return q.err(&t, "expected '=' or '!='");
                    };
                    let op_tok = q.next();
                    let rhs = q.expr(block)?;
                    q.expect_sym(";")?;
                    let v = q.combine(lhs, rhs, Op::Sub, &op_tok)?;
                    match (block, v) {
                        (_, Value::Const(_)) => return q.err(&start, "constraint without unknowns"),
                        (Block::Pde, Value::Diff(d)) => {
                            if eq {
                                pde.equations.push(d)
                            } else {
                                pde.inequations.push(d)
                            }
                        }
                        (Block::Fda, Value::Grid(g)) => {
                            let c = grid::clear(&g, cfg.independents.len());
                            if eq {
                                fda.raw_equations.push(g);
                                fda.equations.push(c);
                            } else {
                                fda.inequations.push(c);
                            }
                        }
                        _ => unreachable!("block kinds are enforced while parsing"),
                    }
                }
                q.next();
                pos = q.pos;
                config = cfg;
                continue;
            }
            _ => return p.err(&t, format!("unknown declaration '{word}'")),
        }
        pos = p.pos;
    }
    finish_config(&mut config, ranking_set, &fda_ranking, &janet, &time_name)?;
    Ok(Session { config, pde, fda })
}

fn finish_config(
    config: &mut SessionConfig,
    ranking_set: bool,
    fda_ranking: &Option<Ranking>,
    janet: &Option<Vec<usize>>,
    time_name: &Option<(String, Token)>,
) -> Result<(), ParseError> {
    let n = config.independents.len();
    let m = config.dependents.len();
    if !ranking_set || config.ranking.symbols() != n || config.ranking.deps() != m {
        config.ranking = Ranking::declared(RankingScheme::TopLex, n, m);
    }
    config.fda_ranking = fda_ranking.clone().unwrap_or_else(|| config.ranking.clone());
    config.janet_order = janet.clone().unwrap_or_else(|| config.ranking.symbol_order.clone());
    if let Some((name, t)) = time_name {
        match config.independents.iter().position(|s| s == name) {
            Some(i) => config.time = Some(i),
            None => {
                return Err(ParseError { line: t.line, col: t.col, msg: format!("time variable '{name}' is not an independent") })
            }
        }
    }
    Ok(())
}

/// A parsed standalone expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expression {
    Differential(OperatorPolynomial),
    Difference(GridExpr),
}

pub fn parse_expression(text: &str, config: &SessionConfig, block: Block) -> Result<Expression, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, config };
    let v = p.expr(block)?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return p.err(&t, "trailing input");
    }
    Ok(match (block, v) {
        (Block::Pde, Value::Const(c)) => Expression::Differential(OperatorPolynomial::constant(c)),
        (Block::Fda, Value::Const(c)) => Expression::Difference(GridExpr::constant(c)),
        (_, Value::Diff(d)) => Expression::Differential(d),
        (_, Value::Grid(g)) => Expression::Difference(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FORWARD_BACKWARD: &str = "
        independents x, y;
        dependents u;
        parameters ;
        ranking toplex symbols x > y dependents u;
        pde { D(u,x) - u^2 = 0; D(u,y) + u^2 = 0; }
        fda { Dplus(u,x) - u^2 = 0; Dminus(u,y) + u^2 = 0; }
    ";

    fn s(j: &[u32]) -> OperatorPolynomial {
        OperatorPolynomial::var(OperatorVariable::shift(0, j))
    }

    fn d(j: &[u32]) -> OperatorPolynomial {
        OperatorPolynomial::var(OperatorVariable::derivative(0, j))
    }

    #[test]
    fn parses_sessions() {
        let s0 = parse(FORWARD_BACKWARD).unwrap();
        assert_eq!(s0.pde.equations, vec![&d(&[1, 0]) - &d(&[0, 0]).pow(2), &d(&[0, 1]) + &d(&[0, 0]).pow(2)]);
        let h = OperatorPolynomial::constant(Coefficient::h());
        let e1 = &(&s(&[1, 0]) - &s(&[0, 0])) - &(&h * &s(&[0, 0]).pow(2));
        let e2 = &(&(&h * &s(&[0, 1]).pow(2)) + &s(&[0, 1])) - &s(&[0, 0]);
        assert_eq!(s0.fda.equation_polys(), vec![e1.clone(), e2]);
        let cfg = &s0.config;
        match parse_expression("u[1,0] - u[0,0] - h*u[0,0]^2", cfg, Block::Fda).unwrap() {
            Expression::Difference(g) => assert_eq!(grid::to_shift_polynomial(&g).unwrap(), e1),
            _ => panic!("kind"),
        }
    }

    #[test]
    fn reports_errors_with_positions() {
        let e = parse("independents x;\ndependents u;\npde { D(u,x) + w = 0; }").unwrap_err();
        assert_eq!((e.line, e.col), (3, 16));
        let e = parse("independents x;\ndependents u;\npde { D(u,x) + u[1] = 0; }").unwrap_err();
        assert!(e.msg.contains("grid values"));
        let e = parse("independents x;\ndependents u;\nparameters a;\nfda { Dplus(a,x) = 0; }").unwrap_err();
        assert!(e.msg.contains("without grid values"));
        let e = parse("independents x;\ndependents u;\nparameters h;").unwrap_err();
        assert!(e.msg.contains("reserved"));
        let e = parse("independents x;\ndependents u;\nfda { u[1] - D(u,x) = 0; }").unwrap_err();
        assert!(e.msg.contains("D applied") || e.msg.contains("mixes"));
    }
}
