//! Text and JSON rendering of decomposition and consistency results.

use serde_json::{json, Value};
use sconsist_core::difference::{Decomposition, JanetSystem, TraceEvent};
use sconsist_core::limit::LimitResult;
use sconsist_core::render::{self, Names};
use sconsist_core::sconsistency::{ConsistencyReport, SubsystemVerdict, Witness};
use sconsist_core::{OperatorPolynomial, Ranking, RankingScheme};

use crate::parse::SessionConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn poly(p: &OperatorPolynomial, names: &Names, rk: &Ranking) -> String {
    render::polynomial(p, names, Some(rk))
}

fn ranking_json(rk: &Ranking, cfg: &SessionConfig) -> Value {
    json!({
        "scheme": match rk.scheme {
            RankingScheme::TopLex => "toplex",
            RankingScheme::PotLex => "potlex",
        },
        "symbols": rk.symbol_order.iter().map(|&i| cfg.independents[i].clone()).collect::<Vec<_>>(),
        "dependents": rk.dep_order.iter().map(|&i| cfg.dependents[i].clone()).collect::<Vec<_>>(),
    })
}

pub fn config_json(cfg: &SessionConfig, extra: &[(&str, Value)]) -> Value {
    let mut v = json!({
        "independents": cfg.independents,
        "time": cfg.time.map(|i| cfg.independents[i].clone()),
        "dependents": cfg.dependents,
        "parameters": cfg.parameters,
        "ranking": ranking_json(&cfg.ranking, cfg),
        "fda_ranking": ranking_json(&cfg.fda_ranking, cfg),
        "janet_order": cfg.janet_order.iter().map(|&i| cfg.independents[i].clone()).collect::<Vec<_>>(),
        "max_taylor_order": cfg.max_taylor_order,
        "step_limit": cfg.step_limit,
    });
    for (k, x) in extra {
        v[*k] = x.clone();
    }
    v
}

fn multiplicative(s: &JanetSystem, cfg: &SessionConfig) -> Vec<Vec<String>> {
    s.pairs
        .iter()
        .map(|p| {
            s.janet_order
                .iter()
                .filter(|&&i| p.multiplicative[i])
                .map(|&i| cfg.independents[i].clone())
                .collect()
        })
        .collect()
}

pub fn limit_json(l: &LimitResult, cfg: &SessionConfig) -> Value {
    json!({ "d": l.d, "f": poly(&l.f, &cfg.names(), &cfg.ranking) })
}

fn witness_json(w: &Witness, cfg: &SessionConfig) -> Value {
    json!({
        "equation": poly(&w.equation, &cfg.names(), &cfg.fda_ranking),
        "limit": limit_json(&w.limit, cfg),
        "nf": poly(&w.normal_form, &cfg.names(), &cfg.ranking),
    })
}

fn system_json(s: &JanetSystem, cfg: &SessionConfig, verdict: Option<SubsystemVerdict>, witnesses: &[Witness]) -> Value {
    let names = cfg.names();
    json!({
        "equations": s.equations().iter().map(|p| poly(p, &names, &cfg.fda_ranking)).collect::<Vec<_>>(),
        "inequations": s.inequations.iter().map(|p| poly(p, &names, &cfg.fda_ranking)).collect::<Vec<_>>(),
        "multiplicative": multiplicative(s, cfg),
        "passive": s.passive.unwrap_or(false),
        "verdict": verdict.map(|v| match v {
            SubsystemVerdict::Strong => "s",
            SubsystemVerdict::Weak => "w",
        }),
        "witnesses": witnesses.iter().map(|w| witness_json(w, cfg)).collect::<Vec<_>>(),
    })
}

pub fn check_json(r: &ConsistencyReport, cfg: &SessionConfig, extra: &[(&str, Value)]) -> Value {
    let mut ex: Vec<(&str, Value)> = extra.to_vec();
    ex.push(("membership_oracle", json!(r.oracle)));
    ex.push(("trusted_simple", json!(r.trusted)));
    json!({
        "command": "check",
        "config": config_json(cfg, &ex),
        "systems": r.subsystems.iter().map(|s| system_json(&s.system, cfg, Some(s.verdict), &s.witnesses)).collect::<Vec<_>>(),
        "dropped": r.dropped.len(),
        "overall": r.overall,
    })
}

pub fn decompose_json(d: &Decomposition, cfg: &SessionConfig, extra: &[(&str, Value)]) -> Value {
    json!({
        "command": "decompose",
        "config": config_json(cfg, extra),
        "systems": d.systems.iter().map(|s| system_json(s, cfg, None, &[])).collect::<Vec<_>>(),
        "dropped": 0,
        "discarded": d.discarded,
        "overall": Value::Null,
    })
}

fn system_text(out: &mut String, i: usize, s: &JanetSystem, cfg: &SessionConfig) {
    let names = cfg.names();
    out.push_str(&format!("system {}{}\n", i + 1, if s.passive == Some(true) { " (passive)" } else { "" }));
    let mult = multiplicative(s, cfg);
    for (p, m) in s.equations().iter().zip(mult) {
        out.push_str(&format!("  {} = 0    [{}]\n", poly(p, &names, &cfg.fda_ranking), m.join(", ")));
    }
    for g in &s.inequations {
        out.push_str(&format!("  {} != 0\n", poly(g, &names, &cfg.fda_ranking)));
    }
}

pub fn check_text(r: &ConsistencyReport, cfg: &SessionConfig) -> String {
    let names = cfg.names();
    let mut out = String::new();
    if r.trusted {
        out.push_str("warning: differential system assumed simple\n");
    }
    for (i, s) in r.subsystems.iter().enumerate() {
        system_text(&mut out, i, &s.system, cfg);
        match s.verdict {
            SubsystemVerdict::Strong => out.push_str("  verdict: s-consistent\n"),
            SubsystemVerdict::Weak => out.push_str("  verdict: w-consistent only\n"),
        }
        for w in &s.witnesses {
            out.push_str(&format!(
                "  witness {} -> h^{} * ({}), normal form {}\n",
                poly(&w.equation, &names, &cfg.fda_ranking),
                w.limit.d,
                poly(&w.limit.f, &names, &cfg.ranking),
                poly(&w.normal_form, &names, &cfg.ranking)
            ));
        }
    }
    if !r.dropped.is_empty() {
        out.push_str(&format!("dropped {} system(s) by the inequation filter\n", r.dropped.len()));
    }
    out.push_str(&format!("overall: {}\n", if r.overall { "s-consistent" } else { "not s-consistent" }));
    out
}

pub fn decompose_text(d: &Decomposition, cfg: &SessionConfig) -> String {
    let mut out = String::new();
    for (i, s) in d.systems.iter().enumerate() {
        system_text(&mut out, i, s, cfg);
    }
    out.push_str(&format!("{} system(s), {} inconsistent branch(es) discarded\n", d.systems.len(), d.discarded));
    out
}

pub fn trace_lines(trace: &[TraceEvent], cfg: &SessionConfig) -> String {
    let names = cfg.names();
    let mut out = String::new();
    for e in trace {
        let v = json!({
            "branch": e.branch,
            "parent": e.parent,
            "event": e.kind.name(),
            "polynomials": e.polynomials.iter().map(|p| poly(p, &names, &cfg.fda_ranking)).collect::<Vec<_>>(),
        });
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}
