use std::path::PathBuf;

use sconsist::parse::{parse, parse_expression, Block, Expression};
use sconsist_core::coeffs::Coefficient;
use sconsist_core::limit::continuous_limit;

fn load(name: &str) -> sconsist::parse::Session {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "sessions", name].iter().collect();
    parse(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn navier_stokes_session_shape() {
    let s = load("navier_stokes_2d.scs");
    assert_eq!(s.config.independents, ["t", "x", "y"]);
    assert_eq!(s.config.time, Some(0));
    assert_eq!(s.config.spatial(), [1, 2]);
    assert_eq!(s.pde.equations.len(), 4);
    assert_eq!(s.fda.equations.len(), 4);
    let cont = &s.fda.equations[0];
    assert_eq!(cont.shift, [0, 1, 1]);
    assert_eq!(cont.factor, &Coefficient::integer(2) * &Coefficient::h());
    let momentum = &s.fda.equations[1];
    assert_eq!(momentum.shift, [0, 1, 1]);
}

#[test]
fn every_fda_equation_limits_to_a_pde_equation() {
    for name in ["forward_forward.scs", "forward_backward.scs", "navier_stokes_2d.scs"] {
        let s = load(name);
        for e in s.fda.equation_polys() {
            let l = continuous_limit(&e, 12).unwrap();
            assert!(
                s.pde.equations.iter().any(|f| l.f.ratio_to(f).is_some_and(|c| c.is_h_free())),
                "{name}: unmatched limit"
            );
        }
    }
}

#[test]
fn expressions_follow_the_block_kind() {
    let s = load("forward_forward.scs");
    assert!(matches!(parse_expression("D(u,x,2)", &s.config, Block::Pde), Ok(Expression::Differential(_))));
    assert!(matches!(parse_expression("Dplus(u,y)*u", &s.config, Block::Fda), Ok(Expression::Difference(_))));
    assert!(parse_expression("D(u,x)", &s.config, Block::Fda).is_err());
    assert!(parse_expression("u[1,0]", &s.config, Block::Pde).is_err());
}
