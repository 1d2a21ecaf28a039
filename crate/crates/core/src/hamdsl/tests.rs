use super::*;
use crate::hamiltonian::{fd_gradient, fd_hessian, EvalErrorKind, Hamiltonian};
use alloc::format;
use alloc::string::ToString;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub(crate) fn sine_gordon() -> Expr {
    parse("0.5*p0^2 - 0.5*p1^2 - cos(phi)").unwrap()
}

#[test]
fn parses_sine_gordon() {
    let e = sine_gordon();
    // Spot-check the tree by evaluation at a few points.
    let f = |phi: f64, p0: f64, p1: f64| {
        0.5 * p0 * p0 - 0.5 * p1 * p1 - phi.cos()
    };
    for (phi, p0, p1) in [(0.0, 0.0, 0.0), (1.0, 2.0, -3.0), (-0.7, 0.3, 0.9)] {
        assert!((e.eval(phi, p0, p1).unwrap() - f(phi, p0, p1)).abs() < 1e-15);
    }
}

#[test]
fn unbalanced_paren_reports_offset() {
    match parse("cos(phi") {
        Err(ParseError::Syntax { offset, expected }) => {
            assert_eq!(offset, 7);
            assert!(expected.contains(")"), "expected-token message: {expected}");
        }
        other => panic!("wanted syntax error, got {other:?}"),
    }
}

#[test]
fn unknown_identifier_is_reported() {
    match parse("phi + q0") {
        Err(ParseError::UnknownIdentifier { name, .. }) => assert_eq!(name, "q0"),
        other => panic!("wanted unknown identifier, got {other:?}"),
    }
}

#[test]
fn unary_minus_binds_tighter_than_mul() {
    // -0.5*p1^2 must evaluate as (-0.5) * p1^2.
    let e = parse("-0.5*p1^2").unwrap();
    assert!((e.eval(0.0, 0.0, 3.0).unwrap() - -4.5).abs() < 1e-15);
    // and -x^2 as -(x^2)
    let e = parse("-phi^2").unwrap();
    assert!((e.eval(2.0, 0.0, 0.0).unwrap() - -4.0).abs() < 1e-15);
}

#[test]
fn derivative_folds_to_canonical_forms() {
    let d_cos = differentiate(&parse("-cos(phi)").unwrap(), Var::Phi);
    assert_eq!(d_cos.to_string(), "sin(phi)");

    let d_p0 = differentiate(&parse("0.5*p0^2").unwrap(), Var::P0);
    assert_eq!(d_p0.to_string(), "p0");

    let d_p1 = differentiate(&parse("-0.5*p1^2").unwrap(), Var::P1);
    assert_eq!(d_p1.to_string(), "-p1");
}

#[test]
fn compile_sine_gordon_point_values() {
    let model = compile(&sine_gordon());
    let v = model.value(0.0, 1.0, 2.0).unwrap();
    assert!((v - -2.5).abs() < 1e-15);
    let g = model.gradient(0.0, 1.0, 2.0).unwrap();
    assert!((g[0] - 0.0).abs() < 1e-15);
    assert!((g[1] - 1.0).abs() < 1e-15);
    assert!((g[2] - -2.0).abs() < 1e-15);
}

#[test]
fn bilinear_hessian() {
    let model = compile(&parse("p0*p1").unwrap());
    let h = model.hessian(0.0, 0.0, 0.0).unwrap();
    for r in 0..3 {
        for c in 0..3 {
            let want = if (r, c) == (1, 2) || (r, c) == (2, 1) { 1.0 } else { 0.0 };
            assert_eq!(h[r][c], want, "entry ({r}, {c})");
        }
    }
}

#[test]
fn sqrt_domain_violation() {
    let model = compile(&parse("sqrt(phi)").unwrap());
    let err = model.value(-1.0, 0.0, 0.0).unwrap_err();
    assert_eq!(err.kind, EvalErrorKind::SqrtOfNegative);
    assert_eq!(err.at[0], -1.0);
}

#[test]
fn division_by_zero_carries_point() {
    let e = parse("1/p0").unwrap();
    let err = e.eval(0.0, 0.0, 0.0).unwrap_err();
    assert_eq!(err.kind, EvalErrorKind::DivisionByZero);
}

/// A pool of expressions exercising every operator and function, all smooth
/// on the sampling cube [-3, 3]^3 once shifted away from domain edges.
fn sample_pool() -> alloc::vec::Vec<Expr> {
    [
        "0.5*p0^2 - 0.5*p1^2 - cos(phi)",
        "sin(phi)*cos(p0) + exp(0.1*p1)",
        "cosh(0.3*phi) + sinh(0.2*p0) - p1^3",
        "sqrt(phi^2 + p0^2 + 11)",
        "arctan(phi*p0) + p1/(p0^2 + 2)",
        "(phi + p0)^4/(10 + p1^2) - exp(-(0.2*phi)^2)",
    ]
    .iter()
    .map(|s| parse(s).unwrap())
    .collect()
}

#[test]
fn gradient_matches_central_differences() {
    let mut rng = StdRng::seed_from_u64(11);
    for e in sample_pool() {
        let model = compile(&e);
        for _ in 0..100 {
            let phi = rng.gen_range(-3.0..3.0);
            let p0 = rng.gen_range(-3.0..3.0);
            let p1 = rng.gen_range(-3.0..3.0);
            let g = model.gradient(phi, p0, p1).unwrap();
            let fd = fd_gradient(&model, phi, p0, p1, 1e-5).unwrap();
            for k in 0..3 {
                let scale = 1.0f64.max(g[k].abs());
                assert!(
                    (g[k] - fd[k]).abs() <= 1e-6 * scale,
                    "{e}: d{k} symbolic {} vs fd {}",
                    g[k],
                    fd[k]
                );
            }
        }
    }
}

#[test]
fn hessian_matches_central_differences_and_is_symmetric() {
    let mut rng = StdRng::seed_from_u64(13);
    for e in sample_pool() {
        let model = compile(&e);
        for _ in 0..100 {
            let phi = rng.gen_range(-3.0..3.0);
            let p0 = rng.gen_range(-3.0..3.0);
            let p1 = rng.gen_range(-3.0..3.0);
            let h = model.hessian(phi, p0, p1).unwrap();
            let fd = fd_hessian(&model, phi, p0, p1, 1e-5).unwrap();
            for r in 0..3 {
                assert!((h[r][(r + 1) % 3] - h[(r + 1) % 3][r]).abs() <= 1e-14);
                for c in 0..3 {
                    let scale = 1.0f64.max(h[r][c].abs());
                    assert!(
                        (h[r][c] - fd[r][c]).abs() <= 1e-5 * scale,
                        "{e}: hess[{r}][{c}] {} vs fd {}",
                        h[r][c],
                        fd[r][c]
                    );
                }
            }
        }
    }
}

#[test]
fn schwarz_symmetry_of_mixed_partials() {
    let mut rng = StdRng::seed_from_u64(17);
    for e in sample_pool() {
        for (u, v) in [(Var::Phi, Var::P0), (Var::Phi, Var::P1), (Var::P0, Var::P1)] {
            let duv = differentiate(&differentiate(&e, u), v);
            let dvu = differentiate(&differentiate(&e, v), u);
            for _ in 0..100 {
                let phi = rng.gen_range(-3.0..3.0);
                let p0 = rng.gen_range(-3.0..3.0);
                let p1 = rng.gen_range(-3.0..3.0);
                let a = duv.eval(phi, p0, p1).unwrap();
                let b = dvu.eval(phi, p0, p1).unwrap();
                let scale = 1.0f64.max(a.abs()).max(b.abs());
                assert!((a - b).abs() <= 1e-14 * scale, "{e}: {a} vs {b}");
            }
        }
    }
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-4.0f64..4.0).prop_map(Expr::Num),
        Just(Expr::Var(Var::Phi)),
        Just(Expr::Var(Var::P0)),
        Just(Expr::Var(Var::P1)),
    ];
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), 1i32..4).prop_map(|(a, n)| Expr::Pow(Box::new(a), n)),
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            inner.clone().prop_map(|a| Expr::Call(Func::Sin, Box::new(a))),
            inner.clone().prop_map(|a| Expr::Call(Func::Cos, Box::new(a))),
            inner.prop_map(|a| Expr::Call(Func::Arctan, Box::new(a))),
        ]
    })
}

proptest! {
    // parse(print(e)) evaluates equal to e at random points.
    #[test]
    fn print_parse_round_trip(e in arb_expr(), phi in -2.0f64..2.0, p0 in -2.0f64..2.0, p1 in -2.0f64..2.0) {
        let text = format!("{e}");
        let back = parse(&text).unwrap_or_else(|err| panic!("reparse of `{text}`: {err}"));
        let a = e.eval(phi, p0, p1).unwrap();
        let b = back.eval(phi, p0, p1).unwrap();
        let scale = 1.0f64.max(a.abs());
        prop_assert!((a - b).abs() <= 1e-14 * scale, "`{}`: {} vs {}", text, a, b);
    }

    // simplify preserves values.
    #[test]
    fn simplify_preserves_value(e in arb_expr(), phi in -2.0f64..2.0, p0 in -2.0f64..2.0, p1 in -2.0f64..2.0) {
        let s = simplify(&e);
        let a = e.eval(phi, p0, p1).unwrap();
        let b = s.eval(phi, p0, p1).unwrap();
        let scale = 1.0f64.max(a.abs());
        prop_assert!((a - b).abs() <= 1e-12 * scale);
    }
}
