//! Exact differentiation and identity-element simplification.

use alloc::boxed::Box;

use super::{Expr, Func, Var};
use crate::math;

/// Exact partial derivative with respect to `var`, folded by [`simplify`].
pub fn differentiate(e: &Expr, var: Var) -> Expr {
    simplify(&d(e, var))
}

fn bx(e: Expr) -> Box<Expr> {
    Box::new(e)
}

fn d(e: &Expr, var: Var) -> Expr {
    match e {
        Expr::Num(_) => Expr::Num(0.0),
        Expr::Var(v) => Expr::Num(if *v == var { 1.0 } else { 0.0 }),
        Expr::Neg(a) => Expr::Neg(bx(d(a, var))),
        Expr::Add(a, b) => Expr::Add(bx(d(a, var)), bx(d(b, var))),
        Expr::Sub(a, b) => Expr::Sub(bx(d(a, var)), bx(d(b, var))),
        Expr::Mul(a, b) => Expr::Add(
            bx(Expr::Mul(bx(d(a, var)), b.clone())),
            bx(Expr::Mul(a.clone(), bx(d(b, var)))),
        ),
        // (a/b)' = (a' b - a b') / b^2
        Expr::Div(a, b) => Expr::Div(
            bx(Expr::Sub(
                bx(Expr::Mul(bx(d(a, var)), b.clone())),
                bx(Expr::Mul(a.clone(), bx(d(b, var)))),
            )),
            bx(Expr::Pow(b.clone(), 2)),
        ),
        Expr::Pow(a, n) => {
            if *n == 0 {
                Expr::Num(0.0)
            } else {
                Expr::Mul(
                    bx(Expr::Mul(
                        bx(Expr::Num(*n as f64)),
                        bx(Expr::Pow(a.clone(), n - 1)),
                    )),
                    bx(d(a, var)),
                )
            }
        }
        Expr::Call(f, a) => {
            let da = d(a, var);
            match f {
                Func::Sin => Expr::Mul(bx(Expr::Call(Func::Cos, a.clone())), bx(da)),
                Func::Cos => Expr::Mul(
                    bx(Expr::Neg(bx(Expr::Call(Func::Sin, a.clone())))),
                    bx(da),
                ),
                Func::Exp => Expr::Mul(bx(Expr::Call(Func::Exp, a.clone())), bx(da)),
                Func::Cosh => Expr::Mul(bx(Expr::Call(Func::Sinh, a.clone())), bx(da)),
                Func::Sinh => Expr::Mul(bx(Expr::Call(Func::Cosh, a.clone())), bx(da)),
                Func::Sqrt => Expr::Div(
                    bx(da),
                    bx(Expr::Mul(
                        bx(Expr::Num(2.0)),
                        bx(Expr::Call(Func::Sqrt, a.clone())),
                    )),
                ),
                Func::Arctan => Expr::Div(
                    bx(da),
                    bx(Expr::Add(bx(Expr::Num(1.0)), bx(Expr::Pow(a.clone(), 2)))),
                ),
            }
        }
    }
}

fn num(e: &Expr) -> Option<f64> {
    match e {
        Expr::Num(v) => Some(*v),
        _ => None,
    }
}

/// Bottom-up folding of identity elements: `0*x`, `x*1`, `x+0`, `x^1`, `x^0`,
/// numeric subtrees, and double negation. Structural normalization only;
/// equality of expressions is judged by evaluation, not shape.
pub fn simplify(e: &Expr) -> Expr {
    match e {
        Expr::Num(_) | Expr::Var(_) => e.clone(),
        Expr::Neg(a) => match simplify(a) {
            Expr::Num(v) => Expr::Num(-v),
            Expr::Neg(inner) => *inner,
            sa => Expr::Neg(bx(sa)),
        },
        Expr::Add(a, b) => {
            let (sa, sb) = (simplify(a), simplify(b));
            match (num(&sa), num(&sb)) {
                (Some(x), Some(y)) => Expr::Num(x + y),
                (Some(x), None) if x == 0.0 => sb,
                (None, Some(y)) if y == 0.0 => sa,
                _ => Expr::Add(bx(sa), bx(sb)),
            }
        }
        Expr::Sub(a, b) => {
            let (sa, sb) = (simplify(a), simplify(b));
            match (num(&sa), num(&sb)) {
                (Some(x), Some(y)) => Expr::Num(x - y),
                (None, Some(y)) if y == 0.0 => sa,
                (Some(x), None) if x == 0.0 => simplify(&Expr::Neg(bx(sb))),
                _ => Expr::Sub(bx(sa), bx(sb)),
            }
        }
        Expr::Mul(a, b) => {
            let (sa, sb) = (simplify(a), simplify(b));
            mul_folded(sa, sb)
        }
        Expr::Div(a, b) => {
            let (sa, sb) = (simplify(a), simplify(b));
            match (num(&sa), num(&sb)) {
                (Some(x), Some(y)) if y != 0.0 => Expr::Num(x / y),
                (None, Some(y)) if y == 1.0 => sa,
                _ => Expr::Div(bx(sa), bx(sb)),
            }
        }
        Expr::Pow(a, n) => {
            let sa = simplify(a);
            match n {
                0 => Expr::Num(1.0),
                1 => sa,
                _ => match num(&sa) {
                    Some(v) => Expr::Num(math::powi(v, *n)),
                    None => Expr::Pow(bx(sa), *n),
                },
            }
        }
        Expr::Call(f, a) => Expr::Call(*f, bx(simplify(a))),
    }
}

fn mul_folded(sa: Expr, sb: Expr) -> Expr {
    // Commute a numeric factor to the left before folding.
    let (sa, sb) = if num(&sb).is_some() && num(&sa).is_none() {
        (sb, sa)
    } else {
        (sa, sb)
    };
    if let Some(x) = num(&sa) {
        if x == 0.0 {
            return Expr::Num(0.0);
        }
        if let Some(y) = num(&sb) {
            return Expr::Num(x * y);
        }
        // x * (y * e) -> (x y) * e
        if let Expr::Mul(inner_a, inner_b) = &sb {
            if let Some(y) = num(inner_a) {
                return mul_folded(Expr::Num(x * y), (**inner_b).clone());
            }
        }
        if x == 1.0 {
            return sb;
        }
        if x == -1.0 {
            return simplify(&Expr::Neg(bx(sb)));
        }
    }
    if num(&sb) == Some(0.0) {
        return Expr::Num(0.0);
    }
    Expr::Mul(bx(sa), bx(sb))
}
