//! Expression language for scalar Hamiltonians `H(phi, p0, p1)` with exact
//! symbolic differentiation.
//!
//! Grammar: `+ - * /`, unary minus, integer powers `^`, the functions
//! `sin cos exp cosh sinh sqrt arctan`, numeric literals, and the three
//! variables. Precedence is `^` over unary minus over `* /` over `+ -`,
//! left-associative within a level.

mod calculus;
mod compile;
mod parse;

pub use calculus::{differentiate, simplify};
pub use compile::{compile, CompiledHamiltonian};
pub use parse::{parse, parse_named, ParseError};

use alloc::boxed::Box;

use crate::hamiltonian::{EvalError, EvalErrorKind};
use crate::math;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Phi,
    P0,
    P1,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Phi => "phi",
            Var::P0 => "p0",
            Var::P1 => "p1",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Cosh,
    Sinh,
    Sqrt,
    Arctan,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Cosh => "cosh",
            Func::Sinh => "sinh",
            Func::Sqrt => "sqrt",
            Func::Arctan => "arctan",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "exp" => Func::Exp,
            "cosh" => Func::Cosh,
            "sinh" => Func::Sinh,
            "sqrt" => Func::Sqrt,
            "arctan" => Func::Arctan,
            _ => return None,
        })
    }
}

/// Abstract syntax tree; `Pow` exponents are integer literals only.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn num(v: f64) -> Expr {
        Expr::Num(v)
    }

    pub fn var(v: Var) -> Expr {
        Expr::Var(v)
    }

    /// Evaluates at `(phi, p0, p1)`; domain violations carry the point.
    pub fn eval(&self, phi: f64, p0: f64, p1: f64) -> Result<f64, EvalError> {
        let fail = |kind| EvalError {
            kind,
            at: [phi, p0, p1],
        };
        Ok(match self {
            Expr::Num(v) => *v,
            Expr::Var(Var::Phi) => phi,
            Expr::Var(Var::P0) => p0,
            Expr::Var(Var::P1) => p1,
            Expr::Neg(a) => -a.eval(phi, p0, p1)?,
            Expr::Add(a, b) => a.eval(phi, p0, p1)? + b.eval(phi, p0, p1)?,
            Expr::Sub(a, b) => a.eval(phi, p0, p1)? - b.eval(phi, p0, p1)?,
            Expr::Mul(a, b) => a.eval(phi, p0, p1)? * b.eval(phi, p0, p1)?,
            Expr::Div(a, b) => {
                let d = b.eval(phi, p0, p1)?;
                if d == 0.0 {
                    return Err(fail(EvalErrorKind::DivisionByZero));
                }
                a.eval(phi, p0, p1)? / d
            }
            Expr::Pow(a, n) => {
                let base = a.eval(phi, p0, p1)?;
                if base == 0.0 && *n < 0 {
                    return Err(fail(EvalErrorKind::DivisionByZero));
                }
                math::powi(base, *n)
            }
            Expr::Call(f, a) => {
                let v = a.eval(phi, p0, p1)?;
                match f {
                    Func::Sin => math::sin(v),
                    Func::Cos => math::cos(v),
                    Func::Exp => math::exp(v),
                    Func::Cosh => math::cosh(v),
                    Func::Sinh => math::sinh(v),
                    Func::Sqrt => {
                        if v < 0.0 {
                            return Err(fail(EvalErrorKind::SqrtOfNegative));
                        }
                        math::sqrt(v)
                    }
                    Func::Arctan => math::atan(v),
                }
            }
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Num(v) if *v < 0.0 => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn fmt_prec(&self, f: &mut core::fmt::Formatter<'_>, min: u8) -> core::fmt::Result {
        let p = self.precedence();
        if p < min {
            write!(f, "(")?;
        }
        match self {
            Expr::Num(v) => write!(f, "{v}")?,
            Expr::Var(v) => write!(f, "{}", v.name())?,
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.fmt_prec(f, 3)?;
            }
            Expr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "/")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Pow(a, n) => {
                a.fmt_prec(f, 5)?;
                if *n < 0 {
                    write!(f, "^({n})")?;
                } else {
                    write!(f, "^{n}")?;
                }
            }
            Expr::Call(func, a) => {
                write!(f, "{}(", func.name())?;
                a.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
        }
        if p < min {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The canonical serializer; `parse` of the output evaluates equal.
impl core::fmt::Display for Expr {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[cfg(test)]
mod tests;
