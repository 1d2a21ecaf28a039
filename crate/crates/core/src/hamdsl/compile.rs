//! Compilation of an expression into an evaluable Hamiltonian model.

use super::{differentiate, Expr, Var};
use crate::hamiltonian::{EvalError, Hamiltonian};

const VARS: [Var; 3] = [Var::Phi, Var::P0, Var::P1];

/// A Hamiltonian backed by symbolic expressions for the value, the three
/// first partials, and the symmetrized second partials.
#[derive(Clone, Debug)]
pub struct CompiledHamiltonian {
    value: Expr,
    grad: [Expr; 3],
    hess: [[Expr; 3]; 3],
}

pub fn compile(e: &Expr) -> CompiledHamiltonian {
    let grad = VARS.map(|v| differentiate(e, v));
    // Six distinct second partials, mirrored across the diagonal.
    let mut hess: [[Expr; 3]; 3] = core::array::from_fn(|_| VARS.map(|_| Expr::Num(0.0)));
    for r in 0..3 {
        for c in r..3 {
            let second = differentiate(&grad[r], VARS[c]);
            hess[r][c] = second.clone();
            hess[c][r] = second;
        }
    }
    CompiledHamiltonian {
        value: e.clone(),
        grad,
        hess,
    }
}

impl CompiledHamiltonian {
    pub fn value_expr(&self) -> &Expr {
        &self.value
    }

    pub fn gradient_expr(&self, var: Var) -> &Expr {
        &self.grad[var as usize]
    }
}

impl Hamiltonian for CompiledHamiltonian {
    fn value(&self, phi: f64, p0: f64, p1: f64) -> Result<f64, EvalError> {
        self.value.eval(phi, p0, p1)
    }

    fn gradient(&self, phi: f64, p0: f64, p1: f64) -> Result<[f64; 3], EvalError> {
        Ok([
            self.grad[0].eval(phi, p0, p1)?,
            self.grad[1].eval(phi, p0, p1)?,
            self.grad[2].eval(phi, p0, p1)?,
        ])
    }

    fn hessian(&self, phi: f64, p0: f64, p1: f64) -> Result<[[f64; 3]; 3], EvalError> {
        let mut out = [[0.0; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                out[r][c] = self.hess[r][c].eval(phi, p0, p1)?;
            }
        }
        Ok(out)
    }
}
