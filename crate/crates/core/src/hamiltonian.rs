//! The evaluable Hamiltonian interface `H(phi, p0, p1)`.

/// Domain violation raised while evaluating a Hamiltonian, carrying the
/// offending point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub at: [f64; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalErrorKind {
    SqrtOfNegative,
    DivisionByZero,
}

impl core::fmt::Display for EvalError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let what = match self.kind {
            EvalErrorKind::SqrtOfNegative => "sqrt of negative value",
            EvalErrorKind::DivisionByZero => "division by zero",
        };
        write!(
            f,
            "{what} at (phi, p0, p1) = ({}, {}, {})",
            self.at[0], self.at[1], self.at[2]
        )
    }
}

/// Scalar Hamiltonian with first and second partials in `(phi, p0, p1)`.
///
/// `gradient` returns `[dH/dphi, dH/dp0, dH/dp1]`; `hessian` the symmetric
/// matrix of second partials in the same ordering.
pub trait Hamiltonian {
    fn value(&self, phi: f64, p0: f64, p1: f64) -> Result<f64, EvalError>;
    fn gradient(&self, phi: f64, p0: f64, p1: f64) -> Result<[f64; 3], EvalError>;
    fn hessian(&self, phi: f64, p0: f64, p1: f64) -> Result<[[f64; 3]; 3], EvalError>;
}

/// Central finite difference of `value`, step `h` per coordinate.
pub fn fd_gradient(
    ham: &dyn Hamiltonian,
    phi: f64,
    p0: f64,
    p1: f64,
    h: f64,
) -> Result<[f64; 3], EvalError> {
    let mut g = [0.0; 3];
    let z = [phi, p0, p1];
    for k in 0..3 {
        let mut zp = z;
        let mut zm = z;
        zp[k] += h;
        zm[k] -= h;
        let fp = ham.value(zp[0], zp[1], zp[2])?;
        let fm = ham.value(zm[0], zm[1], zm[2])?;
        g[k] = (fp - fm) / (2.0 * h);
    }
    Ok(g)
}

/// Central finite difference of `gradient`, symmetrized.
pub fn fd_hessian(
    ham: &dyn Hamiltonian,
    phi: f64,
    p0: f64,
    p1: f64,
    h: f64,
) -> Result<[[f64; 3]; 3], EvalError> {
    let z = [phi, p0, p1];
    let mut hess = [[0.0; 3]; 3];
    for k in 0..3 {
        let mut zp = z;
        let mut zm = z;
        zp[k] += h;
        zm[k] -= h;
        let gp = ham.gradient(zp[0], zp[1], zp[2])?;
        let gm = ham.gradient(zm[0], zm[1], zm[2])?;
        for r in 0..3 {
            hess[r][k] = (gp[r] - gm[r]) / (2.0 * h);
        }
    }
    for r in 0..3 {
        for c in r + 1..3 {
            let sym = 0.5 * (hess[r][c] + hess[c][r]);
            hess[r][c] = sym;
            hess[c][r] = sym;
        }
    }
    Ok(hess)
}
