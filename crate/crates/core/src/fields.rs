//! Field states on the grid, per-cell boundary data, and the wedge two-forms.

use alloc::vec;
use alloc::vec::Vec;

use crate::grid::{Axis, GridSpec};
use crate::math;

/// Node-indexed `(phi, pi0, pi1)` arrays over the full grid, one value per
/// node (a, b), row-major in `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldState {
    pub grid: GridSpec,
    phi: Vec<f64>,
    p0: Vec<f64>,
    p1: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldError {
    /// Cell index outside `0..n_t` x `0..n_x`.
    OutOfRange { a: usize, b: usize },
    /// Plain node arrays carry one value per face; multi-stage data needs
    /// dedicated quadrature storage (see the marching trajectory types).
    UnsupportedStageCount { s: usize, sigma: usize },
}

impl core::fmt::Display for FieldError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FieldError::OutOfRange { a, b } => write!(f, "cell ({a}, {b}) out of range"),
            FieldError::UnsupportedStageCount { s, sigma } => write!(
                f,
                "node arrays support s = sigma = 1 only (requested s = {s}, sigma = {sigma})"
            ),
        }
    }
}

impl FieldState {
    pub fn zeros(grid: GridSpec) -> Self {
        let n = (grid.n_t + 1) * (grid.n_x + 1);
        FieldState {
            grid,
            phi: vec![0.0; n],
            p0: vec![0.0; n],
            p1: vec![0.0; n],
        }
    }

    /// Fills all three arrays from node-wise closures of (t, x).
    pub fn from_fn(
        grid: GridSpec,
        mut f: impl FnMut(f64, f64) -> (f64, f64, f64),
    ) -> Self {
        let mut state = FieldState::zeros(grid);
        for a in 0..=grid.n_t {
            for b in 0..=grid.n_x {
                let (phi, p0, p1) = f(grid.node_t(a), grid.node_x(b));
                state.set(a, b, phi, p0, p1);
            }
        }
        state
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        debug_assert!(a <= self.grid.n_t && b <= self.grid.n_x);
        a * (self.grid.n_x + 1) + b
    }

    pub fn phi(&self, a: usize, b: usize) -> f64 {
        self.phi[self.idx(a, b)]
    }

    pub fn p0(&self, a: usize, b: usize) -> f64 {
        self.p0[self.idx(a, b)]
    }

    pub fn p1(&self, a: usize, b: usize) -> f64 {
        self.p1[self.idx(a, b)]
    }

    pub fn set(&mut self, a: usize, b: usize, phi: f64, p0: f64, p1: f64) {
        let i = self.idx(a, b);
        self.phi[i] = phi;
        self.p0[i] = p0;
        self.p1[i] = p1;
    }

    /// Validity predicate: every entry finite. Non-finite states are reported
    /// as a diverged outcome by the marching drivers, never silently used.
    pub fn all_finite(&self) -> bool {
        self.phi.iter().all(|v| v.is_finite())
            && self.p0.iter().all(|v| v.is_finite())
            && self.p1.iter().all(|v| v.is_finite())
    }
}

/// A pointwise variation `(d_phi, d_pi0, d_pi1)`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Tangent {
    pub d_phi: f64,
    pub d_p0: f64,
    pub d_p1: f64,
}

impl Tangent {
    pub fn new(d_phi: f64, d_p0: f64, d_p1: f64) -> Self {
        Tangent { d_phi, d_p0, d_p1 }
    }
}

/// Evaluation of the two-form `omega^mu = dphi ^ dpi^mu` on a pair of
/// tangents at one point.
pub fn wedge_omega(mu: Axis, u: &Tangent, v: &Tangent) -> f64 {
    match mu {
        Axis::Time => u.d_phi * v.d_p0 - v.d_phi * u.d_p0,
        Axis::Space => u.d_phi * v.d_p1 - v.d_phi * u.d_p1,
    }
}

/// Variations shadowing a [`FieldState`], same indexing.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentField {
    pub n_t: usize,
    pub n_x: usize,
    d_phi: Vec<f64>,
    d_p0: Vec<f64>,
    d_p1: Vec<f64>,
}

impl TangentField {
    pub fn zeros(n_t: usize, n_x: usize) -> Self {
        let n = (n_t + 1) * (n_x + 1);
        TangentField {
            n_t,
            n_x,
            d_phi: vec![0.0; n],
            d_p0: vec![0.0; n],
            d_p1: vec![0.0; n],
        }
    }

    pub fn matches(&self, state: &FieldState) -> bool {
        self.n_t == state.grid.n_t && self.n_x == state.grid.n_x
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        a * (self.n_x + 1) + b
    }

    pub fn get(&self, a: usize, b: usize) -> Tangent {
        let i = self.idx(a, b);
        Tangent::new(self.d_phi[i], self.d_p0[i], self.d_p1[i])
    }

    pub fn set(&mut self, a: usize, b: usize, t: Tangent) {
        let i = self.idx(a, b);
        self.d_phi[i] = t.d_phi;
        self.d_p0[i] = t.d_p0;
        self.d_p1[i] = t.d_p1;
    }
}

/// Boundary values of one spacetime cell, laid out per face.
///
/// `*_time` arrays hold the `s` temporal-quadrature values on the constant-x
/// faces (A at the backward-x face, B at the forward-x face) and pair with
/// the normal momentum `pi1`; `*_space` arrays hold the `sigma`
/// spatial-quadrature values on the constant-t faces and pair with `pi0`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoxData {
    pub phi_a_time: Vec<f64>,
    pub phi_a_space: Vec<f64>,
    pub pi0_a: Vec<f64>,
    pub pi1_a: Vec<f64>,
    pub phi_b_time: Vec<f64>,
    pub phi_b_space: Vec<f64>,
    pub pi0_b: Vec<f64>,
    pub pi1_b: Vec<f64>,
}

impl BoxData {
    pub fn zeros(s: usize, sigma: usize) -> Self {
        BoxData {
            phi_a_time: vec![0.0; s],
            phi_a_space: vec![0.0; sigma],
            pi0_a: vec![0.0; sigma],
            pi1_a: vec![0.0; s],
            phi_b_time: vec![0.0; s],
            phi_b_space: vec![0.0; sigma],
            pi0_b: vec![0.0; sigma],
            pi1_b: vec![0.0; s],
        }
    }

    /// (s, sigma) implied by the array lengths.
    pub fn stage_counts(&self) -> (usize, usize) {
        (self.phi_a_time.len(), self.phi_a_space.len())
    }

    pub fn shape_consistent(&self) -> bool {
        let (s, sigma) = self.stage_counts();
        self.pi1_a.len() == s
            && self.phi_b_time.len() == s
            && self.pi1_b.len() == s
            && self.pi0_a.len() == sigma
            && self.phi_b_space.len() == sigma
            && self.pi0_b.len() == sigma
    }
}

/// Stage unknowns of one cell, `s x sigma` row-major in the temporal index.
///
/// `phi`, `p0`, `p1` are the field and momenta stages; `v`, `w` approximate
/// `d_t phi`, `d_x phi` and `x`, `y` approximate `d_t p0`, `d_x p1`.
#[derive(Clone, Debug, PartialEq)]
pub struct InternalStages {
    pub s: usize,
    pub sigma: usize,
    pub phi: Vec<f64>,
    pub p0: Vec<f64>,
    pub p1: Vec<f64>,
    pub v: Vec<f64>,
    pub w: Vec<f64>,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

impl InternalStages {
    pub fn zeros(s: usize, sigma: usize) -> Self {
        let n = s * sigma;
        InternalStages {
            s,
            sigma,
            phi: vec![0.0; n],
            p0: vec![0.0; n],
            p1: vec![0.0; n],
            v: vec![0.0; n],
            w: vec![0.0; n],
            x: vec![0.0; n],
            y: vec![0.0; n],
        }
    }

    pub fn at(&self, i: usize, alpha: usize) -> usize {
        debug_assert!(i < self.s && alpha < self.sigma);
        i * self.sigma + alpha
    }
}

/// Gathers the boundary arrays of cell (a, b) from plain node storage.
///
/// One value per face, read at the face's backward-end node: both A faces at
/// node (a, b), the B time face (forward x) at (a, b+1), the B space face
/// (forward t) at (a+1, b).
pub fn extract_box(
    state: &FieldState,
    a: usize,
    b: usize,
    s: usize,
    sigma: usize,
) -> Result<BoxData, FieldError> {
    if s != 1 || sigma != 1 {
        return Err(FieldError::UnsupportedStageCount { s, sigma });
    }
    if a >= state.grid.n_t || b >= state.grid.n_x {
        return Err(FieldError::OutOfRange { a, b });
    }
    Ok(BoxData {
        phi_a_time: vec![state.phi(a, b)],
        phi_a_space: vec![state.phi(a, b)],
        pi0_a: vec![state.p0(a, b)],
        pi1_a: vec![state.p1(a, b)],
        phi_b_time: vec![state.phi(a, b + 1)],
        phi_b_space: vec![state.phi(a + 1, b)],
        pi0_b: vec![state.p0(a + 1, b)],
        pi1_b: vec![state.p1(a, b + 1)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn grid2x2() -> GridSpec {
        GridSpec::new(0.0, 0.0, 1.0, 1.0, 2, 2).unwrap()
    }

    #[test]
    fn wedge_on_equal_tangents_vanishes() {
        let u = Tangent::new(1.0, 2.0, 3.0);
        assert_eq!(wedge_omega(Axis::Time, &u, &u), 0.0);
        assert_eq!(wedge_omega(Axis::Space, &u, &u), 0.0);
    }

    #[test]
    fn wedge_canonical_pairing() {
        let u = Tangent::new(1.0, 0.0, 0.0);
        let v = Tangent::new(0.0, 1.0, 0.0);
        assert_eq!(wedge_omega(Axis::Time, &u, &v), 1.0);
        assert_eq!(wedge_omega(Axis::Time, &v, &u), -1.0);
    }

    #[test]
    fn extract_box_constant_state() {
        let state = FieldState::from_fn(grid2x2(), |_, _| (4.0, 5.0, 6.0));
        let bx = extract_box(&state, 1, 1, 1, 1).unwrap();
        assert_eq!(bx.phi_a_time, vec![4.0]);
        assert_eq!(bx.phi_b_space, vec![4.0]);
        assert_eq!(bx.pi0_a, vec![5.0]);
        assert_eq!(bx.pi0_b, vec![5.0]);
        assert_eq!(bx.pi1_a, vec![6.0]);
        assert_eq!(bx.pi1_b, vec![6.0]);
    }

    #[test]
    fn extract_box_zero_state() {
        let state = FieldState::zeros(grid2x2());
        let bx = extract_box(&state, 0, 1, 1, 1).unwrap();
        assert!(bx.shape_consistent());
        assert!(bx.phi_a_time[0] == 0.0 && bx.pi0_b[0] == 0.0 && bx.pi1_b[0] == 0.0);
    }

    #[test]
    fn extract_box_node_convention() {
        // phi_{a,b} = a + 10 b on a 2x2-cell grid; cell (0,0).
        let state = FieldState::from_fn(grid2x2(), |t, x| (t + 10.0 * x, 0.0, 0.0));
        let bx = extract_box(&state, 0, 0, 1, 1).unwrap();
        assert_eq!(bx.phi_a_time, vec![0.0]);
        assert_eq!(bx.phi_a_space, vec![0.0]);
        assert_eq!(bx.phi_b_time, vec![10.0]);
        assert_eq!(bx.phi_b_space, vec![1.0]);
    }

    #[test]
    fn extract_box_rejects_bad_input() {
        let state = FieldState::zeros(grid2x2());
        assert_eq!(
            extract_box(&state, 2, 0, 1, 1),
            Err(FieldError::OutOfRange { a: 2, b: 0 })
        );
        assert_eq!(
            extract_box(&state, 0, 0, 2, 1),
            Err(FieldError::UnsupportedStageCount { s: 2, sigma: 1 })
        );
    }

    #[test]
    fn non_finite_detected() {
        let mut state = FieldState::zeros(grid2x2());
        assert!(state.all_finite());
        state.set(1, 1, f64::INFINITY, 0.0, 0.0);
        assert!(!state.all_finite());
    }

    proptest! {
        #[test]
        fn wedge_is_bilinear_and_antisymmetric(
            a in -3.0f64..3.0, bb in -3.0f64..3.0,
            u1 in -2.0f64..2.0, u2 in -2.0f64..2.0, u3 in -2.0f64..2.0,
            w1 in -2.0f64..2.0, w2 in -2.0f64..2.0, w3 in -2.0f64..2.0,
            v1 in -2.0f64..2.0, v2 in -2.0f64..2.0, v3 in -2.0f64..2.0,
        ) {
            let u = Tangent::new(u1, u2, u3);
            let up = Tangent::new(w1, w2, w3);
            let v = Tangent::new(v1, v2, v3);
            for mu in [Axis::Time, Axis::Space] {
                let combo = Tangent::new(
                    a * u.d_phi + bb * up.d_phi,
                    a * u.d_p0 + bb * up.d_p0,
                    a * u.d_p1 + bb * up.d_p1,
                );
                let lhs = wedge_omega(mu, &combo, &v);
                let rhs = a * wedge_omega(mu, &u, &v) + bb * wedge_omega(mu, &up, &v);
                let scale = 1.0f64.max(lhs.abs()).max(rhs.abs());
                prop_assert!((lhs - rhs).abs() <= 1e-14 * scale);
                prop_assert_eq!(wedge_omega(mu, &u, &v), -wedge_omega(mu, &v, &u));
            }
        }
    }
}
