//! Rectangular spacetime grids.

/// Spacetime direction; 0 is time, 1 is space throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Time,
    Space,
}

impl Axis {
    pub fn index(self) -> usize {
        match self {
            Axis::Time => 0,
            Axis::Space => 1,
        }
    }
}

/// Uniform rectangular mesh of `n_t` x `n_x` cells with node (a, b) at
/// `(t0 + a*dt, x0 + b*dx)`, `0 <= a <= n_t`, `0 <= b <= n_x`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub t0: f64,
    pub x0: f64,
    pub dt: f64,
    pub dx: f64,
    pub n_t: usize,
    pub n_x: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridError {
    NonPositiveStep,
    EmptyGrid,
    NonFinite,
}

impl core::fmt::Display for GridError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GridError::NonPositiveStep => write!(f, "dt and dx must be positive"),
            GridError::EmptyGrid => write!(f, "n_t and n_x must be at least 1"),
            GridError::NonFinite => write!(f, "grid origin or steps are not finite"),
        }
    }
}

impl GridSpec {
    pub fn new(
        t0: f64,
        x0: f64,
        dt: f64,
        dx: f64,
        n_t: usize,
        n_x: usize,
    ) -> Result<Self, GridError> {
        if !(t0.is_finite() && x0.is_finite() && dt.is_finite() && dx.is_finite()) {
            return Err(GridError::NonFinite);
        }
        if dt <= 0.0 || dx <= 0.0 {
            return Err(GridError::NonPositiveStep);
        }
        if n_t == 0 || n_x == 0 {
            return Err(GridError::EmptyGrid);
        }
        Ok(GridSpec {
            t0,
            x0,
            dt,
            dx,
            n_t,
            n_x,
        })
    }

    pub fn node_t(&self, a: usize) -> f64 {
        self.t0 + a as f64 * self.dt
    }

    pub fn node_x(&self, b: usize) -> f64 {
        self.x0 + b as f64 * self.dx
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(
            GridSpec::new(0.0, 0.0, 0.0, 0.1, 1, 1),
            Err(GridError::NonPositiveStep)
        );
        assert_eq!(
            GridSpec::new(0.0, 0.0, 0.1, 0.1, 0, 1),
            Err(GridError::EmptyGrid)
        );
        assert_eq!(
            GridSpec::new(f64::NAN, 0.0, 0.1, 0.1, 1, 1),
            Err(GridError::NonFinite)
        );
    }

    #[test]
    fn node_coordinates() {
        let g = GridSpec::new(1.0, -2.0, 0.5, 0.25, 4, 8).unwrap();
        assert_eq!(g.node_t(0), 1.0);
        assert_eq!(g.node_t(4), 3.0);
        assert_eq!(g.node_x(8), 0.0);
    }
}
