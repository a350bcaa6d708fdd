//! Hydrodynamic state (ρ, S) on a grid and the closed-form potentials.

use crate::error::{Error, Result};
use crate::grid::{trapezoid, Grid1D};

/// Default tolerance on |∫ρ dx - 1| for normalizable states.
pub const DEFAULT_NORM_TOL: f64 = 1e-6;

/// Discretized (ρ, S) pair at one time instant. ρ is the probability density
/// (1/m) and S the dimensionless phase.
#[derive(Debug, Clone, PartialEq)]
pub struct HydroState {
    pub t: f64,
    pub rho: Vec<f64>,
    pub s: Vec<f64>,
    non_normalizable: bool,
}

impl HydroState {
    /// A normalizable state; validates ρ ≥ 0 and ∫ρ dx = 1 within `norm_tol`.
    pub fn new(t: f64, rho: Vec<f64>, s: Vec<f64>, grid: &Grid1D, norm_tol: f64) -> Result<Self> {
        if rho.len() != grid.n {
            return Err(Error::LengthMismatch {
                expected: grid.n,
                got: rho.len(),
            });
        }
        if s.len() != grid.n {
            return Err(Error::LengthMismatch {
                expected: grid.n,
                got: s.len(),
            });
        }
        for (i, &r) in rho.iter().enumerate() {
            if !(r >= 0.0) {
                return Err(Error::NegativeDensity { index: i, value: r });
            }
        }
        let norm = trapezoid(&rho, grid.dx());
        if (norm - 1.0).abs() > norm_tol {
            return Err(Error::NotNormalized {
                norm,
                tol: norm_tol,
            });
        }
        Ok(Self {
            t,
            rho,
            s,
            non_normalizable: false,
        })
    }

    /// A state carrying the non-normalizable flag (the plane wave); particle
    /// observables are refused for it.
    pub fn new_non_normalizable(t: f64, rho: Vec<f64>, s: Vec<f64>) -> Self {
        Self {
            t,
            rho,
            s,
            non_normalizable: true,
        }
    }

    /// Internal constructor for integrator stages; skips validation.
    pub(crate) fn raw(t: f64, rho: Vec<f64>, s: Vec<f64>, non_normalizable: bool) -> Self {
        Self {
            t,
            rho,
            s,
            non_normalizable,
        }
    }

    pub fn is_non_normalizable(&self) -> bool {
        self.non_normalizable
    }

    pub fn len(&self) -> usize {
        self.rho.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_empty()
    }
}

/// Closed-form external potential V(x, t) in joules. Evaluation is pure.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum Potential {
    /// V = 0.
    Zero,
    /// V = k·x².
    StaticHarmonic { strength: f64 },
    /// V = A(t)·x², the time-dependent strength that supports the modified
    /// Gaussian packet. Carries the packet parameters it derives from.
    TimeDependentHarmonic {
        t0: f64,
        m: f64,
        hbar: f64,
        coupling: f64,
    },
    /// V = k·(x - v·t)², a harmonic well comoving at speed v.
    ComovingHarmonic { strength: f64, speed: f64 },
}

impl Potential {
    pub fn evaluate(&self, x: f64, t: f64) -> f64 {
        match *self {
            Potential::Zero => 0.0,
            Potential::StaticHarmonic { strength } => strength * x * x,
            Potential::TimeDependentHarmonic {
                t0,
                m,
                hbar,
                coupling,
            } => crate::families::packet::supporting_strength_raw(t, t0, m, hbar, coupling) * x * x,
            Potential::ComovingHarmonic { strength, speed } => {
                let xi = x - speed * t;
                strength * xi * xi
            }
        }
    }

    /// ∂V/∂x, used by the Ehrenfest force average.
    pub fn gradient(&self, x: f64, t: f64) -> f64 {
        match *self {
            Potential::Zero => 0.0,
            Potential::StaticHarmonic { strength } => 2.0 * strength * x,
            Potential::TimeDependentHarmonic {
                t0,
                m,
                hbar,
                coupling,
            } => {
                2.0 * crate::families::packet::supporting_strength_raw(t, t0, m, hbar, coupling) * x
            }
            Potential::ComovingHarmonic { strength, speed } => 2.0 * strength * (x - speed * t),
        }
    }

    pub fn is_static(&self) -> bool {
        matches!(self, Potential::Zero | Potential::StaticHarmonic { .. })
    }
}
