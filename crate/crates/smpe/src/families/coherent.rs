//! Coherent state of the harmonic oscillator.
//!
//! The density is a rigid Gaussian of width x₀ = √(ħ/mω) whose center swings
//! as √2·x₀·|α|·cos(ωt - δ), and the phase is linear in x, so ΔS = 0 and
//! every nonlinear term drops: the state solves the modified equations in the
//! same static well V = mω²x²/2 for any coupling.

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::state::Potential;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentState {
    /// Oscillator angular frequency ω (rad/s).
    pub omega: f64,
    /// |α| ≥ 0, the coherent amplitude.
    pub alpha_abs: f64,
    /// Phase offset δ (rad).
    pub delta: f64,
}

impl CoherentState {
    pub fn new(omega: f64, alpha_abs: f64, delta: f64) -> Result<Self> {
        if !(omega > 0.0) {
            return Err(Error::NonPositiveFrequency(omega));
        }
        if !(alpha_abs >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "|α| must be ≥ 0, got {alpha_abs}"
            )));
        }
        Ok(Self {
            omega,
            alpha_abs,
            delta,
        })
    }

    /// Ground-state width x₀ = √(ħ/mω).
    pub fn x0(&self, p: &ModelParams) -> f64 {
        (p.hbar / (p.m * self.omega)).sqrt()
    }

    /// Center of the density, √2·x₀·|α|·cos(ωt - δ).
    pub fn center(&self, t: f64, p: &ModelParams) -> f64 {
        std::f64::consts::SQRT_2 * self.x0(p) * self.alpha_abs * (self.omega * t - self.delta).cos()
    }

    pub fn eval(&self, x: f64, t: f64, p: &ModelParams) -> (f64, f64) {
        let x0 = self.x0(p);
        let xi = x - self.center(t, p);
        let rho = (-xi * xi / (x0 * x0)).exp() / (PI.sqrt() * x0);
        let phase_angle = self.omega * t - self.delta;
        let s = -(0.5 * self.omega * t
            - 0.5 * self.alpha_abs * self.alpha_abs * (2.0 * phase_angle).sin()
            + std::f64::consts::SQRT_2 * self.alpha_abs * x / x0 * phase_angle.sin());
        (rho, s)
    }

    /// The supporting well V = mω²x²/2.
    pub fn potential(&self, p: &ModelParams) -> Potential {
        Potential::StaticHarmonic {
            strength: 0.5 * p.m * self.omega * self.omega,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{laplacian, Grid1D};

    #[test]
    fn ground_state_forms() {
        // α = 0 collapses to ρ = exp(-x²/x₀²)/(√π x₀), S = -ωt/2.
        let p = ModelParams::natural(-0.125);
        let cs = CoherentState::new(1.0, 0.0, 0.0).unwrap();
        let (rho, s) = cs.eval(0.7, 3.0, &p);
        assert!((rho - (-0.49f64).exp() / PI.sqrt()).abs() < 1e-15);
        assert!((s + 1.5).abs() < 1e-15);
    }

    #[test]
    fn phase_is_linear_in_x() {
        // ΔS = 0 for any α: the stencil Laplacian of S vanishes identically.
        let p = ModelParams::natural(0.3);
        let cs = CoherentState::new(1.7, 1.3, 0.4).unwrap();
        let grid = Grid1D::new(-5.0, 5.0, 128).unwrap();
        let s: Vec<f64> = grid.sample(|x| cs.eval(x, 0.9, &p).1);
        for v in laplacian(&s, grid.dx()).unwrap() {
            assert!(v.abs() < 1e-10);
        }
    }

    #[test]
    fn center_swings_as_cosine() {
        // α = 1, δ = 0, ω = 1, m = 1: center(t) = √2·cos t.
        let p = ModelParams::natural(0.0);
        let cs = CoherentState::new(1.0, 1.0, 0.0).unwrap();
        for t in [0.0, 0.5, 2.0] {
            assert!((cs.center(t, &p) - std::f64::consts::SQRT_2 * t.cos()).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_bad_frequency() {
        assert!(CoherentState::new(0.0, 1.0, 0.0).is_err());
        assert!(CoherentState::new(1.0, -0.5, 0.0).is_err());
    }
}
