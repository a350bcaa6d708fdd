//! Quadrature observables and the energy functional.
//!
//! Everything is trapezoidal on the uniform grid. The amplitude-gradient
//! term (∇R)² is evaluated through the guarded identity (∇ρ)²/(4ρ), which is
//! finite for the Gaussian families and, unlike differencing √ρ directly,
//! keeps the leading stencil error from contaminating the integral.

use crate::error::{Error, Result};
use crate::grid::{gradient_into, laplacian_into, trapezoid, Grid1D, Stencil};
use crate::params::ModelParams;
use crate::state::{HydroState, Potential};

/// Relative density floor used inside guarded ρ divisions.
pub const ENERGY_DENSITY_FLOOR_REL: f64 = 1e-30;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Observables {
    /// ∫ρ dx.
    pub norm: f64,
    /// ⟨x⟩ = ∫xρ dx.
    pub mean_x: f64,
    /// ⟨p⟩ = ħ∫ρ S' dx.
    pub mean_p: f64,
    /// ⟨p²⟩ = ∫[ħ²(∇R)² + ħ²ρ(S')²] dx.
    pub mean_p2: f64,
    /// √(⟨x²⟩ - ⟨x⟩²).
    pub width: f64,
}

fn require_normalizable(state: &HydroState) -> Result<()> {
    if state.is_non_normalizable() {
        return Err(Error::NonNormalizable);
    }
    Ok(())
}

/// Norm, ⟨x⟩, ⟨p⟩, ⟨p²⟩ and the width of a normalizable state.
pub fn observables(state: &HydroState, grid: &Grid1D, p: &ModelParams) -> Result<Observables> {
    require_normalizable(state)?;
    if state.len() != grid.n {
        return Err(Error::LengthMismatch {
            expected: grid.n,
            got: state.len(),
        });
    }
    let dx = grid.dx();
    let n = grid.n;
    let mut ds = vec![0.0; n];
    gradient_into(&state.s, dx, Stencil::OneSided, &mut ds)?;
    let mut drho = vec![0.0; n];
    gradient_into(&state.rho, dx, Stencil::OneSided, &mut drho)?;

    let rho_max = state.rho.iter().cloned().fold(0.0, f64::max);
    let floor = ENERGY_DENSITY_FLOOR_REL * rho_max;

    let mut f_norm = vec![0.0; n];
    let mut f_x = vec![0.0; n];
    let mut f_x2 = vec![0.0; n];
    let mut f_p = vec![0.0; n];
    let mut f_p2 = vec![0.0; n];
    let h2 = p.hbar * p.hbar;
    for i in 0..n {
        let x = grid.x(i);
        let r = state.rho[i];
        f_norm[i] = r;
        f_x[i] = x * r;
        f_x2[i] = x * x * r;
        f_p[i] = r * ds[i];
        let grad_r_sq = drho[i] * drho[i] / (4.0 * r.max(floor));
        f_p2[i] = h2 * (grad_r_sq + r * ds[i] * ds[i]);
    }
    let norm = trapezoid(&f_norm, dx);
    let mean_x = trapezoid(&f_x, dx);
    let mean_x2 = trapezoid(&f_x2, dx);
    let mean_p = p.hbar * trapezoid(&f_p, dx);
    let mean_p2 = trapezoid(&f_p2, dx);
    Ok(Observables {
        norm,
        mean_x,
        mean_p,
        mean_p2,
        width: (mean_x2 - mean_x * mean_x).max(0.0).sqrt(),
    })
}

/// Energy functional
///
///   E = ∫ { (ħ²/2m)[(∇R)² + ρ(∇S)²] + C·ρ·(ΔS)² + V·ρ } dx,  R = √ρ,
///
/// conserved for potentials without explicit time dependence.
pub fn energy(
    state: &HydroState,
    grid: &Grid1D,
    potential: &Potential,
    p: &ModelParams,
) -> Result<f64> {
    require_normalizable(state)?;
    if state.len() != grid.n {
        return Err(Error::LengthMismatch {
            expected: grid.n,
            got: state.len(),
        });
    }
    let dx = grid.dx();
    let n = grid.n;
    let mut ds = vec![0.0; n];
    gradient_into(&state.s, dx, Stencil::OneSided, &mut ds)?;
    let mut lap_s = vec![0.0; n];
    laplacian_into(&state.s, dx, Stencil::OneSided, &mut lap_s)?;
    let mut drho = vec![0.0; n];
    gradient_into(&state.rho, dx, Stencil::OneSided, &mut drho)?;

    let rho_max = state.rho.iter().cloned().fold(0.0, f64::max);
    let floor = ENERGY_DENSITY_FLOOR_REL * rho_max;
    let kin = p.hbar * p.hbar / (2.0 * p.m);

    let mut f = vec![0.0; n];
    for i in 0..n {
        let r = state.rho[i];
        let grad_r_sq = drho[i] * drho[i] / (4.0 * r.max(floor));
        f[i] = kin * (grad_r_sq + r * ds[i] * ds[i])
            + p.coupling * r * lap_s[i] * lap_s[i]
            + potential.evaluate(grid.x(i), state.t) * r;
    }
    Ok(trapezoid(&f, dx))
}
