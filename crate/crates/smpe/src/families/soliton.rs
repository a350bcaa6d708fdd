//! Gaussian solitons: the non-dispersive amplitude
//!
//!   ρ(x,t) = √(2/πs²) · exp(-2(x - x₀ - vt)²/s²)
//!
//! with the quadratic phase S = a(x - x₀ - vt)² + (m/ħ)v(x - x₀) + ċ·t.
//! They exist only for C < 0; the half-width is pinned by the coupling,
//! s² = 8m|C|/ħ² = 8L², and the phase curvature a carries a free sign.
//!
//! The free soliton (V = 0) has s⁴a² = 1. In a comoving harmonic well
//! V = k(x - vt)² the same amplitude works with a² = 1/s⁴ - km/2ħ², which
//! caps the well strength at k_crit = ħ²/32mL⁴.

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::state::Potential;
use std::f64::consts::PI;

/// Sign choice for the phase curvature a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
pub enum Branch {
    #[default]
    Plus,
    Minus,
}

impl Branch {
    pub fn signum(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

fn require_negative_coupling(p: &ModelParams) -> Result<()> {
    if p.coupling >= 0.0 {
        return Err(Error::SolitonsNeedNegativeCoupling {
            coupling: p.coupling,
        });
    }
    Ok(())
}

/// Squared half-width s² = 8m|C|/ħ².
fn half_width_sq(p: &ModelParams) -> f64 {
    8.0 * p.m * p.coupling.abs() / (p.hbar * p.hbar)
}

/// Phase drift rate ċ from the x-independent part of the phase equation:
/// ċ = -(2ħ²s² + ħ²s⁴b²v² + 8Ca²s⁴m) / (2ħs⁴m), b = m/ħ.
fn offset_rate(p: &ModelParams, curvature: f64, speed: f64) -> f64 {
    let s2 = half_width_sq(p);
    let s4 = s2 * s2;
    let b = p.m / p.hbar;
    let h2 = p.hbar * p.hbar;
    -(2.0 * h2 * s2
        + h2 * s4 * b * b * speed * speed
        + 8.0 * p.coupling * curvature * curvature * s4 * p.m)
        / (2.0 * p.hbar * s4 * p.m)
}

/// Critical comoving-well strength k_crit = ħ²/(32mL⁴) above which no
/// soliton exists. Requires C < 0.
pub fn critical_strength(p: &ModelParams) -> Result<f64> {
    require_negative_coupling(p)?;
    let l2 = p.coupling.abs() * p.m / (p.hbar * p.hbar);
    Ok(p.hbar * p.hbar / (32.0 * p.m * l2 * l2))
}

/// Free Gaussian soliton, V = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeSoliton {
    pub speed: f64,
    /// Center of the amplitude at t = 0.
    pub center0: f64,
    pub half_width: f64,
    /// Phase curvature a = ±1/s².
    pub curvature: f64,
    /// Momentum phase slope b = m/ħ.
    pub phase_slope: f64,
    /// ċ, the linear-in-time phase drift.
    pub offset_rate: f64,
}

impl FreeSoliton {
    pub fn new(p: &ModelParams, speed: f64, branch: Branch) -> Result<Self> {
        Self::with_center(p, speed, branch, 0.0)
    }

    pub fn with_center(p: &ModelParams, speed: f64, branch: Branch, center0: f64) -> Result<Self> {
        require_negative_coupling(p)?;
        let s2 = half_width_sq(p);
        let curvature = branch.signum() / s2;
        Ok(Self {
            speed,
            center0,
            half_width: s2.sqrt(),
            curvature,
            phase_slope: p.m / p.hbar,
            offset_rate: offset_rate(p, curvature, speed),
        })
    }

    pub fn eval(&self, x: f64, t: f64, _p: &ModelParams) -> (f64, f64) {
        let xi = x - self.center0 - self.speed * t;
        let s2 = self.half_width * self.half_width;
        let rho = (2.0 / (PI * s2)).sqrt() * (-2.0 * xi * xi / s2).exp();
        let s = self.curvature * xi * xi
            + self.phase_slope * self.speed * (x - self.center0)
            + self.offset_rate * t;
        (rho, s)
    }

    /// Rest self-energy E_st = ħ²/(16mL²).
    pub fn energy_stationary(p: &ModelParams) -> Result<f64> {
        require_negative_coupling(p)?;
        let l2 = p.coupling.abs() * p.m / (p.hbar * p.hbar);
        Ok(p.hbar * p.hbar / (16.0 * p.m * l2))
    }

    /// Total energy E(v) = E_st + mv²/2.
    pub fn energy(&self, p: &ModelParams) -> f64 {
        Self::energy_stationary(p).expect("constructed only for C < 0")
            + 0.5 * p.m * self.speed * self.speed
    }

    /// Physical size √2·s = 4L, the width measure of the density.
    pub fn physical_size(&self) -> f64 {
        std::f64::consts::SQRT_2 * self.half_width
    }
}

/// Gaussian soliton in the comoving harmonic well V = k(x - vt)².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorSoliton {
    pub speed: f64,
    pub center0: f64,
    /// Well strength k (J/m²).
    pub strength: f64,
    pub half_width: f64,
    /// Phase curvature a = ±√(1/s⁴ - km/2ħ²).
    pub curvature: f64,
    pub phase_slope: f64,
    pub offset_rate: f64,
}

impl OscillatorSoliton {
    pub fn new(p: &ModelParams, strength: f64, speed: f64, branch: Branch) -> Result<Self> {
        Self::with_center(p, strength, speed, branch, 0.0)
    }

    pub fn with_center(
        p: &ModelParams,
        strength: f64,
        speed: f64,
        branch: Branch,
        center0: f64,
    ) -> Result<Self> {
        require_negative_coupling(p)?;
        if !(strength >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "well strength must be non-negative, got {strength}"
            )));
        }
        let critical = critical_strength(p)?;
        if strength > critical {
            return Err(Error::OvercriticalPotential { strength, critical });
        }
        let s2 = half_width_sq(p);
        let a2 = 1.0 / (s2 * s2) - strength * p.m / (2.0 * p.hbar * p.hbar);
        // a² ≥ 0 is exactly the k ≤ k_crit condition; clamp the round-off.
        let curvature = branch.signum() * a2.max(0.0).sqrt();
        Ok(Self {
            speed,
            center0,
            strength,
            half_width: s2.sqrt(),
            curvature,
            phase_slope: p.m / p.hbar,
            offset_rate: offset_rate(p, curvature, speed),
        })
    }

    pub fn eval(&self, x: f64, t: f64, _p: &ModelParams) -> (f64, f64) {
        let xi = x - self.center0 - self.speed * t;
        let s2 = self.half_width * self.half_width;
        let rho = (2.0 / (PI * s2)).sqrt() * (-2.0 * xi * xi / s2).exp();
        let s = self.curvature * xi * xi
            + self.phase_slope * self.speed * (x - self.center0)
            + self.offset_rate * t;
        (rho, s)
    }

    pub fn potential(&self) -> Potential {
        Potential::ComovingHarmonic {
            strength: self.strength,
            speed: self.speed,
        }
    }

    /// Stationary energy E_st(L; k) = ħ²/(16mL²) + 2kL².
    pub fn energy_stationary(&self, p: &ModelParams) -> f64 {
        let l2 = p.coupling.abs() * p.m / (p.hbar * p.hbar);
        p.hbar * p.hbar / (16.0 * p.m * l2) + 2.0 * self.strength * l2
    }

    /// Total energy E = E_st(L; k) + mv²/2.
    pub fn energy(&self, p: &ModelParams) -> f64 {
        self.energy_stationary(p) + 0.5 * p.m * self.speed * self.speed
    }
}
