//! Subrelativistic plane wave on a periodic box.
//!
//! ρ is the constant 1/box_len and the phase winds linearly,
//! S = (m·v·x - (E - mc²)·t)/ħ, so the state is flagged non-normalizable.
//! With the dispersion E = mv²/2 + mc² the pair solves the free equations of
//! motion for any coupling (ΔS = 0).

use crate::error::{Error, Result};
use crate::params::ModelParams;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    pub speed: f64,
    /// Total energy including the rest term mc².
    pub energy: f64,
    /// Period of the box the wave lives on.
    pub box_len: f64,
}

impl PlaneWave {
    /// Plane wave with the subrelativistic dispersion E = mv²/2 + mc².
    pub fn new(p: &ModelParams, speed: f64, box_len: f64) -> Result<Self> {
        let energy = 0.5 * p.m * speed * speed + p.m * p.c * p.c;
        Self::with_energy(speed, energy, box_len)
    }

    /// Plane wave with an explicit energy (for probing the dispersion).
    pub fn with_energy(speed: f64, energy: f64, box_len: f64) -> Result<Self> {
        if !(box_len > 0.0) {
            return Err(Error::InvalidParams(format!(
                "box length must be > 0, got {box_len}"
            )));
        }
        Ok(Self {
            speed,
            energy,
            box_len,
        })
    }

    pub fn eval(&self, x: f64, t: f64, p: &ModelParams) -> (f64, f64) {
        let rho = 1.0 / self.box_len;
        let s = (p.m * self.speed * x - (self.energy - p.m * p.c * p.c) * t) / p.hbar;
        (rho, s)
    }

    /// Phase winding over one period, S(x + box_len) - S(x) = m·v·box_len/ħ.
    pub fn phase_winding(&self, p: &ModelParams) -> f64 {
        p.m * self.speed * self.box_len / p.hbar
    }
}
