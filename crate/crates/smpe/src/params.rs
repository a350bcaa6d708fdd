//! Physical constants and the nonlinear phase coupling.
//!
//! The model is parametrized by ħ, the particle mass m, the speed of light c
//! (used only by the subrelativistic formulas) and a single signed coupling C
//! with dimensions J·m⁴. The coupling is always representable as
//! C = ±ħ²L²/m for a characteristic length L, and L²/λ_c² defines the
//! dimensionless Compton quotient q. C is the stored primitive; L, λ_c and q
//! are derived on demand so there is a single source of truth.

use crate::error::{Error, Result};

/// CODATA 2018 reduced Planck constant (J·s).
pub const HBAR_SI: f64 = 1.054571817e-34;
/// Speed of light in vacuum (m/s), exact.
pub const C_LIGHT_SI: f64 = 299792458.0;
/// CODATA 2018 electron mass (kg).
pub const M_ELECTRON_SI: f64 = 9.1093837015e-31;

/// Model parameters: fundamental constants plus the nonlinear coupling.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ModelParams {
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Particle mass (kg).
    pub m: f64,
    /// Speed of light (m/s).
    pub c: f64,
    /// Nonlinear coupling C (J·m⁴), signed. Negative values admit solitons.
    pub coupling: f64,
}

impl ModelParams {
    pub fn new(hbar: f64, m: f64, c: f64, coupling: f64) -> Result<Self> {
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(Error::InvalidParams(format!(
                "hbar must be > 0, got {hbar}"
            )));
        }
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::InvalidParams(format!("m must be > 0, got {m}")));
        }
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::InvalidParams(format!("c must be > 0, got {c}")));
        }
        if !coupling.is_finite() {
            return Err(Error::InvalidParams(format!(
                "C must be finite, got {coupling}"
            )));
        }
        Ok(Self {
            hbar,
            m,
            c,
            coupling,
        })
    }

    /// Desk-scale unit system ħ = m = c = 1.
    pub fn natural(coupling: f64) -> Self {
        Self {
            hbar: 1.0,
            m: 1.0,
            c: 1.0,
            coupling,
        }
    }

    /// SI units for a particle of mass `m` (kg).
    pub fn si(m: f64, coupling: f64) -> Result<Self> {
        Self::new(HBAR_SI, m, C_LIGHT_SI, coupling)
    }

    /// SI units for the electron.
    pub fn si_electron(coupling: f64) -> Self {
        Self {
            hbar: HBAR_SI,
            m: M_ELECTRON_SI,
            c: C_LIGHT_SI,
            coupling,
        }
    }

    /// Characteristic length L with |C| = ħ²L²/m, i.e. L = √(|C|·m)/ħ.
    /// Returns 0 for C = 0. The sign of C is reported by [`coupling_sign`].
    ///
    /// [`coupling_sign`]: ModelParams::coupling_sign
    pub fn characteristic_length(&self) -> f64 {
        (self.coupling.abs() * self.m).sqrt() / self.hbar
    }

    /// Sign of the coupling: -1, 0 or +1.
    pub fn coupling_sign(&self) -> i8 {
        if self.coupling > 0.0 {
            1
        } else if self.coupling < 0.0 {
            -1
        } else {
            0
        }
    }

    /// Inverse of [`characteristic_length`]: C = sign·ħ²L²/m.
    ///
    /// [`characteristic_length`]: ModelParams::characteristic_length
    pub fn coupling_from_length(&self, length: f64, sign: i8) -> f64 {
        f64::from(sign) * self.hbar * self.hbar * length * length / self.m
    }

    /// Reduced Compton wavelength λ_c = ħ/(m·c).
    pub fn compton_wavelength(&self) -> f64 {
        self.hbar / (self.m * self.c)
    }

    /// (λ_c, q) with the Compton quotient q = L²/λ_c².
    pub fn compton(&self) -> (f64, f64) {
        let lambda_c = self.compton_wavelength();
        let l = self.characteristic_length();
        (lambda_c, (l / lambda_c) * (l / lambda_c))
    }

    /// Coupling fixed by identifying the soliton self-energy with mc²:
    /// C_sub = -ħ⁴/(16·m³·c²). The implied L equals λ_c/4.
    pub fn subrelativistic_coupling(&self) -> f64 {
        let h2 = self.hbar * self.hbar;
        -h2 * h2 / (16.0 * self.m * self.m * self.m * self.c * self.c)
    }

    /// Same parameters with the coupling replaced by C_sub.
    pub fn with_subrelativistic_coupling(&self) -> Self {
        Self {
            coupling: self.subrelativistic_coupling(),
            ..*self
        }
    }

    /// Same parameters with a different coupling.
    pub fn with_coupling(&self, coupling: f64) -> Self {
        Self { coupling, ..*self }
    }
}
