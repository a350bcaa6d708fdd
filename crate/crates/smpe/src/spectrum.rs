//! Harmonic-oscillator spectrum predictions of the nonlinear nodeless state.
//!
//! For a particle of characteristic length L in a well of frequency ω the
//! comoving-soliton branch exists only up to ω_crit = ħ/4mL² (equivalently
//! L ≤ L_max = √(ħ/4mω)). Below that it forms an extra nodeless level at
//!
//!   E_st(ω) = (ħω/4)(1/Q_h + Q_h),   Q_h = (L/L_max)² = ω/ω_crit,
//!
//! sitting ΔE_new = E_st - ħω/2 above the linear ground state. In units of
//! the level spacing ħω the offset is (1 - η)²/4η with η = ω/ω_crit, so the
//! new line splits off the ground state at ω_crit and walks toward the first
//! excited level as the frequency drops (half-way near η = 1/4).

use crate::error::{Error, Result};
use crate::params::ModelParams;
use std::f64::consts::PI;

/// L² computed straight from the coupling, |C|m/ħ², so exact inputs like
/// C = -1/8 stay exact (no square-root round trip).
fn length_sq(p: &ModelParams) -> f64 {
    p.coupling.abs() * p.m / (p.hbar * p.hbar)
}

/// Critical well frequency ω_crit = ħ/(4mL²). Requires a coupling, since
/// L = 0 puts no ceiling on ω.
pub fn omega_crit(p: &ModelParams) -> Result<f64> {
    let l2 = length_sq(p);
    if l2 == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    Ok(p.hbar / (4.0 * p.m * l2))
}

/// Largest soliton length supporting a well of frequency ω:
/// L_max = √(ħ/4mω).
pub fn l_max(omega: f64, p: &ModelParams) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::NonPositiveFrequency(omega));
    }
    Ok((p.hbar / (4.0 * p.m * omega)).sqrt())
}

/// The new spectral line at one frequency.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SpectrumLine {
    pub omega: f64,
    pub omega_crit: f64,
    /// Q_h = (L/L_max)².
    pub q_h: f64,
    /// η = ω/ω_crit ∈ (0, 1].
    pub eta: f64,
    /// Energy of the nonlinear nodeless state (J).
    pub e_st: f64,
    /// Offset above the linear ground state, ≥ 0 and zero only at η = 1.
    pub delta_e_new: f64,
    /// ΔE_new/ħω = (1 - η)²/4η.
    pub ratio: f64,
}

/// Spectrum line for the coupling carried by `p`;
/// errors above the critical frequency.
pub fn new_line(omega: f64, p: &ModelParams) -> Result<SpectrumLine> {
    if !(omega > 0.0) {
        return Err(Error::NonPositiveFrequency(omega));
    }
    let crit = omega_crit(p)?;
    if omega > crit {
        return Err(Error::NoNonlinearState {
            omega,
            critical: crit,
        });
    }
    let l2 = length_sq(p);
    let q_h = 4.0 * l2 * p.m * omega / p.hbar;
    let eta = omega / crit;
    // Two routes on purpose: E_st from the mL²(…) closed form, the offset
    // from the (1 - η)² form; their consistency is a test invariant.
    let e_st = p.m * l2 * (p.hbar * p.hbar / (16.0 * p.m * p.m * l2 * l2) + omega * omega);
    let delta_e_new = 0.25 * p.hbar * crit * (1.0 - eta) * (1.0 - eta);
    let ratio = (1.0 - eta) * (1.0 - eta) / (4.0 * eta);
    Ok(SpectrumLine {
        omega,
        omega_crit: crit,
        q_h,
        eta,
        e_st,
        delta_e_new,
        ratio,
    })
}

/// Critical frequency as an ordinary frequency in Hz for a particle of mass
/// `m_particle` and Compton quotient q: ν_crit = ω_crit/2π = mc²/(8πqħ).
///
/// q is the particle's own Compton quotient L²/λ_c² — the only reading under
/// which the formula is dimensionally consistent — and the electron at q = 1
/// lands on ≈ 3×10¹⁹ Hz.
pub fn omega_crit_hz(m_particle: f64, q: f64, p: &ModelParams) -> Result<f64> {
    if !(q > 0.0) {
        return Err(Error::InvalidParams(format!(
            "Compton quotient must be > 0, got {q}"
        )));
    }
    if !(m_particle > 0.0) {
        return Err(Error::InvalidParams(format!(
            "mass must be > 0, got {m_particle}"
        )));
    }
    Ok(m_particle * p.c * p.c / (8.0 * PI * q * p.hbar))
}

/// Frequency ceiling of the subrelativistic regime, ω_creat = 2√2·mc²/ħ,
/// above which the oscillation energy reaches pair-creation scale.
pub fn omega_creat(p: &ModelParams) -> f64 {
    2.0 * std::f64::consts::SQRT_2 * p.m * p.c * p.c / p.hbar
}

/// Stationary energy of the subrelativistic oscillator soliton (L = λ_c/4):
///
///   E_st(ω) = mc² + m·λ_c²·ω²/16,
///
/// the general E_st(L; k) closed form specialized to L = λ_c/4, k = mω²/2.
/// Returns (E_st, ω_creat); errors at or above ω_creat.
pub fn subrelativistic_line(omega: f64, p: &ModelParams) -> Result<(f64, f64)> {
    if !(omega > 0.0) {
        return Err(Error::NonPositiveFrequency(omega));
    }
    let creat = omega_creat(p);
    if omega >= creat {
        return Err(Error::ParticleCreation {
            omega,
            critical: creat,
        });
    }
    let lambda_c = p.compton_wavelength();
    let e_st = p.m * p.c * p.c + p.m * lambda_c * lambda_c * omega * omega / 16.0;
    Ok((e_st, creat))
}
