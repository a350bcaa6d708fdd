//! Closed-form solution families of the phase-modified Schrödinger equation.

pub mod coherent;
pub mod packet;
pub mod plane_wave;
pub mod soliton;

pub use coherent::CoherentState;
pub use packet::ModifiedPacket;
pub use plane_wave::PlaneWave;
pub use soliton::{Branch, FreeSoliton, OscillatorSoliton};

use crate::error::Result;
use crate::grid::Grid1D;
use crate::params::ModelParams;
use crate::state::{HydroState, Potential};

/// Default node count for family grids.
pub const DEFAULT_GRID_POINTS: usize = 2048;
/// Default half-span of family grids in units of the density width.
pub const DEFAULT_HALF_WIDTHS: f64 = 8.0;

/// One of the five closed-form (ρ, S, V) generators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnalyticFamily {
    Coherent(CoherentState),
    Packet(ModifiedPacket),
    FreeSoliton(FreeSoliton),
    OscillatorSoliton(OscillatorSoliton),
    PlaneWave(PlaneWave),
}

impl AnalyticFamily {
    pub fn name(&self) -> &'static str {
        match self {
            AnalyticFamily::Coherent(_) => "coherent",
            AnalyticFamily::Packet(_) => "packet",
            AnalyticFamily::FreeSoliton(_) => "soliton",
            AnalyticFamily::OscillatorSoliton(_) => "oscillator_soliton",
            AnalyticFamily::PlaneWave(_) => "plane_wave",
        }
    }

    /// (ρ, S) at one point.
    pub fn eval(&self, x: f64, t: f64, p: &ModelParams) -> (f64, f64) {
        match self {
            AnalyticFamily::Coherent(f) => f.eval(x, t, p),
            AnalyticFamily::Packet(f) => f.eval(x, t, p),
            AnalyticFamily::FreeSoliton(f) => f.eval(x, t, p),
            AnalyticFamily::OscillatorSoliton(f) => f.eval(x, t, p),
            AnalyticFamily::PlaneWave(f) => f.eval(x, t, p),
        }
    }

    /// The potential that supports the family.
    pub fn potential(&self, p: &ModelParams) -> Potential {
        match self {
            AnalyticFamily::Coherent(f) => f.potential(p),
            AnalyticFamily::Packet(f) => f.potential(p),
            AnalyticFamily::FreeSoliton(_) | AnalyticFamily::PlaneWave(_) => Potential::Zero,
            AnalyticFamily::OscillatorSoliton(f) => f.potential(),
        }
    }

    /// ⟨x⟩(t) of the density (0 for the plane wave).
    pub fn center(&self, t: f64, p: &ModelParams) -> f64 {
        match self {
            AnalyticFamily::Coherent(f) => f.center(t, p),
            AnalyticFamily::Packet(_) => 0.0,
            AnalyticFamily::FreeSoliton(f) => f.center0 + f.speed * t,
            AnalyticFamily::OscillatorSoliton(f) => f.center0 + f.speed * t,
            AnalyticFamily::PlaneWave(_) => 0.0,
        }
    }

    /// Standard-deviation width of the density at time t; for the plane wave
    /// this is a nominal box fraction so the default grid covers the box.
    pub fn width_scale(&self, t: f64, p: &ModelParams) -> f64 {
        match self {
            AnalyticFamily::Coherent(f) => f.x0(p) / std::f64::consts::SQRT_2,
            AnalyticFamily::Packet(f) => f.width_sq(t, p).sqrt(),
            AnalyticFamily::FreeSoliton(f) => 0.5 * f.half_width,
            AnalyticFamily::OscillatorSoliton(f) => 0.5 * f.half_width,
            AnalyticFamily::PlaneWave(f) => f.box_len / (2.0 * DEFAULT_HALF_WIDTHS),
        }
    }

    pub fn is_normalizable(&self) -> bool {
        !matches!(self, AnalyticFamily::PlaneWave(_))
    }

    /// Phase winding over a periodic grid of the given period (non-zero only
    /// for the plane wave).
    pub fn phase_winding(&self, p: &ModelParams) -> f64 {
        match self {
            AnalyticFamily::PlaneWave(f) => f.phase_winding(p),
            _ => 0.0,
        }
    }

    /// Sample the family onto a grid.
    pub fn sample(&self, grid: &Grid1D, t: f64, p: &ModelParams) -> HydroState {
        let mut rho = Vec::with_capacity(grid.n);
        let mut s = Vec::with_capacity(grid.n);
        for i in 0..grid.n {
            let (r, sv) = self.eval(grid.x(i), t, p);
            rho.push(r);
            s.push(sv);
        }
        HydroState::raw(t, rho, s, !self.is_normalizable())
    }

    /// Grid centered on the family at time t, spanning ±8 density widths
    /// (the plane wave gets its periodic box instead).
    pub fn default_grid(&self, t: f64, p: &ModelParams) -> Result<Grid1D> {
        self.grid_with_points(t, p, DEFAULT_GRID_POINTS)
    }

    pub fn grid_with_points(&self, t: f64, p: &ModelParams, n: usize) -> Result<Grid1D> {
        if let AnalyticFamily::PlaneWave(f) = self {
            return periodic_box(f.box_len, n);
        }
        let w = self.width_scale(t, p);
        let c = self.center(t, p);
        Grid1D::new(c - DEFAULT_HALF_WIDTHS * w, c + DEFAULT_HALF_WIDTHS * w, n)
    }
}

/// Grid whose n nodes tile a periodic box of the given length: node n-1 sits
/// one spacing short of the period so that wrapping is seamless.
pub fn periodic_box(len: f64, n: usize) -> Result<Grid1D> {
    let dx = len / n as f64;
    Grid1D::new(0.0, len - dx, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::trapezoid;

    #[test]
    fn densities_are_normalized_and_non_negative() {
        let p = ModelParams::natural(-0.125);
        let pk = ModelParams::natural(-1.0 / 16.0);
        let families = [
            (
                AnalyticFamily::Coherent(CoherentState::new(1.0, 1.0, 0.0).unwrap()),
                p,
            ),
            (
                AnalyticFamily::Packet(ModifiedPacket::new(1.0, &pk).unwrap()),
                pk,
            ),
            (
                AnalyticFamily::FreeSoliton(FreeSoliton::new(&p, 0.3, Branch::Plus).unwrap()),
                p,
            ),
            (
                AnalyticFamily::OscillatorSoliton(
                    OscillatorSoliton::new(&p, 1.0, 0.3, Branch::Plus).unwrap(),
                ),
                p,
            ),
        ];
        for (family, params) in families {
            for t in [0.0, 0.7, 2.0] {
                let grid = family.default_grid(t, &params).unwrap();
                let st = family.sample(&grid, t, &params);
                assert!(st.rho.iter().all(|&r| r >= 0.0), "{}", family.name());
                let norm = trapezoid(&st.rho, grid.dx());
                assert!(
                    (norm - 1.0).abs() < 1e-8,
                    "{} at t = {t}: ∫ρ = {norm}",
                    family.name()
                );
            }
        }
    }

    #[test]
    fn plane_wave_box_norm() {
        let p = ModelParams::natural(-0.125);
        let pw = AnalyticFamily::PlaneWave(PlaneWave::new(&p, 0.5, 10.0).unwrap());
        let grid = pw.default_grid(0.0, &p).unwrap();
        let st = pw.sample(&grid, 0.0, &p);
        assert!(st.is_non_normalizable());
        let norm = crate::grid::trapezoid_periodic(&st.rho, grid.dx());
        assert!((norm - 1.0).abs() < 1e-12);
        assert!((grid.period() - 10.0).abs() < 1e-12);
    }
}
