//! Numerical laboratory for the simplest minimal phase extension (SMPE) of
//! the Schrödinger equation.
//!
//! The model works in hydrodynamic variables: density ρ = R² and
//! dimensionless phase S of the wave function Ψ = R·exp(iS). On top of the
//! linear theory its Lagrangian carries a single nonlinear term C·ρ·(ΔS)²,
//! so states with spatially constant phase curvature behave linearly while
//! genuinely curved phases feel the coupling. The crate provides
//!
//! - the model parameters and their derived scales ([`params`]),
//! - grids, stencils and quadrature ([`grid`]), states and potentials
//!   ([`state`]), observables and the energy functional ([`observables`]),
//! - the five closed-form solution families: coherent state, modified
//!   Gaussian packet, free and comoving-oscillator Gaussian solitons, and
//!   the subrelativistic plane wave ([`families`]),
//! - residual certification of the equations of motion, convergence-order
//!   estimation and the modified Ehrenfest relations ([`verify`]),
//! - explicit time evolution of arbitrary (ρ, S) data ([`evolve`]),
//! - the harmonic-oscillator spectrum predictions ([`spectrum`]),
//! - JSON-driven scenarios behind the `smpe` command-line tool
//!   ([`scenario`]).
//!
//! The `examples/` directory holds one runnable program per capability; the
//! acceptance suite lives in `tests/acceptance.rs`.

// Guards like !(x > 0.0) are deliberate: unlike x <= 0.0 they also reject
// NaN inputs.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod evolve;
pub mod families;
pub mod grid;
pub mod observables;
pub mod params;
pub mod scenario;
pub mod spectrum;
pub mod state;
pub mod verify;

pub use error::{Error, Result};
pub use evolve::{evolve, EvolutionConfig, EvolutionTrace, TimeStep};
pub use families::{
    AnalyticFamily, Branch, CoherentState, FreeSoliton, ModifiedPacket, OscillatorSoliton,
    PlaneWave,
};
pub use grid::Grid1D;
pub use observables::{energy, observables, Observables};
pub use params::ModelParams;
pub use state::{HydroState, Potential};
