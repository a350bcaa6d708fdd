//! Coherent state: a rigid Gaussian swinging in a static harmonic well.
//! Its phase is linear in x, so the nonlinear coupling never acts on it.
//!
//!   cargo run -p smpe --example coherent_state

use smpe::families::{AnalyticFamily, CoherentState};
use smpe::observables::{energy, observables};
use smpe::params::ModelParams;

fn main() {
    let p = ModelParams::natural(-0.125);
    let cs = CoherentState::new(1.0, 1.0, 0.0).unwrap();
    let fam = AnalyticFamily::Coherent(cs);
    let potential = cs.potential(&p);

    println!("ω = 1, |α| = 1, δ = 0, coupling active (C = -1/8)");
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>12}",
        "t", "⟨x⟩", "⟨p⟩", "width", "energy"
    );
    for k in 0..=8 {
        let t = k as f64 * std::f64::consts::PI / 4.0;
        let grid = fam.default_grid(t, &p).unwrap();
        let st = fam.sample(&grid, t, &p);
        let obs = observables(&st, &grid, &p).unwrap();
        let e = energy(&st, &grid, &potential, &p).unwrap();
        println!(
            "{t:6.3} {:12.6} {:12.6} {:12.6} {:12.6}",
            obs.mean_x, obs.mean_p, obs.width, e
        );
    }
    println!("\ncenter follows √2·cos(t); energy is conserved exactly by the family");

    // The ground state (α = 0) carries the linear zero-point energy ħω/2.
    let gs = CoherentState::new(1.0, 0.0, 0.0).unwrap();
    let fam = AnalyticFamily::Coherent(gs);
    let grid = fam.default_grid(0.0, &p).unwrap();
    let st = fam.sample(&grid, 0.0, &p);
    let e = energy(&st, &grid, &gs.potential(&p), &p).unwrap();
    println!("ground-state energy = {e:.9} (ħω/2 = 0.5)");
}
