//! Subrelativistic plane wave on a periodic box: uniform density, linearly
//! winding phase, and the dispersion E = mv²/2 + mc².
//!
//!   cargo run -p smpe --example plane_wave

use smpe::evolve::{rhs, Boundary};
use smpe::families::{periodic_box, AnalyticFamily, PlaneWave};
use smpe::params::ModelParams;
use smpe::state::Potential;

fn main() {
    let p = ModelParams::natural(-0.125);
    let v = 0.7;
    let pw = PlaneWave::new(&p, v, 10.0).unwrap();
    println!(
        "v = {v}: E = {} (mv²/2 + mc² = {})",
        pw.energy,
        0.5 * v * v + 1.0
    );
    println!("phase winding over the box = {}", pw.phase_winding(&p));

    // Uniform flow: the density equation is exactly static and the phase
    // drops at the constant rate -mv²/2ħ, for any coupling.
    let fam = AnalyticFamily::PlaneWave(pw);
    let grid = periodic_box(10.0, 64).unwrap();
    let st = fam.sample(&grid, 0.0, &p);
    let boundary = Boundary::Periodic {
        phase_winding: pw.phase_winding(&p),
    };
    let (drho, ds) = rhs(&st, &grid, &Potential::Zero, &p, 1e-12, boundary).unwrap();
    let max_drho = drho.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    let ds_spread = ds
        .iter()
        .fold(0.0f64, |a, &b| a.max((b + 0.5 * v * v).abs()));
    println!("max |∂ρ/∂t| = {max_drho:.3e}");
    println!("max |∂S/∂t + mv²/2ħ| = {ds_spread:.3e}");

    // Off the dispersion the phase equation picks up a uniform residual.
    let off = PlaneWave::with_energy(v, 1.5, 10.0).unwrap();
    let fam = AnalyticFamily::PlaneWave(off);
    let st = fam.sample(&grid, 0.0, &p);
    let (_, ds) = rhs(&st, &grid, &Potential::Zero, &p, 1e-12, boundary).unwrap();
    println!(
        "energy off dispersion by {:+.3}: ∂S/∂t shifts to {:.6}",
        1.5 - pw.energy,
        ds[0]
    );
}
