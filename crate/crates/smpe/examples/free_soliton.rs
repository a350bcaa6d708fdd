//! Free Gaussian soliton: the model's particle. Exists only for C < 0, with
//! half-width pinned by the coupling and energy E_st + mv²/2.
//!
//!   cargo run -p smpe --example free_soliton

use smpe::families::{AnalyticFamily, Branch, FreeSoliton};
use smpe::observables::{energy, observables};
use smpe::params::ModelParams;
use smpe::state::Potential;

fn main() {
    let p = ModelParams::natural(-0.125);
    let sol = FreeSoliton::new(&p, 0.3, Branch::Plus).unwrap();
    println!("C = -1/8, v = 0.3");
    println!("  half-width s      = {}", sol.half_width);
    println!("  phase curvature a = {}", sol.curvature);
    println!("  phase slope b     = {}", sol.phase_slope);
    println!("  phase drift rate  = {}", sol.offset_rate);
    println!("  physical size √2s = {} (= 4L)", sol.physical_size());

    // Quadrature of the energy functional vs the closed form, and the
    // Galilean kinetic shift mv²/2.
    let quad = |v: f64| {
        let fam = AnalyticFamily::FreeSoliton(FreeSoliton::new(&p, v, Branch::Plus).unwrap());
        let grid = fam.default_grid(0.0, &p).unwrap();
        let st = fam.sample(&grid, 0.0, &p);
        energy(&st, &grid, &Potential::Zero, &p).unwrap()
    };
    let rest = quad(0.0);
    println!(
        "\nE_st quadrature = {rest:.12} (closed form {})",
        FreeSoliton::energy_stationary(&p).unwrap()
    );
    println!("{:>5} {:>16} {:>16}", "v", "E(v) - E(0)", "mv²/2");
    for v in [0.1, 0.5, 1.0] {
        println!(
            "{v:5.1} {:16.12} {:16.12}",
            quad(v) - rest,
            0.5 * p.m * v * v
        );
    }

    // ⟨x⟩ = vt and ⟨p⟩ = mv hold at any instant.
    let fam = AnalyticFamily::FreeSoliton(sol);
    for t in [0.0, 2.0] {
        let grid = fam.default_grid(t, &p).unwrap();
        let st = fam.sample(&grid, t, &p);
        let obs = observables(&st, &grid, &p).unwrap();
        println!("t = {t}: ⟨x⟩ = {:.9}, ⟨p⟩ = {:.9}", obs.mean_x, obs.mean_p);
    }

    // Positive coupling refuses to build one.
    match FreeSoliton::new(&ModelParams::natural(0.1), 0.0, Branch::Plus) {
        Err(e) => println!("\nC = +0.1: {e}"),
        Ok(_) => unreachable!(),
    }

    // In the subrelativistic units the rest energy is the mass energy.
    let sub = ModelParams::si_electron(0.0).with_subrelativistic_coupling();
    let e_st = FreeSoliton::energy_stationary(&sub).unwrap();
    println!(
        "\nSI electron, C_sub: E_st = {e_st:.6e} J, mc² = {:.6e} J",
        sub.m * sub.c * sub.c
    );
}
