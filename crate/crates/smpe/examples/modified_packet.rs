//! Modified Gaussian packet: linear-theory amplitude, corrected phase, and
//! the time-dependent harmonic well V = A(t)x² that supports it.
//!
//!   cargo run -p smpe --example modified_packet

use smpe::families::packet;
use smpe::families::{AnalyticFamily, ModifiedPacket};
use smpe::observables::energy;
use smpe::params::ModelParams;

fn main() {
    let p = ModelParams::natural(-1.0 / 16.0);
    let t0 = 1.0;
    let pk = ModifiedPacket::new(t0, &p).unwrap();
    let (cr1, cr2) = packet::critical_t0(&p);
    println!("C = -1/16, t0 = {t0}");
    println!("critical widths: t0 > {cr1} for bounded energy, t0 ≥ {cr2} for E ≥ 0");
    println!("discriminant B² = {}", packet::discriminant(t0, &p));

    println!(
        "\n{:>5} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "t", "f(t)", "g(t)", "A(t)", "h(t)", "E(t)"
    );
    for t in [0.0, 0.5, 1.0, 2.0, 4.0, 10.0] {
        println!(
            "{t:5.1} {:12.6} {:12.6} {:12.6} {:12.6} {:12.6}",
            packet::phase_correction(t, t0, &p),
            packet::phase_laplacian(t, t0, &p),
            packet::supporting_strength(t, t0, &p),
            packet::phase_offset(t, t0, &p).unwrap(),
            packet::energy(t, t0, &p),
        );
    }
    println!("asymptotic energy ħ/4t0 = {}", p.hbar / (4.0 * t0));

    // The closed-form energy agrees with quadrature of the functional.
    let fam = AnalyticFamily::Packet(pk);
    let potential = pk.potential(&p);
    println!("\nquadrature cross-check:");
    for t in [0.0, 1.0, 4.0] {
        let grid = fam.default_grid(t, &p).unwrap();
        let st = fam.sample(&grid, t, &p);
        let quad = energy(&st, &grid, &potential, &p).unwrap();
        let closed = pk.energy(t, &p);
        println!("  t = {t}: quadrature {quad:.9}, closed form {closed:.9}");
    }

    // Approaching the first critical width the energy magnitude diverges.
    println!("\n|E(0)| on t0 ↓ {cr1}:");
    for j in [1, 4, 8, 16, 24] {
        let t0_j = cr1 * (1.0 + 2f64.powi(-j));
        println!(
            "  t0 = {t0_j:.9}: |E(0)| = {:.3e}",
            packet::energy(0.0, t0_j, &p).abs()
        );
    }
}
