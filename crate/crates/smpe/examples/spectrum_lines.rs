//! Harmonic-oscillator spectrum: the extra nodeless level, its offset above
//! the linear ground state, and the subrelativistic special case.
//!
//!   cargo run -p smpe --example spectrum_lines

use smpe::families::{Branch, OscillatorSoliton};
use smpe::params::{ModelParams, M_ELECTRON_SI};
use smpe::spectrum;

fn main() {
    let p = ModelParams::natural(-0.125);
    let crit = spectrum::omega_crit(&p).unwrap();
    println!("C = -1/8: ω_crit = {crit}");
    println!(
        "\n{:>8} {:>10} {:>12} {:>14} {:>12}",
        "η", "ω", "E_st", "ΔE_new", "ΔE/ħω"
    );
    for eta in [1.0, 0.75, 0.5, 0.25, 0.1, 0.01] {
        let line = spectrum::new_line(eta * crit, &p).unwrap();
        println!(
            "{eta:8.3} {:10.4} {:12.6} {:14.6e} {:12.6}",
            line.omega, line.e_st, line.delta_e_new, line.ratio
        );
    }
    println!("at η = 1/4 the line sits 9/16 of a level spacing up — about half-way");
    println!("as η → 0 the offset in level spacings diverges: high excited states");

    // Above ω_crit there is no nonlinear nodeless state.
    match spectrum::new_line(1.01 * crit, &p) {
        Err(e) => println!("\nω above critical: {e}"),
        Ok(_) => unreachable!(),
    }

    // Electron numbers in SI.
    let si = ModelParams::si_electron(0.0);
    let nu = spectrum::omega_crit_hz(M_ELECTRON_SI, 1.0, &si).unwrap();
    println!("\nν_crit(electron, q = 1) = {nu:.4e} Hz");
    println!(
        "ν_crit(electron, q = 1/16) = {:.4e} Hz",
        spectrum::omega_crit_hz(M_ELECTRON_SI, 1.0 / 16.0, &si).unwrap()
    );

    // Subrelativistic line: rest energy plus a quadratic-in-ω rise, equal to
    // the general comoving-soliton energy at L = λ_c/4.
    let sub = si.with_subrelativistic_coupling();
    let creat = spectrum::omega_creat(&sub);
    println!("\nsubrelativistic regime ceiling ω_creat = {creat:.4e} rad/s");
    for omega in [1e19, 1e20, 1e21] {
        let (e, _) = spectrum::subrelativistic_line(omega, &sub).unwrap();
        let sol =
            OscillatorSoliton::new(&sub, 0.5 * sub.m * omega * omega, 0.0, Branch::Plus).unwrap();
        println!(
            "  ω = {omega:.1e}: E_st = {e:.8e} J (general closed form {:.8e} J)",
            sol.energy_stationary(&sub)
        );
    }
}
