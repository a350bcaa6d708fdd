//! Model parameters: unit presets, the coupling and its derived scales.
//!
//!   cargo run -p smpe --example params_tour

use smpe::params::ModelParams;

fn main() {
    // Desk-scale natural units with an attractive coupling.
    let p = ModelParams::natural(-0.125);
    let (lambda_c, q) = p.compton();
    println!("natural units, C = {}", p.coupling);
    println!("  characteristic length L = {}", p.characteristic_length());
    println!("  Compton wavelength      = {lambda_c}");
    println!("  Compton quotient q      = {q}");

    // The coupling is the stored primitive; L inverts it exactly.
    let back = p.coupling_from_length(p.characteristic_length(), p.coupling_sign());
    println!("  C -> L -> C round trip  = {back}");

    // The subrelativistic coupling pins L to a quarter Compton wavelength,
    // so the soliton's physical size 4L lands on the Compton wavelength.
    let electron = ModelParams::si_electron(0.0).with_subrelativistic_coupling();
    let (lambda_c, q) = electron.compton();
    println!("\nSI electron, C_sub = {:.6e} J·m⁴", electron.coupling);
    println!("  λ_c = {lambda_c:.6e} m");
    println!(
        "  L   = {:.6e} m (λ_c/4 = {:.6e})",
        electron.characteristic_length(),
        lambda_c / 4.0
    );
    println!("  q   = {q:.6} (1/16 = {:.6})", 1.0 / 16.0);
}
