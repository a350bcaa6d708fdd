//! Gaussian soliton in a comoving harmonic well V = k(x - vt)²: same
//! amplitude as the free soliton, reduced phase curvature, and a hard cap on
//! the well strength.
//!
//!   cargo run -p smpe --example oscillator_soliton

use smpe::families::soliton::critical_strength;
use smpe::families::{AnalyticFamily, Branch, FreeSoliton, OscillatorSoliton};
use smpe::observables::energy;
use smpe::params::ModelParams;

fn main() {
    let p = ModelParams::natural(-0.125);
    let k_crit = critical_strength(&p).unwrap();
    println!("C = -1/8: k_crit = {k_crit}");

    println!(
        "\n{:>8} {:>14} {:>14} {:>14}",
        "k", "a", "E_st closed", "E_st quadrature"
    );
    for k in [0.0, 0.5, 1.0, 1.5, k_crit] {
        let sol = OscillatorSoliton::new(&p, k, 0.0, Branch::Plus).unwrap();
        let fam = AnalyticFamily::OscillatorSoliton(sol);
        let grid = fam.default_grid(0.0, &p).unwrap();
        let st = fam.sample(&grid, 0.0, &p);
        let quad = energy(&st, &grid, &sol.potential(), &p).unwrap();
        println!(
            "{k:8.3} {:14.9} {:14.9} {:14.9}",
            sol.curvature,
            sol.energy_stationary(&p),
            quad
        );
    }
    println!("at k = k_crit the curvature vanishes: the linear ground state");

    match OscillatorSoliton::new(&p, k_crit + 1e-6, 0.0, Branch::Plus) {
        Err(e) => println!("k just above critical: {e}"),
        Ok(_) => unreachable!(),
    }

    // The weak-well limit recovers the free soliton pointwise.
    let weak = OscillatorSoliton::new(&p, 1e-12, 0.4, Branch::Plus).unwrap();
    let free = FreeSoliton::new(&p, 0.4, Branch::Plus).unwrap();
    let mut sup: f64 = 0.0;
    for i in 0..400 {
        let x = -4.0 + 0.02 * i as f64;
        let (r1, s1) = weak.eval(x, 0.7, &p);
        let (r2, s2) = free.eval(x, 0.7, &p);
        sup = sup.max((r1 - r2).abs()).max((s1 - s2).abs());
    }
    println!("k = 1e-12 vs free soliton: sup field difference {sup:.2e}");
}
