//! Residual certification: every closed-form family is pushed through the
//! discretized equations of motion on refined grids, and the residual
//! max-norms must shrink at second order (or sit at round-off).
//!
//!   cargo run -p smpe --example residual_certification

use smpe::families::{
    AnalyticFamily, Branch, CoherentState, FreeSoliton, ModifiedPacket, OscillatorSoliton,
    PlaneWave,
};
use smpe::params::ModelParams;
use smpe::verify::{convergence_order, refinement_grids};

fn main() {
    let p8 = ModelParams::natural(-0.125);
    let p16 = ModelParams::natural(-1.0 / 16.0);
    let families: Vec<(AnalyticFamily, ModelParams, f64)> = vec![
        (
            AnalyticFamily::Coherent(CoherentState::new(1.0, 1.0, 0.0).unwrap()),
            p8,
            0.7,
        ),
        (
            AnalyticFamily::Packet(ModifiedPacket::new(1.0, &p16).unwrap()),
            p16,
            1.0,
        ),
        (
            AnalyticFamily::FreeSoliton(FreeSoliton::new(&p8, 0.3, Branch::Plus).unwrap()),
            p8,
            1.0,
        ),
        (
            AnalyticFamily::OscillatorSoliton(
                OscillatorSoliton::new(&p8, 1.0, 0.3, Branch::Plus).unwrap(),
            ),
            p8,
            1.0,
        ),
        (
            AnalyticFamily::PlaneWave(PlaneWave::new(&p8, 0.5, 8.0).unwrap()),
            p8,
            0.5,
        ),
    ];

    let dx_list = [1.0 / 32.0, 1.0 / 64.0, 1.0 / 128.0];
    for (family, p, t) in families {
        let grids = refinement_grids(&family, t, &p, &dx_list).unwrap();
        let report = convergence_order(&family, t, &grids, &p, 1e-6).unwrap();
        println!("{} (t = {t}):", family.name());
        println!(
            "{:>12} {:>12} {:>12} {:>12} {:>12}",
            "dx", "res3_max", "res3_l2", "res4_max", "res4_l2"
        );
        for r in &report.reports {
            println!(
                "{:12.6} {:12.3e} {:12.3e} {:12.3e} {:12.3e}",
                r.dx, r.res3_max, r.res3_l2, r.res4_max, r.res4_l2
            );
        }
        if report.noise_floor {
            println!("  -> noise floor reached (residuals at round-off)\n");
        } else {
            println!(
                "  -> orders: res3 {:.3}, res4 {:.3}\n",
                report.order3.unwrap(),
                report.order4.unwrap()
            );
        }
    }
}
