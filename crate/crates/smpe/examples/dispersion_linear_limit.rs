//! Linear-limit control: with C = 0 the packet is the free Gaussian of
//! ordinary quantum mechanics and must disperse as width²(t) = (t² + t0²)/2mt0.
//!
//!   cargo run -p smpe --example dispersion_linear_limit

use smpe::evolve::{evolve, EvolutionConfig};
use smpe::families::{AnalyticFamily, ModifiedPacket};
use smpe::grid::Grid1D;
use smpe::params::ModelParams;
use smpe::state::Potential;

fn main() {
    let p = ModelParams::natural(0.0);
    let pk = ModifiedPacket::new(1.0, &p).unwrap();
    let fam = AnalyticFamily::Packet(pk);

    let t_end = 2.0;
    let half = 8.0 * pk.width_sq(t_end, &p).sqrt();
    let dx = 1.0 / 32.0;
    let cells = (2.0 * half / dx).ceil() as usize;
    let grid = Grid1D::new(-half, -half + cells as f64 * dx, cells + 1).unwrap();
    let initial = fam.sample(&grid, 0.0, &p);

    let mut cfg = EvolutionConfig::new(grid, t_end);
    cfg.save_every = 800;
    let trace = evolve(&initial, &Potential::Zero, &cfg, &p).unwrap();

    println!("C = 0 packet, t0 = 1, dx = 1/32");
    println!(
        "{:>7} {:>14} {:>14} {:>10} {:>12}",
        "t", "width²", "closed form", "rel err", "norm-1"
    );
    for r in &trace.records {
        let expect = pk.width_sq(r.t, &p);
        println!(
            "{:7.3} {:14.8} {:14.8} {:10.2e} {:12.2e}",
            r.t,
            r.width * r.width,
            expect,
            (r.width * r.width / expect - 1.0).abs(),
            r.norm - 1.0
        );
    }
    let e0 = trace.records[0].energy;
    let e1 = trace.records.last().unwrap().energy;
    println!(
        "\nenergy drift over the run: {:.2e} relative",
        (e1 / e0 - 1.0).abs()
    );
}
