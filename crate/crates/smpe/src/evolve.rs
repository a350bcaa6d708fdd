//! Method-of-lines time evolution of the coupled (ρ, S) system
//!
//!   ∂ρ/∂t = -(ħ/m)·∇·(ρ∇S) + (2C/ħ)·Δ(ρΔS),
//!   ∂S/∂t = (ħ/2m)·ΔR/R - V/ħ - (ħ/2m)·(∇S)² - (C/ħ)·(ΔS)²,
//!
//! with the guarded ΔR/R = Δρ/(2ρ) - (∇ρ)²/(4ρ²) on the floored density.
//! Time stepping is the classic 4-stage Runge-Kutta; the nonlinear term acts
//! like a fourth-order spatial coupling, so the automatic step obeys a
//! dx⁴-scaled cap next to the usual dx² advective one. The norm is never
//! renormalized: its drift is a diagnostic, and drifting past 1e-3 aborts
//! the run.

use crate::error::{Error, Result};
use crate::grid::{gradient_into, laplacian_into, trapezoid, trapezoid_periodic, Grid1D, Stencil};
use crate::observables::observables;
use crate::params::ModelParams;
use crate::state::{HydroState, Potential};

/// Norm drift that aborts a run.
pub const NORM_DRIFT_ABORT: f64 = 1e-3;
/// Default relative density floor inside ΔR/R.
pub const DEFAULT_DENSITY_FLOOR_REL: f64 = 1e-12;
/// Relative density below which the phase rate is extrapolated from the
/// interior instead of evaluated (clamped boundaries only).
pub const PHASE_BAND_REL: f64 = 1e-8;

/// Time step selection.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum TimeStep {
    /// dx²- and dx⁴-scaled stability caps evaluated at start.
    Auto,
    Fixed(f64),
}

/// Boundary treatment of the evolved fields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Boundary {
    /// ρ pinned to its initial tail values, S linearly extrapolated.
    Clamp,
    /// Wrapped grid; `phase_winding` is S(x + period) - S(x) of the initial
    /// data (non-zero for the plane wave).
    Periodic { phase_winding: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionConfig {
    pub grid: Grid1D,
    pub t_end: f64,
    pub dt: TimeStep,
    /// Record observables every this many steps (the final step is always
    /// recorded).
    pub save_every: usize,
    pub density_floor_rel: f64,
    pub boundary: Boundary,
}

impl EvolutionConfig {
    pub fn new(grid: Grid1D, t_end: f64) -> Self {
        Self {
            grid,
            t_end,
            dt: TimeStep::Auto,
            save_every: 100,
            density_floor_rel: DEFAULT_DENSITY_FLOOR_REL,
            boundary: Boundary::Clamp,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.t_end > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "t_end must be > 0, got {}",
                self.t_end
            )));
        }
        if let TimeStep::Fixed(dt) = self.dt {
            if !(dt > 0.0) {
                return Err(Error::InvalidConfig(format!("dt must be > 0, got {dt}")));
            }
        }
        if self.save_every == 0 {
            return Err(Error::InvalidConfig("save_every must be ≥ 1".into()));
        }
        if !(self.density_floor_rel > 0.0) {
            return Err(Error::InvalidConfig("density floor must be > 0".into()));
        }
        Ok(())
    }
}

/// One observable sample along a run.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct TraceRecord {
    pub t: f64,
    pub norm: f64,
    pub mean_x: f64,
    pub mean_p: f64,
    pub width: f64,
    pub energy: f64,
    /// |∫ ∂ρ/∂t dx|, the instantaneous norm flux; a cheap residual proxy.
    pub res_proxy: f64,
}

/// Time series of observables plus the final state.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionTrace {
    pub records: Vec<TraceRecord>,
    pub final_state: HydroState,
}

/// Automatic step: min(0.2·m·dx²/ħ, 0.05·ħ·dx⁴/|C|), the second cap only
/// when the coupling is active.
pub fn auto_time_step(p: &ModelParams, dx: f64) -> f64 {
    let advective = 0.2 * p.m * dx * dx / p.hbar;
    if p.coupling == 0.0 {
        advective
    } else {
        advective.min(0.05 * p.hbar * dx.powi(4) / p.coupling.abs())
    }
}

struct RhsScratch {
    ds: Vec<f64>,
    lap_s: Vec<f64>,
    drho: Vec<f64>,
    lap_rho: Vec<f64>,
    flux: Vec<f64>,
    curv_flux: Vec<f64>,
}

impl RhsScratch {
    fn new(n: usize) -> Self {
        Self {
            ds: vec![0.0; n],
            lap_s: vec![0.0; n],
            drho: vec![0.0; n],
            lap_rho: vec![0.0; n],
            flux: vec![0.0; n],
            curv_flux: vec![0.0; n],
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn rhs_into(
    rho: &[f64],
    s: &[f64],
    t: f64,
    grid: &Grid1D,
    potential: &Potential,
    p: &ModelParams,
    rho_scale: f64,
    floor_abs: f64,
    boundary: Boundary,
    scratch: &mut RhsScratch,
    drho_dt: &mut [f64],
    ds_dt: &mut [f64],
) -> Result<()> {
    let n = grid.n;
    let dx = grid.dx();
    let (s_stencil, field_stencil) = match boundary {
        Boundary::Clamp => (Stencil::OneSided, Stencil::OneSided),
        Boundary::Periodic { phase_winding } => (
            Stencil::Periodic {
                jump: phase_winding,
            },
            Stencil::Periodic { jump: 0.0 },
        ),
    };

    gradient_into(s, dx, s_stencil, &mut scratch.ds)?;
    laplacian_into(s, dx, s_stencil, &mut scratch.lap_s)?;
    gradient_into(rho, dx, field_stencil, &mut scratch.drho)?;
    laplacian_into(rho, dx, field_stencil, &mut scratch.lap_rho)?;

    // Continuity: -(ħ/m)·(ρS')' + (2C/ħ)·(ρ·ΔS)''.
    for (i, &r) in rho.iter().enumerate() {
        scratch.flux[i] = r * scratch.ds[i];
        scratch.curv_flux[i] = r * scratch.lap_s[i];
    }
    // Reuse drho_dt as the divergence of the flux, ds_dt as Δ(ρΔS).
    gradient_into(&scratch.flux, dx, field_stencil, drho_dt)?;
    laplacian_into(&scratch.curv_flux, dx, field_stencil, ds_dt)?;
    let adv = -p.hbar / p.m;
    let curv = 2.0 * p.coupling / p.hbar;
    for i in 0..n {
        drho_dt[i] = adv * drho_dt[i] + curv * ds_dt[i];
    }

    // Phase: (ħ/2m)·ΔR/R - V/ħ - (ħ/2m)·(∇S)² - (C/ħ)·(ΔS)².
    let half = 0.5 * p.hbar / p.m;
    let c_over_h = p.coupling / p.hbar;
    for i in 0..n {
        let r = rho[i].max(floor_abs);
        let lap_r_over_r =
            scratch.lap_rho[i] / (2.0 * r) - scratch.drho[i] * scratch.drho[i] / (4.0 * r * r);
        ds_dt[i] = half * lap_r_over_r
            - potential.evaluate(grid.x(i), t) / p.hbar
            - half * scratch.ds[i] * scratch.ds[i]
            - c_over_h * scratch.lap_s[i] * scratch.lap_s[i];
    }

    // In the low-density tail bands the phase equation stops being
    // trustworthy: the floored ΔR/R no longer balances -(∇S)² (and, for
    // confining potentials, V), so the raw rate rips the tail phase away
    // from the interior, steepens under -(∇S)² and feeds a curvature cliff
    // into the (ΔS)² term. The bands carry densities below PHASE_BAND_REL
    // of the peak, where the families' true phase rate is linear in x, so
    // extrapolate the rate linearly from the last trustworthy nodes.
    if matches!(boundary, Boundary::Clamp) {
        let band = PHASE_BAND_REL * rho_scale;
        let first = rho.iter().position(|&r| r > band);
        let last = rho.iter().rposition(|&r| r > band);
        if let (Some(lo), Some(hi)) = (first, last) {
            if lo + 1 < hi {
                let slope = ds_dt[lo + 1] - ds_dt[lo];
                for i in 0..lo {
                    ds_dt[i] = ds_dt[lo] - slope * (lo - i) as f64;
                }
                let slope = ds_dt[hi] - ds_dt[hi - 1];
                for i in hi + 1..n {
                    ds_dt[i] = ds_dt[hi] + slope * (i - hi) as f64;
                }
            }
        }
    }
    Ok(())
}

/// Instantaneous time derivatives (∂ρ/∂t, ∂S/∂t) of a state.
pub fn rhs(
    state: &HydroState,
    grid: &Grid1D,
    potential: &Potential,
    p: &ModelParams,
    floor_rel: f64,
    boundary: Boundary,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if state.len() != grid.n {
        return Err(Error::LengthMismatch {
            expected: grid.n,
            got: state.len(),
        });
    }
    let rho_max = state.rho.iter().cloned().fold(0.0, f64::max);
    let mut scratch = RhsScratch::new(grid.n);
    let mut drho = vec![0.0; grid.n];
    let mut ds = vec![0.0; grid.n];
    rhs_into(
        &state.rho,
        &state.s,
        state.t,
        grid,
        potential,
        p,
        rho_max,
        floor_rel * rho_max,
        boundary,
        &mut scratch,
        &mut drho,
        &mut ds,
    )?;
    Ok((drho, ds))
}

/// Energy functional of an evolved state. Unlike the quadrature used for
/// closed-form states, evolved tails carry grid-noise of either sign, so the
/// amplitude-gradient term is guarded at the evolution density floor and the
/// stencils follow the boundary treatment.
pub fn trace_energy(
    state: &HydroState,
    grid: &Grid1D,
    potential: &Potential,
    p: &ModelParams,
    floor_rel: f64,
    boundary: Boundary,
) -> Result<f64> {
    let n = grid.n;
    let dx = grid.dx();
    let (s_stencil, field_stencil, periodic) = match boundary {
        Boundary::Clamp => (Stencil::OneSided, Stencil::OneSided, false),
        Boundary::Periodic { phase_winding } => (
            Stencil::Periodic {
                jump: phase_winding,
            },
            Stencil::Periodic { jump: 0.0 },
            true,
        ),
    };
    let mut ds = vec![0.0; n];
    gradient_into(&state.s, dx, s_stencil, &mut ds)?;
    let mut lap_s = vec![0.0; n];
    laplacian_into(&state.s, dx, s_stencil, &mut lap_s)?;
    let mut drho = vec![0.0; n];
    gradient_into(&state.rho, dx, field_stencil, &mut drho)?;
    let rho_max = state.rho.iter().cloned().fold(0.0, f64::max);
    let floor = floor_rel * rho_max;
    let kin = p.hbar * p.hbar / (2.0 * p.m);
    let mut f = vec![0.0; n];
    for i in 0..n {
        let r = state.rho[i];
        f[i] = kin * (drho[i] * drho[i] / (4.0 * r.max(floor)) + r * ds[i] * ds[i])
            + p.coupling * r * lap_s[i] * lap_s[i]
            + potential.evaluate(grid.x(i), state.t) * r;
    }
    Ok(if periodic {
        trapezoid_periodic(&f, dx)
    } else {
        trapezoid(&f, dx)
    })
}

struct Clamp {
    rho_left: f64,
    rho_right: f64,
}

fn apply_clamp(rho: &mut [f64], s: &mut [f64], clamp: &Clamp) {
    let n = rho.len();
    rho[0] = clamp.rho_left;
    rho[n - 1] = clamp.rho_right;
    s[0] = 2.0 * s[1] - s[2];
    s[n - 1] = 2.0 * s[n - 2] - s[n - 3];
}

/// Integrate a state to `cfg.t_end`, recording observables along the way.
pub fn evolve(
    initial: &HydroState,
    potential: &Potential,
    cfg: &EvolutionConfig,
    p: &ModelParams,
) -> Result<EvolutionTrace> {
    cfg.validate()?;
    let grid = &cfg.grid;
    let n = grid.n;
    if initial.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: initial.len(),
        });
    }
    let dx = grid.dx();
    let dt_cap = match cfg.dt {
        TimeStep::Auto => auto_time_step(p, dx),
        TimeStep::Fixed(dt) => dt,
    };
    let n_steps = (cfg.t_end / dt_cap).ceil().max(1.0) as usize;
    let dt = cfg.t_end / n_steps as f64;

    let rho_max0 = initial.rho.iter().cloned().fold(0.0, f64::max);
    let floor_abs = cfg.density_floor_rel * rho_max0;
    // Pinning the raw initial tail values avoids a density step at the
    // boundary; the floor applies only inside ΔR/R.
    let clamp = Clamp {
        rho_left: initial.rho[0],
        rho_right: initial.rho[n - 1],
    };

    let periodic = matches!(cfg.boundary, Boundary::Periodic { .. });
    let norm_of = |rho: &[f64]| {
        if periodic {
            trapezoid_periodic(rho, dx)
        } else {
            trapezoid(rho, dx)
        }
    };

    let mut rho = initial.rho.clone();
    let mut s = initial.s.clone();
    if let Boundary::Clamp = cfg.boundary {
        apply_clamp(&mut rho, &mut s, &clamp);
    }

    let mut scratch = RhsScratch::new(n);
    let mut k1 = (vec![0.0; n], vec![0.0; n]);
    let mut k2 = (vec![0.0; n], vec![0.0; n]);
    let mut k3 = (vec![0.0; n], vec![0.0; n]);
    let mut k4 = (vec![0.0; n], vec![0.0; n]);
    let mut stage_rho = vec![0.0; n];
    let mut stage_s = vec![0.0; n];

    let mut records = Vec::new();
    let non_norm = initial.is_non_normalizable();

    let record = |rho: &[f64],
                  s: &[f64],
                  t: f64,
                  scratch: &mut RhsScratch,
                  k: &mut (Vec<f64>, Vec<f64>)|
     -> Result<TraceRecord> {
        let state = HydroState::raw(t, rho.to_vec(), s.to_vec(), non_norm);
        rhs_into(
            rho,
            s,
            t,
            grid,
            potential,
            p,
            rho_max0,
            floor_abs,
            cfg.boundary,
            scratch,
            &mut k.0,
            &mut k.1,
        )?;
        let res_proxy = norm_of(&k.0).abs();
        let energy = trace_energy(
            &state,
            grid,
            potential,
            p,
            cfg.density_floor_rel,
            cfg.boundary,
        )?;
        let (norm, mean_x, mean_p, width) = if non_norm {
            (norm_of(rho), f64::NAN, f64::NAN, f64::NAN)
        } else {
            let obs = observables(&state, grid, p)?;
            (obs.norm, obs.mean_x, obs.mean_p, obs.width)
        };
        Ok(TraceRecord {
            t,
            norm,
            mean_x,
            mean_p,
            width,
            energy,
            res_proxy,
        })
    };

    records.push(record(&rho, &s, initial.t, &mut scratch, &mut k1)?);

    let make_trace =
        |records: Vec<TraceRecord>, rho: Vec<f64>, s: Vec<f64>, t: f64| EvolutionTrace {
            records,
            final_state: HydroState::raw(t, rho, s, non_norm),
        };

    for step in 1..=n_steps {
        let t = initial.t + (step - 1) as f64 * dt;

        rhs_into(
            &rho,
            &s,
            t,
            grid,
            potential,
            p,
            rho_max0,
            floor_abs,
            cfg.boundary,
            &mut scratch,
            &mut k1.0,
            &mut k1.1,
        )?;
        stage(
            &rho,
            &s,
            &k1,
            0.5 * dt,
            &mut stage_rho,
            &mut stage_s,
            cfg.boundary,
            &clamp,
        );
        rhs_into(
            &stage_rho,
            &stage_s,
            t + 0.5 * dt,
            grid,
            potential,
            p,
            rho_max0,
            floor_abs,
            cfg.boundary,
            &mut scratch,
            &mut k2.0,
            &mut k2.1,
        )?;
        stage(
            &rho,
            &s,
            &k2,
            0.5 * dt,
            &mut stage_rho,
            &mut stage_s,
            cfg.boundary,
            &clamp,
        );
        rhs_into(
            &stage_rho,
            &stage_s,
            t + 0.5 * dt,
            grid,
            potential,
            p,
            rho_max0,
            floor_abs,
            cfg.boundary,
            &mut scratch,
            &mut k3.0,
            &mut k3.1,
        )?;
        stage(
            &rho,
            &s,
            &k3,
            dt,
            &mut stage_rho,
            &mut stage_s,
            cfg.boundary,
            &clamp,
        );
        rhs_into(
            &stage_rho,
            &stage_s,
            t + dt,
            grid,
            potential,
            p,
            rho_max0,
            floor_abs,
            cfg.boundary,
            &mut scratch,
            &mut k4.0,
            &mut k4.1,
        )?;

        let w = dt / 6.0;
        for i in 0..n {
            rho[i] += w * (k1.0[i] + 2.0 * k2.0[i] + 2.0 * k3.0[i] + k4.0[i]);
            s[i] += w * (k1.1[i] + 2.0 * k2.1[i] + 2.0 * k3.1[i] + k4.1[i]);
        }
        if let Boundary::Clamp = cfg.boundary {
            apply_clamp(&mut rho, &mut s, &clamp);
        }

        let t_now = initial.t + step as f64 * dt;
        if !rho.iter().chain(s.iter()).all(|v| v.is_finite()) {
            let trace = make_trace(records, rho.clone(), s.clone(), t_now);
            return Err(Error::BlowUp {
                step,
                t: t_now,
                trace: Box::new(trace),
            });
        }
        let drift = (norm_of(&rho) - 1.0).abs();
        if drift > NORM_DRIFT_ABORT {
            let trace = make_trace(records, rho.clone(), s.clone(), t_now);
            return Err(Error::NormDrift {
                step,
                t: t_now,
                drift,
                limit: NORM_DRIFT_ABORT,
                trace: Box::new(trace),
            });
        }
        if step % cfg.save_every == 0 || step == n_steps {
            records.push(record(&rho, &s, t_now, &mut scratch, &mut k1)?);
        }
    }

    let t_end = initial.t + cfg.t_end;
    Ok(make_trace(records, rho, s, t_end))
}

#[allow(clippy::too_many_arguments)]
fn stage(
    rho: &[f64],
    s: &[f64],
    k: &(Vec<f64>, Vec<f64>),
    a: f64,
    out_rho: &mut [f64],
    out_s: &mut [f64],
    boundary: Boundary,
    clamp: &Clamp,
) {
    for i in 0..rho.len() {
        out_rho[i] = rho[i] + a * k.0[i];
        out_s[i] = s[i] + a * k.1[i];
    }
    if let Boundary::Clamp = boundary {
        apply_clamp(out_rho, out_s, clamp);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{AnalyticFamily, Branch, CoherentState, FreeSoliton, PlaneWave};

    #[test]
    fn uniform_flow_rhs() {
        // Constant ρ with a linear phase on a periodic box: ∂ρ/∂t = 0 and
        // ∂S/∂t = -mv²/2ħ everywhere, for C = 0.
        let p = ModelParams::natural(0.0);
        let pw = PlaneWave::new(&p, 0.7, 10.0).unwrap();
        let fam = AnalyticFamily::PlaneWave(pw);
        let grid = crate::families::periodic_box(10.0, 64).unwrap();
        let st = fam.sample(&grid, 0.0, &p);
        let boundary = Boundary::Periodic {
            phase_winding: pw.phase_winding(&p),
        };
        let (drho, ds) = rhs(&st, &grid, &Potential::Zero, &p, 1e-12, boundary).unwrap();
        for (i, (&a, &b)) in drho.iter().zip(&ds).enumerate() {
            assert!(a.abs() < 1e-12, "node {i}: drho = {a}");
            assert!((b + 0.5 * 0.7 * 0.7).abs() < 1e-10, "node {i}: ds = {b}");
        }
    }

    #[test]
    fn soliton_rhs_matches_analytic_time_derivative() {
        // The right-hand side converges to the closed-form ∂ρ/∂t and ∂S/∂t
        // at second order in dx; check the sup mismatch falls ×4 ± 30% per
        // grid halving over the region where the density is meaningful.
        let p = ModelParams::natural(-0.125);
        let sol = FreeSoliton::new(&p, 0.3, Branch::Plus).unwrap();
        let fam = AnalyticFamily::FreeSoliton(sol);
        let sup_err = |points: usize| {
            let grid = fam.grid_with_points(0.0, &p, points).unwrap();
            let st = fam.sample(&grid, 0.0, &p);
            let (drho, ds) = rhs(&st, &grid, &Potential::Zero, &p, 1e-12, Boundary::Clamp).unwrap();
            let dt = 1e-7;
            let plus = fam.sample(&grid, dt, &p);
            let minus = fam.sample(&grid, -dt, &p);
            let rho_max = st.rho.iter().cloned().fold(0.0, f64::max);
            let mut e_rho: f64 = 0.0;
            let mut e_s: f64 = 0.0;
            for i in grid.n / 20..grid.n - grid.n / 20 {
                if st.rho[i] < 1e-6 * rho_max {
                    continue;
                }
                let drho_exact = (plus.rho[i] - minus.rho[i]) / (2.0 * dt);
                let ds_exact = (plus.s[i] - minus.s[i]) / (2.0 * dt);
                e_rho = e_rho.max((drho[i] - drho_exact).abs());
                e_s = e_s.max((ds[i] - ds_exact).abs());
            }
            (e_rho, e_s)
        };
        let (rho_coarse, s_coarse) = sup_err(257);
        let (rho_fine, s_fine) = sup_err(513);
        let ratio_rho = rho_coarse / rho_fine;
        let ratio_s = s_coarse / s_fine;
        assert!((2.8..=5.2).contains(&ratio_rho), "ratio_rho = {ratio_rho}");
        assert!((2.8..=5.2).contains(&ratio_s), "ratio_s = {ratio_s}");
        assert!(rho_fine < 1e-2 && s_fine < 1e-1, "{rho_fine} {s_fine}");
    }

    #[test]
    fn stationary_ground_state_density_is_static() {
        // The α = 0 coherent state in its well: ∂ρ/∂t vanishes identically
        // because S is spatially constant.
        let p = ModelParams::natural(-0.125);
        let cs = CoherentState::new(1.0, 0.0, 0.0).unwrap();
        let fam = AnalyticFamily::Coherent(cs);
        let grid = fam.grid_with_points(0.0, &p, 257).unwrap();
        let st = fam.sample(&grid, 0.0, &p);
        let (drho, _) = rhs(&st, &grid, &cs.potential(&p), &p, 1e-12, Boundary::Clamp).unwrap();
        for (i, &v) in drho.iter().enumerate() {
            assert!(v.abs() < 1e-12, "node {i}: {v}");
        }
    }

    #[test]
    fn halving_dt_leaves_observables_unchanged() {
        // Time integration error sits far below the spatial error: halving
        // dt moves the final width by less than a tenth of its distance to
        // the closed form.
        let p = ModelParams::natural(0.0);
        let pk = crate::families::ModifiedPacket::new(1.0, &p).unwrap();
        let fam = AnalyticFamily::Packet(pk);
        let t_end = 1.0;
        let half = 8.0 * pk.width_sq(t_end, &p).sqrt();
        let dx = 1.0 / 32.0;
        let cells = (2.0 * half / dx).ceil() as usize;
        let grid = Grid1D::new(-half, -half + cells as f64 * dx, cells + 1).unwrap();
        let st = fam.sample(&grid, 0.0, &p);
        let run = |dt: f64| {
            let mut cfg = EvolutionConfig::new(grid, t_end);
            cfg.save_every = 100_000;
            cfg.dt = TimeStep::Fixed(dt);
            let trace = evolve(&st, &Potential::Zero, &cfg, &p).unwrap();
            trace.records.last().unwrap().width
        };
        let dt = auto_time_step(&p, dx);
        let (full, halved) = (run(dt), run(0.5 * dt));
        let exact = pk.width_sq(t_end, &p).sqrt();
        let dist = (full - exact).abs();
        assert!(dist > 0.0);
        assert!(
            (full - halved).abs() < 0.1 * dist,
            "dt change {:e} vs distance {dist:e}",
            (full - halved).abs()
        );
    }

    #[test]
    fn soliton_tracks_closed_form_at_short_horizon() {
        // Before the short-wave growth surfaces, the integrated soliton
        // follows the closed form at the stencil error level.
        let p = ModelParams::natural(-0.125);
        let sol = FreeSoliton::new(&p, 0.3, Branch::Plus).unwrap();
        let fam = AnalyticFamily::FreeSoliton(sol);
        let dx = 1.0f64 / 16.0;
        let cells = (9.0 / dx).ceil() as usize;
        let grid = Grid1D::new(-4.5, -4.5 + cells as f64 * dx, cells + 1).unwrap();
        let st = fam.sample(&grid, 0.0, &p);
        let t_end = 2e-3;
        let mut cfg = EvolutionConfig::new(grid, t_end);
        cfg.save_every = 100_000;
        let trace = evolve(&st, &Potential::Zero, &cfg, &p).unwrap();
        let last = trace.records.last().unwrap();
        assert!((last.norm - 1.0).abs() < 1e-9, "norm {}", last.norm);
        assert!(
            (last.mean_x - 0.3 * t_end).abs() < 1e-6,
            "mean_x {}",
            last.mean_x
        );
        assert!((last.width - 0.5).abs() < 1e-4, "width {}", last.width);
    }

    #[test]
    fn comoving_soliton_short_horizon_energy() {
        // Over a horizon short of the short-wave growth, the quadrature
        // energy of the comoving-oscillator soliton stays constant and
        // equals the stationary closed form plus mv²/2.
        let p = ModelParams::natural(-0.125);
        let sol = crate::families::OscillatorSoliton::new(&p, 1.0, 0.3, Branch::Plus).unwrap();
        let fam = AnalyticFamily::OscillatorSoliton(sol);
        let dx = 1.0f64 / 16.0;
        let cells = (9.0 / dx).ceil() as usize;
        let grid = Grid1D::new(-4.5, -4.5 + cells as f64 * dx, cells + 1).unwrap();
        let st = fam.sample(&grid, 0.0, &p);
        let mut cfg = EvolutionConfig::new(grid, 1e-3);
        cfg.save_every = 50;
        let trace = evolve(&st, &sol.potential(), &cfg, &p).unwrap();
        let expect = sol.energy(&p);
        for r in &trace.records {
            assert!(
                (r.energy / expect - 1.0).abs() < 1e-3,
                "t = {}: E = {} vs {expect}",
                r.t,
                r.energy
            );
        }
    }

    #[test]
    fn negative_coupling_run_aborts_with_diagnostics() {
        // Long soliton runs hit the short-wave ill-posedness of the C < 0
        // system; the integrator must abort with the partial trace rather
        // than return garbage.
        let p = ModelParams::natural(-0.125);
        let sol = FreeSoliton::new(&p, 0.3, Branch::Plus).unwrap();
        let fam = AnalyticFamily::FreeSoliton(sol);
        let dx = 1.0f64 / 16.0;
        let cells = (9.0 / dx).ceil() as usize;
        let grid = Grid1D::new(-4.5, -4.5 + cells as f64 * dx, cells + 1).unwrap();
        let st = fam.sample(&grid, 0.0, &p);
        let cfg = EvolutionConfig::new(grid, 5.0);
        match evolve(&st, &Potential::Zero, &cfg, &p) {
            Err(Error::NormDrift { step, trace, .. }) | Err(Error::BlowUp { step, trace, .. }) => {
                assert!(step > 0);
                assert!(!trace.records.is_empty());
            }
            other => panic!("expected an aborted run, got {other:?}"),
        }
    }

    #[test]
    fn config_validation() {
        let grid = Grid1D::new(-4.0, 4.0, 64).unwrap();
        let mut cfg = EvolutionConfig::new(grid, 1.0);
        cfg.t_end = 0.0;
        let p = ModelParams::natural(-0.125);
        let fam = AnalyticFamily::FreeSoliton(FreeSoliton::new(&p, 0.0, Branch::Plus).unwrap());
        let st = fam.sample(&grid, 0.0, &p);
        assert!(evolve(&st, &Potential::Zero, &cfg, &p).is_err());
        cfg.t_end = 1.0;
        cfg.save_every = 0;
        assert!(evolve(&st, &Potential::Zero, &cfg, &p).is_err());
    }
}
