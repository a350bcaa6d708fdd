//! JSON scenario documents and the runners behind the `smpe` command-line
//! tool.
//!
//! A scenario is a single JSON object selecting model parameters, a solution
//! family and per-command settings. Command-line flags override scenario
//! fields. All emitted numbers carry 17 significant digits so identical
//! scenarios reproduce byte-identical files; CSV output is RFC 4180 (CRLF,
//! one header row).

use crate::error::{Error, Result};
use crate::evolve::{self, Boundary, EvolutionConfig, TimeStep};
use crate::families::{
    periodic_box, AnalyticFamily, Branch, CoherentState, FreeSoliton, ModifiedPacket,
    OscillatorSoliton, PlaneWave,
};
use crate::grid::Grid1D;
use crate::params::ModelParams;
use crate::spectrum;
use crate::verify::{self, ConvergenceReport, EhrenfestReport};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Convergence-order band the `verify` command enforces (exit 1 outside).
pub const ORDER_BAND: (f64, f64) = (1.7, 2.3);
/// Ehrenfest correction-integral tolerance.
pub const EHRENFEST_CORRECTION_TOL: f64 = 1e-8;
/// Tolerance on the standard Ehrenfest relations.
pub const EHRENFEST_RELATION_TOL: f64 = 1e-6;

fn default_dx_list() -> Vec<f64> {
    vec![1.0 / 32.0, 1.0 / 64.0, 1.0 / 128.0]
}

fn default_t() -> f64 {
    1.0
}

fn default_dt_fd() -> f64 {
    verify::DEFAULT_DT_FD
}

fn default_t_end() -> f64 {
    5.0
}

fn default_save_every() -> usize {
    100
}

fn default_floor() -> f64 {
    evolve::DEFAULT_DENSITY_FLOOR_REL
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsSpec {
    /// "natural" (ħ = m = c = 1) or "si" (SI constants, electron mass).
    pub preset: Option<String>,
    pub hbar: Option<f64>,
    pub m: Option<f64>,
    pub c: Option<f64>,
    #[serde(rename = "C")]
    pub coupling: Option<f64>,
    /// Replace the coupling by C_sub = -ħ⁴/16m³c².
    #[serde(default)]
    pub subrelativistic: bool,
}

impl ParamsSpec {
    pub fn build(&self) -> Result<ModelParams> {
        let base = match self.preset.as_deref() {
            None | Some("natural") => ModelParams::natural(0.0),
            Some("si") => ModelParams::si_electron(0.0),
            Some(other) => {
                return Err(Error::Scenario(format!(
                    "unknown preset {other:?} (expected \"natural\" or \"si\")"
                )))
            }
        };
        let mut p = ModelParams::new(
            self.hbar.unwrap_or(base.hbar),
            self.m.unwrap_or(base.m),
            self.c.unwrap_or(base.c),
            self.coupling.unwrap_or(base.coupling),
        )?;
        if self.subrelativistic {
            if self.coupling.is_some() {
                return Err(Error::Scenario(
                    "give either an explicit C or subrelativistic=true, not both".into(),
                ));
            }
            p = p.with_subrelativistic_coupling();
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FamilySpec {
    Coherent {
        omega: f64,
        #[serde(default)]
        alpha: f64,
        #[serde(default)]
        delta: f64,
    },
    Packet {
        t0: f64,
    },
    Soliton {
        #[serde(default)]
        v: f64,
        #[serde(default)]
        sign: Option<i8>,
    },
    OscillatorSoliton {
        k: f64,
        #[serde(default)]
        v: f64,
        #[serde(default)]
        sign: Option<i8>,
    },
    PlaneWave {
        #[serde(default)]
        v: f64,
        #[serde(default)]
        box_len: Option<f64>,
    },
}

fn branch_of(sign: Option<i8>) -> Result<Branch> {
    match sign {
        None | Some(1) => Ok(Branch::Plus),
        Some(-1) => Ok(Branch::Minus),
        Some(other) => Err(Error::Scenario(format!(
            "sign must be 1 or -1, got {other}"
        ))),
    }
}

impl FamilySpec {
    pub fn build(&self, p: &ModelParams, grid: Option<&GridSpec>) -> Result<AnalyticFamily> {
        Ok(match *self {
            FamilySpec::Coherent {
                omega,
                alpha,
                delta,
            } => AnalyticFamily::Coherent(CoherentState::new(omega, alpha, delta)?),
            FamilySpec::Packet { t0 } => AnalyticFamily::Packet(ModifiedPacket::new(t0, p)?),
            FamilySpec::Soliton { v, sign } => {
                AnalyticFamily::FreeSoliton(FreeSoliton::new(p, v, branch_of(sign)?)?)
            }
            FamilySpec::OscillatorSoliton { k, v, sign } => AnalyticFamily::OscillatorSoliton(
                OscillatorSoliton::new(p, k, v, branch_of(sign)?)?,
            ),
            FamilySpec::PlaneWave { v, box_len } => {
                let len = box_len
                    .or_else(|| grid.map(|g| (g.x_max - g.x_min) * g.n as f64 / (g.n - 1) as f64))
                    .unwrap_or(10.0);
                AnalyticFamily::PlaneWave(PlaneWave::new(p, v, len)?)
            }
        })
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn build(&self) -> Result<Grid1D> {
        Grid1D::new(self.x_min, self.x_max, self.n)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvolutionSpec {
    #[serde(default = "default_t_end")]
    pub t_end: f64,
    /// A number, or the string "auto".
    #[serde(default)]
    pub dt: Option<serde_json::Value>,
    #[serde(default = "default_save_every")]
    pub save_every: usize,
    /// "clamp" or "periodic"; defaults by family.
    #[serde(default)]
    pub boundary: Option<String>,
    #[serde(default = "default_floor")]
    pub density_floor_rel: f64,
}

impl Default for EvolutionSpec {
    fn default() -> Self {
        Self {
            t_end: default_t_end(),
            dt: None,
            save_every: default_save_every(),
            boundary: None,
            density_floor_rel: default_floor(),
        }
    }
}

impl EvolutionSpec {
    fn time_step(&self) -> Result<TimeStep> {
        match &self.dt {
            None => Ok(TimeStep::Auto),
            Some(serde_json::Value::String(s)) if s == "auto" => Ok(TimeStep::Auto),
            Some(serde_json::Value::Number(x)) => {
                let v = x.as_f64().unwrap_or(f64::NAN);
                if v > 0.0 {
                    Ok(TimeStep::Fixed(v))
                } else {
                    Err(Error::Scenario(format!("dt must be > 0, got {v}")))
                }
            }
            Some(other) => Err(Error::Scenario(format!(
                "dt must be a number or \"auto\", got {other}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifySpec {
    #[serde(default = "default_dx_list")]
    pub dx_list: Vec<f64>,
    #[serde(default = "default_t")]
    pub t: f64,
    #[serde(default = "default_dt_fd")]
    pub dt_fd: f64,
}

impl Default for VerifySpec {
    fn default() -> Self {
        Self {
            dx_list: default_dx_list(),
            t: default_t(),
            dt_fd: default_dt_fd(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct SpectrumSpec {
    /// η = ω/ω_crit values; default is a uniform grid of 32 points in (0, 1].
    #[serde(default)]
    pub eta_list: Option<Vec<f64>>,
    /// Explicit ω values (rad/s); takes precedence over eta_list.
    #[serde(default)]
    pub omega_list: Option<Vec<f64>>,
    /// Compton quotient for the ν_crit summary; defaults to the particle's
    /// own q.
    #[serde(default)]
    pub q: Option<f64>,
}

/// One scenario document.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default)]
    pub params: ParamsSpec,
    #[serde(default)]
    pub family: Option<FamilySpec>,
    #[serde(default)]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub evolution: Option<EvolutionSpec>,
    #[serde(default)]
    pub verify: Option<VerifySpec>,
    #[serde(default)]
    pub spectrum: Option<SpectrumSpec>,
    #[serde(default)]
    pub out: Option<String>,
}

impl Scenario {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Scenario(format!("cannot read {}: {e}", path.display())))?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn family(&self) -> Result<&FamilySpec> {
        self.family
            .as_ref()
            .ok_or_else(|| Error::Scenario("scenario needs a \"family\" block".into()))
    }
}

/// Format with 17 significant digits; parses back to the identical bits.
pub fn fmt17(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    format!("{x:.16e}")
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(name);
    std::fs::write(&path, contents)?;
    Ok(path)
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields.join(",");
    line.push_str("\r\n");
    line
}

// ---------------------------------------------------------------------------
// verify

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutcome {
    pub family: String,
    pub t: f64,
    pub convergence: ConvergenceReport,
    pub ehrenfest: Option<EhrenfestReport>,
    pub pass: bool,
    pub failures: Vec<String>,
}

pub fn run_verify(scenario: &Scenario, out_dir: &Path) -> Result<VerifyOutcome> {
    let p = scenario.params.build()?;
    let family = scenario.family()?.build(&p, scenario.grid.as_ref())?;
    let vs = scenario.verify.clone().unwrap_or_default();
    if vs.dx_list.len() < 3 {
        return Err(Error::Scenario(format!(
            "verify needs at least 3 spacings in dx_list, got {}",
            vs.dx_list.len()
        )));
    }

    let grids = verify::refinement_grids(&family, vs.t, &p, &vs.dx_list)?;
    let convergence = verify::convergence_order(&family, vs.t, &grids, &p, vs.dt_fd)?;
    let ehrenfest = if family.is_normalizable() {
        let grid = family.default_grid(vs.t, &p)?;
        Some(verify::ehrenfest(&family, vs.t, &grid, &p, vs.dt_fd)?)
    } else {
        None
    };

    let mut failures = Vec::new();
    if !convergence.noise_floor {
        for (label, order) in [("res3", convergence.order3), ("res4", convergence.order4)] {
            match order {
                Some(o) if (ORDER_BAND.0..=ORDER_BAND.1).contains(&o) => {}
                Some(o) => failures.push(format!(
                    "{label} convergence order {o:.3} outside [{}, {}]",
                    ORDER_BAND.0, ORDER_BAND.1
                )),
                None => failures.push(format!("{label} order could not be fitted")),
            }
        }
    }
    if let Some(e) = &ehrenfest {
        if e.correction1.abs() > EHRENFEST_CORRECTION_TOL {
            failures.push(format!("correction1 = {:e} above tolerance", e.correction1));
        }
        if e.correction2.abs() > EHRENFEST_CORRECTION_TOL {
            failures.push(format!("correction2 = {:e} above tolerance", e.correction2));
        }
        if (e.lhs1 - e.rhs1).abs() > EHRENFEST_RELATION_TOL {
            failures.push(format!(
                "first Ehrenfest relation off by {:e}",
                e.lhs1 - e.rhs1
            ));
        }
        if (e.lhs2 - e.rhs2).abs() > EHRENFEST_RELATION_TOL {
            failures.push(format!(
                "second Ehrenfest relation off by {:e}",
                e.lhs2 - e.rhs2
            ));
        }
    }

    let outcome = VerifyOutcome {
        family: family.name().into(),
        t: vs.t,
        convergence,
        ehrenfest,
        pass: failures.is_empty(),
        failures,
    };

    let mut csv = csv_line(&[
        "dx".into(),
        "res3_max".into(),
        "res3_l2".into(),
        "res4_max".into(),
        "res4_l2".into(),
    ]);
    for r in &outcome.convergence.reports {
        csv.push_str(&csv_line(&[
            fmt17(r.dx),
            fmt17(r.res3_max),
            fmt17(r.res3_l2),
            fmt17(r.res4_max),
            fmt17(r.res4_l2),
        ]));
    }
    write_file(out_dir, "residuals.csv", &csv)?;
    write_file(
        out_dir,
        "verify.json",
        &serde_json::to_string_pretty(&outcome)?,
    )?;
    Ok(outcome)
}

// ---------------------------------------------------------------------------
// evolve

#[derive(Debug, Clone, Serialize)]
pub struct EvolveOutcome {
    pub family: String,
    pub t_end: f64,
    pub n_records: usize,
    pub status: String,
    pub final_norm: Option<f64>,
    pub final_energy: Option<f64>,
    pub pass: bool,
}

fn evolution_grid(
    family: &AnalyticFamily,
    spec: Option<&GridSpec>,
    t_end: f64,
    p: &ModelParams,
) -> Result<Grid1D> {
    if let Some(g) = spec {
        return g.build();
    }
    if let AnalyticFamily::PlaneWave(pw) = family {
        return periodic_box(pw.box_len, 160);
    }
    // Cover the family's track over [0, t_end] plus eight final widths,
    // with eight nodes per width.
    let w = family.width_scale(0.0, p).max(family.width_scale(t_end, p));
    let c0 = family.center(0.0, p);
    let c1 = family.center(t_end, p);
    let (lo, hi) = (c0.min(c1) - 8.0 * w, c0.max(c1) + 8.0 * w);
    let dx = w / 8.0;
    let n = ((hi - lo) / dx).ceil() as usize + 1;
    Grid1D::new(lo, lo + dx * (n - 1) as f64, n)
}

pub fn run_evolve(scenario: &Scenario, out_dir: &Path) -> Result<EvolveOutcome> {
    let p = scenario.params.build()?;
    let family = scenario.family()?.build(&p, scenario.grid.as_ref())?;
    let es = scenario.evolution.clone().unwrap_or_default();
    let grid = evolution_grid(&family, scenario.grid.as_ref(), es.t_end, &p)?;

    let boundary = match es.boundary.as_deref() {
        Some("clamp") => Boundary::Clamp,
        Some("periodic") => Boundary::Periodic {
            phase_winding: family.phase_winding(&p),
        },
        None => {
            if family.is_normalizable() {
                Boundary::Clamp
            } else {
                Boundary::Periodic {
                    phase_winding: family.phase_winding(&p),
                }
            }
        }
        Some(other) => {
            return Err(Error::Scenario(format!(
                "unknown boundary {other:?} (expected \"clamp\" or \"periodic\")"
            )))
        }
    };

    let cfg = EvolutionConfig {
        grid,
        t_end: es.t_end,
        dt: es.time_step()?,
        save_every: es.save_every,
        density_floor_rel: es.density_floor_rel,
        boundary,
    };
    let initial = family.sample(&grid, 0.0, &p);
    let potential = family.potential(&p);

    let (trace, status) = match evolve::evolve(&initial, &potential, &cfg, &p) {
        Ok(trace) => (Some(trace), "completed".to_string()),
        Err(Error::NormDrift {
            step,
            t,
            drift,
            trace,
            ..
        }) => (
            Some(*trace),
            format!("norm drift {drift:e} at step {step} (t = {t})"),
        ),
        Err(Error::BlowUp { step, t, trace }) => (
            Some(*trace),
            format!("blow-up detected at step {step} (t = {t})"),
        ),
        Err(e) => return Err(e),
    };

    let mut outcome = EvolveOutcome {
        family: family.name().into(),
        t_end: es.t_end,
        n_records: 0,
        status: status.clone(),
        final_norm: None,
        final_energy: None,
        pass: status == "completed",
    };
    if let Some(trace) = &trace {
        outcome.n_records = trace.records.len();
        if let Some(last) = trace.records.last() {
            outcome.final_norm = Some(last.norm);
            outcome.final_energy = Some(last.energy);
        }
        let mut csv = csv_line(&[
            "t".into(),
            "norm".into(),
            "mean_x".into(),
            "mean_p".into(),
            "width".into(),
            "energy".into(),
        ]);
        for r in &trace.records {
            csv.push_str(&csv_line(&[
                fmt17(r.t),
                fmt17(r.norm),
                fmt17(r.mean_x),
                fmt17(r.mean_p),
                fmt17(r.width),
                fmt17(r.energy),
            ]));
        }
        write_file(out_dir, "trace.csv", &csv)?;
    }
    write_file(
        out_dir,
        "evolve.json",
        &serde_json::to_string_pretty(&outcome)?,
    )?;
    Ok(outcome)
}

// ---------------------------------------------------------------------------
// spectrum

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumOutcome {
    pub omega_crit: f64,
    pub omega_creat: f64,
    /// ν_crit in Hz for the summary Compton quotient.
    pub nu_crit_hz: f64,
    pub q_summary: f64,
    pub rows: usize,
}

pub fn run_spectrum(scenario: &Scenario, out_dir: &Path) -> Result<SpectrumOutcome> {
    let p = scenario.params.build()?;
    let ss = scenario.spectrum.clone().unwrap_or_default();
    let crit = spectrum::omega_crit(&p)?;

    let omegas: Vec<f64> = if let Some(list) = &ss.omega_list {
        list.clone()
    } else if let Some(etas) = &ss.eta_list {
        etas.iter().map(|&e| e * crit).collect()
    } else {
        (1..=32).map(|k| crit * k as f64 / 32.0).collect()
    };

    let mut csv = csv_line(&[
        "omega".into(),
        "eta".into(),
        "q_h".into(),
        "e_st".into(),
        "delta_e_new".into(),
        "ratio".into(),
    ]);
    for &omega in &omegas {
        let line = spectrum::new_line(omega, &p)?;
        csv.push_str(&csv_line(&[
            fmt17(line.omega),
            fmt17(line.eta),
            fmt17(line.q_h),
            fmt17(line.e_st),
            fmt17(line.delta_e_new),
            fmt17(line.ratio),
        ]));
    }

    let (_, q_own) = p.compton();
    let q_summary = ss.q.unwrap_or(q_own);
    let outcome = SpectrumOutcome {
        omega_crit: crit,
        omega_creat: spectrum::omega_creat(&p),
        nu_crit_hz: spectrum::omega_crit_hz(p.m, q_summary, &p)?,
        q_summary,
        rows: omegas.len(),
    };
    write_file(out_dir, "spectrum.csv", &csv)?;
    write_file(
        out_dir,
        "spectrum.json",
        &serde_json::to_string_pretty(&outcome)?,
    )?;
    Ok(outcome)
}

// ---------------------------------------------------------------------------
// packet / soliton parameter blocks

#[derive(Debug, Clone, Serialize)]
pub struct PacketBlock {
    pub t0: f64,
    pub t0_crit_1: f64,
    pub t0_crit_2: f64,
    pub discriminant: f64,
    pub width_sq_0: f64,
    pub rows: Vec<PacketRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PacketRow {
    pub t: f64,
    pub phase_correction: f64,
    pub phase_laplacian: f64,
    pub supporting_strength: f64,
    pub phase_offset: f64,
    pub energy: f64,
}

pub fn packet_block(scenario: &Scenario, times: Option<&[f64]>) -> Result<PacketBlock> {
    let p = scenario.params.build()?;
    let t0 = match scenario.family()? {
        FamilySpec::Packet { t0 } => *t0,
        other => {
            return Err(Error::Scenario(format!(
                "the packet command needs a packet family, got {other:?}"
            )))
        }
    };
    let packet = ModifiedPacket::new(t0, &p)?;
    let (c1, c2) = crate::families::packet::critical_t0(&p);
    let default_times: Vec<f64> = [0.0, 0.5, 1.0, 2.0, 4.0].iter().map(|f| f * t0).collect();
    let times = times.map(<[f64]>::to_vec).unwrap_or(default_times);
    let rows = times
        .iter()
        .map(|&t| {
            Ok(PacketRow {
                t,
                phase_correction: crate::families::packet::phase_correction(t, t0, &p),
                phase_laplacian: crate::families::packet::phase_laplacian(t, t0, &p),
                supporting_strength: crate::families::packet::supporting_strength(t, t0, &p),
                phase_offset: crate::families::packet::phase_offset(t, t0, &p)?,
                energy: crate::families::packet::energy(t, t0, &p),
            })
        })
        .collect::<Result<_>>()?;
    Ok(PacketBlock {
        t0,
        t0_crit_1: c1,
        t0_crit_2: c2,
        discriminant: crate::families::packet::discriminant(t0, &p),
        width_sq_0: packet.width_sq(0.0, &p),
        rows,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SolitonBlock {
    pub speed: f64,
    pub half_width: f64,
    pub curvature: f64,
    pub phase_slope: f64,
    pub offset_rate: f64,
    pub physical_size: f64,
    pub characteristic_length: f64,
    pub compton_wavelength: f64,
    pub compton_quotient: f64,
    pub energy_stationary: f64,
    pub energy_total: f64,
    pub critical_strength: f64,
    /// Set for the comoving-oscillator variant.
    pub well_strength: Option<f64>,
}

pub fn soliton_block(scenario: &Scenario) -> Result<SolitonBlock> {
    let p = scenario.params.build()?;
    let (lambda_c, q) = p.compton();
    let block = |speed: f64,
                 half_width: f64,
                 curvature: f64,
                 phase_slope: f64,
                 offset_rate: f64,
                 e_st: f64,
                 e_total: f64,
                 well: Option<f64>|
     -> Result<SolitonBlock> {
        Ok(SolitonBlock {
            speed,
            half_width,
            curvature,
            phase_slope,
            offset_rate,
            physical_size: std::f64::consts::SQRT_2 * half_width,
            characteristic_length: p.characteristic_length(),
            compton_wavelength: lambda_c,
            compton_quotient: q,
            energy_stationary: e_st,
            energy_total: e_total,
            critical_strength: crate::families::soliton::critical_strength(&p)?,
            well_strength: well,
        })
    };
    match scenario.family()? {
        FamilySpec::Soliton { v, sign } => {
            let sol = FreeSoliton::new(&p, *v, branch_of(*sign)?)?;
            block(
                sol.speed,
                sol.half_width,
                sol.curvature,
                sol.phase_slope,
                sol.offset_rate,
                FreeSoliton::energy_stationary(&p)?,
                sol.energy(&p),
                None,
            )
        }
        FamilySpec::OscillatorSoliton { k, v, sign } => {
            let sol = OscillatorSoliton::new(&p, *k, *v, branch_of(*sign)?)?;
            block(
                sol.speed,
                sol.half_width,
                sol.curvature,
                sol.phase_slope,
                sol.offset_rate,
                sol.energy_stationary(&p),
                sol.energy(&p),
                Some(*k),
            )
        }
        other => Err(Error::Scenario(format!(
            "the soliton command needs a soliton family, got {other:?}"
        ))),
    }
}

/// Plain-text rendering of the packet block.
pub fn render_packet_block(block: &PacketBlock) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "modified Gaussian packet, t0 = {}", fmt17(block.t0));
    let _ = writeln!(
        s,
        "critical t0: energy unbounded below {}, negative below {}",
        fmt17(block.t0_crit_1),
        fmt17(block.t0_crit_2)
    );
    let _ = writeln!(s, "discriminant B² = {}", fmt17(block.discriminant));
    let _ = writeln!(s, "width²(0) = {}", fmt17(block.width_sq_0));
    let _ = writeln!(
        s,
        "{:>23} {:>23} {:>23} {:>23} {:>23} {:>23}",
        "t", "f", "g", "A", "h", "E"
    );
    for r in &block.rows {
        let _ = writeln!(
            s,
            "{:>23} {:>23} {:>23} {:>23} {:>23} {:>23}",
            fmt17(r.t),
            fmt17(r.phase_correction),
            fmt17(r.phase_laplacian),
            fmt17(r.supporting_strength),
            fmt17(r.phase_offset),
            fmt17(r.energy)
        );
    }
    s
}

/// Plain-text rendering of the soliton block.
pub fn render_soliton_block(block: &SolitonBlock) -> String {
    let mut s = String::new();
    let kind = if block.well_strength.is_some() {
        "comoving-oscillator"
    } else {
        "free"
    };
    let _ = writeln!(s, "{kind} Gaussian soliton");
    let rows = [
        ("speed v", block.speed),
        ("half-width s", block.half_width),
        ("phase curvature a", block.curvature),
        ("phase slope b", block.phase_slope),
        ("phase drift rate", block.offset_rate),
        ("physical size √2·s", block.physical_size),
        ("characteristic length L", block.characteristic_length),
        ("Compton wavelength", block.compton_wavelength),
        ("Compton quotient q", block.compton_quotient),
        ("stationary energy", block.energy_stationary),
        ("total energy", block.energy_total),
        ("critical well strength", block.critical_strength),
    ];
    for (label, value) in rows {
        let _ = writeln!(s, "{label:>26}: {}", fmt17(value));
    }
    if let Some(k) = block.well_strength {
        let _ = writeln!(s, "{:>26}: {}", "well strength k", fmt17(k));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn soliton_scenario() -> Scenario {
        serde_json::from_str(
            r#"{
                "params": {"preset": "natural", "C": -0.125},
                "family": {"kind": "soliton", "v": 0.3},
                "verify": {"dx_list": [0.03125, 0.015625, 0.0078125], "t": 1.0}
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn scenario_round_trip_and_build() {
        let scn = soliton_scenario();
        let p = scn.params.build().unwrap();
        assert_eq!(p.coupling, -0.125);
        let fam = scn.family().unwrap().build(&p, None).unwrap();
        assert_eq!(fam.name(), "soliton");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let bad = r#"{"params": {"preset": "natural"}, "famly": {"kind": "soliton"}}"#;
        assert!(serde_json::from_str::<Scenario>(bad).is_err());
    }

    #[test]
    fn positive_coupling_soliton_is_config_error() {
        let scn: Scenario = serde_json::from_str(
            r#"{"params": {"C": 0.1}, "family": {"kind": "soliton", "v": 0.0}}"#,
        )
        .unwrap();
        let p = scn.params.build().unwrap();
        let err = scn.family().unwrap().build(&p, None).unwrap_err();
        assert!(err
            .to_string()
            .contains("solitons require negative coupling"));
    }

    #[test]
    fn verify_runner_passes_for_soliton() {
        let scn = soliton_scenario();
        let dir = std::env::temp_dir().join("smpe_verify_test");
        let outcome = run_verify(&scn, &dir).unwrap();
        assert!(outcome.pass, "{:?}", outcome.failures);
        let csv = std::fs::read_to_string(dir.join("residuals.csv")).unwrap();
        assert!(csv.starts_with("dx,res3_max,res3_l2,res4_max,res4_l2\r\n"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn spectrum_runner_contains_quarter_eta_row() {
        let scn: Scenario = serde_json::from_str(
            r#"{
                "params": {"preset": "natural", "C": -0.125},
                "spectrum": {"eta_list": [1.0, 0.5, 0.25]}
            }"#,
        )
        .unwrap();
        let dir = std::env::temp_dir().join("smpe_spectrum_test");
        let outcome = run_spectrum(&scn, &dir).unwrap();
        assert_eq!(outcome.rows, 3);
        let csv = std::fs::read_to_string(dir.join("spectrum.csv")).unwrap();
        assert!(csv.contains(&fmt17(9.0 / 16.0)), "{csv}");
    }

    #[test]
    fn subrelativistic_param_spec() {
        let scn: Scenario =
            serde_json::from_str(r#"{"params": {"preset": "si", "subrelativistic": true}}"#)
                .unwrap();
        let p = scn.params.build().unwrap();
        assert!(p.coupling < 0.0);
        let l = p.characteristic_length();
        assert!((l / (p.compton_wavelength() / 4.0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn fmt17_round_trips() {
        for &x in &[0.3, -1.0 / 3.0, 6.626e-34, 1.0, 9.0 / 16.0] {
            let s = fmt17(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, x, "{s}");
        }
    }
}
