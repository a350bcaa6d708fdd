//! Flag parsing and dispatch for the `smpe` binary.
//!
//! Subcommands: verify | evolve | spectrum | packet | soliton. A scenario
//! can come from `--config scenario.json`, from flags, or both (flags win).
//! Exit codes: 0 on success, 1 on tolerance failure, 2 on usage or config
//! errors.

use crate::error::{Error, Result};
use crate::scenario::{
    self, EvolutionSpec, FamilySpec, GridSpec, Scenario, SpectrumSpec, VerifySpec,
};
use std::path::{Path, PathBuf};

pub const USAGE: &str = "\
usage: smpe <command> [flags]

commands:
  verify     residual convergence orders and Ehrenfest relations
  evolve     time-integrate a family and write the observable trace
  spectrum   harmonic-oscillator spectrum table
  packet     print the modified-packet parameter block
  soliton    print the soliton parameter block

scenario selection:
  --config PATH          scenario JSON (repeatable; sweeps run each one)
  --preset natural|si    unit preset (default natural)
  --C X                  nonlinear coupling (accepts fractions like -1/8)
  --hbar X --m X --c X   explicit constants
  --subrelativistic      use C_sub = -hbar^4/16m^3c^2
  --family NAME          coherent|packet|soliton|oscillator_soliton|plane_wave
  --omega X --alpha X --delta X --t0 X --k X --v X --sign +1|-1 --box-len X

command settings:
  --dx-list A,B,C        verify spacings (fractions allowed), default 1/32,1/64,1/128
  --t X                  verify evaluation time (default 1)
  --dt-fd X              verify time-difference step (default 1e-6)
  --t-end X --dt X|auto --save-every N --boundary clamp|periodic
  --x-min X --x-max X --n N
  --eta-list A,B,C       spectrum frequency ratios
  --q X                  Compton quotient for the nu_crit summary
  --out DIR              output directory (default smpe_out)
  --jobs N               run multiple --config scenarios concurrently
";

/// Parse a float, accepting simple fractions like "1/32".
pub fn parse_number(s: &str) -> Result<f64> {
    if let Some((num, den)) = s.split_once('/') {
        let n: f64 = num
            .trim()
            .parse()
            .map_err(|_| Error::Scenario(format!("cannot parse number {s:?}")))?;
        let d: f64 = den
            .trim()
            .parse()
            .map_err(|_| Error::Scenario(format!("cannot parse number {s:?}")))?;
        if d == 0.0 {
            return Err(Error::Scenario(format!("zero denominator in {s:?}")));
        }
        return Ok(n / d);
    }
    s.parse()
        .map_err(|_| Error::Scenario(format!("cannot parse number {s:?}")))
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',').map(|part| parse_number(part.trim())).collect()
}

#[derive(Debug, Default)]
struct Flags {
    configs: Vec<PathBuf>,
    preset: Option<String>,
    hbar: Option<f64>,
    m: Option<f64>,
    c: Option<f64>,
    coupling: Option<f64>,
    subrelativistic: bool,
    family: Option<String>,
    omega: Option<f64>,
    alpha: Option<f64>,
    delta: Option<f64>,
    t0: Option<f64>,
    k: Option<f64>,
    v: Option<f64>,
    sign: Option<i8>,
    box_len: Option<f64>,
    dx_list: Option<Vec<f64>>,
    t: Option<f64>,
    dt_fd: Option<f64>,
    t_end: Option<f64>,
    dt: Option<String>,
    save_every: Option<usize>,
    boundary: Option<String>,
    x_min: Option<f64>,
    x_max: Option<f64>,
    n: Option<usize>,
    eta_list: Option<Vec<f64>>,
    q: Option<f64>,
    out: Option<PathBuf>,
    jobs: usize,
}

fn parse_flags(args: &[String]) -> Result<Flags> {
    let mut flags = Flags {
        jobs: 1,
        ..Flags::default()
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut value = |name: &str| -> Result<&String> {
            it.next()
                .ok_or_else(|| Error::Scenario(format!("{name} needs a value")))
        };
        match arg.as_str() {
            "--config" => flags.configs.push(PathBuf::from(value("--config")?)),
            "--preset" => flags.preset = Some(value("--preset")?.clone()),
            "--hbar" => flags.hbar = Some(parse_number(value("--hbar")?)?),
            "--m" => flags.m = Some(parse_number(value("--m")?)?),
            "--c" => flags.c = Some(parse_number(value("--c")?)?),
            "--C" => flags.coupling = Some(parse_number(value("--C")?)?),
            "--subrelativistic" => flags.subrelativistic = true,
            "--family" => flags.family = Some(value("--family")?.clone()),
            "--omega" => flags.omega = Some(parse_number(value("--omega")?)?),
            "--alpha" => flags.alpha = Some(parse_number(value("--alpha")?)?),
            "--delta" => flags.delta = Some(parse_number(value("--delta")?)?),
            "--t0" => flags.t0 = Some(parse_number(value("--t0")?)?),
            "--k" => flags.k = Some(parse_number(value("--k")?)?),
            "--v" => flags.v = Some(parse_number(value("--v")?)?),
            "--sign" => {
                let s = value("--sign")?;
                flags.sign = Some(match s.as_str() {
                    "+1" | "1" | "+" => 1,
                    "-1" | "-" => -1,
                    other => {
                        return Err(Error::Scenario(format!(
                            "sign must be +1 or -1, got {other}"
                        )))
                    }
                });
            }
            "--box-len" => flags.box_len = Some(parse_number(value("--box-len")?)?),
            "--dx-list" => flags.dx_list = Some(parse_list(value("--dx-list")?)?),
            "--t" => flags.t = Some(parse_number(value("--t")?)?),
            "--dt-fd" => flags.dt_fd = Some(parse_number(value("--dt-fd")?)?),
            "--t-end" => flags.t_end = Some(parse_number(value("--t-end")?)?),
            "--dt" => flags.dt = Some(value("--dt")?.clone()),
            "--save-every" => {
                flags.save_every = Some(
                    value("--save-every")?
                        .parse()
                        .map_err(|_| Error::Scenario("--save-every needs an integer".into()))?,
                )
            }
            "--boundary" => flags.boundary = Some(value("--boundary")?.clone()),
            "--x-min" => flags.x_min = Some(parse_number(value("--x-min")?)?),
            "--x-max" => flags.x_max = Some(parse_number(value("--x-max")?)?),
            "--n" => {
                flags.n = Some(
                    value("--n")?
                        .parse()
                        .map_err(|_| Error::Scenario("--n needs an integer".into()))?,
                )
            }
            "--eta-list" => flags.eta_list = Some(parse_list(value("--eta-list")?)?),
            "--q" => flags.q = Some(parse_number(value("--q")?)?),
            "--out" => flags.out = Some(PathBuf::from(value("--out")?)),
            "--jobs" => {
                flags.jobs = value("--jobs")?
                    .parse()
                    .map_err(|_| Error::Scenario("--jobs needs an integer".into()))?;
                if flags.jobs == 0 {
                    return Err(Error::Scenario("--jobs must be at least 1".into()));
                }
            }
            other => return Err(Error::Scenario(format!("unknown flag {other:?}"))),
        }
    }
    Ok(flags)
}

fn apply_flags(mut scn: Scenario, flags: &Flags) -> Result<Scenario> {
    if let Some(p) = &flags.preset {
        scn.params.preset = Some(p.clone());
    }
    if flags.hbar.is_some() {
        scn.params.hbar = flags.hbar;
    }
    if flags.m.is_some() {
        scn.params.m = flags.m;
    }
    if flags.c.is_some() {
        scn.params.c = flags.c;
    }
    if flags.coupling.is_some() {
        scn.params.coupling = flags.coupling;
    }
    if flags.subrelativistic {
        scn.params.subrelativistic = true;
    }

    if let Some(name) = &flags.family {
        scn.family = Some(match name.as_str() {
            "coherent" => FamilySpec::Coherent {
                omega: flags
                    .omega
                    .ok_or_else(|| Error::Scenario("the coherent family needs --omega".into()))?,
                alpha: flags.alpha.unwrap_or(0.0),
                delta: flags.delta.unwrap_or(0.0),
            },
            "packet" => FamilySpec::Packet {
                t0: flags
                    .t0
                    .ok_or_else(|| Error::Scenario("the packet family needs --t0".into()))?,
            },
            "soliton" => FamilySpec::Soliton {
                v: flags.v.unwrap_or(0.0),
                sign: flags.sign,
            },
            "oscillator_soliton" => FamilySpec::OscillatorSoliton {
                k: flags.k.ok_or_else(|| {
                    Error::Scenario("the oscillator_soliton family needs --k".into())
                })?,
                v: flags.v.unwrap_or(0.0),
                sign: flags.sign,
            },
            "plane_wave" => FamilySpec::PlaneWave {
                v: flags.v.unwrap_or(0.0),
                box_len: flags.box_len,
            },
            other => return Err(Error::Scenario(format!("unknown family {other:?}"))),
        });
    } else if let Some(fam) = &mut scn.family {
        // Parameter flags tweak an existing family block.
        match fam {
            FamilySpec::Coherent {
                omega,
                alpha,
                delta,
            } => {
                if let Some(x) = flags.omega {
                    *omega = x;
                }
                if let Some(x) = flags.alpha {
                    *alpha = x;
                }
                if let Some(x) = flags.delta {
                    *delta = x;
                }
            }
            FamilySpec::Packet { t0 } => {
                if let Some(x) = flags.t0 {
                    *t0 = x;
                }
            }
            FamilySpec::Soliton { v, sign } => {
                if let Some(x) = flags.v {
                    *v = x;
                }
                if flags.sign.is_some() {
                    *sign = flags.sign;
                }
            }
            FamilySpec::OscillatorSoliton { k, v, sign } => {
                if let Some(x) = flags.k {
                    *k = x;
                }
                if let Some(x) = flags.v {
                    *v = x;
                }
                if flags.sign.is_some() {
                    *sign = flags.sign;
                }
            }
            FamilySpec::PlaneWave { v, box_len } => {
                if let Some(x) = flags.v {
                    *v = x;
                }
                if flags.box_len.is_some() {
                    *box_len = flags.box_len;
                }
            }
        }
    }

    if flags.dx_list.is_some() || flags.t.is_some() || flags.dt_fd.is_some() {
        let mut vs = scn.verify.clone().unwrap_or_default();
        if let Some(list) = &flags.dx_list {
            vs.dx_list = list.clone();
        }
        if let Some(t) = flags.t {
            vs.t = t;
        }
        if let Some(dt) = flags.dt_fd {
            vs.dt_fd = dt;
        }
        scn.verify = Some(vs);
    }

    if flags.t_end.is_some()
        || flags.dt.is_some()
        || flags.save_every.is_some()
        || flags.boundary.is_some()
    {
        let mut es = scn.evolution.clone().unwrap_or_default();
        if let Some(t) = flags.t_end {
            es.t_end = t;
        }
        if let Some(dt) = &flags.dt {
            es.dt = Some(if dt == "auto" {
                serde_json::Value::String("auto".into())
            } else {
                serde_json::json!(parse_number(dt)?)
            });
        }
        if let Some(se) = flags.save_every {
            es.save_every = se;
        }
        if let Some(b) = &flags.boundary {
            es.boundary = Some(b.clone());
        }
        scn.evolution = Some(es);
    }

    if let (Some(x_min), Some(x_max), Some(n)) = (flags.x_min, flags.x_max, flags.n) {
        scn.grid = Some(GridSpec { x_min, x_max, n });
    }

    if flags.eta_list.is_some() || flags.q.is_some() {
        let mut ss = scn.spectrum.clone().unwrap_or_default();
        if let Some(list) = &flags.eta_list {
            ss.eta_list = Some(list.clone());
        }
        if flags.q.is_some() {
            ss.q = flags.q;
        }
        scn.spectrum = Some(ss);
    }

    Ok(scn)
}

fn ensure_defaults(scn: &mut Scenario, command: &str, flags: &Flags) {
    match command {
        "verify" if scn.verify.is_none() => scn.verify = Some(VerifySpec::default()),
        "evolve" if scn.evolution.is_none() => scn.evolution = Some(EvolutionSpec::default()),
        "spectrum" if scn.spectrum.is_none() => scn.spectrum = Some(SpectrumSpec::default()),
        // The parameter-block commands imply their family.
        "soliton" if scn.family.is_none() => {
            scn.family = Some(match flags.k {
                Some(k) => FamilySpec::OscillatorSoliton {
                    k,
                    v: flags.v.unwrap_or(0.0),
                    sign: flags.sign,
                },
                None => FamilySpec::Soliton {
                    v: flags.v.unwrap_or(0.0),
                    sign: flags.sign,
                },
            });
        }
        "packet" if scn.family.is_none() => {
            if let Some(t0) = flags.t0 {
                scn.family = Some(FamilySpec::Packet { t0 });
            }
        }
        _ => {}
    }
}

fn out_dir(scn: &Scenario, flags: &Flags) -> PathBuf {
    flags
        .out
        .clone()
        .or_else(|| scn.out.as_ref().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("smpe_out"))
}

/// Exit code for an error: config and usage problems are 2.
fn code_of(err: &Error) -> i32 {
    match err {
        Error::NormDrift { .. } | Error::BlowUp { .. } => 1,
        _ => 2,
    }
}

fn run_one(command: &str, scn: &Scenario, dir: &Path) -> Result<i32> {
    match command {
        "verify" => {
            let outcome = scenario::run_verify(scn, dir)?;
            match (outcome.convergence.order3, outcome.convergence.order4) {
                (Some(o3), Some(o4)) => {
                    println!("{}: order3 = {o3:.3}, order4 = {o4:.3}", outcome.family)
                }
                _ => println!("{}: residuals at round-off", outcome.family),
            }
            if outcome.convergence.noise_floor {
                println!("noise floor reached");
            }
            if let Some(e) = &outcome.ehrenfest {
                println!(
                    "ehrenfest: |corr1| = {:.3e}, |corr2| = {:.3e}",
                    e.correction1.abs(),
                    e.correction2.abs()
                );
            }
            if outcome.pass {
                println!("verify: PASS ({})", dir.display());
                Ok(0)
            } else {
                for f in &outcome.failures {
                    eprintln!("verify: {f}");
                }
                Ok(1)
            }
        }
        "evolve" => {
            let outcome = scenario::run_evolve(scn, dir)?;
            println!(
                "evolve {}: {} ({} records) -> {}",
                outcome.family,
                outcome.status,
                outcome.n_records,
                dir.join("trace.csv").display()
            );
            Ok(if outcome.pass { 0 } else { 1 })
        }
        "spectrum" => {
            let outcome = scenario::run_spectrum(scn, dir)?;
            println!(
                "spectrum: {} rows, omega_crit = {}, nu_crit = {} Hz (q = {})",
                outcome.rows,
                scenario::fmt17(outcome.omega_crit),
                scenario::fmt17(outcome.nu_crit_hz),
                scenario::fmt17(outcome.q_summary),
            );
            Ok(0)
        }
        "packet" => {
            let block = scenario::packet_block(scn, None)?;
            print!("{}", scenario::render_packet_block(&block));
            std::fs::create_dir_all(dir)?;
            std::fs::write(
                dir.join("packet.json"),
                serde_json::to_string_pretty(&block)?,
            )?;
            Ok(0)
        }
        "soliton" => {
            let block = scenario::soliton_block(scn)?;
            print!("{}", scenario::render_soliton_block(&block));
            std::fs::create_dir_all(dir)?;
            std::fs::write(
                dir.join("soliton.json"),
                serde_json::to_string_pretty(&block)?,
            )?;
            Ok(0)
        }
        other => Err(Error::Scenario(format!("unknown command {other:?}"))),
    }
}

/// Entry point behind `main`; returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    let Some(command) = args.first().map(String::as_str) else {
        eprint!("{USAGE}");
        return 2;
    };
    if matches!(command, "-h" | "--help" | "help") {
        print!("{USAGE}");
        return 0;
    }
    if !matches!(
        command,
        "verify" | "evolve" | "spectrum" | "packet" | "soliton"
    ) {
        eprintln!("unknown command {command:?}");
        eprint!("{USAGE}");
        return 2;
    }
    let flags = match parse_flags(&args[1..]) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };

    // Load scenarios: each --config is one scenario; none means flags-only.
    let mut scenarios: Vec<(String, Scenario)> = Vec::new();
    if flags.configs.is_empty() {
        scenarios.push(("scenario".into(), Scenario::default()));
    } else {
        for path in &flags.configs {
            match Scenario::from_file(path) {
                Ok(s) => {
                    let stem = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_else(|| "scenario".into());
                    scenarios.push((stem, s));
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            }
        }
    }

    let mut prepared = Vec::new();
    for (stem, scn) in scenarios {
        match apply_flags(scn, &flags) {
            Ok(mut s) => {
                ensure_defaults(&mut s, command, &flags);
                prepared.push((stem, s));
            }
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        }
    }

    let multi = prepared.len() > 1;
    let run_entry = |(stem, scn): &(String, Scenario)| -> i32 {
        let base = out_dir(scn, &flags);
        let dir = if multi { base.join(stem) } else { base };
        match run_one(command, scn, &dir) {
            Ok(code) => code,
            Err(e) => {
                eprintln!("error: {e}");
                code_of(&e)
            }
        }
    };

    if flags.jobs <= 1 || prepared.len() <= 1 {
        prepared.iter().map(run_entry).max().unwrap_or(2)
    } else {
        // Sweep mode: each scenario gets its own output directory, so the
        // workers never contend.
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for chunk in prepared.chunks(prepared.len().div_ceil(flags.jobs)) {
                handles.push(scope.spawn(move || chunk.iter().map(run_entry).max().unwrap_or(0)));
            }
            handles
                .into_iter()
                .map(|h| h.join().unwrap_or(2))
                .max()
                .unwrap_or(2)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_parsing() {
        assert_eq!(parse_number("1/32").unwrap(), 1.0 / 32.0);
        assert_eq!(parse_number("-0.125").unwrap(), -0.125);
        assert_eq!(parse_number("-1/8").unwrap(), -0.125);
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("abc").is_err());
        assert_eq!(parse_list("1/32,1/64,1/128").unwrap().len(), 3);
    }

    #[test]
    fn flags_build_a_soliton_scenario() {
        let args: Vec<String> = [
            "--family", "soliton", "--preset", "natural", "--C", "-0.125", "--v", "0.3",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        let flags = parse_flags(&args).unwrap();
        let scn = apply_flags(Scenario::default(), &flags).unwrap();
        let p = scn.params.build().unwrap();
        assert_eq!(p.coupling, -0.125);
        assert!(matches!(scn.family, Some(FamilySpec::Soliton { v, .. }) if v == 0.3));
    }

    #[test]
    fn unknown_flag_is_rejected() {
        let args = vec!["--wat".to_string()];
        assert!(parse_flags(&args).is_err());
    }
}
