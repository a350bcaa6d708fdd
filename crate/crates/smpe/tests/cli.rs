//! End-to-end tests of the `smpe` binary: exit codes, file formats and
//! byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn smpe(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smpe"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn temp_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("smpe_cli_{name}"));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn verify_soliton_convergence_exits_zero() {
    let dir = temp_dir("verify_ok");
    let out = smpe(
        &[
            "verify",
            "--family",
            "soliton",
            "--preset",
            "natural",
            "--C",
            "-0.125",
            "--v",
            "0.3",
            "--dx-list",
            "1/32,1/64,1/128",
            "--out",
            "run",
        ],
        &dir,
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("order3"), "{stdout}");
    let csv = std::fs::read_to_string(dir.join("run/residuals.csv")).unwrap();
    assert!(csv.starts_with("dx,res3_max,res3_l2,res4_max,res4_l2\r\n"));
    // RFC 4180: every record ends in CRLF, one header plus three grids.
    assert_eq!(csv.matches("\r\n").count(), 4);
}

#[test]
fn positive_coupling_soliton_is_usage_error() {
    let dir = temp_dir("verify_bad_c");
    let out = smpe(&["verify", "--family", "soliton", "--C", "0.1"], &dir);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("solitons require negative coupling"),
        "{stderr}"
    );
}

#[test]
fn missing_config_file_is_usage_error() {
    let dir = temp_dir("missing_config");
    let out = smpe(&["evolve", "--config", "nope.json"], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_command_prints_usage() {
    let dir = temp_dir("unknown_cmd");
    let out = smpe(&["transmogrify"], &dir);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("usage"));
}

#[test]
fn evolve_trace_has_exact_header_and_is_deterministic() {
    let dir = temp_dir("evolve_det");
    let config = dir.join("packet.json");
    std::fs::write(
        &config,
        r#"{
            "params": {"preset": "natural", "C": 0.0},
            "family": {"kind": "packet", "t0": 1.0},
            "evolution": {"t_end": 0.5, "save_every": 50}
        }"#,
    )
    .unwrap();
    let run = |out: &str| {
        let o = smpe(
            &["evolve", "--config", config.to_str().unwrap(), "--out", out],
            &dir,
        );
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
        std::fs::read(dir.join(out).join("trace.csv")).unwrap()
    };
    let a = run("a");
    let b = run("b");
    assert_eq!(
        a, b,
        "identical scenario must produce byte-identical traces"
    );

    let text = String::from_utf8(a).unwrap();
    let mut lines = text.split("\r\n");
    assert_eq!(lines.next(), Some("t,norm,mean_x,mean_p,width,energy"));
    let first = lines.next().unwrap();
    let fields: Vec<f64> = first.split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(fields.len(), 6);
    assert!((fields[1] - 1.0).abs() < 1e-9, "initial norm {}", fields[1]);
}

#[test]
fn evolve_aborted_run_exits_one() {
    // The nonlinear soliton run aborts on norm drift; that is a tolerance
    // failure, not a usage error.
    let dir = temp_dir("evolve_abort");
    let out = smpe(
        &[
            "evolve", "--family", "soliton", "--C", "-0.125", "--v", "0.3", "--t-end", "5",
            "--out", "run",
        ],
        &dir,
    );
    assert_eq!(
        out.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json = std::fs::read_to_string(dir.join("run/evolve.json")).unwrap();
    assert!(
        json.contains("norm drift") || json.contains("blow-up"),
        "{json}"
    );
}

#[test]
fn spectrum_table_contains_quarter_eta_ratio() {
    let dir = temp_dir("spectrum");
    let out = smpe(
        &[
            "spectrum",
            "--C",
            "-0.125",
            "--eta-list",
            "1,0.5,0.25",
            "--out",
            "run",
        ],
        &dir,
    );
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.join("run/spectrum.csv")).unwrap();
    assert!(csv.starts_with("omega,eta,q_h,e_st,delta_e_new,ratio\r\n"));
    assert!(csv.contains("5.6250000000000000e-1"), "{csv}");
    // The merged line at η = 1 has exactly zero offset.
    assert!(csv.contains(",0.0000000000000000e0\r\n"), "{csv}");
}

#[test]
fn spectrum_electron_critical_frequency() {
    let dir = temp_dir("spectrum_si");
    let out = smpe(
        &[
            "spectrum",
            "--preset",
            "si",
            "--subrelativistic",
            "--q",
            "1",
            "--out",
            "run",
        ],
        &dir,
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("run/spectrum.json")).unwrap())
            .unwrap();
    let nu = json["nu_crit_hz"].as_f64().unwrap();
    assert!((3.0e19..=3.2e19).contains(&nu), "nu_crit = {nu:e}");
}

#[test]
fn spectrum_range_beyond_critical_is_config_error() {
    let dir = temp_dir("spectrum_over");
    let out = smpe(
        &["spectrum", "--C", "-0.125", "--eta-list", "0.5,1.5"],
        &dir,
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no nonlinear nodeless state"));
}

#[test]
fn packet_and_soliton_blocks() {
    let dir = temp_dir("blocks");
    let out = smpe(
        &["packet", "--C", "-1/16", "--t0", "1", "--out", "run"],
        &dir,
    );
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("run/packet.json")).unwrap())
            .unwrap();
    assert_eq!(json["t0_crit_1"].as_f64().unwrap(), 0.25);
    assert_eq!(json["t0_crit_2"].as_f64().unwrap(), 0.5);

    let out = smpe(
        &["soliton", "--C", "-1/8", "--v", "1", "--out", "run"],
        &dir,
    );
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("run/soliton.json")).unwrap())
            .unwrap();
    assert_eq!(json["half_width"].as_f64().unwrap(), 1.0);
    assert_eq!(json["energy_total"].as_f64().unwrap(), 1.0);
}

#[test]
fn jobs_sweep_runs_each_config_in_its_own_directory() {
    let dir = temp_dir("sweep");
    for (name, eta) in [("a.json", 0.5), ("b.json", 0.25)] {
        std::fs::write(
            dir.join(name),
            format!(r#"{{"params": {{"C": -0.125}}, "spectrum": {{"eta_list": [{eta}]}}}}"#),
        )
        .unwrap();
    }
    let out = smpe(
        &[
            "spectrum",
            "--config",
            "a.json",
            "--config",
            "b.json",
            "--jobs",
            "2",
            "--out",
            "sweep_out",
        ],
        &dir,
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(dir.join("sweep_out/a/spectrum.csv").exists());
    assert!(dir.join("sweep_out/b/spectrum.csv").exists());
}
