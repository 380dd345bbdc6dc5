//! End-to-end checks of the command-line contract: flag surface, output
//! determinism, format mirrors, and the environment override.

use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_susy-nu")
}

#[test]
fn help_lists_every_flag() {
    for sub in ["spectrum", "verify", "figure", "wavefunction", "ledger"] {
        let out = Command::new(bin()).args([sub, "--help"]).output().unwrap();
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        for flag in [
            "--potential", "--A", "--a", "--b", "--alpha", "--sign", "--n-max", "--method",
            "--units", "--grid", "--tol", "--format", "--out", "--seed",
        ] {
            assert!(text.contains(flag), "{sub} --help missing {flag}:\n{text}");
        }
        assert!(text.contains("default"), "{sub} --help should state defaults");
    }
}

#[test]
fn spectrum_output_is_deterministic() {
    let run = || {
        Command::new(bin())
            .args([
                "spectrum", "--potential", "ptp", "--a", "-2", "--b", "2", "--n-max", "4",
                "--grid", "1024",
            ])
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "byte-identical reruns expected");
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.starts_with("n,energy,method,potential,sign\n"));
    assert!(!text.contains('\r'));
    // closed-form + nu + oracle, five levels each, plus the header.
    assert_eq!(text.lines().count(), 1 + 3 * 5);
}

#[test]
fn json_mirrors_csv_records() {
    let out = Command::new(bin())
        .args([
            "spectrum", "--potential", "stp", "--method", "oracle", "--n-max", "2", "--grid",
            "512", "--format", "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row["n"].as_u64().unwrap() as usize, n);
        assert_eq!(row["method"], "oracle");
        assert_eq!(row["potential"], "stp");
        assert_eq!(row["sign"], "minus");
        assert!(row["energy"].is_number());
    }
}

#[test]
fn wavefunction_matches_oracle_column() {
    let out = Command::new(bin())
        .args([
            "wavefunction", "--n", "1", "--potential", "stp", "--A", "2", "--grid", "2048",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "theta,psi,psi_oracle,abs_diff");
    let mut max_diff = 0.0f64;
    let mut norm2 = 0.0f64;
    let mut values = Vec::new();
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 4);
        let psi: f64 = cols[1].parse().unwrap();
        let diff: f64 = cols[3].parse().unwrap();
        values.push(psi);
        max_diff = max_diff.max(diff);
        norm2 += psi * psi;
    }
    assert_eq!(values.len(), 2048);
    let h = std::f64::consts::PI / 2048.0;
    assert!((norm2 * h - 1.0).abs() < 1e-6, "norm² = {}", norm2 * h);
    assert!(max_diff < 1e-3, "max |psi - psi_oracle| = {max_diff}");
    // One sign change for the first excited state.
    let crossings = values.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
    assert_eq!(crossings, 1);
}

#[test]
fn wavefunction_rejects_plus_partner_and_large_index() {
    let out = Command::new(bin())
        .args(["wavefunction", "--n", "9", "--potential", "stp"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin())
        .args(["wavefunction", "--n", "0", "--sign", "plus"])
        .output()
        .unwrap();
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn figure_rejects_unknown_id() {
    let out = Command::new(bin()).args(["figure", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn units_env_var_sets_default_preset() {
    // Under ħ = m = 1 the box constant is κ = 1/2, halving every level.
    let run = |env: Option<&str>| -> f64 {
        let mut cmd = Command::new(bin());
        cmd.args([
            "spectrum", "--potential", "stp", "--A", "2", "--method", "oracle", "--n-max", "1",
            "--grid", "1024",
        ]);
        if let Some(v) = env {
            cmd.env("SUSY_NU_UNITS", v);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success(), "{out:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let line = text.lines().nth(2).unwrap();
        line.split(',').nth(1).unwrap().parse().unwrap()
    };
    let default_e1 = run(None);
    let figure_units_e1 = run(Some("hbar-m-1"));
    assert!((default_e1 - 5.0).abs() < 1e-4);
    assert!(
        (figure_units_e1 - default_e1).abs() > 0.5,
        "env preset should change the spectrum: {default_e1} vs {figure_units_e1}"
    );
}

#[test]
fn ledger_subcommand_emits_entries_without_gating() {
    let out = Command::new(bin())
        .args(["ledger", "--family", "ptp", "--grid", "1024", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let entries: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = entries.as_array().unwrap();
    assert!(entries.iter().any(|e| e["claim_id"] == "eq49-ptp-energies"));
    assert!(entries.iter().any(|e| e["verdict"] == "mismatch"));
    for e in entries {
        assert!(e["computed"].as_array().is_some_and(|v| !v.is_empty()));
        assert!(e["reference"].as_array().is_some_and(|v| !v.is_empty()));
        assert!(e["note"].as_str().is_some_and(|s| !s.is_empty()));
    }
}
