//! End-to-end tests of the command-line binary: certificates round-trip
//! through real files, exit codes track verification results, and tampered
//! inputs are rejected.

use std::path::PathBuf;
use std::process::{Command, Output};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fuchsian-forge"))
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

/// A per-test scratch path that is removed on drop.
struct ScratchFile(PathBuf);

impl ScratchFile {
    fn new(name: &str) -> Self {
        let path = std::env::temp_dir().join(format!(
            "fuchsian-forge-cli-{}-{name}",
            std::process::id()
        ));
        let _ = std::fs::remove_file(&path);
        ScratchFile(path)
    }

    fn as_str(&self) -> &str {
        self.0.to_str().expect("temp paths are unicode")
    }
}

impl Drop for ScratchFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

#[test]
fn realize_verify_and_matrices_round_trip_through_files() {
    let cert = ScratchFile::new("roundtrip.json");

    let realized = run(&[
        "realize",
        "--field",
        "x^2-2",
        "--embedding",
        "1",
        "--a",
        "x",
        "--b",
        "x",
        "--out",
        cert.as_str(),
    ]);
    let text = stdout(&realized);
    assert!(
        realized.status.success(),
        "realize failed:\n{text}\n{}",
        stderr(&realized)
    );
    assert!(text.contains("certificate VALID"), "report:\n{text}");
    assert!(text.contains("r = "), "parameters echoed:\n{text}");
    assert!(text.contains("certificate written to"), "path echoed:\n{text}");

    let verified = run(&["verify", cert.as_str()]);
    assert!(verified.status.success(), "verify failed:\n{}", stdout(&verified));
    assert!(stdout(&verified).contains("certificate VALID"));

    let flat = run(&["matrices", cert.as_str(), "--prec-bits", "96"]);
    let flat_text = stdout(&flat);
    assert!(flat.status.success(), "matrices failed:\n{flat_text}");
    assert!(
        flat_text.contains("# format: fuchsian-forge-matrices/1"),
        "flat header:\n{flat_text}"
    );
    assert!(
        flat_text.contains("boundary relation holds: [rho,sigma]*[rho',sigma']^-1 = identity"),
        "relation line:\n{flat_text}"
    );

    let doc = ScratchFile::new("matrices.json");
    let attachment = run(&[
        "matrices",
        cert.as_str(),
        "--prec-bits",
        "96",
        "--M",
        "2",
        "--format",
        "attachment",
        "--out",
        doc.as_str(),
    ]);
    assert!(attachment.status.success(), "attachment export failed:\n{}", stdout(&attachment));
    let written = std::fs::read_to_string(&doc.0).expect("document written");
    assert!(written.contains("fuchsian-forge-matrices/1"));
    let parsed: serde_json::Value = serde_json::from_str(&written).expect("valid JSON");
    assert_eq!(parsed["m"], serde_json::Value::String("2".to_string()));
}

#[test]
fn verify_rejects_a_tampered_certificate() {
    let cert = ScratchFile::new("tamper.json");
    let realized = run(&[
        "realize",
        "--field",
        "x",
        "--a",
        "2",
        "--b",
        "3",
        "--out",
        cert.as_str(),
    ]);
    assert!(realized.status.success(), "realize failed:\n{}", stderr(&realized));

    let text = std::fs::read_to_string(&cert.0).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    // nudge the first coordinate of r; every downstream identity breaks
    doc["r"][0] = serde_json::Value::String("999999/7".to_string());
    std::fs::write(&cert.0, serde_json::to_string_pretty(&doc).unwrap()).unwrap();

    let verified = run(&["verify", cert.as_str()]);
    let report = stdout(&verified);
    assert!(!verified.status.success(), "tampered certificate accepted:\n{report}");
    assert!(report.contains("certificate INVALID"), "verdict line:\n{report}");
    assert!(report.contains("FAIL"), "failing checks listed:\n{report}");

    // emission must refuse the tampered certificate outright
    let matrices = run(&["matrices", cert.as_str()]);
    assert!(!matrices.status.success());
    assert!(stderr(&matrices).contains("error:"), "stderr:\n{}", stderr(&matrices));
}

#[test]
fn bad_arguments_exit_nonzero_with_a_diagnostic() {
    let missing = run(&["verify", "/nonexistent/certificate.json"]);
    assert!(!missing.status.success());
    assert!(stderr(&missing).contains("error:"));

    let out = ScratchFile::new("never-written.json");
    let bad_epsilon = run(&[
        "realize",
        "--field",
        "x",
        "--a",
        "2",
        "--b",
        "3",
        "--epsilon",
        "2",
        "--out",
        out.as_str(),
    ]);
    assert!(!bad_epsilon.status.success());
    assert!(stderr(&bad_epsilon).contains("error:"));
    assert!(!out.0.exists(), "no certificate on failed runs");

    let unsplit = run(&[
        "realize",
        "--field",
        "x",
        "--a=-1",
        "--b=-1",
        "--out",
        out.as_str(),
    ]);
    assert!(!unsplit.status.success());
    assert!(stderr(&unsplit).contains("error:"));

    let bad_field = run(&[
        "realize",
        "--field",
        "x^2+1",
        "--a",
        "2",
        "--b",
        "3",
        "--out",
        out.as_str(),
    ]);
    assert!(!bad_field.status.success(), "a field with no real embedding is rejected");
    assert!(stderr(&bad_field).contains("error:"));
}

#[test]
fn matrices_rejects_bad_scales_and_formats() {
    let cert = ScratchFile::new("matrix-args.json");
    let realized = run(&[
        "realize",
        "--field",
        "x",
        "--a",
        "1",
        "--b",
        "1",
        "--out",
        cert.as_str(),
    ]);
    assert!(realized.status.success(), "realize failed:\n{}", stderr(&realized));

    let bad_format = run(&["matrices", cert.as_str(), "--format", "yaml"]);
    assert!(!bad_format.status.success());
    assert!(stderr(&bad_format).contains("error:"));

    let bad_scale = run(&["matrices", cert.as_str(), "--M", "0"]);
    assert!(!bad_scale.status.success());
    assert!(stderr(&bad_scale).contains("error:"));

    let bad_scale_negative = run(&["matrices", cert.as_str(), "--M=-1/2"]);
    assert!(!bad_scale_negative.status.success());
    assert!(stderr(&bad_scale_negative).contains("error:"));
}

#[test]
fn theorem23_proves_the_suite_and_exports_the_table() {
    let plain = run(&["theorem23"]);
    let text = stdout(&plain);
    assert!(plain.status.success(), "theorem23 failed:\n{text}");
    assert!(text.contains("PASS all boundary-word traces"));
    assert!(text.contains("PASS product generator matches its closed form"));
    assert!(text.contains("PASS commutator identities"));
    assert!(text.contains("tr(rho) = "), "table rows:\n{text}");
    assert!(text.contains("tr(sigma rho' sigma') = "), "last table row:\n{text}");

    let table = ScratchFile::new("trace-table.json");
    let exported = run(&["theorem23", "--out", table.as_str()]);
    assert!(exported.status.success());
    let written = std::fs::read_to_string(&table.0).expect("table written");
    let parsed: serde_json::Value = serde_json::from_str(&written).expect("valid JSON");
    assert_eq!(
        parsed["format"],
        serde_json::Value::String("fuchsian-forge-trace-table/1".to_string())
    );
    assert_eq!(parsed["words"].as_array().map(Vec::len), Some(14));
}
