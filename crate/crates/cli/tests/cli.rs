use std::path::PathBuf;
use std::process::Command;

fn out_dir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("certify-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn certify(args: &[&str], dir: &PathBuf) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_certify")).args(args).env("P3CERT_OUTPUT_DIR", dir).output().unwrap()
}

#[test]
fn u_equal_to_one_is_rejected() {
    let d = out_dir("u1");
    let out = certify(&["--u", "1"], &d);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("root of unity"));
}

#[test]
fn filtered_markdown_report_lands_in_output_dir() {
    let d = out_dir("md");
    let out = certify(&["--filter", "pts.*", "--format", "markdown", "--degree", "2"], &d);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let md = std::fs::read_to_string(d.join("report.md")).unwrap();
    assert!(md.contains("| pts.S.C | pass"));
    assert!(!md.contains("| hilbert."));
}

#[test]
fn json_is_identical_apart_from_timings() {
    let d = out_dir("json");
    let strip = |p: PathBuf| {
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        for c in v["certificates"].as_array_mut().unwrap() {
            c["elapsed_ms"] = 0.into();
        }
        v
    };
    for name in ["a.json", "b.json"] {
        let path = d.join(name);
        let out = certify(&["algebra", "--degree", "2", "--seed", "5", "-o", path.to_str().unwrap()], &d);
        assert!(out.status.success());
    }
    let (a, b) = (strip(d.join("a.json")), strip(d.join("b.json")));
    assert_eq!(a, b);
    assert_eq!(a["schema_version"], 1);
    assert!(!a["coverage"].as_array().unwrap().is_empty());
}
