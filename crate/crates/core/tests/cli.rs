//! The command-line front end: output formats, exit codes, data overrides and manifests.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn kmoduli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmoduli"))
        .args(args)
        .env_remove("KMODULI_DATA_DIR")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kmoduli-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn walls_json_lists_the_quartic_walls() {
    let o = kmoduli(&["walls", "quartic-line"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let text = v.to_string();
    for w in ["1/2", "4/5", "8/7", "7/5"] {
        assert!(text.contains(&format!("\"{w}\"")), "missing {w} in {text}");
    }
}

#[test]
fn every_subcommand_renders_markdown() {
    for args in [
        vec!["walls", "cubic-surface"],
        vec!["candidates", "quartic-line"],
        vec!["stability", "binary-octic-conic", "--at", "5/2"],
        vec!["stability", "quartic-line", "--at", "7/5"],
        vec!["centroid", "quartic-line", "--at", "7/5"],
        vec!["beta", "kwall-row8", "--at", "7/10"],
        vec!["kwalls", "5"],
        vec!["kwalls", "8", "--variant", "blp"],
    ] {
        let mut all = args.clone();
        all.extend(["--format", "md"]);
        let o = kmoduli(&all);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!stdout(&o).trim().is_empty(), "{args:?} printed nothing");
    }
}

#[test]
fn output_is_deterministic() {
    let a = kmoduli(&["walls", "quartic-line"]);
    let b = kmoduli(&["walls", "quartic-line"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_errors_exit_with_2() {
    let dir = scratch("bad");
    let bad = dir.join("broken.toml");
    std::fs::write(&bad, "kind = \"hypersurface-pair\"\nn = [\n").unwrap();
    for args in [
        vec!["walls", bad.to_str().unwrap()],
        vec!["walls", "no-such-problem"],
        vec!["kwalls", "8"],
        vec!["kwalls", "11"],
        vec!["stability", "quartic-line", "--at", "x/y"],
        vec!["walls", "quartic-line", "--format", "yaml"],
    ] {
        let o = kmoduli(&args);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn budget_errors_exit_with_3() {
    let o = kmoduli(&["candidates", "quartic-line", "--cap", "3"]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("BudgetExceeded"));
}

#[test]
fn inconsistent_models_exit_with_4() {
    let dir = scratch("model");
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for sub in ["configs", "models"] {
        std::fs::create_dir_all(dir.join(sub)).unwrap();
    }
    std::fs::copy(data.join("configs/deg7-line.toml"), dir.join("configs/deg7-line.toml")).unwrap();
    // The line through the two points has class H - E1 - E2, so its square is -1, not -2.
    let model = std::fs::read_to_string(data.join("models/sigma7-ns.toml")).unwrap();
    let (head, tail) = model.split_at(model.find("label = \"l\"").unwrap());
    let broken = format!("{head}{}", tail.replacen("self_intersection = -1", "self_intersection = -2", 1));
    std::fs::write(dir.join("models/sigma7-ns.toml"), broken).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_kmoduli"))
        .args(["beta", "deg7-line"])
        .env("KMODULI_DATA_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(code(&o), 4, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn data_dir_override_is_honored() {
    let dir = scratch("data");
    std::fs::create_dir_all(dir.join("configs")).unwrap();
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/configs/quartic-line.toml");
    let text = std::fs::read_to_string(src)
        .unwrap()
        .replace("d = 4", "d = 3")
        .replace("f = [[1, 0, 3], [0, 3, 1]]", "f = [[1, 1, 1]]");
    std::fs::write(dir.join("configs/quartic-line.toml"), text).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_kmoduli"))
        .args(["walls", "quartic-line"])
        .env("KMODULI_DATA_DIR", &dir)
        .output()
        .unwrap();
    // The override now describes plane cubics with a line.
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_ne!(o.stdout, kmoduli(&["walls", "quartic-line"]).stdout);

    let empty = scratch("empty");
    let o = Command::new(env!("CARGO_BIN_EXE_kmoduli"))
        .args(["walls", "quartic-line"])
        .env("KMODULI_DATA_DIR", &empty)
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn manifest_and_out_files_are_written() {
    let dir = scratch("manifest");
    let out = dir.join("walls.json");
    let man = dir.join("manifest.json");
    let o = kmoduli(&[
        "walls",
        "quartic-line",
        "--out",
        out.to_str().unwrap(),
        "--manifest",
        man.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).is_empty());
    assert!(std::fs::read_to_string(&out).unwrap().contains("7/5"));
    let m: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&man).unwrap()).unwrap();
    assert_eq!(m["command"], "walls");
    assert!(m["output_paths"].to_string().contains("walls.json"), "{m}");
}
