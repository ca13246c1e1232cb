//! Shared helpers for the golden corpus.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use serde_json::Value;

pub fn corpus() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .expect("golden directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    files
}

/// Runs one request through the binary; returns the subcommand and
/// `"exit: N"` followed by the response bytes.
pub fn run(case: &Path) -> (String, String) {
    let spec: Value = serde_json::from_str(&std::fs::read_to_string(case).unwrap()).unwrap();
    let cmd = spec["command"].as_str().unwrap().to_string();
    let flags: Vec<String> = spec["flags"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f.as_str().unwrap().to_string())
        .collect();
    let body = serde_json::to_string(&spec["request"]).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_genschur"))
        .arg(&cmd)
        .args(&flags)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(body.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let code = out.status.code().expect("exit code");
    (cmd, format!("exit: {code}\n{}", String::from_utf8(out.stdout).unwrap()))
}

/// Compares every case with its `.expected` file, or rewrites them when
/// `update` is set. Returns the subcommands seen and any mismatches.
pub fn check_corpus(update: bool) -> (std::collections::BTreeSet<String>, Vec<String>) {
    let mut commands = std::collections::BTreeSet::new();
    let mut failures = Vec::new();
    for case in corpus() {
        let (cmd, got) = run(&case);
        commands.insert(cmd);
        let (_, again) = run(&case);
        if got != again {
            failures.push(format!("{}: output differs between runs", case.display()));
        }
        let expected = case.with_extension("expected");
        if update {
            std::fs::write(&expected, &got).unwrap();
            continue;
        }
        match std::fs::read_to_string(&expected) {
            Ok(want) if want == got => {}
            Ok(want) => failures.push(format!("{}:\n--- want\n{want}--- got\n{got}", case.display())),
            Err(_) => failures.push(format!("{}: no expected file", case.display())),
        }
    }
    (commands, failures)
}
