//! Golden command-line transcripts.
//!
//! `tests/golden/transcripts.txt` holds blocks of the form
//!
//! ```text
//! $ gb --order lex @ideals/pair.json
//! x^2 + y^2
//! [exit 0]
//! ```
//!
//! Arguments are whitespace separated; a leading `@` marks a path relative to
//! `tests/golden`. Lines between the command and the exit marker are the
//! expected stdout, except lines starting with `! `, which are expected on
//! stderr.

use std::path::PathBuf;

use nss_core::cli::run;

pub struct Case {
    pub line: usize,
    pub command: String,
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn load_cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("transcripts.txt")).expect("transcripts present");
    let mut cases = Vec::new();
    let mut current: Option<Case> = None;
    for (k, line) in text.lines().enumerate() {
        if let Some(cmd) = line.strip_prefix("$ ") {
            assert!(current.is_none(), "line {}: command inside open block", k + 1);
            current = Some(Case {
                line: k + 1,
                command: cmd.to_string(),
                stdout: String::new(),
                stderr: String::new(),
                code: -1,
            });
        } else if let Some(code) = line.strip_prefix("[exit ").and_then(|s| s.strip_suffix(']')) {
            let mut case = current.take().expect("exit marker closes a block");
            case.code = code.parse().expect("numeric exit code");
            cases.push(case);
        } else if let Some(case) = current.as_mut() {
            match line.strip_prefix("! ").or((line == "!").then_some("")) {
                Some(err) => {
                    case.stderr.push_str(err);
                    case.stderr.push('\n');
                }
                None => {
                    case.stdout.push_str(line);
                    case.stdout.push('\n');
                }
            }
        }
    }
    assert!(current.is_none(), "unterminated block");
    cases
}

fn argv(command: &str) -> Vec<String> {
    let dir = golden_dir();
    std::iter::once("nss".to_string())
        .chain(command.split_whitespace().map(|a| match a.strip_prefix('@') {
            Some(rel) => dir.join(rel).to_string_lossy().into_owned(),
            None => a.to_string(),
        }))
        .collect()
}

/// Runs every case and returns a description of each mismatch.
pub fn check_all() -> (usize, Vec<String>) {
    let cases = load_cases();
    let mut failures = Vec::new();
    for case in &cases {
        let out = run(argv(&case.command));
        if out.stdout != case.stdout || out.code != case.code || out.stderr != case.stderr {
            failures.push(format!(
                "line {}: `{}`\n  expected exit {} stdout {:?} stderr {:?}\n  got      exit {} stdout {:?} stderr {:?}",
                case.line, case.command, case.code, case.stdout, case.stderr, out.code, out.stdout, out.stderr
            ));
        }
    }
    (cases.len(), failures)
}
