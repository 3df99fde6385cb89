//! Report envelope and exit-code conventions.
//!
//! Every command prints exactly one JSON envelope to stdout (or a TSV
//! rendering of its tabular payload with `--tsv`). Identical invocations
//! produce byte-identical output up to the engine version field.
//!
//! Exit codes: 0 ok, 2 argument/parse errors, 3 resource guard, 4
//! classification violations, 5 refusals.

use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;
pub const EXIT_REFUSED: i32 = 5;

#[derive(Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Refused,
    Violation,
}

#[derive(Serialize)]
pub struct ReportEnvelope<I: Serialize, R: Serialize> {
    pub command: &'static str,
    pub inputs: I,
    pub status: Status,
    pub result: R,
    pub engine_version: &'static str,
}

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Prints the envelope as pretty JSON and returns the exit code.
pub fn emit<I: Serialize, R: Serialize>(envelope: &ReportEnvelope<I, R>, code: i32) -> i32 {
    println!(
        "{}",
        serde_json::to_string_pretty(envelope).expect("report serialization is infallible")
    );
    code
}

/// Prints rows as tab-separated lines with a header.
pub fn emit_tsv(header: &[&str], rows: &[Vec<String>], code: i32) -> i32 {
    println!("{}", header.join("\t"));
    for row in rows {
        println!("{}", row.join("\t"));
    }
    code
}

/// Prints a one-line error to stderr and returns the exit code.
pub fn fail(message: &str, code: i32) -> i32 {
    eprintln!("error: {message}");
    code
}
