//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p nilcomm-core --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use nilcomm_core::sweep::{run, PRESETS};
use nilcomm_core::Limits;

fn main() -> ExitCode {
    let limits = Limits::default();
    let mut failed = 0;
    for (idx, preset) in PRESETS.iter().enumerate() {
        let start = Instant::now();
        let line = match run(preset.name, &limits) {
            Ok(report) => {
                let status = if report.passed() { "PASS" } else { "FAIL" };
                if !report.passed() {
                    failed += 1;
                }
                let mut line = format!(
                    "{status} criterion {} [{}] {}: {} checks, {} failures ({:.1}s)",
                    idx + 1,
                    preset.name,
                    preset.summary,
                    report.checked,
                    report.failures.len(),
                    start.elapsed().as_secs_f64()
                );
                for f in &report.failures {
                    line.push_str(&format!("\n    failure: {f}"));
                }
                for n in &report.notes {
                    line.push_str(&format!("\n    note: {n}"));
                }
                line
            }
            Err(e) => {
                failed += 1;
                format!("FAIL criterion {} [{}]: error {e}", idx + 1, preset.name)
            }
        };
        println!("{line}");
    }
    println!(
        "acceptance: {} of {} criteria passed",
        PRESETS.len() - failed,
        PRESETS.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
