//! Programmatic verification suites.
//!
//! The same checks behind `rabi-qes verify` are callable as a library:
//! golden condition-polynomial forms, analytic oracle limits, and Juddian
//! cross-validation, each reported with its measured quantity.
//!
//! ```bash
//! cargo run -p rabi-qes --example verification_report
//! ```

use rabi_qes::config::Config;
use rabi_qes::verify::{run_suite, Suite};

fn main() {
    let report = run_suite(Suite::All, &Config::default());
    for check in &report.checks {
        println!(
            "[{}] {:<36} measured={} ({})",
            if check.pass { "PASS" } else { "FAIL" },
            check.name,
            check.measured,
            check.detail
        );
    }
    println!("\n{} passed, {} failed", report.passed, report.failed);
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
