//! Running the bundled verification suite programmatically (the CLI's
//! `verify-paper` subcommand wraps exactly this).
//!
//! ```bash
//! cargo run -p so3kit --example verify_suite
//! ```

use so3kit::suite::{run_suite, SuiteConfig, Verdict};

fn main() {
    let report = run_suite(&SuiteConfig {
        seed: 42,
        rational_only: false,
    });
    print!("{}", report.human_summary());
    assert!(report.all_passed());

    // Restricting to plain rationals skips the √3 and √5 material and keeps
    // everything else green.
    let rational = run_suite(&SuiteConfig {
        seed: 42,
        rational_only: true,
    });
    println!(
        "\nrational-only: {} passed, {} failed, {} skipped",
        rational.passed, rational.failed, rational.skipped
    );
    for a in rational
        .assertions
        .iter()
        .filter(|a| a.verdict == Verdict::Skip)
    {
        println!("  skipped: {} — {}", a.id, a.detail);
    }
}
