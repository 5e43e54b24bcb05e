//! Running the verification suites programmatically.
//!
//! cargo run --release --example verify [-- paper-series|oracle|bijections|oeis|all]

use airpockets::verify::{run_suite, Suite, VerifyOptions};

fn main() {
    let suite: Suite = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("paper-series")
        .parse()
        .expect("suite name");
    let opts = VerifyOptions {
        offline: true,
        ..Default::default()
    };
    let report = run_suite(suite, &opts);
    print!("{}", report.to_plain());
    for c in report.failures() {
        eprintln!("failed: {} {}", c.kind, c.subject);
    }
}
