//! Runs the seeded verification suite and prints the markdown summary.
//!
//!     cargo run --release --example verify_suite -- 7 200

use std::time::Instant;

use helicity::report::{run_suite, SuiteConfig};

fn main() -> helicity::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);
    let samples = args.next().and_then(|a| a.parse().ok()).unwrap_or(200);
    let config = SuiteConfig {
        seed,
        samples,
        ..SuiteConfig::default()
    };

    let start = Instant::now();
    let report = run_suite(&config)?;
    print!("{}", report.to_markdown(Some(start.elapsed())));

    if !report.all_pass() {
        std::process::exit(1);
    }
    Ok(())
}
