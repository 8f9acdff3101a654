//! Run every verification suite that applies to a base quiver.
//!
//! `cargo run --release --example verification -- a3 1`

use mrep::quiver::Quiver;
use mrep::verify::{run, SuiteParams, SUITES};

fn main() -> mrep::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "a2".into());
    let m: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let q = Quiver::named(&name)?;
    let p = if q.is_dynkin() { 32003 } else { 3 };
    let mut params = SuiteParams::new(q, m, p);
    params.samples = 50;
    for suite in SUITES {
        match run(suite, &params) {
            Ok(r) => println!(
                "{suite:<14} {} ({} checks{})",
                if r.passed { "pass" } else { "FAIL" },
                r.checks,
                if r.window_verified { ", window-verified" } else { "" }
            ),
            Err(e) => println!("{suite:<14} skipped: {e}"),
        }
    }
    Ok(())
}
