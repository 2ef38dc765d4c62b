//! The acceptance suite through the library API, as `galois-loci selftest` runs it.
//!
//! Run with `cargo run --release --example selftest [seed]`.

use galois_loci::report::{cmd_selftest, Format, Render, RunConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let report = cmd_selftest(&RunConfig { seed, ..RunConfig::default() });
    print!("{}", report.render(Format::Table));
    std::process::exit(if report.passed { 0 } else { 3 });
}
