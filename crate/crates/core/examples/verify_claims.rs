//! Runs the claims suite from code and prints the summary; pass --json to
//! print the full report instead.
//!
//! cargo run --release --example verify_claims -- 6 10

use shufflecube::claims::{verify_claims, ClaimsOptions};

fn main() -> shufflecube::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let json = args.iter().any(|a| a == "--json");
    let mut ns: Vec<usize> = args.iter().filter_map(|a| a.parse().ok()).collect();
    if ns.is_empty() {
        ns = vec![6];
    }
    let report = verify_claims(&ns, &ClaimsOptions::default())?;
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.summary());
    }
    std::process::exit(if report.pass { 0 } else { 1 });
}
