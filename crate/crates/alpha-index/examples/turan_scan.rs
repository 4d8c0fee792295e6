//! Exact Turan numbers for a linear forest versus the printed bounds,
//! with the extremal classes listed as graph6.
//!
//! Run with: cargo run --example turan_scan

use alpha_index::forest::LinearForestSpec;
use alpha_index::harness::scan::scan_turan;

fn main() -> alpha_index::Result<()> {
    // Two disjoint P_3's: the bound is exact at every order and switches
    // extremal family along the way, with a two-family tie at n = 9.
    let spec = LinearForestSpec::parse("3,3")?;
    let outcome = scan_turan(&spec, 5, 9, None, None)?;
    println!("forest {spec}: ex(n, F) by exhaustive search");
    println!("{:>3} {:>9} {:>9} {:<24} extremal classes", "n", "observed", "bound", "verdict");
    for row in &outcome.rows {
        println!(
            "{:>3} {:>9} {:>9} {:<24} {}",
            row.n,
            row.observed_max.to_string(),
            row.predicted_value.map(|v| v.to_string()).unwrap_or_default(),
            format!("{:?}", row.verdict),
            row.observed_extremal.join("  ")
        );
    }
    println!("empirical threshold: {:?}", outcome.empirical_threshold);

    // P_4 + P_2: the general bound is asymptotic; watch it start to bind.
    let spec = LinearForestSpec::parse("4,2")?;
    let outcome = scan_turan(&spec, 5, 9, None, None)?;
    println!("\nforest {spec}:");
    for row in &outcome.rows {
        println!(
            "  n={}: observed {} vs bound {} -> {:?}",
            row.n,
            row.observed_max,
            row.predicted_value.map(|v| v.to_string()).unwrap_or_default(),
            row.verdict
        );
    }
    println!("empirical threshold: {:?}", outcome.empirical_threshold);
    Ok(())
}
