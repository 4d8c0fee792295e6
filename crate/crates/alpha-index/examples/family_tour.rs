//! The three extremal families S, S+, F: construction, quotient matrices,
//! and exact spectral radii from three independent routes.
//!
//! Run with: cargo run --example family_tour

use alpha_index::families::Family;
use alpha_index::harness::family_summary;

fn main() -> alpha_index::Result<()> {
    // S_{6,2}: K_2 joined to four independent vertices.
    // S+_{7,2}: the same shape plus one edge inside the independent part.
    // F_{9,1}: one dominating vertex over a perfect matching (friendship-like).
    let tour = [
        (Family::S, 6, 2, 0.5),
        (Family::SPlus, 7, 2, 0.3),
        (Family::F, 9, 1, 0.5),
        (Family::F, 8, 1, 0.7), // odd split part: one isolated vertex remains
    ];
    for (family, n, p, alpha) in tour {
        let summary = family_summary(family, n, p, alpha)?;
        println!("{summary}");
        println!();
    }
    Ok(())
}
