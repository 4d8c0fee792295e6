//! Closed-form verification: every published bound against the quotient
//! oracle over a small grid, with the discrepancy digest.
//!
//! Run with: cargo run --example verify_formulas

use alpha_index::closed_forms::Verdict;
use alpha_index::harness::verify::{run_verify, VerifyOptions};

fn main() -> alpha_index::Result<()> {
    let opts = VerifyOptions { n_max: 14, p_max: 3, ..VerifyOptions::default() };
    let report = run_verify(&opts)?;

    let total = report.rows.len();
    let mismatched = report.discrepancies().count();
    println!("{total} rows evaluated, {mismatched} flagged SuspectedTypo");
    println!("validated forms all match: {}", report.all_validated_match);
    println!();

    // Published rows that disagree with the oracle, grouped by formula.
    for formula in [
        "published-alpha-even",
        "published-alpha-odd-large",
        "published-alpha-threes",
        "published-signless-even",
        "published-signless-odd-large",
        "published-signless-threes",
    ] {
        let rows: Vec<_> = report
            .rows
            .iter()
            .filter(|r| r.formula.name() == formula && r.verdict == Verdict::SuspectedTypo)
            .collect();
        if rows.is_empty() {
            println!("{formula:30} clean on this grid");
        } else {
            let worst = rows
                .iter()
                .max_by(|a, b| a.delta.abs().partial_cmp(&b.delta.abs()).unwrap())
                .unwrap();
            println!(
                "{formula:30} {} rows flagged; worst at n={} p={} alpha={}: \
                 printed {:.6} vs oracle {:.6}",
                rows.len(),
                worst.n,
                worst.p,
                worst.alpha,
                worst.value,
                worst.oracle
            );
        }
    }

    println!();
    for note in &report.notes {
        println!("note: {note}");
    }
    Ok(())
}
