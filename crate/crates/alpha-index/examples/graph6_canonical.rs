//! graph6 records and canonical forms: serialization, isomorphism testing,
//! and deduplication.
//!
//! Run with: cargo run --example graph6_canonical

use alpha_index::canon::{canonical_form, canonical_graph};
use alpha_index::graph::Graph;
use alpha_index::graph6::{encode_graph6, parse_graph6};

fn main() -> alpha_index::Result<()> {
    // the same 5-cycle three ways
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?;
    let relabeled = c5.permuted(&[2, 4, 0, 3, 1])?;
    let from_text = parse_graph6(&encode_graph6(&relabeled))?;

    println!("c5        = {}", encode_graph6(&c5));
    println!("relabeled = {}", encode_graph6(&relabeled));
    println!("round-trip preserves the labeling: {}", from_text == relabeled);

    let canon1 = canonical_form(&c5)?;
    let canon2 = canonical_form(&relabeled)?;
    println!(
        "canonical forms agree: {} ({})",
        canon1 == canon2,
        String::from_utf8(canon1).unwrap()
    );

    // distinct classes get distinct forms
    let p5 = Graph::path(5)?;
    println!(
        "P_5 canonical form: {} (differs from C_5: {})",
        String::from_utf8(canonical_form(&p5)?).unwrap(),
        canonical_form(&p5)? != canonical_form(&c5)?
    );

    // canonical_graph returns the representative labeling itself
    let rep = canonical_graph(&relabeled)?;
    println!("canonical representative edges: {:?}", rep.edges());
    Ok(())
}
