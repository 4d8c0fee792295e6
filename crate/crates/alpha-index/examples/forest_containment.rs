//! Linear-forest containment: exact disjoint path packing, forest case
//! classification, and the predicted extremal family.
//!
//! Run with: cargo run --example forest_containment

use alpha_index::forest::{contains, predicted_extremal, LinearForestSpec};
use alpha_index::graph::Graph;
use alpha_index::graph6::encode_graph6;

fn main() -> alpha_index::Result<()> {
    let p6 = Graph::path(6)?;
    let star = Graph::complete(1)?.join(&Graph::empty(5)?)?;
    let two_triangles = Graph::complete(3)?.union(&Graph::complete(3)?)?;

    let cases = [
        ("P_6", &p6, "3,3"),
        ("K_{1,5}", &star, "4"),
        ("2 K_3", &two_triangles, "3,3"),
        ("2 K_3", &two_triangles, "4"),
    ];
    for (name, g, forest) in cases {
        let spec = LinearForestSpec::parse(forest)?;
        println!(
            "{name} contains {spec}? {}  ({} on {} vertices)",
            contains(g, &spec),
            encode_graph6(g),
            g.order()
        );
    }

    // each forest shape selects a different extremal family
    println!();
    for forest in ["4,2", "5,3", "3,3,3"] {
        let spec = LinearForestSpec::parse(forest)?;
        let (params, graph) = predicted_extremal(&spec, 11)?;
        println!(
            "forest {spec}: case {:?}, p = {}, predicted extremal {}_(11,{}) = {} \
             (forest-free: {})",
            spec.case(),
            spec.p(),
            params.family.token(),
            params.p,
            encode_graph6(&graph),
            !contains(&graph, &spec)
        );
    }
    Ok(())
}
