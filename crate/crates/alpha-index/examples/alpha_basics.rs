//! The A_alpha matrix from scratch: assembly, spectral radius, Perron
//! vector, and the Rayleigh quotient.
//!
//! Run with: cargo run --example alpha_basics

use alpha_index::graph::Graph;
use alpha_index::spectral::{
    assemble_alpha, rayleigh_value, spectral_radius, AlphaParam,
};

fn main() -> alpha_index::Result<()> {
    // The bowtie: two triangles sharing a vertex.
    let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])?;
    println!("bowtie: {} vertices, {} edges", bowtie.order(), bowtie.edge_count());

    for alpha in [0.0, 0.25, 0.5, 0.75] {
        let a = AlphaParam::new(alpha)?;
        let m = assemble_alpha(&bowtie, a);
        let result = spectral_radius(&bowtie, a)?;
        println!(
            "alpha = {alpha:.2}: rho = {:.9} (residual {:.2e})",
            result.rho, result.residual
        );
        println!("  A_alpha row 0: {:?}", (0..5).map(|j| m.get(0, j)).collect::<Vec<_>>());
        println!("  Perron vector (max entry 1): {:?}", result.vector_max_normalized());

        // Any unit vector gives a lower Rayleigh value; the Perron vector
        // attains the radius.
        let at_perron = rayleigh_value(&bowtie, a, &result.vector)?;
        let uniform: Vec<f64> = vec![1.0 / 5f64.sqrt(); 5];
        let at_uniform = rayleigh_value(&bowtie, a, &uniform)?;
        println!("  rayleigh: perron {at_perron:.9}, uniform {at_uniform:.9}");
    }

    // At alpha = 1/2 the doubled radius is the signless Laplacian radius:
    // for the bowtie that is (7 + sqrt(17)) / 2.
    let q = 2.0 * spectral_radius(&bowtie, AlphaParam::new(0.5)?)?.rho;
    println!("q(bowtie) = {q:.9} = (7 + sqrt(17)) / 2 = {:.9}", (7.0 + 17f64.sqrt()) / 2.0);
    Ok(())
}
