//! Any connected graph with even degrees separates some surface: follow an
//! Eulerian circuit and glue consecutive darts.
//!
//! cargo run --example euler_construction

use minsep::embedding::{format_rotation_table, rotation_from_euler, trace_faces};
use minsep::separation::{check_two_sided, separating_genus};
use minsep::Multigraph;

fn main() -> minsep::Result<()> {
    let k5: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let graphs = [
        ("bouquet of 3", Multigraph::bouquet(3)),
        ("dipole D4", Multigraph::dipole(4)),
        ("K5", Multigraph::build(5, &k5)?),
    ];
    for (name, g) in &graphs {
        let circuit = g.eulerian_circuit()?;
        let rs = rotation_from_euler(g, &circuit)?;
        let faces = trace_faces(g, &rs)?;
        let cert = check_two_sided(&faces, g).expect("the circuit gives a two-sided rotation");
        println!(
            "{name}: {} walks, sides ({}, {}), separating genus {}",
            faces.len(),
            cert.n1,
            cert.n2,
            separating_genus(g, &cert)?
        );
        print!("{}", format_rotation_table(&rs));
    }
    Ok(())
}
