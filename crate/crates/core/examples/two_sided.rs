//! Two-sidedness certificates and separating genus.
//!
//! cargo run --example two_sided

use minsep::embedding::{parse_rotation_table, trace_faces};
use minsep::separation::{check_two_sided, separating_genus};

fn main() -> minsep::Result<()> {
    let samples = [
        ("single loop", "v0 : 0, 0"),
        ("torus figure-eight", "v0 : 0, 1, 0, 1"),
        ("bouquet of 4", "v0 : 0, 0, 1, 2, 3, 1, 2, 3"),
        ("dipole with loops", "v0 : 0, 0, 1, 2\nv1 : 1, 2, 3, 3"),
    ];
    for (name, text) in samples {
        let (g, rs) = parse_rotation_table(text)?;
        let faces = trace_faces(&g, &rs)?;
        match check_two_sided(&faces, &g) {
            Some(cert) => println!(
                "{name:20} two-sided, sides ({}, {}), genus {}, splits {:?}",
                cert.n1,
                cert.n2,
                separating_genus(&g, &cert)?,
                cert.achievable_splits
            ),
            None => println!("{name:20} not two-sided ({} walks)", faces.len()),
        }
    }
    Ok(())
}
