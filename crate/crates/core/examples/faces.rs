//! Boundary walks of a rotation system read from the text format.
//!
//! cargo run --example faces

use minsep::embedding::{cellular_genus, parse_rotation_table, trace_faces};

fn main() -> minsep::Result<()> {
    // figure-eight: the planar rotation and the toroidal one
    for text in ["v0 : 0, 0, 1, 1", "v0 : 0, 1, 0, 1"] {
        let (g, rs) = parse_rotation_table(text)?;
        let faces = trace_faces(&g, &rs)?;
        println!("{text}");
        for i in 0..faces.len() {
            println!("  walk {i}: edges {:?}", faces.edge_sequence(i));
        }
        println!("  {} walks, cellular genus {}", faces.len(), cellular_genus(&g, &rs)?);
    }
    Ok(())
}
