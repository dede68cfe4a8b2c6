//! Isomorphism-invariant codes for multigraphs.
//!
//! cargo run --example canonical_codes

use minsep::Multigraph;

fn main() -> minsep::Result<()> {
    let g = Multigraph::build(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (2, 2), (0, 2)])?;
    let h = g.relabel_vertices(&[2, 3, 0, 1])?;
    let (a, b) = (g.canonical_form()?, h.canonical_form()?);
    println!("g {a}\nh {b}\nsame graph: {}", a == b);
    let rebuilt = a.to_graph();
    println!("rebuilt from code: {:?}", rebuilt.edges().collect::<Vec<_>>());
    Ok(())
}
