//! Candidate graphs per genus.
//!
//! cargo run --release --example candidates -- 2

use minsep::classify::generate_candidates;
use std::collections::BTreeMap;

fn main() -> minsep::Result<()> {
    let genus = std::env::args().nth(1).map_or(Ok(2), |s| s.parse()).expect("genus");
    let set = generate_candidates(genus)?;
    let mut by_size: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (_, g) in &set.graphs {
        *by_size.entry((g.vertex_count(), g.edge_count())).or_default() += 1;
    }
    println!("{} candidates for genus {genus}", set.len());
    for ((v, e), n) in by_size {
        println!("  V={v} E={e}: {n}");
    }
    Ok(())
}
