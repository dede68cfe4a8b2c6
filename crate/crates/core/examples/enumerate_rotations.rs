//! Counting rotation systems, with and without loop parity pruning.
//!
//! cargo run --release --example enumerate_rotations

use minsep::embedding::{enumerate_rotation_systems, trace_faces};
use minsep::separation::check_two_sided;
use minsep::Multigraph;

fn main() -> minsep::Result<()> {
    for loops in 1..=5 {
        let g = Multigraph::bouquet(loops);
        let all = enumerate_rotation_systems(&g, false, false)?.count();
        let pruned = enumerate_rotation_systems(&g, true, false)?;
        let mut kept = 0;
        let mut two_sided = 0;
        for rs in pruned {
            kept += 1;
            if check_two_sided(&trace_faces(&g, &rs)?, &g).is_some() {
                two_sided += 1;
            }
        }
        println!("bouquet of {loops}: {all:>6} rotations, {kept:>6} after pruning, {two_sided:>5} two-sided");
    }
    Ok(())
}
