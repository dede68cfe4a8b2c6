//! From the connected counts I_0..I_g to all graphs L_g and the cumulative G_g.
//!
//! cargo run --example count_rollups

use minsep::classify::{count_g, count_l, CountMode};

fn main() -> minsep::Result<()> {
    let printed = [1, 3, 17, 161];
    println!("genus   I   L(ordered) G(ordered)  L(multiset)  G(multiset)");
    for g in 0..printed.len() as u32 {
        println!(
            "{g:>5} {:>3} {:>10} {:>9} {:>12} {:>12}",
            printed[g as usize],
            count_l(&printed, g, CountMode::Paper)?,
            count_g(&printed, g, CountMode::Paper)?,
            count_l(&printed, g, CountMode::Multiset)?,
            count_g(&printed, g, CountMode::Multiset)?,
        );
    }
    Ok(())
}
