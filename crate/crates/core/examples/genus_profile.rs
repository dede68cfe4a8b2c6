//! Least and largest separated genus, cellular genus range and the bounds
//! tying them together.
//!
//! cargo run --release --example genus_profile

use minsep::separation::genus_bounds;
use minsep::Multigraph;

fn main() -> minsep::Result<()> {
    let graphs = [
        ("figure-eight", Multigraph::bouquet(2)),
        ("bouquet of 4", Multigraph::bouquet(4)),
        ("dipole D4", Multigraph::dipole(4)),
        ("dipole D6", Multigraph::dipole(6)),
        ("doubled triangle", Multigraph::build(3, &[(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)])?),
    ];
    println!("{:16} {:>4} {:>4} {:>10} {:>12}", "graph", "g-", "g+", "cellular", "bounds");
    for (name, g) in &graphs {
        let p = genus_bounds(g)?;
        println!(
            "{name:16} {:>4} {:>4} {:>10} {:>12}",
            p.gamma_minus.to_string(),
            p.gamma_plus.to_string(),
            format!("{}..={}", p.gamma_min_cellular, p.gamma_max_cellular),
            format!("{}..={}", p.lower_bound, p.upper_bound),
        );
    }
    Ok(())
}
