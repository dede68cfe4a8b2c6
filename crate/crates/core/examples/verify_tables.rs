//! Re-check every printed witness rotation.
//!
//! cargo run --release --example verify_tables -- 2.6

use minsep::tables::{verify_tables, Status};

fn main() -> minsep::Result<()> {
    let selection = std::env::args().nth(1);
    let report = verify_tables(selection.as_deref())?;
    for o in report.entries.iter().filter(|o| !matches!(o.status, Status::Pass)) {
        println!("{o:?}");
    }
    println!(
        "{} passed, {} failed, {} quarantined, {} distinct Table 2 graphs",
        report.passed, report.failed, report.quarantined, report.table2_distinct
    );
    Ok(())
}
