//! Full classification for one genus.
//!
//! cargo run --release --example classify -- 2
//! cargo run --release --example classify -- 3 --json

use minsep::classify::{classify, summarize, CountMode};
use minsep::separation::SearchConfig;

fn main() -> minsep::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let genus = args.first().map_or(Ok(2), |s| s.parse()).expect("genus");
    let cfg = SearchConfig {
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..SearchConfig::default()
    };
    let report = classify(genus, CountMode::Paper, &cfg)?;
    if args.iter().any(|a| a == "--json") {
        print!("{}", report.to_json()?);
    } else {
        print!("{}", summarize(&report));
    }
    Ok(())
}
