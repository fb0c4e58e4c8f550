//! Classifies every labeled graph up to a node count both ways and writes
//! a JSON-lines census.
//!
//!     cargo run --release --example census -- 5 census.jsonl

use std::fs::File;
use std::io::BufWriter;

use cubeahedron::crosscheck::{cross_validate, CrosscheckOptions};

fn main() -> cubeahedron::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_nodes = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let opts = CrosscheckOptions {
        max_nodes,
        ..Default::default()
    };
    let report = match args.next() {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            cross_validate(&opts, Some(&mut out))?
        }
        None => cross_validate(&opts, None)?,
    };
    println!("{report}");
    for (class, count) in &report.buckets {
        println!("  {class}: {count}");
    }
    Ok(())
}
