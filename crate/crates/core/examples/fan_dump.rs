//! Builds and verifies the fan of a path and prints it, then its JSON dump.

use cubeahedron::graph::named;
use cubeahedron::{build_fan, verify_fan};

fn main() -> cubeahedron::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let g = named::path(n);
    let fan = build_fan(&g)?;

    println!("path on {n} nodes: {}", verify_fan(&fan));
    for (label, ray) in fan.labels().iter().zip(fan.rays()) {
        println!("  ray {label:<10} {ray}");
    }
    for cone in fan.maximal_cones() {
        let names: Vec<String> = cone.labels.iter().map(|l| l.to_string()).collect();
        println!("  cone [{}] det {}", names.join(", "), cone.determinant());
    }
    println!("{}", serde_json::to_string_pretty(&fan.to_dump()).expect("serializable"));
    Ok(())
}
