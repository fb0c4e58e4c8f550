//! Lists every wall of a small fan with its integer relation.
//!
//! For each wall the two completing rays `v`, `v'` satisfy
//! `v + v' + sum a_i v_i = 0`, and the number printed is `2 + sum a_i`.

use std::collections::BTreeMap;

use cubeahedron::graph::named;
use cubeahedron::intersection::relation_residual;
use cubeahedron::{build_fan, enumerate_walls, Graph};

fn show(name: &str, g: &Graph) -> cubeahedron::Result<()> {
    let fan = build_fan(g)?;
    let walls = enumerate_walls(&fan)?;
    let mut histogram = BTreeMap::new();
    println!("{name}: {} walls", walls.len());
    for w in &walls {
        assert!(relation_residual(w, g.node_count()).is_zero());
        *histogram.entry(w.number).or_insert(0) += 1;
        if walls.len() <= 24 {
            println!("  {w}");
        }
    }
    println!("  numbers: {histogram:?}");
    Ok(())
}

fn main() -> cubeahedron::Result<()> {
    show("P2", &named::path(2))?;
    show("P3", &named::path(3))?;
    show("K3", &named::complete(3))?;
    show("claw", &named::star(3))?;
    Ok(())
}
