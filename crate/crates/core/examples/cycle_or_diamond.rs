//! Two tubes meeting in a disconnected set force an induced cycle on at
//! least four nodes or a diamond. This finds one constructively.

use cubeahedron::{extract_cycle_or_diamond, Graph, NodeSet};

fn main() -> cubeahedron::Result<()> {
    // a 6-cycle with a chord 2-5; the tubes {1,2,3,4} and {1,4,5,6} meet in {1} and {4}
    let g = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 5)])?;
    let j = NodeSet::from([1, 2, 3, 4]);
    let j2 = NodeSet::from([1, 4, 5, 6]);
    let w = extract_cycle_or_diamond(&g, j, j2)?;
    println!("J = {j}, J' = {j2}: {w} (verified: {})", w.verify(&g));

    let diamond = cubeahedron::graph::named::diamond();
    let w = extract_cycle_or_diamond(&diamond, NodeSet::from([1, 3, 4]), NodeSet::from([2, 3, 4]))?;
    println!("diamond, {{1,3,4}} and {{2,3,4}}: {w}");

    // a connected intersection is rejected
    let err = extract_cycle_or_diamond(&g, NodeSet::from([1, 2]), NodeSet::from([1, 6])).unwrap_err();
    println!("connected intersection: {err}");
    Ok(())
}
