//! Rebuilds the explicit walls used to show that a graph is not Fano (a
//! component with three nodes gives a wall of number 0) or not weak Fano
//! (an induced long cycle, diamond or claw gives a wall of number -1).

use cubeahedron::graph::named;
use cubeahedron::{build_fan, find_forbidden, witness_nerve, Graph, NerveRequest};

fn main() -> cubeahedron::Result<()> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("P3", named::path(3)),
        ("claw", named::star(3)),
        ("diamond", named::diamond()),
        ("C4", named::cycle(4)),
        ("C6", named::cycle(6)),
        ("K4", named::complete(4)),
    ];
    for (name, g) in &graphs {
        let fan = build_fan(g)?;
        println!("{name}");
        if !g.graph_fano_test() {
            let nerve = witness_nerve(g, NerveRequest::LargeComponent)?;
            println!("  large component: {}", nerve.realize(&fan)?);
        }
        match find_forbidden(g) {
            Some(w) => {
                let nerve = witness_nerve(g, NerveRequest::Pattern(w))?;
                let wall = nerve.realize(&fan)?;
                println!("  {w}: {wall}");
                assert_eq!(wall.number, nerve.expected_number);
            }
            None => println!("  no forbidden induced subgraph"),
        }
    }
    Ok(())
}
