//! Classifies a graph given as graph6 or an inline edge list, e.g.
//!
//!     cargo run --example classify_graph -- "1-2,1-3,1-4"
//!     cargo run --example classify_graph -- "C~"

use cubeahedron::cli::parse_inline_edges;
use cubeahedron::{build_fan, classify_fan, find_forbidden, FanClass, Graph};

fn parse(arg: &str) -> cubeahedron::Result<Graph> {
    if arg.contains('-') {
        parse_inline_edges(arg, None)
    } else {
        Graph::parse_graph6(arg)
    }
}

fn main() -> cubeahedron::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1-2,2-3,3-4,4-1".into());
    let g = parse(&arg)?;
    let fan = build_fan(&g)?;
    let c = classify_fan(&fan)?;

    println!("graph {} on {} nodes, {} edges", g.to_graph6(), g.node_count(), g.edge_count());
    println!("fan: {} rays, {} maximal cones, {} walls", fan.ray_count(), fan.cone_count(), c.wall_count);
    println!("minimal wall number: {:?}", c.min_number);
    if let Some(w) = &c.witness {
        println!("  attained at {w}");
    }
    println!("from wall numbers: {}", c.class);
    println!("from the graph:    {}", FanClass::from_graph(&g));
    match find_forbidden(&g) {
        Some(w) => println!("forbidden induced subgraph: {w}"),
        None => println!("no induced long cycle, diamond or claw"),
    }
    Ok(())
}
