//! Reading and writing graphs as edge lists and graph6.

use cubeahedron::graph::{detect_format, named};
use cubeahedron::Graph;

fn main() -> cubeahedron::Result<()> {
    let text = "# a triangle with a pendant node\n4\n1 2\n2 3\n3 1\n3 4\n";
    let g = Graph::parse(text)?;
    println!("{:?} input -> graph6 {}", detect_format(text), g.to_graph6());
    print!("edge list:\n{}", g.to_edge_list());

    let list = Graph::parse_graph6_list(">>graph6<<A_\nBw\nC~\n")?;
    for h in &list {
        let tubes: Vec<String> = h.enumerate_tubes().iter().map(|t| t.to_string()).collect();
        println!("{} ({} nodes): tubes {}", h.to_graph6(), h.node_count(), tubes.join(" "));
    }

    let c5 = named::cycle(5);
    assert_eq!(Graph::parse_graph6(&c5.to_graph6())?.edges().count(), 5);
    match Graph::parse_edge_list("1 2\n2 x\n") {
        Err(e) => println!("bad input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
