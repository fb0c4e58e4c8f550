//! Normal fans of graph cubeahedra and the Fano / weak Fano classification
//! of their toric varieties.
//!
//! The pipeline for a graph `G` on nodes `1..=n`:
//!
//! 1. [`Graph::enumerate_tubes`] lists the connected node subsets;
//!    together with one bar per node they label the facets.
//! 2. [`fan::build_fan`] enumerates the maximal sets of pairwise compatible
//!    labels (the maximal cones) and verifies the fan is complete,
//!    nonsingular, simple and flag.
//! 3. [`intersection::enumerate_walls`] solves the integer relation on every
//!    wall and computes its anticanonical intersection number;
//!    [`intersection::classify_fan`] reads off the classification.
//! 4. The graph-side tests ([`Graph::graph_fano_test`],
//!    [`forbidden::graph_weakfano_test`]) predict the same answer, and
//!    [`crosscheck::cross_validate`] compares both on every small graph.
//!
//! ```
//! use cubeahedron::{build_fan, classify_fan, FanClass, Graph};
//!
//! let claw = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)])?;
//! let class = classify_fan(&build_fan(&claw)?)?;
//! assert_eq!(class.class, FanClass::NotWeakFano);
//! assert_eq!(class.min_number, Some(-1));
//! # Ok::<(), cubeahedron::Error>(())
//! ```

pub mod cli;
pub mod crosscheck;
pub mod error;
pub mod fan;
pub mod forbidden;
pub mod graph;
pub mod intersection;
pub mod linalg;
pub mod nodeset;

pub use error::{Error, Result};
pub use fan::{build_fan, compatible, maximal_nerve_sets, ray_vector, verify_fan, FacetLabel, Fan, LatticeVector};
pub use forbidden::{extract_cycle_or_diamond, find_forbidden, graph_weakfano_test, ForbiddenKind, ForbiddenWitness};
pub use graph::Graph;
pub use intersection::{
    classify_fan, enumerate_walls, intersection_number, wall_relation, witness_nerve, Classification, FanClass,
    NerveRequest, NerveWitness, Wall,
};
pub use nodeset::NodeSet;
