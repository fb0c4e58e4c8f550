//! Walls of a cubeahedral fan, their integer relations and anticanonical
//! intersection numbers, and the resulting Fano / weak Fano classification.
//!
//! For a wall `tau` spanned by `v_1, ..., v_{n-1}` with completing rays `v`
//! and `v'`, there are unique integers `a_i` with
//! `v + v' + a_1 v_1 + ... + a_{n-1} v_{n-1} = 0`, and the anticanonical
//! degree of the curve of `tau` is `2 + a_1 + ... + a_{n-1}`. The variety is
//! Fano when every wall has positive degree and weak Fano when every wall
//! has nonnegative degree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::{ray_vector, FacetLabel, Fan, LatticeVector};
use crate::forbidden::{ForbiddenKind, ForbiddenWitness};
use crate::graph::Graph;
use crate::linalg;
use crate::nodeset::NodeSet;

/// A codimension-one cone together with its two completing labels, the
/// coefficients of its relation, and its intersection number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    /// The `n - 1` labels spanning the wall, in canonical label order.
    pub base: Vec<FacetLabel>,
    /// The two labels completing `base` to maximal cones, in label order.
    pub neighbors: [FacetLabel; 2],
    /// `a_i`, aligned with `base`.
    pub coefficients: Vec<i64>,
    pub number: i64,
}

impl Wall {
    pub fn to_dump(&self) -> WallDump {
        WallDump {
            base: self.base.iter().map(|l| l.to_string()).collect(),
            neighbors: [self.neighbors[0].to_string(), self.neighbors[1].to_string()],
            coefficients: self.coefficients.clone(),
            number: self.number,
        }
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base: Vec<String> = self.base.iter().map(|l| l.to_string()).collect();
        write!(
            f,
            "base [{}] neighbors {} {} coefficients {:?} number {}",
            base.join(", "),
            self.neighbors[0],
            self.neighbors[1],
            self.coefficients,
            self.number
        )
    }
}

/// Serialized wall: `{"base", "neighbors", "coefficients", "number"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallDump {
    pub base: Vec<String>,
    pub neighbors: [String; 2],
    pub coefficients: Vec<i64>,
    pub number: i64,
}

/// Solves the wall relation: the integers `a_i` with
/// `e_J + e_J' + sum_i a_i e_{I_i} = 0`.
///
/// `e_J'` is expressed in the basis `{e_{I_1}, ..., e_{I_{n-1}}, e_J}`, which
/// is unimodular because the fan is nonsingular; the coefficient of `e_J`
/// must come out as `-1`.
pub fn wall_relation(base: &[FacetLabel], neighbors: [FacetLabel; 2], n: usize) -> Result<Vec<i64>> {
    if base.len() + 1 != n {
        return Err(Error::Contract(format!(
            "a wall in dimension {n} has {} base labels, got {}",
            n.saturating_sub(1),
            base.len()
        )));
    }
    let [j, j2] = neighbors;
    let cols = n + 1;
    let mut m = vec![0i128; n * cols];
    let mut place = |col: usize, label: FacetLabel| match label {
        FacetLabel::Tube(s) => s.iter().for_each(|i| m[(i - 1) * cols + col] = 1),
        FacetLabel::Bar(i) => m[(i - 1) * cols + col] = -1,
    };
    for (col, &l) in base.iter().enumerate() {
        place(col, l);
    }
    place(n - 1, j);
    place(n, j2);
    let solution = linalg::solve_augmented(&mut m, n)?;
    let (last, rest) = solution.split_last().expect("n >= 1");
    if *last != -1 {
        return Err(Error::FanIntegrity(format!(
            "wall relation for {j} and {j2} has coefficient {last} on {j}, expected -1"
        )));
    }
    let coefficients: Vec<i64> = rest.iter().map(|x| -x).collect();

    let mut residual = vec![0i64; n];
    let mut accumulate = |label: FacetLabel, factor: i64| match label {
        FacetLabel::Tube(s) => s.iter().for_each(|i| residual[i - 1] += factor),
        FacetLabel::Bar(i) => residual[i - 1] -= factor,
    };
    accumulate(j, 1);
    accumulate(j2, 1);
    for (&l, &a) in base.iter().zip(&coefficients) {
        accumulate(l, a);
    }
    if residual.iter().any(|&x| x != 0) {
        return Err(Error::FanIntegrity(format!(
            "wall relation for {j} and {j2} does not vanish: {}",
            LatticeVector(residual)
        )));
    }
    Ok(coefficients)
}

/// `2 + sum(a_i)`.
pub fn intersection_number(coefficients: &[i64]) -> i64 {
    2 + coefficients.iter().sum::<i64>()
}

/// Every wall of the fan, each exactly once, ordered by base.
pub fn enumerate_walls(f: &Fan) -> Result<Vec<Wall>> {
    let labels = f.labels();
    let mut faces: Vec<(Vec<usize>, Vec<usize>)> = f.facet_neighbors().into_iter().collect();
    faces.sort_unstable();
    faces
        .into_iter()
        .map(|(face, mut nbrs)| {
            if nbrs.len() != 2 {
                let shown: Vec<String> = face.iter().map(|&i| labels[i].to_string()).collect();
                return Err(Error::FanIntegrity(format!(
                    "face [{}] completes to {} maximal cones, expected 2",
                    shown.join(", "),
                    nbrs.len()
                )));
            }
            nbrs.sort_unstable();
            let base: Vec<FacetLabel> = face.iter().map(|&i| labels[i]).collect();
            let neighbors = [labels[nbrs[0]], labels[nbrs[1]]];
            let coefficients = wall_relation(&base, neighbors, f.dim())?;
            let number = intersection_number(&coefficients);
            Ok(Wall {
                base,
                neighbors,
                coefficients,
                number,
            })
        })
        .collect()
}

/// The three classification buckets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FanClass {
    Fano,
    WeakFanoNotFano,
    NotWeakFano,
}

impl FanClass {
    /// Bucket of a minimal wall number; no walls at all is Fano.
    pub fn from_min_number(min: Option<i64>) -> FanClass {
        match min {
            None => FanClass::Fano,
            Some(m) if m >= 1 => FanClass::Fano,
            Some(0) => FanClass::WeakFanoNotFano,
            Some(_) => FanClass::NotWeakFano,
        }
    }

    /// The class predicted by the graph-side tests.
    pub fn from_graph(g: &Graph) -> FanClass {
        if g.graph_fano_test() {
            FanClass::Fano
        } else if crate::forbidden::graph_weakfano_test(g) {
            FanClass::WeakFanoNotFano
        } else {
            FanClass::NotWeakFano
        }
    }

    pub fn is_weak_fano(self) -> bool {
        self != FanClass::NotWeakFano
    }
}

impl fmt::Display for FanClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FanClass::Fano => "Fano",
            FanClass::WeakFanoNotFano => "WeakFanoNotFano",
            FanClass::NotWeakFano => "NotWeakFano",
        })
    }
}

/// Whether to scan every wall or stop at the first negative one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClassifyMode {
    #[default]
    Full,
    Fast,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class: FanClass,
    /// Smallest wall number seen (`None` when the fan has no walls). In fast
    /// mode this is the first number `<= -1` found, if any.
    pub min_number: Option<i64>,
    /// A wall attaining `min_number`.
    pub witness: Option<Wall>,
    pub wall_count: usize,
}

/// Classifies the fan by its minimal wall number.
pub fn classify_fan(f: &Fan) -> Result<Classification> {
    classify_fan_with(f, ClassifyMode::Full)
}

pub fn classify_fan_with(f: &Fan, mode: ClassifyMode) -> Result<Classification> {
    let walls = enumerate_walls(f)?;
    let wall_count = walls.len();
    let mut best: Option<Wall> = None;
    for wall in walls {
        if best.as_ref().is_none_or(|b| wall.number < b.number) {
            let negative = wall.number <= -1;
            best = Some(wall);
            if negative && mode == ClassifyMode::Fast {
                break;
            }
        }
    }
    let min_number = best.as_ref().map(|w| w.number);
    Ok(Classification {
        class: FanClass::from_min_number(min_number),
        min_number,
        witness: best,
        wall_count,
    })
}

/// Which configuration to build a proof wall for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NerveRequest {
    /// A connected component with at least three nodes; the wall has
    /// number 0.
    LargeComponent,
    /// An induced cycle on at least four nodes, diamond or claw; the wall has
    /// number -1.
    Pattern(ForbiddenWitness),
}

/// An explicit wall base from the classification proofs, with the
/// predicted completing labels and intersection number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveWitness {
    /// `order[i - 1]` is the graph node playing the role of node `i` in the
    /// construction.
    pub order: Vec<usize>,
    pub base: Vec<FacetLabel>,
    pub predicted_neighbors: [FacetLabel; 2],
    pub expected_number: i64,
}

impl NerveWitness {
    /// Locates this base among the walls of `f` and solves its relation.
    pub fn realize(&self, f: &Fan) -> Result<Wall> {
        let mut idx = self
            .base
            .iter()
            .map(|l| {
                f.label_index(l)
                    .ok_or_else(|| Error::Contract(format!("{l} is not a facet label of this fan")))
            })
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        let mut nbrs: Vec<usize> = f
            .cone_indices()
            .iter()
            .filter(|cone| idx.iter().all(|i| cone.binary_search(i).is_ok()))
            .map(|cone| *cone.iter().find(|i| idx.binary_search(i).is_err()).expect("one extra label"))
            .collect();
        if nbrs.len() != 2 || idx.len() + 1 != f.dim() {
            return Err(Error::Contract(format!(
                "the proposed base lies in {} maximal cones, so it is not a wall",
                nbrs.len()
            )));
        }
        nbrs.sort_unstable();
        let labels = f.labels();
        let base: Vec<FacetLabel> = idx.iter().map(|&i| labels[i]).collect();
        let neighbors = [labels[nbrs[0]], labels[nbrs[1]]];
        let coefficients = wall_relation(&base, neighbors, f.dim())?;
        Ok(Wall {
            number: intersection_number(&coefficients),
            base,
            neighbors,
            coefficients,
        })
    }
}

/// Builds the explicit wall from the proofs of the Fano and weak Fano
/// characterizations.
///
/// Nodes of the configuration are renamed `1..k` as in the construction
/// (see [`NerveWitness::order`]); every node outside it contributes its bar.
pub fn witness_nerve(g: &Graph, request: NerveRequest) -> Result<NerveWitness> {
    let (order, expected_number) = match request {
        NerveRequest::LargeComponent => (large_component_order(g)?, 0),
        NerveRequest::Pattern(w) => {
            if !w.verify(g) {
                return Err(Error::Contract(format!("{w} is not induced in the graph")));
            }
            (pattern_order(g, w), -1)
        }
    };
    let k = order.len();
    let set = |roles: &[usize]| -> FacetLabel {
        FacetLabel::Tube(roles.iter().map(|&r| order[r - 1]).collect())
    };
    let prefix = |len: usize| -> Vec<usize> { (1..=len).collect() };

    let (mut base, predicted) = match request {
        NerveRequest::LargeComponent => {
            let mut base = vec![set(&[2])];
            base.extend((3..=k).map(|m| set(&prefix(m))));
            (base, [set(&[1, 2]), set(&[2, 3])])
        }
        NerveRequest::Pattern(w) => match w.kind {
            ForbiddenKind::CycleGe4 => {
                let mut base: Vec<FacetLabel> = (1..=k - 3).map(|m| set(&prefix(m))).collect();
                base.push(set(&[k - 1]));
                base.push(set(&prefix(k)));
                let mut j2 = prefix(k - 3);
                j2.extend([k - 1, k]);
                (base, [set(&prefix(k - 1)), set(&j2)])
            }
            ForbiddenKind::Diamond => (
                vec![set(&[3]), set(&[4]), set(&[1, 2, 3, 4])],
                [set(&[1, 3, 4]), set(&[2, 3, 4])],
            ),
            ForbiddenKind::Claw => (
                vec![set(&[2]), set(&[3]), set(&[4])],
                [set(&[1, 2, 3, 4]), FacetLabel::Bar(order[0])],
            ),
        },
    };
    let used: NodeSet = order.iter().copied().collect();
    base.extend(g.nodes().difference(used).iter().map(FacetLabel::Bar));
    base.sort_unstable();
    let mut predicted_neighbors = predicted;
    predicted_neighbors.sort_unstable();
    Ok(NerveWitness {
        order,
        base,
        predicted_neighbors,
        expected_number,
    })
}

/// Orders a component of at least three nodes so that every prefix is
/// connected and the second and third nodes are adjacent.
fn large_component_order(g: &Graph) -> Result<Vec<usize>> {
    let comp = g
        .connected_components()
        .into_iter()
        .find(|c| c.len() >= 3)
        .ok_or_else(|| Error::Contract("no connected component has three or more nodes".into()))?;
    let middle = comp
        .iter()
        .find(|&v| g.neighbors_in(v, comp).len() >= 2)
        .expect("a connected graph on three nodes has a node of degree two");
    let mut nbrs = g.neighbors_in(middle, comp).iter();
    let (first, third) = (nbrs.next().expect("degree 2"), nbrs.next().expect("degree 2"));
    let mut order = vec![first, middle, third];
    let mut placed: NodeSet = order.iter().copied().collect();
    while placed != comp {
        let next = g
            .open_neighborhood(placed)
            .intersection(comp)
            .first()
            .expect("component is connected");
        order.push(next);
        placed.insert(next);
    }
    Ok(order)
}

/// Names the nodes of a verified pattern as in the construction: a cycle
/// in cyclic order from its least node, a diamond with its two degree-three
/// nodes first, a claw with its center first.
fn pattern_order(g: &Graph, w: ForbiddenWitness) -> Vec<usize> {
    let nodes = w.nodes;
    let deg = |v: usize| g.neighbors_in(v, nodes).len();
    match w.kind {
        ForbiddenKind::CycleGe4 => {
            let start = nodes.first().expect("nonempty");
            let mut order = vec![start];
            let mut prev = start;
            let mut cur = g.neighbors_in(start, nodes).first().expect("degree 2");
            while cur != start {
                order.push(cur);
                let next = g.neighbors_in(cur, nodes).without(prev).first().expect("degree 2");
                prev = cur;
                cur = next;
            }
            order
        }
        ForbiddenKind::Diamond | ForbiddenKind::Claw => {
            let (hubs, rest): (Vec<usize>, Vec<usize>) = nodes.iter().partition(|&v| deg(v) == 3);
            hubs.into_iter().chain(rest).collect()
        }
    }
}

/// Converts a wall of number `<= -1` whose neighbors are two tubes with a
/// disconnected intersection into a cycle-or-diamond witness.
pub fn extract_from_wall(g: &Graph, wall: &Wall) -> Option<Result<ForbiddenWitness>> {
    let (j, j2) = (wall.neighbors[0].tube()?, wall.neighbors[1].tube()?);
    let meet = j.intersection(j2);
    if meet.is_empty() || g.is_connected(meet) {
        return None;
    }
    Some(crate::forbidden::extract_cycle_or_diamond(g, j, j2))
}

/// Coordinatewise sum `e_J + e_J' + sum a_i e_{I_i}`; zero for a valid wall.
pub fn relation_residual(wall: &Wall, n: usize) -> LatticeVector {
    let mut v = ray_vector(wall.neighbors[0], n);
    v.add_scaled(&ray_vector(wall.neighbors[1], n), 1);
    for (&l, &a) in wall.base.iter().zip(&wall.coefficients) {
        v.add_scaled(&ray_vector(l, n), a);
    }
    v
}
