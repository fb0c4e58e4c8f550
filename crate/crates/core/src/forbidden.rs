//! Induced cycles of length at least four, diamonds and claws: detection,
//! witnesses, chordality, and the constructive extraction of a cycle or
//! diamond from two tubes whose intersection is disconnected.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::nodeset::NodeSet;

/// The three induced patterns that obstruct weak Fano-ness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ForbiddenKind {
    /// A chordless cycle on at least four nodes.
    CycleGe4,
    /// K4 minus one edge.
    Diamond,
    /// The star K(1,3).
    Claw,
}

impl fmt::Display for ForbiddenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForbiddenKind::CycleGe4 => "CycleGe4",
            ForbiddenKind::Diamond => "Diamond",
            ForbiddenKind::Claw => "Claw",
        })
    }
}

/// A node set whose induced subgraph is one of the forbidden patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub nodes: NodeSet,
}

impl ForbiddenWitness {
    /// Checks that `nodes` really induces `kind` in `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        induced_pattern(g, self.nodes) == Some(self.kind)
    }
}

impl fmt::Display for ForbiddenWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.kind, self.nodes)
    }
}

/// Recognizes the pattern induced on `nodes`, if it is one of the three.
///
/// Uses degree sequence, edge count and connectivity: a cycle on k >= 4
/// nodes is connected with every degree 2; a diamond has 4 nodes and 5
/// edges; a claw has 4 nodes, 3 edges and a node of degree 3.
pub fn induced_pattern(g: &Graph, nodes: NodeSet) -> Option<ForbiddenKind> {
    let k = nodes.len();
    if k < 4 || nodes.iter().any(|v| v > g.node_count()) {
        return None;
    }
    let degrees: Vec<usize> = nodes.iter().map(|v| g.neighbors_in(v, nodes).len()).collect();
    let edges = degrees.iter().sum::<usize>() / 2;
    if degrees.iter().all(|&d| d == 2) && g.is_connected(nodes) {
        return Some(ForbiddenKind::CycleGe4);
    }
    if k == 4 && edges == 5 {
        return Some(ForbiddenKind::Diamond);
    }
    if k == 4 && edges == 3 && degrees.contains(&3) {
        return Some(ForbiddenKind::Claw);
    }
    None
}

/// Chordality by maximum cardinality search followed by a perfect
/// elimination ordering check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.node_count();
    let mut weight = vec![0usize; n + 1];
    let mut unvisited = g.nodes();
    let mut visited = NodeSet::EMPTY;
    let mut rank = vec![0usize; n + 1];
    for step in 0..n {
        let v = unvisited
            .iter()
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited node");
        // earlier-visited neighbors of v must form a clique with the most
        // recently visited one absorbing the rest
        let earlier = g.neighbors_in(v, visited);
        if let Some(u) = earlier.iter().max_by_key(|&u| rank[u]) {
            if !earlier.without(u).is_subset(g.neighbors(u)) {
                return false;
            }
        }
        rank[v] = step;
        unvisited.remove(v);
        visited.insert(v);
        for w in g.neighbors_in(v, unvisited) {
            weight[w] += 1;
        }
    }
    true
}

/// Finds a forbidden induced pattern, preferring the fewest nodes and then
/// the lexicographically smallest node set.
pub fn find_forbidden(g: &Graph) -> Option<ForbiddenWitness> {
    let mut best: Option<NodeSet> = None;
    let mut offer = |set: NodeSet| {
        if best.is_none_or(|b| set < b) {
            best = Some(set);
        }
    };

    for center in 1..=g.node_count() {
        // claws: an independent triple in a neighborhood
        let nbrs = g.neighbors(center).to_vec();
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nbrs[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        offer(NodeSet::from([center, a, b, c]));
                    }
                }
            }
        }
    }
    for (a, b) in g.edges() {
        // diamonds: an edge with two nonadjacent common neighbors
        let common = g.neighbors(a).intersection(g.neighbors(b)).to_vec();
        for (i, &c) in common.iter().enumerate() {
            for &d in &common[i + 1..] {
                if !g.has_edge(c, d) {
                    offer(NodeSet::from([a, b, c, d]));
                }
            }
        }
    }
    for u in 1..=g.node_count() {
        // 4-cycles: a nonadjacent pair with two nonadjacent common neighbors
        for v in (u + 1..=g.node_count()).filter(|&v| !g.has_edge(u, v)) {
            let common = g.neighbors(u).intersection(g.neighbors(v)).to_vec();
            for (i, &a) in common.iter().enumerate() {
                for &b in &common[i + 1..] {
                    if !g.has_edge(a, b) {
                        offer(NodeSet::from([u, v, a, b]));
                    }
                }
            }
        }
    }
    if let Some(nodes) = best {
        let kind = induced_pattern(g, nodes).expect("scanned pattern");
        return Some(ForbiddenWitness { kind, nodes });
    }
    if is_chordal(g) {
        return None;
    }
    let nodes = smallest_long_induced_cycle(g)?;
    Some(ForbiddenWitness {
        kind: ForbiddenKind::CycleGe4,
        nodes,
    })
}

/// True iff no induced cycle of length >= 4, diamond or claw exists.
pub fn graph_weakfano_test(g: &Graph) -> bool {
    find_forbidden(g).is_none()
}

/// Length of the shortest induced cycle on at least four nodes.
///
/// Every such cycle passes through some node `v` with cycle neighbors `a`,
/// `b`; the remainder is a path from `a` to `b` avoiding the rest of the
/// closed neighborhood of `v`, and a shortest such path closes an induced
/// cycle.
fn shortest_long_induced_cycle_len(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for v in 1..=g.node_count() {
        let nbrs = g.neighbors(v);
        let closed = nbrs.with(v);
        for a in nbrs {
            for b in nbrs.iter().filter(|&b| b > a && !g.has_edge(a, b)) {
                let within = g.nodes().difference(closed).with(a).with(b);
                if let Some(path) = g.shortest_path(a, b, within) {
                    let len = path.len() + 1;
                    if best.is_none_or(|x| len < x) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// The lexicographically smallest node set among the shortest induced
/// cycles of length >= 4.
fn smallest_long_induced_cycle(g: &Graph) -> Option<NodeSet> {
    let len = shortest_long_induced_cycle_len(g)?;
    let mut best: Option<NodeSet> = None;
    for start in 1..=g.node_count() {
        let allowed = g.nodes().difference(NodeSet::full(start));
        let mut path = vec![start];
        induced_cycles_from(g, len, allowed, &mut path, &mut best);
        if best.is_some() {
            // any cycle whose least node is `start` beats every cycle with a larger least node
            break;
        }
    }
    best
}

fn induced_cycles_from(
    g: &Graph,
    len: usize,
    allowed: NodeSet,
    path: &mut Vec<usize>,
    best: &mut Option<NodeSet>,
) {
    let start = path[0];
    let last = *path.last().expect("nonempty path");
    let on_path: NodeSet = path.iter().copied().collect();
    let interior = on_path.without(start).without(last);
    let closing = path.len() + 1 == len;
    for x in g.neighbors_in(last, allowed).difference(on_path) {
        if !g.neighbors(x).is_disjoint(interior) {
            continue;
        }
        let touches_start = g.has_edge(x, start) && path.len() > 1;
        if touches_start != closing {
            continue;
        }
        if path.len() == 1 && closing {
            continue;
        }
        path.push(x);
        if closing {
            let set: NodeSet = path.iter().copied().collect();
            if best.is_none_or(|b| set < b) {
                *best = Some(set);
            }
        } else {
            induced_cycles_from(g, len, allowed, path, best);
        }
        path.pop();
    }
}

/// Given tubes `j` and `j2` whose intersection is nonempty and induces a
/// disconnected subgraph, constructs an induced cycle on at least four
/// nodes or an induced diamond.
///
/// The construction takes a node `x` in the first component of the
/// intersection and `x2` in the next one, joins them by shortest paths inside
/// each tube, and cuts out a cycle through two nonadjacent intersection
/// nodes. That cycle is shortened along chords until only chords crossing
/// between its two arcs remain, after which a case split on the crossing
/// chords yields the pattern.
pub fn extract_cycle_or_diamond(g: &Graph, j: NodeSet, j2: NodeSet) -> Result<ForbiddenWitness> {
    if !g.is_connected(j) || !g.is_connected(j2) {
        return Err(Error::Contract("both sets must be tubes of the graph".into()));
    }
    let meet = j.intersection(j2);
    if meet.is_empty() {
        return Err(Error::Contract(format!("{j} and {j2} are disjoint")));
    }
    let parts = g.components_of(meet);
    if parts.len() < 2 {
        return Err(Error::Contract(format!(
            "the intersection {meet} of {j} and {j2} is connected"
        )));
    }
    let first = parts[0];
    let others = meet.difference(first);
    let x = first.first().expect("nonempty component");
    let x2 = parts[1].first().expect("nonempty component");
    let y = g.shortest_path(x, x2, j).expect("tube is connected");
    let z = g.shortest_path(x, x2, j2).expect("tube is connected");
    let on_z: NodeSet = z.iter().copied().collect();

    let p = (0..y.len())
        .filter(|&i| first.contains(y[i]) && on_z.contains(y[i]))
        .max()
        .expect("x lies on both paths");
    let q = (p + 1..y.len())
        .find(|&i| others.contains(y[i]) && on_z.contains(y[i]))
        .expect("x2 lies on both paths");
    let zp = z.iter().position(|&v| v == y[p]).expect("on z");
    let zq = z.iter().position(|&v| v == y[q]).expect("on z");

    // y[p..=q] followed by the z-arc from y[q] back to y[p], endpoints excluded
    let mut cycle: Vec<usize> = y[p..=q].to_vec();
    if zp < zq {
        cycle.extend(z[zp + 1..zq].iter().rev());
    } else {
        cycle.extend(&z[zq + 1..zp]);
    }
    let k = q - p + 1;
    let witness = resolve_marked_cycle(g, cycle, k)?;
    if !witness.verify(g) || witness.kind == ForbiddenKind::Claw {
        return Err(Error::Internal(format!(
            "extraction produced {} which does not verify",
            witness
        )));
    }
    Ok(witness)
}

/// Reduces a cycle `c_1, ..., c_l` with `c_1` and `c_k` nonadjacent
/// (`3 <= k < l`) to an induced cycle or diamond.
fn resolve_marked_cycle(g: &Graph, mut cycle: Vec<usize>, mut k: usize) -> Result<ForbiddenWitness> {
    let check = |cycle: &[usize], k: usize| -> Result<()> {
        let l = cycle.len();
        let simple = cycle.iter().copied().collect::<NodeSet>().len() == l;
        let closed = (0..l).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % l]));
        if simple && closed && 3 <= k && k < l && !g.has_edge(cycle[0], cycle[k - 1]) {
            Ok(())
        } else {
            Err(Error::Internal(format!("malformed marked cycle {cycle:?} with k = {k}")))
        }
    };
    check(&cycle, k)?;

    // 1-based position accessor
    let at = |cycle: &[usize], i: usize| cycle[i - 1];
    loop {
        let l = cycle.len();
        let mut cut: Option<(usize, usize, bool)> = None;
        'search: for i in 1..=l {
            for jj in i + 2..=l {
                let arc_a = jj <= k;
                let arc_b = i >= k;
                if (arc_a || arc_b) && g.has_edge(at(&cycle, i), at(&cycle, jj)) {
                    cut = Some((i, jj, arc_a));
                    break 'search;
                }
            }
        }
        if let Some((i, jj, on_first_arc)) = cut {
            cycle.drain(i..jj - 1);
            if on_first_arc {
                k -= jj - i - 1;
            }
            check(&cycle, k)?;
            continue;
        }
        if let Some(i) = (k..l).find(|&i| g.has_edge(at(&cycle, i), at(&cycle, 1))) {
            cycle.truncate(i);
            check(&cycle, k)?;
            continue;
        }
        break;
    }

    let l = cycle.len();
    let node = |i: usize| cycle[i - 1];
    let edge = |i: usize, jj: usize| g.has_edge(node(i), node(jj));
    let span = |from: usize, to: usize| (from..=to).map(node).collect::<NodeSet>();
    let cycle_witness = |nodes: NodeSet| ForbiddenWitness {
        kind: ForbiddenKind::CycleGe4,
        nodes,
    };
    let diamond = |nodes: NodeSet| ForbiddenWitness {
        kind: ForbiddenKind::Diamond,
        nodes,
    };
    let first_crossing = |from: usize| -> Option<(usize, usize)> {
        let i_min = (from..=k).find(|&i| (k + 1..=l).any(|jj| edge(i, jj)))?;
        let j_max = (k + 1..=l).rev().find(|&jj| edge(i_min, jj))?;
        Some((i_min, j_max))
    };
    let missing = || Error::Internal("no crossing chord between the two arcs".into());

    if !edge(2, l) {
        let (i_min, j_max) = first_crossing(2).ok_or_else(missing)?;
        return Ok(cycle_witness(span(1, i_min).union(span(j_max, l))));
    }
    if let Some(j_max) = (k + 1..l).rev().find(|&jj| edge(2, jj)) {
        if j_max == l - 1 {
            return Ok(diamond(NodeSet::from([node(1), node(2), node(l - 1), node(l)])));
        }
        return Ok(cycle_witness(span(j_max, l).with(node(2))));
    }
    let (i_min, j_max) = first_crossing(3).ok_or_else(missing)?;
    if i_min == 3 && j_max == l {
        return Ok(diamond(NodeSet::from([node(1), node(2), node(3), node(l)])));
    }
    Ok(cycle_witness(span(2, i_min).union(span(j_max, l))))
}
