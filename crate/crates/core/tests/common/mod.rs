//! Brute-force reference implementations shared by the integration tests.
//! Graphs are adjacency bitmasks (`adj[i]` holds the neighbors of node
//! `i + 1` as bits `j - 1`), independent of the library types.

#![allow(dead_code)]

use cubeahedron::Graph;

pub fn adjacency(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    (1..=n)
        .map(|u| (1..=n).filter(|&v| g.has_edge(u, v)).fold(0u64, |m, v| m | 1 << (v - 1)))
        .collect()
}

pub fn connected(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = set & set.wrapping_neg();
    loop {
        let mut next = seen;
        for (i, &row) in adj.iter().enumerate() {
            if seen >> i & 1 == 1 {
                next |= row & set;
            }
        }
        if next == seen {
            return seen == set;
        }
        seen = next;
    }
}

/// Every nonempty connected subset, as sorted bitmasks.
pub fn tubes(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    (1u64..1 << n).filter(|&s| connected(adj, s)).collect()
}

fn degrees(adj: &[u64], set: u64) -> Vec<u32> {
    (0..adj.len())
        .filter(|&i| set >> i & 1 == 1)
        .map(|i| (adj[i] & set).count_ones())
        .collect()
}

pub fn is_induced_cycle(adj: &[u64], set: u64) -> bool {
    set.count_ones() >= 4 && connected(adj, set) && degrees(adj, set).iter().all(|&d| d == 2)
}

pub fn is_diamond(adj: &[u64], set: u64) -> bool {
    let mut d = degrees(adj, set);
    d.sort_unstable();
    d == [2, 2, 3, 3]
}

pub fn is_claw(adj: &[u64], set: u64) -> bool {
    let mut d = degrees(adj, set);
    d.sort_unstable();
    d == [1, 1, 1, 3]
}

/// Whether some node subset induces a cycle on at least four nodes, a
/// diamond or a claw.
pub fn has_forbidden(adj: &[u64]) -> bool {
    let n = adj.len();
    (0u64..1 << n)
        .filter(|s| s.count_ones() >= 4)
        .any(|s| is_induced_cycle(adj, s) || is_diamond(adj, s) || is_claw(adj, s))
}

/// Facet labels encoded as `(tube_mask, 0)` or `(0, bar_node)`.
pub type Label = (u64, usize);

pub fn labels(adj: &[u64]) -> Vec<Label> {
    let mut out: Vec<Label> = tubes(adj).into_iter().map(|t| (t, 0)).collect();
    out.extend((1..=adj.len()).map(|i| (0, i)));
    out
}

pub fn compatible(adj: &[u64], a: Label, b: Label) -> bool {
    match (a, b) {
        ((0, _), (0, _)) => true,
        ((t, 0), (0, i)) | ((0, i), (t, 0)) => t >> (i - 1) & 1 == 0,
        ((s, _), (t, _)) => s & t == s || s & t == t || !connected(adj, s | t),
    }
}

/// Maximal pairwise-compatible label sets, found by checking every subset
/// of labels. Only usable for a handful of labels.
pub fn nerve(adj: &[u64]) -> Vec<Vec<Label>> {
    let ls = labels(adj);
    let m = ls.len();
    assert!(m <= 20, "too many labels for the subset scan");
    let ok = |s: u32| {
        (0..m).all(|i| s >> i & 1 == 0 || (i + 1..m).all(|j| s >> j & 1 == 0 || compatible(adj, ls[i], ls[j])))
    };
    let cliques: Vec<u32> = (1u32..1 << m).filter(|&s| ok(s)).collect();
    let mut maximal: Vec<Vec<Label>> = cliques
        .iter()
        .filter(|&&s| (0..m).all(|k| s >> k & 1 == 1 || !ok(s | 1 << k)))
        .map(|&s| {
            let mut c: Vec<Label> = (0..m).filter(|&i| s >> i & 1 == 1).map(|i| ls[i]).collect();
            c.sort();
            c
        })
        .collect();
    maximal.sort();
    maximal
}

pub fn ray(n: usize, l: Label) -> Vec<i64> {
    match l {
        (0, i) => (1..=n).map(|k| if k == i { -1 } else { 0 }).collect(),
        (t, _) => (0..n).map(|k| (t >> k & 1) as i64).collect(),
    }
}
