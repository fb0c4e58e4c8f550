//! Simple undirected graphs on the nodes `1..=n`, with the edge-list and
//! graph6 text formats, connectivity and tube enumeration.

use std::fmt;

use crate::error::{Error, Result};
use crate::nodeset::{NodeSet, MAX_NODES};

/// A finite simple graph on the node set `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<NodeSet>,
}

impl Graph {
    /// The edgeless graph on `n` nodes.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_NODES {
            return Err(Error::Capacity {
                what: "node count",
                got: n,
                limit: MAX_NODES,
            });
        }
        Ok(Graph {
            n,
            adjacency: vec![NodeSet::EMPTY; n],
        })
    }

    /// Builds a graph from 1-based edges. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (k, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(u, v).map_err(|e| match e {
                Error::Contract(msg) => Error::format(k + 1, msg),
                other => other,
            })?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x == 0 || x > self.n {
                return Err(Error::Contract(format!(
                    "node label {x} out of range 1..={}",
                    self.n
                )));
            }
        }
        if u == v {
            return Err(Error::Contract(format!("self-loop at node {u}")));
        }
        self.adjacency[u - 1].insert(v);
        self.adjacency[v - 1].insert(u);
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.n)
    }

    pub fn neighbors(&self, node: usize) -> NodeSet {
        self.adjacency[node - 1]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u - 1].contains(v)
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node - 1].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Neighbors of `node` inside `within`.
    pub fn neighbors_in(&self, node: usize, within: NodeSet) -> NodeSet {
        self.neighbors(node).intersection(within)
    }

    /// Union of the neighborhoods of every node in `set`.
    pub fn open_neighborhood(&self, set: NodeSet) -> NodeSet {
        set.iter()
            .fold(NodeSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
            .difference(set)
    }

    /// Number of edges of the induced subgraph on `set`.
    pub fn induced_edge_count(&self, set: NodeSet) -> usize {
        set.iter().map(|v| self.neighbors_in(v, set).len()).sum::<usize>() / 2
    }

    /// The nodes reachable from `start` inside `within` (including `start`).
    pub fn reach(&self, start: usize, within: NodeSet) -> NodeSet {
        let mut seen = NodeSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(NodeSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
                .intersection(within)
                .difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// True iff `set` is nonempty and induces a connected subgraph.
    pub fn is_connected(&self, set: NodeSet) -> bool {
        match set.first() {
            None => false,
            Some(start) => self.reach(start, set) == set,
        }
    }

    /// Connected components of the induced subgraph on `within`, sorted by
    /// least element.
    pub fn components_of(&self, within: NodeSet) -> Vec<NodeSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let comp = self.reach(start, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Connected components of the whole graph, sorted by least element.
    pub fn connected_components(&self) -> Vec<NodeSet> {
        self.components_of(self.nodes())
    }

    /// A shortest path from `from` to `to` using only nodes in `within`.
    pub fn shortest_path(&self, from: usize, to: usize, within: NodeSet) -> Option<Vec<usize>> {
        if !within.contains(from) || !within.contains(to) {
            return None;
        }
        let mut parent = vec![0usize; self.n + 1];
        let mut seen = NodeSet::singleton(from);
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbors_in(v, within).difference(seen) {
                seen.insert(w);
                parent[w] = v;
                queue.push_back(w);
            }
        }
        None
    }

    /// All tubes: nonempty node sets inducing a connected subgraph, in
    /// canonical order (size, then lexicographic).
    ///
    /// Sets are grown from each anchor node by neighbor extension, only
    /// admitting nodes larger than the anchor and never revisiting the
    /// exclusive neighborhood of the current set, so each tube is produced
    /// exactly once.
    pub fn enumerate_tubes(&self) -> Vec<NodeSet> {
        let mut out = Vec::new();
        for anchor in 1..=self.n {
            let above = NodeSet::full(self.n).difference(NodeSet::full(anchor));
            let ext = self.neighbors(anchor).intersection(above);
            self.extend_tubes(NodeSet::singleton(anchor), ext, above, &mut out);
        }
        out.sort_unstable();
        out
    }

    fn extend_tubes(&self, current: NodeSet, mut ext: NodeSet, allowed: NodeSet, out: &mut Vec<NodeSet>) {
        out.push(current);
        let closed = current.union(self.open_neighborhood(current));
        while let Some(w) = ext.first() {
            ext.remove(w);
            let exclusive = self
                .neighbors(w)
                .intersection(allowed)
                .difference(closed);
            self.extend_tubes(current.with(w), ext.union(exclusive), allowed, out);
        }
    }

    /// The subgraph induced on `set`, relabeled `1..=|set|` in increasing
    /// order of the original labels.
    pub fn induced(&self, set: NodeSet) -> Graph {
        let nodes = set.to_vec();
        let mut index = vec![0usize; self.n + 1];
        for (k, &v) in nodes.iter().enumerate() {
            index[v] = k + 1;
        }
        let mut g = Graph::empty(nodes.len()).expect("subset of a valid graph");
        for &u in &nodes {
            for v in self.neighbors_in(u, set) {
                if u < v {
                    g.add_edge(index[u], index[v]).expect("valid relabeled edge");
                }
            }
        }
        g
    }

    /// The graph with node `v` renamed to `perm[v - 1]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n || perm.iter().copied().collect::<NodeSet>() != self.nodes() {
            return Err(Error::Contract("relabeling is not a permutation of 1..=n".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u - 1], perm[v - 1])?;
        }
        Ok(g)
    }

    /// Every connected component has at most two nodes.
    pub fn graph_fano_test(&self) -> bool {
        self.connected_components().iter().all(|c| c.len() <= 2)
    }

    /// Parses either format, choosing graph6 when the first non-blank byte is
    /// a graph6 byte (`?` through `~`) or the `>>graph6<<` header.
    pub fn parse(text: &str) -> Result<Graph> {
        match detect_format(text) {
            GraphFormat::Graph6 => Graph::parse_graph6(text.trim()),
            GraphFormat::EdgeList => Graph::parse_edge_list(text),
        }
    }

    /// Parses the edge-list format: an optional header line holding `n`,
    /// followed by one `u v` pair per line. `#` starts a comment. Without a
    /// header the node count is the largest label seen.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        let mut first = true;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut fields = Vec::new();
            let mut pos = 0;
            for tok in content.split_whitespace() {
                let off = content[pos..].find(tok).map(|o| o + pos).unwrap_or(pos);
                pos = off + tok.len();
                let value = tok.parse::<usize>().map_err(|_| Error::Format {
                    line: line_no,
                    offset: Some(off),
                    message: format!("expected a nonnegative integer, found {tok:?}"),
                })?;
                fields.push(value);
            }
            match (first, fields.as_slice()) {
                (_, []) => continue,
                (true, [n]) => declared = Some(*n),
                (_, [u, v]) => edges.push((line_no, *u, *v)),
                _ => {
                    return Err(Error::format(
                        line_no,
                        format!("expected \"u v\", found {} fields", fields.len()),
                    ))
                }
            }
            first = false;
        }
        let n = declared.unwrap_or_else(|| edges.iter().map(|&(_, u, v)| u.max(v)).max().unwrap_or(0));
        let mut g = Graph::empty(n).map_err(|_| {
            Error::format(1, format!("node count {n} exceeds the limit of {MAX_NODES}"))
        })?;
        for (line_no, u, v) in edges {
            g.add_edge(u, v).map_err(|e| match e {
                Error::Contract(msg) => Error::format(line_no, msg),
                other => other,
            })?;
        }
        Ok(g)
    }

    /// Parses a single graph6 string (an optional `>>graph6<<` header is
    /// accepted).
    pub fn parse_graph6(text: &str) -> Result<Graph> {
        let bytes = text
            .strip_prefix(">>graph6<<")
            .unwrap_or(text)
            .trim_end_matches(['\n', '\r'])
            .as_bytes();
        if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
            return Err(Error::Format {
                line: 1,
                offset: Some(pos),
                message: format!("byte 0x{:02x} is not a graph6 character", bytes[pos]),
            });
        }
        let (n, body) = match bytes {
            [] => return Err(Error::format(1, "empty graph6 string")),
            [126, 126, ..] => {
                return Err(Error::Format {
                    line: 1,
                    offset: Some(0),
                    message: format!("node counts above {MAX_NODES} are not supported"),
                })
            }
            [126, a, b, c, rest @ ..] => {
                let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
                (n, rest)
            }
            [126, ..] => return Err(Error::format(1, "truncated graph6 size field")),
            [first, rest @ ..] => (*first as usize - 63, rest),
        };
        if n > MAX_NODES {
            return Err(Error::Format {
                line: 1,
                offset: Some(0),
                message: format!("node count {n} exceeds the limit of {MAX_NODES}"),
            });
        }
        let bits = n * n.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if body.len() != expected {
            return Err(Error::Format {
                line: 1,
                offset: Some(bytes.len() - body.len()),
                message: format!("expected {expected} edge bytes for {n} nodes, found {}", body.len()),
            });
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                let byte = body[k / 6] - 63;
                if byte & (1 << (5 - k % 6)) != 0 {
                    g.add_edge(u + 1, v + 1)?;
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// Parses one graph6 string per nonblank line.
    pub fn parse_graph6_list(text: &str) -> Result<Vec<Graph>> {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                Graph::parse_graph6(l.trim()).map_err(|e| match e {
                    Error::Format { offset, message, .. } => Error::Format {
                        line: i + 1,
                        offset,
                        message,
                    },
                    other => other,
                })
            })
            .collect()
    }

    /// The graph6 encoding of this graph.
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::new();
        if n < 63 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            out.extend([(n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for v in 1..n {
            for u in 0..v {
                acc = (acc << 1) | self.has_edge(u + 1, v + 1) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }

    /// The edge-list encoding (header line, then one edge per line).
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Text formats accepted by [`Graph::parse`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

/// Picks a format from the first non-blank byte.
pub fn detect_format(text: &str) -> GraphFormat {
    let trimmed = text.trim_start();
    if trimmed.starts_with(">>graph6<<") {
        return GraphFormat::Graph6;
    }
    match trimmed.bytes().next() {
        Some(b) if (63..=126).contains(&b) => GraphFormat::Graph6,
        _ => GraphFormat::EdgeList,
    }
}

/// Some small named graphs used by examples and tests.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((n, 1));
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    /// The star with center 1 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("valid star")
    }

    /// K4 minus the edge {3,4}; nodes 1 and 2 have degree 3.
    pub fn diamond() -> Graph {
        Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).expect("valid diamond")
    }
}
