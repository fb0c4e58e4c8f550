//! Exhaustive verification over all labeled graphs on a few nodes: builds
//! every fan, classifies it by wall numbers and by the graph tests, and
//! streams a JSON-lines census.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::build_fan;
use crate::forbidden::is_chordal;
use crate::graph::Graph;
use crate::intersection::{classify_fan, FanClass};

/// Largest node count accepted by the enumerator.
pub const ENUMERATION_CAP: usize = 9;

const BATCH: u64 = 4096;

/// Node pairs `(u, v)`, `u < v`, in the order used for edge masks: bit `k`
/// of a mask is the `k`-th pair.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect()
}

/// The graph whose edge set is selected by `mask` over [`edge_pairs`].
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("n within capacity");
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge(u, v).expect("valid pair");
        }
    }
    g
}

fn check_cap(n: usize) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::Capacity {
            what: "enumeration node count",
            got: n,
            limit: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` nodes in edge-mask order,
/// optionally only the connected ones.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    check_cap(n)?;
    let pairs = edge_pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total)
        .map(move |mask| graph_from_mask(n, &pairs, mask))
        .filter(move |g| !connected_only || g.is_connected(g.nodes())))
}

/// One census line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub tubes: usize,
    pub maximal_cones: usize,
    pub walls: usize,
    pub min_number: Option<i64>,
    pub fan_class: FanClass,
    pub graph_class: FanClass,
    pub agree: bool,
}

/// Builds, verifies and classifies the fan of `g` and compares with the
/// graph-side classification.
pub fn census_record(g: &Graph) -> Result<CensusRecord> {
    let fan = build_fan(g)?;
    let c = classify_fan(&fan)?;
    let graph_class = FanClass::from_graph(g);
    if graph_class.is_weak_fano() && !is_chordal(g) {
        return Err(Error::Internal(format!(
            "graph {} passes the weak Fano test but is not chordal",
            g.to_graph6()
        )));
    }
    Ok(CensusRecord {
        graph: g.to_graph6(),
        n: g.node_count(),
        edges: g.edge_count(),
        tubes: fan.tube_count(),
        maximal_cones: fan.cone_count(),
        walls: c.wall_count,
        min_number: c.min_number,
        fan_class: c.class,
        graph_class,
        agree: c.class == graph_class,
    })
}

#[derive(Clone, Debug)]
pub struct CrosscheckOptions {
    pub max_nodes: usize,
    pub connected_only: bool,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
}

impl Default for CrosscheckOptions {
    fn default() -> Self {
        CrosscheckOptions {
            max_nodes: 4,
            connected_only: false,
            jobs: 0,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrosscheckReport {
    /// Graphs checked per node count.
    pub per_n: BTreeMap<usize, usize>,
    pub buckets: BTreeMap<FanClass, usize>,
    pub disagreements: usize,
}

impl CrosscheckReport {
    pub fn total(&self) -> usize {
        self.per_n.values().sum()
    }
}

/// `64+8+2+1 graphs, 0 disagreements`, largest node count first.
impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.per_n.values().rev().map(|c| c.to_string()).collect();
        write!(f, "{} graphs, {} disagreements", counts.join("+"), self.disagreements)
    }
}

/// Runs the census for every labeled graph with `1..=max_nodes` nodes.
///
/// Graphs are processed in parallel batches and written to `sink` in
/// edge-mask order, so the output does not depend on the worker count. The
/// first disagreement aborts the run.
pub fn cross_validate(opts: &CrosscheckOptions, mut sink: Option<&mut dyn Write>) -> Result<CrosscheckReport> {
    check_cap(opts.max_nodes)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let mut report = CrosscheckReport::default();
    for n in 1..=opts.max_nodes {
        let pairs = edge_pairs(n);
        let total = 1u64 << pairs.len();
        report.per_n.insert(n, 0);
        let mut start = 0;
        while start < total {
            let end = (start + BATCH).min(total);
            let records: Vec<Option<Result<CensusRecord>>> = pool.install(|| {
                (start..end)
                    .into_par_iter()
                    .map(|mask| {
                        let g = graph_from_mask(n, &pairs, mask);
                        if opts.connected_only && !g.is_connected(g.nodes()) {
                            None
                        } else {
                            Some(census_record(&g))
                        }
                    })
                    .collect()
            });
            for rec in records.into_iter().flatten() {
                let rec = rec?;
                if let Some(out) = sink.as_mut() {
                    serde_json::to_writer(&mut **out, &rec)?;
                    out.write_all(b"\n")?;
                }
                *report.per_n.get_mut(&n).expect("inserted") += 1;
                *report.buckets.entry(rec.fan_class).or_default() += 1;
                if !rec.agree {
                    report.disagreements += 1;
                    return Err(Error::Disagreement {
                        graph6: rec.graph,
                        fan: rec.fan_class.to_string(),
                        graph: rec.graph_class.to_string(),
                    });
                }
            }
            start = end;
        }
    }
    if let Some(out) = sink.as_mut() {
        out.flush()?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        assert_eq!(enumerate_graphs(1, false).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(2, false).unwrap().count(), 2);
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4, false).unwrap().count(), 64);
        // connected labeled graphs: 1, 1, 4, 38
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(4, true).unwrap().count(), 38);
        assert!(matches!(enumerate_graphs(10, false), Err(Error::Capacity { .. })));
    }

    #[test]
    fn mask_order() {
        let pairs = edge_pairs(3);
        assert_eq!(pairs, vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(graph_from_mask(3, &pairs, 0b101).edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn up_to_two_nodes_all_fano() {
        let report = cross_validate(&CrosscheckOptions { max_nodes: 2, ..Default::default() }, None).unwrap();
        assert_eq!(report.total(), 3);
        assert_eq!(report.buckets.get(&FanClass::Fano), Some(&3));
        assert_eq!(report.to_string(), "2+1 graphs, 0 disagreements");
    }

    #[test]
    fn census_lines_are_deterministic_across_jobs() {
        let run = |jobs| {
            let mut buf = Vec::new();
            let opts = CrosscheckOptions { max_nodes: 4, connected_only: false, jobs };
            let report = cross_validate(&opts, Some(&mut buf)).unwrap();
            (report, buf)
        };
        let (r1, b1) = run(1);
        let (r4, b4) = run(4);
        assert_eq!(r1, r4);
        assert_eq!(b1, b4);
        assert_eq!(r1.to_string(), "64+8+2+1 graphs, 0 disagreements");
        let first: CensusRecord = serde_json::from_str(std::str::from_utf8(&b1).unwrap().lines().next().unwrap()).unwrap();
        assert_eq!(first.graph, "@");
        assert_eq!(first.walls, 1);
        assert_eq!(first.min_number, Some(2));
    }
}
