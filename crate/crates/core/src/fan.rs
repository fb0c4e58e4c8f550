//! The normal fan of a graph cubeahedron, built combinatorially from the
//! facet compatibility relation.
//!
//! Facets are labeled by tubes of the graph and by one bar per node. A tube
//! `I` has outward normal `sum_{i in I} e_i`, the bar of node `i` has normal
//! `-e_i`, and the maximal cones are spanned by the maximal sets of pairwise
//! compatible labels.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg;
use crate::nodeset::NodeSet;

/// A facet of the cubeahedron: a tube of the graph or the bar of a node.
///
/// Ordered tubes first (by size, then lexicographically), then bars by node.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FacetLabel {
    Tube(NodeSet),
    Bar(usize),
}

impl FacetLabel {
    pub fn is_tube(&self) -> bool {
        matches!(self, FacetLabel::Tube(_))
    }

    pub fn tube(&self) -> Option<NodeSet> {
        match *self {
            FacetLabel::Tube(s) => Some(s),
            FacetLabel::Bar(_) => None,
        }
    }

    /// Whether this label is a facet of the cubeahedron of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        match *self {
            FacetLabel::Tube(s) => s.is_subset(g.nodes()) && g.is_connected(s),
            FacetLabel::Bar(i) => (1..=g.node_count()).contains(&i),
        }
    }
}

/// Tubes print as `{1,2}`, bars as `~3`.
impl fmt::Display for FacetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FacetLabel::Tube(s) => write!(f, "{s}"),
            FacetLabel::Bar(i) => write!(f, "~{i}"),
        }
    }
}

impl fmt::Debug for FacetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FacetLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::format(1, format!("malformed facet label {s:?}"));
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('~') {
            let i: usize = rest.parse().map_err(|_| bad())?;
            if i == 0 || i > crate::nodeset::MAX_NODES {
                return Err(bad());
            }
            return Ok(FacetLabel::Bar(i));
        }
        let inner = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
        let mut set = NodeSet::EMPTY;
        for tok in inner.split(',') {
            let v: usize = tok.trim().parse().map_err(|_| bad())?;
            if v == 0 || v > crate::nodeset::MAX_NODES {
                return Err(bad());
            }
            set.insert(v);
        }
        Ok(FacetLabel::Tube(set))
    }
}

/// An integer vector in `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn zero(n: usize) -> Self {
        LatticeVector(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn add_scaled(&mut self, other: &LatticeVector, factor: i64) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += factor * b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// The outward primitive normal of the facet `label` in `Z^n`.
pub fn ray_vector(label: FacetLabel, n: usize) -> LatticeVector {
    let mut v = LatticeVector::zero(n);
    match label {
        FacetLabel::Tube(s) => {
            for i in s {
                v.0[i - 1] = 1;
            }
        }
        FacetLabel::Bar(i) => v.0[i - 1] = -1,
    }
    v
}

/// Whether the facets labeled `a` and `b` intersect.
///
/// Two tubes are compatible when nested or when their union is not a tube;
/// a tube and a bar when the bar's node lies outside the tube; two bars
/// always.
pub fn compatible(a: FacetLabel, b: FacetLabel, g: &Graph) -> bool {
    match (a, b) {
        (FacetLabel::Tube(i), FacetLabel::Tube(j)) => {
            i.is_subset(j) || j.is_subset(i) || !g.is_connected(i.union(j))
        }
        (FacetLabel::Tube(i), FacetLabel::Bar(j)) | (FacetLabel::Bar(j), FacetLabel::Tube(i)) => {
            !i.contains(j)
        }
        (FacetLabel::Bar(_), FacetLabel::Bar(_)) => true,
    }
}

/// All facet labels of the cubeahedron of `g` in canonical order.
pub fn facet_labels(g: &Graph) -> Vec<FacetLabel> {
    g.enumerate_tubes()
        .into_iter()
        .map(FacetLabel::Tube)
        .chain((1..=g.node_count()).map(FacetLabel::Bar))
        .collect()
}

/// A cone spanned by pairwise compatible facet normals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub labels: Vec<FacetLabel>,
    pub generators: Vec<LatticeVector>,
}

impl Cone {
    pub fn new(labels: Vec<FacetLabel>, n: usize) -> Self {
        let generators = labels.iter().map(|&l| ray_vector(l, n)).collect();
        Cone { labels, generators }
    }

    /// Determinant of the generator matrix; only meaningful for full cones.
    pub fn determinant(&self) -> i64 {
        let rows: Vec<Vec<i64>> = self.generators.iter().map(|v| v.0.clone()).collect();
        linalg::determinant(&rows)
    }
}

/// Fixed-width bit set over label indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn full(len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn or(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn count_and(&self, other: &Bits) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones()).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }
}

/// Pivoting Bron-Kerbosch over a bit-set adjacency.
fn maximal_cliques(adj: &[Bits]) -> Vec<Vec<usize>> {
    fn expand(adj: &[Bits], r: &mut Vec<usize>, p: Bits, mut x: Bits, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .or(&x)
            .iter()
            .max_by_key(|&u| adj[u].count_and(&p))
            .expect("P or X nonempty");
        let mut p = p;
        for v in p.and_not(&adj[pivot]).iter().collect::<Vec<_>>() {
            r.push(v);
            expand(adj, r, p.and(&adj[v]), x.and(&adj[v]), out);
            r.pop();
            p.clear(v);
            x.set(v);
        }
    }
    let len = adj.len();
    let mut out = Vec::new();
    expand(adj, &mut Vec::new(), Bits::full(len), Bits::new(len), &mut out);
    out
}

fn compatibility_matrix(labels: &[FacetLabel], g: &Graph) -> Vec<Bits> {
    let len = labels.len();
    let mut adj = vec![Bits::new(len); len];
    for i in 0..len {
        for j in i + 1..len {
            if compatible(labels[i], labels[j], g) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }
    adj
}

/// Maximal cliques of the compatibility relation, as sorted index lists into
/// `labels`, themselves sorted.
fn nerve_indices(labels: &[FacetLabel], g: &Graph) -> Result<Vec<Vec<usize>>> {
    let adj = compatibility_matrix(labels, g);
    let mut cliques = maximal_cliques(&adj);
    let n = g.node_count();
    for c in &mut cliques {
        if c.len() != n {
            let shown: Vec<String> = c.iter().map(|&i| labels[i].to_string()).collect();
            return Err(Error::FanIntegrity(format!(
                "maximal compatible set [{}] has {} labels, expected {n}",
                shown.join(", "),
                c.len()
            )));
        }
        c.sort_unstable();
    }
    cliques.sort_unstable();
    Ok(cliques)
}

/// The maximal sets of pairwise compatible facet labels, each of size `n`,
/// in deterministic order.
pub fn maximal_nerve_sets(g: &Graph) -> Result<Vec<Vec<FacetLabel>>> {
    let labels = facet_labels(g);
    Ok(nerve_indices(&labels, g)?
        .into_iter()
        .map(|c| c.into_iter().map(|i| labels[i]).collect())
        .collect())
}

/// A complete simplicial fan given by its rays and maximal cones.
#[derive(Clone, Debug)]
pub struct Fan {
    graph: Graph,
    labels: Vec<FacetLabel>,
    rays: Vec<LatticeVector>,
    maximal_cones: Vec<Vec<usize>>,
    index: HashMap<FacetLabel, usize>,
}

impl Fan {
    /// Assembles a fan from parts without verifying it. Cones are lists of
    /// labels; `labels` fixes the ray order.
    pub fn from_parts(graph: Graph, labels: Vec<FacetLabel>, cones: &[Vec<FacetLabel>]) -> Result<Fan> {
        let n = graph.node_count();
        let index: HashMap<FacetLabel, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut maximal_cones = Vec::with_capacity(cones.len());
        for cone in cones {
            let mut idx = cone
                .iter()
                .map(|l| {
                    index
                        .get(l)
                        .copied()
                        .ok_or_else(|| Error::Contract(format!("cone uses unknown label {l}")))
                })
                .collect::<Result<Vec<_>>>()?;
            idx.sort_unstable();
            maximal_cones.push(idx);
        }
        let rays = labels.iter().map(|&l| ray_vector(l, n)).collect();
        Ok(Fan {
            graph,
            labels,
            rays,
            maximal_cones,
            index,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dim(&self) -> usize {
        self.graph.node_count()
    }

    pub fn labels(&self) -> &[FacetLabel] {
        &self.labels
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray_count(&self) -> usize {
        self.labels.len()
    }

    pub fn tube_count(&self) -> usize {
        self.labels.iter().filter(|l| l.is_tube()).count()
    }

    pub fn label_index(&self, label: &FacetLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn cone_count(&self) -> usize {
        self.maximal_cones.len()
    }

    /// Maximal cones as sorted index lists into [`Fan::labels`].
    pub fn cone_indices(&self) -> &[Vec<usize>] {
        &self.maximal_cones
    }

    pub fn maximal_cones(&self) -> impl Iterator<Item = Cone> + '_ {
        self.maximal_cones.iter().map(|c| {
            Cone::new(c.iter().map(|&i| self.labels[i]).collect(), self.dim())
        })
    }

    /// Maps each codimension-one face (sorted label indices) to the labels
    /// completing it to a maximal cone, in cone order.
    pub(crate) fn facet_neighbors(&self) -> FxHashMap<Vec<usize>, Vec<usize>> {
        let faces = self.maximal_cones.iter().map(|c| c.len()).sum();
        let mut map: FxHashMap<Vec<usize>, Vec<usize>> = FxHashMap::with_capacity_and_hasher(faces, Default::default());
        for cone in &self.maximal_cones {
            for drop in 0..cone.len() {
                let mut face = cone.clone();
                let removed = face.remove(drop);
                map.entry(face).or_insert_with(|| Vec::with_capacity(2)).push(removed);
            }
        }
        map
    }

    /// The JSON-ready dump of rays and maximal cones.
    pub fn to_dump(&self) -> FanDump {
        FanDump {
            n: self.dim(),
            rays: self
                .labels
                .iter()
                .zip(&self.rays)
                .map(|(l, v)| RayDump {
                    label: l.to_string(),
                    vector: v.0.clone(),
                })
                .collect(),
            maximal_cones: self
                .maximal_cones
                .iter()
                .map(|c| c.iter().map(|&i| self.labels[i].to_string()).collect())
                .collect(),
        }
    }
}

/// Serialized form of a fan: `{"n", "rays": [{"label", "vector"}], "maximal_cones"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanDump {
    pub n: usize,
    pub rays: Vec<RayDump>,
    pub maximal_cones: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayDump {
    pub label: String,
    pub vector: Vec<i64>,
}

/// Builds and verifies the normal fan of the cubeahedron of `g`.
pub fn build_fan(g: &Graph) -> Result<Fan> {
    let labels = facet_labels(g);
    let cones = nerve_indices(&labels, g)?;
    let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let n = g.node_count();
    let rays = labels.iter().map(|&l| ray_vector(l, n)).collect();
    let fan = Fan {
        graph: g.clone(),
        labels,
        rays,
        maximal_cones: cones,
        index,
    };
    let report = verify_fan(&fan);
    if !report.is_ok() {
        return Err(Error::FanIntegrity(report.to_string()));
    }
    Ok(fan)
}

/// One failed structural check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    RayCount { expected: usize, found: usize },
    InvalidRay { label: String, vector: LatticeVector },
    ConeSize { cone: Vec<String>, size: usize },
    IncompatiblePair { cone: Vec<String>, pair: [String; 2] },
    Singular { cone: Vec<String>, determinant: i64 },
    Completeness { face: Vec<String>, cones: usize },
    NotFlag { labels: Vec<String> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RayCount { expected, found } => {
                write!(f, "ray count {found}, expected {expected}")
            }
            Violation::InvalidRay { label, vector } => write!(f, "ray {label} has vector {vector}"),
            Violation::ConeSize { cone, size } => {
                write!(f, "cone [{}] has {size} generators", cone.join(", "))
            }
            Violation::IncompatiblePair { cone, pair } => write!(
                f,
                "cone [{}] contains incompatible labels {} and {}",
                cone.join(", "),
                pair[0],
                pair[1]
            ),
            Violation::Singular { cone, determinant } => {
                write!(f, "cone [{}] has determinant {determinant}", cone.join(", "))
            }
            Violation::Completeness { face, cones } => {
                write!(f, "face [{}] lies in {cones} maximal cones, expected 2", face.join(", "))
            }
            Violation::NotFlag { labels } => write!(
                f,
                "pairwise compatible labels [{}] lie in no maximal cone",
                labels.join(", ")
            ),
        }
    }
}

/// Result of [`verify_fan`]: empty when every check passes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub cones_checked: usize,
    pub faces_checked: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(
                f,
                "ok ({} cones, {} codimension-one faces)",
                self.cones_checked, self.faces_checked
            );
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in self.violations.iter().take(8) {
            write!(f, "; {v}")?;
        }
        if self.violations.len() > 8 {
            write!(f, "; ...")?;
        }
        Ok(())
    }
}

/// Above this many labels the flagness check covers pairs only.
const FLAG_TRIPLE_LIMIT: usize = 48;

/// Structural checks on a fan: ray vectors, unimodularity of every maximal
/// cone, simplicity, completeness through the two-cones-per-wall criterion,
/// and flagness (pairwise compatible pairs, and triples for small fans, lie
/// in some maximal cone).
pub fn verify_fan(f: &Fan) -> VerificationReport {
    let g = &f.graph;
    let n = f.dim();
    let mut report = VerificationReport {
        cones_checked: f.maximal_cones.len(),
        ..Default::default()
    };
    let names = |idx: &[usize]| -> Vec<String> { idx.iter().map(|&i| f.labels[i].to_string()).collect() };

    let expected_rays = g.enumerate_tubes().len() + n;
    if f.labels.len() != expected_rays {
        report.violations.push(Violation::RayCount {
            expected: expected_rays,
            found: f.labels.len(),
        });
    }
    for (label, v) in f.labels.iter().zip(&f.rays) {
        if !label.is_valid_for(g) || *v != ray_vector(*label, n) {
            report.violations.push(Violation::InvalidRay {
                label: label.to_string(),
                vector: v.clone(),
            });
        }
    }

    for cone in &f.maximal_cones {
        if cone.len() != n {
            report.violations.push(Violation::ConeSize {
                cone: names(cone),
                size: cone.len(),
            });
            continue;
        }
        for (a, &i) in cone.iter().enumerate() {
            for &j in &cone[a + 1..] {
                if !compatible(f.labels[i], f.labels[j], g) {
                    report.violations.push(Violation::IncompatiblePair {
                        cone: names(cone),
                        pair: [f.labels[i].to_string(), f.labels[j].to_string()],
                    });
                }
            }
        }
        let rows: Vec<Vec<i64>> = cone.iter().map(|&i| f.rays[i].0.clone()).collect();
        let det = linalg::determinant(&rows);
        if det.abs() != 1 {
            report.violations.push(Violation::Singular {
                cone: names(cone),
                determinant: det,
            });
        }
    }

    let faces = f.facet_neighbors();
    report.faces_checked = faces.len();
    let mut bad_faces: Vec<(&Vec<usize>, usize)> = faces
        .iter()
        .filter(|(_, nb)| nb.len() != 2)
        .map(|(face, nb)| (face, nb.len()))
        .collect();
    bad_faces.sort();
    for (face, count) in bad_faces {
        report.violations.push(Violation::Completeness {
            face: names(face),
            cones: count,
        });
    }

    // flagness: membership bit sets over cones
    let len = f.labels.len();
    let mut containing = vec![Bits::new(f.maximal_cones.len()); len];
    for (c, cone) in f.maximal_cones.iter().enumerate() {
        for &i in cone {
            containing[i].set(c);
        }
    }
    let adj = compatibility_matrix(&f.labels, g);
    for i in 0..len {
        if containing[i].is_empty() {
            report.violations.push(Violation::NotFlag { labels: names(&[i]) });
        }
        for j in adj[i].iter().filter(|&j| j > i) {
            let both = containing[i].and(&containing[j]);
            if both.is_empty() {
                report.violations.push(Violation::NotFlag { labels: names(&[i, j]) });
                continue;
            }
            if len > FLAG_TRIPLE_LIMIT {
                continue;
            }
            for k in adj[i].and(&adj[j]).iter().filter(|&k| k > j) {
                if both.and(&containing[k]).is_empty() {
                    report.violations.push(Violation::NotFlag { labels: names(&[i, j, k]) });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn tube(v: &[usize]) -> FacetLabel {
        FacetLabel::Tube(v.iter().copied().collect())
    }

    #[test]
    fn ray_vectors() {
        assert_eq!(ray_vector(tube(&[1, 3]), 3).0, vec![1, 0, 1]);
        assert_eq!(ray_vector(FacetLabel::Bar(2), 3).0, vec![0, -1, 0]);
        assert_eq!(ray_vector(tube(&[1, 2]), 2).0, vec![1, 1]);
    }

    #[test]
    fn compatibility_cases() {
        let p2 = path(2);
        assert!(!compatible(tube(&[1]), tube(&[2]), &p2));
        assert!(!compatible(tube(&[1, 2]), FacetLabel::Bar(1), &p2));
        assert!(compatible(FacetLabel::Bar(1), FacetLabel::Bar(2), &p2));
        assert!(compatible(tube(&[1]), tube(&[1, 2]), &p2));
        assert!(compatible(tube(&[1]), FacetLabel::Bar(2), &p2));
        // {1} and {3} in P3: union not connected
        assert!(compatible(tube(&[1]), tube(&[3]), &path(3)));
    }

    #[test]
    fn label_strings_round_trip() {
        for l in facet_labels(&cycle(4)) {
            assert_eq!(l.to_string().parse::<FacetLabel>().unwrap(), l);
        }
        assert_eq!(tube(&[1, 2]).to_string(), "{1,2}");
        assert_eq!(FacetLabel::Bar(3).to_string(), "~3");
        assert!("~0".parse::<FacetLabel>().is_err());
        assert!("{1,x}".parse::<FacetLabel>().is_err());
        assert!("1,2".parse::<FacetLabel>().is_err());
    }

    #[test]
    fn label_order() {
        let labels = facet_labels(&path(2));
        let shown: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, ["{1}", "{2}", "{1,2}", "~1", "~2"]);
    }

    #[test]
    fn p2_nerve() {
        let sets = maximal_nerve_sets(&path(2)).unwrap();
        let mut got: Vec<Vec<FacetLabel>> = sets;
        got.sort();
        let mut expected = vec![
            vec![tube(&[1]), tube(&[1, 2])],
            vec![tube(&[2]), tube(&[1, 2])],
            vec![tube(&[1]), FacetLabel::Bar(2)],
            vec![tube(&[2]), FacetLabel::Bar(1)],
            vec![FacetLabel::Bar(1), FacetLabel::Bar(2)],
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn singleton_nerve() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(
            maximal_nerve_sets(&g).unwrap(),
            vec![vec![tube(&[1])], vec![FacetLabel::Bar(1)]]
        );
    }

    #[test]
    fn empty_graph_fan_is_the_origin() {
        let f = build_fan(&Graph::empty(0).unwrap()).unwrap();
        assert_eq!(f.ray_count(), 0);
        assert_eq!(f.cone_count(), 1);
    }

    #[test]
    fn build_small_fans() {
        let p2 = build_fan(&path(2)).unwrap();
        assert_eq!(p2.ray_count(), 5);
        assert_eq!(p2.cone_count(), 5);
        let single = build_fan(&Graph::empty(1).unwrap()).unwrap();
        let rays: Vec<Vec<i64>> = single.rays().iter().map(|v| v.0.clone()).collect();
        assert_eq!(rays, vec![vec![1], vec![-1]]);
        assert!(verify_fan(&build_fan(&complete(3)).unwrap()).is_ok());
    }

    #[test]
    fn missing_cone_breaks_completeness() {
        let g = path(2);
        let mut cones = maximal_nerve_sets(&g).unwrap();
        let removed = cones.remove(0);
        let f = Fan::from_parts(g.clone(), facet_labels(&g), &cones).unwrap();
        let report = verify_fan(&f);
        assert!(!report.is_ok());
        let faces: Vec<&Vec<String>> = report
            .violations
            .iter()
            .filter_map(|v| match v {
                Violation::Completeness { face, cones: 1 } => Some(face),
                _ => None,
            })
            .collect();
        // each boundary wall of the removed cone is now one-sided
        assert_eq!(faces.len(), removed.len());
        for label in &removed {
            let others: Vec<String> = removed.iter().filter(|l| *l != label).map(|l| l.to_string()).collect();
            assert!(faces.iter().any(|face| **face == others));
        }
    }

    #[test]
    fn singular_cone_is_reported() {
        let g = path(2);
        // {1} and ~1 span a degenerate cone; also incompatible
        let mut cones = maximal_nerve_sets(&g).unwrap();
        cones.push(vec![tube(&[1]), FacetLabel::Bar(1)]);
        let f = Fan::from_parts(g.clone(), facet_labels(&g), &cones).unwrap();
        let report = verify_fan(&f);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Singular { determinant: 0, .. })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::IncompatiblePair { .. })));
    }

    #[test]
    fn dump_shape() {
        let dump = build_fan(&path(2)).unwrap().to_dump();
        let json = serde_json::to_value(&dump).unwrap();
        assert_eq!(json["n"], 2);
        assert_eq!(json["rays"][2]["label"], "{1,2}");
        assert_eq!(json["rays"][3]["vector"], serde_json::json!([-1, 0]));
        let back: FanDump = serde_json::from_value(json).unwrap();
        assert_eq!(back, dump);
    }
}
