//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cubeahedron::crosscheck::{edge_pairs, graph_from_mask};
use cubeahedron::graph::named;
use cubeahedron::{
    build_fan, classify_fan, enumerate_walls, extract_cycle_or_diamond, find_forbidden, witness_nerve, FanClass,
    ForbiddenKind, Graph, NerveRequest, NodeSet,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p2_golden() -> Outcome {
    let start = Instant::now();
    let g = named::path(2);
    let fan = build_fan(&g).map_err(|e| e.to_string())?;
    let rays: BTreeSet<Vec<i64>> = fan.rays().iter().map(|v| v.0.clone()).collect();
    let expected: BTreeSet<Vec<i64>> = [vec![1, 0], vec![0, 1], vec![1, 1], vec![-1, 0], vec![0, -1]].into();
    ensure(fan.ray_count() == 5 && rays == expected, || format!("rays {rays:?}"))?;
    let cones: BTreeSet<BTreeSet<String>> = fan
        .maximal_cones()
        .map(|c| c.labels.iter().map(|l| l.to_string()).collect())
        .collect();
    let expected: BTreeSet<BTreeSet<String>> = [
        ["{1}", "{1,2}"],
        ["{2}", "{1,2}"],
        ["{1}", "~2"],
        ["{2}", "~1"],
        ["~1", "~2"],
    ]
    .iter()
    .map(|c| c.iter().map(|s| s.to_string()).collect())
    .collect();
    ensure(cones == expected, || format!("cones {cones:?}"))?;
    let walls = enumerate_walls(&fan).map_err(|e| e.to_string())?;
    let mut numbers: Vec<i64> = walls.iter().map(|w| w.number).collect();
    numbers.sort_unstable();
    ensure(numbers == [1, 1, 1, 2, 2], || format!("wall numbers {numbers:?}"))?;
    let c = classify_fan(&fan).map_err(|e| e.to_string())?;
    ensure(c.min_number == Some(1) && c.class == FanClass::Fano, || format!("{c:?}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("5 rays, 5 cones, wall numbers {numbers:?}, Fano in {elapsed:?}"))
}

#[derive(Default)]
struct Sweep {
    graphs: usize,
    fano_disagree: Vec<String>,
    weak_disagree: Vec<String>,
    validity: Vec<String>,
}

fn sweep_graph(g: &Graph) -> Sweep {
    let mut s = Sweep { graphs: 1, ..Default::default() };
    let name = g.to_graph6();
    let n = g.node_count();
    let fan = match build_fan(g) {
        Ok(f) => f,
        Err(e) => {
            s.validity.push(format!("{name}: {e}"));
            return s;
        }
    };
    let adj = common::adjacency(g);
    let tube_count = common::tubes(&adj).len();
    if fan.ray_count() != tube_count + n {
        s.validity.push(format!("{name}: {} rays, expected {}", fan.ray_count(), tube_count + n));
    }
    for cone in fan.maximal_cones() {
        if cone.labels.len() != n {
            s.validity.push(format!("{name}: cone of size {}", cone.labels.len()));
        }
        let det = cone.determinant();
        if det.abs() != 1 {
            s.validity.push(format!("{name}: cone determinant {det}"));
        }
    }
    let walls = match enumerate_walls(&fan) {
        Ok(w) => w,
        Err(e) => {
            s.validity.push(format!("{name}: {e}"));
            return s;
        }
    };
    // each maximal cone has n facets, each shared by exactly two cones
    if walls.len() * 2 != fan.cone_count() * n {
        s.validity.push(format!("{name}: {} walls for {} cones", walls.len(), fan.cone_count()));
    }
    let min = walls.iter().map(|w| w.number).min();
    let class = FanClass::from_min_number(min);
    let small_components = g.connected_components().iter().all(|c| c.len() <= 2);
    let forbidden = common::has_forbidden(&adj);
    if (class == FanClass::Fano) != small_components {
        s.fano_disagree.push(format!("{name}: {class}"));
    }
    if (class != FanClass::NotWeakFano) != !forbidden {
        s.weak_disagree.push(format!("{name}: {class}"));
    }
    s
}

fn merge(mut a: Sweep, b: Sweep) -> Sweep {
    a.graphs += b.graphs;
    a.fano_disagree.extend(b.fano_disagree);
    a.weak_disagree.extend(b.weak_disagree);
    a.validity.extend(b.validity);
    a
}

fn sweep(max_nodes: usize) -> (Sweep, Duration) {
    let start = Instant::now();
    let total = (1..=max_nodes)
        .map(|n| {
            let pairs = edge_pairs(n);
            (0..1u64 << pairs.len())
                .into_par_iter()
                .map(|mask| sweep_graph(&graph_from_mask(n, &pairs, mask)))
                .reduce(Sweep::default, merge)
        })
        .fold(Sweep::default(), merge);
    (total, start.elapsed())
}

fn summarize(graphs: usize, failures: &[String], what: &str) -> Outcome {
    const EXPECTED: usize = 32768 + 1024 + 64 + 8 + 2 + 1;
    if graphs != EXPECTED {
        return Err(format!("checked {graphs} graphs, expected {EXPECTED}"));
    }
    match failures.first() {
        None => Ok(format!("{graphs} graphs, 0 {what}")),
        Some(first) => Err(format!("{} {what}, first {first}", failures.len())),
    }
}

fn proof_witnesses() -> Outcome {
    let claw = named::star(3);
    let diamond = named::diamond();
    let c4 = named::cycle(4);
    let cases = [
        ("claw", &claw, ForbiddenKind::Claw, -1),
        ("diamond", &diamond, ForbiddenKind::Diamond, -1),
        ("C4", &c4, ForbiddenKind::CycleGe4, -1),
    ];
    let mut shown = Vec::new();
    for (name, g, kind, expected) in cases {
        let w = find_forbidden(g).ok_or_else(|| format!("{name}: no forbidden subgraph found"))?;
        ensure(w.kind == kind, || format!("{name}: found {w}"))?;
        let nerve = witness_nerve(g, NerveRequest::Pattern(w)).map_err(|e| format!("{name}: {e}"))?;
        let fan = build_fan(g).map_err(|e| e.to_string())?;
        let wall = nerve.realize(&fan).map_err(|e| format!("{name}: {e}"))?;
        ensure(wall.number == expected && nerve.expected_number == expected, || {
            format!("{name}: wall {wall}")
        })?;
        shown.push(format!("{name} {}", wall.number));
    }
    let p3 = named::path(3);
    let nerve = witness_nerve(&p3, NerveRequest::LargeComponent).map_err(|e| e.to_string())?;
    let wall = nerve.realize(&build_fan(&p3).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(wall.number == 0, || format!("P3: wall {wall}"))?;
    shown.push(format!("P3 {}", wall.number));
    Ok(shown.join(", "))
}

fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let p = rng.gen_range(0.3..0.8);
    let mut g = Graph::empty(n).expect("small");
    for (u, v) in edge_pairs(n) {
        if rng.gen_bool(p) {
            g.add_edge(u, v).expect("valid");
        }
    }
    g
}

fn cycle_or_diamond_extraction() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    let mut done = 0;
    let mut kinds = [0usize; 2];
    while done < 1000 {
        let n = rng.gen_range(3..=8);
        let g = random_graph(&mut rng, n);
        let adj = common::adjacency(&g);
        let tubes = common::tubes(&adj);
        let pairs: Vec<(u64, u64)> = tubes
            .iter()
            .flat_map(|&a| tubes.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| a & b != 0 && !common::connected(&adj, a & b))
            .collect();
        if pairs.is_empty() {
            continue;
        }
        let (j, j2) = pairs[rng.gen_range(0..pairs.len())];
        let w = extract_cycle_or_diamond(&g, NodeSet::from_bits(j), NodeSet::from_bits(j2))
            .map_err(|e| format!("{} with {j:b}, {j2:b}: {e}", g.to_graph6()))?;
        let s = w.nodes.bits();
        let ok = match w.kind {
            ForbiddenKind::CycleGe4 => common::is_induced_cycle(&adj, s),
            ForbiddenKind::Diamond => common::is_diamond(&adj, s),
            ForbiddenKind::Claw => false,
        };
        ensure(ok, || format!("{} with {j:b}, {j2:b}: returned {w}", g.to_graph6()))?;
        kinds[(w.kind == ForbiddenKind::Diamond) as usize] += 1;
        done += 1;
    }
    Ok(format!("1000 triples: {} cycles, {} diamonds", kinds[0], kinds[1]))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let mut graphs = 0;
    for n in 1..=7 {
        let pairs = edge_pairs(n);
        let bad: Vec<String> = (0..1u64 << pairs.len())
            .into_par_iter()
            .filter_map(|mask| {
                let g = graph_from_mask(n, &pairs, mask);
                let adj = common::adjacency(&g);
                let tubes: Vec<u64> = g.enumerate_tubes().iter().map(|t| t.bits()).collect();
                let mut sorted = tubes.clone();
                sorted.sort_unstable();
                if sorted != common::tubes(&adj) {
                    return Some(format!("{}: tube sets differ", g.to_graph6()));
                }
                let found = find_forbidden(&g);
                if found.is_some() != common::has_forbidden(&adj) {
                    return Some(format!("{}: detector says {found:?}", g.to_graph6()));
                }
                if let Some(w) = found {
                    let s = w.nodes.bits();
                    let ok = match w.kind {
                        ForbiddenKind::CycleGe4 => common::is_induced_cycle(&adj, s),
                        ForbiddenKind::Diamond => common::is_diamond(&adj, s),
                        ForbiddenKind::Claw => common::is_claw(&adj, s),
                    };
                    if !ok {
                        return Some(format!("{}: bad witness {w}", g.to_graph6()));
                    }
                }
                None
            })
            .collect();
        graphs += 1usize << pairs.len();
        failures.extend(bad);
    }
    match failures.first() {
        None => Ok(format!("{graphs} graphs, 0 failures in {:?}", start.elapsed())),
        Some(first) => Err(format!("{} failures, first {first}", failures.len())),
    }
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: &str, name: &str, outcome: Outcome| {
        match &outcome {
            Ok(detail) => println!("PASS [{id}] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{id}] {name}: {detail}");
            }
        }
    };
    report("1", "P2 golden pipeline", p2_golden());
    let (s, elapsed) = sweep(6);
    report(
        "2",
        "Fano iff components have at most two nodes, n <= 6",
        summarize(s.graphs, &s.fano_disagree, "disagreements").and_then(|m| {
            ensure(elapsed < Duration::from_secs(600), || format!("{m}, but took {elapsed:?}"))?;
            Ok(format!("{m} in {elapsed:?}"))
        }),
    );
    report(
        "3",
        "weak Fano iff no induced long cycle, diamond or claw, n <= 6",
        summarize(s.graphs, &s.weak_disagree, "disagreements"),
    );
    report("4", "proof witness walls", proof_witnesses());
    report("5", "fan validity, n <= 6", summarize(s.graphs, &s.validity, "failures"));
    report("6", "cycle-or-diamond extraction", cycle_or_diamond_extraction());
    report("7", "tube and forbidden-subgraph oracles, n <= 7", oracle_equivalence());
    if failed == 0 {
        println!("acceptance: all 7 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
