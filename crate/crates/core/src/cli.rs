//! The `cubeahedron` command line.
//!
//! Exit status: 0 ok, 1 usage or parse error, 2 oracle disagreement,
//! 3 fan integrity failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::crosscheck::{cross_validate, CrosscheckOptions};
use crate::error::{Error, Result};
use crate::fan::build_fan;
use crate::forbidden::{find_forbidden, ForbiddenKind, ForbiddenWitness};
use crate::graph::Graph;
use crate::intersection::{
    classify_fan, enumerate_walls, extract_from_wall, witness_nerve, Classification, FanClass, NerveRequest,
    WallDump,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;
pub const EXIT_INTEGRITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cubeahedron", version, about = "Fans, wall numbers and Fano classification of graph cubeahedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the toric variety as Fano, weak Fano, or neither, and compare
    /// with the graph-side tests.
    Classify(GraphArgs),
    /// Print the rays and maximal cones of the fan.
    Fan(GraphArgs),
    /// Print every wall with its relation coefficients and number.
    Walls(GraphArgs),
    /// Print a wall of number <= 0 and the graph configurations behind it.
    Witness(GraphArgs),
    /// Check both classifications on every labeled graph up to a node count.
    Crosscheck(CrosscheckArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Edgelist,
    Graph6,
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Graph file (edge list or graph6); `-` reads standard input.
    input: Option<PathBuf>,
    /// Inline edges such as "1-2,2-3".
    #[arg(long, conflicts_with = "input")]
    edges: Option<String>,
    /// Node count for --edges (defaults to the largest label).
    #[arg(long, requires = "edges")]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CrosscheckArgs {
    #[arg(long, default_value_t = 4)]
    max_nodes: usize,
    #[arg(long)]
    connected_only: bool,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the JSON-lines census here.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Runs the command line with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Disagreement { .. } => EXIT_DISAGREEMENT,
        Error::FanIntegrity(_) | Error::Internal(_) => EXIT_INTEGRITY,
        _ => EXIT_USAGE,
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Classify(a) => classify_cmd(&read_graph(&a)?, a.json, out),
        Command::Fan(a) => fan_cmd(&read_graph(&a)?, a.json, out),
        Command::Walls(a) => walls_cmd(&read_graph(&a)?, a.json, out),
        Command::Witness(a) => witness_cmd(&read_graph(&a)?, a.json, out),
        Command::Crosscheck(a) => crosscheck_cmd(&a, out),
    }
}

fn read_graph(a: &GraphArgs) -> Result<Graph> {
    if let Some(edges) = &a.edges {
        return parse_inline_edges(edges, a.n);
    }
    let text = match a.input.as_deref() {
        None => return Err(Error::Contract("no graph given: pass a file, `-`, or --edges".into())),
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
        Some(p) => std::fs::read_to_string(p)?,
    };
    match a.format {
        FormatArg::Auto => Graph::parse(&text),
        FormatArg::Edgelist => Graph::parse_edge_list(&text),
        FormatArg::Graph6 => Graph::parse_graph6(text.trim()),
    }
}

/// Parses `"1-2,2-3"`; `n` defaults to the largest label.
pub fn parse_inline_edges(spec: &str, n: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    for (k, item) in spec.split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
        let bad = || Error::Format {
            line: 1,
            offset: None,
            message: format!("edge {} ({item:?}) is not of the form u-v", k + 1),
        };
        let (u, v) = item.split_once('-').ok_or_else(bad)?;
        let u: usize = u.trim().parse().map_err(|_| bad())?;
        let v: usize = v.trim().parse().map_err(|_| bad())?;
        edges.push((u, v));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}

#[derive(Serialize)]
struct WitnessJson {
    kind: ForbiddenKind,
    nodes: Vec<usize>,
}

impl From<ForbiddenWitness> for WitnessJson {
    fn from(w: ForbiddenWitness) -> Self {
        WitnessJson {
            kind: w.kind,
            nodes: w.nodes.to_vec(),
        }
    }
}

#[derive(Serialize)]
struct ClassifyJson {
    graph6: String,
    n: usize,
    edges: usize,
    fan_class: FanClass,
    graph_class: FanClass,
    graph_fano: bool,
    graph_weak_fano: bool,
    min_number: Option<i64>,
    wall_count: usize,
    witness_wall: Option<WallDump>,
    forbidden: Option<WitnessJson>,
    agree: bool,
}

fn classify_cmd(g: &Graph, json: bool, out: &mut dyn Write) -> Result<i32> {
    let fan = build_fan(g)?;
    let c: Classification = classify_fan(&fan)?;
    let graph_fano = g.graph_fano_test();
    let forbidden = find_forbidden(g);
    let graph_class = FanClass::from_graph(g);
    let agree = graph_class == c.class;
    if json {
        let payload = ClassifyJson {
            graph6: g.to_graph6(),
            n: g.node_count(),
            edges: g.edge_count(),
            fan_class: c.class,
            graph_class,
            graph_fano,
            graph_weak_fano: forbidden.is_none(),
            min_number: c.min_number,
            wall_count: c.wall_count,
            witness_wall: c.witness.as_ref().map(|w| w.to_dump()),
            forbidden: forbidden.map(Into::into),
            agree,
        };
        serde_json::to_writer(&mut *out, &payload)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{}", c.class)?;
        let m = g.edge_count();
        let plural = if m == 1 { "" } else { "s" };
        writeln!(out, "graph: {} (n={}, {m} edge{plural})", g.to_graph6(), g.node_count())?;
        match c.min_number {
            Some(m) => writeln!(out, "fan: {} (min wall number {m} over {} walls)", c.class, c.wall_count)?,
            None => writeln!(out, "fan: {} (no walls)", c.class)?,
        }
        if let Some(w) = &c.witness {
            writeln!(out, "witness wall: {w}")?;
        }
        writeln!(
            out,
            "graph components <= 2 nodes: {}",
            if graph_fano { "yes (Fano)" } else { "no" }
        )?;
        match forbidden {
            Some(w) => writeln!(out, "forbidden induced subgraph: {w}")?,
            None => writeln!(out, "forbidden induced subgraph: none (weak Fano)")?,
        }
        writeln!(out, "graph: {graph_class}")?;
        writeln!(out, "{}", if agree { "agree" } else { "MISMATCH" })?;
    }
    Ok(if agree { EXIT_OK } else { EXIT_DISAGREEMENT })
}

fn fan_cmd(g: &Graph, json: bool, out: &mut dyn Write) -> Result<i32> {
    let fan = build_fan(g)?;
    if json {
        serde_json::to_writer(&mut *out, &fan.to_dump())?;
        writeln!(out)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "n {}", fan.dim())?;
    writeln!(out, "rays {}", fan.ray_count())?;
    for (l, v) in fan.labels().iter().zip(fan.rays()) {
        writeln!(out, "  {l} {v}")?;
    }
    writeln!(out, "maximal cones {}", fan.cone_count())?;
    for cone in fan.maximal_cones() {
        let shown: Vec<String> = cone.labels.iter().map(|l| l.to_string()).collect();
        writeln!(out, "  [{}]", shown.join(", "))?;
    }
    Ok(EXIT_OK)
}

fn walls_cmd(g: &Graph, json: bool, out: &mut dyn Write) -> Result<i32> {
    let fan = build_fan(g)?;
    let walls = enumerate_walls(&fan)?;
    if json {
        let dumps: Vec<WallDump> = walls.iter().map(|w| w.to_dump()).collect();
        serde_json::to_writer(&mut *out, &dumps)?;
        writeln!(out)?;
    } else {
        for w in &walls {
            writeln!(out, "{w}")?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct WitnessReportJson {
    wall: Option<WallDump>,
    forbidden: Option<WitnessJson>,
    proof_wall: Option<WallDump>,
    proof_expected_number: Option<i64>,
    extracted: Option<WitnessJson>,
}

fn witness_cmd(g: &Graph, json: bool, out: &mut dyn Write) -> Result<i32> {
    let fan = build_fan(g)?;
    let walls = enumerate_walls(&fan)?;
    let min_wall = walls.iter().min_by_key(|w| w.number).filter(|w| w.number <= 0);
    let forbidden = find_forbidden(g);

    let request = match forbidden {
        Some(w) => Some(NerveRequest::Pattern(w)),
        None if !g.graph_fano_test() => Some(NerveRequest::LargeComponent),
        None => None,
    };
    let proof = match request {
        Some(r) => {
            let nerve = witness_nerve(g, r)?;
            let wall = nerve.realize(&fan)?;
            if wall.number != nerve.expected_number {
                return Err(Error::FanIntegrity(format!(
                    "proof wall has number {}, expected {}",
                    wall.number, nerve.expected_number
                )));
            }
            Some((wall, nerve.expected_number))
        }
        None => None,
    };
    let extracted = walls
        .iter()
        .filter(|w| w.number <= -1)
        .find_map(|w| extract_from_wall(g, w))
        .transpose()?;

    if json {
        let payload = WitnessReportJson {
            wall: min_wall.map(|w| w.to_dump()),
            forbidden: forbidden.map(Into::into),
            proof_wall: proof.as_ref().map(|(w, _)| w.to_dump()),
            proof_expected_number: proof.as_ref().map(|(_, e)| *e),
            extracted: extracted.map(Into::into),
        };
        serde_json::to_writer(&mut *out, &payload)?;
        writeln!(out)?;
        return Ok(EXIT_OK);
    }
    match min_wall {
        Some(w) => writeln!(out, "minimal wall: {w}")?,
        None => writeln!(out, "minimal wall: none with number <= 0 (Fano)")?,
    }
    if let Some(w) = forbidden {
        writeln!(out, "forbidden induced subgraph: {w}")?;
    }
    if let Some((w, expected)) = &proof {
        writeln!(out, "proof wall (expected {expected}): {w}")?;
    }
    if let Some(w) = extracted {
        writeln!(out, "extracted from a tube-tube wall: {w}")?;
    }
    Ok(EXIT_OK)
}

fn crosscheck_cmd(a: &CrosscheckArgs, out: &mut dyn Write) -> Result<i32> {
    let opts = CrosscheckOptions {
        max_nodes: a.max_nodes,
        connected_only: a.connected_only,
        jobs: a.jobs,
    };
    let report = match &a.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            cross_validate(&opts, Some(&mut file))?
        }
        None => cross_validate(&opts, None)?,
    };
    writeln!(out, "{report}")?;
    for (class, count) in &report.buckets {
        writeln!(out, "  {class}: {count}")?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("cubeahedron").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn inline_edges() {
        let g = parse_inline_edges("1-2, 2-3", None).unwrap();
        assert_eq!(g, crate::graph::named::path(3));
        assert_eq!(parse_inline_edges("1-2", Some(4)).unwrap().node_count(), 4);
        assert!(parse_inline_edges("1:2", None).is_err());
        assert!(parse_inline_edges("1-1", None).is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, _, err) = run_str(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(!err.is_empty());
        let (code, _, err) = run_str(&["classify"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("no graph given"));
        let (code, _, _) = run_str(&["classify", "--edges", "1-x"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("crosscheck"));
    }

    #[test]
    fn integrity_errors_map_to_three() {
        assert_eq!(exit_code(&Error::FanIntegrity("x".into())), EXIT_INTEGRITY);
        assert_eq!(
            exit_code(&Error::Disagreement {
                graph6: "A_".into(),
                fan: "Fano".into(),
                graph: "NotWeakFano".into()
            }),
            EXIT_DISAGREEMENT
        );
    }
}
