//! Command-line front end. Every subcommand prints canonical JSON (or a
//! plain table) that echoes the canonicalized input.
//!
//! Exit codes: 0 on success, 2 on input errors, 3 when a resource cap is
//! hit, 1 when an internal consistency check fails.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::covers::{classify_irreducible_graph_covers, is_irreducible_graph, CoverVector, GeneratorSet};
use crate::error::{invalid, Error, Result};
use crate::graph::{parse_clutter_json, parse_graph, Clutter, Graph, GraphJson};
use crate::hilbert::{extreme_rays, hilbert_basis};
use crate::limits::Limits;
use crate::linalg::IntVec;
use crate::polyhedra::{dd_facets, irreducible_representation, simis_cone, HalfspaceSystem, RayList};
use crate::sra::{self, IrreducibleSubgraphReport};

#[derive(Parser, Debug)]
#[command(
    name = "rees-covers",
    version,
    about = "Generators of symbolic Rees algebras of edge ideals and cover ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph file: JSON {"n", "edges"} or an "i j" edge list ("-" for stdin).
    #[arg(long, global = true, value_name = "FILE")]
    graph: Option<PathBuf>,

    /// Clutter file: JSON {"n", "edges"}.
    #[arg(long, global = true, value_name = "FILE")]
    clutter: Option<PathBuf>,

    /// Cone file: JSON {"dim", "rays"} or {"dim", "normals"}.
    #[arg(long, global = true, value_name = "FILE")]
    cone: Option<PathBuf>,

    /// Degree b.
    #[arg(long, global = true)]
    b: Option<u32>,

    /// Number of cones in a cone tower.
    #[arg(long, global = true)]
    r: Option<usize>,

    /// Comma-separated vector; entries may be fractions such as 1/2.
    #[arg(long, global = true, value_name = "LIST", allow_hyphen_values = true)]
    vector: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[arg(long, global = true)]
    max_subsets: Option<u64>,

    #[arg(long, global = true)]
    max_parallelepiped: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Minimal vertex covers.
    Blocker,
    /// Vertex covering number.
    Alpha0,
    /// Irreducible covers of a graph, by shape.
    CoversClassify,
    /// Whether the graph is irreducible.
    IrreducibleGraph,
    /// Facets of the Rees cone of the edge ideal.
    ReesFacets,
    /// Halfspaces of the Simis cone.
    SimisCone,
    /// Minimal Hilbert basis of a cone.
    HilbertBasis,
    /// Generators of the symbolic Rees algebra of the edge ideal.
    SraEdge,
    /// Generators of the symbolic Rees algebra of the cover ideal.
    SraCover,
    /// Perfect-graph test.
    Perfect,
    /// Irreducible induced subgraphs.
    IrreducibleSubgraphs,
    /// Induced odd holes.
    OddHoles,
    /// Induced odd antiholes.
    OddAntiholes,
    /// Minimal generators of a symbolic power (needs --b).
    SymbolicPower,
    /// Edge cone membership (needs --vector).
    EdgeConeMember,
    /// Perfect matching test for a connected bipartite graph.
    Matching,
    /// Lift a facet (--vector, --b) to the cone over the graph.
    ConeLift,
    /// Generator over the r-fold cone tower (needs --r).
    ConeTower,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeJson {
    dim: usize,
    rays: Option<Vec<IntVec>>,
    normals: Option<Vec<IntVec>>,
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Output goes to stdout, diagnostics to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run_with(args, &mut out, &mut err)
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    configure_threads();
    match execute(&cli) {
        Ok(value) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&value).expect("JSON values serialize"),
                Format::Table => render_table(&value),
            };
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::IsolatedVertex(_) | Error::UnsupportedCone(_) => 2,
        Error::ResourceLimit(_) | Error::Overflow(_) => 3,
        Error::Consistency(_) => 1,
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("REES_COVERS_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // a pool built earlier in the same process stays in place
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| invalid(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

impl Cli {
    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(m) = self.max_subsets {
            l.max_subsets = m;
        }
        if let Some(m) = self.max_parallelepiped {
            l.max_parallelepiped = m;
        }
        l
    }

    fn graph(&self) -> Result<Graph> {
        match (&self.graph, &self.clutter) {
            (Some(p), _) => parse_graph(&read_input(p)?),
            (None, Some(p)) => {
                let c = parse_clutter_json(&read_input(p)?)?;
                c.as_graph().ok_or_else(|| invalid("this subcommand needs a graph, not a clutter"))
            }
            (None, None) => Err(invalid("--graph FILE is required")),
        }
    }

    /// The clutter given by --clutter, or the edge clutter of --graph.
    fn clutter(&self) -> Result<Clutter> {
        match (&self.clutter, &self.graph) {
            (Some(p), _) => parse_clutter_json(&read_input(p)?),
            (None, Some(p)) => Ok(parse_graph(&read_input(p)?)?.to_clutter()),
            (None, None) => Err(invalid("--graph FILE or --clutter FILE is required")),
        }
    }

    fn vector(&self) -> Result<Vec<Rational64>> {
        let text = self.vector.as_deref().ok_or_else(|| invalid("--vector LIST is required"))?;
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<Rational64>()
                    .map_err(|e| invalid(format!("vector entry {t:?}: {e}")))
            })
            .collect()
    }

    fn natural_vector(&self) -> Result<Vec<u32>> {
        self.vector()?
            .into_iter()
            .map(|x| {
                if x.is_integer() && x.to_integer() >= 0 {
                    u32::try_from(x.to_integer()).map_err(|_| invalid("vector entry too large"))
                } else {
                    Err(invalid(format!("vector entry {x} must be a natural number")))
                }
            })
            .collect()
    }
}

fn covers_json(set: &GeneratorSet) -> Value {
    serde_json::to_value(set).expect("generator sets serialize")
}

fn by_degree(set: &GeneratorSet) -> Value {
    let map: serde_json::Map<String, Value> = set
        .by_degree()
        .into_iter()
        .enumerate()
        .filter(|(_, k)| *k > 0)
        .map(|(b, k)| (b.to_string(), json!(k)))
        .collect();
    Value::Object(map)
}

fn reports_json(r: &[IrreducibleSubgraphReport]) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn execute(cli: &Cli) -> Result<Value> {
    let limits = cli.limits();
    let value = match cli.command {
        Command::Blocker => {
            let c = cli.clutter()?;
            json!({ "input": GraphJson::from(&c), "blocker": GraphJson::from(&c.blocker(&limits)?) })
        }
        Command::Alpha0 => {
            let c = cli.clutter()?;
            json!({ "input": GraphJson::from(&c), "alpha0": c.alpha0() })
        }
        Command::CoversClassify => {
            let g = cli.graph()?;
            let cl = classify_irreducible_graph_covers(&g, &limits)?;
            json!({ "input": GraphJson::from(&g), "covers": cl.entries })
        }
        Command::IrreducibleGraph => {
            let g = cli.graph()?;
            json!({ "input": GraphJson::from(&g), "alpha0": g.alpha0(), "irreducible": is_irreducible_graph(&g) })
        }
        Command::ReesFacets => {
            let c = cli.clutter()?;
            let rep = irreducible_representation(&c)?;
            json!({
                "input": GraphJson::from(&c),
                "representation": rep,
                "psi_image": covers_json(&crate::polyhedra::psi_image(&rep)?),
            })
        }
        Command::SimisCone => {
            let c = cli.clutter()?;
            let h = simis_cone(&c, &limits)?;
            json!({ "input": GraphJson::from(&c), "cone": { "dim": h.dim(), "normals": h.normals() } })
        }
        Command::HilbertBasis => {
            let path = cli.cone.as_ref().ok_or_else(|| invalid("--cone FILE is required"))?;
            let raw: ConeJson = serde_json::from_str(&read_input(path)?)
                .map_err(|e| invalid(format!("cone JSON: {e}")))?;
            let (basis, rays) = match (raw.rays, raw.normals) {
                (Some(rays), _) => {
                    let r = RayList::new(raw.dim, rays)?;
                    (hilbert_basis(&r, &limits)?, extreme_rays(&r)?)
                }
                (None, Some(normals)) => {
                    let h = HalfspaceSystem::new(raw.dim, normals)?;
                    (hilbert_basis(&h, &limits)?, extreme_rays(&h)?)
                }
                (None, None) => return Err(invalid("cone JSON needs \"rays\" or \"normals\"")),
            };
            let normals = if rays.rays().len() >= raw.dim && crate::linalg::rank(rays.rays())? == raw.dim {
                json!(dd_facets(&rays)?.normals())
            } else {
                Value::Null
            };
            json!({
                "input": { "dim": raw.dim, "rays": rays.rays(), "normals": normals },
                "basis": basis.elements,
            })
        }
        Command::SraEdge => {
            let c = cli.clutter()?;
            let gens = sra::sra_edge_ideal(&c, &limits)?;
            json!({
                "input": GraphJson::from(&c),
                "generators": covers_json(gens.generators()),
                "by_degree": by_degree(gens.generators()),
            })
        }
        Command::SraCover => {
            let g = cli.graph()?;
            let gens = sra::sra_cover_ideal(&g, &limits)?;
            json!({
                "input": GraphJson::from(&g),
                "generators": covers_json(gens.generators()),
                "by_degree": by_degree(gens.generators()),
            })
        }
        Command::Perfect => {
            let g = cli.graph()?;
            json!({ "input": GraphJson::from(&g), "perfect": sra::is_perfect(&g, &limits)? })
        }
        Command::IrreducibleSubgraphs => {
            let g = cli.graph()?;
            let sub = sra::irreducible_induced_subgraphs(&g, &limits)?;
            json!({ "input": GraphJson::from(&g), "singletons": sub.singletons, "subgraphs": sub.subgraphs })
        }
        Command::OddHoles => {
            let g = cli.graph()?;
            json!({ "input": GraphJson::from(&g), "odd_holes": reports_json(&sra::odd_holes(&g, &limits)?) })
        }
        Command::OddAntiholes => {
            let g = cli.graph()?;
            json!({
                "input": GraphJson::from(&g),
                "odd_antiholes": reports_json(&sra::odd_antiholes(&g, &limits)?),
            })
        }
        Command::SymbolicPower => {
            let c = cli.clutter()?;
            let b = cli.b.ok_or_else(|| invalid("--b INT is required"))?;
            json!({
                "input": GraphJson::from(&c),
                "b": b,
                "generators": sra::symbolic_power_generators(&c, b, &limits)?,
            })
        }
        Command::EdgeConeMember => {
            let g = cli.graph()?;
            let a = cli.vector()?;
            let text: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            json!({
                "input": GraphJson::from(&g),
                "vector": text,
                "member": sra::edge_cone_member(&g, &a, &limits)?,
            })
        }
        Command::Matching => {
            let g = cli.graph()?;
            json!({
                "input": GraphJson::from(&g),
                "perfect_matching": sra::bipartite_has_perfect_matching(&g, &limits)?,
            })
        }
        Command::ConeLift => {
            let g = cli.graph()?;
            let b = cli.b.ok_or_else(|| invalid("--b INT is required"))?;
            let alpha = CoverVector::new(cli.natural_vector()?, b)?;
            let lifted = sra::cone_lift_facet(&g, &alpha, &limits)?;
            json!({ "input": GraphJson::from(&g), "facet": alpha, "lifted": lifted, "monomial": lifted.monomial() })
        }
        Command::ConeTower => {
            let g = cli.graph()?;
            let r = cli.r.ok_or_else(|| invalid("--r INT is required"))?;
            let v = sra::cone_tower_generator(&g, r, &limits)?;
            let tower = sra::cone_tower(&g, r)?;
            json!({
                "input": GraphJson::from(&g),
                "r": r,
                "tower": GraphJson::from(&tower),
                "generator": v,
                "monomial": v.monomial(),
            })
        }
    };
    Ok(value)
}

/// One `key: value` line per field; lists of covers become one monomial
/// per line.
fn render_table(value: &Value) -> String {
    let mut lines = Vec::new();
    let Value::Object(map) = value else {
        return value.to_string();
    };
    for (key, v) in map {
        match v {
            Value::Array(items) if !items.is_empty() && items.iter().all(|x| x.is_object()) => {
                lines.push(format!("{key}:"));
                for item in items {
                    lines.push(format!("  {}", table_item(item)));
                }
            }
            _ => lines.push(format!("{key}: {v}")),
        }
    }
    lines.join("\n")
}

fn table_item(item: &Value) -> String {
    match serde_json::from_value::<CoverVector>(json!({ "a": item["a"], "b": item["b"] })) {
        Ok(c) if item.get("a").is_some() => {
            let a: Vec<String> = c.a.iter().map(|x| x.to_string()).collect();
            format!("{:<24} a=({}) b={}", c.monomial(), a.join(","), c.b)
        }
        _ => item.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn missing_input_is_an_input_error() {
        let (code, _, err) = run_capture(&["rees-covers", "alpha0"]);
        assert_eq!(code, 2);
        assert!(err.contains("required"));
    }

    #[test]
    fn unknown_flag_is_rejected() {
        let (code, _, _) = run_capture(&["rees-covers", "alpha0", "--bogus"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn help_succeeds() {
        let (code, out, _) = run_capture(&["rees-covers", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("sra-edge"));
    }
}
