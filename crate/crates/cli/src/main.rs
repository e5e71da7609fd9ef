//! Command-line surface tying the constructions, verifiers, and oracles
//! together.
//!
//! Exit codes: 0 success (and verified where applicable), 1 usage error,
//! 2 verification failure, 3 oracle budget exceeded.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cayley_chroma::chroma::{
    verify_conformable, verify_edge, verify_total, verify_vertex, ColoringReport, EdgeColoring,
    TotalColorMatrix, VertexColoring,
};
use cayley_chroma::construct::{
    conformable_partition, gyro_edge_color, gyro_gen_set_for_k, gyro_total_color,
    gyro_vertex_color, lift_chain, symmetric_gen_set, total_color_alt, total_color_power_cycle,
    total_color_sym, ConstructError,
};
use cayley_chroma::golden;
use cayley_chroma::graph::{
    cayley_group, cayley_gyro, circulant, iso_multiplier, power_cycle, Graph, GyroGenSet,
    PermGenSet,
};
use cayley_chroma::gyro::{build_table, select_variant, verify_axioms};
use cayley_chroma::oracle::{
    chromatic_index, chromatic_number, independence_number, total_chromatic_number, Budget,
    OracleResult, OracleStatus,
};
use cayley_chroma::perm::{enumerate, GroupKind, Permutation};

const EXIT_OK: u8 = 0;
const EXIT_VERIFICATION: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cayley-chroma",
    version,
    about = "Cayley graph coloring toolkit"
)]
struct Cli {
    /// Directory for emitted artifacts.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph and write it as JSON.
    Build {
        #[command(subcommand)]
        family: BuildFamily,
    },
    /// Run a coloring construction; exits 2 if self-verification fails.
    Color {
        /// One of: thm1, thm2-lift, cor-alt-total, thm3/4-conformable,
        /// thm5-total, gyro-vertex, gyro-total, gyro-edge.
        method: String,
        #[command(flatten)]
        params: ColorParams,
    },
    /// Check an existing coloring artifact against a graph.
    Verify {
        /// One of: vertex, edge, total, conformable.
        kind: String,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        artifact: PathBuf,
    },
    /// Exact brute-force parameters for small graphs.
    Oracle {
        /// One of: chi, chi-prime, chi-double-prime, alpha.
        param: String,
        #[arg(long)]
        graph: PathBuf,
        /// Node budget override (also via CAYLEY_ORACLE_NODE_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Search for a circulant isomorphism multiplier.
    Iso {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        s1: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        s2: Vec<usize>,
    },
    /// Re-derive the reference matrices and diff them against the shipped
    /// fixtures.
    Golden,
    /// Dump the 2-gyrogroup operation table as CSV.
    GyroTable {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum BuildFamily {
    PowerCycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    Circulant {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        connection: Vec<usize>,
    },
    Sym {
        #[arg(long)]
        n: usize,
    },
    Alt {
        #[arg(long)]
        n: usize,
    },
    Gyro {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        s1: Option<Vec<usize>>,
    },
    /// Cayley graph from explicit generators in cycle notation, e.g.
    /// --gens "(1,2);(1,2,3);(1,3,2)".
    Cayley {
        /// sym, alt, or cyclic.
        #[arg(long)]
        group: String,
        #[arg(long)]
        degree: usize,
        /// Semicolon-separated 1-based cycle notation.
        #[arg(long)]
        gens: String,
    },
}

#[derive(Args)]
struct ColorParams {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Connection residues mod m (symmetric), e.g. 1,2,6,7.
    #[arg(long, value_delimiter = ',')]
    s1: Option<Vec<usize>>,
    /// Full gyro generating set labels, e.g. 1,7,12.
    #[arg(long, value_delimiter = ',')]
    s: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ManifestArtifact {
    path: String,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<ColoringReport>,
}

#[derive(Serialize)]
struct Manifest {
    command: String,
    parameters: serde_json::Value,
    artifacts: Vec<ManifestArtifact>,
    tool_version: String,
    timing_ms: u128,
}

struct Emitter {
    out: PathBuf,
    command: String,
    parameters: serde_json::Value,
    artifacts: Vec<ManifestArtifact>,
    started: Instant,
}

impl Emitter {
    fn new(out: &Path, command: &str, parameters: serde_json::Value) -> Result<Self> {
        fs::create_dir_all(out)
            .with_context(|| format!("creating output directory {}", out.display()))?;
        Ok(Emitter {
            out: out.to_path_buf(),
            command: command.to_string(),
            parameters,
            artifacts: Vec::new(),
            started: Instant::now(),
        })
    }

    fn write(
        &mut self,
        name: &str,
        kind: &str,
        bytes: &str,
        verdict: Option<&ColoringReport>,
    ) -> Result<PathBuf> {
        let path = self.out.join(name);
        fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))?;
        self.artifacts.push(ManifestArtifact {
            path: path.display().to_string(),
            kind: kind.to_string(),
            verdict: verdict.cloned(),
        });
        Ok(path)
    }

    fn finish(self) -> Result<()> {
        let manifest = Manifest {
            command: self.command,
            parameters: self.parameters,
            artifacts: self.artifacts,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timing_ms: self.started.elapsed().as_millis(),
        };
        let path = self.out.join("manifest.json");
        let mut text = serde_json::to_string_pretty(&manifest)?;
        text.push('\n');
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }
}

fn json_pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Build { family } => cmd_build(&cli.out, family),
        Command::Color { method, params } => cmd_color(&cli.out, &method, &params),
        Command::Verify {
            kind,
            graph,
            artifact,
        } => cmd_verify(&kind, &graph, &artifact),
        Command::Oracle {
            param,
            graph,
            budget,
        } => cmd_oracle(&param, &graph, budget),
        Command::Iso { n, s1, s2 } => cmd_iso(n, &s1, &s2),
        Command::Golden => cmd_golden(),
        Command::GyroTable { m } => cmd_gyro_table(&cli.out, m),
    }
}

fn require(opt: Option<usize>, flag: &str) -> Result<usize> {
    opt.ok_or_else(|| anyhow!("missing required flag --{flag}"))
}

fn cmd_build(out: &Path, family: BuildFamily) -> Result<u8> {
    let (graph, label, params) = match family {
        BuildFamily::PowerCycle { n, k } => (
            power_cycle(n, k)?,
            "power-cycle".to_string(),
            serde_json::json!({"n": n, "k": k}),
        ),
        BuildFamily::Circulant { n, connection } => {
            let conn: BTreeSet<usize> = connection.iter().copied().collect();
            (
                circulant(n, &conn)?,
                "circulant".to_string(),
                serde_json::json!({"n": n, "connection": connection}),
            )
        }
        BuildFamily::Sym { n } => {
            let elements = enumerate(GroupKind::Symmetric, n)?;
            let gens = symmetric_gen_set(n).map_err(construct_to_anyhow)?;
            (
                cayley_group(&elements, &gens)?,
                "sym".to_string(),
                serde_json::json!({"n": n}),
            )
        }
        BuildFamily::Alt { n } => {
            let elements = enumerate(GroupKind::Alternating, n)?;
            let gens =
                cayley_chroma::construct::alternating_gen_set(n).map_err(construct_to_anyhow)?;
            (
                cayley_group(&elements, &gens)?,
                "alt".to_string(),
                serde_json::json!({"n": n}),
            )
        }
        BuildFamily::Cayley {
            group,
            degree,
            gens,
        } => {
            let kind = match group.as_str() {
                "sym" => GroupKind::Symmetric,
                "alt" => GroupKind::Alternating,
                "cyclic" => GroupKind::Cyclic,
                other => bail!("unknown group kind {other:?}"),
            };
            let elements = enumerate(kind, degree)?;
            let parsed: Result<Vec<_>> = gens
                .split(';')
                .map(|txt| Ok(Permutation::parse_cycles(degree, txt.trim())?))
                .collect();
            let gen_set = PermGenSet::new(parsed?)?;
            (
                cayley_group(&elements, &gen_set)?,
                "cayley".to_string(),
                serde_json::json!({"group": group, "degree": degree, "gens": gens}),
            )
        }
        BuildFamily::Gyro { m, k, s1 } => {
            let (_, table) = select_variant(m)?;
            let gens = match (k, &s1) {
                (Some(k), None) => gyro_gen_set_for_k(&table, k).map_err(construct_to_anyhow)?,
                (None, Some(s1)) => {
                    let mut labels = s1.clone();
                    labels.push(table.reflection());
                    GyroGenSet::new(&table, labels)?
                }
                _ => bail!("gyro needs exactly one of --k or --s1"),
            };
            (
                cayley_gyro(&table, &gens)?,
                "gyro".to_string(),
                serde_json::json!({"m": m, "k": k, "s1": s1}),
            )
        }
    };
    let mut emitter = Emitter::new(out, &format!("build {label}"), params)?;
    let degree_note = if graph.is_regular(graph.max_degree()) {
        format!("{}-regular", graph.max_degree())
    } else {
        format!("max degree {}", graph.max_degree())
    };
    println!(
        "{} vertices, {} edges, {}",
        graph.n(),
        graph.edge_count(),
        degree_note
    );
    emitter.write("graph.json", "graph", &graph.to_json(), None)?;
    emitter.finish()?;
    Ok(EXIT_OK)
}

fn cmd_color(out: &Path, method: &str, params: &ColorParams) -> Result<u8> {
    let parameters = serde_json::json!({
        "n": params.n, "k": params.k, "m": params.m, "s1": params.s1, "s": params.s,
    });
    let mut emitter = Emitter::new(out, &format!("color {method}"), parameters)?;
    let budget = Budget::from_env();
    let report: ColoringReport = match method {
        "thm5-total" => {
            let n = require(params.n, "n")?;
            let k = require(params.k, "k")?;
            let matrix = total_color_power_cycle(n, k).map_err(construct_to_anyhow)?;
            let graph = power_cycle(n, k)?;
            let report = verify_total(&graph, &matrix)?;
            emitter.write("graph.json", "graph", &graph.to_json(), None)?;
            emitter.write(
                "matrix.csv",
                "total-color-matrix",
                &matrix.to_csv(),
                Some(&report),
            )?;
            report
        }
        "thm1" => {
            let n = require(params.n, "n")?;
            let outcome = total_color_sym(n, 1 << 24).map_err(construct_to_anyhow)?;
            emitter.write("graph.json", "graph", &outcome.graph.to_json(), None)?;
            emitter.write(
                "matrix.csv",
                "total-color-matrix",
                &outcome.matrix.to_csv(),
                Some(&outcome.report),
            )?;
            outcome.report
        }
        "thm2-lift" => {
            let n = require(params.n, "n")?;
            let (_, graph, coloring) = lift_chain(n, 100_000).map_err(construct_to_anyhow)?;
            let report = verify_vertex(&graph, &coloring)?;
            emitter.write("graph.json", "graph", &graph.to_json(), None)?;
            emitter.write(
                "coloring.json",
                "vertex-coloring",
                &json_pretty(&coloring)?,
                Some(&report),
            )?;
            report
        }
        "cor-alt-total" => {
            let n = require(params.n, "n")?;
            let outcome =
                total_color_alt(n, 100_000, 4096, 1 << 20).map_err(construct_to_anyhow)?;
            emitter.write("graph.json", "graph", &outcome.graph.to_json(), None)?;
            emitter.write(
                "matrix.csv",
                "total-color-matrix",
                &outcome.matrix.to_csv(),
                Some(&outcome.report),
            )?;
            outcome.report
        }
        "thm3/4-conformable" | "conformable" => {
            let n = require(params.n, "n")?;
            let k = require(params.k, "k")?;
            let coloring = conformable_partition(n, k).map_err(construct_to_anyhow)?;
            let graph = power_cycle(n, k)?;
            let conf = verify_conformable(&graph, &coloring)?;
            let report = verify_vertex(&graph, &coloring)?;
            emitter.write("graph.json", "graph", &graph.to_json(), None)?;
            emitter.write(
                "coloring.json",
                "vertex-coloring",
                &json_pretty(&coloring)?,
                Some(&report),
            )?;
            emitter.write(
                "conformable.json",
                "conformable-report",
                &json_pretty(&conf)?,
                None,
            )?;
            if !conf.conformable {
                emitter.finish()?;
                println!("verdict: NOT conformable");
                return Ok(EXIT_VERIFICATION);
            }
            report
        }
        "gyro-vertex" => {
            let m = require(params.m, "m")?;
            let s1 = parse_s1(params)?;
            let (_, table) = select_variant(m)?;
            let outcome = gyro_vertex_color(&table, &s1, &budget).map_err(construct_to_anyhow)?;
            emitter.write("graph.json", "graph", &outcome.graph.to_json(), None)?;
            emitter.write(
                "coloring.json",
                "vertex-coloring",
                &json_pretty(&outcome.coloring)?,
                Some(&outcome.report),
            )?;
            println!(
                "matches circulant chromatic number {}: {}",
                outcome.circulant_chromatic, outcome.matches_circulant
            );
            outcome.report
        }
        "gyro-total" => {
            let m = require(params.m, "m")?;
            let s1 = parse_s1(params)?;
            let (_, table) = select_variant(m)?;
            let outcome = gyro_total_color(&table, &s1, &budget).map_err(construct_to_anyhow)?;
            emitter.write("graph.json", "graph", &outcome.graph.to_json(), None)?;
            emitter.write(
                "matrix.csv",
                "total-color-matrix",
                &outcome.matrix.to_csv(),
                Some(&outcome.report),
            )?;
            outcome.report
        }
        "gyro-edge" => {
            let m = require(params.m, "m")?;
            let labels = params
                .s
                .clone()
                .ok_or_else(|| anyhow!("missing required flag --s"))?;
            let (_, table) = select_variant(m)?;
            let gens = GyroGenSet::new(&table, labels)?;
            let outcome = gyro_edge_color(&table, &gens, &budget).map_err(construct_to_anyhow)?;
            emitter.write("graph.json", "graph", &outcome.graph.to_json(), None)?;
            emitter.write(
                "edges.json",
                "edge-coloring",
                &json_pretty(&outcome.coloring)?,
                Some(&outcome.report),
            )?;
            println!("class one: {}", outcome.class_one);
            outcome.report
        }
        other => bail!("unknown color method {other:?}"),
    };
    emitter.write(
        "report.json",
        "coloring-report",
        &json_pretty(&report)?,
        None,
    )?;
    emitter.finish()?;
    println!(
        "proper: {}, colors used: {}, classification: {:?}",
        report.proper, report.colors_used, report.bound_class
    );
    Ok(if report.proper {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    })
}

/// Connection set from --s1, or from the --k shorthand as the residues
/// 1..k and m-k..m-1.
fn parse_s1(params: &ColorParams) -> Result<BTreeSet<usize>> {
    if let Some(list) = &params.s1 {
        return Ok(list.iter().copied().collect());
    }
    if let (Some(k), Some(m)) = (params.k, params.m) {
        if k == 0 || 2 * k >= m {
            bail!("need 1 <= k < m/2");
        }
        return Ok((1..=k).chain((m - k)..m).collect());
    }
    Err(anyhow!("missing --s1 (or --k as a shorthand)"))
}

fn construct_to_anyhow(e: ConstructError) -> anyhow::Error {
    anyhow!("{e}")
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Graph::from_json(&text)?)
}

fn cmd_verify(kind: &str, graph_path: &Path, artifact: &Path) -> Result<u8> {
    let graph = read_graph(graph_path)?;
    let artifact_text =
        fs::read_to_string(artifact).with_context(|| format!("reading {}", artifact.display()))?;
    let report = match kind {
        "vertex" => {
            let coloring: VertexColoring = serde_json::from_str(&artifact_text)?;
            verify_vertex(&graph, &coloring)?
        }
        "edge" => {
            let coloring: EdgeColoring = serde_json::from_str(&artifact_text)?;
            verify_edge(&graph, &coloring)?
        }
        "total" => {
            let matrix = TotalColorMatrix::from_csv(&artifact_text)?;
            verify_total(&graph, &matrix)?
        }
        "conformable" => {
            let coloring: VertexColoring = serde_json::from_str(&artifact_text)?;
            let conf = verify_conformable(&graph, &coloring)?;
            println!("{}", serde_json::to_string_pretty(&conf)?);
            return Ok(if conf.conformable {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            });
        }
        other => bail!("unknown verification kind {other:?}"),
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if report.proper {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    })
}

fn cmd_oracle(param: &str, graph_path: &Path, budget_override: Option<u64>) -> Result<u8> {
    let graph = read_graph(graph_path)?;
    let budget = match budget_override {
        Some(max_nodes) => Budget { max_nodes },
        None => Budget::from_env(),
    };
    let result: OracleResult = match param {
        "chi" => chromatic_number(&graph, &budget),
        "chi-prime" => chromatic_index(&graph, &budget),
        "chi-double-prime" => total_chromatic_number(&graph, &budget),
        "alpha" => independence_number(&graph, &budget),
        other => bail!("unknown oracle parameter {other:?}"),
    };
    println!("{}", serde_json::to_string_pretty(&result)?);
    Ok(match result.status {
        OracleStatus::Exact => EXIT_OK,
        OracleStatus::BudgetExceeded => EXIT_BUDGET,
    })
}

fn cmd_iso(n: usize, s1: &[usize], s2: &[usize]) -> Result<u8> {
    let s1: BTreeSet<usize> = s1.iter().copied().collect();
    let s2: BTreeSet<usize> = s2.iter().copied().collect();
    let found = iso_multiplier(n, &s1, &s2)?;
    println!("{}", serde_json::json!({ "multiplier": found }));
    Ok(EXIT_OK)
}

fn cmd_golden() -> Result<u8> {
    let mut clean = true;
    for (name, (n, k), reference) in [
        ("table1", golden::TABLE1_PARAMS, golden::TABLE1_CSV),
        ("table2", golden::TABLE2_PARAMS, golden::TABLE2_CSV),
    ] {
        let derived = total_color_power_cycle(n, k)
            .map_err(construct_to_anyhow)?
            .to_csv();
        if derived == reference {
            println!("{name}: matches");
        } else {
            clean = false;
            println!("{name}: DIFFERS");
            for (lineno, (a, b)) in derived.lines().zip(reference.lines()).enumerate() {
                if a != b {
                    println!("  line {}: derived {a:?} vs fixture {b:?}", lineno + 1);
                }
            }
        }
    }
    Ok(if clean { EXIT_OK } else { EXIT_VERIFICATION })
}

fn cmd_gyro_table(out: &Path, m: usize) -> Result<u8> {
    let (variant, table) = select_variant(m)?;
    let axioms = verify_axioms(&table);
    if !axioms.all_hold() {
        bail!("selected variant fails the axiom checker: {axioms:?}");
    }
    let mut emitter = Emitter::new(
        out,
        "gyro-table",
        serde_json::json!({"m": m, "variant": format!("{variant}")}),
    )?;
    emitter.write(
        "gyro-table.csv",
        "gyro-operation-table",
        &table.to_csv(),
        None,
    )?;
    emitter.finish()?;
    println!("order {} table written; variant: {variant}", table.order());
    // Rebuilding from the recorded variant must agree with the dump.
    let rebuilt = build_table(m, &variant)?;
    debug_assert_eq!(rebuilt.to_csv(), table.to_csv());
    Ok(EXIT_OK)
}
