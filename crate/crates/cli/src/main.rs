//! `bei`: command-line frontend for the binomial edge ideal toolkit.
//!
//! Every command reads a graph or a statistical specification, runs the
//! exact computation from `bei-core`, and prints either canonical JSON
//! (sorted keys, byte-stable across runs) or a short text form.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bei_core::formats::{
    graph_from_json, graph_to_json, parse_graph_text, render_graph_text, render_monomial,
    render_polynomial, spec_from_json, statement_to_json, xy_variable_names,
};
use bei_core::graph::{closed_necessary_conditions, closedness_witness};
use bei_core::{
    all_shortest_paths_directed, ci_generators, cm_sufficient, cycle_report, decompose_spec,
    find_closed_labeling, full_support_implication, is_closed_labeling, is_prime_ideal, is_unmixed,
    krull_dimension, minimal_primes, spec_to_graph, theoretical_groebner, verify_up_to, Bounds,
    Error, LabeledGraph, Result, RobustnessSpec,
};

const INPUT_HELP: &str = "Graph input is a file path, `-` for standard input, or an inline JSON \
object. JSON graphs look like {\"n\":4,\"edges\":[[1,2],[1,3]]}; text graphs are one `i j` line \
per edge with `#` comments, the vertex count being the largest endpoint. Statistical \
specifications are JSON only: {\"dims\":[2,2],\"statements\":[{\"S\":[1],\"T\":[2]}]} or \
{\"dims\":[2,2],\"hamming_k\":1}.\n\nExit codes: 0 success, 1 malformed input, 2 invalid \
values, 3 resource limit, 4 failed verification.";

#[derive(Parser)]
#[command(name = "bei", version, about = "Exact binomial edge ideal computations on labeled graphs", after_long_help = INPUT_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Overrides for the built-in resource limits.
#[derive(Args)]
struct LimitArgs {
    /// Largest vertex count the closed-labeling search will attempt.
    #[arg(long, global = true, env = "BEI_FIND_LABELING_MAX_N")]
    find_labeling_max_n: Option<usize>,

    /// Largest vertex count for admissible-path enumeration.
    #[arg(long, global = true, env = "BEI_PATH_ENUM_MAX_N")]
    path_enum_max_n: Option<usize>,

    /// Simple-path extension budget per basis computation.
    #[arg(long, global = true, env = "BEI_PATH_CAP")]
    path_cap: Option<usize>,

    /// Largest ring size (variables plus the auxiliary one) for intersections.
    #[arg(long, global = true, env = "BEI_INTERSECT_MAX_VARS")]
    intersect_max_vars: Option<usize>,

    /// Largest vertex count for minimal-prime enumeration.
    #[arg(long, global = true, env = "BEI_MINIMAL_PRIMES_MAX_N")]
    minimal_primes_max_n: Option<usize>,

    /// Largest admitted state space for the statistical commands.
    #[arg(long, global = true, env = "BEI_STATE_SPACE_MAX")]
    state_space_max: Option<usize>,
}

impl LimitArgs {
    fn bounds(&self) -> Bounds {
        let mut b = Bounds::default();
        if let Some(v) = self.find_labeling_max_n {
            b.find_labeling_max_n = v;
        }
        if let Some(v) = self.path_enum_max_n {
            b.path_enum_max_n = v;
        }
        if let Some(v) = self.path_cap {
            b.path_cap = v;
        }
        if let Some(v) = self.intersect_max_vars {
            b.intersect_max_vars = v;
        }
        if let Some(v) = self.minimal_primes_max_n {
            b.minimal_primes_max_n = v;
        }
        if let Some(v) = self.state_space_max {
            b.state_space_max = v;
        }
        b
    }
}

#[derive(Subcommand)]
enum Command {
    /// Report whether the graph's labeling is closed, with a witness when not.
    CheckClosed { input: String },

    /// Search for a relabeling under which the graph is closed.
    FindLabeling { input: String },

    /// Print the least closed supergraph under the same labeling.
    Closure { input: String },

    /// Reduced Groebner basis, admissible paths, and the initial ideal.
    Groebner { input: String },

    /// Minimal prime components, dimension, primality, and unmixedness.
    Decompose { input: String },

    /// Krull dimension of the quotient by the edge ideal.
    Dimension { input: String },

    /// Structural certificates: connectivity, chordality, claw-freeness,
    /// closedness, shortest-path monotonicity, and the Cohen-Macaulay test.
    Classify { input: String },

    /// Compile a conditional-independence specification to its graph and
    /// generating minors.
    CiCompile { input: String },

    /// Decompose a compiled specification into statistical components.
    CiDecompose { input: String },

    /// Primality/unmixedness report for the cycle on n vertices.
    CycleReport { n: usize },

    /// Cross-check the closed-form bases against Buchberger over every graph
    /// on up to max-n vertices; exits 4 on any mismatch.
    OracleVerify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) => 1,
                Error::Domain(_) => 2,
                Error::Resource(_) => 3,
            })
        }
    }
}

fn read_document(input: &str) -> Result<String> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::parse(format!("cannot read standard input: {e}")))?;
        return Ok(buf);
    }
    if input.trim_start().starts_with('{') {
        return Ok(input.to_string());
    }
    std::fs::read_to_string(input).map_err(|e| Error::parse(format!("cannot read {input}: {e}")))
}

fn read_graph(input: &str) -> Result<LabeledGraph> {
    let doc = read_document(input)?;
    if doc.trim_start().starts_with('{') {
        graph_from_json(&doc)
    } else {
        parse_graph_text(&doc)
    }
}

fn read_spec(input: &str) -> Result<RobustnessSpec> {
    spec_from_json(&read_document(input)?)
}

fn emit(format: Format, value: Value, text: String) {
    match format {
        Format::Json => println!("{value}"),
        Format::Text => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
        }
    }
}

fn fmt_set(vs: &[usize]) -> String {
    let inner: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn fmt_state(state: &[usize]) -> String {
    let inner: Vec<String> = state.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(","))
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let bounds = cli.limits.bounds();
    let format = cli.format;
    match &cli.command {
        Command::CheckClosed { input } => {
            let g = read_graph(input)?;
            match closedness_witness(&g) {
                None => emit(
                    format,
                    json!({"closed": true, "witness": null}),
                    "closed".into(),
                ),
                Some(w) => emit(
                    format,
                    json!({
                        "closed": false,
                        "witness": {
                            "edge_a": [w.edge_a.0, w.edge_a.1],
                            "edge_b": [w.edge_b.0, w.edge_b.1],
                            "missing": [w.missing.0, w.missing.1],
                        },
                    }),
                    format!(
                        "not closed: edges ({},{}) and ({},{}) demand ({},{})",
                        w.edge_a.0, w.edge_a.1, w.edge_b.0, w.edge_b.1, w.missing.0, w.missing.1
                    ),
                ),
            }
        }

        Command::FindLabeling { input } => {
            let g = read_graph(input)?;
            let sigma = find_closed_labeling(&g, &bounds)?;
            let text = match &sigma {
                None => "none".to_string(),
                Some(s) => s
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            };
            emit(format, json!({ "labeling": sigma }), text);
        }

        Command::Closure { input } => {
            let g = read_graph(input)?;
            let closed = bei_core::closure(&g);
            emit(format, graph_to_json(&closed), render_graph_text(&closed));
        }

        Command::Groebner { input } => {
            let g = read_graph(input)?;
            let basis = theoretical_groebner(&g, &bounds)?;
            let names = xy_variable_names(g.n());
            let mut by_pair: std::collections::BTreeMap<(usize, usize), Vec<&[usize]>> =
                std::collections::BTreeMap::new();
            for e in basis.elements() {
                by_pair
                    .entry(e.endpoints)
                    .or_default()
                    .push(e.path.vertices());
            }
            for paths in by_pair.values_mut() {
                paths.sort();
            }
            let texts: Vec<String> = basis
                .elements()
                .iter()
                .map(|e| render_polynomial(&e.polynomial, &names))
                .collect::<Result<_>>()?;
            let initial: Vec<String> = basis
                .elements()
                .iter()
                .map(|e| render_monomial(e.polynomial.leading_monomial().expect("nonzero"), &names))
                .collect::<Result<_>>()?;
            let quadratic = basis
                .elements()
                .iter()
                .all(|e| e.path.vertices().len() == 2);
            let squarefree = basis.elements().iter().all(|e| {
                e.polynomial
                    .leading_monomial()
                    .expect("nonzero")
                    .is_squarefree()
            });
            emit(
                format,
                json!({
                    "admissible_paths": by_pair
                        .iter()
                        .map(|(pair, paths)| json!({"pair": [pair.0, pair.1], "paths": paths}))
                        .collect::<Vec<_>>(),
                    "basis": texts,
                    "initial_ideal": initial,
                    "quadratic": quadratic,
                    "squarefree": squarefree,
                }),
                texts.join("\n"),
            );
        }

        Command::Decompose { input } => {
            let g = read_graph(input)?;
            let decomp = minimal_primes(&g, &bounds)?;
            let prime = is_prime_ideal(&g);
            let unmixed = is_unmixed(&g, &bounds)?;
            let components: Vec<Value> = decomp
                .components()
                .iter()
                .map(|pc| {
                    json!({
                        "S": pc.cut_set().to_vec(),
                        "blocks": pc
                            .blocks()
                            .blocks()
                            .iter()
                            .map(|b| b.to_vec())
                            .collect::<Vec<_>>(),
                        "height": pc.height(),
                        "dim": pc.dimension(),
                    })
                })
                .collect();
            let mut text = format!(
                "dimension: {}\nprime: {}\nunmixed: {}\n",
                decomp.dimension(),
                prime,
                unmixed
            );
            for pc in decomp.components() {
                let blocks: Vec<String> = pc
                    .blocks()
                    .blocks()
                    .iter()
                    .map(|b| fmt_set(&b.to_vec()))
                    .collect();
                text.push_str(&format!(
                    "S={} blocks={} height={} dim={}\n",
                    fmt_set(&pc.cut_set().to_vec()),
                    blocks.join(" "),
                    pc.height(),
                    pc.dimension()
                ));
            }
            emit(
                format,
                json!({
                    "dimension": decomp.dimension(),
                    "minimal_primes": components,
                    "prime": prime,
                    "unmixed": unmixed,
                }),
                text,
            );
        }

        Command::Dimension { input } => {
            let g = read_graph(input)?;
            let d = krull_dimension(&g, &bounds)?;
            emit(format, json!({ "dimension": d }), d.to_string());
        }

        Command::Classify { input } => {
            let g = read_graph(input)?;
            let connected = g.is_connected();
            let (chordal, claw_free) = closed_necessary_conditions(&g);
            let closed = is_closed_labeling(&g);
            let monotone = if connected {
                let mut all = true;
                'outer: for i in 1..=g.n() {
                    for j in (i + 1)..=g.n() {
                        if !all_shortest_paths_directed(&g, i, j)? {
                            all = false;
                            break 'outer;
                        }
                    }
                }
                Some(all)
            } else {
                None
            };
            let cm = if connected {
                Some(cm_sufficient(&g)?)
            } else {
                None
            };
            let fmt_opt =
                |o: Option<bool>| o.map_or("n/a (disconnected)".to_string(), |b| b.to_string());
            emit(
                format,
                json!({
                    "chordal": chordal,
                    "claw_free": claw_free,
                    "closed": closed,
                    "cm_sufficient": cm,
                    "connected": connected,
                    "shortest_paths_monotone": monotone,
                }),
                format!(
                    "connected: {connected}\nchordal: {chordal}\nclaw_free: {claw_free}\nclosed: {closed}\nshortest_paths_monotone: {}\ncm_sufficient: {}",
                    fmt_opt(monotone),
                    fmt_opt(cm)
                ),
            );
        }

        Command::CiCompile { input } => {
            let spec = read_spec(input)?;
            let g = spec_to_graph(&spec, &bounds)?;
            let gens = ci_generators(spec.space(), &g)?;
            let texts: Vec<String> = gens
                .iter()
                .map(|b| b.text(spec.space()))
                .collect::<Result<_>>()?;
            emit(
                format,
                json!({
                    "generators": texts,
                    "graph": graph_to_json(&g),
                    "statements": spec
                        .statements()
                        .iter()
                        .map(statement_to_json)
                        .collect::<Vec<_>>(),
                    "states": spec.space().states().collect::<Vec<_>>(),
                }),
                texts.join("\n"),
            );
        }

        Command::CiDecompose { input } => {
            let spec = read_spec(input)?;
            let g = spec_to_graph(&spec, &bounds)?;
            let decomp = decompose_spec(spec.space(), &g, &bounds)?;
            let implied = full_support_implication(&spec);
            let unconditional = implied.given().is_empty();
            let components: Vec<Value> = decomp
                .components()
                .iter()
                .map(|c| {
                    json!({
                        "blocks": c.blocks(),
                        "dimension": c.dimension(),
                        "structural_zeros": c.structural_zeros(),
                    })
                })
                .collect();
            let mut text = format!(
                "components: {} (dimension {})\n",
                decomp.components().len(),
                decomp.dimension()
            );
            for (idx, c) in decomp.components().iter().enumerate() {
                let zeros = if c.structural_zeros().is_empty() {
                    "-".to_string()
                } else {
                    c.structural_zeros()
                        .iter()
                        .map(|s| fmt_state(s))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let blocks: Vec<String> = c
                    .blocks()
                    .iter()
                    .map(|b| {
                        let states: Vec<String> = b.iter().map(|s| fmt_state(s)).collect();
                        format!("{{{}}}", states.join(" "))
                    })
                    .collect();
                text.push_str(&format!(
                    "{}: zeros: {}; blocks: {}; dimension {}\n",
                    idx + 1,
                    zeros,
                    blocks.join(" "),
                    c.dimension()
                ));
            }
            text.push_str(&format!(
                "implication: S={} T={} ({})\n",
                fmt_set(&implied.independent().to_vec()),
                fmt_set(&implied.given().to_vec()),
                if unconditional {
                    "unconditional"
                } else {
                    "conditional"
                }
            ));
            emit(
                format,
                json!({
                    "components": components,
                    "dimension": decomp.dimension(),
                    "full_support_implication": {
                        "S": implied.independent().to_vec(),
                        "T": implied.given().to_vec(),
                        "unconditional": unconditional,
                    },
                }),
                text,
            );
        }

        Command::CycleReport { n } => {
            let report = cycle_report(*n, &bounds)?;
            emit(
                format,
                json!({
                    "cm_equivalent": report.cm_equivalent,
                    "n": report.n,
                    "prime": report.prime,
                    "unmixed": report.unmixed,
                }),
                format!(
                    "n: {}\nprime: {}\nunmixed: {}\ncm_equivalent: {}",
                    report.n, report.prime, report.unmixed, report.cm_equivalent
                ),
            );
        }

        Command::OracleVerify { max_n } => {
            let report = verify_up_to(*max_n, &bounds)?;
            emit(
                format,
                json!({
                    "bases_compared": report.bases_compared,
                    "duplicate_paths": report.duplicate_paths,
                    "failures": report.failures,
                    "graphs_checked": report.graphs_checked,
                    "max_n": report.max_n,
                    "passed": report.passed(),
                }),
                if report.passed() {
                    format!(
                        "passed: {} graphs checked, {} bases compared, {} duplicate paths",
                        report.graphs_checked, report.bases_compared, report.duplicate_paths
                    )
                } else {
                    format!("FAILED:\n{}", report.failures.join("\n"))
                },
            );
            if !report.passed() {
                return Ok(ExitCode::from(4));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
