//! Command-line surface.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use homtool_core::enumerate::{enumerate_graphs_with, enumerate_rooted_graphs_with, enumerate_trees};
use homtool_core::gadgets::{brute_pin_one, brute_pin_two, CountingOracle, GadgetSum, PinningKit};
use homtool_core::hom::{hom_count, hom_mod, pinned_hom_count, pinned_hom_mod, rooted_hom_count, PinAssignment};
use homtool_core::lovasz::{
    distinguish_targets, find_distinguisher_with_budget, default_budget, lovasz_prefix, rooted_lovasz_prefix,
};
use homtool_core::symmetry::{reduced_form, verify_confluence, ReductionTrace};
use homtool_core::trees::{classify, Verdict};
use homtool_core::{Caps, Graph, RootedGraph};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::{GraphFile, GraphJson};
use crate::named::load;
use crate::report::RunReport;
use crate::suites::{run_suite, CaseResult, SuiteConfig, SUITES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Count homomorphisms from the instance to the target.
    Hom,
    /// Reduce the target by automorphisms of prime order.
    Reduce,
    /// Classify parity colouring by a forest target.
    Classify,
    /// Find a rooted gadget separating two vertices, or a graph separating two targets.
    Distinguish,
    /// Pinned parities through gadget sums, checked against direct counting.
    Pin,
    /// Residues of hom(G_i, h) over the enumerated small graphs.
    Lovasz,
    /// Count isomorphism classes.
    Enumerate,
    /// Run verification suites.
    Verify,
}

/// Homomorphism counting, reductions and verification sweeps.
///
/// Graphs are built-in names (null, k1, k2, p3, p4, k3, h1, spider123, fig1H),
/// `.json` files or text files. Size caps can be raised with
/// HOMTOOL_CAPS=canonical=N,enumerate=N,enumerate-loops=N,automorphisms=N,partitions=N.
#[derive(Debug, Parser)]
#[command(name = "homtool", version)]
pub struct Cli {
    pub command: Command,
    /// Suite names for `verify` (default: all).
    pub suites: Vec<String>,
    #[arg(long)]
    pub instance: Option<String>,
    #[arg(long)]
    pub target: Option<String>,
    /// Second target for `distinguish`.
    #[arg(long)]
    pub versus: Option<String>,
    /// Report the count modulo K.
    #[arg(long = "mod", value_name = "K")]
    pub modulus: Option<u64>,
    #[arg(long, default_value_t = 2)]
    pub prime: u64,
    /// Force instance vertex V to target colour C.
    #[arg(long = "pin", value_name = "V=C", value_parser = parse_pin)]
    pub pins: Vec<(usize, usize)>,
    /// Target vertices; for `distinguish` the first entry is the vertex x.
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    pub orbit_x: Vec<usize>,
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    pub orbit_y: Vec<usize>,
    /// Instance vertex pinned into `--orbit-x`.
    #[arg(long)]
    pub x: Option<usize>,
    /// Instance vertex pinned into `--orbit-y`.
    #[arg(long)]
    pub y: Option<usize>,
    #[arg(long)]
    pub max_vertices: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub trials: Option<usize>,
    /// Vertex budget for the distinguisher search (default |V(h)| + 1).
    #[arg(long)]
    pub budget: Option<usize>,
    /// `reduce`: check that every maximal reduction ends in one class.
    #[arg(long)]
    pub confluence: bool,
    /// Allow loops where graphs are enumerated.
    #[arg(long)]
    pub loops: bool,
    /// `lovasz`: use rooted instances, rooted at `--x` (default 0) of the target.
    #[arg(long)]
    pub rooted: bool,
    /// `enumerate`: count unlabelled trees instead of graphs.
    #[arg(long)]
    pub trees: bool,
    #[arg(long)]
    pub json: bool,
}

fn parse_pin(s: &str) -> Result<(usize, usize), String> {
    let (v, c) = s.split_once('=').ok_or_else(|| format!("expected V=C, got {s:?}"))?;
    let v = v.trim().parse().map_err(|_| format!("bad vertex in {s:?}"))?;
    let c = c.trim().parse().map_err(|_| format!("bad colour in {s:?}"))?;
    Ok((v, c))
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn need(arg: &Option<String>, flag: &str) -> Result<GraphFile, CliError> {
    load(arg.as_deref().ok_or_else(|| usage(format!("missing {flag}")))?)
}

fn graph_json(g: &Graph) -> Value {
    serde_json::to_value(GraphJson::from_graph(g)).expect("graph json")
}

fn rooted_json(g: &RootedGraph) -> Value {
    serde_json::to_value(GraphJson::from_rooted(g)).expect("graph json")
}

fn sum_json(s: &GadgetSum) -> Value {
    Value::Array(s.terms().map(rooted_json).collect())
}

fn trace_json(t: &ReductionTrace) -> Value {
    json!({
        "p": t.p,
        "steps": t.steps.iter().map(|s| json!({
            "automorphism": s.automorphism.image(),
            "kept": s.kept,
            "graph": graph_json(&s.result),
        })).collect::<Vec<_>>(),
        "reducedForm": graph_json(t.final_graph()),
        "survivingVertices": t.surviving_vertices(),
    })
}

fn single(name: &str, ok: bool, detail: Option<String>) -> CaseResult {
    CaseResult {
        name: name.into(),
        passed: ok,
        checked: 1,
        failed: u64::from(!ok),
        failures: if ok { vec![] } else { detail.into_iter().collect() },
    }
}

/// Runs one command; the report records everything except wall time.
pub fn execute(cli: &Cli, echo: String) -> Result<RunReport, CliError> {
    let (result, cases) = match cli.command {
        Command::Hom => cmd_hom(cli)?,
        Command::Reduce => cmd_reduce(cli)?,
        Command::Classify => cmd_classify(cli)?,
        Command::Distinguish => cmd_distinguish(cli)?,
        Command::Pin => cmd_pin(cli)?,
        Command::Lovasz => cmd_lovasz(cli)?,
        Command::Enumerate => cmd_enumerate(cli)?,
        Command::Verify => cmd_verify(cli)?,
    };
    Ok(RunReport::new(echo, cli.seed, result, cases))
}

type Outcome = Result<(Value, Vec<CaseResult>), CliError>;

fn cmd_hom(cli: &Cli) -> Outcome {
    let g = need(&cli.instance, "--instance")?.graph;
    let h = need(&cli.target, "--target")?.graph;
    let mut pins = PinAssignment::new();
    for &(v, c) in &cli.pins {
        if pins.insert(v, c).is_some() {
            return Err(usage(format!("vertex {v} pinned twice")));
        }
    }
    let value = match (cli.modulus, pins.is_empty()) {
        (None, true) => json!(hom_count(&g, &h).to_string()),
        (None, false) => json!(pinned_hom_count(&g, &h, &pins)?.to_string()),
        (Some(k), true) => json!(hom_mod(&g, &h, k)?.r),
        (Some(k), false) => json!(pinned_hom_mod(&g, &h, &pins, k)?.r),
    };
    Ok((value, vec![]))
}

fn cmd_reduce(cli: &Cli) -> Outcome {
    if cli.confluence {
        let targets = match &cli.target {
            Some(t) => vec![load(t)?.graph],
            None => {
                let n = cli.max_vertices.unwrap_or(5);
                let mut caps = Caps::current();
                caps.enumerate_loop_free = caps.enumerate_loop_free.max(n);
                caps.enumerate_loops = caps.enumerate_loops.max(n);
                enumerate_graphs_with(n, cli.loops, &caps)?
            }
        };
        let mut failures = Vec::new();
        let mut failed = 0u64;
        for h in &targets {
            if !verify_confluence(h, cli.prime)? {
                failed += 1;
                if failures.len() < 10 {
                    failures.push(format!("{:?}", h.edges()));
                }
            }
        }
        let case = CaseResult {
            name: format!("confluence of {} targets, p = {}", targets.len(), cli.prime),
            passed: failed == 0,
            checked: targets.len() as u64,
            failed,
            failures,
        };
        return Ok((Value::Null, vec![case]));
    }
    let h = need(&cli.target, "--target")?.graph;
    Ok((trace_json(&reduced_form(&h, cli.prime)?), vec![]))
}

fn cmd_classify(cli: &Cli) -> Outcome {
    let f = need(&cli.target, "--target")?.graph;
    let v = classify(&f)?;
    let mut out = json!({
        "verdict": match v.verdict {
            Verdict::PolynomialTime => "POLYNOMIAL_TIME",
            Verdict::ParityPComplete => "PARITY_P_COMPLETE",
        },
        "reducedForm": graph_json(v.trace.final_graph()),
        "trace": trace_json(&v.trace),
    });
    if let Some(w) = &v.witness {
        out["anchors"] = json!({
            "component": w.vertices,
            "e0": w.anchors.e0,
            "ek": w.anchors.ek,
            "k": w.anchors.k,
            "path": w.anchors.path,
        });
    }
    Ok((out, vec![]))
}

fn cmd_distinguish(cli: &Cli) -> Outcome {
    let h = need(&cli.target, "--target")?.graph;
    if let Some(other) = &cli.versus {
        let h2 = load(other)?.graph;
        let w = distinguish_targets(&h, &h2, cli.prime)?;
        let value = match &w {
            None => json!({ "distinguisher": null }),
            Some(g) => json!({
                "distinguisher": graph_json(g),
                "left": hom_mod(g, &h, cli.prime)?.r,
                "right": hom_mod(g, &h2, cli.prime)?.r,
            }),
        };
        return Ok((value, vec![]));
    }
    let (x, y) = match (cli.orbit_x.first(), cli.orbit_y.first()) {
        (Some(&x), Some(&y)) => (x, y),
        _ => return Err(usage("distinguish needs --orbit-x X --orbit-y Y, or --versus")),
    };
    let budget = cli.budget.unwrap_or_else(|| default_budget(&h));
    let gamma = find_distinguisher_with_budget(&h, x, y, budget)?;
    let cx = rooted_hom_count(&gamma, &RootedGraph::new(h.clone(), x)?);
    let cy = rooted_hom_count(&gamma, &RootedGraph::new(h.clone(), y)?);
    let ok = cx.is_odd() != cy.is_odd();
    let value = json!({
        "distinguisher": rooted_json(&gamma),
        "countX": cx.to_string(),
        "countY": cy.to_string(),
    });
    Ok((value, vec![single("counts differ mod 2", ok, Some(format!("{cx} vs {cy}")))]))
}

fn cmd_pin(cli: &Cli) -> Outcome {
    let h = need(&cli.target, "--target")?.graph;
    let file = need(&cli.instance, "--instance")?;
    let g = file.graph;
    let kit = PinningKit::new(&h)?;
    let orbit_of = |list: &[usize], flag: &str| -> Result<Vec<usize>, CliError> {
        let mut v = list.to_vec();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(usage(format!("missing {flag}")));
        }
        kit.orbit_index(&v)?;
        Ok(v)
    };
    let ox = orbit_of(&cli.orbit_x, "--orbit-x")?;
    let x = cli.x.or(file.root).unwrap_or(0);
    if cli.orbit_y.is_empty() {
        let rg = RootedGraph::new(g.clone(), x)?;
        let bit = kit.pin_one(&rg, &ox, &mut CountingOracle)?;
        let brute = brute_pin_one(&rg, &ox, &h);
        let value = json!({ "parity": u8::from(bit), "sumX": sum_json(kit.sum_for(&ox)?) });
        return Ok((value, vec![single("agrees with direct counting", bit == brute, None)]));
    }
    let oy = orbit_of(&cli.orbit_y, "--orbit-y")?;
    let y = cli.y.ok_or_else(|| usage("two-vertex pinning needs --y"))?;
    let bit = kit.pin_two(&g, x, y, &ox, &oy, &mut CountingOracle)?;
    let brute = brute_pin_two(&g, x, y, &ox, &oy, &h);
    let value = json!({
        "parity": u8::from(bit),
        "sumX": sum_json(kit.sum_for(&ox)?),
        "sumY": sum_json(kit.sum_for(&oy)?),
    });
    Ok((value, vec![single("agrees with direct counting", bit == brute, None)]))
}

fn cmd_lovasz(cli: &Cli) -> Outcome {
    let h = need(&cli.target, "--target")?.graph;
    let n = cli.max_vertices.unwrap_or(3);
    let prefix = if cli.rooted {
        rooted_lovasz_prefix(&RootedGraph::new(h, cli.x.unwrap_or(0))?, cli.prime, n)?
    } else {
        lovasz_prefix(&h, cli.prime, n)?
    };
    let value = json!({
        "p": prefix.p,
        "maxVertices": prefix.n_max,
        "loops": prefix.loops,
        "residues": prefix.residues(),
    });
    Ok((value, vec![]))
}

fn cmd_enumerate(cli: &Cli) -> Outcome {
    let n = cli.max_vertices.unwrap_or(4);
    let mut counts = vec![0usize; n + 1];
    if cli.trees {
        for (m, c) in counts.iter_mut().enumerate().skip(1) {
            *c = enumerate_trees(m).len();
        }
    } else if cli.rooted {
        for rg in enumerate_rooted_graphs_with(n, cli.loops, &Caps::current())? {
            counts[rg.graph().n()] += 1;
        }
    } else {
        for g in enumerate_graphs_with(n, cli.loops, &Caps::current())? {
            counts[g.n()] += 1;
        }
    }
    let by_n: Vec<Value> = counts.iter().enumerate().map(|(m, c)| json!({ "n": m, "count": c })).collect();
    Ok((json!({ "counts": by_n }), vec![]))
}

fn cmd_verify(cli: &Cli) -> Outcome {
    let names: Vec<&str> = if cli.suites.is_empty() || cli.suites.iter().any(|s| s == "all") {
        SUITES.to_vec()
    } else {
        cli.suites.iter().map(String::as_str).collect()
    };
    let cfg = SuiteConfig { seed: cli.seed, trials: cli.trials, max_vertices: cli.max_vertices };
    let mut cases = Vec::new();
    for name in names {
        let start = Instant::now();
        for mut c in run_suite(name, &cfg)? {
            c.name = format!("{name}: {}", c.name);
            cases.push(c);
        }
        eprintln!("{name}: {:.2?}", start.elapsed());
    }
    Ok((Value::Null, cases))
}

/// Parses arguments, runs, prints, and returns the exit code: 0 when every
/// case passes, 1 when a case fails, 2 on bad input.
pub fn run(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if cli.command != Command::Verify && !cli.suites.is_empty() {
        eprintln!("error: unexpected argument {:?}", cli.suites[0]);
        return 2;
    }
    if let Err(e) = crate::caps_env::install_from_env() {
        eprintln!("error: {e}");
        return 2;
    }
    let echo = args.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    match execute(&cli, echo) {
        Ok(report) => {
            let text = if cli.json { report.to_json() + "\n" } else { report.to_text() };
            // A closed pipe is not an error worth panicking over.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            eprintln!("wall time: {:.3}s", start.elapsed().as_secs_f64());
            if report.all_passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
