mod claims;
mod io;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use satforge::analysis::{self, BoundParams};
use satforge::constructions::{self, LabeledGraph};
use satforge::search::{self, DegreeFilter, SearchQuery, SearchReport, Shard};
use satforge::support::{self, SupportStructure};
use satforge::{dot, graph6, VertexSet};

use io::{to_json, GraphInput, Run, RunManifest};

/// Bad flags or unusable input; exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

#[derive(Debug, Parser)]
#[command(name = "satforge", version, about = "Construct, verify and search K_s-saturated graphs")]
struct Cli {
    /// Write a JSON run manifest (arguments, input/output digests) here.
    #[arg(long, global = true, value_name = "PATH")]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a named graph family.
    Construct(ConstructArgs),
    /// Check K_s-freeness, saturation and minimum degree.
    Verify(VerifyArgs),
    /// Check the (pre-)support conditions of a graph with sides A and B.
    VerifySupport(VerifySupportArgs),
    /// Count cliques.
    Count(CountArgs),
    /// Partition the non-neighbors of a vertex by their trace on N(x).
    Partition(PartitionArgs),
    /// Check the adjacency rules at one or every degree-4 vertex.
    RulesCheck(RulesArgs),
    /// Recognize K_s-saturated graphs of minimum degree s-2 or s-1.
    Classify(ClassifyArgs),
    /// Exhaustive minimum clique count over saturated graphs.
    Search(SearchArgs),
    /// Merge shard reports written by `search --shard-id`.
    SearchMerge(MergeArgs),
    /// Evaluate a closed-form bound.
    Bound(BoundArgs),
    /// Run registered claims and report pass/fail.
    Reproduce(ReproduceArgs),
    /// Re-run a manifest and compare output digests.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Ehm,
    W,
    H,
    F,
    R,
    Appendix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Json,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    family: Family,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m1: Option<usize>,
    #[arg(long)]
    m3: Option<usize>,
    #[arg(long)]
    m4: Option<usize>,
    /// Gadget id for `appendix` (G1..G12).
    #[arg(long)]
    id: Option<String>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Output path; labels go to PATH.labels.json for graph6/dot.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    s: usize,
    /// Required exact minimum degree.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifySupportArgs {
    #[command(flatten)]
    input: GraphInput,
    /// JSON file `{"a": [...], "b": [...], "s": 4}`.
    #[arg(long)]
    sides: PathBuf,
    /// Overrides `s` from the sides file.
    #[arg(long)]
    s: Option<usize>,
    /// Pass when the pre-support conditions hold, even if not complete.
    #[arg(long)]
    pre: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Clique orders to count (repeatable).
    #[arg(long, default_values_t = [3usize])]
    r: Vec<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PartitionArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    x: usize,
    /// Allow any degree up to 12 instead of exactly 4.
    #[arg(long)]
    general: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RulesArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Vertex to check; default is every vertex of degree 4.
    #[arg(long)]
    x: Option<usize>,
    /// With no --x, check every vertex of degree at most 12.
    #[arg(long)]
    general: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
    /// Minimum degree constraint (exact unless --at-least).
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, requires = "t")]
    at_least: bool,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Run only this shard (0-based) and emit its partial report.
    #[arg(long)]
    shard_id: Option<usize>,
    /// Node budget; the report is marked non-exhaustive when exceeded.
    #[arg(long)]
    budget: Option<u64>,
    /// Permit n above the exhaustive cap.
    #[arg(long)]
    allow_large: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MergeArgs {
    #[arg(required = true)]
    reports: Vec<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BoundArgs {
    /// Bound name; see --list.
    name: Option<String>,
    #[arg(long)]
    list: bool,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
}

#[derive(Debug, Args)]
struct ReproduceArgs {
    /// Claim ids; all registered claims when empty.
    claims: Vec<String>,
    #[arg(long)]
    list: bool,
}

#[derive(Debug, Args)]
struct ReplayArgs {
    /// Manifest written by a previous run.
    file: PathBuf,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let params = strip_manifest_flag(&argv[1..]);
    let name = subcommand_name(&cli.command);
    let mut run = Run::new();
    let result = dispatch(cli.command, &mut run);
    match result {
        Ok(outcome) => {
            if let Err(e) = run.finish(name, params, cli.manifest.as_deref()) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            match outcome {
                Outcome::Pass => ExitCode::SUCCESS,
                Outcome::Fail => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn strip_manifest_flag(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
        } else if a == "--manifest" {
            skip = true;
        } else if !a.starts_with("--manifest=") {
            out.push(a.clone());
        }
    }
    out
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Construct(_) => "construct",
        Command::Verify(_) => "verify",
        Command::VerifySupport(_) => "verify-support",
        Command::Count(_) => "count",
        Command::Partition(_) => "partition",
        Command::RulesCheck(_) => "rules-check",
        Command::Classify(_) => "classify",
        Command::Search(_) => "search",
        Command::SearchMerge(_) => "search-merge",
        Command::Bound(_) => "bound",
        Command::Reproduce(_) => "reproduce",
        Command::Replay(_) => "replay",
    }
}

fn dispatch(cmd: Command, run: &mut Run) -> Result<Outcome> {
    match cmd {
        Command::Construct(a) => construct(a, run),
        Command::Verify(a) => verify(a, run),
        Command::VerifySupport(a) => verify_support(a, run),
        Command::Count(a) => count(a, run),
        Command::Partition(a) => partition(a, run),
        Command::RulesCheck(a) => rules_check(a, run),
        Command::Classify(a) => classify(a, run),
        Command::Search(a) => search_cmd(a, run),
        Command::SearchMerge(a) => merge(a, run),
        Command::Bound(a) => bound(a, run),
        Command::Reproduce(a) => reproduce(a, run),
        Command::Replay(a) => replay(a, run),
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| usage(format!("construct {family} requires --{flag}")))
}

fn build(a: &ConstructArgs) -> Result<LabeledGraph> {
    let lg = match a.family {
        Family::Ehm => constructions::ehm(need(a.s, "s", "ehm")?, need(a.n, "n", "ehm")?),
        Family::W => constructions::w_graph(
            need(a.s, "s", "w")?,
            need(a.m1, "m1", "w")?,
            need(a.m3, "m3", "w")?,
            need(a.m4, "m4", "w")?,
        ),
        Family::H => constructions::h_graph(need(a.t, "t", "h")?, need(a.n, "n", "h")?),
        Family::F => constructions::f_graph(
            need(a.s, "s", "f")?,
            need(a.t, "t", "f")?,
            need(a.n, "n", "f")?,
        ),
        Family::R => constructions::r_graph(need(a.t, "t", "r")?, need(a.n, "n", "r")?),
        Family::Appendix => {
            let id = a
                .id
                .as_deref()
                .ok_or_else(|| usage("construct appendix requires --id"))?;
            constructions::appendix_graph(id)
        }
    };
    lg.map_err(|e| usage(e.to_string()))
}

fn summary(lg: &LabeledGraph) -> serde_json::Value {
    let g = &lg.graph;
    json!({
        "n": g.order(),
        "edges": g.edge_count(),
        "triangles": g.count_cliques(3),
        "k4": g.count_cliques(4),
        "delta": g.min_degree(),
        "saturated": g.is_saturated(lg.s),
        "s": lg.s,
    })
}

fn summary_line(lg: &LabeledGraph) -> String {
    let g = &lg.graph;
    let sat = if g.is_saturated(lg.s) {
        format!("K{}", lg.s)
    } else {
        "no".to_string()
    };
    format!(
        "triangles={} delta={} saturated={} k4={} n={} edges={}",
        g.count_cliques(3),
        g.min_degree(),
        sat,
        g.count_cliques(4),
        g.order(),
        g.edge_count()
    )
}

fn construct(a: ConstructArgs, run: &mut Run) -> Result<Outcome> {
    let lg = build(&a)?;
    let name = format!("{:?}", a.family).to_lowercase();
    let body = match a.format {
        Format::Graph6 => graph6::encode(&lg.graph) + "\n",
        Format::Dot => dot::to_dot(&lg.graph, &name, Some(lg.names())),
        Format::Json => to_json(&json!({
            "family": name,
            "graph6": graph6::encode(&lg.graph),
            "labels": lg.manifest(),
            "summary": summary(&lg),
        }))?,
    };
    match &a.out {
        Some(path) => {
            run.write_output(path, &body)?;
            if a.format != Format::Json {
                let labels = PathBuf::from(format!("{}.labels.json", path.display()));
                run.write_output(&labels, &to_json(&lg.manifest())?)?;
            }
            run.println(summary_line(&lg));
        }
        None => {
            run.emit(None, &body)?;
            eprintln!("{}", summary_line(&lg));
        }
    }
    Ok(Outcome::Pass)
}

fn verify(a: VerifyArgs, run: &mut Run) -> Result<Outcome> {
    let g = a.input.load(run)?;
    if a.s < 3 {
        bail!(usage("--s must be at least 3"));
    }
    let saturated = g.is_saturated(a.s);
    let degree_ok = a.t.is_none_or(|t| g.min_degree() == t);
    let report = json!({
        "n": g.order(),
        "edges": g.edge_count(),
        "delta": g.min_degree(),
        "triangles": g.count_cliques(3),
        "k4": g.count_cliques(4),
        "clique_free": g.is_clique_free(a.s),
        "saturated": saturated,
        "unsaturated_pairs": g.unsaturated_pairs(a.s, 10),
        "degree_ok": degree_ok,
    });
    run.emit(a.out.as_deref(), &to_json(&report)?)?;
    Ok(if saturated && degree_ok { Outcome::Pass } else { Outcome::Fail })
}

#[derive(Deserialize)]
struct SidesFile {
    #[serde(alias = "A")]
    a: Vec<usize>,
    #[serde(alias = "B")]
    b: Vec<usize>,
    s: Option<usize>,
}

fn verify_support(a: VerifySupportArgs, run: &mut Run) -> Result<Outcome> {
    let g = a.input.load(run)?;
    let text = run.read_input(&a.sides)?;
    let sides: SidesFile = serde_json::from_str(&text).context("parsing sides file")?;
    let s = a
        .s
        .or(sides.s)
        .ok_or_else(|| usage("clique order missing: pass --s or put \"s\" in the sides file"))?;
    for &v in sides.a.iter().chain(&sides.b) {
        if v >= g.order() {
            bail!(usage(format!("side vertex {v} out of range")));
        }
    }
    let set = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
    let ss = SupportStructure::new(g, set(&sides.a), set(&sides.b), s).map_err(|e| usage(e.to_string()))?;
    let report = support::check_support(&ss);
    run.emit(a.out.as_deref(), &to_json(&report)?)?;
    let ok = if a.pre { report.pre.ok } else { report.ok };
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

fn count(a: CountArgs, run: &mut Run) -> Result<Outcome> {
    let g = a.input.load(run)?;
    let mut out = BTreeMap::new();
    for &r in &a.r {
        if r == 0 {
            bail!(usage("--r must be at least 1"));
        }
        out.insert(format!("k{r}"), g.count_cliques(r));
    }
    run.emit(a.out.as_deref(), &to_json(&out)?)?;
    Ok(Outcome::Pass)
}

fn partition(a: PartitionArgs, run: &mut Run) -> Result<Outcome> {
    let g = a.input.load(run)?;
    let p = if a.general {
        analysis::partition_neighborhood_general(&g, a.x)
    } else {
        analysis::partition_neighborhood(&g, a.x)
    }
    .map_err(|e| usage(e.to_string()))?;
    run.emit(a.out.as_deref(), &to_json(&p.report())?)?;
    Ok(Outcome::Pass)
}

fn rules_check(a: RulesArgs, run: &mut Run) -> Result<Outcome> {
    let g = a.input.load(run)?;
    let targets: Vec<usize> = match a.x {
        Some(x) => vec![x],
        None => (0..g.order())
            .filter(|&v| {
                let d = g.degree(v);
                if a.general {
                    (1..=analysis::MAX_PARTITION_DEGREE).contains(&d)
                } else {
                    d == 4
                }
            })
            .collect(),
    };
    let mut violations = Vec::new();
    for &x in &targets {
        let p = if a.x.is_some() && !a.general {
            analysis::partition_neighborhood(&g, x)
        } else {
            analysis::partition_neighborhood_general(&g, x)
        }
        .map_err(|e| usage(e.to_string()))?;
        for v in analysis::check_rules_lemma(&g, &p) {
            violations.push(json!({"x": x, "y": v.y, "cell": v.cell, "i": v.i}));
        }
    }
    let ok = violations.is_empty();
    run.emit(
        a.out.as_deref(),
        &to_json(&json!({"checked": targets, "violations": violations}))?,
    )?;
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

fn classify(a: ClassifyArgs, run: &mut Run) -> Result<Outcome> {
    let g = a.input.load(run)?;
    let c = analysis::classify_low_degree(&g, a.s).map_err(|e| usage(e.to_string()))?;
    run.emit(a.out.as_deref(), &to_json(&c)?)?;
    Ok(match c {
        analysis::Classification::Unrecognized { .. } => Outcome::Fail,
        _ => Outcome::Pass,
    })
}

/// Worker threads: `SATFORGE_THREADS` if set, else available cores, never
/// more than `shards`.
fn thread_cap(shards: usize) -> usize {
    let env = std::env::var("SATFORGE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v > 0);
    let avail = std::thread::available_parallelism().map_or(1, |n| n.get());
    env.unwrap_or(avail).min(shards).max(1)
}

fn search_cmd(a: SearchArgs, run: &mut Run) -> Result<Outcome> {
    let degree = match (a.t, a.at_least) {
        (None, _) => DegreeFilter::Any,
        (Some(t), false) => DegreeFilter::Exactly(t),
        (Some(t), true) => DegreeFilter::AtLeast(t),
    };
    let q = SearchQuery {
        degree,
        budget: a.budget,
        allow_large: a.allow_large,
        ..SearchQuery::new(a.n, a.r, a.s, None)
    };
    q.validate().map_err(|e| usage(e.to_string()))?;
    let report = match a.shard_id {
        Some(i) => {
            if i >= a.shards {
                bail!(usage(format!("--shard-id {i} must be below --shards {}", a.shards)));
            }
            let sq = SearchQuery {
                shard: (a.shards > 1).then_some(Shard { index: i, count: a.shards }),
                ..q
            };
            search::sat_value(&sq)?
        }
        None => search::sat_value_sharded(&q, a.shards, thread_cap(a.shards))
            .map_err(|e| usage(e.to_string()))?,
    };
    run.emit(a.out.as_deref(), &to_json(&report)?)?;
    Ok(if report.exhaustive { Outcome::Pass } else { Outcome::Fail })
}

fn merge(a: MergeArgs, run: &mut Run) -> Result<Outcome> {
    let mut reports = Vec::new();
    for p in &a.reports {
        let text = run.read_input(p)?;
        let r: SearchReport =
            serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))?;
        reports.push(r);
    }
    let merged = search::merge_reports(&reports).map_err(|e| usage(e.to_string()))?;
    run.emit(a.out.as_deref(), &to_json(&merged)?)?;
    Ok(if merged.exhaustive { Outcome::Pass } else { Outcome::Fail })
}

fn bound(a: BoundArgs, run: &mut Run) -> Result<Outcome> {
    if a.list {
        run.emit(None, &to_json(&analysis::BOUNDS)?)?;
        return Ok(Outcome::Pass);
    }
    let name = a.name.ok_or_else(|| usage("bound name required (see --list)"))?;
    let params = BoundParams { n: a.n, r: a.r, s: a.s, t: a.t };
    let info = analysis::bound_info(&name).map_err(|e| usage(e.to_string()))?;
    let value = analysis::evaluate_bound(&name, &params).map_err(|e| usage(e.to_string()))?;
    run.emit(
        None,
        &to_json(&json!({
            "name": info.name,
            "formula": info.formula,
            "hypotheses": info.hypotheses,
            "kind": info.kind,
            "params": params,
            "value": value,
        }))?,
    )?;
    Ok(Outcome::Pass)
}

fn reproduce(a: ReproduceArgs, run: &mut Run) -> Result<Outcome> {
    let registry = claims::registry()?;
    if a.list {
        for c in &registry.claims {
            run.println(format!("{}\t{}\t{}", c.id, c.basis, c.description));
        }
        return Ok(Outcome::Pass);
    }
    let selected: Vec<&claims::Claim> = if a.claims.is_empty() {
        registry.claims.iter().collect()
    } else {
        a.claims
            .iter()
            .map(|id| {
                registry
                    .claims
                    .iter()
                    .find(|c| &c.id == id)
                    .ok_or_else(|| usage(format!("unknown claim `{id}` (see --list)")))
            })
            .collect::<Result<_>>()?
    };
    let mut all_ok = true;
    for c in selected {
        let verdict = claims::run_claim(c)?;
        all_ok &= verdict.status != claims::Status::Fail;
        run.println(format!("{} {}: {}", verdict.status, c.id, verdict.detail));
    }
    Ok(if all_ok { Outcome::Pass } else { Outcome::Fail })
}

fn replay(a: ReplayArgs, run: &mut Run) -> Result<Outcome> {
    let text = run.read_input(&a.file)?;
    let m: RunManifest = serde_json::from_str(&text).context("parsing manifest")?;
    let exe = std::env::current_exe().context("locating the satforge binary")?;
    let output = std::process::Command::new(exe)
        .args(&m.parameters)
        .output()
        .context("re-running the manifest")?;
    let mut mismatches = Vec::new();
    if io::sha256_hex(&output.stdout) != m.stdout_sha256 {
        mismatches.push("stdout".to_string());
    }
    for f in &m.outputs {
        let bytes = std::fs::read(Path::new(&f.path)).unwrap_or_default();
        if io::sha256_hex(&bytes) != f.sha256 {
            mismatches.push(f.path.clone());
        }
    }
    let ok = mismatches.is_empty();
    run.println(if ok {
        format!("identical: {} output(s) and stdout match", m.outputs.len())
    } else {
        format!("differs: {}", mismatches.join(", "))
    });
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

