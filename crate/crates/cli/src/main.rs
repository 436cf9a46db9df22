//! Command-line front end: generate, color, solve, verify, export and sweep.
//!
//! Data goes to stdout, progress and diagnostics to stderr. Exit codes: 1 on
//! a failed verification or sweep, 2 on unreadable input or parameters, 3
//! when a search budget runs out.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use lirlab::colorers::{color_family, color_tree};
use lirlab::families::{generate, is_tree, FamilySpec};
use lirlab::io::{colored_document, decode, export_dot, graph_document, plan_document, to_json, Decoded};
use lirlab::solver::longrun::exists_2liec_resumable;
use lirlab::solver::orbits::{detect, representatives};
use lirlab::solver::{exact_d_lir, exact_lir, Certificate, Existence, SolveBudget, SolveResult, SolveStatus};
use lirlab::{apply_doubling, fixtures, sweeps, verify_liec, DoublingPlan, EdgeColoring, Multigraph, VerificationReport};
use serde_json::json;

#[derive(Parser)]
#[command(name = "lirlab", version, about = "Locally irregular 2-edge-colorings and edge doublings")]
struct Cli {
    /// Read plan fixtures from this directory instead of the built-in copies.
    #[arg(long, global = true, value_name = "DIR")]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(clap::Args)]
struct BudgetArgs {
    /// Node limit for each coloring search.
    #[arg(long, value_name = "N")]
    budget_nodes: Option<u64>,
    /// Wall-clock limit for the whole search.
    #[arg(long, value_name = "S")]
    budget_seconds: Option<f64>,
    #[arg(long, value_name = "K")]
    max_colors: Option<usize>,
    #[arg(long, value_name = "D")]
    max_doublings: Option<usize>,
    /// Run the candidates of one doubling level on all cores.
    #[arg(long)]
    parallel: bool,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SolveBudget, Failure> {
        let mut b = SolveBudget {
            parallel: self.parallel,
            ..SolveBudget::default()
        };
        if let Some(n) = self.budget_nodes {
            b.node_limit = n;
        }
        if let Some(s) = self.budget_seconds {
            b.time_limit = Some(Duration::try_from_secs_f64(s).map_err(|e| Failure::Input(e.to_string()))?);
        }
        if let Some(k) = self.max_colors {
            b.max_colors = k;
        }
        if let Some(d) = self.max_doublings {
            b.max_doublings = d;
        }
        b.validate().map_err(input)?;
        Ok(b)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as a graph document.
    Generate {
        /// Family spec, e.g. `powcycle:11,3` or `split:8;1`.
        family: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build a doubling plan: the family's construction, the tree colorer, or
    /// the exact solver for graphs without a construction.
    Color {
        /// Family spec, or `@file` / `@-` holding a graph document.
        source: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Exact lir, or the minimum number of doublings with `--dlir`.
    Solve {
        /// Family spec, or `@file` / `@-` holding a graph document.
        source: String,
        #[arg(long)]
        dlir: bool,
        /// Resumable exhaustive mode for large instances: finished subproblems
        /// are recorded in `<PATH>.<size>.<candidate>` files.
        #[arg(long, value_name = "PATH", requires = "dlir")]
        checkpoint: Option<PathBuf>,
        /// Number of leading bundles the resumable mode splits on.
        #[arg(long, default_value_t = 16, value_name = "D")]
        split_depth: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a colored graph or a plan document (file or stdin).
    Verify {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Convert a document (file or stdin) to DOT, JSON or a table.
    Export {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Run a named sweep, `all`, or `list` to show the names.
    Sweep {
        suite: String,
        /// Seed for the randomized sweeps.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Debug)]
enum Failure {
    Verification(String),
    Input(String),
    Budget(String),
}

fn input(e: lirlab::Error) -> Failure {
    match e {
        lirlab::Error::Construction(m) => Failure::Verification(format!("construction failed: {m}")),
        other => Failure::Input(other.to_string()),
    }
}

fn read_text(file: Option<&PathBuf>) -> Result<String, Failure> {
    match file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(s)
        }
    }
}

fn read_document(file: Option<&PathBuf>) -> Result<Decoded, Failure> {
    decode(&read_text(file)?).map_err(input)
}

/// A graph named by a family spec, or read from `@file` / `@-`.
enum Source {
    Family(FamilySpec),
    Graph(Multigraph),
}

impl Source {
    fn parse(text: &str) -> Result<Source, Failure> {
        if let Some(path) = text.strip_prefix('@') {
            return match read_document(Some(&PathBuf::from(path)))? {
                Decoded::Graph(g) => Ok(Source::Graph(g)),
                _ => Err(Failure::Input("expected a graph document without a coloring".into())),
            };
        }
        text.parse().map(Source::Family).map_err(input)
    }

    fn graph(&self) -> Result<Multigraph, Failure> {
        match self {
            Source::Family(spec) => generate(spec).map_err(input),
            Source::Graph(g) => Ok(g.clone()),
        }
    }
}

fn degree_table(g: &Multigraph, c: &EdgeColoring) -> Result<String, Failure> {
    let deg = lirlab::color_degrees(g, c).map_err(input)?;
    let mut out = String::from("bundle  u  v  mult  color\n");
    for (i, b) in g.bundles().iter().enumerate() {
        let _ = writeln!(out, "{i:>6} {:>2} {:>2} {:>5}  {}", b.u, b.v, b.mult, c.get(i).letter());
    }
    out.push_str("vertex  blue  red\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "{v:>6} {:>5} {:>4}", deg.blue(v), deg.red(v));
    }
    Ok(out)
}

fn edge_table(g: &Multigraph) -> String {
    let mut out = format!("n = {}, {} bundles\n", g.n(), g.bundle_count());
    for b in g.bundles() {
        let _ = writeln!(out, "{} {} {}", b.u, b.v, b.mult);
    }
    out
}

fn emit_plan(base: &Multigraph, plan: &DoublingPlan, format: Format) -> Result<String, Failure> {
    let m = plan.multigraph(base).map_err(input)?;
    Ok(match format {
        Format::Json => {
            let mut doc = plan_document(base, plan).map_err(input)?;
            doc.degree_labels = Some(plan.degrees(base).map_err(input)?.blue_red_pairs());
            to_json(&doc)
        }
        Format::Dot => export_dot(&m, Some(&plan.coloring)),
        Format::Table => format!("doublings: {}\n{}", plan.count(), degree_table(&m, &plan.coloring)?),
    })
}

fn status_name(s: SolveStatus) -> &'static str {
    match s {
        SolveStatus::Found => "found",
        SolveStatus::ExhaustedNoSolution => "exhausted",
        SolveStatus::BudgetExceeded => "budget_exceeded",
    }
}

fn budget_error(r: &SolveResult) -> Result<(), Failure> {
    if r.status == SolveStatus::BudgetExceeded {
        Err(Failure::Budget(format!("search stopped after {} nodes", r.nodes)))
    } else {
        Ok(())
    }
}

fn color(source: &str, format: Format, budget: &BudgetArgs) -> Result<String, Failure> {
    let source = Source::parse(source)?;
    if let Source::Family(spec) = &source {
        if let Some(r) = color_family(spec) {
            let (g, plan) = r.map_err(input)?;
            return emit_plan(&g, &plan, format);
        }
    }
    let g = source.graph()?;
    if is_tree(&g) && g.n() >= 3 {
        let plan = color_tree(&g).map_err(input)?;
        return emit_plan(&g, &plan, format);
    }
    eprintln!("no construction for this graph; running the exact solver");
    let r = exact_d_lir(&g, &budget.budget()?).map_err(input)?;
    budget_error(&r)?;
    match r.plan() {
        Some(plan) => emit_plan(&g, plan, format),
        None => Err(Failure::Budget("no plan within --max-doublings".into())),
    }
}

fn certificate_json(g: &Multigraph, c: &Option<Certificate>) -> Result<serde_json::Value, Failure> {
    Ok(match c {
        None => serde_json::Value::Null,
        Some(Certificate::Coloring(classes)) => json!({ "classes": classes }),
        Some(Certificate::Plan(p)) => serde_json::to_value(plan_document(g, p).map_err(input)?).expect("document serializes"),
    })
}

fn solve(
    source: &str,
    dlir: bool,
    checkpoint: Option<&PathBuf>,
    depth: usize,
    format: Format,
    budget: &BudgetArgs,
) -> Result<String, Failure> {
    let g = Source::parse(source)?.graph()?;
    let b = budget.budget()?;
    let r = match (dlir, checkpoint) {
        (true, Some(path)) => resumable_d_lir(&g, &b, path, depth)?,
        (true, None) => exact_d_lir(&g, &b).map_err(input)?,
        (false, _) => exact_lir(&g, &b).map_err(input)?,
    };
    let problem = if dlir { "dlir" } else { "lir" };
    let out = match format {
        Format::Json => json!({
            "problem": problem,
            "status": status_name(r.status),
            "value": r.value,
            "nodes": r.nodes,
            "certificate": certificate_json(&g, &r.certificate)?,
        })
        .to_string(),
        Format::Table | Format::Dot => {
            let value = r.value.map_or("-".to_string(), |v| v.to_string());
            let mut s = format!("{problem} = {value} ({}, {} nodes)\n", status_name(r.status), r.nodes);
            match &r.certificate {
                Some(Certificate::Plan(p)) => s.push_str(&emit_plan(&g, p, format)?),
                Some(Certificate::Coloring(c)) if format == Format::Table => {
                    for (i, b) in g.bundles().iter().enumerate() {
                        let _ = writeln!(s, "{} {} class {}", b.u, b.v, c[i]);
                    }
                }
                _ => {}
            }
            s
        }
    };
    if r.status == SolveStatus::BudgetExceeded {
        emit(&out);
        return Err(Failure::Budget(format!("search stopped after {} nodes; rerun to resume", r.nodes)));
    }
    Ok(out)
}

/// Doubling number with every candidate refuted by the checkpointed search.
fn resumable_d_lir(g: &Multigraph, b: &SolveBudget, path: &std::path::Path, depth: usize) -> Result<SolveResult, Failure> {
    if !g.is_simple() || !g.is_connected() {
        return Err(Failure::Input("expected a connected simple graph".into()));
    }
    let sym = detect(g);
    let mut nodes = 0;
    for size in 0..=b.max_doublings.min(g.bundle_count()) {
        for (i, rep) in representatives(g, sym, size).iter().enumerate() {
            let m = apply_doubling(g, rep).map_err(input)?;
            let file = PathBuf::from(format!("{}.{size}.{i}", path.display()));
            let depth = depth.min(m.bundle_count());
            let report = exists_2liec_resumable(&m, depth, Some(&file), b, |done, total| {
                eprintln!("size {size} candidate {i}: {done}/{total} subproblems");
            })
            .map_err(input)?;
            nodes += report.nodes;
            match report.existence {
                Existence::Found(c) => {
                    return Ok(SolveResult {
                        status: SolveStatus::Found,
                        value: Some(size),
                        certificate: Some(Certificate::Plan(DoublingPlan::new(rep.iter().copied(), c))),
                        nodes,
                    })
                }
                Existence::Absent => {}
                Existence::BudgetExceeded => {
                    return Ok(SolveResult {
                        status: SolveStatus::BudgetExceeded,
                        value: None,
                        certificate: None,
                        nodes,
                    })
                }
            }
        }
    }
    Ok(SolveResult {
        status: SolveStatus::ExhaustedNoSolution,
        value: None,
        certificate: None,
        nodes,
    })
}

fn report_text(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json | Format::Dot => serde_json::to_string(r).expect("report serializes"),
        Format::Table => {
            let mut s = format!("ok: {}\n", r.ok);
            for v in &r.violations {
                let _ = writeln!(
                    s,
                    "bundle {} ({}-{}) color {}: both ends have degree {}",
                    v.bundle,
                    v.u,
                    v.v,
                    v.color.letter(),
                    v.deg_u
                );
            }
            s.trim_end().to_string()
        }
    }
}

fn verify(file: Option<&PathBuf>, format: Format) -> Result<String, Failure> {
    let report = match read_document(file)? {
        Decoded::Graph(_) => return Err(Failure::Input("document has no coloring to verify".into())),
        Decoded::Colored(g, c) => verify_liec(&g, &c),
        Decoded::Plan(base, plan) => plan.verify(&base),
    }
    .map_err(input)?;
    let text = report_text(&report, format);
    if report.ok {
        Ok(text)
    } else {
        emit(&text);
        let bundles: Vec<String> = report.violations.iter().map(|v| v.bundle.to_string()).collect();
        Err(Failure::Verification(format!("not locally irregular at bundles {}", bundles.join(", "))))
    }
}

fn export(file: Option<&PathBuf>, format: Format) -> Result<String, Failure> {
    let doc = read_document(file)?;
    let (m, c) = match &doc {
        Decoded::Graph(g) => (g.clone(), None),
        Decoded::Colored(g, c) => (g.clone(), Some(c.clone())),
        Decoded::Plan(base, plan) => (plan.multigraph(base).map_err(input)?, Some(plan.coloring.clone())),
    };
    Ok(match (format, &doc) {
        (Format::Dot, _) => export_dot(&m, c.as_ref()),
        (Format::Json, Decoded::Plan(base, plan)) => to_json(&plan_document(base, plan).map_err(input)?),
        (Format::Json, _) => match &c {
            Some(c) => to_json(&colored_document(&m, c)),
            None => to_json(&graph_document(&m)),
        },
        (Format::Table, _) => match &c {
            Some(c) => degree_table(&m, c)?,
            None => edge_table(&m),
        },
    })
}

fn sweep(name: &str, seed: Option<u64>, format: Format) -> Result<String, Failure> {
    if name == "list" {
        let mut s = String::new();
        for suite in sweeps::SUITES {
            let _ = writeln!(s, "{:<20} {}", suite.name, suite.about);
        }
        return Ok(s.trim_end().to_string());
    }
    let chosen: Vec<&sweeps::Suite> = if name == "all" {
        sweeps::SUITES.iter().collect()
    } else {
        vec![sweeps::find(name).ok_or_else(|| Failure::Input(format!("unknown sweep {name:?}; try `sweep list`")))?]
    };
    let mut rows = Vec::new();
    for suite in chosen {
        eprintln!("running {}", suite.name);
        let (out, took) = suite.run(seed);
        rows.push((suite.name, out, took));
    }
    let failed = rows.iter().filter(|r| r.1.is_err()).count();
    let text = match format {
        Format::Json => serde_json::Value::Array(
            rows.iter()
                .map(|(name, out, took)| {
                    json!({
                        "suite": name,
                        "pass": out.is_ok(),
                        "detail": match out { Ok(s) | Err(s) => s },
                        "seconds": took.as_secs_f64(),
                    })
                })
                .collect(),
        )
        .to_string(),
        Format::Table | Format::Dot => {
            let mut s = String::new();
            for (name, out, took) in &rows {
                let (tag, detail) = match out {
                    Ok(d) => ("PASS", d),
                    Err(d) => ("FAIL", d),
                };
                let _ = writeln!(s, "{name:<20} {tag}  {:>9.2?}  {detail}", took);
            }
            s.trim_end().to_string()
        }
    };
    if failed > 0 {
        emit(&text);
        return Err(Failure::Verification(format!("{failed} sweep(s) failed")));
    }
    Ok(text)
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{}", text.trim_end());
}

fn run(cli: Cli) -> Result<String, Failure> {
    if let Some(dir) = &cli.fixtures {
        if !dir.is_dir() {
            return Err(Failure::Input(format!("{} is not a directory", dir.display())));
        }
        fixtures::use_directory(dir);
    }
    match cli.command {
        Command::Generate { family, format } => {
            let g = generate(&family.parse().map_err(input)?).map_err(input)?;
            Ok(match format {
                Format::Json => to_json(&graph_document(&g)),
                Format::Dot => export_dot(&g, None),
                Format::Table => edge_table(&g),
            })
        }
        Command::Color { source, format, budget } => color(&source, format, &budget),
        Command::Solve {
            source,
            dlir,
            checkpoint,
            split_depth,
            format,
            budget,
        } => solve(&source, dlir, checkpoint.as_ref(), split_depth, format, &budget),
        Command::Verify { file, format } => verify(file.as_ref(), format),
        Command::Export { file, format } => export(file.as_ref(), format),
        Command::Sweep { suite, seed, format } => sweep(&suite, seed, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            if !out.trim_end().is_empty() {
                emit(&out);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Verification(m) => (1, m),
                Failure::Input(m) => (2, m),
                Failure::Budget(m) => (3, m),
            };
            eprintln!("lirlab: {msg}");
            ExitCode::from(code)
        }
    }
}
