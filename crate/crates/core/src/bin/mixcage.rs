// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `mixcage`: construct, inspect, verify, bound and search mixed cages.
//!
//! Exit codes: 0 success or PASS, 1 FAIL, 2 usage or input error,
//! 3 search budget exhausted.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mixcage::bounds::{bound_report, Bound};
use mixcage::constructions as cons;
use mixcage::format::{parse_graph, write_graph, write_graph_with_header};
use mixcage::reproduce::{claims, Status};
use mixcage::search::{
    all_witnesses, find_min_order, SearchConfig, DEFAULT_BUDGET, DEFAULT_CEILING,
};
use mixcage::{check_regularity, mixed_girth, CageParams, MixedGraph};

#[derive(Parser)]
#[command(name = "mixcage", version, about = "Mixed cage toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from one of the known families.
    Construct(ConstructArgs),
    /// Print order, element counts, degrees and girth of a graph file.
    Inspect { file: PathBuf },
    /// Check a graph file against [z,r;g].
    Verify {
        file: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Print the known lower and upper bounds for [z,r;g].
    Bounds(ParamArgs),
    /// Exhaustively search for the minimum order of a [z,r;g]-mixed graph.
    Search(SearchArgs),
    /// Recompute the claim table.
    Reproduce(RunArgs),
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    z: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    g: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    CirculantDigraph,
    Product,
    LbTree,
    KBipartite,
    H28,
    #[value(name = "circ-12g")]
    Circ12g,
    HEven,
    #[value(name = "circ-z14")]
    CircZ14,
    Cycle,
    DirectedCycle,
    Petersen,
}

#[derive(Args)]
struct ConstructArgs {
    family: Family,
    #[arg(long)]
    z: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    /// Order, for `cycle` and `directed-cycle`.
    #[arg(long)]
    n: Option<usize>,
    /// 2-factor cycle type for `k-bipartite`, e.g. `2,2`.
    #[arg(long, value_delimiter = ',')]
    partition: Vec<usize>,
    /// First factor file for `product`.
    #[arg(long)]
    left: Option<PathBuf>,
    /// Second factor file for `product`.
    #[arg(long)]
    right: Option<PathBuf>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct RunArgs {
    /// Search-tree node budget per order.
    #[arg(long, env = "MIXCAGE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: usize,
}

impl RunArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            ceiling: self.ceiling,
            threads: self.threads,
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// First order to try; defaults to the best known lower bound.
    #[arg(long)]
    from: Option<usize>,
    /// Last order to try; defaults to the search ceiling.
    #[arg(long)]
    to: Option<usize>,
    #[command(flatten)]
    run: RunArgs,
    /// Also list every non-isomorphic witness at the minimum order.
    #[arg(long)]
    all: bool,
    /// Write the witness graph here.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

/// Failure that maps onto an exit code.
struct Fail(u8, String);

impl Fail {
    fn usage(msg: impl Into<String>) -> Self {
        Fail(2, msg.into())
    }
}

type CmdResult = Result<u8, Fail>;

/// Human report, then a `---` line, then `key = value` pairs.
#[derive(Default)]
struct Report {
    text: String,
    kv: Vec<(String, String)>,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn kv(&mut self, k: &str, v: impl ToString) {
        self.kv.push((k.to_string(), v.to_string()));
    }

    fn print(&self) {
        let mut out = self.text.clone();
        out.push_str("---\n");
        for (k, v) in &self.kv {
            let _ = writeln!(out, "{k} = {v}");
        }
        print!("{out}");
    }
}

fn read_graph(path: &Path) -> Result<MixedGraph, Fail> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Fail::usage(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Fail::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Fail> {
    std::fs::write(path, contents).map_err(|e| Fail::usage(format!("{}: {e}", path.display())))
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize, Fail> {
    v.ok_or_else(|| Fail::usage(format!("`{family}` needs --{flag}")))
}

fn construct(a: &ConstructArgs) -> CmdResult {
    let bad = |e: mixcage::GraphError| Fail::usage(e.to_string());
    let (name, graph) = match a.family {
        Family::CirculantDigraph => (
            "circulant-digraph",
            cons::circulant_digraph(
                need(a.z, "z", "circulant-digraph")?,
                need(a.g, "g", "circulant-digraph")?,
            )
            .map_err(bad)?,
        ),
        Family::Product => {
            let left = a
                .left
                .as_deref()
                .ok_or_else(|| Fail::usage("`product` needs --left"))?;
            let right = a
                .right
                .as_deref()
                .ok_or_else(|| Fail::usage("`product` needs --right"))?;
            (
                "product",
                cons::cartesian_product(&read_graph(left)?, &read_graph(right)?).map_err(bad)?,
            )
        }
        Family::LbTree => (
            "lb-tree",
            cons::lower_bound_tree(need(a.r, "r", "lb-tree")?, need(a.g, "g", "lb-tree")?)
                .map_err(bad)?,
        ),
        Family::KBipartite => (
            "k-bipartite",
            cons::oriented_kbipartite(need(a.r, "r", "k-bipartite")?, &a.partition).map_err(bad)?,
        ),
        Family::H28 => ("h28", cons::h28_graph()),
        Family::Circ12g => (
            "circ-12g",
            cons::circulant_12g_odd(need(a.g, "g", "circ-12g")?).map_err(bad)?,
        ),
        Family::HEven => (
            "h-even",
            cons::h_even(need(a.g, "g", "h-even")?).map_err(bad)?,
        ),
        Family::CircZ14 => (
            "circ-z14",
            cons::circulant_z14(need(a.z, "z", "circ-z14")?).map_err(bad)?,
        ),
        Family::Cycle => (
            "cycle",
            cons::undirected_cycle(need(a.n, "n", "cycle")?).map_err(bad)?,
        ),
        Family::DirectedCycle => (
            "directed-cycle",
            cons::directed_cycle(need(a.n, "n", "directed-cycle")?).map_err(bad)?,
        ),
        Family::Petersen => ("petersen", cons::petersen()),
    };
    let text = write_graph_with_header(&graph, &[format!("family = {name}")]);
    match &a.output {
        None => print!("{text}"),
        Some(path) => {
            write_file(path, &text)?;
            let mut rep = Report::default();
            rep.line(format!(
                "wrote {name}: {} vertices, {} edges, {} arcs to {}",
                graph.order(),
                graph.edges().len(),
                graph.arcs().len(),
                path.display()
            ));
            rep.kv("family", name);
            rep.kv("order", graph.order());
            rep.kv("edges", graph.edges().len());
            rep.kv("arcs", graph.arcs().len());
            rep.kv("output", path.display());
            rep.print();
        }
    }
    Ok(0)
}

fn girth_text(g: &MixedGraph) -> (String, String) {
    match mixed_girth(g) {
        Some(w) => (w.len().to_string(), w.to_string()),
        None => ("none".into(), "acyclic".into()),
    }
}

fn inspect(path: &Path) -> CmdResult {
    let g = read_graph(path)?;
    let mut rep = Report::default();
    let degs = g.degree_table();
    let range = |f: fn(&(usize, usize, usize)) -> usize| {
        let lo = degs.iter().map(f).min().unwrap_or(0);
        let hi = degs.iter().map(f).max().unwrap_or(0);
        if lo == hi {
            lo.to_string()
        } else {
            format!("{lo}..{hi}")
        }
    };
    let (girth, witness) = girth_text(&g);
    rep.line(format!(
        "order {}, {} edges, {} arcs",
        g.order(),
        g.edges().len(),
        g.arcs().len()
    ));
    rep.line(format!(
        "out-degree {}, in-degree {}, edge-degree {}",
        range(|d| d.0),
        range(|d| d.1),
        range(|d| d.2)
    ));
    match g.simplicity_violation() {
        None => rep.line("simple"),
        Some(why) => rep.line(format!("not simple: {why}")),
    }
    rep.line(format!("girth {girth}: {witness}"));
    rep.kv("order", g.order());
    rep.kv("edges", g.edges().len());
    rep.kv("arcs", g.arcs().len());
    rep.kv("out_degree", range(|d| d.0));
    rep.kv("in_degree", range(|d| d.1));
    rep.kv("edge_degree", range(|d| d.2));
    rep.kv("simple", g.is_simple());
    rep.kv("girth", &girth);
    rep.kv("witness", &witness);
    rep.print();
    Ok(0)
}

fn verify(path: &Path, p: ParamArgs) -> CmdResult {
    let g = read_graph(path)?;
    let reg = check_regularity(&g, p.z, p.r);
    let cycle = mixed_girth(&g);
    let girth = cycle.as_ref().map(|w| w.len());
    let pass = reg.is_regular && girth == Some(p.g);
    let mut rep = Report::default();
    rep.line(format!(
        "graph of order {} against [{},{};{}]",
        g.order(),
        p.z,
        p.r,
        p.g
    ));
    if reg.is_regular {
        rep.line(format!(
            "regularity: every vertex has out = in = {} and edge degree {}",
            p.z, p.r
        ));
    } else {
        rep.line(format!(
            "regularity: {} vertices violate the claim",
            reg.violations.len()
        ));
        for v in reg.violations.iter().take(10) {
            rep.line(format!(
                "  vertex {}: out {} in {} edge {}",
                v.vertex, v.out_degree, v.in_degree, v.edge_degree
            ));
        }
    }
    let (girth_s, witness) = girth_text(&g);
    rep.line(format!("girth: {girth_s} ({witness})"));
    rep.line(if pass { "PASS" } else { "FAIL" });
    rep.kv("order", g.order());
    rep.kv("regular", reg.is_regular);
    rep.kv("violations", reg.violations.len());
    rep.kv("girth", &girth_s);
    rep.kv("witness", &witness);
    rep.kv("result", if pass { "PASS" } else { "FAIL" });
    rep.print();
    Ok(if pass { 0 } else { 1 })
}

fn params_of(p: ParamArgs) -> Result<CageParams, Fail> {
    CageParams::new(p.z, p.r, p.g).map_err(|e| Fail::usage(e.to_string()))
}

fn bound_text(b: Option<Bound>) -> (String, String) {
    match b {
        Some(b) => (b.value.to_string(), b.provenance.to_string()),
        None => ("none".into(), "none".into()),
    }
}

fn bounds(p: ParamArgs) -> CmdResult {
    let params = params_of(p)?;
    let rep_b = bound_report(params).map_err(|e| Fail::usage(e.to_string()))?;
    let (lo, lo_src) = bound_text(rep_b.lower);
    let (hi, hi_src) = bound_text(rep_b.upper);
    let mut rep = Report::default();
    rep.line(format!("bounds for {params}"));
    rep.line(format!("  lower: {lo} ({lo_src})"));
    rep.line(format!("  upper: {hi} ({hi_src})"));
    if rep_b.is_exact() {
        rep.line(format!("  cage order is exactly {lo}"));
    }
    rep.kv("z", p.z);
    rep.kv("r", p.r);
    rep.kv("g", p.g);
    rep.kv("lower", lo);
    rep.kv("lower_source", lo_src);
    rep.kv("upper", hi);
    rep.kv("upper_source", hi_src);
    rep.kv("exact", rep_b.is_exact());
    rep.print();
    Ok(0)
}

fn search(a: &SearchArgs) -> CmdResult {
    let params = params_of(a.params)?;
    let cfg = a.run.config();
    let from = match a.from {
        Some(f) => f,
        None => bound_report(params)
            .ok()
            .and_then(|b| b.lower)
            .map_or(1, |b| b.value as usize),
    };
    let to = a.to.unwrap_or(cfg.ceiling);
    let out = find_min_order(params, from, to, &cfg).map_err(|e| Fail::usage(e.to_string()))?;
    let mut rep = Report::default();
    rep.line(format!("search for {params} over orders {from}..={to}"));
    rep.line(format!("  refuted orders: {:?}", out.refuted_orders));
    match (&out.min_order, out.budget_exhausted) {
        (Some(m), _) => rep.line(format!("  minimum order: {m}")),
        (None, true) => rep.line("  budget exhausted before a decision"),
        (None, false) => rep.line("  no graph in range"),
    }
    rep.line(format!(
        "  {} nodes in {:.3} s",
        out.stats.nodes,
        out.stats.elapsed.as_secs_f64()
    ));
    let mut classes = None;
    if let (true, Some(m)) = (a.all, out.min_order) {
        let (reps, complete) =
            all_witnesses(params, m, &cfg).map_err(|e| Fail::usage(e.to_string()))?;
        rep.line(format!(
            "  {} non-isomorphic witnesses at order {m}{}",
            reps.len(),
            if complete {
                ""
            } else {
                " (budget exhausted, list incomplete)"
            }
        ));
        for (i, w) in reps.iter().enumerate() {
            rep.line(format!("  witness {i}:"));
            for l in write_graph(w).lines() {
                rep.line(format!("    {l}"));
            }
        }
        classes = Some((reps.len(), complete));
    }
    if let Some(w) = &out.witness {
        let text = write_graph_with_header(w, &[format!("witness for {params}")]);
        match &a.output {
            Some(path) => {
                write_file(path, &text)?;
                rep.line(format!("  witness written to {}", path.display()));
            }
            None => {
                rep.line("  witness:");
                for l in text.lines() {
                    rep.line(format!("    {l}"));
                }
            }
        }
    }
    rep.kv("z", a.params.z);
    rep.kv("r", a.params.r);
    rep.kv("g", a.params.g);
    rep.kv("from", from);
    rep.kv("to", to);
    rep.kv(
        "min_order",
        out.min_order.map_or("none".into(), |m| m.to_string()),
    );
    rep.kv(
        "refuted_orders",
        out.refuted_orders
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    rep.kv("budget_exhausted", out.budget_exhausted);
    rep.kv("nodes", out.stats.nodes);
    rep.kv("elapsed_ms", out.stats.elapsed.as_millis());
    if let Some((count, complete)) = classes {
        rep.kv("witness_classes", count);
        rep.kv("witness_classes_complete", complete);
    }
    rep.print();
    Ok(match (out.min_order, out.budget_exhausted) {
        (Some(_), _) => 0,
        (None, true) => 3,
        (None, false) => 1,
    })
}

fn reproduce(a: RunArgs) -> CmdResult {
    let rows = claims(&a.config());
    let mut rep = Report::default();
    let w = rows.iter().map(|c| c.id.len()).max().unwrap_or(2);
    for c in &rows {
        rep.line(format!("{:<w$}  {}  {}", c.id, c.status, c.source));
        rep.line(format!("{:<w$}        expected: {}", "", c.expected));
        rep.line(format!("{:<w$}        computed: {}", "", c.computed));
    }
    let fails = rows.iter().filter(|c| c.status == Status::Fail).count();
    let open = rows.iter().filter(|c| c.status == Status::Open).count();
    let passed = rows.iter().filter(|c| c.status == Status::Pass).count();
    rep.line(format!("{passed} passed, {fails} failed, {open} open"));
    for c in &rows {
        rep.kv(c.id, c.status);
    }
    rep.kv("passed", passed);
    rep.kv("failed", fails);
    rep.kv("open", open);
    rep.print();
    Ok(if fails == 0 { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Inspect { file } => inspect(file),
        Command::Verify { file, params } => verify(file, *params),
        Command::Bounds(p) => bounds(*p),
        Command::Search(a) => search(a),
        Command::Reproduce(a) => reproduce(*a),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("mixcage: {msg}");
            ExitCode::from(code)
        }
    }
}
