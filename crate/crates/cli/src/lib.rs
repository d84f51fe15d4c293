//! Command-line front end for `zfpd`.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zfpd::families::{parse_edge_list, parse_graph6_lines, write_graph6, Family};
use zfpd::invariants::{Parameter, Witness};
use zfpd::products::{amalgamate, cartesian_product, lexicographic_product};
use zfpd::theorems::{verify_ids, VerifyConfig, VerifyReport};
use zfpd::Graph;

#[derive(Parser, Debug)]
#[command(name = "zfpd", version, about = "Zero forcing and power domination on small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute graph parameters for every graph in a file.
    Compute(ComputeArgs),
    /// Generate a member of a named family as graph6.
    Gen(GenArgs),
    /// Build a product or amalgamation of two graphs.
    Product(ProductArgs),
    /// Run theorem verifiers.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Cartesian,
    Lex,
    Amalgam,
}

#[derive(clap::Args, Debug)]
pub struct ComputeArgs {
    /// Comma-separated: zf, pd, dom, tdom, pathcover, spider.
    #[arg(long, value_delimiter = ',', default_value = "zf,pd,dom")]
    pub params: Vec<String>,
    /// Input file; `-` reads standard input.
    #[arg(long)]
    pub input: PathBuf,
    /// Read a single graph as an edge list instead of graph6 lines.
    #[arg(long)]
    pub edgelist: bool,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(clap::Args, Debug)]
pub struct GenArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Part sizes for `multipartite`.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    /// Leg lengths for `spider`.
    #[arg(long, value_delimiter = ',')]
    pub legs: Option<Vec<usize>>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct ProductArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    pub a: PathBuf,
    pub b: PathBuf,
    /// `gv,hv` for amalgamation.
    #[arg(long)]
    pub at: Option<String>,
    /// Operands are edge lists.
    #[arg(long)]
    pub edgelist: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated theorem ids, e.g. T1,T5.
    #[arg(long, value_delimiter = ',', required = true)]
    pub ids: Vec<String>,
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Extra graph6 universe file (repeatable).
    #[arg(long)]
    pub universe: Vec<PathBuf>,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Do not use the built-in enumerator.
    #[arg(long)]
    pub no_builtin: bool,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What a command produced: text for stdout and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// Runs a parsed command. `interactive` selects the default output format.
pub fn run(cli: Cli, interactive: bool) -> Result<Outcome> {
    match cli.command {
        Command::Compute(a) => compute(&a, interactive),
        Command::Gen(a) => gen(&a),
        Command::Product(a) => product(&a),
        Command::Verify(a) => verify(&a, interactive),
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graphs(path: &Path, edgelist: bool) -> Result<Vec<Graph>> {
    let text = read_input(path)?;
    let graphs = if edgelist {
        if text.lines().all(|l| l.trim().is_empty() || l.trim_start().starts_with('#')) {
            Vec::new()
        } else {
            vec![parse_edge_list(&text)?]
        }
    } else {
        parse_graph6_lines(&text)?
    };
    Ok(graphs)
}

fn emit(text: String, out: Option<&Path>) -> Result<Outcome> {
    match out {
        Some(p) => {
            fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

#[derive(Serialize, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum WitnessOut {
    Set(Vec<usize>),
    Partition(Vec<Vec<usize>>),
}

#[derive(Serialize, Debug)]
pub struct ValueOut {
    pub param: String,
    pub value: usize,
    pub witness: WitnessOut,
    /// The witness re-checked against the defining predicate.
    pub valid: bool,
}

#[derive(Serialize, Debug)]
pub struct GraphOut {
    pub index: usize,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub values: Vec<ValueOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct ComputeReport {
    pub params: Vec<String>,
    pub graphs: Vec<GraphOut>,
}

pub fn compute_report(graphs: &[Graph], params: &[Parameter]) -> ComputeReport {
    let mut out = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        let mut values = Vec::new();
        let mut skipped = Vec::new();
        for &p in params {
            match p.compute(g) {
                Ok(r) => {
                    let witness = match &r.witness {
                        Witness::Set(s) => WitnessOut::Set(s.to_vec()),
                        Witness::Partition(parts) => WitnessOut::Partition(parts.iter().map(|s| s.to_vec()).collect()),
                    };
                    values.push(ValueOut {
                        param: p.name().to_string(),
                        value: r.value,
                        valid: p.accepts(g, &r.witness),
                        witness,
                    });
                }
                Err(e) => skipped.push(format!("{}: {e}", p.name())),
            }
        }
        out.push(GraphOut { index, graph6: write_graph6(g), order: g.order(), size: g.size(), values, skipped });
    }
    ComputeReport { params: params.iter().map(|p| p.name().to_string()).collect(), graphs: out }
}

fn compute_table(r: &ComputeReport) -> String {
    let mut s = String::new();
    for g in &r.graphs {
        s += &format!("#{} {} (n={}, m={})\n", g.index, g.graph6, g.order, g.size);
        for v in &g.values {
            let w = serde_json::to_string(&v.witness).unwrap_or_default();
            let flag = if v.valid { "" } else { "  INVALID WITNESS" };
            s += &format!("  {:<10} {:>3}  {w}{flag}\n", v.param, v.value);
        }
        for n in &g.skipped {
            s += &format!("  skipped    {n}\n");
        }
    }
    s
}

fn compute(a: &ComputeArgs, interactive: bool) -> Result<Outcome> {
    let params = a
        .params
        .iter()
        .map(|p| p.trim().parse::<Parameter>())
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let graphs = read_graphs(&a.input, a.edgelist)?;
    let report = compute_report(&graphs, &params);
    let text = match a.format.unwrap_or(if interactive { Format::Table } else { Format::Json }) {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Table => compute_table(&report),
    };
    Ok(Outcome::ok(text))
}

fn gen(a: &GenArgs) -> Result<Outcome> {
    let list = a.parts.as_deref().or(a.legs.as_deref());
    let g = Family::from_parts(&a.family, a.n, list)?.generate()?;
    emit(write_graph6(&g) + "\n", a.out.as_deref())
}

fn single_graph(path: &Path, edgelist: bool) -> Result<Graph> {
    let mut graphs = read_graphs(path, edgelist)?;
    if graphs.len() != 1 {
        bail!("{}: expected exactly one graph, found {}", path.display(), graphs.len());
    }
    Ok(graphs.remove(0))
}

fn product(a: &ProductArgs) -> Result<Outcome> {
    let g = single_graph(&a.a, a.edgelist)?;
    let h = single_graph(&a.b, a.edgelist)?;
    let result = match a.kind {
        Kind::Cartesian => cartesian_product(&g, &h)?.0,
        Kind::Lex => lexicographic_product(&g, &h)?.0,
        Kind::Amalgam => {
            let at = a.at.as_deref().ok_or_else(|| anyhow!("amalgam requires --at gv,hv"))?;
            let (gv, hv) = at
                .split_once(',')
                .and_then(|(x, y)| Some((x.trim().parse().ok()?, y.trim().parse().ok()?)))
                .ok_or_else(|| anyhow!("--at expects two vertex indices, got {at:?}"))?;
            amalgamate(&g, gv, &h, hv)?.0
        }
    };
    emit(write_graph6(&result) + "\n", a.out.as_deref())
}

fn verify(a: &VerifyArgs, interactive: bool) -> Result<Outcome> {
    let cfg = VerifyConfig {
        max_n: a.max_n,
        universe: a.universe.clone(),
        builtin: !a.no_builtin,
        workers: a.workers,
    };
    let ids: Vec<&str> = a.ids.iter().map(String::as_str).collect();
    let results = verify_ids(&ids, &cfg);
    let mut reports: Vec<VerifyReport> = Vec::new();
    let mut errors: Vec<String> = Vec::new();
    for (id, r) in results {
        match r {
            Ok(rep) => reports.push(rep),
            Err(e) => errors.push(format!("{id}: {e}")),
        }
    }
    let all_pass = errors.is_empty() && reports.iter().all(VerifyReport::passed);
    let format = a.format.unwrap_or(if interactive && a.out.is_none() { Format::Table } else { Format::Json });
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                reports: &'a [VerifyReport],
                errors: &'a [String],
                pass: bool,
            }
            serde_json::to_string_pretty(&Out { reports: &reports, errors: &errors, pass: all_pass })? + "\n"
        }
        Format::Table => {
            let mut s: String = reports.iter().map(|r| r.to_table() + "\n").collect();
            for e in &errors {
                s += &format!("error: {e}\n");
            }
            s += if all_pass { "all verifiers passed\n" } else { "some verifiers failed\n" };
            s
        }
    };
    let mut outcome = emit(text, a.out.as_deref())?;
    outcome.code = if all_pass { 0 } else { 1 };
    Ok(outcome)
}
