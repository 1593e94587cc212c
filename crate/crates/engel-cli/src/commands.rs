//! Implementations of the `analyze`, `survey` and `export` subcommands.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use engel::catalog::{self, Family};
use engel::{Config, EngelGraph, GraphMode, Group, GroupSpecExpr};

use crate::parser::parse_group_expr;
use crate::record::{tool_version, DiameterReport, ResultRecord};
use crate::store;

/// Stable exit-code contract: 0 success, 1 usage/parse/constraint error,
/// 2 resource cap exceeded.
pub fn exit_code_for(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<engel::Error>() {
        Some(
            engel::Error::TableTooLarge { .. }
            | engel::Error::StreamTooLarge { .. }
            | engel::Error::FieldTooLarge { .. },
        ) => 2,
        _ => 1,
    }
}

pub fn parse_mode(mode: &str, n: Option<u32>) -> Result<GraphMode> {
    match mode {
        "gamma" => Ok(GraphMode::Gamma),
        "gamma_n" => {
            let n = n.ok_or_else(|| anyhow!("--mode gamma_n requires --n"))?;
            Ok(GraphMode::GammaN(n))
        }
        "lambda" => Ok(GraphMode::Lambda),
        "delta" => Ok(GraphMode::Delta),
        other => bail!("unknown mode {other:?}: expected gamma, gamma_n, lambda or delta"),
    }
}

pub struct AnalyzeOptions {
    pub mode: String,
    pub n: Option<u32>,
    pub diameter: bool,
    pub equivariance: bool,
}

pub fn analyze(expr_text: &str, opts: &AnalyzeOptions, cfg: &Config) -> Result<ResultRecord> {
    let expr = parse_group_expr(expr_text)?;
    let mode = parse_mode(&opts.mode, opts.n)?;
    let group = catalog::build(&expr, cfg)?;
    analyze_group(&expr, &group, mode, opts, cfg)
}

pub fn analyze_group(
    expr: &GroupSpecExpr,
    group: &Group,
    mode: GraphMode,
    opts: &AnalyzeOptions,
    cfg: &Config,
) -> Result<ResultRecord> {
    let start = Instant::now();
    let mut graph = EngelGraph::new(group, mode, opts.equivariance)?;
    let vertex_count = graph.vertex_count() as u64;
    let (strongly, weakly, scc_count) = if vertex_count == 0 {
        (true, true, 0)
    } else {
        let scc = graph.scc()?;
        (scc.count == 1, graph.is_weakly_connected()?, scc.count as u64)
    };
    let (undirected, directed) = if opts.diameter && vertex_count > 0 {
        (
            graph.undirected_diameter()?,
            Some(DiameterReport::from(graph.directed_diameter()?)),
        )
    } else {
        (None, None)
    };
    Ok(ResultRecord {
        expr: expr.to_string(),
        group_order: group.order()?,
        mode: mode.label(),
        n: match mode {
            GraphMode::GammaN(n) => Some(n),
            _ => None,
        },
        vertex_count,
        strongly_connected: strongly,
        weakly_connected: weakly,
        scc_count,
        undirected_diameter: undirected,
        directed_diameter: directed,
        wall_time_ms: start.elapsed().as_millis() as u64,
        tool_version: tool_version(),
        equivariance: opts.equivariance,
        sylow_seed: cfg.sylow_seed,
    })
}

pub fn print_record(rec: &ResultRecord, out: &mut impl Write) -> Result<()> {
    if rec.vertex_count == 0 {
        writeln!(out, "# empty graph: every element is hypercentral")?;
    }
    writeln!(out, "{}", serde_json::to_string(rec)?)?;
    Ok(())
}

/// Survey a family over an inclusive range, resuming from the store.
/// Currently one family is supported: `PSL2`, iterating odd primes p.
pub fn survey(
    family: &str,
    range: &str,
    store_path: &Path,
    opts: &AnalyzeOptions,
    cfg: &Config,
    out: &mut impl Write,
) -> Result<usize> {
    if family != "PSL2" {
        bail!("unknown survey family {family:?}: expected PSL2");
    }
    let (lo, hi) = range
        .split_once("..")
        .and_then(|(a, b)| Some((a.trim().parse::<u64>().ok()?, b.trim().parse::<u64>().ok()?)))
        .ok_or_else(|| anyhow!("range must look like 5..31"))?;
    let loaded = store::load(store_path)?;
    for line in &loaded.corrupt_lines {
        writeln!(out, "# skipping corrupt store line {line}")?;
    }
    let seen = loaded.seen_keys();
    let mode = parse_mode(&opts.mode, opts.n)?;
    let mut fresh = Vec::new();
    for p in lo..=hi {
        if p < 3 || p % 2 == 0 || !engel::field::is_prime(p) {
            continue;
        }
        let expr = GroupSpecExpr { family: Family::Psl, args: vec![2, p] };
        let key = (expr.to_string(), mode.label(), opts.n);
        if seen.contains(&key) {
            continue;
        }
        let group = catalog::build(&expr, cfg)?;
        let rec = analyze_group(&expr, &group, mode, opts, cfg)?;
        writeln!(out, "{}", serde_json::to_string(&rec)?)?;
        fresh.push(rec);
    }
    if !fresh.is_empty() {
        store::append(store_path, &fresh).context("appending survey records")?;
    }
    Ok(fresh.len())
}

const DOT_FULL_CAP: usize = 4096;

/// Deterministic graph export: full graph as dot/edgelist when small
/// enough, otherwise (dot only) the SCC condensation.
pub fn export(
    expr_text: &str,
    mode_str: &str,
    n: Option<u32>,
    format: &str,
    equivariance: bool,
    cfg: &Config,
    out: &mut impl Write,
) -> Result<()> {
    let expr = parse_group_expr(expr_text)?;
    let mode = parse_mode(mode_str, n)?;
    let group = catalog::build(&expr, cfg)?;
    let mut graph = EngelGraph::new(&group, mode, equivariance)?;
    let v = graph.vertex_count();
    match format {
        "edgelist" => {
            writeln!(out, "# {} {} {}", expr, mode.label(), v)?;
            for u in 0..v as u32 {
                for &w in graph.out_neighbors(u)?.iter() {
                    writeln!(out, "{u} {w}")?;
                }
            }
        }
        "dot" => {
            let scc = graph.scc()?;
            writeln!(out, "digraph \"{} {}\" {{", expr, mode.label())?;
            if v <= DOT_FULL_CAP {
                let orders = group.element_orders()?;
                for u in 0..v as u32 {
                    let idx = graph.vertices()[u as usize];
                    writeln!(
                        out,
                        "  v{u} [order={}, scc={}];",
                        orders[idx as usize], scc.comp_of[u as usize]
                    )?;
                }
                for u in 0..v as u32 {
                    for &w in graph.out_neighbors(u)?.iter() {
                        writeln!(out, "  v{u} -> v{w};")?;
                    }
                }
            } else {
                // over the full-graph cap: emit the condensation only
                for comp in 0..scc.count {
                    let size = scc.comp_of.iter().filter(|&&c| c == comp).count();
                    writeln!(out, "  c{comp} [size={size}];")?;
                }
                for &(a, b) in &scc.condensation_edges {
                    writeln!(out, "  c{a} -> c{b};")?;
                }
            }
            writeln!(out, "}}")?;
        }
        other => bail!("unknown format {other:?}: expected dot or edgelist"),
    }
    Ok(())
}
