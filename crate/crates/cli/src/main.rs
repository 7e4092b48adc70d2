mod family;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand};
use compedge_core::graph_ideals::{
    clique_ideal, comp_cover_ideal, comp_edge_ideal, edge_ideal, primary_decomposition_ic, veronese,
};
use compedge_core::resolution::{betti_table, betti_table_general};
use compedge_core::structure::{
    chordal_lq_order, chordal_lq_order_for, classify, probe_open_questions, reg_jc_power_forecast, reg_power_forecast,
    Regime,
};
use compedge_core::sweep::{run_suite, SweepOptions, SUITES};
use compedge_core::{Error, Field, Graph, MonomialIdeal, Result, VertexOrder};
use serde_json::json;

#[derive(Parser)]
#[command(name = "compedge", version, about = "Complementary edge ideals of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Coefficient field, `Q` or `Zp:<p>`. Defaults to Zp:2 for `verify` and Q otherwise.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
}

/// GRAPH is a family spec (path:n, cycle:n, complete:n, empty:n,
/// complete_multipartite:a,b,..., union:spec,spec,...) or a graph file.
#[derive(Subcommand)]
enum Command {
    /// Print an ideal attached to the graph.
    Ideal {
        graph: String,
        /// ic, jc, edge, cover, clique:<t> or veronese:<d>.
        #[arg(long, default_value = "ic", value_parser = parse_which)]
        which: Which,
    },
    /// Alexander dual of an ideal attached to the graph.
    Dual {
        graph: String,
        #[arg(long, default_value = "ic", value_parser = parse_which)]
        which: Which,
    },
    /// Minimal primary decomposition of I_c(G).
    Decompose { graph: String },
    /// Graded Betti table of a power of an ideal attached to the graph.
    Betti {
        graph: String,
        #[arg(long, default_value = "ic", value_parser = parse_which)]
        which: Which,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        power: u32,
    },
    /// Cohen-Macaulay type classification of I_c(G).
    Classify { graph: String },
    /// Regularity and depth of powers against the forecasts.
    RegTable {
        graph: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
    },
    /// Linear-quotients order of J_c(G) for a chordal graph.
    LqOrder {
        graph: String,
        /// Perfect elimination order as a comma-separated vertex list.
        #[arg(long)]
        peo: Option<String>,
    },
    /// Run a named verification sweep over all graphs on 2..=n vertices.
    Verify {
        #[arg(value_parser = PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(2..=8))]
        n: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also write one CSV row per scanned graph to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Depth and regularity data on questions the theory leaves open.
    Probe {
        graph: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
    },
}

#[derive(Clone, Copy)]
enum Which {
    Ic,
    Jc,
    Edge,
    Cover,
    Clique(usize),
    Veronese(usize),
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_which(s: &str) -> std::result::Result<Which, String> {
    let arg = |rest: &str| rest.parse::<usize>().map_err(|_| format!("bad number in {s:?}"));
    match s {
        "ic" => Ok(Which::Ic),
        "jc" => Ok(Which::Jc),
        "edge" => Ok(Which::Edge),
        "cover" => Ok(Which::Cover),
        _ => match s.split_once(':') {
            Some(("clique", t)) => Ok(Which::Clique(arg(t)?)),
            Some(("veronese", d)) => Ok(Which::Veronese(arg(d)?)),
            _ => Err(format!("unknown ideal {s:?}; use ic, jc, edge, cover, clique:<t> or veronese:<d>")),
        },
    }
}

fn build_ideal(g: &Graph, which: Which) -> Result<MonomialIdeal> {
    match which {
        Which::Ic => Ok(comp_edge_ideal(g)),
        Which::Jc => comp_cover_ideal(g),
        Which::Edge => Ok(edge_ideal(g)),
        Which::Cover => edge_ideal(g).alexander_dual(),
        Which::Clique(t) => clique_ideal(g, t),
        Which::Veronese(d) => veronese(g.vertex_count(), d),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    format!("n = {}, edges {}", g.vertex_count(), if edges.is_empty() { "none".into() } else { edges.join(" ") })
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

/// Runs the command; `Ok(false)` means a check found a counterexample.
fn run(cli: Cli) -> Result<bool> {
    let json_out = cli.json;
    let field = cli.field;
    let field_or_q = field.unwrap_or(Field::Rationals);

    match cli.command {
        Command::Ideal { graph, which } => {
            let ideal = build_ideal(&family::resolve(&graph)?, which)?;
            if json_out {
                print_json(&ideal.to_json());
            } else {
                println!("{ideal}");
            }
        }
        Command::Dual { graph, which } => {
            let dual = build_ideal(&family::resolve(&graph)?, which)?.alexander_dual()?;
            if json_out {
                print_json(&dual.to_json());
            } else {
                println!("{dual}");
            }
        }
        Command::Decompose { graph } => {
            let d = primary_decomposition_ic(&family::resolve(&graph)?)?;
            if json_out {
                print_json(&json!({
                    "primes": d.to_json().primes,
                    "unmixed": d.is_unmixed(),
                    "min_height": d.min_height(),
                }));
            } else {
                for p in d.components() {
                    let vars: Vec<String> = p.vars().iter().map(|v| format!("x{v}")).collect();
                    println!("({})", vars.join(", "));
                }
                println!("unmixed: {}", yes(d.is_unmixed()));
            }
        }
        Command::Betti { graph, which, power } => {
            let ideal = build_ideal(&family::resolve(&graph)?, which)?.power(power)?;
            let t = betti_table_general(&ideal, field_or_q)?;
            if json_out {
                print_json(&t.to_json());
            } else {
                print!("{t}");
            }
        }
        Command::Classify { graph } => {
            let r = classify(&family::resolve(&graph)?, field_or_q)?;
            if json_out {
                print_json(&r);
            } else {
                println!("graph: {}", describe(&family::resolve(&graph)?));
                println!("dim S/I_c(G): {}", r.dim);
                let v = r.verdicts;
                let h = r.homological;
                let opt = |o: Option<bool>| o.map_or("-".to_string(), |b| yes(b).to_string());
                let verdicts = [
                    ("sequentially_cm", v.sequentially_cm, opt(h.sequentially_cm)),
                    ("cohen_macaulay", v.cohen_macaulay, opt(h.cohen_macaulay)),
                    ("gorenstein", v.gorenstein, opt(h.gorenstein)),
                    ("nearly_gorenstein", v.nearly_gorenstein, "-".to_string()),
                    ("unmixed", v.unmixed, opt(h.unmixed)),
                    ("matroidal_ic", v.matroidal_ic, "-".to_string()),
                    ("matroidal_edge", v.matroidal_edge, "-".to_string()),
                ];
                let rows: Vec<Vec<String>> = verdicts
                    .into_iter()
                    .map(|(name, verdict, homological)| {
                        let witness = r.witnesses.get(name).cloned().unwrap_or_default();
                        vec![name.to_string(), yes(verdict).to_string(), homological, witness]
                    })
                    .collect();
                print!("{}", table(&["verdict", "value", "homological", "witness"], &rows));
                println!("consistent: {}", yes(r.consistent));
            }
            return Ok(r.consistent);
        }
        Command::RegTable { graph, kmax } => {
            let g = family::resolve(&graph)?;
            let ic = comp_edge_ideal(&g);
            let jc = if !g.has_isolated_vertex() && g.edge_count() >= 2 { Some(comp_cover_ideal(&g)?) } else { None };
            let mut ok = true;
            let mut rows = Vec::new();
            let mut values = Vec::new();
            for k in 1..=kmax {
                let t = betti_table(&ic.power(k)?, field_or_q)?;
                let f = reg_power_forecast(&g, k)?;
                ok &= t.regularity() == f.predicted_reg;
                let (reg_jc, forecast_jc) = match &jc {
                    Some(jc) => {
                        let r = betti_table(&jc.power(k)?, field_or_q)?.regularity();
                        let f = reg_jc_power_forecast(&g, k, false)?;
                        ok &= r == f;
                        (Some(r), Some(f))
                    }
                    None => (None, None),
                };
                let regime = match f.regime {
                    Regime::BelowThreshold => "below-threshold",
                    Regime::AtOrAboveThreshold => "at-or-above-threshold",
                };
                let cell = |x: Option<i64>| x.map_or("-".to_string(), |x| x.to_string());
                rows.push(vec![
                    k.to_string(),
                    t.regularity().to_string(),
                    f.predicted_reg.to_string(),
                    regime.to_string(),
                    t.depth_quotient().to_string(),
                    cell(reg_jc),
                    cell(forecast_jc),
                ]);
                values.push(json!({
                    "k": k,
                    "reg_ic": t.regularity(),
                    "forecast_ic": f.predicted_reg,
                    "regime": regime,
                    "rstab": f.rstab,
                    "depth_ic": t.depth_quotient(),
                    "reg_jc": reg_jc,
                    "forecast_jc": forecast_jc,
                }));
            }
            if json_out {
                print_json(&json!({ "field": field_or_q.to_string(), "rows": values, "all_match": ok }));
            } else {
                let header =
                    ["k", "reg I_c^k", "forecast", "regime", "depth S/I_c^k", "reg J_c^k", "forecast J_c^k"];
                print!("{}", table(&header, &rows));
            }
            return Ok(ok);
        }
        Command::LqOrder { graph, peo } => {
            let g = family::resolve(&graph)?;
            let o = match peo {
                Some(list) => {
                    let order = list
                        .split(',')
                        .map(|v| v.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad vertex {v:?}"))))
                        .collect::<Result<Vec<_>>>()?;
                    chordal_lq_order_for(&g, &VertexOrder::new(order)?)?
                }
                None => chordal_lq_order(&g)?,
            };
            if json_out {
                let gens: Vec<String> = o.order.iter().map(|m| m.to_string().replace(' ', "")).collect();
                print_json(&json!({
                    "elimination_order": o.elimination_order.as_slice(),
                    "order": gens,
                    "verified": o.verified,
                }));
            } else {
                let peo: Vec<String> = o.elimination_order.as_slice().iter().map(usize::to_string).collect();
                println!("elimination order: {}", peo.join(" "));
                for m in &o.order {
                    println!("{}", m.to_string().replace(' ', ""));
                }
                println!("verified: {}", yes(o.verified));
            }
            return Ok(o.verified);
        }
        Command::Verify { suite, n, kmax, jobs, csv } => {
            let opts = SweepOptions { n_min: 2, n_max: n as usize, kmax, field: field.unwrap_or(Field::Prime(2)), jobs };
            let report = run_suite(&suite, &opts)?;
            if let Some(path) = csv {
                std::fs::write(&path, report.to_csv())
                    .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
            }
            if json_out {
                print_json(&report);
            } else {
                println!("{}", report.summary());
                for m in &report.mismatches {
                    let k = m.k.map_or(String::new(), |k| format!(" k={k}"));
                    println!("counterexample: n={} bitmask={}{k} field={}: {}", m.n, m.bitmask, m.field, m.detail);
                }
                for note in &report.notes {
                    println!("note: {note}");
                }
            }
            return Ok(report.passed());
        }
        Command::Probe { graph, kmax } => {
            let r = probe_open_questions(&family::resolve(&graph)?, kmax, field_or_q)?;
            if json_out {
                print_json(&r);
            } else {
                let opt = |o: Option<bool>| o.map_or("-".to_string(), |b| yes(b).to_string());
                let rows: Vec<Vec<String>> = r
                    .rows
                    .iter()
                    .map(|row| {
                        vec![
                            row.k.to_string(),
                            opt(row.jc_power_componentwise_linear),
                            row.depth_jc_power.to_string(),
                            row.depth_jc_symbolic.to_string(),
                            row.reg_ic_power.to_string(),
                            row.reg_ic_symbolic.to_string(),
                        ]
                    })
                    .collect();
                let header = ["k", "J_c^k cw-linear", "depth S/J_c^k", "depth S/J_c^(k)", "reg I_c^k", "reg I_c^(k)"];
                print!("{}", table(&header, &rows));
                for o in &r.observations {
                    println!("{o}");
                }
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_guard() { 3 } else { 2 })
        }
    }
}
