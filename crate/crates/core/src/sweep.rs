//! Exhaustive verification sweeps over labeled graphs. Each suite compares a
//! closed-form statement about `I_c(G)` or `J_c(G)` with an independent
//! computation and collects counterexamples instead of stopping.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, Graph};
use crate::graph_ideals::{
    clique_ideal, closed_form_primes, comp_cover_ideal, comp_cover_ideal_by_intersection, comp_edge_ideal, dim_ic,
    edge_ideal, primary_decomposition_ic,
};
use crate::monomial::MonomialIdeal;
use crate::resolution::{
    betti_table, find_linear_quotients_order, has_linear_resolution, is_componentwise_linear,
    search_linear_quotients_order, verify_linear_quotients_order, Field, MAX_ORDER_SEARCH,
};
use crate::structure::{
    chordal_lq_order, gorenstein_list, is_matroidal, nearly_gorenstein_list,
    reg_jc_power_forecast, reg_power_forecast,
};

/// Suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "decomposition",
    "duality",
    "chordal",
    "cohen-macaulay",
    "gorenstein",
    "matroidal",
    "power-regularity",
    "linear-powers",
    "cover-regularity",
    "field-independence",
];

/// Node budget for the linear-quotients search on powers too large for the
/// exhaustive search.
pub const POWER_ORDER_BUDGET: usize = 200_000;

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub kmax: u32,
    pub field: Field,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { n_min: 2, n_max: 5, kmax: 2, field: Field::Prime(2), jobs: 0 }
    }
}

/// Everything needed to reproduce a failure.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub bitmask: u64,
    pub k: Option<u32>,
    pub field: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub n_min: usize,
    pub n_max: usize,
    pub kmax: u32,
    pub field: String,
    pub scanned: usize,
    pub skipped: usize,
    pub mismatches: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} graphs scanned (n = {}..{}), {} skipped, {} mismatches",
            self.suite,
            self.scanned,
            self.n_min,
            self.n_max,
            self.skipped,
            self.mismatches.len()
        )
    }

    /// One row per scanned graph.
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Result of one graph's pipeline.
#[derive(Default)]
struct Outcome {
    row: Option<Vec<String>>,
    mismatches: Vec<(Option<u32>, String)>,
    note: Option<String>,
}

impl Outcome {
    fn skip() -> Self {
        Outcome::default()
    }

    fn row(row: Vec<String>) -> Self {
        Outcome { row: Some(row), ..Default::default() }
    }

    fn check(&mut self, ok: bool, k: Option<u32>, detail: impl FnOnce() -> String) {
        if !ok {
            self.mismatches.push((k, detail()));
        }
    }
}

enum Population {
    /// Every graph with at least one edge.
    WithEdges,
    /// Graphs without isolated vertices and with at least `min_edges` edges.
    NoIsolated { min_edges: usize },
}

fn graphs(opts: &SweepOptions, population: Population, n_floor: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in opts.n_min.max(n_floor)..=opts.n_max {
        match population {
            Population::WithEdges => out.extend(enumerate_graphs(n, false)?.filter(|g| g.edge_count() > 0)),
            Population::NoIsolated { min_edges } => {
                out.extend(enumerate_graphs(n, true)?.filter(|g| g.edge_count() >= min_edges))
            }
        }
    }
    Ok(out)
}

fn yn(b: bool) -> String {
    if b { "1" } else { "0" }.to_string()
}

fn seq(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(";")
}

/// Runs the named suite.
pub fn run_suite(name: &str, opts: &SweepOptions) -> Result<SweepReport> {
    if opts.n_max < opts.n_min {
        return Err(Error::invalid("n_max must be at least n_min"));
    }
    if opts.kmax == 0 {
        return Err(Error::invalid("kmax must be at least 1"));
    }
    let field = opts.field;
    let kmax = opts.kmax;
    let (population, floor, header): (Population, usize, &[&str]) = match name {
        "decomposition" => (Population::WithEdges, 2, &["n", "bitmask", "primes", "match"]),
        "duality" => (Population::NoIsolated { min_edges: 1 }, 3, &["n", "bitmask", "generators", "match"]),
        "chordal" => (Population::NoIsolated { min_edges: 1 }, 3, &["n", "bitmask", "chordal", "componentwise_linear", "lq_order"]),
        "cohen-macaulay" => (Population::NoIsolated { min_edges: 1 }, 2, &["n", "bitmask", "complete_or_forest", "depth", "dim"]),
        "gorenstein" => (Population::NoIsolated { min_edges: 1 }, 2, &["n", "bitmask", "gorenstein_oracle", "gorenstein_list", "nearly_gorenstein_list"]),
        "matroidal" => (Population::NoIsolated { min_edges: 1 }, 2, &["n", "bitmask", "matroidal_edge", "matroidal_ic", "complete_multipartite"]),
        "power-regularity" => (Population::WithEdges, 2, &["n", "bitmask", "c", "reg", "forecast", "depth"]),
        "linear-powers" => (Population::WithEdges, 2, &["n", "bitmask", "c", "linear_resolution", "lq_order"]),
        "cover-regularity" => (Population::NoIsolated { min_edges: 2 }, 3, &["n", "bitmask", "girth", "reg_power", "reg_symbolic", "forecast"]),
        "field-independence" => (Population::WithEdges, 2, &["n", "bitmask", "identical"]),
        _ => return Err(Error::invalid(format!("unknown suite {name:?}; expected one of {}", SUITES.join(", ")))),
    };
    let list = graphs(opts, population, floor)?;
    let job = |g: &Graph| -> Result<Outcome> {
        match name {
            "decomposition" => check_decomposition(g),
            "duality" => check_duality(g),
            "chordal" => check_chordal(g, field),
            "cohen-macaulay" => check_cohen_macaulay(g, field),
            "gorenstein" => check_gorenstein(g, field),
            "matroidal" => check_matroidal(g),
            "power-regularity" => check_power_regularity(g, kmax, field),
            "linear-powers" => check_linear_powers(g, kmax, field),
            "cover-regularity" => check_cover_powers(g, kmax, field),
            _ => check_field_independence(g, kmax),
        }
    };
    let run = || -> Vec<Result<Outcome>> {
        list.par_iter()
            .map(|g| match job(g) {
                Err(e) if e.is_guard() => Ok(Outcome { note: Some(format!("guard on {g:?}: {e}")), ..Outcome::skip() }),
                other => other,
            })
            .collect()
    };
    let outcomes = if opts.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::invalid(format!("cannot start worker pool: {e}")))?
            .install(run)
    } else {
        run()
    };

    let mut report = SweepReport {
        suite: name.to_string(),
        n_min: opts.n_min.max(floor),
        n_max: opts.n_max,
        kmax,
        field: match name {
            "decomposition" | "duality" | "matroidal" => "-".to_string(),
            "field-independence" => "Q, Zp:2, Zp:3".to_string(),
            _ => field.to_string(),
        },
        scanned: 0,
        skipped: 0,
        mismatches: Vec::new(),
        notes: Vec::new(),
        header: header.iter().map(|s| s.to_string()).collect(),
        rows: Vec::new(),
    };
    for (g, outcome) in list.iter().zip(outcomes) {
        let outcome = outcome?;
        if let Some(note) = outcome.note {
            report.notes.push(note);
        }
        match outcome.row {
            Some(mut row) => {
                report.scanned += 1;
                row.splice(0..0, [g.vertex_count().to_string(), g.to_bitmask().to_string()]);
                report.rows.push(row);
            }
            None => report.skipped += 1,
        }
        for (k, detail) in outcome.mismatches {
            report.mismatches.push(Counterexample {
                n: g.vertex_count(),
                bitmask: g.to_bitmask(),
                k,
                field: report.field.clone(),
                detail,
            });
        }
    }
    Ok(report)
}

fn sorted_supports(primes: &[crate::monomial::PrimeSupport]) -> Vec<Vec<usize>> {
    let mut s: Vec<Vec<usize>> = primes.iter().map(|p| p.vars().to_vec()).collect();
    s.sort();
    s
}

fn check_decomposition(g: &Graph) -> Result<Outcome> {
    let ic = comp_edge_ideal(g);
    let oracle = if ic.is_unit() { Vec::new() } else { sorted_supports(&ic.squarefree_minimal_primes()?) };
    let claimed = if g.has_isolated_vertex() {
        match primary_decomposition_ic(g) {
            Ok(d) => d.sorted_supports(),
            Err(e) => {
                let mut out = Outcome::row(vec![oracle.len().to_string(), yn(false)]);
                out.check(false, None, || format!("decomposition rejected: {e}"));
                return Ok(out);
            }
        }
    } else {
        sorted_supports(&closed_form_primes(g))
    };
    let ok = claimed == oracle;
    let mut out = Outcome::row(vec![claimed.len().to_string(), yn(ok)]);
    out.check(ok, None, || format!("closed form {claimed:?}, minimal primes {oracle:?}"));
    Ok(out)
}

fn check_duality(g: &Graph) -> Result<Outcome> {
    let dual = comp_edge_ideal(g).alexander_dual()?;
    let closed = edge_ideal(&g.complement()).sum(&clique_ideal(g, 3)?)?;
    let by_intersection = comp_cover_ideal_by_intersection(g)?;
    let ok = dual == closed && dual == by_intersection;
    let mut out = Outcome::row(vec![dual.len().to_string(), yn(ok)]);
    out.check(ok, None, || {
        format!("dual {}, I(G^c)+K_3(G) {}, intersection {}", dual.display_inline(), closed.display_inline(), by_intersection.display_inline())
    });
    Ok(out)
}

fn check_chordal(g: &Graph, field: Field) -> Result<Outcome> {
    let jc = comp_cover_ideal(g)?;
    let chordal = g.is_chordal();
    let cw = is_componentwise_linear(&jc, field)?;
    let mut out = Outcome::default();
    out.check(chordal == cw, None, || format!("chordal = {chordal}, componentwise linear = {cw}"));
    let lq = if chordal {
        let o = chordal_lq_order(g)?;
        out.check(o.verified, None, || {
            format!("order from elimination order {:?} fails the verifier", o.elimination_order.as_slice())
        });
        yn(o.verified)
    } else if jc.len() <= MAX_ORDER_SEARCH {
        let found = find_linear_quotients_order(&jc)?;
        out.check(found.is_none(), None, || "a linear-quotients order exists for a non-chordal graph".into());
        yn(found.is_some())
    } else {
        "-".into()
    };
    out.row = Some(vec![yn(chordal), yn(cw), lq]);
    Ok(out)
}

fn check_cohen_macaulay(g: &Graph, field: Field) -> Result<Outcome> {
    let ic = comp_edge_ideal(g);
    if ic.is_unit() {
        return Ok(Outcome::skip());
    }
    let dim = dim_ic(g)?;
    let depth = betti_table(&ic, field)?.depth_quotient();
    let claimed = g.is_complete() || g.is_forest();
    let mut out = Outcome::row(vec![yn(claimed), depth.to_string(), dim.to_string()]);
    out.check(claimed == (depth == dim), None, || format!("complete or forest = {claimed}, depth {depth}, dim {dim}"));
    Ok(out)
}

fn check_gorenstein(g: &Graph, field: Field) -> Result<Outcome> {
    let ic = comp_edge_ideal(g);
    let on_list = gorenstein_list().iter().any(|(_, h)| g.is_isomorphic(h));
    let nearly = nearly_gorenstein_list().iter().any(|(_, h)| g.is_isomorphic(h));
    // I_c(K_2) = (1): S/I_c is the zero ring, Gorenstein by convention
    let oracle = if ic.is_unit() {
        true
    } else {
        let table = betti_table(&ic, field)?;
        table.depth_quotient() == dim_ic(g)? && table.total(table.proj_dim()) == 1
    };
    let mut out = Outcome::row(vec![yn(oracle), yn(on_list), yn(nearly)]);
    out.check(oracle == on_list, None, || format!("Gorenstein oracle {oracle}, list {on_list}"));
    out.check(!oracle || nearly, None, || "Gorenstein but not on the nearly Gorenstein list".into());
    Ok(out)
}

fn check_matroidal(g: &Graph) -> Result<Outcome> {
    let edge = is_matroidal(&edge_ideal(g));
    let ic = is_matroidal(&comp_edge_ideal(g));
    let multipartite = g.is_complete_multipartite();
    let mut out = Outcome::row(vec![yn(edge), yn(ic), yn(multipartite)]);
    out.check(edge == ic && ic == multipartite, None, || {
        format!("matroidal I(G) {edge}, matroidal I_c(G) {ic}, complete multipartite {multipartite}")
    });
    Ok(out)
}

fn check_power_regularity(g: &Graph, kmax: u32, field: Field) -> Result<Outcome> {
    let ic = comp_edge_ideal(g);
    if ic.is_unit() {
        return Ok(Outcome::skip());
    }
    let mut out = Outcome::default();
    let (mut regs, mut forecasts, mut depths) = (Vec::new(), Vec::new(), Vec::new());
    for k in 1..=kmax {
        let table = betti_table(&ic.power(k)?, field)?;
        let reg = table.regularity();
        let forecast = reg_power_forecast(g, k)?.predicted_reg;
        out.check(reg == forecast, Some(k), || format!("reg {reg}, forecast {forecast}"));
        regs.push(reg);
        forecasts.push(forecast);
        depths.push(table.depth_quotient());
    }
    out.check(depths.windows(2).all(|w| w[0] >= w[1]), None, || format!("depth sequence {depths:?} increases"));
    out.row = Some(vec![g.non_isolated_component_count().to_string(), seq(&regs), seq(&forecasts), seq(&depths)]);
    Ok(out)
}

fn check_linear_powers(g: &Graph, kmax: u32, field: Field) -> Result<Outcome> {
    let ic = comp_edge_ideal(g);
    if ic.is_unit() {
        return Ok(Outcome::skip());
    }
    let c = g.non_isolated_component_count();
    let mut out = Outcome::default();
    let mut linear = Vec::new();
    let mut orders = Vec::new();
    for k in 1..=kmax {
        let power = ic.power(k)?;
        let lin = has_linear_resolution(&power, field)?;
        out.check(lin == (c == 1), Some(k), || format!("linear resolution {lin} with c(G) = {c}"));
        linear.push(lin as i64);
        if c == 1 && k <= 2 {
            let found = if power.len() <= MAX_ORDER_SEARCH {
                find_linear_quotients_order(&power)?
            } else {
                search_linear_quotients_order(&power, POWER_ORDER_BUDGET)?
            };
            let ok = match &found {
                Some(order) => verify_linear_quotients_order(&power, order)?,
                None => false,
            };
            out.check(ok, Some(k), || "no verified linear-quotients order".into());
            orders.push(ok as i64);
        }
    }
    let lq = if orders.is_empty() { "-".to_string() } else { seq(&orders) };
    out.row = Some(vec![c.to_string(), seq(&linear), lq]);
    Ok(out)
}

fn check_cover_powers(g: &Graph, kmax: u32, field: Field) -> Result<Outcome> {
    let jc = comp_cover_ideal(g)?;
    let mut out = Outcome::default();
    let (mut ordinary, mut symbolic, mut forecasts) = (Vec::new(), Vec::new(), Vec::new());
    for k in 1..=kmax {
        let forecast = reg_jc_power_forecast(g, k, false)?;
        let r = betti_table(&jc.power(k)?, field)?.regularity();
        let s = betti_table(&jc.symbolic_power(k)?, field)?.regularity();
        out.check(r == forecast && s == forecast, Some(k), || {
            format!("reg J_c^k {r}, reg J_c^(k) {s}, forecast {forecast}")
        });
        ordinary.push(r);
        symbolic.push(s);
        forecasts.push(forecast);
    }
    let girth = g.girth().map_or("inf".to_string(), |x| x.to_string());
    out.row = Some(vec![girth, seq(&ordinary), seq(&symbolic), seq(&forecasts)]);
    Ok(out)
}

fn check_field_independence(g: &Graph, kmax: u32) -> Result<Outcome> {
    let ic = comp_edge_ideal(g);
    if ic.is_unit() {
        return Ok(Outcome::skip());
    }
    let mut out = Outcome::default();
    let mut all = true;
    for k in 1..=kmax {
        let power: MonomialIdeal = ic.power(k)?;
        let q = betti_table(&power, Field::Rationals)?;
        for p in [2, 3] {
            let t = betti_table(&power, Field::Prime(p))?;
            let same = t == q;
            all &= same;
            out.check(same, Some(k), || {
                let mut s = String::new();
                let _ = write!(s, "tables over Q and Zp:{p} differ: {:?} vs {:?}", q.to_json(), t.to_json());
                s
            });
        }
    }
    out.row = Some(vec![yn(all)]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(n_max: usize, kmax: u32) -> SweepOptions {
        SweepOptions { n_min: 2, n_max, kmax, field: Field::Prime(2), jobs: 1 }
    }

    #[test]
    fn small_suites_pass() {
        for suite in SUITES {
            let r = run_suite(suite, &opts(4, 2)).unwrap();
            assert!(r.passed(), "{}: {:?}", r.summary(), r.mismatches);
            assert!(r.scanned > 0, "{suite}");
            assert_eq!(r.rows.len(), r.scanned);
        }
    }

    #[test]
    fn counts_and_csv() {
        let r = run_suite("decomposition", &SweepOptions { n_min: 4, ..opts(4, 1) }).unwrap();
        // all 64 graphs on four vertices except the edgeless one
        assert_eq!(r.scanned, 63);
        assert!(r.summary().contains("63 graphs scanned"));
        let csv = r.to_csv();
        assert!(csv.starts_with("n,bitmask,primes,match\n"));
        assert_eq!(csv.lines().count(), 64);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let a = run_suite("power-regularity", &SweepOptions { jobs: 1, ..opts(4, 2) }).unwrap();
        let b = run_suite("power-regularity", &SweepOptions { jobs: 3, ..opts(4, 2) }).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn rejects_bad_options() {
        assert!(run_suite("no-such-suite", &opts(4, 1)).is_err());
        assert!(run_suite("decomposition", &opts(4, 0)).is_err());
        assert!(run_suite("decomposition", &SweepOptions { n_min: 5, ..opts(4, 1) }).is_err());
    }
}
