//! Structural predicates for `I_c(G)` and `J_c(G)`: matroidal exchange,
//! the Cohen–Macaulay family of classifications, the chordal
//! linear-quotients order, regularity forecasts for powers and the Betti
//! splitting ladder of `I_c(G)^k`.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrder};
use crate::graph_ideals::{clique_ideal, comp_cover_ideal, comp_edge_ideal, dim_ic, edge_ideal};
use crate::monomial::{gen_set, Monomial, MonomialIdeal};
use crate::resolution::{
    betti_table, betti_table_general, is_componentwise_linear, verify_linear_quotients_order, BettiTable, Field,
};

fn exchange(ideal: &MonomialIdeal, dual: bool) -> bool {
    let gens = gen_set(ideal);
    let n = ideal.ambient();
    for u in ideal.gens() {
        for v in ideal.gens() {
            for i in 1..=n {
                let (ui, vi) = (u.deg_var(i), v.deg_var(i));
                if (!dual && ui <= vi) || (dual && ui >= vi) {
                    continue;
                }
                let ok = (1..=n).any(|j| {
                    let (uj, vj) = (u.deg_var(j), v.deg_var(j));
                    let candidate = if dual {
                        (uj > vj).then(|| u.over_var(j).map(|w| w.times_var(i))).flatten()
                    } else {
                        (uj < vj).then(|| u.over_var(i).map(|w| w.times_var(j))).flatten()
                    };
                    candidate.is_some_and(|w| gens.contains(&w))
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// For `u, v ∈ 𝒢(I)` and `i` with `deg_i u > deg_i v` there is `j` with
/// `deg_j u < deg_j v` and `x_j (u / x_i) ∈ 𝒢(I)`.
pub fn satisfies_exchange(ideal: &MonomialIdeal) -> bool {
    exchange(ideal, false)
}

/// For `u, v ∈ 𝒢(I)` and `i` with `deg_i u < deg_i v` there is `j` with
/// `deg_j u > deg_j v` and `x_i (u / x_j) ∈ 𝒢(I)`.
pub fn satisfies_dual_exchange(ideal: &MonomialIdeal) -> bool {
    exchange(ideal, true)
}

/// Squarefree, equigenerated and satisfying the exchange property.
pub fn is_matroidal(ideal: &MonomialIdeal) -> bool {
    !ideal.is_zero() && ideal.is_squarefree() && ideal.generation_degree().is_some() && satisfies_exchange(ideal)
}

/// Whether `I` and `I_c(I)` agree on being matroidal.
pub fn matroidal_involution_check(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() || !ideal.is_squarefree() {
        return Err(Error::invalid("the involution check needs a nonzero squarefree ideal"));
    }
    Ok(is_matroidal(ideal) == is_matroidal(&ideal.complementary_ideal()?))
}

/// The graphs on which `I_c(G)` is Gorenstein, up to isomorphism.
pub fn gorenstein_list() -> Vec<(&'static str, Graph)> {
    let k2 = Graph::complete(2).expect("small");
    vec![
        ("K2", k2.clone()),
        ("K3", Graph::complete(3).expect("small")),
        ("2K2", Graph::disjoint_union(&[k2.clone(), k2]).expect("small")),
        ("P3", Graph::path(3).expect("small")),
    ]
}

/// The graphs on which `I_c(G)` is nearly Gorenstein, up to isomorphism.
pub fn nearly_gorenstein_list() -> Vec<(&'static str, Graph)> {
    let mut list = gorenstein_list();
    list.push(("K4", Graph::complete(4).expect("small")));
    list.push(("P4", Graph::path(4).expect("small")));
    list
}

fn list_match(g: &Graph, list: &[(&'static str, Graph)]) -> Option<&'static str> {
    list.iter().find(|(_, h)| g.is_isomorphic(h)).map(|(name, _)| *name)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub sequentially_cm: bool,
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub unmixed: bool,
    pub matroidal_ic: bool,
    pub matroidal_edge: bool,
}

/// Independent recomputation of the verdicts: homological for sCM, CM and
/// Gorenstein, minimal primes for unmixedness. `None` where `I_c(G)` is the
/// unit ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomologicalVerdicts {
    pub sequentially_cm: Option<bool>,
    pub cohen_macaulay: Option<bool>,
    pub gorenstein: Option<bool>,
    pub unmixed: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub bitmask: u64,
    pub edges: Vec<(usize, usize)>,
    pub verdicts: Verdicts,
    pub homological: HomologicalVerdicts,
    pub dim: i64,
    pub witnesses: BTreeMap<&'static str, String>,
    /// Graph-side and homological verdicts agree and the implication chain holds.
    pub consistent: bool,
}

/// Classifies `I_c(G)` for a graph without isolated vertices and with at
/// least one edge. Verdicts come from graph criteria; where a homological
/// test exists it is run over `field` and compared.
pub fn classify(g: &Graph, field: Field) -> Result<ClassificationReport> {
    if g.has_isolated_vertex() || g.edge_count() == 0 {
        return Err(Error::invalid("classify needs a graph with edges and no isolated vertices"));
    }
    let ic = comp_edge_ideal(g);
    let dim = dim_ic(g)?;
    let chordal = g.is_chordal();
    let complete = g.is_complete();
    let forest = g.is_forest();
    let triangle_free = g.triangles().is_empty();
    let gor_match = list_match(g, &gorenstein_list());
    let ng_match = list_match(g, &nearly_gorenstein_list());
    let multipartite = g.is_complete_multipartite();
    let verdicts = Verdicts {
        sequentially_cm: chordal,
        cohen_macaulay: complete || forest,
        gorenstein: gor_match.is_some(),
        nearly_gorenstein: ng_match.is_some(),
        unmixed: complete || triangle_free,
        matroidal_ic: is_matroidal(&ic),
        matroidal_edge: is_matroidal(&edge_ideal(g)),
    };

    let mut witnesses = BTreeMap::new();
    witnesses.insert(
        "sequentially_cm",
        match g.perfect_elimination_order() {
            Some(o) => format!("chordal, perfect elimination order {:?}", o.as_slice()),
            None => "not chordal".to_string(),
        },
    );
    witnesses.insert(
        "cohen_macaulay",
        if complete {
            "complete graph".into()
        } else if forest {
            "forest".into()
        } else {
            "neither complete nor a forest".into()
        },
    );
    witnesses.insert("gorenstein", gor_match.map_or("not in {K2, K3, 2K2, P3}".into(), |m| format!("isomorphic to {m}")));
    witnesses.insert(
        "nearly_gorenstein",
        format!(
            "classification-only: {}",
            ng_match.map_or("not in {K2, K3, 2K2, K4, P3, P4}".into(), |m| format!("isomorphic to {m}"))
        ),
    );
    witnesses.insert(
        "unmixed",
        if complete { "complete graph".into() } else if triangle_free { "K3-free".into() } else { "has a triangle".into() },
    );
    witnesses.insert(
        "matroidal",
        match g.complete_multipartite_parts() {
            Some(parts) if multipartite => format!("complete multipartite with parts {parts:?}"),
            _ => "not complete multipartite".into(),
        },
    );

    let homological = if ic.is_unit() {
        witnesses.insert("homological", "I_c(G) = (1); homological checks not applicable".into());
        HomologicalVerdicts { sequentially_cm: None, cohen_macaulay: None, gorenstein: None, unmixed: None }
    } else {
        let table = betti_table(&ic, field)?;
        let cm = table.depth_quotient() == dim;
        let gorenstein = cm && table.total(table.proj_dim()) == 1;
        let jc = comp_cover_ideal(g)?;
        let scm = is_componentwise_linear(&jc, field)?;
        let heights: HashSet<usize> = ic.squarefree_minimal_primes()?.iter().map(|p| p.height()).collect();
        HomologicalVerdicts {
            sequentially_cm: Some(scm),
            cohen_macaulay: Some(cm),
            gorenstein: Some(gorenstein),
            unmixed: Some(heights.len() == 1),
        }
    };

    let agrees = |graph_side: bool, hom: Option<bool>| hom.map_or(true, |h| h == graph_side);
    let chain = (!verdicts.gorenstein || verdicts.nearly_gorenstein)
        && (!verdicts.nearly_gorenstein || verdicts.cohen_macaulay)
        && (!verdicts.cohen_macaulay || verdicts.sequentially_cm);
    let consistent = chain
        && verdicts.matroidal_ic == verdicts.matroidal_edge
        && verdicts.matroidal_ic == multipartite
        && agrees(verdicts.sequentially_cm, homological.sequentially_cm)
        && agrees(verdicts.cohen_macaulay, homological.cohen_macaulay)
        && agrees(verdicts.gorenstein, homological.gorenstein)
        && agrees(verdicts.unmixed, homological.unmixed);

    Ok(ClassificationReport {
        n: g.vertex_count(),
        bitmask: g.to_bitmask(),
        edges: g.edges(),
        verdicts,
        homological,
        dim,
        witnesses,
        consistent,
    })
}

/// A candidate linear-quotients order of `J_c(G)` and whether it verified.
#[derive(Debug, Clone)]
pub struct LqOrder {
    pub elimination_order: VertexOrder,
    pub order: Vec<Monomial>,
    pub verified: bool,
}

/// Orders the generators of `J_c(G) = I(G^c) + K_3(G)` for a chordal `G`:
/// with the vertices ranked by a perfect elimination order `v_1, …, v_n`,
/// the generators of `I(G^c)` come first in lexicographic order for
/// `x_{v_1} > … > x_{v_n}`, then those of `K_3(G)` in the same order.
pub fn chordal_lq_order(g: &Graph) -> Result<LqOrder> {
    let peo = g.perfect_elimination_order().ok_or_else(|| Error::invalid("the graph is not chordal"))?;
    chordal_lq_order_for(g, &peo)
}

/// [`chordal_lq_order`] for a given perfect elimination order.
pub fn chordal_lq_order_for(g: &Graph, peo: &VertexOrder) -> Result<LqOrder> {
    if g.has_isolated_vertex() || g.edge_count() == 0 {
        return Err(Error::invalid("the chordal order needs a graph with edges and no isolated vertices"));
    }
    if !g.is_perfect_elimination_order(peo) {
        return Err(Error::invalid(format!("{:?} is not a perfect elimination order", peo.as_slice())));
    }
    let rank = peo.positions();
    // equal-degree squarefree monomials: lex-larger means a smaller sorted rank list
    let lex = |ideal: MonomialIdeal| -> Vec<Monomial> {
        let mut gens = ideal.gens().to_vec();
        gens.sort_by_cached_key(|m| {
            let mut r: Vec<usize> = m.support().iter().map(|&v| rank[v]).collect();
            r.sort_unstable();
            r
        });
        gens
    };
    let mut order = lex(edge_ideal(&g.complement()));
    order.extend(lex(clique_ideal(g, 3)?));
    let jc = comp_cover_ideal(g)?;
    let verified = verify_linear_quotients_order(&jc, &order)?;
    Ok(LqOrder { elimination_order: peo.clone(), order, verified })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    BelowThreshold,
    AtOrAboveThreshold,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularityForecast {
    pub k: u32,
    pub predicted_reg: i64,
    pub regime: Regime,
    /// The exponent from which `reg I_c(G)^k` is linear in `k`: `max{1, c(G) − 1}`.
    pub rstab: u32,
}

/// `reg I_c(G)^k = (n−1)k` for `1 ≤ k ≤ c−2` and `(n−2)k + c − 1` for
/// `k ≥ c − 1`, where `c` counts components that are not isolated vertices.
pub fn reg_power_forecast(g: &Graph, k: u32) -> Result<RegularityForecast> {
    if g.edge_count() == 0 {
        return Err(Error::invalid("the forecast needs at least one edge"));
    }
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let n = g.vertex_count() as i64;
    let c = g.non_isolated_component_count() as i64;
    let kk = k as i64;
    let (predicted_reg, regime) = if kk <= c - 2 {
        ((n - 1) * kk, Regime::BelowThreshold)
    } else {
        ((n - 2) * kk + c - 1, Regime::AtOrAboveThreshold)
    };
    Ok(RegularityForecast { k, predicted_reg, regime, rstab: (c - 1).max(1) as u32 })
}

/// Regularity of `J_c(G)^k` (equally of `J_c(G)^(k)`) by girth: `3k` for
/// girth 3, `2k + 1` for girth 4, `2k` for forests; for girth at least 5 it
/// is 3 at `k = 1` and `2k` afterwards.
pub fn reg_jc_power_forecast(g: &Graph, k: u32, _symbolic: bool) -> Result<i64> {
    if g.has_isolated_vertex() || g.edge_count() < 2 {
        return Err(Error::invalid("the forecast needs at least two edges and no isolated vertices"));
    }
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let k = k as i64;
    Ok(match g.girth() {
        Some(3) => 3 * k,
        Some(4) => 2 * k + 1,
        None => 2 * k,
        Some(_) if k == 1 => 3,
        Some(_) => 2 * k,
    })
}

fn splitting_holds(whole: &BettiTable, t1: &BettiTable, t2: &BettiTable, meet: &BettiTable) -> bool {
    let mut slots: HashSet<(usize, u32)> = HashSet::new();
    for t in [whole, t1, t2] {
        slots.extend(t.entries().keys().copied());
    }
    slots.extend(meet.entries().keys().map(|&(i, j)| (i + 1, j)));
    slots.into_iter().all(|(i, j)| {
        let shifted = if i == 0 { 0 } else { meet.get(i - 1, j) };
        whole.get(i, j) == t1.get(i, j) + t2.get(i, j) + shifted
    })
}

/// `β_{i,j}(I) = β_{i,j}(I_1) + β_{i,j}(I_2) + β_{i−1,j}(I_1 ∩ I_2)` in every
/// slot. `𝒢(I)` must be the disjoint union of `𝒢(I_1)` and `𝒢(I_2)`.
pub fn betti_splitting_check(i: &MonomialIdeal, i1: &MonomialIdeal, i2: &MonomialIdeal, field: Field) -> Result<bool> {
    if !is_generator_partition(i, i1, i2) {
        return Err(Error::invalid("the generators of I are not the disjoint union of those of I1 and I2"));
    }
    let whole = betti_table_general(i, field)?;
    let t1 = betti_table_general(i1, field)?;
    let t2 = betti_table_general(i2, field)?;
    let meet = betti_table_general(&i1.intersect(i2)?, field)?;
    Ok(splitting_holds(&whole, &t1, &t2, &meet))
}

fn is_generator_partition(i: &MonomialIdeal, i1: &MonomialIdeal, i2: &MonomialIdeal) -> bool {
    let (s1, s2) = (gen_set(i1), gen_set(i2));
    i1.ambient() == i.ambient()
        && i2.ambient() == i.ambient()
        && s1.is_disjoint(&s2)
        && s1.len() + s2.len() == i.len()
        && i.gens().iter().all(|g| s1.contains(g) || s2.contains(g))
}

#[derive(Debug, Clone, Serialize)]
pub struct LadderStep {
    pub ell: u32,
    /// `J_{ℓ−1} ∩ y^{k−ℓ} x^ℓ I_1^{k−ℓ} I_2^ℓ` equals `y^{k−ℓ+1} I_2^{ℓ−1} x^ℓ I_1^{k−ℓ}`.
    pub intersection_matches: bool,
    pub generators_partition: bool,
    pub betti_splitting: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LadderReport {
    pub k: u32,
    /// Vertices carried by the `x` block (`G_1`) and the `y` block (`G_2`
    /// together with the isolated vertices).
    pub x_block: Vec<usize>,
    pub y_block: Vec<usize>,
    pub steps: Vec<LadderStep>,
    /// `J_k = I_c(G)^k`.
    pub top_matches: bool,
}

impl LadderReport {
    pub fn all_pass(&self) -> bool {
        self.top_matches
            && self.steps.iter().all(|s| s.intersection_matches && s.generators_partition && s.betti_splitting)
    }
}

/// Splits `G = G_1 ⊔ G_2` with `G_2` the component of the highest-numbered
/// non-isolated vertex (isolated vertices join it) and checks the ladder
/// `J_ℓ = Σ_{h ≤ ℓ} y^{k−h} x^h I_1^{k−h} I_2^h` step by step.
pub fn power_splitting_ladder(g: &Graph, k: u32, field: Field) -> Result<LadderReport> {
    if g.non_isolated_component_count() < 2 {
        return Err(Error::invalid("the ladder needs at least two components with edges"));
    }
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let n = g.vertex_count();
    let comps: Vec<Vec<usize>> = g.components().into_iter().filter(|c| c.len() >= 2).collect();
    let top = comps.iter().flatten().copied().max().expect("has edges");
    let g2 = comps.iter().find(|c| c.contains(&top)).expect("top lies in a component");
    let x_block: Vec<usize> = comps.iter().filter(|c| *c != g2).flatten().copied().collect::<Vec<_>>();
    let mut x_block = x_block;
    x_block.sort_unstable();
    let y_block: Vec<usize> = (1..=n).filter(|v| !x_block.contains(v)).collect();

    let block_ideal = |block: &[usize]| -> Result<MonomialIdeal> {
        let gens = g
            .edges()
            .into_iter()
            .filter(|(a, b)| block.contains(a) && block.contains(b))
            .map(|(a, b)| {
                let rest: Vec<usize> = block.iter().copied().filter(|&v| v != a && v != b).collect();
                Monomial::from_support(n, &rest)
            })
            .collect();
        MonomialIdeal::minimalize(n, gens)
    };
    let i1 = block_ideal(&x_block)?;
    let i2 = block_ideal(&y_block)?;
    let xm = Monomial::from_support(n, &x_block);
    let ym = Monomial::from_support(n, &y_block);
    let term = |yk: u32, xk: u32, p1: u32, p2: u32| -> Result<MonomialIdeal> {
        let coeff = ym.pow(yk)?.mul(&xm.pow(xk)?)?;
        i1.power(p1)?.product(&i2.power(p2)?)?.times(&coeff)
    };

    let mut steps = Vec::new();
    let mut j_prev = term(k, 0, k, 0)?;
    for ell in 1..=k {
        let next = term(k - ell, ell, k - ell, ell)?;
        let meet = j_prev.intersect(&next)?;
        let closed = term(k - ell + 1, ell, k - ell, ell - 1)?;
        let j_ell = j_prev.sum(&next)?;
        let partition = is_generator_partition(&j_ell, &j_prev, &next);
        let splitting = partition && {
            let whole = betti_table_general(&j_ell, field)?;
            let t1 = betti_table_general(&j_prev, field)?;
            let t2 = betti_table_general(&next, field)?;
            let tm = betti_table_general(&meet, field)?;
            splitting_holds(&whole, &t1, &t2, &tm)
        };
        steps.push(LadderStep {
            ell,
            intersection_matches: meet == closed,
            generators_partition: partition,
            betti_splitting: splitting,
        });
        j_prev = j_ell;
    }
    let top_matches = j_prev == comp_edge_ideal(g).power(k)?;
    Ok(LadderReport { k, x_block, y_block, steps, top_matches })
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeRow {
    pub k: u32,
    /// Componentwise linearity of `J_c(G)^k`, recorded for chordal graphs.
    pub jc_power_componentwise_linear: Option<bool>,
    pub depth_jc_power: i64,
    pub depth_jc_symbolic: i64,
    pub reg_ic_power: i64,
    pub reg_ic_symbolic: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub n: usize,
    pub bitmask: u64,
    pub chordal: bool,
    pub rows: Vec<ProbeRow>,
    pub observations: Vec<String>,
}

/// Data on componentwise linearity of `J_c(G)^k`, the depth functions of
/// `J_c(G)^k` and `J_c(G)^(k)`, and `reg I_c(G)^k` against `reg I_c(G)^(k)`.
/// Reports observations only.
pub fn probe_open_questions(g: &Graph, kmax: u32, field: Field) -> Result<ProbeReport> {
    if kmax == 0 {
        return Err(Error::invalid("kmax must be at least 1"));
    }
    let ic = comp_edge_ideal(g);
    if ic.is_zero() || ic.is_unit() {
        return Err(Error::invalid("I_c(G) must be proper and nonzero for the probe"));
    }
    let jc = comp_cover_ideal(g)?;
    let chordal = g.is_chordal();
    let mut rows = Vec::new();
    for k in 1..=kmax {
        let jk = jc.power(k)?;
        let jsym = jc.symbolic_power(k)?;
        rows.push(ProbeRow {
            k,
            jc_power_componentwise_linear: if chordal { Some(is_componentwise_linear(&jk, field)?) } else { None },
            depth_jc_power: betti_table(&jk, field)?.depth_quotient(),
            depth_jc_symbolic: betti_table(&jsym, field)?.depth_quotient(),
            reg_ic_power: betti_table(&ic.power(k)?, field)?.regularity(),
            reg_ic_symbolic: betti_table(&ic.symbolic_power(k)?, field)?.regularity(),
        });
    }
    let mut observations = Vec::new();
    let non_increasing = |f: &dyn Fn(&ProbeRow) -> i64| rows.windows(2).all(|w| f(&w[0]) >= f(&w[1]));
    observations.push(format!(
        "depth S/J_c(G)^k non-increasing for k <= {kmax}: {}",
        non_increasing(&|r| r.depth_jc_power)
    ));
    observations.push(format!(
        "depth S/J_c(G)^(k) non-increasing for k <= {kmax}: {}",
        non_increasing(&|r| r.depth_jc_symbolic)
    ));
    observations.push(format!(
        "reg I_c(G)^k = reg I_c(G)^(k) for k <= {kmax}: {}",
        rows.iter().all(|r| r.reg_ic_power == r.reg_ic_symbolic)
    ));
    if chordal {
        observations.push(format!(
            "J_c(G)^k componentwise linear for k <= {kmax}: {}",
            rows.iter().all(|r| r.jc_power_componentwise_linear == Some(true))
        ));
    }
    Ok(ProbeReport { n: g.vertex_count(), bitmask: g.to_bitmask(), chordal, rows, observations })
}
