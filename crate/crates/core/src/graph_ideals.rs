//! Ideals attached to a graph and the closed-form primary decomposition of
//! the complementary edge ideal.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{intersect_primes, Monomial, MonomialIdeal, PrimeSupport};

/// `I(G) = (x_i x_j : {i,j} ∈ E(G))`.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.vertex_count();
    let gens = g.edges().iter().map(|&(i, j)| Monomial::from_support(n, &[i, j])).collect();
    MonomialIdeal::minimalize(n, gens).expect("shared ambient")
}

/// `I_c(G) = (x_[n] / (x_i x_j) : {i,j} ∈ E(G))`, equigenerated in degree `n - 2`.
pub fn comp_edge_ideal(g: &Graph) -> MonomialIdeal {
    edge_ideal(g).complementary_ideal().expect("edge ideals are squarefree")
}

fn require_cover_preconditions(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 || g.vertex_count() < 3 {
        return Err(Error::invalid("J_c(G) needs at least one edge and n >= 3"));
    }
    Ok(())
}

/// `J_c(G) = I_c(G)^∨`.
pub fn comp_cover_ideal(g: &Graph) -> Result<MonomialIdeal> {
    require_cover_preconditions(g)?;
    comp_edge_ideal(g).alexander_dual()
}

/// `J_c(G)` computed directly as `⋂_{e ∈ E(G)} P_{[n] \ e}`.
pub fn comp_cover_ideal_by_intersection(g: &Graph) -> Result<MonomialIdeal> {
    require_cover_preconditions(g)?;
    let n = g.vertex_count();
    let primes = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let rest: Vec<usize> = (1..=n).filter(|&v| v != i && v != j).collect();
            PrimeSupport::new(n, &rest)
        })
        .collect::<Result<Vec<_>>>()?;
    intersect_primes(n, &primes)
}

/// `K_t(G) = (x_F : F a t-clique of G)`.
pub fn clique_ideal(g: &Graph, t: usize) -> Result<MonomialIdeal> {
    if t == 0 {
        return Err(Error::invalid("clique ideals need t >= 1"));
    }
    let n = g.vertex_count();
    let gens = g.cliques(t).iter().map(|c| Monomial::from_support(n, c)).collect();
    MonomialIdeal::minimalize(n, gens)
}

/// Squarefree Veronese ideal `I_{n,d}`: all squarefree monomials of degree `d`.
pub fn veronese(n: usize, d: usize) -> Result<MonomialIdeal> {
    if d > n || n > 64 {
        return Err(Error::invalid(format!("I_{{n,d}} needs 0 <= d <= n <= 64, got n={n} d={d}")));
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut gens = Vec::new();
    // Gosper's hack over the d-subsets of [n].
    if d == 0 {
        gens.push(Monomial::one(n));
    } else {
        let mut s: u64 = (1u64 << d) - 1;
        while s & !full == 0 {
            gens.push(Monomial::from_mask(n, s));
            let c = s & s.wrapping_neg();
            let r = s.wrapping_add(c);
            if r == 0 {
                break;
            }
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    MonomialIdeal::minimalize(n, gens)
}

/// Minimal primary decomposition of a squarefree ideal as a list of primes
/// `P_F`, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    ambient: usize,
    components: Vec<PrimeSupport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub primes: Vec<Vec<usize>>,
}

impl PrimaryDecomposition {
    /// Accepts `components` only if they are pairwise incomparable and their
    /// intersection equals `target`. An empty list stands for the unit ideal.
    pub fn new(target: &MonomialIdeal, components: Vec<PrimeSupport>) -> Result<Self> {
        let ambient = target.ambient();
        for (a, p) in components.iter().enumerate() {
            if p.ambient() != ambient {
                return Err(Error::AmbientMismatch(ambient, p.ambient()));
            }
            for q in &components[a + 1..] {
                let (pm, qm) = (p.mask(), q.mask());
                if pm & qm == pm || pm & qm == qm {
                    return Err(Error::invalid(format!("components {p} and {q} are comparable")));
                }
            }
        }
        let meet = intersect_primes(ambient, &components)?;
        if &meet != target {
            return Err(Error::invalid(format!("components intersect to {meet}, not {target}")));
        }
        Ok(PrimaryDecomposition { ambient, components })
    }

    pub fn components(&self) -> &[PrimeSupport] {
        &self.components
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_unmixed(&self) -> bool {
        self.components.windows(2).all(|w| w[0].height() == w[1].height())
    }

    pub fn min_height(&self) -> Option<usize> {
        self.components.iter().map(PrimeSupport::height).min()
    }

    /// Component supports as sorted lists, sorted.
    pub fn sorted_supports(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.components.iter().map(|p| p.vars().to_vec()).collect();
        v.sort();
        v
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson { primes: self.components.iter().map(|p| p.vars().to_vec()).collect() }
    }
}

/// The closed-form prime list for a graph without isolated vertices: one
/// `P_e` per non-edge `e`, then one `P_T` per triangle `T`.
pub fn closed_form_primes(g: &Graph) -> Vec<PrimeSupport> {
    let n = g.vertex_count();
    let comp = g.complement();
    let mut primes: Vec<PrimeSupport> =
        comp.edges().iter().map(|&(i, j)| PrimeSupport::new(n, &[i, j]).expect("in range")).collect();
    primes.extend(g.triangles().iter().map(|t| PrimeSupport::new(n, t).expect("in range")));
    primes
}

/// Minimal primary decomposition of `I_c(G)`.
///
/// Without isolated vertices the components are the non-edges and the
/// triangles of `G`. Each isolated vertex `v` contributes the factor `x_v`
/// (`I_c(G) = x_v I_c(H)` with `H` the graph on the other vertices), so its
/// singleton prime is prepended to the transported decomposition of the
/// non-isolated part.
pub fn primary_decomposition_ic(g: &Graph) -> Result<PrimaryDecomposition> {
    if g.edge_count() == 0 {
        return Err(Error::invalid("I_c of an edgeless graph is zero and has no decomposition"));
    }
    let n = g.vertex_count();
    let target = comp_edge_ideal(g);
    let isolated = g.isolated_vertices();
    if isolated.is_empty() {
        return PrimaryDecomposition::new(&target, closed_form_primes(g));
    }
    let keep: Vec<usize> = (1..=n).filter(|v| !isolated.contains(v)).collect();
    let (h, map) = g.induced_subgraph(&keep)?;
    let mut components: Vec<PrimeSupport> =
        isolated.iter().map(|&v| PrimeSupport::new(n, &[v])).collect::<Result<_>>()?;
    for p in closed_form_primes(&h) {
        let vars: Vec<usize> = p.vars().iter().map(|&v| map[v - 1]).collect();
        components.push(PrimeSupport::new(n, &vars)?);
    }
    PrimaryDecomposition::new(&target, components)
}

/// `dim S/I_c(G)` for a graph without isolated vertices: `n - 3` for the
/// complete graph, `n - 2` otherwise. (`K_2` gives `-1`, the dimension of
/// the zero ring `S/(1)`.)
pub fn dim_ic(g: &Graph) -> Result<i64> {
    if g.has_isolated_vertex() {
        return Err(Error::invalid("dim_ic needs a graph without isolated vertices"));
    }
    let n = g.vertex_count() as i64;
    Ok(if g.is_complete() { n - 3 } else { n - 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    fn sf(n: usize, supports: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_supports(n, supports)
    }

    fn paw() -> Graph {
        Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn edge_ideal_examples() {
        assert_eq!(edge_ideal(&Graph::path(3).unwrap()), sf(3, &[&[1, 2], &[2, 3]]));
        assert!(edge_ideal(&Graph::empty(4).unwrap()).is_zero());
        assert_eq!(edge_ideal(&Graph::complete(3).unwrap()), sf(3, &[&[1, 2], &[1, 3], &[2, 3]]));
    }

    #[test]
    fn comp_edge_ideal_examples() {
        assert_eq!(comp_edge_ideal(&Graph::path(3).unwrap()), sf(3, &[&[1], &[3]]));
        let two_k2 = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(comp_edge_ideal(&two_k2), sf(4, &[&[1, 2], &[3, 4]]));
        let p4 = comp_edge_ideal(&Graph::path(4).unwrap());
        assert_eq!(p4, sf(4, &[&[3, 4], &[1, 4], &[1, 2]]));
        // the path 4-2-3-1 gives the form (x1x3, x1x4, x2x4)
        let relabeled = Graph::from_edges(4, &[(2, 4), (2, 3), (1, 3)]).unwrap();
        assert_eq!(comp_edge_ideal(&relabeled), sf(4, &[&[1, 3], &[1, 4], &[2, 4]]));
        assert!(comp_edge_ideal(&Graph::complete(2).unwrap()).is_unit());
    }

    #[test]
    fn isolated_vertex_factors_out() {
        // G = P_3 plus isolated vertex 4: I_c(G) = x_4 I_c(P_3)
        let g = Graph::from_edges(4, &[(1, 2), (2, 3)]).unwrap();
        let h = comp_edge_ideal(&Graph::path(3).unwrap());
        let lifted = MonomialIdeal::minimalize(
            4,
            h.gens().iter().map(|u| {
                let mut e = u.exponents().to_vec();
                e.push(1);
                Monomial::new(e)
            }).collect(),
        )
        .unwrap();
        assert_eq!(comp_edge_ideal(&g), lifted);
    }

    #[test]
    fn equigenerated_in_degree_n_minus_2() {
        for g in enumerate_graphs(5, false).unwrap().filter(|g| g.edge_count() > 0) {
            assert_eq!(comp_edge_ideal(&g).generation_degree(), Some(3));
        }
    }

    #[test]
    fn cover_ideal_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(comp_cover_ideal(&k3).unwrap(), sf(3, &[&[1, 2, 3]]));
        let p3 = Graph::path(3).unwrap();
        assert_eq!(comp_cover_ideal(&p3).unwrap(), sf(3, &[&[1, 3]]));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(comp_cover_ideal(&c4).unwrap(), sf(4, &[&[1, 3], &[2, 4]]));
        assert!(comp_cover_ideal(&Graph::complete(2).unwrap()).is_err());
        assert!(comp_cover_ideal(&Graph::empty(4).unwrap()).is_err());
    }

    #[test]
    fn cover_ideal_three_routes_agree_n5() {
        for g in enumerate_graphs(5, false).unwrap().filter(|g| g.edge_count() > 0) {
            let dual = comp_cover_ideal(&g).unwrap();
            assert_eq!(dual, comp_cover_ideal_by_intersection(&g).unwrap(), "{g:?}");
            if !g.has_isolated_vertex() {
                let formula = edge_ideal(&g.complement()).sum(&clique_ideal(&g, 3).unwrap()).unwrap();
                assert_eq!(dual, formula, "{g:?}");
            }
        }
    }

    #[test]
    fn clique_ideal_examples() {
        assert!(clique_ideal(&Graph::cycle(4).unwrap(), 3).unwrap().is_zero());
        assert_eq!(clique_ideal(&Graph::complete(4).unwrap(), 3).unwrap(), veronese(4, 3).unwrap());
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let g = Graph::from_bitmask(6, rng.gen_range(0..1u64 << 15)).unwrap();
            assert_eq!(clique_ideal(&g, 2).unwrap(), edge_ideal(&g));
        }
    }

    #[test]
    fn veronese_examples() {
        assert_eq!(veronese(3, 1).unwrap(), comp_edge_ideal(&Graph::complete(3).unwrap()));
        assert_eq!(veronese(4, 2).unwrap().len(), 6);
        assert!(veronese(4, 0).unwrap().is_unit());
        assert_eq!(veronese(4, 4).unwrap(), sf(4, &[&[1, 2, 3, 4]]));
        assert!(veronese(3, 4).is_err());
        for n in 2..=6 {
            assert_eq!(comp_edge_ideal(&Graph::complete(n).unwrap()), veronese(n, n - 2).unwrap());
            for d in 0..=n {
                assert_eq!(veronese(n, d).unwrap(), veronese(n, n - d).unwrap().complementary_ideal().unwrap());
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let supports = |g: &Graph| primary_decomposition_ic(g).unwrap().sorted_supports();
        assert_eq!(supports(&Graph::path(3).unwrap()), vec![vec![1, 3]]);
        assert_eq!(supports(&Graph::complete(3).unwrap()), vec![vec![1, 2, 3]]);
        assert_eq!(supports(&paw()), vec![vec![1, 2, 3], vec![1, 4], vec![2, 4]]);
        let oracle: Vec<Vec<usize>> =
            comp_edge_ideal(&paw()).squarefree_minimal_primes().unwrap().iter().map(|p| p.vars().to_vec()).collect();
        assert_eq!(supports(&paw()), oracle);
        assert!(primary_decomposition_ic(&Graph::empty(3).unwrap()).is_err());
        assert!(primary_decomposition_ic(&Graph::complete(2).unwrap()).unwrap().components().is_empty());
    }

    #[test]
    fn decomposition_with_isolated_vertices_n5() {
        for g in enumerate_graphs(5, false).unwrap().filter(|g| g.edge_count() > 0 && g.has_isolated_vertex()) {
            let dec = primary_decomposition_ic(&g).unwrap();
            let oracle: Vec<Vec<usize>> =
                comp_edge_ideal(&g).squarefree_minimal_primes().unwrap().iter().map(|p| p.vars().to_vec()).collect();
            assert_eq!(dec.sorted_supports(), oracle, "{g:?}");
        }
    }

    #[test]
    fn decomposition_rejects_bad_components() {
        let target = sf(3, &[&[1], &[3]]);
        assert!(PrimaryDecomposition::new(&target, vec![PrimeSupport::new(3, &[1, 2]).unwrap()]).is_err());
        let comparable = vec![PrimeSupport::new(3, &[1, 3]).unwrap(), PrimeSupport::new(3, &[1, 2, 3]).unwrap()];
        assert!(PrimaryDecomposition::new(&target, comparable).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_ic(&Graph::complete(4).unwrap()).unwrap(), 1);
        assert_eq!(dim_ic(&Graph::path(4).unwrap()).unwrap(), 2);
        assert_eq!(dim_ic(&Graph::cycle(5).unwrap()).unwrap(), 3);
        for g in enumerate_graphs(5, true).unwrap().filter(|g| !g.is_complete()) {
            let dec = primary_decomposition_ic(&g).unwrap();
            assert_eq!(dim_ic(&g).unwrap(), 5 - dec.min_height().unwrap() as i64);
        }
    }

    #[test]
    fn unmixed_iff_triangle_free_for_non_complete() {
        for g in enumerate_graphs(6, true).unwrap().filter(|g| !g.is_complete()) {
            let dec = primary_decomposition_ic(&g).unwrap();
            assert_eq!(dec.is_unmixed(), g.triangles().is_empty(), "{g:?}");
            assert_eq!(g.triangles().is_empty(), comp_cover_ideal(&g).unwrap() == edge_ideal(&g.complement()));
        }
    }

    #[test]
    fn json_form() {
        let dec = primary_decomposition_ic(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(serde_json::to_string(&dec.to_json()).unwrap(), r#"{"primes":[[1,3]]}"#);
    }
}
