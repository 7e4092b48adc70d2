//! Graded Betti numbers of monomial ideals over `Q` or `Z/p`, the invariants
//! read off them, and deciders for linear resolutions, componentwise
//! linearity and linear quotients.
//!
//! Tables describe the ideal `I`, so `β_{i,j}(S/I) = β_{i−1,j}(I)` for `i ≥ 1`.

mod koszul;
mod linalg;
mod quotients;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

pub use koszul::{MAX_LATTICE, MAX_MATRIX_ENTRIES};
pub use quotients::{
    find_linear_quotients_order, search_linear_quotients_order, verify_linear_quotients_order, MAX_ORDER_SEARCH,
};

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// `Z/p` for a prime `p < 2^31`.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl FromStr for Field {
    type Err = Error;

    /// `Q` or `Zp:<p>`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        let p = s
            .strip_prefix("Zp:")
            .and_then(|p| p.parse::<u32>().ok())
            .ok_or_else(|| Error::invalid(format!("unknown field {s:?}; use Q or Zp:<p>")))?;
        Field::prime(p)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Zp:{p}"),
        }
    }
}

/// Nonzero graded Betti numbers `β_{i,j}` of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    ambient: usize,
    entries: BTreeMap<(usize, u32), u64>,
}

/// JSON form `{"entries": [[i, j, count], …]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BettiJson {
    pub entries: Vec<(usize, u32, u64)>,
}

impl BettiTable {
    pub fn from_entries(ambient: usize, entries: impl IntoIterator<Item = ((usize, u32), u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            if v > 0 {
                *map.entry(k).or_insert(0) += v;
            }
        }
        BettiTable { ambient, entries: map }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.entries
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, &b)| b).sum()
    }

    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `max{j − i : β_{i,j} ≠ 0}`.
    pub fn regularity(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(0)
    }

    /// `depth S/I = n − pd(S/I) = n − pd(I) − 1`.
    pub fn depth_quotient(&self) -> i64 {
        self.ambient as i64 - self.proj_dim() as i64 - 1
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson { entries: self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect() }
    }
}

/// Macaulay2 layout: column `i`, row `j − i`, dots for zeros.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(empty)");
        }
        let pd = self.proj_dim();
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap_or(0);
            (lo..=self.regularity()).collect()
        };
        let cell = |i: usize, r: i64| -> String {
            let j = r + i as i64;
            if j < 0 {
                return ".".into();
            }
            match self.get(i, j as u32) {
                0 => ".".into(),
                b => b.to_string(),
            }
        };
        let mut grid: Vec<(String, Vec<String>)> = Vec::new();
        grid.push((String::new(), (0..=pd).map(|i| i.to_string()).collect()));
        grid.push(("total:".into(), (0..=pd).map(|i| self.total(i).to_string()).collect()));
        for &r in &rows {
            grid.push((format!("{r}:"), (0..=pd).map(|i| cell(i, r)).collect()));
        }
        let label_w = grid.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let col_w: Vec<usize> = (0..=pd).map(|i| grid.iter().map(|(_, c)| c[i].len()).max().unwrap_or(1)).collect();
        for (label, cells) in &grid {
            let mut line = format!("{label:>label_w$}");
            for (c, w) in cells.iter().zip(&col_w) {
                line.push_str(&format!(" {c:>w$}"));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

fn check_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::invalid("Betti numbers of the zero ideal are not defined here"));
    }
    if ideal.is_unit() {
        return Err(Error::invalid("Betti numbers of the unit ideal are not defined here"));
    }
    Ok(())
}

/// Graded Betti numbers of any proper nonzero monomial ideal, computed
/// directly in its own ring.
pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    check_proper(ideal)?;
    let multi = koszul::multigraded(ideal, field)?;
    let entries = multi.into_iter().map(|((i, a), b)| ((i, a.iter().map(|&e| e as u32).sum()), b));
    Ok(BettiTable::from_entries(ideal.ambient(), entries))
}

/// Multigraded Betti numbers `β_{i,a}` keyed by `(i, a)`.
pub fn multigraded_betti(ideal: &MonomialIdeal, field: Field) -> Result<BTreeMap<(usize, Vec<u16>), u64>> {
    check_proper(ideal)?;
    koszul::multigraded(ideal, field)
}

/// Betti numbers through the polarization: the squarefree ideal is resolved
/// and its table reinterpreted in the original ring.
pub fn betti_table_general(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    check_proper(ideal)?;
    let (pol, _) = ideal.polarize()?;
    let table = betti_table(&pol, field)?;
    Ok(BettiTable { ambient: ideal.ambient(), entries: table.entries })
}

pub fn regularity(ideal: &MonomialIdeal, field: Field) -> Result<i64> {
    Ok(betti_table(ideal, field)?.regularity())
}

pub fn proj_dim(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    Ok(betti_table(ideal, field)?.proj_dim())
}

pub fn depth_quotient(ideal: &MonomialIdeal, field: Field) -> Result<i64> {
    Ok(betti_table(ideal, field)?.depth_quotient())
}

/// Equigenerated in degree `d` with `reg = d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    check_proper(ideal)?;
    let Some(d) = ideal.generation_degree() else { return Ok(false) };
    Ok(regularity(ideal, field)? == d as i64)
}

/// All monomials of degree `d` in `n` variables.
fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, left: u32, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(left as u16);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e as u16);
            go(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    go(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `I_⟨j⟩`: the ideal generated by the degree-`j` elements of `I`.
pub fn component_ideal(ideal: &MonomialIdeal, j: u32) -> MonomialIdeal {
    let n = ideal.ambient();
    let mut raw = Vec::new();
    for g in ideal.gens().iter().filter(|g| g.degree() <= j) {
        for m in monomials_of_degree(n, j - g.degree()) {
            raw.push(g.mul(&m).expect("degree-bounded product fits"));
        }
    }
    MonomialIdeal::minimalize(n, raw).expect("same ambient")
}

/// Every `I_⟨j⟩` has a linear resolution. Components are tested for `j`
/// from the least generator degree up to `max(reg I, max generator degree)`.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    check_proper(ideal)?;
    let lo = ideal.min_degree().expect("nonzero");
    let hi = (ideal.max_degree().expect("nonzero") as i64).max(regularity(ideal, field)?) as u32;
    for j in lo..=hi {
        if !has_linear_resolution(&component_ideal(ideal, j), field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, Graph};
    use crate::graph_ideals::{comp_cover_ideal, comp_edge_ideal, veronese};

    const FIELDS: [Field; 3] = [Field::Rationals, Field::Prime(2), Field::Prime(3)];

    fn sq(n: usize, s: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_supports(n, s)
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("Zp:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!(Field::Prime(2).to_string(), "Zp:2");
        assert!("Zp:6".parse::<Field>().is_err());
        assert!("Zp:1".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
        assert!("Zp:2147483647".parse::<Field>().is_ok());
        assert!(Field::prime(1 << 31).is_err());
    }

    #[test]
    fn complete_intersection() {
        let t = betti_table(&sq(4, &[&[1, 2], &[3, 4]]), Field::Rationals).unwrap();
        assert_eq!(t.entries().len(), 2);
        assert_eq!(t.get(0, 2), 2);
        assert_eq!(t.get(1, 4), 1);
        assert_eq!(t.regularity(), 3);
    }

    #[test]
    fn maximal_ideal_is_koszul() {
        for n in 1..=6 {
            let m = MonomialIdeal::from_supports(n, &(1..=n).map(|i| vec![i]).collect::<Vec<_>>().iter().map(|v| v.as_slice()).collect::<Vec<_>>());
            for f in FIELDS {
                let t = betti_table(&m, f).unwrap();
                for i in 0..n {
                    assert_eq!(t.get(i, i as u32 + 1), binom(n as u64, i as u64 + 1));
                }
                assert_eq!(t.entries().len(), n);
                assert_eq!(t.depth_quotient(), 0);
            }
        }
    }

    #[test]
    fn path_on_four_vertices() {
        let ic = comp_edge_ideal(&Graph::path(4).unwrap());
        let t = betti_table(&ic, Field::Rationals).unwrap();
        assert_eq!(t.total(0), 3);
        assert_eq!(t.total(1), 2);
        assert_eq!(t.proj_dim(), 1);
        assert_eq!(t.regularity(), 2);
        assert!(has_linear_resolution(&ic, Field::Rationals).unwrap());
    }

    #[test]
    fn principal_and_small_nonsquarefree() {
        let t = betti_table_general(&MonomialIdeal::from_exponents(1, &[&[2]]).unwrap(), Field::Rationals).unwrap();
        assert_eq!(t.entries().iter().collect::<Vec<_>>(), vec![(&(0, 2), &1)]);
        // (x1², x1x2): Taylor complex is x1²x2 on one edge, and it is minimal
        // since the two generators' lcm is not divisible by anything smaller.
        let i = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1]]).unwrap();
        let taylor = taylor_betti(&i, Field::Rationals);
        assert_eq!(betti_table(&i, Field::Rationals).unwrap(), taylor);
        assert_eq!(betti_table_general(&i, Field::Rationals).unwrap(), taylor);
        assert_eq!(taylor.get(1, 3), 1);
    }

    /// Taylor complex over `Q`, minimized: the graded Betti numbers of the
    /// ideal are the ranks of the homology of `F ⊗ k`, where the differential
    /// keeps only coefficients with `lcm(σ) = lcm(σ \ v)`.
    fn taylor_betti(ideal: &MonomialIdeal, field: Field) -> BettiTable {
        let g = ideal.gens();
        let r = g.len();
        assert!(r <= 12);
        let lcm = |s: u32| (0..r).filter(|i| s >> i & 1 == 1).fold(Monomial::one(ideal.ambient()), |a, i| a.lcm(&g[i]));
        let by_size: Vec<Vec<u32>> =
            (0..=r).map(|k| (1u32..1 << r).filter(|s| s.count_ones() as usize == k).collect()).collect();
        let mut entries = Vec::new();
        // homological degree i ↔ subsets of size i + 1; split by multidegree
        let mut degrees: Vec<Monomial> = (1u32..1 << r).map(lcm).collect();
        degrees.sort();
        degrees.dedup();
        for a in degrees {
            let levels: Vec<Vec<u32>> = by_size.iter().map(|l| l.iter().copied().filter(|&s| lcm(s) == a).collect()).collect();
            let rk = |k: usize| -> usize {
                if k == 0 || k > r {
                    return 0;
                }
                let (hi, lo) = (&levels[k], &levels[k - 1]);
                let mut m = linalg::SignMatrix::new(lo.len());
                for &s in hi {
                    let mut col = Vec::new();
                    for (pos, i) in (0..r).filter(|i| s >> i & 1 == 1).enumerate() {
                        if let Ok(row) = lo.binary_search(&(s ^ 1 << i)) {
                            col.push((row as u32, if pos % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                    m.push_col(col);
                }
                linalg::rank(&m, field)
            };
            for k in 1..=r {
                let b = levels[k].len() - rk(k) - rk(k + 1);
                entries.push(((k - 1, a.degree()), b as u64));
            }
        }
        BettiTable::from_entries(ideal.ambient(), entries)
    }

    #[test]
    fn koszul_engine_matches_taylor_on_random_ideals() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        for _ in 0..150 {
            let n = rng.gen_range(2..5);
            let k = rng.gen_range(1..7);
            let raw: Vec<Monomial> =
                (0..k).map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..3)).collect())).collect();
            let ideal = MonomialIdeal::minimalize(n, raw).unwrap();
            if ideal.is_unit() {
                continue;
            }
            for f in [Field::Rationals, Field::Prime(2)] {
                let direct = betti_table(&ideal, f).unwrap();
                assert_eq!(direct, taylor_betti(&ideal, f), "{ideal}");
                assert_eq!(betti_table_general(&ideal, f).unwrap(), direct, "{ideal}");
            }
        }
    }

    #[test]
    fn zeroth_betti_counts_generators() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rng.gen_range(1..6);
            let k = rng.gen_range(1..8);
            let raw: Vec<Monomial> =
                (0..k).map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..3)).collect())).collect();
            let ideal = MonomialIdeal::minimalize(n, raw).unwrap();
            if ideal.is_unit() {
                continue;
            }
            let t = betti_table(&ideal, Field::Prime(2)).unwrap();
            let mut by_deg: BTreeMap<u32, u64> = BTreeMap::new();
            for g in ideal.gens() {
                *by_deg.entry(g.degree()).or_default() += 1;
            }
            for (&d, &c) in &by_deg {
                assert_eq!(t.get(0, d), c);
            }
            assert_eq!(t.total(0), ideal.len() as u64);
            assert!(t.proj_dim() < n.max(1));
        }
    }

    #[test]
    fn rejects_zero_and_unit() {
        assert!(betti_table(&MonomialIdeal::zero(3), Field::Rationals).is_err());
        assert!(betti_table(&MonomialIdeal::unit(3), Field::Rationals).is_err());
    }

    #[test]
    fn polarization_route_agrees_on_squarefree_and_powers() {
        for g in enumerate_graphs(5, true).unwrap() {
            let ic = comp_edge_ideal(&g);
            if ic.is_unit() {
                continue;
            }
            assert_eq!(betti_table_general(&ic, Field::Prime(2)).unwrap(), betti_table(&ic, Field::Prime(2)).unwrap());
            let sq = ic.power(2).unwrap();
            assert_eq!(betti_table_general(&sq, Field::Prime(2)).unwrap(), betti_table(&sq, Field::Prime(2)).unwrap());
        }
    }

    #[test]
    fn path_ideal_has_no_linear_resolution() {
        let i = sq(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5]]);
        assert!(!has_linear_resolution(&i, Field::Rationals).unwrap());
    }

    #[test]
    fn squarefree_veronese_has_linear_resolution() {
        for n in 1..=6 {
            for d in 1..=n {
                let v = veronese(n, d).unwrap();
                assert!(has_linear_resolution(&v, Field::Prime(2)).unwrap(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn connected_graphs_give_linear_resolutions() {
        for n in 3..=6 {
            for g in enumerate_graphs(n, true).unwrap() {
                if g.non_isolated_component_count() == 1 {
                    assert!(has_linear_resolution(&comp_edge_ideal(&g), Field::Prime(2)).unwrap(), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn component_ideals() {
        let i = MonomialIdeal::from_exponents(3, &[&[1, 0, 0], &[0, 1, 1]]).unwrap();
        let c2 = component_ideal(&i, 2);
        let expected = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]).unwrap();
        assert_eq!(c2, expected);
        assert!(component_ideal(&i, 0).is_zero());
        let e = sq(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(component_ideal(&e, 2), e);
        assert!(component_ideal(&e, 1).is_zero());
        // membership semantics: degree-3 monomials of I_⟨3⟩ are those of I
        let c3 = component_ideal(&i, 3);
        for m in monomials_of_degree(3, 3) {
            assert_eq!(c3.contains(&m), i.contains(&m), "{m}");
        }
    }

    #[test]
    fn componentwise_linear_examples() {
        let paw = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert!(is_componentwise_linear(&comp_cover_ideal(&paw).unwrap(), Field::Rationals).unwrap());
        let c4 = comp_cover_ideal(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4, sq(4, &[&[1, 3], &[2, 4]]));
        assert!(!is_componentwise_linear(&c4, Field::Rationals).unwrap());
        let v = veronese(5, 3).unwrap();
        assert!(is_componentwise_linear(&v, Field::Rationals).unwrap());
    }

    /// Components beyond the scan window stay linear: checked a few degrees
    /// past `max(reg, max degree)` on all squarefree ideals of n ≤ 4 and a
    /// random sample on n = 5.
    #[test]
    fn componentwise_scan_window_is_enough() {
        use rand::{Rng, SeedableRng};
        let check = |ideal: &MonomialIdeal| {
            let reg = regularity(ideal, Field::Prime(2)).unwrap();
            let hi = (ideal.max_degree().unwrap() as i64).max(reg) as u32;
            for j in hi + 1..=hi + 2 {
                assert!(has_linear_resolution(&component_ideal(ideal, j), Field::Prime(2)).unwrap(), "{ideal} j={j}");
            }
        };
        for n in 2..=4usize {
            let subsets = 1u64 << n;
            for family in 1u64..1 << (subsets - 1) {
                let raw: Vec<Monomial> =
                    (1..subsets).filter(|s| family >> (s - 1) & 1 == 1).map(|s| Monomial::from_mask(n, s)).collect();
                check(&MonomialIdeal::minimalize(n, raw).unwrap());
                if n == 4 && family > 600 {
                    break;
                }
            }
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(21);
        for _ in 0..40 {
            let raw: Vec<Monomial> = (0..rng.gen_range(1..6)).map(|_| Monomial::from_mask(5, rng.gen_range(1..32))).collect();
            check(&MonomialIdeal::minimalize(5, raw).unwrap());
        }
    }

    /// Squarefree `I` on at most six variables: `S/I` is Cohen–Macaulay iff
    /// its Alexander dual has a linear resolution.
    #[test]
    fn eagon_reiner() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(8);
        let mut seen = [0usize; 2];
        for _ in 0..250 {
            let n = rng.gen_range(3..=6);
            let raw: Vec<Monomial> = (0..rng.gen_range(1..7))
                .map(|_| Monomial::from_mask(n, rng.gen_range(1..1u64 << n)))
                .filter(|m| m.degree() >= 2)
                .collect();
            let Ok(ideal) = MonomialIdeal::minimalize(n, raw) else { continue };
            if ideal.is_zero() {
                continue;
            }
            let dim = n - ideal.squarefree_minimal_primes().unwrap().iter().map(|p| p.height()).min().unwrap();
            let cm = depth_quotient(&ideal, Field::Rationals).unwrap() == dim as i64;
            let dual = ideal.alexander_dual().unwrap();
            assert_eq!(cm, has_linear_resolution(&dual, Field::Rationals).unwrap(), "{ideal}");
            seen[cm as usize] += 1;
        }
        assert!(seen[0] > 10 && seen[1] > 10, "{seen:?}");
    }

    #[test]
    fn characteristic_free_for_complementary_powers() {
        for g in enumerate_graphs(5, false).unwrap() {
            let ic = comp_edge_ideal(&g);
            if ic.is_zero() || ic.is_unit() {
                continue;
            }
            for k in 1..=2 {
                let p = ic.power(k).unwrap();
                let q = betti_table(&p, Field::Rationals).unwrap();
                assert_eq!(betti_table(&p, Field::Prime(2)).unwrap(), q);
                assert_eq!(betti_table(&p, Field::Prime(3)).unwrap(), q);
            }
        }
    }

    /// The six-vertex triangulation of the real projective plane: its
    /// Stanley–Reisner ideal has torsion in characteristic two.
    #[test]
    fn projective_plane_depends_on_characteristic() {
        let facets: [[usize; 3]; 10] = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
        ];
        let primes: Vec<Vec<usize>> =
            facets.iter().map(|f| (1..=6).filter(|v| !f.contains(v)).collect()).collect();
        let prime_refs: Vec<crate::monomial::PrimeSupport> =
            primes.iter().map(|p| crate::monomial::PrimeSupport::new(6, p).unwrap()).collect();
        let sr = crate::monomial::intersect_primes(6, &prime_refs).unwrap();
        let q = betti_table(&sr, Field::Rationals).unwrap();
        let z2 = betti_table(&sr, Field::Prime(2)).unwrap();
        assert_ne!(q, z2);
        assert!(z2.proj_dim() > q.proj_dim());
    }

    #[test]
    fn macaulay2_layout_and_json() {
        let t = betti_table(&sq(4, &[&[1, 2], &[3, 4]]), Field::Rationals).unwrap();
        assert_eq!(t.to_string(), "       0 1\ntotal: 2 1\n    2: 2 .\n    3: . 1\n");
        let json = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(json, r#"{"entries":[[0,2,2],[1,4,1]]}"#);
    }
}
