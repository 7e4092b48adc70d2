//! Linear quotients. An order `u_1, …, u_m` of the minimal generators works
//! iff for every `i` and `j < i` some `h < i` has `u_h : u_i = x_p` with
//! `x_p` dividing `u_j : u_i`.
//!
//! Whether `u` may follow a prefix depends only on the set of generators in
//! the prefix, so the search memoizes failed sets.

use std::collections::HashSet;

use crate::error::{Error, Guard, Result};
use crate::monomial::{gen_set, Monomial, MonomialIdeal};

pub const MAX_ORDER_SEARCH: usize = 24;

struct Colons {
    /// `support[w][u]` is the support mask of `u_w : u_u`.
    support: Vec<Vec<u64>>,
    /// `var[w][u]` is the single bit of `u_w : u_u` when it is a variable.
    var: Vec<Vec<u64>>,
}

impl Colons {
    fn new(gens: &[Monomial]) -> Self {
        let support = gens.iter().map(|w| gens.iter().map(|u| w.colon(u).support_mask()).collect()).collect();
        let var = gens
            .iter()
            .map(|w| gens.iter().map(|u| w.colon(u).as_variable().map_or(0, |p| 1u64 << (p - 1))).collect())
            .collect();
        Colons { support, var }
    }

    fn admissible(&self, prefix: impl Iterator<Item = usize> + Clone, u: usize) -> bool {
        let vars = prefix.clone().fold(0u64, |acc, w| acc | self.var[w][u]);
        prefix.into_iter().all(|w| self.support[w][u] & vars != 0)
    }
}

fn check_ambient(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.ambient() > 64 {
        return Err(Error::invalid("linear-quotient checks support at most 64 variables"));
    }
    Ok(())
}

/// `order` must list the minimal generators of `ideal`, each once.
pub fn verify_linear_quotients_order(ideal: &MonomialIdeal, order: &[Monomial]) -> Result<bool> {
    check_ambient(ideal)?;
    let gens = gen_set(ideal);
    let listed: HashSet<&Monomial> = order.iter().collect();
    if order.len() != ideal.len() || listed.len() != order.len() || !order.iter().all(|m| gens.contains(m)) {
        return Err(Error::invalid("the order is not a permutation of the minimal generators"));
    }
    let colons = Colons::new(order);
    Ok((1..order.len()).all(|i| colons.admissible(0..i, i)))
}

/// Exhaustive search for a linear-quotients order; `None` when none exists.
pub fn find_linear_quotients_order(ideal: &MonomialIdeal) -> Result<Option<Vec<Monomial>>> {
    if ideal.len() > MAX_ORDER_SEARCH {
        return Err(Error::guard(
            Guard::OrderSearch,
            format!(
                "{} generators exceed the exhaustive-search limit of {MAX_ORDER_SEARCH}; \
                 supply an order and use the verifier, or use the bounded search",
                ideal.len()
            ),
        ));
    }
    search(ideal, None)
}

/// Depth-first search visiting at most `budget` prefix sets. Returns
/// `Some(order)`, or `None` when the space was exhausted; running out of
/// budget is a [`Guard::SearchBudget`] error.
pub fn search_linear_quotients_order(ideal: &MonomialIdeal, budget: usize) -> Result<Option<Vec<Monomial>>> {
    search(ideal, Some(budget))
}

fn search(ideal: &MonomialIdeal, budget: Option<usize>) -> Result<Option<Vec<Monomial>>> {
    check_ambient(ideal)?;
    let gens = ideal.gens();
    let m = gens.len();
    if m == 0 {
        return Ok(Some(Vec::new()));
    }
    let colons = Colons::new(gens);
    let words = m.div_ceil(64);
    let mut failed: HashSet<Vec<u64>> = HashSet::new();
    let mut used = vec![0u64; words];
    let mut order: Vec<usize> = Vec::with_capacity(m);
    let mut visits = 0usize;

    // explicit stack of candidate cursors so deep searches do not recurse
    let mut cursor: Vec<usize> = vec![0];
    loop {
        let depth = order.len();
        if depth == m {
            return Ok(Some(order.iter().map(|&i| gens[i].clone()).collect()));
        }
        let start = cursor[depth];
        let next = (start..m).find(|&u| {
            used[u / 64] >> (u % 64) & 1 == 0 && colons.admissible(order.iter().copied(), u) && {
                let mut s = used.clone();
                s[u / 64] |= 1 << (u % 64);
                !failed.contains(&s)
            }
        });
        match next {
            Some(u) => {
                visits += 1;
                if budget.is_some_and(|b| visits > b) {
                    return Err(Error::guard(Guard::SearchBudget, format!("gave up after {} prefixes", visits - 1)));
                }
                cursor[depth] = u + 1;
                used[u / 64] |= 1 << (u % 64);
                order.push(u);
                cursor.push(0);
            }
            None => {
                cursor.pop();
                let Some(u) = order.pop() else { return Ok(None) };
                failed.insert(used.clone());
                used[u / 64] &= !(1 << (u % 64));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_ideals::veronese;
    use crate::resolution::{has_linear_resolution, Field};

    fn sq(n: usize, s: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_supports(n, s)
    }

    #[test]
    fn verifier_examples() {
        let i = sq(5, &[&[1, 2, 3], &[1, 2, 5], &[1, 4, 5], &[3, 4, 5]]);
        let order: Vec<Monomial> = [[1, 2, 3], [1, 2, 5], [1, 4, 5], [3, 4, 5]]
            .iter()
            .map(|s| Monomial::from_support(5, s))
            .collect();
        assert!(verify_linear_quotients_order(&i, &order).unwrap());

        let ci = sq(4, &[&[1, 3], &[2, 4]]);
        let g = ci.gens().to_vec();
        assert!(!verify_linear_quotients_order(&ci, &g).unwrap());
        assert!(!verify_linear_quotients_order(&ci, &[g[1].clone(), g[0].clone()]).unwrap());

        let single = sq(3, &[&[1, 2]]);
        assert!(verify_linear_quotients_order(&single, single.gens()).unwrap());
    }

    #[test]
    fn verifier_rejects_non_permutations() {
        let i = sq(4, &[&[1, 2], &[3, 4]]);
        let a = i.gens()[0].clone();
        assert!(verify_linear_quotients_order(&i, &[a.clone()]).is_err());
        assert!(verify_linear_quotients_order(&i, &[a.clone(), a]).is_err());
        assert!(verify_linear_quotients_order(&i, &[Monomial::var(4, 1), Monomial::var(4, 2)]).is_err());
    }

    #[test]
    fn search_examples() {
        let path = sq(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5]]);
        assert_eq!(find_linear_quotients_order(&path).unwrap(), None);
        let v = veronese(4, 2).unwrap();
        let order = find_linear_quotients_order(&v).unwrap().expect("order exists");
        assert!(verify_linear_quotients_order(&v, &order).unwrap());
        let x1 = sq(3, &[&[1]]);
        assert_eq!(find_linear_quotients_order(&x1).unwrap(), Some(vec![Monomial::var(3, 1)]));
    }

    #[test]
    fn search_guard() {
        let v = veronese(7, 3).unwrap();
        assert!(v.len() > MAX_ORDER_SEARCH);
        let err = find_linear_quotients_order(&v).unwrap_err();
        assert!(matches!(err, Error::Guard { guard: Guard::OrderSearch, .. }));
        let order = search_linear_quotients_order(&v, 10_000).unwrap().expect("order exists");
        assert!(verify_linear_quotients_order(&v, &order).unwrap());
        let path = sq(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5]]);
        assert!(search_linear_quotients_order(&path, 1).unwrap_err().is_guard());
    }

    /// Brute force over all permutations agrees with the search, and orders
    /// on equigenerated ideals come with linear resolutions.
    #[test]
    fn search_matches_permutations() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(12);
        for _ in 0..200 {
            let n = rng.gen_range(2..6);
            let raw: Vec<Monomial> = (0..rng.gen_range(1..6))
                .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..3)).collect()))
                .collect();
            let ideal = MonomialIdeal::minimalize(n, raw).unwrap();
            if ideal.is_unit() {
                continue;
            }
            let mut idx: Vec<usize> = (0..ideal.len()).collect();
            let mut any = false;
            loop {
                let order: Vec<Monomial> = idx.iter().map(|&i| ideal.gens()[i].clone()).collect();
                any |= verify_linear_quotients_order(&ideal, &order).unwrap();
                if any || !crate::graph::next_permutation(&mut idx) {
                    break;
                }
            }
            let found = find_linear_quotients_order(&ideal).unwrap();
            assert_eq!(found.is_some(), any, "{ideal}");
            if let Some(order) = found {
                assert!(verify_linear_quotients_order(&ideal, &order).unwrap());
                if ideal.generation_degree().is_some() {
                    assert!(has_linear_resolution(&ideal, Field::Rationals).unwrap(), "{ideal}");
                }
            }
        }
    }
}
