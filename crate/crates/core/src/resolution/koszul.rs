//! Multigraded Betti numbers from upper Koszul simplicial complexes.
//!
//! For a multidegree `a`, `K^a(I)` is the complex of squarefree sets
//! `τ ⊆ supp(a)` with `x^(a−τ) ∈ I`, and `β_{i,a}(I) = dim H̃_{i−1}(K^a(I))`.
//! The Betti numbers vanish unless `a` is the lcm of some set of generators:
//! if `a_v` exceeds the exponent of `x_v` in every generator dividing `x^a`,
//! then `v` is a cone point of `K^a(I)`.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::linalg::{rank, SignMatrix};
use super::Field;
use crate::error::{Error, Guard, Result};
use crate::monomial::{Monomial, MonomialIdeal};

pub const MAX_LATTICE: usize = 1 << 20;
pub const MAX_MATRIX_ENTRIES: usize = 4_000_000;
const MAX_BOX: usize = 1 << 22;

/// Membership and divisor counts for monomials dividing `lcm(I)`.
enum Oracle<'a> {
    /// `counts[idx(b)]` is the number of generators dividing `x^b`.
    Box { strides: Vec<usize>, counts: Vec<u32> },
    Scan(&'a [Monomial]),
}

impl<'a> Oracle<'a> {
    fn new(ideal: &'a MonomialIdeal) -> Self {
        let lcm = ideal.lcm_all();
        let dims: Vec<usize> = lcm.exponents().iter().map(|&e| e as usize + 1).collect();
        let size = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d).filter(|&s| s <= MAX_BOX));
        let Some(size) = size else { return Oracle::Scan(ideal.gens()) };
        let mut strides = Vec::with_capacity(dims.len());
        let mut s = 1;
        for &d in &dims {
            strides.push(s);
            s *= d;
        }
        let mut counts = vec![0u32; size];
        for g in ideal.gens() {
            let idx: usize = g.exponents().iter().zip(&strides).map(|(&e, &st)| e as usize * st).sum();
            counts[idx] += 1;
        }
        // prefix sums along every axis turn indicators into divisor counts
        for (axis, &d) in dims.iter().enumerate() {
            let st = strides[axis];
            if d == 1 {
                continue;
            }
            for idx in 0..size {
                if (idx / st) % d != 0 {
                    counts[idx] += counts[idx - st];
                }
            }
        }
        Oracle::Box { strides, counts }
    }

    fn index(&self, exps: &[u16]) -> usize {
        match self {
            Oracle::Box { strides, .. } => exps.iter().zip(strides).map(|(&e, &s)| e as usize * s).sum(),
            Oracle::Scan(_) => 0,
        }
    }

    fn count(&self, exps: &[u16]) -> u32 {
        match self {
            Oracle::Box { counts, .. } => counts[self.index(exps)],
            Oracle::Scan(gens) => {
                gens.iter().filter(|g| g.exponents().iter().zip(exps).all(|(a, b)| a <= b)).count() as u32
            }
        }
    }

    fn contains(&self, exps: &[u16]) -> bool {
        self.count(exps) > 0
    }

    /// Every element of the lcm lattice other than the empty lcm.
    fn lattice(&self, ideal: &MonomialIdeal) -> Result<Vec<Vec<u16>>> {
        match self {
            Oracle::Box { counts, strides } => {
                // x^a is an lcm of generators iff for each v in supp(a) some
                // generator dividing x^a has full exponent a_v there, i.e. the
                // divisor count drops when a_v is decreased.
                let lcm = ideal.lcm_all();
                let n = lcm.ambient();
                let mut out = Vec::new();
                let mut exps = vec![0u16; n];
                for (idx, &c) in counts.iter().enumerate() {
                    if c > 0 && (0..n).all(|v| exps[v] == 0 || counts[idx - strides[v]] < c) {
                        out.push(exps.clone());
                        if out.len() > MAX_LATTICE {
                            return Err(lattice_guard());
                        }
                    }
                    // odometer step in the same order as the flat index
                    for v in 0..n {
                        if exps[v] < lcm.exponents()[v] {
                            exps[v] += 1;
                            break;
                        }
                        exps[v] = 0;
                    }
                }
                Ok(out)
            }
            Oracle::Scan(gens) => {
                let mut seen: HashSet<Vec<u16>> = gens.iter().map(|g| g.exponents().to_vec()).collect();
                let mut frontier: Vec<Vec<u16>> = seen.iter().cloned().collect();
                while let Some(m) = frontier.pop() {
                    for g in gens.iter() {
                        let l: Vec<u16> = m.iter().zip(g.exponents()).map(|(a, b)| *a.max(b)).collect();
                        if seen.insert(l.clone()) {
                            if seen.len() > MAX_LATTICE {
                                return Err(lattice_guard());
                            }
                            frontier.push(l);
                        }
                    }
                }
                Ok(seen.into_iter().collect())
            }
        }
    }
}

fn lattice_guard() -> Error {
    Error::guard(Guard::LcmLattice, format!("more than {MAX_LATTICE} lcm-lattice elements"))
}

/// Faces of `K^a(I)` grouped by size, each level sorted; faces are bitmasks
/// over the positions of `supp(a)`. Narrow complexes also get a dense
/// membership table indexed by face.
struct Faces {
    levels: Vec<Vec<u64>>,
    dense: Option<Vec<bool>>,
}

const DENSE_WIDTH: usize = 16;

fn faces(oracle: &Oracle, a: &[u16], support: &[usize]) -> Faces {
    let width = support.len();
    let mut dense = (width <= DENSE_WIDTH).then(|| vec![false; 1 << width]);
    if let Some(d) = dense.as_mut() {
        d[0] = true;
    }
    let mut levels: Vec<Vec<u64>> = vec![vec![0]];
    // each face carries the flat box index of x^(a − τ) when one exists
    let strides: Option<Vec<usize>> = match oracle {
        Oracle::Box { strides, .. } => Some(support.iter().map(|&v| strides[v]).collect()),
        Oracle::Scan(_) => None,
    };
    let mut current: Vec<(u64, usize)> = vec![(0, oracle.index(a))];
    let mut scratch = a.to_vec();
    loop {
        let mut next: Vec<(u64, usize)> = Vec::new();
        for &(tau, idx) in &current {
            let start = if tau == 0 { 0 } else { 64 - tau.leading_zeros() as usize };
            for p in start..width {
                let sigma = tau | 1 << p;
                let member = match (&strides, oracle) {
                    (Some(st), Oracle::Box { counts, .. }) => {
                        let j = idx - st[p];
                        (counts[j] > 0).then_some(j)
                    }
                    _ => {
                        for (q, &v) in support.iter().enumerate() {
                            scratch[v] = a[v] - ((sigma >> q) & 1) as u16;
                        }
                        oracle.contains(&scratch).then_some(0)
                    }
                };
                if let Some(j) = member {
                    next.push((sigma, j));
                }
            }
        }
        if next.is_empty() {
            return Faces { levels, dense };
        }
        next.sort_unstable_by_key(|&(f, _)| f);
        if let Some(d) = dense.as_mut() {
            for &(f, _) in &next {
                d[f as usize] = true;
            }
        }
        levels.push(next.iter().map(|&(f, _)| f).collect());
        current = next;
    }
}

/// Reduced homology dimensions `dim H̃_{s−1}` indexed by `s`, for a complex
/// given by its face levels (`levels[s]` holds faces with `s` vertices).
pub(crate) fn reduced_homology(levels: &[Vec<u64>], field: Field) -> Result<Vec<u64>> {
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = vec![0usize; levels.len() + 1];
    for s in 1..levels.len() {
        let (lower, upper) = (&levels[s - 1], &levels[s]);
        if lower.len().saturating_mul(upper.len()) > MAX_MATRIX_ENTRIES {
            return Err(Error::guard(
                Guard::BoundaryMatrix,
                format!("{}×{} boundary matrix", lower.len(), upper.len()),
            ));
        }
        let mut m = SignMatrix::new(lower.len());
        for &sigma in upper {
            let mut col = Vec::with_capacity(s);
            let mut bits = sigma;
            let mut pos = 0;
            while bits != 0 {
                let bit = bits & bits.wrapping_neg();
                let row = lower.binary_search(&(sigma ^ bit)).expect("complex is downward closed");
                col.push((row as u32, if pos % 2 == 0 { 1 } else { -1 }));
                bits ^= bit;
                pos += 1;
            }
            m.push_col(col);
        }
        ranks[s] = rank(&m, field);
    }
    Ok((0..levels.len()).map(|s| (levels[s].len() - ranks[s] - ranks[s + 1]) as u64).collect())
}

/// Cone points make the complex acyclic; cheap to test before any rank work.
fn has_cone_point(faces: &Faces, width: usize) -> bool {
    let all = faces.levels.iter().flatten();
    match &faces.dense {
        Some(d) => (0..width).any(|p| {
            let bit = 1u64 << p;
            all.clone().all(|&f| f & bit != 0 || d[(f | bit) as usize])
        }),
        None => {
            let set: HashSet<u64> = all.copied().collect();
            (0..width).any(|p| {
                let bit = 1u64 << p;
                set.iter().all(|&f| f & bit != 0 || set.contains(&(f | bit)))
            })
        }
    }
}

/// Multigraded Betti numbers `β_{i,a}` keyed by `(i, a)`.
pub fn multigraded(ideal: &MonomialIdeal, field: Field) -> Result<BTreeMap<(usize, Vec<u16>), u64>> {
    if ideal.ambient() > 64 {
        return Err(Error::invalid("the Betti engine supports at most 64 variables"));
    }
    let oracle = Oracle::new(ideal);
    let lattice = oracle.lattice(ideal)?;
    let per_point: Vec<Result<Vec<(usize, Vec<u16>, u64)>>> = lattice
        .par_iter()
        .map(|a| {
            let support: Vec<usize> = (0..a.len()).filter(|&v| a[v] > 0).collect();
            let faces = faces(&oracle, a, &support);
            if faces.levels.len() > 1 && has_cone_point(&faces, support.len()) {
                return Ok(Vec::new());
            }
            let h = reduced_homology(&faces.levels, field)?;
            Ok(h.into_iter().enumerate().filter(|&(_, b)| b > 0).map(|(i, b)| (i, a.clone(), b)).collect())
        })
        .collect();
    let mut out = BTreeMap::new();
    for r in per_point {
        for (i, a, b) in r? {
            out.insert((i, a), b);
        }
    }
    Ok(out)
}

/// The lattice restricted to generators as seen by the oracle, for tests.
#[cfg(test)]
pub(crate) fn lattice_of(ideal: &MonomialIdeal, force_scan: bool) -> Result<Vec<Vec<u16>>> {
    let oracle = if force_scan { Oracle::Scan(ideal.gens()) } else { Oracle::new(ideal) };
    let mut l = oracle.lattice(ideal)?;
    l.sort();
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_complexes() {
        // {∅}: one face of size 0, homology in degree −1
        assert_eq!(reduced_homology(&[vec![0]], Field::Rationals).unwrap(), vec![1]);
        // void complex: nothing at all
        assert_eq!(reduced_homology(&[], Field::Rationals).unwrap(), Vec::<u64>::new());
        // two points
        assert_eq!(reduced_homology(&[vec![0], vec![1, 2]], Field::Rationals).unwrap(), vec![0, 1]);
        // hollow triangle
        let h = reduced_homology(&[vec![0], vec![1, 2, 4], vec![3, 5, 6]], Field::Prime(2)).unwrap();
        assert_eq!(h, vec![0, 0, 1]);
    }

    /// Brute-force lattice: lcms of every nonempty subset of generators.
    #[test]
    fn lattice_routes_agree_with_subsets() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(1..5);
            let k = rng.gen_range(1..6);
            let raw: Vec<Monomial> =
                (0..k).map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..3)).collect())).collect();
            let ideal = MonomialIdeal::minimalize(n, raw).unwrap();
            let g = ideal.gens();
            let mut brute: Vec<Vec<u16>> = (1u32..1 << g.len())
                .map(|s| {
                    (0..g.len())
                        .filter(|&i| s >> i & 1 == 1)
                        .fold(Monomial::one(n), |acc, i| acc.lcm(&g[i]))
                        .exponents()
                        .to_vec()
                })
                .collect();
            brute.sort();
            brute.dedup();
            assert_eq!(lattice_of(&ideal, false).unwrap(), brute, "{ideal}");
            assert_eq!(lattice_of(&ideal, true).unwrap(), brute, "{ideal}");
        }
    }
}
