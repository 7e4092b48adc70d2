//! Exact monomial and monomial-ideal arithmetic.
//!
//! A [`MonomialIdeal`] is always stored by its minimal generating set in
//! canonical order (total degree, then ascending lexicographic order of the
//! exponent vectors), so two ideals are equal iff their generator lists are.
//!
//! Zero and unit ideals are ordinary values. Their behaviour:
//!
//! | operation                 | zero `(0)`          | unit `(1)`                      |
//! |---------------------------|---------------------|---------------------------------|
//! | `sum(a, b)`               | returns the other   | unit                            |
//! | `product(a, b)`           | zero                | returns the other               |
//! | `power(a, k)`, `k >= 1`   | zero                | unit                            |
//! | `intersect(a, b)`         | zero                | returns the other               |
//! | `colon(a, m)`             | zero                | unit                            |
//! | `complementary_ideal`     | zero                | `(x_1…x_n)`                     |
//! | `boundary`                | zero                | zero (the unit has no support)  |
//! | minimal primes / dual / symbolic power | rejected | rejected                     |
//!
//! Variables are labeled `1..=n` in the public API; exponent vectors are
//! positional (`exponents()[i]` is the exponent of `x_{i+1}`).

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Guard, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn one(ambient: usize) -> Self {
        Monomial { exps: vec![0; ambient] }
    }

    /// The variable `x_i`, `i` in `1..=ambient`.
    pub fn var(ambient: usize, i: usize) -> Self {
        let mut exps = vec![0; ambient];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    /// `x_F` for a set of 1-based variable labels (`x_∅ = 1`).
    pub fn from_support(ambient: usize, vars: &[usize]) -> Self {
        let mut exps = vec![0; ambient];
        for &v in vars {
            exps[v - 1] = 1;
        }
        Monomial { exps }
    }

    /// `x_F` for a bitmask with bit `i - 1` standing for `x_i`.
    pub fn from_mask(ambient: usize, mask: u64) -> Self {
        Monomial { exps: (0..ambient).map(|i| (mask >> i & 1) as u16).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// `deg_{x_i}`, 1-based.
    pub fn deg_var(&self, i: usize) -> u16 {
        self.exps[i - 1]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// The variable label when the monomial is a single variable.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(i + 1),
                _ => return None,
            }
        }
        found
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i + 1).collect()
    }

    /// Support as a bitmask; requires `ambient <= 64`.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.exps.len() <= 64);
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect() }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b))
            .collect::<Option<Vec<u16>>>()
            .ok_or_else(|| Error::guard(Guard::Exponent, format!("{self} * {other}")))?;
        Ok(Monomial { exps })
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.checked_sub(b)).collect::<Option<Vec<u16>>>()?;
        Some(Monomial { exps })
    }

    /// `u : v = u / gcd(u, v)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.saturating_sub(b)).collect() }
    }

    /// `x_i * self`, 1-based.
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Monomial { exps }
    }

    /// `self / x_i` when `x_i` divides `self`.
    pub fn over_var(&self, i: usize) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        exps[i - 1] = exps[i - 1].checked_sub(1)?;
        Some(Monomial { exps })
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&e| u16::try_from(e as u32 * k).ok())
            .collect::<Option<Vec<u16>>>()
            .ok_or_else(|| Error::guard(Guard::Exponent, format!("({self})^{k}")))?;
        Ok(Monomial { exps })
    }

    /// Parses `x1 x3^2` style text; `1` is the unit monomial.
    pub fn parse(text: &str, ambient: usize) -> Result<Monomial> {
        let bad = |msg: String| Error::Parse { line: 0, msg };
        let mut exps = vec![0u16; ambient];
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial { exps });
        }
        for factor in text.split(|c: char| c.is_whitespace() || c == '*').filter(|s| !s.is_empty()) {
            let body = factor.strip_prefix('x').ok_or_else(|| bad(format!("bad factor `{factor}`")))?;
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (v, e.parse::<u16>().map_err(|_| bad(format!("bad exponent in `{factor}`")))?),
                None => (body, 1),
            };
            let var: usize = var.parse().map_err(|_| bad(format!("bad variable in `{factor}`")))?;
            if var == 0 || var > ambient {
                return Err(bad(format!("variable x{var} outside x1..x{ambient}")));
            }
            exps[var - 1] = exps[var - 1]
                .checked_add(exp)
                .ok_or_else(|| Error::guard(Guard::Exponent, factor.to_string()))?;
        }
        Ok(Monomial { exps })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The prime `P_F = (x_i : i ∈ F)` for a nonempty variable set `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport {
    ambient: usize,
    vars: Vec<usize>,
}

impl PrimeSupport {
    pub fn new(ambient: usize, vars: &[usize]) -> Result<Self> {
        let mut vars = vars.to_vec();
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::invalid("P_F needs a nonempty F"));
        }
        if vars[0] == 0 || *vars.last().unwrap() > ambient {
            return Err(Error::invalid(format!("prime support {vars:?} outside 1..={ambient}")));
        }
        Ok(PrimeSupport { ambient, vars })
    }

    pub(crate) fn from_mask(ambient: usize, mask: u64) -> Self {
        let vars = (0..ambient).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        PrimeSupport { ambient, vars }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn mask(&self) -> u64 {
        self.vars.iter().fold(0, |m, &v| m | 1 << (v - 1))
    }

    /// `x_F`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_support(self.ambient, &self.vars)
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let gens = self.vars.iter().map(|&v| Monomial::var(self.ambient, v)).collect();
        MonomialIdeal::from_canonical(self.ambient, gens)
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vars.iter().map(|v| format!("x{v}")).collect();
        write!(f, "({})", names.join(", "))
    }
}

/// How [`MonomialIdeal::polarize`] laid out the new variables: variable
/// `x_i` (1-based) became the positions `blocks[i - 1]` of the new ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    pub blocks: Vec<std::ops::Range<usize>>,
}

impl Polarization {
    pub fn new_ambient(&self) -> usize {
        self.blocks.last().map_or(0, |b| b.end)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

/// JSON form `{"n": n, "gens": [[e1, …, en], …]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<u16>>,
}

impl MonomialIdeal {
    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: vec![Monomial::one(ambient)] }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal { ambient: m.ambient(), gens: vec![m] }
    }

    /// Canonical minimal generating set of the ideal generated by `raw`:
    /// drops monomials divisible by another, removes duplicates, sorts.
    pub fn minimalize(ambient: usize, raw: Vec<Monomial>) -> Result<Self> {
        if let Some(m) = raw.iter().find(|m| m.ambient() != ambient) {
            return Err(Error::AmbientMismatch(ambient, m.ambient()));
        }
        Ok(Self::minimalize_unchecked(ambient, raw))
    }

    fn minimalize_unchecked(ambient: usize, mut raw: Vec<Monomial>) -> Self {
        raw.sort_unstable();
        raw.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(raw.len());
        // Sorted by degree: any proper divisor of a candidate comes earlier.
        for m in raw {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        MonomialIdeal { ambient, gens }
    }

    /// Wraps a list already known to be minimal; only sorts it.
    pub(crate) fn from_canonical(ambient: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_unstable();
        debug_assert!(gens.windows(2).all(|w| w[0] != w[1]));
        MonomialIdeal { ambient, gens }
    }

    pub fn from_gens(ambient: usize, gens: Vec<Monomial>) -> Result<Self> {
        Self::minimalize(ambient, gens)
    }

    /// Convenience constructor from 1-based supports of squarefree generators.
    pub fn from_supports(ambient: usize, supports: &[&[usize]]) -> Self {
        let gens = supports.iter().map(|s| Monomial::from_support(ambient, s)).collect();
        Self::minimalize_unchecked(ambient, gens)
    }

    /// Convenience constructor from exponent vectors.
    pub fn from_exponents(ambient: usize, exps: &[&[u16]]) -> Result<Self> {
        let gens = exps.iter().map(|e| Monomial::new(e.to_vec())).collect();
        Self::minimalize(ambient, gens)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// The common generator degree, if all generators share one.
    pub fn generation_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.last().map(Monomial::degree)
    }

    /// `supp(I)` as 1-based labels.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.ambient).filter(|&i| self.gens.iter().any(|g| g.deg_var(i) > 0)).collect()
    }

    /// lcm of all generators (the unit monomial for the zero ideal).
    pub fn lcm_all(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(self.ambient), |acc, g| acc.lcm(g))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    fn require_squarefree(&self, op: &str) -> Result<()> {
        if !self.is_squarefree() {
            return Err(Error::invalid(format!("{op} needs a squarefree ideal")));
        }
        Ok(())
    }

    fn require_proper_nonzero(&self, op: &str) -> Result<()> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::invalid(format!("{op} needs a nonzero proper ideal")));
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let raw = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::minimalize_unchecked(self.ambient, raw))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                raw.push(u.mul(v)?);
            }
        }
        Ok(Self::minimalize_unchecked(self.ambient, raw))
    }

    /// `m * self`.
    pub fn times(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.ambient() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, m.ambient()));
        }
        let gens = self.gens.iter().map(|g| g.mul(m)).collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::from_canonical(self.ambient, gens))
    }

    /// `self^k`; `self^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.ambient);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                raw.push(u.lcm(v));
            }
        }
        Ok(Self::minimalize_unchecked(self.ambient, raw))
    }

    /// `self : (m)`, generated by `u / gcd(u, m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.ambient() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, m.ambient()));
        }
        let raw = self.gens.iter().map(|u| u.colon(m)).collect();
        Ok(Self::minimalize_unchecked(self.ambient, raw))
    }

    /// `I_c(I) = (x_[n] / u : u ∈ G(I))` for squarefree `I`. The image of a
    /// minimal generating set is again minimal, so no re-minimalization is
    /// needed. `I_c((0)) = (0)` and `I_c((1)) = (x_[n])`.
    pub fn complementary_ideal(&self) -> Result<MonomialIdeal> {
        self.require_squarefree("the complementary ideal")?;
        let gens = self.gens.iter().map(|u| Monomial::new(u.exps.iter().map(|&e| 1 - e).collect())).collect();
        Ok(MonomialIdeal::from_canonical(self.ambient, gens))
    }

    /// Inclusion-minimal variable sets meeting the support of every
    /// generator, i.e. the minimal primes of a squarefree ideal. Sorted
    /// lexicographically by their variable lists.
    pub fn squarefree_minimal_primes(&self) -> Result<Vec<PrimeSupport>> {
        self.require_squarefree("minimal primes")?;
        self.require_proper_nonzero("minimal primes")?;
        if self.ambient > 64 {
            return Err(Error::invalid("minimal primes support at most 64 variables"));
        }
        let edges: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        let mut found = Vec::new();
        transversals(&edges, 0, 0, &mut found);
        found.sort_unstable_by_key(|m: &u64| m.count_ones());
        let mut minimal: Vec<u64> = Vec::with_capacity(found.len());
        for t in found {
            if !minimal.iter().any(|&s| s & t == s) {
                minimal.push(t);
            }
        }
        let mut primes: Vec<PrimeSupport> = minimal.into_iter().map(|m| PrimeSupport::from_mask(self.ambient, m)).collect();
        primes.sort_unstable_by(|a, b| a.vars.cmp(&b.vars));
        Ok(primes)
    }

    /// `I^∨ = (x_F : P_F minimal prime of I)`.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        let primes = self.squarefree_minimal_primes()?;
        let gens = primes.iter().map(PrimeSupport::monomial).collect();
        Ok(MonomialIdeal::from_canonical(self.ambient, gens))
    }

    /// `I^(k) = ⋂ P_F^k` over the minimal primes of a squarefree ideal.
    pub fn symbolic_power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::invalid("symbolic powers need k >= 1"));
        }
        let primes = self.squarefree_minimal_primes()?;
        intersect_prime_powers(self.ambient, &primes, k)
    }

    /// `∂I = (u / x_i : u ∈ G(I), i ∈ supp(u))`.
    pub fn boundary(&self) -> MonomialIdeal {
        let mut raw = Vec::new();
        for u in &self.gens {
            for i in u.support() {
                raw.push(u.over_var(i).expect("i in support"));
            }
        }
        Self::minimalize_unchecked(self.ambient, raw)
    }

    /// Standard polarization. Each variable `x_i` gets a block of
    /// `max(1, max_deg_i)` new variables and `x_i^e` becomes the product of
    /// the first `e` of them, so squarefree ideals map to themselves.
    pub fn polarize(&self) -> Result<(MonomialIdeal, Polarization)> {
        if self.is_zero() {
            return Err(Error::invalid("cannot polarize the zero ideal"));
        }
        let lcm = self.lcm_all();
        let mut blocks = Vec::with_capacity(self.ambient);
        let mut start = 0;
        for &e in lcm.exponents() {
            let size = (e as usize).max(1);
            blocks.push(start..start + size);
            start += size;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0u16; start];
                for (i, &e) in g.exponents().iter().enumerate() {
                    for p in blocks[i].start..blocks[i].start + e as usize {
                        exps[p] = 1;
                    }
                }
                Monomial::new(exps)
            })
            .collect();
        Ok((MonomialIdeal::minimalize_unchecked(start, gens), Polarization { blocks }))
    }

    /// Text form: one generator per line.
    pub fn to_text(&self) -> String {
        self.gens.iter().map(|g| format!("{g}\n")).collect()
    }

    /// Parses the text form; blank lines and `#` comment lines are skipped.
    pub fn parse_text(text: &str, ambient: usize) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let m = Monomial::parse(line, ambient).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: lineno + 1, msg },
                other => other,
            })?;
            gens.push(m);
        }
        Ok(Self::minimalize_unchecked(ambient, gens))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson { n: self.ambient, gens: self.gens.iter().map(|g| g.exps.clone()).collect() }
    }

    pub fn from_json(json: &IdealJson) -> Result<MonomialIdeal> {
        if let Some(g) = json.gens.iter().find(|g| g.len() != json.n) {
            return Err(Error::AmbientMismatch(json.n, g.len()));
        }
        let gens = json.gens.iter().map(|g| Monomial::new(g.clone())).collect();
        Ok(Self::minimalize_unchecked(json.n, gens))
    }

    /// `(g1, g2, …)` on one line.
    pub fn display_inline(&self) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string().replace(' ', "")).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_inline())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {} vars", self.display_inline(), self.ambient)
    }
}

/// `⋂_F P_F^k` over the given primes (the unit ideal for an empty list).
pub fn intersect_prime_powers(ambient: usize, primes: &[PrimeSupport], k: u32) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(ambient);
    for p in primes {
        acc = acc.intersect(&p.ideal().power(k)?)?;
    }
    Ok(acc)
}

/// `⋂_F P_F` over the given primes (the unit ideal for an empty list).
pub fn intersect_primes(ambient: usize, primes: &[PrimeSupport]) -> Result<MonomialIdeal> {
    intersect_prime_powers(ambient, primes, 1)
}

/// Branch-and-prune enumeration of transversals of the hypergraph `edges`.
/// Every minimal transversal is emitted (possibly alongside non-minimal ones).
fn transversals(edges: &[u64], chosen: u64, forbidden: u64, out: &mut Vec<u64>) {
    let mut pick: Option<u64> = None;
    for &e in edges {
        if e & chosen != 0 {
            continue;
        }
        let avail = e & !forbidden;
        if avail == 0 {
            return;
        }
        if pick.map_or(true, |p| avail.count_ones() < p.count_ones()) {
            pick = Some(avail);
        }
    }
    let Some(mut avail) = pick else {
        out.push(chosen);
        return;
    };
    let mut forb = forbidden;
    while avail != 0 {
        let v = avail & avail.wrapping_neg();
        avail &= avail - 1;
        transversals(edges, chosen | v, forb, out);
        forb |= v;
    }
}

/// Used by tests that need a quick hash-set view of generators.
pub(crate) fn gen_set(ideal: &MonomialIdeal) -> HashSet<&Monomial> {
    ideal.gens.iter().collect()
}
