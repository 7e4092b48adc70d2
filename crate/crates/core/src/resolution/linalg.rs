//! Exact ranks of sparse boundary matrices.
//!
//! Columns are reduced left to right against earlier pivots keyed by their
//! largest nonzero row. Over `Z/p` this is plain modular elimination; over
//! `Q` it is fraction-free: `col ← p·col − c·pivot`, followed by division by
//! the content of the column. The `i128` path restarts on `BigInt` when an
//! intermediate would overflow.

use num_bigint::BigInt;

use super::Field;

/// A column-sparse matrix with entries in `{-1, 0, 1}`; rows sorted per column.
#[derive(Debug, Clone, Default)]
pub struct SignMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i8)>>,
}

impl SignMatrix {
    pub fn new(rows: usize) -> Self {
        SignMatrix { rows, cols: Vec::new() }
    }

    pub fn push_col(&mut self, mut col: Vec<(u32, i8)>) {
        col.sort_unstable_by_key(|&(r, _)| r);
        self.cols.push(col);
    }
}

pub fn rank(m: &SignMatrix, field: Field) -> usize {
    if m.cols.is_empty() || m.rows == 0 {
        return 0;
    }
    match field {
        Field::Prime(2) if m.rows <= 64 => rank_gf2_small(m),
        Field::Prime(2) => rank_gf2(m),
        Field::Prime(p) => rank_mod_p(m, p as u64),
        Field::Rationals => rank_rational::<i128>(m).unwrap_or_else(|| {
            rank_rational::<BigInt>(m).expect("BigInt arithmetic does not overflow")
        }),
    }
}

fn rank_gf2_small(m: &SignMatrix) -> usize {
    let mut pivots = [0u64; 64];
    let mut rank = 0;
    for col in &m.cols {
        let mut v = col.iter().fold(0u64, |acc, &(r, _)| acc | 1 << r);
        while v != 0 {
            let low = 63 - v.leading_zeros() as usize;
            if pivots[low] == 0 {
                pivots[low] = v;
                rank += 1;
                break;
            }
            v ^= pivots[low];
        }
    }
    rank
}

fn rank_gf2(m: &SignMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut v = vec![0u64; words];
        for &(r, _) in col {
            v[r as usize / 64] |= 1 << (r % 64);
        }
        loop {
            let Some(w) = (0..words).rev().find(|&w| v[w] != 0) else { break };
            let low = w * 64 + 63 - v[w].leading_zeros() as usize;
            match &pivots[low] {
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots[low] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rank_mod_p(m: &SignMatrix, p: u64) -> usize {
    // pivot columns are normalized so that their low entry is 1
    let mut pivots: Vec<Option<Vec<(u32, u64)>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut v: Vec<(u32, u64)> =
            col.iter().map(|&(r, s)| (r, if s > 0 { 1 } else { p - 1 })).collect();
        while let Some(&(low, c)) = v.last() {
            match &pivots[low as usize] {
                Some(piv) => v = axpy_mod(&v, piv, p - c, p),
                None => {
                    let inv = pow_mod(c, p - 2, p);
                    let normalized = v.iter().map(|&(r, x)| (r, x * inv % p)).collect();
                    pivots[low as usize] = Some(normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `a + s·b` over `Z/p` for sorted sparse vectors, dropping zeros.
fn axpy_mod(a: &[(u32, u64)], b: &[(u32, u64)], s: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * b[j].1 % p));
            j += 1;
        } else {
            let x = (a[i].1 + s * b[j].1) % p;
            if x != 0 {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Integer arithmetic with overflow detection (never fails for `BigInt`).
trait ExactInt: Clone + PartialEq + Sized {
    fn from_i8(v: i8) -> Self;
    fn is_zero(&self) -> bool;
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(a: &Self, b: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl ExactInt for i128 {
    fn from_i8(v: i8) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    /// `a·x − b·y`
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a as i128
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl ExactInt for BigInt {
    fn from_i8(v: i8) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        self.sign() == num_bigint::Sign::NoSign
    }
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.magnitude().clone(), b.magnitude().clone());
        while b != num_bigint::BigUint::from(0u8) {
            let r = &a % &b;
            a = b;
            b = r;
        }
        BigInt::from(a)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.magnitude() == &num_bigint::BigUint::from(1u8)
    }
}

fn rank_rational<T: ExactInt>(m: &SignMatrix) -> Option<usize> {
    let mut pivots: Vec<Option<Vec<(u32, T)>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut v: Vec<(u32, T)> = col.iter().map(|&(r, s)| (r, T::from_i8(s))).collect();
        while let Some((low, c)) = v.last().cloned() {
            match &pivots[low as usize] {
                Some(piv) => {
                    let pc = piv.last().expect("nonempty pivot").1.clone();
                    v = combine(&v, &pc, piv, &c)?;
                    primitive(&mut v);
                }
                None => {
                    pivots[low as usize] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// `p·a − c·b` on sorted sparse vectors, dropping zeros.
fn combine<T: ExactInt>(a: &[(u32, T)], p: &T, b: &[(u32, T)], c: &T) -> Option<Vec<(u32, T)>> {
    let zero = T::from_i8(0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (row, x, y) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            i += 1;
            (a[i - 1].0, &a[i - 1].1, &zero)
        } else if i == a.len() || b[j].0 < a[i].0 {
            j += 1;
            (b[j - 1].0, &zero, &b[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, &a[i - 1].1, &b[j - 1].1)
        };
        let val = T::lin(p, x, c, y)?;
        if !val.is_zero() {
            out.push((row, val));
        }
    }
    Some(out)
}

fn primitive<T: ExactInt>(v: &mut [(u32, T)]) {
    let Some(first) = v.first() else { return };
    let mut g = first.1.clone();
    for (_, x) in v.iter().skip(1) {
        if g.is_unit() {
            return;
        }
        g = T::gcd(&g, x);
    }
    let g = T::gcd(&g, &g);
    if !g.is_unit() && !g.is_zero() {
        for (_, x) in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
}
