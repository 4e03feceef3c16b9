//! Minimum distance: exhaustive enumeration, randomized information-set
//! search and closed-form bounds.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::case::{BaseFactor, GeneratorShape};
use super::CyclicCode;
use crate::arith::ceil_sqrt;
use crate::cyclotomy::WhitemanCyclotomy;
use crate::error::{Error, Result};

/// Default cap on the number of codewords enumerated exhaustively.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistanceMethod {
    Exhaustive,
    /// `(x^n - 1)/(x^{n_i} - 1)`: distance is the other prime.
    ComponentCode,
    /// `(x^n - 1)(x - 1)/((x^{n1} - 1)(x^{n2} - 1))`: distance is `min(n1, n2)`.
    JointComponentCode,
    SqrtBound,
    QuadraticBound,
    /// `n - k + 1`, when nothing better applies.
    SingletonBound,
    RandomSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceInfo {
    pub exact: Option<u64>,
    pub lower: u64,
    pub upper: u64,
    pub method: DistanceMethod,
    /// A codeword of weight `upper`, when one was found.
    pub witness: Option<Vec<u32>>,
}

impl DistanceInfo {
    fn exact(d: u64, method: DistanceMethod, witness: Option<Vec<u32>>) -> Self {
        Self {
            exact: Some(d),
            lower: d,
            upper: d,
            method,
            witness,
        }
    }

    /// Tighten with another source of information about the same code.
    pub fn combine(mut self, other: &DistanceInfo) -> Self {
        if other.lower > self.lower {
            self.lower = other.lower;
        }
        if other.upper < self.upper {
            self.upper = other.upper;
            self.witness = other.witness.clone();
            self.method = other.method;
        }
        if self.lower == self.upper {
            self.exact = Some(self.lower);
        }
        self
    }
}

fn weight(word: &[u32]) -> u64 {
    word.iter().filter(|&&c| c != 0).count() as u64
}

fn codeword_count(q: u32, k: usize) -> u128 {
    (q as u128)
        .checked_pow(k as u32)
        .map(|v| v - 1)
        .unwrap_or(u128::MAX)
}

/// Minimum nonzero weight over all `q^k - 1` nonzero codewords.
pub fn min_distance_exact(code: &CyclicCode, budget: u128) -> Result<DistanceInfo> {
    let k = code.k();
    if k == 0 {
        return Err(Error::ZeroDimension);
    }
    let needed = codeword_count(code.q(), k);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let (d, witness) = if code.q() == 2 {
        exhaustive_binary(code)
    } else {
        exhaustive_qary(code)
    };
    Ok(DistanceInfo::exact(d, DistanceMethod::Exhaustive, Some(witness)))
}

type Bits = Vec<u64>;

fn pack(word: &[u32]) -> Bits {
    let mut bits = vec![0u64; word.len().div_ceil(64)];
    for (i, &c) in word.iter().enumerate() {
        if c != 0 {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    bits
}

fn unpack(bits: &[u64], n: usize) -> Vec<u32> {
    (0..n).map(|i| ((bits[i / 64] >> (i % 64)) & 1) as u32).collect()
}

fn xor_into(acc: &mut [u64], row: &[u64]) {
    for (a, r) in acc.iter_mut().zip(row) {
        *a ^= r;
    }
}

fn popcount(bits: &[u64]) -> u64 {
    bits.iter().map(|w| w.count_ones() as u64).sum()
}

// Gray-code walk: each step flips one message bit, i.e. adds one row.
// The top bits select a chunk; chunks run in parallel.
fn exhaustive_binary(code: &CyclicCode) -> (u64, Vec<u32>) {
    let n = code.n();
    let k = code.k();
    let rows: Vec<Bits> = code.generator_rows().iter().map(|r| pack(r)).collect();
    let top = k.min(6);
    let low = k - top;
    let best = (0u64..1 << top)
        .into_par_iter()
        .map(|chunk| {
            let mut cw = vec![0u64; n.div_ceil(64)];
            for b in 0..top {
                if chunk >> b & 1 == 1 {
                    xor_into(&mut cw, &rows[low + b]);
                }
            }
            let mut best: Option<(u64, Bits)> = None;
            let mut consider = |cw: &Bits| {
                let w = popcount(cw);
                if w > 0 && best.as_ref().map_or(true, |(bw, _)| w < *bw) {
                    best = Some((w, cw.clone()));
                }
            };
            consider(&cw);
            for t in 1u64..1 << low {
                xor_into(&mut cw, &rows[t.trailing_zeros() as usize]);
                consider(&cw);
            }
            best
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .min_by_key(|(w, _)| *w)
        .expect("k >= 1 gives a nonzero codeword");
    (best.0, unpack(&best.1, n))
}

// Modular Gray code over GF(q): step t adds row i, where i is the number of
// trailing zero base-q digits of t. This visits every nonzero message once.
fn exhaustive_qary(code: &CyclicCode) -> (u64, Vec<u32>) {
    let n = code.n();
    let k = code.k();
    let f = code.field();
    let q = f.p() as u128;
    let g = code.generator().coeffs().to_vec();
    let mut cw = vec![0u32; n];
    let mut w = 0u64;
    let mut best: Option<(u64, Vec<u32>)> = None;
    let total = q.pow(k as u32);
    for t in 1..total {
        let mut i = 0usize;
        let mut x = t;
        while x % q == 0 {
            x /= q;
            i += 1;
        }
        for (j, &gj) in g.iter().enumerate() {
            if gj == 0 {
                continue;
            }
            let pos = i + j;
            let old = cw[pos];
            let new = f.add(old, gj);
            cw[pos] = new;
            w = w + u64::from(new != 0) - u64::from(old != 0);
        }
        if w > 0 && best.as_ref().map_or(true, |(bw, _)| w < *bw) {
            best = Some((w, cw.clone()));
        }
    }
    best.expect("k >= 1 gives a nonzero codeword")
}

/// Randomized information-set search. Each trial permutes the coordinates,
/// brings the generator matrix to systematic form on the first `k` pivot
/// positions found, and inspects every row and every sum `r_i + c r_j`.
/// Trial `t` draws from the ChaCha8 stream `t` of `seed`, so the result does
/// not depend on thread scheduling.
pub fn min_distance_upper(code: &CyclicCode, trials: usize, seed: u64) -> Result<DistanceInfo> {
    let k = code.k();
    if k == 0 {
        return Err(Error::ZeroDimension);
    }
    let n = code.n();
    let rows = code.generator_rows();
    let gen_weight = weight(code.generator().coeffs());
    let initial = (gen_weight, rows[0].clone());
    let binary = code.q() == 2;
    let packed: Vec<Bits> = if binary { rows.iter().map(|r| pack(r)).collect() } else { Vec::new() };
    let best = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            if binary {
                isd_trial_binary(&packed, &perm, n)
            } else {
                isd_trial_qary(code, &rows, &perm)
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(initial, |acc, cand| if cand.0 < acc.0 { cand } else { acc });
    Ok(DistanceInfo {
        exact: None,
        lower: 1,
        upper: best.0,
        method: DistanceMethod::RandomSearch,
        witness: Some(best.1),
    })
}

fn isd_trial_binary(rows: &[Bits], perm: &[usize], n: usize) -> (u64, Vec<u32>) {
    let mut m: Vec<Bits> = rows.to_vec();
    let k = m.len();
    let mut r = 0;
    for &col in perm {
        if r == k {
            break;
        }
        let (w, b) = (col / 64, col % 64);
        let Some(piv) = (r..k).find(|&i| m[i][w] >> b & 1 == 1) else {
            continue;
        };
        m.swap(r, piv);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[w] >> b & 1 == 1 {
                xor_into(row, &pivot_row);
            }
        }
        r += 1;
    }
    let mut best = (u64::MAX, 0usize, usize::MAX);
    for i in 0..k {
        let wi = popcount(&m[i]);
        if wi < best.0 {
            best = (wi, i, usize::MAX);
        }
        for j in i + 1..k {
            let wij: u64 = m[i]
                .iter()
                .zip(&m[j])
                .map(|(a, b)| (a ^ b).count_ones() as u64)
                .sum();
            if wij < best.0 {
                best = (wij, i, j);
            }
        }
    }
    let mut word = m[best.1].clone();
    if best.2 != usize::MAX {
        xor_into(&mut word, &m[best.2]);
    }
    (best.0, unpack(&word, n))
}

fn isd_trial_qary(code: &CyclicCode, rows: &[Vec<u32>], perm: &[usize]) -> (u64, Vec<u32>) {
    let f = code.field();
    let q = f.p();
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let k = m.len();
    let mut r = 0;
    for &col in perm {
        if r == k {
            break;
        }
        let Some(piv) = (r..k).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = f.inv(m[r][col]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            let c = row[col];
            if i != r && c != 0 {
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(c, p));
                }
            }
        }
        r += 1;
    }
    let mut best = (u64::MAX, 0usize, usize::MAX, 0u32);
    for i in 0..k {
        let wi = weight(&m[i]);
        if wi < best.0 {
            best = (wi, i, usize::MAX, 0);
        }
        for j in i + 1..k {
            for c in 1..q {
                let wij = m[i]
                    .iter()
                    .zip(&m[j])
                    .filter(|&(&a, &b)| f.add(a, f.mul(c, b)) != 0)
                    .count() as u64;
                if wij < best.0 {
                    best = (wij, i, j, c);
                }
            }
        }
    }
    let mut word = m[best.1].clone();
    if best.2 != usize::MAX {
        for (x, &b) in word.iter_mut().zip(&m[best.2]) {
            *x = f.add(*x, f.mul(best.3, b));
        }
    }
    (best.0, word)
}

/// Which closed-form statement applies to a code shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    /// `(x^n - 1)/(x^{n_i} - 1)`, `i ∈ {1, 2}`.
    Component(u8),
    /// `(x^n - 1)(x - 1)/((x^{n1} - 1)(x^{n2} - 1))`.
    Joint,
    /// `(x^n - 1)/((x^{n_i} - 1) d_j(x))`.
    ComponentWithD(u8),
    /// `(x^n - 1)(x - 1)/((x^{n1} - 1)(x^{n2} - 1) d_j(x))`.
    JointWithD,
}

/// The closed-form statement covering a generator shape, if any.
pub fn bound_kind_for(shape: GeneratorShape) -> Option<BoundKind> {
    match (shape.base, shape.d.is_some()) {
        (BaseFactor::XPowN1, false) => Some(BoundKind::Component(1)),
        (BaseFactor::XPowN2, false) => Some(BoundKind::Component(2)),
        (BaseFactor::Joint, false) => Some(BoundKind::Joint),
        (BaseFactor::XPowN1, true) => Some(BoundKind::ComponentWithD(1)),
        (BaseFactor::XPowN2, true) => Some(BoundKind::ComponentWithD(2)),
        (BaseFactor::Joint, true) => Some(BoundKind::JointWithD),
        _ => None,
    }
}

/// Smallest `d` with `d^2 - d + 1 >= target`.
pub fn quadratic_upgrade(target: u64) -> u64 {
    (1..).find(|&d| d * d - d + 1 >= target).expect("unbounded scan")
}

/// Closed-form distance information for the code shapes that have one.
/// `upper` is the Singleton bound unless the distance is known exactly.
pub fn distance_bounds(c: &WhitemanCyclotomy, q: u32, kind: BoundKind) -> Result<DistanceInfo> {
    let (n1, n2, n) = (c.n1(), c.n2(), c.n());
    let other = |i: u8| if i == 1 { n2 } else { n1 };
    let (target, k) = match kind {
        BoundKind::Component(i) => {
            return Ok(DistanceInfo::exact(other(i), DistanceMethod::ComponentCode, None));
        }
        BoundKind::Joint => {
            return Ok(DistanceInfo::exact(
                n1.min(n2),
                DistanceMethod::JointComponentCode,
                None,
            ));
        }
        BoundKind::ComponentWithD(i) => {
            let ni = if i == 1 { n1 } else { n2 };
            (other(i), ni + 3 * c.e())
        }
        BoundKind::JointWithD => (n1.min(n2), n1 + n2 - 1 + 3 * c.e()),
    };
    if !c.label(q as u64).in_d0() {
        return Err(Error::NotInD0 { q: q as u64, n });
    }
    let sqrt = ceil_sqrt(target);
    let minus_one_in_d1 = c.label(n - 1).in_d1();
    let (lower, method) = if minus_one_in_d1 {
        (sqrt.max(quadratic_upgrade(target)), DistanceMethod::QuadraticBound)
    } else {
        (sqrt, DistanceMethod::SqrtBound)
    };
    Ok(DistanceInfo {
        exact: None,
        lower,
        upper: n - k + 1,
        method,
        witness: None,
    })
}
