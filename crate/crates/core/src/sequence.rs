//! WGCS-I / WGCS-II sequences and their periodic autocorrelation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomy::{Label, WhitemanCyclotomy};
use crate::error::{Error, Result};

/// One period of a sequence over GF(q).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicSequence {
    q: u32,
    values: Vec<u32>,
}

impl PeriodicSequence {
    pub fn new(q: u32, values: Vec<u32>) -> Self {
        let values = values.into_iter().map(|v| v % q).collect();
        Self { q, values }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Term `i` of the infinite periodic extension.
    pub fn at(&self, i: usize) -> u32 {
        self.values[i % self.values.len()]
    }

    /// The same 0/1 pattern read over GF(q).
    pub fn with_alphabet(&self, q: u32) -> Self {
        Self::new(q, self.values.clone())
    }

    pub fn weight(&self) -> usize {
        self.values.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_binary(&self) -> bool {
        self.values.iter().all(|&v| v <= 1)
    }

    /// `'0'`/`'1'` string of one period.
    pub fn to_bit_string(&self) -> Result<String> {
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        Ok(self.values.iter().map(|&v| if v == 1 { '1' } else { '0' }).collect())
    }
}

fn characteristic(c: &WhitemanCyclotomy, support: impl Fn(Label) -> bool) -> PeriodicSequence {
    let values = c
        .classes()
        .labels()
        .iter()
        .map(|&l| u32::from(support(l)))
        .collect();
    PeriodicSequence { q: 2, values }
}

/// First-class sequence: support `P ∪ W_1 ∪ W_3 ∪ W_5`.
pub fn wgcs1(c: &WhitemanCyclotomy) -> PeriodicSequence {
    characteristic(c, Label::in_c1)
}

/// Second-class sequence: support `P ∪ W_3 ∪ W_4 ∪ W_5`.
pub fn wgcs2(c: &WhitemanCyclotomy) -> PeriodicSequence {
    characteristic(c, |l| matches!(l, Label::P | Label::W(3..=5)))
}

/// Exact autocorrelation value `numerator / denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AcfValue {
    pub numerator: i64,
    pub denominator: i64,
}

impl AcfValue {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        Self {
            numerator,
            denominator,
        }
    }
}

impl Ord for AcfValue {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive
        (self.numerator * other.denominator)
            .cmp(&(other.numerator * self.denominator))
            .then(self.denominator.cmp(&other.denominator))
    }
}

impl PartialOrd for AcfValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AcfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

// Bits of two consecutive periods packed into u64 words, so a shifted
// window of 64 terms is two loads and a shift.
struct Packed {
    n: usize,
    words: Vec<u64>,
}

impl Packed {
    fn new(s: &PeriodicSequence) -> Self {
        let n = s.n();
        let mut words = vec![0u64; (2 * n).div_ceil(64) + 1];
        for i in 0..2 * n {
            if s.values[i % n] == 1 {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Self { n, words }
    }

    #[inline]
    fn window(&self, start: usize) -> u64 {
        let (w, b) = (start / 64, start % 64);
        if b == 0 {
            self.words[w]
        } else {
            (self.words[w] >> b) | (self.words[w + 1] << (64 - b))
        }
    }

    // Number of i in [0, n) with s_i != s_{i+w}.
    fn disagreements(&self, w: usize) -> i64 {
        let mut count = 0u32;
        let mut i = 0;
        while i < self.n {
            let len = (self.n - i).min(64);
            let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
            count += ((self.window(i) ^ self.window(i + w)) & mask).count_ones();
            i += 64;
        }
        count as i64
    }
}

/// `C(w) = (1/n) Σ (-1)^{s_{i+w} + s_i}`.
pub fn autocorrelation(s: &PeriodicSequence, w: usize) -> Result<AcfValue> {
    if !s.is_binary() {
        return Err(Error::NotBinary);
    }
    let n = s.n() as i64;
    let packed = Packed::new(s);
    let dis = packed.disagreements(w % s.n());
    Ok(AcfValue::new(n - 2 * dis, n))
}

/// Autocorrelation at every shift `0..n`.
pub fn autocorrelation_all(s: &PeriodicSequence) -> Result<Vec<AcfValue>> {
    if !s.is_binary() {
        return Err(Error::NotBinary);
    }
    let n = s.n() as i64;
    let packed = Packed::new(s);
    Ok((0..s.n())
        .into_par_iter()
        .map(|w| AcfValue::new(n - 2 * packed.disagreements(w), n))
        .collect())
}

/// Nonzero shifts grouped by their autocorrelation value.
pub fn acf_spectrum(s: &PeriodicSequence) -> Result<BTreeMap<AcfValue, Vec<usize>>> {
    let all = autocorrelation_all(s)?;
    let mut map: BTreeMap<AcfValue, Vec<usize>> = BTreeMap::new();
    for (w, v) in all.into_iter().enumerate().skip(1) {
        map.entry(v).or_default().push(w);
    }
    Ok(map)
}

/// Predicted autocorrelation of the first-class sequence at a nonzero shift.
pub fn theoretical_acf(c: &WhitemanCyclotomy, w: u64) -> Result<AcfValue> {
    let (n1, n2, n) = (c.n1() as i64, c.n2() as i64, c.n() as i64);
    let num = match c.label(w) {
        Label::Zero => return Err(Error::ZeroShift),
        Label::P => n2 - n1 - 3,
        Label::Q => n1 - n2 + 1,
        Label::W(_) if !c.eta_is_odd() => -1,
        Label::W(i) if i % 2 == 0 => 1,
        Label::W(_) => -3,
    };
    Ok(AcfValue::new(num, n))
}

/// `d(i,j;w) = |C_i ∩ (C_j + w)|` where `C_b` is the set of positions
/// holding `b`.
pub fn dcount(s: &PeriodicSequence, i: u32, j: u32, w: usize) -> Result<usize> {
    let n = s.n();
    if w % n == 0 {
        return Err(Error::ZeroShift);
    }
    Ok((0..n)
        .filter(|&y| s.values[y] == i && s.values[(y + n - w % n) % n] == j)
        .count())
}

/// `|A ∩ (B + w)|` for label predicates `A`, `B`.
pub fn shifted_intersection(
    c: &WhitemanCyclotomy,
    a: impl Fn(Label) -> bool,
    b: impl Fn(Label) -> bool,
    w: u64,
) -> usize {
    let n = c.n();
    let w = w % n;
    (0..n)
        .filter(|&y| a(c.label(y)) && b(c.label(y + n - w)))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c713() -> WhitemanCyclotomy {
        WhitemanCyclotomy::new(7, 13).unwrap()
    }

    // Oracle: the defining sum, term by term.
    fn naive_acf(s: &PeriodicSequence, w: usize) -> i64 {
        let n = s.n();
        (0..n)
            .map(|i| if s.at(i) == s.at(i + w) { 1 } else { -1 })
            .sum()
    }

    #[test]
    fn wgcs1_basics() {
        let c = c713();
        let s = wgcs1(&c);
        assert_eq!(s.n(), 91);
        assert_eq!(s.at(0), 0);
        assert_eq!(s.at(7), 1);
        assert_eq!(s.weight(), 48);
        assert_eq!(s.weight() as u64, (c.n2() - 1) + 3 * c.e());
    }

    #[test]
    fn wgcs2_basics() {
        let c = c713();
        let s = wgcs2(&c);
        assert_eq!(s.at(0), 0);
        assert_eq!(s.at(13), 0);
        assert_eq!(s.weight(), 48);
    }

    #[test]
    fn acf_values_7_13() {
        let s = wgcs1(&c713());
        assert_eq!(autocorrelation(&s, 0).unwrap(), AcfValue::new(91, 91));
        assert_eq!(autocorrelation(&s, 7).unwrap(), AcfValue::new(3, 91));
        assert_eq!(autocorrelation(&s, 13).unwrap(), AcfValue::new(-5, 91));
        let ternary = PeriodicSequence::new(3, vec![0, 1, 2]);
        assert_eq!(autocorrelation(&ternary, 1), Err(Error::NotBinary));
    }

    #[test]
    fn spectra() {
        let s = wgcs1(&c713());
        let spec = acf_spectrum(&s).unwrap();
        let keys: Vec<_> = spec.keys().copied().collect();
        assert_eq!(
            keys,
            vec![AcfValue::new(-5, 91), AcfValue::new(-1, 91), AcfValue::new(3, 91)]
        );
        assert_eq!(spec[&AcfValue::new(3, 91)].len(), 12);

        let c = WhitemanCyclotomy::new(7, 19).unwrap();
        let spec = acf_spectrum(&wgcs1(&c)).unwrap();
        let mut keys: Vec<_> = spec.keys().map(|v| v.numerator).collect();
        keys.sort();
        assert_eq!(keys, vec![-11, -3, 1, 9]);
    }

    #[test]
    fn theoretical_values() {
        let c = c713();
        assert_eq!(theoretical_acf(&c, 7).unwrap(), AcfValue::new(3, 91));
        assert_eq!(theoretical_acf(&c, 0), Err(Error::ZeroShift));
        let c = WhitemanCyclotomy::new(7, 19).unwrap();
        let w1 = c.classes().class_members(1)[0];
        let w0 = c.classes().class_members(0)[0];
        assert_eq!(theoretical_acf(&c, w1).unwrap(), AcfValue::new(-3, 133));
        assert_eq!(theoretical_acf(&c, w0).unwrap(), AcfValue::new(1, 133));
    }

    #[test]
    fn dcounts_7_13() {
        let s = wgcs1(&c713());
        assert_eq!(dcount(&s, 1, 0, 7).unwrap(), 22);
        assert_eq!(dcount(&s, 1, 0, 13).unwrap(), 24);
        assert_eq!(dcount(&s, 1, 0, 0), Err(Error::ZeroShift));
    }

    #[test]
    fn ordering_is_by_value() {
        assert!(AcfValue::new(-5, 91) < AcfValue::new(-1, 91));
        assert!(AcfValue::new(1, 3) > AcfValue::new(1, 4));
        assert_eq!(AcfValue::new(3, 91).to_string(), "3/91");
    }

    proptest! {
        #[test]
        fn packed_acf_matches_naive(bits in prop::collection::vec(0u32..2, 1..300), w in 0usize..300) {
            let s = PeriodicSequence::new(2, bits);
            let w = w % s.n();
            prop_assert_eq!(autocorrelation(&s, w).unwrap().numerator, naive_acf(&s, w));
        }

        #[test]
        fn acf_dcount_identity(bits in prop::collection::vec(0u32..2, 2..200), w in 1usize..200) {
            let s = PeriodicSequence::new(2, bits);
            let n = s.n();
            let w = w % n;
            prop_assume!(w != 0);
            let c = autocorrelation(&s, w).unwrap();
            let d = dcount(&s, 1, 0, w).unwrap() as i64;
            prop_assert_eq!(c.numerator, n as i64 - 4 * d);
        }
    }
}
