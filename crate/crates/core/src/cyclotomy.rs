//! Order-6 two-prime Whiteman cyclotomy.
//!
//! For distinct primes `n1, n2` with `gcd(n1-1, n2-1) = 6` and a common
//! primitive root `g`, the units of `Z_n` split into six classes
//! `W_i = { g^s u^i mod n : 0 <= s < e }` where `u = g (mod n1)`,
//! `u = 1 (mod n2)` and `e = (n1-1)(n2-1)/6`. The non-units split into
//! `{0}`, `P` (nonzero multiples of `n1`) and `Q` (nonzero multiples of `n2`).

use serde::{Deserialize, Serialize};

use crate::arith::{crt, gcd, is_prime, is_primitive_root, isqrt};
use crate::error::{Error, Result};

/// Label of a residue modulo `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Zero,
    P,
    Q,
    W(u8),
}

impl Label {
    /// `Some(i)` for units in `W_i`.
    pub fn class(self) -> Option<usize> {
        match self {
            Label::W(i) => Some(i as usize),
            _ => None,
        }
    }

    /// Membership in `C_1 = P ∪ W_1 ∪ W_3 ∪ W_5`.
    pub fn in_c1(self) -> bool {
        matches!(self, Label::P) || matches!(self, Label::W(i) if i % 2 == 1)
    }

    /// Membership in `D_0 = W_0 ∪ W_2 ∪ W_4`.
    pub fn in_d0(self) -> bool {
        matches!(self, Label::W(i) if i % 2 == 0)
    }

    pub fn in_d1(self) -> bool {
        matches!(self, Label::W(i) if i % 2 == 1)
    }
}

/// Label of every residue in `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMap {
    labels: Vec<Label>,
}

impl ClassMap {
    pub fn label(&self, r: u64) -> Label {
        self.labels[(r % self.labels.len() as u64) as usize]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Elements of `W_i` in increasing order.
    pub fn class_members(&self, i: usize) -> Vec<u64> {
        self.members(|l| l == Label::W(i as u8))
    }

    pub fn members(&self, pred: impl Fn(Label) -> bool) -> Vec<u64> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| pred(l))
            .map(|(r, _)| r as u64)
            .collect()
    }

    pub fn count(&self, pred: impl Fn(Label) -> bool) -> usize {
        self.labels.iter().filter(|&&l| pred(l)).count()
    }
}

/// The cyclotomy together with its class map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhitemanCyclotomy {
    n1: u64,
    n2: u64,
    n: u64,
    e: u64,
    g: u64,
    u: u64,
    eta: u64,
    classes: ClassMap,
}

/// Smallest positive integer that is a primitive root modulo both primes.
pub fn find_common_primitive_root(n1: u64, n2: u64) -> Result<u64> {
    check_primes(n1, n2)?;
    Ok((2..)
        .find(|&g| is_primitive_root(g, n1) && is_primitive_root(g, n2))
        .expect("a common primitive root exists by the Chinese remainder theorem"))
}

/// The unique `u` in `[1, n)` with `u = g (mod n1)` and `u = 1 (mod n2)`.
pub fn compute_u(n1: u64, n2: u64, g: u64) -> u64 {
    crt(g % n1, n1, 1, n2)
}

fn check_primes(n1: u64, n2: u64) -> Result<()> {
    for p in [n1, n2] {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenPrime(p));
        }
    }
    if n1 == n2 {
        return Err(Error::NotDistinct(n1));
    }
    Ok(())
}

/// Validates the parameters without building anything.
pub fn validate_params(n1: u64, n2: u64) -> Result<()> {
    check_primes(n1, n2)?;
    let d = gcd(n1 - 1, n2 - 1);
    if d != 6 {
        return Err(Error::OrderNotSix(d));
    }
    Ok(())
}

/// Every ordered pair `(n1, n2)` with `n1 n2 < max_n` passing
/// `validate_params`, sorted. With `both_orders = false` only `n1 < n2`.
pub fn valid_pairs(max_n: u64, both_orders: bool) -> Vec<(u64, u64)> {
    let primes: Vec<u64> = (7..=max_n / 7).filter(|&p| p % 6 == 1 && is_prime(p)).collect();
    let mut out = Vec::new();
    for &a in &primes {
        for &b in &primes {
            if a * b >= max_n {
                break;
            }
            if (a < b || (both_orders && a != b)) && gcd(a - 1, b - 1) == 6 {
                out.push((a, b));
            }
        }
    }
    out
}

impl WhitemanCyclotomy {
    /// Build with the smallest common primitive root.
    pub fn new(n1: u64, n2: u64) -> Result<Self> {
        validate_params(n1, n2)?;
        let g = find_common_primitive_root(n1, n2)?;
        Self::with_root(n1, n2, g)
    }

    /// Build with an explicit common primitive root.
    pub fn with_root(n1: u64, n2: u64, g: u64) -> Result<Self> {
        validate_params(n1, n2)?;
        if !(is_primitive_root(g, n1) && is_primitive_root(g, n2)) {
            return Err(Error::NotCommonPrimitiveRoot { g, n1, n2 });
        }
        let n = n1 * n2;
        let e = (n1 - 1) * (n2 - 1) / 6;
        let u = compute_u(n1, n2, g);
        let classes = build_partition(n1, n2, g % n, u, e);
        Ok(Self {
            n1,
            n2,
            n,
            e,
            g: g % n,
            u,
            eta: (n1 - 1) * (n2 - 1) / 36,
            classes,
        })
    }

    pub fn n1(&self) -> u64 {
        self.n1
    }
    pub fn n2(&self) -> u64 {
        self.n2
    }
    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn e(&self) -> u64 {
        self.e
    }
    pub fn g(&self) -> u64 {
        self.g
    }
    pub fn u(&self) -> u64 {
        self.u
    }
    pub fn eta(&self) -> u64 {
        self.eta
    }
    pub fn eta_is_odd(&self) -> bool {
        self.eta % 2 == 1
    }
    pub fn classes(&self) -> &ClassMap {
        &self.classes
    }
    pub fn label(&self, r: u64) -> Label {
        self.classes.label(r)
    }

    /// `M = ((n1-2)(n2-2) - 1) / 6`.
    pub fn big_m(&self) -> u64 {
        ((self.n1 - 2) * (self.n2 - 2) - 1) / 6
    }

    /// The full 6x6 table of cyclotomic numbers `(i,j) = |(W_i + 1) ∩ W_j|`.
    pub fn cyclotomic_table(&self) -> [[u64; 6]; 6] {
        self.difference_table(1)
    }

    pub fn cyclotomic_number(&self, i: usize, j: usize) -> Result<u64> {
        if i >= 6 {
            return Err(Error::ClassIndex(i));
        }
        if j >= 6 {
            return Err(Error::ClassIndex(j));
        }
        Ok(self.cyclotomic_table()[i][j])
    }

    /// `d(i,j;t)` for all `i, j` at once.
    pub fn difference_table(&self, t: u64) -> [[u64; 6]; 6] {
        let mut table = [[0u64; 6]; 6];
        let n = self.n;
        let t = t % n;
        for (x, &l) in self.classes.labels.iter().enumerate() {
            if let Label::W(i) = l {
                if let Label::W(j) = self.classes.label(x as u64 + t) {
                    table[i as usize][j as usize] += 1;
                }
            }
        }
        table
    }

    /// `d(i,j;t) = |(W_i + t) ∩ W_j|`.
    pub fn difference_count(&self, i: usize, j: usize, t: u64) -> Result<u64> {
        if i >= 6 {
            return Err(Error::ClassIndex(i));
        }
        if j >= 6 {
            return Err(Error::ClassIndex(j));
        }
        if t % self.n == 0 {
            return Err(Error::ZeroShift);
        }
        Ok(self.difference_table(t)[i][j])
    }

    /// Closed form of `d(i,j;t)` for `t ∈ P ∪ Q`; `None` for units.
    pub fn difference_count_closed_form(&self, i: usize, j: usize, t: u64) -> Option<u64> {
        let (a, b) = (self.n1 - 1, self.n2 - 1);
        match (self.label(t), i == j) {
            (Label::P, false) | (Label::Q, false) => Some(a * b / 36),
            (Label::P, true) => Some(a * (b - 6) / 36),
            (Label::Q, true) => Some((a - 6) * b / 36),
            _ => None,
        }
    }

    /// Index `i` with `-1 mod n ∈ W_i`.
    pub fn minus_one_class(&self) -> usize {
        self.label(self.n - 1).class().expect("-1 is a unit")
    }

    /// Class predicted from the parity of `eta`: 0 when odd, 3 when even.
    pub fn predicted_minus_one_class(&self) -> usize {
        if self.eta_is_odd() {
            0
        } else {
            3
        }
    }
}

/// Label every residue: `W_i` by direct enumeration of `g^s u^i`.
pub fn build_partition(n1: u64, n2: u64, g: u64, u: u64, e: u64) -> ClassMap {
    let n = n1 * n2;
    let mut labels = vec![Label::Zero; n as usize];
    for k in 1..n2 {
        labels[(k * n1) as usize] = Label::P;
    }
    for k in 1..n1 {
        labels[(k * n2) as usize] = Label::Q;
    }
    let mut ui = 1u64;
    for i in 0..6u8 {
        let mut x = ui;
        for _ in 0..e {
            labels[x as usize] = Label::W(i);
            x = x * g % n;
        }
        ui = ui * u % n;
    }
    ClassMap { labels }
}

/// Nonnegative representations `n = x^2 + 3y^2`, `4n = a^2 + 3b^2 = c^2 + 27d^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadFormReps {
    pub rep_x: i64,
    pub rep_y: i64,
    pub rep_a: i64,
    pub rep_b: i64,
    pub rep_c: i64,
    pub rep_d: i64,
    pub big_m: i64,
    /// Every nonnegative `(x, y)` with `n = x^2 + 3y^2`.
    pub all_xy: Vec<(i64, i64)>,
    pub all_ab: Vec<(i64, i64)>,
    pub all_cd: Vec<(i64, i64)>,
}

// All nonnegative (u, v) with u^2 + k v^2 = target, sorted by decreasing u.
fn representations(target: u64, k: u64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut v = 0u64;
    while k * v * v <= target {
        let rest = target - k * v * v;
        let u = isqrt(rest);
        if u * u == rest {
            out.push((u as i64, v as i64));
        }
        v += 1;
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Exhaustive search for the quadratic-form representations of `n = n1 n2`.
/// The primary representative for each form is the one with the largest
/// first coordinate; all of them are kept for the sign search.
pub fn solve_quadform_reps(n1: u64, n2: u64) -> Result<QuadFormReps> {
    validate_params(n1, n2)?;
    let n = n1 * n2;
    let all_xy = representations(n, 3);
    let all_ab = representations(4 * n, 3);
    let all_cd = representations(4 * n, 27);
    let (&(rep_x, rep_y), &(rep_a, rep_b), &(rep_c, rep_d)) = (
        all_xy.first().ok_or(Error::NoRepresentation("n = x^2 + 3y^2"))?,
        all_ab.first().ok_or(Error::NoRepresentation("4n = a^2 + 3b^2"))?,
        all_cd.first().ok_or(Error::NoRepresentation("4n = c^2 + 27d^2"))?,
    );
    Ok(QuadFormReps {
        rep_x,
        rep_y,
        rep_a,
        rep_b,
        rep_c,
        rep_d,
        big_m: (((n1 - 2) * (n2 - 2) - 1) / 6) as i64,
        all_xy,
        all_ab,
        all_cd,
    })
}

/// Signed representatives that make the closed forms reproduce the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignWitness {
    pub x: i64,
    pub y: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

/// Groups of index pairs that share one value, with `72 *` the value as a
/// linear form in `(M, x, y, a, b, c, d, 1)`.
type Block = [(&'static [(usize, usize)], [i64; 8]); 10];

// Coefficient order: M, x, y, a, b, c, d, constant.
const ETA_ODD_BLOCK: Block = [
    (&[(0, 0)], [12, -24, 0, 6, 0, 2, 0, 32]),
    (&[(0, 1), (1, 0), (5, 5)], [12, 8, 24, 1, 3, -1, 9, 8]),
    (&[(0, 2), (2, 0), (4, 4)], [12, 0, 0, -3, 9, -1, -9, 8]),
    (&[(0, 3), (3, 0), (3, 3)], [12, 8, 0, -2, 0, 2, 0, 8]),
    (&[(0, 4), (4, 0), (2, 2)], [12, 0, 0, -3, -9, -1, 9, 8]),
    (&[(0, 5), (5, 0), (1, 1)], [12, 8, -24, 1, -3, -1, -9, 8]),
    (
        &[(1, 2), (2, 1), (4, 5), (5, 4), (5, 1), (1, 5)],
        [12, -4, 0, -2, 0, 2, 0, -4],
    ),
    (
        &[(1, 3), (2, 5), (3, 1), (3, 4), (4, 3), (5, 2)],
        [12, -4, -12, 1, 3, -1, 9, -4],
    ),
    (
        &[(1, 4), (2, 3), (3, 2), (3, 5), (4, 1), (5, 3)],
        [12, -4, 12, 1, -3, -1, -9, -4],
    ),
    (&[(2, 4), (4, 2)], [12, 12, 0, 6, 0, 2, 0, -4]),
];

const ETA_EVEN_BLOCK: Block = [
    (&[(0, 0), (3, 0), (3, 3)], [12, -8, 0, -2, 0, 2, 0, 20]),
    (&[(0, 1), (2, 5), (4, 3)], [12, 0, 0, -3, -9, -1, 9, -4]),
    (&[(0, 2), (1, 4), (5, 3)], [12, -8, 24, 1, -3, -1, -9, -4]),
    (&[(0, 3)], [12, 24, 0, 6, 0, 2, 0, -4]),
    (&[(0, 4), (1, 3), (5, 2)], [12, -8, -24, 1, 3, -1, 9, -4]),
    (&[(0, 5), (2, 3), (4, 1)], [12, 0, 0, -3, 9, -1, -9, -4]),
    (
        &[(1, 0), (2, 2), (3, 1), (3, 4), (4, 0), (5, 5)],
        [12, 4, 12, 1, 3, -1, 9, 8],
    ),
    (
        &[(1, 1), (2, 0), (3, 2), (3, 5), (4, 4), (5, 0)],
        [12, 4, -12, 1, -3, -1, -9, 8],
    ),
    (
        &[(1, 2), (1, 5), (2, 4), (4, 2), (5, 1), (5, 4)],
        [12, 4, 0, -2, 0, 2, 0, -4],
    ),
    (&[(2, 1), (4, 5)], [12, -12, 0, 6, 0, 2, 0, -4]),
];

fn block(eta_odd: bool) -> &'static Block {
    if eta_odd {
        &ETA_ODD_BLOCK
    } else {
        &ETA_EVEN_BLOCK
    }
}

/// `72 *` the closed-form table for one signed choice of representatives.
pub fn closed_form_table_x72(eta_odd: bool, big_m: i64, w: &SignWitness) -> [[i64; 6]; 6] {
    let vars = [big_m, w.x, w.y, w.a, w.b, w.c, w.d, 1];
    let mut table = [[i64::MIN; 6]; 6];
    for (cells, coef) in block(eta_odd) {
        let v: i64 = coef.iter().zip(vars).map(|(c, v)| c * v).sum();
        for &(i, j) in cells.iter() {
            table[i][j] = v;
        }
    }
    table
}

/// Whether the table is constant on each of the ten groups of its parity block.
pub fn ten_value_pattern_holds(eta_odd: bool, table: &[[u64; 6]; 6]) -> bool {
    let b = block(eta_odd);
    let covered: usize = b.iter().map(|(cells, _)| cells.len()).sum();
    covered == 36
        && b.iter().all(|(cells, _)| {
            let (i0, j0) = cells[0];
            cells.iter().all(|&(i, j)| table[i][j] == table[i0][j0])
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormMatch {
    pub table: [[u64; 6]; 6],
    pub witness: SignWitness,
    /// How many (representation, sign) choices reproduce the table.
    pub matching_assignments: usize,
}

/// Search all representations and sign choices for one that makes every
/// closed form of the applicable parity block equal the brute-force table.
pub fn closed_form_cyclotomic_numbers(
    c: &WhitemanCyclotomy,
    reps: &QuadFormReps,
) -> Result<ClosedFormMatch> {
    let brute = c.cyclotomic_table();
    let target: Vec<i64> = brute.iter().flatten().map(|&v| 72 * v as i64).collect();
    let signs = [1i64, -1];
    let mut first = None;
    let mut count = 0;
    for &(x0, y0) in &reps.all_xy {
        for &(a0, b0) in &reps.all_ab {
            for &(c0, d0) in &reps.all_cd {
                for bits in 0..64u32 {
                    let s = |k: u32| signs[((bits >> k) & 1) as usize];
                    let w = SignWitness {
                        x: s(0) * x0,
                        y: s(1) * y0,
                        a: s(2) * a0,
                        b: s(3) * b0,
                        c: s(4) * c0,
                        d: s(5) * d0,
                    };
                    let table = closed_form_table_x72(c.eta_is_odd(), reps.big_m, &w);
                    if table.iter().flatten().eq(target.iter()) {
                        count += 1;
                        first.get_or_insert(w);
                    }
                }
            }
        }
    }
    let witness = first.ok_or(Error::NoSignAssignment)?;
    Ok(ClosedFormMatch {
        table: brute,
        witness,
        matching_assignments: count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Oracle: naive order computation.
    fn is_prim_naive(g: u64, p: u64) -> bool {
        if g % p == 0 {
            return false;
        }
        let mut x = g % p;
        let mut k = 1;
        while x != 1 {
            x = x * g % p;
            k += 1;
        }
        k == p - 1
    }

    #[test]
    fn pair_enumeration() {
        let pairs = valid_pairs(5000, false);
        assert_eq!(pairs.len(), 118);
        assert_eq!(pairs[0], (7, 13));
        assert!(pairs.iter().all(|&(a, b)| a < b && validate_params(a, b).is_ok()));
        assert_eq!(valid_pairs(5000, true).len(), 236);
        assert!(valid_pairs(91, false).is_empty());
        assert_eq!(valid_pairs(92, false), vec![(7, 13)]);
    }

    #[test]
    fn common_primitive_roots() {
        assert_eq!(find_common_primitive_root(7, 13).unwrap(), 19);
        assert_eq!(find_common_primitive_root(7, 31).unwrap(), 3);
        let g = find_common_primitive_root(7, 19).unwrap();
        let brute = (2..).find(|&g| is_prim_naive(g, 7) && is_prim_naive(g, 19)).unwrap();
        assert_eq!(g, brute);
        assert_eq!(crate::arith::ord_mod(g, 7).unwrap(), 6);
        assert_eq!(crate::arith::ord_mod(g, 19).unwrap(), 18);
        assert_eq!(find_common_primitive_root(7, 8), Err(Error::NotPrime(8)));
    }

    #[test]
    fn u_values() {
        assert_eq!(compute_u(7, 13, 19), 40);
        assert_eq!(compute_u(7, 31, 3), 94);
        assert_eq!(WhitemanCyclotomy::new(7, 7), Err(Error::NotDistinct(7)));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(WhitemanCyclotomy::new(7, 11), Err(Error::OrderNotSix(2)));
        assert_eq!(WhitemanCyclotomy::new(2, 7), Err(Error::EvenPrime(2)));
        assert_eq!(WhitemanCyclotomy::new(7, 9), Err(Error::NotPrime(9)));
        assert_eq!(WhitemanCyclotomy::new(13, 37), Err(Error::OrderNotSix(12)));
        assert!(matches!(
            WhitemanCyclotomy::with_root(7, 13, 2),
            Err(Error::NotCommonPrimitiveRoot { .. })
        ));
    }

    #[test]
    fn partition_sizes_7_13() {
        let c = WhitemanCyclotomy::new(7, 13).unwrap();
        assert_eq!(c.e(), 12);
        let cm = c.classes();
        for i in 0..6 {
            assert_eq!(cm.count(|l| l == Label::W(i)), 12);
        }
        assert_eq!(cm.count(|l| l == Label::P), 12);
        assert_eq!(cm.count(|l| l == Label::Q), 6);
        assert_eq!(cm.count(|l| l == Label::Zero), 1);
        assert_eq!(cm.labels().len(), 91);
        assert_eq!(c.label(0), Label::Zero);
        assert_eq!(c.label(7), Label::P);
        assert_eq!(c.label(13), Label::Q);
        // units are exactly the W-labelled residues
        for r in 0..91u64 {
            assert_eq!(gcd(r, 91) == 1, c.label(r).class().is_some());
        }
    }

    #[test]
    fn cyclotomic_number_sum() {
        for (n1, n2) in [(7, 13), (7, 19)] {
            let c = WhitemanCyclotomy::new(n1, n2).unwrap();
            let n = c.n();
            let total: u64 = c.cyclotomic_table().iter().flatten().sum();
            let direct = (0..n).filter(|&r| gcd(r, n) == 1 && gcd((r + 1) % n, n) == 1).count();
            assert_eq!(total, direct as u64);
        }
        let c = WhitemanCyclotomy::new(7, 13).unwrap();
        assert_eq!(c.cyclotomic_number(6, 0), Err(Error::ClassIndex(6)));
    }

    #[test]
    fn eta_odd_symmetry_spot_check() {
        let c = WhitemanCyclotomy::new(7, 19).unwrap();
        assert!(c.eta_is_odd());
        let t = c.cyclotomic_table();
        assert_eq!(t[0][1], t[1][0]);
        assert_eq!(t[1][0], t[5][5]);
        assert!(ten_value_pattern_holds(true, &t));
    }

    #[test]
    fn difference_counts_7_13() {
        let c = WhitemanCyclotomy::new(7, 13).unwrap();
        assert_eq!(c.difference_count(0, 1, 7).unwrap(), 2);
        assert_eq!(c.difference_count(2, 2, 7).unwrap(), 1);
        assert_eq!(c.difference_count(4, 4, 13).unwrap(), 0);
        assert_eq!(c.difference_count(0, 0, 91), Err(Error::ZeroShift));
        for t in (1..91).filter(|&t| t % 7 == 0 || t % 13 == 0) {
            let table = c.difference_table(t);
            for i in 0..6 {
                for j in 0..6 {
                    assert_eq!(Some(table[i][j]), c.difference_count_closed_form(i, j, t));
                }
            }
        }
    }

    #[test]
    fn minus_one() {
        let c = WhitemanCyclotomy::new(7, 13).unwrap();
        assert_eq!(c.eta(), 2);
        assert_eq!(c.minus_one_class(), 3);
        assert_eq!(c.n() % 12, 7);
        let c = WhitemanCyclotomy::new(7, 19).unwrap();
        assert_eq!(c.eta(), 3);
        assert_eq!(c.minus_one_class(), 0);
    }

    #[test]
    fn quadform_representations_91() {
        let r = solve_quadform_reps(7, 13).unwrap();
        assert!(r.all_xy.contains(&(4, 5)));
        assert!(r.all_ab.contains(&(19, 1)));
        assert!(r.all_cd.contains(&(16, 2)));
        assert_eq!((r.rep_a, r.rep_b), (19, 1));
        assert_eq!((r.rep_c, r.rep_d), (16, 2));
        for &(x, y) in &r.all_xy {
            assert_eq!(x * x + 3 * y * y, 91);
        }
        assert_eq!(r.big_m, 9);
    }

    #[test]
    fn closed_forms_match_both_parities() {
        for (n1, n2) in [(7, 13), (7, 19)] {
            let c = WhitemanCyclotomy::new(n1, n2).unwrap();
            let reps = solve_quadform_reps(n1, n2).unwrap();
            let m = closed_form_cyclotomic_numbers(&c, &reps).unwrap();
            assert!(m.matching_assignments >= 1);
            let x72 = closed_form_table_x72(c.eta_is_odd(), reps.big_m, &m.witness);
            for i in 0..6 {
                for j in 0..6 {
                    assert_eq!(x72[i][j] % 72, 0);
                    assert_eq!(x72[i][j] / 72, m.table[i][j] as i64);
                }
            }
        }
    }
}
