//! Residue-class tables giving the generator shape for q = 2, 3, 5.

use serde::{Deserialize, Serialize};

use super::case::{omega_poly, BaseFactor, DBranch, GeneratorShape};
use crate::cyclotomy::WhitemanCyclotomy;
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryClause {
    pub q: u32,
    /// Modulus of the residue test: 24, 12 or 60.
    pub modulus: u64,
    /// 1-based clause number within the table for `q`.
    pub clause: u8,
    pub base: BaseFactor,
    pub with_d: bool,
}

impl CorollaryClause {
    pub fn shape(&self) -> GeneratorShape {
        GeneratorShape {
            base: self.base,
            d: self.with_d.then_some(DBranch::Unknown),
        }
    }

    /// Same base factor and same presence of a `d_j` factor.
    pub fn matches(&self, shape: GeneratorShape) -> bool {
        self.base == shape.base && self.with_d == shape.d.is_some()
    }
}

type Row = (u8, BaseFactor, bool, &'static [(u64, u64)]);

const Q2: [Row; 6] = [
    (1, BaseFactor::XMinusOne, false, &[(13, 7), (1, 19)]),
    (2, BaseFactor::XPowN2, false, &[(7, 19), (19, 7)]),
    (3, BaseFactor::Joint, false, &[(7, 13), (19, 1)]),
    (4, BaseFactor::XMinusOne, true, &[(1, 7), (13, 19)]),
    (5, BaseFactor::XPowN2, true, &[(7, 7), (19, 19)]),
    (6, BaseFactor::Joint, true, &[(7, 1), (19, 13)]),
];

const Q3: [Row; 1] = [(1, BaseFactor::XPowN1, true, &[(7, 7)])];

const Q5: [Row; 7] = [
    (
        1,
        BaseFactor::One,
        false,
        &[(1, 43), (1, 7), (31, 43), (31, 7), (31, 13), (31, 37)],
    ),
    (
        2,
        BaseFactor::XPowN2,
        false,
        &[(19, 13), (19, 7), (19, 43), (49, 43), (49, 7)],
    ),
    (
        3,
        BaseFactor::XPowN1,
        false,
        &[(43, 1), (7, 1), (43, 31), (7, 31), (37, 31), (13, 31)],
    ),
    (
        4,
        BaseFactor::One,
        true,
        &[
            (1, 19),
            (31, 49),
            (13, 43),
            (37, 7),
            (43, 13),
            (7, 37),
            (31, 19),
            (13, 7),
            (37, 43),
        ],
    ),
    (5, BaseFactor::XPowN2, true, &[(19, 19), (19, 49), (49, 19)]),
    (6, BaseFactor::XPowN1, true, &[(1, 31), (31, 1)]),
    (7, BaseFactor::Joint, true, &[(19, 31), (19, 1), (49, 31)]),
];

/// The clause whose residue conditions `(n1, n2)` satisfies, if any.
pub fn corollary_clause(n1: u64, n2: u64, q: u32) -> Option<CorollaryClause> {
    let (modulus, table): (u64, &[Row]) = match q {
        2 => (24, &Q2),
        3 => (12, &Q3),
        5 => (60, &Q5),
        _ => return None,
    };
    let key = (n1 % modulus, n2 % modulus);
    table
        .iter()
        .find(|(_, _, _, residues)| residues.contains(&key))
        .map(|&(clause, base, with_d, _)| CorollaryClause {
            q,
            modulus,
            clause,
            base,
            with_d,
        })
}

/// Recover the shape of a generator from `(x^n - 1)/g`: either a base
/// factor alone, or a base factor times a degree-`3e` divisor of `ω`.
/// The `d_j` branch cannot be told apart without `β` and is left `Unknown`.
pub fn shape_of_generator(c: &WhitemanCyclotomy, gen: &Poly) -> Option<GeneratorShape> {
    let field = gen.field();
    let xn1 = Poly::x_n_minus_one(field, c.n() as usize);
    let h = xn1.exact_div(gen)?;
    let deg_h = h.degree()? as u64;
    let omega = omega_poly(field, c);
    let bases = [
        BaseFactor::One,
        BaseFactor::XMinusOne,
        BaseFactor::XPowN2,
        BaseFactor::XPowN1,
        BaseFactor::Joint,
    ];
    for base in bases {
        let bd = base.degree(c.n1(), c.n2());
        let bp = base.poly(field, c.n1(), c.n2());
        if deg_h == bd && h == bp {
            return Some(GeneratorShape { base, d: None });
        }
        if deg_h == bd + 3 * c.e() {
            if let Some(rest) = h.exact_div(&bp) {
                if rest.divides(&omega) {
                    return Some(GeneratorShape {
                        base,
                        d: Some(DBranch::Unknown),
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::code_from_sequence;
    use crate::sequence::wgcs1;

    #[test]
    fn binary_clauses() {
        assert_eq!(corollary_clause(7, 13, 2).unwrap().clause, 3);
        assert_eq!(corollary_clause(7, 19, 2).unwrap().clause, 2);
        assert_eq!(corollary_clause(7, 31, 2).unwrap().clause, 5);
        assert_eq!(corollary_clause(7, 31, 3).unwrap().clause, 1);
        assert!(corollary_clause(7, 13, 3).is_none());
        assert!(corollary_clause(7, 13, 7).is_none());
    }

    #[test]
    fn shapes_of_example_generators() {
        for (n1, n2, q) in [(7, 13, 2), (7, 19, 2), (7, 31, 2), (7, 31, 3)] {
            let c = WhitemanCyclotomy::new(n1, n2).unwrap();
            let s = wgcs1(&c).with_alphabet(q);
            let code = code_from_sequence(&s).unwrap();
            let shape = shape_of_generator(&c, code.generator()).unwrap();
            let clause = corollary_clause(n1, n2, q).unwrap();
            assert!(clause.matches(shape), "{n1} {n2} {q}: {shape}");
        }
    }

    // These residue entries promise a d_j factor, but n mod 60 pins the
    // quarter (n +- 1)/4 to a nonzero value mod 5, so none can appear.
    #[test]
    fn q5_entries_that_disagree_with_the_generator() {
        for (n1, n2) in [(13, 67), (19, 31)] {
            let c = WhitemanCyclotomy::new(n1, n2).unwrap();
            let s = wgcs1(&c).with_alphabet(5);
            let code = code_from_sequence(&s).unwrap();
            let shape = shape_of_generator(&c, code.generator()).unwrap();
            let clause = corollary_clause(n1, n2, 5).unwrap();
            assert!(clause.with_d);
            assert!(shape.d.is_none(), "{n1} {n2}: {shape}");
            assert!(!clause.matches(shape));
        }
    }
}
