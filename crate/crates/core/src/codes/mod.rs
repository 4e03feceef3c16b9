//! Cyclic codes defined by WGCS-I sequences.

mod case;
mod corollary;
mod distance;

pub use case::{
    class_poly, classify_case, d_polys, omega_poly, predicted_linear_span, shape_from_case,
    theoretical_generator, BaseFactor, CaseReport, DBranch, GeneratorShape, LambdaBetaCase,
    Prediction, PredictedGenerator, SplittingField,
};
pub use corollary::{corollary_clause, shape_of_generator, CorollaryClause};
pub use distance::{
    bound_kind_for, distance_bounds, min_distance_exact, min_distance_upper, quadratic_upgrade, BoundKind,
    DistanceInfo, DistanceMethod, DEFAULT_BUDGET,
};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::gf::PrimeField;
use crate::linear_complexity::gcd_with_xn1;
use crate::poly::Poly;
use crate::sequence::PeriodicSequence;

/// A cyclic code of length `n` over GF(q) given by its generator polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    gen: Poly,
}

impl CyclicCode {
    /// Checks that `gen` is monic and divides `x^n - 1`.
    pub fn new(n: usize, gen: Poly) -> Result<Self> {
        let gen = gen.monic();
        if gen.is_zero() || !gen.divides(&Poly::x_n_minus_one(gen.field(), n)) {
            return Err(Error::NotCyclicGenerator(n));
        }
        Ok(Self { n, gen })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.gen.field().p()
    }

    pub fn field(&self) -> PrimeField {
        self.gen.field()
    }

    pub fn generator(&self) -> &Poly {
        &self.gen
    }

    /// `n - deg g`.
    pub fn k(&self) -> usize {
        self.n - self.gen.degree().unwrap_or(0)
    }

    /// `(x^n - 1) / g`.
    pub fn check_poly(&self) -> Poly {
        Poly::x_n_minus_one(self.field(), self.n)
            .exact_div(&self.gen)
            .expect("generator divides x^n - 1")
    }

    /// Coefficient vector of `m(x) g(x)`, length `n`.
    pub fn encode(&self, message: &[u32]) -> Result<Vec<u32>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch {
                got: message.len(),
                expected: self.k(),
            });
        }
        let m = Poly::from_coeffs(self.field(), message.to_vec());
        let mut word = (&m * &self.gen).coeffs().to_vec();
        word.resize(self.n, 0);
        Ok(word)
    }

    /// Rows `x^i g(x)` for `i < k`.
    pub fn generator_rows(&self) -> Vec<Vec<u32>> {
        let g = self.gen.coeffs();
        (0..self.k())
            .map(|i| {
                let mut row = vec![0u32; self.n];
                row[i..i + g.len()].copy_from_slice(g);
                row
            })
            .collect()
    }
}

/// The code generated by `(x^n - 1) / gcd(x^n - 1, S(x))`.
pub fn code_from_sequence(s: &PeriodicSequence) -> Result<CyclicCode> {
    let n = s.n();
    let g = gcd(n as u64, s.q() as u64);
    if g != 1 {
        return Err(Error::NotCoprime {
            q: s.q() as u64,
            n: n as u64,
            gcd: g,
        });
    }
    let d = gcd_with_xn1(s)?;
    let gen = Poly::x_n_minus_one(d.field(), n)
        .exact_div(&d)
        .expect("gcd divides x^n - 1");
    CyclicCode::new(n, gen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomy::WhitemanCyclotomy;
    use crate::sequence::wgcs1;

    #[test]
    fn example_shapes() {
        let s = wgcs1(&WhitemanCyclotomy::new(7, 19).unwrap());
        let code = code_from_sequence(&s).unwrap();
        assert_eq!((code.n(), code.k()), (133, 19));
        let expected: Vec<u32> = (0..=114).map(|i| u32::from(i % 19 == 0)).collect();
        assert_eq!(code.generator().coeffs(), &expected[..]);

        let c = WhitemanCyclotomy::new(7, 13).unwrap();
        let code = code_from_sequence(&wgcs1(&c)).unwrap();
        assert_eq!(code.k(), 19);
    }

    #[test]
    fn rejects_non_coprime_alphabet() {
        let s = PeriodicSequence::new(7, vec![0; 91]);
        assert!(matches!(code_from_sequence(&s), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn encode_basics() {
        let s = wgcs1(&WhitemanCyclotomy::new(7, 13).unwrap());
        let code = code_from_sequence(&s).unwrap();
        let k = code.k();
        assert!(code.encode(&vec![0; k]).unwrap().iter().all(|&c| c == 0));
        let mut unit = vec![0; k];
        unit[0] = 1;
        let word = code.encode(&unit).unwrap();
        assert_eq!(&word[..code.generator().coeffs().len()], code.generator().coeffs());
        assert_eq!(
            code.encode(&[1, 0]),
            Err(Error::LengthMismatch { got: 2, expected: k })
        );
    }

    #[test]
    fn codewords_are_multiples_of_generator() {
        let f = PrimeField::new(3).unwrap();
        let gen = Poly::x_n_minus_one(f, 13).exact_div(&Poly::from_signed(f, &[-1, 1])).unwrap();
        let code = CyclicCode::new(13, gen).unwrap();
        let word = code.encode(&[2]).unwrap();
        let w = Poly::from_coeffs(f, word);
        assert!(code.generator().divides(&w));
        assert!(CyclicCode::new(13, Poly::from_signed(f, &[1, 1])).is_err());
    }
}
