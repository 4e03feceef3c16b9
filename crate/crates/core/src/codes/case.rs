use serde::{Deserialize, Serialize};

use crate::arith::ord_mod;
use crate::cyclotomy::{Label, WhitemanCyclotomy};
use crate::error::{Error, Result};
use crate::gf::{ExtField, FieldElem, PrimeField};
use crate::poly::Poly;

/// Value of `Λ(β)` where the case analysis needs it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LambdaBetaCase {
    /// Evaluated, and neither 0 nor -1.
    NotZeroOrMinusOne,
    Zero,
    MinusOne,
    /// The quarter `(n±1)/4` does not vanish mod p, so `Λ(β)` is not needed.
    NotApplicable,
    /// The extension degree exceeds the cap; `Λ(β)` was not evaluated.
    Undecidable,
}

/// Discriminants of the generator case analysis for one `(n1, n2, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub q: u32,
    /// `(n1 + 1)/2 mod p`.
    pub delta1: u32,
    /// `(n2 - 1)/2 mod p`.
    pub delta2: u32,
    /// `(n1 + 1)(n2 - 1)/2 mod p`.
    pub delta: u32,
    pub n_mod_12: u64,
    /// `(n + 1)/4` when `n = 7 (mod 12)`, `(n - 1)/4` when `n = 1 (mod 12)`.
    pub quarter: u64,
    pub quarter_vanishes: bool,
    pub lambda_beta_case: LambdaBetaCase,
    /// Class of `q mod n`.
    pub q_class: usize,
    pub q_in_d0: bool,
    /// `ord_q(n)`, the degree of the splitting field of `x^n - 1`.
    pub ext_degree: u64,
}

impl CaseReport {
    /// Whether the `d_j` factor enters the generator.
    pub fn uses_d(&self) -> bool {
        self.quarter_vanishes
    }
}

/// `GF(q^m)` with a fixed primitive `n`-th root of unity `β` and its powers.
#[derive(Debug, Clone)]
pub struct SplittingField {
    field: ExtField,
    n: usize,
    powers: Vec<FieldElem>,
}

impl SplittingField {
    /// Fails with `ExtensionTooLarge` when `ord_q(n)` exceeds `cap`.
    pub fn new(n: u64, q: u32, cap: u32) -> Result<Self> {
        let m = ord_mod(q as u64, n)?;
        if m > cap as u64 {
            return Err(Error::ExtensionTooLarge { m, cap: cap as u64 });
        }
        let field = ExtField::with_cap(q as u64, m as u32, cap)?;
        let beta = field.primitive_nth_root(n)?;
        let mut powers = Vec::with_capacity(n as usize);
        let mut x = field.one();
        for _ in 0..n {
            powers.push(x.clone());
            x = field.mul(&x, &beta);
        }
        Ok(Self {
            field,
            n: n as usize,
            powers,
        })
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn beta(&self) -> &FieldElem {
        &self.powers[1 % self.n]
    }

    /// `β^k`.
    pub fn beta_pow(&self, k: u64) -> &FieldElem {
        &self.powers[(k % self.n as u64) as usize]
    }

    /// `Σ_{i ∈ S} β^{t i}`.
    pub fn power_sum(&self, set: &[u64], t: u64) -> FieldElem {
        let n = self.n as u64;
        let mut acc = self.field.zero();
        for &i in set {
            self.field.add_assign(&mut acc, &self.powers[((t % n) * i % n) as usize]);
        }
        acc
    }

    /// `Λ(β^t) = Σ_{i ∈ C_1} β^{t i}`.
    pub fn eval_lambda_at(&self, c: &WhitemanCyclotomy, t: u64) -> FieldElem {
        self.power_sum(&c.classes().members(Label::in_c1), t)
    }

    /// Monic `∏_{i ∈ roots} (x - β^i)` with coefficients in `GF(q^m)`, low degree first.
    pub fn expand_roots(&self, roots: &[u64]) -> Vec<FieldElem> {
        let f = &self.field;
        let mut acc = vec![f.one()];
        for &r in roots {
            let neg_root = f.neg(self.beta_pow(r));
            let mut next = vec![f.zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                f.add_assign(&mut next[i + 1], a);
                f.add_assign(&mut next[i], &f.mul(a, &neg_root));
            }
            acc = next;
        }
        acc
    }

    /// `∏_{i ∈ roots} (x - β^i)` projected to GF(q); `roots` must be a union
    /// of q-cyclotomic cosets mod n.
    pub fn base_poly_from_roots(&self, roots: &[u64], q: u32) -> Result<Poly> {
        let base = self.field.base();
        let n = self.n as u64;
        let mut in_set = vec![false; self.n];
        for &r in roots {
            in_set[(r % n) as usize] = true;
        }
        let mut seen = vec![false; self.n];
        let mut acc = Poly::one(base);
        for &r in roots {
            let r = r % n;
            if seen[r as usize] {
                continue;
            }
            let mut coset = Vec::new();
            let mut x = r;
            while !seen[x as usize] {
                seen[x as usize] = true;
                coset.push(x);
                x = x * q as u64 % n;
            }
            if coset.iter().any(|&x| !in_set[x as usize]) {
                return Err(Error::NotInD0 { q: q as u64, n });
            }
            acc = &acc * &self.project(&self.expand_roots(&coset))?;
        }
        Ok(acc)
    }

    fn project(&self, coeffs: &[FieldElem]) -> Result<Poly> {
        let base = self.field.base();
        let c = coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| self.field.as_base(a).ok_or(Error::NotInBaseField(i)))
            .collect::<Result<Vec<u32>>>()?;
        Ok(Poly::from_coeffs(base, c))
    }
}

/// Fill in every discriminant. `Λ(β)` is evaluated in `sf` when the quarter
/// vanishes; without a splitting field the case is `Undecidable`.
pub fn classify_case(
    c: &WhitemanCyclotomy,
    q: u32,
    sf: Option<&SplittingField>,
) -> Result<CaseReport> {
    let field = PrimeField::new(q as u64)?;
    let (n1, n2, n) = (c.n1(), c.n2(), c.n());
    let ext_degree = ord_mod(q as u64, n)?;
    let p = field.p() as u64;
    let delta1 = (((n1 + 1) / 2) % p) as u32;
    let delta2 = (((n2 - 1) / 2) % p) as u32;
    let delta = (((n1 + 1) as u128 * (n2 - 1) as u128 / 2) % p as u128) as u32;
    let n_mod_12 = n % 12;
    let quarter = if n_mod_12 == 7 { (n + 1) / 4 } else { (n - 1) / 4 };
    let quarter_vanishes = quarter % p == 0;
    let q_class = c.label(q as u64).class().expect("gcd(n, q) = 1");
    let lambda_beta_case = if !quarter_vanishes {
        LambdaBetaCase::NotApplicable
    } else if let Some(sf) = sf {
        let lb = sf.eval_lambda_at(c, 1);
        let f = sf.field();
        if lb.is_zero() {
            LambdaBetaCase::Zero
        } else if f.add(&lb, &f.one()).is_zero() {
            LambdaBetaCase::MinusOne
        } else {
            LambdaBetaCase::NotZeroOrMinusOne
        }
    } else {
        LambdaBetaCase::Undecidable
    };
    Ok(CaseReport {
        q,
        delta1,
        delta2,
        delta,
        n_mod_12,
        quarter,
        quarter_vanishes,
        lambda_beta_case,
        q_class,
        q_in_d0: q_class % 2 == 0,
        ext_degree,
    })
}

/// `(d_0, d_1)` over GF(q): `d_j = ∏_{i ∈ D_j} (x - β^i)`.
pub fn d_polys(c: &WhitemanCyclotomy, q: u32, sf: &SplittingField) -> Result<(Poly, Poly)> {
    if !c.label(q as u64).in_d0() {
        return Err(Error::NotInD0 {
            q: q as u64,
            n: c.n(),
        });
    }
    let d0 = sf.base_poly_from_roots(&c.classes().members(Label::in_d0), q)?;
    let d1 = sf.base_poly_from_roots(&c.classes().members(Label::in_d1), q)?;
    Ok((d0, d1))
}

/// `ω_i(x) = ∏_{j ∈ W_i} (x - β^j)` over `GF(q^m)`.
pub fn class_poly(c: &WhitemanCyclotomy, sf: &SplittingField, i: usize) -> Result<Vec<FieldElem>> {
    if i >= 6 {
        return Err(Error::ClassIndex(i));
    }
    Ok(sf.expand_roots(&c.classes().class_members(i)))
}

/// The factor of `x^n - 1` removed before any `d_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseFactor {
    /// `1`
    One,
    /// `x - 1`
    XMinusOne,
    /// `x^{n2} - 1`
    XPowN2,
    /// `x^{n1} - 1`
    XPowN1,
    /// `(x^{n1} - 1)(x^{n2} - 1)/(x - 1)`
    Joint,
}

impl BaseFactor {
    pub fn poly(self, field: PrimeField, n1: u64, n2: u64) -> Poly {
        let x1 = || Poly::x_n_minus_one(field, 1);
        match self {
            BaseFactor::One => Poly::one(field),
            BaseFactor::XMinusOne => x1(),
            BaseFactor::XPowN2 => Poly::x_n_minus_one(field, n2 as usize),
            BaseFactor::XPowN1 => Poly::x_n_minus_one(field, n1 as usize),
            BaseFactor::Joint => (&Poly::x_n_minus_one(field, n1 as usize)
                * &Poly::x_n_minus_one(field, n2 as usize))
                .exact_div(&x1())
                .expect("x - 1 divides x^{n1} - 1"),
        }
    }

    pub fn degree(self, n1: u64, n2: u64) -> u64 {
        match self {
            BaseFactor::One => 0,
            BaseFactor::XMinusOne => 1,
            BaseFactor::XPowN2 => n2,
            BaseFactor::XPowN1 => n1,
            BaseFactor::Joint => n1 + n2 - 1,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            BaseFactor::One => "1",
            BaseFactor::XMinusOne => "(x-1)",
            BaseFactor::XPowN2 => "(x^n2-1)",
            BaseFactor::XPowN1 => "(x^n1-1)",
            BaseFactor::Joint => "((x^n1-1)(x^n2-1)/(x-1))",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DBranch {
    D0,
    D1,
    /// `Λ(β)` could not be evaluated.
    Unknown,
}

/// `g = (x^n - 1) / (base · d_j)`; `d = None` means no `d_j` factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorShape {
    pub base: BaseFactor,
    pub d: Option<DBranch>,
}

impl std::fmt::Display for GeneratorShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d = match self.d {
            None => "",
            Some(DBranch::D0) => "·d0",
            Some(DBranch::D1) => "·d1",
            Some(DBranch::Unknown) => "·d?",
        };
        match (self.base, d) {
            (BaseFactor::One, "") => write!(f, "x^n-1"),
            (BaseFactor::One, _) => write!(f, "(x^n-1)/{}", &d[2..]),
            _ => write!(f, "(x^n-1)/({}{})", self.base.describe(), d),
        }
    }
}

/// Table lookup on the discriminants.
pub fn shape_from_case(case: &CaseReport) -> GeneratorShape {
    let base = match (case.delta1 == 0, case.delta2 == 0, case.delta == 0) {
        (false, false, false) => BaseFactor::One,
        (false, false, true) => BaseFactor::XMinusOne,
        (true, false, _) => BaseFactor::XPowN2,
        (false, true, _) => BaseFactor::XPowN1,
        (true, true, _) => BaseFactor::Joint,
    };
    let d = case.uses_d().then_some(match case.lambda_beta_case {
        LambdaBetaCase::Zero => DBranch::D0,
        LambdaBetaCase::MinusOne => DBranch::D1,
        _ => DBranch::Unknown,
    });
    GeneratorShape { base, d }
}

/// Linear span from the closed-form table (not from a degree count).
pub fn predicted_linear_span(c: &WhitemanCyclotomy, shape: GeneratorShape) -> u64 {
    let (n1, n2, n) = (c.n1(), c.n2(), c.n());
    match (shape.d.is_some(), shape.base) {
        (false, BaseFactor::One) => n,
        (false, BaseFactor::XMinusOne) => n - 1,
        (false, BaseFactor::XPowN2) => n - n2,
        (false, BaseFactor::XPowN1) => n - n1,
        (false, BaseFactor::Joint) => n - (n1 + n2 - 1),
        (true, BaseFactor::One) => n - (n1 - 1) * (n2 - 1) / 2,
        (true, BaseFactor::XMinusOne) => n - ((n1 - 1) * (n2 - 1) + 2) / 2,
        (true, BaseFactor::XPowN2) => n - ((n1 + 1) * (n2 - 1) + 2) / 2,
        (true, BaseFactor::XPowN1) => n - ((n1 - 1) * (n2 + 1) + 2) / 2,
        (true, BaseFactor::Joint) => n - ((n1 + 1) * (n2 + 1) - 2) / 2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredictedGenerator {
    Exact(Poly),
    /// `Λ(β)` undecidable: the generator is `base_quotient / d_j` for an
    /// unknown `j`.
    Ambiguous { base_quotient: Poly },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub case: CaseReport,
    pub shape: GeneratorShape,
    pub generator: PredictedGenerator,
    pub linear_span: u64,
}

impl Prediction {
    /// Whether `gen` is the predicted generator. In the ambiguous case the
    /// cofactor `base_quotient / gen` must have degree `3e` and divide
    /// `ω = d_0 d_1`; the matching branch is then reported as `Unknown`.
    pub fn agrees_with(&self, c: &WhitemanCyclotomy, gen: &Poly) -> bool {
        match &self.generator {
            PredictedGenerator::Exact(g) => g == gen,
            PredictedGenerator::Ambiguous { base_quotient } => {
                let field = gen.field();
                let omega = omega_poly(field, c);
                match base_quotient.exact_div(gen) {
                    Some(d) => d.degree() == Some(3 * c.e() as usize) && d.divides(&omega),
                    None => false,
                }
            }
        }
    }
}

/// `ω(x) = d_0(x) d_1(x) = (x^n - 1)(x - 1) / ((x^{n1} - 1)(x^{n2} - 1))`.
pub fn omega_poly(field: PrimeField, c: &WhitemanCyclotomy) -> Poly {
    Poly::x_n_minus_one(field, c.n() as usize)
        .exact_div(&BaseFactor::Joint.poly(field, c.n1(), c.n2()))
        .expect("joint factor divides x^n - 1")
}

/// Generator predicted by the case analysis. Builds `GF(q^m)` only when the
/// quarter vanishes and `m <= cap`.
pub fn theoretical_generator(c: &WhitemanCyclotomy, q: u32, cap: u32) -> Result<Prediction> {
    let field = PrimeField::new(q as u64)?;
    let m = ord_mod(q as u64, c.n())?;
    let probe = classify_case(c, q, None)?;
    let sf = if probe.quarter_vanishes && m <= cap as u64 {
        Some(SplittingField::new(c.n(), q, cap)?)
    } else {
        None
    };
    let case = match &sf {
        Some(sf) => classify_case(c, q, Some(sf))?,
        None => probe,
    };
    let shape = shape_from_case(&case);
    let xn1 = Poly::x_n_minus_one(field, c.n() as usize);
    let base_quotient = xn1
        .exact_div(&shape.base.poly(field, c.n1(), c.n2()))
        .expect("base factor divides x^n - 1");
    let generator = match (shape.d, &sf) {
        (None, _) => PredictedGenerator::Exact(base_quotient),
        (Some(DBranch::Unknown), None) => PredictedGenerator::Ambiguous { base_quotient },
        (Some(branch), Some(sf)) => {
            let (d0, d1) = d_polys(c, q, sf)?;
            let dj = match branch {
                DBranch::D0 => d0,
                DBranch::D1 => d1,
                // Λ(β) evaluated but not in {0, -1}: the table has no entry.
                DBranch::Unknown => return Err(Error::LambdaOutsideTable),
            };
            PredictedGenerator::Exact(
                base_quotient
                    .exact_div(&dj)
                    .ok_or(Error::NotCyclicGenerator(c.n() as usize))?,
            )
        }
        (Some(_), None) => unreachable!("a decided branch needs the splitting field"),
    };
    Ok(Prediction {
        linear_span: predicted_linear_span(c, shape),
        case,
        shape,
        generator,
    })
}
