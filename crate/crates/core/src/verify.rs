//! Named pass/fail checks of every identity the library can test directly
//! for one parameter set.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime, legendre, ord_mod};
use crate::codes::{
    class_poly, code_from_sequence, corollary_clause, d_polys, distance_bounds,
    min_distance_exact, omega_poly, shape_of_generator, theoretical_generator, BaseFactor,
    BoundKind, CyclicCode, PredictedGenerator, SplittingField, DEFAULT_BUDGET,
};
use crate::cyclotomy::{
    closed_form_cyclotomic_numbers, solve_quadform_reps, Label, WhitemanCyclotomy,
};
use crate::error::Result;
use crate::gf::{ExtField, FieldElem, PrimeField, MAX_EXT_DEGREE};
use crate::linear_complexity::{berlekamp_massey_periodic, linear_complexity};
use crate::poly::Poly;
use crate::sequence::{autocorrelation_all, dcount, shifted_intersection, theoretical_acf, wgcs1};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub id: String,
    /// Alphabet the check was run over, if it depends on one.
    pub q: Option<u32>,
    pub passed: bool,
    pub detail: String,
}

impl TheoremCheck {
    fn new(id: &str, q: Option<u32>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            id: id.to_string(),
            q,
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest extension degree built for in-field checks.
    pub ext_cap: u32,
    /// Codeword budget for the exhaustive distance checks.
    pub budget: u128,
    /// Run the exhaustive distance checks at all.
    pub distances: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            ext_cap: MAX_EXT_DEGREE,
            budget: DEFAULT_BUDGET,
            distances: true,
        }
    }
}

pub fn all_passed(checks: &[TheoremCheck]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Combinatorial checks, the autocorrelation checks and the binary
/// linear-complexity cross-check, then `verify_code` for each `q` coprime
/// to `n`.
pub fn verify_all(
    c: &WhitemanCyclotomy,
    qs: &[u32],
    cfg: &VerifyConfig,
) -> Result<Vec<TheoremCheck>> {
    let mut out = verify_cyclotomy(c);
    out.extend(verify_sequence(c)?);
    for &q in qs {
        if gcd(c.n(), q as u64) == 1 {
            out.extend(verify_code(c, q, cfg)?);
        }
    }
    out.push(verify_legendre_two(1000));
    Ok(out)
}

pub fn verify_cyclotomy(c: &WhitemanCyclotomy) -> Vec<TheoremCheck> {
    let (n1, n2, n, e) = (c.n1(), c.n2(), c.n(), c.e());
    let mut out = Vec::new();

    let sizes: Vec<usize> = (0..6).map(|i| c.classes().class_members(i).len()).collect();
    let p = c.classes().count(|l| l == Label::P) as u64;
    let qn = c.classes().count(|l| l == Label::Q) as u64;
    let ok = sizes.iter().all(|&s| s as u64 == e)
        && p == n2 - 1
        && qn == n1 - 1
        && c.label(0) == Label::Zero
        && c.label(c.g()) == Label::W(0)
        && c.label(c.u()) == Label::W(1)
        && c.u() % n1 == c.g() % n1
        && c.u() % n2 == 1;
    out.push(TheoremCheck::new(
        "class-partition",
        None,
        ok,
        format!("|W_i| = {sizes:?}, e = {e}, |P| = {p}, |Q| = {qn}"),
    ));

    // r W_j = W_{i+j}: multiplying by r in W_i shifts every class index by i.
    let units = c.classes().members(|l| l.class().is_some());
    let mut bad = 0usize;
    let reps: Vec<u64> = (0..6).map(|i| c.classes().class_members(i)[0]).collect();
    for &r in reps.iter().chain(units.iter().take(64)) {
        let i = c.label(r).class().expect("unit");
        for &x in &units {
            let j = c.label(x).class().expect("unit");
            if c.label(r * x % n).class() != Some((i + j) % 6) {
                bad += 1;
            }
        }
    }
    out.push(TheoremCheck::new(
        "class-coset-action",
        None,
        bad == 0,
        format!("{bad} violations"),
    ));

    let mut shifts = c.classes().members(|l| matches!(l, Label::P | Label::Q));
    if n > 2000 {
        shifts.retain(|&t| t == n1 || t == n2 || t == n - n1 || t == n - n2);
    }
    let mut bad = 0usize;
    for &t in &shifts {
        let table = c.difference_table(t);
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if c.difference_count_closed_form(i, j, t) != Some(v) {
                    bad += 1;
                }
            }
        }
    }
    out.push(TheoremCheck::new(
        "difference-counts-on-p-q",
        None,
        bad == 0,
        format!("{} shifts, {bad} mismatches", shifts.len()),
    ));

    let got = c.minus_one_class();
    let by_residue = if n % 12 == 1 { 0 } else { 3 };
    out.push(TheoremCheck::new(
        "minus-one-class",
        None,
        got == c.predicted_minus_one_class() && got == by_residue,
        format!("-1 in W_{got}, eta = {}, n mod 12 = {}", c.eta(), n % 12),
    ));

    let detail;
    let ok = match solve_quadform_reps(n1, n2).and_then(|r| closed_form_cyclotomic_numbers(c, &r)) {
        Ok(m) => {
            detail = format!(
                "witness (x,y,a,b,c,d) = ({},{},{},{},{},{}), {} matching assignments",
                m.witness.x, m.witness.y, m.witness.a, m.witness.b, m.witness.c, m.witness.d,
                m.matching_assignments
            );
            true
        }
        Err(err) => {
            detail = err.to_string();
            false
        }
    };
    out.push(TheoremCheck::new("cyclotomic-number-closed-forms", None, ok, detail));
    out
}

pub fn verify_sequence(c: &WhitemanCyclotomy) -> Result<Vec<TheoremCheck>> {
    let (n1, n2, n) = (c.n1(), c.n2(), c.n());
    let s = wgcs1(c);
    let mut out = Vec::new();

    let expected_weight = (n2 - 1) + (n1 - 1) * (n2 - 1) / 2;
    out.push(TheoremCheck::new(
        "sequence-weight",
        None,
        s.weight() as u64 == expected_weight,
        format!("weight {} (expected {expected_weight})", s.weight()),
    ));

    let acf = autocorrelation_all(&s)?;
    let mut bad_theory = 0usize;
    let mut bad_identity = 0usize;
    for w in 1..n as usize {
        if acf[w] != theoretical_acf(c, w as u64)? {
            bad_theory += 1;
        }
        let d = dcount(&s, 1, 0, w)? as i64;
        if acf[w] != crate::sequence::AcfValue::new(n as i64 - 4 * d, n as i64) {
            bad_identity += 1;
        }
    }
    out.push(TheoremCheck::new(
        "acf-matches-closed-form",
        None,
        bad_theory == 0,
        format!("{} shifts, {bad_theory} mismatches", n - 1),
    ));
    out.push(TheoremCheck::new(
        "acf-from-disagreement-count",
        None,
        bad_identity == 0,
        format!("{} shifts, {bad_identity} mismatches", n - 1),
    ));

    out.extend(verify_cross_counts(c));

    let lc = linear_complexity(&s)?;
    let (bm, _) = berlekamp_massey_periodic(&s)?;
    out.push(TheoremCheck::new(
        "linear-complexity-gcd-vs-bm",
        Some(2),
        lc == bm,
        format!("gcd {lc}, Berlekamp-Massey {bm}"),
    ));
    Ok(out)
}

/// The four intersection counts whose sum is `|C_1 ∩ (C_0 + w)|`, each
/// checked against its piecewise value at every nonzero shift.
fn verify_cross_counts(c: &WhitemanCyclotomy) -> Vec<TheoremCheck> {
    let (n1, n2, n) = (c.n1(), c.n2(), c.n());
    let m = c.big_m();
    let odd = c.eta_is_odd();
    let is_p = |l: Label| l == Label::P;
    let is_rq = |l: Label| matches!(l, Label::Zero | Label::Q);
    let mut bad = [0usize; 4];
    for w in 1..n {
        let lw = c.label(w);
        let unit = lw.class().is_some();

        if unit {
            let got = shifted_intersection(c, Label::in_d1, Label::in_d0, w) as u64;
            let want = match (odd, lw.in_d0()) {
                (true, _) => 3 * m / 2,
                (false, true) => (3 * m - 1) / 2,
                (false, false) => (3 * m + 1) / 2,
            };
            bad[0] += usize::from(got != want);
        }

        let got = shifted_intersection(c, is_p, Label::in_d0, w) as u64;
        let half = (n2 - 1) / 2;
        let want = match lw {
            Label::P => 0,
            Label::Q => half,
            _ if lw.in_d0() != odd => half,
            _ => half - 1,
        };
        bad[1] += usize::from(got != want);

        let got = shifted_intersection(c, Label::in_d1, is_rq, w) as u64;
        let want = if is_rq(lw) { 0 } else { (n1 - 1) / 2 };
        bad[2] += usize::from(got != want);

        let got = shifted_intersection(c, is_p, is_rq, w) as u64;
        let want = u64::from(lw != Label::Q);
        bad[3] += usize::from(got != want);
    }
    [
        "cross-count-d1-d0",
        "cross-count-p-d0",
        "cross-count-d1-zero-q",
        "cross-count-p-zero-q",
    ]
    .iter()
    .zip(bad)
    .map(|(id, b)| TheoremCheck::new(id, None, b == 0, format!("{b} mismatching shifts")))
    .collect()
}

/// Checks for the code over GF(q). In-field checks run only when
/// `ord_q(n) <= cfg.ext_cap`.
pub fn verify_code(c: &WhitemanCyclotomy, q: u32, cfg: &VerifyConfig) -> Result<Vec<TheoremCheck>> {
    let field = PrimeField::new(q as u64)?;
    let (n1, n2, n) = (c.n1(), c.n2(), c.n());
    let tag = Some(q);
    let mut out = Vec::new();
    let s = wgcs1(c).with_alphabet(q);
    let code = code_from_sequence(&s)?;
    let gen = code.generator();

    let lc = linear_complexity(&s)?;
    let (bm, _) = berlekamp_massey_periodic(&s)?;
    if q != 2 {
        out.push(TheoremCheck::new(
            "linear-complexity-gcd-vs-bm",
            tag,
            lc == bm,
            format!("gcd {lc}, Berlekamp-Massey {bm}"),
        ));
    }

    let pred = theoretical_generator(c, q, cfg.ext_cap)?;
    let case = &pred.case;
    let p = q as u64;
    out.push(TheoremCheck::new(
        "case-delta-identity",
        tag,
        case.delta as u64 == 2 * case.delta1 as u64 * case.delta2 as u64 % p,
        format!("Δ1 = {}, Δ2 = {}, Δ = {}", case.delta1, case.delta2, case.delta),
    ));

    let lambda_one = crate::linear_complexity::sequence_poly(&s)?.eval(1);
    out.push(TheoremCheck::new(
        "sequence-poly-at-one",
        tag,
        lambda_one == case.delta,
        format!("Λ(1) = {lambda_one}, Δ = {}", case.delta),
    ));

    out.push(TheoremCheck::new(
        "linear-span-table",
        tag,
        lc as u64 == pred.linear_span,
        format!("computed {lc}, table {} for {}", pred.linear_span, pred.shape),
    ));

    let exact = matches!(pred.generator, PredictedGenerator::Exact(_));
    out.push(TheoremCheck::new(
        "generator-matches-case-analysis",
        tag,
        pred.agrees_with(c, gen),
        format!(
            "{} ({}), λ(β) case {:?}",
            pred.shape,
            if exact { "exact" } else { "branch undecided" },
            case.lambda_beta_case
        ),
    ));

    if let Some(clause) = corollary_clause(n1, n2, q) {
        let shape = shape_of_generator(c, gen);
        out.push(TheoremCheck::new(
            "residue-clause",
            tag,
            shape.is_some_and(|s| clause.matches(s)),
            format!(
                "clause {} (mod {}), generator shape {}",
                clause.clause,
                clause.modulus,
                shape.map_or("unrecognized".to_string(), |s| s.to_string())
            ),
        ));
    }

    if case.quarter_vanishes {
        out.push(TheoremCheck::new(
            "q-in-d0-when-quarter-vanishes",
            tag,
            case.q_in_d0,
            format!("q mod n in W_{}", case.q_class),
        ));
    }

    if ord_mod(q as u64, n)? <= cfg.ext_cap as u64 {
        let sf = SplittingField::new(n, q, cfg.ext_cap)?;
        out.extend(verify_in_field(c, q, &sf)?);
    }

    if cfg.distances {
        out.extend(verify_distances(c, field, cfg.budget)?);
    }
    Ok(out)
}

fn verify_in_field(c: &WhitemanCyclotomy, q: u32, sf: &SplittingField) -> Result<Vec<TheoremCheck>> {
    let (n1, n2, n) = (c.n1(), c.n2(), c.n());
    let f = sf.field();
    let base = f.base();
    let tag = Some(q);
    let scalar = |v: i64| f.from_base(base.reduce(v));
    let mut out = Vec::new();

    let p_set = c.classes().members(|l| l == Label::P);
    let q_set = c.classes().members(|l| l == Label::Q);
    let ok = sf.power_sum(&p_set, 1) == scalar(-1) && sf.power_sum(&q_set, 1) == scalar(-1);
    out.push(TheoremCheck::new(
        "root-sums-over-p-q",
        tag,
        ok,
        "Σ_P β^i = Σ_Q β^i = -1",
    ));

    let mut bad = 0usize;
    for j in 0..6 {
        let wj = c.classes().class_members(j);
        for &t in &p_set {
            bad += usize::from(sf.power_sum(&wj, t) != scalar(-((n1 as i64 - 1) / 6)));
        }
        for &t in &q_set {
            bad += usize::from(sf.power_sum(&wj, t) != scalar(-((n2 as i64 - 1) / 6)));
        }
    }
    out.push(TheoremCheck::new(
        "class-sums-on-p-q",
        tag,
        bad == 0,
        format!("{bad} mismatches over 6 classes"),
    ));

    let lb = sf.eval_lambda_at(c, 1);
    let minus_lb_1 = f.neg(&f.add(&lb, &f.one()));
    let c1 = c.classes().members(Label::in_c1);
    let mut bad = 0usize;
    for t in 1..n {
        let got = sf.power_sum(&c1, t);
        let want = match c.label(t) {
            Label::P => scalar(-((n1 as i64 + 1) / 2)),
            Label::Q => scalar((n2 as i64 - 1) / 2),
            l if l.in_d0() => lb.clone(),
            _ => minus_lb_1.clone(),
        };
        bad += usize::from(got != want);
    }
    out.push(TheoremCheck::new(
        "lambda-piecewise",
        tag,
        bad == 0,
        format!("{} shifts, {bad} mismatches", n - 1),
    ));

    let frob = f.pow(&lb, q as u128);
    let q_in_d0 = c.label(q as u64).in_d0();
    let want = if q_in_d0 { lb.clone() } else { minus_lb_1.clone() };
    out.push(TheoremCheck::new(
        "lambda-frobenius",
        tag,
        frob == want,
        format!("q in {}", if q_in_d0 { "D0" } else { "D1" }),
    ));

    let prod = f.mul(&lb, &f.add(&lb, &f.one()));
    let want = if n % 12 == 1 {
        scalar(((n - 1) / 4) as i64)
    } else {
        scalar(-(((n + 1) / 4) as i64))
    };
    out.push(TheoremCheck::new(
        "lambda-quadratic-relation",
        tag,
        prod == want,
        format!("n mod 12 = {}", n % 12),
    ));

    let mut omega_ext = vec![f.one()];
    let mut degrees = Vec::new();
    for i in 0..6 {
        let w = class_poly(c, sf, i)?;
        degrees.push(w.len() - 1);
        omega_ext = mul_ext(f, &omega_ext, &w);
    }
    let omega = omega_poly(base, c);
    let ok = degrees.iter().all(|&d| d as u64 == c.e()) && omega_ext == embed(f, &omega);
    out.push(TheoremCheck::new(
        "class-polys-factor-omega",
        tag,
        ok,
        format!("deg ω_i = {degrees:?}"),
    ));

    if q_in_d0 {
        let (d0, d1) = d_polys(c, q, sf)?;
        let joint = BaseFactor::Joint.poly(base, n1, n2);
        let ok = &(&d0 * &d1) * &joint == Poly::x_n_minus_one(base, n as usize)
            && d0.degree() == Some(3 * c.e() as usize)
            && d1.degree() == Some(3 * c.e() as usize);
        out.push(TheoremCheck::new(
            "d-polys-factor-xn-1",
            tag,
            ok,
            format!("deg d0 = {:?}, deg d1 = {:?}", d0.degree(), d1.degree()),
        ));
    }
    Ok(out)
}

fn embed(f: &ExtField, p: &Poly) -> Vec<FieldElem> {
    p.coeffs().iter().map(|&a| f.from_base(a)).collect()
}

fn mul_ext(f: &ExtField, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            f.add_assign(&mut out[i + j], &f.mul(x, y));
        }
    }
    out
}

/// Exhaustive distances of the component and joint codes, where the budget
/// allows.
fn verify_distances(c: &WhitemanCyclotomy, field: PrimeField, budget: u128) -> Result<Vec<TheoremCheck>> {
    let (n1, n2, n) = (c.n1(), c.n2(), c.n());
    let q = field.p();
    let xn1 = Poly::x_n_minus_one(field, n as usize);
    let shapes = [
        ("component-code-distance", BaseFactor::XPowN1, BoundKind::Component(1)),
        ("component-code-distance", BaseFactor::XPowN2, BoundKind::Component(2)),
        ("joint-code-distance", BaseFactor::Joint, BoundKind::Joint),
    ];
    let mut out = Vec::new();
    for (id, base, kind) in shapes {
        let gen = xn1
            .exact_div(&base.poly(field, n1, n2))
            .expect("base factor divides x^n - 1");
        let code = CyclicCode::new(n as usize, gen)?;
        let k = code.k() as u32;
        if (q as u128).checked_pow(k).is_none_or(|v| v - 1 > budget) {
            continue;
        }
        let found = min_distance_exact(&code, budget)?.exact;
        let want = distance_bounds(c, q, kind)?.exact;
        out.push(TheoremCheck::new(
            id,
            Some(q),
            found.is_some() && found == want,
            format!("[{n},{k}] code: exhaustive {found:?}, closed form {want:?}"),
        ));
    }
    Ok(out)
}

/// `(2|p) = 1` for primes `p = 1, 7 (mod 24)` and `-1` for `p = 13, 19 (mod 24)`.
pub fn verify_legendre_two(limit: u64) -> TheoremCheck {
    let mut checked = 0usize;
    let mut bad = 0usize;
    for p in (7..limit).filter(|&p| p % 6 == 1 && is_prime(p)) {
        let want = if matches!(p % 24, 1 | 7) { 1 } else { -1 };
        let by_mod8 = if matches!(p % 8, 1 | 7) { 1 } else { -1 };
        checked += 1;
        bad += usize::from(legendre(2, p) != want || want != by_mod8);
    }
    TheoremCheck::new(
        "legendre-two-mod-24",
        None,
        bad == 0,
        format!("{checked} primes below {limit}, {bad} mismatches"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_7_13() {
        let c = WhitemanCyclotomy::new(7, 13).unwrap();
        let checks = verify_all(&c, &[2, 3, 5], &VerifyConfig::default()).unwrap();
        for ch in &checks {
            assert!(ch.passed, "{ch:?}");
        }
        let ids: Vec<&str> = checks.iter().map(|c| c.id.as_str()).collect();
        for id in ["class-partition", "lambda-piecewise", "joint-code-distance", "residue-clause"] {
            assert!(ids.contains(&id), "{id} missing");
        }
    }

    #[test]
    fn legendre_two() {
        assert!(verify_legendre_two(1000).passed);
    }
}
