//! Report types and builders behind the `wgcs` binary. Everything here is
//! serializable and compares equal after a JSON round trip.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use wgcs::codes::{
    bound_kind_for, code_from_sequence, corollary_clause, distance_bounds, min_distance_exact,
    min_distance_upper, shape_of_generator, theoretical_generator, CaseReport, CyclicCode,
    DistanceInfo, DistanceMethod, GeneratorShape,
};
use wgcs::cyclotomy::{
    closed_form_cyclotomic_numbers, solve_quadform_reps, valid_pairs, SignWitness,
};
use wgcs::linear_complexity::{berlekamp_massey_periodic, linear_complexity};
use wgcs::sequence::{acf_spectrum, wgcs1, wgcs2, PeriodicSequence};
use wgcs::verify::{all_passed, verify_all, TheoremCheck, VerifyConfig};
use wgcs::{Error, Label, Result, WhitemanCyclotomy};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n1: u64,
    pub n2: u64,
    pub q: u32,
    pub n: u64,
    pub g: u64,
    pub u: u64,
    pub e: u64,
    pub eta: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSizes {
    pub w: [usize; 6],
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcfEntry {
    /// Reduced fraction, e.g. `-5/91`.
    pub value: String,
    pub shifts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearComplexity {
    pub gcd: usize,
    pub berlekamp_massey: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorText {
    pub degree: usize,
    /// Low degree first, comma separated.
    pub coefficients: String,
    /// Descending powers, e.g. `x^3+x+1`.
    pub human: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub params: Params,
    pub class_sizes: ClassSizes,
    pub minus_one_class: usize,
    pub cyclotomic_numbers: [[u64; 6]; 6],
    pub closed_form_witness: Option<SignWitness>,
    pub acf_spectrum: Vec<AcfEntry>,
    pub linear_complexity: LinearComplexity,
    pub case_report: CaseReport,
    pub predicted_shape: GeneratorShape,
    pub predicted_linear_span: u64,
    pub generator: GeneratorText,
    pub dimension: usize,
    pub distance: Option<DistanceInfo>,
    pub theorem_checks: Vec<TheoremCheck>,
    pub all_passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistanceMode {
    /// Exhaustive when within budget, otherwise bounds plus random search.
    Auto,
    Exhaustive,
    Random,
    Bounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceOptions {
    pub mode: DistanceMode,
    pub budget: u128,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub g_override: Option<u64>,
    pub ext_cap: u32,
    /// `None` skips the distance computation.
    pub distance: Option<DistanceOptions>,
}

pub fn cyclotomy(n1: u64, n2: u64, g_override: Option<u64>) -> Result<WhitemanCyclotomy> {
    match g_override {
        Some(g) => WhitemanCyclotomy::with_root(n1, n2, g),
        None => WhitemanCyclotomy::new(n1, n2),
    }
}

fn check_coprime(c: &WhitemanCyclotomy, q: u32) -> Result<()> {
    let g = wgcs::arith::gcd(c.n(), q as u64);
    if g != 1 {
        return Err(Error::NotCoprime {
            q: q as u64,
            n: c.n(),
            gcd: g,
        });
    }
    Ok(())
}

pub fn analyze(n1: u64, n2: u64, q: u32, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let c = cyclotomy(n1, n2, opts.g_override)?;
    check_coprime(&c, q)?;
    let classes = c.classes();
    let mut w = [0usize; 6];
    for (i, slot) in w.iter_mut().enumerate() {
        *slot = classes.class_members(i).len();
    }
    let class_sizes = ClassSizes {
        w,
        p: classes.count(|l| l == Label::P),
        q: classes.count(|l| l == Label::Q),
    };
    let closed_form_witness = solve_quadform_reps(n1, n2)
        .and_then(|r| closed_form_cyclotomic_numbers(&c, &r))
        .ok()
        .map(|m| m.witness);

    let binary = wgcs1(&c);
    let acf_spectrum = acf_spectrum(&binary)?
        .into_iter()
        .map(|(v, shifts)| AcfEntry {
            value: v.to_string(),
            shifts: shifts.len(),
        })
        .collect();

    let s = binary.with_alphabet(q);
    let lc = LinearComplexity {
        gcd: linear_complexity(&s)?,
        berlekamp_massey: berlekamp_massey_periodic(&s)?.0,
    };
    let code = code_from_sequence(&s)?;
    let pred = theoretical_generator(&c, q, opts.ext_cap)?;
    let gen = code.generator();
    let generator = GeneratorText {
        degree: gen.degree().unwrap_or(0),
        coefficients: gen.to_coeff_list(),
        human: gen.to_human(),
    };
    let distance = match &opts.distance {
        Some(d) if code.k() > 0 => Some(estimate_distance(&c, &code, d)?),
        _ => None,
    };
    let cfg = VerifyConfig {
        ext_cap: opts.ext_cap,
        ..VerifyConfig::default()
    };
    let theorem_checks = verify_all(&c, &[q], &cfg)?;
    Ok(AnalysisReport {
        schema: SCHEMA,
        params: Params {
            n1,
            n2,
            q,
            n: c.n(),
            g: c.g(),
            u: c.u(),
            e: c.e(),
            eta: c.eta(),
        },
        class_sizes,
        minus_one_class: c.minus_one_class(),
        cyclotomic_numbers: c.cyclotomic_table(),
        closed_form_witness,
        acf_spectrum,
        linear_complexity: lc,
        case_report: pred.case.clone(),
        predicted_shape: pred.shape,
        predicted_linear_span: pred.linear_span,
        generator,
        dimension: code.k(),
        distance,
        all_passed: all_passed(&theorem_checks),
        theorem_checks,
    })
}

/// Closed-form information for the code's shape, tightened by exhaustive or
/// random search as the mode allows.
pub fn estimate_distance(
    c: &WhitemanCyclotomy,
    code: &CyclicCode,
    opts: &DistanceOptions,
) -> Result<DistanceInfo> {
    let q = code.q();
    let from_bounds = || -> Result<Option<DistanceInfo>> {
        let kind = shape_of_generator(c, code.generator()).and_then(bound_kind_for);
        match kind {
            Some(kind) => match distance_bounds(c, q, kind) {
                Ok(b) => Ok(Some(b)),
                Err(Error::NotInD0 { .. }) => Ok(None),
                Err(e) => Err(e),
            },
            None => Ok(None),
        }
    };
    let singleton = || DistanceInfo {
        exact: None,
        lower: 1,
        upper: (code.n() - code.k() + 1) as u64,
        method: DistanceMethod::SingletonBound,
        witness: None,
    };
    match opts.mode {
        DistanceMode::Exhaustive => min_distance_exact(code, opts.budget),
        DistanceMode::Bounds => Ok(from_bounds()?.unwrap_or_else(singleton)),
        DistanceMode::Random => {
            let found = min_distance_upper(code, opts.trials, opts.seed)?;
            Ok(match from_bounds()? {
                Some(b) => b.combine(&found),
                None => found,
            })
        }
        DistanceMode::Auto => match min_distance_exact(code, opts.budget) {
            Ok(d) => Ok(d),
            Err(Error::BudgetExceeded { .. }) => {
                if let Some(b) = from_bounds()? {
                    if b.exact.is_some() {
                        return Ok(b);
                    }
                    let found = min_distance_upper(code, opts.trials, opts.seed)?;
                    return Ok(b.combine(&found));
                }
                min_distance_upper(code, opts.trials, opts.seed)
            }
            Err(e) => Err(e),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n1: u64,
    pub n2: u64,
    pub q: u32,
    pub g: u64,
    pub linear_span: usize,
    pub predicted_linear_span: u64,
    pub shape: GeneratorShape,
    /// `(modulus, clause)` of the residue table entry, when `q` has a table.
    pub clause: Option<(u64, u8)>,
    pub clause_matches: Option<bool>,
    pub generator_matches: bool,
    pub berlekamp_massey_matches: bool,
    pub acf_matches: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema: u32,
    pub max_n: u64,
    pub qs: Vec<u32>,
    pub rows: Vec<SweepRow>,
    pub passed: usize,
    pub failed: usize,
    /// Failed rows whose only fault is a residue-table entry that disagrees
    /// with the computed generator.
    pub table_conflicts: usize,
}

impl SweepRow {
    pub fn computation_ok(&self) -> bool {
        self.generator_matches && self.berlekamp_massey_matches && self.acf_matches
    }
}

fn sweep_row(n1: u64, n2: u64, q: u32, ext_cap: u32) -> Result<SweepRow> {
    let c = WhitemanCyclotomy::new(n1, n2)?;
    let binary = wgcs1(&c);
    let acf = wgcs::sequence::autocorrelation_all(&binary)?;
    let mut acf_matches = true;
    for w in 1..c.n() {
        acf_matches &= acf[w as usize] == wgcs::sequence::theoretical_acf(&c, w)?;
    }
    let s = binary.with_alphabet(q);
    let code = code_from_sequence(&s)?;
    let linear_span = code.generator().degree().unwrap_or(0);
    let (bm, _) = berlekamp_massey_periodic(&s)?;
    let pred = theoretical_generator(&c, q, ext_cap)?;
    let generator_matches = pred.agrees_with(&c, code.generator())
        && pred.linear_span == linear_span as u64;
    let clause = corollary_clause(n1, n2, q);
    let clause_matches = clause.map(|cl| {
        shape_of_generator(&c, code.generator()).is_some_and(|s| cl.matches(s))
    });
    let passed = generator_matches && bm == linear_span && acf_matches && clause_matches != Some(false);
    Ok(SweepRow {
        n1,
        n2,
        q,
        g: c.g(),
        linear_span,
        predicted_linear_span: pred.linear_span,
        shape: pred.shape,
        clause: clause.map(|cl| (cl.modulus, cl.clause)),
        clause_matches,
        generator_matches,
        berlekamp_massey_matches: bm == linear_span,
        acf_matches,
        passed,
    })
}

/// One row per valid `(n1, n2)` with `n1 n2 < max_n` and each `q` coprime
/// to `n`, sorted by `(n1, n2, q)`.
pub fn sweep(max_n: u64, qs: &[u32], both_orders: bool, ext_cap: u32) -> Result<SweepReport> {
    for &q in qs {
        wgcs::PrimeField::new(q as u64)?;
    }
    let jobs: Vec<(u64, u64, u32)> = valid_pairs(max_n, both_orders)
        .into_iter()
        .flat_map(|(a, b)| qs.iter().map(move |&q| (a, b, q)))
        .filter(|&(a, b, q)| (a * b) % q as u64 != 0)
        .collect();
    let mut rows = jobs
        .par_iter()
        .map(|&(a, b, q)| sweep_row(a, b, q, ext_cap))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.n1, r.n2, r.q));
    let passed = rows.iter().filter(|r| r.passed).count();
    let table_conflicts = rows
        .iter()
        .filter(|r| r.computation_ok() && r.clause_matches == Some(false))
        .count();
    Ok(SweepReport {
        schema: SCHEMA,
        max_n,
        qs: qs.to_vec(),
        failed: rows.len() - passed,
        passed,
        table_conflicts,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub schema: u32,
    pub n1: u64,
    pub n2: u64,
    pub kind: u8,
    pub n: usize,
    pub weight: usize,
    pub bits: String,
}

/// WGCS-I (`kind = 1`) or WGCS-II (`kind = 2`) as a `0`/`1` string.
pub fn sequence(n1: u64, n2: u64, kind: u8, g_override: Option<u64>) -> Result<SequenceReport> {
    let c = cyclotomy(n1, n2, g_override)?;
    let s: PeriodicSequence = if kind == 2 { wgcs2(&c) } else { wgcs1(&c) };
    Ok(SequenceReport {
        schema: SCHEMA,
        n1,
        n2,
        kind,
        n: s.n(),
        weight: s.weight(),
        bits: s.to_bit_string()?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub n1: u64,
    pub n2: u64,
    pub qs: Vec<u32>,
    pub checks: Vec<TheoremCheck>,
    pub all_passed: bool,
}

pub fn verify(n1: u64, n2: u64, qs: &[u32], g_override: Option<u64>, cfg: &VerifyConfig) -> Result<VerifyReport> {
    let c = cyclotomy(n1, n2, g_override)?;
    let checks = verify_all(&c, qs, cfg)?;
    Ok(VerifyReport {
        schema: SCHEMA,
        n1,
        n2,
        qs: qs.to_vec(),
        all_passed: all_passed(&checks),
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDistReport {
    pub schema: u32,
    pub n1: u64,
    pub n2: u64,
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub shape: Option<GeneratorShape>,
    pub distance: DistanceInfo,
    pub witness_weight: Option<usize>,
}

pub fn mindist(n1: u64, n2: u64, q: u32, g_override: Option<u64>, opts: &DistanceOptions) -> Result<MinDistReport> {
    let c = cyclotomy(n1, n2, g_override)?;
    check_coprime(&c, q)?;
    let code = code_from_sequence(&wgcs1(&c).with_alphabet(q))?;
    let distance = estimate_distance(&c, &code, opts)?;
    Ok(MinDistReport {
        schema: SCHEMA,
        n1,
        n2,
        q,
        n: code.n(),
        k: code.k(),
        shape: shape_of_generator(&c, code.generator()),
        witness_weight: distance
            .witness
            .as_ref()
            .map(|w| w.iter().filter(|&&x| x != 0).count()),
        distance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips() {
        let opts = AnalyzeOptions {
            g_override: None,
            ext_cap: 30,
            distance: Some(DistanceOptions {
                mode: DistanceMode::Auto,
                budget: 1 << 20,
                trials: 10,
                seed: 0,
            }),
        };
        let r = analyze(7, 13, 2, &opts).unwrap();
        assert!(r.all_passed);
        assert_eq!(r.dimension, 19);
        assert_eq!(r.distance.as_ref().unwrap().exact, Some(7));
        let json = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn empty_sweep() {
        let r = sweep(50, &[2], false, 30).unwrap();
        assert!(r.rows.is_empty());
        assert_eq!(r.failed, 0);
    }
}
