use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use wgcs::codes::DEFAULT_BUDGET;
use wgcs::gf::MAX_EXT_DEGREE;
use wgcs::verify::{TheoremCheck, VerifyConfig};
use wgcs_cli::{
    analyze, mindist, sequence, sweep, verify, AnalysisReport, AnalyzeOptions, DistanceMode,
    DistanceOptions, MinDistReport, SequenceReport, SweepReport, VerifyReport,
};

#[derive(Debug, Parser)]
#[command(name = "wgcs", version, about = "Whiteman order-6 cyclotomic sequences and their cyclic codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Exhaustive,
    Random,
    Bounds,
}

impl From<Mode> for DistanceMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Auto => DistanceMode::Auto,
            Mode::Exhaustive => DistanceMode::Exhaustive,
            Mode::Random => DistanceMode::Random,
            Mode::Bounds => DistanceMode::Bounds,
        }
    }
}

#[derive(Debug, Args)]
struct Pair {
    #[arg(long)]
    n1: u64,
    #[arg(long)]
    n2: u64,
    /// Common primitive root to use instead of the smallest one.
    #[arg(long)]
    g_override: Option<u64>,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest extension degree GF(q^m) built for in-field work.
    #[arg(long, default_value_t = MAX_EXT_DEGREE)]
    ext_cap: u32,
}

#[derive(Debug, Args)]
struct Search {
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,
    /// Most codewords enumerated exhaustively.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, default_value_t = 2000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl Search {
    fn options(&self) -> DistanceOptions {
        DistanceOptions {
            mode: self.mode.into(),
            budget: self.budget,
            trials: self.trials,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report for one parameter set; exit status 1 if any check fails.
    Analyze {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        search: Search,
        #[arg(long)]
        skip_distance: bool,
    },
    /// Generator and residue-table check for every valid pair below a bound.
    Sweep {
        /// Pairs with n1 * n2 < max_n.
        #[arg(long, default_value_t = 1000)]
        max_n: u64,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        q: Vec<u32>,
        /// Also include (n2, n1) for each pair.
        #[arg(long)]
        both_orders: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Minimum distance of the code defined by the first-class sequence.
    Mindist {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        search: Search,
    },
    /// Print one period of a sequence as 0/1 characters.
    Seq {
        #[command(flatten)]
        pair: Pair,
        /// 1 for support P ∪ W1 ∪ W3 ∪ W5, 2 for P ∪ W3 ∪ W4 ∪ W5.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        kind: u8,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the identity suite; without --n1/--n2 runs four reference pairs.
    Verify {
        #[arg(long, requires = "n2")]
        n1: Option<u64>,
        #[arg(long, requires = "n1")]
        n2: Option<u64>,
        #[arg(long)]
        g_override: Option<u64>,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        q: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[command(flatten)]
        common: Common,
    },
}

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn print_checks(checks: &[TheoremCheck]) {
    for c in checks {
        let q = c.q.map(|q| format!(" q={q}")).unwrap_or_default();
        println!(
            "  [{}] {}{q}: {}",
            if c.passed { "pass" } else { "FAIL" },
            c.id,
            c.detail
        );
    }
}

fn print_analysis(r: &AnalysisReport) {
    let p = &r.params;
    println!("n1 = {}, n2 = {}, n = {}, q = {}", p.n1, p.n2, p.n, p.q);
    println!("g = {}, u = {}, e = {}, eta = {}", p.g, p.u, p.e, p.eta);
    println!(
        "class sizes W0..W5 = {:?}, |P| = {}, |Q| = {}, -1 in W{}",
        r.class_sizes.w, r.class_sizes.p, r.class_sizes.q, r.minus_one_class
    );
    let spectrum: Vec<String> = r
        .acf_spectrum
        .iter()
        .map(|e| format!("{} (x{})", e.value, e.shifts))
        .collect();
    println!("autocorrelation spectrum: {}", spectrum.join(", "));
    println!(
        "linear complexity: gcd {}, Berlekamp-Massey {}",
        r.linear_complexity.gcd, r.linear_complexity.berlekamp_massey
    );
    let c = &r.case_report;
    println!(
        "case: Δ1 = {}, Δ2 = {}, Δ = {}, n mod 12 = {}, quarter = {} ({}), Λ(β): {:?}, q in W{}",
        c.delta1,
        c.delta2,
        c.delta,
        c.n_mod_12,
        c.quarter,
        if c.quarter_vanishes { "vanishes" } else { "nonzero" },
        c.lambda_beta_case,
        c.q_class
    );
    println!(
        "predicted generator {} with linear span {}",
        r.predicted_shape, r.predicted_linear_span
    );
    println!("code: [{}, {}]", p.n, r.dimension);
    println!("generator: {}", r.generator.human);
    println!("coefficients: {}", r.generator.coefficients);
    if let Some(d) = &r.distance {
        print_distance(d);
    }
    println!("checks:");
    print_checks(&r.theorem_checks);
}

fn print_distance(d: &wgcs::codes::DistanceInfo) {
    match d.exact {
        Some(x) => println!("distance: {x} ({:?})", d.method),
        None => println!("distance: {} <= d <= {} ({:?})", d.lower, d.upper, d.method),
    }
    if let Some(w) = &d.witness {
        println!(
            "witness weight: {}",
            w.iter().filter(|&&x| x != 0).count()
        );
    }
}

fn print_sweep(r: &SweepReport) {
    println!("n1\tn2\tq\tg\tL\tshape\tclause\tstatus");
    for row in &r.rows {
        let clause = row
            .clause
            .map(|(m, c)| format!("{c} (mod {m})"))
            .unwrap_or_else(|| "-".into());
        println!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            row.n1,
            row.n2,
            row.q,
            row.g,
            row.linear_span,
            row.shape,
            clause,
            match (row.passed, row.computation_ok()) {
                (true, _) => "pass",
                (false, true) => "FAIL (residue table disagrees with generator)",
                (false, false) => "FAIL",
            }
        );
    }
    println!(
        "{} rows, {} passed, {} failed ({} residue-table conflicts)",
        r.rows.len(),
        r.passed,
        r.failed,
        r.table_conflicts
    );
}

fn print_mindist(r: &MinDistReport) {
    println!("[{}, {}] code over GF({})", r.n, r.k, r.q);
    if let Some(s) = r.shape {
        println!("generator shape: {s}");
    }
    print_distance(&r.distance);
}

fn print_seq(r: &SequenceReport) {
    println!("{}", r.bits);
}

fn print_verify(reports: &[VerifyReport]) {
    for r in reports {
        println!("({}, {}) q in {:?}:", r.n1, r.n2, r.qs);
        print_checks(&r.checks);
    }
}

fn run(cli: Cli) -> wgcs::Result<bool> {
    match cli.cmd {
        Command::Analyze {
            pair,
            q,
            common,
            search,
            skip_distance,
        } => {
            let opts = AnalyzeOptions {
                g_override: pair.g_override,
                ext_cap: common.ext_cap,
                distance: (!skip_distance).then(|| search.options()),
            };
            let r = analyze(pair.n1, pair.n2, q, &opts)?;
            match common.format {
                Format::Text => print_analysis(&r),
                Format::Json => emit_json(&r),
            }
            Ok(r.all_passed)
        }
        Command::Sweep {
            max_n,
            q,
            both_orders,
            common,
        } => {
            let r = sweep(max_n, &q, both_orders, common.ext_cap)?;
            match common.format {
                Format::Text => print_sweep(&r),
                Format::Json => emit_json(&r),
            }
            Ok(r.failed == 0)
        }
        Command::Mindist {
            pair,
            q,
            format,
            search,
        } => {
            let r = mindist(pair.n1, pair.n2, q, pair.g_override, &search.options())?;
            match format {
                Format::Text => print_mindist(&r),
                Format::Json => emit_json(&r),
            }
            Ok(true)
        }
        Command::Seq { pair, kind, format } => {
            let r = sequence(pair.n1, pair.n2, kind, pair.g_override)?;
            match format {
                Format::Text => print_seq(&r),
                Format::Json => emit_json(&r),
            }
            Ok(true)
        }
        Command::Verify {
            n1,
            n2,
            g_override,
            q,
            budget,
            common,
        } => {
            let cfg = VerifyConfig {
                ext_cap: common.ext_cap,
                budget,
                distances: true,
            };
            let pairs = match (n1, n2) {
                (Some(a), Some(b)) => vec![(a, b)],
                _ => vec![(7, 13), (7, 19), (7, 31), (13, 19)],
            };
            let reports = pairs
                .into_iter()
                .map(|(a, b)| verify(a, b, &q, g_override, &cfg))
                .collect::<wgcs::Result<Vec<_>>>()?;
            match common.format {
                Format::Text => print_verify(&reports),
                Format::Json => emit_json(&reports),
            }
            Ok(reports.iter().all(|r| r.all_passed))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
