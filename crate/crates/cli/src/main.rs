//! `isodual`: factor `x^n - 1`, build and verify isodual cyclic codes, compute
//! minimum weights and sweep parameters.
//!
//! Exit codes: 0 success, 2 invalid input, 3 verification failure,
//! 4 enumeration budget exceeded.

mod search;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isodual_core::constructions::{
    duadic_generators, duadic_lift, remark46_code, thm42_isodual, thm44_isodual, thm510_isodual,
};
use isodual_core::fq_poly::factor_xn_minus_1;
use isodual_core::{
    basic_irreducible_factors, find_splittings, Claim, ConstructionResult, CyclicCode, Error, RPoly, RingSpec,
    Splitting, Strategy, VerifyOptions, WeightReport, DEFAULT_BUDGET,
};
use serde::Serialize;

const EXIT_INVALID: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "isodual", version, about = "Cyclic codes over Z/p^e: factorizations, isodual constructions, weights")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic irreducible factorization of x^n - 1 over Z/p^e.
    Factor {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long)]
        n: usize,
    },
    /// Build the codes of one construction.
    Construct(ConstructArgs),
    /// Minimum Hamming weight of a code stored as JSON.
    Weight {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        /// Maximum number of codewords enumerated directly.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Sweep parameters, verify every construction and merge the records
    /// into a JSON-lines file.
    Search(search::SearchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Thm42,
    Thm44,
    Remark46,
    Duadic,
    Thm510,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Auto,
    Direct,
    Residue,
    Both,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: KindArg,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 2)]
    e: u32,
    /// Odd length of the underlying factorization.
    #[arg(long)]
    m: u64,
    /// Length is 2^a m.
    #[arg(long, default_value_t = 1)]
    a: u32,
    /// Cofactors with x^m - 1 = (x - 1) g1 g2, e.g. "x^5 + 3x^4 + 8x^3 + x^2 + 2x + 8".
    #[arg(long, allow_hyphen_values = true)]
    g1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g2: Option<String>,
    /// Index into the sorted list of splittings mod m.
    #[arg(long, default_value_t = 0)]
    splitting: usize,
    /// Check every claim and compute minimum weights.
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Also write the JSON result here.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::TooLarge { .. }) { EXIT_BUDGET } else { EXIT_INVALID };
        Failure { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INVALID, message: message.into() }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Factor { p, e, n } => cmd_factor(p, e, n, cli.json),
        Command::Construct(args) => cmd_construct(args, cli.json),
        Command::Weight { file, strategy, budget } => cmd_weight(&file, strategy, budget, cli.json),
        Command::Search(args) => search::run(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

#[derive(Serialize)]
struct FactorReport {
    ring: RingSpec,
    n: usize,
    residue: Vec<Vec<u64>>,
    lifted: Vec<RPoly>,
}

fn cmd_factor(p: u64, e: u32, n: usize, json: bool) -> CmdResult {
    let spec = RingSpec::new(p, e)?;
    if n == 0 || (n as u64).is_multiple_of(p) {
        return Err(invalid(format!("n = {n} must be positive and prime to p = {p}")));
    }
    let residue = factor_xn_minus_1(n as u64, p)?;
    let lifted = basic_irreducible_factors(n, spec)?;
    if json {
        print_json(&FactorReport {
            ring: spec,
            n,
            residue: residue.iter().map(|f| f.coeffs().to_vec()).collect(),
            lifted,
        });
    } else {
        println!("x^{n} - 1 over {spec}: {} basic irreducible factors", lifted.len());
        for (f, g) in residue.iter().zip(&lifted) {
            println!("  {g}    (mod {p}: {f})");
        }
    }
    Ok(())
}

fn strategy_for_verify(s: StrategyArg) -> Result<Option<Strategy>, Failure> {
    match s {
        StrategyArg::Auto => Ok(None),
        StrategyArg::Direct => Ok(Some(Strategy::Direct)),
        StrategyArg::Residue => Ok(Some(Strategy::Residue)),
        StrategyArg::Both => Err(invalid("--strategy both is only supported by the weight command")),
    }
}

fn pick_splitting(m: u64, p: u64, index: usize) -> Result<Splitting, Error> {
    let all = find_splittings(m, p)?;
    let count = all.len();
    all.into_iter().nth(index).ok_or_else(|| {
        Error::InvalidParameter(format!("splitting index {index} out of range ({count} splittings mod {m})"))
    })
}

pub(crate) fn build(
    kind: KindArg,
    spec: RingSpec,
    m: u64,
    a: u32,
    cofactors: Option<(RPoly, RPoly)>,
    splitting: usize,
) -> Result<ConstructionResult, Error> {
    Ok(match kind {
        KindArg::Thm42 => thm42_isodual(m, a, spec)?,
        KindArg::Remark46 => remark46_code(m, a, spec)?,
        KindArg::Thm44 => {
            let (g1, g2) = match cofactors {
                Some(pair) => pair,
                None => duadic_generators(&pick_splitting(m, spec.p(), splitting)?, spec)?,
            };
            thm44_isodual(m, a, spec, &g1, &g2)?
        }
        KindArg::Duadic => duadic_lift(m, spec, &pick_splitting(m, spec.p(), splitting)?)?,
        KindArg::Thm510 => thm510_isodual(m, a, spec, &pick_splitting(m, spec.p(), splitting)?)?,
    })
}

fn cmd_construct(args: ConstructArgs, json: bool) -> CmdResult {
    let spec = RingSpec::new(args.p, args.e)?;
    let strategy = strategy_for_verify(args.strategy)?;
    let cofactors = match (&args.g1, &args.g2) {
        (Some(a), Some(b)) => Some((RPoly::parse(a, spec)?, RPoly::parse(b, spec)?)),
        (None, None) => None,
        _ => return Err(invalid("--g1 and --g2 must be given together")),
    };
    if cofactors.is_some() && args.kind != KindArg::Thm44 {
        return Err(invalid("--g1/--g2 only apply to thm44"));
    }
    let mut result = build(args.kind, spec, args.m, args.a, cofactors, args.splitting)?;
    let verified = if args.verify {
        let opts = VerifyOptions { weights: true, strategy, budget: args.budget, ..VerifyOptions::default() };
        Some(result.verify(opts))
    } else {
        None
    };
    if let Some(path) = &args.out {
        let text = serde_json::to_string_pretty(&result).expect("serializable");
        fs::write(path, text + "\n").map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    if json {
        print_json(&result);
    } else {
        print_construction(&result);
    }
    if verified == Some(false) {
        return Err(Failure { code: EXIT_VERIFY, message: "a claim did not verify".into() });
    }
    Ok(())
}

fn claim_text(c: &Claim) -> String {
    match c {
        Claim::Isodual => "isodual".into(),
        Claim::SelfDual => "self-dual".into(),
        Claim::DualOf { label } => format!("dual is {label}"),
        Claim::DualEquivalentTo { label } => format!("dual equivalent to {label}"),
        Claim::EquivalentTo { label } => format!("equivalent to {label}"),
    }
}

fn weight_text(w: &WeightReport) -> String {
    let how = match w.strategy {
        Strategy::Direct => "direct",
        Strategy::Residue => "residue code",
    };
    format!("{} ({how}, {} words)", w.weight, w.enumerated)
}

fn print_construction(r: &ConstructionResult) {
    let p = &r.params;
    let kind = format!("{:?}", p.construction).to_lowercase();
    let mut head = format!("{kind} over {}, m = {}, n = {}", p.ring, p.m, p.n);
    if let Some(a) = p.a {
        head += &format!(", a = {a}");
    }
    if let Some(alpha) = p.alpha {
        head += &format!(", alpha = {alpha}");
    }
    if let Some(s) = &p.splitting {
        let action = format!("{:?}", s.mu_minus1).to_lowercase();
        head += &format!(", splitting S1 = {:?} (witness a = {}, mu_-1 {action})", s.s1, s.a);
    }
    println!("{head}");
    for note in &r.notices {
        println!("note: {note}");
    }
    for lc in &r.codes {
        match &lc.generator {
            Some(g) => println!("{}: <{g}>, log_p|C| = {}", lc.label, lc.code.cardinality_log()),
            None => println!("{}: F = {:?}, log_p|C| = {}", lc.label, family_text(&lc.code), lc.code.cardinality_log()),
        }
        match &lc.verified {
            None => {
                for c in &lc.claims {
                    println!("  claim {}", claim_text(c));
                }
            }
            Some(v) => {
                for c in &v.checks {
                    let status = if c.holds { "verified" } else { "FAILED" };
                    match c.certificate {
                        Some(cert) => println!(
                            "  claim {}: {status} (a = {}, lambda = {})",
                            claim_text(&c.claim),
                            cert.multiplier,
                            cert.scaling
                        ),
                        None => println!("  claim {}: {status}", claim_text(&c.claim)),
                    }
                }
                if let Some(d) = &v.dual_is {
                    println!("  dual is {d}");
                }
                match (&v.min_weight, v.weight_upper_bound, &v.weight_error) {
                    (Some(w), _, _) => println!("  min weight {}", weight_text(w)),
                    (None, Some(b), Some(err)) => println!("  min weight <= {b} (upper bound only: {err})"),
                    (None, _, Some(err)) => println!("  min weight unavailable: {err}"),
                    _ => {}
                }
            }
        }
    }
}

fn family_text(c: &CyclicCode) -> Vec<String> {
    c.family().iter().map(|f| f.to_string()).collect()
}

#[derive(Serialize)]
struct BoundReport {
    exact: bool,
    upper_bound: Option<usize>,
    budget: u128,
    reason: String,
}

fn cmd_weight(file: &PathBuf, strategy: StrategyArg, budget: u128, json: bool) -> CmdResult {
    let text = fs::read_to_string(file).map_err(|e| invalid(format!("cannot read {}: {e}", file.display())))?;
    let code: CyclicCode = serde_json::from_str(&text).map_err(|e| invalid(format!("invalid code file: {e}")))?;
    if code.is_zero() {
        return Err(invalid("the zero code has no minimum weight"));
    }
    let run = |s: Option<Strategy>| code.min_hamming_weight_with(s, budget);
    let reports = match strategy {
        StrategyArg::Auto => vec![run(None)],
        StrategyArg::Direct => vec![run(Some(Strategy::Direct))],
        StrategyArg::Residue => vec![run(Some(Strategy::Residue))],
        StrategyArg::Both => vec![run(Some(Strategy::Direct)), run(Some(Strategy::Residue))],
    };
    let mut done = Vec::new();
    for r in reports {
        match r {
            Ok(w) => done.push(w),
            Err(Error::TooLarge { what, size, limit }) => {
                let bound = code.weight_upper_bound(budget);
                let reason = format!("{what} has {size} elements, above the limit {limit}");
                if json {
                    print_json(&BoundReport { exact: false, upper_bound: bound, budget, reason: reason.clone() });
                } else if let Some(b) = bound {
                    println!("upper bound only: min weight <= {b} (first {budget} codewords)");
                }
                return Err(Failure { code: EXIT_BUDGET, message: format!("budget exceeded: {reason}") });
            }
            Err(e) => return Err(e.into()),
        }
    }
    if json {
        if done.len() == 1 {
            print_json(&done[0]);
        } else {
            print_json(&done);
        }
    } else {
        for w in &done {
            println!("min weight {}", weight_text(w));
        }
    }
    if done.windows(2).any(|w| w[0].weight != w[1].weight) {
        return Err(Failure { code: EXIT_VERIFY, message: "strategies disagree".into() });
    }
    Ok(())
}
