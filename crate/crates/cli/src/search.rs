//! Parameter sweeps with a deterministic, idempotent JSON-lines store.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::Args;
use isodual_core::constructions::{ClaimCheck, Kind};
use isodual_core::{Certificate, Claim, CyclicCode, Error, RPoly, RingSpec, Strategy, VerifyOptions, DEFAULT_BUDGET};
use log::{debug, info, warn};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{build, invalid, CmdResult, Failure, KindArg, EXIT_VERIFY};

#[derive(Args)]
pub struct SearchArgs {
    /// Primes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    p: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    e: Vec<u32>,
    /// Odd lengths: values or inclusive ranges, e.g. "3-13,21".
    #[arg(long, value_delimiter = ',', required = true)]
    m: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    a: Vec<u32>,
    /// Constructions to run; all by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    kinds: Vec<KindArg>,
    /// Maximum codewords enumerated directly per code.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Maximum residue-code words (up to scalars) per free code.
    #[arg(long, default_value_t = 50_000_000)]
    residue_limit: u128,
    /// Results file; existing records are kept and updated in place.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
struct Point {
    p: u64,
    e: u32,
    m: u64,
    a: u32,
    construction: Kind,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
struct Key {
    p: u64,
    e: u32,
    m: u64,
    /// Absent for constructions without a power-of-two factor.
    a: Option<u32>,
    construction: Kind,
    label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Record {
    key: Key,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    generator: Option<String>,
    code: CyclicCode,
    claims: Vec<ClaimCheck>,
    all_hold: bool,
    weight: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    weight_strategy: Option<Strategy>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    weight_upper_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    certificate: Option<Certificate>,
}

fn parse_m(tokens: &[String]) -> Result<Vec<u64>, Failure> {
    let mut out = Vec::new();
    for t in tokens {
        let t = t.trim();
        let bad = || invalid(format!("cannot parse m range {t:?}"));
        match t.split_once('-') {
            Some((lo, hi)) => {
                let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
                let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
                out.extend(lo..=hi);
            }
            None => out.push(t.parse().map_err(|_| bad())?),
        }
    }
    out.retain(|m| m % 2 == 1);
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn kind_of(k: KindArg) -> Kind {
    match k {
        KindArg::Thm42 => Kind::Thm42,
        KindArg::Thm44 => Kind::Thm44,
        KindArg::Remark46 => Kind::Remark46,
        KindArg::Duadic => Kind::Duadic,
        KindArg::Thm510 => Kind::Thm510,
    }
}

fn arg_of(k: Kind) -> KindArg {
    match k {
        Kind::Thm42 => KindArg::Thm42,
        Kind::Thm44 => KindArg::Thm44,
        Kind::Remark46 => KindArg::Remark46,
        Kind::Duadic => KindArg::Duadic,
        Kind::Thm510 => KindArg::Thm510,
    }
}

/// Errors meaning "these parameters do not apply" rather than a fault.
fn inapplicable(e: &Error) -> bool {
    matches!(
        e,
        Error::NoSuchRoot { .. } | Error::NotCoprime { .. } | Error::EmptyResult { .. } | Error::InvalidRing { .. }
    )
}

fn run_point(pt: Point, opts: VerifyOptions) -> Result<Vec<Record>, String> {
    let spec = match RingSpec::new(pt.p, pt.e) {
        Ok(s) => s,
        Err(e) => return Err(e.to_string()),
    };
    let mut result = match build(arg_of(pt.construction), spec, pt.m, pt.a, None, 0) {
        Ok(r) => r,
        Err(e) if inapplicable(&e) => {
            debug!("skipping {pt:?}: {e}");
            return Ok(vec![]);
        }
        Err(e) => return Err(e.to_string()),
    };
    result.verify(opts);
    let a = result.params.a;
    Ok(result
        .codes
        .into_iter()
        .map(|lc| {
            let v = lc.verified.expect("verified above");
            let certificate = v.checks.iter().find(|c| c.claim == Claim::Isodual).and_then(|c| c.certificate);
            Record {
                key: Key { p: pt.p, e: pt.e, m: pt.m, a, construction: pt.construction, label: lc.label },
                n: lc.code.len(),
                generator: lc.generator.as_ref().map(RPoly::to_string),
                all_hold: v.checks.iter().all(|c| c.holds),
                claims: v.checks,
                weight: v.min_weight.map(|w| w.weight),
                weight_strategy: v.min_weight.map(|w| w.strategy),
                weight_upper_bound: v.weight_upper_bound,
                certificate,
                code: lc.code,
            }
        })
        .collect())
}

fn load(path: &PathBuf) -> Result<BTreeMap<Key, Record>, Failure> {
    let mut map = BTreeMap::new();
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(map),
        Err(e) => return Err(invalid(format!("cannot read {}: {e}", path.display()))),
    };
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let r: Record = serde_json::from_str(line)
            .map_err(|e| invalid(format!("{}:{}: not a search record: {e}", path.display(), i + 1)))?;
        map.insert(r.key.clone(), r);
    }
    Ok(map)
}

pub fn run(args: SearchArgs) -> CmdResult {
    let ms = parse_m(&args.m)?;
    if args.budget == 0 {
        return Err(invalid("--budget must be positive"));
    }
    let kinds: Vec<Kind> = if args.kinds.is_empty() {
        vec![Kind::Thm42, Kind::Thm44, Kind::Remark46, Kind::Duadic, Kind::Thm510]
    } else {
        args.kinds.iter().map(|&k| kind_of(k)).collect()
    };
    let mut points = Vec::new();
    for &p in &args.p {
        for &e in &args.e {
            RingSpec::new(p, e)?;
            for &m in &ms {
                for &kind in &kinds {
                    // constructions of odd length ignore a
                    let a_values: &[u32] = if kind == Kind::Duadic { &[1] } else { &args.a };
                    for &a in a_values {
                        points.push(Point { p, e, m, a, construction: kind });
                    }
                }
            }
        }
    }
    points.sort();
    points.dedup();
    info!("sweeping {} parameter points", points.len());
    let opts = VerifyOptions { weights: true, strategy: None, budget: args.budget, residue_limit: args.residue_limit };
    let outcomes: Vec<(Point, Result<Vec<Record>, String>)> =
        points.par_iter().map(|&pt| (pt, run_point(pt, opts))).collect();

    let mut store = load(&args.out)?;
    let mut failed_claims = 0usize;
    let mut written = 0usize;
    for (pt, outcome) in outcomes {
        match outcome {
            Ok(records) => {
                for r in records {
                    if !r.all_hold {
                        warn!("claim failed for {:?}", r.key);
                        failed_claims += 1;
                    }
                    store.insert(r.key.clone(), r);
                    written += 1;
                }
            }
            Err(msg) => warn!("{pt:?} failed: {msg}"),
        }
    }
    let mut text = String::new();
    for r in store.values() {
        text += &serde_json::to_string(r).expect("serializable");
        text.push('\n');
    }
    fs::write(&args.out, text).map_err(|e| invalid(format!("cannot write {}: {e}", args.out.display())))?;
    info!("{written} records updated, {} in {}", store.len(), args.out.display());
    if failed_claims > 0 {
        return Err(Failure { code: EXIT_VERIFY, message: format!("{failed_claims} records have failing claims") });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_ranges() {
        let t = |v: &[&str]| parse_m(&v.iter().map(|s| s.to_string()).collect::<Vec<_>>()).ok();
        assert_eq!(t(&["3-9"]), Some(vec![3, 5, 7, 9]));
        assert_eq!(t(&["11", "3-5", "4"]), Some(vec![3, 5, 11]));
        assert_eq!(t(&["x"]), None);
    }

    #[test]
    fn precondition_errors_are_inapplicable() {
        assert!(inapplicable(&Error::EmptyResult { m: 5, q: 3 }));
        assert!(!inapplicable(&Error::ZeroCode));
    }
}
