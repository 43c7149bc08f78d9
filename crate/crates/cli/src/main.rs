//! `ciani`: command-line reports on Ciani quartics.

mod render;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use ciani_core::exactnum::{parse_rational_list, trial_factor};
use ciani_core::reconstruct::{KModel, ReconstructionCase, ReconstructionReport, TwistDescriptor};
use ciani_core::{
    classify, conductor, k_model, reconstruct, resolvent, twists, verify_reconstruction,
    CianiTuple, ConductorReport, Error, ExtValuation, Rational, ReductionType, StandardModel,
};

const SCHEMA: &str = "1";

#[derive(Parser)]
#[command(name = "ciani", version, about = "Invariants, reduction types and conductor exponents of Ciani quartics")]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit aligned plain text instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TupleArg {
    /// Ciani invariants I3,I3',I3'',I6 as rationals ("num" or "num/den").
    #[arg(long, allow_hyphen_values = true, value_name = "I3,I3P,I3PP,I6")]
    invariants: String,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and derived quantities of a standard model.
    Invariants {
        /// Coefficients A,B,C,a,b,c of Ax⁴+By⁴+Cz⁴+ay²z²+bx²z²+cx²y².
        #[arg(long, allow_hyphen_values = true, value_name = "A,B,C,a,b,c")]
        model: String,
    },
    /// Rebuild a model from invariants and descend it to the rationals.
    Reconstruct(TupleArg),
    /// Reduction type at a prime p > 3.
    Classify {
        #[command(flatten)]
        tuple: TupleArg,
        #[arg(long)]
        prime: u64,
    },
    /// Conductor exponents at a prime p > 3.
    Conductor {
        #[command(flatten)]
        tuple: TupleArg,
        #[arg(long)]
        prime: u64,
    },
    /// Conductor exponents at every prime that can be bad.
    Scan {
        #[command(flatten)]
        tuple: TupleArg,
        /// Explicit primes to report on.
        #[arg(long, value_delimiter = ',', conflicts_with = "bound")]
        primes: Option<Vec<u64>>,
        /// Trial-division bound for finding candidate primes.
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::NonRationalCoefficient { .. } => 2,
        Error::Singular => 3,
        Error::UnsupportedPrime(_) | Error::NotPrime(_) => 4,
        Error::Special => 5,
        _ => 1,
    }
}

fn parse_tuple(s: &str) -> Result<CianiTuple, Error> {
    let v = parse_rational_list(s)?;
    if v.len() != 4 {
        return Err(Error::Parse(format!("{s} (expected 4 values, got {})", v.len())));
    }
    CianiTuple::from_slice(&v)
}

fn parse_model(s: &str) -> Result<StandardModel, Error> {
    let v = parse_rational_list(s)?;
    if v.len() != 6 {
        return Err(Error::Parse(format!("{s} (expected 6 values, got {})", v.len())));
    }
    StandardModel::from_slice(&v)
}

fn nonsingular(s: &str) -> Result<CianiTuple, Error> {
    let t = parse_tuple(s)?;
    if t.is_singular() {
        return Err(Error::Singular);
    }
    Ok(t)
}

mod rat_str {
    pub use ciani_core::exactnum::rational_string::serialize;
}

#[derive(Serialize)]
struct Resolvent {
    #[serde(with = "rat_str")]
    s1: Rational,
    #[serde(with = "rat_str")]
    s2: Rational,
    #[serde(with = "rat_str")]
    s3: Rational,
    text: String,
}

fn resolvent_of(t: &CianiTuple) -> Resolvent {
    let c = resolvent(t);
    Resolvent {
        text: c.to_string(),
        s1: c.s1,
        s2: c.s2,
        s3: c.s3,
    }
}

#[derive(Serialize)]
struct InvariantsOut {
    schema: &'static str,
    command: &'static str,
    model: StandardModel,
    invariants: CianiTuple,
    #[serde(with = "rat_str")]
    discriminant: Rational,
    smooth: bool,
    #[serde(rename = "P", with = "rat_str")]
    p: Rational,
    #[serde(rename = "I", with = "rat_str")]
    i: Rational,
    #[serde(rename = "Q", with = "rat_str")]
    q: Rational,
    #[serde(rename = "R", with = "rat_str")]
    r: Rational,
    resolvent: Resolvent,
    /// Absent for singular models, where speciality is not defined.
    special: Option<bool>,
    pair_discriminants: Vec<String>,
}

fn cmd_invariants(model: &str) -> Result<InvariantsOut, Error> {
    let m = parse_model(model)?;
    let t = m.invariants();
    Ok(InvariantsOut {
        schema: SCHEMA,
        command: "invariants",
        discriminant: t.discriminant(),
        smooth: m.is_smooth(),
        p: t.p_invariant(),
        i: t.i_invariant(),
        q: t.q_invariant(),
        r: t.r_invariant(),
        resolvent: resolvent_of(&t),
        special: t.is_special().ok(),
        pair_discriminants: m.pair_discriminants().iter().map(ciani_core::format_rational).collect(),
        model: m,
        invariants: t,
    })
}

#[derive(Serialize)]
struct KModelOut {
    #[serde(flatten)]
    model: KModel,
    text: String,
}

#[derive(Serialize)]
struct ReconstructOut {
    schema: &'static str,
    command: &'static str,
    invariants: CianiTuple,
    case: ReconstructionCase,
    resolvent: Resolvent,
    model: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadratic_tag: Option<String>,
    verification: ReconstructionReport,
    k_model: KModelOut,
}

fn cmd_reconstruct(arg: &TupleArg) -> Result<ReconstructOut, Error> {
    let t = nonsingular(&arg.invariants)?;
    let rec = reconstruct(&t)?;
    let verification = verify_reconstruction(&t)?;
    let km = k_model(&t)?;
    Ok(ReconstructOut {
        schema: SCHEMA,
        command: "reconstruct",
        case: rec.case,
        resolvent: resolvent_of(&t),
        model: rec.coefficients.describe(),
        quadratic_tag: rec.quadratic_tag.as_ref().map(ciani_core::format_rational),
        verification,
        k_model: KModelOut {
            text: km.form.to_string(),
            model: km,
        },
        invariants: t,
    })
}

#[derive(Serialize)]
struct Normalisation {
    #[serde(with = "rat_str")]
    shift: Rational,
    valuations: [ExtValuation; 4],
    integral: bool,
    tuple: Option<CianiTuple>,
}

#[derive(Serialize)]
struct ClassifyOut {
    schema: &'static str,
    command: &'static str,
    invariants: CianiTuple,
    prime: u64,
    reduction: ReductionType,
    normalisation: Normalisation,
}

fn cmd_classify(arg: &TupleArg, p: u64) -> Result<ClassifyOut, Error> {
    let t = nonsingular(&arg.invariants)?;
    let reduction = classify(&t, p)?;
    let prof = t.normalize_at(p)?;
    Ok(ClassifyOut {
        schema: SCHEMA,
        command: "classify",
        invariants: t,
        prime: p,
        reduction,
        normalisation: Normalisation {
            shift: prof.shift,
            valuations: prof.valuations,
            integral: prof.integral,
            tuple: prof.tuple,
        },
    })
}

#[derive(Serialize)]
struct ConductorOut {
    schema: &'static str,
    command: &'static str,
    invariants: CianiTuple,
    #[serde(flatten)]
    report: ConductorReport,
    twists: Vec<TwistDescriptor>,
}

fn cmd_conductor(arg: &TupleArg, p: u64) -> Result<ConductorOut, Error> {
    let t = nonsingular(&arg.invariants)?;
    let report = conductor(&t, p)?;
    Ok(ConductorOut {
        schema: SCHEMA,
        command: "conductor",
        twists: twists(&t, p)?,
        invariants: t,
        report,
    })
}

#[derive(Serialize)]
struct ScanRow {
    prime: u64,
    reduction: ReductionType,
    e: Option<u32>,
    splitting_degree: u8,
    conductor_min: Option<u32>,
    nu_q: ExtValuation,
    nu_delta: ExtValuation,
}

#[derive(Serialize)]
struct ScanOut {
    schema: &'static str,
    command: &'static str,
    invariants: CianiTuple,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<u64>,
    rows: Vec<ScanRow>,
    /// Statement about primes without a row; absent for explicit prime lists.
    #[serde(skip_serializing_if = "Option::is_none")]
    remaining: Option<String>,
    notes: Vec<String>,
    unscanned: Vec<String>,
}

fn scan_row(t: &CianiTuple, p: u64) -> Result<ScanRow, Error> {
    let report = conductor(t, p)?;
    let e = match report.reduction {
        ReductionType::GoodHyperelliptic { e } => Some(e),
        _ => None,
    };
    let prof = t.normalize_at(p)?;
    Ok(ScanRow {
        prime: p,
        reduction: report.reduction,
        e,
        splitting_degree: report.splitting_degree,
        conductor_min: report.conductor_min,
        nu_q: report.nu_q,
        nu_delta: prof.discriminant_valuation(),
    })
}

/// Primes `p > 3` up to `bound` at which the reduction may be bad, plus notes
/// on 2 and 3 and the cofactors that trial division could not split.
fn candidates(t: &CianiTuple, bound: u64) -> (BTreeSet<u64>, Vec<String>, Vec<String>) {
    let named: Vec<(&str, Rational)> = vec![
        ("Δ", t.discriminant()),
        ("Q", t.q_invariant()),
        ("I3", t.i3.clone()),
        ("I3'", t.i3p.clone()),
        ("I3''", t.i3pp.clone()),
        ("I6", t.i6.clone()),
    ];
    let mut primes = BTreeSet::new();
    let mut small: BTreeSet<(u64, &str)> = BTreeSet::new();
    let mut unscanned = BTreeSet::new();
    for (k, (name, q)) in named.iter().enumerate() {
        // Numerators of Δ and Q, and denominators of everything, can carry bad primes.
        let parts = if k < 2 { vec![q.numer(), q.denom()] } else { vec![q.denom()] };
        for n in parts.into_iter().filter(|n| !num_traits::Zero::is_zero(*n)) {
            let (found, cofactor) = trial_factor(n, bound);
            for (p, _) in found {
                if p <= 3 {
                    small.insert((p, name));
                } else {
                    primes.insert(p);
                }
            }
            if !num_traits::One::is_one(&cofactor) {
                unscanned.insert(cofactor.to_string());
            }
        }
    }
    let notes = small
        .into_iter()
        .map(|(p, name)| format!("{p} divides {name} (p = {p} is not supported)"))
        .collect();
    (primes, notes, unscanned.into_iter().collect())
}

fn cmd_scan(arg: &TupleArg, primes: Option<&[u64]>, bound: u64) -> Result<ScanOut, Error> {
    let t = nonsingular(&arg.invariants)?;
    if t.is_special()? {
        return Err(Error::Special);
    }
    let (list, notes, unscanned, bound, remaining) = match primes {
        Some(ps) => {
            let set: BTreeSet<u64> = ps.iter().copied().collect();
            (set, vec![], vec![], None, None)
        }
        None => {
            let (set, notes, unscanned) = candidates(&t, bound);
            let remaining = format!(
                "every other prime 3 < p <= {bound} has good quartic reduction, nu_q = 0 and f = 0"
            );
            (set, notes, unscanned, Some(bound), Some(remaining))
        }
    };
    let mut rows = list
        .into_par_iter()
        .map(|p| scan_row(&t, p))
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by_key(|r| r.prime);
    Ok(ScanOut {
        schema: SCHEMA,
        command: "scan",
        invariants: t,
        bound,
        rows,
        remaining,
        notes,
        unscanned,
    })
}

fn emit<T: Serialize>(value: &T, text: bool, table: Option<&str>) -> ExitCode {
    let json = serde_json::to_value(value).expect("reports serialise");
    if text {
        print!("{}", render::text(&json, table));
    } else {
        println!("{}", serde_json::to_string_pretty(&json).expect("reports serialise"));
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = cli.text && !cli.json;
    let result = match &cli.command {
        Command::Invariants { model } => cmd_invariants(model).map(|o| emit(&o, text, None)),
        Command::Reconstruct(arg) => cmd_reconstruct(arg).map(|o| emit(&o, text, None)),
        Command::Classify { tuple, prime } => cmd_classify(tuple, *prime).map(|o| emit(&o, text, None)),
        Command::Conductor { tuple, prime } => cmd_conductor(tuple, *prime).map(|o| emit(&o, text, None)),
        Command::Scan { tuple, primes, bound } => {
            cmd_scan(tuple, primes.as_deref(), *bound).map(|o| emit(&o, text, Some("rows")))
        }
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(exit_code(&e))
    })
}
