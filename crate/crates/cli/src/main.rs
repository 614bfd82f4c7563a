use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use critdisc::exactnum::{parse_bigint, parse_rat};
use critdisc::family::{is_member, StandardPair};
use critdisc::lattes::{
    build_lattes, double_point, reduction_type_at, szpiro_local_check, verify_identities,
    weierstrass_invariants, Cubic, EllipticPoint, ReductionType,
};
use critdisc::reduction::{
    local_minimize, minimal_critical_discriminant, szpiro_report, GlobalDiscriminant, GlobalEntry,
    DEFAULT_M_MAX,
};
use critdisc::{Error, Poly};

mod scan;

const M_MAX_ENV: &str = "CRITDISC_M_MAX";

/// Exact critical discriminants of rational maps `A/B` over the rationals.
#[derive(Parser, Debug)]
#[command(name = "critdisc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Wronskian, critical discriminant and family membership of a pair.
    Eval(PairArgs),
    /// Minimal critical discriminant at one prime or globally.
    Minimize(MinimizeArgs),
    /// Lattès map of y^2 = x^3 + a x^2 + b x + c.
    Lattes(LattesArgs),
    /// Survey a family and write one CSV row per member.
    Scan(ScanArgs),
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: String,
}

#[derive(Args, Debug)]
struct MinimizeArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, conflicts_with = "global", required_unless_present = "global")]
    p: Option<String>,
    #[arg(long)]
    global: bool,
    /// Deepest multi-level jump; defaults to $CRITDISC_M_MAX or 2.
    #[arg(long, allow_negative_numbers = true)]
    m_max: Option<i64>,
}

#[derive(Args, Debug)]
struct LattesArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    /// Check the discriminant identities exactly.
    #[arg(long)]
    verify: bool,
    /// Double the point (x0, y0).
    #[arg(long, num_args = 2, value_names = ["X0", "Y0"], allow_hyphen_values = true)]
    double: Option<Vec<String>>,
    /// Classify the curve at an odd prime.
    #[arg(long)]
    reduction_type: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    m_max: Option<i64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    /// Lattès maps of integral cubics.
    Lattes,
    /// Centered members of F_{d,lambda} with integral coefficients.
    F,
}

#[derive(Args, Debug)]
pub(crate) struct ScanArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// `amin amax bmin bmax cmin cmax` for lattes, `lo hi` for f.
    #[arg(long, num_args = 2..=6, allow_negative_numbers = true)]
    range: Vec<i64>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, allow_negative_numbers = true)]
    m_max: Option<i64>,
}

pub(crate) fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain(_) | Error::Parse(_) | Error::NotIntegral { .. } => 1,
        Error::NotMember(_) => 2,
        Error::Consistency(_) => 3,
    }
}

pub(crate) fn resolve_m_max(flag: Option<i64>) -> critdisc::Result<i64> {
    if let Some(m) = flag {
        return Ok(m);
    }
    match std::env::var(M_MAX_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{M_MAX_ENV}={s:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_M_MAX),
    }
}

fn parse_pair(args: &PairArgs) -> critdisc::Result<StandardPair> {
    let lambda = parse_rat(&args.lambda)?;
    let a: Poly = args.a.parse()?;
    let b: Poly = args.b.parse()?;
    StandardPair::new(args.d, lambda, a, b)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn cmd_eval(args: &PairArgs) -> critdisc::Result<Value> {
    let pair = parse_pair(args)?;
    let report = is_member(&pair);
    Ok(json!({
        "pair": to_json(&pair),
        "wronskian": pair.wronskian().to_string(),
        "delta": report.delta.to_string(),
        "membership": to_json(&report),
    }))
}

fn cmd_minimize(args: &MinimizeArgs) -> critdisc::Result<Value> {
    let pair = parse_pair(&args.pair)?;
    let m_max = resolve_m_max(args.m_max)?;
    if !is_member(&pair).member {
        return Err(Error::NotMember(format!(
            "{pair} fails the membership conditions"
        )));
    }
    if args.global {
        let gd = minimal_critical_discriminant(&pair, m_max)?;
        let sz = szpiro_report(&gd, pair.d());
        return Ok(json!({ "global": to_json(&gd), "szpiro": to_json(&sz) }));
    }
    let p = parse_bigint(args.p.as_deref().expect("clap requires --p or --global"))?;
    let r = local_minimize(&pair, &p, m_max)?;
    let single = GlobalDiscriminant {
        excluded_primes: Vec::new(),
        entries: (r.delta > 0)
            .then(|| GlobalEntry {
                p: p.clone(),
                delta: r.delta,
                certified: r.certified,
            })
            .into_iter()
            .collect(),
    };
    let sz = szpiro_report(&single, pair.d());
    Ok(json!({ "local": to_json(&r), "szpiro": to_json(&sz) }))
}

fn cmd_lattes(args: &LattesArgs) -> critdisc::Result<Value> {
    let cubic = Cubic::new(
        parse_rat(&args.a)?,
        parse_rat(&args.b)?,
        parse_rat(&args.c)?,
    )?;
    let pair = build_lattes(&cubic);
    let mut out = json!({
        "cubic": to_json(&cubic),
        "pair": to_json(&pair),
        "invariants": to_json(&weierstrass_invariants(&cubic)),
        "delta": pair.critical_discriminant().to_string(),
    });
    if args.verify {
        out["identities"] = to_json(&verify_identities(&cubic)?);
    }
    if let Some(xy) = &args.double {
        let x = parse_rat(&xy[0])?;
        let y = parse_rat(&xy[1])?;
        let point = EllipticPoint::affine(x.clone(), y);
        let doubled = double_point(&point, &cubic)?;
        let mut d = json!({ "point": to_json(&point), "double": to_json(&doubled) });
        if let Some(x2) = doubled.x() {
            d["x"] = Value::String(x2.to_string());
            let image = pair.a().eval(&x) / pair.b().eval(&x);
            if &image != x2 {
                return Err(Error::Consistency(format!(
                    "Lattes image {image} differs from x(2P) = {x2}"
                )));
            }
            d["lattes_image"] = Value::String(image.to_string());
        }
        out["doubling"] = d;
    }
    if let Some(ps) = &args.reduction_type {
        let p = parse_bigint(ps)?;
        let rt = reduction_type_at(&cubic, &p)?;
        let mut r = to_json(&rt);
        if rt.kind != ReductionType::AdditiveOrNonminimal {
            let m_max = resolve_m_max(args.m_max)?;
            r["szpiro_local"] = to_json(&szpiro_local_check(&cubic, &p, m_max)?);
        }
        out["reduction_type"] = r;
    }
    Ok(out)
}

fn run(cli: Cli) -> critdisc::Result<()> {
    let value = match &cli.command {
        Command::Eval(a) => cmd_eval(a)?,
        Command::Minimize(a) => cmd_minimize(a)?,
        Command::Lattes(a) => cmd_lattes(a)?,
        Command::Scan(a) => return scan::run(a),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("valid JSON")
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("critdisc: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
