//! Family scans: one CSV row per member, in lexicographic parameter order.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;

use critdisc::exactnum::{parse_rat, rat_int};
use critdisc::family::{epsilon, is_member, StandardPair};
use critdisc::lattes::{build_lattes, Cubic};
use critdisc::reduction::{minimal_critical_discriminant, szpiro_report};
use critdisc::{Error, Rat, Result};

use crate::{resolve_m_max, Family, ScanArgs};

struct Row {
    key: Vec<String>,
    norm_delta: String,
    norm_radical: String,
    ratio: Option<String>,
    all_certified: bool,
    ms: f64,
}

/// Every integer tuple in the box `ranges`, lexicographically.
fn grid(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |v| {
                    let mut t = prefix.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

enum Member {
    Lattes(Vec<i64>),
    Centered {
        d: usize,
        lambda: Rat,
        params: Vec<i64>,
    },
}

impl Member {
    /// `None` for degenerate parameters.
    fn pair(&self) -> Option<StandardPair> {
        match self {
            Member::Lattes(t) => Cubic::from_ints(t[0], t[1], t[2])
                .ok()
                .map(|c| build_lattes(&c)),
            Member::Centered { d, lambda, params } => {
                let d = *d;
                // free: a_0..a_{d-2}, then b_0..b_{d-3}; a_{d-1} = b_{d-2} = 0
                let mut a: Vec<Rat> = params[..d - 1].iter().map(|&v| rat_int(v)).collect();
                a.push(Rat::from_integer(0.into()));
                let mut b: Vec<Rat> = params[d - 1..].iter().map(|&v| rat_int(v)).collect();
                b.push(Rat::from_integer(0.into()));
                let pair = StandardPair::from_lower_coeffs(lambda.clone(), &a, &b).ok()?;
                is_member(&pair).member.then_some(pair)
            }
        }
    }

    fn key(&self, pair: &StandardPair) -> Vec<String> {
        match self {
            Member::Lattes(t) => t.iter().map(|v| v.to_string()).collect(),
            Member::Centered { .. } => vec![format!("({})/({})", pair.a(), pair.b())],
        }
    }
}

fn evaluate(member: &Member, m_max: i64) -> Result<Option<Row>> {
    let start = Instant::now();
    let pair = match member.pair() {
        Some(p) => p,
        None => return Ok(None),
    };
    let gd = minimal_critical_discriminant(&pair, m_max)?;
    let sz = szpiro_report(&gd, pair.d());
    Ok(Some(Row {
        key: member.key(&pair),
        norm_delta: sz.norm_delta.to_string(),
        norm_radical: sz.norm_radical.to_string(),
        ratio: sz.ratio,
        all_certified: sz.all_certified,
        ms: start.elapsed().as_secs_f64() * 1e3,
    }))
}

fn members(args: &ScanArgs) -> Result<(Vec<&'static str>, Vec<Member>)> {
    let pairs = |r: &[i64]| -> Vec<(i64, i64)> { r.chunks(2).map(|c| (c[0], c[1])).collect() };
    match args.family {
        Family::Lattes => {
            if args.range.len() != 6 {
                return Err(Error::Domain(
                    "lattes scans need --range amin amax bmin bmax cmin cmax".into(),
                ));
            }
            let items = grid(&pairs(&args.range))
                .into_iter()
                .map(Member::Lattes)
                .collect();
            Ok((vec!["a", "b", "c"], items))
        }
        Family::F => {
            let (d, lambda) = match (&args.d, &args.lambda) {
                (Some(d), Some(l)) => (*d, parse_rat(l)?),
                _ => return Err(Error::Domain("f scans need --d and --lambda".into())),
            };
            if d < 2 {
                return Err(Error::Domain("f scans need d >= 2".into()));
            }
            epsilon(d, &lambda)?;
            if args.range.len() != 2 {
                return Err(Error::Domain("f scans need --range lo hi".into()));
            }
            let free = 2 * d - 3;
            let box_ranges = vec![(args.range[0], args.range[1]); free];
            let items = grid(&box_ranges)
                .into_iter()
                .map(|params| Member::Centered {
                    d,
                    lambda: lambda.clone(),
                    params,
                })
                .collect();
            Ok((vec!["pair"], items))
        }
    }
}

fn io_error(what: impl std::fmt::Display) -> Error {
    Error::Domain(format!("cannot write scan output: {what}"))
}

pub(crate) fn run(args: &ScanArgs) -> Result<()> {
    let m_max = resolve_m_max(args.m_max)?;
    let (key_cols, items) = members(args)?;
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(
            std::fs::File::create(path)
                .map_err(|e| io_error(format!("{}: {e}", path.display())))?,
        ),
        None => Box::new(std::io::stdout()),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("cannot start workers: {e}")))?;
    let results: Vec<Option<Row>> = pool.install(|| {
        items
            .par_iter()
            .map(|m| evaluate(m, m_max))
            .collect::<Result<_>>()
    })?;

    let mut w = csv::Writer::from_writer(sink);
    let mut header: Vec<&str> = key_cols.clone();
    header.extend(["norm_delta", "norm_radical", "ratio", "all_certified", "ms"]);
    w.write_record(&header).map_err(io_error)?;
    let mut skipped = 0usize;
    let mut best: Option<(f64, &Row)> = None;
    for r in &results {
        let row = match r {
            Some(row) => row,
            None => {
                skipped += 1;
                continue;
            }
        };
        let mut rec = row.key.clone();
        rec.push(row.norm_delta.clone());
        rec.push(row.norm_radical.clone());
        rec.push(row.ratio.clone().unwrap_or_default());
        rec.push(row.all_certified.to_string());
        rec.push(format!("{:.3}", row.ms));
        w.write_record(&rec).map_err(io_error)?;
        if let Some(ratio) = &row.ratio {
            let v: f64 = ratio.parse().expect("decimal ratio");
            if best.is_none_or(|(b, _)| v > b) {
                best = Some((v, row));
            }
        }
    }
    let mut sink = w.into_inner().map_err(|e| io_error(e.error()))?;
    if skipped > 0 {
        writeln!(sink, "# skipped {skipped}").map_err(io_error)?;
    }
    sink.flush().map_err(io_error)?;
    let rows = results.len() - skipped;
    match best {
        Some((_, row)) => eprintln!(
            "scanned {} members: {rows} rows, {skipped} skipped; max ratio {} at {}",
            results.len(),
            row.ratio.as_deref().unwrap_or(""),
            row.key.join(",")
        ),
        None => eprintln!(
            "scanned {} members: {rows} rows, {skipped} skipped; no ratio defined",
            results.len()
        ),
    }
    Ok(())
}
