//! `lech` — exact multiplicity, colength, and integral-closure computations
//! for monomial ideals, with bound verification, enumeration, and T-graded
//! experiments. All arithmetic is exact; reports carry rationals as "p/q".

mod expr;
mod fail;
mod report;
mod tspec;

use clap::{Parser, Subcommand, ValueEnum};
use fail::{Failure, EXIT_VIOLATION};
use lech_core::bounds::{evaluate, BoundContext, BoundName};
use lech_core::closure::{integral_closure, m_full_certificate, FullnessStatus};
use lech_core::enumerate::{
    enumerate_ideals, sup_ratio_curve, EnumerationMode, EnumerationSpec, IdealFilter,
};
use lech_core::multiplicity::{default_n_max, multiplicity, newton_multiplicity_2d};
use lech_core::tgraded::{bracket_power_experiment, double_graded_check, mumford_chain_check};
use rayon::prelude::*;
use report::{rational_str, ratio_report_json, json_u64, Row};
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "lech",
    version,
    about = "Exact multiplicities, colengths, closures, and bound reports for monomial ideals"
)]
struct Cli {
    /// Worker threads for parallel verification (output order is
    /// deterministic regardless).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Newton,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TCheck {
    Mumford,
    Mingens,
    Doublegraded,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert-Samuel multiplicity of an ideal.
    Mult {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
    },
    /// Integral closure and the m-fullness certificate.
    Closure {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
    },
    /// Evaluate named bounds on one ideal.
    Verify {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
        /// Comma-separated: lech,hanes,mfull2,dimd,colength (lech_strict
        /// is included with lech in dimension >= 2).
        #[arg(long)]
        bounds: String,
    },
    /// Enumerate m-primary ideals by colength and report each against the
    /// multiplicity bound.
    Search {
        #[arg(long)]
        ring: String,
        #[arg(long = "max-colength")]
        max_colength: u64,
        #[arg(long = "closed-only")]
        closed_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exact maxima of e/(d! l) up to each colength cutoff.
    SupCurve {
        #[arg(long)]
        ring: String,
        /// Comma-separated colength cutoffs, e.g. 2,4,6,8.
        #[arg(long)]
        cutoffs: String,
    },
    /// Checks on a T-graded ideal loaded from a JSON spec.
    Tgraded {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum)]
        check: TCheck,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
    },
    /// Bracket-power experiment over a one-dimensional base.
    Bracket {
        #[arg(long)]
        spec: PathBuf,
        /// Comma-separated list of q values, e.g. 2,4,8,16,32.
        #[arg(long)]
        q: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let jobs = cli.jobs.max(1);
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .ok();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("{}", serde_json::to_string(&f.to_json()).expect("error json"));
            std::process::exit(f.exit_code);
        }
    }
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Mult { ring, ideal, method, n_max } => cmd_mult(&ring, &ideal, method, n_max),
        Command::Closure { ring, ideal } => cmd_closure(&ring, &ideal),
        Command::Verify { ring, ideal, bounds } => cmd_verify(&ring, &ideal, &bounds),
        Command::Search { ring, max_colength, closed_only, out, format } => {
            cmd_search(&ring, max_colength, closed_only, out.as_deref(), format)
        }
        Command::SupCurve { ring, cutoffs } => cmd_sup_curve(&ring, &cutoffs),
        Command::Tgraded { spec, check, n_max } => cmd_tgraded(&spec, check, n_max),
        Command::Bracket { spec, q } => cmd_bracket(&spec, &q),
    }
}

fn emit(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report json")
    );
}

fn cmd_mult(
    ring_spec: &str,
    ideal_text: &str,
    method: Method,
    n_max: Option<usize>,
) -> Result<i32, Failure> {
    let ring = expr::parse_ring(ring_spec)?;
    let ideal = expr::parse_ideal(ideal_text, &ring)?;
    let n_max = n_max.unwrap_or_else(|| default_n_max(ring.dim()));

    let oracle_e = match method {
        Method::Oracle | Method::Both => Some(multiplicity(&ideal, n_max)?),
        Method::Newton => None,
    };
    let newton_e = match method {
        Method::Newton | Method::Both => Some(newton_multiplicity_2d(&ideal)?),
        Method::Oracle => None,
    };
    let methods_agree = match (oracle_e, newton_e) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let e = oracle_e.or(newton_e).expect("some method ran");

    emit(&json!({
        "ring": ring.describe(),
        "ideal": ideal.describe(),
        "method": match method {
            Method::Oracle => "oracle",
            Method::Newton => "newton",
            Method::Both => "both",
        },
        "n_max": n_max,
        "e": json_u64(e),
        "oracle_e": oracle_e.map(json_u64),
        "newton_e": newton_e.map(json_u64),
        "methods_agree": methods_agree,
    }));
    Ok(if methods_agree == Some(false) { EXIT_VIOLATION } else { 0 })
}

fn cmd_closure(ring_spec: &str, ideal_text: &str) -> Result<i32, Failure> {
    let ring = expr::parse_ring(ring_spec)?;
    let ideal = expr::parse_ideal(ideal_text, &ring)?;
    let closed = integral_closure(&ideal)?;
    let is_closed = closed == ideal;
    let cert = m_full_certificate(&ideal)?;
    let mut added = Vec::new();
    for g in closed.generators() {
        if !ideal.contains(g)? {
            added.push(lech_core::ideal::monomial_text(g));
        }
    }

    emit(&json!({
        "ring": ring.describe(),
        "ideal": ideal.describe(),
        "closure": closed.describe(),
        "is_closed": is_closed,
        "certificate": match cert.status {
            FullnessStatus::MFullByClosure => "m_full_by_closure",
            FullnessStatus::Unknown => "unknown",
        },
        "certificate_witness": cert.witness,
        "added_generators": added,
    }));
    Ok(0)
}

fn parse_bounds(list: &str) -> Result<Vec<BoundName>, Failure> {
    let mut out = Vec::new();
    for part in list.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let bound = BoundName::parse(part).ok_or_else(|| {
            Failure::input("invalid_argument", format!("unknown bound '{part}'"))
        })?;
        out.push(bound);
        // Lech in dimension >= 2 is reported together with its strict form.
        if bound == BoundName::Lech && !out.contains(&BoundName::LechStrict) {
            out.push(BoundName::LechStrict);
        }
    }
    if out.is_empty() {
        return Err(Failure::input("invalid_argument", "no bounds requested"));
    }
    Ok(out)
}

fn cmd_verify(ring_spec: &str, ideal_text: &str, bounds: &str) -> Result<i32, Failure> {
    let ring = expr::parse_ring(ring_spec)?;
    let ideal = expr::parse_ideal(ideal_text, &ring)?;
    let names = parse_bounds(bounds)?;
    let ctx = BoundContext::new(ring.clone())?;
    let report = evaluate(&ideal, &names, &ctx)?;
    emit(&ratio_report_json(&ring.describe(), &report));
    let bad = report.violations().count() + report.rejections().count();
    Ok(if bad > 0 { EXIT_VIOLATION } else { 0 })
}

fn cmd_search(
    ring_spec: &str,
    max_colength: u64,
    closed_only: bool,
    out: Option<&std::path::Path>,
    format: Format,
) -> Result<i32, Failure> {
    let ring = expr::parse_ring(ring_spec)?;
    let spec = EnumerationSpec {
        ambient: ring.clone(),
        mode: EnumerationMode::ByColength { max: max_colength },
        filter: if closed_only {
            IdealFilter::IntegrallyClosed
        } else {
            IdealFilter::All
        },
    };
    let ideals = enumerate_ideals(&spec)?;
    let ctx = BoundContext::new(ring.clone())?;

    let reports: Result<Vec<_>, lech_core::Error> = ideals
        .par_iter()
        .map(|i| evaluate(i, &[BoundName::Lech], &ctx))
        .collect();
    let rows: Vec<Row> = reports?.iter().flat_map(Row::from_report).collect();

    let config = json!({
        "ring": ring.describe(),
        "max_colength": max_colength,
        "closed_only": closed_only,
        "bounds": ["lech"],
        "n_max": default_n_max(ring.dim()),
    });
    let rendered = match format {
        Format::Json => report::render_rows_json(&config, &rows),
        Format::Csv => report::render_rows_csv(&rows)?,
    };
    match out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(if rows.iter().any(Row::is_violation) { EXIT_VIOLATION } else { 0 })
}

fn cmd_sup_curve(ring_spec: &str, cutoffs: &str) -> Result<i32, Failure> {
    let ring = expr::parse_ring(ring_spec)?;
    let cutoffs: Vec<u64> = cutoffs
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim().parse::<u64>().map_err(|_| {
                Failure::input("invalid_argument", format!("bad cutoff '{s}'"))
            })
        })
        .collect::<Result<_, _>>()?;
    let spec = EnumerationSpec {
        ambient: ring.clone(),
        mode: EnumerationMode::ByColength { max: 1 },
        filter: IdealFilter::All,
    };
    let curve = sup_ratio_curve(&spec, &cutoffs)?;
    emit(&json!({
        "ring": ring.describe(),
        "cutoffs": cutoffs,
        "rows": curve.rows.iter().map(|r| json!({
            "cutoff": r.cutoff,
            "max_ratio": rational_str(&r.max_ratio),
            "argmax": r.argmax,
            "band_max": r.band_max.as_ref().map(rational_str),
            "band_argmax": r.band_argmax,
        })).collect::<Vec<_>>(),
    }));
    Ok(0)
}

fn cmd_tgraded(
    spec_path: &std::path::Path,
    check: TCheck,
    n_max: Option<usize>,
) -> Result<i32, Failure> {
    let (ideal, _) = tspec::load(spec_path)?;
    let n_max = n_max.unwrap_or_else(|| default_n_max(ideal.base().dim() + 1));
    let (value, holds) = match check {
        TCheck::Mumford => {
            let r = mumford_chain_check(&ideal, n_max)?;
            (
                json!({
                    "ideal": ideal.describe(),
                    "check": "mumford",
                    "lhs": rational_str(&r.lhs),
                    "mid": rational_str(&r.mid),
                    "rhs": rational_str(&r.rhs),
                    "holds": r.holds(),
                }),
                r.holds(),
            )
        }
        TCheck::Mingens => {
            let r = ideal.t_min_gens()?;
            (
                json!({
                    "ideal": ideal.describe(),
                    "check": "mingens",
                    "mu": json_u64(r.mu),
                    "bound": json_u64(r.bound),
                    "holds": r.holds(),
                }),
                r.holds(),
            )
        }
        TCheck::Doublegraded => {
            let r = double_graded_check(&ideal, n_max)?;
            (
                json!({
                    "ideal": ideal.describe(),
                    "check": "doublegraded",
                    "t_length": json_u64(r.t_length),
                    "component_lengths": r.component_lengths,
                    "flattened_length": json_u64(r.flattened_length),
                    "e": json_u64(r.e_value),
                    "closure_e": json_u64(r.closure_e_value),
                    "closure_t_length": json_u64(r.closure_t_length),
                    "holds": r.holds(),
                }),
                r.holds(),
            )
        }
    };
    emit(&value);
    Ok(if holds { 0 } else { EXIT_VIOLATION })
}

fn cmd_bracket(spec_path: &std::path::Path, q: &str) -> Result<i32, Failure> {
    let (ideal, choice) = tspec::load(spec_path)?;
    let choice = choice.ok_or_else(|| {
        Failure::input(
            "invalid_argument",
            "the spec file must list \"generators\" for bracket experiments",
        )
    })?;
    let q_list: Vec<u64> = q
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Failure::input("invalid_argument", format!("bad q '{s}'")))
        })
        .collect::<Result<_, _>>()?;
    let trace = bracket_power_experiment(&ideal, &choice, &q_list)?;
    let all_hold = trace.all_identities_hold();
    emit(&json!({
        "ideal": ideal.describe(),
        "q_rows": trace.rows.iter().map(|r| json!({
            "q": r.q,
            "length": json_u64(r.length),
            "length_by_formula": json_u64(r.length_by_formula),
            "identity_holds": r.identity_holds(),
            "s": r.s,
            "surjection_rhs": r.surjection_rhs.to_string(),
            "surjection_holds": r.surjection_holds(),
            "ratio": rational_str(&r.ratio),
        })).collect::<Vec<_>>(),
        "limit_estimate": rational_str(&trace.limit_estimate),
        "target": json_u64(trace.target),
        "e": json_u64(trace.e_value),
        "lower_bound": rational_str(&trace.lower_bound),
        "all_hold": all_hold,
    }));
    Ok(if all_hold { 0 } else { EXIT_VIOLATION })
}
