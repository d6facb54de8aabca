use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use lcdag_core::ag::{designed_parameters, hermitian_code, reed_solomon, Curve};
use lcdag_core::bounds::{crossover_intervals, BoundProfile, Interval};
use lcdag_core::codefile::{parse_code, write_code};
use lcdag_core::lcd::{check_condition_3_4, find_lcd_scaling, SearchMode};
use lcdag_core::LinearCode;
use serde::Serialize;
use serde_json::json;

use crate::args::{AgCommand, AgFamily, AuditCommand, CodeCommand, Command, Format, Mode};
use crate::format::{parse_ratio, round9, sig9};

/// Exit status when an audited condition is violated.
pub const EXIT_CONDITION_FAILS: u8 = 5;

/// Payload for stdout and the exit status to report.
pub struct Outcome {
    pub payload: String,
    pub exit: u8,
}

impl Outcome {
    fn ok(payload: String) -> Outcome {
        Outcome { payload, exit: 0 }
    }
}

pub fn run(command: &Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Bounds { q, grid, format } => bounds(*q, *grid, *format),
        Command::Crossover { q, precision, grid } => crossover(*q, *precision, *grid),
        Command::Ag(ag) => run_ag(ag),
        Command::Code(code) => run_code(code),
        Command::Lcdify {
            codefile,
            mode,
            seed,
            max_iters,
        } => lcdify(codefile, *mode, *seed, *max_iters),
        Command::Audit(AuditCommand::Counting {
            codefile,
            lambda,
            budget,
        }) => audit_counting(codefile, lambda, *budget),
    }
}

fn json_line(value: &impl Serialize) -> anyhow::Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn read_code(path: &Path) -> anyhow::Result<LinearCode> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_code(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Writes the code to `out`, or returns it as the payload.
fn emit_code(code: &LinearCode, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let text = write_code(code);
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn interval_json(iv: Option<Interval>) -> serde_json::Value {
    match iv {
        Some(iv) => json!({ "lo": round9(iv.lo), "hi": round9(iv.hi) }),
        None => serde_json::Value::Null,
    }
}

fn windows_json(profile: &BoundProfile) -> serde_json::Value {
    let w = &profile.windows;
    json!({
        "b1": round9(w.b1),
        "b2": round9(w.b2),
        "window1": interval_json(Some(w.window1)),
        "window2": interval_json(Some(w.window2)),
    })
}

fn bounds(q: u64, grid: usize, format: Format) -> anyhow::Result<Outcome> {
    // The grid alone needs no bisection; any positive precision will do.
    let profile = crossover_intervals(q, lcdag_core::bounds::DEFAULT_PRECISION, grid)?;
    let payload = match format {
        Format::Csv => {
            let mut out = String::from("delta,gv_rate,tv_rate,window1,window2\n");
            for p in &profile.grid {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    sig9(p.delta),
                    sig9(p.gv_rate),
                    sig9(p.tv_rate),
                    p.in_window_1,
                    p.in_window_2
                )?;
            }
            out
        }
        Format::Json => {
            let points: Vec<_> = profile
                .grid
                .iter()
                .map(|p| {
                    json!({
                        "delta": round9(p.delta),
                        "gv_rate": round9(p.gv_rate),
                        "tv_rate": round9(p.tv_rate),
                        "window1": p.in_window_1,
                        "window2": p.in_window_2,
                    })
                })
                .collect();
            json_line(&json!({
                "q": q,
                "lambda_q": profile.lambda_q.to_string(),
                "windows": windows_json(&profile),
                "grid": points,
                "crossover_1": interval_json(profile.crossover_1),
                "crossover_2": interval_json(profile.crossover_2),
            }))?
        }
    };
    Ok(Outcome::ok(payload))
}

fn crossover(q: u64, precision: f64, grid: usize) -> anyhow::Result<Outcome> {
    let profile = crossover_intervals(q, precision, grid)?;
    Ok(Outcome::ok(json_line(&json!({
        "q": q,
        "lambda_q": profile.lambda_q.to_string(),
        "windows": windows_json(&profile),
        "interval_1": interval_json(profile.crossover_1),
        "interval_2": interval_json(profile.crossover_2),
    }))?))
}

fn run_ag(command: &AgCommand) -> anyhow::Result<Outcome> {
    match command {
        AgCommand::Hermitian { params, out } => emit_code(&hermitian_code(params.r, params.m)?, out.as_deref()),
        AgCommand::Rs { params, out } => emit_code(&reed_solomon(params.q, params.n, params.m)?, out.as_deref()),
        AgCommand::Info(family) => ag_info(family),
    }
}

fn ag_info(family: &AgFamily) -> anyhow::Result<Outcome> {
    let (name, code, genus, m) = match *family {
        AgFamily::Hermitian(p) => (
            "hermitian",
            hermitian_code(p.r, p.m)?,
            Curve::hermitian_default(p.r)?.genus(),
            p.m,
        ),
        AgFamily::Rs(p) => ("rs", reed_solomon(p.q, p.n, p.m)?, 0, p.m),
    };
    let designed = designed_parameters(code.n(), m, genus)
        .ok()
        .map(|d| json!({ "k": d.k, "d_lower": d.d_lower, "k_dual": d.k_dual, "d_dual_lower": d.d_dual_lower }));
    let dual = code.dual();
    Ok(Outcome::ok(json_line(&json!({
        "curve": name,
        "q": code.field().order(),
        "n": code.n(),
        "k": code.k(),
        "g": genus,
        "m": m,
        "designed": designed,
        "min_distance": code.min_distance().ok(),
        "dual_min_distance": dual.min_distance().ok(),
    }))?))
}

fn run_code(command: &CodeCommand) -> anyhow::Result<Outcome> {
    match command {
        CodeCommand::Info { codefile, budget } => {
            let code = read_code(codefile)?;
            let dual = code.dual();
            let f = code.field();
            Ok(Outcome::ok(json_line(&json!({
                "q": f.order(),
                "modulus": format!("{:#x}", f.modulus()),
                "n": code.n(),
                "k": code.k(),
                "dual_k": dual.k(),
                "hull_dimension": code.hull_dimension(),
                "is_lcd": code.is_lcd(),
                "min_distance": code.min_distance_with_budget(*budget).ok(),
                "dual_min_distance": dual.min_distance_with_budget(*budget).ok(),
            }))?))
        }
        CodeCommand::Dual { codefile, out } => emit_code(&read_code(codefile)?.dual(), out.as_deref()),
    }
}

#[derive(Serialize)]
struct Certificate {
    a: Vec<String>,
    mode: &'static str,
    iterations: u64,
    verified: bool,
}

fn lcdify(path: &Path, mode: Mode, seed: Option<u64>, max_iters: u64) -> anyhow::Result<Outcome> {
    let search = match (mode, seed) {
        (Mode::Exhaustive, _) => SearchMode::Exhaustive,
        (Mode::Random, Some(seed)) => SearchMode::Randomized { seed },
        (Mode::Random, None) => bail!("--mode random needs an explicit --seed"),
    };
    let code = read_code(path)?;
    let cert = find_lcd_scaling(&code, search, max_iters)?;
    // Re-check on the canonical scaled code before reporting success.
    let verified = cert.verified && code.scale(&cert.a)?.is_lcd();
    if !verified {
        bail!("certificate failed re-verification");
    }
    let payload = json_line(&Certificate {
        a: cert.a.iter().map(|x| x.to_string()).collect(),
        mode: cert.mode.name(),
        iterations: cert.iterations,
        verified,
    })?;
    Ok(Outcome::ok(payload))
}

fn audit_counting(path: &Path, lambda: &str, budget: u64) -> anyhow::Result<Outcome> {
    let lambda = parse_ratio(lambda)?;
    let code = read_code(path)?;
    let report = check_condition_3_4(&code, lambda, budget)?;
    let mut out = String::from("I,w,s_count,s_dual_count,bound_ok\n");
    for r in &report.reports {
        writeln!(
            out,
            "{:x},{},{},{},{}",
            r.set,
            r.w,
            r.s_count,
            r.s_dual_count,
            r.bound_ok()
        )?;
    }
    Ok(Outcome {
        payload: out,
        exit: if report.pass { 0 } else { EXIT_CONDITION_FAILS },
    })
}
