//! Text and JSON rendering for the `dj` commands.
//!
//! Every command produces a [`Rendered`] value: the body to print and whether
//! all of its checks passed. JSON bodies are a single document with the
//! top-level keys `command`, `inputs`, `results` and `pass`; keys are emitted
//! in sorted order so parsing and re-serializing is byte-identical. Text
//! bodies print reals with 12 significant digits and exact integers as
//! integers.

use std::fmt::Write as _;
use std::str::FromStr;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::classical::{min_classical_queries, Bit, BitPair, OneBitFunction, Verdict};
use crate::protocol::{prepare_input, run, DJOutcome};
use crate::quantum::{apply_oracle, oracle_matrix, tensor, Qubit, TwoQubitState};
use crate::solver::{
    case_tree, distinct_solutions, grid_search, identification_infeasibility, residuals,
    solve_real_cases, validate_step, CandidateState, FeasibleC4, NEAR_FEASIBLE_THRESHOLD,
};
use crate::{Result, EXACT_TOLERANCE};

/// ℓ∞ tolerance used when matching grid clusters to analytic solutions.
pub const GRID_AGREEMENT_TOLERANCE: f64 = 0.05;

/// Lowest acceptable Monte Carlo joint-violation bound for `impossible`.
pub const SWEEP_BOUND_THRESHOLD: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected text or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub body: String,
    pub pass: bool,
}

/// Formats a real with 12 significant digits, trailing zeros trimmed.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exponent) {
        let decimals = (11 - exponent).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    } else {
        let s = format!("{x:.11e}");
        let (mantissa, exp) = s.split_once('e').unwrap();
        let mantissa = if mantissa.contains('.') {
            mantissa.trim_end_matches('0').trim_end_matches('.')
        } else {
            mantissa
        };
        format!("{mantissa}e{exp}")
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt_real(z.re)
    } else if z.re == 0.0 {
        format!("{}i", fmt_real(z.im))
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{}{}i", fmt_real(z.re), sign, fmt_real(z.im.abs()))
    }
}

fn fmt_state(s: &TwoQubitState) -> String {
    let parts: Vec<String> = s.amplitudes().iter().map(|&z| fmt_complex(z)).collect();
    format!("({})", parts.join(", "))
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn state_json(s: &TwoQubitState) -> Value {
    Value::Array(s.amplitudes().iter().map(|&z| complex_json(z)).collect())
}

fn finish(
    format: OutputFormat,
    command: &str,
    inputs: Value,
    results: Value,
    text: String,
    pass: bool,
) -> Rendered {
    let body = match format {
        OutputFormat::Text => text,
        OutputFormat::Json => {
            let doc = json!({
                "command": command,
                "inputs": inputs,
                "results": results,
                "pass": pass,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("report is valid JSON");
            s.push('\n');
            s
        }
    };
    Rendered { body, pass }
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

pub fn matrices(format: OutputFormat) -> Rendered {
    let mut text = String::new();
    let mut results = serde_json::Map::new();
    let mut pass = true;
    for f in OneBitFunction::ALL {
        let m = oracle_matrix(f);
        pass &= m.is_permutation() && m.is_involution();
        writeln!(text, "F_{}:", f.label()).unwrap();
        for row in m.entries() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(text, "  {}", cells.join(" ")).unwrap();
        }
        results.insert(f.label().to_string(), json!(m.entries()));
    }
    finish(
        format,
        "matrices",
        json!({}),
        Value::Object(results),
        text,
        pass,
    )
}

// ---------------------------------------------------------------------------
// derive
// ---------------------------------------------------------------------------

fn sign_pattern_str(p: &[i8; 4]) -> String {
    p.iter()
        .map(|s| match s.signum() {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

pub fn derive(grid_step: Option<f64>, format: OutputFormat) -> Result<Rendered> {
    if let Some(step) = grid_step {
        validate_step(step)?;
    }
    let tree = case_tree();
    let solutions = solve_real_cases();
    let residuals_ok = solutions.len() == 4
        && distinct_solutions(&solutions).len() == 2
        && solutions.iter().all(|s| s.max_residual <= EXACT_TOLERANCE);

    let mut text = String::new();
    let mut cases_json = Vec::new();
    writeln!(text, "real-coefficient case analysis").unwrap();
    for (case, sol) in tree.iter().zip(solutions.iter()) {
        let (s12, s34) = case.label.signs();
        let apex = match case.feasible_c4 {
            FeasibleC4::Apex(c4) => c4.to_string(),
            other => format!("{other:?}"),
        };
        let d = case.discriminant;
        writeln!(
            text,
            "  {}: c1 = c2 {} 1, c3 = c4 {} 1; disc(t = c4) = {}; c4 = {}",
            case.label.as_str(),
            if s12 > 0 { '+' } else { '-' },
            if s34 > 0 { '+' } else { '-' },
            d,
            apex
        )
        .unwrap();
        let dup = match sol.duplicate_of {
            Some(l) => format!(" (global sign flip of {})", l.as_str()),
            None => String::new(),
        };
        writeln!(
            text,
            "    state = {}  max residual = {}{}",
            fmt_state(&sol.state),
            fmt_real(sol.max_residual),
            dup
        )
        .unwrap();
        cases_json.push(json!({
            "case": case.label.as_str(),
            "signs": [s12, s34],
            "discriminant": [d.a.to_string(), d.b.to_string(), d.c.to_string()],
            "c4": apex,
            "state": state_json(&sol.state),
            "max_residual": sol.max_residual,
            "duplicate_of": sol.duplicate_of.map(|l| l.as_str()),
        }));
    }
    writeln!(
        text,
        "distinct solutions: {}",
        distinct_solutions(&solutions).len()
    )
    .unwrap();

    let mut pass = residuals_ok;
    let mut grid_json = Value::Null;
    if let Some(step) = grid_step {
        let grid = grid_search(step)?;
        let agreement = grid.agreement(&solutions, GRID_AGREEMENT_TOLERANCE);
        pass &= agreement.holds;
        writeln!(
            text,
            "grid search: step {}, {} points scanned, {} survivors, {} clusters",
            fmt_real(step),
            grid.points_scanned,
            grid.survivors,
            grid.clusters.len()
        )
        .unwrap();
        let mut clusters_json = Vec::new();
        for (cluster, m) in grid.clusters.iter().zip(agreement.matches.iter()) {
            let matched = match m.matched {
                Some((label, sign)) => {
                    format!("{}{}", if sign > 0 { '+' } else { '-' }, label.as_str())
                }
                None => "none".to_string(),
            };
            writeln!(
                text,
                "  [{}] members {} representative {} -> {} (distance {})",
                sign_pattern_str(&cluster.sign_pattern),
                cluster.members,
                fmt_state(&cluster.representative.to_state()),
                matched,
                fmt_real(m.distance)
            )
            .unwrap();
            clusters_json.push(json!({
                "sign_pattern": cluster.sign_pattern,
                "members": cluster.members,
                "representative": state_json(&cluster.representative.to_state()),
                "representative_residual": cluster.representative_residual,
                "matched": matched,
                "distance": m.distance,
            }));
        }
        writeln!(text, "agreement: {}", agreement.holds).unwrap();
        grid_json = json!({
            "step": step,
            "axis_points": grid.axis_points,
            "points_scanned": grid.points_scanned,
            "survivors": grid.survivors,
            "clusters": clusters_json,
            "agreement": agreement.holds,
            "tolerance": GRID_AGREEMENT_TOLERANCE,
        });
    }
    writeln!(text, "pass: {pass}").unwrap();

    Ok(finish(
        format,
        "derive",
        json!({ "grid_step": grid_step }),
        json!({
            "cases": cases_json,
            "distinct_solutions": distinct_solutions(&solutions).len(),
            "grid": grid_json,
        }),
        text,
        pass,
    ))
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub struct OracleRun {
    pub function: OneBitFunction,
    /// `Err` carries the protocol violation message.
    pub outcome: std::result::Result<DJOutcome, String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KickbackCheck {
    pub function: OneBitFunction,
    pub control: Bit,
    pub max_error: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleCheck {
    pub function: OneBitFunction,
    pub permutation: bool,
    pub involution: bool,
    /// Agrees with the classical operator on all four basis pairs.
    pub basis_consistent: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub theta: f64,
    pub runs: Vec<OracleRun>,
    pub kickback: Vec<KickbackCheck>,
    pub oracles: Vec<OracleCheck>,
}

impl VerificationReport {
    pub fn verdicts_ok(&self) -> bool {
        self.runs.iter().all(|r| match &r.outcome {
            Ok(o) => o.verdict == r.function.class() && o.oracle_calls == 1,
            Err(_) => false,
        })
    }

    pub fn pass(&self) -> bool {
        self.verdicts_ok()
            && self.kickback.iter().all(|k| k.max_error <= EXACT_TOLERANCE)
            && self
                .oracles
                .iter()
                .all(|o| o.permutation && o.involution && o.basis_consistent)
    }
}

pub fn verification_report(theta: f64) -> Result<VerificationReport> {
    let input = prepare_input(theta)?;
    let runs = OneBitFunction::ALL
        .into_iter()
        .map(|f| OracleRun {
            function: f,
            outcome: run(f, &input).map_err(|e| e.to_string()),
        })
        .collect();

    let mut kickback = Vec::new();
    for f in OneBitFunction::ALL {
        for x in Bit::ALL {
            let psi = tensor(&Qubit::basis(x), &Qubit::minus());
            let sign = if f.eval(x) == Bit::One { -1.0 } else { 1.0 };
            let out = apply_oracle(f, &psi);
            kickback.push(KickbackCheck {
                function: f,
                control: x,
                max_error: out.max_abs_diff(&psi.scale(Complex64::from(sign))),
            });
        }
    }

    let oracles = OneBitFunction::ALL
        .into_iter()
        .map(|f| {
            let m = oracle_matrix(f);
            let basis_consistent = BitPair::all().into_iter().all(|p| {
                m.apply(&TwoQubitState::from_pair(p))
                    == TwoQubitState::from_pair(crate::classical::apply_f_operator(f, p))
            });
            OracleCheck {
                function: f,
                permutation: m.is_permutation(),
                involution: m.is_involution(),
                basis_consistent,
            }
        })
        .collect();

    Ok(VerificationReport {
        theta,
        runs,
        kickback,
        oracles,
    })
}

pub fn verify(theta: f64, format: OutputFormat) -> Result<Rendered> {
    let report = verification_report(theta)?;
    let pass = report.pass();
    let mut text = String::new();
    writeln!(text, "theta = {}", fmt_real(theta)).unwrap();
    let mut runs_json = Vec::new();
    for r in &report.runs {
        match &r.outcome {
            Ok(o) => {
                writeln!(
                    text,
                    "  {}: projection {} -> {} (oracle calls {})",
                    r.function.label(),
                    fmt_real(o.projection_magnitude),
                    o.verdict,
                    o.oracle_calls
                )
                .unwrap();
                runs_json.push(json!({
                    "function": r.function.label(),
                    "projection_magnitude": o.projection_magnitude,
                    "verdict": o.verdict.as_str(),
                    "oracle_calls": o.oracle_calls,
                }));
            }
            Err(msg) => {
                writeln!(text, "  {}: error: {}", r.function.label(), msg).unwrap();
                runs_json.push(json!({ "function": r.function.label(), "error": msg }));
            }
        }
    }
    let worst_kickback = report
        .kickback
        .iter()
        .map(|k| k.max_error)
        .fold(0.0, f64::max);
    writeln!(
        text,
        "phase kickback: {} checks, max error {}",
        report.kickback.len(),
        fmt_real(worst_kickback)
    )
    .unwrap();
    for o in &report.oracles {
        writeln!(
            text,
            "  F_{}: permutation {}, involution {}, basis-consistent {}",
            o.function.label(),
            o.permutation,
            o.involution,
            o.basis_consistent
        )
        .unwrap();
    }
    writeln!(text, "pass: {pass}").unwrap();

    let kickback_json: Vec<Value> = report
        .kickback
        .iter()
        .map(|k| {
            json!({
                "function": k.function.label(),
                "control": k.control.value(),
                "max_error": k.max_error,
            })
        })
        .collect();
    let oracles_json: Vec<Value> = report
        .oracles
        .iter()
        .map(|o| {
            json!({
                "function": o.function.label(),
                "permutation": o.permutation,
                "involution": o.involution,
                "basis_consistent": o.basis_consistent,
            })
        })
        .collect();

    Ok(finish(
        format,
        "verify",
        json!({ "theta": theta }),
        json!({
            "runs": runs_json,
            "kickback": kickback_json,
            "oracles": oracles_json,
        }),
        text,
        pass,
    ))
}

// ---------------------------------------------------------------------------
// classical
// ---------------------------------------------------------------------------

pub fn classical(format: OutputFormat) -> Rendered {
    let report = min_classical_queries();
    let pass = report.lower_bound == 2
        && report.every_one_query_strategy_fails()
        && report.witness_correct() == 4;

    let mut text = String::new();
    writeln!(text, "strategy space: {}", report.strategy_space).unwrap();
    writeln!(text, "one-query strategies:").unwrap();
    let verdict_short = |v: Verdict| match v {
        Verdict::Constant => "C",
        Verdict::Balanced => "B",
    };
    let mut strategies_json = Vec::new();
    for (i, s) in report.one_query.iter().enumerate() {
        let wrong: Vec<&str> = s.misclassified.iter().map(|f| f.label()).collect();
        writeln!(
            text,
            "  {:2}: query {} 0->{} 1->{}  misclassifies {}",
            i + 1,
            s.strategy.query,
            verdict_short(s.strategy.decision[0]),
            verdict_short(s.strategy.decision[1]),
            wrong.join(",")
        )
        .unwrap();
        strategies_json.push(json!({
            "query": [s.strategy.query.x.value(), s.strategy.query.y.value()],
            "on_0": s.strategy.decision[0].as_str(),
            "on_1": s.strategy.decision[1].as_str(),
            "misclassified": wrong,
        }));
    }
    writeln!(
        text,
        "two-query witness: query (0,0) then (1,0), Balanced iff f(0) xor f(1) = 1"
    )
    .unwrap();
    let mut witness_json = Vec::new();
    for w in &report.witness {
        writeln!(
            text,
            "  {}: {} ({} calls)",
            w.function.label(),
            w.verdict,
            w.oracle_calls
        )
        .unwrap();
        witness_json.push(json!({
            "function": w.function.label(),
            "verdict": w.verdict.as_str(),
            "oracle_calls": w.oracle_calls,
        }));
    }
    writeln!(text, "witness score: {}/4", report.witness_correct()).unwrap();
    writeln!(text, "lower bound: {}", report.lower_bound).unwrap();
    writeln!(text, "pass: {pass}").unwrap();

    finish(
        format,
        "classical",
        json!({}),
        json!({
            "strategy_space": report.strategy_space,
            "one_query_strategies": strategies_json,
            "witness": witness_json,
            "witness_correct": report.witness_correct(),
            "lower_bound": report.lower_bound,
        }),
        text,
        pass,
    )
}

// ---------------------------------------------------------------------------
// impossible
// ---------------------------------------------------------------------------

pub fn impossible(samples: usize, seed: u64, format: OutputFormat) -> Result<Rendered> {
    let report = identification_infeasibility(samples, seed)?;
    let pass = report.identity_holds()
        && report.theta_family_holds()
        && report.sweep_min_joint_violation >= SWEEP_BOUND_THRESHOLD;

    let theta0 = &report.theta_family[0];
    let worst_fifth = report
        .theta_family
        .iter()
        .map(|t| (t.fifth.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    let worst_orth = report
        .theta_family
        .iter()
        .map(|t| t.first.max(t.second))
        .fold(0.0, f64::max);
    let argmin_res = residuals(&CandidateState::from(report.sweep_argmin));

    let mut text = String::new();
    writeln!(
        text,
        "pairing-sum identity on {} random candidates: max error {} ({})",
        report.identity_candidates,
        fmt_real(report.identity_max_error),
        if report.identity_holds() {
            "holds"
        } else {
            "FAILS"
        }
    )
    .unwrap();
    writeln!(
        text,
        "theta family ({} angles): max |r_first|,|r_second| = {}, max ||r_fifth| - 1| = {}",
        report.theta_family.len(),
        fmt_real(worst_orth),
        fmt_real(worst_fifth)
    )
    .unwrap();
    writeln!(
        text,
        "  theta = 0: r_fifth = {}, Re(c1 c2*) + Re(c3* c4) = {}",
        fmt_complex(theta0.fifth),
        fmt_real(theta0.pairing_sum)
    )
    .unwrap();
    writeln!(
        text,
        "sweep: {} normalized states, seed {}: min max(|r_first|,|r_second|,|r_fifth|) = {}",
        report.samples,
        report.seed,
        fmt_real(report.sweep_min_joint_violation)
    )
    .unwrap();
    writeln!(text, "  argmin state = {}", fmt_state(&report.sweep_argmin)).unwrap();
    writeln!(
        text,
        "  near-feasible samples (max(|r_first|,|r_second|) <= {}): {}",
        fmt_real(NEAR_FEASIBLE_THRESHOLD),
        report.near_feasible
    )
    .unwrap();
    writeln!(text, "pass: {pass}").unwrap();

    let theta_json: Vec<Value> = report
        .theta_family
        .iter()
        .map(|t| {
            json!({
                "theta": t.theta,
                "r_first": t.first,
                "r_second": t.second,
                "r_fifth": complex_json(t.fifth),
                "pairing_sum": t.pairing_sum,
            })
        })
        .collect();

    Ok(finish(
        format,
        "impossible",
        json!({ "samples": samples, "seed": seed }),
        json!({
            "identity": {
                "candidates": report.identity_candidates,
                "max_error": report.identity_max_error,
                "holds": report.identity_holds(),
            },
            "theta_family": theta_json,
            "sweep": {
                "min_joint_violation": report.sweep_min_joint_violation,
                "argmin_state": state_json(&report.sweep_argmin),
                "argmin_residuals": {
                    "r_first": argmin_res.first.norm(),
                    "r_second": argmin_res.second.norm(),
                    "r_fifth": argmin_res.fifth.norm(),
                },
                "near_feasible": report.near_feasible,
                "near_feasible_threshold": NEAR_FEASIBLE_THRESHOLD,
                "threshold": SWEEP_BOUND_THRESHOLD,
            },
        }),
        text,
        pass,
    ))
}
