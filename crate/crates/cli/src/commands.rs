//! Implementations of the five subcommands. Every command renders its whole
//! output into a string first (JSON via `serde_json`, whose maps keep sorted
//! keys, or CSV rows built in loop order), so identical invocations produce
//! byte-identical output.

use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use trijac_core::genfunc::{
    check_genfunc_with, genfunc_components, series_expand, DenominatorForm,
};
use trijac_core::identities::{
    check_binet_agreement, check_cassini, check_catalan, check_docagne, check_partial_sum,
    check_partial_sum_scalar, check_scalar_triple_sum, check_triple_sum, check_vajda, run_suite,
    IdentityKind, IdentityReport, SuiteGrid, SuiteSummary,
};
use trijac_core::matrixgen::{check_column_relation, check_matrix_identity, qj_matrix};
use trijac_core::ring::format_rational;
use trijac_core::{
    BhPoly, BhRatFunc, Error, IntPoly, IntRatFunc, SeqParams, SequenceEngine, ToJson,
};

use crate::{Cli, Command, EvalArgs, EvalObject, Format, MatrixArgs, SeqArgs, SeriesArgs, VerifyArgs};

const COMPONENT_LABELS: [&str; 4] = ["w", "x1", "x2", "x3"];

/// What the command concluded; usage and domain problems travel as errors.
pub(crate) enum Outcome {
    Pass,
    IdentityFailure,
}

#[derive(Debug, thiserror::Error)]
pub(crate) enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

pub(crate) fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let (text, outcome) = match &cli.command {
        Command::Seq(args) => cmd_seq(args, cli.format)?,
        Command::Verify(args) => cmd_verify(args, cli.format)?,
        Command::Series(args) => cmd_series(args, cli.format)?,
        Command::Matrix(args) => cmd_matrix(args, cli.format)?,
        Command::Eval(args) => cmd_eval(args, cli.format)?,
    };
    write_output(cli, &text)?;
    Ok(outcome)
}

fn write_output(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let resolved = if path.is_relative() {
                match std::env::var_os("TRIJAC_OUT_DIR") {
                    Some(dir) => PathBuf::from(dir).join(path),
                    None => path.clone(),
                }
            } else {
                path.clone()
            };
            std::fs::write(&resolved, text)?;
            Ok(())
        }
    }
}

fn parse_abc(values: &[i64]) -> Result<SeqParams, Error> {
    SeqParams::new(values[0], values[1], values[2])
}

fn shifts_json(abc: SeqParams) -> Value {
    json!({"a": abc.a(), "b": abc.b(), "c": abc.c()})
}

fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON rendering cannot fail");
    text.push('\n');
    text
}

fn csv_table(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

// ---- exact evaluation helpers -------------------------------------------

fn eval_poly(p: &IntPoly, x: &BigRational) -> BigRational {
    p.map(|c| BigRational::from_integer(c.clone())).eval(x)
}

fn eval_rf(f: &IntRatFunc, x: &BigRational) -> Result<BigRational, Error> {
    f.map_eval(x, |c| BigRational::from_integer(c.clone()))
}

fn bh_rf_values(b: &BhRatFunc, x: &BigRational) -> Result<[BigRational; 4], Error> {
    let c = b.components();
    Ok([
        eval_rf(c[0], x)?,
        eval_rf(c[1], x)?,
        eval_rf(c[2], x)?,
        eval_rf(c[3], x)?,
    ])
}

fn bh_poly_values(b: &BhPoly, x: &BigRational) -> [BigRational; 4] {
    let c = b.components();
    [
        eval_poly(c[0], x),
        eval_poly(c[1], x),
        eval_poly(c[2], x),
        eval_poly(c[3], x),
    ]
}

fn values_json(values: &[BigRational; 4]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|v| Value::String(format_rational(v)))
            .collect(),
    )
}

/// Component as a coefficient array when it is a polynomial, otherwise as a
/// num/den pair.
fn rf_json(f: &IntRatFunc) -> Value {
    match f.as_polynomial() {
        Some(p) => p.to_json(),
        None => f.to_json(),
    }
}

// ---- seq ------------------------------------------------------------------

fn cmd_seq(args: &SeqArgs, format: Format) -> Result<(String, Outcome), CliError> {
    let abc = parse_abc(&args.abc)?;
    let (min, max) = (args.range[0], args.range[1]);
    if max < min {
        return Err(CliError::Usage(format!(
            "--range: MAX ({max}) is below MIN ({min})"
        )));
    }
    let engine = SequenceEngine::new(abc);

    let text = match format {
        Format::Json => {
            let mut rows = Vec::new();
            for n in min..=max {
                let b = engine.bj(n);
                let components = match &args.x {
                    Some(x) => values_json(&bh_rf_values(&b, x)?),
                    None => Value::Array(b.components().iter().map(|c| rf_json(c)).collect()),
                };
                rows.push(json!({"n": n, "components": components}));
            }
            let mut obj = json!({
                "command": "seq",
                "shifts": shifts_json(abc),
                "rows": rows,
            });
            if let Some(x) = &args.x {
                obj["x"] = Value::String(format_rational(x));
            }
            render_json(&obj)
        }
        Format::Csv => match &args.x {
            Some(x) => {
                let mut rows = Vec::new();
                for n in min..=max {
                    let values = bh_rf_values(&engine.bj(n), x)?;
                    let mut row = vec![n.to_string()];
                    row.extend(values.iter().map(format_rational));
                    rows.push(row);
                }
                let header = ["n", "w", "x1", "x2", "x3"].map(String::from).to_vec();
                csv_table(header, rows)
            }
            None => {
                let mut entries: Vec<(i64, &str, Vec<String>)> = Vec::new();
                for n in min..=max {
                    let b = engine.bj(n);
                    for (label, comp) in COMPONENT_LABELS.into_iter().zip(b.components()) {
                        let p = comp.as_polynomial().ok_or_else(|| {
                            CliError::Usage(format!(
                                "component {label} of BJ_{n} is not a polynomial; \
                                 CSV needs --x or a non-negative range (try --format json)"
                            ))
                        })?;
                        entries.push((
                            n,
                            label,
                            p.coeffs().iter().map(|c| c.to_string()).collect(),
                        ));
                    }
                }
                poly_csv("n", entries)
            }
        },
    };
    Ok((text, Outcome::Pass))
}

/// Coefficient table with one row per component, padded to a rectangular
/// shape: `key,component,c0,c1,...`.
fn poly_csv(key_name: &str, entries: Vec<(i64, &str, Vec<String>)>) -> String {
    let width = entries.iter().map(|(_, _, cs)| cs.len()).max().unwrap_or(0);
    let mut header = vec![key_name.to_string(), "component".to_string()];
    header.extend((0..width).map(|k| format!("c{k}")));
    let rows = entries
        .into_iter()
        .map(|(key, label, mut coeffs)| {
            coeffs.resize(width, String::new());
            let mut row = vec![key.to_string(), label.to_string()];
            row.extend(coeffs);
            row
        })
        .collect();
    csv_table(header, rows)
}

// ---- verify ----------------------------------------------------------------

fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<(String, Outcome), CliError> {
    if format == Format::Csv {
        return Err(CliError::Usage(
            "verify output is JSON-only; drop --format csv".into(),
        ));
    }
    if args.abc_max < 1 {
        return Err(CliError::Usage("--abc-max must be at least 1".into()));
    }
    let pinned_abc = match &args.abc {
        Some(values) => Some(parse_abc(values)?),
        None => None,
    };

    let (summary, mode, shifts) = match args.n {
        Some(n) => {
            let abc = match pinned_abc {
                Some(abc) => abc,
                None => SeqParams::new(1, 2, 3)?,
            };
            (verify_pinned(args, abc, n)?, "pinned", Some(abc))
        }
        None => (verify_grid(args, pinned_abc)?, "grid", pinned_abc),
    };

    let mut obj = summary.to_json();
    obj["command"] = "verify".into();
    obj["mode"] = mode.into();
    if let Some(abc) = shifts {
        obj["shifts"] = shifts_json(abc);
    }
    let outcome = if summary.all_passed() {
        Outcome::Pass
    } else {
        Outcome::IdentityFailure
    };
    Ok((render_json(&obj), outcome))
}

/// Smallest index a family accepts (None: any integer works).
fn family_min_n(kind: IdentityKind) -> Option<i64> {
    match kind {
        IdentityKind::ScalarTripleSum
        | IdentityKind::TripleSum
        | IdentityKind::PartialSumScalar
        | IdentityKind::PartialSum
        | IdentityKind::MatrixPower => Some(0),
        IdentityKind::MatrixColumn => Some(1),
        _ => None,
    }
}

/// One check per selected family at pinned parameters. Families whose index
/// constraint the pinned n violates are skipped, unless they were requested
/// by name — then the violation is a usage error.
fn verify_pinned(args: &VerifyArgs, abc: SeqParams, n: i64) -> Result<SuiteSummary, CliError> {
    let engine = SequenceEngine::new(abc);
    let p = args.p.unwrap_or(1);
    let q = args.q.unwrap_or(-1);
    let m = args.m.unwrap_or(n + 1);
    let form = if args.printed_denominator {
        DenominatorForm::Printed
    } else {
        DenominatorForm::Corrected
    };
    let families = match args.only {
        Some(kind) => vec![kind],
        None => IdentityKind::ALL.to_vec(),
    };
    let strict = args.only.is_some();

    let mut summary = SuiteSummary::new(true);
    for kind in families {
        if let Some(lo) = family_min_n(kind) {
            if n < lo {
                if strict {
                    return Err(CliError::Usage(format!(
                        "family {kind} needs --n at least {lo}, got {n}"
                    )));
                }
                continue;
            }
        }
        let reports: Vec<IdentityReport> = match kind {
            IdentityKind::BinetAgreement => vec![check_binet_agreement(&engine, n)?],
            IdentityKind::ScalarTripleSum => vec![check_scalar_triple_sum(&engine, n as u64)],
            IdentityKind::TripleSum => vec![check_triple_sum(&engine, n as u64)],
            IdentityKind::VajdaZ => vec![check_vajda(&engine, n, p, q)?.0],
            IdentityKind::VajdaBj => vec![check_vajda(&engine, n, p, q)?.1],
            IdentityKind::Catalan => vec![check_catalan(&engine, n, p)?],
            IdentityKind::Cassini => vec![check_cassini(&engine, n)?],
            IdentityKind::DOcagne => vec![check_docagne(&engine, n, m)?],
            IdentityKind::PartialSumScalar => vec![check_partial_sum_scalar(&engine, n as u64)?],
            IdentityKind::PartialSum => vec![check_partial_sum(&engine, n as u64)?],
            IdentityKind::GeneratingFunction => {
                vec![check_genfunc_with(&engine, form, args.order)?]
            }
            IdentityKind::MatrixColumn => vec![check_column_relation(&engine, n as u64)?],
            IdentityKind::MatrixPower => vec![check_matrix_identity(&engine, n as u64)?],
        };
        for report in reports {
            summary.absorb(report);
        }
    }
    Ok(summary)
}

fn verify_grid(
    args: &VerifyArgs,
    pinned_abc: Option<SeqParams>,
) -> Result<SuiteSummary, CliError> {
    let mut grid = SuiteGrid {
        pinned_abc,
        abc_max: args.abc_max,
        series_order: args.order,
        collect_reports: args.full,
        ..SuiteGrid::default()
    };
    if let Some(kind) = args.only {
        grid.families = vec![kind];
    }
    if !args.printed_denominator {
        return Ok(run_suite(&grid)?);
    }

    // Slip-denominator mode: expand with the displaced t^2 term instead of
    // the recurrence form for the genfunc family; the other families (if
    // selected) still run normally.
    let genfunc_requested = grid.families.contains(&IdentityKind::GeneratingFunction);
    grid.families
        .retain(|kind| *kind != IdentityKind::GeneratingFunction);
    let mut summary = run_suite(&grid)?;
    if genfunc_requested {
        let triples = match pinned_abc {
            Some(abc) => vec![abc],
            None => {
                let cap = args.abc_max.min(3);
                let mut out = Vec::new();
                for a in 1..=cap {
                    for b in 1..=cap {
                        for c in 1..=cap {
                            out.push(SeqParams::new(a, b, c)?);
                        }
                    }
                }
                out
            }
        };
        for abc in triples {
            let engine = SequenceEngine::new(abc);
            summary.absorb(check_genfunc_with(
                &engine,
                DenominatorForm::Printed,
                args.order,
            )?);
        }
    }
    Ok(summary)
}

// ---- series -----------------------------------------------------------------

fn cmd_series(args: &SeriesArgs, format: Format) -> Result<(String, Outcome), CliError> {
    let abc = parse_abc(&args.abc)?;
    if args.n_coeffs == 0 {
        return Err(CliError::Usage("--N must be at least 1".into()));
    }
    let engine = SequenceEngine::new(abc);
    let form = if args.printed_denominator {
        DenominatorForm::Printed
    } else {
        DenominatorForm::Corrected
    };
    let (num, den) = genfunc_components(&engine, form);
    let series = series_expand(&num, &den, args.n_coeffs - 1)?;
    let denominator_name = match form {
        DenominatorForm::Corrected => "corrected",
        DenominatorForm::Printed => "printed",
    };

    let text = match format {
        Format::Json => {
            let coefficients: Vec<Value> = series
                .coeffs()
                .iter()
                .map(|c| match &args.x {
                    Some(x) => values_json(&bh_poly_values(c, x)),
                    None => c.to_json(),
                })
                .collect();
            let mut obj = json!({
                "command": "series",
                "shifts": shifts_json(abc),
                "denominator": denominator_name,
                "coefficients": coefficients,
            });
            if let Some(x) = &args.x {
                obj["x"] = Value::String(format_rational(x));
            }
            render_json(&obj)
        }
        Format::Csv => match &args.x {
            Some(x) => {
                let rows = series
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| {
                        let mut row = vec![k.to_string()];
                        row.extend(bh_poly_values(c, x).iter().map(format_rational));
                        row
                    })
                    .collect();
                let header = ["k", "w", "x1", "x2", "x3"].map(String::from).to_vec();
                csv_table(header, rows)
            }
            None => {
                let mut entries = Vec::new();
                for (k, c) in series.coeffs().iter().enumerate() {
                    for (label, comp) in COMPONENT_LABELS.iter().zip(c.components()) {
                        entries.push((
                            k as i64,
                            *label,
                            comp.coeffs().iter().map(|v| v.to_string()).collect(),
                        ));
                    }
                }
                poly_csv("k", entries)
            }
        },
    };
    Ok((text, Outcome::Pass))
}

// ---- matrix -------------------------------------------------------------------

fn cmd_matrix(args: &MatrixArgs, format: Format) -> Result<(String, Outcome), CliError> {
    if format == Format::Csv {
        return Err(CliError::Usage(
            "matrix output is JSON-only; drop --format csv".into(),
        ));
    }
    let abc = parse_abc(&args.abc)?;
    let engine = SequenceEngine::new(abc);
    let n = args.n;

    let q_power = qj_matrix().pow(n);
    let q_power_json = match &args.x {
        Some(x) => q_power.map(|p| eval_poly(p, x)).to_json(),
        None => q_power.to_json(),
    };
    let window = check_matrix_identity(&engine, n)?;
    let column = if n >= 1 {
        Some(check_column_relation(&engine, n)?)
    } else {
        None
    };
    let all_equal = window.equal && column.as_ref().map_or(true, |r| r.equal);

    let mut obj = json!({
        "command": "matrix",
        "n": n,
        "shifts": shifts_json(abc),
        "q_power": q_power_json,
        "column_relation": column.map_or(Value::Null, |r| r.to_json()),
        "window_power": window.to_json(),
    });
    if let Some(x) = &args.x {
        obj["x"] = Value::String(format_rational(x));
    }
    let outcome = if all_equal {
        Outcome::Pass
    } else {
        Outcome::IdentityFailure
    };
    Ok((render_json(&obj), outcome))
}

// ---- eval ---------------------------------------------------------------------

enum EvalValue {
    Scalar(BigRational),
    Quad([BigRational; 4]),
}

fn cmd_eval(args: &EvalArgs, format: Format) -> Result<(String, Outcome), CliError> {
    let abc = parse_abc(&args.abc)?;
    let engine = SequenceEngine::new(abc);
    let x = &args.x;
    let n = args.n;

    // The characteristic roots other than x are the primitive cube roots of
    // unity; x² + x + 1 has no rational zero, so this guard can never fire —
    // it documents the excluded points of the Binet decomposition.
    let one = BigRational::from_integer(BigInt::from(1));
    if (x * x + x + one.clone()) == BigRational::from_integer(BigInt::from(0)) {
        return Err(Error::Domain("x² + x + 1 vanishes at the requested point".into()).into());
    }

    let require_non_negative = |what: &str| -> Result<u64, CliError> {
        u64::try_from(n)
            .map_err(|_| CliError::Usage(format!("--n must be non-negative for {what}")))
    };
    // Shared denominator of the two prefix-sum closed forms.
    let sum_denominator = || -> Result<BigRational, CliError> {
        let three = BigRational::from_integer(BigInt::from(3));
        let den = three * (x - one.clone());
        if den == BigRational::from_integer(BigInt::from(0)) {
            return Err(
                Error::Domain("the prefix-sum closed form divides by 3(x − 1), \
                               which vanishes at x = 1"
                    .into())
                .into(),
            );
        }
        Ok(den)
    };

    let value = match args.object {
        EvalObject::J => EvalValue::Scalar(eval_rf(&engine.jacobsthal_ext(n), x)?),
        EvalObject::Bj => EvalValue::Quad(bh_rf_values(&engine.bj(n), x)?),
        EvalObject::Z => EvalValue::Quad(bh_rf_values(&engine.z_seq(n)?, x)?),
        EvalObject::Theta => EvalValue::Quad(bh_poly_values(&engine.binet_constants().theta, x)),
        EvalObject::PartialSumScalar => {
            let nn = require_non_negative("partial-sum-scalar")?;
            let den = sum_denominator()?;
            let j = |k: u64| eval_poly(&engine.jacobsthal_poly(k), x);
            let two = BigRational::from_integer(BigInt::from(2));
            let numerator = j(nn + 2) - (x - two.clone()) * j(nn + 1) + x * j(nn) - one.clone();
            EvalValue::Scalar(numerator / den)
        }
        EvalObject::PartialSum => {
            let nn = require_non_negative("partial-sum")?;
            let den = sum_denominator()?;
            let two = BigRational::from_integer(BigInt::from(2));
            let three = BigRational::from_integer(BigInt::from(3));
            let bj = |k: u64| bh_poly_values(&engine.bj_poly(k), x);
            let (b0, b1, b2) = (bj(0), bj(1), bj(2));
            let (lo, mid, hi) = (bj(nn), bj(nn + 1), bj(nn + 2));
            let two_x_minus_3 = two.clone() * x - three;
            let x_minus_2 = x - two;
            let mut values = Vec::with_capacity(4);
            for i in 0..4 {
                let bracket = two_x_minus_3.clone() * b0[i].clone()
                    + x_minus_2.clone() * b1[i].clone()
                    - b2[i].clone()
                    + hi[i].clone()
                    - x_minus_2.clone() * mid[i].clone()
                    + x * lo[i].clone();
                values.push(bracket / den.clone());
            }
            EvalValue::Quad(values.try_into().expect("four components"))
        }
    };

    let text = match format {
        Format::Json => {
            let value_json = match &value {
                EvalValue::Scalar(v) => Value::String(format_rational(v)),
                EvalValue::Quad(vs) => values_json(vs),
            };
            render_json(&json!({
                "command": "eval",
                "object": args.object.name(),
                "n": n,
                "x": format_rational(x),
                "shifts": shifts_json(abc),
                "value": value_json,
            }))
        }
        Format::Csv => match &value {
            EvalValue::Scalar(v) => csv_table(
                ["object", "n", "x", "value"].map(String::from).to_vec(),
                vec![vec![
                    args.object.name().to_string(),
                    n.to_string(),
                    format_rational(x),
                    format_rational(v),
                ]],
            ),
            EvalValue::Quad(vs) => {
                let mut row = vec![
                    args.object.name().to_string(),
                    n.to_string(),
                    format_rational(x),
                ];
                row.extend(vs.iter().map(format_rational));
                csv_table(
                    ["object", "n", "x", "w", "x1", "x2", "x3"]
                        .map(String::from)
                        .to_vec(),
                    vec![row],
                )
            }
        },
    };
    Ok((text, Outcome::Pass))
}
