//! Command-line verbs over the algebra-file format.
//!
//! ```text
//! validate <file>                         exit 0 | 1 (first defect) | 2 (parse)
//! classify <file> [--json]                classification report
//! curvature <file> [--frame coordinate|orthonormal] [--json]
//! extend <file> [--omega 14=2,23=2]       emit the central extension
//! quotient <file>                         emit the Kahler quotient
//! fit-eta-einstein <file> [--json]
//! catalog list [--json]
//! catalog emit <name> [--params a=1,b=2]
//! reproduce-tables [--json]               exit 0 iff every cell matches
//! ```
//!
//! Exit codes: 0 success, 1 mathematical mismatch, 2 input error.

use crate::catalog;
use crate::extension::{central_extend, fit_eta_einstein, kahler_quotient, SymplecticKahlerData};
use crate::fileio::{
    two_form_from_map, AlgebraFile, CellComparison, CurvatureReport, FileError, RowComparison,
    TableReport,
};
use crate::riemann::{frame_ricci, ricci, scalar_curvature, MetricLieAlgebra};
use crate::scalar::Scalar;
use crate::structures::classify;
use std::collections::BTreeMap;
use std::fmt::Write as _;

const USAGE: &str = "\
usage: contact-lie <command> [args]

commands:
  validate <file>
  classify <file> [--json]
  curvature <file> [--frame coordinate|orthonormal] [--json]
  extend <file> [--omega PAIR=VALUE[,PAIR=VALUE...]]
  quotient <file>
  fit-eta-einstein <file> [--json]
  catalog list [--json]
  catalog emit <name> [--params k=v[,k=v...]]
  reproduce-tables [--json]
";

/// Dispatches a command line; returns the process exit code and writes all
/// output to `out` (reports) and `err` (diagnostics).
pub fn run(args: &[String], out: &mut String, err: &mut String) -> i32 {
    match dispatch(args, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(args: &[String], out: &mut String) -> Result<i32, FileError> {
    let mut args = args.iter().map(String::as_str);
    let Some(command) = args.next() else {
        out.push_str(USAGE);
        return Ok(2);
    };
    let rest: Vec<&str> = args.collect();
    match command {
        "validate" => cmd_validate(&rest, out),
        "classify" => cmd_classify(&rest, out),
        "curvature" => cmd_curvature(&rest, out),
        "extend" => cmd_extend(&rest, out),
        "quotient" => cmd_quotient(&rest, out),
        "fit-eta-einstein" => cmd_fit(&rest, out),
        "catalog" => cmd_catalog(&rest, out),
        "reproduce-tables" => cmd_reproduce_tables(&rest, out),
        "--help" | "help" => {
            out.push_str(USAGE);
            Ok(0)
        }
        other => Err(FileError::Parse(format!("unknown command {other:?}"))),
    }
}

fn read_file(path: &str) -> Result<AlgebraFile, FileError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| FileError::Parse(format!("cannot read {path}: {e}")))?;
    AlgebraFile::from_json(&text)
}

fn take_flag(rest: &mut Vec<&str>, flag: &str) -> bool {
    if let Some(pos) = rest.iter().position(|a| *a == flag) {
        rest.remove(pos);
        true
    } else {
        false
    }
}

fn take_option(rest: &mut Vec<&str>, flag: &str) -> Result<Option<String>, FileError> {
    if let Some(pos) = rest.iter().position(|a| *a == flag) {
        if pos + 1 >= rest.len() {
            return Err(FileError::Parse(format!("{flag} needs a value")));
        }
        let value = rest[pos + 1].to_string();
        rest.drain(pos..=pos + 1);
        Ok(Some(value))
    } else {
        Ok(None)
    }
}

fn positional<'a>(rest: &[&'a str], what: &str) -> Result<&'a str, FileError> {
    match rest {
        [single] => Ok(single),
        [] => Err(FileError::Parse(format!("missing {what}"))),
        _ => Err(FileError::Parse("unexpected extra arguments".to_string())),
    }
}

fn parse_assignments(text: &str) -> Result<BTreeMap<String, Scalar>, FileError> {
    let mut map = BTreeMap::new();
    for piece in text.split(',') {
        let (key, value) = piece
            .split_once('=')
            .ok_or_else(|| FileError::Parse(format!("expected k=v, got {piece:?}")))?;
        let scalar: Scalar = value
            .trim()
            .parse()
            .map_err(|e| FileError::Parse(format!("{e}")))?;
        map.insert(key.trim().to_string(), scalar);
    }
    Ok(map)
}

fn cmd_validate(rest: &[&str], out: &mut String) -> Result<i32, FileError> {
    let path = positional(rest, "file")?;
    let doc = read_file(path)?;
    doc.to_metric_algebra()?;
    if doc.acm.is_some() {
        doc.to_acm()?;
    }
    if doc.kahler.is_some() {
        let (k, omega) = doc.to_kahler()?;
        SymplecticKahlerData::new(k, omega)
            .map_err(|e| FileError::Invalid(e.to_string()))?;
    }
    let _ = writeln!(out, "ok");
    Ok(0)
}

fn cmd_classify(rest: &[&str], out: &mut String) -> Result<i32, FileError> {
    let mut rest = rest.to_vec();
    let json = take_flag(&mut rest, "--json");
    let path = positional(&rest, "file")?;
    let s = read_file(path)?.to_acm()?;
    let report = classify(&s);
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        let flag = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "contact (maximal rank): {}", flag(report.contact));
        let _ = writeln!(out, "normal:                 {}", flag(report.normal));
        let _ = writeln!(out, "K-contact:              {}", flag(report.k_contact));
        let _ = writeln!(out, "cokahler:               {}", flag(report.cokahler));
        let _ = writeln!(out, "Sasakian:               {}", flag(report.sasakian));
        match &report.alpha {
            Some(a) => {
                let _ = writeln!(out, "alpha-Sasakian:         yes (alpha = {a})");
            }
            None => {
                let _ = writeln!(out, "alpha-Sasakian:         no");
            }
        }
        let _ = writeln!(out, "quasi-Sasakian:         {}", flag(report.quasi_sasakian));
        let _ = writeln!(
            out,
            "anti-quasi-Sasakian:    {}",
            flag(report.anti_quasi_sasakian)
        );
        let _ = writeln!(
            out,
            "transversely Kahler:    {}",
            flag(report.transversely_kahler)
        );
        match &report.eta_einstein_lambda_mu {
            Some((lam, mu)) => {
                let _ = writeln!(out, "eta-Einstein:           yes (lambda = {lam}, mu = {mu})");
            }
            None => {
                let _ = writeln!(out, "eta-Einstein:           no");
            }
        }
    }
    Ok(0)
}

fn cmd_curvature(rest: &[&str], out: &mut String) -> Result<i32, FileError> {
    let mut rest = rest.to_vec();
    let json = take_flag(&mut rest, "--json");
    let frame = take_option(&mut rest, "--frame")?.unwrap_or_else(|| "coordinate".into());
    let path = positional(&rest, "file")?;
    let m = read_file(path)?.to_metric_algebra()?;
    let rho = ricci(&m);
    let scalar = scalar_curvature(&m);
    let frame_view = match frame.as_str() {
        "coordinate" => None,
        "orthonormal" => {
            Some(frame_ricci(&m).map_err(|e| FileError::Invalid(e.to_string()))?)
        }
        other => {
            return Err(FileError::Parse(format!(
                "--frame must be coordinate or orthonormal, got {other:?}"
            )))
        }
    };
    let report = CurvatureReport::new(&rho, scalar.clone(), frame_view.as_ref());
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        let _ = writeln!(out, "Ricci (coordinate basis):");
        out.push_str(&crate::fileio::render_grid(&report.ricci));
        let _ = writeln!(out, "scalar curvature: {scalar}");
        if let Some(fr) = &frame_view {
            let _ = writeln!(out, "Ricci (orthonormal frame):");
            for (i, row) in fr.entries.iter().enumerate() {
                let cells: Vec<String> = row
                    .iter()
                    .map(|e| match e {
                        crate::riemann::FrameEntry::Exact(v) => v.to_string(),
                        crate::riemann::FrameEntry::Flagged {
                            raw,
                            normalizer_square,
                        } => format!("{raw}/sqrt({normalizer_square})"),
                    })
                    .collect();
                let _ = writeln!(out, "  row {}: [{}]", i + 1, cells.join(", "));
            }
        }
    }
    Ok(0)
}

fn cmd_extend(rest: &[&str], out: &mut String) -> Result<i32, FileError> {
    let mut rest = rest.to_vec();
    let omega_spec = take_option(&mut rest, "--omega")?;
    let path = positional(&rest, "file")?;
    let doc = read_file(path)?;
    let (k, mut omega) = doc.to_kahler()?;
    if let Some(spec) = omega_spec {
        let assignments = parse_assignments(&spec)?;
        omega = two_form_from_map(&assignments, k.dim())?;
    }
    let data = SymplecticKahlerData::new(k, omega)
        .map_err(|e| FileError::Invalid(e.to_string()))?;
    let ext = central_extend(&data).map_err(|e| FileError::Invalid(e.to_string()))?;
    out.push_str(&AlgebraFile::from_acm(&ext.structure).to_json());
    Ok(0)
}

fn cmd_quotient(rest: &[&str], out: &mut String) -> Result<i32, FileError> {
    let path = positional(rest, "file")?;
    let s = read_file(path)?.to_acm()?;
    let data = kahler_quotient(&s).map_err(|e| FileError::Invalid(e.to_string()))?;
    out.push_str(&AlgebraFile::from_symplectic_kahler(&data).to_json());
    Ok(0)
}

fn cmd_fit(rest: &[&str], out: &mut String) -> Result<i32, FileError> {
    let mut rest = rest.to_vec();
    let json = take_flag(&mut rest, "--json");
    let path = positional(&rest, "file")?;
    let s = read_file(path)?.to_acm()?;
    let fit = fit_eta_einstein(&s);
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&fit).expect("serializable")
        );
    } else {
        let _ = writeln!(out, "lambda:   {}", fit.lambda);
        let _ = writeln!(out, "mu:       {}", fit.mu);
        let _ = writeln!(out, "residual: {}", fit.residual_max);
        let _ = writeln!(out, "exact:    {}", if fit.exact { "yes" } else { "no" });
        let _ = writeln!(out, "Einstein: {}", if fit.einstein { "yes" } else { "no" });
    }
    Ok(0)
}

fn cmd_catalog(rest: &[&str], out: &mut String) -> Result<i32, FileError> {
    match rest {
        ["list", tail @ ..] => {
            let json = tail == ["--json"];
            if !json && !tail.is_empty() {
                return Err(FileError::Parse("unexpected arguments".into()));
            }
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(catalog::list_fixtures())
                        .expect("serializable")
                );
            } else {
                for info in catalog::list_fixtures() {
                    let params = if info.param_names.is_empty() {
                        String::new()
                    } else {
                        format!("  params: {}", info.param_names.join(", "))
                    };
                    let constraints = if info.constraints.is_empty() {
                        String::new()
                    } else {
                        format!("  [{}]", info.constraints)
                    };
                    let _ = writeln!(out, "{}{params}{constraints}", info.name);
                }
            }
            Ok(0)
        }
        ["emit", name, tail @ ..] => {
            let mut tail = tail.to_vec();
            let params_spec = take_option(&mut tail, "--params")?;
            if !tail.is_empty() {
                return Err(FileError::Parse("unexpected arguments".into()));
            }
            let params = match params_spec {
                Some(spec) => parse_assignments(&spec)?,
                None => catalog::samples(name)
                    .map_err(|e| FileError::Parse(e.to_string()))?
                    .into_iter()
                    .next()
                    .unwrap_or_default(),
            };
            let fixture = catalog::instantiate(name, &params).map_err(|e| match e {
                catalog::CatalogError::ParamConstraintViolation { .. } => {
                    FileError::Invalid(e.to_string())
                }
                other => FileError::Parse(other.to_string()),
            })?;
            let doc = match &fixture.output {
                catalog::FixtureOutput::Algebra(a) => AlgebraFile::from_algebra(a),
                catalog::FixtureOutput::Kahler(k) => AlgebraFile::from_kahler(k),
                catalog::FixtureOutput::Symplectic(d) => {
                    AlgebraFile::from_symplectic_kahler(d)
                }
                catalog::FixtureOutput::Acm(s) => AlgebraFile::from_acm(s),
            };
            out.push_str(&doc.to_json());
            Ok(0)
        }
        _ => Err(FileError::Parse(
            "catalog subcommands: list, emit <name> [--params k=v,...]".into(),
        )),
    }
}

fn render_params(p: &BTreeMap<String, Scalar>) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Compares a computed diagonal against an expected one, cell by cell.
pub fn compare_diagonal(
    row: String,
    sample: String,
    computed: &[Scalar],
    expected: &[Scalar],
) -> RowComparison {
    let cells = computed
        .iter()
        .zip(expected)
        .enumerate()
        .map(|(i, (c, e))| CellComparison {
            cell: format!("diag[{}]", i + 1),
            computed: c.to_string(),
            expected: e.to_string(),
            matched: c == e,
        })
        .collect();
    RowComparison::new(row, sample, cells)
}

/// Reproduces the Ricci table of the non-abelian Kahler rows and the
/// eta-Einstein extension table at every documented sample, comparing computed values
/// against the tabulated ones cell by cell.
pub fn reproduce_tables() -> TableReport {
    let mut kahler_ricci = Vec::new();
    let mut eta = Vec::new();
    for info in catalog::list_fixtures() {
        if info.name.starts_with("table1_") {
            for p in catalog::samples(info.name).expect("known fixture") {
                let fixture = catalog::instantiate(info.name, &p).expect("documented sample");
                let k = fixture.output.as_kahler().expect("table1 row");
                let m = match &fixture.expected.frame_metric {
                    Some(g) => MetricLieAlgebra::new(
                        k.metric_algebra().algebra().clone(),
                        g.clone(),
                    )
                    .expect("reference frame metric"),
                    None => k.metric_algebra().clone(),
                };
                let computed = frame_ricci(&m).expect("diagonal metric").diagonal();
                let expected = fixture
                    .expected
                    .frame_ricci_diag
                    .clone()
                    .expect("table1 rows carry expected diagonals");
                kahler_ricci.push(compare_diagonal(
                    info.name.to_string(),
                    render_params(&p),
                    &computed,
                    &expected,
                ));
            }
        }
        if info.name.starts_with("eta_") {
            for p in catalog::samples(info.name).expect("known fixture") {
                let fixture = catalog::instantiate(info.name, &p).expect("documented sample");
                let s = fixture.output.as_acm().expect("eta row");
                let fit = fit_eta_einstein(s);
                let (lam, mu) = fixture
                    .expected
                    .eta_fit
                    .clone()
                    .expect("eta rows carry expected constants");
                let report = classify(s);
                let mut cells = vec![
                    CellComparison {
                        cell: "exact".into(),
                        computed: fit.exact.to_string(),
                        expected: "true".into(),
                        matched: fit.exact,
                    },
                    CellComparison {
                        cell: "lambda".into(),
                        computed: fit.lambda.to_string(),
                        expected: lam.to_string(),
                        matched: fit.lambda == lam,
                    },
                    CellComparison {
                        cell: "mu".into(),
                        computed: fit.mu.to_string(),
                        expected: mu.to_string(),
                        matched: fit.mu == mu,
                    },
                ];
                for (cell, computed, expected) in [
                    ("quasi_sasakian", report.quasi_sasakian, fixture.expected.quasi_sasakian),
                    ("alpha_sasakian", report.alpha_sasakian, fixture.expected.alpha_sasakian),
                    (
                        "anti_quasi_sasakian",
                        report.anti_quasi_sasakian,
                        fixture.expected.anti_quasi_sasakian,
                    ),
                ] {
                    let expected = expected.expect("eta rows pin their flags");
                    cells.push(CellComparison {
                        cell: cell.into(),
                        computed: computed.to_string(),
                        expected: expected.to_string(),
                        matched: computed == expected,
                    });
                }
                eta.push(compare_diagonal_rowlike(
                    info.name.to_string(),
                    render_params(&p),
                    cells,
                ));
            }
        }
    }
    let all_match = kahler_ricci.iter().chain(eta.iter()).all(|r| r.matched);
    TableReport {
        kahler_ricci,
        eta_einstein: eta,
        all_match,
    }
}

fn compare_diagonal_rowlike(
    row: String,
    sample: String,
    cells: Vec<CellComparison>,
) -> RowComparison {
    RowComparison::new(row, sample, cells)
}

fn cmd_reproduce_tables(rest: &[&str], out: &mut String) -> Result<i32, FileError> {
    let mut rest = rest.to_vec();
    let json = take_flag(&mut rest, "--json");
    if !rest.is_empty() {
        return Err(FileError::Parse("unexpected arguments".into()));
    }
    let report = reproduce_tables();
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        let _ = writeln!(out, "Ricci curvature of non-abelian Kahler Lie algebras:");
        for row in &report.kahler_ricci {
            render_row(out, row);
        }
        let _ = writeln!(out, "eta-Einstein extensions (maximal rank, nontrivial center):");
        for row in &report.eta_einstein {
            render_row(out, row);
        }
        let _ = writeln!(
            out,
            "{}",
            if report.all_match {
                "all rows match"
            } else {
                "MISMATCHES FOUND"
            }
        );
    }
    Ok(if report.all_match { 0 } else { 1 })
}

fn render_row(out: &mut String, row: &RowComparison) {
    if row.matched {
        let summary: Vec<String> = row
            .cells
            .iter()
            .map(|c| format!("{}={}", c.cell, c.computed))
            .collect();
        let _ = writeln!(
            out,
            "  OK       {:<22} {:<28} {}",
            row.row,
            row.sample,
            summary.join(" ")
        );
    } else {
        let _ = writeln!(out, "  MISMATCH {:<22} {}", row.row, row.sample);
        for c in row.cells.iter().filter(|c| !c.matched) {
            let _ = writeln!(
                out,
                "           {}: computed {} expected {}",
                c.cell, c.computed, c.expected
            );
        }
    }
}
