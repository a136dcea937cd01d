//! The `construct` command: quadrature-vs-closed-form comparison for the
//! (0,1) component and the ten-equation cascade residual table.

use gmet::catalog;
use gmet::chart::Point4;
use gmet::constructor::{
    ansatz_fixture, cascade_residual_report, fixture_template, parse_template, solve_v,
    v_from_ansatz, ConstructorError, TypeITemplate, ANSATZ_NAMES,
};
use gmet::expr::ParamMap;
use gmet::metric::MetricSpec;
use gmet::rng::SplitMix64;

use crate::args::{AuditConfig, CliError};
use crate::json::Json;
use crate::report::{push_header, CommandOutput};

const DEFAULT_TOL: f64 = 1e-6;
const GRID_INTERVAL: (f64, f64) = (0.0, 2.0);

fn lift(e: ConstructorError) -> CliError {
    match e {
        ConstructorError::Proviso(_) | ConstructorError::ZeroValue { .. } => {
            CliError::Domain(e.to_string())
        }
        ConstructorError::Quad(q) => CliError::Domain(q.to_string()),
        ConstructorError::Eval(ev) => CliError::Domain(ev.to_string()),
        ConstructorError::UnknownV => CliError::Config(e.to_string()),
    }
}

enum Source {
    Fixture(&'static str),
    Template(TypeITemplate),
    Catalog(MetricSpec),
}

fn resolve_source(config: &AuditConfig) -> Result<Source, CliError> {
    if let Some(name) = ANSATZ_NAMES.iter().find(|n| **n == config.metric) {
        return Ok(Source::Fixture(name));
    }
    if catalog::CATALOG_NAMES.contains(&config.metric.as_str()) {
        let spec = catalog::by_name(&config.metric, &config.params)
            .map_err(|e| CliError::Config(e.to_string()))?;
        return Ok(Source::Catalog(spec));
    }
    if std::path::Path::new(&config.metric).exists() {
        let text = std::fs::read_to_string(&config.metric)
            .map_err(|e| CliError::Config(format!("cannot read `{}`: {e}", config.metric)))?;
        let template =
            parse_template(&text).map_err(|e| CliError::Config(format!("{}: {e}", config.metric)))?;
        return Ok(Source::Template(template));
    }
    Err(CliError::Config(format!(
        "`{}` is not an ansatz fixture, catalog metric or template file",
        config.metric
    )))
}

pub fn run_construct(config: &AuditConfig) -> Result<CommandOutput, CliError> {
    let tol = config.tol.unwrap_or(DEFAULT_TOL);
    let grid = config.samples.max(2);
    let mut root = Json::obj();
    push_header(&mut root, config);
    let mut summary = Vec::new();

    let (quadrature, spec_for_cascade, params): (Json, Option<MetricSpec>, ParamMap) =
        match resolve_source(config)? {
            Source::Fixture(name) => {
                let (ansatz, _) = ansatz_fixture(name).expect("fixture exists");
                let template = fixture_template(name).expect("fixture template");
                let params = template.default_params();
                let base = Point4::new(0.0, 0.0, 0.0, 0.0);
                let x0 = GRID_INTERVAL.0;
                let v0 = {
                    let mut p = base;
                    p.0[1] = x0;
                    v_from_ansatz(&ansatz, &params, p).map_err(lift)?
                };
                let samples = solve_v(
                    &template,
                    &params,
                    base,
                    GRID_INTERVAL,
                    x0,
                    v0,
                    tol.min(1e-8),
                    grid,
                )
                .map_err(lift)?;
                let mut max_rel = 0.0f64;
                let mut rows = Vec::new();
                for &(x, v) in &samples {
                    let mut p = base;
                    p.0[1] = x;
                    let closed = v_from_ansatz(&ansatz, &params, p).map_err(lift)?;
                    let rel = (v - closed).abs() / (1.0 + closed.abs());
                    max_rel = max_rel.max(rel);
                    let mut row = Json::obj();
                    row.push("x", Json::Num(x));
                    row.push("quadrature", Json::Num(v));
                    row.push("closed_form", Json::Num(closed));
                    rows.push(row);
                }
                let mut q = Json::obj();
                q.push("route", Json::Str("ansatz closed form".into()));
                q.push("grid", Json::Int(samples.len() as i64));
                q.push("max_rel", Json::Num(max_rel));
                q.push("tolerance", Json::Num(tol));
                q.push("pass", Json::Bool(max_rel <= tol));
                q.push("samples", Json::Arr(rows));
                summary.push(format!(
                    "quadrature vs closed form ({name}): max rel {max_rel:.3e}"
                ));
                let spec = template.assemble().map_err(lift)?;
                (q, Some(spec), params)
            }
            Source::Template(template) => {
                let params = template.default_params();
                match template.v.clone() {
                    Some(v_expr) => {
                        let base = Point4::new(0.0, 0.0, 0.0, 0.0);
                        let x0 = GRID_INTERVAL.0;
                        let v0 = {
                            let mut p = base;
                            p.0[1] = x0;
                            v_expr
                                .eval_value(p, &params)
                                .map_err(|e| CliError::Domain(e.to_string()))?
                        };
                        let samples = solve_v(
                            &template,
                            &params,
                            base,
                            GRID_INTERVAL,
                            x0,
                            v0,
                            tol.min(1e-8),
                            grid,
                        )
                        .map_err(lift)?;
                        let mut max_rel = 0.0f64;
                        for &(x, v) in &samples {
                            let mut p = base;
                            p.0[1] = x;
                            let explicit = v_expr
                                .eval_value(p, &params)
                                .map_err(|e| CliError::Domain(e.to_string()))?;
                            max_rel = max_rel.max((v - explicit).abs() / (1.0 + explicit.abs()));
                        }
                        let mut q = Json::obj();
                        q.push("route", Json::Str("explicit v".into()));
                        q.push("grid", Json::Int(samples.len() as i64));
                        q.push("max_rel", Json::Num(max_rel));
                        q.push("tolerance", Json::Num(tol));
                        q.push("pass", Json::Bool(max_rel <= tol));
                        summary.push(format!("quadrature vs template v: max rel {max_rel:.3e}"));
                        let spec = template.assemble().map_err(lift)?;
                        (q, Some(spec), params)
                    }
                    None => {
                        // quadrature route only: report v samples, no cascade
                        let base = Point4::new(0.0, 0.0, 0.0, 0.0);
                        let samples = solve_v(
                            &template,
                            &params,
                            base,
                            GRID_INTERVAL,
                            GRID_INTERVAL.0,
                            1.0,
                            tol.min(1e-8),
                            grid,
                        )
                        .map_err(lift)?;
                        let rows: Vec<Json> = samples
                            .iter()
                            .map(|&(x, v)| {
                                let mut row = Json::obj();
                                row.push("x", Json::Num(x));
                                row.push("quadrature", Json::Num(v));
                                row
                            })
                            .collect();
                        let mut q = Json::obj();
                        q.push("route", Json::Str("v unknown: quadrature only".into()));
                        q.push("grid", Json::Int(samples.len() as i64));
                        q.push("max_rel", Json::Null);
                        q.push("pass", Json::Bool(true));
                        q.push("samples", Json::Arr(rows));
                        summary.push("v unknown: sampled by quadrature, cascade skipped".into());
                        (q, None, params)
                    }
                }
            }
            Source::Catalog(spec) => {
                let params = spec.params_with(&config.params);
                let mut q = Json::obj();
                q.push(
                    "route",
                    Json::Str("catalog metric: cascade residuals only".into()),
                );
                q.push("max_rel", Json::Null);
                q.push("pass", Json::Bool(true));
                (q, Some(spec), params)
            }
        };

    let quadrature_pass = matches!(
        &quadrature,
        Json::Obj(entries) if entries.iter().any(|(k, v)| *k == "pass" && matches!(v, Json::Bool(true)))
    );
    root.push("quadrature_vs_closed_form", quadrature);

    let cascade_json = match &spec_for_cascade {
        Some(spec) => {
            let mut rng = SplitMix64::new(config.seed);
            let points: Vec<Point4> = match spec.kind {
                gmet::metric::MetricKind::General => (0..8)
                    .map(|_| {
                        Point4::new(
                            rng.in_range(-1.0, 1.0),
                            rng.in_range(0.2, 1.8),
                            rng.in_range(-1.0, 1.0),
                            rng.in_range(-1.0, 1.0),
                        )
                    })
                    .collect(),
                _ => catalog::sample_points(spec, &params, 8, config.seed, &config.bands),
            };
            let report = cascade_residual_report(spec, &params, config.lambda, &points)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let rows: Vec<Json> = report
                .rows
                .iter()
                .map(|row| {
                    let mut obj = Json::obj();
                    obj.push("label", Json::Str(row.label.to_string()));
                    obj.push("max_abs", Json::Num(row.max_abs));
                    obj.push(
                        "residuals",
                        Json::Arr(row.residuals.iter().map(|v| Json::Num(*v)).collect()),
                    );
                    obj
                })
                .collect();
            summary.push(format!("cascade max residual: {:.3e}", report.max_abs()));
            let mut obj = Json::obj();
            obj.push("lambda", Json::Num(config.lambda));
            obj.push("points", Json::Int(points.len() as i64));
            obj.push("max_abs", Json::Num(report.max_abs()));
            obj.push("rows", Json::Arr(rows));
            obj
        }
        None => Json::Null,
    };
    root.push("cascade", cascade_json);
    root.push("pass", Json::Bool(quadrature_pass));

    Ok(CommandOutput {
        report: root.render(),
        summary,
        pass: quadrature_pass,
    })
}
