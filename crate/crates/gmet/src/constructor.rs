//! Type-I construction toolkit: the closed (1,1) Einstein component,
//! the quadrature route for the (0,1) component, the exponential-ansatz
//! shortcut and the cascade residual report.

use thiserror::Error;

use crate::chart::{Chart, Point4};
use crate::expr::{con, coord, exp, ln, EvalError, Expr, ParamMap};
use crate::geometry::{field_residual_at, GeometryError};
use crate::metric::MetricSpec;
use crate::parse::{parse_expression, ParseError};
use crate::quad::{adaptive_simpson, QuadError};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum ConstructorError {
    #[error("template leaves v unknown; no metric to assemble")]
    UnknownV,
    #[error("proviso violated: (rho*sigma)_x = 0 at x = {0}")]
    Proviso(f64),
    #[error("{what} vanishes at the evaluation point")]
    ZeroValue { what: &'static str },
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// A type-I metric template: the (1,1) slot is structurally zero, the
/// block off-diagonals vanish, and the (0,1) component `v` may be left
/// unknown for the quadrature route. `v0` is the integration profile in
/// the non-x coordinates.
#[derive(Clone, Debug)]
pub struct TypeITemplate {
    pub chart: Chart,
    pub params: Vec<(String, f64)>,
    pub u: Expr,
    pub p: Expr,
    pub q: Expr,
    pub rho: Expr,
    pub sigma: Expr,
    pub v: Option<Expr>,
    pub v0: Expr,
}

impl TypeITemplate {
    /// Builds the metric spec; v must be known.
    pub fn assemble(&self) -> Result<MetricSpec, ConstructorError> {
        let v = self.v.clone().ok_or(ConstructorError::UnknownV)?;
        let mut spec = MetricSpec::new(self.chart.clone());
        for (name, value) in &self.params {
            spec.declare_param(name, *value);
        }
        spec.set_slot(0, 0, self.u.clone());
        spec.set_slot(0, 1, v);
        if !self.p.is_zero_literal() {
            spec.set_slot(0, 2, self.p.clone());
        }
        if !self.q.is_zero_literal() {
            spec.set_slot(0, 3, self.q.clone());
        }
        spec.set_slot(2, 2, self.rho.clone());
        spec.set_slot(3, 3, self.sigma.clone());
        Ok(spec)
    }

    pub fn default_params(&self) -> ParamMap {
        self.params.iter().cloned().collect()
    }
}

/// Prescribed functional form reducing the quadrature route to
/// v = v0 f_x e^f: the angular components are ρ̃(t,y,z) e^{2f(t,x)} and
/// σ̃(t,y,z) e^{2f(t,x)}.
#[derive(Clone, Debug)]
pub struct AnsatzSpec {
    pub rho_tilde: Expr,
    pub sigma_tilde: Expr,
    pub f: Expr,
    pub v0: Expr,
}

impl AnsatzSpec {
    /// The induced template, v left unknown for the quadrature route.
    pub fn template(&self, chart: Chart, u: Expr, p: Expr, q: Expr) -> TypeITemplate {
        let rho = self.rho_tilde.clone() * exp(con(2.0) * self.f.clone());
        let sigma = self.sigma_tilde.clone() * exp(con(2.0) * self.f.clone());
        TypeITemplate {
            chart,
            params: Vec::new(),
            u,
            p,
            q,
            rho,
            sigma,
            v: None,
            v0: self.v0.clone(),
        }
    }
}

/// v = v0 · f_x · e^f, the closed form of the quadrature route under the
/// exponential ansatz; f_x comes from the jet of f.
pub fn v_from_ansatz(
    ansatz: &AnsatzSpec,
    params: &ParamMap,
    point: Point4,
) -> Result<f64, ConstructorError> {
    let f = ansatz.f.eval_jet(point, params)?;
    let v0 = ansatz.v0.eval_value(point, params)?;
    Ok(v0 * f.grad[1] * f.value.exp())
}

/// The closed-form (1,1) Einstein component of a type-I metric,
/// in the engine's curvature sign convention:
///
/// G₁₁ = ½ { (v_x/v)(ρ_x/ρ + σ_x/σ) + ½[(ρ_x/ρ)² + (σ_x/σ)²]
///           − (ρ_xx/ρ + σ_xx/σ) }
pub fn g11_closed_form(
    template: &TypeITemplate,
    params: &ParamMap,
    point: Point4,
) -> Result<f64, ConstructorError> {
    let v_expr = template.v.as_ref().ok_or(ConstructorError::UnknownV)?;
    let v = v_expr.eval_jet(point, params)?;
    let rho = template.rho.eval_jet(point, params)?;
    let sigma = template.sigma.eval_jet(point, params)?;
    if v.value == 0.0 {
        return Err(ConstructorError::ZeroValue { what: "v" });
    }
    if rho.value == 0.0 {
        return Err(ConstructorError::ZeroValue { what: "rho" });
    }
    if sigma.value == 0.0 {
        return Err(ConstructorError::ZeroValue { what: "sigma" });
    }
    let vx_v = v.grad[1] / v.value;
    let rx_r = rho.grad[1] / rho.value;
    let sx_s = sigma.grad[1] / sigma.value;
    let rxx_r = rho.hess_at(1, 1) / rho.value;
    let sxx_s = sigma.hess_at(1, 1) / sigma.value;
    Ok(0.5 * (vx_v * (rx_r + sx_s) + 0.5 * (rx_r * rx_r + sx_s * sx_s) - (rxx_r + sxx_s)))
}

/// v on a uniform grid by the quadrature route:
/// v(x) = v(x₀) exp ∫ [ρ_xx/ρ + σ_xx/σ − ½(ρ_x/ρ)² − ½(σ_x/σ)²]
///                 · ρσ/(ρσ)_x dx,
/// valid while (ρσ)_x ≠ 0. The non-x coordinates stay fixed at `base`.
#[allow(clippy::too_many_arguments)]
pub fn solve_v(
    template: &TypeITemplate,
    params: &ParamMap,
    base: Point4,
    interval: (f64, f64),
    x0: f64,
    v_at_x0: f64,
    tol: f64,
    grid: usize,
) -> Result<Vec<(f64, f64)>, ConstructorError> {
    let n = grid.max(2);
    let at_x = |x: f64| {
        let mut p = base;
        p.0[1] = x;
        p
    };
    let integrand = |x: f64| -> Result<f64, String> {
        let point = at_x(x);
        let rho = template.rho.eval_jet(point, params).map_err(|e| e.to_string())?;
        let sigma = template
            .sigma
            .eval_jet(point, params)
            .map_err(|e| e.to_string())?;
        if rho.value == 0.0 || sigma.value == 0.0 {
            return Err(format!("rho or sigma vanishes at x = {x}"));
        }
        let prod_x = rho.grad[1] * sigma.value + rho.value * sigma.grad[1];
        if prod_x == 0.0 {
            return Err(format!("proviso:(rho*sigma)_x = 0 at x = {x}"));
        }
        let rx_r = rho.grad[1] / rho.value;
        let sx_s = sigma.grad[1] / sigma.value;
        let bracket = rho.hess_at(1, 1) / rho.value + sigma.hess_at(1, 1) / sigma.value
            - 0.5 * rx_r * rx_r
            - 0.5 * sx_s * sx_s;
        Ok(bracket * rho.value * sigma.value / prod_x)
    };
    // proviso is checked at every quadrature node through the integrand;
    // surface it as its own error kind
    let lift = |err: QuadError| match err {
        QuadError::Integrand { x, message } if message.starts_with("proviso:") => {
            ConstructorError::Proviso(x)
        }
        other => ConstructorError::Quad(other),
    };
    let (lo, hi) = interval;
    let xs: Vec<f64> = (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect();
    let mut out = Vec::with_capacity(n);
    // cumulative integral from x0 to each grid point, stepping outward
    let mut up_acc = 0.0;
    let mut up_from = x0;
    for &x in xs.iter().filter(|&&x| x >= x0) {
        up_acc += adaptive_simpson(integrand, up_from, x, tol, tol).map_err(lift)?;
        up_from = x;
        out.push((x, v_at_x0 * up_acc.exp()));
    }
    let mut down_acc = 0.0;
    let mut down_from = x0;
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &x in xs.iter().rev().filter(|&&x| x < x0) {
        down_acc += adaptive_simpson(integrand, down_from, x, tol, tol).map_err(lift)?;
        down_from = x;
        lower.push((x, v_at_x0 * down_acc.exp()));
    }
    lower.reverse();
    lower.extend(out);
    Ok(lower)
}

/// Equation labels of the residual cascade, in evaluation order.
pub const CASCADE_LABELS: [&str; 10] = [
    "G11",
    "G12",
    "G13",
    "G23",
    "G22+Lambda*rho",
    "G33+Lambda*sigma",
    "G01+Lambda*v",
    "G02+Lambda*p",
    "G03+Lambda*q",
    "G00+Lambda*u",
];

/// Component index pairs matching [`CASCADE_LABELS`].
pub const CASCADE_SLOTS: [(usize, usize); 10] = [
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 3),
    (2, 2),
    (3, 3),
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 0),
];

#[derive(Clone, Debug)]
pub struct CascadeRow {
    pub label: &'static str,
    pub slot: (usize, usize),
    /// One residual per requested point.
    pub residuals: Vec<f64>,
    pub max_abs: f64,
}

/// Residuals of the ten cascade equations, ordered as the construction
/// flow visits them.
#[derive(Clone, Debug)]
pub struct CascadeReport {
    pub lambda: f64,
    pub rows: Vec<CascadeRow>,
}

impl CascadeReport {
    pub fn max_abs(&self) -> f64 {
        self.rows.iter().fold(0.0f64, |a, r| a.max(r.max_abs))
    }
}

pub fn cascade_residual_report(
    spec: &MetricSpec,
    params: &ParamMap,
    lambda: f64,
    points: &[Point4],
) -> Result<CascadeReport, GeometryError> {
    let mut per_point = Vec::with_capacity(points.len());
    for &pt in points {
        per_point.push(field_residual_at(spec, params, pt, lambda)?);
    }
    let rows = CASCADE_LABELS
        .iter()
        .zip(CASCADE_SLOTS.iter())
        .map(|(&label, &(mu, nu))| {
            let residuals: Vec<f64> = per_point.iter().map(|res| res[mu][nu]).collect();
            let max_abs = residuals.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            CascadeRow {
                label,
                slot: (mu, nu),
                residuals,
                max_abs,
            }
        })
        .collect();
    Ok(CascadeReport { lambda, rows })
}

// --- built-in ansatz fixtures and the template text format ---------------

/// Named ansatz fixtures with hand-derived closed v, used by the CLI and
/// the test suite. Chart is (t, x, y, z), ρ̃ = σ̃ = −1, v0 = 1.
pub fn ansatz_fixture(name: &str) -> Option<(AnsatzSpec, Expr)> {
    let ansatz = |f: Expr| AnsatzSpec {
        rho_tilde: con(-1.0),
        sigma_tilde: con(-1.0),
        f,
        v0: con(1.0),
    };
    Some(match name {
        // f = x: v = e^x
        "ansatz-x" => (ansatz(coord(1)), exp(coord(1))),
        // f = ln(x+2): f_x e^f = 1, v stays at v0
        "ansatz-log" => (ansatz(ln(coord(1) + con(2.0))), con(1.0)),
        // f = 2x: v = 2 e^{2x}
        "ansatz-2x" => (ansatz(con(2.0) * coord(1)), con(2.0) * exp(con(2.0) * coord(1))),
        _ => return None,
    })
}

pub const ANSATZ_NAMES: [&str; 3] = ["ansatz-x", "ansatz-log", "ansatz-2x"];

/// A fixture template with the closed-form v filled in and u = 1,
/// p = q = 0.
pub fn fixture_template(name: &str) -> Option<TypeITemplate> {
    let (ansatz, v_closed) = ansatz_fixture(name)?;
    let chart = Chart::new(["t", "x", "y", "z"]).unwrap();
    let mut template = ansatz.template(chart, con(1.0), con(0.0), con(0.0));
    template.v = Some(v_closed);
    Some(template)
}

/// Parses the template text format:
///
/// ```text
/// chart t x y z
/// param c = 2
/// u = 1
/// v = exp(x)        # or: v = unknown
/// v0 = 1
/// p = 0
/// q = 0
/// rho = -exp(2*x)
/// sigma = -exp(2*x)
/// ```
pub fn parse_template(text: &str) -> Result<TypeITemplate, ParseError> {
    let mut chart: Option<Chart> = None;
    let mut params: Vec<(String, f64)> = Vec::new();
    let mut fields: std::collections::BTreeMap<String, Option<Expr>> = Default::default();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if stripped.trim().is_empty() {
            continue;
        }
        let mut words = stripped.split_whitespace();
        let head = words.next().unwrap();
        if head == "chart" {
            let names: Vec<&str> = words.collect();
            if names.len() != 4 {
                return Err(ParseError {
                    line: line_no,
                    col: 1,
                    message: format!(
                        "chart requires exactly 4 coordinate names, found {}",
                        names.len()
                    ),
                });
            }
            chart = Some(
                Chart::new([names[0], names[1], names[2], names[3]]).map_err(|e| ParseError {
                    line: line_no,
                    col: 1,
                    message: e.to_string(),
                })?,
            );
            continue;
        }
        if head == "param" {
            let rest: Vec<&str> = words.collect();
            if rest.len() != 3 || rest[1] != "=" {
                return Err(ParseError {
                    line: line_no,
                    col: 1,
                    message: "param line must read `param name = value`".into(),
                });
            }
            let value: f64 = rest[2].parse().map_err(|_| ParseError {
                line: line_no,
                col: 1,
                message: format!("malformed number `{}`", rest[2]),
            })?;
            params.push((rest[0].to_string(), value));
            continue;
        }
        // assignment: name = expression
        let eq_pos = stripped.find('=').ok_or(ParseError {
            line: line_no,
            col: 1,
            message: format!("expected `name = expression`, found `{}`", stripped.trim()),
        })?;
        let name = stripped[..eq_pos].trim().to_string();
        if !matches!(name.as_str(), "u" | "v" | "v0" | "p" | "q" | "rho" | "sigma") {
            return Err(ParseError {
                line: line_no,
                col: 1,
                message: format!("unknown template field `{name}`"),
            });
        }
        let chart_ref = chart.as_ref().ok_or(ParseError {
            line: line_no,
            col: 1,
            message: "chart line must come first".into(),
        })?;
        let rhs = &stripped[eq_pos + 1..];
        if name == "v" && rhs.trim() == "unknown" {
            fields.insert(name, None);
            continue;
        }
        let param_names: Vec<String> = params.iter().map(|(n, _)| n.clone()).collect();
        let expr = parse_expression(rhs, line_no, chart_ref.names(), &param_names).map_err(
            |mut e| {
                e.col += eq_pos + 1;
                e
            },
        )?;
        fields.insert(name, Some(expr));
    }

    let chart = chart.ok_or(ParseError {
        line: 1,
        col: 1,
        message: "template has no chart line".into(),
    })?;
    let take = |name: &str| -> Result<Expr, ParseError> {
        fields
            .get(name)
            .cloned()
            .flatten()
            .ok_or_else(|| ParseError {
                line: 1,
                col: 1,
                message: format!("template is missing `{name}`"),
            })
    };
    let u = take("u")?;
    let v0 = take("v0")?;
    let p = take("p")?;
    let q = take("q")?;
    let rho = take("rho")?;
    let sigma = take("sigma")?;
    let v = fields.get("v").cloned().unwrap_or(None);
    if !fields.contains_key("v") {
        return Err(ParseError {
            line: 1,
            col: 1,
            message: "template is missing `v` (use `v = unknown` for the quadrature route)".into(),
        });
    }
    Ok(TypeITemplate {
        chart,
        params,
        u,
        p,
        q,
        rho,
        sigma,
        v,
        v0,
    })
}
