//! Metric values, the Levi-Civita connection, curvature tensors and
//! field-equation residuals, plus a finite-difference oracle that uses
//! only metric values.
//!
//! Conventions (fixed once, used everywhere):
//! signature (+,−,−,−);
//! R^ρ_{σμν} = ∂_μ Γ^ρ_{νσ} − ∂_ν Γ^ρ_{μσ} + Γ^ρ_{μλ}Γ^λ_{νσ} − Γ^ρ_{νλ}Γ^λ_{μσ};
//! Ricci R_{σν} = R^μ_{σμν}.

use thiserror::Error;

use crate::analysis::{classify_with, SingularSet};
use crate::catalog::TimePeriodicParams;
use crate::chart::Point4;
use crate::expr::{EvalError, ParamMap};
use crate::jet::{sym_index, Jet2, SYM_PAIRS};
use crate::linalg::{det4, inverse4, max_abs, Mat4};
use crate::metric::{MetricKind, MetricSpec};

/// |det| below this is treated as a singular point.
pub const SINGULAR_DET: f64 = 1e-14;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("point outside chart validity: coordinate `{coord}` = {value}")]
    OutsideChart { coord: String, value: f64 },
    #[error("singular metric at ({}, {}, {}, {}): |det| = {det:e}{}", point[0], point[1], point[2], point[3], fmt_sets(sets))]
    Singular {
        det: f64,
        point: [f64; 4],
        sets: Vec<SingularSet>,
    },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

fn fmt_sets(sets: &[SingularSet]) -> String {
    if sets.is_empty() {
        String::new()
    } else {
        let names: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
        format!(" (in {})", names.join(", "))
    }
}

/// Metric, inverse, determinant and the component jets at one point.
#[derive(Clone, Debug)]
pub struct MetricValue {
    pub g: Mat4,
    pub g_inv: Mat4,
    pub det: f64,
    /// Upper-triangle component jets, indexed by [`sym_index`].
    pub jets: [Jet2; 10],
}

impl MetricValue {
    pub fn jet(&self, mu: usize, nu: usize) -> &Jet2 {
        &self.jets[sym_index(mu, nu)]
    }

    /// ∂_k g_{μν}
    pub fn d1(&self, mu: usize, nu: usize, k: usize) -> f64 {
        self.jets[sym_index(mu, nu)].grad[k]
    }

    /// ∂_k ∂_l g_{μν}
    pub fn d2(&self, mu: usize, nu: usize, k: usize, l: usize) -> f64 {
        self.jets[sym_index(mu, nu)].hess_at(k, l)
    }
}

/// Eq.-11 block determinant uwρσ − v²ρσ − p²wσ − q²wρ; only meaningful
/// for metrics whose (1,2), (1,3), (2,3) slots vanish.
pub fn block_det(g: &Mat4) -> f64 {
    let (u, v, p, q) = (g[0][0], g[0][1], g[0][2], g[0][3]);
    let (w, rho, sigma) = (g[1][1], g[2][2], g[3][3]);
    u * w * rho * sigma - v * v * rho * sigma - p * p * w * sigma - q * q * w * rho
}

fn singular_sets_for(spec: &MetricSpec, params: &ParamMap, point: Point4) -> Vec<SingularSet> {
    if spec.kind == MetricKind::TimePeriodicPolar {
        if let Some(tp) = TimePeriodicParams::from_map(params) {
            return classify_with(&tp, point, 1e-9);
        }
    }
    Vec::new()
}

/// Evaluates the metric at a point: component jets, matrix, determinant
/// and inverse. Domain failures on catalog metrics are tagged with the
/// singular sets they fall in.
pub fn metric_at(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
) -> Result<MetricValue, GeometryError> {
    if let Some(axis) = (0..4).find(|&i| !point.0[i].is_finite()) {
        return Err(GeometryError::OutsideChart {
            coord: spec.chart.names()[axis].to_string(),
            value: point.0[axis],
        });
    }
    if let Some(axis) = spec.chart.violated_axis(point) {
        return Err(GeometryError::OutsideChart {
            coord: spec.chart.names()[axis].to_string(),
            value: point.0[axis],
        });
    }
    let mut jets = [Jet2::ZERO; 10];
    for (k, &(mu, nu)) in SYM_PAIRS.iter().enumerate() {
        if let Some(expr) = spec.slot(mu, nu) {
            jets[k] = match expr.eval_jet(point, params) {
                Ok(jet) => jet,
                Err(err) => {
                    let sets = singular_sets_for(spec, params, point);
                    if sets.is_empty() {
                        return Err(err.into());
                    }
                    return Err(GeometryError::Singular {
                        det: 0.0,
                        point: point.0,
                        sets,
                    });
                }
            };
        }
    }
    let mut g = [[0.0; 4]; 4];
    for &(mu, nu) in SYM_PAIRS.iter() {
        let v = jets[sym_index(mu, nu)].value;
        g[mu][nu] = v;
        g[nu][mu] = v;
    }
    let det = det4(&g);
    if det.abs() < SINGULAR_DET {
        return Err(GeometryError::Singular {
            det,
            point: point.0,
            sets: singular_sets_for(spec, params, point),
        });
    }
    let g_inv = inverse4(&g, det);
    Ok(MetricValue { g, g_inv, det, jets })
}

/// Γ^λ_{μν} and ∂_κ Γ^λ_{μν}; symmetric in (μ, ν) by packed storage.
#[derive(Clone, Debug)]
pub struct ChristoffelField {
    gamma: [[f64; 10]; 4],
    dgamma: [[[f64; 10]; 4]; 4],
}

impl ChristoffelField {
    pub fn gamma(&self, lambda: usize, mu: usize, nu: usize) -> f64 {
        self.gamma[lambda][sym_index(mu, nu)]
    }

    /// ∂_κ Γ^λ_{μν}
    pub fn dgamma(&self, kappa: usize, lambda: usize, mu: usize, nu: usize) -> f64 {
        self.dgamma[kappa][lambda][sym_index(mu, nu)]
    }

    pub fn max_abs_gamma(&self) -> f64 {
        let mut mx = 0.0f64;
        for row in &self.gamma {
            for &v in row {
                mx = mx.max(v.abs());
            }
        }
        mx
    }
}

/// Connection coefficients from metric jets.
///
/// Γ^λ_{μν} = ½ g^{λκ} (∂_μ g_{κν} + ∂_ν g_{κμ} − ∂_κ g_{μν}); the
/// derivative field uses ∂ g⁻¹ = −g⁻¹ (∂g) g⁻¹ plus the component
/// Hessians.
pub fn christoffel_at(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
) -> Result<ChristoffelField, GeometryError> {
    let mv = metric_at(spec, params, point)?;
    Ok(christoffel_from_value(&mv))
}

pub fn christoffel_from_value(mv: &MetricValue) -> ChristoffelField {
    let ginv = &mv.g_inv;
    // dginv[a][b][k] = ∂_k g^{ab}
    let mut dginv = [[[0.0; 4]; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            for k in 0..4 {
                let mut s = 0.0;
                for p in 0..4 {
                    for q in 0..4 {
                        s -= ginv[a][p] * mv.d1(p, q, k) * ginv[q][b];
                    }
                }
                dginv[a][b][k] = s;
            }
        }
    }
    let mut gamma = [[0.0; 10]; 4];
    let mut dgamma = [[[0.0; 10]; 4]; 4];
    for lambda in 0..4 {
        for (slot, &(mu, nu)) in SYM_PAIRS.iter().enumerate() {
            let mut s = 0.0;
            for k in 0..4 {
                s += ginv[lambda][k] * (mv.d1(k, nu, mu) + mv.d1(k, mu, nu) - mv.d1(mu, nu, k));
            }
            gamma[lambda][slot] = 0.5 * s;
            for kappa in 0..4 {
                let mut t = 0.0;
                for k in 0..4 {
                    t += dginv[lambda][k][kappa]
                        * (mv.d1(k, nu, mu) + mv.d1(k, mu, nu) - mv.d1(mu, nu, k));
                    t += ginv[lambda][k]
                        * (mv.d2(k, nu, mu, kappa) + mv.d2(k, mu, nu, kappa)
                            - mv.d2(mu, nu, k, kappa));
                }
                dgamma[kappa][lambda][slot] = 0.5 * t;
            }
        }
    }
    ChristoffelField { gamma, dgamma }
}

/// Riemann (all indices down), Ricci, scalar, Einstein and Kretschmann.
#[derive(Clone, Debug)]
pub struct CurvatureBundle {
    pub riemann_low: [[[[f64; 4]; 4]; 4]; 4],
    pub ricci: Mat4,
    pub scalar: f64,
    pub einstein: Mat4,
    pub kretschmann: f64,
}

impl CurvatureBundle {
    pub fn max_abs_riemann(&self) -> f64 {
        let mut mx = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        mx = mx.max(self.riemann_low[a][b][c][d].abs());
                    }
                }
            }
        }
        mx
    }

    pub fn max_abs_ricci(&self) -> f64 {
        max_abs(&self.ricci)
    }

    pub fn max_abs_einstein(&self) -> f64 {
        max_abs(&self.einstein)
    }

    /// Largest magnitude across every stored field.
    pub fn max_abs_component(&self) -> f64 {
        self.max_abs_riemann()
            .max(self.max_abs_ricci())
            .max(self.max_abs_einstein())
            .max(self.scalar.abs())
            .max(self.kretschmann.abs())
    }

    /// Max difference against another bundle, normalized per field by
    /// 1 + max |component| of self.
    pub fn max_rel_difference(&self, other: &CurvatureBundle) -> f64 {
        let scale = 1.0 + self.max_abs_component();
        let mut mx = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        mx = mx
                            .max((self.riemann_low[a][b][c][d] - other.riemann_low[a][b][c][d]).abs());
                    }
                }
            }
        }
        for i in 0..4 {
            for j in 0..4 {
                mx = mx.max((self.ricci[i][j] - other.ricci[i][j]).abs());
                mx = mx.max((self.einstein[i][j] - other.einstein[i][j]).abs());
            }
        }
        mx = mx.max((self.scalar - other.scalar).abs());
        mx = mx.max((self.kretschmann - other.kretschmann).abs());
        mx / scale
    }

    pub fn symmetry_residuals(&self) -> SymmetryResiduals {
        let r = &self.riemann_low;
        let scale = 1.0 + self.max_abs_riemann();
        let mut antisym_first = 0.0f64;
        let mut antisym_last = 0.0f64;
        let mut pair_exchange = 0.0f64;
        let mut first_bianchi = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        antisym_first = antisym_first.max((r[a][b][c][d] + r[b][a][c][d]).abs());
                        antisym_last = antisym_last.max((r[a][b][c][d] + r[a][b][d][c]).abs());
                        pair_exchange = pair_exchange.max((r[a][b][c][d] - r[c][d][a][b]).abs());
                        first_bianchi = first_bianchi
                            .max((r[a][b][c][d] + r[a][c][d][b] + r[a][d][b][c]).abs());
                    }
                }
            }
        }
        SymmetryResiduals {
            antisym_first: antisym_first / scale,
            antisym_last: antisym_last / scale,
            pair_exchange: pair_exchange / scale,
            first_bianchi: first_bianchi / scale,
        }
    }
}

/// Riemann symmetry and first-Bianchi residuals, normalized by
/// 1 + max |R|.
#[derive(Clone, Copy, Debug)]
pub struct SymmetryResiduals {
    pub antisym_first: f64,
    pub antisym_last: f64,
    pub pair_exchange: f64,
    pub first_bianchi: f64,
}

impl SymmetryResiduals {
    pub fn max(&self) -> f64 {
        self.antisym_first
            .max(self.antisym_last)
            .max(self.pair_exchange)
            .max(self.first_bianchi)
    }
}

/// Shared tensor assembly from a metric and its connection field.
fn assemble_bundle(g: &Mat4, g_inv: &Mat4, conn: &ChristoffelField) -> CurvatureBundle {
    // R^ρ_{σμν}
    let mut riem_up = [[[[0.0; 4]; 4]; 4]; 4];
    for rho in 0..4 {
        for sigma in 0..4 {
            for mu in 0..4 {
                for nu in 0..4 {
                    let mut v = conn.dgamma(mu, rho, nu, sigma) - conn.dgamma(nu, rho, mu, sigma);
                    for lambda in 0..4 {
                        v += conn.gamma(rho, mu, lambda) * conn.gamma(lambda, nu, sigma)
                            - conn.gamma(rho, nu, lambda) * conn.gamma(lambda, mu, sigma);
                    }
                    riem_up[rho][sigma][mu][nu] = v;
                }
            }
        }
    }
    let mut riemann_low = [[[[0.0; 4]; 4]; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let mut v = 0.0;
                    for r in 0..4 {
                        v += g[a][r] * riem_up[r][b][c][d];
                    }
                    riemann_low[a][b][c][d] = v;
                }
            }
        }
    }
    let mut ricci = [[0.0; 4]; 4];
    for sigma in 0..4 {
        for nu in 0..4 {
            let mut v = 0.0;
            for mu in 0..4 {
                v += riem_up[mu][sigma][mu][nu];
            }
            ricci[sigma][nu] = v;
        }
    }
    let mut scalar = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            scalar += g_inv[i][j] * ricci[i][j];
        }
    }
    let mut einstein = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            einstein[i][j] = ricci[i][j] - 0.5 * g[i][j] * scalar;
        }
    }
    // raise all four indices of R_{αβγδ}, contract for ‖R‖
    let mut kretschmann = 0.0;
    let mut half_up = [[[[0.0; 4]; 4]; 4]; 4]; // R^{ab}_{cd}
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let mut v = 0.0;
                    for q in 0..4 {
                        v += g_inv[b][q] * riem_up[a][q][c][d];
                    }
                    half_up[a][b][c][d] = v;
                }
            }
        }
    }
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let mut up = 0.0;
                    for p in 0..4 {
                        for q in 0..4 {
                            up += g_inv[c][p] * g_inv[d][q] * half_up[a][b][p][q];
                        }
                    }
                    // R^{abcd} R_{abcd}
                    let mut low = 0.0;
                    for r in 0..4 {
                        low += g[a][r] * riem_up[r][b][c][d];
                    }
                    kretschmann += up * low;
                }
            }
        }
    }
    CurvatureBundle {
        riemann_low,
        ricci,
        scalar,
        einstein,
        kretschmann,
    }
}

/// Full curvature bundle from the jet pipeline.
pub fn curvature_at(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
) -> Result<CurvatureBundle, GeometryError> {
    let mv = metric_at(spec, params, point)?;
    let conn = christoffel_from_value(&mv);
    Ok(assemble_bundle(&mv.g, &mv.g_inv, &conn))
}

/// G_{μν} + Λ g_{μν}.
pub fn field_residual_at(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
    lambda: f64,
) -> Result<Mat4, GeometryError> {
    let mv = metric_at(spec, params, point)?;
    let conn = christoffel_from_value(&mv);
    let bundle = assemble_bundle(&mv.g, &mv.g_inv, &conn);
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = bundle.einstein[i][j] + lambda * mv.g[i][j];
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// Finite-difference oracle: metric values only, no jets.
// ---------------------------------------------------------------------

fn value_metric(spec: &MetricSpec, params: &ParamMap, point: Point4) -> Result<Mat4, GeometryError> {
    let mut g = [[0.0; 4]; 4];
    for &(mu, nu) in SYM_PAIRS.iter() {
        if let Some(expr) = spec.slot(mu, nu) {
            let v = expr.eval_value(point, params)?;
            g[mu][nu] = v;
            g[nu][mu] = v;
        }
    }
    Ok(g)
}

fn shifted(point: Point4, axis: usize, delta: f64) -> Point4 {
    let mut p = point;
    p.0[axis] += delta;
    p
}

/// ∂_k g at `point` by central differences Richardson-extrapolated over
/// `h` and `h/2`.
fn fd_metric_d1(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
    h: f64,
) -> Result<[[[f64; 4]; 4]; 4], GeometryError> {
    let mut dg = [[[0.0; 4]; 4]; 4];
    for k in 0..4 {
        for &hh in &[h, h / 2.0] {
            let plus = value_metric(spec, params, shifted(point, k, hh))?;
            let minus = value_metric(spec, params, shifted(point, k, -hh))?;
            let weight = if hh == h { -1.0 / 3.0 } else { 4.0 / 3.0 };
            for a in 0..4 {
                for b in 0..4 {
                    dg[a][b][k] += weight * (plus[a][b] - minus[a][b]) / (2.0 * hh);
                }
            }
        }
    }
    Ok(dg)
}

/// Γ at `point` built purely from metric values.
fn fd_gamma(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
    h: f64,
) -> Result<[[f64; 10]; 4], GeometryError> {
    let g = value_metric(spec, params, point)?;
    let det = det4(&g);
    if det.abs() < SINGULAR_DET {
        return Err(GeometryError::Singular {
            det,
            point: point.0,
            sets: singular_sets_for(spec, params, point),
        });
    }
    let ginv = inverse4(&g, det);
    let dg = fd_metric_d1(spec, params, point, h)?;
    let mut gamma = [[0.0; 10]; 4];
    for lambda in 0..4 {
        for (slot, &(mu, nu)) in SYM_PAIRS.iter().enumerate() {
            let mut s = 0.0;
            for k in 0..4 {
                s += ginv[lambda][k] * (dg[k][nu][mu] + dg[k][mu][nu] - dg[mu][nu][k]);
            }
            gamma[lambda][slot] = 0.5 * s;
        }
    }
    Ok(gamma)
}

/// Curvature bundle computed with nested central differences: the inner
/// metric derivatives carry Richardson extrapolation, the outer
/// derivative of Γ is a plain second-order central difference, so the
/// whole oracle converges at second order in `step`.
pub fn fd_curvature_oracle(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
    step: f64,
) -> Result<CurvatureBundle, GeometryError> {
    let g = value_metric(spec, params, point)?;
    let det = det4(&g);
    if det.abs() < SINGULAR_DET {
        return Err(GeometryError::Singular {
            det,
            point: point.0,
            sets: singular_sets_for(spec, params, point),
        });
    }
    let g_inv = inverse4(&g, det);
    let gamma = fd_gamma(spec, params, point, step)?;
    let mut dgamma = [[[0.0; 10]; 4]; 4];
    for kappa in 0..4 {
        let plus = fd_gamma(spec, params, shifted(point, kappa, step), step)?;
        let minus = fd_gamma(spec, params, shifted(point, kappa, -step), step)?;
        for lambda in 0..4 {
            for slot in 0..10 {
                dgamma[kappa][lambda][slot] = (plus[lambda][slot] - minus[lambda][slot]) / (2.0 * step);
            }
        }
    }
    let conn = ChristoffelField { gamma, dgamma };
    Ok(assemble_bundle(&g, &g_inv, &conn))
}

/// Scale for zero-judgments and pipeline agreement on a (possibly flat)
/// metric: 1 + max(|bundle component|, max|Γ|²). Γ² is the natural
/// curvature magnitude when the bundle itself vanishes.
pub fn curvature_scale(bundle: &CurvatureBundle, conn: &ChristoffelField) -> f64 {
    1.0 + bundle
        .max_abs_component()
        .max(conn.max_abs_gamma() * conn.max_abs_gamma())
}

/// Jet-vs-oracle disagreement at one point: the max absolute bundle
/// difference divided by [`curvature_scale`].
pub fn oracle_agreement(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
    step: f64,
) -> Result<f64, GeometryError> {
    let mv = metric_at(spec, params, point)?;
    let conn = christoffel_from_value(&mv);
    let jet = assemble_bundle(&mv.g, &mv.g_inv, &conn);
    let fd = fd_curvature_oracle(spec, params, point, step)?;
    let raw = jet.max_rel_difference(&fd) * (1.0 + jet.max_abs_component());
    Ok(raw / curvature_scale(&jet, &conn))
}

/// max_ν |∇^μ (G + Λg)_{μν}| with ∂(G + Λg) taken by central differences
/// of [`field_residual_at`].
pub fn contracted_bianchi_residual(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
    lambda: f64,
    step: f64,
) -> Result<f64, GeometryError> {
    let mv = metric_at(spec, params, point)?;
    let conn = christoffel_from_value(&mv);
    let center = {
        let bundle = assemble_bundle(&mv.g, &mv.g_inv, &conn);
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] = bundle.einstein[i][j] + lambda * mv.g[i][j];
            }
        }
        out
    };
    let mut dres = [[[0.0; 4]; 4]; 4]; // [kappa][mu][nu]
    for kappa in 0..4 {
        let plus = field_residual_at(spec, params, shifted(point, kappa, step), lambda)?;
        let minus = field_residual_at(spec, params, shifted(point, kappa, -step), lambda)?;
        for mu in 0..4 {
            for nu in 0..4 {
                dres[kappa][mu][nu] = (plus[mu][nu] - minus[mu][nu]) / (2.0 * step);
            }
        }
    }
    let mut worst = 0.0f64;
    for nu in 0..4 {
        let mut div = 0.0;
        for mu in 0..4 {
            for kappa in 0..4 {
                let mut cov = dres[kappa][mu][nu];
                for l in 0..4 {
                    cov -= conn.gamma(l, kappa, mu) * center[l][nu];
                    cov -= conn.gamma(l, kappa, nu) * center[mu][l];
                }
                div += mv.g_inv[mu][kappa] * cov;
            }
        }
        worst = worst.max(div.abs());
    }
    Ok(worst)
}
