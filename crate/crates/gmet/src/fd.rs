//! Central-difference derivatives of expression values.
//!
//! This is the independent check on the jet path: it only ever calls
//! [`Expr::eval_value`], so an error in the chain-rule code cannot hide
//! here. First differences are Richardson-extrapolated over `step` and
//! `step/2`; second differences stay plain central, where extrapolation
//! would amplify the 1/h² cancellation noise past its own truncation
//! gain.

use crate::chart::Point4;
use crate::expr::{EvalError, Expr, ParamMap};
use crate::jet::SYM_PAIRS;

fn shifted(point: Point4, axis: usize, delta: f64) -> Point4 {
    let mut p = point;
    p.0[axis] += delta;
    p
}

fn shifted2(point: Point4, i: usize, di: f64, j: usize, dj: f64) -> Point4 {
    let mut p = point;
    p.0[i] += di;
    p.0[j] += dj;
    p
}

/// First partial by plain central difference at one step.
fn d1_once(
    expr: &Expr,
    point: Point4,
    params: &ParamMap,
    axis: usize,
    h: f64,
) -> Result<f64, EvalError> {
    let plus = expr.eval_value(shifted(point, axis, h), params)?;
    let minus = expr.eval_value(shifted(point, axis, -h), params)?;
    Ok((plus - minus) / (2.0 * h))
}

/// First partial, Richardson-extrapolated over h and h/2.
pub fn fd_d1(
    expr: &Expr,
    point: Point4,
    params: &ParamMap,
    axis: usize,
    h: f64,
) -> Result<f64, EvalError> {
    let coarse = d1_once(expr, point, params, axis, h)?;
    let fine = d1_once(expr, point, params, axis, h / 2.0)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

fn d2_pure_once(
    expr: &Expr,
    point: Point4,
    params: &ParamMap,
    axis: usize,
    h: f64,
) -> Result<f64, EvalError> {
    let plus = expr.eval_value(shifted(point, axis, h), params)?;
    let center = expr.eval_value(point, params)?;
    let minus = expr.eval_value(shifted(point, axis, -h), params)?;
    Ok((plus - 2.0 * center + minus) / (h * h))
}

fn d2_mixed_once(
    expr: &Expr,
    point: Point4,
    params: &ParamMap,
    i: usize,
    j: usize,
    h: f64,
) -> Result<f64, EvalError> {
    let pp = expr.eval_value(shifted2(point, i, h, j, h), params)?;
    let pm = expr.eval_value(shifted2(point, i, h, j, -h), params)?;
    let mp = expr.eval_value(shifted2(point, i, -h, j, h), params)?;
    let mm = expr.eval_value(shifted2(point, i, -h, j, -h), params)?;
    Ok((pp - pm - mp + mm) / (4.0 * h * h))
}

/// Second partial by plain central differences at h.
pub fn fd_d2(
    expr: &Expr,
    point: Point4,
    params: &ParamMap,
    i: usize,
    j: usize,
    h: f64,
) -> Result<f64, EvalError> {
    if i == j {
        d2_pure_once(expr, point, params, i, h)
    } else {
        d2_mixed_once(expr, point, params, i, j, h)
    }
}

/// Max over the 14 derivative slots of |jet − difference| / (1 + |jet|).
pub fn jet_fd_agreement(
    expr: &Expr,
    point: Point4,
    params: &ParamMap,
    step: f64,
) -> Result<f64, EvalError> {
    let jet = expr.eval_jet(point, params)?;
    let mut worst = 0.0f64;
    for axis in 0..4 {
        let fd = fd_d1(expr, point, params, axis, step)?;
        let rel = (jet.grad[axis] - fd).abs() / (1.0 + jet.grad[axis].abs());
        worst = worst.max(rel);
    }
    for (k, &(i, j)) in SYM_PAIRS.iter().enumerate() {
        let fd = fd_d2(expr, point, params, i, j, step)?;
        let rel = (jet.hess[k] - fd).abs() / (1.0 + jet.hess[k].abs());
        worst = worst.max(rel);
    }
    Ok(worst)
}
