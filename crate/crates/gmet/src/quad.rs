//! Adaptive Simpson quadrature with absolute + relative error control.

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum QuadError {
    #[error("integrand failed at x = {x}: {message}")]
    Integrand { x: f64, message: String },
    #[error("interval bisection limit reached near x = {x}; integral may be singular")]
    DepthExceeded { x: f64 },
}

const MAX_DEPTH: u32 = 40;

/// ∫_a^b f dx by adaptive Simpson; stops refining a panel once its
/// estimated error is below `tol_abs + tol_rel * |integral so far|`.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol_abs: f64, tol_rel: f64) -> Result<f64, QuadError>
where
    F: Fn(f64) -> Result<f64, String>,
{
    let eval = |x: f64| f(x).map_err(|message| QuadError::Integrand { x, message });
    let fa = eval(a)?;
    let fb = eval(b)?;
    let m = 0.5 * (a + b);
    let fm = eval(m)?;
    let whole = simpson(a, b, fa, fm, fb);
    recurse(&eval, a, b, fa, fm, fb, whole, tol_abs, tol_rel, 0)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F>(
    eval: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol_abs: f64,
    tol_rel: f64,
    depth: u32,
) -> Result<f64, QuadError>
where
    F: Fn(f64) -> Result<f64, QuadError>,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = eval(lm)?;
    let frm = eval(rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let err = left + right - whole;
    let tol = tol_abs + tol_rel * (left + right).abs();
    if err.abs() <= 15.0 * tol {
        // classic Richardson correction for composite Simpson
        return Ok(left + right + err / 15.0);
    }
    if depth >= MAX_DEPTH {
        return Err(QuadError::DepthExceeded { x: m });
    }
    let l = recurse(eval, a, m, fa, flm, fm, left, tol_abs / 2.0, tol_rel, depth + 1)?;
    let r = recurse(eval, m, b, fm, frm, fb, right, tol_abs / 2.0, tol_rel, depth + 1)?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomial_exactly() {
        let v = adaptive_simpson(|x| Ok(x * x * x - 2.0 * x), 0.0, 2.0, 1e-12, 1e-12).unwrap();
        assert!((v - 0.0).abs() < 1e-12);
    }

    #[test]
    fn integrates_exp_to_tolerance() {
        let v = adaptive_simpson(|x| Ok(x.exp()), 0.0, 1.0, 1e-10, 1e-10).unwrap();
        assert!((v - (std::f64::consts::E - 1.0)).abs() < 1e-9);
    }

    #[test]
    fn propagates_integrand_errors() {
        let err = adaptive_simpson(
            |x| if x > 0.9 { Err("pole".into()) } else { Ok(x) },
            0.0,
            1.0,
            1e-8,
            1e-8,
        )
        .unwrap_err();
        assert!(matches!(err, QuadError::Integrand { .. }));
    }

    #[test]
    fn flags_non_integrable_singularity() {
        // 1/x^2 near 0 never settles
        let err = adaptive_simpson(|x| Ok(1.0 / (x * x)), 1e-300, 1.0, 1e-10, 1e-10).unwrap_err();
        assert!(matches!(err, QuadError::DepthExceeded { .. }));
    }
}
