//! Bisection on a bracketing interval.

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum RootError {
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {flo}, f(hi) = {fhi}")]
    NoBracket { lo: f64, hi: f64, flo: f64, fhi: f64 },
    #[error("function failed at x = {x}: {message}")]
    Eval { x: f64, message: String },
}

/// Bisects to an absolute x-tolerance and returns the final bracket.
/// The first element keeps the sign of `f(lo)`, the second the other.
pub fn bisect_bracket<F>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, f64), RootError>
where
    F: Fn(f64) -> Result<f64, String>,
{
    let eval = |x: f64| f(x).map_err(|message| RootError::Eval { x, message });
    let mut flo = eval(lo)?;
    let fhi = eval(hi)?;
    if flo == 0.0 {
        return Ok((lo, lo));
    }
    if fhi == 0.0 {
        return Ok((hi, hi));
    }
    if flo.signum() == fhi.signum() {
        return Err(RootError::NoBracket { lo, hi, flo, fhi });
    }
    while (hi - lo).abs() > tol {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fm = eval(mid)?;
        if fm == 0.0 {
            return Ok((mid, mid));
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Bisects to an absolute x-tolerance. Returns the endpoint of the final
/// bracket on the `f(lo)` side, so the result inherits lo's sign.
pub fn bisect<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64, RootError>
where
    F: Fn(f64) -> Result<f64, String>,
{
    bisect_bracket(f, lo, hi, tol).map(|(a, _)| a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = bisect(|x| Ok(x * x - 2.0), 0.0, 2.0, 1e-13).unwrap();
        assert!((r - 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn rejects_unbracketed_interval() {
        assert!(matches!(
            bisect(|x| Ok(x * x + 1.0), -1.0, 1.0, 1e-12),
            Err(RootError::NoBracket { .. })
        ));
    }

    #[test]
    fn result_keeps_lo_side_sign() {
        // monotone decreasing through zero: lo side is positive
        let r = bisect(|x| Ok(1.0 - x), 0.0, 2.0, 1e-13).unwrap();
        assert!(1.0 - r >= 0.0);
        assert!((r - 1.0).abs() < 1e-12);
    }
}
