//! Central-difference gradient oracles.
//!
//! Parameters are perturbed in f32; the difference quotient accumulates in
//! f64. These are test oracles for the analytic backward passes, not a
//! production differentiation path.

use crate::error::{invalid_err, Error, Result};

/// Central difference of a scalar function at one point.
pub fn central_diff(f: &mut dyn FnMut(f32) -> f64, x: f32, h: f32) -> Result<f64> {
    let fp = f(x + h);
    let fm = f(x - h);
    if !fp.is_finite() || !fm.is_finite() {
        return Err(Error::NonFinite { op: "central_diff", detail: format!("f({x} +/- {h})") });
    }
    Ok((fp - fm) / (2.0 * h as f64))
}

/// Central-difference gradient of `f` over a flat parameter bundle.
///
/// Each coordinate is perturbed by +/- h in place; the bundle is restored
/// bitwise after every evaluation.
pub fn finite_diff_grad(
    f: &mut dyn FnMut(&[f32]) -> f64,
    params: &mut [f32],
    h: f32,
) -> Result<Vec<f64>> {
    if h <= 0.0 {
        return Err(invalid_err("finite_diff_grad", "h must be positive"));
    }
    let mut grad = Vec::with_capacity(params.len());
    for k in 0..params.len() {
        let orig = params[k];
        params[k] = orig + h;
        let fp = f(params);
        params[k] = orig - h;
        let fm = f(params);
        params[k] = orig;
        if !fp.is_finite() || !fm.is_finite() {
            return Err(Error::NonFinite {
                op: "finite_diff_grad",
                detail: format!("coordinate {k}"),
            });
        }
        grad.push((fp - fm) / (2.0 * h as f64));
    }
    Ok(grad)
}

/// Largest per-coordinate difference between two gradients, normalized by
/// the larger of the two gradients' max magnitudes. Returns 0 when both
/// sides are identically zero.
pub fn scaled_max_rel_err(analytic: &[f64], numeric: &[f64]) -> f64 {
    debug_assert_eq!(analytic.len(), numeric.len());
    let scale = analytic
        .iter()
        .chain(numeric.iter())
        .fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    analytic
        .iter()
        .zip(numeric)
        .fold(0.0f64, |m, (a, n)| m.max((a - n).abs()))
        / scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{silu, silu_deriv};

    #[test]
    fn square_at_three() {
        let mut f = |x: f32| (x as f64) * (x as f64);
        let d = central_diff(&mut f, 3.0, 1e-3).unwrap();
        assert!((d - 6.0).abs() < 1e-4 * 6.0);
    }

    #[test]
    fn constant_has_zero_gradient() {
        let mut params = vec![1.0f32, -2.0, 0.5];
        let g = finite_diff_grad(&mut |_| 4.2, &mut params, 1e-3).unwrap();
        assert!(g.iter().all(|&v| v == 0.0));
        assert_eq!(params, vec![1.0, -2.0, 0.5]);
    }

    #[test]
    fn silu_matches_closed_form() {
        let mut f = |x: f32| silu(x) as f64;
        let d = central_diff(&mut f, 1.0, 1e-3).unwrap();
        assert!((d - silu_deriv(1.0) as f64).abs() < 1e-4);
    }

    #[test]
    fn non_finite_is_reported() {
        let mut params = vec![0.0f32];
        let r = finite_diff_grad(&mut |p| if p[0] > 0.0 { f64::NAN } else { 0.0 }, &mut params, 1e-3);
        assert!(r.is_err());
    }
}
