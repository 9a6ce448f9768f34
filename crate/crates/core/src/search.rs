//! One-dimensional root finding and maximisation.

use serde::Serialize;

use crate::error::{Error, Result};

const MAX_ROOT_ITERATIONS: usize = 400;

/// Outcome of a bracketed root search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootResult {
    pub value: f64,
    /// `|f(value)|`.
    pub residual: f64,
    pub iterations: usize,
    /// Final bracket; always contains `value`.
    pub bracket: [f64; 2],
}

/// Bisection with secant acceleration on a sign-changing bracket.
///
/// A secant (false-position) step is tried first; whenever a step fails to
/// halve the bracket the next step is a plain bisection, so the bracket width
/// at least halves every two iterations. Stops when the bracket is no wider
/// than `tol` or when it can no longer be split in floating point.
pub fn find_root<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<RootResult>
where
    F: Fn(f64) -> f64,
{
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::InvalidParam(format!(
            "bracket [{lo}, {hi}] with tolerance {tol}"
        )));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(exact(a, 0));
    }
    if fb == 0.0 {
        return Ok(exact(b, 0));
    }
    if fa.is_nan() || fb.is_nan() || fa.signum() == fb.signum() {
        return Err(Error::Bracket {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }

    let mut bisect_next = false;
    let mut iterations = 0;
    while b - a > tol {
        if iterations == MAX_ROOT_ITERATIONS {
            return Err(Error::NoConvergence { iterations });
        }
        iterations += 1;
        let width = b - a;
        let mid = a + 0.5 * width;
        let x = if bisect_next {
            mid
        } else {
            let s = a - fa * width / (fb - fa);
            if s > a && s < b {
                s
            } else {
                mid
            }
        };
        if x <= a || x >= b {
            // bracket is down to adjacent floats
            break;
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(exact(x, iterations));
        }
        if fx.is_nan() {
            return Err(Error::InvalidParam(format!("function is NaN at {x}")));
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        bisect_next = b - a > 0.5 * width;
    }

    let (value, residual) = if fa.abs() <= fb.abs() {
        (a, fa.abs())
    } else {
        (b, fb.abs())
    };
    Ok(RootResult {
        value,
        residual,
        iterations,
        bracket: [a, b],
    })
}

fn exact(x: f64, iterations: usize) -> RootResult {
    RootResult {
        value: x,
        residual: 0.0,
        iterations,
        bracket: [x, x],
    }
}

/// Golden-section search for a maximum of `f` on `[lo, hi]`.
///
/// Returns `(x_max, f_max)`; the endpoints are evaluated too so that a
/// monotone function reports its boundary maximum.
pub fn golden_max<F>(f: F, lo: f64, hi: f64, iterations: usize) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iterations {
        if b - a <= f64::EPSILON * (1.0 + a.abs().max(b.abs())) {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let mut best = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    for x in [lo, hi] {
        let fx = f(x);
        if fx > best.1 {
            best = (x, fx);
        }
    }
    best
}
