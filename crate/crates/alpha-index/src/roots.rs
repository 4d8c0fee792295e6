//! Largest-real-root isolation for monic quadratics and cubics.
//!
//! The closed forms in this crate all reduce to low-degree monic polynomials
//! whose greatest real root is a spectral radius. Roots are bracketed by
//! splitting the search interval at the critical points of the polynomial
//! (a quadratic can be positive at zero with two positive roots, so a plain
//! sign scan over `[0, hi]` is not enough), then refined by bisection with
//! derivative-safe Newton acceleration.

use crate::error::{Error, Result};

const ROOT_TOL: f64 = 1e-13;
const MAX_REFINE_ITERS: usize = 200;

/// Evaluates a polynomial given ascending coefficients `c[0] + c[1] x + ...`.
pub(crate) fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn eval_deriv(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for (k, &c) in coeffs.iter().enumerate().skip(1).rev() {
        acc = acc * x + c * k as f64;
    }
    acc
}

/// Real critical points (roots of the derivative), ascending.
fn critical_points(coeffs: &[f64]) -> Vec<f64> {
    match coeffs.len() {
        // monic quadratic x^2 + c1 x + c0: vertex at -c1/2
        3 => vec![-coeffs[1] / 2.0],
        // monic cubic: derivative 3x^2 + 2 c2 x + c1
        4 => {
            let (a, b, c) = (3.0, 2.0 * coeffs[2], coeffs[1]);
            let disc = b * b - 4.0 * a * c;
            if disc <= 0.0 {
                return Vec::new();
            }
            let s = disc.sqrt();
            let mut pts = vec![(-b - s) / (2.0 * a), (-b + s) / (2.0 * a)];
            pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
            pts
        }
        _ => Vec::new(),
    }
}

/// Greatest real root of a monic polynomial of degree 2 or 3 inside
/// `[lo, hi]`, accurate to about 1e-12. `hi` is widened to the Cauchy bound
/// if the polynomial has not yet turned positive there, which cannot happen
/// for the spectral-radius instantiations but keeps the routine total.
pub(crate) fn largest_real_root_monic(coeffs: &[f64], lo: f64, hi: f64) -> Result<f64> {
    let degree = coeffs.len() - 1;
    if !(degree == 2 || degree == 3) {
        return Err(Error::parameter(format!(
            "root finder handles degree 2 or 3, got {degree}"
        )));
    }
    if (coeffs[degree] - 1.0).abs() > 1e-12 {
        return Err(Error::parameter("root finder expects a monic polynomial"));
    }

    let cauchy = 1.0 + coeffs[..degree].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut hi = hi;
    if eval_poly(coeffs, hi) < 0.0 {
        hi = hi.max(cauchy);
    }

    // Breakpoints: ends plus interior critical points.
    let mut pts = vec![lo];
    for c in critical_points(coeffs) {
        if c > lo && c < hi {
            pts.push(c);
        }
    }
    pts.push(hi);

    // Scan intervals right to left; the first upward sign change holds the
    // greatest root in the window.
    for w in (0..pts.len() - 1).rev() {
        let (a, b) = (pts[w], pts[w + 1]);
        let (fa, fb) = (eval_poly(coeffs, a), eval_poly(coeffs, b));
        if fb == 0.0 {
            return Ok(b);
        }
        if fa == 0.0 && fb > 0.0 {
            return Ok(a);
        }
        if fa < 0.0 && fb > 0.0 {
            return Ok(refine(coeffs, a, b));
        }
    }
    Err(Error::numeric(format!(
        "no real root in [{lo}, {hi}] for coefficients {coeffs:?}"
    )))
}

/// Bisection with Newton steps accepted only while they stay in the bracket.
fn refine(coeffs: &[f64], mut a: f64, mut b: f64) -> f64 {
    let mut x = 0.5 * (a + b);
    for _ in 0..MAX_REFINE_ITERS {
        let fx = eval_poly(coeffs, x);
        if fx == 0.0 {
            return x;
        }
        if fx < 0.0 {
            a = x;
        } else {
            b = x;
        }
        let scale = x.abs().max(1.0);
        if b - a <= ROOT_TOL * scale {
            break;
        }
        let dfx = eval_deriv(coeffs, x);
        let newton = if dfx.abs() > 1e-300 { x - fx / dfx } else { f64::NAN };
        x = if newton.is_finite() && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
    }
    x
}
