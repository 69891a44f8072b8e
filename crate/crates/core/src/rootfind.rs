//! Bracketing root location on an interval, with bisection/secant polishing.
//!
//! Built for the closed-orbit branch searches: scan a dense grid for sign
//! changes, refine locally when two changes fall too close together, then
//! polish each bracket to a relative tolerance.

use crate::error::{CoreError, Result};

/// A root bracketed in `(lo, hi)` with `f(lo) * f(hi) < 0`.
#[derive(Debug, Clone, Copy)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

/// Scan `[a, b]` with `n` uniform samples for sign changes of `f`.
/// When two adjacent sign changes are closer than `refine_cells` grid cells,
/// the region is rescanned at double resolution (up to `max_depth` times) so
/// near-tangent root pairs are separated.
pub fn scan_brackets(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    n: usize,
    refine_cells: usize,
    max_depth: usize,
) -> Vec<Bracket> {
    fn scan_once(f: &impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> Vec<Bracket> {
        let mut out = Vec::new();
        let h = (b - a) / n as f64;
        let mut x_prev = a;
        let mut f_prev = f(a);
        for i in 1..=n {
            let x = a + i as f64 * h;
            let fx = f(x);
            if f_prev == 0.0 {
                out.push(Bracket {
                    lo: x_prev,
                    hi: x_prev,
                });
            } else if f_prev.is_finite() && fx.is_finite() && f_prev * fx < 0.0 {
                out.push(Bracket { lo: x_prev, hi: x });
            }
            x_prev = x;
            f_prev = fx;
        }
        out
    }

    let mut brackets = scan_once(f, a, b, n);
    let mut depth = 0;
    let mut cell = (b - a) / n as f64;
    while depth < max_depth {
        let too_close = brackets
            .windows(2)
            .any(|w| w[1].lo - w[0].hi < refine_cells as f64 * cell);
        if !too_close {
            break;
        }
        cell *= 0.5;
        brackets = scan_once(f, a, b, n * (1 << (depth + 1)));
        depth += 1;
    }
    brackets
}

/// Polish a bracketed root to relative tolerance `rel_tol` (on x) using
/// bisection with secant acceleration. The bracket is maintained throughout.
pub fn polish(
    f: &impl Fn(f64) -> f64,
    bracket: Bracket,
    rel_tol: f64,
    max_iter: usize,
) -> Result<f64> {
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    if lo == hi {
        return Ok(lo);
    }
    let (mut flo, mut fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo * fhi > 0.0 {
        return Err(CoreError::NonConvergence {
            op: "rootfind::polish",
            msg: format!("interval [{lo}, {hi}] does not bracket a root"),
        });
    }
    for _ in 0..max_iter {
        let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
        if hi - lo <= rel_tol * scale {
            return Ok(0.5 * (lo + hi));
        }
        // Secant candidate, constrained to the interior of the bracket.
        let mut x = lo - flo * (hi - lo) / (fhi - flo);
        let margin = 0.1 * (hi - lo);
        if !(x > lo + margin && x < hi - margin) {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if flo * fx < 0.0 {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
    }
    Err(CoreError::NonConvergence {
        op: "rootfind::polish",
        msg: format!("no convergence after {max_iter} iterations in [{lo}, {hi}]"),
    })
}

/// Monotone bisection for `f(x) = target` on `[lo, hi]`, used by the
/// constant-current height solver. Assumes `f(lo)` and `f(hi)` straddle
/// `target`; tolerance is absolute in `x`.
pub fn bisect_to_target(
    f: &impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    target: f64,
    abs_tol_x: f64,
) -> Result<f64> {
    let g = |x: f64| f(x) - target;
    let (mut lo, mut hi) = (lo, hi);
    let (mut glo, ghi) = (g(lo), g(hi));
    if glo == 0.0 {
        return Ok(lo);
    }
    if ghi == 0.0 {
        return Ok(hi);
    }
    if glo * ghi > 0.0 {
        return Err(CoreError::NonConvergence {
            op: "rootfind::bisect_to_target",
            msg: format!("target {target:e} not bracketed on [{lo}, {hi}]"),
        });
    }
    while hi - lo > abs_tol_x {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let gm = g(mid);
        if gm == 0.0 {
            return Ok(mid);
        }
        if glo * gm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    Ok(0.5 * (lo + hi))
}
