//! Real-argument Airy functions Ai, Bi and their derivatives.
//!
//! Evaluation scheme, with documented switchover points:
//!   |x| <= 5          Maclaurin series about the origin (DLMF 9.4).
//!   5 < x < 12        Bi by Taylor-stepping the ODE y'' = x y up from x = 5;
//!                     Ai by stepping down from the asymptotic seed at x = 12
//!                     (downward is the stable direction for the decaying
//!                     solution).
//!   x >= 12           Asymptotic expansions in z = (2/3) x^{3/2}.
//!   -12 < x < -5      Taylor-stepping from the asymptotic seed at x = -12
//!                     (oscillatory region, no exponential instability).
//!   x <= -12          Oscillatory asymptotic expansions.
//!
//! Accuracy is ~1e-13 relative through the turning-point region; for large
//! negative x the absolute phase error grows like |x|^{3/2} * eps, which
//! stays below 1e-10 relative out to x ~ -1e4.

use crate::error::{CoreError, Result};

/// Bi(x) overflows f64 just above x = 104; reject before that happens.
pub const AIRY_MAX_ARG: f64 = 104.0;
/// Oscillation-phase accuracy guard on the negative axis.
pub const AIRY_MIN_ARG: f64 = -1.0e6;

/// Ai, Ai', Bi, Bi' at one real argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryPair {
    pub ai: f64,
    pub aip: f64,
    pub bi: f64,
    pub bip: f64,
}

impl AiryPair {
    /// Ai*Bi' - Ai'*Bi; equals 1/pi for exact values.
    pub fn wronskian(&self) -> f64 {
        self.ai * self.bip - self.aip * self.bi
    }
}

const AI_0: f64 = 0.355028053887817239260063186004;
const AIP_0: f64 = -0.258819403792806798405183560189;
const SQRT_3: f64 = 1.732050807568877293527446341506;
const ONE_OVER_SQRT_PI: f64 = 0.564189583547756286948079451561;

pub fn airy(x: f64) -> Result<AiryPair> {
    if !x.is_finite() {
        return Err(CoreError::Domain {
            op: "specialfns::airy",
            msg: format!("non-finite argument {x}"),
        });
    }
    if x > AIRY_MAX_ARG {
        return Err(CoreError::Range {
            op: "specialfns::airy",
            msg: format!("x = {x} exceeds {AIRY_MAX_ARG}: Bi(x) overflows"),
        });
    }
    if x < AIRY_MIN_ARG {
        return Err(CoreError::Range {
            op: "specialfns::airy",
            msg: format!("x = {x} below {AIRY_MIN_ARG}: phase accuracy lost"),
        });
    }

    if (-5.0..=3.5).contains(&x) {
        return Ok(maclaurin(x));
    }
    if x >= 12.0 {
        return Ok(asymptotic_pos(x));
    }
    if x > 3.5 {
        // 3.5 < x < 12. Ai loses digits to Maclaurin cancellation here, so
        // step it down from the asymptotic seed (the stable direction for
        // the decaying solution). Bi is a positive-term sum and stays exact.
        let seed_hi = asymptotic_pos(12.0);
        let (ai, aip) = taylor_propagate(12.0, seed_hi.ai, seed_hi.aip, x);
        let (bi, bip) = if x <= 5.0 {
            let p = maclaurin(x);
            (p.bi, p.bip)
        } else {
            let seed_lo = maclaurin(5.0);
            taylor_propagate(5.0, seed_lo.bi, seed_lo.bip, x)
        };
        return Ok(AiryPair { ai, aip, bi, bip });
    }
    if x <= -12.0 {
        return Ok(asymptotic_neg(x));
    }
    // -12 < x < -5
    let seed = asymptotic_neg(-12.0);
    let (ai, aip) = taylor_propagate(-12.0, seed.ai, seed.aip, x);
    let (bi, bip) = taylor_propagate(-12.0, seed.bi, seed.bip, x);
    Ok(AiryPair { ai, aip, bi, bip })
}

/// DLMF 9.4: Ai = Ai(0) f + Ai'(0) g, Bi = sqrt(3) [Ai(0) f - Ai'(0) g].
fn maclaurin(x: f64) -> AiryPair {
    let x3 = x * x * x;

    // f = sum 3^k (1/3)_k x^{3k} / (3k)!      t_{k+1} = t_k x^3 /((3k+2)(3k+3))
    // g = sum 3^k (2/3)_k x^{3k+1} / (3k+1)!  s_{k+1} = s_k x^3 /((3k+3)(3k+4))
    // f' = sum_{k>=1} ... u_{k+1} = u_k x^3/((3k)(3k+2)), u_1 = x^2/2
    // g' = sum ...        v_{k+1} = v_k x^3/((3k+1)(3k+3)), v_0 = 1
    let mut f = 0.0;
    let mut g = 0.0;
    let mut fp = 0.0;
    let mut gp = 0.0;

    let mut t = 1.0;
    let mut s = x;
    let mut u = 0.5 * x * x;
    let mut v = 1.0;
    f += t;
    g += s;
    fp += u;
    gp += v;
    for k in 0..60usize {
        let kf = k as f64;
        t *= x3 / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        s *= x3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        v *= x3 / ((3.0 * kf + 1.0) * (3.0 * kf + 3.0));
        u *= if k == 0 {
            // u_2 from u_1: x^3 / (3*1 * (3*1+2))
            x3 / (3.0 * 5.0)
        } else {
            x3 / ((3.0 * (kf + 1.0)) * (3.0 * (kf + 1.0) + 2.0))
        };
        f += t;
        g += s;
        fp += u;
        gp += v;
        if t.abs() < 1e-18 * f.abs() && s.abs() < 1e-18 * g.abs().max(1e-300) {
            break;
        }
    }

    AiryPair {
        ai: AI_0 * f + AIP_0 * g,
        aip: AI_0 * fp + AIP_0 * gp,
        bi: SQRT_3 * (AI_0 * f - AIP_0 * g),
        bip: SQRT_3 * (AI_0 * fp - AIP_0 * gp),
    }
}

/// Taylor-step the solution (y, y') of y'' = x y from `a` to `target`.
fn taylor_propagate(a: f64, y: f64, yp: f64, target: f64) -> (f64, f64) {
    const H_MAX: f64 = 1.25;
    let mut a = a;
    let mut y = y;
    let mut yp = yp;
    while a != target {
        let h = (target - a).clamp(-H_MAX, H_MAX);
        let (ny, nyp) = taylor_step(a, y, yp, h);
        y = ny;
        yp = nyp;
        a += h;
        if (target - a).abs() < 1e-14 * target.abs().max(1.0) {
            a = target;
        }
    }
    (y, yp)
}

fn taylor_step(a: f64, y: f64, yp: f64, h: f64) -> (f64, f64) {
    // c_{n+2} = (a c_n + c_{n-1}) / ((n+1)(n+2))
    const N: usize = 48;
    let mut c = [0.0f64; N];
    c[0] = y;
    c[1] = yp;
    c[2] = 0.5 * a * c[0];
    for n in 1..(N - 2) {
        c[n + 2] = (a * c[n] + c[n - 1]) / (((n + 1) * (n + 2)) as f64);
    }
    let mut val = 0.0;
    let mut der = 0.0;
    // Horner from the top keeps the small high-order terms grouped.
    for n in (1..N).rev() {
        val = val * h + c[n];
        der = der * h + c[n] * n as f64;
    }
    val = val * h + c[0];
    // der currently equals sum_{n>=1} n c_n h^{n-1}
    (val, der)
}

/// DLMF 9.7.5-9.7.8 with u_k, v_k coefficient recurrences.
fn asymptotic_pos(x: f64) -> AiryPair {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let x14 = x.powf(0.25);

    let (su_alt, sv_alt) = uv_sums(zeta, true);
    let (su, sv) = uv_sums(zeta, false);

    let e_neg = (-zeta).exp();
    let e_pos = zeta.exp();
    AiryPair {
        ai: 0.5 * ONE_OVER_SQRT_PI / x14 * e_neg * su_alt,
        aip: -0.5 * ONE_OVER_SQRT_PI * x14 * e_neg * sv_alt,
        bi: ONE_OVER_SQRT_PI / x14 * e_pos * su,
        bip: ONE_OVER_SQRT_PI * x14 * e_pos * sv,
    }
}

/// Sums of u_k / zeta^k and v_k / zeta^k, alternating or not, truncated at
/// the smallest term.
fn uv_sums(zeta: f64, alternating: bool) -> (f64, f64) {
    let mut u = 1.0f64;
    let mut su = 1.0;
    let mut sv = 1.0;
    let mut zk = 1.0;
    let mut prev = f64::INFINITY;
    for k in 0..40usize {
        let kf = k as f64;
        // u_{k+1} = u_k (6k+1)(6k+3)(6k+5) / (216 (k+1)(2k+1))
        u *= (6.0 * kf + 1.0) * (6.0 * kf + 3.0) * (6.0 * kf + 5.0)
            / (216.0 * (kf + 1.0) * (2.0 * kf + 1.0));
        zk /= zeta;
        let term_u = u * zk;
        if term_u.abs() >= prev {
            break; // asymptotic series started diverging
        }
        prev = term_u.abs();
        let v = -u * (6.0 * (kf + 1.0) + 1.0) / (6.0 * (kf + 1.0) - 1.0);
        let sign = if alternating && (k + 1) % 2 == 1 { -1.0 } else { 1.0 };
        su += sign * term_u;
        sv += sign * v * zk;
        if term_u.abs() < 1e-18 * su.abs() {
            break;
        }
    }
    (su, sv)
}

/// DLMF 9.7.9-9.7.12, oscillatory region.
fn asymptotic_neg(x: f64) -> AiryPair {
    let y = -x;
    let zeta = 2.0 / 3.0 * y.powf(1.5);
    let y14 = y.powf(0.25);

    // Even/odd splits of sum (-1)^k u_k zeta^{-k} and same for v.
    let mut u = 1.0f64;
    let mut zk = 1.0;
    let mut su_even = 1.0; // sum (-1)^k u_{2k} zeta^{-2k}
    let mut su_odd = 0.0; // sum (-1)^k u_{2k+1} zeta^{-2k-1}
    let mut sv_even = 1.0;
    let mut sv_odd = 0.0;
    let mut prev = f64::INFINITY;
    for m in 1..40usize {
        let kf = (m - 1) as f64;
        u *= (6.0 * kf + 1.0) * (6.0 * kf + 3.0) * (6.0 * kf + 5.0)
            / (216.0 * (kf + 1.0) * (2.0 * kf + 1.0));
        zk /= zeta;
        let term = u * zk;
        if term.abs() >= prev {
            break;
        }
        prev = term.abs();
        let v = -u * (6.0 * m as f64 + 1.0) / (6.0 * m as f64 - 1.0);
        let sign = if (m / 2) % 2 == 1 { -1.0 } else { 1.0 };
        if m % 2 == 0 {
            su_even += sign * term;
            sv_even += sign * v * zk;
        } else {
            su_odd += sign * term;
            sv_odd += sign * v * zk;
        }
        if term.abs() < 1e-18 {
            break;
        }
    }

    let w = zeta - std::f64::consts::FRAC_PI_4;
    let (sw, cw) = w.sin_cos();
    AiryPair {
        ai: ONE_OVER_SQRT_PI / y14 * (cw * su_even + sw * su_odd),
        aip: ONE_OVER_SQRT_PI * y14 * (sw * sv_even - cw * sv_odd),
        bi: ONE_OVER_SQRT_PI / y14 * (-sw * su_even + cw * su_odd),
        bip: ONE_OVER_SQRT_PI * y14 * (cw * sv_even + sw * sv_odd),
    }
}
