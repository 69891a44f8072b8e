//! Energy Green functions: the free-particle closed form, the uniform-field
//! (Airy) closed form, and a damped-Laplace-transform numerical oracle that
//! ties any propagator to its energy Green function.
//!
//! The oracle evaluates G = (1/i hbar) Int_0^tmax dt e^{i(E+i eta)t/hbar} K(t)
//! by adaptive quadrature along a contour dipped into the lower half t-plane,
//! where the integrand is analytic and the short-time chirp of the free
//! kernel decays instead of oscillating. The value is contour-independent;
//! the dip is purely a quadrature device. Callers extrapolate eta -> 0 with
//! two eta values (Richardson, leading error linear in eta).

use crate::error::{CoreError, Result};
use crate::propagator::FieldConfig;
use crate::quad;
use crate::specialfns::airy;
use num_complex::Complex64;

/// One sampled Green-function value.
#[derive(Debug, Clone, PartialEq)]
pub struct GreenSample {
    pub value: Complex64,
    pub r: [f64; 3],
    pub rp: [f64; 3],
    pub energy: f64,
}

/// Free-particle retarded Green function in 3D:
/// G = -(m / 2 pi hbar^2) e^{i k d} / d, with outgoing k = sqrt(2mE)/hbar for
/// E > 0 and decaying k = i sqrt(2m|E|)/hbar for E < 0.
pub fn green_free(
    r: &[f64; 3],
    rp: &[f64; 3],
    energy: f64,
    mass: f64,
    hbar: f64,
) -> Result<Complex64> {
    let d = dist(r, rp);
    if d == 0.0 {
        return Err(CoreError::Domain {
            op: "green::green_free",
            msg: "coincident points: free Green function diverges".into(),
        });
    }
    let pref = -mass / (2.0 * std::f64::consts::PI * hbar * hbar * d);
    let value = if energy >= 0.0 {
        let k = (2.0 * mass * energy).sqrt() / hbar;
        Complex64::from_polar(1.0, k * d).scale(pref)
    } else {
        let kappa = (2.0 * mass * (-energy)).sqrt() / hbar;
        Complex64::new(pref * (-kappa * d).exp(), 0.0)
    };
    Ok(value)
}

/// Uniform-field Green function with a point source at the origin and the
/// force along +z:
/// G(r, o; E) = (m / 2 hbar^2 r) [Ci(a+) Ai'(a-) - Ci'(a+) Ai(a-)],
/// a± = -beta [2E + F (z ± r)], beta^3 = m/(2 hbar F)^2, Ci = Bi + i Ai.
pub fn green_linear_field(r: &[f64; 3], energy: f64, cfg: &FieldConfig) -> Result<Complex64> {
    if cfg.force_f <= 0.0 {
        return Err(CoreError::Domain {
            op: "green::green_linear_field",
            msg: "requires force_f > 0 (use green_free for F = 0)".into(),
        });
    }
    let rad = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if rad == 0.0 {
        return Err(CoreError::Domain {
            op: "green::green_linear_field",
            msg: "coincident with the source point".into(),
        });
    }
    let beta = cfg.beta()?;
    let z = r[2];
    let a_plus = -beta * (2.0 * energy + cfg.force_f * (z + rad));
    let a_minus = -beta * (2.0 * energy + cfg.force_f * (z - rad));
    let p_plus = airy(a_plus)?;
    let p_minus = airy(a_minus)?;
    let ci = Complex64::new(p_plus.bi, p_plus.ai);
    let cip = Complex64::new(p_plus.bip, p_plus.aip);
    let pref = cfg.mass / (2.0 * cfg.hbar * cfg.hbar * rad);
    Ok((ci.scale(p_minus.aip) - cip.scale(p_minus.ai)).scale(pref))
}

/// Uniform-field Green function between two arbitrary points, by the
/// translation identity G(r, r'; E) = G(r - r', o; E + F z').
pub fn green_linear_field_pair(
    r: &[f64; 3],
    rp: &[f64; 3],
    energy: f64,
    cfg: &FieldConfig,
) -> Result<Complex64> {
    let rel = [r[0] - rp[0], r[1] - rp[1], r[2] - rp[2]];
    green_linear_field(&rel, energy + cfg.force_f * rp[2], cfg)
}

/// Im G(R, R; E) for the uniform-field Green function at coincidence. The
/// real part diverges but the imaginary part has the finite limit
/// -(m beta F / hbar^2) [Ai'(-2 beta E)^2 + 2 beta E Ai(-2 beta E)^2],
/// obtained by expanding the Airy bracket to first order in r.
pub fn green_linear_field_im_coincidence(energy: f64, cfg: &FieldConfig) -> Result<f64> {
    let beta = cfg.beta()?;
    let a0 = -2.0 * beta * energy;
    let p = airy(a0)?;
    let bracket = p.aip * p.aip + 2.0 * beta * energy * p.ai * p.ai;
    Ok(-cfg.mass * beta * cfg.force_f / (cfg.hbar * cfg.hbar) * bracket)
}

/// Contour for the damped Laplace transform: 0 -> (t_a, -d) -> (t_max, -d)
/// -> t_max, expressed as polyline nodes in the complex t plane.
pub fn default_laplace_contour(energy: f64, eta: f64, t_max: f64, hbar: f64) -> Vec<Complex64> {
    let scale = energy.abs().max(eta).max(hbar / t_max);
    let d = (3.0 * hbar / scale).min(t_max / 20.0);
    let t_a = (0.1 * t_max).min(2.0 * d);
    vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(t_a, -d),
        Complex64::new(t_max, -d),
        Complex64::new(t_max, 0.0),
    ]
}

/// Damped Laplace transform of a propagator kernel along a polyline contour:
/// (1/i hbar) Int dt e^{i (E + i eta) t / hbar} K(t).
///
/// `kernel` must be the analytic continuation of K(r, t | r', 0) in t, valid
/// in the region swept between the real axis and the contour.
pub fn green_numeric_laplace_path(
    kernel: impl Fn(Complex64) -> Complex64,
    energy: f64,
    eta: f64,
    path: &[Complex64],
    hbar: f64,
    rel_tol: f64,
) -> Result<Complex64> {
    if !(eta > 0.0) {
        return Err(CoreError::Domain {
            op: "green::green_numeric_laplace",
            msg: format!("eta must be > 0, got {eta}"),
        });
    }
    let e_c = Complex64::new(energy, eta);
    let i = Complex64::new(0.0, 1.0);
    let integrand = |t: Complex64| (i * e_c * t / hbar).exp() * kernel(t);
    let res = quad::contour_polyline(integrand, path, 1e-300, rel_tol, 40_000)?;
    Ok(res.value / (i * hbar))
}

/// Damped Laplace transform with the default dipped contour and explicit
/// truncation time `t_max` (tail suppressed when eta * t_max / hbar >~ 30).
pub fn green_numeric_laplace(
    kernel: impl Fn(Complex64) -> Complex64,
    energy: f64,
    eta: f64,
    t_max: f64,
    hbar: f64,
) -> Result<Complex64> {
    let path = default_laplace_contour(energy, eta, t_max, hbar);
    green_numeric_laplace_path(kernel, energy, eta, &path, hbar, 1e-9)
}

/// Two-eta Richardson extrapolation of the numeric Laplace transform toward
/// eta -> 0: evaluates at `eta` and `eta/2` and removes the leading linear
/// error.
pub fn green_numeric_laplace_extrapolated(
    kernel: impl Fn(Complex64) -> Complex64 + Copy,
    energy: f64,
    eta: f64,
    t_max: f64,
    hbar: f64,
) -> Result<Complex64> {
    let g1 = green_numeric_laplace(kernel, energy, eta, t_max, hbar)?;
    let g2 = green_numeric_laplace(kernel, energy, 0.5 * eta, 2.0 * t_max, hbar)?;
    Ok(quad::richardson_eta(g1, g2))
}

fn dist(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    (dx * dx + dy * dy + dz * dz).sqrt()
}
