//! Time-dependent ballistic propagators: free particle, uniform force field,
//! and the crossed-field return propagator, together with the classical
//! action entering the canonical form K = A(t) exp(i S_cl / hbar).
//!
//! All formulas live in natural units; `FieldConfig` carries the mass and
//! hbar explicitly so callers can feed converted SI parameters straight in.

use crate::error::{CoreError, Result};
use num_complex::Complex64;

/// Static field configuration for the crossed-field and uniform-force
/// problems.
///
/// Conventions (charge e = 1): the Larmor frequency is half the cyclotron
/// frequency, `larmor = B/(2 m)`; the drift velocity in crossed fields is
/// `drift_v = E_field/B = force_f/(2 m larmor)`; the magnetic length is
/// `l = sqrt(hbar/(2 m larmor))`; the level width is `Gamma = force_f * l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldConfig {
    /// Uniform electric force F (>= 0).
    pub force_f: f64,
    /// Larmor frequency omega_L = B/(2 m) (>= 0).
    pub larmor: f64,
    /// Drift velocity v_D; derived as force_f/(2 m larmor) when larmor > 0.
    pub drift_v: f64,
    pub mass: f64,
    pub hbar: f64,
}

impl FieldConfig {
    /// Build from force and Larmor frequency; drift velocity is derived.
    pub fn new(force_f: f64, larmor: f64, mass: f64, hbar: f64) -> Result<Self> {
        if !(force_f >= 0.0) || !(larmor >= 0.0) || !(mass > 0.0) || !(hbar > 0.0) {
            return Err(CoreError::Domain {
                op: "FieldConfig::new",
                msg: format!(
                    "need force_f >= 0, larmor >= 0, mass > 0, hbar > 0; got \
                     ({force_f}, {larmor}, {mass}, {hbar})"
                ),
            });
        }
        let drift_v = if larmor > 0.0 {
            force_f / (2.0 * mass * larmor)
        } else {
            0.0
        };
        Ok(Self {
            force_f,
            larmor,
            drift_v,
            mass,
            hbar,
        })
    }

    /// Build from drift velocity and Larmor frequency; the force follows
    /// from F = 2 m omega_L v_D.
    pub fn from_drift(drift_v: f64, larmor: f64, mass: f64, hbar: f64) -> Result<Self> {
        if !(drift_v >= 0.0) || !(larmor > 0.0) {
            return Err(CoreError::Domain {
                op: "FieldConfig::from_drift",
                msg: format!("need drift_v >= 0 and larmor > 0; got ({drift_v}, {larmor})"),
            });
        }
        Self::new(2.0 * mass * larmor * drift_v, larmor, mass, hbar)
    }

    /// Pure uniform force, no magnetic field.
    pub fn force_only(force_f: f64, mass: f64, hbar: f64) -> Result<Self> {
        Self::new(force_f, 0.0, mass, hbar)
    }

    /// beta^3 = m / (2 hbar F)^2, the Airy energy-scaling parameter.
    pub fn beta(&self) -> Result<f64> {
        if self.force_f <= 0.0 {
            return Err(CoreError::Domain {
                op: "FieldConfig::beta",
                msg: "beta requires force_f > 0".into(),
            });
        }
        let d = 2.0 * self.hbar * self.force_f;
        Ok((self.mass / (d * d)).cbrt())
    }

    /// Magnetic length l = sqrt(hbar / (2 m omega_L)) (= sqrt(hbar/eB)).
    pub fn magnetic_length(&self) -> Result<f64> {
        if self.larmor <= 0.0 {
            return Err(CoreError::Domain {
                op: "FieldConfig::magnetic_length",
                msg: "magnetic length requires larmor > 0".into(),
            });
        }
        Ok((self.hbar / (2.0 * self.mass * self.larmor)).sqrt())
    }

    /// Level width Gamma = F l.
    pub fn level_width(&self) -> Result<f64> {
        Ok(self.force_f * self.magnetic_length()?)
    }

    /// Distance of `t` from the nearest singular time k pi / omega_L,
    /// in units of the branch length pi / omega_L.
    pub fn singularity_distance(&self, t: f64) -> f64 {
        let period = std::f64::consts::PI / self.larmor;
        let k = (t / period).round();
        (t - k * period).abs() / period
    }
}

/// Tolerance (relative to the branch length) below which times count as
/// singular for the crossed-field propagator.
pub const SINGULAR_TIME_TOL: f64 = 1e-12;

/// Free-particle propagator, dimension-factorized:
/// K = [m/(2 pi i hbar t)]^{dim/2} exp[i m |x - x'|^2 / (2 hbar t)].
pub fn free_propagator(
    x: &[f64],
    xp: &[f64],
    t: f64,
    dim: usize,
    mass: f64,
    hbar: f64,
) -> Result<Complex64> {
    if dim == 0 || dim > 3 || x.len() != dim || xp.len() != dim {
        return Err(CoreError::Domain {
            op: "propagator::free_propagator",
            msg: format!("dim must be 1..3 and match vector lengths (dim={dim})"),
        });
    }
    if !(t > 0.0) {
        return Err(CoreError::Domain {
            op: "propagator::free_propagator",
            msg: format!("t must be > 0, got {t}"),
        });
    }
    let d2: f64 = x.iter().zip(xp).map(|(a, b)| (a - b) * (a - b)).sum();
    Ok(free_propagator_complex(d2, Complex64::new(t, 0.0), dim, mass, hbar))
}

/// Free propagator at squared distance `d2` and complex time `t` (used on
/// the deformed Laplace contours). Branch: i^{1/2} = e^{i pi/4}, so the
/// prefactor is (m/(2 pi hbar t))^{dim/2} e^{-i pi dim/4} on the real axis,
/// continued through the lower half t-plane.
pub fn free_propagator_complex(
    d2: f64,
    t: Complex64,
    dim: usize,
    mass: f64,
    hbar: f64,
) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    // m/(2 pi i hbar t) has positive real part for t in the fourth quadrant;
    // the principal powc branch is continuous there.
    let base = Complex64::new(mass / (2.0 * std::f64::consts::PI * hbar), 0.0) / (i * t);
    let pref = base.powc(Complex64::new(dim as f64 / 2.0, 0.0));
    let phase = i * mass * d2 / (2.0 * hbar * t);
    pref * phase.exp()
}

/// 1D propagator in a uniform force field V(z) = -F z (canonical quadratic
/// form): sqrt(m/(2 pi i hbar t)) exp{(i/hbar)[m(z-z')^2/(2t)
/// + F t (z+z')/2 - F^2 t^3/(24 m)]}.
pub fn linear_field_propagator_1d(
    z: f64,
    zp: f64,
    t: Complex64,
    force_f: f64,
    mass: f64,
    hbar: f64,
) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let base = Complex64::new(mass / (2.0 * std::f64::consts::PI * hbar), 0.0) / (i * t);
    let pref = base.powc(Complex64::new(0.5, 0.0));
    let dz = z - zp;
    let s_cl = Complex64::new(0.5 * mass * dz * dz, 0.0) / t
        + t.scale(0.5 * force_f * (z + zp))
        - t.powu(3).scale(force_f * force_f / (24.0 * mass));
    pref * (i * s_cl / hbar).exp()
}

/// 3D uniform-field propagator with the force along +z; factorizes into one
/// free 2D kernel and one linear-field 1D kernel.
pub fn uniform_field_propagator(
    r: &[f64; 3],
    rp: &[f64; 3],
    t: Complex64,
    force_f: f64,
    mass: f64,
    hbar: f64,
) -> Complex64 {
    let dx2 = (r[0] - rp[0]) * (r[0] - rp[0]);
    let dy2 = (r[1] - rp[1]) * (r[1] - rp[1]);
    free_propagator_complex(dx2 + dy2, t, 2, mass, hbar)
        * linear_field_propagator_1d(r[2], rp[2], t, force_f, mass, hbar)
}

/// Classical action of the closed orbit o -> o in crossed fields:
/// S_cl(t) = -(m/2) v_D^2 t + (m omega_L / 2) cot(omega_L t) v_D^2 t^2.
pub fn classical_action(t: f64, cfg: &FieldConfig) -> Result<f64> {
    check_regular_time(t, cfg, "propagator::classical_action")?;
    let w = cfg.larmor;
    let vd2 = cfg.drift_v * cfg.drift_v;
    Ok(-0.5 * cfg.mass * vd2 * t + 0.5 * cfg.mass * w * vd2 * t * t / (w * t).tan())
}

/// Crossed-field return propagator at the origin:
/// K(o,t|o,0) = -(i m omega_L)/(2 pi hbar sin omega_L t)
///              * exp{ i F^2 t [omega_L t cot(omega_L t) - 1]
///                     / (8 m hbar omega_L^2) }.
pub fn crossed_return_propagator(t: f64, cfg: &FieldConfig) -> Result<Complex64> {
    check_regular_time(t, cfg, "propagator::crossed_return_propagator")?;
    Ok(crossed_return_propagator_complex(Complex64::new(t, 0.0), cfg))
}

/// Analytic continuation of the return propagator to complex time (the
/// Laplace-transform contours dip below the real-axis singularities at
/// t = k pi / omega_L).
pub fn crossed_return_propagator_complex(t: Complex64, cfg: &FieldConfig) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let w = cfg.larmor;
    let wt = t.scale(w);
    let sin_wt = wt.sin();
    let pref = -i * cfg.mass * w / (2.0 * std::f64::consts::PI * cfg.hbar) / sin_wt;
    let f2 = cfg.force_f * cfg.force_f;
    let arg = (wt * wt.cos() / sin_wt - Complex64::new(1.0, 0.0))
        * t
        * Complex64::new(f2 / (8.0 * cfg.mass * cfg.hbar * w * w), 0.0);
    pref * (i * arg).exp()
}

fn check_regular_time(t: f64, cfg: &FieldConfig, op: &'static str) -> Result<()> {
    if cfg.larmor <= 0.0 {
        return Err(CoreError::Domain {
            op,
            msg: "crossed-field formulas require larmor > 0".into(),
        });
    }
    if cfg.singularity_distance(t) < SINGULAR_TIME_TOL {
        return Err(CoreError::Singular {
            op,
            msg: format!(
                "t = {t} within {SINGULAR_TIME_TOL} branch lengths of a zero of sin(omega_L t)"
            ),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn free_modulus_at_coincidence() {
        for dim in 1..=3usize {
            let x = vec![0.3; dim];
            let k = free_propagator(&x, &x, 0.7, dim, 1.0, 1.0).unwrap();
            let expect = (1.0 / (2.0 * std::f64::consts::PI * 0.7)).powf(dim as f64 / 2.0);
            assert_relative_eq!(k.norm(), expect, max_relative = 1e-13);
        }
    }

    #[test]
    fn chapman_kolmogorov_1d() {
        // Int dx'' K(x, t | x'', t'') K(x'', t'' | x', 0) = K(x, t | x', 0).
        // The chirp product does not decay on the real axis, so the
        // integration contour is rotated by pi/4 through the stationary
        // point, where the combined quadratic phase becomes a real Gaussian.
        let (x, xp) = (0.4, -0.3);
        let (t, tmid) = (1.0, 0.35);
        let (t1, t2) = (t - tmid, tmid);
        let direct = free_propagator(&[x], &[xp], t, 1, 1.0, 1.0).unwrap();

        // kernel at complex midpoint u (checked against free_propagator at a
        // real sample below)
        let kernel = |a: f64, u: Complex64, tau: f64| -> Complex64 {
            let i = Complex64::new(0.0, 1.0);
            let pref = (Complex64::new(1.0 / (2.0 * std::f64::consts::PI * tau), 0.0) / i)
                .powc(Complex64::new(0.5, 0.0));
            let d = Complex64::new(a, 0.0) - u;
            pref * (i * d * d / (2.0 * tau)).exp()
        };
        let sample = kernel(x, Complex64::new(0.1, 0.0), t1);
        let reference = free_propagator(&[x], &[0.1], t1, 1, 1.0, 1.0).unwrap();
        assert!((sample - reference).norm() < 1e-14 * reference.norm());

        // stationary point of the joint phase and the pi/4 descent direction
        let u_star = (x * t2 + xp * t1) / (t1 + t2);
        let c = 0.5 * (1.0 / t1 + 1.0 / t2);
        let half_width = 12.0 / c.sqrt();
        let dir = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let composed = crate::quad::adaptive(
            |s: f64| {
                let u = Complex64::new(u_star, 0.0) + dir.scale(s);
                kernel(x, u, t1) * kernel(xp, u, t2) * dir
            },
            -half_width,
            half_width,
            1e-12,
            1e-12,
            20_000,
        )
        .unwrap()
        .value;
        assert!(
            (composed - direct).norm() <= 1e-8 * direct.norm(),
            "{composed} vs {direct}"
        );
    }

    #[test]
    fn delta_limit_against_test_functions() {
        // Weak limit t -> 0+: Int dx' K(x,t|x',0) f(x') -> f(x). The
        // deviation is O(t) for smooth f, so two moderate times plus a
        // Richardson step reach the limit without resolving mega-oscillation
        // chirps.
        let x = 0.2f64;
        let funcs: Vec<(Box<dyn Fn(f64) -> f64>, f64)> = vec![
            (Box::new(|u: f64| (-u * u).exp()), (-x * x).exp()),
            (Box::new(|u: f64| (-0.5 * u * u).exp() * u.cos()), (-0.5 * x * x).exp() * x.cos()),
            (Box::new(|u: f64| (-u * u).exp() * (1.0 + u)), (-x * x).exp() * (1.0 + x)),
        ];
        let convolve = |f: &dyn Fn(f64) -> f64, t: f64| {
            // test functions all carry e^{-u^2/2} decay: e^{-24} at |u| = 7
            crate::quad::adaptive(
                |u: f64| {
                    free_propagator(&[x], &[u], t, 1, 1.0, 1.0)
                        .unwrap()
                        .scale(f(u))
                },
                -7.0,
                7.0,
                1e-11,
                1e-11,
                100_000,
            )
            .unwrap()
            .value
        };
        for (f, fx) in funcs {
            let v1 = convolve(f.as_ref(), 0.04);
            let v2 = convolve(f.as_ref(), 0.02);
            let v3 = convolve(f.as_ref(), 0.01);
            // error = c1 t + c2 t^2 + O(t^3): second-order Richardson
            let extrap = (v1 - v2.scale(6.0) + v3.scale(8.0)).scale(1.0 / 3.0);
            assert!(
                (extrap - Complex64::new(fx, 0.0)).norm() < 1e-4,
                "{extrap} vs {fx}"
            );
            // and the raw deviation must shrink with t
            assert!(
                (v3 - Complex64::new(fx, 0.0)).norm()
                    < 0.7 * (v1 - Complex64::new(fx, 0.0)).norm()
            );
        }
    }

    #[test]
    fn crossed_pure_magnetic_at_quarter_period() {
        // F = 0, omega_L t = pi/2: K = -i m omega_L / (2 pi hbar)
        let cfg = FieldConfig::new(0.0, 2.0, 1.0, 1.0).unwrap();
        let t = std::f64::consts::FRAC_PI_2 / 2.0;
        let k = crossed_return_propagator(t, &cfg).unwrap();
        assert_relative_eq!(k.re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(
            k.im,
            -2.0 / (2.0 * std::f64::consts::PI),
            max_relative = 1e-13
        );
    }

    #[test]
    fn canonical_form_and_field_free_prefactor() {
        // K(t) e^{-i S_cl/hbar} must not depend on v_D at fixed t, and must
        // equal the pure-magnetic prefactor -i m w / (2 pi hbar sin w t).
        let w = 1.3;
        let t = 0.9;
        let mut prefactors = Vec::new();
        for &vd in &[0.0, 0.5, 2.0] {
            let cfg = if vd == 0.0 {
                FieldConfig::new(0.0, w, 1.0, 1.0).unwrap()
            } else {
                FieldConfig::from_drift(vd, w, 1.0, 1.0).unwrap()
            };
            let k = crossed_return_propagator(t, &cfg).unwrap();
            let s = classical_action(t, &cfg).unwrap();
            let a = k * Complex64::new(0.0, -s).exp();
            prefactors.push(a);
        }
        let expect =
            Complex64::new(0.0, -1.0) * w / (2.0 * std::f64::consts::PI * (w * t).sin());
        for a in &prefactors {
            assert!(
                (a - expect).norm() <= 1e-12 * expect.norm(),
                "{a} vs {expect}"
            );
        }
    }

    #[test]
    fn action_vanishes_without_drift_and_at_cot_zero() {
        let cfg = FieldConfig::new(0.0, 1.0, 1.0, 1.0).unwrap();
        for &t in &[0.3, 1.1, 2.9] {
            assert_eq!(classical_action(t, &cfg).unwrap(), 0.0);
        }
        // omega_L t = pi/2 -> S = -(m/2) v_D^2 t
        let cfg = FieldConfig::from_drift(0.7, 2.0, 1.0, 1.0).unwrap();
        let t = std::f64::consts::FRAC_PI_2 / 2.0;
        assert_relative_eq!(
            classical_action(t, &cfg).unwrap(),
            -0.5 * 0.7 * 0.7 * t,
            max_relative = 1e-12
        );
    }

    #[test]
    fn singular_time_rejected() {
        let cfg = FieldConfig::from_drift(1.0, 1.0, 1.0, 1.0).unwrap();
        let t = std::f64::consts::PI; // omega_L t = pi
        assert!(matches!(
            crossed_return_propagator(t, &cfg),
            Err(CoreError::Singular { .. })
        ));
        assert!(matches!(
            classical_action(2.0 * std::f64::consts::PI, &cfg),
            Err(CoreError::Singular { .. })
        ));
    }

    #[test]
    fn bad_inputs_rejected() {
        assert!(free_propagator(&[0.0], &[1.0], -1.0, 1, 1.0, 1.0).is_err());
        assert!(free_propagator(&[0.0], &[1.0, 2.0], 1.0, 1, 1.0, 1.0).is_err());
        assert!(FieldConfig::new(-1.0, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn drift_velocity_consistency() {
        let cfg = FieldConfig::new(3.0, 0.75, 2.0, 1.0).unwrap();
        assert_relative_eq!(cfg.drift_v, 3.0 / (2.0 * 2.0 * 0.75), max_relative = 1e-15);
        let round = FieldConfig::from_drift(cfg.drift_v, cfg.larmor, cfg.mass, cfg.hbar).unwrap();
        assert_relative_eq!(round.force_f, cfg.force_f, max_relative = 1e-15);
    }
}
