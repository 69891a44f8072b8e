//! Sudden-shutter transient: the exact wavefunction after a monochromatic
//! beam blocked at x = 0 is released at t = 0, and the diffraction-in-time
//! density pattern it produces.

use crate::error::{CoreError, Result};
use crate::specialfns::{erfc_complex, fresnel};
use num_complex::Complex64;

/// Beam parameters of the shutter problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShutterState {
    /// Beam wavenumber k > 0.
    pub k: f64,
    pub mass: f64,
    pub hbar: f64,
}

impl ShutterState {
    pub fn new(k: f64, mass: f64, hbar: f64) -> Result<Self> {
        if !(k > 0.0) || !(mass > 0.0) || !(hbar > 0.0) {
            return Err(CoreError::Domain {
                op: "ShutterState::new",
                msg: format!("need k, mass, hbar > 0; got ({k}, {mass}, {hbar})"),
            });
        }
        Ok(Self { k, mass, hbar })
    }

    /// Dimensionless front coordinate u = (hbar k t / m - x) / sqrt(pi hbar t / m).
    pub fn front_coordinate(&self, x: f64, t: f64) -> f64 {
        let tau = self.hbar * t / self.mass;
        (self.k * tau - x) / (std::f64::consts::PI * tau).sqrt()
    }
}

/// Moshinsky function
/// M(x; k; tau) = (1/2) exp(i k x - i k^2 tau / 2) erfc[(x - k tau)/sqrt(2 i tau)]
/// with the branch i^{1/2} = e^{i pi/4}.
pub fn moshinsky_m(x: f64, k: f64, tau: f64) -> Result<Complex64> {
    if !(tau > 0.0) {
        return Err(CoreError::Domain {
            op: "shutter::moshinsky_m",
            msg: format!("tau must be > 0, got {tau}"),
        });
    }
    // sqrt(2 i tau) = sqrt(2 tau) e^{i pi/4}, so the argument picks up
    // e^{-i pi/4}.
    let scale = (2.0 * tau).sqrt();
    let w = (x - k * tau) / scale;
    let arg = Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4).scale(w);
    let phase = Complex64::new(0.0, k * x - 0.5 * k * k * tau).exp();
    Ok(phase.scale(0.5) * erfc_complex(arg)?)
}

/// Diffraction-in-time density as a function of the front coordinate u:
/// (1/2) { [1/2 + C(u)]^2 + [1/2 + S(u)]^2 }.
pub fn shutter_density(u: f64) -> f64 {
    let p = fresnel(u).expect("fresnel is total on finite input");
    0.5 * ((0.5 + p.c).powi(2) + (0.5 + p.s).powi(2))
}

/// Transient wavefunction psi(x, t) = M(x; k; hbar t / m).
pub fn shutter_wavefunction(x: f64, t: f64, st: &ShutterState) -> Result<Complex64> {
    if !(t > 0.0) {
        return Err(CoreError::Domain {
            op: "shutter::shutter_wavefunction",
            msg: format!("t must be > 0, got {t}"),
        });
    }
    moshinsky_m(x, st.k, st.hbar * t / st.mass)
}
