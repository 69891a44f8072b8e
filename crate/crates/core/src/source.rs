//! Quantum-source current functionals: the bilinear total current, the
//! point-source LDOS link, a finite-dimensional resolvent oracle recovering
//! the golden rule, and the field-free / field-modified threshold laws.

use crate::error::{CoreError, Result};
use crate::green;
use crate::linalg::{self, CMatrix};
use crate::propagator::FieldConfig;
use crate::quad;
use crate::specialfns::airy;
use nalgebra::{Complex, DMatrix};
use num_complex::Complex64;

/// Radial s-wave source profile sigma_00(r), sampled on an increasing grid.
/// The grid must extend far enough that the profile has decayed below
/// 1e-12 of its peak at the last sample.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    pub r: Vec<f64>,
    pub sigma: Vec<f64>,
}

impl RadialProfile {
    pub fn new(r: Vec<f64>, sigma: Vec<f64>) -> Result<Self> {
        if r.len() != sigma.len() || r.len() < 8 {
            return Err(CoreError::Domain {
                op: "RadialProfile::new",
                msg: "need matching r/sigma arrays with at least 8 samples".into(),
            });
        }
        if !r.windows(2).all(|w| w[1] > w[0]) || r[0] < 0.0 {
            return Err(CoreError::Domain {
                op: "RadialProfile::new",
                msg: "radial grid must be non-negative and strictly increasing".into(),
            });
        }
        let peak = sigma.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let tail = sigma.last().unwrap().abs();
        if peak == 0.0 || tail > 1e-12 * peak {
            return Err(CoreError::Domain {
                op: "RadialProfile::new",
                msg: format!(
                    "profile must decay below 1e-12 of its peak at the grid end \
                     (tail/peak = {:e})",
                    tail / peak
                ),
            });
        }
        Ok(Self { r, sigma })
    }

    /// Gaussian profile e^{-r^2/(2 a^2)} sampled densely out to 12 a.
    pub fn gaussian(a: f64, n: usize) -> Result<Self> {
        let r: Vec<f64> = (0..n).map(|i| 12.0 * a * i as f64 / (n - 1) as f64).collect();
        let sigma = r.iter().map(|&x| (-x * x / (2.0 * a * a)).exp()).collect();
        Self::new(r, sigma)
    }

    /// Trapezoidal integral of f(r) * sigma(r) over the grid.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        let mut acc = 0.0;
        let mut prev = f(self.r[0]) * self.sigma[0];
        for i in 1..self.r.len() {
            let cur = f(self.r[i]) * self.sigma[i];
            acc += 0.5 * (prev + cur) * (self.r[i] - self.r[i - 1]);
            prev = cur;
        }
        acc
    }
}

/// Source descriptions accepted by the bilinear current.
#[derive(Debug, Clone)]
pub enum SourceSpec {
    /// sigma(r) = C delta(r - position).
    Point {
        position: [f64; 3],
        strength: Complex64,
    },
    /// sigma(r) = strength * N0 exp(-|r - center|^2 / (2 a^2)),
    /// N0 = a^{-3/2} pi^{-3/4}.
    Gaussian {
        center: [f64; 3],
        strength: f64,
        width_a: f64,
    },
    /// s-wave multipole sigma(r) = sigma_00(r) / sqrt(4 pi).
    RadialMultipole { profile: RadialProfile },
}

/// Green functions the bilinear current knows how to integrate against.
#[derive(Debug, Clone, Copy)]
pub enum BilinearGreen<'a> {
    Free { mass: f64, hbar: f64 },
    LinearField(&'a FieldConfig),
}

/// Total current J(E) = -(2/hbar) Im <sigma| G |sigma>. Only Im G enters
/// (the real-part double integral is a real symmetric form and drops out),
/// and Im G is bounded at coincidence, so no excluded ball is needed.
pub fn total_current_bilinear(
    src: &SourceSpec,
    green: BilinearGreen,
    energy: f64,
) -> Result<f64> {
    match (src, green) {
        (SourceSpec::Point { strength, .. }, BilinearGreen::Free { mass, hbar }) => {
            let k = if energy > 0.0 {
                (2.0 * mass * energy).sqrt() / hbar
            } else {
                return Ok(0.0); // no open channel below threshold
            };
            let im_g = -mass * k / (2.0 * std::f64::consts::PI * hbar * hbar);
            total_current_point(*strength, im_g, hbar)
        }
        (SourceSpec::Point { strength, .. }, BilinearGreen::LinearField(cfg)) => {
            let im_g = green::green_linear_field_im_coincidence(energy, cfg)?;
            total_current_point(*strength, im_g, cfg.hbar)
        }
        (SourceSpec::RadialMultipole { profile }, BilinearGreen::Free { mass, hbar }) => {
            // l = 0 reduction: J = (4 m k / hbar^3) [Int r^2 j0(kr) sigma dr]^2
            if energy <= 0.0 {
                return Ok(0.0);
            }
            let k = (2.0 * mass * energy).sqrt() / hbar;
            let integral = profile.integrate(|r| {
                let kr = k * r;
                let j0 = if kr.abs() < 1e-8 {
                    1.0 - kr * kr / 6.0
                } else {
                    kr.sin() / kr
                };
                r * r * j0
            });
            Ok(4.0 * mass * k / (hbar * hbar * hbar) * integral * integral)
        }
        (
            SourceSpec::Gaussian {
                strength, width_a, ..
            },
            BilinearGreen::LinearField(cfg),
        ) => gaussian_field_bilinear(*strength, *width_a, cfg, energy),
        _ => Err(CoreError::Domain {
            op: "source::total_current_bilinear",
            msg: "unsupported source/Green pairing".into(),
        }),
    }
}

/// Gaussian source in a uniform field, reduced to a 3D quadrature:
/// lateral center-of-mass integrates out analytically, leaving
/// (z, z', lateral offset s).
fn gaussian_field_bilinear(strength: f64, a: f64, cfg: &FieldConfig, energy: f64) -> Result<f64> {
    let n0 = a.powf(-1.5) * std::f64::consts::PI.powf(-0.75);
    let amp2 = (strength * n0) * (strength * n0);
    let zlim = 6.0 * a;
    let slim = 8.0 * a;
    let tol = 1e-6;
    let inner = |s: f64, z: f64| -> f64 {
        quad::adaptive(
            |zp: f64| {
                let g = green::green_linear_field_pair(&[s, 0.0, z], &[0.0, 0.0, zp], energy, cfg)
                    .unwrap_or(Complex64::new(0.0, 0.0));
                (-(zp * zp) / (2.0 * a * a)).exp() * g.im
            },
            -zlim,
            zlim,
            tol * 1e-2,
            tol,
            4000,
        )
        .map(|r| r.value)
        .unwrap_or(0.0)
    };
    let mid = |s: f64| -> f64 {
        quad::adaptive(
            |z: f64| (-(z * z) / (2.0 * a * a)).exp() * inner(s, z),
            -zlim,
            zlim,
            tol * 1e-2,
            tol,
            4000,
        )
        .map(|r| r.value)
        .unwrap_or(0.0)
    };
    let outer = quad::adaptive(
        |s: f64| s * (-(s * s) / (4.0 * a * a)).exp() * mid(s),
        0.0,
        slim,
        tol * 1e-2,
        tol,
        4000,
    )?;
    let lateral_com = std::f64::consts::PI * a * a; // Int d2R e^{-R^2/a^2}
    let ring = 2.0 * std::f64::consts::PI;
    let im_bilinear = amp2 * lateral_com * ring * outer.value;
    Ok(-2.0 / cfg.hbar * im_bilinear)
}

/// Point-source current from Im G at coincidence:
/// J = -(2/hbar) |C|^2 Im G(R, R; E) = (2 pi / hbar) |C|^2 n(R; E).
pub fn total_current_point(c: Complex64, im_g_coincidence: f64, hbar: f64) -> Result<f64> {
    if im_g_coincidence > 0.0 {
        return Err(CoreError::Contract {
            op: "source::total_current_point",
            msg: format!(
                "retarded Green function requires Im G <= 0, got {im_g_coincidence:e}"
            ),
        });
    }
    Ok(-2.0 / hbar * c.norm_sqr() * im_g_coincidence)
}

/// Resolvent route of the discrete golden-rule oracle:
/// J = -(2/hbar) Im <sigma| (E + i eta - H)^{-1} |sigma> for a finite
/// Hermitian H.
pub fn discrete_resolvent_current(
    h: &CMatrix,
    sigma: &[Complex64],
    energy: f64,
    eta: f64,
    hbar: f64,
) -> Result<f64> {
    check_hermitian(h)?;
    if !(eta > 0.0) {
        return Err(CoreError::Domain {
            op: "source::discrete_resolvent_current",
            msg: format!("eta must be > 0, got {eta}"),
        });
    }
    let n = h.n;
    let mut m = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = -h[(i, j)];
        }
        m[(i, i)] += Complex64::new(energy, eta);
    }
    let x = linalg::solve(&m, sigma, 1e14)?;
    let amp: Complex64 = sigma.iter().zip(&x).map(|(s, xi)| s.conj() * xi).sum();
    Ok(-2.0 / hbar * amp.im)
}

/// Eigen-decomposition route of the same oracle:
/// J = (2/hbar) sum_f |<psi_f|sigma>|^2 eta / ((E - E_f)^2 + eta^2),
/// i.e. the golden rule with Lorentzian-broadened delta functions.
pub fn discrete_eigen_current(
    h: &CMatrix,
    sigma: &[Complex64],
    energy: f64,
    eta: f64,
    hbar: f64,
) -> Result<f64> {
    check_hermitian(h)?;
    let n = h.n;
    let m = DMatrix::from_fn(n, n, |i, j| Complex::new(h[(i, j)].re, h[(i, j)].im));
    let eig = m.symmetric_eigen();
    let mut j = 0.0;
    for f in 0..n {
        let mut overlap = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let v = eig.eigenvectors[(i, f)];
            overlap += Complex64::new(v.re, v.im).conj() * sigma[i];
        }
        let de = energy - eig.eigenvalues[f];
        j += overlap.norm_sqr() * eta / (de * de + eta * eta);
    }
    Ok(2.0 / hbar * j)
}

fn check_hermitian(h: &CMatrix) -> Result<()> {
    for i in 0..h.n {
        for j in i..h.n {
            if (h[(i, j)] - h[(j, i)].conj()).norm() > 1e-10 {
                return Err(CoreError::Contract {
                    op: "source::discrete_current",
                    msg: format!("matrix not Hermitian at ({i}, {j})"),
                });
            }
        }
    }
    Ok(())
}

/// Field-free s-wave threshold law (shape only, overall constant 1):
/// J(E) = k [Int (r/k) sin(kr) sigma_00(r) dr]^2, k = sqrt(2 m E)/hbar.
pub fn wigner_current(profile: &RadialProfile, energy: f64, mass: f64, hbar: f64) -> Result<f64> {
    if !(energy > 0.0) {
        return Err(CoreError::Domain {
            op: "source::wigner_current",
            msg: format!("threshold law needs E > 0, got {energy}"),
        });
    }
    let k = (2.0 * mass * energy).sqrt() / hbar;
    let integral = profile.integrate(|r| r * (k * r).sin());
    Ok(integral * integral / k)
}

/// Field-modified threshold law (shape only, overall constant 1):
/// J(E) = Ai'(-2 beta E)^2 + 2 beta E Ai(-2 beta E)^2, valid for all real E
/// including the sub-threshold tunneling regime E < 0.
pub fn field_wigner_current(energy: f64, beta: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(CoreError::Domain {
            op: "source::field_wigner_current",
            msg: format!("beta must be > 0, got {beta}"),
        });
    }
    let p = airy(-2.0 * beta * energy)?;
    Ok(p.aip * p.aip + 2.0 * beta * energy * p.ai * p.ai)
}
