//! Special functions required by the closed-form propagator and Green
//! function formulas: Airy pairs, the complex complementary error function,
//! Fresnel integrals, harmonic-oscillator probability densities, Laguerre
//! polynomials, and the cylindrical Bessel function of order zero.
//!
//! Everything is evaluated from scratch (series, recentered Taylor steps of
//! the defining ODE, asymptotic expansions, continued fractions); no external
//! special-function dependency. Each regime is covered by an independent
//! quadrature oracle in the tests.

mod airy;
mod bessel;
mod erf;
mod fresnel;
mod hermite;
mod laguerre;

pub use airy::{airy, AiryPair, AIRY_MAX_ARG, AIRY_MIN_ARG};
pub use bessel::bessel_j0;
pub use erf::erfc_complex;
pub use fresnel::{fresnel, FresnelPair};
pub use hermite::hermite_density;
pub use laguerre::laguerre;
