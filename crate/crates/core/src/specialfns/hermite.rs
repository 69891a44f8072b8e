//! Harmonic-oscillator probability density |u_k(xi)|^2 =
//! e^{-xi^2} H_k(xi)^2 / (2^k k! sqrt(pi)).
//!
//! The exponential weight is folded into the three-term recurrence of the
//! normalized oscillator eigenfunctions, so no raw Hermite polynomial is ever
//! formed. A floating rescale counter dodges underflow far outside the
//! classical turning points, where the true value drops below f64 subnormals.

use crate::error::{CoreError, Result};

const MAX_K: usize = 500;
const LN_PI: f64 = 1.144729885849400174143427351353;

pub fn hermite_density(k: usize, xi: f64) -> Result<f64> {
    if k > MAX_K {
        return Err(CoreError::Range {
            op: "specialfns::hermite_density",
            msg: format!("k = {k} beyond stability cap {MAX_K}"),
        });
    }
    if !xi.is_finite() {
        return Err(CoreError::Domain {
            op: "specialfns::hermite_density",
            msg: format!("non-finite argument {xi}"),
        });
    }

    // u_0(xi) = pi^{-1/4} e^{-xi^2/2}; carry it as e^{log_scale} * a.
    let mut log_scale = -0.25 * LN_PI - 0.5 * xi * xi;
    let mut a = 1.0f64; // scaled u_j
    let mut b = 0.0f64; // scaled u_{j-1}
    for j in 0..k {
        let jf = j as f64;
        let next = (2.0 / (jf + 1.0)).sqrt() * xi * a - (jf / (jf + 1.0)).sqrt() * b;
        b = a;
        a = next;
        let mag = a.abs().max(b.abs());
        if mag > 1e100 {
            a *= 1e-100;
            b *= 1e-100;
            log_scale += 100.0 * std::f64::consts::LN_10;
        } else if mag != 0.0 && mag < 1e-100 {
            a *= 1e100;
            b *= 1e100;
            log_scale -= 100.0 * std::f64::consts::LN_10;
        }
    }
    if a == 0.0 {
        return Ok(0.0);
    }
    let log_value = 2.0 * (log_scale + a.abs().ln());
    if log_value < -744.0 {
        return Ok(0.0);
    }
    Ok(log_value.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ground_state_peak() {
        // |u_0(0)|^2 = 1/sqrt(pi)
        let v = hermite_density(0, 0.0).unwrap();
        assert_relative_eq!(v, 0.5641895835477563, max_relative = 1e-14);
    }

    #[test]
    fn k3_matches_explicit_polynomial() {
        // H_3(x) = 8x^3 - 12x
        let xi = 1.2f64;
        let h3 = 8.0 * xi.powi(3) - 12.0 * xi;
        let expect = (-xi * xi).exp() * h3 * h3 / (48.0 * std::f64::consts::PI.sqrt());
        let v = hermite_density(3, xi).unwrap();
        assert_relative_eq!(v, expect, max_relative = 1e-13);
    }

    #[test]
    fn normalization_to_k50() {
        for k in [0usize, 1, 2, 5, 13, 27, 50] {
            let lim = (2.0 * k as f64 + 1.0).sqrt() + 9.0;
            let integral = crate::quad::adaptive(
                |xi: f64| hermite_density(k, xi).unwrap(),
                -lim,
                lim,
                1e-12,
                1e-12,
                20_000,
            )
            .unwrap()
            .value;
            assert_relative_eq!(integral, 1.0, max_relative = 1e-8);
        }
    }

    #[test]
    fn underflow_is_clean_zero_like() {
        // far outside the turning point the density is astronomically small
        let v = hermite_density(4, 40.0).unwrap();
        assert!(v >= 0.0 && v < 1e-300);
        let v500 = hermite_density(500, 60.0).unwrap();
        assert!(v500 >= 0.0 && v500 < 1e-200);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            hermite_density(501, 0.0),
            Err(CoreError::Range { .. })
        ));
    }

    #[test]
    fn large_k_stays_normalized() {
        let k = 300usize;
        let lim = (2.0 * k as f64 + 1.0).sqrt() + 9.0;
        let integral = crate::quad::adaptive(
            |xi: f64| hermite_density(k, xi).unwrap(),
            -lim,
            lim,
            1e-11,
            1e-11,
            60_000,
        )
        .unwrap()
        .value;
        assert_relative_eq!(integral, 1.0, max_relative = 1e-7);
    }
}
