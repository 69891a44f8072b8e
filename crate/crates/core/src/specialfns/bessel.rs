//! Cylindrical Bessel function J_0, the kernel of the lateral-momentum
//! integral. Maclaurin series to |x| = 14, Hankel asymptotics beyond.

pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs(); // J_0 is even
    if x <= 14.0 {
        return series(x);
    }
    hankel(x)
}

fn series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0f64;
    let mut sum = 1.0;
    for n in 1..80usize {
        term *= -q / ((n * n) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-30) {
            break;
        }
    }
    sum
}

fn hankel(x: f64) -> f64 {
    // J0(x) = sqrt(2/pi x) [cos w * P(x) + sin w * Q(x)], w = x - pi/4,
    // P = sum (-1)^k A_{2k} x^{-2k}, Q = sum (-1)^k A_{2k+1} x^{-2k-1},
    // A_{m+1} = A_m (2m+1)^2 / (8(m+1)).
    let mut a = 1.0f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut xm = 1.0;
    let mut prev = f64::INFINITY;
    for m in 0..30usize {
        let mf = m as f64;
        a *= (2.0 * mf + 1.0) * (2.0 * mf + 1.0) / (8.0 * (mf + 1.0));
        xm /= x;
        let term = a * xm;
        if term.abs() >= prev {
            break;
        }
        prev = term.abs();
        let idx = m + 1; // coefficient index
        let sign = if (idx / 2) % 2 == 1 { -1.0 } else { 1.0 };
        if idx % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
        if term.abs() < 1e-18 {
            break;
        }
    }
    let w = x - std::f64::consts::FRAC_PI_4;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (w.cos() * p + w.sin() * q)
}
