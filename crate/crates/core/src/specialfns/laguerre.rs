//! Laguerre polynomials L_k^{(0)} by the three-term recurrence
//! (j+1) L_{j+1} = (2j+1-x) L_j - j L_{j-1}.

use crate::error::{CoreError, Result};

const MAX_K: usize = 500;

pub fn laguerre(k: usize, x: f64) -> Result<f64> {
    if k > MAX_K {
        return Err(CoreError::Range {
            op: "specialfns::laguerre",
            msg: format!("k = {k} beyond cap {MAX_K}"),
        });
    }
    if !x.is_finite() {
        return Err(CoreError::Domain {
            op: "specialfns::laguerre",
            msg: format!("non-finite argument {x}"),
        });
    }
    if k == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0f64;
    let mut cur = 1.0 - x;
    for j in 1..k {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 - x) * cur - jf * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
