//! Truncated Dobinski-style series in IEEE double precision.
//!
//! The summands grow before they decay, so truncation waits until the index
//! has passed the polynomial degree of the summand and the current term has
//! dropped below `tolerance` times the running partial sum.

use crate::error::{Error, Result};

/// Bell number approximation (1/e) sum_k k^n / k! for positive n.
pub fn dobinski_bell(n: u32, tolerance: f64) -> f64 {
    assert!(n >= 1, "n must be positive");
    assert!(tolerance > 0.0, "tolerance must be positive");
    let mut sum = 0.0; // the k = 0 term vanishes for n >= 1
    let mut term = 1.0; // k = 1
    let mut k = 1u32;
    loop {
        sum += term;
        if k > n && term < tolerance * sum {
            break;
        }
        k += 1;
        term *= (f64::from(k) / f64::from(k - 1)).powi(n as i32) / f64::from(k);
    }
    sum / std::f64::consts::E
}

fn falling_f64(x: f64, s: u32) -> f64 {
    let mut acc = 1.0;
    for l in 0..s {
        acc *= x - f64::from(l);
    }
    acc
}

/// Generalized Bell value approximation
/// e^{-t} sum_k (1/k!) prod_{j=1..n} (k + (j-1)(r-s))_s t^k, truncated once
/// the index exceeds n*s and the term falls below the relative tolerance.
pub fn gen_dobinski(r: u32, s: u32, n: u32, t: f64, tolerance: f64) -> Result<f64> {
    if s < 1 || r < s {
        return Err(Error::RankOrder { r, s });
    }
    assert!(n >= 1, "n must be positive");
    assert!(t > 0.0, "t must be positive");
    assert!(tolerance > 0.0, "tolerance must be positive");
    let d = r - s;
    let threshold = n * s;
    let mut sum = 0.0;
    let mut fact = 1.0; // k!
    let mut pow_t = 1.0; // t^k
    let mut k = 0u32;
    loop {
        if k > 0 {
            fact *= f64::from(k);
            pow_t *= t;
        }
        let mut prod = 1.0;
        for j in 0..n {
            prod *= falling_f64(f64::from(k + j * d), s);
        }
        let term = prod * pow_t / fact;
        sum += term;
        if k > threshold && term < tolerance * sum {
            break;
        }
        k += 1;
    }
    Ok(sum * (-t).exp())
}
