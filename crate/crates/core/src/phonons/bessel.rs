//! Modified Bessel functions of the second kind, integer orders 0 to 2.
//!
//! K₀ and K₁ come from Temme's series for x < 2 and from Steed's continued
//! fraction (CF2) for x ≥ 2; K₂ follows from the upward recurrence
//! K₂ = K₀ + (2/x)·K₁, which is stable for K.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const EPS: f64 = 1e-17;
const MAX_ITER: usize = 10_000;
const SERIES_CUTOFF: f64 = 2.0;

fn check_argument(x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("x", format!("Bessel K needs x > 0, got {x}")))
    }
}

/// Returns (K₀(x), K₁(x)) for x > 0.
pub fn bessel_k0_k1(x: f64) -> Result<(f64, f64)> {
    check_argument(x)?;
    Ok(if x < SERIES_CUTOFF {
        temme_series(x)
    } else {
        steed_cf2(x)
    })
}

fn temme_series(x: f64) -> (f64, f64) {
    // order μ = 0: Γ-function combinations reduce to γ₁ = −γ_E, γ₂ = 1
    let half = 0.5 * x;
    let mut ff = -(EULER_GAMMA + half.ln());
    let mut p = 0.5;
    let mut q = 0.5;
    let mut c = 1.0;
    let d = half * half;
    let mut sum = ff;
    let mut sum1 = p;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi);
        c *= d / fi;
        p /= fi;
        q /= fi;
        let del = c * ff;
        sum += del;
        sum1 += c * (p - fi * ff);
        if del.abs() < sum.abs() * EPS {
            break;
        }
    }
    (sum, sum1 * 2.0 / x)
}

fn steed_cf2(x: f64) -> (f64, f64) {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h *= a1;
    let k0 = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

pub fn bessel_k0(x: f64) -> Result<f64> {
    bessel_k0_k1(x).map(|(k0, _)| k0)
}

pub fn bessel_k1(x: f64) -> Result<f64> {
    bessel_k0_k1(x).map(|(_, k1)| k1)
}

/// K₂(x) for x > 0.
pub fn bessel_k2(x: f64) -> Result<f64> {
    let (k0, k1) = bessel_k0_k1(x)?;
    Ok(k0 + 2.0 / x * k1)
}
