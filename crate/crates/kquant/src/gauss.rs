//! Scalar numerics for the normal distribution (CDF, quantile, PDF) plus the
//! rounding primitives shared by every quantizer.
//!
//! The CDF is evaluated through erf/erfc: a Maclaurin series on the central
//! range and a Laplace continued fraction on the tail, both iterated to f64
//! convergence. The quantile starts from Acklam's rational approximation and
//! is polished with one Newton step on the CDF, which brings it to within a
//! few ulp. Quantizer decisions must never flip due to numerics, so the
//! accuracy budget here is ~1e-15, well inside the 1e-12 the callers assume.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

const FRAC_1_SQRT_2PI: f64 = 0.3989422804014327;
const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Mean and standard deviation of a normal distribution. For activations the
/// units are MAC-domain integers; for weights they are weight units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussParams {
    mu: f64,
    sigma: f64,
}

impl GaussParams {
    pub fn new(mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() || !sigma.is_finite() {
            return Err(Error::Domain(format!(
                "gaussian parameters must be finite, got mu={mu}, sigma={sigma}"
            )));
        }
        if sigma <= 0.0 {
            return Err(Error::Domain(format!("sigma must be > 0, got {sigma}")));
        }
        Ok(GaussParams { mu, sigma })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }
}

/// Final-rounding policy applied wherever a real-valued quantizer expression
/// is materialized as an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RoundingPolicy {
    /// Round to nearest, ties away from zero: 2.5 -> 3, -2.5 -> -3.
    #[default]
    Nearest,
    Floor,
    Ceil,
}

/// CDF of N(mu, sigma^2) at `x`.
pub fn normal_cdf(x: f64, p: GaussParams) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("cdf argument must be finite, got {x}")));
    }
    let z = (x - p.mu) / p.sigma;
    Ok(std_normal_cdf(z))
}

/// Quantile (inverse CDF) of N(mu, sigma^2) at probability `q`, 0 < q < 1.
pub fn normal_quantile(q: f64, p: GaussParams) -> Result<f64> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Domain(format!(
            "quantile argument must lie in (0,1), got {q}"
        )));
    }
    Ok(p.mu + p.sigma * std_normal_quantile(q))
}

/// Density of N(mu, sigma^2) at `x`. Peaks at `1/(sigma*sqrt(2*pi))`.
pub fn normal_pdf(x: f64, p: GaussParams) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("pdf argument must be finite, got {x}")));
    }
    let z = (x - p.mu) / p.sigma;
    Ok(FRAC_1_SQRT_2PI / p.sigma * (-0.5 * z * z).exp())
}

/// Round a real to an integer under `policy`. Inputs must satisfy |x| < 2^62
/// so the result is exactly representable regardless of policy.
pub fn round_scalar(x: f64, policy: RoundingPolicy) -> Result<i64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("cannot round non-finite value {x}")));
    }
    if x.abs() >= (1i64 << 62) as f64 {
        return Err(Error::Overflow(format!(
            "|{x}| exceeds the 2^62 rounding range"
        )));
    }
    let r = match policy {
        // f64::round ties away from zero, exactly the policy we want.
        RoundingPolicy::Nearest => x.round(),
        RoundingPolicy::Floor => x.floor(),
        RoundingPolicy::Ceil => x.ceil(),
    };
    Ok(r as i64)
}

fn std_normal_cdf(z: f64) -> f64 {
    // Phi(z) = erfc(-z / sqrt(2)) / 2
    0.5 * erfc(-z / SQRT_2)
}

fn std_normal_pdf(z: f64) -> f64 {
    FRAC_1_SQRT_2PI * (-0.5 * z * z).exp()
}

/// erf by Maclaurin series; used for |x| <= 2 where the largest term is ~10
/// and cancellation stays below a few ulp.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut k = 0u32;
    loop {
        let kf = k as f64;
        term *= -x2 * (2.0 * kf + 1.0) / ((kf + 1.0) * (2.0 * kf + 3.0));
        sum += term;
        k += 1;
        if term.abs() <= sum.abs() * 1e-18 || k > 200 {
            break;
        }
    }
    sum * 2.0 / std::f64::consts::PI.sqrt()
}

/// erfc for x > 2 by the Laplace continued fraction
/// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
/// evaluated with the modified Lentz algorithm. Keeps full relative accuracy
/// in the far tail.
fn erfc_cf(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0f64;
    let mut n = 1u32;
    loop {
        let a = n as f64 / 2.0;
        d = x + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = x + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-17 || n > 300 {
            break;
        }
        n += 1;
    }
    (-x * x).exp() / std::f64::consts::PI.sqrt() / f
}

fn erfc(x: f64) -> f64 {
    if x < 0.0 {
        2.0 - erfc(-x)
    } else if x <= 2.0 {
        1.0 - erf_series(x)
    } else if x > 27.0 {
        // exp(-x^2) underflows below the smallest subnormal.
        0.0
    } else {
        erfc_cf(x)
    }
}

/// Standard normal quantile: Acklam's rational approximation (|rel err|
/// ~1.15e-9) refined by one Newton step on the CDF.
fn std_normal_quantile(q: f64) -> f64 {
    let z = acklam(q);
    let pdf = std_normal_pdf(z);
    if pdf > 0.0 {
        z - (std_normal_cdf(z) - q) / pdf
    } else {
        z
    }
}

#[allow(clippy::excessive_precision)]
fn acklam(q: f64) -> f64 {
    const A: [f64; 6] = [
        -39.6968302866538,
        220.946098424521,
        -275.928510446969,
        138.357751867269,
        -30.6647980661472,
        2.50662827745924,
    ];
    const B: [f64; 5] = [
        -54.4760987982241,
        161.585836858041,
        -155.698979859887,
        66.8013118877197,
        -13.2806815528857,
    ];
    const C: [f64; 6] = [
        -7.78489400243029e-3,
        -0.322396458041136,
        -2.40075827716184,
        -2.54973253934373,
        4.37466414146497,
        2.93816398269878,
    ];
    const D: [f64; 4] = [
        7.78469570904146e-3,
        0.32246712907004,
        2.445134137143,
        3.75440866190742,
    ];
    const Q_LOW: f64 = 0.02425;

    if q < Q_LOW {
        let r = (-2.0 * q.ln()).sqrt();
        (((((C[0] * r + C[1]) * r + C[2]) * r + C[3]) * r + C[4]) * r + C[5])
            / ((((D[0] * r + D[1]) * r + D[2]) * r + D[3]) * r + 1.0)
    } else if q <= 1.0 - Q_LOW {
        let r = q - 0.5;
        let s = r * r;
        (((((A[0] * s + A[1]) * s + A[2]) * s + A[3]) * s + A[4]) * s + A[5]) * r
            / (((((B[0] * s + B[1]) * s + B[2]) * s + B[3]) * s + B[4]) * s + 1.0)
    } else {
        let r = (-2.0 * (1.0 - q).ln()).sqrt();
        -(((((C[0] * r + C[1]) * r + C[2]) * r + C[3]) * r + C[4]) * r + C[5])
            / ((((D[0] * r + D[1]) * r + D[2]) * r + D[3]) * r + 1.0)
    }
}
