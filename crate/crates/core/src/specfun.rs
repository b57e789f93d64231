//! Weights `φ_k(r)` and the closed forms of the extremal Möbius family.
//!
//! Every routine here is written so that it stays accurate as `r → 0`,
//! `a → 0` and `a → 1`: logarithms go through `ln_1p`, and quotients such as
//! `ln(1+x)/x` switch to their Taylor series for small arguments.

use serde::Serialize;

use crate::error::{check_open_unit, Error, Result};

/// Below this radius `φ_k` is summed directly instead of via the log form.
pub const SERIES_SWITCH: f64 = 1e-3;

/// A radius `r` with `0 ≤ r < 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct Radius(f64);

impl Radius {
    pub fn new(r: f64) -> Result<Self> {
        if r.is_finite() && (0.0..1.0).contains(&r) {
            Ok(Radius(r))
        } else {
            Err(Error::Domain {
                name: "r",
                value: r,
                domain: "[0, 1)",
            })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `r^m`, which is again a radius.
    pub fn pow(self, m: u32) -> Radius {
        Radius(self.0.powi(m as i32))
    }
}

impl TryFrom<f64> for Radius {
    type Error = Error;

    fn try_from(r: f64) -> Result<Self> {
        Radius::new(r)
    }
}

/// Parameter `a ∈ [0, 1]` of the extremal function `f_a(z) = (a+z)/(1+az)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct MoebiusWitness(f64);

impl MoebiusWitness {
    pub fn new(a: f64) -> Result<Self> {
        if a.is_finite() && (0.0..=1.0).contains(&a) {
            Ok(MoebiusWitness(a))
        } else {
            Err(Error::Domain {
                name: "a",
                value: a,
                domain: "[0, 1]",
            })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// Taylor coefficient `a_k` of `f_a`: `a_0 = a`, `a_k = (1-a²)(-a)^{k-1}`.
    pub fn coefficient(self, k: usize) -> f64 {
        let a = self.0;
        if k == 0 {
            a
        } else {
            (1.0 - a * a) * (-a).powi((k - 1) as i32)
        }
    }

    /// `f_a(z)` for complex `z` in the disk.
    pub fn eval(self, z: num_complex::Complex64) -> num_complex::Complex64 {
        let a = self.0;
        (z + a) / (z * a + 1.0)
    }
}

/// A computed weight `φ_k(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhiValue {
    pub k: u32,
    pub r: f64,
    pub value: f64,
}

impl PhiValue {
    pub fn compute(k: u32, r: Radius) -> Self {
        PhiValue {
            k,
            r: r.get(),
            value: phi(k, r),
        }
    }
}

/// `ln(1 - x)` without cancellation for small `x`.
#[inline]
pub fn ln_1m(x: f64) -> f64 {
    (-x).ln_1p()
}

/// `-ln(1-x)/x = Σ_{i≥0} x^i/(i+1)`, equal to `φ_0(x)`; the value at 0 is 1.
pub fn neg_log1m_over_x(x: f64) -> f64 {
    if x.abs() < SERIES_SWITCH {
        // 1 + x/2 + x²/3 + x³/4 + x⁴/5, truncation below 1e-15 · x⁵
        1.0 + x * (0.5 + x * (1.0 / 3.0 + x * (0.25 + x * 0.2)))
    } else {
        -ln_1m(x) / x
    }
}

/// `ln(1+x)/x`; the value at 0 is 1.
pub fn log1p_over_x(x: f64) -> f64 {
    if x.abs() < SERIES_SWITCH {
        1.0 - x * (0.5 - x * (1.0 / 3.0 - x * (0.25 - x * 0.2)))
    } else {
        x.ln_1p() / x
    }
}

/// Direct summation `Σ_{i≥k} r^i/(i+1)` until the geometric tail bound
/// `r^n/((n+1)(1-r))` drops below a relative 1e-17.
fn phi_series(k: u32, r: f64) -> f64 {
    let mut power = r.powf(k as f64);
    if power == 0.0 {
        return 0.0;
    }
    let mut sum = 0.0;
    let mut i = k as f64;
    for _ in 0..1_000_000 {
        let term = power / (i + 1.0);
        sum += term;
        power *= r;
        i += 1.0;
        if power / ((i + 1.0) * (1.0 - r)) <= 1e-17 * sum {
            break;
        }
    }
    sum
}

/// `φ_k(r) = Σ_{i≥k} r^i/(i+1) = (1/r)∫_0^r x^k/(1-x) dx`.
///
/// Uses `(1/r)(-ln(1-r) - Σ_{j=1}^k r^j/j)` unless `r` is tiny or that
/// difference would lose more than three digits, in which case the
/// (then quickly converging) series is summed instead.
pub fn phi(k: u32, r: Radius) -> f64 {
    let r = r.get();
    if r == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if k == 0 {
        return neg_log1m_over_x(r);
    }
    let head = r.powf(k as f64 + 1.0) / (k as f64 + 1.0);
    let full = -ln_1m(r);
    if r < SERIES_SWITCH || head < 1e-3 * full {
        return phi_series(k, r);
    }
    let mut partial = 0.0;
    let mut power = 1.0;
    for j in 1..=k {
        power *= r;
        partial += power / j as f64;
    }
    (full - partial) / r
}

/// `φ_1(r) = (-r - ln(1-r))/r`.
#[inline]
pub fn phi1(r: Radius) -> f64 {
    phi(1, r)
}

/// `φ_2(r) = -ln(1-r)/r - 1 - r/2`.
#[inline]
pub fn phi2(r: Radius) -> f64 {
    phi(2, r)
}

/// `Σ_{k≥2} φ_k(r) = (1/r)∫_0^r x²/(1-x)² dx = r²/(1-r) + r + 2 + (2/r)ln(1-r)`.
pub fn phi_tail_from2(r: Radius) -> f64 {
    let r = r.get();
    if r == 0.0 {
        return 0.0;
    }
    if r < 0.25 {
        // Σ_{n≥2} (n-1) r^n/(n+1)
        let mut sum = 0.0;
        let mut power = r * r;
        let mut n = 2.0;
        loop {
            let term = (n - 1.0) * power / (n + 1.0);
            sum += term;
            if term < 1e-18 * sum {
                break;
            }
            power *= r;
            n += 1.0;
        }
        sum
    } else {
        r * r / (1.0 - r) + r + 2.0 + 2.0 / r * ln_1m(r)
    }
}

/// `Σ_{k≥2} |a_k| φ_k(r)` for `f_a`, by `a(1+a)φ_2(r) - (1+a)φ_2(ar)`.
pub fn extremal_coeff_tail(a: MoebiusWitness, r: Radius) -> f64 {
    let a = a.get();
    let ar = Radius(a * r.get());
    let v = a * (1.0 + a) * phi2(r) - (1.0 + a) * phi2(ar);
    v.max(0.0)
}

/// `|C f_a(r)| = (1/r)ln(1/(1-r)) - ((1-a)/(ar)) ln(1+ar)` for `r ∈ (0,1)`.
pub fn extremal_cesaro_abs(a: MoebiusWitness, r: f64) -> Result<f64> {
    let r = check_open_unit("r", r)?;
    let a = a.get();
    Ok(neg_log1m_over_x(r) - (1.0 - a) * log1p_over_x(a * r))
}

/// `|C f_a'(r)| = ∫_0^1 (1-a²)/((1-tr)(1+atr)²) dt`, evaluated through its
/// partial fractions `(1-a)/(1+a) · [-ln(1-r)/r + ln(1+ar)/r + a(1+a)/(1+ar)]`.
pub fn extremal_cesaro_deriv_abs(a: MoebiusWitness, r: f64) -> Result<f64> {
    let r = check_open_unit("r", r)?;
    let a = a.get();
    let bracket = neg_log1m_over_x(r) + a * log1p_over_x(a * r) + a * (1.0 + a) / (1.0 + a * r);
    Ok((1.0 - a) / (1.0 + a) * bracket)
}
