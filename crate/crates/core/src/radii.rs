//! Residual functions whose positive roots are the radii of the Bohr-type
//! inequalities, and bracketed bisection that returns a root certificate.
//!
//! Two unrelated constants share the letter `R` in the literature: the root
//! `0.5335…` of the Cesàro–Bohr sum equation ([`RadiusEquation::TheoremA`])
//! and the root `0.493411…` of the Schwarz–Pick bound equation
//! ([`RadiusEquation::PickBoundR`]). They are kept as separate variants.

use std::fmt;

use serde::Serialize;

use crate::error::{check_open_unit, check_order, Error, Result};
use crate::specfun::{ln_1m, log1p_over_x, neg_log1m_over_x, phi, phi1, phi_tail_from2, Radius};

/// Bisection stops once the bracket is at most this wide.
pub const BRACKET_WIDTH: f64 = 1e-12;
/// Largest residual accepted at the certified root.
pub const MAX_RESIDUAL: f64 = 1e-10;
/// Scan range and step budget of [`default_bracket`].
pub const SCAN_LO: f64 = 1e-3;
pub const SCAN_HI: f64 = 1.0 - 1e-6;
pub const SCAN_STEPS: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RadiusEquation {
    /// `2r - 3(1-r) ln(1/(1-r))`, root `0.5335…` (Cesàro–Bohr sum).
    TheoremA,
    /// `2(-r - ln(1-r)) - r(1-r²)`, root `0.493411…`.
    PickBoundR,
    /// The sharp-radius function `φ(r)`, root `r₁ ≈ 0.4321`.
    Theorem1Phi,
    /// `2(-s - ln(1-s)) - s(1-s²)` with `s = r^m`, root `R_m`.
    Theorem2Rm { m: u32 },
    /// The sharp-radius function `Φ_m(r)` for `ω(z) = z^m`, root `R_{m,1}`.
    Theorem2PhiM { m: u32 },
    /// `2r^{N+1} - (1-r)ln(1-r) - 2Nr(1-r)φ_N(r)` (Bohr–Rogosinski type).
    TheoremB { n: u32 },
}

impl RadiusEquation {
    pub fn validate(self) -> Result<Self> {
        match self {
            RadiusEquation::Theorem2Rm { m } | RadiusEquation::Theorem2PhiM { m } => {
                check_order("m", m)?;
            }
            RadiusEquation::TheoremB { n } => {
                check_order("N", n)?;
            }
            _ => {}
        }
        Ok(self)
    }
}

impl fmt::Display for RadiusEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadiusEquation::TheoremA => write!(f, "theorem-a"),
            RadiusEquation::PickBoundR => write!(f, "pick-r"),
            RadiusEquation::Theorem1Phi => write!(f, "theorem1"),
            RadiusEquation::Theorem2Rm { m } => write!(f, "theorem2-rm(m={m})"),
            RadiusEquation::Theorem2PhiM { m } => write!(f, "theorem2-phim(m={m})"),
            RadiusEquation::TheoremB { n } => write!(f, "theorem-b(N={n})"),
        }
    }
}

/// Bracket, endpoint residuals and refined root of a radius equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootCertificate {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
    pub root: f64,
    pub residual: f64,
    pub iterations: u32,
}

/// `-x - ln(1-x) = x φ_1(x)`, accurate for small `x`.
fn excess(x: f64) -> Result<f64> {
    Ok(x * phi1(Radius::new(x)?))
}

/// `Σ_{k≥2} φ_k(r)`.
fn tail(r: f64) -> Result<f64> {
    Ok(phi_tail_from2(Radius::new(r)?))
}

/// `Φ_m(r)` in the cancellation-free arrangement
/// `(φ_1(s)/2)(P(s) + L(s) + 2/(1+s)) + 2 Σ_{k≥2}φ_k(r) - L(s)`, where
/// `s = r^m`, `P(s) = -ln(1-s)/s` and `L(s) = ln(1+s)/s`.
pub fn phi_m(r: f64, m: u32) -> Result<f64> {
    let r = check_open_unit("r", r)?;
    let m = check_order("m", m)?;
    let s = r.powi(m as i32);
    let lp = log1p_over_x(s);
    let w1 = phi1(Radius::new(s)?);
    Ok(0.5 * w1 * (neg_log1m_over_x(s) + lp + 2.0 / (1.0 + s)) + 2.0 * tail(r)? - lp)
}

/// `φ(r) = Φ_1(r)`.
pub fn phi_sharp(r: f64) -> Result<f64> {
    phi_m(r, 1)
}

/// `φ(r)` in the form stated alongside the sharp radius:
/// `-ln(1+r)/r + (-r-ln(1-r))/(2r)·(-ln(1-r)/r + ln(1+r)/r + 2/(1+r))
/// + 2(r²/(1-r) + r + 2 + (2/r)ln(1-r))`, evaluated literally.
pub fn phi_statement_form(r: f64) -> Result<f64> {
    let r = check_open_unit("r", r)?;
    let l_plus = r.ln_1p();
    let l_minus = ln_1m(r);
    Ok(-l_plus / r
        + (-r - l_minus) / (2.0 * r) * (-l_minus / r + l_plus / r + 2.0 / (1.0 + r))
        + 2.0 * (r * r / (1.0 - r) + r + 2.0 + 2.0 / r * l_minus))
}

/// `φ(r)` in the fully expanded arrangement
/// `-ln(1+r)/r - ½(-ln(1-r)/r + ln(1+r)/r + 2/(1+r)) + 2(r²/(1-r) + r + 2)
/// + (ln(1-r)/r)(4 + ln(1-r)/(2r) - ln(1+r)/(2r) - 1/(1+r))`, evaluated literally.
pub fn phi_expanded_form(r: f64) -> Result<f64> {
    let r = check_open_unit("r", r)?;
    let l_plus = r.ln_1p();
    let l_minus = ln_1m(r);
    Ok(
        -l_plus / r - 0.5 * (-l_minus / r + l_plus / r + 2.0 / (1.0 + r))
            + 2.0 * (r * r / (1.0 - r) + r + 2.0)
            + l_minus / r * (4.0 + l_minus / (2.0 * r) - l_plus / (2.0 * r) - 1.0 / (1.0 + r)),
    )
}

/// Residual of `eq` at `r ∈ (0, 1)`.
pub fn residual(eq: RadiusEquation, r: f64) -> Result<f64> {
    let eq = eq.validate()?;
    let r = check_open_unit("r", r)?;
    match eq {
        RadiusEquation::TheoremA => Ok(2.0 * r + 3.0 * (1.0 - r) * ln_1m(r)),
        RadiusEquation::PickBoundR => Ok(2.0 * excess(r)? - r * (1.0 - r * r)),
        RadiusEquation::Theorem2Rm { m } => {
            let s = r.powi(m as i32);
            Ok(2.0 * excess(s)? - s * (1.0 - s * s))
        }
        RadiusEquation::Theorem1Phi => phi_m(r, 1),
        RadiusEquation::Theorem2PhiM { m } => phi_m(r, m),
        RadiusEquation::TheoremB { n } => {
            let w = phi(n, Radius::new(r)?);
            Ok(2.0 * r.powi(n as i32 + 1)
                - (1.0 - r) * ln_1m(r)
                - 2.0 * n as f64 * r * (1.0 - r) * w)
        }
    }
}

fn finite_residual(eq: RadiusEquation, r: f64) -> Result<f64> {
    let v = residual(eq, r)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { at: r })
    }
}

/// Certified root of `eq` inside `bracket` by plain bisection.
///
/// The returned `lo`, `hi` are the final bracket (width at most
/// [`BRACKET_WIDTH`]) with residuals of opposite sign at both ends.
pub fn solve(eq: RadiusEquation, bracket: (f64, f64)) -> Result<RootCertificate> {
    let (mut lo, mut hi) = bracket;
    check_open_unit("lo", lo)?;
    check_open_unit("hi", hi)?;
    if lo >= hi {
        return Err(Error::Domain {
            name: "hi - lo",
            value: hi - lo,
            domain: "(0, 1)",
        });
    }
    let mut f_lo = finite_residual(eq, lo)?;
    let mut f_hi = finite_residual(eq, hi)?;
    if f_lo == 0.0 || f_hi == 0.0 || f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }
    let mut iterations = 0;
    while hi - lo > BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = finite_residual(eq, mid)?;
        iterations += 1;
        if f_mid == 0.0 {
            let residual = f_mid;
            return Ok(RootCertificate {
                lo,
                hi,
                f_lo,
                f_hi,
                root: mid,
                residual,
                iterations,
            });
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    let root = 0.5 * (lo + hi);
    let residual = finite_residual(eq, root)?;
    if residual.abs() > MAX_RESIDUAL {
        return Err(Error::CertificateRejected(format!(
            "{eq}: residual {residual:e} at r = {root} exceeds {MAX_RESIDUAL:e}"
        )));
    }
    Ok(RootCertificate {
        lo,
        hi,
        f_lo,
        f_hi,
        root,
        residual,
        iterations,
    })
}

/// First sign change of `eq` on a geometric grid from [`SCAN_LO`] to
/// [`SCAN_HI`] with [`SCAN_STEPS`] steps.
pub fn default_bracket(eq: RadiusEquation) -> Result<(f64, f64)> {
    let eq = eq.validate()?;
    let ratio = (SCAN_HI / SCAN_LO).powf(1.0 / SCAN_STEPS as f64);
    let mut x = SCAN_LO;
    let mut fx = finite_residual(eq, x)?;
    for i in 1..=SCAN_STEPS {
        let next = if i == SCAN_STEPS {
            SCAN_HI
        } else {
            SCAN_LO * ratio.powi(i as i32)
        };
        let fn_ = finite_residual(eq, next)?;
        if fx != 0.0 && fn_ != 0.0 && fx.signum() != fn_.signum() {
            return Ok((x, next));
        }
        x = next;
        fx = fn_;
    }
    Err(Error::NoRootInDomain {
        lo: SCAN_LO,
        hi: SCAN_HI,
    })
}

/// [`default_bracket`] followed by [`solve`].
pub fn solve_default(eq: RadiusEquation) -> Result<RootCertificate> {
    solve(eq, default_bracket(eq)?)
}
