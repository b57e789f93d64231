//! Named auxiliary curves and the registry of claims made about them.
//!
//! Each curve is transcribed on its own rather than assembled from other
//! curves, so that an error in one transcription shows up as a failed
//! identity or claim instead of silently propagating. Where a literal
//! formula would cancel catastrophically (small `a·r`), a series branch is
//! used.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::radii::{phi_m, RadiusEquation};
use crate::specfun::{ln_1m, log1p_over_x, neg_log1m_over_x, phi1, Radius};
use crate::sturm::{f_poly, quintic, RationalPoly};

/// Coordinates a curve takes, in the order expected by [`eval_aux`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Arity {
    R,
    AR,
    RM,
    ARM,
}

impl Arity {
    pub fn has_a(self) -> bool {
        matches!(self, Arity::AR | Arity::ARM)
    }

    pub fn has_m(self) -> bool {
        matches!(self, Arity::RM | Arity::ARM)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Nonneg,
    Nonpos,
    /// Increasing in `r` for 1D curves, in `a` for 2D curves.
    Increasing,
    /// Decreasing in `r` for 1D curves, in `a` for 2D curves.
    Decreasing,
}

/// End point of a claim domain in `r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Fixed(f64),
    /// The certified root of a radius equation.
    Root(RadiusEquation),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClaimDomain {
    pub lo: Bound,
    pub hi: Bound,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl ClaimDomain {
    pub const UNIT: ClaimDomain = ClaimDomain {
        lo: Bound::Fixed(0.0),
        hi: Bound::Fixed(1.0),
        lo_closed: false,
        hi_closed: false,
    };

    fn below(eq: RadiusEquation) -> Self {
        ClaimDomain {
            hi: Bound::Root(eq),
            hi_closed: true,
            ..Self::UNIT
        }
    }

    fn above(eq: RadiusEquation) -> Self {
        ClaimDomain {
            lo: Bound::Root(eq),
            ..Self::UNIT
        }
    }
}

/// One registry entry: a curve (at a fixed `m` where relevant), its claim
/// and the domain in `r` on which the claim is made. Curves with an `a`
/// argument are claimed on all of `a ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuxCurve {
    pub curve: &'static str,
    pub m: Option<u32>,
    pub arity: Arity,
    pub claim: Claim,
    pub domain: ClaimDomain,
    pub statement: &'static str,
    /// Exact form for polynomial curves, cross-checked by Sturm counts.
    #[serde(skip)]
    pub poly: Option<RationalPoly>,
}

impl AuxCurve {
    pub fn id(&self) -> String {
        match self.m {
            Some(m) => format!("{}[m={m}]", self.curve),
            None => self.curve.to_string(),
        }
    }
}

/// `-x - ln(1-x)`.
fn ex(x: f64) -> f64 {
    x * phi1(Radius::new(x).expect("x in [0, 1)"))
}

/// `r²/(1-r) + r + 2 + (2/r) ln(1-r)`, transcribed literally.
fn tail_literal(r: f64) -> f64 {
    r * r / (1.0 - r) + r + 2.0 + 2.0 / r * ln_1m(r)
}

/// `ln(1+ar)/(a²r) - 1/(a(1+ar))`; equals `r Σ_{k≥2} (-1)^k (k-1)/k (ar)^{k-2}`,
/// which is summed when `ar` is small.
fn a1(a: f64, r: f64) -> f64 {
    let y = a * r;
    if y < 0.1 {
        let mut sum = 0.0;
        let mut power = 1.0;
        for k in 2..60 {
            let k = k as f64;
            let term = (k - 1.0) / k * power;
            sum += if (k as u32).is_multiple_of(2) {
                term
            } else {
                -term
            };
            power *= y;
            if power < 1e-18 {
                break;
            }
        }
        r * sum
    } else {
        y.ln_1p() / (a * a * r) - 1.0 / (a * (1.0 + y))
    }
}

fn b1(a: f64, r: f64) -> f64 {
    r * (1.0 - a * r) / (2.0 * (1.0 + a * r))
}

fn a2(a: f64, r: f64) -> f64 {
    ex(r) * (2.0 + a + a * r) / (r * (a + 1.0) * (1.0 + a * r).powi(2))
}

fn a3(a: f64, r: f64) -> f64 {
    -ex(r) / (r * (a + 1.0).powi(2)) * (neg_log1m_over_x(r) + a * log1p_over_x(a * r))
}

/// `φ(a, r)`, or `Φ_m(a, r)` with `s = r^m` in place of `r` outside the tail.
fn phi_ar(a: f64, s: f64, r: f64) -> f64 {
    ex(s) / (s * (a + 1.0))
        * (neg_log1m_over_x(s) + a * log1p_over_x(a * s) + a * (a + 1.0) / (1.0 + a * s))
        + (1.0 + a) * tail_literal(r)
        - log1p_over_x(a * s)
}

fn poly(c: &[f64], r: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &k| acc * r + k)
}

fn g4_core(s: f64) -> f64 {
    (1.0 - s * s) * s / (3.0 + s * s) * ((3.0 - s * s) / 2.0 + 2.0 / (1.0 + s))
}

fn curve_r(name: &str, r: f64) -> Option<f64> {
    let l = ln_1m(r);
    let v = match name {
        "tail_from2" => tail_literal(r),
        "log1p_lower" => r.ln_1p() / r - 1.0 + r / 2.0,
        "log1m_lower" => -l - r - r * r / 2.0,
        "majorant_gap" => -l / r - (3.0 - r * r) / 2.0,
        "pick_ratio_gap" => (-r - l) / (r * (1.0 - r * r)) - 0.5,
        "b2" => {
            poly(&[0.0, 0.0, 1.0, 9.0, 0.0, -3.0, 1.0], r)
                - poly(&[0.0, 1.0, -4.0, 1.0, 2.0], r) * l
                - poly(&[2.0, 2.0, -2.0, -2.0], r) * l * l
        }
        "b3" => poly(&[0.0, 0.0, 1.0, 9.0, 0.0, -3.0, 1.0], r),
        "b4" => poly(&[0.0, 1.0, -4.0, 1.0, 2.0], r) * l + poly(&[2.0, 2.0, -2.0, -2.0], r) * l * l,
        "b2_prime" => {
            poly(&[0.0, 3.0, 24.0, -2.0, -15.0, 6.0], r)
                + poly(&[3.0, 16.0, 1.0, -8.0], r) * l
                + poly(&[-2.0, 4.0, 6.0], r) * l * l
        }
        "g1" => 1.5 * r + l + r / (2.0 * (1.0 - r)),
        "g1_prime_num" => poly(&[2.0, -4.0, 3.0], r),
        "g2" => 4.5 * r + l - r / (2.0 * (1.0 + r)) + r / (1.0 - r) - r * r / (1.0 + r).powi(2),
        "g2_prime_num" => poly(&[8.0, 8.0, -3.0, -17.0, 11.0, 9.0], r),
        "g3" => {
            poly(&[0.0, 4.0, 5.0, -8.0, 2.0, 10.0, 3.0], r)
                / (2.0 * (1.0 - r).powi(2) * (1.0 + r).powi(2))
                + 2.0 * l
        }
        "g3_prime_num" => poly(&[0.0, 3.0, -2.0, 13.0, 19.0, 7.0, -5.0, -3.0], r),
        "g4" => g4_core(r) - l,
        "g4_displayed" => g4_core(r) - r.ln_1p(),
        "f_poly" => poly(&[39.0, -45.0, -7.0, 43.0, 13.0, -11.0, 3.0, -3.0], r),
        "phi_chain_lower_bound" => {
            (3.0 + r * r) / (4.0 * r) * (g4_core(r) - r.ln_1p()) + 2.0 * tail_literal(r)
        }
        "phi" => phi_m(r, 1).ok()?,
        _ => return None,
    };
    Some(v)
}

fn curve_ar(name: &str, a: f64, r: f64) -> Option<f64> {
    let v = match name {
        "phi_ar" => phi_ar(a, r, r),
        "psi" => (1.0 - a) * phi_ar(a, r, r),
        "a1" => a1(a, r),
        "b1" => b1(a, r),
        "a1_minus_b1" => a1(a, r) - b1(a, r),
        "a2" => a2(a, r),
        "a3" => a3(a, r),
        "dphi_da" => a1(a, r) + a2(a, r) + a3(a, r) + tail_literal(r),
        _ => return None,
    };
    Some(v)
}

fn b2m(r: f64, m: f64, s: f64) -> f64 {
    let p = |e: f64| r.powf(e);
    let l = ln_1m(r);
    let ls = ln_1m(s);
    let b3 = p(2.0 * m) + p(1.0 + 2.0 * m) + 8.0 * p(3.0 * m) - 4.0 * p(1.0 + 3.0 * m)
        + 4.0 * p(4.0 * m)
        - 2.0 * p(1.0 + 4.0 * m)
        - p(5.0 * m)
        + p(1.0 + 5.0 * m);
    let b4 = 4.0 * p(2.0 * m - 1.0) + 8.0 * p(3.0 * m - 1.0) + 4.0 * p(4.0 * m - 1.0)
        - 4.0 * p(2.0 * m)
        - 8.0 * p(3.0 * m)
        - 4.0 * p(4.0 * m);
    let b5 = -5.0 * p(m) + 5.0 * p(1.0 + m) - 5.0 * p(2.0 * m) + 5.0 * p(1.0 + 2.0 * m)
        - 2.0 * p(3.0 * m)
        + 2.0 * p(1.0 + 3.0 * m);
    let b6 =
        -2.0 + 2.0 * r - 4.0 * p(m) + 4.0 * p(1.0 + m) - 2.0 * p(2.0 * m) + 2.0 * p(1.0 + 2.0 * m);
    b3 + b4 * l + b5 * ls + b6 * ls * ls
}

fn g3m(r: f64, m: f64, s: f64) -> f64 {
    let r3 = r.powi(3);
    let q = m - 2.0 * m * r + m * r * r;
    s.powi(5) * q
        + s.powi(4) * (-q - 4.0 * r3)
        + s.powi(3) * (q - 4.0 * r3)
        + s * s * (9.0 * q + 4.0 * r3)
        + s * (4.0 * q + 4.0 * r3)
}

fn g5m(r: f64, m: f64, s: f64) -> f64 {
    let m2 = m * m;
    let (r2, r3, r4) = (r * r, r.powi(3), r.powi(4));
    let c = 6.0 * r3 + 2.0 * m * r3 - 2.0 * r4 - 2.0 * m * r4;
    let cube = m2 - 3.0 * m2 * r + 3.0 * m2 * r2 - m2 * r3;
    s.powi(7) * (-cube)
        + s.powi(6) * c
        + s.powi(5) * (5.0 * cube + c)
        + s.powi(4) * (6.0 * cube - 2.0 * c)
        + s.powi(3) * (cube - 2.0 * c)
        + s * s * (3.0 * cube + c)
        + s * c
}

fn curve_rm(name: &str, r: f64, m: u32) -> Option<f64> {
    let mf = m as f64;
    let s = r.powi(m as i32);
    let ls = ln_1m(s);
    let v = match name {
        "b2m" => b2m(r, mf, s),
        "g1m" => 1.5 * mf * s + mf * s / (2.0 * (1.0 - s)) + mf * ls,
        "g2m" => {
            mf * s / 2.0 + mf * s / (1.0 - s)
                - mf * s / (2.0 * (1.0 + s))
                - mf * s * s / (1.0 + s).powi(2)
                + mf * ls
        }
        "g3m" => g3m(r, mf, s),
        "g4m" => {
            g3m(r, mf, s) / (2.0 * (1.0 - r).powi(2) * (1.0 - s) * (1.0 + s).powi(2))
                + 2.0 * mf * ls
        }
        "g5m" => g5m(r, mf, s),
        "g6m" => g4_core(s) - ls,
        "phim_chain_lower_bound" => {
            (3.0 + s * s) / (4.0 * s) * (g4_core(s) - s.ln_1p()) + 2.0 * tail_literal(r)
        }
        "phim" => phi_m(r, m).ok()?,
        _ => return None,
    };
    Some(v)
}

fn curve_arm(name: &str, a: f64, r: f64, m: u32) -> Option<f64> {
    let s = r.powi(m as i32);
    let v = match name {
        "phim_ar" => phi_ar(a, s, r),
        "psim" => (1.0 - a) * phi_ar(a, s, r),
        "a1m_gap" => a1(a, s) - s * (1.0 - s) / (2.0 * (1.0 + s)),
        "a2m_gap" => a2(a, s) - (3.0 + s) * ex(s) / (2.0 * s * (1.0 + s).powi(2)),
        "a3m_gap" => a3(a, s) - ex(s) * ln_1m(s) / (s * s),
        "dphim_da" => a1(a, s) + a2(a, s) + a3(a, s) + tail_literal(r),
        _ => return None,
    };
    Some(v)
}

/// Every evaluable curve with its arity and whether `r = 0` is admissible.
pub const CURVES: &[(&str, Arity, bool)] = &[
    ("tail_from2", Arity::R, false),
    ("log1p_lower", Arity::R, false),
    ("log1m_lower", Arity::R, true),
    ("majorant_gap", Arity::R, false),
    ("pick_ratio_gap", Arity::R, false),
    ("b2", Arity::R, true),
    ("b3", Arity::R, true),
    ("b4", Arity::R, true),
    ("b2_prime", Arity::R, true),
    ("g1", Arity::R, true),
    ("g1_prime_num", Arity::R, true),
    ("g2", Arity::R, true),
    ("g2_prime_num", Arity::R, true),
    ("g3", Arity::R, true),
    ("g3_prime_num", Arity::R, true),
    ("g4", Arity::R, true),
    ("g4_displayed", Arity::R, true),
    ("f_poly", Arity::R, true),
    ("phi_chain_lower_bound", Arity::R, false),
    ("phi", Arity::R, false),
    ("phi_ar", Arity::AR, false),
    ("psi", Arity::AR, false),
    ("a1", Arity::AR, false),
    ("b1", Arity::AR, true),
    ("a1_minus_b1", Arity::AR, false),
    ("a2", Arity::AR, false),
    ("a3", Arity::AR, false),
    ("dphi_da", Arity::AR, false),
    ("b2m", Arity::RM, false),
    ("g1m", Arity::RM, true),
    ("g2m", Arity::RM, true),
    ("g3m", Arity::RM, true),
    ("g4m", Arity::RM, true),
    ("g5m", Arity::RM, true),
    ("g6m", Arity::RM, true),
    ("phim_chain_lower_bound", Arity::RM, false),
    ("phim", Arity::RM, false),
    ("phim_ar", Arity::ARM, false),
    ("psim", Arity::ARM, false),
    ("a1m_gap", Arity::ARM, false),
    ("a2m_gap", Arity::ARM, false),
    ("a3m_gap", Arity::ARM, false),
    ("dphim_da", Arity::ARM, false),
];

pub fn curve_arity(name: &str) -> Result<Arity> {
    CURVES
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|&(_, arity, _)| arity)
        .ok_or_else(|| Error::UnknownCurve(name.to_string()))
}

fn check_m(m: f64) -> Result<u32> {
    if m.fract() == 0.0 && (1.0..=64.0).contains(&m) {
        Ok(m as u32)
    } else {
        Err(Error::Domain {
            name: "m",
            value: m,
            domain: "integers 1..=64",
        })
    }
}

/// Evaluate a curve at `point`, laid out as `[r]`, `[a, r]`, `[r, m]` or
/// `[a, r, m]` according to its [`Arity`].
pub fn eval_aux(name: &str, point: &[f64]) -> Result<f64> {
    let &(_, arity, zero_ok) = CURVES
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::UnknownCurve(name.to_string()))?;
    let expected = 1 + usize::from(arity.has_a()) + usize::from(arity.has_m());
    if point.len() != expected {
        return Err(Error::InvalidParameter {
            name: "point",
            value: point.len() as i64,
            reason: "wrong number of coordinates for this curve",
        });
    }
    let (a, rest) = if arity.has_a() {
        (Some(point[0]), &point[1..])
    } else {
        (None, point)
    };
    let r = rest[0];
    let r_ok = r.is_finite() && r < 1.0 && (r > 0.0 || (zero_ok && r == 0.0));
    if !r_ok {
        return Err(Error::Domain {
            name: "r",
            value: r,
            domain: if zero_ok { "[0, 1)" } else { "(0, 1)" },
        });
    }
    if let Some(a) = a {
        if !(a.is_finite() && (0.0..=1.0).contains(&a)) {
            return Err(Error::Domain {
                name: "a",
                value: a,
                domain: "[0, 1]",
            });
        }
    }
    let value = match arity {
        Arity::R => curve_r(name, r),
        Arity::AR => curve_ar(name, a.unwrap_or_default(), r),
        Arity::RM => curve_rm(name, r, check_m(rest[1])?),
        Arity::ARM => curve_arm(name, a.unwrap_or_default(), r, check_m(rest[1])?),
    };
    value.ok_or_else(|| Error::UnknownCurve(name.to_string()))
}

fn entry(
    curve: &'static str,
    claim: Claim,
    domain: ClaimDomain,
    statement: &'static str,
) -> AuxCurve {
    AuxCurve {
        curve,
        m: None,
        arity: curve_arity(curve).expect("registered curve"),
        claim,
        domain,
        statement,
        poly: None,
    }
}

/// Orders of the `ω(z) = z^m` family covered by the registry.
pub const M_RANGE: std::ops::RangeInclusive<u32> = 1..=6;

/// All claims checked by the suite.
pub fn registry() -> Vec<AuxCurve> {
    use Claim::*;
    let unit = ClaimDomain::UNIT;
    let pick = RadiusEquation::PickBoundR;
    let sharp = RadiusEquation::Theorem1Phi;
    let with_poly = |mut c: AuxCurve, p: RationalPoly| {
        c.poly = Some(p);
        c
    };
    let mut out = vec![
        entry(
            "tail_from2",
            Nonneg,
            unit,
            "r²/(1-r) - 2φ₂(r) = r²/(1-r) + r + 2 + (2/r)ln(1-r) ≥ 0",
        ),
        entry("log1p_lower", Nonneg, unit, "ln(1+r)/r ≥ 1 - r/2"),
        entry("log1m_lower", Nonneg, unit, "-ln(1-r) ≥ r + r²/2"),
        entry(
            "majorant_gap",
            Nonneg,
            ClaimDomain::above(pick),
            "(1/r)ln(1/(1-r)) > (3-r²)/2 beyond the Pick bound R",
        ),
        entry(
            "pick_ratio_gap",
            Nonpos,
            ClaimDomain::below(pick),
            "(-r-ln(1-r))/(r(1-r²)) ≤ 1/2 up to R",
        ),
        entry("phi_ar", Increasing, unit, "φ(a, r) is increasing in a"),
        entry(
            "psi",
            Nonpos,
            ClaimDomain::below(sharp),
            "ψ(a, r) = (1-a)φ(a, r) ≤ 0 for r ≤ r₁",
        ),
        entry("a1_minus_b1", Nonneg, unit, "A₁(a, r) ≥ B₁(a, r)"),
        entry("b1", Decreasing, unit, "B₁(a, r) is decreasing in a"),
        entry("a2", Decreasing, unit, "A₂(a, r) is decreasing in a"),
        entry("a3", Increasing, unit, "A₃(a, r) is increasing in a"),
        entry(
            "dphi_da",
            Nonneg,
            unit,
            "∂φ/∂a = A₁ + A₂ + A₃ + Σ_{k≥2}φ_k ≥ 0",
        ),
        entry("b2", Nonneg, unit, "B₂(r) ≥ B₂(0) = 0"),
        entry("b2_prime", Nonneg, unit, "B₂'(r) ≥ 0"),
        entry("g1", Nonneg, unit, "g₁(r) ≥ g₁(0) = 0"),
        with_poly(
            entry("g1_prime_num", Nonneg, unit, "2 - 4r + 3r² ≥ 0"),
            RationalPoly::from_i64(&[2, -4, 3]),
        ),
        entry("g2", Nonneg, unit, "g₂(r) ≥ g₂(0) = 0"),
        with_poly(
            entry(
                "g2_prime_num",
                Nonneg,
                unit,
                "8 + 8r - 3r² - 17r³ + 11r⁴ + 9r⁵ has no positive root",
            ),
            quintic(),
        ),
        entry("g3", Nonneg, unit, "g₃(r) ≥ g₃(0) = 0"),
        with_poly(
            entry(
                "g3_prime_num",
                Nonneg,
                unit,
                "3r - 2r² + 13r³ + 19r⁴ + 7r⁵ - 5r⁶ - 3r⁷ ≥ 0",
            ),
            RationalPoly::from_i64(&[0, 3, -2, 13, 19, 7, -5, -3]),
        ),
        entry(
            "g4",
            Nonneg,
            unit,
            "g₄(r) ≥ g₄(0) = 0 (the reading with -ln(1-r))",
        ),
        with_poly(
            entry("f_poly", Nonneg, unit, "F(r) > 0 on [0, 1]"),
            f_poly(),
        ),
        entry(
            "phi_chain_lower_bound",
            Nonneg,
            ClaimDomain::above(pick),
            "lower bound for φ(r) beyond R is nonnegative",
        ),
        entry("phi", Increasing, unit, "φ(r) is increasing"),
    ];
    for m in M_RANGE {
        let with_m = |mut c: AuxCurve| {
            c.m = Some(m);
            c
        };
        let rm = RadiusEquation::Theorem2Rm { m };
        let sharp_m = RadiusEquation::Theorem2PhiM { m };
        out.extend(
            [
                entry(
                    "a1m_gap",
                    Nonneg,
                    unit,
                    "A_{1,m}(a, r) ≥ r^m(1-r^m)/(2(1+r^m))",
                ),
                entry("a2m_gap", Nonneg, unit, "A_{2,m}(a, r) ≥ A_{2,m}(1, r)"),
                entry("a3m_gap", Nonneg, unit, "A_{3,m}(a, r) ≥ A_{3,m}(0, r)"),
                entry("dphim_da", Nonneg, unit, "∂Φ_m/∂a ≥ 0"),
                entry("phim_ar", Increasing, unit, "Φ_m(a, r) is increasing in a"),
                entry(
                    "psim",
                    Nonpos,
                    ClaimDomain::below(sharp_m),
                    "Ψ_m(a, r) ≤ 0 for r ≤ R_{m,1}",
                ),
                entry("b2m", Nonneg, unit, "B_{2,m}(r) has no root in (0, 1)"),
                entry("g1m", Nonneg, unit, "g_{1,m}(r) ≥ 0"),
                entry("g2m", Nonneg, unit, "g_{2,m}(r) ≥ 0"),
                entry("g4m", Nonneg, unit, "g_{4,m}(r) ≥ g_{4,m}(0) = 0"),
                entry("g5m", Nonneg, unit, "g_{5,m}(r) ≥ 0"),
                entry("g6m", Nonneg, unit, "g_{6,m}(r) ≥ g_{6,m}(0) = 0"),
                entry(
                    "phim_chain_lower_bound",
                    Nonneg,
                    ClaimDomain::above(rm),
                    "lower bound for Φ_m(r) beyond R_m is nonnegative",
                ),
                entry("phim", Increasing, unit, "Φ_m(r) is increasing"),
            ]
            .into_iter()
            .map(with_m),
        );
    }
    out
}
