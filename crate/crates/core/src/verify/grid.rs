//! Grid evidence for registry claims.
//!
//! Values are computed in parallel and reduced sequentially in grid order,
//! so reports are identical from run to run. Monotonicity is checked on
//! consecutive differences; the reported step is part of the [`GridSpec`].

use std::collections::HashMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::cesaro::{rhs_majorant, theorem2_lhs};
use crate::error::{check_order, Error, Result};
use crate::radii::{solve_default, RadiusEquation};
use crate::specfun::MoebiusWitness;
use crate::sturm::count_roots;

use super::registry::{eval_aux, AuxCurve, Bound, Claim};
use super::{GridReport, GridSpec};

/// Values down to this are accepted as nonnegative (with a warning below 0).
pub const NONNEG_TOL: f64 = 1e-10;
/// Points per axis for 1D claims.
pub const LINE_POINTS: usize = 2000;
/// Points per axis for 2D claims.
pub const PLANE_POINTS: usize = 200;

/// Resolves [`Bound::Root`] end points, solving each equation once.
#[derive(Default)]
pub struct RootCache(HashMap<RadiusEquation, f64>);

impl RootCache {
    pub fn resolve(&mut self, bound: Bound) -> Result<f64> {
        match bound {
            Bound::Fixed(x) => Ok(x),
            Bound::Root(eq) => {
                if let Some(&x) = self.0.get(&eq) {
                    return Ok(x);
                }
                let x = solve_default(eq)?.root;
                self.0.insert(eq, x);
                Ok(x)
            }
        }
    }
}

/// `n` points of `[lo, hi]`, equally spaced, including the closed ends only.
pub fn line_points(lo: f64, hi: f64, n: usize, lo_closed: bool, hi_closed: bool) -> Vec<f64> {
    let (offset, denom) = match (lo_closed, hi_closed) {
        (true, true) => (0, n.saturating_sub(1).max(1)),
        (true, false) => (0, n),
        (false, true) => (1, n),
        (false, false) => (1, n + 1),
    };
    (0..n)
        .map(|i| lo + (hi - lo) * (i + offset) as f64 / denom as f64)
        .collect()
}

fn claim_tol(claim: Claim, scale: f64) -> f64 {
    match claim {
        Claim::Nonneg | Claim::Nonpos => NONNEG_TOL,
        Claim::Increasing | Claim::Decreasing => NONNEG_TOL * scale.abs().max(1.0),
    }
}

/// Reduce a sequence of (value, point) in order, keeping the first worst.
/// For sign claims the value is the curve value; for monotonicity claims it
/// is the signed step `v_{i+1} - v_i`.
struct Worst {
    claim: Claim,
    value: f64,
    point: Vec<f64>,
    pass: bool,
    near_miss: bool,
}

impl Worst {
    fn new(claim: Claim) -> Self {
        let value = match claim {
            Claim::Nonneg | Claim::Increasing => f64::INFINITY,
            Claim::Nonpos | Claim::Decreasing => f64::NEG_INFINITY,
        };
        Worst {
            claim,
            value,
            point: vec![],
            pass: true,
            near_miss: false,
        }
    }

    fn push(&mut self, v: f64, scale: f64, point: &[f64]) {
        let tol = claim_tol(self.claim, scale);
        let (violates, warns, worse) = match self.claim {
            Claim::Nonneg | Claim::Increasing => (v.is_nan() || v < -tol, v < 0.0, v < self.value),
            Claim::Nonpos | Claim::Decreasing => (v.is_nan() || v > tol, v > 0.0, v > self.value),
        };
        if violates {
            self.pass = false;
        } else if warns {
            self.near_miss = true;
        }
        if worse || v.is_nan() && !self.value.is_nan() {
            self.value = v;
            self.point = point.to_vec();
        }
    }
}

fn coords(has_a: bool, a: f64, r: f64, m: Option<u32>) -> Vec<f64> {
    let mut p = Vec::with_capacity(3);
    if has_a {
        p.push(a);
    }
    p.push(r);
    if let Some(m) = m {
        p.push(m as f64);
    }
    p
}

/// Check one registry entry on its domain.
pub fn check_claim(curve: &AuxCurve, roots: &mut RootCache) -> Result<GridReport> {
    let lo = roots.resolve(curve.domain.lo)?;
    let hi = roots.resolve(curve.domain.hi)?;
    let has_a = curve.arity.has_a();
    let mut worst = Worst::new(curve.claim);
    let grid;
    let samples;
    if has_a {
        let rs = line_points(
            lo,
            hi,
            PLANE_POINTS,
            curve.domain.lo_closed,
            curve.domain.hi_closed,
        );
        let a_s = line_points(0.0, 1.0, PLANE_POINTS, true, true);
        let values: Vec<Vec<f64>> = rs
            .par_iter()
            .map(|&r| {
                a_s.iter()
                    .map(|&a| {
                        eval_aux(curve.curve, &coords(true, a, r, curve.m)).unwrap_or(f64::NAN)
                    })
                    .collect()
            })
            .collect();
        for (r, column) in rs.iter().zip(&values) {
            match curve.claim {
                Claim::Nonneg | Claim::Nonpos => {
                    for (a, v) in a_s.iter().zip(column) {
                        worst.push(*v, *v, &[*a, *r]);
                    }
                }
                Claim::Increasing | Claim::Decreasing => {
                    for (i, w) in column.windows(2).enumerate() {
                        worst.push(w[1] - w[0], w[0], &[a_s[i], *r]);
                    }
                }
            }
        }
        samples = rs.len() * a_s.len();
        grid = GridSpec::Plane {
            a_lo: 0.0,
            a_hi: 1.0,
            a_steps: PLANE_POINTS,
            r_lo: lo,
            r_hi: hi,
            r_steps: PLANE_POINTS,
            r_hi_closed: curve.domain.hi_closed,
            m: curve.m,
        };
    } else {
        let rs = line_points(
            lo,
            hi,
            LINE_POINTS,
            curve.domain.lo_closed,
            curve.domain.hi_closed,
        );
        let values: Vec<f64> = rs
            .par_iter()
            .map(|&r| eval_aux(curve.curve, &coords(false, 0.0, r, curve.m)).unwrap_or(f64::NAN))
            .collect();
        match curve.claim {
            Claim::Nonneg | Claim::Nonpos => {
                for (r, v) in rs.iter().zip(&values) {
                    worst.push(*v, *v, &[*r]);
                }
            }
            Claim::Increasing | Claim::Decreasing => {
                for (i, w) in values.windows(2).enumerate() {
                    worst.push(w[1] - w[0], w[0], &[rs[i]]);
                }
            }
        }
        samples = rs.len();
        grid = GridSpec::Line {
            lo,
            hi,
            steps: LINE_POINTS,
            lo_closed: curve.domain.lo_closed,
            hi_closed: curve.domain.hi_closed,
            m: curve.m,
        };
    }
    let pass = worst.pass && !worst.value.is_nan();
    Ok(GridReport {
        id: curve.id(),
        grid,
        worst_value: worst.value,
        worst_point: worst.point,
        pass,
        samples,
        warning: (pass && worst.near_miss)
            .then(|| format!("values within {NONNEG_TOL:e} of violating the claim")),
    })
}

/// Check every entry of `curves`.
pub fn check_all(curves: &[AuxCurve]) -> Result<Vec<GridReport>> {
    let mut roots = RootCache::default();
    curves.iter().map(|c| check_claim(c, &mut roots)).collect()
}

/// Slack allowed in `LHS ≤ RHS` on the extremal family.
pub const INEQUALITY_SLACK: f64 = 1e-12;

/// `RHS - LHS` for `f_a`, `ω(z) = z^m` on `a ∈ [0, 1]` (closed) times
/// `r ∈ (0, r_hi]`; the claim is that it stays above `-INEQUALITY_SLACK`.
pub fn inequality_grid(m: u32, r_hi: f64, grid: (usize, usize)) -> Result<GridReport> {
    let m = check_order("m", m)?;
    let (a_steps, r_steps) = grid;
    if a_steps < 2 || r_steps < 1 {
        return Err(Error::InvalidParameter {
            name: "grid",
            value: a_steps.min(r_steps) as i64,
            reason: "need at least 2 values of a and 1 of r",
        });
    }
    let rs = line_points(0.0, r_hi, r_steps, false, true);
    let a_s = line_points(0.0, 1.0, a_steps, true, true);
    let columns: Vec<Vec<f64>> = rs
        .par_iter()
        .map(|&r| -> Result<Vec<f64>> {
            let rhs = rhs_majorant(r, m)?;
            a_s.iter()
                .map(|&a| Ok(rhs - theorem2_lhs(MoebiusWitness::new(a)?, m, r)?))
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut worst = f64::INFINITY;
    let mut point = vec![];
    for (r, column) in rs.iter().zip(&columns) {
        for (a, v) in a_s.iter().zip(column) {
            if *v < worst {
                worst = *v;
                point = vec![*a, *r];
            }
        }
    }
    Ok(GridReport {
        id: format!("inequality[m={m}]"),
        grid: GridSpec::Plane {
            a_lo: 0.0,
            a_hi: 1.0,
            a_steps,
            r_lo: 0.0,
            r_hi,
            r_steps,
            r_hi_closed: true,
            m: Some(m),
        },
        worst_value: worst,
        worst_point: point,
        pass: worst >= -INEQUALITY_SLACK,
        samples: rs.len() * a_s.len(),
        warning: None,
    })
}

/// Sturm count of a polynomial registry entry on `(0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SturmCrossCheck {
    pub id: String,
    pub roots_in_unit_interval: usize,
    pub pass: bool,
}

/// Every polynomial the registry claims one-signed on `(0, 1)` must have no
/// root in `(0, 1]`.
pub fn sturm_cross_check(curves: &[AuxCurve]) -> Result<Vec<SturmCrossCheck>> {
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::from_integer(1.into());
    curves
        .iter()
        .filter_map(|c| c.poly.as_ref().map(|p| (c, p)))
        .filter(|(c, _)| matches!(c.claim, Claim::Nonneg | Claim::Nonpos))
        .map(|(c, p)| {
            let n = count_roots(p, &zero, &one)?;
            Ok(SturmCrossCheck {
                id: c.id(),
                roots_in_unit_interval: n,
                pass: n == 0,
            })
        })
        .collect()
}
