//! Violations of the inequalities just beyond their radii, witnessed by the
//! extremal functions `f_a` with `a` close to 1.
//!
//! The left side minus the right side equals `(1-a) Q(a, r)`, and
//! `Q(a, r) → Φ_m(r)` as `a → 1`, which is positive beyond the radius.

use serde::Serialize;

use crate::cesaro::{rhs_majorant, theorem2_lhs};
use crate::error::{check_order, Error, Result};
use crate::radii::{solve_default, RadiusEquation};
use crate::specfun::MoebiusWitness;

/// Largest `a` tried by [`sharpness_scan`].
pub const A_LIMIT: f64 = 1.0 - 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharpnessResult {
    pub m: u32,
    pub r: f64,
    /// The sharp radius `R_{m,1}` when it was computed.
    pub radius: Option<f64>,
    pub a: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub excess: f64,
}

/// `LHS - RHS` for `f_a` and `ω(z) = z^m` at radius `r`.
pub fn excess(a: f64, m: u32, r: f64) -> Result<f64> {
    Ok(theorem2_lhs(MoebiusWitness::new(a)?, m, r)? - rhs_majorant(r, m)?)
}

/// `Q(a, r) = (LHS - RHS)/(1 - a)` for `a < 1`.
pub fn q_value(a: f64, m: u32, r: f64) -> Result<f64> {
    if a.is_nan() || a >= 1.0 {
        return Err(Error::Domain {
            name: "a",
            value: a,
            domain: "[0, 1)",
        });
    }
    Ok(excess(a, m, r)? / (1.0 - a))
}

/// Try `a_j = 1 - (1 - a_start) 2^{-j}`, `j = 0, 1, …`, up to `a_limit`,
/// and return the first `a` with a positive excess.
pub fn violation_search(m: u32, r: f64, a_start: f64, a_limit: f64) -> Result<SharpnessResult> {
    let m = check_order("m", m)?;
    if !(0.0..1.0).contains(&a_start) {
        return Err(Error::Domain {
            name: "a_start",
            value: a_start,
            domain: "[0, 1)",
        });
    }
    let rhs = rhs_majorant(r, m)?;
    let mut gap = 1.0 - a_start;
    loop {
        let a = 1.0 - gap;
        if a > a_limit {
            return Err(Error::NoViolationFound { r, a_limit });
        }
        let lhs = theorem2_lhs(MoebiusWitness::new(a)?, m, r)?;
        if lhs > rhs {
            return Ok(SharpnessResult {
                m,
                r,
                radius: None,
                a,
                lhs,
                rhs,
                excess: lhs - rhs,
            });
        }
        gap *= 0.5;
    }
}

/// Find a violating `a` at a radius `r` beyond the sharp radius `R_{m,1}`.
pub fn sharpness_scan(m: u32, r: f64, a_start: f64) -> Result<SharpnessResult> {
    let m = check_order("m", m)?;
    let radius = solve_default(RadiusEquation::Theorem2PhiM { m })?.root;
    if r <= radius {
        return Err(Error::NotBeyondRadius { r, radius });
    }
    let mut found = violation_search(m, r, a_start, A_LIMIT)?;
    found.radius = Some(radius);
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radii::phi_m;

    fn sharp(m: u32) -> f64 {
        solve_default(RadiusEquation::Theorem2PhiM { m })
            .unwrap()
            .root
    }

    #[test]
    fn violation_beyond_first_radius() {
        let r1 = sharp(1);
        let found = sharpness_scan(1, r1 + 0.01, 0.9).unwrap();
        assert!(found.a > 0.9 && found.a < 1.0);
        // independent re-evaluation of both sides
        let lhs = theorem2_lhs(MoebiusWitness::new(found.a).unwrap(), 1, found.r).unwrap();
        assert!(lhs > rhs_majorant(found.r, 1).unwrap());
        assert!(found.excess > 0.0);
    }

    #[test]
    fn precondition_gate() {
        let r1 = sharp(1);
        assert!(matches!(
            sharpness_scan(1, r1 - 0.01, 0.9),
            Err(Error::NotBeyondRadius { .. })
        ));
        assert!(sharpness_scan(0, 0.5, 0.9).is_err());
        assert!(sharpness_scan(1, 0.5, 1.0).is_err());
    }

    #[test]
    fn second_order_pattern() {
        let r21 = sharp(2);
        assert!(sharpness_scan(2, r21 + 0.01, 0.9).unwrap().excess > 0.0);
        assert!(matches!(
            violation_search(2, r21 - 0.005, 0.0, 1.0 - 1e-10),
            Err(Error::NoViolationFound { .. })
        ));
    }

    #[test]
    fn no_violation_inside_first_radius() {
        let r = sharp(1) - 0.005;
        assert!(matches!(
            violation_search(1, r, 0.0, 1.0 - 1e-10),
            Err(Error::NoViolationFound { .. })
        ));
        for i in 0..=1000 {
            assert!(excess(i as f64 / 1000.0, 1, r).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn q_tends_to_sharp_function() {
        for &(m, r) in &[(1, 0.3), (1, 0.45), (2, 0.55), (3, 0.7)] {
            let target = phi_m(r, m).unwrap();
            let errs: Vec<f64> = [1e-2, 1e-3, 1e-4]
                .iter()
                .map(|&h| (q_value(1.0 - h, m, r).unwrap() - target).abs())
                .collect();
            // first-order convergence in 1 - a
            assert!(
                errs[2] < errs[1] && errs[1] < errs[0],
                "m={m} r={r} {errs:?}"
            );
            assert!(errs[2] < 1e-2);
        }
        assert!(q_value(1.0, 1, 0.4).is_err());
    }
}
