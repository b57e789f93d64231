//! Random members of the unit ball of bounded analytic functions, and a
//! randomized check of the first inequality on them.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cesaro::{rhs_majorant, theorem1_lhs_general};
use crate::error::{check_open_unit, Error, Result};
use crate::radii::{solve_default, RadiusEquation};
use crate::series::CoeffSeq;
use crate::specfun::Radius;

use super::{GridReport, GridSpec};

/// Largest modulus of a sampled Blaschke zero.
pub const MAX_ZERO_MODULUS: f64 = 0.8;
/// Number of Taylor coefficients kept for a Blaschke product; the dropped
/// tail is below `0.8^400`.
pub const BLASCHKE_TERMS: usize = 400;

/// Taylor coefficients of `(z - w)/(1 - w̄ z) = -w + Σ_{n≥1} (1-|w|²) w̄^{n-1} z^n`.
fn factor_coeffs(w: Complex64, len: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(len);
    out.push(-w);
    let scale = 1.0 - w.norm_sqr();
    let mut power = Complex64::new(1.0, 0.0);
    for _ in 1..len {
        out.push(power * scale);
        power *= w.conj();
    }
    out
}

fn truncated_product(a: &[Complex64], b: &[Complex64], len: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); len];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// A finite Blaschke product of degree 1 to 4 with zeros uniform in
/// `|z| ≤ 0.8` and a random unimodular factor.
pub fn random_blaschke<R: Rng>(rng: &mut R) -> CoeffSeq {
    let degree = rng.gen_range(1..=4);
    let theta = rng.gen_range(0.0..2.0 * PI);
    let mut coeffs = vec![Complex64::from_polar(1.0, theta)];
    for _ in 0..degree {
        let rho = MAX_ZERO_MODULUS * rng.gen::<f64>().sqrt();
        let w = Complex64::from_polar(rho, rng.gen_range(0.0..2.0 * PI));
        coeffs = truncated_product(&coeffs, &factor_coeffs(w, BLASCHKE_TERMS), BLASCHKE_TERMS);
    }
    CoeffSeq::new(coeffs).expect("non-empty, finite")
}

/// A random polynomial of degree at most 11 with `Σ|a_n| = 1`, which
/// bounds it by 1 on the disk. The constant term is often dominant so that
/// the samples probe the regime `|a_0| → 1` where the inequality is tight.
pub fn random_l1_polynomial<R: Rng>(rng: &mut R) -> CoeffSeq {
    let len = rng.gen_range(2..=12);
    let mut coeffs: Vec<Complex64> = (0..len)
        .map(|_| Complex64::from_polar(rng.gen::<f64>(), rng.gen_range(0.0..2.0 * PI)))
        .collect();
    let boost = 1.0 + 50.0 * rng.gen::<f64>().powi(2);
    coeffs[0] *= boost;
    let norm: f64 = coeffs.iter().map(|c| c.norm()).sum();
    if norm == 0.0 {
        coeffs[0] = Complex64::new(1.0, 0.0);
    } else {
        for c in &mut coeffs {
            *c /= norm;
        }
    }
    CoeffSeq::new(coeffs).expect("non-empty, finite")
}

/// Alternating Blaschke products and `ℓ¹`-normalized polynomials.
pub fn sample_functions(seed: u64, count: usize) -> Vec<CoeffSeq> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                random_blaschke(&mut rng)
            } else {
                random_l1_polynomial(&mut rng)
            }
        })
        .collect()
}

/// Check `LHS ≤ (1/r)ln(1/(1-r))` on `count` random functions at radius `r`.
///
/// `worst_value` is the smallest margin `rhs - lhs`; `worst_point` is
/// `[sample index, r]`. A sample fails when its margin is below minus its
/// truncation error minus `1e-12`. Samples that fail the coefficient screen
/// are skipped and counted separately.
pub fn random_schwarz_suite(seed: u64, count: usize, r: f64) -> Result<GridReport> {
    let r = check_open_unit("r", r)?;
    let sharp = solve_default(RadiusEquation::Theorem1Phi)?.root;
    if r > sharp {
        return Err(Error::NotWithinRadius { r, radius: sharp });
    }
    let rad = Radius::new(r)?;
    let rhs = rhs_majorant(r, 1)?;
    let mut worst = (f64::INFINITY, f64::NAN);
    let mut pass = true;
    let mut skipped = 0;
    for (i, f) in sample_functions(seed, count).iter().enumerate() {
        let lhs = theorem1_lhs_general(f, rad)?;
        if !lhs.certified {
            skipped += 1;
            continue;
        }
        let margin = rhs - lhs.value;
        if margin < -(lhs.truncation_error + 1e-12) {
            pass = false;
        }
        if margin < worst.0 {
            worst = (margin, i as f64);
        }
    }
    Ok(GridReport {
        id: "random_schwarz".into(),
        grid: GridSpec::Random { seed, count, r },
        worst_value: worst.0,
        worst_point: if worst.1.is_nan() {
            vec![]
        } else {
            vec![worst.1, r]
        },
        pass,
        samples: count - skipped,
        warning: (skipped > 0).then(|| format!("{skipped} samples failed the coefficient screen")),
    })
}
