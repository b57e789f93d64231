//! The Cesàro operator `C f(z) = Σ_n (Σ_{k≤n} a_k)/(n+1) z^n = ∫_0^1 f(tz)/(1-tz) dt`
//! and both sides of the Bohr-type inequalities built on it.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{check_open_unit, check_order, Error, Result};
use crate::quadrature;
use crate::series::CoeffSeq;
use crate::specfun::{
    extremal_cesaro_abs, extremal_cesaro_deriv_abs, extremal_coeff_tail, neg_log1m_over_x, phi,
    phi1, MoebiusWitness, Radius,
};

/// Target for the geometric tail bound of a truncated Cesàro series.
pub const SERIES_TOL: f64 = 1e-14;
/// Hard cap on the number of Cesàro terms.
pub const MAX_TERMS: usize = 100_000;

/// A Cesàro value together with a rigorous bound on the dropped tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CesaroValue {
    pub value: Complex64,
    pub truncation_error: f64,
    pub terms: usize,
}

/// A left-hand side evaluated on a general coefficient sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LhsValue {
    pub value: f64,
    pub truncation_error: f64,
    /// `false` when the input failed the coefficient screen.
    pub certified: bool,
}

/// `c_n = (a_0 + … + a_n)/(n+1)` for the stored coefficients.
pub fn cesaro_coeffs(f: &CoeffSeq) -> CoeffSeq {
    let mut partial = Complex64::new(0.0, 0.0);
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, &a)| {
            partial += a;
            partial / (n as f64 + 1.0)
        })
        .collect();
    CoeffSeq::with_bound(coeffs, f.claimed_bound()).expect("non-empty input")
}

/// Sum `Σ_{n≤M} c_n z^n` of the Cesàro transform of the polynomial `f`.
///
/// `M` is the smallest index (at least the degree of `f`) for which
/// `B·ρ^{M+1}/(1-ρ) ≤ tol/2`, where `ρ = r_bound` and `B` the claimed sup
/// bound; `|c_n| ≤ B` makes that the reported truncation error.
pub fn cesaro_eval_series_tol(
    f: &CoeffSeq,
    z: Complex64,
    r_bound: Radius,
    tol: f64,
) -> Result<CesaroValue> {
    let rho = r_bound.get();
    let modulus = z.norm();
    if modulus.is_nan() || modulus >= 1.0 {
        return Err(Error::Domain {
            name: "|z|",
            value: modulus,
            domain: "[0, 1)",
        });
    }
    if modulus > rho * (1.0 + 1e-15) {
        return Err(Error::Domain {
            name: "|z|",
            value: modulus,
            domain: "[0, r_bound]",
        });
    }
    let bound = f.claimed_bound();
    let degree = f.len() - 1;
    let terms = if rho == 0.0 {
        1
    } else {
        // smallest M with bound·ρ^{M+1}/(1-ρ) ≤ tol/2
        let need = ((0.5 * tol * (1.0 - rho) / bound).ln() / rho.ln()).ceil() - 1.0;
        let m = if need.is_finite() { need.max(0.0) } else { 0.0 };
        if m > MAX_TERMS as f64 {
            return Err(Error::TruncationCap { cap: MAX_TERMS });
        }
        (m as usize).max(degree) + 1
    };
    let truncation_error = if rho == 0.0 {
        0.0
    } else {
        bound * rho.powi(terms as i32) / (1.0 - rho)
    };

    let coeffs = f.coeffs();
    let mut partial = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    let mut value = Complex64::new(0.0, 0.0);
    for n in 0..terms {
        if n < coeffs.len() {
            partial += coeffs[n];
        }
        value += power * partial / (n as f64 + 1.0);
        power *= z;
    }
    Ok(CesaroValue {
        value,
        truncation_error,
        terms,
    })
}

pub fn cesaro_eval_series(f: &CoeffSeq, z: Complex64, r_bound: Radius) -> Result<CesaroValue> {
    cesaro_eval_series_tol(f, z, r_bound, SERIES_TOL)
}

/// `∫_0^1 f(tz)/(1-tz) dt`, where `f_on_segment(t)` returns `f(tz)`.
pub fn cesaro_eval_integral<F>(f_on_segment: F, z: Complex64) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    if z.norm().is_nan() || z.norm() >= 1.0 {
        return Err(Error::Domain {
            name: "|z|",
            value: z.norm(),
            domain: "[0, 1)",
        });
    }
    let one = Complex64::new(1.0, 0.0);
    quadrature::integrate(
        |t| f_on_segment(t) / (one - z * t),
        0.0,
        1.0,
        quadrature::DEFAULT_TOL,
    )
}

/// Integral form for a coefficient sequence.
pub fn cesaro_eval_integral_seq(f: &CoeffSeq, z: Complex64) -> Result<Complex64> {
    cesaro_eval_integral(|t| f.eval(z * t), z)
}

/// Bohr sum `Σ_k |a_k| φ_k(r)` over the stored coefficients.
pub fn bohr_sum(f: &CoeffSeq, r: Radius) -> f64 {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let m = a.norm();
            if m == 0.0 {
                0.0
            } else {
                m * phi(k as u32, r)
            }
        })
        .sum()
}

/// `Σ_{k≥from} |a_k| φ_k(r)`.
fn coeff_tail(f: &CoeffSeq, from: usize, r: Radius) -> f64 {
    f.coeffs()
        .iter()
        .enumerate()
        .skip(from)
        .map(|(k, a)| {
            let m = a.norm();
            if m == 0.0 {
                0.0
            } else {
                m * phi(k as u32, r)
            }
        })
        .sum()
}

/// Right-hand side `(1/r^m) ln(1/(1-r^m))`.
pub fn rhs_majorant(r: f64, m: u32) -> Result<f64> {
    let r = check_open_unit("r", r)?;
    let m = check_order("m", m)?;
    Ok(neg_log1m_over_x(r.powi(m as i32)))
}

/// `|C f_a(r)| + |C f_a'(r)| φ_1(r) + Σ_{k≥2} |a_k| φ_k(r)` for the extremal function.
pub fn theorem1_lhs(a: MoebiusWitness, r: f64) -> Result<f64> {
    theorem2_lhs(a, 1, r)
}

/// The same left side with `z` replaced by `ω(z) = z^m` in the first two
/// terms: `|C f_a(r^m)| + |C f_a'(r^m)| φ_1(r^m) + Σ_{k≥2} |a_k| φ_k(r)`.
pub fn theorem2_lhs(a: MoebiusWitness, m: u32, r: f64) -> Result<f64> {
    let r = check_open_unit("r", r)?;
    let m = check_order("m", m)?;
    let radius = Radius::new(r)?;
    let s = radius.pow(m);
    if s.get() == 0.0 {
        return Err(Error::Domain {
            name: "r^m",
            value: 0.0,
            domain: "(0, 1) (underflow)",
        });
    }
    let cf = extremal_cesaro_abs(a, s.get())?;
    let cfd = extremal_cesaro_deriv_abs(a, s.get())?;
    Ok(cf + cfd * phi1(s) + extremal_coeff_tail(a, radius))
}

/// Left side of the first inequality for an arbitrary coefficient sequence,
/// evaluated at `z = r` through truncated Cesàro series.
pub fn theorem1_lhs_general(f: &CoeffSeq, r: Radius) -> Result<LhsValue> {
    let z = Complex64::new(r.get(), 0.0);
    let cf = cesaro_eval_series(f, z, r)?;
    let cfd = cesaro_eval_series(&f.derivative(), z, r)?;
    let w1 = phi1(r);
    Ok(LhsValue {
        value: cf.value.norm() + cfd.value.norm() * w1 + coeff_tail(f, 2, r),
        truncation_error: cf.truncation_error + cfd.truncation_error * w1,
        certified: f.is_certified(),
    })
}

/// Bohr–Rogosinski-type sum `|C f(r)| + Σ_{k≥N} |a_k| φ_k(r)`.
pub fn bohr_rogosinski_lhs(f: &CoeffSeq, n: u32, r: Radius) -> Result<LhsValue> {
    let n = check_order("N", n)?;
    let cf = cesaro_eval_series(f, Complex64::new(r.get(), 0.0), r)?;
    Ok(LhsValue {
        value: cf.value.norm() + coeff_tail(f, n as usize, r),
        truncation_error: cf.truncation_error,
        certified: f.is_certified(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::random::{random_blaschke, random_l1_polynomial};
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rad(r: f64) -> Radius {
        Radius::new(r).unwrap()
    }
    fn wit(a: f64) -> MoebiusWitness {
        MoebiusWitness::new(a).unwrap()
    }
    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    // Independent prefix-sum oracle.
    fn prefix_oracle(a: &[f64]) -> Vec<f64> {
        (0..a.len())
            .map(|n| a[..=n].iter().sum::<f64>() / (n + 1) as f64)
            .collect()
    }

    #[test]
    fn cesaro_coefficients() {
        let f = CoeffSeq::from_real(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        let got: Vec<f64> = cesaro_coeffs(&f).coeffs().iter().map(|c| c.re).collect();
        assert_eq!(got, vec![1.0, 0.5, 1.0 / 3.0, 0.25]);
        let f = CoeffSeq::from_real(&[0.0, 1.0, 0.0, 0.0]).unwrap();
        let got: Vec<f64> = cesaro_coeffs(&f).coeffs().iter().map(|c| c.re).collect();
        assert_eq!(got, vec![0.0, 0.5, 1.0 / 3.0, 0.25]);

        let w = wit(0.5);
        let raw: Vec<f64> = (0..6).map(|k| w.coefficient(k)).collect();
        let f = CoeffSeq::moebius(w, 6);
        let got: Vec<f64> = cesaro_coeffs(&f).coeffs().iter().map(|c| c.re).collect();
        for (g, e) in got.iter().zip(prefix_oracle(&raw)) {
            assert_abs_diff_eq!(*g, e, epsilon = 1e-15);
        }
    }

    #[test]
    fn series_evaluation() {
        let one = CoeffSeq::from_real(&[1.0]).unwrap();
        let v = cesaro_eval_series(&one, c(0.5), rad(0.5)).unwrap();
        let oracle = -(0.5f64).ln() / 0.5;
        assert!((v.value.re - oracle).abs() <= v.truncation_error + 1e-15);
        assert!(v.truncation_error <= SERIES_TOL);

        let z1 = CoeffSeq::from_real(&[0.0, 1.0]).unwrap();
        let v = cesaro_eval_series(&z1, c(0.4), rad(0.4)).unwrap();
        assert_abs_diff_eq!(v.value.re, 0.277_064_059_414_976_7, epsilon = 1e-13);

        let f = CoeffSeq::from_real(&[0.3, -0.2, 0.1]).unwrap();
        let v = cesaro_eval_series(&f, c(0.0), rad(0.0)).unwrap();
        assert_eq!(v.value, c(0.3));
        assert_eq!(v.truncation_error, 0.0);

        assert!(cesaro_eval_series(&f, c(0.6), rad(0.5)).is_err());
        assert!(cesaro_eval_series(&f, Complex64::new(0.8, 0.8), rad(0.9)).is_err());
    }

    #[test]
    fn truncation_cap_binds() {
        let f = CoeffSeq::from_real(&[1.0]).unwrap();
        let r = cesaro_eval_series_tol(&f, c(0.9999), rad(0.9999), 1e-300);
        assert_eq!(r, Err(Error::TruncationCap { cap: MAX_TERMS }));
    }

    #[test]
    fn integral_evaluation() {
        let v = cesaro_eval_integral(|_| c(1.0), c(0.5)).unwrap();
        assert_abs_diff_eq!(v.re, 2.0 * std::f64::consts::LN_2, epsilon = 1e-12);
        let z = c(0.4);
        let v = cesaro_eval_integral(|t| z * t, z).unwrap();
        assert_abs_diff_eq!(v.re, 0.277_064_059_414_976_7, epsilon = 1e-12);
        let v = cesaro_eval_integral(|_| c(0.0), c(0.3)).unwrap();
        assert_eq!(v, c(0.0));
        assert!(cesaro_eval_integral(|_| c(1.0), c(1.0)).is_err());
    }

    #[test]
    fn bohr_sum_values() {
        let one = CoeffSeq::from_real(&[1.0]).unwrap();
        assert_abs_diff_eq!(
            bohr_sum(&one, rad(0.5)),
            1.386_294_361_119_890_6,
            epsilon = 1e-14
        );
        let z1 = CoeffSeq::from_real(&[0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(bohr_sum(&z1, rad(0.5)), phi(1, rad(0.5)), epsilon = 0.0);
        let near_one = CoeffSeq::moebius(wit(1.0 - 1e-9), 200);
        assert_abs_diff_eq!(
            bohr_sum(&near_one, rad(0.5)),
            phi(0, rad(0.5)),
            epsilon = 1e-8
        );
    }

    #[test]
    fn rhs_values() {
        assert_abs_diff_eq!(
            rhs_majorant(0.5, 1).unwrap(),
            1.386_294_361_119_890_6,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            rhs_majorant(0.5, 2).unwrap(),
            1.150_728_289_807_123_7,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(rhs_majorant(1e-12, 1).unwrap(), 1.0, epsilon = 1e-11);
        assert!(rhs_majorant(0.0, 1).is_err());
        assert!(rhs_majorant(1.0, 1).is_err());
        assert!(rhs_majorant(0.5, 0).is_err());
    }

    #[test]
    fn theorem1_lhs_values() {
        assert_abs_diff_eq!(
            theorem1_lhs(wit(1.0), 0.5).unwrap(),
            rhs_majorant(0.5, 1).unwrap(),
            epsilon = 1e-15
        );
        // mpmath: quadrature + direct tail summation
        assert_abs_diff_eq!(
            theorem1_lhs(wit(0.0), 0.4).unwrap(),
            0.630_892_611_849_459_2,
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(
            theorem1_lhs(wit(0.5), 0.5).unwrap(),
            1.316_866_428_757_617_4,
            epsilon = 1e-13
        );
        // inside the sharp radius ≈ 0.4321 the inequality holds for a near 1
        assert!(theorem1_lhs(wit(0.999), 0.42).unwrap() < rhs_majorant(0.42, 1).unwrap());
        // beyond it, the same witness violates it (mpmath: 1.32860276 > 1.32852667)
        assert_abs_diff_eq!(
            theorem1_lhs(wit(0.999), 0.45).unwrap(),
            1.328_602_760_981_173_5,
            epsilon = 1e-13
        );
        assert!(theorem1_lhs(wit(0.999), 0.45).unwrap() > rhs_majorant(0.45, 1).unwrap());
    }

    #[test]
    fn general_lhs_matches_extremal_closed_form() {
        let one = CoeffSeq::from_real(&[1.0]).unwrap();
        let g = theorem1_lhs_general(&one, rad(0.5)).unwrap();
        assert_abs_diff_eq!(
            g.value,
            theorem1_lhs(wit(1.0), 0.5).unwrap(),
            epsilon = 1e-13
        );
        let z1 = CoeffSeq::from_real(&[0.0, 1.0]).unwrap();
        let g = theorem1_lhs_general(&z1, rad(0.4)).unwrap();
        assert_abs_diff_eq!(g.value, 0.630_892_611_849_459_2, epsilon = 1e-12);
        for &(a, r) in &[(0.5, 0.3), (0.9, 0.4), (0.2, 0.2)] {
            let f = CoeffSeq::moebius(wit(a), 400);
            let g = theorem1_lhs_general(&f, rad(r)).unwrap();
            let e = theorem1_lhs(wit(a), r).unwrap();
            assert!(
                (g.value - e).abs() <= g.truncation_error + 1e-12,
                "a={a} r={r}"
            );
        }
    }

    #[test]
    fn theorem2_values() {
        assert_abs_diff_eq!(
            theorem2_lhs(wit(1.0), 2, 0.5).unwrap(),
            1.150_728_289_807_123_7,
            epsilon = 1e-15
        );
        for i in 1..20 {
            let a = wit(i as f64 / 20.0);
            let r = i as f64 / 21.0;
            assert_eq!(theorem2_lhs(a, 1, r).unwrap(), theorem1_lhs(a, r).unwrap());
        }
        // R_{2,1} ≈ 0.5318, so r = 0.5 is inside and r = 0.6 is beyond
        assert!(theorem2_lhs(wit(0.99), 2, 0.5).unwrap() <= rhs_majorant(0.5, 2).unwrap());
        assert!(theorem2_lhs(wit(0.99), 2, 0.6).unwrap() > rhs_majorant(0.6, 2).unwrap());
        assert!(theorem2_lhs(wit(0.5), 0, 0.5).is_err());
    }

    #[test]
    fn bohr_rogosinski_values() {
        let one = CoeffSeq::from_real(&[1.0]).unwrap();
        let v = bohr_rogosinski_lhs(&one, 3, rad(0.5)).unwrap();
        assert_abs_diff_eq!(v.value, 1.386_294_361_119_890_6, epsilon = 1e-13);
        let z1 = CoeffSeq::from_real(&[0.0, 1.0]).unwrap();
        let v = bohr_rogosinski_lhs(&z1, 1, rad(0.5)).unwrap();
        assert_abs_diff_eq!(v.value, 2.0 * 0.386_294_361_119_890_6, epsilon = 1e-13);
        let f = CoeffSeq::moebius(wit(0.5), 200);
        let v = bohr_rogosinski_lhs(&f, 2, rad(0.3)).unwrap();
        // mpmath: quadrature of |C f| plus the summed tail
        assert_abs_diff_eq!(v.value, 0.739_541_403_414_327_4, epsilon = 1e-12);
    }

    #[test]
    fn series_and_integral_agree_on_random_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..100 {
            let f = if i % 2 == 0 {
                random_blaschke(&mut rng)
            } else {
                random_l1_polynomial(&mut rng)
            };
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / 100.0;
            let rho = 0.9 * ((i % 10) as f64 + 1.0) / 10.0;
            let z = Complex64::from_polar(rho, theta);
            let s = cesaro_eval_series(&f, z, rad(rho)).unwrap();
            let q = cesaro_eval_integral_seq(&f, z).unwrap();
            assert!((s.value - q).norm() <= s.truncation_error + 1e-10, "i={i}");
            // pointwise bound |C f(z)| ≤ (1/r) ln(1/(1-r))
            assert!(s.value.norm() <= rhs_majorant(rho, 1).unwrap() + 1e-12);
        }
    }

    #[test]
    fn bohr_sum_below_majorant_for_extremal_family() {
        for i in 1..=9 {
            let a = wit(i as f64 / 10.0);
            let f = CoeffSeq::moebius(a, 600);
            for j in 1..=53 {
                let r = j as f64 / 100.0;
                assert!(
                    bohr_sum(&f, rad(r)) <= rhs_majorant(r, 1).unwrap() + 1e-12,
                    "a={i} r={r}"
                );
            }
        }
    }

    #[test]
    fn schwarz_pick_on_extremal_family() {
        for &a in &[0.0, 0.2, 0.7, 0.95] {
            let w = wit(a);
            for k in 0..16 {
                let r = 0.06 * k as f64;
                for j in 0..12 {
                    let z = Complex64::from_polar(r, j as f64 * std::f64::consts::FRAC_PI_6);
                    let bound = (a + r) / (1.0 + a * r);
                    assert!(w.eval(z).norm() <= bound + 1e-15);
                }
                assert_abs_diff_eq!(
                    w.eval(c(r)).norm(),
                    (a + r) / (1.0 + a * r),
                    epsilon = 1e-15
                );
            }
        }
    }
}
