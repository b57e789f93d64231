//! Adaptive Gauss–Legendre quadrature on a finite interval.
//!
//! Each panel is integrated with a fixed `n`-point rule and compared with
//! the sum over its two halves; the panel is accepted once the two agree to
//! the panel's share of the tolerance. Works for real and complex integrands.

use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_DEPTH: u32 = 40;
const ORDER: usize = 12;

/// Values the integrator can accumulate.
pub trait QuadValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn magnitude(self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_n'(x) by the three-term recurrence
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(ORDER))
}

fn panel<T: QuadValue, F: Fn(f64) -> T>(f: &F, a: f64, b: f64) -> T {
    let (nodes, weights) = rule();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    nodes
        .iter()
        .zip(weights)
        .fold(T::zero(), |acc, (&x, &w)| acc + f(mid + half * x) * w)
        * half
}

struct Adaptive<'f, F> {
    f: &'f F,
    /// Panel tolerances are not halved below this; only the few panels
    /// around an endpoint singularity ever reach it.
    floor: f64,
    failed: Option<f64>,
}

impl<F> Adaptive<'_, F> {
    fn recurse<T: QuadValue>(&mut self, a: f64, b: f64, whole: T, tol: f64, depth: u32) -> T
    where
        F: Fn(f64) -> T,
    {
        let mid = 0.5 * (a + b);
        let left = panel(self.f, a, mid);
        let right = panel(self.f, mid, b);
        let refined = left + right;
        let err = (refined - whole).magnitude();
        if !err.is_finite() {
            self.failed = Some(f64::INFINITY);
            return refined;
        }
        if err <= tol || (b - a) < 4.0 * f64::EPSILON * mid.abs().max(1.0) {
            return refined;
        }
        if depth >= MAX_DEPTH {
            self.failed = Some(self.failed.unwrap_or(0.0).max(err));
            return refined;
        }
        let tol = (0.5 * tol).max(self.floor);
        self.recurse(a, mid, left, tol, depth + 1) + self.recurse(mid, b, right, tol, depth + 1)
    }
}

/// Integrate `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Fails with [`Error::QuadratureNoConvergence`] if the subdivision depth is
/// exhausted or the integrand produces non-finite values.
pub fn integrate<T: QuadValue, F: Fn(f64) -> T>(f: F, a: f64, b: f64, tol: f64) -> Result<T> {
    let whole = panel(&f, a, b);
    let mut state = Adaptive {
        f: &f,
        floor: tol * 1e-6,
        failed: None,
    };
    let value = state.recurse(a, b, whole, tol, 0);
    match state.failed {
        Some(estimate) => Err(Error::QuadratureNoConvergence { tol, estimate }),
        None if !value.magnitude().is_finite() => Err(Error::QuadratureNoConvergence {
            tol,
            estimate: f64::INFINITY,
        }),
        None => Ok(value),
    }
}
