//! Verification engine: auxiliary curves with their sign and monotonicity
//! claims, grid checks, sharpness scans, figure tables and the full suite.

use serde::Serialize;

pub mod figures;
pub mod grid;
pub mod random;
pub mod registry;
pub mod sharpness;
pub mod suite;

pub use figures::{emit_figure, CurveTable, Figure};
pub use grid::{check_all, check_claim, inequality_grid, sturm_cross_check, NONNEG_TOL};
pub use random::random_schwarz_suite;
pub use registry::{eval_aux, registry, Arity, AuxCurve, Bound, Claim, ClaimDomain};
pub use sharpness::{excess, sharpness_scan, violation_search, SharpnessResult};
pub use suite::{run_all, CriterionResult, SuiteReport};

/// The sample set behind a [`GridReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GridSpec {
    /// `steps` equal subintervals of `[lo, hi]`; closed ends are sampled.
    Line {
        lo: f64,
        hi: f64,
        steps: usize,
        lo_closed: bool,
        hi_closed: bool,
        m: Option<u32>,
    },
    /// Product grid in `(a, r)`; `a` is monotonicity direction for 2D claims.
    Plane {
        a_lo: f64,
        a_hi: f64,
        a_steps: usize,
        r_lo: f64,
        r_hi: f64,
        r_steps: usize,
        r_hi_closed: bool,
        m: Option<u32>,
    },
    /// Seeded random functions at one radius.
    Random { seed: u64, count: usize, r: f64 },
}

/// Outcome of a scan: the worst value found and where.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridReport {
    pub id: String,
    pub grid: GridSpec,
    pub worst_value: f64,
    pub worst_point: Vec<f64>,
    pub pass: bool,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}
