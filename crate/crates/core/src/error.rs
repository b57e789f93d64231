use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} lies outside {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },

    #[error("no sign change on [{lo}, {hi}] (f(lo) = {f_lo}, f(hi) = {f_hi})")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("residual is not finite at r = {at}")]
    NonFinite { at: f64 },

    #[error("no sign change found while scanning ({lo}, {hi})")]
    NoRootInDomain { lo: f64, hi: f64 },

    #[error("root certificate rejected: {0}")]
    CertificateRejected(String),

    #[error("quadrature did not reach tolerance {tol} (estimated error {estimate})")]
    QuadratureNoConvergence { tol: f64, estimate: f64 },

    #[error("series truncation would need more than {cap} terms")]
    TruncationCap { cap: usize },

    #[error("coefficient sequence is empty")]
    EmptySequence,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown curve `{0}`")]
    UnknownCurve(String),

    #[error("r = {r} is not beyond the sharp radius {radius}")]
    NotBeyondRadius { r: f64, radius: f64 },

    #[error("r = {r} exceeds the radius {radius} where the inequality is guaranteed")]
    NotWithinRadius { r: f64, radius: f64 },

    #[error("no violation found at r = {r} for a up to {a_limit}")]
    NoViolationFound { r: f64, a_limit: f64 },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn check_open_unit(name: &'static str, r: f64) -> Result<f64> {
    if r.is_finite() && r > 0.0 && r < 1.0 {
        Ok(r)
    } else {
        Err(Error::Domain {
            name,
            value: r,
            domain: "(0, 1)",
        })
    }
}

pub(crate) fn check_order(name: &'static str, m: u32) -> Result<u32> {
    if m >= 1 {
        Ok(m)
    } else {
        Err(Error::InvalidParameter {
            name,
            value: m as i64,
            reason: "must be at least 1",
        })
    }
}
