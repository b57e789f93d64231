//! Finite coefficient sequences `a_0, …, a_M` of power series on the disk.

use std::io::Read;
use std::path::Path;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::MoebiusWitness;

/// Slack for the coefficient screen `|a_n| ≤ B - |a_0|²/B`.
const SCREEN_SLACK: f64 = 1e-12;

/// The polynomial `Σ_{n≤M} a_n z^n` together with a claimed sup-norm bound.
///
/// A sequence claiming bound `B` is *certified* when it passes the necessary
/// condition `|a_n| ≤ (B² - |a_0|²)/B` for all `n ≥ 1` (and `|a_0| ≤ B`).
/// Sequences failing the screen are still evaluated, but results derived
/// from them are flagged and inequality checks skip them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoeffSeq {
    coeffs: Vec<Complex64>,
    claimed_bound: f64,
}

impl CoeffSeq {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        Self::with_bound(coeffs, 1.0)
    }

    pub fn with_bound(coeffs: Vec<Complex64>, claimed_bound: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySequence);
        }
        if !(claimed_bound.is_finite() && claimed_bound > 0.0) {
            return Err(Error::Domain {
                name: "claimed_bound",
                value: claimed_bound,
                domain: "(0, ∞)",
            });
        }
        if let Some(bad) = coeffs
            .iter()
            .find(|c| !(c.re.is_finite() && c.im.is_finite()))
        {
            return Err(Error::Domain {
                name: "coefficient",
                value: bad.norm(),
                domain: "finite complex numbers",
            });
        }
        Ok(CoeffSeq {
            coeffs,
            claimed_bound,
        })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// The first `len` coefficients of the extremal function `f_a`.
    pub fn moebius(a: MoebiusWitness, len: usize) -> Self {
        CoeffSeq {
            coeffs: (0..len.max(1))
                .map(|k| Complex64::new(a.coefficient(k), 0.0))
                .collect(),
            claimed_bound: 1.0,
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn claimed_bound(&self) -> f64 {
        self.claimed_bound
    }

    /// Indices `n ≥ 1` violating the coefficient screen.
    pub fn screen_violations(&self) -> Vec<usize> {
        let b = self.claimed_bound;
        let a0 = self.coeffs[0].norm();
        if a0 > b + SCREEN_SLACK {
            return vec![0];
        }
        let cap = (b * b - a0 * a0) / b;
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| c.norm() > cap + SCREEN_SLACK)
            .map(|(n, _)| n)
            .collect()
    }

    pub fn is_certified(&self) -> bool {
        self.screen_violations().is_empty()
    }

    /// `Σ |a_n|`, a sup-norm bound valid for any polynomial.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    /// Coefficients `b_n = (n+1) a_{n+1}` of `f'`, with the `ℓ¹` norm as bound.
    pub fn derivative(&self) -> CoeffSeq {
        let coeffs: Vec<Complex64> = if self.coeffs.len() <= 1 {
            vec![Complex64::new(0.0, 0.0)]
        } else {
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * n as f64)
                .collect()
        };
        let l1: f64 = coeffs.iter().map(|c| c.norm()).sum();
        CoeffSeq {
            coeffs,
            claimed_bound: l1.max(f64::MIN_POSITIVE),
        }
    }

    /// Horner evaluation of the polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Read a sequence from CSV, one coefficient per line as `re,im`.
    ///
    /// A header line `re,im` is accepted and skipped.
    pub fn from_csv_reader<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(reader);
        let mut coeffs = Vec::new();
        for (line, record) in rdr.records().enumerate() {
            let record = record?;
            if record.len() != 2 {
                return Err(Error::Parse(format!(
                    "line {}: expected 2 columns `re,im`, found {}",
                    line + 1,
                    record.len()
                )));
            }
            if line == 0 && &record[0] == "re" && &record[1] == "im" {
                continue;
            }
            let parse = |s: &str| {
                s.parse::<f64>()
                    .map_err(|e| Error::Parse(format!("line {}: `{s}`: {e}", line + 1)))
            };
            coeffs.push(Complex64::new(parse(&record[0])?, parse(&record[1])?));
        }
        CoeffSeq::new(coeffs)
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_csv_reader(file)
    }

    pub fn write_csv<W: std::io::Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["re", "im"])?;
        for c in &self.coeffs {
            w.write_record([c.re.to_string(), c.im.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_rejected() {
        assert_eq!(CoeffSeq::new(vec![]), Err(Error::EmptySequence));
    }

    #[test]
    fn screen_flags_violations() {
        let ok = CoeffSeq::from_real(&[0.5, 0.75, -0.75]).unwrap();
        assert!(ok.is_certified());
        let bad = CoeffSeq::from_real(&[0.5, 0.8, 0.1]).unwrap();
        assert_eq!(bad.screen_violations(), vec![1]);
        let big0 = CoeffSeq::from_real(&[1.5]).unwrap();
        assert!(!big0.is_certified());
        let scaled = CoeffSeq::with_bound(
            vec![Complex64::new(1.0, 0.0), Complex64::new(1.5, 0.0)],
            2.0,
        )
        .unwrap();
        assert!(scaled.is_certified());
    }

    #[test]
    fn moebius_family_is_certified() {
        for &a in &[0.0, 0.3, 0.9, 1.0] {
            let f = CoeffSeq::moebius(MoebiusWitness::new(a).unwrap(), 40);
            assert!(f.is_certified(), "a={a}");
        }
    }

    #[test]
    fn derivative_coefficients() {
        let f = CoeffSeq::from_real(&[1.0, 2.0, 3.0]).unwrap();
        let d = f.derivative();
        assert_eq!(
            d.coeffs(),
            &[Complex64::new(2.0, 0.0), Complex64::new(6.0, 0.0)]
        );
        assert_eq!(d.claimed_bound(), 8.0);
        let c = CoeffSeq::from_real(&[1.0]).unwrap().derivative();
        assert_eq!(c.coeffs(), &[Complex64::new(0.0, 0.0)]);
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let text = "re,im\n0.5,0\n0.25,-0.125\n";
        let f = CoeffSeq::from_csv_reader(text.as_bytes()).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.coeffs()[1], Complex64::new(0.25, -0.125));
        let mut out = Vec::new();
        f.write_csv(&mut out).unwrap();
        let back = CoeffSeq::from_csv_reader(out.as_slice()).unwrap();
        assert_eq!(back, f);

        assert!(matches!(
            CoeffSeq::from_csv_reader("1,2,3\n".as_bytes()),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            CoeffSeq::from_csv_reader("1,x\n".as_bytes()),
            Err(Error::Parse(_))
        ));
        assert_eq!(
            CoeffSeq::from_csv_reader("re,im\n".as_bytes()),
            Err(Error::EmptySequence)
        );
    }
}
