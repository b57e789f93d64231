//! Sampled curve tables for plotting `B₂`, `B₃`/`B₄`, `B₂'` and `F`.

use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sturm::f_poly;

use super::registry::eval_aux;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Figure {
    B2,
    B3B4,
    B2Prime,
    F,
}

impl Figure {
    fn columns(self) -> &'static [(&'static str, &'static str)] {
        match self {
            Figure::B2 => &[("value", "b2")],
            Figure::B3B4 => &[("value_b3", "b3"), ("value_b4", "b4")],
            Figure::B2Prime => &[("value", "b2_prime")],
            Figure::F => &[("value", "f_poly")],
        }
    }

    /// Whether `r = 1` may be sampled.
    fn closed_at_one(self) -> bool {
        matches!(self, Figure::F)
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "b2" => Ok(Figure::B2),
            "b3b4" => Ok(Figure::B3B4),
            "b2prime" | "b2_prime" => Ok(Figure::B2Prime),
            "f" => Ok(Figure::F),
            _ => Err(Error::UnknownCurve(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl CurveTable {
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| v.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Sample `figure` at `r = lo + i (hi - lo)/steps`, `i = 0..=steps`.
///
/// For the `B` curves, which are only defined for `r < 1`, a sample at
/// `r = 1` is dropped, so `(0, 1)` with `steps` gives `steps` rows. The
/// polynomial `F` is sampled on the closed range.
pub fn emit_figure(figure: Figure, range: (f64, f64), steps: usize) -> Result<CurveTable> {
    let (lo, hi) = range;
    if !(lo.is_finite() && hi.is_finite() && 0.0 <= lo && lo < hi && hi <= 1.0) {
        return Err(Error::Domain {
            name: "range",
            value: if lo < 0.0 || !lo.is_finite() { lo } else { hi },
            domain: "0 ≤ lo < hi ≤ 1",
        });
    }
    if steps == 0 {
        return Err(Error::InvalidParameter {
            name: "steps",
            value: 0,
            reason: "at least one step is needed",
        });
    }
    let columns = figure.columns();
    let mut header = vec!["r".to_string()];
    header.extend(columns.iter().map(|(h, _)| h.to_string()));
    let mut rows = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        let r = if i == steps {
            hi
        } else {
            lo + (hi - lo) * i as f64 / steps as f64
        };
        if r >= 1.0 && !figure.closed_at_one() {
            continue;
        }
        let mut row = vec![r];
        for (_, curve) in columns {
            row.push(if figure == Figure::F {
                f_poly().eval_f64(r)
            } else {
                eval_aux(curve, &[r])?
            });
        }
        rows.push(row);
    }
    Ok(CurveTable { header, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_table() {
        let t = emit_figure(Figure::B2, (0.0, 1.0), 1000).unwrap();
        assert_eq!(t.header, vec!["r", "value"]);
        assert_eq!(t.rows.len(), 1000);
        assert!(t.rows.iter().all(|row| row[1] >= -1e-10));
    }

    #[test]
    fn b2_prime_row_at_half() {
        let t = emit_figure(Figure::B2Prime, (0.0, 1.0), 1000).unwrap();
        let row = t.rows.iter().find(|row| row[0] == 0.5).unwrap();
        assert!((row[1] - 0.11592).abs() < 1e-4);
    }

    #[test]
    fn f_table_closed_range() {
        let t = emit_figure(Figure::F, (0.0, 1.0), 100).unwrap();
        assert_eq!(t.rows.len(), 101);
        assert!(t.rows.iter().all(|row| row[1] > 0.0));
        assert_eq!(t.rows.last().unwrap(), &vec![1.0, 32.0]);
    }

    #[test]
    fn two_column_table_and_csv() {
        let t = emit_figure(Figure::B3B4, (0.0, 1.0), 10).unwrap();
        assert_eq!(t.header, vec!["r", "value_b3", "value_b4"]);
        assert_eq!(t.rows.len(), 10);
        let mut out = Vec::new();
        t.write_csv(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("r,value_b3,value_b4\n0,0,0\n"));
    }

    #[test]
    fn errors() {
        assert!(emit_figure(Figure::B2, (0.5, 0.2), 10).is_err());
        assert!(emit_figure(Figure::B2, (0.0, 1.5), 10).is_err());
        assert!(emit_figure(Figure::B2, (0.0, 1.0), 0).is_err());
        assert!("b5".parse::<Figure>().is_err());
        assert_eq!("B2prime".parse::<Figure>().unwrap(), Figure::B2Prime);
    }
}
