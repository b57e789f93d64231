//! Exact rational polynomials and Sturm-chain real root counting.
//!
//! Coefficients are stored in ascending degree. Remainder sequences are
//! computed fraction-free on primitive integer polynomials: each step takes
//! a pseudo-remainder scaled by `|lc|^{δ+1}` (a positive factor, so signs are
//! preserved) and strips the positive content of the result.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn from_ints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    /// `Π (x - root_i)`.
    pub fn from_roots(roots: &[BigRational]) -> Self {
        roots.iter().fold(Self::from_i64(&[1]), |acc, r| {
            acc.mul(&Self::new(vec![-r.clone(), BigRational::one()]))
        })
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![]);
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact quotient and remainder.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::ZeroPolynomial)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::new(vec![]), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lead;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Scale by a positive rational so that the coefficients are coprime
    /// integers. Signs are unchanged.
    fn primitive_ints(&self) -> Vec<BigInt> {
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        strip_content(ints)
    }

    /// `gcd(p, q)` up to a positive factor, as a primitive integer polynomial.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_ints();
        let mut b = other.primitive_ints();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = strip_content(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        if a.last().is_some_and(|c| c.is_negative()) {
            a.iter_mut().for_each(|c| *c = -&*c);
        }
        Self::from_ints(a)
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple, same sign pattern.
    pub fn square_free(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g)?;
        debug_assert!(r.is_zero());
        Ok(q)
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Divide by the positive gcd of the coefficients.
fn strip_content(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in &mut v {
            *c /= &content;
        }
    }
    v
}

/// `|lc(b)|^{δ+1} · a mod b` with `δ = deg a - deg b`, over the integers.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return rem;
    }
    let lead = b[db].clone();
    let lead_abs = lead.abs();
    let sign = if lead.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    for k in (0..rem.len() - db).rev() {
        // rem ← |lc|·rem − sign·rem[k+db]·x^k·b
        let top = rem[k + db].clone();
        for c in rem.iter_mut() {
            *c *= &lead_abs;
        }
        if !top.is_zero() {
            let factor = &top * &sign;
            for (j, d) in b.iter().enumerate() {
                rem[k + j] -= &factor * d;
            }
        }
    }
    rem.truncate(db);
    trim(&mut rem);
    rem
}

impl fmt::Display for RationalPoly {
    /// Human-readable form such as `39 - 45r - 7r^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "r")?,
                _ => write!(f, "r^{i}")?,
            }
        }
        Ok(())
    }
}

/// Parse an exact rational: integer, `p/q`, or a plain decimal such as `-0.125`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational number"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['+', '-']);
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !int_digits.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac.is_empty())
        {
            return Err(bad());
        }
        let digits = format!("{int_digits}{frac}");
        let numer =
            BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let v = BigRational::new(numer, denom);
        return Ok(if negative { -v } else { v });
    }
    BigInt::from_str(s)
        .map(BigRational::from_integer)
        .map_err(|_| bad())
}

/// Parse either a whitespace-separated ascending coefficient list
/// (`"39 -45 -7 43"`) or a sum of monomials in one variable
/// (`"39 - 45r - 7r^2 + 43*r^3"`).
pub fn parse_poly(s: &str) -> Result<RationalPoly> {
    if s.chars().any(|c| c.is_ascii_alphabetic()) {
        parse_monomials(s)
    } else {
        let coeffs = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        Ok(RationalPoly::new(coeffs))
    }
}

fn parse_monomials(s: &str) -> Result<RationalPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let var = compact
        .chars()
        .find(|c| c.is_ascii_alphabetic())
        .expect("caller checked for a letter");
    if compact.chars().any(|c| c.is_ascii_alphabetic() && c != var) {
        return Err(Error::Parse(format!("`{s}` mixes variables")));
    }
    // split before every sign that does not follow `^`
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = compact.as_bytes();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);

    let mut coeffs: Vec<BigRational> = Vec::new();
    for term in terms {
        let bad = || Error::Parse(format!("cannot read term `{term}`"));
        let (coef, power) = match term.find(var) {
            None => (parse_rational(term)?, 0usize),
            Some(pos) => {
                let head = term[..pos].trim_end_matches('*');
                let coef = match head {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    h => parse_rational(h)?,
                };
                let tail = &term[pos + var.len_utf8()..];
                let power = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(bad)?
                };
                (coef, power)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigRational::zero());
        }
        coeffs[power] += coef;
    }
    Ok(RationalPoly::new(coeffs))
}

impl FromStr for RationalPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

/// Sturm chain of the square-free part of `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct SturmChain {
    polys: Vec<RationalPoly>,
}

impl SturmChain {
    /// `p_0 = sqfree(p)`, `p_1 = p_0'`, `p_{k+1} = -rem(p_{k-1}, p_k)` up to a
    /// positive factor.
    pub fn new(p: &RationalPoly) -> Result<Self> {
        let p0 = p.square_free()?;
        let p1 = p0.derivative();
        let mut polys = vec![p0.clone()];
        if p1.is_zero() {
            return Ok(SturmChain { polys });
        }
        polys.push(p1.clone());
        let mut a = p0.primitive_ints();
        let mut b = p1.primitive_ints();
        loop {
            let r: Vec<BigInt> = pseudo_rem(&a, &b).into_iter().map(|c| -c).collect();
            let r = strip_content(r);
            if r.is_empty() {
                break;
            }
            polys.push(RationalPoly::from_ints(r.clone()));
            a = b;
            b = r;
        }
        Ok(SturmChain { polys })
    }

    pub fn polys(&self) -> &[RationalPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Sign variations at `x`, zeros dropped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let signs: Vec<bool> = self
            .polys
            .iter()
            .map(|p| p.eval_exact(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> Result<usize> {
        if a >= b {
            return Err(Error::Domain {
                name: "interval (a, b]",
                value: a.to_f64().unwrap_or(f64::NAN),
                domain: "a < b",
            });
        }
        Ok(self.variations(a) - self.variations(b))
    }
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn count_roots(p: &RationalPoly, a: &BigRational, b: &BigRational) -> Result<usize> {
    SturmChain::new(p)?.count(a, b)
}

/// Serializable summary of a root count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SturmReport {
    pub poly: String,
    pub interval: (String, String),
    pub chain_length: usize,
    pub count: usize,
}

pub fn sturm_report(p: &RationalPoly, a: &BigRational, b: &BigRational) -> Result<SturmReport> {
    let chain = SturmChain::new(p)?;
    Ok(SturmReport {
        poly: p.to_string(),
        interval: (a.to_string(), b.to_string()),
        chain_length: chain.len(),
        count: chain.count(a, b)?,
    })
}

/// `39 - 45r - 7r² + 43r³ + 13r⁴ - 11r⁵ + 3r⁶ - 3r⁷`, the numerator of the
/// derivative in the last monotonicity step for the sharp radius.
pub fn f_poly() -> RationalPoly {
    RationalPoly::from_i64(&[39, -45, -7, 43, 13, -11, 3, -3])
}

/// `8 + 8r - 3r² - 17r³ + 11r⁴ + 9r⁵`, the numerator of `g₂'`.
pub fn quintic() -> RationalPoly {
    RationalPoly::from_i64(&[8, 8, -3, -17, 11, 9])
}
