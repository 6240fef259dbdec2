//! The generalized Zalcman functional `Φ(f) = λ·a_n² − a_{2n−1}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// Width of the band inside which a decimal λ is treated as equal to a
/// rational threshold.
pub const LAMBDA_BAND: f64 = 1e-12;

/// The weight λ > 0, remembering the exact ratio `p/q` when it was given as one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lambda {
    value: f64,
    ratio: Option<(u64, u64)>,
}

impl Lambda {
    pub fn new(value: f64) -> Result<Self> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::NonPositiveLambda(value));
        }
        Ok(Self { value, ratio: None })
    }

    pub fn ratio(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::NonPositiveLambda(if den == 0 { f64::NAN } else { 0.0 }));
        }
        Ok(Self {
            value: num as f64 / den as f64,
            ratio: Some((num, den)),
        })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn as_ratio(&self) -> Option<(u64, u64)> {
        self.ratio
    }

    /// Compares λ with `num/den`: exactly when λ is a ratio, otherwise
    /// treating values within [`LAMBDA_BAND`] as equal.
    pub fn cmp_ratio(&self, num: u64, den: u64) -> Ordering {
        match self.ratio {
            Some((p, q)) => (p as u128 * den as u128).cmp(&(num as u128 * q as u128)),
            None => {
                let t = num as f64 / den as f64;
                if (self.value - t).abs() <= LAMBDA_BAND {
                    Ordering::Equal
                } else if self.value < t {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    /// `λ ≤ num/den`, exact for ratios and plain `≤` for decimals.
    pub fn at_most(&self, num: u64, den: u64) -> bool {
        match self.ratio {
            Some(_) => self.cmp_ratio(num, den) != Ordering::Greater,
            None => self.value <= num as f64 / den as f64,
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ratio {
            Some((p, q)) => write!(f, "{p}/{q}"),
            None => write!(f, "{}", self.value),
        }
    }
}

impl FromStr for Lambda {
    type Err = String;

    /// Accepts a decimal (`1.5`, `1e-9`) or a ratio of positive integers (`4/3`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parsed = match s.split_once('/') {
            Some((p, q)) => {
                let p: u64 = p.trim().parse().map_err(|_| format!("bad numerator in '{s}'"))?;
                let q: u64 = q.trim().parse().map_err(|_| format!("bad denominator in '{s}'"))?;
                Lambda::ratio(p, q)
            }
            None => Lambda::new(s.parse().map_err(|_| format!("'{s}' is not a number"))?),
        };
        parsed.map_err(|e| e.to_string())
    }
}

/// The pair (λ, n) of the functional `λa_n² − a_{2n−1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZalcmanParams {
    pub lambda: Lambda,
    pub n: usize,
}

impl ZalcmanParams {
    pub fn new(lambda: f64, n: usize) -> Result<Self> {
        Self::with_lambda(Lambda::new(lambda)?, n)
    }

    pub fn with_lambda(lambda: Lambda, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::IndexTooSmall(n));
        }
        Ok(Self { lambda, n })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda.value()
    }

    /// Index of the second coefficient, `2n − 1`.
    pub fn odd_index(&self) -> usize {
        2 * self.n - 1
    }

    /// `λ` compared with the Hurwitz threshold `n²/(2n−1)`.
    pub fn cmp_hurwitz_threshold(&self) -> Ordering {
        let n = self.n as u64;
        self.lambda.cmp_ratio(n * n, 2 * n - 1)
    }
}

fn check_readable(f: &PowerSeries, p: &ZalcmanParams) -> Result<()> {
    if f.truncation_order() < p.odd_index() {
        return Err(Error::TruncationTooShort {
            required: p.odd_index(),
            got: f.truncation_order(),
        });
    }
    if !f.is_normalized() {
        return Err(Error::NotNormalized);
    }
    Ok(())
}

/// `λ·a_n² − a_{2n−1}`.
pub fn phi(f: &PowerSeries, p: &ZalcmanParams) -> Result<Complex64> {
    check_readable(f, p)?;
    let a_n = f.coeff(p.n);
    Ok(a_n * a_n * p.lambda() - f.coeff(p.odd_index()))
}

/// `Re{λ·a_n² − a_{2n−1}}`.
pub fn re_phi(f: &PowerSeries, p: &ZalcmanParams) -> Result<f64> {
    phi(f, p).map(|v| v.re)
}

/// `|a_n² − a_{2n−1}| / (n−1)²`.
pub fn zalcman_ratio(f: &PowerSeries, n: usize) -> Result<f64> {
    let p = ZalcmanParams::new(1.0, n)?;
    let v = phi(f, &p)?;
    Ok(v.norm() / ((n - 1) * (n - 1)) as f64)
}

/// A unimodular `c` with `c^{2n−2} = conj(Φ)/|Φ|`, so that the rotated
/// function has `Re Φ(f_c) = |Φ(f)|`. Returns `1` when `Φ(f) = 0`.
pub fn phase_aligning_rotation(f: &PowerSeries, p: &ZalcmanParams) -> Result<Complex64> {
    let v = phi(f, p)?;
    if v.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let power = (2 * p.n - 2) as f64;
    Ok(Complex64::from_polar(1.0, -v.arg() / power))
}

/// Result of the truncated Hurwitz membership test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzCheck {
    pub member: bool,
    /// `1 − Σ_{k=2}^{N} k|a_k|`.
    pub slack: f64,
}

/// Tests `Σ_{k=2}^{N} k|a_k| ≤ 1` (within 1e−12) on the stored coefficients.
///
/// Only the truncation is inspected, so for an infinite series this is a
/// necessary condition at order `N`.
pub fn is_hurwitz(f: &PowerSeries) -> Result<HurwitzCheck> {
    if !f.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let weighted: f64 = f
        .coeffs()
        .iter()
        .enumerate()
        .skip(2)
        .map(|(k, a)| k as f64 * a.norm())
        .sum();
    Ok(HurwitzCheck {
        member: weighted <= 1.0 + 1e-12,
        slack: 1.0 - weighted,
    })
}
