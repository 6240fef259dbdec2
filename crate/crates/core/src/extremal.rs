//! Extremal functions for the three classes and a sharpness check.
//!
//! For the convex-hull and Noshiro-Warschawski classes the extremal measures
//! live on the `2n−2` angles where `cos((n−1)θ) = 0`, with the masses on odd
//! and even indices each summing to 1/2 (so that `∫ sin((n−1)θ) dμ = 0`).
//! For the Hurwitz class the extremals are the binomials
//! `z + α z^{2n−1}/(2n−1)` and `z + α z^n/n`.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::Exp1;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::{phi, ZalcmanParams};
use crate::measures::{reduce_angle, series_from_measure, Atom, DiscreteCircleMeasure, FunctionClass};
use crate::optimizer::theoretical_bound;
use crate::series::{check_unimodular, NamedFunction, PowerSeries};

/// Tolerance on each half-sum of an extremal mass assignment.
pub const PARITY_TOL: f64 = 1e-12;

/// Default tolerance for [`verify_sharpness`].
pub const SHARPNESS_TOL: f64 = 1e-12;

/// Masses `m_1 .. m_{2n−2}` on the extremal angles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawAssignment")]
pub struct ExtremalMassAssignment {
    n: usize,
    masses: Vec<f64>,
}

#[derive(Deserialize)]
struct RawAssignment {
    n: usize,
    masses: Vec<f64>,
}

impl TryFrom<RawAssignment> for ExtremalMassAssignment {
    type Error = Error;

    fn try_from(raw: RawAssignment) -> Result<Self> {
        Self::new(raw.n, raw.masses)
    }
}

impl ExtremalMassAssignment {
    /// `masses[i]` is `m_{i+1}`. Requires `2n−2` entries in `[0, 1]` whose
    /// odd-index and even-index sums are both 1/2.
    pub fn new(n: usize, masses: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::IndexTooSmall(n));
        }
        if masses.len() != 2 * n - 2 {
            return Err(Error::InvalidAssignment(format!(
                "expected {} masses for n = {n}, got {}",
                2 * n - 2,
                masses.len()
            )));
        }
        if let Some(m) = masses.iter().find(|m| !(0.0..=1.0).contains(*m)) {
            return Err(Error::InvalidAssignment(format!("mass {m} is outside [0, 1]")));
        }
        let (odd_sum, even_sum) = parity_sums(&masses);
        if (odd_sum - 0.5).abs() > PARITY_TOL || (even_sum - 0.5).abs() > PARITY_TOL {
            return Err(Error::ParityViolation { odd_sum, even_sum });
        }
        Ok(Self { n, masses })
    }

    /// Equal masses `1/(2n−2)` on every extremal angle.
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::IndexTooSmall(n));
        }
        Self::new(n, vec![1.0 / (2 * n - 2) as f64; 2 * n - 2])
    }

    /// A random admissible assignment: two independent flat-Dirichlet vectors
    /// of length `n−1`, each scaled to total 1/2, interleaved as odd/even masses.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        if n < 2 {
            return Err(Error::IndexTooSmall(n));
        }
        let half = |rng: &mut R| -> Vec<f64> {
            let draws: Vec<f64> = (0..n - 1).map(|_| rng.sample::<f64, _>(Exp1)).collect();
            let total: f64 = draws.iter().sum();
            draws.into_iter().map(|d| 0.5 * d / total).collect()
        };
        let odd = half(rng);
        let even = half(rng);
        let masses = odd.into_iter().zip(even).flat_map(|(o, e)| [o, e]).collect();
        Self::new(n, masses)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }
}

/// `(Σ_{k odd} m_k, Σ_{k even} m_k)` with 1-based `k`.
fn parity_sums(masses: &[f64]) -> (f64, f64) {
    masses.iter().enumerate().fold((0.0, 0.0), |(odd, even), (i, &m)| {
        if i % 2 == 0 {
            (odd + m, even)
        } else {
            (odd, even + m)
        }
    })
}

/// `θ_k = (2k+1)π/(2n−2)` for `k = 1 ..= 2n−2`, reduced into `[0, 2π)`.
pub fn extremal_angles(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::IndexTooSmall(n));
    }
    let denom = (2 * n - 2) as f64;
    Ok((1..=2 * n - 2)
        .map(|k| reduce_angle((2 * k + 1) as f64 * PI / denom))
        .collect())
}

pub fn extremal_measure(assignment: &ExtremalMassAssignment) -> Result<DiscreteCircleMeasure> {
    let angles = extremal_angles(assignment.n)?;
    DiscreteCircleMeasure::new(
        angles
            .into_iter()
            .zip(&assignment.masses)
            .map(|(a, &m)| Atom::new(a, m))
            .collect(),
    )
}

/// Extremal function of the convex-hull or Noshiro-Warschawski class,
/// truncated at `order ≥ 2n−1`.
pub fn extremal_series(
    class: FunctionClass,
    assignment: &ExtremalMassAssignment,
    order: usize,
) -> Result<PowerSeries> {
    let required = 2 * assignment.n - 1;
    if order < required {
        return Err(Error::TruncationTooShort {
            required,
            got: order,
        });
    }
    series_from_measure(class, &extremal_measure(assignment)?, order)
}

/// Which Hurwitz extremal binomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HurwitzBranch {
    /// `z + α z^{2n−1}/(2n−1)`, extremal for `λ ≤ n²/(2n−1)`.
    Linear,
    /// `z + α z^n/n`, extremal for `λ ≥ n²/(2n−1)`.
    Quadratic,
}

impl HurwitzBranch {
    pub fn function(&self, n: usize, alpha: Complex64) -> NamedFunction {
        let degree = match self {
            Self::Linear => 2 * n - 1,
            Self::Quadratic => n,
        };
        NamedFunction::HurwitzMonomial { n: degree, alpha }
    }
}

/// The branches of the Hurwitz extremal for `p`: one of them, or both when
/// `λ = n²/(2n−1)`.
pub fn hurwitz_branches(p: &ZalcmanParams) -> Vec<HurwitzBranch> {
    match p.cmp_hurwitz_threshold() {
        Ordering::Less => vec![HurwitzBranch::Linear],
        Ordering::Greater => vec![HurwitzBranch::Quadratic],
        Ordering::Equal => vec![HurwitzBranch::Linear, HurwitzBranch::Quadratic],
    }
}

/// Hurwitz extremal functions truncated at `order ≥ 2n−1`.
pub fn hurwitz_extremal_series(
    p: &ZalcmanParams,
    alpha: Complex64,
    order: usize,
) -> Result<Vec<(HurwitzBranch, PowerSeries)>> {
    check_unimodular(alpha)?;
    if order < p.odd_index() {
        return Err(Error::TruncationTooShort {
            required: p.odd_index(),
            got: order,
        });
    }
    hurwitz_branches(p)
        .into_iter()
        .map(|b| Ok((b, b.function(p.n, alpha).series(order)?)))
        .collect()
}

/// What certifies a bound: an extremal mass assignment (convex hull,
/// Noshiro-Warschawski) or the phase α of a Hurwitz binomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Witness {
    Masses(ExtremalMassAssignment),
    HurwitzPhase { alpha: Complex64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessReport {
    /// `|Φ|` at the witness; with two Hurwitz branches, the one farther from the bound.
    pub achieved: f64,
    pub bound: f64,
    pub ok: bool,
}

/// Builds the witness function(s) and compares `|Φ|` with the bound.
pub fn verify_sharpness(
    class: FunctionClass,
    p: &ZalcmanParams,
    witness: &Witness,
    tol: f64,
) -> Result<SharpnessReport> {
    let bound = theoretical_bound(class, p)?;
    let order = p.odd_index();
    let values: Vec<f64> = match (class, witness) {
        (FunctionClass::Hurwitz, Witness::HurwitzPhase { alpha }) => hurwitz_extremal_series(p, *alpha, order)?
            .iter()
            .map(|(_, s)| phi(s, p).map(|v| v.norm()))
            .collect::<Result<_>>()?,
        (FunctionClass::HullConvex | FunctionClass::NoshiroWarschawski, Witness::Masses(a)) => {
            if a.n != p.n {
                return Err(Error::InvalidAssignment(format!(
                    "assignment is for n = {}, functional uses n = {}",
                    a.n, p.n
                )));
            }
            vec![phi(&extremal_series(class, a, order)?, p)?.norm()]
        }
        _ => return Err(Error::WitnessMismatch(class)),
    };
    let achieved = values
        .iter()
        .copied()
        .max_by(|a, b| (a - bound).abs().total_cmp(&(b - bound).abs()))
        .unwrap_or(f64::NAN);
    Ok(SharpnessReport {
        achieved,
        bound,
        ok: values.iter().all(|v| (v - bound).abs() <= tol),
    })
}
