//! Truncated power series of normalized analytic functions on the unit disk.
//!
//! A [`PowerSeries`] of truncation order `N` stores the coefficients of
//! `z^0 .. z^N`. The named functions (Koebe, half-plane, the logarithmic
//! Noshiro-Warschawski map and the Hurwitz monomials) can be produced either
//! as truncated series or as closed-form [`FunctionEvaluator`]s, which is what
//! the maximum-modulus and Hayman-index estimators consume.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default absolute tolerance for coefficient comparisons.
pub const COEFF_TOL: f64 = 1e-12;

/// Tolerance on `|c| = 1` for rotations and Hurwitz phases.
pub const UNIMODULAR_TOL: f64 = 1e-12;

pub(crate) fn check_unimodular(c: Complex64) -> Result<()> {
    let modulus = c.norm();
    if (modulus - 1.0).abs() > UNIMODULAR_TOL {
        return Err(Error::NotUnimodular { modulus });
    }
    Ok(())
}

/// Coefficients `a_0, a_1, .., a_N` of a truncated Taylor expansion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Wraps a coefficient vector; index `k` holds the coefficient of `z^k`.
    /// At least `a_0` and `a_1` must be present.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        match coeffs.len() {
            0 => Err(Error::EmptySeries),
            1 => Err(Error::TruncationTooShort {
                required: 1,
                got: 0,
            }),
            _ => Ok(Self { coeffs }),
        }
    }

    /// `z + a_2 z^2 + .. + a_N z^N` from the tail `a_2 ..= a_N`.
    pub fn normalized(tail: &[Complex64]) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 2);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.push(Complex64::new(1.0, 0.0));
        coeffs.extend_from_slice(tail);
        Self { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn is_normalized(&self) -> bool {
        self.is_normalized_within(COEFF_TOL)
    }

    pub fn is_normalized_within(&self, tol: f64) -> bool {
        self.coeffs[0].norm() <= tol && (self.coeffs[1] - 1.0).norm() <= tol
    }

    /// Horner evaluation of the truncated polynomial inside the unit disk.
    pub fn eval_at(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() >= 1.0 {
            return Err(Error::OutsideDisk { re: z.re, im: z.im });
        }
        Ok(self.horner(z))
    }

    fn horner(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    /// Derivative of the truncated polynomial at `z` (no disk check).
    pub fn derivative_at(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, &a)| acc * z + a * k as f64)
    }

    /// The rotation `conj(c)·f(cz)`, which multiplies `a_k` by `c^{k−1}`.
    pub fn rotate(&self, c: Complex64) -> Result<Self> {
        check_unimodular(c)?;
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        let mut power = c.conj();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let out = a * power;
                power *= c;
                out
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// Pointwise affine combination `t·self + (1−t)·other`; the orders must agree.
    pub fn mix(&self, other: &Self, t: f64) -> Option<Self> {
        if self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a * t + b * (1.0 - t))
            .collect();
        Some(Self { coeffs })
    }

    /// Largest coefficientwise distance, or `None` when orders differ.
    pub fn max_abs_diff(&self, other: &Self) -> Option<f64> {
        if self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        Some(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other).is_some_and(|d| d <= tol)
    }
}

/// The named functions with closed-form coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum NamedFunction {
    /// `z`
    Identity,
    /// `z/(1−z)²`, with `a_k = k`.
    Koebe,
    /// `z/(1−z)`, with `a_k = 1`.
    HalfPlane,
    /// `2e^{−iθ} log(1/(1−e^{iθ}z)) − z`, whose derivative is
    /// `(1+e^{iθ}z)/(1−e^{iθ}z)`; `a_k = 2e^{i(k−1)θ}/k`.
    NwLog { theta: f64 },
    /// `z + α z^n / n` with `|α| = 1`.
    HurwitzMonomial { n: usize, alpha: Complex64 },
}

impl NamedFunction {
    fn validate(&self) -> Result<()> {
        if let Self::HurwitzMonomial { n, alpha } = *self {
            if n < 2 {
                return Err(Error::IndexTooSmall(n));
            }
            check_unimodular(alpha)?;
        }
        Ok(())
    }

    /// Truncated Taylor expansion up to `z^order`.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        self.validate()?;
        let required = match *self {
            Self::HurwitzMonomial { n, .. } => n,
            _ => 1,
        };
        if order < required {
            return Err(Error::TruncationTooShort {
                required,
                got: order,
            });
        }
        let tail: Vec<Complex64> = (2..=order)
            .map(|k| match *self {
                Self::Identity => Complex64::new(0.0, 0.0),
                Self::Koebe => Complex64::new(k as f64, 0.0),
                Self::HalfPlane => Complex64::new(1.0, 0.0),
                Self::NwLog { theta } => {
                    Complex64::from_polar(2.0 / k as f64, (k - 1) as f64 * theta)
                }
                Self::HurwitzMonomial { n, alpha } => {
                    if k == n {
                        alpha / n as f64
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                }
            })
            .collect();
        Ok(PowerSeries::normalized(&tail))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Identity => "identity",
            Self::Koebe => "koebe",
            Self::HalfPlane => "halfplane",
            Self::NwLog { .. } => "nw-log",
            Self::HurwitzMonomial { .. } => "hurwitz-monomial",
        }
    }
}

/// Shorthand for [`NamedFunction::series`].
pub fn named_series(kind: NamedFunction, order: usize) -> Result<PowerSeries> {
    kind.series(order)
}

/// A map from the open unit disk to the plane.
pub trait FunctionEvaluator {
    fn eval(&self, z: Complex64) -> Complex64;
}

impl<F: Fn(Complex64) -> Complex64> FunctionEvaluator for F {
    fn eval(&self, z: Complex64) -> Complex64 {
        self(z)
    }
}

/// Closed-form evaluation, independent of any truncation.
impl FunctionEvaluator for NamedFunction {
    fn eval(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match *self {
            Self::Identity => z,
            Self::Koebe => z / ((one - z) * (one - z)),
            Self::HalfPlane => z / (one - z),
            Self::NwLog { theta } => {
                let rot = Complex64::from_polar(1.0, theta);
                // principal branch; Re(1 − e^{iθ}z) > 0 inside the disk
                rot.conj() * 2.0 * (one / (one - rot * z)).ln() - z
            }
            Self::HurwitzMonomial { n, alpha } => z + alpha * z.powu(n as u32) / n as f64,
        }
    }
}

/// Horner evaluation of the truncated polynomial.
impl FunctionEvaluator for PowerSeries {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.horner(z)
    }
}

/// `max_j |f(r e^{2πij/K})|` over `K` equally spaced points.
pub fn max_modulus<F: FunctionEvaluator + ?Sized>(f: &F, r: f64, samples: usize) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::RadiusOutOfRange(r));
    }
    if samples < 8 {
        return Err(Error::TooFewSamples {
            min: 8,
            got: samples,
        });
    }
    Ok((0..samples)
        .map(|j| {
            let theta = TAU * j as f64 / samples as f64;
            f.eval(Complex64::from_polar(r, theta)).norm()
        })
        .fold(0.0, f64::max))
}

/// Output of [`hayman_index_estimate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HaymanEstimate {
    /// `(1−r)²·M(r)` at the last radius of the schedule.
    pub estimate: f64,
    /// `(r, (1−r)²·M(r))` for every radius of the schedule.
    pub sequence: Vec<(f64, f64)>,
}

/// Smallest admissible final radius for [`hayman_index_estimate`].
pub const HAYMAN_MIN_LAST_RADIUS: f64 = 0.999;

/// Evaluates `(1−r)²·M_∞(r, f)` along an increasing radius schedule and
/// reports the value at the last radius. No extrapolation is attempted.
pub fn hayman_index_estimate<F: FunctionEvaluator + ?Sized>(
    f: &F,
    radii: &[f64],
    samples: usize,
) -> Result<HaymanEstimate> {
    let Some(&last) = radii.last() else {
        return Err(Error::InvalidRadii("schedule is empty".into()));
    };
    if radii.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidRadii("radii must be strictly increasing".into()));
    }
    if last < HAYMAN_MIN_LAST_RADIUS {
        return Err(Error::InvalidRadii(format!(
            "last radius {last} is below {HAYMAN_MIN_LAST_RADIUS}"
        )));
    }
    let sequence = radii
        .iter()
        .map(|&r| Ok((r, (1.0 - r).powi(2) * max_modulus(f, r, samples)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(HaymanEstimate {
        estimate: sequence.last().map(|s| s.1).unwrap_or_default(),
        sequence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_3;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // Oracle: Taylor coefficients of num/den by polynomial long division.
    fn long_division(num: &[f64], den: &[f64], order: usize) -> Vec<f64> {
        let mut rem: Vec<f64> = num.to_vec();
        rem.resize(order + den.len() + 1, 0.0);
        let mut out = vec![0.0; order + 1];
        for k in 0..=order {
            let q = rem[k] / den[0];
            out[k] = q;
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= q * d;
            }
        }
        out
    }

    // Oracle: a_k = (1/(2π r^k)) ∮ f(re^{iθ}) e^{−ikθ} dθ by the trapezoid rule.
    fn cauchy_coefficients(f: &dyn FunctionEvaluator, order: usize) -> Vec<Complex64> {
        let r = 0.5;
        let m = 512;
        (0..=order)
            .map(|k| {
                let sum: Complex64 = (0..m)
                    .map(|j| {
                        let t = TAU * j as f64 / m as f64;
                        f.eval(Complex64::from_polar(r, t)) * Complex64::from_polar(1.0, -(k as f64) * t)
                    })
                    .sum();
                sum / (m as f64 * r.powi(k as i32))
            })
            .collect()
    }

    #[test]
    fn koebe_matches_long_division() {
        // z / (1 − 2z + z²)
        let expected = long_division(&[0.0, 1.0], &[1.0, -2.0, 1.0], 5);
        assert_eq!(expected, vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
        let s = NamedFunction::Koebe.series(5).unwrap();
        let got: Vec<f64> = s.coeffs().iter().map(|a| a.re).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn identity_and_hurwitz_monomial() {
        let id = NamedFunction::Identity.series(3).unwrap();
        assert_eq!(id.coeffs(), &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]);
        let p2 = NamedFunction::HurwitzMonomial { n: 2, alpha: c(1., 0.) }
            .series(2)
            .unwrap();
        assert_eq!(p2.coeffs(), &[c(0., 0.), c(1., 0.), c(0.5, 0.)]);
    }

    #[test]
    fn nw_log_at_zero_angle() {
        let s = NamedFunction::NwLog { theta: 0.0 }.series(3).unwrap();
        let expected = [c(0., 0.), c(1., 0.), c(1., 0.), c(2.0 / 3.0, 0.)];
        for (a, b) in s.coeffs().iter().zip(&expected) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn closed_forms_agree_with_coefficient_formulas() {
        let kinds = [
            NamedFunction::Identity,
            NamedFunction::Koebe,
            NamedFunction::HalfPlane,
            NamedFunction::NwLog { theta: 0.0 },
            NamedFunction::NwLog { theta: 2.1 },
            NamedFunction::HurwitzMonomial { n: 4, alpha: Complex64::from_polar(1.0, FRAC_PI_3) },
        ];
        for kind in kinds {
            let oracle = cauchy_coefficients(&kind, 12);
            let s = kind.series(12).unwrap();
            for (k, (a, b)) in s.coeffs().iter().zip(&oracle).enumerate() {
                assert!((a - b).norm() < 1e-9, "{kind:?} a_{k}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn named_series_rejects_bad_input() {
        assert!(NamedFunction::Koebe.series(0).is_err());
        let bad_alpha = NamedFunction::HurwitzMonomial { n: 3, alpha: c(1.1, 0.) };
        assert!(matches!(bad_alpha.series(5), Err(Error::NotUnimodular { .. })));
        let bad_n = NamedFunction::HurwitzMonomial { n: 1, alpha: c(1., 0.) };
        assert_eq!(bad_n.series(5), Err(Error::IndexTooSmall(1)));
        let short = NamedFunction::HurwitzMonomial { n: 6, alpha: c(1., 0.) };
        assert!(matches!(short.series(5), Err(Error::TruncationTooShort { .. })));
    }

    #[test]
    fn rotation_examples() {
        let k = NamedFunction::Koebe.series(6).unwrap();
        assert_eq!(k.rotate(c(1., 0.)).unwrap(), k);
        let flipped = k.rotate(c(-1., 0.)).unwrap();
        for j in 1..=6 {
            let sign = if (j - 1) % 2 == 0 { 1.0 } else { -1.0 };
            assert!((flipped.coeff(j) - c(sign * j as f64, 0.)).norm() < 1e-15);
        }
        let h = NamedFunction::HalfPlane.series(3).unwrap().rotate(c(0., 1.)).unwrap();
        assert!((h.coeff(2) - c(0., 1.)).norm() < 1e-15);
        assert!((h.coeff(3) - c(-1., 0.)).norm() < 1e-15);
        assert!(h.is_normalized());
        assert!(matches!(k.rotate(c(0.5, 0.)), Err(Error::NotUnimodular { .. })));
    }

    #[test]
    fn eval_examples() {
        let id = NamedFunction::Identity.series(3).unwrap();
        assert_eq!(id.eval_at(c(0.3, 0.)).unwrap(), c(0.3, 0.));
        assert_eq!(id.eval_at(c(0., 0.)).unwrap(), c(0., 0.));
        let k = NamedFunction::Koebe.series(200).unwrap();
        assert!((k.eval_at(c(0.5, 0.)).unwrap() - c(2.0, 0.)).norm() < 1e-10);
        assert!(k.eval_at(c(1.0, 0.)).is_err());
        assert!(k.eval_at(c(0.8, 0.7)).is_err());
    }

    #[test]
    fn derivative_of_truncated_koebe() {
        // (z/(1−z)²)' = (1+z)/(1−z)³
        let k = NamedFunction::Koebe.series(300).unwrap();
        let z = c(0.3, -0.2);
        let exact = (1.0 + z) / (c(1., 0.) - z).powu(3);
        assert!((k.derivative_at(z) - exact).norm() < 1e-12);
    }

    #[test]
    fn max_modulus_examples() {
        let id = NamedFunction::Identity;
        assert!((max_modulus(&id, 0.5, 64).unwrap() - 0.5).abs() < 1e-15);
        assert!((max_modulus(&NamedFunction::Koebe, 0.5, 64).unwrap() - 2.0).abs() < 1e-14);
        assert!((max_modulus(&NamedFunction::HalfPlane, 0.5, 64).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(max_modulus(&id, 1.0, 64), Err(Error::RadiusOutOfRange(1.0)));
        assert_eq!(max_modulus(&id, 0.0, 64), Err(Error::RadiusOutOfRange(0.0)));
        assert!(matches!(max_modulus(&id, 0.5, 4), Err(Error::TooFewSamples { .. })));
    }

    #[test]
    fn max_modulus_monotone_in_nested_samples_and_radius() {
        let nw = NamedFunction::NwLog { theta: 0.7 };
        let evaluators: [&dyn FunctionEvaluator; 4] =
            [&NamedFunction::Identity, &NamedFunction::Koebe, &NamedFunction::HalfPlane, &nw];
        for f in evaluators {
            let mut prev = 0.0;
            for k in [9, 18, 36, 72] {
                let m = max_modulus(f, 0.7, k).unwrap();
                assert!(m >= prev);
                prev = m;
            }
            let mut prev = 0.0;
            for r in [0.1, 0.3, 0.5, 0.7, 0.9, 0.99] {
                let m = max_modulus(f, r, 64).unwrap();
                assert!(m >= prev);
                prev = m;
            }
        }
    }

    #[test]
    fn hayman_examples() {
        let radii = [0.9, 0.99, 0.999, 0.9999];
        let k = hayman_index_estimate(&NamedFunction::Koebe, &radii, 64).unwrap();
        assert!((k.estimate - 0.9999).abs() < 1e-9);
        assert_eq!(k.sequence.len(), 4);
        let h = hayman_index_estimate(&NamedFunction::HalfPlane, &radii, 64).unwrap();
        assert!((h.estimate - 0.9999 * 1e-4).abs() < 1e-12);
        let id = hayman_index_estimate(&NamedFunction::Identity, &radii, 64).unwrap();
        assert!(id.estimate < 1e-7);
        for (kind, est) in [(NamedFunction::Koebe, &k), (NamedFunction::HalfPlane, &h)] {
            assert!((0.0..=1.0 + 1e-6).contains(&est.estimate), "{kind:?}");
        }
    }

    #[test]
    fn hayman_rejects_bad_schedules() {
        let f = NamedFunction::Koebe;
        assert!(matches!(hayman_index_estimate(&f, &[], 64), Err(Error::InvalidRadii(_))));
        assert!(matches!(
            hayman_index_estimate(&f, &[0.9, 0.9, 0.9999], 64),
            Err(Error::InvalidRadii(_))
        ));
        assert!(matches!(hayman_index_estimate(&f, &[0.5, 0.9], 64), Err(Error::InvalidRadii(_))));
    }

    #[test]
    fn closures_are_evaluators() {
        let square = |z: Complex64| z * z;
        assert!((max_modulus(&square, 0.5, 16).unwrap() - 0.25).abs() < 1e-15);
        let s = NamedFunction::HalfPlane.series(4).unwrap();
        assert!((FunctionEvaluator::eval(&s, c(0., 0.)) - c(0., 0.)).norm() < 1e-15);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn normalized_series() -> impl Strategy<Value = PowerSeries> {
            proptest::collection::vec((-2.0..2.0f64, -2.0..2.0f64), 1..12).prop_map(|v| {
                let tail: Vec<Complex64> = v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
                PowerSeries::normalized(&tail)
            })
        }

        proptest! {
            #[test]
            fn rotation_composes(f in normalized_series(), a in 0.0..TAU, b in 0.0..TAU) {
                let (ca, cb) = (Complex64::from_polar(1.0, a), Complex64::from_polar(1.0, b));
                let twice = f.rotate(ca).unwrap().rotate(cb).unwrap();
                let once = f.rotate(ca * cb).unwrap();
                prop_assert!(twice.approx_eq(&once, 1e-14 * 16.0));
            }

            #[test]
            fn rotation_conjugates_evaluation(
                f in normalized_series(), t in 0.0..TAU, r in 0.0..0.9f64, arg in 0.0..TAU,
            ) {
                let c = Complex64::from_polar(1.0, t);
                let z = Complex64::from_polar(r, arg);
                let lhs = f.rotate(c).unwrap().eval_at(z).unwrap();
                let rhs = c.conj() * f.eval_at(c * z).unwrap();
                prop_assert!((lhs - rhs).norm() < 1e-12);
            }

            #[test]
            fn named_series_are_normalized(order in 2usize..40, theta in 0.0..TAU, n in 2usize..6) {
                let kinds = [
                    NamedFunction::Identity,
                    NamedFunction::Koebe,
                    NamedFunction::HalfPlane,
                    NamedFunction::NwLog { theta },
                    NamedFunction::HurwitzMonomial { n, alpha: Complex64::from_polar(1.0, theta) },
                ];
                for kind in kinds {
                    if let Ok(s) = kind.series(order) {
                        prop_assert!(s.is_normalized());
                        prop_assert_eq!(s.truncation_order(), order);
                    }
                }
            }
        }
    }
}
