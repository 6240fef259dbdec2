//! Discrete probability measures on the circle and the coefficient maps they
//! induce.
//!
//! Members of the closed convex hull of convex maps are averages
//! `∫ z/(1−e^{iθ}z) dμ(θ)`, so `a_n = ∫ e^{i(n−1)θ} dμ`. Members of the
//! Noshiro-Warschawski class have `f′ = ∫ (1+e^{iθ}z)/(1−e^{iθ}z) dμ(θ)`, so
//! `a_n = (2/n) ∫ e^{i(n−1)θ} dμ`. The Hurwitz class has no such
//! representation and is rejected by [`series_from_measure`].

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// Tolerance on `Σ m_k = 1`.
pub const MASS_TOL: f64 = 1e-12;

/// Atoms closer than this (on the circle) are merged by [`DiscreteCircleMeasure::canonicalize`].
pub const ANGLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FunctionClass {
    /// Closed convex hull of the convex univalent maps.
    #[serde(rename = "hull-convex")]
    HullConvex,
    /// Normalized maps with `Re f′ > 0`.
    #[serde(rename = "nw")]
    NoshiroWarschawski,
    /// Normalized maps with `Σ_{k≥2} k|a_k| ≤ 1`.
    #[serde(rename = "hurwitz")]
    Hurwitz,
}

impl FunctionClass {
    pub const ALL: [FunctionClass; 3] = [Self::HullConvex, Self::NoshiroWarschawski, Self::Hurwitz];

    pub fn tag(&self) -> &'static str {
        match self {
            Self::HullConvex => "hull-convex",
            Self::NoshiroWarschawski => "nw",
            Self::Hurwitz => "hurwitz",
        }
    }

    /// Whether the class is parameterized by circle measures.
    pub fn has_measure_representation(&self) -> bool {
        !matches!(self, Self::Hurwitz)
    }
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FunctionClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hull-convex" | "hull" | "convex" => Ok(Self::HullConvex),
            "nw" | "noshiro-warschawski" => Ok(Self::NoshiroWarschawski),
            "hurwitz" => Ok(Self::Hurwitz),
            other => Err(format!(
                "unknown class '{other}' (expected hull-convex, nw or hurwitz)"
            )),
        }
    }
}

/// A point mass `mass·δ_angle`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub angle: f64,
    pub mass: f64,
}

impl Atom {
    pub fn new(angle: f64, mass: f64) -> Self {
        Self { angle, mass }
    }
}

/// Reduces an angle into `[0, 2π)`.
pub fn reduce_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// A finitely supported probability measure on the circle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscreteCircleMeasure {
    atoms: Vec<Atom>,
}

impl DiscreteCircleMeasure {
    /// Validates masses (nonnegative, total 1 within [`MASS_TOL`]) and
    /// reduces angles modulo 2π. Atoms are kept in the given order.
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidMeasure("no atoms".into()));
        }
        let mut total = 0.0;
        for (i, a) in atoms.iter().enumerate() {
            if !a.angle.is_finite() || !a.mass.is_finite() {
                return Err(Error::InvalidMeasure(format!("atom {i} is not finite")));
            }
            if a.mass < 0.0 {
                return Err(Error::InvalidMeasure(format!(
                    "atom {i} has negative mass {}",
                    a.mass
                )));
            }
            total += a.mass;
        }
        if (total - 1.0).abs() > MASS_TOL {
            return Err(Error::InvalidMeasure(format!("total mass {total} is not 1")));
        }
        Ok(Self {
            atoms: atoms
                .into_iter()
                .map(|a| Atom::new(reduce_angle(a.angle), a.mass))
                .collect(),
        })
    }

    pub fn point_mass(angle: f64) -> Self {
        Self {
            atoms: vec![Atom::new(reduce_angle(angle), 1.0)],
        }
    }

    /// Clamps negative masses to zero and rescales to total mass 1; for
    /// optimizer output that has accrued round-off.
    pub fn renormalized(atoms: Vec<Atom>) -> Result<Self> {
        let clamped: Vec<Atom> = atoms
            .into_iter()
            .map(|a| Atom::new(a.angle, a.mass.max(0.0)))
            .collect();
        let total: f64 = clamped.iter().map(|a| a.mass).sum();
        if !(total > 0.0 && total.is_finite()) {
            return Err(Error::InvalidMeasure("no positive mass to renormalize".into()));
        }
        Self::new(
            clamped
                .into_iter()
                .map(|a| Atom::new(a.angle, a.mass / total))
                .collect(),
        )
    }

    /// Masses on the uniform grid `θ_j = 2πj/K`, `K = masses.len()`.
    pub fn from_grid(masses: &[f64]) -> Result<Self> {
        let k = masses.len() as f64;
        Self::new(
            masses
                .iter()
                .enumerate()
                .map(|(j, &m)| Atom::new(TAU * j as f64 / k, m))
                .collect(),
        )
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Sorts atoms by angle, merges atoms within [`ANGLE_TOL`] of each other
    /// (including across 0 ≡ 2π) and drops zero masses.
    pub fn canonicalize(&self) -> Self {
        let mut sorted: Vec<Atom> = self.atoms.iter().copied().filter(|a| a.mass > 0.0).collect();
        sorted.sort_by(|a, b| a.angle.total_cmp(&b.angle));
        let mut merged: Vec<Atom> = Vec::with_capacity(sorted.len());
        for a in sorted {
            match merged.last_mut() {
                Some(last) if a.angle - last.angle <= ANGLE_TOL => last.mass += a.mass,
                _ => merged.push(a),
            }
        }
        if merged.len() > 1 {
            let last = merged[merged.len() - 1];
            if merged[0].angle + TAU - last.angle <= ANGLE_TOL {
                merged[0].mass += last.mass;
                merged.pop();
            }
        }
        Self { atoms: merged }
    }

    /// `∫ e^{imθ} dμ(θ) = Σ_k m_k e^{imθ_k}`.
    pub fn moment(&self, m: u32) -> Complex64 {
        self.atoms
            .iter()
            .map(|a| Complex64::from_polar(a.mass, m as f64 * a.angle))
            .sum()
    }

    /// The convex combination `t·self + (1−t)·other`.
    pub fn mix(&self, other: &Self, t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::InvalidMeasure(format!("mixing weight {t} not in [0, 1]")));
        }
        let atoms = self
            .atoms
            .iter()
            .map(|a| Atom::new(a.angle, t * a.mass))
            .chain(other.atoms.iter().map(|a| Atom::new(a.angle, (1.0 - t) * a.mass)))
            .collect();
        Self::new(atoms)
    }
}

impl<'de> Deserialize<'de> for DiscreteCircleMeasure {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            atoms: Vec<Atom>,
        }
        let raw = Raw::deserialize(d)?;
        Self::new(raw.atoms).map_err(serde::de::Error::custom)
    }
}

/// `∫ e^{imθ} dμ`; see [`DiscreteCircleMeasure::moment`].
pub fn moment(mu: &DiscreteCircleMeasure, m: u32) -> Complex64 {
    mu.moment(m)
}

/// Scale applied to the `(n−1)`-th moment to get `a_n`.
pub fn coefficient_scale(class: FunctionClass, n: usize) -> Result<f64> {
    match class {
        FunctionClass::HullConvex => Ok(1.0),
        FunctionClass::NoshiroWarschawski => Ok(2.0 / n as f64),
        FunctionClass::Hurwitz => Err(Error::NoMeasureRepresentation(class)),
    }
}

/// The truncated series of the function represented by `mu` in `class`.
pub fn series_from_measure(
    class: FunctionClass,
    mu: &DiscreteCircleMeasure,
    order: usize,
) -> Result<PowerSeries> {
    coefficient_scale(class, 2)?;
    if order < 2 {
        return Err(Error::TruncationTooShort {
            required: 2,
            got: order,
        });
    }
    let tail: Vec<Complex64> = (2..=order)
        .map(|n| Ok(mu.moment((n - 1) as u32) * coefficient_scale(class, n)?))
        .collect::<Result<_>>()?;
    Ok(PowerSeries::normalized(&tail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn two_point() -> DiscreteCircleMeasure {
        DiscreteCircleMeasure::new(vec![Atom::new(FRAC_PI_2, 0.5), Atom::new(3.0 * FRAC_PI_2, 0.5)])
            .unwrap()
    }

    #[test]
    fn moment_examples() {
        let theta0 = 1.234;
        let mu = DiscreteCircleMeasure::point_mass(theta0);
        for m in 0..6 {
            let expected = Complex64::from_polar(1.0, m as f64 * theta0);
            assert!((mu.moment(m) - expected).norm() < 1e-15);
        }
        assert_eq!(two_point().moment(0), Complex64::new(1.0, 0.0));
        assert!(two_point().moment(1).norm() < 1e-15);
        assert!((two_point().moment(2) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn invalid_measures_are_rejected() {
        assert!(DiscreteCircleMeasure::new(vec![]).is_err());
        assert!(DiscreteCircleMeasure::new(vec![Atom::new(0.0, 0.7)]).is_err());
        assert!(DiscreteCircleMeasure::new(vec![Atom::new(0.0, 1.5), Atom::new(1.0, -0.5)]).is_err());
        assert!(DiscreteCircleMeasure::new(vec![Atom::new(f64::NAN, 1.0)]).is_err());
        assert!(DiscreteCircleMeasure::new(vec![Atom::new(0.0, 1.0 + 1e-13)]).is_ok());
    }

    #[test]
    fn angles_are_reduced() {
        let mu = DiscreteCircleMeasure::new(vec![Atom::new(5.0 * FRAC_PI_2, 0.5), Atom::new(-FRAC_PI_2, 0.5)])
            .unwrap();
        assert!((mu.atoms()[0].angle - FRAC_PI_2).abs() < 1e-15);
        assert!((mu.atoms()[1].angle - 3.0 * FRAC_PI_2).abs() < 1e-15);
        assert!(mu.atoms().iter().all(|a| (0.0..TAU).contains(&a.angle)));
    }

    #[test]
    fn canonicalize_merges_duplicates() {
        let mu = DiscreteCircleMeasure::new(vec![
            Atom::new(1.0, 0.25),
            Atom::new(0.0, 0.25),
            Atom::new(1.0 + 1e-13, 0.25),
            Atom::new(TAU - 1e-13, 0.25),
            Atom::new(2.0, 0.0),
        ])
        .unwrap();
        let c = mu.canonicalize();
        assert_eq!(c.atoms().len(), 2);
        assert!((c.atoms()[0].mass - 0.5).abs() < 1e-15);
        assert!((c.atoms()[1].mass - 0.5).abs() < 1e-15);
        for m in 0..5 {
            assert!((c.moment(m) - mu.moment(m)).norm() < 1e-12);
        }
    }

    #[test]
    fn renormalize_repairs_roundoff() {
        let mu = DiscreteCircleMeasure::renormalized(vec![
            Atom::new(0.0, 0.5 + 1e-9),
            Atom::new(1.0, 0.5),
            Atom::new(2.0, -1e-17),
        ])
        .unwrap();
        let total: f64 = mu.atoms().iter().map(|a| a.mass).sum();
        assert!((total - 1.0).abs() < 1e-15);
        assert_eq!(mu.atoms()[2].mass, 0.0);
    }

    #[test]
    fn series_from_measure_examples() {
        let hp = series_from_measure(FunctionClass::HullConvex, &DiscreteCircleMeasure::point_mass(0.0), 4)
            .unwrap();
        for k in 1..=4 {
            assert!((hp.coeff(k) - 1.0).norm() < 1e-15);
        }
        let nw = series_from_measure(
            FunctionClass::NoshiroWarschawski,
            &DiscreteCircleMeasure::point_mass(0.0),
            3,
        )
        .unwrap();
        assert!((nw.coeff(2) - 1.0).norm() < 1e-15);
        assert!((nw.coeff(3) - 2.0 / 3.0).norm() < 1e-15);
        let s = series_from_measure(FunctionClass::HullConvex, &two_point(), 3).unwrap();
        assert!(s.coeff(2).norm() < 1e-15);
        assert!((s.coeff(3) + 1.0).norm() < 1e-15);
        assert_eq!(
            series_from_measure(FunctionClass::Hurwitz, &two_point(), 3),
            Err(Error::NoMeasureRepresentation(FunctionClass::Hurwitz))
        );
        assert!(series_from_measure(FunctionClass::HullConvex, &two_point(), 1).is_err());
    }

    #[test]
    fn nw_point_mass_matches_named_log_function() {
        use crate::series::NamedFunction;
        let theta = 2.5;
        let from_measure = series_from_measure(
            FunctionClass::NoshiroWarschawski,
            &DiscreteCircleMeasure::point_mass(theta),
            20,
        )
        .unwrap();
        let named = NamedFunction::NwLog { theta }.series(20).unwrap();
        assert!(from_measure.approx_eq(&named, 1e-14));
    }

    #[test]
    fn class_tags_round_trip() {
        for c in FunctionClass::ALL {
            assert_eq!(c.tag().parse::<FunctionClass>().unwrap(), c);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.tag()));
        }
        assert!("convexish".parse::<FunctionClass>().is_err());
    }

    #[test]
    fn measure_json_validates() {
        let mu = two_point();
        let json = serde_json::to_string(&mu).unwrap();
        let back: DiscreteCircleMeasure = serde_json::from_str(&json).unwrap();
        assert_eq!(back, mu);
        let bad = r#"{"atoms":[{"angle":0.0,"mass":0.3}]}"#;
        assert!(serde_json::from_str::<DiscreteCircleMeasure>(bad).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        pub(super) fn measure() -> impl Strategy<Value = DiscreteCircleMeasure> {
            proptest::collection::vec((0.0..TAU, 0.01..1.0f64), 1..10).prop_map(|v| {
                let atoms = v.into_iter().map(|(a, m)| Atom::new(a, m)).collect();
                DiscreteCircleMeasure::renormalized(atoms).unwrap()
            })
        }

        proptest! {
            #[test]
            fn moments_bounded(mu in measure(), m in 0u32..40) {
                prop_assert!(mu.moment(m).norm() <= 1.0 + 1e-12);
                prop_assert!((mu.moment(0) - 1.0).norm() <= 1e-12);
            }

            #[test]
            fn class_coefficient_bounds(mu in measure()) {
                let hull = series_from_measure(FunctionClass::HullConvex, &mu, 30).unwrap();
                let nw = series_from_measure(FunctionClass::NoshiroWarschawski, &mu, 30).unwrap();
                for k in 2..=30 {
                    prop_assert!(hull.coeff(k).norm() <= 1.0 + 1e-12);
                    prop_assert!(nw.coeff(k).norm() <= 2.0 / k as f64 + 1e-12);
                }
            }

            #[test]
            fn coefficient_map_is_affine(a in measure(), b in measure(), t in 0.0..=1.0f64) {
                for class in [FunctionClass::HullConvex, FunctionClass::NoshiroWarschawski] {
                    let mixed = series_from_measure(class, &a.mix(&b, t).unwrap(), 12).unwrap();
                    let sa = series_from_measure(class, &a, 12).unwrap();
                    let sb = series_from_measure(class, &b, 12).unwrap();
                    prop_assert!(mixed.approx_eq(&sa.mix(&sb, t).unwrap(), 1e-12));
                }
            }

            #[test]
            fn nw_derivative_has_positive_real_part(mu in measure(), r in 0.0..0.9f64, arg in 0.0..TAU) {
                let s = series_from_measure(FunctionClass::NoshiroWarschawski, &mu, 400).unwrap();
                let z = Complex64::from_polar(r, arg);
                // truncation tail is at most 2 r^400 / (1 − r) ≈ 1e-17
                prop_assert!(s.derivative_at(z).re > -1e-10);
            }
        }
    }
}
