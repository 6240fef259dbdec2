//! Closed-form bounds and numerical maximization of the Zalcman functional.
//!
//! Two independent routes reproduce each bound:
//!
//! * for the convex-hull and Noshiro-Warschawski classes, `Re Φ` is a
//!   quadratic function of three trigonometric moments of the representing
//!   measure. [`maximize_re_phi`] maximizes it over probability vectors on a
//!   uniform grid of `K = 4(n−1)·grid_multiplier` angles by multi-start
//!   projected-gradient ascent. Since `K` is a multiple of `4(n−1)` the
//!   extremal angles `(2k+1)π/(2n−2)` are grid nodes and the bound is attained
//!   exactly on the grid;
//! * for the Hurwitz class the pair `(a_n, a_{2n−1})` ranges over
//!   `n|z| + (2n−1)|w| ≤ 1`, and the problem reduces to maximizing
//!   `λu² + v` over a triangle ([`triangle_max`], with grid oracles
//!   [`triangle_max_grid`] and [`maximize_abs_phi_hurwitz`]).

use std::cmp::Ordering;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::ZalcmanParams;
use crate::measures::{Atom, DiscreteCircleMeasure, FunctionClass, MASS_TOL};

/// Armijo sufficient-increase constant.
pub const ARMIJO: f64 = 1e-4;

/// Values within this distance of the best are treated as ties, both for
/// grid maximizers and for choosing among optimizer starts.
pub const TIE_TOL: f64 = 1e-12;

/// Upper end of the λ range where the class bound is proven, as `(p, q)`
/// meaning `λ ≤ p/q`; `None` means every `λ > 0`.
pub fn lambda_upper_limit(class: FunctionClass) -> Option<(u64, u64)> {
    match class {
        FunctionClass::HullConvex => Some((2, 1)),
        FunctionClass::NoshiroWarschawski => Some((4, 3)),
        FunctionClass::Hurwitz => None,
    }
}

pub fn lambda_in_range(class: FunctionClass, p: &ZalcmanParams) -> bool {
    lambda_upper_limit(class).is_none_or(|(num, den)| p.lambda.at_most(num, den))
}

fn range_error(class: FunctionClass, p: &ZalcmanParams) -> Error {
    let interval = match lambda_upper_limit(class) {
        Some((num, 1)) => format!("0 < lambda <= {num}"),
        Some((num, den)) => format!("0 < lambda <= {num}/{den}"),
        None => "lambda > 0".to_string(),
    };
    Error::LambdaOutOfRange {
        class,
        lambda: p.lambda(),
        interval,
    }
}

/// The sharp bound on `|λa_n² − a_{2n−1}|` over `class`:
/// `1`, `2/(2n−1)` or `max{λ/n², 1/(2n−1)}`.
pub fn theoretical_bound(class: FunctionClass, p: &ZalcmanParams) -> Result<f64> {
    if !lambda_in_range(class, p) {
        return Err(range_error(class, p));
    }
    let odd = p.odd_index() as f64;
    Ok(match class {
        FunctionClass::HullConvex => 1.0,
        FunctionClass::NoshiroWarschawski => 2.0 / odd,
        FunctionClass::Hurwitz => {
            let n = p.n as f64;
            (p.lambda() / (n * n)).max(1.0 / odd)
        }
    })
}

/// A maximizer reported by one of the optimizers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Argmax {
    Measure { atoms: Vec<Atom> },
    Point { u: f64, v: f64 },
    CoefficientPair { a_n: Complex64, a_odd: Complex64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizationResult {
    pub value: f64,
    /// One maximizer, or every grid point tied with the best value.
    pub argmax: Vec<Argmax>,
    pub iterations: usize,
    pub converged: bool,
    pub starts_used: usize,
}

/// Maximum of `λu² + v` on `{u, v ≥ 0, nu + (2n−1)v ≤ 1}` with its maximizers.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleMax {
    pub value: f64,
    pub argmax: Vec<(f64, f64)>,
}

pub fn triangle_max(p: &ZalcmanParams) -> TriangleMax {
    let n = p.n as f64;
    let odd = p.odd_index() as f64;
    let linear = (0.0, 1.0 / odd);
    let quadratic = (1.0 / n, 0.0);
    let (value, argmax) = match p.cmp_hurwitz_threshold() {
        Ordering::Less => (1.0 / odd, vec![linear]),
        Ordering::Greater => (p.lambda() / (n * n), vec![quadratic]),
        Ordering::Equal => (1.0 / odd, vec![linear, quadratic]),
    };
    TriangleMax { value, argmax }
}

fn check_resolution(resolution: usize) -> Result<()> {
    if resolution < 10 {
        return Err(Error::InvalidResolution(resolution));
    }
    Ok(())
}

/// Collects the best value and every candidate tied with it.
struct TieTracker<T> {
    best: f64,
    ties: Vec<T>,
}

impl<T> TieTracker<T> {
    fn new() -> Self {
        Self {
            best: f64::NEG_INFINITY,
            ties: Vec::new(),
        }
    }

    fn offer(&mut self, value: f64, make: impl FnOnce() -> T) {
        if value > self.best + TIE_TOL {
            self.best = value;
            self.ties.clear();
            self.ties.push(make());
        } else if value >= self.best - TIE_TOL {
            self.best = self.best.max(value);
            self.ties.push(make());
        }
    }

    /// Drops entries that fell out of the tie band after a later small improvement.
    fn finish(self, value_of: impl Fn(&T) -> f64) -> (f64, Vec<T>) {
        let best = self.best;
        let ties = self
            .ties
            .into_iter()
            .filter(|t| value_of(t) >= best - TIE_TOL)
            .collect();
        (best, ties)
    }
}

/// Brute-force `max λu² + v` over the lattice `u = i/(n·R)`, `v = j/((2n−1)·R)`,
/// `i + j ≤ R`, which contains the three vertices of the triangle.
pub fn triangle_max_grid(p: &ZalcmanParams, resolution: usize) -> Result<OptimizationResult> {
    check_resolution(resolution)?;
    let lambda = p.lambda();
    let du = 1.0 / (p.n * resolution) as f64;
    let dv = 1.0 / (p.odd_index() * resolution) as f64;
    let eval = |u: f64, v: f64| lambda * u * u + v;
    let mut tracker = TieTracker::new();
    for i in 0..=resolution {
        let u = i as f64 * du;
        for j in 0..=resolution - i {
            let v = j as f64 * dv;
            tracker.offer(eval(u, v), || (u, v));
        }
    }
    let (value, ties) = tracker.finish(|&(u, v)| eval(u, v));
    Ok(OptimizationResult {
        value,
        argmax: ties.into_iter().map(|(u, v)| Argmax::Point { u, v }).collect(),
        iterations: (resolution + 1) * (resolution + 2) / 2,
        converged: true,
        starts_used: 1,
    })
}

/// Phase used by [`maximize_abs_phi_hurwitz`]; any angle works since `|Φ|`
/// is rotation invariant.
const HURWITZ_PHASE: f64 = 0.3;

/// Grid oracle for the Hurwitz bound in the coefficient plane.
///
/// Samples `|a_n| = ρ = i/(n·R)` and `|a_{2n−1}| = σ = (1 − nρ)·j/((2n−1)·R)`
/// for `0 ≤ i, j ≤ R`, builds `a_n = ρe^{iφ}`, `a_{2n−1} = −σe^{2iφ}` (the
/// phases that align `λa_n²` with `−a_{2n−1}`) and maximizes `|λa_n² − a_{2n−1}|`
/// in complex arithmetic.
pub fn maximize_abs_phi_hurwitz(p: &ZalcmanParams, resolution: usize) -> Result<OptimizationResult> {
    check_resolution(resolution)?;
    let lambda = p.lambda();
    let n = p.n as f64;
    let odd = p.odd_index() as f64;
    let unit = Complex64::from_polar(1.0, HURWITZ_PHASE);
    let eval = |a: Complex64, w: Complex64| (a * a * lambda - w).norm();
    let mut tracker = TieTracker::new();
    for i in 0..=resolution {
        let rho = i as f64 / (n * resolution as f64);
        let room = (1.0 - n * rho).max(0.0);
        for j in 0..=resolution {
            let sigma = room * j as f64 / (odd * resolution as f64);
            let a_n = unit * rho;
            let a_odd = -(unit * unit) * sigma;
            tracker.offer(eval(a_n, a_odd), || (a_n, a_odd));
        }
    }
    let (value, ties) = tracker.finish(|&(a, w)| eval(a, w));
    Ok(OptimizationResult {
        value,
        argmax: ties
            .into_iter()
            .map(|(a_n, a_odd)| Argmax::CoefficientPair { a_n, a_odd })
            .collect(),
        iterations: (resolution + 1) * (resolution + 1),
        converged: true,
        starts_used: 1,
    })
}

/// Settings for [`maximize_re_phi`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    /// Grid size is `K = 4(n−1)·grid_multiplier`.
    pub grid_multiplier: usize,
    pub starts: usize,
    /// Stop when the projected-gradient step has at most this Euclidean norm.
    pub step_tolerance: f64,
    pub max_iterations: usize,
    pub seed: u64,
    /// Allow λ outside the range where the class bound is proven.
    pub exploratory: bool,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            grid_multiplier: 4,
            starts: 16,
            step_tolerance: 1e-10,
            max_iterations: 10_000,
            seed: 0,
            exploratory: false,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_multiplier == 0 {
            return Err(Error::InvalidConfig("grid_multiplier must be at least 1".into()));
        }
        if self.starts == 0 {
            return Err(Error::InvalidConfig("starts must be at least 1".into()));
        }
        if self.step_tolerance.is_nan() || self.step_tolerance <= 0.0 {
            return Err(Error::InvalidConfig("step_tolerance must be positive".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig("max_iterations must be at least 1".into()));
        }
        Ok(())
    }

    pub fn grid_size(&self, n: usize) -> usize {
        4 * (n - 1) * self.grid_multiplier
    }
}

/// `Re Φ` as a function of a mass vector on the grid `θ_j = 2πj/K`:
/// `A(c² − s²) − B·d` with `c = Σ m_j cos((n−1)θ_j)`, `s = Σ m_j sin((n−1)θ_j)`
/// and `d = Σ m_j cos(2(n−1)θ_j)`.
///
/// `(A, B) = (λ, 1)` on the convex hull and `(4λ/n², 2/(2n−1))` on the
/// Noshiro-Warschawski class.
#[derive(Debug, Clone)]
pub struct MomentObjective {
    quad: f64,
    lin: f64,
    cos1: Vec<f64>,
    sin1: Vec<f64>,
    cos2: Vec<f64>,
}

impl MomentObjective {
    pub fn new(class: FunctionClass, p: &ZalcmanParams, grid_size: usize) -> Result<Self> {
        let n = p.n as f64;
        let (quad, lin) = match class {
            FunctionClass::HullConvex => (p.lambda(), 1.0),
            FunctionClass::NoshiroWarschawski => (4.0 * p.lambda() / (n * n), 2.0 / p.odd_index() as f64),
            FunctionClass::Hurwitz => return Err(Error::NoMeasureRepresentation(class)),
        };
        let k = (p.n - 1) as f64;
        let angles = (0..grid_size).map(|j| TAU * j as f64 / grid_size as f64);
        Ok(Self {
            quad,
            lin,
            cos1: angles.clone().map(|t| (k * t).cos()).collect(),
            sin1: angles.clone().map(|t| (k * t).sin()).collect(),
            cos2: angles.map(|t| (2.0 * k * t).cos()).collect(),
        })
    }

    pub fn grid_size(&self) -> usize {
        self.cos1.len()
    }

    pub fn angle(&self, j: usize) -> f64 {
        TAU * j as f64 / self.grid_size() as f64
    }

    /// `(c, s, d)`.
    pub fn moments(&self, m: &[f64]) -> (f64, f64, f64) {
        m.iter().enumerate().fold((0.0, 0.0, 0.0), |(c, s, d), (j, &w)| {
            (c + w * self.cos1[j], s + w * self.sin1[j], d + w * self.cos2[j])
        })
    }

    pub fn value(&self, m: &[f64]) -> f64 {
        let (c, s, d) = self.moments(m);
        self.quad * (c * c - s * s) - self.lin * d
    }

    pub fn gradient(&self, m: &[f64], out: &mut [f64]) {
        let (c, s, _) = self.moments(m);
        for (j, g) in out.iter_mut().enumerate() {
            *g = 2.0 * self.quad * (c * self.cos1[j] - s * self.sin1[j]) - self.lin * self.cos2[j];
        }
    }
}

/// Euclidean projection onto the probability simplex (sort-and-threshold).
pub fn project_onto_simplex(y: &[f64]) -> Vec<f64> {
    let mut sorted = y.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut tau = 0.0;
    for (i, &v) in sorted.iter().enumerate() {
        cumulative += v;
        let candidate = (cumulative - 1.0) / (i + 1) as f64;
        if v - candidate > 0.0 {
            tau = candidate;
        }
    }
    y.iter().map(|&v| (v - tau).max(0.0)).collect()
}

/// Trace of one projected-gradient ascent.
#[derive(Debug, Clone)]
pub struct AscentRun {
    pub masses: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Objective after each accepted step, starting with the initial value.
    pub history: Vec<f64>,
    /// Worst `max(−min m_j, |Σ m_j − 1|)` over all iterates.
    pub max_infeasibility: f64,
}

fn infeasibility(m: &[f64]) -> f64 {
    let min = m.iter().copied().fold(f64::INFINITY, f64::min);
    let sum: f64 = m.iter().sum();
    (-min).max(0.0).max((sum - 1.0).abs())
}

fn step_norm(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Projected-gradient ascent on the simplex with Armijo backtracking
/// (halving). Stops once the unit-step projected-gradient displacement
/// `‖P(m + ∇f) − m‖` is at most `tol`.
pub fn projected_gradient_ascent(
    objective: &MomentObjective,
    start: &[f64],
    tol: f64,
    max_iterations: usize,
) -> AscentRun {
    let len = objective.grid_size();
    let mut x = project_onto_simplex(start);
    let mut fx = objective.value(&x);
    let mut grad = vec![0.0; len];
    let mut history = vec![fx];
    let mut max_infeasibility = infeasibility(&x);
    let mut step = 1.0;
    let mut iterations = 0;
    let mut converged = false;
    let shifted = |x: &[f64], g: &[f64], t: f64| -> Vec<f64> {
        project_onto_simplex(&x.iter().zip(g).map(|(a, b)| a + t * b).collect::<Vec<_>>())
    };

    while iterations < max_iterations {
        objective.gradient(&x, &mut grad);
        if step_norm(&shifted(&x, &grad, 1.0), &x) <= tol {
            converged = true;
            break;
        }
        let mut accepted = None;
        while step > 1e-20 {
            let y = shifted(&x, &grad, step);
            let fy = objective.value(&y);
            let predicted: f64 = grad.iter().zip(y.iter().zip(&x)).map(|(g, (a, b))| g * (a - b)).sum();
            if fy >= fx + ARMIJO * predicted {
                accepted = Some((y, fy));
                break;
            }
            step *= 0.5;
        }
        let Some((y, fy)) = accepted else { break };
        iterations += 1;
        max_infeasibility = max_infeasibility.max(infeasibility(&y));
        x = y;
        fx = fy;
        history.push(fx);
        step = (step * 2.0).min(1e6);
    }

    AscentRun {
        masses: x,
        value: fx,
        iterations,
        converged,
        history,
        max_infeasibility,
    }
}

/// Start `i`: 0 is the uniform measure, 1 the uniform extremal assignment
/// placed on its grid nodes, the rest flat-Dirichlet draws from a
/// per-start generator seeded with `seed + i`.
fn start_vector(i: usize, n: usize, cfg: &OptimizerConfig) -> Vec<f64> {
    let k = cfg.grid_size(n);
    match i {
        0 => vec![1.0 / k as f64; k],
        1 => {
            // θ = (2j+1)π/(2n−2) sits at node (2j+1)·grid_multiplier
            let mut m = vec![0.0; k];
            let atoms = 2 * n - 2;
            for j in 1..=atoms {
                m[((2 * j + 1) * cfg.grid_multiplier) % k] += 1.0 / atoms as f64;
            }
            m
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(i as u64));
            let draws: Vec<f64> = (0..k).map(|_| rng.sample::<f64, _>(Exp1)).collect();
            let total: f64 = draws.iter().sum();
            draws.into_iter().map(|d| d / total).collect()
        }
    }
}

/// Multi-start maximization of `Re Φ` over probability measures on the
/// grid of `K = 4(n−1)·grid_multiplier` angles. Starts run in parallel; the
/// best value wins. Among starts within [`TIE_TOL`] of it, a converged one is
/// preferred, then the lowest index. Atoms lighter than [`MASS_TOL`] are dropped
/// from the reported maximizer.
pub fn maximize_re_phi(
    class: FunctionClass,
    p: &ZalcmanParams,
    cfg: &OptimizerConfig,
) -> Result<OptimizationResult> {
    cfg.validate()?;
    if !class.has_measure_representation() {
        return Err(Error::NoMeasureRepresentation(class));
    }
    if !cfg.exploratory && !lambda_in_range(class, p) {
        return Err(range_error(class, p));
    }
    let objective = MomentObjective::new(class, p, cfg.grid_size(p.n))?;
    let runs: Vec<AscentRun> = (0..cfg.starts)
        .into_par_iter()
        .map(|i| {
            let start = start_vector(i, p.n, cfg);
            projected_gradient_ascent(&objective, &start, cfg.step_tolerance, cfg.max_iterations)
        })
        .collect();
    // values within TIE_TOL are rounding-level ties: prefer a converged run, then the lowest index
    let top = runs.iter().map(|r| r.value).fold(f64::NEG_INFINITY, f64::max);
    let tied = || runs.iter().filter(|r| r.value >= top - TIE_TOL);
    let best = tied().find(|r| r.converged).or_else(|| tied().next()).expect("at least one start");

    let atoms = best
        .masses
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > MASS_TOL)
        .map(|(j, &m)| Atom::new(objective.angle(j), m))
        .collect();
    let measure = DiscreteCircleMeasure::renormalized(atoms)?.canonicalize();
    Ok(OptimizationResult {
        value: best.value,
        argmax: vec![Argmax::Measure {
            atoms: measure.atoms().to_vec(),
        }],
        iterations: best.iterations,
        converged: best.converged,
        starts_used: cfg.starts,
    })
}
