//! Generalized Zalcman coefficient functional `λ·a_n² − a_{2n−1}`.
//!
//! The crate covers three classes of normalized analytic functions on the
//! unit disk:
//!
//! * the closed convex hull of convex maps, where `|λa_n² − a_{2n−1}| ≤ 1`
//!   for `0 < λ ≤ 2`;
//! * the Noshiro-Warschawski class (`Re f′ > 0`), where the bound is
//!   `2/(2n−1)` for `0 < λ ≤ 4/3`;
//! * the Hurwitz class (`Σ k|a_k| ≤ 1`), where the bound is
//!   `max{λ/n², 1/(2n−1)}` for every `λ > 0`.
//!
//! Each bound comes with explicit extremal functions ([`extremal`]) and an
//! independent numerical route ([`optimizer`]) that maximizes the
//! functional over discrete probability measures on the circle or over a
//! grid of the coefficient region.
//!
//! ```
//! use zalcman::prelude::*;
//!
//! let koebe = NamedFunction::Koebe.series(9).unwrap();
//! let p = ZalcmanParams::new(1.0, 3).unwrap();
//! assert_eq!(phi(&koebe, &p).unwrap().re, 4.0);
//! ```
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod error;
pub mod extremal;
pub mod functionals;
pub mod measures;
pub mod optimizer;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::extremal::{
        extremal_angles, extremal_measure, extremal_series, hurwitz_extremal_series,
        verify_sharpness, ExtremalMassAssignment, HurwitzBranch, SharpnessReport, Witness,
    };
    pub use crate::functionals::{
        is_hurwitz, phase_aligning_rotation, phi, re_phi, zalcman_ratio, HurwitzCheck,
        ZalcmanParams,
    };
    pub use crate::measures::{series_from_measure, Atom, DiscreteCircleMeasure, FunctionClass};
    pub use crate::optimizer::{
        maximize_abs_phi_hurwitz, maximize_re_phi, theoretical_bound, triangle_max,
        triangle_max_grid, Argmax, OptimizationResult, OptimizerConfig,
    };
    pub use crate::series::{
        hayman_index_estimate, max_modulus, FunctionEvaluator, NamedFunction, PowerSeries,
    };
    pub use num_complex::Complex64;
}
