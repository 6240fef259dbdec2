// Hurwitz class: the triangle maximum, two brute-force grids and the monomial extremals.

use zalcman::functionals::Lambda;
use zalcman::prelude::*;

pub fn run_example() -> Result<()> {
    let n = 3;
    for (num, den) in [(1, 2), (9, 5), (3, 1)] {
        let lambda = Lambda::ratio(num, den)?;
        let p = ZalcmanParams::with_lambda(lambda, n)?;
        let exact = triangle_max(&p);
        let grid = triangle_max_grid(&p, 400)?;
        let coeff = maximize_abs_phi_hurwitz(&p, 400)?;
        println!(
            "λ = {lambda}: closed form {:.10}, triangle grid {:.10}, coefficient grid {:.10}, maximizers {:?}",
            exact.value, grid.value, coeff.value, exact.argmax
        );
        let alpha = Complex64::from_polar(1.0, 0.4);
        for (branch, f) in hurwitz_extremal_series(&p, alpha, 2 * n - 1)? {
            let check = is_hurwitz(&f)?;
            println!(
                "    {branch:?} extremal: |Φ| = {:.10}, Σ k|a_k| slack = {:.1e}",
                phi(&f, &p)?.norm(),
                check.slack
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hurwitz_triangle example");
}
