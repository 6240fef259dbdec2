// The class `Re f' > 0`: bound `2/(2n−1)`, attained by the same extremal measures.

use zalcman::functionals::Lambda;
use zalcman::prelude::*;

pub fn run_example() -> Result<()> {
    let class = FunctionClass::NoshiroWarschawski;
    let cfg = OptimizerConfig { starts: 8, ..Default::default() };
    for n in 2..=5 {
        let p = ZalcmanParams::with_lambda(Lambda::ratio(4, 3)?, n)?;
        let res = maximize_re_phi(class, &p, &cfg)?;
        println!("λ = 4/3, n = {n}: max Re Φ ≈ {:.10}, bound {:.10}", res.value, theoretical_bound(class, &p)?);
    }

    let a = ExtremalMassAssignment::uniform(3)?;
    let f = extremal_series(class, &a, 2000)?;
    let worst = (0..64)
        .map(|j| f.derivative_at(Complex64::from_polar(0.99, j as f64 * std::f64::consts::TAU / 64.0)).re)
        .fold(f64::INFINITY, f64::min);
    println!("uniform extremal for n = 3: min Re f' on |z| = 0.99 is {worst:.3e}");

    // λ beyond 4/3 is outside the range where the bound holds
    let p = ZalcmanParams::new(2.0, 3)?;
    match theoretical_bound(class, &p) {
        Err(e) => println!("λ = 2: {e}"),
        Ok(b) => println!("λ = 2: unexpected bound {b}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("noshiro_warschawski example");
}
