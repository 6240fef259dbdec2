// Numerical maximization over the convex-hull class, and the measures that attain the bound.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zalcman::prelude::*;

pub fn run_example() -> Result<()> {
    let class = FunctionClass::HullConvex;
    let cfg = OptimizerConfig::default();
    for (lambda, n) in [(0.5, 2), (1.0, 3), (2.0, 4)] {
        let p = ZalcmanParams::new(lambda, n)?;
        let res = maximize_re_phi(class, &p, &cfg)?;
        let bound = theoretical_bound(class, &p)?;
        println!(
            "λ = {lambda}, n = {n}: max Re Φ ≈ {:.10} (bound {bound}), {} iterations, converged = {}",
            res.value, res.iterations, res.converged
        );
        if let Some(Argmax::Measure { atoms }) = res.argmax.first() {
            for a in atoms {
                println!("    atom at θ = {:.6} with mass {:.6}", a.angle, a.mass);
            }
        }
    }

    // any split of mass 1/2 over odd and 1/2 over even extremal angles attains the bound
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let p = ZalcmanParams::new(1.25, 3)?;
    println!("extremal angles for n = 3: {:.4?}", extremal_angles(3)?);
    for _ in 0..3 {
        let a = ExtremalMassAssignment::random(3, &mut rng)?;
        let report = verify_sharpness(class, &p, &Witness::Masses(a.clone()), 1e-12)?;
        println!("masses {:.3?} -> Φ = {:.15} ok = {}", a.masses(), report.achieved, report.ok);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hull_convex_sharpness example");
}
