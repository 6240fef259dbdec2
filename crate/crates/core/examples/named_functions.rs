// Closed-form test functions: coefficients, evaluation and growth near the boundary.

use zalcman::prelude::*;

pub fn run_example() -> Result<()> {
    let z = Complex64::new(0.5, 0.25);
    for f in [
        NamedFunction::Identity,
        NamedFunction::Koebe,
        NamedFunction::HalfPlane,
        NamedFunction::NwLog { theta: 1.0 },
        NamedFunction::HurwitzMonomial { n: 3, alpha: Complex64::new(0.0, 1.0) },
    ] {
        let s = f.series(200)?;
        let a: Vec<String> = (2..=5).map(|k| format!("{:.4}", s.coeff(k))).collect();
        // the truncated series and the closed form agree well inside the disk
        let gap = (s.eval_at(z)? - f.eval(z)).norm();
        println!("{:<16} a_2..a_5 = [{}]  |series - closed form| at z = {z}: {gap:.1e}", f.name(), a.join(", "));
        assert!(gap < 1e-12);
    }

    let koebe = NamedFunction::Koebe;
    for r in [0.9, 0.99, 0.999] {
        println!("koebe: M({r}) = {:.3}", max_modulus(&koebe, r, 256)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("named_functions example");
}
