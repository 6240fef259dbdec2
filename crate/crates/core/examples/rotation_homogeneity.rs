// Rotations scale the functional by `c^{2n−2}`; choosing `c` well makes it real and non-negative.

use zalcman::prelude::*;

pub fn run_example() -> Result<()> {
    let f = PowerSeries::normalized(&[
        Complex64::new(0.3, -0.2),
        Complex64::new(-0.1, 0.4),
        Complex64::new(0.05, 0.05),
        Complex64::new(0.2, 0.1),
    ]);
    let p = ZalcmanParams::new(1.5, 3)?;
    let c = Complex64::from_polar(1.0, 0.7);

    let before = phi(&f, &p)?;
    let after = phi(&f.rotate(c)?, &p)?;
    let predicted = c.powu(4) * before;
    println!("Φ(f)             = {before:.6}");
    println!("Φ(rotated f)     = {after:.6}");
    println!("c^4 · Φ(f)       = {predicted:.6}  (|Δ| = {:.1e})", (after - predicted).norm());

    let align = phase_aligning_rotation(&f, &p)?;
    let aligned = phi(&f.rotate(align)?, &p)?;
    println!("aligned Φ        = {aligned:.6}  (equals |Φ(f)| = {:.6})", before.norm());
    assert!((aligned.re - before.norm()).abs() < 1e-12 && aligned.im.abs() < 1e-12);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("rotation_homogeneity example");
}
