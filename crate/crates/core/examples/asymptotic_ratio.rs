// The normalized ratio `|a_n² − a_{2n−1}| / (n−1)²` and the boundary growth `(1−r)² M(r)`.

use zalcman::prelude::*;

pub fn run_example() -> Result<()> {
    let koebe = NamedFunction::Koebe.series(99)?;
    let halfplane = NamedFunction::HalfPlane.series(99)?;
    for n in [2, 10, 50] {
        println!(
            "n = {n:>2}: koebe ratio {}, halfplane ratio {}",
            zalcman_ratio(&koebe, n)?,
            zalcman_ratio(&halfplane, n)?
        );
    }

    let radii = [0.9, 0.99, 0.999, 0.9999];
    for f in [NamedFunction::Koebe, NamedFunction::HalfPlane] {
        let est = hayman_index_estimate(&f, &radii, 256)?;
        for (r, v) in &est.sequence {
            println!("{:<10} r = {r:<7} (1−r)² M(r) = {v:.6e}", f.name());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("asymptotic_ratio example");
}
