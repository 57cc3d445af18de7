//! At q = 1 the twisted coproducts stay non-cocommutative for odd n on
//! half-odd spins, and collapse to the classical one otherwise.

use qhopf::{cocommutativity_residual, CoproductFamily, HalfInt, QPoint};

fn main() -> qhopf::Result<()> {
    let spins: Vec<HalfInt> = (1..=4).map(HalfInt::from_twice).collect();
    for n in 0..=3 {
        let f = CoproductFamily::modified(QPoint::one(), n);
        print!("n = {n}:");
        for &j1 in &spins {
            for &j2 in &spins {
                print!("  {j1}⊗{j2}={:.1}", cocommutativity_residual(f, j1, j2)?);
            }
        }
        println!();
    }
    Ok(())
}
