//! q-numbers across the regimes that matter: generic real q, the unit
//! circle, and the two degenerate points q = ±1.

use qhopf::{casimir_scalar, q_number, HalfInt, QPoint};

fn main() -> qhopf::Result<()> {
    let points = [
        ("q = 2", QPoint::real(2.0)?),
        ("q = e^{0.4i}", QPoint::new(1.0, 0.4)?),
        ("q = 1", QPoint::one()),
        ("q = -1", QPoint::minus_one()),
    ];
    for (label, q) in points {
        print!("{label:<14}");
        for x in [1.0, 1.5, 2.0, 3.0] {
            match q_number(q, x) {
                Ok(v) => print!("  [{x}] = {:>8.4}{:+.4}i", v.re, v.im),
                Err(e) => print!("  [{x}] {e}"),
            }
        }
        println!();
    }
    let j = HalfInt::ONE;
    println!(
        "[j][j+1] for j = {j} at q = 2: {}",
        casimir_scalar(QPoint::real(2.0)?, j)?
    );
    Ok(())
}
